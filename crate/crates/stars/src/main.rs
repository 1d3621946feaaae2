use std::path::PathBuf;
use std::process::ExitCode;

use anyhow::{anyhow, bail, Context, Result};
use clap::{Args, Parser, Subcommand, ValueEnum};

use stars::count::{self, diff_tables, star_table_capped, Engine, EngineError};
use stars::family::FamilySpec;
use stars::flip::{find_escape_paths, verify_injection, FlipError};
use stars::graph::Graph;
use stars::hk::{hk_verdict, HkError};
use stars::{check, io, render};

/// Exact star sizes of k-independent sets: generation, counting, escape
/// path flips, and HK verdicts.
#[derive(Parser)]
#[command(name = "stars", version, about)]
struct Cli {
    /// Worker threads for parallel sections (0 = all cores). Ignored in
    /// builds without the `parallel` feature. Output never depends on it.
    #[arg(long, global = true, default_value_t = 0)]
    jobs: usize,
    #[command(subcommand)]
    cmd: Cmd,
}

/// Graph source: exactly one of a family spec or an edge-list file.
#[derive(Args)]
#[group(required = true, multiple = false)]
struct Source {
    /// Compact family spec, e.g. `tm:3`, `sunlet:5`, `caterpillar:4:2,0,1,3`,
    /// `lobster:3:12,,2`, `spider:2,2,2`, `path:6`, `gsunlet:3:1,2,3`, or a
    /// seeded random kind: `rtree:12`, `rcaterpillar:20`, `rlobster:20`,
    /// `rgsunlet:18` (random kinds draw their parameters from --seed).
    #[arg(long)]
    spec: Option<String>,
    /// Edge-list file: header `n <count>`, one `u v` pair per line,
    /// `#` comments allowed.
    #[arg(long)]
    input: Option<PathBuf>,
}

impl Source {
    fn load(&self, seed: Option<u64>) -> Result<(String, Graph)> {
        match (&self.spec, &self.input) {
            (Some(text), None) => {
                let mut spec = FamilySpec::parse(text)?;
                spec.seed = seed;
                let g = spec.generate()?;
                Ok((spec.label(), g))
            }
            (None, Some(path)) => {
                let g = io::read_graph_file(path)
                    .with_context(|| format!("reading {}", path.display()))?;
                Ok((path.display().to_string(), g))
            }
            _ => unreachable!("clap enforces exactly one source"),
        }
    }
}

#[derive(ValueEnum, Clone, Copy)]
enum EngineArg {
    Oracle,
    #[value(name = "treedp")]
    TreeDp,
    Branching,
    Auto,
}

impl From<EngineArg> for Engine {
    fn from(e: EngineArg) -> Engine {
        match e {
            EngineArg::Oracle => Engine::Oracle,
            EngineArg::TreeDp => Engine::TreeDp,
            EngineArg::Branching => Engine::Branching,
            EngineArg::Auto => Engine::Auto,
        }
    }
}

#[derive(ValueEnum, Clone, Copy)]
enum FormatArg {
    Csv,
    Json,
}

#[derive(Subcommand)]
enum Cmd {
    /// Emit the canonical edge list of a generated or loaded graph.
    Gen {
        #[command(flatten)]
        source: Source,
        /// Seed for random family kinds.
        #[arg(long)]
        seed: Option<u64>,
    },
    /// Exact star-size table: |I^k(v)| for every vertex and k.
    Count {
        #[command(flatten)]
        source: Source,
        #[arg(long)]
        seed: Option<u64>,
        #[arg(long, value_enum, default_value_t = EngineArg::Auto)]
        engine: EngineArg,
        /// Truncate the table at this size (>= 1).
        #[arg(long)]
        kmax: Option<usize>,
        #[arg(long, value_enum, default_value_t = FormatArg::Csv)]
        format: FormatArg,
        /// Also run every other applicable engine and diff the tables.
        #[arg(long)]
        check: bool,
    },
    /// Escape paths from a vertex and the flip injection report (JSON).
    Flip {
        #[command(flatten)]
        source: Source,
        #[arg(long)]
        seed: Option<u64>,
        /// Start vertex.
        #[arg(long)]
        start: usize,
        /// Verify the injection at this size only (default: all k).
        #[arg(long)]
        k: Option<usize>,
    },
    /// HK verdict: which star centers attain the per-k maximum.
    Hk {
        #[command(flatten)]
        source: Source,
        #[arg(long)]
        seed: Option<u64>,
        #[arg(long, value_enum, default_value_t = EngineArg::Auto)]
        engine: EngineArg,
        #[arg(long)]
        kmax: Option<usize>,
        #[arg(long, value_enum, default_value_t = FormatArg::Csv)]
        format: FormatArg,
    },
    /// Run the built-in verification suites (engine diffs + theorem checks).
    Check {
        /// Comma-separated suite ids (1..=8); default runs all.
        #[arg(long, value_delimiter = ',')]
        only: Option<Vec<usize>>,
    },
}

/// Exit codes: 0 ok, 1 usage or input error, 2 proved-theorem violation or
/// engine disagreement (either one signals a bug, never a valid finding).
enum Failure {
    Usage(anyhow::Error),
    Violation(String),
}

impl From<anyhow::Error> for Failure {
    fn from(e: anyhow::Error) -> Self {
        Failure::Usage(e)
    }
}

fn main() -> ExitCode {
    let cli = match Cli::try_parse() {
        Ok(cli) => cli,
        Err(e) => {
            let code = if e.use_stderr() { 1 } else { 0 };
            let _ = e.print();
            return ExitCode::from(code);
        }
    };
    stars::exec::configure_jobs(cli.jobs);
    match run(cli.cmd) {
        Ok(()) => ExitCode::SUCCESS,
        Err(Failure::Usage(e)) => {
            eprintln!("error: {e:#}");
            ExitCode::from(1)
        }
        Err(Failure::Violation(msg)) => {
            eprintln!("violation: {msg}");
            ExitCode::from(2)
        }
    }
}

fn validated_kmax(kmax: Option<usize>) -> Result<Option<usize>> {
    if kmax == Some(0) {
        bail!("--kmax must be at least 1");
    }
    Ok(kmax)
}

fn run(cmd: Cmd) -> Result<(), Failure> {
    match cmd {
        Cmd::Gen { source, seed } => {
            let (_, g) = source.load(seed)?;
            print!("{}", io::render_edge_list(&g));
            Ok(())
        }
        Cmd::Count {
            source,
            seed,
            engine,
            kmax,
            format,
            check,
        } => {
            let (label, g) = source.load(seed)?;
            let kmax = validated_kmax(kmax)?;
            let engine: Engine = engine.into();
            let table = star_table_capped(&g, engine, kmax).map_err(engine_failure)?;
            if check {
                run_engine_check(&g, engine, kmax, &table)?;
            }
            match format {
                FormatArg::Csv => print!("{}", render::star_table_csv(&table)),
                FormatArg::Json => {
                    print!("{}", render::star_table_json(&label, engine.name(), &table))
                }
            }
            Ok(())
        }
        Cmd::Flip {
            source,
            seed,
            start,
            k,
        } => {
            let (label, g) = source.load(seed)?;
            if start >= g.vertex_count() {
                return Err(anyhow!(
                    "start vertex {start} out of range for {} vertices",
                    g.vertex_count()
                )
                .into());
            }
            if k == Some(0) {
                return Err(anyhow!("--k must be at least 1").into());
            }
            let paths = find_escape_paths(&g, start);
            let alpha = count::star_table(&g, Engine::Branching)
                .map_err(engine_failure)?
                .alpha();
            let ks: Vec<usize> = match k {
                Some(k) => vec![k],
                None => (1..=alpha).collect(),
            };
            let mut injections = Vec::new();
            for path in &paths {
                for &k in &ks {
                    let report = verify_injection(&g, path, k).map_err(flip_failure)?;
                    injections.push(report);
                }
            }
            print!("{}", render::flip_json(&label, start, &paths, &injections));
            Ok(())
        }
        Cmd::Hk {
            source,
            seed,
            engine,
            kmax,
            format,
        } => {
            let (label, g) = source.load(seed)?;
            let kmax = validated_kmax(kmax)?;
            let report = hk_verdict(&g, kmax, engine.into()).map_err(hk_failure)?;
            match format {
                FormatArg::Csv => print!("{}", render::hk_csv(&report)),
                FormatArg::Json => {
                    print!("{}", render::hk_json(&label, g.vertex_count(), &report))
                }
            }
            if !report.center_violations.is_empty() {
                let v = &report.center_violations[0];
                return Err(Failure::Violation(format!(
                    "lobster center classification violated at k={} by vertex {} ({})",
                    v.k, v.vertex, v.role
                )));
            }
            Ok(())
        }
        Cmd::Check { only } => {
            let outcomes = match only {
                Some(ids) => {
                    if ids.iter().any(|id| !(1..=8).contains(id)) {
                        return Err(anyhow!("--only accepts suite ids 1..=8").into());
                    }
                    check::run_selected(&ids)
                }
                None => check::run_all(),
            };
            for outcome in &outcomes {
                println!("{}", outcome.line());
            }
            let failed: Vec<usize> = outcomes
                .iter()
                .filter(|o| !o.passed)
                .map(|o| o.id)
                .collect();
            if failed.is_empty() {
                Ok(())
            } else {
                Err(Failure::Violation(format!("suites failed: {failed:?}")))
            }
        }
    }
}

/// Cross-checks the primary engine against every other applicable one.
/// Enumeration joins in only for graphs it can handle quickly.
fn run_engine_check(
    g: &Graph,
    primary: Engine,
    kmax: Option<usize>,
    table: &count::StarTable,
) -> Result<(), Failure> {
    const ORACLE_CHECK_MAX_N: usize = 14;
    let mut agreed = vec![primary.name()];
    let mut others = Vec::new();
    if g.vertex_count() <= ORACLE_CHECK_MAX_N {
        others.push(Engine::Oracle);
    }
    if g.is_tree() {
        others.push(Engine::TreeDp);
    }
    others.push(Engine::Branching);
    for other in others {
        if other.name() == primary.name() {
            continue;
        }
        let reference = star_table_capped(g, other, kmax).map_err(engine_failure)?;
        if let Some(diff) = diff_tables(primary.name(), table, other.name(), &reference) {
            return Err(Failure::Violation(diff));
        }
        agreed.push(other.name());
    }
    eprintln!("check: engines agree: {}", agreed.join(", "));
    Ok(())
}

fn engine_failure(e: EngineError) -> Failure {
    match e {
        EngineError::EngineDiff(d) => Failure::Violation(d),
        other => Failure::Usage(anyhow!(other)),
    }
}

fn hk_failure(e: HkError) -> Failure {
    match e {
        HkError::Engine(EngineError::EngineDiff(d)) => Failure::Violation(d),
        other => Failure::Usage(anyhow!(other)),
    }
}

fn flip_failure(e: FlipError) -> Failure {
    match e {
        FlipError::CounterexampleFound { .. } => Failure::Violation(e.to_string()),
        other => Failure::Usage(anyhow!(other)),
    }
}
