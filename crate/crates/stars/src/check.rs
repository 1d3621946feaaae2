//! Built-in verification suites.
//!
//! Each suite checks one release-blocking claim about the toolkit, from
//! reproducing the counterexample tree to cross-validating every counting
//! engine against brute-force enumeration. `stars check` runs them all;
//! the acceptance tests run them one by one.

use itertools::Itertools;

use crate::count::{diff_tables, oracle, star_table, Engine, StarTable};
use crate::exec;
use crate::family::{
    gen_caterpillar, gen_generalized_sunlet, gen_lobster, gen_path, gen_spider, gen_sunlet,
    gen_tm, FamilyKind, FamilySpec,
};
use crate::flip::{find_escape_paths, flip_on_path, flip_path, flip_path_unchecked, EscapePath};
use crate::graph::Graph;
use crate::hk::{hk_sweep, spider_check};

/// Result of one verification suite.
#[derive(Debug, Clone)]
pub struct CheckOutcome {
    pub id: usize,
    pub name: &'static str,
    pub passed: bool,
    pub detail: String,
}

impl CheckOutcome {
    fn pass(id: usize, name: &'static str, detail: String) -> Self {
        CheckOutcome {
            id,
            name,
            passed: true,
            detail,
        }
    }

    fn from_problems(id: usize, name: &'static str, ok_detail: String, problems: Vec<String>) -> Self {
        if problems.is_empty() {
            Self::pass(id, name, ok_detail)
        } else {
            let shown = problems.iter().take(3).join(" | ");
            CheckOutcome {
                id,
                name,
                passed: false,
                detail: format!("{} problem(s): {}", problems.len(), shown),
            }
        }
    }

    /// One-line pass/fail rendering.
    pub fn line(&self) -> String {
        let tag = if self.passed { "PASS" } else { "FAIL" };
        format!("[{}] {} {}: {}", tag, self.id, self.name, self.detail)
    }
}

/// Runs every suite in order.
pub fn run_all() -> Vec<CheckOutcome> {
    run_selected(&[1, 2, 3, 4, 5, 6, 7, 8])
}

/// Runs the suites with the given ids (1..=8), in the order given.
pub fn run_selected(ids: &[usize]) -> Vec<CheckOutcome> {
    ids.iter()
        .map(|id| match id {
            1 => tm_counterexample(),
            2 => caterpillar_hk(),
            3 => sunlet_hk(),
            4 => spider_hk(),
            5 => lobster_centers(),
            6 => flip_machinery(),
            7 => engine_equivalence(),
            8 => escape_search_completeness(),
            other => CheckOutcome {
                id: *other,
                name: "unknown",
                passed: false,
                detail: "no such suite".to_string(),
            },
        })
        .collect()
}

/// Fixed test corpus (all graphs have at most 14 vertices): paths, stars,
/// spiders, caterpillars, lobsters, sunlets, plus a few degenerate shapes.
pub fn corpus() -> Vec<(String, Graph)> {
    let mut out: Vec<(String, Graph)> = Vec::new();
    let mut push = |label: &str, g: Graph| out.push((label.to_string(), g));

    for n in [2usize, 3, 4, 5, 6, 8] {
        push(&format!("path:{n}"), gen_path(n).unwrap());
    }
    push("cycle:4", Graph::build(4, (0..4).map(|i| (i, (i + 1) % 4))).unwrap());
    push("cycle:5", Graph::build(5, (0..5).map(|i| (i, (i + 1) % 5))).unwrap());
    push("spider:1,1,1", gen_spider(&[1, 1, 1]).unwrap());
    push("spider:1,1,1,1,1", gen_spider(&[1, 1, 1, 1, 1]).unwrap());
    push("spider:2,2,2", gen_spider(&[2, 2, 2]).unwrap());
    push("spider:1,2,3", gen_spider(&[1, 2, 3]).unwrap());
    push("spider:3,3,3", gen_spider(&[3, 3, 3]).unwrap());
    push("caterpillar:3:1,2,1", gen_caterpillar(3, &[1, 2, 1]).unwrap());
    push(
        "caterpillar:5:1,0,2,0,1",
        gen_caterpillar(5, &[1, 0, 2, 0, 1]).unwrap(),
    );
    push("caterpillar:2:2,2", gen_caterpillar(2, &[2, 2]).unwrap());
    push(
        "caterpillar:4:2,0,1,3",
        gen_caterpillar(4, &[2, 0, 1, 3]).unwrap(),
    );
    push(
        "lobster:3:12,,2",
        gen_lobster(3, &[vec![1, 2], vec![], vec![2]]).unwrap(),
    );
    push(
        "lobster:2:22,1",
        gen_lobster(2, &[vec![2, 2], vec![1]]).unwrap(),
    );
    push("tm:2", gen_tm(2).unwrap());
    for n in [3usize, 4, 5, 7] {
        push(&format!("sunlet:{n}"), gen_sunlet(n).unwrap());
    }
    push(
        "gsunlet:3:1,2,3",
        gen_generalized_sunlet(3, &[1, 2, 3]).unwrap(),
    );
    push(
        "gsunlet:4:2,2,2,2",
        gen_generalized_sunlet(4, &[2, 2, 2, 2]).unwrap(),
    );
    push("edgeless:5", Graph::build(5, []).unwrap());
    push(
        "disconnected:6",
        Graph::build(6, [(0, 1), (2, 3), (3, 4)]).unwrap(),
    );
    // Host graphs for the two flip failure modes: a pendant next to the
    // path start, and a pendant next to the penultimate vertex.
    push(
        "flipfail:start-pendant",
        Graph::build(4, [(0, 1), (1, 2), (0, 3)]).unwrap(),
    );
    push(
        "flipfail:penultimate-pendant",
        Graph::build(5, [(0, 1), (1, 2), (2, 3), (2, 4)]).unwrap(),
    );
    out
}

/// All escape paths from `v` found the slow way: enumerate every simple
/// path and filter by the definition. Reference for the chain walk.
pub fn exhaustive_escape_paths(g: &Graph, v: usize) -> Vec<Vec<usize>> {
    fn all_paths(
        g: &Graph,
        path: &mut Vec<usize>,
        on_path: &mut [bool],
        out: &mut Vec<Vec<usize>>,
    ) {
        if path.len() >= 2 && EscapePath::is_escape_path(g, path) {
            out.push(path.clone());
        }
        let cur = *path.last().unwrap();
        for &z in g.neighbors(cur) {
            if !on_path[z] {
                on_path[z] = true;
                path.push(z);
                all_paths(g, path, on_path, out);
                path.pop();
                on_path[z] = false;
            }
        }
    }
    let mut out = Vec::new();
    let mut on_path = vec![false; g.vertex_count()];
    on_path[v] = true;
    all_paths(g, &mut vec![v], &mut on_path, &mut out);
    out.sort_by(|a, b| {
        a.len()
            .cmp(&b.len())
            .then(a.last().cmp(&b.last()))
            .then(a.cmp(b))
    });
    out
}

fn handshake_problem(label: &str, g: &Graph, table: &StarTable) -> Option<String> {
    use num_bigint::BigUint;
    for k in 1..=table.alpha() {
        let mut total = BigUint::default();
        for v in 0..g.vertex_count() {
            total += table.star(v, k);
        }
        let expected = table.whole.get(k) * BigUint::from(k);
        if total != expected {
            return Some(format!(
                "{label}: handshake fails at k={k}: sum={total} expected={expected}"
            ));
        }
    }
    None
}

fn tm_counterexample() -> CheckOutcome {
    let mut problems = Vec::new();
    for m in [3usize, 4] {
        let g = gen_tm(m).unwrap();
        let table = match star_table(&g, Engine::TreeDp) {
            Ok(t) => t,
            Err(e) => {
                problems.push(format!("tm:{m}: {e}"));
                continue;
            }
        };
        let leaves = g.leaves();
        let report = crate::hk::report_from_table(&g, &table, None);
        for r in &report.per_k {
            if (5..=2 * m + 1).contains(&r.k) {
                if r.argmax != vec![0] {
                    problems.push(format!("tm:{m} k={}: argmax {:?} != [0]", r.k, r.argmax));
                }
                let v0 = table.star(0, r.k);
                for &l in &leaves {
                    if table.star(l, r.k) >= v0 {
                        problems.push(format!(
                            "tm:{m} k={}: leaf {l} star {} not below v0 star {v0}",
                            r.k,
                            table.star(l, r.k)
                        ));
                    }
                }
            } else if r.k <= 4 && !r.contains_pendant {
                problems.push(format!("tm:{m} k={}: no pendant vertex attains the max", r.k));
            }
        }
        let expected: Vec<usize> = (5..=2 * m + 1).collect();
        if report.failing_ks() != expected {
            problems.push(format!(
                "tm:{m}: failing ks {:?} != {:?}",
                report.failing_ks(),
                expected
            ));
        }
    }
    CheckOutcome::from_problems(
        1,
        "tm counterexample",
        "m=3,4: argmax is exactly {v0} for 5<=k<=2m+1, pendant-centered for k<=4".to_string(),
        problems,
    )
}

fn caterpillar_hk() -> CheckOutcome {
    // Every caterpillar with spine <= 5 and 0..=2 leaves per spine vertex
    // (mixed-radix enumeration), plus 200 seeded random ones with n <= 20.
    let mut specs = Vec::new();
    for spine in 1usize..=5 {
        let combos = 3usize.pow(spine as u32);
        for code in 0..combos {
            let mut counts = Vec::with_capacity(spine);
            let mut c = code;
            for _ in 0..spine {
                counts.push(c % 3);
                c /= 3;
            }
            let n = spine + counts.iter().sum::<usize>();
            if n >= 2 {
                specs.push(FamilySpec::new(FamilyKind::Caterpillar {
                    leaf_counts: counts,
                }));
            }
        }
    }
    for seed in 0..200 {
        specs.push(FamilySpec::with_seed(
            FamilyKind::RandomCaterpillar { max_n: 20 },
            seed,
        ));
    }
    let total = specs.len();
    let problems = match hk_sweep(&specs, None, Engine::Auto) {
        Ok(entries) => entries
            .iter()
            .filter(|e| !e.report.holds() || !e.report.center_violations.is_empty())
            .map(|e| format!("{} (n={}): failing ks {:?}", e.label, e.vertex_count, e.report.failing_ks()))
            .collect(),
        Err(e) => vec![e.to_string()],
    };
    CheckOutcome::from_problems(
        2,
        "caterpillar hk",
        format!("{total} caterpillars (exhaustive spine<=5 and leaf counts<=2, plus 200 seeded, n<=20): zero violations"),
        problems,
    )
}

fn sunlet_hk() -> CheckOutcome {
    let mut specs: Vec<FamilySpec> = (3usize..=8)
        .map(|n| FamilySpec::new(FamilyKind::Sunlet { n }))
        .collect();
    for seed in 0..50 {
        specs.push(FamilySpec::with_seed(
            FamilyKind::RandomGeneralizedSunlet { max_total: 18 },
            seed,
        ));
    }
    let total = specs.len();
    let problems = match hk_sweep(&specs, None, Engine::Auto) {
        Ok(entries) => entries
            .iter()
            .filter(|e| !e.report.holds())
            .map(|e| format!("{}: failing ks {:?}", e.label, e.report.failing_ks()))
            .collect(),
        Err(e) => vec![e.to_string()],
    };
    CheckOutcome::from_problems(
        3,
        "sunlet hk",
        format!("{total} sunlets (n=3..8 plus 50 seeded generalized, total n<=18): zero violations"),
        problems,
    )
}

fn spider_hk() -> CheckOutcome {
    let mut problems = Vec::new();
    let mut total = 0usize;
    for legs in 3usize..=5 {
        // Leg order is irrelevant, so test each multiset of lengths once.
        for lengths in (1usize..=3).combinations_with_replacement(legs) {
            total += 1;
            let g = gen_spider(&lengths).unwrap();
            match spider_check(&g, Engine::Auto) {
                Ok(report) => {
                    if !report.hk.holds() {
                        problems.push(format!(
                            "spider {lengths:?}: failing ks {:?}",
                            report.hk.failing_ks()
                        ));
                    }
                    if !report.center_reaches_all_leaves {
                        problems.push(format!(
                            "spider {lengths:?}: center misses a leaf escape path"
                        ));
                    }
                }
                Err(e) => problems.push(format!("spider {lengths:?}: {e}")),
            }
        }
    }

    CheckOutcome::from_problems(
        4,
        "spider hk",
        format!("{total} spiders (<=5 legs of length <=3): HK and full center escape coverage"),
        problems,
    )
}

fn lobster_centers() -> CheckOutcome {
    let specs: Vec<FamilySpec> = (0..200)
        .map(|seed| FamilySpec::with_seed(FamilyKind::RandomLobster { max_n: 20 }, seed))
        .collect();
    let problems = match hk_sweep(&specs, None, Engine::Auto) {
        Ok(entries) => entries
            .iter()
            .filter(|e| !e.report.center_violations.is_empty())
            .map(|e| {
                let v = &e.report.center_violations[0];
                format!(
                    "{}: k={} vertex={} role={} beats every leaf",
                    e.label, v.k, v.vertex, v.role
                )
            })
            .collect(),
        Err(e) => vec![e.to_string()],
    };
    CheckOutcome::from_problems(
        5,
        "lobster center classification",
        "200 seeded lobsters (n<=20), all k: stars beating every leaf are centered at spinal degree-2 vertices".to_string(),
        problems,
    )
}

fn flip_machinery() -> CheckOutcome {
    let mut problems = Vec::new();

    // Reversal of standalone paths: an involution and a bijection of the
    // size-k independent sets onto themselves; it swaps the end stars.
    for n in 2usize..=10 {
        let p = gen_path(n).unwrap();
        let mut k = 0usize;
        loop {
            let sets = oracle::enumerate_independent_sets(&p, k);
            if sets.is_empty() {
                break;
            }
            let originals: std::collections::BTreeSet<Vec<usize>> = sets.iter().cloned().collect();
            let images: std::collections::BTreeSet<Vec<usize>> =
                sets.iter().map(|s| flip_on_path(&p, s)).collect();
            if originals != images {
                problems.push(format!("path:{n} k={k}: reversal is not a bijection"));
            }
            for s in &sets {
                if &flip_on_path(&p, &flip_on_path(&p, s)) != s {
                    problems.push(format!("path:{n} k={k}: reversal is not an involution"));
                }
            }
            let first_star: std::collections::BTreeSet<Vec<usize>> = sets
                .iter()
                .filter(|s| s.contains(&0))
                .map(|s| flip_on_path(&p, s))
                .collect();
            if !first_star.iter().all(|s| s.contains(&(n - 1))) {
                problems.push(format!("path:{n} k={k}: image of the first star leaves the last"));
            }
            k += 1;
        }
    }

    // Explicit injection on every escape path of every corpus graph.
    let all = corpus();
    let per_graph: Vec<Vec<String>> = exec::map_slice(&all, |(label, g)| {
        let mut local = Vec::new();
        let alpha = star_table(g, Engine::Branching)
            .map(|t| t.alpha())
            .unwrap_or(0);
        for v in 0..g.vertex_count() {
            for path in find_escape_paths(g, v) {
                for k in 1..=alpha {
                    match crate::flip::verify_injection(g, &path, k) {
                        Ok(report) => {
                            if !report.inequality_holds() {
                                local.push(format!(
                                    "{label}: path {:?} k={k}: star inequality fails",
                                    path.vertices()
                                ));
                            }
                        }
                        Err(e) => local.push(format!("{label}: {e}")),
                    }
                }
            }
        }
        local
    });
    problems.extend(per_graph.into_iter().flatten());

    // The two failure modes of the unchecked map.
    let a = Graph::build(4, [(0, 1), (1, 2), (0, 3)]).unwrap();
    let pa = EscapePath::new(&a, vec![0, 1, 2]).unwrap();
    let image = flip_path_unchecked(&pa, &[2, 3]);
    if a.is_independent(&image) {
        problems.push("start-pendant failure mode not exhibited".to_string());
    }
    if flip_path(&a, &pa, &[2, 3]).is_ok() {
        problems.push("checked flip accepted a set without the start vertex".to_string());
    }
    let b = Graph::build(5, [(0, 1), (1, 2), (2, 3), (2, 4)]).unwrap();
    let pb = EscapePath::new(&b, vec![0, 1, 2, 3]).unwrap();
    let image = flip_path_unchecked(&pb, &[1, 4]);
    if b.is_independent(&image) {
        problems.push("penultimate-pendant failure mode not exhibited".to_string());
    }

    CheckOutcome::from_problems(
        6,
        "flip machinery",
        "path reversal bijections (n<=10), explicit injections on the corpus, both non-independence failure modes".to_string(),
        problems,
    )
}

fn engine_equivalence() -> CheckOutcome {
    let mut problems = Vec::new();

    let all = corpus();
    let corpus_problems: Vec<Vec<String>> = exec::map_slice(&all, |(label, g)| {
        let mut local = Vec::new();
        let reference = oracle::oracle_star_table(g, None);
        let branching = crate::count::branching::branching_star_table(g, None);
        if let Some(d) = diff_tables("oracle", &reference, "branching", &branching) {
            local.push(format!("{label}: {d}"));
        }
        if g.is_tree() {
            match crate::count::tree_dp::tree_star_table(g, None) {
                Ok(tree) => {
                    if let Some(d) = diff_tables("oracle", &reference, "treedp", &tree) {
                        local.push(format!("{label}: {d}"));
                    }
                }
                Err(e) => local.push(format!("{label}: {e}")),
            }
        }
        if let Some(p) = handshake_problem(label, g, &reference) {
            local.push(p);
        }
        local
    });
    problems.extend(corpus_problems.into_iter().flatten());

    // 500 seeded random trees on up to 12 vertices, all three engines.
    let seed_problems: Vec<Vec<String>> = exec::map_indexed(500, |seed| {
        let mut local = Vec::new();
        let g = crate::family::gen_random_tree(12, seed as u64).unwrap();
        let label = format!("rtree:12#{seed}");
        let reference = oracle::oracle_star_table(&g, None);
        let branching = crate::count::branching::branching_star_table(&g, None);
        let tree = crate::count::tree_dp::tree_star_table(&g, None).unwrap();
        if let Some(d) = diff_tables("oracle", &reference, "branching", &branching) {
            local.push(format!("{label}: {d}"));
        }
        if let Some(d) = diff_tables("oracle", &reference, "treedp", &tree) {
            local.push(format!("{label}: {d}"));
        }
        if let Some(p) = handshake_problem(&label, &g, &reference) {
            local.push(p);
        }
        local
    });
    problems.extend(seed_problems.into_iter().flatten());

    CheckOutcome::from_problems(
        7,
        "engine equivalence",
        format!(
            "{} corpus graphs (n<=14) and 500 seeded trees (n<=12): identical tables, handshake identity",
            all.len()
        ),
        problems,
    )
}

fn escape_search_completeness() -> CheckOutcome {
    let mut problems = Vec::new();

    let all = corpus();
    let per_graph: Vec<Vec<String>> = exec::map_slice(&all, |(label, g)| {
        let mut local = Vec::new();
        for v in 0..g.vertex_count() {
            let found: Vec<Vec<usize>> = find_escape_paths(g, v)
                .iter()
                .map(|p| p.vertices().to_vec())
                .collect();
            for seq in &found {
                if let Err(e) = EscapePath::check(g, seq) {
                    local.push(format!("{label} v={v}: unsound result {seq:?}: {e}"));
                }
            }
            let reference = exhaustive_escape_paths(g, v);
            if found != reference {
                local.push(format!(
                    "{label} v={v}: found {} paths, reference {}",
                    found.len(),
                    reference.len()
                ));
            }
        }
        local
    });
    problems.extend(per_graph.into_iter().flatten());

    // The counterexample trees: no escape path leaves the center.
    for m in 2usize..=4 {
        let g = gen_tm(m).unwrap();
        if !find_escape_paths(&g, 0).is_empty() {
            problems.push(format!("tm:{m}: unexpected escape path from v0"));
        }
        if !exhaustive_escape_paths(&g, 0).is_empty() {
            problems.push(format!("tm:{m}: reference search disagrees about v0"));
        }
    }

    CheckOutcome::from_problems(
        8,
        "escape path search completeness",
        format!(
            "{} corpus graphs, every start vertex, against the all-simple-paths reference; no escape from the tm center",
            all.len()
        ),
        problems,
    )
}
