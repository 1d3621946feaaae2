//! Stable machine-readable renderings of reports.
//!
//! Counts are always serialized as decimal strings (they outgrow every
//! fixed-width numeric type), and key order is fixed, so identical runs
//! produce identical bytes. CSV and JSON carry the same data; the CSV
//! variants append `#`-prefixed summary lines for fields that do not fit
//! the tabular part.

use serde_json::{json, Value};

use crate::count::StarTable;
use crate::flip::{EscapePath, InjectionReport};
use crate::hk::HkReport;

fn finish(value: Value) -> String {
    let mut s = value.to_string();
    s.push('\n');
    s
}

/// Rows `vertex,k,count`; whole-graph counts use vertex `*` and include
/// k = 0, per-vertex rows run over 1..=alpha.
pub fn star_table_csv(table: &StarTable) -> String {
    let mut out = String::from("vertex,k,count\n");
    for k in 0..=table.whole.alpha() {
        out.push_str(&format!("*,{},{}\n", k, table.whole.get(k)));
    }
    let alpha = table.alpha();
    for v in 0..table.vertex_count() {
        for k in 1..=alpha {
            out.push_str(&format!("{},{},{}\n", v, k, table.star(v, k)));
        }
    }
    out
}

pub fn star_table_json(source: &str, engine: &str, table: &StarTable) -> String {
    let whole: Vec<String> = (0..=table.whole.alpha())
        .map(|k| table.whole.get(k).to_string())
        .collect();
    let alpha = table.alpha();
    let stars: Vec<Value> = (0..table.vertex_count())
        .map(|v| {
            let counts: Vec<String> = (0..=alpha).map(|k| table.star(v, k).to_string()).collect();
            json!({ "vertex": v, "counts": counts })
        })
        .collect();
    finish(json!({
        "source": source,
        "engine": engine,
        "n": table.vertex_count(),
        "alpha": alpha,
        "whole": whole,
        "stars": stars,
    }))
}

/// Rows `k,max_star,argmax,contains_pendant,argmax_roles` (`;`-joined
/// lists, roles empty when the graph has no lobster decomposition),
/// followed by `# verdict:` and `# center-classification:` lines.
pub fn hk_csv(report: &HkReport) -> String {
    let mut out = String::from("k,max_star,argmax,contains_pendant,argmax_roles\n");
    for r in &report.per_k {
        let argmax: Vec<String> = r.argmax.iter().map(|v| v.to_string()).collect();
        let roles = match &r.argmax_roles {
            Some(roles) => roles
                .iter()
                .map(|x| x.to_string())
                .collect::<Vec<_>>()
                .join(";"),
            None => String::new(),
        };
        out.push_str(&format!(
            "{},{},{},{},{}\n",
            r.k,
            r.max_star,
            argmax.join(";"),
            r.contains_pendant,
            roles
        ));
    }
    match report.first_failing_k {
        None => out.push_str("# verdict: HK holds for every k\n"),
        Some(k) => out.push_str(&format!("# verdict: HK fails first at k={k}\n")),
    }
    if !report.decomposable {
        out.push_str("# center-classification: not applicable (no lobster decomposition)\n");
    } else if report.center_violations.is_empty() {
        out.push_str("# center-classification: ok\n");
    } else {
        for v in &report.center_violations {
            out.push_str(&format!(
                "# center-classification: VIOLATION k={} vertex={} role={} star={} best_leaf={}\n",
                v.k, v.vertex, v.role, v.star, v.best_leaf_star
            ));
        }
    }
    out
}

pub fn hk_json(source: &str, n: usize, report: &HkReport) -> String {
    let per_k: Vec<Value> = report
        .per_k
        .iter()
        .map(|r| {
            json!({
                "k": r.k,
                "max_star": r.max_star.to_string(),
                "argmax": r.argmax,
                "contains_pendant": r.contains_pendant,
                "argmax_roles": r.argmax_roles.as_ref().map(|roles| {
                    roles.iter().map(|x| x.to_string()).collect::<Vec<_>>()
                }),
            })
        })
        .collect();
    let violations: Vec<Value> = report
        .center_violations
        .iter()
        .map(|v| {
            json!({
                "k": v.k,
                "vertex": v.vertex,
                "role": v.role.to_string(),
                "star": v.star.to_string(),
                "best_leaf_star": v.best_leaf_star.to_string(),
            })
        })
        .collect();
    finish(json!({
        "source": source,
        "n": n,
        "hk_holds": report.holds(),
        "first_failing_k": report.first_failing_k,
        "decomposable": report.decomposable,
        "per_k": per_k,
        "center_violations": violations,
    }))
}

pub fn flip_json(
    source: &str,
    start: usize,
    paths: &[EscapePath],
    injections: &[InjectionReport],
) -> String {
    let path_values: Vec<Value> = paths.iter().map(|p| json!(p.vertices())).collect();
    let injection_values: Vec<Value> = injections
        .iter()
        .map(|r| {
            json!({
                "start": r.start,
                "end": r.end,
                "k": r.k,
                "star_start": r.star_start.to_string(),
                "star_end": r.star_end.to_string(),
                "inequality_holds": r.inequality_holds(),
            })
        })
        .collect();
    finish(json!({
        "source": source,
        "start": start,
        "escape_paths": path_values,
        "injections": injection_values,
    }))
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::count::{star_table, Engine};
    use crate::family::{gen_path, gen_tm};
    use crate::hk::hk_verdict;

    #[test]
    fn p4_table_csv() {
        let g = gen_path(4).unwrap();
        let table = star_table(&g, Engine::Oracle).unwrap();
        let csv = star_table_csv(&table);
        assert!(csv.starts_with("vertex,k,count\n*,0,1\n*,1,4\n*,2,3\n"));
        assert!(csv.contains("0,2,2\n"));
        assert!(csv.contains("1,2,1\n"));
    }

    #[test]
    fn csv_and_json_are_stable() {
        let g = gen_tm(2).unwrap();
        let report = hk_verdict(&g, None, Engine::TreeDp).unwrap();
        assert_eq!(hk_csv(&report), hk_csv(&report));
        assert_eq!(hk_json("tm:2", 11, &report), hk_json("tm:2", 11, &report));
        assert!(hk_json("tm:2", 11, &report).ends_with('\n'));
    }
}
