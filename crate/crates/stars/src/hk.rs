//! HK verdicts and star-center classification.
//!
//! A graph satisfies HK when, for every size `k`, some pendant vertex
//! centers a maximum star. [`hk_verdict`] reports the per-k maxima,
//! all argmax vertices (ties are never collapsed), and whether a pendant
//! vertex attains the maximum. For lobsters it additionally checks the
//! proved classification: a vertex whose star strictly exceeds every leaf
//! star must be a spinal vertex of degree 2, so any violation of that can
//! only be a counting bug.
//!
//! `k` ranges over `1..=alpha(G)`; beyond the independence number every
//! star is empty and the property is vacuous, so those sizes are omitted.

use num_bigint::BigUint;
use thiserror::Error;

use crate::count::{star_table_capped, Engine, EngineError, StarTable};
use crate::exec;
use crate::family::{FamilyError, FamilySpec};
use crate::flip::find_escape_paths;
use crate::graph::{decompose_lobster, Graph, GraphError, LobsterDecomposition, VertexRole};

#[derive(Debug, Error)]
pub enum HkError {
    #[error(transparent)]
    Engine(#[from] EngineError),
    #[error(transparent)]
    Family(#[from] FamilyError),
    #[error(transparent)]
    Graph(#[from] GraphError),
    #[error("not a spider: need a tree with exactly one vertex of degree greater than 2")]
    NotASpider,
}

/// Per-size slice of an HK report.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct KReport {
    pub k: usize,
    pub max_star: BigUint,
    /// Every vertex attaining the maximum, ascending.
    pub argmax: Vec<usize>,
    pub contains_pendant: bool,
    /// Roles aligned with `argmax`; present when the graph decomposes as a
    /// lobster.
    pub argmax_roles: Option<Vec<VertexRole>>,
}

/// A vertex whose star strictly beats every leaf star without being a
/// spinal vertex of degree 2. Impossible for true lobster counts.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct CenterViolation {
    pub k: usize,
    pub vertex: usize,
    pub role: VertexRole,
    pub star: BigUint,
    pub best_leaf_star: BigUint,
}

#[derive(Debug, Clone, PartialEq, Eq)]
pub struct HkReport {
    pub per_k: Vec<KReport>,
    /// Smallest k at which no pendant vertex attains the maximum.
    pub first_failing_k: Option<usize>,
    /// Whether the lobster decomposition (and thus role data) is available.
    pub decomposable: bool,
    pub center_violations: Vec<CenterViolation>,
}

impl HkReport {
    pub fn holds(&self) -> bool {
        self.first_failing_k.is_none()
    }

    /// Sizes at which HK fails (no pendant vertex in the argmax set).
    pub fn failing_ks(&self) -> Vec<usize> {
        self.per_k
            .iter()
            .filter(|r| !r.contains_pendant)
            .map(|r| r.k)
            .collect()
    }
}

/// Computes the star table with the chosen engine and evaluates HK for
/// every `1 <= k <= min(k_max, alpha)`.
pub fn hk_verdict(g: &Graph, k_max: Option<usize>, engine: Engine) -> Result<HkReport, HkError> {
    let table = star_table_capped(g, engine, k_max)?;
    Ok(report_from_table(g, &table, k_max))
}

pub(crate) fn report_from_table(g: &Graph, table: &StarTable, k_max: Option<usize>) -> HkReport {
    let n = g.vertex_count();
    let alpha = table.alpha();
    let upto = k_max.map_or(alpha, |m| m.min(alpha));
    let is_leaf: Vec<bool> = (0..n).map(|v| g.degree(v) == 1).collect();
    let decomp = decompose_lobster(g).ok();

    let mut per_k = Vec::with_capacity(upto);
    let mut center_violations = Vec::new();
    for k in 1..=upto {
        let sizes: Vec<BigUint> = (0..n).map(|v| table.star(v, k)).collect();
        let max_star = sizes.iter().max().cloned().unwrap_or_default();
        let argmax: Vec<usize> = (0..n).filter(|&v| sizes[v] == max_star).collect();
        let contains_pendant = argmax.iter().any(|&v| is_leaf[v]);
        let argmax_roles = decomp
            .as_ref()
            .map(|d| argmax.iter().map(|&v| d.roles[v]).collect());
        if let Some(d) = &decomp {
            center_violations.extend(classify_at_k(&sizes, &is_leaf, d, k));
        }
        per_k.push(KReport {
            k,
            max_star,
            argmax,
            contains_pendant,
            argmax_roles,
        });
    }
    let first_failing_k = per_k
        .iter()
        .find(|r| !r.contains_pendant)
        .map(|r| r.k);
    HkReport {
        per_k,
        first_failing_k,
        decomposable: decomp.is_some(),
        center_violations,
    }
}

fn classify_at_k(
    sizes: &[BigUint],
    is_leaf: &[bool],
    decomp: &LobsterDecomposition,
    k: usize,
) -> Vec<CenterViolation> {
    let best_leaf_star = (0..sizes.len())
        .filter(|&v| is_leaf[v])
        .map(|v| sizes[v].clone())
        .max()
        .unwrap_or_default();
    (0..sizes.len())
        .filter(|&v| decomp.roles[v] != VertexRole::SpinalDeg2 && sizes[v] > best_leaf_star)
        .map(|v| CenterViolation {
            k,
            vertex: v,
            role: decomp.roles[v],
            star: sizes[v].clone(),
            best_leaf_star: best_leaf_star.clone(),
        })
        .collect()
}

/// Role breakdown of the argmax set at one size, with any violations of
/// the lobster center classification.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct LobsterCenterReport {
    pub k: usize,
    pub argmax: Vec<usize>,
    pub argmax_roles: Vec<VertexRole>,
    pub violations: Vec<CenterViolation>,
}

/// Classifies the argmax star centers of a lobster at size `k`.
///
/// Errors with `NotATree`/`NotLobster` when the graph does not decompose.
/// A nonempty `violations` list means a vertex other than a spinal
/// degree-2 vertex strictly beat every leaf, which contradicts the proved
/// classification and therefore flags a counting bug.
pub fn classify_lobster_centers(
    g: &Graph,
    k: usize,
    engine: Engine,
) -> Result<LobsterCenterReport, HkError> {
    let decomp = decompose_lobster(g)?;
    let table = star_table_capped(g, engine, Some(k))?;
    let n = g.vertex_count();
    let sizes: Vec<BigUint> = (0..n).map(|v| table.star(v, k)).collect();
    let is_leaf: Vec<bool> = (0..n).map(|v| g.degree(v) == 1).collect();
    let max_star = sizes.iter().max().cloned().unwrap_or_default();
    let argmax: Vec<usize> = (0..n).filter(|&v| sizes[v] == max_star).collect();
    let argmax_roles = argmax.iter().map(|&v| decomp.roles[v]).collect();
    let violations = classify_at_k(&sizes, &is_leaf, &decomp, k);
    Ok(LobsterCenterReport {
        k,
        argmax,
        argmax_roles,
        violations,
    })
}

/// One sweep entry: the generated family member and its verdict.
#[derive(Debug, Clone)]
pub struct SweepEntry {
    pub label: String,
    pub vertex_count: usize,
    pub report: HkReport,
}

/// Runs [`hk_verdict`] over a batch of family specs. Entries come back in
/// spec order regardless of scheduling.
pub fn hk_sweep(
    specs: &[FamilySpec],
    k_max: Option<usize>,
    engine: Engine,
) -> Result<Vec<SweepEntry>, HkError> {
    let results = exec::map_slice(specs, |spec| -> Result<SweepEntry, HkError> {
        let g = spec.generate()?;
        let report = hk_verdict(&g, k_max, engine)?;
        Ok(SweepEntry {
            label: spec.label(),
            vertex_count: g.vertex_count(),
            report,
        })
    });
    results.into_iter().collect()
}

#[derive(Debug, Clone)]
pub struct SpiderReport {
    pub center: usize,
    /// Whether the center has an escape path to every leaf.
    pub center_reaches_all_leaves: bool,
    pub hk: HkReport,
}

/// Finds the unique vertex of degree greater than 2 of a spider.
pub fn spider_center(g: &Graph) -> Option<usize> {
    if !g.is_tree() {
        return None;
    }
    let mut high: Vec<usize> = (0..g.vertex_count()).filter(|&v| g.degree(v) > 2).collect();
    if high.len() == 1 {
        high.pop()
    } else {
        None
    }
}

/// HK verdict for a spider plus the escape-path coverage of its center.
pub fn spider_check(g: &Graph, engine: Engine) -> Result<SpiderReport, HkError> {
    let center = spider_center(g).ok_or(HkError::NotASpider)?;
    let hk = hk_verdict(g, None, engine)?;
    let reached: std::collections::BTreeSet<usize> = find_escape_paths(g, center)
        .iter()
        .map(|p| p.end())
        .collect();
    let center_reaches_all_leaves = g.leaves().iter().all(|l| reached.contains(l));
    Ok(SpiderReport {
        center,
        center_reaches_all_leaves,
        hk,
    })
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::family::{gen_caterpillar, gen_spider, gen_sunlet, gen_tm};
    use crate::FamilyKind;

    #[test]
    fn caterpillar_is_hk() {
        let g = gen_caterpillar(5, &[1, 0, 2, 0, 1]).unwrap();
        let report = hk_verdict(&g, None, Engine::Auto).unwrap();
        assert!(report.holds(), "failing ks: {:?}", report.failing_ks());
        assert!(report.center_violations.is_empty());
    }

    #[test]
    fn sunlet_is_hk() {
        let report = hk_verdict(&gen_sunlet(5).unwrap(), None, Engine::Auto).unwrap();
        assert!(report.holds());
        assert!(!report.decomposable); // not a tree, no role data
        assert!(report.per_k.iter().all(|r| r.argmax_roles.is_none()));
    }

    #[test]
    fn tm3_fails_first_at_k5_with_argmax_v0() {
        let report = hk_verdict(&gen_tm(3).unwrap(), None, Engine::TreeDp).unwrap();
        assert_eq!(report.first_failing_k, Some(5));
        assert_eq!(report.failing_ks(), vec![5, 6, 7]);
        for r in &report.per_k {
            if (5..=7).contains(&r.k) {
                assert_eq!(r.argmax, vec![0]);
                assert_eq!(
                    r.argmax_roles.as_deref(),
                    Some(&[VertexRole::SpinalDeg2][..])
                );
            }
        }
        // The proved classification is never violated: v0 is spinal deg 2.
        assert!(report.center_violations.is_empty());
    }

    #[test]
    fn tm_fails_exactly_between_5_and_2m_plus_1() {
        for m in [3usize, 4, 5] {
            let report = hk_verdict(&gen_tm(m).unwrap(), None, Engine::TreeDp).unwrap();
            let expected: Vec<usize> = (5..=2 * m + 1).collect();
            assert_eq!(report.failing_ks(), expected, "m={m}");
        }
    }

    #[test]
    fn classify_tm3_at_k5() {
        let g = gen_tm(3).unwrap();
        let r = classify_lobster_centers(&g, 5, Engine::TreeDp).unwrap();
        assert_eq!(r.argmax, vec![0]);
        assert_eq!(r.argmax_roles, vec![VertexRole::SpinalDeg2]);
        assert!(r.violations.is_empty());
        let r2 = classify_lobster_centers(&g, 2, Engine::TreeDp).unwrap();
        assert!(r2
            .argmax_roles
            .iter()
            .all(|&role| role == VertexRole::Leaf || role == VertexRole::SpinalDeg2));
    }

    #[test]
    fn classify_rejects_non_lobsters() {
        let sun = gen_sunlet(3).unwrap();
        assert!(matches!(
            classify_lobster_centers(&sun, 2, Engine::Auto),
            Err(HkError::Graph(GraphError::NotATree))
        ));
    }

    #[test]
    fn spider_check_reports_coverage() {
        let report = spider_check(&gen_spider(&[2, 2, 2]).unwrap(), Engine::Auto).unwrap();
        assert_eq!(report.center, 0);
        assert!(report.center_reaches_all_leaves);
        assert!(report.hk.holds());

        let k14 = gen_spider(&[1, 1, 1, 1]).unwrap();
        let report = spider_check(&k14, Engine::Auto).unwrap();
        assert!(report.hk.holds());
        assert_eq!(find_escape_paths(&k14, 0).len(), 4);

        assert!(matches!(
            spider_check(&crate::family::gen_path(5).unwrap(), Engine::Auto),
            Err(HkError::NotASpider)
        ));
    }

    #[test]
    fn sweep_preserves_spec_order_and_seeds() {
        let specs: Vec<FamilySpec> = (0..6)
            .map(|s| FamilySpec::with_seed(FamilyKind::RandomCaterpillar { max_n: 12 }, s))
            .collect();
        let a = hk_sweep(&specs, None, Engine::Auto).unwrap();
        let b = hk_sweep(&specs, None, Engine::Auto).unwrap();
        assert_eq!(a.len(), 6);
        for (x, y) in a.iter().zip(&b) {
            assert_eq!(x.label, y.label);
            assert_eq!(x.report, y.report);
            assert!(x.report.holds());
        }
    }
}
