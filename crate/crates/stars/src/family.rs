//! Generators for every graph family the toolkit analyzes, with fixed,
//! documented vertex labelings so tables are reproducible byte for byte.
//!
//! Deterministic kinds take explicit parameters; the `Random*` kinds draw
//! parameters from a seeded ChaCha stream, so the same seed always yields
//! the same edge list. Every generator output passes [`Graph::build`]
//! validation by construction.

use std::fmt;

use rand::{Rng, SeedableRng};
use rand_chacha::ChaCha8Rng;
use thiserror::Error;

use crate::graph::{Graph, GraphError};

#[derive(Debug, Error, Clone, PartialEq, Eq)]
pub enum FamilyError {
    #[error("{what} too small: {got}, need at least {min}")]
    TooSmall {
        what: &'static str,
        got: usize,
        min: usize,
    },
    #[error("a spider needs at least 3 legs (got {0})")]
    NotASpider(usize),
    #[error("spider legs must have length at least 1")]
    EmptyLeg,
    #[error("expected {expected} entries, got {got}")]
    LengthMismatch { expected: usize, got: usize },
    #[error("lobster attachment lengths must be 1 or 2 (got {0})")]
    BadAttachmentLength(u8),
    #[error("random family `{0}` requires a seed")]
    MissingSeed(String),
    #[error("cannot parse family spec `{spec}`: {reason}")]
    Parse { spec: String, reason: String },
    #[error(transparent)]
    Graph(#[from] GraphError),
}

/// Path 0-1-...-(n-1).
pub fn gen_path(n: usize) -> Result<Graph, FamilyError> {
    if n < 2 {
        return Err(FamilyError::TooSmall {
            what: "path",
            got: n,
            min: 2,
        });
    }
    Ok(Graph::build(n, (0..n - 1).map(|i| (i, i + 1)))?)
}

/// Spider: center 0, leg `i` is a chain of `leg_lengths[i]` edges. Leg
/// vertices are labelled consecutively, inner to outer, leg by leg.
pub fn gen_spider(leg_lengths: &[usize]) -> Result<Graph, FamilyError> {
    if leg_lengths.len() < 3 {
        return Err(FamilyError::NotASpider(leg_lengths.len()));
    }
    if leg_lengths.contains(&0) {
        return Err(FamilyError::EmptyLeg);
    }
    let mut edges = Vec::new();
    let mut next = 1;
    for &len in leg_lengths {
        let mut prev = 0;
        for _ in 0..len {
            edges.push((prev, next));
            prev = next;
            next += 1;
        }
    }
    Ok(Graph::build(next, edges)?)
}

/// Caterpillar: spine 0..spine_len, then `leaf_counts[i]` pendant vertices
/// on spine vertex `i`, labelled in spine order.
pub fn gen_caterpillar(spine_len: usize, leaf_counts: &[usize]) -> Result<Graph, FamilyError> {
    if spine_len < 1 {
        return Err(FamilyError::TooSmall {
            what: "spine",
            got: spine_len,
            min: 1,
        });
    }
    if leaf_counts.len() != spine_len {
        return Err(FamilyError::LengthMismatch {
            expected: spine_len,
            got: leaf_counts.len(),
        });
    }
    let mut edges: Vec<(usize, usize)> = (0..spine_len - 1).map(|i| (i, i + 1)).collect();
    let mut next = spine_len;
    for (i, &c) in leaf_counts.iter().enumerate() {
        for _ in 0..c {
            edges.push((i, next));
            next += 1;
        }
    }
    Ok(Graph::build(next, edges)?)
}

/// Lobster: spine 0..spine_len; `attachments[i]` lists the pendant path
/// lengths hanging from spine vertex `i`, each 1 or 2 edges. Pendant
/// vertices are labelled in spine order, near vertex before far vertex.
pub fn gen_lobster(spine_len: usize, attachments: &[Vec<u8>]) -> Result<Graph, FamilyError> {
    if spine_len < 1 {
        return Err(FamilyError::TooSmall {
            what: "spine",
            got: spine_len,
            min: 1,
        });
    }
    if attachments.len() != spine_len {
        return Err(FamilyError::LengthMismatch {
            expected: spine_len,
            got: attachments.len(),
        });
    }
    let mut edges: Vec<(usize, usize)> = (0..spine_len - 1).map(|i| (i, i + 1)).collect();
    let mut next = spine_len;
    for (i, paths) in attachments.iter().enumerate() {
        for &len in paths {
            match len {
                1 => {
                    edges.push((i, next));
                    next += 1;
                }
                2 => {
                    edges.push((i, next));
                    edges.push((next, next + 1));
                    next += 2;
                }
                other => return Err(FamilyError::BadAttachmentLength(other)),
            }
        }
    }
    Ok(Graph::build(next, edges)?)
}

/// The counterexample tree: v0 (id 0) joins v1 (id 1) and v2 (id 2), and
/// `m` chains of two edges hang from each of v1 and v2.
///
/// Labeling: middles before ends, v1 side before v2 side. Middle `i` of
/// the v1 side is `3 + i`, of the v2 side `3 + m + i`; the matching ends
/// are `3 + 2m + i` and `3 + 3m + i`. Total `4m + 3` vertices.
pub fn gen_tm(m: usize) -> Result<Graph, FamilyError> {
    if m < 1 {
        return Err(FamilyError::TooSmall {
            what: "m",
            got: m,
            min: 1,
        });
    }
    let mut edges = vec![(0, 1), (0, 2)];
    for i in 0..m {
        edges.push((1, 3 + i));
        edges.push((2, 3 + m + i));
        edges.push((3 + i, 3 + 2 * m + i));
        edges.push((3 + m + i, 3 + 3 * m + i));
    }
    Ok(Graph::build(4 * m + 3, edges)?)
}

/// Sunlet: cycle 0..n, pendant vertex `n + i` attached to cycle vertex `i`.
pub fn gen_sunlet(n: usize) -> Result<Graph, FamilyError> {
    if n < 3 {
        return Err(FamilyError::TooSmall {
            what: "cycle",
            got: n,
            min: 3,
        });
    }
    let mut edges: Vec<(usize, usize)> = (0..n).map(|i| (i, (i + 1) % n)).collect();
    edges.extend((0..n).map(|i| (i, n + i)));
    Ok(Graph::build(2 * n, edges)?)
}

/// Sunlet with pendant paths instead of single pendant edges: a chain of
/// `pendant_lengths[i]` edges hangs from cycle vertex `i`. Pendant
/// vertices are labelled after the cycle, chain by chain, inner to outer.
pub fn gen_generalized_sunlet(n: usize, pendant_lengths: &[usize]) -> Result<Graph, FamilyError> {
    if n < 3 {
        return Err(FamilyError::TooSmall {
            what: "cycle",
            got: n,
            min: 3,
        });
    }
    if pendant_lengths.len() != n {
        return Err(FamilyError::LengthMismatch {
            expected: n,
            got: pendant_lengths.len(),
        });
    }
    if pendant_lengths.contains(&0) {
        return Err(FamilyError::TooSmall {
            what: "pendant path",
            got: 0,
            min: 1,
        });
    }
    let mut edges: Vec<(usize, usize)> = (0..n).map(|i| (i, (i + 1) % n)).collect();
    let mut next = n;
    for (i, &len) in pendant_lengths.iter().enumerate() {
        let mut prev = i;
        for _ in 0..len {
            edges.push((prev, next));
            prev = next;
            next += 1;
        }
    }
    Ok(Graph::build(next, edges)?)
}

/// Uniform labelled tree on `n` vertices from its code sequence
/// (`seq` has length `n - 2`, entries in `0..n`).
pub fn tree_from_pruefer(n: usize, seq: &[usize]) -> Graph {
    assert!(n >= 2);
    assert_eq!(seq.len(), n - 2);
    let mut degree = vec![1usize; n];
    for &v in seq {
        assert!(v < n);
        degree[v] += 1;
    }
    let mut leaves: std::collections::BTreeSet<usize> = (0..n)
        .filter(|&v| degree[v] == 1)
        .collect();
    let mut edges = Vec::with_capacity(n - 1);
    for &v in seq {
        let leaf = *leaves.iter().next().expect("a leaf always remains");
        leaves.remove(&leaf);
        edges.push((leaf, v));
        degree[leaf] -= 1;
        degree[v] -= 1;
        if degree[v] == 1 {
            leaves.insert(v);
        }
    }
    let rest: Vec<usize> = leaves.into_iter().collect();
    debug_assert_eq!(rest.len(), 2);
    edges.push((rest[0], rest[1]));
    Graph::build(n, edges).expect("code sequences decode to valid trees")
}

/// Random labelled tree: n ~ U[2, max_n], then a uniform code sequence.
pub fn gen_random_tree(max_n: usize, seed: u64) -> Result<Graph, FamilyError> {
    if max_n < 2 {
        return Err(FamilyError::TooSmall {
            what: "max_n",
            got: max_n,
            min: 2,
        });
    }
    let mut rng = ChaCha8Rng::seed_from_u64(seed);
    let n = rng.gen_range(2..=max_n);
    let seq: Vec<usize> = (0..n.saturating_sub(2)).map(|_| rng.gen_range(0..n)).collect();
    Ok(tree_from_pruefer(n, &seq))
}

/// Random caterpillar with at most `max_n` vertices: spine length
/// ~ U[1, max_n], then per-vertex leaf counts ~ U[0, 2] clipped to the
/// remaining vertex budget. A lone spine vertex always receives a leaf.
pub fn gen_random_caterpillar(max_n: usize, seed: u64) -> Result<Graph, FamilyError> {
    if max_n < 2 {
        return Err(FamilyError::TooSmall {
            what: "max_n",
            got: max_n,
            min: 2,
        });
    }
    let mut rng = ChaCha8Rng::seed_from_u64(seed);
    let spine = rng.gen_range(1..=max_n);
    let mut budget = max_n - spine;
    let mut counts = Vec::with_capacity(spine);
    for _ in 0..spine {
        let c = rng.gen_range(0..=2usize.min(budget));
        budget -= c;
        counts.push(c);
    }
    if spine == 1 && counts[0] == 0 {
        counts[0] = 1;
    }
    gen_caterpillar(spine, &counts)
}

/// Random lobster with at most `max_n` vertices: spine length
/// ~ U[1, max(1, max_n / 3)], then 0..=2 pendant paths per spine vertex
/// with lengths ~ U{1, 2}, clipped to the remaining vertex budget. A lone
/// bare spine vertex always receives one pendant edge.
pub fn gen_random_lobster(max_n: usize, seed: u64) -> Result<Graph, FamilyError> {
    if max_n < 2 {
        return Err(FamilyError::TooSmall {
            what: "max_n",
            got: max_n,
            min: 2,
        });
    }
    let mut rng = ChaCha8Rng::seed_from_u64(seed);
    let spine = rng.gen_range(1..=(max_n / 3).max(1));
    let mut budget = max_n - spine;
    let mut attachments: Vec<Vec<u8>> = Vec::with_capacity(spine);
    for _ in 0..spine {
        let want = rng.gen_range(0..=2usize);
        let mut paths = Vec::new();
        for _ in 0..want {
            if budget == 0 {
                break;
            }
            let len = rng.gen_range(1..=2u8).min(budget as u8);
            budget -= len as usize;
            paths.push(len);
        }
        attachments.push(paths);
    }
    if spine == 1 && attachments[0].is_empty() {
        attachments[0].push(1);
    }
    gen_lobster(spine, &attachments)
}

/// Random generalized sunlet with at most `max_total` vertices: cycle size
/// ~ U[3, max_total / 2], then pendant path lengths 1 + U[0, 2] clipped to
/// the remaining vertex budget.
pub fn gen_random_generalized_sunlet(max_total: usize, seed: u64) -> Result<Graph, FamilyError> {
    if max_total < 6 {
        return Err(FamilyError::TooSmall {
            what: "max_total",
            got: max_total,
            min: 6,
        });
    }
    let mut rng = ChaCha8Rng::seed_from_u64(seed);
    let n = rng.gen_range(3..=max_total / 2);
    let mut budget = max_total - 2 * n;
    let lengths: Vec<usize> = (0..n)
        .map(|_| {
            let extra = rng.gen_range(0..=2usize.min(budget));
            budget -= extra;
            1 + extra
        })
        .collect();
    gen_generalized_sunlet(n, &lengths)
}

/// Parametric family description. `Random*` kinds need a seed at
/// generation time (see [`FamilySpec`]).
#[derive(Debug, Clone, PartialEq, Eq)]
pub enum FamilyKind {
    Path { n: usize },
    Spider { legs: Vec<usize> },
    Caterpillar { leaf_counts: Vec<usize> },
    Lobster { attachments: Vec<Vec<u8>> },
    Tm { m: usize },
    Sunlet { n: usize },
    GeneralizedSunlet { pendant_lengths: Vec<usize> },
    RandomTree { max_n: usize },
    RandomCaterpillar { max_n: usize },
    RandomLobster { max_n: usize },
    RandomGeneralizedSunlet { max_total: usize },
}

impl FamilyKind {
    pub fn is_random(&self) -> bool {
        matches!(
            self,
            FamilyKind::RandomTree { .. }
                | FamilyKind::RandomCaterpillar { .. }
                | FamilyKind::RandomLobster { .. }
                | FamilyKind::RandomGeneralizedSunlet { .. }
        )
    }
}

impl fmt::Display for FamilyKind {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        match self {
            FamilyKind::Path { n } => write!(f, "path:{n}"),
            FamilyKind::Spider { legs } => write!(f, "spider:{}", join(legs)),
            FamilyKind::Caterpillar { leaf_counts } => {
                write!(f, "caterpillar:{}:{}", leaf_counts.len(), join(leaf_counts))
            }
            FamilyKind::Lobster { attachments } => {
                let groups: Vec<String> = attachments
                    .iter()
                    .map(|paths| paths.iter().map(|l| l.to_string()).collect())
                    .collect();
                write!(f, "lobster:{}:{}", attachments.len(), groups.join(","))
            }
            FamilyKind::Tm { m } => write!(f, "tm:{m}"),
            FamilyKind::Sunlet { n } => write!(f, "sunlet:{n}"),
            FamilyKind::GeneralizedSunlet { pendant_lengths } => write!(
                f,
                "gsunlet:{}:{}",
                pendant_lengths.len(),
                join(pendant_lengths)
            ),
            FamilyKind::RandomTree { max_n } => write!(f, "rtree:{max_n}"),
            FamilyKind::RandomCaterpillar { max_n } => write!(f, "rcaterpillar:{max_n}"),
            FamilyKind::RandomLobster { max_n } => write!(f, "rlobster:{max_n}"),
            FamilyKind::RandomGeneralizedSunlet { max_total } => {
                write!(f, "rgsunlet:{max_total}")
            }
        }
    }
}

fn join(nums: &[usize]) -> String {
    nums.iter()
        .map(|n| n.to_string())
        .collect::<Vec<_>>()
        .join(",")
}

/// A family kind plus the seed consumed by the random kinds.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct FamilySpec {
    pub kind: FamilyKind,
    pub seed: Option<u64>,
}

impl FamilySpec {
    pub fn new(kind: FamilyKind) -> Self {
        FamilySpec { kind, seed: None }
    }

    pub fn with_seed(kind: FamilyKind, seed: u64) -> Self {
        FamilySpec {
            kind,
            seed: Some(seed),
        }
    }

    /// Parses the compact textual form, e.g. `tm:3`, `sunlet:5`,
    /// `caterpillar:4:2,0,1,3`, `lobster:3:12,,2`, `rlobster:20`.
    pub fn parse(text: &str) -> Result<Self, FamilyError> {
        Ok(FamilySpec::new(parse_kind(text)?))
    }

    /// Builds the graph. Random kinds require `seed`.
    pub fn generate(&self) -> Result<Graph, FamilyError> {
        let seed = || {
            self.seed
                .ok_or_else(|| FamilyError::MissingSeed(self.kind.to_string()))
        };
        match &self.kind {
            FamilyKind::Path { n } => gen_path(*n),
            FamilyKind::Spider { legs } => gen_spider(legs),
            FamilyKind::Caterpillar { leaf_counts } => {
                gen_caterpillar(leaf_counts.len(), leaf_counts)
            }
            FamilyKind::Lobster { attachments } => gen_lobster(attachments.len(), attachments),
            FamilyKind::Tm { m } => gen_tm(*m),
            FamilyKind::Sunlet { n } => gen_sunlet(*n),
            FamilyKind::GeneralizedSunlet { pendant_lengths } => {
                gen_generalized_sunlet(pendant_lengths.len(), pendant_lengths)
            }
            FamilyKind::RandomTree { max_n } => gen_random_tree(*max_n, seed()?),
            FamilyKind::RandomCaterpillar { max_n } => gen_random_caterpillar(*max_n, seed()?),
            FamilyKind::RandomLobster { max_n } => gen_random_lobster(*max_n, seed()?),
            FamilyKind::RandomGeneralizedSunlet { max_total } => {
                gen_random_generalized_sunlet(*max_total, seed()?)
            }
        }
    }

    /// Stable label for reports: the compact form, plus `#seed` if set.
    pub fn label(&self) -> String {
        match self.seed {
            Some(s) => format!("{}#{}", self.kind, s),
            None => self.kind.to_string(),
        }
    }
}

/// Deterministic draw of a random-kind spec (helper matching the op-level
/// contract: the seed must be present).
pub fn gen_random_family(spec: &FamilySpec) -> Result<Graph, FamilyError> {
    if spec.kind.is_random() && spec.seed.is_none() {
        return Err(FamilyError::MissingSeed(spec.kind.to_string()));
    }
    spec.generate()
}

fn parse_kind(text: &str) -> Result<FamilyKind, FamilyError> {
    let bad = |reason: &str| FamilyError::Parse {
        spec: text.to_string(),
        reason: reason.to_string(),
    };
    let (head, rest) = text.split_once(':').unwrap_or((text, ""));
    let one_usize = |what: &str| -> Result<usize, FamilyError> {
        rest.parse::<usize>()
            .map_err(|_| bad(&format!("expected `{head}:<{what}>`")))
    };
    match head {
        "path" => Ok(FamilyKind::Path { n: one_usize("n")? }),
        "tm" => Ok(FamilyKind::Tm { m: one_usize("m")? }),
        "sunlet" => Ok(FamilyKind::Sunlet { n: one_usize("n")? }),
        "rtree" => Ok(FamilyKind::RandomTree {
            max_n: one_usize("max_n")?,
        }),
        "rcaterpillar" => Ok(FamilyKind::RandomCaterpillar {
            max_n: one_usize("max_n")?,
        }),
        "rlobster" => Ok(FamilyKind::RandomLobster {
            max_n: one_usize("max_n")?,
        }),
        "rgsunlet" => Ok(FamilyKind::RandomGeneralizedSunlet {
            max_total: one_usize("max_total")?,
        }),
        "spider" => {
            let legs = parse_usize_list(rest).ok_or_else(|| bad("expected `spider:l1,l2,...`"))?;
            Ok(FamilyKind::Spider { legs })
        }
        "caterpillar" => {
            let (len_str, counts_str) = rest
                .split_once(':')
                .ok_or_else(|| bad("expected `caterpillar:<spine>:<c0,c1,...>`"))?;
            let spine: usize = len_str
                .parse()
                .map_err(|_| bad("spine length must be an integer"))?;
            let leaf_counts = parse_usize_list(counts_str)
                .ok_or_else(|| bad("leaf counts must be integers"))?;
            if leaf_counts.len() != spine {
                return Err(FamilyError::LengthMismatch {
                    expected: spine,
                    got: leaf_counts.len(),
                });
            }
            Ok(FamilyKind::Caterpillar { leaf_counts })
        }
        "lobster" => {
            let (len_str, groups_str) = rest
                .split_once(':')
                .ok_or_else(|| bad("expected `lobster:<spine>:<digits,digits,...>`"))?;
            let spine: usize = len_str
                .parse()
                .map_err(|_| bad("spine length must be an integer"))?;
            let mut attachments = Vec::new();
            for group in groups_str.split(',') {
                let mut paths = Vec::new();
                for ch in group.chars() {
                    let d = ch
                        .to_digit(10)
                        .ok_or_else(|| bad("attachment groups are digit strings"))?;
                    paths.push(d as u8);
                }
                attachments.push(paths);
            }
            if attachments.len() != spine {
                return Err(FamilyError::LengthMismatch {
                    expected: spine,
                    got: attachments.len(),
                });
            }
            Ok(FamilyKind::Lobster { attachments })
        }
        "gsunlet" => {
            let (n_str, lens_str) = rest
                .split_once(':')
                .ok_or_else(|| bad("expected `gsunlet:<n>:<l0,l1,...>`"))?;
            let n: usize = n_str
                .parse()
                .map_err(|_| bad("cycle size must be an integer"))?;
            let pendant_lengths =
                parse_usize_list(lens_str).ok_or_else(|| bad("pendant lengths must be integers"))?;
            if pendant_lengths.len() != n {
                return Err(FamilyError::LengthMismatch {
                    expected: n,
                    got: pendant_lengths.len(),
                });
            }
            Ok(FamilyKind::GeneralizedSunlet { pendant_lengths })
        }
        other => Err(bad(&format!("unknown family `{other}`"))),
    }
}

fn parse_usize_list(text: &str) -> Option<Vec<usize>> {
    if text.is_empty() {
        return None;
    }
    text.split(',').map(|t| t.parse::<usize>().ok()).collect()
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::graph::{decompose_lobster, strip_leaves, VertexRole};

    #[test]
    fn path_examples() {
        assert_eq!(gen_path(2).unwrap().edges(), &[(0, 1)]);
        assert_eq!(gen_path(5).unwrap().leaves(), vec![0, 4]);
        assert!(matches!(gen_path(1), Err(FamilyError::TooSmall { .. })));
    }

    #[test]
    fn spider_examples() {
        let k13 = gen_spider(&[1, 1, 1]).unwrap();
        assert_eq!(k13.leaves(), vec![1, 2, 3]);
        let s = gen_spider(&[2, 2, 2]).unwrap();
        assert_eq!(s.vertex_count(), 7);
        assert_eq!(s.degree(0), 3);
        assert_eq!(gen_spider(&[1, 1]), Err(FamilyError::NotASpider(2)));
        assert_eq!(gen_spider(&[1, 0, 2]), Err(FamilyError::EmptyLeg));
    }

    #[test]
    fn caterpillar_examples() {
        let p3 = gen_caterpillar(3, &[0, 0, 0]).unwrap();
        assert_eq!(p3, gen_path(3).unwrap());
        let double_star = gen_caterpillar(2, &[2, 2]).unwrap();
        assert_eq!(double_star.vertex_count(), 6);
        let k13 = gen_caterpillar(1, &[3]).unwrap();
        assert_eq!(k13.degree(0), 3);
        assert!(matches!(
            gen_caterpillar(2, &[1]),
            Err(FamilyError::LengthMismatch { expected: 2, got: 1 })
        ));
        // One stripping of a caterpillar is a path.
        let g = gen_caterpillar(4, &[2, 0, 1, 3]).unwrap();
        let (stripped, _) = strip_leaves(&g);
        assert!(stripped.is_path_graph());
    }

    #[test]
    fn lobster_examples() {
        // All attachments of length 1 give a caterpillar.
        let g = gen_lobster(3, &[vec![1], vec![], vec![1, 1]]).unwrap();
        let (stripped, _) = strip_leaves(&g);
        assert!(stripped.is_path_graph());
        // A single spine vertex with three 2-paths is the [2,2,2] spider.
        let s = gen_lobster(1, &[vec![2, 2, 2]]).unwrap();
        assert_eq!(s.vertex_count(), 7);
        assert!(decompose_lobster(&s).is_ok());
        assert_eq!(
            gen_lobster(1, &[vec![3]]),
            Err(FamilyError::BadAttachmentLength(3))
        );
    }

    #[test]
    fn tm_shape() {
        let t2 = gen_tm(2).unwrap();
        assert_eq!(t2.vertex_count(), 11);
        let t3 = gen_tm(3).unwrap();
        assert_eq!(t3.vertex_count(), 15);
        assert_eq!(t3.degree(1), 4);
        assert_eq!(t3.degree(2), 4);
        assert_eq!(t3.degree(0), 2);
        // 2m pendant ends.
        assert_eq!(t3.leaves().len(), 6);
        assert!(matches!(gen_tm(0), Err(FamilyError::TooSmall { .. })));
    }

    #[test]
    fn tm_decomposes_with_v0_as_the_only_spinal_deg2() {
        for m in 2..=4 {
            let g = gen_tm(m).unwrap();
            let d = decompose_lobster(&g).unwrap();
            assert_eq!(d.spine, vec![1, 0, 2]);
            assert_eq!(d.roles[0], VertexRole::SpinalDeg2);
            assert_eq!(d.roles[1], VertexRole::SpinalOther);
            assert_eq!(d.roles[2], VertexRole::SpinalOther);
            let spinal_deg2 = d
                .roles
                .iter()
                .filter(|&&r| r == VertexRole::SpinalDeg2)
                .count();
            assert_eq!(spinal_deg2, 1);
        }
    }

    #[test]
    fn sunlet_shapes() {
        let s3 = gen_sunlet(3).unwrap();
        assert_eq!(s3.vertex_count(), 6);
        let mut degs: Vec<usize> = (0..6).map(|v| s3.degree(v)).collect();
        degs.sort_unstable();
        assert_eq!(degs, vec![1, 1, 1, 3, 3, 3]);
        assert_eq!(gen_sunlet(4).unwrap().vertex_count(), 8);
        assert!(matches!(gen_sunlet(2), Err(FamilyError::TooSmall { .. })));
    }

    #[test]
    fn sunlet_independence_number_is_n() {
        use crate::count::oracle::oracle_star_table;
        for n in 3..=8 {
            let g = gen_sunlet(n).unwrap();
            assert_eq!(oracle_star_table(&g, None).alpha(), n);
        }
    }

    #[test]
    fn generalized_sunlet_shapes() {
        let g = gen_generalized_sunlet(3, &[1, 1, 1]).unwrap();
        assert_eq!(g, gen_sunlet(3).unwrap());
        let g = gen_generalized_sunlet(3, &[1, 2, 3]).unwrap();
        assert_eq!(g.vertex_count(), 9);
        assert!(matches!(
            gen_generalized_sunlet(3, &[1, 2]),
            Err(FamilyError::LengthMismatch { .. })
        ));
    }

    #[test]
    fn pruefer_decodes_paths_and_stars() {
        // Sequence [1, 2] on 4 vertices decodes to the path 0-1-2-3.
        let p = tree_from_pruefer(4, &[1, 2]);
        assert!(p.is_tree());
        assert_eq!(p.edges(), &[(0, 1), (1, 2), (2, 3)]);
        // A constant sequence decodes to a star.
        let s = tree_from_pruefer(5, &[0, 0, 0]);
        assert_eq!(s.degree(0), 4);
    }

    #[test]
    fn random_generators_are_deterministic_and_valid() {
        for seed in 0..25 {
            let a = gen_random_lobster(20, seed).unwrap();
            let b = gen_random_lobster(20, seed).unwrap();
            assert_eq!(a, b);
            assert!(a.vertex_count() <= 20);
            assert!(decompose_lobster(&a).is_ok());

            let c = gen_random_caterpillar(20, seed).unwrap();
            assert!(c.is_tree());
            let (stripped, _) = strip_leaves(&c);
            assert!(stripped.is_path_graph());

            let t = gen_random_tree(12, seed).unwrap();
            assert!(t.is_tree());

            let s = gen_random_generalized_sunlet(18, seed).unwrap();
            assert!(s.vertex_count() <= 18);
            assert_eq!(
                gen_random_generalized_sunlet(18, seed).unwrap(),
                s
            );
        }
    }

    #[test]
    fn spec_parsing_round_trips() {
        for text in [
            "path:5",
            "spider:2,2,2",
            "caterpillar:4:2,0,1,3",
            "lobster:3:12,,2",
            "tm:3",
            "sunlet:5",
            "gsunlet:3:1,2,3",
            "rtree:12",
            "rcaterpillar:20",
            "rlobster:20",
            "rgsunlet:18",
        ] {
            let spec = FamilySpec::parse(text).unwrap();
            assert_eq!(spec.kind.to_string(), text);
        }
        assert!(FamilySpec::parse("widget:3").is_err());
        assert!(FamilySpec::parse("path:x").is_err());
        assert!(FamilySpec::parse("caterpillar:3:1,2").is_err());
    }

    #[test]
    fn random_specs_require_seeds() {
        let spec = FamilySpec::parse("rlobster:20").unwrap();
        assert!(matches!(
            gen_random_family(&spec),
            Err(FamilyError::MissingSeed(_))
        ));
        let seeded = FamilySpec::with_seed(spec.kind, 7);
        assert!(gen_random_family(&seeded).is_ok());
    }
}
