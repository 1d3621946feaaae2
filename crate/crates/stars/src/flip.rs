//! Path flips and escape paths.
//!
//! Reversing a path maps its independent sets onto themselves and swaps
//! the stars at its two ends. An *escape path* `v1..vn` embedded in a
//! larger graph (deg(vn) = 1, deg(vi) = 2 for 2 <= i <= n-2; the
//! penultimate vertex is unconstrained) lets the same reversal act inside
//! the host graph: reversing the path and fixing everything else maps
//! independent sets containing `v1` injectively to independent sets
//! containing the pendant vertex `vn`, so |I^k(v1)| <= |I^k(vn)|.
//! [`verify_injection`] checks that claim by explicit enumeration.

use thiserror::Error;

use crate::count::oracle::enumerate_independent_sets;
use crate::graph::Graph;

#[derive(Debug, Error, Clone, PartialEq, Eq)]
pub enum FlipError {
    #[error("not an escape path: {0}")]
    InvalidEscapePath(String),
    #[error("hypothesis violated: {0}")]
    HypothesisViolation(String),
    #[error("injection counterexample on {witness:?}: {reason}")]
    CounterexampleFound { witness: Vec<usize>, reason: String },
}

/// A validated escape path `v1..vn` in some graph: consecutive vertices
/// adjacent, all distinct, the last vertex pendant, and every vertex
/// strictly between the start and the penultimate one of degree 2.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct EscapePath {
    vertices: Vec<usize>,
}

impl EscapePath {
    pub fn new(g: &Graph, vertices: Vec<usize>) -> Result<Self, FlipError> {
        Self::check(g, &vertices)?;
        Ok(EscapePath { vertices })
    }

    /// Validates the escape-path conditions for `seq` in `g`. Independent
    /// of the search in [`find_escape_paths`], so it doubles as the
    /// soundness oracle for it.
    pub fn check(g: &Graph, seq: &[usize]) -> Result<(), FlipError> {
        let fail = |msg: String| Err(FlipError::InvalidEscapePath(msg));
        if seq.len() < 2 {
            return fail(format!("need at least 2 vertices, got {}", seq.len()));
        }
        if let Some(&v) = seq.iter().find(|&&v| v >= g.vertex_count()) {
            return fail(format!("vertex {v} out of range"));
        }
        let mut sorted = seq.to_vec();
        sorted.sort_unstable();
        if sorted.windows(2).any(|w| w[0] == w[1]) {
            return fail("vertices repeat".to_string());
        }
        for w in seq.windows(2) {
            if !g.has_edge(w[0], w[1]) {
                return fail(format!("{} and {} are not adjacent", w[0], w[1]));
            }
        }
        let last = *seq.last().unwrap();
        if g.degree(last) != 1 {
            return fail(format!("end vertex {last} has degree {}", g.degree(last)));
        }
        // Interior vertices up to (but excluding) the penultimate one.
        for &v in seq.iter().take(seq.len().saturating_sub(2)).skip(1) {
            if g.degree(v) != 2 {
                return fail(format!("interior vertex {v} has degree {}", g.degree(v)));
            }
        }
        Ok(())
    }

    pub fn is_escape_path(g: &Graph, seq: &[usize]) -> bool {
        Self::check(g, seq).is_ok()
    }

    pub fn vertices(&self) -> &[usize] {
        &self.vertices
    }

    pub fn start(&self) -> usize {
        self.vertices[0]
    }

    pub fn end(&self) -> usize {
        *self.vertices.last().unwrap()
    }
}

/// Reversal of a path graph in canonical labeling (`v -> n - 1 - v`),
/// applied elementwise to a vertex set. Involution; maps independent sets
/// to independent sets.
pub fn flip_on_path(path: &Graph, set: &[usize]) -> Vec<usize> {
    assert!(
        path.is_canonical_path(),
        "flip_on_path expects a path labelled 0..n-1 in order"
    );
    let n = path.vertex_count();
    let mut out: Vec<usize> = set
        .iter()
        .map(|&v| {
            assert!(v < n, "vertex {v} outside the path");
            n - 1 - v
        })
        .collect();
    out.sort_unstable();
    out
}

/// All escape paths starting at `v`, ordered by increasing length, then by
/// end vertex, then lexicographically.
///
/// The search walks outward from `v` and only continues past a vertex once
/// the vertex before it is known to have degree 2: in a final path the
/// constraint set only grows with length, so this prefix pruning is exact
/// and the walk enumerates precisely the valid paths.
pub fn find_escape_paths(g: &Graph, v: usize) -> Vec<EscapePath> {
    assert!(v < g.vertex_count(), "vertex {v} out of range");
    let mut found: Vec<Vec<usize>> = Vec::new();
    let mut on_path = vec![false; g.vertex_count()];
    on_path[v] = true;
    let mut path = vec![v];
    walk(g, &mut path, &mut on_path, &mut found);
    found.sort_by(|a, b| {
        a.len()
            .cmp(&b.len())
            .then(a.last().cmp(&b.last()))
            .then(a.cmp(b))
    });
    found
        .into_iter()
        .map(|seq| {
            debug_assert!(EscapePath::is_escape_path(g, &seq));
            EscapePath { vertices: seq }
        })
        .collect()
}

fn walk(g: &Graph, path: &mut Vec<usize>, on_path: &mut [bool], found: &mut Vec<Vec<usize>>) {
    let cur = *path.last().unwrap();
    if path.len() >= 2 && g.degree(cur) == 1 {
        found.push(path.clone());
        return; // a pendant vertex has nowhere further to go
    }
    if path.len() >= 3 {
        // Extending would make the vertex before `cur` an interior vertex.
        let deep = path[path.len() - 2];
        if g.degree(deep) != 2 {
            return;
        }
    }
    for &z in g.neighbors(cur) {
        if !on_path[z] {
            on_path[z] = true;
            path.push(z);
            walk(g, path, on_path, found);
            path.pop();
            on_path[z] = false;
        }
    }
}

/// Applies the path reversal to `set` without checking any hypotheses:
/// vertices on the path reverse position, everything else stays fixed.
/// Exists so the failure modes on sets that do not contain the start
/// vertex can be exhibited; the image need not be independent.
pub fn flip_path_unchecked(path: &EscapePath, set: &[usize]) -> Vec<usize> {
    let verts = path.vertices();
    let mut out: Vec<usize> = set
        .iter()
        .map(|&v| match verts.iter().position(|&p| p == v) {
            Some(i) => verts[verts.len() - 1 - i],
            None => v,
        })
        .collect();
    out.sort_unstable();
    out
}

/// Checked flip: requires `path` valid in `g`, `set` independent, and the
/// path's start vertex in `set`. The image is then independent, contains
/// the pendant end, and has the same size.
pub fn flip_path(g: &Graph, path: &EscapePath, set: &[usize]) -> Result<Vec<usize>, FlipError> {
    EscapePath::check(g, path.vertices())?;
    if let Some((u, w)) = g.independence_conflict(set) {
        return Err(FlipError::HypothesisViolation(format!(
            "set is not independent: contains adjacent {u} and {w}"
        )));
    }
    if !set.contains(&path.start()) {
        return Err(FlipError::HypothesisViolation(format!(
            "set does not contain the start vertex {}",
            path.start()
        )));
    }
    Ok(flip_path_unchecked(path, set))
}

/// Outcome of explicitly checking the flip injection at one size `k`.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct InjectionReport {
    pub start: usize,
    pub end: usize,
    pub k: usize,
    /// |I^k(start)|, by enumeration.
    pub star_start: u64,
    /// |I^k(end)|, by enumeration.
    pub star_end: u64,
}

impl InjectionReport {
    pub fn inequality_holds(&self) -> bool {
        self.star_start <= self.star_end
    }
}

/// Enumerates the star at the path's start, flips every member, and checks
/// that the images are independent, contain the end vertex, and are
/// pairwise distinct. Any failure is reported as a counterexample with its
/// witness set; on valid inputs that signals an implementation bug.
pub fn verify_injection(
    g: &Graph,
    path: &EscapePath,
    k: usize,
) -> Result<InjectionReport, FlipError> {
    EscapePath::check(g, path.vertices())?;
    let start = path.start();
    let end = path.end();
    let all = enumerate_independent_sets(g, k);
    let star_start: Vec<&Vec<usize>> = all
        .iter()
        .filter(|s| s.binary_search(&start).is_ok())
        .collect();
    let star_end_count = all
        .iter()
        .filter(|s| s.binary_search(&end).is_ok())
        .count() as u64;

    let mut images = std::collections::BTreeSet::new();
    for set in &star_start {
        let image = flip_path(g, path, set).map_err(|e| FlipError::CounterexampleFound {
            witness: (*set).clone(),
            reason: e.to_string(),
        })?;
        if let Some((u, w)) = g.independence_conflict(&image) {
            return Err(FlipError::CounterexampleFound {
                witness: (*set).clone(),
                reason: format!("image {image:?} contains adjacent {u} and {w}"),
            });
        }
        if image.binary_search(&end).is_err() {
            return Err(FlipError::CounterexampleFound {
                witness: (*set).clone(),
                reason: format!("image {image:?} misses the end vertex {end}"),
            });
        }
        if image.len() != k {
            return Err(FlipError::CounterexampleFound {
                witness: (*set).clone(),
                reason: format!("image {image:?} changed size"),
            });
        }
        if !images.insert(image.clone()) {
            return Err(FlipError::CounterexampleFound {
                witness: (*set).clone(),
                reason: format!("image {image:?} repeats"),
            });
        }
    }
    Ok(InjectionReport {
        start,
        end,
        k,
        star_start: star_start.len() as u64,
        star_end: star_end_count,
    })
}
