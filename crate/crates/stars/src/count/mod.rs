//! Exact counting of independent sets and star sizes.
//!
//! Three interchangeable engines produce the same [`StarTable`]:
//! brute-force enumeration ([`oracle`]), a subtree product recursion for
//! trees ([`tree_dp`]), and a pivot deletion recursion ([`branching`]).
//! All counts are arbitrary-precision integers; nothing overflows.

pub mod branching;
pub mod oracle;
pub mod tree_dp;

use std::fmt;

use num_bigint::BigUint;
use num_traits::{One, Zero};
use thiserror::Error;

use crate::graph::Graph;

/// Auto-engine runs the enumeration cross-check on graphs up to this many
/// vertices and reports [`EngineError::EngineDiff`] on any mismatch.
pub const AUTO_ORACLE_CROSSCHECK_MAX_N: usize = 10;

#[derive(Debug, Error, Clone, PartialEq, Eq)]
pub enum EngineError {
    #[error("not a tree")]
    NotATree,
    #[error("engine {engine} cannot handle this graph: {reason}")]
    EngineMismatch {
        engine: &'static str,
        reason: &'static str,
    },
    #[error("engines disagree: {0}")]
    EngineDiff(String),
}

/// Coefficient vector: entry `k` counts the independent sets of size `k`
/// in scope. Trailing zeros are trimmed so equal counts compare equal;
/// [`CountVector::get`] returns zero beyond the stored length.
#[derive(Clone, PartialEq, Eq, Default)]
pub struct CountVector(Vec<BigUint>);

impl CountVector {
    pub fn zero() -> Self {
        CountVector(Vec::new())
    }

    /// The constant 1: exactly the empty set.
    pub fn one() -> Self {
        CountVector(vec![BigUint::one()])
    }

    /// A single set of size one.
    pub fn monomial_x() -> Self {
        CountVector(vec![BigUint::zero(), BigUint::one()])
    }

    pub fn from_coeffs(mut coeffs: Vec<BigUint>) -> Self {
        while coeffs.last().is_some_and(|c| c.is_zero()) {
            coeffs.pop();
        }
        CountVector(coeffs)
    }

    pub fn from_u64s(coeffs: &[u64]) -> Self {
        Self::from_coeffs(coeffs.iter().map(|&c| BigUint::from(c)).collect())
    }

    pub fn coeffs(&self) -> &[BigUint] {
        &self.0
    }

    /// Count at size `k` (zero past the end).
    pub fn get(&self, k: usize) -> BigUint {
        self.0.get(k).cloned().unwrap_or_default()
    }

    /// Largest `k` with a nonzero count (0 for the zero vector).
    pub fn alpha(&self) -> usize {
        self.0.len().saturating_sub(1)
    }

    pub fn is_zero(&self) -> bool {
        self.0.is_empty()
    }

    pub fn add(&self, rhs: &Self) -> Self {
        let mut out = vec![BigUint::zero(); self.0.len().max(rhs.0.len())];
        for (i, c) in self.0.iter().enumerate() {
            out[i] += c;
        }
        for (i, c) in rhs.0.iter().enumerate() {
            out[i] += c;
        }
        Self::from_coeffs(out)
    }

    /// Convolution, optionally truncated at size `cap`.
    pub fn mul(&self, rhs: &Self, cap: Option<usize>) -> Self {
        if self.0.is_empty() || rhs.0.is_empty() {
            return Self::zero();
        }
        let full = self.0.len() + rhs.0.len() - 1;
        let len = cap.map_or(full, |c| full.min(c + 1));
        let mut out = vec![BigUint::zero(); len];
        for (i, a) in self.0.iter().enumerate() {
            if i >= len || a.is_zero() {
                continue;
            }
            for (j, b) in rhs.0.iter().enumerate() {
                if i + j >= len {
                    break;
                }
                out[i + j] += a * b;
            }
        }
        Self::from_coeffs(out)
    }

    /// Multiplication by x: each counted set gains one element.
    pub fn shift_up(&self, cap: Option<usize>) -> Self {
        if self.0.is_empty() {
            return Self::zero();
        }
        let mut out = Vec::with_capacity(self.0.len() + 1);
        out.push(BigUint::zero());
        out.extend(self.0.iter().cloned());
        if let Some(c) = cap {
            out.truncate(c + 1);
        }
        Self::from_coeffs(out)
    }

    pub fn truncated(&self, k_max: usize) -> Self {
        Self::from_coeffs(self.0.iter().take(k_max + 1).cloned().collect())
    }
}

impl fmt::Debug for CountVector {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        let parts: Vec<String> = self.0.iter().map(|c| c.to_string()).collect();
        write!(f, "[{}]", parts.join(", "))
    }
}

/// Binomial coefficients C(m, k) for k = 0..=m (edgeless-graph counts).
pub fn binomial_vector(m: usize, cap: Option<usize>) -> CountVector {
    let len = cap.map_or(m, |c| c.min(m)) + 1;
    let mut out = Vec::with_capacity(len);
    let mut c = BigUint::one();
    out.push(c.clone());
    for k in 1..len {
        c = c * BigUint::from(m - k + 1) / BigUint::from(k);
        out.push(c.clone());
    }
    CountVector::from_coeffs(out)
}

#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub enum Engine {
    Oracle,
    TreeDp,
    Branching,
    Auto,
}

impl Engine {
    pub fn name(&self) -> &'static str {
        match self {
            Engine::Oracle => "oracle",
            Engine::TreeDp => "treedp",
            Engine::Branching => "branching",
            Engine::Auto => "auto",
        }
    }
}

impl fmt::Display for Engine {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.write_str(self.name())
    }
}

/// Whole-graph counts plus the star size |I^k(v)| for every vertex and k.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct StarTable {
    /// Counts for the whole graph; entry 0 is always 1 (the empty set).
    pub whole: CountVector,
    /// Entry `v` holds the per-size counts of independent sets containing `v`.
    pub stars: Vec<CountVector>,
}

impl StarTable {
    /// Independence number as far as this table extends (equals the true
    /// independence number for uncapped tables).
    pub fn alpha(&self) -> usize {
        self.whole.alpha()
    }

    pub fn vertex_count(&self) -> usize {
        self.stars.len()
    }

    pub fn star(&self, v: usize, k: usize) -> BigUint {
        self.stars[v].get(k)
    }
}

/// Full star table with every count up to the independence number.
pub fn star_table(g: &Graph, engine: Engine) -> Result<StarTable, EngineError> {
    star_table_capped(g, engine, None)
}

/// Star table truncated at `cap` (entries for k <= cap only).
pub fn star_table_capped(
    g: &Graph,
    engine: Engine,
    cap: Option<usize>,
) -> Result<StarTable, EngineError> {
    match engine {
        Engine::Oracle => Ok(oracle::oracle_star_table(g, cap)),
        Engine::TreeDp => {
            if !g.is_tree() {
                return Err(EngineError::EngineMismatch {
                    engine: "treedp",
                    reason: "requires a tree",
                });
            }
            tree_dp::tree_star_table(g, cap)
        }
        Engine::Branching => Ok(branching::branching_star_table(g, cap)),
        Engine::Auto => {
            let table = if g.is_tree() {
                tree_dp::tree_star_table(g, cap)?
            } else {
                branching::branching_star_table(g, cap)
            };
            if g.vertex_count() <= AUTO_ORACLE_CROSSCHECK_MAX_N {
                let reference = oracle::oracle_star_table(g, cap);
                if let Some(diff) = diff_tables("auto", &table, "oracle", &reference) {
                    return Err(EngineError::EngineDiff(diff));
                }
            }
            Ok(table)
        }
    }
}

/// First difference between two tables, if any, as a human-readable line.
pub fn diff_tables(
    label_a: &str,
    a: &StarTable,
    label_b: &str,
    b: &StarTable,
) -> Option<String> {
    if a.whole != b.whole {
        return Some(format!(
            "whole-graph counts differ: {label_a}={:?} {label_b}={:?}",
            a.whole, b.whole
        ));
    }
    if a.stars.len() != b.stars.len() {
        return Some(format!(
            "vertex counts differ: {label_a}={} {label_b}={}",
            a.stars.len(),
            b.stars.len()
        ));
    }
    for v in 0..a.stars.len() {
        if a.stars[v] != b.stars[v] {
            return Some(format!(
                "star counts at vertex {v} differ: {label_a}={:?} {label_b}={:?}",
                a.stars[v], b.stars[v]
            ));
        }
    }
    None
}
