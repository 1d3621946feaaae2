//! Exact computation of star sizes of k-independent sets in graphs.
//!
//! A *star* at a vertex `v` is the family of independent sets of a fixed
//! size `k` that contain `v`. This crate computes star sizes exactly, with
//! arbitrary-precision counts, through three interchangeable engines
//! (brute-force enumeration, a tree recursion, and a pivot deletion
//! recursion). On top of the counts it implements the escape-path flip: an
//! injection that bounds stars at inner vertices by stars at pendant
//! vertices, which is what makes HK verdicts for spiders, caterpillars,
//! lobsters, and sunlet graphs checkable by machine. The `tm` family
//! reproduces the classical counterexample tree whose largest mid-range
//! stars are centered at a spinal vertex of degree 2 rather than a leaf.
//!
//! With the default `parallel` feature, per-vertex tables and family
//! sweeps fan out over rayon; without it everything runs sequentially.
//! Outputs are byte-identical either way.

pub mod check;
pub mod count;
pub mod exec;
pub mod family;
pub mod flip;
pub mod graph;
pub mod hk;
pub mod io;
pub mod render;

pub use count::{star_table, CountVector, Engine, StarTable};
pub use family::{FamilyKind, FamilySpec};
pub use flip::{find_escape_paths, EscapePath};
pub use graph::{decompose_lobster, Graph, VertexRole};
pub use hk::hk_verdict;
