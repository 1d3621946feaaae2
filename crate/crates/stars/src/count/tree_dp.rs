//! Tree engine: the classic in/out recursion over a rooted tree.
//!
//! For a node `u` with children `c`, the sets containing `u` are built
//! from sets avoiding every child, and the sets avoiding `u` combine each
//! child's two alternatives:
//!
//! ```text
//! in(u)  = x * prod_c out(c)
//! out(u) = prod_c (in(c) + out(c))
//! ```
//!
//! Products are coefficient-wise convolutions with exact integers.

use super::{CountVector, EngineError, StarTable};
use crate::exec;
use crate::graph::Graph;

/// Counts independent sets of a tree split by whether they contain `root`.
///
/// Returns `(in_vector, out_vector)`: sets containing the root and sets
/// avoiding it (the empty set counts in the latter).
pub fn count_tree_dp(
    g: &Graph,
    root: usize,
    cap: Option<usize>,
) -> Result<(CountVector, CountVector), EngineError> {
    if !g.is_tree() {
        return Err(EngineError::NotATree);
    }
    let n = g.vertex_count();
    assert!(root < n, "root {root} out of range");

    // BFS order from the root; children are processed before parents by
    // walking it in reverse.
    let mut parent = vec![usize::MAX; n];
    let mut order = Vec::with_capacity(n);
    let mut seen = vec![false; n];
    seen[root] = true;
    order.push(root);
    let mut head = 0;
    while head < order.len() {
        let u = order[head];
        head += 1;
        for &w in g.neighbors(u) {
            if !seen[w] {
                seen[w] = true;
                parent[w] = u;
                order.push(w);
            }
        }
    }

    let mut prod_out = vec![CountVector::one(); n];
    let mut prod_mix = vec![CountVector::one(); n];
    for &v in order.iter().rev() {
        let below_out = std::mem::take(&mut prod_out[v]);
        let below_mix = std::mem::take(&mut prod_mix[v]);
        let in_v = below_out.shift_up(cap);
        let out_v = below_mix;
        if v == root {
            return Ok((in_v, out_v));
        }
        let p = parent[v];
        prod_out[p] = prod_out[p].mul(&out_v, cap);
        prod_mix[p] = prod_mix[p].mul(&in_v.add(&out_v), cap);
    }
    unreachable!("root is always last in reverse BFS order");
}

/// Star table for a tree: one rooted run per vertex, whole-graph counts
/// from the run rooted at vertex 0. Per-vertex runs are independent and
/// fan out in parallel.
pub fn tree_star_table(g: &Graph, cap: Option<usize>) -> Result<StarTable, EngineError> {
    if !g.is_tree() {
        return Err(EngineError::NotATree);
    }
    let n = g.vertex_count();
    let (in0, out0) = count_tree_dp(g, 0, cap)?;
    let whole = in0.add(&out0);
    let stars = exec::map_indexed(n, |v| {
        let (in_v, _) = count_tree_dp(g, v, cap).expect("tree checked above");
        in_v
    });
    Ok(StarTable { whole, stars })
}
