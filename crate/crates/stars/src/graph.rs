//! Immutable simple undirected graphs and the structural predicates the
//! rest of the crate builds on: degree queries, tree and path tests, leaf
//! stripping, and the lobster decomposition with per-vertex roles.

use std::fmt;

use thiserror::Error;

/// Errors raised while building or decomposing graphs.
#[derive(Debug, Error, Clone, PartialEq, Eq)]
pub enum GraphError {
    #[error("self-loop ({0}, {0}) is not allowed")]
    SelfLoop(usize),
    #[error("duplicate edge ({0}, {1})")]
    DuplicateEdge(usize, usize),
    #[error("edge ({0}, {1}) out of range for {2} vertices")]
    VertexOutOfRange(usize, usize, usize),
    #[error("not a tree (need n >= 2, connected, |E| = n - 1)")]
    NotATree,
    #[error("not a lobster: residue after two leaf strippings is not a path")]
    NotLobster,
}

/// Simple undirected graph on vertices `0..n`, immutable after construction.
///
/// Edges are stored canonically, `(u, v)` with `u < v` sorted
/// lexicographically, and adjacency lists are sorted, so equal graphs
/// render identically.
#[derive(Clone, PartialEq, Eq)]
pub struct Graph {
    n: usize,
    edges: Vec<(usize, usize)>,
    adj: Vec<Vec<usize>>,
}

impl Graph {
    /// Validates and builds a graph. Rejects self-loops, duplicate edges
    /// (in either orientation), and endpoints outside `0..n`.
    pub fn build(
        n: usize,
        edge_list: impl IntoIterator<Item = (usize, usize)>,
    ) -> Result<Self, GraphError> {
        let mut edges = Vec::new();
        for (u, v) in edge_list {
            if u >= n || v >= n {
                return Err(GraphError::VertexOutOfRange(u, v, n));
            }
            if u == v {
                return Err(GraphError::SelfLoop(u));
            }
            edges.push((u.min(v), u.max(v)));
        }
        edges.sort_unstable();
        if let Some(w) = edges.windows(2).find(|w| w[0] == w[1]) {
            return Err(GraphError::DuplicateEdge(w[0].0, w[0].1));
        }
        Ok(Self::from_canonical(n, edges))
    }

    /// Internal constructor for edge lists already canonical and valid.
    fn from_canonical(n: usize, edges: Vec<(usize, usize)>) -> Self {
        let mut adj = vec![Vec::new(); n];
        for &(u, v) in &edges {
            adj[u].push(v);
            adj[v].push(u);
        }
        for list in &mut adj {
            list.sort_unstable();
        }
        Graph { n, edges, adj }
    }

    pub fn vertex_count(&self) -> usize {
        self.n
    }

    pub fn edge_count(&self) -> usize {
        self.edges.len()
    }

    /// Edges in canonical order: `(u, v)` with `u < v`, sorted.
    pub fn edges(&self) -> &[(usize, usize)] {
        &self.edges
    }

    pub fn neighbors(&self, v: usize) -> &[usize] {
        &self.adj[v]
    }

    pub fn degree(&self, v: usize) -> usize {
        self.adj[v].len()
    }

    pub fn has_edge(&self, u: usize, v: usize) -> bool {
        self.adj[u].binary_search(&v).is_ok()
    }

    /// True when no two members of `set` are adjacent.
    pub fn is_independent(&self, set: &[usize]) -> bool {
        self.independence_conflict(set).is_none()
    }

    /// First adjacent pair inside `set`, if any.
    pub fn independence_conflict(&self, set: &[usize]) -> Option<(usize, usize)> {
        for (i, &u) in set.iter().enumerate() {
            for &v in &set[i + 1..] {
                if self.has_edge(u, v) {
                    return Some((u, v));
                }
            }
        }
        None
    }

    pub fn is_connected(&self) -> bool {
        if self.n <= 1 {
            return true;
        }
        let mut seen = vec![false; self.n];
        let mut stack = vec![0usize];
        seen[0] = true;
        let mut count = 1;
        while let Some(u) = stack.pop() {
            for &w in self.neighbors(u) {
                if !seen[w] {
                    seen[w] = true;
                    count += 1;
                    stack.push(w);
                }
            }
        }
        count == self.n
    }

    /// Trees need at least two vertices, connectivity, and `|E| = n - 1`.
    pub fn is_tree(&self) -> bool {
        self.n >= 2 && self.edges.len() == self.n - 1 && self.is_connected()
    }

    /// Pendant vertices (degree exactly 1), ascending.
    pub fn leaves(&self) -> Vec<usize> {
        (0..self.n).filter(|&v| self.degree(v) == 1).collect()
    }

    /// True for the empty graph, a single vertex, and any path.
    pub fn is_path_graph(&self) -> bool {
        if self.n <= 1 {
            return true;
        }
        self.edges.len() == self.n - 1
            && (0..self.n).all(|v| self.degree(v) <= 2)
            && self.is_connected()
    }

    /// True when vertex `i` is adjacent to `i + 1` for all `i` and nothing
    /// else, i.e. the graph is a path in label order.
    pub fn is_canonical_path(&self) -> bool {
        if self.n <= 1 {
            return self.edges.is_empty();
        }
        self.edges.len() == self.n - 1
            && self.edges.iter().enumerate().all(|(i, &e)| e == (i, i + 1))
    }

    /// Induced subgraph on the vertices with `keep[v] == true`.
    ///
    /// Returns the subgraph (vertices relabelled densely, preserving order)
    /// together with the remap table: entry `i` is the original id of new
    /// vertex `i`.
    pub fn induced_subgraph(&self, keep: &[bool]) -> (Graph, Vec<usize>) {
        assert_eq!(keep.len(), self.n);
        let kept: Vec<usize> = (0..self.n).filter(|&v| keep[v]).collect();
        let mut new_id = vec![usize::MAX; self.n];
        for (i, &v) in kept.iter().enumerate() {
            new_id[v] = i;
        }
        let edges: Vec<(usize, usize)> = self
            .edges
            .iter()
            .filter(|&&(u, v)| keep[u] && keep[v])
            .map(|&(u, v)| (new_id[u], new_id[v]))
            .collect();
        (Graph::from_canonical(kept.len(), edges), kept)
    }

    /// Subgraph with `v` and all of its neighbors removed.
    pub fn without_closed_neighborhood(&self, v: usize) -> (Graph, Vec<usize>) {
        let mut keep = vec![true; self.n];
        keep[v] = false;
        for &w in self.neighbors(v) {
            keep[w] = false;
        }
        self.induced_subgraph(&keep)
    }
}

impl fmt::Debug for Graph {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "Graph(n={}, edges={:?})", self.n, self.edges)
    }
}

/// Vertex classification relative to the lobster decomposition.
///
/// `Leaf` is any degree-1 vertex. The spinal roles apply to vertices of
/// the path left after stripping leaves twice; `SpinalDeg2` means the
/// vertex also has degree 2 in the original graph. Everything else is
/// `Internal`.
#[derive(Debug, Clone, Copy, PartialEq, Eq, PartialOrd, Ord, Hash)]
pub enum VertexRole {
    Leaf,
    SpinalDeg2,
    SpinalOther,
    Internal,
}

impl fmt::Display for VertexRole {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        let s = match self {
            VertexRole::Leaf => "Leaf",
            VertexRole::SpinalDeg2 => "SpinalDeg2",
            VertexRole::SpinalOther => "SpinalOther",
            VertexRole::Internal => "Internal",
        };
        f.write_str(s)
    }
}

/// Result of stripping leaves twice from a tree.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct LobsterDecomposition {
    /// Vertices surviving one stripping (the underlying caterpillar), ascending.
    pub caterpillar: Vec<usize>,
    /// Vertices surviving two strippings, in path order. Oriented so the
    /// endpoint with the smaller id comes first.
    pub spine: Vec<usize>,
    /// Role of every original vertex.
    pub roles: Vec<VertexRole>,
}

/// Induced subgraph on the non-leaf vertices, with the remap table.
pub fn strip_leaves(g: &Graph) -> (Graph, Vec<usize>) {
    let keep: Vec<bool> = (0..g.vertex_count()).map(|v| g.degree(v) != 1).collect();
    g.induced_subgraph(&keep)
}

/// Strips leaves twice and verifies the residue is a path.
///
/// Degenerate residues (empty graph, single vertex) count as paths, so
/// every small tree is a lobster under this convention. Errors with
/// `NotATree` for non-trees and `NotLobster` when the residue has a
/// vertex of degree 3 or more.
pub fn decompose_lobster(g: &Graph) -> Result<LobsterDecomposition, GraphError> {
    if !g.is_tree() {
        return Err(GraphError::NotATree);
    }
    let (cat, cat_ids) = strip_leaves(g);
    let (spine_graph, spine_in_cat) = strip_leaves(&cat);
    if !spine_graph.is_path_graph() {
        return Err(GraphError::NotLobster);
    }
    let spine_ids: Vec<usize> = spine_in_cat.iter().map(|&i| cat_ids[i]).collect();
    let spine = order_path(&spine_graph, &spine_ids);

    let mut on_spine = vec![false; g.vertex_count()];
    for &v in &spine {
        on_spine[v] = true;
    }
    let roles = (0..g.vertex_count())
        .map(|v| {
            if g.degree(v) == 1 {
                VertexRole::Leaf
            } else if on_spine[v] {
                if g.degree(v) == 2 {
                    VertexRole::SpinalDeg2
                } else {
                    VertexRole::SpinalOther
                }
            } else {
                VertexRole::Internal
            }
        })
        .collect();

    Ok(LobsterDecomposition {
        caterpillar: cat_ids,
        spine,
        roles,
    })
}

/// Orders the vertices of a path graph along the path, reporting original
/// ids. Starts from the endpoint with the smaller original id.
fn order_path(path_graph: &Graph, orig_ids: &[usize]) -> Vec<usize> {
    let m = path_graph.vertex_count();
    if m == 0 {
        return Vec::new();
    }
    if m == 1 {
        return vec![orig_ids[0]];
    }
    let mut ends: Vec<usize> = (0..m).filter(|&v| path_graph.degree(v) == 1).collect();
    debug_assert_eq!(ends.len(), 2);
    ends.sort_by_key(|&v| orig_ids[v]);
    let mut out = Vec::with_capacity(m);
    let mut prev = usize::MAX;
    let mut cur = ends[0];
    loop {
        out.push(orig_ids[cur]);
        let next = path_graph
            .neighbors(cur)
            .iter()
            .copied()
            .find(|&w| w != prev);
        match next {
            Some(w) => {
                prev = cur;
                cur = w;
            }
            None => break,
        }
    }
    out
}

#[cfg(test)]
mod tests {
    use super::*;

    fn path(n: usize) -> Graph {
        Graph::build(n, (0..n.saturating_sub(1)).map(|i| (i, i + 1))).unwrap()
    }

    fn cycle(n: usize) -> Graph {
        Graph::build(n, (0..n).map(|i| (i, (i + 1) % n))).unwrap()
    }

    #[test]
    fn build_k2() {
        let g = Graph::build(2, [(0, 1)]).unwrap();
        assert_eq!(g.degree(0), 1);
        assert_eq!(g.degree(1), 1);
        assert_eq!(g.edges(), &[(0, 1)]);
    }

    #[test]
    fn build_p3() {
        let g = Graph::build(3, [(0, 1), (1, 2)]).unwrap();
        assert_eq!(g.neighbors(1), &[0, 2]);
        assert!(g.has_edge(2, 1));
        assert!(!g.has_edge(0, 2));
    }

    #[test]
    fn build_rejects_self_loop() {
        assert_eq!(
            Graph::build(3, [(0, 1), (1, 1)]),
            Err(GraphError::SelfLoop(1))
        );
    }

    #[test]
    fn build_rejects_duplicate_edge() {
        assert_eq!(
            Graph::build(3, [(0, 1), (1, 0)]),
            Err(GraphError::DuplicateEdge(0, 1))
        );
    }

    #[test]
    fn build_rejects_out_of_range() {
        assert_eq!(
            Graph::build(2, [(0, 2)]),
            Err(GraphError::VertexOutOfRange(0, 2, 2))
        );
    }

    #[test]
    fn tree_predicate() {
        assert!(path(4).is_tree());
        assert!(!cycle(4).is_tree());
        assert!(!Graph::build(1, []).unwrap().is_tree());
        assert!(!Graph::build(4, [(0, 1), (2, 3)]).unwrap().is_tree());
    }

    #[test]
    fn leaves_examples() {
        assert_eq!(path(4).leaves(), vec![0, 3]);
        let star = Graph::build(4, [(0, 1), (0, 2), (0, 3)]).unwrap();
        assert_eq!(star.leaves(), vec![1, 2, 3]);
        assert!(cycle(4).leaves().is_empty());
    }

    #[test]
    fn degree_sum_is_twice_edges() {
        for g in [path(6), cycle(5), Graph::build(5, [(0, 2), (2, 4), (1, 4)]).unwrap()] {
            let total: usize = (0..g.vertex_count()).map(|v| g.degree(v)).sum();
            assert_eq!(total, 2 * g.edge_count());
        }
    }

    #[test]
    fn induced_subgraph_remaps() {
        let g = path(5);
        let (sub, ids) = g.induced_subgraph(&[true, false, true, true, true]);
        assert_eq!(ids, vec![0, 2, 3, 4]);
        // Only edges 2-3 and 3-4 survive, relabelled.
        assert_eq!(sub.edges(), &[(1, 2), (2, 3)]);
    }

    #[test]
    fn decompose_paths() {
        // One stripping leaves the middle n-2 vertices, two leave n-4.
        let d4 = decompose_lobster(&path(4)).unwrap();
        assert_eq!(d4.caterpillar, vec![1, 2]);
        assert_eq!(d4.spine, Vec::<usize>::new());
        let d5 = decompose_lobster(&path(5)).unwrap();
        assert_eq!(d5.caterpillar, vec![1, 2, 3]);
        assert_eq!(d5.spine, vec![2]);
        assert_eq!(d5.roles[2], VertexRole::SpinalDeg2);
        assert_eq!(d5.roles[0], VertexRole::Leaf);
        assert_eq!(d5.roles[1], VertexRole::Internal);
        let d7 = decompose_lobster(&path(7)).unwrap();
        assert_eq!(d7.spine, vec![2, 3, 4]);
    }

    #[test]
    fn decompose_small_trees_are_lobsters() {
        // P_2: both vertices are leaves, residues are empty.
        let d = decompose_lobster(&path(2)).unwrap();
        assert!(d.caterpillar.is_empty());
        assert!(d.spine.is_empty());
        // Star: residue is the single center.
        let star = Graph::build(4, [(0, 1), (0, 2), (0, 3)]).unwrap();
        let d = decompose_lobster(&star).unwrap();
        assert_eq!(d.caterpillar, vec![0]);
        assert_eq!(d.spine, vec![0]);
        assert_eq!(d.roles[0], VertexRole::SpinalOther);
    }

    #[test]
    fn decompose_rejects_non_trees() {
        assert_eq!(decompose_lobster(&cycle(4)), Err(GraphError::NotATree));
    }

    #[test]
    fn spider_legs_two_is_lobster_legs_three_is_not() {
        // Center 0 with three legs of length 2: two strippings leave {0}.
        let s222 = Graph::build(7, [(0, 1), (1, 2), (0, 3), (3, 4), (0, 5), (5, 6)]).unwrap();
        let d = decompose_lobster(&s222).unwrap();
        assert_eq!(d.spine, vec![0]);
        assert_eq!(d.roles[0], VertexRole::SpinalOther);
        assert_eq!(d.roles[1], VertexRole::Internal);

        // Legs of length 3: the residue is a star on 4 vertices, not a path.
        let s333 = Graph::build(
            10,
            [
                (0, 1),
                (1, 2),
                (2, 3),
                (0, 4),
                (4, 5),
                (5, 6),
                (0, 7),
                (7, 8),
                (8, 9),
            ],
        )
        .unwrap();
        assert_eq!(decompose_lobster(&s333), Err(GraphError::NotLobster));
        // Cross-check by stripping directly.
        let (once, _) = strip_leaves(&s333);
        let (twice, _) = strip_leaves(&once);
        assert!(!twice.is_path_graph());
    }

    #[test]
    fn double_strip_matches_decomposition() {
        let g = Graph::build(
            9,
            [
                (0, 1),
                (1, 2),
                (2, 3),
                (1, 4),
                (4, 5),
                (2, 6),
                (0, 7),
                (7, 8),
            ],
        )
        .unwrap();
        if let Ok(d) = decompose_lobster(&g) {
            let (once, once_ids) = strip_leaves(&g);
            assert_eq!(d.caterpillar, once_ids);
            let (_, twice_in_once) = strip_leaves(&once);
            let mut twice_ids: Vec<usize> =
                twice_in_once.iter().map(|&i| once_ids[i]).collect();
            twice_ids.sort_unstable();
            let mut spine_sorted = d.spine.clone();
            spine_sorted.sort_unstable();
            assert_eq!(spine_sorted, twice_ids);
        }
    }
}
