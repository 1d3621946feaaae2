//! Brute-force enumeration engine: the reference every other engine is
//! checked against. Intended for small graphs (it visits every
//! independent set explicitly).

use num_bigint::BigUint;
use num_traits::One;

use super::{CountVector, StarTable};
use crate::graph::Graph;

/// All independent sets of size exactly `k`, in lexicographic order.
pub fn enumerate_independent_sets(g: &Graph, k: usize) -> Vec<Vec<usize>> {
    let mut out = Vec::new();
    let mut cur = Vec::with_capacity(k);
    extend(g, k, 0, &mut cur, &mut out);
    out
}

fn extend(g: &Graph, k: usize, start: usize, cur: &mut Vec<usize>, out: &mut Vec<Vec<usize>>) {
    if cur.len() == k {
        out.push(cur.clone());
        return;
    }
    let need = k - cur.len();
    let n = g.vertex_count();
    for v in start..n {
        if n - v < need {
            break;
        }
        if cur.iter().all(|&u| !g.has_edge(u, v)) {
            cur.push(v);
            extend(g, k, v + 1, cur, out);
            cur.pop();
        }
    }
}

/// |I^k(v)| by filtering the enumeration.
pub fn star_size_oracle(g: &Graph, v: usize, k: usize) -> u64 {
    enumerate_independent_sets(g, k)
        .iter()
        .filter(|set| set.binary_search(&v).is_ok())
        .count() as u64
}

/// Full star table by enumeration. Stops at the first size with no
/// independent set (supersets of missing sizes cannot exist).
pub fn oracle_star_table(g: &Graph, cap: Option<usize>) -> StarTable {
    let n = g.vertex_count();
    let max_k = cap.unwrap_or(n).min(n);
    let mut whole = vec![BigUint::one()];
    let mut tallies: Vec<Vec<u64>> = vec![Vec::new(); n];
    for k in 1..=max_k {
        let sets = enumerate_independent_sets(g, k);
        if sets.is_empty() {
            break;
        }
        whole.push(BigUint::from(sets.len()));
        for t in &mut tallies {
            t.resize(k + 1, 0);
        }
        for set in &sets {
            for &v in set {
                tallies[v][k] += 1;
            }
        }
    }
    StarTable {
        whole: CountVector::from_coeffs(whole),
        stars: tallies
            .into_iter()
            .map(|t| CountVector::from_u64s(&t))
            .collect(),
    }
}

#[cfg(test)]
mod tests {
    use super::*;

    fn path(n: usize) -> Graph {
        Graph::build(n, (0..n - 1).map(|i| (i, i + 1))).unwrap()
    }

    #[test]
    fn p3_pairs() {
        assert_eq!(enumerate_independent_sets(&path(3), 2), vec![vec![0, 2]]);
    }

    #[test]
    fn p4_pairs_in_lex_order() {
        assert_eq!(
            enumerate_independent_sets(&path(4), 2),
            vec![vec![0, 2], vec![0, 3], vec![1, 3]]
        );
    }

    #[test]
    fn size_zero_is_the_empty_set() {
        let g = Graph::build(3, [(0, 1)]).unwrap();
        assert_eq!(enumerate_independent_sets(&g, 0), vec![Vec::<usize>::new()]);
    }

    #[test]
    fn star_sizes_on_p4() {
        let g = path(4);
        assert_eq!(star_size_oracle(&g, 0, 2), 2);
        assert_eq!(star_size_oracle(&g, 1, 2), 1);
        for v in 0..4 {
            assert_eq!(star_size_oracle(&g, v, 1), 1);
        }
    }

    #[test]
    fn table_on_p4() {
        let t = oracle_star_table(&path(4), None);
        assert_eq!(t.whole, CountVector::from_u64s(&[1, 4, 3]));
        assert_eq!(t.alpha(), 2);
        assert_eq!(t.star(0, 2), BigUint::from(2u32));
        assert_eq!(t.star(1, 2), BigUint::from(1u32));
        // No independent set of size 3 in P_4.
        assert_eq!(t.star(0, 3), BigUint::default());
    }
}
