//! Normalized volume of P_G through its regular unimodular triangulation:
//! the simplices of a facet are the spanning trees of G_F whose oriented
//! edges avoid every leading monomial of the toric Groebner basis. Leading
//! monomials come in two shapes, both read off a simple cycle C under one of
//! its two orientations: for |C| = 2k, any k-subset of C's edges avoiding
//! C's minimum-rank edge; for |C| = 2k+1, any (k+1)-subset. The degree-two
//! binomials pairing the two orientations of one edge never matter here: a
//! facet contains at most one orientation of each edge.

use rayon::prelude::*;

use crate::facets::{enumerate_facets, facet_subgraph, FacetLabeling};
use crate::graph::{Graph, OrientedEdge};
use crate::{Error, Result};

/// The support of one leading monomial: oriented edges sorted by rank.
#[derive(Debug, Clone, PartialEq, Eq, PartialOrd, Ord)]
pub struct ForbiddenSet {
    pub edges: Vec<OrientedEdge>,
}

/// A triangulated facet: every simplex is a spanning tree of G_F, recorded
/// as a sorted list of edge ranks.
#[derive(Debug, Clone)]
pub struct FacetTriangulation {
    pub facet: FacetLabeling,
    pub simplices: Vec<Vec<usize>>,
}

/// All leading-monomial supports of the graph, over every simple cycle and
/// both of its orientations, deduplicated.
pub fn forbidden_sets(g: &Graph, cycle_budget: u64) -> Result<Vec<ForbiddenSet>> {
    let cycles = g.simple_cycles(cycle_budget)?;
    let mut sets = std::collections::BTreeSet::new();
    for cyc in &cycles {
        let len = cyc.len();
        // Oriented edge list of the cycle in traversal order, and reversed.
        let forward: Vec<OrientedEdge> = (0..len)
            .map(|i| {
                let (t, h) = (cyc[i], cyc[(i + 1) % len]);
                OrientedEdge {
                    tail: t,
                    head: h,
                    rank: g.edge_rank(t, h).expect("cycle edge"),
                }
            })
            .collect();
        let backward: Vec<OrientedEdge> = forward
            .iter()
            .map(|e| OrientedEdge {
                tail: e.head,
                head: e.tail,
                rank: e.rank,
            })
            .collect();
        let min_rank = forward.iter().map(|e| e.rank).min().unwrap();
        for oriented in [forward, backward] {
            let (pool, k): (Vec<OrientedEdge>, usize) = if len % 2 == 0 {
                let eligible = oriented
                    .iter()
                    .copied()
                    .filter(|e| e.rank != min_rank)
                    .collect();
                (eligible, len / 2)
            } else {
                (oriented, len / 2 + 1)
            };
            for idx in combinations(pool.len(), k) {
                let mut edges: Vec<OrientedEdge> = idx.iter().map(|&i| pool[i]).collect();
                edges.sort_by_key(|e| e.rank);
                sets.insert(ForbiddenSet { edges });
            }
        }
    }
    Ok(sets.into_iter().collect())
}

/// All k-subsets of 0..n as sorted index lists.
pub(crate) fn combinations(n: usize, k: usize) -> Vec<Vec<usize>> {
    let mut out = Vec::new();
    let mut current = Vec::with_capacity(k);
    fn rec(n: usize, k: usize, start: usize, current: &mut Vec<usize>, out: &mut Vec<Vec<usize>>) {
        if current.len() == k {
            out.push(current.clone());
            return;
        }
        for i in start..n {
            current.push(i);
            rec(n, k, i + 1, current, out);
            current.pop();
        }
    }
    rec(n, k, 0, &mut current, &mut out);
    out
}

/// Normalized volume of one facet together with its simplices.
pub fn facet_volume(
    g: &Graph,
    f: &FacetLabeling,
    forbidden: &[ForbiddenSet],
) -> Result<(u64, FacetTriangulation)> {
    if g.m() > 64 {
        return Err(Error::SizeBudgetExceeded(format!(
            "triangulation needs |E| <= 64, got {}",
            g.m()
        )));
    }
    let sub = facet_subgraph(g, f)?;
    // Orientation of each E_f edge inside G_F, by rank. A facet never holds
    // both orientations of an edge, so a plain map suffices.
    let mut orient: Vec<Option<(usize, usize)>> = vec![None; g.m()];
    for e in &sub.edges {
        assert!(orient[e.rank].is_none());
        orient[e.rank] = Some((e.tail, e.head));
    }
    // Forbidden sets whose oriented edges all lie in G_F, as rank masks.
    let restricted: Vec<u64> = forbidden
        .iter()
        .filter(|fs| {
            fs.edges
                .iter()
                .all(|e| orient[e.rank] == Some((e.tail, e.head)))
        })
        .map(|fs| fs.edges.iter().fold(0u64, |m, e| m | 1 << e.rank))
        .collect();

    let local = Graph::new(
        sub.n,
        &sub.edges
            .iter()
            .map(|e| (e.tail, e.head))
            .collect::<Vec<_>>(),
    )?;
    let mut simplices = Vec::new();
    local.for_each_spanning_tree(|tree| {
        let mask = tree
            .iter()
            .fold(0u64, |m, &local_rank| m | 1 << sub.edges[local_rank].rank);
        if restricted.iter().all(|&fs| fs & mask != fs) {
            let mut ranks: Vec<usize> =
                tree.iter().map(|&local_rank| sub.edges[local_rank].rank).collect();
            ranks.sort_unstable();
            simplices.push(ranks);
        }
    })?;
    simplices.sort();
    let count = simplices.len() as u64;
    Ok((
        count,
        FacetTriangulation {
            facet: f.clone(),
            simplices,
        },
    ))
}

/// Normalized volume of P_G: the simplex count of the triangulation, summed
/// facet by facet (in parallel; the sum is order-independent).
pub fn normalized_volume(g: &Graph, cycle_budget: u64) -> Result<u64> {
    let facets = enumerate_facets(g)?;
    let forbidden = forbidden_sets(g, cycle_budget)?;
    let counts: Result<Vec<u64>> = facets
        .par_iter()
        .map(|f| facet_volume(g, f, &forbidden).map(|(c, _)| c))
        .collect();
    Ok(counts?.into_iter().sum())
}

/// The full triangulation, facet by facet, in facet enumeration order.
pub fn triangulation(g: &Graph, cycle_budget: u64) -> Result<Vec<FacetTriangulation>> {
    let facets = enumerate_facets(g)?;
    let forbidden = forbidden_sets(g, cycle_budget)?;
    facets
        .par_iter()
        .map(|f| facet_volume(g, f, &forbidden).map(|(_, t)| t))
        .collect()
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::facets::FacetLabeling;
    use crate::graph::{complete_bipartite, cycle, edge_join, path, wheel, DEFAULT_CYCLE_BUDGET};

    #[test]
    fn forbidden_sets_c4() {
        let sets = forbidden_sets(&cycle(4), DEFAULT_CYCLE_BUDGET).unwrap();
        // One 4-cycle, two orientations, three 2-subsets avoiding edge 0 each.
        assert_eq!(sets.len(), 6);
        for s in &sets {
            assert_eq!(s.edges.len(), 2);
            assert!(s.edges.iter().all(|e| e.rank != 0));
        }
    }

    #[test]
    fn forbidden_sets_c3() {
        let sets = forbidden_sets(&cycle(3), DEFAULT_CYCLE_BUDGET).unwrap();
        // Odd cycle: all 2-subsets of 3 edges, per orientation.
        assert_eq!(sets.len(), 6);
    }

    #[test]
    fn forbidden_sets_tree_empty() {
        assert!(forbidden_sets(&path(5), DEFAULT_CYCLE_BUDGET)
            .unwrap()
            .is_empty());
    }

    #[test]
    fn square_facet_of_k22_has_volume_two() {
        let g = complete_bipartite(2, 2);
        let f = FacetLabeling::new(&g, vec![0, 0, 1, 1]).unwrap();
        let forb = forbidden_sets(&g, DEFAULT_CYCLE_BUDGET).unwrap();
        let (count, tri) = facet_volume(&g, &f, &forb).unwrap();
        assert_eq!(count, 2);
        assert_eq!(tri.simplices.len(), 2);
        for s in &tri.simplices {
            assert_eq!(s.len(), 3);
        }
    }

    #[test]
    fn every_facet_of_even_cycle_has_volume_k() {
        for k in [2usize, 3] {
            let g = cycle(2 * k);
            let forb = forbidden_sets(&g, DEFAULT_CYCLE_BUDGET).unwrap();
            for f in enumerate_facets(&g).unwrap() {
                let (count, _) = facet_volume(&g, &f, &forb).unwrap();
                assert_eq!(count, k as u64);
            }
        }
    }

    #[test]
    fn tree_facets_are_simplices() {
        let g = path(4);
        let forb = forbidden_sets(&g, DEFAULT_CYCLE_BUDGET).unwrap();
        for f in enumerate_facets(&g).unwrap() {
            let (count, _) = facet_volume(&g, &f, &forb).unwrap();
            assert_eq!(count, 1);
        }
    }

    #[test]
    fn volume_of_even_cycles() {
        assert_eq!(normalized_volume(&cycle(4), DEFAULT_CYCLE_BUDGET).unwrap(), 12);
        assert_eq!(normalized_volume(&cycle(6), DEFAULT_CYCLE_BUDGET).unwrap(), 60);
    }

    #[test]
    fn volume_of_glued_triangles() {
        let g = edge_join(&cycle(3), (0, 1), &cycle(3), (0, 1)).unwrap();
        assert_eq!(normalized_volume(&g, DEFAULT_CYCLE_BUDGET).unwrap(), 16);
    }

    #[test]
    fn volume_of_smallest_wheel() {
        assert_eq!(normalized_volume(&wheel(3), DEFAULT_CYCLE_BUDGET).unwrap(), 20);
    }

    #[test]
    fn antipodal_facets_same_volume() {
        let g = wheel(4);
        let forb = forbidden_sets(&g, DEFAULT_CYCLE_BUDGET).unwrap();
        for f in enumerate_facets(&g).unwrap() {
            let (a, _) = facet_volume(&g, &f, &forb).unwrap();
            let (b, _) = facet_volume(&g, &f.antipode(), &forb).unwrap();
            assert_eq!(a, b);
        }
    }

    #[test]
    fn volume_invariant_under_edge_reorder() {
        // C_4 with its edges listed in a different order.
        let g = Graph::new(4, &[(2, 3), (0, 1), (1, 2), (0, 3)]).unwrap();
        assert_eq!(normalized_volume(&g, DEFAULT_CYCLE_BUDGET).unwrap(), 12);
        let w = Graph::new(4, &[(1, 3), (0, 1), (0, 2), (2, 3), (0, 3), (1, 2)]).unwrap();
        // Relabeled K_4 = wheel(3).
        assert_eq!(normalized_volume(&w, DEFAULT_CYCLE_BUDGET).unwrap(), 20);
    }
}
