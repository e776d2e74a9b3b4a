//! Nowhere-zero integer k-flows on multigraphs, the facet count of P_G as a
//! 2-flow count on a supplied planar dual, and the Moebius-inversion formula
//! counting polar-dual lattice points over bipartite contractions.

use rayon::prelude::*;

use crate::facets::count_facets;
use crate::graph::{Graph, FlatLattice};
use crate::{Error, Result};

/// Default cap on (2k-2)^|E| for the flow scan.
pub const DEFAULT_FLOW_BUDGET: u64 = 10_000_000;

/// A graph that may carry parallel edges. Only this module accepts them:
/// planar duals of simple graphs need multiedges. Loops are representable
/// but rejected by the flow operations.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct Multigraph {
    n: usize,
    edges: Vec<(usize, usize)>,
}

impl Multigraph {
    pub fn new(n: usize, edges: &[(usize, usize)]) -> Result<Self> {
        for &(u, v) in edges {
            if u >= n || v >= n {
                return Err(Error::InvalidGraph(format!(
                    "edge ({u},{v}) out of range for n={n}"
                )));
            }
        }
        Ok(Multigraph {
            n,
            edges: edges.iter().map(|&(u, v)| (u.min(v), u.max(v))).collect(),
        })
    }

    pub fn n(&self) -> usize {
        self.n
    }

    pub fn edges(&self) -> &[(usize, usize)] {
        &self.edges
    }
}

/// One nowhere-zero flow: `values[r]` is the flow on edge `r`, oriented from
/// its smaller endpoint to its larger one.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct FlowAssignment {
    pub values: Vec<i64>,
}

/// Counts nowhere-zero k-flows: integer edge values x with 0 < |x| < k and
/// conservation at every vertex.
pub fn nowhere_zero_flows(g: &Multigraph, k: i64, budget: u64) -> Result<u64> {
    let mut count = 0u64;
    for_each_flow(g, k, budget, |_| count += 1)?;
    Ok(count)
}

/// Materializes the flows; intended for small instances and tests.
pub fn enumerate_nowhere_zero_flows(
    g: &Multigraph,
    k: i64,
    budget: u64,
) -> Result<Vec<FlowAssignment>> {
    let mut out = Vec::new();
    for_each_flow(g, k, budget, |values| {
        out.push(FlowAssignment {
            values: values.to_vec(),
        })
    })?;
    Ok(out)
}

fn for_each_flow<F: FnMut(&[i64])>(
    g: &Multigraph,
    k: i64,
    budget: u64,
    mut visit: F,
) -> Result<()> {
    if k < 2 {
        return Err(Error::InvalidGraph("flow counting needs k >= 2".into()));
    }
    if let Some(rank) = g.edges.iter().position(|&(u, v)| u == v) {
        return Err(Error::LoopsUnsupported(rank));
    }
    let m = g.edges.len();
    let choices = (2 * k - 2) as u64;
    if !(0..m as u32)
        .try_fold(1u64, |acc, _| acc.checked_mul(choices))
        .is_some_and(|total| total <= budget)
    {
        return Err(Error::SizeBudgetExceeded(format!(
            "flow scan needs (2k-2)^|E| <= {budget}"
        )));
    }
    // Vertices whose incident edges are all assigned once edge idx is set.
    let mut last_touch = vec![0usize; g.n];
    for (rank, &(u, v)) in g.edges.iter().enumerate() {
        last_touch[u] = rank;
        last_touch[v] = rank;
    }
    let mut completes: Vec<Vec<usize>> = vec![Vec::new(); m];
    for v in 0..g.n {
        // Vertices with no incident edge are trivially conserved.
        if g.edges.iter().any(|&(a, b)| a == v || b == v) {
            completes[last_touch[v]].push(v);
        }
    }
    let mut net = vec![0i64; g.n];
    let mut values = vec![0i64; m];
    rec(g, k, &completes, &mut net, &mut values, 0, &mut visit);
    return Ok(());

    fn rec<F: FnMut(&[i64])>(
        g: &Multigraph,
        k: i64,
        completes: &[Vec<usize>],
        net: &mut Vec<i64>,
        values: &mut Vec<i64>,
        idx: usize,
        visit: &mut F,
    ) {
        if idx == g.edges.len() {
            visit(values);
            return;
        }
        let (tail, head) = g.edges[idx];
        for mag in 1..k {
            for val in [mag, -mag] {
                values[idx] = val;
                net[head] += val;
                net[tail] -= val;
                if completes[idx].iter().all(|&v| net[v] == 0) {
                    rec(g, k, completes, net, values, idx + 1, visit);
                }
                net[head] -= val;
                net[tail] += val;
            }
        }
    }
}

/// Facet count of P_G for bipartite planar connected G, as the number of
/// nowhere-zero 2-flows on a caller-supplied planar dual.
pub fn facets_via_dual_flows(g_dual: &Multigraph, budget: u64) -> Result<u64> {
    nowhere_zero_flows(g_dual, 2, budget)
}

/// Polar-dual lattice points by the flat-lattice formula: the facet counts
/// of the bipartite contractions G/S, summed over all flats S; the
/// one-vertex contraction contributes one.
pub fn dual_points_via_mobius(g: &Graph, flats: &FlatLattice) -> Result<u64> {
    let terms: Result<Vec<u64>> = flats
        .flats
        .par_iter()
        .map(|&mask| {
            let contracted = g.contract(&flats.edge_ranks(mask));
            if contracted.n() == 1 {
                Ok(1)
            } else if contracted.is_bipartite() {
                count_facets(&contracted)
            } else {
                Ok(0)
            }
        })
        .collect();
    Ok(terms?.into_iter().sum())
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::ehrhart::polar_dual_points;
    use crate::graph::{cycle, path, DEFAULT_FLATS_EDGE_CAP};

    /// The planar dual of C_n: two vertices joined by n parallel edges.
    fn dual_of_cycle(n: usize) -> Multigraph {
        Multigraph::new(2, &vec![(0, 1); n]).unwrap()
    }

    #[test]
    fn dual_of_c4_has_six_flows() {
        assert_eq!(
            nowhere_zero_flows(&dual_of_cycle(4), 2, DEFAULT_FLOW_BUDGET).unwrap(),
            6
        );
    }

    #[test]
    fn triangle_two_flows() {
        let g = Multigraph::new(3, &[(0, 1), (1, 2), (0, 2)]).unwrap();
        let flows = enumerate_nowhere_zero_flows(&g, 2, DEFAULT_FLOW_BUDGET).unwrap();
        assert_eq!(flows.len(), 2);
        // Both constant circulations around the triangle.
        assert!(flows.contains(&FlowAssignment {
            values: vec![1, 1, -1]
        }));
        assert!(flows.contains(&FlowAssignment {
            values: vec![-1, -1, 1]
        }));
    }

    #[test]
    fn odd_degree_kills_two_flows() {
        let g = Multigraph::new(2, &[(0, 1)]).unwrap();
        assert_eq!(nowhere_zero_flows(&g, 2, DEFAULT_FLOW_BUDGET).unwrap(), 0);
        let star = Multigraph::new(4, &[(0, 1), (0, 2), (0, 3)]).unwrap();
        assert_eq!(nowhere_zero_flows(&star, 2, DEFAULT_FLOW_BUDGET).unwrap(), 0);
    }

    #[test]
    fn loops_rejected() {
        let g = Multigraph::new(1, &[(0, 0)]).unwrap();
        assert_eq!(
            nowhere_zero_flows(&g, 2, DEFAULT_FLOW_BUDGET),
            Err(Error::LoopsUnsupported(0))
        );
    }

    #[test]
    fn dual_flow_counts_match_facets() {
        assert_eq!(
            facets_via_dual_flows(&dual_of_cycle(4), DEFAULT_FLOW_BUDGET).unwrap(),
            6
        );
        assert_eq!(
            facets_via_dual_flows(&dual_of_cycle(6), DEFAULT_FLOW_BUDGET).unwrap(),
            20
        );
    }

    #[test]
    fn mobius_route_examples() {
        for (g, expected) in [(path(2), 3u64), (cycle(4), 19), (cycle(6), 141)] {
            let flats = g.flats(DEFAULT_FLATS_EDGE_CAP).unwrap();
            assert_eq!(dual_points_via_mobius(&g, &flats).unwrap(), expected);
            assert_eq!(polar_dual_points(&g).unwrap(), expected);
        }
    }

    #[test]
    fn budget_enforced() {
        let g = dual_of_cycle(40);
        assert!(matches!(
            nowhere_zero_flows(&g, 3, DEFAULT_FLOW_BUDGET),
            Err(Error::SizeBudgetExceeded(_))
        ));
    }
}
