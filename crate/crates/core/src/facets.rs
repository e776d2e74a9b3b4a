//! Facets of the symmetric edge polytope P_G. A facet is encoded by an
//! integer vertex labeling f with f(0) = 0, |f(u)-f(v)| <= 1 on every edge,
//! whose unit-variation edge set spans and connects the graph. The polytope
//! vertices on the facet are the oriented edges (u,v) with f(v)-f(u) = 1.

use num_bigint::BigInt;

use crate::exact::linalg::int_rank;
use crate::graph::{Graph, OrientedEdge};
use crate::{Error, Result};

/// Default cap on the polytope dimension for face-lattice enumeration.
pub const DEFAULT_FACE_DIM_CAP: usize = 8;

/// One facet of P_G as the integer labeling f with f(0) = 0.
#[derive(Debug, Clone, PartialEq, Eq, Hash)]
pub struct FacetLabeling {
    values: Vec<i64>,
}

impl FacetLabeling {
    /// Wraps a labeling after checking it is facet-defining for `g`.
    pub fn new(g: &Graph, values: Vec<i64>) -> Result<Self> {
        if !is_facet_defining(g, &values) {
            return Err(Error::NotAFacet(format!("{values:?}")));
        }
        Ok(FacetLabeling { values })
    }

    pub fn values(&self) -> &[i64] {
        &self.values
    }

    pub fn value(&self, v: usize) -> i64 {
        self.values[v]
    }

    /// The antipodal facet -f.
    pub fn antipode(&self) -> FacetLabeling {
        FacetLabeling {
            values: self.values.iter().map(|&x| -x).collect(),
        }
    }

    /// Applies the functional to an integer point of the ambient lattice.
    pub fn dot(&self, x: &[i64]) -> i64 {
        self.values.iter().zip(x).map(|(f, x)| f * x).sum()
    }
}

/// The oriented subgraph G_F of a facet: the edges of unit variation,
/// directed so that f increases along each edge.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct OrientedSubgraph {
    pub n: usize,
    pub edges: Vec<OrientedEdge>,
}

/// Vertex-facet incidences of P_G. Polytope vertex `2r` is the oriented
/// edge of rank `r` from the smaller endpoint to the larger one; `2r + 1`
/// is its antipode.
#[derive(Debug, Clone)]
pub struct IncidenceStructure {
    pub n: usize,
    pub vertices: Vec<OrientedEdge>,
    pub facets: Vec<FacetLabeling>,
    /// One bitmask per facet over the polytope vertices.
    pub membership: Vec<u128>,
}

/// All facets of P_G, found by DFS over vertices in BFS order from vertex 0,
/// then filtered by the spanning-connected condition. For bipartite graphs
/// only the two branches with |f(v)-f(u)| = 1 are explored.
pub fn enumerate_facets(g: &Graph) -> Result<Vec<FacetLabeling>> {
    let mut out = Vec::new();
    facet_search(g, true, |f| out.push(FacetLabeling { values: f.to_vec() }))?;
    Ok(out)
}

/// |enumerate_facets(g)| without keeping the labelings.
pub fn count_facets(g: &Graph) -> Result<u64> {
    let mut count = 0u64;
    facet_search(g, true, |_| count += 1)?;
    Ok(count)
}

/// Shared labeling search. With `require_spanning` it yields exactly the
/// facet labelings; without it, every labeling with f(0) = 0 and
/// |f(u)-f(v)| <= 1 on edges, i.e. the lattice points of the polar dual.
pub(crate) fn facet_search<F: FnMut(&[i64])>(
    g: &Graph,
    require_spanning: bool,
    mut visit: F,
) -> Result<()> {
    if g.n() < 2 {
        return Err(Error::InvalidGraph(
            "facet search needs at least two vertices".into(),
        ));
    }
    let dist = g.distances(0)?;
    // Bipartite graphs admit no constant step on an edge (the middle branch
    // below), but only when searching for facets.
    let bipartite_prune = require_spanning && g.is_bipartite();

    // BFS order; every vertex after the first has an already-assigned neighbor.
    let mut order = Vec::with_capacity(g.n());
    {
        let mut seen = vec![false; g.n()];
        let mut queue = std::collections::VecDeque::from([0usize]);
        seen[0] = true;
        while let Some(u) = queue.pop_front() {
            order.push(u);
            for &(w, _) in g.adj(u) {
                if !seen[w] {
                    seen[w] = true;
                    queue.push_back(w);
                }
            }
        }
    }
    let pos_of: Vec<usize> = {
        let mut p = vec![0; g.n()];
        for (i, &v) in order.iter().enumerate() {
            p[v] = i;
        }
        p
    };
    // Neighbors of each vertex that come earlier in the BFS order.
    let earlier: Vec<Vec<usize>> = (0..g.n())
        .map(|v| {
            g.adj(v)
                .iter()
                .map(|&(w, _)| w)
                .filter(|&w| pos_of[w] < pos_of[v])
                .collect()
        })
        .collect();

    let mut f = vec![0i64; g.n()];
    search(
        g,
        &order,
        &earlier,
        &dist,
        bipartite_prune,
        require_spanning,
        &mut f,
        1,
        &mut visit,
    );
    return Ok(());

    #[allow(clippy::too_many_arguments)]
    fn search<F: FnMut(&[i64])>(
        g: &Graph,
        order: &[usize],
        earlier: &[Vec<usize>],
        dist: &[usize],
        bipartite_prune: bool,
        require_spanning: bool,
        f: &mut Vec<i64>,
        depth: usize,
        visit: &mut F,
    ) {
        if depth == order.len() {
            if !require_spanning || spans(g, f) {
                visit(f);
            }
            return;
        }
        let v = order[depth];
        let mut lo = -(dist[v] as i64);
        let mut hi = dist[v] as i64;
        for &u in &earlier[v] {
            lo = lo.max(f[u] - 1);
            hi = hi.min(f[u] + 1);
        }
        let mut val = lo;
        while val <= hi {
            let ok = if bipartite_prune {
                earlier[v].iter().all(|&u| (f[u] - val).abs() == 1)
            } else {
                true
            };
            if ok {
                f[v] = val;
                search(
                    g,
                    order,
                    earlier,
                    dist,
                    bipartite_prune,
                    require_spanning,
                    f,
                    depth + 1,
                    visit,
                );
            }
            val += 1;
        }
    }

    fn spans(g: &Graph, f: &[i64]) -> bool {
        let mut parent: Vec<usize> = (0..g.n()).collect();
        fn find(parent: &mut [usize], v: usize) -> usize {
            if parent[v] != v {
                let r = find(parent, parent[v]);
                parent[v] = r;
            }
            parent[v]
        }
        let mut comps = g.n();
        for &(u, v) in g.edges() {
            if (f[u] - f[v]).abs() == 1 {
                let (ru, rv) = (find(&mut parent, u), find(&mut parent, v));
                if ru != rv {
                    parent[ru.max(rv)] = ru.min(rv);
                    comps -= 1;
                }
            }
        }
        comps == 1
    }
}

/// Checks the two facet conditions for an arbitrary labeling.
pub fn is_facet_defining(g: &Graph, values: &[i64]) -> bool {
    if values.len() != g.n() || values.first() != Some(&0) {
        return false;
    }
    if g.edges().iter().any(|&(u, v)| (values[u] - values[v]).abs() > 1) {
        return false;
    }
    let mut parent: Vec<usize> = (0..g.n()).collect();
    fn find(parent: &mut [usize], v: usize) -> usize {
        if parent[v] != v {
            let r = find(parent, parent[v]);
            parent[v] = r;
        }
        parent[v]
    }
    let mut comps = g.n();
    for &(u, v) in g.edges() {
        if (values[u] - values[v]).abs() == 1 {
            let (ru, rv) = (find(&mut parent, u), find(&mut parent, v));
            if ru != rv {
                parent[ru.max(rv)] = ru.min(rv);
                comps -= 1;
            }
        }
    }
    comps == 1
}

/// The oriented subgraph G_F of a facet labeling.
pub fn facet_subgraph(g: &Graph, f: &FacetLabeling) -> Result<OrientedSubgraph> {
    if !is_facet_defining(g, f.values()) {
        return Err(Error::NotAFacet(format!("{:?}", f.values())));
    }
    let mut edges = Vec::new();
    for (rank, &(u, v)) in g.edges().iter().enumerate() {
        let d = f.value(v) - f.value(u);
        match d {
            1 => edges.push(OrientedEdge { tail: u, head: v, rank }),
            -1 => edges.push(OrientedEdge { tail: v, head: u, rank }),
            _ => {}
        }
    }
    // f strictly increases along oriented edges, so no directed cycle can
    // exist; a violation would mean the labeling logic is broken.
    debug_assert!(edges.iter().all(|e| f.value(e.head) == f.value(e.tail) + 1));
    Ok(OrientedSubgraph { n: g.n(), edges })
}

/// Vertex-facet incidences of P_G.
pub fn incidence_structure(g: &Graph) -> Result<IncidenceStructure> {
    if g.m() > 64 {
        return Err(Error::SizeBudgetExceeded(format!(
            "incidence structure needs |E| <= 64, got {}",
            g.m()
        )));
    }
    let facets = enumerate_facets(g)?;
    let mut vertices = Vec::with_capacity(2 * g.m());
    for (rank, &(u, v)) in g.edges().iter().enumerate() {
        vertices.push(OrientedEdge { tail: u, head: v, rank });
        vertices.push(OrientedEdge { tail: v, head: u, rank });
    }
    let membership = facets
        .iter()
        .map(|f| {
            let mut mask = 0u128;
            for (i, e) in vertices.iter().enumerate() {
                if f.value(e.head) - f.value(e.tail) == 1 {
                    mask |= 1 << i;
                }
            }
            mask
        })
        .collect();
    Ok(IncidenceStructure {
        n: g.n(),
        vertices,
        facets,
        membership,
    })
}

/// A face of P_G: the set of polytope vertices it contains and its dimension.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct Face {
    pub vertex_mask: u128,
    pub dim: usize,
}

/// The proper nonempty faces of P_G from its vertex-facet incidences, and
/// the f-vector (f_0, ..., f_{d-1}).
pub fn face_lattice(inc: &IncidenceStructure, dim_cap: usize) -> Result<(Vec<u64>, Vec<Face>)> {
    let n = inc.n;
    let dim = n - 1;
    if dim > dim_cap {
        return Err(Error::SizeBudgetExceeded(format!(
            "face lattice needs dim <= {dim_cap}, got {dim}"
        )));
    }
    // Faces are exactly the nonempty intersections of facet vertex sets;
    // close the facet masks under pairwise intersection.
    let mut known: std::collections::HashSet<u128> = inc.membership.iter().copied().collect();
    let mut queue: Vec<u128> = known.iter().copied().collect();
    while let Some(mask) = queue.pop() {
        for &fm in &inc.membership {
            let meet = mask & fm;
            if meet != 0 && known.insert(meet) {
                queue.push(meet);
            }
        }
    }
    let mut faces: Vec<Face> = known
        .into_iter()
        .map(|mask| Face {
            vertex_mask: mask,
            dim: mask_dim(inc, mask, n),
        })
        .collect();
    faces.sort_by_key(|f| (f.dim, f.vertex_mask));
    let mut fvector = vec![0u64; dim];
    for f in &faces {
        fvector[f.dim] += 1;
    }
    Ok((fvector, faces))
}

/// Dimension of the affine hull of the face's vertices: the rank of the
/// difference vectors over the rationals.
fn mask_dim(inc: &IncidenceStructure, mask: u128, n: usize) -> usize {
    let pts: Vec<Vec<BigInt>> = (0..inc.vertices.len())
        .filter(|&i| mask >> i & 1 == 1)
        .map(|i| {
            let e = &inc.vertices[i];
            let mut coords = vec![BigInt::from(0); n];
            coords[e.head] = BigInt::from(1);
            coords[e.tail] = BigInt::from(-1);
            coords
        })
        .collect();
    if pts.len() <= 1 {
        return 0;
    }
    let rows: Vec<Vec<BigInt>> = pts[1..]
        .iter()
        .map(|p| p.iter().zip(&pts[0]).map(|(a, b)| a - b).collect())
        .collect();
    int_rank(&rows)
}
