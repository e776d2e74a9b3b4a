//! Simple undirected graphs with a fixed total edge order, plus the
//! graph-theoretic primitives the polytope machinery consumes: BFS distances,
//! bipartiteness, spanning-tree enumeration (cross-checked by the matrix-tree
//! determinant), simple-cycle enumeration, contractions, and the lattice of
//! flats of the graphic matroid with its Moebius function.

use std::collections::VecDeque;

use num_bigint::BigInt;
use num_traits::{One, Signed, Zero};

use crate::{Error, Result};

/// Default cap on the number of simple cycles enumerated.
pub const DEFAULT_CYCLE_BUDGET: u64 = 1_000_000;
/// Default cap on |E| for flat-lattice enumeration (scan is over edge subsets).
pub const DEFAULT_FLATS_EDGE_CAP: usize = 20;

/// A finite simple undirected graph on vertices `0..n`. The position of an
/// edge in `edges` is its rank in the fixed total edge order; every
/// order-sensitive computation downstream (notably the Groebner-derived
/// triangulation) is seeded by this order.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct Graph {
    n: usize,
    edges: Vec<(usize, usize)>,
    adj: Vec<Vec<(usize, usize)>>, // vertex -> sorted (neighbor, edge rank)
}

/// One orientation of a graph edge. As a point of the symmetric edge
/// polytope this is `e_head - e_tail`.
#[derive(Debug, Clone, Copy, PartialEq, Eq, PartialOrd, Ord, Hash)]
pub struct OrientedEdge {
    pub tail: usize,
    pub head: usize,
    pub rank: usize,
}

impl Graph {
    /// Builds a graph, normalizing each edge to `(min, max)` while keeping
    /// the input order as the edge ranks. Rejects loops, parallel edges and
    /// out-of-range endpoints.
    pub fn new(n: usize, edges: &[(usize, usize)]) -> Result<Self> {
        let mut seen = std::collections::HashSet::new();
        let mut norm = Vec::with_capacity(edges.len());
        for &(u, v) in edges {
            if u == v {
                return Err(Error::InvalidGraph(format!("loop at vertex {u}")));
            }
            if u >= n || v >= n {
                return Err(Error::InvalidGraph(format!(
                    "edge ({u},{v}) out of range for n={n}"
                )));
            }
            let e = (u.min(v), u.max(v));
            if !seen.insert(e) {
                return Err(Error::InvalidGraph(format!("duplicate edge ({u},{v})")));
            }
            norm.push(e);
        }
        let mut adj = vec![Vec::new(); n];
        for (rank, &(u, v)) in norm.iter().enumerate() {
            adj[u].push((v, rank));
            adj[v].push((u, rank));
        }
        for a in &mut adj {
            a.sort_unstable();
        }
        Ok(Graph { n, edges: norm, adj })
    }

    pub fn n(&self) -> usize {
        self.n
    }

    pub fn edges(&self) -> &[(usize, usize)] {
        &self.edges
    }

    pub fn m(&self) -> usize {
        self.edges.len()
    }

    /// Neighbors of `v` as `(neighbor, edge rank)`, sorted by neighbor.
    pub fn adj(&self, v: usize) -> &[(usize, usize)] {
        &self.adj[v]
    }

    pub fn edge_rank(&self, u: usize, v: usize) -> Option<usize> {
        self.adj[u.min(v)]
            .iter()
            .find(|&&(w, _)| w == u.max(v))
            .map(|&(_, r)| r)
    }

    /// BFS distances from `v` in edge counts. Errors with the first
    /// unreachable vertex if the graph is disconnected.
    pub fn distances(&self, v: usize) -> Result<Vec<usize>> {
        let mut dist = vec![usize::MAX; self.n];
        dist[v] = 0;
        let mut queue = VecDeque::from([v]);
        while let Some(u) = queue.pop_front() {
            for &(w, _) in &self.adj[u] {
                if dist[w] == usize::MAX {
                    dist[w] = dist[u] + 1;
                    queue.push_back(w);
                }
            }
        }
        if let Some(u) = dist.iter().position(|&d| d == usize::MAX) {
            return Err(Error::DisconnectedGraph(u));
        }
        Ok(dist)
    }

    pub fn is_connected(&self) -> bool {
        self.n == 0 || self.distances(0).is_ok()
    }

    /// The 2-coloring `(class_a, class_b)` if one exists. The smallest vertex
    /// of each connected component goes into class A.
    pub fn bipartition(&self) -> Option<(Vec<usize>, Vec<usize>)> {
        let mut color = vec![u8::MAX; self.n];
        for start in 0..self.n {
            if color[start] != u8::MAX {
                continue;
            }
            color[start] = 0;
            let mut queue = VecDeque::from([start]);
            while let Some(u) = queue.pop_front() {
                for &(w, _) in &self.adj[u] {
                    if color[w] == u8::MAX {
                        color[w] = 1 - color[u];
                        queue.push_back(w);
                    } else if color[w] == color[u] {
                        return None;
                    }
                }
            }
        }
        let a = (0..self.n).filter(|&v| color[v] == 0).collect();
        let b = (0..self.n).filter(|&v| color[v] == 1).collect();
        Some((a, b))
    }

    pub fn is_bipartite(&self) -> bool {
        self.bipartition().is_some()
    }

    /// All spanning trees, each as a sorted list of edge ranks, in a
    /// deterministic (lexicographic in include/exclude decisions) order.
    pub fn spanning_trees(&self) -> Result<Vec<Vec<usize>>> {
        let mut out = Vec::new();
        self.for_each_spanning_tree(|t| out.push(t.to_vec()))?;
        Ok(out)
    }

    /// Visits every spanning tree exactly once without materializing the list.
    pub fn for_each_spanning_tree<F: FnMut(&[usize])>(&self, mut visit: F) -> Result<()> {
        if self.n == 0 {
            return Ok(());
        }
        self.distances(0)?; // connectivity gate
        if self.n == 1 {
            visit(&[]);
            return Ok(());
        }
        let mut chosen = Vec::new();
        let mut dsu = Dsu::new(self.n);
        self.tree_rec(0, &mut dsu, &mut chosen, &mut visit);
        Ok(())
    }

    fn tree_rec<F: FnMut(&[usize])>(
        &self,
        idx: usize,
        dsu: &mut Dsu,
        chosen: &mut Vec<usize>,
        visit: &mut F,
    ) {
        if chosen.len() == self.n - 1 {
            visit(chosen);
            return;
        }
        if idx == self.m() {
            return;
        }
        let (u, v) = self.edges[idx];
        // Include branch: valid whenever the edge joins two components.
        if dsu.find(u) != dsu.find(v) {
            let snapshot = dsu.clone();
            dsu.union(u, v);
            chosen.push(idx);
            self.tree_rec(idx + 1, dsu, chosen, visit);
            chosen.pop();
            *dsu = snapshot;
        }
        // Exclude branch: only if the remaining edges can still span.
        let mut probe = dsu.clone();
        let mut comps = probe.components();
        for &(a, b) in &self.edges[idx + 1..] {
            if probe.union(a, b) {
                comps -= 1;
            }
        }
        if comps == 1 {
            self.tree_rec(idx + 1, dsu, chosen, visit);
        }
    }

    /// Number of spanning trees by the matrix-tree theorem: the determinant
    /// of the reduced Laplacian, in exact integer arithmetic.
    pub fn matrix_tree_count(&self) -> BigInt {
        if self.n <= 1 {
            return BigInt::one();
        }
        let k = self.n - 1;
        let mut lap = vec![vec![BigInt::zero(); k]; k];
        for &(u, v) in &self.edges {
            if u > 0 {
                lap[u - 1][u - 1] += 1;
            }
            if v > 0 {
                lap[v - 1][v - 1] += 1;
            }
            if u > 0 && v > 0 {
                lap[u - 1][v - 1] -= 1;
                lap[v - 1][u - 1] -= 1;
            }
        }
        int_determinant(lap)
    }

    /// Every simple cycle of length >= 3, exactly once up to rotation and
    /// reflection, as a vertex sequence starting at its smallest vertex.
    /// Output order is deterministic.
    pub fn simple_cycles(&self, budget: u64) -> Result<Vec<Vec<usize>>> {
        let mut cycles = Vec::new();
        let mut path = Vec::new();
        let mut on_path = vec![false; self.n];
        for s in 0..self.n {
            path.clear();
            path.push(s);
            on_path[s] = true;
            self.cycle_rec(s, &mut path, &mut on_path, &mut cycles, budget)?;
            on_path[s] = false;
        }
        Ok(cycles)
    }

    fn cycle_rec(
        &self,
        s: usize,
        path: &mut Vec<usize>,
        on_path: &mut Vec<bool>,
        cycles: &mut Vec<Vec<usize>>,
        budget: u64,
    ) -> Result<()> {
        let last = *path.last().unwrap();
        for &(w, _) in &self.adj[last] {
            if w == s && path.len() >= 3 {
                // Kill the reflection: record only the direction with the
                // smaller second vertex.
                if path[1] < last {
                    if cycles.len() as u64 >= budget {
                        return Err(Error::CycleBudgetExceeded(budget));
                    }
                    cycles.push(path.clone());
                }
            } else if w > s && !on_path[w] {
                path.push(w);
                on_path[w] = true;
                self.cycle_rec(s, path, on_path, cycles, budget)?;
                on_path[w] = false;
                path.pop();
            }
        }
        Ok(())
    }

    /// Contracts the edge subset `s` (given as edge ranks): vertices in the
    /// same component of `(V, s)` merge, loops vanish and parallel edges are
    /// simplified to single edges. The merged class keeps the smallest
    /// original index; classes are then compacted in increasing order.
    /// Surviving edges keep the relative order of their first occurrence.
    pub fn contract(&self, s: &[usize]) -> Graph {
        let mut dsu = Dsu::new(self.n);
        for &rank in s {
            let (u, v) = self.edges[rank];
            dsu.union(u, v);
        }
        // Map each class representative (smallest member) to a compact label.
        let mut rep = vec![usize::MAX; self.n];
        for v in 0..self.n {
            let r = dsu.find(v);
            if rep[r] == usize::MAX {
                rep[r] = v;
            }
        }
        let mut reps: Vec<usize> = (0..self.n).filter(|&v| rep[dsu.find(v)] == v).collect();
        reps.sort_unstable();
        let label_of = |v: usize, dsu: &mut Dsu| -> usize {
            let r = rep[dsu.find(v)];
            reps.binary_search(&r).unwrap()
        };
        let mut seen = std::collections::HashSet::new();
        let mut edges = Vec::new();
        for &(u, v) in &self.edges {
            let (a, b) = (label_of(u, &mut dsu), label_of(v, &mut dsu));
            if a == b {
                continue;
            }
            let e = (a.min(b), a.max(b));
            if seen.insert(e) {
                edges.push(e);
            }
        }
        Graph::new(reps.len(), &edges).expect("contraction yields a valid simple graph")
    }

    /// Closure of an edge subset in the graphic matroid: every edge whose
    /// endpoints are connected within the subset joins it.
    pub fn closure(&self, mask: u64) -> u64 {
        let mut dsu = Dsu::new(self.n);
        for (rank, &(u, v)) in self.edges.iter().enumerate() {
            if mask >> rank & 1 == 1 {
                dsu.union(u, v);
            }
        }
        let mut out = 0u64;
        for (rank, &(u, v)) in self.edges.iter().enumerate() {
            if dsu.find(u) == dsu.find(v) {
                out |= 1 << rank;
            }
        }
        out
    }

    /// The same graph with vertices renamed by `perm` (old index -> new).
    pub fn relabel(&self, perm: &[usize]) -> Result<Graph> {
        assert_eq!(perm.len(), self.n);
        let edges: Vec<(usize, usize)> = self
            .edges
            .iter()
            .map(|&(u, v)| (perm[u], perm[v]))
            .collect();
        Graph::new(self.n, &edges)
    }

    /// The same graph with the edge ranks permuted: new rank i holds the old
    /// edge `perm[i]`.
    pub fn permute_edges(&self, perm: &[usize]) -> Result<Graph> {
        assert_eq!(perm.len(), self.m());
        let edges: Vec<(usize, usize)> = perm.iter().map(|&r| self.edges[r]).collect();
        Graph::new(self.n, &edges)
    }

    /// The lattice of flats of the graphic matroid, with the Moebius values
    /// `mu(F, E)` against the full edge set.
    pub fn flats(&self, edge_cap: usize) -> Result<FlatLattice> {
        let m = self.m();
        if m > edge_cap || m >= 64 {
            return Err(Error::SizeBudgetExceeded(format!(
                "flat enumeration needs |E| <= {edge_cap}, got {m}"
            )));
        }
        let mut flats = Vec::new();
        for mask in 0..1u64 << m {
            if self.closure(mask) == mask {
                flats.push(mask);
            }
        }
        flats.sort_by_key(|&f| (f.count_ones(), f));
        // mu(F, top) top-down: mu(top) = 1, mu(F) = -sum over flats strictly
        // between F and top (inclusive of top).
        let mut mobius = vec![0i64; flats.len()];
        for i in (0..flats.len()).rev() {
            let f = flats[i];
            if f == flats[flats.len() - 1] {
                mobius[i] = 1;
                continue;
            }
            let mut acc = 0i64;
            for j in i + 1..flats.len() {
                let h = flats[j];
                if h & f == f && h != f {
                    acc += mobius[j];
                }
            }
            mobius[i] = -acc;
        }
        Ok(FlatLattice { m, flats, mobius })
    }
}

/// The lattice of flats of a graphic matroid. Flats are edge subsets as
/// bitmasks over edge ranks, sorted by (size, value); `mobius[i]` is
/// `mu(flats[i], E)`.
#[derive(Debug, Clone)]
pub struct FlatLattice {
    pub m: usize,
    pub flats: Vec<u64>,
    pub mobius: Vec<i64>,
}

impl FlatLattice {
    pub fn full(&self) -> u64 {
        if self.m == 64 {
            u64::MAX
        } else {
            (1u64 << self.m) - 1
        }
    }

    pub fn edge_ranks(&self, mask: u64) -> Vec<usize> {
        (0..self.m).filter(|&r| mask >> r & 1 == 1).collect()
    }
}

/// Exact determinant by fraction-free (Bareiss) elimination.
fn int_determinant(mut a: Vec<Vec<BigInt>>) -> BigInt {
    let k = a.len();
    if k == 0 {
        return BigInt::one();
    }
    let mut sign = BigInt::one();
    let mut prev = BigInt::one();
    for col in 0..k {
        let pivot_row = match (col..k).find(|&r| !a[r][col].is_zero()) {
            Some(r) => r,
            None => return BigInt::zero(),
        };
        if pivot_row != col {
            a.swap(pivot_row, col);
            sign = -sign;
        }
        for r in col + 1..k {
            for c in col + 1..k {
                let num = &a[r][c] * &a[col][col] - &a[r][col] * &a[col][c];
                a[r][c] = num / &prev;
            }
            a[r][col] = BigInt::zero();
        }
        prev = a[col][col].clone();
    }
    let det = a[k - 1][k - 1].clone();
    if sign.is_negative() {
        -det
    } else {
        det
    }
}

#[derive(Clone)]
struct Dsu {
    parent: Vec<usize>,
}

impl Dsu {
    fn new(n: usize) -> Self {
        Dsu {
            parent: (0..n).collect(),
        }
    }

    fn find(&mut self, v: usize) -> usize {
        if self.parent[v] != v {
            let r = self.find(self.parent[v]);
            self.parent[v] = r;
        }
        self.parent[v]
    }

    /// Returns true if the two components were distinct.
    fn union(&mut self, u: usize, v: usize) -> bool {
        let (ru, rv) = (self.find(u), self.find(v));
        if ru == rv {
            return false;
        }
        // Smaller root wins so representatives stay minimal.
        let (lo, hi) = (ru.min(rv), ru.max(rv));
        self.parent[hi] = lo;
        true
    }

    fn components(&mut self) -> usize {
        (0..self.parent.len()).filter(|&v| self.find(v) == v).count()
    }
}

// Standard constructions used by the family formulas and across the tests.

/// Path on `n` vertices: edges (0,1), (1,2), ...
pub fn path(n: usize) -> Graph {
    let edges: Vec<_> = (0..n.saturating_sub(1)).map(|i| (i, i + 1)).collect();
    Graph::new(n, &edges).unwrap()
}

/// Cycle on `n >= 3` vertices: edges (0,1), ..., (n-1,0).
pub fn cycle(n: usize) -> Graph {
    assert!(n >= 3);
    let edges: Vec<_> = (0..n).map(|i| (i, (i + 1) % n)).collect();
    Graph::new(n, &edges).unwrap()
}

/// Complete graph on `n` vertices, edges in lexicographic order.
pub fn complete(n: usize) -> Graph {
    let mut edges = Vec::new();
    for u in 0..n {
        for v in u + 1..n {
            edges.push((u, v));
        }
    }
    Graph::new(n, &edges).unwrap()
}

/// Complete bipartite graph with parts `0..a` and `a..a+b`.
pub fn complete_bipartite(a: usize, b: usize) -> Graph {
    let mut edges = Vec::new();
    for u in 0..a {
        for v in 0..b {
            edges.push((u, a + v));
        }
    }
    Graph::new(a + b, &edges).unwrap()
}

/// Wheel: cone over the cycle `0..n`, hub is vertex `n`. Rim edges first,
/// then spokes.
pub fn wheel(n: usize) -> Graph {
    assert!(n >= 3);
    let mut edges: Vec<_> = (0..n).map(|i| (i, (i + 1) % n)).collect();
    edges.extend((0..n).map(|i| (i, n)));
    Graph::new(n + 1, &edges).unwrap()
}

/// Glues `g2` onto `g1` by identifying edge `e2` of `g2` with edge `e1` of
/// `g1` (endpoints identified in the given orientation). Edges of `g1` come
/// first, then the surviving edges of `g2` in their own order.
pub fn edge_join(g1: &Graph, e1: (usize, usize), g2: &Graph, e2: (usize, usize)) -> Result<Graph> {
    if g1.edge_rank(e1.0, e1.1).is_none() {
        return Err(Error::InvalidGraph(format!("({},{}) is not an edge of g1", e1.0, e1.1)));
    }
    if g2.edge_rank(e2.0, e2.1).is_none() {
        return Err(Error::InvalidGraph(format!("({},{}) is not an edge of g2", e2.0, e2.1)));
    }
    let mut map = vec![usize::MAX; g2.n()];
    map[e2.0] = e1.0;
    map[e2.1] = e1.1;
    let mut next = g1.n();
    for v in 0..g2.n() {
        if map[v] == usize::MAX {
            map[v] = next;
            next += 1;
        }
    }
    let mut edges: Vec<_> = g1.edges().to_vec();
    for &(u, v) in g2.edges() {
        let e = (map[u].min(map[v]), map[u].max(map[v]));
        if e != (e1.0.min(e1.1), e1.0.max(e1.1)) {
            edges.push(e);
        }
    }
    Graph::new(next, &edges)
}

/// Identifies vertex `v2` of `g2` with vertex `v1` of `g1`.
pub fn vertex_join(g1: &Graph, v1: usize, g2: &Graph, v2: usize) -> Result<Graph> {
    let mut map = vec![usize::MAX; g2.n()];
    map[v2] = v1;
    let mut next = g1.n();
    for v in 0..g2.n() {
        if map[v] == usize::MAX {
            map[v] = next;
            next += 1;
        }
    }
    let mut edges: Vec<_> = g1.edges().to_vec();
    for &(u, v) in g2.edges() {
        edges.push((map[u].min(map[v]), map[u].max(map[v])));
    }
    Graph::new(next, &edges)
}
