//! Kantorovich-Rubinstein polytopes of unit-weight graph metrics. For a
//! marked vertex subset V1, the KR polytope is the convex hull of
//! (e_i - e_j)/d(i,j) over ordered pairs in V1; it coincides with the
//! coordinate section P_G intersected with {x_v = 0 : v outside V1}, and the
//! operations here verify that at desk scale.

use num_bigint::BigInt;
use num_rational::BigRational;
use num_traits::{One, Zero};

use crate::exact::linalg::{solve_rational, solve_unique};
use crate::facets::{enumerate_facets, FacetLabeling};
use crate::graph::Graph;
use crate::volume::combinations;
use crate::{Error, Result};

/// Default cap on the section dimension (|V1| - 1) for vertex enumeration.
pub const DEFAULT_SECTION_DIM_CAP: usize = 4;

/// The metric induced on a marked vertex subset by BFS distances.
#[derive(Debug, Clone)]
pub struct MetricRestriction {
    pub subset: Vec<usize>,
    /// dist[a][b] between subset[a] and subset[b].
    pub dist: Vec<Vec<u64>>,
}

/// One KR generator (e_i - e_j)/d(i,j), in ambient coordinates.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct KrGenerator {
    pub i: usize,
    pub j: usize,
    pub point: Vec<BigRational>,
}

/// The generator set of KR(V1, d).
#[derive(Debug, Clone)]
pub struct KrGenerators {
    pub n: usize,
    pub generators: Vec<KrGenerator>,
}

fn check_subset(g: &Graph, v1: &[usize]) -> Result<Vec<usize>> {
    let mut subset: Vec<usize> = v1.to_vec();
    subset.sort_unstable();
    subset.dedup();
    if subset.len() < 2 {
        return Err(Error::InvalidGraph(
            "marked subset needs at least two vertices".into(),
        ));
    }
    if subset.iter().any(|&v| v >= g.n()) {
        return Err(Error::InvalidGraph("marked vertex out of range".into()));
    }
    Ok(subset)
}

pub fn metric_restriction(g: &Graph, v1: &[usize]) -> Result<MetricRestriction> {
    let subset = check_subset(g, v1)?;
    let mut dist = vec![vec![0u64; subset.len()]; subset.len()];
    for (a, &i) in subset.iter().enumerate() {
        let d = g.distances(i)?;
        for (b, &j) in subset.iter().enumerate() {
            dist[a][b] = d[j] as u64;
        }
    }
    Ok(MetricRestriction { subset, dist })
}

/// The points (e_i - e_j)/d(i,j) for ordered pairs i != j in V1.
pub fn kr_generators(g: &Graph, v1: &[usize]) -> Result<KrGenerators> {
    let metric = metric_restriction(g, v1)?;
    let mut generators = Vec::new();
    for (a, &i) in metric.subset.iter().enumerate() {
        for (b, &j) in metric.subset.iter().enumerate() {
            if a == b {
                continue;
            }
            let d = BigRational::from_integer(BigInt::from(metric.dist[a][b]));
            let mut point = vec![BigRational::zero(); g.n()];
            point[i] = d.recip();
            point[j] = -d.recip();
            generators.push(KrGenerator { i, j, point });
        }
    }
    Ok(KrGenerators {
        n: g.n(),
        generators,
    })
}

fn facet_dot(f: &FacetLabeling, x: &[BigRational]) -> BigRational {
    f.values()
        .iter()
        .zip(x)
        .map(|(&c, xv)| BigRational::from_integer(BigInt::from(c)) * xv)
        .sum()
}

/// True when every KR generator satisfies every facet inequality of P_G,
/// i.e. the containment direction of the section theorem.
pub fn verify_generators_in_section(g: &Graph, v1: &[usize]) -> Result<bool> {
    let gens = kr_generators(g, v1)?;
    let facets = enumerate_facets(g)?;
    let one = BigRational::one();
    Ok(gens
        .generators
        .iter()
        .all(|gen| facets.iter().all(|f| facet_dot(f, &gen.point) <= one)))
}

/// All vertices of the section P_G with {x_v = 0 : v not in V1}: solve every
/// (section-dimension)-subset of facet hyperplanes together with the fixed
/// equations, keep the feasible unique solutions, deduplicate.
pub fn section_vertices(
    g: &Graph,
    v1: &[usize],
    dim_cap: usize,
) -> Result<Vec<Vec<BigRational>>> {
    let subset = check_subset(g, v1)?;
    let section_dim = subset.len() - 1;
    if section_dim > dim_cap {
        return Err(Error::SizeBudgetExceeded(format!(
            "section vertex enumeration needs |V1| - 1 <= {dim_cap}, got {section_dim}"
        )));
    }
    let facets = enumerate_facets(g)?;
    let n = g.n();
    let marked = {
        let mut m = vec![false; n];
        for &v in &subset {
            m[v] = true;
        }
        m
    };
    // Fixed rows: x_v = 0 outside V1 and the zero-sum equation.
    let mut fixed_rows: Vec<Vec<BigRational>> = Vec::new();
    for v in 0..n {
        if !marked[v] {
            let mut row = vec![BigRational::zero(); n];
            row[v] = BigRational::one();
            fixed_rows.push(row);
        }
    }
    fixed_rows.push(vec![BigRational::one(); n]);

    let one = BigRational::one();
    let mut vertices: Vec<Vec<BigRational>> = Vec::new();
    for combo in combinations(facets.len(), section_dim) {
        let mut rows = fixed_rows.clone();
        let mut rhs = vec![BigRational::zero(); rows.len()];
        for &fi in &combo {
            rows.push(
                facets[fi]
                    .values()
                    .iter()
                    .map(|&c| BigRational::from_integer(BigInt::from(c)))
                    .collect(),
            );
            rhs.push(one.clone());
        }
        let Some(x) = solve_rational(&rows, &rhs) else {
            continue;
        };
        if facets.iter().all(|f| facet_dot(f, &x) <= one) {
            vertices.push(x);
        }
    }
    vertices.sort();
    vertices.dedup();
    Ok(vertices)
}

/// Checks the section theorem on an instance: every KR generator lies in the
/// section, and every section vertex is a convex combination of at most
/// dim+1 generators (exact Caratheodory search).
pub fn verify_section_equality(g: &Graph, v1: &[usize], dim_cap: usize) -> Result<bool> {
    if !verify_generators_in_section(g, v1)? {
        return Ok(false);
    }
    let gens = kr_generators(g, v1)?;
    let verts = section_vertices(g, v1, dim_cap)?;
    let subset = check_subset(g, v1)?;
    let max_support = subset.len(); // dim + 1
    for x in &verts {
        if !in_convex_hull(x, &gens, max_support) {
            return Ok(false);
        }
    }
    Ok(true)
}

fn in_convex_hull(x: &[BigRational], gens: &KrGenerators, max_support: usize) -> bool {
    let n = gens.n;
    for q in 1..=max_support {
        for combo in combinations(gens.generators.len(), q) {
            // Coordinates of the chosen generators plus the sum-to-one row.
            let mut rows: Vec<Vec<BigRational>> = Vec::with_capacity(n + 1);
            for coord in 0..n {
                rows.push(
                    combo
                        .iter()
                        .map(|&gi| gens.generators[gi].point[coord].clone())
                        .collect(),
                );
            }
            rows.push(vec![BigRational::one(); q]);
            let mut rhs: Vec<BigRational> = x.to_vec();
            rhs.push(BigRational::one());
            if let Some(lambda) = solve_unique(&rows, &rhs) {
                if lambda.iter().all(|l| l >= &BigRational::zero()) {
                    return true;
                }
            }
        }
    }
    false
}
