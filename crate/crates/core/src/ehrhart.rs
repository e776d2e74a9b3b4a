//! Ehrhart data of P_G: exact lattice-point counts of dilates, the
//! interpolated Ehrhart polynomial, h*- and gamma-vectors, and lattice-point
//! counts of the polar dual.
//!
//! All counts live in the rank n-1 lattice {x : sum x = 0}; the dilate jP_G
//! is cut out there by the facet inequalities f.x <= j.

use num_bigint::BigInt;
use num_rational::BigRational;
use num_traits::{One, Zero};

use crate::exact::{binomial, interpolate, IntPoly, RatPoly};
use crate::facets::{enumerate_facets, facet_search, FacetLabeling};
use crate::graph::Graph;
use crate::{Error, Result};

/// Default cap on the vertex count for dilate enumeration.
pub const DEFAULT_LATTICE_VERTEX_CAP: usize = 8;

/// Ehrhart polynomial, h*-polynomial and gamma-vector of P_G.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct HStarData {
    pub ehrhart: RatPoly,
    pub hstar: IntPoly,
    pub gamma: Vec<BigInt>,
    pub dim: usize,
}

impl HStarData {
    /// Normalized volume: h*(1).
    pub fn volume(&self) -> BigInt {
        self.hstar.coeffs().iter().sum()
    }

    pub fn gamma_nonnegative(&self) -> bool {
        self.gamma.iter().all(|g| g >= &BigInt::zero())
    }
}

/// Number of lattice points of the dilate jP_G.
pub fn lattice_points(g: &Graph, j: u64, vertex_cap: usize) -> Result<u64> {
    if g.n() > vertex_cap {
        return Err(Error::SizeBudgetExceeded(format!(
            "dilate enumeration needs n <= {vertex_cap}, got {}",
            g.n()
        )));
    }
    let facets = enumerate_facets(g)?;
    Ok(count_dilate_points(&facets, g.n(), j))
}

/// Box scan over {x : |x_v| <= j, sum x = 0} with the facet inequalities
/// applied at the leaves; the last coordinate is forced by the zero sum.
fn count_dilate_points(facets: &[FacetLabeling], n: usize, j: u64) -> u64 {
    let j = j as i64;
    let mut x = vec![0i64; n];
    let mut count = 0u64;
    fn rec(
        facets: &[FacetLabeling],
        x: &mut Vec<i64>,
        pos: usize,
        sum: i64,
        j: i64,
        count: &mut u64,
    ) {
        let n = x.len();
        if pos == n - 1 {
            let last = -sum;
            if last.abs() <= j {
                x[n - 1] = last;
                if facets.iter().all(|f| f.dot(x) <= j) {
                    *count += 1;
                }
            }
            return;
        }
        // The remaining coordinates can still cancel the running sum.
        let slack = (n - 1 - pos) as i64 * j;
        for v in -j..=j {
            if (sum + v).abs() <= slack {
                x[pos] = v;
                rec(facets, x, pos + 1, sum + v, j, count);
            }
        }
    }
    if n == 1 {
        return 1; // the origin
    }
    rec(facets, &mut x, 0, 0, j, &mut count);
    count
}

/// Ehrhart polynomial by exact interpolation at j = 0..dim, then h* through
/// the binomial-basis relation and gamma by repeated extraction.
///
/// Panics if the resulting h* fails reflexivity (non-palindromic or
/// h*_0 != 1): that would contradict the underlying theory, so it is a hard
/// assertion rather than an error value.
pub fn h_star(g: &Graph, vertex_cap: usize) -> Result<HStarData> {
    let dim = g.n() - 1;
    let facets = enumerate_facets(g)?;
    if g.n() > vertex_cap {
        return Err(Error::SizeBudgetExceeded(format!(
            "h* needs n <= {vertex_cap}, got {}",
            g.n()
        )));
    }
    let counts: Vec<BigInt> = (0..=dim as u64)
        .map(|j| BigInt::from(count_dilate_points(&facets, g.n(), j)))
        .collect();
    let points: Vec<(BigInt, BigRational)> = counts
        .iter()
        .enumerate()
        .map(|(j, c)| (BigInt::from(j), BigRational::from_integer(c.clone())))
        .collect();
    let ehrhart = interpolate(&points)?;

    // h*_i = sum_{k<=i} (-1)^{i-k} C(dim+1, i-k) E(k).
    let mut hstar_coeffs = Vec::with_capacity(dim + 1);
    for i in 0..=dim {
        let mut acc = BigInt::zero();
        for k in 0..=i {
            let c = binomial((dim + 1) as u64, (i - k) as u64);
            let term = c * &counts[k];
            if (i - k) % 2 == 0 {
                acc += term;
            } else {
                acc -= term;
            }
        }
        hstar_coeffs.push(acc);
    }
    let hstar = IntPoly::new(hstar_coeffs);
    assert!(
        hstar.coeffs().iter().all(|c| c >= &BigInt::zero()),
        "NonPalindromicHStar: negative h* coefficient for {g:?}"
    );
    assert_eq!(
        hstar.degree(),
        Some(dim),
        "NonPalindromicHStar: h* degree != dim for {g:?}"
    );
    assert!(
        hstar.is_palindromic() && hstar.coeff(0).is_one(),
        "NonPalindromicHStar: h* = {hstar} is not palindromic with h*_0 = 1"
    );
    let gamma = gamma_vector(&hstar);
    Ok(HStarData {
        ehrhart,
        hstar,
        gamma,
        dim,
    })
}

/// Gamma-vector of a palindromic polynomial: the coefficients in the basis
/// t^i (1+t)^{d-2i}.
pub fn gamma_vector(h: &IntPoly) -> Vec<BigInt> {
    let Some(d) = h.degree() else {
        return vec![];
    };
    assert!(h.is_palindromic(), "gamma extraction needs a palindromic input");
    let mut rest = h.clone();
    let mut gamma = Vec::with_capacity(d / 2 + 1);
    for i in 0..=d / 2 {
        let gi = rest.coeff(i);
        let basis = &IntPoly::monomial(gi.clone(), i) * &IntPoly::one_plus_t_pow(d - 2 * i);
        rest = &rest - &basis;
        gamma.push(gi);
    }
    assert!(rest.is_zero(), "palindromic extraction left a remainder");
    gamma
}

/// Number of lattice points of the polar dual of P_G: integer labelings f
/// with f(0) = 0 and |f(u)-f(v)| <= 1 on every edge. The facet normals of
/// the dual are the vertices of P_G, so these labelings are exactly the dual
/// lattice points in the quotient lattice.
pub fn polar_dual_points(g: &Graph) -> Result<u64> {
    let mut count = 0u64;
    facet_search(g, false, |_| count += 1)?;
    Ok(count)
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::graph::{complete, cycle, edge_join, path, DEFAULT_CYCLE_BUDGET};
    use crate::volume::normalized_volume;

    #[test]
    fn zeroth_dilate_is_origin() {
        for g in [cycle(4), complete(4), path(3)] {
            assert_eq!(lattice_points(&g, 0, DEFAULT_LATTICE_VERTEX_CAP).unwrap(), 1);
        }
    }

    #[test]
    fn c4_small_dilates() {
        let g = cycle(4);
        assert_eq!(lattice_points(&g, 1, DEFAULT_LATTICE_VERTEX_CAP).unwrap(), 9);
        assert_eq!(lattice_points(&g, 2, DEFAULT_LATTICE_VERTEX_CAP).unwrap(), 35);
        // Consistency with h* = (1,5,5,1): E(2) = C(5,3) + 5 C(4,3) + 5 C(3,3).
        let rhs = binomial(5, 3) + 5 * binomial(4, 3) + 5 * binomial(3, 3);
        assert_eq!(BigInt::from(35), rhs);
    }

    #[test]
    fn tree_hstar_is_binomial_row() {
        for n in 2..=5 {
            let data = h_star(&path(n), DEFAULT_LATTICE_VERTEX_CAP).unwrap();
            assert_eq!(data.hstar, IntPoly::one_plus_t_pow(n - 1));
        }
    }

    #[test]
    fn c4_hstar_and_gamma() {
        let data = h_star(&cycle(4), DEFAULT_LATTICE_VERTEX_CAP).unwrap();
        assert_eq!(data.hstar, IntPoly::from_i64(&[1, 5, 5, 1]));
        assert_eq!(data.gamma, vec![BigInt::from(1), BigInt::from(2)]);
        assert_eq!(data.volume(), BigInt::from(12));
    }

    #[test]
    fn glued_squares_hstar() {
        let g = edge_join(&cycle(4), (0, 1), &cycle(4), (0, 1)).unwrap();
        let data = h_star(&g, DEFAULT_LATTICE_VERTEX_CAP).unwrap();
        assert_eq!(data.hstar, IntPoly::from_i64(&[1, 9, 26, 26, 9, 1]));
    }

    #[test]
    fn hstar_at_one_is_volume() {
        for g in [cycle(4), cycle(5), complete(4), path(4)] {
            let data = h_star(&g, DEFAULT_LATTICE_VERTEX_CAP).unwrap();
            let vol = normalized_volume(&g, DEFAULT_CYCLE_BUDGET).unwrap();
            assert_eq!(data.volume(), BigInt::from(vol), "{g:?}");
        }
    }

    #[test]
    fn ehrhart_extrapolates() {
        for g in [cycle(4), path(4), complete(3)] {
            let data = h_star(&g, DEFAULT_LATTICE_VERTEX_CAP).unwrap();
            for extra in 1..=2u64 {
                let j = (data.dim as u64) + extra;
                let direct = lattice_points(&g, j, DEFAULT_LATTICE_VERTEX_CAP).unwrap();
                let val = data
                    .ehrhart
                    .eval(&BigRational::from_integer(BigInt::from(j)));
                assert_eq!(val, BigRational::from_integer(BigInt::from(direct)));
            }
        }
    }

    #[test]
    fn dual_point_counts() {
        assert_eq!(polar_dual_points(&path(2)).unwrap(), 3);
        assert_eq!(polar_dual_points(&cycle(4)).unwrap(), 19);
        assert_eq!(polar_dual_points(&cycle(6)).unwrap(), 141);
    }

    #[test]
    fn interpolation_recovers_c4_ehrhart() {
        // Dilate counts 1, 9, 35, 91 pin down the Ehrhart polynomial.
        let pts: Vec<(BigInt, BigRational)> = [1i64, 9, 35, 91]
            .iter()
            .enumerate()
            .map(|(j, &c)| {
                (
                    BigInt::from(j),
                    BigRational::from_integer(BigInt::from(c)),
                )
            })
            .collect();
        let poly = crate::exact::interpolate(&pts).unwrap();
        let data = h_star(&cycle(4), DEFAULT_LATTICE_VERTEX_CAP).unwrap();
        assert_eq!(poly, data.ehrhart);
    }

    #[test]
    fn budget_enforced() {
        let g = cycle(9);
        assert!(matches!(
            lattice_points(&g, 1, DEFAULT_LATTICE_VERTEX_CAP),
            Err(Error::SizeBudgetExceeded(_))
        ));
    }
}
