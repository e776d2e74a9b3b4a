//! Closed-form invariants for the graph families with explicit formulas:
//! even cycles, trees, complete graphs, edge/vertex joins, wheels, and
//! bipartite outerplanar graphs. Each formula is cross-checked against the
//! general machinery in the integration tests.

use num_bigint::BigInt;
use num_rational::BigRational;
use num_traits::{One, Zero};

use crate::exact::{binomial, IntPoly, RationalFunction, RatPoly};
use crate::{Error, Result};

/// Invariants a family formula can produce; what is populated depends on
/// the family.
#[derive(Debug, Clone, Default)]
pub struct FamilyInvariants {
    pub facets: Option<BigInt>,
    pub volume: Option<BigInt>,
    pub fvector: Option<Vec<BigInt>>,
    pub hstar: Option<IntPoly>,
}

/// Graph families with closed-form invariants, as CLI-facing parameter
/// bundles.
#[derive(Debug, Clone, PartialEq, Eq)]
pub enum FamilySpec {
    /// Even cycle C_{2k}.
    Cycle { k: u64 },
    /// Any tree on n vertices.
    Tree { n: u64 },
    /// Complete graph K_n.
    Complete { n: u64 },
    /// Wheel K_1 * C_n.
    Wheel { n: u64 },
    /// Two odd cycles of lengths 2i+1 and 2j+1 joined along an edge.
    EdgeJoinOddCycles { i: u64, j: u64 },
    /// Bipartite connected outerplanar graph: bounded-region half-lengths,
    /// shared-edge count and bridge count, read off a drawing.
    OuterplanarBipartite { a: Vec<u64>, s: u64, t: u64 },
}

impl FamilySpec {
    pub fn evaluate(&self) -> Result<FamilyInvariants> {
        match self {
            FamilySpec::Cycle { k } => {
                let inv = cycle_invariants(*k)?;
                Ok(FamilyInvariants {
                    facets: Some(inv.facets),
                    volume: Some(inv.volume),
                    fvector: Some(inv.fvector),
                    hstar: None,
                })
            }
            FamilySpec::Tree { n } => {
                let inv = tree_invariants(*n)?;
                Ok(FamilyInvariants {
                    facets: Some(inv.facets),
                    volume: Some(inv.volume),
                    fvector: None,
                    hstar: Some(inv.hstar),
                })
            }
            FamilySpec::Complete { n } => Ok(FamilyInvariants {
                facets: Some(complete_graph_facets(*n)),
                ..Default::default()
            }),
            FamilySpec::Wheel { n } => Ok(FamilyInvariants {
                facets: Some(wheel_facets(*n)?),
                volume: Some(wheel_volume(*n)?),
                ..Default::default()
            }),
            FamilySpec::EdgeJoinOddCycles { i, j } => Ok(FamilyInvariants {
                volume: Some(odd_cycles_edge_join_volume(*i, *j)?),
                ..Default::default()
            }),
            FamilySpec::OuterplanarBipartite { a, s, t } => {
                let inv = outerplanar_bipartite(a, *s, *t)?;
                Ok(FamilyInvariants {
                    facets: Some(inv.facets),
                    volume: Some(inv.volume),
                    ..Default::default()
                })
            }
        }
    }
}

#[derive(Debug, Clone)]
pub struct CycleInvariants {
    pub facets: BigInt,
    pub volume: BigInt,
    /// f_0 .. f_{2k-2}.
    pub fvector: Vec<BigInt>,
}

/// C_{2k}: C(2k,k) facets, volume k C(2k,k), and the full f-vector
/// (ordered pairs of disjoint edge subsets below the facet dimension).
pub fn cycle_invariants(k: u64) -> Result<CycleInvariants> {
    if k < 2 {
        return Err(Error::InvalidGraph("even cycle needs k >= 2".into()));
    }
    let facets = binomial(2 * k, k);
    let volume = BigInt::from(k) * &facets;
    let dim = (2 * k - 1) as usize;
    let mut fvector = vec![BigInt::zero(); dim];
    for (i, f) in fvector.iter_mut().enumerate().take(dim - 1) {
        let mut acc = BigInt::zero();
        for a in 0..k.min(i as u64 + 2) {
            let b = i as u64 + 1 - a;
            if b < k {
                acc += binomial(2 * k, a) * binomial(2 * k - a, b);
            }
        }
        *f = acc;
    }
    fvector[dim - 1] = facets.clone();
    Ok(CycleInvariants {
        facets,
        volume,
        fvector,
    })
}

#[derive(Debug, Clone)]
pub struct TreeInvariants {
    pub facets: BigInt,
    pub volume: BigInt,
    pub hstar: IntPoly,
}

/// Any tree on n vertices: the polytope is a (n-1)-cross-polytope.
pub fn tree_invariants(n: u64) -> Result<TreeInvariants> {
    if n < 2 {
        return Err(Error::InvalidGraph("tree family needs n >= 2".into()));
    }
    let two = BigInt::from(2);
    let facets = two.pow(n as u32 - 1);
    Ok(TreeInvariants {
        volume: facets.clone(),
        facets,
        hstar: IntPoly::one_plus_t_pow(n as usize - 1),
    })
}

/// K_n has 2^n - 2 facets.
pub fn complete_graph_facets(n: u64) -> BigInt {
    BigInt::from(2).pow(n as u32) - 2
}

/// Edge join of two connected bipartite graphs: half the product of the
/// facet counts.
pub fn edge_join_facets(f1: &BigInt, f2: &BigInt) -> BigInt {
    (f1 * f2) / 2
}

/// Vertex join (or disjoint union): h* multiplies.
pub fn vertex_join_hstar(h1: &IntPoly, h2: &IntPoly) -> IntPoly {
    h1 * h2
}

/// Edge join with bipartite second factor: h* is H1 H2 / (1+t); a nonzero
/// remainder signals a hypothesis violation.
pub fn edge_join_hstar(h1: &IntPoly, h2: &IntPoly) -> Result<IntPoly> {
    let prod = h1 * h2;
    let (q, r) = prod.divrem_monic(&IntPoly::from_i64(&[1, 1]))?;
    if !r.is_zero() {
        return Err(Error::NonDivisible);
    }
    Ok(q)
}

/// Gamma-vector of an edge join: the convolution of the inputs.
pub fn gamma_convolution(g1: &[BigInt], g2: &[BigInt]) -> Vec<BigInt> {
    if g1.is_empty() || g2.is_empty() {
        return vec![];
    }
    let mut out = vec![BigInt::zero(); g1.len() + g2.len() - 1];
    for (i, a) in g1.iter().enumerate() {
        for (j, b) in g2.iter().enumerate() {
            out[i + j] += a * b;
        }
    }
    out
}

/// Volume of two odd cycles (lengths 2i+1, 2j+1) joined along an edge:
/// (i + j + 2ij) C(2i,i) C(2j,j).
pub fn odd_cycles_edge_join_volume(i: u64, j: u64) -> Result<BigInt> {
    if i < 1 || j < 1 {
        return Err(Error::InvalidGraph("odd cycle join needs i, j >= 1".into()));
    }
    Ok(BigInt::from(i + j + 2 * i * j) * binomial(2 * i, i) * binomial(2 * j, j))
}

/// The printed generating function for wheel facet counts,
/// (2z^6 + 2z^5 - 7z^4 - 3z^3 + z + 1) / ((1-z)(1 - z - 2z^2 - 2z^3)).
pub fn wheel_facets_genfun() -> RationalFunction {
    let num = RatPoly::from_i64(&[1, 1, 0, -3, -7, 2, 2]);
    let den = &RatPoly::from_i64(&[1, -1]) * &RatPoly::from_i64(&[1, -1, -2, -2]);
    RationalFunction::new(num, den).unwrap()
}

/// Number of facets of P_{K_1 * C_n}: initial terms from the generating
/// function, then the recursion a_n = 2a_{n-1} + a_{n-2} - 2a_{n-4}.
pub fn wheel_facets(n: u64) -> Result<BigInt> {
    if n < 3 {
        return Err(Error::InvalidGraph("wheel needs n >= 3".into()));
    }
    let series = wheel_facets_genfun().series(6.min(n as usize))?;
    if n <= 6 {
        return Ok(series[n as usize].to_integer());
    }
    let mut hist: Vec<BigInt> = series[3..=6].iter().map(|c| c.to_integer()).collect();
    for _ in 7..=n {
        let next = 2 * &hist[3] + &hist[2] - 2 * &hist[0];
        hist.rotate_left(1);
        hist[3] = next;
    }
    Ok(hist[3].clone())
}

/// Normalized volume of P_{K_1 * C_n}: the conjugate-surd closed form
/// (1-sqrt3)^n + (1+sqrt3)^n evaluated through its integer recurrence
/// p_m = 2p_{m-1} + 2p_{m-2}, minus 2 when n is even.
pub fn wheel_volume(n: u64) -> Result<BigInt> {
    if n < 3 {
        return Err(Error::InvalidGraph("wheel needs n >= 3".into()));
    }
    let (mut prev, mut cur) = (BigInt::from(2), BigInt::from(2));
    for _ in 2..=n {
        let next = 2 * (&cur + &prev);
        prev = cur;
        cur = next;
    }
    if n % 2 == 0 {
        cur -= 2;
    }
    Ok(cur)
}

/// True when the cyclic word over {+1, 0, -1} encodes a wheel facet: no +-
/// or -+ adjacency and no 000 run, read cyclically.
pub fn is_wheel_facet_word(w: &[i8]) -> bool {
    let n = w.len();
    if n < 3 || w.iter().any(|&c| c.abs() > 1) {
        return false;
    }
    for i in 0..n {
        let (a, b, c) = (w[i], w[(i + 1) % n], w[(i + 2) % n]);
        if a * b == -1 {
            return false;
        }
        if a == 0 && b == 0 && c == 0 {
            return false;
        }
    }
    true
}

/// Volume of the wheel facet encoded by a cyclic word: 2^{c(w)}, minus one
/// for the four exceptional alternating words at even n. c(w) counts the
/// cyclic factors of shape (+-, 0, +-), i.e. the 4-cycles of G_w through
/// the cone vertex.
pub fn per_facet_wheel_volume(w: &[i8]) -> Result<BigInt> {
    if !is_wheel_facet_word(w) {
        return Err(Error::NotAFacetWord(format!("{w:?}")));
    }
    let n = w.len();
    let c = (0..n)
        .filter(|&i| w[i] != 0 && w[(i + 1) % n] == 0 && w[(i + 2) % n] != 0)
        .count();
    let mut vol = BigInt::from(2).pow(c as u32);
    if n % 2 == 0 && is_exceptional(w) {
        vol -= 1;
    }
    Ok(vol)
}

/// The four alternating words +0+0..., 0+0+..., -0-0..., 0-0-...
fn is_exceptional(w: &[i8]) -> bool {
    let n = w.len();
    if n % 2 != 0 {
        return false;
    }
    [(1, 0), (0, 1), (-1, 0), (0, -1)].iter().any(|&(a, b)| {
        (0..n).all(|i| w[i] == if i % 2 == 0 { a } else { b })
    })
}

#[derive(Debug, Clone)]
pub struct OuterplanarInvariants {
    pub facets: BigInt,
    pub volume: BigInt,
}

/// Bipartite connected outerplanar graph with bounded-region half-lengths
/// `a`, `s` edges shared between two bounded regions and `t` bridges:
/// facets = 2^{t-s} prod C(2a_i, a_i), volume = 2^{t-s} prod a_i C(2a_i, a_i).
/// The power may be fractional on its own; the products must be integers.
pub fn outerplanar_bipartite(a: &[u64], s: u64, t: u64) -> Result<OuterplanarInvariants> {
    if a.iter().any(|&ai| ai < 2) {
        return Err(Error::InvalidGraph(
            "outerplanar half-lengths need a_i >= 2".into(),
        ));
    }
    let pow = power_of_two(t as i64 - s as i64);
    let mut facets = BigRational::one();
    let mut volume = BigRational::one();
    for &ai in a {
        let b = BigRational::from_integer(binomial(2 * ai, ai));
        facets *= &b;
        volume *= BigRational::from_integer(BigInt::from(ai)) * &b;
    }
    facets *= &pow;
    volume *= &pow;
    let as_int = |x: &BigRational, what: &str| -> Result<BigInt> {
        if !x.is_integer() {
            return Err(Error::NonIntegralResult(format!("{what} = {x}")));
        }
        Ok(x.to_integer())
    };
    Ok(OuterplanarInvariants {
        facets: as_int(&facets, "facet count")?,
        volume: as_int(&volume, "volume")?,
    })
}

fn power_of_two(e: i64) -> BigRational {
    let two = BigRational::from_integer(BigInt::from(2));
    let mut acc = BigRational::one();
    for _ in 0..e.unsigned_abs() {
        acc *= &two;
    }
    if e < 0 {
        acc.recip()
    } else {
        acc
    }
}
