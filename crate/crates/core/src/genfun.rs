//! Goulden-Jackson cluster method: exact rational generating functions for
//! counts of words over a k-letter alphabet avoiding a set of forbidden
//! factors, in the linear and the cyclic (rooted, seam-wrapping) variants,
//! with a brute-force oracle alongside.

use num_rational::BigRational;

use crate::exact::{RatPoly, RationalFunction, RfMatrix};
use crate::{Error, Result};

/// Default cap on k^n for the brute-force word scan.
pub const DEFAULT_WORD_BUDGET: u64 = 10_000_000;

/// A set of forbidden factors over the alphabet 0..k.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct BadWordSet {
    k: usize,
    words: Vec<Vec<u8>>,
}

impl BadWordSet {
    pub fn new(k: usize, words: Vec<Vec<u8>>) -> Result<Self> {
        for w in &words {
            if w.is_empty() {
                return Err(Error::InvalidBadWordSet("empty word".into()));
            }
            if w.iter().any(|&c| c as usize >= k) {
                return Err(Error::InvalidBadWordSet(format!(
                    "symbol out of alphabet range in {w:?}"
                )));
            }
        }
        for i in 0..words.len() {
            for j in 0..words.len() {
                if i != j && is_factor(&words[i], &words[j]) {
                    return Err(Error::InvalidBadWordSet(format!(
                        "{:?} is a subword of {:?}",
                        words[i], words[j]
                    )));
                }
            }
        }
        Ok(BadWordSet { k, words })
    }

    pub fn alphabet(&self) -> usize {
        self.k
    }

    pub fn words(&self) -> &[Vec<u8>] {
        &self.words
    }
}

/// True when `needle` occurs in `hay` as a contiguous factor. Equal words
/// count, so distinct bad words that contain one another are rejected.
fn is_factor(needle: &[u8], hay: &[u8]) -> bool {
    hay.len() >= needle.len() && hay.windows(needle.len()).any(|w| w == needle)
}

/// The overlap polynomial (u : v): for every proper suffix of u that is a
/// proper prefix of v, the weight of v with that prefix erased.
fn overlap(u: &[u8], v: &[u8]) -> RatPoly {
    let mut acc = RatPoly::zero();
    for len in 1..u.len().min(v.len()) {
        if u[u.len() - len..] == v[..len] {
            acc = &acc + &RatPoly::new(monomial_coeffs(v.len() - len));
        }
    }
    acc
}

fn monomial_coeffs(deg: usize) -> Vec<BigRational> {
    use num_traits::{One, Zero};
    let mut c = vec![BigRational::zero(); deg + 1];
    c[deg] = BigRational::one();
    c
}

/// The solved cluster system of a bad-word set: the per-word generating
/// functions L_v, their sum L, the overlap matrix A and the cyclic-correction
/// matrix M = A (I-A)^{-1} s dA/ds.
#[derive(Debug, Clone)]
pub struct ClusterSystem {
    pub l_values: Vec<RationalFunction>,
    pub l_total: RationalFunction,
    pub a: RfMatrix,
    pub m: RfMatrix,
}

pub fn cluster_system(b: &BadWordSet) -> Result<ClusterSystem> {
    let n = b.words.len();
    // L_v = -weight(v) - sum_u (u : v) L_u, i.e. (I + O^T) L = -w with
    // O[u][v] = (u : v).
    let mut sys = RfMatrix::identity(n);
    for (vi, v) in b.words.iter().enumerate() {
        for (ui, u) in b.words.iter().enumerate() {
            let o = overlap(u, v);
            if !o.is_zero() {
                let cur = sys.at(vi, ui).clone();
                *sys.at_mut(vi, ui) = &cur + &RationalFunction::from_poly(o);
            }
        }
    }
    let rhs: Vec<RationalFunction> = b
        .words
        .iter()
        .map(|w| -&RationalFunction::from_poly(RatPoly::new(monomial_coeffs(w.len()))))
        .collect();
    let l_values = sys.solve(&rhs)?;
    let mut l_total = RationalFunction::zero();
    for l in &l_values {
        l_total = &l_total + l;
    }

    let mut a = RfMatrix::zero(n, n);
    for (i, u) in b.words.iter().enumerate() {
        for (j, v) in b.words.iter().enumerate() {
            let o = overlap(u, v);
            if !o.is_zero() {
                *a.at_mut(i, j) = -&RationalFunction::from_poly(o);
            }
        }
    }
    let m = if n == 0 {
        RfMatrix::zero(0, 0)
    } else {
        let inv = RfMatrix::identity(n).sub(&a).inverse()?;
        let s = RationalFunction::s();
        let s_da = a.map(|entry| &s * &entry.derivative());
        a.mul(&inv).mul(&s_da)
    };
    Ok(ClusterSystem {
        l_values,
        l_total,
        a,
        m,
    })
}

/// Generating function for counts of linear words avoiding the bad set:
/// 1/(1 - ks - L).
pub fn gj_linear(b: &BadWordSet) -> Result<RationalFunction> {
    let sys = cluster_system(b)?;
    let ks = RationalFunction::from_poly(RatPoly::from_i64(&[0, b.k as i64]));
    let den = &(&RationalFunction::one() - &ks) - &sys.l_total;
    Ok(&RationalFunction::one() / &den)
}

/// Cyclic counts: the closed form plus the per-word chop corrections.
#[derive(Debug, Clone)]
pub struct CyclicGenFun {
    /// The generating function itself, corrections included.
    pub genfun: RationalFunction,
    /// The polynomial of low-order Taylor terms removed by the chops.
    pub correction: RatPoly,
}

/// Generating function for rooted cyclic words avoiding the bad set
/// cyclically: (1 + s dL/ds - L)/(1 - ks - L) + sum_i chop_{len_i}(m_ii).
pub fn gj_cyclic(b: &BadWordSet) -> Result<CyclicGenFun> {
    let sys = cluster_system(b)?;
    let l = &sys.l_total;
    let s = RationalFunction::s();
    let ks = RationalFunction::from_poly(RatPoly::from_i64(&[0, b.k as i64]));
    let num = &(&RationalFunction::one() + &(&s * &l.derivative())) - l;
    let den = &(&RationalFunction::one() - &ks) - l;
    let mut total = &num / &den;
    let mut correction = RatPoly::zero();
    for (i, w) in b.words.iter().enumerate() {
        let mii = sys.m.at(i, i);
        let head = mii.taylor_poly(w.len())?;
        total = &total + &(mii - &RationalFunction::from_poly(head.clone()));
        correction = &correction + &head;
    }
    Ok(CyclicGenFun {
        genfun: total,
        correction,
    })
}

/// Exhaustive word count. Linear mode checks ordinary factors; cyclic mode
/// checks every window of each bad word's length starting at each of the n
/// positions of the periodic extension, so factors longer than the word wrap
/// repeatedly.
pub fn brute_force_words(b: &BadWordSet, n: usize, cyclic: bool, budget: u64) -> Result<u64> {
    if n == 0 {
        return Ok(1);
    }
    let total = (b.k as u64).checked_pow(n as u32);
    match total {
        Some(t) if t <= budget => {}
        _ => {
            return Err(Error::SizeBudgetExceeded(format!(
                "word scan needs k^n <= {budget}"
            )))
        }
    }
    let mut word = vec![0u8; n];
    let mut count = 0u64;
    loop {
        let bad = if cyclic {
            b.words.iter().any(|w| {
                (0..n).any(|start| (0..w.len()).all(|t| word[(start + t) % n] == w[t]))
            })
        } else {
            b.words.iter().any(|w| is_factor(w, &word))
        };
        if !bad {
            count += 1;
        }
        // Odometer increment.
        let mut pos = n;
        loop {
            if pos == 0 {
                return Ok(count);
            }
            pos -= 1;
            word[pos] += 1;
            if (word[pos] as usize) < b.k {
                break;
            }
            word[pos] = 0;
        }
    }
}

/// The three-letter word set encoding wheel facets: +, 0, - with +-, -+
/// and 000 forbidden.
pub fn wheel_word_set() -> BadWordSet {
    BadWordSet::new(3, vec![vec![0, 1], vec![1, 0], vec![2, 2, 2]]).unwrap()
}

/// The four-letter refinement used for wheel volumes: the extra letter
/// duplicates 0, and 0̄0̄, 00̄, 0̄0 are forbidden alongside.
pub fn wheel_volume_word_set() -> BadWordSet {
    BadWordSet::new(
        4,
        vec![
            vec![0, 1],
            vec![1, 0],
            vec![2, 2, 2],
            vec![3, 3],
            vec![2, 3],
            vec![3, 2],
        ],
    )
    .unwrap()
}
