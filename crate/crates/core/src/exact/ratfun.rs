//! Rational functions in one variable over the rationals, stored in reduced
//! form: gcd(num, den) = 1 and den monic, so equality is structural.

use std::fmt;
use std::ops::{Add, Div, Mul, Neg, Sub};

use num_bigint::BigInt;
use num_rational::BigRational;
use num_traits::Zero;

use super::poly::RatPoly;
use crate::{Error, Result};

#[derive(Debug, Clone, PartialEq, Eq, Hash)]
pub struct RationalFunction {
    num: RatPoly,
    den: RatPoly,
}

impl RationalFunction {
    pub fn new(num: RatPoly, den: RatPoly) -> Result<Self> {
        if den.is_zero() {
            return Err(Error::DivisionByZeroPolynomial);
        }
        Ok(Self::reduced(num, den))
    }

    fn reduced(num: RatPoly, den: RatPoly) -> Self {
        if num.is_zero() {
            return RationalFunction { num, den: RatPoly::one() };
        }
        let g = num.gcd(&den);
        let (num, _) = num.divrem(&g).unwrap();
        let (den, _) = den.divrem(&g).unwrap();
        let lead = den.leading().unwrap().recip();
        RationalFunction {
            num: num.scale(&lead),
            den: den.scale(&lead),
        }
    }

    pub fn from_poly(p: RatPoly) -> Self {
        RationalFunction { num: p, den: RatPoly::one() }
    }

    pub fn from_int(c: i64) -> Self {
        Self::from_poly(RatPoly::from_i64(&[c]))
    }

    /// The variable `s`.
    pub fn s() -> Self {
        Self::from_poly(RatPoly::t())
    }

    pub fn zero() -> Self {
        Self::from_poly(RatPoly::zero())
    }

    pub fn one() -> Self {
        Self::from_poly(RatPoly::one())
    }

    pub fn num(&self) -> &RatPoly {
        &self.num
    }

    pub fn den(&self) -> &RatPoly {
        &self.den
    }

    pub fn is_zero(&self) -> bool {
        self.num.is_zero()
    }

    pub fn recip(&self) -> Result<Self> {
        Self::new(self.den.clone(), self.num.clone())
    }

    /// Quotient-rule derivative.
    pub fn derivative(&self) -> Self {
        let num = &(&self.num.derivative() * &self.den) - &(&self.num * &self.den.derivative());
        let den = &self.den * &self.den;
        Self::reduced(num, den)
    }

    /// Taylor coefficients at the origin through order `n`, by the exact
    /// recurrence on the denominator. Requires den(0) != 0.
    pub fn series(&self, n: usize) -> Result<Vec<BigRational>> {
        let d0 = self.den.coeff(0);
        if d0.is_zero() {
            return Err(Error::PoleAtOrigin);
        }
        let mut out = Vec::with_capacity(n + 1);
        for i in 0..=n {
            let mut acc = self.num.coeff(i);
            for j in 1..=i.min(self.den.degree().unwrap_or(0)) {
                acc -= self.den.coeff(j) * &out[i - j];
            }
            out.push(acc / &d0);
        }
        Ok(out)
    }

    /// Truncated Taylor expansion of order `< r` as a polynomial.
    pub fn taylor_poly(&self, r: usize) -> Result<RatPoly> {
        if r == 0 {
            return Ok(RatPoly::zero());
        }
        Ok(RatPoly::new(self.series(r - 1)?))
    }

    /// Removes the Taylor coefficients of order `< r`: `chop_r(f) = f - T_r(f)`.
    pub fn chop(&self, r: usize) -> Result<Self> {
        Ok(self - &Self::from_poly(self.taylor_poly(r)?))
    }
}

impl Add for &RationalFunction {
    type Output = RationalFunction;
    fn add(self, rhs: &RationalFunction) -> RationalFunction {
        let num = &(&self.num * &rhs.den) + &(&rhs.num * &self.den);
        RationalFunction::reduced(num, &self.den * &rhs.den)
    }
}

impl Sub for &RationalFunction {
    type Output = RationalFunction;
    fn sub(self, rhs: &RationalFunction) -> RationalFunction {
        let num = &(&self.num * &rhs.den) - &(&rhs.num * &self.den);
        RationalFunction::reduced(num, &self.den * &rhs.den)
    }
}

impl Mul for &RationalFunction {
    type Output = RationalFunction;
    fn mul(self, rhs: &RationalFunction) -> RationalFunction {
        RationalFunction::reduced(&self.num * &rhs.num, &self.den * &rhs.den)
    }
}

impl Div for &RationalFunction {
    type Output = RationalFunction;
    fn div(self, rhs: &RationalFunction) -> RationalFunction {
        assert!(!rhs.is_zero(), "division by zero rational function");
        RationalFunction::reduced(&self.num * &rhs.den, &self.den * &rhs.num)
    }
}

impl Neg for &RationalFunction {
    type Output = RationalFunction;
    fn neg(self) -> RationalFunction {
        RationalFunction {
            num: -&self.num,
            den: self.den.clone(),
        }
    }
}

impl fmt::Display for RationalFunction {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "({:?})/({:?})", self.num.coeffs(), self.den.coeffs())
    }
}

/// Convenience: a rational function from integer coefficient slices.
pub fn rf(num: &[i64], den: &[i64]) -> RationalFunction {
    RationalFunction::new(RatPoly::from_i64(num), RatPoly::from_i64(den)).unwrap()
}

pub fn rat_i64(n: i64) -> BigRational {
    BigRational::from_integer(BigInt::from(n))
}
