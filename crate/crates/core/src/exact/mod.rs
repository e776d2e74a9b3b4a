//! Exact arithmetic: arbitrary-precision integers and rationals, dense
//! polynomials, rational functions and small exact linear algebra.

pub mod linalg;
pub mod poly;
pub mod ratfun;

pub use linalg::RfMatrix;
pub use poly::{interpolate, IntPoly, RatPoly};
pub use ratfun::RationalFunction;

use num_bigint::BigInt;
use num_traits::{One, Zero};

pub fn factorial(n: u64) -> BigInt {
    let mut acc = BigInt::one();
    for i in 2..=n {
        acc *= i;
    }
    acc
}

pub fn binomial(n: u64, k: u64) -> BigInt {
    if k > n {
        return BigInt::zero();
    }
    let k = k.min(n - k);
    let mut acc = BigInt::one();
    for i in 0..k {
        acc = acc * (n - i) / (i + 1);
    }
    acc
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn binomial_row() {
        let row: Vec<BigInt> = (0..=6).map(|k| binomial(6, k)).collect();
        let expected: Vec<BigInt> = [1, 6, 15, 20, 15, 6, 1].iter().map(|&x| BigInt::from(x)).collect();
        assert_eq!(row, expected);
        assert_eq!(binomial(4, 7), BigInt::zero());
    }

    #[test]
    fn factorial_small() {
        assert_eq!(factorial(0), BigInt::one());
        assert_eq!(factorial(5), BigInt::from(120));
    }
}
