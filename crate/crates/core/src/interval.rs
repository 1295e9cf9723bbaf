use std::fmt;

use num_bigint::BigInt;
use num_rational::BigRational;
use num_traits::{Signed, Zero};

use crate::poly::IntPolynomial;

/// Closed interval `[lo, hi]` with exact rational endpoints.
#[derive(Clone, Debug, PartialEq, Eq, Hash)]
pub struct RationalInterval {
    lo: BigRational,
    hi: BigRational,
}

impl RationalInterval {
    pub fn new(lo: BigRational, hi: BigRational) -> Self {
        assert!(lo <= hi, "interval endpoints out of order");
        RationalInterval { lo, hi }
    }

    pub fn from_ints(lo: i64, hi: i64) -> Self {
        Self::new(
            BigRational::from_integer(lo.into()),
            BigRational::from_integer(hi.into()),
        )
    }

    pub fn point(v: BigRational) -> Self {
        Self::new(v.clone(), v)
    }

    pub fn lo(&self) -> &BigRational {
        &self.lo
    }

    pub fn hi(&self) -> &BigRational {
        &self.hi
    }

    pub fn width(&self) -> BigRational {
        &self.hi - &self.lo
    }

    pub fn contains(&self, v: &BigRational) -> bool {
        &self.lo <= v && v <= &self.hi
    }

    pub fn contains_zero(&self) -> bool {
        !self.lo.is_positive() && !self.hi.is_negative()
    }

    pub fn is_subset_of(&self, other: &Self) -> bool {
        other.lo <= self.lo && self.hi <= other.hi
    }

    fn mul(&self, other: &Self) -> Self {
        let products = [
            &self.lo * &other.lo,
            &self.lo * &other.hi,
            &self.hi * &other.lo,
            &self.hi * &other.hi,
        ];
        let lo = products.iter().min().unwrap().clone();
        let hi = products.iter().max().unwrap().clone();
        Self { lo, hi }
    }

    fn add_scalar(&self, c: &BigInt) -> Self {
        let c = BigRational::from_integer(c.clone());
        Self {
            lo: &self.lo + &c,
            hi: &self.hi + &c,
        }
    }
}

impl fmt::Display for RationalInterval {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "[{}, {}]", self.lo, self.hi)
    }
}

/// Interval Horner evaluation: the result contains `f(x)` for every `x` in `interval`.
pub fn eval_interval(f: &IntPolynomial, interval: &RationalInterval) -> RationalInterval {
    let mut acc = RationalInterval::point(BigRational::zero());
    for c in f.coeffs().iter().rev() {
        acc = acc.mul(interval).add_scalar(c);
    }
    acc
}
