use std::fmt;
use std::str::FromStr;

use num_integer::Integer;
use num_traits::{One, Signed};

use crate::error::{Error, Result};
use crate::poly::IntPolynomial;

/// Reduced quotient `num / den` of integer polynomials.
///
/// Canonical form: `gcd(num, den)` is constant, integer contents share no
/// common factor, and `den` has a positive leading coefficient.
#[derive(Clone, Debug, PartialEq, Eq, Hash)]
pub struct RationalFunction {
    num: IntPolynomial,
    den: IntPolynomial,
}

impl RationalFunction {
    pub fn new(num: IntPolynomial, den: IntPolynomial) -> Result<Self> {
        if den.is_zero() {
            return Err(Error::Precondition("zero denominator".into()));
        }
        if num.is_zero() {
            return Ok(Self::polynomial(IntPolynomial::zero()));
        }
        let g = num.gcd(&den)?;
        let mut num = num.div_exact(&g).expect("gcd divides numerator");
        let mut den = den.div_exact(&g).expect("gcd divides denominator");
        let c = num.content().gcd(&den.content());
        if !c.is_one() {
            num = num.div_exact(&IntPolynomial::constant(c.clone())).unwrap();
            den = den.div_exact(&IntPolynomial::constant(c)).unwrap();
        }
        if den.leading().unwrap().is_negative() {
            num = -&num;
            den = -&den;
        }
        Ok(RationalFunction { num, den })
    }

    pub fn polynomial(p: IntPolynomial) -> Self {
        RationalFunction {
            num: p,
            den: IntPolynomial::one(),
        }
    }

    /// Builds `∏ nums / ∏ dens`.
    pub fn from_factors(nums: &[IntPolynomial], dens: &[IntPolynomial]) -> Result<Self> {
        let n = nums.iter().fold(IntPolynomial::one(), |a, b| &a * b);
        let d = dens.iter().fold(IntPolynomial::one(), |a, b| &a * b);
        Self::new(n, d)
    }

    pub fn num(&self) -> &IntPolynomial {
        &self.num
    }

    pub fn den(&self) -> &IntPolynomial {
        &self.den
    }

    pub fn is_polynomial(&self) -> bool {
        self.den.is_constant()
    }

    pub fn mul(&self, other: &Self) -> Result<Self> {
        Self::new(&self.num * &other.num, &self.den * &other.den)
    }

    /// Canonical text: `num/den` in coefficient form, with `/den` omitted when it is 1.
    pub fn to_coeff_string(&self) -> String {
        if self.den == IntPolynomial::one() {
            self.num.to_coeff_string()
        } else {
            format!("{}/{}", self.num.to_coeff_string(), self.den.to_coeff_string())
        }
    }
}

impl fmt::Display for RationalFunction {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        if self.den == IntPolynomial::one() {
            write!(f, "{}", self.num)
        } else {
            write!(f, "({})/({})", self.num, self.den)
        }
    }
}

impl FromStr for RationalFunction {
    type Err = Error;

    fn from_str(s: &str) -> Result<Self> {
        let s = s.trim();
        let strip = |t: &str| {
            t.trim()
                .strip_prefix('(')
                .and_then(|t| t.strip_suffix(')'))
                .map(str::to_owned)
                .unwrap_or_else(|| t.trim().to_owned())
        };
        match s.split_once('/') {
            Some((n, d)) => Self::new(strip(n).parse()?, strip(d).parse()?),
            None => Ok(Self::polynomial(strip(s).parse()?)),
        }
    }
}

#[cfg(test)]
mod tests {
    use super::*;

    fn p(s: &str) -> IntPolynomial {
        s.parse().unwrap()
    }

    #[test]
    fn reduces_common_factors() {
        let q = RationalFunction::new(p("x^2-1"), p("x-1")).unwrap();
        assert_eq!(q, RationalFunction::polynomial(p("x+1")));
        assert!(q.is_polynomial());
    }

    #[test]
    fn normalizes_sign_and_content() {
        let q = RationalFunction::new(p("2x+2"), p("-4x+4")).unwrap();
        assert_eq!(q.num(), &p("-x-1"));
        assert_eq!(q.den(), &p("2x-2"));
    }

    #[test]
    fn text_round_trip() {
        let q = RationalFunction::new(p("x^6-1"), p("x^3-1")).unwrap();
        assert_eq!(q.to_coeff_string(), "coeffs=1,0,0,1");
        let r: RationalFunction = "coeffs=1,0,1/coeffs=-1,0,1".parse().unwrap();
        assert_eq!(r.num(), &p("x^2+1"));
        assert_eq!(r.den(), &p("x^2-1"));
        assert_eq!(r.to_coeff_string(), "coeffs=1,0,1/coeffs=-1,0,1");
        let h: RationalFunction = "(x^2+1)/(x^6+1)".parse().unwrap();
        assert_eq!(h.den(), &p("x^4-x^2+1"));
    }

    #[test]
    fn zero_denominator_rejected() {
        assert!(RationalFunction::new(p("x"), IntPolynomial::zero()).is_err());
    }
}
