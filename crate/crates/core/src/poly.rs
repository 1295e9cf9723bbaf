//! Dense polynomials with arbitrary-precision integer coefficients.
//!
//! Coefficients are stored in ascending degree order and the zero polynomial
//! is the empty vector. Every constructor trims trailing zeros, so equality
//! is structural.

use std::cmp::Ordering;
use std::fmt;
use std::ops::{Add, Mul, Neg, Sub};
use std::str::FromStr;

use num_bigint::BigInt;
use num_integer::Integer;
use num_traits::{One, Signed, Zero};

use crate::error::{Error, Result};

#[derive(Clone, Debug, PartialEq, Eq, Hash, Default)]
pub struct IntPolynomial {
    coeffs: Vec<BigInt>,
}

impl IntPolynomial {
    pub fn new(mut coeffs: Vec<BigInt>) -> Self {
        while coeffs.last().is_some_and(|c| c.is_zero()) {
            coeffs.pop();
        }
        IntPolynomial { coeffs }
    }

    pub fn from_i64s(coeffs: &[i64]) -> Self {
        Self::new(coeffs.iter().map(|&c| BigInt::from(c)).collect())
    }

    pub fn zero() -> Self {
        IntPolynomial { coeffs: Vec::new() }
    }

    pub fn one() -> Self {
        Self::constant(BigInt::one())
    }

    pub fn constant(c: BigInt) -> Self {
        Self::new(vec![c])
    }

    /// `c * x^k`
    pub fn monomial(c: impl Into<BigInt>, k: usize) -> Self {
        let mut coeffs = vec![BigInt::zero(); k + 1];
        coeffs[k] = c.into();
        Self::new(coeffs)
    }

    /// `x^k - 1`
    pub fn x_pow_minus_one(k: usize) -> Self {
        &Self::monomial(1, k) - &Self::one()
    }

    /// `x^k + 1`
    pub fn x_pow_plus_one(k: usize) -> Self {
        &Self::monomial(1, k) + &Self::one()
    }

    /// `1 + x + ... + x^(k-1)`; zero when `k == 0`.
    pub fn geometric(k: usize) -> Self {
        Self::new(vec![BigInt::one(); k])
    }

    pub fn coeffs(&self) -> &[BigInt] {
        &self.coeffs
    }

    pub fn into_coeffs(self) -> Vec<BigInt> {
        self.coeffs
    }

    pub fn is_zero(&self) -> bool {
        self.coeffs.is_empty()
    }

    /// `None` for the zero polynomial.
    pub fn degree(&self) -> Option<usize> {
        self.coeffs.len().checked_sub(1)
    }

    pub fn coeff(&self, i: usize) -> BigInt {
        self.coeffs.get(i).cloned().unwrap_or_else(BigInt::zero)
    }

    pub fn leading(&self) -> Option<&BigInt> {
        self.coeffs.last()
    }

    pub fn is_monic(&self) -> bool {
        self.leading().is_some_and(|c| c.is_one())
    }

    pub fn is_constant(&self) -> bool {
        self.coeffs.len() <= 1
    }

    /// True for the constants 1 and -1.
    pub fn is_unit(&self) -> bool {
        self.coeffs.len() == 1 && self.coeffs[0].abs().is_one()
    }

    pub fn content(&self) -> BigInt {
        self.coeffs
            .iter()
            .fold(BigInt::zero(), |acc, c| acc.gcd(c))
    }

    /// Divides out the content and makes the leading coefficient positive.
    pub fn primitive_part(&self) -> Self {
        if self.is_zero() {
            return Self::zero();
        }
        let mut g = self.content();
        if self.leading().unwrap().is_negative() {
            g = -g;
        }
        Self::new(self.coeffs.iter().map(|c| c / &g).collect())
    }

    pub fn scale(&self, k: &BigInt) -> Self {
        Self::new(self.coeffs.iter().map(|c| c * k).collect())
    }

    /// Multiplies by `x^k`.
    pub fn shift(&self, k: usize) -> Self {
        if self.is_zero() {
            return Self::zero();
        }
        let mut coeffs = vec![BigInt::zero(); k];
        coeffs.extend(self.coeffs.iter().cloned());
        Self { coeffs }
    }

    pub fn derivative(&self) -> Self {
        Self::new(
            self.coeffs
                .iter()
                .enumerate()
                .skip(1)
                .map(|(i, c)| c * BigInt::from(i))
                .collect(),
        )
    }

    /// Coefficient sequence reversed, i.e. `x^deg f(1/x)`.
    pub fn reversed(&self) -> Self {
        Self::new(self.coeffs.iter().rev().cloned().collect())
    }

    /// Number of factors of `x` dividing `self`.
    pub fn x_valuation(&self) -> usize {
        self.coeffs.iter().take_while(|c| c.is_zero()).count()
    }

    /// `self / x^k`, discarding the low `k` coefficients.
    pub fn unshift(&self, k: usize) -> Self {
        Self::new(self.coeffs.iter().skip(k).cloned().collect())
    }

    pub fn eval(&self, x: &BigInt) -> BigInt {
        self.coeffs
            .iter()
            .rev()
            .fold(BigInt::zero(), |acc, c| acc * x + c)
    }

    /// `q^deg * f(p/q)`, whose sign equals the sign of `f(p/q)` when `q > 0`.
    pub fn eval_homogeneous(&self, p: &BigInt, q: &BigInt) -> BigInt {
        let Some(d) = self.degree() else {
            return BigInt::zero();
        };
        let mut acc = self.coeffs[d].clone();
        let mut qpow = BigInt::one();
        for c in self.coeffs[..d].iter().rev() {
            qpow *= q;
            acc = acc * p + c * &qpow;
        }
        acc
    }

    /// Sign of `f(p/q)` for `q > 0`.
    pub fn sign_at(&self, p: &BigInt, q: &BigInt) -> i8 {
        debug_assert!(q.is_positive());
        sign_of(&self.eval_homogeneous(p, q))
    }

    /// Euclidean division by a monic divisor: `self = q*g + r`, `deg r < deg g`.
    pub fn div_rem(&self, g: &Self) -> Result<(Self, Self)> {
        if !g.is_monic() {
            return Err(Error::UnsupportedDivision);
        }
        let dg = g.coeffs.len() - 1;
        if self.coeffs.len() <= dg {
            return Ok((Self::zero(), self.clone()));
        }
        let mut rem = self.coeffs.clone();
        let mut quot = vec![BigInt::zero(); rem.len() - dg];
        for i in (0..quot.len()).rev() {
            let t = std::mem::take(&mut rem[i + dg]);
            if t.is_zero() {
                continue;
            }
            for (j, gc) in g.coeffs[..dg].iter().enumerate() {
                rem[i + j] -= &t * gc;
            }
            quot[i] = t;
        }
        rem.truncate(dg);
        Ok((Self::new(quot), Self::new(rem)))
    }

    pub fn rem_monic(&self, g: &Self) -> Result<Self> {
        self.div_rem(g).map(|(_, r)| r)
    }

    /// Exact quotient `self / g` over the integers, or `None` when `g` does
    /// not divide `self` in `Z[x]`. `g` need not be monic.
    pub fn div_exact(&self, g: &Self) -> Option<Self> {
        let dg = g.degree()?;
        if self.is_zero() {
            return Some(Self::zero());
        }
        if self.coeffs.len() <= dg {
            return None;
        }
        let lg = &g.coeffs[dg];
        let mut rem = self.coeffs.clone();
        let mut quot = vec![BigInt::zero(); rem.len() - dg];
        for i in (0..quot.len()).rev() {
            let (t, r) = rem[i + dg].div_rem(lg);
            if !r.is_zero() {
                return None;
            }
            if t.is_zero() {
                continue;
            }
            for (j, gc) in g.coeffs.iter().enumerate() {
                rem[i + j] -= &t * gc;
            }
            quot[i] = t;
        }
        if rem.iter().any(|c| !c.is_zero()) {
            return None;
        }
        Some(Self::new(quot))
    }

    /// Pseudo-remainder scaled only by positive factors, so its sign pattern
    /// matches the true remainder. Used by both gcd and Sturm chains.
    pub(crate) fn positive_prem(&self, g: &Self) -> Self {
        let dg = g.degree().expect("pseudo-remainder by zero");
        let lg = g.coeffs[dg].clone();
        let abs_lg = lg.abs();
        let sgn_lg = if lg.is_negative() { -BigInt::one() } else { BigInt::one() };
        let mut rem = self.clone();
        while let Some(dr) = rem.degree() {
            if dr < dg {
                break;
            }
            let lr = rem.coeffs[dr].clone();
            let factor = &sgn_lg * lr;
            let mut next: Vec<BigInt> = rem.coeffs.iter().map(|c| c * &abs_lg).collect();
            for (j, gc) in g.coeffs.iter().enumerate() {
                next[dr - dg + j] -= &factor * gc;
            }
            rem = Self::new(next).primitive_content_keep_sign();
        }
        rem
    }

    /// Divides by the (positive) content without touching signs.
    fn primitive_content_keep_sign(self) -> Self {
        let g = self.content();
        if g.is_zero() || g.is_one() {
            return self;
        }
        Self::new(self.coeffs.iter().map(|c| c / &g).collect())
    }

    /// Primitive gcd with positive leading coefficient.
    pub fn gcd(&self, other: &Self) -> Result<Self> {
        if self.is_zero() && other.is_zero() {
            return Err(Error::GcdOfZeros);
        }
        let mut a = self.primitive_part();
        let mut b = other.primitive_part();
        if a.coeffs.len() < b.coeffs.len() {
            std::mem::swap(&mut a, &mut b);
        }
        while !b.is_zero() {
            let r = a.positive_prem(&b).primitive_part();
            a = b;
            b = r;
        }
        Ok(a)
    }

    /// `self / gcd(self, self')`, primitive with positive leading coefficient.
    pub fn square_free_part(&self) -> Self {
        if self.is_constant() {
            return self.primitive_part();
        }
        let g = self.gcd(&self.derivative()).expect("nonzero");
        self.primitive_part()
            .div_exact(&g)
            .expect("gcd divides its argument")
            .primitive_part()
    }

    pub fn is_square_free(&self) -> bool {
        self.is_constant() || self.gcd(&self.derivative()).map(|g| g.is_constant()).unwrap_or(false)
    }

    /// Canonical text form `coeffs=c0,c1,...,cd`.
    pub fn to_coeff_string(&self) -> String {
        let body: Vec<String> = self.coeffs.iter().map(|c| c.to_string()).collect();
        format!("coeffs={}", body.join(","))
    }

    pub fn pow(&self, mut e: u32) -> Self {
        let mut base = self.clone();
        let mut acc = Self::one();
        while e > 0 {
            if e & 1 == 1 {
                acc = &acc * &base;
            }
            base = &base * &base;
            e >>= 1;
        }
        acc
    }
}

pub(crate) fn sign_of(v: &BigInt) -> i8 {
    match v.sign() {
        num_bigint::Sign::Minus => -1,
        num_bigint::Sign::NoSign => 0,
        num_bigint::Sign::Plus => 1,
    }
}

impl Add for &IntPolynomial {
    type Output = IntPolynomial;
    fn add(self, rhs: &IntPolynomial) -> IntPolynomial {
        let n = self.coeffs.len().max(rhs.coeffs.len());
        IntPolynomial::new((0..n).map(|i| self.coeff(i) + rhs.coeff(i)).collect())
    }
}

impl Sub for &IntPolynomial {
    type Output = IntPolynomial;
    fn sub(self, rhs: &IntPolynomial) -> IntPolynomial {
        let n = self.coeffs.len().max(rhs.coeffs.len());
        IntPolynomial::new((0..n).map(|i| self.coeff(i) - rhs.coeff(i)).collect())
    }
}

impl Mul for &IntPolynomial {
    type Output = IntPolynomial;
    fn mul(self, rhs: &IntPolynomial) -> IntPolynomial {
        if self.is_zero() || rhs.is_zero() {
            return IntPolynomial::zero();
        }
        let mut out = vec![BigInt::zero(); self.coeffs.len() + rhs.coeffs.len() - 1];
        for (i, a) in self.coeffs.iter().enumerate() {
            if a.is_zero() {
                continue;
            }
            for (j, b) in rhs.coeffs.iter().enumerate() {
                if !b.is_zero() {
                    out[i + j] += a * b;
                }
            }
        }
        IntPolynomial::new(out)
    }
}

impl Neg for &IntPolynomial {
    type Output = IntPolynomial;
    fn neg(self) -> IntPolynomial {
        IntPolynomial::new(self.coeffs.iter().map(|c| -c).collect())
    }
}

macro_rules! forward_owned {
    ($tr:ident, $m:ident) => {
        impl $tr for IntPolynomial {
            type Output = IntPolynomial;
            fn $m(self, rhs: IntPolynomial) -> IntPolynomial {
                (&self).$m(&rhs)
            }
        }
    };
}
forward_owned!(Add, add);
forward_owned!(Sub, sub);
forward_owned!(Mul, mul);

impl fmt::Display for IntPolynomial {
    /// Human-readable form such as `x^4-x^3-2x^2+1`, accepted by `FromStr`.
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        if self.is_zero() {
            return write!(f, "0");
        }
        let mut first = true;
        for (i, c) in self.coeffs.iter().enumerate().rev() {
            if c.is_zero() {
                continue;
            }
            let mag = c.abs();
            match (c.is_negative(), first) {
                (true, _) => write!(f, "-")?,
                (false, false) => write!(f, "+")?,
                (false, true) => {}
            }
            first = false;
            if i == 0 || !mag.is_one() {
                write!(f, "{mag}")?;
            }
            match i.cmp(&1) {
                Ordering::Less => {}
                Ordering::Equal => write!(f, "x")?,
                Ordering::Greater => write!(f, "x^{i}")?,
            }
        }
        Ok(())
    }
}

impl FromStr for IntPolynomial {
    type Err = Error;

    fn from_str(s: &str) -> Result<Self> {
        let compact: String = s.chars().filter(|c| !c.is_whitespace()).collect();
        if let Some(body) = compact.strip_prefix("coeffs=") {
            if body.is_empty() {
                return Ok(Self::zero());
            }
            let coeffs = body
                .split(',')
                .map(|t| {
                    t.parse::<BigInt>()
                        .map_err(|_| Error::Parse(format!("bad coefficient {t:?}")))
                })
                .collect::<Result<Vec<_>>>()?;
            return Ok(Self::new(coeffs));
        }
        parse_human(&compact)
    }
}

fn parse_human(s: &str) -> Result<IntPolynomial> {
    if s.is_empty() {
        return Err(Error::Parse("empty polynomial".into()));
    }
    let bytes = s.as_bytes();
    let mut pos = 0;
    let mut coeffs: Vec<BigInt> = Vec::new();
    let bad = |msg: &str| Error::Parse(format!("{msg} in {s:?}"));
    while pos < bytes.len() {
        let mut negative = false;
        if bytes[pos] == b'+' || bytes[pos] == b'-' {
            negative = bytes[pos] == b'-';
            pos += 1;
        } else if pos != 0 {
            return Err(bad("expected sign"));
        }
        let start = pos;
        while pos < bytes.len() && bytes[pos].is_ascii_digit() {
            pos += 1;
        }
        let coef: Option<BigInt> = (pos > start).then(|| s[start..pos].parse().unwrap());
        if pos < bytes.len() && bytes[pos] == b'*' {
            if coef.is_none() {
                return Err(bad("dangling '*'"));
            }
            pos += 1;
        }
        let mut degree = 0usize;
        if pos < bytes.len() && bytes[pos] == b'x' {
            pos += 1;
            degree = 1;
            if pos < bytes.len() && bytes[pos] == b'^' {
                pos += 1;
                let es = pos;
                while pos < bytes.len() && bytes[pos].is_ascii_digit() {
                    pos += 1;
                }
                if es == pos {
                    return Err(bad("missing exponent"));
                }
                degree = s[es..pos].parse().map_err(|_| bad("exponent overflow"))?;
            }
        } else if coef.is_none() {
            return Err(bad("empty term"));
        }
        let mut c = coef.unwrap_or_else(BigInt::one);
        if negative {
            c = -c;
        }
        if coeffs.len() <= degree {
            coeffs.resize(degree + 1, BigInt::zero());
        }
        coeffs[degree] += c;
    }
    Ok(IntPolynomial::new(coeffs))
}

#[cfg(test)]
mod tests {
    use super::*;

    fn p(s: &str) -> IntPolynomial {
        s.parse().unwrap()
    }

    /// Independent schoolbook product over i128.
    fn naive_mul(a: &[i128], b: &[i128]) -> Vec<i128> {
        let mut out = vec![0; a.len() + b.len() - 1];
        for i in 0..a.len() {
            for j in 0..b.len() {
                out[i + j] += a[i] * b[j];
            }
        }
        out
    }

    #[test]
    fn multiplication_examples() {
        assert_eq!(p("x-1") * p("x+1"), p("x^2-1"));
        assert_eq!(&p("x^2-x-1") * &IntPolynomial::one(), p("x^2-x-1"));
        let prod = p("x^3-x-1") * p("x^2-x+1");
        assert_eq!(prod, p("x^5-x^4-1"));
        let oracle = naive_mul(&[-1, -1, 0, 1], &[1, -1, 1]);
        let expected: Vec<i64> = oracle.iter().map(|&c| c as i64).collect();
        assert_eq!(prod, IntPolynomial::from_i64s(&expected));
    }

    #[test]
    fn division_examples() {
        let (q, r) = p("x^4-x^3-x^2-1").div_rem(&p("x^3-2x^2+x-1")).unwrap();
        assert_eq!((q, r), (p("x+1"), IntPolynomial::zero()));
        let (q, r) = p("x^2-1").div_rem(&p("x-1")).unwrap();
        assert_eq!((q, r), (p("x+1"), IntPolynomial::zero()));
        let (q, r) = p("x^2").div_rem(&p("x+1")).unwrap();
        assert_eq!((q, r), (p("x-1"), p("1")));
    }

    #[test]
    fn division_rejects_non_monic_and_zero() {
        assert_eq!(p("x^2").div_rem(&p("2x+1")), Err(Error::UnsupportedDivision));
        assert_eq!(
            p("x^2").div_rem(&IntPolynomial::zero()),
            Err(Error::UnsupportedDivision)
        );
    }

    #[test]
    fn gcd_examples() {
        assert_eq!(p("x^2-1").gcd(&p("x-1")).unwrap(), p("x-1"));
        assert_eq!(p("x^2-x-1").gcd(&p("x^3-x-1")).unwrap(), p("1"));
        let f = p("2x^2-2");
        assert_eq!(f.gcd(&f).unwrap(), p("x^2-1"));
        assert_eq!(
            IntPolynomial::zero().gcd(&IntPolynomial::zero()),
            Err(Error::GcdOfZeros)
        );
        assert_eq!(IntPolynomial::zero().gcd(&p("-3x+6")).unwrap(), p("x-2"));
    }

    #[test]
    fn exact_division_non_monic() {
        let f = p("6x^2+x-1"); // (3x-1)(2x+1)
        assert_eq!(f.div_exact(&p("3x-1")), Some(p("2x+1")));
        assert_eq!(f.div_exact(&p("3x+1")), None);
    }

    #[test]
    fn square_free_part_removes_repeats() {
        let f = p("x^3-x^2-x+1"); // (x-1)^2 (x+1)
        assert_eq!(f.square_free_part(), p("x^2-1"));
        assert!(!f.is_square_free());
        assert!(p("x^2-x-1").is_square_free());
    }

    #[test]
    fn parse_and_display() {
        assert_eq!(p("x^4-x^3-2x^2+1").to_coeff_string(), "coeffs=1,0,-2,-1,1");
        assert_eq!(p("coeffs=1,0,-2,-1,1"), p("x^4 - x^3 - 2x^2 + 1"));
        assert_eq!(p("x^4-x^3-2x^2+1").to_string(), "x^4-x^3-2x^2+1");
        assert_eq!(p("-x+3*x^2-x^2"), p("2x^2-x"));
        assert_eq!(p("coeffs="), IntPolynomial::zero());
        assert_eq!(IntPolynomial::zero().to_coeff_string(), "coeffs=");
        assert!("x^".parse::<IntPolynomial>().is_err());
        assert!("x x".parse::<IntPolynomial>().is_err());
        assert!("coeffs=1,a".parse::<IntPolynomial>().is_err());
        assert!("".parse::<IntPolynomial>().is_err());
    }

    #[test]
    fn zero_is_canonical() {
        assert_eq!(IntPolynomial::from_i64s(&[0, 0, 0]), IntPolynomial::zero());
        assert_eq!(IntPolynomial::zero().degree(), None);
        assert_eq!(p("x^3+2").degree(), Some(3));
    }
}
