use std::fmt;
use std::sync::Arc;

use num_bigint::BigInt;
use num_integer::Integer;
use num_rational::BigRational;
use num_traits::{One, Signed, ToPrimitive, Zero};

use super::sturm::{count_with_chain, sturm_chain};
use crate::error::{Error, Result};
use crate::interval::RationalInterval;
use crate::poly::{sign_of, IntPolynomial};

/// A real algebraic number: a square-free defining polynomial together with
/// a dyadic isolating interval `[lo / 2^exp, hi / 2^exp]` containing exactly
/// one of its roots. Endpoints are never roots.
#[derive(Clone, Debug)]
pub struct RealAlgebraic {
    defpoly: IntPolynomial,
    chain: Arc<Vec<IntPolynomial>>,
    lo: BigInt,
    hi: BigInt,
    exp: u64,
    sign_lo: i8,
}

impl RealAlgebraic {
    /// Certifies that `defpoly` (square-free) has exactly one root in
    /// `[lo / 2^exp, hi / 2^exp]` and that neither endpoint is a root.
    pub fn from_dyadic(defpoly: IntPolynomial, lo: BigInt, hi: BigInt, exp: u64) -> Result<Self> {
        if !defpoly.is_square_free() || defpoly.is_constant() {
            return Err(Error::Precondition("defining polynomial must be square-free and nonconstant".into()));
        }
        if lo >= hi {
            return Err(Error::Precondition("empty isolating interval".into()));
        }
        let chain = sturm_chain(&defpoly);
        let den = BigInt::one() << exp;
        let count = count_with_chain(
            &chain,
            &BigRational::new(lo.clone(), den.clone()),
            &BigRational::new(hi.clone(), den.clone()),
        )?;
        if count != 1 {
            return Err(Error::Precondition(format!(
                "interval contains {count} roots, expected exactly one"
            )));
        }
        let sign_lo = defpoly.sign_at(&lo, &den);
        Ok(RealAlgebraic {
            defpoly,
            chain: Arc::new(chain),
            lo,
            hi,
            exp,
            sign_lo,
        })
    }

    /// Same number described by `other_poly`, which must vanish at it and be
    /// square-free. The current isolating interval is reused.
    pub fn with_defpoly(&self, other_poly: IntPolynomial) -> Result<Self> {
        Self::from_dyadic(other_poly, self.lo.clone(), self.hi.clone(), self.exp)
    }

    pub fn defpoly(&self) -> &IntPolynomial {
        &self.defpoly
    }

    pub fn isolating_interval(&self) -> RationalInterval {
        let den = BigInt::one() << self.exp;
        RationalInterval::new(
            BigRational::new(self.lo.clone(), den.clone()),
            BigRational::new(self.hi.clone(), den),
        )
    }

    /// Dyadic numerators and exponent of the isolating interval.
    pub fn dyadic_bounds(&self) -> (&BigInt, &BigInt, u64) {
        (&self.lo, &self.hi, self.exp)
    }

    pub fn width(&self) -> BigRational {
        BigRational::new(&self.hi - &self.lo, BigInt::one() << self.exp)
    }

    /// `log2` of the width, rounded up; the interval width is at most `2^-bits()`.
    pub fn precision_bits(&self) -> i64 {
        let diff = &self.hi - &self.lo;
        self.exp as i64 - diff.bits() as i64 + 1
    }

    /// Number of roots of the defining polynomial in the isolating interval.
    pub fn sturm_count(&self) -> usize {
        let den = BigInt::one() << self.exp;
        count_with_chain(
            &self.chain,
            &BigRational::new(self.lo.clone(), den.clone()),
            &BigRational::new(self.hi.clone(), den),
        )
        .expect("endpoints are never roots")
    }

    /// Nearest `f64`, refining a copy to 64 bits first.
    pub fn to_f64(&self) -> f64 {
        let mut a = self.clone();
        a.refine_bits(64);
        let mid = BigRational::new(&a.lo + &a.hi, BigInt::one() << (a.exp + 1));
        mid.to_f64().unwrap_or(f64::NAN)
    }

    fn bisect_once(&mut self) {
        let mid = &self.lo + &self.hi;
        self.lo <<= 1;
        self.hi <<= 1;
        self.exp += 1;
        let den = BigInt::one() << self.exp;
        match self.defpoly.sign_at(&mid, &den) {
            0 => {
                // rational root: keep a symmetric neighbourhood of it
                self.lo = (&mid << 1) - 1;
                self.hi = (&mid << 1) + 1;
                self.exp += 1;
            }
            s if s == self.sign_lo => self.lo = mid,
            _ => self.hi = mid,
        }
    }

    /// Bisects in place until the width is at most `2^-bits`.
    pub fn refine_bits(&mut self, bits: i64) {
        while self.precision_bits() < bits {
            self.bisect_once();
        }
    }

    /// Returns the same number with an isolating interval narrower than `width_bound`.
    pub fn refine(&self, width_bound: &BigRational) -> Self {
        assert!(width_bound.is_positive(), "width bound must be positive");
        let mut out = self.clone();
        while out.width() >= *width_bound {
            out.bisect_once();
        }
        out
    }

    /// True when `g` vanishes at this number: `gcd(g, defpoly)` changes sign
    /// across the isolating interval.
    pub fn is_root_of(&self, g: &IntPolynomial) -> bool {
        if g.is_zero() {
            return true;
        }
        let h = g.gcd(&self.defpoly).expect("defpoly is nonzero");
        if h.is_constant() {
            return false;
        }
        let den = BigInt::one() << self.exp;
        // h divides a square-free polynomial with exactly one root here
        h.sign_at(&self.lo, &den) * h.sign_at(&self.hi, &den) < 0
    }

    /// Exact sign of `g` at this number, refining `self` in place as needed.
    pub fn sign_at_mut(&mut self, g: &IntPolynomial) -> i8 {
        if g.is_constant() {
            return g.coeffs().first().map(sign_of).unwrap_or(0);
        }
        let mut bits = self.precision_bits().max(32);
        let mut zero_checked = false;
        loop {
            self.refine_bits(bits);
            if let Some(s) = self.enclosure_sign(g, bits as u64 + 32) {
                return s;
            }
            if !zero_checked && bits >= 96 {
                if self.is_root_of(g) {
                    return 0;
                }
                zero_checked = true;
            }
            bits *= 2;
        }
    }

    pub fn sign_at(&self, g: &IntPolynomial) -> i8 {
        self.clone().sign_at_mut(g)
    }

    /// Sign of `g` over the whole isolating interval, if constant there.
    fn enclosure_sign(&self, g: &IntPolynomial, guard_prec: u64) -> Option<i8> {
        if self.lo.is_positive() {
            let table = PowerTable::new(self, g.degree().unwrap_or(0), guard_prec);
            table.sign_of(g)
        } else {
            let (lo, hi) = dyadic_interval_horner(g, &self.lo, &self.hi, self.exp);
            if lo.is_positive() {
                Some(1)
            } else if hi.is_negative() {
                Some(-1)
            } else {
                None
            }
        }
    }

    /// True when `1 < self < 2`.
    pub fn in_open_unit_to_two(&self) -> bool {
        let mut a = self.clone();
        a.sign_at_mut(&IntPolynomial::from_i64s(&[-1, 1])) > 0
            && a.sign_at_mut(&IntPolynomial::from_i64s(&[-2, 1])) < 0
    }
}

impl PartialEq for RealAlgebraic {
    fn eq(&self, other: &Self) -> bool {
        self.defpoly == other.defpoly && self.lo == other.lo && self.hi == other.hi && self.exp == other.exp
    }
}

impl fmt::Display for RealAlgebraic {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "root of {} in {}", self.defpoly, self.isolating_interval())
    }
}

/// Exact interval Horner on a dyadic interval; returns endpoint numerators
/// over the common denominator `2^(exp * deg)`.
fn dyadic_interval_horner(g: &IntPolynomial, lo: &BigInt, hi: &BigInt, exp: u64) -> (BigInt, BigInt) {
    let coeffs = g.coeffs();
    let Some(d) = g.degree() else {
        return (BigInt::zero(), BigInt::zero());
    };
    let mut a = coeffs[d].clone();
    let mut b = coeffs[d].clone();
    for (step, c) in coeffs[..d].iter().rev().enumerate() {
        let products = [&a * lo, &a * hi, &b * lo, &b * hi];
        let shifted = c << (exp * (step as u64 + 1));
        a = products.iter().min().unwrap() + &shifted;
        b = products.iter().max().unwrap() + &shifted;
    }
    (a, b)
}

/// Directed-rounding fixed-point enclosures of `β^k` for a positive `β`,
/// scaled by `2^prec`.
#[derive(Clone, Debug)]
pub struct PowerTable {
    lower: Vec<BigInt>,
    upper: Vec<BigInt>,
}

impl PowerTable {
    pub fn new(alpha: &RealAlgebraic, max_degree: usize, prec: u64) -> Self {
        assert!(alpha.lo.is_positive(), "power table needs a positive interval");
        let exp = alpha.exp;
        let mut lower = Vec::with_capacity(max_degree + 1);
        let mut upper = Vec::with_capacity(max_degree + 1);
        let one = BigInt::one() << prec;
        lower.push(one.clone());
        upper.push(one);
        for k in 0..max_degree {
            let l = (&lower[k] * &alpha.lo) >> exp;
            let u = ceil_shift(&upper[k] * &alpha.hi, exp);
            lower.push(l);
            upper.push(u);
        }
        PowerTable { lower, upper }
    }

    pub fn max_degree(&self) -> usize {
        self.lower.len() - 1
    }

    /// Scaled enclosure `[lo, hi]` of `Σ c_k β^k`.
    pub fn enclose(&self, coeffs: &[BigInt]) -> (BigInt, BigInt) {
        let mut lo = BigInt::zero();
        let mut hi = BigInt::zero();
        for (k, c) in coeffs.iter().enumerate() {
            if c.is_positive() {
                lo += c * &self.lower[k];
                hi += c * &self.upper[k];
            } else if c.is_negative() {
                lo += c * &self.upper[k];
                hi += c * &self.lower[k];
            }
        }
        (lo, hi)
    }

    pub fn sign_of(&self, g: &IntPolynomial) -> Option<i8> {
        let (lo, hi) = self.enclose(g.coeffs());
        if lo.is_positive() {
            Some(1)
        } else if hi.is_negative() {
            Some(-1)
        } else {
            None
        }
    }
}

fn ceil_shift(v: BigInt, s: u64) -> BigInt {
    let d = BigInt::one() << s;
    v.div_ceil(&d)
}

/// Isolates the unique real root of `f` above 1.
///
/// Returns `Ok(None)` when there is no root in `(1, ∞)` and an error when
/// there is more than one. The defining polynomial of the result is the
/// square-free part of `f` with any factor `x - 1` removed.
pub fn isolate_root_above_1(f: &IntPolynomial) -> Result<Option<RealAlgebraic>> {
    if f.is_zero() {
        return Err(Error::Precondition("zero polynomial".into()));
    }
    let mut sf = f.square_free_part();
    let x_minus_1 = IntPolynomial::from_i64s(&[-1, 1]);
    if sf.sign_at(&BigInt::one(), &BigInt::one()) == 0 {
        sf = sf.div_exact(&x_minus_1).expect("x - 1 divides");
    }
    if sf.is_constant() {
        return Ok(None);
    }
    let lead = sf.leading().unwrap().abs();
    let max = sf.coeffs().iter().map(|c| c.abs()).max().unwrap();
    let bound = BigInt::one() + max.div_ceil(&lead);
    let chain = sturm_chain(&sf);
    let count = count_with_chain(
        &chain,
        &BigRational::from_integer(BigInt::one()),
        &BigRational::from_integer(bound.clone()),
    )?;
    match count {
        0 => Ok(None),
        1 => RealAlgebraic::from_dyadic(sf, BigInt::one(), bound, 0).map(Some),
        n => Err(Error::MultipleRootsAbove1(n)),
    }
}
