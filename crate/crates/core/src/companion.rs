//! Companion polynomials of expansions and their co-factors.

use num_bigint::BigInt;
use num_traits::{One, Signed};

use crate::cyclotomic::{is_reciprocal, non_cyclotomic_core, strip_cyclotomic_factors};
use crate::error::{Error, Result};
use crate::poly::IntPolynomial;
use crate::ratfunc::RationalFunction;
use crate::word::ExpansionWord;

/// `P_j(x) = x^j - a_1 x^{j-1} - … - a_j` for the first `j` digits.
fn p_j(digits: &[u8]) -> IntPolynomial {
    let j = digits.len();
    let mut coeffs = vec![BigInt::from(0); j + 1];
    coeffs[j] = BigInt::one();
    for (i, &a) in digits.iter().enumerate() {
        // a_{i+1} multiplies x^{j-i-1}
        coeffs[j - i - 1] -= a;
    }
    IntPolynomial::new(coeffs)
}

/// `R = P_n` for a finite word of length `n`, `R = P_n - P_k` for a word
/// with preperiod length `k` and `n = k + p`. The word is canonicalized first.
pub fn companion_poly(w: &ExpansionWord) -> IntPolynomial {
    let w = w.canonicalize();
    let mut digits = w.pre().to_vec();
    digits.extend_from_slice(w.per());
    let pn = p_j(&digits);
    if w.is_finite() {
        pn
    } else {
        &pn - &p_j(w.pre())
    }
}

/// `R / P` in lowest terms.
pub fn pseudo_cofactor(r: &IntPolynomial, p: &IntPolynomial) -> Result<RationalFunction> {
    if p.is_zero() {
        return Err(Error::Precondition("zero defining polynomial".into()));
    }
    RationalFunction::new(r.clone(), p.clone())
}

/// `R` divided by the cyclotomic-free core of `P`, or `None` when the core
/// does not divide `R`.
pub fn true_cofactor(r: &IntPolynomial, p: &IntPolynomial) -> Option<IntPolynomial> {
    let core = non_cyclotomic_core(p);
    let core = if core.leading().is_some_and(|c| c.is_negative()) { -&core } else { core };
    r.div_exact(&core)
}

#[derive(Clone, Debug, PartialEq, Eq)]
pub struct CofactorReport {
    pub is_polynomial: bool,
    /// Numerator and denominator are both products of cyclotomic polynomials
    /// (up to sign).
    pub cyclotomic_product: bool,
    pub reciprocal: bool,
    /// Cyclotomic indices of the numerator, with multiplicity.
    pub cyc_factors: Vec<u64>,
    /// Numerator with its cyclotomic factors removed.
    pub core: IntPolynomial,
}

pub fn cofactor_analysis(q: &RationalFunction) -> CofactorReport {
    let num = q.num();
    let (cyc_factors, core) = if num.is_zero() {
        (Vec::new(), IntPolynomial::zero())
    } else {
        let split = strip_cyclotomic_factors(num);
        (split.factors, split.core)
    };
    let den_cyclotomic = strip_cyclotomic_factors(q.den()).core.is_unit();
    CofactorReport {
        is_polynomial: q.is_polynomial(),
        cyclotomic_product: core.is_unit() && den_cyclotomic,
        reciprocal: !num.is_zero() && is_reciprocal(num) && is_reciprocal(q.den()),
        cyc_factors,
        core,
    }
}
