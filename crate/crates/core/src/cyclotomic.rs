//! Cyclotomic polynomials and cyclotomic-factor stripping.

use std::collections::HashMap;
use std::f64::consts::PI;
use std::sync::{Mutex, OnceLock};

use num_bigint::BigInt;
use num_traits::{Signed, ToPrimitive};

use crate::poly::IntPolynomial;

fn cache() -> &'static Mutex<HashMap<u64, IntPolynomial>> {
    static CACHE: OnceLock<Mutex<HashMap<u64, IntPolynomial>>> = OnceLock::new();
    CACHE.get_or_init(|| Mutex::new(HashMap::new()))
}

/// The `d`-th cyclotomic polynomial, obtained from `x^d - 1` by exact
/// division by every `Φ_e` with `e` a proper divisor of `d`.
pub fn cyclotomic(d: u64) -> IntPolynomial {
    assert!(d >= 1, "cyclotomic index must be positive");
    if let Some(p) = cache().lock().unwrap().get(&d) {
        return p.clone();
    }
    let mut acc = IntPolynomial::x_pow_minus_one(d as usize);
    for e in (1..d).filter(|e| d % e == 0) {
        let (q, r) = acc.div_rem(&cyclotomic(e)).expect("cyclotomics are monic");
        debug_assert!(r.is_zero());
        acc = q;
    }
    cache().lock().unwrap().insert(d, acc.clone());
    acc
}

/// Euler's totient for `0..=limit` by sieve.
pub fn totients(limit: usize) -> Vec<u64> {
    let mut phi: Vec<u64> = (0..=limit as u64).collect();
    for i in 2..=limit {
        if phi[i] == i as u64 {
            let mut j = i;
            while j <= limit {
                phi[j] -= phi[j] / i as u64;
                j += i;
            }
        }
    }
    phi
}

/// All `d` with `φ(d) <= degree`, ascending. Since `φ(d) >= sqrt(d/2)`,
/// sieving up to `2 * degree^2` is exhaustive.
pub fn candidate_indices(degree: usize) -> Vec<u64> {
    if degree == 0 {
        return Vec::new();
    }
    let limit = (2 * degree * degree).max(2);
    let phi = totients(limit);
    (1..=limit as u64)
        .filter(|&d| phi[d as usize] <= degree as u64)
        .collect()
}

/// Result of removing every cyclotomic factor from a polynomial.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct CyclotomicSplit {
    /// Cyclotomic indices with multiplicity, ascending.
    pub factors: Vec<u64>,
    pub core: IntPolynomial,
}

impl CyclotomicSplit {
    /// `core * ∏ Φ_d`.
    pub fn recompose(&self) -> IntPolynomial {
        self.factors
            .iter()
            .fold(self.core.clone(), |acc, &d| &acc * &cyclotomic(d))
    }
}

/// Cheap necessary condition for `Φ_d | f`: `|f(e^{2πi/d})|` is tiny.
/// Returns `true` when divisibility cannot be ruled out.
fn may_vanish_at_root_of_unity(f: &IntPolynomial, d: u64) -> bool {
    let coeffs: Option<Vec<f64>> = f
        .coeffs()
        .iter()
        .map(|c| {
            if c.abs() > BigInt::from(1u64 << 40) {
                None
            } else {
                c.to_f64()
            }
        })
        .collect();
    let Some(coeffs) = coeffs else {
        return true;
    };
    let theta = 2.0 * PI / d as f64;
    let (mut re, mut im) = (0.0f64, 0.0f64);
    for (k, c) in coeffs.iter().enumerate() {
        let a = theta * ((k as u64 % d) as f64);
        re += c * a.cos();
        im += c * a.sin();
    }
    let scale: f64 = coeffs.iter().map(|c| c.abs()).sum::<f64>().max(1.0);
    (re * re + im * im).sqrt() <= 1e-6 * scale
}

/// Splits `f` into its cyclotomic factors (with multiplicity) and a core
/// with no cyclotomic factor.
pub fn strip_cyclotomic_factors(f: &IntPolynomial) -> CyclotomicSplit {
    assert!(!f.is_zero(), "cannot strip the zero polynomial");
    let mut core = f.clone();
    let mut factors = Vec::new();
    let degree = f.degree().unwrap_or(0);
    for d in candidate_indices(degree) {
        loop {
            let Some(dc) = core.degree() else { break };
            let phi = cyclotomic(d);
            if phi.degree().unwrap() > dc || !may_vanish_at_root_of_unity(&core, d) {
                break;
            }
            match core.div_exact(&phi) {
                Some(q) => {
                    factors.push(d);
                    core = q;
                }
                None => break,
            }
        }
    }
    CyclotomicSplit { factors, core }
}

/// `f` without factors of `x` or cyclotomic factors.
pub fn non_cyclotomic_core(f: &IntPolynomial) -> IntPolynomial {
    let g = f.unshift(f.x_valuation());
    if g.is_constant() {
        return g;
    }
    strip_cyclotomic_factors(&g).core
}

pub fn is_cyclotomic_product(f: &IntPolynomial) -> bool {
    strip_cyclotomic_factors(f).core.is_unit()
}

/// True when the reversed coefficient sequence equals `±f`.
pub fn is_reciprocal(f: &IntPolynomial) -> bool {
    let r = f.reversed();
    r == *f || r == -f
}
