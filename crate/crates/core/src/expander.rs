//! Exact greedy expansion of 1 in base `β ∈ (1, 2)`.
//!
//! The state after `i` digits is `r_i = β r_{i-1} - a_i`, kept as an exact
//! integer vector in `Z[x] / (m)` where `m` is the defining polynomial of `β`
//! with its cyclotomic factors removed. Over that quotient distinct vectors
//! are distinct numbers when `m` is irreducible, so a repeated vector marks
//! the start of the period.

use std::collections::HashMap;

use num_bigint::BigInt;
use num_traits::{One, Signed, Zero};

use crate::cyclotomic::non_cyclotomic_core;
use crate::error::{Error, Result};
use crate::poly::IntPolynomial;
use crate::realroot::{PowerTable, RealAlgebraic};
use crate::word::ExpansionWord;

pub const DEFAULT_MAX_STEPS: usize = 100_000;

const START_PRECISION: u64 = 64;
const GUARD_BITS: u64 = 32;

/// An element of `Z[β]` as coefficients of `1, β, …, β^{d-1}`.
#[derive(Clone, Debug, PartialEq, Eq, Hash)]
pub struct BetaRemainder {
    coeffs: Vec<BigInt>,
}

impl BetaRemainder {
    pub fn coeffs(&self) -> &[BigInt] {
        &self.coeffs
    }

    pub fn is_zero(&self) -> bool {
        self.coeffs.iter().all(Zero::is_zero)
    }

    pub fn to_polynomial(&self) -> IntPolynomial {
        IntPolynomial::new(self.coeffs.clone())
    }
}

/// Greedy digit generator for a fixed base.
#[derive(Clone, Debug)]
pub struct GreedyExpander {
    modulus: Vec<BigInt>,
    alpha: RealAlgebraic,
    table: PowerTable,
    prec: u64,
}

impl GreedyExpander {
    pub fn new(beta: &RealAlgebraic) -> Result<Self> {
        if !beta.in_open_unit_to_two() {
            return Err(Error::BaseOutOfRange);
        }
        let mut core = non_cyclotomic_core(beta.defpoly());
        if core.leading().is_some_and(|c| c.is_negative()) {
            core = -&core;
        }
        if !core.is_monic() {
            return Err(Error::NotMonic);
        }
        let mut alpha = beta.with_defpoly(core.clone())?;
        alpha.refine_bits(START_PRECISION as i64);
        let d = core.degree().expect("core of a polynomial with a root above 1");
        let table = PowerTable::new(&alpha, d, START_PRECISION + GUARD_BITS);
        Ok(GreedyExpander { modulus: core.into_coeffs(), alpha, table, prec: START_PRECISION })
    }

    /// Monic polynomial the states are reduced by.
    pub fn modulus(&self) -> IntPolynomial {
        IntPolynomial::new(self.modulus.clone())
    }

    pub fn degree(&self) -> usize {
        self.modulus.len() - 1
    }

    pub fn one(&self) -> BetaRemainder {
        let mut coeffs = vec![BigInt::zero(); self.degree()];
        coeffs[0] = BigInt::one();
        BetaRemainder { coeffs }
    }

    fn times_beta(&self, r: &BetaRemainder) -> BetaRemainder {
        let d = self.degree();
        let top = r.coeffs[d - 1].clone();
        let mut coeffs = Vec::with_capacity(d);
        coeffs.push(BigInt::zero());
        coeffs.extend_from_slice(&r.coeffs[..d - 1]);
        if !top.is_zero() {
            for (c, m) in coeffs.iter_mut().zip(&self.modulus) {
                *c -= &top * m;
            }
        }
        BetaRemainder { coeffs }
    }

    /// Exact sign of `Σ v_k β^k`.
    fn sign(&mut self, v: &[BigInt]) -> i8 {
        if v.iter().all(Zero::is_zero) {
            return 0;
        }
        let g = IntPolynomial::new(v.to_vec());
        let mut zero_checked = false;
        loop {
            if let Some(s) = self.table.sign_of(&g) {
                return s;
            }
            if !zero_checked && self.prec >= 4 * START_PRECISION {
                // only reachable when the modulus is reducible
                if self.alpha.is_root_of(&g) {
                    return 0;
                }
                zero_checked = true;
            }
            self.prec *= 2;
            self.alpha.refine_bits(self.prec as i64);
            self.table = PowerTable::new(&self.alpha, self.degree(), self.prec + GUARD_BITS);
        }
    }

    /// One greedy step: the digit and the next state.
    pub fn step(&mut self, r: &BetaRemainder) -> (u8, BetaRemainder) {
        let mut s = self.times_beta(r);
        s.coeffs[0] -= 1;
        match self.sign(&s.coeffs) {
            // β r = 1 exactly: the expansion ends here
            0 => {
                s.coeffs.iter_mut().for_each(|c| c.set_zero());
                (1, s)
            }
            1 => (1, s),
            _ => {
                s.coeffs[0] += 1;
                (0, s)
            }
        }
    }

    /// Runs until the state reaches zero or repeats.
    pub fn expand(&mut self, max_steps: usize) -> Result<ExpansionWord> {
        let mut seen: HashMap<BetaRemainder, usize> = HashMap::new();
        let mut digits = Vec::new();
        let mut r = self.one();
        seen.insert(r.clone(), 0);
        for i in 1..=max_steps {
            let (digit, next) = self.step(&r);
            digits.push(digit);
            if next.is_zero() {
                return ExpansionWord::finite(digits).map(|w| w.canonicalize());
            }
            if let Some(&j) = seen.get(&next) {
                let per = digits.split_off(j);
                return ExpansionWord::new(digits, per).map(|w| w.canonicalize());
            }
            seen.insert(next.clone(), i);
            r = next;
        }
        Err(Error::StepLimit(max_steps))
    }

    /// The first `count` digits, zero-padded after a finite expansion.
    pub fn digits(&mut self, count: usize) -> Vec<u8> {
        let mut out = Vec::with_capacity(count);
        let mut r = self.one();
        while out.len() < count {
            if r.is_zero() {
                out.push(0);
                continue;
            }
            let (digit, next) = self.step(&r);
            out.push(digit);
            r = next;
        }
        out
    }
}

/// `d_β(1)` in canonical form.
pub fn greedy_expand(beta: &RealAlgebraic, max_steps: usize) -> Result<ExpansionWord> {
    GreedyExpander::new(beta)?.expand(max_steps)
}
