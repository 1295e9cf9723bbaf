use num_bigint::BigInt;
use num_rational::BigRational;
use num_traits::Signed;

use crate::error::{Error, Result};
use crate::interval::RationalInterval;
use crate::poly::IntPolynomial;

/// Signed remainder chain `f, f', -rem(f, f'), ...`, each term divided by
/// its positive content.
pub fn sturm_chain(f: &IntPolynomial) -> Vec<IntPolynomial> {
    let mut chain = vec![f.clone()];
    if f.is_constant() {
        return chain;
    }
    chain.push(f.derivative());
    loop {
        let n = chain.len();
        if chain[n - 1].is_constant() {
            break;
        }
        let r = chain[n - 2].positive_prem(&chain[n - 1]);
        if r.is_zero() {
            break;
        }
        let g = r.content();
        let r = -&r.div_exact(&IntPolynomial::constant(g)).unwrap();
        chain.push(r);
    }
    chain
}

/// Sign changes of the chain at `p/q`, `q > 0`, ignoring zeros.
pub fn sign_variations(chain: &[IntPolynomial], p: &BigInt, q: &BigInt) -> usize {
    let mut count = 0;
    let mut last = 0i8;
    for s in chain.iter().map(|g| g.sign_at(p, q)) {
        if s != 0 {
            if last != 0 && s != last {
                count += 1;
            }
            last = s;
        }
    }
    count
}

/// Distinct real roots of `f` strictly inside `interval`.
pub fn sturm_count(f: &IntPolynomial, interval: &RationalInterval) -> Result<usize> {
    let chain = sturm_chain(f);
    count_with_chain(&chain, interval.lo(), interval.hi())
}

pub(crate) fn count_with_chain(
    chain: &[IntPolynomial],
    lo: &BigRational,
    hi: &BigRational,
) -> Result<usize> {
    let f = &chain[0];
    for e in [lo, hi] {
        if f.sign_at(e.numer(), e.denom()) == 0 {
            return Err(Error::RootAtEndpoint);
        }
    }
    debug_assert!(lo.denom().is_positive() && hi.denom().is_positive());
    let va = sign_variations(chain, lo.numer(), lo.denom());
    let vb = sign_variations(chain, hi.numer(), hi.denom());
    Ok(va.saturating_sub(vb))
}
