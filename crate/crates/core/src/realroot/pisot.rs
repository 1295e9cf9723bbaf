//! Certified check that a monic integer polynomial is the minimal-degree
//! carrier of a Pisot number.
//!
//! Roots are approximated numerically (Aberth in `f64`, then Newton in
//! fixed-point big integers) and certified with inclusion disks of radius
//! `d * |p(z_i)| / |lc * ∏_{j≠i} (z_i - z_j)|`. The union of these disks
//! contains every root, and each connected component of `m` disks holds
//! exactly `m` roots, so disks lying entirely inside or entirely outside the
//! unit circle give exact counts. All certification arithmetic is exact.

use num_bigint::BigInt;
use num_complex::Complex64;
use num_traits::{One, Signed, ToPrimitive, Zero};

use crate::cyclotomic::strip_cyclotomic_factors;
use crate::error::{Error, Result};
use crate::poly::IntPolynomial;

/// Highest fixed-point precision tried before giving up.
pub const MAX_PRECISION_BITS: u32 = 4096;

#[derive(Clone, Debug, PartialEq, Eq)]
struct Gauss {
    re: BigInt,
    im: BigInt,
}

impl Gauss {
    fn mul(&self, o: &Gauss) -> Gauss {
        Gauss {
            re: &self.re * &o.re - &self.im * &o.im,
            im: &self.re * &o.im + &self.im * &o.re,
        }
    }
    fn sub(&self, o: &Gauss) -> Gauss {
        Gauss { re: &self.re - &o.re, im: &self.im - &o.im }
    }
    fn norm_sqr(&self) -> BigInt {
        &self.re * &self.re + &self.im * &self.im
    }
    fn is_zero(&self) -> bool {
        self.re.is_zero() && self.im.is_zero()
    }
}

/// `2^(s*deg) * p(Z / 2^s)` for Gaussian-integer `Z`.
fn eval_scaled(coeffs: &[BigInt], z: &Gauss, s: u32) -> Gauss {
    let d = coeffs.len() - 1;
    let mut acc = Gauss { re: coeffs[d].clone(), im: BigInt::zero() };
    for (step, c) in coeffs[..d].iter().rev().enumerate() {
        acc = acc.mul(z);
        acc.re += c << (s as usize * (step + 1));
    }
    acc
}

/// Nearest integer to `n / d`, `d > 0`.
fn round_div(n: &BigInt, d: &BigInt) -> BigInt {
    let two = BigInt::from(2);
    num_integer::Integer::div_floor(&(n * &two + d), &(d * &two))
}

fn ceil_sqrt(v: &BigInt) -> BigInt {
    let r = v.sqrt();
    if &(&r * &r) < v {
        r + 1
    } else {
        r
    }
}

/// Simultaneous root approximation by the Aberth iteration.
fn aberth_f64(coeffs: &[f64]) -> Vec<Complex64> {
    let d = coeffs.len() - 1;
    let lc = coeffs[d];
    let radius = (0..d)
        .map(|k| (coeffs[k] / lc).abs().powf(1.0 / (d - k) as f64))
        .fold(0.0f64, f64::max)
        .max(0.5)
        * 1.1;
    let mut z: Vec<Complex64> = (0..d)
        .map(|k| Complex64::from_polar(radius, 2.0 * std::f64::consts::PI * (k as f64 + 0.25) / d as f64))
        .collect();
    let deriv: Vec<f64> = (1..=d).map(|k| coeffs[k] * k as f64).collect();
    let horner = |c: &[f64], x: Complex64| c.iter().rev().fold(Complex64::new(0.0, 0.0), |acc, &a| acc * x + a);
    for _ in 0..1000 {
        let mut moved = 0.0f64;
        for i in 0..d {
            let p = horner(coeffs, z[i]);
            let dp = horner(&deriv, z[i]);
            if p == Complex64::new(0.0, 0.0) {
                continue;
            }
            let ratio = p / dp;
            let repulsion: Complex64 = (0..d)
                .filter(|&j| j != i)
                .map(|j| Complex64::new(1.0, 0.0) / (z[i] - z[j]))
                .sum();
            let step = ratio / (Complex64::new(1.0, 0.0) - ratio * repulsion);
            if step.is_finite() {
                z[i] -= step;
                moved = moved.max(step.norm() / z[i].norm().max(1.0));
            }
        }
        if moved < 1e-15 {
            break;
        }
    }
    z
}

#[derive(Clone, Copy, Debug, PartialEq, Eq)]
enum DiskPlace {
    Inside,
    Outside,
    Straddles,
}

/// Outcome of one certification attempt.
enum Certificate {
    Decided(bool),
    NeedMorePrecision,
}

fn certify(coeffs: &[BigInt], roots: &[Gauss], s: u32) -> Certificate {
    let d = roots.len();
    let lc = &coeffs[d];
    let one = BigInt::one() << s;
    let mut places = Vec::with_capacity(d);
    for i in 0..d {
        let mut prod = Gauss { re: BigInt::one(), im: BigInt::zero() };
        for j in (0..d).filter(|&j| j != i) {
            prod = prod.mul(&roots[i].sub(&roots[j]));
        }
        if prod.is_zero() {
            return Certificate::NeedMorePrecision;
        }
        let value = eval_scaled(coeffs, &roots[i], s);
        let num = BigInt::from(d * d) * value.norm_sqr();
        let den = lc * lc * prod.norm_sqr();
        let radius_sq = num_integer::Integer::div_ceil(&num, &den);
        let radius = ceil_sqrt(&radius_sq);
        let modulus_sq = roots[i].norm_sqr();
        let place = if radius < one && modulus_sq < (&one - &radius).pow(2) {
            DiskPlace::Inside
        } else if modulus_sq > (&one + &radius).pow(2) {
            DiskPlace::Outside
        } else {
            DiskPlace::Straddles
        };
        if place == DiskPlace::Straddles {
            return Certificate::NeedMorePrecision;
        }
        places.push(place);
    }
    let outside: Vec<usize> = (0..d).filter(|&i| places[i] == DiskPlace::Outside).collect();
    // a lone outside root is real; its sign is the sign of the disk centre's real part
    Certificate::Decided(outside.len() == 1 && roots[outside[0]].re.is_positive())
}

fn newton_polish(coeffs: &[BigInt], roots: &mut [Gauss], s: u32) {
    let deriv: Vec<BigInt> = coeffs
        .iter()
        .enumerate()
        .skip(1)
        .map(|(k, c)| c * BigInt::from(k))
        .collect();
    for z in roots.iter_mut() {
        for _ in 0..12 {
            let p = eval_scaled(coeffs, z, s);
            let dp = eval_scaled(&deriv, z, s);
            let denom = dp.norm_sqr();
            if denom.is_zero() {
                break;
            }
            // p / dp in units of 2^-s: (P * conj(P')) / |P'|^2
            let re = &p.re * &dp.re + &p.im * &dp.im;
            let im = &p.im * &dp.re - &p.re * &dp.im;
            let step = Gauss { re: round_div(&re, &denom), im: round_div(&im, &denom) };
            if step.is_zero() {
                break;
            }
            *z = z.sub(&step);
        }
    }
}

fn to_gauss(z: Complex64, s: u32) -> Gauss {
    let scale = 2f64.powi(s as i32);
    let conv = |v: f64| -> BigInt {
        let scaled = (v * scale).round();
        num_bigint::BigInt::from(scaled as i128)
    };
    Gauss { re: conv(z.re), im: conv(z.im) }
}

fn upscale(z: &Gauss, by: u32) -> Gauss {
    Gauss { re: &z.re << by, im: &z.im << by }
}

/// Certified test: exactly one root of `core` lies outside the closed unit
/// disk, it is real and positive, and every other root is strictly inside.
/// `core` must be square-free with no cyclotomic factor and nonzero constant term.
fn certified_single_root_outside(core: &IntPolynomial) -> Result<bool> {
    let coeffs = core.coeffs().to_vec();
    let d = coeffs.len() - 1;
    if d == 0 {
        return Ok(false);
    }
    let approx: Option<Vec<f64>> = coeffs.iter().map(|c| c.to_f64().filter(|v| v.is_finite())).collect();
    let mut s = 48u32;
    let mut roots: Vec<Gauss> = match approx {
        Some(fc) => aberth_f64(&fc).into_iter().map(|z| to_gauss(z, s)).collect(),
        None => return Err(Error::Indeterminate(0)),
    };
    loop {
        newton_polish(&coeffs, &mut roots, s);
        if let Certificate::Decided(b) = certify(&coeffs, &roots, s) {
            return Ok(b);
        }
        if s >= MAX_PRECISION_BITS {
            return Err(Error::Indeterminate(s));
        }
        roots = roots.iter().map(|z| upscale(z, s)).collect();
        s *= 2;
    }
}

/// True iff `f` has exactly one real root `q > 1` and all other complex
/// roots have modulus `< 1`.
///
/// Exact preprocessing handles the cases numerics cannot certify: factors of
/// `x` (roots at 0, strictly inside), cyclotomic factors (roots on the unit
/// circle) and repeated factors. Errors with [`Error::Indeterminate`] when a
/// root cannot be separated from the unit circle within
/// [`MAX_PRECISION_BITS`]; never returns a wrong boolean.
pub fn pisot_verify(f: &IntPolynomial) -> Result<bool> {
    if !f.is_monic() {
        return Err(Error::NotMonic);
    }
    let g = f.unshift(f.x_valuation());
    if g.is_constant() {
        return Ok(false);
    }
    let split = strip_cyclotomic_factors(&g);
    if !split.factors.is_empty() {
        return Ok(false);
    }
    if !split.core.is_square_free() {
        return Ok(false);
    }
    certified_single_root_outside(&split.core)
}
