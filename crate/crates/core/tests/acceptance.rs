//! Acceptance criteria: one PASS/FAIL line each, with its tolerance.
//!
//! Runs as a plain binary (`harness = false`). Failing criteria are printed
//! with their offending instances; the process exits non-zero only when
//! `ACCEPTANCE_STRICT=1` is set.

use std::collections::BTreeMap;
use std::time::Instant;

use betaexp::catalog::{catalog_expansion, chib_plus_4_literal_cell, frg_conflict, FrgClass, Status};
use betaexp::companion::{companion_poly, pseudo_cofactor};
use betaexp::expander::{greedy_expand, GreedyExpander, DEFAULT_MAX_STEPS};
use betaexp::family::{defining_poly, pisot_root_of, FamilyId, FamilySeries, Kind, Sign};
use betaexp::render::{render_series, NO_ROOT_RGB, ONE_RGB, ZERO_RGB};
use betaexp::verify::{family_identity, parse_families, run_sweep, sweep_instances, Check, InstanceReport};
use betaexp::{IntPolynomial, RealAlgebraic};
use num_bigint::BigInt;
use num_bigint::Sign::NoSign;
use num_traits::{One, Signed, Zero};
use rand::seq::SliceRandom;
use rand::SeedableRng;
use sha2::{Digest, Sha256};

/// SHA-256 of `render --family "PhiB-(20)" --n 1..100 --width 300`.
const RENDER_GOLDEN_SHA256: &str = "6bcdb21ca1271c238cd3ec417577a75daa1a76f7b3c6cd6b0fc3ecba5480d45e";

struct Outcome {
    pass: bool,
    summary: String,
    details: Vec<String>,
}

fn outcome(failures: Vec<String>, summary: String) -> Outcome {
    Outcome { pass: failures.is_empty(), summary, details: failures }
}

fn failures_for(reports: &[InstanceReport], check: Check) -> Vec<String> {
    reports
        .iter()
        .flat_map(|r| r.failures.iter().filter(move |(c, _)| *c == check).map(move |(_, why)| format!("{}: {why}", r.id)))
        .collect()
}

fn criterion_1(reports: &[InstanceReport]) -> Outcome {
    let ok = reports.iter().filter(|r| r.status == Status::Ok).count();
    let matched = reports.iter().filter(|r| r.engine_match == Some(true)).count();
    let mut bad: Vec<String> = reports
        .iter()
        .filter(|r| r.status == Status::Ok && r.engine_match != Some(true))
        .map(|r| {
            let cat = r.catalog_word.as_ref().map(|w| w.canonicalize().to_string()).unwrap_or("-".into());
            let eng = r.word.as_ref().map(ToString::to_string).unwrap_or("-".into());
            format!("{}: catalog {cat}, engine {eng}", r.id)
        })
        .collect();
    bad.extend(reports.iter().filter(|r| r.status != r.catalog_status).map(|r| {
        format!("{}: catalog status {}, root location {}", r.id, r.catalog_status.as_str(), r.status.as_str())
    }));
    outcome(bad, format!("{matched}/{ok} Pisot instances of {} match exactly", reports.len()))
}

fn criterion_2(reports: &[InstanceReport]) -> Outcome {
    let pisot: Vec<&InstanceReport> = reports.iter().filter(|r| r.status == Status::Ok).collect();
    let bad: Vec<String> = pisot
        .iter()
        .filter(|r| r.companion_vanishes != Some(true) || r.core_divides != Some(true))
        .map(|r| format!("{}: vanishes {:?}, core divides {:?}", r.id, r.companion_vanishes, r.core_divides))
        .collect();
    let n = pisot.len();
    outcome(bad, format!("R(beta) = 0 and core | R on {n} instances"))
}

fn criterion_3(reports: &[InstanceReport]) -> Outcome {
    let stated = reports.iter().filter(|r| r.expected_cofactor.is_some() && r.status == Status::Ok).count();
    let bad = failures_for(reports, Check::Cofactor);
    let mut by_family: BTreeMap<String, usize> = BTreeMap::new();
    for r in reports.iter().filter(|r| r.failed(Check::Cofactor)) {
        *by_family.entry(r.id.family_name()).or_default() += 1;
    }
    let cell = chib_plus_4_literal_cell();
    let chib4 = reports
        .iter()
        .find(|r| r.id == FamilyId::chi_n(Kind::ChiB, Sign::Plus, 4))
        .and_then(|r| r.pseudo_cofactor.clone());
    let reported = match chib4 {
        Some(q) => format!("ChiB+(4) reported only: computed {q}, literal cell {cell}, equal: {}", q == cell),
        None => "ChiB+(4) not in sweep".into(),
    };
    outcome(
        bad.clone(),
        format!("{}/{stated} stated co-factors reproduced; mismatches by family {by_family:?}; {reported}", stated - bad.len()),
    )
}

fn criterion_4(reports: &[InstanceReport]) -> Outcome {
    let bad = failures_for(reports, Check::Boyd);
    let non: Vec<String> = reports
        .iter()
        .filter(|r| r.true_cofactor_cyclotomic == Some(false))
        .map(|r| r.id.to_string())
        .collect();
    let phipsi = reports.iter().filter(|r| r.id.kind.is_phi_or_psi() && r.status == Status::Ok).count();
    outcome(
        bad,
        format!("{phipsi} Phi/Psi true co-factors checked; non-cyclotomic cores at {} instances", non.len()),
    )
}

fn criterion_5(reports: &[InstanceReport]) -> Outcome {
    let bad = failures_for(reports, Check::Parry);
    let words = reports.iter().filter(|r| r.parry.is_some()).count() + reports.iter().filter(|r| r.catalog_parry.is_some()).count();
    let lemma = reports.iter().filter(|r| r.lemma_holds.is_some()).count();
    outcome(bad, format!("{words} engine and catalog words tested; lemma premise evaluable on {lemma} words"))
}

fn criterion_6() -> Outcome {
    let mut bad = Vec::new();
    let mut checked = 0;
    for r in 1..=40 {
        for n in 1..=40 {
            for kind in [Kind::PhiA, Kind::PhiC, Kind::PsiA, Kind::PsiB] {
                let id = FamilyId::rn(kind, Sign::Plus, r, n);
                // the PhiA+ reindexing, stated for all r >= 2
                let pair = if kind == Kind::PhiA && r >= 2 {
                    let other = FamilyId::rn(Kind::PhiA, Sign::Plus, n + 1, r - 1);
                    Some((defining_poly(&id).unwrap(), defining_poly(&other).unwrap(), format!("{id} = {other}")))
                } else {
                    family_identity(&id).unwrap()
                };
                if let Some((a, b, what)) = pair {
                    checked += 1;
                    if a != b {
                        bad.push(what);
                    }
                }
            }
        }
    }
    outcome(bad, format!("{checked} polynomial identities with r, n <= 40"))
}

fn criterion_7(reports: &[InstanceReport]) -> Outcome {
    let bad = failures_for(reports, Check::Frg);
    let mut by_family: BTreeMap<String, usize> = BTreeMap::new();
    for r in reports.iter().filter(|r| r.failed(Check::Frg)) {
        *by_family.entry(r.id.family_name()).or_default() += 1;
    }
    let conflicts: Vec<String> = reports
        .iter()
        .filter(|r| r.status == Status::Ok)
        .filter_map(|r| frg_conflict(&r.id).map(|c| format!("{c}; observed frg = {:?}", r.frg)))
        .collect();
    let classified = reports.iter().filter(|r| r.frg_expected != FrgClass::NoRoot).count();
    let mut o = outcome(
        bad.clone(),
        format!(
            "{}/{classified} words match the classification; mismatches by family {by_family:?}; {} bullet conflicts logged",
            classified - bad.len(),
            conflicts.len()
        ),
    );
    o.details.extend(conflicts.into_iter().map(|c| format!("logged (not failed): {c}")));
    o
}

fn expand_poly(s: &str) -> String {
    let f: IntPolynomial = s.parse().unwrap();
    let beta = betaexp::realroot::isolate_root_above_1(&f).unwrap().unwrap();
    greedy_expand(&beta, DEFAULT_MAX_STEPS).unwrap().to_string()
}

fn expand_family(s: &str) -> String {
    let id: FamilyId = s.parse().unwrap();
    greedy_expand(&pisot_root_of(&id).unwrap().unwrap(), DEFAULT_MAX_STEPS).unwrap().to_string()
}

fn criterion_8() -> Outcome {
    let mut bad = Vec::new();
    let mut expect = |what: &str, got: String, want: &str| {
        if got != want {
            bad.push(format!("{what}: got {got}, want {want}"));
        }
    };
    expect("x^2-x-1", expand_poly("x^2-x-1"), "11");
    expect("Chi", expand_poly("x^4-x^3-2x^2+1"), "11(10)^w");
    expect("PhiR(2)", expand_family("PhiR(2)"), "1101");
    expect("ChiA+(1)", expand_family("ChiA+(1)"), "1001001");
    expect("PsiB+(1,2)", expand_family("PsiB+(1,2)"), "10001");
    let id: FamilyId = "ChiA+(1)".parse().unwrap();
    let w = greedy_expand(&pisot_root_of(&id).unwrap().unwrap(), DEFAULT_MAX_STEPS).unwrap();
    let q = pseudo_cofactor(&companion_poly(&w), &defining_poly(&id).unwrap()).unwrap();
    expect("ChiA+(1) co-factor", q.to_string(), "x^2+1");
    outcome(bad, "5 words and 1 co-factor".into())
}

fn criterion_9() -> Outcome {
    let series: FamilySeries = "PhiB-(20)".parse().unwrap();
    let a = render_series(&series, 1..=100, 300).unwrap();
    let b = render_series(&series, 1..=100, 300).unwrap();
    let mut bad = Vec::new();
    if (a.width, a.height) != (300, 100) {
        bad.push(format!("size {}x{}", a.width, a.height));
    }
    let (pa, pb) = (a.to_ppm(), b.to_ppm());
    if pa != pb {
        bad.push("two renders differ".into());
    }
    if !pa.starts_with(b"P6\n300 100\n255\n") || pa.len() != 15 + 300 * 100 * 3 {
        bad.push("not a 300x100 P6 file".into());
    }
    let hash = hex(&Sha256::digest(&pa));
    if hash != RENDER_GOLDEN_SHA256 {
        bad.push(format!("sha256 {hash} differs from the golden {RENDER_GOLDEN_SHA256}"));
    }
    let mut checked = 0usize;
    for n in 1..=100u32 {
        let row = (n - 1) as usize;
        let id = series.at(n).unwrap();
        match pisot_root_of(&id).unwrap() {
            None => {
                if (0..300).any(|c| a.pixel(row, c) != NO_ROOT_RGB) {
                    bad.push(format!("row {n} should be white"));
                }
            }
            Some(beta) => {
                let w = greedy_expand(&beta, DEFAULT_MAX_STEPS).unwrap();
                for c in 0..300 {
                    let want = if w.digit_at(c + 1) == 0 { ZERO_RGB } else { ONE_RGB };
                    checked += 1;
                    if a.pixel(row, c) != want {
                        bad.push(format!("row {n} column {c}"));
                        break;
                    }
                }
            }
        }
    }
    outcome(bad, format!("300x100 P6, sha256 {hash}, {checked} pixels agree with digit_at"))
}

fn hex(bytes: &[u8]) -> String {
    bytes.iter().map(|b| format!("{b:02x}")).collect()
}

/// Fixed-point bits of the floating oracle (about 361 decimal digits).
const ORACLE_BITS: usize = 1200;
/// `|beta r - 1| <= 2^-600` counts as an exact hit.
const ORACLE_HIT_BITS: usize = 600;
const ORACLE_SEED: u64 = 20_240_607;

/// `2^{P deg} f(m / 2^P)`.
fn eval_fixed(f: &IntPolynomial, m: &BigInt) -> BigInt {
    let c = f.coeffs();
    let d = c.len() - 1;
    let mut acc = c[d].clone();
    for i in (0..d).rev() {
        acc = acc * m + (&c[i] << (ORACLE_BITS * (d - i)));
    }
    acc
}

/// The root of `f` near `approx`, to `ORACLE_BITS` bits, by bisection.
fn oracle_root(f: &IntPolynomial, approx: f64) -> BigInt {
    let scale = |v: f64| BigInt::from((v * (1u64 << 40) as f64) as i64) << (ORACLE_BITS - 40);
    let (mut lo, mut hi) = (scale(approx - 1e-9), scale(approx + 1e-9));
    let s_lo = eval_fixed(f, &lo).sign();
    let s_hi = eval_fixed(f, &hi).sign();
    assert!(s_lo != s_hi && s_lo != NoSign && s_hi != NoSign, "bracket does not straddle the root");
    for _ in 0..ORACLE_BITS {
        let mid: BigInt = (&lo + &hi) >> 1;
        if eval_fixed(f, &mid).sign() == s_lo {
            lo = mid;
        } else {
            hi = mid;
        }
    }
    lo
}

fn oracle_digits(beta: &BigInt, count: usize) -> Vec<u8> {
    let one = BigInt::one() << ORACLE_BITS;
    let tol = BigInt::one() << (ORACLE_BITS - ORACLE_HIT_BITS);
    let mut r = one.clone();
    let mut out = Vec::with_capacity(count);
    for _ in 0..count {
        if r.is_zero() {
            out.push(0);
            continue;
        }
        let t = (beta * &r) >> ORACLE_BITS;
        let diff = &t - &one;
        if diff.abs() <= tol {
            out.push(1);
            r = BigInt::zero();
        } else if diff.is_positive() {
            out.push(1);
            r = diff;
        } else {
            out.push(0);
            r = t;
        }
    }
    out
}

fn criterion_10(reports: &[InstanceReport]) -> Outcome {
    let mut pool: Vec<FamilyId> = reports.iter().filter(|r| r.status == Status::Ok).map(|r| r.id).collect();
    let mut rng = rand::rngs::StdRng::seed_from_u64(ORACLE_SEED);
    pool.shuffle(&mut rng);
    let mut bad = Vec::new();
    for id in pool.iter().take(100) {
        let beta: RealAlgebraic = pisot_root_of(id).unwrap().unwrap();
        let f = defining_poly(id).unwrap();
        let fixed = oracle_root(&f, beta.to_f64());
        let want = oracle_digits(&fixed, 300);
        let got = GreedyExpander::new(&beta).unwrap().digits(300);
        if let Some(i) = (0..300).find(|&i| got[i] != want[i]) {
            bad.push(format!("{id}: first difference at digit {}", i + 1));
        }
    }
    outcome(bad, format!("{} random instances x 300 digits", pool.len().min(100)))
}

fn main() {
    let start = Instant::now();
    let ids = sweep_instances(&parse_families("all").unwrap(), 1..=6, 1..=40);
    let checks = Check::ALL.into_iter().collect();
    let reports = run_sweep(&ids, &checks, DEFAULT_MAX_STEPS).expect("sweep runs");
    // the catalog must answer for every instance
    for id in &ids {
        catalog_expansion(id).expect("catalog entry");
    }
    let criteria = [
        ("1", "engine-catalog equivalence, r 1..6, n 1..40", "exact, 0 mismatches", criterion_1(&reports)),
        ("2", "root identity and core divisibility", "exact", criterion_2(&reports)),
        ("3", "table co-factor reproduction", "exact equality after reduction", criterion_3(&reports)),
        ("4", "Boyd co-factor claim", "exact, 0 exceptions", criterion_4(&reports)),
        ("5", "Parry shift test and lemma implication", "exact", criterion_5(&reports)),
        ("6", "family polynomial identities", "exact, r, n <= 40", criterion_6()),
        ("7", "FRG classification", "exact; bullet conflicts logged", criterion_7(&reports)),
        ("8", "fixed instances", "exact", criterion_8()),
        ("9", "PhiB-(20) raster", "byte-identical", criterion_9()),
        (
            "10",
            "floating oracle cross-check",
            "first 300 digits equal; 1200-bit fixed point, hit tolerance 2^-600",
            criterion_10(&reports),
        ),
    ];
    let mut passed = 0;
    for (n, name, tol, o) in &criteria {
        println!("{} criterion {n}: {name} [tolerance: {tol}]: {}", if o.pass { "PASS" } else { "FAIL" }, o.summary);
        if o.pass {
            passed += 1;
        }
        for d in o.details.iter().take(400) {
            println!("    {d}");
        }
    }
    println!("{passed}/{} criteria passed in {:.1}s", criteria.len(), start.elapsed().as_secs_f64());
    if std::env::var("ACCEPTANCE_STRICT").as_deref() == Ok("1") && passed != criteria.len() {
        std::process::exit(1);
    }
}
