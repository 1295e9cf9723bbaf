//! Instance-wise verification of the catalog against the exact engine, and
//! sweeps over family/parameter ranges.

use std::collections::BTreeSet;
use std::fmt;
use std::str::FromStr;
use std::time::Instant;

use rayon::prelude::*;
use serde::Serialize;

use crate::catalog::{
    boyd_noncyclotomic_expected, catalog_expansion, chib_plus_4_literal_cell, frg_conflict, frg_expected,
    FrgClass, Status,
};
use crate::companion::{companion_poly, pseudo_cofactor, true_cofactor};
use crate::cyclotomic::{is_reciprocal, strip_cyclotomic_factors};
use crate::error::{Error, Result};
use crate::expander::greedy_expand;
use crate::family::{defining_poly, locate_pisot_root, FamilyId, Kind, RootLocation, Sign};
use crate::poly::IntPolynomial;
use crate::ratfunc::RationalFunction;
use crate::word::ExpansionWord;

#[derive(Clone, Copy, Debug, PartialEq, Eq, PartialOrd, Ord, Hash)]
pub enum Check {
    Expansion,
    Cofactor,
    Parry,
    Boyd,
    Frg,
    Identities,
}

impl Check {
    pub const ALL: [Check; 6] =
        [Check::Expansion, Check::Cofactor, Check::Parry, Check::Boyd, Check::Frg, Check::Identities];

    pub fn name(self) -> &'static str {
        match self {
            Check::Expansion => "expansion",
            Check::Cofactor => "cofactor",
            Check::Parry => "parry",
            Check::Boyd => "boyd",
            Check::Frg => "frg",
            Check::Identities => "identities",
        }
    }
}

impl FromStr for Check {
    type Err = Error;

    fn from_str(s: &str) -> Result<Self> {
        Check::ALL
            .into_iter()
            .find(|c| c.name() == s.trim())
            .ok_or_else(|| Error::Parse(format!("unknown check {s:?}")))
    }
}

pub type CheckSet = BTreeSet<Check>;

/// Parses `expansion,parry` or `all`.
pub fn parse_checks(s: &str) -> Result<CheckSet> {
    if s.trim() == "all" {
        return Ok(Check::ALL.into_iter().collect());
    }
    s.split(',').map(str::parse).collect()
}

/// A family name with an optional sign: `PhiA` selects both signs.
#[derive(Clone, Copy, Debug, PartialEq, Eq)]
pub struct FamilySelector {
    pub kind: Kind,
    pub sign: Option<Sign>,
}

impl FromStr for FamilySelector {
    type Err = Error;

    fn from_str(s: &str) -> Result<Self> {
        let s = s.trim();
        let (name, sign) = if let Some(h) = s.strip_suffix('+') {
            (h, Some(Sign::Plus))
        } else if let Some(h) = s.strip_suffix('-').or_else(|| s.strip_suffix('−')) {
            (h, Some(Sign::Minus))
        } else {
            (s, None)
        };
        let kind = Kind::ALL
            .into_iter()
            .find(|k| k.name() == name)
            .ok_or_else(|| Error::MalformedFamily(s.to_string()))?;
        if sign.is_some() && !kind.signed() {
            return Err(Error::MalformedFamily(s.to_string()));
        }
        Ok(FamilySelector { kind, sign })
    }
}

/// Parses `all` or a comma-separated list of selectors.
pub fn parse_families(s: &str) -> Result<Vec<FamilySelector>> {
    if s.trim() == "all" {
        return Ok(Kind::ALL.into_iter().map(|kind| FamilySelector { kind, sign: None }).collect());
    }
    s.split(',').map(str::parse).collect()
}

/// All instances selected, ordered by family, sign (`-` before `+`), `r`, `n`.
pub fn sweep_instances(
    families: &[FamilySelector],
    r_range: std::ops::RangeInclusive<u32>,
    n_range: std::ops::RangeInclusive<u32>,
) -> Vec<FamilyId> {
    let mut out = BTreeSet::new();
    for sel in families {
        let signs: Vec<Sign> = match sel.sign {
            Some(s) => vec![s],
            None => vec![Sign::Minus, Sign::Plus],
        };
        match sel.kind {
            Kind::Chi => {
                out.insert(FamilyId::chi());
            }
            Kind::PhiR => out.extend(r_range.clone().filter(|&r| r > 0).map(FamilyId::phi_r)),
            Kind::PsiR => out.extend(r_range.clone().filter(|&r| r > 0).map(FamilyId::psi_r)),
            Kind::ChiA | Kind::ChiB => {
                for &s in &signs {
                    out.extend(n_range.clone().filter(|&n| n > 0).map(|n| FamilyId::chi_n(sel.kind, s, n)));
                }
            }
            kind => {
                for &s in &signs {
                    for r in r_range.clone().filter(|&r| r > 0) {
                        out.extend(n_range.clone().filter(|&n| n > 0).map(|n| FamilyId::rn(kind, s, r, n)));
                    }
                }
            }
        }
    }
    out.into_iter().collect()
}

/// Everything computed for one instance.
#[derive(Clone, Debug)]
pub struct InstanceReport {
    pub id: FamilyId,
    /// Root location observed from the defining polynomial.
    pub status: Status,
    pub catalog_status: Status,
    pub word: Option<ExpansionWord>,
    pub catalog_word: Option<ExpansionWord>,
    pub companion: Option<IntPolynomial>,
    pub pseudo_cofactor: Option<RationalFunction>,
    pub expected_cofactor: Option<RationalFunction>,
    pub true_cofactor: Option<IntPolynomial>,
    pub true_cofactor_cyclotomic: Option<bool>,
    pub true_cofactor_reciprocal: Option<bool>,
    pub companion_vanishes: Option<bool>,
    pub core_divides: Option<bool>,
    pub parry: Option<bool>,
    pub catalog_parry: Option<bool>,
    pub lemma_holds: Option<bool>,
    pub frg: Option<bool>,
    pub frg_expected: FrgClass,
    pub engine_match: Option<bool>,
    /// Failed checks with a reason.
    pub failures: Vec<(Check, String)>,
    /// Logged observations that are not failures.
    pub notes: Vec<String>,
    pub ms: u64,
}

impl InstanceReport {
    pub fn passed(&self) -> bool {
        self.failures.is_empty()
    }

    pub fn failed(&self, check: Check) -> bool {
        self.failures.iter().any(|(c, _)| *c == check)
    }
}

/// One JSONL line.
#[derive(Serialize)]
pub struct ReportRecord {
    pub family: String,
    pub r: Option<u32>,
    pub n: Option<u32>,
    pub status: &'static str,
    pub word: Option<String>,
    pub companion: Option<String>,
    pub pseudo_cofactor: Option<String>,
    pub true_cofactor_cyclotomic: Option<bool>,
    pub true_cofactor_reciprocal: Option<bool>,
    pub parry: Option<bool>,
    pub frg: Option<bool>,
    pub engine_match: Option<bool>,
    pub ms: Option<u64>,
}

impl InstanceReport {
    pub fn record(&self, timing: bool) -> ReportRecord {
        ReportRecord {
            family: self.id.family_name(),
            r: self.id.r,
            n: self.id.n,
            status: self.status.as_str(),
            word: self.word.as_ref().map(ToString::to_string),
            companion: self.companion.as_ref().map(IntPolynomial::to_coeff_string),
            pseudo_cofactor: self.pseudo_cofactor.as_ref().map(ToString::to_string),
            true_cofactor_cyclotomic: self.true_cofactor_cyclotomic,
            true_cofactor_reciprocal: self.true_cofactor_reciprocal,
            parry: self.parry,
            frg: self.frg,
            engine_match: self.engine_match,
            ms: timing.then_some(self.ms),
        }
    }

    pub fn to_json_line(&self, timing: bool) -> String {
        serde_json::to_string(&self.record(timing)).expect("plain record serializes")
    }
}

impl fmt::Display for InstanceReport {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "{} {}", self.id, self.status.as_str())?;
        if let Some(w) = &self.word {
            write!(f, " {w}")?;
        }
        for (c, why) in &self.failures {
            write!(f, "\n  FAIL {}: {why}", c.name())?;
        }
        for note in &self.notes {
            write!(f, "\n  note: {note}")?;
        }
        Ok(())
    }
}

/// The polynomial identity relating `id` to another family member, if any.
/// Returns `(left, right, description)`.
pub fn family_identity(id: &FamilyId) -> Result<Option<(IntPolynomial, IntPolynomial, String)>> {
    let (Some(sign), Some(r), Some(n)) = (id.sign, id.r, id.n) else {
        return Ok(None);
    };
    if sign != Sign::Plus {
        return Ok(None);
    }
    let rn = |kind, r, n| FamilyId::rn(kind, Sign::Plus, r, n);
    let other = match id.kind {
        Kind::PhiA if n + 2 <= r => rn(Kind::PhiA, n + 1, r - 1),
        Kind::PhiC => rn(Kind::PhiC, n, r),
        Kind::PsiB => rn(Kind::PsiB, n, r),
        Kind::PsiA => {
            let left = &defining_poly(id)? * &IntPolynomial::from_i64s(&[-1, 1]);
            let target = rn(Kind::PhiB, n, r + 1);
            return Ok(Some((left, defining_poly(&target)?, format!("{id} * (x - 1) = {target}"))));
        }
        _ => return Ok(None),
    };
    Ok(Some((defining_poly(id)?, defining_poly(&other)?, format!("{id} = {other}"))))
}

fn observed_status(loc: &RootLocation) -> Status {
    match loc {
        RootLocation::Pisot(_) => Status::Ok,
        RootLocation::NotInUnitToTwo => Status::RootNotIn12,
        RootLocation::NoPisotRoot => Status::NoRoot,
    }
}

fn lemma_holds(w: &ExpansionWord) -> Option<bool> {
    if !w.is_finite() {
        return None;
    }
    let prefixes = w.lemma_prefixes();
    if prefixes.is_empty() {
        return None;
    }
    let premise = prefixes.iter().any(|&m| w.lemma_one_premise(m).unwrap_or(false));
    Some(!premise || w.parry_valid())
}

/// Runs every computation for `id` and records failures of the selected checks.
pub fn verify_instance(id: &FamilyId, checks: &CheckSet, max_steps: usize) -> Result<InstanceReport> {
    let start = Instant::now();
    let entry = catalog_expansion(id)?;
    let loc = locate_pisot_root(id)?;
    let status = observed_status(&loc);
    let mut rep = InstanceReport {
        id: *id,
        status,
        catalog_status: entry.status,
        word: None,
        catalog_word: entry.word.clone(),
        companion: None,
        pseudo_cofactor: None,
        expected_cofactor: entry.expected_cofactor.clone(),
        true_cofactor: None,
        true_cofactor_cyclotomic: None,
        true_cofactor_reciprocal: None,
        companion_vanishes: None,
        core_divides: None,
        parry: None,
        catalog_parry: None,
        lemma_holds: None,
        frg: None,
        frg_expected: frg_expected(id)?,
        engine_match: None,
        failures: Vec::new(),
        notes: Vec::new(),
        ms: 0,
    };
    let fail = |rep: &mut InstanceReport, c: Check, why: String| {
        if checks.contains(&c) {
            rep.failures.push((c, why));
        }
    };

    if checks.contains(&Check::Identities) {
        if let Some((left, right, what)) = family_identity(id)? {
            if left != right {
                fail(&mut rep, Check::Identities, format!("{what} does not hold"));
            }
        }
    }

    if status != entry.status {
        fail(
            &mut rep,
            Check::Expansion,
            format!("catalog status {} but root location gives {}", entry.status.as_str(), status.as_str()),
        );
    }
    if let Some(cw) = &entry.word {
        rep.catalog_parry = Some(cw.parry_valid());
        rep.lemma_holds = lemma_holds(cw);
        if !cw.parry_valid() {
            fail(&mut rep, Check::Parry, format!("catalog word {cw} fails the shift test"));
        }
        if rep.lemma_holds == Some(false) {
            fail(&mut rep, Check::Parry, format!("lemma premise holds for {cw} but the shift test fails"));
        }
    }

    let RootLocation::Pisot(beta) = loc else {
        rep.ms = start.elapsed().as_millis() as u64;
        return Ok(rep);
    };

    let f = defining_poly(id)?;
    let word = match greedy_expand(&beta, max_steps) {
        Ok(w) => w,
        Err(e) => {
            fail(&mut rep, Check::Expansion, format!("engine: {e}"));
            rep.ms = start.elapsed().as_millis() as u64;
            return Ok(rep);
        }
    };
    let r = companion_poly(&word);
    let q = pseudo_cofactor(&r, &f)?;
    let t = true_cofactor(&r, &f);
    rep.companion_vanishes = Some(beta.is_root_of(&r));
    rep.core_divides = Some(t.is_some());
    rep.parry = Some(word.parry_valid());
    rep.frg = Some(word.frg_check());
    rep.engine_match = entry.word.as_ref().map(|cw| cw.canonicalize() == word);

    match rep.engine_match {
        Some(true) => {}
        Some(false) => {
            let cw = entry.word.as_ref().unwrap().canonicalize();
            fail(&mut rep, Check::Expansion, format!("catalog word {cw} but engine gives {word}"));
        }
        None => fail(&mut rep, Check::Expansion, format!("catalog has no word; engine gives {word}")),
    }
    if rep.companion_vanishes == Some(false) {
        fail(&mut rep, Check::Expansion, "companion polynomial does not vanish at the root".into());
    }
    if t.is_none() {
        fail(&mut rep, Check::Expansion, "defining core does not divide the companion polynomial".into());
    }
    if !word.parry_valid() {
        fail(&mut rep, Check::Parry, format!("engine word {word} fails the shift test"));
    }

    if let Some(expected) = &entry.expected_cofactor {
        if *expected != q {
            fail(&mut rep, Check::Cofactor, format!("pseudo co-factor {q}, table gives {expected}"));
        }
    } else if id.kind == Kind::ChiB && id.sign == Some(Sign::Plus) && id.n == Some(4) {
        let cell = chib_plus_4_literal_cell();
        rep.notes.push(format!(
            "pseudo co-factor {q}; the literal table cell reads {cell} ({})",
            if cell == q { "equal" } else { "different" }
        ));
    }

    if let Some(t) = &t {
        let core = if t.is_zero() { t.clone() } else { strip_cyclotomic_factors(t).core };
        let cyclotomic = core.is_unit();
        let reciprocal = is_reciprocal(&core);
        rep.true_cofactor_cyclotomic = Some(cyclotomic);
        rep.true_cofactor_reciprocal = Some(reciprocal);
        let expect_non = boyd_noncyclotomic_expected(id);
        if cyclotomic == expect_non {
            let want = if expect_non { "a non-cyclotomic factor" } else { "a cyclotomic product" };
            fail(&mut rep, Check::Boyd, format!("true co-factor {t} is not {want}"));
        } else if expect_non && reciprocal {
            fail(&mut rep, Check::Boyd, format!("non-cyclotomic part {core} of the true co-factor is reciprocal"));
        }
        if !cyclotomic {
            rep.notes.push(format!("true co-factor core {core}"));
        }
    }

    let observed = match (word.is_finite(), rep.frg) {
        (false, _) => FrgClass::NotFinite,
        (true, Some(true)) => FrgClass::Frg,
        _ => FrgClass::FiniteNotFrg,
    };
    if observed != rep.frg_expected {
        let why = format!("{word} is {}, expected {}", observed.as_str(), rep.frg_expected.as_str());
        fail(&mut rep, Check::Frg, why);
    }
    if let Some(c) = frg_conflict(id) {
        rep.notes.push(format!("{c}; observed {}", observed.as_str()));
    }

    rep.word = Some(word);
    rep.companion = Some(r);
    rep.pseudo_cofactor = Some(q);
    rep.true_cofactor = t;
    rep.ms = start.elapsed().as_millis() as u64;
    Ok(rep)
}

/// Verifies `ids` in parallel; the output keeps the input order.
pub fn run_sweep(ids: &[FamilyId], checks: &CheckSet, max_steps: usize) -> Result<Vec<InstanceReport>> {
    ids.par_iter().map(|id| verify_instance(id, checks, max_steps)).collect()
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::expander::DEFAULT_MAX_STEPS;

    fn all() -> CheckSet {
        Check::ALL.into_iter().collect()
    }

    fn id(s: &str) -> FamilyId {
        s.parse().unwrap()
    }

    #[test]
    fn parses_selections() {
        assert_eq!(parse_checks("expansion,parry").unwrap().len(), 2);
        assert_eq!(parse_checks("all").unwrap().len(), 6);
        assert!(parse_checks("expansion,bogus").is_err());
        assert_eq!(parse_families("all").unwrap().len(), 10);
        let sel = parse_families("PhiA+,ChiB").unwrap();
        assert_eq!(sel[0], FamilySelector { kind: Kind::PhiA, sign: Some(Sign::Plus) });
        assert_eq!(sel[1], FamilySelector { kind: Kind::ChiB, sign: None });
        assert!(parse_families("Chi+").is_err());
    }

    #[test]
    fn sweep_order_is_deterministic() {
        let ids = sweep_instances(&parse_families("PhiB,Chi,PhiR").unwrap(), 1..=2, 1..=2);
        let names: Vec<String> = ids.iter().map(ToString::to_string).collect();
        assert_eq!(
            names,
            [
                "PhiR(1)", "PhiR(2)", "Chi", "PhiB-(1,1)", "PhiB-(1,2)", "PhiB-(2,1)", "PhiB-(2,2)", "PhiB+(1,1)",
                "PhiB+(1,2)", "PhiB+(2,1)", "PhiB+(2,2)"
            ]
        );
    }

    #[test]
    fn fixed_instance_reports() {
        let rep = verify_instance(&id("ChiA+(1)"), &all(), DEFAULT_MAX_STEPS).unwrap();
        assert!(rep.passed(), "{rep}");
        assert_eq!(rep.word.as_ref().unwrap().to_string(), "1001001");
        assert_eq!(rep.pseudo_cofactor.as_ref().unwrap().to_string(), "x^2+1");
        let line = rep.to_json_line(false);
        assert!(line.starts_with(r#"{"family":"ChiA+","r":null,"n":1,"status":"OK","word":"1001001","#), "{line}");
        assert!(line.ends_with(r#""engine_match":true,"ms":null}"#), "{line}");
    }

    #[test]
    fn rootless_instance_report() {
        let rep = verify_instance(&id("PhiB+(2,1)"), &all(), DEFAULT_MAX_STEPS).unwrap();
        assert_eq!(rep.status, Status::NoRoot);
        assert!(rep.passed(), "{rep}");
        assert!(rep.word.is_none());
    }

    #[test]
    fn boyd_instance() {
        let rep = verify_instance(&id("ChiB-(7)"), &all(), DEFAULT_MAX_STEPS).unwrap();
        assert_eq!(rep.true_cofactor_cyclotomic, Some(false));
        assert_eq!(rep.true_cofactor_reciprocal, Some(false));
        assert!(!rep.failed(Check::Boyd), "{rep}");
    }

    #[test]
    fn identities_hold_on_a_grid() {
        for r in 1..=8 {
            for n in 1..=8 {
                for kind in [Kind::PhiA, Kind::PhiC, Kind::PsiA, Kind::PsiB] {
                    if let Some((a, b, what)) = family_identity(&FamilyId::rn(kind, Sign::Plus, r, n)).unwrap() {
                        assert_eq!(a, b, "{what}");
                    }
                }
            }
        }
    }
}
