//! The regular Pisot families in `(1, 2)`: limit-point polynomials
//! `Φ_r`, `Ψ_r`, `X` and the two-parameter sequences approaching them.

use std::fmt;
use std::str::FromStr;

use crate::cyclotomic::non_cyclotomic_core;
use crate::error::{Error, Result};
use crate::poly::IntPolynomial;
use crate::realroot::{isolate_root_above_1, pisot_verify, RealAlgebraic};

#[derive(Clone, Copy, Debug, PartialEq, Eq, Hash, PartialOrd, Ord)]
pub enum Kind {
    PhiR,
    PsiR,
    Chi,
    PhiA,
    PhiB,
    PhiC,
    PsiA,
    PsiB,
    ChiA,
    ChiB,
}

impl Kind {
    pub const ALL: [Kind; 10] = [
        Kind::PhiR,
        Kind::PsiR,
        Kind::Chi,
        Kind::PhiA,
        Kind::PhiB,
        Kind::PhiC,
        Kind::PsiA,
        Kind::PsiB,
        Kind::ChiA,
        Kind::ChiB,
    ];

    pub fn name(self) -> &'static str {
        match self {
            Kind::PhiR => "PhiR",
            Kind::PsiR => "PsiR",
            Kind::Chi => "Chi",
            Kind::PhiA => "PhiA",
            Kind::PhiB => "PhiB",
            Kind::PhiC => "PhiC",
            Kind::PsiA => "PsiA",
            Kind::PsiB => "PsiB",
            Kind::ChiA => "ChiA",
            Kind::ChiB => "ChiB",
        }
    }

    pub fn takes_r(self) -> bool {
        !matches!(self, Kind::Chi | Kind::ChiA | Kind::ChiB)
    }

    pub fn takes_n(self) -> bool {
        !matches!(self, Kind::PhiR | Kind::PsiR | Kind::Chi)
    }

    pub fn signed(self) -> bool {
        self.takes_n()
    }

    /// Families accumulating at `φ_r` or `ψ_r` (as opposed to `χ`).
    pub fn is_phi_or_psi(self) -> bool {
        !matches!(self, Kind::Chi | Kind::ChiA | Kind::ChiB)
    }
}

#[derive(Clone, Copy, Debug, PartialEq, Eq, Hash, PartialOrd, Ord)]
pub enum Sign {
    Minus,
    Plus,
}

impl Sign {
    fn symbol(self) -> char {
        match self {
            Sign::Plus => '+',
            Sign::Minus => '-',
        }
    }
}

/// A single family instance such as `PhiA+(3,4)` or `Chi`.
#[derive(Clone, Copy, Debug, PartialEq, Eq, Hash, PartialOrd, Ord)]
pub struct FamilyId {
    pub kind: Kind,
    pub sign: Option<Sign>,
    pub r: Option<u32>,
    pub n: Option<u32>,
}

impl FamilyId {
    pub fn new(kind: Kind, sign: Option<Sign>, r: Option<u32>, n: Option<u32>) -> Result<Self> {
        let id = FamilyId { kind, sign, r, n };
        id.validate()?;
        Ok(id)
    }

    pub fn phi_r(r: u32) -> Self {
        FamilyId { kind: Kind::PhiR, sign: None, r: Some(r), n: None }
    }

    pub fn psi_r(r: u32) -> Self {
        FamilyId { kind: Kind::PsiR, sign: None, r: Some(r), n: None }
    }

    pub fn chi() -> Self {
        FamilyId { kind: Kind::Chi, sign: None, r: None, n: None }
    }

    /// Two-parameter families.
    pub fn rn(kind: Kind, sign: Sign, r: u32, n: u32) -> Self {
        FamilyId { kind, sign: Some(sign), r: Some(r), n: Some(n) }
    }

    /// `ChiA±(n)`, `ChiB±(n)`.
    pub fn chi_n(kind: Kind, sign: Sign, n: u32) -> Self {
        FamilyId { kind, sign: Some(sign), r: None, n: Some(n) }
    }

    pub fn validate(&self) -> Result<()> {
        let bad = |why: &str| Err(Error::MalformedFamily(format!("{}: {why}", self.kind.name())));
        if self.kind.signed() != self.sign.is_some() {
            return bad(if self.kind.signed() { "sign required" } else { "takes no sign" });
        }
        match (self.kind.takes_r(), self.r) {
            (true, None) => return bad("r required"),
            (false, Some(_)) => return bad("takes no r"),
            (true, Some(0)) => return bad("r must be positive"),
            _ => {}
        }
        match (self.kind.takes_n(), self.n) {
            (true, None) => return bad("n required"),
            (false, Some(_)) => return bad("takes no n"),
            (true, Some(0)) => return bad("n must be positive"),
            _ => {}
        }
        Ok(())
    }

    /// `r`, or 0 for families without it.
    pub fn r_or_zero(&self) -> u32 {
        self.r.unwrap_or(0)
    }

    pub fn n_or_zero(&self) -> u32 {
        self.n.unwrap_or(0)
    }

    /// Family name with sign, e.g. `PhiA+`.
    pub fn family_name(&self) -> String {
        match self.sign {
            Some(s) => format!("{}{}", self.kind.name(), s.symbol()),
            None => self.kind.name().to_string(),
        }
    }
}

impl fmt::Display for FamilyId {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "{}", self.family_name())?;
        match (self.r, self.n) {
            (Some(r), Some(n)) => write!(f, "({r},{n})"),
            (Some(r), None) => write!(f, "({r})"),
            (None, Some(n)) => write!(f, "({n})"),
            (None, None) => Ok(()),
        }
    }
}

/// Splits `PhiA+(3,4)` into kind, sign and the parenthesised numbers.
fn split_family_text(s: &str) -> Result<(Kind, Option<Sign>, Vec<u32>)> {
    let s = s.trim();
    let malformed = || Error::MalformedFamily(s.to_string());
    let (head, args) = match s.find('(') {
        Some(i) => {
            let inner = s[i + 1..].strip_suffix(')').ok_or_else(malformed)?;
            let nums = inner
                .split(',')
                .map(|t| t.trim().parse::<u32>().map_err(|_| malformed()))
                .collect::<Result<Vec<_>>>()?;
            (&s[..i], nums)
        }
        None => (s, Vec::new()),
    };
    let head = head.trim();
    let (name, sign) = if let Some(h) = head.strip_suffix('+') {
        (h, Some(Sign::Plus))
    } else if let Some(h) = head.strip_suffix('-').or_else(|| head.strip_suffix('−')) {
        (h, Some(Sign::Minus))
    } else {
        (head, None)
    };
    let kind = Kind::ALL
        .into_iter()
        .find(|k| k.name() == name)
        .ok_or_else(malformed)?;
    Ok((kind, sign, args))
}

impl FromStr for FamilyId {
    type Err = Error;

    fn from_str(s: &str) -> Result<Self> {
        let (kind, sign, args) = split_family_text(s)?;
        let malformed = || Error::MalformedFamily(s.trim().to_string());
        let (r, n) = match (kind.takes_r(), kind.takes_n(), args.as_slice()) {
            (true, true, [r, n]) => (Some(*r), Some(*n)),
            (true, false, [r]) => (Some(*r), None),
            (false, true, [n]) => (None, Some(*n)),
            (false, false, []) => (None, None),
            _ => return Err(malformed()),
        };
        FamilyId::new(kind, sign, r, n)
    }
}

/// A family with `n` left free, e.g. `PhiB-(20)` or `ChiA+`. For `PhiR` and
/// `PsiR` the free parameter is `r`.
#[derive(Clone, Copy, Debug, PartialEq, Eq, Hash)]
pub struct FamilySeries {
    pub kind: Kind,
    pub sign: Option<Sign>,
    pub r: Option<u32>,
}

impl FamilySeries {
    pub fn at(&self, n: u32) -> Result<FamilyId> {
        match self.kind {
            Kind::PhiR | Kind::PsiR => FamilyId::new(self.kind, None, Some(n), None),
            Kind::Chi => FamilyId::new(Kind::Chi, None, None, None),
            _ => FamilyId::new(self.kind, self.sign, self.r, Some(n)),
        }
    }
}

impl FromStr for FamilySeries {
    type Err = Error;

    fn from_str(s: &str) -> Result<Self> {
        let (kind, sign, args) = split_family_text(s)?;
        let malformed = || Error::MalformedFamily(s.trim().to_string());
        if kind.signed() != sign.is_some() {
            return Err(malformed());
        }
        let r = match (kind, args.as_slice()) {
            (Kind::PhiR | Kind::PsiR | Kind::Chi | Kind::ChiA | Kind::ChiB, []) => None,
            (Kind::PhiA | Kind::PhiB | Kind::PhiC | Kind::PsiA | Kind::PsiB, [r]) if *r > 0 => Some(*r),
            _ => return Err(malformed()),
        };
        Ok(FamilySeries { kind, sign, r })
    }
}

impl fmt::Display for FamilySeries {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "{}", self.kind.name())?;
        if let Some(s) = self.sign {
            write!(f, "{}", s.symbol())?;
        }
        if let Some(r) = self.r {
            write!(f, "({r})")?;
        }
        Ok(())
    }
}

fn x_pow(k: u32) -> IntPolynomial {
    IntPolynomial::monomial(1, k as usize)
}

/// `Φ_r(x) = x^{r+1} - 2x^r + x - 1`.
pub fn phi_limit(r: u32) -> IntPolynomial {
    &(&x_pow(r + 1) - &IntPolynomial::monomial(2, r as usize)) + &IntPolynomial::from_i64s(&[-1, 1])
}

/// `Ψ_r(x) = x^{r+1} - (x^r + ... + 1)`.
pub fn psi_limit(r: u32) -> IntPolynomial {
    &x_pow(r + 1) - &IntPolynomial::geometric(r as usize + 1)
}

/// `X(x) = x^4 - x^3 - 2x^2 + 1`.
pub fn chi_limit() -> IntPolynomial {
    IntPolynomial::from_i64s(&[1, 0, -2, -1, 1])
}

/// The family polynomial of `id`.
pub fn defining_poly(id: &FamilyId) -> Result<IntPolynomial> {
    id.validate()?;
    let r = id.r_or_zero();
    let n = id.n_or_zero();
    let p = IntPolynomial::from_i64s;
    let (base, tail) = match id.kind {
        Kind::PhiR => return Ok(phi_limit(r)),
        Kind::PsiR => return Ok(psi_limit(r)),
        Kind::Chi => return Ok(chi_limit()),
        Kind::PhiA => (phi_limit(r), &(&x_pow(r) - &x_pow(r - 1)) + &IntPolynomial::one()),
        Kind::PhiB => (phi_limit(r), &(&x_pow(r) - &x_pow(1)) + &IntPolynomial::one()),
        Kind::PhiC => (phi_limit(r), &IntPolynomial::x_pow_plus_one(r as usize) * &p(&[-1, 1])),
        Kind::PsiA => (psi_limit(r), IntPolynomial::x_pow_minus_one(r as usize + 1)),
        Kind::PsiB => (psi_limit(r), IntPolynomial::geometric(r as usize)),
        Kind::ChiA => (chi_limit(), p(&[-1, -1, 1, 1])),
        Kind::ChiB => (chi_limit(), p(&[1, 0, -1, 0, 1])),
    };
    let head = base.shift(n as usize);
    Ok(match id.sign {
        Some(Sign::Plus) => &head + &tail,
        _ => &head - &tail,
    })
}

/// Rewrites `id` into the parameter range the expansion tables cover:
/// `Φ_A^+(r,n) = Φ_A^+(n+1,r-1)` for `1 <= n <= r-2`, and
/// `Φ_C^+(r,n) = Φ_C^+(n,r)` for `n < r`.
pub fn normalize_family(id: &FamilyId) -> FamilyId {
    match (id.kind, id.sign, id.r, id.n) {
        (Kind::PhiA, Some(Sign::Plus), Some(r), Some(n)) if n >= 1 && n + 2 <= r => {
            FamilyId::rn(Kind::PhiA, Sign::Plus, n + 1, r - 1)
        }
        (Kind::PhiC, Some(Sign::Plus), Some(r), Some(n)) if n < r => FamilyId::rn(Kind::PhiC, Sign::Plus, n, r),
        _ => *id,
    }
}

/// Where the root of a family polynomial above 1 lies.
#[derive(Clone, Debug)]
pub enum RootLocation {
    /// A Pisot number in `(1, 2)`.
    Pisot(RealAlgebraic),
    /// The unique root above 1 is `>= 2`.
    NotInUnitToTwo,
    /// No root above 1, or the root is not a Pisot number.
    NoPisotRoot,
}

/// Isolates the root of `defining_poly(id)` above 1 and classifies it.
pub fn locate_pisot_root(id: &FamilyId) -> Result<RootLocation> {
    let f = defining_poly(id)?;
    let Some(beta) = isolate_root_above_1(&f)? else {
        return Ok(RootLocation::NoPisotRoot);
    };
    if !beta.in_open_unit_to_two() {
        return Ok(RootLocation::NotInUnitToTwo);
    }
    if !pisot_verify(&non_cyclotomic_core(&f))? {
        return Ok(RootLocation::NoPisotRoot);
    }
    Ok(RootLocation::Pisot(beta))
}

/// The Pisot root of `id` in `(1, 2)`, if any.
pub fn pisot_root_of(id: &FamilyId) -> Result<Option<RealAlgebraic>> {
    Ok(match locate_pisot_root(id)? {
        RootLocation::Pisot(beta) => Some(beta),
        _ => None,
    })
}


#[cfg(test)]
mod tests {
    use super::*;

    fn p(s: &str) -> IntPolynomial {
        s.parse().unwrap()
    }

    fn id(s: &str) -> FamilyId {
        s.parse().unwrap()
    }

    #[test]
    fn limit_polynomials() {
        assert_eq!(defining_poly(&id("PhiR(1)")).unwrap(), p("x^2-x-1"));
        assert_eq!(defining_poly(&id("PhiR(2)")).unwrap(), p("x^3-2x^2+x-1"));
        assert_eq!(defining_poly(&id("PsiR(2)")).unwrap(), p("x^3-x^2-x-1"));
        assert_eq!(defining_poly(&id("Chi")).unwrap(), p("x^4-x^3-2x^2+1"));
    }

    #[test]
    fn two_parameter_polynomials() {
        assert_eq!(defining_poly(&id("ChiA+(1)")).unwrap(), p("x^5-x^4-x^3+x^2-1"));
        assert_eq!(defining_poly(&id("PsiB+(1,1)")).unwrap(), p("x^3-x^2-x+1"));
        // Φ_1 x^2 - (x+1)(x-1) is X itself
        assert_eq!(defining_poly(&id("PhiC-(1,2)")).unwrap(), chi_limit());
        // Ψ_1 x - (x^2 - 1)
        assert_eq!(defining_poly(&id("PsiA-(1,1)")).unwrap(), p("x^3-2x^2-x+1"));
    }

    #[test]
    fn text_round_trip() {
        for s in ["PhiR(3)", "PsiR(1)", "Chi", "PhiA+(5,2)", "PsiB-(1,7)", "ChiB+(4)"] {
            assert_eq!(id(s).to_string(), s);
        }
        assert_eq!(id("PhiB−(2,5)"), FamilyId::rn(Kind::PhiB, Sign::Minus, 2, 5));
        for bad in ["PhiA(1,2)", "PhiR", "Chi(1)", "ChiA+(1,2)", "PhiA+(0,2)", "Foo", "PhiR(2"] {
            assert!(bad.parse::<FamilyId>().is_err(), "{bad}");
        }
    }

    #[test]
    fn series_text() {
        let s: FamilySeries = "PhiB-(20)".parse().unwrap();
        assert_eq!(s.at(7).unwrap(), id("PhiB-(20,7)"));
        let s: FamilySeries = "PsiR".parse().unwrap();
        assert_eq!(s.at(2).unwrap(), id("PsiR(2)"));
        let s: FamilySeries = "ChiA+".parse().unwrap();
        assert_eq!(s.at(3).unwrap(), id("ChiA+(3)"));
        assert!("PhiB-".parse::<FamilySeries>().is_err());
        assert!("PhiR(2)".parse::<FamilySeries>().is_err());
    }

    #[test]
    fn normalization() {
        assert_eq!(normalize_family(&id("PhiA+(5,2)")), id("PhiA+(3,4)"));
        assert_eq!(normalize_family(&id("PhiC+(3,2)")), id("PhiC+(2,3)"));
        assert_eq!(normalize_family(&id("PhiB-(2,5)")), id("PhiB-(2,5)"));
        assert_eq!(normalize_family(&id("PhiA+(3,2)")), id("PhiA+(3,2)"));
    }

    #[test]
    fn reindexing_identities() {
        for r in 1..=12 {
            for n in 1..=12 {
                let a = FamilyId::rn(Kind::PhiA, Sign::Plus, r, n);
                assert_eq!(defining_poly(&a).unwrap(), defining_poly(&normalize_family(&a)).unwrap());
                let c = FamilyId::rn(Kind::PhiC, Sign::Plus, r, n);
                let c2 = FamilyId::rn(Kind::PhiC, Sign::Plus, n, r);
                assert_eq!(defining_poly(&c).unwrap(), defining_poly(&c2).unwrap());
                let psi_a = defining_poly(&FamilyId::rn(Kind::PsiA, Sign::Plus, r, n)).unwrap();
                let phi_b = defining_poly(&FamilyId::rn(Kind::PhiB, Sign::Plus, n, r + 1)).unwrap();
                assert_eq!(&psi_a * &p("x-1"), phi_b);
                let b1 = defining_poly(&FamilyId::rn(Kind::PsiB, Sign::Plus, r, n)).unwrap();
                let b2 = defining_poly(&FamilyId::rn(Kind::PsiB, Sign::Plus, n, r)).unwrap();
                assert_eq!(b1, b2);
            }
        }
    }

    #[test]
    fn root_locations() {
        let tribonacci = pisot_root_of(&id("PsiR(2)")).unwrap().unwrap();
        assert_eq!(tribonacci.defpoly(), &p("x^3-x^2-x-1"));
        assert!(matches!(locate_pisot_root(&id("PhiA-(3,1)")).unwrap(), RootLocation::NotInUnitToTwo));
        assert!(matches!(locate_pisot_root(&id("PsiB+(1,1)")).unwrap(), RootLocation::NoPisotRoot));
        assert!(matches!(locate_pisot_root(&id("PhiB+(3,1)")).unwrap(), RootLocation::NoPisotRoot));
        let chi = pisot_root_of(&id("Chi")).unwrap().unwrap();
        assert!((chi.to_f64() - 1.9051661677540188).abs() < 1e-12);
    }
}
