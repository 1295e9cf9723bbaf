//! Closed-form expansion words, expected pseudo co-factors and the FRG
//! classification for every family instance.

use num_integer::Integer;

use crate::error::{Error, Result};
use crate::family::{normalize_family, FamilyId, Kind, Sign};
use crate::poly::IntPolynomial;
use crate::ratfunc::RationalFunction;
use crate::word::ExpansionWord;

#[derive(Clone, Copy, Debug, PartialEq, Eq, Hash)]
pub enum Status {
    Ok,
    NoRoot,
    RootNotIn12,
}

impl Status {
    pub fn as_str(self) -> &'static str {
        match self {
            Status::Ok => "OK",
            Status::NoRoot => "NO_ROOT",
            Status::RootNotIn12 => "ROOT_NOT_IN_1_2",
        }
    }
}

#[derive(Clone, Debug, PartialEq, Eq)]
pub struct CatalogEntry {
    /// The instance as requested (before normalization).
    pub id: FamilyId,
    pub word: Option<ExpansionWord>,
    pub expected_cofactor: Option<RationalFunction>,
    pub status: Status,
}

/// `s^e`; negative exponents mean a branch was selected outside its range.
fn rep(s: &str, e: i64) -> Result<String> {
    if e < 0 {
        return Err(Error::Internal(format!("negative exponent {e} for block {s:?}")));
    }
    Ok(s.repeat(e as usize))
}

fn ones(e: i64) -> Result<String> {
    rep("1", e)
}

fn zeros(e: i64) -> Result<String> {
    rep("0", e)
}

enum Raw {
    Word(String, String),
    Status(Status),
}

fn word(pre: String) -> Raw {
    Raw::Word(pre, String::new())
}

fn params(id: &FamilyId) -> (i64, i64) {
    (id.r_or_zero() as i64, id.n_or_zero() as i64)
}

fn raw_expansion(id: &FamilyId) -> Result<Raw> {
    let (r, n) = params(id);
    let u = |k: i64| -> Result<String> { rep(&(ones(r)? + &zeros(r)?), k) };
    let minus = id.sign == Some(Sign::Minus);
    Ok(match id.kind {
        Kind::PhiR => word(ones(r)? + &zeros(r - 1)? + "1"),
        Kind::PsiR => word(ones(r + 1)?),
        Kind::Chi => Raw::Word("11".into(), "10".into()),
        Kind::PhiA if minus => {
            if n <= r - 1 || (r, n) == (1, 1) {
                // PhiA-(1,1) = x (x - 2) (x + 1)
                Raw::Status(Status::RootNotIn12)
            } else if n <= 2 * r - 2 {
                word(ones(r)? + &zeros(n - r)? + "1" + &zeros(2 * r - n - 2)? + "1" + &zeros(n - r + 1)? + &ones(r - 1)?)
            } else if n == 2 * r - 1 {
                word(ones(r)? + &zeros(r - 2)? + "1" + &zeros(r)? + &ones(r - 1)?)
            } else {
                word(ones(r)? + &zeros(r - 1)? + "1" + &zeros(n - 2 * r)? + "1" + &zeros(r)? + &ones(r - 1)?)
            }
        }
        Kind::PhiA => {
            if r + n <= 3 {
                return Ok(Raw::Status(Status::NoRoot));
            }
            let (k, j) = n.div_rem(&(2 * r));
            if j == r - 1 {
                word(u(k)? + &ones(r - 1)?)
            } else if j <= r - 2 {
                word(
                    u(k)? + &ones(j)? + "0" + &ones(r - j - 2)? + "0" + &ones(j + 1)? + &zeros(r)? + &u(k - 1)?
                        + &ones(r - 1)?,
                )
            } else {
                word(u(k)? + &ones(r - 1)? + "0" + &ones(j - r)? + "0" + &u(k)? + &ones(r - 1)?)
            }
        }
        Kind::PhiB if minus => {
            if n <= r - 1 {
                return Ok(Raw::Status(Status::RootNotIn12));
            }
            if n == r {
                return Ok(word(ones(2 * r)? + &zeros(r - 1)? + "1"));
            }
            if n == r + 1 {
                return Ok(word(ones(r + 1)? + &zeros(r)? + "1"));
            }
            let m = n - r;
            let a = Integer::div_ceil(&r, &m) - 1;
            let k = a / 2;
            let z1 = zeros(m - 1)? + "1";
            let o0 = ones(m - 1)? + "0";
            let one_z = "1".to_string() + &zeros(m - 1)?;
            let mut x = String::new();
            for i in 1..=k {
                x += &rep(&z1, 2 * i - 1)?;
                x += &zeros(2 * r * i - (2 * i - 1) * n)?;
                x += &rep(&o0, 2 * i)?;
                x += &ones((2 * i + 1) * r - 2 * n * i)?;
            }
            let mut y = String::new();
            for i in 1..=k {
                let m2 = k + 1 - i;
                y += &rep(&z1, 2 * m2)?;
                y += &zeros(2 * m2 * r - (2 * m2 - 1) * n)?;
                y += &rep(&one_z, 2 * m2 - 1)?;
                y += &ones((2 * m2 - 1) * r - (2 * m2 - 2) * n)?;
            }
            let mut w = ones(r)? + &x + &rep(&z1, a)?;
            if a % 2 == 0 {
                w += &zeros((a + 1) * r - a * n - 1)?;
                w += "1";
                w += &zeros((a + 1) * n - (a + 2) * r)?;
                w += &ones((a + 1) * r - a * n - 1)?;
            } else {
                w += &zeros((a + 1) * r - a * n)?;
                w += &rep(&o0, a)?;
                w += &ones((a + 1) * r - a * n - 1)?;
                w += "0";
                w += &ones((a + 1) * n - (a + 2) * r)?;
                w += &zeros((a + 1) * r - a * n - 1)?;
                w += &rep(&one_z, a)?;
                w += &ones(a * r - (a - 1) * n)?;
            }
            word(w + &y + &zeros(r)? + "1")
        }
        Kind::PhiB => {
            if n == 1 {
                // x = 1 is the only root at or above 1
                return Ok(Raw::Status(Status::NoRoot));
            }
            let (k, j) = n.div_rem(&(2 * r));
            if j == 0 {
                return Ok(word(u(k)? + &zeros(r)? + &ones(r - 1)? + &zeros(r)? + &u(k - 1)? + "1"));
            }
            if j == 1 {
                return Ok(word(u(k)? + "1"));
            }
            let (a, b) = (r - 1).div_rem(&j);
            let mut x = String::new();
            for i in 0..=a {
                let block = rep(&(ones(j - 1)? + "0"), i)? + &ones(r - i * j)? + &rep(&(zeros(j - 1)? + "1"), i)?
                    + &zeros(r - i * j)?;
                x += &rep(&block, k)?;
            }
            let mut y = String::new();
            for i in 0..=a {
                let block = zeros(b + i * j)? + &rep(&("1".to_string() + &zeros(j - 1)?), a - i)? + &ones(1 + b + i * j)?
                    + &rep(&("0".to_string() + &ones(j - 1)?), a - i)?
                    + "0";
                y += &rep(&block, k)?;
            }
            word(x + &rep(&(ones(j - 1)? + "0"), a)? + &ones(b)? + "0" + &ones(j - b - 1)? + &y + &zeros(r - 1)? + "1")
        }
        Kind::PhiC if minus => {
            if n <= r {
                Raw::Status(Status::RootNotIn12)
            } else if n <= 2 * r - 1 {
                Raw::Word(ones(r)? + &zeros(n - r - 1)? + "1", zeros(2 * r - n)? + &ones(r)? + &zeros(n - r)?)
            } else if n == 2 * r && r == 1 {
                // PhiC-(1,2) is X itself
                Raw::Word("11".into(), "10".into())
            } else if n == 2 * r {
                Raw::Word(
                    ones(r)? + &zeros(r - 2)? + "1",
                    zeros(r + 1)? + &ones(r - 2)? + &zeros(r)? + "10" + &ones(r)? + &zeros(r - 1)?,
                )
            } else {
                Raw::Word(ones(r)? + &zeros(r - 1)? + "1", zeros(n - 2 * r)? + &ones(r)? + &zeros(r)?)
            }
        }
        Kind::PhiC => {
            let (k, j) = n.div_rem(&(2 * r));
            if j == 0 {
                word(u(k)? + &zeros(2 * r * k - 1)? + "1")
            } else if j <= r {
                word(u(k)? + &ones(j - 1)? + "0" + &ones(r - j)? + &zeros(r - 1)? + "1" + &zeros(n - 1)? + "1")
            } else {
                word(
                    u(k)? + &ones(r - 1)? + "0" + &ones(j - r)? + &rep(&(zeros(r)? + &ones(r)?), k)? + &zeros(j - 1)?
                        + "1"
                        + &zeros(2 * r * k + r - 1)?
                        + "1",
                )
            }
        }
        Kind::PsiA if minus => {
            if n <= r {
                Raw::Status(Status::RootNotIn12)
            } else {
                Raw::Word(ones(r + 1)?, zeros(n - r - 1)? + &ones(r)? + "0")
            }
        }
        Kind::PsiA => raw_expansion(&FamilyId::rn(Kind::PhiB, Sign::Plus, n as u32, r as u32 + 1))?,
        Kind::PsiB if minus => {
            if n <= r - 1 {
                Raw::Status(Status::RootNotIn12)
            } else {
                word(ones(r + 1)? + &zeros(n - r)? + &ones(r)?)
            }
        }
        Kind::PsiB => {
            if (r, n) == (1, 1) {
                // (x - 1)^2 (x + 1)
                return Ok(Raw::Status(Status::NoRoot));
            }
            let l = (r + 1).lcm(&(n + 1)) - 1;
            word((1..=l).map(|i| if i % (r + 1) == 0 || i % (n + 1) == 0 { '0' } else { '1' }).collect())
        }
        Kind::ChiA if minus => {
            if n <= 3 {
                return Ok(Raw::Status(Status::RootNotIn12));
            }
            let (k, odd) = n.div_rem(&2);
            if odd == 0 {
                Raw::Word(
                    "11".to_string() + &rep("10", k - 2)? + "11011",
                    rep("10", k - 2)? + "0111" + &rep("01", k - 2)? + "1000",
                )
            } else {
                Raw::Word("11".to_string() + &rep("10", k - 2)? + "11", "00011".to_string() + &rep("10", k - 2)? + "00")
            }
        }
        Kind::ChiA => {
            let (k, odd) = n.div_rem(&2);
            match n {
                1 => word("1001001".into()),
                2 => word("11".into()),
                4 => word(rep("110", 2)? + "10" + &rep("100", 2)? + "1011"),
                _ if odd == 1 => word(
                    "11".to_string() + &rep("10", k - 1)? + "01000" + &rep("10", k - 1)? + "0" + &rep("00", k)? + "11",
                ),
                _ => word(
                    "11".to_string() + &rep("10", k - 2)? + "0111000" + &rep("10", k - 3)? + "000010" + &rep("00", k - 2)?
                        + "11",
                ),
            }
        }
        Kind::ChiB if minus => {
            let (k, odd) = n.div_rem(&2);
            match n {
                ..=3 => Raw::Status(Status::RootNotIn12),
                4 => word(ones(6)? + &zeros(5)? + "1"),
                5 => word(ones(4)? + "00" + &ones(4)? + &zeros(5)? + "1"),
                _ if odd == 0 => word("11".to_string() + &rep("10", k - 3)? + "1100000" + &rep("10", k - 3)? + "001"),
                _ => Raw::Word(
                    "11".to_string() + &rep("10", k - 2)? + "1101000" + &rep("10", k - 3)? + "011",
                    "1".to_string() + &rep("00", k - 1)? + "10",
                ),
            }
        }
        Kind::ChiB => {
            let (k, odd) = n.div_rem(&2);
            match n {
                1 => word("10001".into()),
                2 => word("101000101".into()),
                4 => Raw::Word("110101".into(), "0".to_string() + &rep("1100", 2)? + "00100"),
                _ if odd == 1 => word("11".to_string() + &rep("10", k - 1)? + "001"),
                _ => Raw::Word(
                    "11".to_string() + &rep("10", k - 2)? + "0101",
                    "1".to_string() + &rep("10", k - 3)? + &rep("011", 2)? + &rep("10", k - 3)? + "01" + &zeros(4)? + "100",
                ),
            }
        }
    })
}

/// The closed-form expansion of `id` and its expected pseudo co-factor.
pub fn catalog_expansion(id: &FamilyId) -> Result<CatalogEntry> {
    id.validate()?;
    let norm = normalize_family(id);
    let (word, status) = match raw_expansion(&norm)? {
        Raw::Word(pre, per) => (Some(ExpansionWord::from_strs(&pre, &per)?), Status::Ok),
        Raw::Status(s) => (None, s),
    };
    let expected_cofactor = if status == Status::Ok { catalog_cofactor(id) } else { None };
    Ok(CatalogEntry { id: *id, word, expected_cofactor, status })
}

fn xm(k: i64) -> IntPolynomial {
    IntPolynomial::x_pow_minus_one(k as usize)
}

fn xp(k: i64) -> IntPolynomial {
    IntPolynomial::x_pow_plus_one(k as usize)
}

fn poly(s: &str) -> IntPolynomial {
    s.parse().expect("well-formed literal")
}

fn ratio(nums: &[IntPolynomial], dens: &[IntPolynomial]) -> Option<RationalFunction> {
    RationalFunction::from_factors(nums, dens).ok()
}

/// The closed-form pseudo co-factor stated for `id`, when there is one.
/// `ChiB+(4)` is excluded; see [`chib_plus_4_literal_cell`].
pub fn catalog_cofactor(id: &FamilyId) -> Option<RationalFunction> {
    let id = normalize_family(id);
    let (r, n) = params(&id);
    let x1 = xm(1);
    let one = IntPolynomial::one;
    let minus = id.sign == Some(Sign::Minus);
    match id.kind {
        Kind::PhiR => ratio(&[xm(r)], &[x1]),
        Kind::PsiR | Kind::Chi => ratio(&[one()], &[]),
        Kind::PhiA if minus => match n {
            _ if (r, n) == (1, 1) || n < r => None,
            _ if n == 2 * r - 1 => ratio(&[xm(2 * r - 1)], &[x1, xp(r)]),
            _ => ratio(&[xm(r)], &[x1]),
        },
        Kind::PhiA => {
            if r + n <= 3 {
                return None;
            }
            let (k, j) = n.div_rem(&(2 * r));
            if j == r - 1 {
                ratio(&[one()], &[x1, xp(r)])
            } else if j >= r || k >= 1 {
                ratio(&[xp(r * (2 * k + 1))], &[x1, xp(r)])
            } else {
                None
            }
        }
        Kind::PhiB if minus => {
            if n < r {
                return None;
            }
            if n == r {
                return ratio(&[xm(r)], &[x1]);
            }
            if n == r + 1 {
                return ratio(&[xm(r + 1)], &[x1, xp(r)]);
            }
            let a = Integer::div_ceil(&r, &(n - r)) - 1;
            let den = [x1, xp(r), xp(n)];
            if a % 2 == 0 {
                ratio(&[xp(n * (a + 1)), xm(r * (a + 2))], &den)
            } else {
                ratio(&[xm(n * (a + 1)), xp(r * (a + 2))], &den)
            }
        }
        Kind::PhiB => {
            if n == 1 {
                return None;
            }
            let (k, j) = n.div_rem(&(2 * r));
            match j {
                0 => ratio(&[xp(r * (2 * k + 1))], &[x1, xp(r)]),
                1 => ratio(&[one()], &[x1, xp(r)]),
                _ => {
                    let a = (r - 1) / j;
                    ratio(&[xm(n * (a + 1)), xp(r * (2 * (a + 1) * k + 1))], &[x1, xp(r), xm(n)])
                }
            }
        }
        Kind::PhiC if minus => match n {
            _ if n <= r => None,
            2 if r == 1 => ratio(&[one()], &[]),
            _ if n == 2 * r => ratio(&[xm(2 * r - 1), xp(3 * r)], &[x1, xp(r)]),
            _ => ratio(&[xm(r)], &[x1]),
        },
        Kind::PhiC => {
            let (k, j) = n.div_rem(&(2 * r));
            if j == 0 {
                ratio(&[xm(2 * r * k)], &[x1, xp(r)])
            } else if j <= r {
                ratio(&[xm(2 * r * (k + 1))], &[x1, xp(r)])
            } else {
                ratio(&[xm(r * (2 * k + 1)), xm(n)], &[x1, xp(r)])
            }
        }
        Kind::PsiA if minus => (n > r).then(|| RationalFunction::polynomial(one())),
        Kind::PsiA => None,
        Kind::PsiB if minus => (n >= r).then(|| RationalFunction::polynomial(one())),
        Kind::PsiB => {
            if (r, n) == (1, 1) {
                return None;
            }
            let l = (r + 1).lcm(&(n + 1)) - 1;
            ratio(&[xm(l + 1)], &[xm(n + 1), xm(r + 1)])
        }
        Kind::ChiA if minus => match n {
            ..=3 => None,
            _ if n % 2 == 0 => ratio(&[xm(n), xp(n + 1)], &[xm(2)]),
            _ => ratio(&[xm(n)], &[xm(2)]),
        },
        Kind::ChiA => match n {
            1 => ratio(&[xp(2)], &[]),
            2 => ratio(&[xp(2)], &[xp(6)]),
            4 => ratio(&[xm(11)], &[x1]),
            _ if n % 2 == 1 => ratio(&[xp(n), xm(n + 1)], &[xm(2)]),
            _ => ratio(&[xp(n - 1), xm(n + 2)], &[xm(2)]),
        },
        Kind::ChiB if minus => match n {
            ..=3 => None,
            4 => ratio(&[poly("x^4+x^2+1")], &[]),
            5 => ratio(&[poly("x^7+x^5+x^2+1")], &[]),
            _ if n % 2 == 0 => ratio(&[xm(n - 2)], &[xm(2)]),
            _ => {
                let num = &(&(&IntPolynomial::monomial(1, 2 * n as usize - 2) - &IntPolynomial::monomial(1, n as usize - 1))
                    - &IntPolynomial::monomial(1, n as usize - 3))
                    + &one();
                ratio(&[num], &[xm(2)])
            }
        },
        Kind::ChiB => match n {
            1 => ratio(&[poly("x^2-x+1")], &[xm(2)]),
            2 => ratio(&[xp(5)], &[xm(2)]),
            4 => None,
            _ if n % 2 == 1 => ratio(&[one()], &[xm(2)]),
            _ => {
                let head = &(&IntPolynomial::monomial(1, 4) * &xp(n - 1)) * &poly("x^2-x+1");
                let num = &head + &xm(2 * n + 4);
                ratio(&[num], &[xm(2)])
            }
        },
    }
}

/// A literal reading of the `ChiB+(4)` co-factor cell,
/// `(x^6 (x^5 + 2)(x^2 - x + 1) - x^5 - x^9) / (x - 1) + x^2 + 1`.
/// The cell mixes polynomial and rational terms, so it is only reported.
pub fn chib_plus_4_literal_cell() -> RationalFunction {
    let head = &(&IntPolynomial::monomial(1, 6) * &poly("x^5+2")) * &poly("x^2-x+1");
    let num = &(&head - &poly("x^9+x^5")) + &(&poly("x^2+1") * &xm(1));
    RationalFunction::new(num, xm(1)).expect("nonzero denominator")
}

#[derive(Clone, Copy, Debug, PartialEq, Eq, Hash)]
pub enum FrgClass {
    Frg,
    FiniteNotFrg,
    NotFinite,
    NoRoot,
}

impl FrgClass {
    pub fn as_str(self) -> &'static str {
        match self {
            FrgClass::Frg => "FRG",
            FrgClass::FiniteNotFrg => "FINITE_NOT_FRG",
            FrgClass::NotFinite => "NOT_FINITE",
            FrgClass::NoRoot => "NO_ROOT",
        }
    }
}

fn frg_if(b: bool) -> FrgClass {
    if b {
        FrgClass::Frg
    } else {
        FrgClass::FiniteNotFrg
    }
}

/// The FRG class the family classification assigns to `id`.
///
/// For `PhiB-(r, r+1)` with `r` even both the `n = r+1` bullet (FRG) and the
/// odd-`a` bullet apply; this returns the former, see [`frg_conflict`].
pub fn frg_expected(id: &FamilyId) -> Result<FrgClass> {
    if catalog_expansion(id)?.status != Status::Ok {
        return Ok(FrgClass::NoRoot);
    }
    let id = normalize_family(id);
    let (r, n) = params(&id);
    let minus = id.sign == Some(Sign::Minus);
    Ok(match id.kind {
        Kind::PhiR | Kind::PsiR | Kind::PsiB => FrgClass::Frg,
        Kind::PhiA if minus => FrgClass::Frg,
        Kind::PhiC if !minus => FrgClass::Frg,
        Kind::ChiA if !minus => FrgClass::Frg,
        Kind::PhiA => frg_if(n % (2 * r) <= r - 1),
        Kind::PhiB if minus => {
            if n <= r + 1 {
                FrgClass::Frg
            } else {
                frg_if((Integer::div_ceil(&r, &(n - r)) - 1) % 2 == 0)
            }
        }
        Kind::PhiB => frg_if(n % (2 * r) <= 1),
        // same number as PhiB+(n, r+1)
        Kind::PsiA if !minus => frg_if((r + 1) % (2 * n) <= 1),
        Kind::ChiB if minus => {
            if n == 5 || n % 2 == 0 {
                FrgClass::Frg
            } else {
                FrgClass::NotFinite
            }
        }
        Kind::ChiB => {
            if n == 2 || n % 2 == 1 {
                FrgClass::Frg
            } else {
                FrgClass::NotFinite
            }
        }
        _ => FrgClass::NotFinite,
    })
}

/// Describes the instances where two classification bullets disagree.
pub fn frg_conflict(id: &FamilyId) -> Option<String> {
    let (r, n) = params(id);
    (id.kind == Kind::PhiB && id.sign == Some(Sign::Minus) && n == r + 1 && r % 2 == 0).then(|| {
        format!("{id}: the n = r+1 bullet says FRG, the odd-a bullet (a = {}) says FINITE_NOT_FRG", r - 1)
    })
}

/// Instances whose true co-factor is expected to have a non-cyclotomic
/// (and non-reciprocal) factor.
pub fn boyd_noncyclotomic_expected(id: &FamilyId) -> bool {
    let n = id.n_or_zero();
    match (id.kind, id.sign) {
        (Kind::ChiB, Some(Sign::Minus)) => n >= 5 && n % 2 == 1,
        (Kind::ChiB, Some(Sign::Plus)) => n >= 4 && n % 2 == 0,
        _ => false,
    }
}
