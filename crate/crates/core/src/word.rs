//! Eventually periodic binary words `a_1 ⋯ a_k (a_{k+1} ⋯ a_n)^ω`.
//!
//! Text form: digits, then an optional period in parentheses followed by
//! `^w`, e.g. `11(10)^w`. Finite words have no parenthesised part.

use std::cmp::Ordering;
use std::fmt;
use std::str::FromStr;

use crate::error::{Error, Result};

#[derive(Clone, Debug, PartialEq, Eq, Hash)]
pub struct ExpansionWord {
    pre: Vec<u8>,
    per: Vec<u8>,
}

impl ExpansionWord {
    /// Digits must be 0 or 1 and a nonempty period must contain a 1. The
    /// result is not canonicalized.
    pub fn new(pre: Vec<u8>, per: Vec<u8>) -> Result<Self> {
        if pre.iter().chain(&per).any(|&d| d > 1) {
            return Err(Error::Precondition("digits must be 0 or 1".into()));
        }
        if !per.is_empty() && per.iter().all(|&d| d == 0) {
            return Err(Error::Precondition("period must contain a nonzero digit".into()));
        }
        Ok(ExpansionWord { pre, per })
    }

    pub fn finite(digits: Vec<u8>) -> Result<Self> {
        Self::new(digits, Vec::new())
    }

    /// Builds from digit strings such as `("11", "10")`.
    pub fn from_strs(pre: &str, per: &str) -> Result<Self> {
        Self::new(parse_digits(pre)?, parse_digits(per)?)
    }

    pub fn pre(&self) -> &[u8] {
        &self.pre
    }

    pub fn per(&self) -> &[u8] {
        &self.per
    }

    pub fn is_finite(&self) -> bool {
        self.per.is_empty()
    }

    /// Total number of explicit digits, `k + p`.
    pub fn len(&self) -> usize {
        self.pre.len() + self.per.len()
    }

    pub fn is_empty(&self) -> bool {
        self.len() == 0
    }

    /// Primitive period, minimal preperiod, trailing zeros of finite words removed.
    pub fn canonicalize(&self) -> Self {
        if self.per.is_empty() {
            let mut pre = self.pre.clone();
            while pre.last() == Some(&0) {
                pre.pop();
            }
            return ExpansionWord { pre, per: Vec::new() };
        }
        let per = primitive_root(&self.per);
        let mut pre = self.pre.clone();
        let mut per = per.to_vec();
        while let (Some(&a), Some(&b)) = (pre.last(), per.last()) {
            if a != b {
                break;
            }
            pre.pop();
            per.rotate_right(1);
        }
        ExpansionWord { pre, per }
    }

    pub fn is_canonical(&self) -> bool {
        *self == self.canonicalize()
    }

    /// `a_i` for `i >= 1`; finite words continue with zeros.
    pub fn digit_at(&self, i: usize) -> u8 {
        assert!(i >= 1, "digits are indexed from 1");
        let i = i - 1;
        if i < self.pre.len() {
            self.pre[i]
        } else if self.per.is_empty() {
            0
        } else {
            self.per[(i - self.pre.len()) % self.per.len()]
        }
    }

    /// The first `len` digits of the infinite sequence.
    pub fn digits(&self, len: usize) -> Vec<u8> {
        (1..=len).map(|i| self.digit_at(i)).collect()
    }

    /// Parry's criterion: every proper shift of the sequence is
    /// lexicographically strictly smaller than the sequence itself. Finite
    /// words are read as followed by `0^ω`.
    pub fn parry_valid(&self) -> bool {
        let w = self.canonicalize();
        if w.pre.is_empty() && w.per.is_empty() {
            return false;
        }
        // preperiod k and period p, with a finite word read as period "0"
        let k = w.pre.len();
        let p = w.per.len().max(1);
        let window = k + 2 * p;
        let seq = w.digits(window + k + p);
        // shift k + p repeats shift k, except that for k = 0 it is the word itself
        (1..=k + p).all(|j| seq[j..j + window] < seq[..window])
    }

    /// The hypotheses of the prefix lemma for `X = a_1 ⋯ a_{prefix_len}`:
    /// `X >= a_k ⋯ a_{i-1} 1` for `2 <= k <= i-1` and `X >= a_k ⋯ a_n` for
    /// `i <= k <= n`, where `i = prefix_len + 1`. Comparisons pad the shorter
    /// word with zeros. When they hold the word satisfies [`Self::parry_valid`].
    pub fn lemma_one_premise(&self, prefix_len: usize) -> Result<bool> {
        if !self.is_finite() {
            return Err(Error::Precondition("lemma premise needs a finite word".into()));
        }
        let a = &self.pre;
        let n = a.len();
        let i = prefix_len + 1;
        if prefix_len == 0 || i > n || a[i - 1] != 0 || !a[i..].contains(&1) {
            return Err(Error::Precondition(format!(
                "prefix length {prefix_len} must be followed by a 0 and a later 1"
            )));
        }
        let x = &a[..prefix_len];
        for k in 2..i {
            let mut tail = a[k - 1..i - 1].to_vec();
            tail.push(1);
            if lex_cmp_padded(x, &tail) == Ordering::Less {
                return Ok(false);
            }
        }
        for k in i..=n {
            if lex_cmp_padded(x, &a[k - 1..]) == Ordering::Less {
                return Ok(false);
            }
        }
        Ok(true)
    }

    /// Every prefix length at which the lemma premise can be evaluated.
    pub fn lemma_prefixes(&self) -> Vec<usize> {
        if !self.is_finite() {
            return Vec::new();
        }
        let a = &self.pre;
        let last_one = a.iter().rposition(|&d| d == 1);
        (1..a.len())
            .filter(|&m| a[m] == 0 && last_one.is_some_and(|l| l > m))
            .collect()
    }

    /// Finite reversibly greedy: the word is finite and
    /// `a_1 ⋯ a_k > a_{k-i} a_{k-i-1} ⋯ a_2` for `0 <= i <= k-2`, the shorter
    /// side padded with zeros.
    pub fn frg_check(&self) -> bool {
        let w = self.canonicalize();
        if !w.is_finite() {
            return false;
        }
        let a = &w.pre;
        let k = a.len();
        (0..k.saturating_sub(1)).all(|i| {
            // a_{k-i} down to a_2, as 0-based indices k-i-1 ..= 1
            let rev: Vec<u8> = (1..k - i).rev().map(|t| a[t]).collect();
            lex_cmp_padded(a, &rev) == Ordering::Greater
        })
    }
}

/// Lexicographic comparison after padding the shorter word with zeros.
pub fn lex_cmp_padded(a: &[u8], b: &[u8]) -> Ordering {
    let len = a.len().max(b.len());
    let get = |w: &[u8], i: usize| w.get(i).copied().unwrap_or(0);
    (0..len)
        .map(|i| get(a, i).cmp(&get(b, i)))
        .find(|o| o.is_ne())
        .unwrap_or(Ordering::Equal)
}

/// Shortest `u` with `w = u^m`.
fn primitive_root(w: &[u8]) -> &[u8] {
    let n = w.len();
    (1..=n)
        .filter(|p| n % p == 0)
        .find(|&p| (p..n).all(|i| w[i] == w[i - p]))
        .map(|p| &w[..p])
        .unwrap_or(w)
}

fn parse_digits(s: &str) -> Result<Vec<u8>> {
    s.chars()
        .map(|c| match c {
            '0' => Ok(0),
            '1' => Ok(1),
            _ => Err(Error::Parse(format!("unexpected character {c:?} in word"))),
        })
        .collect()
}

fn digits_to_string(d: &[u8]) -> String {
    d.iter().map(|&b| if b == 1 { '1' } else { '0' }).collect()
}

impl fmt::Display for ExpansionWord {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "{}", digits_to_string(&self.pre))?;
        if !self.per.is_empty() {
            write!(f, "({})^w", digits_to_string(&self.per))?;
        }
        Ok(())
    }
}

impl FromStr for ExpansionWord {
    type Err = Error;

    fn from_str(s: &str) -> Result<Self> {
        let s = s.trim();
        let word = match s.split_once('(') {
            None => Self::new(parse_digits(s)?, Vec::new())?,
            Some((pre, rest)) => {
                let per = rest
                    .strip_suffix(")^w")
                    .or_else(|| rest.strip_suffix(")^ω"))
                    .ok_or_else(|| Error::Parse(format!("period must end with ')^w' in {s:?}")))?;
                if per.is_empty() {
                    return Err(Error::Parse("empty period".into()));
                }
                Self::new(parse_digits(pre)?, parse_digits(per)?)?
            }
        };
        if word.is_empty() {
            return Err(Error::Parse("empty word".into()));
        }
        Ok(word)
    }
}
