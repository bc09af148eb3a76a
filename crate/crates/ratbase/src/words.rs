//! Digit words: finite representations and prefixes of infinite words.
//!
//! Digits are signed machine integers ([`Digit`]): the difference alphabet
//! `D_z` of a base with `p < 2q − 1` contains negative letters, and digitwise
//! differences of words can momentarily leave every alphabet. Validation
//! against a concrete alphabet happens at the operations that require it, not
//! in the word types themselves.
//!
//! Two wrapper types keep the two reading conventions apart:
//!
//! - [`DigitWord`] — a finite word `a_k … a_0`, most significant digit first,
//!   evaluated by `π` ([`crate::eval::eval_value`]). The empty word
//!   represents 0.
//! - [`OmegaPrefix`] — the first `k` letters `a_1 … a_k` of a right-infinite
//!   word, evaluated by the series `ρ` ([`crate::eval::eval_real_prefix`]).
//!
//! Both serialize as plain JSON arrays of integers (the canonical form) and
//! print as compact strings: one character per digit when all digits are in
//! `0..=9`, comma-separated signed integers otherwise, and `ε` for the empty
//! word.

use std::cmp::Ordering;
use std::fmt;
use std::str::FromStr;

use num::{BigInt, BigRational};
use serde::{Deserialize, Serialize};

use crate::{Error, Result};

/// A single digit. Signed: difference words may use negative letters.
pub type Digit = i64;

/// Renders digits in the compact convention shared by both word types.
///
/// A singleton word whose digit lies outside `0..=9` keeps a trailing comma
/// (`[12]` → `"12,"`) so the comma form stays self-describing: any string
/// without a comma or sign is per-character.
fn format_digits(digits: &[Digit]) -> String {
    if digits.iter().all(|d| (0..=9).contains(d)) {
        digits
            .iter()
            .map(|d| char::from(b'0' + *d as u8))
            .collect()
    } else {
        let mut joined = digits
            .iter()
            .map(|d| d.to_string())
            .collect::<Vec<_>>()
            .join(",");
        if digits.len() == 1 {
            joined.push(',');
        }
        joined
    }
}

/// Parses the compact convention. See [`DigitWord::from_compact_str`] for the
/// accepted forms.
fn parse_digits(s: &str) -> Result<Vec<Digit>> {
    let err = |reason: &str| Error::WordParse {
        input: s.to_owned(),
        reason: reason.to_owned(),
    };
    let t = s.trim();
    if t.is_empty() || t == "ε" || t == "eps" {
        return Ok(Vec::new());
    }
    if t.contains(',') || t.contains('-') {
        let mut tokens: Vec<&str> = t.split(',').collect();
        if tokens.last() == Some(&"") {
            tokens.pop(); // singleton form "12," has a trailing separator
        }
        tokens
            .iter()
            .map(|tok| {
                tok.trim()
                    .parse::<Digit>()
                    .map_err(|_| err("expected comma-separated integers"))
            })
            .collect()
    } else if t.bytes().all(|b| b.is_ascii_digit()) {
        Ok(t.bytes().map(|b| Digit::from(b - b'0')).collect())
    } else {
        Err(err("expected digit characters or comma-separated integers"))
    }
}

fn zip_digits(left: &[Digit], right: &[Digit], sub: bool) -> Result<Vec<Digit>> {
    if left.len() != right.len() {
        return Err(Error::LengthMismatch {
            left: left.len(),
            right: right.len(),
        });
    }
    Ok(left
        .iter()
        .zip(right)
        .map(|(a, b)| if sub { a - b } else { a + b })
        .collect())
}

/// A finite digit word, most significant digit first.
///
/// The empty word is the representation of 0.
#[derive(Debug, Clone, Default, PartialEq, Eq, Hash, PartialOrd, Ord, Serialize, Deserialize)]
#[serde(transparent)]
pub struct DigitWord(Vec<Digit>);

impl DigitWord {
    /// Wraps a digit vector, most significant digit first.
    pub fn new(digits: Vec<Digit>) -> Self {
        DigitWord(digits)
    }

    /// The empty word (representation of 0).
    pub fn empty() -> Self {
        DigitWord(Vec::new())
    }

    /// The digits, most significant first.
    pub fn digits(&self) -> &[Digit] {
        &self.0
    }

    /// Number of digits.
    pub fn len(&self) -> usize {
        self.0.len()
    }

    /// Whether this is the empty word.
    pub fn is_empty(&self) -> bool {
        self.0.is_empty()
    }

    /// Digitwise sum of two equal-length words; no carries are propagated.
    pub fn digitwise_add(&self, other: &DigitWord) -> Result<DigitWord> {
        zip_digits(&self.0, &other.0, false).map(DigitWord)
    }

    /// Digitwise difference of two equal-length words; no borrows.
    pub fn digitwise_sub(&self, other: &DigitWord) -> Result<DigitWord> {
        zip_digits(&self.0, &other.0, true).map(DigitWord)
    }

    /// Compact string form: `""` for the empty word, one character per digit
    /// when every digit is in `0..=9`, comma-separated integers otherwise.
    pub fn to_compact_string(&self) -> String {
        format_digits(&self.0)
    }

    /// Parses the compact convention: `""`/`"ε"` for the empty word, a string
    /// of digit characters (`"212"` → `[2, 1, 2]`) when no separator or sign
    /// is present, comma-separated signed integers (`"10,-1,3"`) otherwise.
    /// A trailing comma marks a singleton (`"12,"` → `[12]`), matching how
    /// [`Self::to_compact_string`] renders it.
    pub fn from_compact_str(s: &str) -> Result<Self> {
        parse_digits(s).map(DigitWord)
    }
}

impl fmt::Display for DigitWord {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        if self.0.is_empty() {
            f.write_str("ε")
        } else {
            f.write_str(&format_digits(&self.0))
        }
    }
}

impl FromStr for DigitWord {
    type Err = Error;

    fn from_str(s: &str) -> Result<Self> {
        DigitWord::from_compact_str(s)
    }
}

impl From<Vec<Digit>> for DigitWord {
    fn from(digits: Vec<Digit>) -> Self {
        DigitWord(digits)
    }
}

/// The first `k` letters of a right-infinite word, in reading order.
#[derive(Debug, Clone, Default, PartialEq, Eq, Hash, Serialize, Deserialize)]
#[serde(transparent)]
pub struct OmegaPrefix(Vec<Digit>);

impl OmegaPrefix {
    /// Wraps the first letters of an infinite word, in reading order.
    pub fn new(digits: Vec<Digit>) -> Self {
        OmegaPrefix(digits)
    }

    /// The empty prefix.
    pub fn empty() -> Self {
        OmegaPrefix(Vec::new())
    }

    /// The known letters, in reading order.
    pub fn digits(&self) -> &[Digit] {
        &self.0
    }

    /// Number of known letters.
    pub fn len(&self) -> usize {
        self.0.len()
    }

    /// Whether no letters are known.
    pub fn is_empty(&self) -> bool {
        self.0.is_empty()
    }

    /// The first `k` letters (all of them if fewer are known).
    pub fn truncate(&self, k: usize) -> OmegaPrefix {
        OmegaPrefix(self.0[..self.0.len().min(k)].to_vec())
    }

    /// `head · tail`: the prefix starting with a finite word.
    pub fn concat(head: &DigitWord, tail: &OmegaPrefix) -> OmegaPrefix {
        let mut digits = Vec::with_capacity(head.len() + tail.len());
        digits.extend_from_slice(head.digits());
        digits.extend_from_slice(tail.digits());
        OmegaPrefix(digits)
    }

    /// Digitwise sum of two equal-length prefixes.
    pub fn digitwise_add(&self, other: &OmegaPrefix) -> Result<OmegaPrefix> {
        zip_digits(&self.0, &other.0, false).map(OmegaPrefix)
    }

    /// Digitwise difference of two equal-length prefixes.
    pub fn digitwise_sub(&self, other: &OmegaPrefix) -> Result<OmegaPrefix> {
        zip_digits(&self.0, &other.0, true).map(OmegaPrefix)
    }

    /// Compact string form; see [`DigitWord::to_compact_string`].
    pub fn to_compact_string(&self) -> String {
        format_digits(&self.0)
    }

    /// Parses the compact convention; see [`DigitWord::from_compact_str`].
    pub fn from_compact_str(s: &str) -> Result<Self> {
        parse_digits(s).map(OmegaPrefix)
    }
}

impl fmt::Display for OmegaPrefix {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        if self.0.is_empty() {
            f.write_str("ε")
        } else {
            f.write_str(&format_digits(&self.0))
        }
    }
}

impl FromStr for OmegaPrefix {
    type Err = Error;

    fn from_str(s: &str) -> Result<Self> {
        OmegaPrefix::from_compact_str(s)
    }
}

impl From<Vec<Digit>> for OmegaPrefix {
    fn from(digits: Vec<Digit>) -> Self {
        OmegaPrefix(digits)
    }
}

/// Lexicographic comparison of finite words; a proper prefix precedes its
/// extensions (`"21" < "210" < "212"`).
pub fn lex_compare(u: &DigitWord, v: &DigitWord) -> Ordering {
    u.digits().cmp(v.digits())
}

/// Radix (length-then-lexicographic) comparison of finite words: a shorter
/// word precedes every longer one, equal lengths compare digitwise.
///
/// On canonical representations this order mirrors the numeric order of the
/// represented values.
pub fn radix_compare(u: &DigitWord, v: &DigitWord) -> Ordering {
    u.len()
        .cmp(&v.len())
        .then_with(|| u.digits().cmp(v.digits()))
}

/// Outcome of comparing two infinite words through finite prefixes.
#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub enum PrefixOrder {
    /// The left word is lexicographically smaller; they differ within the
    /// compared letters.
    Less,
    /// The words agree on all letters available to both; the comparison of
    /// the underlying infinite words is not decided by these prefixes.
    Agree,
    /// The left word is lexicographically greater.
    Greater,
}

/// Compares two infinite words through their known prefixes: decides strictly
/// at the first differing letter, reports [`PrefixOrder::Agree`] when the
/// common part matches.
pub fn compare_prefixes(u: &OmegaPrefix, v: &OmegaPrefix) -> PrefixOrder {
    for (a, b) in u.digits().iter().zip(v.digits()) {
        match a.cmp(b) {
            Ordering::Less => return PrefixOrder::Less,
            Ordering::Greater => return PrefixOrder::Greater,
            Ordering::Equal => {}
        }
    }
    PrefixOrder::Agree
}

/// The Cantor distance `2^{−ℓ}` between two infinite words, as far as their
/// prefixes decide it; `ℓ` is the length of the longest common prefix.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct WordDistance {
    /// `2^{−agreement}`: the distance itself when [`decided`], otherwise an
    /// upper bound for it (the true distance may be anything from 0 up to
    /// this value, depending on the unseen letters).
    ///
    /// [`decided`]: WordDistance::decided
    pub value: BigRational,
    /// Number of leading letters on which the words agree.
    pub agreement: usize,
    /// Whether the words differ within the letters available to both, making
    /// [`value`](WordDistance::value) exact.
    pub decided: bool,
}

/// Measures the Cantor distance between two infinite words from their known
/// prefixes.
///
/// ```
/// use ratbase::words::{word_distance, OmegaPrefix};
/// use num::BigRational;
///
/// let d = word_distance(
///     &OmegaPrefix::new(vec![1, 0, 1]),
///     &OmegaPrefix::new(vec![1, 0, 0]),
/// );
/// assert_eq!(d.value, BigRational::new(1.into(), 4.into()));
/// assert!(d.decided);
///
/// // Equal prefixes only bound the distance from above.
/// let d = word_distance(&OmegaPrefix::new(vec![1, 1]), &OmegaPrefix::new(vec![1, 1]));
/// assert_eq!(d.value, BigRational::new(1.into(), 4.into()));
/// assert!(!d.decided);
/// ```
pub fn word_distance(u: &OmegaPrefix, v: &OmegaPrefix) -> WordDistance {
    let common = u.len().min(v.len());
    let mut agreement = common;
    let mut decided = false;
    for (i, (a, b)) in u.digits().iter().zip(v.digits()).enumerate() {
        if a != b {
            agreement = i;
            decided = true;
            break;
        }
    }
    let exp = u32::try_from(agreement).expect("prefix length fits in u32");
    use num::traits::Pow;
    let value = BigRational::new(BigInt::from(1), Pow::pow(&BigInt::from(2), exp));
    WordDistance {
        value,
        agreement,
        decided,
    }
}

#[cfg(test)]
mod tests {
    use super::*;

    fn w(s: &str) -> DigitWord {
        DigitWord::from_compact_str(s).unwrap()
    }

    #[test]
    fn radix_order_examples() {
        assert_eq!(radix_compare(&w("21"), &w("210")), Ordering::Less);
        assert_eq!(radix_compare(&w("210"), &w("212")), Ordering::Less);
        assert_eq!(radix_compare(&w("212"), &w("212")), Ordering::Equal);
        assert_eq!(radix_compare(&w("210"), &w("21")), Ordering::Greater);
    }

    #[test]
    fn lex_order_treats_prefix_as_smaller() {
        assert_eq!(lex_compare(&w("21"), &w("210")), Ordering::Less);
        assert_eq!(lex_compare(&w("210"), &w("212")), Ordering::Less);
        assert_eq!(lex_compare(&w("3"), &w("210")), Ordering::Greater);
    }

    #[test]
    fn prefix_comparison_decides_at_first_difference() {
        let u = OmegaPrefix::new(vec![1, 0, 1]);
        let v = OmegaPrefix::new(vec![1, 1]);
        assert_eq!(compare_prefixes(&u, &v), PrefixOrder::Less);
        assert_eq!(compare_prefixes(&v, &u), PrefixOrder::Greater);
        assert_eq!(
            compare_prefixes(&u, &OmegaPrefix::new(vec![1, 0])),
            PrefixOrder::Agree
        );
    }

    #[test]
    fn distance_examples() {
        let d = word_distance(
            &OmegaPrefix::new(vec![1]),
            &OmegaPrefix::new(vec![2]),
        );
        assert_eq!(d.value, BigRational::from_integer(1.into()));
        assert!(d.decided);
        assert_eq!(d.agreement, 0);
    }

    #[test]
    fn digitwise_ops_examples() {
        let a = w("122");
        let b = w("101");
        assert_eq!(a.digitwise_sub(&b).unwrap(), w("021"));
        assert_eq!(a.digitwise_sub(&a).unwrap(), w("000"));
        assert_eq!(w("21").digitwise_add(&w("01")).unwrap(), w("22"));
        assert_eq!(
            w("21").digitwise_add(&w("011")),
            Err(Error::LengthMismatch { left: 2, right: 3 })
        );
    }

    #[test]
    fn digitwise_sub_can_leave_every_alphabet() {
        let a = DigitWord::new(vec![0, 1]);
        let b = DigitWord::new(vec![2, 0]);
        assert_eq!(a.digitwise_sub(&b).unwrap(), DigitWord::new(vec![-2, 1]));
    }

    #[test]
    fn compact_strings_round_trip() {
        assert_eq!(w("212").digits(), &[2, 1, 2]);
        assert_eq!(w("").digits(), &[] as &[Digit]);
        assert_eq!(w("ε").digits(), &[] as &[Digit]);
        assert_eq!(
            DigitWord::from_compact_str("10,-1,3").unwrap().digits(),
            &[10, -1, 3]
        );
        assert_eq!(w("212").to_string(), "212");
        assert_eq!(DigitWord::empty().to_string(), "ε");
        assert_eq!(DigitWord::empty().to_compact_string(), "");
        assert_eq!(
            DigitWord::new(vec![10, -1, 3]).to_string(),
            "10,-1,3"
        );
        assert!(DigitWord::from_compact_str("2x1").is_err());
        assert!(DigitWord::from_compact_str("1,,2").is_err());
    }

    #[test]
    fn json_serialization_is_an_integer_array() {
        let word = DigitWord::new(vec![2, 1, 0]);
        let json = serde_json::to_string(&word).unwrap();
        assert_eq!(json, "[2,1,0]");
        let back: DigitWord = serde_json::from_str(&json).unwrap();
        assert_eq!(back, word);

        let prefix = OmegaPrefix::new(vec![-1, 3]);
        let json = serde_json::to_string(&prefix).unwrap();
        assert_eq!(json, "[-1,3]");
        let back: OmegaPrefix = serde_json::from_str(&json).unwrap();
        assert_eq!(back, prefix);
    }

    #[test]
    fn concat_and_truncate() {
        let head = w("21");
        let tail = OmegaPrefix::new(vec![0, 1, 1]);
        let joined = OmegaPrefix::concat(&head, &tail);
        assert_eq!(joined.digits(), &[2, 1, 0, 1, 1]);
        assert_eq!(joined.truncate(2).digits(), &[2, 1]);
        assert_eq!(joined.truncate(99).len(), 5);
    }
}
