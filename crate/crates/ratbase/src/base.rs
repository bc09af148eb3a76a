//! Validated rational bases `z = p/q` and their digit alphabets.
//!
//! A base is a pair of coprime integers `p > q > 1`. Four alphabets matter:
//!
//! - `A_p = {0, …, p−1}` — all digits of the numeration;
//! - `B_q = {0, …, q−1}` — the lower alphabet: digits of lexicographically
//!   least infinite branches;
//! - `C_z = {p−q, …, p−1}` — the upper alphabet: digits of lexicographically
//!   greatest infinite branches;
//! - `D_z = {p−2q+1, …, p−1}` — the difference alphabet `C_z ⊖ B_q`, the
//!   `2q−1` consecutive integers centred on `p−q`, which labels the span
//!   automaton. For `p < 2q−1` it contains negative digits; for `p > 2q−1`
//!   it is a strict sub-alphabet of `A_p`.
//!
//! The comparison `p` vs `2q−1` splits all bases into two regimes: when
//! `p ≤ 2q−1` the values of infinite words below a node fill a full interval
//! (“interval regime”); when `p > 2q−1` they form a Cantor-like set of zero
//! measure (“sparse regime”). [`Base::is_sparse`] exposes the distinction.

use std::fmt;
use std::str::FromStr;

use num::{BigInt, BigRational};

use crate::{Digit, Error, Result};

/// Largest accepted value for either base parameter.
///
/// Keeping `p, q ≤ 2^32` lets digit arithmetic use machine integers without
/// overflow; node values and all real arithmetic are arbitrary precision
/// regardless.
pub const MAX_BASE_PARAM: u64 = 1 << 32;

/// A validated rational base `z = p/q` with `p > q > 1` coprime.
#[derive(Debug, Clone, Copy, PartialEq, Eq, Hash, PartialOrd, Ord)]
pub struct Base {
    p: u64,
    q: u64,
}

impl Base {
    /// Builds a base from its numerator and denominator.
    ///
    /// # Errors
    ///
    /// Rejects parameters with `q ≤ 1` or `p ≤ q` ([`Error::BaseOrder`]),
    /// parameters above [`MAX_BASE_PARAM`] ([`Error::BaseTooLarge`]) and
    /// non-coprime pairs ([`Error::BaseNotCoprime`]).
    ///
    /// ```
    /// use ratbase::Base;
    /// let b = Base::new(3, 2)?;
    /// assert_eq!((b.p(), b.q()), (3, 2));
    /// assert!(Base::new(6, 4).is_err());   // gcd 2
    /// assert!(Base::new(2, 3).is_err());   // not > 1
    /// # Ok::<(), ratbase::Error>(())
    /// ```
    pub fn new(p: u64, q: u64) -> Result<Self> {
        if q <= 1 || p <= q {
            return Err(Error::BaseOrder { p, q });
        }
        if p > MAX_BASE_PARAM || q > MAX_BASE_PARAM {
            return Err(Error::BaseTooLarge {
                p,
                q,
                max: MAX_BASE_PARAM,
            });
        }
        if num::integer::gcd(p, q) != 1 {
            return Err(Error::BaseNotCoprime { p, q });
        }
        Ok(Base { p, q })
    }

    /// Numerator `p`.
    pub fn p(&self) -> u64 {
        self.p
    }

    /// Denominator `q`.
    pub fn q(&self) -> u64 {
        self.q
    }

    /// The base value `z = p/q` as an exact rational.
    pub fn z(&self) -> BigRational {
        BigRational::new(BigInt::from(self.p), BigInt::from(self.q))
    }

    /// `z^{−k} = q^k / p^k` as an exact rational.
    pub fn z_pow_neg(&self, k: usize) -> BigRational {
        let k = u32::try_from(k).expect("enclosure depth fits in u32");
        use num::traits::Pow;
        BigRational::new(
            Pow::pow(&BigInt::from(self.q), k),
            Pow::pow(&BigInt::from(self.p), k),
        )
    }

    /// `⌊z⌋`, the integer part of the base.
    pub fn floor_z(&self) -> u64 {
        self.p / self.q
    }

    /// `⌈z⌉`. Since `q ∤ p`, this is always `⌊z⌋ + 1`.
    pub fn ceil_z(&self) -> u64 {
        self.p / self.q + 1
    }

    /// Whether the base is in the sparse (Cantor-like) regime `p > 2q − 1`.
    ///
    /// In that regime the difference alphabet `D_z` is a strict sub-alphabet
    /// of `A_p`, the span automaton has out-degree at most 2, and the set of
    /// values below a node has zero Lebesgue measure. Otherwise (`p ≤ 2q−1`)
    /// those values fill a whole interval.
    pub fn is_sparse(&self) -> bool {
        self.p > 2 * self.q - 1
    }

    /// The middle point `p − q` of the difference alphabet, i.e. the digit
    /// difference produced when top and bottom branches advance in lockstep.
    pub fn middle_digit(&self) -> Digit {
        (self.p - self.q) as Digit
    }

    /// The full digit alphabet `A_p = {0, …, p−1}`.
    pub fn full_alphabet(&self) -> DigitRange {
        DigitRange::new(0, (self.p - 1) as Digit)
    }

    /// The lower alphabet `B_q = {0, …, q−1}` of bottom words.
    pub fn lower_alphabet(&self) -> DigitRange {
        DigitRange::new(0, (self.q - 1) as Digit)
    }

    /// The upper alphabet `C_z = {p−q, …, p−1}` of top words.
    pub fn upper_alphabet(&self) -> DigitRange {
        DigitRange::new((self.p - self.q) as Digit, (self.p - 1) as Digit)
    }

    /// The difference alphabet `D_z = {p−2q+1, …, p−1}` labelling the span
    /// automaton: `2q − 1` consecutive integers centred on `p − q`.
    pub fn difference_alphabet(&self) -> DigitRange {
        let lo = self.p as i64 - 2 * self.q as i64 + 1;
        DigitRange::new(lo, (self.p - 1) as Digit)
    }

    /// Checks that `digit` lies in the named alphabet, for error reporting.
    pub(crate) fn require_digit(
        &self,
        digit: Digit,
        range: DigitRange,
        alphabet: &'static str,
    ) -> Result<()> {
        if range.contains(digit) {
            Ok(())
        } else {
            Err(Error::DigitOutOfRange {
                digit,
                alphabet,
                lo: range.lo(),
                hi: range.hi(),
            })
        }
    }
}

impl fmt::Display for Base {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "{}/{}", self.p, self.q)
    }
}

impl FromStr for Base {
    type Err = Error;

    /// Parses `"p/q"`, e.g. `"7/3"`.
    fn from_str(s: &str) -> Result<Self> {
        let bad = || Error::BaseParse {
            input: s.to_owned(),
        };
        let (ps, qs) = s.split_once('/').ok_or_else(bad)?;
        let p: u64 = ps.trim().parse().map_err(|_| bad())?;
        let q: u64 = qs.trim().parse().map_err(|_| bad())?;
        Base::new(p, q)
    }
}

/// An inclusive, contiguous range of digits, e.g. an alphabet `{lo, …, hi}`.
#[derive(Debug, Clone, Copy, PartialEq, Eq, Hash)]
pub struct DigitRange {
    lo: Digit,
    hi: Digit,
}

impl DigitRange {
    /// Builds the range `{lo, …, hi}`; requires `lo ≤ hi`.
    pub fn new(lo: Digit, hi: Digit) -> Self {
        assert!(lo <= hi, "digit range reversed: {lo} > {hi}");
        DigitRange { lo, hi }
    }

    /// Smallest digit of the range.
    pub fn lo(&self) -> Digit {
        self.lo
    }

    /// Largest digit of the range.
    pub fn hi(&self) -> Digit {
        self.hi
    }

    /// Number of digits in the range.
    pub fn len(&self) -> u64 {
        (self.hi - self.lo) as u64 + 1
    }

    /// A contiguous digit range is never empty.
    pub fn is_empty(&self) -> bool {
        false
    }

    /// Whether `d` lies in the range.
    pub fn contains(&self, d: Digit) -> bool {
        self.lo <= d && d <= self.hi
    }

    /// Whether every digit of `other` lies in this range.
    pub fn contains_range(&self, other: DigitRange) -> bool {
        self.lo <= other.lo && other.hi <= self.hi
    }

    /// Iterates over the digits in ascending order.
    pub fn iter(&self) -> impl Iterator<Item = Digit> {
        self.lo..=self.hi
    }
}

impl fmt::Display for DigitRange {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "{{{}, …, {}}}", self.lo, self.hi)
    }
}
