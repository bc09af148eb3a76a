//! Exact interval enclosures and rational-to-decimal reporting.
//!
//! All limits of infinite series in this crate (values of infinite words,
//! logarithms, dimension bounds) are returned as [`RealEnclosure`] values:
//! closed intervals with exact `BigRational` endpoints that provably contain
//! the limit. Arithmetic on enclosures is outward-directed, so soundness is
//! preserved through every derived quantity, and all comparisons happen on
//! endpoints — no floating point is involved anywhere.
//!
//! [`decimal_string`] is the only bridge to decimal notation: it rounds an
//! exact rational to a requested number of significant digits at the
//! reporting boundary.

use std::fmt;

use num::traits::Pow;
use num::{BigInt, BigRational, Signed, Zero};

/// A closed interval `[lo, hi]` with exact rational endpoints, used as a
/// sound enclosure of a real number.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct RealEnclosure {
    lo: BigRational,
    hi: BigRational,
}

impl RealEnclosure {
    /// Builds the interval `[lo, hi]`.
    ///
    /// # Panics
    ///
    /// Panics if `lo > hi`; reversed endpoints are a programming error, not a
    /// runtime condition.
    pub fn new(lo: BigRational, hi: BigRational) -> Self {
        assert!(lo <= hi, "enclosure endpoints reversed: {lo} > {hi}");
        RealEnclosure { lo, hi }
    }

    /// The degenerate interval `[x, x]`.
    pub fn point(x: BigRational) -> Self {
        RealEnclosure {
            lo: x.clone(),
            hi: x,
        }
    }

    /// Lower endpoint.
    pub fn lo(&self) -> &BigRational {
        &self.lo
    }

    /// Upper endpoint.
    pub fn hi(&self) -> &BigRational {
        &self.hi
    }

    /// Interval width `hi − lo`.
    pub fn width(&self) -> BigRational {
        &self.hi - &self.lo
    }

    /// Exact midpoint `(lo + hi)/2`.
    pub fn midpoint(&self) -> BigRational {
        (&self.lo + &self.hi) / BigRational::from_integer(2.into())
    }

    /// Whether `x` lies in the interval.
    pub fn contains(&self, x: &BigRational) -> bool {
        &self.lo <= x && x <= &self.hi
    }

    /// Whether `other` lies entirely inside this interval.
    pub fn contains_enclosure(&self, other: &RealEnclosure) -> bool {
        self.lo <= other.lo && other.hi <= self.hi
    }

    /// Whether the two intervals share at least one point.
    pub fn intersects(&self, other: &RealEnclosure) -> bool {
        self.lo <= other.hi && other.lo <= self.hi
    }

    /// Whether this interval lies strictly to the left of `other`
    /// (`hi < other.lo`), certifying the order of the enclosed reals.
    pub fn strictly_left_of(&self, other: &RealEnclosure) -> bool {
        self.hi < other.lo
    }

    /// Interval sum `[lo + lo', hi + hi']`.
    pub fn add(&self, other: &RealEnclosure) -> RealEnclosure {
        RealEnclosure {
            lo: &self.lo + &other.lo,
            hi: &self.hi + &other.hi,
        }
    }

    /// Interval difference `[lo − hi', hi − lo']`.
    pub fn sub(&self, other: &RealEnclosure) -> RealEnclosure {
        RealEnclosure {
            lo: &self.lo - &other.hi,
            hi: &self.hi - &other.lo,
        }
    }

    /// Mirror image `[−hi, −lo]`.
    pub fn neg(&self) -> RealEnclosure {
        RealEnclosure {
            lo: -self.hi.clone(),
            hi: -self.lo.clone(),
        }
    }

    /// Translation by an exact rational.
    pub fn translate(&self, offset: &BigRational) -> RealEnclosure {
        RealEnclosure {
            lo: &self.lo + offset,
            hi: &self.hi + offset,
        }
    }

    /// Scaling by a non-negative exact rational.
    ///
    /// # Panics
    ///
    /// Panics on a negative factor (which would swap the endpoints).
    pub fn scale_nonneg(&self, factor: &BigRational) -> RealEnclosure {
        assert!(
            !factor.is_negative(),
            "scale_nonneg requires a non-negative factor, got {factor}"
        );
        RealEnclosure {
            lo: &self.lo * factor,
            hi: &self.hi * factor,
        }
    }

    /// Interval quotient by a strictly positive interval, or `None` when the
    /// divisor's enclosure touches zero and the quotient is unbounded.
    pub fn div_pos(&self, den: &RealEnclosure) -> Option<RealEnclosure> {
        if den.lo <= BigRational::zero() {
            return None;
        }
        let lo = if self.lo.is_negative() {
            &self.lo / &den.lo
        } else {
            &self.lo / &den.hi
        };
        let hi = if self.hi.is_negative() {
            &self.hi / &den.hi
        } else {
            &self.hi / &den.lo
        };
        Some(RealEnclosure { lo, hi })
    }
}

impl fmt::Display for RealEnclosure {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(
            f,
            "[{}, {}]",
            fraction_string(&self.lo),
            fraction_string(&self.hi)
        )
    }
}

/// Formats an exact rational as `numerator/denominator`, always including the
/// denominator (`"4/1"` for the integer 4) so consumers can parse uniformly.
pub fn fraction_string(x: &BigRational) -> String {
    format!("{}/{}", x.numer(), x.denom())
}

/// `10^e` as an exact rational, for any sign of `e`.
fn pow10(e: i64) -> BigRational {
    let mag = Pow::pow(&BigInt::from(10), e.unsigned_abs() as u32);
    if e >= 0 {
        BigRational::from_integer(mag)
    } else {
        BigRational::new(BigInt::from(1), mag)
    }
}

/// Rounds an exact rational to `sig_digits` significant decimal digits
/// (half away from zero) and renders it in plain positional notation,
/// trimming trailing fractional zeros.
///
/// This is the crate's only conversion from exact values to decimal strings;
/// it never passes through floating point.
///
/// ```
/// use ratbase::real::decimal_string;
/// use num::BigRational;
///
/// let x = BigRational::new(8.into(), 9.into());
/// assert_eq!(decimal_string(&x, 12), "0.888888888889");
/// assert_eq!(decimal_string(&BigRational::from_integer(2.into()), 12), "2");
/// ```
pub fn decimal_string(x: &BigRational, sig_digits: usize) -> String {
    let sig = sig_digits.max(1);
    if x.is_zero() {
        return "0".to_owned();
    }
    let negative = x.is_negative();
    let a = x.abs();

    // Decimal exponent: the unique e with 10^e ≤ a < 10^{e+1}. Start from the
    // digit-length difference of numerator and denominator (correct within 1)
    // and adjust by comparison.
    let mut e = a.numer().to_string().len() as i64 - a.denom().to_string().len() as i64;
    while a < pow10(e) {
        e -= 1;
    }
    while a >= pow10(e + 1) {
        e += 1;
    }

    // m = round(a · 10^{sig−1−e}), an integer with exactly `sig` digits
    // unless rounding carries into the next power of ten.
    let scaled = &a * pow10(sig as i64 - 1 - e);
    let (num, den) = (scaled.numer(), scaled.denom());
    let mut m: BigInt = (num * 2 + den) / (den * 2);
    let cap = Pow::pow(&BigInt::from(10), sig as u32);
    if m == cap {
        m /= 10;
        e += 1;
    }
    let digits = m.to_string();
    debug_assert_eq!(digits.len(), sig);

    let body = if e >= sig as i64 - 1 {
        // Integer, possibly zero-padded on the right.
        let pad = (e + 1 - sig as i64) as usize;
        format!("{digits}{}", "0".repeat(pad))
    } else if e >= 0 {
        let split = (e + 1) as usize;
        let (int_part, frac_part) = digits.split_at(split);
        let frac = frac_part.trim_end_matches('0');
        if frac.is_empty() {
            int_part.to_owned()
        } else {
            format!("{int_part}.{frac}")
        }
    } else {
        let zeros = (-e - 1) as usize;
        let frac = format!("{}{}", "0".repeat(zeros), digits);
        let frac = frac.trim_end_matches('0');
        format!("0.{frac}")
    };

    if negative {
        format!("-{body}")
    } else {
        body
    }
}
