//! The evaluation maps `π` (finite words) and `ρ` (infinite words).
//!
//! A finite word `a_k … a_0` over any digits evaluates to
//! `π(a_k … a_0) = Σ_i (a_i/q)·z^i`, the indices counted from the right; the
//! canonical representation of a natural number is the unique word over `A_p`
//! without a leading zero whose value is that number.
//!
//! A right-infinite word `a_1 a_2 …` evaluates to the convergent series
//! `ρ(a_1 a_2 …) = Σ_{i≥1} (a_i/q)·z^{−i}`. Only a prefix is ever in hand, so
//! [`real_enclosure`] brackets the limit: given bounds `dmin ≤ a_i ≤
//! dmax` for all unseen letters, the tail contributes between
//! `(dmin/q)·z^{−k}/(z−1)` and `(dmax/q)·z^{−k}/(z−1)` beyond the evaluated
//! prefix of length `k`.

use num::{BigInt, BigRational, Zero};

use crate::base::Base;
use crate::real::RealEnclosure;
use crate::words::{Digit, DigitWord, OmegaPrefix};
use crate::{Error, Result};

fn digit_over_q(b: &Base, d: Digit) -> BigRational {
    BigRational::new(BigInt::from(d), BigInt::from(b.q()))
}

/// `π(w) = Σ_i (a_i/q)·z^i`, the exact value of a finite word (Horner form,
/// most significant digit first). The empty word evaluates to 0.
///
/// ```
/// use ratbase::{Base, eval::eval_value, DigitWord};
/// use num::BigRational;
///
/// let b = Base::new(3, 2)?;
/// let two = eval_value(&b, &DigitWord::new(vec![2, 1]));
/// assert_eq!(two, BigRational::from_integer(2.into()));
/// # Ok::<(), ratbase::Error>(())
/// ```
pub fn eval_value(b: &Base, w: &DigitWord) -> BigRational {
    let z = b.z();
    let mut acc = BigRational::zero();
    for &d in w.digits() {
        acc = acc * &z + digit_over_q(b, d);
    }
    acc
}

/// `ρ(a_1 a_2 … a_k 0^ω) = Σ_{i=1..k} (a_i/q)·z^{−i}`, the exact value of the
/// evaluated prefix alone (equivalently, of the prefix extended by zeros).
pub fn eval_real_prefix(b: &Base, w: &OmegaPrefix) -> BigRational {
    let z = b.z();
    let mut acc = BigRational::zero();
    for &d in w.digits().iter().rev() {
        acc = (acc + digit_over_q(b, d)) / &z;
    }
    acc
}

/// `z^{−len}/(z−1)`: the factor by which a constant digit `d` beyond position
/// `len` contributes `(d/q)·tail_unit` to `ρ`.
pub fn tail_unit(b: &Base, len: usize) -> BigRational {
    let one_over_z_minus_1 =
        BigRational::new(BigInt::from(b.q()), BigInt::from(b.p() - b.q()));
    b.z_pow_neg(len) * one_over_z_minus_1
}

/// Sound enclosure of `ρ` for any infinite word starting with the prefix `w`
/// and continuing with digits in `[dmin, dmax]`.
///
/// The enclosure has width `((dmax−dmin)/q)·z^{−|w|}/(z−1)`, so it shrinks
/// geometrically with the prefix length.
///
/// # Errors
///
/// [`Error::DigitBoundsReversed`] if `dmin > dmax`.
///
/// ```
/// use ratbase::{Base, eval::real_enclosure, OmegaPrefix};
/// use num::BigRational;
///
/// // In base 7/3, tails over D_z = {2,…,6} confine every value to [1/2, 3/2].
/// let b = Base::new(7, 3)?;
/// let all = real_enclosure(&b, &OmegaPrefix::empty(), 2, 6)?;
/// assert_eq!(*all.lo(), BigRational::new(1.into(), 2.into()));
/// assert_eq!(*all.hi(), BigRational::new(3.into(), 2.into()));
/// # Ok::<(), ratbase::Error>(())
/// ```
pub fn real_enclosure(
    b: &Base,
    w: &OmegaPrefix,
    dmin: Digit,
    dmax: Digit,
) -> Result<RealEnclosure> {
    if dmin > dmax {
        return Err(Error::DigitBoundsReversed { dmin, dmax });
    }
    let head = eval_real_prefix(b, w);
    let unit = tail_unit(b, w.len());
    let lo = &head + digit_over_q(b, dmin) * &unit;
    let hi = &head + digit_over_q(b, dmax) * &unit;
    Ok(RealEnclosure::new(lo, hi))
}

#[cfg(test)]
mod tests {
    use super::*;

    fn r(n: i64, d: i64) -> BigRational {
        BigRational::new(n.into(), d.into())
    }

    #[test]
    fn finite_values_in_base_three_halves() {
        let b = Base::new(3, 2).unwrap();
        assert_eq!(eval_value(&b, &DigitWord::new(vec![2, 1])), r(2, 1));
        assert_eq!(eval_value(&b, &DigitWord::empty()), r(0, 1));
        assert_eq!(eval_value(&b, &DigitWord::new(vec![2, 1, 0])), r(3, 1));
        // Non-canonical words still evaluate: leading zeros change nothing.
        assert_eq!(eval_value(&b, &DigitWord::new(vec![0, 0, 2, 1])), r(2, 1));
    }

    #[test]
    fn prefix_values_in_base_three_halves() {
        let b = Base::new(3, 2).unwrap();
        assert_eq!(eval_real_prefix(&b, &OmegaPrefix::new(vec![1, 0])), r(1, 3));
        assert_eq!(eval_real_prefix(&b, &OmegaPrefix::new(vec![2])), r(2, 3));
        assert_eq!(eval_real_prefix(&b, &OmegaPrefix::empty()), r(0, 1));
        // ρ(2100^ω): the value of the node reached by "210", scaled back.
        assert_eq!(
            eval_real_prefix(&b, &OmegaPrefix::new(vec![2, 1, 0, 0])),
            r(8, 9)
        );
    }

    #[test]
    fn prefix_value_is_scaled_word_value() {
        // ρ(u·0^ω) = z^{−|u|}·π(u) for arbitrary digit blocks u.
        for (p, q) in [(3u64, 2u64), (7, 3), (4, 3)] {
            let b = Base::new(p, q).unwrap();
            let digits = vec![2, 0, 1, 2, 1];
            let word = DigitWord::new(digits.clone());
            let prefix = OmegaPrefix::new(digits);
            assert_eq!(
                eval_real_prefix(&b, &prefix),
                b.z_pow_neg(prefix.len()) * eval_value(&b, &word)
            );
        }
    }

    #[test]
    fn enclosure_examples() {
        let b = Base::new(3, 2).unwrap();
        let all = real_enclosure(&b, &OmegaPrefix::empty(), 0, 2).unwrap();
        assert_eq!((all.lo().clone(), all.hi().clone()), (r(0, 1), r(2, 1)));
        let point = real_enclosure(&b, &OmegaPrefix::empty(), 0, 0).unwrap();
        assert_eq!(point.width(), r(0, 1));

        let b73 = Base::new(7, 3).unwrap();
        let d = real_enclosure(&b73, &OmegaPrefix::empty(), 2, 6).unwrap();
        assert_eq!((d.lo().clone(), d.hi().clone()), (r(1, 2), r(3, 2)));
    }

    #[test]
    fn enclosure_width_law() {
        let b = Base::new(7, 3).unwrap();
        let w = OmegaPrefix::new(vec![3, 2, 5, 4]);
        let e = real_enclosure(&b, &w, 2, 6).unwrap();
        let expected = r(4, 3) * tail_unit(&b, 4);
        assert_eq!(e.width(), expected);
        // One more letter divides the width by exactly z.
        let longer = OmegaPrefix::new(vec![3, 2, 5, 4, 2]);
        let e2 = real_enclosure(&b, &longer, 2, 6).unwrap();
        assert_eq!(e2.width() * b.z(), e.width());
    }

    #[test]
    fn reversed_bounds_are_rejected() {
        let b = Base::new(3, 2).unwrap();
        assert_eq!(
            real_enclosure(&b, &OmegaPrefix::empty(), 2, 0),
            Err(Error::DigitBoundsReversed { dmin: 2, dmax: 0 })
        );
    }
}
