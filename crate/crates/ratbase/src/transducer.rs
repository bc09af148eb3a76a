//! The online successor transducer on bottom words.
//!
//! Bottom words are labelled over the lower alphabet `B_q`. The successor
//! transducer reads the bottom word of `n` and writes, letter for letter and
//! without lookahead, the bottom word of `n + i + 1`, where `i` is the state
//! it was started in. Its states are again the natural numbers, and one step
//! from state `n` on input letter `x` produces the unique pair `(y, m)` of an
//! output letter `y ∈ B_q` and next state `m` satisfying
//!
//! ```text
//! q·m = p·n + (y − x) + (p − q).
//! ```
//!
//! Exactly one `y ∈ B_q` makes the right side divisible by `q`, so the step —
//! and likewise its inverse, recovering the input from the output — is
//! computed by one Euclidean division ([`transduce`], [`transduce_inverse`]);
//! both directions are total and the machine is locally bijective.
//!
//! Equivalently, the machine can be presented over pair letters: each
//! difference letter `d ∈ D_z` stands for the set
//! `ψ(d) = {(x, y) ∈ B_q × B_q : y − x = μ(d)}` of input/output pairs, the
//! sets are pairwise disjoint and cover `B_q × B_q`, and a pair `(x, y)`
//! moves state `n` along the span-automaton transition `τ(n, d)`
//! ([`psi`], [`delta`]). The closed-form step and the `ψ`-presentation are
//! independent routes to the same machine, which the test suites exploit.

use std::fmt;

use num::{BigUint, ToPrimitive, Zero};

use crate::base::Base;
use crate::tree;
use crate::words::{Digit, OmegaPrefix};
use crate::{NodeId, Result};

/// An input/output pair of lower-alphabet letters, one cell of the
/// transducer's pair presentation.
#[derive(Debug, Clone, Copy, PartialEq, Eq, Hash, PartialOrd, Ord)]
pub struct PairLetter {
    input: Digit,
    output: Digit,
}

impl PairLetter {
    /// Builds a pair letter, validating both components against `B_q`.
    pub fn new(b: &Base, input: Digit, output: Digit) -> Result<Self> {
        let lower = b.lower_alphabet();
        b.require_digit(input, lower, "B_q")?;
        b.require_digit(output, lower, "B_q")?;
        Ok(PairLetter { input, output })
    }

    /// The letter read.
    pub fn input(&self) -> Digit {
        self.input
    }

    /// The letter written.
    pub fn output(&self) -> Digit {
        self.output
    }
}

impl fmt::Display for PairLetter {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "({},{})", self.input, self.output)
    }
}

/// The pair letters standing for the difference letter `d`:
/// `ψ(d) = {(x, y) ∈ B_q × B_q : y − x = μ(d)}`, in ascending input order.
///
/// Over all `d ∈ D_z` the sets are pairwise disjoint and cover `B_q × B_q`.
///
/// # Errors
///
/// [`Error::DigitOutOfRange`](crate::Error::DigitOutOfRange) for `d ∉ D_z`.
pub fn psi(b: &Base, d: Digit) -> Result<Vec<PairLetter>> {
    b.require_digit(d, b.difference_alphabet(), "D_z")?;
    let delta = d - b.middle_digit(); // μ(d) ∈ [−(q−1), q−1]
    let q = b.q() as Digit;
    let x_lo = 0.max(-delta);
    let x_hi = (q - 1).min(q - 1 - delta);
    Ok((x_lo..=x_hi)
        .map(|x| PairLetter {
            input: x,
            output: x + delta,
        })
        .collect())
}

/// One row of the pair-presentation table: a difference letter, its shift
/// `μ(d)`, and the pair letters realizing it.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct PsiRow {
    /// The difference letter `d ∈ D_z`.
    pub letter: Digit,
    /// The output-minus-input shift `μ(d) = d − (p − q)`.
    pub shift: Digit,
    /// The pairs `ψ(d)`, ascending in the input letter.
    pub pairs: Vec<PairLetter>,
}

/// The full pair-presentation table, one row per letter of `D_z`, ascending.
pub fn psi_table(b: &Base) -> Vec<PsiRow> {
    b.difference_alphabet()
        .iter()
        .map(|d| PsiRow {
            letter: d,
            shift: d - b.middle_digit(),
            pairs: psi(b, d).expect("letters come from D_z"),
        })
        .collect()
}

/// The transducer's transition on a pair letter: state `n` moves along the
/// span-automaton edge for the difference letter of the pair,
/// `δ(n, (x, y)) = τ(n, (y − x) + (p − q))`; `None` where that edge is
/// missing.
pub fn delta(b: &Base, n: &NodeId, pair: &PairLetter) -> Option<NodeId> {
    tree::tau(b, n, pair.output - pair.input + b.middle_digit())
}

/// One closed-form step from state `n` on input letter `x ∈ B_q`: the unique
/// `(y, m)` with `q·m = p·n + (y − x) + (p − q)`.
pub(crate) fn step(b: &Base, n: &NodeId, x: Digit) -> (Digit, NodeId) {
    let (p, q) = (b.p(), b.q());
    if n.is_zero() {
        // p − q − x may be negative here (only here): stay in machine words.
        let t = (p - q) as i64 - x;
        let y = (-t).rem_euclid(q as i64);
        let m = (t + y) / q as i64;
        debug_assert!(m >= 0);
        return (y, BigUint::from(m as u64));
    }
    // n ≥ 1 ⟹ p·n + (p − q) > x, so the subtraction stays non-negative.
    let t = n * p + BigUint::from(p - q) - BigUint::from(x as u64);
    let r = (&t % q).to_u64().expect("residue fits u64");
    let y = ((q - r) % q) as Digit;
    let m = (t + y as u64) / q;
    (y, m)
}

/// The inverse step from state `n` on *output* letter `y ∈ B_q`: recovers the
/// input letter and next state, `q·m = p·n + (y − x) + (p − q)` solved for
/// `x` this time.
fn step_inverse(b: &Base, n: &NodeId, y: Digit) -> (Digit, NodeId) {
    let (p, q) = (b.p(), b.q());
    let s = n * p + BigUint::from(p - q + y as u64);
    let x = (&s % q).to_u64().expect("residue fits u64") as Digit;
    (x, s / q)
}

/// Runs the transducer from state `initial` over `input`, returning the
/// equally long output prefix.
///
/// Started in state `i` on the bottom word of `n`, it writes the bottom word
/// of `n + i + 1`; in particular state 0 realizes the successor map on
/// bottom words.
///
/// # Errors
///
/// [`Error::DigitOutOfRange`](crate::Error::DigitOutOfRange) for input
/// letters outside `B_q`.
///
/// ```
/// use ratbase::{Base, transducer::transduce, OmegaPrefix};
/// use num::BigUint;
///
/// let b = Base::new(3, 2)?;
/// // Bottom word of 1 ↦ bottom word of 2, letter by letter.
/// let input: OmegaPrefix = "1011000".parse()?;
/// let output = transduce(&b, &BigUint::ZERO, &input)?;
/// assert_eq!(output.to_string(), "0110001");
/// # Ok::<(), ratbase::Error>(())
/// ```
pub fn transduce(b: &Base, initial: &NodeId, input: &OmegaPrefix) -> Result<OmegaPrefix> {
    let lower = b.lower_alphabet();
    let mut state = initial.clone();
    let mut out = Vec::with_capacity(input.len());
    for &x in input.digits() {
        b.require_digit(x, lower, "B_q")?;
        let (y, next) = step(b, &state, x);
        out.push(y);
        state = next;
    }
    Ok(OmegaPrefix::new(out))
}

/// Runs the transducer backwards from state `initial`: reconstructs the input
/// prefix that produces `output`. Inverse of [`transduce`] at every length.
///
/// # Errors
///
/// [`Error::DigitOutOfRange`](crate::Error::DigitOutOfRange) for output
/// letters outside `B_q`.
pub fn transduce_inverse(b: &Base, initial: &NodeId, output: &OmegaPrefix) -> Result<OmegaPrefix> {
    let lower = b.lower_alphabet();
    let mut state = initial.clone();
    let mut input = Vec::with_capacity(output.len());
    for &y in output.digits() {
        b.require_digit(y, lower, "B_q")?;
        let (x, next) = step_inverse(b, &state, y);
        input.push(x);
        state = next;
    }
    Ok(OmegaPrefix::new(input))
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::extremal::{extremal_prefix, ExtremalKind};
    use std::collections::BTreeSet;

    fn n(v: u64) -> NodeId {
        BigUint::from(v)
    }

    fn b32() -> Base {
        Base::new(3, 2).unwrap()
    }

    fn pairs(b: &Base, d: Digit) -> Vec<(Digit, Digit)> {
        psi(b, d)
            .unwrap()
            .iter()
            .map(|pl| (pl.input(), pl.output()))
            .collect()
    }

    #[test]
    fn psi_examples() {
        assert_eq!(pairs(&b32(), 1), vec![(0, 0), (1, 1)]);
        assert_eq!(pairs(&b32(), 0), vec![(1, 0)]);
        assert_eq!(pairs(&b32(), 2), vec![(0, 1)]);
        assert_eq!(pairs(&Base::new(4, 3).unwrap(), -1), vec![(2, 0)]);
        assert_eq!(pairs(&Base::new(7, 3).unwrap(), 6), vec![(0, 2)]);
        assert!(psi(&b32(), 3).is_err());
    }

    #[test]
    fn psi_partitions_the_pair_alphabet() {
        for (p, q) in [(3u64, 2u64), (4, 3), (7, 3), (5, 2), (10, 3)] {
            let b = Base::new(p, q).unwrap();
            let mut seen = BTreeSet::new();
            let mut total = 0usize;
            for row in psi_table(&b) {
                assert_eq!(row.shift, row.letter - b.middle_digit());
                for pl in &row.pairs {
                    assert!(seen.insert((pl.input(), pl.output())), "pair repeated");
                    total += 1;
                }
            }
            assert_eq!(total, (q * q) as usize, "ψ must cover B_q × B_q");
        }
    }

    #[test]
    fn delta_examples() {
        let b = b32();
        let pl = |x, y| PairLetter::new(&b, x, y).unwrap();
        assert_eq!(delta(&b, &n(0), &pl(0, 0)), None); // τ(0, 1) is missing
        assert_eq!(delta(&b, &n(1), &pl(0, 0)), Some(n(2)));
        assert_eq!(delta(&b, &n(0), &pl(1, 0)), Some(n(0)));
    }

    #[test]
    fn transduce_examples() {
        let b = b32();
        let t = |i: u64, s: &str| {
            transduce(&b, &n(i), &s.parse().unwrap())
                .unwrap()
                .to_string()
        };
        assert_eq!(t(0, "1011000"), "0110001");
        assert_eq!(t(0, "01100"), "11000");
        assert_eq!(t(2, "10110"), "00101");
    }

    #[test]
    fn transducer_realizes_the_successor_on_bottom_words() {
        for (p, q) in [(3u64, 2u64), (7, 3), (4, 3), (10, 3)] {
            let b = Base::new(p, q).unwrap();
            for v in 0..40u64 {
                for i in 0..6u64 {
                    let input = extremal_prefix(&b, &n(v), ExtremalKind::Bottom, 32);
                    let expected = extremal_prefix(&b, &n(v + i + 1), ExtremalKind::Bottom, 32);
                    let got = transduce(&b, &n(i), &input).unwrap();
                    assert_eq!(got, expected, "base {b}, n={v}, start state {i}");
                }
            }
        }
    }

    #[test]
    fn step_agrees_with_the_pair_presentation() {
        // The closed-form step must pick exactly the pair letter whose δ-edge
        // exists; all other outputs for the same input have no edge.
        for (p, q) in [(3u64, 2u64), (4, 3), (7, 3), (5, 2)] {
            let b = Base::new(p, q).unwrap();
            for v in 0..50u64 {
                for x in b.lower_alphabet().iter() {
                    let (y, m) = step(&b, &n(v), x);
                    for out in b.lower_alphabet().iter() {
                        let pl = PairLetter::new(&b, x, out).unwrap();
                        let via_delta = delta(&b, &n(v), &pl);
                        if out == y {
                            assert_eq!(via_delta, Some(m.clone()));
                        } else {
                            assert_eq!(via_delta, None, "two admissible outputs");
                        }
                    }
                }
            }
        }
    }

    #[test]
    fn inverse_round_trips() {
        for (p, q) in [(3u64, 2u64), (7, 3), (4, 3)] {
            let b = Base::new(p, q).unwrap();
            for v in 0..30u64 {
                let input = extremal_prefix(&b, &n(v), ExtremalKind::Bottom, 24);
                let output = transduce(&b, &n(7), &input).unwrap();
                let back = transduce_inverse(&b, &n(7), &output).unwrap();
                assert_eq!(back, input);
            }
        }
    }

    #[test]
    fn alphabet_violations_are_reported() {
        let b = b32();
        assert!(transduce(&b, &n(0), &OmegaPrefix::new(vec![2])).is_err());
        assert!(transduce_inverse(&b, &n(0), &OmegaPrefix::new(vec![-1])).is_err());
        assert!(PairLetter::new(&b, 0, 2).is_err());
    }
}
