//! Extremal infinite branches: bottom words, top words, and span-words.
//!
//! Below every state `n` of the representation tree there is a
//! lexicographically least infinite branch (the *bottom word* of `n`) and a
//! greatest one (the *top word*). Both are produced by the same greedy step:
//! among the admissible digits `a ≡ −n·p (mod q)`, exactly one lies in any
//! window of `q` consecutive integers, in particular in the lower alphabet
//! `B_q = {0,…,q−1}` and in the upper alphabet `C_z = {p−q,…,p−1}`. Hence
//! the bottom word is the unique infinite `B_q`-labelled path from `n`, the
//! top word the unique `C_z`-labelled one, and both are computed online,
//! digit by digit.
//!
//! The *span-word* of `n` is their digitwise difference (top ⊖ bottom), a
//! word over the difference alphabet `D_z`; it labels a run of the span
//! automaton from 0 and measures how far apart the extremal values below `n`
//! are.
//!
//! The letter map `μ(c) = c − (p − q)` translates the difference alphabet
//! down by the middle digit; restricted to `C_z` it lands in `B_q`, and
//! applied letterwise to the top word of `n` it yields the bottom word of
//! `n + 1` — the seed of the successor transducer.

use num::{BigUint, One, ToPrimitive};

use crate::base::{Base, DigitRange};
use crate::tree;
use crate::words::{Digit, DigitWord, OmegaPrefix};
use crate::{NodeId, Result};

/// Which extremal branch to follow.
#[derive(Debug, Clone, Copy, PartialEq, Eq, Hash)]
pub enum ExtremalKind {
    /// The lexicographically least branch, labelled over `B_q`.
    Bottom,
    /// The lexicographically greatest branch, labelled over `C_z`.
    Top,
}

impl ExtremalKind {
    /// The alphabet the chosen branch is labelled over.
    pub fn alphabet(&self, b: &Base) -> DigitRange {
        match self {
            ExtremalKind::Bottom => b.lower_alphabet(),
            ExtremalKind::Top => b.upper_alphabet(),
        }
    }
}

/// One greedy step of the chosen extremal branch from `n`: the unique
/// admissible digit in the branch's alphabet and the state it leads to.
pub fn extremal_step(b: &Base, n: &NodeId, kind: ExtremalKind) -> (Digit, NodeId) {
    let window = kind.alphabet(b);
    let q = b.q();
    let n_mod = (n % q).to_u64().expect("residue fits u64");
    let np_mod = ((n_mod as u128 * (b.p() % q) as u128) % q as u128) as u64;
    let want = ((q - np_mod) % q) as i64;
    let digit = window.lo() + (want - window.lo()).rem_euclid(q as i64);
    debug_assert!(window.contains(digit));
    let target = (n * b.p() + BigUint::from(digit as u64)) / q;
    (digit, target)
}

/// The first `k` letters of the bottom or top word of `n`.
///
/// ```
/// use ratbase::{Base, extremal::{extremal_prefix, ExtremalKind}};
/// use num::BigUint;
///
/// let b = Base::new(3, 2)?;
/// let one = BigUint::from(1u32);
/// assert_eq!(
///     extremal_prefix(&b, &one, ExtremalKind::Bottom, 7).to_string(),
///     "1011000"
/// );
/// assert_eq!(
///     extremal_prefix(&b, &one, ExtremalKind::Top, 7).to_string(),
///     "1221112"
/// );
/// # Ok::<(), ratbase::Error>(())
/// ```
pub fn extremal_prefix(b: &Base, n: &NodeId, kind: ExtremalKind, k: usize) -> OmegaPrefix {
    let mut digits = Vec::with_capacity(k);
    let mut cur = n.clone();
    for _ in 0..k {
        let (digit, next) = extremal_step(b, &cur, kind);
        digits.push(digit);
        cur = next;
    }
    OmegaPrefix::new(digits)
}

/// The letter map `μ(d) = d − (p − q)` on the difference alphabet `D_z`.
///
/// Restricted to the upper alphabet `C_z` it is a bijection onto `B_q`.
///
/// # Errors
///
/// [`Error::DigitOutOfRange`](crate::Error::DigitOutOfRange) for letters
/// outside `D_z`.
pub fn mu(b: &Base, d: Digit) -> Result<Digit> {
    b.require_digit(d, b.difference_alphabet(), "D_z")?;
    Ok(d - b.middle_digit())
}

/// `μ` applied letterwise to a finite word over `D_z`.
pub fn mu_word(b: &Base, w: &DigitWord) -> Result<DigitWord> {
    w.digits()
        .iter()
        .map(|&d| mu(b, d))
        .collect::<Result<Vec<_>>>()
        .map(DigitWord::new)
}

/// `μ` applied letterwise to a prefix of an infinite word over `D_z`.
///
/// On infinite words `μ` lowers the value by exactly 1; on a length-`k`
/// prefix the evaluated head drops by `1 − z^{−k}`.
pub fn mu_prefix(b: &Base, w: &OmegaPrefix) -> Result<OmegaPrefix> {
    w.digits()
        .iter()
        .map(|&d| mu(b, d))
        .collect::<Result<Vec<_>>>()
        .map(OmegaPrefix::new)
}

/// The first `k` letters of the span-word of `n`: top word ⊖ bottom word,
/// digitwise. The result is a word over `D_z` and labels a run of the span
/// automaton from 0.
pub fn span_word_prefix(b: &Base, n: &NodeId, k: usize) -> OmegaPrefix {
    let top = extremal_prefix(b, n, ExtremalKind::Top, k);
    let bottom = extremal_prefix(b, n, ExtremalKind::Bottom, k);
    top.digitwise_sub(&bottom)
        .expect("extremal prefixes share the length")
}

/// The first `k` letters of the bottom word of `n + 1`, computed by the
/// greedy walk. This is the reference oracle the successor transducer is
/// checked against.
pub fn successor_bottom_prefix(b: &Base, n: &NodeId, k: usize) -> OmegaPrefix {
    extremal_prefix(b, &(n + BigUint::one()), ExtremalKind::Bottom, k)
}

/// The least state whose bottom word starts with `w`.
///
/// A word over `B_q` labels at most one run from each state, and the states
/// admitting it form one congruence class; the least of them is returned,
/// and `w` is then a prefix of its bottom word.
///
/// # Errors
///
/// [`Error::DigitOutOfRange`](crate::Error::DigitOutOfRange) for digits
/// outside `B_q`.
pub fn witness_min_node_for_bottom_prefix(b: &Base, w: &DigitWord) -> Result<NodeId> {
    let lower = b.lower_alphabet();
    for &d in w.digits() {
        b.require_digit(d, lower, "B_q")?;
    }
    tree::min_node_with_path(b, w)
}
