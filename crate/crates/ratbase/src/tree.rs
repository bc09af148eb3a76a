//! The representation tree `T_z` and the span automaton `S_z` as lazy
//! infinite automata.
//!
//! Both machines share the same state set (the natural numbers, each state
//! being the value it represents) and the same transition map
//!
//! ```text
//! τ(n, a) = (n·p + a)/q    defined iff q divides n·p + a and n·p + a ≥ 0,
//! ```
//!
//! they differ only in their input alphabet: the representation tree reads
//! all digits `A_p`, the span automaton reads the difference alphabet `D_z`.
//! No transition table is ever materialized — states and transitions are
//! computed on demand, so the machines are explored lazily to any depth.
//!
//! Reading the canonical representation of `m` from state 0 ends in state
//! `m`; more generally a word `u` read from `n` ends in `n·z^{|u|} + π(u)`
//! whenever the run exists. The initial state carries the loop `τ(0,0) = 0`,
//! which is why canonical representations are exactly the runs from 0 whose
//! label does not start with 0 (plus the empty word for 0 itself).
//!
//! Every state also has exactly one *incoming* transition: `q·m = p·n + a`
//! determines the digit `a = q·m mod p` and origin `n = ⌊q·m/p⌋` uniquely.
//! Walking it backwards yields [`encode`], [`predecessor`] and
//! [`incoming_path`]; walking it forward from a congruence class yields
//! [`min_node_with_path`], the least state from which a given word is
//! readable.

use std::collections::BTreeMap;

use num::{BigInt, BigUint, One, Signed, ToPrimitive, Zero};

use crate::base::{Base, DigitRange};
use crate::words::{Digit, DigitWord};
use crate::{Error, NodeId, Result};

/// Which of the two machines over the shared state set to read.
#[derive(Debug, Clone, Copy, PartialEq, Eq, Hash)]
pub enum AutomatonKind {
    /// The representation tree `T_z`, reading the full digit alphabet `A_p`.
    Tree,
    /// The span automaton `S_z`, reading the difference alphabet `D_z`.
    Span,
}

impl AutomatonKind {
    /// The input alphabet of this machine in base `b`.
    pub fn alphabet(&self, b: &Base) -> DigitRange {
        match self {
            AutomatonKind::Tree => b.full_alphabet(),
            AutomatonKind::Span => b.difference_alphabet(),
        }
    }
}

/// The transition map `τ(n, a) = (n·p + a)/q`, defined iff `q | n·p + a` and
/// `n·p + a ≥ 0`. The digit is not restricted to any alphabet here; runs
/// ([`run`]) enforce the machine's alphabet.
///
/// ```
/// use ratbase::{Base, tree::tau};
/// use num::BigUint;
///
/// let b = Base::new(3, 2)?;
/// let two = BigUint::from(2u32);
/// assert_eq!(tau(&b, &two, 0), Some(BigUint::from(3u32)));
/// assert_eq!(tau(&b, &two, 1), None); // 2·3 + 1 = 7 is not divisible by 2
/// # Ok::<(), ratbase::Error>(())
/// ```
pub fn tau(b: &Base, n: &NodeId, a: Digit) -> Option<NodeId> {
    let t: BigInt = BigInt::from(n.clone()) * b.p() + a;
    if t.is_negative() {
        return None;
    }
    let t = t.to_biguint().expect("non-negative");
    if (&t % b.q()).is_zero() {
        Some(t / b.q())
    } else {
        None
    }
}

/// All transitions leaving `n` in the given machine, as `(digit, target)`
/// pairs in ascending digit order.
///
/// The admissible digits are exactly those `a ≡ −n·p (mod q)` inside the
/// machine's alphabet, so the tree has `⌊z⌋` or `⌈z⌉` successors per state
/// and the span automaton has at most two (exactly two in a sparse base,
/// except at states whose window is clipped).
pub fn successors(b: &Base, kind: AutomatonKind, n: &NodeId) -> Vec<(Digit, NodeId)> {
    let range = kind.alphabet(b);
    let q = b.q();
    let n_mod = (n % q).to_u64().expect("residue fits u64");
    let np_mod = ((n_mod as u128 * (b.p() % q) as u128) % q as u128) as u64;
    let want = ((q - np_mod) % q) as i64;
    let offset = (want - range.lo()).rem_euclid(q as i64);
    let mut out = Vec::new();
    let mut a = range.lo() + offset;
    while a <= range.hi() {
        if let Some(m) = tau(b, n, a) {
            out.push((a, m));
        }
        a += q as i64;
    }
    out
}

/// Reads `label` from `start` in the given machine; `None` when a digit falls
/// outside the machine's alphabet or a transition is undefined.
pub fn run(b: &Base, kind: AutomatonKind, start: &NodeId, label: &[Digit]) -> Option<NodeId> {
    let range = kind.alphabet(b);
    let mut cur = start.clone();
    for &a in label {
        if !range.contains(a) {
            return None;
        }
        cur = tau(b, &cur, a)?;
    }
    Some(cur)
}

/// The canonical representation of `n`: the unique word over `A_p` without a
/// leading zero that reads from 0 to `n`. The representation of 0 is the
/// empty word.
///
/// ```
/// use ratbase::{Base, tree::encode};
/// use num::BigUint;
///
/// let b = Base::new(3, 2)?;
/// assert_eq!(encode(&b, &BigUint::from(4u32)).to_string(), "212");
/// assert_eq!(encode(&b, &BigUint::ZERO).to_string(), "ε");
/// # Ok::<(), ratbase::Error>(())
/// ```
pub fn encode(b: &Base, n: &NodeId) -> DigitWord {
    let mut digits = Vec::new();
    let mut cur = n.clone();
    while !cur.is_zero() {
        let t = &cur * b.q();
        digits.push((&t % b.p()).to_u64().expect("digit fits u64") as Digit);
        cur = t / b.p();
    }
    digits.reverse();
    DigitWord::new(digits)
}

/// The unique incoming transition of `m`: the pair `(n, a)` with
/// `τ(n, a) = m`, read off from `q·m = p·n + a`. For `m = 0` this is the
/// loop `(0, 0)`.
pub fn predecessor(b: &Base, m: &NodeId) -> (NodeId, Digit) {
    let t = m * b.q();
    let a = (&t % b.p()).to_u64().expect("digit fits u64") as Digit;
    (t / b.p(), a)
}

/// The label of the length-`k` path arriving at `m` along unique incoming
/// transitions: the last `k` digits of the representation of `m`, padded with
/// leading zeros beyond its length.
pub fn incoming_path(b: &Base, m: &NodeId, k: usize) -> DigitWord {
    let mut digits = Vec::with_capacity(k);
    let mut cur = m.clone();
    for _ in 0..k {
        let (n, a) = predecessor(b, &cur);
        digits.push(a);
        cur = n;
    }
    digits.reverse();
    DigitWord::new(digits)
}

/// Modular inverse of `a` mod `m` for coprime `a, m` (extended Euclid).
fn inv_mod(a: u64, m: u64) -> u64 {
    let (mut old_r, mut r) = (a as i128, m as i128);
    let (mut old_s, mut s) = (1i128, 0i128);
    while r != 0 {
        let quot = old_r / r;
        (old_r, r) = (r, old_r - quot * r);
        (old_s, s) = (s, old_s - quot * s);
    }
    debug_assert_eq!(old_r, 1, "arguments must be coprime");
    old_s.rem_euclid(m as i128) as u64
}

/// The least state of the representation tree from which `w` labels a run.
///
/// Whether a length-`k` word is readable from `n` depends only on
/// `n mod q^k`, and exactly one residue class modulo `q^k` admits it. The
/// implementation lifts that class one digit at a time (choosing, for each
/// new digit, the unique extension of the residue that keeps the run
/// divisible), so the cost is linear in `|w|` instead of exponential.
///
/// # Errors
///
/// [`Error::DigitOutOfRange`] if a digit of `w` is outside `A_p`.
///
/// ```
/// use ratbase::{Base, tree::min_node_with_path, DigitWord};
/// use num::BigUint;
///
/// let b = Base::new(3, 2)?;
/// let least = min_node_with_path(&b, &DigitWord::new(vec![1, 1]))?;
/// assert_eq!(least, BigUint::from(3u32));
/// # Ok::<(), ratbase::Error>(())
/// ```
pub fn min_node_with_path(b: &Base, w: &DigitWord) -> Result<NodeId> {
    let full = b.full_alphabet();
    for &d in w.digits() {
        b.require_digit(d, full, "A_p")?;
    }
    let (p, q) = (b.p(), b.q());
    let mut residue = BigUint::zero(); // least candidate so far
    let mut modulus = BigUint::one(); // q^j after j digits
    let mut state = BigUint::zero(); // state reached from `residue`
    let mut p_pow = BigUint::one(); // p^j: states shift by p^j per q^j step
    let mut p_pow_mod = 1 % q; // p^j mod q
    for &a in w.digits() {
        // Choose t ∈ {0, …, q−1} with (state + p^j·t)·p + a ≡ 0 (mod q):
        // t ≡ −(state·p + a) · (p^{j+1})^{−1} (mod q).
        let s_mod = (&state % q).to_u64().expect("residue fits u64");
        let c = ((s_mod as u128 * (p % q) as u128 + a as u128) % q as u128) as u64;
        let d = ((p_pow_mod as u128 * (p % q) as u128) % q as u128) as u64;
        let t = (((q - c) % q) as u128 * inv_mod(d, q) as u128 % q as u128) as u64;
        if t != 0 {
            residue += &modulus * t;
            state += &p_pow * t;
        }
        let stepped = state * p + a as u64;
        debug_assert!((&stepped % q).is_zero());
        state = stepped / q;
        modulus *= q;
        p_pow *= p;
        p_pow_mod = d;
    }
    Ok(residue)
}

/// Numbers of distinct run labels of each length `0..=j_max` from state 0.
///
/// Entry `j` counts the distinct length-`j` labels (equivalently paths — the
/// machines are deterministic). In the representation tree, and in the span
/// automaton of a sparse base, distinct labels also reach distinct states,
/// so the entry is the size of the depth-`j` state frontier.
///
/// The breadth-first frontier is kept as a sorted map from state to the
/// number of paths reaching it; the map's size (distinct states, not paths)
/// is bounded by `cap`.
///
/// # Errors
///
/// [`Error::FrontierCapExceeded`] when a frontier grows past `cap`.
pub fn depth_counts(
    b: &Base,
    kind: AutomatonKind,
    j_max: usize,
    cap: usize,
) -> Result<Vec<BigUint>> {
    let mut counts = Vec::with_capacity(j_max + 1);
    counts.push(BigUint::one());
    let mut frontier: BTreeMap<NodeId, BigUint> = BTreeMap::new();
    frontier.insert(BigUint::zero(), BigUint::one());
    for depth in 1..=j_max {
        let mut next: BTreeMap<NodeId, BigUint> = BTreeMap::new();
        for (state, paths) in &frontier {
            for (_, target) in successors(b, kind, state) {
                let slot = next.entry(target).or_insert_with(BigUint::zero);
                *slot += paths;
            }
            if next.len() > cap {
                return Err(Error::FrontierCapExceeded { cap, depth });
            }
        }
        counts.push(next.values().sum());
        frontier = next;
    }
    Ok(counts)
}

/// The number of distinct length-`j` run labels from state 0; see
/// [`depth_counts`], which this truncates.
pub fn count_states_at_depth(
    b: &Base,
    kind: AutomatonKind,
    j: usize,
    cap: usize,
) -> Result<BigUint> {
    Ok(depth_counts(b, kind, j, cap)?.pop().expect("non-empty"))
}

#[cfg(test)]
mod tests {
    use super::*;

    fn n(v: u64) -> NodeId {
        BigUint::from(v)
    }

    fn b32() -> Base {
        Base::new(3, 2).unwrap()
    }

    fn b73() -> Base {
        Base::new(7, 3).unwrap()
    }

    #[test]
    fn tau_examples() {
        assert_eq!(tau(&b32(), &n(0), 0), Some(n(0))); // the root loop
        assert_eq!(tau(&b32(), &n(2), 1), None);
        assert_eq!(tau(&b32(), &n(2), 0), Some(n(3)));
        // Negative digits only fail at the root (|a| < q there).
        assert_eq!(tau(&Base::new(4, 3).unwrap(), &n(0), -1), None);
        assert_eq!(tau(&Base::new(4, 3).unwrap(), &n(1), -1), Some(n(1)));
    }

    #[test]
    fn successor_examples() {
        assert_eq!(successors(&b32(), AutomatonKind::Tree, &n(1)), vec![(1, n(2))]);
        assert_eq!(
            successors(&b32(), AutomatonKind::Tree, &n(2)),
            vec![(0, n(3)), (2, n(4))]
        );
        assert_eq!(
            successors(&b73(), AutomatonKind::Span, &n(0)),
            vec![(3, n(1)), (6, n(2))]
        );
    }

    #[test]
    fn tree_out_degree_is_floor_or_ceil_of_z() {
        for (p, q) in [(3u64, 2u64), (7, 3), (10, 3), (4, 3), (5, 2)] {
            let b = Base::new(p, q).unwrap();
            for v in 0..200u64 {
                let deg = successors(&b, AutomatonKind::Tree, &n(v)).len() as u64;
                assert!(
                    deg == b.floor_z() || deg == b.ceil_z(),
                    "state {v} of T_{p}/{q} has out-degree {deg}"
                );
            }
        }
    }

    #[test]
    fn run_examples() {
        assert_eq!(run(&b32(), AutomatonKind::Tree, &n(0), &[2, 1, 0]), Some(n(3)));
        assert_eq!(run(&b32(), AutomatonKind::Tree, &n(5), &[]), Some(n(5)));
        // 1 is outside D_{7/3} = {2,…,6}: rejected by the span automaton.
        assert_eq!(run(&b73(), AutomatonKind::Span, &n(0), &[1]), None);
        assert_eq!(run(&b73(), AutomatonKind::Span, &n(0), &[3, 2]), Some(n(3)));
    }

    #[test]
    fn encode_examples() {
        assert_eq!(encode(&b32(), &n(0)), DigitWord::empty());
        assert_eq!(encode(&b32(), &n(4)).to_string(), "212");
        assert_eq!(encode(&b73(), &n(1)).to_string(), "3");
    }

    #[test]
    fn encode_reads_back_along_the_tree() {
        for v in 0..500u64 {
            let w = encode(&b32(), &n(v));
            assert_eq!(run(&b32(), AutomatonKind::Tree, &n(0), w.digits()), Some(n(v)));
            if v > 0 {
                assert_ne!(w.digits()[0], 0, "canonical words have no leading zero");
            }
        }
    }

    #[test]
    fn predecessor_examples() {
        assert_eq!(predecessor(&b32(), &n(3)), (n(2), 0));
        assert_eq!(predecessor(&b32(), &n(0)), (n(0), 0));
        assert_eq!(predecessor(&b73(), &n(2)), (n(0), 6));
    }

    #[test]
    fn predecessor_inverts_every_transition() {
        for (p, q) in [(3u64, 2u64), (7, 3), (4, 3)] {
            let b = Base::new(p, q).unwrap();
            for v in 0..300u64 {
                for (a, m) in successors(&b, AutomatonKind::Tree, &n(v)) {
                    assert_eq!(predecessor(&b, &m), (n(v), a));
                }
            }
        }
    }

    #[test]
    fn incoming_path_examples() {
        assert_eq!(incoming_path(&b32(), &n(3), 2).to_string(), "10");
        assert_eq!(incoming_path(&b32(), &n(5), 0), DigitWord::empty());
        assert_eq!(incoming_path(&b32(), &n(0), 3).to_string(), "000");
    }

    #[test]
    fn min_node_examples() {
        let b = b32();
        assert_eq!(min_node_with_path(&b, &DigitWord::empty()).unwrap(), n(0));
        assert_eq!(
            min_node_with_path(&b, &DigitWord::new(vec![1])).unwrap(),
            n(1)
        );
        // run(1, "11") dies at τ(2, 1); the least state reading "11" is 3.
        assert_eq!(
            min_node_with_path(&b, &DigitWord::new(vec![1, 1])).unwrap(),
            n(3)
        );
        assert!(matches!(
            min_node_with_path(&b, &DigitWord::new(vec![3])),
            Err(Error::DigitOutOfRange { .. })
        ));
    }

    #[test]
    fn min_node_agrees_with_brute_force_scan() {
        for (p, q) in [(3u64, 2u64), (7, 3), (4, 3), (5, 2)] {
            let b = Base::new(p, q).unwrap();
            let words: Vec<Vec<Digit>> = vec![
                vec![],
                vec![0],
                vec![1],
                vec![1, 1],
                vec![0, 1],
                vec![1, 0, 1],
                vec![2, 1],
                vec![1, 1, 1],
                vec![0, 0, 1, 1],
            ];
            for digits in words {
                if digits.iter().any(|d| !b.full_alphabet().contains(*d)) {
                    continue;
                }
                let w = DigitWord::new(digits.clone());
                let fast = min_node_with_path(&b, &w).unwrap();
                let mut v = 0u64;
                let brute = loop {
                    if run(&b, AutomatonKind::Tree, &n(v), &digits).is_some() {
                        break n(v);
                    }
                    v += 1;
                    assert!(v < 100_000, "oracle scan ran away");
                };
                assert_eq!(fast, brute, "word {w} in base {b}");
            }
        }
    }

    #[test]
    fn depth_count_examples() {
        let cap = 1 << 16;
        assert_eq!(
            count_states_at_depth(&b32(), AutomatonKind::Tree, 0, cap).unwrap(),
            n(1)
        );
        assert_eq!(
            count_states_at_depth(&b32(), AutomatonKind::Tree, 1, cap).unwrap(),
            n(2)
        );
        // S_{7/3} from 0: depth 1 reads {3, 6}; depth 2 reads {32, 35, 64}.
        assert_eq!(
            depth_counts(&b73(), AutomatonKind::Span, 2, cap).unwrap(),
            vec![n(1), n(2), n(3)]
        );
    }

    #[test]
    fn sparse_span_frontier_is_at_most_two_to_the_j() {
        let counts = depth_counts(&b73(), AutomatonKind::Span, 10, 1 << 16).unwrap();
        for (j, c) in counts.iter().enumerate() {
            assert!(c <= &BigUint::from(1u64 << j));
        }
    }

    #[test]
    fn frontier_cap_is_enforced() {
        assert_eq!(
            depth_counts(&b32(), AutomatonKind::Tree, 3, 2),
            Err(Error::FrontierCapExceeded { cap: 2, depth: 2 })
        );
    }

    #[test]
    fn small_base_span_labels_outnumber_states() {
        // In base 4/3 the span automaton is not label-injective: state 1 has
        // two incoming transitions, τ(0, 3) and τ(1, −1), so at depth 2 there
        // are 4 labels over only 3 states.
        let b = Base::new(4, 3).unwrap();
        let counts = depth_counts(&b, AutomatonKind::Span, 2, 1 << 16).unwrap();
        assert_eq!(counts[2], n(4));
    }
}
