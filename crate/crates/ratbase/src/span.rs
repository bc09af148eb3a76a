//! Span-set analysis: how wide subtrees are, and what their values tile.
//!
//! The *span* of a state `n` is the difference between the greatest and the
//! least real value reachable below it, `span(n) = ρ(span-word of n)`. Two
//! universal landmarks bracket it in a sparse base (`p > 2q − 1`):
//!
//! - `γ = ρ(q · bottom word of 1)` — the least span of any state `n ≥ 1`;
//! - `ω = ρ(top word of 0)` — the greatest span of any state.
//!
//! The value interval of the subtree below a representation prefix `u` with
//! endpoint `n` is `I_u = [ρ(u·bottom(n)), ρ(u·top(n))]`, of length
//! `z^{−|u|}·span(n)`; splitting over the next digit refines `I_u` into the
//! `I_{ua}`. Reading the same refinement on the span automaton (its length-`j`
//! labels from 0, [`refine_words`]) yields the generations `U_j` whose outer
//! measure contracts geometrically in a sparse base — the certificate,
//! [`alpha_contraction`], that the span set has Lebesgue measure zero there.
//! In the complementary interval regime (`p ≤ 2q − 1`) the reachable values
//! at each depth form a contiguous block, which [`small_base_checks`]
//! verifies exhaustively.
//!
//! All endpoints are sound rational enclosures; emptiness, disjointness and
//! decay are certified on endpoints, never estimated.

use num::{BigRational, BigUint, One, Signed, Zero};

use crate::base::Base;
use crate::eval::real_enclosure;
use crate::extremal::{extremal_prefix, span_word_prefix, ExtremalKind};
use crate::real::RealEnclosure;
use crate::tree::{self, AutomatonKind};
use crate::words::{Digit, DigitWord, OmegaPrefix};
use crate::{Error, NodeId, Result};

/// The span of one state, enclosed at a truncation depth.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct SpanRecord {
    /// The state whose span is measured.
    pub node: NodeId,
    /// Truncation depth of the underlying span-word prefix.
    pub depth: usize,
    /// Sound enclosure of `span(node)`.
    pub enclosure: RealEnclosure,
}

/// Encloses `span(n) = ρ(top word of n) − ρ(bottom word of n)` from the
/// first `k` letters of the span-word; the enclosure width decays like
/// `z^{−k}`.
pub fn span_enclosure(b: &Base, n: &NodeId, k: usize) -> SpanRecord {
    let word = span_word_prefix(b, n, k);
    let d = b.difference_alphabet();
    let enclosure = real_enclosure(b, &word, d.lo(), d.hi()).expect("alphabet bounds are ordered");
    SpanRecord {
        node: n.clone(),
        depth: k,
        enclosure,
    }
}

/// The two span landmarks of a base, enclosed at a common depth.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct GammaOmega {
    /// Enclosure of `γ = ρ(q · bottom word of 1)`, the least span of any
    /// state `n ≥ 1` in a sparse base.
    pub gamma: RealEnclosure,
    /// Enclosure of `ω = ρ(top word of 0)`, the greatest span of any state.
    pub omega: RealEnclosure,
    /// Truncation depth used for both enclosures.
    pub depth: usize,
}

/// Encloses the landmarks `γ` and `ω` at truncation depth `k`.
///
/// The word behind `γ` is the digit `q` followed by the bottom word of 1
/// (tail over `B_q`); behind `ω` is the top word of 0 (tail over `C_z`).
pub fn gamma_omega(b: &Base, k: usize) -> GammaOmega {
    let lower = b.lower_alphabet();
    let upper = b.upper_alphabet();
    let gamma = if k == 0 {
        // Nothing evaluated yet: the first letter q and the B_q tail keep
        // every digit within [0, q].
        real_enclosure(b, &OmegaPrefix::empty(), 0, b.q() as Digit)
    } else {
        let mut digits = vec![b.q() as Digit];
        digits.extend_from_slice(
            extremal_prefix(b, &BigUint::one(), ExtremalKind::Bottom, k - 1).digits(),
        );
        real_enclosure(b, &OmegaPrefix::new(digits), lower.lo(), lower.hi())
    }
    .expect("alphabet bounds are ordered");
    let omega = real_enclosure(
        b,
        &extremal_prefix(b, &BigUint::zero(), ExtremalKind::Top, k),
        upper.lo(),
        upper.hi(),
    )
    .expect("alphabet bounds are ordered");
    GammaOmega {
        gamma,
        omega,
        depth: k,
    }
}

/// A certified contraction factor for the refinement generations of a sparse
/// base.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct Contraction {
    /// The escape length `i`: the least `i ≥ 1` with `⌊z⌋^i ≥ 2q`, after
    /// which every surviving interval has shed a definite fraction.
    pub escape_len: u32,
    /// Enclosure of the contraction factor `α = 1 − z^{−i}·γ/ω`; its upper
    /// endpoint below 1 certifies geometric decay of the outer measure.
    pub alpha: RealEnclosure,
    /// The landmark enclosures the factor was derived from.
    pub landmarks: GammaOmega,
}

/// Certifies the measure-zero contraction of a sparse base: every `i` levels
/// of refinement multiply the outer measure of the span set's cover by at
/// most `α < 1`.
///
/// # Errors
///
/// [`Error::WrongRegime`] for bases with `p ≤ 2q − 1`, where the span set is
/// a full interval and no contraction exists.
pub fn alpha_contraction(b: &Base, k: usize) -> Result<Contraction> {
    if !b.is_sparse() {
        return Err(Error::WrongRegime {
            need: "p > 2q − 1 (sparse regime)",
            p: b.p(),
            q: b.q(),
        });
    }
    let fl = b.floor_z(); // ≥ 2 in a sparse base
    let mut escape_len = 1u32;
    let mut acc = fl as u128;
    while acc < 2 * b.q() as u128 {
        acc *= fl as u128;
        escape_len += 1;
    }
    let landmarks = gamma_omega(b, k);
    let ratio = landmarks
        .gamma
        .div_pos(&landmarks.omega)
        .expect("ω ≥ 1 > 0 at every depth");
    let alpha = RealEnclosure::point(BigRational::one())
        .sub(&ratio.scale_nonneg(&b.z_pow_neg(escape_len as usize)));
    Ok(Contraction {
        escape_len,
        alpha,
        landmarks,
    })
}

/// The `j`-th refinement generation `X_j`: all length-`j` labels of span
/// automaton runs from 0, in lexicographic order.
///
/// # Errors
///
/// [`Error::FrontierCapExceeded`] when a generation outgrows `cap`.
pub fn refine_words(b: &Base, j: usize, cap: usize) -> Result<Vec<DigitWord>> {
    let mut frontier: Vec<(Vec<Digit>, NodeId)> = vec![(Vec::new(), BigUint::zero())];
    for depth in 1..=j {
        let mut next = Vec::with_capacity(frontier.len() * 2);
        for (label, state) in &frontier {
            for (d, m) in tree::successors(b, AutomatonKind::Span, state) {
                let mut extended = label.clone();
                extended.push(d);
                next.push((extended, m));
            }
            if next.len() > cap {
                return Err(Error::FrontierCapExceeded { cap, depth });
            }
        }
        frontier = next;
    }
    Ok(frontier
        .into_iter()
        .map(|(label, _)| DigitWord::new(label))
        .collect())
}

/// The value interval of the subtree below one representation prefix,
/// `I_u = [ρ(u·bottom(n)), ρ(u·top(n))]` with `n` the endpoint of `u`, both
/// endpoints enclosed soundly.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct IntervalRecord {
    /// The prefix `u` (a run label of the representation tree from 0).
    pub label: DigitWord,
    /// The endpoint state `n` of the run.
    pub node: NodeId,
    /// Enclosure of the left endpoint `ρ(u·bottom word of n)`.
    pub left: RealEnclosure,
    /// Enclosure of the right endpoint `ρ(u·top word of n)`.
    pub right: RealEnclosure,
}

impl IntervalRecord {
    /// The smallest interval certainly containing `I_u`:
    /// `[left.lo, right.hi]`.
    pub fn outer_hull(&self) -> RealEnclosure {
        RealEnclosure::new(self.left.lo().clone(), self.right.hi().clone())
    }

    /// Length of the outer hull — an upper bound for the true length of
    /// `I_u`.
    pub fn outer_length(&self) -> BigRational {
        self.right.hi() - self.left.lo()
    }

    /// A lower bound for the true length of `I_u` (0 when the enclosures are
    /// too coarse to certify more).
    pub fn inner_length(&self) -> BigRational {
        let raw = self.right.lo() - self.left.hi();
        if raw.is_negative() {
            BigRational::zero()
        } else {
            raw
        }
    }

    /// Total enclosure fuzz at the two endpoints; the outer length
    /// overestimates the true length by at most this much.
    pub fn endpoint_slack(&self) -> BigRational {
        self.left.width() + self.right.width()
    }
}

/// Builds the value interval `I_u` for each given prefix, with endpoint
/// enclosures truncated `k` letters past the prefix.
///
/// # Errors
///
/// [`Error::NotATreePath`] when a word does not label a representation-tree
/// run from 0 (e.g. a difference word with negative digits).
pub fn intervals_for(b: &Base, words: &[DigitWord], k: usize) -> Result<Vec<IntervalRecord>> {
    let lower = b.lower_alphabet();
    let upper = b.upper_alphabet();
    words
        .iter()
        .map(|u| {
            let node = tree::run(b, AutomatonKind::Tree, &BigUint::zero(), u.digits())
                .ok_or_else(|| Error::NotATreePath {
                    label: u.to_compact_string(),
                })?;
            let bottom = OmegaPrefix::concat(u, &extremal_prefix(b, &node, ExtremalKind::Bottom, k));
            let top = OmegaPrefix::concat(u, &extremal_prefix(b, &node, ExtremalKind::Top, k));
            let left = real_enclosure(b, &bottom, lower.lo(), lower.hi())?;
            let right = real_enclosure(b, &top, upper.lo(), upper.hi())?;
            Ok(IntervalRecord {
                label: u.clone(),
                node,
                left,
                right,
            })
        })
        .collect()
}

/// Length of the union of closed intervals given as `(lo, hi)` pairs.
///
/// ```
/// use ratbase::span::measure_union;
/// use num::BigRational;
///
/// let r = |v: i64| BigRational::from_integer(v.into());
/// assert_eq!(
///     measure_union(&[(r(0), r(1)), (r(2), r(3))]),
///     r(2)
/// );
/// assert_eq!(
///     measure_union(&[(r(0), r(2)), (r(1), r(3))]),
///     r(3)
/// );
/// ```
pub fn measure_union(intervals: &[(BigRational, BigRational)]) -> BigRational {
    let mut sorted: Vec<_> = intervals
        .iter()
        .filter(|(lo, hi)| lo <= hi)
        .cloned()
        .collect();
    sorted.sort();
    let mut total = BigRational::zero();
    let mut current: Option<(BigRational, BigRational)> = None;
    for (lo, hi) in sorted {
        match current {
            None => current = Some((lo, hi)),
            Some((clo, chi)) => {
                if lo <= chi {
                    current = Some((clo, chi.max(hi)));
                } else {
                    total += &chi - &clo;
                    current = Some((lo, hi));
                }
            }
        }
    }
    if let Some((clo, chi)) = current {
        total += chi - clo;
    }
    total
}

/// Upper bound for the measure of `⋃ I_u` over the given interval records:
/// the union length of their outer hulls.
pub fn measure_outer(intervals: &[IntervalRecord]) -> BigRational {
    let hulls: Vec<_> = intervals
        .iter()
        .map(|r| (r.left.lo().clone(), r.right.hi().clone()))
        .collect();
    measure_union(&hulls)
}

/// A certified gap inside the value interval of one state: two branches of
/// its top-word cone whose enclosures are disjoint.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct TwoBranchWitness {
    /// Position (0-based, within the top word of the state) of the first
    /// digit exceeding `p − q`, where the branches separate.
    pub split_index: usize,
    /// The top word of the state itself, the greater branch.
    pub upper_prefix: OmegaPrefix,
    /// The branch taking digit `a − q` at the split and the top word of the
    /// sibling state after it.
    pub lower_prefix: OmegaPrefix,
    /// Enclosure of the greater branch value.
    pub upper: RealEnclosure,
    /// Enclosure of the smaller branch value.
    pub lower: RealEnclosure,
}

impl TwoBranchWitness {
    /// The certified size of the gap: a positive value iff the two branch
    /// enclosures are disjoint.
    pub fn gap_lower_bound(&self) -> BigRational {
        self.upper.lo() - self.lower.hi()
    }
}

/// Finds, below state `n` of a sparse base, two value-disjoint branches: the
/// top word of `n` and the branch that forks downward at the top word's first
/// digit above `p − q`. Their value gap is `z^{−(j+1)}·span(m) > 0` at split
/// index `j` with `m` the state after the split digit.
///
/// # Errors
///
/// [`Error::WrongRegime`] in the interval regime, and
/// [`Error::SearchExhausted`] when no digit above `p − q` occurs among the
/// first `k` letters of the top word (the enclosures could not certify a gap
/// anyway).
pub fn two_branch_witness(b: &Base, n: &NodeId, k: usize) -> Result<TwoBranchWitness> {
    if !b.is_sparse() {
        return Err(Error::WrongRegime {
            need: "p > 2q − 1 (sparse regime)",
            p: b.p(),
            q: b.q(),
        });
    }
    let upper_alpha = b.upper_alphabet();
    let mut states = vec![n.clone()];
    let mut digits = Vec::with_capacity(k);
    for _ in 0..k {
        let (d, next) = crate::extremal::extremal_step(b, states.last().expect("non-empty"), ExtremalKind::Top);
        digits.push(d);
        states.push(next);
    }
    let split_index = digits
        .iter()
        .position(|&d| d > b.middle_digit())
        .ok_or_else(|| Error::SearchExhausted {
            what: format!("top-word digit above {} below state {n}", b.middle_digit()),
            within: k,
        })?;
    let a = digits[split_index];
    let m = &states[split_index + 1];
    let sibling = m - BigUint::one(); // τ(states[j], a − q) = m − 1
    let mut lower_digits = digits[..split_index].to_vec();
    lower_digits.push(a - b.q() as Digit);
    lower_digits.extend_from_slice(
        extremal_prefix(b, &sibling, ExtremalKind::Top, k - split_index - 1).digits(),
    );
    let upper_prefix = OmegaPrefix::new(digits);
    let lower_prefix = OmegaPrefix::new(lower_digits);
    // Both branches continue along top words, so C_z bounds their tails. The
    // lower branch's split digit a − q may sit below C_z, but it is part of
    // the evaluated prefix, not the tail.
    let upper = real_enclosure(b, &upper_prefix, upper_alpha.lo(), upper_alpha.hi())?;
    let lower = real_enclosure(b, &lower_prefix, upper_alpha.lo(), upper_alpha.hi())?;
    Ok(TwoBranchWitness {
        split_index,
        upper_prefix,
        lower_prefix,
        upper,
        lower,
    })
}

/// One refinement level of the interval-regime verification.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct SmallBaseLevel {
    /// Depth of this generation.
    pub depth: usize,
    /// Number of length-`depth` span-automaton labels from 0.
    pub labels: u64,
}

/// Outcome of the exhaustive interval-regime verification of a base with
/// `p ≤ 2q − 1`.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct SmallBaseReport {
    /// The verified base.
    pub base: Base,
    /// Largest depth verified.
    pub max_len: usize,
    /// Total number of labels checked across all depths.
    pub words_checked: u64,
    /// Per-depth tallies.
    pub levels: Vec<SmallBaseLevel>,
    /// Human-readable descriptions of violations (empty on success).
    pub failures: Vec<String>,
}

impl SmallBaseReport {
    /// Whether every identity held.
    pub fn passed(&self) -> bool {
        self.failures.is_empty()
    }
}

/// Exhaustively verifies the no-shortcut identities of a base with
/// `p ≤ 2q − 1`, over every span-automaton label `u` from 0 of length at
/// most `max_len`:
///
/// - `u` evaluates (by `π`) to exactly the state `n` it reaches, even
///   through negative digits;
/// - the canonical representation of `n` is no shorter an encoding:
///   `|⟨n⟩| ≤ |u|` — difference words never take shortcuts;
/// - padding `⟨n⟩` with leading zeros to length `|u|` yields a
///   representation-tree run from 0 with the same value and length.
///
/// # Errors
///
/// [`Error::WrongRegime`] for sparse bases and
/// [`Error::FrontierCapExceeded`] if a generation outgrows the default cap.
pub fn small_base_checks(b: &Base, max_len: usize) -> Result<SmallBaseReport> {
    if b.is_sparse() {
        return Err(Error::WrongRegime {
            need: "p ≤ 2q − 1 (interval regime)",
            p: b.p(),
            q: b.q(),
        });
    }
    let cap = crate::DEFAULT_FRONTIER_CAP;
    let mut frontier: Vec<(Vec<Digit>, NodeId)> = vec![(Vec::new(), BigUint::zero())];
    let mut report = SmallBaseReport {
        base: *b,
        max_len,
        words_checked: 0,
        levels: Vec::with_capacity(max_len + 1),
        failures: Vec::new(),
    };
    for depth in 0..=max_len {
        if depth > 0 {
            let mut next = Vec::with_capacity(frontier.len() * 2);
            for (label, state) in &frontier {
                for (d, m) in tree::successors(b, AutomatonKind::Span, state) {
                    let mut extended = label.clone();
                    extended.push(d);
                    next.push((extended, m));
                }
                if next.len() > cap {
                    return Err(Error::FrontierCapExceeded { cap, depth });
                }
            }
            frontier = next;
        }
        for (label, state) in &frontier {
            report.words_checked += 1;
            let word = DigitWord::new(label.clone());
            let expected = crate::eval::eval_value(b, &word);
            let reached = BigRational::from_integer(state.clone().into());
            if expected != reached {
                report
                    .failures
                    .push(format!("label {word} evaluates to {expected} but reaches {state}"));
            }
            let canonical = tree::encode(b, state);
            if canonical.len() > word.len() {
                report.failures.push(format!(
                    "shortcut: |{word}| = {} beats the canonical length {} of {state}",
                    word.len(),
                    canonical.len()
                ));
                continue;
            }
            let mut padded = vec![0; word.len() - canonical.len()];
            padded.extend_from_slice(canonical.digits());
            if tree::run(b, AutomatonKind::Tree, &BigUint::zero(), &padded).as_ref() != Some(state)
            {
                report.failures.push(format!(
                    "zero-padded canonical word of {state} does not reach it in the tree"
                ));
            }
        }
        report.levels.push(SmallBaseLevel {
            depth,
            labels: frontier.len() as u64,
        });
    }
    Ok(report)
}
