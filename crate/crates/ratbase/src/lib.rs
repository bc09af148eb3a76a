//! Exact arithmetic for positional numeration in a rational base `z = p/q`.
//!
//! # Overview
//!
//! Fix two coprime integers `p > q > 1` and write `z = p/q`. Every natural
//! number `m` has a unique finite representation over the digit alphabet
//! `A_p = {0, 1, …, p−1}`: the last digit of `m` is the remainder `a` in the
//! Euclidean division `q·m = p·n + a`, and the rest of the word is the
//! representation of `n`. Equivalently, the word `a_k a_{k−1} … a_0` stands
//! for the value
//!
//! ```text
//! π(a_k … a_0) = Σ_i (a_i / q) · z^i        (i counted from the right)
//! ```
//!
//! Unlike integer bases, the language of all representations is neither
//! regular nor context-free, and infinite words over `A_p` evaluated by the
//! convergent series `ρ(a_1 a_2 …) = Σ_{i≥1} (a_i/q) z^{−i}` tile the reals in
//! a surprisingly intricate way. This crate is a toolkit for exploring that
//! structure with *exact* rational arithmetic end to end:
//!
//! - [`base`] — validated bases `p/q` and their digit alphabets `A_p`
//!   (all digits), `B_q = {0,…,q−1}` (lower), `C_z = {p−q,…,p−1}` (upper), and
//!   the difference alphabet `D_z = {p−2q+1,…,p−1}`.
//! - [`words`] — finite digit words and prefixes of right-infinite words,
//!   radix/lexicographic orders, digitwise sums and differences, compact
//!   string forms, JSON-friendly serialization.
//! - [`eval`] — the evaluation maps `π` and `ρ` plus sound interval
//!   enclosures for truncated infinite words.
//! - [`tree`] — the representation tree `T_z` and the span automaton `S_z`
//!   as lazy infinite automata: transitions, runs, encoding, the unique
//!   incoming edge of every state, bounded-depth state counts, and the least
//!   state admitting a given path.
//! - [`extremal`] — the lexicographically least (“bottom”) and greatest
//!   (“top”) infinite branches below each node, span-words, and the
//!   letter map `μ(c) = c − (p−q)`.
//! - [`transducer`] — an online, letter-to-letter successor transducer that
//!   rewrites the bottom word of `n` into the bottom word of `n + i + 1`
//!   while reading it, together with its pair-alphabet presentation `ψ`.
//! - [`span`] — span enclosures `γ_z ≤ span(n) ≤ ω_z`, value intervals of
//!   subtrees, refinement generations of the span automaton, outer measures,
//!   and the contraction certificate separating the interval regime
//!   (`p ≤ 2q−1`) from the Cantor-like regime (`p > 2q−1`).
//! - [`dim`] — rigorous logarithm enclosures, upper bounds for the Hausdorff
//!   dimension of the span set, and box-counting ratio tables.
//! - [`render`] — deterministic DOT export for the automata and transducer,
//!   and an exact-coordinate SVG drawing of the representation tree embedded
//!   by real value.
//! - [`checks`] — named, self-verifying invariant suites over all of the
//!   above, shared by the test suites and the `ratbase check` subcommand.
//!
//! # Quick start
//!
//! ```
//! use ratbase::{Base, tree, extremal, eval};
//! use num::BigUint;
//!
//! let b = Base::new(3, 2)?;                       // z = 3/2
//! let four = BigUint::from(4u32);
//!
//! // 4 is written "212": π(212) = (2/2)·(3/2)² + (1/2)·(3/2) + 2/2 = 4.
//! let w = tree::encode(&b, &four);
//! assert_eq!(w.to_string(), "212");
//! assert_eq!(eval::eval_value(&b, &w), num::BigRational::from_integer(4.into()));
//!
//! // The lexicographically least infinite branch below node 1 starts 1011000…
//! let bottom = extremal::extremal_prefix(&b, &BigUint::from(1u32), extremal::ExtremalKind::Bottom, 7);
//! assert_eq!(bottom.to_string(), "1011000");
//! # Ok::<(), ratbase::Error>(())
//! ```
//!
//! # Exactness policy
//!
//! Every mathematical quantity is computed over `num::BigUint` /
//! `num::BigRational`. Floating point appears nowhere in the math; decimal
//! strings are produced only at the reporting boundary, by explicit rounding
//! of exact rationals ([`real::decimal_string`]). Quantities that are limits
//! of infinite series are returned as [`real::RealEnclosure`] values — closed
//! intervals with exact rational endpoints that provably contain the limit —
//! and comparisons are made on enclosure endpoints, never on approximations.
//!
//! # Command line
//!
//! The `ratbase` binary exposes the library: `convert` between integers and
//! words, `word` for bottom/top/span prefixes, `transduce` for the successor
//! transducer (pass `--psi-table` for its pair-alphabet presentation),
//! `refine` for refinement generations and outer measures, `dim` for
//! dimension bounds and
//! box-counting ratios, `render` for DOT/SVG export, and `check` to run the
//! invariant suites. See `ratbase --help`.

#![warn(missing_docs)]
#![warn(missing_debug_implementations)]

pub mod base;
pub mod checks;
pub mod dim;
pub mod eval;
pub mod extremal;
pub mod real;
pub mod render;
pub mod span;
pub mod transducer;
pub mod tree;
pub mod words;

pub use base::{Base, DigitRange};
pub use real::RealEnclosure;
pub use words::{Digit, DigitWord, OmegaPrefix};

/// States of the representation tree and span automaton are arbitrary
/// precision natural numbers; the state *is* the numeric value it represents.
pub type NodeId = num::BigUint;

/// Default truncation depth for interval enclosures of infinite words.
///
/// At depth `k` an enclosure has width `((dmax−dmin)/q)·z^{−k}/(z−1)`; for
/// every admissible base this is far below `10^{-6}` at `k = 40`, while the
/// arithmetic still involves only modest numerators and denominators.
pub const DEFAULT_ENCLOSURE_DEPTH: usize = 40;

/// Default bound on breadth-first frontier sizes (and on rendered state
/// counts). Explorations that would exceed it fail with
/// [`Error::FrontierCapExceeded`] instead of exhausting memory.
pub const DEFAULT_FRONTIER_CAP: usize = 1 << 20;

/// Errors reported by this crate.
#[derive(Debug, Clone, PartialEq, Eq, thiserror::Error)]
pub enum Error {
    /// The base parameters share a common factor.
    #[error("base {p}/{q} rejected: p and q must be coprime")]
    BaseNotCoprime {
        /// Proposed numerator.
        p: u64,
        /// Proposed denominator.
        q: u64,
    },

    /// The base parameters are not ordered `p > q > 1`.
    #[error("base {p}/{q} rejected: need p > q > 1")]
    BaseOrder {
        /// Proposed numerator.
        p: u64,
        /// Proposed denominator.
        q: u64,
    },

    /// The base parameters exceed the supported range.
    #[error("base {p}/{q} rejected: parameters larger than {max} are not supported")]
    BaseTooLarge {
        /// Proposed numerator.
        p: u64,
        /// Proposed denominator.
        q: u64,
        /// Largest accepted parameter value.
        max: u64,
    },

    /// A base string was not of the form `p/q`.
    #[error("cannot parse {input:?} as a base; expected \"p/q\" with integers p > q > 1")]
    BaseParse {
        /// The offending input.
        input: String,
    },

    /// A digit fell outside the alphabet required by an operation.
    #[error("digit {digit} outside {alphabet} = {{{lo}, …, {hi}}}")]
    DigitOutOfRange {
        /// The offending digit.
        digit: Digit,
        /// Name of the required alphabet (`A_p`, `B_q`, `C_z` or `D_z`).
        alphabet: &'static str,
        /// Smallest allowed digit.
        lo: Digit,
        /// Largest allowed digit.
        hi: Digit,
    },

    /// Two words that must have equal length do not.
    #[error("length mismatch: {left} vs {right}")]
    LengthMismatch {
        /// Length of the left operand.
        left: usize,
        /// Length of the right operand.
        right: usize,
    },

    /// Digit bounds for an enclosure were reversed.
    #[error("digit bounds reversed: dmin {dmin} > dmax {dmax}")]
    DigitBoundsReversed {
        /// Proposed lower digit bound.
        dmin: Digit,
        /// Proposed upper digit bound.
        dmax: Digit,
    },

    /// A breadth-first exploration grew past the configured cap.
    #[error("frontier cap {cap} exceeded at depth {depth}")]
    FrontierCapExceeded {
        /// The configured cap.
        cap: usize,
        /// Depth at which the frontier overflowed.
        depth: usize,
    },

    /// An analysis requires the other base regime.
    #[error("base {p}/{q} is outside the required regime: needs {need}")]
    WrongRegime {
        /// Description of the required regime.
        need: &'static str,
        /// Numerator of the rejected base.
        p: u64,
        /// Denominator of the rejected base.
        q: u64,
    },

    /// A word does not label a run of the representation tree from 0.
    #[error("word {label:?} does not label a path of the representation tree from 0")]
    NotATreePath {
        /// Compact form of the offending word.
        label: String,
    },

    /// A digit word string could not be parsed.
    #[error("cannot parse {input:?} as a digit word: {reason}")]
    WordParse {
        /// The offending input.
        input: String,
        /// Why parsing failed.
        reason: String,
    },

    /// A logarithm of a non-positive rational was requested.
    #[error("logarithm undefined for non-positive value {value}")]
    NonPositiveLog {
        /// The offending value, as `numerator/denominator`.
        value: String,
    },

    /// A bounded search ended without finding the object it certifies.
    #[error("search for {what} exhausted within depth {within}")]
    SearchExhausted {
        /// What was searched for.
        what: String,
        /// The search bound.
        within: usize,
    },
}

/// Convenient result alias for fallible operations of this crate.
pub type Result<T> = std::result::Result<T, Error>;
