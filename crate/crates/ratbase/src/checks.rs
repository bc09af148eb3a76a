//! Named, self-describing verification suites.
//!
//! Each suite exercises one family of identities from the theory at desk
//! scale — successor transduction, congruence structure, span geometry,
//! measure decay, dimension bounds — and returns a [`CheckReport`] with the
//! number of cases run and the first failing witness, if any. The `check`
//! subcommand of the CLI runs them by name; [`run_all`] is their union, and
//! the crate's acceptance tests pin each suite to fixed parameters.
//!
//! Every comparison in here is exact rational arithmetic; tolerances, where
//! a statement is asymptotic, are explicit named constants.

use num::{BigInt, BigRational, BigUint, One, Zero};

use crate::base::Base;
use crate::dim::{box_counting_estimate, hausdorff_upper_bounds};
use crate::eval::{eval_value, real_enclosure};
use crate::extremal::{
    extremal_prefix, mu_prefix, span_word_prefix, ExtremalKind,
};
use crate::span::{
    alpha_contraction, gamma_omega, intervals_for, measure_outer, measure_union, refine_words,
    small_base_checks, span_enclosure, two_branch_witness,
};
use crate::transducer::{delta, psi_table, transduce, transduce_inverse, PairLetter};
use crate::tree::{
    encode, incoming_path, predecessor, run, successors, tau, AutomatonKind,
};
use crate::words::{radix_compare, Digit, DigitWord, OmegaPrefix};
use crate::{NodeId, DEFAULT_FRONTIER_CAP};

use rand::Rng;
use rand::SeedableRng;
use rand_chacha::ChaCha8Rng;
use std::cmp::Ordering;
use std::collections::BTreeMap;

/// Outcome of one verification suite.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct CheckReport {
    /// Stable kebab-case suite name (also the CLI spelling).
    pub name: &'static str,
    /// Number of individual cases checked.
    pub cases: u64,
    /// Number of failing cases.
    pub failures: u64,
    /// Witness for the first failure, when any.
    pub first_failure: Option<String>,
    /// One-line description of what was covered.
    pub summary: String,
}

impl CheckReport {
    /// Whether every case passed.
    pub fn passed(&self) -> bool {
        self.failures == 0
    }

    /// A fixed-format, single-line rendering: `PASS`/`FAIL`, name, coverage.
    pub fn line(&self) -> String {
        if self.passed() {
            format!("PASS  {:<22} {} ({} cases)", self.name, self.summary, self.cases)
        } else {
            format!(
                "FAIL  {:<22} {} of {} cases failed; first: {}",
                self.name,
                self.failures,
                self.cases,
                self.first_failure.as_deref().unwrap_or("(no witness)")
            )
        }
    }
}

/// Case counter with first-failure capture.
struct Tally {
    name: &'static str,
    cases: u64,
    failures: u64,
    first: Option<String>,
}

impl Tally {
    fn new(name: &'static str) -> Self {
        Tally {
            name,
            cases: 0,
            failures: 0,
            first: None,
        }
    }

    fn case(&mut self, ok: bool, witness: impl FnOnce() -> String) {
        self.cases += 1;
        if !ok {
            self.failures += 1;
            if self.first.is_none() {
                self.first = Some(witness());
            }
        }
    }

    fn finish(self, summary: impl Into<String>) -> CheckReport {
        CheckReport {
            name: self.name,
            cases: self.cases,
            failures: self.failures,
            first_failure: self.first,
            summary: summary.into(),
        }
    }
}

/// The five bases every generic suite runs over: both interval-regime bases
/// (3/2 boundary, 4/3 with negative difference digits) and three sparse ones
/// (7/3, 5/2, 10/3).
pub fn standard_bases() -> Vec<Base> {
    [(3, 2), (4, 3), (7, 3), (5, 2), (10, 3)]
        .into_iter()
        .map(|(p, q)| Base::new(p, q).expect("standard bases are valid"))
        .collect()
}

/// The sparse (`p > 2q − 1`) subset of [`standard_bases`].
pub fn sparse_bases() -> Vec<Base> {
    standard_bases().into_iter().filter(Base::is_sparse).collect()
}

fn node(v: u64) -> NodeId {
    BigUint::from(v)
}

fn rational(num: i64, den: i64) -> BigRational {
    BigRational::new(num.into(), den.into())
}

/// All length-`k` labels of `kind`-runs from `n`, sorted.
fn labels_from(b: &Base, kind: AutomatonKind, n: &NodeId, k: usize) -> Vec<Vec<Digit>> {
    let mut acc = Vec::new();
    let mut stack = vec![(Vec::new(), n.clone())];
    while let Some((word, state)) = stack.pop() {
        if word.len() == k {
            acc.push(word);
            continue;
        }
        for (d, m) in successors(b, kind, &state) {
            let mut next = word.clone();
            next.push(d);
            stack.push((next, m));
        }
    }
    acc.sort();
    acc
}

/// The embedded worked examples for base 3/2: bottom, top and span word
/// prefixes of the states 1, 3 and 4.
pub fn golden_examples() -> CheckReport {
    let mut t = Tally::new("golden-examples");
    let b = Base::new(3, 2).expect("3/2 is valid");
    let expect = [
        (1u64, ExtremalKind::Bottom, "1011000"),
        (3, ExtremalKind::Bottom, "1100011"),
        (4, ExtremalKind::Bottom, "0010100"),
        (1, ExtremalKind::Top, "1221112"),
        (3, ExtremalKind::Top, "11212"),
        (4, ExtremalKind::Top, "21112"),
    ];
    for (n, kind, want) in expect {
        let got = extremal_prefix(&b, &node(n), kind, want.len()).to_string();
        t.case(got == want, || {
            format!("{kind:?} word of {n}: got {got}, want {want}")
        });
    }
    let spans = [(1u64, "0210112"), (3, "00212"), (4, "21011")];
    for (n, want) in spans {
        let got = span_word_prefix(&b, &node(n), want.len()).to_string();
        t.case(got == want, || {
            format!("span word of {n}: got {got}, want {want}")
        });
    }
    t.finish("base 3/2 worked-example word prefixes")
}

/// The flagship successor identity: started in state 0 on the bottom word
/// of `n`, the transducer writes the bottom word of `n + 1`.
pub fn successor_identity(n_max: u64, k: usize) -> CheckReport {
    let mut t = Tally::new("successor-identity");
    for b in standard_bases() {
        for n in 0..=n_max {
            let input = extremal_prefix(&b, &node(n), ExtremalKind::Bottom, k);
            let got = transduce(&b, &BigUint::zero(), &input).expect("bottom words are over B_q");
            let want = extremal_prefix(&b, &node(n + 1), ExtremalKind::Bottom, k);
            t.case(got == want, || {
                format!("base {b}, n = {n}: transduced {got}, bottom of {} is {want}", n + 1)
            });
        }
    }
    t.finish(format!("transducer = successor on bottom words, n ≤ {n_max}, k = {k}"))
}

/// The shifted successor identity: from state `i` the transducer maps the
/// bottom word of `n` to the bottom word of `n + i + 1`.
pub fn shifted_successor(i_max: u64, n_max: u64, k: usize) -> CheckReport {
    let mut t = Tally::new("shifted-successor");
    for b in standard_bases() {
        let bottoms: Vec<OmegaPrefix> = (0..=n_max + i_max + 1)
            .map(|n| extremal_prefix(&b, &node(n), ExtremalKind::Bottom, k))
            .collect();
        for n in 0..=n_max {
            for i in 0..=i_max {
                let got = transduce(&b, &node(i), &bottoms[n as usize])
                    .expect("bottom words are over B_q");
                let want = &bottoms[(n + i + 1) as usize];
                t.case(&got == want, || {
                    format!("base {b}, n = {n}, start state {i}: got {got}, want {want}")
                });
            }
        }
    }
    t.finish(format!(
        "shifted successor, i ≤ {i_max}, n ≤ {n_max}, k = {k}"
    ))
}

/// Span words label span-automaton runs from state 0.
pub fn span_labels(n_max: u64, k: usize) -> CheckReport {
    let mut t = Tally::new("span-labels");
    for b in standard_bases() {
        for n in 0..=n_max {
            let word = span_word_prefix(&b, &node(n), k);
            let ok = run(&b, AutomatonKind::Span, &BigUint::zero(), word.digits()).is_some();
            t.case(ok, || format!("base {b}: span word of {n} is not a run label: {word}"));
        }
    }
    t.finish(format!("span words run from 0, n ≤ {n_max}, k = {k}"))
}

/// The shifted difference identity: `top(n+i) ⊖ bottom(n)` labels a
/// span-automaton run from state `i`.
pub fn shifted_span_labels(i_max: u64, n_max: u64, k: usize) -> CheckReport {
    let mut t = Tally::new("shifted-span-labels");
    for b in standard_bases() {
        for n in 0..=n_max {
            let bottom = extremal_prefix(&b, &node(n), ExtremalKind::Bottom, k);
            for i in 0..=i_max {
                let top = extremal_prefix(&b, &node(n + i), ExtremalKind::Top, k);
                let diff: Vec<Digit> = top
                    .digits()
                    .iter()
                    .zip(bottom.digits())
                    .map(|(c, d)| c - d)
                    .collect();
                let ok = run(&b, AutomatonKind::Span, &node(i), &diff).is_some();
                t.case(ok, || {
                    format!(
                        "base {b}: top({}) ⊖ bottom({n}) does not run from state {i}",
                        n + i
                    )
                });
            }
        }
    }
    t.finish(format!(
        "shifted differences run from their shift state, i ≤ {i_max}, n ≤ {n_max}, k = {k}"
    ))
}

/// The letterwise shift `μ` carries the top word of `n` onto the bottom
/// word of `n + 1`.
pub fn top_bottom_shift(n_max: u64, k: usize) -> CheckReport {
    let mut t = Tally::new("top-bottom-shift");
    for b in standard_bases() {
        for n in 0..=n_max {
            let top = extremal_prefix(&b, &node(n), ExtremalKind::Top, k);
            let shifted = mu_prefix(&b, &top).expect("top words are over C_z");
            let want = extremal_prefix(&b, &node(n + 1), ExtremalKind::Bottom, k);
            t.case(shifted == want, || {
                format!("base {b}, n = {n}: μ(top) = {shifted} ≠ bottom({}) = {want}", n + 1)
            });
        }
    }
    t.finish(format!("μ(top(n)) = bottom(n+1), n ≤ {n_max}, k = {k}"))
}

/// Adjacent sibling edges `n →a m` and `n →(a+q) m+1` carry cones with a
/// common boundary value: the enclosures of `(a+q)·bottom(m+1)` and
/// `a·top(m)` intersect at every truncation depth.
pub fn sibling_value_coupling(n_max: u64, k: usize) -> CheckReport {
    let mut t = Tally::new("sibling-coupling");
    for b in standard_bases() {
        let lower = b.lower_alphabet();
        let upper = b.upper_alphabet();
        for n in 0..=n_max {
            for (a, m) in successors(&b, AutomatonKind::Tree, &node(n)) {
                if a + b.q() as Digit > (b.p() - 1) as Digit {
                    continue;
                }
                let mut low_digits = vec![a + b.q() as Digit];
                low_digits.extend_from_slice(
                    extremal_prefix(&b, &(&m + BigUint::one()), ExtremalKind::Bottom, k).digits(),
                );
                let mut high_digits = vec![a];
                high_digits
                    .extend_from_slice(extremal_prefix(&b, &m, ExtremalKind::Top, k).digits());
                let low = real_enclosure(&b, &OmegaPrefix::new(low_digits), lower.lo(), lower.hi())
                    .expect("alphabet bounds ordered");
                let high =
                    real_enclosure(&b, &OmegaPrefix::new(high_digits), upper.lo(), upper.hi())
                        .expect("alphabet bounds ordered");
                t.case(low.intersects(&high), || {
                    format!(
                        "base {b}, n = {n}, digit {a}: sibling cones certified disjoint — {} vs {}",
                        low, high
                    )
                });
            }
        }
    }
    t.finish(format!(
        "sibling cone boundaries meet, n ≤ {n_max}, k = {k}"
    ))
}

/// The radix order on canonical representations matches the integer order:
/// `m < n ⟺ ⟨m⟩ <rad ⟨n⟩`, checked over all pairs.
pub fn radix_order(n_max: u64) -> CheckReport {
    let mut t = Tally::new("radix-order");
    for b in standard_bases() {
        let words: Vec<DigitWord> = (0..=n_max).map(|n| encode(&b, &node(n))).collect();
        let mut bad = None;
        let mut pairs = 0u64;
        'outer: for m in 0..words.len() {
            for n in (m + 1)..words.len() {
                pairs += 1;
                if radix_compare(&words[m], &words[n]) != Ordering::Less {
                    bad = Some((m as u64, n as u64));
                    break 'outer;
                }
            }
        }
        t.case(bad.is_none(), || {
            let (m, n) = bad.expect("failure recorded");
            format!("base {b}: ⟨{m}⟩ = {} not <rad ⟨{n}⟩ = {}", words[m as usize], words[n as usize])
        });
        // Fold the pair count into the case count for honest reporting.
        t.cases += pairs - 1;
    }
    t.finish(format!("order transfer on all pairs m < n ≤ {n_max}"))
}

/// Any tree-run label from 0 evaluates to the state it reaches —
/// exhaustively over every admissible word up to a length, for the bases
/// with small numerators.
pub fn value_identity(len_max: usize) -> CheckReport {
    let mut t = Tally::new("value-identity");
    for b in standard_bases().into_iter().filter(|b| b.p() <= 5) {
        let mut stack = vec![(Vec::<Digit>::new(), BigUint::zero())];
        while let Some((word, state)) = stack.pop() {
            let evaluated = eval_value(&b, &DigitWord::new(word.clone()));
            let reached = BigRational::from_integer(BigInt::from(state.clone()));
            t.case(evaluated == reached, || {
                format!(
                    "base {b}: word {} evaluates to {evaluated}, runs to {state}",
                    DigitWord::new(word.clone())
                )
            });
            if word.len() < len_max {
                for (d, m) in successors(&b, AutomatonKind::Tree, &state) {
                    let mut next = word.clone();
                    next.push(d);
                    stack.push((next, m));
                }
            }
        }
    }
    t.finish(format!(
        "run endpoint = word value, exhaustive to length {len_max}, p ≤ 5"
    ))
}

/// Future congruence: two states admit the same length-`k` labels iff they
/// agree modulo `q^k` — equality inside a class, disjoint label sets across
/// classes.
pub fn congruence_future(n_max: u64, k_max: u32) -> CheckReport {
    let mut t = Tally::new("congruence-future");
    for b in standard_bases() {
        for k in 1..=k_max {
            let modulus = (b.q() as u128).pow(k) as u64;
            let mut by_class: BTreeMap<u64, (u64, Vec<Vec<Digit>>)> = BTreeMap::new();
            for n in 0..=n_max {
                let labels = labels_from(&b, AutomatonKind::Tree, &node(n), k as usize);
                match by_class.entry(n % modulus) {
                    std::collections::btree_map::Entry::Vacant(e) => {
                        e.insert((n, labels));
                    }
                    std::collections::btree_map::Entry::Occupied(e) => {
                        let (rep, rep_labels) = e.get();
                        t.case(&labels == rep_labels, || {
                            format!(
                                "base {b}, k = {k}: states {rep} and {n} are congruent mod {modulus} but admit different label sets"
                            )
                        });
                    }
                }
            }
            let classes: Vec<_> = by_class.into_iter().collect();
            for (i, (_, (rep_a, labels_a))) in classes.iter().enumerate() {
                for (_, (rep_b, labels_b)) in &classes[i + 1..] {
                    let overlap = labels_a.iter().any(|w| labels_b.binary_search(w).is_ok());
                    t.case(!overlap, || {
                        format!(
                            "base {b}, k = {k}: incongruent states {rep_a} and {rep_b} share an admissible label"
                        )
                    });
                }
            }
        }
    }
    t.finish(format!(
        "length-k labels ⟺ congruence mod q^k, n ≤ {n_max}, k ≤ {k_max}"
    ))
}

/// Past congruence: equal length-`k` incoming paths iff congruent modulo
/// `p^k`.
pub fn congruence_past(n_max: u64, k_max: u32) -> CheckReport {
    let mut t = Tally::new("congruence-past");
    for b in standard_bases() {
        for k in 1..=k_max {
            let modulus = (b.p() as u128).pow(k) as u64;
            let mut by_class: BTreeMap<u64, (u64, DigitWord)> = BTreeMap::new();
            let mut by_path: BTreeMap<DigitWord, u64> = BTreeMap::new();
            for m in 0..=n_max {
                let path = incoming_path(&b, &node(m), k as usize);
                match by_class.entry(m % modulus) {
                    std::collections::btree_map::Entry::Vacant(e) => {
                        if let Some(other) = by_path.insert(path.clone(), m) {
                            t.case(false, || {
                                format!(
                                    "base {b}, k = {k}: incongruent {other} and {m} share incoming path {path}"
                                )
                            });
                        } else {
                            t.case(true, String::new);
                        }
                        e.insert((m, path));
                    }
                    std::collections::btree_map::Entry::Occupied(e) => {
                        let (rep, rep_path) = e.get();
                        t.case(&path == rep_path, || {
                            format!(
                                "base {b}, k = {k}: {rep} ≡ {m} mod {modulus} but incoming paths differ: {rep_path} vs {path}"
                            )
                        });
                    }
                }
            }
        }
    }
    t.finish(format!(
        "incoming paths ⟺ congruence mod p^k, m ≤ {n_max}, k ≤ {k_max}"
    ))
}

/// Incoming paths biject every length-`p^k` value window onto the full set
/// of length-`k` digit words.
pub fn interval_bijection(k_max: u32, starts: &[u64]) -> CheckReport {
    let mut t = Tally::new("interval-bijection");
    for b in standard_bases() {
        for k in 1..=k_max {
            let window = (b.p() as u128).pow(k) as u64;
            for &start in starts {
                let mut seen = std::collections::BTreeSet::new();
                for m in start..start + window {
                    seen.insert(incoming_path(&b, &node(m), k as usize));
                }
                t.case(seen.len() as u64 == window, || {
                    format!(
                        "base {b}, k = {k}, window [{start}, {}): {} distinct paths, want {window}",
                        start + window,
                        seen.len()
                    )
                });
            }
        }
    }
    t.finish(format!(
        "value windows of size p^k biject onto digit words, k ≤ {k_max}"
    ))
}

/// No nonempty label of length ≤ `len_max` loops a state back to itself,
/// except the zero words at the root.
pub fn no_periodic_labels(n_max: u64, len_max: usize) -> CheckReport {
    let mut t = Tally::new("no-periodic-labels");
    for b in standard_bases() {
        for n in 0..=n_max {
            let start = node(n);
            let mut stack = vec![(Vec::<Digit>::new(), start.clone())];
            let mut ok = true;
            let mut witness = Vec::new();
            while let Some((word, state)) = stack.pop() {
                if !word.is_empty() && state == start {
                    let zero_word = word.iter().all(|&d| d == 0);
                    if !(n == 0 && zero_word) {
                        ok = false;
                        witness = word.clone();
                    }
                }
                if word.len() < len_max {
                    for (d, m) in successors(&b, AutomatonKind::Tree, &state) {
                        let mut next = word.clone();
                        next.push(d);
                        stack.push((next, m));
                    }
                }
            }
            t.case(ok, || {
                format!(
                    "base {b}: state {n} loops on {}",
                    DigitWord::new(witness.clone())
                )
            });
        }
    }
    t.finish(format!(
        "only the root loops, and only on zeros; n ≤ {n_max}, |u| ≤ {len_max}"
    ))
}

/// Every state has an outgoing edge, in the tree for every base and in the
/// span automaton for every regime.
pub fn no_dead_ends(n_max: u64) -> CheckReport {
    let mut t = Tally::new("no-dead-ends");
    for b in standard_bases() {
        for kind in [AutomatonKind::Tree, AutomatonKind::Span] {
            for n in 0..=n_max {
                let succ = successors(&b, kind, &node(n));
                t.case(!succ.is_empty(), || {
                    format!("base {b}: state {n} is a dead end in {kind:?}")
                });
                if kind == AutomatonKind::Tree {
                    let lo = b.floor_z() as usize;
                    let hi = b.ceil_z() as usize;
                    t.case((lo..=hi).contains(&succ.len()), || {
                        format!(
                            "base {b}: tree out-degree of {n} is {} ∉ [{lo}, {hi}]",
                            succ.len()
                        )
                    });
                }
            }
        }
    }
    t.finish(format!("no dead ends, out-degrees in range, n ≤ {n_max}"))
}

/// `predecessor` inverts every tree transition.
pub fn predecessor_inverts(n_max: u64) -> CheckReport {
    let mut t = Tally::new("predecessor-inverts");
    for b in standard_bases() {
        for n in 0..=n_max {
            let state = node(n);
            for (a, m) in successors(&b, AutomatonKind::Tree, &state) {
                let (back, digit) = predecessor(&b, &m);
                t.case(back == state && digit == a, || {
                    format!(
                        "base {b}: predecessor({m}) = ({back}, {digit}), expected ({n}, {a})"
                    )
                });
            }
            let (parent, digit) = predecessor(&b, &state);
            t.case(tau(&b, &parent, digit).as_ref() == Some(&state), || {
                format!("base {b}: predecessor({n}) does not step back to it")
            });
        }
    }
    t.finish(format!("predecessor inverts every edge, n ≤ {n_max}"))
}

/// Bottom and top prefixes are lexicographic extremes among all run labels
/// of the same length — exhaustively at small depth.
pub fn lex_extremality(n_max: u64, k: usize) -> CheckReport {
    let mut t = Tally::new("lex-extremality");
    for b in standard_bases() {
        for n in 0..=n_max {
            let state = node(n);
            let bottom = extremal_prefix(&b, &state, ExtremalKind::Bottom, k);
            let top = extremal_prefix(&b, &state, ExtremalKind::Top, k);
            for label in labels_from(&b, AutomatonKind::Tree, &state, k) {
                let ok = bottom.digits() <= label.as_slice() && label.as_slice() <= top.digits();
                t.case(ok, || {
                    format!(
                        "base {b}, state {n}: label {} escapes [{bottom}, {top}]",
                        DigitWord::new(label.clone())
                    )
                });
            }
        }
    }
    t.finish(format!(
        "greedy prefixes are lexicographic extremes, exhaustive n ≤ {n_max}, k = {k}"
    ))
}

/// The pair-substitution presentation of the transducer: ψ partitions
/// `B_q × B_q`, its pairs step exactly like their source digits, and each
/// input (resp. output) letter has exactly one defined continuation per
/// state.
pub fn transducer_structure(n_max: u64) -> CheckReport {
    let mut t = Tally::new("transducer-structure");
    for b in standard_bases() {
        let q = b.q() as usize;
        let table = psi_table(&b);
        let mut seen = std::collections::BTreeSet::new();
        let mut total = 0usize;
        for row in &table {
            for pair in &row.pairs {
                seen.insert((pair.input(), pair.output()));
                total += 1;
            }
        }
        t.case(total == q * q && seen.len() == q * q, || {
            format!("base {b}: ψ pairs do not partition B×B ({total} listed, {} distinct)", seen.len())
        });
        for n in 0..=n_max {
            let state = node(n);
            for row in &table {
                let stepped = tau(&b, &state, row.letter);
                for pair in &row.pairs {
                    let got = delta(&b, &state, pair);
                    t.case(got == stepped, || {
                        format!(
                            "base {b}, state {n}, digit {}: δ on {pair} disagrees with τ",
                            row.letter
                        )
                    });
                }
            }
            for x in 0..q as Digit {
                let outs = (0..q as Digit)
                    .filter(|&y| {
                        delta(&b, &state, &PairLetter::new(&b, x, y).expect("letters in B"))
                            .is_some()
                    })
                    .count();
                let ins = (0..q as Digit)
                    .filter(|&y| {
                        delta(&b, &state, &PairLetter::new(&b, y, x).expect("letters in B"))
                            .is_some()
                    })
                    .count();
                t.case(outs == 1 && ins == 1, || {
                    format!(
                        "base {b}, state {n}, letter {x}: {outs} outputs / {ins} inputs defined, want 1/1"
                    )
                });
            }
        }
    }
    t.finish(format!(
        "ψ partitions B×B and δ is locally bijective, n ≤ {n_max}"
    ))
}

/// Transduction is letter-by-letter: the image of a prefix is the prefix of
/// the image, and the inverse transducer undoes it.
pub fn transducer_prefixes(n_max: u64, k: usize) -> CheckReport {
    let mut t = Tally::new("transducer-prefixes");
    for b in standard_bases() {
        for n in 0..=n_max {
            let input = extremal_prefix(&b, &node(n), ExtremalKind::Bottom, k);
            let full = transduce(&b, &BigUint::zero(), &input).expect("bottom over B_q");
            let half = input.truncate(k / 2);
            let half_out = transduce(&b, &BigUint::zero(), &half).expect("bottom over B_q");
            t.case(
                half_out.digits() == &full.digits()[..k / 2],
                || format!("base {b}, n = {n}: prefix image is not an image prefix"),
            );
            let back = transduce_inverse(&b, &BigUint::zero(), &full).expect("output over B_q");
            t.case(back == input, || {
                format!("base {b}, n = {n}: inverse transduction does not recover the input")
            });
        }
    }
    t.finish(format!(
        "prefix-monotone and invertible transduction, n ≤ {n_max}, k = {k}"
    ))
}

/// The interval-regime report: exhaustive no-shortcut verification for the
/// two non-sparse standard bases.
pub fn interval_regime(max_len: usize) -> CheckReport {
    let mut t = Tally::new("interval-regime");
    for b in standard_bases().into_iter().filter(|b| !b.is_sparse()) {
        match small_base_checks(&b, max_len) {
            Ok(report) => {
                t.cases += report.words_checked;
                t.case(report.passed(), || {
                    format!(
                        "base {b}: {}",
                        report.failures.first().cloned().unwrap_or_default()
                    )
                });
            }
            Err(e) => t.case(false, || format!("base {b}: {e}")),
        }
    }
    t.finish(format!("interval-regime identities to length {max_len}"))
}

/// Measure-zero certificate for the sparse bases: the escape length and
/// contraction factor are as predicted, refinement outer measures decrease,
/// and every `i` levels contract by at least the certified `α`.
pub fn contraction_decay(k_enclosure: usize, steps: u32) -> CheckReport {
    let mut t = Tally::new("contraction-decay");
    let expected_escape: BTreeMap<(u64, u64), u32> =
        [((7, 3), 3), ((5, 2), 2), ((10, 3), 2)].into_iter().collect();
    for b in sparse_bases() {
        let contraction = match alpha_contraction(&b, k_enclosure) {
            Ok(c) => c,
            Err(e) => {
                t.case(false, || format!("base {b}: {e}"));
                continue;
            }
        };
        if let Some(want) = expected_escape.get(&(b.p(), b.q())) {
            t.case(contraction.escape_len == *want, || {
                format!(
                    "base {b}: escape length {} ≠ {want}",
                    contraction.escape_len
                )
            });
        }
        t.case(contraction.alpha.hi() < &BigRational::one(), || {
            format!("base {b}: α upper bound not below 1 at depth {k_enclosure}")
        });
        let measures: Vec<BigRational> = (0..=(contraction.escape_len * steps) as usize)
            .map(|j| {
                let words = refine_words(&b, j, DEFAULT_FRONTIER_CAP).expect("within cap");
                let records = intervals_for(&b, &words, k_enclosure).expect("sparse labels run in the tree");
                measure_outer(&records)
            })
            .collect();
        for j in 1..measures.len() {
            t.case(measures[j] <= measures[j - 1], || {
                format!("base {b}: outer measure grew from depth {} to {}", j - 1, j)
            });
        }
        let mut alpha_power = BigRational::one();
        for k in 1..=steps {
            alpha_power *= contraction.alpha.hi();
            let at = (contraction.escape_len * k) as usize;
            let bound = &alpha_power * &measures[0];
            t.case(measures[at] < bound, || {
                format!(
                    "base {b}: outer measure at depth {at} is {} ≥ α^{k}·U₀ = {}",
                    measures[at], bound
                )
            });
        }
    }
    t.finish(format!(
        "certified geometric decay over {steps} contraction steps, enclosures at {k_enclosure}"
    ))
}

/// Span positivity and the universal landmarks: every span enclosure sits
/// inside `[γ-lower, ω-upper]`, with `γ-lower > 0`.
pub fn span_bounds(n_max: u64, k: usize) -> CheckReport {
    let mut t = Tally::new("span-bounds");
    for b in sparse_bases() {
        let gw = gamma_omega(&b, k);
        t.case(gw.gamma.lo() > &BigRational::zero(), || {
            format!("base {b}: γ lower bound not positive at depth {k}")
        });
        for n in 0..=n_max {
            let rec = span_enclosure(&b, &node(n), k);
            let ok = rec.enclosure.lo() >= gw.gamma.lo() && rec.enclosure.hi() <= gw.omega.hi();
            t.case(ok, || {
                format!(
                    "base {b}, n = {n}: span enclosure {} escapes [γ-lo, ω-hi] = [{}, {}]",
                    rec.enclosure,
                    gw.gamma.lo(),
                    gw.omega.hi()
                )
            });
        }
    }
    t.finish(format!(
        "spans within [γ, ω] and γ > 0; sparse bases, n ≤ {n_max}, k = {k}"
    ))
}

/// Interval nesting and splitting: children tile their parent up to
/// enclosure slack, and sit inside it exactly.
pub fn interval_laws(len_max: usize, k: usize) -> CheckReport {
    let mut t = Tally::new("interval-laws");
    for (p, q) in [(3u64, 2u64), (7, 3)] {
        let b = Base::new(p, q).expect("valid base");
        let mut prefixes = vec![DigitWord::empty()];
        for j in 0..len_max {
            let level: Vec<DigitWord> = prefixes
                .iter()
                .filter(|u| u.len() == j)
                .cloned()
                .collect();
            for u in level {
                let endpoint = run(&b, AutomatonKind::Tree, &BigUint::zero(), u.digits())
                    .expect("prefix closed");
                for (d, _) in successors(&b, AutomatonKind::Tree, &endpoint) {
                    let mut digits = u.digits().to_vec();
                    digits.push(d);
                    prefixes.push(DigitWord::new(digits));
                }
            }
        }
        for u in &prefixes {
            let parent = &intervals_for(&b, std::slice::from_ref(u), k).expect("runs from 0")[0];
            let endpoint = parent.node.clone();
            let children_words: Vec<DigitWord> = successors(&b, AutomatonKind::Tree, &endpoint)
                .into_iter()
                .map(|(d, _)| {
                    let mut digits = u.digits().to_vec();
                    digits.push(d);
                    DigitWord::new(digits)
                })
                .collect();
            let children = intervals_for(&b, &children_words, k).expect("runs from 0");
            let mut slack = parent.endpoint_slack();
            for child in &children {
                t.case(
                    parent.outer_hull().contains_enclosure(&child.outer_hull()),
                    || format!("base {b}: I_{} not inside I_{}", child.label, parent.label),
                );
                slack += child.endpoint_slack();
            }
            let covered = measure_union(
                &children
                    .iter()
                    .map(|c| (c.left.lo().clone(), c.right.hi().clone()))
                    .collect::<Vec<_>>(),
            );
            t.case(parent.outer_length() <= covered + slack, || {
                format!(
                    "base {b}: children of I_{} leave more than the enclosure slack uncovered",
                    parent.label
                )
            });
        }
    }
    t.finish(format!(
        "interval nesting and splitting, |u| ≤ {len_max}, k = {k}, bases 3/2 and 7/3"
    ))
}

/// Value windows of size `p^j` admit at most `(2q−1)^j` incoming paths made
/// of difference digits.
pub fn suffix_windows(start_max: u64) -> CheckReport {
    let mut t = Tally::new("suffix-windows");
    for b in standard_bases() {
        let d = b.difference_alphabet();
        for j in 1..=2u32 {
            let window = (b.p() as u128).pow(j) as u64;
            let budget = ((2 * b.q() - 1) as u128).pow(j) as u64;
            for start in 0..=start_max {
                let count = (start..start + window)
                    .filter(|&m| {
                        incoming_path(&b, &node(m), j as usize)
                            .digits()
                            .iter()
                            .all(|&digit| d.contains(digit))
                    })
                    .count() as u64;
                t.case(count <= budget, || {
                    format!(
                        "base {b}, j = {j}, window [{start}, {}): {count} difference-digit paths > {budget}",
                        start + window
                    )
                });
            }
        }
    }
    t.finish(format!(
        "≤ (2q−1)^j difference-digit suffixes per p^j window, starts ≤ {start_max}"
    ))
}

/// Every state of a sparse base has two value-disjoint branches — no point
/// of the span set is isolated, witnessed constructively.
pub fn two_branch(n_max: u64, k: usize) -> CheckReport {
    let mut t = Tally::new("two-branch");
    for b in sparse_bases() {
        for n in 0..=n_max {
            match two_branch_witness(&b, &node(n), k) {
                Ok(w) => {
                    t.case(
                        w.lower.strictly_left_of(&w.upper),
                        || format!("base {b}, n = {n}: branch enclosures not disjoint"),
                    );
                }
                Err(e) => t.case(false, || format!("base {b}, n = {n}: {e}")),
            }
        }
    }
    t.finish(format!(
        "disjoint branch pairs below every state, sparse bases, n ≤ {n_max}, k = {k}"
    ))
}

/// Tolerance absorbing finite-depth effects in the box-counting sequence:
/// 1/20.
pub fn box_ratio_tolerance() -> BigRational {
    rational(1, 20)
}

/// Dimension reporting is internally consistent: for base 7/3 the late
/// box-counting ratios sit under the branching bound (within the published
/// tolerance), and the branching bound beats the word-count bound.
pub fn dimension_bounds_consistency() -> CheckReport {
    let mut t = Tally::new("dimension-bounds");
    let b = Base::new(7, 3).expect("valid base");
    let bounds = hausdorff_upper_bounds(&b).expect("7/3 is sparse");
    t.case(
        bounds.branching_bound.hi() < bounds.word_count_bound.lo(),
        || "base 7/3: branching bound not below word-count bound".to_string(),
    );
    let rows = box_counting_estimate(&b, 14, DEFAULT_FRONTIER_CAP).expect("within cap");
    let limit = bounds.branching_bound.lo() + box_ratio_tolerance();
    for row in rows.iter().take(15).skip(10) {
        match &row.ratio {
            Some(ratio) => t.case(ratio.hi() <= &limit, || {
                format!(
                    "base 7/3, depth {}: ratio exceeds branching bound + tolerance",
                    row.depth
                )
            }),
            None => t.case(false, || {
                format!("base 7/3, depth {}: ratio undefined", row.depth)
            }),
        }
    }
    let b52 = Base::new(5, 2).expect("valid base");
    let bounds52 = hausdorff_upper_bounds(&b52).expect("5/2 is sparse");
    t.case(bounds52.two_step_bound.is_some(), || {
        "base 5/2: two-step bound missing".to_string()
    });
    t.finish("box ratios under the branching bound; bound ordering for 7/3".to_string())
}

/// Randomized enclosure soundness: refining a span enclosure by ten more
/// letters always stays inside the coarser enclosure.
pub fn enclosure_soundness(samples: u32, seed: u64) -> CheckReport {
    let mut t = Tally::new("enclosure-soundness");
    let bases = standard_bases();
    let mut rng = ChaCha8Rng::seed_from_u64(seed);
    for _ in 0..samples {
        let b = bases[rng.random_range(0..bases.len())];
        let n = node(rng.random_range(0..1_000_000u64));
        let k = rng.random_range(0..=40usize);
        let coarse = span_enclosure(&b, &n, k);
        let fine = span_enclosure(&b, &n, k + 10);
        t.case(
            coarse.enclosure.contains_enclosure(&fine.enclosure),
            || format!("base {b}, n = {n}, k = {k}: refinement escaped the enclosure"),
        );
    }
    t.finish(format!("random refinement containment, {samples} samples, seed {seed}"))
}

/// Every suite at its reference parameters, in a stable order.
pub fn run_all() -> Vec<CheckReport> {
    suite_names()
        .iter()
        .map(|name| run_suite(name).expect("registered suite"))
        .collect()
}

/// The stable list of suite names understood by [`run_suite`].
pub fn suite_names() -> Vec<&'static str> {
    vec![
        "golden-examples",
        "successor-identity",
        "shifted-successor",
        "span-labels",
        "shifted-span-labels",
        "top-bottom-shift",
        "sibling-coupling",
        "radix-order",
        "value-identity",
        "congruence-future",
        "congruence-past",
        "interval-bijection",
        "no-periodic-labels",
        "no-dead-ends",
        "predecessor-inverts",
        "lex-extremality",
        "transducer-structure",
        "transducer-prefixes",
        "interval-regime",
        "contraction-decay",
        "span-bounds",
        "interval-laws",
        "suffix-windows",
        "two-branch",
        "dimension-bounds",
        "enclosure-soundness",
    ]
}

/// Runs one suite by name at its reference parameters (the ones the
/// acceptance tests pin). Returns `None` for unknown names.
pub fn run_suite(name: &str) -> Option<CheckReport> {
    Some(match name {
        "golden-examples" => golden_examples(),
        "successor-identity" => successor_identity(2000, 64),
        "shifted-successor" => shifted_successor(50, 500, 32),
        "span-labels" => span_labels(2000, 64),
        "shifted-span-labels" => shifted_span_labels(50, 50, 32),
        "top-bottom-shift" => top_bottom_shift(5000, 64),
        "sibling-coupling" => sibling_value_coupling(200, 64),
        "radix-order" => radix_order(5000),
        "value-identity" => value_identity(8),
        "congruence-future" => congruence_future(2000, 4),
        "congruence-past" => congruence_past(2000, 3),
        "interval-bijection" => interval_bijection(3, &[0, 1, 137]),
        "no-periodic-labels" => no_periodic_labels(2000, 4),
        "no-dead-ends" => no_dead_ends(2000),
        "predecessor-inverts" => predecessor_inverts(2000),
        "lex-extremality" => lex_extremality(8, 8),
        "transducer-structure" => transducer_structure(200),
        "transducer-prefixes" => transducer_prefixes(100, 32),
        "interval-regime" => interval_regime(12),
        "contraction-decay" => contraction_decay(40, 3),
        "span-bounds" => span_bounds(1000, 40),
        "interval-laws" => interval_laws(6, 40),
        "suffix-windows" => suffix_windows(500),
        "two-branch" => two_branch(200, 64),
        "dimension-bounds" => dimension_bounds_consistency(),
        "enclosure-soundness" => enclosure_soundness(10_000, 0x2026_0818),
        _ => return None,
    })
}
