//! Independent oracles for the integration tests.
//!
//! Everything here is deliberately written from the defining equations, not
//! by calling back into the library's own traversal code, so a bug in the
//! library cannot hide behind itself: representations come from repeated
//! Euclidean division, extremal words from brute-force minimization over all
//! admissible digits, and transduction from routing through the ψ pair sets.

use num::{BigInt, BigRational, BigUint, Zero};

use ratbase::base::Base;
use ratbase::words::Digit;

/// `⟨n⟩` by repeated Euclidean division of `q·n` by `p`.
pub fn encode_oracle(b: &Base, n: u64) -> Vec<Digit> {
    let (p, q) = (b.p() as u128, b.q() as u128);
    let mut digits = Vec::new();
    let mut m = n as u128;
    while m != 0 {
        let t = q * m;
        digits.push((t % p) as Digit);
        m = t / p;
    }
    digits.reverse();
    digits
}

/// The transition relation, straight from `q·m = p·n + a` (digits may be
/// negative in the difference alphabet of small bases).
fn step_oracle(b: &Base, n: &BigUint, a: Digit) -> Option<BigUint> {
    let scaled = BigInt::from(n.clone()) * b.p() + BigInt::from(a);
    if scaled < BigInt::zero() || &scaled % b.q() != BigInt::zero() {
        return None;
    }
    (scaled / b.q()).to_biguint()
}

/// Brute-force extremal word: at each state take the smallest (or largest)
/// admissible digit over the *whole* digit alphabet, rather than using the
/// library's residue-window shortcut.
pub fn extremal_oracle(b: &Base, n: u64, largest: bool, k: usize) -> Vec<Digit> {
    let mut state = BigUint::from(n);
    let mut word = Vec::with_capacity(k);
    for _ in 0..k {
        let admissible: Vec<(Digit, BigUint)> = (0..b.p() as Digit)
            .filter_map(|a| step_oracle(b, &state, a).map(|m| (a, m)))
            .collect();
        let (digit, next) = if largest {
            admissible.into_iter().next_back().expect("no dead ends")
        } else {
            admissible.into_iter().next().expect("no dead ends")
        };
        word.push(digit);
        state = next;
    }
    word
}

/// Whether `word` labels a (tree) run from `n`.
pub fn runs_from(b: &Base, n: u64, word: &[Digit]) -> bool {
    let full = b.full_alphabet();
    let mut state = BigUint::from(n);
    for &a in word {
        if !full.contains(a) {
            return false;
        }
        match step_oracle(b, &state, a) {
            Some(next) => state = next,
            None => return false,
        }
    }
    true
}

/// Least state from which `word` labels a run, by upward scan (`None` if
/// none exists below `limit`).
pub fn min_node_oracle(b: &Base, word: &[Digit], limit: u64) -> Option<u64> {
    (0..limit).find(|&n| runs_from(b, n, word))
}

/// Transduction routed through the ψ pair sets: at each step find the
/// unique difference digit whose ψ-set contains a pair with the given
/// input letter and which is admissible at the current state.
pub fn transduce_oracle(b: &Base, start: u64, input: &[Digit]) -> Vec<Digit> {
    let middle = (b.p() - b.q()) as Digit;
    let mut state = BigUint::from(start);
    let mut output = Vec::with_capacity(input.len());
    for &x in input {
        let mut chosen = None;
        for d in b.difference_alphabet().iter() {
            let y = x + d - middle; // output − input = d − (p − q)
            if y < 0 || y >= b.q() as Digit {
                continue;
            }
            if let Some(next) = step_oracle(b, &state, d) {
                assert!(
                    chosen.is_none(),
                    "ψ routing must be deterministic at state {state}"
                );
                chosen = Some((y, next));
            }
        }
        let (y, next) = chosen.expect("transducer input must have a continuation");
        output.push(y);
        state = next;
    }
    output
}

/// `π(u)`: the value of a digit word, summed positionally (no Horner).
pub fn eval_oracle(b: &Base, word: &[Digit]) -> BigRational {
    let z = b.z();
    let q = BigRational::from_integer((b.q() as i64).into());
    let mut acc = BigRational::zero();
    let mut weight = BigRational::from_integer(1.into()) / &q;
    for &d in word.iter().rev() {
        acc += BigRational::from_integer(d.into()) * &weight;
        weight *= &z;
    }
    acc
}
