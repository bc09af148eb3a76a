//! The successor transducer: a letter-to-letter machine that rewrites the
//! bottom word of n into the bottom word of n+1 — addition of 1 performed
//! directly on infinite expansions.
//!
//! Run with: `cargo run --example transducer_successor`

use num::BigUint;
use ratbase::base::Base;
use ratbase::extremal::{extremal_prefix, ExtremalKind};
use ratbase::transducer::{psi_table, transduce};

fn main() {
    let b = Base::new(3, 2).expect("3/2 is a valid base");

    // ψ assigns to each difference digit the input/output letter pairs it
    // abbreviates; together the pairs tile all of B × B.
    println!("pair substitution ψ for base {b}:");
    for row in psi_table(&b) {
        let pairs: Vec<String> = row.pairs.iter().map(|p| p.to_string()).collect();
        println!("  ψ({}) = {{{}}}", row.letter, pairs.join(", "));
    }

    // From state 0 the machine computes the successor; iterating it walks
    // the bottom words one integer at a time.
    println!("\niterated successor from bottom(0):");
    let mut word = extremal_prefix(&b, &BigUint::ZERO, ExtremalKind::Bottom, 16);
    for n in 0u64..=4 {
        println!("  bottom({n}) = {word}");
        word = transduce(&b, &BigUint::ZERO, &word).expect("bottom words are over B");
    }

    // Starting in state i instead jumps ahead by i + 1.
    let bottom2 = extremal_prefix(&b, &BigUint::from(2u32), ExtremalKind::Bottom, 16);
    let jumped = transduce(&b, &BigUint::from(6u32), &bottom2).expect("over B");
    let bottom9 = extremal_prefix(&b, &BigUint::from(9u32), ExtremalKind::Bottom, 16);
    println!("\nfrom state 6: bottom(2) ↦ {jumped}");
    assert_eq!(jumped, bottom9, "2 + 6 + 1 = 9");
    println!("                        = bottom(9)  (2 + 6 + 1)");

    // A base with negative difference digits, for contrast.
    let small = Base::new(4, 3).expect("4/3 is a valid base");
    println!("\nψ for base {small} (note the negative digit):");
    for row in psi_table(&small) {
        let pairs: Vec<String> = row.pairs.iter().map(|p| p.to_string()).collect();
        println!("  ψ({}) = {{{}}}", row.letter, pairs.join(", "));
    }
}
