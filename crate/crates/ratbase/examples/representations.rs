//! Integer representations in a rational base: encoding, evaluation, and
//! the order-preserving radix comparison.
//!
//! Run with: `cargo run --example representations`

use num::BigUint;
use ratbase::base::Base;
use ratbase::eval::eval_value;
use ratbase::tree::{encode, incoming_path, run, AutomatonKind};
use ratbase::words::radix_compare;

fn main() {
    let b = Base::new(3, 2).expect("3/2 is a valid base");
    println!("base z = {b}  (digits {})", b.full_alphabet());

    println!("\nfirst representations:");
    for n in 0u64..=12 {
        let word = encode(&b, &BigUint::from(n));
        println!("  ⟨{n:>2}⟩ = {word}");
    }

    // Evaluation inverts encoding, and running the word from the root of the
    // representation tree arrives back at the integer.
    let n = BigUint::from(4u32);
    let word = encode(&b, &n);
    assert_eq!(eval_value(&b, &word).to_integer(), 4.into());
    assert_eq!(
        run(&b, AutomatonKind::Tree, &BigUint::ZERO, word.digits()),
        Some(n)
    );
    println!("\n⟨4⟩ = {word}, π({word}) = 4, and 212 runs 0 → 4 in the tree");

    // Radix order (length first, then lexicographic) mirrors integer order.
    let w9 = encode(&b, &BigUint::from(9u32));
    let w10 = encode(&b, &BigUint::from(10u32));
    println!(
        "\n⟨9⟩ = {w9} {} ⟨10⟩ = {w10}",
        match radix_compare(&w9, &w10) {
            std::cmp::Ordering::Less => "<rad",
            std::cmp::Ordering::Equal => "=",
            std::cmp::Ordering::Greater => ">rad",
        }
    );

    // The last k digits (zero-padded) identify an integer modulo p^k.
    println!("\nlength-3 incoming paths (suffixes of the representation):");
    for n in 21u64..=27 {
        println!("  {n}: {}", incoming_path(&b, &BigUint::from(n), 3));
    }
}
