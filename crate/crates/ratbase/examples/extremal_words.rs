//! Bottom, top, and span words: the lexicographic extremes of the infinite
//! branches below a state, and their digitwise difference.
//!
//! Run with: `cargo run --example extremal_words`

use num::BigUint;
use ratbase::base::Base;
use ratbase::extremal::{extremal_prefix, mu_prefix, span_word_prefix, ExtremalKind};

fn main() {
    let b = Base::new(3, 2).expect("3/2 is a valid base");
    println!(
        "base {b}: bottom words use B = {}, top words use C = {}, spans use D = {}",
        b.lower_alphabet(),
        b.upper_alphabet(),
        b.difference_alphabet()
    );

    println!("\n node  bottom        top           span (top ⊖ bottom)");
    for n in 0u64..=6 {
        let state = BigUint::from(n);
        let bottom = extremal_prefix(&b, &state, ExtremalKind::Bottom, 12);
        let top = extremal_prefix(&b, &state, ExtremalKind::Top, 12);
        let span = span_word_prefix(&b, &state, 12);
        println!("  {n:>3}  {bottom}  {top}  {span}");
    }

    // The letterwise shift μ(d) = d − (p − q) maps the top word of n onto
    // the bottom word of n + 1: the two branches interleave seamlessly.
    let top4 = extremal_prefix(&b, &BigUint::from(4u32), ExtremalKind::Top, 12);
    let shifted = mu_prefix(&b, &top4).expect("top words stay in C");
    let bottom5 = extremal_prefix(&b, &BigUint::from(5u32), ExtremalKind::Bottom, 12);
    println!("\nμ(top(4)) = {shifted}");
    println!("bottom(5) = {bottom5}");
    assert_eq!(shifted, bottom5);
}
