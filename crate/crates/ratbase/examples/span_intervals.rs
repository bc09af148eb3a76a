//! Span geometry: exact rational enclosures for the value spread below each
//! state, the universal landmarks γ and ω, and constructive two-branch
//! witnesses.
//!
//! Run with: `cargo run --example span_intervals`

use num::BigUint;
use ratbase::base::Base;
use ratbase::real::decimal_string;
use ratbase::span::{gamma_omega, span_enclosure, two_branch_witness};

fn main() {
    let b = Base::new(7, 3).expect("7/3 is a valid base");
    const DEPTH: usize = 40;

    // γ (least possible span) and ω (the span of the root) bracket every
    // span in a sparse base; both are irrational, known only by enclosure.
    let gw = gamma_omega(&b, DEPTH);
    println!(
        "base {b}: γ ≥ {}, ω ≤ {}",
        decimal_string(gw.gamma.lo(), 12),
        decimal_string(gw.omega.hi(), 12)
    );

    println!("\nspan enclosures (truncated expansions bracketed at depth {DEPTH}):");
    for n in 0u64..=8 {
        let rec = span_enclosure(&b, &BigUint::from(n), DEPTH);
        println!(
            "  span({n}) ∈ [{}, {}]",
            decimal_string(rec.enclosure.lo(), 12),
            decimal_string(rec.enclosure.hi(), 12)
        );
    }

    // Below every state two branches separate by a definite gap — the span
    // set has no isolated points, and here is the certificate for state 5.
    let witness = two_branch_witness(&b, &BigUint::from(5u32), 64).expect("sparse base");
    println!(
        "\ntwo branches below 5 split at letter {}:",
        witness.split_index
    );
    println!(
        "  lower branch value ≤ {}",
        decimal_string(witness.lower.hi(), 12)
    );
    println!(
        "  upper branch value ≥ {}",
        decimal_string(witness.upper.lo(), 12)
    );
    println!(
        "  gap ≥ {}",
        decimal_string(&witness.gap_lower_bound(), 12)
    );
}
