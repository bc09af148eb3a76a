//! Interval refinement: in sparse bases the surviving intervals lose
//! measure geometrically (a Cantor construction); at the boundary p = 2q−1
//! nothing is ever deleted and the measure stays put.
//!
//! Run with: `cargo run --example cantor_refinement`

use ratbase::base::Base;
use ratbase::real::decimal_string;
use ratbase::span::{alpha_contraction, intervals_for, measure_outer, refine_words};
use ratbase::DEFAULT_FRONTIER_CAP;

fn table(b: &Base, j_max: usize) {
    println!("base {b}:");
    println!("  {:>5} {:>7} {:>16}", "depth", "labels", "outer measure");
    for j in 0..=j_max {
        let words = refine_words(b, j, DEFAULT_FRONTIER_CAP).expect("within cap");
        let records = intervals_for(b, &words, 40).expect("labels run in the tree");
        let outer = measure_outer(&records);
        println!(
            "  {j:>5} {:>7} {:>16}",
            words.len(),
            decimal_string(&outer, 10)
        );
    }
}

fn main() {
    // Sparse base: deletion at every level, measure → 0.
    let sparse = Base::new(7, 3).expect("7/3 is a valid base");
    table(&sparse, 8);

    let c = alpha_contraction(&sparse, 40).expect("7/3 is sparse");
    println!(
        "  certificate: every {} levels the outer measure shrinks by ≥ factor {}",
        c.escape_len,
        decimal_string(c.alpha.hi(), 10)
    );

    // Boundary base: the span set fills a whole interval; the refinement
    // never removes anything.
    println!();
    let boundary = Base::new(3, 2).expect("3/2 is a valid base");
    table(&boundary, 8);
    println!("  (constant: p = 2q − 1 keeps every child interval)");
}
