//! Dimension bounds for the span set of a sparse base: two proved upper
//! bounds, a conjectured exact value (labeled as such), and the empirical
//! box-counting sequence.
//!
//! Run with: `cargo run --example dimension_bounds`

use ratbase::base::Base;
use ratbase::dim::{box_counting_estimate, hausdorff_upper_bounds};
use ratbase::real::decimal_string;
use ratbase::DEFAULT_FRONTIER_CAP;

fn report(b: &Base) {
    println!("base {b}:");
    let bounds = hausdorff_upper_bounds(b).expect("sparse base");
    for row in bounds.rows() {
        println!(
            "  {:<12} {:<36} = {}   [{}]",
            row.name,
            row.formula,
            decimal_string(row.value.lo(), 10),
            row.provenance
        );
    }
    let rows = box_counting_estimate(b, 12, DEFAULT_FRONTIER_CAP).expect("within cap");
    println!("  box-counting ln N_j / (j·ln z − ln ω):");
    for row in rows.iter().filter(|r| r.depth % 3 == 0 && r.depth > 0) {
        let ratio = row
            .ratio
            .as_ref()
            .map(|r| decimal_string(r.hi(), 10))
            .unwrap_or_else(|| "-".into());
        println!("    j = {:>2}: N_j = {:>5}, ratio ≤ {}", row.depth, row.labels, ratio);
    }
}

fn main() {
    report(&Base::new(7, 3).expect("valid"));
    println!();
    // 5/2 also carries a sharper two-step argument.
    report(&Base::new(5, 2).expect("valid"));
}
