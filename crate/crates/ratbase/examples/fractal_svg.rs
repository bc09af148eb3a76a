//! SVG rendering of the value tree: every node sits at the exact rational
//! ordinate of its branch value, so the picture *is* the number system —
//! and in sparse bases the deleted transitions show as dashed edges.
//!
//! Run with: `cargo run --example fractal_svg`

use ratbase::base::Base;
use ratbase::render::{svg_value_tree, SvgOptions};

fn main() {
    let out_dir = std::env::temp_dir().join("ratbase_svg");
    std::fs::create_dir_all(&out_dir).expect("create output directory");

    let opts = SvgOptions::default();
    for (p, q, depth) in [(3u64, 2u64, 7usize), (7, 3, 5)] {
        let b = Base::new(p, q).expect("valid base");
        let svg = svg_value_tree(&b, depth, &opts, 1 << 14).expect("within cap");
        let path = out_dir.join(format!("values_{p}_{q}.svg"));
        std::fs::write(&path, &svg).expect("write SVG");
        let nodes = svg.matches("<circle").count();
        let dashed = svg.matches("class=\"edge deleted\"").count();
        println!(
            "wrote {} ({nodes} nodes, {dashed} deleted-edge overlays)",
            path.display()
        );
    }
}
