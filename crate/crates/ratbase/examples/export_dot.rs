//! DOT export of the representation tree, the span automaton, and the
//! successor transducer — deterministic output ready for Graphviz.
//!
//! Run with: `cargo run --example export_dot`

use ratbase::base::Base;
use ratbase::render::{dot_automaton, dot_transducer};
use ratbase::tree::AutomatonKind;

fn main() {
    let out_dir = std::env::temp_dir().join("ratbase_dot");
    std::fs::create_dir_all(&out_dir).expect("create output directory");

    let b32 = Base::new(3, 2).expect("valid");
    let b73 = Base::new(7, 3).expect("valid");

    let jobs: Vec<(&str, String)> = vec![
        (
            "tree_3_2.dot",
            dot_automaton(&b32, AutomatonKind::Tree, 4, 1 << 12).expect("within cap"),
        ),
        (
            "span_7_3.dot",
            dot_automaton(&b73, AutomatonKind::Span, 5, 1 << 12).expect("within cap"),
        ),
        (
            "transducer_3_2.dot",
            dot_transducer(&b32, 4, 1 << 12).expect("within cap"),
        ),
    ];

    for (name, dot) in jobs {
        let path = out_dir.join(name);
        std::fs::write(&path, &dot).expect("write DOT file");
        let edges = dot.lines().filter(|l| l.contains("->")).count();
        println!("wrote {} ({} edges)", path.display(), edges);
    }
    println!("\nrender with e.g.: dot -Tsvg tree_3_2.dot -o tree_3_2.svg");
}
