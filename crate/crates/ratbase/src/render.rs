//! Graphviz DOT and SVG exports of the automata and the value fractal.
//!
//! Everything rendered here is produced from exact rationals; decimal
//! coordinates are rounded only at the final formatting step, at a
//! configurable number of significant digits. Output is deterministic:
//! states and edges are emitted in sorted order, so identical inputs yield
//! byte-identical documents.

use std::collections::{BTreeSet, VecDeque};
use std::fmt::Write as _;

use num::{BigRational, BigUint, Zero};

use crate::base::Base;
use crate::real::decimal_string;
use crate::tree::{successors, AutomatonKind};
use crate::words::Digit;
use crate::{transducer, Error, NodeId, Result};

/// A directed edge `source --digit--> target` of an explored automaton.
type Edge = (NodeId, Digit, NodeId);

/// Collects the states within `depth` steps of state 0 and every edge
/// leaving a state at distance < `depth`.
fn explore(
    b: &Base,
    kind: AutomatonKind,
    depth: usize,
    cap: usize,
) -> Result<(BTreeSet<NodeId>, BTreeSet<Edge>)> {
    let mut states = BTreeSet::new();
    let mut edges = BTreeSet::new();
    let mut queue = VecDeque::new();
    states.insert(BigUint::zero());
    queue.push_back((BigUint::zero(), 0usize));
    while let Some((state, dist)) = queue.pop_front() {
        if dist == depth {
            continue;
        }
        for (d, m) in successors(b, kind, &state) {
            edges.insert((state.clone(), d, m.clone()));
            if states.insert(m.clone()) {
                if states.len() > cap {
                    return Err(Error::FrontierCapExceeded {
                        cap,
                        depth: dist + 1,
                    });
                }
                queue.push_back((m, dist + 1));
            }
        }
    }
    Ok((states, edges))
}

/// Renders the representation tree or span automaton, cut at `depth` steps
/// from state 0, as a Graphviz DOT digraph. At most `cap` states are
/// explored.
///
/// # Errors
///
/// [`Error::FrontierCapExceeded`] when the cut holds more than `cap` states.
pub fn dot_automaton(b: &Base, kind: AutomatonKind, depth: usize, cap: usize) -> Result<String> {
    let (states, edges) = explore(b, kind, depth, cap)?;
    let name = match kind {
        AutomatonKind::Tree => "tree",
        AutomatonKind::Span => "span",
    };
    let mut out = String::new();
    let _ = writeln!(out, "digraph {}_{}_{} {{", name, b.p(), b.q());
    let _ = writeln!(out, "  rankdir=LR;");
    let _ = writeln!(out, "  node [shape=circle, fontname=\"monospace\"];");
    for s in &states {
        let _ = writeln!(out, "  \"{s}\";");
    }
    for (from, d, to) in &edges {
        let _ = writeln!(out, "  \"{from}\" -> \"{to}\" [label=\"{d}\"];");
    }
    out.push_str("}\n");
    Ok(out)
}

/// Renders the successor transducer, cut at `depth` steps from state 0, as a
/// Graphviz DOT digraph with `input/output` edge labels.
///
/// # Errors
///
/// [`Error::FrontierCapExceeded`] when the cut holds more than `cap` states.
pub fn dot_transducer(b: &Base, depth: usize, cap: usize) -> Result<String> {
    let mut states = BTreeSet::new();
    let mut edges: BTreeSet<(NodeId, Digit, Digit, NodeId)> = BTreeSet::new();
    let mut queue = VecDeque::new();
    states.insert(BigUint::zero());
    queue.push_back((BigUint::zero(), 0usize));
    while let Some((state, dist)) = queue.pop_front() {
        if dist == depth {
            continue;
        }
        for x in 0..b.q() as Digit {
            let (y, m) = transducer::step(b, &state, x);
            edges.insert((state.clone(), x, y, m.clone()));
            if states.insert(m.clone()) {
                if states.len() > cap {
                    return Err(Error::FrontierCapExceeded {
                        cap,
                        depth: dist + 1,
                    });
                }
                queue.push_back((m, dist + 1));
            }
        }
    }
    let mut out = String::new();
    let _ = writeln!(out, "digraph transducer_{}_{} {{", b.p(), b.q());
    let _ = writeln!(out, "  rankdir=LR;");
    let _ = writeln!(out, "  node [shape=circle, fontname=\"monospace\"];");
    for s in &states {
        let _ = writeln!(out, "  \"{s}\";");
    }
    for (from, x, y, to) in &edges {
        let _ = writeln!(out, "  \"{from}\" -> \"{to}\" [label=\"{x}/{y}\"];");
    }
    out.push_str("}\n");
    Ok(out)
}

/// Layout parameters for [`svg_value_tree`]. Layout constants are styling,
/// not mathematics: the mathematics lives in the `cy` coordinates.
#[derive(Debug, Clone)]
pub struct SvgOptions {
    /// Horizontal distance between consecutive depths, in pixels.
    pub x_step: u32,
    /// Vertical pixels per unit of value.
    pub y_scale: u32,
    /// Outer margin in pixels.
    pub margin: u32,
    /// Significant digits for decimal coordinates.
    pub precision: usize,
}

impl Default for SvgOptions {
    fn default() -> Self {
        SvgOptions {
            x_step: 140,
            y_scale: 400,
            margin: 40,
            precision: 12,
        }
    }
}

/// Renders the value fractal of the representation tree: each node with path
/// `u` from the root sits at `x = margin + |u|·x_step` and
/// `y = margin + y_scale·ρ(u·0^ω)`, labeled by its value. Edges whose digit
/// lies outside the difference alphabet — the ones deleted when passing to
/// the span automaton — are drawn dashed, which in a sparse base outlines
/// the Cantor structure of the surviving cone.
///
/// Coordinates come from exact rationals, rounded at `opts.precision`
/// significant digits; node ids encode the path (`p-2-1-0` for path `210`).
///
/// # Errors
///
/// [`Error::FrontierCapExceeded`] when the depth-`depth` tree holds more
/// than `cap` nodes.
pub fn svg_value_tree(b: &Base, depth: usize, opts: &SvgOptions, cap: usize) -> Result<String> {
    struct Pending {
        path: Vec<Digit>,
        state: NodeId,
        depth: usize,
        parent: Option<(u64, String, bool)>, // parent cx, cy, edge deleted?
    }

    let diff = b.difference_alphabet();
    let mut lines = Vec::new();
    let mut circles = Vec::new();
    let mut labels = Vec::new();
    let mut count = 0usize;
    let mut stack = vec![Pending {
        path: Vec::new(),
        state: BigUint::zero(),
        depth: 0,
        parent: None,
    }];
    while let Some(node) = stack.pop() {
        count += 1;
        if count > cap {
            return Err(Error::FrontierCapExceeded {
                cap,
                depth: node.depth,
            });
        }
        let cx = opts.margin as u64 + node.depth as u64 * opts.x_step as u64;
        let value = BigRational::from_integer(node.state.clone().into());
        let y = BigRational::from_integer((opts.margin as u64).into())
            + BigRational::from_integer((opts.y_scale as u64).into())
                * &value
                * b.z_pow_neg(node.depth);
        let cy = decimal_string(&y, opts.precision);
        if let Some((px, py, deleted)) = &node.parent {
            let class = if *deleted { "edge deleted" } else { "edge" };
            lines.push(format!(
                "    <line class=\"{class}\" x1=\"{px}\" y1=\"{py}\" x2=\"{cx}\" y2=\"{cy}\"/>"
            ));
        }
        let id = if node.path.is_empty() {
            "p".to_string()
        } else {
            let mut id = String::from("p");
            for d in &node.path {
                let _ = write!(id, "-{d}");
            }
            id
        };
        circles.push(format!(
            "    <circle class=\"node\" id=\"{id}\" cx=\"{cx}\" cy=\"{cy}\" r=\"3\"><title>{}</title></circle>",
            node.state
        ));
        labels.push(format!(
            "    <text class=\"label\" x=\"{}\" y=\"{cy}\">{}</text>",
            cx + 5,
            node.state
        ));
        if node.depth < depth {
            // Push descending so the lexicographically least child pops first.
            for (d, m) in successors(b, AutomatonKind::Tree, &node.state)
                .into_iter()
                .rev()
            {
                let mut path = node.path.clone();
                path.push(d);
                stack.push(Pending {
                    path,
                    state: m,
                    depth: node.depth + 1,
                    parent: Some((cx, cy.clone(), !diff.contains(d))),
                });
            }
        }
    }

    let width = 2 * opts.margin as u64 + depth as u64 * opts.x_step as u64;
    // Every node value ρ(u·0^ω) lies in [0, ω] ⊆ [0, (p−1)/(p−q)].
    let y_span = ((b.p() as u128 - 1) * opts.y_scale as u128).div_ceil((b.p() - b.q()) as u128);
    let height = 2 * opts.margin as u128 + y_span;
    let mut out = String::new();
    let _ = writeln!(
        out,
        "<svg xmlns=\"http://www.w3.org/2000/svg\" width=\"{width}\" height=\"{height}\" viewBox=\"0 0 {width} {height}\">"
    );
    let _ = writeln!(
        out,
        "  <title>value fractal of base {}/{} to depth {depth}</title>",
        b.p(),
        b.q()
    );
    out.push_str("  <style>\n");
    out.push_str("    line.edge { stroke: #56771e; stroke-width: 1; }\n");
    out.push_str("    line.edge.deleted { stroke: #b5541c; stroke-dasharray: 4 3; }\n");
    out.push_str("    circle.node { fill: #1f3a5f; }\n");
    out.push_str("    text.label { font: 9px monospace; fill: #444; }\n");
    out.push_str("  </style>\n");
    out.push_str("  <g>\n");
    for line in &lines {
        out.push_str(line);
        out.push('\n');
    }
    out.push_str("  </g>\n  <g>\n");
    for circle in &circles {
        out.push_str(circle);
        out.push('\n');
    }
    for label in &labels {
        out.push_str(label);
        out.push('\n');
    }
    out.push_str("  </g>\n</svg>\n");
    Ok(out)
}

/// Formats a tabular report as CSV with the given header, quoting cells
/// only when RFC 4180 requires it.
pub fn csv_table(header: &[&str], rows: &[Vec<String>]) -> String {
    fn cell(s: &str) -> String {
        if s.contains([',', '"', '\n', '\r']) {
            format!("\"{}\"", s.replace('"', "\"\""))
        } else {
            s.to_string()
        }
    }
    let mut out = String::new();
    out.push_str(&header.iter().map(|h| cell(h)).collect::<Vec<_>>().join(","));
    out.push('\n');
    for row in rows {
        out.push_str(&row.iter().map(|c| cell(c)).collect::<Vec<_>>().join(","));
        out.push('\n');
    }
    out
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn dot_tree_three_halves_depth_one() {
        let b = Base::new(3, 2).unwrap();
        let dot = dot_automaton(&b, AutomatonKind::Tree, 1, 64).unwrap();
        assert!(dot.starts_with("digraph tree_3_2 {"));
        assert!(dot.contains("\"0\" -> \"0\" [label=\"0\"];"));
        assert!(dot.contains("\"0\" -> \"1\" [label=\"2\"];"));
        assert!(!dot.contains("label=\"1\""), "digit 1 leaves no edge at 0");
        // Deterministic: same call, same bytes.
        assert_eq!(dot, dot_automaton(&b, AutomatonKind::Tree, 1, 64).unwrap());
    }

    #[test]
    fn dot_span_seven_thirds_swaps_alphabet() {
        let b = Base::new(7, 3).unwrap();
        let dot = dot_automaton(&b, AutomatonKind::Span, 1, 64).unwrap();
        assert!(dot.starts_with("digraph span_7_3 {"));
        assert!(dot.contains("\"0\" -> \"1\" [label=\"3\"];"));
        assert!(dot.contains("\"0\" -> \"2\" [label=\"6\"];"));
        assert!(!dot.contains("label=\"0\""), "0 is not a difference digit here");
    }

    #[test]
    fn dot_depth_zero_is_a_single_state() {
        let b = Base::new(3, 2).unwrap();
        let dot = dot_automaton(&b, AutomatonKind::Tree, 0, 8).unwrap();
        assert!(dot.contains("\"0\";"));
        assert!(!dot.contains("->"));
    }

    #[test]
    fn dot_transducer_three_halves() {
        let b = Base::new(3, 2).unwrap();
        let dot = dot_transducer(&b, 1, 64).unwrap();
        assert!(dot.starts_with("digraph transducer_3_2 {"));
        // At state 0, 2m = (y − x) + 1: input 0 → output 1 into state 1,
        // input 1 → output 0 back into state 0.
        assert!(dot.contains("\"0\" -> \"1\" [label=\"0/1\"];"));
        assert!(dot.contains("\"0\" -> \"0\" [label=\"1/0\"];"));
    }

    #[test]
    fn dot_cap_is_enforced() {
        let b = Base::new(3, 2).unwrap();
        assert!(matches!(
            dot_automaton(&b, AutomatonKind::Tree, 10, 5),
            Err(Error::FrontierCapExceeded { cap: 5, .. })
        ));
    }

    #[test]
    fn svg_root_sits_at_the_margin() {
        // A lone root at value 0: its ordinate is exactly the margin.
        let b = Base::new(3, 2).unwrap();
        let svg = svg_value_tree(&b, 0, &SvgOptions::default(), 16).unwrap();
        assert!(svg.contains("<circle class=\"node\" id=\"p\" cx=\"40\" cy=\"40\""));
        assert!(svg.contains("viewBox=\"0 0 80 880\""));
        assert!(!svg.contains("<line"));
    }

    #[test]
    fn svg_places_node_three_at_its_value_ordinate() {
        // Path 210 reaches value 3; ρ(210·0^ω) = 8/9 = 0.888…, so with the
        // default scale the ordinate is 40 + 400·8/9 = 395.555555556.
        let b = Base::new(3, 2).unwrap();
        let svg = svg_value_tree(&b, 6, &SvgOptions::default(), 1 << 12).unwrap();
        let needle = "id=\"p-2-1-0\" cx=\"460\" cy=\"395.555555556\"";
        assert!(svg.contains(needle), "missing `{needle}`");
    }

    #[test]
    fn svg_marks_deleted_edges_only_in_sparse_bases() {
        let sparse = Base::new(7, 3).unwrap();
        let svg = svg_value_tree(&sparse, 2, &SvgOptions::default(), 1 << 8).unwrap();
        assert!(
            svg.contains("class=\"edge deleted\""),
            "digits 0..=1 leave D in 7/3"
        );
        let small = Base::new(3, 2).unwrap();
        let svg = svg_value_tree(&small, 4, &SvgOptions::default(), 1 << 8).unwrap();
        assert!(
            !svg.contains("class=\"edge deleted\""),
            "D = A when p = 2q − 1"
        );
    }

    #[test]
    fn svg_cap_is_enforced() {
        let b = Base::new(3, 2).unwrap();
        assert!(matches!(
            svg_value_tree(&b, 8, &SvgOptions::default(), 3),
            Err(Error::FrontierCapExceeded { cap: 3, .. })
        ));
    }

    #[test]
    fn csv_quotes_only_when_needed() {
        assert_eq!(
            csv_table(&["a", "b"], &[vec!["1".into(), "2".into()]]),
            "a,b\n1,2\n"
        );
        assert_eq!(
            csv_table(&["w"], &[vec!["10,-1,3".into()]]),
            "w\n\"10,-1,3\"\n"
        );
    }
}
