//! Command-line front end for the `ratbase` library.
//!
//! Every subcommand is a thin, deterministic wrapper over library calls:
//! `convert` between integers and digit words, `word` for extremal and span
//! word prefixes, `transduce` for the successor transducer, `refine` for the
//! span-set interval table, `dim` for dimension bounds, `check` for the named
//! verification suites, and `render` for DOT graphs and the value-tree SVG.
//!
//! All numeric fields in JSON output are strings (decimal or `num/den`) so
//! that no exactness is lost in transport.

use std::fmt::Write as _;
use std::path::PathBuf;
use std::str::FromStr;

use anyhow::{anyhow, bail, Context};
use clap::{Parser, Subcommand, ValueEnum};
use num::{BigRational, BigUint, One};
use serde_json::{json, Value};

use ratbase::base::Base;
use ratbase::checks;
use ratbase::dim::{box_counting_estimate, hausdorff_upper_bounds, BoxCountRow};
use ratbase::eval::eval_value;
use ratbase::extremal::{extremal_prefix, span_word_prefix, ExtremalKind};
use ratbase::real::{decimal_string, fraction_string, RealEnclosure};
use ratbase::render::{csv_table, dot_automaton, dot_transducer, svg_value_tree, SvgOptions};
use ratbase::span::{alpha_contraction, intervals_for, measure_outer, refine_words};
use ratbase::transducer::{psi_table, transduce};
use ratbase::tree::{encode, AutomatonKind};
use ratbase::words::DigitWord;
use ratbase::{NodeId, DEFAULT_ENCLOSURE_DEPTH, DEFAULT_FRONTIER_CAP};

/// Exact arithmetic for rational-base numeration systems.
#[derive(Debug, Parser)]
#[command(name = "ratbase", version, about)]
struct Cli {
    /// Numeration base as "p/q" with coprime p > q > 1, e.g. "3/2".
    #[arg(long, global = true, value_name = "P/Q")]
    base: Option<String>,

    /// Exploration depth (refinement levels, automaton depth, box-count depth).
    #[arg(long, global = true, value_name = "K")]
    depth: Option<usize>,

    /// Word prefix length / enclosure truncation depth (default 40).
    #[arg(long, global = true, value_name = "K")]
    prefix_len: Option<usize>,

    /// Output format; each command defaults to its natural one.
    #[arg(long, global = true, value_enum)]
    format: Option<Format>,

    /// Write output to a file instead of stdout.
    #[arg(long, global = true, value_name = "PATH")]
    out: Option<PathBuf>,

    /// Cap on enumerated states/labels per exploration.
    #[arg(long, global = true, value_name = "N", env = "RATBASE_FRONTIER_CAP")]
    frontier_cap: Option<usize>,

    /// Significant digits for decimal renderings of exact rationals.
    #[arg(long, global = true, value_name = "D", default_value_t = 12)]
    precision: usize,

    /// Cross-check command output against an independent library identity.
    #[arg(long, global = true)]
    verify: bool,

    #[command(subcommand)]
    command: Command,
}

#[derive(Debug, Clone, Copy, PartialEq, Eq, ValueEnum)]
enum Format {
    Text,
    Json,
    Csv,
    Dot,
    Svg,
}

#[derive(Debug, Clone, Copy, PartialEq, Eq, ValueEnum)]
enum WordKindArg {
    Bottom,
    Top,
    Span,
}

#[derive(Debug, Clone, Copy, PartialEq, Eq, ValueEnum)]
enum RenderKind {
    Tree,
    Span,
    Transducer,
    Fractal,
}

#[derive(Debug, Subcommand)]
enum Command {
    /// Convert an integer to its digit word, or evaluate a digit word.
    Convert {
        /// Integer to encode (any size).
        #[arg(long, value_name = "N", conflicts_with = "word")]
        int: Option<String>,
        /// Digit word to evaluate (e.g. "212" or "10,11,3").
        #[arg(long, value_name = "W")]
        word: Option<String>,
    },
    /// Print the bottom, top, or span word prefix of a state.
    Word {
        /// State whose word to print.
        #[arg(long, value_name = "N")]
        node: String,
        /// Which of the three canonical words.
        #[arg(long, value_enum, default_value_t = WordKindArg::Bottom)]
        kind: WordKindArg,
    },
    /// Run the successor transducer, or dump its pair-substitution table.
    Transduce {
        /// Start state of the transducer (default 0: plain successor).
        #[arg(long, value_name = "I", default_value = "0")]
        state: String,
        /// Transduce the bottom word of this integer.
        #[arg(long, value_name = "N", conflicts_with = "input")]
        node: Option<String>,
        /// Transduce this explicit digit word (digits below q).
        #[arg(long, value_name = "W")]
        input: Option<String>,
        /// Print the pair-substitution table ψ instead of transducing.
        #[arg(long)]
        psi_table: bool,
    },
    /// Tabulate span-set refinement levels: labels, outer measure, ratio.
    Refine {
        /// Also emit the contraction certificate (sparse bases only).
        #[arg(long)]
        contraction: bool,
    },
    /// Report dimension upper bounds and the box-counting table.
    Dim,
    /// Run named verification suites; exit nonzero if any fail.
    Check {
        /// Suite name (repeatable); see --list.
        #[arg(long, value_name = "NAME")]
        suite: Vec<String>,
        /// Run every suite.
        #[arg(long)]
        all: bool,
        /// List available suite names and exit.
        #[arg(long)]
        list: bool,
    },
    /// Export DOT graphs or the value-tree SVG.
    Render {
        /// What to draw.
        #[arg(long, value_enum)]
        kind: RenderKind,
        /// Horizontal distance between depth levels (SVG only).
        #[arg(long, value_name = "PX", default_value_t = 140)]
        x_step: u32,
        /// Vertical pixels per unit of value (SVG only).
        #[arg(long, value_name = "PX", default_value_t = 400)]
        y_scale: u32,
    },
}

fn main() {
    let cli = Cli::parse();
    if let Err(e) = run_and_emit(&cli) {
        eprintln!("error: {e:#}");
        std::process::exit(1);
    }
}

fn run_and_emit(cli: &Cli) -> anyhow::Result<()> {
    let output = run(cli)?;
    match &cli.out {
        Some(path) => std::fs::write(path, output)
            .with_context(|| format!("writing {}", path.display()))?,
        None => print!("{output}"),
    }
    Ok(())
}

fn run(cli: &Cli) -> anyhow::Result<String> {
    match &cli.command {
        Command::Convert { int, word } => cmd_convert(cli, int.as_deref(), word.as_deref()),
        Command::Word { node, kind } => cmd_word(cli, node, *kind),
        Command::Transduce {
            state,
            node,
            input,
            psi_table,
        } => cmd_transduce(cli, state, node.as_deref(), input.as_deref(), *psi_table),
        Command::Refine { contraction } => cmd_refine(cli, *contraction),
        Command::Dim => cmd_dim(cli),
        Command::Check { suite, all, list } => cmd_check(cli, suite, *all, *list),
        Command::Render {
            kind,
            x_step,
            y_scale,
        } => cmd_render(cli, *kind, *x_step, *y_scale),
    }
}

fn need_base(cli: &Cli) -> anyhow::Result<Base> {
    let text = cli
        .base
        .as_deref()
        .ok_or_else(|| anyhow!("this command needs --base P/Q (e.g. --base 3/2)"))?;
    Ok(Base::from_str(text)?)
}

fn parse_int(text: &str) -> anyhow::Result<NodeId> {
    text.parse::<BigUint>()
        .map_err(|e| anyhow!("invalid non-negative integer '{text}': {e}"))
}

fn prefix_len(cli: &Cli) -> usize {
    cli.prefix_len.unwrap_or(DEFAULT_ENCLOSURE_DEPTH)
}

fn frontier_cap(cli: &Cli) -> usize {
    cli.frontier_cap.unwrap_or(DEFAULT_FRONTIER_CAP)
}

fn format_or(cli: &Cli, default: Format) -> Format {
    cli.format.unwrap_or(default)
}

/// Integers render as plain decimals, proper fractions as "num/den".
fn rational_string(x: &BigRational) -> String {
    if x.is_integer() {
        x.numer().to_string()
    } else {
        fraction_string(x)
    }
}

fn enclosure_json(e: &RealEnclosure, precision: usize) -> Value {
    json!({
        "lo": fraction_string(e.lo()),
        "hi": fraction_string(e.hi()),
        "lo_decimal": decimal_string(e.lo(), precision),
        "hi_decimal": decimal_string(e.hi(), precision),
    })
}

fn json_out(value: &Value) -> anyhow::Result<String> {
    let mut text = serde_json::to_string_pretty(value)?;
    text.push('\n');
    Ok(text)
}

fn cmd_convert(cli: &Cli, int: Option<&str>, word: Option<&str>) -> anyhow::Result<String> {
    let b = need_base(cli)?;
    let (n_text, word_text, value_text) = match (int, word) {
        (Some(text), None) => {
            let n = parse_int(text)?;
            let w = encode(&b, &n);
            (n.to_string(), w.to_string(), n.to_string())
        }
        (None, Some(text)) => {
            let w = DigitWord::from_str(text)?;
            let full = b.full_alphabet();
            for &d in w.digits() {
                if !full.contains(d) {
                    bail!(ratbase::Error::DigitOutOfRange {
                        digit: d,
                        alphabet: "A_p",
                        lo: full.lo(),
                        hi: full.hi(),
                    });
                }
            }
            let value = eval_value(&b, &w);
            (rational_string(&value), w.to_string(), rational_string(&value))
        }
        _ => bail!("convert needs exactly one of --int N or --word W"),
    };
    match format_or(cli, Format::Text) {
        Format::Text => Ok(match (int, word) {
            (Some(_), None) => format!("{word_text}\n"),
            _ => format!("{value_text}\n"),
        }),
        Format::Json => json_out(&json!({
            "base": b.to_string(),
            "int": n_text,
            "word": word_text,
            "value": value_text,
        })),
        Format::Csv => Ok(csv_table(
            &["base", "int", "word", "value"],
            &[vec![b.to_string(), n_text, word_text, value_text]],
        )),
        other => bail!("convert does not support --format {other:?}"),
    }
}

fn cmd_word(cli: &Cli, node: &str, kind: WordKindArg) -> anyhow::Result<String> {
    let b = need_base(cli)?;
    let n = parse_int(node)?;
    let k = prefix_len(cli);
    let word = match kind {
        WordKindArg::Bottom => extremal_prefix(&b, &n, ExtremalKind::Bottom, k),
        WordKindArg::Top => extremal_prefix(&b, &n, ExtremalKind::Top, k),
        WordKindArg::Span => span_word_prefix(&b, &n, k),
    };
    let kind_name = match kind {
        WordKindArg::Bottom => "bottom",
        WordKindArg::Top => "top",
        WordKindArg::Span => "span",
    };
    match format_or(cli, Format::Text) {
        Format::Text => Ok(format!("{word}\n")),
        Format::Json => json_out(&json!({
            "base": b.to_string(),
            "node": n.to_string(),
            "kind": kind_name,
            "prefix_len": k.to_string(),
            "word": word.to_string(),
        })),
        Format::Csv => Ok(csv_table(
            &["base", "node", "kind", "prefix_len", "word"],
            &[vec![
                b.to_string(),
                n.to_string(),
                kind_name.to_string(),
                k.to_string(),
                word.to_string(),
            ]],
        )),
        other => bail!("word does not support --format {other:?}"),
    }
}

fn cmd_transduce(
    cli: &Cli,
    state: &str,
    node: Option<&str>,
    input: Option<&str>,
    dump_psi: bool,
) -> anyhow::Result<String> {
    let b = need_base(cli)?;
    if dump_psi {
        return psi_table_output(cli, &b);
    }
    let start = parse_int(state)?;
    let k = prefix_len(cli);
    let (input_word, node_text) = match (node, input) {
        (Some(text), None) => {
            let n = parse_int(text)?;
            (
                extremal_prefix(&b, &n, ExtremalKind::Bottom, k),
                Some(n),
            )
        }
        (None, Some(text)) => {
            let w = DigitWord::from_str(text)?;
            (ratbase::words::OmegaPrefix::new(w.digits().to_vec()), None)
        }
        _ => bail!("transduce needs exactly one of --node N or --input W (or --psi-table)"),
    };
    let output = transduce(&b, &start, &input_word)?;
    let verified = if cli.verify {
        let n = node_text
            .clone()
            .ok_or_else(|| anyhow!("--verify needs --node (the identity is about bottom words)"))?;
        let expected = extremal_prefix(
            &b,
            &(&n + &start + BigUint::one()),
            ExtremalKind::Bottom,
            k,
        );
        if output != expected {
            bail!(
                "verification failed: transducer output {output} differs from the bottom word {expected}"
            );
        }
        Some(true)
    } else {
        None
    };
    match format_or(cli, Format::Text) {
        Format::Text => {
            let mut text = format!("{output}\n");
            if verified == Some(true) {
                let n = node_text.expect("verified implies node mode");
                let _ = writeln!(
                    text,
                    "verified: equals the bottom word of {}",
                    &n + &start + BigUint::one()
                );
            }
            Ok(text)
        }
        Format::Json => json_out(&json!({
            "base": b.to_string(),
            "state": start.to_string(),
            "node": node_text.map(|n| n.to_string()),
            "input": input_word.to_string(),
            "output": output.to_string(),
            "verified": verified.map(|v| v.to_string()),
        })),
        Format::Csv => Ok(csv_table(
            &["base", "state", "input", "output"],
            &[vec![
                b.to_string(),
                start.to_string(),
                input_word.to_string(),
                output.to_string(),
            ]],
        )),
        other => bail!("transduce does not support --format {other:?}"),
    }
}

fn psi_table_output(cli: &Cli, b: &Base) -> anyhow::Result<String> {
    let rows = psi_table(b);
    match format_or(cli, Format::Text) {
        Format::Text => {
            let mut text = String::new();
            for row in rows {
                let pairs: Vec<String> = row.pairs.iter().map(|p| p.to_string()).collect();
                let _ = writeln!(
                    text,
                    "ψ({}) = {{{}}}   shift {}",
                    row.letter,
                    pairs.join(", "),
                    row.shift
                );
            }
            Ok(text)
        }
        Format::Json => {
            let entries: Vec<Value> = rows
                .iter()
                .map(|row| {
                    json!({
                        "digit": row.letter.to_string(),
                        "shift": row.shift.to_string(),
                        "pairs": row
                            .pairs
                            .iter()
                            .map(|p| vec![p.input().to_string(), p.output().to_string()])
                            .collect::<Vec<_>>(),
                    })
                })
                .collect();
            json_out(&json!({ "base": b.to_string(), "psi": entries }))
        }
        Format::Csv => {
            let body: Vec<Vec<String>> = rows
                .iter()
                .map(|row| {
                    let pairs: Vec<String> = row.pairs.iter().map(|p| p.to_string()).collect();
                    vec![
                        row.letter.to_string(),
                        row.shift.to_string(),
                        pairs.join(" "),
                    ]
                })
                .collect();
            Ok(csv_table(&["digit", "shift", "pairs"], &body))
        }
        other => bail!("transduce does not support --format {other:?}"),
    }
}

fn cmd_refine(cli: &Cli, with_contraction: bool) -> anyhow::Result<String> {
    let b = need_base(cli)?;
    let j_max = cli.depth.unwrap_or(8);
    let k = prefix_len(cli);
    let cap = frontier_cap(cli);
    let precision = cli.precision;

    let contraction = if with_contraction {
        Some(alpha_contraction(&b, k)?)
    } else {
        None
    };
    // Box-counting ratios are a sparse-regime diagnostic; for interval-regime
    // bases the refinement table still makes sense, with the column empty.
    let ratios: Vec<Option<RealEnclosure>> = if b.is_sparse() {
        box_counting_estimate(&b, j_max, cap)?
            .into_iter()
            .map(|row| row.ratio)
            .collect()
    } else {
        vec![None; j_max + 1]
    };
    let mut levels = Vec::new();
    for (j, ratio) in ratios.into_iter().enumerate() {
        let words = refine_words(&b, j, cap)?;
        // Negative difference digits (p < 2q − 1) label span runs that are
        // not tree paths; the value-interval measure only applies to the
        // tree-runnable labels, so it is omitted when any label escapes.
        let outer = match intervals_for(&b, &words, k) {
            Ok(records) => Some(measure_outer(&records)),
            Err(ratbase::Error::NotATreePath { .. }) => None,
            Err(e) => return Err(e.into()),
        };
        levels.push((j, words.len() as u64, outer, ratio));
    }

    match format_or(cli, Format::Text) {
        Format::Text => {
            let mut text = String::new();
            let _ = writeln!(text, "span-set refinement for base {b} (enclosures at depth {k})");
            if let Some(c) = &contraction {
                let _ = writeln!(
                    text,
                    "contraction: every {} levels scale outer measure by ≤ α ∈ [{}, {}]",
                    c.escape_len,
                    decimal_string(c.alpha.lo(), precision),
                    decimal_string(c.alpha.hi(), precision),
                );
                let _ = writeln!(
                    text,
                    "landmarks: γ ≥ {}, ω ≤ {}",
                    decimal_string(c.landmarks.gamma.lo(), precision),
                    decimal_string(c.landmarks.omega.hi(), precision),
                );
            }
            let _ = writeln!(text, "{:>5} {:>8} {:>22} {:>22}", "depth", "labels", "outer-measure", "ratio-hi");
            for (j, labels, outer, ratio) in &levels {
                let ratio_text = ratio
                    .as_ref()
                    .map(|r| decimal_string(r.hi(), precision))
                    .unwrap_or_else(|| "-".to_string());
                let outer_text = outer
                    .as_ref()
                    .map(|m| decimal_string(m, precision))
                    .unwrap_or_else(|| "-".to_string());
                let _ = writeln!(text, "{j:>5} {labels:>8} {outer_text:>22} {ratio_text:>22}");
            }
            Ok(text)
        }
        Format::Json => {
            let rows: Vec<Value> = levels
                .iter()
                .map(|(j, labels, outer, ratio)| {
                    json!({
                        "depth": j.to_string(),
                        "labels": labels.to_string(),
                        "outer_measure": outer.as_ref().map(fraction_string),
                        "outer_measure_decimal":
                            outer.as_ref().map(|m| decimal_string(m, precision)),
                        "ratio": ratio.as_ref().map(|r| enclosure_json(r, precision)),
                    })
                })
                .collect();
            json_out(&json!({
                "base": b.to_string(),
                "enclosure_depth": k.to_string(),
                "contraction": contraction.as_ref().map(|c| json!({
                    "escape_len": c.escape_len.to_string(),
                    "alpha": enclosure_json(&c.alpha, precision),
                    "gamma": enclosure_json(&c.landmarks.gamma, precision),
                    "omega": enclosure_json(&c.landmarks.omega, precision),
                })),
                "levels": rows,
            }))
        }
        Format::Csv => {
            let body: Vec<Vec<String>> = levels
                .iter()
                .map(|(j, labels, outer, ratio)| {
                    vec![
                        j.to_string(),
                        labels.to_string(),
                        outer.as_ref().map(fraction_string).unwrap_or_default(),
                        outer
                            .as_ref()
                            .map(|m| decimal_string(m, precision))
                            .unwrap_or_default(),
                        ratio
                            .as_ref()
                            .map(|r| decimal_string(r.hi(), precision))
                            .unwrap_or_default(),
                    ]
                })
                .collect();
            Ok(csv_table(
                &["depth", "labels", "outer_measure", "outer_measure_decimal", "ratio_hi"],
                &body,
            ))
        }
        other => bail!("refine does not support --format {other:?}"),
    }
}

fn box_row_ratio_strings(row: &BoxCountRow, precision: usize) -> (String, String) {
    match &row.ratio {
        Some(r) => (
            decimal_string(r.lo(), precision),
            decimal_string(r.hi(), precision),
        ),
        None => (String::new(), String::new()),
    }
}

fn cmd_dim(cli: &Cli) -> anyhow::Result<String> {
    let b = need_base(cli)?;
    let j_max = cli.depth.unwrap_or(12);
    let cap = frontier_cap(cli);
    let precision = cli.precision;
    let bounds = hausdorff_upper_bounds(&b)?;
    let box_rows = box_counting_estimate(&b, j_max, cap)?;

    match format_or(cli, Format::Text) {
        Format::Text => {
            let mut text = String::new();
            let _ = writeln!(text, "dimension report for base {b}");
            for row in bounds.rows() {
                let _ = writeln!(
                    text,
                    "{:<18} {}  ∈ [{}, {}]   ({})",
                    row.name,
                    row.formula,
                    decimal_string(row.value.lo(), precision),
                    decimal_string(row.value.hi(), precision),
                    row.provenance,
                );
            }
            let _ = writeln!(text, "{:>5} {:>10} {:>22} {:>22}", "depth", "labels", "ratio-lo", "ratio-hi");
            for row in &box_rows {
                let (lo, hi) = box_row_ratio_strings(row, precision);
                let lo = if lo.is_empty() { "-".to_string() } else { lo };
                let hi = if hi.is_empty() { "-".to_string() } else { hi };
                let _ = writeln!(text, "{:>5} {:>10} {lo:>22} {hi:>22}", row.depth, row.labels);
            }
            Ok(text)
        }
        Format::Json => {
            let rows: Vec<Value> = bounds
                .rows()
                .iter()
                .map(|row| {
                    json!({
                        "name": row.name,
                        "formula": row.formula,
                        "provenance": row.provenance,
                        "value": enclosure_json(&row.value, precision),
                    })
                })
                .collect();
            let boxes: Vec<Value> = box_rows
                .iter()
                .map(|row| {
                    json!({
                        "depth": row.depth.to_string(),
                        "labels": row.labels.to_string(),
                        "ratio": row.ratio.as_ref().map(|r| enclosure_json(r, precision)),
                    })
                })
                .collect();
            json_out(&json!({
                "base": b.to_string(),
                "bounds": rows,
                "box_counting": boxes,
            }))
        }
        Format::Csv => {
            let body: Vec<Vec<String>> = box_rows
                .iter()
                .map(|row| {
                    let (lo, hi) = box_row_ratio_strings(row, precision);
                    vec![row.depth.to_string(), row.labels.to_string(), lo, hi]
                })
                .collect();
            Ok(csv_table(&["depth", "labels", "ratio_lo", "ratio_hi"], &body))
        }
        other => bail!("dim does not support --format {other:?}"),
    }
}

fn cmd_check(cli: &Cli, suites: &[String], all: bool, list: bool) -> anyhow::Result<String> {
    if list {
        let mut text = String::new();
        for name in checks::suite_names() {
            let _ = writeln!(text, "{name}");
        }
        return Ok(text);
    }
    let reports = if all {
        checks::run_all()
    } else if suites.is_empty() {
        bail!("check needs --all or at least one --suite NAME (see --list)");
    } else {
        let mut reports = Vec::new();
        for name in suites {
            let report = checks::run_suite(name).ok_or_else(|| {
                anyhow!(
                    "unknown suite '{name}'; known suites: {}",
                    checks::suite_names().join(", ")
                )
            })?;
            reports.push(report);
        }
        reports
    };
    let failed = reports.iter().filter(|r| !r.passed()).count();
    let output = match format_or(cli, Format::Text) {
        Format::Text => {
            let mut text = String::new();
            for report in &reports {
                let _ = writeln!(text, "{}", report.line());
            }
            let _ = writeln!(text, "{} suites, {} failed", reports.len(), failed);
            text
        }
        Format::Json => {
            let rows: Vec<Value> = reports
                .iter()
                .map(|r| {
                    json!({
                        "name": r.name,
                        "passed": r.passed().to_string(),
                        "cases": r.cases.to_string(),
                        "failures": r.failures.to_string(),
                        "summary": r.summary,
                        "first_failure": r.first_failure,
                    })
                })
                .collect();
            json_out(&json!({ "suites": rows, "failed": failed.to_string() }))?
        }
        Format::Csv => {
            let body: Vec<Vec<String>> = reports
                .iter()
                .map(|r| {
                    vec![
                        r.name.to_string(),
                        r.passed().to_string(),
                        r.cases.to_string(),
                        r.failures.to_string(),
                        r.first_failure.clone().unwrap_or_default(),
                    ]
                })
                .collect();
            csv_table(&["suite", "passed", "cases", "failures", "first_failure"], &body)
        }
        other => bail!("check does not support --format {other:?}"),
    };
    if failed > 0 {
        // Emit the report before failing so the caller sees the details.
        match &cli.out {
            Some(path) => std::fs::write(path, &output)
                .with_context(|| format!("writing {}", path.display()))?,
            None => print!("{output}"),
        }
        std::process::exit(1);
    }
    Ok(output)
}

fn cmd_render(cli: &Cli, kind: RenderKind, x_step: u32, y_scale: u32) -> anyhow::Result<String> {
    let b = need_base(cli)?;
    let cap = frontier_cap(cli);
    match kind {
        RenderKind::Tree | RenderKind::Span => {
            let depth = cli.depth.unwrap_or(4);
            if !matches!(format_or(cli, Format::Dot), Format::Dot) {
                bail!("render --kind {kind:?} emits DOT; use --format dot or omit --format");
            }
            let auto_kind = if matches!(kind, RenderKind::Tree) {
                AutomatonKind::Tree
            } else {
                AutomatonKind::Span
            };
            Ok(dot_automaton(&b, auto_kind, depth, cap)?)
        }
        RenderKind::Transducer => {
            let depth = cli.depth.unwrap_or(4);
            if !matches!(format_or(cli, Format::Dot), Format::Dot) {
                bail!("render --kind transducer emits DOT; use --format dot or omit --format");
            }
            Ok(dot_transducer(&b, depth, cap)?)
        }
        RenderKind::Fractal => {
            let depth = cli.depth.unwrap_or(6);
            if !matches!(format_or(cli, Format::Svg), Format::Svg) {
                bail!("render --kind fractal emits SVG; use --format svg or omit --format");
            }
            let opts = SvgOptions {
                x_step,
                y_scale,
                precision: cli.precision,
                ..SvgOptions::default()
            };
            Ok(svg_value_tree(&b, depth, &opts, cap)?)
        }
    }
}

// `value` sanity for the helpers that are easy to get wrong in isolation.
#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn rational_strings() {
        assert_eq!(rational_string(&BigRational::from_integer(4.into())), "4");
        assert_eq!(
            rational_string(&BigRational::new(1.into(), 2.into())),
            "1/2"
        );
    }

    #[test]
    fn cli_parses_global_flags_anywhere() {
        let cli = Cli::parse_from([
            "ratbase", "convert", "--base", "3/2", "--int", "4", "--format", "json",
        ]);
        assert_eq!(cli.base.as_deref(), Some("3/2"));
        assert_eq!(cli.precision, 12);
    }
}
