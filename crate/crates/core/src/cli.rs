//! Command-line interface: argument grammar, dispatch, and rendering.
//!
//! Every subcommand wraps one library operation and renders its result in
//! one of three formats selected by the global `--format` flag:
//!
//! * `text` — stable one-result-per-line strings (golden-tested);
//! * `json` — machine-readable values with arbitrary-precision integers;
//! * `dot` — Graphviz path graphs, where box-shaped nodes mark curves that
//!   belong to a contracted (Wahl) segment and circles mark the rest.
//!
//! Exit codes: 0 success, 2 domain error (bad input), 3 broken internal
//! invariant (a bug, never user error).

use std::fmt::Write as _;
use std::str::FromStr;

use clap::{Parser, Subcommand, ValueEnum};
use num_bigint::BigInt;
use serde_json::{json, Map, Value};

use crate::cfrac::{CFrac, Fraction};
use crate::embeddings::{embed_blowup, embed_linear, embed_milnor, usual_initial, EmbeddingReport};
use crate::mori::{ExtremalNbhd, MoriStep, PResolution};
use crate::wahl::{recognize, WahlPair};
use crate::{Error, Result};

#[derive(Debug, Clone, Copy, PartialEq, Eq, ValueEnum)]
pub enum OutputFormat {
    Text,
    Json,
    Dot,
}

/// Exact calculator for Wahl chains, Mori sequences of antiflips, and
/// embedded rational homology balls.
#[derive(Debug, Parser)]
#[command(name = "antiflip", version, max_term_width = 100)]
pub struct Cli {
    /// Output format.
    #[arg(long, global = true, value_enum, default_value = "text")]
    pub format: OutputFormat,
    #[command(subcommand)]
    command: Command,
}

#[derive(Debug, Subcommand)]
enum Command {
    /// Hirzebruch-Jung continued fractions.
    #[command(subcommand)]
    Hj(HjCommand),
    /// Wahl singularities and their exceptional chains.
    #[command(subcommand)]
    Wahl(WahlCommand),
    /// Extremal neighborhoods: Mori sequences, flips, P-resolutions.
    #[command(subcommand)]
    Mori(MoriCommand),
    /// Embedded rational homology ball enumerations.
    #[command(subcommand)]
    Embed(EmbedCommand),
}

#[derive(Debug, Subcommand)]
enum HjCommand {
    /// Expand n/a into the continued fraction [e1,...,es], all entries >= 2.
    Expand { n: String, a: String },
    /// Evaluate a comma-separated chain e1,e2,... back to a fraction (n,a).
    Eval { entries: String },
    /// The dual fraction n/(n-a) and its expansion.
    Dual { n: String, a: String },
}

#[derive(Debug, Subcommand)]
enum WahlCommand {
    /// The exceptional chain of the Wahl singularity indexed by (m,a).
    Chain { m: String, a: String },
    /// Recover (m,a) from an exceptional chain, if it is one.
    Recognize { entries: String },
}

#[derive(Debug, Subcommand)]
enum MoriCommand {
    /// Members of the Mori sequence generated by an initial neighborhood
    /// with pairs (m1,a1),(m2,a2).
    Seq {
        m1: String,
        a1: String,
        m2: String,
        a2: String,
        /// How many members to list.
        #[arg(long, default_value_t = 5)]
        count: usize,
    },
    /// The flip (extremal P-resolution) shared by the whole family of the
    /// given member.
    Flip {
        m1: String,
        a1: String,
        m2: String,
        a2: String,
    },
    /// The initial neighborhoods over the extremal P-resolution with one
    /// Wahl side (m,a) (use --wahl 1 1 for none) and central curve -c.
    Initials {
        /// The Wahl side, as two integers M A.
        #[arg(long, num_args = 2, value_names = ["M", "A"], required = true)]
        wahl: Vec<String>,
        /// The magnitude c of the central curve.
        #[arg(long, value_name = "C")]
        curve: String,
    },
}

#[derive(Debug, Subcommand)]
enum EmbedCommand {
    /// Ball pairs embedded in the neighborhood of a linear chain.
    Linear {
        entries: String,
        /// How many pairs to list.
        #[arg(long, default_value_t = 5)]
        count: usize,
    },
    /// Ball pairs embedded in the one-point blow-up of B(n,a).
    Blowup {
        n: String,
        a: String,
        /// How many pairs to list.
        #[arg(long, default_value_t = 5)]
        count: usize,
    },
    /// Ball pairs embedded in the Milnor fiber attached to the extremal
    /// P-resolution with one Wahl side (m,a) and central curve -c.
    Milnor {
        /// The Wahl side, as two integers M A.
        #[arg(long, num_args = 2, value_names = ["M", "A"], required = true)]
        wahl: Vec<String>,
        /// The magnitude c of the central curve.
        #[arg(long, value_name = "C")]
        curve: String,
        /// How many pairs to list per family.
        #[arg(long, default_value_t = 5)]
        count: usize,
    },
}

/// Runs a parsed command line and returns the rendered output (without a
/// trailing newline).
pub fn run(cli: &Cli) -> Result<String> {
    let format = cli.format;
    match &cli.command {
        Command::Hj(cmd) => run_hj(cmd, format),
        Command::Wahl(cmd) => run_wahl(cmd, format),
        Command::Mori(cmd) => run_mori(cmd, format),
        Command::Embed(cmd) => run_embed(cmd, format),
    }
}

fn run_hj(cmd: &HjCommand, format: OutputFormat) -> Result<String> {
    match cmd {
        HjCommand::Expand { n, a } => {
            let chain = parse_fraction(n, a)?.expansion();
            Ok(match format {
                OutputFormat::Text => chain.to_string(),
                OutputFormat::Json => jentries(&chain).to_string(),
                OutputFormat::Dot => dot_graph("chain", &chain_nodes(&chain, false)),
            })
        }
        HjCommand::Eval { entries } => {
            let value = parse_entries(entries)?.value();
            match format {
                OutputFormat::Text => Ok(value.to_string()),
                OutputFormat::Json => Ok(jfrac(&value).to_string()),
                OutputFormat::Dot => Err(Error::DotUnavailable("fraction values")),
            }
        }
        HjCommand::Dual { n, a } => {
            let dual = parse_fraction(n, a)?.dual();
            let expansion = dual.expansion();
            match format {
                OutputFormat::Text => Ok(format!("{dual} {expansion}")),
                OutputFormat::Json => Ok(json!({
                    "fraction": jfrac(&dual),
                    "expansion": jentries(&expansion),
                })
                .to_string()),
                OutputFormat::Dot => Err(Error::DotUnavailable("fraction values")),
            }
        }
    }
}

fn run_wahl(cmd: &WahlCommand, format: OutputFormat) -> Result<String> {
    match cmd {
        WahlCommand::Chain { m, a } => {
            let chain = parse_wahl(m, a)?.chain()?;
            Ok(match format {
                OutputFormat::Text => chain.to_string(),
                OutputFormat::Json => jentries(&chain).to_string(),
                OutputFormat::Dot => dot_graph("wahl_chain", &chain_nodes(&chain, true)),
            })
        }
        WahlCommand::Recognize { entries } => {
            let chain = parse_entries(entries)?;
            let pair = recognize(&chain).ok_or(Error::NotWahlChain)?;
            match format {
                OutputFormat::Text => Ok(pair.to_string()),
                OutputFormat::Json => Ok(jpair(&pair).to_string()),
                OutputFormat::Dot => Err(Error::DotUnavailable("singularity pairs")),
            }
        }
    }
}

fn run_mori(cmd: &MoriCommand, format: OutputFormat) -> Result<String> {
    match cmd {
        MoriCommand::Seq {
            m1,
            a1,
            m2,
            a2,
            count,
        } => {
            let nbhd = parse_nbhd(m1, a1, m2, a2)?;
            let steps = nbhd.mori_sequence(*count)?;
            match format {
                OutputFormat::Text => {
                    let lines: Result<Vec<String>> = steps.iter().map(seq_line).collect();
                    Ok(lines?.join("\n"))
                }
                OutputFormat::Json => {
                    let items: Result<Vec<Value>> = steps
                        .iter()
                        .map(|s| nbhd_json(&s.neighborhood()?, Some(s.index())))
                        .collect();
                    Ok(Value::Array(items?).to_string())
                }
                OutputFormat::Dot => {
                    let graphs: Result<Vec<String>> = steps
                        .iter()
                        .map(|s| {
                            Ok(dot_graph(
                                &format!("E{}", s.index()),
                                &nbhd_nodes(&s.neighborhood()?)?,
                            ))
                        })
                        .collect();
                    Ok(graphs?.join("\n"))
                }
            }
        }
        MoriCommand::Flip { m1, a1, m2, a2 } => {
            let p = parse_nbhd(m1, a1, m2, a2)?.flip()?;
            match format {
                OutputFormat::Text => presolution_line(&p),
                OutputFormat::Json => Ok(presolution_json(&p)?.to_string()),
                OutputFormat::Dot => Ok(dot_graph("presolution", &presolution_nodes(&p)?)),
            }
        }
        MoriCommand::Initials { wahl, curve } => {
            let p = parse_presolution(wahl, curve)?;
            let initials = p.initial_neighborhoods()?;
            match format {
                OutputFormat::Text => {
                    let mut lines = vec![presolution_line(&p)?];
                    for nbhd in &initials {
                        lines.push(format!(
                            "initial: {},{}  {}",
                            nbhd.w1(),
                            nbhd.w2(),
                            nbhd.display()?
                        ));
                    }
                    Ok(lines.join("\n"))
                }
                OutputFormat::Json => {
                    let items: Result<Vec<Value>> =
                        initials.iter().map(|nbhd| nbhd_json(nbhd, None)).collect();
                    Ok(json!({
                        "presolution": presolution_json(&p)?,
                        "initials": items?,
                    })
                    .to_string())
                }
                OutputFormat::Dot => Ok(dot_graph("presolution", &presolution_nodes(&p)?)),
            }
        }
    }
}

fn run_embed(cmd: &EmbedCommand, format: OutputFormat) -> Result<String> {
    match cmd {
        EmbedCommand::Linear { entries, count } => {
            let gamma = parse_entries(entries)?;
            let report = embed_linear(&gamma, *count)?;
            match format {
                OutputFormat::Text => report_text(&report),
                OutputFormat::Json => Ok(report_json(&report)?.to_string()),
                OutputFormat::Dot => {
                    if report.is_empty() {
                        return Err(Error::DotUnavailable("empty reports"));
                    }
                    let initial = usual_initial(&gamma)?;
                    let mut nodes = chain_nodes(&initial.w2().chain()?.reversed(), true);
                    nodes.push(DotNode::circle("-1".to_string()));
                    let remnant = &gamma.entries()[..gamma.len() - 1];
                    for e in remnant {
                        nodes.push(DotNode::circle(format!("-{e}")));
                    }
                    Ok(dot_graph("embedding", &nodes))
                }
            }
        }
        EmbedCommand::Blowup { n, a, count } => {
            let w = parse_wahl(n, a)?;
            let report = embed_blowup(&w, *count)?;
            match format {
                OutputFormat::Text => report_text(&report),
                OutputFormat::Json => Ok(report_json(&report)?.to_string()),
                OutputFormat::Dot => Err(Error::DotUnavailable("blow-up reports")),
            }
        }
        EmbedCommand::Milnor { wahl, curve, count } => {
            let p = parse_presolution(wahl, curve)?;
            let reports = embed_milnor(&p, *count)?;
            match format {
                OutputFormat::Text => {
                    let mut lines = vec![format!("target: {}", reports[0].target())];
                    for (k, report) in reports.iter().enumerate() {
                        lines.push(format!(
                            "family {}: delta={}  infinite={}  simplicity={}",
                            k + 1,
                            report.delta().expect("milnor reports carry delta"),
                            report.is_infinite(),
                            report.simplicity().label()
                        ));
                        for step in report.steps() {
                            lines.push(step_line(step)?);
                        }
                    }
                    Ok(lines.join("\n"))
                }
                OutputFormat::Json => {
                    let items: Result<Vec<Value>> = reports.iter().map(report_json).collect();
                    Ok(Value::Array(items?).to_string())
                }
                OutputFormat::Dot => Err(Error::DotUnavailable("Milnor-fiber reports")),
            }
        }
    }
}

// ---------------------------------------------------------------------------
// Parsing helpers

fn parse_int(text: &str) -> Result<BigInt> {
    BigInt::from_str(text.trim()).map_err(|_| Error::InvalidInteger(text.to_string()))
}

fn parse_fraction(n: &str, a: &str) -> Result<Fraction> {
    Fraction::new(parse_int(n)?, parse_int(a)?)
}

fn parse_entries(text: &str) -> Result<CFrac> {
    let entries = text
        .split(',')
        .map(parse_int)
        .collect::<Result<Vec<BigInt>>>()?;
    CFrac::new(entries)
}

fn parse_wahl(m: &str, a: &str) -> Result<WahlPair> {
    WahlPair::new(parse_int(m)?, parse_int(a)?)
}

fn parse_nbhd(m1: &str, a1: &str, m2: &str, a2: &str) -> Result<ExtremalNbhd> {
    ExtremalNbhd::member(parse_wahl(m1, a1)?, parse_wahl(m2, a2)?)
}

fn parse_presolution(wahl: &[String], curve: &str) -> Result<PResolution> {
    let side = parse_wahl(&wahl[0], &wahl[1])?;
    PResolution::new(side, WahlPair::smooth(), parse_int(curve)?)
}

// ---------------------------------------------------------------------------
// Text rendering

fn seq_line(step: &MoriStep) -> Result<String> {
    Ok(format!(
        "E_{}: {},{}  {}",
        step.index(),
        step.first(),
        step.second(),
        step.display()?
    ))
}

fn presolution_line(p: &PResolution) -> Result<String> {
    Ok(format!(
        "{}  delta={}  target={}",
        p.display()?,
        p.delta(),
        p.target()?
    ))
}

fn ball_label(w: &WahlPair) -> String {
    if w.is_smooth() {
        "smooth".to_string()
    } else {
        format!("B{}", w.canonical())
    }
}

fn step_line(step: &MoriStep) -> Result<String> {
    Ok(format!(
        "step {}: {},{}  balls {},{}  {}",
        step.index(),
        step.first(),
        step.second(),
        ball_label(step.first()),
        ball_label(step.second()),
        step.display()?
    ))
}

fn report_text(report: &EmbeddingReport) -> Result<String> {
    let mut lines = vec![format!("target: {}", report.target())];
    if let Some(reason) = report.reason() {
        lines.push(format!("no embeddings: {reason}"));
    } else {
        lines.push(format!(
            "delta={}  infinite={}  simplicity={}",
            report.delta().expect("non-empty reports carry delta"),
            report.is_infinite(),
            report.simplicity().label()
        ));
        for step in report.steps() {
            lines.push(step_line(step)?);
        }
    }
    Ok(lines.join("\n"))
}

// ---------------------------------------------------------------------------
// JSON rendering

fn jnum(n: &BigInt) -> Value {
    serde_json::from_str(&n.to_string()).expect("an integer is a valid JSON number")
}

fn jfrac(f: &Fraction) -> Value {
    Value::Array(vec![jnum(f.num()), jnum(f.den())])
}

fn jpair(w: &WahlPair) -> Value {
    Value::Array(vec![jnum(w.m()), jnum(w.a())])
}

fn jentries(c: &CFrac) -> Value {
    Value::Array(c.entries().iter().map(jnum).collect())
}

fn nbhd_json(nbhd: &ExtremalNbhd, index: Option<usize>) -> Result<Value> {
    let mut map = Map::new();
    if let Some(i) = index {
        map.insert("i".to_string(), json!(i));
    }
    map.insert(
        "pairs".to_string(),
        Value::Array(vec![jpair(nbhd.w1()), jpair(nbhd.w2())]),
    );
    map.insert("delta".to_string(), jnum(nbhd.delta()));
    map.insert("kind".to_string(), json!(nbhd.classify()?.as_str()));
    map.insert("display".to_string(), json!(nbhd.display()?));
    Ok(Value::Object(map))
}

fn presolution_json(p: &PResolution) -> Result<Value> {
    let side = |w: &WahlPair| if w.is_smooth() { Value::Null } else { jpair(w) };
    Ok(json!({
        "left": side(p.left()),
        "right": side(p.right()),
        "c": jnum(p.c()),
        "delta": jnum(p.delta()),
        "display": p.display()?,
        "target": jfrac(&p.target()?),
    }))
}

fn report_step_json(step: &MoriStep) -> Result<Value> {
    Ok(json!({
        "i": step.index(),
        "pair1": jpair(step.first()),
        "pair2": jpair(step.second()),
        "canonical1": jpair(&step.first().canonical()),
        "canonical2": jpair(&step.second().canonical()),
        "display": step.display()?,
    }))
}

fn target_json(target: &crate::embeddings::Target) -> Result<Value> {
    use crate::embeddings::Target;
    Ok(match target {
        Target::ChainNbhd(gamma) => json!({
            "kind": "chain",
            "entries": jentries(gamma),
        }),
        Target::BlownUpBall(w) => json!({
            "kind": "blown-up-ball",
            "pair": jpair(w),
        }),
        Target::MilnorFiber {
            presolution,
            q_type,
        } => json!({
            "kind": "milnor-fiber",
            "presolution": presolution_json(presolution)?,
            "q_type": jfrac(q_type),
        }),
    })
}

fn report_json(report: &EmbeddingReport) -> Result<Value> {
    let mut map = Map::new();
    map.insert("target".to_string(), target_json(report.target())?);
    map.insert(
        "delta".to_string(),
        report.delta().map(jnum).unwrap_or(Value::Null),
    );
    map.insert("infinite".to_string(), json!(report.is_infinite()));
    map.insert("simplicity".to_string(), json!(report.simplicity().label()));
    let steps: Result<Vec<Value>> = report.steps().iter().map(report_step_json).collect();
    map.insert("steps".to_string(), Value::Array(steps?));
    if let Some(reason) = report.reason() {
        map.insert("reason".to_string(), json!(reason));
    }
    Ok(Value::Object(map))
}

// ---------------------------------------------------------------------------
// DOT rendering

struct DotNode {
    label: String,
    boxed: bool,
}

impl DotNode {
    fn circle(label: String) -> Self {
        DotNode {
            label,
            boxed: false,
        }
    }
}

fn chain_nodes(chain: &CFrac, boxed: bool) -> Vec<DotNode> {
    chain
        .entries()
        .iter()
        .map(|e| DotNode {
            label: format!("-{e}"),
            boxed,
        })
        .collect()
}

fn nbhd_nodes(nbhd: &ExtremalNbhd) -> Result<Vec<DotNode>> {
    let mut nodes = chain_nodes(&nbhd.w2().chain()?.reversed(), true);
    nodes.push(DotNode::circle("C".to_string()));
    if !nbhd.w1().is_smooth() {
        nodes.extend(chain_nodes(&nbhd.w1().chain()?, true));
    }
    Ok(nodes)
}

fn presolution_nodes(p: &PResolution) -> Result<Vec<DotNode>> {
    let mut nodes = Vec::new();
    if !p.left().is_smooth() {
        nodes.extend(chain_nodes(&p.left().chain()?.reversed(), true));
    }
    nodes.push(DotNode::circle(format!("-{}", p.c())));
    if !p.right().is_smooth() {
        nodes.extend(chain_nodes(&p.right().chain()?, true));
    }
    Ok(nodes)
}

fn dot_graph(name: &str, nodes: &[DotNode]) -> String {
    let mut out = String::new();
    writeln!(out, "graph {name} {{").unwrap();
    writeln!(out, "  rankdir=LR;").unwrap();
    for (i, node) in nodes.iter().enumerate() {
        let shape = if node.boxed { "box" } else { "circle" };
        writeln!(
            out,
            "  n{} [shape={shape}, label=\"{}\"];",
            i + 1,
            node.label
        )
        .unwrap();
    }
    for i in 1..nodes.len() {
        writeln!(out, "  n{i} -- n{};", i + 1).unwrap();
    }
    out.push('}');
    out
}

#[cfg(test)]
mod tests {
    use super::*;

    fn run_args(args: &[&str]) -> Result<String> {
        let cli = Cli::try_parse_from(args).expect("arguments parse");
        run(&cli)
    }

    #[test]
    fn hj_text_outputs() {
        assert_eq!(
            run_args(&["antiflip", "hj", "expand", "25", "9"]).unwrap(),
            "[3,5,2]"
        );
        assert_eq!(
            run_args(&["antiflip", "hj", "eval", "3,5,2"]).unwrap(),
            "(25,9)"
        );
        assert_eq!(run_args(&["antiflip", "hj", "eval", "4"]).unwrap(), "(4,1)");
        assert_eq!(
            run_args(&["antiflip", "hj", "dual", "5", "2"]).unwrap(),
            "(5,3) [2,3]"
        );
    }

    #[test]
    fn hj_domain_errors() {
        assert!(matches!(
            run_args(&["antiflip", "hj", "expand", "25", "10"]),
            Err(Error::FractionNotReduced { .. })
        ));
        assert!(matches!(
            run_args(&["antiflip", "hj", "expand", "x", "2"]),
            Err(Error::InvalidInteger(_))
        ));
        assert!(matches!(
            run_args(&["antiflip", "hj", "eval", "3,1"]),
            Err(Error::EntryTooSmall(_))
        ));
        assert!(matches!(
            run_args(&["antiflip", "--format", "dot", "hj", "eval", "4"]),
            Err(Error::DotUnavailable(_))
        ));
    }

    #[test]
    fn wahl_outputs() {
        assert_eq!(
            run_args(&["antiflip", "wahl", "chain", "5", "2"]).unwrap(),
            "[3,5,2]"
        );
        assert_eq!(
            run_args(&["antiflip", "wahl", "recognize", "3,5,2"]).unwrap(),
            "(5,2)"
        );
        assert_eq!(
            run_args(&["antiflip", "wahl", "recognize", "3,5,3"]),
            Err(Error::NotWahlChain)
        );
        assert_eq!(
            run_args(&["antiflip", "--format", "json", "wahl", "chain", "14", "9"]).unwrap(),
            "[2,3,2,2,7,3]"
        );
    }

    #[test]
    fn mori_seq_text() {
        let out = run_args(&[
            "antiflip", "mori", "seq", "1", "1", "5", "3", "--count", "3",
        ])
        .unwrap();
        assert_eq!(
            out,
            "E_1: (1,1),(5,3)  [3,5,2]-\u{2205}\n\
             E_2: (5,2),(14,9)  [3,7,2,2,3,2]-[3,5,2]\n\
             E_3: (14,5),(37,24)  [3,7,5,2,2,2,2,3,2]-[3,7,2,2,3,2]"
        );
    }

    #[test]
    fn mori_flip_and_initials_text() {
        assert_eq!(
            run_args(&["antiflip", "mori", "flip", "1", "1", "5", "3"]).unwrap(),
            "[4]-3-\u{2205}  delta=3  target=(11,3)"
        );
        let out = run_args(&[
            "antiflip", "mori", "initials", "--wahl", "2", "1", "--curve", "3",
        ])
        .unwrap();
        assert_eq!(
            out,
            "[4]-3-\u{2205}  delta=3  target=(11,3)\n\
             initial: (1,1),(5,3)  [3,5,2]-\u{2205}\n\
             initial: (2,1),(7,5)  [4,5,2,2]-[4]"
        );
    }

    #[test]
    fn mori_seq_json_round_trips() {
        let out = run_args(&[
            "antiflip", "--format", "json", "mori", "seq", "1", "1", "4", "1", "--count", "9",
        ])
        .unwrap();
        let parsed: Value = serde_json::from_str(&out).unwrap();
        let arr = parsed.as_array().unwrap();
        assert_eq!(arr.len(), 2);
        assert_eq!(arr[0]["kind"], "flipping");
        assert_eq!(arr[1]["kind"], "non-initial");
        assert_eq!(arr[0]["pairs"], json!([[1, 1], [4, 1]]));
        assert_eq!(arr[1]["pairs"], json!([[4, 3], [3, 1]]));
        assert_eq!(arr[0]["display"], "[2,2,6]-\u{2205}");
    }

    #[test]
    fn embed_linear_text_and_empty() {
        let out = run_args(&["antiflip", "embed", "linear", "4", "--count", "1"]).unwrap();
        assert_eq!(
            out,
            "target: chain [4]\n\
             delta=2  infinite=true  simplicity=simple\n\
             step 1: (1,1),(3,2)  balls smooth,B(3,1)  [5,2]-\u{2205}"
        );
        let out = run_args(&["antiflip", "embed", "linear", "2,2", "--count", "1"]).unwrap();
        assert!(out.starts_with("target: chain [2,2]\nno embeddings: "));
        assert!(out.contains("(-2)-curves"));
    }

    #[test]
    fn embed_milnor_smooth_minus_two_rejected() {
        assert_eq!(
            run_args(&["antiflip", "embed", "milnor", "--wahl", "1", "1", "--curve", "2",]),
            Err(Error::NotExtremal {
                delta: BigInt::from(0)
            })
        );
    }

    #[test]
    fn dot_outputs() {
        assert_eq!(
            run_args(&["antiflip", "--format", "dot", "hj", "expand", "11", "3"]).unwrap(),
            "graph chain {\n  rankdir=LR;\n  n1 [shape=circle, label=\"-4\"];\n  n2 [shape=circle, label=\"-3\"];\n  n1 -- n2;\n}"
        );
        assert_eq!(
            run_args(&["antiflip", "--format", "dot", "mori", "flip", "1", "1", "5", "3"])
                .unwrap(),
            "graph presolution {\n  rankdir=LR;\n  n1 [shape=box, label=\"-4\"];\n  n2 [shape=circle, label=\"-3\"];\n  n1 -- n2;\n}"
        );
        let out = run_args(&["antiflip", "--format", "dot", "embed", "linear", "3,3"]).unwrap();
        assert!(out.contains("n4 [shape=circle, label=\"-1\"];"));
        assert!(out.contains("n5 [shape=circle, label=\"-3\"];"));
        assert!(out.contains("n1 [shape=box, label=\"-3\"];"));
    }

    #[test]
    fn big_inputs_parse_and_render() {
        let out = run_args(&[
            "antiflip",
            "--format",
            "json",
            "hj",
            "eval",
            "3,5,2,2,2,2,2,2,2,2,2,2,2,2,2,2,2,2,2,2,2,2,2,2,2,2,2,2,2,2",
        ])
        .unwrap();
        let parsed: Value = serde_json::from_str(&out).unwrap();
        assert!(parsed.as_array().unwrap().len() == 2);
    }
}
