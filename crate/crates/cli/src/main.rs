//! `dmg`: command-line access to directed mixed graph queries.
//!
//! Graphs are read from JSON documents. `sep` and `equiv` answer with exit
//! code 0 (yes) or 1 (no); errors exit with 2.

use std::fs;
use std::path::{Path, PathBuf};
use std::process::ExitCode;
use std::str::FromStr;

use anyhow::{bail, Context};
use clap::{Parser, Subcommand, ValueEnum};
use serde_json::{json, Value};

use dmg_core::equivalence::{
    dmeg, equivalence_class, maximal_dmg, IndependenceModel, CLASS_EDGE_CAP, MODEL_CAP,
};
use dmg_core::format::{export_dmeg_dot, export_dot, DmegDocument, GraphDocument};
use dmg_core::marginalize::projection_fixpoint_trace_ordered;
use dmg_core::marginalize::ChoiceOrder;
use dmg_core::oracle::{model_diff, mu_separated_bruteforce, selfcheck, SelfCheckConfig, ROUTE_CAP};
use dmg_core::separation::{find_mu_connecting_route, mu_separated, mu_separated_via_augmentation, SeparationQuery};
use dmg_core::timeseries::{proof_horizon, rolling_sweep, unroll, Horizon};
use dmg_core::{Dmg, VertexSet};

#[derive(Parser)]
#[command(name = "dmg", version, about = "Separation, marginalization and Markov equivalence for directed mixed graphs")]
struct Cli {
    /// Output format for commands that print graphs.
    #[arg(long, global = true, value_enum, default_value_t = Format::Json)]
    format: Format,

    /// Size cap for exhaustive computations: vertices for model tables and
    /// route enumeration.
    #[arg(long, global = true, env = "DMG_CAP")]
    cap: Option<usize>,

    #[command(subcommand)]
    command: Command,
}

#[derive(Clone, Copy, PartialEq, Eq, ValueEnum)]
enum Format {
    Json,
    Dot,
}

#[derive(Clone, Copy, PartialEq, Eq, ValueEnum)]
enum Method {
    /// Reachability over walk states.
    Walk,
    /// Separation in the augmented graph of the history version.
    Augmented,
    /// Enumeration of all routes.
    Brute,
}

#[derive(Clone, Copy)]
struct HorizonArg(Horizon);

impl FromStr for HorizonArg {
    type Err = String;

    fn from_str(s: &str) -> Result<Self, Self::Err> {
        match s {
            "auto" => Ok(HorizonArg(Horizon::Auto)),
            _ => s.parse().map(|t| HorizonArg(Horizon::Fixed(t))).map_err(|_| format!("expected a number or `auto`, got `{s}`")),
        }
    }
}

#[derive(Subcommand)]
enum Command {
    /// Is B μ-separated from A given C? Exit 0 if so, 1 if not.
    Sep {
        #[arg(long)]
        graph: PathBuf,
        /// Comma-separated labels of A.
        #[arg(long)]
        from: String,
        /// Comma-separated labels of B.
        #[arg(long)]
        to: String,
        /// Comma-separated labels of C; empty or omitted for the empty set.
        #[arg(long, default_value = "")]
        given: String,
        /// Print a μ-connecting route when the sets are not separated.
        #[arg(long)]
        witness: bool,
        #[arg(long, value_enum, default_value_t = Method::Walk)]
        method: Method,
    },
    /// Latent projection onto the kept vertices.
    Marg {
        #[arg(long)]
        graph: PathBuf,
        /// Comma-separated labels to keep.
        #[arg(long)]
        keep: String,
        /// Also list the edges added during saturation (JSON only).
        #[arg(long)]
        trace: bool,
    },
    /// Maximal element of the Markov equivalence class.
    Maximal {
        #[arg(long)]
        graph: PathBuf,
    },
    /// Directed mixed equivalence graph of a maximal graph.
    Dmeg {
        #[arg(long)]
        graph: PathBuf,
    },
    /// Are two graphs Markov equivalent? Exit 0 if so, 1 if not.
    Equiv {
        first: PathBuf,
        second: PathBuf,
        /// List the queries on which the models differ.
        #[arg(long)]
        diff: bool,
    },
    /// Markov equivalence class of a maximal graph, loops held fixed.
    Class {
        #[arg(long)]
        graph: PathBuf,
        /// Print every member instead of only their number.
        #[arg(long)]
        enumerate: bool,
        /// Largest number of non-loop edges to enumerate subsets of.
        #[arg(long, default_value_t = CLASS_EDGE_CAP)]
        edge_cap: usize,
    },
    /// Unrolled DAG of a directed graph over time points 0..=T.
    Unroll {
        #[arg(long)]
        graph: PathBuf,
        #[arg(long = "T", value_name = "N|auto")]
        horizon: HorizonArg,
    },
    /// Compares rolled μ-separation with unrolled d-separation for every
    /// singleton query. Exit 1 if the expected correspondence fails.
    RollCheck {
        #[arg(long)]
        graph: PathBuf,
        #[arg(long = "T", value_name = "N|auto", default_value = "auto")]
        horizon: HorizonArg,
    },
    /// Cross-validates the fast procedures against the reference ones on
    /// random graphs. Exit 1 on any disagreement.
    Selfcheck {
        #[arg(long, default_value_t = 0)]
        seed: u64,
        /// Probability of each possible edge.
        #[arg(long, default_value_t = 0.3)]
        density: f64,
        #[arg(long, default_value_t = 100)]
        count: usize,
        #[arg(long, default_value_t = 5)]
        max_order: usize,
    },
}

fn main() -> ExitCode {
    let cli = Cli::parse();
    match run(&cli) {
        Ok(answer) => {
            if answer {
                ExitCode::SUCCESS
            } else {
                ExitCode::from(1)
            }
        }
        Err(e) => {
            eprintln!("error: {e:#}");
            ExitCode::from(2)
        }
    }
}

fn read_graph(path: &Path) -> anyhow::Result<Dmg> {
    let text = fs::read_to_string(path).with_context(|| format!("reading {}", path.display()))?;
    let doc = GraphDocument::parse(&text).with_context(|| format!("parsing {}", path.display()))?;
    doc.to_graph().with_context(|| format!("loading {}", path.display()))
}

fn label_set(g: &Dmg, list: &str) -> anyhow::Result<VertexSet> {
    let labels: Vec<&str> = list.split(',').map(str::trim).filter(|l| !l.is_empty()).collect();
    Ok(g.vertex_set(&labels)?)
}

fn labels_of(g: &Dmg, s: &VertexSet) -> Vec<String> {
    s.iter().map(|v| g.label(v).to_owned()).collect()
}

fn print_json(value: &Value) {
    println!("{}", serde_json::to_string_pretty(value).expect("values serialize"));
}

fn print_graph(format: Format, g: &Dmg) {
    match format {
        Format::Json => print!("{}", GraphDocument::from_graph(g).to_json()),
        Format::Dot => print!("{}", export_dot(g)),
    }
}

fn json_only(format: Format, command: &str) -> anyhow::Result<()> {
    if format == Format::Dot {
        bail!("`{command}` has no DOT output");
    }
    Ok(())
}

/// Runs one command; the result is the exit-code answer.
fn run(cli: &Cli) -> anyhow::Result<bool> {
    let model_cap = cli.cap.unwrap_or(MODEL_CAP);
    match &cli.command {
        Command::Sep { graph, from, to, given, witness, method } => {
            json_only(cli.format, "sep")?;
            let g = read_graph(graph)?;
            let q = SeparationQuery::new(label_set(&g, from)?, label_set(&g, to)?, label_set(&g, given)?);
            let separated = match method {
                Method::Walk => mu_separated(&g, &q)?,
                Method::Augmented => mu_separated_via_augmentation(&g, &q)?,
                Method::Brute => mu_separated_bruteforce(&g, &q, cli.cap.unwrap_or(ROUTE_CAP))?,
            };
            let mut out = json!({ "separated": separated });
            if *witness && !separated {
                let route = find_mu_connecting_route(&g, &q)?.context("no witness found")?;
                out["witness"] = json!(route.display(&g).to_string());
            }
            print_json(&out);
            Ok(separated)
        }
        Command::Marg { graph, keep, trace } => {
            let g = read_graph(graph)?;
            let o = label_set(&g, keep)?;
            let (m, steps) = projection_fixpoint_trace_ordered(&g, &o, ChoiceOrder::Forward)?;
            if *trace {
                json_only(cli.format, "marg --trace")?;
                let steps: Vec<Value> = steps
                    .iter()
                    .map(|(tr, e)| {
                        json!({
                            "via": g.label(tr.mid),
                            "left": tr.left_edge.display(&g),
                            "right": tr.right_edge.display(&g),
                            "added": e.display(&g),
                        })
                    })
                    .collect();
                let doc = serde_json::to_value(GraphDocument::from_graph(&m))?;
                print_json(&json!({ "graph": doc, "trace": steps }));
            } else {
                print_graph(cli.format, &m);
            }
            Ok(true)
        }
        Command::Maximal { graph } => {
            let n = maximal_dmg(&read_graph(graph)?, model_cap)?;
            print_graph(cli.format, &n);
            Ok(true)
        }
        Command::Dmeg { graph } => {
            let d = dmeg(&read_graph(graph)?, model_cap)?;
            match cli.format {
                Format::Json => print!("{}", DmegDocument::from_dmeg(&d).to_json()),
                Format::Dot => print!("{}", export_dmeg_dot(&d)),
            }
            Ok(true)
        }
        Command::Equiv { first, second, diff } => {
            json_only(cli.format, "equiv")?;
            let g1 = read_graph(first)?;
            let g2 = g1.align(&read_graph(second)?)?;
            let m1 = IndependenceModel::of(&g1, model_cap)?;
            let m2 = IndependenceModel::of(&g2, model_cap)?;
            let equivalent = m1 == m2;
            let mut out = json!({ "equivalent": equivalent });
            if *diff {
                let rows: Vec<Value> = model_diff(&m1, &m2)?
                    .iter()
                    .map(|d| {
                        json!({
                            "from": g1.label(d.alpha),
                            "to": g1.label(d.beta),
                            "given": labels_of(&g1, &d.c),
                            "separated_in": if d.in_first { "first" } else { "second" },
                        })
                    })
                    .collect();
                out["differences"] = json!(rows);
            }
            print_json(&out);
            Ok(equivalent)
        }
        Command::Class { graph, enumerate, edge_cap } => {
            let members = equivalence_class(&read_graph(graph)?, model_cap, *edge_cap)?;
            if !*enumerate {
                json_only(cli.format, "class without --enumerate")?;
                print_json(&json!({ "members": members.len() }));
                return Ok(true);
            }
            match cli.format {
                Format::Json => {
                    let docs = members
                        .iter()
                        .map(|m| serde_json::to_value(GraphDocument::from_graph(m)))
                        .collect::<Result<Vec<_>, _>>()?;
                    print_json(&json!({ "members": docs }));
                }
                Format::Dot => members.iter().for_each(|m| print!("{}", export_dot(m))),
            }
            Ok(true)
        }
        Command::Unroll { graph, horizon } => {
            let g = read_graph(graph)?;
            let u = unroll(&g, horizon.0.resolve(&g))?;
            print_graph(cli.format, u.dag());
            Ok(true)
        }
        Command::RollCheck { graph, horizon } => {
            json_only(cli.format, "roll-check")?;
            let g = read_graph(graph)?;
            let t = horizon.0.resolve(&g);
            let outcomes = rolling_sweep(&g, &[t], model_cap)?;
            let forward_failures = outcomes.iter().filter(|o| o.check.rolled && !o.check.unrolled).count();
            let only_unrolled = outcomes.iter().filter(|o| !o.check.rolled && o.check.unrolled).count();
            let bound = proof_horizon(&g);
            print_json(&json!({
                "horizon": t,
                "proof_horizon": bound,
                "queries": outcomes.len(),
                "rolled_only": forward_failures,
                "unrolled_only": only_unrolled,
            }));
            Ok(forward_failures == 0 && (t < bound || only_unrolled == 0))
        }
        Command::Selfcheck { seed, density, count, max_order } => {
            json_only(cli.format, "selfcheck")?;
            if !(0.0..=1.0).contains(density) {
                bail!("density must lie in [0, 1], got {density}");
            }
            let config = SelfCheckConfig { seed: *seed, density: *density, count: *count, max_order: *max_order, ..Default::default() };
            let report = selfcheck(&config)?;
            let failures: Vec<Value> = report
                .failures
                .iter()
                .map(|f| json!({ "graph": f.graph, "check": f.check, "detail": f.detail }))
                .collect();
            print_json(&json!({
                "graphs": report.graphs,
                "comparisons": report.comparisons,
                "failures": failures,
            }));
            Ok(report.failures.is_empty())
        }
    }
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn horizon_argument() {
        assert!(matches!("auto".parse::<HorizonArg>(), Ok(HorizonArg(Horizon::Auto))));
        assert!(matches!("7".parse::<HorizonArg>(), Ok(HorizonArg(Horizon::Fixed(7)))));
        assert!("-1".parse::<HorizonArg>().is_err());
    }

    #[test]
    fn label_lists() {
        let g = Dmg::new(["a", "b", "c"]).unwrap();
        assert_eq!(label_set(&g, "").unwrap(), VertexSet::new());
        assert_eq!(label_set(&g, " a, c ").unwrap(), g.vertex_set(&["a", "c"]).unwrap());
        assert!(label_set(&g, "a,z").is_err());
    }

    #[test]
    fn cli_definition_is_consistent() {
        use clap::CommandFactory;
        Cli::command().debug_assert();
    }
}
