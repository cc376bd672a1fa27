//! Command-line surface over the `rcw` library: decide sequents, emit
//! countermodels, cross-check against the bounded oracle, dump canonical
//! models, and time the decision procedure on growing formula ladders.
//!
//! Exit codes: 0 provable, 1 not provable, 2 parse or usage error, 3
//! inconclusive oracle verdict.

use std::io::Read as _;
use std::path::PathBuf;
use std::time::Instant;

use clap::{Parser, Subcommand, ValueEnum};
use rand::prelude::*;
use rand_chacha::ChaCha8Rng;
use rcw::oracle::{cross_check, Budgets, CrossCheck};
use rcw::{
    canonical_tree, decide, generated_submodel, rc_model, rcw_model, rj_model, Formula, Logic,
    Model, Modality, Sequent, Verdict,
};

#[derive(Parser)]
#[command(
    name = "rcw",
    version,
    about = "Decide sequents of the strictly positive provability logics RJ, RC and RCw"
)]
struct Cli {
    #[command(subcommand)]
    command: Command,
}

#[derive(Clone, Copy, PartialEq, Eq, ValueEnum)]
enum LogicArg {
    Rj,
    Rc,
    Rcw,
}

impl From<LogicArg> for Logic {
    fn from(a: LogicArg) -> Logic {
        match a {
            LogicArg::Rj => Logic::Rj,
            LogicArg::Rc => Logic::Rc,
            LogicArg::Rcw => Logic::Rcw,
        }
    }
}

#[derive(Clone, Copy, PartialEq, Eq, ValueEnum)]
enum Format {
    Text,
    Json,
    Dot,
}

#[derive(Clone, Copy, PartialEq, Eq, ValueEnum)]
enum Stage {
    Tree,
    Rj,
    Rc,
    Rcw,
}

#[derive(Subcommand)]
enum Command {
    /// Decide a sequent, optionally writing a countermodel witness.
    Decide {
        /// The sequent `A |- B`; read from standard input when omitted.
        sequent: Option<String>,
        #[arg(long, value_enum, default_value = "rcw")]
        logic: LogicArg,
        #[arg(long, value_enum, default_value = "text")]
        format: Format,
        /// Write the witness here when the sequent is not provable.
        #[arg(long)]
        countermodel: Option<PathBuf>,
    },
    /// Cross-check a sequent with bounded proof search and model search.
    Oracle {
        /// The sequent `A |- B`; read from standard input when omitted.
        sequent: Option<String>,
        #[arg(long, value_enum, default_value = "rcw")]
        logic: LogicArg,
        #[arg(long, value_enum, default_value = "text")]
        format: Format,
        /// Proof search depth budget.
        #[arg(long, default_value_t = 8)]
        depth: usize,
        /// Largest cut formula tried; twice the larger side when omitted.
        #[arg(long)]
        size_cap: Option<usize>,
        /// Largest countermodel searched for, at most 5 nodes.
        #[arg(long, default_value_t = 4)]
        max_nodes: usize,
        /// Write the witness here when the sequent is refuted.
        #[arg(long)]
        countermodel: Option<PathBuf>,
    },
    /// Time the decision procedure on two doubling formula ladders.
    Bench {
        #[arg(long, value_enum, default_value = "rcw")]
        logic: LogicArg,
        #[arg(long, value_enum, default_value = "text")]
        format: Format,
        /// Sequent size of the first rung.
        #[arg(long, default_value_t = 64)]
        start: usize,
        /// Number of doublings after the first rung; 0 reports variance only.
        #[arg(long, default_value_t = 5)]
        doublings: usize,
        /// Seeds the label pattern of the generated families.
        #[arg(long, default_value_t = 0)]
        seed: u64,
    },
    /// Print the canonical tree of a formula or one of its closures.
    Canonical {
        /// The formula; read from standard input when omitted.
        formula: Option<String>,
        #[arg(long, value_enum, default_value = "tree")]
        stage: Stage,
        #[arg(long, value_enum, default_value = "text")]
        format: Format,
    },
}

fn main() {
    let cli = Cli::parse();
    // Deep input nests cheaply; give the whole run a roomy stack.
    let worker = std::thread::Builder::new()
        .stack_size(64 * 1024 * 1024)
        .spawn(move || run(cli))
        .expect("failed to spawn the worker thread");
    let code = match worker.join() {
        Ok(code) => code,
        Err(payload) => std::panic::resume_unwind(payload),
    };
    std::process::exit(code);
}

fn run(cli: Cli) -> i32 {
    match cli.command {
        Command::Decide {
            sequent,
            logic,
            format,
            countermodel,
        } => cmd_decide(sequent, logic.into(), format, countermodel),
        Command::Oracle {
            sequent,
            logic,
            format,
            depth,
            size_cap,
            max_nodes,
            countermodel,
        } => cmd_oracle(
            sequent,
            logic.into(),
            format,
            Budgets {
                depth,
                size_cap,
                max_nodes,
            },
            countermodel,
        ),
        Command::Bench {
            logic,
            format,
            start,
            doublings,
            seed,
        } => cmd_bench(logic.into(), format, start, doublings, seed),
        Command::Canonical {
            formula,
            stage,
            format,
        } => cmd_canonical(formula, stage, format),
    }
}

fn input_or_stdin(arg: Option<String>) -> String {
    match arg {
        Some(text) => text,
        None => {
            let mut buf = String::new();
            std::io::stdin()
                .read_to_string(&mut buf)
                .expect("reading standard input failed");
            buf
        }
    }
}

fn write_witness(path: &PathBuf, m: &Model, format: Format) {
    let payload = match format {
        Format::Dot => m.to_dot(),
        _ => m.to_json(),
    };
    if let Err(e) = std::fs::write(path, payload) {
        eprintln!("could not write {}: {e}", path.display());
    }
}

fn model_json(m: &Model) -> serde_json::Value {
    serde_json::from_str(&m.to_json()).expect("model serialization is valid JSON")
}

fn print_model(m: &Model) {
    match m.root() {
        Some(root) => println!("nodes: {} (root {root})", m.node_count()),
        None => println!("nodes: {}", m.node_count()),
    }
    println!("edges:");
    for (label, from, to) in m.all_edges() {
        println!("  {from} -{label}-> {to}");
    }
    println!("valuation:");
    for (var, nodes) in m.valuation() {
        let list: Vec<String> = nodes.iter().map(|n| n.to_string()).collect();
        println!("  {var}: {}", list.join(" "));
    }
}

fn cmd_decide(arg: Option<String>, logic: Logic, format: Format, out: Option<PathBuf>) -> i32 {
    let text = input_or_stdin(arg);
    let s: Sequent = match text.trim().parse() {
        Ok(s) => s,
        Err(e) => {
            eprintln!("{e}");
            return 2;
        }
    };
    match decide(&s, logic) {
        Verdict::Provable => {
            match format {
                Format::Text => println!("{s} is provable in {logic}"),
                Format::Json => println!(
                    "{}",
                    serde_json::json!({
                        "sequent": s.to_string(),
                        "logic": logic.to_string(),
                        "verdict": "provable",
                    })
                ),
                Format::Dot => println!("// {s} is provable in {logic}; no countermodel"),
            }
            0
        }
        Verdict::NotProvable(m) => {
            let root = m.root().expect("countermodels are rooted");
            let m = generated_submodel(&m, root).expect("the root lies in the model");
            if let Some(path) = &out {
                write_witness(path, &m, format);
            }
            match format {
                Format::Text => println!(
                    "{s} is not provable in {logic} (countermodel with {} nodes)",
                    m.node_count()
                ),
                Format::Json => println!(
                    "{}",
                    serde_json::json!({
                        "sequent": s.to_string(),
                        "logic": logic.to_string(),
                        "verdict": "not provable",
                        "countermodel": model_json(&m),
                    })
                ),
                Format::Dot => print!("{}", m.to_dot()),
            }
            1
        }
    }
}

fn cmd_oracle(
    arg: Option<String>,
    logic: Logic,
    format: Format,
    budgets: Budgets,
    out: Option<PathBuf>,
) -> i32 {
    if budgets.depth == 0 || budgets.max_nodes == 0 || budgets.size_cap == Some(0) {
        eprintln!("budgets must be positive");
        return 2;
    }
    if budgets.max_nodes > 5 {
        eprintln!("--max-nodes is capped at 5");
        return 2;
    }
    let text = input_or_stdin(arg);
    let s: Sequent = match text.trim().parse() {
        Ok(s) => s,
        Err(e) => {
            eprintln!("{e}");
            return 2;
        }
    };
    let outcome = cross_check(&s, logic, &budgets).expect("budgets were validated above");
    match outcome {
        CrossCheck::Provable(d) => {
            match format {
                Format::Text => {
                    println!("{s} is provable in {logic}; derivation:");
                    print!("{d}");
                }
                Format::Json => println!(
                    "{}",
                    serde_json::json!({
                        "sequent": s.to_string(),
                        "logic": logic.to_string(),
                        "result": "provable",
                        "derivation": d.to_json(),
                    })
                ),
                Format::Dot => println!("// {s} is provable in {logic}; no countermodel"),
            }
            0
        }
        CrossCheck::NotProvable(m) => {
            if let Some(path) = &out {
                write_witness(path, &m, format);
            }
            match format {
                Format::Text => {
                    println!(
                        "{s} is not provable in {logic}; countermodel with {} nodes:",
                        m.node_count()
                    );
                    print_model(&m);
                }
                Format::Json => println!(
                    "{}",
                    serde_json::json!({
                        "sequent": s.to_string(),
                        "logic": logic.to_string(),
                        "result": "not provable",
                        "countermodel": model_json(&m),
                    })
                ),
                Format::Dot => print!("{}", m.to_dot()),
            }
            1
        }
        CrossCheck::Inconclusive => {
            match format {
                Format::Text => println!("{s}: inconclusive within the given budgets"),
                Format::Json => println!(
                    "{}",
                    serde_json::json!({
                        "sequent": s.to_string(),
                        "logic": logic.to_string(),
                        "result": "inconclusive",
                    })
                ),
                Format::Dot => println!("// {s}: inconclusive within the given budgets"),
            }
            3
        }
    }
}

/// Left-deep conjunction of `k` diamonds over `p`, labels cycling through
/// the shuffled pattern; size `3k - 1`.
fn wide_family(k: usize, pattern: &[Modality]) -> Formula {
    let mut parts =
        (0..k).map(|i| Formula::dia(pattern[i % pattern.len()], Formula::var("p")));
    let first = parts.next().expect("at least one conjunct");
    parts.fold(first, Formula::and)
}

/// Nested chain of `k` diamonds over `p`, labels cycling; size `k + 1`.
fn chain_family(k: usize, pattern: &[Modality]) -> Formula {
    (0..k)
        .rev()
        .fold(Formula::var("p"), |acc, i| {
            Formula::dia(pattern[i % pattern.len()], acc)
        })
}

fn fitted_slope(points: &[(usize, f64)]) -> f64 {
    let xs: Vec<f64> = points.iter().map(|&(n, _)| (n as f64).ln()).collect();
    let ys: Vec<f64> = points.iter().map(|&(_, t)| t.max(1e-9).ln()).collect();
    let mx = xs.iter().sum::<f64>() / xs.len() as f64;
    let my = ys.iter().sum::<f64>() / ys.len() as f64;
    let cov: f64 = xs.iter().zip(&ys).map(|(x, y)| (x - mx) * (y - my)).sum();
    let var: f64 = xs.iter().map(|x| (x - mx).powi(2)).sum();
    cov / var
}

fn cmd_bench(logic: Logic, format: Format, start: usize, doublings: usize, seed: u64) -> i32 {
    if format == Format::Dot {
        eprintln!("bench has no dot rendering; use text or json");
        return 2;
    }
    if start < 4 {
        eprintln!("--start must be at least 4");
        return 2;
    }
    let mut pattern = [Modality::Nat(0), Modality::Nat(1), Modality::Omega];
    pattern.shuffle(&mut ChaCha8Rng::seed_from_u64(seed));

    let mut report = Vec::new();
    for family in ["wide", "chain"] {
        let mut points: Vec<(usize, f64)> = Vec::new();
        let mut spreads: Vec<(usize, f64, f64)> = Vec::new();
        for i in 0..=doublings {
            let n = start << i;
            let a = match family {
                "wide" => wide_family((n + 1) / 3, &pattern),
                _ => chain_family(n - 1, &pattern),
            };
            let s = Sequent::new(a, Formula::Top);
            let mut reps: Vec<f64> = (0..5)
                .map(|_| {
                    let t = Instant::now();
                    let _ = decide(&s, logic);
                    t.elapsed().as_secs_f64()
                })
                .collect();
            reps.sort_by(f64::total_cmp);
            points.push((n, reps[2]));
            spreads.push((n, reps[0], reps[4]));
        }
        let slope = (points.len() >= 2).then(|| fitted_slope(&points));
        report.push((family, points, spreads, slope));
    }

    match format {
        Format::Json => {
            let families: Vec<serde_json::Value> = report
                .iter()
                .map(|(family, points, spreads, slope)| {
                    serde_json::json!({
                        "family": family,
                        "points": points
                            .iter()
                            .zip(spreads)
                            .map(|(&(n, median), &(_, min, max))| serde_json::json!({
                                "size": n,
                                "median_seconds": median,
                                "min_seconds": min,
                                "max_seconds": max,
                            }))
                            .collect::<Vec<_>>(),
                        "slope": slope,
                    })
                })
                .collect();
            println!(
                "{}",
                serde_json::json!({
                    "logic": logic.to_string(),
                    "seed": seed,
                    "families": families,
                })
            );
        }
        _ => {
            for (family, points, spreads, slope) in &report {
                println!("family {family}, logic {logic}, seed {seed}");
                println!("  {:>8}  {:>12}  {:>12}  {:>12}", "size", "min", "median", "max");
                for (&(n, median), &(_, min, max)) in points.iter().zip(spreads) {
                    println!("  {n:>8}  {min:>12.6}  {median:>12.6}  {max:>12.6}");
                }
                match slope {
                    Some(k) => println!("  fitted log-log slope: {k:.2}"),
                    None => println!("  single rung; variance only"),
                }
            }
        }
    }
    0
}

fn cmd_canonical(arg: Option<String>, stage: Stage, format: Format) -> i32 {
    let text = input_or_stdin(arg);
    let f: Formula = match text.trim().parse() {
        Ok(f) => f,
        Err(e) => {
            eprintln!("{e}");
            return 2;
        }
    };
    let sig = f.signature();
    let m = match stage {
        Stage::Tree => canonical_tree(&f),
        Stage::Rj => rj_model(&f, &sig),
        Stage::Rc => rc_model(&f, &sig),
        Stage::Rcw => rcw_model(&f, &sig),
    };
    match format {
        Format::Text => print_model(&m),
        Format::Json => println!("{}", m.to_json()),
        Format::Dot => print!("{}", m.to_dot()),
    }
    0
}
