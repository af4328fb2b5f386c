//! `cherecut`: command-line front end.
//!
//! Every command reads one problem document (`--input`), prints either a
//! human summary or, with `--json`, a single JSON object, and exits with
//! 0 on success or a true verdict, 1 on a false verdict and 2 on bad input.

use std::fs;
use std::io::Write;
use std::path::PathBuf;
use std::process::ExitCode;

use clap::{Args, Parser, Subcommand, ValueEnum};
use rayon::prelude::*;
use serde::Serialize;
use serde_json::{json, Map, Value};

use cherecut_core::{
    admits_cut, charged_loading, count_multipartitions, diagonal_sets, enumerate_sstd, factor_decomposition,
    kunneth_combine, lambda_set_in, load_problem, render_russian, render_theta_diagram, residue_sequence, split,
    split_pair, split_tableau, subquotient_graded_dim, tableau_degree, theta_dominates, verify_index_bijection,
    verify_tableau_bijection, CutMode, CutSet, CutSpec, DominancePoset, ExtTable, GradedPoly, Multipartition, Problem,
};

#[derive(Parser)]
#[command(name = "cherecut", version, about = "Loadings, tableaux and diagonal cuts of multipartitions")]
struct Cli {
    #[command(subcommand)]
    command: Command,
}

#[derive(Args, Clone)]
struct Io {
    /// Problem document (JSON).
    #[arg(long)]
    input: Option<PathBuf>,
    /// Write output here instead of standard output.
    #[arg(long)]
    output: Option<PathBuf>,
    /// Emit a single JSON object.
    #[arg(long)]
    json: bool,
}

#[derive(Args, Clone)]
struct Shape {
    /// Name of the multipartition λ in the document.
    #[arg(long, default_value = "lambda")]
    shape: String,
}

#[derive(Args, Clone)]
struct Pair {
    #[arg(long, default_value = "lambda")]
    shape: String,
    /// Name of the multipartition μ in the document.
    #[arg(long, default_value = "mu")]
    weight: String,
}

#[derive(Args, Clone)]
struct Cut {
    /// Cut abscissa, e.g. `26/5`; defaults to the document's cut.
    #[arg(long, allow_hyphen_values = true)]
    a: Option<String>,
    /// `strict` or `lenient`.
    #[arg(long)]
    mode: Option<String>,
}

#[derive(Args, Clone)]
struct Limit {
    /// Refuse to materialize a dominance poset larger than this.
    #[arg(long, default_value_t = 5000)]
    max_poset: u128,
}

#[derive(Args, Clone)]
struct Operands {
    /// JSON literal, or the name of an entry in the document.
    #[arg(long)]
    left: String,
    #[arg(long)]
    right: String,
}

#[derive(Clone, Copy, PartialEq, Eq, ValueEnum)]
enum Kind {
    Russian,
    Theta,
}

#[derive(Clone, Copy, PartialEq, Eq, ValueEnum)]
enum Piece {
    Whole,
    Left,
    Right,
}

#[derive(Subcommand)]
enum Command {
    /// Check a problem document.
    Validate {
        #[command(flatten)]
        io: Io,
    },
    /// Charged loading and residue sequence of a multipartition.
    Loading {
        #[command(flatten)]
        io: Io,
        #[command(flatten)]
        shape: Shape,
    },
    /// Whether λ θ-dominates μ.
    Dominance {
        #[command(flatten)]
        io: Io,
        #[command(flatten)]
        pair: Pair,
    },
    /// Semistandard tableaux of shape λ and weight μ with their degrees.
    Sstd {
        #[command(flatten)]
        io: Io,
        #[command(flatten)]
        pair: Pair,
        /// Print every tableau as `node → position` lines.
        #[arg(long)]
        list: bool,
    },
    /// Whether (λ, μ) admits a diagonal cut at x = a.
    CutCheck {
        #[command(flatten)]
        io: Io,
        #[command(flatten)]
        pair: Pair,
        #[command(flatten)]
        cut: Cut,
    },
    /// The pieces λ^L, μ^L, λ^R, μ^R of a cut pair.
    CutSplit {
        #[command(flatten)]
        io: Io,
        #[command(flatten)]
        pair: Pair,
        #[command(flatten)]
        cut: Cut,
    },
    /// Λ_a relative to λ with its closures.
    LambdaSet {
        #[command(flatten)]
        io: Io,
        #[command(flatten)]
        shape: Shape,
        #[command(flatten)]
        cut: Cut,
        #[command(flatten)]
        limit: Limit,
    },
    /// Check the index bijection, the tableau bijection and the graded
    /// dimension factorization on Λ_a.
    CutVerify {
        #[command(flatten)]
        io: Io,
        #[command(flatten)]
        shape: Shape,
        #[command(flatten)]
        cut: Cut,
        #[command(flatten)]
        limit: Limit,
    },
    /// Graded dimension of the subquotient indexed by Λ_a.
    Grdim {
        #[command(flatten)]
        io: Io,
        #[command(flatten)]
        shape: Shape,
        #[command(flatten)]
        cut: Cut,
        #[command(flatten)]
        limit: Limit,
    },
    /// Product of two graded polynomials.
    Factor {
        #[command(flatten)]
        io: Io,
        #[command(flatten)]
        operands: Operands,
    },
    /// Künneth combination of two Ext tables.
    Kunneth {
        #[command(flatten)]
        io: Io,
        #[command(flatten)]
        operands: Operands,
    },
    /// SVG of a Russian array or a θ-diagram.
    Render {
        #[command(flatten)]
        io: Io,
        #[arg(long, value_enum, default_value = "russian")]
        kind: Kind,
        #[arg(long, default_value = "lambda")]
        shape: String,
        /// Weight of the tableau for `--kind theta`.
        #[arg(long, default_value = "mu")]
        weight: String,
        #[command(flatten)]
        cut: Cut,
        #[arg(long, value_enum, default_value = "whole")]
        piece: Piece,
        /// Which tableau of SStd(λ, μ), in enumeration order.
        #[arg(long, default_value_t = 0)]
        index: usize,
    },
}

/// An input problem; reported with exit status 2.
struct Failure(String);

impl<E: std::fmt::Display> From<E> for Failure {
    fn from(e: E) -> Self {
        Failure(e.to_string())
    }
}

struct Outcome {
    value: Value,
    verdict: bool,
    /// Human output that replaces the generic rendering of `value`.
    text: Option<String>,
}

impl Outcome {
    fn ok(value: Value) -> Self {
        Outcome { value, verdict: true, text: None }
    }

    fn verdict(value: Value, verdict: bool) -> Self {
        Outcome { value, verdict, text: None }
    }
}

fn to_value<T: Serialize>(x: &T) -> Value {
    serde_json::to_value(x).expect("output types serialize")
}

fn load(io: &Io) -> Result<Problem, Failure> {
    let path = io.input.as_ref().ok_or_else(|| Failure("--input is required".into()))?;
    let text = fs::read_to_string(path).map_err(|e| Failure(format!("{}: {e}", path.display())))?;
    load_problem(&text).map_err(|e| Failure(format!("{}: {e}", path.display())))
}

fn cut_of(problem: &Problem, cut: &Cut) -> Result<CutSpec, Failure> {
    let mode = match &cut.mode {
        Some(m) => m.parse::<CutMode>()?,
        None => problem.cut.as_ref().map(|c| c.mode()).unwrap_or_default(),
    };
    let spec = match &cut.a {
        Some(a) => CutSpec::parse(a, mode)?,
        None => {
            let c = problem
                .cut
                .as_ref()
                .ok_or_else(|| Failure("no cut: pass --a or add \"cut\" to the document".into()))?;
            CutSpec::new(c.position().clone(), mode)?
        }
    };
    spec.validate(problem.params.n, &problem.params)?;
    Ok(spec)
}

fn cut_value(cut: &CutSpec) -> Value {
    json!({ "a": cut.position().to_string(), "mode": cut.mode().to_string() })
}

fn poset_for(problem: &Problem, limit: &Limit) -> Result<DominancePoset, Failure> {
    let p = &problem.params;
    let count = count_multipartitions(p.n, p.ell);
    if count > limit.max_poset {
        return Err(Failure(format!(
            "there are {count} multipartitions of {} with {} components; raise --max-poset to allow more than {}",
            p.n, p.ell, limit.max_poset
        )));
    }
    Ok(DominancePoset::new(p.n, p))
}

fn closure_matches(set: &CutSet) -> bool {
    let inter: Vec<&Multipartition> = set.saturated.iter().filter(|m| set.cosaturated.contains(m)).collect();
    inter.len() == set.members.len() && inter.iter().all(|m| set.contains(m))
}

fn poly_operand(problem: Option<&Problem>, arg: &str) -> Result<GradedPoly, Failure> {
    if arg.trim_start().starts_with('{') {
        return serde_json::from_str(arg).map_err(|e| Failure(format!("polynomial {arg}: {e}")));
    }
    problem
        .and_then(|p| p.polys.get(arg))
        .cloned()
        .ok_or_else(|| Failure(format!("no polynomial named {arg:?} (pass a JSON literal or --input)")))
}

fn ext_operand(problem: Option<&Problem>, arg: &str) -> Result<ExtTable, Failure> {
    if arg.trim_start().starts_with('{') {
        return serde_json::from_str(arg).map_err(|e| Failure(format!("Ext table {arg}: {e}")));
    }
    problem
        .and_then(|p| p.ext.get(arg))
        .cloned()
        .ok_or_else(|| Failure(format!("no Ext table named {arg:?} (pass a JSON literal or --input)")))
}

fn optional_problem(io: &Io) -> Result<Option<Problem>, Failure> {
    io.input.as_ref().map(|_| load(io)).transpose()
}

fn run(command: &Command) -> Result<Outcome, Failure> {
    match command {
        Command::Validate { io } => {
            let problem = load(io)?;
            let p = &problem.params;
            let mut value = json!({
                "valid": true,
                "n": p.n,
                "ell": p.ell,
                "e": to_value(&p.e),
                "theta": p.theta,
                "kappa": p.kappa,
                "well_separated": p.is_well_separated(),
                "multipartitions": problem.multipartitions.keys().collect::<Vec<_>>(),
                "polys": problem.polys.keys().collect::<Vec<_>>(),
                "ext": problem.ext.keys().collect::<Vec<_>>(),
            });
            if let Some(cut) = &problem.cut {
                value["cut"] = cut_value(cut);
                value["red_lines_in_band"] = to_value(&cherecut_core::red_lines_in_band(cut, p));
            }
            Ok(Outcome::ok(value))
        }
        Command::Loading { io, shape } => {
            let problem = load(io)?;
            let lambda = problem.multipartition(&shape.shape)?;
            let p = &problem.params;
            let entries: Vec<Value> = charged_loading(lambda, p)
                .entries()
                .iter()
                .map(|e| json!({ "pos": e.pos.to_string(), "res": e.res.0, "node": [e.node.row, e.node.col, e.node.comp] }))
                .collect();
            let mut text = String::new();
            for e in charged_loading(lambda, p).entries() {
                text.push_str(&format!("{} : {}\n", e.pos, e.res.0));
            }
            Ok(Outcome {
                text: Some(text),
                ..Outcome::ok(json!({
                    "shape": to_value(lambda),
                    "loading": entries,
                    "residue_sequence": residue_sequence(lambda, p).iter().map(|r| r.0).collect::<Vec<_>>(),
                }))
            })
        }
        Command::Dominance { io, pair } => {
            let problem = load(io)?;
            let (lambda, mu) = (problem.multipartition(&pair.shape)?, problem.multipartition(&pair.weight)?);
            let p = &problem.params;
            let forward = theta_dominates(lambda, mu, p)?;
            let backward = theta_dominates(mu, lambda, p)?;
            Ok(Outcome {
                text: Some(format!("{forward}\n")),
                ..Outcome::verdict(
                    json!({
                        "lambda": to_value(lambda),
                        "mu": to_value(mu),
                        "lambda_dominates_mu": forward,
                        "mu_dominates_lambda": backward,
                    }),
                    forward,
                )
            })
        }
        Command::Sstd { io, pair, list } => {
            let problem = load(io)?;
            let (lambda, mu) = (problem.multipartition(&pair.shape)?, problem.multipartition(&pair.weight)?);
            let p = &problem.params;
            let tableaux = enumerate_sstd(lambda, mu, p)?;
            let mut poly = GradedPoly::zero();
            let mut text = String::new();
            let listed: Vec<Value> = tableaux
                .iter()
                .map(|t| {
                    let degree = tableau_degree(t, p);
                    poly.add_term(degree, 1);
                    if *list {
                        text.push_str(&format!("\ntableau of degree {degree}\n"));
                        for f in t.fillings() {
                            text.push_str(&format!("({},{},{}) → {}\n", f.node.row, f.node.col, f.node.comp, f.target));
                        }
                    }
                    let fillings: Vec<Value> = t
                        .fillings()
                        .iter()
                        .map(|f| json!({ "node": [f.node.row, f.node.col, f.node.comp], "target": f.target.to_string(), "res": f.res.0 }))
                        .collect();
                    json!({ "degree": degree, "fillings": fillings })
                })
                .collect();
            let mut head = format!("count: {}\n", tableaux.len());
            for (degree, count) in poly.terms() {
                head.push_str(&format!("degree {degree}: {count}\n"));
            }
            Ok(Outcome {
                text: Some(head + &text),
                ..Outcome::ok(json!({
                    "lambda": to_value(lambda),
                    "mu": to_value(mu),
                    "count": tableaux.len(),
                    "generating_poly": to_value(&poly),
                    "tableaux": listed,
                }))
            })
        }
        Command::CutCheck { io, pair, cut } => {
            let problem = load(io)?;
            let (lambda, mu) = (problem.multipartition(&pair.shape)?, problem.multipartition(&pair.weight)?);
            let p = &problem.params;
            let cut = cut_of(&problem, cut)?;
            let admits = admits_cut(lambda, mu, &cut, p)?;
            let d = diagonal_sets(lambda, &cut, p)?;
            let band: Vec<Value> =
                d.diagonal.charged_points().into_iter().map(|(x, r)| json!([x.to_string(), r.0])).collect();
            Ok(Outcome::verdict(
                json!({
                    "verdict": if admits { "admits" } else { "does not admit" },
                    "admits": admits,
                    "cut": cut_value(&cut),
                    "diagonal": band,
                    "left": d.left.len(),
                    "right": d.right.len(),
                    "red_lines_in_band": d.red_lines_in_band,
                }),
                admits,
            ))
        }
        Command::CutSplit { io, pair, cut } => {
            let problem = load(io)?;
            let (lambda, mu) = (problem.multipartition(&pair.shape)?, problem.multipartition(&pair.weight)?);
            let p = &problem.params;
            let cut = cut_of(&problem, cut)?;
            if !admits_cut(lambda, mu, &cut, p)? {
                return Ok(Outcome::verdict(json!({ "admits": false, "cut": cut_value(&cut) }), false));
            }
            let s = split_pair(lambda, mu, &cut, p)?;
            Ok(Outcome::ok(json!({
                "admits": true,
                "cut": cut_value(&cut),
                "lambda_left": to_value(&s.lambda_left),
                "mu_left": to_value(&s.mu_left),
                "lambda_right": to_value(&s.lambda_right),
                "mu_right": to_value(&s.mu_right),
                "n_left": s.n_left,
                "n_right": s.n_right,
                "red_lines_in_band": cherecut_core::red_lines_in_band(&cut, p),
            })))
        }
        Command::LambdaSet { io, shape, cut, limit } => {
            let problem = load(io)?;
            let lambda = problem.multipartition(&shape.shape)?;
            let cut = cut_of(&problem, cut)?;
            let poset = poset_for(&problem, limit)?;
            let set = lambda_set_in(&poset, lambda, &cut, &problem.params)?;
            Ok(Outcome::ok(json!({
                "reference": to_value(lambda),
                "cut": cut_value(&cut),
                "size": set.len(),
                "members": to_value(&set.members),
                "saturated_size": set.saturated.len(),
                "cosaturated_size": set.cosaturated.len(),
                "equals_closure_intersection": closure_matches(&set),
            })))
        }
        Command::CutVerify { io, shape, cut, limit } => {
            let problem = load(io)?;
            let lambda = problem.multipartition(&shape.shape)?;
            let cut = cut_of(&problem, cut)?;
            let p = &problem.params;
            let poset = poset_for(&problem, limit)?;
            let set = lambda_set_in(&poset, lambda, &cut, p)?;
            let index = verify_index_bijection(&set, p)?;

            let pairs: Vec<(&Multipartition, &Multipartition)> =
                set.members.iter().flat_map(|a| set.members.iter().map(move |b| (a, b))).collect();
            let reports = pairs
                .par_iter()
                .map(|(a, b)| verify_tableau_bijection(a, b, &cut, p))
                .collect::<cherecut_core::Result<Vec<_>>>()?;
            let tableaux: usize = reports.iter().map(|r| r.count).sum();
            let failures: Vec<String> = reports.iter().flat_map(|r| r.failures.iter().cloned()).collect();

            let pieces = split(lambda, &cut, p)?;
            let dim = |x: &Multipartition| -> Result<GradedPoly, Failure> {
                let q = poset_for(&Problem { params: p.with_n(x.size()), ..problem.clone() }, limit)?;
                Ok(subquotient_graded_dim(&lambda_set_in(&q, x, &cut, p)?, p)?)
            };
            let whole = subquotient_graded_dim(&set, p)?;
            let (left, right) = (dim(&pieces.left)?, dim(&pieces.right)?);
            let factorizes = whole == &left * &right;
            let closed = closure_matches(&set);
            let verdict = index.injective && index.onto_product && failures.is_empty() && factorizes && closed;
            Ok(Outcome::verdict(
                json!({
                    "verdict": verdict,
                    "cut": cut_value(&cut),
                    "size": set.len(),
                    "equals_closure_intersection": closed,
                    "index_bijection": to_value(&index),
                    "tableau_bijection": { "pairs": pairs.len(), "tableaux": tableaux, "failures": failures },
                    "graded_dim": {
                        "whole": to_value(&whole),
                        "left": to_value(&left),
                        "right": to_value(&right),
                        "factorizes": factorizes,
                    },
                }),
                verdict,
            ))
        }
        Command::Grdim { io, shape, cut, limit } => {
            let problem = load(io)?;
            let lambda = problem.multipartition(&shape.shape)?;
            let cut = cut_of(&problem, cut)?;
            let poset = poset_for(&problem, limit)?;
            let set = lambda_set_in(&poset, lambda, &cut, &problem.params)?;
            let dim = subquotient_graded_dim(&set, &problem.params)?;
            Ok(Outcome::ok(json!({
                "cut": cut_value(&cut),
                "size": set.len(),
                "graded_dim": to_value(&dim),
                "dimension": dim.eval_one(),
            })))
        }
        Command::Factor { io, operands } => {
            let problem = optional_problem(io)?;
            let left = poly_operand(problem.as_ref(), &operands.left)?;
            let right = poly_operand(problem.as_ref(), &operands.right)?;
            let product = to_value(&factor_decomposition(&left, &right));
            let text = Some(format!("{product}\n"));
            Ok(Outcome { value: product, verdict: true, text })
        }
        Command::Kunneth { io, operands } => {
            let problem = optional_problem(io)?;
            let left = ext_operand(problem.as_ref(), &operands.left)?;
            let right = ext_operand(problem.as_ref(), &operands.right)?;
            let table = to_value(&kunneth_combine(&left, &right));
            let text = Some(format!("{table}\n"));
            Ok(Outcome { value: table, verdict: true, text })
        }
        Command::Render { io, kind, shape, weight, cut, piece, index } => {
            let problem = load(io)?;
            let p = &problem.params;
            let lambda = problem.multipartition(shape)?;
            let cut = match (&cut.a, &problem.cut, piece) {
                (None, None, Piece::Whole) => None,
                _ => Some(cut_of(&problem, cut)?),
            };
            let figure = match kind {
                Kind::Russian => {
                    let target = match (piece, &cut) {
                        (Piece::Whole, _) => lambda.clone(),
                        (Piece::Left, Some(c)) => split(lambda, c, p)?.left,
                        (Piece::Right, Some(c)) => split(lambda, c, p)?.right,
                        _ => unreachable!("pieces always come with a cut"),
                    };
                    render_russian(&target, cut.as_ref(), p)
                }
                Kind::Theta => {
                    let mu = problem.multipartition(weight)?;
                    let all = enumerate_sstd(lambda, mu, p)?;
                    let t = all
                        .get(*index)
                        .ok_or_else(|| Failure(format!("SStd({shape}, {weight}) has {} tableaux", all.len())))?;
                    let t = match (piece, &cut) {
                        (Piece::Whole, _) => t.clone(),
                        (Piece::Left, Some(c)) => split_tableau(t, c, p)?.0,
                        (Piece::Right, Some(c)) => split_tableau(t, c, p)?.1,
                        _ => unreachable!("pieces always come with a cut"),
                    };
                    render_theta_diagram(&t, cut.as_ref(), p)
                }
            };
            let svg = figure.to_svg();
            let kind = match kind {
                Kind::Russian => "russian",
                Kind::Theta => "theta",
            };
            Ok(Outcome { value: json!({ "kind": kind, "svg": svg.clone() }), verdict: true, text: Some(svg) })
        }
    }
}

fn is_scalar(v: &Value) -> bool {
    !matches!(v, Value::Object(_))
        && !matches!(v, Value::Array(items) if items.iter().any(|x| matches!(x, Value::Object(_))))
}

fn scalar(v: &Value) -> String {
    match v {
        Value::String(s) => s.clone(),
        other => other.to_string(),
    }
}

fn write_human(out: &mut String, map: &Map<String, Value>, indent: usize) {
    let pad = " ".repeat(indent);
    for (key, v) in map {
        if is_scalar(v) {
            out.push_str(&format!("{pad}{key}: {}\n", scalar(v)));
            continue;
        }
        out.push_str(&format!("{pad}{key}:\n"));
        match v {
            Value::Object(inner) => write_human(out, inner, indent + 2),
            Value::Array(items) => {
                for item in items {
                    match item {
                        Value::Object(inner) => {
                            out.push_str(&format!("{pad}  -\n"));
                            write_human(out, inner, indent + 4);
                        }
                        other => out.push_str(&format!("{pad}  - {}\n", scalar(other))),
                    }
                }
            }
            _ => unreachable!(),
        }
    }
}

/// Human output, derived from the JSON value only.
fn human(value: &Value) -> String {
    match value {
        Value::Object(map) => {
            let mut out = String::new();
            write_human(&mut out, map, 0);
            out
        }
        other => format!("{}\n", scalar(other)),
    }
}

fn configure_threads() -> Result<(), Failure> {
    let Ok(raw) = std::env::var("CHERECUT_THREADS") else { return Ok(()) };
    let threads: usize = raw.trim().parse().map_err(|_| Failure(format!("CHERECUT_THREADS={raw:?} is not a count")))?;
    if threads > 0 {
        rayon::ThreadPoolBuilder::new().num_threads(threads).build_global()?;
    }
    Ok(())
}

fn io_of(command: &Command) -> &Io {
    match command {
        Command::Validate { io }
        | Command::Loading { io, .. }
        | Command::Dominance { io, .. }
        | Command::Sstd { io, .. }
        | Command::CutCheck { io, .. }
        | Command::CutSplit { io, .. }
        | Command::LambdaSet { io, .. }
        | Command::CutVerify { io, .. }
        | Command::Grdim { io, .. }
        | Command::Factor { io, .. }
        | Command::Kunneth { io, .. }
        | Command::Render { io, .. } => io,
    }
}

fn emit(io: &Io, text: &str) -> Result<(), Failure> {
    match &io.output {
        Some(path) => fs::write(path, text).map_err(|e| Failure(format!("{}: {e}", path.display()))),
        None => {
            let mut stdout = std::io::stdout().lock();
            stdout.write_all(text.as_bytes())?;
            stdout.flush()?;
            Ok(())
        }
    }
}

/// `cherecut cut check ...` is accepted as `cherecut cut-check ...`, and
/// likewise for `split`, `lambda-set` and `verify`.
fn normalized_args() -> Vec<String> {
    let mut args: Vec<String> = std::env::args().collect();
    if args.len() > 2 && args[1] == "cut" && ["check", "split", "lambda-set", "verify"].contains(&args[2].as_str()) {
        let verb = args.remove(2);
        args[1] = if verb == "lambda-set" { verb } else { format!("cut-{verb}") };
    }
    args
}

fn main() -> ExitCode {
    let cli = Cli::parse_from(normalized_args());
    let io = io_of(&cli.command).clone();
    let result = configure_threads().and_then(|()| run(&cli.command)).and_then(|outcome| {
        let text = if io.json {
            format!("{}\n", outcome.value)
        } else {
            outcome.text.clone().unwrap_or_else(|| human(&outcome.value))
        };
        emit(&io, &text)?;
        Ok(outcome.verdict)
    });
    match result {
        Ok(true) => ExitCode::SUCCESS,
        Ok(false) => ExitCode::from(1),
        Err(Failure(message)) => {
            eprintln!("error: {message}");
            ExitCode::from(2)
        }
    }
}
