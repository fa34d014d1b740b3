//! The `sandpile` command line.
//!
//! Every subcommand produces a JSON value; `--format text` flattens it to
//! `key: value` lines. Exit codes: 0 on success, 1 on bad input, 2 when a
//! verification fails.

use std::path::{Path, PathBuf};
use std::process::ExitCode;

use clap::{Parser, Subcommand, ValueEnum};
use rand::rngs::StdRng;
use rand::SeedableRng;
use serde_json::{json, Value};

use crate::error::{Error, Result};
use crate::graph::{SinkedGraph, VertexId};
use crate::hypercube::{
    verify_decomposition, verify_even_cone_counterexample, verify_if_count, verify_structure,
};
use crate::io::{self, GraphFile};
use crate::linalg::{smith_normal_form, GroupStructure};
use crate::morphism::{find_violation, validate_hom, InducedMap, InjectionOptions, InjectionReport};
use crate::product::BoxContext;
use crate::sandpile::{Certificate, RecurrentConfig, Sandpile, ORBIT_GUARD};

#[derive(Debug, Clone, Copy, PartialEq, Eq, ValueEnum)]
pub enum Format {
    Json,
    Text,
}

#[derive(Debug, Parser)]
#[command(name = "sandpile", version, about = "Sandpile groups, dynamics and homomorphisms")]
pub struct Cli {
    /// Output format.
    #[arg(long, global = true, env = "SANDPILE_FORMAT", default_value = "json")]
    pub format: Format,
    #[command(subcommand)]
    pub command: Command,
}

#[derive(Debug, Clone, Copy, PartialEq, Eq, ValueEnum)]
pub enum Verify {
    Structure,
    Decomposition,
    EvenCounterexample,
    IfCount,
    All,
}

#[derive(Debug, Subcommand)]
pub enum Command {
    /// Invariant factors, elementary divisors and order of SP(G, s).
    Group {
        graph: PathBuf,
        #[arg(long)]
        sink: Option<String>,
    },
    /// Stabilize a configuration, reporting the firing vector.
    Stabilize {
        graph: PathBuf,
        config: PathBuf,
        #[arg(long)]
        sink: Option<String>,
        /// Accept negative entries (they never topple).
        #[arg(long)]
        allow_negative: bool,
    },
    /// The identity of the sandpile group.
    Identity {
        graph: PathBuf,
        #[arg(long)]
        sink: Option<String>,
    },
    /// Enumerate all recurrent configurations.
    Recurrents {
        graph: PathBuf,
        #[arg(long)]
        sink: Option<String>,
        #[arg(long, default_value_t = ORBIT_GUARD)]
        guard: usize,
    },
    /// Sum of two recurrent configurations.
    Add {
        graph: PathBuf,
        a: PathBuf,
        b: PathBuf,
        #[arg(long)]
        sink: Option<String>,
    },
    /// The recurrent configuration equivalent to an arbitrary integer vector.
    Representative {
        graph: PathBuf,
        config: PathBuf,
        #[arg(long)]
        sink: Option<String>,
    },
    /// Validate a homomorphism file and optionally check the induced map.
    CheckHom {
        g: PathBuf,
        h: PathBuf,
        hom: PathBuf,
        #[arg(long)]
        sink_g: Option<String>,
        #[arg(long)]
        sink_h: Option<String>,
        #[arg(long)]
        verify_injection: bool,
        #[arg(long, default_value_t = 0)]
        seed: u64,
        #[arg(long, default_value_t = 100)]
        samples: usize,
    },
    /// Box product of configurations on cones over G and H.
    Product {
        g: PathBuf,
        h: PathBuf,
        a: PathBuf,
        b: PathBuf,
        /// Number of edges from each vertex to the cone sink.
        #[arg(long, default_value_t = 1)]
        n: u64,
        /// Certify recurrence of the product (inputs must be recurrent).
        #[arg(long)]
        certify: bool,
    },
    /// Structure checks for cones over hypercubes.
    Hypercube {
        #[arg(long)]
        d: usize,
        #[arg(long, default_value_t = 0)]
        k: u64,
        #[arg(long, value_enum, default_value = "all")]
        verify: Verify,
        #[arg(long, default_value_t = 6)]
        max_d: usize,
    },
    /// Smith normal form of an integer matrix.
    Snf {
        matrix: PathBuf,
        /// Also print the unimodular transforms.
        #[arg(long)]
        transforms: bool,
    },
}

/// A command's result: the report and whether every check passed.
#[derive(Debug, Clone, PartialEq)]
pub struct Outcome {
    pub value: Value,
    pub passed: bool,
}

impl Outcome {
    fn ok(value: Value) -> Self {
        Outcome { value, passed: true }
    }

    fn checked(value: Value, passed: bool) -> Self {
        Outcome { value, passed }
    }
}

fn read(path: &Path) -> Result<String> {
    std::fs::read_to_string(path).map_err(|e| Error::Io(path.display().to_string(), e.to_string()))
}

fn load_graph(path: &Path) -> Result<GraphFile> {
    io::parse_graph(&read(path)?)
}

fn load_pile(path: &Path, sink: Option<&str>) -> Result<Sandpile> {
    let sink = sink.map(VertexId::from);
    Sandpile::new(load_graph(path)?.sinked(sink.as_ref())?)
}

fn load_config(path: &Path) -> Result<Vec<i64>> {
    io::parse_config(&read(path)?)
}

fn labels(g: &SinkedGraph) -> Value {
    json!(g.nonsink_labels().iter().map(VertexId::as_str).collect::<Vec<_>>())
}

fn certificate_json(c: &RecurrentConfig, g: &SinkedGraph) -> Value {
    match c.certificate() {
        Certificate::Burning(order) => {
            let names = g.nonsink_labels();
            json!({
                "kind": "burning",
                "order": order.iter().map(|&p| names[p].as_str()).collect::<Vec<_>>(),
            })
        }
        Certificate::Reachable => json!({"kind": "reachable"}),
        Certificate::IdentityFixed => json!({"kind": "identity-fixed"}),
    }
}

fn check_nonnegative(c: &[i64]) -> Result<()> {
    match c.iter().position(|&x| x < 0) {
        Some(p) => Err(Error::NegativeEntry(p)),
        None => Ok(()),
    }
}

fn injection_json(r: &InjectionReport) -> Value {
    json!({
        "kind": r.kind.as_str(),
        "source_order": r.source_order.to_string(),
        "target_order": r.target_order.to_string(),
        "image_order": r.image_order.to_string(),
        "well_defined": r.well_defined,
        "recurrence_preserved": r.recurrence_preserved,
        "homomorphism": r.homomorphism,
        "injective": r.injective,
        "enumerated": r.enumerated,
        "pairs_checked": r.pairs_checked,
        "witness": r.witness,
        "passed": r.passed(),
    })
}

fn to_value(v: impl serde::Serialize) -> Value {
    serde_json::to_value(v).expect("reports always serialize")
}

/// Runs one command.
pub fn execute(command: &Command) -> Result<Outcome> {
    match command {
        Command::Group { graph, sink } => {
            let pile = load_pile(graph, sink.as_deref())?;
            Ok(Outcome::ok(io::group_json(pile.structure())))
        }
        Command::Stabilize {
            graph,
            config,
            sink,
            allow_negative,
        } => {
            let pile = load_pile(graph, sink.as_deref())?;
            let c = load_config(config)?;
            if !allow_negative {
                check_nonnegative(&c)?;
            }
            let s = pile.stabilize(&c)?;
            Ok(Outcome::ok(json!({"stable": s.stable, "firings": s.firings})))
        }
        Command::Identity { graph, sink } => {
            let pile = load_pile(graph, sink.as_deref())?;
            let e = pile.identity()?;
            Ok(Outcome::ok(json!({
                "identity": e.values(),
                "labels": labels(pile.graph()),
            })))
        }
        Command::Recurrents { graph, sink, guard } => {
            let pile = load_pile(graph, sink.as_deref())?;
            let mut all: Vec<Vec<i64>> = pile.recurrents(*guard)?.into_iter().map(RecurrentConfig::into_values).collect();
            all.sort();
            Ok(Outcome::ok(json!({
                "count": all.len(),
                "labels": labels(pile.graph()),
                "recurrents": all,
            })))
        }
        Command::Add { graph, a, b, sink } => {
            let pile = load_pile(graph, sink.as_deref())?;
            let a = pile.recurrent(&load_config(a)?)?;
            let b = pile.recurrent(&load_config(b)?)?;
            let sum = pile.add(&a, &b)?;
            Ok(Outcome::ok(json!({"sum": sum.values()})))
        }
        Command::Representative { graph, config, sink } => {
            let pile = load_pile(graph, sink.as_deref())?;
            let r = pile.recurrent_representative(&load_config(config)?)?;
            let order = pile.element_order(r.values())?;
            Ok(Outcome::ok(json!({
                "representative": r.values(),
                "order": order.to_string(),
                "certificate": certificate_json(&r, pile.graph()),
            })))
        }
        Command::CheckHom {
            g,
            h,
            hom,
            sink_g,
            sink_h,
            verify_injection,
            seed,
            samples,
        } => check_hom(g, h, hom, sink_g.as_deref(), sink_h.as_deref(), *verify_injection, *seed, *samples),
        Command::Product { g, h, a, b, n, certify } => {
            let (gf, hf) = (load_graph(g)?, load_graph(h)?);
            let (gg, hh) = match (gf.graph.as_undirected(), hf.graph.as_undirected()) {
                (Some(x), Some(y)) => (x, y),
                _ => return Err(Error::NotUndirected),
            };
            let ctx = BoxContext::new(gg, hh, *n)?;
            let (a, b) = (load_config(a)?, load_config(b)?);
            let config = ctx.box_config(&a, &b)?;
            let mut out = json!({
                "config": config,
                "labels": labels(ctx.product().graph()),
                "stable": ctx.product().is_stable(&config),
            });
            if *certify {
                let ra = ctx.left().recurrent(&a)?;
                let rb = ctx.right().recurrent(&b)?;
                let c = ctx.box_recurrent(&ra, &rb)?;
                out["certificate"] = certificate_json(&c, ctx.product().graph());
            }
            Ok(Outcome::ok(out))
        }
        Command::Hypercube { d, k, verify, max_d } => hypercube(*d, *k, *verify, *max_d),
        Command::Snf { matrix, transforms } => {
            let m = io::parse_matrix(&read(matrix)?)?;
            let s = smith_normal_form(&m);
            let diag = s.diagonal();
            let group = GroupStructure::from_smith_diagonal(&diag).ok().map(|g| io::group_json(&g));
            let mut out = json!({
                "diagonal": diag.iter().map(ToString::to_string).collect::<Vec<_>>(),
                "cokernel": group,
            });
            if *transforms {
                out["u"] = io::matrix_json(&s.u);
                out["v"] = io::matrix_json(&s.v);
            }
            Ok(Outcome::ok(out))
        }
    }
}

#[allow(clippy::too_many_arguments)]
fn check_hom(
    g: &Path,
    h: &Path,
    hom: &Path,
    sink_g: Option<&str>,
    sink_h: Option<&str>,
    verify: bool,
    seed: u64,
    samples: usize,
) -> Result<Outcome> {
    let (gf, hf) = (load_graph(g)?, load_graph(h)?);
    let file = io::parse_hom(&read(hom)?, &gf.graph, &hf.graph)?;
    if let Some(v) = find_violation(&file.map, &file.subset, file.kind)? {
        return Ok(Outcome::checked(
            json!({
                "valid": false,
                "clause": v.clause.as_str(),
                "witness": v.witness,
            }),
            false,
        ));
    }
    let hom = validate_hom(file.map, &file.subset, file.kind)?;
    let mut out = json!({"valid": true, "kind": hom.kind().as_str(), "degree": hom.degree()});
    if !verify {
        return Ok(Outcome::ok(out));
    }
    let pick = |flag: Option<&str>, f: &GraphFile| -> Result<VertexId> {
        flag.map(VertexId::from)
            .or_else(|| f.sink.clone())
            .ok_or_else(|| Error::PreconditionViolated("no sink given".into()))
    };
    let induced = InducedMap::new(hom, &pick(sink_g, &gf)?, &pick(sink_h, &hf)?)?;
    let opts = InjectionOptions {
        samples,
        ..InjectionOptions::default()
    };
    let report = induced.verify_injection(&opts, &mut StdRng::seed_from_u64(seed))?;
    out["injection"] = injection_json(&report);
    Ok(Outcome::checked(out, report.passed()))
}

fn hypercube(d: usize, k: u64, verify: Verify, max_d: usize) -> Result<Outcome> {
    if d > max_d {
        return Err(Error::BoundExceeded(format!("d = {d} exceeds --max-d {max_d}")));
    }
    let mut out = serde_json::Map::new();
    let mut passed = true;
    let all = verify == Verify::All;
    if all || verify == Verify::Structure {
        let r = verify_structure(d, k)?;
        passed &= r.passed;
        out.insert("structure".into(), to_value(r));
    }
    if all || verify == Verify::Decomposition {
        let r = verify_decomposition(d)?;
        passed &= r.passed;
        out.insert("decomposition".into(), to_value(r));
    }
    if all || verify == Verify::EvenCounterexample {
        let r = verify_even_cone_counterexample()?;
        passed &= r.passed;
        out.insert("even_counterexample".into(), to_value(r));
    }
    if all || verify == Verify::IfCount {
        let r = verify_if_count(d)?;
        passed &= r.passed;
        out.insert("if_count".into(), to_value(r));
    }
    out.insert("passed".into(), passed.into());
    Ok(Outcome::checked(Value::Object(out), passed))
}

/// Flattens a JSON value into sorted `path: value` lines.
pub fn render_text(value: &Value) -> String {
    fn walk(prefix: &str, v: &Value, out: &mut String) {
        match v {
            Value::Object(map) => {
                for (k, x) in map {
                    let p = if prefix.is_empty() { k.clone() } else { format!("{prefix}.{k}") };
                    walk(&p, x, out);
                }
            }
            Value::Array(items) if items.iter().any(|x| x.is_object() || x.is_array()) => {
                for (i, x) in items.iter().enumerate() {
                    walk(&format!("{prefix}[{i}]"), x, out);
                }
            }
            Value::Array(items) => {
                let parts: Vec<String> = items.iter().map(scalar).collect();
                out.push_str(&format!("{prefix}: {}\n", parts.join(" ")));
            }
            _ => out.push_str(&format!("{prefix}: {}\n", scalar(v))),
        }
    }
    fn scalar(v: &Value) -> String {
        match v {
            Value::String(s) => s.clone(),
            other => other.to_string(),
        }
    }
    let mut out = String::new();
    walk("", value, &mut out);
    out
}

/// Parses arguments, runs the command, prints the result, and maps the
/// outcome to an exit code.
pub fn main_with(cli: Cli) -> ExitCode {
    match execute(&cli.command) {
        Ok(outcome) => {
            let text = match cli.format {
                Format::Json => io::render(&outcome.value),
                Format::Text => render_text(&outcome.value),
            };
            print!("{text}");
            if outcome.passed {
                ExitCode::SUCCESS
            } else {
                eprintln!("FAIL");
                ExitCode::from(2)
            }
        }
        Err(e) => {
            eprintln!("error: {e}");
            ExitCode::from(1)
        }
    }
}
