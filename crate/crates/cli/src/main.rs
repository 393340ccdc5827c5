use std::fs;
use std::path::{Path, PathBuf};
use std::process::ExitCode;
use std::time::Instant;

use clap::{Parser, Subcommand, ValueEnum};
use serde::Serialize;
use serde_json::{json, Value};
use sha2::{Digest, Sha256};

use combgroupoid::complex::CubicalComplex;
use combgroupoid::corpus::{bundled_dir, bundled_files, random_cubical};
use combgroupoid::games::{puzzle_holonomy, reachable, Puzzle};
use combgroupoid::graph::Graph;
use combgroupoid::graphconn::{connection_holonomy, validate_connection};
use combgroupoid::groupoid::tribar_groupoid;
use combgroupoid::holonomy::{holonomy_group, holonomy_order_invariance};
use combgroupoid::homcx::{induced_swap_action, HomComplex};
use combgroupoid::invariants::{
    compare_invariants, is_rainbow, transport_coloring, transport_parity_coloring,
};
use combgroupoid::io::{parse_complex_file, parse_connection, parse_state, to_pretty_json, Loaded};

#[derive(Parser)]
#[command(name = "groupoid", version, about = "Holonomy of combinatorial groupoids")]
struct Cli {
    #[arg(long, global = true, value_enum, default_value = "json")]
    format: Format,
    /// seed for every random choice
    #[arg(long, global = true, default_value_t = 0)]
    seed: u64,
    /// print the elapsed time to stderr
    #[arg(long, global = true)]
    timing: bool,
    #[command(subcommand)]
    command: Command,
}

#[derive(Clone, Copy, ValueEnum)]
enum Format {
    Json,
    Text,
}

#[derive(Subcommand)]
enum Command {
    /// Holonomy group of a complex or groupoid file
    Holonomy {
        input: PathBuf,
        #[arg(long, default_value_t = 0)]
        base: usize,
    },
    /// I and NaCl of a cubical complex
    Invariants { input: PathBuf },
    /// Vertex coloring by parallel transport
    Coloring { input: PathBuf },
    /// Sliding-piece puzzles on grid boards
    Puzzle {
        #[command(subcommand)]
        action: PuzzleAction,
    },
    /// Cells, f-vector and swap action of Hom(G, H)
    Hom {
        #[arg(long)]
        g: String,
        #[arg(long)]
        h: String,
        /// comma separated: fvector, euler, free-action, cells
        #[arg(long, default_value = "fvector,euler,free-action")]
        report: String,
    },
    /// Validate a graph connection and compute its holonomy
    Connection {
        input: PathBuf,
        #[arg(long, default_value_t = 0)]
        base: usize,
    },
    /// Seeded sweep comparing I and NaCl, or bundled corpus maintenance
    Corpus {
        #[command(subcommand)]
        action: Option<CorpusAction>,
        #[arg(long, default_value_t = 100)]
        count: usize,
    },
    /// Holonomy of the built-in impossible tribar groupoid
    Tribar,
}

#[derive(Subcommand)]
enum PuzzleAction {
    Holonomy {
        #[arg(long, default_value = "4x4")]
        board: String,
        /// cell of the hole at the base state; defaults to the last cell
        #[arg(long)]
        hole: Option<usize>,
    },
    Reach {
        #[arg(long, default_value = "4x4")]
        board: String,
        #[arg(long)]
        from: PathBuf,
        #[arg(long)]
        to: PathBuf,
    },
}

#[derive(Subcommand)]
enum CorpusAction {
    /// Write the bundled examples into a directory
    Export { dir: PathBuf },
    /// Check that the corpus directory matches the built-in examples
    Check,
}

enum Failure {
    /// bad input or unmet precondition, exit 2
    Input(String),
    /// computed, but a property the theory guarantees did not hold, exit 1
    Violation(Value),
}

struct Inputs {
    digest: Sha256,
    used: bool,
}

impl Inputs {
    /// Reads `path`, falling back to the corpus directory for bare names.
    fn read(&mut self, path: &Path) -> Result<String, Failure> {
        let resolved = if path.exists() || path.components().count() > 1 {
            path.to_path_buf()
        } else {
            bundled_dir().join(path)
        };
        let bytes = fs::read(&resolved)
            .map_err(|e| Failure::Input(format!("{}: {e}", path.display())))?;
        self.digest.update(&bytes);
        self.used = true;
        String::from_utf8(bytes).map_err(|e| Failure::Input(format!("{}: {e}", path.display())))
    }
}

fn input_error(path: &Path) -> impl Fn(combgroupoid::io::IoError) -> Failure + '_ {
    move |e| Failure::Input(format!("{}: {e}", path.display()))
}

fn to_value<T: Serialize>(v: &T) -> Value {
    serde_json::to_value(v).expect("results serialize")
}

fn holonomy(inputs: &mut Inputs, path: &Path, base: usize, seed: u64) -> Result<Value, Failure> {
    let doc = parse_complex_file(&inputs.read(path)?)
        .and_then(|f| f.load())
        .map_err(input_error(path))?;
    let g = doc.body.groupoid();
    let h = holonomy_group(&g, base).map_err(|e| Failure::Input(e.to_string()))?;
    let mut out = json!({
        "name": doc.name,
        "kind": doc.body.kind(),
        "objects": g.object_count(),
        "holonomy": h.summary(&g),
        "tree_independent": holonomy_order_invariance(&g, &[seed, seed + 1, seed + 2]),
    });
    if let Some(signed) = h.signed_generators() {
        out["signed_generators"] = to_value(&signed);
    }
    Ok(out)
}

fn cubical(inputs: &mut Inputs, path: &Path) -> Result<(Option<String>, CubicalComplex), Failure> {
    let doc = parse_complex_file(&inputs.read(path)?)
        .and_then(|f| f.load())
        .map_err(input_error(path))?;
    match doc.body {
        Loaded::Cubical(k) => Ok((doc.name, k)),
        other => Err(Failure::Input(format!(
            "{}: expected a cubical complex, found {}",
            path.display(),
            other.kind()
        ))),
    }
}

fn invariants(inputs: &mut Inputs, path: &Path) -> Result<Value, Failure> {
    let (name, k) = cubical(inputs, path)?;
    let r = compare_invariants(&k);
    let mut out = to_value(&r);
    out["name"] = json!(name);
    if r.i > r.nacl || (r.hypotheses_hold() && !r.equal) {
        return Err(Failure::Violation(out));
    }
    Ok(out)
}

fn coloring(inputs: &mut Inputs, path: &Path) -> Result<Value, Failure> {
    let doc = parse_complex_file(&inputs.read(path)?)
        .and_then(|f| f.load())
        .map_err(input_error(path))?;
    let (colors, rainbow) = match &doc.body {
        Loaded::Simplicial(k) => match transport_coloring(k) {
            Ok(c) => {
                let ok = is_rainbow(k, &c);
                (Ok(to_value(&c)), ok)
            }
            Err(e) => (Err(e.to_string()), true),
        },
        Loaded::Cubical(k) => match transport_parity_coloring(k) {
            Ok(c) => {
                let ok = k.one_skeleton().is_proper_coloring(&c);
                (Ok(to_value(&c)), ok)
            }
            Err(e) => (Err(e.to_string()), true),
        },
        Loaded::Groupoid(_) => {
            return Err(Failure::Input(format!("{}: expected a complex", path.display())))
        }
    };
    let out = match colors {
        Ok(c) => json!({"name": doc.name, "colored": true, "coloring": c, "valid": rainbow}),
        Err(reason) => json!({"name": doc.name, "colored": false, "reason": reason}),
    };
    if !rainbow {
        return Err(Failure::Violation(out));
    }
    Ok(out)
}

fn board(name: &str) -> Result<Puzzle, Failure> {
    let bad = |e: String| Failure::Input(format!("board {name}: {e}"));
    let g = Graph::from_name(name).map_err(|e| bad(e.to_string()))?;
    Puzzle::new(g).map_err(|e| bad(e.to_string()))
}

fn puzzle(inputs: &mut Inputs, action: &PuzzleAction) -> Result<Value, Failure> {
    match action {
        PuzzleAction::Holonomy { board: name, hole } => {
            let p = board(name)?;
            let hole = hole.unwrap_or(p.cell_count() - 1);
            let group = puzzle_holonomy(&p, hole).map_err(|e| Failure::Input(e.to_string()))?;
            Ok(json!({
                "board": name,
                "hole": hole,
                "pieces": p.piece_count(),
                "order": group.order().to_string(),
                "tag": group.recognize(),
            }))
        }
        PuzzleAction::Reach { board: name, from, to } => {
            let p = board(name)?;
            let a = parse_state(&inputs.read(from)?).map_err(input_error(from))?;
            let b = parse_state(&inputs.read(to)?).map_err(input_error(to))?;
            let ok = reachable(&p, &a, &b).map_err(|e| Failure::Input(e.to_string()))?;
            Ok(json!({
                "board": name,
                "reachable": ok,
                "verdict": if ok { "reachable" } else { "unreachable" },
            }))
        }
    }
}

fn hom(g: &str, h: &str, report: &str) -> Result<Value, Failure> {
    let graph = |name: &str| Graph::from_name(name).map_err(|e| Failure::Input(e.to_string()));
    let (gg, hh) = (graph(g)?, graph(h)?);
    let x = HomComplex::new(&gg, &hh).map_err(|e| Failure::Input(e.to_string()))?;
    let mut out = json!({"g": g, "h": h, "cells": x.len(), "dim": x.dim()});
    for item in report.split(',').map(str::trim).filter(|s| !s.is_empty()) {
        match item {
            "fvector" => out["f_vector"] = to_value(&x.f_vector()),
            "euler" => out["euler_characteristic"] = json!(x.euler_characteristic()),
            "free-action" => {
                out["swap"] = match induced_swap_action(&x) {
                    Ok(s) => json!({
                        "free": s.is_free(),
                        "involutive": s.involutive,
                        "fixed_points": s.fixed_points.len(),
                    }),
                    Err(e) => json!({"unavailable": e.to_string()}),
                }
            }
            "cells" => {
                out["cell_list"] = x.cells().iter().map(|c| to_value(&c.sets())).collect()
            }
            other => return Err(Failure::Input(format!("unknown report item {other}"))),
        }
    }
    Ok(out)
}

fn connection(inputs: &mut Inputs, path: &Path, base: usize) -> Result<Value, Failure> {
    let c = parse_connection(&inputs.read(path)?).map_err(input_error(path))?;
    let check = validate_connection(&c).map_err(|e| Failure::Input(e.to_string()))?;
    if !check.valid {
        return Err(Failure::Violation(json!({ "check": check })));
    }
    let h = connection_holonomy(&c, base).map_err(|e| Failure::Input(e.to_string()))?;
    let g = c.groupoid().map_err(|e| Failure::Input(e.to_string()))?;
    Ok(json!({"check": check, "holonomy": h.summary(&g)}))
}

fn sweep(seed: u64, count: usize) -> Result<Value, Failure> {
    let mut bounded = 0;
    let mut hypotheses = 0;
    let mut equal = 0;
    let mut violations = Vec::new();
    for e in random_cubical(seed, count) {
        let r = compare_invariants(&e.complex);
        if r.i <= r.nacl {
            bounded += 1;
        } else {
            violations.push(e.name.clone());
        }
        if r.hypotheses_hold() {
            hypotheses += 1;
            if r.equal {
                equal += 1;
            } else {
                violations.push(e.name);
            }
        }
    }
    let out = json!({
        "seed": seed,
        "count": count,
        "bound_held": bounded,
        "both_hypotheses": hypotheses,
        "equal_under_hypotheses": equal,
        "verdict": format!("I≤NaCl held {bounded}/{count}; I=NaCl held {equal}/{hypotheses} under both hypotheses"),
        "violations": violations,
    });
    if bounded < count || equal < hypotheses {
        return Err(Failure::Violation(out));
    }
    Ok(out)
}

fn corpus(action: &Option<CorpusAction>, seed: u64, count: usize) -> Result<Value, Failure> {
    match action {
        None => sweep(seed, count),
        Some(CorpusAction::Export { dir }) => {
            fs::create_dir_all(dir).map_err(|e| Failure::Input(format!("{}: {e}", dir.display())))?;
            let files = bundled_files();
            for (name, body) in &files {
                fs::write(dir.join(name), body)
                    .map_err(|e| Failure::Input(format!("{name}: {e}")))?;
            }
            Ok(json!({"written": files.keys().collect::<Vec<_>>()}))
        }
        Some(CorpusAction::Check) => {
            let dir = bundled_dir();
            let mut stale = Vec::new();
            for (name, body) in bundled_files() {
                if fs::read_to_string(dir.join(&name)).ok().as_deref() != Some(body.as_str()) {
                    stale.push(name);
                }
            }
            let out = json!({"dir": dir.display().to_string(), "stale": stale});
            if !stale.is_empty() {
                return Err(Failure::Violation(out));
            }
            Ok(out)
        }
    }
}

fn tribar() -> Result<Value, Failure> {
    let g = tribar_groupoid();
    let h = holonomy_group(&g, 0).map_err(|e| Failure::Input(e.to_string()))?;
    Ok(json!({
        "holonomy": h.summary(&g),
        "signed_generators": h.signed_generators(),
    }))
}

fn run(cli: &Cli, inputs: &mut Inputs) -> Result<Value, Failure> {
    match &cli.command {
        Command::Holonomy { input, base } => holonomy(inputs, input, *base, cli.seed),
        Command::Invariants { input } => invariants(inputs, input),
        Command::Coloring { input } => coloring(inputs, input),
        Command::Puzzle { action } => puzzle(inputs, action),
        Command::Hom { g, h, report } => hom(g, h, report),
        Command::Connection { input, base } => connection(inputs, input, *base),
        Command::Corpus { action, count } => corpus(action, cli.seed, *count),
        Command::Tribar => tribar(),
    }
}

fn render_text(value: &Value, indent: usize, out: &mut String) {
    let Value::Object(map) = value else {
        out.push_str(&format!("{}{value}\n", " ".repeat(indent)));
        return;
    };
    for (k, v) in map {
        match v {
            Value::Object(_) => {
                out.push_str(&format!("{}{k}:\n", " ".repeat(indent)));
                render_text(v, indent + 2, out);
            }
            Value::String(s) => out.push_str(&format!("{}{k}: {s}\n", " ".repeat(indent))),
            _ => out.push_str(&format!("{}{k}: {v}\n", " ".repeat(indent))),
        }
    }
}

fn main() -> ExitCode {
    let echo: Vec<String> = std::env::args().skip(1).collect();
    let cli = Cli::parse();
    let started = Instant::now();
    let mut inputs = Inputs {
        digest: Sha256::new(),
        used: false,
    };
    let outcome = run(&cli, &mut inputs);
    if cli.timing {
        eprintln!("elapsed: {:?}", started.elapsed());
    }
    let (results, code) = match outcome {
        Ok(v) => (v, 0),
        Err(Failure::Violation(v)) => (v, 1),
        Err(Failure::Input(message)) => {
            eprintln!("error: {message}");
            return ExitCode::from(2);
        }
    };
    let digest = inputs
        .used
        .then(|| format!("{:x}", inputs.digest.finalize()));
    let report = json!({"command": echo, "input_digest": digest, "results": results});
    match cli.format {
        Format::Json => print!("{}", to_pretty_json(&report)),
        Format::Text => {
            let mut out = String::new();
            render_text(&report, 0, &mut out);
            print!("{out}");
        }
    }
    ExitCode::from(code)
}
