//! `rankdual`: command-line access to weights, diagrams, fusion rules,
//! conformal block dimensions and the rank-level duality checks.

mod parse;
mod verify;

use std::fmt::Write as _;
use std::io::Write as _;
use std::path::PathBuf;
use std::process::ExitCode;

use clap::{Parser, Subcommand, ValueEnum};
use serde_json::{json, Value};

use rankdual::fusion::oracle::{OracleLimits, SMatrix};
use rankdual::{block_dim, branching_summands, enumerate_aff, enumerate_weights, CurveSpec, FusionContext, YoungDiagram};

const SCHEMA: &str = "rankdual/1";
const DEFAULT_SEED: u64 = 0x5eed_2011;

#[derive(Parser)]
#[command(name = "rankdual", version, about = "Rank-level duality for sl(r) conformal blocks")]
struct Cli {
    /// Output format.
    #[arg(long, value_enum, default_value_t = Format::Text, global = true)]
    format: Format,
    /// Write output to a file instead of stdout.
    #[arg(long, global = true)]
    out: Option<PathBuf>,
    #[command(subcommand)]
    command: Command,
}

#[derive(Clone, Copy, PartialEq, Eq, ValueEnum)]
enum Format {
    Text,
    Json,
}

#[derive(Clone, Copy, PartialEq, Eq, ValueEnum)]
enum Show {
    All,
    Transpose,
    Dagger,
    Pi,
    Size,
}

#[derive(Subcommand)]
enum Command {
    /// List the dominant weights of sl(r) at level l.
    Weights {
        #[arg(long)]
        rank: usize,
        #[arg(long)]
        level: usize,
    },
    /// Inspect one diagram of type (r,l), or list the affine set.
    Young {
        #[arg(long)]
        rank: usize,
        #[arg(long)]
        level: usize,
        /// Rows, e.g. 6,4,3.
        #[arg(long)]
        diagram: Option<String>,
        #[arg(long, value_enum, default_value_t = Show::All)]
        show: Show,
        /// Restrict the listing to diagrams with size ≡ K mod rl.
        #[arg(long, value_name = "K")]
        size_class: Option<usize>,
    },
    /// Fusion product, or a single fusion coefficient when --nu is given.
    Fusion {
        #[arg(long)]
        rank: usize,
        #[arg(long)]
        level: usize,
        #[arg(long)]
        lambda: String,
        #[arg(long)]
        mu: String,
        #[arg(long)]
        nu: Option<String>,
    },
    /// Dimension of a space of conformal blocks.
    Dim {
        #[arg(long)]
        rank: usize,
        #[arg(long)]
        level: usize,
        #[arg(long, default_value_t = 0)]
        genus: usize,
        /// Weight at a marked point; repeat for several points.
        #[arg(long = "label", value_name = "W")]
        labels: Vec<String>,
        /// Also evaluate the floating-point Verlinde formula.
        #[arg(long)]
        oracle: bool,
    },
    /// Branching of a level-one sl(rl) module into sl(r) x sl(l) pieces.
    Branch {
        #[arg(long)]
        rank: usize,
        #[arg(long)]
        level: usize,
        /// The level-one label λ_0 ∈ 0..rl.
        #[arg(long)]
        size: usize,
    },
    /// Run a verification suite; exits 1 on the first failing suite.
    Verify {
        #[arg(value_enum)]
        suite: verify::Suite,
        #[arg(long)]
        rank: Option<usize>,
        #[arg(long)]
        level: Option<usize>,
        #[arg(long, default_value_t = 2)]
        genus: usize,
        /// Bound on r·l when no explicit pair is given.
        #[arg(long, default_value_t = 8)]
        max_rl: usize,
        #[arg(long, default_value_t = DEFAULT_SEED)]
        seed: u64,
        /// Number of random cases for sampled suites.
        #[arg(long)]
        count: Option<usize>,
    },
}

/// What a command produced: a text rendering, a JSON document and whether
/// everything it checked held.
struct Output {
    text: String,
    json: Value,
    ok: bool,
}

impl Output {
    fn ok(text: String, json: Value) -> Self {
        Self { text, json, ok: true }
    }
}

fn rows(xs: &[usize]) -> String {
    xs.iter().map(usize::to_string).collect::<Vec<_>>().join(",")
}

fn lib<T>(r: rankdual::Result<T>) -> Result<T, String> {
    r.map_err(|e| e.to_string())
}

fn weights_cmd(rank: usize, level: usize) -> Result<Output, String> {
    if rank == 0 {
        return Err("rank must be positive".into());
    }
    let ws = enumerate_weights(rank, level);
    let mut text = String::new();
    for (i, w) in ws.iter().enumerate() {
        let _ = writeln!(text, "{i:>4}  {:<16} {w}", rows(w.labels()));
    }
    let json = json!({
        "schema": SCHEMA,
        "command": "weights",
        "rank": rank,
        "level": level,
        "count": ws.len(),
        "weights": ws.iter().map(|w| w.labels().to_vec()).collect::<Vec<_>>(),
    });
    Ok(Output::ok(text, json))
}

fn young_row(name: &str, y: &YoungDiagram) -> (String, Value) {
    let line = format!("{name:<5} {:<12} {:<10} {}", rows(y.rows()), rows(y.pi().labels()), y.size());
    let json = json!({
        "diagram": name,
        "type": [y.rank(), y.level()],
        "rows": y.rows(),
        "pi": y.pi().labels(),
        "size": y.size(),
    });
    (line, json)
}

fn young_cmd(rank: usize, level: usize, diagram: Option<String>, show: Show, size_class: Option<usize>) -> Result<Output, String> {
    let Some(literal) = diagram else {
        let ys = lib(enumerate_aff(rank, level, size_class))?;
        let mut text = String::new();
        for y in &ys {
            let _ = writeln!(text, "{:<12} {:<10} {}", rows(y.rows()), rows(y.pi().labels()), y.size());
        }
        let json = json!({
            "schema": SCHEMA,
            "command": "young",
            "type": [rank, level],
            "size_class": size_class,
            "count": ys.len(),
            "diagrams": ys.iter().map(|y| y.rows().to_vec()).collect::<Vec<_>>(),
        });
        return Ok(Output::ok(text, json));
    };
    let y = parse::diagram(&literal, rank, level)?;
    let t = lib(y.transpose())?;
    let d = lib(y.dagger())?;
    let td = lib(d.transpose())?;
    let table: Vec<(&str, &YoungDiagram)> = match show {
        Show::All => vec![("Y", &y), ("tY", &t), ("Y†", &d), ("tY†", &td)],
        Show::Transpose => vec![("Y", &y), ("tY", &t)],
        Show::Dagger => vec![("Y", &y), ("Y†", &d)],
        Show::Pi | Show::Size => vec![("Y", &y)],
    };
    let mut text = String::new();
    match show {
        Show::Pi => {
            let _ = writeln!(text, "{}", rows(y.pi().labels()));
        }
        Show::Size => {
            let _ = writeln!(text, "{}", y.size());
        }
        _ => {
            let _ = writeln!(text, "{:<5} {:<12} {:<10} size", "", "rows", "pi");
            for (name, diagram) in &table {
                let _ = writeln!(text, "{}", young_row(name, diagram).0);
            }
        }
    }
    let json = json!({
        "schema": SCHEMA,
        "command": "young",
        "type": [rank, level],
        "is_fin": y.is_fin(),
        "diagrams": table.iter().map(|(n, d)| young_row(n, d).1).collect::<Vec<_>>(),
    });
    Ok(Output::ok(text, json))
}

fn fusion_cmd(rank: usize, level: usize, lambda: &str, mu: &str, nu: Option<&str>) -> Result<Output, String> {
    let ctx = lib(FusionContext::new(rank, level))?;
    let lambda = parse::weight(lambda, rank, level)?;
    let mu = parse::weight(mu, rank, level)?;
    if let Some(nu) = nu {
        let nu = parse::weight(nu, rank, level)?;
        let n = lib(ctx.fusion_coefficient(&lambda, &mu, &nu))?;
        let json = json!({
            "schema": SCHEMA,
            "command": "fusion",
            "rank": rank,
            "level": level,
            "lambda": lambda.labels(),
            "mu": mu.labels(),
            "nu": nu.labels(),
            "coefficient": n,
        });
        return Ok(Output::ok(format!("{n}\n"), json));
    }
    let product = lib(ctx.fusion_product(&lambda, &mu))?;
    let mut text = String::new();
    for (w, n) in &product {
        let _ = writeln!(text, "{n:>4}  {:<16} {w}", rows(w.labels()));
    }
    let terms: Vec<Value> = product
        .iter()
        .map(|(w, n)| json!({ "weight": w.labels(), "multiplicity": n }))
        .collect();
    let json = json!({
        "schema": SCHEMA,
        "command": "fusion",
        "rank": rank,
        "level": level,
        "lambda": lambda.labels(),
        "mu": mu.labels(),
        "product": terms,
    });
    Ok(Output::ok(text, json))
}

fn dim_cmd(rank: usize, level: usize, genus: usize, labels: &[String], oracle: bool) -> Result<Output, String> {
    let ctx = lib(FusionContext::new(rank, level))?;
    let weights = labels
        .iter()
        .map(|l| parse::weight(l, rank, level))
        .collect::<Result<Vec<_>, _>>()?;
    let spec = CurveSpec::new(genus, weights.clone());
    let dim = lib(block_dim(&ctx, &spec))?;
    let mut text = format!("{dim}\n");
    let mut json = json!({
        "schema": SCHEMA,
        "command": "dim",
        "rank": rank,
        "level": level,
        "genus": genus,
        "labels": weights.iter().map(|w| w.labels().to_vec()).collect::<Vec<_>>(),
        "dim": dim.to_string(),
    });
    if oracle {
        let value = lib(lib(SMatrix::new(rank, level))?.block_dim(genus, &weights, OracleLimits::default()))?;
        let _ = writeln!(text, "oracle {:.6} (residual {:.2e})", value.value, value.residual());
        if value.precision_warning {
            let _ = writeln!(text, "warning: floating-point residual is large; trust the exact value");
        }
        json["oracle"] = json!({
            "value": value.value,
            "residual": value.residual(),
            "precision_warning": value.precision_warning,
        });
    }
    Ok(Output::ok(text, json))
}

fn branch_cmd(rank: usize, level: usize, size: usize) -> Result<Output, String> {
    let summands = lib(branching_summands(size, rank, level))?;
    let mut text = String::new();
    let _ = writeln!(text, "{:<12} {:<10} {:<10} gap", "rows", "mu", "mu_t");
    for s in &summands {
        let _ = writeln!(
            text,
            "{:<12} {:<10} {:<10} {}",
            rows(s.diagram.rows()),
            rows(s.mu.labels()),
            rows(s.mu_t.labels()),
            s.gap
        );
    }
    let json = json!({
        "schema": SCHEMA,
        "command": "branch",
        "type": [rank, level],
        "lambda0": size,
        "summands": summands
            .iter()
            .map(|s| json!({
                "rows": s.diagram.rows(),
                "mu": s.mu.labels(),
                "mu_t": s.mu_t.labels(),
                "gap": s.gap,
            }))
            .collect::<Vec<_>>(),
    });
    Ok(Output::ok(text, json))
}

fn verify_cmd(suite: verify::Suite, opts: verify::Options) -> Result<Output, String> {
    let outcomes = verify::run(suite, &opts)?;
    let mut text = String::new();
    let mut ok = true;
    let mut suites = Vec::new();
    for outcome in &outcomes {
        let failures: Vec<&Value> = outcome.failures().collect();
        let status = if failures.is_empty() { "ok" } else { "FAILED" };
        let _ = writeln!(
            text,
            "{:<14} {status:<6} {} checks, {} failures",
            outcome.suite,
            outcome.checks.len(),
            failures.len()
        );
        if let Some(first) = failures.first() {
            ok = false;
            let _ = writeln!(text, "  counterexample: {first}");
        }
        suites.push(json!({
            "suite": outcome.suite,
            "holds": failures.is_empty(),
            "checks": outcome.checks,
        }));
    }
    let json = json!({
        "schema": SCHEMA,
        "command": "verify",
        "seed": opts.seed,
        "genus": opts.genus,
        "holds": ok,
        "suites": suites,
    });
    Ok(Output { text, json, ok })
}

fn run(cli: Cli) -> Result<Output, String> {
    match cli.command {
        Command::Weights { rank, level } => weights_cmd(rank, level),
        Command::Young {
            rank,
            level,
            diagram,
            show,
            size_class,
        } => young_cmd(rank, level, diagram, show, size_class),
        Command::Fusion {
            rank,
            level,
            lambda,
            mu,
            nu,
        } => fusion_cmd(rank, level, &lambda, &mu, nu.as_deref()),
        Command::Dim {
            rank,
            level,
            genus,
            labels,
            oracle,
        } => dim_cmd(rank, level, genus, &labels, oracle),
        Command::Branch { rank, level, size } => branch_cmd(rank, level, size),
        Command::Verify {
            suite,
            rank,
            level,
            genus,
            max_rl,
            seed,
            count,
        } => verify_cmd(
            suite,
            verify::Options {
                rank,
                level,
                genus,
                max_rl,
                seed,
                count,
            },
        ),
    }
}

fn main() -> ExitCode {
    let cli = Cli::parse();
    let format = cli.format;
    let out_path = cli.out.clone();
    let output = match run(cli) {
        Ok(output) => output,
        Err(message) => {
            eprintln!("error: {message}");
            return ExitCode::from(2);
        }
    };
    let rendered = match format {
        Format::Text => output.text,
        Format::Json => {
            let mut s = serde_json::to_string_pretty(&output.json).expect("json values serialize");
            s.push('\n');
            s
        }
    };
    let written = match &out_path {
        Some(path) => std::fs::write(path, rendered.as_bytes()),
        None => std::io::stdout().lock().write_all(rendered.as_bytes()),
    };
    if let Err(e) = written {
        eprintln!("error: cannot write output: {e}");
        return ExitCode::from(2);
    }
    if output.ok {
        ExitCode::SUCCESS
    } else {
        ExitCode::from(1)
    }
}
