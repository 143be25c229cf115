use std::fs;
use std::io::{self, Write};
use std::path::PathBuf;
use std::process::ExitCode;

use clap::{Parser, Subcommand, ValueEnum};
use serde_json::{json, Map, Value};
use tutte_zeros::bounds::{
    f_closed, f_lambda_series, f_lambda_variational, g_ratio, kstar_lambda, kstar_psi, sokal_k,
};
use tutte_zeros::io::parse_graph;
use tutte_zeros::verify::{
    cmk_identity_sweep, counting_sweep, penrose_chain_sweep, penrose_partition_sweep, polymer_identity_sweep,
    zero_free_sweep, SweepSummary,
};
use tutte_zeros::zeros::example_suite;
use tutte_zeros::{analyze, WeightedGraph};

const VERTEX_CAP: usize = 12;
const EDGE_CAP: usize = 24;

#[derive(Parser)]
#[command(name = "tutte-zeros", version, about = "Zero-free discs for multivariate Tutte polynomials")]
struct Cli {
    #[command(subcommand)]
    command: Command,
    /// Graph file: JSON, or one `u v re [im]` edge per line.
    #[arg(long, global = true)]
    input: Option<PathBuf>,
    #[arg(long, global = true, default_value_t = 0)]
    seed: u64,
    /// Largest vertex count for sweeps and input graphs (at most 12).
    #[arg(long, global = true)]
    max_vertices: Option<usize>,
    /// Largest edge count for input graphs (at most 24).
    #[arg(long, global = true, default_value_t = EDGE_CAP)]
    max_edges: usize,
    #[arg(long, global = true)]
    psi: Option<f64>,
    #[arg(long, global = true)]
    lambda: Option<f64>,
    #[arg(long, global = true)]
    beta: Option<f64>,
    #[arg(long, global = true, value_enum, default_value_t = Format::Json)]
    format: Format,
    /// Interpolation parameter in [0, 1].
    #[arg(long = "a", global = true)]
    a: Option<f64>,
}

#[derive(Subcommand, Clone, Copy)]
enum Command {
    /// Roots and disc checks for `--input`; without it, the zero-free sweep.
    Analyze,
    /// Named constants, and F at `--lambda`/`--beta`.
    Constants,
    /// Penrose partition and inequality chains over small graphs.
    VerifyPenrose,
    /// Counting bounds and the C(m, k) identities.
    VerifyInequalities,
    /// Polymer representation of Z over small graphs.
    VerifyPolymer,
    /// The worked examples as a table.
    Examples,
}

#[derive(ValueEnum, Clone, Copy, PartialEq)]
enum Format {
    Json,
    Csv,
}

/// A usage or IO problem: exit code 2.
struct Usage(String);

impl<E: std::fmt::Display> From<E> for Usage {
    fn from(e: E) -> Self {
        Usage(e.to_string())
    }
}

struct Outcome {
    report: Value,
    rows: Vec<Vec<String>>,
    header: Vec<&'static str>,
    passed: bool,
}

fn main() -> ExitCode {
    let cli = Cli::parse();
    match run(&cli) {
        Ok(out) => {
            if let Err(Usage(msg)) = emit(&out, cli.format) {
                eprintln!("error: {msg}");
                return ExitCode::from(2);
            }
            if out.passed {
                ExitCode::SUCCESS
            } else {
                ExitCode::from(1)
            }
        }
        Err(Usage(msg)) => {
            eprintln!("error: {msg}");
            ExitCode::from(2)
        }
    }
}

fn emit(out: &Outcome, format: Format) -> Result<(), Usage> {
    let stdout = io::stdout();
    match format {
        Format::Json => {
            let mut lock = stdout.lock();
            serde_json::to_writer_pretty(&mut lock, &out.report)?;
            writeln!(lock)?;
        }
        Format::Csv => {
            let mut w = csv::Writer::from_writer(stdout.lock());
            w.write_record(&out.header)?;
            for row in &out.rows {
                w.write_record(row)?;
            }
            w.flush()?;
        }
    }
    Ok(())
}

fn run(cli: &Cli) -> Result<Outcome, Usage> {
    if let Some(n) = cli.max_vertices {
        if n > VERTEX_CAP {
            return Err(Usage(format!("--max-vertices {n} exceeds the cap {VERTEX_CAP}")));
        }
    }
    if cli.max_edges > EDGE_CAP {
        return Err(Usage(format!("--max-edges {} exceeds the cap {EDGE_CAP}", cli.max_edges)));
    }
    if let Some(a) = cli.a {
        if !(0.0..=1.0).contains(&a) {
            return Err(Usage(format!("--a {a} is outside [0, 1]")));
        }
    }
    match cli.command {
        Command::Analyze => match &cli.input {
            Some(path) => analyze_file(cli, path),
            None => sweeps(cli, |n, seed| Ok(vec![zero_free_sweep(n, n.min(4), seed, 50)?]), 5),
        },
        Command::Constants => constants(cli),
        Command::VerifyPenrose => sweeps(
            cli,
            |n, seed| Ok(vec![penrose_partition_sweep(n)?, penrose_chain_sweep(n.min(5), seed, 100)?]),
            5,
        ),
        Command::VerifyInequalities => sweeps(
            cli,
            |n, seed| Ok(vec![counting_sweep(n, 8, seed, 1)?, cmk_identity_sweep(seed, 50)]),
            6,
        ),
        Command::VerifyPolymer => sweeps(cli, |n, seed| Ok(vec![polymer_identity_sweep(n, n.min(4), 3, seed, 20)?]), 7),
        Command::Examples => examples(cli),
    }
}

fn load(cli: &Cli, path: &PathBuf) -> Result<WeightedGraph, Usage> {
    let text = fs::read_to_string(path).map_err(|e| Usage(format!("{}: {e}", path.display())))?;
    let g = parse_graph(&text)?;
    let max_v = cli.max_vertices.unwrap_or(VERTEX_CAP);
    if g.vertex_count() > max_v {
        return Err(Usage(format!("input has {} vertices, above --max-vertices {max_v}", g.vertex_count())));
    }
    if g.edge_count() > cli.max_edges {
        return Err(Usage(format!("input has {} edges, above --max-edges {}", g.edge_count(), cli.max_edges)));
    }
    Ok(g)
}

fn analyze_file(cli: &Cli, path: &PathBuf) -> Result<Outcome, Usage> {
    let g = load(cli, path)?;
    let report = analyze(&g)?;
    let mut passed = report.all_verified();
    let mut value = serde_json::to_value(&report)?;
    let obj = value.as_object_mut().expect("report is an object");
    obj.insert("seed".into(), json!(cli.seed));
    obj.insert("all_verified".into(), json!(passed));
    let mut rows = vec![
        vec!["q_max".into(), report.q_max.to_string()],
        vec!["q_zero_multiplicity".into(), report.q_zero_multiplicity.to_string()],
        vec!["radius_thm12".into(), report.bounds.radius_thm12.to_string()],
        vec!["thm12_verified".into(), report.thm12_verified.to_string()],
    ];
    if let Some(r) = report.bounds.radius_thm13 {
        rows.push(vec!["radius_thm13".into(), r.to_string()]);
    }
    if let Some(v) = report.thm13_verified {
        rows.push(vec!["thm13_verified".into(), v.to_string()]);
    }
    if let Some(a) = cli.a {
        let radius = report.bounds.radius_interpolated(a)?;
        let verified = radius.map(|r| report.roots.iter().all(|z| z.norm() < r));
        passed &= verified != Some(false);
        obj.insert("interpolated_a".into(), json!({ "a": a, "radius": radius, "verified": verified }));
        if let Some(r) = radius {
            rows.push(vec![format!("radius_a={a}"), r.to_string()]);
        }
    }
    if !passed {
        obj.insert("failing_instance".into(), tutte_zeros::io::graph_to_value(&g));
    }
    for (i, z) in report.roots.iter().enumerate() {
        rows.push(vec![format!("root_{i}"), format!("{} {}", z.re, z.im)]);
    }
    rows.push(vec!["seed".into(), cli.seed.to_string()]);
    Ok(Outcome {
        report: value,
        rows,
        header: vec!["quantity", "value"],
        passed,
    })
}

fn constants(cli: &Cli) -> Result<Outcome, Usage> {
    let mut m = Map::new();
    m.insert("seed".into(), json!(cli.seed));
    m.insert("K".into(), json!(sokal_k()));
    m.insert("kstar_0".into(), json!(kstar_lambda(0.0)));
    if let Some(psi) = cli.psi {
        if !(psi >= 1.0) {
            return Err(Usage(format!("--psi {psi} must be at least 1")));
        }
        m.insert("kstar_psi".into(), json!(kstar_psi(psi)));
    }
    if let Some(l) = cli.lambda {
        if !(l >= 0.0) {
            return Err(Usage(format!("--lambda {l} must be nonnegative")));
        }
        m.insert("kstar_lambda".into(), json!(kstar_lambda(l)));
        if l > 0.0 {
            m.insert("g_ratio".into(), json!(g_ratio(l)));
        }
    }
    if let Some(b) = cli.beta {
        if !(b > 0.0) {
            return Err(Usage(format!("--beta {b} must be positive")));
        }
        let l = cli.lambda.unwrap_or(1.0);
        m.insert("f_lambda_variational".into(), json!(f_lambda_variational(l, b)));
        m.insert("f_lambda_series".into(), json!(f_lambda_series(l, b)?));
        if l == 0.0 || l == 1.0 {
            m.insert("f_lambda_closed".into(), json!(f_closed(l, b)?));
        }
    }
    if let (Some(a), Some(psi), Some(l)) = (cli.a, cli.psi, cli.lambda) {
        // Ψ^{1/2} F_λ(Ψ^{−(1−a)/2}), the interpolated radius per unit Δ′_a.
        m.insert("kstar_interpolated".into(), json!(psi.sqrt() * f_lambda_variational(l, psi.powf(-0.5 * (1.0 - a)))));
    }
    let rows = m.iter().map(|(k, v)| vec![k.clone(), v.to_string()]).collect();
    Ok(Outcome {
        report: Value::Object(m),
        rows,
        header: vec!["name", "value"],
        passed: true,
    })
}

fn sweeps(
    cli: &Cli,
    run: impl Fn(usize, u64) -> tutte_zeros::Result<Vec<SweepSummary>>,
    default_vertices: usize,
) -> Result<Outcome, Usage> {
    let n = cli.max_vertices.unwrap_or(default_vertices);
    let summaries = run(n, cli.seed)?;
    let passed = summaries.iter().all(SweepSummary::passed);
    let rows = summaries
        .iter()
        .map(|s| {
            vec![
                s.check.clone(),
                cli.seed.to_string(),
                s.graphs.to_string(),
                s.instances.to_string(),
                s.worst_relative_error.map(|e| e.to_string()).unwrap_or_default(),
                s.failures.len().to_string(),
            ]
        })
        .collect();
    Ok(Outcome {
        report: json!({ "seed": cli.seed, "max_vertices": n, "passed": passed, "summaries": summaries }),
        rows,
        header: vec!["check", "seed", "graphs", "instances", "worst_relative_error", "failures"],
        passed,
    })
}

fn examples(cli: &Cli) -> Result<Outcome, Usage> {
    let records = example_suite()?;
    let passed = records.iter().all(|r| r.report.all_verified());
    let rows = records
        .iter()
        .map(|r| {
            vec![
                r.example.clone(),
                r.instance.clone(),
                r.quantity.clone(),
                r.observed.to_string(),
                r.reference.map(|x| x.to_string()).unwrap_or_default(),
                r.relative_gap().map(|x| x.to_string()).unwrap_or_default(),
                r.commentary.clone(),
            ]
        })
        .collect();
    Ok(Outcome {
        report: json!({ "seed": cli.seed, "passed": passed, "records": records }),
        rows,
        header: vec!["example", "instance", "quantity", "observed", "reference", "relative_gap", "commentary"],
        passed,
    })
}
