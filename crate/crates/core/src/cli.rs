//! The `graphcodes` command line.
//!
//! Every run prints one JSON report (or writes it to `--output`). Exit status
//! is 0 on success, 1 when the mathematical answer is negative and 2 when the
//! tool itself fails.

use std::path::{Path, PathBuf};

use clap::{Args, Parser, Subcommand};
use serde_json::{json, Value};

use crate::bounds;
use crate::codes::{
    bch_budget, check_independence, code_from_coloring, code_summary, greedy_vector_family, random_code_search,
    verify_complement_code_exhaustive, verify_complement_code_sampled, ComplementMapCode, MAX_LISTED_EDGES, RNG_NAME,
};
use crate::coloring::{build_k4_coloring, find_even_chromatic_embedding, K4ColoringParams};
use crate::decomp::{self, AlgorithmParams, CensusMode};
use crate::error::{Error, Result};
use crate::extremal::{self, Certificate, ExtremalResult};
use crate::formats;
use crate::graph::num_edges;

#[derive(Parser, Debug)]
#[command(name = "graphcodes", version, about = "Edge colorings, graph codes and even decompositions")]
pub struct Cli {
    /// Write the JSON report here instead of stdout.
    #[arg(long, global = true)]
    pub output: Option<PathBuf>,
    /// Worker threads for parallel stages.
    #[arg(long, global = true, default_value_t = 1)]
    pub workers: usize,
    #[command(subcommand)]
    pub command: Command,
}

#[derive(Subcommand, Debug)]
pub enum Command {
    /// Edge colorings of K_n.
    #[command(subcommand)]
    Coloring(ColoringCommand),
    /// Parity-check codes and the complement-map code.
    #[command(subcommand)]
    Code(CodeCommand),
    /// Even decompositions.
    #[command(subcommand)]
    Decomp(DecompCommand),
    /// Exact r, d^lin and d on tiny hosts.
    #[command(subcommand)]
    Extremal(ExtremalCommand),
    /// Evaluate a bound formula.
    Bounds(BoundsArgs),
}

#[derive(Subcommand, Debug)]
pub enum ColoringCommand {
    /// Build the product coloring without even-chromatic K4.
    BuildK4 {
        #[arg(long)]
        n: usize,
        /// CL1 file for the coloring.
        #[arg(long)]
        certificate: Option<PathBuf>,
    },
    /// Search a coloring for an even-chromatic copy of a pattern.
    Verify {
        #[arg(long)]
        coloring: PathBuf,
        #[arg(long)]
        pattern: PathBuf,
    },
}

#[derive(Subcommand, Debug)]
pub enum CodeCommand {
    /// Parity-check matrix from a coloring and a vector family of order s.
    FromColoring {
        #[arg(long)]
        coloring: PathBuf,
        #[arg(long)]
        s: usize,
        #[arg(long)]
        seed: Option<u64>,
        /// PM1 file for the matrix.
        #[arg(long)]
        certificate: Option<PathBuf>,
    },
    /// Check that the kernel of a matrix contains no copy of a pattern.
    Verify {
        #[arg(long)]
        matrix: PathBuf,
        #[arg(long)]
        pattern: PathBuf,
    },
    /// Sample random parity-check matrices.
    RandomSearch {
        #[arg(long)]
        pattern: PathBuf,
        #[arg(long)]
        n: usize,
        #[arg(long)]
        t: usize,
        #[arg(long, default_value_t = 0)]
        seed: u64,
        #[arg(long)]
        attempts: u64,
        #[arg(long)]
        certificate: Option<PathBuf>,
    },
    /// Verify the complement-map code.
    Complement {
        #[arg(long)]
        n: usize,
        /// Random pairs for hosts too large to list.
        #[arg(long, default_value_t = 1_000_000)]
        pairs: u64,
        #[arg(long, default_value_t = 100_000)]
        involution_samples: u64,
        #[arg(long, default_value_t = 0)]
        seed: u64,
    },
}

#[derive(Subcommand, Debug)]
pub enum DecompCommand {
    /// Exact search for an even decomposition.
    Exact {
        #[arg(long)]
        graph: PathBuf,
    },
    /// Run the nine-step randomized procedure.
    Greedy {
        #[arg(long)]
        graph: PathBuf,
        #[arg(long, default_value_t = 0)]
        seed: u64,
        #[arg(long)]
        x_size: Option<usize>,
        #[arg(long)]
        p: Option<usize>,
        #[arg(long)]
        m: Option<usize>,
        #[arg(long)]
        q: Option<usize>,
    },
    /// Count even-edge graphs without an even decomposition.
    Census {
        #[arg(long)]
        v: usize,
        /// Sample this many graphs instead of listing all.
        #[arg(long)]
        samples: Option<u64>,
        #[arg(long, default_value_t = 0)]
        seed: u64,
    },
}

#[derive(Args, Debug)]
pub struct ExtremalArgs {
    #[arg(long)]
    pub pattern: PathBuf,
    #[arg(long)]
    pub n: usize,
    /// Certificate file (CL1 for r, PM1 otherwise).
    #[arg(long)]
    pub certificate: Option<PathBuf>,
}

#[derive(Subcommand, Debug)]
pub enum ExtremalCommand {
    R {
        #[command(flatten)]
        common: ExtremalArgs,
        #[arg(long, default_value_t = 6)]
        max_colors: usize,
    },
    Dlin {
        #[command(flatten)]
        common: ExtremalArgs,
        #[arg(long)]
        node_limit: Option<u64>,
    },
    D {
        #[command(flatten)]
        common: ExtremalArgs,
        #[arg(long)]
        node_limit: Option<u64>,
    },
}

#[derive(Args, Debug)]
pub struct BoundsArgs {
    /// One of even-decomp, maxmin, k4-colors, general-log, shrunken-host.
    #[arg(long)]
    pub name: String,
    /// even-decomp: V_H N; maxmin: C1 C2 K N (r_i(m) = m^C_i); k4-colors: N;
    /// general-log: C N; shrunken-host: C N.
    #[arg(long, num_args = 1.., allow_negative_numbers = true)]
    pub args: Vec<f64>,
}

/// A report and the exit status it implies.
pub struct Outcome {
    pub report: Value,
    pub status: i32,
}

fn ok(report: Value) -> Result<Outcome> {
    Ok(Outcome { report, status: 0 })
}

fn verdict(report: Value, positive: bool) -> Result<Outcome> {
    Ok(Outcome { report, status: if positive { 0 } else { 1 } })
}

fn write_file(path: &Path, text: &str) -> Result<()> {
    std::fs::write(path, text)?;
    Ok(())
}

fn path_value(p: &Option<PathBuf>) -> Value {
    p.as_ref().map_or(Value::Null, |p| Value::String(p.display().to_string()))
}

fn to_value<T: serde::Serialize>(x: &T) -> Value {
    serde_json::to_value(x).expect("reports serialize")
}

fn bad_args(msg: impl Into<String>) -> Error {
    Error::InvalidArgument(msg.into())
}

fn coloring(cmd: &ColoringCommand) -> Result<Outcome> {
    match cmd {
        ColoringCommand::BuildK4 { n, certificate } => {
            let chi = build_k4_coloring(*n);
            let params = K4ColoringParams::for_n(*n);
            if let Some(p) = certificate {
                write_file(p, &formats::write_cl1(&chi))?;
            }
            ok(json!({
                "n": n,
                "d": params.d,
                "m": params.m,
                "palette_size": chi.palette_size(),
                "palette_bound": params.palette_bound().to_string(),
                "certificate_path": path_value(certificate),
            }))
        }
        ColoringCommand::Verify { coloring, pattern } => {
            let chi = formats::read_cl1(coloring)?;
            let h = formats::read_gl1(pattern)?;
            let found = find_even_chromatic_embedding(&chi, &h)?;
            verdict(
                json!({
                    "n": chi.vertex_count(),
                    "palette_size": chi.palette_size(),
                    "pattern": h.edge_list(),
                    "admits": found.is_some(),
                    "witness": found.as_ref().map(|e| e.map().to_vec()),
                    "witness_edges": found.as_ref().map(|e| e.image_edges()),
                }),
                found.is_none(),
            )
        }
    }
}

fn code(cmd: &CodeCommand) -> Result<Outcome> {
    match cmd {
        CodeCommand::FromColoring { coloring, s, seed, certificate } => {
            let chi = formats::read_cl1(coloring)?;
            let r = chi.palette_size();
            let fam = greedy_vector_family(r, *s)?;
            let m = code_from_coloring(&chi, &fam)?;
            let check = check_independence(&fam, seed.unwrap_or(0));
            if let Some(p) = certificate {
                write_file(p, &formats::write_pm1(&m))?;
            }
            let kernel_dim = m.kernel_dimension();
            ok(json!({
                "n": chi.vertex_count(),
                "palette_size": r,
                "s": s,
                "t": m.row_count(),
                "budget": bch_budget(r, *s),
                "construction": to_value(&fam.construction()),
                "independence": to_value(&check),
                "kernel_dim": kernel_dim,
                "density_log2": kernel_dim as i64 - m.column_count() as i64,
                "certificate_path": path_value(certificate),
            }))
        }
        CodeCommand::Verify { matrix, pattern } => {
            let m = formats::read_pm1(matrix)?;
            let h = formats::read_gl1(pattern)?;
            let s = code_summary(&m, &h)?;
            let free = s.h_free;
            verdict(to_value(&s), free)
        }
        CodeCommand::RandomSearch { pattern, n, t, seed, attempts, certificate } => {
            let h = formats::read_gl1(pattern)?;
            let found = random_code_search(&h, *n, *t, *seed, *attempts)?;
            let summary = match &found {
                Some(f) => {
                    if let Some(p) = certificate {
                        write_file(p, &formats::write_pm1(&f.matrix))?;
                    }
                    Some(to_value(&code_summary(&f.matrix, &h)?))
                }
                None => None,
            };
            verdict(
                json!({
                    "found": found.is_some(),
                    "attempt": found.as_ref().map(|f| f.attempt),
                    "attempts": attempts,
                    "seed": seed,
                    "rng": RNG_NAME,
                    "n": n,
                    "t": t,
                    "summary": summary,
                    "certificate_path": if found.is_some() { path_value(certificate) } else { Value::Null },
                }),
                found.is_some(),
            )
        }
        CodeCommand::Complement { n, pairs, involution_samples, seed } => {
            let code = ComplementMapCode::new(*n)?;
            let report = if num_edges(*n) <= MAX_LISTED_EDGES {
                verify_complement_code_exhaustive(&code)?
            } else {
                verify_complement_code_sampled(&code, *involution_samples, *pairs, *seed)?
            };
            let passed = report.passed();
            let mut v = to_value(&report);
            v["rng"] = if report.seed.is_some() { json!(RNG_NAME) } else { Value::Null };
            v["passed"] = json!(passed);
            verdict(v, passed)
        }
    }
}

fn decomp_cmd(cmd: &DecompCommand, workers: usize) -> Result<Outcome> {
    match cmd {
        DecompCommand::Exact { graph } => {
            let g = formats::read_gl1(graph)?;
            let d = decomp::find_even_decomposition(&g)?;
            verdict(
                json!({
                    "n": g.vertex_count(),
                    "edges": g.edge_count(),
                    "decomposable": d.is_some(),
                    "layers": d.as_ref().map(|d| d.layers()),
                }),
                d.is_some(),
            )
        }
        DecompCommand::Greedy { graph, seed, x_size, p, m, q } => {
            let g = formats::read_gl1(graph)?;
            let mut params = AlgorithmParams::for_n(g.vertex_count(), *seed);
            if let Some(p) = p {
                params.p = *p;
            }
            if let Some(m) = m {
                params.m = *m;
            }
            if let Some(q) = q {
                params.q = *q;
                params.x_size = 2 * q * q;
            }
            if let Some(x) = x_size {
                params.x_size = *x;
            }
            let report = decomp::run_greedy_algorithm(&g, &params)?;
            verdict(to_value(&report), report.succeeded())
        }
        DecompCommand::Census { v, samples, seed } => {
            let mode = match samples {
                Some(samples) => CensusMode::Sampled { samples: *samples, seed: *seed },
                None => CensusMode::Exhaustive { workers },
            };
            let mut report = to_value(&decomp::decomposition_census(*v, mode)?);
            if samples.is_some() {
                report["rng"] = json!(RNG_NAME);
            }
            ok(report)
        }
    }
}

fn extremal_report(res: &ExtremalResult, certificate: &Option<PathBuf>) -> Result<Outcome> {
    let written = match (&res.certificate, certificate) {
        (Some(cert), Some(path)) => {
            let text = match cert {
                Certificate::Coloring(chi) => formats::write_cl1(chi),
                Certificate::Matrix(m) => formats::write_pm1(m),
                Certificate::Code(words) => formats::write_code_listing(res.n, words),
            };
            write_file(path, &text)?;
            path_value(certificate)
        }
        _ => Value::Null,
    };
    ok(json!({
        "quantity": res.quantity.name(),
        "h": res.pattern.edge_list(),
        "h_vertices": res.pattern.vertex_count(),
        "n": res.n,
        "value": to_value(&res.value),
        "exact": res.value.is_exact(),
        "note": res.note,
        "certificate_path": written,
    }))
}

fn extremal_cmd(cmd: &ExtremalCommand) -> Result<Outcome> {
    match cmd {
        ExtremalCommand::R { common, max_colors } => {
            let h = formats::read_gl1(&common.pattern)?;
            extremal_report(&extremal::exact_r(&h, common.n, *max_colors)?, &common.certificate)
        }
        ExtremalCommand::Dlin { common, node_limit } => {
            let h = formats::read_gl1(&common.pattern)?;
            let res = match node_limit {
                Some(l) => extremal::exact_dlin_with_limit(&h, common.n, *l)?,
                None => extremal::exact_dlin(&h, common.n)?,
            };
            extremal_report(&res, &common.certificate)
        }
        ExtremalCommand::D { common, node_limit } => {
            let h = formats::read_gl1(&common.pattern)?;
            let limit = node_limit.unwrap_or(extremal::DEFAULT_D_NODE_LIMIT);
            extremal_report(&extremal::exact_d_with_limit(&h, common.n, limit)?, &common.certificate)
        }
    }
}

fn bounds_cmd(b: &BoundsArgs) -> Result<Outcome> {
    let a = &b.args;
    let want = |k: usize| {
        if a.len() == k {
            Ok(())
        } else {
            Err(bad_args(format!("bound `{}` takes {k} arguments, got {}", b.name, a.len())))
        }
    };
    let int = |x: f64| {
        if x >= 0.0 && x.fract() == 0.0 && x <= u32::MAX as f64 {
            Ok(x as u32)
        } else {
            Err(bad_args(format!("expected a non-negative integer, got {x}")))
        }
    };
    let (n, value) = match b.name.as_str() {
        "even-decomp" => {
            want(2)?;
            (a[1], json!(bounds::bound_even_decomp(int(a[0])?, a[1])?))
        }
        "maxmin" => {
            want(4)?;
            let (c1, c2) = (a[0], a[1]);
            let r = bounds::bound_maxmin(|m| m.powf(c1), |m| m.powf(c2), int(a[2])?, a[3])?;
            (a[3], json!({ "m": r.m, "value": r.value }))
        }
        "k4-colors" => {
            want(1)?;
            (a[0], json!(bounds::bound_k4_colors(int(a[0])? as usize)?.to_string()))
        }
        "general-log" => {
            want(2)?;
            let (colors, density) = bounds::bound_general_log(a[0], a[1])?;
            (a[1], json!({ "colors": colors, "density": density }))
        }
        "shrunken-host" => {
            want(2)?;
            (a[1], json!(bounds::shrunken_host(a[0], a[1])?))
        }
        other => return Err(bad_args(format!("unknown bound `{other}`"))),
    };
    ok(json!({ "bound": b.name, "args": a, "n": n, "value": value }))
}

/// Runs a parsed command.
pub fn dispatch(cli: &Cli) -> Result<Outcome> {
    match &cli.command {
        Command::Coloring(c) => coloring(c),
        Command::Code(c) => code(c),
        Command::Decomp(c) => decomp_cmd(c, cli.workers),
        Command::Extremal(c) => extremal_cmd(c),
        Command::Bounds(b) => bounds_cmd(b),
    }
}

/// Parses `args`, runs the command and emits the report; returns the exit status.
pub fn run<I, T>(args: I) -> i32
where
    I: IntoIterator<Item = T>,
    T: Into<std::ffi::OsString> + Clone,
{
    let cli = match Cli::try_parse_from(args) {
        Ok(cli) => cli,
        Err(e) => {
            let _ = e.print();
            return if e.use_stderr() { 2 } else { 0 };
        }
    };
    let outcome = match dispatch(&cli) {
        Ok(o) => o,
        Err(e) => {
            eprintln!("error: {e}");
            return 2;
        }
    };
    let mut text = serde_json::to_string_pretty(&outcome.report).expect("json");
    text.push('\n');
    match &cli.output {
        Some(path) => {
            if let Err(e) = std::fs::write(path, &text) {
                eprintln!("error: cannot write {}: {e}", path.display());
                return 2;
            }
        }
        None => print!("{text}"),
    }
    outcome.status
}
