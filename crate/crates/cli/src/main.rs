use std::fs;
use std::io::Write;
use std::process::ExitCode;

use anyhow::{bail, Context, Result};
use clap::{Parser, Subcommand, ValueEnum};
use mv_core::affine::Affine;
use mv_core::crystal::string_parameters;
use mv_core::gallery::{GalleryModel, DEFAULT_NODE_CAP};
use mv_core::trails::string_cone_inequalities;
use mv_core::Series;
use mv_looplab::sample::{sample_cell, sample_ytilde};
use mv_looplab::trop::{lusztig_from_string, string_from_lusztig, transition_table};
use mv_looplab::{DEFAULT_PREC, TROP_PREC};
use mv_cli::parse;
use mv_cli::suite::{run, summary_line, SuiteConfig};
use serde_json::json;

#[derive(Parser)]
#[command(name = "mvlab", version, about = "LS gallery crystals, string cones and MV cycle sampling")]
struct Cli {
    /// Working precision for Laurent series (relative terms)
    #[arg(long, global = true, env = "MVLAB_PREC", default_value_t = DEFAULT_PREC)]
    prec: i64,
    #[command(subcommand)]
    cmd: Cmd,
}

#[derive(clap::Args)]
struct TypeArgs {
    /// Cartan type: A, B, C, D or G
    #[arg(long = "type", default_value = "A")]
    series: String,
    #[arg(long)]
    rank: usize,
}

#[derive(Clone, Copy, ValueEnum)]
enum Format {
    Json,
    Dot,
}

#[derive(Clone, Copy, ValueEnum)]
enum Direction {
    /// c̃ to Lusztig parameters
    ToLusztig,
    /// Lusztig parameters to c̃
    ToString,
}

#[derive(Subcommand)]
enum Cmd {
    /// Enumerate the LS gallery crystal B(λ)
    Crystal {
        #[command(flatten)]
        ty: TypeArgs,
        /// Dominant coweight in simple-coroot coordinates, e.g. 1,1 or 1/2,0
        #[arg(long, allow_hyphen_values = true)]
        lambda: String,
        /// Reduced word of w_λ (affine indices, 0 = s₀); default: the minimal one
        #[arg(long)]
        word: Option<String>,
        #[arg(long, value_enum, default_value_t = Format::Json)]
        format: Format,
        #[arg(long)]
        out: Option<String>,
    },
    /// String parameters of every node of B(λ)
    String {
        #[command(flatten)]
        ty: TypeArgs,
        #[arg(long, allow_hyphen_values = true)]
        lambda: String,
        /// Reduced word of w₀
        #[arg(long)]
        word: String,
    },
    /// String cone inequalities from i-trails (type A)
    Cone {
        #[command(flatten)]
        ty: TypeArgs,
        #[arg(long)]
        word: String,
        #[arg(long)]
        json: bool,
    },
    /// Sample Ytilde_{i,c} (with --c) or the cell of an LS gallery (with --lambda and --node)
    MvSample {
        #[command(flatten)]
        ty: TypeArgs,
        #[arg(long, default_value = "")]
        word: String,
        #[arg(long, allow_hyphen_values = true)]
        c: Option<String>,
        #[arg(long, allow_hyphen_values = true)]
        lambda: Option<String>,
        #[arg(long)]
        node: Option<usize>,
        #[arg(long, default_value_t = 10)]
        trials: u64,
        #[arg(long, default_value_t = 7)]
        seed: u64,
    },
    /// Tropical transition between c̃ and Lusztig parameters (type A)
    Trop {
        #[command(flatten)]
        ty: TypeArgs,
        #[arg(long)]
        word: String,
        /// Input vector; omit and pass --lambda for the full table of B(λ)
        #[arg(long, allow_hyphen_values = true)]
        m: Option<String>,
        #[arg(long, value_enum, default_value_t = Direction::ToLusztig)]
        direction: Direction,
        #[arg(long, allow_hyphen_values = true)]
        lambda: Option<String>,
        #[arg(long, default_value_t = 5)]
        trials: u64,
        #[arg(long, default_value_t = 7)]
        seed: u64,
        /// Starting precision; only valuations are read, so it escalates from here
        #[arg(long, default_value_t = TROP_PREC)]
        start_prec: i64,
    },
    /// Run the acceptance suite, one JSON line per criterion
    Verify {
        #[arg(long, default_value = "desk")]
        suite: String,
        /// Comma separated criterion numbers; default all
        #[arg(long)]
        only: Option<String>,
        /// Also write the JSON lines here
        #[arg(long)]
        report: Option<String>,
    },
}

fn emit(out: &Option<String>, text: &str) -> Result<()> {
    match out {
        Some(path) => fs::write(path, text).with_context(|| format!("writing {path}")),
        None => {
            println!("{text}");
            Ok(())
        }
    }
}

fn type_a(ty: &TypeArgs) -> Result<usize> {
    let d = parse::datum(&ty.series, ty.rank)?;
    if d.series != Series::A {
        bail!("loop group computations are realized for type A only, got {}", d.name());
    }
    Ok(ty.rank + 1)
}

fn real_main(cli: Cli) -> Result<bool> {
    match cli.cmd {
        Cmd::Crystal { ty, lambda, word, format, out } => {
            let d = parse::datum(&ty.series, ty.rank)?;
            let lam = parse::coweight(&d, &lambda)?;
            let aff = Affine::new(d.clone());
            let model = match word {
                Some(w) => GalleryModel::new(aff, &lam, &parse::word(&w, d.rank, 0)?)?,
                None => GalleryModel::minimal(aff, &lam)?,
            };
            let ls = model.enumerate_ls(DEFAULT_NODE_CAP)?;
            let text = match format {
                Format::Dot => ls.graph.to_dot(),
                Format::Json => {
                    let graph: serde_json::Value = serde_json::from_str(&ls.graph.to_json())?;
                    let galleries: Vec<_> = ls.galleries.iter().map(|g| model.deltas(g)).collect();
                    serde_json::to_string(&json!({
                        "type": d.name(),
                        "lambda": lam,
                        "word": model.ty.word,
                        "galleries": galleries,
                        "nodes": graph["nodes"],
                        "edges": graph["edges"],
                    }))?
                }
            };
            emit(&out, &text)?;
        }
        Cmd::String { ty, lambda, word } => {
            let d = parse::datum(&ty.series, ty.rank)?;
            let lam = parse::coweight(&d, &lambda)?;
            let w = parse::word(&word, d.rank, 1)?;
            let model = GalleryModel::minimal(Affine::new(d.clone()), &lam)?;
            let ls = model.enumerate_ls(DEFAULT_NODE_CAP)?;
            for b in 0..ls.graph.len() {
                let s = string_parameters(&d, &ls.graph, b, &w)?;
                let row = json!({"node": b, "weight": ls.graph.weight(b), "c": s.c, "c_tilde": s.c_tilde});
                println!("{row}");
            }
        }
        Cmd::Cone { ty, word, json } => {
            let n = type_a(&ty)?;
            let w = parse::word(&word, ty.rank, 1)?;
            let cone = string_cone_inequalities(n, &w)?;
            for r in &cone.rows {
                if json {
                    println!("{}", serde_json::to_string(r)?);
                } else {
                    println!("{}", render_row(r));
                }
            }
        }
        Cmd::MvSample { ty, word, c, lambda, node, trials, seed } => {
            let n = type_a(&ty)?;
            match (c, lambda, node) {
                (Some(c), None, None) => {
                    let w = parse::word(&word, ty.rank, 1)?;
                    let c = parse::ints(&c)?;
                    println!("{}", json!({"word": w, "c": c, "trials": trials, "seed": seed, "prec": cli.prec}));
                    for r in sample_ytilde(n, &w, &c, trials, seed, cli.prec)? {
                        println!("{}", serde_json::to_string(&r)?);
                    }
                }
                (None, Some(lambda), Some(node)) => {
                    let d = parse::datum(&ty.series, ty.rank)?;
                    let lam = parse::coweight(&d, &lambda)?;
                    let model = GalleryModel::minimal(Affine::new(d), &lam)?;
                    let ls = model.enumerate_ls(DEFAULT_NODE_CAP)?;
                    let g = ls.galleries.get(node).with_context(|| format!("B({lam}) has {} nodes", ls.galleries.len()))?;
                    println!("{}", json!({"gallery": model.deltas(g), "weight": model.weight(g), "trials": trials, "seed": seed, "prec": cli.prec}));
                    for s in sample_cell(&model, g, trials, seed, cli.prec)? {
                        println!("{}", serde_json::to_string(&s)?);
                    }
                }
                _ => bail!("pass either --c, or --lambda together with --node"),
            }
        }
        Cmd::Trop { ty, word, m, direction, lambda, trials, seed, start_prec } => {
            let n = type_a(&ty)?;
            let w = parse::word(&word, ty.rank, 1)?;
            let prec = start_prec;
            match (m, lambda) {
                (Some(m), None) => {
                    let m = parse::ints(&m)?;
                    let r = match direction {
                        Direction::ToLusztig => lusztig_from_string(n, &w, &m, trials, seed, prec)?,
                        Direction::ToString => string_from_lusztig(n, &w, &m, trials, seed, prec)?,
                    };
                    println!("{}", serde_json::to_string(&r)?);
                }
                (None, Some(lambda)) => {
                    let d = parse::datum(&ty.series, ty.rank)?;
                    let lam = parse::coweight(&d, &lambda)?;
                    for row in transition_table(&lam, &w, trials, seed, prec)? {
                        let mut v = serde_json::to_value(&row)?;
                        v["ok"] = row.ok().into();
                        println!("{v}");
                    }
                }
                _ => bail!("pass exactly one of --m and --lambda"),
            }
        }
        Cmd::Verify { suite, only, report } => {
            if suite != "desk" {
                bail!("unknown suite {suite:?}; available: desk");
            }
            let only: Vec<u8> = match only {
                Some(s) => parse::ints(&s)?.into_iter().map(|x| u8::try_from(x).context("criterion number")).collect::<Result<_>>()?,
                None => vec![],
            };
            let cfg = SuiteConfig::desk(cli.prec);
            let reports = run(&cfg, &only);
            let mut lines = String::new();
            for r in &reports {
                lines.push_str(&serde_json::to_string(r)?);
                lines.push('\n');
            }
            if let Some(path) = report {
                fs::write(&path, &lines).with_context(|| format!("writing {path}"))?;
            }
            let mut stdout = std::io::stdout().lock();
            stdout.write_all(lines.as_bytes())?;
            for r in &reports {
                writeln!(stdout, "{}", summary_line(r))?;
            }
            let failed = reports.iter().filter(|r| !r.pass).count();
            writeln!(stdout, "{} criteria, {} passed, {failed} failed", reports.len(), reports.len() - failed)?;
            return Ok(failed == 0);
        }
    }
    Ok(true)
}

/// `Σ a_j c_j ≥ 0` written out, e.g. `c2 - c6 >= 0`.
fn render_row(r: &[i64]) -> String {
    let mut s = String::new();
    for (j, &a) in r.iter().enumerate().filter(|(_, &a)| a != 0) {
        let sign = if a < 0 { "-" } else { "+" };
        if s.is_empty() {
            if a < 0 {
                s.push('-');
            }
        } else {
            s.push_str(&format!(" {sign} "));
        }
        if a.abs() != 1 {
            s.push_str(&a.abs().to_string());
        }
        s.push_str(&format!("c{}", j + 1));
    }
    if s.is_empty() {
        s.push('0');
    }
    s + " >= 0"
}

fn main() -> ExitCode {
    let cli = Cli::parse();
    match real_main(cli) {
        Ok(true) => ExitCode::SUCCESS,
        Ok(false) => ExitCode::FAILURE,
        Err(e) => {
            eprintln!("error: {e:#}");
            ExitCode::from(2)
        }
    }
}
