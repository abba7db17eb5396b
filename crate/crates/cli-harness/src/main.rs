//! `greenring`: construction, decomposition, Green-ring arithmetic and the
//! verification battery for the four Hopf algebras, with JSON and DOT output.

use clap::{Parser, Subcommand, ValueEnum};
use cli_harness::suites;
use exact_linalg::Scalar;
use green_ring::RelationTable;
use hopf_core::{build_algebra, central_idempotents, ext_quiver};
use rep_modules::{construct, tensor, to_dot, validate_module, IndecLabel};
use serde_json::json;
use std::str::FromStr;
use std::sync::Arc;
use suites::{run_battery, Config, SUITE_NAMES};

#[derive(Copy, Clone, Debug, PartialEq, Eq, ValueEnum)]
enum Format {
    Text,
    Json,
    Dot,
}

#[derive(Parser)]
#[command(
    name = "greenring",
    about = "Exact representation-theoretic calculator for the Sweedler algebra, the 2-rank Taft algebra, its Drinfeld double, and the Sweedler tensor square"
)]
struct Cli {
    /// Output format
    #[arg(long, global = true, value_enum, default_value_t = Format::Text)]
    format: Format,
    /// Write output to a file instead of stdout
    #[arg(long, global = true)]
    out: Option<std::path::PathBuf>,
    /// Random seed (the GREENRING_SEED environment variable overrides this)
    #[arg(long, global = true, default_value_t = 7)]
    seed: u64,
    #[command(subcommand)]
    command: Command,
}

#[derive(Subcommand)]
enum Command {
    /// Structure data and axiom report of one algebra
    Algebra {
        /// One of H4, mabar, DH4, HH
        name: String,
    },
    /// Construct and validate one canonical indecomposable module
    Module {
        algebra: String,
        /// Label such as "P(+,+)", "M3", "N'2_-+", "C(2,1)"
        label: String,
    },
    /// Tensor two modules and decompose, with the closed-form product
    /// alongside where available
    Tensor {
        algebra: String,
        a: String,
        b: String,
    },
    /// Closed-form Green-ring product of two labels; with no labels, print
    /// the generator multiplication table
    Green {
        algebra: String,
        a: Option<String>,
        b: Option<String>,
        /// Rank bound for the generator table
        #[arg(long, default_value_t = 2)]
        max_rank: usize,
    },
    /// Run verification suites (all twelve when none are named)
    Verify {
        /// Suite names; see --help for the full list
        suites: Vec<String>,
        #[arg(long, default_value_t = 4)]
        max_rank: usize,
        /// Comma-separated band parameters, e.g. "1,2,-1"
        #[arg(long, default_value = "1,2,-1")]
        etas: String,
    },
}

fn main() {
    let cli = Cli::parse();
    let seed = std::env::var("GREENRING_SEED")
        .ok()
        .and_then(|v| v.parse::<u64>().ok())
        .unwrap_or(cli.seed);
    let result = match &cli.command {
        Command::Algebra { name } => run_algebra(name, cli.format),
        Command::Module { algebra, label } => run_module(algebra, label, cli.format),
        Command::Tensor { algebra, a, b } => run_tensor(algebra, a, b, seed, cli.format),
        Command::Green {
            algebra,
            a,
            b,
            max_rank,
        } => run_green(algebra, a.as_deref(), b.as_deref(), *max_rank, cli.format),
        Command::Verify {
            suites,
            max_rank,
            etas,
        } => run_verify(suites, *max_rank, etas, seed, cli.format),
    };
    match result {
        Ok((output, ok)) => {
            if let Some(path) = &cli.out {
                if let Err(e) = std::fs::write(path, &output) {
                    eprintln!("cannot write {}: {e}", path.display());
                    std::process::exit(2);
                }
            } else {
                println!("{output}");
            }
            std::process::exit(if ok { 0 } else { 1 });
        }
        Err(e) => {
            eprintln!("error: {e}");
            std::process::exit(2);
        }
    }
}

fn parse_etas(spec: &str) -> Result<Vec<Scalar>, String> {
    let etas: Result<Vec<Scalar>, _> = spec
        .split(',')
        .map(|t| Scalar::from_str(t.trim()).map_err(|e| format!("bad η {t:?}: {e}")))
        .collect();
    let etas = etas?;
    if etas.iter().any(|e| e.is_zero()) {
        return Err("band parameters must be nonzero".into());
    }
    Ok(etas)
}

type CmdOutput = Result<(String, bool), String>;

fn run_algebra(name: &str, format: Format) -> CmdOutput {
    let h = build_algebra(name)?;
    let ax = h.check_hopf_axioms();
    let blocks = central_idempotents(&h).elements.len();
    let quiver = ext_quiver(&h);
    match format {
        Format::Json => {
            let v = json!({
                "name": h.name,
                "dim": h.dim,
                "basis": h.basis_labels,
                "generators": h.generators.iter().map(|(n, _)| n).collect::<Vec<_>>(),
                "axioms": ax,
                "blocks": blocks,
                "quiver": quiver,
            });
            Ok((serde_json::to_string_pretty(&v).unwrap(), ax.all_pass()))
        }
        Format::Dot => Ok((quiver_dot(&h.name, &quiver), ax.all_pass())),
        Format::Text => {
            let mut out = format!("{}: dimension {}\n", h.name, h.dim);
            out += &format!("basis: {}\n", h.basis_labels.join(", "));
            out += &format!(
                "generators: {}\n",
                h.generators
                    .iter()
                    .map(|(n, _)| n.as_str())
                    .collect::<Vec<_>>()
                    .join(", ")
            );
            out += &format!(
                "Hopf axioms: {}\n",
                if ax.all_pass() { "pass" } else { "FAIL" }
            );
            for f in &ax.failures {
                out += &format!("  failure: {f}\n");
            }
            out += &format!("blocks (primitive central idempotents): {blocks}\n");
            out += &format!("Ext quiver arrows: {:?}", quiver.arrows);
            Ok((out, ax.all_pass()))
        }
    }
}

fn quiver_dot(name: &str, q: &hopf_core::Quiver) -> String {
    let mut out = format!("digraph \"{name}_quiver\" {{\n");
    for v in 0..q.vertices {
        out += &format!("  v{v} [label=\"{v}\"];\n");
    }
    for (i, row) in q.arrows.iter().enumerate() {
        for (j, &k) in row.iter().enumerate() {
            for _ in 0..k {
                out += &format!("  v{i} -> v{j};\n");
            }
        }
    }
    out += "}";
    out
}

fn run_module(algebra: &str, label: &str, format: Format) -> CmdOutput {
    let alg = Arc::new(build_algebra(algebra)?);
    let l = IndecLabel::from_str(label)?;
    let m = construct(&alg, &l)?;
    let report = validate_module(&m);
    let fp = decomposer::fingerprint(&m);
    match format {
        Format::Dot => Ok((to_dot(&m, &l.to_string()), report.all_pass())),
        Format::Json => {
            let v = json!({
                "algebra": algebra,
                "label": l.to_string(),
                "dim": m.dim,
                "valid": report.all_pass(),
                "fingerprint": format!("{fp:?}"),
            });
            Ok((serde_json::to_string_pretty(&v).unwrap(), report.all_pass()))
        }
        Format::Text => Ok((
            format!(
                "{l} over {algebra}: dim {}, module axioms {}\nfingerprint: {fp:?}",
                m.dim,
                if report.all_pass() { "pass" } else { "FAIL" }
            ),
            report.all_pass(),
        )),
    }
}

fn run_tensor(algebra: &str, a: &str, b: &str, seed: u64, format: Format) -> CmdOutput {
    let alg = Arc::new(build_algebra(algebra)?);
    let la = IndecLabel::from_str(a)?;
    let lb = IndecLabel::from_str(b)?;
    let ma = construct(&alg, &la)?;
    let mb = construct(&alg, &lb)?;
    let t = tensor(&ma, &mb);
    let dec = decomposer::Decomposer::new(Arc::clone(&alg), seed);
    let mut hints: Vec<Scalar> = Vec::new();
    for l in [&la, &lb] {
        if let Some(e) = &l.eta {
            hints.push(e.clone());
            hints.push(-e.clone());
        }
    }
    let d = dec.decompose_with_hints(&t, &hints)?;
    let closed = RelationTable::new(algebra)
        .ok()
        .and_then(|t| t.multiply_labels(&la, &lb).ok());
    let brute_str = d.display();
    let agreement = closed.as_ref().map(|c| c.to_string() == brute_str);
    match format {
        Format::Json => {
            let v = json!({
                "algebra": algebra,
                "factors": [la.to_string(), lb.to_string()],
                "tensor_dim": t.dim,
                "decomposition": brute_str,
                "closed_form": closed.as_ref().map(|c| c.to_string()),
                "engines_agree": agreement,
                "seed": d.seed,
            });
            Ok((
                serde_json::to_string_pretty(&v).unwrap(),
                agreement.unwrap_or(true),
            ))
        }
        _ => {
            let mut out = format!("{la} ⊗ {lb} over {algebra} (dim {}):\n", t.dim);
            out += &format!("  decomposition: {brute_str}\n");
            if let Some(c) = &closed {
                out += &format!(
                    "  closed form:   {c}\n  engines agree: {}",
                    if agreement == Some(true) { "yes" } else { "NO" }
                );
            }
            Ok((out, agreement.unwrap_or(true)))
        }
    }
}

fn run_green(
    algebra: &str,
    a: Option<&str>,
    b: Option<&str>,
    max_rank: usize,
    format: Format,
) -> CmdOutput {
    let table = RelationTable::new(algebra)?;
    match (a, b) {
        (Some(a), Some(b)) => {
            let la = IndecLabel::from_str(a)?;
            let lb = IndecLabel::from_str(b)?;
            let prod = table.multiply_labels(&la, &lb)?;
            match format {
                Format::Json => Ok((serde_json::to_string_pretty(&prod).unwrap(), true)),
                _ => Ok((format!("[{la}]·[{lb}] = {prod}"), true)),
            }
        }
        (None, None) => Ok((generator_table(algebra, &table, max_rank)?, true)),
        _ => Err("green needs either two labels or none (for the table)".into()),
    }
}

/// Multiplication table of the presentation generators, one row per
/// ordered pair, in the layout of the relation lists.
fn generator_table(algebra: &str, table: &RelationTable, max_rank: usize) -> Result<String, String> {
    use rep_modules::Family;
    let mut gens: Vec<IndecLabel> = vec![
        IndecLabel::simple(-1, -1),
        IndecLabel::projective(1, 1),
        IndecLabel::string(Family::M, 1),
        IndecLabel::string(Family::W, 1),
    ];
    if algebra != "DH4" {
        gens.insert(1, IndecLabel::simple(1, -1));
    } else {
        gens.push(IndecLabel::projective(1, -1));
    }
    for r in 1..=max_rank {
        gens.push(IndecLabel::string(Family::N, r));
        gens.push(IndecLabel::string(Family::NPrime, r));
        gens.push(IndecLabel::band(r, Scalar::one()));
    }
    let mut out = format!("Green-ring generator products over {algebra} (rank ≤ {max_rank}):\n");
    for a in &gens {
        for b in &gens {
            let p = table.multiply_labels(a, b)?;
            out += &format!("  [{a}]·[{b}] = {p}\n");
        }
    }
    Ok(out)
}

fn run_verify(
    names: &[String],
    max_rank: usize,
    etas: &str,
    seed: u64,
    format: Format,
) -> CmdOutput {
    if max_rank == 0 {
        return Err("max_rank must be at least 1".into());
    }
    let cfg = Config {
        max_rank,
        etas: parse_etas(etas)?,
        seed,
    };
    let names: Vec<String> = if names.is_empty() {
        SUITE_NAMES.iter().map(|s| s.to_string()).collect()
    } else {
        names.to_vec()
    };
    let report = run_battery(&names, &cfg)?;
    let ok = report.all_pass();
    match format {
        Format::Json => Ok((serde_json::to_string_pretty(&report).unwrap(), ok)),
        _ => {
            let mut out = String::new();
            for s in &report.suites {
                out += &format!(
                    "{}: {} passed, {} failed\n",
                    s.suite, s.passed, s.failed
                );
                for c in s.failures() {
                    out += &format!(
                        "  FAIL {}\n    expected: {}\n    actual:   {}\n",
                        c.instance, c.expected, c.actual
                    );
                }
            }
            out += &format!(
                "total: {} passed, {} failed in {} ms (seed {})",
                report.passed, report.failed, report.duration_ms, report.seed
            );
            Ok((out, ok))
        }
    }
}
