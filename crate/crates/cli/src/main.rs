//! `hlcy`: homology tables and verification reports for the Leibniz, Lie,
//! Hochschild and cyclic complexes of polynomial vector fields, their
//! enveloping algebra, and finite structure-constant fixtures.

mod algebra;
mod report;

use std::io::Write;
use std::path::PathBuf;
use std::process::ExitCode;

use clap::{Args, Parser, Subcommand};
use rayon::prelude::*;

use hlcy_core::checks;
use hlcy_core::complexes::{build_slice, homology, ComplexId, Grading};
use hlcy_core::maps::les::{assemble_les, build_ses_pi1, build_ses_pi2, verify_ladder};
use hlcy_core::words::render_chain;

use algebra::Algebra;
use report::{Check, Format, Report, Row};

const MAX_DEGREE_LIMIT: usize = 8;

#[derive(Parser)]
#[command(
    name = "hlcy",
    version,
    about = "Exact homology tables and verification reports"
)]
struct Cli {
    #[command(subcommand)]
    command: Command,
}

#[derive(Subcommand)]
enum Command {
    /// Homology of one complex over a weight/length grid.
    Homology(HomologyArgs),
    /// Batch grid over several complexes.
    Table(TableArgs),
    /// Run a verification suite; exits 1 on any failing check.
    Verify(VerifyArgs),
}

#[derive(Args, Clone)]
struct OutputArgs {
    /// Output format.
    #[arg(long, value_enum, default_value = "text")]
    format: Format,
    /// Write the report to a file instead of stdout.
    #[arg(long)]
    output: Option<PathBuf>,
    /// Suppress homology representatives in the rows.
    #[arg(long)]
    no_reps: bool,
    /// Worker threads (default: HLCY_JOBS or all cores).
    #[arg(long)]
    jobs: Option<usize>,
}

#[derive(Args, Clone)]
struct GridArgs {
    /// Algebra: witt | sl2 | solvable2 | abelian2 | u-witt | dual-numbers |
    /// poly3 | path to a JSON table.
    #[arg(long)]
    algebra: String,
    /// Comma-separated weights (graded algebras only), e.g. -2,-1,0,1.
    #[arg(long, value_delimiter = ',', allow_hyphen_values = true)]
    weight: Vec<i64>,
    /// Report degrees 0..=N (at most 8).
    #[arg(long, default_value_t = 4)]
    max_degree: usize,
    /// Length bound for enveloping/mixed slices (exact for mixed-mod-d).
    #[arg(long)]
    length: Option<u32>,
}

#[derive(Args)]
struct HomologyArgs {
    /// Complex: leibniz | lie | ker-pi1 | hochschild | cyclic | ker-pi2 |
    /// bprime | mixed | mixed-mod-d.
    #[arg(long)]
    complex: String,
    #[command(flatten)]
    grid: GridArgs,
    #[command(flatten)]
    out: OutputArgs,
}

#[derive(Args)]
struct TableArgs {
    /// Complexes to include (repeatable).
    #[arg(long, required = true)]
    complex: Vec<String>,
    #[command(flatten)]
    grid: GridArgs,
    #[command(flatten)]
    out: OutputArgs,
}

#[derive(Args)]
struct VerifyArgs {
    /// Suite: axioms | ladder | exactness | gv.
    suite: String,
    /// Restrict ladder/exactness to one algebra.
    #[arg(long)]
    algebra: Option<String>,
    #[arg(long, default_value_t = 3)]
    max_degree: usize,
    #[arg(long, value_delimiter = ',', allow_hyphen_values = true)]
    weight: Vec<i64>,
    #[arg(long)]
    length: Option<u32>,
    #[command(flatten)]
    out: OutputArgs,
}

fn main() -> ExitCode {
    let cli = Cli::parse();
    match run(cli) {
        Ok(code) => code,
        Err(msg) => {
            eprintln!("error: {msg}");
            ExitCode::from(2)
        }
    }
}

fn run(cli: Cli) -> Result<ExitCode, String> {
    match cli.command {
        Command::Homology(args) => {
            install_pool(args.out.jobs)?;
            let rows = grid_rows(
                std::slice::from_ref(&args.complex),
                &args.grid,
                args.out.no_reps,
            )?;
            emit(Report::new(rows, Vec::new()), &args.out)?;
            Ok(ExitCode::SUCCESS)
        }
        Command::Table(args) => {
            install_pool(args.out.jobs)?;
            let rows = grid_rows(&args.complex, &args.grid, args.out.no_reps)?;
            emit(Report::new(rows, Vec::new()), &args.out)?;
            Ok(ExitCode::SUCCESS)
        }
        Command::Verify(args) => {
            install_pool(args.out.jobs)?;
            let checks = run_verify(&args)?;
            let report = Report::new(Vec::new(), checks.into_iter().map(Check::from).collect());
            let ok = report.all_pass();
            emit(report, &args.out)?;
            Ok(if ok {
                ExitCode::SUCCESS
            } else {
                ExitCode::FAILURE
            })
        }
    }
}

fn install_pool(jobs: Option<usize>) -> Result<(), String> {
    let jobs = jobs.or_else(|| std::env::var("HLCY_JOBS").ok().and_then(|v| v.parse().ok()));
    if let Some(n) = jobs {
        if n == 0 {
            return Err("--jobs must be at least 1".into());
        }
        rayon::ThreadPoolBuilder::new()
            .num_threads(n)
            .build_global()
            .map_err(|e| e.to_string())?;
    }
    Ok(())
}

fn complex_for(name: &str, algebra: &Algebra) -> Result<ComplexId, String> {
    let lie_only = |what: &str| -> Result<hlcy_core::LiePresentation, String> {
        algebra
            .lie()
            .ok_or_else(|| format!("complex `{what}` needs a Lie presentation"))
    };
    let assoc_only = |what: &str| -> Result<hlcy_core::AssocPresentation, String> {
        algebra
            .assoc()
            .ok_or_else(|| format!("complex `{what}` needs an associative algebra"))
    };
    Ok(match name {
        "leibniz" => ComplexId::Cl(algebra.lie_like()),
        "lie" => ComplexId::Lambda(algebra.lie_like()),
        "ker-pi1" => ComplexId::KerPi1Shift2(algebra.lie_like()),
        "hochschild" => ComplexId::Chh(assoc_only("hochschild")?),
        "cyclic" => ComplexId::CLambda(assoc_only("cyclic")?),
        "ker-pi2" => ComplexId::KerPi2(assoc_only("ker-pi2")?),
        "bprime" => ComplexId::BPrimeColumn(assoc_only("bprime")?),
        "mixed" => ComplexId::MixedOmega(lie_only("mixed")?),
        "mixed-mod-d" => ComplexId::MixedOmegaModImD(lie_only("mixed-mod-d")?),
        other => return Err(format!("unknown complex `{other}`")),
    })
}

fn grid_rows(complexes: &[String], grid: &GridArgs, no_reps: bool) -> Result<Vec<Row>, String> {
    if grid.max_degree > MAX_DEGREE_LIMIT {
        return Err(format!("--max-degree is limited to {MAX_DEGREE_LIMIT}"));
    }
    let algebra = algebra::resolve(&grid.algebra)?;
    let weights: Vec<Option<i64>> = if grid.weight.is_empty() {
        vec![None]
    } else {
        grid.weight.iter().map(|w| Some(*w)).collect()
    };
    let mut cells = Vec::new();
    for name in complexes {
        let id = complex_for(name, &algebra)?;
        for w in &weights {
            cells.push((
                name.clone(),
                id.clone(),
                Grading {
                    weight: *w,
                    length: grid.length,
                },
            ));
        }
    }
    let max_degree = grid.max_degree;
    let algebra_name = grid.algebra.clone();
    let results: Vec<Result<Vec<Row>, String>> = cells
        .par_iter()
        .map(|(name, id, grading)| {
            // one degree past the report range so top-degree homology is exact
            let slice = build_slice(id, *grading, max_degree + 1).map_err(|e| e.to_string())?;
            let h = homology(&slice);
            let names = id.names().map(|n| n.to_vec());
            let mut rows = Vec::new();
            for row in h.rows.iter().take(max_degree + 1) {
                let reps = if no_reps {
                    None
                } else {
                    Some(
                        row.representatives
                            .iter()
                            .map(|c| render_chain(c, names.as_deref()))
                            .collect(),
                    )
                };
                rows.push(Row {
                    complex: name.clone(),
                    algebra: algebra_name.clone(),
                    weight: grading.weight,
                    length: grading.length,
                    degree: row.degree,
                    dim: slice.dim(row.degree),
                    cycles: row.cycles,
                    boundaries: row.boundaries,
                    homology: row.homology,
                    representatives: reps,
                });
            }
            Ok(rows)
        })
        .collect();
    let mut rows = Vec::new();
    for r in results {
        rows.extend(r?);
    }
    Ok(rows)
}

fn run_verify(args: &VerifyArgs) -> Result<Vec<checks::CheckResult>, String> {
    if args.max_degree > MAX_DEGREE_LIMIT {
        return Err(format!("--max-degree is limited to {MAX_DEGREE_LIMIT}"));
    }
    let grading = Grading {
        weight: args.weight.first().copied(),
        length: args.length,
    };
    match args.suite.as_str() {
        "axioms" => {
            if args.algebra.is_some() {
                return Err("`verify axioms` runs a fixed grid; drop --algebra".into());
            }
            // the sub-suites are independent; run them in parallel and keep
            // the fixed order
            let mut parts: Vec<(usize, Vec<checks::CheckResult>)> = [0usize, 1, 2, 3, 4]
                .par_iter()
                .map(|&i| {
                    let v = match i {
                        0 => checks::algebra_suite(),
                        1 => checks::dd_zero_suite(),
                        2 => checks::cyclic_suite(),
                        3 => checks::contraction_suite(),
                        _ => checks::weight0_length1_suite(),
                    };
                    (i, v)
                })
                .collect();
            parts.sort_by_key(|(i, _)| *i);
            Ok(parts.into_iter().flat_map(|(_, v)| v).collect())
        }
        "ladder" => match &args.algebra {
            None => Ok(checks::ladder_suite()),
            Some(sel) => {
                let algebra = algebra::resolve(sel)?;
                let alg = algebra
                    .assoc()
                    .ok_or_else(|| "the ladder needs an associative algebra".to_string())?;
                let report =
                    verify_ladder(&alg, grading, args.max_degree).map_err(|e| e.to_string())?;
                let mut out = Vec::new();
                out.push(checks::CheckResult {
                    name: format!("ladder/{sel}/relative-exact"),
                    anchor: "relative long exact sequence exact at every position".into(),
                    pass: report.relative.all_exact(),
                    witness: None,
                });
                out.push(checks::CheckResult {
                    name: format!("ladder/{sel}/cyclic-exact"),
                    anchor: "cyclic long exact sequence exact at every position".into(),
                    pass: report.cyclic.all_exact(),
                    witness: None,
                });
                for s in &report.squares {
                    out.push(checks::CheckResult {
                        name: format!("ladder/{sel}/square-{}-{}", s.name, s.degree),
                        anchor: "ladder square commutes on homology representatives".into(),
                        pass: s.pass,
                        witness: None,
                    });
                }
                for (m, ok) in &report.chain_squares {
                    out.push(checks::CheckResult {
                        name: format!("ladder/{sel}/chain-square-{m}"),
                        anchor: "θ∘π_1 = π_2∘φ as matrices".into(),
                        pass: *ok,
                        witness: None,
                    });
                }
                Ok(out)
            }
        },
        "exactness" => match &args.algebra {
            None => Ok(checks::exactness_suite()),
            Some(sel) => {
                let algebra = algebra::resolve(sel)?;
                let max = args.max_degree;
                let (kind, report) = if algebra.lie().is_some() {
                    let ses = build_ses_pi1(&algebra.lie_like(), grading, max + 1)
                        .map_err(|e| e.to_string())?;
                    (
                        "relative",
                        assemble_les(&ses, max).map_err(|e| e.to_string())?.0,
                    )
                } else {
                    let a = algebra.assoc().expect("lie or assoc");
                    let ses = build_ses_pi2(&a, grading, max + 1).map_err(|e| e.to_string())?;
                    (
                        "cyclic",
                        assemble_les(&ses, max).map_err(|e| e.to_string())?.0,
                    )
                };
                Ok(report
                    .positions
                    .into_iter()
                    .map(|p| checks::CheckResult {
                        name: format!("les-{kind}/{sel}/{}", p.group),
                        anchor: format!(
                            "rank(incoming) = {} matches dim ker(outgoing) = {}",
                            p.incoming_rank, p.outgoing_kernel_dim
                        ),
                        pass: p.exact,
                        witness: None,
                    })
                    .collect())
            }
        },
        "gv" => Ok(checks::gv_suite()),
        other => Err(format!(
            "unknown verify suite `{other}` (axioms | ladder | exactness | gv)"
        )),
    }
}

fn emit(report: Report, out: &OutputArgs) -> Result<(), String> {
    let render = |w: &mut dyn Write| report.write(out.format, w).map_err(|e| e.to_string());
    match &out.output {
        Some(path) => {
            let mut f = std::fs::File::create(path)
                .map_err(|e| format!("cannot create {}: {e}", path.display()))?;
            render(&mut f)
        }
        None => {
            let stdout = std::io::stdout();
            let mut lock = stdout.lock();
            render(&mut lock)
        }
    }
}
