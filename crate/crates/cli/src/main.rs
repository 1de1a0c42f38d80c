//! `dg`: Δ-groupoid axioms, triangulation presentations, their rings and the
//! knot verification suites.

use std::fmt::Write as _;
use std::io::Write as _;
use std::path::{Path, PathBuf};
use std::process::ExitCode;

use clap::{Parser, Subcommand, ValueEnum};
use deltagpd::delta::{
    build_example, k_identity_violation, parse_model, DeltaError, DeltaModel, ExampleKind,
    FiniteGroup,
};
use deltagpd::functors::{emit_a, emit_b, parse_expr};
use deltagpd::knots::{eval_in_model, fig8_suites, trefoil_suites, EvalModel, KnotError};
use deltagpd::report::Report;
use deltagpd::triangulation::{delta_presentation, parse_diagram, reduce, FIG8_TRI, TREFOIL_TRI};

#[derive(Debug, Parser)]
#[command(
    name = "dg",
    version,
    about = "Delta-groupoids, triangulations and their rings"
)]
struct Cli {
    #[command(subcommand)]
    command: Command,
}

#[derive(Debug, Subcommand)]
enum Command {
    /// Check the Δ-groupoid axioms on an example family or a model file.
    Axioms {
        #[arg(long, value_enum, requires = "size", conflicts_with = "file")]
        family: Option<Family>,
        #[arg(long)]
        size: Option<u64>,
        /// Model in the plain-text groupoid format.
        #[arg(long)]
        file: Option<PathBuf>,
    },
    /// Print the Δ-presentation of a triangulation.
    Present {
        file: PathBuf,
        /// Eliminate generators defined by other relations.
        #[arg(long)]
        reduce: bool,
        #[arg(long)]
        allow_free_faces: bool,
    },
    /// Print the A′ or B′ ring presentation of a triangulation, from the
    /// reduced presentation with star relations unwrapped.
    Rings {
        file: PathBuf,
        #[arg(long, value_enum)]
        functor: FunctorArg,
        /// Use the full presentation instead of the reduced one.
        #[arg(long)]
        no_reduce: bool,
        #[arg(long)]
        allow_free_faces: bool,
    },
    /// Run the verification suites.
    Verify {
        #[arg(value_enum)]
        target: Target,
        /// Print a machine-readable summary instead of report lines.
        #[arg(long)]
        json: bool,
    },
    /// Evaluate an expression in one of the concrete models.
    Eval {
        #[arg(long, value_parser = parse_model_name)]
        model: EvalModel,
        expr: String,
    },
}

#[derive(Debug, Clone, Copy, ValueEnum)]
enum Family {
    Coarse,
    Triple,
    Ar,
    Br,
    Malnormal,
}

#[derive(Debug, Clone, Copy, ValueEnum)]
enum FunctorArg {
    A,
    B,
}

#[derive(Debug, Clone, Copy, ValueEnum)]
enum Target {
    Trefoil,
    Fig8,
    All,
}

fn parse_model_name(s: &str) -> Result<EvalModel, String> {
    s.parse()
}

/// Outcome of a command: normal output, or an input error.
enum Failure {
    Input(String),
}

impl From<DeltaError> for Failure {
    fn from(e: DeltaError) -> Self {
        Failure::Input(e.to_string())
    }
}

impl From<KnotError> for Failure {
    fn from(e: KnotError) -> Self {
        Failure::Input(e.to_string())
    }
}

impl From<deltagpd::triangulation::TriangulationError> for Failure {
    fn from(e: deltagpd::triangulation::TriangulationError) -> Self {
        Failure::Input(e.to_string())
    }
}

/// Reads a file; the bundled names `trefoil.tri` and `fig8.tri` resolve to
/// the built-in diagrams when no such file exists.
fn read_input(path: &Path) -> Result<String, Failure> {
    match std::fs::read_to_string(path) {
        Ok(s) => Ok(s),
        Err(e) => match path.to_str() {
            Some("trefoil.tri") => Ok(TREFOIL_TRI.to_string()),
            Some("fig8.tri") => Ok(FIG8_TRI.to_string()),
            _ => Err(Failure::Input(format!("{}: {e}", path.display()))),
        },
    }
}

fn example(family: Family, size: u64) -> Result<(String, DeltaModel), Failure> {
    let n = usize::try_from(size).map_err(|_| Failure::Input("size too large".into()))?;
    let (label, kind) = match family {
        Family::Coarse => {
            if n == 0 {
                return Err(Failure::Input(
                    "coarse groupoid needs a group of order >= 1".into(),
                ));
            }
            (
                format!("coarse groupoid of Z/{n}"),
                ExampleKind::Coarse(FiniteGroup::cyclic(n)),
            )
        }
        Family::Triple => (format!("X^3 with |X| = {n}"), ExampleKind::Triple(n)),
        Family::Ar => (format!("AR for R = Z/{n}"), ExampleKind::Ar(size)),
        Family::Br => (format!("BR for R = Z/{n}"), ExampleKind::Br(size)),
        Family::Malnormal => {
            if n < 3 {
                return Err(Failure::Input("malnormal family needs size >= 3".into()));
            }
            let group = FiniteGroup::dihedral(n);
            let reflection = (0..group.order())
                .find(|&e| {
                    e != group.identity()
                        && group.mul(e, e) == group.identity()
                        && (0..group.order()).any(|x| group.mul(e, x) != group.mul(x, e))
                })
                .expect("dihedral groups have reflections");
            (
                format!(
                    "dihedral group of order {} over a reflection subgroup",
                    2 * n
                ),
                ExampleKind::Malnormal {
                    group,
                    sub: vec![reflection],
                },
            )
        }
    };
    Ok((label, build_example(&kind)?))
}

fn axioms(
    family: Option<Family>,
    size: Option<u64>,
    file: Option<PathBuf>,
) -> Result<(String, bool), Failure> {
    let (label, model) = match (family, size, file) {
        (Some(f), Some(n), None) => example(f, n)?,
        (None, None, Some(path)) => (
            path.display().to_string(),
            parse_model(&read_input(&path)?)?,
        ),
        _ => {
            return Err(Failure::Input(
                "give either --family with --size, or --file".into(),
            ))
        }
    };
    let report = model.check();
    let mut out = String::new();
    let g = &model.groupoid;
    let _ = writeln!(out, "model: {label}");
    let _ = writeln!(
        out,
        "objects: {}, morphisms: {}, |H| = {}",
        g.num_objects(),
        g.num_morphisms(),
        model.data.h().len()
    );
    out.push_str(&report.to_string());
    let mut ok = report.all_pass();
    if ok {
        match k_identity_violation(g, &model.data) {
            None => out.push_str("PASS k(xy) = k(k(x)j(y))k(y)\n"),
            Some((x, y)) => {
                ok = false;
                let _ = writeln!(
                    out,
                    "FAIL k(xy) = k(k(x)j(y))k(y) witness: {}, {}",
                    g.name(x),
                    g.name(y)
                );
            }
        }
    }
    Ok((out, ok))
}

fn present(file: &Path, reduced: bool, allow_free_faces: bool) -> Result<String, Failure> {
    let d = parse_diagram(&read_input(file)?, allow_free_faces)?;
    let p = if reduced {
        reduce(&d)?
    } else {
        delta_presentation(&d)
    };
    Ok(p.to_string())
}

fn rings(
    file: &Path,
    functor: FunctorArg,
    no_reduce: bool,
    allow_free_faces: bool,
) -> Result<String, Failure> {
    let d = parse_diagram(&read_input(file)?, allow_free_faces)?;
    let p = if no_reduce {
        delta_presentation(&d)
    } else {
        reduce(&d)?.unwrap()
    };
    let r = match functor {
        FunctorArg::A => emit_a(&p),
        FunctorArg::B => emit_b(&p),
    };
    Ok(r.to_string())
}

fn verify(target: Target, json: bool) -> Result<(String, bool), Failure> {
    let mut reports: Vec<Report> = Vec::new();
    if matches!(target, Target::Trefoil | Target::All) {
        reports.extend(trefoil_suites()?);
    }
    if matches!(target, Target::Fig8 | Target::All) {
        reports.extend(fig8_suites()?);
    }
    let passed: usize = reports.iter().map(Report::passed_count).sum();
    let total: usize = reports.iter().map(|r| r.checks.len()).sum();
    let ok = passed == total;
    let out = if json {
        let summary = serde_json::json!({
            "passed": passed,
            "failed": total - passed,
            "all_pass": ok,
            "reports": reports,
        });
        format!(
            "{}\n",
            serde_json::to_string_pretty(&summary).expect("serializable")
        )
    } else {
        let mut s: String = reports.iter().map(Report::to_string).collect();
        let _ = writeln!(s, "summary: {passed} passed, {} failed", total - passed);
        s
    };
    Ok((out, ok))
}

fn eval(model: EvalModel, expr: &str) -> Result<String, Failure> {
    let e = parse_expr(expr).map_err(|e| Failure::Input(format!("parse error: {e}")))?;
    Ok(format!("{}\n", eval_in_model(model, &e)?))
}

fn run(cli: Cli) -> Result<(String, bool), Failure> {
    match cli.command {
        Command::Axioms { family, size, file } => axioms(family, size, file),
        Command::Present {
            file,
            reduce,
            allow_free_faces,
        } => Ok((present(&file, reduce, allow_free_faces)?, true)),
        Command::Rings {
            file,
            functor,
            no_reduce,
            allow_free_faces,
        } => Ok((rings(&file, functor, no_reduce, allow_free_faces)?, true)),
        Command::Verify { target, json } => verify(target, json),
        Command::Eval { model, expr } => Ok((eval(model, &expr)?, true)),
    }
}

fn main() -> ExitCode {
    let cli = Cli::parse();
    match run(cli) {
        Ok((out, ok)) => {
            // A closed pipe (e.g. `| head`) is not an error of the command.
            let _ = std::io::stdout().lock().write_all(out.as_bytes());
            if ok {
                ExitCode::SUCCESS
            } else {
                ExitCode::from(1)
            }
        }
        Err(Failure::Input(msg)) => {
            eprintln!("error: {msg}");
            ExitCode::from(2)
        }
    }
}
