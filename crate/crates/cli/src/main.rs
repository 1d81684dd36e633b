//! Command-line surface for exact polynomial computation over a rational
//! division algebra (the quaternions by default): expression evaluation,
//! the coordinate transport between noncommutative polynomials and their
//! central images, identity testing with rewriting certificates, and
//! ideal artifacts with Gröbner-based membership.
//!
//! Exit status: 0 on success (and for `true` answers), 1 for domain
//! errors (named on stderr) and for `false` answers, 2 for usage errors.

mod error;
mod expr;

use std::fs;
use std::path::{Path, PathBuf};
use std::process::ExitCode;

use clap::{Parser, Subcommand};
use quapoly::files;
use quapoly::rational::format_rational;
use quapoly::transport::{
    coord_poly, from_central, gpi_certificate, is_identity, to_central, verify_certificate,
    GpiGenerators,
};
use quapoly::{
    verify_radical_certificate, Algebra, AlgebraElement, CentralPoly, FreePoly, Ideal, Point,
};

use error::{CliError, Result};

const GRAMMAR_HELP: &str = "\
Expressions:
  expr   := term (('+' | '-') term)*
  term   := factor ('*' factor)*
  factor := '-' factor | atom ('^' uint)?
  atom   := rational | symbol | '(' expr ')'

Whitespace is ignored and there is no implicit multiplication.
Multiplication is noncommutative and left-associative; '^' binds tighter
than unary minus, which binds tighter than '*'. Rationals are 'p' or
'p/q'. Symbols: variables x1, x2, …; central variables y<i>_<j> (central
expressions only); the algebra's basis labels (1, i, j, k for the
quaternions); positional basis aliases e1…em.";

#[derive(Parser)]
#[command(name = "quapoly", version, about = "Exact polynomial functions over division algebras", after_long_help = GRAMMAR_HELP)]
struct Cli {
    /// Multiplication-table file (JSON); defaults to the rational quaternions
    #[arg(long, global = true, value_name = "FILE")]
    algebra: Option<PathBuf>,

    /// Number of variables; inferred from the expressions when omitted
    #[arg(short = 'n', long = "nvars", global = true, value_name = "N")]
    nvars: Option<usize>,

    /// Emit machine-readable JSON instead of text
    #[arg(long, global = true)]
    json: bool,

    #[command(subcommand)]
    cmd: Cmd,
}

#[derive(Subcommand)]
enum Cmd {
    /// Print the central-coordinate normal form of EXPR (its φ image)
    Normalize {
        #[arg(allow_hyphen_values = true)]
        expr: String,
    },
    /// Decide whether EXPR is a polynomial identity; prints true/false
    Identity {
        #[arg(allow_hyphen_values = true)]
        expr: String,
    },
    /// Evaluate EXPR at the point given by --at assignments
    Eval {
        #[arg(allow_hyphen_values = true)]
        expr: String,
        /// Assignment `x<i>=EXPR` with a variable-free right-hand side; repeatable
        #[arg(long = "at", value_name = "x<i>=EXPR")]
        at: Vec<String>,
    },
    /// Print the conjugate of EXPR
    Conj {
        #[arg(allow_hyphen_values = true)]
        expr: String,
    },
    /// Print the norm EXPR·conj(EXPR)
    Norm {
        #[arg(allow_hyphen_values = true)]
        expr: String,
    },
    /// Map EXPR into the central polynomial ring
    Phi {
        #[arg(allow_hyphen_values = true)]
        expr: String,
    },
    /// Map a central CEXPR back to a noncommutative polynomial
    Psi {
        #[arg(allow_hyphen_values = true)]
        cexpr: String,
    },
    /// Print the coordinate functionals Y1…Ym of the algebra
    CoordTable,
    /// Print the kernel generators for N variables (requires -n)
    GpiGens,
    /// Build a rewriting certificate for an identity and write it to FILE
    GpiCert {
        #[arg(allow_hyphen_values = true)]
        expr: String,
        #[arg(short, long = "out", value_name = "FILE")]
        out: PathBuf,
    },
    /// Check a certificate file; prints true/false
    GpiVerify { file: PathBuf },
    /// Ideal artifact commands
    Ideal {
        #[command(subcommand)]
        cmd: IdealCmd,
    },
    /// Decide membership of EXPR in an ideal file; prints true/false
    Member {
        #[arg(allow_hyphen_values = true)]
        expr: String,
        #[arg(long, value_name = "FILE")]
        ideal: PathBuf,
    },
    /// Verify a radical certificate against an ideal file; prints true/false
    RadicalVerify {
        #[arg(long, value_name = "FILE")]
        ideal: PathBuf,
        #[arg(long, value_name = "FILE")]
        cert: PathBuf,
    },
    /// Decide whether the ideal vanishes at the --at point; prints true/false
    Vanish {
        #[arg(long, value_name = "FILE")]
        ideal: PathBuf,
        /// Assignment `x<i>=EXPR` with a variable-free right-hand side; repeatable
        #[arg(long = "at", value_name = "x<i>=EXPR")]
        at: Vec<String>,
    },
    /// Filter a points file to the points where the ideal vanishes
    Scan {
        #[arg(long, value_name = "FILE")]
        ideal: PathBuf,
        #[arg(long, value_name = "FILE")]
        points: PathBuf,
    },
}

#[derive(Subcommand)]
enum IdealCmd {
    /// Build an ideal from generator expressions and write it to FILE
    Make {
        /// Generator expression; repeatable
        #[arg(short = 'g', long = "gen", value_name = "EXPR", required = true, allow_hyphen_values = true)]
        gens: Vec<String>,
        #[arg(short, long = "out", value_name = "FILE")]
        out: PathBuf,
    },
}

fn main() -> ExitCode {
    let cli = Cli::parse();
    match run(&cli) {
        Ok(code) => ExitCode::from(code),
        Err(CliError::Usage(msg)) => {
            eprintln!("error: {msg}");
            ExitCode::from(2)
        }
        Err(e) => {
            eprintln!("{e}");
            ExitCode::from(1)
        }
    }
}

fn run(cli: &Cli) -> Result<u8> {
    let algebra = load_algebra(&cli.algebra)?;
    match &cli.cmd {
        Cmd::Normalize { expr } | Cmd::Phi { expr } => {
            let f = parse_with_inference(cli, &algebra, expr)?;
            emit_central(cli, &to_central(&f));
            Ok(0)
        }
        Cmd::Identity { expr } => {
            let f = parse_with_inference(cli, &algebra, expr)?;
            bool_out(is_identity(&f))
        }
        Cmd::Eval { expr, at } => {
            let assignments = parse_assignments(at)?;
            let n = match cli.nvars {
                Some(n) => n,
                None => {
                    let from_point = assignments.iter().map(|(d, _)| *d).max().unwrap_or(0);
                    expr::infer_nvars(expr)?.max(from_point)
                }
            };
            let f = expr::parse_free(expr, &algebra, n)?;
            let point = point_from_assignments(&algebra, n, &assignments)?;
            let value = f.eval(&point)?;
            if cli.json {
                println!("{}", pretty_json(&element_coords(&value)));
            } else {
                println!("{}", algebra.format_element(&value));
            }
            Ok(0)
        }
        Cmd::Conj { expr } => {
            let f = parse_with_inference(cli, &algebra, expr)?;
            emit_free(cli, &f.conj()?);
            Ok(0)
        }
        Cmd::Norm { expr } => {
            let f = parse_with_inference(cli, &algebra, expr)?;
            emit_free(cli, &f.norm()?);
            Ok(0)
        }
        Cmd::Psi { cexpr } => {
            let n = nvars_for(cli, &[cexpr])?;
            let c = expr::parse_central(cexpr, &algebra, n)?;
            emit_free(cli, &from_central(&c));
            Ok(0)
        }
        Cmd::CoordTable => {
            let polys: Vec<FreePoly> = (0..algebra.dim())
                .map(|j| coord_poly(&algebra, 1, 0, j))
                .collect::<quapoly::Result<_>>()?;
            if cli.json {
                let dtos: Vec<files::FreePolyDto> =
                    polys.iter().map(files::freepoly_to_dto).collect();
                println!("{}", pretty_json(&dtos));
            } else {
                for (j, p) in polys.iter().enumerate() {
                    println!("Y{} = {p}", j + 1);
                }
            }
            Ok(0)
        }
        Cmd::GpiGens => {
            let n = cli
                .nvars
                .ok_or_else(|| CliError::Usage("gpi-gens requires -n N".into()))?;
            if n == 0 {
                return Err(CliError::Usage("gpi-gens requires at least one variable".into()));
            }
            let gens = GpiGenerators::new(algebra.clone(), n);
            if cli.json {
                let dtos: Vec<files::FreePolyDto> =
                    gens.all().iter().map(files::freepoly_to_dto).collect();
                println!("{}", pretty_json(&dtos));
            } else {
                for g in gens.all() {
                    println!("{g}");
                }
            }
            Ok(0)
        }
        Cmd::GpiCert { expr, out } => {
            let n = nvars_for(cli, &[expr])?.max(1);
            let f = expr::parse_free(expr, &algebra, n)?;
            let gens = GpiGenerators::new(algebra.clone(), n);
            let cert = gpi_certificate(&gens, &f)?;
            let json = files::gpi_cert_to_json(&cert);
            write_file(out, &json)?;
            if cli.json {
                print!("{json}");
            } else {
                println!("steps: {}", cert.steps.len());
            }
            Ok(0)
        }
        Cmd::GpiVerify { file } => {
            let cert = files::gpi_cert_from_json(&algebra, &read_file(file)?)?;
            let n = cert.target.nvars();
            let ok = if n == 0 {
                // A certificate with no variables can only witness 0.
                cert.steps.is_empty() && cert.target.is_zero()
            } else {
                verify_certificate(&GpiGenerators::new(algebra.clone(), n), &cert)
            };
            bool_out(ok)
        }
        Cmd::Ideal { cmd: IdealCmd::Make { gens, out } } => {
            let texts: Vec<&str> = gens.iter().map(String::as_str).collect();
            let n = nvars_for(cli, &texts)?;
            let polys = texts
                .iter()
                .map(|t| expr::parse_free(t, &algebra, n))
                .collect::<Result<Vec<_>>>()?;
            let ideal = Ideal::new(algebra.clone(), n, polys)?;
            let json = files::ideal_to_json(&ideal);
            write_file(out, &json)?;
            if cli.json {
                print!("{json}");
            } else {
                println!("groebner basis size: {}", ideal.groebner().elements().len());
            }
            Ok(0)
        }
        Cmd::Member { expr, ideal } => {
            let ideal = load_ideal(&algebra, ideal)?;
            let n = cli.nvars.unwrap_or_else(|| ideal.nvars());
            let f = expr::parse_free(expr, &algebra, n)?;
            bool_out(ideal.member(&f)?)
        }
        Cmd::RadicalVerify { ideal, cert } => {
            let ideal = load_ideal(&algebra, ideal)?;
            let cert = files::radical_cert_from_json(&algebra, &read_file(cert)?)?;
            bool_out(verify_radical_certificate(&cert, &ideal)?)
        }
        Cmd::Vanish { ideal, at } => {
            let ideal = load_ideal(&algebra, ideal)?;
            let assignments = parse_assignments(at)?;
            let point = point_from_assignments(&algebra, ideal.nvars(), &assignments)?;
            bool_out(ideal.vanishes_at(&point)?)
        }
        Cmd::Scan { ideal, points } => {
            let ideal = load_ideal(&algebra, ideal)?;
            let pts = files::points_from_json(&algebra, ideal.nvars(), &read_file(points)?)?;
            let hits = ideal.scan_zero_locus(&pts)?;
            if cli.json {
                print!("{}", files::points_to_json(&hits));
            } else {
                for p in &hits {
                    let coords: Vec<String> =
                        p.coords().iter().map(|c| algebra.format_element(c)).collect();
                    println!("({})", coords.join(", "));
                }
            }
            Ok(0)
        }
    }
}

/// Parses a free expression, inferring the variable count from the text
/// unless `-n` was given.
fn parse_with_inference(cli: &Cli, algebra: &Algebra, text: &str) -> Result<FreePoly> {
    let n = nvars_for(cli, &[text])?;
    expr::parse_free(text, algebra, n)
}

/// The explicit `-n` when present, otherwise the largest variable index
/// mentioned across the given expressions.
fn nvars_for(cli: &Cli, texts: &[&str]) -> Result<usize> {
    match cli.nvars {
        Some(n) => Ok(n),
        None => {
            let mut n = 0;
            for t in texts {
                n = n.max(expr::infer_nvars(t)?);
            }
            Ok(n)
        }
    }
}

fn load_algebra(path: &Option<PathBuf>) -> Result<Algebra> {
    match path {
        None => Ok(Algebra::quaternion()),
        Some(p) => Ok(files::algebra_from_json(&read_file(p)?)?),
    }
}

fn load_ideal(algebra: &Algebra, path: &Path) -> Result<Ideal> {
    Ok(files::ideal_from_json(algebra, &read_file(path)?)?)
}

fn read_file(path: &Path) -> Result<String> {
    fs::read_to_string(path)
        .map_err(|e| CliError::FileError { path: path.to_path_buf(), detail: e.to_string() })
}

fn write_file(path: &Path, text: &str) -> Result<()> {
    fs::write(path, text)
        .map_err(|e| CliError::FileError { path: path.to_path_buf(), detail: e.to_string() })
}

/// Splits `x<i>=EXPR` assignment arguments into (1-based index, value text).
fn parse_assignments(items: &[String]) -> Result<Vec<(usize, String)>> {
    let mut out = Vec::new();
    for item in items {
        let (lhs, rhs) = item.split_once('=').ok_or_else(|| CliError::SyntaxError {
            offset: item.len(),
            expected: "an assignment of the form x<i>=EXPR".into(),
        })?;
        let name = lhs.trim();
        let idx = name
            .strip_prefix('x')
            .and_then(|d| d.parse::<usize>().ok())
            .filter(|&d| d >= 1)
            .ok_or_else(|| CliError::SyntaxError {
                offset: 0,
                expected: "a variable name x<i> on the left of '='".into(),
            })?;
        out.push((idx, rhs.to_string()));
    }
    Ok(out)
}

/// Builds the point (a₁, …, aₙ) from assignments, requiring exactly one
/// value for every variable.
fn point_from_assignments(
    algebra: &Algebra,
    n: usize,
    assignments: &[(usize, String)],
) -> Result<Point> {
    let mut coords: Vec<Option<AlgebraElement>> = vec![None; n];
    for (idx, text) in assignments {
        if *idx > n {
            return Err(CliError::VariableOutOfRange { name: format!("x{idx}"), limit: n });
        }
        if coords[idx - 1].is_some() {
            return Err(CliError::DuplicateAssignment { var: format!("x{idx}") });
        }
        coords[idx - 1] = Some(expr::parse_constant(text, algebra)?);
    }
    let coords = coords
        .into_iter()
        .enumerate()
        .map(|(i, c)| c.ok_or(CliError::MissingAssignment { var: format!("x{}", i + 1) }))
        .collect::<Result<Vec<_>>>()?;
    Ok(Point::new(algebra.clone(), coords)?)
}

fn element_coords(e: &AlgebraElement) -> Vec<String> {
    (0..e.dim()).map(|s| format_rational(e.coord(s))).collect()
}

fn pretty_json<T: serde::Serialize>(value: &T) -> String {
    serde_json::to_string_pretty(value).expect("artifact types serialize without failure")
}

fn emit_free(cli: &Cli, p: &FreePoly) {
    if cli.json {
        println!("{}", pretty_json(&files::freepoly_to_dto(p)));
    } else {
        println!("{p}");
    }
}

fn emit_central(cli: &Cli, p: &CentralPoly) {
    if cli.json {
        println!("{}", pretty_json(&files::centralpoly_to_dto(p)));
    } else {
        println!("{p}");
    }
}

/// Prints a boolean answer and converts it to the exit status (`true` → 0,
/// `false` → 1).
fn bool_out(b: bool) -> Result<u8> {
    println!("{b}");
    Ok(if b { 0 } else { 1 })
}
