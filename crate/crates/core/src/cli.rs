//! Command-line front end. One verb per library pipeline, canonical JSON in
//! and out, and a fixed exit-code contract: 0 success or verdict-true,
//! 1 verdict-false, 2 input error.
//!
//! Setting FILIPPOV_DEBUG_RECHECK=1 re-verifies the defining identity of
//! every produced algebra; a failure there signals an internal bug and exits
//! with code 1.

use std::fs;
use std::path::{Path, PathBuf};

use clap::{Parser, Subcommand};

use crate::algebra::{NLieAlgebra, Splitting};
use crate::analysis::{
    certify_central_extension, compare_report, quotient_lie, semidirect_report_fa,
    StructureReport,
};
use crate::contraction::{contract_fa, iw_contract_lie, ww_contract_lie, Grading};
use crate::error::{Error, Result};
use crate::induced::induce;
use crate::io;
use crate::lie::LieAlgebra;
use crate::rational::Rational;
use crate::subspace::Subspace;

#[derive(Parser)]
#[command(
    name = "filippov",
    version,
    about = "Exact computations with n-Lie (Filippov) algebras and their contractions"
)]
pub struct Cli {
    #[command(subcommand)]
    pub command: Command,
}

#[derive(Subcommand)]
pub enum Command {
    /// Check the Filippov identity (arity 2: the Jacobi identity)
    VerifyFi { path: PathBuf },
    /// Write the simple Euclidean n-Lie algebra of dimension n+1
    Simple {
        n: usize,
        #[arg(long)]
        out: Option<PathBuf>,
    },
    /// Contract an algebra with respect to the subalgebra spanned by --i0
    Contract {
        path: PathBuf,
        #[arg(long, required = true, value_delimiter = ',')]
        i0: Vec<usize>,
        #[arg(long)]
        out: Option<PathBuf>,
    },
    /// Compute the Lie algebra of inner derivations
    Induce {
        path: PathBuf,
        #[arg(long)]
        out: Option<PathBuf>,
    },
    /// İnönü-Wigner contraction of a Lie algebra with respect to the
    /// subalgebra spanned by --indices
    Iw {
        path: PathBuf,
        #[arg(long, required = true, value_delimiter = ',')]
        indices: Vec<usize>,
        #[arg(long)]
        out: Option<PathBuf>,
    },
    /// Weimar-Woods contraction of a Lie algebra, graded by --weights or by
    /// the splitting --i0 of the source algebra (induced input only)
    Ww {
        path: PathBuf,
        #[arg(long, value_delimiter = ',')]
        weights: Option<Vec<u32>>,
        #[arg(long, value_delimiter = ',')]
        i0: Option<Vec<usize>>,
        #[arg(long)]
        out: Option<PathBuf>,
    },
    /// Grading induced on an inner-derivation algebra by a splitting
    Grade {
        path: PathBuf,
        #[arg(long, required = true, value_delimiter = ',')]
        i0: Vec<usize>,
        #[arg(long)]
        out: Option<PathBuf>,
    },
    /// Compare two Lie algebras by their isomorphism invariants
    Compare {
        a: PathBuf,
        b: PathBuf,
        #[arg(long)]
        json: bool,
    },
    /// Semidirect-structure report for a splitting of a Filippov algebra
    Report {
        path: PathBuf,
        #[arg(long, required = true, value_delimiter = ',')]
        i0: Vec<usize>,
        #[arg(long)]
        json: bool,
    },
    /// Quotient of a Lie algebra by an ideal (--coords or --subspace)
    Quotient {
        path: PathBuf,
        #[arg(long, value_delimiter = ',')]
        coords: Option<Vec<usize>>,
        #[arg(long)]
        subspace: Option<PathBuf>,
        #[arg(long)]
        out: Option<PathBuf>,
    },
    /// Certify a central extension: quotient of BIG by the ideal must map
    /// onto TARGET under --map
    CertifyExtension {
        big: PathBuf,
        #[arg(long, value_delimiter = ',')]
        coords: Option<Vec<usize>>,
        #[arg(long)]
        subspace: Option<PathBuf>,
        #[arg(long)]
        target: PathBuf,
        #[arg(long)]
        map: PathBuf,
        #[arg(long)]
        json: bool,
    },
}

pub fn run(cli: Cli) -> i32 {
    match dispatch(cli.command) {
        Ok(code) => code,
        Err(e) => {
            eprintln!("error: {e}");
            2
        }
    }
}

fn read(path: &Path) -> Result<String> {
    fs::read_to_string(path).map_err(|e| {
        Error::InvalidInput(format!("cannot read {}: {e}", path.display()))
    })
}

fn emit(out: Option<&PathBuf>, content: &str) -> Result<()> {
    match out {
        Some(path) => fs::write(path, content).map_err(Error::Io),
        None => {
            print!("{content}");
            Ok(())
        }
    }
}

fn load_algebra(path: &Path) -> Result<NLieAlgebra> {
    io::algebra_from_json(&read(path)?)
}

fn load_verified_algebra(path: &Path) -> Result<NLieAlgebra> {
    load_algebra(path)?.verified().map_err(|report| {
        Error::InvalidInput(format!(
            "{} violates the Filippov identity: {report}",
            path.display()
        ))
    })
}

fn load_verified_lie(path: &Path) -> Result<(LieAlgebra, Option<crate::induced::InducedLie>)> {
    let (lie, induced) = io::lie_from_json_flexible(&read(path)?)?;
    let lie = lie.verified().map_err(|report| {
        Error::InvalidInput(format!(
            "{} violates the Jacobi identity: {report}",
            path.display()
        ))
    })?;
    Ok((lie, induced))
}

fn recheck_enabled() -> bool {
    std::env::var("FILIPPOV_DEBUG_RECHECK").is_ok_and(|v| v == "1")
}

fn recheck_fa(alg: &NLieAlgebra, what: &str) -> Option<i32> {
    if recheck_enabled() && !alg.verify_fi().holds() {
        eprintln!("internal check failed: {what} violates the Filippov identity");
        return Some(1);
    }
    None
}

fn recheck_lie(lie: &LieAlgebra, what: &str) -> Option<i32> {
    if recheck_enabled() && !lie.verify_ji().holds() {
        eprintln!("internal check failed: {what} violates the Jacobi identity");
        return Some(1);
    }
    None
}

fn coordinate_span(dim: usize, coords: &[usize]) -> Result<Subspace> {
    let mut vectors = Vec::with_capacity(coords.len());
    for &c in coords {
        if c == 0 || c > dim {
            return Err(Error::IndexOutOfRange { index: c, dim });
        }
        let mut v = vec![Rational::from_integer(0.into()); dim];
        v[c - 1] = Rational::from_integer(1.into());
        vectors.push(v);
    }
    Ok(Subspace::from_vectors(dim, vectors))
}

fn load_ideal(
    dim: usize,
    coords: &Option<Vec<usize>>,
    subspace: &Option<PathBuf>,
) -> Result<Subspace> {
    match (coords, subspace) {
        (Some(c), None) => coordinate_span(dim, c),
        (None, Some(path)) => {
            let file: io::SubspaceFile = serde_json::from_str(&read(path)?)?;
            let s = io::subspace_from_file(&file)?;
            if s.ambient_dim() != dim {
                return Err(Error::DimensionMismatch {
                    expected: dim,
                    got: s.ambient_dim(),
                });
            }
            Ok(s)
        }
        _ => Err(Error::InvalidInput(
            "exactly one of --coords or --subspace is required".to_string(),
        )),
    }
}

fn print_report(report: &StructureReport, json: bool) -> Result<i32> {
    if json {
        let mut s = serde_json::to_string_pretty(report)?;
        s.push('\n');
        print!("{s}");
    } else {
        print!("{report}");
    }
    Ok(if report.all_hold() { 0 } else { 1 })
}

fn dispatch(command: Command) -> Result<i32> {
    match command {
        Command::VerifyFi { path } => {
            let alg = load_algebra(&path)?;
            let report = alg.verify_fi();
            if report.holds() {
                println!(
                    "FI holds (arity {}, dim {}, {} entries)",
                    alg.arity(),
                    alg.dim(),
                    alg.tensor().num_entries()
                );
                Ok(0)
            } else {
                println!("FI fails with {} violation(s):", report.violations.len());
                for v in &report.violations {
                    println!("  {v}");
                }
                Ok(1)
            }
        }
        Command::Simple { n, out } => {
            if n < 2 {
                return Err(Error::InvalidInput("n must be at least 2".to_string()));
            }
            emit(out.as_ref(), &io::algebra_to_json(&NLieAlgebra::simple(n)))?;
            Ok(0)
        }
        Command::Contract { path, i0, out } => {
            let alg = load_verified_algebra(&path)?;
            let s = Splitting::new(alg.dim(), i0)?;
            let contracted = contract_fa(&alg, &s)?;
            if let Some(code) = recheck_fa(&contracted, "contraction") {
                return Ok(code);
            }
            emit(out.as_ref(), &io::algebra_to_json(&contracted))?;
            Ok(0)
        }
        Command::Induce { path, out } => {
            let alg = load_verified_algebra(&path)?;
            let il = induce(&alg)?;
            if let Some(code) = recheck_lie(&il.lie, "induced algebra") {
                return Ok(code);
            }
            emit(out.as_ref(), &io::induced_to_json(&il))?;
            Ok(0)
        }
        Command::Iw { path, indices, out } => {
            let (lie, _) = load_verified_lie(&path)?;
            let contracted = iw_contract_lie(&lie, &indices)?;
            if let Some(code) = recheck_lie(&contracted, "IW contraction") {
                return Ok(code);
            }
            emit(out.as_ref(), &io::lie_to_json(&contracted))?;
            Ok(0)
        }
        Command::Ww {
            path,
            weights,
            i0,
            out,
        } => {
            let (lie, induced) = load_verified_lie(&path)?;
            let grading = match (weights, i0) {
                (Some(w), None) => Grading { weights: w },
                (None, Some(i0)) => {
                    let il = induced.ok_or_else(|| {
                        Error::InvalidInput(
                            "--i0 needs an induced-algebra input with basis words; \
                             use --weights for a plain Lie algebra"
                                .to_string(),
                        )
                    })?;
                    let s = Splitting::new(il.source_dim, i0)?;
                    Grading::from_basis_words(&il.basis_words, &s)
                }
                _ => {
                    return Err(Error::InvalidInput(
                        "exactly one of --weights or --i0 is required".to_string(),
                    ))
                }
            };
            let contracted = ww_contract_lie(&lie, &grading)?;
            if let Some(code) = recheck_lie(&contracted, "W-W contraction") {
                return Ok(code);
            }
            emit(out.as_ref(), &io::lie_to_json(&contracted))?;
            Ok(0)
        }
        Command::Grade { path, i0, out } => {
            let content = read(&path)?;
            let file: io::InducedFile = serde_json::from_str(&content).map_err(|_| {
                Error::InvalidInput(
                    "grade needs an induced-algebra file with basis words".to_string(),
                )
            })?;
            let il = io::induced_from_file(&file)?;
            let s = Splitting::new(il.source_dim, i0)?;
            let grading = Grading::from_basis_words(&il.basis_words, &s);
            let mut text = serde_json::to_string_pretty(&grading)?;
            text.push('\n');
            emit(out.as_ref(), &text)?;
            Ok(0)
        }
        Command::Compare { a, b, json } => {
            let (lie_a, _) = load_verified_lie(&a)?;
            let (lie_b, _) = load_verified_lie(&b)?;
            print_report(&compare_report(&lie_a, &lie_b), json)
        }
        Command::Report { path, i0, json } => {
            let alg = load_algebra(&path)?;
            let s = Splitting::new(alg.dim(), i0)?;
            print_report(&semidirect_report_fa(&alg, &s), json)
        }
        Command::Quotient {
            path,
            coords,
            subspace,
            out,
        } => {
            let (lie, _) = load_verified_lie(&path)?;
            let ideal = load_ideal(lie.dim(), &coords, &subspace)?;
            let quotient = quotient_lie(&lie, &ideal)?;
            if let Some(code) = recheck_lie(&quotient, "quotient") {
                return Ok(code);
            }
            emit(out.as_ref(), &io::lie_to_json(&quotient))?;
            Ok(0)
        }
        Command::CertifyExtension {
            big,
            coords,
            subspace,
            target,
            map,
            json,
        } => {
            let (big_lie, _) = load_verified_lie(&big)?;
            let ideal = load_ideal(big_lie.dim(), &coords, &subspace)?;
            let (target_lie, _) = load_verified_lie(&target)?;
            let basis_map = io::matrix_from_json(&read(&map)?)?;
            let report = certify_central_extension(&big_lie, &ideal, &target_lie, &basis_map)?;
            print_report(&report, json)
        }
    }
}
