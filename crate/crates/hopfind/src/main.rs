//! Thin command-line front end. All computation lives in the library;
//! this binary parses arguments, loads JSON documents, and prints
//! reports.
//!
//! Exit codes: 0 success, 1 mathematical failure (axiom or predicate),
//! 2 I/O or parse failure.

use std::path::{Path, PathBuf};
use std::process::ExitCode;

use clap::{Parser, Subcommand, ValueEnum};
use serde::Serialize;

use hopfind::doc::{self, AlgebraDoc};
use hopfind::error::Error;
use hopfind::filtration::{self, FiltrationKind};
use hopfind::hopf::HopfAlgebra;
use hopfind::indicator;
use hopfind::oracle;
use hopfind::poly;

#[derive(Parser)]
#[command(
    name = "hopfind",
    version,
    about = "Exact Hopf algebra computations over GF(p)"
)]
struct Cli {
    #[command(subcommand)]
    command: Command,
}

#[derive(Clone, Copy, ValueEnum)]
enum FiltrationArg {
    Coradical,
    Jadic,
}

#[derive(Clone, Copy, ValueEnum)]
enum GrArg {
    C,
    J,
}

#[derive(Subcommand)]
enum Command {
    /// Load an algebra and check every Hopf axiom exhaustively.
    Validate { input: PathBuf },
    /// Indicator values on a window, with minimal polynomial, period and
    /// pertinence verdict. Default window is [-2p^2, 2p^2].
    Indicators {
        input: PathBuf,
        #[arg(long, allow_negative_numbers = true)]
        from: Option<i64>,
        #[arg(long, allow_negative_numbers = true)]
        to: Option<i64>,
        #[arg(long)]
        json: bool,
    },
    /// Coradical or radical-adic filtration dimensions.
    Filtration {
        input: PathBuf,
        #[arg(long, value_enum)]
        kind: FiltrationArg,
    },
    /// Associated graded Hopf algebra, emitted as a re-ingestible
    /// algebra document with a degrees side-array.
    Gr {
        input: PathBuf,
        #[arg(long, value_enum)]
        kind: GrArg,
    },
    /// Jacobson radical of the underlying algebra.
    Radical { input: PathBuf },
    /// Dual Hopf algebra as an algebra document.
    Dual { input: PathBuf },
    /// Tensor product of two algebras as an algebra document.
    Tensor { left: PathBuf, right: PathBuf },
    /// Opposite algebra as an algebra document.
    Op { input: PathBuf },
    /// Opposite coalgebra as an algebra document.
    Cop { input: PathBuf },
    /// Chevalley-type predicates and the dimension check.
    Check {
        input: PathBuf,
        #[arg(long)]
        json: bool,
    },
    /// Brute-force oracles, for debugging and cross-validation.
    Oracle {
        #[command(subcommand)]
        what: OracleCommand,
    },
}

#[derive(Subcommand)]
enum OracleCommand {
    /// Radical by enumerating all p^dim elements.
    Radical { input: PathBuf },
    /// All grouplike elements and the group they form.
    Grouplikes { input: PathBuf },
    /// #{g in G : g^n = 1} mod p from a Cayley-table JSON.
    GroupCount {
        cayley: PathBuf,
        #[arg(long)]
        p: u64,
        #[arg(long, allow_negative_numbers = true)]
        n: i64,
    },
    /// Sweedler power of a basis vector by literal expansion.
    Sweedler {
        input: PathBuf,
        #[arg(long, allow_negative_numbers = true)]
        m: i64,
        #[arg(long, default_value_t = 0)]
        basis: usize,
    },
}

fn main() -> ExitCode {
    let cli = Cli::parse();
    match run(cli.command) {
        Ok(code) => code,
        Err(e) => {
            eprintln!("error: {e}");
            let code = match e {
                Error::Io(_) | Error::Json(_) | Error::Document(_) => 2,
                _ => 1,
            };
            ExitCode::from(code)
        }
    }
}

fn load(path: &Path) -> Result<HopfAlgebra, Error> {
    doc::load_input(path)?.build()
}

fn print_algebra(h: &HopfAlgebra, degrees: Option<Vec<usize>>) -> Result<(), Error> {
    let out = AlgebraDoc::from_algebra_with_degrees(h, degrees);
    print!("{}", doc::to_json_string(&out)?);
    Ok(())
}

#[derive(Serialize)]
struct FiltrationReport {
    kind: String,
    dims: Vec<usize>,
}

#[derive(Serialize)]
struct RadicalReport {
    dim: usize,
    basis: Vec<Vec<u64>>,
}

#[derive(Serialize)]
struct CheckReport {
    p: u64,
    dim: usize,
    connected: bool,
    local: bool,
    dual_chevalley: bool,
    chevalley: bool,
    local_dual_chevalley: bool,
    connected_chevalley: bool,
    dim_is_power_of_p: bool,
}

fn run(cmd: Command) -> Result<ExitCode, Error> {
    match cmd {
        Command::Validate { input } => {
            let parsed = doc::load_input(&input)?;
            let h = parsed.build()?;
            let report = h.validate();
            if report.is_valid() {
                println!("valid: dim {} over GF({})", h.dim(), h.field().modulus());
                Ok(ExitCode::SUCCESS)
            } else {
                for failure in &report.failures {
                    println!("FAILED: {failure}");
                }
                Ok(ExitCode::from(1))
            }
        }
        Command::Indicators {
            input,
            from,
            to,
            json,
        } => {
            let h = load(&input)?;
            let p = h.field().modulus();
            let (dlo, dhi) = indicator::default_window(p);
            let lo = from.unwrap_or(dlo);
            let hi = to.unwrap_or(dhi);
            if lo > hi {
                return Err(Error::Document(format!("empty window [{lo}, {hi}]")));
            }
            let name = input.display().to_string();
            let report = indicator::indicator_report(&h, &name, lo, hi)?;
            if json {
                print!("{}", doc::to_json_string(&report)?);
            } else {
                println!("indicators of {name} over GF({p}):");
                for (i, v) in report.values.iter().enumerate() {
                    println!("  nu_{} = {v}", lo + i as i64);
                }
                let mp = poly::Poly::new(h.field(), report.min_poly.clone());
                println!("minimal polynomial: {mp}");
                println!("period: {}", report.period);
                println!(
                    "p-pertinent: {}",
                    if report.p_pertinent { "yes" } else { "no" }
                );
            }
            Ok(ExitCode::SUCCESS)
        }
        Command::Filtration { input, kind } => {
            let h = load(&input)?;
            let filt = match kind {
                FiltrationArg::Coradical => filtration::coradical_filtration(&h)?,
                FiltrationArg::Jadic => filtration::jadic_filtration(&h)?,
            };
            let kind = match filt.kind {
                FiltrationKind::Coradical => "coradical",
                FiltrationKind::Jadic => "jadic",
            };
            let report = FiltrationReport {
                kind: kind.into(),
                dims: filt.dims(),
            };
            print!("{}", doc::to_json_string(&report)?);
            Ok(ExitCode::SUCCESS)
        }
        Command::Gr { input, kind } => {
            let h = load(&input)?;
            let graded = match kind {
                GrArg::C => filtration::graded_from_coradical(&h)?,
                GrArg::J => filtration::graded_from_jadic(&h)?,
            };
            print_algebra(&graded.base, Some(graded.degrees.clone()))?;
            Ok(ExitCode::SUCCESS)
        }
        Command::Radical { input } => {
            let h = load(&input)?;
            let j = filtration::jacobson_radical(&h)?;
            let report = RadicalReport {
                dim: j.dim(),
                basis: j.basis_rows().map(|r| r.to_vec()).collect(),
            };
            print!("{}", doc::to_json_string(&report)?);
            Ok(ExitCode::SUCCESS)
        }
        Command::Dual { input } => {
            let h = load(&input)?;
            print_algebra(&h.dual(), None)?;
            Ok(ExitCode::SUCCESS)
        }
        Command::Tensor { left, right } => {
            let a = load(&left)?;
            let b = load(&right)?;
            print_algebra(&a.tensor(&b)?, None)?;
            Ok(ExitCode::SUCCESS)
        }
        Command::Op { input } => {
            let h = load(&input)?;
            print_algebra(&h.opposite()?, None)?;
            Ok(ExitCode::SUCCESS)
        }
        Command::Cop { input } => {
            let h = load(&input)?;
            print_algebra(&h.co_opposite()?, None)?;
            Ok(ExitCode::SUCCESS)
        }
        Command::Check { input, json } => {
            let h = load(&input)?;
            let p = h.field().modulus();
            let dim = h.dim();
            let mut d = dim as u64;
            while d > 1 && d.is_multiple_of(p) {
                d /= p;
            }
            let report = CheckReport {
                p,
                dim,
                connected: filtration::is_connected(&h)?,
                local: filtration::is_local(&h)?,
                dual_chevalley: filtration::has_dual_chevalley(&h)?,
                chevalley: filtration::has_chevalley(&h)?,
                local_dual_chevalley: filtration::has_local_dual_chevalley(&h)?,
                connected_chevalley: filtration::has_connected_chevalley(&h)?,
                dim_is_power_of_p: d == 1,
            };
            if json {
                print!("{}", doc::to_json_string(&report)?);
            } else {
                println!("p: {p}");
                println!("dim: {dim} (power of p: {})", report.dim_is_power_of_p);
                println!("connected: {}", report.connected);
                println!("local: {}", report.local);
                println!("dual Chevalley: {}", report.dual_chevalley);
                println!("Chevalley: {}", report.chevalley);
                println!("local dual Chevalley: {}", report.local_dual_chevalley);
                println!("connected Chevalley: {}", report.connected_chevalley);
            }
            Ok(ExitCode::SUCCESS)
        }
        Command::Oracle { what } => run_oracle(what),
    }
}

fn run_oracle(cmd: OracleCommand) -> Result<ExitCode, Error> {
    match cmd {
        OracleCommand::Radical { input } => {
            let h = load(&input)?;
            let j = oracle::radical_enumeration(&h)?;
            let report = RadicalReport {
                dim: j.dim(),
                basis: j.basis_rows().map(|r| r.to_vec()).collect(),
            };
            print!("{}", doc::to_json_string(&report)?);
            Ok(ExitCode::SUCCESS)
        }
        OracleCommand::Grouplikes { input } => {
            let h = load(&input)?;
            let (grouplikes, table) = oracle::grouplike_enumeration(&h)?;
            #[derive(Serialize)]
            struct GrouplikeReport {
                count: usize,
                grouplikes: Vec<Vec<u64>>,
                table: Vec<Vec<usize>>,
            }
            let report = GrouplikeReport {
                count: grouplikes.len(),
                grouplikes,
                table: table.table().to_vec(),
            };
            print!("{}", doc::to_json_string(&report)?);
            Ok(ExitCode::SUCCESS)
        }
        OracleCommand::GroupCount { cayley, p, n } => {
            let text = std::fs::read_to_string(&cayley)?;
            let doc: doc::CayleyDoc = serde_json::from_str(&text)?;
            let table = doc.build()?;
            println!("{}", oracle::group_indicator_count(&table, n, p));
            Ok(ExitCode::SUCCESS)
        }
        OracleCommand::Sweedler { input, m, basis } => {
            let h = load(&input)?;
            if basis >= h.dim() {
                return Err(Error::Document(format!("basis index {basis} out of range")));
            }
            let v = oracle::sweedler_bruteforce(&h, &h.basis_vector(basis), m)?;
            println!("{}", serde_json::to_string(&v)?);
            Ok(ExitCode::SUCCESS)
        }
    }
}
