//! Command-line front end: build groups, print character tables, inspect
//! spectracone facets and memberships, compute volumes, emit plot data,
//! probe candidate matrices, and run the built-in verification suite.
//!
//! Exit codes: 0 success (or member), 1 semantic negative (non-member or
//! failed check), 2 input error, 3 numerical failure, 4 unsupported.

use clap::{Args, Parser, Subcommand};
use spectracone::chartab::{
    burnside_table_seeded, dephased_f4_theta, dft_table, walsh_table, CharacterTable,
};
use spectracone::extremal::conjecture_probe;
use spectracone::geometry::{emit_plot_data, plot_data, spectratope_volume};
use spectracone::group::{load_group_file, FiniteGroup, Permutation};
use spectracone::linalg::CMat;
use spectracone::perron::{parse_spectrum, reduced_inequalities, Similarity};
use spectracone::verify::{self, VerifyConfig};
use spectracone::{fmt_complex, fmt_f64, Error, DEFAULT_SEED, EPS};
use std::path::PathBuf;
use std::process::ExitCode;

#[derive(Parser)]
#[command(name = "spectracone", version, about = "Character tables and their cones of realizable spectra")]
struct Cli {
    #[command(subcommand)]
    command: Command,
}

#[derive(Subcommand)]
enum Command {
    /// Print the character table of a group (or a direct table construction)
    Chartab {
        #[command(flatten)]
        source: SourceArgs,
        #[command(flatten)]
        common: CommonArgs,
    },
    /// Print the reduced facet system, or test a spectrum for membership
    Cone {
        #[command(flatten)]
        source: SourceArgs,
        #[command(flatten)]
        common: CommonArgs,
        /// Candidate spectrum as comma-separated complex literals
        #[arg(long, value_name = "VEC", allow_hyphen_values = true)]
        x: Option<String>,
    },
    /// Volume of the projected spectratope of a real character table
    Volume {
        #[command(flatten)]
        source: SourceArgs,
        #[command(flatten)]
        common: CommonArgs,
    },
    /// Emit projected spectratope and feasible-region vertices for plotting
    Plot {
        #[command(flatten)]
        source: SourceArgs,
        #[command(flatten)]
        common: CommonArgs,
        /// Output file (stdout when omitted)
        #[arg(short, long, value_name = "PATH")]
        output: Option<PathBuf>,
    },
    /// Check a matrix against the normalized/ideal/totally-extremal profile
    Probe {
        #[command(flatten)]
        source: SourceArgs,
        #[command(flatten)]
        common: CommonArgs,
    },
    /// Run the built-in golden verification suite
    Verify {
        #[command(flatten)]
        common: CommonArgs,
        /// Restrict to checks whose name starts with this prefix
        #[arg(long, value_name = "SECTION")]
        only: Option<String>,
    },
}

#[derive(Args)]
struct SourceArgs {
    /// Cyclic factor; repeat for direct products (e.g. --cyclic 2 --cyclic 2)
    #[arg(long = "cyclic", value_name = "N")]
    cyclic: Vec<usize>,
    /// Permutation generators in cycle notation, comma-separated
    #[arg(long, value_name = "PERMS")]
    generators: Option<String>,
    /// Group definition file with one of cyclic_factors, generators, cayley
    #[arg(long, value_name = "PATH")]
    file: Option<PathBuf>,
    /// Fourier character table of the cyclic group of order N
    #[arg(long, value_name = "N")]
    dft: Option<usize>,
    /// Walsh character table of size M (a power of two)
    #[arg(long, value_name = "M")]
    walsh: Option<usize>,
    /// Twisted dephased 4x4 complex Hadamard matrix at angle THETA in [0, pi)
    #[arg(long = "f4theta", value_name = "THETA", allow_hyphen_values = true)]
    f4_theta: Option<f64>,
}

#[derive(Args)]
struct CommonArgs {
    /// Comparison tolerance (falls back to SPECTRACONE_TOLERANCE, then 1e-9)
    #[arg(long, value_name = "TOL")]
    tolerance: Option<f64>,
    /// Seed for randomized internals
    #[arg(long, value_name = "SEED", value_parser = parse_seed)]
    seed: Option<u64>,
}

fn parse_seed(text: &str) -> Result<u64, String> {
    let parsed = if let Some(hex) = text.strip_prefix("0x").or_else(|| text.strip_prefix("0X")) {
        u64::from_str_radix(hex, 16)
    } else {
        text.parse()
    };
    parsed.map_err(|_| format!("invalid seed '{text}'"))
}

impl CommonArgs {
    fn tolerance(&self) -> Result<f64, Error> {
        if let Some(t) = self.tolerance {
            return check_tolerance(t);
        }
        if let Ok(text) = std::env::var("SPECTRACONE_TOLERANCE") {
            let t: f64 = text
                .parse()
                .map_err(|_| Error::InvalidSpec(format!("bad SPECTRACONE_TOLERANCE '{text}'")))?;
            return check_tolerance(t);
        }
        Ok(EPS)
    }

    fn seed(&self) -> u64 {
        self.seed.unwrap_or(DEFAULT_SEED)
    }
}

fn check_tolerance(t: f64) -> Result<f64, Error> {
    if t > 0.0 && t.is_finite() {
        Ok(t)
    } else {
        Err(Error::InvalidSpec(format!("tolerance must be positive, got {t}")))
    }
}

/// A resolved input: either a character table with class data or a plain
/// matrix (the twisted Hadamard family is generally not a table).
enum Source {
    Table(CharacterTable),
    Plain(CMat),
}

impl Source {
    fn entries(&self) -> &CMat {
        match self {
            Source::Table(q) => q.entries(),
            Source::Plain(m) => m,
        }
    }
}

fn resolve_source(args: &SourceArgs, seed: u64) -> Result<Source, Error> {
    let provided = [
        !args.cyclic.is_empty(),
        args.generators.is_some(),
        args.file.is_some(),
        args.dft.is_some(),
        args.walsh.is_some(),
        args.f4_theta.is_some(),
    ]
    .iter()
    .filter(|&&p| p)
    .count();
    if provided != 1 {
        return Err(Error::InvalidSpec(
            "exactly one of --cyclic, --generators, --file, --dft, --walsh, --f4theta is required"
                .into(),
        ));
    }
    if !args.cyclic.is_empty() {
        let mut g = FiniteGroup::cyclic(args.cyclic[0])?;
        for &n in &args.cyclic[1..] {
            g = g.direct_product(&FiniteGroup::cyclic(n)?)?;
        }
        return Ok(Source::Table(burnside_table_seeded(&g, seed)?));
    }
    if let Some(text) = &args.generators {
        let perms: Result<Vec<Permutation>, Error> =
            text.split(',').map(|s| Permutation::parse_cycles(s.trim())).collect();
        let g = FiniteGroup::from_generators(&perms?)?;
        return Ok(Source::Table(burnside_table_seeded(&g, seed)?));
    }
    if let Some(path) = &args.file {
        let g = load_group_file(path)?;
        return Ok(Source::Table(burnside_table_seeded(&g, seed)?));
    }
    if let Some(n) = args.dft {
        return Ok(Source::Table(dft_table(n)?));
    }
    if let Some(m) = args.walsh {
        return Ok(Source::Table(walsh_table(m)?));
    }
    let theta = args.f4_theta.expect("one source must be set");
    Ok(Source::Plain(dephased_f4_theta(theta)?))
}

fn print_plain_matrix(m: &CMat) {
    for i in 0..m.nrows() {
        let row: Vec<String> = m.row(i).iter().map(|&z| fmt_complex(z)).collect();
        println!("{}", row.join(" "));
    }
}

fn run() -> Result<u8, Error> {
    let cli = Cli::parse();
    match cli.command {
        Command::Chartab { source, common } => {
            let tol = common.tolerance()?;
            match resolve_source(&source, common.seed())? {
                Source::Table(q) => {
                    q.validate(tol)?;
                    print!("{}", q.format_text());
                }
                Source::Plain(m) => print_plain_matrix(&m),
            }
            Ok(0)
        }
        Command::Cone { source, common, x } => {
            let tol = common.tolerance()?;
            let source = resolve_source(&source, common.seed())?;
            match x {
                None => match source {
                    Source::Table(q) => {
                        for line in reduced_inequalities(&q).inequality_strings() {
                            println!("{line}");
                        }
                        Ok(0)
                    }
                    Source::Plain(_) => Err(Error::Unsupported(
                        "facet listing needs a character table; pass --x to test membership"
                            .into(),
                    )),
                },
                Some(text) => {
                    let x = parse_spectrum(&text)?;
                    let verdict = match &source {
                        Source::Table(q) => {
                            if x.len() != q.n() {
                                return Err(Error::LengthMismatch {
                                    expected: q.n(),
                                    got: x.len(),
                                });
                            }
                            reduced_inequalities(q).membership(&x, tol)
                        }
                        Source::Plain(m) => {
                            let sim = Similarity::new(m.clone())?;
                            if x.len() != sim.dim() {
                                return Err(Error::LengthMismatch {
                                    expected: sim.dim(),
                                    got: x.len(),
                                });
                            }
                            sim.spectracone_membership(&x, tol)
                        }
                    };
                    println!("{verdict}");
                    Ok(if verdict.member { 0 } else { 1 })
                }
            }
        }
        Command::Volume { source, common } => {
            let source = resolve_source(&source, common.seed())?;
            let q = match source {
                Source::Table(q) => q,
                Source::Plain(m) => {
                    return Err(Error::RealTableRequired { max_imag: m.max_imag() })
                }
            };
            let report = spectratope_volume(&q)?;
            println!("volume: {}", fmt_f64(report.formula_value));
            println!("determinant_route: {}", fmt_f64(report.determinant_value));
            println!("occupancy: {}", fmt_f64(report.ratio_to_trace_polytope));
            Ok(0)
        }
        Command::Plot { source, common, output } => {
            let source = resolve_source(&source, common.seed())?;
            let q = match source {
                Source::Table(q) => q,
                Source::Plain(m) => {
                    return Err(Error::RealTableRequired { max_imag: m.max_imag() })
                }
            };
            match output {
                Some(path) => emit_plot_data(&q, &path)?,
                None => print!("{}", plot_data(&q)?),
            }
            Ok(0)
        }
        Command::Probe { source, common } => {
            let source = resolve_source(&source, common.seed())?;
            let report = conjecture_probe(source.entries())?;
            println!("{report}");
            Ok(0)
        }
        Command::Verify { common, only } => {
            let cfg = VerifyConfig { tolerance: common.tolerance()?, seed: common.seed(), only };
            let results = verify::run(&cfg);
            if results.is_empty() {
                return Err(Error::InvalidSpec("no checks match the --only filter".into()));
            }
            let mut all_passed = true;
            for r in &results {
                let status = if r.passed { "PASS" } else { "FAIL" };
                println!("{status} {}: {}", r.name, r.detail);
                all_passed &= r.passed;
            }
            let passed = results.iter().filter(|r| r.passed).count();
            println!("{passed}/{} checks passed", results.len());
            Ok(if all_passed { 0 } else { 1 })
        }
    }
}

fn main() -> ExitCode {
    // Die quietly on a closed pipe instead of panicking mid-print.
    #[cfg(unix)]
    unsafe {
        libc::signal(libc::SIGPIPE, libc::SIG_DFL);
    }
    match run() {
        Ok(code) => ExitCode::from(code),
        Err(e) => {
            eprintln!("error: {e}");
            ExitCode::from(e.exit_code() as u8)
        }
    }
}
