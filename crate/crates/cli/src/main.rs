use std::fs;
use std::path::{Path, PathBuf};
use std::process::ExitCode;

use clap::{Args, Parser, Subcommand};

use codelat::construction::{coset_oracle, dual_lattice};
use codelat::fixtures::{run_row, RowOutcome, TABLE_ROWS};
use codelat::hilbert::{
    expected_level_generator, level_ideal, level_ideal_of_code, verify_theta_identity, KIdeal,
};
use codelat::theta::{root_system, short_vectors, theta_coefficients};
use codelat::{
    build_gamma_c, verify_main_theorem, Code, CodeLattice, CycField, Error, Family, LatticeDump, RingSpec,
    RootLatticeSpec,
};

#[derive(Parser)]
#[command(name = "codelat", version, about = "Lattices from codes over finite rings")]
struct Cli {
    #[command(subcommand)]
    command: Command,
}

#[derive(Subcommand)]
enum Command {
    /// Build Gamma_C and write its basis in f*-coordinates.
    Build {
        #[command(flatten)]
        spec: SpecArgs,
        #[arg(long)]
        code: PathBuf,
        /// Output file; stdout when absent.
        #[arg(long)]
        out: Option<PathBuf>,
    },
    /// Report integrality, evenness and unimodularity, and compare with the code conditions.
    Check {
        #[command(flatten)]
        spec: SpecArgs,
        #[command(flatten)]
        source: SourceArgs,
    },
    /// Print the root system of an even lattice.
    Identify {
        #[command(flatten)]
        spec: SpecArgs,
        #[command(flatten)]
        source: SourceArgs,
    },
    /// Check the pairing rules on every pair of discriminant-group classes.
    Oracle {
        #[command(flatten)]
        spec: SpecArgs,
        #[arg(long, default_value_t = 1)]
        m: usize,
    },
    /// Recompute the root systems of the registered rank-24 lattices.
    Tables,
    /// Print `norm count` for every norm up to the bound.
    Theta {
        #[command(flatten)]
        spec: SpecArgs,
        #[command(flatten)]
        source: SourceArgs,
        #[arg(long, default_value_t = 4)]
        bound: i64,
    },
    /// Theta series over the real subfield of Q(zeta8) or Q(zeta9).
    Hilbert {
        #[command(subcommand)]
        command: HilbertCommand,
    },
}

#[derive(Subcommand)]
enum HilbertCommand {
    /// Compare the theta series of Gamma_C with the weight-enumerator substitution.
    Verify {
        #[arg(long)]
        field: CycField,
        #[arg(long)]
        code: PathBuf,
        #[arg(long, default_value_t = 4)]
        trace_bound: i64,
    },
    /// Level ideal of Lambda, or of Gamma_C when a code is given.
    Level {
        #[arg(long)]
        field: CycField,
        #[arg(long)]
        code: Option<PathBuf>,
    },
}

#[derive(Args)]
struct SpecArgs {
    #[arg(long)]
    family: Family,
    #[arg(long)]
    n: usize,
    /// Ring for D_n with n even: F2u, F4 or F2xF2.
    #[arg(long)]
    ring: Option<RingSpec>,
}

impl SpecArgs {
    fn spec(&self) -> codelat::Result<RootLatticeSpec> {
        RootLatticeSpec::new(self.family, self.n, self.ring)
    }
}

#[derive(Args)]
struct SourceArgs {
    /// Code file; the lattice is Gamma_C.
    #[arg(long, conflicts_with_all = ["lattice", "m"])]
    code: Option<PathBuf>,
    /// Lattice dump written by `build`.
    #[arg(long, conflicts_with = "m")]
    lattice: Option<PathBuf>,
    /// Number of copies of the root lattice itself.
    #[arg(long)]
    m: Option<usize>,
}

enum Source {
    Code(Code),
    Lattice(LatticeDump),
    RootSum(usize),
}

impl SourceArgs {
    fn load(&self) -> Result<Source, Failure> {
        match (&self.code, &self.lattice, self.m) {
            (Some(p), None, None) => Ok(Source::Code(read_code(p)?)),
            (None, Some(p), None) => Ok(Source::Lattice(LatticeDump::parse(&read(p)?)?)),
            (None, None, Some(m)) => Ok(Source::RootSum(m)),
            _ => Err(Failure::Usage("give exactly one of --code, --lattice, --m".into())),
        }
    }

    fn lattice(&self, spec: &RootLatticeSpec) -> Result<(CodeLattice, Option<Code>), Failure> {
        Ok(match self.load()? {
            Source::Code(c) => (build_gamma_c(spec, &c)?, Some(c)),
            Source::Lattice(d) => (CodeLattice::from_dump(*spec, &d)?, None),
            Source::RootSum(m) => (CodeLattice::root_sum(*spec, m)?, None),
        })
    }
}

enum Failure {
    /// Exit 1: a check ran and did not pass.
    Mismatch,
    /// Exit 2: bad input or a library error.
    Usage(String),
}

impl From<Error> for Failure {
    fn from(e: Error) -> Self {
        Failure::Usage(e.to_string())
    }
}

fn read(p: &Path) -> Result<String, Failure> {
    fs::read_to_string(p).map_err(|e| Failure::Usage(format!("{}: {e}", p.display())))
}

fn read_code(p: &Path) -> Result<Code, Failure> {
    Code::parse(&read(p)?).map_err(|e| Failure::Usage(format!("{}: {e}", p.display())))
}

fn verdict(ok: bool) -> Result<(), Failure> {
    if ok {
        Ok(())
    } else {
        Err(Failure::Mismatch)
    }
}

fn run(cli: Cli) -> Result<(), Failure> {
    match cli.command {
        Command::Build { spec, code, out } => {
            let spec = spec.spec()?;
            let lat = build_gamma_c(&spec, &read_code(&code)?)?;
            let text = lat.dump().write();
            match out {
                Some(p) => fs::write(&p, text).map_err(|e| Failure::Usage(format!("{}: {e}", p.display())))?,
                None => print!("{text}"),
            }
            Ok(())
        }
        Command::Check { spec, source } => {
            let spec = spec.spec()?;
            let (lat, code) = source.lattice(&spec)?;
            println!("lattice {spec} copies {} rank {}", lat.copies(), lat.rank());
            println!("integral: {}", lat.is_integral());
            println!("even: {}", lat.is_even());
            println!("unimodular: {}", lat.is_unimodular());
            println!("even unimodular: {}", lat.is_even() && lat.is_unimodular());
            match code {
                Some(c) => {
                    let report = verify_main_theorem(&spec, &c)?;
                    print!("{report}");
                    println!("theorem: {}", if report.pass() { "agree" } else { "disagree" });
                    verdict(report.pass())
                }
                None => {
                    if lat.rank() == spec.rank() * lat.copies() {
                        let d = dual_lattice(&lat)?;
                        println!("self-dual: {}", d == lat);
                    }
                    Ok(())
                }
            }
        }
        Command::Identify { spec, source } => {
            let spec = spec.spec()?;
            let (lat, _) = source.lattice(&spec)?;
            if !lat.is_even() {
                return Err(Failure::Usage("identify needs an even lattice".into()));
            }
            println!("{}", root_system(&lat)?);
            Ok(())
        }
        Command::Oracle { spec, m } => {
            let spec = spec.spec()?;
            let r = coset_oracle(&spec, m)?;
            match &r.counterexample {
                None => {
                    println!("oracle {spec} m={m}: pass ({} pairs)", r.pairs_checked);
                    Ok(())
                }
                Some(c) => {
                    println!(
                        "oracle {spec} m={m}: counterexample for {} at x={:?} y={:?}: lattice {} code {}",
                        c.rule, c.x, c.y, c.lattice_side, c.code_side
                    );
                    Err(Failure::Mismatch)
                }
            }
        }
        Command::Tables => {
            let mut ok = true;
            for row in TABLE_ROWS {
                let status = match run_row(row)? {
                    RowOutcome::Match(l) => format!("{:<10} MATCH", l.to_string()),
                    RowOutcome::Mismatch { computed } => {
                        ok = false;
                        format!("{:<10} MISMATCH", computed.to_string())
                    }
                    RowOutcome::Skip(why) => format!("{:<10} SKIP ({why})", "-"),
                };
                println!("{:<10} {:<16} expected {:<10} computed {status}", row.group, row.code_name, row.expected);
            }
            verdict(ok)
        }
        Command::Theta { spec, source, bound } => {
            let spec = spec.spec()?;
            let (lat, _) = source.lattice(&spec)?;
            if lat.is_even() {
                for (norm, count) in theta_coefficients(lat.gram(), bound)? {
                    println!("{norm} {count}");
                }
            } else {
                for (norm, count) in short_vectors(lat.gram(), bound, false)?.counts {
                    println!("{norm} {count}");
                }
            }
            Ok(())
        }
        Command::Hilbert { command } => match command {
            HilbertCommand::Verify { field, code, trace_bound } => {
                let code = read_code(&code)?;
                let r = verify_theta_identity(field, &code, trace_bound)?;
                print!("{r}");
                verdict(r.holds())
            }
            HilbertCommand::Level { field, code } => {
                let got = match &code {
                    Some(p) => level_ideal_of_code(field, &read_code(p)?)?,
                    None => level_ideal(field)?,
                };
                println!("level ideal (basis 1, eta, ..): {got}");
                println!("norm: {}", got.norm());
                println!("unit ideal: {}", got.is_unit());
                if code.is_none() {
                    let g = expected_level_generator(field)?;
                    let want = KIdeal::principal(&g)?;
                    println!("closed-form generator {g}: {}", if want == got { "MATCH" } else { "MISMATCH" });
                    return verdict(want == got);
                }
                Ok(())
            }
        },
    }
}

fn main() -> ExitCode {
    let cli = Cli::parse();
    match run(cli) {
        Ok(()) => ExitCode::SUCCESS,
        Err(Failure::Mismatch) => ExitCode::from(1),
        Err(Failure::Usage(msg)) => {
            eprintln!("error: {msg}");
            ExitCode::from(2)
        }
    }
}
