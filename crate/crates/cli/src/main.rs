use std::process::ExitCode;

use clap::{Args, Parser, Subcommand, ValueEnum};
use serde_json::json;
use tpi_core::evaluator::{determine_c_d_sign, j_delta, j_lambda_sequence};
use tpi_core::lattice::non_tpi_lattice;
use tpi_core::oracle::{certify, CertifyOptions, DEFAULT_PRIME};
use tpi_core::render::{factored_row, rect_table, Basis, JLambdaView};
use tpi_core::tpi::{is_tpi_sequence, rect_tpi_table};
use tpi_core::{Composition, Error, Limits};

#[derive(Parser)]
#[command(name = "tpi", version, about = "Decide, compute and verify alternating tensor polynomial identities")]
struct Cli {
    #[command(flatten)]
    global: Global,
    #[command(subcommand)]
    command: Command,
}

#[derive(Args)]
struct Global {
    #[arg(long, value_enum, default_value_t = Format::Text, global = true)]
    format: Format,
    /// Prime modulus for numerical checks.
    #[arg(long, env = "TPI_PRIME", default_value_t = DEFAULT_PRIME, global = true)]
    prime: u64,
    /// Worker threads; defaults to the number of CPUs.
    #[arg(long, global = true)]
    threads: Option<usize>,
    /// Raise the cap on matrix variables enumerated by the oracle.
    #[arg(long, global = true, requires = "accept_long_runs")]
    budget: Option<usize>,
    /// Raise the cap on the degree of densely expanded group-algebra elements.
    #[arg(long, global = true, requires = "accept_long_runs")]
    degree_budget: Option<usize>,
    /// Acknowledge that raised budgets may run for hours or exhaust memory.
    #[arg(long, global = true)]
    accept_long_runs: bool,
    /// Evaluate the d = 4 top wedge (16 variables) to fix the sign of C_4.
    #[arg(long, global = true)]
    experimental_wedge: bool,
}

#[derive(Clone, Copy, PartialEq, Eq, ValueEnum)]
enum Format {
    Text,
    Json,
    Dot,
}

#[derive(Subcommand)]
enum Command {
    /// Is ST(λ) a tensor polynomial identity on d×d matrices? Exit 0 if so, 1 if not.
    Decide {
        /// Parts such as 5,3,1 or 2^4; zeros and any order are allowed.
        #[arg(long)]
        lambda: String,
        #[arg(long)]
        d: usize,
    },
    /// Render one of the tables.
    #[command(subcommand)]
    Table(Table),
    /// Hasse diagram of the non-TPI partitions under padded refinement.
    Hasse {
        #[arg(long)]
        d: usize,
        #[arg(long, default_value_t = 1)]
        min_part: usize,
        #[arg(long)]
        kmax: usize,
    },
    /// Check ST(λ) numerically against the theory; exit 1 on a failed certificate.
    Verify {
        #[arg(long)]
        lambda: String,
        #[arg(long)]
        d: usize,
        #[arg(long, default_value_t = 20)]
        trials: usize,
        #[arg(long, default_value_t = 0)]
        seed: u64,
        /// Extra evaluations over the integers (vanishing checks only).
        #[arg(long, default_value_t = 0)]
        exact_checks: usize,
        /// Include wall-clock time in the report.
        #[arg(long)]
        timing: bool,
    },
}

#[derive(Subcommand)]
enum Table {
    /// Minimal rectangular TPIs m^n for d = 2..=dmax.
    Rect {
        #[arg(long)]
        dmax: usize,
    },
    /// J_d = |C_d|·Wg(d, d) in the ω or class-sum basis.
    Jdelta {
        #[arg(long)]
        d: usize,
        #[arg(long, value_enum, default_value_t = BasisArg::Omega)]
        basis: BasisArg,
    },
    /// Φ(J_λ/C_d) and J_λ in the permutation basis.
    Jlambda {
        #[arg(long)]
        lambda: String,
        #[arg(long)]
        d: usize,
    },
}

#[derive(Clone, Copy, ValueEnum)]
enum BasisArg {
    Omega,
    Class,
}

enum Failure {
    Usage(String),
    Core(Error),
}

impl From<Error> for Failure {
    fn from(e: Error) -> Self {
        Failure::Core(e)
    }
}

type Outcome = Result<(String, ExitCode), Failure>;

fn main() -> ExitCode {
    let cli = Cli::parse();
    if let Some(n) = cli.global.threads {
        if let Err(e) = rayon::ThreadPoolBuilder::new().num_threads(n).build_global() {
            eprintln!("error: cannot configure {n} threads: {e}");
            return ExitCode::from(2);
        }
    }
    match run(&cli) {
        Ok((out, code)) => {
            print!("{out}");
            code
        }
        Err(Failure::Usage(msg)) => {
            eprintln!("error: {msg}");
            ExitCode::from(2)
        }
        Err(Failure::Core(e)) => {
            eprintln!("error: {e}");
            ExitCode::from(2)
        }
    }
}

fn limits(g: &Global) -> Limits {
    let mut limits = Limits::default();
    if let Some(v) = g.budget {
        limits.max_variables = v;
    }
    if let Some(n) = g.degree_budget {
        limits.max_degree = n;
    }
    limits.experimental_wedge = g.experimental_wedge;
    limits
}

fn parse_composition(text: &str) -> Result<Composition, Failure> {
    Ok(text.parse::<Composition>()?)
}

fn pretty(value: &impl serde::Serialize) -> String {
    let mut s = serde_json::to_string_pretty(value).expect("serializable");
    s.push('\n');
    s
}

fn reject_dot(g: &Global) -> Result<(), Failure> {
    if g.format == Format::Dot {
        return Err(Failure::Usage("--format dot is only available for `hasse`".into()));
    }
    Ok(())
}

/// `Some(±1)` when the sign of `C_d` is computable within the limits.
fn c_d_sign(d: usize, limits: &Limits) -> Result<Option<i32>, Failure> {
    match determine_c_d_sign(d, limits) {
        Ok(s) => Ok(Some(s)),
        Err(Error::SignUndetermined(_)) => Ok(None),
        Err(e) => Err(e.into()),
    }
}

fn run(cli: &Cli) -> Outcome {
    let g = &cli.global;
    let limits = limits(g);
    match &cli.command {
        Command::Decide { lambda, d } => {
            reject_dot(g)?;
            let verdict = is_tpi_sequence(&parse_composition(lambda)?, *d)?;
            let code = if verdict.is_tpi { ExitCode::SUCCESS } else { ExitCode::from(1) };
            let out = match g.format {
                Format::Json => pretty(&verdict),
                _ => format!("{verdict}\n"),
            };
            Ok((out, code))
        }
        Command::Table(Table::Rect { dmax }) => {
            reject_dot(g)?;
            let rows = rect_tpi_table(*dmax)?;
            let out = match g.format {
                Format::Json => pretty(&rows),
                _ => rect_table(&rows),
            };
            Ok((out, ExitCode::SUCCESS))
        }
        Command::Table(Table::Jdelta { d, basis }) => {
            reject_dot(g)?;
            let central = j_delta(*d, &limits)?.central.expect("J_d is central");
            let basis = match basis {
                BasisArg::Omega => Basis::Omega,
                BasisArg::Class => Basis::Class,
            };
            let row = factored_row(&central, *d, basis);
            let sign = c_d_sign(*d, &limits)?;
            let out = match g.format {
                Format::Json => pretty(&json!({ "row": row, "c_d_sign": sign })),
                _ => {
                    let note = match sign {
                        Some(s) => format!("sign(C_{d}) = {s:+}"),
                        None => format!("sign(C_{d}) undetermined"),
                    };
                    format!("|C_{d}|·Wg({d},{d}) = {row}\n{note}\n")
                }
            };
            Ok((out, ExitCode::SUCCESS))
        }
        Command::Table(Table::Jlambda { lambda, d }) => {
            reject_dot(g)?;
            let a = parse_composition(lambda)?;
            let value = j_lambda_sequence(&a, *d, &limits)?;
            let view = JLambdaView::new(&value, c_d_sign(*d, &limits)?);
            let out = match g.format {
                Format::Json => pretty(&view),
                _ => view.to_string(),
            };
            Ok((out, ExitCode::SUCCESS))
        }
        Command::Hasse { d, min_part, kmax } => {
            let diagram = non_tpi_lattice(*d, *min_part, *kmax)?;
            let out = match g.format {
                Format::Dot => diagram.to_dot(),
                Format::Json => pretty(&diagram),
                Format::Text => {
                    let mut s = format!("{} nodes, {} edges\n", diagram.nodes.len(), diagram.edges.len());
                    for (a, b) in diagram.edge_labels() {
                        s.push_str(&format!("{a} > {b}\n"));
                    }
                    s
                }
            };
            Ok((out, ExitCode::SUCCESS))
        }
        Command::Verify { lambda, d, trials, seed, exact_checks, timing } => {
            reject_dot(g)?;
            let a = parse_composition(lambda)?;
            let options =
                CertifyOptions { trials: *trials, seed: *seed, prime: g.prime, exact_checks: *exact_checks, limits };
            let mut report = certify(&a, *d, &options)?;
            if !timing {
                report.elapsed_ms = None;
            }
            let code = if report.passed() { ExitCode::SUCCESS } else { ExitCode::from(1) };
            let out = match g.format {
                Format::Json => pretty(&report),
                _ => {
                    let status = if report.passed() { "CERTIFIED" } else { "FAILED" };
                    let mut s = format!(
                        "{status}: {} on {d}x{d} matrices, {} check, {} random + {} structured tuples, p = {}, seed = {}, max residue {}\n",
                        report.input, report.check, report.trials, report.structured_tuples, report.p, report.seed, report.max_residue
                    );
                    if let Some(f) = &report.failure {
                        s.push_str(&format!("failure: {f}\n"));
                    }
                    s
                }
            };
            Ok((out, code))
        }
    }
}
