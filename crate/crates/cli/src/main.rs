//! `tropcirc`: command-line front end. Every command prints JSON.
//!
//! Exit codes: 0 success, 1 a checked property failed, 2 usage or input
//! error, 3 resource cap exceeded.

use std::fs;
use std::io::{self, Write};
use std::path::{Path, PathBuf};
use std::process::ExitCode;

use clap::{Args, Parser, Subcommand, ValueEnum};
use rayon::prelude::*;
use serde_json::{json, Value};

use tropcirc::bridge::{
    beta_max, verify_bjs, verify_stanley_dominance, verify_theorem_main, w_from_skew,
};
use tropcirc::circuits::{
    build_schur_circuit, build_skew_circuit, build_stanley_circuit, Circuit, DEFAULT_TERM_CAP,
};
use tropcirc::combinatorics::{Partition, Permutation, SkewShape};
use tropcirc::newton::{
    hull_lattice_points_capped, minkowski_points, permutahedron_points, snp_check, support,
    LatticePointSet, RationalPoint, DEFAULT_BOX_CAP,
};
use tropcirc::sympoly::{
    elementary, schur, schur_expand, skew_schur, stanley_poly, ExactPolynomial,
};
use tropcirc::tropical::{trop_equal, tropicalize, Mode, TropicalPolynomial};
use tropcirc::Error;

#[derive(Parser)]
#[command(
    name = "tropcirc",
    version,
    about = "Tropical circuits for Schur-type polynomials"
)]
struct Cli {
    /// Indent JSON output
    #[arg(long, global = true)]
    pretty: bool,
    /// Worker threads for sweeps (output order does not depend on it)
    #[arg(long, global = true, default_value_t = 1)]
    jobs: usize,
    #[command(subcommand)]
    command: Command,
}

#[derive(Subcommand)]
enum Command {
    /// Skew-Schur polynomial s_{λ/μ}(x_1..x_n)
    SkewSchur {
        #[arg(long)]
        lambda: Partition,
        #[arg(long, default_value = "")]
        mu: Partition,
        #[arg(long)]
        vars: usize,
    },
    /// Schur expansion of a symmetric polynomial read from JSON
    SchurExpand {
        #[arg(long = "in")]
        input: PathBuf,
    },
    /// Stanley symmetric polynomial F_w(x_1..x_n)
    Stanley {
        #[arg(long)]
        perm: Permutation,
        #[arg(long)]
        vars: usize,
    },
    /// β_max(w)
    BetaMax {
        #[arg(long)]
        perm: Permutation,
    },
    /// The permutation w_{λ/μ}
    SkewToPerm {
        #[arg(long)]
        lambda: Partition,
        #[arg(long, default_value = "")]
        mu: Partition,
    },
    /// Compare two tropical polynomials
    TropEqual {
        #[arg(long)]
        lhs: PathBuf,
        #[arg(long)]
        rhs: PathBuf,
        #[arg(long, value_enum)]
        mode: ModeArg,
        /// Read integer polynomials and tropicalize them first
        #[arg(long)]
        classical: bool,
    },
    #[command(subcommand)]
    Circuit(CircuitCommand),
    #[command(subcommand)]
    Verify(VerifyCommand),
}

#[derive(Clone, Copy, ValueEnum)]
enum ModeArg {
    Axiomatic,
    Functional,
}

impl From<ModeArg> for Mode {
    fn from(m: ModeArg) -> Mode {
        match m {
            ModeArg::Axiomatic => Mode::Axiomatic,
            ModeArg::Functional => Mode::Functional,
        }
    }
}

#[derive(Clone, Copy, ValueEnum)]
enum Kind {
    Schur,
    Skew,
    Stanley,
}

#[derive(Subcommand)]
enum CircuitCommand {
    /// Build a circuit and write it as JSON
    Build {
        #[arg(long, value_enum)]
        kind: Kind,
        #[arg(long)]
        lambda: Option<Partition>,
        #[arg(long)]
        mu: Option<Partition>,
        #[arg(long)]
        perm: Option<Permutation>,
        #[arg(long)]
        vars: usize,
        #[arg(long)]
        out: PathBuf,
    },
    /// Evaluate at a rational point such as "1/2,3"
    Eval {
        #[arg(long)]
        circuit: PathBuf,
        #[arg(long, allow_hyphen_values = true)]
        point: RationalPoint,
    },
    /// Gate counts
    Stats {
        #[arg(long)]
        circuit: PathBuf,
    },
    /// Symbolic expansion (bounded by TROPCIRC_TERM_CAP)
    Expand {
        #[arg(long)]
        circuit: PathBuf,
        #[arg(long, value_enum, default_value = "axiomatic")]
        mode: ModeArg,
    },
}

#[derive(Args)]
struct Sweep {
    /// Outer shapes range over all partitions inside this one
    #[arg(long)]
    max_lambda: Partition,
    #[arg(long)]
    vars: usize,
}

#[derive(Subcommand)]
enum VerifyCommand {
    /// Trop(s_{λ/μ}) = Trop(s_β) for every λ/μ under --max-lambda
    Theorem13(Sweep),
    /// Schur expansion of F_w for every w in S_m is dominated by s_{β_max(w)}
    StanleyDominance {
        #[arg(long)]
        symmetric_group: usize,
        #[arg(long, default_value_t = 1)]
        vars: usize,
    },
    /// Newton(s_λ) equals the permutahedron P_λ and s_λ is saturated
    Rado {
        #[arg(long)]
        lambda: Partition,
        #[arg(long)]
        vars: usize,
    },
    /// P_λ is the Minkowski sum of the e_{λ'_k} supports
    Minkowski {
        #[arg(long)]
        lambda: Partition,
        #[arg(long)]
        vars: usize,
    },
    /// F_{w_{λ/μ}} = s_{λ/μ} for every λ/μ under --max-lambda
    Bjs(Sweep),
}

enum Failure {
    Usage(String),
    Cap(String),
}

impl From<Error> for Failure {
    fn from(e: Error) -> Self {
        match e {
            Error::ResourceCap(_) => Failure::Cap(e.to_string()),
            _ => Failure::Usage(e.to_string()),
        }
    }
}

type Outcome = Result<bool, Failure>;

struct Out {
    pretty: bool,
}

impl Out {
    fn render(&self, v: &Value) -> String {
        // serde_json maps keep keys sorted
        if self.pretty {
            serde_json::to_string_pretty(v).unwrap()
        } else {
            serde_json::to_string(v).unwrap()
        }
    }

    fn emit(&self, v: Value) {
        let mut stdout = io::stdout().lock();
        let _ = writeln!(stdout, "{}", self.render(&v));
    }
}

fn to_value(x: &impl serde::Serialize) -> Value {
    serde_json::to_value(x).expect("serializable")
}

fn read_json<T: serde::de::DeserializeOwned>(path: &Path) -> Result<T, Failure> {
    let text =
        fs::read_to_string(path).map_err(|e| Failure::Usage(format!("{}: {e}", path.display())))?;
    serde_json::from_str(&text).map_err(|e| Failure::Usage(format!("{}: {e}", path.display())))
}

fn term_cap() -> Result<usize, Failure> {
    match std::env::var("TROPCIRC_TERM_CAP") {
        Ok(v) => v
            .trim()
            .parse()
            .map_err(|_| Failure::Usage(format!("TROPCIRC_TERM_CAP: not a count: {v:?}"))),
        Err(_) => Ok(DEFAULT_TERM_CAP),
    }
}

fn shape(lambda: Partition, mu: Partition) -> Result<SkewShape, Failure> {
    Ok(SkewShape::new(lambda, mu)?)
}

fn sweep_shapes(max: &Partition) -> Vec<SkewShape> {
    Partition::all_contained_in(max)
        .into_iter()
        .flat_map(|outer| {
            Partition::all_contained_in(&outer)
                .into_iter()
                .map(move |inner| SkewShape::new(outer.clone(), inner).unwrap())
        })
        .collect()
}

/// Runs `check` over `items` on `jobs` threads and prints one line per item
/// in input order, one compact JSON object per line regardless of
/// `--pretty`. Returns whether every item held.
fn stream<T: Sync>(
    jobs: usize,
    items: &[T],
    check: impl Fn(&T) -> Result<(bool, Value), Failure> + Sync,
) -> Outcome {
    let pool = rayon::ThreadPoolBuilder::new()
        .num_threads(jobs.max(1))
        .build()
        .map_err(|e| Failure::Usage(e.to_string()))?;
    let mut all = true;
    let chunk = 64 * jobs.max(1);
    for batch in items.chunks(chunk) {
        let results: Vec<_> = pool.install(|| batch.par_iter().map(&check).collect());
        let mut stdout = io::stdout().lock();
        for r in results {
            let (ok, v) = r?;
            all &= ok;
            let _ = writeln!(stdout, "{}", serde_json::to_string(&v).unwrap());
        }
    }
    Ok(all)
}

fn run(cli: Cli) -> Outcome {
    let out = Out { pretty: cli.pretty };
    match cli.command {
        Command::SkewSchur { lambda, mu, vars } => {
            out.emit(to_value(&skew_schur(&shape(lambda, mu)?, vars)));
        }
        Command::SchurExpand { input } => {
            let f: ExactPolynomial = read_json(&input)?;
            out.emit(to_value(&schur_expand(&f)?));
        }
        Command::Stanley { perm, vars } => out.emit(to_value(&stanley_poly(&perm, vars))),
        Command::BetaMax { perm } => out.emit(json!(beta_max(&perm).to_string())),
        Command::SkewToPerm { lambda, mu } => {
            out.emit(json!(w_from_skew(&shape(lambda, mu)?).to_string()));
        }
        Command::TropEqual {
            lhs,
            rhs,
            mode,
            classical,
        } => {
            let load = |p: &Path| -> Result<TropicalPolynomial, Failure> {
                if classical {
                    Ok(tropicalize(&read_json::<ExactPolynomial>(p)?)?)
                } else {
                    read_json(p)
                }
            };
            let (a, b) = (load(&lhs)?, load(&rhs)?);
            if a.nvars() != b.nvars() {
                return Err(Error::DimensionMismatch {
                    expected: a.nvars(),
                    got: b.nvars(),
                }
                .into());
            }
            let mode = Mode::from(mode);
            out.emit(json!({ "equal": trop_equal(&a, &b, mode), "mode": mode.to_string() }));
        }
        Command::Circuit(cmd) => return run_circuit(&out, cmd),
        Command::Verify(cmd) => return run_verify(&out, cli.jobs, cmd),
    }
    Ok(true)
}

fn run_circuit(out: &Out, cmd: CircuitCommand) -> Outcome {
    match cmd {
        CircuitCommand::Build {
            kind,
            lambda,
            mu,
            perm,
            vars,
            out: path,
        } => {
            let need_lambda = || {
                lambda
                    .clone()
                    .ok_or_else(|| Failure::Usage("--lambda is required".into()))
            };
            let c = match kind {
                Kind::Schur => build_schur_circuit(&need_lambda()?, vars)?,
                Kind::Skew => {
                    build_skew_circuit(&shape(need_lambda()?, mu.unwrap_or_default())?, vars)?
                }
                Kind::Stanley => {
                    let w = perm.ok_or_else(|| Failure::Usage("--perm is required".into()))?;
                    build_stanley_circuit(&w, vars)?
                }
            };
            fs::write(&path, out.render(&to_value(&c)) + "\n")
                .map_err(|e| Failure::Usage(format!("{}: {e}", path.display())))?;
            out.emit(to_value(&c.stats()));
        }
        CircuitCommand::Eval { circuit, point } => {
            let c: Circuit = read_json(&circuit)?;
            out.emit(json!(c.eval(&point)?.to_string()));
        }
        CircuitCommand::Stats { circuit } => {
            let c: Circuit = read_json(&circuit)?;
            out.emit(to_value(&c.stats()));
        }
        CircuitCommand::Expand { circuit, mode } => {
            let c: Circuit = read_json(&circuit)?;
            out.emit(to_value(&c.expand(mode.into(), term_cap()?)?));
        }
    }
    Ok(true)
}

fn run_verify(out: &Out, jobs: usize, cmd: VerifyCommand) -> Outcome {
    match cmd {
        VerifyCommand::Theorem13(Sweep { max_lambda, vars }) => {
            let shapes: Vec<_> = sweep_shapes(&max_lambda)
                .into_iter()
                .filter(|s| s.max_column_length() as usize <= vars)
                .collect();
            stream(jobs, &shapes, |s| {
                let r = verify_theorem_main(s, vars)?;
                Ok((r.holds(), to_value(&r)))
            })
        }
        VerifyCommand::Bjs(Sweep { max_lambda, vars }) => {
            let shapes = sweep_shapes(&max_lambda);
            stream(jobs, &shapes, |s| {
                let holds = verify_bjs(s, vars);
                Ok((
                    holds,
                    json!({ "holds": holds, "n": vars, "shape": s.to_string() }),
                ))
            })
        }
        VerifyCommand::StanleyDominance {
            symmetric_group,
            vars,
        } => {
            if symmetric_group == 0 {
                return Err(Failure::Usage("--symmetric-group must be positive".into()));
            }
            let perms = Permutation::all(symmetric_group);
            stream(jobs, &perms, |w| {
                let r = verify_stanley_dominance(w, vars);
                Ok((r.holds, to_value(&r)))
            })
        }
        VerifyCommand::Rado { lambda, vars } => {
            let f = schur(&lambda, vars);
            let perm = permutahedron_points(&lambda, vars)?;
            let hull = hull_lattice_points_capped(&support(&f), DEFAULT_BOX_CAP)?;
            let hull_ok = hull == perm;
            let snp = snp_check(&f)?;
            out.emit(json!({
                "holds": hull_ok && snp,
                "hull_equals_permutahedron": hull_ok,
                "lambda": lambda.to_string(),
                "lattice_points": perm.len(),
                "n": vars,
                "snp": snp,
            }));
            Ok(hull_ok && snp)
        }
        VerifyCommand::Minkowski { lambda, vars } => {
            let perm = permutahedron_points(&lambda, vars)?;
            let mut acc = LatticePointSet::from_points(vars, [vec![0; vars]])?;
            for &k in lambda.conjugate().parts() {
                acc = minkowski_points(&acc, &support(&elementary(k as usize, vars)))?;
            }
            let holds = acc == perm;
            out.emit(json!({
                "holds": holds,
                "lambda": lambda.to_string(),
                "lattice_points": perm.len(),
                "n": vars,
            }));
            Ok(holds)
        }
    }
}

fn main() -> ExitCode {
    let cli = Cli::parse();
    match run(cli) {
        Ok(true) => ExitCode::SUCCESS,
        Ok(false) => ExitCode::from(1),
        Err(f) => {
            let (code, msg) = match f {
                Failure::Usage(m) => (2, m),
                Failure::Cap(m) => (3, m),
            };
            eprintln!("{}", json!({ "error": msg }));
            ExitCode::from(code)
        }
    }
}
