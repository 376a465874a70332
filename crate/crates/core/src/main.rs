use std::fs::File;
use std::io::BufReader;
use std::path::PathBuf;
use std::process::ExitCode;

use clap::{Args, Parser, Subcommand};

use pseudoharmonic::checks::CheckOptions;
use pseudoharmonic::cli::{
    cmd_check, cmd_sweep, cmd_table, parse_q, parse_q_list, parse_u32_range, Format, MethodChoice,
    Output, SweepAxis, SweepSpec, TableSpec,
};
use pseudoharmonic::{
    builtin_molecules, load_molecules, Error, MeasureKind, Method, MoleculeParams, NormMode,
    QuadratureConfig, Result, Space,
};

#[derive(Parser)]
#[command(name = "pseudoharmonic", version, about = "Information measures of pseudoharmonic oscillator states")]
struct Cli {
    /// Extra molecule file (`name, d_e, r_e` per line); overrides built-ins by name
    #[arg(long, global = true)]
    molecules: Option<PathBuf>,

    /// Relative tolerance of the adaptive quadrature
    #[arg(long, global = true, default_value_t = 1e-10)]
    rel_tol: f64,

    /// Absolute tolerance of the adaptive quadrature
    #[arg(long, global = true, default_value_t = 1e-14)]
    abs_tol: f64,

    #[command(subcommand)]
    command: Command,
}

#[derive(Subcommand)]
enum Command {
    /// One row per (molecule, n, l)
    Table(TableArgs),
    /// One column per molecule, one row per l or q
    Sweep(SweepArgs),
    /// Run the invariant suite
    Check(CheckArgs),
    /// Print the molecule table in file format
    Molecules,
}

#[derive(Args)]
struct Common {
    /// fisher, shannon, renyi, tsallis, onicescu or wq
    #[arg(long)]
    measure: MeasureKind,
    /// position or momentum
    #[arg(long, default_value = "position")]
    space: Space,
    /// Molecule name; repeat for several (default: all)
    #[arg(long = "molecule")]
    molecule: Vec<String>,
    /// paper, normalized or printed
    #[arg(long, default_value = "paper")]
    mode: NormMode,
    /// csv or json
    #[arg(long, default_value = "csv")]
    format: Format,
    /// Print 17 significant digits instead of 6
    #[arg(long)]
    full_precision: bool,
}

#[derive(Args)]
struct TableArgs {
    #[command(flatten)]
    common: Common,
    /// Entropic order, e.g. 2 or 2/3
    #[arg(long, value_parser = parse_q)]
    q: Option<f64>,
    /// Radial quantum numbers: `a..b` or `a,b,c`
    #[arg(long, default_value = "0..10")]
    n: String,
    /// Orbital quantum numbers: `a..b` or `a,b,c`
    #[arg(long, default_value = "0")]
    l: String,
    /// analytic, quadrature or both
    #[arg(long, default_value = "analytic")]
    method: MethodChoice,
}

#[derive(Args)]
struct SweepArgs {
    #[command(flatten)]
    common: Common,
    #[arg(long, default_value_t = 0)]
    n: u32,
    /// Sweep over l (`a..b` or list), or fix it when sweeping q
    #[arg(long)]
    l: Option<String>,
    /// Sweep over q (`a..b` or list), or fix it when sweeping l
    #[arg(long)]
    q: Option<String>,
    /// analytic or quadrature
    #[arg(long, default_value = "quadrature")]
    method: Method,
}

#[derive(Args)]
struct CheckArgs {
    /// Replace every threshold with this value
    #[arg(long)]
    tolerance: Option<f64>,
    /// File that discrepancy records are appended to
    #[arg(long, default_value = "discrepancies.jsonl")]
    ledger: PathBuf,
    /// Also check the qualitative figure properties
    #[arg(long)]
    figures: bool,
}

fn molecule_list(cli: &Cli, names: &[String]) -> Result<Vec<MoleculeParams>> {
    let mut table = builtin_molecules();
    if let Some(path) = &cli.molecules {
        table.merge(load_molecules(BufReader::new(File::open(path)?))?);
    }
    if names.is_empty() {
        return Ok(table.iter().cloned().collect());
    }
    names.iter().map(|n| table.lookup(n).cloned()).collect()
}

fn is_range(s: &str) -> bool {
    s.contains("..") || s.contains(',')
}

fn run(cli: &Cli) -> Result<ExitCode> {
    let cfg = QuadratureConfig {
        rel_tol: cli.rel_tol,
        abs_tol: cli.abs_tol,
        ..QuadratureConfig::default()
    };
    cfg.validate()?;
    match &cli.command {
        Command::Table(a) => {
            let spec = TableSpec {
                kind: a.common.measure,
                space: a.common.space,
                q: a.q,
                molecules: molecule_list(cli, &a.common.molecule)?,
                n: parse_u32_range(&a.n)?,
                l: parse_u32_range(&a.l)?,
                mode: a.common.mode,
                method: a.method,
            };
            let out = Output {
                format: a.common.format,
                full_precision: a.common.full_precision,
            };
            print!("{}", cmd_table(&spec, out, &cfg)?);
        }
        Command::Sweep(a) => {
            // a range in --q means a q sweep; otherwise --l is swept
            let (axis, l, q) = match (a.l.as_deref(), a.q.as_deref()) {
                (l, Some(q)) if is_range(q) => {
                    let l = l.map(str::parse).transpose().map_err(|_| {
                        Error::InvalidSpec("l must be a single value when sweeping q".into())
                    })?;
                    (SweepAxis::Q(parse_q_list(q)?), l.unwrap_or(0), None)
                }
                (Some(l), q) => (SweepAxis::L(parse_u32_range(l)?), 0, q.map(parse_q).transpose()?),
                (None, _) => {
                    return Err(Error::InvalidSpec("give an l range or a q range to sweep over".into()));
                }
            };
            let spec = SweepSpec {
                kind: a.common.measure,
                space: a.common.space,
                molecules: molecule_list(cli, &a.common.molecule)?,
                n: a.n,
                l,
                q,
                axis,
                mode: a.common.mode,
                method: a.method,
            };
            let out = Output {
                format: a.common.format,
                full_precision: a.common.full_precision,
            };
            print!("{}", cmd_sweep(&spec, out, &cfg)?);
        }
        Command::Check(a) => {
            let opts = CheckOptions {
                tolerance_override: a.tolerance,
                cfg,
            };
            let (report, passed) = cmd_check(&opts, a.figures, Some(&a.ledger))?;
            print!("{report}");
            if !passed {
                return Ok(ExitCode::FAILURE);
            }
        }
        Command::Molecules => {
            let mut table = builtin_molecules();
            if let Some(path) = &cli.molecules {
                table.merge(load_molecules(BufReader::new(File::open(path)?))?);
            }
            print!("{}", table.to_text());
        }
    }
    Ok(ExitCode::SUCCESS)
}

fn main() -> ExitCode {
    let cli = Cli::parse();
    match run(&cli) {
        Ok(code) => code,
        Err(e) => {
            eprintln!("error: {e}");
            ExitCode::from(2)
        }
    }
}
