use std::io::{ErrorKind, Write};
use std::process::ExitCode;

use anyhow::Result;
use clap::{Parser, Subcommand, ValueEnum};
use qsep_cli::commands::{analyze, make_state, reduce_file, run_sweep, Family, Input, Settings};

/// Entanglement witness for three- and four-qubit density matrices.
///
/// Exit status: 0 inconclusive or success, 1 error, 2 entangled.
#[derive(Parser, Debug)]
#[command(name = "qsep", version)]
struct Cli {
    /// PPT tolerance; also overrides the validation tolerance.
    #[arg(long, global = true)]
    tol: Option<f64>,

    #[arg(long, global = true, value_enum, default_value_t = Format::Human)]
    format: Format,

    /// Skip density-matrix validation of the input (adds a warning to the report).
    #[arg(long, global = true)]
    no_validate: bool,

    #[command(subcommand)]
    command: Command,
}

#[derive(Clone, Copy, Debug, PartialEq, Eq, ValueEnum)]
enum Format {
    Human,
    Machine,
}

#[derive(Subcommand, Debug)]
enum Command {
    /// Run the witness on a 3- or 4-qubit matrix file ("-" for stdin).
    Analyze { path: String },
    /// Print one two-qubit reduction as a matrix file.
    Reduce {
        path: String,
        /// Reduction label such as "A,B", "A,BC", "AB,CD".
        #[arg(long)]
        label: String,
    },
    /// Print a named state as a matrix file.
    MakeState {
        #[command(subcommand)]
        family: StateFamily,
    },
    /// Scan a one-parameter family and locate verdict changes.
    Sweep {
        /// werner, or molecule (p_AB = t, p_AC = 0, p_BC = 1 - t).
        family: String,
        #[arg(long, default_value_t = 0.0)]
        from: f64,
        #[arg(long, default_value_t = 1.0)]
        to: f64,
        #[arg(long, default_value_t = 101)]
        steps: usize,
    },
}

#[derive(Subcommand, Debug)]
enum StateFamily {
    /// (|0..0> + |1..1>)/sqrt 2.
    Ghz {
        #[arg(long, default_value_t = 3)]
        qubits: usize,
    },
    /// Two-qubit Werner state embedded on A,BC.
    Werner {
        #[arg(long)]
        x: f64,
    },
    /// Two-qubit state R placed on three qubits in one of six ways.
    Embed {
        #[arg(long)]
        way: u8,
        /// Matrix file for R (default: the Bell state).
        #[arg(long)]
        r: Option<String>,
    },
    /// Mixture of pairwise Bell-type molecules.
    Molecule {
        #[arg(long)]
        p_ab: f64,
        #[arg(long)]
        p_ac: f64,
        #[arg(long)]
        p_bc: f64,
    },
    /// Bound entangled state built from an unextendible product basis.
    Upb,
    /// Pure product state; each factor is "a,b" or "re0,im0,re1,im1" and is normalized.
    Product {
        #[arg(
            long,
            value_delimiter = ',',
            allow_hyphen_values = true,
            required = true
        )]
        a: Vec<f64>,
        #[arg(
            long,
            value_delimiter = ',',
            allow_hyphen_values = true,
            required = true
        )]
        b: Vec<f64>,
        #[arg(
            long,
            value_delimiter = ',',
            allow_hyphen_values = true,
            required = true
        )]
        c: Vec<f64>,
        /// Optional fourth qubit.
        #[arg(long, value_delimiter = ',', allow_hyphen_values = true)]
        d: Option<Vec<f64>>,
    },
}

fn family(f: StateFamily) -> Result<Family> {
    Ok(match f {
        StateFamily::Ghz { qubits } => Family::Ghz { qubits },
        StateFamily::Werner { x } => Family::Werner { x },
        StateFamily::Embed { way, r } => Family::Embed {
            way,
            r: r.as_deref().map(Input::read).transpose()?,
        },
        StateFamily::Molecule { p_ab, p_ac, p_bc } => Family::Molecule { p_ab, p_ac, p_bc },
        StateFamily::Upb => Family::Upb,
        StateFamily::Product { a, b, c, d } => Family::Product {
            factors: [Some(a), Some(b), Some(c), d]
                .into_iter()
                .flatten()
                .collect(),
        },
    })
}

/// Writes to stdout; a closed pipe (e.g. `| head`) is not an error.
fn emit(text: &str) -> Result<()> {
    let mut out = std::io::stdout().lock();
    match out.write_all(text.as_bytes()).and_then(|_| out.flush()) {
        Err(e) if e.kind() != ErrorKind::BrokenPipe => Err(e.into()),
        _ => Ok(()),
    }
}

fn run(cli: Cli) -> Result<u8> {
    let settings = Settings {
        tol: cli.tol,
        no_validate: cli.no_validate,
    };
    let machine = cli.format == Format::Machine;
    match cli.command {
        Command::Analyze { path } => {
            let doc = analyze(&Input::read(&path)?, settings)?;
            emit(&if machine {
                doc.to_json() + "\n"
            } else {
                doc.to_human()
            })?;
            Ok(doc.exit_code())
        }
        Command::Reduce { path, label } => {
            emit(&(reduce_file(&Input::read(&path)?, &label, settings)?.to_json() + "\n"))?;
            Ok(0)
        }
        Command::MakeState { family: f } => {
            emit(&(make_state(&family(f)?, settings)?.to_json() + "\n"))?;
            Ok(0)
        }
        Command::Sweep {
            family,
            from,
            to,
            steps,
        } => {
            let doc = run_sweep(&family, from, to, steps, settings)?;
            emit(&if machine {
                doc.to_json() + "\n"
            } else {
                doc.to_human()
            })?;
            Ok(0)
        }
    }
}

fn main() -> ExitCode {
    // clap exits with 2 on usage errors, which is reserved for ENTANGLED
    let cli = match Cli::try_parse() {
        Ok(cli) => cli,
        Err(e) => {
            let _ = e.print();
            return ExitCode::from(if e.use_stderr() { 1 } else { 0 });
        }
    };
    match run(cli) {
        Ok(code) => ExitCode::from(code),
        Err(e) => {
            eprintln!("error: {e:#}");
            ExitCode::from(1)
        }
    }
}
