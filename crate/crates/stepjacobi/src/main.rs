use clap::{Args, Parser, Subcommand};
use std::io::Write;
use std::path::PathBuf;
use std::process::ExitCode;

use stepjacobi::cli::{
    self, parse_complex_list, parse_f64_list, parse_k_range, parse_n_list, CommandKind,
    OutputFormat, RunConfig,
};
use stepjacobi::{Error, WeightSpec};

#[derive(Parser)]
#[command(
    name = "stepjacobi",
    version,
    about = "Verification sweeps for orthogonal polynomials of a Jacobi weight with a jump at the origin"
)]
struct TopLevel {
    #[command(subcommand)]
    command: Command,
}

#[derive(Subcommand)]
enum Command {
    /// Recurrence coefficients a_n, b_n against their predicted expansions
    Recur(CommonArgs),
    /// Outer asymptotics 2^n P_n(z)/phi(z)^n at points off [-1, 1]
    Outer(CommonArgs),
    /// Local asymptotics of P_n(x) near the jump
    Local(CommonArgs),
    /// Scaled Christoffel-Darboux kernel against its confluent limit
    Kernel(CommonArgs),
    /// Zero spacings around the jump against the phase-equation predictions
    Zeros(CommonArgs),
    /// Szego boundary data: D_+, hbar, Phi, rho along the interval
    Szego(CommonArgs),
    /// The confluent-hypergeometric property suite (exit 2 on failure)
    Props(CommonArgs),
}

#[derive(Args)]
struct CommonArgs {
    /// Exponent of (1 - x)
    #[arg(long, default_value_t = 0.0, allow_negative_numbers = true)]
    alpha: f64,
    /// Exponent of (1 + x)
    #[arg(long, default_value_t = 0.0, allow_negative_numbers = true)]
    beta: f64,
    /// Jump strength: the weight is multiplied by c^2 on [0, 1]
    #[arg(long, default_value_t = 1.0, allow_negative_numbers = true)]
    c: f64,
    /// Comma-separated cosine coefficients of log h
    #[arg(long, default_value = "0", allow_hyphen_values = true)]
    logh: String,
    /// JSON file with {"alpha":..,"beta":..,"c":..,"logh_cheb":[..]}; overrides the flags
    #[arg(long)]
    config: Option<PathBuf>,
    /// Degrees: comma list or start:end:step
    #[arg(long)]
    n: Option<String>,
    /// Real evaluation points (comma list)
    #[arg(long, allow_hyphen_values = true)]
    x: Option<String>,
    /// Second coordinates for kernel pairs (comma list)
    #[arg(long, allow_hyphen_values = true)]
    y: Option<String>,
    /// Complex evaluation points, e.g. "2,0.5+0.8i"
    #[arg(long, allow_hyphen_values = true)]
    z: Option<String>,
    /// Zero-index window min:max
    #[arg(long, allow_hyphen_values = true)]
    k: Option<String>,
    /// csv or json
    #[arg(long, default_value = "csv")]
    format: String,
    /// Output path (stdout when absent)
    #[arg(long)]
    out: Option<PathBuf>,
    /// Numeric tolerance recorded in the provenance header
    #[arg(long, default_value_t = 1e-12, allow_negative_numbers = true)]
    tol: f64,
}

fn build_config(kind: CommandKind, args: &CommonArgs) -> Result<RunConfig, Error> {
    let spec = match &args.config {
        Some(path) => {
            let text = std::fs::read_to_string(path)
                .map_err(|e| Error::Config(format!("cannot read {}: {e}", path.display())))?;
            let spec: WeightSpec = serde_json::from_str(&text)
                .map_err(|e| Error::Config(format!("bad weight spec JSON: {e}")))?;
            spec.validate().map_err(|e| Error::Config(e.to_string()))?;
            spec
        }
        None => {
            let logh = parse_f64_list(&args.logh)?;
            let logh = if logh.iter().all(|&v| v == 0.0) {
                Vec::new()
            } else {
                logh
            };
            WeightSpec::new(args.alpha, args.beta, args.c, logh)
                .map_err(|e| Error::Config(e.to_string()))?
        }
    };
    let mut config = RunConfig::new(spec, kind);
    if let Some(n) = &args.n {
        config.n_list = parse_n_list(n)?;
    }
    if let Some(x) = &args.x {
        config.xs = parse_f64_list(x)?;
    }
    if let Some(y) = &args.y {
        config.ys = parse_f64_list(y)?;
    }
    if let Some(z) = &args.z {
        config.zs = parse_complex_list(z)?;
    }
    if let Some(k) = &args.k {
        config.k_range = parse_k_range(k)?;
    }
    config.out_path = args.out.clone();
    config.format = match args.format.as_str() {
        "csv" => OutputFormat::Csv,
        "json" => OutputFormat::Json,
        other => return Err(Error::Config(format!("unknown format `{other}`"))),
    };
    config.tol = args.tol;
    Ok(config)
}

fn main() -> ExitCode {
    let parsed = match TopLevel::try_parse() {
        Ok(p) => p,
        Err(e) => {
            // clap already renders help/version nicely; config errors exit 64
            let is_help = matches!(
                e.kind(),
                clap::error::ErrorKind::DisplayHelp | clap::error::ErrorKind::DisplayVersion
            );
            let _ = e.print();
            return if is_help {
                ExitCode::SUCCESS
            } else {
                ExitCode::from(cli::EXIT_CONFIG as u8)
            };
        }
    };
    let (kind, args) = match &parsed.command {
        Command::Recur(a) => (CommandKind::Recur, a),
        Command::Outer(a) => (CommandKind::Outer, a),
        Command::Local(a) => (CommandKind::Local, a),
        Command::Kernel(a) => (CommandKind::Kernel, a),
        Command::Zeros(a) => (CommandKind::Zeros, a),
        Command::Szego(a) => (CommandKind::Szego, a),
        Command::Props(a) => (CommandKind::Props, a),
    };
    let config = match build_config(kind, args) {
        Ok(c) => c,
        Err(e) => {
            eprintln!("stepjacobi: {e}");
            return ExitCode::from(cli::EXIT_CONFIG as u8);
        }
    };
    match cli::run(&config) {
        Ok(outcome) => {
            if args.out.is_none() {
                if let Err(e) = std::io::stdout().write_all(outcome.rendered.as_bytes()) {
                    eprintln!("stepjacobi: cannot write output: {e}");
                    return ExitCode::from(cli::EXIT_NUMERIC as u8);
                }
            }
            ExitCode::from(outcome.exit_code as u8)
        }
        Err(Error::Config(msg)) => {
            eprintln!("stepjacobi: {msg}");
            ExitCode::from(cli::EXIT_CONFIG as u8)
        }
        Err(e) => {
            eprintln!("stepjacobi: {e}");
            ExitCode::from(cli::EXIT_NUMERIC as u8)
        }
    }
}
