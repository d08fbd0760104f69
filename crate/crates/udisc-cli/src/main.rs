//! Command-line front end: success probabilities, sweeps, asymptotic
//! limits, Monte-Carlo averages, and the brute-force verification suite.

mod output;

use clap::{Args, Parser, Subcommand, ValueEnum};
use std::process::ExitCode;

use output::{
    AspReport, LimitsReport, OverlapOut, PriorsOut, PspReport, SweepReport, SweepRow,
    VerifyConfigReport, VerifySummary,
};
use udisc::discriminator::{
    asp_monte_carlo, limit_data_infinite, limit_program_infinite, CopyConfig, Overlap, Priors,
    PspEvaluator,
};
use udisc::oracle::{verify_config, VerifyOptions};
use udisc::UdiscError;

#[derive(Parser)]
#[command(
    name = "udisc",
    version,
    about = "Success probabilities of the optimal universal programmable unambiguous discriminator"
)]
struct Cli {
    #[command(subcommand)]
    command: Command,
}

#[derive(Clone, Copy, PartialEq, Eq, ValueEnum)]
enum Format {
    Json,
    Csv,
}

#[derive(Args)]
struct ConfigArgs {
    /// Copies in program register A
    #[arg(long)]
    na: u32,
    /// Copies in data register B
    #[arg(long)]
    nb: u32,
    /// Copies in program register C
    #[arg(long)]
    nc: u32,
    /// Hilbert-space dimension of each copy
    #[arg(short, long, default_value_t = 2)]
    d: u32,
}

#[derive(Args)]
struct OutputArgs {
    /// Output format
    #[arg(long, value_enum, default_value_t = Format::Json)]
    format: Format,
    /// Significant digits for printed floating-point values
    #[arg(long, default_value_t = 12)]
    precision: u32,
}

#[derive(Subcommand)]
enum Command {
    /// Success probability breakdown at one parameter point
    Psp {
        #[command(flatten)]
        config: ConfigArgs,
        /// Prior probability of the first hypothesis
        #[arg(long, default_value_t = 0.5)]
        eta1: f64,
        /// Overlap |<phi1|phi2>| in [0, 1]
        #[arg(long)]
        s: Option<f64>,
        /// Overlap angle beta in [0, pi] (s = cos(beta/2))
        #[arg(long)]
        beta: Option<f64>,
        #[command(flatten)]
        output: OutputArgs,
    },
    /// Success probabilities over an (overlap x prior) grid
    Sweep {
        #[command(flatten)]
        config: ConfigArgs,
        /// Overlap grid as lo:hi:count over s
        #[arg(long)]
        s_grid: Option<String>,
        /// Overlap grid as lo:hi:count over beta
        #[arg(long)]
        beta_grid: Option<String>,
        /// Prior grid as lo:hi:count over eta1
        #[arg(long, default_value = "0.1:0.9:9")]
        eta_grid: String,
        #[command(flatten)]
        output: OutputArgs,
    },
    /// Asymptotic limits for infinite data or program registers
    Limits {
        /// Copies in each program register (data register limit)
        #[arg(long)]
        m: u32,
        /// Copies in the data register (program register limit)
        #[arg(long)]
        n: u32,
        #[arg(long, default_value_t = 0.5)]
        eta1: f64,
        #[arg(long)]
        s: Option<f64>,
        #[arg(long)]
        beta: Option<f64>,
        #[command(flatten)]
        output: OutputArgs,
    },
    /// Monte-Carlo averaged success probability over Haar-random inputs
    Asp {
        #[command(flatten)]
        config: ConfigArgs,
        #[arg(long, default_value_t = 0.5)]
        eta1: f64,
        /// Number of Monte-Carlo samples
        #[arg(long, default_value_t = 10_000)]
        samples: u64,
        /// RNG seed (runs are deterministic per seed)
        #[arg(long, default_value_t = 0)]
        seed: u64,
        #[command(flatten)]
        output: OutputArgs,
    },
    /// Run the brute-force oracle verification suite (qubits only)
    Verify {
        #[arg(long)]
        na: Option<u32>,
        #[arg(long)]
        nb: Option<u32>,
        #[arg(long)]
        nc: Option<u32>,
        #[arg(short, long, default_value_t = 2)]
        d: u32,
        /// Verify every canonical configuration with at most this many copies
        #[arg(long)]
        max_copies: Option<u32>,
        #[arg(long, default_value_t = 7)]
        seed: u64,
        #[command(flatten)]
        output: OutputArgs,
    },
}

enum CliError {
    Usage(String),
    Lib(UdiscError),
    VerificationFailed,
}

impl From<UdiscError> for CliError {
    fn from(err: UdiscError) -> Self {
        CliError::Lib(err)
    }
}

impl CliError {
    fn exit_code(&self) -> u8 {
        match self {
            CliError::Usage(_) => 2,
            CliError::Lib(err) => match err {
                UdiscError::ResourceCap { .. } | UdiscError::UnsupportedDimension { .. } => 4,
                UdiscError::DegeneratePriors { .. } => 3,
                UdiscError::InternalConsistency { .. } | UdiscError::DegenerateBlock { .. } => 5,
                _ => 2,
            },
            CliError::VerificationFailed => 5,
        }
    }

    fn message(&self) -> String {
        match self {
            CliError::Usage(msg) => format!("usage error: {msg}"),
            CliError::Lib(err) => format!("error: {err}"),
            CliError::VerificationFailed => "verification failed".into(),
        }
    }
}

fn main() -> ExitCode {
    let cli = Cli::parse();
    match run(cli.command) {
        Ok(()) => ExitCode::SUCCESS,
        Err(err) => {
            eprintln!("{}", err.message());
            ExitCode::from(err.exit_code())
        }
    }
}

fn run(command: Command) -> Result<(), CliError> {
    match command {
        Command::Psp { config, eta1, s, beta, output } => run_psp(config, eta1, s, beta, output),
        Command::Sweep { config, s_grid, beta_grid, eta_grid, output } => {
            run_sweep(config, s_grid, beta_grid, eta_grid, output)
        }
        Command::Limits { m, n, eta1, s, beta, output } => run_limits(m, n, eta1, s, beta, output),
        Command::Asp { config, eta1, samples, seed, output } => {
            run_asp(config, eta1, samples, seed, output)
        }
        Command::Verify { na, nb, nc, d, max_copies, seed, output } => {
            run_verify(na, nb, nc, d, max_copies, seed, output)
        }
    }
}

fn build_config(args: &ConfigArgs) -> Result<CopyConfig, CliError> {
    let config = CopyConfig::new(args.na, args.nb, args.nc, args.d)?;
    if config.swapped() {
        eprintln!(
            "note: program registers swapped to the canonical ordering n_A >= n_C \
             (n_A = {}, n_C = {})",
            config.n_a(),
            config.n_c()
        );
    }
    Ok(config)
}

fn overlap_from(s: Option<f64>, beta: Option<f64>) -> Result<Overlap, CliError> {
    match (s, beta) {
        (Some(s), None) => Ok(Overlap::from_s(s)?),
        (None, Some(beta)) => Ok(Overlap::from_beta(beta)?),
        (None, None) => Err(CliError::Usage("provide exactly one of --s or --beta".into())),
        (Some(_), Some(_)) => {
            Err(CliError::Usage("provide exactly one of --s or --beta, not both".into()))
        }
    }
}

/// Parses `lo:hi:count` into an inclusive linear grid.
fn parse_grid(raw: &str, name: &str, lo_bound: f64, hi_bound: f64) -> Result<Vec<f64>, CliError> {
    let parts: Vec<&str> = raw.split(':').collect();
    let usage = || {
        CliError::Usage(format!(
            "{name} must be lo:hi:count with {lo_bound} <= lo <= hi <= {hi_bound}, got '{raw}'"
        ))
    };
    if parts.len() != 3 {
        return Err(usage());
    }
    let lo: f64 = parts[0].parse().map_err(|_| usage())?;
    let hi: f64 = parts[1].parse().map_err(|_| usage())?;
    let count: usize = parts[2].parse().map_err(|_| usage())?;
    if count == 0 || lo > hi || lo < lo_bound || hi > hi_bound {
        return Err(usage());
    }
    if count == 1 {
        return Ok(vec![lo]);
    }
    Ok((0..count)
        .map(|i| lo + (hi - lo) * i as f64 / (count - 1) as f64)
        .collect())
}

fn print_report<T: serde::Serialize>(report: &T, csv: String, format: Format) {
    match format {
        Format::Json => {
            println!("{}", serde_json::to_string_pretty(report).expect("serializable report"))
        }
        Format::Csv => print!("{csv}"),
    }
}

fn run_psp(
    config: ConfigArgs,
    eta1: f64,
    s: Option<f64>,
    beta: Option<f64>,
    output: OutputArgs,
) -> Result<(), CliError> {
    let config = build_config(&config)?;
    let priors = Priors::from_eta1(eta1)?;
    priors.require_nondegenerate()?;
    let overlap = overlap_from(s, beta)?;
    let breakdown = PspEvaluator::new(&config)?.evaluate(&priors, &overlap)?;
    let report = PspReport::new(&config, &priors, &overlap, &breakdown, output.precision);
    print_report(&report, report.to_csv(), output.format);
    Ok(())
}

fn run_sweep(
    config: ConfigArgs,
    s_grid: Option<String>,
    beta_grid: Option<String>,
    eta_grid: String,
    output: OutputArgs,
) -> Result<(), CliError> {
    let config = build_config(&config)?;
    let overlaps: Vec<Overlap> = match (s_grid, beta_grid) {
        (Some(raw), None) => parse_grid(&raw, "--s-grid", 0.0, 1.0)?
            .into_iter()
            .map(|s| Overlap::from_s(s).map_err(CliError::from))
            .collect::<Result<_, _>>()?,
        (None, Some(raw)) => parse_grid(&raw, "--beta-grid", 0.0, std::f64::consts::PI)?
            .into_iter()
            .map(|beta| Overlap::from_beta(beta).map_err(CliError::from))
            .collect::<Result<_, _>>()?,
        (None, None) => {
            return Err(CliError::Usage("provide exactly one of --s-grid or --beta-grid".into()))
        }
        (Some(_), Some(_)) => {
            return Err(CliError::Usage(
                "provide exactly one of --s-grid or --beta-grid, not both".into(),
            ))
        }
    };
    let etas = parse_grid(&eta_grid, "--eta-grid", 0.0, 1.0)?;
    let points = overlaps.len() * etas.len();
    if points > 1_000_000 {
        return Err(CliError::Lib(UdiscError::ResourceCap {
            dim: points as u128,
            cap: 1_000_000,
        }));
    }
    let evaluator = PspEvaluator::new(&config)?;
    let mut rows = Vec::with_capacity(points);
    for overlap in &overlaps {
        for &eta1 in &etas {
            let priors = Priors::from_eta1(eta1)?;
            let breakdown = evaluator.evaluate(&priors, overlap)?;
            rows.push(SweepRow {
                s: output::round_sig(overlap.s(), output.precision),
                beta: output::round_sig(overlap.beta(), output.precision),
                eta1: output::round_sig(eta1, output.precision),
                coeff_a: output::round_sig(breakdown.coeff_a, output.precision),
                coeff_b: output::round_sig(breakdown.coeff_b, output.precision),
                coeff_c: output::round_sig(breakdown.coeff_c, output.precision),
                total: output::round_sig(breakdown.total, output.precision),
            });
        }
    }
    let report = SweepReport { command: "sweep".into(), config: (&config).into(), rows };
    print_report(&report, report.to_csv(), output.format);
    Ok(())
}

fn run_limits(
    m: u32,
    n: u32,
    eta1: f64,
    s: Option<f64>,
    beta: Option<f64>,
    output: OutputArgs,
) -> Result<(), CliError> {
    let priors = Priors::from_eta1(eta1)?;
    let overlap = overlap_from(s, beta)?;
    let report = LimitsReport {
        command: "limits".into(),
        m,
        n,
        priors: PriorsOut {
            eta1: output::round_sig(priors.eta1(), output.precision),
            eta2: output::round_sig(priors.eta2(), output.precision),
        },
        overlap: OverlapOut {
            s: output::round_sig(overlap.s(), output.precision),
            beta: output::round_sig(overlap.beta(), output.precision),
        },
        data_register_limit: output::round_sig(limit_data_infinite(m, &overlap), output.precision),
        program_register_limit: output::round_sig(
            limit_program_infinite(n, &priors, &overlap),
            output.precision,
        ),
    };
    print_report(&report, report.to_csv(), output.format);
    Ok(())
}

fn run_asp(
    config: ConfigArgs,
    eta1: f64,
    samples: u64,
    seed: u64,
    output: OutputArgs,
) -> Result<(), CliError> {
    let config = build_config(&config)?;
    let priors = Priors::from_eta1(eta1)?;
    let estimate = asp_monte_carlo(&config, &priors, samples, seed)?;
    let report = AspReport::new(&config, &priors, &estimate, seed, output.precision);
    print_report(&report, report.to_csv(), output.format);
    Ok(())
}

fn run_verify(
    na: Option<u32>,
    nb: Option<u32>,
    nc: Option<u32>,
    d: u32,
    max_copies: Option<u32>,
    seed: u64,
    output: OutputArgs,
) -> Result<(), CliError> {
    let configs: Vec<CopyConfig> = match (na, nb, nc, max_copies) {
        (Some(na), Some(nb), Some(nc), None) => vec![CopyConfig::new(na, nb, nc, d)?],
        (None, None, None, Some(cap)) => {
            let mut configs = Vec::new();
            for n_a in 1..cap {
                for n_b in 1..cap {
                    for n_c in 1..=n_a {
                        if n_a + n_b + n_c <= cap {
                            configs.push(CopyConfig::new(n_a, n_b, n_c, d)?);
                        }
                    }
                }
            }
            if configs.is_empty() {
                return Err(CliError::Usage(format!(
                    "--max-copies {cap} admits no configuration (need at least 3)"
                )));
            }
            configs
        }
        _ => {
            return Err(CliError::Usage(
                "provide either --na/--nb/--nc or --max-copies, not a mixture".into(),
            ))
        }
    };

    let options = VerifyOptions { seed, ..Default::default() };
    let mut reports = Vec::with_capacity(configs.len());
    for config in &configs {
        let report = verify_config(config, &options)?;
        for check in &report.checks {
            eprintln!(
                "({}, {}, {}; d={}) {:<28} {} residual {:.3e} (tol {:.1e}){}",
                report.n_a,
                report.n_b,
                report.n_c,
                report.d,
                check.name,
                if check.passed { "PASS" } else { "FAIL" },
                check.residual,
                check.tolerance,
                check.note.as_deref().map(|n| format!(" [{n}]")).unwrap_or_default()
            );
        }
        reports.push(VerifyConfigReport::new(&report, output.precision));
    }
    let passed = reports.iter().all(|r| r.passed);
    let summary = VerifySummary { command: "verify".into(), seed, reports, passed };
    print_report(&summary, summary.to_csv(), output.format);
    if !passed {
        return Err(CliError::VerificationFailed);
    }
    Ok(())
}
