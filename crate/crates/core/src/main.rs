use std::process::ExitCode;

use clap::{Parser, Subcommand};

use bohrlab::report::{
    cmd_coeffs, cmd_metric, cmd_radius, cmd_sharpness, cmd_verify, CoeffsArgs, MetricArgs, OutputFormat, RadiusArgs,
    SharpnessArgs, VerifyArgs,
};

/// Bohr radii, sharpness witnesses and coefficient oracles for holomorphic maps
/// into the half-plane, slit plane, punctured disk and exterior disk.
#[derive(Debug, Parser)]
#[command(name = "bohrlab", version)]
struct Cli {
    #[arg(long, global = true, value_enum, default_value = "json")]
    format: OutputFormat,
    #[arg(long, global = true, env = "BOHRLAB_SEED", default_value_t = 7)]
    seed: u64,
    #[command(subcommand)]
    command: Command,
}

#[derive(Debug, Subcommand)]
enum Command {
    /// Bracket the sharp Bohr radius of a codomain.
    Radius(RadiusArgs),
    /// Search extremal witnesses for violations beyond the sharp radius.
    Sharpness(SharpnessArgs),
    /// Run a seeded property suite.
    Verify(VerifyArgs),
    /// Dump the coefficients of an extremal family.
    Coeffs(CoeffsArgs),
    /// Tabulate chordal distances between points of the sphere.
    Metric(MetricArgs),
}

fn main() -> ExitCode {
    let cli = Cli::parse();
    let outcome = match &cli.command {
        Command::Radius(a) => cmd_radius(a, cli.seed),
        Command::Sharpness(a) => cmd_sharpness(a, cli.seed),
        Command::Verify(a) => cmd_verify(a, cli.seed),
        Command::Coeffs(a) => cmd_coeffs(a, cli.seed),
        Command::Metric(a) => cmd_metric(a, cli.seed),
    };
    match outcome {
        Ok(outcome) => {
            print!("{}", outcome.envelope.render(cli.format));
            ExitCode::from(outcome.status.exit_code() as u8)
        }
        Err(e) => {
            eprintln!("error: {e}");
            ExitCode::from(2)
        }
    }
}
