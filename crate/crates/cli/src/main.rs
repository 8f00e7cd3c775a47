use std::io::Write;
use std::process::ExitCode;

use clap::{Parser, Subcommand};
use m0n_cli::{cmd_eval, cmd_gamma, cmd_table, cmd_verify, OutputFormat};

#[derive(Parser)]
#[command(
    name = "m0n",
    version,
    about = "Symmetric functions h^0(M_{0,n}, L_1^x1 ... L_n^xn)"
)]
struct Cli {
    #[command(subcommand)]
    command: Command,
}

#[derive(Subcommand)]
enum Command {
    /// Print gamma_n in the elementary symmetric basis.
    Gamma {
        #[arg(long)]
        n: usize,
        #[arg(long, value_enum, default_value_t = OutputFormat::Text)]
        format: OutputFormat,
        /// Write s1, s2, ... instead of σ1, σ2, ...
        #[arg(long)]
        ascii: bool,
    },
    /// Evaluate h^0 at a comma-separated exponent vector.
    Eval {
        #[arg(long)]
        n: usize,
        #[arg(long, allow_hyphen_values = true)]
        x: String,
    },
    /// Check the computed tables and the value recursion.
    Verify {
        #[arg(long, default_value_t = 8)]
        n_max: usize,
        #[arg(long, default_value_t = 2)]
        grid_bound: u64,
    },
    /// Print gamma_3 through gamma_{n-max}.
    Table {
        #[arg(long)]
        n_max: usize,
        #[arg(long, value_enum, default_value_t = OutputFormat::Text)]
        format: OutputFormat,
        #[arg(long)]
        ascii: bool,
    },
}

fn main() -> ExitCode {
    let cli = Cli::parse();
    let out = match cli.command {
        Command::Gamma { n, format, ascii } => cmd_gamma(n, format, ascii),
        Command::Eval { n, x } => cmd_eval(n, &x),
        Command::Verify { n_max, grid_bound } => cmd_verify(n_max, grid_bound),
        Command::Table {
            n_max,
            format,
            ascii,
        } => cmd_table(n_max, format, ascii),
    };
    // Ignore broken pipes when output is piped into something like `head`.
    let _ = std::io::stdout().write_all(out.stdout.as_bytes());
    let _ = std::io::stderr().write_all(out.stderr.as_bytes());
    ExitCode::from(out.code)
}
