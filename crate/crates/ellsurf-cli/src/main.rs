use clap::{Parser, Subcommand, ValueEnum};
use ellsurf_cli::commands::{
    bad_set, cmd_badprimes, cmd_certify, cmd_charpoly, cmd_invariants, primes_up_to,
    resolve_surface,
};
use ellsurf_cli::report::{
    render_badprimes, render_certificate, render_charpoly, render_invariants, Format,
};
use irreducibility::Conclusion;

/// Exact invariants, Frobenius characteristic polynomials, and
/// Lie-irreducibility certificates for elliptic surfaces over Q with
/// multiplicative bad fibers.
#[derive(Parser)]
#[command(name = "ellsurf", version)]
struct Cli {
    #[command(subcommand)]
    command: Command,
}

#[derive(Clone, Copy, ValueEnum)]
enum OutputFormat {
    Json,
    Md,
}

impl From<OutputFormat> for Format {
    fn from(f: OutputFormat) -> Format {
        match f {
            OutputFormat::Json => Format::Json,
            OutputFormat::Md => Format::Markdown,
        }
    }
}

fn default_threads() -> usize {
    std::env::var("ELLSURF_THREADS")
        .ok()
        .and_then(|v| v.parse().ok())
        .filter(|&n| n >= 1)
        .unwrap_or(1)
}

#[derive(Subcommand)]
enum Command {
    /// Compute Frobenius characteristic polynomials at the given primes.
    Charpoly {
        /// Registry id (x0, case1, case2, case3i, case3ii, case4i, case4ii)
        /// or a surface descriptor file path.
        #[arg(long)]
        surface: String,
        /// All primes up to this bound.
        #[arg(long, conflicts_with = "primes")]
        primes_up_to: Option<u64>,
        /// Explicit comma-separated primes.
        #[arg(long, value_delimiter = ',')]
        primes: Option<Vec<u64>>,
        /// Verify each row against the independent cubic-extension count.
        #[arg(long)]
        oracle: bool,
        #[arg(long, value_enum, default_value = "md")]
        format: OutputFormat,
        /// Worker threads (default: ELLSURF_THREADS or 1).
        #[arg(long)]
        threads: Option<usize>,
    },
    /// Run the three termination algorithms and emit a certificate.
    Certify {
        #[arg(long)]
        surface: String,
        /// Largest prime to count points at.
        #[arg(long, default_value = "30")]
        prime_bound: u64,
        /// Largest prime to scan per quadratic field.
        #[arg(long, default_value = "1000")]
        field_bound: u64,
        #[arg(long, value_enum, default_value = "md")]
        format: OutputFormat,
        /// Worker threads (default: ELLSURF_THREADS or 1).
        #[arg(long)]
        threads: Option<usize>,
    },
    /// Numerical invariants: weight, Euler number, geometric genus, rank.
    Invariants {
        #[arg(long)]
        surface: String,
        #[arg(long, value_enum, default_value = "md")]
        format: OutputFormat,
    },
    /// Candidate and refined primes of bad reduction.
    Badprimes {
        #[arg(long)]
        surface: String,
        #[arg(long, value_enum, default_value = "md")]
        format: OutputFormat,
    },
}

fn run(cli: Cli) -> ellsurf_cli::Result<i32> {
    match cli.command {
        Command::Charpoly {
            surface,
            primes_up_to: bound,
            primes,
            oracle,
            format,
            threads,
        } => {
            let resolved = resolve_surface(&surface)?;
            let (s, _) = bad_set(&resolved)?;
            let primes = match (primes, bound) {
                (Some(ps), _) => ps,
                (None, Some(b)) => primes_up_to(b),
                (None, None) => primes_up_to(13),
            };
            let report = cmd_charpoly(
                &resolved.surface,
                &s,
                &primes,
                oracle,
                threads.unwrap_or_else(default_threads),
            )?;
            println!("{}", render_charpoly(&report, format.into()));
            Ok(0)
        }
        Command::Certify {
            surface,
            prime_bound,
            field_bound,
            format,
            threads: _,
        } => {
            let resolved = resolve_surface(&surface)?;
            let bound = prime_bound.min(field_bound).max(2);
            let out = cmd_certify(&resolved, bound)?;
            println!("{}", render_certificate(&out, format.into()));
            Ok(match out.certificate.conclusion {
                Conclusion::LieIrreducibleSo5 => 0,
                Conclusion::InconclusiveUpToBound => 2,
            })
        }
        Command::Invariants { surface, format } => {
            let resolved = resolve_surface(&surface)?;
            let report = cmd_invariants(&resolved)?;
            println!("{}", render_invariants(&report, format.into()));
            Ok(0)
        }
        Command::Badprimes { surface, format } => {
            let resolved = resolve_surface(&surface)?;
            let report = cmd_badprimes(&resolved)?;
            println!(
                "{}",
                render_badprimes(&resolved.surface.name, &report, format.into())
            );
            Ok(0)
        }
    }
}

fn main() {
    let cli = Cli::parse();
    match run(cli) {
        Ok(code) => std::process::exit(code),
        Err(e) => {
            eprintln!("error: {e}");
            std::process::exit(1);
        }
    }
}
