use clap::{Parser, Subcommand};

use algdyn::degrees::DEFAULT_TERM_BUDGET;
use algdyn_cli::commands::{
    run_analyze, run_degseq, run_dyndeg, run_induce, run_predict, run_verify,
};

/// Exact analysis of finite-dimensional algebras and of the degree growth of
/// the rational maps they induce.
#[derive(Parser)]
#[command(name = "algdyn", version, about, disable_help_subcommand = true)]
struct Cli {
    #[command(subcommand)]
    command: Command,
}

#[derive(Subcommand)]
enum Command {
    /// Analyze an algebra: flags, unit, nilradical, generic invariants.
    Analyze {
        /// Algebra source: Q[t]/(P), C^n, Mat(n), products with " x ",
        /// a JSON structure-constant document, or "-" for stdin.
        #[arg(long)]
        algebra: String,
        /// Seed for the generic-invariant sampling.
        #[arg(long, default_value_t = 0)]
        seed: u64,
        /// Number of random samples.
        #[arg(long, default_value_t = 16)]
        samples: usize,
        /// Include wall-clock timings (breaks byte-for-byte reproducibility).
        #[arg(long)]
        timings: bool,
    },
    /// Print the coordinates of an induced map.
    Induce {
        #[arg(long)]
        algebra: String,
        /// Single-variable rational function, e.g. "(t^2+1)/(t-2)".
        #[arg(long)]
        phi: Option<String>,
        /// Integer exponent matrix, e.g. "[[2,1],[1,1]]".
        #[arg(long)]
        monomial: Option<String>,
    },
    /// Brute-force degree sequence of the induced map (p = 1).
    Degseq {
        #[arg(long)]
        algebra: String,
        #[arg(long)]
        phi: Option<String>,
        #[arg(long)]
        monomial: Option<String>,
        /// Number of iterates.
        #[arg(long)]
        iters: usize,
        /// Term budget before the sequence is truncated.
        #[arg(long, default_value_t = DEFAULT_TERM_BUDGET)]
        budget: usize,
        #[arg(long)]
        timings: bool,
    },
    /// Predicted degree sequence (closed form) for codimension p.
    Predict {
        #[arg(long)]
        algebra: String,
        #[arg(long)]
        phi: Option<String>,
        #[arg(long)]
        monomial: Option<String>,
        /// Codimension.
        #[arg(long)]
        p: usize,
        #[arg(long)]
        iters: usize,
        #[arg(long, default_value_t = 0)]
        seed: u64,
        #[arg(long, default_value_t = 16)]
        samples: usize,
        #[arg(long)]
        timings: bool,
    },
    /// Measure, predict and compare; exit 0 on pass, 3 on fail.
    Verify {
        #[arg(long)]
        algebra: String,
        #[arg(long)]
        phi: Option<String>,
        #[arg(long)]
        monomial: Option<String>,
        #[arg(long)]
        iters: usize,
        #[arg(long, default_value_t = DEFAULT_TERM_BUDGET)]
        budget: usize,
        /// Constant-ratio bound, an integer or fraction like "16" or "33/2".
        #[arg(long)]
        c_max: Option<String>,
        /// Per-step growth-rate drift bound.
        #[arg(long)]
        slope_eps: Option<f64>,
        #[arg(long, default_value_t = 0)]
        seed: u64,
        #[arg(long, default_value_t = 16)]
        samples: usize,
        #[arg(long)]
        timings: bool,
    },
    /// Dynamical degree estimate for a generalized monomial map.
    Dyndeg {
        #[arg(long)]
        algebra: String,
        #[arg(long)]
        monomial: String,
        #[arg(long)]
        p: usize,
        #[arg(long)]
        timings: bool,
    },
}

fn main() {
    let cli = match Cli::try_parse() {
        Ok(cli) => cli,
        Err(e) => {
            // help and version requests are not usage errors
            use clap::error::ErrorKind;
            let code = match e.kind() {
                ErrorKind::DisplayHelp | ErrorKind::DisplayVersion => 0,
                _ => 1,
            };
            let _ = e.print();
            std::process::exit(code);
        }
    };
    let result = match &cli.command {
        Command::Analyze {
            algebra,
            seed,
            samples,
            timings,
        } => run_analyze(algebra, *seed, *samples, *timings),
        Command::Induce {
            algebra,
            phi,
            monomial,
        } => run_induce(algebra, phi, monomial),
        Command::Degseq {
            algebra,
            phi,
            monomial,
            iters,
            budget,
            timings,
        } => run_degseq(algebra, phi, monomial, *iters, *budget, *timings),
        Command::Predict {
            algebra,
            phi,
            monomial,
            p,
            iters,
            seed,
            samples,
            timings,
        } => run_predict(
            algebra, phi, monomial, *p, *iters, *seed, *samples, *timings,
        ),
        Command::Verify {
            algebra,
            phi,
            monomial,
            iters,
            budget,
            c_max,
            slope_eps,
            seed,
            samples,
            timings,
        } => run_verify(
            algebra, phi, monomial, *iters, *budget, c_max, *slope_eps, *seed, *samples, *timings,
        ),
        Command::Dyndeg {
            algebra,
            monomial,
            p,
            timings,
        } => run_dyndeg(algebra, monomial, *p, *timings),
    };
    match result {
        Ok((output, code)) => {
            println!("{output}");
            std::process::exit(code);
        }
        Err(e) => {
            eprintln!("error: {}", e.message());
            std::process::exit(e.exit_code());
        }
    }
}
