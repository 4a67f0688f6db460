use std::io::{self, Read, Write};
use std::process::ExitCode;

use clap::{Parser, Subcommand};
use squareice_cli::{
    cmd_bseq, cmd_check_asm, cmd_count, cmd_enumerate, cmd_table, cmd_verify, cmd_xenum, parse_methods, parse_rational,
    parse_suites, resolve_workers, Format, RunReport,
};

/// Exact alternating-sign-matrix and square-ice computations.
#[derive(Parser)]
#[command(name = "squareice", version)]
struct Cli {
    /// Worker threads; falls back to SQUAREICE_WORKERS, then the core count.
    #[arg(long, global = true)]
    workers: Option<usize>,
    #[command(subcommand)]
    command: Command,
}

#[derive(Subcommand)]
enum Command {
    /// A(n;1) by one or more methods, cross-checked when several are given.
    Count {
        #[arg(long)]
        n: usize,
        /// Comma-separated: brute, transfer, formula.
        #[arg(long, default_value = "formula")]
        method: String,
    },
    /// The x-enumeration A(n;x), or its value at a rational point.
    Xenum {
        #[arg(long)]
        n: usize,
        /// Rational p/q.
        #[arg(long)]
        at: Option<String>,
    },
    /// B(1..max-n;x) with the factorization checks.
    Bseq {
        #[arg(long = "max-n")]
        max_n: usize,
    },
    /// Runs verification suites; `all` or a comma-separated list.
    Verify {
        suite: String,
        /// Size bound, replacing each suite's default.
        #[arg(long)]
        n: Option<usize>,
    },
    /// n, A(n;1), A(n;2), A(n;3) and the coefficients of A(n;x).
    Table {
        #[arg(long = "max-n")]
        max_n: usize,
        #[arg(long, default_value = "text")]
        format: String,
    },
    /// Every n×n ASM in text form.
    Enumerate {
        #[arg(long)]
        n: usize,
        /// Emit square-ice vertex labels instead of matrices.
        #[arg(long)]
        ice: bool,
    },
    /// Validates an ASM text file (`-` reads stdin).
    CheckAsm { file: String },
}

fn run(cli: Cli) -> squareice::Result<RunReport> {
    match cli.command {
        Command::Count { n, method } => cmd_count(n, &parse_methods(&method)?),
        Command::Xenum { n, at } => {
            let at = at.as_deref().map(parse_rational).transpose()?;
            cmd_xenum(n, at.as_ref())
        }
        Command::Bseq { max_n } => cmd_bseq(max_n),
        Command::Verify { suite, n } => cmd_verify(&parse_suites(&suite)?, n),
        Command::Table { max_n, format } => cmd_table(max_n, format.parse::<Format>()?),
        Command::Enumerate { n, ice } => cmd_enumerate(n, ice),
        Command::CheckAsm { file } => {
            let text = if file == "-" {
                let mut s = String::new();
                io::stdin().read_to_string(&mut s).map(|_| s)
            } else {
                std::fs::read_to_string(&file)
            }
            .map_err(|e| squareice::Error::Parse(format!("{file}: {e}")))?;
            cmd_check_asm(&file, &text)
        }
    }
}

fn main() -> ExitCode {
    let cli = Cli::parse();
    let workers = match resolve_workers(cli.workers) {
        Ok(w) => w,
        Err(e) => {
            eprintln!("error: {e}");
            return ExitCode::from(2);
        }
    };
    if let Some(w) = workers {
        // Only fails if a pool already exists, which cannot happen here.
        let _ = rayon::ThreadPoolBuilder::new().num_threads(w.max(1)).build_global();
    }
    match run(cli) {
        Ok(report) => {
            let (out, err) = report.render();
            // A closed stdout (e.g. `| head`) is not an error worth reporting.
            let _ = io::stdout().write_all(out.as_bytes());
            let _ = io::stderr().write_all(err.as_bytes());
            if report.passed() {
                ExitCode::SUCCESS
            } else {
                ExitCode::from(1)
            }
        }
        Err(e) => {
            eprintln!("error: {e}");
            ExitCode::from(2)
        }
    }
}
