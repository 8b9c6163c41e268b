//! `cycloribbon`: enumeration, Hopf-algebra arithmetic, module-theoretic
//! matrices and oracle sweeps from the command line.
//!
//! Exit status: 0 on success, 1 on invalid input, 2 when an oracle check fails
//! (the failing reports go to stderr as JSON).

mod commands;

use std::io::Write;
use std::process::ExitCode;

use clap::{Parser, Subcommand, ValueEnum};

#[derive(Parser, Debug)]
#[command(name = "cycloribbon", version, about = "Representation theory of the 0-Ariki-Koike-Shoji algebras")]
pub struct Cli {
    #[command(subcommand)]
    pub command: Command,
}

#[derive(Clone, Copy, Debug, PartialEq, Eq, ValueEnum)]
pub enum Format {
    Csv,
    Json,
}

#[derive(Clone, Copy, Debug, PartialEq, Eq, ValueEnum)]
pub enum ProductBasis {
    #[value(name = "F", alias = "f")]
    F,
    #[value(name = "R", alias = "r")]
    R,
    #[value(name = "S", alias = "s")]
    S,
}

#[derive(Subcommand, Debug)]
pub enum Command {
    /// List cycloribbons (or anticycloribbons) of size n with r colors.
    Enumerate {
        #[arg(long)]
        n: usize,
        #[arg(long)]
        r: u32,
        /// Restrict to one shape, e.g. "2,1".
        #[arg(long)]
        shape: Option<String>,
        /// Anticycloribbons instead of cycloribbons.
        #[arg(long)]
        anti: bool,
    },
    /// Apply the involution phi to a colored ribbon "shape|colors".
    Phi {
        #[arg(long)]
        ribbon: String,
    },
    /// Product of two elements: labels ("1,1|2,1", "2^1.1^2") or JSON combinations.
    Product {
        #[arg(long, value_enum)]
        basis: ProductBasis,
        #[arg(long, allow_hyphen_values = true)]
        lhs: String,
        #[arg(long, allow_hyphen_values = true)]
        rhs: String,
    },
    /// Coproduct of one element.
    Coproduct {
        #[arg(long, value_enum)]
        basis: ProductBasis,
        #[arg(long, allow_hyphen_values = true)]
        elt: String,
    },
    /// Composition factors of the induction product of two simple modules.
    InduceSimples {
        #[arg(long)]
        lhs: String,
        #[arg(long)]
        rhs: String,
    },
    /// Indecomposable summands of the projective H_n(0)-module P_I induced up.
    InduceHeckeProjective {
        #[arg(long)]
        shape: String,
        #[arg(long)]
        r: u32,
    },
    /// Cartan matrix: rows projectives, columns simples.
    Cartan {
        #[arg(long)]
        n: usize,
        #[arg(long)]
        r: u32,
        #[arg(long, value_enum, default_value = "csv")]
        format: Format,
    },
    /// Decomposition matrix: rows multipartitions, columns simples.
    Decomp {
        #[arg(long)]
        n: usize,
        #[arg(long)]
        r: u32,
        #[arg(long, value_enum, default_value = "csv")]
        format: Format,
    },
    /// Dimensions of the indecomposable projective modules.
    Dims {
        #[arg(long)]
        n: usize,
        #[arg(long)]
        r: u32,
    },
    /// Checks against the algebra built from its presentation.
    Oracle {
        #[command(subcommand)]
        command: OracleCommand,
    },
}

#[derive(Subcommand, Debug)]
pub enum OracleCommand {
    /// Defining relations and basis size of AKS_{n,r}(0).
    Verify {
        #[arg(long)]
        n: usize,
        #[arg(long)]
        r: u32,
        /// Parameters u_1..u_r, e.g. "1,3,7" or "1/2,2,-3". Default u_k = k.
        #[arg(long, allow_hyphen_values = true)]
        u: Option<String>,
    },
    /// Induced modules against the shuffle rule, for all pairs of simples up
    /// to the given total grade.
    CrossCheck {
        #[arg(long)]
        max_grade: usize,
        #[arg(long)]
        r: u32,
        /// Shuffle convention the reports are judged by: direct,
        /// inverse-positional, inverse-value-transport or
        /// inverse-value-transport-reflected. All of them are scored.
        #[arg(long, default_value = "direct")]
        convention: String,
    },
}

fn main() -> ExitCode {
    let cli = match Cli::try_parse() {
        Ok(cli) => cli,
        Err(e) => {
            let _ = e.print();
            return if e.use_stderr() { ExitCode::from(1) } else { ExitCode::SUCCESS };
        }
    };
    match commands::run(&cli.command) {
        Ok(out) => {
            let mut stdout = std::io::stdout().lock();
            let _ = stdout.write_all(out.as_bytes());
            ExitCode::SUCCESS
        }
        Err(commands::Failure::Invalid(msg)) => {
            eprintln!("error: {msg}");
            ExitCode::from(1)
        }
        Err(commands::Failure::Oracle { stdout, stderr }) => {
            let _ = std::io::stdout().lock().write_all(stdout.as_bytes());
            eprintln!("{stderr}");
            ExitCode::from(2)
        }
    }
}
