use std::process::ExitCode;

use clap::{Parser, Subcommand};
use subcount_cli::{commands, exit, Format, Via};

/// Count subgroups of Z_m x Z_n x Z_r x Z_s exactly.
#[derive(Debug, Parser)]
#[command(name = "subcount", version)]
struct Cli {
    /// Output format.
    #[arg(long, global = true, value_enum, default_value_t = Format::Text)]
    format: Format,

    #[command(subcommand)]
    command: Command,
}

#[derive(Debug, Subcommand)]
enum Command {
    /// Number of subgroups of Z_M x Z_N x Z_R x Z_S, optionally of order K.
    Count {
        m: u64,
        n: u64,
        r: u64,
        s: u64,
        #[arg(long = "order", value_name = "K")]
        order: Option<u64>,
        #[arg(long, value_enum, default_value_t = Via::Primes)]
        via: Via,
    },
    /// Subgroup count of Z_{p^A} x Z_{p^B} x Z_{p^C} x Z_{p^D} as a polynomial in p.
    Poly {
        a: u32,
        b: u32,
        c: u32,
        d: u32,
        /// Restrict to subgroups of order p^K.
        #[arg(long = "order", value_name = "K")]
        order: Option<u32>,
        /// Evaluate at the prime P instead of printing the polynomial.
        #[arg(long = "eval", value_name = "P")]
        eval: Option<u64>,
    },
    /// N(n) = N(n, n, n, n) for n = 1..=N.
    Table {
        #[arg(long = "max", value_name = "N", default_value_t = 30)]
        max: u64,
    },
    /// Compare the formulas with a brute-force subgroup census.
    Verify {
        #[arg(long = "max-order", value_name = "B", default_value_t = 64)]
        max_order: u64,
    },
    /// Scan degree, leading coefficient, symmetry and unimodality patterns.
    Conjectures {
        #[arg(long = "max-exp", value_name = "E", default_value_t = 3)]
        max_exp: u32,
    },
}

fn main() -> ExitCode {
    let cli = Cli::parse();
    let outcome = match cli.command {
        Command::Count {
            m,
            n,
            r,
            s,
            order,
            via,
        } => commands::count(m, n, r, s, order, via),
        Command::Poly {
            a,
            b,
            c,
            d,
            order,
            eval,
        } => commands::poly(a, b, c, d, order, eval),
        Command::Table { max } => commands::table(max),
        Command::Verify { max_order } => commands::verify(max_order),
        Command::Conjectures { max_exp } => commands::conjectures(max_exp),
    };
    match outcome {
        Ok(out) => {
            println!("{}", out.render(cli.format));
            ExitCode::from(out.exit_code as u8)
        }
        Err(err) => {
            eprintln!("subcount: {err}");
            ExitCode::from(exit::INVALID_INPUT as u8)
        }
    }
}
