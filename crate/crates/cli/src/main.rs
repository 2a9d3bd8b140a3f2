//! `parahoric`: command-line access to root data, alcoves, parahoric
//! descriptors, local types and dimension formulas.
//!
//! Exit status: 0 on success, 2 on a usage error, 1 on a domain error.

mod commands;
mod render;

use std::process::ExitCode;

use clap::{Args, Parser, Subcommand};
use parahoric_core::rational::{self, Q};
use parahoric_core::RootSystem;

use render::Format;

#[derive(Debug, Parser)]
#[command(
    name = "parahoric",
    version,
    about = "Exact invariants of parahoric group data"
)]
struct Cli {
    /// Output format.
    #[arg(long, global = true, value_enum, default_value = "table")]
    format: Format,
    #[command(subcommand)]
    command: Command,
}

/// Comma-separated fractions, e.g. `1/3,0`.
#[derive(Debug, Clone)]
pub struct Fractions(pub Vec<Q>);

fn parse_fractions(s: &str) -> Result<Fractions, String> {
    rational::parse_fraction_list(s)
        .map(Fractions)
        .map_err(|e| e.to_string())
}

fn parse_system(s: &str) -> Result<RootSystem, String> {
    RootSystem::parse(s).map_err(|e| e.to_string())
}

fn parse_ints(s: &str) -> Result<Vec<i64>, String> {
    s.split(',')
        .map(|x| {
            x.trim()
                .parse::<i64>()
                .map_err(|_| format!("{x:?} is not an integer"))
        })
        .collect::<Result<Vec<_>, _>>()
}

#[derive(Debug, Clone)]
pub struct Ints(pub Vec<i64>);

fn parse_int_list(s: &str) -> Result<Ints, String> {
    parse_ints(s).map(Ints)
}

/// `a:n` pairs, e.g. `1:2,-1:3`.
#[derive(Debug, Clone)]
pub struct Exponents(pub Vec<(i64, i64)>);

fn parse_exponents(s: &str) -> Result<Exponents, String> {
    s.split(',')
        .map(|p| {
            let (a, n) = p
                .split_once(':')
                .ok_or_else(|| format!("{p:?} is not of the form a:n"))?;
            let a = a
                .trim()
                .parse()
                .map_err(|_| format!("{a:?} is not an integer"))?;
            let n = n
                .trim()
                .parse()
                .map_err(|_| format!("{n:?} is not an integer"))?;
            Ok((a, n))
        })
        .collect::<Result<Vec<_>, String>>()
        .map(Exponents)
}

#[derive(Debug, Args)]
pub struct TypeArg {
    /// Root system type: letter and rank, products joined by `x` (A2, G2, A1xA1).
    #[arg(value_name = "TYPE", value_parser = parse_system)]
    pub system: RootSystem,
}

#[derive(Debug, Subcommand)]
enum Command {
    /// Roots, coroots, Cartan matrix and marks.
    Roots(TypeArg),
    /// Vertices of the Weyl alcove with their classification.
    Alcove(TypeArg),
    /// Parahoric descriptor of a point, or of a finite set when --theta repeats.
    Parahoric {
        #[command(flatten)]
        ty: TypeArg,
        /// Point in fundamental-coweight coordinates.
        #[arg(long, required = true, value_parser = parse_fractions, allow_hyphen_values = true)]
        theta: Vec<Fractions>,
    },
    /// Convert between a weight and a local type (d, Δ).
    Localtype {
        #[command(flatten)]
        ty: TypeArg,
        #[arg(long, value_parser = parse_fractions, allow_hyphen_values = true, conflicts_with_all = ["d", "delta"], required_unless_present = "d")]
        theta: Option<Fractions>,
        /// Order of the isotropy group.
        #[arg(long, requires = "delta")]
        d: Option<u64>,
        /// Δ in coroot coordinates.
        #[arg(long, value_parser = parse_int_list, allow_hyphen_values = true, requires = "d")]
        delta: Option<Ints>,
    },
    /// Count maximal and hyperspecial parahorics for every simple type.
    Hyperspecial {
        #[arg(long, default_value_t = 8)]
        max_rank: usize,
    },
    /// Representation-space and moduli-space dimensions.
    Dimension {
        #[command(flatten)]
        ty: TypeArg,
        #[arg(long)]
        genus: u32,
        /// Weight of one marked point; repeat for several.
        #[arg(long, value_parser = parse_fractions, allow_hyphen_values = true)]
        theta: Vec<Fractions>,
        /// Also print the μ/ν table for every simple root.
        #[arg(long)]
        mu_nu: bool,
    },
    /// Fibre dimension of the Hecke correspondence between two parahorics.
    Hecke {
        #[command(flatten)]
        ty: TypeArg,
        #[arg(long, value_parser = parse_fractions, allow_hyphen_values = true)]
        lower: Fractions,
        #[arg(long, value_parser = parse_fractions, allow_hyphen_values = true)]
        upper: Fractions,
    },
    /// Parabolic degree of a line bundle.
    Pardeg {
        #[arg(long, allow_hyphen_values = true)]
        deg: i64,
        #[arg(long, value_parser = parse_fractions, conflicts_with = "exponents")]
        weights: Option<Fractions>,
        /// Cover exponents a:n, giving weights a/n lifted into [0, 1).
        #[arg(long, value_parser = parse_exponents, allow_hyphen_values = true)]
        exponents: Option<Exponents>,
    },
}

fn main() -> ExitCode {
    let cli = match Cli::try_parse() {
        Ok(cli) => cli,
        Err(e) => {
            let _ = e.print();
            return ExitCode::from(e.exit_code() as u8);
        }
    };
    let result = match cli.command {
        Command::Roots(t) => commands::roots(&t.system),
        Command::Alcove(t) => commands::alcove(&t.system),
        Command::Parahoric { ty, theta } => commands::parahoric(&ty.system, &theta),
        Command::Localtype {
            ty,
            theta,
            d,
            delta,
        } => commands::localtype(&ty.system, theta.as_ref(), d.zip(delta.map(|i| i.0))),
        Command::Hyperspecial { max_rank } => commands::hyperspecial(max_rank),
        Command::Dimension {
            ty,
            genus,
            theta,
            mu_nu,
        } => commands::dimension(&ty.system, genus, &theta, mu_nu),
        Command::Hecke { ty, lower, upper } => commands::hecke(&ty.system, &lower, &upper),
        Command::Pardeg {
            deg,
            weights,
            exponents,
        } => commands::pardeg(deg, weights.as_ref(), exponents.as_ref()),
    };
    match result {
        Ok(out) => {
            print!("{}", render::emit(&out, cli.format));
            ExitCode::SUCCESS
        }
        Err(msg) => {
            eprintln!("error: {msg}");
            ExitCode::from(1)
        }
    }
}
