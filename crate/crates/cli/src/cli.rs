use clap::{Args, Parser, Subcommand, ValueEnum};

/// Ordered coin-stack counts, generating functions and coin-problem queries.
///
/// Exit codes: 0 success, 1 amount not representable, 2 bad input,
/// 3 resource or search limit hit, 4 infinite gap (gcd > 1),
/// 5 benchmark strategies disagree.
#[derive(Debug, Parser)]
#[command(name = "coinstack", version)]
pub struct Cli {
    #[command(subcommand)]
    pub command: Command,
}

#[derive(Debug, Subcommand)]
pub enum Command {
    /// Print E_0..E_n.
    Series {
        #[command(flatten)]
        common: Common,
        #[arg(long)]
        n: u64,
    },
    /// Decide whether an amount can be paid; exit 1 when it cannot.
    Decide {
        #[command(flatten)]
        common: Common,
        #[arg(long)]
        target: u64,
    },
    /// Largest amount that cannot be paid.
    Frobenius {
        #[command(flatten)]
        common: Common,
    },
    /// Numerator and denominator of the generating function.
    Genfunc {
        #[command(flatten)]
        common: Common,
        #[arg(long, value_enum, default_value_t = Form::Simplified)]
        form: Form,
    },
    /// Time the sliding window against the single-term evaluator.
    Bench {
        #[command(flatten)]
        common: Common,
        #[arg(long, value_parser = clap::value_parser!(u64).range(1..))]
        n: u64,
        #[arg(long, value_enum, default_value_t = Strategy::Both)]
        strategy: Strategy,
        /// Timed runs per strategy; the median is reported.
        #[arg(long, default_value_t = 5, value_parser = clap::value_parser!(u32).range(1..))]
        repeat: u32,
    },
}

#[derive(Debug, Args)]
pub struct Common {
    /// Comma-separated coin values, e.g. "2,5".
    #[arg(long)]
    pub denoms: String,
    #[arg(long, value_enum, default_value_t = Format::Text)]
    pub format: Format,
}

#[derive(Debug, Clone, Copy, PartialEq, Eq, ValueEnum)]
pub enum Format {
    Json,
    Csv,
    Text,
}

#[derive(Debug, Clone, Copy, PartialEq, Eq, ValueEnum)]
pub enum Form {
    Literal,
    Simplified,
}

#[derive(Debug, Clone, Copy, PartialEq, Eq, ValueEnum)]
pub enum Strategy {
    Dp,
    Fast,
    Both,
}

impl Command {
    pub fn name(&self) -> &'static str {
        match self {
            Command::Series { .. } => "series",
            Command::Decide { .. } => "decide",
            Command::Frobenius { .. } => "frobenius",
            Command::Genfunc { .. } => "genfunc",
            Command::Bench { .. } => "bench",
        }
    }

    pub fn common(&self) -> &Common {
        match self {
            Command::Series { common, .. }
            | Command::Decide { common, .. }
            | Command::Frobenius { common }
            | Command::Genfunc { common, .. }
            | Command::Bench { common, .. } => common,
        }
    }
}
