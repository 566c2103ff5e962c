use clap::{Args, Parser, Subcommand, ValueEnum};

use rt_lens_core::{LieType, Strategy};

#[derive(Debug, Parser)]
#[command(name = "rt-lens", version, about = "Exact quantum invariants of lens spaces for G2, F4 and E8")]
pub struct Cli {
    #[command(subcommand)]
    pub command: Command,

    /// Worker threads for the lattice transforms (default: all cores).
    #[arg(long, global = true)]
    pub threads: Option<usize>,
}

#[derive(Debug, Subcommand)]
pub enum Command {
    /// F, Σ and ∇ of one lens space L(m, n).
    Invariant {
        #[command(flatten)]
        common: Common,
        /// The lens space L(M, N).
        #[arg(long, num_args = 2, value_names = ["M", "N"], allow_negative_numbers = true, required = true)]
        lens: Vec<i64>,
        /// Add wall-clock timings to JSON output (text output always has them).
        #[arg(long)]
        timings: bool,
    },
    /// F and ∇ for every L(m, n) with 2 ≤ m ≤ M.
    Table {
        #[command(flatten)]
        common: Common,
        #[arg(long, value_name = "M")]
        m_max: i64,
    },
    /// The lattice Gauss sum G_k.
    Gauss {
        #[command(flatten)]
        common: Common,
        #[arg(long, default_value_t = 1, allow_negative_numbers = true)]
        k: i64,
        /// Also sum all N^r terms directly and compare.
        #[arg(long)]
        brute: bool,
    },
    /// Run a property suite; exits 1 if any check fails.
    Verify {
        #[command(flatten)]
        common: Common,
        #[arg(long, value_enum)]
        suite: Suite,
        /// Largest m for the lens and homeo suites.
        #[arg(long, default_value_t = 9)]
        m_max: i64,
        /// Random samples for the gauss and weyl suites.
        #[arg(long, default_value_t = 20)]
        samples: usize,
        #[arg(long, default_value_t = 1)]
        seed: u64,
    },
}

#[derive(Debug, Clone, Args)]
pub struct Common {
    /// g2, f4 or e8.
    #[arg(long, value_parser = parse_lie_type)]
    pub algebra: LieType,
    /// The order N of the root of unity q.
    #[arg(long)]
    pub order: u64,
    /// Numeric values use q = exp(2πi c / N) with c the embedding index.
    #[arg(long, default_value_t = 1, allow_negative_numbers = true)]
    pub embedding: i64,
    /// auto, direct, dense or factored.
    #[arg(long, default_value = "auto", value_parser = parse_strategy)]
    pub strategy: Strategy,
    /// Largest state space any single enumeration may touch.
    #[arg(long, env = "RT_LENS_BUDGET", default_value_t = rt_lens_core::Budget::default().0)]
    pub budget: u64,
    #[arg(long, value_enum, default_value_t = Format::Text)]
    pub format: Format,
}

#[derive(Debug, Clone, Copy, PartialEq, Eq, ValueEnum)]
pub enum Format {
    Text,
    Json,
    Csv,
}

#[derive(Debug, Clone, Copy, PartialEq, Eq, ValueEnum)]
pub enum Suite {
    Root,
    Gauss,
    Weyl,
    Z,
    Lens,
    Kirby,
    Homeo,
}

impl Suite {
    pub fn name(self) -> &'static str {
        match self {
            Suite::Root => "root",
            Suite::Gauss => "gauss",
            Suite::Weyl => "weyl",
            Suite::Z => "z",
            Suite::Lens => "lens",
            Suite::Kirby => "kirby",
            Suite::Homeo => "homeo",
        }
    }
}

fn parse_lie_type(s: &str) -> Result<LieType, String> {
    s.parse().map_err(|e: rt_lens_core::Error| e.to_string())
}

fn parse_strategy(s: &str) -> Result<Strategy, String> {
    s.parse().map_err(|e: rt_lens_core::Error| e.to_string())
}

#[cfg(test)]
mod tests {
    use super::*;
    use clap::CommandFactory;

    #[test]
    fn clap_definition_is_consistent() {
        Cli::command().debug_assert();
    }

    #[test]
    fn parses_invariant() {
        let cli = Cli::try_parse_from([
            "rt-lens",
            "invariant",
            "--algebra",
            "g2",
            "--order",
            "11",
            "--lens",
            "7",
            "2",
            "--strategy",
            "factored",
        ])
        .unwrap();
        match cli.command {
            Command::Invariant { common, lens, .. } => {
                assert_eq!(common.algebra, LieType::G2);
                assert_eq!(common.strategy, Strategy::RecursionFactored);
                assert_eq!(lens, vec![7, 2]);
            }
            other => panic!("{other:?}"),
        }
        assert!(Cli::try_parse_from(["rt-lens", "invariant", "--algebra", "a2", "--order", "5", "--lens", "3", "1"])
            .is_err());
    }
}
