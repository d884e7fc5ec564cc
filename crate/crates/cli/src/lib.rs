//! Command-line front end for the `cfmonoid` workbench.

pub mod commands;
pub mod input;
pub mod report;

use clap::{Args, Parser, Subcommand, ValueEnum};

/// Exit statuses shared by every subcommand.
#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub enum Status {
    Holds = 0,
    Refuted = 1,
    Undetermined = 2,
    InputError = 3,
}

#[derive(Debug, Clone, Copy, PartialEq, Eq, ValueEnum)]
pub enum Format {
    Text,
    Json,
    Csv,
}

#[derive(Debug, Parser)]
#[command(
    name = "cfmonoid",
    version,
    about = "String-rewriting workbench for monoids with zero"
)]
pub struct Cli {
    #[command(flatten)]
    pub source: Source,

    #[arg(long, value_enum, default_value_t = Format::Text, global = true)]
    pub format: Format,

    /// Worker threads for probe-all and dehn-profile.
    #[arg(long, default_value_t = 1, global = true)]
    pub jobs: usize,

    /// Seed for the randomized rewriting strategy.
    #[arg(long, default_value_t = 0, global = true)]
    pub seed: u64,

    #[command(subcommand)]
    pub command: Command,
}

#[derive(Debug, Args)]
#[group(multiple = false)]
pub struct Source {
    /// Built-in presentation, e.g. M2 or dehn-example.
    #[arg(long, global = true)]
    pub catalog: Option<String>,

    /// Presentation file in the generators/relations text format.
    #[arg(long, global = true)]
    pub presentation: Option<std::path::PathBuf>,
}

#[derive(Debug, Clone, Copy, PartialEq, Eq, ValueEnum)]
pub enum StrategyArg {
    Leftmost,
    Rightmost,
    Random,
}

#[derive(Debug, Subcommand)]
pub enum Command {
    /// Normal form of a word.
    Normalize {
        word: String,
        #[arg(long, value_enum, default_value_t = StrategyArg::Leftmost)]
        strategy: StrategyArg,
    },
    /// Whether two words denote the same element.
    Equal { u: String, v: String },
    /// Critical pairs and termination of the oriented system.
    Confluence,
    /// Knuth-Bendix completion of the presentation.
    Complete {
        #[arg(long, default_value_t = 500)]
        max_rules: usize,
        #[arg(long, default_value_t = 64)]
        max_word_len: usize,
        #[arg(long, default_value_t = 100_000)]
        max_steps: usize,
    },
    /// Normal forms up to a length.
    Enumerate {
        #[arg(long)]
        max_len: usize,
    },
    /// Number of normal forms of each length.
    Growth {
        #[arg(long)]
        max_len: usize,
    },
    /// Words x, y with x w y = 1.
    Witness {
        word: String,
        #[arg(long, default_value_t = 12)]
        max_len: usize,
        #[arg(long, default_value_t = 1_000_000)]
        max_nodes: usize,
    },
    /// Congruence generated by one pair, on a ball of normal forms.
    Probe {
        u: String,
        v: String,
        #[arg(long)]
        radius: usize,
        /// Include the replayable collapse trace.
        #[arg(long)]
        trace: bool,
    },
    /// Probes every pair of short elements.
    ProbeAll {
        #[arg(long)]
        seed_len: usize,
        #[arg(long)]
        radius: usize,
    },
    /// Shortest derivation between two equal words.
    Dehn {
        u: String,
        v: String,
        /// Longest intermediate word; defaults to |u| + |v| + slack.
        #[arg(long)]
        max_len: Option<usize>,
        #[arg(long, default_value_t = 4)]
        slack: usize,
        #[arg(long, default_value_t = 2_000_000)]
        max_nodes: usize,
    },
    /// Largest derivation area over equal pairs, for each total length.
    DehnProfile {
        #[arg(long)]
        n_max: usize,
        #[arg(long, default_value_t = 4)]
        slack: usize,
        #[arg(long, default_value_t = 2_000_000)]
        max_nodes: usize,
    },
    /// Checks the identities behind the 0-simplicity and collapse arguments for M_n.
    VerifyPaper {
        #[arg(long)]
        n: usize,
    },
    /// Built-in presentations.
    Catalog {
        #[command(subcommand)]
        action: CatalogAction,
    },
}

#[derive(Debug, Subcommand)]
pub enum CatalogAction {
    List,
    Dump { name: String },
}

/// Parses `args` (program name first) and runs the command, returning the
/// exit status and everything destined for stdout. Diagnostics go to stderr.
pub fn run_args<I, T>(args: I) -> (Status, Vec<u8>)
where
    I: IntoIterator<Item = T>,
    T: Into<std::ffi::OsString> + Clone,
{
    let cli = match Cli::try_parse_from(args) {
        Ok(cli) => cli,
        Err(e) => {
            return match e.kind() {
                clap::error::ErrorKind::DisplayHelp | clap::error::ErrorKind::DisplayVersion => {
                    (Status::Holds, e.render().to_string().into_bytes())
                }
                _ => {
                    eprint!("{}", e.render());
                    (Status::InputError, Vec::new())
                }
            };
        }
    };
    let mut out = Vec::new();
    let status = match commands::run(&cli, &mut out) {
        Ok(status) => status,
        Err(e) => {
            eprintln!("error: {e}");
            e.status()
        }
    };
    (status, out)
}
