mod commands;
mod input;
mod staging;

use std::path::PathBuf;
use std::process::ExitCode;

use clap::{Args, Parser, Subcommand};
use ocn_core::metrics::DEFAULT_SAMPLE_SOURCES;
use ocn_core::report::{AnalysisOptions, DEFAULT_SEED};

use commands::{Format, Output, OutputFailure};

/// Overlapping community network analysis.
#[derive(Parser)]
#[command(name = "ocn", version)]
struct Cli {
    /// Worker threads (default: all cores).
    #[arg(long, global = true)]
    threads: Option<usize>,
    #[command(subcommand)]
    command: Command,
}

#[derive(Args, Clone)]
struct OutputArgs {
    /// Directory for the output file set; stdout when omitted.
    #[arg(long)]
    out: Option<PathBuf>,
    /// Rendering on stdout.
    #[arg(long, value_enum, default_value = "json")]
    format: Format,
    /// Also write log-log SVG plots (with --out).
    #[arg(long)]
    svg: bool,
}

impl From<OutputArgs> for Output {
    fn from(a: OutputArgs) -> Self {
        Output {
            dir: a.out,
            format: a.format,
            svg: a.svg,
        }
    }
}

#[derive(Args, Clone, Copy)]
struct HopArgs {
    /// BFS sources for sampled hop distances.
    #[arg(long, default_value_t = DEFAULT_SAMPLE_SOURCES)]
    sample_sources: usize,
    /// Seed for source sampling.
    #[arg(long, default_value_t = DEFAULT_SEED)]
    seed: u64,
    /// Run BFS from every node.
    #[arg(long)]
    exact_hops: bool,
}

#[derive(Subcommand)]
enum Command {
    /// Structural statistics and fits for the giant component of a graph.
    Stats {
        graph: PathBuf,
        #[arg(long, default_value = "graph")]
        label: String,
        #[command(flatten)]
        hops: HopArgs,
        #[command(flatten)]
        output: OutputArgs,
    },
    /// Project a community cover onto its overlapping community network.
    Project {
        graph: PathBuf,
        cover: PathBuf,
        /// Minimum shared members for a link.
        #[arg(long, default_value_t = 1)]
        threshold: u32,
        #[command(flatten)]
        output: OutputArgs,
    },
    /// Fit the ten distribution families to a sample or histogram file.
    Fit {
        input: PathBuf,
        #[arg(long, default_value = "sample")]
        label: String,
        #[command(flatten)]
        output: OutputArgs,
    },
    /// Full comparison of a network and its overlapping community network.
    Report {
        graph: PathBuf,
        cover: PathBuf,
        #[arg(long, default_value = "DBLP")]
        label: String,
        #[arg(long, default_value_t = 1)]
        threshold: u32,
        #[command(flatten)]
        hops: HopArgs,
        #[command(flatten)]
        output: OutputArgs,
    },
}

fn options(hops: HopArgs, threshold: u32) -> AnalysisOptions {
    AnalysisOptions {
        sample_sources: hops.sample_sources,
        seed: hops.seed,
        exact_hops: hops.exact_hops,
        threshold,
    }
}

fn run(cli: Cli) -> anyhow::Result<()> {
    if let Some(n) = cli.threads {
        rayon::ThreadPoolBuilder::new().num_threads(n).build_global()?;
    }
    match cli.command {
        Command::Stats { graph, label, hops, output } => {
            commands::stats(&graph, &label, options(hops, 1), &output.into())
        }
        Command::Project { graph, cover, threshold, output } => {
            let opts = AnalysisOptions {
                threshold,
                ..AnalysisOptions::default()
            };
            commands::project(&graph, &cover, opts, &output.into())
        }
        Command::Fit { input, label, output } => commands::fit(&input, &label, &output.into()),
        Command::Report { graph, cover, label, threshold, hops, output } => {
            commands::report(&graph, &cover, &label, options(hops, threshold), &output.into())
        }
    }
}

/// 2 for bad input, 1 for everything else.
fn exit_code(err: &anyhow::Error) -> u8 {
    if err.downcast_ref::<OutputFailure>().is_some() {
        return 1;
    }
    match err.chain().find_map(|e| e.downcast_ref::<ocn_core::Error>()) {
        Some(e) if e.is_input_error() => 2,
        _ => 1,
    }
}

fn main() -> ExitCode {
    let cli = Cli::parse();
    match run(cli) {
        Ok(()) => ExitCode::SUCCESS,
        Err(e) => {
            eprintln!("error: {e:#}");
            ExitCode::from(exit_code(&e))
        }
    }
}
