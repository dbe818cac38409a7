//! `antimagic` — construct, verify, sweep, search, and export totally
//! antimagic labelings of complete bipartite graphs and their one-vertex
//! joins.

use std::path::PathBuf;

use clap::{Parser, Subcommand};

use antimagic_cli::commands::{
    cmd_construct, cmd_export, cmd_search, cmd_sweep, cmd_verify, ConstructOptions, ExportFormat,
    ExportOptions, Family, SearchMode, SearchOptions, SweepOptions,
};

#[derive(Parser)]
#[command(
    name = "antimagic",
    version,
    about = "Totally antimagic total labelings of complete bipartite graphs and their joins"
)]
struct Cli {
    #[command(subcommand)]
    command: Command,
}

#[derive(Subcommand)]
enum Command {
    /// Build a labeling for one graph and write its certificate (JSON)
    Construct {
        /// Graph family to label
        #[arg(long, value_enum)]
        family: Family,
        /// First side size
        #[arg(long)]
        n: u32,
        /// Second side size (rectangular families only)
        #[arg(long)]
        m: Option<u32>,
        /// Build outside the supported side-size bounds
        #[arg(long)]
        force: bool,
        /// Write the certificate here instead of stdout
        #[arg(long)]
        output: Option<PathBuf>,
    },
    /// Recompute every check on a certificate, trusting nothing embedded
    Verify {
        /// Certificate file produced by `construct`
        certificate: PathBuf,
    },
    /// Evaluate a construction across a parameter range, one CSV row per point
    Sweep {
        /// Graph family to sweep
        #[arg(long, value_enum)]
        family: Family,
        /// Side size or inclusive range, e.g. 8 or 4..64
        #[arg(long, value_name = "N[..N]")]
        n: String,
        /// Second side size or range (rectangular families only)
        #[arg(long, value_name = "M[..M]")]
        m: Option<String>,
        /// Include points outside the supported side-size bounds
        #[arg(long)]
        force: bool,
        /// Worker threads (default: one per CPU); output is identical either way
        #[arg(long)]
        jobs: Option<usize>,
        /// Write the CSV here instead of stdout
        #[arg(long)]
        output: Option<PathBuf>,
        /// Allow ranges beyond n <= 64, m <= 48
        #[arg(long)]
        override_bounds: bool,
    },
    /// Count antimagic labelings of a small graph by brute force
    Search {
        /// Graph family to search
        #[arg(long, value_enum)]
        family: Family,
        /// First side size
        #[arg(long)]
        n: u32,
        /// Second side size (rectangular families only)
        #[arg(long)]
        m: Option<u32>,
        /// Search strategy
        #[arg(long, value_enum, default_value = "exhaustive")]
        mode: SearchMode,
        /// Stop after this many labelings (exhaustive) or visited nodes (pruned)
        #[arg(long)]
        budget: Option<u64>,
    },
    /// Re-emit a certificate as canonical JSON, Graphviz DOT, or CSV
    Export {
        /// Certificate file produced by `construct`
        certificate: PathBuf,
        /// Output format
        #[arg(long, value_enum)]
        format: ExportFormat,
        /// Write here instead of stdout
        #[arg(long)]
        output: Option<PathBuf>,
    },
}

fn main() {
    let cli = Cli::parse();
    let result = match cli.command {
        Command::Construct {
            family,
            n,
            m,
            force,
            output,
        } => cmd_construct(&ConstructOptions {
            family,
            n,
            m,
            force,
            output,
        }),
        Command::Verify { certificate } => cmd_verify(&certificate),
        Command::Sweep {
            family,
            n,
            m,
            force,
            jobs,
            output,
            override_bounds,
        } => cmd_sweep(&SweepOptions {
            family,
            n,
            m,
            force,
            jobs,
            output,
            override_bounds,
        }),
        Command::Search {
            family,
            n,
            m,
            mode,
            budget,
        } => cmd_search(&SearchOptions {
            family,
            n,
            m,
            mode,
            budget,
        }),
        Command::Export {
            certificate,
            format,
            output,
        } => cmd_export(&ExportOptions {
            path: certificate,
            format,
            output,
        }),
    };
    if let Err(err) = result {
        eprintln!("error: {err}");
        std::process::exit(err.exit_code());
    }
}
