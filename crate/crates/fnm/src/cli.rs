//! Argument parsing and the mining run behind the `fnm` binary.

use std::fs;
use std::io::{self, Write};
use std::path::PathBuf;

use clap::{ArgGroup, Parser, ValueEnum};
use fnm_core::{
    mine_with_clock, search_paths, Clock, MiningConfig, MiningError, PathError, Threshold,
};

use crate::io::{load_graph_files, LoadError};
use crate::report;
use crate::StdClock;

#[derive(Copy, Clone, Debug, PartialEq, Eq, ValueEnum)]
pub enum Switch {
    On,
    Off,
}

#[derive(Copy, Clone, Debug, PartialEq, Eq, ValueEnum)]
pub enum Mode {
    /// Only frequent path patterns.
    Paths,
    /// Every frequent pattern.
    Full,
}

/// Mine frequent neighborhood patterns from a labeled graph.
#[derive(Debug, Parser)]
#[command(name = "fnm", version)]
#[command(group(ArgGroup::new("threshold").required(true).args(["min_support", "min_ratio"])))]
pub struct Args {
    /// TSV file of `vertex<TAB>label` lines.
    #[arg(long, value_name = "PATH")]
    pub vertex_labels: PathBuf,

    /// TSV file of `src<TAB>dst<TAB>label` lines.
    #[arg(long, value_name = "PATH")]
    pub edges: PathBuf,

    /// Minimum number of matching pivots.
    #[arg(long, value_name = "N", value_parser = clap::value_parser!(u64).range(1..))]
    pub min_support: Option<u64>,

    /// Minimum fraction of candidate pivots, in (0, 1].
    #[arg(long, value_name = "R", value_parser = parse_ratio)]
    pub min_ratio: Option<f64>,

    /// Only vertices with this label may act as pivots.
    #[arg(long, value_name = "LABEL")]
    pub pivot_label: Option<String>,

    /// Largest pattern size, in labels plus edges.
    #[arg(long, value_name = "N", default_value_t = 4, value_parser = clap::value_parser!(u64).range(1..))]
    pub max_size: u64,

    /// Restrict scans and verification with vertex id lists.
    #[arg(long, value_enum, default_value_t = Switch::On)]
    pub vid: Switch,

    #[arg(long, value_enum, default_value_t = Mode::Full)]
    pub mode: Mode,

    /// Pattern output file; standard output if absent.
    #[arg(long, value_name = "PATH")]
    pub output: Option<PathBuf>,

    /// Statistics output file; none written if absent.
    #[arg(long, value_name = "PATH")]
    pub stats: Option<PathBuf>,
}

fn parse_ratio(s: &str) -> Result<f64, String> {
    let r: f64 = s.parse().map_err(|e| format!("{e}"))?;
    if r > 0.0 && r <= 1.0 {
        Ok(r)
    } else {
        Err(format!("{r} is not in (0, 1]"))
    }
}

#[derive(Debug, thiserror::Error)]
pub enum RunError {
    #[error(transparent)]
    Load(#[from] LoadError),
    #[error(transparent)]
    Mining(#[from] MiningError),
    #[error(transparent)]
    Path(#[from] PathError),
    #[error("{}: {source}", path.display())]
    Write { path: PathBuf, source: io::Error },
    #[error("standard output: {0}")]
    Stdout(io::Error),
}

impl Args {
    pub fn config(&self) -> MiningConfig {
        let threshold = match (self.min_support, self.min_ratio) {
            (Some(n), _) => Threshold::Count(n as usize),
            (None, Some(r)) => Threshold::Ratio(r),
            (None, None) => unreachable!("clap requires one threshold"),
        };
        let mut cfg = MiningConfig::new(threshold)
            .max_size(self.max_size as usize)
            .use_vid(self.vid == Switch::On);
        if let Some(label) = &self.pivot_label {
            cfg = cfg.pivot_label(label);
        }
        cfg
    }
}

fn write_to(path: &Option<PathBuf>, text: &str) -> Result<(), RunError> {
    match path {
        Some(path) => fs::write(path, text).map_err(|source| RunError::Write {
            path: path.clone(),
            source,
        }),
        None => io::stdout()
            .lock()
            .write_all(text.as_bytes())
            .map_err(RunError::Stdout),
    }
}

/// Loads the graph, mines, and writes patterns and statistics.
pub fn run(args: &Args) -> Result<(), RunError> {
    let g = load_graph_files(&args.vertex_labels, &args.edges)?;
    let cfg = args.config();
    let ratio_base = |universe: usize| args.min_ratio.map(|_| universe);
    let clock = StdClock::new();
    let (patterns, stats) = match args.mode {
        Mode::Full => {
            let r = mine_with_clock(&g, &cfg, &clock)?;
            let text = report::render_patterns(&g, r.patterns(), ratio_base(r.universe_size));
            (text, report::render_stats(&r))
        }
        Mode::Paths => {
            let (universe, tau) = cfg.resolve(&g)?;
            let search = search_paths(&g, tau, cfg.max_size, &universe, cfg.use_vid)?;
            let millis = clock.now_millis();
            let found = report::path_patterns(&search, false);
            let text = report::render_patterns(&g, &found, ratio_base(universe.len()));
            (
                text,
                report::render_path_stats(tau, universe.len(), &search, &found, millis),
            )
        }
    };
    write_to(&args.output, &patterns)?;
    if args.stats.is_some() {
        write_to(&args.stats, &stats)?;
    }
    Ok(())
}
