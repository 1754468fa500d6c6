//! Frequent neighborhood mining over a single large labeled multigraph.
//!
//! A neighborhood pattern is a small labeled graph with one distinguished
//! vertex, the pivot. Its support in a database graph is the number of
//! database vertices the pivot can be mapped to by an injective, label- and
//! edge-preserving map. Support counts pivots rather than embeddings, which
//! keeps it anti-monotone under the sub-pattern relation.
//!
//! The crate is `no_std` and only needs `alloc`. File formats, the CLI and
//! wall-clock timing live in the `fnm` companion crate.
#![no_std]
#![forbid(unsafe_code)]

extern crate alloc;

pub mod builder;
pub mod graph;
pub mod iso;
pub mod miner;
pub mod oracle;
pub mod pattern;
mod vid;

pub use builder::{
    frequent_paths, search_paths, traverse_next_steps, PathError, PathPattern, PathSearch, PathStep,
};
pub use graph::{Direction, ELabel, GraphBuilder, GraphError, LabeledGraph, VLabel, Vid, Vocab};
pub use iso::{embeddings_between, isomorphic, matches, pivoted_subiso_at, Embedding, Matcher};
pub use miner::{
    join, mine, mine_with_clock, vid_prune, Clock, LevelStats, MinedPattern, MiningConfig,
    MiningError, MiningResult, NoClock, Threshold,
};
pub use pattern::{
    NeighborhoodPattern, PatternEdge, PatternElement, PatternError, PatternShape, Removal, PIVOT,
};
pub use vid::VidList;
