//! Text output for mined patterns and run statistics.
//!
//! A pattern is written as `P <size> <support>` (plus the support ratio with
//! three decimals when a ratio base is given), followed by its `L <vertex>
//! <label>` and `E <src> <dst> <label>` lines. Vertex 0 is the pivot.

use std::fmt::Write as _;

use fnm_core::{LabeledGraph, MinedPattern, MiningResult, PathSearch, PatternShape, VidList};

/// Frequent paths as mined patterns, ordered like mining output: by size,
/// descending support, then canonical key.
pub fn path_patterns(search: &PathSearch, retain_vidlists: bool) -> Vec<MinedPattern> {
    let mut out: Vec<MinedPattern> = search
        .paths
        .iter()
        .map(|(path, vids): &(_, VidList)| {
            let (pattern, key) = path.to_pattern().canonical_form();
            MinedPattern {
                pattern,
                support: vids.len(),
                key,
                vids: retain_vidlists.then(|| vids.clone()),
            }
        })
        .collect();
    out.sort_by(|a, b| {
        (a.pattern.size(), b.support, &a.key).cmp(&(b.pattern.size(), a.support, &b.key))
    });
    out
}

pub fn render_pattern(
    out: &mut String,
    g: &LabeledGraph,
    m: &MinedPattern,
    ratio_base: Option<usize>,
) {
    write!(out, "P {} {}", m.pattern.size(), m.support).unwrap();
    if let Some(base) = ratio_base {
        write!(out, " {:.3}", m.support as f64 / base.max(1) as f64).unwrap();
    }
    out.push('\n');
    m.pattern.write_body(out, g).unwrap();
}

/// Every pattern in order, one blank line between patterns.
pub fn render_patterns<'a>(
    g: &LabeledGraph,
    patterns: impl IntoIterator<Item = &'a MinedPattern>,
    ratio_base: Option<usize>,
) -> String {
    let mut out = String::new();
    for (i, m) in patterns.into_iter().enumerate() {
        if i > 0 {
            out.push('\n');
        }
        render_pattern(&mut out, g, m, ratio_base);
    }
    out
}

fn render_shapes<'a>(out: &mut String, patterns: impl IntoIterator<Item = &'a MinedPattern>) {
    let (mut path, mut tree, mut cyclic) = (0, 0, 0);
    for m in patterns {
        match m.pattern.shape() {
            PatternShape::Path => path += 1,
            PatternShape::Tree => tree += 1,
            PatternShape::Cyclic => cyclic += 1,
        }
    }
    let total = (path + tree + cyclic).max(1) as f64;
    writeln!(
        out,
        "shapes path={path} tree={tree} cyclic={cyclic} path_pct={:.1} tree_pct={:.1} cyclic_pct={:.1}",
        100.0 * path as f64 / total,
        100.0 * tree as f64 / total,
        100.0 * cyclic as f64 / total,
    )
    .unwrap();
}

/// Threshold line, path-building line, one line per joined level and the
/// shape split of the output.
pub fn render_stats(r: &MiningResult) -> String {
    let mut out = String::new();
    writeln!(
        out,
        "tau={} universe={} patterns={}",
        r.tau,
        r.universe_size,
        r.len()
    )
    .unwrap();
    writeln!(
        out,
        "paths traversals={} millis={}",
        r.path_traversals, r.path_millis
    )
    .unwrap();
    for s in &r.stats {
        writeln!(
            out,
            "level={} pairs={} candidates={} pruned={} verified={} checks={} frequent={} paths={} millis={}",
            s.size, s.pairs, s.candidates, s.pruned, s.verified, s.checks, s.frequent, s.paths, s.millis
        )
        .unwrap();
    }
    render_shapes(&mut out, r.patterns());
    out
}

/// Stats for a paths-only run.
pub fn render_path_stats(
    tau: usize,
    universe_size: usize,
    search: &PathSearch,
    patterns: &[MinedPattern],
    millis: u64,
) -> String {
    let mut out = String::new();
    writeln!(
        out,
        "tau={tau} universe={universe_size} patterns={}",
        patterns.len()
    )
    .unwrap();
    writeln!(
        out,
        "paths traversals={} millis={millis}",
        search.traversals
    )
    .unwrap();
    render_shapes(&mut out, patterns);
    out
}
