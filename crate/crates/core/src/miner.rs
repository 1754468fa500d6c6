//! Level-wise join/verify mining of frequent neighborhood patterns.
//!
//! Level 1 is seeded with the size-1 frequent paths. Each later level joins
//! every pair `(i, j)`, `i <= j`, of the previous level, deduplicates the
//! candidates, verifies their support, and adds the frequent paths of the
//! new size, which joins can never produce.
//!
//! With VID lists enabled a pair is skipped when the intersection of its two
//! match lists is already below the threshold, and surviving candidates are
//! verified only against that intersection.

use alloc::collections::BTreeMap;
use alloc::string::String;
use alloc::vec::Vec;
use core::fmt;

use crate::builder::{search_paths, PathError};
use crate::graph::LabeledGraph;
use crate::iso::{pattern_as_graph, Matcher};
use crate::pattern::{NeighborhoodPattern, PatternEdge, PatternElement, PatternShape, PIVOT};
use crate::vid::VidList;

#[derive(Copy, Clone, Debug, PartialEq)]
pub enum Threshold {
    /// Absolute number of matched pivots.
    Count(usize),
    /// Fraction of the pivot universe, rounded up to a count.
    Ratio(f64),
}

#[derive(Clone, Debug, PartialEq)]
pub struct MiningConfig {
    pub threshold: Threshold,
    /// Restricts pivots (and the ratio denominator) to vertices with this label.
    pub pivot_label: Option<String>,
    pub max_size: usize,
    pub use_vid: bool,
    pub retain_vidlists: bool,
}

impl MiningConfig {
    pub fn new(threshold: Threshold) -> Self {
        MiningConfig {
            threshold,
            pivot_label: None,
            max_size: 4,
            use_vid: true,
            retain_vidlists: false,
        }
    }

    pub fn count(tau: usize) -> Self {
        Self::new(Threshold::Count(tau))
    }

    pub fn ratio(ratio: f64, pivot_label: &str) -> Self {
        Self::new(Threshold::Ratio(ratio)).pivot_label(pivot_label)
    }

    pub fn pivot_label(mut self, label: &str) -> Self {
        self.pivot_label = Some(String::from(label));
        self
    }

    pub fn max_size(mut self, max_size: usize) -> Self {
        self.max_size = max_size;
        self
    }

    pub fn use_vid(mut self, on: bool) -> Self {
        self.use_vid = on;
        self
    }

    pub fn retain_vidlists(mut self, on: bool) -> Self {
        self.retain_vidlists = on;
        self
    }

    /// The pivot universe and the absolute threshold over it.
    pub fn resolve(&self, g: &LabeledGraph) -> Result<(VidList, usize), MiningError> {
        if self.max_size == 0 {
            return Err(MiningError::ZeroMaxSize);
        }
        let universe = match &self.pivot_label {
            Some(name) => g
                .vlabel(name)
                .map(|l| g.vertices_with_label(l).clone())
                .ok_or_else(|| MiningError::UnknownPivotLabel(name.clone()))?,
            None => g.all_vertices(),
        };
        let tau = match self.threshold {
            Threshold::Count(0) => return Err(MiningError::ZeroThreshold),
            Threshold::Count(t) => t,
            Threshold::Ratio(r) if !(r > 0.0 && r <= 1.0) => {
                return Err(MiningError::RatioOutOfRange(r))
            }
            Threshold::Ratio(r) => ratio_to_count(r, universe.len()),
        };
        Ok((universe, tau))
    }
}

/// `ceil(ratio * n)`, at least 1. A small slack absorbs products like
/// `0.7 * 10 = 7.000000000000001`.
fn ratio_to_count(ratio: f64, n: usize) -> usize {
    let exact = ratio * n as f64;
    let mut t = exact as usize;
    if (t as f64) < exact - 1e-9 {
        t += 1;
    }
    t.max(1)
}

#[derive(Clone, Debug, PartialEq)]
pub enum MiningError {
    ZeroThreshold,
    ZeroMaxSize,
    RatioOutOfRange(f64),
    UnknownPivotLabel(String),
    SizeMismatch { left: usize, right: usize },
    EmptyPattern,
}

impl fmt::Display for MiningError {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        match self {
            MiningError::ZeroThreshold => f.write_str("minimum support must be at least 1"),
            MiningError::ZeroMaxSize => f.write_str("maximum pattern size must be at least 1"),
            MiningError::RatioOutOfRange(r) => write!(f, "support ratio {r} is not in (0, 1]"),
            MiningError::UnknownPivotLabel(l) => write!(f, "unknown pivot label `{l}`"),
            MiningError::SizeMismatch { left, right } => {
                write!(f, "cannot join patterns of sizes {left} and {right}")
            }
            MiningError::EmptyPattern => f.write_str("cannot join empty patterns"),
        }
    }
}

impl core::error::Error for MiningError {}

impl From<PathError> for MiningError {
    fn from(e: PathError) -> Self {
        match e {
            PathError::ZeroThreshold | PathError::LabelNotLast => MiningError::ZeroThreshold,
        }
    }
}

/// Millisecond time source; the core has no clock of its own.
pub trait Clock {
    fn now_millis(&self) -> u64;
}

/// Reports zero for every reading.
#[derive(Copy, Clone, Debug, Default)]
pub struct NoClock;

impl Clock for NoClock {
    fn now_millis(&self) -> u64 {
        0
    }
}

#[derive(Clone, Debug, PartialEq, Eq)]
pub struct MinedPattern {
    /// Canonically numbered representative.
    pub pattern: NeighborhoodPattern,
    pub support: usize,
    pub key: String,
    pub vids: Option<VidList>,
}

#[derive(Clone, Debug, Default, PartialEq, Eq)]
pub struct LevelStats {
    pub size: usize,
    /// Pattern pairs considered for joining.
    pub pairs: usize,
    /// Pairs skipped because their VID intersection was below the threshold.
    pub pruned: usize,
    /// Distinct join candidates.
    pub candidates: usize,
    /// Candidates whose support was counted.
    pub verified: usize,
    /// Single-vertex isomorphism tests spent on verification.
    pub checks: usize,
    pub frequent: usize,
    /// Frequent paths of this size added without a join.
    pub paths: usize,
    pub millis: u64,
}

#[derive(Clone, Debug, Default, PartialEq, Eq)]
pub struct MiningResult {
    pub tau: usize,
    pub universe_size: usize,
    /// `levels[k - 1]` holds the frequent patterns of size `k`, ordered by
    /// descending support, then canonical key.
    pub levels: Vec<Vec<MinedPattern>>,
    pub stats: Vec<LevelStats>,
    pub path_traversals: usize,
    pub path_millis: u64,
}

impl MiningResult {
    pub fn patterns(&self) -> impl Iterator<Item = &MinedPattern> {
        self.levels.iter().flatten()
    }

    pub fn len(&self) -> usize {
        self.levels.iter().map(Vec::len).sum()
    }

    pub fn is_empty(&self) -> bool {
        self.len() == 0
    }

    pub fn get(&self, key: &str) -> Option<&MinedPattern> {
        self.patterns().find(|m| m.key == key)
    }

    pub fn find(&self, p: &NeighborhoodPattern) -> Option<&MinedPattern> {
        let level = self.levels.get(p.size().checked_sub(1)?)?;
        let key = p.canonical_key();
        level.iter().find(|m| m.key == key)
    }

    pub fn shape_counts(&self) -> BTreeMap<PatternShape, usize> {
        let mut out = BTreeMap::new();
        for m in self.patterns() {
            *out.entry(m.pattern.shape()).or_insert(0) += 1;
        }
        out
    }
}

/// Intersection of two match lists if it still reaches `tau`.
pub fn vid_prune(a: &VidList, b: &VidList, tau: usize) -> Option<VidList> {
    let both = a.intersect(b);
    (both.len() >= tau).then_some(both)
}

/// Candidates of size `k` from two patterns of size `k - 1`, keyed and
/// canonically numbered, sorted by key.
pub fn join(
    p1: &NeighborhoodPattern,
    p2: &NeighborhoodPattern,
) -> Result<Vec<NeighborhoodPattern>, MiningError> {
    if p1.size() != p2.size() {
        return Err(MiningError::SizeMismatch {
            left: p1.size(),
            right: p2.size(),
        });
    }
    if p1.is_empty() {
        return Err(MiningError::EmptyPattern);
    }
    let mut out = BTreeMap::new();
    join_prepared(&JoinSide::new(p1), &JoinSide::new(p2), &mut |c| {
        let (canon, key) = c.canonical_form();
        out.entry(key).or_insert(canon);
    });
    Ok(out.into_values().collect())
}

/// One element deletion from a join's first input.
struct Cut {
    element: PatternElement,
    vertex_map: Vec<Option<usize>>,
    matcher: Matcher,
}

/// Per-pattern state reused across every pair the pattern takes part in.
struct JoinSide<'a> {
    pattern: &'a NeighborhoodPattern,
    target: LabeledGraph,
    cuts: Vec<Cut>,
}

impl<'a> JoinSide<'a> {
    fn new(pattern: &'a NeighborhoodPattern) -> Self {
        let cuts = pattern
            .elements()
            .map(|element| {
                let removal = pattern
                    .remove_element(&element)
                    .expect("element comes from pattern");
                Cut {
                    element,
                    matcher: Matcher::new(&removal.pattern),
                    vertex_map: removal.vertex_map,
                }
            })
            .collect();
        JoinSide {
            pattern,
            target: pattern_as_graph(pattern),
            cuts,
        }
    }
}

/// Deletes each element of `first`, embeds the remainder into `second` every
/// possible way, and re-inserts the deleted element through the embedding.
/// An edge whose endpoint vanished with the deletion is re-attached to each
/// vertex of `second` the embedding left unused and to one fresh vertex, so
/// every result contains both inputs. Emits duplicates.
fn join_prepared(
    first: &JoinSide<'_>,
    second: &JoinSide<'_>,
    emit: &mut dyn FnMut(NeighborhoodPattern),
) {
    let p2 = second.pattern;
    let n2 = p2.vertex_count();
    let mut push = |e: PatternElement| {
        if let Some(c) = p2.with_element(e) {
            if c.is_connected() {
                emit(c);
            }
        }
    };
    for cut in &first.cuts {
        let embeddings = cut.matcher.embeddings_at(&second.target, PIVOT as u32);
        let image = |emb: &[u32], v: usize| cut.vertex_map[v].map(|x| emb[x] as usize);
        let free_ends = |emb: &[u32]| {
            let used: Vec<usize> = emb.iter().map(|&x| x as usize).collect();
            (0..=n2).filter(move |v| !used.contains(v))
        };
        for emb in &embeddings {
            let emb = emb.as_slice();
            match cut.element {
                PatternElement::Label { vertex, label } => {
                    let vertex = image(emb, vertex).expect("labeled vertices survive");
                    push(PatternElement::Label { vertex, label });
                }
                PatternElement::Edge(edge) => match (image(emb, edge.src), image(emb, edge.dst)) {
                    (Some(src), Some(dst)) => {
                        push(PatternElement::Edge(PatternEdge::new(src, dst, edge.label)))
                    }
                    (Some(src), None) => {
                        for dst in free_ends(emb) {
                            push(PatternElement::Edge(PatternEdge::new(src, dst, edge.label)));
                        }
                    }
                    (None, Some(dst)) => {
                        for src in free_ends(emb) {
                            push(PatternElement::Edge(PatternEdge::new(src, dst, edge.label)));
                        }
                    }
                    // both endpoints gone means the first input was disconnected
                    (None, None) => {}
                },
            }
        }
    }
}

struct Frequent {
    pattern: NeighborhoodPattern,
    key: String,
    vids: VidList,
}

struct Candidate {
    pattern: NeighborhoodPattern,
    key: String,
    // None: verify against the whole universe
    restrict: Option<VidList>,
}

pub fn mine(g: &LabeledGraph, cfg: &MiningConfig) -> Result<MiningResult, MiningError> {
    mine_with_clock(g, cfg, &NoClock)
}

pub fn mine_with_clock(
    g: &LabeledGraph,
    cfg: &MiningConfig,
    clock: &dyn Clock,
) -> Result<MiningResult, MiningError> {
    let (universe, tau) = cfg.resolve(g)?;
    let mut result = MiningResult {
        tau,
        universe_size: universe.len(),
        ..Default::default()
    };

    let started = clock.now_millis();
    let search = search_paths(g, tau, cfg.max_size, &universe, cfg.use_vid)?;
    result.path_traversals = search.traversals;
    result.path_millis = clock.now_millis().saturating_sub(started);

    let mut paths_by_size: Vec<BTreeMap<String, Frequent>> =
        (0..cfg.max_size).map(|_| BTreeMap::new()).collect();
    for (path, vids) in search.paths {
        let (pattern, key) = path.to_pattern().canonical_form();
        paths_by_size[path.size() - 1].insert(key.clone(), Frequent { pattern, key, vids });
    }

    let mut levels: Vec<Vec<Frequent>> = Vec::new();
    let first: Vec<Frequent> = core::mem::take(&mut paths_by_size[0])
        .into_values()
        .collect();
    result.stats.push(LevelStats {
        size: 1,
        frequent: first.len(),
        paths: first.len(),
        ..Default::default()
    });
    levels.push(first);

    for k in 2..=cfg.max_size {
        let prev = &levels[k - 2];
        if prev.is_empty() {
            break;
        }
        let level_start = clock.now_millis();
        let mut stats = LevelStats {
            size: k,
            ..Default::default()
        };

        let sides: Vec<JoinSide<'_>> = prev.iter().map(|f| JoinSide::new(&f.pattern)).collect();
        let mut candidates: Vec<Candidate> = Vec::new();
        // exact join outputs first, canonical keys only for unseen ones
        let mut literal: BTreeMap<NeighborhoodPattern, usize> = BTreeMap::new();
        let mut by_key: BTreeMap<String, usize> = BTreeMap::new();
        for i in 0..prev.len() {
            for j in i..prev.len() {
                stats.pairs += 1;
                let restrict = if cfg.use_vid {
                    match vid_prune(&prev[i].vids, &prev[j].vids, tau) {
                        Some(both) => Some(both),
                        None => {
                            stats.pruned += 1;
                            continue;
                        }
                    }
                } else {
                    None
                };
                join_prepared(&sides[i], &sides[j], &mut |c| {
                    let idx = match literal.get(&c) {
                        Some(&idx) => idx,
                        None => {
                            let (pattern, key) = c.canonical_form();
                            let idx = *by_key.entry(key).or_insert_with_key(|key| {
                                candidates.push(Candidate {
                                    pattern,
                                    key: key.clone(),
                                    restrict: restrict.clone(),
                                });
                                candidates.len() - 1
                            });
                            literal.insert(c, idx);
                            idx
                        }
                    };
                    let slot = &mut candidates[idx].restrict;
                    if let (Some(old), Some(new)) = (slot.as_ref(), restrict.as_ref()) {
                        if !new.is_superset_of(old) {
                            *slot = Some(old.intersect(new));
                        }
                    }
                });
            }
        }
        stats.candidates = candidates.len();

        let mut known_paths = core::mem::take(&mut paths_by_size[k - 1]);
        let mut level: BTreeMap<String, Frequent> = BTreeMap::new();
        for Candidate {
            pattern,
            key,
            restrict,
        } in candidates
        {
            if let Some(path) = known_paths.remove(&key) {
                level.insert(key, path);
                continue;
            }
            let scope = restrict.as_ref().unwrap_or(&universe);
            stats.verified += 1;
            stats.checks += scope.len();
            if scope.len() < tau {
                continue;
            }
            let m = Matcher::new(&pattern);
            let vids = VidList::from_sorted(
                scope
                    .iter()
                    .copied()
                    .filter(|&v| m.matches_at(g, v))
                    .collect(),
            );
            if vids.len() >= tau {
                level.insert(key.clone(), Frequent { pattern, key, vids });
            }
        }
        stats.paths = known_paths.len();
        for (key, path) in known_paths {
            level.insert(key, path);
        }
        stats.frequent = level.len();
        stats.millis = clock.now_millis().saturating_sub(level_start);
        result.stats.push(stats);
        levels.push(level.into_values().collect());
    }

    result.levels = levels
        .into_iter()
        .map(|level| {
            let mut out: Vec<MinedPattern> = level
                .into_iter()
                .map(|f| MinedPattern {
                    support: f.vids.len(),
                    pattern: f.pattern,
                    key: f.key,
                    vids: cfg.retain_vidlists.then_some(f.vids),
                })
                .collect();
            out.sort_by(|a, b| b.support.cmp(&a.support).then_with(|| a.key.cmp(&b.key)));
            out
        })
        .collect();
    Ok(result)
}
