//! Brute-force reference implementations and shared fixtures.
//!
//! Nothing here reuses the search code of [`crate::iso`], [`crate::builder`]
//! or [`crate::miner`]; only the graph and pattern data types are shared.
//! Everything is exponential and guarded by a vertex-count limit.

use alloc::collections::BTreeMap;
use alloc::format;
use alloc::string::String;
use alloc::vec::Vec;
use core::fmt;

use crate::graph::{Direction, ELabel, GraphBuilder, LabeledGraph, VLabel, Vid};
use crate::pattern::{NeighborhoodPattern, PatternEdge, PatternElement};
use crate::vid::VidList;

/// Largest database the naive routines accept.
pub const NAIVE_VERTEX_LIMIT: usize = 200;

#[derive(Clone, Debug, PartialEq, Eq)]
pub enum OracleError {
    GraphTooLarge { vertices: usize, limit: usize },
    ZeroThreshold,
}

impl fmt::Display for OracleError {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        match self {
            OracleError::GraphTooLarge { vertices, limit } => {
                write!(
                    f,
                    "graph has {vertices} vertices, naive oracle accepts at most {limit}"
                )
            }
            OracleError::ZeroThreshold => f.write_str("minimum support must be at least 1"),
        }
    }
}

impl core::error::Error for OracleError {}

fn guard(g: &LabeledGraph) -> Result<(), OracleError> {
    if g.vertex_count() > NAIVE_VERTEX_LIMIT {
        return Err(OracleError::GraphTooLarge {
            vertices: g.vertex_count(),
            limit: NAIVE_VERTEX_LIMIT,
        });
    }
    Ok(())
}

/// Four authors and eight papers.
///
/// `a1` writes p1..p3, `a2` writes p4, p5, `a3` writes p6, p7, `a4` writes
/// p8; citations are p2->p1, p5->p4, p7->p3, p8->p6. Every author has at
/// least one paper citing another, three have at least two papers and a
/// cited paper, and only a1 and a2 cite themselves.
pub fn toy_db() -> LabeledGraph {
    let mut b = GraphBuilder::new();
    for a in ["a1", "a2", "a3", "a4"] {
        b.add_named_label(a, "Author").unwrap();
    }
    for i in 1..=8 {
        b.add_named_label(&format!("p{i}"), "Paper").unwrap();
    }
    let writes = [
        ("a1", "p1"),
        ("a1", "p2"),
        ("a1", "p3"),
        ("a2", "p4"),
        ("a2", "p5"),
        ("a3", "p6"),
        ("a3", "p7"),
        ("a4", "p8"),
    ];
    for (a, p) in writes {
        b.add_named_edge(a, p, "writes").unwrap();
    }
    for (s, d) in [("p2", "p1"), ("p5", "p4"), ("p7", "p3"), ("p8", "p6")] {
        b.add_named_edge(s, d, "cites").unwrap();
    }
    b.build()
}

fn toy_labels(g: &LabeledGraph) -> (ELabel, ELabel) {
    (
        g.elabel("writes").expect("writes"),
        g.elabel("cites").expect("cites"),
    )
}

/// Pivot writes two papers.
pub fn two_papers(g: &LabeledGraph) -> NeighborhoodPattern {
    let (w, _) = toy_labels(g);
    NeighborhoodPattern::new(
        alloc::vec![Vec::new(); 3],
        [PatternEdge::new(0, 1, w), PatternEdge::new(0, 2, w)],
    )
    .unwrap()
}

/// Pivot writes two papers, one citing the other.
pub fn self_citation(g: &LabeledGraph) -> NeighborhoodPattern {
    let (w, c) = toy_labels(g);
    NeighborhoodPattern::new(
        alloc::vec![Vec::new(); 3],
        [
            PatternEdge::new(0, 1, w),
            PatternEdge::new(0, 2, w),
            PatternEdge::new(2, 1, c),
        ],
    )
    .unwrap()
}

/// Pivot writes a paper that some other paper cites.
pub fn has_cited_paper(g: &LabeledGraph) -> NeighborhoodPattern {
    let (w, c) = toy_labels(g);
    NeighborhoodPattern::new(
        alloc::vec![Vec::new(); 3],
        [PatternEdge::new(0, 1, w), PatternEdge::new(2, 1, c)],
    )
    .unwrap()
}

/// Pivot writes a paper that cites some other paper.
pub fn paper_citing_another(g: &LabeledGraph) -> NeighborhoodPattern {
    let (w, c) = toy_labels(g);
    NeighborhoodPattern::new(
        alloc::vec![Vec::new(); 3],
        [PatternEdge::new(0, 1, w), PatternEdge::new(1, 2, c)],
    )
    .unwrap()
}

/// Tries every injective assignment of non-pivot pattern vertices (in index
/// order, over all database vertices) and checks each label and edge as soon
/// as its vertices are assigned.
fn naive_match_at(p: &NeighborhoodPattern, g: &LabeledGraph, v: Vid) -> bool {
    fn assign(p: &NeighborhoodPattern, g: &LabeledGraph, map: &mut Vec<Vid>) -> bool {
        let i = map.len() - 1;
        let x = map[i];
        if !p.labels(i).iter().all(|&l| g.has_label(x, l)) {
            return false;
        }
        for e in p.edges() {
            if e.src <= i
                && e.dst <= i
                && (e.src == i || e.dst == i)
                && !g.has_edge(map[e.src], map[e.dst], e.label)
            {
                return false;
            }
        }
        if map.len() == p.vertex_count() {
            return true;
        }
        for y in 0..g.vertex_count() as Vid {
            if map.contains(&y) {
                continue;
            }
            map.push(y);
            if assign(p, g, map) {
                return true;
            }
            map.pop();
        }
        false
    }
    if p.vertex_count() > g.vertex_count() {
        return false;
    }
    let mut map = alloc::vec![v];
    assign(p, g, &mut map)
}

fn naive_matches_in(p: &NeighborhoodPattern, g: &LabeledGraph, universe: &VidList) -> VidList {
    VidList::from_sorted(
        universe
            .iter()
            .copied()
            .filter(|&v| naive_match_at(p, g, v))
            .collect(),
    )
}

/// Every database vertex `p` matches, by exhaustive assignment.
pub fn naive_matches(p: &NeighborhoodPattern, g: &LabeledGraph) -> Result<VidList, OracleError> {
    guard(g)?;
    Ok(naive_matches_in(p, g, &g.all_vertices()))
}

/// All connected patterns up to `max_size` elements whose support within
/// `universe` is at least `tau`, keyed by canonical key.
///
/// Grows patterns one element at a time from every size-1 pattern: a new
/// label on any vertex, a new edge between any two vertices, or a new edge to
/// a fresh vertex. Every connected pattern has a connected sub-pattern one
/// element smaller, and support never grows with size, so discarding
/// infrequent patterns loses nothing.
pub fn enumerate_patterns(
    g: &LabeledGraph,
    max_size: usize,
    tau: usize,
    universe: &VidList,
) -> Result<BTreeMap<String, (NeighborhoodPattern, VidList)>, OracleError> {
    guard(g)?;
    if tau == 0 {
        return Err(OracleError::ZeroThreshold);
    }
    let vlabels: Vec<VLabel> = (0..g.vlabel_id_count() as u32).map(VLabel).collect();
    let elabels: Vec<ELabel> = (0..g.elabel_id_count() as u32).map(ELabel).collect();

    let mut result = BTreeMap::new();
    let mut level: BTreeMap<String, NeighborhoodPattern> = BTreeMap::new();
    if max_size == 0 {
        return Ok(result);
    }
    for &l in &vlabels {
        let p = NeighborhoodPattern::single_label(l);
        level.insert(p.canonical_key(), p);
    }
    for &l in &elabels {
        for dir in [Direction::Out, Direction::In] {
            let p = NeighborhoodPattern::single_edge(dir, l);
            level.insert(p.canonical_key(), p);
        }
    }
    for size in 1..=max_size {
        let mut frequent = Vec::new();
        for (key, p) in level {
            let m = naive_matches_in(&p, g, universe);
            if m.len() >= tau {
                frequent.push(p.clone());
                result.insert(key, (p, m));
            }
        }
        if size == max_size {
            break;
        }
        level = BTreeMap::new();
        for p in &frequent {
            let n = p.vertex_count();
            let mut grow = |e: PatternElement| {
                if let Some(q) = p.with_element(e) {
                    level.entry(q.canonical_key()).or_insert(q);
                }
            };
            for v in 0..n {
                for &label in &vlabels {
                    grow(PatternElement::Label { vertex: v, label });
                }
            }
            for &label in &elabels {
                for s in 0..=n {
                    for d in 0..=n {
                        if s != d && (s < n || d < n) {
                            grow(PatternElement::Edge(PatternEdge::new(s, d, label)));
                        }
                    }
                }
            }
        }
    }
    Ok(result)
}

/// A subgraph-isomorphism instance recast as a pivoted one: a new pivot with
/// edges to every original vertex is added to each graph.
#[derive(Clone, Debug)]
pub struct ReducedInstance {
    pub pattern: NeighborhoodPattern,
    pub target: LabeledGraph,
    pub target_pivot: Vid,
}

/// Label-stripped reduction of "is `g1` a subgraph of `g2`" to "is
/// `<g1 + v1, v1>` pivoted-subgraph-isomorphic to `<g2 + v2, v2>`".
pub fn reduce_subiso(g1: &LabeledGraph, g2: &LabeledGraph) -> ReducedInstance {
    let e = ELabel(0);
    let n1 = g1.vertex_count();
    let mut edges: Vec<PatternEdge> = (1..=n1).map(|v| PatternEdge::new(0, v, e)).collect();
    edges.extend(
        g1.edges()
            .map(|(s, d, _)| PatternEdge::new(s as usize + 1, d as usize + 1, e)),
    );
    let pattern = NeighborhoodPattern::fragment(alloc::vec![Vec::new(); n1 + 1], edges)
        .expect("reduction never creates loops");

    let mut b = GraphBuilder::new();
    let originals: Vec<Vid> = (0..g2.vertex_count())
        .map(|i| b.vertex(&format!("v{i}")).unwrap())
        .collect();
    let pivot = b.vertex("pivot").unwrap();
    for &v in &originals {
        b.add_edge(pivot, v, "e").unwrap();
    }
    for (s, d, _) in g2.edges() {
        b.add_edge(originals[s as usize], originals[d as usize], "e")
            .unwrap();
    }
    ReducedInstance {
        pattern,
        target: b.build(),
        target_pivot: pivot,
    }
}

/// Plain (non-induced, directed, label-blind) subgraph isomorphism by trying
/// every injective vertex map.
pub fn brute_force_subiso(g1: &LabeledGraph, g2: &LabeledGraph) -> bool {
    fn linked(g: &LabeledGraph, s: Vid, d: Vid) -> bool {
        g.adjacent(s, Direction::Out).iter().any(|&(_, x)| x == d)
    }
    fn go(g1: &LabeledGraph, g2: &LabeledGraph, map: &mut Vec<Vid>) -> bool {
        if map.len() == g1.vertex_count() {
            return g1
                .edges()
                .all(|(s, d, _)| linked(g2, map[s as usize], map[d as usize]));
        }
        for y in 0..g2.vertex_count() as Vid {
            if !map.contains(&y) {
                map.push(y);
                if go(g1, g2, map) {
                    return true;
                }
                map.pop();
            }
        }
        false
    }
    go(g1, g2, &mut Vec::new())
}
