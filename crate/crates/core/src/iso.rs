//! Pivoted subgraph isomorphism.
//!
//! A pattern matches a database vertex `v` when some injective map from
//! pattern vertices to database vertices sends the pivot to `v` and
//! preserves every vertex label and every directed labeled edge. The search
//! is a depth-first backtracking over a fixed vertex order in which each
//! vertex (where possible) is adjacent to an earlier one; candidates come
//! from the adjacency list of the already-mapped neighbor with the fewest
//! matching edges.

use alloc::vec::Vec;

use crate::graph::{Direction, ELabel, LabeledGraph, VLabel, Vid, Vocab};
use crate::pattern::{NeighborhoodPattern, PIVOT};
use crate::vid::VidList;

/// Pattern vertex -> target vertex; index 0 is the pivot.
#[derive(Clone, Debug, PartialEq, Eq, PartialOrd, Ord, Hash)]
pub struct Embedding(pub Vec<Vid>);

impl Embedding {
    pub fn get(&self, v: usize) -> Vid {
        self.0[v]
    }

    pub fn as_slice(&self) -> &[Vid] {
        &self.0
    }
}

const UNMAPPED: Vid = Vid::MAX;

#[derive(Clone, Debug)]
struct Step {
    vertex: usize,
    labels: Vec<VLabel>,
    // (earlier pattern vertex, direction seen from that vertex, label)
    back_edges: Vec<(usize, Direction, ELabel)>,
}

/// Precomputed search plan for one pattern, reusable across target vertices.
#[derive(Clone, Debug)]
pub struct Matcher {
    vertex_count: usize,
    pivot_labels: Vec<VLabel>,
    steps: Vec<Step>,
}

impl Matcher {
    pub fn new(p: &NeighborhoodPattern) -> Matcher {
        let n = p.vertex_count();
        let mut placed = alloc::vec![false; n];
        placed[PIVOT] = true;
        let mut steps = Vec::with_capacity(n.saturating_sub(1));
        for _ in 1..n {
            // most edges into the placed set, then most labels, then lowest id
            let next = (0..n)
                .filter(|&v| !placed[v])
                .max_by_key(|&v| {
                    let links = p
                        .edges()
                        .iter()
                        .filter(|e| e.other(v).is_some_and(|w| placed[w]))
                        .count();
                    (links, p.labels(v).len(), core::cmp::Reverse(v))
                })
                .unwrap();
            let back_edges = p
                .edges()
                .iter()
                .filter_map(|e| {
                    if e.dst == next && placed[e.src] {
                        Some((e.src, Direction::Out, e.label))
                    } else if e.src == next && placed[e.dst] {
                        Some((e.dst, Direction::In, e.label))
                    } else {
                        None
                    }
                })
                .collect();
            steps.push(Step {
                vertex: next,
                labels: p.labels(next).to_vec(),
                back_edges,
            });
            placed[next] = true;
        }
        Matcher {
            vertex_count: n,
            pivot_labels: p.labels(PIVOT).to_vec(),
            steps,
        }
    }

    /// Whether the pattern matches `v`; stops at the first embedding.
    pub fn matches_at(&self, g: &LabeledGraph, v: Vid) -> bool {
        let mut found = false;
        self.run(g, v, &mut |_| {
            found = true;
            false
        });
        found
    }

    /// Every embedding with the pivot on `v`.
    pub fn embeddings_at(&self, g: &LabeledGraph, v: Vid) -> Vec<Embedding> {
        let mut out = Vec::new();
        self.run(g, v, &mut |m| {
            out.push(Embedding(m.to_vec()));
            true
        });
        out
    }

    fn run(&self, g: &LabeledGraph, v: Vid, visit: &mut dyn FnMut(&[Vid]) -> bool) {
        if (v as usize) >= g.vertex_count() || self.vertex_count > g.vertex_count() {
            return;
        }
        if !self.pivot_labels.iter().all(|&l| g.has_label(v, l)) {
            return;
        }
        let mut map = alloc::vec![UNMAPPED; self.vertex_count];
        map[PIVOT] = v;
        self.extend(g, 0, &mut map, visit);
    }

    // returns false once the visitor asked to stop
    fn extend(
        &self,
        g: &LabeledGraph,
        depth: usize,
        map: &mut [Vid],
        visit: &mut dyn FnMut(&[Vid]) -> bool,
    ) -> bool {
        let Some(step) = self.steps.get(depth) else {
            return visit(map);
        };
        let mut try_candidate = |x: Vid, map: &mut [Vid]| -> bool {
            if map.contains(&x) {
                return true;
            }
            if !step.labels.iter().all(|&l| g.has_label(x, l)) {
                return true;
            }
            let edges_ok = step.back_edges.iter().all(|&(w, dir, l)| match dir {
                Direction::Out => g.has_edge(map[w], x, l),
                Direction::In => g.has_edge(x, map[w], l),
            });
            if !edges_ok {
                return true;
            }
            map[step.vertex] = x;
            let go_on = self.extend(g, depth + 1, map, visit);
            map[step.vertex] = UNMAPPED;
            go_on
        };

        if step.back_edges.is_empty() {
            // disconnected fragment vertex: any unused target vertex
            let pool: &[Vid] = match step
                .labels
                .iter()
                .map(|&l| g.vertices_with_label(l).as_slice())
                .min_by_key(|s| s.len())
            {
                Some(s) => s,
                None => {
                    for x in 0..g.vertex_count() as Vid {
                        if !try_candidate(x, map) {
                            return false;
                        }
                    }
                    return true;
                }
            };
            for &x in pool {
                if !try_candidate(x, map) {
                    return false;
                }
            }
            return true;
        }

        let &(anchor, dir, label) = step
            .back_edges
            .iter()
            .min_by_key(|&&(w, dir, l)| g.adjacent_with_label(map[w], dir, l).len())
            .unwrap();
        let adjacent = g.adjacent_with_label(map[anchor], dir, label);
        for &(_, x) in adjacent {
            if !try_candidate(x, map) {
                return false;
            }
        }
        true
    }
}

/// Whether `p` matches database vertex `v`.
pub fn pivoted_subiso_at(p: &NeighborhoodPattern, g: &LabeledGraph, v: Vid) -> bool {
    Matcher::new(p).matches_at(g, v)
}

/// The sublist of `candidates` that `p` matches.
pub fn matches(p: &NeighborhoodPattern, g: &LabeledGraph, candidates: &VidList) -> VidList {
    let m = Matcher::new(p);
    VidList::from_sorted(
        candidates
            .iter()
            .copied()
            .filter(|&v| m.matches_at(g, v))
            .collect(),
    )
}

/// Views a pattern as a database graph so the same search applies.
pub(crate) fn pattern_as_graph(p: &NeighborhoodPattern) -> LabeledGraph {
    let labels =
        (0..p.vertex_count()).flat_map(|v| p.labels(v).iter().map(move |&l| (v as Vid, l)));
    let edges = p
        .edges()
        .iter()
        .map(|e| (e.src as Vid, e.dst as Vid, e.label));
    LabeledGraph::from_parts(
        Vocab::new(),
        Vocab::new(),
        Vocab::new(),
        p.vertex_count(),
        labels,
        edges,
    )
}

/// All pivot-preserving embeddings of `from` (possibly a disconnected
/// fragment) into `into`.
pub fn embeddings_between(
    from: &NeighborhoodPattern,
    into: &NeighborhoodPattern,
) -> Vec<Embedding> {
    let target = pattern_as_graph(into);
    Matcher::new(from).embeddings_at(&target, PIVOT as Vid)
}

/// Pivoted isomorphism between two legal patterns.
///
/// With equal element counts and no isolated vertices, a single embedding
/// is necessarily a bijection on vertices and elements.
pub fn isomorphic(a: &NeighborhoodPattern, b: &NeighborhoodPattern) -> bool {
    if a.size() != b.size()
        || a.vertex_count() != b.vertex_count()
        || a.edge_count() != b.edge_count()
    {
        return false;
    }
    let target = pattern_as_graph(b);
    Matcher::new(a).matches_at(&target, PIVOT as Vid)
}
