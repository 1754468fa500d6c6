//! Neighborhood patterns: small pivoted labeled graphs.
//!
//! Local vertex 0 is always the pivot. A pattern's size is the number of its
//! elements, i.e. vertex labels plus edges. Removing an element deletes any
//! non-pivot vertex left without labels and edges and compacts the remaining
//! vertex IDs, so the result may be a disconnected fragment; callers decide
//! whether that is legal.

use alloc::format;
use alloc::string::String;
use alloc::vec::Vec;
use core::fmt::{self, Write as _};
use core::hash::{Hash, Hasher};

use rustc_hash::FxHasher;

use crate::graph::{Direction, ELabel, LabeledGraph, VLabel};

pub const PIVOT: usize = 0;

#[derive(Copy, Clone, Debug, PartialEq, Eq, PartialOrd, Ord, Hash)]
pub struct PatternEdge {
    pub src: usize,
    pub dst: usize,
    pub label: ELabel,
}

impl PatternEdge {
    pub fn new(src: usize, dst: usize, label: ELabel) -> Self {
        PatternEdge { src, dst, label }
    }

    pub fn touches(&self, v: usize) -> bool {
        self.src == v || self.dst == v
    }

    /// The endpoint opposite `v`, if `v` is an endpoint.
    pub fn other(&self, v: usize) -> Option<usize> {
        if self.src == v {
            Some(self.dst)
        } else if self.dst == v {
            Some(self.src)
        } else {
            None
        }
    }
}

/// A vertex label or a labeled edge.
#[derive(Copy, Clone, Debug, PartialEq, Eq, PartialOrd, Ord, Hash)]
pub enum PatternElement {
    Label { vertex: usize, label: VLabel },
    Edge(PatternEdge),
}

#[derive(Clone, Debug, PartialEq, Eq)]
pub enum PatternError {
    MissingElement(PatternElement),
    VertexOutOfRange(usize),
    Loop(usize),
    IsolatedVertex(usize),
    Disconnected,
    Empty,
}

impl fmt::Display for PatternError {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        match self {
            PatternError::MissingElement(e) => write!(f, "element {e:?} is not in the pattern"),
            PatternError::VertexOutOfRange(v) => write!(f, "vertex {v} is out of range"),
            PatternError::Loop(v) => write!(f, "loop on vertex {v}"),
            PatternError::IsolatedVertex(v) => {
                write!(f, "vertex {v} has neither labels nor edges")
            }
            PatternError::Disconnected => f.write_str("pattern is not connected to its pivot"),
            PatternError::Empty => f.write_str("pattern has no elements"),
        }
    }
}

impl core::error::Error for PatternError {}

/// Topological class used when summarizing mining output.
#[derive(Copy, Clone, Debug, PartialEq, Eq, PartialOrd, Ord, Hash)]
pub enum PatternShape {
    Path,
    Tree,
    Cyclic,
}

impl PatternShape {
    pub fn as_str(self) -> &'static str {
        match self {
            PatternShape::Path => "path",
            PatternShape::Tree => "tree",
            PatternShape::Cyclic => "cyclic",
        }
    }
}

#[derive(Clone, Debug, PartialEq, Eq, Hash, PartialOrd, Ord)]
pub struct NeighborhoodPattern {
    // one sorted label set per local vertex; index 0 is the pivot
    labels: Vec<Vec<VLabel>>,
    // sorted, duplicate-free
    edges: Vec<PatternEdge>,
}

/// Result of [`NeighborhoodPattern::remove_element`].
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct Removal {
    pub pattern: NeighborhoodPattern,
    /// Old local vertex -> new local vertex, `None` for deleted vertices.
    pub vertex_map: Vec<Option<usize>>,
}

impl NeighborhoodPattern {
    /// The empty pattern: a bare pivot with no elements.
    pub fn empty() -> Self {
        NeighborhoodPattern {
            labels: alloc::vec![Vec::new()],
            edges: Vec::new(),
        }
    }

    /// Builds a legal pattern: connected, loop-free, no isolated non-pivot
    /// vertex, at least one element.
    pub fn new(
        labels: Vec<Vec<VLabel>>,
        edges: impl IntoIterator<Item = PatternEdge>,
    ) -> Result<Self, PatternError> {
        let p = Self::fragment(labels, edges)?;
        if p.size() == 0 {
            return Err(PatternError::Empty);
        }
        if let Some(v) = (1..p.vertex_count()).find(|&v| p.is_isolated(v)) {
            return Err(PatternError::IsolatedVertex(v));
        }
        if !p.is_connected() {
            return Err(PatternError::Disconnected);
        }
        Ok(p)
    }

    /// Like [`new`](Self::new) but only checks loops and vertex ranges, so
    /// disconnected structures and isolated vertices are accepted.
    pub fn fragment(
        mut labels: Vec<Vec<VLabel>>,
        edges: impl IntoIterator<Item = PatternEdge>,
    ) -> Result<Self, PatternError> {
        if labels.is_empty() {
            labels.push(Vec::new());
        }
        let n = labels.len();
        let mut edges: Vec<PatternEdge> = edges.into_iter().collect();
        for e in &edges {
            if e.src >= n {
                return Err(PatternError::VertexOutOfRange(e.src));
            }
            if e.dst >= n {
                return Err(PatternError::VertexOutOfRange(e.dst));
            }
            if e.src == e.dst {
                return Err(PatternError::Loop(e.src));
            }
        }
        for ls in &mut labels {
            ls.sort_unstable();
            ls.dedup();
        }
        edges.sort_unstable();
        edges.dedup();
        Ok(NeighborhoodPattern { labels, edges })
    }

    pub fn single_label(label: VLabel) -> Self {
        NeighborhoodPattern {
            labels: alloc::vec![alloc::vec![label]],
            edges: Vec::new(),
        }
    }

    /// Pivot plus one edge to an unlabeled vertex.
    pub fn single_edge(dir: Direction, label: ELabel) -> Self {
        let edge = match dir {
            Direction::Out => PatternEdge::new(PIVOT, 1, label),
            Direction::In => PatternEdge::new(1, PIVOT, label),
        };
        NeighborhoodPattern {
            labels: alloc::vec![Vec::new(), Vec::new()],
            edges: alloc::vec![edge],
        }
    }

    pub fn vertex_count(&self) -> usize {
        self.labels.len()
    }

    pub fn edge_count(&self) -> usize {
        self.edges.len()
    }

    pub fn label_count(&self) -> usize {
        self.labels.iter().map(Vec::len).sum()
    }

    pub fn size(&self) -> usize {
        self.label_count() + self.edges.len()
    }

    pub fn is_empty(&self) -> bool {
        self.size() == 0
    }

    pub fn labels(&self, v: usize) -> &[VLabel] {
        &self.labels[v]
    }

    pub fn edges(&self) -> &[PatternEdge] {
        &self.edges
    }

    pub fn has_label(&self, v: usize, l: VLabel) -> bool {
        self.labels
            .get(v)
            .is_some_and(|ls| ls.binary_search(&l).is_ok())
    }

    pub fn has_edge(&self, e: &PatternEdge) -> bool {
        self.edges.binary_search(e).is_ok()
    }

    pub fn contains(&self, e: &PatternElement) -> bool {
        match *e {
            PatternElement::Label { vertex, label } => self.has_label(vertex, label),
            PatternElement::Edge(ref edge) => self.has_edge(edge),
        }
    }

    pub fn degree(&self, v: usize) -> usize {
        self.edges.iter().filter(|e| e.touches(v)).count()
    }

    fn is_isolated(&self, v: usize) -> bool {
        self.labels[v].is_empty() && !self.edges.iter().any(|e| e.touches(v))
    }

    /// All elements, labels first (by vertex) then edges.
    pub fn elements(&self) -> impl Iterator<Item = PatternElement> + '_ {
        let labels = self.labels.iter().enumerate().flat_map(|(v, ls)| {
            ls.iter()
                .map(move |&label| PatternElement::Label { vertex: v, label })
        });
        labels.chain(self.edges.iter().map(|&e| PatternElement::Edge(e)))
    }

    /// Every vertex reachable from the pivot, ignoring edge direction.
    pub fn is_connected(&self) -> bool {
        let n = self.vertex_count();
        let mut seen = alloc::vec![false; n];
        let mut stack = alloc::vec![PIVOT];
        seen[PIVOT] = true;
        let mut reached = 1;
        while let Some(v) = stack.pop() {
            for e in &self.edges {
                if let Some(w) = e.other(v) {
                    if !seen[w] {
                        seen[w] = true;
                        reached += 1;
                        stack.push(w);
                    }
                }
            }
        }
        reached == n
    }

    /// Adds one element. `Edge` endpoints equal to `vertex_count()` create a
    /// fresh unlabeled vertex. Returns `None` if the element is already
    /// present, would be a loop, or references a vertex beyond the fresh one.
    pub fn with_element(&self, e: PatternElement) -> Option<Self> {
        let n = self.vertex_count();
        let mut out = self.clone();
        match e {
            PatternElement::Label { vertex, label } => {
                if vertex >= n {
                    return None;
                }
                let ls = &mut out.labels[vertex];
                match ls.binary_search(&label) {
                    Ok(_) => return None,
                    Err(pos) => ls.insert(pos, label),
                }
            }
            PatternElement::Edge(edge) => {
                if edge.src == edge.dst || edge.src > n || edge.dst > n {
                    return None;
                }
                if edge.src == n || edge.dst == n {
                    out.labels.push(Vec::new());
                }
                match out.edges.binary_search(&edge) {
                    Ok(_) => return None,
                    Err(pos) => out.edges.insert(pos, edge),
                }
            }
        }
        Some(out)
    }

    /// Removes `e`, then deletes non-pivot vertices left with no label and no
    /// incident edge. The result may be disconnected. Removing the only
    /// element of a size-1 pattern yields [`empty`](Self::empty).
    pub fn remove_element(&self, e: &PatternElement) -> Result<Removal, PatternError> {
        if !self.contains(e) {
            return Err(PatternError::MissingElement(*e));
        }
        let mut labels = self.labels.clone();
        let mut edges = self.edges.clone();
        match *e {
            PatternElement::Label { vertex, label } => labels[vertex].retain(|&l| l != label),
            PatternElement::Edge(edge) => edges.retain(|x| *x != edge),
        }
        let n = labels.len();
        let mut keep = alloc::vec![false; n];
        keep[PIVOT] = true;
        for (v, ls) in labels.iter().enumerate() {
            if !ls.is_empty() {
                keep[v] = true;
            }
        }
        for edge in &edges {
            keep[edge.src] = true;
            keep[edge.dst] = true;
        }
        let mut vertex_map = alloc::vec![None; n];
        let mut next = 0;
        for v in 0..n {
            if keep[v] {
                vertex_map[v] = Some(next);
                next += 1;
            }
        }
        let labels: Vec<Vec<VLabel>> = labels
            .into_iter()
            .zip(&keep)
            .filter(|(_, &k)| k)
            .map(|(ls, _)| ls)
            .collect();
        let mut edges: Vec<PatternEdge> = edges
            .into_iter()
            .map(|x| PatternEdge {
                src: vertex_map[x.src].unwrap(),
                dst: vertex_map[x.dst].unwrap(),
                label: x.label,
            })
            .collect();
        edges.sort_unstable();
        Ok(Removal {
            pattern: NeighborhoodPattern { labels, edges },
            vertex_map,
        })
    }

    /// Shorthand for `remove_element(e)?.pattern`.
    pub fn without(&self, e: &PatternElement) -> Result<Self, PatternError> {
        Ok(self.remove_element(e)?.pattern)
    }

    /// Every element whose removal leaves a connected pattern one element
    /// smaller, paired with that sub-pattern.
    pub fn decompositions(&self) -> Vec<(PatternElement, NeighborhoodPattern)> {
        self.elements()
            .filter_map(|e| {
                let sub = self.remove_element(&e).ok()?.pattern;
                sub.is_connected().then_some((e, sub))
            })
            .collect()
    }

    pub fn is_decomposable(&self) -> bool {
        self.decompositions().len() >= 2
    }

    /// A simple undirected path hanging off the pivot carrying at most one
    /// vertex label, located on the far end. A lone pivot label qualifies.
    pub fn is_path_pattern(&self) -> bool {
        let n = self.vertex_count();
        let total_labels = self.label_count();
        if self.size() == 0 || total_labels > 1 || self.edges.len() + 1 != n {
            return false;
        }
        if !self.is_connected() {
            return false;
        }
        if n == 1 {
            return true;
        }
        let degrees: Vec<usize> = (0..n).map(|v| self.degree(v)).collect();
        if degrees[PIVOT] != 1 || degrees.iter().any(|&d| d > 2) {
            return false;
        }
        match self.labels.iter().position(|ls| !ls.is_empty()) {
            None => true,
            Some(v) => v != PIVOT && degrees[v] == 1,
        }
    }

    pub fn shape(&self) -> PatternShape {
        if self.is_path_pattern() {
            PatternShape::Path
        } else if self.edges.len() + 1 == self.vertex_count() {
            PatternShape::Tree
        } else {
            PatternShape::Cyclic
        }
    }

    /// Renumbers vertices: `perm[old] = new`. `perm[0]` must be 0.
    pub fn relabel(&self, perm: &[usize]) -> Self {
        debug_assert_eq!(perm[PIVOT], PIVOT);
        let mut labels = alloc::vec![Vec::new(); self.labels.len()];
        for (old, ls) in self.labels.iter().enumerate() {
            labels[perm[old]] = ls.clone();
        }
        let mut edges: Vec<PatternEdge> = self
            .edges
            .iter()
            .map(|e| PatternEdge::new(perm[e.src], perm[e.dst], e.label))
            .collect();
        edges.sort_unstable();
        NeighborhoodPattern { labels, edges }
    }

    /// The pivot-fixing renumbering with the lexicographically smallest
    /// (label list, edge list) serialization, and its key string.
    ///
    /// Two patterns get the same key iff they are pivoted-isomorphic. Cost is
    /// `(n-1)!` over the non-pivot vertices.
    pub fn canonical_form(&self) -> (NeighborhoodPattern, String) {
        let n = self.vertex_count();
        let mut perm: Vec<usize> = (0..n).collect();
        let mut best = self.relabel(&perm);
        let mut best_sig = best.signature();
        while next_permutation(&mut perm[1..]) {
            let cand = self.relabel(&perm);
            let sig = cand.signature();
            if sig < best_sig {
                best = cand;
                best_sig = sig;
            }
        }
        let key = best.key_string();
        (best, key)
    }

    pub fn canonical_key(&self) -> String {
        self.canonical_form().1
    }

    fn signature(&self) -> Signature {
        let labels = self
            .labels
            .iter()
            .enumerate()
            .flat_map(|(v, ls)| ls.iter().map(move |l| (v, l.0)))
            .collect();
        let edges = self
            .edges
            .iter()
            .map(|e| (e.src, e.dst, e.label.0))
            .collect();
        (labels, edges)
    }

    fn key_string(&self) -> String {
        let mut s = format!("{}", self.vertex_count());
        s.push('|');
        for (v, ls) in self.labels.iter().enumerate() {
            for l in ls {
                let _ = write!(s, "L{v}:{};", l.0);
            }
        }
        s.push('|');
        for e in &self.edges {
            let _ = write!(s, "E{}>{}:{};", e.src, e.dst, e.label.0);
        }
        s
    }

    /// Cheap isomorphism-invariant hash over the pivot's labels, the multiset
    /// of pivot-incident `(direction, label)` pairs, and the size.
    pub fn coarse_hash(&self) -> u64 {
        let mut incident: Vec<(Direction, ELabel)> = self
            .edges
            .iter()
            .filter_map(|e| {
                if e.src == PIVOT {
                    Some((Direction::Out, e.label))
                } else if e.dst == PIVOT {
                    Some((Direction::In, e.label))
                } else {
                    None
                }
            })
            .collect();
        incident.sort_unstable();
        let mut h = FxHasher::default();
        self.labels[PIVOT].hash(&mut h);
        incident.hash(&mut h);
        self.size().hash(&mut h);
        h.finish()
    }

    /// `L`/`E` lines of the text serialization, label names resolved through
    /// `g`'s vocabularies. Lines are sorted by vertex IDs, then label name.
    pub fn write_body(&self, out: &mut impl fmt::Write, g: &LabeledGraph) -> fmt::Result {
        let mut lines: Vec<(usize, usize, &str)> = Vec::new();
        for (v, ls) in self.labels.iter().enumerate() {
            for &l in ls {
                lines.push((v, 0, g.vlabel_name(l).unwrap_or("?")));
            }
        }
        lines.sort_unstable();
        for (v, _, name) in &lines {
            writeln!(out, "L {v} {name}")?;
        }
        let mut lines: Vec<(usize, usize, &str)> = self
            .edges
            .iter()
            .map(|e| (e.src, e.dst, g.elabel_name(e.label).unwrap_or("?")))
            .collect();
        lines.sort_unstable();
        for (s, d, name) in &lines {
            writeln!(out, "E {s} {d} {name}")?;
        }
        Ok(())
    }
}

/// Labels then edges, as raw ids, compared to pick the canonical numbering.
type Signature = (Vec<(usize, u32)>, Vec<(usize, usize, u32)>);

/// In-place lexicographic successor; `false` once the last permutation is
/// reached.
fn next_permutation(xs: &mut [usize]) -> bool {
    if xs.len() < 2 {
        return false;
    }
    let Some(i) = (0..xs.len() - 1).rev().find(|&i| xs[i] < xs[i + 1]) else {
        return false;
    };
    let j = (i + 1..xs.len()).rev().find(|&j| xs[j] > xs[i]).unwrap();
    xs.swap(i, j);
    xs[i + 1..].reverse();
    true
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::oracle::{has_cited_paper, self_citation, toy_db, two_papers};
    use alloc::vec;

    const W: ELabel = ELabel(0);
    const C: ELabel = ELabel(1);
    const A: VLabel = VLabel(0);
    const P: VLabel = VLabel(1);

    fn e(s: usize, d: usize, l: ELabel) -> PatternEdge {
        PatternEdge::new(s, d, l)
    }

    fn path_no_label() -> NeighborhoodPattern {
        // pivot -W-> 1 <-C- 2
        NeighborhoodPattern::new(vec![vec![]; 3], [e(0, 1, W), e(2, 1, C)]).unwrap()
    }

    fn path_with_label() -> NeighborhoodPattern {
        NeighborhoodPattern::new(vec![vec![], vec![], vec![P]], [e(0, 1, W), e(2, 1, C)]).unwrap()
    }

    fn triangle() -> NeighborhoodPattern {
        NeighborhoodPattern::new(vec![vec![]; 3], [e(0, 1, W), e(0, 2, W), e(2, 1, C)]).unwrap()
    }

    #[test]
    fn new_validates() {
        assert_eq!(
            NeighborhoodPattern::new(vec![vec![], vec![]], [e(1, 1, W)]),
            Err(PatternError::Loop(1))
        );
        assert_eq!(
            NeighborhoodPattern::new(vec![vec![], vec![], vec![]], [e(0, 1, W)]),
            Err(PatternError::IsolatedVertex(2))
        );
        assert_eq!(
            NeighborhoodPattern::new(vec![vec![A], vec![], vec![]], [e(1, 2, W)]),
            Err(PatternError::Disconnected)
        );
        assert_eq!(
            NeighborhoodPattern::new(vec![vec![]], []),
            Err(PatternError::Empty)
        );
        assert_eq!(
            NeighborhoodPattern::new(vec![vec![]], [e(0, 3, W)]),
            Err(PatternError::VertexOutOfRange(3))
        );
    }

    #[test]
    fn sizes() {
        assert_eq!(NeighborhoodPattern::single_label(A).size(), 1);
        assert_eq!(path_no_label().size(), 2);
        assert_eq!(path_with_label().size(), 3);
        // reconstructed self-cite pattern: two writes edges and one cites edge
        let g = toy_db();
        assert_eq!(self_citation(&g).size(), 3);
        assert_eq!(two_papers(&g).size(), 2);
    }

    #[test]
    fn remove_far_label_gives_unlabeled_path() {
        let p = path_with_label();
        let q = p
            .without(&PatternElement::Label {
                vertex: 2,
                label: P,
            })
            .unwrap();
        assert_eq!(q, path_no_label());
    }

    #[test]
    fn remove_writes_edge_leaves_disconnected_fragment() {
        // pivot -W-> 1 <-C- 2 ; dropping the writes edge keeps both papers
        let g = toy_db();
        let p = has_cited_paper(&g);
        let w = g.elabel("writes").unwrap();
        let r = p.remove_element(&PatternElement::Edge(e(0, 1, w))).unwrap();
        assert_eq!(r.pattern.vertex_count(), 3);
        assert_eq!(r.pattern.edge_count(), 1);
        assert!(!r.pattern.is_connected());
        assert_eq!(r.vertex_map, vec![Some(0), Some(1), Some(2)]);
    }

    #[test]
    fn remove_cites_edge_deletes_isolated_vertex() {
        let g = toy_db();
        let p = has_cited_paper(&g);
        let c = g.elabel("cites").unwrap();
        let r = p.remove_element(&PatternElement::Edge(e(2, 1, c))).unwrap();
        assert_eq!(r.pattern.vertex_count(), 2);
        assert_eq!(r.vertex_map, vec![Some(0), Some(1), None]);
        assert!(r.pattern.is_connected());
    }

    #[test]
    fn remove_last_element_gives_empty() {
        let p = NeighborhoodPattern::single_label(A);
        let q = p
            .without(&PatternElement::Label {
                vertex: 0,
                label: A,
            })
            .unwrap();
        assert!(q.is_empty());
        assert_eq!(q, NeighborhoodPattern::empty());
        let p = NeighborhoodPattern::single_edge(Direction::In, W);
        assert_eq!(
            p.without(&PatternElement::Edge(e(1, 0, W))).unwrap(),
            NeighborhoodPattern::empty()
        );
    }

    #[test]
    fn remove_missing_element_errors() {
        let p = NeighborhoodPattern::single_label(A);
        let missing = PatternElement::Label {
            vertex: 0,
            label: P,
        };
        assert_eq!(
            p.remove_element(&missing),
            Err(PatternError::MissingElement(missing))
        );
    }

    #[test]
    fn decomposition_counts() {
        let d = path_no_label().decompositions();
        assert_eq!(d.len(), 1);
        assert_eq!(d[0].0, PatternElement::Edge(e(2, 1, C)));
        assert!(triangle().decompositions().len() >= 2);
        let two_labels = NeighborhoodPattern::new(vec![vec![A], vec![P]], [e(0, 1, W)]).unwrap();
        assert!(two_labels.decompositions().len() >= 2);
        assert_eq!(path_with_label().decompositions().len(), 1);
    }

    #[test]
    fn path_pattern_recognition() {
        assert!(path_no_label().is_path_pattern());
        assert!(path_with_label().is_path_pattern());
        assert!(NeighborhoodPattern::single_label(A).is_path_pattern());
        assert!(NeighborhoodPattern::single_edge(Direction::Out, W).is_path_pattern());
        let g = toy_db();
        assert!(!two_papers(&g).is_path_pattern());
        assert!(!triangle().is_path_pattern());
        // label on the pivot of a non-trivial path
        let p = NeighborhoodPattern::new(vec![vec![A], vec![]], [e(0, 1, W)]).unwrap();
        assert!(!p.is_path_pattern());
        // label in the middle
        let p = NeighborhoodPattern::new(vec![vec![], vec![P], vec![]], [e(0, 1, W), e(2, 1, C)])
            .unwrap();
        assert!(!p.is_path_pattern());
        // parallel edges form a 2-cycle
        let p = NeighborhoodPattern::new(vec![vec![], vec![]], [e(0, 1, W), e(1, 0, W)]).unwrap();
        assert!(!p.is_path_pattern());
        assert_eq!(p.shape(), PatternShape::Cyclic);
        assert_eq!(two_papers(&g).shape(), PatternShape::Tree);
        assert_eq!(path_with_label().shape(), PatternShape::Path);
    }

    #[test]
    fn canonical_key_is_renumbering_invariant() {
        let t = triangle();
        let t2 = t.relabel(&[0, 2, 1]);
        assert_ne!(t, t2);
        assert_eq!(t.canonical_key(), t2.canonical_key());
        assert_ne!(
            path_no_label().canonical_key(),
            NeighborhoodPattern::single_label(A).canonical_key()
        );
    }

    #[test]
    fn canonical_key_distinguishes_cited_and_citing() {
        let g = toy_db();
        let cited = has_cited_paper(&g);
        let citing = crate::oracle::paper_citing_another(&g);
        // Enumerated by hand over both orders of the two non-pivot vertices:
        // cited  = {0>1 W, 2>1 C} or {0>2 W, 1>2 C}; min edge list starts 0>1
        // citing = {0>1 W, 1>2 C} or {0>2 W, 2>1 C}
        let w = g.elabel("writes").unwrap().0;
        let c = g.elabel("cites").unwrap().0;
        assert_eq!(cited.canonical_key(), format!("3||E0>1:{w};E2>1:{c};"));
        assert_eq!(citing.canonical_key(), format!("3||E0>1:{w};E1>2:{c};"));
    }

    #[test]
    fn coarse_hash_properties() {
        let t = triangle();
        assert_eq!(t.coarse_hash(), t.relabel(&[0, 2, 1]).coarse_hash());
        // differ only in a far-end label: allowed to collide, and do
        let a = NeighborhoodPattern::new(vec![vec![], vec![A]], [e(0, 1, W)]).unwrap();
        let b = NeighborhoodPattern::new(vec![vec![], vec![P]], [e(0, 1, W)]).unwrap();
        assert_eq!(a.coarse_hash(), b.coarse_hash());
        // different pivot out-degree
        let g = toy_db();
        let fork = two_papers(&g);
        let single =
            NeighborhoodPattern::new(vec![vec![], vec![], vec![]], [e(0, 1, W), e(1, 2, W)])
                .unwrap();
        assert_ne!(fork.coarse_hash(), single.coarse_hash());
    }

    #[test]
    fn with_element_adds_fresh_vertex() {
        let p = NeighborhoodPattern::single_label(A);
        let q = p.with_element(PatternElement::Edge(e(0, 1, W))).unwrap();
        assert_eq!(q.vertex_count(), 2);
        assert!(q.with_element(PatternElement::Edge(e(0, 1, W))).is_none());
        assert!(q.with_element(PatternElement::Edge(e(1, 1, W))).is_none());
        assert!(q.with_element(PatternElement::Edge(e(0, 3, W))).is_none());
        assert!(q
            .with_element(PatternElement::Label {
                vertex: 0,
                label: A
            })
            .is_none());
    }

    #[test]
    fn next_permutation_enumerates_all() {
        let mut xs = [1, 2, 3, 4];
        let mut n = 1;
        while next_permutation(&mut xs) {
            n += 1;
        }
        assert_eq!(n, 24);
        assert_eq!(xs, [4, 3, 2, 1]);
    }
}
