//! The single-graph database.
//!
//! Vertices are dense `u32` IDs assigned in first-appearance order of their
//! external names. Edges are directed, carry exactly one label, and form a
//! set: parallel edges between the same ordered pair must differ in label.
//! Loops are rejected.

use alloc::collections::BTreeMap;
use alloc::string::{String, ToString};
use alloc::vec::Vec;
use core::fmt;

use crate::vid::VidList;

pub type Vid = u32;

#[derive(Copy, Clone, Debug, PartialEq, Eq, PartialOrd, Ord, Hash)]
pub struct VLabel(pub u32);

#[derive(Copy, Clone, Debug, PartialEq, Eq, PartialOrd, Ord, Hash)]
pub struct ELabel(pub u32);

/// Edge orientation as seen from the vertex being expanded.
#[derive(Copy, Clone, Debug, PartialEq, Eq, PartialOrd, Ord, Hash)]
pub enum Direction {
    Out,
    In,
}

impl Direction {
    pub fn reverse(self) -> Direction {
        match self {
            Direction::Out => Direction::In,
            Direction::In => Direction::Out,
        }
    }
}

/// Bidirectional name <-> dense ID table.
#[derive(Clone, Debug, Default, PartialEq, Eq)]
pub struct Vocab {
    names: Vec<String>,
    ids: BTreeMap<String, u32>,
}

impl Vocab {
    pub fn new() -> Self {
        Self::default()
    }

    pub fn intern(&mut self, name: &str) -> u32 {
        if let Some(&id) = self.ids.get(name) {
            return id;
        }
        let id = self.names.len() as u32;
        self.names.push(name.to_string());
        self.ids.insert(name.to_string(), id);
        id
    }

    pub fn id(&self, name: &str) -> Option<u32> {
        self.ids.get(name).copied()
    }

    pub fn name(&self, id: u32) -> Option<&str> {
        self.names.get(id as usize).map(String::as_str)
    }

    pub fn len(&self) -> usize {
        self.names.len()
    }

    pub fn is_empty(&self) -> bool {
        self.names.is_empty()
    }

    pub fn names(&self) -> impl Iterator<Item = &str> {
        self.names.iter().map(String::as_str)
    }
}

#[derive(Clone, Debug, PartialEq, Eq)]
pub enum GraphError {
    LoopEdge { vertex: String, label: String },
    EmptyEdgeLabel,
    EmptyVertexLabel,
    EmptyVertexId,
    UnknownVertex(Vid),
}

impl fmt::Display for GraphError {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        match self {
            GraphError::LoopEdge { vertex, label } => {
                write!(
                    f,
                    "loop edge on vertex `{vertex}` with label `{label}` is not allowed"
                )
            }
            GraphError::EmptyEdgeLabel => f.write_str("edge label must not be empty"),
            GraphError::EmptyVertexLabel => f.write_str("vertex label must not be empty"),
            GraphError::EmptyVertexId => f.write_str("vertex id must not be empty"),
            GraphError::UnknownVertex(v) => write!(f, "vertex {v} does not exist"),
        }
    }
}

impl core::error::Error for GraphError {}

/// Immutable labeled multigraph with label and adjacency indexes.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct LabeledGraph {
    vertex_names: Vocab,
    vlabel_vocab: Vocab,
    elabel_vocab: Vocab,
    vertex_labels: Vec<Vec<VLabel>>,
    // sorted by (label, neighbor); binary searchable on both
    out_adj: Vec<Vec<(ELabel, Vid)>>,
    in_adj: Vec<Vec<(ELabel, Vid)>>,
    label_index: Vec<VidList>,
    edge_count: usize,
}

static EMPTY_VIDS: VidList = VidList::new();

impl LabeledGraph {
    /// Builds the indexes from raw, already validated parts.
    pub(crate) fn from_parts(
        vertex_names: Vocab,
        vlabel_vocab: Vocab,
        elabel_vocab: Vocab,
        vertex_count: usize,
        labels: impl IntoIterator<Item = (Vid, VLabel)>,
        edges: impl IntoIterator<Item = (Vid, Vid, ELabel)>,
    ) -> LabeledGraph {
        let mut vertex_labels = alloc::vec![Vec::new(); vertex_count];
        for (v, l) in labels {
            vertex_labels[v as usize].push(l);
        }
        let mut n_vlabels = vlabel_vocab.len();
        for ls in &mut vertex_labels {
            ls.sort_unstable();
            ls.dedup();
            if let Some(max) = ls.last() {
                n_vlabels = n_vlabels.max(max.0 as usize + 1);
            }
        }
        let mut out_adj = alloc::vec![Vec::new(); vertex_count];
        let mut in_adj = alloc::vec![Vec::new(); vertex_count];
        for (s, d, l) in edges {
            debug_assert_ne!(s, d);
            out_adj[s as usize].push((l, d));
            in_adj[d as usize].push((l, s));
        }
        let mut edge_count = 0;
        for adj in out_adj.iter_mut().chain(in_adj.iter_mut()) {
            adj.sort_unstable();
            adj.dedup();
        }
        for adj in &out_adj {
            edge_count += adj.len();
        }
        let mut index: Vec<Vec<Vid>> = alloc::vec![Vec::new(); n_vlabels];
        for (v, ls) in vertex_labels.iter().enumerate() {
            for l in ls {
                index[l.0 as usize].push(v as Vid);
            }
        }
        LabeledGraph {
            vertex_names,
            vlabel_vocab,
            elabel_vocab,
            vertex_labels,
            out_adj,
            in_adj,
            label_index: index.into_iter().map(VidList::from_sorted).collect(),
            edge_count,
        }
    }

    pub fn vertex_count(&self) -> usize {
        self.vertex_labels.len()
    }

    pub fn edge_count(&self) -> usize {
        self.edge_count
    }

    pub fn vertex_label_count(&self) -> usize {
        self.vertex_labels.iter().map(Vec::len).sum()
    }

    /// Number of elements: vertex-label pairs plus edges.
    pub fn size(&self) -> usize {
        self.vertex_label_count() + self.edge_count
    }

    pub fn all_vertices(&self) -> VidList {
        VidList::all(self.vertex_count())
    }

    pub fn labels(&self, v: Vid) -> &[VLabel] {
        &self.vertex_labels[v as usize]
    }

    pub fn has_label(&self, v: Vid, l: VLabel) -> bool {
        self.vertex_labels[v as usize].binary_search(&l).is_ok()
    }

    pub fn has_edge(&self, src: Vid, dst: Vid, l: ELabel) -> bool {
        self.out_adj[src as usize].binary_search(&(l, dst)).is_ok()
    }

    /// All `(label, neighbor)` pairs on one side of `v`, sorted.
    pub fn adjacent(&self, v: Vid, dir: Direction) -> &[(ELabel, Vid)] {
        match dir {
            Direction::Out => &self.out_adj[v as usize],
            Direction::In => &self.in_adj[v as usize],
        }
    }

    /// The `(label, neighbor)` pairs on one side of `v` restricted to label `l`.
    pub fn adjacent_with_label(&self, v: Vid, dir: Direction, l: ELabel) -> &[(ELabel, Vid)] {
        let adj = self.adjacent(v, dir);
        let lo = adj.partition_point(|&(el, _)| el < l);
        let hi = lo + adj[lo..].partition_point(|&(el, _)| el == l);
        &adj[lo..hi]
    }

    /// Every edge as `(src, dst, label)`, ordered by source then label.
    pub fn edges(&self) -> impl Iterator<Item = (Vid, Vid, ELabel)> + '_ {
        self.out_adj
            .iter()
            .enumerate()
            .flat_map(|(s, adj)| adj.iter().map(move |&(l, d)| (s as Vid, d, l)))
    }

    /// Vertices carrying `label`, ascending. Unknown labels give an empty list.
    pub fn vertices_with_label(&self, label: VLabel) -> &VidList {
        self.label_index
            .get(label.0 as usize)
            .unwrap_or(&EMPTY_VIDS)
    }

    pub fn vertex_labels_vocab(&self) -> &Vocab {
        &self.vlabel_vocab
    }

    pub fn edge_labels_vocab(&self) -> &Vocab {
        &self.elabel_vocab
    }

    pub fn vertex_names(&self) -> &Vocab {
        &self.vertex_names
    }

    pub fn vertex_id(&self, name: &str) -> Option<Vid> {
        self.vertex_names.id(name)
    }

    pub fn vertex_name(&self, v: Vid) -> Option<&str> {
        self.vertex_names.name(v)
    }

    pub fn vlabel(&self, name: &str) -> Option<VLabel> {
        self.vlabel_vocab.id(name).map(VLabel)
    }

    pub fn elabel(&self, name: &str) -> Option<ELabel> {
        self.elabel_vocab.id(name).map(ELabel)
    }

    pub fn vlabel_name(&self, l: VLabel) -> Option<&str> {
        self.vlabel_vocab.name(l.0)
    }

    pub fn elabel_name(&self, l: ELabel) -> Option<&str> {
        self.elabel_vocab.name(l.0)
    }

    /// Number of distinct vertex-label IDs addressable in this graph.
    pub fn vlabel_id_count(&self) -> usize {
        self.label_index.len()
    }

    /// Number of distinct edge-label IDs addressable in this graph.
    pub fn elabel_id_count(&self) -> usize {
        let used = self
            .edges()
            .map(|(_, _, l)| l.0 as usize + 1)
            .max()
            .unwrap_or(0);
        used.max(self.elabel_vocab.len())
    }
}

/// Incremental construction of a [`LabeledGraph`] from named inputs.
///
/// Duplicate labels and edges collapse; loops and empty names are rejected.
#[derive(Clone, Debug, Default)]
pub struct GraphBuilder {
    vertex_names: Vocab,
    vlabels: Vocab,
    elabels: Vocab,
    labels: Vec<(Vid, VLabel)>,
    edges: Vec<(Vid, Vid, ELabel)>,
}

impl GraphBuilder {
    pub fn new() -> Self {
        Self::default()
    }

    pub fn vertex(&mut self, name: &str) -> Result<Vid, GraphError> {
        if name.is_empty() {
            return Err(GraphError::EmptyVertexId);
        }
        Ok(self.vertex_names.intern(name))
    }

    pub fn add_vertex_label(&mut self, v: Vid, label: &str) -> Result<(), GraphError> {
        self.check_vertex(v)?;
        if label.is_empty() {
            return Err(GraphError::EmptyVertexLabel);
        }
        let l = VLabel(self.vlabels.intern(label));
        self.labels.push((v, l));
        Ok(())
    }

    pub fn add_edge(&mut self, src: Vid, dst: Vid, label: &str) -> Result<(), GraphError> {
        self.check_vertex(src)?;
        self.check_vertex(dst)?;
        if label.is_empty() {
            return Err(GraphError::EmptyEdgeLabel);
        }
        if src == dst {
            return Err(GraphError::LoopEdge {
                vertex: self.vertex_names.name(src).unwrap_or_default().to_string(),
                label: label.to_string(),
            });
        }
        let l = ELabel(self.elabels.intern(label));
        self.edges.push((src, dst, l));
        Ok(())
    }

    /// Convenience wrapper interning both endpoints by name.
    pub fn add_named_edge(&mut self, src: &str, dst: &str, label: &str) -> Result<(), GraphError> {
        let s = self.vertex(src)?;
        let d = self.vertex(dst)?;
        self.add_edge(s, d, label)
    }

    pub fn add_named_label(&mut self, vertex: &str, label: &str) -> Result<(), GraphError> {
        let v = self.vertex(vertex)?;
        self.add_vertex_label(v, label)
    }

    /// Pre-registers a vertex label name so that its ID is stable even if no
    /// vertex carries it.
    pub fn declare_vertex_label(&mut self, label: &str) -> VLabel {
        VLabel(self.vlabels.intern(label))
    }

    pub fn declare_edge_label(&mut self, label: &str) -> ELabel {
        ELabel(self.elabels.intern(label))
    }

    fn check_vertex(&self, v: Vid) -> Result<(), GraphError> {
        if (v as usize) < self.vertex_names.len() {
            Ok(())
        } else {
            Err(GraphError::UnknownVertex(v))
        }
    }

    pub fn build(self) -> LabeledGraph {
        let n = self.vertex_names.len();
        LabeledGraph::from_parts(
            self.vertex_names,
            self.vlabels,
            self.elabels,
            n,
            self.labels,
            self.edges,
        )
    }
}
