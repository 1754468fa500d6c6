//! Tab-separated graph files.
//!
//! The vertex-label file holds `vertex<TAB>label` lines, the edge file
//! `src<TAB>dst<TAB>label` lines. Lines starting with `#` and blank lines
//! are skipped. Vertex ids are numbered in order of first appearance, label
//! file first. Repeated lines collapse.

use std::fs::File;
use std::io::{self, BufRead, BufReader, Write};
use std::path::{Path, PathBuf};

use fnm_core::{GraphBuilder, GraphError, LabeledGraph};

#[derive(Debug, thiserror::Error)]
pub enum LoadError {
    #[error("{}: {source}", path.display())]
    Open { path: PathBuf, source: io::Error },
    #[error("{source_name}:{line}: {source}")]
    Read {
        source_name: String,
        line: usize,
        source: io::Error,
    },
    #[error("{source_name}:{line}: expected {expected} tab-separated fields, found {found}")]
    FieldCount {
        source_name: String,
        line: usize,
        expected: usize,
        found: usize,
    },
    #[error("{source_name}:{line}: {source}")]
    Invalid {
        source_name: String,
        line: usize,
        source: GraphError,
    },
}

impl LoadError {
    /// 1-based line of the offending input, if any.
    pub fn line(&self) -> Option<usize> {
        match self {
            LoadError::Open { .. } => None,
            LoadError::Read { line, .. }
            | LoadError::FieldCount { line, .. }
            | LoadError::Invalid { line, .. } => Some(*line),
        }
    }
}

fn read_records(
    reader: impl BufRead,
    source_name: &str,
    fields: usize,
    mut each: impl FnMut(&[&str]) -> Result<(), GraphError>,
) -> Result<(), LoadError> {
    for (i, line) in reader.lines().enumerate() {
        let line_no = i + 1;
        let line = line.map_err(|source| LoadError::Read {
            source_name: source_name.to_owned(),
            line: line_no,
            source,
        })?;
        let line = line.strip_suffix('\r').unwrap_or(&line);
        if line.trim().is_empty() || line.starts_with('#') {
            continue;
        }
        let parts: Vec<&str> = line.split('\t').collect();
        if parts.len() != fields {
            return Err(LoadError::FieldCount {
                source_name: source_name.to_owned(),
                line: line_no,
                expected: fields,
                found: parts.len(),
            });
        }
        each(&parts).map_err(|source| LoadError::Invalid {
            source_name: source_name.to_owned(),
            line: line_no,
            source,
        })?;
    }
    Ok(())
}

/// Reads a graph from the two TSV streams.
pub fn load_graph(
    vertex_labels: impl BufRead,
    edges: impl BufRead,
) -> Result<LabeledGraph, LoadError> {
    load_named(vertex_labels, "vertex labels", edges, "edges")
}

fn load_named(
    vertex_labels: impl BufRead,
    vertex_name: &str,
    edges: impl BufRead,
    edge_name: &str,
) -> Result<LabeledGraph, LoadError> {
    let mut b = GraphBuilder::new();
    read_records(vertex_labels, vertex_name, 2, |f| {
        b.add_named_label(f[0], f[1])
    })?;
    read_records(edges, edge_name, 3, |f| b.add_named_edge(f[0], f[1], f[2]))?;
    Ok(b.build())
}

/// Reads a graph from two TSV files; diagnostics name the file.
pub fn load_graph_files(vertex_labels: &Path, edges: &Path) -> Result<LabeledGraph, LoadError> {
    let open = |path: &Path| {
        File::open(path)
            .map(BufReader::new)
            .map_err(|source| LoadError::Open {
                path: path.to_owned(),
                source,
            })
    };
    load_named(
        open(vertex_labels)?,
        &vertex_labels.display().to_string(),
        open(edges)?,
        &edges.display().to_string(),
    )
}

/// Writes `g` in the format [`load_graph`] reads. Vertices with neither
/// labels nor edges have no representation and are dropped.
pub fn write_graph(
    g: &LabeledGraph,
    vertex_labels: &mut impl Write,
    edges: &mut impl Write,
) -> io::Result<()> {
    let name = |v| g.vertex_name(v).expect("vertex ids are dense");
    for v in g.all_vertices().iter().copied() {
        for &l in g.labels(v) {
            writeln!(
                vertex_labels,
                "{}\t{}",
                name(v),
                g.vlabel_name(l).expect("label in vocab")
            )?;
        }
    }
    for (s, d, l) in g.edges() {
        writeln!(
            edges,
            "{}\t{}\t{}",
            name(s),
            name(d),
            g.elabel_name(l).expect("label in vocab")
        )?;
    }
    Ok(())
}

#[cfg(test)]
mod tests {
    use super::*;

    fn load(v: &str, e: &str) -> Result<LabeledGraph, LoadError> {
        load_graph(v.as_bytes(), e.as_bytes())
    }

    #[test]
    fn minimal_input() {
        let g = load("a1\tAuthor\n", "a1\tp1\twrites\n").unwrap();
        assert_eq!(g.vertex_count(), 2);
        assert_eq!(g.vertex_label_count(), 1);
        assert_eq!(g.edge_count(), 1);
        assert_eq!(g.vertex_id("p1"), Some(1));
    }

    #[test]
    fn duplicates_collapse() {
        let g = load(
            "a1\tAuthor\na1\tAuthor\n",
            "a1\tp1\twrites\na1\tp1\twrites\n",
        )
        .unwrap();
        assert_eq!(g.edge_count(), 1);
        assert_eq!(g.vertex_label_count(), 1);
    }

    #[test]
    fn comments_blank_lines_and_crlf() {
        let g = load(
            "# header\n\na1\tAuthor\r\n",
            "\n# x\ta\tb\na1\tp1\twrites\r\n",
        )
        .unwrap();
        assert_eq!(g.vlabel_name(g.labels(0)[0]), Some("Author"));
        assert_eq!(g.elabel("writes").map(|l| l.0), Some(0));
    }

    #[test]
    fn loop_edge_is_rejected_with_line() {
        let err = load("", "a\tb\tx\np1\tp1\tcites\n").unwrap_err();
        assert!(matches!(
            err,
            LoadError::Invalid {
                source: GraphError::LoopEdge { .. },
                ..
            }
        ));
        assert_eq!(err.line(), Some(2));
        assert!(err.to_string().starts_with("edges:2: loop edge"), "{err}");
    }

    #[test]
    fn field_count_and_empty_labels() {
        let err = load("a1 Author\n", "").unwrap_err();
        assert!(matches!(
            err,
            LoadError::FieldCount {
                expected: 2,
                found: 1,
                line: 1,
                ..
            }
        ));
        let err = load("", "a\tb\n").unwrap_err();
        assert!(matches!(
            err,
            LoadError::FieldCount {
                expected: 3,
                found: 2,
                ..
            }
        ));
        let err = load("", "a\tb\t\n").unwrap_err();
        assert!(matches!(
            err,
            LoadError::Invalid {
                source: GraphError::EmptyEdgeLabel,
                ..
            }
        ));
        let err = load("a\t\n", "").unwrap_err();
        assert!(matches!(
            err,
            LoadError::Invalid {
                source: GraphError::EmptyVertexLabel,
                ..
            }
        ));
    }
}
