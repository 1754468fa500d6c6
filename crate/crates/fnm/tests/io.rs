use std::path::Path;

use fnm::io::{load_graph, load_graph_files, write_graph, LoadError};
use fnm_core::oracle::toy_db;
use fnm_core::LabeledGraph;

fn data(name: &str) -> std::path::PathBuf {
    Path::new(env!("CARGO_MANIFEST_DIR"))
        .join("tests/data")
        .join(name)
}

fn toy_files() -> LabeledGraph {
    load_graph_files(&data("toy_vertex_labels.tsv"), &data("toy_edges.tsv")).unwrap()
}

/// Vertex names with their label names, and edges by name.
type Named = (Vec<(String, Vec<String>)>, Vec<(String, String, String)>);

fn by_name(g: &LabeledGraph) -> Named {
    let mut vertices: Vec<_> = g
        .all_vertices()
        .iter()
        .map(|&v| {
            let mut ls: Vec<String> = g
                .labels(v)
                .iter()
                .map(|&l| g.vlabel_name(l).unwrap().to_owned())
                .collect();
            ls.sort();
            (g.vertex_name(v).unwrap().to_owned(), ls)
        })
        .collect();
    vertices.sort();
    let mut edges: Vec<_> = g
        .edges()
        .map(|(s, d, l)| {
            let n = |v| g.vertex_name(v).unwrap().to_owned();
            (n(s), n(d), g.elabel_name(l).unwrap().to_owned())
        })
        .collect();
    edges.sort();
    (vertices, edges)
}

#[test]
fn toy_files_match_fixture() {
    assert_eq!(toy_files(), toy_db());
}

#[test]
fn round_trip() {
    let g = toy_files();
    let (mut v, mut e) = (Vec::new(), Vec::new());
    write_graph(&g, &mut v, &mut e).unwrap();
    let again = load_graph(v.as_slice(), e.as_slice()).unwrap();
    assert_eq!(again, g);

    // first appearance in the edge file differs from id order here
    let g = load_graph("".as_bytes(), "x\tz\tr\ny\tx\ts\nz\tw\tr\n".as_bytes()).unwrap();
    let (mut v, mut e) = (Vec::new(), Vec::new());
    write_graph(&g, &mut v, &mut e).unwrap();
    let again = load_graph(v.as_slice(), e.as_slice()).unwrap();
    assert_eq!(by_name(&again), by_name(&g));
    assert_eq!(again.vertex_count(), g.vertex_count());
}

#[test]
fn missing_file_names_path() {
    let err = load_graph_files(&data("nope.tsv"), &data("toy_edges.tsv")).unwrap_err();
    assert!(matches!(err, LoadError::Open { .. }));
    assert!(err.to_string().contains("nope.tsv"));
}
