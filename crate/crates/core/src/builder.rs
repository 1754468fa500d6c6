//! Frequent path patterns, the building blocks that joins cannot produce.
//!
//! Paths are grown breadth-first one step at a time. For every starting
//! vertex the current path is walked injectively through the database; each
//! distinct move available at a walk's end (an edge to an unvisited vertex,
//! or a label on the end vertex) counts that starting vertex once. Moves
//! reached from at least `tau` starting vertices extend the path. Label moves
//! terminate a path; edge moves put it back in the queue.

use alloc::collections::{BTreeMap, BTreeSet, VecDeque};
use alloc::vec::Vec;
use core::fmt;

use crate::graph::{Direction, ELabel, LabeledGraph, VLabel, Vid};
use crate::pattern::{NeighborhoodPattern, PatternEdge};
use crate::vid::VidList;

/// One move along a path. Ordering puts edge steps first, then by
/// direction, then label.
#[derive(Copy, Clone, Debug, PartialEq, Eq, PartialOrd, Ord, Hash)]
pub enum PathStep {
    Edge { dir: Direction, label: ELabel },
    Label(VLabel),
}

impl PathStep {
    pub fn is_edge_step(&self) -> bool {
        matches!(self, PathStep::Edge { .. })
    }
}

#[derive(Clone, Debug, PartialEq, Eq)]
pub enum PathError {
    LabelNotLast,
    ZeroThreshold,
}

impl fmt::Display for PathError {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        match self {
            PathError::LabelNotLast => f.write_str("a label step may only end a path"),
            PathError::ZeroThreshold => f.write_str("minimum support must be at least 1"),
        }
    }
}

impl core::error::Error for PathError {}

/// Step sequence read from the pivot outwards.
#[derive(Clone, Debug, Default, PartialEq, Eq, PartialOrd, Ord, Hash)]
pub struct PathPattern {
    steps: Vec<PathStep>,
}

impl PathPattern {
    pub fn empty() -> Self {
        Self::default()
    }

    pub fn from_steps(steps: Vec<PathStep>) -> Result<Self, PathError> {
        let body = steps.len().saturating_sub(1);
        if steps[..body].iter().any(|s| !s.is_edge_step()) {
            return Err(PathError::LabelNotLast);
        }
        Ok(PathPattern { steps })
    }

    pub fn steps(&self) -> &[PathStep] {
        &self.steps
    }

    pub fn size(&self) -> usize {
        self.steps.len()
    }

    pub fn is_terminated(&self) -> bool {
        self.steps.last().is_some_and(|s| !s.is_edge_step())
    }

    /// `None` if the path already ends in a label.
    pub fn append(&self, step: PathStep) -> Option<Self> {
        if self.is_terminated() {
            return None;
        }
        let mut steps = self.steps.clone();
        steps.push(step);
        Some(PathPattern { steps })
    }

    /// Vertices `0..=edges` along the path, the optional label on the last.
    pub fn to_pattern(&self) -> NeighborhoodPattern {
        let mut labels = alloc::vec![Vec::new()];
        let mut edges = Vec::new();
        for step in &self.steps {
            let here = labels.len() - 1;
            match *step {
                PathStep::Edge { dir, label } => {
                    let next = here + 1;
                    labels.push(Vec::new());
                    edges.push(match dir {
                        Direction::Out => PatternEdge::new(here, next, label),
                        Direction::In => PatternEdge::new(next, here, label),
                    });
                }
                PathStep::Label(l) => labels[here].push(l),
            }
        }
        NeighborhoodPattern::fragment(labels, edges).expect("paths have no loops")
    }
}

/// Every distinct next step available after walking `path` injectively from
/// `v`, over all such walks. Empty for label-terminated paths.
pub fn traverse_next_steps(g: &LabeledGraph, v: Vid, path: &PathPattern) -> BTreeSet<PathStep> {
    let mut out = BTreeSet::new();
    if path.is_terminated() || (v as usize) >= g.vertex_count() {
        return out;
    }
    let mut visited = alloc::vec![v];
    walk(g, path.steps(), &mut visited, &mut out);
    out
}

fn walk(g: &LabeledGraph, rest: &[PathStep], visited: &mut Vec<Vid>, out: &mut BTreeSet<PathStep>) {
    let here = *visited.last().unwrap();
    let Some((step, rest)) = rest.split_first() else {
        for dir in [Direction::Out, Direction::In] {
            for &(label, w) in g.adjacent(here, dir) {
                if !visited.contains(&w) {
                    out.insert(PathStep::Edge { dir, label });
                }
            }
        }
        out.extend(g.labels(here).iter().map(|&l| PathStep::Label(l)));
        return;
    };
    let PathStep::Edge { dir, label } = *step else {
        return;
    };
    for &(_, w) in g.adjacent_with_label(here, dir, label) {
        if visited.contains(&w) {
            continue;
        }
        visited.push(w);
        walk(g, rest, visited, out);
        visited.pop();
    }
}

/// Frequent paths plus the number of per-vertex traversals performed.
#[derive(Clone, Debug, Default, PartialEq, Eq)]
pub struct PathSearch {
    pub paths: Vec<(PathPattern, VidList)>,
    pub traversals: usize,
}

/// All path patterns of at most `max_size` steps matched by at least `tau`
/// vertices of `start_set`, each with its match list, in discovery order.
///
/// With `use_vid` each extension scans only the parent's match list instead
/// of the whole start set; the output is the same either way.
pub fn frequent_paths(
    g: &LabeledGraph,
    tau: usize,
    max_size: usize,
    start_set: &VidList,
    use_vid: bool,
) -> Result<Vec<(PathPattern, VidList)>, PathError> {
    Ok(search_paths(g, tau, max_size, start_set, use_vid)?.paths)
}

pub fn search_paths(
    g: &LabeledGraph,
    tau: usize,
    max_size: usize,
    start_set: &VidList,
    use_vid: bool,
) -> Result<PathSearch, PathError> {
    if tau == 0 {
        return Err(PathError::ZeroThreshold);
    }
    let mut result = PathSearch::default();
    if max_size == 0 {
        return Ok(result);
    }
    let mut queue = VecDeque::new();
    queue.push_back((PathPattern::empty(), start_set.clone()));
    while let Some((path, vids)) = queue.pop_front() {
        let scan = if use_vid { &vids } else { start_set };
        let mut counts: BTreeMap<PathStep, Vec<Vid>> = BTreeMap::new();
        for &v in scan.iter() {
            result.traversals += 1;
            for step in traverse_next_steps(g, v, &path) {
                counts.entry(step).or_default().push(v);
            }
        }
        for (step, starts) in counts {
            if starts.len() < tau {
                continue;
            }
            let next = path.append(step).expect("queued paths are open");
            let starts = VidList::from_sorted(starts);
            if step.is_edge_step() && next.size() < max_size {
                queue.push_back((next.clone(), starts.clone()));
            }
            result.paths.push((next, starts));
        }
    }
    Ok(result)
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::oracle::toy_db;
    use alloc::vec;

    fn edge(dir: Direction, label: ELabel) -> PathStep {
        PathStep::Edge { dir, label }
    }

    #[test]
    fn next_steps_from_empty_path() {
        let g = toy_db();
        let a1 = g.vertex_id("a1").unwrap();
        let w = g.elabel("writes").unwrap();
        let author = g.vlabel("Author").unwrap();
        let steps: Vec<_> = traverse_next_steps(&g, a1, &PathPattern::empty())
            .into_iter()
            .collect();
        assert_eq!(
            steps,
            vec![edge(Direction::Out, w), PathStep::Label(author)]
        );
    }

    #[test]
    fn next_steps_after_writes() {
        let g = toy_db();
        let w = g.elabel("writes").unwrap();
        let c = g.elabel("cites").unwrap();
        let paper = g.vlabel("Paper").unwrap();
        let path = PathPattern::from_steps(vec![edge(Direction::Out, w)]).unwrap();

        // a1's papers: p2 cites p1, p1 is cited by p2, p3 is cited by p7
        let steps = traverse_next_steps(&g, g.vertex_id("a1").unwrap(), &path);
        assert!(steps.contains(&edge(Direction::Out, c)));
        assert!(steps.contains(&PathStep::Label(paper)));

        // a4 -> p8 -> p6: p8 cites but is never cited; the way back to a4 is visited
        let steps: Vec<_> = traverse_next_steps(&g, g.vertex_id("a4").unwrap(), &path)
            .into_iter()
            .collect();
        assert_eq!(steps, vec![edge(Direction::Out, c), PathStep::Label(paper)]);
    }

    #[test]
    fn terminated_paths_have_no_moves() {
        let g = toy_db();
        let p = PathPattern::from_steps(vec![PathStep::Label(VLabel(0))]).unwrap();
        assert!(traverse_next_steps(&g, 0, &p).is_empty());
        assert_eq!(
            PathPattern::from_steps(vec![
                PathStep::Label(VLabel(0)),
                edge(Direction::In, ELabel(0))
            ]),
            Err(PathError::LabelNotLast)
        );
    }

    #[test]
    fn toy_paths_on_authors() {
        let g = toy_db();
        let authors = g.vertices_with_label(g.vlabel("Author").unwrap()).clone();
        let w = g.elabel("writes").unwrap();
        let c = g.elabel("cites").unwrap();
        let paths = frequent_paths(&g, 3, 3, &authors, true).unwrap();
        let find = |steps: Vec<PathStep>| {
            let p = PathPattern::from_steps(steps).unwrap();
            paths.iter().find(|(q, _)| *q == p).map(|(_, v)| v.clone())
        };
        assert_eq!(find(vec![edge(Direction::Out, w)]).unwrap(), authors);
        let cited = find(vec![edge(Direction::Out, w), edge(Direction::In, c)]).unwrap();
        assert_eq!(cited.len(), 3);
        assert!(!cited.contains(g.vertex_id("a4").unwrap()));
    }

    #[test]
    fn threshold_above_universe_is_empty() {
        let g = toy_db();
        let authors = g.vertices_with_label(g.vlabel("Author").unwrap()).clone();
        assert!(frequent_paths(&g, 5, 3, &authors, true).unwrap().is_empty());
        assert_eq!(
            frequent_paths(&g, 0, 3, &authors, true),
            Err(PathError::ZeroThreshold)
        );
    }

    #[test]
    fn vid_restriction_is_transparent() {
        let g = toy_db();
        let all = g.all_vertices();
        for tau in 1..=4 {
            let with = search_paths(&g, tau, 4, &all, true).unwrap();
            let without = search_paths(&g, tau, 4, &all, false).unwrap();
            assert_eq!(with.paths, without.paths);
            assert!(with.traversals <= without.traversals);
        }
    }

    #[test]
    fn rendered_paths_are_path_patterns() {
        let g = toy_db();
        for (p, _) in frequent_paths(&g, 1, 4, &g.all_vertices(), true).unwrap() {
            assert!(p.to_pattern().is_path_pattern(), "{p:?}");
            assert_eq!(p.to_pattern().size(), p.size());
        }
    }
}
