//! Paths, cycles, lollipops and the alignment predicate.
//!
//! All three types validate their structural invariants against a host
//! graph at construction time and are immutable afterwards. `verify_cycle`
//! and `verify_lollipop` run the same checks on raw vertex sequences, which
//! is what certificate re-validation uses.

use crate::error::{Error, Result};
use crate::graph::{Graph, VertexId};

/// Why a vertex sequence is not a valid path/cycle/lollipop in a graph.
#[derive(Debug, Clone, PartialEq, Eq)]
pub enum Violation {
    Empty,
    TooShort { len: usize, need: usize },
    OutOfRange(VertexId),
    Repeated(VertexId),
    MissingEdge(VertexId, VertexId),
    /// Lollipop only: the cycle/path intersection is not exactly the path origin.
    BadAttachment(String),
}

impl std::fmt::Display for Violation {
    fn fmt(&self, f: &mut std::fmt::Formatter<'_>) -> std::fmt::Result {
        match self {
            Violation::Empty => write!(f, "empty vertex sequence"),
            Violation::TooShort { len, need } => {
                write!(f, "sequence of length {len}, need at least {need}")
            }
            Violation::OutOfRange(v) => write!(f, "vertex {v} out of range"),
            Violation::Repeated(v) => write!(f, "vertex {v} repeated"),
            Violation::MissingEdge(u, v) => write!(f, "({u}, {v}) is not an edge"),
            Violation::BadAttachment(msg) => write!(f, "{msg}"),
        }
    }
}

fn check_distinct_in_range(g: &Graph, vs: &[VertexId]) -> std::result::Result<(), Violation> {
    let mut seen = vec![false; g.n()];
    for &v in vs {
        if v >= g.n() {
            return Err(Violation::OutOfRange(v));
        }
        if seen[v] {
            return Err(Violation::Repeated(v));
        }
        seen[v] = true;
    }
    Ok(())
}

/// Checks that `vs` is a valid path in `g`: nonempty, distinct vertices,
/// consecutive pairs adjacent. A single vertex is a valid degenerate path.
pub fn verify_path(g: &Graph, vs: &[VertexId]) -> std::result::Result<(), Violation> {
    if vs.is_empty() {
        return Err(Violation::Empty);
    }
    check_distinct_in_range(g, vs)?;
    for w in vs.windows(2) {
        if !g.has_edge(w[0], w[1]) {
            return Err(Violation::MissingEdge(w[0], w[1]));
        }
    }
    Ok(())
}

/// Checks that `vs` is a valid cycle in `g`: at least 3 distinct vertices,
/// consecutive pairs adjacent, and the wrap-around edge present.
pub fn verify_cycle(g: &Graph, vs: &[VertexId]) -> std::result::Result<(), Violation> {
    if vs.len() < 3 {
        return Err(Violation::TooShort {
            len: vs.len(),
            need: 3,
        });
    }
    check_distinct_in_range(g, vs)?;
    for w in vs.windows(2) {
        if !g.has_edge(w[0], w[1]) {
            return Err(Violation::MissingEdge(w[0], w[1]));
        }
    }
    let (first, last) = (vs[0], vs[vs.len() - 1]);
    if !g.has_edge(last, first) {
        return Err(Violation::MissingEdge(last, first));
    }
    Ok(())
}

/// Checks the lollipop invariant for raw sequences: `cycle` is a cycle,
/// `path` is a path, and their intersection is exactly the path's first
/// vertex.
pub fn verify_lollipop(
    g: &Graph,
    cycle: &[VertexId],
    path: &[VertexId],
) -> std::result::Result<(), Violation> {
    verify_cycle(g, cycle)?;
    verify_path(g, path)?;
    let origin = path[0];
    if !cycle.contains(&origin) {
        return Err(Violation::BadAttachment(format!(
            "path origin {origin} is not on the cycle"
        )));
    }
    for &v in &path[1..] {
        if cycle.contains(&v) {
            return Err(Violation::BadAttachment(format!(
                "path vertex {v} lies on the cycle but is not the path origin"
            )));
        }
    }
    Ok(())
}

/// An oriented path: distinct vertices, consecutive pairs adjacent in the
/// host graph. A single vertex is legal (degenerate path), which the
/// aligned-pair machinery and zero-length lollipop tails both rely on.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct Path {
    vertices: Vec<VertexId>,
}

impl Path {
    pub fn new(g: &Graph, vertices: Vec<VertexId>) -> Result<Path> {
        verify_path(g, &vertices)
            .map_err(|v| Error::contract(format!("invalid path: {v}")))?;
        Ok(Path { vertices })
    }

    /// Internal constructor for sequences an algorithm has already built
    /// correctly; validated in debug builds.
    pub(crate) fn from_vec_unchecked(vertices: Vec<VertexId>) -> Path {
        debug_assert!(!vertices.is_empty());
        Path { vertices }
    }

    pub fn vertices(&self) -> &[VertexId] {
        &self.vertices
    }

    pub fn len(&self) -> usize {
        self.vertices.len()
    }

    pub fn is_empty(&self) -> bool {
        false
    }

    /// Number of edges, i.e. `|V| - 1`.
    pub fn edge_len(&self) -> usize {
        self.vertices.len() - 1
    }

    pub fn first(&self) -> VertexId {
        self.vertices[0]
    }

    pub fn last(&self) -> VertexId {
        *self.vertices.last().unwrap()
    }

    pub fn contains(&self, v: VertexId) -> bool {
        self.vertices.contains(&v)
    }

    pub fn into_vec(self) -> Vec<VertexId> {
        self.vertices
    }
}

/// A cycle: at least 3 distinct vertices in cyclic order, every consecutive
/// pair and the wrap-around pair adjacent.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct Cycle {
    vertices: Vec<VertexId>,
}

impl Cycle {
    pub fn new(g: &Graph, vertices: Vec<VertexId>) -> Result<Cycle> {
        verify_cycle(g, &vertices)
            .map_err(|v| Error::contract(format!("invalid cycle: {v}")))?;
        Ok(Cycle { vertices })
    }

    pub(crate) fn from_vec_unchecked(vertices: Vec<VertexId>) -> Cycle {
        debug_assert!(vertices.len() >= 3);
        Cycle { vertices }
    }

    pub fn vertices(&self) -> &[VertexId] {
        &self.vertices
    }

    pub fn len(&self) -> usize {
        self.vertices.len()
    }

    pub fn is_empty(&self) -> bool {
        false
    }

    pub fn contains(&self, v: VertexId) -> bool {
        self.vertices.contains(&v)
    }

    pub fn into_vec(self) -> Vec<VertexId> {
        self.vertices
    }
}

/// A lollipop `(C, P)`: a cycle and a path whose only common vertex is the
/// path's first vertex. The path may be a single vertex (tail length 0).
/// The tail's far end is the tip.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct Lollipop {
    cycle: Cycle,
    path: Path,
}

impl Lollipop {
    pub fn new(g: &Graph, cycle: Cycle, path: Path) -> Result<Lollipop> {
        verify_lollipop(g, cycle.vertices(), path.vertices())
            .map_err(|v| Error::contract(format!("invalid lollipop: {v}")))?;
        Ok(Lollipop { cycle, path })
    }

    pub(crate) fn from_parts_unchecked(cycle: Cycle, path: Path) -> Lollipop {
        Lollipop { cycle, path }
    }

    pub fn cycle(&self) -> &Cycle {
        &self.cycle
    }

    pub fn path(&self) -> &Path {
        &self.path
    }

    /// The vertex shared by cycle and path.
    pub fn attachment(&self) -> VertexId {
        self.path.first()
    }

    /// The far end of the path (equals the attachment when the tail has
    /// length 0).
    pub fn tip(&self) -> VertexId {
        self.path.last()
    }

    /// Tail length in edges.
    pub fn tail_len(&self) -> usize {
        self.path.edge_len()
    }
}

/// Alignment predicate: `candidate` is aligned with `base` when they share
/// their origin and every pair of common vertices appears in the same
/// relative order in both.
///
/// Checked with position-index maps in `O(|base| + |candidate|)`: walk the
/// candidate and require the base positions of common vertices to be
/// strictly increasing. Errors if the origins differ.
pub fn is_aligned(base: &Path, candidate: &Path) -> Result<bool> {
    if base.first() != candidate.first() {
        return Err(Error::contract(format!(
            "alignment requires a common origin: base starts at {}, candidate at {}",
            base.first(),
            candidate.first()
        )));
    }
    Ok(is_aligned_seq(base.vertices(), candidate.vertices()))
}

/// Position-map alignment check on raw sequences (no origin precondition);
/// used internally where the origin is known to match.
pub(crate) fn is_aligned_seq(base: &[VertexId], candidate: &[VertexId]) -> bool {
    let max = base
        .iter()
        .chain(candidate.iter())
        .copied()
        .max()
        .unwrap_or(0);
    let mut pos = vec![usize::MAX; max + 1];
    for (i, &v) in base.iter().enumerate() {
        pos[v] = i;
    }
    let mut last = None;
    for &v in candidate {
        let p = pos[v];
        if p == usize::MAX {
            continue;
        }
        if let Some(prev) = last {
            if p < prev {
                return false;
            }
        }
        last = Some(p);
    }
    true
}

#[cfg(test)]
mod tests {
    use super::*;

    fn path(g: &Graph, vs: &[VertexId]) -> Path {
        Path::new(g, vs.to_vec()).unwrap()
    }

    fn c5() -> Graph {
        Graph::parse("0 1\n1 2\n2 3\n3 4\n4 0").unwrap()
    }

    #[test]
    fn aligned_examples() {
        let g = c5();
        let base = path(&g, &[0, 1, 2, 3, 4]);
        // shares origin and one later vertex, in order
        assert!(is_aligned(&base, &path(&g, &[0, 4])).unwrap());
        // 3 appears before 4 in base but after in candidate
        assert!(!is_aligned(&base, &path(&g, &[0, 4, 3, 2])).unwrap());
        // identity
        assert!(is_aligned(&base, &base.clone()).unwrap());
    }

    #[test]
    fn aligned_requires_common_origin() {
        let g = c5();
        let base = path(&g, &[0, 1, 2]);
        let cand = path(&g, &[1, 2, 3]);
        assert!(is_aligned(&base, &cand).is_err());
    }

    #[test]
    fn aligned_degenerate_candidate() {
        let g = c5();
        let base = path(&g, &[0, 1, 2]);
        let single = path(&g, &[0]);
        assert!(is_aligned(&base, &single).unwrap());
    }

    #[test]
    fn verify_cycle_examples() {
        let tri = Graph::parse("0 1\n1 2\n2 0").unwrap();
        assert!(verify_cycle(&tri, &[0, 1, 2]).is_ok());

        let p3 = Graph::parse("0 1\n1 2").unwrap();
        assert_eq!(
            verify_cycle(&p3, &[0, 1, 2]),
            Err(Violation::MissingEdge(2, 0))
        );

        let g = c5();
        assert!(verify_cycle(&g, &[0, 1, 2, 3, 4]).is_ok());
        assert!(matches!(
            verify_cycle(&g, &[0, 1]),
            Err(Violation::TooShort { .. })
        ));
        assert!(matches!(
            verify_cycle(&g, &[0, 1, 2, 1]),
            Err(Violation::Repeated(1))
        ));
    }

    #[test]
    fn verify_lollipop_examples() {
        // triangle 0,1,2 plus an edge 2-3
        let g = Graph::parse("0 1\n1 2\n2 0\n2 3").unwrap();
        assert!(verify_lollipop(&g, &[0, 1, 2], &[2, 3]).is_ok());
        // shared vertex must be the first of the path
        assert!(matches!(
            verify_lollipop(&g, &[0, 1, 2], &[3, 2]),
            Err(Violation::BadAttachment(_))
        ));
        // degenerate single-vertex tail
        assert!(verify_lollipop(&g, &[0, 1, 2], &[2]).is_ok());
        // path origin entirely off-cycle
        assert!(matches!(
            verify_lollipop(&g, &[0, 1, 2], &[3]),
            Err(Violation::BadAttachment(_))
        ));
    }

    #[test]
    fn single_vertex_path_is_legal() {
        let g = c5();
        let p = Path::new(&g, vec![3]).unwrap();
        assert_eq!(p.len(), 1);
        assert_eq!(p.edge_len(), 0);
        assert_eq!(p.first(), p.last());
    }

    #[test]
    fn path_rejects_nonedges_and_repeats() {
        let g = c5();
        assert!(Path::new(&g, vec![0, 2]).is_err());
        assert!(Path::new(&g, vec![0, 1, 0]).is_err());
        assert!(Path::new(&g, vec![]).is_err());
        assert!(Path::new(&g, vec![7]).is_err());
    }
}
