//! Constructive extraction of aligned internally disjoint path pairs.
//!
//! Given a 2-connected graph, a path `p` from `x` to `y`, and any vertex
//! `z`, `aligned_pair` produces an `x,z`-path and an `x,y`-path that are
//! internally disjoint and both aligned with `p`.
//!
//! The construction peels vertices off the front of `p` one at a time:
//! solve the problem for the suffix starting at the second vertex, then
//! lift the two paths over the peeled vertex. Each lift either reuses a
//! suffix of a returned path (when the peeled vertex already lies on one)
//! or splices in a shortest escape path found with the peeled vertex's
//! successor deleted. The loop runs front-to-back instead of recursing,
//! so long base paths cannot overflow the stack.

use crate::bfs::{self, BfsSpec};
use crate::connectivity;
use crate::error::{Error, Result};
use crate::graph::{Graph, VertexId};
use crate::paths::{is_aligned_seq, verify_path, Path};

/// Result record: `p1` from `x` to `z`, `p2` from `x` to `y`, plus the
/// base path both are aligned with.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct AlignedPair {
    p1: Path,
    p2: Path,
    base: Path,
}

impl AlignedPair {
    pub fn p1(&self) -> &Path {
        &self.p1
    }

    pub fn p2(&self) -> &Path {
        &self.p2
    }

    pub fn base(&self) -> &Path {
        &self.base
    }

    /// The `z` endpoint this pair was built for.
    pub fn z(&self) -> VertexId {
        self.p1.last()
    }

    /// Checks every type invariant from scratch: both are valid paths with
    /// the right endpoints, every vertex they share is an endpoint of both,
    /// and both are aligned with the base. Independent of how the pair was
    /// constructed.
    pub fn verify(&self, g: &Graph) -> std::result::Result<(), String> {
        check_pair(
            g,
            self.base.vertices(),
            self.p1.last(),
            self.p1.vertices(),
            self.p2.vertices(),
        )
    }
}

/// Work counters for the construction; tests use these to pin the
/// `O(|V(p)| * (n + m))` bound.
#[derive(Debug, Clone, Copy, Default)]
pub struct SearchStats {
    /// Number of lift levels processed (at most `|V(p)| - 1`).
    pub levels: usize,
    /// Units of work: BFS vertex/edge touches plus per-level scans.
    pub ops: u64,
}

/// Invariant check for a (base, p1, p2) triple; `z` is where `p1` must end.
fn check_pair(
    g: &Graph,
    base: &[VertexId],
    z: VertexId,
    p1: &[VertexId],
    p2: &[VertexId],
) -> std::result::Result<(), String> {
    verify_path(g, p1).map_err(|v| format!("p1 invalid: {v}"))?;
    verify_path(g, p2).map_err(|v| format!("p2 invalid: {v}"))?;
    verify_path(g, base).map_err(|v| format!("base invalid: {v}"))?;
    let x = base[0];
    let y = *base.last().unwrap();
    if p1[0] != x {
        return Err(format!("p1 starts at {} instead of {x}", p1[0]));
    }
    if p2[0] != x {
        return Err(format!("p2 starts at {} instead of {x}", p2[0]));
    }
    if *p1.last().unwrap() != z {
        return Err(format!("p1 ends at {} instead of {z}", p1.last().unwrap()));
    }
    if *p2.last().unwrap() != y {
        return Err(format!("p2 ends at {} instead of {y}", p2.last().unwrap()));
    }
    // internal disjointness: a shared vertex must be an endpoint of both
    let ends1 = [p1[0], *p1.last().unwrap()];
    let ends2 = [p2[0], *p2.last().unwrap()];
    for &w in p1 {
        if p2.contains(&w) && !(ends1.contains(&w) && ends2.contains(&w)) {
            return Err(format!("vertex {w} is shared but internal to p1 or p2"));
        }
    }
    if !is_aligned_seq(base, p1) {
        return Err("p1 is not aligned with the base path".into());
    }
    if !is_aligned_seq(base, p2) {
        return Err("p2 is not aligned with the base path".into());
    }
    Ok(())
}

/// One lift record, kept for the failure trace.
#[derive(Debug, Clone)]
struct LiftRecord {
    level: usize,
    case: String,
    q: Option<Vec<VertexId>>,
}

fn render_trace(records: &[LiftRecord], p1: &[VertexId], p2: &[VertexId]) -> String {
    let mut out = String::new();
    for r in records {
        out.push_str(&format!("level {}: {}", r.level, r.case));
        if let Some(q) = &r.q {
            out.push_str(&format!(", Q = {q:?}"));
        }
        out.push('\n');
    }
    out.push_str(&format!("p1 = {p1:?}\np2 = {p2:?}\n"));
    out
}

/// Shortest path from `source` whose last vertex lies in `targets` and
/// whose internal vertices avoid both `targets` and the `forbidden`
/// vertex. Breadth-first, neighbors scanned in ascending order, so ties
/// resolve to the smallest ids layer by layer.
pub fn escape_path(
    g: &Graph,
    forbidden: VertexId,
    source: VertexId,
    targets: &[VertexId],
) -> Result<Path> {
    if source >= g.n() || forbidden >= g.n() {
        return Err(Error::contract("escape_path: vertex out of range"));
    }
    if forbidden == source {
        return Err(Error::contract(
            "escape_path: forbidden vertex equals the source",
        ));
    }
    if targets.is_empty() {
        return Err(Error::contract("escape_path: empty target set"));
    }
    let mut mask = vec![false; g.n()];
    for &t in targets {
        if t >= g.n() {
            return Err(Error::contract("escape_path: target out of range"));
        }
        mask[t] = true;
    }
    if mask[source] {
        return Err(Error::contract(
            "escape_path: source must not be a target",
        ));
    }
    let mut ops = 0;
    let found = bfs::first_target_path(g, source, &BfsSpec::without_vertex(forbidden), &mask, &mut ops);
    match found {
        Some(vs) => Ok(Path::from_vec_unchecked(vs)),
        None => Err(Error::contract(format!(
            "escape_path: no path from {source} to the target set avoiding {forbidden}"
        ))),
    }
}

/// Builds the aligned internally disjoint pair for `(g, p, z)`.
///
/// Preconditions: `g` 2-connected, `p` a valid path in `g` with at least
/// two vertices, `z` a vertex of `g`. The construction always succeeds on
/// such inputs; an `Internal` error (with a lift-by-lift trace) means a
/// bug, not a property of the input.
pub fn aligned_pair(g: &Graph, p: &Path, z: VertexId) -> Result<AlignedPair> {
    aligned_pair_with_stats(g, p, z).map(|(pair, _)| pair)
}

/// Same as [`aligned_pair`], also reporting work counters.
pub fn aligned_pair_with_stats(
    g: &Graph,
    p: &Path,
    z: VertexId,
) -> Result<(AlignedPair, SearchStats)> {
    if z >= g.n() {
        return Err(Error::contract(format!("z = {z} out of range")));
    }
    verify_path(g, p.vertices())
        .map_err(|v| Error::contract(format!("base path invalid in this graph: {v}")))?;
    if p.len() < 2 {
        return Err(Error::contract("base path must have at least 2 vertices"));
    }
    if !connectivity::analyze(g).two_connected {
        return Err(Error::contract("aligned_pair requires a 2-connected graph"));
    }

    let mut stats = SearchStats::default();
    let vs = p.vertices();
    let s = vs.len();

    // Descend: the first level whose origin equals z answers degenerately
    // with a single-vertex p1; otherwise descend to the two-vertex suffix.
    let mut start = s - 2;
    let mut degenerate = false;
    for (k, &v) in vs.iter().take(s - 1).enumerate() {
        stats.ops += 1;
        if v == z {
            start = k;
            degenerate = true;
            break;
        }
    }

    let mut records: Vec<LiftRecord> = Vec::new();
    let (mut p1, mut p2): (Vec<VertexId>, Vec<VertexId>);
    if degenerate {
        p1 = vec![z];
        p2 = vs[start..].to_vec();
        records.push(LiftRecord {
            level: start,
            case: format!("degenerate z = origin {z}"),
            q: None,
        });
    } else {
        // Base level: suffix (a, b). For z = b route p1 through G minus the
        // edge ab; otherwise route p1 to z through G minus the vertex b.
        let a = vs[s - 2];
        let b = vs[s - 1];
        let mut targets = vec![false; g.n()];
        let found = if z == b {
            targets[b] = true;
            bfs::first_target_path(g, a, &BfsSpec::without_edge(a, b), &targets, &mut stats.ops)
        } else {
            targets[z] = true;
            bfs::first_target_path(g, a, &BfsSpec::without_vertex(b), &targets, &mut stats.ops)
        };
        p1 = found.ok_or_else(|| {
            Error::internal(
                "base-level path must exist in a 2-connected graph",
                format!("a={a} b={b} z={z}"),
            )
        })?;
        p2 = vec![a, b];
        records.push(LiftRecord {
            level: s - 2,
            case: if z == b {
                "base, z = y".to_string()
            } else {
                "base, z off the suffix".to_string()
            },
            q: None,
        });
    }

    // Lift front-to-back over each peeled vertex.
    for k in (0..start).rev() {
        stats.levels += 1;
        let v1 = vs[k];
        let v2 = vs[k + 1];
        let rec = lift_level(g, vs, k, v1, v2, &mut p1, &mut p2, &mut stats)?;
        records.push(rec);
        stats.ops += (g.n() + p1.len() + p2.len()) as u64;
        if let Err(reason) = check_pair(g, &vs[k..], z, &p1, &p2) {
            return Err(Error::internal(
                format!("lift at level {k} broke the pair invariants: {reason}"),
                render_trace(&records, &p1, &p2),
            ));
        }
    }

    let pair = AlignedPair {
        p1: Path::from_vec_unchecked(p1),
        p2: Path::from_vec_unchecked(p2),
        base: p.clone(),
    };
    if let Err(reason) = pair.verify(g) {
        return Err(Error::internal(
            format!("final pair failed verification: {reason}"),
            render_trace(&records, pair.p1.vertices(), pair.p2.vertices()),
        ));
    }
    Ok((pair, stats))
}

/// Lifts the level-(k+1) pair over the peeled vertex `v1 = vs[k]`.
#[allow(clippy::too_many_arguments)]
fn lift_level(
    g: &Graph,
    vs: &[VertexId],
    k: usize,
    v1: VertexId,
    v2: VertexId,
    p1: &mut Vec<VertexId>,
    p2: &mut Vec<VertexId>,
    stats: &mut SearchStats,
) -> Result<LiftRecord> {
    stats.ops += (p1.len() + p2.len()) as u64;
    let on1 = p1.iter().position(|&w| w == v1);
    let on2 = p2.iter().position(|&w| w == v1);
    if on1.is_some() && on2.is_some() {
        // only possible when z = v1 = current origin, which the degenerate
        // descent already short-circuited
        return Err(Error::internal(
            "peeled vertex lies on both lifted paths",
            format!("level {k}, v1 = {v1}, p1 = {p1:?}, p2 = {p2:?}"),
        ));
    }

    // Case 1: the peeled vertex already lies on one path. Keep that path's
    // suffix from it; prepend the peeled edge to the other.
    if let Some(idx) = on1 {
        p1.drain(..idx);
        p2.insert(0, v1);
        return Ok(LiftRecord {
            level: k,
            case: "case 1 on p1".into(),
            q: None,
        });
    }
    if let Some(idx) = on2 {
        p2.drain(..idx);
        p1.insert(0, v1);
        return Ok(LiftRecord {
            level: k,
            case: "case 1 on p2".into(),
            q: None,
        });
    }

    // Case 2: escape from v1 in G - v2 to the rest of the configuration.
    let mut targets = vec![false; g.n()];
    let mut on_pair = vec![false; g.n()];
    for &w in vs[k..].iter() {
        targets[w] = true;
    }
    for &w in p1.iter().chain(p2.iter()) {
        targets[w] = true;
        on_pair[w] = true;
    }
    targets[v1] = false;
    targets[v2] = false;
    stats.ops += 2 * g.n() as u64;
    let q = bfs::first_target_path(g, v1, &BfsSpec::without_vertex(v2), &targets, &mut stats.ops)
        .ok_or_else(|| {
            Error::internal(
                "escape path must exist in a 2-connected graph",
                format!("level {k}, v1 = {v1}, v2 = {v2}"),
            )
        })?;
    let u = *q.last().unwrap();

    stats.ops += (p1.len() + p2.len()) as u64;
    if let Some(idx) = p1.iter().position(|&w| w == u) {
        // splice: p1 := Q + suffix of p1 after u
        let mut next = q.clone();
        next.extend_from_slice(&p1[idx + 1..]);
        *p1 = next;
        p2.insert(0, v1);
        return Ok(LiftRecord {
            level: k,
            case: format!("case 2, escape hits p1 at {u}"),
            q: Some(q),
        });
    }
    if let Some(idx) = p2.iter().position(|&w| w == u) {
        let mut next = q.clone();
        next.extend_from_slice(&p2[idx + 1..]);
        *p2 = next;
        p1.insert(0, v1);
        return Ok(LiftRecord {
            level: k,
            case: format!("case 2, escape hits p2 at {u}"),
            q: Some(q),
        });
    }

    // The escape ends on the base path strictly between the peeled pair and
    // the first later base vertex that touches p1 or p2. Ride the base path
    // from u to that junction, then continue along the touched path.
    let j = vs[k..]
        .iter()
        .position(|&w| w == u)
        .map(|off| k + off)
        .ok_or_else(|| {
            Error::internal(
                "escape endpoint is on none of base, p1, p2",
                format!("level {k}, u = {u}, Q = {q:?}"),
            )
        })?;
    stats.ops += (vs.len() - j) as u64;
    let jp = (j..vs.len())
        .find(|&t| on_pair[vs[t]])
        .ok_or_else(|| {
            Error::internal(
                "no base vertex after the escape endpoint touches p1 or p2",
                format!("level {k}, u = {u}"),
            )
        })?;
    let vjp = vs[jp];
    let (target_is_p1, idx) = match p1.iter().position(|&w| w == vjp) {
        Some(i) => (true, i),
        None => (false, p1.len()), // placeholder, fixed below
    };
    let case = format!(
        "case 2, escape hits base at {u} (index {j}), junction {vjp} (index {jp}) on {}",
        if target_is_p1 { "p1" } else { "p2" }
    );
    if target_is_p1 {
        let mut next = q.clone();
        next.extend_from_slice(&vs[j + 1..=jp]);
        next.extend_from_slice(&p1[idx + 1..]);
        *p1 = next;
        p2.insert(0, v1);
    } else {
        let idx = p2.iter().position(|&w| w == vjp).unwrap();
        let mut next = q.clone();
        next.extend_from_slice(&vs[j + 1..=jp]);
        next.extend_from_slice(&p2[idx + 1..]);
        *p2 = next;
        p1.insert(0, v1);
    }
    Ok(LiftRecord {
        level: k,
        case,
        q: Some(q),
    })
}

#[cfg(test)]
mod tests {
    use super::*;

    fn c5() -> Graph {
        Graph::parse("0 1\n1 2\n2 3\n3 4\n4 0").unwrap()
    }

    fn k4() -> Graph {
        Graph::parse("0 1\n0 2\n0 3\n1 2\n1 3\n2 3").unwrap()
    }

    #[test]
    fn c5_full_path_z_inside() {
        let g = c5();
        let base = Path::new(&g, vec![0, 1, 2, 3, 4]).unwrap();
        let pair = aligned_pair(&g, &base, 2).unwrap();
        pair.verify(&g).unwrap();
        assert_eq!(pair.p1().vertices(), &[0, 1, 2]);
        assert_eq!(pair.p2().vertices(), &[0, 4]);
    }

    #[test]
    fn triangle_base_case() {
        let g = Graph::parse("0 1\n1 2\n2 0").unwrap();
        let base = Path::new(&g, vec![0, 1]).unwrap();
        let pair = aligned_pair(&g, &base, 1).unwrap();
        pair.verify(&g).unwrap();
        assert_eq!(pair.p1().vertices(), &[0, 2, 1]);
        assert_eq!(pair.p2().vertices(), &[0, 1]);
    }

    #[test]
    fn k4_degenerate_z_is_origin() {
        let g = k4();
        let base = Path::new(&g, vec![0, 1, 2, 3]).unwrap();
        let pair = aligned_pair(&g, &base, 0).unwrap();
        pair.verify(&g).unwrap();
        assert_eq!(pair.p1().vertices(), &[0]);
        assert_eq!(pair.p2().last(), 3);
    }

    #[test]
    fn base_case_z_off_the_path() {
        // base (0,1) in C5 with z = 3: p1 must route around avoiding y = 1
        let g = c5();
        let base = Path::new(&g, vec![0, 1]).unwrap();
        let pair = aligned_pair(&g, &base, 3).unwrap();
        pair.verify(&g).unwrap();
        assert_eq!(pair.p1().vertices(), &[0, 4, 3]);
        assert_eq!(pair.p2().vertices(), &[0, 1]);
    }

    #[test]
    fn remark_three_shape_on_cycles() {
        // on an n-cycle with the full base path and z = v3, p2 must end at
        // the far endpoint; the pair never promises two aligned v1,v3-paths
        for n in 5..=9 {
            let text: String = (0..n).map(|i| format!("{} {}\n", i, (i + 1) % n)).collect();
            let g = Graph::parse(&text).unwrap();
            let base = Path::new(&g, (0..n).collect()).unwrap();
            let pair = aligned_pair(&g, &base, 2).unwrap();
            pair.verify(&g).unwrap();
            assert_eq!(pair.p1().vertices(), &[0, 1, 2]);
            assert_eq!(pair.p2().vertices(), &[0, n - 1]);
        }
    }

    #[test]
    fn escape_path_examples() {
        let g = c5();
        let q = escape_path(&g, 1, 0, &[2, 3]).unwrap();
        assert_eq!(q.vertices(), &[0, 4, 3]);

        // source adjacent to a target: single edge
        let q = escape_path(&g, 2, 0, &[1]).unwrap();
        assert_eq!(q.vertices(), &[0, 1]);

        // unreachable target set
        let path3 = Graph::parse("0 1\n1 2").unwrap();
        assert!(escape_path(&path3, 1, 0, &[2]).is_err());
    }

    #[test]
    fn escape_path_contract_checks() {
        let g = c5();
        assert!(escape_path(&g, 0, 0, &[2]).is_err());
        assert!(escape_path(&g, 1, 0, &[]).is_err());
        assert!(escape_path(&g, 1, 0, &[0, 2]).is_err());
    }

    #[test]
    fn rejects_non_two_connected() {
        let path3 = Graph::parse("0 1\n1 2").unwrap();
        let base = Path::new(&path3, vec![0, 1]).unwrap();
        assert!(aligned_pair(&path3, &base, 2).is_err());
    }

    #[test]
    fn rejects_single_vertex_base() {
        let g = c5();
        let base = Path::new(&g, vec![0]).unwrap();
        assert!(aligned_pair(&g, &base, 2).is_err());
    }

    #[test]
    fn stats_track_levels() {
        let g = c5();
        let base = Path::new(&g, vec![0, 1, 2, 3, 4]).unwrap();
        let (_, stats) = aligned_pair_with_stats(&g, &base, 4).unwrap();
        assert!(stats.levels <= base.len() - 1);
        assert!(stats.ops > 0);
    }
}
