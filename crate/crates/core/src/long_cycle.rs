//! Certified extraction of a cycle of length at least `min(n, 2δ)` from a
//! 2-connected graph.
//!
//! The loop keeps a lollipop `(C, P)` — a cycle plus a tail path attached
//! at one vertex — grows the tail until its tip has no neighbor outside
//! the lollipop, and then converts the configuration into a strictly
//! longer cycle: directly when the tip sees the cycle (case 1), and via an
//! aligned internally disjoint path pair when all its neighbors sit on the
//! tail (case 2). Each round lengthens the cycle, so at most `n` rounds
//! run before the target bound is met.

use serde::{Deserialize, Serialize};

use crate::aligned_paths;
use crate::connectivity;
use crate::error::{Error, Result};
use crate::graph::{Graph, VertexId};
use crate::paths::{verify_cycle, verify_lollipop, Cycle, Lollipop, Path};

/// Which rule produced a trace entry.
#[derive(Debug, Clone, Copy, PartialEq, Eq, Serialize, Deserialize)]
pub enum CaseTaken {
    #[serde(rename = "GROW")]
    Grow,
    #[serde(rename = "CASE1A")]
    Case1A,
    #[serde(rename = "CASE1B")]
    Case1B,
    #[serde(rename = "CASE1C")]
    Case1C,
    #[serde(rename = "CASE2_DEGENERATE")]
    Case2Degenerate,
    #[serde(rename = "CASE2")]
    Case2,
}

/// Bookkeeping for a case-2 step: the aligned-pair call and the splice
/// coordinates used to assemble the longer cycle.
#[derive(Debug, Clone, Serialize, Deserialize)]
pub struct Case2Detail {
    /// `z`: the lowest-index tail neighbor of the tip.
    pub z: VertexId,
    /// Last cycle vertex on each returned path.
    pub a1: VertexId,
    pub a2: VertexId,
    /// First vertex of each returned path among the high tail segment.
    pub b1: VertexId,
    pub b2: VertexId,
    /// 1-based tail index of `b2`.
    pub j: usize,
    /// Largest tip-neighbor index below `j` (absent in the degenerate branch).
    pub j_prime: Option<usize>,
    /// The longer cycle arc between `a1` and `a2` (absent in the degenerate branch).
    pub arc: Option<Vec<VertexId>>,
    pub p1: Vec<VertexId>,
    pub p2: Vec<VertexId>,
}

/// One improvement-loop event.
#[derive(Debug, Clone, Serialize, Deserialize)]
pub struct ImprovementTrace {
    pub iteration: usize,
    pub case_taken: CaseTaken,
    pub cycle_len_before: usize,
    pub cycle_len_after: usize,
    #[serde(skip_serializing_if = "Option::is_none", default)]
    pub case2: Option<Case2Detail>,
}

/// The algorithm's output: a cycle whose length is certified to reach
/// `min(n, 2δ)`, plus enough metadata for independent re-validation.
#[derive(Debug, Clone, Serialize, Deserialize)]
pub struct CycleCertificate {
    pub cycle: Vec<VertexId>,
    pub n: usize,
    pub delta: usize,
    pub bound: usize,
    pub iterations: usize,
    #[serde(default)]
    pub trace: Vec<ImprovementTrace>,
}

impl CycleCertificate {
    /// Re-validates the certificate against a host graph from scratch:
    /// metadata must match the graph, the cycle must be a real cycle, and
    /// its length must reach the bound.
    pub fn verify(&self, g: &Graph) -> std::result::Result<(), String> {
        if self.n != g.n() {
            return Err(format!("certificate n = {} but graph has {}", self.n, g.n()));
        }
        if self.delta != g.min_degree() {
            return Err(format!(
                "certificate delta = {} but graph has {}",
                self.delta,
                g.min_degree()
            ));
        }
        if self.bound != self.n.min(2 * self.delta) {
            return Err(format!(
                "certificate bound = {} but min(n, 2*delta) = {}",
                self.bound,
                self.n.min(2 * self.delta)
            ));
        }
        verify_cycle(g, &self.cycle).map_err(|v| format!("cycle invalid: {v}"))?;
        if self.cycle.len() < self.bound {
            return Err(format!(
                "cycle length {} below bound {}",
                self.cycle.len(),
                self.bound
            ));
        }
        Ok(())
    }

    /// Certificate JSON without the trace.
    pub fn to_json(&self) -> String {
        serde_json::json!({
            "cycle": self.cycle,
            "n": self.n,
            "delta": self.delta,
            "bound": self.bound,
            "iterations": self.iterations,
        })
        .to_string()
    }

    /// Certificate JSON including the trace.
    pub fn to_json_with_trace(&self) -> String {
        serde_json::to_string(self).expect("certificate serialization cannot fail")
    }

    pub fn from_json(text: &str) -> Result<CycleCertificate> {
        serde_json::from_str(text)
            .map_err(|e| Error::contract(format!("bad certificate JSON: {e}")))
    }
}

/// Relabeled view of a lollipop: cycle as `v_1..v_c` with the attachment
/// last (`v_c = u_1`), tail as `u_1..u_{l+1}`. Indices below are 1-based
/// to match that labeling.
struct Frame {
    vs: Vec<VertexId>,
    us: Vec<VertexId>,
    cycle_index: Vec<usize>, // vertex -> 1-based cycle index, 0 = absent
    path_index: Vec<usize>,  // vertex -> 1-based tail index, 0 = absent
}

impl Frame {
    fn new(g: &Graph, l: &Lollipop) -> Frame {
        let cyc = l.cycle().vertices();
        let c = cyc.len();
        let t = cyc
            .iter()
            .position(|&w| w == l.attachment())
            .expect("attachment lies on the cycle");
        // rotate so the attachment comes last, preserving orientation
        let mut vs = Vec::with_capacity(c);
        for off in 1..=c {
            vs.push(cyc[(t + off) % c]);
        }
        let us = l.path().vertices().to_vec();
        let mut cycle_index = vec![0; g.n()];
        for (i, &w) in vs.iter().enumerate() {
            cycle_index[w] = i + 1;
        }
        let mut path_index = vec![0; g.n()];
        for (i, &w) in us.iter().enumerate() {
            path_index[w] = i + 1;
        }
        Frame {
            vs,
            us,
            cycle_index,
            path_index,
        }
    }

    fn c(&self) -> usize {
        self.vs.len()
    }

    fn tail_len(&self) -> usize {
        self.us.len() - 1
    }

    fn tip(&self) -> VertexId {
        *self.us.last().unwrap()
    }

    fn v(&self, i: usize) -> VertexId {
        self.vs[i - 1]
    }

    fn u(&self, i: usize) -> VertexId {
        self.us[i - 1]
    }

    fn is_tip_maximal(&self, g: &Graph) -> bool {
        g.neighbors(self.tip())
            .iter()
            .all(|&w| self.cycle_index[w] != 0 || self.path_index[w] != 0)
    }

    /// 1-based cycle indices of tip neighbors on `C - v_c`, ascending.
    fn tip_cycle_neighbor_indices(&self, g: &Graph) -> Vec<usize> {
        let c = self.c();
        let mut idx: Vec<usize> = g
            .neighbors(self.tip())
            .iter()
            .map(|&w| self.cycle_index[w])
            .filter(|&i| i != 0 && i != c)
            .collect();
        idx.sort_unstable();
        idx
    }

    /// 1-based tail indices of tip neighbors on `P`, ascending.
    fn tip_path_neighbor_indices(&self, g: &Graph) -> Vec<usize> {
        let mut idx: Vec<usize> = g
            .neighbors(self.tip())
            .iter()
            .map(|&w| self.path_index[w])
            .filter(|&i| i != 0)
            .collect();
        idx.sort_unstable();
        idx
    }

    fn describe(&self) -> String {
        format!("C = {:?} (attachment last), P = {:?}", self.vs, self.us)
    }
}

/// Builds a starting lollipop: the first depth-first fundamental cycle,
/// with a single-vertex tail rooted at the smallest cycle vertex that has
/// a neighbor outside the cycle (or at the smallest cycle vertex when the
/// cycle is already spanning).
pub fn initial_lollipop(g: &Graph) -> Result<Lollipop> {
    if !connectivity::analyze(g).two_connected {
        return Err(Error::contract(
            "initial_lollipop requires a 2-connected graph",
        ));
    }
    let n = g.n();
    let mut visited = vec![false; n];
    let mut pos_in_stack = vec![usize::MAX; n];
    let mut dfs_path: Vec<VertexId> = Vec::new();
    let mut frames: Vec<(VertexId, usize)> = Vec::new();

    let mut cycle: Option<Vec<VertexId>> = None;
    visited[0] = true;
    pos_in_stack[0] = 0;
    dfs_path.push(0);
    frames.push((0, 0));
    'dfs: while let Some(&mut (v, ref mut i)) = frames.last_mut() {
        if *i < g.degree(v) {
            let w = g.neighbors(v)[*i];
            *i += 1;
            let parent = if frames.len() >= 2 {
                frames[frames.len() - 2].0
            } else {
                usize::MAX
            };
            if !visited[w] {
                visited[w] = true;
                pos_in_stack[w] = dfs_path.len();
                dfs_path.push(w);
                frames.push((w, 0));
            } else if pos_in_stack[w] != usize::MAX && w != parent {
                // first back edge: fundamental cycle w .. v
                cycle = Some(dfs_path[pos_in_stack[w]..].to_vec());
                break 'dfs;
            }
        } else {
            frames.pop();
            pos_in_stack[v] = usize::MAX;
            dfs_path.pop();
        }
    }
    let cycle = cycle.ok_or_else(|| {
        Error::internal("no cycle found in a 2-connected graph", String::new())
    })?;
    Ok(attach_tail(g, cycle))
}

/// Wraps a cycle into a lollipop with a single-vertex tail, rooted at the
/// smallest cycle vertex that still has an outside neighbor.
fn attach_tail(g: &Graph, cycle: Vec<VertexId>) -> Lollipop {
    let mut on_cycle = vec![false; g.n()];
    for &w in &cycle {
        on_cycle[w] = true;
    }
    let root = cycle
        .iter()
        .copied()
        .filter(|&w| g.neighbors(w).iter().any(|&x| !on_cycle[x]))
        .min()
        .unwrap_or_else(|| cycle.iter().copied().min().unwrap());
    Lollipop::from_parts_unchecked(
        Cycle::from_vec_unchecked(cycle),
        Path::from_vec_unchecked(vec![root]),
    )
}

/// Extends the tail until the tip has no neighbor outside the lollipop,
/// always taking the smallest-id outside neighbor. If the tail is stuck at
/// length 0 while the cycle is not spanning, the tail is re-rooted at the
/// smallest cycle vertex that has an outside neighbor and grown from
/// there, so a connected host always yields a nonempty tail in that case.
pub fn grow_path(g: &Graph, l: &Lollipop) -> Result<Lollipop> {
    verify_lollipop(g, l.cycle().vertices(), l.path().vertices())
        .map_err(|v| Error::contract(format!("grow_path: invalid lollipop: {v}")))?;
    let mut inside = vec![false; g.n()];
    for &w in l.cycle().vertices().iter().chain(l.path().vertices()) {
        inside[w] = true;
    }
    let mut tail = l.path().vertices().to_vec();
    let mut rerooted = false;
    loop {
        let tip = *tail.last().unwrap();
        match g.neighbors(tip).iter().copied().find(|&w| !inside[w]) {
            Some(w) => {
                inside[w] = true;
                tail.push(w);
            }
            None => {
                if tail.len() == 1 && !rerooted && l.cycle().len() < g.n() {
                    // tail is a bare attachment that cannot move; restart it
                    // at a cycle vertex that can reach outside
                    let candidate = l
                        .cycle()
                        .vertices()
                        .iter()
                        .copied()
                        .filter(|&w| g.neighbors(w).iter().any(|&x| !inside[x]))
                        .min();
                    match candidate {
                        Some(w) => {
                            rerooted = true;
                            tail = vec![w];
                        }
                        None => break, // nothing leaves the cycle (host not connected here)
                    }
                } else {
                    break;
                }
            }
        }
    }
    Ok(Lollipop::from_parts_unchecked(
        l.cycle().clone(),
        Path::from_vec_unchecked(tail),
    ))
}

/// Case-1 improvement: the tip has a neighbor on the cycle other than the
/// attachment. Returns a strictly longer cycle from the first applicable
/// sub-case, or `None` when no sub-case fires (the caller then knows the
/// counting bound `floor(c/2) >= delta` holds).
pub fn improve_case1(g: &Graph, l: &Lollipop) -> Result<Option<Cycle>> {
    verify_lollipop(g, l.cycle().vertices(), l.path().vertices())
        .map_err(|v| Error::contract(format!("improve_case1: invalid lollipop: {v}")))?;
    if l.tail_len() == 0 {
        return Err(Error::contract(
            "improve_case1 requires a tail of length at least 1",
        ));
    }
    let frame = Frame::new(g, l);
    if !frame.is_tip_maximal(g) {
        return Err(Error::contract(
            "improve_case1 requires a tip-maximal lollipop",
        ));
    }
    let idx = frame.tip_cycle_neighbor_indices(g);
    if idx.is_empty() {
        return Err(Error::contract(
            "improve_case1 requires a tip neighbor on the cycle other than the attachment",
        ));
    }
    Ok(case1_improve(&frame, &idx).map(|(vs, _)| Cycle::from_vec_unchecked(vs)))
}

/// The three case-1 sub-cases, in order. `idx` holds the 1-based cycle
/// indices of tip neighbors on `C - v_c`, ascending; requires a tail.
fn case1_improve(frame: &Frame, idx: &[usize]) -> Option<(Vec<VertexId>, CaseTaken)> {
    let c = frame.c();
    let l = frame.tail_len();
    debug_assert!(l >= 1);

    // (a) a neighbor early on the cycle: ride the cycle from it to the
    // attachment, then the whole tail, and close back to the neighbor
    if let Some(&i) = idx.iter().find(|&&i| i <= l) {
        let mut out = frame.vs[i - 1..].to_vec();
        out.extend_from_slice(&frame.us[1..]);
        return Some((out, CaseTaken::Case1A));
    }
    // (b) mirror image: a neighbor late on the cycle, ride backwards
    if let Some(&i) = idx.iter().rev().find(|&&i| i >= c - l) {
        let mut out: Vec<VertexId> = frame.vs[..i].iter().rev().copied().collect();
        out.push(frame.v(c));
        out.extend_from_slice(&frame.us[1..]);
        return Some((out, CaseTaken::Case1B));
    }
    // (c) two consecutive neighbors: insert the tip between them
    for w in idx.windows(2) {
        if w[1] == w[0] + 1 {
            let i = w[0];
            let mut out = frame.vs[i..].to_vec();
            out.extend_from_slice(&frame.vs[..i]);
            out.push(frame.tip());
            return Some((out, CaseTaken::Case1C));
        }
    }
    None
}

/// Case-2 improvement: every tip neighbor lies on the tail. Builds the
/// concatenated base path (cycle opened at the attachment, then the tail),
/// asks for an aligned disjoint pair targeting the lowest tip neighbor,
/// and splices a strictly longer cycle out of the pieces.
pub fn improve_case2(g: &Graph, l: &Lollipop) -> Result<Cycle> {
    verify_lollipop(g, l.cycle().vertices(), l.path().vertices())
        .map_err(|v| Error::contract(format!("improve_case2: invalid lollipop: {v}")))?;
    if l.tail_len() == 0 {
        return Err(Error::contract(
            "improve_case2 requires a tail of length at least 1",
        ));
    }
    let bound = g.n().min(2 * g.min_degree());
    if l.cycle().len() >= bound {
        return Err(Error::contract(format!(
            "improve_case2 requires |C| < min(n, 2*delta) = {bound}, got {}",
            l.cycle().len()
        )));
    }
    let frame = Frame::new(g, l);
    if !frame.is_tip_maximal(g) {
        return Err(Error::contract(
            "improve_case2 requires a tip-maximal lollipop",
        ));
    }
    if !frame.tip_cycle_neighbor_indices(g).is_empty() {
        return Err(Error::contract(
            "improve_case2 requires all tip neighbors on the tail",
        ));
    }
    let (vs, _, _) = case2_improve(g, &frame)?;
    Ok(Cycle::from_vec_unchecked(vs))
}

fn case2_internal_error(frame: &Frame, detail: &str, extra: String) -> Error {
    Error::internal(
        format!("case-2 splice failed: {detail}"),
        format!("{}\n{extra}", frame.describe()),
    )
}

/// Shared case-2 worker. Returns the new cycle, the sub-case label, and
/// the splice bookkeeping.
fn case2_improve(g: &Graph, frame: &Frame) -> Result<(Vec<VertexId>, CaseTaken, Case2Detail)> {
    let nbr = frame.tip_path_neighbor_indices(g);
    if nbr.is_empty() {
        return Err(case2_internal_error(
            frame,
            "tip has no neighbors at all",
            String::new(),
        ));
    }
    let j1 = nbr[0];
    let z = frame.u(j1);

    // base path: around the cycle v_1..v_c, then out the tail
    let mut base_vs = frame.vs.clone();
    base_vs.extend_from_slice(&frame.us[1..]);
    let base = Path::from_vec_unchecked(base_vs);
    let pair = aligned_paths::aligned_pair(g, &base, z)?;
    let p1 = pair.p1().vertices().to_vec();
    let p2 = pair.p2().vertices().to_vec();

    // a_h: last cycle vertex along each path; b_h: first vertex along each
    // path in the high tail segment Y = { u_{j1} .. u_{l+1} }
    let last_on_cycle = |p: &[VertexId]| {
        p.iter()
            .rev()
            .find(|&&w| frame.cycle_index[w] != 0)
            .copied()
    };
    let first_in_y = |p: &[VertexId]| {
        p.iter()
            .find(|&&w| {
                let t = frame.path_index[w];
                t != 0 && t >= j1
            })
            .copied()
    };
    let a1 = last_on_cycle(&p1)
        .ok_or_else(|| case2_internal_error(frame, "p1 avoids the cycle", format!("p1={p1:?}")))?;
    let a2 = last_on_cycle(&p2)
        .ok_or_else(|| case2_internal_error(frame, "p2 avoids the cycle", format!("p2={p2:?}")))?;
    let b1 = first_in_y(&p1)
        .ok_or_else(|| case2_internal_error(frame, "p1 misses the high tail", format!("p1={p1:?}")))?;
    let b2 = first_in_y(&p2)
        .ok_or_else(|| case2_internal_error(frame, "p2 misses the high tail", format!("p2={p2:?}")))?;
    if b1 != z {
        return Err(case2_internal_error(
            frame,
            "alignment should force b1 = z",
            format!("b1={b1} z={z} p1={p1:?}"),
        ));
    }

    if a1 == a2 {
        // both paths touch the cycle only at v_1: reroute the cycle's
        // closing edge through p1's prefix and the low tail segment
        if a1 != frame.v(1) {
            return Err(case2_internal_error(
                frame,
                "coincident cycle contacts must sit at v_1",
                format!("a1={a1}"),
            ));
        }
        let cut = p1
            .iter()
            .position(|&w| frame.path_index[w] != 0)
            .ok_or_else(|| {
                case2_internal_error(frame, "p1 never meets the tail", format!("p1={p1:?}"))
            })?;
        let i = frame.path_index[p1[cut]];
        if i < 2 {
            return Err(case2_internal_error(
                frame,
                "first tail contact of p1 must come after the attachment",
                format!("i={i}"),
            ));
        }
        let mut out = frame.vs.clone(); // v_1 .. v_c
        out.extend_from_slice(&frame.us[1..i]); // u_2 .. u_i
        out.extend(p1[1..cut].iter().rev()); // back along p1 to v_1
        let detail = Case2Detail {
            z,
            a1,
            a2,
            b1,
            b2,
            j: frame.path_index[b2],
            j_prime: None,
            arc: None,
            p1,
            p2,
        };
        return Ok((out, CaseTaken::Case2Degenerate, detail));
    }

    // generic branch: longer cycle arc between the two contact points
    let arc = longer_arc(frame, a2, a1);
    let j = frame.path_index[b2];
    if j <= j1 {
        return Err(case2_internal_error(
            frame,
            "disjointness should force j > j1",
            format!("j={j} j1={j1}"),
        ));
    }
    let j_prime = nbr
        .iter()
        .copied()
        .filter(|&t| t < j)
        .max()
        .ok_or_else(|| {
            case2_internal_error(frame, "no tip neighbor index below j", format!("j={j}"))
        })?;

    let pos_a1_in_p1 = p1.iter().position(|&w| w == a1).unwrap();
    let pos_a2_in_p2 = p2.iter().position(|&w| w == a2).unwrap();
    let pos_b2_in_p2 = p2.iter().position(|&w| w == b2).unwrap();
    if pos_a2_in_p2 > pos_b2_in_p2 {
        return Err(case2_internal_error(
            frame,
            "alignment should place a2 before b2 on p2",
            format!("p2={p2:?} a2={a2} b2={b2}"),
        ));
    }

    let l1 = frame.us.len(); // l + 1
    let mut out = arc.clone(); // a2 .. a1 along the longer arc
    out.extend_from_slice(&p1[pos_a1_in_p1 + 1..]); // .. to u_{j1}
    out.extend_from_slice(&frame.us[j1..j_prime]); // u_{j1+1} .. u_{j'}
    out.extend(frame.us[j - 1..l1].iter().rev()); // u_{l+1} down to u_j
    out.extend(p2[pos_a2_in_p2 + 1..pos_b2_in_p2].iter().rev()); // back to a2

    let detail = Case2Detail {
        z,
        a1,
        a2,
        b1,
        b2,
        j,
        j_prime: Some(j_prime),
        arc: Some(arc),
        p1,
        p2,
    };
    Ok((out, CaseTaken::Case2, detail))
}

/// The longer of the two cycle arcs from `from` to `to`, endpoints
/// included; equal lengths resolve to the lexicographically smaller
/// vertex sequence.
fn longer_arc(frame: &Frame, from: VertexId, to: VertexId) -> Vec<VertexId> {
    let c = frame.c();
    let pf = frame.cycle_index[from] - 1; // 0-based
    let pt = frame.cycle_index[to] - 1;
    let forward_len = (pt + c - pf) % c + 1;
    let backward_len = (pf + c - pt) % c + 1;
    let forward = |len: usize| -> Vec<VertexId> {
        (0..len).map(|o| frame.vs[(pf + o) % c]).collect()
    };
    let backward = |len: usize| -> Vec<VertexId> {
        (0..len).map(|o| frame.vs[(pf + c - o) % c]).collect()
    };
    if forward_len > backward_len {
        forward(forward_len)
    } else if backward_len > forward_len {
        backward(backward_len)
    } else {
        let f = forward(forward_len);
        let b = backward(backward_len);
        if f <= b {
            f
        } else {
            b
        }
    }
}

/// Wraps a freshly found cycle into a lollipop for the next round; the old
/// tail is discarded and regrown from scratch.
fn reattach(g: &Graph, cycle: Vec<VertexId>) -> Lollipop {
    attach_tail(g, cycle)
}

fn render_improvement_trace(trace: &[ImprovementTrace]) -> String {
    serde_json::to_string_pretty(trace).unwrap_or_else(|_| "<trace unavailable>".into())
}

/// Extracts a cycle of length at least `min(n, 2δ)` from a 2-connected
/// graph and returns it with a re-verifiable certificate.
pub fn long_cycle(g: &Graph) -> Result<CycleCertificate> {
    if !connectivity::analyze(g).two_connected {
        return Err(Error::contract("long_cycle requires a 2-connected graph"));
    }
    let n = g.n();
    let delta = g.min_degree();
    let bound = n.min(2 * delta);

    let mut lol = initial_lollipop(g)?;
    let mut trace: Vec<ImprovementTrace> = Vec::new();
    let mut iterations = 0usize;

    loop {
        let grown = grow_path(g, &lol)?;
        if grown.path().len() != lol.path().len() {
            trace.push(ImprovementTrace {
                iteration: iterations,
                case_taken: CaseTaken::Grow,
                cycle_len_before: grown.cycle().len(),
                cycle_len_after: grown.cycle().len(),
                case2: None,
            });
        }
        lol = grown;
        let c = lol.cycle().len();
        if c >= bound {
            break;
        }
        // below the bound the cycle is not spanning, so growth must have
        // produced a tail
        if lol.tail_len() == 0 {
            return Err(Error::internal(
                "growth left an empty tail below the bound",
                render_improvement_trace(&trace),
            ));
        }
        let frame = Frame::new(g, &lol);
        let cyc_nbrs = frame.tip_cycle_neighbor_indices(g);
        let (new_cycle, kind, detail) = if !cyc_nbrs.is_empty() {
            match case1_improve(&frame, &cyc_nbrs) {
                Some((vs, kind)) => (vs, kind, None),
                None => {
                    // all neighbor indices are interior and pairwise
                    // non-consecutive, which forces floor(c/2) >= delta,
                    // i.e. c >= 2*delta -- impossible below the bound
                    return Err(Error::internal(
                        format!(
                            "case 1 found no improvement at c = {c} < bound = {bound} \
                             (counting says floor(c/2) = {} >= delta = {delta} must hold)",
                            c / 2
                        ),
                        format!(
                            "{}\ntip cycle neighbors (1-based): {cyc_nbrs:?}\n{}",
                            frame.describe(),
                            render_improvement_trace(&trace)
                        ),
                    ));
                }
            }
        } else {
            let (vs, kind, detail) = case2_improve(g, &frame)?;
            (vs, kind, Some(detail))
        };

        if let Err(v) = verify_cycle(g, &new_cycle) {
            return Err(Error::internal(
                format!("improvement produced an invalid cycle: {v}"),
                format!(
                    "{}\nnew cycle: {new_cycle:?}\n{}",
                    frame.describe(),
                    render_improvement_trace(&trace)
                ),
            ));
        }
        if new_cycle.len() <= c {
            return Err(Error::internal(
                format!(
                    "improvement did not lengthen the cycle: {} -> {}",
                    c,
                    new_cycle.len()
                ),
                format!(
                    "{}\nnew cycle: {new_cycle:?}\n{}",
                    frame.describe(),
                    render_improvement_trace(&trace)
                ),
            ));
        }
        iterations += 1;
        if iterations > n {
            return Err(Error::internal(
                "improvement loop exceeded n iterations",
                render_improvement_trace(&trace),
            ));
        }
        trace.push(ImprovementTrace {
            iteration: iterations,
            case_taken: kind,
            cycle_len_before: c,
            cycle_len_after: new_cycle.len(),
            case2: detail,
        });
        lol = reattach(g, new_cycle);
    }

    let cert = CycleCertificate {
        cycle: lol.cycle().vertices().to_vec(),
        n,
        delta,
        bound,
        iterations,
        trace,
    };
    if let Err(reason) = cert.verify(g) {
        return Err(Error::internal(
            format!("emitted certificate failed verification: {reason}"),
            render_improvement_trace(&cert.trace),
        ));
    }
    Ok(cert)
}

#[cfg(test)]
mod tests {
    use super::*;

    fn cycle_graph(n: usize) -> Graph {
        let text: String = (0..n).map(|i| format!("{} {}\n", i, (i + 1) % n)).collect();
        Graph::parse(&text).unwrap()
    }

    fn petersen() -> Graph {
        Graph::parse("0 1\n1 2\n2 3\n3 4\n4 0\n0 5\n1 6\n2 7\n3 8\n4 9\n5 7\n7 9\n9 6\n6 8\n8 5")
            .unwrap()
    }

    fn k23() -> Graph {
        Graph::parse("0 2\n0 3\n0 4\n1 2\n1 3\n1 4").unwrap()
    }

    #[test]
    fn long_cycle_on_cycles_is_the_whole_cycle() {
        for n in [3, 5, 8] {
            let g = cycle_graph(n);
            let cert = long_cycle(&g).unwrap();
            cert.verify(&g).unwrap();
            assert_eq!(cert.cycle.len(), n);
            assert_eq!(cert.bound, n.min(4));
        }
    }

    #[test]
    fn long_cycle_on_k23_meets_tight_bound() {
        let g = k23();
        let cert = long_cycle(&g).unwrap();
        cert.verify(&g).unwrap();
        assert_eq!(cert.bound, 4);
        assert_eq!(cert.cycle.len(), 4);
    }

    #[test]
    fn long_cycle_on_petersen() {
        let g = petersen();
        let cert = long_cycle(&g).unwrap();
        cert.verify(&g).unwrap();
        assert_eq!(cert.bound, 6);
        assert!(cert.cycle.len() >= 6);
    }

    #[test]
    fn long_cycle_rejects_non_two_connected() {
        let g = Graph::parse("0 1\n1 2").unwrap();
        assert!(matches!(long_cycle(&g), Err(Error::Contract(_))));
    }

    #[test]
    fn initial_lollipop_examples() {
        let tri = cycle_graph(3);
        let l = initial_lollipop(&tri).unwrap();
        assert_eq!(l.cycle().len(), 3);
        assert_eq!(l.tail_len(), 0);

        let c5 = cycle_graph(5);
        let l = initial_lollipop(&c5).unwrap();
        assert_eq!(l.cycle().len(), 5);
        assert_eq!(l.tail_len(), 0);

        let k4 = Graph::parse("0 1\n0 2\n0 3\n1 2\n1 3\n2 3").unwrap();
        let l = initial_lollipop(&k4).unwrap();
        verify_lollipop(&k4, l.cycle().vertices(), l.path().vertices()).unwrap();
    }

    #[test]
    fn grow_path_pendant_fixture() {
        // C5 with a pendant path 0-5-6; not 2-connected, unit fixture only
        let g = Graph::parse("0 1\n1 2\n2 3\n3 4\n4 0\n0 5\n5 6").unwrap();
        let cycle = Cycle::new(&g, vec![0, 1, 2, 3, 4]).unwrap();
        let tail = Path::new(&g, vec![0]).unwrap();
        let l = Lollipop::new(&g, cycle, tail).unwrap();
        let grown = grow_path(&g, &l).unwrap();
        assert_eq!(grown.path().vertices(), &[0, 5, 6]);
    }

    #[test]
    fn grow_path_identity_when_maximal() {
        let g = cycle_graph(5);
        let l = initial_lollipop(&g).unwrap();
        let grown = grow_path(&g, &l).unwrap();
        assert_eq!(grown.path().vertices(), l.path().vertices());
        assert_eq!(grown.cycle().vertices(), l.cycle().vertices());
    }

    #[test]
    fn grow_path_reroots_stuck_tail() {
        // C4 plus vertex 4 adjacent to 1 and 2; root the tail at 0, which
        // has no outside neighbor
        let g = Graph::parse("0 1\n1 2\n2 3\n3 0\n1 4\n2 4").unwrap();
        let cycle = Cycle::new(&g, vec![0, 1, 2, 3]).unwrap();
        let tail = Path::new(&g, vec![0]).unwrap();
        let l = Lollipop::new(&g, cycle, tail).unwrap();
        let grown = grow_path(&g, &l).unwrap();
        assert_eq!(grown.path().vertices(), &[1, 4]);
        assert!(grown.tail_len() >= 1);
    }

    #[test]
    fn case1_subcase_a_fixture() {
        // C4 = (1,2,3,0) rebadged: cycle 0-1-2-3 with tail (0, 4) and the
        // tip 4 adjacent to 3 (early index after relabeling) and 0
        let g = Graph::parse("0 1\n1 2\n2 3\n3 0\n0 4\n4 3").unwrap();
        let cycle = Cycle::new(&g, vec![0, 1, 2, 3]).unwrap();
        let tail = Path::new(&g, vec![0, 4]).unwrap();
        let l = Lollipop::new(&g, cycle, tail).unwrap();
        let improved = improve_case1(&g, &l).unwrap().expect("improvement exists");
        verify_cycle(&g, improved.vertices()).unwrap();
        assert_eq!(improved.len(), 5);
    }

    #[test]
    fn case1_subcase_c_fixture() {
        // 5-wheel-ish: C5 plus hub 5 adjacent to consecutive 1, 2 and to 0
        let g = Graph::parse("0 1\n1 2\n2 3\n3 4\n4 0\n0 5\n5 1\n5 2").unwrap();
        let cycle = Cycle::new(&g, vec![0, 1, 2, 3, 4]).unwrap();
        let tail = Path::new(&g, vec![0, 5]).unwrap();
        let l = Lollipop::new(&g, cycle, tail).unwrap();
        let improved = improve_case1(&g, &l).unwrap().expect("improvement exists");
        verify_cycle(&g, improved.vertices()).unwrap();
        assert_eq!(improved.len(), 6);
    }

    #[test]
    fn case1_none_when_neighbors_interior_and_sparse() {
        // C7 plus tip 7 attached at 6, adjacent to interior cycle vertices
        // 2 and 4 whose relabeled indices are non-consecutive
        let g = Graph::parse("0 1\n1 2\n2 3\n3 4\n4 5\n5 6\n6 0\n7 6\n7 2\n7 4").unwrap();
        let cycle = Cycle::new(&g, vec![0, 1, 2, 3, 4, 5, 6]).unwrap();
        let tail = Path::new(&g, vec![6, 7]).unwrap();
        let l = Lollipop::new(&g, cycle, tail).unwrap();
        let improved = improve_case1(&g, &l).unwrap();
        assert!(improved.is_none());
        // the counting bound the none-case certifies
        let c = l.cycle().len();
        assert!(c / 2 >= g.min_degree());
    }

    #[test]
    fn case1_contract_errors() {
        let g = cycle_graph(5);
        let l = initial_lollipop(&g).unwrap();
        // tail has length 0
        assert!(improve_case1(&g, &l).is_err());

        // tip not maximal: C4 + path (0,4) where 4 still has an outside neighbor
        let g = Graph::parse("0 1\n1 2\n2 3\n3 0\n0 4\n4 5\n5 1").unwrap();
        let cycle = Cycle::new(&g, vec![0, 1, 2, 3]).unwrap();
        let tail = Path::new(&g, vec![0, 4]).unwrap();
        let l = Lollipop::new(&g, cycle, tail).unwrap();
        assert!(improve_case1(&g, &l).is_err());
    }

    #[test]
    fn case2_j1_equals_one_fixture() {
        // C4 plus tail 0-4-5-6 where the tip 6 sees only tail vertices,
        // including the attachment (j1 = 1); extra edges push delta to 3
        let g = Graph::parse("0 1\n1 2\n2 3\n3 0\n0 4\n4 5\n5 6\n6 0\n6 4\n1 5\n2 4\n3 4")
            .unwrap();
        assert_eq!(g.min_degree(), 3);
        let cycle = Cycle::new(&g, vec![0, 1, 2, 3]).unwrap();
        let tail = Path::new(&g, vec![0, 4, 5, 6]).unwrap();
        let l = Lollipop::new(&g, cycle, tail).unwrap();
        let improved = improve_case2(&g, &l).unwrap();
        verify_cycle(&g, improved.vertices()).unwrap();
        assert!(improved.len() > 4);
    }

    #[test]
    fn case2_contract_on_big_cycle() {
        // lollipop whose cycle already meets the bound: contract error
        let g = Graph::parse("0 1\n1 2\n2 3\n3 4\n4 0\n0 5\n5 1").unwrap();
        let cycle = Cycle::new(&g, vec![0, 1, 2, 3, 4]).unwrap();
        let tail = Path::new(&g, vec![0, 5]).unwrap();
        let l = Lollipop::new(&g, cycle, tail).unwrap();
        // bound = min(6, 4) = 4 <= 5 = |C|
        let err = improve_case2(&g, &l).unwrap_err();
        assert!(matches!(err, Error::Contract(_)), "{err}");
    }

    #[test]
    fn traces_show_monotone_progress() {
        let g = petersen();
        let cert = long_cycle(&g).unwrap();
        for entry in &cert.trace {
            if !matches!(entry.case_taken, CaseTaken::Grow) {
                assert!(entry.cycle_len_after > entry.cycle_len_before);
            }
        }
        assert!(cert.iterations <= g.n());
    }

    #[test]
    fn certificate_json_round_trip() {
        let g = k23();
        let cert = long_cycle(&g).unwrap();
        let json = cert.to_json();
        let back = CycleCertificate::from_json(&json).unwrap();
        back.verify(&g).unwrap();
        assert_eq!(back.cycle, cert.cycle);

        let with_trace = cert.to_json_with_trace();
        let back = CycleCertificate::from_json(&with_trace).unwrap();
        assert_eq!(back.trace.len(), cert.trace.len());
    }

    #[test]
    fn determinism_on_repeat_runs() {
        let g = petersen();
        let a = long_cycle(&g).unwrap();
        let b = long_cycle(&g).unwrap();
        assert_eq!(a.to_json_with_trace(), b.to_json_with_trace());
    }
}
