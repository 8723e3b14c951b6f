//! Cut-vertex detection and 2-connectivity, plus disjoint path pairs.
//!
//! `analyze` is the precondition gate for the constructive algorithms:
//! everything downstream requires `two_connected`. Cut vertices come from
//! an iterative depth-first lowpoint computation, so deep graphs cannot
//! overflow the call stack.

use crate::aligned_paths;
use crate::bfs::{self, BfsSpec};
use crate::error::{Error, Result};
use crate::graph::{Graph, VertexId};
use crate::paths::Path;

/// Connectivity facts about a graph.
///
/// `two_connected` holds exactly when the graph is connected, has no cut
/// vertex, and has at least 3 vertices.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct ConnectivityReport {
    pub connected: bool,
    pub cut_vertices: Vec<VertexId>,
    pub two_connected: bool,
}

/// Computes connectivity and cut vertices. Deterministic; the empty graph
/// reports as disconnected.
pub fn analyze(g: &Graph) -> ConnectivityReport {
    let n = g.n();
    if n == 0 {
        return ConnectivityReport {
            connected: false,
            cut_vertices: Vec::new(),
            two_connected: false,
        };
    }

    const UNSEEN: usize = usize::MAX;
    let mut disc = vec![UNSEEN; n];
    let mut low = vec![0usize; n];
    let mut parent = vec![UNSEEN; n];
    let mut is_cut = vec![false; n];
    let mut timer = 0usize;
    let mut components = 0usize;

    for root in 0..n {
        if disc[root] != UNSEEN {
            continue;
        }
        components += 1;
        let mut root_children = 0usize;
        disc[root] = timer;
        low[root] = timer;
        timer += 1;
        // explicit stack of (vertex, next neighbor index)
        let mut stack: Vec<(usize, usize)> = vec![(root, 0)];
        while let Some(&mut (v, ref mut i)) = stack.last_mut() {
            if *i < g.degree(v) {
                let w = g.neighbors(v)[*i];
                *i += 1;
                if disc[w] == UNSEEN {
                    parent[w] = v;
                    if v == root {
                        root_children += 1;
                    }
                    disc[w] = timer;
                    low[w] = timer;
                    timer += 1;
                    stack.push((w, 0));
                } else if w != parent[v] {
                    low[v] = low[v].min(disc[w]);
                }
            } else {
                stack.pop();
                if let Some(&(u, _)) = stack.last() {
                    low[u] = low[u].min(low[v]);
                    if u != root && low[v] >= disc[u] {
                        is_cut[u] = true;
                    }
                }
            }
        }
        if root_children >= 2 {
            is_cut[root] = true;
        }
    }

    let cut_vertices: Vec<VertexId> = (0..n).filter(|&v| is_cut[v]).collect();
    let connected = components == 1;
    let two_connected = connected && cut_vertices.is_empty() && n >= 3;
    ConnectivityReport {
        connected,
        cut_vertices,
        two_connected,
    }
}

/// Two internally disjoint `u,v`-paths in a 2-connected graph.
///
/// Routed through the aligned-pair construction with the breadth-first
/// `u,v`-path as the base and `z = v`: its `(i)` conclusion alone is the
/// classical disjoint-pair statement. A flow-based check of the same fact
/// lives only in the oracle side of the test suite.
pub fn whitney_pair(g: &Graph, u: VertexId, v: VertexId) -> Result<(Path, Path)> {
    if u >= g.n() || v >= g.n() {
        return Err(Error::contract(format!(
            "vertex out of range: u={u}, v={v}, n={}",
            g.n()
        )));
    }
    if u == v {
        return Err(Error::contract("whitney_pair requires distinct endpoints"));
    }
    let report = analyze(g);
    if !report.two_connected {
        return Err(Error::contract(
            "whitney_pair requires a 2-connected graph",
        ));
    }
    let base = bfs::shortest_path(g, u, v, &BfsSpec::plain()).ok_or_else(|| {
        Error::internal(
            "no u,v-path in a connected graph",
            format!("u={u} v={v}"),
        )
    })?;
    let base = Path::new(g, base)?;
    let pair = aligned_paths::aligned_pair(g, &base, v)?;
    Ok((pair.p1().clone(), pair.p2().clone()))
}
