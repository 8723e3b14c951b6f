//! Deterministic breadth-first shortest paths.
//!
//! Adjacency lists are sorted, the queue is FIFO, and the search stops at
//! the first target discovered, so for a fixed input the returned path is
//! always the same and its internal vertices never touch the target set.

use std::collections::VecDeque;

use crate::graph::{Graph, VertexId};

pub(crate) struct BfsSpec {
    pub forbidden_vertex: Option<VertexId>,
    pub forbidden_edge: Option<(VertexId, VertexId)>,
}

impl BfsSpec {
    pub fn plain() -> Self {
        BfsSpec {
            forbidden_vertex: None,
            forbidden_edge: None,
        }
    }

    pub fn without_vertex(v: VertexId) -> Self {
        BfsSpec {
            forbidden_vertex: Some(v),
            forbidden_edge: None,
        }
    }

    pub fn without_edge(u: VertexId, v: VertexId) -> Self {
        BfsSpec {
            forbidden_vertex: None,
            forbidden_edge: Some((u, v)),
        }
    }
}

/// Shortest path from `source` to the first discovered vertex of `targets`,
/// or `None` if unreachable. `ops` counts vertex dequeues and edge scans.
pub(crate) fn first_target_path(
    g: &Graph,
    source: VertexId,
    spec: &BfsSpec,
    targets: &[bool],
    ops: &mut u64,
) -> Option<Vec<VertexId>> {
    if targets[source] {
        return Some(vec![source]);
    }
    let mut visited = vec![false; g.n()];
    let mut parent = vec![usize::MAX; g.n()];
    if let Some(f) = spec.forbidden_vertex {
        visited[f] = true;
    }
    visited[source] = true;
    let mut queue: VecDeque<VertexId> = VecDeque::new();
    queue.push_back(source);
    while let Some(v) = queue.pop_front() {
        *ops += 1;
        for &w in g.neighbors(v) {
            *ops += 1;
            if visited[w] {
                continue;
            }
            if let Some((a, b)) = spec.forbidden_edge {
                if (v == a && w == b) || (v == b && w == a) {
                    continue;
                }
            }
            parent[w] = v;
            if targets[w] {
                let mut path = vec![w];
                let mut cur = v;
                loop {
                    path.push(cur);
                    if cur == source {
                        break;
                    }
                    cur = parent[cur];
                }
                path.reverse();
                return Some(path);
            }
            visited[w] = true;
            queue.push_back(w);
        }
    }
    None
}

/// Shortest path between two vertices under the same determinism rules.
pub(crate) fn shortest_path(
    g: &Graph,
    source: VertexId,
    target: VertexId,
    spec: &BfsSpec,
) -> Option<Vec<VertexId>> {
    let mut targets = vec![false; g.n()];
    targets[target] = true;
    let mut ops = 0;
    first_target_path(g, source, spec, &targets, &mut ops)
}
