//! Simple undirected graphs over dense integer vertex ids.
//!
//! Vertices are `0..n-1`. Adjacency lists are kept sorted so that every
//! traversal that scans neighbors in list order is deterministic.

use crate::error::{Error, Result};

pub type VertexId = usize;

/// A finite simple undirected graph.
///
/// No self-loops, no parallel edges. Isolated vertices are representable
/// (they simply have an empty neighbor list); algorithms that need
/// 2-connectivity reject them at their own precondition checks.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct Graph {
    n: usize,
    m: usize,
    adj: Vec<Vec<VertexId>>,
}

impl Graph {
    /// Builds a graph on `n` vertices from an edge iterator.
    ///
    /// Rejects out-of-range endpoints, self-loops and duplicate edges.
    pub fn from_edges<I>(n: usize, edges: I) -> Result<Graph>
    where
        I: IntoIterator<Item = (VertexId, VertexId)>,
    {
        let mut adj = vec![Vec::new(); n];
        let mut m = 0;
        for (u, v) in edges {
            if u >= n || v >= n {
                return Err(Error::contract(format!(
                    "edge ({u}, {v}) out of range for n = {n}"
                )));
            }
            if u == v {
                return Err(Error::contract(format!("self-loop at vertex {u}")));
            }
            if adj[u].contains(&v) {
                return Err(Error::contract(format!("duplicate edge ({u}, {v})")));
            }
            adj[u].push(v);
            adj[v].push(u);
            m += 1;
        }
        for list in &mut adj {
            list.sort_unstable();
        }
        Ok(Graph { n, m, adj })
    }

    /// Parses the edge-list text format: one `u v` pair per line, `#` lines
    /// and blank lines ignored. The vertex count is `1 + max id`.
    pub fn parse(text: &str) -> Result<Graph> {
        let mut edges: Vec<(usize, usize)> = Vec::new();
        let mut max_id: Option<usize> = None;
        for (idx, raw) in text.lines().enumerate() {
            let lineno = idx + 1;
            let line = raw.trim();
            if line.is_empty() || line.starts_with('#') {
                continue;
            }
            let tokens: Vec<&str> = line.split_whitespace().collect();
            if tokens.len() != 2 {
                return Err(Error::Parse {
                    line: lineno,
                    reason: format!("expected two vertex ids, got {}", tokens.len()),
                });
            }
            let parse_tok = |tok: &str| -> std::result::Result<usize, String> {
                tok.parse::<usize>()
                    .map_err(|_| format!("malformed vertex id {tok:?}"))
            };
            let u = parse_tok(tokens[0]).map_err(|reason| Error::Parse { line: lineno, reason })?;
            let v = parse_tok(tokens[1]).map_err(|reason| Error::Parse { line: lineno, reason })?;
            if u == v {
                return Err(Error::Parse {
                    line: lineno,
                    reason: format!("self-loop at vertex {u}"),
                });
            }
            let (a, b) = (u.min(v), u.max(v));
            if edges.contains(&(a, b)) {
                return Err(Error::Parse {
                    line: lineno,
                    reason: format!("duplicate edge ({u}, {v})"),
                });
            }
            edges.push((a, b));
            max_id = Some(max_id.map_or(u.max(v), |m| m.max(u).max(v)));
        }
        let n = max_id.map_or(0, |m| m + 1);
        Graph::from_edges(n, edges)
    }

    pub fn n(&self) -> usize {
        self.n
    }

    pub fn edge_count(&self) -> usize {
        self.m
    }

    pub fn degree(&self, v: VertexId) -> usize {
        self.adj[v].len()
    }

    /// Neighbors of `v`, sorted ascending.
    pub fn neighbors(&self, v: VertexId) -> &[VertexId] {
        &self.adj[v]
    }

    pub fn has_edge(&self, u: VertexId, v: VertexId) -> bool {
        u < self.n && v < self.n && self.adj[u].binary_search(&v).is_ok()
    }

    /// Minimum degree over all vertices; 0 for the empty graph.
    pub fn min_degree(&self) -> usize {
        self.adj.iter().map(Vec::len).min().unwrap_or(0)
    }

    pub fn vertices(&self) -> std::ops::Range<VertexId> {
        0..self.n
    }

    /// All edges as `(u, v)` pairs with `u < v`, sorted.
    pub fn edges(&self) -> Vec<(VertexId, VertexId)> {
        let mut out = Vec::with_capacity(self.m);
        for u in 0..self.n {
            for &v in &self.adj[u] {
                if u < v {
                    out.push((u, v));
                }
            }
        }
        out
    }

    /// Serializes to the edge-list format: sorted `u v` lines, `u < v`.
    pub fn to_edge_list(&self) -> String {
        let mut out = String::new();
        for (u, v) in self.edges() {
            out.push_str(&format!("{u} {v}\n"));
        }
        out
    }

    /// Emits Graphviz DOT. Edges on the highlighted cycle (including its
    /// closing edge) or path are drawn bold red / bold blue.
    pub fn to_dot(&self, cycle: Option<&[VertexId]>, path: Option<&[VertexId]>) -> String {
        let mut marked: Vec<((usize, usize), &str)> = Vec::new();
        if let Some(cyc) = cycle {
            for i in 0..cyc.len() {
                let u = cyc[i];
                let v = cyc[(i + 1) % cyc.len()];
                marked.push(((u.min(v), u.max(v)), "red"));
            }
        }
        if let Some(p) = path {
            for w in p.windows(2) {
                marked.push(((w[0].min(w[1]), w[0].max(w[1])), "blue"));
            }
        }
        let mut out = String::from("graph g {\n");
        for v in 0..self.n {
            out.push_str(&format!("  {v};\n"));
        }
        for (u, v) in self.edges() {
            match marked.iter().find(|(e, _)| *e == (u, v)) {
                Some((_, color)) => out.push_str(&format!(
                    "  {u} -- {v} [color={color}, penwidth=2.0];\n"
                )),
                None => out.push_str(&format!("  {u} -- {v};\n")),
            }
        }
        out.push_str("}\n");
        out
    }
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn parse_triangle() {
        let g = Graph::parse("0 1\n1 2\n2 0").unwrap();
        assert_eq!(g.n(), 3);
        assert_eq!(g.edge_count(), 3);
        assert_eq!(g.min_degree(), 2);
    }

    #[test]
    fn parse_rejects_duplicate_edge() {
        let err = Graph::parse("0 1\n0 1").unwrap_err();
        assert!(matches!(err, Error::Parse { line: 2, .. }), "{err}");
        // also when given in the opposite orientation
        let err = Graph::parse("0 1\n1 0").unwrap_err();
        assert!(matches!(err, Error::Parse { line: 2, .. }), "{err}");
    }

    #[test]
    fn parse_rejects_self_loop_and_bad_tokens() {
        assert!(matches!(
            Graph::parse("3 3").unwrap_err(),
            Error::Parse { line: 1, .. }
        ));
        assert!(matches!(
            Graph::parse("0 1\nx 2").unwrap_err(),
            Error::Parse { line: 2, .. }
        ));
        assert!(matches!(
            Graph::parse("0 1 2").unwrap_err(),
            Error::Parse { line: 1, .. }
        ));
    }

    #[test]
    fn parse_skips_comments_and_blanks() {
        let g = Graph::parse("# a triangle\n\n0 1\n 1 2 \n2 0\n").unwrap();
        assert_eq!(g.n(), 3);
        assert_eq!(g.edge_count(), 3);
    }

    #[test]
    fn parse_petersen() {
        let text = "0 1\n1 2\n2 3\n3 4\n4 0\n0 5\n1 6\n2 7\n3 8\n4 9\n5 7\n7 9\n9 6\n6 8\n8 5\n";
        let g = Graph::parse(text).unwrap();
        assert_eq!(g.n(), 10);
        assert_eq!(g.edge_count(), 15);
        assert_eq!(g.min_degree(), 3);
        assert!(g.vertices().all(|v| g.degree(v) == 3));
    }

    #[test]
    fn isolated_vertices_survive_parsing() {
        // vertex 1 never appears; it exists with degree 0
        let g = Graph::parse("0 2").unwrap();
        assert_eq!(g.n(), 3);
        assert_eq!(g.degree(1), 0);
        assert_eq!(g.min_degree(), 0);
    }

    #[test]
    fn serialize_then_parse_is_identity() {
        let g = Graph::parse("2 0\n0 1\n1 2\n3 1").unwrap();
        let round = Graph::parse(&g.to_edge_list()).unwrap();
        assert_eq!(g.edges(), round.edges());
        assert_eq!(round.to_edge_list(), g.to_edge_list());
    }

    #[test]
    fn dot_highlights_cycle_edges() {
        let g = Graph::parse("0 1\n1 2\n2 0\n2 3").unwrap();
        let dot = g.to_dot(Some(&[0, 1, 2]), None);
        assert!(dot.contains("0 -- 1 [color=red"));
        assert!(dot.contains("0 -- 2 [color=red"));
        assert!(dot.contains("2 -- 3;"));
    }
}
