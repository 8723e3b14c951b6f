//! Exhaustive desk-scale oracles.
//!
//! Everything here is written directly against the definitions — simple
//! path enumeration, the quadratic pairwise alignment check — and shares
//! no code with the constructive modules it cross-checks. Budgets make
//! the exponential searches refuse, loudly, instead of truncating.

use std::time::Instant;

use crate::error::{Error, Result};
use crate::graph::{Graph, VertexId};
use crate::paths::{Cycle, Path};

/// Caps for exhaustive searches. `max_n` bounds the instance size,
/// `max_millis` the wall clock; exceeding either is an error distinct
/// from a negative answer.
#[derive(Debug, Clone, Copy)]
pub struct OracleBudget {
    pub max_n: usize,
    pub max_millis: u64,
}

impl OracleBudget {
    /// Default budget for cycle enumeration.
    pub fn cycles() -> Self {
        OracleBudget {
            max_n: 12,
            max_millis: 30_000,
        }
    }

    /// Default budget for aligned-tuple searches.
    pub fn tuples() -> Self {
        OracleBudget {
            max_n: 9,
            max_millis: 30_000,
        }
    }

    fn validate(&self) -> Result<()> {
        if self.max_n == 0 || self.max_millis == 0 {
            return Err(Error::contract("oracle budget caps must be positive"));
        }
        Ok(())
    }

    fn admit(&self, n: usize) -> Result<()> {
        self.validate()?;
        if n > self.max_n {
            return Err(Error::Budget(format!(
                "instance has n = {n}, budget allows max_n = {}",
                self.max_n
            )));
        }
        Ok(())
    }
}

struct Clock {
    started: Instant,
    limit_ms: u64,
    ticks: u64,
}

impl Clock {
    fn new(limit_ms: u64) -> Self {
        Clock {
            started: Instant::now(),
            limit_ms,
            ticks: 0,
        }
    }

    fn tick(&mut self) -> Result<()> {
        self.ticks += 1;
        if self.ticks % 4096 == 0 && self.started.elapsed().as_millis() as u64 > self.limit_ms {
            return Err(Error::Budget(format!(
                "wall clock exceeded {} ms",
                self.limit_ms
            )));
        }
        Ok(())
    }
}

/// Exact longest-cycle length by depth-first enumeration of simple paths,
/// with a canonical-start cut: each cycle is explored only from its
/// smallest vertex, and only in the orientation whose second vertex is
/// smaller than its last. Returns one witness of maximum length, or
/// `(0, None)` for acyclic graphs.
pub fn brute_longest_cycle(g: &Graph, budget: &OracleBudget) -> Result<(usize, Option<Cycle>)> {
    budget.admit(g.n())?;
    let n = g.n();
    let mut clock = Clock::new(budget.max_millis);
    let mut best: Vec<VertexId> = Vec::new();

    let mut stack: Vec<VertexId> = Vec::with_capacity(n);
    let mut on_stack = vec![false; n];

    fn dfs(
        g: &Graph,
        start: VertexId,
        stack: &mut Vec<VertexId>,
        on_stack: &mut [bool],
        best: &mut Vec<VertexId>,
        clock: &mut Clock,
    ) -> Result<()> {
        let v = *stack.last().unwrap();
        clock.tick()?;
        for &w in g.neighbors(v) {
            if w == start && stack.len() >= 3 {
                // close the cycle; skip the mirrored orientation
                if stack[1] < *stack.last().unwrap() && stack.len() > best.len() {
                    *best = stack.clone();
                }
                continue;
            }
            // canonical start: never walk below the anchor vertex
            if w <= start || on_stack[w] {
                continue;
            }
            stack.push(w);
            on_stack[w] = true;
            dfs(g, start, stack, on_stack, best, clock)?;
            on_stack[w] = false;
            stack.pop();
        }
        Ok(())
    }

    for start in 0..n {
        stack.clear();
        stack.push(start);
        on_stack[start] = true;
        dfs(g, start, &mut stack, &mut on_stack, &mut best, &mut clock)?;
        on_stack[start] = false;
    }

    if best.is_empty() {
        Ok((0, None))
    } else {
        let len = best.len();
        Ok((len, Some(Cycle::new(g, best)?)))
    }
}

/// The raw pairwise alignment definition, quadratic on purpose: for every
/// pair of common vertices, the relative order must agree. Kept separate
/// from the position-map implementation so the two can be tested against
/// each other.
pub fn aligned_pairwise(base: &[VertexId], candidate: &[VertexId]) -> bool {
    for (ci, &u) in candidate.iter().enumerate() {
        for &v in candidate.iter().skip(ci + 1) {
            let bu = base.iter().position(|&w| w == u);
            let bv = base.iter().position(|&w| w == v);
            if let (Some(bu), Some(bv)) = (bu, bv) {
                if bu > bv {
                    return false;
                }
            }
        }
    }
    true
}

/// Internal-disjointness of two paths under the strict reading: every
/// shared vertex must be an endpoint of both.
fn mutually_disjoint(a: &[VertexId], b: &[VertexId]) -> bool {
    let ea = [a[0], *a.last().unwrap()];
    let eb = [b[0], *b.last().unwrap()];
    for &w in a {
        if b.contains(&w) && !(ea.contains(&w) && eb.contains(&w)) {
            return false;
        }
    }
    true
}

/// Exhaustively decides whether paths from `x` to each terminal exist, one
/// per terminal in order, pairwise internally disjoint and pairwise
/// distinct, each aligned with `base`. Alignment is enforced prefix by
/// prefix during the search, which prunes misordered branches early.
pub fn aligned_tuple_exists(
    g: &Graph,
    base: &Path,
    x: VertexId,
    terminals: &[VertexId],
    budget: &OracleBudget,
) -> Result<bool> {
    budget.admit(g.n())?;
    if terminals.is_empty() {
        return Err(Error::contract("terminals must be nonempty"));
    }
    if base.first() != x {
        return Err(Error::contract(format!(
            "base path starts at {} but x = {x}",
            base.first()
        )));
    }
    for &t in terminals {
        if t >= g.n() {
            return Err(Error::contract(format!("terminal {t} out of range")));
        }
    }
    let mut clock = Clock::new(budget.max_millis);
    let base_pos: Vec<Option<usize>> = {
        let mut v = vec![None; g.n()];
        for (i, &w) in base.vertices().iter().enumerate() {
            v[w] = Some(i);
        }
        v
    };
    let mut placed: Vec<Vec<VertexId>> = Vec::new();
    search_tuple(g, &base_pos, x, terminals, &mut placed, &mut clock)
}

fn search_tuple(
    g: &Graph,
    base_pos: &[Option<usize>],
    x: VertexId,
    terminals: &[VertexId],
    placed: &mut Vec<Vec<VertexId>>,
    clock: &mut Clock,
) -> Result<bool> {
    let k = placed.len();
    if k == terminals.len() {
        return Ok(true);
    }
    let t = terminals[k];

    // vertices internal to an already placed path are off limits entirely;
    // vertices used only as endpoints may recur, but only as endpoints
    let mut blocked_interior = vec![false; g.n()];
    let mut used = vec![false; g.n()];
    for p in placed.iter() {
        for (i, &w) in p.iter().enumerate() {
            used[w] = true;
            if i != 0 && i != p.len() - 1 {
                blocked_interior[w] = true;
            }
        }
    }

    if t == x {
        // degenerate single-vertex path
        let cand = vec![x];
        if placed.iter().any(|p| *p == cand) {
            return Ok(false);
        }
        placed.push(cand);
        let found = search_tuple(g, base_pos, x, terminals, placed, clock)?;
        placed.pop();
        return Ok(found);
    }

    let mut path: Vec<VertexId> = vec![x];
    let mut on_path = vec![false; g.n()];
    on_path[x] = true;
    extend_tuple_path(
        g,
        base_pos,
        x,
        terminals,
        t,
        placed,
        &blocked_interior,
        &used,
        &mut path,
        &mut on_path,
        base_pos[x],
        clock,
    )
}

#[allow(clippy::too_many_arguments)]
fn extend_tuple_path(
    g: &Graph,
    base_pos: &[Option<usize>],
    x: VertexId,
    terminals: &[VertexId],
    t: VertexId,
    placed: &mut Vec<Vec<VertexId>>,
    blocked_interior: &[bool],
    used: &[bool],
    path: &mut Vec<VertexId>,
    on_path: &mut [bool],
    last_base: Option<usize>,
    clock: &mut Clock,
) -> Result<bool> {
    clock.tick()?;
    let v = *path.last().unwrap();
    for &w in g.neighbors(v) {
        if on_path[w] {
            continue;
        }
        // alignment prune: base vertices must appear in increasing order
        let next_base = match base_pos[w] {
            Some(p) => {
                if let Some(prev) = last_base {
                    if p < prev {
                        continue;
                    }
                }
                Some(p)
            }
            None => last_base,
        };
        if w == t {
            // terminals may coincide with earlier paths only at endpoints
            if blocked_interior[w] {
                continue;
            }
            path.push(w);
            let ok_pairwise = placed
                .iter()
                .all(|p| *p != *path && mutually_disjoint(p, path));
            if ok_pairwise {
                placed.push(path.clone());
                let found = search_tuple(g, base_pos, x, terminals, placed, clock)?;
                placed.pop();
                if found {
                    path.pop();
                    return Ok(true);
                }
            }
            path.pop();
            continue;
        }
        // non-terminal extension: anything touching a placed path would be
        // internal here, so it must not appear on any placed path at all
        if used[w] {
            continue;
        }
        path.push(w);
        on_path[w] = true;
        let found = extend_tuple_path(
            g,
            base_pos,
            x,
            terminals,
            t,
            placed,
            blocked_interior,
            used,
            path,
            on_path,
            next_base,
            clock,
        )?;
        on_path[w] = false;
        path.pop();
        if found {
            return Ok(true);
        }
    }
    Ok(false)
}

/// Maximum number of pairwise internally disjoint `x,y`-paths aligned with
/// `base`, found by binary search over [`aligned_tuple_exists`] with
/// repeated copies of `y`. At least 1 (the base itself); at most
/// `min(deg(x), deg(y))` since distinct such paths leave `x` by distinct
/// edges.
pub fn max_aligned_disjoint_paths(g: &Graph, base: &Path, budget: &OracleBudget) -> Result<usize> {
    budget.admit(g.n())?;
    if base.len() < 2 {
        return Err(Error::contract("base must be an x,y-path with x != y"));
    }
    let x = base.first();
    let y = base.last();
    let hi_cap = g.degree(x).min(g.degree(y)).max(1);
    let mut lo = 1usize; // the base path itself is aligned with itself
    let mut hi = hi_cap;
    while lo < hi {
        let mid = lo + (hi - lo).div_ceil(2);
        if aligned_tuple_exists(g, base, x, &vec![y; mid], budget)? {
            lo = mid;
        } else {
            hi = mid - 1;
        }
    }
    Ok(lo)
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::paths::is_aligned_seq;

    fn cycle_graph(n: usize) -> Graph {
        let text: String = (0..n).map(|i| format!("{} {}\n", i, (i + 1) % n)).collect();
        Graph::parse(&text).unwrap()
    }

    fn k4() -> Graph {
        Graph::parse("0 1\n0 2\n0 3\n1 2\n1 3\n2 3").unwrap()
    }

    fn k23() -> Graph {
        Graph::parse("0 2\n0 3\n0 4\n1 2\n1 3\n1 4").unwrap()
    }

    fn petersen() -> Graph {
        Graph::parse("0 1\n1 2\n2 3\n3 4\n4 0\n0 5\n1 6\n2 7\n3 8\n4 9\n5 7\n7 9\n9 6\n6 8\n8 5")
            .unwrap()
    }

    #[test]
    fn longest_cycle_small_cases() {
        let b = OracleBudget::cycles();
        assert_eq!(brute_longest_cycle(&k4(), &b).unwrap().0, 4);
        assert_eq!(brute_longest_cycle(&k23(), &b).unwrap().0, 4);
        assert_eq!(brute_longest_cycle(&cycle_graph(7), &b).unwrap().0, 7);
    }

    #[test]
    fn longest_cycle_petersen_is_nine() {
        let (len, witness) = brute_longest_cycle(&petersen(), &OracleBudget::cycles()).unwrap();
        assert_eq!(len, 9);
        let w = witness.unwrap();
        assert_eq!(w.len(), 9);
    }

    #[test]
    fn longest_cycle_acyclic() {
        let tree = Graph::parse("0 1\n1 2\n1 3").unwrap();
        let (len, witness) = brute_longest_cycle(&tree, &OracleBudget::cycles()).unwrap();
        assert_eq!(len, 0);
        assert!(witness.is_none());
    }

    #[test]
    fn budget_rejects_large_n() {
        let g = cycle_graph(20);
        let err = brute_longest_cycle(&g, &OracleBudget::cycles()).unwrap_err();
        assert!(matches!(err, Error::Budget(_)));
    }

    #[test]
    fn tuple_remark_three_negative() {
        // on C5 with the full base, no two internally disjoint aligned
        // v1,v3-paths exist, but [v3, v5] works
        let g = cycle_graph(5);
        let base = Path::new(&g, vec![0, 1, 2, 3, 4]).unwrap();
        let b = OracleBudget::tuples();
        assert!(!aligned_tuple_exists(&g, &base, 0, &[2, 2], &b).unwrap());
        assert!(aligned_tuple_exists(&g, &base, 0, &[2, 4], &b).unwrap());
    }

    #[test]
    fn tuple_single_terminal_is_base() {
        let g = cycle_graph(6);
        let base = Path::new(&g, vec![0, 1, 2, 3]).unwrap();
        let b = OracleBudget::tuples();
        assert!(aligned_tuple_exists(&g, &base, 0, &[3], &b).unwrap());
    }

    #[test]
    fn max_aligned_on_c5_is_two() {
        let g = cycle_graph(5);
        let base = Path::new(&g, vec![0, 1, 2, 3, 4]).unwrap();
        assert_eq!(
            max_aligned_disjoint_paths(&g, &base, &OracleBudget::tuples()).unwrap(),
            2
        );
    }

    #[test]
    fn max_aligned_on_k4_edge_base() {
        let g = k4();
        let base = Path::new(&g, vec![0, 1]).unwrap();
        let m = max_aligned_disjoint_paths(&g, &base, &OracleBudget::tuples()).unwrap();
        assert_eq!(m, 3);
        assert!(m >= 2);
    }

    #[test]
    fn pairwise_alignment_agrees_with_position_maps() {
        let base = [0usize, 1, 2, 3, 4];
        let cases: [&[usize]; 4] = [&[0, 4], &[0, 4, 3, 2], &[0, 1, 2, 3, 4], &[0, 9, 3]];
        for cand in cases {
            assert_eq!(
                aligned_pairwise(&base, cand),
                is_aligned_seq(&base, cand),
                "disagreement on {cand:?}"
            );
        }
    }

    #[test]
    fn zero_budget_is_a_contract_error() {
        let g = cycle_graph(5);
        let bad = OracleBudget {
            max_n: 0,
            max_millis: 1000,
        };
        assert!(brute_longest_cycle(&g, &bad).is_err());
    }
}
