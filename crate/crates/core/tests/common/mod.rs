//! Shared corpus builders and test-side oracles for the integration
//! suites. Test-side code on purpose: the brute checks here must not
//! lean on the library internals they cross-examine.

use rand::{Rng, SeedableRng};
use rand_chacha::ChaCha8Rng;

use aligned_cycles_core::{generators, Graph};

/// The seeded random corpus: 500 2-connected graphs with n <= 30 and
/// m <= 2n, named by their seed.
pub fn random_corpus() -> Vec<(String, Graph)> {
    let mut out = Vec::with_capacity(500);
    for i in 0..500u64 {
        let mut rng = ChaCha8Rng::seed_from_u64(0xA11C + i);
        let n = rng.gen_range(4..=30);
        let m_max = (2 * n).min(n * (n - 1) / 2);
        let m = rng.gen_range(n..=m_max);
        let g = generators::random_2conn(n, m, i).expect("corpus generation");
        out.push((format!("random[seed={i},n={n},m={m}]"), g));
    }
    out
}

/// Catalog plus random corpus.
pub fn full_corpus() -> Vec<(String, Graph)> {
    let mut out: Vec<(String, Graph)> = generators::catalog()
        .iter()
        .map(|e| (e.name.to_string(), (e.build)()))
        .collect();
    out.extend(random_corpus());
    out
}

/// A random simple path with at least 2 vertices (assumes min degree >= 1).
pub fn random_simple_path(g: &Graph, rng: &mut ChaCha8Rng) -> Vec<usize> {
    loop {
        let start = rng.gen_range(0..g.n());
        let mut on = vec![false; g.n()];
        let mut path = vec![start];
        on[start] = true;
        loop {
            let tip = *path.last().unwrap();
            let options: Vec<usize> = g
                .neighbors(tip)
                .iter()
                .copied()
                .filter(|&w| !on[w])
                .collect();
            if options.is_empty() || (path.len() >= 2 && rng.gen_bool(0.3)) {
                break;
            }
            let next = options[rng.gen_range(0..options.len())];
            on[next] = true;
            path.push(next);
        }
        if path.len() >= 2 {
            return path;
        }
    }
}

/// Component count with an optional vertex removed, by plain BFS.
pub fn component_count(g: &Graph, skip: Option<usize>) -> usize {
    let n = g.n();
    let mut seen = vec![false; n];
    if let Some(s) = skip {
        seen[s] = true;
    }
    let mut components = 0;
    for root in 0..n {
        if seen[root] {
            continue;
        }
        components += 1;
        let mut queue = vec![root];
        seen[root] = true;
        while let Some(v) = queue.pop() {
            for &w in g.neighbors(v) {
                if !seen[w] {
                    seen[w] = true;
                    queue.push(w);
                }
            }
        }
    }
    components
}

/// Brute-force cut vertices: removal increases the component count.
pub fn brute_cut_vertices(g: &Graph) -> Vec<usize> {
    let base = component_count(g, None);
    (0..g.n())
        .filter(|&v| component_count(g, Some(v)) > base)
        .collect()
}

/// All simple paths with >= 2 vertices, in deterministic DFS order,
/// capped; the suites that call this stay well below the cap.
pub fn enumerate_paths(g: &Graph, cap: usize) -> Vec<Vec<usize>> {
    let mut out = Vec::new();
    let mut stack = Vec::new();
    let mut on = vec![false; g.n()];
    for start in 0..g.n() {
        stack.push(start);
        on[start] = true;
        dfs_paths(g, &mut stack, &mut on, &mut out, cap);
        on[start] = false;
        stack.pop();
        if out.len() >= cap {
            break;
        }
    }
    out
}

fn dfs_paths(
    g: &Graph,
    stack: &mut Vec<usize>,
    on: &mut [bool],
    out: &mut Vec<Vec<usize>>,
    cap: usize,
) {
    if out.len() >= cap {
        return;
    }
    let tip = *stack.last().unwrap();
    for &w in g.neighbors(tip) {
        if on[w] {
            continue;
        }
        stack.push(w);
        on[w] = true;
        out.push(stack.clone());
        dfs_paths(g, stack, on, out, cap);
        on[w] = false;
        stack.pop();
        if out.len() >= cap {
            return;
        }
    }
}
