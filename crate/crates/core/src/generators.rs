//! Instance factories: named families and seeded random 2-connected
//! graphs built by ear decomposition.
//!
//! Every generator is a pure function of its spec (and seed), so the same
//! inputs always produce byte-identical edge lists. The random family
//! starts from a cycle and repeatedly attaches ears — paths whose two
//! distinct endpoints already exist — which keeps the result 2-connected
//! by construction.

use rand::{Rng, SeedableRng};
use rand_chacha::ChaCha8Rng;

use crate::error::{Error, Result};
use crate::graph::Graph;

/// Graph family selector.
#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub enum Family {
    /// `cycle(n)`, n >= 3
    Cycle,
    /// `complete(n)`, n >= 2
    Complete,
    /// `complete_bipartite(a, b)`, a, b >= 1
    CompleteBipartite,
    /// `theta(p, q, r)`: two junctions joined by three internally disjoint
    /// paths of the given edge lengths; at most one length may be 1
    Theta,
    /// `random_2conn(n, m)`: seeded ear-decomposition graph
    Random2Conn,
}

impl Family {
    pub fn parse(name: &str) -> Result<Family> {
        match name {
            "cycle" => Ok(Family::Cycle),
            "complete" => Ok(Family::Complete),
            "complete_bipartite" | "complete-bipartite" => Ok(Family::CompleteBipartite),
            "theta" => Ok(Family::Theta),
            "random_2conn" | "random-2conn" => Ok(Family::Random2Conn),
            other => Err(Error::contract(format!("unknown family {other:?}"))),
        }
    }

    pub fn name(&self) -> &'static str {
        match self {
            Family::Cycle => "cycle",
            Family::Complete => "complete",
            Family::CompleteBipartite => "complete_bipartite",
            Family::Theta => "theta",
            Family::Random2Conn => "random_2conn",
        }
    }
}

/// A generation request: family, family-specific integer parameters, seed.
/// The seed only matters for the random family.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct GenSpec {
    pub family: Family,
    pub params: Vec<usize>,
    pub seed: u64,
}

/// Builds the graph a spec describes.
pub fn generate(spec: &GenSpec) -> Result<Graph> {
    match spec.family {
        Family::Cycle => {
            let [n] = expect_params::<1>(spec)?;
            cycle(n)
        }
        Family::Complete => {
            let [n] = expect_params::<1>(spec)?;
            complete(n)
        }
        Family::CompleteBipartite => {
            let [a, b] = expect_params::<2>(spec)?;
            complete_bipartite(a, b)
        }
        Family::Theta => {
            let [p, q, r] = expect_params::<3>(spec)?;
            theta(p, q, r)
        }
        Family::Random2Conn => {
            let [n, m] = expect_params::<2>(spec)?;
            random_2conn(n, m, spec.seed)
        }
    }
}

fn expect_params<const K: usize>(spec: &GenSpec) -> Result<[usize; K]> {
    spec.params.clone().try_into().map_err(|_| {
        Error::contract(format!(
            "family {} takes {K} parameter(s), got {}",
            spec.family.name(),
            spec.params.len()
        ))
    })
}

pub fn cycle(n: usize) -> Result<Graph> {
    if n < 3 {
        return Err(Error::contract("cycle needs n >= 3"));
    }
    Graph::from_edges(n, (0..n).map(|i| (i, (i + 1) % n)))
}

pub fn complete(n: usize) -> Result<Graph> {
    if n < 2 {
        return Err(Error::contract("complete needs n >= 2"));
    }
    let edges = (0..n).flat_map(|i| (i + 1..n).map(move |j| (i, j)));
    Graph::from_edges(n, edges)
}

pub fn complete_bipartite(a: usize, b: usize) -> Result<Graph> {
    if a == 0 || b == 0 {
        return Err(Error::contract("complete_bipartite needs a, b >= 1"));
    }
    let edges = (0..a).flat_map(|i| (0..b).map(move |j| (i, a + j)));
    Graph::from_edges(a + b, edges)
}

/// Two junction vertices 0 and 1 joined by three internally disjoint paths
/// with `p`, `q`, `r` edges each.
pub fn theta(p: usize, q: usize, r: usize) -> Result<Graph> {
    let lens = [p, q, r];
    if lens.iter().any(|&l| l == 0) {
        return Err(Error::contract("theta branch lengths must be >= 1"));
    }
    if lens.iter().filter(|&&l| l == 1).count() > 1 {
        return Err(Error::contract(
            "theta: at most one branch of length 1 (no parallel edges)",
        ));
    }
    let n = 2 + lens.iter().map(|&l| l - 1).sum::<usize>();
    let mut edges = Vec::new();
    let mut next = 2;
    for &l in &lens {
        let mut prev = 0;
        for _ in 0..l - 1 {
            edges.push((prev, next));
            prev = next;
            next += 1;
        }
        edges.push((prev, 1));
    }
    Graph::from_edges(n, edges)
}

/// Wheel: hub 0 plus a rim cycle of `k` vertices, every rim vertex spoked
/// to the hub.
pub fn wheel(k: usize) -> Result<Graph> {
    if k < 3 {
        return Err(Error::contract("wheel needs a rim of >= 3 vertices"));
    }
    let mut edges: Vec<(usize, usize)> = (1..=k).map(|i| (0, i)).collect();
    for i in 1..=k {
        edges.push((i, if i == k { 1 } else { i + 1 }));
    }
    Graph::from_edges(k + 1, edges)
}

/// Seeded random 2-connected graph on exactly `n` vertices and `m` edges:
/// an initial cycle plus `m - n` ears. Internal ear vertices take fresh
/// ids; length-0 ears become chords sampled from the remaining non-edges.
pub fn random_2conn(n: usize, m: usize, seed: u64) -> Result<Graph> {
    if n < 3 {
        return Err(Error::contract("random_2conn needs n >= 3"));
    }
    if m < n {
        return Err(Error::contract("random_2conn needs m >= n"));
    }
    if m > n * (n - 1) / 2 {
        return Err(Error::contract(format!(
            "random_2conn: m = {m} exceeds the simple-graph maximum for n = {n}"
        )));
    }
    let mut rng = ChaCha8Rng::seed_from_u64(seed);
    let ears = m - n;
    if ears == 0 {
        return cycle(n);
    }
    // initial cycle size, leaving the rest to ear interiors
    let c0 = rng.gen_range(3..=n);
    let mut interior_left = n - c0;

    let mut adj: Vec<Vec<usize>> = vec![Vec::new(); n];
    let mut edges: Vec<(usize, usize)> = Vec::new();
    let add_edge = |adj: &mut Vec<Vec<usize>>, edges: &mut Vec<(usize, usize)>, u: usize, v: usize| {
        adj[u].push(v);
        adj[v].push(u);
        edges.push((u, v));
    };
    for i in 0..c0 {
        add_edge(&mut adj, &mut edges, i, (i + 1) % c0);
    }
    let mut placed = c0;

    for ear_idx in 0..ears {
        let ears_left = ears - ear_idx;
        // interior vertices for this ear: spread the remainder randomly but
        // make sure the leftover still fits into the remaining ears; a
        // chord (no interior) is only possible while the placed subgraph
        // has a non-edge left
        let placed_complete = edges.len() == placed * (placed - 1) / 2;
        let k = if ears_left == 1 {
            interior_left
        } else if placed_complete {
            rng.gen_range(1..=interior_left)
        } else {
            rng.gen_range(0..=interior_left)
        };
        if k == 0 {
            // chord: rejection-sample a non-edge, fall back to enumeration
            let mut chord = None;
            for _ in 0..100 {
                let u = rng.gen_range(0..placed);
                let v = rng.gen_range(0..placed);
                if u != v && !adj[u].contains(&v) {
                    chord = Some((u, v));
                    break;
                }
            }
            let (u, v) = match chord {
                Some(c) => c,
                None => {
                    let mut free = Vec::new();
                    for u in 0..placed {
                        for v in u + 1..placed {
                            if !adj[u].contains(&v) {
                                free.push((u, v));
                            }
                        }
                    }
                    if free.is_empty() {
                        return Err(Error::contract(
                            "random_2conn: ran out of chord positions",
                        ));
                    }
                    free[rng.gen_range(0..free.len())]
                }
            };
            add_edge(&mut adj, &mut edges, u, v);
        } else {
            // proper ear: distinct existing endpoints, fresh interior
            let u = rng.gen_range(0..placed);
            let v = loop {
                let v = rng.gen_range(0..placed);
                if v != u {
                    break v;
                }
            };
            let mut prev = u;
            for _ in 0..k {
                add_edge(&mut adj, &mut edges, prev, placed);
                prev = placed;
                placed += 1;
            }
            add_edge(&mut adj, &mut edges, prev, v);
            interior_left -= k;
        }
    }
    debug_assert_eq!(placed, n);
    debug_assert_eq!(edges.len(), m);
    Graph::from_edges(n, edges)
}

pub fn petersen() -> Graph {
    let edges = [
        (0, 1),
        (1, 2),
        (2, 3),
        (3, 4),
        (4, 0),
        (0, 5),
        (1, 6),
        (2, 7),
        (3, 8),
        (4, 9),
        (5, 7),
        (7, 9),
        (9, 6),
        (6, 8),
        (8, 5),
    ];
    Graph::from_edges(10, edges).expect("static edge list is simple")
}

/// A pinned named fixture: the graph, its minimum degree, and the exact
/// longest-cycle length. The lengths are recomputed from scratch by the
/// oracle test suite, never assumed.
pub struct CatalogEntry {
    pub name: &'static str,
    pub delta: usize,
    pub longest_cycle: usize,
    pub build: fn() -> Graph,
}

/// The in-repo catalog of small 2-connected fixtures.
pub fn catalog() -> Vec<CatalogEntry> {
    fn c(n: usize) -> fn() -> Graph {
        match n {
            3 => || cycle(3).unwrap(),
            5 => || cycle(5).unwrap(),
            6 => || cycle(6).unwrap(),
            7 => || cycle(7).unwrap(),
            8 => || cycle(8).unwrap(),
            9 => || cycle(9).unwrap(),
            _ => unreachable!(),
        }
    }
    vec![
        CatalogEntry { name: "triangle", delta: 2, longest_cycle: 3, build: c(3) },
        CatalogEntry { name: "c5", delta: 2, longest_cycle: 5, build: c(5) },
        CatalogEntry { name: "c6", delta: 2, longest_cycle: 6, build: c(6) },
        CatalogEntry { name: "c7", delta: 2, longest_cycle: 7, build: c(7) },
        CatalogEntry { name: "c8", delta: 2, longest_cycle: 8, build: c(8) },
        CatalogEntry { name: "c9", delta: 2, longest_cycle: 9, build: c(9) },
        CatalogEntry { name: "k4", delta: 3, longest_cycle: 4, build: || complete(4).unwrap() },
        CatalogEntry {
            name: "k23",
            delta: 2,
            longest_cycle: 4,
            build: || complete_bipartite(2, 3).unwrap(),
        },
        CatalogEntry {
            name: "k25",
            delta: 2,
            longest_cycle: 4,
            build: || complete_bipartite(2, 5).unwrap(),
        },
        CatalogEntry {
            name: "k33",
            delta: 3,
            longest_cycle: 6,
            build: || complete_bipartite(3, 3).unwrap(),
        },
        CatalogEntry {
            name: "k34",
            delta: 3,
            longest_cycle: 6,
            build: || complete_bipartite(3, 4).unwrap(),
        },
        CatalogEntry { name: "petersen", delta: 3, longest_cycle: 9, build: petersen },
        CatalogEntry { name: "wheel6", delta: 3, longest_cycle: 7, build: || wheel(6).unwrap() },
        CatalogEntry {
            name: "theta_223",
            delta: 2,
            longest_cycle: 5,
            build: || theta(2, 2, 3).unwrap(),
        },
        CatalogEntry {
            name: "theta_233",
            delta: 2,
            longest_cycle: 6,
            build: || theta(2, 3, 3).unwrap(),
        },
    ]
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::connectivity::analyze;

    #[test]
    fn named_families() {
        let c5 = cycle(5).unwrap();
        assert_eq!(c5.n(), 5);
        assert_eq!(c5.edge_count(), 5);
        assert_eq!(c5.min_degree(), 2);

        let k23 = complete_bipartite(2, 3).unwrap();
        assert_eq!(k23.n(), 5);
        assert_eq!(k23.min_degree(), 2);
        assert_eq!(k23.edge_count(), 6);

        let t = theta(2, 2, 3).unwrap();
        assert_eq!(t.n(), 6);
        assert_eq!(t.min_degree(), 2);
        assert_eq!(t.degree(0), 3);
        assert_eq!(t.degree(1), 3);

        let w = wheel(6).unwrap();
        assert_eq!(w.n(), 7);
        assert_eq!(w.min_degree(), 3);
        assert_eq!(w.degree(0), 6);
    }

    #[test]
    fn parameter_validation() {
        assert!(cycle(2).is_err());
        assert!(theta(1, 1, 2).is_err());
        assert!(theta(0, 2, 2).is_err());
        assert!(random_2conn(5, 4, 0).is_err());
        assert!(random_2conn(4, 7, 0).is_err());
        let spec = GenSpec {
            family: Family::Cycle,
            params: vec![5, 6],
            seed: 0,
        };
        assert!(generate(&spec).is_err());
    }

    #[test]
    fn random_2conn_is_two_connected() {
        for seed in 0..30 {
            let g = random_2conn(20, 30, seed).unwrap();
            assert_eq!(g.n(), 20);
            assert_eq!(g.edge_count(), 30);
            assert!(analyze(&g).two_connected, "seed {seed}");
        }
    }

    #[test]
    fn random_2conn_deterministic() {
        let a = random_2conn(15, 25, 7).unwrap();
        let b = random_2conn(15, 25, 7).unwrap();
        assert_eq!(a.to_edge_list(), b.to_edge_list());
        let c = random_2conn(15, 25, 8).unwrap();
        assert!(a.to_edge_list() != c.to_edge_list() || a.edges() == c.edges());
    }

    #[test]
    fn random_2conn_m_equals_n_is_a_cycle() {
        let g = random_2conn(9, 9, 3).unwrap();
        assert_eq!(g.edge_count(), 9);
        assert!(g.vertices().all(|v| g.degree(v) == 2));
        assert!(analyze(&g).two_connected);
    }

    #[test]
    fn catalog_entries_are_two_connected_with_pinned_delta() {
        for entry in catalog() {
            let g = (entry.build)();
            assert!(analyze(&g).two_connected, "{}", entry.name);
            assert_eq!(g.min_degree(), entry.delta, "{}", entry.name);
        }
    }

    #[test]
    fn family_names_round_trip() {
        for f in [
            Family::Cycle,
            Family::Complete,
            Family::CompleteBipartite,
            Family::Theta,
            Family::Random2Conn,
        ] {
            assert_eq!(Family::parse(f.name()).unwrap(), f);
        }
        assert!(Family::parse("torus").is_err());
    }
}
