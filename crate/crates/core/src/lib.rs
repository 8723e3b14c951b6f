//! Constructive path and cycle extraction in 2-connected graphs.
//!
//! The two central algorithms:
//!
//! - [`aligned_paths::aligned_pair`]: given a path `p` from `x` to `y` and
//!   any vertex `z`, produces an `x,z`-path and an `x,y`-path that are
//!   internally disjoint and both aligned with `p` (common vertices appear
//!   in the same relative order).
//! - [`long_cycle::long_cycle`]: produces a cycle of length at least
//!   `min(n, 2δ)` together with a certificate that can be re-verified
//!   independently.
//!
//! Everything is deterministic: ties resolve by smallest vertex id, so
//! repeated runs emit identical output. The [`oracles`] module holds
//! exhaustive desk-scale ground truth used to cross-check both algorithms,
//! and [`generators`] builds the named and random instances the test
//! suites run on.

pub mod aligned_paths;
mod bfs;
pub mod connectivity;
pub mod error;
pub mod generators;
pub mod graph;
pub mod long_cycle;
pub mod oracles;
pub mod paths;

pub use aligned_paths::{aligned_pair, escape_path, AlignedPair};
pub use connectivity::{analyze, whitney_pair, ConnectivityReport};
pub use error::{Error, Result};
pub use generators::{generate, Family, GenSpec};
pub use graph::{Graph, VertexId};
pub use long_cycle::{
    grow_path, improve_case1, improve_case2, initial_lollipop, long_cycle, CycleCertificate,
};
pub use oracles::{
    aligned_pairwise, aligned_tuple_exists, brute_longest_cycle, max_aligned_disjoint_paths,
    OracleBudget,
};
pub use paths::{is_aligned, verify_cycle, verify_lollipop, verify_path, Cycle, Lollipop, Path};
