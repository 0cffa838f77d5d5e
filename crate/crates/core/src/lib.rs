//! Exact counting, Monte-Carlo estimation and random-graph experiments for
//! Gallai 3-colourings: edge colourings with colours `{1, 2, 3}` in which no
//! triangle has three distinct colours.
//!
//! The crate is organised bottom-up:
//!
//! - [`graph`]: simple undirected graphs with bit-row adjacency, seeded
//!   `G(n, p)` generation, triangle statistics and the edge-list format.
//! - [`gallai`]: colourings, the brute-force oracle, the component-factored
//!   exact counter, the two-colour lower-bound construction and the Gallai
//!   weight function.
//! - [`estimate`]: naive acceptance sampling and Knuth's backtrack-tree
//!   estimator, pooled in log space.
//! - [`harness`]: sweep configs, concentration checks, entropy utilities and
//!   CSV output used by the command-line tool.

pub mod error;
pub mod estimate;
pub mod gallai;
pub mod graph;
pub mod harness;
pub(crate) mod rng;

pub use error::{Error, Result};
pub use estimate::{estimate_knuth, estimate_naive, pool, LogEstimate, Method, Outcome};
pub use gallai::{
    construction_count, construction_enumerate, count_bruteforce, count_exact, gallai_weight,
    is_gallai, BigCount, ColourPair, Colouring, CountReport,
};
pub use graph::{generate_gnp, load_edge_list, save_edge_list, triangle_stats, Graph, Triangle, TriangleStats};

/// Identity of the pseudorandom generator behind every seeded operation.
pub const RNG_IDENTITY: &str = rng::IDENTITY;
