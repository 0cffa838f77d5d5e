//! Graph fixtures shared by the criterion benches.

use gallai::Graph;

/// `G(n, c / sqrt(n))` for a fixed seed.
pub fn threshold_graph(n: usize, c: f64, seed: u64) -> Graph {
    gallai::generate_gnp(n, c / (n as f64).sqrt(), seed).expect("valid parameters")
}
