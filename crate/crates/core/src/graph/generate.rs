use rand::Rng;

use super::{pair_count, Graph, Vertex};
use crate::error::{Error, Result};
use crate::rng;

/// Samples `G(n, p)`.
///
/// One uniform `f64` in `[0, 1)` is drawn per vertex pair, in canonical pair
/// order, and the pair becomes an edge when the draw is below `p`. Graphs with
/// the same `n` and `seed` are therefore coupled: raising `p` only adds edges.
pub fn generate_gnp(n: usize, p: f64, seed: u64) -> Result<Graph> {
    if !(0.0..=1.0).contains(&p) {
        return Err(Error::InvalidParameter(format!("edge probability {p} is outside [0, 1]")));
    }
    pair_count(n)?;
    let mut rng = rng::graph_stream(seed);
    let mut edges = Vec::new();
    for u in 0..n as Vertex {
        for v in u + 1..n as Vertex {
            if rng.gen::<f64>() < p {
                edges.push((u, v));
            }
        }
    }
    Graph::from_sorted_edges(n, edges)
}
