//! Seeded pseudorandom streams.
//!
//! Every seeded operation keys a ChaCha8 generator with the user seed and
//! selects a stream: stream 0 drives graph generation, stream `i + 1` drives
//! Monte-Carlo trial `i`. Trials therefore never share randomness and can be
//! evaluated in any order or partition.

use rand::SeedableRng;
use rand_chacha::ChaCha8Rng;

pub(crate) const IDENTITY: &str = "chacha8 (rand_chacha 0.3, seed_from_u64; stream 0 = graph, stream i+1 = trial i)";

pub(crate) fn graph_stream(seed: u64) -> ChaCha8Rng {
    ChaCha8Rng::seed_from_u64(seed)
}

pub(crate) struct TrialStreams {
    base: ChaCha8Rng,
}

impl TrialStreams {
    pub(crate) fn new(seed: u64) -> Self {
        TrialStreams {
            base: ChaCha8Rng::seed_from_u64(seed),
        }
    }

    pub(crate) fn trial(&self, index: u64) -> ChaCha8Rng {
        let mut rng = self.base.clone();
        rng.set_stream(index.wrapping_add(1));
        rng.set_word_pos(0);
        rng
    }
}
