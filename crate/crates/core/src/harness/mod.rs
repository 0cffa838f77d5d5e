//! Experiment harness: sweeps over `p = c / sqrt(n)`, concentration checks on
//! triangle and edge counts, entropy utilities, CSV output and the built-in
//! invariant suite behind `gallai verify`.

mod checks;
mod config;
mod csv;
mod entropy;
mod sweep;
mod verify;

pub use checks::{
    edge_concentration_check, lower_regime_check, triangle_tail_check, ConcentrationReport,
    LowerRegimeReport,
};
pub use config::{threshold_probability, SweepConfig, SweepMethod};
pub use csv::{emit_csv, format_decimal, CSV_HEADER};
pub use entropy::{binary_entropy, binomial, entropy_binomial_bound_check};
pub use sweep::{run_cell, run_sweep, MethodUsed, SweepRecord, EXACT_PREFERENCE_EDGES};
pub use verify::{run_verify, VerifyCheck};

use crate::error::{Error, Result};

/// Environment variable capping worker threads; `0` or unset means the
/// default.
pub const THREADS_ENV: &str = "GALLAI_THREADS";

/// Worker thread pool sized from [`THREADS_ENV`].
pub fn thread_pool_from_env() -> Result<rayon::ThreadPool> {
    let threads = match std::env::var(THREADS_ENV) {
        Ok(v) => v
            .trim()
            .parse::<usize>()
            .map_err(|_| Error::Config(format!("{THREADS_ENV}={v:?} is not a thread count")))?,
        Err(_) => 0,
    };
    rayon::ThreadPoolBuilder::new()
        .num_threads(threads)
        .build()
        .map_err(|e| Error::Config(format!("cannot start worker threads: {e}")))
}
