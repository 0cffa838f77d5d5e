use std::cmp::Ordering;
use std::fmt;

use rayon::prelude::*;

use super::config::{threshold_probability, SweepConfig, SweepMethod};
use crate::error::Result;
use crate::estimate::{estimate_knuth, estimate_naive, LogEstimate, Outcome};
use crate::gallai::count_exact;
use crate::graph::{generate_gnp, triangle_stats};

/// Graphs with at most this many edges are always counted exactly by `auto`.
pub const EXACT_PREFERENCE_EDGES: usize = 18;

const LOG2_3: f64 = 1.584_962_500_721_156_2;

#[derive(Clone, Copy, Debug, PartialEq, Eq, Hash)]
pub enum MethodUsed {
    Exact,
    Naive,
    Knuth,
}

impl fmt::Display for MethodUsed {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.write_str(match self {
            MethodUsed::Exact => "exact",
            MethodUsed::Naive => "naive",
            MethodUsed::Knuth => "knuth",
        })
    }
}

/// Outcome of one `(n, c, seed)` cell.
///
/// The ratios are the observable exponents: `ratio3 = log3(count) / e` and
/// `ratio2 = log2(count) / e`. They are `None` when no numeric count exists
/// (capped exact run or zero-hit estimate) and `1` when `e = 0`.
#[derive(Clone, Debug, PartialEq)]
pub struct SweepRecord {
    pub n: usize,
    pub c: f64,
    pub p: f64,
    pub seed: u64,
    pub edges: usize,
    pub triangles: u64,
    pub triangle_edges: usize,
    pub method_used: MethodUsed,
    pub log3_count: Option<f64>,
    pub log3_stderr: Option<f64>,
    pub ratio3: Option<f64>,
    pub ratio2: Option<f64>,
    /// `log3(3^(e - t) * 2^t) / e`.
    pub construction_ratio3: f64,
    pub capped: bool,
    pub zero_hit: bool,
}

impl SweepRecord {
    /// Observed `1 - ratio3`.
    pub fn lower_delta(&self) -> Option<f64> {
        self.ratio3.map(|r| 1.0 - r)
    }

    /// Observed `ratio2 - 1`.
    pub fn upper_delta(&self) -> Option<f64> {
        self.ratio2.map(|r| r - 1.0)
    }

    fn sort_key(&self, other: &Self) -> Ordering {
        self.n
            .cmp(&other.n)
            .then(self.c.total_cmp(&other.c))
            .then(self.seed.cmp(&other.seed))
    }
}

struct Counted {
    method: MethodUsed,
    log3: Option<f64>,
    stderr: Option<f64>,
    capped: bool,
    zero_hit: bool,
}

fn from_estimate(method: MethodUsed, est: LogEstimate) -> Counted {
    match est.outcome() {
        Outcome::Estimate { log3, log3_stderr } => Counted {
            method,
            log3: Some(log3),
            stderr: Some(log3_stderr),
            capped: false,
            zero_hit: false,
        },
        Outcome::ZeroHit { .. } => Counted {
            method,
            log3: None,
            stderr: None,
            capped: false,
            zero_hit: true,
        },
    }
}

/// Runs a single cell: generate `G(n, c / sqrt(n), seed)`, compute triangle
/// statistics and count or estimate.
pub fn run_cell(cfg: &SweepConfig, n: usize, c: f64, seed: u64) -> Result<SweepRecord> {
    let p = if n < 2 { 0.0 } else { threshold_probability(n, c) };
    let g = generate_gnp(n, p, seed)?;
    let stats = triangle_stats(&g);
    let e = g.edge_count();

    let exact = |cap: u64| {
        let report = count_exact(&g, cap);
        Counted {
            method: MethodUsed::Exact,
            log3: report.log3_count(),
            stderr: (!report.capped).then_some(0.0),
            capped: report.capped,
            zero_hit: false,
        }
    };
    let counted = match cfg.method {
        SweepMethod::Exact => exact(cfg.node_cap),
        SweepMethod::Naive => from_estimate(MethodUsed::Naive, estimate_naive(&g, cfg.samples, seed)?),
        SweepMethod::Knuth => from_estimate(MethodUsed::Knuth, estimate_knuth(&g, cfg.samples, seed)?),
        SweepMethod::Auto if e <= EXACT_PREFERENCE_EDGES => exact(u64::MAX),
        SweepMethod::Auto => match exact(cfg.node_cap) {
            done if !done.capped => done,
            _ => from_estimate(MethodUsed::Knuth, estimate_knuth(&g, cfg.samples, seed)?),
        },
    };

    let t = stats.triangle_edge_count;
    let (ratio3, construction_ratio3) = if e == 0 {
        (Some(1.0), 1.0)
    } else {
        let construction = ((e - t) as f64 + t as f64 / LOG2_3) / e as f64;
        (counted.log3.map(|l| l / e as f64), construction)
    };
    Ok(SweepRecord {
        n,
        c,
        p,
        seed,
        edges: e,
        triangles: stats.triangle_count,
        triangle_edges: t,
        method_used: counted.method,
        log3_count: counted.log3,
        log3_stderr: counted.stderr,
        ratio3,
        ratio2: if e == 0 { Some(1.0) } else { ratio3.map(|r| r * LOG2_3) },
        construction_ratio3,
        capped: counted.capped,
        zero_hit: counted.zero_hit,
    })
}

/// Runs every cell of `cfg`, concurrently, and returns the records sorted by
/// `(n, c, seed)`.
pub fn run_sweep(cfg: &SweepConfig) -> Result<Vec<SweepRecord>> {
    cfg.validate()?;
    let cells: Vec<(usize, f64, u64)> = cfg
        .n_values
        .iter()
        .flat_map(|&n| {
            cfg.c_values
                .iter()
                .flat_map(move |&c| cfg.seeds.iter().map(move |&s| (n, c, s)))
        })
        .collect();
    let mut records = cells
        .into_par_iter()
        .map(|(n, c, seed)| run_cell(cfg, n, c, seed))
        .collect::<Result<Vec<_>>>()?;
    records.sort_by(SweepRecord::sort_key);
    Ok(records)
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::gallai::count_bruteforce;

    #[test]
    fn empty_graph_convention() {
        let cfg = SweepConfig::new(vec![0], vec![1.0], vec![0], SweepMethod::Auto);
        let recs = run_sweep(&cfg).unwrap();
        assert_eq!(recs.len(), 1);
        let r = &recs[0];
        assert_eq!(r.edges, 0);
        assert_eq!((r.ratio3, r.ratio2, r.construction_ratio3), (Some(1.0), Some(1.0), 1.0));
    }

    #[test]
    fn complete_k4_cell() {
        let cfg = SweepConfig::new(vec![4], vec![2.0], vec![3], SweepMethod::Auto);
        let r = &run_sweep(&cfg).unwrap()[0];
        assert_eq!(r.p, 1.0);
        assert_eq!((r.edges, r.triangles, r.triangle_edges), (6, 4, 6));
        assert_eq!(r.method_used, MethodUsed::Exact);
        let truth = count_bruteforce(&crate::graph::Graph::complete(4).unwrap()).unwrap();
        assert!((r.log3_count.unwrap() - truth.log3()).abs() < 1e-12);
        assert_eq!(r.log3_stderr, Some(0.0));
    }

    #[test]
    fn records_are_sorted() {
        let cfg = SweepConfig::new(vec![30, 10], vec![1.0, 0.2], vec![5, 1], SweepMethod::Knuth);
        let recs = run_sweep(&SweepConfig { samples: 50, ..cfg }).unwrap();
        let keys: Vec<_> = recs.iter().map(|r| (r.n, r.c, r.seed)).collect();
        assert_eq!(
            keys,
            vec![
                (10, 0.2, 1),
                (10, 0.2, 5),
                (10, 1.0, 1),
                (10, 1.0, 5),
                (30, 0.2, 1),
                (30, 0.2, 5),
                (30, 1.0, 1),
                (30, 1.0, 5)
            ]
        );
    }

    #[test]
    fn forced_exact_reports_cap() {
        let mut cfg = SweepConfig::new(vec![9], vec![3.0], vec![0], SweepMethod::Exact);
        cfg.node_cap = 100;
        let r = &run_sweep(&cfg).unwrap()[0];
        assert!(r.capped);
        assert_eq!((r.log3_count, r.ratio3), (None, None));
    }

    #[test]
    fn auto_falls_back_to_knuth() {
        let mut cfg = SweepConfig::new(vec![9], vec![3.0], vec![0], SweepMethod::Auto);
        cfg.node_cap = 100;
        cfg.samples = 200;
        let r = &run_sweep(&cfg).unwrap()[0];
        assert!(r.edges > EXACT_PREFERENCE_EDGES);
        assert_eq!(r.method_used, MethodUsed::Knuth);
        assert!(!r.capped);
    }

    #[test]
    fn rejects_probability_above_one() {
        let cfg = SweepConfig::new(vec![4], vec![2.5], vec![0], SweepMethod::Auto);
        assert!(run_sweep(&cfg).is_err());
    }
}
