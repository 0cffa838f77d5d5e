//! Monte-Carlo estimates of the number of Gallai colourings.
//!
//! Two estimators share one reporting type:
//!
//! - **naive**: draw uniform colourings and scale the acceptance fraction by
//!   `3^e`. Acceptance becomes exponentially rare on dense graphs, so a run
//!   with no accepted sample is reported as [`Outcome::ZeroHit`] carrying only
//!   a one-sided bound.
//! - **knuth**: walk one random root-to-leaf path of the exact counter's
//!   search tree (edges in canonical order), choosing uniformly among the
//!   colours that survive constraint propagation and multiplying the
//!   branching factors. The product is an unbiased estimate of the leaf
//!   count. A step can still allow one colour or, rarely, none; a path that
//!   hits an empty choice has weight zero.
//!
//! Trial `i` of a run with seed `s` draws from its own substream of `s`, so
//! any partition of a trial range into workers pools to the same estimate up
//! to floating-point summation order. Weights can be as large as `3^e` and are
//! summed in log space.

use std::fmt;
use std::ops::Range;
use std::str::FromStr;

use rand::Rng;
use rayon::prelude::*;

use crate::error::{Error, Result};
use crate::gallai::{colour_bit, RAINBOW};
use crate::graph::Graph;
use crate::rng::TrialStreams;

/// Trials per work unit. Fixed so that results do not depend on the number of
/// worker threads.
const CHUNK: u64 = 4096;

const LOG3_2: f64 = std::f64::consts::LN_2 / LN_3;
const LN_3: f64 = 1.098_612_288_668_109_8;

#[derive(Clone, Copy, Debug, PartialEq, Eq, Hash)]
pub enum Method {
    Naive,
    Knuth,
}

impl fmt::Display for Method {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.write_str(match self {
            Method::Naive => "naive",
            Method::Knuth => "knuth",
        })
    }
}

impl FromStr for Method {
    type Err = Error;

    fn from_str(s: &str) -> Result<Self> {
        match s {
            "naive" => Ok(Method::Naive),
            "knuth" => Ok(Method::Knuth),
            _ => Err(Error::InvalidArgument(format!("unknown estimator {s:?}"))),
        }
    }
}

/// Sufficient statistics of a batch of trials; pooling adds them up.
#[derive(Clone, Copy, Debug, PartialEq)]
enum Moments {
    Naive { hits: u64 },
    /// Log-base-3 sums of the trial weights and their squares.
    Knuth {
        log3_sum: f64,
        log3_sum_sq: f64,
        log3_min: f64,
        log3_max: f64,
    },
}

#[derive(Clone, Copy, Debug, PartialEq)]
pub enum Outcome {
    Estimate { log3: f64, log3_stderr: f64 },
    /// No trial had positive weight. The bound is a 95% one-sided bound for
    /// the naive estimator (rule of three) and the trivial `3^e` otherwise.
    ZeroHit { log3_upper_bound: f64 },
}

#[derive(Clone, Debug, PartialEq)]
pub struct LogEstimate {
    pub method: Method,
    pub seed: u64,
    pub samples: u64,
    moments: Moments,
    edges: usize,
}

impl LogEstimate {
    pub fn outcome(&self) -> Outcome {
        let n = self.samples as f64;
        let edges = self.edges;
        match self.moments {
            Moments::Naive { hits } => {
                if hits == 0 {
                    let bound = edges as f64 + (3.0 / n).ln() / LN_3;
                    return Outcome::ZeroHit {
                        log3_upper_bound: bound.min(edges as f64),
                    };
                }
                let f = hits as f64 / n;
                Outcome::Estimate {
                    log3: edges as f64 + f.ln() / LN_3,
                    log3_stderr: ((1.0 - f) / (f * n)).sqrt() / LN_3,
                }
            }
            Moments::Knuth {
                log3_sum,
                log3_sum_sq,
                log3_min,
                log3_max,
            } => {
                if log3_max == f64::NEG_INFINITY {
                    return Outcome::ZeroHit {
                        log3_upper_bound: edges as f64,
                    };
                }
                if log3_min == log3_max {
                    return Outcome::Estimate {
                        log3: log3_max,
                        log3_stderr: 0.0,
                    };
                }
                // Delta method: sd(log mean) ~ sd(mean) / mean, where
                // var(mean) / mean^2 = (n * S2 / S1^2 - 1) / (n - 1).
                let ratio = ((log3_sum_sq - 2.0 * log3_sum) * LN_3).exp();
                let rel_var = ((n * ratio - 1.0) / (n - 1.0)).max(0.0);
                Outcome::Estimate {
                    log3: log3_sum - n.ln() / LN_3,
                    log3_stderr: rel_var.sqrt() / LN_3,
                }
            }
        }
    }

    pub fn log3_estimate(&self) -> Option<f64> {
        match self.outcome() {
            Outcome::Estimate { log3, .. } => Some(log3),
            Outcome::ZeroHit { .. } => None,
        }
    }

    pub fn log3_stderr(&self) -> Option<f64> {
        match self.outcome() {
            Outcome::Estimate { log3_stderr, .. } => Some(log3_stderr),
            Outcome::ZeroHit { .. } => None,
        }
    }

    pub fn is_zero_hit(&self) -> bool {
        matches!(self.outcome(), Outcome::ZeroHit { .. })
    }

    /// `log3` of the largest trial weight (Knuth only).
    pub fn log3_max_weight(&self) -> Option<f64> {
        match self.moments {
            Moments::Knuth { log3_max, .. } => Some(log3_max),
            Moments::Naive { .. } => None,
        }
    }

    /// Number of edges of the graph the estimate refers to.
    pub fn edges(&self) -> usize {
        self.edges
    }
}

/// `log3(3^a + 3^b)`.
fn log3_add(a: f64, b: f64) -> f64 {
    let (hi, lo) = if a >= b { (a, b) } else { (b, a) };
    if lo == f64::NEG_INFINITY {
        return hi;
    }
    hi + ((lo - hi) * LN_3).exp().ln_1p() / LN_3
}

/// `log3(sum 3^x)` over `xs`.
fn log3_sum_exp(xs: impl Iterator<Item = f64> + Clone) -> f64 {
    let max = xs.clone().fold(f64::NEG_INFINITY, f64::max);
    if max == f64::NEG_INFINITY {
        return max;
    }
    max + xs.map(|x| ((x - max) * LN_3).exp()).sum::<f64>().ln() / LN_3
}

fn merge(a: &LogEstimate, b: &LogEstimate) -> Result<LogEstimate> {
    if a.method != b.method {
        return Err(Error::InvalidArgument(format!(
            "cannot pool {} and {} estimates",
            a.method, b.method
        )));
    }
    if a.edges != b.edges {
        return Err(Error::InvalidArgument(format!(
            "cannot pool estimates for graphs with {} and {} edges",
            a.edges, b.edges
        )));
    }
    let moments = match (a.moments, b.moments) {
        (Moments::Naive { hits: h1 }, Moments::Naive { hits: h2 }) => Moments::Naive { hits: h1 + h2 },
        (
            Moments::Knuth {
                log3_sum: s1,
                log3_sum_sq: q1,
                log3_min: lo1,
                log3_max: hi1,
            },
            Moments::Knuth {
                log3_sum: s2,
                log3_sum_sq: q2,
                log3_min: lo2,
                log3_max: hi2,
            },
        ) => Moments::Knuth {
            log3_sum: log3_add(s1, s2),
            log3_sum_sq: log3_add(q1, q2),
            log3_min: lo1.min(lo2),
            log3_max: hi1.max(hi2),
        },
        _ => unreachable!("method tags and moments agree"),
    };
    Ok(LogEstimate {
        method: a.method,
        seed: a.seed,
        samples: a.samples + b.samples,
        moments,
        edges: a.edges,
    })
}

/// Combines estimates of the same graph as if their trials formed one run.
/// The pooled seed is the first input's.
pub fn pool(estimates: &[LogEstimate]) -> Result<LogEstimate> {
    let (first, rest) = estimates
        .split_first()
        .ok_or_else(|| Error::InvalidArgument("nothing to pool".into()))?;
    rest.iter().try_fold(first.clone(), |acc, x| merge(&acc, x))
}

/// Weight of one Knuth trial: `3^threes * 2^twos`, or zero for a dead end.
#[derive(Clone, Copy, Debug, PartialEq, Eq)]
pub struct TrialWeight {
    pub threes: u32,
    pub twos: u32,
    pub dead: bool,
}

impl TrialWeight {
    pub fn log3(&self) -> f64 {
        if self.dead {
            f64::NEG_INFINITY
        } else {
            self.threes as f64 + self.twos as f64 * LOG3_2
        }
    }

    pub fn value(&self) -> f64 {
        if self.dead {
            0.0
        } else {
            3f64.powi(self.threes as i32) * 2f64.powi(self.twos as i32)
        }
    }
}

/// Per-graph tables shared by both estimators.
struct Plan {
    edges: usize,
    in_triangle: Vec<bool>,
    /// For each edge, the other two edges of every triangle containing it.
    incident: Vec<Vec<(u32, u32)>>,
    triangles: Vec<[usize; 3]>,
}

/// Colour domains of the triangle edges during one Knuth trial, with an undo
/// trail for tentative assignments.
struct Domains {
    dom: Vec<u8>,
    trail: Vec<(u32, u8)>,
    queue: Vec<u32>,
}

impl Domains {
    fn new(edges: usize) -> Self {
        Domains {
            dom: vec![RAINBOW; edges],
            trail: Vec::new(),
            queue: Vec::new(),
        }
    }

    fn reset(&mut self) {
        self.dom.fill(RAINBOW);
        self.trail.clear();
        self.queue.clear();
    }

    /// Intersects the domain of `e` with `mask`; false if it becomes empty.
    fn narrow(&mut self, e: u32, mask: u8) -> bool {
        let old = self.dom[e as usize];
        let new = old & mask;
        if new != old {
            self.trail.push((e, old));
            self.dom[e as usize] = new;
            if new.count_ones() == 1 {
                self.queue.push(e);
            }
        }
        new != 0
    }

    fn undo(&mut self, mark: usize) {
        for (e, old) in self.trail.drain(mark..).rev() {
            self.dom[e as usize] = old;
        }
        self.queue.clear();
    }
}

impl Plan {
    fn new(g: &Graph) -> Self {
        let mut in_triangle = vec![false; g.edge_count()];
        let mut incident = vec![Vec::new(); g.edge_count()];
        let mut triangles = Vec::new();
        g.for_each_triangle(|t| {
            let [a, b, c] = t.edges.map(|e| e as u32);
            for e in t.edges {
                in_triangle[e] = true;
            }
            incident[a as usize].push((b, c));
            incident[b as usize].push((a, c));
            incident[c as usize].push((a, b));
            triangles.push(t.edges);
        });
        Plan {
            edges: g.edge_count(),
            in_triangle,
            incident,
            triangles,
        }
    }

    /// Fixes `e` to the single colour `bit` and propagates: whenever two
    /// edges of a triangle are fixed to distinct colours, the third must take
    /// one of them. False if some domain empties, in which case no Gallai
    /// colouring extends the current state.
    fn assign(&self, d: &mut Domains, e: u32, bit: u8) -> bool {
        if !d.narrow(e, bit) {
            return false;
        }
        while let Some(x) = d.queue.pop() {
            let dx = d.dom[x as usize];
            for &(y, z) in &self.incident[x as usize] {
                let (dy, dz) = (d.dom[y as usize], d.dom[z as usize]);
                if dy.count_ones() == 1 && dy != dx && !d.narrow(z, dx | dy) {
                    return false;
                }
                if dz.count_ones() == 1 && dz != dx && !d.narrow(y, dx | dz) {
                    return false;
                }
            }
        }
        true
    }

    /// One Knuth trial on the search tree pruned by propagation. Only
    /// colours with no Gallai completion are pruned, so the leaves are
    /// exactly the Gallai colourings and the weight stays unbiased.
    fn knuth_trial(&self, rng: &mut impl Rng, d: &mut Domains) -> TrialWeight {
        let mut w = TrialWeight {
            threes: 0,
            twos: 0,
            dead: false,
        };
        d.reset();
        for i in 0..self.edges {
            if !self.in_triangle[i] {
                // Colour of a non-triangle edge is never read.
                w.threes += 1;
                continue;
            }
            let dom = d.dom[i];
            if dom.count_ones() == 1 {
                continue;
            }
            let mut allowed = 0u8;
            let mut bits = dom;
            while bits != 0 {
                let bit = bits & bits.wrapping_neg();
                bits &= bits - 1;
                let mark = d.trail.len();
                if self.assign(d, i as u32, bit) {
                    allowed |= bit;
                }
                d.undo(mark);
            }
            let k = allowed.count_ones();
            match k {
                0 => {
                    w.dead = true;
                    return w;
                }
                2 => w.twos += 1,
                3 => w.threes += 1,
                _ => {}
            }
            let mut pick = rng.gen_range(0..k);
            let mut bits = allowed;
            while pick > 0 {
                bits &= bits - 1;
                pick -= 1;
            }
            let ok = self.assign(d, i as u32, bits & bits.wrapping_neg());
            debug_assert!(ok);
            d.trail.clear();
        }
        w
    }

    fn naive_trial(&self, rng: &mut impl Rng, masks: &mut [u8]) -> bool {
        for i in 0..self.edges {
            if self.in_triangle[i] {
                masks[i] = colour_bit(rng.gen_range(1..=3));
            }
        }
        self.triangles
            .iter()
            .all(|&[a, b, c]| masks[a] | masks[b] | masks[c] != RAINBOW)
    }
}

fn chunks(trials: Range<u64>) -> Vec<Range<u64>> {
    let mut out = Vec::new();
    let mut start = trials.start;
    while start < trials.end {
        let end = trials.end.min(start + CHUNK);
        out.push(start..end);
        start = end;
    }
    out
}

fn check_samples(trials: &Range<u64>) -> Result<()> {
    if trials.is_empty() {
        return Err(Error::InvalidArgument("at least one sample is required".into()));
    }
    Ok(())
}

/// Knuth trial weights for trials `trials` of seed `seed`, in trial order.
pub fn knuth_trials(g: &Graph, seed: u64, trials: Range<u64>) -> Vec<TrialWeight> {
    let plan = Plan::new(g);
    let streams = TrialStreams::new(seed);
    let mut domains = Domains::new(g.edge_count());
    trials
        .map(|i| plan.knuth_trial(&mut streams.trial(i), &mut domains))
        .collect()
}

/// Knuth estimate from the given trial range.
pub fn estimate_knuth_trials(g: &Graph, seed: u64, trials: Range<u64>) -> Result<LogEstimate> {
    check_samples(&trials)?;
    let plan = Plan::new(g);
    let streams = TrialStreams::new(seed);
    let parts: Vec<LogEstimate> = chunks(trials)
        .into_par_iter()
        .map(|range| {
            let mut domains = Domains::new(plan.edges);
            let logs: Vec<f64> = range
                .clone()
                .map(|i| plan.knuth_trial(&mut streams.trial(i), &mut domains).log3())
                .collect();
            let (lo, hi) = logs
                .iter()
                .fold((f64::INFINITY, f64::NEG_INFINITY), |(lo, hi), &x| (lo.min(x), hi.max(x)));
            LogEstimate {
                method: Method::Knuth,
                seed,
                samples: logs.len() as u64,
                moments: Moments::Knuth {
                    log3_sum: log3_sum_exp(logs.iter().copied()),
                    log3_sum_sq: log3_sum_exp(logs.iter().map(|x| 2.0 * x)),
                    log3_min: lo,
                    log3_max: hi,
                },
                edges: plan.edges,
            }
        })
        .collect();
    pool(&parts)
}

/// Naive acceptance-sampling estimate from the given trial range.
pub fn estimate_naive_trials(g: &Graph, seed: u64, trials: Range<u64>) -> Result<LogEstimate> {
    check_samples(&trials)?;
    let plan = Plan::new(g);
    let streams = TrialStreams::new(seed);
    let parts: Vec<LogEstimate> = chunks(trials)
        .into_par_iter()
        .map(|range| {
            let mut masks = vec![0u8; plan.edges];
            let samples = range.end - range.start;
            let hits = range
                .filter(|&i| plan.naive_trial(&mut streams.trial(i), &mut masks))
                .count() as u64;
            LogEstimate {
                method: Method::Naive,
                seed,
                samples,
                moments: Moments::Naive { hits },
                edges: plan.edges,
            }
        })
        .collect();
    pool(&parts)
}

/// Knuth estimate from trials `0..samples`.
pub fn estimate_knuth(g: &Graph, samples: u64, seed: u64) -> Result<LogEstimate> {
    estimate_knuth_trials(g, seed, 0..samples)
}

/// Naive estimate from trials `0..samples`.
pub fn estimate_naive(g: &Graph, samples: u64, seed: u64) -> Result<LogEstimate> {
    estimate_naive_trials(g, seed, 0..samples)
}
