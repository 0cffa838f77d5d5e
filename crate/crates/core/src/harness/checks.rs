//! Seed-by-seed concentration checks on `G(n, p)` statistics.

use rayon::prelude::*;

use super::config::threshold_probability;
use crate::error::{Error, Result};
use crate::graph::{expected_triangle_count, generate_gnp, pair_count, triangle_stats, Graph, TriangleStats};

const LOG3_2: f64 = 0.630_929_753_571_457_4;

#[derive(Clone, Debug, PartialEq)]
pub struct ConcentrationReport {
    pub statistic: String,
    pub values: Vec<f64>,
    pub mean: f64,
    /// Unbiased sample variance; zero with fewer than two seeds.
    pub variance: f64,
    /// Theoretical value the statistic is compared against.
    pub reference: f64,
    pub xi: Option<f64>,
    /// Fraction of seeds satisfying the check's per-seed condition.
    pub pass_fraction: f64,
    pub warnings: Vec<String>,
}

impl ConcentrationReport {
    fn new(statistic: &str, values: Vec<f64>, reference: f64, xi: Option<f64>, passes: usize) -> Self {
        let k = values.len() as f64;
        let mean = if values.is_empty() { 0.0 } else { values.iter().sum::<f64>() / k };
        let variance = if values.len() < 2 {
            0.0
        } else {
            values.iter().map(|v| (v - mean).powi(2)).sum::<f64>() / (k - 1.0)
        };
        ConcentrationReport {
            statistic: statistic.to_string(),
            pass_fraction: if values.is_empty() { 1.0 } else { passes as f64 / k },
            values,
            mean,
            variance,
            reference,
            xi,
            warnings: Vec::new(),
        }
    }

    /// `1 - pass_fraction`.
    pub fn fail_fraction(&self) -> f64 {
        1.0 - self.pass_fraction
    }

    /// Standard error of the mean across seeds.
    pub fn standard_error(&self) -> f64 {
        (self.variance / self.values.len().max(1) as f64).sqrt()
    }
}

fn sample(n: usize, p: f64, seeds: &[u64]) -> Result<Vec<(Graph, TriangleStats)>> {
    if !(0.0..=1.0).contains(&p) {
        return Err(Error::InvalidParameter(format!("edge probability {p} is outside [0, 1]")));
    }
    seeds
        .par_iter()
        .map(|&s| {
            let g = generate_gnp(n, p, s)?;
            let stats = triangle_stats(&g);
            Ok((g, stats))
        })
        .collect()
}

fn check_xi(xi: f64) -> Result<()> {
    if xi > 0.0 && xi.is_finite() {
        Ok(())
    } else {
        Err(Error::InvalidParameter(format!("tolerance xi = {xi} must be positive")))
    }
}

/// Per-seed outcome of [`lower_regime_check`] beyond the `t` statistic.
#[derive(Clone, Debug, PartialEq)]
pub struct LowerRegimeReport {
    /// `t(G)` per seed; `reference` is the variance bound `(n^4 p^5 + n^3 p^3)^2`
    /// and a seed passes when both `t <= 3T` and `t <= 12 p^2 n e` hold.
    pub report: ConcentrationReport,
    pub edges: Vec<usize>,
    pub triangles: Vec<u64>,
    /// Seeds with `t > 3T`.
    pub three_t_violations: usize,
    /// Seeds with `t > 12 p^2 n e`.
    pub density_violations: usize,
    /// Lower-bound exponent `1 - (t / e)(1 - log3 2)` per seed (`1` when `e = 0`).
    pub exponents: Vec<f64>,
}

impl LowerRegimeReport {
    pub fn variance_within_bound(&self) -> bool {
        self.report.variance <= self.report.reference
    }
}

pub fn lower_regime_check(n: usize, c: f64, seeds: &[u64]) -> Result<LowerRegimeReport> {
    let p = threshold_probability(n, c);
    if !(c > 0.0) || p > 1.0 {
        return Err(Error::InvalidParameter(format!("c = {c} gives p = {p} outside (0, 1]")));
    }
    let runs = sample(n, p, seeds)?;
    let nf = n as f64;
    let bound = (nf.powi(4) * p.powi(5) + nf.powi(3) * p.powi(3)).powi(2);

    let mut three_t = 0;
    let mut density = 0;
    let mut passes = 0;
    let mut exponents = Vec::with_capacity(runs.len());
    for (g, s) in &runs {
        let t = s.triangle_edge_count as f64;
        let e = g.edge_count() as f64;
        let ok_three = t <= 3.0 * s.triangle_count as f64;
        let ok_density = t <= 12.0 * p * p * nf * e;
        three_t += usize::from(!ok_three);
        density += usize::from(!ok_density);
        passes += usize::from(ok_three && ok_density);
        exponents.push(if e == 0.0 { 1.0 } else { 1.0 - t / e * (1.0 - LOG3_2) });
    }
    let values = runs.iter().map(|(_, s)| s.triangle_edge_count as f64).collect();
    Ok(LowerRegimeReport {
        report: ConcentrationReport::new("t", values, bound, None, passes),
        edges: runs.iter().map(|(g, _)| g.edge_count()).collect(),
        triangles: runs.iter().map(|(_, s)| s.triangle_count).collect(),
        three_t_violations: three_t,
        density_violations: density,
        exponents,
    })
}

/// Fraction of seeds with `T <= (1 + xi) E[T]` (`pass_fraction`); the upper
/// tail is `fail_fraction`.
pub fn triangle_tail_check(n: usize, p: f64, seeds: &[u64], xi: f64) -> Result<ConcentrationReport> {
    check_xi(xi)?;
    let runs = sample(n, p, seeds)?;
    let mean = expected_triangle_count(n, p);
    let threshold = (1.0 + xi) * mean;
    let values: Vec<f64> = runs.iter().map(|(_, s)| s.triangle_count as f64).collect();
    let passes = values.iter().filter(|&&v| v <= threshold).count();
    let mut report = ConcentrationReport::new("T", values, mean, Some(xi), passes);
    if p <= 1.0 / n as f64 {
        report
            .warnings
            .push(format!("p = {p} <= 1/n: outside the regime of the triangle upper-tail bound"));
    }
    Ok(report)
}

/// Fraction of seeds with `|e - C(n,2) p| <= xi C(n,2) p`.
pub fn edge_concentration_check(n: usize, p: f64, seeds: &[u64], xi: f64) -> Result<ConcentrationReport> {
    check_xi(xi)?;
    let runs = sample(n, p, seeds)?;
    let mean = pair_count(n)? as f64 * p;
    let values: Vec<f64> = runs.iter().map(|(g, _)| g.edge_count() as f64).collect();
    let passes = values.iter().filter(|&&v| (v - mean).abs() <= xi * mean).count();
    let mut report = ConcentrationReport::new("e", values, mean, Some(xi), passes);
    if mean < 10.0 / (xi * xi) {
        report.warnings.push(format!(
            "C(n,2) p = {mean} is below 10 / xi^2 = {}: concentration is not expected",
            10.0 / (xi * xi)
        ));
    }
    Ok(report)
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn lower_regime_on_triangle_free_outcomes() {
        // n = 10, c = 0.05: p ~ 0.016, almost surely no triangles.
        let r = lower_regime_check(10, 0.05, &(0..20).collect::<Vec<_>>()).unwrap();
        for (i, &t) in r.report.values.iter().enumerate() {
            if t == 0.0 {
                assert_eq!(r.exponents[i], 1.0);
            }
        }
        assert_eq!(r.three_t_violations, 0);
    }

    #[test]
    fn lower_regime_never_violates_three_t() {
        let r = lower_regime_check(60, 1.0, &(0..100).collect::<Vec<_>>()).unwrap();
        assert_eq!(r.three_t_violations, 0);
        assert_eq!(r.report.values.len(), 100);
        assert!(r.variance_within_bound());
        assert!(r.exponents.iter().all(|&x| x <= 1.0 && x >= LOG3_2));
    }

    #[test]
    fn complete_graph_tail_is_empty() {
        let r = triangle_tail_check(12, 1.0, &[1, 2, 3], 0.5).unwrap();
        assert_eq!(r.fail_fraction(), 0.0);
        assert_eq!(r.values, vec![220.0; 3]);
        assert!(r.warnings.is_empty());
    }

    #[test]
    fn tail_check_warns_below_regime() {
        let r = triangle_tail_check(50, 0.01, &[1], 1.0).unwrap();
        assert_eq!(r.warnings.len(), 1);
        assert!(triangle_tail_check(50, 0.1, &[1], 0.0).is_err());
    }

    #[test]
    fn large_xi_has_no_tail() {
        let r = triangle_tail_check(60, 0.1, &(0..50).collect::<Vec<_>>(), 10.0).unwrap();
        assert_eq!(r.fail_fraction(), 0.0);
    }

    #[test]
    fn edge_concentration_extremes() {
        let full = edge_concentration_check(20, 1.0, &[0, 1], 0.1).unwrap();
        assert_eq!(full.pass_fraction, 1.0);
        let none = edge_concentration_check(20, 0.0, &[0, 1], 0.1).unwrap();
        assert_eq!(none.pass_fraction, 1.0);
        assert_eq!(none.warnings.len(), 1);
    }
}
