use std::collections::BTreeMap;
use std::fmt;
use std::str::FromStr;

use crate::error::{Error, Result};
use crate::gallai::DEFAULT_NODE_CAP;

pub const DEFAULT_SAMPLES: u64 = 10_000;

#[derive(Clone, Copy, Debug, PartialEq, Eq, Hash)]
pub enum SweepMethod {
    Auto,
    Exact,
    Naive,
    Knuth,
}

impl fmt::Display for SweepMethod {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.write_str(match self {
            SweepMethod::Auto => "auto",
            SweepMethod::Exact => "exact",
            SweepMethod::Naive => "naive",
            SweepMethod::Knuth => "knuth",
        })
    }
}

impl FromStr for SweepMethod {
    type Err = Error;

    fn from_str(s: &str) -> Result<Self> {
        match s {
            "auto" => Ok(SweepMethod::Auto),
            "exact" => Ok(SweepMethod::Exact),
            "naive" => Ok(SweepMethod::Naive),
            "knuth" => Ok(SweepMethod::Knuth),
            _ => Err(Error::Config(format!("unknown method {s:?}"))),
        }
    }
}

/// One sweep: every `(n, c, seed)` combination becomes a record.
///
/// The text form is one `key = value` per line; lists are comma-separated and
/// `seeds` also accepts half-open ranges `a..b`. `#` starts a comment.
///
/// ```text
/// n_values = 50, 100
/// c_values = 0.1, 0.5, 1.0
/// seeds = 0..20
/// method = auto        # optional, default auto
/// samples = 10000      # optional
/// node_cap = 1000000000  # optional
/// ```
#[derive(Clone, Debug, PartialEq)]
pub struct SweepConfig {
    pub n_values: Vec<usize>,
    pub c_values: Vec<f64>,
    pub seeds: Vec<u64>,
    pub method: SweepMethod,
    pub samples: u64,
    pub node_cap: u64,
}

/// `p = c / sqrt(n)`.
pub fn threshold_probability(n: usize, c: f64) -> f64 {
    c / (n as f64).sqrt()
}

fn parse_list<T: FromStr>(key: &str, value: &str) -> Result<Vec<T>> {
    value
        .split(',')
        .map(str::trim)
        .map(|item| {
            item.parse()
                .map_err(|_| Error::Config(format!("{key}: cannot parse {item:?}")))
        })
        .collect()
}

fn parse_seeds(value: &str) -> Result<Vec<u64>> {
    let mut seeds = Vec::new();
    for item in value.split(',').map(str::trim) {
        let bad = || Error::Config(format!("seeds: cannot parse {item:?}"));
        if let Some((a, b)) = item.split_once("..") {
            let a: u64 = a.trim().parse().map_err(|_| bad())?;
            let b: u64 = b.trim().parse().map_err(|_| bad())?;
            if a >= b {
                return Err(Error::Config(format!("seeds: empty range {item:?}")));
            }
            seeds.extend(a..b);
        } else {
            seeds.push(item.parse().map_err(|_| bad())?);
        }
    }
    Ok(seeds)
}

fn parse_scalar<T: FromStr>(key: &str, value: &str) -> Result<T> {
    value
        .parse()
        .map_err(|_| Error::Config(format!("{key}: cannot parse {value:?}")))
}

impl SweepConfig {
    pub fn new(n_values: Vec<usize>, c_values: Vec<f64>, seeds: Vec<u64>, method: SweepMethod) -> Self {
        SweepConfig {
            n_values,
            c_values,
            seeds,
            method,
            samples: DEFAULT_SAMPLES,
            node_cap: DEFAULT_NODE_CAP,
        }
    }

    pub fn parse(text: &str) -> Result<Self> {
        let mut fields = BTreeMap::new();
        for (i, raw) in text.lines().enumerate() {
            let line = raw.split('#').next().unwrap_or_default().trim();
            if line.is_empty() {
                continue;
            }
            let (key, value) = line
                .split_once('=')
                .ok_or_else(|| Error::Config(format!("line {}: expected key = value", i + 1)))?;
            let (key, value) = (key.trim(), value.trim());
            if fields.insert(key.to_string(), value.to_string()).is_some() {
                return Err(Error::Config(format!("line {}: duplicate key {key:?}", i + 1)));
            }
        }

        let mut take = |key: &str| fields.remove(key);
        let required = |v: Option<String>, key: &str| {
            v.ok_or_else(|| Error::Config(format!("missing required key {key:?}")))
        };
        let n_values = parse_list("n_values", &required(take("n_values"), "n_values")?)?;
        let c_values = parse_list("c_values", &required(take("c_values"), "c_values")?)?;
        let seeds = parse_seeds(&required(take("seeds"), "seeds")?)?;
        let method = take("method").map_or(Ok(SweepMethod::Auto), |v| v.parse())?;
        let samples = take("samples").map_or(Ok(DEFAULT_SAMPLES), |v| parse_scalar("samples", &v))?;
        let node_cap = take("node_cap").map_or(Ok(DEFAULT_NODE_CAP), |v| parse_scalar("node_cap", &v))?;
        if let Some(key) = fields.keys().next() {
            return Err(Error::Config(format!("unknown key {key:?}")));
        }

        let cfg = SweepConfig {
            n_values,
            c_values,
            seeds,
            method,
            samples,
            node_cap,
        };
        cfg.validate()?;
        Ok(cfg)
    }

    /// Rejects empty lists, non-positive `c`, zero samples and any `(n, c)`
    /// with `c / sqrt(n) > 1`. Graphs with fewer than two vertices have no
    /// pairs, so their `p` is not checked.
    pub fn validate(&self) -> Result<()> {
        if self.n_values.is_empty() || self.c_values.is_empty() || self.seeds.is_empty() {
            return Err(Error::Config("n_values, c_values and seeds must be non-empty".into()));
        }
        if let Some(c) = self.c_values.iter().find(|c| !(**c > 0.0 && c.is_finite())) {
            return Err(Error::Config(format!("threshold multiplier {c} must be positive")));
        }
        if self.samples == 0 {
            return Err(Error::Config("samples must be at least 1".into()));
        }
        for &n in self.n_values.iter().filter(|&&n| n >= 2) {
            for &c in &self.c_values {
                let p = threshold_probability(n, c);
                if p > 1.0 {
                    return Err(Error::Config(format!("n = {n}, c = {c} gives p = {p} > 1")));
                }
            }
        }
        Ok(())
    }

    pub fn to_text(&self) -> String {
        let join = |v: Vec<String>| v.join(", ");
        format!(
            "n_values = {}\nc_values = {}\nseeds = {}\nmethod = {}\nsamples = {}\nnode_cap = {}\n",
            join(self.n_values.iter().map(ToString::to_string).collect()),
            join(self.c_values.iter().map(|c| format!("{c:?}")).collect()),
            join(self.seeds.iter().map(ToString::to_string).collect()),
            self.method,
            self.samples,
            self.node_cap,
        )
    }
}
