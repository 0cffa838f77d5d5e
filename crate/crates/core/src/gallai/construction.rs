//! The two-colour lower-bound family and the Gallai weight function.
//!
//! Fixing two colours for every edge that lies in a triangle, and letting the
//! other edges take any colour, never produces a rainbow triangle. The family
//! has `3^(e - t) * 2^t` members, which is therefore a lower bound on the
//! number of Gallai colourings.

use super::{BigCount, Colour, Colouring};
use crate::error::{Error, Result};
use crate::graph::{triangle_stats, Graph};

/// `3^(e - t) * 2^t`, from the triangle statistics of `g`.
pub fn construction_count(g: &Graph) -> BigCount {
    let t = triangle_stats(g).triangle_edge_count as u64;
    BigCount::pow3_pow2(g.edge_count() as u64 - t, t)
}

/// Product over edges of 2 (edge in a triangle) or 3 (otherwise).
///
/// Triangle membership is decided per edge from the endpoints' common
/// neighbourhood, independently of [`triangle_stats`].
pub fn gallai_weight(g: &Graph) -> BigCount {
    let (mut threes, mut twos) = (0u64, 0u64);
    for &(u, v) in g.edges() {
        let shared = g.row(u).iter().zip(g.row(v)).any(|(a, b)| a & b != 0);
        if shared {
            twos += 1;
        } else {
            threes += 1;
        }
    }
    BigCount::pow3_pow2(threes, twos)
}

/// Unordered pair of distinct colours.
#[derive(Clone, Copy, Debug, PartialEq, Eq, Hash)]
pub struct ColourPair(Colour, Colour);

impl ColourPair {
    pub fn new(a: Colour, b: Colour) -> Result<Self> {
        if !(1..=3).contains(&a) || !(1..=3).contains(&b) || a == b {
            return Err(Error::InvalidArgument(format!(
                "{{{a}, {b}}} is not a pair of distinct colours from 1..=3"
            )));
        }
        Ok(ColourPair(a.min(b), a.max(b)))
    }

    pub fn colours(self) -> [Colour; 2] {
        [self.0, self.1]
    }
}

/// Iterator over the construction family for one colour pair.
pub struct ConstructionIter {
    /// Whether each edge is restricted to the pair.
    paired: Vec<bool>,
    pair: [Colour; 2],
    digits: Vec<u8>,
    done: bool,
}

impl ConstructionIter {
    fn option(&self, i: usize) -> Colour {
        if self.paired[i] {
            self.pair[self.digits[i] as usize]
        } else {
            self.digits[i] + 1
        }
    }

    fn width(&self, i: usize) -> u8 {
        if self.paired[i] {
            2
        } else {
            3
        }
    }
}

impl Iterator for ConstructionIter {
    type Item = Colouring;

    fn next(&mut self) -> Option<Colouring> {
        if self.done {
            return None;
        }
        let item = Colouring::from_raw((0..self.digits.len()).map(|i| self.option(i)).collect());
        let mut i = 0;
        loop {
            if i == self.digits.len() {
                self.done = true;
                break;
            }
            if self.digits[i] + 1 == self.width(i) {
                self.digits[i] = 0;
                i += 1;
            } else {
                self.digits[i] += 1;
                break;
            }
        }
        Some(item)
    }
}

/// Every colouring with triangle edges in `pair` and other edges arbitrary.
pub fn construction_enumerate(g: &Graph, pair: ColourPair) -> ConstructionIter {
    let stats = triangle_stats(g);
    ConstructionIter {
        paired: (0..g.edge_count()).map(|i| stats.contains_edge(i)).collect(),
        pair: pair.colours(),
        digits: vec![0; g.edge_count()],
        done: false,
    }
}
