use super::{colour_bit, RAINBOW};
use crate::error::{Error, Result};
use crate::graph::Graph;

/// Colour value in `1..=3`.
pub type Colour = u8;

/// Edge colouring indexed by canonical edge order.
#[derive(Clone, Debug, PartialEq, Eq, Hash, PartialOrd, Ord)]
pub struct Colouring(Vec<Colour>);

impl Colouring {
    pub fn new(values: Vec<Colour>) -> Result<Self> {
        if let Some(bad) = values.iter().find(|c| !(1..=3).contains(*c)) {
            return Err(Error::InvalidArgument(format!("colour {bad} is outside 1..=3")));
        }
        Ok(Colouring(values))
    }

    pub(crate) fn from_raw(values: Vec<Colour>) -> Self {
        debug_assert!(values.iter().all(|c| (1..=3).contains(c)));
        Colouring(values)
    }

    pub fn values(&self) -> &[Colour] {
        &self.0
    }

    pub fn len(&self) -> usize {
        self.0.len()
    }

    pub fn is_empty(&self) -> bool {
        self.0.is_empty()
    }

    /// Canonical indices of the edges with colour `c`.
    pub fn colour_class(&self, c: Colour) -> impl Iterator<Item = usize> + '_ {
        self.0.iter().enumerate().filter(move |&(_, &x)| x == c).map(|(i, _)| i)
    }
}

/// True iff no triangle of `g` sees three distinct colours under `c`.
pub fn is_gallai(g: &Graph, c: &Colouring) -> Result<bool> {
    if c.len() != g.edge_count() {
        return Err(Error::InvalidArgument(format!(
            "colouring has {} entries but the graph has {} edges",
            c.len(),
            g.edge_count()
        )));
    }
    let v = c.values();
    let mut ok = true;
    g.for_each_triangle(|t| {
        let [a, b, d] = t.edges;
        if colour_bit(v[a]) | colour_bit(v[b]) | colour_bit(v[d]) == RAINBOW {
            ok = false;
        }
    });
    Ok(ok)
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn triangle_examples() {
        let k3 = Graph::complete(3).unwrap();
        assert!(!is_gallai(&k3, &Colouring::new(vec![1, 2, 3]).unwrap()).unwrap());
        assert!(is_gallai(&k3, &Colouring::new(vec![1, 1, 2]).unwrap()).unwrap());
    }

    #[test]
    fn triangle_free_always_gallai() {
        let c4 = Graph::from_edges(4, [(0, 1), (1, 2), (2, 3), (0, 3)]).unwrap();
        for a in 1..=3 {
            for b in 1..=3 {
                let c = Colouring::new(vec![a, b, 3, 1]).unwrap();
                assert!(is_gallai(&c4, &c).unwrap());
            }
        }
    }

    #[test]
    fn rejects_bad_input() {
        let k3 = Graph::complete(3).unwrap();
        assert!(Colouring::new(vec![0, 1, 2]).is_err());
        assert!(Colouring::new(vec![4]).is_err());
        let short = Colouring::new(vec![1, 2]).unwrap();
        assert!(matches!(is_gallai(&k3, &short), Err(Error::InvalidArgument(_))));
    }

    #[test]
    fn colour_classes_partition_edges() {
        let c = Colouring::new(vec![2, 1, 2, 3]).unwrap();
        assert_eq!(c.colour_class(2).collect::<Vec<_>>(), vec![0, 2]);
        assert_eq!(c.colour_class(1).count() + c.colour_class(2).count() + c.colour_class(3).count(), 4);
    }
}
