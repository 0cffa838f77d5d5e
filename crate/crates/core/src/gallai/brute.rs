use super::{BigCount, RAINBOW};
use crate::error::{Error, Result};
use crate::graph::Graph;

/// Largest edge count the brute-force oracle accepts by default.
pub const DEFAULT_BRUTEFORCE_CAP: usize = 18;

/// Counts Gallai colourings by checking all `3^e` colourings.
pub fn count_bruteforce(g: &Graph) -> Result<BigCount> {
    count_bruteforce_capped(g, DEFAULT_BRUTEFORCE_CAP)
}

pub fn count_bruteforce_capped(g: &Graph, max_edges: usize) -> Result<BigCount> {
    let e = g.edge_count();
    if e > max_edges {
        return Err(Error::Capacity(format!(
            "brute force needs 3^{e} colourings; the cap is {max_edges} edges"
        )));
    }
    if e > 40 {
        return Err(Error::Capacity(format!("3^{e} colourings do not fit a 64-bit counter")));
    }
    let triangles: Vec<[usize; 3]> = g.triangles().into_iter().map(|t| t.edges).collect();

    // Odometer over colour masks 0b001, 0b010, 0b100; digit 0 varies fastest.
    let mut masks = vec![1u8; e];
    let mut count = 0u64;
    loop {
        if triangles
            .iter()
            .all(|&[a, b, c]| masks[a] | masks[b] | masks[c] != RAINBOW)
        {
            count += 1;
        }
        let mut i = 0;
        loop {
            if i == e {
                return Ok(BigCount::from(count));
            }
            if masks[i] == 0b100 {
                masks[i] = 1;
                i += 1;
            } else {
                masks[i] <<= 1;
                break;
            }
        }
    }
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn small_anchors() {
        assert_eq!(count_bruteforce(&Graph::empty(4).unwrap()).unwrap(), BigCount::from(1));
        let edge = Graph::from_edges(2, [(0, 1)]).unwrap();
        assert_eq!(count_bruteforce(&edge).unwrap(), BigCount::from(3));
        // 27 colourings minus the 3! rainbow ones.
        assert_eq!(count_bruteforce(&Graph::complete(3).unwrap()).unwrap(), BigCount::from(21));
    }

    #[test]
    fn cap_is_enforced() {
        let k7 = Graph::complete(7).unwrap();
        assert!(matches!(count_bruteforce(&k7), Err(Error::Capacity(_))));
        let k4 = Graph::complete(4).unwrap();
        assert!(matches!(count_bruteforce_capped(&k4, 5), Err(Error::Capacity(_))));
    }
}
