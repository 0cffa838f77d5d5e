//! Exact counting by triangle-component factoring and backtracking.
//!
//! An edge in no triangle is unconstrained and contributes a factor 3. The
//! remaining edges split into triangle-components: two triangle edges are in
//! the same component iff a chain of triangles, consecutive ones sharing an
//! edge, joins them. Every rainbow constraint lives inside a single triangle,
//! and all three edges of a triangle lie in one component, so colourings of
//! different components are independent and their counts multiply.
//!
//! Inside a component edges are assigned in canonical order. A triangle is
//! checked when its last edge (`bc`) is assigned: if `ab` and `ac` carry two
//! distinct colours the closing edge must reuse one of them, otherwise it is
//! free. Each completed assignment is a Gallai colouring of the component.

use super::{colour_bit, BigCount};
use crate::graph::{triangle_stats, Graph};

pub const DEFAULT_NODE_CAP: u64 = 1_000_000_000;

#[derive(Clone, Debug, PartialEq, Eq)]
pub struct CountReport {
    /// `None` iff `capped`.
    pub count: Option<BigCount>,
    /// `e(G) - t(G)`.
    pub free_edge_count: usize,
    pub component_count: usize,
    /// Search-tree nodes visited, excluding roots; leaves included.
    pub nodes_explored: u64,
    pub capped: bool,
    /// Per-component Gallai counts, in order of each component's first edge.
    pub component_counts: Vec<u64>,
}

impl CountReport {
    /// `log3` of the count, assembled from the factorisation so that
    /// triangle-free graphs give exactly `e(G)`.
    pub fn log3_count(&self) -> Option<f64> {
        if self.capped {
            return None;
        }
        let ln3 = 3f64.ln();
        Some(
            self.free_edge_count as f64
                + self.component_counts.iter().map(|&c| (c as f64).ln() / ln3).sum::<f64>(),
        )
    }
}

/// Triangle-components as ascending lists of canonical edge indices, ordered
/// by smallest edge.
pub fn triangle_components(g: &Graph) -> Vec<Vec<usize>> {
    let mut parent: Vec<usize> = (0..g.edge_count()).collect();
    fn find(parent: &mut [usize], mut x: usize) -> usize {
        while parent[x] != x {
            parent[x] = parent[parent[x]];
            x = parent[x];
        }
        x
    }
    let mut in_triangle = vec![false; g.edge_count()];
    g.for_each_triangle(|t| {
        let [a, b, c] = t.edges;
        for e in t.edges {
            in_triangle[e] = true;
        }
        for (x, y) in [(a, b), (a, c)] {
            let (rx, ry) = (find(&mut parent, x), find(&mut parent, y));
            if rx != ry {
                parent[rx.max(ry)] = rx.min(ry);
            }
        }
    });

    let mut slot = vec![usize::MAX; g.edge_count()];
    let mut components: Vec<Vec<usize>> = Vec::new();
    for e in 0..g.edge_count() {
        if !in_triangle[e] {
            continue;
        }
        let root = find(&mut parent, e);
        if slot[root] == usize::MAX {
            slot[root] = components.len();
            components.push(Vec::new());
        }
        components[slot[root]].push(e);
    }
    components
}

/// Backtracking state for one component. Edges are renumbered `0..len` in
/// canonical order; `closing[i]` lists the two earlier edges of every
/// triangle whose last edge is `i`.
struct Search<'a> {
    closing: &'a [Vec<(u32, u32)>],
    masks: Vec<u8>,
    leaves: u64,
    nodes: u64,
    cap: u64,
}

struct Capped;

impl Search<'_> {
    fn allowed(&self, i: usize) -> u8 {
        let mut allowed = 0b111;
        for &(a, b) in &self.closing[i] {
            let (ma, mb) = (self.masks[a as usize], self.masks[b as usize]);
            if ma != mb {
                allowed &= ma | mb;
            }
        }
        allowed
    }

    fn descend(&mut self, depth: usize) -> Result<(), Capped> {
        let allowed = self.allowed(depth);
        if depth + 1 == self.masks.len() {
            let k = allowed.count_ones() as u64;
            self.nodes += k;
            self.leaves += k;
            return if self.nodes > self.cap { Err(Capped) } else { Ok(()) };
        }
        for c in 1..=3 {
            let bit = colour_bit(c);
            if allowed & bit == 0 {
                continue;
            }
            self.nodes += 1;
            if self.nodes > self.cap {
                return Err(Capped);
            }
            self.masks[depth] = bit;
            self.descend(depth + 1)?;
        }
        Ok(())
    }
}

/// Counts Gallai 3-colourings of `g` exactly, visiting at most `node_cap`
/// search nodes in total.
pub fn count_exact(g: &Graph, node_cap: u64) -> CountReport {
    let components = triangle_components(g);
    let free_edge_count = g.edge_count() - components.iter().map(Vec::len).sum::<usize>();

    // (component, local index) of every triangle edge.
    let mut locate = vec![(usize::MAX, 0u32); g.edge_count()];
    for (ci, comp) in components.iter().enumerate() {
        for (li, &e) in comp.iter().enumerate() {
            locate[e] = (ci, li as u32);
        }
    }
    let mut closing: Vec<Vec<Vec<(u32, u32)>>> =
        components.iter().map(|c| vec![Vec::new(); c.len()]).collect();
    g.for_each_triangle(|t| {
        let [a, b, c] = t.edges;
        let (ci, lc) = locate[c];
        closing[ci][lc as usize].push((locate[a].1, locate[b].1));
    });

    let mut report = CountReport {
        count: None,
        free_edge_count,
        component_count: components.len(),
        nodes_explored: 0,
        capped: false,
        component_counts: Vec::with_capacity(components.len()),
    };
    let mut count = BigCount::pow3_pow2(free_edge_count as u64, 0);
    for closing in &closing {
        let mut search = Search {
            closing,
            masks: vec![0; closing.len()],
            leaves: 0,
            nodes: report.nodes_explored,
            cap: node_cap,
        };
        let outcome = search.descend(0);
        report.nodes_explored = search.nodes;
        if outcome.is_err() {
            report.capped = true;
            report.component_counts.clear();
            return report;
        }
        report.component_counts.push(search.leaves);
        count = count * search.leaves;
    }
    debug_assert_eq!(
        free_edge_count,
        g.edge_count() - triangle_stats(g).triangle_edge_count
    );
    report.count = Some(count);
    report
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::gallai::count_bruteforce;
    use crate::graph::generate_gnp;

    fn exact(g: &Graph) -> CountReport {
        count_exact(g, DEFAULT_NODE_CAP)
    }

    #[test]
    fn path_is_unconstrained() {
        let p3 = Graph::from_edges(3, [(0, 1), (1, 2)]).unwrap();
        let r = exact(&p3);
        assert_eq!(r.count, Some(BigCount::from(9)));
        assert_eq!((r.free_edge_count, r.component_count, r.capped), (2, 0, false));
        assert_eq!(r.log3_count(), Some(2.0));
    }

    #[test]
    fn complete_graph_anchors() {
        let r = exact(&Graph::complete(3).unwrap());
        assert_eq!(r.count, Some(BigCount::from(21)));
        assert_eq!((r.free_edge_count, r.component_count), (0, 1));
        // Independently enumerated: K4 279, K4 minus an edge 147, K5 6129.
        assert_eq!(exact(&Graph::complete(4).unwrap()).count, Some(BigCount::from(279)));
        let k4_minus = Graph::from_edges(4, [(0, 1), (0, 2), (0, 3), (1, 2), (1, 3)]).unwrap();
        assert_eq!(exact(&k4_minus).count, Some(BigCount::from(147)));
        assert_eq!(exact(&Graph::complete(5).unwrap()).count, Some(BigCount::from(6129)));
    }

    #[test]
    fn empty_graph_counts_one() {
        let r = exact(&Graph::empty(5).unwrap());
        assert_eq!(r.count, Some(BigCount::one()));
        assert_eq!(r.nodes_explored, 0);
        assert_eq!(r.log3_count(), Some(0.0));
    }

    #[test]
    fn triangles_sharing_only_a_vertex_are_separate_components() {
        // Bowtie: two triangles through vertex 2.
        let g = Graph::from_edges(5, [(0, 1), (0, 2), (1, 2), (2, 3), (2, 4), (3, 4)]).unwrap();
        let r = exact(&g);
        assert_eq!(r.component_count, 2);
        assert_eq!(r.component_counts, vec![21, 21]);
        assert_eq!(r.count, Some(BigCount::from(441)));
    }

    #[test]
    fn components_cover_triangle_edges() {
        let g = generate_gnp(25, 0.3, 11).unwrap();
        let comps = triangle_components(&g);
        let mut all: Vec<usize> = comps.concat();
        all.sort_unstable();
        assert_eq!(all, triangle_stats(&g).triangle_edges);
        for t in g.triangles() {
            let owner = comps.iter().position(|c| c.contains(&t.edges[0])).unwrap();
            assert!(t.edges.iter().all(|e| comps[owner].contains(e)));
        }
    }

    #[test]
    fn cap_is_reported_in_band() {
        let r = count_exact(&Graph::complete(5).unwrap(), 10);
        assert!(r.capped);
        assert_eq!(r.count, None);
        assert_eq!(r.log3_count(), None);
        assert!(r.nodes_explored > 10);
    }

    #[test]
    fn matches_bruteforce_on_random_graphs() {
        for seed in 0..60u64 {
            let g = generate_gnp(5 + (seed % 2) as usize, 0.7, seed).unwrap();
            assert_eq!(exact(&g).count.unwrap(), count_bruteforce(&g).unwrap(), "seed {seed}");
        }
    }
}
