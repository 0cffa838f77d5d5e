use super::{Graph, Vertex};

/// A triangle `a < b < c` together with the canonical indices of its edges
/// `ab`, `ac`, `bc` (which are increasing in that order).
#[derive(Clone, Copy, Debug, PartialEq, Eq, Hash, PartialOrd, Ord)]
pub struct Triangle {
    pub vertices: [Vertex; 3],
    pub edges: [usize; 3],
}

impl Triangle {
    /// The edge with the largest canonical index, `bc`.
    pub fn closing_edge(&self) -> usize {
        self.edges[2]
    }
}

#[derive(Clone, Debug, PartialEq, Eq)]
pub struct TriangleStats {
    /// `T(G)`.
    pub triangle_count: u64,
    /// `t(G)`: edges lying in at least one triangle.
    pub triangle_edge_count: usize,
    /// Canonical indices of those edges, ascending.
    pub triangle_edges: Vec<usize>,
}

impl TriangleStats {
    pub fn contains_edge(&self, index: usize) -> bool {
        self.triangle_edges.binary_search(&index).is_ok()
    }
}

impl Graph {
    /// Calls `f` for every triangle in lexicographic vertex order.
    ///
    /// For each edge `uv` the common neighbours `w > v` are read off the
    /// intersection of the two bit rows, so the cost is `O(e * n / 64)` plus
    /// output.
    pub fn for_each_triangle(&self, mut f: impl FnMut(Triangle)) {
        for (uv, &(u, v)) in self.edges.iter().enumerate() {
            let (ru, rv) = (self.row(u), self.row(v));
            let start = v as usize + 1;
            let first = start / 64;
            for word in first..self.words {
                let mut common = ru[word] & rv[word];
                if word == first {
                    common &= u64::MAX << (start % 64);
                }
                while common != 0 {
                    let w = (word * 64 + common.trailing_zeros() as usize) as Vertex;
                    common &= common - 1;
                    let uw = self.edge_index(u, w).expect("adjacency and edge list agree");
                    let vw = self.edge_index(v, w).expect("adjacency and edge list agree");
                    f(Triangle {
                        vertices: [u, v, w],
                        edges: [uv, uw, vw],
                    });
                }
            }
        }
    }

    pub fn triangles(&self) -> Vec<Triangle> {
        let mut out = Vec::new();
        self.for_each_triangle(|t| out.push(t));
        out
    }
}

pub fn triangle_stats(g: &Graph) -> TriangleStats {
    let mut in_triangle = vec![false; g.edge_count()];
    let mut triangle_count = 0u64;
    g.for_each_triangle(|t| {
        triangle_count += 1;
        for e in t.edges {
            in_triangle[e] = true;
        }
    });
    let triangle_edges: Vec<usize> = in_triangle
        .iter()
        .enumerate()
        .filter_map(|(i, &b)| b.then_some(i))
        .collect();
    TriangleStats {
        triangle_count,
        triangle_edge_count: triangle_edges.len(),
        triangle_edges,
    }
}

/// `E[T(G(n, p))] = C(n, 3) p^3`.
pub fn expected_triangle_count(n: usize, p: f64) -> f64 {
    if n < 3 {
        return 0.0;
    }
    let n = n as f64;
    n * (n - 1.0) * (n - 2.0) / 6.0 * p * p * p
}
