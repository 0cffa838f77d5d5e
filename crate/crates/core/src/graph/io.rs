//! Plain-text edge lists.
//!
//! ```text
//! n m
//! u v      (m lines, 0 <= u < v < n)
//! ```
//!
//! Every line ends in `\n`. Writers emit edges in canonical order; readers
//! accept any order but reject duplicates, loops, out-of-range vertices and
//! anything that is not exactly two single-space-separated decimals.

use std::fmt::Write;

use super::{pair_count, Graph, Vertex};
use crate::error::{Error, Result};

pub fn save_edge_list(g: &Graph) -> String {
    let mut out = String::with_capacity(16 + g.edge_count() * 10);
    writeln!(out, "{} {}", g.n(), g.edge_count()).unwrap();
    for &(u, v) in g.edges() {
        writeln!(out, "{u} {v}").unwrap();
    }
    out
}

fn parse_pair(line: &str, lineno: usize) -> Result<(usize, usize)> {
    let mut fields = line.split(' ');
    let (Some(a), Some(b), None) = (fields.next(), fields.next(), fields.next()) else {
        return Err(Error::parse(lineno, format!("expected two space-separated integers, got {line:?}")));
    };
    let num = |s: &str| -> Result<usize> {
        if s.is_empty() || !s.bytes().all(|c| c.is_ascii_digit()) {
            return Err(Error::parse(lineno, format!("{s:?} is not a non-negative decimal integer")));
        }
        s.parse()
            .map_err(|_| Error::parse(lineno, format!("{s:?} is out of range")))
    };
    Ok((num(a)?, num(b)?))
}

pub fn load_edge_list(text: &str) -> Result<Graph> {
    let body = text.strip_suffix('\n').unwrap_or(text);
    if body.is_empty() {
        return Err(Error::parse(1, "missing header"));
    }
    let mut lines = body.split('\n');
    let header = lines.next().unwrap_or_default();
    let (n, m) = parse_pair(header, 1)?;
    let pairs = pair_count(n).map_err(|e| Error::parse(1, e.to_string()))?;
    if m > pairs {
        return Err(Error::parse(1, format!("{m} edges cannot fit on {n} vertices")));
    }

    let mut g = Graph::empty(n).map_err(|e| Error::parse(1, e.to_string()))?;
    let mut count = 0;
    for (i, line) in lines.enumerate() {
        let lineno = i + 2;
        if count == m {
            return Err(Error::parse(lineno, format!("header declares {m} edges but more lines follow")));
        }
        let (u, v) = parse_pair(line, lineno)?;
        if u >= n || v >= n {
            return Err(Error::parse(lineno, format!("vertex index out of range for n = {n}")));
        }
        if u == v {
            return Err(Error::parse(lineno, format!("loop at vertex {u}")));
        }
        if u > v {
            return Err(Error::parse(lineno, format!("edge must be written as \"u v\" with u < v, got {u} {v}")));
        }
        let (u, v) = (u as Vertex, v as Vertex);
        if g.has_edge(u, v) {
            return Err(Error::parse(lineno, format!("duplicate edge {u} {v}")));
        }
        g.set(u, v);
        g.edges.push((u, v));
        count += 1;
    }
    if count < m {
        return Err(Error::parse(count + 2, format!("header declares {m} edges but only {count} found")));
    }
    g.edges.sort_unstable();
    Ok(g)
}

#[cfg(test)]
mod tests {
    use super::*;

    fn line_of(err: Error) -> usize {
        match err {
            Error::Parse { line, .. } => line,
            other => panic!("expected a parse error, got {other:?}"),
        }
    }

    #[test]
    fn loads_triangle() {
        let g = load_edge_list("3 3\n0 1\n0 2\n1 2\n").unwrap();
        assert_eq!(g, Graph::complete(3).unwrap());
    }

    #[test]
    fn loads_edgeless() {
        let g = load_edge_list("2 0\n").unwrap();
        assert_eq!(g.n(), 2);
        assert_eq!(g.edge_count(), 0);
    }

    #[test]
    fn accepts_any_edge_order() {
        let g = load_edge_list("3 2\n1 2\n0 1\n").unwrap();
        assert_eq!(g.edges(), &[(0, 1), (1, 2)]);
        assert_eq!(save_edge_list(&g), "3 2\n0 1\n1 2\n");
    }

    #[test]
    fn save_is_canonical() {
        assert_eq!(save_edge_list(&Graph::complete(3).unwrap()), "3 3\n0 1\n0 2\n1 2\n");
        assert_eq!(save_edge_list(&Graph::empty(0).unwrap()), "0 0\n");
    }

    #[test]
    fn rejects_malformed_input_with_line_numbers() {
        assert_eq!(line_of(load_edge_list("3 1\n1 1\n").unwrap_err()), 2);
        assert_eq!(line_of(load_edge_list("3 2\n0 1\n0 1\n").unwrap_err()), 3);
        assert_eq!(line_of(load_edge_list("3 1\n0 3\n").unwrap_err()), 2);
        assert_eq!(line_of(load_edge_list("3 1\n2 1\n").unwrap_err()), 2);
        assert_eq!(line_of(load_edge_list("3\n").unwrap_err()), 1);
        assert_eq!(line_of(load_edge_list("3  1\n0 1\n").unwrap_err()), 1);
        assert_eq!(line_of(load_edge_list("x 1\n0 1\n").unwrap_err()), 1);
        assert_eq!(line_of(load_edge_list("").unwrap_err()), 1);
        assert_eq!(line_of(load_edge_list("3 2\n0 1\n").unwrap_err()), 3);
        assert_eq!(line_of(load_edge_list("3 1\n0 1\n1 2\n").unwrap_err()), 3);
        assert_eq!(line_of(load_edge_list("3 1\n0 1 \n").unwrap_err()), 2);
        assert_eq!(line_of(load_edge_list("3 1\n0 1\r\n").unwrap_err()), 2);
        assert_eq!(line_of(load_edge_list("3 4\n").unwrap_err()), 1);
        assert_eq!(line_of(load_edge_list("3 1\n\n").unwrap_err()), 2);
    }
}
