//! Built-in invariant suite run by `gallai verify`. Each check is small enough
//! to finish in seconds; the full acceptance suite lives in the test tree.

use crate::estimate::estimate_knuth;
use crate::gallai::{
    construction_count, count_bruteforce, count_exact, gallai_weight, BigCount, DEFAULT_NODE_CAP,
};
use crate::graph::{generate_gnp, load_edge_list, save_edge_list, triangle_stats, Graph, Vertex};
use crate::harness::entropy::entropy_binomial_bound_check;

#[derive(Clone, Debug, PartialEq, Eq)]
pub struct VerifyCheck {
    pub name: &'static str,
    pub passed: bool,
    pub detail: String,
}

fn check(name: &'static str, failures: Vec<String>, total: usize) -> VerifyCheck {
    VerifyCheck {
        name,
        passed: failures.is_empty(),
        detail: match failures.first() {
            None => format!("{total} cases"),
            Some(first) => format!("{} of {total} cases failed; first: {first}", failures.len()),
        },
    }
}

fn small_graphs(count: u64) -> impl Iterator<Item = (u64, Graph)> {
    (0..count).map(|seed| {
        let n = 3 + (seed % 4) as usize;
        let p = [0.3, 0.6, 0.9][(seed % 3) as usize];
        (seed, generate_gnp(n, p, seed).expect("valid parameters"))
    })
}

fn triple_loop_triangles(g: &Graph) -> u64 {
    let n = g.n() as Vertex;
    let mut count = 0;
    for a in 0..n {
        for b in a + 1..n {
            for c in b + 1..n {
                count += u64::from(g.has_edge(a, b) && g.has_edge(a, c) && g.has_edge(b, c));
            }
        }
    }
    count
}

pub fn run_verify() -> Vec<VerifyCheck> {
    let mut out = Vec::new();

    let mut failures = Vec::new();
    let mut sandwich = Vec::new();
    for (seed, g) in small_graphs(90) {
        let oracle = count_bruteforce(&g).expect("within the oracle cap");
        let exact = count_exact(&g, DEFAULT_NODE_CAP).count;
        if exact.as_ref() != Some(&oracle) {
            failures.push(format!("seed {seed}: exact {exact:?} vs oracle {oracle}"));
        }
        let e = g.edge_count() as u32;
        if !(BigCount::pow(2, e) <= oracle && oracle <= BigCount::pow(3, e) && construction_count(&g) <= oracle) {
            sandwich.push(format!("seed {seed}: count {oracle} with e = {e}"));
        }
    }
    out.push(check("exact counter matches brute force", failures, 90));
    out.push(check("2^e <= construction <= count <= 3^e", sandwich, 90));

    let mut failures = Vec::new();
    let pairs: Vec<(Vertex, Vertex)> = (0..5).flat_map(|u| (u + 1..5).map(move |v| (u, v))).collect();
    for mask in 0u32..1 << pairs.len() {
        let g = Graph::from_edges(5, pairs.iter().enumerate().filter(|(i, _)| mask >> i & 1 == 1).map(|(_, &e)| e))
            .expect("valid edges");
        let w = gallai_weight(&g);
        if w > BigCount::pow(2, 10) || w != construction_count(&g) {
            failures.push(format!("mask {mask:#x}: weight {w}"));
        }
    }
    out.push(check("Gallai weight <= 2^C(5,2) over all 5-vertex graphs", failures, 1024));

    let mut failures = Vec::new();
    let mut total = 0;
    for m in 1..=60u64 {
        for k in 0..=m {
            total += 1;
            if !entropy_binomial_bound_check(m, k).unwrap_or(false) {
                failures.push(format!("C({m}, {k})"));
            }
        }
    }
    out.push(check("C(m, xm) <= 2^(H(x) m) for m <= 60", failures, total));

    let mut failures = Vec::new();
    for seed in 0..100u64 {
        let g = generate_gnp(4 + (seed % 8) as usize, 0.5, seed).expect("valid parameters");
        let s = triangle_stats(&g);
        let naive = triple_loop_triangles(&g);
        let t = s.triangle_edge_count as u64;
        if s.triangle_count != naive || t > 3 * s.triangle_count || t as usize > g.edge_count() {
            failures.push(format!("seed {seed}: T = {} (naive {naive}), t = {t}", s.triangle_count));
        }
    }
    out.push(check("triangle statistics match the triple loop", failures, 100));

    let mut failures = Vec::new();
    for seed in 0..50u64 {
        let g = generate_gnp(30, 0.2, seed).expect("valid parameters");
        match load_edge_list(&save_edge_list(&g)) {
            Ok(h) if h == g => {}
            other => failures.push(format!("seed {seed}: {other:?}")),
        }
    }
    out.push(check("edge-list round trip", failures, 50));

    let g = generate_gnp(12, 0.6, 1).expect("valid parameters");
    let a = estimate_knuth(&g, 2000, 5);
    let b = estimate_knuth(&g, 2000, 5);
    let failures = match (a, b) {
        (Ok(a), Ok(b)) if a == b => Vec::new(),
        (a, b) => vec![format!("{a:?} != {b:?}")],
    };
    out.push(check("Knuth estimator is deterministic per seed", failures, 1));

    out
}
