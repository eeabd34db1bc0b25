//! Small-graph corpora: all connected graphs up to isomorphism, random
//! connected samples, and the named factor pool.

use std::collections::BTreeSet;

use rand::seq::SliceRandom;
use rand::Rng;

use crate::graph::Graph;
use crate::netfam::named;

/// Largest vertex count [`connected_graphs`] accepts.
pub const MAX_ENUM_VERTICES: usize = 8;

fn pair_bit(n: usize, u: usize, v: usize) -> u64 {
    let (u, v) = (u.min(v), u.max(v));
    1 << (u * n + v)
}

/// Smallest edge code over all vertex relabelings.
fn canonical(n: usize, edges: &[(usize, usize)]) -> u64 {
    let mut perm: Vec<usize> = (0..n).collect();
    let mut best = u64::MAX;
    loop {
        let c = edges.iter().fold(0, |c, &(u, v)| c | pair_bit(n, perm[u], perm[v]));
        best = best.min(c);
        if !next_permutation(&mut perm) {
            return best;
        }
    }
}

fn next_permutation(p: &mut [usize]) -> bool {
    let Some(i) = (1..p.len()).rev().find(|&i| p[i - 1] < p[i]) else {
        return false;
    };
    let j = (i..p.len()).rev().find(|&j| p[j] > p[i - 1]).expect("a larger element exists");
    p.swap(i - 1, j);
    p[i..].reverse();
    true
}

fn decode(n: usize, code: u64) -> Graph {
    let edges = (0..n).flat_map(|u| (u + 1..n).map(move |v| (u, v))).filter(|&(u, v)| code & pair_bit(n, u, v) != 0);
    Graph::new(n, edges).expect("decoded edges are canonical")
}

/// Every connected graph with `1..=max_n` vertices and at most `max_m` edges,
/// one per isomorphism class, ordered by vertex count, edge count, then
/// canonical code.
///
/// Connected graphs on `n` vertices are grown from those on `n − 1` by adding
/// a vertex joined to a nonempty subset: deleting a leaf of a spanning tree
/// reverses this.
pub fn connected_graphs(max_n: usize, max_m: usize) -> Vec<Graph> {
    assert!(max_n <= MAX_ENUM_VERTICES, "exhaustive enumeration is limited to {MAX_ENUM_VERTICES} vertices");
    let mut out = Vec::new();
    if max_n == 0 {
        return out;
    }
    let mut layer: BTreeSet<(usize, u64)> = BTreeSet::from([(0, 0)]);
    out.push(Graph::empty(1));
    for n in 2..=max_n {
        let mut next = BTreeSet::new();
        for &(_, c) in &layer {
            let base = decode(n - 1, c);
            for subset in 1u32..1 << (n - 1) {
                let m = base.edge_count() + subset.count_ones() as usize;
                if m > max_m {
                    continue;
                }
                let mut edges = base.edges().to_vec();
                edges.extend((0..n - 1).filter(|&u| subset >> u & 1 == 1).map(|u| (u, n - 1)));
                next.insert((m, canonical(n, &edges)));
            }
        }
        out.extend(next.iter().map(|&(_, c)| decode(n, c)));
        layer = next;
    }
    out
}

/// A random connected graph: a random spanning tree plus `extra` further
/// edges (fewer if the graph fills up).
pub fn random_connected<R: Rng>(n: usize, extra: usize, rng: &mut R) -> Graph {
    let mut order: Vec<usize> = (0..n).collect();
    order.shuffle(rng);
    let mut edges: BTreeSet<(usize, usize)> = BTreeSet::new();
    for i in 1..n {
        let j = rng.gen_range(0..i);
        let (u, v) = (order[i], order[j]);
        edges.insert((u.min(v), u.max(v)));
    }
    let mut missing: Vec<(usize, usize)> =
        (0..n).flat_map(|u| (u + 1..n).map(move |v| (u, v))).filter(|e| !edges.contains(e)).collect();
    missing.shuffle(rng);
    edges.extend(missing.into_iter().take(extra));
    Graph::new(n, edges).expect("random edges are simple")
}

/// Named small factors used by the product cross-checks:
/// `P_2..P_4, C_3..C_5, K_3, K_4` and the star on four vertices.
pub fn factor_pool() -> Vec<(String, Graph)> {
    let mut pool = Vec::new();
    for n in 2..=4 {
        pool.push((format!("P{n}"), named::path(n)));
    }
    for n in 3..=5 {
        pool.push((format!("C{n}"), named::cycle(n)));
    }
    for n in 3..=4 {
        pool.push((format!("K{n}"), named::complete(n)));
    }
    pool.push(("S4".into(), named::star(4)));
    pool
}

/// Whether two graphs on the same vertex set are isomorphic (brute force).
pub fn isomorphic(a: &Graph, b: &Graph) -> bool {
    let n = a.vertex_count();
    n == b.vertex_count()
        && n <= MAX_ENUM_VERTICES
        && a.edge_count() == b.edge_count()
        && canonical(n, a.edges()) == canonical(n, b.edges())
}
