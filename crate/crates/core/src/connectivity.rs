//! Vertex and edge connectivity by Menger's theorem, plus the aggregate
//! [`GraphMetrics`].

use std::collections::VecDeque;

use serde::{Deserialize, Serialize};

use crate::graph::Graph;

/// Unit-capacity augmenting-path max-flow on a small directed network.
struct FlowNetwork {
    head: Vec<usize>,
    cap: Vec<u32>,
    out: Vec<Vec<usize>>,
}

impl FlowNetwork {
    fn new(nodes: usize) -> Self {
        FlowNetwork { head: Vec::new(), cap: Vec::new(), out: vec![Vec::new(); nodes] }
    }

    fn add_arc(&mut self, from: usize, to: usize, cap: u32) {
        self.out[from].push(self.head.len());
        self.head.push(to);
        self.cap.push(cap);
        self.out[to].push(self.head.len());
        self.head.push(from);
        self.cap.push(0);
    }

    /// Flow value from `s` to `t`, stopping early once it reaches `limit`.
    fn max_flow(&mut self, s: usize, t: usize, limit: usize) -> usize {
        let mut flow = 0;
        let nodes = self.out.len();
        while flow < limit {
            let mut via = vec![usize::MAX; nodes];
            let mut seen = vec![false; nodes];
            seen[s] = true;
            let mut queue = VecDeque::from([s]);
            while let Some(u) = queue.pop_front() {
                if u == t {
                    break;
                }
                for &a in &self.out[u] {
                    let w = self.head[a];
                    if self.cap[a] > 0 && !seen[w] {
                        seen[w] = true;
                        via[w] = a;
                        queue.push_back(w);
                    }
                }
            }
            if !seen[t] {
                break;
            }
            let mut v = t;
            while v != s {
                let a = via[v];
                self.cap[a] -= 1;
                self.cap[a ^ 1] += 1;
                v = self.head[a ^ 1];
            }
            flow += 1;
        }
        flow
    }
}

/// Maximum number of internally vertex-disjoint `s`–`t` paths, capped at
/// `limit`. `s` and `t` must be distinct and non-adjacent.
pub fn local_vertex_connectivity(g: &Graph, s: usize, t: usize, limit: usize) -> usize {
    let n = g.vertex_count();
    // v_in = 2v, v_out = 2v + 1
    let mut net = FlowNetwork::new(2 * n);
    let big = n as u32 + 1;
    for v in 0..n {
        let c = if v == s || v == t { big } else { 1 };
        net.add_arc(2 * v, 2 * v + 1, c);
    }
    for &(u, v) in g.edges() {
        net.add_arc(2 * u + 1, 2 * v, 1);
        net.add_arc(2 * v + 1, 2 * u, 1);
    }
    net.max_flow(2 * s + 1, 2 * t, limit)
}

/// Maximum number of edge-disjoint `s`–`t` paths, capped at `limit`.
pub fn local_edge_connectivity(g: &Graph, s: usize, t: usize, limit: usize) -> usize {
    let mut net = FlowNetwork::new(g.vertex_count());
    for &(u, v) in g.edges() {
        net.add_arc(u, v, 1);
        net.add_arc(v, u, 1);
    }
    net.max_flow(s, t, limit)
}

/// κ(G). Complete graphs get `n - 1`; disconnected graphs and `K_1` get 0.
pub fn vertex_connectivity(g: &Graph) -> usize {
    let n = g.vertex_count();
    if n <= 1 || !g.is_connected() {
        return 0;
    }
    if g.is_complete() {
        return n - 1;
    }
    let mut best = g.min_degree();
    for s in 0..n {
        for t in s + 1..n {
            if !g.has_edge(s, t) {
                best = best.min(local_vertex_connectivity(g, s, t, best));
                if best == 0 {
                    return 0;
                }
            }
        }
    }
    best
}

/// κ′(G): minimum over `t` of the edge-disjoint path count from vertex 0.
pub fn edge_connectivity(g: &Graph) -> usize {
    let n = g.vertex_count();
    if n <= 1 || !g.is_connected() {
        return 0;
    }
    let mut best = g.min_degree();
    for t in 1..n {
        best = best.min(local_edge_connectivity(g, 0, t, best));
    }
    best
}

#[derive(Clone, Debug, PartialEq, Eq, Serialize, Deserialize)]
pub struct GraphMetrics {
    pub vertex_count: usize,
    pub edge_count: usize,
    pub min_degree: usize,
    pub max_degree: usize,
    /// `None` encodes an infinite diameter.
    pub diameter: Option<usize>,
    pub vertex_connectivity: usize,
    pub edge_connectivity: usize,
    pub is_connected: bool,
    pub is_tree: bool,
    pub is_bipartite: bool,
    pub is_complete: bool,
}

pub fn metrics(g: &Graph) -> GraphMetrics {
    GraphMetrics {
        vertex_count: g.vertex_count(),
        edge_count: g.edge_count(),
        min_degree: g.min_degree(),
        max_degree: g.max_degree(),
        diameter: g.diameter(),
        vertex_connectivity: vertex_connectivity(g),
        edge_connectivity: edge_connectivity(g),
        is_connected: g.is_connected(),
        is_tree: g.is_tree(),
        is_bipartite: g.is_bipartite(),
        is_complete: g.is_complete(),
    }
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::netfam::named;

    #[test]
    fn petersen_metrics() {
        let m = metrics(&named::petersen());
        assert_eq!((m.vertex_connectivity, m.edge_connectivity), (3, 3));
        assert_eq!((m.min_degree, m.max_degree), (3, 3));
        assert_eq!(m.diameter, Some(2));
        assert!(!m.is_bipartite && !m.is_tree && m.is_connected);
    }

    #[test]
    fn path_and_cycle_metrics() {
        let p5 = metrics(&named::path(5));
        assert_eq!((p5.vertex_connectivity, p5.edge_connectivity), (1, 1));
        assert_eq!((p5.min_degree, p5.max_degree, p5.diameter), (1, 2, Some(4)));
        let c4 = metrics(&named::cycle(4));
        assert_eq!(
            (c4.vertex_connectivity, c4.edge_connectivity, c4.min_degree, c4.max_degree),
            (2, 2, 2, 2)
        );
        assert_eq!(c4.diameter, Some(2));
    }

    #[test]
    fn complete_graph_convention() {
        for n in 1..6 {
            let k = named::complete(n);
            assert_eq!(vertex_connectivity(&k), n - 1);
            assert_eq!(edge_connectivity(&k), n - 1);
        }
    }

    #[test]
    fn disconnected_is_zero() {
        let g = Graph::new(4, [(0, 1), (2, 3)]).unwrap();
        assert_eq!(vertex_connectivity(&g), 0);
        assert_eq!(edge_connectivity(&g), 0);
        assert_eq!(metrics(&g).diameter, None);
    }
}
