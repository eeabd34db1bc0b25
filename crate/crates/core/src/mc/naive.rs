//! Brute-force oracle: enumerate every set partition of the edge set as a
//! candidate color-class family and keep the valid one with the most parts.

use crate::coloring::EdgeColoring;
use crate::graph::Graph;

struct Search<'a> {
    n: usize,
    edges: &'a [(usize, usize)],
    assign: Vec<usize>,
    best: usize,
    best_assign: Option<Vec<usize>>,
}

impl Search<'_> {
    fn valid(&self, blocks: usize) -> bool {
        let n = self.n;
        let mut roots = vec![0usize; blocks * n];
        for b in 0..blocks {
            let parent = &mut roots[b * n..(b + 1) * n];
            for (v, p) in parent.iter_mut().enumerate() {
                *p = v;
            }
        }
        for (e, &(u, v)) in self.edges.iter().enumerate() {
            let parent = &mut roots[self.assign[e] * n..(self.assign[e] + 1) * n];
            let (ru, rv) = (root(parent, u), root(parent, v));
            if ru != rv {
                parent[ru] = rv;
            }
        }
        for b in 0..blocks {
            let parent = &mut roots[b * n..(b + 1) * n];
            for v in 0..n {
                let r = root(parent, v);
                parent[v] = r;
            }
        }
        (0..n).all(|u| {
            (u + 1..n).all(|v| (0..blocks).any(|b| roots[b * n + u] == roots[b * n + v]))
        })
    }

    fn run(&mut self, i: usize, blocks: usize) {
        let m = self.edges.len();
        if blocks + (m - i) <= self.best && self.best_assign.is_some() {
            return;
        }
        if i == m {
            if self.valid(blocks) {
                self.best = blocks;
                self.best_assign = Some(self.assign.clone());
            }
            return;
        }
        self.assign[i] = blocks;
        self.run(i + 1, blocks + 1);
        for b in 0..blocks {
            self.assign[i] = b;
            self.run(i + 1, blocks);
        }
    }
}

fn root(parent: &mut [usize], mut x: usize) -> usize {
    while parent[x] != x {
        x = parent[x];
    }
    x
}

/// Maximum-color MC-coloring by exhaustive partition search. The caller is
/// responsible for connectivity and the edge cap.
pub(crate) fn max_colors(g: &Graph) -> (usize, EdgeColoring) {
    let mut s = Search {
        n: g.vertex_count(),
        edges: g.edges(),
        assign: vec![0; g.edge_count()],
        best: 0,
        best_assign: None,
    };
    s.run(0, 0);
    let assign = s.best_assign.expect("a connected graph has an MC-coloring");
    (s.best, EdgeColoring::new(g, assign).expect("one color per edge"))
}
