//! Edge-disjoint spanning trees for a family of vertex spans.
//!
//! Each span `S_i` asks for a spanning tree of the induced subgraph `G[S_i]`,
//! and the trees must not share edges. This is a matroid partition problem
//! over the graphic matroids of the induced subgraphs, solved by shortest
//! augmenting paths in the exchange graph.

use std::collections::VecDeque;

const FREE: u32 = u32::MAX;

#[derive(Clone, Debug)]
pub(crate) struct Forests {
    spans: Vec<u64>,
    owner: Vec<u32>,
}

struct ForestIndex {
    /// per tree: component root, parent vertex, parent edge and depth
    comp: Vec<Vec<usize>>,
    parent: Vec<Vec<usize>>,
    parent_edge: Vec<Vec<usize>>,
    depth: Vec<Vec<usize>>,
}

impl Forests {
    pub(crate) fn new(edge_count: usize) -> Self {
        Forests { spans: Vec::new(), owner: vec![FREE; edge_count] }
    }

    /// Tree index owning each edge, if any.
    pub(crate) fn owners(&self) -> impl Iterator<Item = Option<usize>> + '_ {
        self.owner.iter().map(|&o| (o != FREE).then_some(o as usize))
    }

    /// Adds a span and tries to fit a spanning tree of `G[span]` next to the
    /// existing trees (which may be rearranged). Returns `false`, leaving
    /// `self` unusable, when no edge-disjoint arrangement exists.
    pub(crate) fn add_span(&mut self, n: usize, edges: &[(usize, usize)], span: u64) -> bool {
        self.spans.push(span);
        let k = self.spans.len() - 1;
        for _ in 1..span.count_ones() {
            if !self.augment(n, edges, k) {
                return false;
            }
        }
        true
    }

    fn index(&self, n: usize, edges: &[(usize, usize)]) -> ForestIndex {
        let t = self.spans.len();
        let mut adj: Vec<Vec<Vec<(usize, usize)>>> = vec![vec![Vec::new(); n]; t];
        for (e, &o) in self.owner.iter().enumerate() {
            if o != FREE {
                let (u, v) = edges[e];
                adj[o as usize][u].push((v, e));
                adj[o as usize][v].push((u, e));
            }
        }
        let mut idx = ForestIndex {
            comp: vec![vec![usize::MAX; n]; t],
            parent: vec![vec![usize::MAX; n]; t],
            parent_edge: vec![vec![usize::MAX; n]; t],
            depth: vec![vec![0; n]; t],
        };
        for i in 0..t {
            for root in 0..n {
                if self.spans[i] >> root & 1 == 0 || idx.comp[i][root] != usize::MAX {
                    continue;
                }
                idx.comp[i][root] = root;
                let mut stack = vec![root];
                while let Some(u) = stack.pop() {
                    for &(w, e) in &adj[i][u] {
                        if idx.comp[i][w] == usize::MAX {
                            idx.comp[i][w] = root;
                            idx.parent[i][w] = u;
                            idx.parent_edge[i][w] = e;
                            idx.depth[i][w] = idx.depth[i][u] + 1;
                            stack.push(w);
                        }
                    }
                }
            }
        }
        idx
    }

    fn augment(&mut self, n: usize, edges: &[(usize, usize)], k: usize) -> bool {
        let idx = self.index(n, edges);
        let m = edges.len();
        let mut pred: Vec<Option<(usize, u32)>> = vec![None; m];
        let mut seen = vec![false; m];
        let mut queue = VecDeque::new();
        for e in 0..m {
            let (u, v) = edges[e];
            let inside = self.spans.iter().any(|&s| s >> u & 1 == 1 && s >> v & 1 == 1);
            if self.owner[e] == FREE && inside {
                seen[e] = true;
                queue.push_back(e);
            }
        }
        while let Some(e) = queue.pop_front() {
            let (a, b) = edges[e];
            for (i, &span) in self.spans.iter().enumerate() {
                if span >> a & 1 == 0 || span >> b & 1 == 0 || self.owner[e] == i as u32 {
                    continue;
                }
                if idx.comp[i][a] != idx.comp[i][b] {
                    if i != k {
                        continue;
                    }
                    // e enters tree k; walk the displacement chain back.
                    let mut cur = e;
                    self.owner[cur] = k as u32;
                    while let Some((prev, tree)) = pred[cur] {
                        self.owner[prev] = tree;
                        cur = prev;
                    }
                    return true;
                }
                // e closes a cycle in tree i: any edge on it may be displaced.
                let (mut x, mut y) = (a, b);
                let (par, pe, depth) = (&idx.parent[i], &idx.parent_edge[i], &idx.depth[i]);
                while x != y {
                    let step_x = depth[x] >= depth[y];
                    let w = if step_x { x } else { y };
                    let f = pe[w];
                    if !seen[f] {
                        seen[f] = true;
                        pred[f] = Some((e, i as u32));
                        queue.push_back(f);
                    }
                    if step_x {
                        x = par[x];
                    } else {
                        y = par[y];
                    }
                }
            }
        }
        false
    }
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::netfam::named;

    fn mask(vs: &[usize]) -> u64 {
        vs.iter().fold(0, |m, &v| m | 1 << v)
    }

    fn tree_edges(f: &Forests, i: usize) -> usize {
        f.owners().filter(|&o| o == Some(i)).count()
    }

    #[test]
    fn two_spanning_trees_in_k4() {
        let g = named::complete(4);
        let mut f = Forests::new(g.edge_count());
        assert!(f.add_span(4, g.edges(), mask(&[0, 1, 2, 3])));
        assert!(f.add_span(4, g.edges(), mask(&[0, 1, 2, 3])));
        assert_eq!(tree_edges(&f, 0), 3);
        assert_eq!(tree_edges(&f, 1), 3);
        // six edges are all used; a third tree cannot fit
        assert!(!f.clone().add_span(4, g.edges(), mask(&[0, 1, 2])));
    }

    #[test]
    fn rearranges_earlier_trees() {
        // C_4 plus chord 0-2: the first tree may grab the chord, the second
        // span {0,1,2} then needs a swap.
        let g = crate::graph::Graph::new(4, [(0, 1), (1, 2), (2, 3), (0, 3), (0, 2)]).unwrap();
        let mut f = Forests::new(g.edge_count());
        assert!(f.add_span(4, g.edges(), mask(&[0, 2, 3])));
        assert!(f.add_span(4, g.edges(), mask(&[0, 1, 2])));
        assert!(!f.clone().add_span(4, g.edges(), mask(&[0, 1, 2])));
    }

    #[test]
    fn cycle_has_one_spanning_tree_only() {
        let g = named::cycle(5);
        let mut f = Forests::new(g.edge_count());
        assert!(f.add_span(5, g.edges(), mask(&[0, 1, 2, 3, 4])));
        assert!(!f.add_span(5, g.edges(), mask(&[0, 1, 2])));
    }
}
