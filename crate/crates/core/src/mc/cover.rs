//! Exact mc(G) as a minimum-waste tree cover.
//!
//! A maximum MC-coloring can be taken to consist of singleton classes plus
//! edge-disjoint monochromatic trees with at least two edges, such that every
//! non-adjacent vertex pair lies in the vertex span of one of the trees. A
//! tree on `s` vertices spends `s - 1` edges on one color, so it wastes
//! `s - 2` colors, and `mc = m - min waste`.
//!
//! The search chooses spans (connected vertex sets) rather than trees: for a
//! fixed family of spans the trees exist iff the induced subgraphs admit
//! edge-disjoint spanning trees, which [`Forests`] decides exactly.
//!
//! Pruning uses a per-vertex charge. Charging every tree's waste evenly to
//! its `s` vertices gives each vertex `1 - 2/s` per tree containing it, and a
//! vertex with `r` non-neighbours still to cover needs at least one more tree
//! of size `max(3, r + 1)`. The charges sum to a lower bound on the final
//! waste.

use std::collections::HashSet;

use super::partition::Forests;
use crate::coloring::EdgeColoring;
use crate::error::{Error, Result};
use crate::graph::Graph;

const EPS: f64 = 1e-9;

/// Edge-disjoint trees, each with at least two edges, given as edge indices
/// of the host graph.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct TreeCover {
    trees: Vec<Vec<usize>>,
}

impl TreeCover {
    pub fn new(host: &Graph, trees: Vec<Vec<usize>>) -> Result<Self> {
        let cover = TreeCover { trees };
        cover.validate(host)?;
        Ok(cover)
    }

    pub(crate) fn from_owners(host: &Graph, owners: &[Option<usize>]) -> Self {
        let count = owners.iter().flatten().map(|&t| t + 1).max().unwrap_or(0);
        let mut trees = vec![Vec::new(); count];
        for (e, o) in owners.iter().enumerate() {
            if let Some(t) = o {
                trees[*t].push(e);
            }
        }
        let cover = TreeCover { trees };
        debug_assert_eq!(cover.validate(host), Ok(()));
        cover
    }

    pub fn trees(&self) -> &[Vec<usize>] {
        &self.trees
    }

    /// `Σ (|tree| − 1)` over the trees, counted in edges.
    pub fn waste(&self) -> usize {
        self.trees.iter().map(|t| t.len() - 1).sum()
    }

    /// One color per tree, a fresh color for every other edge.
    pub fn coloring(&self, host: &Graph) -> EdgeColoring {
        let mut colors = vec![usize::MAX; host.edge_count()];
        for (i, t) in self.trees.iter().enumerate() {
            for &e in t {
                colors[e] = i;
            }
        }
        let mut fresh = self.trees.len();
        for c in &mut colors {
            if *c == usize::MAX {
                *c = fresh;
                fresh += 1;
            }
        }
        EdgeColoring::new(host, colors).expect("one color per edge")
    }

    /// Checks disjointness, that each tree is a tree with at least two edges,
    /// and that every non-adjacent pair lies in some tree's span.
    pub fn validate(&self, host: &Graph) -> Result<()> {
        let n = host.vertex_count();
        let mut used = vec![false; host.edge_count()];
        let mut spans = Vec::with_capacity(self.trees.len());
        for t in &self.trees {
            if t.len() < 2 {
                return Err(Error::InvalidSpec("a tree needs at least two edges".into()));
            }
            let mut parent: Vec<usize> = (0..n).collect();
            let mut span = vec![false; n];
            for &e in t {
                if e >= used.len() || std::mem::replace(&mut used[e], true) {
                    return Err(Error::InvalidSpec(format!("edge {e} is missing or shared")));
                }
                let (u, v) = host.edges()[e];
                let (ru, rv) = (find(&mut parent, u), find(&mut parent, v));
                if ru == rv {
                    return Err(Error::InvalidSpec("a tree contains a cycle".into()));
                }
                parent[ru] = rv;
                span[u] = true;
                span[v] = true;
            }
            // acyclic with |E| = |V| - 1 means connected
            if span.iter().filter(|&&s| s).count() != t.len() + 1 {
                return Err(Error::InvalidSpec("a tree is disconnected".into()));
            }
            spans.push(span);
        }
        for u in 0..n {
            for v in u + 1..n {
                if !host.has_edge(u, v) && !spans.iter().any(|s| s[u] && s[v]) {
                    return Err(Error::InvalidSpec(format!("pair ({u}, {v}) is not spanned")));
                }
            }
        }
        Ok(())
    }
}

fn find(parent: &mut [usize], mut x: usize) -> usize {
    while parent[x] != x {
        parent[x] = parent[parent[x]];
        x = parent[x];
    }
    x
}

/// Outcome of a bounded tree-cover search.
pub(crate) enum CoverOutcome {
    /// Minimum waste and, per edge, the tree that owns it.
    Optimal { waste: usize, owners: Vec<Option<usize>> },
    /// Node budget ran out; every waste below `refuted_below` is impossible.
    Budget { refuted_below: usize },
}

fn extra(r: u32) -> f64 {
    if r == 0 {
        0.0
    } else {
        1.0 - 2.0 / f64::from((r + 1).max(3))
    }
}

pub(crate) struct CoverSolver<'a> {
    g: &'a Graph,
    n: usize,
    adj: Vec<u64>,
    /// pairs to cover, farthest first
    pairs: Vec<(usize, usize)>,
    nodes: u64,
    node_limit: u64,
}

struct Level {
    target: usize,
    /// connected vertex sets grouped by size, `by_size[s]`
    by_size: Vec<Vec<u64>>,
}

struct State {
    chosen: Vec<u64>,
    forests: Forests,
    uncovered: Vec<u64>,
    waste: usize,
    extra: f64,
}

enum Step {
    Found(Forests),
    Exhausted,
    Budget,
}

impl<'a> CoverSolver<'a> {
    pub(crate) fn new(g: &'a Graph, node_limit: u64) -> Self {
        let n = g.vertex_count();
        assert!(n <= 64, "tree-cover search supports at most 64 vertices");
        let adj: Vec<u64> = (0..n).map(|v| g.neighbors(v).iter().fold(0u64, |m, &w| m | 1 << w)).collect();
        let dist = g.distance_matrix();
        let mut pairs = Vec::new();
        for u in 0..n {
            for v in u + 1..n {
                if adj[u] >> v & 1 == 0 {
                    pairs.push((u, v));
                }
            }
        }
        pairs.sort_by_key(|&(u, v)| (std::cmp::Reverse(dist[u][v]), u, v));
        CoverSolver { g, n, adj, pairs, nodes: 0, node_limit }
    }

    pub(crate) fn nodes(&self) -> u64 {
        self.nodes
    }

    fn non_neighbors(&self, v: usize) -> u64 {
        let all = if self.n == 64 { u64::MAX } else { (1u64 << self.n) - 1 };
        all & !self.adj[v] & !(1 << v)
    }

    /// Root lower bound on the waste from the vertex charges.
    pub(crate) fn charge_bound(&self) -> usize {
        let total: f64 = (0..self.n).map(|v| extra(self.non_neighbors(v).count_ones())).sum();
        (total - EPS).ceil().max(0.0) as usize
    }

    /// Searches waste levels `lo..=hi` in increasing order.
    pub(crate) fn solve(&mut self, lo: usize, hi: usize) -> Option<CoverOutcome> {
        if self.pairs.is_empty() {
            return Some(CoverOutcome::Optimal { waste: 0, owners: vec![None; self.g.edge_count()] });
        }
        let mut sets = None;
        for target in lo..=hi {
            let by_size = sets.get_or_insert_with(|| self.connected_sets(hi + 2));
            let level = Level { target, by_size: by_size.clone() };
            match self.search_level(&level) {
                Step::Found(forests) => {
                    return Some(CoverOutcome::Optimal { waste: target, owners: forests.owners().collect() })
                }
                Step::Exhausted => {}
                Step::Budget => return Some(CoverOutcome::Budget { refuted_below: target }),
            }
        }
        None
    }

    /// All connected vertex sets with `3..=max_size` vertices, by size, each
    /// size class in lexicographic order of the sorted vertex lists.
    fn connected_sets(&self, max_size: usize) -> Vec<Vec<u64>> {
        let max_size = max_size.min(self.n);
        let mut out = vec![Vec::new(); max_size + 1];
        for v in 0..self.n {
            let higher = if v == 63 { 0 } else { !0u64 << (v + 1) };
            self.extend(1 << v, self.adj[v] & higher, self.adj[v], higher, max_size, &mut out);
        }
        for class in &mut out {
            class.sort_by_key(|&s| bits(s));
        }
        out
    }

    fn extend(&self, sub: u64, mut ext: u64, nbrs: u64, higher: u64, max: usize, out: &mut [Vec<u64>]) {
        let size = sub.count_ones() as usize;
        if size >= 3 {
            out[size].push(sub);
        }
        if size == max {
            return;
        }
        while ext != 0 {
            let w = ext.trailing_zeros() as usize;
            ext &= ext - 1;
            let exclusive = self.adj[w] & !sub & !nbrs & higher;
            self.extend(sub | 1 << w, ext | exclusive, nbrs | self.adj[w], higher, max, out);
        }
    }

    fn search_level(&mut self, level: &Level) -> Step {
        let uncovered: Vec<u64> = (0..self.n).map(|v| self.non_neighbors(v)).collect();
        let extra0 = uncovered.iter().map(|u| extra(u.count_ones())).sum();
        let mut state = State {
            chosen: Vec::new(),
            forests: Forests::new(self.g.edge_count()),
            uncovered,
            waste: 0,
            extra: extra0,
        };
        let mut forbidden = HashSet::new();
        self.dfs(level, &mut state, &mut forbidden)
    }

    fn dfs(&mut self, level: &Level, state: &mut State, forbidden: &mut HashSet<u64>) -> Step {
        self.nodes += 1;
        if self.nodes > self.node_limit {
            return Step::Budget;
        }
        let Some(&(u, v)) = self.pairs.iter().find(|&&(u, v)| state.uncovered[u] >> v & 1 == 1) else {
            return Step::Found(state.forests.clone());
        };
        let budget = level.target - state.waste;
        let need = 1u64 << u | 1 << v;
        let mut banned_here = Vec::new();
        let mut result = Step::Exhausted;
        'sizes: for size in 3..=(budget + 2).min(level.by_size.len() - 1) {
            for &span in &level.by_size[size] {
                if span & need != need || forbidden.contains(&span) || state.chosen.contains(&span) {
                    continue;
                }
                let waste = state.waste + size - 2;
                let mut delta = 0.0;
                let mut rest = span;
                while rest != 0 {
                    let x = rest.trailing_zeros() as usize;
                    rest &= rest - 1;
                    let before = state.uncovered[x];
                    delta += extra((before & !span).count_ones()) - extra(before.count_ones());
                }
                if waste as f64 + state.extra + delta > level.target as f64 + EPS {
                    continue;
                }
                let mut forests = state.forests.clone();
                if !forests.add_span(self.n, self.g.edges(), span) {
                    continue;
                }
                let saved_uncovered = state.uncovered.clone();
                let saved = (state.waste, state.extra, std::mem::replace(&mut state.forests, forests));
                let mut rest = span;
                while rest != 0 {
                    let x = rest.trailing_zeros() as usize;
                    rest &= rest - 1;
                    state.uncovered[x] &= !span;
                }
                state.waste = waste;
                state.extra += delta;
                state.chosen.push(span);
                let step = self.dfs(level, state, forbidden);
                state.chosen.pop();
                state.uncovered = saved_uncovered;
                (state.waste, state.extra, state.forests) = saved;
                match step {
                    Step::Exhausted => {
                        forbidden.insert(span);
                        banned_here.push(span);
                    }
                    other => {
                        result = other;
                        break 'sizes;
                    }
                }
            }
        }
        for span in banned_here {
            forbidden.remove(&span);
        }
        result
    }
}

fn bits(mut s: u64) -> Vec<u32> {
    let mut out = Vec::with_capacity(s.count_ones() as usize);
    while s != 0 {
        out.push(s.trailing_zeros());
        s &= s - 1;
    }
    out
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::netfam::named;

    #[test]
    fn connected_sets_of_a_path() {
        let g = named::path(5);
        let s = CoverSolver::new(&g, 1000);
        let sets = s.connected_sets(5);
        // subpaths with 3, 4, 5 vertices
        assert_eq!(sets[3], vec![0b00111, 0b01110, 0b11100]);
        assert_eq!(sets[4].len(), 2);
        assert_eq!(sets[5].len(), 1);
    }

    #[test]
    fn connected_sets_count_matches_brute_force() {
        let g = named::petersen();
        let s = CoverSolver::new(&g, 1000);
        let sets = s.connected_sets(10);
        let total: usize = sets.iter().map(Vec::len).sum();
        let brute = (0u64..1 << 10)
            .filter(|&m| m.count_ones() >= 3)
            .filter(|&m| {
                let removed: Vec<bool> = (0..10).map(|v| m >> v & 1 == 0).collect();
                g.remove_vertices(&removed).is_connected()
            })
            .count();
        assert_eq!(total, brute);
    }

    #[test]
    fn charge_bound_on_petersen_reaches_spanning_tree_waste() {
        // 10 vertices with 6 non-neighbours each: 10 * 5/7 > 7
        let g = named::petersen();
        assert_eq!(CoverSolver::new(&g, 10).charge_bound(), 8);
    }
}
