//! The monochromatic connection number: bounds, two exact engines, and the
//! result type they share.

mod cover;
mod naive;
mod partition;

use serde::Serialize;

use crate::bounds::{basic_interval, BoundInterval, Source};
use crate::coloring::{spanning_tree_coloring, EdgeColoring};
use crate::connectivity::vertex_connectivity;
use crate::error::{Error, Result};
use crate::graph::Graph;

pub use cover::TreeCover;

pub const DEFAULT_NAIVE_CAP: usize = 12;
pub const DEFAULT_NODE_LIMIT: u64 = 10_000_000;

#[derive(Clone, Copy, Debug, PartialEq, Eq, Hash, Serialize)]
#[serde(rename_all = "kebab-case")]
pub enum McMethod {
    NaivePartition,
    TreeCover,
    Theorem1Certificate,
    BoundsOnly,
}

impl McMethod {
    pub fn as_str(self) -> &'static str {
        match self {
            McMethod::NaivePartition => "naive-partition",
            McMethod::TreeCover => "tree-cover",
            McMethod::Theorem1Certificate => "theorem1-certificate",
            McMethod::BoundsOnly => "bounds-only",
        }
    }

    pub fn is_exact(self) -> bool {
        self != McMethod::BoundsOnly
    }
}

/// An mc value with its witness coloring.
///
/// For `bounds-only` results `value` is the bounds' lower end and the
/// witness attains it. Disconnected graphs carry value 0 and no witness.
#[derive(Clone, Debug, PartialEq, Eq, Serialize)]
pub struct McResult {
    pub value: u64,
    pub method: McMethod,
    pub bounds: BoundInterval,
    pub witness: Option<EdgeColoring>,
    /// Search nodes visited by the tree-cover engine.
    #[serde(skip_serializing_if = "Option::is_none")]
    pub nodes: Option<u64>,
}

impl McResult {
    pub fn to_json(&self) -> String {
        serde_json::to_string(self).expect("result serialization cannot fail")
    }
}

/// Settings for [`mc_exact_with`].
#[derive(Clone, Copy, Debug, PartialEq, Eq)]
pub struct ExactConfig {
    pub node_limit: u64,
}

impl Default for ExactConfig {
    fn default() -> Self {
        ExactConfig { node_limit: DEFAULT_NODE_LIMIT }
    }
}

/// `[m − n + 2, m − n + κ + 1]`; `[0, 0]` for disconnected graphs and the
/// trivial value for `n ≤ 1`.
pub fn mc_bounds_basic(g: &Graph) -> BoundInterval {
    let (n, m) = (g.vertex_count() as u64, g.edge_count() as u64);
    if !g.is_connected() {
        return BoundInterval::exact(0, Source::Def, "disconnected");
    }
    if n <= 1 {
        return BoundInterval::exact(0, Source::Def, "no edges");
    }
    basic_interval(n, m, vertex_connectivity(g) as u64)
}

/// `m` minus the vertex-charge lower bound on the waste of any tree cover;
/// a valid upper bound on mc for connected graphs with at most 64 vertices.
pub fn charge_upper(g: &Graph) -> Option<u64> {
    if !g.is_connected() || g.vertex_count() > 64 {
        return None;
    }
    if g.vertex_count() <= 1 {
        return Some(0);
    }
    let waste = cover::CoverSolver::new(g, 0).charge_bound();
    Some((g.edge_count() - waste) as u64)
}

/// Handles the cases every engine shares. `Some` means the answer is known.
fn trivial(g: &Graph, method: McMethod) -> Option<McResult> {
    let m = g.edge_count() as u64;
    let done = |bounds: BoundInterval, witness| Some(McResult { value: bounds.lower, method, bounds, witness, nodes: None });
    if !g.is_connected() {
        return done(mc_bounds_basic(g), None);
    }
    if g.vertex_count() <= 1 {
        return done(mc_bounds_basic(g), Some(EdgeColoring::all_distinct(g)));
    }
    if g.is_complete() {
        let bounds = BoundInterval::exact(m, Source::Exact, "complete graph, every edge its own color");
        return done(bounds, Some(EdgeColoring::all_distinct(g)));
    }
    None
}

/// Exact mc by exhaustive partition search, capped at
/// [`DEFAULT_NAIVE_CAP`] edges.
pub fn mc_exact_naive(g: &Graph) -> Result<McResult> {
    mc_exact_naive_with_cap(g, DEFAULT_NAIVE_CAP)
}

pub fn mc_exact_naive_with_cap(g: &Graph, cap: usize) -> Result<McResult> {
    if !g.is_connected() {
        return Ok(trivial(g, McMethod::NaivePartition).expect("disconnected is trivial"));
    }
    if g.edge_count() > cap {
        return Err(Error::CapExceeded { edges: g.edge_count(), cap });
    }
    let (value, witness) = naive::max_colors(g);
    Ok(McResult {
        value: value as u64,
        method: McMethod::NaivePartition,
        bounds: BoundInterval::exact(value as u64, Source::Exact, "exhaustive partition search"),
        witness: Some(witness),
        nodes: None,
    })
}

/// Exact mc by the tree-cover branch and bound with the default node limit.
pub fn mc_exact(g: &Graph) -> Result<McResult> {
    mc_exact_with(g, ExactConfig::default())
}

/// Exact mc as `m − min waste` over tree covers.
///
/// The waste window starts at the larger of the Lemma 1 value `n − κ − 1`
/// and the vertex-charge bound, and stops below `n − 2`, which a spanning
/// tree always achieves. Running out of nodes yields a `bounds-only` result
/// whose upper end reflects the waste levels already refuted.
pub fn mc_exact_with(g: &Graph, config: ExactConfig) -> Result<McResult> {
    if let Some(r) = trivial(g, McMethod::TreeCover) {
        return Ok(r);
    }
    let (n, m) = (g.vertex_count(), g.edge_count());
    if n > 64 {
        return Err(Error::Inapplicable("tree-cover search supports at most 64 vertices".into()));
    }
    let basic = mc_bounds_basic(g);
    let mut solver = cover::CoverSolver::new(g, config.node_limit);
    let lem1_waste = n - 1 - vertex_connectivity(g);
    let lo = lem1_waste.max(solver.charge_bound());
    let outcome = if lo + 3 <= n { solver.solve(lo, n - 3) } else { None };
    let nodes = Some(solver.nodes());
    match outcome {
        Some(cover::CoverOutcome::Optimal { waste, owners }) => {
            let cover = TreeCover::from_owners(g, &owners);
            let value = (m - waste) as u64;
            Ok(McResult {
                value,
                method: McMethod::TreeCover,
                bounds: BoundInterval::exact(value, Source::Exact, "tree-cover search"),
                witness: Some(cover.coloring(g)),
                nodes,
            })
        }
        None => {
            let value = basic.lower;
            Ok(McResult {
                value,
                method: McMethod::TreeCover,
                bounds: BoundInterval::exact(value, Source::Exact, "tree-cover search, spanning tree optimal"),
                witness: Some(spanning_tree_coloring(g)?),
                nodes,
            })
        }
        Some(cover::CoverOutcome::Budget { refuted_below }) => {
            let mut bounds = basic;
            let searched = (m - refuted_below) as u64;
            if searched < bounds.upper {
                bounds.upper = searched;
                bounds.upper_source = Source::Search;
            }
            bounds.case = format!("search budget of {} nodes exhausted", config.node_limit);
            Ok(McResult {
                value: bounds.lower,
                method: McMethod::BoundsOnly,
                bounds,
                witness: Some(spanning_tree_coloring(g)?),
                nodes,
            })
        }
    }
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::coloring::check_mc_coloring;
    use crate::netfam::named;
    use crate::product::{make_product, ProductKind};

    fn sound(g: &Graph, r: &McResult) {
        let w = r.witness.as_ref().unwrap();
        assert_eq!(check_mc_coloring(g, w).unwrap().is_valid(), true);
        assert_eq!(w.color_count() as u64, r.value);
    }

    #[test]
    fn naive_examples() {
        for (g, want) in [(named::path(4), 1), (named::complete(3), 3), (named::cycle(4), 2), (named::complete(4), 6)] {
            let r = mc_exact_naive(&g).unwrap();
            assert_eq!(r.value, want);
            sound(&g, &r);
        }
        assert_eq!(
            mc_exact_naive(&named::complete(6)),
            Err(Error::CapExceeded { edges: 15, cap: 12 })
        );
    }

    #[test]
    fn exact_examples() {
        let grid = make_product(ProductKind::Cartesian, &named::path(3), &named::path(2)).unwrap().graph;
        for (g, want) in [(grid, 3), (named::star(5), 1), (named::cycle(5), 2), (named::petersen(), 7)] {
            let r = mc_exact(&g).unwrap();
            assert_eq!(r.value, want);
            assert_eq!(r.method, McMethod::TreeCover);
            sound(&g, &r);
        }
    }

    #[test]
    fn a_graph_needing_two_trees() {
        // K_4 minus an edge plus a pendant: the pendant pair forces a tree
        let g = Graph::new(5, [(0, 1), (0, 2), (0, 3), (1, 2), (1, 3), (3, 4)]).unwrap();
        let exact = mc_exact(&g).unwrap();
        let naive = mc_exact_naive(&g).unwrap();
        assert_eq!(exact.value, naive.value);
        sound(&g, &exact);
    }

    #[test]
    fn disconnected_and_tiny() {
        let g = Graph::new(4, [(0, 1), (2, 3)]).unwrap();
        let r = mc_exact(&g).unwrap();
        assert_eq!((r.value, r.witness.is_none()), (0, true));
        assert_eq!(mc_exact_naive(&g).unwrap().value, 0);
        assert_eq!(mc_exact(&Graph::empty(1)).unwrap().value, 0);
        assert_eq!(mc_bounds_basic(&g), BoundInterval::exact(0, Source::Def, "disconnected"));
    }

    #[test]
    fn basic_bounds_examples() {
        let b = mc_bounds_basic(&named::petersen());
        assert_eq!((b.lower, b.upper), (7, 9));
        let b = mc_bounds_basic(&named::complete(5));
        assert_eq!((b.lower, b.upper), (7, 10));
        assert_eq!(mc_exact(&named::complete(5)).unwrap().value, 10);
        assert_eq!(charge_upper(&named::petersen()), Some(7));
        assert_eq!(charge_upper(&named::complete(5)), Some(10));
    }

    #[test]
    fn tiny_budget_gives_bounds_only() {
        let g = make_product(ProductKind::Strong, &named::path(2), &named::cycle(4)).unwrap().graph;
        let r = mc_exact_with(&g, ExactConfig { node_limit: 5 }).unwrap();
        assert_eq!(r.method, McMethod::BoundsOnly);
        assert_eq!((r.value, r.bounds.lower), (14, 14));
        assert!(r.bounds.upper >= 14 && r.bounds.upper <= 17);
        sound(&g, &r);
        assert_eq!(mc_exact(&g).unwrap().value, 14);
    }
}
