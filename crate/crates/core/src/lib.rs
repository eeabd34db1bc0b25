//! Graph products and the monochromatic connection number.
//!
//! An edge coloring is an MC-coloring when every pair of vertices is joined
//! by a monochromatic path; `mc(G)` is the largest number of colors such a
//! coloring can use. This crate builds the four standard graph products,
//! computes `mc` exactly for small graphs, evaluates the known lower and upper
//! bounds for products, and cross-checks the two.
//!
//! ```
//! use mcgraph::netfam::named;
//! use mcgraph::{make_product, mc_exact, ProductKind};
//!
//! let grid = make_product(ProductKind::Cartesian, &named::path(3), &named::path(2))?.graph;
//! assert_eq!(mc_exact(&grid)?.value, 3);
//! # Ok::<(), mcgraph::Error>(())
//! ```

pub mod bounds;
pub mod certificate;
pub mod cli;
pub mod coloring;
pub mod connectivity;
pub mod enumerate;
pub mod error;
pub mod findings;
pub mod graph;
pub mod mc;
pub mod netfam;
pub mod product;
pub mod report;
pub mod verify;

pub use bounds::{
    branch_interval, corollary_lower, daleth_min, edge_conn_direct_formula, kappa_formula, product_graph_bounds,
    product_mc_bounds, BoundInterval, DalethSet, Source,
};
pub use certificate::{theorem1_certificate, Condition, Theorem1Certificate};
pub use coloring::{check_mc_coloring, spanning_tree_coloring, EdgeColoring, McCheck};
pub use connectivity::{edge_connectivity, metrics, vertex_connectivity, GraphMetrics};
pub use error::{Error, Result};
pub use graph::Graph;
pub use mc::{charge_upper, mc_bounds_basic, mc_exact, mc_exact_naive, mc_exact_with, ExactConfig, McMethod, McResult, TreeCover};
pub use netfam::{generate, generate_product, Family, NetworkSpec};
pub use product::{distance_formula, edge_count_formula, make_product, ProductGraph, ProductKind};
pub use report::{proposition_report, PropositionReport, ReportOptions};
pub use verify::{run_suite, Suite, VerifyOptions, VerifyReport};
