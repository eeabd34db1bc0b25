//! Places where a published statement and direct computation disagree,
//! each reproduced on a concrete instance.
//!
//! These are reported next to verification results, never as failures.

use std::collections::BTreeMap;

use serde::Serialize;

use crate::bounds::{branch_interval, lex_tree_branch_stated, product_mc_bounds};
use crate::certificate::{theorem1_certificate, Condition};
use crate::connectivity::vertex_connectivity;
use crate::error::Result;
use crate::graph::Graph;
use crate::mc::{mc_bounds_basic, mc_exact};
use crate::netfam::named;
use crate::product::{make_product, ProductKind};

#[derive(Clone, Debug, PartialEq, Eq, Serialize)]
pub struct Finding {
    pub id: &'static str,
    pub instance: String,
    pub summary: String,
    /// Named quantities computed on the instance.
    pub numbers: BTreeMap<&'static str, i64>,
}

fn product(kind: ProductKind, g: &Graph, h: &Graph) -> Result<Graph> {
    Ok(make_product(kind, g, h)?.graph)
}

fn mn2(g: &Graph) -> i64 {
    g.edge_count() as i64 - g.vertex_count() as i64 + 2
}

/// Lexicographic "G a tree, H not" branch: printed bounds against the
/// values its derivation yields, on `P_3 ∘ C_3`.
pub fn lex_tree_branch_divergence() -> Result<Finding> {
    let (g, h) = (named::path(3), named::cycle(3));
    let p = product(ProductKind::Lexicographic, &g, &h)?;
    let (stated_lo, stated_hi) = lex_tree_branch_stated(&g, &h)?;
    let used = branch_interval(ProductKind::Lexicographic, &g, &h)?;
    let basic = mc_bounds_basic(&p);
    let exact = mc_exact(&p)?.value;
    let numbers = BTreeMap::from([
        ("stated_lower", stated_lo as i64),
        ("stated_upper", stated_hi as i64),
        ("derived_lower", used.lower as i64),
        ("derived_upper", used.upper as i64),
        ("m_minus_n_plus_2", basic.lower as i64),
        ("m_minus_n_plus_kappa_plus_1", basic.upper as i64),
        ("mc_exact", exact as i64),
    ]);
    Ok(Finding {
        id: "thm3-3-statement-vs-derivation",
        instance: "P3 lex C3".into(),
        summary: format!(
            "Thm3(3) prints [{stated_lo}, {stated_hi}], an empty interval; its derivation gives [{}, {}]; exact mc is {exact}",
            used.lower, used.upper
        ),
        numbers,
    })
}

/// Example 3(3) applies the both-trees strong branch to `P_2 ⊠ C_4` and
/// relies on diameter at least 3.
pub fn strong_example_inapplicable() -> Result<Finding> {
    let (g, h) = (named::path(2), named::cycle(4));
    let p = product(ProductKind::Strong, &g, &h)?;
    let claimed = 3 * g.edge_count() as i64 * h.edge_count() as i64 + 1;
    let diameter = p.diameter().map_or(-1, |d| d as i64);
    let fires_d = theorem1_certificate(&p)?.fired(Condition::D);
    let branch = branch_interval(ProductKind::Strong, &g, &h)?;
    let exact = mc_exact(&p)?.value as i64;
    let numbers = BTreeMap::from([
        ("claimed", claimed),
        ("m_minus_n_plus_2", mn2(&p)),
        ("diameter", diameter),
        ("condition_d_fires", i64::from(fires_d)),
        ("branch_lower", branch.lower as i64),
        ("branch_upper", branch.upper as i64),
        ("mc_exact", exact),
    ]);
    Ok(Finding {
        id: "example-3-3-inapplicable",
        instance: "P2 strong C4".into(),
        summary: format!(
            "claimed mc {claimed} uses the both-trees branch although C4 is not a tree; diameter is {diameter}, so condition (d) does not fire; {} applies with [{}, {}] and exact mc is {exact}",
            branch.lower_source, branch.lower, branch.upper
        ),
        numbers,
    })
}

/// The lexicographic upper bounds assume the connectivity formula for
/// `G ∘ H`, which needs `G` non-complete; `K_2 ∘ C_3 = K_6` breaks them.
pub fn lex_complete_factor_upper() -> Result<Finding> {
    let (g, h) = (named::path(2), named::cycle(3));
    let p = product(ProductKind::Lexicographic, &g, &h)?;
    let branch = branch_interval(ProductKind::Lexicographic, &g, &h)?;
    let exact = mc_exact(&p)?.value as i64;
    let numbers = BTreeMap::from([
        ("branch_upper", branch.upper as i64),
        ("kappa_formula_value", h.vertex_count() as i64),
        ("kappa_product", vertex_connectivity(&p) as i64),
        ("mc_exact", exact),
    ]);
    Ok(Finding {
        id: "lex-complete-g-upper",
        instance: "P2 lex C3".into(),
        summary: format!(
            "{} upper {} is below the exact mc {exact} (the product is K6); checked bounds fall back to m-n+κ+1",
            branch.upper_source, branch.upper
        ),
        numbers,
    })
}

/// `HL_4 = K_2 ∘ Petersen` has connectivity 13, so the basic upper bound is
/// 124; 121 only follows from the lexicographic branch with complete `G`.
pub fn hl4_connectivity() -> Result<Finding> {
    let (g, h) = (named::path(2), named::petersen());
    let p = product(ProductKind::Lexicographic, &g, &h)?;
    let basic = mc_bounds_basic(&p);
    let branch = branch_interval(ProductKind::Lexicographic, &g, &h)?;
    let numbers = BTreeMap::from([
        ("kappa", vertex_connectivity(&p) as i64),
        ("basic_lower", basic.lower as i64),
        ("basic_upper", basic.upper as i64),
        ("branch_upper", branch.upper as i64),
    ]);
    Ok(Finding {
        id: "hl4-connectivity",
        instance: "hl(4)".into(),
        summary: format!(
            "κ(HL4) = {}, not 10, so m-n+κ+1 = {}; the upper end 121 comes from {} with complete G",
            numbers["kappa"], basic.upper, branch.upper_source
        ),
        numbers,
    })
}

/// The direct-product corollary is stated for one nonbipartite factor, but
/// `C_3 × P_2 = C_6` has mc 2 while the bound gives `3·1 + 2`.
pub fn direct_corollary_hypothesis() -> Result<Finding> {
    let (g, h) = (named::cycle(3), named::path(2));
    let p = product(ProductKind::Direct, &g, &h)?;
    let (mc_g, mc_h) = (mc_exact(&g)?.value as i64, mc_exact(&h)?.value as i64);
    let exact = mc_exact(&p)?.value as i64;
    let numbers = BTreeMap::from([("mc_g", mc_g), ("mc_h", mc_h), ("corollary_bound", mc_g * mc_h + 2), ("mc_exact", exact)]);
    Ok(Finding {
        id: "direct-corollary-one-nonbipartite",
        instance: "C3 direct P2".into(),
        summary: format!(
            "with only one nonbipartite factor the bound {} exceeds the exact mc {exact}; both factors must be nonbipartite",
            mc_g * mc_h + 2
        ),
        numbers,
    })
}

/// Example 4 uses `C_6`, which is bipartite, outside Thm5's hypothesis.
pub fn direct_example_bipartite() -> Result<Finding> {
    let (g, h) = (named::cycle(3), named::cycle(6));
    let p = product(ProductKind::Direct, &g, &h)?;
    let branch = branch_interval(ProductKind::Direct, &g, &h)?;
    let checked = product_mc_bounds(ProductKind::Direct, &g, &h).is_ok();
    let exact = mc_exact(&p)?.value as i64;
    let numbers = BTreeMap::from([
        ("branch_lower", branch.lower as i64),
        ("branch_upper", branch.upper as i64),
        ("hypothesis_met", i64::from(checked)),
        ("mc_exact", exact),
    ]);
    Ok(Finding {
        id: "example-4-bipartite-factor",
        instance: "C3 direct C6".into(),
        summary: format!(
            "C6 is bipartite, so Thm5 does not formally apply; the formula interval [{}, {}] still contains the exact mc {exact}",
            branch.lower, branch.upper
        ),
        numbers,
    })
}

/// All findings in a fixed order.
pub fn all_findings() -> Result<Vec<Finding>> {
    Ok(vec![
        lex_tree_branch_divergence()?,
        strong_example_inapplicable()?,
        lex_complete_factor_upper()?,
        hl4_connectivity()?,
        direct_corollary_hypothesis()?,
        direct_example_bipartite()?,
    ])
}
