//! Numerical reproduction of the network-family propositions: each row
//! pairs a closed-form value with one independent evaluator.

use std::fmt;

use serde::Serialize;

use crate::bounds::{product_graph_bounds, product_mc_bounds};
use crate::certificate::theorem1_certificate;
use crate::coloring::check_mc_coloring;
use crate::error::{Error, Result};
use crate::graph::Graph;
use crate::mc::{mc_bounds_basic, mc_exact_with, ExactConfig, McMethod};
use crate::netfam::{generate, generate_product, iterated, Family, NetworkSpec};
use crate::product::make_product;

/// What a proposition asserts about mc.
#[derive(Clone, Copy, Debug, PartialEq, Eq)]
pub enum Claim {
    Equals(u64),
    AtLeast(u64),
    Within(u64, u64),
}

impl fmt::Display for Claim {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        match self {
            Claim::Equals(v) => write!(f, "{v}"),
            Claim::AtLeast(v) => write!(f, ">= {v}"),
            Claim::Within(lo, hi) => write!(f, "[{lo}, {hi}]"),
        }
    }
}

/// What an evaluator produced.
#[derive(Clone, Copy, Debug, PartialEq, Eq)]
pub enum Evidence {
    /// mc itself, exact.
    Value(u64),
    /// Proven bounds on mc.
    Interval(u64, u64),
    /// The proposition's expression recomputed from the factor split; must
    /// coincide with the closed form.
    Expression(u64),
}

impl fmt::Display for Evidence {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        match self {
            Evidence::Value(v) | Evidence::Expression(v) => write!(f, "{v}"),
            Evidence::Interval(lo, hi) => write!(f, "[{lo}, {hi}]"),
        }
    }
}

/// Whether the evidence establishes the claim.
pub fn supports(evidence: Evidence, claim: Claim) -> bool {
    match (evidence, claim) {
        (Evidence::Expression(v), Claim::Equals(f) | Claim::AtLeast(f)) => v == f,
        (Evidence::Expression(_), Claim::Within(..)) => false,
        (Evidence::Value(v), Claim::Equals(f)) => v == f,
        (Evidence::Value(v), Claim::AtLeast(f)) => v >= f,
        (Evidence::Value(v), Claim::Within(lo, hi)) => lo <= v && v <= hi,
        (Evidence::Interval(l, u), Claim::Equals(f)) => l == f && u == f,
        (Evidence::Interval(l, _), Claim::AtLeast(f)) => l >= f,
        (Evidence::Interval(l, u), Claim::Within(lo, hi)) => lo <= l && u <= hi,
    }
}

#[derive(Clone, Debug, PartialEq, Eq, Serialize)]
pub struct ReportRow {
    pub family: String,
    pub params: String,
    pub proposition: String,
    pub formula_value_or_interval: String,
    pub evaluator: String,
    pub evaluator_value: String,
    pub agree: bool,
}

#[derive(Clone, Debug, Default, PartialEq, Eq, Serialize)]
pub struct PropositionReport {
    pub rows: Vec<ReportRow>,
}

impl PropositionReport {
    pub fn all_agree(&self) -> bool {
        self.rows.iter().all(|r| r.agree)
    }

    pub fn to_json(&self) -> String {
        serde_json::to_string(&self.rows).expect("report serialization cannot fail")
    }

    pub fn to_csv(&self) -> String {
        let mut w = csv::Writer::from_writer(Vec::new());
        for row in &self.rows {
            w.serialize(row).expect("writing to memory cannot fail");
        }
        String::from_utf8(w.into_inner().expect("in-memory flush")).expect("csv output is utf-8")
    }
}

#[derive(Clone, Copy, Debug, PartialEq, Eq)]
pub struct ReportOptions {
    /// Instances up to this many vertices also get an `mc_exact` row.
    pub max_exact_vertices: usize,
    pub node_limit: u64,
}

impl Default for ReportOptions {
    fn default() -> Self {
        ReportOptions { max_exact_vertices: 12, node_limit: ExactConfig::default().node_limit }
    }
}

struct Instance<'a> {
    spec: NetworkSpec,
    proposition: &'a str,
    claim: Claim,
    graph: Graph,
}

impl Instance<'_> {
    fn row(&self, evaluator: impl Into<String>, evidence: Evidence) -> ReportRow {
        let params: Vec<String> = self.spec.params.iter().map(ToString::to_string).collect();
        ReportRow {
            family: self.spec.family.to_string(),
            params: params.join(","),
            proposition: self.proposition.to_string(),
            formula_value_or_interval: self.claim.to_string(),
            evaluator: evaluator.into(),
            evaluator_value: evidence.to_string(),
            agree: supports(evidence, self.claim),
        }
    }
}

struct Builder {
    opts: ReportOptions,
    rows: Vec<ReportRow>,
}

impl Builder {
    fn instance<'a>(&self, family: Family, params: &[usize], proposition: &'a str, claim: Claim) -> Result<Instance<'a>> {
        let spec = NetworkSpec::new(family, params);
        let graph = generate(&spec)?;
        Ok(Instance { spec, proposition, claim, graph })
    }

    fn certificate(&mut self, inst: &Instance) -> Result<()> {
        let cert = theorem1_certificate(&inst.graph)?;
        let letters: String = cert.conditions.iter().map(|c| c.letter()).collect();
        let row = match cert.value {
            Some(v) => inst.row(format!("theorem1_certificate ({letters})"), Evidence::Value(v)),
            None => ReportRow { agree: false, evaluator_value: "none".into(), ..inst.row("theorem1_certificate", Evidence::Value(0)) },
        };
        self.rows.push(row);
        Ok(())
    }

    fn exact(&mut self, inst: &Instance) -> Result<()> {
        if inst.graph.vertex_count() > self.opts.max_exact_vertices && !inst.graph.is_complete() {
            return Ok(());
        }
        let r = mc_exact_with(&inst.graph, ExactConfig { node_limit: self.opts.node_limit })?;
        let witness_ok = match &r.witness {
            Some(w) => check_mc_coloring(&inst.graph, w)?.is_valid() && w.color_count() as u64 == r.value,
            None => false,
        };
        let mut row = if r.method == McMethod::BoundsOnly {
            inst.row("mc_exact (bounds-only)", Evidence::Interval(r.bounds.lower, r.bounds.upper))
        } else {
            inst.row(format!("mc_exact ({})", r.method.as_str()), Evidence::Value(r.value))
        };
        row.agree &= witness_ok;
        self.rows.push(row);
        Ok(())
    }

    fn basic(&mut self, inst: &Instance) {
        let b = mc_bounds_basic(&inst.graph);
        self.rows.push(inst.row("mc_bounds_basic", Evidence::Interval(b.lower, b.upper)));
    }

    /// The split `G = factors[..at]`, `H = factors[at..]`: the expression
    /// recomputed from it, and the product theorem's interval on it.
    fn split(&mut self, inst: &Instance, at: usize, term: impl Fn(&Graph, &Graph) -> u64) -> Result<()> {
        let (kind, factors) = inst.spec.factors().expect("product family");
        let mut rest = factors;
        let head = rest.drain(..at).collect::<Vec<_>>();
        let g = iterated(kind, head).expect("non-empty head");
        let h = iterated(kind, rest).expect("non-empty tail");
        let p = make_product(kind, &g, &h)?;
        if p.graph.clone().without_labels() != inst.graph.clone().without_labels() {
            return Err(Error::InvalidSpec(format!("split of {} does not rebuild the instance", inst.spec)));
        }
        let desc = format!("G = first {at}, H = remaining {}", inst.spec.params.len() - at);
        self.rows.push(inst.row(format!("split term ({desc})"), Evidence::Expression(term(&g, &h))));
        match product_mc_bounds(kind, &g, &h) {
            Ok(b) => {
                self.rows.push(inst.row(format!("product_mc_bounds {} ({desc})", b.lower_source), Evidence::Interval(b.lower, b.upper)))
            }
            Err(Error::Inapplicable(_)) => {}
            Err(e) => return Err(e),
        }
        Ok(())
    }
}

fn e(g: &Graph) -> u64 {
    g.edge_count() as u64
}

fn v(g: &Graph) -> u64 {
    g.vertex_count() as u64
}

fn binom2(x: u64) -> u64 {
    x * (x - 1) / 2
}

/// Every proposition row, in a fixed order.
pub fn proposition_report(opts: ReportOptions) -> Result<PropositionReport> {
    let mut b = Builder { opts, rows: Vec::new() };

    for (n, m, exact) in [(3u64, 2u64, true), (4, 2, true), (3, 3, true), (5, 4, false)] {
        let inst = b.instance(Family::Grid, &[n as usize, m as usize], "Prop1(i)", Claim::Equals(n * m - n - m + 2))?;
        if exact {
            b.exact(&inst)?;
        }
        b.certificate(&inst)?;
    }
    for (n, m) in [(4u64, 3u64), (5, 3)] {
        let inst = b.instance(Family::LexMesh, &[n as usize, m as usize], "Prop1(ii)", Claim::Equals(m * m * n - m * m - n + 2))?;
        b.exact(&inst)?;
        b.certificate(&inst)?;
    }

    for ls in [[2u64, 2, 2, 2], [3, 2, 2, 2]] {
        let tail: u64 = ls[2..].iter().product();
        let f = (2 * ls[0] * ls[1] - ls[0] - ls[1]) * tail + 2;
        let params: Vec<usize> = ls.iter().map(|&l| l as usize).collect();
        let inst = b.instance(Family::Mesh, &params, "Prop2(i)", Claim::AtLeast(f))?;
        b.split(&inst, 2, |g, h| e(g) * v(h) + 2)?;
        b.certificate(&inst)?;
    }
    for ls in [[2u64, 2, 2, 2], [3, 2, 2, 2]] {
        let tail: u64 = ls[2..].iter().product();
        let (l1, l2) = (ls[0], ls[1]);
        let f = (l1 * l2 * l2 + l1 * l2 - l1 - l2 * l2) * tail * tail + 2;
        let params: Vec<usize> = ls.iter().map(|&l| l as usize).collect();
        let inst = b.instance(Family::LexMesh, &params, "Prop2(ii)", Claim::AtLeast(f))?;
        b.split(&inst, 2, |g, h| e(g) * v(h) * v(h) + 2)?;
        b.basic(&inst);
        b.exact(&inst)?;
    }

    {
        let inst = b.instance(Family::Torus, &[3, 3, 3, 3], "Prop3(i)", Claim::AtLeast(81 + 2))?;
        b.split(&inst, 1, |g, h| e(g) * v(h) + 2)?;
        b.certificate(&inst)?;
        let inst = b.instance(Family::LexTorus, &[3, 3, 3, 3], "Prop3(ii)", Claim::AtLeast(3 * 27 * 27 + 2))?;
        b.split(&inst, 1, |g, h| e(g) * v(h) * v(h) + 2)?;
        b.exact(&inst)?;
    }

    for ms in [[2u64, 2, 2], [3, 3, 3]] {
        let f = binom2(ms[0]) * ms[1..].iter().product::<u64>() + 2;
        let params: Vec<usize> = ms.iter().map(|&m| m as usize).collect();
        let inst = b.instance(Family::GeneralizedHypercube, &params, "Prop4(i)", Claim::AtLeast(f))?;
        b.split(&inst, 1, |g, h| e(g) * v(h) + 2)?;
        b.certificate(&inst)?;
        b.exact(&inst)?;
    }
    for ms in [vec![2u64, 3], vec![2, 2, 2]] {
        let f = binom2(ms.iter().product());
        let params: Vec<usize> = ms.iter().map(|&m| m as usize).collect();
        let inst = b.instance(Family::LexGeneralizedHypercube, &params, "Prop4(ii)", Claim::Equals(f))?;
        b.exact(&inst)?;
    }

    for family in [Family::HyperPetersen, Family::Hl] {
        let inst = b.instance(family, &[3], "Prop5(1)", Claim::Equals(7))?;
        b.certificate(&inst)?;
        b.exact(&inst)?;
    }
    {
        let inst = b.instance(Family::HyperPetersen, &[4], "Prop5(2)", Claim::Equals(22))?;
        b.certificate(&inst)?;
        b.exact(&inst)?;
        let inst = b.instance(Family::Hl, &[4], "Prop5(2)", Claim::Within(112, 121))?;
        let pg = generate_product(&inst.spec)?.expect("hl(4) is a product");
        let bounds = product_graph_bounds(&pg);
        let name = format!("product_graph_bounds ({}, {})", bounds.lower_source, bounds.upper_source);
        b.rows.push(inst.row(name, Evidence::Interval(bounds.lower, bounds.upper)));
        b.exact(&inst)?;
    }

    Ok(PropositionReport { rows: b.rows })
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn support_rules() {
        assert!(supports(Evidence::Value(5), Claim::Equals(5)));
        assert!(!supports(Evidence::Value(6), Claim::Equals(5)));
        assert!(supports(Evidence::Interval(245, 300), Claim::AtLeast(83)));
        assert!(!supports(Evidence::Interval(80, 300), Claim::AtLeast(83)));
        assert!(supports(Evidence::Interval(112, 121), Claim::Within(112, 121)));
        assert!(!supports(Evidence::Interval(112, 124), Claim::Within(112, 121)));
        assert!(supports(Evidence::Value(114), Claim::Within(112, 121)));
        assert!(!supports(Evidence::Expression(84), Claim::AtLeast(83)));
    }

    #[test]
    fn report_agrees_everywhere() {
        let report = proposition_report(ReportOptions::default()).unwrap();
        for row in &report.rows {
            assert!(row.agree, "{row:?}");
        }
        let grid32 = report.rows.iter().find(|r| r.family == "grid" && r.params == "3,2").unwrap();
        assert_eq!((grid32.formula_value_or_interval.as_str(), grid32.evaluator_value.as_str()), ("3", "3"));
        let hl4 = report.rows.iter().find(|r| r.family == "hl" && r.params == "4").unwrap();
        assert_eq!(hl4.evaluator_value, "[112, 121]");
        let k6 = report.rows.iter().find(|r| r.family == "lex_generalized_hypercube" && r.params == "2,3").unwrap();
        assert_eq!(k6.evaluator_value, "15");
        let csv = report.to_csv();
        assert!(csv.starts_with("family,params,proposition,formula_value_or_interval,evaluator,evaluator_value,agree\n"));
        assert_eq!(csv.lines().count(), report.rows.len() + 1);
    }
}
