//! Invariant suites over exhaustive and seeded-random corpora. Each check
//! counts passes and failures; findings are collected separately and never
//! count as failures.

use std::fmt;
use std::str::FromStr;

use rand::rngs::StdRng;
use rand::{Rng, SeedableRng};
use serde::Serialize;

use crate::bounds::{
    branch_interval, corollary_lower, edge_conn_direct_formula, kappa_formula, product_graph_bounds,
    product_mc_bounds,
};
use crate::certificate::{theorem1_certificate, Condition};
use crate::coloring::{check_mc_coloring, spanning_tree_coloring};
use crate::connectivity::{edge_connectivity, vertex_connectivity};
use crate::enumerate::{connected_graphs, factor_pool, random_connected};
use crate::error::{Error, Result};
use crate::findings::{all_findings, Finding};
use crate::graph::Graph;
use crate::mc::{mc_bounds_basic, mc_exact, mc_exact_naive_with_cap};
use crate::netfam::named;
use crate::product::{distance_formula, edge_count_formula, make_product, ProductKind};
use crate::report::{proposition_report, ReportOptions};

#[derive(Clone, Copy, Debug, PartialEq, Eq, Hash, Serialize)]
#[serde(rename_all = "lowercase")]
pub enum Suite {
    Core,
    Products,
    Bounds,
    Propositions,
}

impl Suite {
    pub fn as_str(self) -> &'static str {
        match self {
            Suite::Core => "core",
            Suite::Products => "products",
            Suite::Bounds => "bounds",
            Suite::Propositions => "propositions",
        }
    }
}

impl fmt::Display for Suite {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.write_str(self.as_str())
    }
}

impl FromStr for Suite {
    type Err = Error;

    fn from_str(s: &str) -> Result<Self> {
        [Suite::Core, Suite::Products, Suite::Bounds, Suite::Propositions]
            .into_iter()
            .find(|x| x.as_str() == s)
            .ok_or_else(|| Error::InvalidSpec(format!("unknown suite {s:?}")))
    }
}

#[derive(Clone, Copy, Debug, PartialEq, Eq)]
pub struct VerifyOptions {
    /// Core: largest corpus graph. Products and bounds: largest pool factor.
    pub max_n: usize,
    /// Edge cap of the exhaustive core corpus.
    pub max_m: usize,
    pub seed: u64,
    /// Seeded random 7-vertex graphs added to the core corpus.
    pub random_samples: usize,
    /// Product size limit for connectivity and distance checks.
    pub product_max_vertices: usize,
    /// Product size limit for checks that run the exact solver.
    pub exact_max_vertices: usize,
}

impl VerifyOptions {
    pub fn for_suite(suite: Suite) -> Self {
        VerifyOptions {
            max_n: if suite == Suite::Core { 6 } else { 5 },
            max_m: 10,
            seed: 0,
            random_samples: 20,
            product_max_vertices: 24,
            exact_max_vertices: 14,
        }
    }
}

/// Pass and failure counts of one invariant.
#[derive(Clone, Debug, Default, PartialEq, Eq, Serialize)]
pub struct CheckSummary {
    pub name: String,
    pub passed: u64,
    pub failed: u64,
    /// The first few failing instances.
    pub failures: Vec<String>,
}

const KEPT_FAILURES: usize = 5;

impl CheckSummary {
    pub fn new(name: impl Into<String>) -> Self {
        CheckSummary { name: name.into(), ..Default::default() }
    }

    pub fn record(&mut self, ok: bool, what: impl FnOnce() -> String) {
        if ok {
            self.passed += 1;
        } else {
            self.failed += 1;
            if self.failures.len() < KEPT_FAILURES {
                self.failures.push(what());
            }
        }
    }

    pub fn ok(&self) -> bool {
        self.failed == 0
    }
}

impl fmt::Display for CheckSummary {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        let status = if self.ok() { "ok" } else { "FAIL" };
        write!(f, "{status:4} {:<48} passed {:>6}  failed {:>4}", self.name, self.passed, self.failed)?;
        for failure in &self.failures {
            write!(f, "\n       {failure}")?;
        }
        Ok(())
    }
}

#[derive(Clone, Debug, PartialEq, Eq, Serialize)]
pub struct VerifyReport {
    pub suite: Suite,
    pub checks: Vec<CheckSummary>,
    pub findings: Vec<Finding>,
}

impl VerifyReport {
    pub fn ok(&self) -> bool {
        self.checks.iter().all(CheckSummary::ok)
    }

    pub fn passed(&self) -> u64 {
        self.checks.iter().map(|c| c.passed).sum()
    }

    pub fn failed(&self) -> u64 {
        self.checks.iter().map(|c| c.failed).sum()
    }

    pub fn to_json(&self) -> String {
        serde_json::to_string(self).expect("report serialization cannot fail")
    }
}

impl fmt::Display for VerifyReport {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        writeln!(f, "suite {}", self.suite)?;
        for c in &self.checks {
            writeln!(f, "{c}")?;
        }
        writeln!(f, "findings ({}):", self.findings.len())?;
        for x in &self.findings {
            writeln!(f, "  [{}] {}: {}", x.id, x.instance, x.summary)?;
        }
        write!(f, "total passed {} failed {}", self.passed(), self.failed())
    }
}

pub fn run_suite(suite: Suite, opts: VerifyOptions) -> Result<VerifyReport> {
    let mut findings = Vec::new();
    let checks = match suite {
        Suite::Core => core_checks(&core_corpus(opts))?,
        Suite::Products => product_checks(&pool(opts.max_n), opts.product_max_vertices)?,
        Suite::Bounds => bounds_checks(&pool(opts.max_n), opts, &mut findings)?,
        Suite::Propositions => proposition_checks()?,
    };
    findings.extend(all_findings()?);
    Ok(VerifyReport { suite, checks, findings })
}

/// Exhaustive connected graphs up to `max_n` vertices and `max_m` edges,
/// then `random_samples` seeded random connected graphs on 7 vertices.
pub fn core_corpus(opts: VerifyOptions) -> Vec<Graph> {
    let mut graphs = connected_graphs(opts.max_n, opts.max_m);
    let mut rng = StdRng::seed_from_u64(opts.seed);
    for _ in 0..opts.random_samples {
        let extra = rng.gen_range(0..=5);
        graphs.push(random_connected(7, extra, &mut rng));
    }
    graphs
}

/// The factor pool restricted to at most `max_n` vertices.
pub fn pool(max_n: usize) -> Vec<(String, Graph)> {
    factor_pool().into_iter().filter(|(_, g)| g.vertex_count() <= max_n).collect()
}

fn pairs(pool: &[(String, Graph)]) -> impl Iterator<Item = (&(String, Graph), &(String, Graph))> {
    pool.iter().flat_map(move |a| pool.iter().map(move |b| (a, b)))
}

fn name(kind: ProductKind, a: &str, b: &str) -> String {
    format!("{a} {} {b}", kind.symbol())
}

/// mc_exact against the exhaustive partition search.
pub fn check_oracle_equivalence(graphs: &[Graph]) -> Result<CheckSummary> {
    let mut c = CheckSummary::new("oracle equivalence (mc_exact = naive)");
    for g in graphs {
        let exact = mc_exact(g)?.value;
        let naive = mc_exact_naive_with_cap(g, 12)?.value;
        c.record(exact == naive, || format!("{}: exact {exact} naive {naive}", g.to_json()));
    }
    Ok(c)
}

/// `m − n + 2 ≤ mc ≤ m − n + κ + 1`.
pub fn check_sandwich(graphs: &[Graph]) -> Result<CheckSummary> {
    let mut c = CheckSummary::new("sandwich m-n+2 <= mc <= m-n+κ+1");
    for g in graphs {
        let mc = mc_exact(g)?.value;
        let b = mc_bounds_basic(g);
        c.record(b.contains(mc), || format!("{}: mc {mc} outside {b}", g.to_json()));
    }
    Ok(c)
}

/// Whenever a Theorem 1 condition fires, mc equals `m − n + 2`.
pub fn check_theorem1_soundness(graphs: &[Graph]) -> Result<CheckSummary> {
    let mut c = CheckSummary::new("Theorem 1 soundness");
    for g in graphs.iter().filter(|g| g.vertex_count() > 3) {
        let cert = theorem1_certificate(g)?;
        if let Some(value) = cert.value {
            let mc = mc_exact(g)?.value;
            c.record(mc == value, || format!("{}: {:?} fired, mc {mc} != {value}", g.to_json(), cert.conditions));
        }
    }
    Ok(c)
}

fn core_checks(graphs: &[Graph]) -> Result<Vec<CheckSummary>> {
    let mut checks =
        vec![check_oracle_equivalence(graphs)?, check_sandwich(graphs)?, check_theorem1_soundness(graphs)?];

    let mut witness = CheckSummary::new("exact witness is a valid MC-coloring");
    let mut merge = CheckSummary::new("merging two colors keeps validity");
    let mut tree = CheckSummary::new("spanning-tree coloring has m-n+2 colors");
    let mut whitney = CheckSummary::new("κ <= κ' <= δ");
    let mut kappa = CheckSummary::new("κ equals smallest separating set");
    let mut involution = CheckSummary::new("complement is an involution");
    let mut metric = CheckSummary::new("distances are symmetric and triangular");
    for g in graphs {
        let j = || g.to_json();
        let r = mc_exact(g)?;
        let w = r.witness.as_ref().expect("connected graphs get a witness");
        witness.record(check_mc_coloring(g, w)?.is_valid() && w.color_count() as u64 == r.value, || j());
        if w.color_count() >= 2 {
            merge.record(check_mc_coloring(g, &w.merge(0, 1))?.is_valid(), || j());
        }
        if g.vertex_count() >= 2 {
            let t = spanning_tree_coloring(g)?;
            let want = g.edge_count() + 2 - g.vertex_count();
            tree.record(check_mc_coloring(g, &t)?.is_valid() && t.color_count() == want, || j());
        }
        let (k, k1) = (vertex_connectivity(g), edge_connectivity(g));
        whitney.record(k <= k1 && k1 <= g.min_degree(), || j());
        if g.vertex_count() <= 7 {
            kappa.record(k == brute_force_kappa(g), || format!("{}: κ {k}", j()));
        }
        involution.record(g.complement().complement() == *g, || j());
        let d = g.distance_matrix();
        let n = g.vertex_count();
        let ok = (0..n).all(|u| {
            (0..n).all(|v| d[u][v] == d[v][u] && (0..n).all(|w| d[u][v].unwrap() <= d[u][w].unwrap() + d[w][v].unwrap()))
        });
        metric.record(ok, || j());
    }
    checks.extend([witness, merge, tree, whitney, kappa, involution, metric]);
    Ok(checks)
}

/// Smallest vertex set whose removal disconnects `g`, or `n − 1` when none
/// exists.
fn brute_force_kappa(g: &Graph) -> usize {
    let n = g.vertex_count();
    let mut best = n.saturating_sub(1);
    for mask in 0u32..1 << n {
        let size = mask.count_ones() as usize;
        if size >= best || size + 2 > n {
            continue;
        }
        let removed: Vec<bool> = (0..n).map(|v| mask >> v & 1 == 1).collect();
        if !g.remove_vertices(&removed).is_connected() {
            best = size;
        }
    }
    best
}

/// Lemmas 6–8 on every vertex pair and Corollaries 1–2 on the diameter, over
/// pool pairs whose product has at most `max_vertices` vertices.
pub fn check_distance_formulas(pool: &[(String, Graph)], max_vertices: usize) -> Result<Vec<CheckSummary>> {
    let mut dist = CheckSummary::new("distance formulas (Lemmas 6-8)");
    let mut diam = CheckSummary::new("diameter formulas (Corollaries 1-2)");
    for ((a, g), (b, h)) in pairs(pool) {
        if g.vertex_count() * h.vertex_count() > max_vertices {
            continue;
        }
        for kind in [ProductKind::Cartesian, ProductKind::Lexicographic, ProductKind::Strong] {
            let what = || name(kind, a, b);
            let p = make_product(kind, g, h)?;
            let d = p.graph.distance_matrix();
            let n = p.graph.vertex_count();
            let mut ok = true;
            for u in 0..n {
                for v in 0..n {
                    ok &= distance_formula(kind, g, h, p.coords(u), p.coords(v))? == d[u][v];
                }
            }
            dist.record(ok, what);
            let (dg, dh) = (g.diameter(), h.diameter());
            let want = match kind {
                ProductKind::Cartesian => dg.zip(dh).map(|(x, y)| x + y),
                ProductKind::Strong => dg.zip(dh).map(|(x, y)| x.max(y)),
                _ => continue,
            };
            diam.record(p.graph.diameter() == want, what);
        }
    }
    Ok(vec![dist, diam])
}

fn product_checks(pool: &[(String, Graph)], max_vertices: usize) -> Result<Vec<CheckSummary>> {
    let mut edges = CheckSummary::new("edge count formulas");
    let mut swap = CheckSummary::new("swap map is an isomorphism (□, ⊠, ×)");
    let mut lex = CheckSummary::new("lexicographic product is not commutative");
    let mut direct = CheckSummary::new("direct product connected iff a factor nonbipartite");
    let mut lex_witness = false;
    for ((a, g), (b, h)) in pairs(pool) {
        if g.vertex_count() * h.vertex_count() > max_vertices {
            continue;
        }
        for kind in ProductKind::ALL {
            let what = || name(kind, a, b);
            let p = make_product(kind, g, h)?;
            edges.record(edge_count_formula(kind, g, h) == p.graph.edge_count() as u64, what);
            let q = make_product(kind, h, g)?;
            let maps = p.graph.edges().iter().all(|&(u, v)| {
                let ((gu, hu), (gv, hv)) = (p.coords(u), p.coords(v));
                q.graph.has_edge(q.index(hu, gu), q.index(hv, gv))
            }) && p.graph.edge_count() == q.graph.edge_count();
            if kind == ProductKind::Lexicographic {
                lex_witness |= !maps && p.graph.edge_count() != q.graph.edge_count();
            } else {
                swap.record(maps, what);
            }
            if kind == ProductKind::Direct {
                let want = !(g.is_bipartite() && h.is_bipartite());
                direct.record(p.graph.is_connected() == want, what);
            }
        }
    }
    lex.record(lex_witness, || "no pair with |E(G∘H)| != |E(H∘G)|".into());
    let mut checks = vec![edges];
    checks.extend(check_distance_formulas(pool, max_vertices)?);
    checks.extend([swap, lex, direct]);
    Ok(checks)
}

/// Lemmas 2–4 against computed κ and Lemma 5 against computed κ′, over pool
/// pairs whose product has at most `max_vertices` vertices.
pub fn check_connectivity_formulas(pool: &[(String, Graph)], max_vertices: usize) -> Result<Vec<CheckSummary>> {
    let mut lemmas = [
        CheckSummary::new("Lemma 2: κ(G □ H)"),
        CheckSummary::new("Lemma 3: κ(G ∘ H), G non-complete"),
        CheckSummary::new("Lemma 4: κ(G ⊠ H) with daleth-sets"),
        CheckSummary::new("Lemma 5: κ'(G × H), nonbipartite"),
    ];
    for ((a, g), (b, h)) in pairs(pool) {
        if g.vertex_count() * h.vertex_count() > max_vertices {
            continue;
        }
        for (i, kind) in ProductKind::ALL.into_iter().enumerate() {
            let p = make_product(kind, g, h)?.graph;
            let (formula, actual) = if kind == ProductKind::Direct {
                (edge_conn_direct_formula(g, h), edge_connectivity(&p) as u64)
            } else {
                (kappa_formula(kind, g, h), vertex_connectivity(&p) as u64)
            };
            match formula {
                Ok(f) => lemmas[i].record(f == actual, || format!("{}: formula {f}, computed {actual}", name(kind, a, b))),
                Err(Error::Inapplicable(_)) => {}
                Err(e) => return Err(e),
            }
        }
    }
    Ok(lemmas.into())
}

/// The hypothesis-checked theorem interval, and the product-aware bounds,
/// contain mc on every pool product small enough to solve.
pub fn check_containment(pool: &[(String, Graph)], max_vertices: usize) -> Result<Vec<CheckSummary>> {
    let mut theorem = CheckSummary::new("Theorems 2-5 interval contains mc");
    let mut product = CheckSummary::new("product_graph_bounds contains mc");
    for ((a, g), (b, h)) in pairs(pool) {
        if g.vertex_count() * h.vertex_count() > max_vertices {
            continue;
        }
        for kind in ProductKind::ALL {
            let p = make_product(kind, g, h)?;
            if !p.graph.is_connected() {
                continue;
            }
            let mc = mc_exact(&p.graph)?.value;
            match product_mc_bounds(kind, g, h) {
                Ok(bi) => theorem.record(bi.contains(mc), || format!("{}: mc {mc} outside {bi}", name(kind, a, b))),
                Err(Error::Inapplicable(_)) => {}
                Err(e) => return Err(e),
            }
            let bi = product_graph_bounds(&p);
            product.record(bi.contains(mc), || format!("{}: mc {mc} outside {bi}", name(kind, a, b)));
        }
    }
    Ok(vec![theorem, product])
}

/// One of the worked product examples: the product, its expected mc and the
/// branch whose interval must contain it.
pub struct ProductExample {
    pub label: &'static str,
    pub kind: ProductKind,
    pub g: Graph,
    pub h: Graph,
    pub mc: u64,
}

pub fn product_examples() -> Vec<ProductExample> {
    vec![
        ProductExample {
            label: "C3 □ C4",
            kind: ProductKind::Cartesian,
            g: named::cycle(3),
            h: named::cycle(4),
            mc: 14,
        },
        ProductExample {
            label: "P4 ∘ P2",
            kind: ProductKind::Lexicographic,
            g: named::path(4),
            h: named::path(2),
            mc: 10,
        },
        ProductExample { label: "P2 ⊠ C6", kind: ProductKind::Strong, g: named::path(2), h: named::cycle(6), mc: 20 },
        ProductExample { label: "C3 × C6", kind: ProductKind::Direct, g: named::cycle(3), h: named::cycle(6), mc: 20 },
    ]
}

/// Each example: exact mc as expected, certified by condition (d), and
/// inside the branch interval.
pub fn check_examples() -> Result<CheckSummary> {
    let mut c = CheckSummary::new("worked examples (exact, certificate (d), branch)");
    for ex in product_examples() {
        let p = make_product(ex.kind, &ex.g, &ex.h)?.graph;
        let mc = mc_exact(&p)?.value;
        let cert = theorem1_certificate(&p)?;
        let branch = branch_interval(ex.kind, &ex.g, &ex.h)?;
        let ok = mc == ex.mc && cert.fired(Condition::D) && cert.value == Some(mc) && branch.contains(mc);
        c.record(ok, || format!("{}: mc {mc}, certificate {:?}, branch {branch}", ex.label, cert.conditions));
    }
    Ok(c)
}

fn bounds_checks(pool: &[(String, Graph)], opts: VerifyOptions, findings: &mut Vec<Finding>) -> Result<Vec<CheckSummary>> {
    let mut checks = check_connectivity_formulas(pool, opts.product_max_vertices)?;
    checks.extend(check_containment(pool, opts.exact_max_vertices)?);
    checks.push(check_examples()?);

    let mut cor = CheckSummary::new("corollary lower <= theorem lower");
    for ((a, g), (b, h)) in pairs(pool) {
        let (mc_g, mc_h) = (mc_exact(g)?.value, mc_exact(h)?.value);
        for kind in ProductKind::ALL {
            let Ok(theorem) = product_mc_bounds(kind, g, h) else { continue };
            let (c, src) = corollary_lower(kind, g, h, mc_g, mc_h)?;
            cor.record(c <= theorem.lower, || format!("{}: {src} {c} > {}", name(kind, a, b), theorem.lower));
            let p = make_product(kind, g, h)?.graph;
            let obs1 = (p.edge_count() + 2 - p.vertex_count()) as u64;
            if theorem.lower < obs1 {
                findings.push(Finding {
                    id: "theorem-lower-below-m-n-2",
                    instance: name(kind, a, b),
                    summary: format!("{} lower {} is below m-n+2 = {obs1}", theorem.lower_source, theorem.lower),
                    numbers: [("theorem_lower", theorem.lower as i64), ("m_minus_n_plus_2", obs1 as i64)].into(),
                });
            }
        }
    }
    checks.push(cor);
    Ok(checks)
}

fn proposition_checks() -> Result<Vec<CheckSummary>> {
    let report = proposition_report(ReportOptions::default())?;
    let mut checks: Vec<CheckSummary> = Vec::new();
    for row in &report.rows {
        if checks.last().map_or(true, |c| c.name != row.proposition) {
            checks.push(CheckSummary::new(row.proposition.clone()));
        }
        let c = checks.last_mut().expect("just pushed");
        c.record(row.agree, || {
            format!("{}({}): {} vs {} = {}", row.family, row.params, row.formula_value_or_interval, row.evaluator, row.evaluator_value)
        });
    }
    Ok(checks)
}
