//! The four standard graph products with coordinate-labeled vertices, their
//! closed-form edge counts, and the factor-distance formulas.
//!
//! Vertex `(g, h)` of a product is stored at index `g * |V(H)| + h`. Labels
//! are the concatenation of the factor labels (or the bare factor index when a
//! factor is unlabeled), so iterated products carry flat coordinate tuples.

use std::fmt;
use std::str::FromStr;

use serde::{Deserialize, Serialize};

use crate::error::{Error, Result};
use crate::graph::{Graph, Label};

#[derive(Clone, Copy, Debug, PartialEq, Eq, Hash, PartialOrd, Ord, Serialize, Deserialize)]
#[serde(rename_all = "lowercase")]
pub enum ProductKind {
    Cartesian,
    Lexicographic,
    Strong,
    Direct,
}

impl ProductKind {
    pub const ALL: [ProductKind; 4] =
        [ProductKind::Cartesian, ProductKind::Lexicographic, ProductKind::Strong, ProductKind::Direct];

    pub fn as_str(self) -> &'static str {
        match self {
            ProductKind::Cartesian => "cartesian",
            ProductKind::Lexicographic => "lexicographic",
            ProductKind::Strong => "strong",
            ProductKind::Direct => "direct",
        }
    }

    pub fn symbol(self) -> &'static str {
        match self {
            ProductKind::Cartesian => "□",
            ProductKind::Lexicographic => "∘",
            ProductKind::Strong => "⊠",
            ProductKind::Direct => "×",
        }
    }

    /// Adjacency rule on coordinates.
    fn adjacent(self, g: &Graph, h: &Graph, (g1, h1): (usize, usize), (g2, h2): (usize, usize)) -> bool {
        let ge = g.has_edge(g1, g2);
        let he = h.has_edge(h1, h2);
        match self {
            ProductKind::Cartesian => (g1 == g2 && he) || (h1 == h2 && ge),
            ProductKind::Lexicographic => ge || (g1 == g2 && he),
            ProductKind::Strong => (g1 == g2 && he) || (h1 == h2 && ge) || (ge && he),
            ProductKind::Direct => ge && he,
        }
    }
}

impl fmt::Display for ProductKind {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.write_str(self.as_str())
    }
}

impl FromStr for ProductKind {
    type Err = Error;

    fn from_str(s: &str) -> Result<Self> {
        match s.to_ascii_lowercase().as_str() {
            "cartesian" | "cart" | "box" => Ok(ProductKind::Cartesian),
            "lexicographic" | "lex" => Ok(ProductKind::Lexicographic),
            "strong" => Ok(ProductKind::Strong),
            "direct" | "tensor" => Ok(ProductKind::Direct),
            other => Err(Error::Parse(format!("unknown product kind {other:?}"))),
        }
    }
}

#[derive(Clone, Debug, PartialEq, Eq)]
pub struct ProductGraph {
    pub graph: Graph,
    pub kind: ProductKind,
    /// `(|V(G)|, |V(H)|)`
    pub factor_sizes: (usize, usize),
}

#[derive(Serialize, Deserialize)]
struct ProductMeta {
    kind: ProductKind,
    factors: [usize; 2],
}

#[derive(Serialize, Deserialize)]
struct ProductRepr {
    #[serde(flatten)]
    graph: Graph,
    product: ProductMeta,
    connected: bool,
}

impl ProductGraph {
    pub fn index(&self, g: usize, h: usize) -> usize {
        g * self.factor_sizes.1 + h
    }

    pub fn coords(&self, v: usize) -> (usize, usize) {
        (v / self.factor_sizes.1, v % self.factor_sizes.1)
    }

    /// Graph JSON with an extra `product` object and a `connected` flag.
    pub fn to_json(&self) -> String {
        let repr = ProductRepr {
            graph: self.graph.clone(),
            product: ProductMeta { kind: self.kind, factors: [self.factor_sizes.0, self.factor_sizes.1] },
            connected: self.graph.is_connected(),
        };
        serde_json::to_string(&repr).expect("product serialization cannot fail")
    }

    pub fn from_json(text: &str) -> Result<Self> {
        let repr: ProductRepr = serde_json::from_str(text).map_err(|e| Error::Parse(e.to_string()))?;
        let [a, b] = repr.product.factors;
        if a * b != repr.graph.vertex_count() {
            return Err(Error::Parse(format!(
                "factor sizes {a}x{b} do not match vertex count {}",
                repr.graph.vertex_count()
            )));
        }
        Ok(ProductGraph { graph: repr.graph, kind: repr.product.kind, factor_sizes: (a, b) })
    }

    /// Reads the two factors back out of the product adjacency.
    ///
    /// For the direct product an edge of one factor is only visible when the
    /// other factor has at least one edge; `None` is returned otherwise.
    pub fn recover_factors(&self) -> Option<(Graph, Graph)> {
        let (a, b) = self.factor_sizes;
        let p = &self.graph;
        let mut ge = Vec::new();
        let mut he = Vec::new();
        match self.kind {
            ProductKind::Direct => {
                for &(u, v) in p.edges() {
                    let (g1, h1) = self.coords(u);
                    let (g2, h2) = self.coords(v);
                    ge.push((g1.min(g2), g1.max(g2)));
                    he.push((h1.min(h2), h1.max(h2)));
                }
                if p.edge_count() == 0 && a > 0 && b > 0 {
                    return None;
                }
            }
            _ => {
                for g1 in 0..a {
                    for g2 in g1 + 1..a {
                        if p.has_edge(self.index(g1, 0), self.index(g2, 0)) {
                            ge.push((g1, g2));
                        }
                    }
                }
                for h1 in 0..b {
                    for h2 in h1 + 1..b {
                        if p.has_edge(self.index(0, h1), self.index(0, h2)) {
                            he.push((h1, h2));
                        }
                    }
                }
            }
        }
        ge.sort_unstable();
        ge.dedup();
        he.sort_unstable();
        he.dedup();
        let g = Graph::new(a, ge).ok()?;
        let h = Graph::new(b, he).ok()?;
        let rebuilt = make_product(self.kind, &g, &h).ok()?;
        (rebuilt.graph.edges() == p.edges()).then_some((g, h))
    }
}

fn factor_label(g: &Graph, v: usize) -> Label {
    match g.labels() {
        Some(labels) => labels[v].clone(),
        None => vec![v as i64],
    }
}

/// Builds `G ∗ H` for the requested product.
pub fn make_product(kind: ProductKind, g: &Graph, h: &Graph) -> Result<ProductGraph> {
    let (a, b) = (g.vertex_count(), h.vertex_count());
    if a == 0 || b == 0 {
        return Err(Error::EmptyFactor);
    }
    let n = a * b;
    let mut edges = Vec::new();
    for u in 0..n {
        let cu = (u / b, u % b);
        for v in u + 1..n {
            let cv = (v / b, v % b);
            if kind.adjacent(g, h, cu, cv) {
                edges.push((u, v));
            }
        }
    }
    let labels = (0..n)
        .map(|v| {
            let mut l = factor_label(g, v / b);
            l.extend(factor_label(h, v % b));
            l
        })
        .collect();
    let graph = Graph::new(n, edges)?.with_labels(labels)?;
    Ok(ProductGraph { graph, kind, factor_sizes: (a, b) })
}

/// Closed-form `|E(G ∗ H)|`.
pub fn edge_count_formula(kind: ProductKind, g: &Graph, h: &Graph) -> u64 {
    let (vg, eg) = (g.vertex_count() as u64, g.edge_count() as u64);
    let (vh, eh) = (h.vertex_count() as u64, h.edge_count() as u64);
    match kind {
        ProductKind::Cartesian => eg * vh + eh * vg,
        ProductKind::Lexicographic => eh * vg + eg * vh * vh,
        ProductKind::Strong => eh * vg + eg * vh + 2 * eg * eh,
        ProductKind::Direct => 2 * eg * eh,
    }
}

/// Product distance computed from factor distances.
///
/// Returns `Ok(None)` for an infinite distance. The direct product has no such
/// formula and is refused.
pub fn distance_formula(
    kind: ProductKind,
    g: &Graph,
    h: &Graph,
    (g1, h1): (usize, usize),
    (g2, h2): (usize, usize),
) -> Result<Option<usize>> {
    g.check_vertex(g1)?;
    g.check_vertex(g2)?;
    h.check_vertex(h1)?;
    h.check_vertex(h2)?;
    let dg = g.distance(g1, g2)?;
    let dh = h.distance(h1, h2)?;
    Ok(match kind {
        ProductKind::Cartesian => dg.zip(dh).map(|(x, y)| x + y),
        ProductKind::Lexicographic => {
            if g1 != g2 {
                dg
            } else if g.degree(g1) == 0 {
                dh
            } else {
                Some(dh.map_or(2, |d| d.min(2)))
            }
        }
        ProductKind::Strong => dg.zip(dh).map(|(x, y)| x.max(y)),
        ProductKind::Direct => {
            return Err(Error::NotApplicable("no distance formula for the direct product".into()))
        }
    })
}
