//! Named graphs and the interconnection-network families built from them by
//! iterated products.

use std::fmt;
use std::str::FromStr;

use serde::{Deserialize, Serialize};

use crate::error::{Error, Result};
use crate::graph::Graph;
use crate::product::{make_product, ProductGraph, ProductKind};

/// Small named graphs used as factors.
pub mod named {
    use crate::graph::Graph;
    use crate::product::ProductKind;

    pub fn path(n: usize) -> Graph {
        Graph::new(n, (1..n).map(|i| (i - 1, i))).expect("path is simple")
    }

    /// `C_n` for `n >= 3`.
    pub fn cycle(n: usize) -> Graph {
        assert!(n >= 3, "cycle needs at least three vertices");
        Graph::new(n, (0..n).map(|i| (i, (i + 1) % n))).expect("cycle is simple")
    }

    pub fn complete(n: usize) -> Graph {
        Graph::new(n, (0..n).flat_map(|u| (u + 1..n).map(move |v| (u, v)))).expect("clique is simple")
    }

    /// `K_{1,n-1}`: centre 0 joined to the other `n - 1` vertices.
    pub fn star(n: usize) -> Graph {
        Graph::new(n, (1..n).map(|i| (0, i))).expect("star is simple")
    }

    /// Outer 5-cycle on 0..5, inner pentagram on 5..10, spokes `i`–`i+5`.
    pub fn petersen() -> Graph {
        let mut edges = Vec::new();
        for i in 0..5 {
            edges.push((i, (i + 1) % 5));
            edges.push((i, i + 5));
            edges.push((5 + i, 5 + (i + 2) % 5));
        }
        Graph::new(10, edges).expect("petersen is simple")
    }

    /// `Q_d` as the `d`-fold Cartesian power of `K_2`; `Q_0 = K_1`.
    pub fn hypercube(d: usize) -> Graph {
        super::iterated(ProductKind::Cartesian, std::iter::repeat_with(|| path(2)).take(d))
            .unwrap_or_else(|| Graph::empty(1))
    }
}

/// Left-associated iterated product; `None` for an empty factor list.
pub fn iterated<I: IntoIterator<Item = Graph>>(kind: ProductKind, factors: I) -> Option<Graph> {
    factors.into_iter().reduce(|acc, f| make_product(kind, &acc, &f).expect("factors are non-empty").graph)
}

#[derive(Clone, Copy, Debug, PartialEq, Eq, Hash, Serialize, Deserialize)]
#[serde(rename_all = "snake_case")]
pub enum Family {
    Path,
    Cycle,
    Clique,
    Star,
    Hypercube,
    Petersen,
    Grid,
    Mesh,
    LexMesh,
    Torus,
    LexTorus,
    GeneralizedHypercube,
    LexGeneralizedHypercube,
    HyperPetersen,
    Hl,
}

impl Family {
    pub const ALL: [Family; 15] = [
        Family::Path,
        Family::Cycle,
        Family::Clique,
        Family::Star,
        Family::Hypercube,
        Family::Petersen,
        Family::Grid,
        Family::Mesh,
        Family::LexMesh,
        Family::Torus,
        Family::LexTorus,
        Family::GeneralizedHypercube,
        Family::LexGeneralizedHypercube,
        Family::HyperPetersen,
        Family::Hl,
    ];

    pub fn name(self) -> &'static str {
        match self {
            Family::Path => "path",
            Family::Cycle => "cycle",
            Family::Clique => "clique",
            Family::Star => "star",
            Family::Hypercube => "hypercube",
            Family::Petersen => "petersen",
            Family::Grid => "grid",
            Family::Mesh => "mesh",
            Family::LexMesh => "lex_mesh",
            Family::Torus => "torus",
            Family::LexTorus => "lex_torus",
            Family::GeneralizedHypercube => "generalized_hypercube",
            Family::LexGeneralizedHypercube => "lex_generalized_hypercube",
            Family::HyperPetersen => "hyper_petersen",
            Family::Hl => "hl",
        }
    }
}

impl fmt::Display for Family {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.write_str(self.name())
    }
}

impl FromStr for Family {
    type Err = Error;

    fn from_str(s: &str) -> Result<Self> {
        let key = s.to_ascii_lowercase().replace('-', "_");
        Family::ALL
            .into_iter()
            .find(|f| f.name() == key)
            .ok_or_else(|| Error::InvalidSpec(format!("unknown family {s:?}")))
    }
}

#[derive(Clone, Debug, PartialEq, Eq, Hash, Serialize, Deserialize)]
pub struct NetworkSpec {
    pub family: Family,
    pub params: Vec<usize>,
}

impl NetworkSpec {
    pub fn new(family: Family, params: impl Into<Vec<usize>>) -> Self {
        NetworkSpec { family, params: params.into() }
    }

    pub fn validate(&self) -> Result<()> {
        let p = &self.params;
        let bad = |msg: String| Err(Error::InvalidSpec(format!("{}: {msg}", self.family)));
        let arity = |want: usize| -> Result<()> {
            if p.len() == want {
                Ok(())
            } else {
                bad(format!("expected {want} parameter(s), got {}", p.len()))
            }
        };
        if p.contains(&0) {
            return bad("parameters must be positive".into());
        }
        match self.family {
            Family::Path | Family::Clique | Family::Star | Family::Hypercube => arity(1),
            Family::Cycle => {
                arity(1)?;
                if p[0] < 3 {
                    return bad("a cycle needs at least three vertices".into());
                }
                Ok(())
            }
            Family::Petersen => arity(0),
            Family::Grid => arity(2),
            Family::Mesh | Family::LexMesh => {
                if p.is_empty() {
                    return bad("needs at least one dimension".into());
                }
                Ok(())
            }
            Family::Torus | Family::LexTorus => {
                if p.is_empty() {
                    return bad("needs at least one ring".into());
                }
                if p.iter().any(|&r| r < 3) {
                    return bad("rings must have size at least three".into());
                }
                Ok(())
            }
            Family::GeneralizedHypercube | Family::LexGeneralizedHypercube => {
                if p.is_empty() {
                    return bad("needs at least one clique".into());
                }
                if p.iter().any(|&m| m < 2) {
                    return bad("cliques must have at least two vertices".into());
                }
                Ok(())
            }
            Family::HyperPetersen | Family::Hl => {
                arity(1)?;
                if p[0] < 3 {
                    return bad("dimension must be at least 3".into());
                }
                Ok(())
            }
        }
    }

    /// Factor list and product kind for the product-built families.
    pub fn factors(&self) -> Option<(ProductKind, Vec<Graph>)> {
        let p = &self.params;
        let paths = || p.iter().map(|&l| named::path(l)).collect();
        let rings = || p.iter().map(|&r| named::cycle(r)).collect();
        let cliques = || p.iter().map(|&m| named::complete(m)).collect();
        Some(match self.family {
            Family::Grid | Family::Mesh => (ProductKind::Cartesian, paths()),
            Family::LexMesh => (ProductKind::Lexicographic, paths()),
            Family::Torus => (ProductKind::Cartesian, rings()),
            Family::LexTorus => (ProductKind::Lexicographic, rings()),
            Family::GeneralizedHypercube => (ProductKind::Cartesian, cliques()),
            Family::LexGeneralizedHypercube => (ProductKind::Lexicographic, cliques()),
            Family::HyperPetersen => (ProductKind::Cartesian, vec![named::hypercube(p[0] - 3), named::petersen()]),
            Family::Hl => (ProductKind::Lexicographic, vec![named::hypercube(p[0] - 3), named::petersen()]),
            _ => return None,
        })
    }

    pub fn label(&self) -> String {
        let params: Vec<String> = self.params.iter().map(ToString::to_string).collect();
        format!("{}({})", self.family, params.join(","))
    }
}

impl fmt::Display for NetworkSpec {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.write_str(&self.label())
    }
}

/// Builds the family instance; products associate to the left.
pub fn generate(spec: &NetworkSpec) -> Result<Graph> {
    spec.validate()?;
    let p = &spec.params;
    Ok(match spec.family {
        Family::Path => named::path(p[0]),
        Family::Cycle => named::cycle(p[0]),
        Family::Clique => named::complete(p[0]),
        Family::Star => named::star(p[0]),
        Family::Hypercube => named::hypercube(p[0]),
        Family::Petersen => named::petersen(),
        _ => {
            let (kind, factors) = spec.factors().expect("product family");
            iterated(kind, factors).expect("validated non-empty")
        }
    })
}

/// The instance as its final binary product step, for product families
/// with at least two factors: `(A_1 ∗ … ∗ A_{k−1}) ∗ A_k`.
pub fn generate_product(spec: &NetworkSpec) -> Result<Option<ProductGraph>> {
    spec.validate()?;
    let Some((kind, mut factors)) = spec.factors() else {
        return Ok(None);
    };
    if factors.len() < 2 {
        return Ok(None);
    }
    let last = factors.pop().expect("at least two factors");
    let head = iterated(kind, factors).expect("non-empty");
    make_product(kind, &head, &last).map(Some)
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::product::edge_count_formula;

    fn gen(family: Family, params: &[usize]) -> Result<Graph> {
        generate(&NetworkSpec::new(family, params))
    }

    #[test]
    fn generator_examples() {
        let grid = gen(Family::Grid, &[3, 2]).unwrap();
        assert_eq!((grid.vertex_count(), grid.edge_count()), (6, 7));
        let hp3 = gen(Family::HyperPetersen, &[3]).unwrap();
        assert_eq!((hp3.vertex_count(), hp3.edge_count()), (10, 15));
        assert_eq!(hp3.clone().without_labels(), named::petersen());
        let hl4 = gen(Family::Hl, &[4]).unwrap();
        assert_eq!((hl4.vertex_count(), hl4.edge_count()), (20, 130));
        let q3 = gen(Family::GeneralizedHypercube, &[2, 2, 2]).unwrap();
        assert_eq!((q3.vertex_count(), q3.edge_count()), (8, 12));
        assert_eq!(q3.without_labels(), named::hypercube(3).without_labels());
    }

    #[test]
    fn invalid_specs() {
        assert!(gen(Family::Torus, &[2, 3]).is_err());
        assert!(gen(Family::Grid, &[3]).is_err());
        assert!(gen(Family::HyperPetersen, &[2]).is_err());
        assert!(gen(Family::Petersen, &[1]).is_err());
        assert!(gen(Family::Mesh, &[]).is_err());
        assert!(gen(Family::Path, &[0]).is_err());
        assert!("nonsense".parse::<Family>().is_err());
        assert_eq!("lex-mesh".parse::<Family>(), Ok(Family::LexMesh));
    }

    #[test]
    fn iterated_counts_match_formula() {
        for spec in [
            NetworkSpec::new(Family::Mesh, [2, 3, 2]),
            NetworkSpec::new(Family::LexMesh, [2, 3, 2]),
            NetworkSpec::new(Family::Torus, [3, 4, 3]),
            NetworkSpec::new(Family::LexTorus, [3, 3]),
            NetworkSpec::new(Family::GeneralizedHypercube, [3, 2, 2]),
            NetworkSpec::new(Family::LexGeneralizedHypercube, [2, 3]),
            NetworkSpec::new(Family::HyperPetersen, [5]),
        ] {
            let (kind, factors) = spec.factors().unwrap();
            let mut acc = factors[0].clone();
            let mut expect_m = acc.edge_count() as u64;
            for f in &factors[1..] {
                expect_m = edge_count_formula(kind, &acc, f);
                acc = make_product(kind, &acc, f).unwrap().graph;
            }
            let g = generate(&spec).unwrap();
            let expect_n: usize = factors.iter().map(Graph::vertex_count).product();
            assert_eq!(g.vertex_count(), expect_n, "{spec}");
            assert_eq!(g.edge_count() as u64, expect_m, "{spec}");
        }
    }

    #[test]
    fn lexicographic_clique_family_is_complete() {
        let g = gen(Family::LexGeneralizedHypercube, &[2, 3, 2]).unwrap();
        assert!(g.is_complete());
        assert_eq!(g.vertex_count(), 12);
    }

    #[test]
    fn last_product_step() {
        let spec = NetworkSpec::new(Family::Hl, [4]);
        let p = generate_product(&spec).unwrap().unwrap();
        assert_eq!((p.kind, p.factor_sizes), (ProductKind::Lexicographic, (2, 10)));
        assert_eq!(p.graph, generate(&spec).unwrap());
        assert!(generate_product(&NetworkSpec::new(Family::Mesh, [3])).unwrap().is_none());
        assert!(generate_product(&NetworkSpec::new(Family::Petersen, [])).unwrap().is_none());
    }

    #[test]
    fn hyper_petersen_three_and_hl_three_coincide() {
        let hp = gen(Family::HyperPetersen, &[3]).unwrap();
        let hl = gen(Family::Hl, &[3]).unwrap();
        assert_eq!(hp, hl);
    }
}
