//! Sufficient conditions for `mc(G) = m − n + 2` on connected graphs with
//! more than three vertices.

use serde::Serialize;

use crate::connectivity::vertex_connectivity;
use crate::error::{Error, Result};
use crate::graph::Graph;

#[derive(Clone, Copy, Debug, PartialEq, Eq, PartialOrd, Ord, Hash, Serialize)]
#[serde(rename_all = "lowercase")]
pub enum Condition {
    /// the complement is 4-connected
    A,
    /// triangle-free
    B,
    /// `Δ < n − (2m − 3(n − 1))/(n − 3)`, or one of its two special cases
    C,
    /// diameter at least 3
    D,
    /// a cut vertex exists
    E,
}

impl Condition {
    pub fn letter(self) -> char {
        match self {
            Condition::A => 'a',
            Condition::B => 'b',
            Condition::C => 'c',
            Condition::D => 'd',
            Condition::E => 'e',
        }
    }
}

/// The raw quantities behind each condition.
#[derive(Clone, Debug, PartialEq, Eq, Serialize)]
pub struct CertificateDetails {
    pub complement_connectivity: usize,
    pub triangle_free: bool,
    pub max_degree: usize,
    /// `Δ(n − 3) < n² − 2m − 3`
    pub degree_inequality: bool,
    /// `2Δ ≤ n + 1`
    pub degree_half: bool,
    /// `nΔ ≤ n² − 2m`
    pub degree_average: bool,
    pub diameter: Option<usize>,
    pub cut_vertices: Vec<usize>,
}

#[derive(Clone, Debug, PartialEq, Eq, Serialize)]
pub struct Theorem1Certificate {
    pub holds: bool,
    pub conditions: Vec<Condition>,
    /// `m − n + 2` when the certificate holds.
    pub value: Option<u64>,
    pub details: CertificateDetails,
}

impl Theorem1Certificate {
    pub fn fired(&self, c: Condition) -> bool {
        self.conditions.contains(&c)
    }

    pub fn to_json(&self) -> String {
        serde_json::to_string(self).expect("certificate serialization cannot fail")
    }
}

/// Evaluates all five conditions; integer arithmetic only.
pub fn theorem1_certificate(g: &Graph) -> Result<Theorem1Certificate> {
    let n = g.vertex_count();
    if n <= 3 {
        return Err(Error::NotApplicable(format!("needs more than three vertices, got {n}")));
    }
    if !g.is_connected() {
        return Err(Error::NotApplicable("graph is disconnected".into()));
    }
    let m = g.edge_count();
    let (n_i, m_i) = (n as i128, m as i128);
    let delta = g.max_degree();
    let d_i = delta as i128;
    let details = CertificateDetails {
        complement_connectivity: vertex_connectivity(&g.complement()),
        triangle_free: g.is_triangle_free(),
        max_degree: delta,
        degree_inequality: d_i * (n_i - 3) < n_i * n_i - 2 * m_i - 3,
        degree_half: 2 * d_i <= n_i + 1,
        degree_average: n_i * d_i <= n_i * n_i - 2 * m_i,
        diameter: g.diameter(),
        cut_vertices: g.cut_vertices(),
    };
    let mut conditions = Vec::new();
    if details.complement_connectivity >= 4 {
        conditions.push(Condition::A);
    }
    if details.triangle_free {
        conditions.push(Condition::B);
    }
    if details.degree_inequality || details.degree_half || details.degree_average {
        conditions.push(Condition::C);
    }
    if details.diameter.is_some_and(|d| d >= 3) {
        conditions.push(Condition::D);
    }
    if !details.cut_vertices.is_empty() {
        conditions.push(Condition::E);
    }
    let holds = !conditions.is_empty();
    Ok(Theorem1Certificate { holds, value: holds.then(|| (m + 2 - n) as u64), conditions, details })
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::netfam::named;
    use crate::product::{make_product, ProductKind};

    #[test]
    fn petersen_is_triangle_free() {
        let c = theorem1_certificate(&named::petersen()).unwrap();
        assert!(c.holds && c.fired(Condition::B));
        assert_eq!(c.value, Some(7));
    }

    #[test]
    fn small_grid_has_diameter_three() {
        let g = make_product(ProductKind::Cartesian, &named::path(3), &named::path(2)).unwrap().graph;
        let c = theorem1_certificate(&g).unwrap();
        assert!(c.fired(Condition::D));
        assert_eq!(c.value, Some(3));
    }

    #[test]
    fn path_has_a_cut_vertex() {
        let c = theorem1_certificate(&named::path(5)).unwrap();
        assert!(c.fired(Condition::E));
        assert_eq!(c.value, Some(1));
    }

    #[test]
    fn dense_graphs_do_not_fire() {
        let c = theorem1_certificate(&named::complete(5)).unwrap();
        assert!(!c.holds && c.conditions.is_empty() && c.value.is_none());
    }

    #[test]
    fn not_applicable() {
        assert!(matches!(theorem1_certificate(&named::path(3)), Err(Error::NotApplicable(_))));
        let g = Graph::new(4, [(0, 1), (2, 3)]).unwrap();
        assert!(matches!(theorem1_certificate(&g), Err(Error::NotApplicable(_))));
    }
}
