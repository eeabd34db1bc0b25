//! Edge colorings and the monochromatic-connection check.

use serde::{Deserialize, Serialize};

use crate::error::{Error, Result};
use crate::graph::Graph;

/// A total edge coloring of a host graph, indexed by the host's canonical
/// edge order. Color ids are renumbered to `0..k` by first appearance.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct EdgeColoring {
    colors: Vec<usize>,
    count: usize,
}

#[derive(Serialize, Deserialize)]
struct ColoringRepr {
    edges: Vec<[usize; 2]>,
    colors: Vec<usize>,
}

impl EdgeColoring {
    pub fn new(host: &Graph, colors: Vec<usize>) -> Result<Self> {
        if colors.len() != host.edge_count() {
            return Err(Error::ColoringMismatch(format!(
                "{} colors for {} edges",
                colors.len(),
                host.edge_count()
            )));
        }
        Ok(Self::normalized(colors))
    }

    fn normalized(colors: Vec<usize>) -> Self {
        let mut map = std::collections::HashMap::new();
        let colors: Vec<usize> = colors
            .into_iter()
            .map(|c| {
                let next = map.len();
                *map.entry(c).or_insert(next)
            })
            .collect();
        EdgeColoring { count: map.len(), colors }
    }

    /// Every edge its own color.
    pub fn all_distinct(host: &Graph) -> Self {
        Self::normalized((0..host.edge_count()).collect())
    }

    pub fn colors(&self) -> &[usize] {
        &self.colors
    }

    pub fn color_of(&self, edge: usize) -> usize {
        self.colors[edge]
    }

    pub fn color_count(&self) -> usize {
        self.count
    }

    pub fn classes(&self) -> Vec<Vec<usize>> {
        let mut classes = vec![Vec::new(); self.count];
        for (e, &c) in self.colors.iter().enumerate() {
            classes[c].push(e);
        }
        classes
    }

    /// Recolors every edge of color `b` with color `a`.
    pub fn merge(&self, a: usize, b: usize) -> Self {
        Self::normalized(self.colors.iter().map(|&c| if c == b { a } else { c }).collect())
    }

    pub fn to_json(&self, host: &Graph) -> String {
        let repr = ColoringRepr {
            edges: host.edges().iter().map(|&(u, v)| [u, v]).collect(),
            colors: self.colors.clone(),
        };
        serde_json::to_string(&repr).expect("coloring serialization cannot fail")
    }

    /// Parses the coloring JSON and checks its edge list against `host`.
    pub fn from_json(host: &Graph, text: &str) -> Result<Self> {
        let repr: ColoringRepr = serde_json::from_str(text).map_err(|e| Error::Parse(e.to_string()))?;
        if repr.edges.len() != repr.colors.len() {
            return Err(Error::ColoringMismatch("edges and colors differ in length".into()));
        }
        let listed: Vec<(usize, usize)> = repr.edges.iter().map(|e| (e[0].min(e[1]), e[0].max(e[1]))).collect();
        if listed != host.edges() {
            return Err(Error::ColoringMismatch("edge list differs from the host graph".into()));
        }
        Self::new(host, repr.colors)
    }
}

impl Serialize for EdgeColoring {
    fn serialize<S: serde::Serializer>(&self, s: S) -> std::result::Result<S::Ok, S::Error> {
        self.colors.serialize(s)
    }
}

#[derive(Clone, Debug, PartialEq, Eq, Serialize)]
#[serde(tag = "verdict", rename_all = "lowercase")]
pub enum McCheck {
    Valid { colors: usize },
    Invalid { pair: (usize, usize) },
}

impl McCheck {
    pub fn is_valid(&self) -> bool {
        matches!(self, McCheck::Valid { .. })
    }
}

fn find(parent: &mut [usize], mut x: usize) -> usize {
    while parent[x] != x {
        parent[x] = parent[parent[x]];
        x = parent[x];
    }
    x
}

/// Component id per vertex for each color class.
pub(crate) fn class_components(host: &Graph, coloring: &EdgeColoring) -> Vec<Vec<usize>> {
    let n = host.vertex_count();
    let mut out = Vec::with_capacity(coloring.color_count());
    let mut by_class = vec![Vec::new(); coloring.color_count()];
    for (e, &c) in coloring.colors.iter().enumerate() {
        by_class[c].push(host.edges()[e]);
    }
    for edges in by_class {
        let mut parent: Vec<usize> = (0..n).collect();
        for (u, v) in edges {
            let (ru, rv) = (find(&mut parent, u), find(&mut parent, v));
            if ru != rv {
                parent[ru] = rv;
            }
        }
        out.push((0..n).map(|v| find(&mut parent, v)).collect());
    }
    out
}

/// Checks that every vertex pair is joined by a monochromatic path. On
/// failure the lexicographically smallest unserved pair is reported.
pub fn check_mc_coloring(host: &Graph, coloring: &EdgeColoring) -> Result<McCheck> {
    if coloring.colors.len() != host.edge_count() {
        return Err(Error::ColoringMismatch(format!(
            "{} colors for {} edges",
            coloring.colors.len(),
            host.edge_count()
        )));
    }
    let comps = class_components(host, coloring);
    let n = host.vertex_count();
    for u in 0..n {
        for v in u + 1..n {
            if !comps.iter().any(|c| c[u] == c[v]) {
                return Ok(McCheck::Invalid { pair: (u, v) });
            }
        }
    }
    Ok(McCheck::Valid { colors: coloring.color_count() })
}

/// One color on a breadth-first spanning tree, a fresh color on every other
/// edge: `m - n + 2` colors.
pub fn spanning_tree_coloring(host: &Graph) -> Result<EdgeColoring> {
    if !host.is_connected() {
        return Err(Error::Disconnected);
    }
    let n = host.vertex_count();
    let mut in_tree = vec![false; host.edge_count()];
    let mut seen = vec![false; n];
    if n > 0 {
        seen[0] = true;
        let mut queue = std::collections::VecDeque::from([0]);
        while let Some(u) = queue.pop_front() {
            for &w in host.neighbors(u) {
                if !seen[w] {
                    seen[w] = true;
                    in_tree[host.edge_index(u, w).unwrap()] = true;
                    queue.push_back(w);
                }
            }
        }
    }
    let mut fresh = 1;
    let colors = in_tree
        .iter()
        .map(|&t| {
            if t {
                0
            } else {
                fresh += 1;
                fresh - 1
            }
        })
        .collect();
    EdgeColoring::new(host, colors)
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::netfam::named;

    #[test]
    fn check_examples() {
        let p3 = named::path(3);
        let one = EdgeColoring::new(&p3, vec![0, 0]).unwrap();
        assert_eq!(check_mc_coloring(&p3, &one), Ok(McCheck::Valid { colors: 1 }));
        let two = EdgeColoring::new(&p3, vec![0, 1]).unwrap();
        assert_eq!(check_mc_coloring(&p3, &two), Ok(McCheck::Invalid { pair: (0, 2) }));
        let k3 = named::complete(3);
        assert_eq!(check_mc_coloring(&k3, &EdgeColoring::all_distinct(&k3)), Ok(McCheck::Valid { colors: 3 }));
    }

    #[test]
    fn mismatched_coloring() {
        let p3 = named::path(3);
        assert!(EdgeColoring::new(&p3, vec![0]).is_err());
        let k3 = named::complete(3);
        let c = EdgeColoring::all_distinct(&k3);
        assert!(check_mc_coloring(&p3, &c).is_err());
    }

    #[test]
    fn colors_are_renumbered() {
        let c4 = named::cycle(4);
        let c = EdgeColoring::new(&c4, vec![7, 3, 7, 9]).unwrap();
        assert_eq!(c.colors(), &[0, 1, 0, 2]);
        assert_eq!(c.color_count(), 3);
    }

    #[test]
    fn spanning_tree_examples() {
        assert_eq!(spanning_tree_coloring(&named::cycle(4)).unwrap().color_count(), 2);
        assert_eq!(spanning_tree_coloring(&named::complete(4)).unwrap().color_count(), 4);
        assert_eq!(spanning_tree_coloring(&named::path(5)).unwrap().color_count(), 1);
        let g = Graph::new(4, [(0, 1), (2, 3)]).unwrap();
        assert_eq!(spanning_tree_coloring(&g), Err(Error::Disconnected));
    }

    #[test]
    fn json_roundtrip() {
        let g = named::cycle(4);
        let c = spanning_tree_coloring(&g).unwrap();
        let text = c.to_json(&g);
        assert_eq!(text, r#"{"edges":[[0,1],[0,3],[1,2],[2,3]],"colors":[0,0,0,1]}"#);
        assert_eq!(EdgeColoring::from_json(&g, &text).unwrap(), c);
        assert!(EdgeColoring::from_json(&named::path(4), &text).is_err());
    }
}
