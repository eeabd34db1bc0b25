//! Simple undirected graphs on the dense vertex range `0..n`.
//!
//! Edges are stored canonically: each pair as `(smaller, larger)` and the
//! whole list sorted lexicographically, so the edge order doubles as the
//! index space for edge colorings.

use std::collections::{HashSet, VecDeque};
use std::fmt;

use serde::{Deserialize, Serialize};

use crate::error::{Error, Result};

/// A per-vertex coordinate tuple, used for product vertices.
pub type Label = Vec<i64>;

#[derive(Clone, PartialEq, Eq, Serialize, Deserialize)]
#[serde(try_from = "GraphRepr", into = "GraphRepr")]
pub struct Graph {
    n: usize,
    edges: Vec<(usize, usize)>,
    adj: Vec<Vec<usize>>,
    labels: Option<Vec<Label>>,
}

#[derive(Serialize, Deserialize)]
struct GraphRepr {
    n: usize,
    edges: Vec<[usize; 2]>,
    #[serde(default, skip_serializing_if = "Option::is_none")]
    labels: Option<Vec<Label>>,
}

impl TryFrom<GraphRepr> for Graph {
    type Error = Error;

    fn try_from(repr: GraphRepr) -> Result<Self> {
        let g = Graph::new(repr.n, repr.edges.iter().map(|e| (e[0], e[1])))?;
        match repr.labels {
            Some(labels) => g.with_labels(labels),
            None => Ok(g),
        }
    }
}

impl From<Graph> for GraphRepr {
    fn from(g: Graph) -> Self {
        GraphRepr {
            n: g.n,
            edges: g.edges.iter().map(|&(u, v)| [u, v]).collect(),
            labels: g.labels,
        }
    }
}

impl fmt::Debug for Graph {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "Graph(n={}, edges={:?})", self.n, self.edges)
    }
}

impl Graph {
    /// Builds a validated graph. Edges may be given in either orientation;
    /// loops, repeated pairs and out-of-range endpoints are rejected with the
    /// offending pair.
    pub fn new<I>(vertex_count: usize, edge_list: I) -> Result<Self>
    where
        I: IntoIterator<Item = (usize, usize)>,
    {
        let mut seen = HashSet::new();
        let mut edges = Vec::new();
        for (u, v) in edge_list {
            if u >= vertex_count || v >= vertex_count {
                return Err(Error::EndpointOutOfRange(u, v, vertex_count));
            }
            if u == v {
                return Err(Error::Loop(u));
            }
            let e = (u.min(v), u.max(v));
            if !seen.insert(e) {
                return Err(Error::Duplicate(u, v));
            }
            edges.push(e);
        }
        edges.sort_unstable();
        let mut adj = vec![Vec::new(); vertex_count];
        for &(u, v) in &edges {
            adj[u].push(v);
            adj[v].push(u);
        }
        for list in &mut adj {
            list.sort_unstable();
        }
        Ok(Graph { n: vertex_count, edges, adj, labels: None })
    }

    pub fn empty(vertex_count: usize) -> Self {
        Graph { n: vertex_count, edges: Vec::new(), adj: vec![Vec::new(); vertex_count], labels: None }
    }

    /// Attaches per-vertex labels; there must be exactly one per vertex and
    /// they must be pairwise distinct.
    pub fn with_labels(mut self, labels: Vec<Label>) -> Result<Self> {
        if labels.len() != self.n {
            return Err(Error::InvalidLabels(format!(
                "expected {} labels, got {}",
                self.n,
                labels.len()
            )));
        }
        let distinct: HashSet<&Label> = labels.iter().collect();
        if distinct.len() != labels.len() {
            return Err(Error::InvalidLabels("labels are not distinct".into()));
        }
        self.labels = Some(labels);
        Ok(self)
    }

    pub fn without_labels(mut self) -> Self {
        self.labels = None;
        self
    }

    pub fn vertex_count(&self) -> usize {
        self.n
    }

    pub fn edge_count(&self) -> usize {
        self.edges.len()
    }

    pub fn edges(&self) -> &[(usize, usize)] {
        &self.edges
    }

    pub fn labels(&self) -> Option<&[Label]> {
        self.labels.as_deref()
    }

    pub fn neighbors(&self, v: usize) -> &[usize] {
        &self.adj[v]
    }

    pub fn degree(&self, v: usize) -> usize {
        self.adj[v].len()
    }

    pub fn has_edge(&self, u: usize, v: usize) -> bool {
        u < self.n && v < self.n && self.adj[u].binary_search(&v).is_ok()
    }

    /// Position of the edge `{u, v}` in the canonical edge order.
    pub fn edge_index(&self, u: usize, v: usize) -> Option<usize> {
        let e = (u.min(v), u.max(v));
        self.edges.binary_search(&e).ok()
    }

    pub fn check_vertex(&self, v: usize) -> Result<()> {
        if v < self.n {
            Ok(())
        } else {
            Err(Error::InvalidVertex(v, self.n))
        }
    }

    pub fn min_degree(&self) -> usize {
        (0..self.n).map(|v| self.degree(v)).min().unwrap_or(0)
    }

    pub fn max_degree(&self) -> usize {
        (0..self.n).map(|v| self.degree(v)).max().unwrap_or(0)
    }

    pub fn degree_sequence(&self) -> Vec<usize> {
        let mut seq: Vec<usize> = (0..self.n).map(|v| self.degree(v)).collect();
        seq.sort_unstable_by(|a, b| b.cmp(a));
        seq
    }

    /// Breadth-first distances from `source`; `None` marks unreachable vertices.
    pub fn bfs(&self, source: usize) -> Vec<Option<usize>> {
        let mut dist = vec![None; self.n];
        if source >= self.n {
            return dist;
        }
        dist[source] = Some(0);
        let mut queue = VecDeque::from([source]);
        while let Some(u) = queue.pop_front() {
            let du = dist[u].unwrap();
            for &w in &self.adj[u] {
                if dist[w].is_none() {
                    dist[w] = Some(du + 1);
                    queue.push_back(w);
                }
            }
        }
        dist
    }

    /// All-pairs distance matrix (`None` = infinite).
    pub fn distance_matrix(&self) -> Vec<Vec<Option<usize>>> {
        (0..self.n).map(|s| self.bfs(s)).collect()
    }

    /// Shortest-path length between `u` and `v`; `Ok(None)` when they lie in
    /// different components.
    pub fn distance(&self, u: usize, v: usize) -> Result<Option<usize>> {
        self.check_vertex(u)?;
        self.check_vertex(v)?;
        Ok(self.bfs(u)[v])
    }

    /// Largest pairwise distance; `None` (infinite) for disconnected graphs,
    /// `Some(0)` for graphs with at most one vertex.
    pub fn diameter(&self) -> Option<usize> {
        let mut best = 0;
        for s in 0..self.n {
            for d in self.bfs(s) {
                best = best.max(d?);
            }
        }
        Some(best)
    }

    pub fn component_count(&self) -> usize {
        let mut seen = vec![false; self.n];
        let mut count = 0;
        for s in 0..self.n {
            if seen[s] {
                continue;
            }
            count += 1;
            seen[s] = true;
            let mut stack = vec![s];
            while let Some(u) = stack.pop() {
                for &w in &self.adj[u] {
                    if !seen[w] {
                        seen[w] = true;
                        stack.push(w);
                    }
                }
            }
        }
        count
    }

    /// One component (vacuously true for `n <= 1`).
    pub fn is_connected(&self) -> bool {
        self.component_count() <= 1
    }

    pub fn is_tree(&self) -> bool {
        self.n >= 1 && self.is_connected() && self.edges.len() + 1 == self.n
    }

    pub fn is_complete(&self) -> bool {
        self.edges.len() == self.n * self.n.saturating_sub(1) / 2
    }

    /// Two-colorability by breadth-first layering.
    pub fn is_bipartite(&self) -> bool {
        let mut side: Vec<Option<bool>> = vec![None; self.n];
        for s in 0..self.n {
            if side[s].is_some() {
                continue;
            }
            side[s] = Some(false);
            let mut queue = VecDeque::from([s]);
            while let Some(u) = queue.pop_front() {
                let su = side[u].unwrap();
                for &w in &self.adj[u] {
                    match side[w] {
                        None => {
                            side[w] = Some(!su);
                            queue.push_back(w);
                        }
                        Some(sw) if sw == su => return false,
                        _ => {}
                    }
                }
            }
        }
        true
    }

    pub fn is_triangle_free(&self) -> bool {
        self.edges.iter().all(|&(u, v)| {
            let (a, b) = (&self.adj[u], &self.adj[v]);
            let (mut i, mut j) = (0, 0);
            while i < a.len() && j < b.len() {
                match a[i].cmp(&b[j]) {
                    std::cmp::Ordering::Less => i += 1,
                    std::cmp::Ordering::Greater => j += 1,
                    std::cmp::Ordering::Equal => return false,
                }
            }
            true
        })
    }

    pub fn complement(&self) -> Graph {
        let mut edges = Vec::new();
        for u in 0..self.n {
            for v in u + 1..self.n {
                if !self.has_edge(u, v) {
                    edges.push((u, v));
                }
            }
        }
        let g = Graph::new(self.n, edges).expect("complement edges are canonical");
        match &self.labels {
            Some(l) => g.with_labels(l.clone()).expect("labels already validated"),
            None => g,
        }
    }

    /// The subgraph induced by the unflagged vertices, renumbered in order.
    pub fn remove_vertices(&self, removed: &[bool]) -> Graph {
        let mut index = vec![usize::MAX; self.n];
        let mut next = 0;
        for v in 0..self.n {
            if !removed[v] {
                index[v] = next;
                next += 1;
            }
        }
        let edges = self
            .edges
            .iter()
            .filter(|&&(u, v)| !removed[u] && !removed[v])
            .map(|&(u, v)| (index[u], index[v]));
        Graph::new(next, edges).expect("induced subgraph is simple")
    }

    /// Components as sorted vertex lists, ordered by smallest vertex.
    pub fn components(&self) -> Vec<Vec<usize>> {
        let mut comp = vec![usize::MAX; self.n];
        let mut out: Vec<Vec<usize>> = Vec::new();
        for s in 0..self.n {
            if comp[s] != usize::MAX {
                continue;
            }
            let id = out.len();
            comp[s] = id;
            let mut members = vec![s];
            let mut stack = vec![s];
            while let Some(u) = stack.pop() {
                for &w in &self.adj[u] {
                    if comp[w] == usize::MAX {
                        comp[w] = id;
                        members.push(w);
                        stack.push(w);
                    }
                }
            }
            members.sort_unstable();
            out.push(members);
        }
        out
    }

    /// Vertices whose removal increases the number of components.
    pub fn cut_vertices(&self) -> Vec<usize> {
        let base = self.component_count();
        let mut removed = vec![false; self.n];
        let mut out = Vec::new();
        for v in 0..self.n {
            removed[v] = true;
            // An isolated vertex disappears with its component.
            let lost = usize::from(self.degree(v) == 0);
            if self.remove_vertices(&removed).component_count() + lost > base {
                out.push(v);
            }
            removed[v] = false;
        }
        out
    }

    /// Canonical compact JSON (`{"n":..,"edges":[..]}` plus optional labels).
    pub fn to_json(&self) -> String {
        serde_json::to_string(self).expect("graph serialization cannot fail")
    }

    pub fn from_json(text: &str) -> Result<Self> {
        serde_json::from_str(text).map_err(|e| Error::Parse(e.to_string()))
    }

    /// Plain edge list: first line `n m`, then `m` lines `u v`.
    pub fn from_edge_list(text: &str) -> Result<Self> {
        let mut nums = text
            .split_whitespace()
            .map(|t| t.parse::<usize>().map_err(|e| Error::Parse(format!("{t:?}: {e}"))));
        let mut next = |what: &str| -> Result<usize> {
            nums.next().unwrap_or_else(|| Err(Error::Parse(format!("missing {what}"))))
        };
        let n = next("vertex count")?;
        let m = next("edge count")?;
        let mut edges = Vec::with_capacity(m);
        for _ in 0..m {
            let u = next("edge endpoint")?;
            let v = next("edge endpoint")?;
            edges.push((u, v));
        }
        if nums.next().is_some() {
            return Err(Error::Parse("trailing tokens after edge list".into()));
        }
        Graph::new(n, edges)
    }

    /// Parses either the JSON format or the plain edge list.
    pub fn parse(text: &str) -> Result<Self> {
        if text.trim_start().starts_with('{') {
            Graph::from_json(text)
        } else {
            Graph::from_edge_list(text)
        }
    }

    pub fn to_edge_list(&self) -> String {
        let mut out = format!("{} {}\n", self.n, self.edges.len());
        for &(u, v) in &self.edges {
            out.push_str(&format!("{u} {v}\n"));
        }
        out
    }
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::netfam::named;

    #[test]
    fn build_path_and_reject_bad_edges() {
        let p3 = Graph::new(3, [(0, 1), (2, 1)]).unwrap();
        assert_eq!(p3.edges(), &[(0, 1), (1, 2)]);
        assert_eq!(Graph::new(3, [(0, 0)]), Err(Error::Loop(0)));
        assert_eq!(Graph::new(2, [(0, 1), (1, 0)]), Err(Error::Duplicate(1, 0)));
        assert_eq!(Graph::new(2, [(0, 2)]), Err(Error::EndpointOutOfRange(0, 2, 2)));
    }

    #[test]
    fn predicates() {
        assert!(named::path(3).is_connected());
        assert!(!Graph::new(4, [(0, 1), (2, 3)]).unwrap().is_connected());
        assert!(named::complete(4).is_connected());
        assert!(Graph::empty(1).is_connected());
        assert!(Graph::empty(0).is_connected());

        assert!(named::path(4).is_tree());
        assert!(!named::cycle(4).is_tree());
        assert!(named::star(4).is_tree());

        assert!(named::cycle(4).is_bipartite());
        assert!(!named::cycle(5).is_bipartite());
        assert!(!named::petersen().is_bipartite());
    }

    #[test]
    fn complement_examples() {
        assert_eq!(named::complete(4).complement().edge_count(), 0);
        let c = named::path(3).complement();
        assert_eq!(c.edges(), &[(0, 2)]);
        assert_eq!(c.degree(1), 0);
        let c5 = named::cycle(5).complement();
        assert_eq!(c5.edge_count(), 5);
        assert_eq!(c5.degree_sequence(), vec![2; 5]);
        assert!(c5.is_connected());
    }

    #[test]
    fn distances_and_diameter() {
        assert_eq!(named::path(4).distance(0, 3), Ok(Some(3)));
        assert_eq!(named::cycle(6).distance(0, 3), Ok(Some(3)));
        assert_eq!(named::path(4).distance(0, 9), Err(Error::InvalidVertex(9, 4)));
        assert_eq!(named::complete(5).diameter(), Some(1));
        assert_eq!(named::cycle(6).diameter(), Some(3));
        assert_eq!(Graph::empty(1).diameter(), Some(0));
        assert_eq!(Graph::empty(2).diameter(), None);
        let g = Graph::new(4, [(0, 1), (2, 3)]).unwrap();
        assert_eq!(g.distance(0, 3), Ok(None));
    }

    #[test]
    fn cut_vertices_of_path_and_cycle() {
        assert_eq!(named::path(5).cut_vertices(), vec![1, 2, 3]);
        assert!(named::cycle(5).cut_vertices().is_empty());
    }

    #[test]
    fn json_is_canonical_and_byte_stable() {
        let g = Graph::new(3, [(2, 1), (0, 1)]).unwrap();
        let text = g.to_json();
        assert_eq!(text, r#"{"n":3,"edges":[[0,1],[1,2]]}"#);
        let back = Graph::from_json(&text).unwrap();
        assert_eq!(back, g);
        assert_eq!(back.to_json(), text);
        let labeled = g.with_labels(vec![vec![0, 0], vec![0, 1], vec![1, 0]]).unwrap();
        assert_eq!(Graph::from_json(&labeled.to_json()).unwrap(), labeled);
    }

    #[test]
    fn json_rejects_invalid_graphs() {
        assert!(Graph::from_json(r#"{"n":2,"edges":[[0,0]]}"#).is_err());
        assert!(Graph::from_json(r#"{"n":2,"edges":[[0,1]],"labels":[[1],[1]]}"#).is_err());
    }

    #[test]
    fn edge_list_format() {
        let g = Graph::parse("4 3\n0 1\n1 2\n2 3\n").unwrap();
        assert_eq!(g, named::path(4));
        assert_eq!(Graph::parse(&g.to_edge_list()).unwrap(), g);
        assert!(Graph::parse("3 2\n0 1\n").is_err());
    }
}
