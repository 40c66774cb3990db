use std::collections::HashMap;

use super::Multigraph;
use crate::error::{Error, Result};

/// Hypergraph whose hyperedges are multisets of vertices, stored as lists of
/// vertex indices with repetition.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct Hypergraph {
    vertices: Vec<String>,
    hyperedges: Vec<Vec<usize>>,
}

impl Hypergraph {
    pub fn new<S: Into<String>>(vertices: Vec<S>, hyperedges: Vec<Vec<S>>) -> Result<Self> {
        let vertices: Vec<String> = vertices.into_iter().map(Into::into).collect();
        let mut index = HashMap::new();
        for (i, v) in vertices.iter().enumerate() {
            if index.insert(v.clone(), i).is_some() {
                return Err(Error::DuplicateVertex(v.clone()));
            }
        }
        let mut edges = Vec::with_capacity(hyperedges.len());
        for (k, members) in hyperedges.into_iter().enumerate() {
            if members.is_empty() {
                return Err(Error::EmptyHyperedge(k));
            }
            let mut out = Vec::with_capacity(members.len());
            for m in members {
                let m: String = m.into();
                let i = *index.get(&m).ok_or_else(|| Error::UnknownVertex {
                    edge: format!("h{k}"),
                    vertex: m.clone(),
                })?;
                out.push(i);
            }
            edges.push(out);
        }
        Ok(Self {
            vertices,
            hyperedges: edges,
        })
    }

    /// Index form: `n` vertices, hyperedges given as index multisets.
    pub fn from_indices(n: usize, hyperedges: Vec<Vec<usize>>) -> Self {
        assert!(hyperedges.iter().flatten().all(|&v| v < n));
        assert!(hyperedges.iter().all(|e| !e.is_empty()));
        Self {
            vertices: (1..=n).map(|i| format!("v{i}")).collect(),
            hyperedges,
        }
    }

    /// For a nodal curve each node is a two-element multiset.
    pub fn from_graph(g: &Multigraph) -> Self {
        Self {
            vertices: g.vertices().iter().map(|v| v.id.clone()).collect(),
            hyperedges: g.edges().iter().map(|e| vec![e.ends.0, e.ends.1]).collect(),
        }
    }

    pub fn vertex_count(&self) -> usize {
        self.vertices.len()
    }

    pub fn hyperedges(&self) -> &[Vec<usize>] {
        &self.hyperedges
    }

    /// `b(H) = Σ_e (|e| - 1) - |V| + 1`.
    pub fn b(&self) -> i64 {
        let sum: i64 = self.hyperedges.iter().map(|e| e.len() as i64 - 1).sum();
        sum - self.vertices.len() as i64 + 1
    }

    /// Bipartite incidence multigraph: one vertex per vertex of `H`, then one
    /// per hyperedge, with an edge for each membership (counted with
    /// multiplicity). Fails past the graph size limit.
    pub fn incidence_graph(&self) -> Result<Multigraph> {
        let names = self
            .vertices
            .iter()
            .cloned()
            .chain((0..self.hyperedges.len()).map(|k| format!("#h{k}")))
            .map(|id| (id, 0));
        let mut edges = Vec::new();
        for (k, e) in self.hyperedges.iter().enumerate() {
            for (pos, &v) in e.iter().enumerate() {
                edges.push((format!("#h{k}.{pos}"), self.vertices[v].clone(), format!("#h{k}")));
            }
        }
        Multigraph::new(names, edges)
    }

    /// No vertices counts as disconnected, as for graphs.
    pub fn is_connected(&self) -> bool {
        let n = self.vertices.len();
        if n == 0 {
            return false;
        }
        let mut parent: Vec<usize> = (0..n).collect();
        fn find(parent: &mut [usize], mut x: usize) -> usize {
            while parent[x] != x {
                parent[x] = parent[parent[x]];
                x = parent[x];
            }
            x
        }
        let mut classes = n;
        for e in &self.hyperedges {
            for &v in &e[1..] {
                let (a, b) = (find(&mut parent, e[0]), find(&mut parent, v));
                if a != b {
                    parent[a] = b;
                    classes -= 1;
                }
            }
        }
        classes == 1
    }
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn examples() {
        let banana = Hypergraph::from_indices(2, vec![vec![0, 1], vec![0, 1]]);
        assert_eq!(banana.b(), 1);
        assert!(banana.is_connected());
        let point = Hypergraph::from_indices(1, vec![]);
        assert_eq!(point.b(), 0);
        assert!(point.is_connected());
        let two = Hypergraph::from_indices(2, vec![]);
        assert_eq!(two.b(), -1);
        assert!(!two.is_connected());
    }

    #[test]
    fn b_is_incidence_betti_when_connected() {
        // A triple point on three lines plus a tacnode-like double branch.
        let h = Hypergraph::from_indices(3, vec![vec![0, 1, 2], vec![0, 0]]);
        assert!(h.is_connected());
        assert_eq!(h.b(), h.incidence_graph().unwrap().first_betti() as i64);
        assert_eq!(h.b(), 1);
    }

    #[test]
    fn nodal_curve_agrees_with_dual_graph() {
        let g = Multigraph::from_index_edges(3, &[(0, 1), (1, 2), (0, 2), (1, 1)]);
        let h = Hypergraph::from_graph(&g);
        assert_eq!(h.b(), g.first_betti() as i64);
    }

    #[test]
    fn rejects_bad_members() {
        assert!(Hypergraph::new(vec!["a"], vec![vec!["b"]]).is_err());
        assert!(Hypergraph::new(vec!["a"], vec![vec![]]).is_err());
    }
}
