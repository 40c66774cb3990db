//! Dual multigraphs of nodal curves.
//!
//! Vertices are irreducible components (carrying the geometric genus of the
//! component), edges are nodes. Loops and parallel edges are allowed.
//! Edge and vertex subsets are bitmasks over declaration order, so a graph
//! holds at most 64 of each.

mod catalog;
pub mod generate;
mod hypergraph;
mod json;
mod sets;

use std::collections::HashMap;

use num_bigint::BigInt;
use num_traits::One;

pub use catalog::{catalog, catalog_names, Catalog};
pub use hypergraph::Hypergraph;
pub use sets::{EdgeSet, VertexSet};

use crate::error::{Error, Result};
use crate::linalg;

/// Largest edge count for which exponential enumerations are attempted.
pub const ENUMERATION_GUARD: usize = 24;

const MAX_ITEMS: usize = 64;

#[derive(Clone, Debug, PartialEq, Eq, Hash)]
pub struct Vertex {
    pub id: String,
    pub genus: u32,
}

#[derive(Clone, Debug, PartialEq, Eq, Hash)]
pub struct Edge {
    pub id: String,
    /// Endpoint indices, ordered so that `ends.0 <= ends.1`.
    pub ends: (usize, usize),
}

impl Edge {
    pub fn is_loop(&self) -> bool {
        self.ends.0 == self.ends.1
    }
}

#[derive(Clone, Debug, PartialEq, Eq, Hash)]
pub struct Multigraph {
    vertices: Vec<Vertex>,
    edges: Vec<Edge>,
}

/// How [`Multigraph::spanning_forest_count`] computes the complexity.
#[derive(Clone, Copy, Debug, PartialEq, Eq)]
pub enum ForestMethod {
    /// Count the maximal independent sets of the cographic matroid.
    Matroid,
    /// Kirchhoff: product over components of a reduced Laplacian determinant.
    MatrixTree,
}

struct UnionFind {
    parent: Vec<usize>,
    sets: usize,
}

impl UnionFind {
    fn new(n: usize) -> Self {
        Self {
            parent: (0..n).collect(),
            sets: n,
        }
    }

    fn find(&mut self, mut x: usize) -> usize {
        while self.parent[x] != x {
            self.parent[x] = self.parent[self.parent[x]];
            x = self.parent[x];
        }
        x
    }

    fn union(&mut self, a: usize, b: usize) -> bool {
        let (ra, rb) = (self.find(a), self.find(b));
        if ra == rb {
            return false;
        }
        self.parent[ra.max(rb)] = ra.min(rb);
        self.sets -= 1;
        true
    }
}

impl Multigraph {
    /// Builds a graph from `(id, genus)` vertices and `(id, end, end)` edges.
    pub fn new<V, E, S>(vertices: V, edges: E) -> Result<Self>
    where
        V: IntoIterator<Item = (S, u32)>,
        E: IntoIterator<Item = (S, S, S)>,
        S: Into<String>,
    {
        let vertices: Vec<Vertex> = vertices
            .into_iter()
            .map(|(id, genus)| Vertex {
                id: id.into(),
                genus,
            })
            .collect();
        let mut index = HashMap::new();
        for (i, v) in vertices.iter().enumerate() {
            if index.insert(v.id.clone(), i).is_some() {
                return Err(Error::DuplicateVertex(v.id.clone()));
            }
        }
        let mut seen = HashMap::new();
        let mut out = Vec::new();
        for (id, a, b) in edges {
            let id: String = id.into();
            let lookup = |end: String| {
                index.get(&end).copied().ok_or_else(|| Error::UnknownVertex {
                    edge: id.clone(),
                    vertex: end,
                })
            };
            let (a, b) = (lookup(a.into())?, lookup(b.into())?);
            if seen.insert(id.clone(), ()).is_some() {
                return Err(Error::DuplicateEdge(id));
            }
            out.push(Edge {
                id,
                ends: (a.min(b), a.max(b)),
            });
        }
        for (what, count) in [("vertices", vertices.len()), ("edges", out.len())] {
            if count > MAX_ITEMS {
                return Err(Error::TooLarge {
                    what,
                    count,
                    limit: MAX_ITEMS,
                });
            }
        }
        Ok(Self {
            vertices,
            edges: out,
        })
    }

    /// Graph with vertices `v1..vn` of genus 0 and edges `e1..` between the
    /// given index pairs.
    pub fn from_index_edges(n: usize, pairs: &[(usize, usize)]) -> Self {
        let vertices = (1..=n).map(|i| (format!("v{i}"), 0));
        let edges = pairs
            .iter()
            .enumerate()
            .map(|(k, &(a, b))| (format!("e{}", k + 1), format!("v{}", a + 1), format!("v{}", b + 1)));
        Self::new(vertices, edges).expect("index edges reference declared vertices")
    }

    pub fn empty() -> Self {
        Self {
            vertices: Vec::new(),
            edges: Vec::new(),
        }
    }

    pub fn vertices(&self) -> &[Vertex] {
        &self.vertices
    }

    pub fn edges(&self) -> &[Edge] {
        &self.edges
    }

    pub fn vertex_count(&self) -> usize {
        self.vertices.len()
    }

    pub fn edge_count(&self) -> usize {
        self.edges.len()
    }

    pub fn vertex_index(&self, id: &str) -> Option<usize> {
        self.vertices.iter().position(|v| v.id == id)
    }

    pub fn edge_index(&self, id: &str) -> Option<usize> {
        self.edges.iter().position(|e| e.id == id)
    }

    pub fn all_vertices(&self) -> VertexSet {
        VertexSet::full(self.vertex_count())
    }

    pub fn all_edges(&self) -> EdgeSet {
        EdgeSet::full(self.edge_count())
    }

    /// Edge subset from edge ids.
    pub fn edge_set<S: AsRef<str>>(&self, ids: &[S]) -> Result<EdgeSet> {
        let mut set = EdgeSet::empty();
        for id in ids {
            let i = self
                .edge_index(id.as_ref())
                .ok_or_else(|| Error::UnknownEdge(id.as_ref().to_string()))?;
            set.insert(i);
        }
        Ok(set)
    }

    pub fn edge_ids(&self, set: EdgeSet) -> Vec<&str> {
        set.iter().map(|i| self.edges[i].id.as_str()).collect()
    }

    pub fn vertex_ids(&self, set: VertexSet) -> Vec<&str> {
        set.iter().map(|i| self.vertices[i].id.as_str()).collect()
    }

    /// Sum of the vertex genera.
    pub fn total_genus(&self) -> u64 {
        self.vertices.iter().map(|v| u64::from(v.genus)).sum()
    }

    pub fn is_rational(&self) -> bool {
        self.vertices.iter().all(|v| v.genus == 0)
    }

    pub fn require_rational(&self) -> Result<()> {
        match self.vertices.iter().find(|v| v.genus > 0) {
            Some(v) => Err(Error::PositiveGenus(v.id.clone())),
            None => Ok(()),
        }
    }

    pub fn require_connected(&self) -> Result<()> {
        if self.is_connected() {
            Ok(())
        } else {
            Err(Error::Disconnected)
        }
    }

    fn union_find(&self, removed: EdgeSet) -> UnionFind {
        let mut uf = UnionFind::new(self.vertex_count());
        for (i, e) in self.edges.iter().enumerate() {
            if !removed.contains(i) {
                uf.union(e.ends.0, e.ends.1);
            }
        }
        uf
    }

    fn component_count_without(&self, removed: EdgeSet) -> usize {
        self.union_find(removed).sets
    }

    /// Number of connected components, `h^0`.
    pub fn h0(&self) -> usize {
        self.component_count_without(EdgeSet::empty())
    }

    /// Connected means exactly one component; the empty graph is not connected.
    pub fn is_connected(&self) -> bool {
        self.h0() == 1
    }

    /// Vertex sets of the connected components, ordered by smallest vertex.
    pub fn components(&self) -> Vec<VertexSet> {
        let mut uf = self.union_find(EdgeSet::empty());
        let mut blocks: Vec<(usize, VertexSet)> = Vec::new();
        for v in 0..self.vertex_count() {
            let root = uf.find(v);
            match blocks.iter_mut().find(|(r, _)| *r == root) {
                Some((_, set)) => set.insert(v),
                None => blocks.push((root, VertexSet::singleton(v))),
            }
        }
        blocks.into_iter().map(|(_, s)| s).collect()
    }

    /// The partition of vertex ids into connected components.
    pub fn connected_components(&self) -> Vec<Vec<String>> {
        self.components()
            .into_iter()
            .map(|set| self.vertex_ids(set).into_iter().map(String::from).collect())
            .collect()
    }

    /// `h^1 = |E| - |V| + h^0`.
    pub fn first_betti(&self) -> usize {
        self.edge_count() + self.h0() - self.vertex_count()
    }

    /// `h^1` of the partial normalization `Γ \ removed`.
    pub fn first_betti_without(&self, removed: EdgeSet) -> usize {
        let kept = self.edge_count() - removed.len();
        kept + self.component_count_without(removed) - self.vertex_count()
    }

    /// Arithmetic genus `1 - χ(O)`, i.e. `|E| - |V| + 1 + Σ g_v`; for a
    /// disconnected graph this is below the sum of the component genera.
    pub fn arithmetic_genus(&self) -> i64 {
        self.edge_count() as i64 - self.vertex_count() as i64 + 1 + self.total_genus() as i64
    }

    /// Membership in the cographic matroid `𝒞(Γ)`: removing `set` disconnects
    /// no component.
    pub fn is_spanning_connected(&self, set: EdgeSet) -> bool {
        self.component_count_without(set) == self.h0()
    }

    fn guard(&self) -> Result<()> {
        if self.edge_count() > ENUMERATION_GUARD {
            return Err(Error::EnumerationGuard {
                count: self.edge_count(),
                limit: ENUMERATION_GUARD,
            });
        }
        Ok(())
    }

    /// All independent sets of the cographic matroid, sorted by size and
    /// then lexicographically by edge id.
    pub fn enumerate_matroid(&self) -> Result<Vec<EdgeSet>> {
        self.guard()?;
        let mut out = Vec::new();
        // Downward closure lets the search extend only independent sets.
        let mut stack = vec![(EdgeSet::empty(), 0usize)];
        let base = self.h0();
        while let Some((set, next)) = stack.pop() {
            out.push(set);
            for e in next..self.edge_count() {
                let bigger = set.with(e);
                if self.component_count_without(bigger) == base {
                    stack.push((bigger, e + 1));
                }
            }
        }
        self.sort_edge_sets(&mut out);
        Ok(out)
    }

    pub fn sort_edge_sets(&self, sets: &mut [EdgeSet]) {
        sets.sort_by_cached_key(|s| {
            let mut ids: Vec<String> = self.edge_ids(*s).into_iter().map(String::from).collect();
            ids.sort();
            (s.len(), ids)
        });
    }

    /// `n_i = #{I ∈ 𝒞(Γ) : h^1(Γ \ I) = i}` for `i = 0..=h^1(Γ)`; identically
    /// zero when `Γ` is disconnected or empty.
    pub fn n_vector(&self) -> Result<Vec<u64>> {
        let h1 = self.first_betti();
        let mut n = vec![0u64; h1 + 1];
        if !self.is_connected() {
            return Ok(n);
        }
        for set in self.enumerate_matroid()? {
            n[h1 - set.len()] += 1;
        }
        Ok(n)
    }

    /// Complexity `c(Γ)`: number of spanning forests.
    pub fn spanning_forest_count(&self, method: ForestMethod) -> Result<BigInt> {
        match method {
            ForestMethod::Matroid => {
                let h1 = self.first_betti();
                let count = self
                    .enumerate_matroid()?
                    .into_iter()
                    .filter(|s| s.len() == h1)
                    .count();
                Ok(BigInt::from(count))
            }
            ForestMethod::MatrixTree => Ok(self.matrix_tree_count()),
        }
    }

    fn matrix_tree_count(&self) -> BigInt {
        let mut total = BigInt::one();
        for comp in self.components() {
            let verts: Vec<usize> = comp.iter().collect();
            let pos = |v: usize| verts.iter().position(|&w| w == v).expect("vertex in component");
            let k = verts.len();
            let mut lap = vec![vec![BigInt::from(0); k]; k];
            for e in &self.edges {
                if e.is_loop() || !comp.contains(e.ends.0) {
                    continue;
                }
                let (a, b) = (pos(e.ends.0), pos(e.ends.1));
                lap[a][a] += 1;
                lap[b][b] += 1;
                lap[a][b] -= 1;
                lap[b][a] -= 1;
            }
            // Delete the first row and column.
            let minor: Vec<Vec<BigInt>> = lap.into_iter().skip(1).map(|row| row.into_iter().skip(1).collect()).collect();
            total *= linalg::determinant(minor);
        }
        total
    }

    /// `ĉ(Γ \ S)`: spanning-tree count of the partial normalization when it is
    /// connected, else zero. Defined for connected `Γ`; for a disconnected
    /// host the per-component product is used (0 if `Γ \ S` gains components).
    pub fn c_hat_without(&self, removed: EdgeSet) -> BigInt {
        if self.component_count_without(removed) != self.h0() {
            return BigInt::from(0);
        }
        self.delete_edges(removed).matrix_tree_count()
    }

    /// The partial normalization `Γ \ set` (vertices kept, edges deleted).
    pub fn delete_edges(&self, set: EdgeSet) -> Multigraph {
        Multigraph {
            vertices: self.vertices.clone(),
            edges: self
                .edges
                .iter()
                .enumerate()
                .filter(|(i, _)| !set.contains(*i))
                .map(|(_, e)| e.clone())
                .collect(),
        }
    }

    /// Induced subgraph on a vertex subset; vertex indices are renumbered in
    /// order, edge order is preserved.
    pub fn induced(&self, set: VertexSet) -> Multigraph {
        let kept: Vec<usize> = set.iter().collect();
        let remap = |v: usize| kept.iter().position(|&w| w == v);
        let vertices = kept.iter().map(|&v| self.vertices[v].clone()).collect();
        let edges = self
            .edges
            .iter()
            .filter_map(|e| {
                let (a, b) = (remap(e.ends.0)?, remap(e.ends.1)?);
                Some(Edge {
                    id: e.id.clone(),
                    ends: (a, b),
                })
            })
            .collect();
        Multigraph { vertices, edges }
    }

    /// Edges with both ends in `set`.
    pub fn induced_edges(&self, set: VertexSet) -> EdgeSet {
        let mut out = EdgeSet::empty();
        for (i, e) in self.edges.iter().enumerate() {
            if set.contains(e.ends.0) && set.contains(e.ends.1) {
                out.insert(i);
            }
        }
        out
    }

    /// Edges with exactly one end in `set`.
    pub fn boundary_edges(&self, set: VertexSet) -> EdgeSet {
        let mut out = EdgeSet::empty();
        for (i, e) in self.edges.iter().enumerate() {
            if set.contains(e.ends.0) != set.contains(e.ends.1) {
                out.insert(i);
            }
        }
        out
    }

    pub fn induces_connected(&self, set: VertexSet) -> bool {
        !set.is_empty() && self.induced(set).is_connected()
    }

    /// Partitions of the vertex set whose blocks all induce connected
    /// subgraphs. Blocks are listed by smallest vertex; partitions are in
    /// restricted-growth-string order.
    pub fn connected_partitions(&self) -> Vec<Vec<VertexSet>> {
        let n = self.vertex_count();
        let mut out = Vec::new();
        let mut labels = vec![0usize; n];
        fn recurse(
            g: &Multigraph,
            labels: &mut [usize],
            pos: usize,
            blocks: usize,
            out: &mut Vec<Vec<VertexSet>>,
        ) {
            if pos == labels.len() {
                let mut parts = vec![VertexSet::empty(); blocks];
                for (v, &b) in labels.iter().enumerate() {
                    parts[b].insert(v);
                }
                if parts.iter().all(|&p| g.induces_connected(p)) {
                    out.push(parts);
                }
                return;
            }
            for b in 0..=blocks {
                labels[pos] = b;
                recurse(g, labels, pos + 1, blocks.max(b + 1), out);
            }
        }
        if n == 0 {
            return vec![Vec::new()];
        }
        recurse(self, &mut labels, 0, 0, &mut out);
        out
    }

    /// Orientation used for chains: from the lower to the higher vertex index.
    /// Returns `(tail, head)`.
    pub fn orientation(&self, edge: usize) -> (usize, usize) {
        self.edges[edge].ends
    }

    /// Number of loops at each vertex plus edge multiplicities between pairs,
    /// summed: the total delta invariant by the additivity formula.
    pub fn hironaka_delta(&self) -> usize {
        let n = self.vertex_count();
        let loops: usize = (0..n)
            .map(|v| self.edges.iter().filter(|e| e.ends == (v, v)).count())
            .sum();
        let crossings: usize = (0..n)
            .flat_map(|k| (k + 1..n).map(move |l| (k, l)))
            .map(|(k, l)| self.edges.iter().filter(|e| e.ends == (k, l)).count())
            .sum();
        loops + crossings
    }

    /// Vertex genera may be set after construction (catalog and generators).
    pub fn with_genera(mut self, genera: &[u32]) -> Self {
        for (v, &g) in self.vertices.iter_mut().zip(genera) {
            v.genus = g;
        }
        self
    }
}
