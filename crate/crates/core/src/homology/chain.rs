use crate::graph::{EdgeSet, Multigraph};
use crate::linalg::{rat, Matrix};

use super::GradedSpace;

/// Dual bases of `H_1(Γ)` and `H^1(Γ)` attached to a spanning forest.
///
/// `basis_edges` lists the edges outside the forest in increasing order.
/// The cycle of the `k`-th one is that edge followed by the forest path back
/// to its tail, so it has coefficient 1 on its own edge and 0 on the other
/// basis edges. The covector of a basis edge is the class of its dual in
/// `H^1 = E^*/im ∂^*`; the two bases pair to the identity.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct ForestBasis {
    pub forest: EdgeSet,
    pub basis_edges: Vec<usize>,
    /// `cycles[k][e]`: coefficient of edge `e` in the `k`-th cycle.
    pub cycles: Vec<Vec<i64>>,
}

impl ForestBasis {
    pub fn h1(&self) -> usize {
        self.basis_edges.len()
    }

    /// Coordinates of the class of `f^*` in the covector basis: the
    /// coefficient of `f` in each basis cycle.
    pub fn covector(&self, f: usize) -> Vec<i64> {
        self.cycles.iter().map(|c| c[f]).collect()
    }

    /// Coordinates in the cycle basis of a cycle given on edges; a cycle is
    /// determined by its coefficients on the basis edges.
    pub fn cycle_coordinates(&self, chain: &[i64]) -> Vec<i64> {
        self.basis_edges.iter().map(|&e| chain[e]).collect()
    }

    /// `⟨ē_i^*, ē_j⟩` for all basis pairs.
    pub fn pairing(&self) -> Vec<Vec<i64>> {
        self.basis_edges
            .iter()
            .map(|&e| self.cycles.iter().map(|c| c[e]).collect())
            .collect()
    }
}

/// The homology of a dual graph with its chosen bases.
#[derive(Clone, Debug)]
pub struct Homology {
    pub cohomology: GradedSpace,
    pub homology: GradedSpace,
    pub basis: ForestBasis,
}

/// Boundary `E -> V`, an edge going to head minus tail. Loops map to 0.
pub fn boundary_matrix(g: &Multigraph) -> Matrix {
    let mut m = Matrix::zeros(g.vertex_count(), g.edge_count());
    for (e, edge) in g.edges().iter().enumerate() {
        if edge.is_loop() {
            continue;
        }
        let (tail, head) = g.orientation(e);
        m.set(head, e, rat(1));
        m.set(tail, e, rat(-1));
    }
    m
}

/// `(rank ∂, dim ker ∂)` of the boundary map.
pub fn exactness_ranks(g: &Multigraph) -> (usize, usize) {
    let rank = boundary_matrix(g).rank();
    (rank, g.edge_count() - rank)
}

/// Builds the forest basis: the forest is grown in edge order, keeping each
/// edge that joins two trees.
pub fn build_homology(g: &Multigraph) -> Homology {
    let n = g.vertex_count();
    let mut parent: Vec<usize> = (0..n).collect();
    fn find(parent: &mut [usize], mut x: usize) -> usize {
        while parent[x] != x {
            parent[x] = parent[parent[x]];
            x = parent[x];
        }
        x
    }
    let mut forest = EdgeSet::empty();
    let mut adjacency: Vec<Vec<(usize, usize)>> = vec![Vec::new(); n];
    let mut basis_edges = Vec::new();
    for (e, edge) in g.edges().iter().enumerate() {
        let (a, b) = edge.ends;
        let (ra, rb) = (find(&mut parent, a), find(&mut parent, b));
        if ra == rb {
            basis_edges.push(e);
        } else {
            parent[ra] = rb;
            forest.insert(e);
            adjacency[a].push((b, e));
            adjacency[b].push((a, e));
        }
    }
    let cycles = basis_edges
        .iter()
        .map(|&e| {
            let mut chain = vec![0i64; g.edge_count()];
            chain[e] = 1;
            let (tail, head) = g.orientation(e);
            for (from, to, f) in forest_path(&adjacency, head, tail) {
                chain[f] += if g.orientation(f) == (from, to) { 1 } else { -1 };
            }
            chain
        })
        .collect();
    let basis = ForestBasis {
        forest,
        basis_edges,
        cycles,
    };
    let ids: Vec<&str> = basis.basis_edges.iter().map(|&e| g.edges()[e].id.as_str()).collect();
    Homology {
        cohomology: GradedSpace::new(ids.iter().map(|id| format!("{id}*")).collect(), vec![0; ids.len()]),
        homology: GradedSpace::new(ids.iter().map(|id| format!("[{id}]")).collect(), vec![0; ids.len()]),
        basis,
    }
}

/// Steps `(from, to, edge)` of the forest path from `start` to `goal`.
fn forest_path(adjacency: &[Vec<(usize, usize)>], start: usize, goal: usize) -> Vec<(usize, usize, usize)> {
    let mut prev: Vec<Option<(usize, usize)>> = vec![None; adjacency.len()];
    let mut seen = vec![false; adjacency.len()];
    let mut queue = std::collections::VecDeque::from([start]);
    seen[start] = true;
    while let Some(v) = queue.pop_front() {
        if v == goal {
            break;
        }
        for &(w, e) in &adjacency[v] {
            if !seen[w] {
                seen[w] = true;
                prev[w] = Some((v, e));
                queue.push_back(w);
            }
        }
    }
    let mut steps = Vec::new();
    let mut v = goal;
    while v != start {
        let (u, e) = prev[v].expect("endpoints of a cycle edge lie in one tree");
        steps.push((u, v, e));
        v = u;
    }
    steps.reverse();
    steps
}
