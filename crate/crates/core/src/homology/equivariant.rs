//! Graph automorphisms acting on the CKS summands.

use num_traits::Zero;

use super::cks::{walk_images, MAX_H1};
use super::wedge::power_on_monomial;
use super::{build_homology, Homology};
use crate::error::{Error, Result};
use crate::graph::{EdgeSet, Multigraph};
use crate::kring::{Laurent2, RationalQL};
use crate::linalg::{rat, Matrix, Rational};

/// A symmetry of a dual graph, acting on edge chains by `e ↦ ±π(e)` with
/// the minus sign when `reversed[e]`.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct GraphAutomorphism {
    vertex_map: Vec<usize>,
    edge_map: Vec<usize>,
    reversed: Vec<bool>,
}

fn is_permutation(map: &[usize]) -> bool {
    let mut seen = vec![false; map.len()];
    map.iter().all(|&x| x < map.len() && !std::mem::replace(&mut seen[x], true))
}

impl GraphAutomorphism {
    /// Checks that the maps are permutations compatible with incidence: a
    /// non-loop edge goes to an edge with the mapped tail and head, swapped
    /// when reversed. A loop may be reversed or not.
    pub fn new(g: &Multigraph, vertex_map: Vec<usize>, edge_map: Vec<usize>, reversed: Vec<bool>) -> Result<Self> {
        let invalid = |why: String| Err(Error::InvalidAutomorphism(why));
        if vertex_map.len() != g.vertex_count() || edge_map.len() != g.edge_count() || reversed.len() != g.edge_count() {
            return invalid("map sizes do not match the graph".into());
        }
        if !is_permutation(&vertex_map) || !is_permutation(&edge_map) {
            return invalid("maps must be permutations".into());
        }
        for e in 0..g.edge_count() {
            let (tail, head) = g.orientation(e);
            let (t, h) = g.orientation(edge_map[e]);
            let (mt, mh) = (vertex_map[tail], vertex_map[head]);
            let ok = if tail == head {
                t == h && t == mt
            } else if reversed[e] {
                (mh, mt) == (t, h)
            } else {
                (mt, mh) == (t, h)
            };
            if !ok {
                return invalid(format!("edge {} is not sent to a compatible edge", g.edges()[e].id));
            }
        }
        Ok(Self {
            vertex_map,
            edge_map,
            reversed,
        })
    }

    pub fn identity(g: &Multigraph) -> Self {
        Self {
            vertex_map: (0..g.vertex_count()).collect(),
            edge_map: (0..g.edge_count()).collect(),
            reversed: vec![false; g.edge_count()],
        }
    }

    pub fn vertex_map(&self) -> &[usize] {
        &self.vertex_map
    }

    pub fn edge_map(&self) -> &[usize] {
        &self.edge_map
    }

    pub fn reversed(&self) -> &[bool] {
        &self.reversed
    }

    /// `self ∘ other`: apply `other` first.
    pub fn compose(&self, other: &Self) -> Self {
        Self {
            vertex_map: other.vertex_map.iter().map(|&v| self.vertex_map[v]).collect(),
            edge_map: other.edge_map.iter().map(|&e| self.edge_map[e]).collect(),
            reversed: other
                .edge_map
                .iter()
                .zip(&other.reversed)
                .map(|(&e, &r)| r ^ self.reversed[e])
                .collect(),
        }
    }

    pub fn pow(&self, m: u32) -> Self {
        let mut out = Self {
            vertex_map: (0..self.vertex_map.len()).collect(),
            edge_map: (0..self.edge_map.len()).collect(),
            reversed: vec![false; self.edge_map.len()],
        };
        for _ in 0..m {
            out = self.compose(&out);
        }
        out
    }

    pub fn is_identity(&self) -> bool {
        self.vertex_map.iter().enumerate().all(|(i, &v)| i == v)
            && self.edge_map.iter().enumerate().all(|(i, &e)| i == e)
            && !self.reversed.iter().any(|&r| r)
    }

    /// Smallest `m ≥ 1` with `σ^m` the identity (signs included).
    pub fn order(&self) -> u32 {
        let mut m = 1;
        let mut cur = self.clone();
        while !cur.is_identity() {
            cur = self.compose(&cur);
            m += 1;
        }
        m
    }

    pub fn map_edges(&self, set: EdgeSet) -> EdgeSet {
        EdgeSet::from_indices(set.iter().map(|e| self.edge_map[e]))
    }

    fn sign(&self, e: usize) -> i64 {
        if self.reversed[e] {
            -1
        } else {
            1
        }
    }

    /// Matrix of the action on `W = H^1 ⊕ H_1 L` in the bases of `hom`.
    pub fn w_matrix(&self, hom: &Homology) -> Matrix {
        let basis = &hom.basis;
        let h = basis.h1();
        let mut m = Matrix::zeros(2 * h, 2 * h);
        for (k, &e) in basis.basis_edges.iter().enumerate() {
            let image = self.edge_map[e];
            for (j, c) in basis.covector(image).into_iter().enumerate() {
                if c != 0 {
                    m.set(j, k, rat(self.sign(e) * c));
                }
            }
            let mut chain = vec![0i64; self.edge_map.len()];
            for (f, &c) in basis.cycles[k].iter().enumerate() {
                chain[self.edge_map[f]] += self.sign(f) * c;
            }
            for (j, c) in basis.cycle_coordinates(&chain).into_iter().enumerate() {
                if c != 0 {
                    m.set(h + j, h + k, rat(c));
                }
            }
        }
        m
    }
}

/// For each `i`, the trace of `σ^m` on `Σ_k (-1)^{i+k} ⊕_{|I|=k} Im N_I^{(i)}`
/// as a polynomial in `L`. Only the summands with `σ^m(I) = I` contribute.
pub fn equivariant_trace(g: &Multigraph, sigma: &GraphAutomorphism, m: u32) -> Result<Vec<RationalQL>> {
    g.require_rational()?;
    let hom = build_homology(g);
    let h = hom.basis.h1();
    if h > MAX_H1 {
        return Err(Error::TooLarge {
            what: "independent cycles",
            count: h,
            limit: MAX_H1,
        });
    }
    let tau = sigma.pow(m);
    let mat = tau.w_matrix(&hom);
    let mut out = Vec::with_capacity(2 * h + 1);
    for i in 0..=2 * h {
        let mut class = Laurent2::zero();
        walk_images(&hom, g.edge_count(), i, |set, w, image| {
            if tau.map_edges(set) != set {
                return;
            }
            let mut trace = Rational::zero();
            for (row, b) in image.basis().iter().enumerate() {
                let mut moved = crate::linalg::SparseVec::new();
                for (mask, c) in b.iter() {
                    moved.add_scaled(&power_on_monomial(&mat, mask), c);
                }
                let coords = image.coordinates(&moved).expect("summand is stable under the automorphism");
                if let Some(c) = coords.get(&row) {
                    trace += c;
                }
            }
            assert!(trace.is_integer(), "trace of a finite-order map on a rational lattice");
            let sign = if (i + set.len()) % 2 == 0 { 1 } else { -1 };
            class.add_term(0, w as i64, trace.to_integer() * sign);
        });
        out.push(RationalQL::from_laurent(class));
    }
    Ok(out)
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::graph::catalog;
    use crate::homology::cks_stalk_class;

    fn l(terms: &[(i64, i64)]) -> RationalQL {
        RationalQL::from_laurent(Laurent2::from_terms(terms.iter().map(|&(j, c)| ((0, j), c.into()))))
    }

    fn coefficients(c: &RationalQL, len: usize) -> Vec<RationalQL> {
        (0..len)
            .map(|i| {
                RationalQL::from_laurent(Laurent2::from_terms(
                    c.numerator().terms().filter(|((a, _), _)| *a == i as i64).map(|(&(_, b), v)| ((0, b), v.clone())),
                ))
            })
            .collect()
    }

    fn banana_swap(g: &Multigraph) -> GraphAutomorphism {
        GraphAutomorphism::new(g, vec![0, 1], vec![1, 0], vec![false, false]).unwrap()
    }

    #[test]
    fn identity_recovers_stalk() {
        for name in ["node", "banana", "theta", "triangle"] {
            let g = catalog(name).unwrap();
            let traces = equivariant_trace(&g, &GraphAutomorphism::identity(&g), 1).unwrap();
            assert_eq!(traces, coefficients(&cks_stalk_class(&g).unwrap(), traces.len()), "{name}");
        }
    }

    #[test]
    fn banana_edge_swap() {
        let g = catalog("banana").unwrap();
        let sigma = banana_swap(&g);
        assert_eq!(sigma.order(), 2);
        let traces = equivariant_trace(&g, &sigma, 1).unwrap();
        assert_eq!(traces[1], l(&[(0, 1), (1, 1)]));
        let again = equivariant_trace(&g, &sigma, 2).unwrap();
        assert_eq!(again, equivariant_trace(&g, &GraphAutomorphism::identity(&g), 1).unwrap());
    }

    #[test]
    fn validation() {
        let g = catalog("banana").unwrap();
        assert!(GraphAutomorphism::new(&g, vec![1, 0], vec![0, 1], vec![false, false]).is_err());
        let flip = GraphAutomorphism::new(&g, vec![1, 0], vec![0, 1], vec![true, true]).unwrap();
        assert_eq!(flip.order(), 2);
        assert!(GraphAutomorphism::new(&g, vec![0, 0], vec![0, 1], vec![false, false]).is_err());
        let node = catalog("node").unwrap();
        let r = GraphAutomorphism::new(&node, vec![0], vec![0], vec![true]).unwrap();
        // Reversing the loop acts by -1 on both H^1 and H_1.
        let traces = equivariant_trace(&node, &r, 1).unwrap();
        assert_eq!(traces, vec![l(&[(0, 1)]), l(&[(0, 1)]), l(&[(1, 1)])]);
    }

    #[test]
    fn cycle_rotation_order() {
        let g = catalog("cycle-5").unwrap();
        let (edges, reversed) = rotation(&g);
        let sigma = GraphAutomorphism::new(&g, vec![1, 2, 3, 4, 0], edges, reversed).unwrap();
        assert_eq!(sigma.order(), 5);
        assert_eq!(sigma.pow(5), GraphAutomorphism::identity(&g));
        // The cycle class is fixed while the five one-edge summands are
        // permuted, so only I = ∅ contributes in degree 1.
        let traces = equivariant_trace(&g, &sigma, 1).unwrap();
        assert_eq!(traces[1], l(&[(0, -1), (1, -1)]));
        assert_eq!(equivariant_trace(&g, &sigma, 5).unwrap(), equivariant_trace(&g, &GraphAutomorphism::identity(&g), 1).unwrap());
    }

    fn rotation(g: &Multigraph) -> (Vec<usize>, Vec<bool>) {
        (0..g.edge_count())
            .map(|e| {
                let (a, b) = g.orientation(e);
                let (a, b) = ((a + 1) % 5, (b + 1) % 5);
                let f = (0..g.edge_count())
                    .find(|&f| {
                        let (c, d) = g.orientation(f);
                        (c, d) == (a, b) || (d, c) == (a, b)
                    })
                    .unwrap();
                (f, g.orientation(f) != (a, b))
            })
            .unzip()
    }
}
