//! The nilpotent operators `N_e` and the stalk of the CKS complex.

use num_traits::Zero;

use super::wedge::{self, block, nilpotent_on_monomial, unit_vectors};
use super::{build_homology, GradedSpace, Homology, LinOp};
use crate::error::{Error, Result};
use crate::graph::{EdgeSet, Multigraph};
use crate::kring::{Laurent2, RationalQL};
use crate::linalg::{rat, Matrix, SparseVec, Subspace};

/// Largest `h^1` whose `W = H^1 ⊕ H_1 L` fits the monomial bitmasks.
pub const MAX_H1: usize = 32;

/// `W = H^1 ⊕ H_1 L`: covectors (weight 0) then cycles (weight 1).
pub fn combined_space(hom: &Homology) -> GradedSpace {
    let h = hom.basis.h1();
    let labels = hom
        .cohomology
        .labels()
        .iter()
        .cloned()
        .chain(hom.homology.labels().iter().map(|l| format!("L{l}")))
        .collect();
    let weights = std::iter::repeat_n(0, h).chain(std::iter::repeat_n(1, h)).collect();
    GradedSpace::new(labels, weights)
}

fn require_small(hom: &Homology) -> Result<()> {
    let h = hom.basis.h1();
    if h > MAX_H1 {
        return Err(Error::TooLarge {
            what: "independent cycles",
            count: h,
            limit: MAX_H1,
        });
    }
    Ok(())
}

/// Matrix of `N_f` on `W`: `y_j ↦ c_j Σ_k c_k x_k` with `c` the covector
/// coordinates of `f`, zero on `H^1`.
pub(crate) fn nilpotent_matrix(c: &[i64]) -> Matrix {
    let h = c.len();
    let mut m = Matrix::zeros(2 * h, 2 * h);
    for j in 0..h {
        for k in 0..h {
            if c[j] * c[k] != 0 {
                m.set(k, h + j, rat(c[j] * c[k]));
            }
        }
    }
    m
}

/// `N_e` on `H^1 ⊕ H_1 L`, a map of twist 1.
pub fn operator_n(g: &Multigraph, edge: &str) -> Result<LinOp> {
    let e = g.edge_index(edge).ok_or_else(|| Error::UnknownEdge(edge.to_string()))?;
    let hom = build_homology(g);
    require_small(&hom)?;
    let w = combined_space(&hom);
    Ok(LinOp::new(w.clone(), w, nilpotent_matrix(&hom.basis.covector(e)), 1))
}

fn wedge_space(space: &GradedSpace, i: usize) -> (GradedSpace, Vec<u64>) {
    let h = space.dim() / 2;
    let masks = wedge::basis(h, i);
    let labels = masks
        .iter()
        .map(|&m| {
            if m == 0 {
                return "1".to_string();
            }
            (0..space.dim())
                .filter(|b| m >> b & 1 == 1)
                .map(|b| space.labels()[b].clone())
                .collect::<Vec<_>>()
                .join("^")
        })
        .collect();
    let weights = masks
        .iter()
        .map(|&m| (0..space.dim()).filter(|b| m >> b & 1 == 1).map(|b| space.weights()[b]).sum())
        .collect();
    (GradedSpace::new(labels, weights), masks)
}

/// The derivation extension of an endomorphism of `W` to `∧^i W`.
pub fn wedge_operator(n: &LinOp, i: usize) -> LinOp {
    assert_eq!(n.source, n.target, "wedge powers of endomorphisms only");
    let (space, masks) = wedge_space(&n.source, i);
    let index = |m: u64| masks.binary_search(&m).expect("wedge monomial in basis");
    let mut mat = Matrix::zeros(masks.len(), masks.len());
    for (col, &m) in masks.iter().enumerate() {
        for (t, c) in wedge::derivation_on_monomial(&n.matrix, m).iter() {
            mat.set(index(t), col, c.clone());
        }
    }
    LinOp::new(space.clone(), space, mat, n.twist)
}

/// The image of `N_I` on `∧^i W`, recorded with the twist `|I|`.
#[derive(Clone, Debug)]
pub struct ImageSpace {
    pub edges: EdgeSet,
    pub degree: usize,
    /// Echelon basis; keys are wedge monomials of `∧^i W`.
    pub basis: Vec<SparseVec>,
    /// Weight of each basis vector: raw weight plus `|I|`.
    pub weights: Vec<i64>,
}

impl ImageSpace {
    pub fn dim(&self) -> usize {
        self.basis.len()
    }

    /// `Σ L^weight` over the basis.
    pub fn class(&self) -> Laurent2 {
        let mut out = Laurent2::zero();
        for &w in &self.weights {
            out.add_term(0, w, 1.into());
        }
        out
    }
}

/// Walks every `I ⊆ E` in increasing edge order together with the image of
/// `N_I` on each weight block of `∧^i W`, starting from the block itself.
/// `Im N_{I+f} = N_f(Im N_I)` since the operators commute, and a zero image
/// stays zero under further operators, so those branches are cut.
pub(crate) fn walk_images(hom: &Homology, edge_count: usize, i: usize, mut visit: impl FnMut(EdgeSet, usize, &Subspace)) {
    let h = hom.basis.h1();
    let covectors: Vec<Vec<i64>> = (0..edge_count).map(|f| hom.basis.covector(f)).collect();
    #[allow(clippy::too_many_arguments)]
    fn go(
        covectors: &[Vec<i64>],
        set: EdgeSet,
        next: usize,
        w: usize,
        image: &Subspace,
        visit: &mut impl FnMut(EdgeSet, usize, &Subspace),
    ) {
        visit(set, w, image);
        for f in next..covectors.len() {
            let c = &covectors[f];
            if c.iter().all(|&x| x == 0) {
                // A bridge: N_f = 0.
                continue;
            }
            let mapped = image
                .basis()
                .iter()
                .map(|v| wedge::apply_linear(v, |m| nilpotent_on_monomial(c, m)));
            let next_image = Subspace::spanned_by(mapped);
            if next_image.dim() > 0 {
                go(covectors, set.with(f), f + 1, w, &next_image, visit);
            }
        }
    }
    for w in 0..=i {
        let masks = block(h, i, w);
        if masks.is_empty() {
            continue;
        }
        let start = Subspace::spanned_by(unit_vectors(&masks));
        go(&covectors, EdgeSet::empty(), 0, w, &start, &mut visit);
    }
}

/// `Im N_I^{(i)}` for one edge subset.
pub fn image_ni(g: &Multigraph, edges: EdgeSet, i: usize) -> Result<ImageSpace> {
    let hom = build_homology(g);
    require_small(&hom)?;
    let h = hom.basis.h1();
    let mut basis = Vec::new();
    let mut weights = Vec::new();
    for w in 0..=i {
        let masks = block(h, i, w);
        let mut vectors = unit_vectors(&masks);
        for f in edges.iter() {
            let c = hom.basis.covector(f);
            vectors = vectors
                .iter()
                .map(|v| wedge::apply_linear(v, |m| nilpotent_on_monomial(&c, m)))
                .collect();
        }
        let span = Subspace::spanned_by(vectors);
        weights.extend(std::iter::repeat_n(w as i64, span.dim()));
        basis.extend(span.basis().iter().cloned());
    }
    Ok(ImageSpace {
        edges,
        degree: i,
        basis,
        weights,
    })
}

/// `table[i][k]`: the class `Σ_{|I|=k} [Im N_I^{(i)}]` as a polynomial in `L`.
pub fn cks_table(g: &Multigraph) -> Result<Vec<Vec<Laurent2>>> {
    g.require_rational()?;
    let hom = build_homology(g);
    require_small(&hom)?;
    let h = hom.basis.h1();
    let mut table = Vec::with_capacity(2 * h + 1);
    for i in 0..=2 * h {
        let mut row = vec![Laurent2::zero(); g.edge_count() + 1];
        walk_images(&hom, g.edge_count(), i, |set, w, image| {
            row[set.len()].add_term(0, w as i64, image.dim().into());
        });
        table.push(row);
    }
    Ok(table)
}

/// `Σ_i q^i (-1)^i Σ_k (-1)^k Σ_{|I|=k} [Im N_I^{(i)}]`, the stalk class by
/// direct linear algebra. Needs a connected graph with rational components.
pub fn cks_stalk_class(g: &Multigraph) -> Result<RationalQL> {
    g.require_connected()?;
    let table = cks_table(g)?;
    let mut out = Laurent2::zero();
    for (i, row) in table.iter().enumerate() {
        for (k, class) in row.iter().enumerate() {
            let sign = if (i + k) % 2 == 0 { 1 } else { -1 };
            out = &out + &class.shift(i as i64, 0).scale(&sign.into());
        }
    }
    Ok(RationalQL::from_laurent(out))
}
