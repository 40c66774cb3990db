//! Structural facts about `N_I` checked by explicit linear algebra.

use super::cks::{image_ni, nilpotent_matrix, walk_images, MAX_H1};
use super::wedge::wedge;
use super::{build_homology, Homology};
use crate::error::{Error, Result};
use crate::graph::{EdgeSet, Multigraph, ENUMERATION_GUARD};
use crate::linalg::{rat, Matrix, SparseVec, Subspace};

fn homology_checked(g: &Multigraph) -> Result<Homology> {
    let hom = build_homology(g);
    if hom.basis.h1() > MAX_H1 {
        return Err(Error::TooLarge {
            what: "independent cycles",
            count: hom.basis.h1(),
            limit: MAX_H1,
        });
    }
    Ok(hom)
}

fn guard(g: &Multigraph) -> Result<()> {
    if g.edge_count() > ENUMERATION_GUARD {
        return Err(Error::EnumerationGuard {
            count: g.edge_count(),
            limit: ENUMERATION_GUARD,
        });
    }
    Ok(())
}

fn covector_vector(hom: &Homology, f: usize) -> SparseVec {
    hom.basis
        .covector(f)
        .into_iter()
        .enumerate()
        .filter(|&(_, c)| c != 0)
        .map(|(k, c)| (1u64 << k, rat(c)))
        .collect()
}

/// Both sides of the image formula for `I ∈ 𝒞(Γ)` inside `∧^i W`: the image
/// of `N_I`, and `e_I^* ∧ ∧^{i-|I|} W(Γ \ I)` with `W(Γ \ I)` lifted to `W`.
pub fn lmain_subspaces(g: &Multigraph, edges: EdgeSet, i: usize) -> Result<(Subspace, Subspace)> {
    if !g.is_spanning_connected(edges) {
        return Err(Error::NotIndependent(g.edge_ids(edges).join(",")));
    }
    let hom = homology_checked(g)?;
    let h = hom.basis.h1();
    let image = Subspace::spanned_by(image_ni(g, edges, i)?.basis);

    let mut e_i = SparseVec::unit(0);
    for f in edges.iter() {
        e_i = wedge(&e_i, &covector_vector(&hom, f));
    }
    let kept: Vec<usize> = (0..g.edge_count()).filter(|&e| !edges.contains(e)).collect();
    let rest = build_homology(&g.delete_edges(edges));
    let mut lifted: Vec<SparseVec> = rest
        .basis
        .basis_edges
        .iter()
        .map(|&f| covector_vector(&hom, kept[f]))
        .collect();
    for cycle in &rest.basis.cycles {
        let mut chain = vec![0i64; g.edge_count()];
        for (f, &c) in cycle.iter().enumerate() {
            chain[kept[f]] = c;
        }
        lifted.push(
            hom.basis
                .cycle_coordinates(&chain)
                .into_iter()
                .enumerate()
                .filter(|&(_, c)| c != 0)
                .map(|(k, c)| (1u64 << (h + k), rat(c)))
                .collect(),
        );
    }
    let mut formula = Subspace::new();
    if i >= edges.len() {
        let degree = i - edges.len();
        for pick in 0u64..1 << lifted.len() {
            if pick.count_ones() as usize != degree {
                continue;
            }
            let mut v = e_i.clone();
            for (k, l) in lifted.iter().enumerate() {
                if pick >> k & 1 == 1 {
                    v = wedge(&v, l);
                }
            }
            formula.insert(v);
        }
    }
    Ok((image, formula))
}

/// `2 dim(A + B) - dim A - dim B` for the two sides of the image formula;
/// zero exactly when they agree.
pub fn lmain_defect(g: &Multigraph, edges: EdgeSet, i: usize) -> Result<(usize, usize, usize)> {
    let (a, b) = lmain_subspaces(g, edges, i)?;
    let sum = a.sum(&b).dim();
    Ok((a.dim(), b.dim(), 2 * sum - a.dim() - b.dim()))
}

/// Total dimension of `Im N_I^{(i)}` over all `(I, i)` where it should
/// vanish: `i < |I|`, `h^1 < |I|`, or `I ∉ 𝒞(Γ)`.
pub fn vanishing_excess(g: &Multigraph) -> Result<usize> {
    guard(g)?;
    let hom = homology_checked(g)?;
    let h = hom.basis.h1();
    let mut excess = 0;
    for i in 0..=2 * h {
        walk_images(&hom, g.edge_count(), i, |set, _, image| {
            if i < set.len() || h < set.len() || !g.is_spanning_connected(set) {
                excess += image.dim();
            }
        });
    }
    Ok(excess)
}

/// Number of `I ⊆ E` violating the rank statement: the classes `[f^*]`,
/// `f ∈ I`, are independent in `H^1(Γ)` exactly when `I ∈ 𝒞(Γ)`, and then
/// `h^1(Γ \ I) = h^1(Γ) - |I|`.
pub fn setc_mismatches(g: &Multigraph) -> Result<usize> {
    guard(g)?;
    let hom = homology_checked(g)?;
    let h = hom.basis.h1();
    let mut bad = 0;
    for set in g.all_edges().subsets() {
        let rank = Subspace::spanned_by(set.iter().map(|f| covector_vector(&hom, f))).dim();
        let member = g.is_spanning_connected(set);
        if (rank == set.len()) != member || (member && g.first_betti_without(set) + set.len() != h) {
            bad += 1;
        }
    }
    Ok(bad)
}

/// Counts failures of `N_e^2 = 0`, `N_e N_f = N_f N_e`, and independence of
/// `N_e` from edge orientations. The last compares the form `⟨e^*, s⟩⟨e^*, t⟩`
/// on cycles against the one computed with every non-loop edge reversed.
pub fn n_property_failures(g: &Multigraph) -> Result<usize> {
    let hom = homology_checked(g)?;
    let h = hom.basis.h1();
    let ops: Vec<Matrix> = (0..g.edge_count()).map(|e| nilpotent_matrix(&hom.basis.covector(e))).collect();
    let mut bad = 0;
    for (e, a) in ops.iter().enumerate() {
        if !a.mul(a).is_zero() {
            bad += 1;
        }
        for b in &ops[e + 1..] {
            if a.mul(b) != b.mul(a) {
                bad += 1;
            }
        }
    }

    let flipped = reversed_vertex_order(g);
    let other = build_homology(&flipped);
    // Column k: the flipped graph's k-th cycle in the original cycle basis.
    let mut change = Matrix::zeros(h, h);
    for (k, cycle) in other.basis.cycles.iter().enumerate() {
        let chain: Vec<i64> = cycle
            .iter()
            .enumerate()
            .map(|(e, &c)| if g.edges()[e].is_loop() { c } else { -c })
            .collect();
        for (j, c) in hom.basis.cycle_coordinates(&chain).into_iter().enumerate() {
            change.set(j, k, rat(c));
        }
    }
    let form = |c: &[i64]| {
        Matrix::from_rows(c.iter().map(|&a| c.iter().map(|&b| rat(a * b)).collect()).collect())
    };
    for e in 0..g.edge_count() {
        let original = form(&hom.basis.covector(e));
        let moved = change.transpose().mul(&original).mul(&change);
        if moved != form(&other.basis.covector(e)) {
            bad += 1;
        }
    }
    Ok(bad)
}

/// Same graph with the vertex list reversed, which reverses every non-loop
/// edge's orientation and keeps edge indices.
fn reversed_vertex_order(g: &Multigraph) -> Multigraph {
    let vertices = g.vertices().iter().rev().map(|v| (v.id.clone(), v.genus));
    let edges = g.edges().iter().map(|e| {
        (
            e.id.clone(),
            g.vertices()[e.ends.0].id.clone(),
            g.vertices()[e.ends.1].id.clone(),
        )
    });
    Multigraph::new(vertices, edges).expect("relabelled copy of a valid graph")
}
