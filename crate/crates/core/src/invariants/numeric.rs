use serde::Serialize;

use crate::graph::Multigraph;

/// Numerical invariants of a nodal curve read off its dual graph.
///
/// `geometric_genus` is `1 - χ(O)` of the normalization, which for several
/// components is `Σ g_v + 1 - γ`; the sum of the component genera is the
/// abelian rank.
#[derive(Clone, Debug, PartialEq, Eq, Serialize)]
pub struct NumericInvariants {
    /// `γ`: irreducible components.
    pub components: i64,
    /// `δ`: one per node.
    pub cogenus: i64,
    pub arithmetic_genus: i64,
    pub geometric_genus: i64,
    pub abelian_rank: i64,
    /// `δ^a = δ + 1 - γ`.
    pub affine_rank: i64,
}

pub fn numeric_invariants(g: &Multigraph) -> NumericInvariants {
    let gamma = g.vertex_count() as i64;
    let delta = g.edge_count() as i64;
    assert_eq!(g.hironaka_delta() as i64, delta, "every node has delta invariant 1");
    let genera = g.total_genus() as i64;
    let arithmetic = g.arithmetic_genus();
    let geometric = genera + 1 - gamma;
    let out = NumericInvariants {
        components: gamma,
        cogenus: delta,
        arithmetic_genus: arithmetic,
        geometric_genus: geometric,
        abelian_rank: geometric - 1 + gamma,
        affine_rank: delta + 1 - gamma,
    };
    debug_assert_eq!(out.cogenus, arithmetic - geometric);
    debug_assert_eq!(out.affine_rank, arithmetic - out.abelian_rank);
    out
}
