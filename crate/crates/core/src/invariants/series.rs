//! Motivic series of a nodal curve with split nodes.

use num_bigint::BigInt;
use num_traits::{One, Zero};

use crate::error::{Error, Result};
use crate::graph::{EdgeSet, ForestMethod, Multigraph, VertexSet, ENUMERATION_GUARD};
use crate::kring::{Laurent2, RationalQL, VertexClass, WeightPoly};

/// `(1 - q)(1 - qL)`.
pub(crate) fn d() -> RationalQL {
    RationalQL::from_laurent(Laurent2::from_terms([
        ((0, 0), 1.into()),
        ((1, 0), (-1).into()),
        ((1, 1), (-1).into()),
        ((2, 1), 1.into()),
    ]))
}

/// `1 - q + q^2 L`, the local factor of a node.
pub(crate) fn node_factor() -> RationalQL {
    RationalQL::from_laurent(Laurent2::from_terms([
        ((0, 0), 1.into()),
        ((1, 0), (-1).into()),
        ((2, 1), 1.into()),
    ]))
}

fn edge_guard(g: &Multigraph) -> Result<()> {
    if g.edge_count() > ENUMERATION_GUARD {
        return Err(Error::EnumerationGuard {
            count: g.edge_count(),
            limit: ENUMERATION_GUARD,
        });
    }
    Ok(())
}

fn vertex_guard(g: &Multigraph) -> Result<()> {
    if g.vertex_count() > ENUMERATION_GUARD {
        return Err(Error::EnumerationGuard {
            count: g.vertex_count(),
            limit: ENUMERATION_GUARD,
        });
    }
    Ok(())
}

/// `Σ_h n_h (qL)^{g-h} ((1-q)(1-qL))^h`; zero for disconnected graphs.
pub fn perverse_series(g: &Multigraph) -> Result<RationalQL> {
    let genus = g.arithmetic_genus();
    let d = d();
    let mut out = RationalQL::zero();
    for (h, &n) in g.n_vector()?.iter().enumerate() {
        if n == 0 {
            continue;
        }
        let term = &(&RationalQL::qx_power(genus - h as i64) * &d.pow(h as u32)) * &RationalQL::integer(n);
        out = &out + &term;
    }
    Ok(out)
}

/// `Σ_{I∈𝒞} (qL)^{|I|} D^{|E \ I| + h^0} / D^{|V|}` with `D = (1-q)(1-qL)`.
pub fn ic_stalk_product(g: &Multigraph) -> Result<RationalQL> {
    g.require_connected()?;
    g.require_rational()?;
    let d = d();
    let mut sum = RationalQL::zero();
    for set in g.enumerate_matroid()? {
        let k = set.len();
        let term = &RationalQL::qx_power(k as i64) * &d.pow((g.edge_count() - k + g.h0()) as u32);
        sum = &sum + &term;
    }
    let v = g.vertex_count() as u32;
    Ok(&sum * &RationalQL::inverse_denominator(v, v))
}

/// `∏_v 1/((1-q)(1-qL)) · ∏_e (1 - q + q^2 L)`; 1 for the empty graph.
pub fn hilbert_series(g: &Multigraph) -> Result<RationalQL> {
    g.require_rational()?;
    let v = g.vertex_count() as u32;
    Ok(&node_factor().pow(g.edge_count() as u32) * &RationalQL::inverse_denominator(v, v))
}

/// `S' ↦ (qL)^{1-g(S')} · hilbert_series(Γ_{S'})` over every vertex subset;
/// the empty subcurve has `g = 1` and contributes 1.
pub fn hilbert_vertex_class(g: &Multigraph) -> Result<VertexClass<RationalQL>> {
    g.require_rational()?;
    vertex_guard(g)?;
    let mut out = VertexClass::zero(g.vertex_count());
    for set in g.all_vertices().subsets() {
        let sub = g.induced(set);
        let value = &RationalQL::qx_power(1 - sub.arithmetic_genus()) * &hilbert_series(&sub)?;
        out.set(set, value);
    }
    Ok(out)
}

/// `S' ↦ (qL)^{1-g(S')} / ((1-q)(1-qL)) · perverse_series(Γ_{S'})` on
/// nonempty subsets inducing a connected graph, zero elsewhere.
pub fn perverse_vertex_class(g: &Multigraph) -> Result<VertexClass<RationalQL>> {
    g.require_rational()?;
    vertex_guard(g)?;
    let mut out = VertexClass::zero(g.vertex_count());
    let smooth = RationalQL::inverse_denominator(1, 1);
    for set in g.all_vertices().subsets() {
        if set.is_empty() || !g.induces_connected(set) {
            continue;
        }
        let sub = g.induced(set);
        let value = &(&RationalQL::qx_power(1 - sub.arithmetic_genus()) * &smooth) * &perverse_series(&sub)?;
        out.set(set, value);
    }
    Ok(out)
}

/// The Jacobian class summed over strata, and its closed form.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct JacobianClass {
    /// `Σ_{S⊆E} ĉ(Γ \ S) (L - 1)^{h^1(Γ \ S)}`.
    pub strata: RationalQL,
    /// `c(Γ) L^{h^1(Γ)}`.
    pub closed: RationalQL,
}

pub fn jacobian_class(g: &Multigraph) -> Result<JacobianClass> {
    g.require_connected()?;
    g.require_rational()?;
    edge_guard(g)?;
    let torus = &RationalQL::x() - &RationalQL::one();
    let mut strata = RationalQL::zero();
    for set in g.all_edges().subsets() {
        if !g.is_spanning_connected(set) {
            continue;
        }
        let c = g.c_hat_without(set);
        let term = &torus.pow(g.first_betti_without(set) as u32) * &RationalQL::integer(c);
        strata = &strata + &term;
    }
    let c = g.spanning_forest_count(ForestMethod::MatrixTree)?;
    let closed = &RationalQL::monomial(1, 0, g.first_betti() as i64) * &RationalQL::integer(c);
    Ok(JacobianClass { strata, closed })
}

/// For each `i`: `Σ_{|S|=i} ĉ(Γ \ S)` and `C(h^1, i) · c(Γ)`.
pub fn subsum_table(g: &Multigraph) -> Result<Vec<(BigInt, BigInt)>> {
    edge_guard(g)?;
    let mut lhs = vec![BigInt::zero(); g.edge_count() + 1];
    for set in g.all_edges().subsets() {
        lhs[set.len()] += g.c_hat_without(set);
    }
    let c = g.c_hat_without(EdgeSet::empty());
    let h1 = g.first_betti() as u64;
    Ok(lhs
        .into_iter()
        .enumerate()
        .map(|(i, l)| (l, &c * binomial(h1, i as u64)))
        .collect())
}

pub(crate) fn binomial(n: u64, k: u64) -> BigInt {
    if k > n {
        return BigInt::zero();
    }
    num_integer::binomial(BigInt::from(n), BigInt::from(k))
}

/// `(1 + t)^{2 Σ g_v} t^{2 h^1} c(Γ)`.
pub fn jacobian_weight_poly(g: &Multigraph) -> Result<WeightPoly> {
    g.require_connected()?;
    let one_plus_t = &WeightPoly::one() + &WeightPoly::x();
    let c = g.spanning_forest_count(ForestMethod::MatrixTree)?;
    Ok(&(&one_plus_t.pow(2 * g.total_genus() as u32) * &WeightPoly::monomial(1, 0, 2 * g.first_betti() as i64))
        * &WeightPoly::integer(c))
}

/// `(1 + qt)^{2 Σ g_v} Σ_i n_i (qt^2)^{h^1 - i} ((1 - qt^2)(1 - q))^i`.
pub fn ic_weight_poly(g: &Multigraph) -> Result<WeightPoly> {
    g.require_connected()?;
    let h1 = g.first_betti() as i64;
    let d = d().to_weight();
    let mut sum = WeightPoly::zero();
    for (i, &n) in g.n_vector()?.iter().enumerate() {
        let i = i as i64;
        let term = &WeightPoly::monomial(n, h1 - i, 2 * (h1 - i)) * &d.pow(i as u32);
        sum = &sum + &term;
    }
    let one_plus_qt = &WeightPoly::one() + &WeightPoly::monomial(1, 1, 1);
    Ok(&one_plus_qt.pow(2 * g.total_genus() as u32) * &sum)
}

/// Both sides of the identity relating all spanning subgraphs to connected
/// vertex partitions:
/// `(qL)^{1-g} Σ_{J⊆E} (qL)^{|J|} D^{|E \ J|}` and
/// `Σ_P ∏_α (qL)^{1-g_α} Σ_{I∈𝒞(Γ_α)} (qL)^{|I|} D^{|E_α \ I|}`.
pub fn connected_disconnected_sides(g: &Multigraph) -> Result<(RationalQL, RationalQL)> {
    edge_guard(g)?;
    vertex_guard(g)?;
    let d = d();
    let e = g.edge_count();
    let mut inner = RationalQL::zero();
    for j in 0..=e {
        let term = &(&RationalQL::qx_power(j as i64) * &d.pow((e - j) as u32)) * &RationalQL::integer(binomial(e as u64, j as u64));
        inner = &inner + &term;
    }
    let lhs = &RationalQL::qx_power(1 - g.arithmetic_genus()) * &inner;

    let block_value = |block: VertexSet| -> Result<RationalQL> {
        let sub = g.induced(block);
        let mut sum = RationalQL::zero();
        for set in sub.enumerate_matroid()? {
            let term = &RationalQL::qx_power(set.len() as i64) * &d.pow((sub.edge_count() - set.len()) as u32);
            sum = &sum + &term;
        }
        Ok(&RationalQL::qx_power(1 - sub.arithmetic_genus()) * &sum)
    };
    let mut rhs = RationalQL::zero();
    for partition in g.connected_partitions() {
        let mut product = RationalQL::one();
        for &block in &partition {
            product = &product * &block_value(block)?;
        }
        rhs = &rhs + &product;
    }
    Ok((lhs, rhs))
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::graph::catalog;

    fn ql(terms: &[(i64, i64, i64)]) -> RationalQL {
        RationalQL::from_laurent(Laurent2::from_terms(terms.iter().map(|&(i, j, c)| ((i, j), c.into()))))
    }

    fn banana_class() -> RationalQL {
        ql(&[(0, 0, 1), (1, 0, -1), (1, 1, 1), (2, 1, 1)])
    }

    #[test]
    fn perverse_examples() {
        assert_eq!(perverse_series(&catalog("node").unwrap()).unwrap(), node_factor());
        assert_eq!(perverse_series(&catalog("banana").unwrap()).unwrap(), banana_class());
        assert!(perverse_series(&Multigraph::from_index_edges(2, &[])).unwrap().is_zero());
        let tri = catalog("triangle").unwrap();
        let at_one = perverse_series(&tri).unwrap().at_q_one().unwrap();
        assert_eq!(at_one, jacobian_class(&tri).unwrap().closed);
    }

    #[test]
    fn ic_product_examples() {
        assert_eq!(ic_stalk_product(&catalog("node").unwrap()).unwrap(), node_factor());
        assert_eq!(ic_stalk_product(&catalog("banana").unwrap()).unwrap(), banana_class());
        assert_eq!(ic_stalk_product(&catalog("pair-of-lines").unwrap()).unwrap(), RationalQL::one());
        assert!(ic_stalk_product(&catalog("banana-g1").unwrap()).is_err());
    }

    #[test]
    fn hilbert_examples() {
        assert_eq!(hilbert_series(&Multigraph::empty()).unwrap(), RationalQL::one());
        let pair = catalog("pair-of-lines").unwrap();
        let h = hilbert_series(&pair).unwrap();
        // Coefficient of q: (1 - q + q^2 L)/D^2 = 1 + (1 + 2L) q + ...
        let expected_start = &h - &ql(&[(0, 0, 1), (1, 0, 1), (1, 1, 2)]);
        let shifted = &expected_start * &d().pow(2);
        assert!(shifted.numerator().terms().all(|(&(i, _), _)| i >= 2), "{shifted}");
    }

    #[test]
    fn pair_of_lines_vertex_classes() {
        let pair = catalog("pair-of-lines").unwrap();
        let lhs = hilbert_vertex_class(&pair).unwrap();
        let rhs = perverse_vertex_class(&pair).unwrap().exp().unwrap();
        let single = &RationalQL::qx_power(1) * &RationalQL::inverse_denominator(1, 1);
        let full = pair.all_vertices();
        assert_eq!(lhs.get(full), &single + &single.pow(2));
        assert_eq!(lhs, rhs);
        assert_eq!(perverse_vertex_class(&pair).unwrap().get(VertexSet::singleton(0)), single);
    }

    #[test]
    fn disconnected_subcurve_gets_zero() {
        let g = Multigraph::from_index_edges(3, &[(0, 1), (0, 1)]);
        let p = perverse_vertex_class(&g).unwrap();
        assert!(p.get(VertexSet::from_indices([0, 2])).is_zero());
        assert!(p.get(g.all_vertices()).is_zero());
        assert_eq!(hilbert_vertex_class(&g).unwrap(), p.exp().unwrap());
    }

    #[test]
    fn jacobian_examples() {
        for (name, c) in [("node", 1), ("banana", 2), ("triangle", 3)] {
            let j = jacobian_class(&catalog(name).unwrap()).unwrap();
            assert_eq!(j.strata, j.closed, "{name}");
            assert_eq!(j.closed, RationalQL::monomial(c, 0, 1), "{name}");
        }
    }

    #[test]
    fn subsum_theta() {
        let rows = subsum_table(&catalog("theta").unwrap()).unwrap();
        let pairs: Vec<(i64, i64)> = rows.iter().map(|(a, b)| (a.try_into().unwrap(), b.try_into().unwrap())).collect();
        assert_eq!(pairs, vec![(3, 3), (6, 6), (3, 3), (0, 0)]);
    }

    #[test]
    fn weight_examples() {
        let banana = catalog("banana").unwrap();
        assert_eq!(jacobian_weight_poly(&banana).unwrap(), WeightPoly::monomial(2, 0, 2));
        assert_eq!(jacobian_weight_poly(&catalog("node").unwrap()).unwrap(), WeightPoly::monomial(1, 0, 2));
        let ic = ic_weight_poly(&banana).unwrap();
        let expected = &d().to_weight() + &WeightPoly::monomial(2, 1, 2);
        assert_eq!(ic, expected);
        assert_eq!(ic.at_q_one().unwrap(), WeightPoly::monomial(2, 0, 2));
        assert_eq!(ic_weight_poly(&catalog("chain-3").unwrap()).unwrap(), WeightPoly::one());
        let g1 = catalog("banana-g1").unwrap();
        let one_plus_t = &WeightPoly::one() + &WeightPoly::x();
        assert_eq!(jacobian_weight_poly(&g1).unwrap(), &one_plus_t.pow(4) * &WeightPoly::monomial(2, 0, 2));
        assert_eq!(ic_weight_poly(&g1).unwrap().at_q_one().unwrap(), jacobian_weight_poly(&g1).unwrap());
    }

    #[test]
    fn connected_disconnected_examples() {
        let pair = catalog("pair-of-lines").unwrap();
        let (l, r) = connected_disconnected_sides(&pair).unwrap();
        assert_eq!(l, &(&RationalQL::qx_power(1) * &d()) + &RationalQL::qx_power(2));
        assert_eq!(l, r);
        let (l, r) = connected_disconnected_sides(&catalog("point").unwrap()).unwrap();
        assert_eq!((l.clone(), r), (RationalQL::qx_power(1), l));
        let (l, r) = connected_disconnected_sides(&catalog("banana").unwrap()).unwrap();
        assert_eq!(l, r);
    }
}
