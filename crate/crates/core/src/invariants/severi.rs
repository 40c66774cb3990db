//! Severi multiplicities `n̄^i`, `n^i` and the relation between them.

use num_bigint::BigInt;
use num_traits::{One, Zero};

use super::series::{binomial, hilbert_series, perverse_series};
use crate::error::{Error, Result};
use crate::graph::{Multigraph, ENUMERATION_GUARD};
use crate::kring::{RationalQL, ULaurent, VertexClass};

/// Both vectors indexed by `i = 0..=|E|`.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct SeveriVectors {
    pub nbar: Vec<BigInt>,
    pub n: Vec<BigInt>,
}

fn extract(series: &RationalQL, offset: i64, len: usize) -> Result<Vec<BigInt>> {
    let u = ULaurent::from_q_series(series)?;
    if let Some((&k, _)) = u.terms().find(|(&k, _)| k < offset || k >= offset + len as i64) {
        return Err(Error::NotExpressibleInU(format!("{series} has a u^{k} term outside the expected range")));
    }
    Ok(u.coefficients(offset, len))
}

/// `n̄^i` from `Σ_n q^{n+1-g} χ(C^{[n]}) = Σ_i u^{i+1-g} n̄^i` and `n^i` from
/// `q^{-g}` times the perverse series at `L = 1`, `= Σ_i u^{i-g} n^i`.
pub fn severi_vectors(g: &Multigraph) -> Result<SeveriVectors> {
    g.require_rational()?;
    let genus = g.arithmetic_genus();
    let len = g.edge_count() + 1;
    let hilb = &RationalQL::monomial(1, 1 - genus, 0) * &hilbert_series(g)?.at_x_one();
    let perverse = &RationalQL::monomial(1, -genus, 0) * &perverse_series(g)?.at_x_one();
    Ok(SeveriVectors {
        nbar: extract(&hilb, 1 - genus, len)?,
        n: extract(&perverse, -genus, len)?,
    })
}

/// `n^i = #{I ∈ 𝒞(Γ) : |I| = i}` (zero for disconnected graphs) and
/// `n̄^i = C(|E|, i)`.
pub fn severi_oracle(g: &Multigraph) -> Result<SeveriVectors> {
    let len = g.edge_count() + 1;
    let mut n = vec![BigInt::zero(); len];
    if g.is_connected() {
        for set in g.enumerate_matroid()? {
            n[set.len()] += 1;
        }
    }
    let nbar = (0..len).map(|i| binomial(g.edge_count() as u64, i as u64)).collect();
    Ok(SeveriVectors { nbar, n })
}

fn u_series(values: &[BigInt], offset: i64) -> ULaurent {
    let mut out = ULaurent::zero();
    for (i, c) in values.iter().enumerate() {
        out.add_term(offset + i as i64, c.clone());
    }
    out
}

/// The two sides of the `n`/`n̄` relation over all subcurves:
/// the square-zero exponential of `S ↦ Σ_i u^{i-g(S)+1} n^i(S)` and
/// `S ↦ Σ_i u^{i-g(S)+1} n̄^i(S)`, each read from the series of `Γ_S`.
pub fn nnbar_sides(g: &Multigraph) -> Result<(VertexClass<ULaurent>, VertexClass<ULaurent>)> {
    g.require_rational()?;
    if g.vertex_count() > ENUMERATION_GUARD {
        return Err(Error::EnumerationGuard {
            count: g.vertex_count(),
            limit: ENUMERATION_GUARD,
        });
    }
    let n = g.vertex_count();
    let mut connected = VertexClass::zero(n);
    let mut all = VertexClass::zero(n);
    for set in g.all_vertices().subsets() {
        if set.is_empty() {
            all.set(set, ULaurent::one());
            continue;
        }
        let sub = g.induced(set);
        let offset = 1 - sub.arithmetic_genus();
        let v = severi_vectors(&sub)?;
        all.set(set, u_series(&v.nbar, offset));
        if sub.is_connected() {
            connected.set(set, u_series(&v.n, offset));
        }
    }
    Ok((connected.exp()?, all))
}
