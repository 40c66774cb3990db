//! Polarizations and stable multidegrees of line bundles.

use num_bigint::BigInt;
use num_rational::BigRational;
use num_traits::ToPrimitive;

use crate::error::{Error, Result};
use crate::graph::{Multigraph, VertexSet};

/// Per-vertex rational weights with integral total.
pub type Polarization = [BigRational];

/// Per-vertex degrees of a line bundle.
pub type Multidegree = Vec<i64>;

fn check_shape(g: &Multigraph, m: &Polarization) -> Result<BigRational> {
    if m.len() != g.vertex_count() {
        return Err(Error::PolarizationLength {
            expected: g.vertex_count(),
            got: m.len(),
        });
    }
    let total: BigRational = m.iter().sum();
    if !total.is_integer() {
        return Err(Error::NonIntegralTotal(total.to_string()));
    }
    Ok(total)
}

fn sum_over(m: &Polarization, set: VertexSet) -> BigRational {
    set.iter().map(|v| &m[v]).sum()
}

/// `χ(O_D) = |D| - |E(D)| - Σ_{v∈D} g_v`, summing `1 - g_a` over the
/// components of the induced subcurve.
pub fn chi(g: &Multigraph, set: VertexSet) -> i64 {
    set.len() as i64 - g.induced_edges(set).len() as i64 - set.iter().map(|v| i64::from(g.vertices()[v].genus)).sum::<i64>()
}

/// Nonempty proper vertex subsets.
fn nontrivial(g: &Multigraph) -> impl Iterator<Item = VertexSet> {
    let all = g.all_vertices();
    all.subsets().filter(move |&d| !d.is_empty() && d != all)
}

fn integral_on_components(g: &Multigraph, m: &Polarization, set: VertexSet) -> bool {
    g.induced(set)
        .components()
        .into_iter()
        .all(|local| {
            // `induced` renumbers vertices; map back through `set`.
            let members: Vec<usize> = set.iter().collect();
            let host = VertexSet::from_indices(local.iter().map(|i| members[i]));
            sum_over(m, host).is_integer()
        })
}

/// General: for every nontrivial subcurve `D`, some connected component of
/// `D` or of its complement has non-integral weight.
pub fn is_general_polarization(g: &Multigraph, m: &Polarization) -> Result<bool> {
    check_shape(g, m)?;
    let all = g.all_vertices();
    Ok(nontrivial(g).all(|d| {
        !(integral_on_components(g, m, d) && integral_on_components(g, m, all.difference(d)))
    }))
}

/// Integer multidegrees `d` with `Σ d = |m| - χ(O_C)` and
/// `d_D + χ(O_D) > m_D` for every nontrivial subcurve `D`.
pub fn stable_multidegrees(g: &Multigraph, m: &Polarization) -> Result<Vec<Multidegree>> {
    let total = check_shape(g, m)?;
    if !is_general_polarization(g, m)? {
        return Err(Error::NonGeneralPolarization);
    }
    let n = g.vertex_count();
    if n == 0 {
        return Ok(vec![Vec::new()]);
    }
    let all = g.all_vertices();
    let degree = total.to_integer() - BigInt::from(chi(g, all));
    let degree = degree.to_i64().expect("degree fits in i64");
    if n == 1 {
        return Ok(vec![vec![degree]]);
    }
    // The singleton and co-singleton inequalities bound each coordinate.
    let mut lo = Vec::with_capacity(n);
    let mut hi = Vec::with_capacity(n);
    for v in 0..n {
        let single = VertexSet::singleton(v);
        let rest = all.difference(single);
        let below = &m[v] - BigRational::from_integer(chi(g, single).into());
        lo.push(below.floor().to_integer().to_i64().expect("bound fits") + 1);
        let above = BigRational::from_integer((degree + chi(g, rest)).into()) - sum_over(m, rest);
        hi.push(above.ceil().to_integer().to_i64().expect("bound fits") - 1);
    }
    let subsets: Vec<(VertexSet, BigRational)> = nontrivial(g)
        .map(|d| (d, sum_over(m, d) - BigRational::from_integer(chi(g, d).into())))
        .collect();
    let mut out = Vec::new();
    let mut d = vec![0i64; n];
    fn search(
        v: usize,
        remaining: i64,
        lo: &[i64],
        hi: &[i64],
        d: &mut Vec<i64>,
        subsets: &[(VertexSet, BigRational)],
        out: &mut Vec<Multidegree>,
    ) {
        let n = d.len();
        if v + 1 == n {
            if remaining < lo[v] || remaining > hi[v] {
                return;
            }
            d[v] = remaining;
            let stable = subsets.iter().all(|(set, bound)| {
                let dd: i64 = set.iter().map(|i| d[i]).sum();
                BigRational::from_integer(dd.into()) > *bound
            });
            if stable {
                out.push(d.clone());
            }
            return;
        }
        let rest_lo: i64 = lo[v + 1..].iter().sum();
        let rest_hi: i64 = hi[v + 1..].iter().sum();
        for x in lo[v]..=hi[v] {
            let r = remaining - x;
            if r < rest_lo || r > rest_hi {
                continue;
            }
            d[v] = x;
            search(v + 1, r, lo, hi, d, subsets, out);
        }
    }
    search(0, degree, &lo, &hi, &mut d, &subsets, &mut out);
    Ok(out)
}
