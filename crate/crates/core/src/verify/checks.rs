use num_bigint::BigInt;

use super::CheckResult;
use crate::error::{Error, Result};
use crate::graph::generate::{random_general_polarization, seeded_rng};
use crate::graph::{ForestMethod, Hypergraph, Multigraph};
use crate::homology::{cks_stalk_class, lmain_defect, setc_mismatches, vanishing_excess};
use crate::invariants::{
    connected_disconnected_sides, hilbert_vertex_class, ic_stalk_product, ic_weight_poly, jacobian_class,
    jacobian_weight_poly, nnbar_sides, perverse_series, perverse_vertex_class, severi_oracle, severi_vectors,
    stable_multidegrees, subsum_table, SeveriVectors,
};
use crate::kring::{Coefficient, VertexClass};

/// Every check name, in report order.
pub const CHECK_NAMES: [&str; 13] = [
    "hypergraph-b",
    "jacobian-strata",
    "lmain",
    "main-pointwise",
    "multidegrees",
    "nnbar",
    "nodalhilb",
    "nodaljac-cks",
    "setc-rank",
    "severi",
    "subsum",
    "vanishing",
    "weights-q1",
];

/// Knobs shared by all checks.
#[derive(Clone, Debug)]
pub struct CheckOptions {
    /// Seeds the random polarizations of `multidegrees`.
    pub seed: u64,
    /// Random general polarizations tried per graph.
    pub polarizations: usize,
    /// Largest `h^1` for the linear-algebra checks (`nodaljac-cks`, `lmain`,
    /// `vanishing`).
    pub max_h1: usize,
    /// Largest edge count for `lmain`, which visits every `(I, i)`.
    pub max_lmain_edges: usize,
}

impl Default for CheckOptions {
    fn default() -> Self {
        Self {
            seed: 0,
            polarizations: 50,
            max_h1: 8,
            max_lmain_edges: 8,
        }
    }
}

pub fn is_check_name(name: &str) -> bool {
    CHECK_NAMES.contains(&name)
}

/// Runs one named identity on one graph. Unmet hypotheses (disconnected,
/// positive genus, above a size limit) give a skip.
pub fn run_check(name: &str, label: &str, g: &Multigraph, options: &CheckOptions) -> Result<CheckResult> {
    let outcome = match name {
        "nodaljac-cks" => nodaljac_cks(label, g, options),
        "nodalhilb" => nodalhilb(label, g),
        "jacobian-strata" => jacobian_class(g).map(|j| CheckResult::compare(name, label, &j.strata, &j.closed)),
        "subsum" => subsum(label, g),
        "weights-q1" => weights_q1(label, g),
        "main-pointwise" => {
            connected_disconnected_sides(g).map(|(l, r)| CheckResult::compare(name, label, &l, &r))
        }
        "lmain" => lmain(label, g, options),
        "vanishing" => vanishing(label, g, options),
        "severi" => severi(label, g),
        "nnbar" => nnbar(label, g),
        "multidegrees" => multidegrees(label, g, options),
        "hypergraph-b" => Ok(hypergraph_b(label, g)),
        "setc-rank" => setc_mismatches(g).map(|bad| CheckResult::compare_counts(name, label, bad as i64, 0)),
        _ => return Err(Error::UnknownCheck(name.to_string())),
    };
    match outcome {
        Ok(r) => Ok(r),
        Err(Error::Disconnected) => Ok(CheckResult::skip(name, label, "graph is not connected")),
        Err(e @ Error::PositiveGenus(_)) => Ok(CheckResult::skip(name, label, e.to_string())),
        Err(e @ (Error::TooLarge { .. } | Error::EnumerationGuard { .. })) => {
            Ok(CheckResult::skip(name, label, e.to_string()))
        }
        Err(e) => Err(e),
    }
}

fn too_large(name: &str, label: &str, what: &str, value: usize, limit: usize) -> Option<CheckResult> {
    (value > limit).then(|| CheckResult::skip(name, label, format!("{what} = {value} exceeds the limit {limit}")))
}

fn nodaljac_cks(label: &str, g: &Multigraph, options: &CheckOptions) -> Result<CheckResult> {
    g.require_connected()?;
    g.require_rational()?;
    if let Some(skip) = too_large("nodaljac-cks", label, "h^1", g.first_betti(), options.max_h1) {
        return Ok(skip);
    }
    let brute = cks_stalk_class(g)?;
    let closed = perverse_series(g)?;
    let product = ic_stalk_product(g)?;
    let result = CheckResult::compare("nodaljac-cks", label, &brute, &closed);
    if product != closed {
        return Ok(result.fail_with(format!("product formula gives {product}")));
    }
    Ok(result)
}

fn first_difference<C: Coefficient>(a: &VertexClass<C>, b: &VertexClass<C>, g: &Multigraph) -> Option<String> {
    g.all_vertices().subsets().find(|&s| a.get(s) != b.get(s)).map(|s| {
        format!(
            "differs at {{{}}}: {} vs {}",
            g.vertex_ids(s).join(","),
            a.get(s),
            b.get(s)
        )
    })
}

fn nodalhilb(label: &str, g: &Multigraph) -> Result<CheckResult> {
    let lhs = hilbert_vertex_class(g)?;
    let rhs = perverse_vertex_class(g)?.exp()?;
    let full = g.all_vertices();
    let result = CheckResult::compare("nodalhilb", label, &lhs.get(full), &rhs.get(full));
    Ok(match first_difference(&lhs, &rhs, g) {
        Some(why) => result.fail_with(why),
        None => result,
    })
}

fn subsum(label: &str, g: &Multigraph) -> Result<CheckResult> {
    let rows = subsum_table(g)?;
    let render = |side: fn(&(BigInt, BigInt)) -> &BigInt| {
        format!("[{}]", rows.iter().map(|r| side(r).to_string()).collect::<Vec<_>>().join(", "))
    };
    Ok(CheckResult::compare_text("subsum", label, render(|r| &r.0), render(|r| &r.1)))
}

fn weights_q1(label: &str, g: &Multigraph) -> Result<CheckResult> {
    let ic = ic_weight_poly(g)?.at_q_one()?;
    let jac = jacobian_weight_poly(g)?;
    Ok(CheckResult::compare("weights-q1", label, &ic, &jac))
}

fn lmain(label: &str, g: &Multigraph, options: &CheckOptions) -> Result<CheckResult> {
    if let Some(skip) = too_large("lmain", label, "h^1", g.first_betti(), options.max_h1)
        .or_else(|| too_large("lmain", label, "|E|", g.edge_count(), options.max_lmain_edges))
    {
        return Ok(skip);
    }
    let mut pairs = 0;
    let mut defect = 0;
    for set in g.enumerate_matroid()? {
        for i in set.len()..=2 * g.first_betti() {
            defect += lmain_defect(g, set, i)?.2;
            pairs += 1;
        }
    }
    Ok(CheckResult::compare_counts("lmain", label, defect as i64, 0).with_note(format!("{pairs} pairs (I, i) compared")))
}

fn vanishing(label: &str, g: &Multigraph, options: &CheckOptions) -> Result<CheckResult> {
    if let Some(skip) = too_large("vanishing", label, "h^1", g.first_betti(), options.max_h1) {
        return Ok(skip);
    }
    Ok(CheckResult::compare_counts("vanishing", label, vanishing_excess(g)? as i64, 0))
}

fn render_severi(v: &SeveriVectors) -> String {
    let join = |xs: &[BigInt]| xs.iter().map(|x| x.to_string()).collect::<Vec<_>>().join(", ");
    format!("nbar = [{}], n = [{}]", join(&v.nbar), join(&v.n))
}

fn severi(label: &str, g: &Multigraph) -> Result<CheckResult> {
    let series = severi_vectors(g)?;
    let oracle = severi_oracle(g)?;
    Ok(CheckResult::compare_text("severi", label, render_severi(&series), render_severi(&oracle)))
}

fn nnbar(label: &str, g: &Multigraph) -> Result<CheckResult> {
    let (lhs, rhs) = nnbar_sides(g)?;
    let full = g.all_vertices();
    let result = CheckResult::compare_text("nnbar", label, lhs.get(full).to_string(), rhs.get(full).to_string());
    Ok(match first_difference(&lhs, &rhs, g) {
        Some(why) if result.passed() => result.fail_with(why),
        _ => result,
    })
}

/// FNV-1a, so per-graph seeds do not depend on the standard hasher.
fn fnv(text: &str) -> u64 {
    text.bytes().fold(0xcbf2_9ce4_8422_2325, |h, b| (h ^ u64::from(b)).wrapping_mul(0x0000_0100_0000_01b3))
}

fn multidegrees(label: &str, g: &Multigraph, options: &CheckOptions) -> Result<CheckResult> {
    g.require_connected()?;
    let c = g.spanning_forest_count(ForestMethod::MatrixTree)?;
    let mut rng = seeded_rng(options.seed ^ fnv(&g.to_json()));
    let mut mismatches = 0usize;
    let mut counts = std::collections::BTreeSet::new();
    for _ in 0..options.polarizations {
        let m = random_general_polarization(&mut rng, g);
        let count = BigInt::from(stable_multidegrees(g, &m)?.len());
        if count != c {
            mismatches += 1;
        }
        counts.insert(count);
    }
    let seen = counts.iter().map(|x| x.to_string()).collect::<Vec<_>>().join(", ");
    let result = CheckResult::holds("multidegrees", label, format!("counts {{{seen}}}"), format!("c = {c}"), mismatches == 0);
    Ok(result.with_note(format!("{} polarizations, {mismatches} mismatches", options.polarizations)))
}

fn hypergraph_b(label: &str, g: &Multigraph) -> CheckResult {
    let h = Hypergraph::from_graph(g);
    let expected = g.first_betti() as i64 + 1 - g.h0() as i64;
    let result = CheckResult::compare_counts("hypergraph-b", label, h.b(), expected);
    if h.is_connected() != g.is_connected() {
        return result.fail_with("hypergraph connectivity differs from the graph's");
    }
    if h.is_connected() && h.b() < 0 {
        return result.fail_with("connected with b < 0");
    }
    result
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::graph::catalog;
    use crate::verify::Status;

    #[test]
    fn named_examples() {
        let opts = CheckOptions::default();
        let pair = catalog("pair-of-lines").unwrap();
        let r = run_check("nodalhilb", "pair-of-lines", &pair, &opts).unwrap();
        assert!(r.passed(), "{r:?}");
        assert_eq!(r.lhs, "(q*L - q^2*L + q^3*L^2)/((1-q)^2*(1-q*L)^2)");

        let banana = catalog("banana").unwrap();
        let r = run_check("jacobian-strata", "banana", &banana, &opts).unwrap();
        assert!(r.passed());
        assert_eq!((r.lhs.as_str(), r.rhs.as_str()), ("2*L", "2*L"));

        let node = catalog("node").unwrap();
        let r = run_check("nodaljac-cks", "node", &node, &opts).unwrap();
        assert_eq!((r.lhs.as_str(), r.status), ("1 - q + q^2*L", Status::Pass));
    }

    #[test]
    fn all_checks_on_small_catalog() {
        let opts = CheckOptions::default();
        for name in ["empty", "point", "node", "banana", "triangle", "theta", "pair-of-lines", "banana-g1"] {
            let g = catalog(name).unwrap();
            for check in CHECK_NAMES {
                let r = run_check(check, name, &g, &opts).unwrap();
                assert!(!r.failed(), "{check} on {name}: {r:?}");
            }
        }
    }

    #[test]
    fn skips_and_errors() {
        let opts = CheckOptions::default();
        let g1 = catalog("banana-g1").unwrap();
        assert_eq!(run_check("nodaljac-cks", "banana-g1", &g1, &opts).unwrap().status, Status::Skip);
        let empty = catalog("empty").unwrap();
        assert_eq!(run_check("jacobian-strata", "empty", &empty, &opts).unwrap().status, Status::Skip);
        assert!(matches!(run_check("nope", "empty", &empty, &opts), Err(Error::UnknownCheck(_))));
        assert!(CHECK_NAMES.windows(2).all(|w| w[0] < w[1]));
        assert!(is_check_name("severi") && !is_check_name("nope"));
    }

    #[test]
    fn fnv_is_stable() {
        assert_eq!(fnv(""), 0xcbf2_9ce4_8422_2325);
        assert_ne!(fnv("a"), fnv("b"));
    }
}
