//! The `invariants` report.

use serde::Serialize;

use curvecount::graph::ForestMethod;
use curvecount::invariants::{
    hilbert_series, ic_weight_poly, jacobian_class, jacobian_weight_poly, numeric_invariants, perverse_series, severi_vectors,
    NumericInvariants,
};
use curvecount::{Multigraph, Result};

/// A value, or the reason it does not apply to this graph.
#[derive(Clone, Debug, Serialize)]
#[serde(untagged)]
pub enum Entry<T> {
    Value(T),
    Unavailable { unavailable: String },
}

impl<T> Entry<T> {
    fn from(result: Result<T>) -> Self {
        match result {
            Ok(v) => Entry::Value(v),
            Err(e) => Entry::Unavailable { unavailable: e.to_string() },
        }
    }
}

impl<T: Serialize> Entry<T> {
    fn text(&self) -> String {
        match self {
            Entry::Value(v) => match serde_json::to_value(v).expect("report values serialize") {
                serde_json::Value::String(s) => s,
                serde_json::Value::Array(items) => {
                    let items: Vec<String> = items.iter().map(ToString::to_string).collect();
                    format!("[{}]", items.join(", "))
                }
                other => other.to_string(),
            },
            Entry::Unavailable { unavailable } => format!("n/a ({unavailable})"),
        }
    }
}

#[derive(Clone, Debug, Serialize)]
pub struct JacobianEntry {
    pub strata: String,
    pub closed: String,
}

#[derive(Clone, Debug, Serialize)]
pub struct SeveriEntry {
    pub nbar: Vec<String>,
    pub n: Vec<String>,
}

#[derive(Clone, Debug, Serialize)]
pub struct InvariantsReport {
    pub graph: String,
    pub vertices: usize,
    pub edges: usize,
    pub numeric: NumericInvariants,
    pub h1: usize,
    pub n: Entry<Vec<u64>>,
    pub complexity: Entry<String>,
    pub jacobian: Entry<JacobianEntry>,
    pub weight_jacobian: Entry<String>,
    pub weight_ic: Entry<String>,
    pub hilbert: Entry<String>,
    pub perverse: Entry<String>,
    pub severi: Entry<SeveriEntry>,
}

fn strings<T: ToString>(values: &[T]) -> Vec<String> {
    values.iter().map(ToString::to_string).collect()
}

pub fn build(label: &str, g: &Multigraph) -> InvariantsReport {
    InvariantsReport {
        graph: label.to_string(),
        vertices: g.vertex_count(),
        edges: g.edge_count(),
        numeric: numeric_invariants(g),
        h1: g.first_betti(),
        n: Entry::from(g.n_vector()),
        complexity: Entry::from(g.spanning_forest_count(ForestMethod::MatrixTree).map(|c| c.to_string())),
        jacobian: Entry::from(jacobian_class(g).map(|j| JacobianEntry {
            strata: j.strata.to_string(),
            closed: j.closed.to_string(),
        })),
        weight_jacobian: Entry::from(jacobian_weight_poly(g).map(|w| w.to_string())),
        weight_ic: Entry::from(ic_weight_poly(g).map(|w| w.to_string())),
        hilbert: Entry::from(hilbert_series(g).map(|s| s.to_string())),
        perverse: Entry::from(perverse_series(g).map(|s| s.to_string())),
        severi: Entry::from(severi_vectors(g).map(|v| SeveriEntry {
            nbar: strings(&v.nbar),
            n: strings(&v.n),
        })),
    }
}

pub fn render_text(r: &InvariantsReport) -> String {
    let n = &r.numeric;
    let mut lines = vec![
        format!("graph: {} ({} vertices, {} edges)", r.graph, r.vertices, r.edges),
        format!("components: {}", n.components),
        format!("delta: {}", n.cogenus),
        format!("delta_a: {}", n.affine_rank),
        format!("arithmetic_genus: {}", n.arithmetic_genus),
        format!("geometric_genus: {}", n.geometric_genus),
        format!("abelian_rank: {}", n.abelian_rank),
        format!("h1: {}", r.h1),
        format!("n: {}", r.n.text()),
        format!("complexity: {}", r.complexity.text()),
    ];
    match &r.jacobian {
        Entry::Value(j) => {
            lines.push(format!("jacobian_strata: {}", j.strata));
            lines.push(format!("jacobian_closed: {}", j.closed));
        }
        other => lines.push(format!("jacobian: {}", other.text())),
    }
    lines.push(format!("weight_jacobian: {}", r.weight_jacobian.text()));
    lines.push(format!("weight_ic: {}", r.weight_ic.text()));
    lines.push(format!("hilbert: {}", r.hilbert.text()));
    lines.push(format!("perverse: {}", r.perverse.text()));
    match &r.severi {
        Entry::Value(s) => {
            lines.push(format!("severi_nbar: [{}]", s.nbar.join(", ")));
            lines.push(format!("severi_n: [{}]", s.n.join(", ")));
        }
        other => lines.push(format!("severi: {}", other.text())),
    }
    let mut out = lines.join("\n");
    out.push('\n');
    out
}

pub fn render_json(r: &InvariantsReport) -> String {
    let mut out = serde_json::to_string_pretty(r).expect("report serializes");
    out.push('\n');
    out
}
