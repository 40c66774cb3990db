use serde::{Deserialize, Serialize};

use super::Multigraph;
use crate::error::Result;

#[derive(Serialize, Deserialize)]
#[serde(deny_unknown_fields)]
struct VertexRecord {
    id: String,
    genus: u32,
}

#[derive(Serialize, Deserialize)]
#[serde(deny_unknown_fields)]
struct EdgeRecord {
    id: String,
    ends: [String; 2],
}

#[derive(Serialize, Deserialize)]
#[serde(deny_unknown_fields)]
struct GraphRecord {
    vertices: Vec<VertexRecord>,
    edges: Vec<EdgeRecord>,
}

impl Multigraph {
    /// Compact canonical JSON; also the cache key material.
    pub fn to_json(&self) -> String {
        let record = GraphRecord {
            vertices: self
                .vertices
                .iter()
                .map(|v| VertexRecord {
                    id: v.id.clone(),
                    genus: v.genus,
                })
                .collect(),
            edges: self
                .edges
                .iter()
                .map(|e| EdgeRecord {
                    id: e.id.clone(),
                    ends: [self.vertices[e.ends.0].id.clone(), self.vertices[e.ends.1].id.clone()],
                })
                .collect(),
        };
        serde_json::to_string(&record).expect("graph records serialize")
    }

    /// Parses the graph JSON format. Syntax errors carry line and column.
    pub fn from_json(text: &str) -> Result<Self> {
        let record: GraphRecord = serde_json::from_str(text)?;
        Multigraph::new(
            record.vertices.into_iter().map(|v| (v.id, v.genus)),
            record.edges.into_iter().map(|e| {
                let [a, b] = e.ends;
                (e.id, a, b)
            }),
        )
    }
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::error::Error;

    #[test]
    fn exact_format() {
        let g = Multigraph::from_index_edges(2, &[(0, 1), (1, 1)]);
        assert_eq!(
            g.to_json(),
            r#"{"vertices":[{"id":"v1","genus":0},{"id":"v2","genus":0}],"edges":[{"id":"e1","ends":["v1","v2"]},{"id":"e2","ends":["v2","v2"]}]}"#
        );
    }

    #[test]
    fn round_trip() {
        let g = Multigraph::from_index_edges(3, &[(0, 1), (2, 1), (0, 0)]).with_genera(&[1, 0, 2]);
        assert_eq!(Multigraph::from_json(&g.to_json()).unwrap(), g);
    }

    #[test]
    fn unknown_keys_rejected() {
        let text = r#"{"vertices":[{"id":"a","genus":0,"x":1}],"edges":[]}"#;
        assert!(matches!(Multigraph::from_json(text), Err(Error::Json(_))));
    }

    #[test]
    fn syntax_error_reports_position() {
        let err = Multigraph::from_json("{\n  \"vertices\": [,]\n}").unwrap_err();
        assert!(err.to_string().contains("line 2"), "{err}");
    }

    #[test]
    fn undeclared_endpoint() {
        let text = r#"{"vertices":[{"id":"a","genus":0}],"edges":[{"id":"e","ends":["a","b"]}]}"#;
        assert!(matches!(Multigraph::from_json(text), Err(Error::UnknownVertex { .. })));
    }
}
