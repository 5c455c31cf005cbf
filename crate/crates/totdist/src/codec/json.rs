//! JSON edge lists: `{schema_version, order, directed, edges, family?, params?}`.
//!
//! Edges are written sorted, as `[u, v]` with `u < v` for graphs and as arcs
//! `u -> v` for digraphs.

use std::collections::BTreeMap;

use serde::{Deserialize, Serialize};
use serde_json::Value;

use totdist_core::constructions::{Built, ConstructionSpec};
use totdist_core::{Digraph, Graph};

use super::CodecError;

pub const SCHEMA_VERSION: u32 = 1;

#[derive(Debug, Clone, PartialEq, Serialize, Deserialize)]
#[serde(deny_unknown_fields)]
pub struct EdgeList {
    pub schema_version: u32,
    pub order: usize,
    pub directed: bool,
    pub edges: Vec<[usize; 2]>,
    #[serde(default, skip_serializing_if = "Option::is_none")]
    pub family: Option<String>,
    #[serde(default, skip_serializing_if = "Option::is_none")]
    pub params: Option<BTreeMap<String, Value>>,
}

/// A decoded edge list.
#[derive(Debug, Clone, PartialEq)]
pub struct JsonGraph {
    pub graph: Built,
    pub family: Option<String>,
    pub params: Option<BTreeMap<String, Value>>,
}

fn spec_params(spec: &ConstructionSpec) -> BTreeMap<String, Value> {
    let mut p: BTreeMap<String, Value> = spec
        .params()
        .into_iter()
        .map(|(k, v)| (k.to_string(), Value::from(v)))
        .collect();
    match spec {
        ConstructionSpec::ChordAugmented { chords, .. } => {
            let list: Vec<Value> = chords
                .iter()
                .map(|&(i, j)| Value::from(vec![i, j]))
                .collect();
            p.insert("chords".into(), Value::from(list));
        }
        ConstructionSpec::MinRad2 { cycle_lengths, .. } => {
            p.insert("cycle_lengths".into(), Value::from(cycle_lengths.clone()));
        }
        _ => {}
    }
    p
}

pub fn to_edge_list(b: &Built, spec: Option<&ConstructionSpec>) -> EdgeList {
    let mut edges: Vec<[usize; 2]> = match b {
        Built::Graph(g) => g.edges().map(|(u, v)| [u.min(v), u.max(v)]).collect(),
        Built::Digraph(d) => d.arcs().map(|(u, v)| [u, v]).collect(),
    };
    edges.sort_unstable();
    EdgeList {
        schema_version: SCHEMA_VERSION,
        order: b.order(),
        directed: b.is_directed(),
        edges,
        family: spec.map(|s| s.name().to_string()),
        params: spec.map(spec_params),
    }
}

/// Pretty-printed with a trailing newline.
pub fn write_json_edges(b: &Built, spec: Option<&ConstructionSpec>) -> String {
    let mut s = serde_json::to_string_pretty(&to_edge_list(b, spec)).expect("plain data");
    s.push('\n');
    s
}

pub fn from_edge_list(e: EdgeList) -> Result<JsonGraph, CodecError> {
    if e.schema_version != SCHEMA_VERSION {
        return Err(CodecError::SchemaVersion {
            found: e.schema_version,
            expected: SCHEMA_VERSION,
        });
    }
    let graph = if e.directed {
        let mut d = Digraph::new(e.order)?;
        for &[u, v] in &e.edges {
            if u < e.order && v < e.order && d.has_arc(u, v) {
                return Err(CodecError::DuplicateEdge { u, v });
            }
            d.add_arc(u, v)?;
        }
        Built::Digraph(d)
    } else {
        let mut g = Graph::new(e.order)?;
        for &[u, v] in &e.edges {
            if u < e.order && v < e.order && g.has_edge(u, v) {
                return Err(CodecError::DuplicateEdge { u, v });
            }
            g.add_edge(u, v)?;
        }
        Built::Graph(g)
    };
    Ok(JsonGraph {
        graph,
        family: e.family,
        params: e.params,
    })
}

pub fn read_json_edges(text: &str) -> Result<JsonGraph, CodecError> {
    let e: EdgeList = serde_json::from_str(text).map_err(|e| CodecError::Json(e.to_string()))?;
    from_edge_list(e)
}

#[cfg(test)]
mod tests {
    use super::*;
    use totdist_core::constructions::cycle;

    #[test]
    fn cycle_roundtrip() {
        let c4 = Built::Graph(cycle(4).unwrap());
        let text = write_json_edges(&c4, None);
        assert!(text.contains("\"schema_version\": 1"));
        assert!(!text.contains("family"));
        let back = read_json_edges(&text).unwrap();
        assert_eq!(back.graph, c4);
        assert_eq!(back.family, None);
    }

    #[test]
    fn carries_family() {
        let spec = ConstructionSpec::Dnrs { n: 6, r: 3, s: 1 };
        let d = spec.build().unwrap();
        let back = read_json_edges(&write_json_edges(&d, Some(&spec))).unwrap();
        assert_eq!(back.graph, d);
        assert_eq!(back.family.as_deref(), Some("D_nrs"));
        let p = back.params.unwrap();
        assert_eq!(p["n"], 6);
        assert_eq!(p["s"], 1);
        let chords = ConstructionSpec::ChordAugmented {
            n: 7,
            r: 3,
            chords: vec![(5, 1)],
        };
        let e = to_edge_list(&chords.build().unwrap(), Some(&chords));
        assert_eq!(e.params.unwrap()["chords"], serde_json::json!([[5, 1]]));
    }

    #[test]
    fn sorted_edges() {
        let g = Graph::from_edges(4, [(3, 2), (1, 0), (2, 0)]).unwrap();
        let e = to_edge_list(&Built::Graph(g), None);
        assert_eq!(e.edges, vec![[0, 1], [0, 2], [2, 3]]);
    }

    #[test]
    fn rejects_bad_input() {
        let bad = |s: &str| read_json_edges(s).unwrap_err();
        assert!(matches!(
            bad(r#"{"schema_version":1,"order":3,"directed":false,"edges":[[1,1]]}"#),
            CodecError::Graph(totdist_core::Error::SelfLoop { vertex: 1 })
        ));
        assert!(matches!(
            bad(r#"{"schema_version":1,"order":3,"directed":false,"edges":[[0,1],[1,0]]}"#),
            CodecError::DuplicateEdge { u: 1, v: 0 }
        ));
        assert!(matches!(
            bad(r#"{"schema_version":1,"order":3,"directed":true,"edges":[[0,3]]}"#),
            CodecError::Graph(totdist_core::Error::VertexOutOfRange {
                vertex: 3,
                order: 3
            })
        ));
        assert!(matches!(
            bad(r#"{"schema_version":2,"order":3,"directed":true,"edges":[]}"#),
            CodecError::SchemaVersion {
                found: 2,
                expected: 1
            }
        ));
        assert!(matches!(
            bad(r#"{"schema_version":1,"order":3,"directed":true,"edges":[],"extra":0}"#),
            CodecError::Json(_)
        ));
    }
}
