//! File formats for graphs, divisors and piecewise-linear functions.
//!
//! Graphs:
//!
//! ```json
//! {"vertices":[{"id":"v1","weight":0},{"id":"v2"}],
//!  "edges":[{"id":"e1","ends":["v1","v2"],"length":"3/2"}]}
//! ```
//!
//! Divisors use `{"chips":[{"at":"v1","n":2},{"at":{"edge":"e1","offset":"1/3"},"n":-1}]}`
//! or the short form `v1:2,e1@1/3:-1`. Functions list a value at every vertex
//! and at each interior breakpoint: `{"values":[{"at":"v1","value":"0"},...]}`.
//!
//! Edge offsets are measured from the endpoint listed first in `vertices`,
//! whatever order `ends` uses. Rationals are lowest-terms strings; plain JSON
//! integers are accepted on input.

use serde::{Deserialize, Serialize};
use serde_json::Value;

use crate::divisor::Divisor;
use crate::error::{Error, Result};
use crate::graph::{FiniteGraph, GraphPoint, MetricGraph};
use crate::pl::PlFunction;
use crate::rational::{self, Rational};

#[derive(Debug, Clone, PartialEq, Serialize, Deserialize)]
#[serde(deny_unknown_fields)]
pub struct GraphFile {
    pub vertices: Vec<VertexEntry>,
    pub edges: Vec<EdgeEntry>,
}

#[derive(Debug, Clone, PartialEq, Serialize, Deserialize)]
#[serde(deny_unknown_fields)]
pub struct VertexEntry {
    pub id: String,
    #[serde(default, skip_serializing_if = "is_zero")]
    pub weight: u32,
}

#[derive(Debug, Clone, PartialEq, Serialize, Deserialize)]
#[serde(deny_unknown_fields)]
pub struct EdgeEntry {
    pub id: String,
    pub ends: [String; 2],
    #[serde(default = "unit_length")]
    pub length: RationalText,
}

/// A rational written either as a string `"p/q"` or as a JSON integer.
#[derive(Debug, Clone, PartialEq, Serialize, Deserialize)]
#[serde(untagged)]
pub enum RationalText {
    Text(String),
    Integer(i64),
}

impl RationalText {
    fn value(&self, what: &str) -> Result<Rational> {
        match self {
            RationalText::Text(s) => rational::parse(s)
                .map_err(|_| Error::validation(format!("{what}: cannot parse rational {s:?}"))),
            RationalText::Integer(n) => Ok(rational::int(*n)),
        }
    }
}

impl From<&Rational> for RationalText {
    fn from(r: &Rational) -> Self {
        RationalText::Text(rational::format(r))
    }
}

#[derive(Debug, Clone, PartialEq, Serialize, Deserialize)]
#[serde(untagged)]
pub enum PointRef {
    Vertex(String),
    Edge { edge: String, offset: RationalText },
}

#[derive(Debug, Clone, PartialEq, Serialize, Deserialize)]
#[serde(deny_unknown_fields)]
pub struct ChipEntry {
    pub at: PointRef,
    pub n: i64,
}

#[derive(Debug, Clone, PartialEq, Serialize, Deserialize)]
#[serde(deny_unknown_fields)]
pub struct DivisorFile {
    pub chips: Vec<ChipEntry>,
}

#[derive(Debug, Clone, PartialEq, Serialize, Deserialize)]
#[serde(deny_unknown_fields)]
pub struct ValueEntry {
    pub at: PointRef,
    pub value: RationalText,
}

#[derive(Debug, Clone, PartialEq, Serialize, Deserialize)]
#[serde(deny_unknown_fields)]
pub struct PlFile {
    pub values: Vec<ValueEntry>,
}

fn is_zero(w: &u32) -> bool {
    *w == 0
}

fn unit_length() -> RationalText {
    RationalText::Text("1".into())
}

fn syntax(what: &str, e: serde_json::Error) -> Error {
    // serde_json messages end with the line and column
    Error::validation(format!("{what}: {e}"))
}

impl GraphFile {
    pub fn from_graph(g: &MetricGraph) -> Self {
        let m = g.model();
        GraphFile {
            vertices: m
                .vertices()
                .map(|v| VertexEntry {
                    id: m.vertex_name(v).to_string(),
                    weight: g.weight(v),
                })
                .collect(),
            edges: m
                .edges()
                .map(|e| {
                    let (t, h) = m.ends(e);
                    EdgeEntry {
                        id: m.edge_name(e).to_string(),
                        ends: [m.vertex_name(t).to_string(), m.vertex_name(h).to_string()],
                        length: g.length(e).into(),
                    }
                })
                .collect(),
        }
    }

    pub fn to_graph(&self) -> Result<MetricGraph> {
        let names: Vec<String> = self.vertices.iter().map(|v| v.id.clone()).collect();
        let index = |name: &str, edge: &str| {
            names.iter().position(|n| n == name).ok_or_else(|| {
                Error::validation(format!("edge {edge:?}: unknown vertex {name:?} in ends"))
            })
        };
        let mut edges = Vec::with_capacity(self.edges.len());
        let mut lengths = Vec::with_capacity(self.edges.len());
        for e in &self.edges {
            let a = index(&e.ends[0], &e.id)?;
            let b = index(&e.ends[1], &e.id)?;
            edges.push((e.id.clone(), a, b));
            lengths.push(e.length.value(&format!("edge {:?} length", e.id))?);
        }
        let model = FiniteGraph::with_names(names, edges)?;
        let g = MetricGraph::new(model, lengths)?;
        if self.vertices.iter().any(|v| v.weight > 0) {
            g.with_weights(self.vertices.iter().map(|v| v.weight).collect())
        } else {
            Ok(g)
        }
    }
}

pub fn parse_graph(text: &str) -> Result<MetricGraph> {
    let file: GraphFile = serde_json::from_str(text).map_err(|e| syntax("graph file", e))?;
    file.to_graph()
}

pub fn graph_to_json(g: &MetricGraph) -> Value {
    serde_json::to_value(GraphFile::from_graph(g)).expect("graph file serializes")
}

pub fn point_ref(g: &MetricGraph, p: &GraphPoint) -> PointRef {
    let m = g.model();
    match p {
        GraphPoint::Vertex(v) => PointRef::Vertex(m.vertex_name(*v).to_string()),
        GraphPoint::Edge { edge, offset } => PointRef::Edge {
            edge: m.edge_name(*edge).to_string(),
            offset: offset.into(),
        },
    }
}

pub fn resolve_point(g: &MetricGraph, p: &PointRef) -> Result<GraphPoint> {
    let m = g.model();
    match p {
        PointRef::Vertex(name) => m
            .vertex_by_name(name)
            .map(GraphPoint::Vertex)
            .ok_or_else(|| Error::validation(format!("unknown vertex {name:?}"))),
        PointRef::Edge { edge, offset } => {
            let e = m
                .edge_by_name(edge)
                .ok_or_else(|| Error::validation(format!("unknown edge {edge:?}")))?;
            g.point_on_edge(e, offset.value(&format!("offset on edge {edge:?}"))?)
        }
    }
}

/// Parses a point written as `v1` or `e1@1/3`.
pub fn parse_point(g: &MetricGraph, s: &str) -> Result<GraphPoint> {
    let s = s.trim();
    let r = match s.split_once('@') {
        Some((edge, offset)) => PointRef::Edge {
            edge: edge.trim().to_string(),
            offset: RationalText::Text(offset.trim().to_string()),
        },
        None => PointRef::Vertex(s.to_string()),
    };
    resolve_point(g, &r)
}

pub fn format_point(g: &MetricGraph, p: &GraphPoint) -> String {
    let m = g.model();
    match p {
        GraphPoint::Vertex(v) => m.vertex_name(*v).to_string(),
        GraphPoint::Edge { edge, offset } => {
            format!("{}@{}", m.edge_name(*edge), rational::format(offset))
        }
    }
}

/// Parses the short form `v1:2,e1@1/3:-1`. A bare point counts one chip;
/// the empty string is the zero divisor.
pub fn parse_divisor_short(g: &MetricGraph, s: &str) -> Result<Divisor> {
    let mut d = Divisor::new();
    for item in s.split(',').map(str::trim).filter(|t| !t.is_empty()) {
        let (at, n) = match item.rsplit_once(':') {
            Some((at, n)) => {
                let n: i64 = n
                    .trim()
                    .parse()
                    .map_err(|_| Error::validation(format!("bad chip count in {item:?}")))?;
                (at, n)
            }
            None => (item, 1),
        };
        d.add_at(parse_point(g, at)?, n);
    }
    Ok(d)
}

/// Points in canonical order; the empty divisor prints as `0`.
pub fn format_divisor_short(g: &MetricGraph, d: &Divisor) -> String {
    if d.is_zero() {
        return "0".into();
    }
    d.iter()
        .map(|(p, n)| format!("{}:{}", format_point(g, p), n))
        .collect::<Vec<_>>()
        .join(",")
}

pub fn divisor_from_file(g: &MetricGraph, file: &DivisorFile) -> Result<Divisor> {
    let mut d = Divisor::new();
    for c in &file.chips {
        d.add_at(resolve_point(g, &c.at)?, c.n);
    }
    Ok(d)
}

pub fn divisor_to_file(g: &MetricGraph, d: &Divisor) -> DivisorFile {
    DivisorFile {
        chips: d
            .iter()
            .map(|(p, n)| ChipEntry {
                at: point_ref(g, p),
                n,
            })
            .collect(),
    }
}

pub fn divisor_to_json(g: &MetricGraph, d: &Divisor) -> Value {
    serde_json::to_value(divisor_to_file(g, d)).expect("divisor serializes")
}

pub fn parse_divisor_json(g: &MetricGraph, text: &str) -> Result<Divisor> {
    let file: DivisorFile = serde_json::from_str(text).map_err(|e| syntax("divisor file", e))?;
    divisor_from_file(g, &file)
}

/// JSON when the text starts with `{`, the short form otherwise.
pub fn parse_divisor(g: &MetricGraph, text: &str) -> Result<Divisor> {
    if text.trim_start().starts_with('{') {
        parse_divisor_json(g, text)
    } else {
        if text.trim() == "0" {
            return Ok(Divisor::new());
        }
        parse_divisor_short(g, text)
    }
}

pub fn pl_from_file(g: &MetricGraph, file: &PlFile) -> Result<PlFunction> {
    let m = g.model();
    let mut vertex_values: Vec<Option<Rational>> = vec![None; m.num_vertices()];
    let mut edge_breaks = vec![Vec::new(); m.num_edges()];
    for entry in &file.values {
        let value = entry.value.value("function value")?;
        match resolve_point(g, &entry.at)? {
            GraphPoint::Vertex(v) => {
                if vertex_values[v.0].replace(value).is_some() {
                    return Err(Error::validation(format!(
                        "vertex {:?} is given two values",
                        m.vertex_name(v)
                    )));
                }
            }
            GraphPoint::Edge { edge, offset } => edge_breaks[edge.0].push((offset, value)),
        }
    }
    let vertex_values = vertex_values
        .into_iter()
        .enumerate()
        .map(|(i, v)| {
            v.ok_or_else(|| {
                Error::validation(format!("no value at vertex {:?}", m.vertex_names()[i]))
            })
        })
        .collect::<Result<Vec<_>>>()?;
    for b in &mut edge_breaks {
        b.sort();
    }
    PlFunction::new(g, vertex_values, edge_breaks)
}

pub fn pl_to_file(g: &MetricGraph, f: &PlFunction) -> PlFile {
    let m = g.model();
    let mut values: Vec<ValueEntry> = m
        .vertices()
        .map(|v| ValueEntry {
            at: point_ref(g, &GraphPoint::Vertex(v)),
            value: f.vertex_value(v).into(),
        })
        .collect();
    for e in m.edges() {
        for (offset, value) in f.edge_breaks(e) {
            values.push(ValueEntry {
                at: PointRef::Edge {
                    edge: m.edge_name(e).to_string(),
                    offset: offset.into(),
                },
                value: value.into(),
            });
        }
    }
    PlFile { values }
}

pub fn pl_to_json(g: &MetricGraph, f: &PlFunction) -> Value {
    serde_json::to_value(pl_to_file(g, f)).expect("function serializes")
}

pub fn parse_pl(g: &MetricGraph, text: &str) -> Result<PlFunction> {
    let file: PlFile = serde_json::from_str(text).map_err(|e| syntax("function file", e))?;
    pl_from_file(g, &file)
}
