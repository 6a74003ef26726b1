//! JSON documents holding one diagram.
//!
//! ```json
//! {"schema":1,"type":"combinatorial","n":2,"cells":[[0,0],[0,1],[1,0],[1,1]]}
//! {"schema":1,"type":"geometric","points":[["1/8","1/8"],["1/8","5/8"]]}
//! {"schema":1,"type":"grid","n":2,"points":[[0,0],[0,1],[1,0],[1,1]],"label":"ab"}
//! ```
//!
//! Rationals are strings so that they never pass through floating point.
//! `schema` may be omitted on input; `name` and `provenance` are optional.

use serde::{Deserialize, Serialize};
use trigrid_core::tgd::{format_rational, parse_rational};
use trigrid_core::{ColorPair, CombinatorialTgd, GeometricTgd, GridDiagram, Rational};

pub const SCHEMA_VERSION: u32 = 1;

#[derive(Debug, thiserror::Error)]
pub enum DocumentError {
    #[error("schema error at line {line}, column {column}: {message}")]
    Schema { line: usize, column: usize, message: String },
    #[error("invalid {field}: {message}")]
    Field { field: String, message: String },
    #[error("invalid diagram: {0}")]
    Validation(#[from] trigrid_core::Error),
}

#[derive(Debug, Clone, PartialEq, Eq)]
pub enum Diagram {
    Combinatorial(CombinatorialTgd),
    Geometric(GeometricTgd),
    Grid(GridDiagram),
}

impl Diagram {
    pub fn kind(&self) -> &'static str {
        match self {
            Diagram::Combinatorial(_) => "combinatorial",
            Diagram::Geometric(_) => "geometric",
            Diagram::Grid(_) => "grid",
        }
    }
}

#[derive(Debug, Clone, PartialEq, Eq)]
pub struct DiagramDocument {
    pub diagram: Diagram,
    pub name: Option<String>,
    pub provenance: Option<String>,
}

impl DiagramDocument {
    pub fn new(diagram: Diagram) -> Self {
        DiagramDocument { diagram, name: None, provenance: None }
    }

    pub fn named(mut self, name: impl Into<String>) -> Self {
        self.name = Some(name.into());
        self
    }

    pub fn with_provenance(mut self, provenance: impl Into<String>) -> Self {
        self.provenance = Some(provenance.into());
        self
    }
}

impl From<CombinatorialTgd> for DiagramDocument {
    fn from(d: CombinatorialTgd) -> Self {
        DiagramDocument::new(Diagram::Combinatorial(d))
    }
}

impl From<GeometricTgd> for DiagramDocument {
    fn from(d: GeometricTgd) -> Self {
        DiagramDocument::new(Diagram::Geometric(d))
    }
}

impl From<GridDiagram> for DiagramDocument {
    fn from(g: GridDiagram) -> Self {
        DiagramDocument::new(Diagram::Grid(g))
    }
}

fn schema_version() -> u32 {
    SCHEMA_VERSION
}

#[derive(Serialize)]
struct Raw {
    schema: u32,
    #[serde(flatten)]
    body: RawBody,
    #[serde(skip_serializing_if = "Option::is_none")]
    name: Option<String>,
    #[serde(skip_serializing_if = "Option::is_none")]
    provenance: Option<String>,
}

#[derive(Serialize)]
#[serde(tag = "type", rename_all = "lowercase")]
enum RawBody {
    Combinatorial { n: u32, cells: Vec<[u32; 2]> },
    Geometric { points: Vec<[String; 2]> },
    Grid { n: u32, points: Vec<[u32; 2]>, label: String },
}

#[derive(Deserialize, Clone, Copy, PartialEq, Eq)]
#[serde(rename_all = "lowercase")]
enum Kind {
    Combinatorial,
    Geometric,
    Grid,
}

/// Geometric points are strings, grid points integers.
#[derive(Deserialize)]
#[serde(untagged)]
enum Coord {
    Int(u32),
    Text(String),
}

// Flat rather than internally tagged so that serde_json reports the position
// of type errors inside the body.
#[derive(Deserialize)]
#[serde(deny_unknown_fields)]
struct RawInput {
    #[serde(default = "schema_version")]
    schema: u32,
    #[serde(rename = "type")]
    kind: Kind,
    n: Option<u32>,
    cells: Option<Vec<[u32; 2]>>,
    points: Option<Vec<[Coord; 2]>>,
    label: Option<String>,
    name: Option<String>,
    provenance: Option<String>,
}

fn field_error(field: impl Into<String>, message: impl Into<String>) -> DocumentError {
    DocumentError::Field { field: field.into(), message: message.into() }
}

fn required<T>(v: Option<T>, field: &str, kind: &str) -> Result<T, DocumentError> {
    v.ok_or_else(|| field_error(field, format!("required for {kind} documents")))
}

pub fn parse(bytes: &[u8]) -> Result<DiagramDocument, DocumentError> {
    let raw: RawInput = serde_json::from_slice(bytes).map_err(|e| {
        let message = e.to_string();
        // serde_json appends the position, which is reported separately
        let message = match message.rsplit_once(" at line ") {
            Some((head, _)) => head.to_string(),
            None => message,
        };
        DocumentError::Schema { line: e.line(), column: e.column(), message }
    })?;
    if raw.schema != SCHEMA_VERSION {
        return Err(field_error("schema", format!("unsupported version {}, expected {SCHEMA_VERSION}", raw.schema)));
    }
    let unexpected = |present: bool, field: &str, kind: &str| {
        if present {
            Err(field_error(field, format!("not allowed in {kind} documents")))
        } else {
            Ok(())
        }
    };
    let diagram = match raw.kind {
        Kind::Combinatorial => {
            unexpected(raw.points.is_some(), "points", "combinatorial")?;
            unexpected(raw.label.is_some(), "label", "combinatorial")?;
            let n = required(raw.n, "n", "combinatorial")?;
            let cells = required(raw.cells, "cells", "combinatorial")?;
            Diagram::Combinatorial(CombinatorialTgd::new(n, cells.into_iter().map(|[c, r]| (c, r)))?)
        }
        Kind::Geometric => {
            unexpected(raw.n.is_some(), "n", "geometric")?;
            unexpected(raw.cells.is_some(), "cells", "geometric")?;
            unexpected(raw.label.is_some(), "label", "geometric")?;
            let points = required(raw.points, "points", "geometric")?;
            let mut parsed = Vec::with_capacity(points.len());
            for (k, pair) in points.iter().enumerate() {
                let mut xy = [Rational::default(); 2];
                for (axis, coord) in pair.iter().enumerate() {
                    let field = || format!("points[{k}][{axis}]");
                    xy[axis] = match coord {
                        Coord::Text(s) => parse_rational(s)
                            .ok_or_else(|| field_error(field(), format!("{s:?} is not a rational p/q")))?,
                        Coord::Int(_) => return Err(field_error(field(), "rationals are written as strings")),
                    };
                }
                parsed.push((xy[0], xy[1]));
            }
            Diagram::Geometric(GeometricTgd::new(parsed)?)
        }
        Kind::Grid => {
            unexpected(raw.cells.is_some(), "cells", "grid")?;
            let n = required(raw.n, "n", "grid")?;
            let points = required(raw.points, "points", "grid")?;
            let mut cells = Vec::with_capacity(points.len());
            for (k, pair) in points.iter().enumerate() {
                match pair {
                    [Coord::Int(c), Coord::Int(r)] => cells.push((*c, *r)),
                    _ => return Err(field_error(format!("points[{k}]"), "grid points are integer pairs")),
                }
            }
            let label = match raw.label.as_deref() {
                None => ColorPair::AlphaBeta,
                Some(s) => ColorPair::parse(s)
                    .ok_or_else(|| field_error("label", format!("{s:?} is not one of ab, bc, ca")))?,
            };
            Diagram::Grid(GridDiagram::new(n, cells, label)?)
        }
    };
    Ok(DiagramDocument { diagram, name: raw.name, provenance: raw.provenance })
}

fn raw_body(d: &Diagram) -> RawBody {
    match d {
        Diagram::Combinatorial(d) => {
            RawBody::Combinatorial { n: d.n(), cells: d.cells().iter().map(|c| [c.col, c.row]).collect() }
        }
        Diagram::Geometric(d) => RawBody::Geometric {
            points: d.points().iter().map(|(x, y)| [format_rational(x), format_rational(y)]).collect(),
        },
        Diagram::Grid(g) => RawBody::Grid {
            n: g.n(),
            points: g.points().iter().map(|c| [c.col, c.row]).collect(),
            label: g.label().ascii().to_string(),
        },
    }
}

/// Compact JSON with a fixed field order: schema, type, body, name,
/// provenance.
pub fn emit(doc: &DiagramDocument) -> String {
    serde_json::to_string(&raw(doc)).expect("documents always serialize")
}

pub fn to_value(doc: &DiagramDocument) -> serde_json::Value {
    serde_json::to_value(raw(doc)).expect("documents always serialize")
}

fn raw(doc: &DiagramDocument) -> Raw {
    Raw {
        schema: SCHEMA_VERSION,
        body: raw_body(&doc.diagram),
        name: doc.name.clone(),
        provenance: doc.provenance.clone(),
    }
}

#[cfg(test)]
mod tests {
    use super::*;
    use trigrid_core::constructions::example_n2;
    use trigrid_core::Error;

    #[test]
    fn parses_the_square() {
        let doc = parse(br#"{"type":"combinatorial","n":2,"cells":[[0,0],[0,1],[1,0],[1,1]]}"#).unwrap();
        assert_eq!(doc.diagram, Diagram::Combinatorial(example_n2()));
    }

    #[test]
    fn round_trip() {
        let doc = DiagramDocument::from(example_n2().to_geometric()).named("square").with_provenance("test");
        let text = emit(&doc);
        assert!(text.starts_with(r#"{"schema":1,"type":"geometric","points":[["1/8","1/8"]"#), "{text}");
        assert_eq!(parse(text.as_bytes()).unwrap(), doc);
    }

    #[test]
    fn unpaired_point_is_a_validation_error() {
        let err = parse(br#"{"type":"geometric","points":[["1/8","1/8"]]}"#).unwrap_err();
        assert!(matches!(err, DocumentError::Validation(Error::UnpairedPoint { .. })), "{err}");
    }

    #[test]
    fn schema_errors_carry_positions() {
        let err = parse(b"{\n  \"type\": \"combinatorial\",\n  \"n\": \"two\"\n}").unwrap_err();
        let DocumentError::Schema { line, .. } = err else { panic!("{err}") };
        assert_eq!(line, 3);
        let err = parse(br#"{"type":"geometric","points":[["1/8","0.5"]]}"#).unwrap_err();
        assert!(err.to_string().contains("points[0][1]"), "{err}");
        let err = parse(br#"{"schema":2,"type":"combinatorial","n":1,"cells":[]}"#).unwrap_err();
        assert!(matches!(err, DocumentError::Field { .. }));
        let err = parse(br#"{"type":"combinatorial","n":2,"cells":[],"colour":1}"#).unwrap_err();
        assert!(matches!(err, DocumentError::Schema { .. }), "{err}");
    }

    #[test]
    fn values_keep_field_order() {
        let doc = DiagramDocument::from(example_n2()).named("square");
        assert_eq!(serde_json::to_string(&to_value(&doc)).unwrap(), emit(&doc));
    }

    #[test]
    fn grid_labels() {
        let doc = parse(br#"{"type":"grid","n":2,"points":[[0,0],[0,1],[1,0],[1,1]],"label":"bc"}"#).unwrap();
        let Diagram::Grid(g) = &doc.diagram else { panic!() };
        assert_eq!(g.label(), ColorPair::BetaGamma);
        assert_eq!(parse(emit(&doc).as_bytes()).unwrap(), doc);
        assert!(parse(br#"{"type":"grid","n":2,"points":[],"label":"xy"}"#).is_err());
    }
}
