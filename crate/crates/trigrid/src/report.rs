//! JSON and text views of analysis results.

use std::fmt::Write;

use serde::Serialize;
use serde_json::{json, Value};
use trigrid_core::enumerate::{Census, Enumeration};
use trigrid_core::surface::{FillabilityReport, ObstructionFailure, ObstructionVerdict, SurfaceReport};
use trigrid_core::tgd::format_rational;
use trigrid_core::{CombinatorialTgd, GridDiagram, SymmetryGroup};

use crate::document::{self, Diagram, DiagramDocument};

pub fn symmetry_name(g: SymmetryGroup) -> &'static str {
    match g {
        SymmetryGroup::None => "none",
        SymmetryGroup::Translations => "translations",
        SymmetryGroup::TranslationsRotation => "translations+rotation",
        SymmetryGroup::TranslationsRotationReflection => "translations+rotation+reflection",
    }
}

#[derive(Serialize)]
struct ComponentView {
    tb: i64,
    rot: i64,
    rot_abs: u64,
    cusps: usize,
    unknot: &'static str,
}

#[derive(Serialize)]
struct GridView {
    label: String,
    crossings: usize,
    components: Vec<ComponentView>,
    link: &'static str,
}

fn fillability_value(f: &FillabilityReport) -> Value {
    let grids: Vec<GridView> = f
        .grids
        .iter()
        .map(|g| GridView {
            label: g.label.to_string(),
            crossings: g.crossings,
            link: g.link.as_str(),
            components: g
                .components
                .iter()
                .map(|c| ComponentView { tb: c.tb, rot: c.rot, rot_abs: c.rot_abs, cusps: c.cusps, unknot: c.unknot.as_str() })
                .collect(),
        })
        .collect();
    json!({ "status": f.status.as_str(), "grids": grids, "flags": f.flags })
}

pub fn surface_value(r: &SurfaceReport) -> Value {
    let components: Vec<Value> = r
        .components
        .iter()
        .map(|c| {
            json!({
                "least_point": c.vertices[0],
                "v": c.v, "e": c.e, "f": c.f,
                "faces": c.faces,
                "euler": c.euler,
                "orientable": c.orientable,
                "name": c.name.to_string(),
            })
        })
        .collect();
    let t = &r.total;
    json!({
        "b": t.b,
        "v": t.v, "e": t.e, "f": t.f,
        "link_components": t.faces,
        "euler": t.euler,
        "orientable": t.orientable,
        "connected": t.connected,
        "name": r.name().map(|n| n.to_string()),
        "components": components,
    })
}

/// Full analysis: per-grid Legendrian data, surface and status.
pub fn analysis_value(r: &SurfaceReport) -> Value {
    let fill = r.fillability.as_ref().expect("analysis includes fillability");
    let mut v = fillability_value(fill);
    v["surface"] = surface_value(r);
    v
}

/// Surface classification with the fillability status only.
pub fn classification_value(r: &SurfaceReport) -> Value {
    let mut v = surface_value(r);
    if let Some(f) = &r.fillability {
        v["status"] = json!(f.status.as_str());
        v["flags"] = json!(f.flags);
    }
    v
}

fn surface_line(r: &SurfaceReport) -> String {
    let t = &r.total;
    let kind = if t.orientable { "orientable" } else { "nonorientable" };
    match r.name() {
        Some(name) => format!("surface: {name} ({kind}, chi {})", t.euler),
        None if r.components.is_empty() => "surface: empty".to_string(),
        None => {
            let parts: Vec<String> = r.components.iter().map(|c| c.name.to_string()).collect();
            format!("surface: {} components [{}] ({kind}, chi {})", parts.len(), parts.join(", "), t.euler)
        }
    }
}

pub fn analysis_text(r: &SurfaceReport) -> String {
    let fill = r.fillability.as_ref().expect("analysis includes fillability");
    let mut out = String::new();
    for g in &fill.grids {
        let s = if g.components.len() == 1 { "" } else { "s" };
        writeln!(out, "{}: {} component{s}, {} crossings, {}", g.label, g.components.len(), g.crossings, g.link.as_str()).unwrap();
        for (k, c) in g.components.iter().enumerate() {
            writeln!(out, "  component {k}: tb {}, rot_abs {}, {}", c.tb, c.rot_abs, c.unknot.as_str()).unwrap();
        }
    }
    writeln!(out, "{}", surface_line(r)).unwrap();
    writeln!(out, "status: {}", fill.status).unwrap();
    for flag in &fill.flags {
        writeln!(out, "warning: {flag}").unwrap();
    }
    out
}

pub fn classification_text(r: &SurfaceReport) -> String {
    let t = &r.total;
    let mut out = format!("{}\n", surface_line(r));
    writeln!(out, "b {}, V {}, E {}, F {} = {} + {} + {}", t.b, t.v, t.e, t.f, t.faces[0], t.faces[1], t.faces[2]).unwrap();
    if r.components.len() > 1 {
        for c in &r.components {
            writeln!(out, "  from point {}: {} (chi {})", c.vertices[0], c.name, c.euler).unwrap();
        }
    }
    if let Some(f) = &r.fillability {
        writeln!(out, "status: {}", f.status).unwrap();
    }
    out
}

/// Rows from the top of the grid down, `•` for a point.
pub fn sketch(n: u32, points: impl IntoIterator<Item = (u32, u32)>) -> String {
    let n = n as usize;
    let mut rows = vec![vec!['·'; n]; n];
    for (c, r) in points {
        rows[n - 1 - r as usize][c as usize] = '•';
    }
    rows.iter()
        .map(|row| row.iter().map(char::to_string).collect::<Vec<_>>().join(" "))
        .collect::<Vec<_>>()
        .join("\n")
        + "\n"
}

pub fn grid_sketch(g: &GridDiagram) -> String {
    format!("{} (n = {})\n{}", g.label(), g.n(), sketch(g.n(), g.points().iter().map(|c| (c.col, c.row))))
}

pub fn diagram_text(doc: &DiagramDocument) -> String {
    let mut out = String::new();
    if let Some(name) = &doc.name {
        writeln!(out, "{name}").unwrap();
    }
    match &doc.diagram {
        Diagram::Combinatorial(d) => {
            writeln!(out, "combinatorial, n = {}, b = {}", d.n(), d.size()).unwrap();
            out.push_str(&sketch(d.n(), d.cells().iter().map(|c| (c.col, c.row))));
        }
        Diagram::Geometric(d) => {
            writeln!(out, "geometric, b = {}", d.points().len() / 2).unwrap();
            for (x, y) in d.points() {
                writeln!(out, "({}, {})", format_rational(x), format_rational(y)).unwrap();
            }
        }
        Diagram::Grid(g) => out.push_str(&grid_sketch(g)),
    }
    out
}

pub fn enumeration_value(e: &Enumeration, n: u32, symmetry: SymmetryGroup) -> Value {
    let diagrams: Vec<Value> =
        e.diagrams.iter().map(|d| document::to_value(&DiagramDocument::from(d.clone()))).collect();
    json!({
        "n": n,
        "symmetry": symmetry_name(symmetry),
        "group_order": symmetry.order(n),
        "complete": e.complete,
        "nodes": e.nodes,
        "raw_count": e.raw_count,
        "orbit_count": e.orbit_count,
        "count": e.diagrams.len(),
        "diagrams": diagrams,
    })
}

pub fn enumeration_text(e: &Enumeration, n: u32, symmetry: SymmetryGroup) -> String {
    let mut out = format!(
        "n = {n}, symmetry {}: {} diagrams ({} orbits, {} raw, {} nodes{})\n",
        symmetry_name(symmetry),
        e.diagrams.len(),
        e.orbit_count,
        e.raw_count,
        e.nodes,
        if e.complete { "" } else { ", INCOMPLETE" }
    );
    for (k, d) in e.diagrams.iter().enumerate() {
        writeln!(out, "\n#{k}: b = {}", d.size()).unwrap();
        out.push_str(&sketch(d.n(), d.cells().iter().map(|c| (c.col, c.row))));
    }
    out
}

pub fn census_value(c: &Census) -> Value {
    let rows: Vec<Value> = c
        .rows
        .iter()
        .map(|r| {
            json!({
                "b": r.key.b,
                "orientable": r.key.orientable,
                "euler": r.key.euler,
                "status": r.key.status.as_str(),
                "orbits": r.orbits,
                "raw": r.raw,
            })
        })
        .collect();
    json!({
        "n": c.n,
        "symmetry": symmetry_name(c.symmetry),
        "complete": c.complete,
        "nodes": c.nodes,
        "raw_count": c.raw_count,
        "orbit_count": c.orbit_count,
        "rows": rows,
    })
}

pub fn census_text(c: &Census) -> String {
    let mut out = format!(
        "n = {}, symmetry {}: {} orbits, {} raw{}\n",
        c.n,
        symmetry_name(c.symmetry),
        c.orbit_count,
        c.raw_count,
        if c.complete { "" } else { ", INCOMPLETE" }
    );
    writeln!(out, "{:>3} {:>13} {:>5} {:>20} {:>7} {:>7}", "b", "orientable", "chi", "status", "orbits", "raw").unwrap();
    for r in &c.rows {
        writeln!(
            out,
            "{:>3} {:>13} {:>5} {:>20} {:>7} {:>7}",
            r.key.b,
            if r.key.orientable { "orientable" } else { "nonorientable" },
            r.key.euler,
            r.key.status.as_str(),
            r.orbits,
            r.raw
        )
        .unwrap();
    }
    out
}

pub fn obstruction_value(v: &ObstructionVerdict) -> Value {
    match *v {
        ObstructionVerdict::NotSliceDiskFillable { link, q } => {
            json!({ "obstructed": true, "q": q, "unfillable": link.to_string() })
        }
        ObstructionVerdict::HypothesisFails { reason, q } => json!({
            "obstructed": false,
            "q": q,
            "reason": match reason {
                ObstructionFailure::Orientable => "orientable",
                ObstructionFailure::EulerCondition => "euler-condition",
            },
        }),
    }
}

pub fn obstruction_text(v: &ObstructionVerdict) -> String {
    match *v {
        ObstructionVerdict::NotSliceDiskFillable { link, q } => {
            format!("q = {q}: the {link} link has no slice-disk filling compatible with the other two\n")
        }
        ObstructionVerdict::HypothesisFails { reason: ObstructionFailure::Orientable, q } => {
            format!("q = {q}: surface is orientable, no obstruction\n")
        }
        ObstructionVerdict::HypothesisFails { reason: ObstructionFailure::EulerCondition, q } => {
            format!("q = {q}: q is not 0 and not negative with q = 2, 3 mod 4, no obstruction\n")
        }
    }
}

pub fn combinatorial_sketch(d: &CombinatorialTgd) -> String {
    sketch(d.n(), d.cells().iter().map(|c| (c.col, c.row)))
}
