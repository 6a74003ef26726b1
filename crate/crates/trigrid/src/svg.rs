//! Deterministic SVG output: diagrams on the torus square, planar link
//! diagrams of single grids, and Legendrian fronts.
//!
//! Vertical (α) lines are red, horizontal (β) lines blue and diagonal (γ)
//! lines green. Coordinates are printed with two decimals so that output is
//! byte-identical for identical input.

use std::collections::BTreeSet;
use std::fmt::Write;

use trigrid_core::legendrian::front_polyline;
use trigrid_core::link::{PlanarLinkDiagram, SegmentKind};
use trigrid_core::{ColorPair, CombinatorialTgd, GeometricTgd, GridDiagram, Rational};

pub const RED: &str = "#CC0000";
pub const BLUE: &str = "#0000CC";
pub const GREEN: &str = "#00AA00";

#[derive(Debug, Clone, Copy, PartialEq)]
pub struct Style {
    /// Side of the drawing area in pixels, margins excluded.
    pub size: f64,
    pub margin: f64,
    pub stroke: f64,
    pub dot: f64,
}

impl Default for Style {
    fn default() -> Self {
        Style { size: 400.0, margin: 20.0, stroke: 2.0, dot: 5.0 }
    }
}

struct Canvas {
    out: String,
    style: Style,
}

impl Canvas {
    fn new(style: Style, width: f64, height: f64) -> Self {
        let mut out = String::new();
        let (w, h) = (width + 2.0 * style.margin, height + 2.0 * style.margin);
        writeln!(
            out,
            r#"<svg xmlns="http://www.w3.org/2000/svg" version="1.1" width="{w:.2}" height="{h:.2}" viewBox="0 0 {w:.2} {h:.2}">"#
        )
        .unwrap();
        writeln!(out, r##"<rect x="0" y="0" width="{w:.2}" height="{h:.2}" fill="#FFFFFF"/>"##).unwrap();
        Canvas { out, style }
    }

    fn finish(mut self) -> String {
        self.out.push_str("</svg>\n");
        self.out
    }

    fn path(&mut self, class: &str, color: &str, d: &str) {
        writeln!(
            self.out,
            r#"<path class="{class}" d="{d}" fill="none" stroke="{color}" stroke-width="{:.2}"/>"#,
            self.style.stroke
        )
        .unwrap();
    }

    fn dot(&mut self, class: &str, (x, y): (f64, f64), r: f64) {
        writeln!(self.out, r##"<circle class="{class}" cx="{x:.2}" cy="{y:.2}" r="{r:.2}" fill="#000000"/>"##).unwrap();
    }
}

/// Unit-square coordinates of a torus drawing.
struct TorusPicture {
    /// Background grid lines per direction, if the diagram has a grid.
    grid: Option<u32>,
    points: Vec<(f64, f64)>,
    columns: BTreeSet<Key>,
    rows: BTreeSet<Key>,
    /// Values of `x + y` mod 1.
    diagonals: BTreeSet<Key>,
}

/// Exact line position, kept as a rational so that sets stay ordered and
/// duplicates collapse before conversion to floating point.
type Key = Rational;

fn to_f64(r: &Rational) -> f64 {
    *r.numer() as f64 / *r.denom() as f64
}

fn render_torus(p: &TorusPicture, style: Style) -> String {
    let s = style.size;
    let m = style.margin;
    // y grows upward in the diagram and downward in SVG
    let at = |x: f64, y: f64| (m + x * s, m + (1.0 - y) * s);
    let mut c = Canvas::new(style, s, s);
    let mut frame = String::new();
    let (x0, y0) = at(0.0, 0.0);
    let (x1, y1) = at(1.0, 1.0);
    write!(frame, "M {x0:.2} {y0:.2} L {x1:.2} {y0:.2} L {x1:.2} {y1:.2} L {x0:.2} {y1:.2} Z").unwrap();
    if let Some(n) = p.grid {
        for k in 1..n {
            let t = k as f64 / n as f64;
            let (a, b) = (at(t, 0.0), at(t, 1.0));
            write!(frame, " M {:.2} {:.2} L {:.2} {:.2}", a.0, a.1, b.0, b.1).unwrap();
            let (a, b) = (at(0.0, t), at(1.0, t));
            write!(frame, " M {:.2} {:.2} L {:.2} {:.2}", a.0, a.1, b.0, b.1).unwrap();
        }
    }
    writeln!(c.out, r##"<path class="frame" d="{frame}" fill="none" stroke="#BBBBBB" stroke-width="1.00"/>"##).unwrap();
    let segment = |a: (f64, f64), b: (f64, f64)| {
        let (a, b) = (at(a.0, a.1), at(b.0, b.1));
        format!("M {:.2} {:.2} L {:.2} {:.2}", a.0, a.1, b.0, b.1)
    };
    for x in &p.columns {
        let x = to_f64(x);
        c.path("alpha", RED, &segment((x, 0.0), (x, 1.0)));
    }
    for y in &p.rows {
        let y = to_f64(y);
        c.path("beta", BLUE, &segment((0.0, y), (1.0, y)));
    }
    for d in &p.diagonals {
        // x + y = d and x + y = d + 1 inside the square
        let d = to_f64(d);
        let path = if d == 0.0 {
            segment((0.0, 1.0), (1.0, 0.0))
        } else {
            format!("{} {}", segment((0.0, d), (d, 0.0)), segment((d, 1.0), (1.0, d)))
        };
        c.path("gamma", GREEN, &path);
    }
    for &(x, y) in &p.points {
        c.dot("point", at(x, y), style.dot);
    }
    c.finish()
}

/// The diagram on the torus: one red, blue or green path per occupied
/// line (diagonals wrap around the square) and a dot per point.
pub fn render_combinatorial(d: &CombinatorialTgd, style: Style) -> String {
    let n = d.n() as i128;
    let center = |k: u32| Rational::new(2 * k as i128 + 1, 2 * n);
    let mut pic = TorusPicture {
        grid: Some(d.n()),
        points: Vec::new(),
        columns: BTreeSet::new(),
        rows: BTreeSet::new(),
        diagonals: BTreeSet::new(),
    };
    for c in d.cells() {
        let (x, y) = (center(c.col), center(c.row));
        pic.points.push((to_f64(&x), to_f64(&y)));
        pic.columns.insert(x);
        pic.rows.insert(y);
        pic.diagonals.insert(fract(x + y));
    }
    render_torus(&pic, style)
}

pub fn render_geometric(d: &GeometricTgd, style: Style) -> String {
    let mut pic = TorusPicture {
        grid: None,
        points: Vec::new(),
        columns: BTreeSet::new(),
        rows: BTreeSet::new(),
        diagonals: BTreeSet::new(),
    };
    for (x, y) in d.points() {
        pic.points.push((to_f64(x), to_f64(y)));
        pic.columns.insert(*x);
        pic.rows.insert(*y);
        pic.diagonals.insert(fract(x + y));
    }
    debug_assert_eq!(pic.columns.len(), d.size());
    render_torus(&pic, style)
}

fn fract(r: Rational) -> Rational {
    r - r.floor()
}

fn pair_colors(label: ColorPair) -> (&'static str, &'static str) {
    match label {
        ColorPair::AlphaBeta => (RED, BLUE),
        ColorPair::BetaGamma => (BLUE, GREEN),
        ColorPair::GammaAlpha => (GREEN, RED),
    }
}

/// Planar link diagram of one grid: vertical segments under, horizontal
/// segments over (drawn on a white halo).
pub fn render_grid(g: &GridDiagram, style: Style) -> String {
    let n = g.n().max(1) as f64;
    let unit = style.size / n;
    let m = style.margin;
    let at = |col: u32, row: u32| (m + (col as f64 + 0.5) * unit, m + (n - row as f64 - 0.5) * unit);
    let (vertical, horizontal) = pair_colors(g.label());
    let p = PlanarLinkDiagram::from_grid(g);
    let mut c = Canvas::new(style, style.size, style.size);
    for kind in [SegmentKind::Vertical, SegmentKind::Horizontal] {
        for s in p.segments().iter().filter(|s| s.kind == kind) {
            let (a, b) = (at(p.vertices()[s.from].col, p.vertices()[s.from].row), at(p.vertices()[s.to].col, p.vertices()[s.to].row));
            let d = format!("M {:.2} {:.2} L {:.2} {:.2}", a.0, a.1, b.0, b.1);
            if kind == SegmentKind::Vertical {
                c.path("under", vertical, &d);
            } else {
                writeln!(
                    c.out,
                    r##"<path class="halo" d="{d}" fill="none" stroke="#FFFFFF" stroke-width="{:.2}"/>"##,
                    3.0 * style.stroke
                )
                .unwrap();
                c.path("over", horizontal, &d);
            }
        }
    }
    for pt in g.points() {
        c.dot("point", at(pt.col, pt.row), style.dot);
    }
    c.finish()
}

/// Front of the standard Legendrianization: one closed path per component,
/// with a marker at every cusp.
pub fn render_front(g: &GridDiagram, style: Style) -> String {
    let fronts = front_polyline(g);
    let n = g.n().max(1) as f64;
    // front x ranges over [0, 2n - 2], y over [-(n - 1), n - 1]
    let unit = style.size / (2.0 * n);
    let m = style.margin;
    let at = |(x, y): (i64, i64)| (m + (x as f64 + 1.0) * unit, m + (n - y as f64) * unit);
    let mut c = Canvas::new(style, style.size, style.size);
    for comp in &fronts {
        let mut d = String::new();
        for (k, &pt) in comp.points.iter().enumerate() {
            let (x, y) = at(pt);
            write!(d, "{}{x:.2} {y:.2} ", if k == 0 { "M " } else { "L " }).unwrap();
        }
        d.push('Z');
        c.path("front", "#000000", &d);
        for &k in &comp.cusps {
            c.dot("cusp", at(comp.points[k]), style.dot / 2.0);
        }
    }
    c.finish()
}

#[cfg(test)]
mod tests {
    use super::*;
    use trigrid_core::constructions::{example_n2, pushoff};

    fn count(svg: &str, needle: &str) -> usize {
        svg.matches(needle).count()
    }

    #[test]
    fn square_has_two_lines_per_color() {
        let svg = render_combinatorial(&example_n2(), Style::default());
        assert_eq!(count(&svg, &format!(r#"stroke="{RED}""#)), 2);
        assert_eq!(count(&svg, &format!(r#"stroke="{BLUE}""#)), 2);
        assert_eq!(count(&svg, &format!(r#"stroke="{GREEN}""#)), 2);
        assert_eq!(count(&svg, r#"class="point""#), 4);
        assert_eq!(svg, render_combinatorial(&example_n2(), Style::default()));
    }

    #[test]
    fn empty_diagram_is_just_the_grid() {
        let svg = render_combinatorial(&CombinatorialTgd::empty(3).unwrap(), Style::default());
        assert_eq!(count(&svg, "<path"), 1);
        assert_eq!(count(&svg, "<circle"), 0);
    }

    #[test]
    fn square_front() {
        let g = GridDiagram::new(2, [(0, 0), (0, 1), (1, 0), (1, 1)], ColorPair::AlphaBeta).unwrap();
        let svg = render_front(&g, Style::default());
        assert_eq!(count(&svg, r#"class="front""#), 1);
        assert_eq!(count(&svg, r#"class="cusp""#), 2);
    }

    #[test]
    fn geometric_and_grid_render() {
        let g = GridDiagram::new(2, [(0, 0), (0, 1), (1, 0), (1, 1)], ColorPair::AlphaBeta).unwrap();
        let svg = render_geometric(&pushoff(&g), Style::default());
        assert_eq!(count(&svg, r#"class="point""#), 8);
        assert_eq!(count(&svg, r#"class="gamma""#), 4);
        let svg = render_grid(&g, Style::default());
        assert_eq!(count(&svg, r#"class="over""#), 2);
        assert_eq!(count(&svg, r#"class="under""#), 2);
    }
}
