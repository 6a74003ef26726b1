//! Legendrian invariants of the standard Legendrianization of a grid diagram.
//!
//! Rotating the planar diagram 45° clockwise sends a vertex `(x, y)` to the
//! front point `(x + y, y − x)`. Corners whose segments leave toward {N, E}
//! or {S, W} reverse the horizontal direction of travel in the front and
//! become cusps; all other corners are smoothed.
//!
//! For each component: `tb = self-writhe − cusps/2` and
//! `rot = (down cusps − up cusps)/2`, where a cusp is a down-cusp when its
//! vertical segment is traversed southward. The sign of `rot` depends on the
//! orientation convention of [`crate::link`]; `rot_abs` does not.

use alloc::vec::Vec;

use crate::link::{PlanarLinkDiagram, SegmentKind};
use crate::tgd::{Cell, GridDiagram};

#[derive(Debug, Clone, Copy, PartialEq, Eq, Hash)]
pub enum Compass {
    N,
    E,
    S,
    W,
}

#[derive(Debug, Clone, Copy, PartialEq, Eq, Hash)]
pub enum CuspKind {
    Up,
    Down,
}

#[derive(Debug, Clone, Copy, PartialEq, Eq, Hash)]
pub struct Corner {
    pub point: Cell,
    /// Direction of the vertical segment leaving this point.
    pub vertical: Compass,
    /// Direction of the horizontal segment leaving this point.
    pub horizontal: Compass,
    pub cusp: Option<CuspKind>,
}

impl Corner {
    pub fn is_cusp(&self) -> bool {
        self.cusp.is_some()
    }
}

/// One corner per grid point, in the grid's point order.
#[derive(Debug, Clone, PartialEq, Eq, Hash)]
pub struct CornerClassification {
    pub corners: Vec<Corner>,
}

impl CornerClassification {
    pub fn cusp_count(&self) -> usize {
        self.corners.iter().filter(|c| c.is_cusp()).count()
    }
}

#[derive(Debug, Clone, Copy, PartialEq, Eq, Hash)]
pub struct LegendrianInvariants {
    pub component: usize,
    pub writhe: i64,
    pub cusps: usize,
    pub tb: i64,
    pub rot: i64,
    pub rot_abs: u64,
}

pub fn cusp_census(g: &GridDiagram) -> CornerClassification {
    classify_corners(&PlanarLinkDiagram::from_grid(g))
}

pub(crate) fn classify_corners(p: &PlanarLinkDiagram) -> CornerClassification {
    let verts = p.vertices();
    let mut corners: Vec<Option<Corner>> = alloc::vec![None; verts.len()];
    for comp in p.components() {
        let m = comp.segments.len();
        for k in 0..m {
            // segment k arrives at vertex k+1 and segment k+1 leaves it
            let arriving = p.segments()[comp.segments[k]];
            let leaving = p.segments()[comp.segments[(k + 1) % m]];
            let v = leaving.from;
            let (vert_seg, vert_outgoing, horiz_seg) = match leaving.kind {
                SegmentKind::Vertical => (leaving, true, arriving),
                SegmentKind::Horizontal => (arriving, false, leaving),
            };
            let here = verts[v];
            let vertical_other = if vert_seg.from == v { verts[vert_seg.to] } else { verts[vert_seg.from] };
            let horizontal_other = if horiz_seg.from == v { verts[horiz_seg.to] } else { verts[horiz_seg.from] };
            let vertical = if vertical_other.row > here.row { Compass::N } else { Compass::S };
            let horizontal = if horizontal_other.col > here.col { Compass::E } else { Compass::W };
            let is_cusp = matches!((vertical, horizontal), (Compass::N, Compass::E) | (Compass::S, Compass::W));
            let cusp = is_cusp.then(|| {
                // southward travel on the vertical segment: leaving toward S
                // or arriving from N
                let southward = if vert_outgoing { vertical == Compass::S } else { vertical == Compass::N };
                if southward {
                    CuspKind::Down
                } else {
                    CuspKind::Up
                }
            });
            corners[v] = Some(Corner { point: here, vertical, horizontal, cusp });
        }
    }
    CornerClassification { corners: corners.into_iter().map(|c| c.expect("every vertex lies on a component")).collect() }
}

/// tb, rot and cusp counts for each component, in component order.
pub fn legendrian_invariants(g: &GridDiagram) -> Vec<LegendrianInvariants> {
    invariants_of(&PlanarLinkDiagram::from_grid(g))
}

pub fn invariants_of(p: &PlanarLinkDiagram) -> Vec<LegendrianInvariants> {
    let corners = classify_corners(p);
    p.components()
        .iter()
        .enumerate()
        .map(|(k, comp)| {
            let (mut up, mut down) = (0i64, 0i64);
            for &v in &comp.vertices {
                match corners.corners[v].cusp {
                    Some(CuspKind::Up) => up += 1,
                    Some(CuspKind::Down) => down += 1,
                    None => {}
                }
            }
            let cusps = (up + down) as usize;
            let writhe = p.self_writhe(k);
            let rot = (down - up) / 2;
            LegendrianInvariants {
                component: k,
                writhe,
                cusps,
                tb: writhe - (up + down) / 2,
                rot,
                rot_abs: rot.unsigned_abs(),
            }
        })
        .collect()
}

/// Front crossing: position in front coordinates and the components of the
/// over (horizontal in the grid) and under strands.
#[derive(Debug, Clone, Copy, PartialEq, Eq, Hash)]
pub struct FrontCrossing {
    pub at: (i64, i64),
    pub over_component: usize,
    pub under_component: usize,
}

/// A closed front polyline; consecutive points are joined by slope ±1 pieces.
#[derive(Debug, Clone, PartialEq, Eq, Hash)]
pub struct FrontComponent {
    pub points: Vec<(i64, i64)>,
    /// Indices into `points` that are cusps.
    pub cusps: Vec<usize>,
    pub crossings: Vec<FrontCrossing>,
}

/// Front coordinates of a grid point: `(x + y, y − x)`.
pub fn front_point(c: Cell) -> (i64, i64) {
    (c.col as i64 + c.row as i64, c.row as i64 - c.col as i64)
}

pub fn front_polyline(g: &GridDiagram) -> Vec<FrontComponent> {
    let p = PlanarLinkDiagram::from_grid(g);
    let corners = classify_corners(&p);
    p.components()
        .iter()
        .enumerate()
        .map(|(k, comp)| {
            let points = comp.vertices.iter().map(|&v| front_point(p.vertices()[v])).collect();
            let cusps = comp
                .vertices
                .iter()
                .enumerate()
                .filter(|(_, &v)| corners.corners[v].is_cusp())
                .map(|(i, _)| i)
                .collect();
            let crossings = p
                .crossings()
                .iter()
                .filter(|x| p.crossing_components(x).0 == k)
                .map(|x| {
                    let (over_component, under_component) = p.crossing_components(x);
                    FrontCrossing { at: front_point(x.at), over_component, under_component }
                })
                .collect();
            FrontComponent { points, cusps, crossings }
        })
        .collect()
}
