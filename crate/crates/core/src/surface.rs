//! The colored cubic graph Γ(D), orientability and Euler characteristic of the
//! capped-off ribbon surface, and the fillability criteria built on the three
//! Legendrian links.
//!
//! Each point is a vertex of Γ(D); α, β and γ edges join column, row and
//! diagonal partners. Faces of the closed surface are the bicolored cycles,
//! which are exactly the components of the three links, so on every connected
//! piece `χ = V − E + F = 2b − 3b + F = F − b`. The surface is orientable
//! exactly when Γ(D) is bipartite.

use alloc::collections::VecDeque;
use alloc::string::String;
use alloc::vec;
use alloc::vec::Vec;
use core::fmt;

use crate::error::Error;
use crate::legendrian;
use crate::link::{KnotVerdict, PlanarLinkDiagram, UnlinkVerdict};
use crate::tgd::{ColorPair, CombinatorialTgd, TripleDiagram};
use crate::Result;

/// Γ(D): every vertex has exactly one edge of each color.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct ColoredCubicGraph {
    /// α, β, γ partner of each vertex.
    partners: [Vec<usize>; 3],
    /// Connected components, each sorted; ordered by least vertex.
    components: Vec<Vec<usize>>,
}

/// Color-pair index into `[α, β, γ]`: αβ, βγ, γα.
const PAIRS: [(usize, usize); 3] = [(0, 1), (1, 2), (2, 0)];

pub fn graph_of<D: TripleDiagram + ?Sized>(d: &D) -> ColoredCubicGraph {
    ColoredCubicGraph::new(d.pairings())
}

impl ColoredCubicGraph {
    pub fn new(partners: [Vec<usize>; 3]) -> Self {
        let v = partners[0].len();
        let mut seen = vec![false; v];
        let mut components = Vec::new();
        for s in 0..v {
            if seen[s] {
                continue;
            }
            let mut comp = Vec::new();
            let mut stack = vec![s];
            seen[s] = true;
            while let Some(u) = stack.pop() {
                comp.push(u);
                for p in &partners {
                    if !seen[p[u]] {
                        seen[p[u]] = true;
                        stack.push(p[u]);
                    }
                }
            }
            comp.sort_unstable();
            components.push(comp);
        }
        ColoredCubicGraph { partners, components }
    }

    pub fn vertex_count(&self) -> usize {
        self.partners[0].len()
    }

    pub fn edge_count(&self) -> usize {
        3 * self.vertex_count() / 2
    }

    /// Partner of `v` along the α (0), β (1) or γ (2) edge.
    pub fn partner(&self, color: usize, v: usize) -> usize {
        self.partners[color][v]
    }

    /// Edges `(u, v, color)` with `u < v`, in order of `u` then color.
    pub fn edges(&self) -> Vec<(usize, usize, usize)> {
        let mut out = Vec::with_capacity(self.edge_count());
        for u in 0..self.vertex_count() {
            for color in 0..3 {
                let v = self.partners[color][u];
                if u < v {
                    out.push((u, v, color));
                }
            }
        }
        out
    }

    pub fn components(&self) -> &[Vec<usize>] {
        &self.components
    }

    /// Cycles alternating the two colors of `pair`, each listed from its
    /// least vertex, ordered by least vertex.
    pub fn bicolored_cycles(&self, pair: ColorPair) -> Vec<Vec<usize>> {
        let (a, b) = PAIRS[pair.index()];
        let v = self.vertex_count();
        let mut seen = vec![false; v];
        let mut cycles = Vec::new();
        for s in 0..v {
            if seen[s] {
                continue;
            }
            let mut cycle = Vec::new();
            let mut u = s;
            loop {
                seen[u] = true;
                cycle.push(u);
                let w = self.partners[a][u];
                seen[w] = true;
                cycle.push(w);
                u = self.partners[b][w];
                if u == s {
                    break;
                }
            }
            cycles.push(cycle);
        }
        cycles
    }

    /// Proper 2-coloring by breadth-first search, if one exists.
    pub fn two_coloring(&self) -> Option<Vec<bool>> {
        let v = self.vertex_count();
        let mut color: Vec<Option<bool>> = vec![None; v];
        for s in 0..v {
            if color[s].is_some() {
                continue;
            }
            color[s] = Some(false);
            let mut queue = VecDeque::from([s]);
            while let Some(u) = queue.pop_front() {
                let cu = color[u].unwrap();
                for p in &self.partners {
                    let w = p[u];
                    match color[w] {
                        None => {
                            color[w] = Some(!cu);
                            queue.push_back(w);
                        }
                        Some(cw) if cw == cu => return None,
                        Some(_) => {}
                    }
                }
            }
        }
        Some(color.into_iter().map(|c| c.unwrap()).collect())
    }

    pub fn is_bipartite(&self) -> bool {
        self.two_coloring().is_some()
    }
}

#[derive(Debug, Clone, Copy, PartialEq, Eq, Hash)]
pub enum Mark {
    X,
    O,
}

/// Places one X and one O on every occupied column, row and diagonal.
///
/// Works directly on the lines of the diagram with a parity union-find, so it
/// is independent of [`ColoredCubicGraph::two_coloring`]. The least cell of
/// each constraint class gets an X.
pub fn xo_placement(d: &CombinatorialTgd) -> Option<Vec<Mark>> {
    let cells = d.cells();
    let n = d.n() as usize;
    let m = cells.len();
    // parent, parity to parent
    let mut parent: Vec<usize> = (0..m).collect();
    let mut parity = vec![false; m];
    fn find(parent: &mut [usize], parity: &mut [bool], x: usize) -> (usize, bool) {
        let mut path = Vec::new();
        let mut r = x;
        while parent[r] != r {
            path.push(r);
            r = parent[r];
        }
        // compress, recomputing parities from the root down
        let mut acc = false;
        for &y in path.iter().rev() {
            acc ^= parity[y];
            parity[y] = acc;
            parent[y] = r;
        }
        (r, if x == r { false } else { parity[x] })
    }
    let lines: [&dyn Fn(usize) -> usize; 3] = [
        &|i| cells[i].col as usize,
        &|i| n + cells[i].row as usize,
        &|i| 2 * n + (cells[i].col + cells[i].row) as usize % n,
    ];
    for line_of in lines {
        let mut first: Vec<Option<usize>> = vec![None; 3 * n];
        for i in 0..m {
            let line = line_of(i);
            match first[line] {
                None => first[line] = Some(i),
                Some(j) => {
                    let (ri, pi) = find(&mut parent, &mut parity, i);
                    let (rj, pj) = find(&mut parent, &mut parity, j);
                    if ri == rj {
                        if pi == pj {
                            return None;
                        }
                    } else {
                        parent[ri] = rj;
                        parity[ri] = !(pi ^ pj);
                    }
                }
            }
        }
    }
    let mut root_mark: Vec<Option<bool>> = vec![None; m];
    let mut marks = Vec::with_capacity(m);
    for i in 0..m {
        let (r, p) = find(&mut parent, &mut parity, i);
        // first visit of a class is its least cell
        let base = *root_mark[r].get_or_insert(p);
        marks.push(if p == base { Mark::X } else { Mark::O });
    }
    Some(marks)
}

/// Homeomorphism type of a closed connected surface.
#[derive(Debug, Clone, Copy, PartialEq, Eq, Hash)]
pub enum SurfaceName {
    Sphere,
    /// Connected sum of `g ≥ 1` tori.
    Tori(u32),
    /// Connected sum of `k ≥ 1` projective planes.
    ProjectivePlanes(u32),
}

impl SurfaceName {
    pub fn from_euler(euler: i64, orientable: bool) -> Option<SurfaceName> {
        if orientable {
            if euler > 2 || euler % 2 != 0 {
                return None;
            }
            let g = (2 - euler) / 2;
            Some(if g == 0 { SurfaceName::Sphere } else { SurfaceName::Tori(g as u32) })
        } else {
            if euler > 1 {
                return None;
            }
            Some(SurfaceName::ProjectivePlanes((2 - euler) as u32))
        }
    }
}

impl fmt::Display for SurfaceName {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        match *self {
            SurfaceName::Sphere => f.write_str("S^2"),
            SurfaceName::Tori(1) => f.write_str("T^2"),
            SurfaceName::Tori(g) => write!(f, "#^{g} T^2"),
            SurfaceName::ProjectivePlanes(1) => f.write_str("RP^2"),
            SurfaceName::ProjectivePlanes(k) => write!(f, "#^{k} RP^2"),
        }
    }
}

/// Topology of the capped surface over one connected component of Γ(D).
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct ComponentSurface {
    /// Point indices of the component, sorted.
    pub vertices: Vec<usize>,
    pub v: usize,
    pub e: usize,
    pub f: usize,
    /// Faces split by color pair (αβ, βγ, γα).
    pub faces: [usize; 3],
    pub euler: i64,
    pub orientable: bool,
    pub name: SurfaceName,
}

#[derive(Debug, Clone, PartialEq, Eq)]
pub struct SurfaceTotals {
    pub b: usize,
    pub v: usize,
    pub e: usize,
    pub f: usize,
    /// `(c₁, c₂, c₃)`: link component counts of the αβ, βγ, γα grids.
    pub faces: [usize; 3],
    pub euler: i64,
    pub orientable: bool,
    pub connected: bool,
}

#[derive(Debug, Clone, PartialEq, Eq)]
pub struct SurfaceReport {
    pub components: Vec<ComponentSurface>,
    pub total: SurfaceTotals,
    pub fillability: Option<FillabilityReport>,
}

impl SurfaceReport {
    /// Name of the surface when it is connected.
    pub fn name(&self) -> Option<SurfaceName> {
        match self.components.as_slice() {
            [single] => Some(single.name),
            _ => None,
        }
    }
}

/// Orientability, Euler characteristic and name of each Γ-component.
pub fn classify<D: TripleDiagram + ?Sized>(d: &D) -> SurfaceReport {
    let graph = graph_of(d);
    let coloring = graph.two_coloring();
    let cycles = ColorPair::ALL.map(|p| graph.bicolored_cycles(p));
    let mut component_of = vec![0usize; graph.vertex_count()];
    for (k, comp) in graph.components().iter().enumerate() {
        for &v in comp {
            component_of[v] = k;
        }
    }
    let mut components: Vec<ComponentSurface> = graph
        .components()
        .iter()
        .map(|comp| ComponentSurface {
            vertices: comp.clone(),
            v: comp.len(),
            e: 3 * comp.len() / 2,
            f: 0,
            faces: [0; 3],
            euler: 0,
            orientable: true,
            name: SurfaceName::Sphere,
        })
        .collect();
    for (p, list) in cycles.iter().enumerate() {
        for cycle in list {
            components[component_of[cycle[0]]].faces[p] += 1;
        }
    }
    // a component is orientable iff it is bipartite; check edges locally
    let local_bipartite: Vec<bool> = match &coloring {
        Some(_) => vec![true; components.len()],
        None => graph
            .components()
            .iter()
            .map(|comp| {
                let sub = ColoredCubicGraph::new(restrict_partners(&graph, comp));
                sub.is_bipartite()
            })
            .collect(),
    };
    for (c, orientable) in components.iter_mut().zip(local_bipartite) {
        c.f = c.faces.iter().sum();
        c.euler = c.v as i64 - c.e as i64 + c.f as i64;
        c.orientable = orientable;
        c.name = SurfaceName::from_euler(c.euler, orientable).expect("closed surface has a consistent Euler characteristic");
    }
    let faces = [cycles[0].len(), cycles[1].len(), cycles[2].len()];
    let f: usize = faces.iter().sum();
    let v = graph.vertex_count();
    let total = SurfaceTotals {
        b: v / 2,
        v,
        e: graph.edge_count(),
        f,
        faces,
        euler: v as i64 - graph.edge_count() as i64 + f as i64,
        orientable: coloring.is_some(),
        connected: components.len() <= 1,
    };
    SurfaceReport { components, total, fillability: None }
}

fn restrict_partners(graph: &ColoredCubicGraph, comp: &[usize]) -> [Vec<usize>; 3] {
    let local = |v: usize| comp.binary_search(&v).expect("component is closed under partners");
    [0, 1, 2].map(|c| comp.iter().map(|&v| local(graph.partner(c, v))).collect())
}

#[derive(Debug, Clone, Copy, PartialEq, Eq, PartialOrd, Ord, Hash)]
pub enum FillabilityStatus {
    Invalid,
    General,
    ImmersedEligible,
    Simple,
    LagrangianEligible,
}

impl FillabilityStatus {
    pub fn as_str(self) -> &'static str {
        match self {
            FillabilityStatus::Invalid => "invalid",
            FillabilityStatus::General => "general",
            FillabilityStatus::ImmersedEligible => "immersed-eligible",
            FillabilityStatus::Simple => "simple",
            FillabilityStatus::LagrangianEligible => "lagrangian-eligible",
        }
    }
}

impl fmt::Display for FillabilityStatus {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.write_str(self.as_str())
    }
}

#[derive(Debug, Clone, Copy, PartialEq, Eq, Hash)]
pub struct ComponentEvidence {
    pub tb: i64,
    pub rot: i64,
    pub rot_abs: u64,
    pub cusps: usize,
    pub unknot: KnotVerdict,
}

#[derive(Debug, Clone, PartialEq, Eq, Hash)]
pub struct GridEvidence {
    pub label: ColorPair,
    pub crossings: usize,
    pub link: UnlinkVerdict,
    pub components: Vec<ComponentEvidence>,
}

/// Status plus the per-grid evidence it was derived from. Unlink and unknot
/// verdicts are Jones-polynomial heuristics, not proofs.
#[derive(Debug, Clone, PartialEq, Eq, Hash)]
pub struct FillabilityReport {
    pub status: FillabilityStatus,
    pub grids: [GridEvidence; 3],
    /// Internal-consistency warnings (empty in normal operation).
    pub flags: Vec<String>,
}

impl FillabilityReport {
    /// All three links are certified unlinks.
    pub fn is_simple(&self) -> bool {
        self.grids.iter().all(|g| g.link == UnlinkVerdict::CertifiedUnlinkHeuristic)
    }

    pub fn all_tb_minus_one(&self) -> bool {
        self.grids.iter().flat_map(|g| &g.components).all(|c| c.tb == -1)
    }

    pub fn all_rot_zero(&self) -> bool {
        self.grids.iter().flat_map(|g| &g.components).all(|c| c.rot == 0)
    }

    pub fn component_counts(&self) -> [usize; 3] {
        [0, 1, 2].map(|k| self.grids[k].components.len())
    }
}

fn grid_evidence(g: &crate::tgd::GridDiagram, bound: usize) -> GridEvidence {
    let p = PlanarLinkDiagram::from_grid(g);
    let evidence = p.unlink_evidence(bound);
    let components = legendrian::invariants_of(&p)
        .into_iter()
        .zip(&evidence.components)
        .map(|(inv, &unknot)| ComponentEvidence {
            tb: inv.tb,
            rot: inv.rot,
            rot_abs: inv.rot_abs,
            cusps: inv.cusps,
            unknot,
        })
        .collect();
    GridEvidence { label: g.label(), crossings: p.crossings().len(), link: evidence.verdict, components }
}

/// Lagrangian-eligible when all three links are certified unlinks of tb = −1
/// unknots; simple when they are certified unlinks; immersed-eligible when
/// every component has rotation number 0; general otherwise.
pub fn fillability_status<D: TripleDiagram + ?Sized>(d: &D, crossing_bound: usize) -> FillabilityReport {
    let grids = d.grids().map(|g| grid_evidence(&g, crossing_bound));
    let mut report = FillabilityReport { status: FillabilityStatus::General, grids, flags: Vec::new() };
    report.status = if report.is_simple() && report.all_tb_minus_one() {
        FillabilityStatus::LagrangianEligible
    } else if report.is_simple() {
        FillabilityStatus::Simple
    } else if report.all_rot_zero() {
        FillabilityStatus::ImmersedEligible
    } else {
        FillabilityStatus::General
    };
    for g in &report.grids {
        for (k, c) in g.components.iter().enumerate() {
            if c.unknot == KnotVerdict::Unknot && c.tb + c.rot_abs as i64 > -1 {
                report.flags.push(alloc::format!(
                    "{} component {k}: tb + |rot| = {} exceeds the unknot bound -1",
                    g.label,
                    c.tb + c.rot_abs as i64
                ));
            }
        }
    }
    report
}

/// Surface classification together with fillability evidence.
pub fn analyze<D: TripleDiagram + ?Sized>(d: &D, crossing_bound: usize) -> SurfaceReport {
    let mut report = classify(d);
    let mut fill = fillability_status(d, crossing_bound);
    if fill.status == FillabilityStatus::LagrangianEligible && report.total.orientable && report.total.euler != 0 {
        fill.flags.push(alloc::format!(
            "orientable lagrangian-eligible diagram with Euler characteristic {} (only the torus is expected)",
            report.total.euler
        ));
    }
    report.fillability = Some(fill);
    report
}

/// Whether `#^k RP²` admits a Lagrangian embedding in CP²: `k ≡ 1 (mod 4)`,
/// or `k ≡ 2 (mod 4)` with `k ≠ 2`.
pub fn rp2_embeddable(k: u32) -> bool {
    k % 4 == 1 || (k % 4 == 2 && k != 2)
}

#[derive(Debug, Clone, Copy, PartialEq, Eq, Hash)]
pub enum ObstructionFailure {
    Orientable,
    /// `q` is positive, or negative and ≡ 0 or 1 (mod 4).
    EulerCondition,
}

#[derive(Debug, Clone, Copy, PartialEq, Eq, Hash)]
pub enum ObstructionVerdict {
    /// Granting slice-disk fillings of the two claimed links, the third link
    /// has none.
    NotSliceDiskFillable { link: ColorPair, q: i64 },
    HypothesisFails { reason: ObstructionFailure, q: i64 },
}

/// Checks the nonorientable-surface obstruction: with `q = c₁ + c₂ + c₃ − b`
/// equal to 0, or negative and ≡ 2, 3 (mod 4), slice-disk fillings of two of
/// the links rule one out for the third. The two fillability claims are taken
/// on trust.
pub fn obstruction_report<D: TripleDiagram + ?Sized>(d: &D, claimed: &[ColorPair]) -> Result<ObstructionVerdict> {
    let [first, second] = claimed else {
        return Err(Error::LabelError(alloc::format!("expected two labels, got {}", claimed.len())));
    };
    if first == second {
        return Err(Error::LabelError(alloc::format!("label {first} claimed twice")));
    }
    let third = ColorPair::ALL
        .into_iter()
        .find(|p| p != first && p != second)
        .expect("three labels, two claimed");
    let report = classify(d);
    let q = report.total.euler;
    if report.total.orientable {
        return Ok(ObstructionVerdict::HypothesisFails { reason: ObstructionFailure::Orientable, q });
    }
    let residue = q.rem_euclid(4);
    if q == 0 || (q < 0 && (residue == 2 || residue == 3)) {
        Ok(ObstructionVerdict::NotSliceDiskFillable { link: third, q })
    } else {
        Ok(ObstructionVerdict::HypothesisFails { reason: ObstructionFailure::EulerCondition, q })
    }
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::constructions::{example_n2, example_n3, staircase};

    #[test]
    fn square_graph_is_k4() {
        let g = graph_of(&example_n2());
        assert_eq!(g.vertex_count(), 4);
        let mut edges = g.edges();
        edges.sort_unstable();
        // cells (0,0)=0, (0,1)=1, (1,0)=2, (1,1)=3
        assert_eq!(edges, vec![(0, 1, 0), (0, 2, 1), (0, 3, 2), (1, 2, 2), (1, 3, 1), (2, 3, 0)]);
        assert!(!g.is_bipartite());
        assert_eq!(xo_placement(&example_n2()), None);
    }

    #[test]
    fn n3_graph_is_bipartite() {
        let d = example_n3();
        let g = graph_of(&d);
        assert_eq!(g.vertex_count(), 6);
        assert!(g.is_bipartite());
        let marks = xo_placement(&d).unwrap();
        for (i, a) in d.cells().iter().enumerate() {
            for (j, b) in d.cells().iter().enumerate() {
                let shares = a.col == b.col || a.row == b.row || d.diagonal(*a) == d.diagonal(*b);
                if i != j && shares {
                    assert_ne!(marks[i], marks[j]);
                }
            }
        }
    }

    #[test]
    fn empty_diagram() {
        let d = CombinatorialTgd::empty(2).unwrap();
        assert_eq!(graph_of(&d).vertex_count(), 0);
        assert_eq!(xo_placement(&d), Some(vec![]));
        let r = classify(&d);
        assert!(r.components.is_empty());
        assert_eq!(r.total.euler, 0);
    }

    #[test]
    fn classify_examples() {
        let r = classify(&example_n2());
        assert_eq!((r.total.euler, r.total.orientable), (1, false));
        assert_eq!(r.name(), Some(SurfaceName::ProjectivePlanes(1)));
        let r = classify(&example_n3());
        assert_eq!((r.total.euler, r.total.orientable), (0, true));
        assert_eq!(r.name(), Some(SurfaceName::Tori(1)));
        let r = classify(&staircase(5).unwrap());
        assert_eq!(r.name(), Some(SurfaceName::Tori(2)));
    }

    #[test]
    fn statuses() {
        assert_eq!(fillability_status(&example_n2(), 24).status, FillabilityStatus::LagrangianEligible);
        assert_eq!(fillability_status(&staircase(4).unwrap(), 24).status, FillabilityStatus::LagrangianEligible);
        assert_eq!(fillability_status(&staircase(5).unwrap(), 24).status, FillabilityStatus::Simple);
    }

    #[test]
    fn embeddability_table() {
        let table: Vec<bool> = (1..=12).map(rp2_embeddable).collect();
        assert_eq!(
            table,
            [true, false, false, false, true, true, false, false, true, true, false, false]
        );
    }

    #[test]
    fn surface_names() {
        assert_eq!(alloc::format!("{}", SurfaceName::Tori(2)), "#^2 T^2");
        assert_eq!(alloc::format!("{}", SurfaceName::ProjectivePlanes(1)), "RP^2");
        assert_eq!(SurfaceName::from_euler(2, true), Some(SurfaceName::Sphere));
        assert_eq!(SurfaceName::from_euler(-1, true), None);
    }

    #[test]
    fn obstruction_labels() {
        let d = example_n2();
        assert!(matches!(obstruction_report(&d, &[ColorPair::AlphaBeta]), Err(Error::LabelError(_))));
        assert!(matches!(
            obstruction_report(&d, &[ColorPair::AlphaBeta, ColorPair::AlphaBeta]),
            Err(Error::LabelError(_))
        ));
        // orientable diagrams never satisfy the hypothesis
        assert_eq!(
            obstruction_report(&example_n3(), &[ColorPair::AlphaBeta, ColorPair::BetaGamma]).unwrap(),
            ObstructionVerdict::HypothesisFails { reason: ObstructionFailure::Orientable, q: 0 }
        );
        // RP²: q = 1 > 0
        assert_eq!(
            obstruction_report(&d, &[ColorPair::AlphaBeta, ColorPair::BetaGamma]).unwrap(),
            ObstructionVerdict::HypothesisFails { reason: ObstructionFailure::EulerCondition, q: 1 }
        );
    }
}
