//! Diagram types: combinatorial and geometric triple grid diagrams, the
//! grid diagrams they induce, and the torus symmetries acting on them.

use alloc::collections::BTreeMap;
use alloc::vec::Vec;
use core::fmt;

use num_rational::Ratio;
use num_traits::{One, Zero};

use crate::error::{Direction, Error};
use crate::Result;

/// Exact rational coordinate on the unit torus.
pub type Rational = Ratio<i128>;

/// A cell of the `n × n` torus grid: column `col`, row `row`.
///
/// Ordering is lexicographic in `(col, row)`; canonical forms rely on it.
#[derive(Debug, Clone, Copy, PartialEq, Eq, PartialOrd, Ord, Hash)]
pub struct Cell {
    pub col: u32,
    pub row: u32,
}

impl Cell {
    pub const fn new(col: u32, row: u32) -> Self {
        Cell { col, row }
    }
}

impl From<(u32, u32)> for Cell {
    fn from((col, row): (u32, u32)) -> Self {
        Cell { col, row }
    }
}

/// Ordered pair of line colors that a grid diagram is read from. The first
/// color is drawn vertically, the second horizontally.
#[derive(Debug, Clone, Copy, PartialEq, Eq, PartialOrd, Ord, Hash)]
pub enum ColorPair {
    AlphaBeta,
    BetaGamma,
    GammaAlpha,
}

impl ColorPair {
    pub const ALL: [ColorPair; 3] = [ColorPair::AlphaBeta, ColorPair::BetaGamma, ColorPair::GammaAlpha];

    pub fn index(self) -> usize {
        match self {
            ColorPair::AlphaBeta => 0,
            ColorPair::BetaGamma => 1,
            ColorPair::GammaAlpha => 2,
        }
    }

    pub fn symbol(self) -> &'static str {
        match self {
            ColorPair::AlphaBeta => "αβ",
            ColorPair::BetaGamma => "βγ",
            ColorPair::GammaAlpha => "γα",
        }
    }

    /// Short ASCII tag (`ab`, `bc`, `ca`).
    pub fn ascii(self) -> &'static str {
        match self {
            ColorPair::AlphaBeta => "ab",
            ColorPair::BetaGamma => "bc",
            ColorPair::GammaAlpha => "ca",
        }
    }

    /// Accepts either the Greek form (`αβ`) or the ASCII tag (`ab`).
    pub fn parse(s: &str) -> Option<ColorPair> {
        match s.trim() {
            "αβ" | "ab" => Some(ColorPair::AlphaBeta),
            "βγ" | "bc" => Some(ColorPair::BetaGamma),
            "γα" | "ca" => Some(ColorPair::GammaAlpha),
            _ => None,
        }
    }
}

impl fmt::Display for ColorPair {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.write_str(self.symbol())
    }
}

/// Symmetries used to identify diagrams.
#[derive(Debug, Clone, Copy, PartialEq, Eq, PartialOrd, Ord, Hash, Default)]
pub enum SymmetryGroup {
    #[default]
    None,
    /// Torus translations `(i, j) → (i + a, j + b)`.
    Translations,
    /// Translations and the order-3 color rotation.
    TranslationsRotation,
    /// Translations, rotation and the transpose `(i, j) → (j, i)`.
    TranslationsRotationReflection,
}

impl SymmetryGroup {
    /// Number of group elements acting on an `n × n` grid.
    pub fn order(self, n: u32) -> usize {
        let t = (n as usize) * (n as usize);
        match self {
            SymmetryGroup::None => 1,
            SymmetryGroup::Translations => t,
            SymmetryGroup::TranslationsRotation => 3 * t,
            SymmetryGroup::TranslationsRotationReflection => 6 * t,
        }
    }
}

fn check_lines<K: Ord + Copy>(counts: &BTreeMap<K, usize>) -> Option<(K, usize)> {
    counts.iter().find(|(_, &c)| c != 0 && c != 2).map(|(&k, &c)| (k, c))
}

/// Combinatorial triple grid diagram: grid number `n` and occupied cells,
/// each carrying one point in its lower-left triangle.
///
/// Cells are stored sorted, so two diagrams are equal exactly when their cell
/// sets are.
#[derive(Debug, Clone, PartialEq, Eq, PartialOrd, Ord, Hash)]
pub struct CombinatorialTgd {
    n: u32,
    cells: Vec<Cell>,
}

impl CombinatorialTgd {
    /// Validates a cell set. Coordinates are reduced mod `n`.
    ///
    /// Lines are checked columns first, then rows, then diagonals, each in
    /// increasing index order; the first bad line is reported.
    pub fn new<I, C>(n: u32, cells: I) -> Result<Self>
    where
        I: IntoIterator<Item = C>,
        C: Into<Cell>,
    {
        if n == 0 {
            return Err(Error::ZeroGridNumber);
        }
        let mut cells: Vec<Cell> = cells
            .into_iter()
            .map(Into::into)
            .map(|c| Cell::new(c.col % n, c.row % n))
            .collect();
        cells.sort_unstable();
        if let Some(w) = cells.windows(2).find(|w| w[0] == w[1]) {
            return Err(Error::DuplicateCell(w[0]));
        }
        let mut cols = BTreeMap::new();
        let mut rows = BTreeMap::new();
        let mut diags = BTreeMap::new();
        for c in &cells {
            *cols.entry(c.col).or_insert(0) += 1;
            *rows.entry(c.row).or_insert(0) += 1;
            *diags.entry((c.col + c.row) % n).or_insert(0) += 1;
        }
        for (direction, counts) in [
            (Direction::Column, &cols),
            (Direction::Row, &rows),
            (Direction::Diagonal, &diags),
        ] {
            if let Some((index, count)) = check_lines(counts) {
                return Err(Error::LineCountViolation { direction, index, count });
            }
        }
        Ok(CombinatorialTgd { n, cells })
    }

    /// Builds a diagram from cells already known to be valid and reduced.
    pub(crate) fn from_valid(n: u32, mut cells: Vec<Cell>) -> Self {
        cells.sort_unstable();
        debug_assert!(CombinatorialTgd::new(n, cells.iter().copied()).is_ok());
        CombinatorialTgd { n, cells }
    }

    pub fn empty(n: u32) -> Result<Self> {
        CombinatorialTgd::new(n, core::iter::empty::<Cell>())
    }

    pub fn n(&self) -> u32 {
        self.n
    }

    pub fn cells(&self) -> &[Cell] {
        &self.cells
    }

    /// Half the number of points.
    pub fn size(&self) -> usize {
        self.cells.len() / 2
    }

    pub fn is_empty(&self) -> bool {
        self.cells.is_empty()
    }

    pub fn diagonal(&self, c: Cell) -> u32 {
        (c.col + c.row) % self.n
    }

    /// The order-3 automorphism `T(i, j) = (j, n − 1 − (i + j) mod n)`.
    ///
    /// Columns become diagonals, rows become columns and diagonals become
    /// rows, so the βγ grid of `D` is the αβ grid of `T(D)`.
    pub fn rotate_colors(&self) -> CombinatorialTgd {
        let n = self.n;
        let cells = self.cells.iter().map(|&c| rotate_cell(n, c)).collect();
        CombinatorialTgd::from_valid(n, cells)
    }

    pub fn transpose(&self) -> CombinatorialTgd {
        let cells = self.cells.iter().map(|c| Cell::new(c.row, c.col)).collect();
        CombinatorialTgd::from_valid(self.n, cells)
    }

    pub fn translate(&self, a: u32, b: u32) -> CombinatorialTgd {
        let n = self.n;
        let cells = self
            .cells
            .iter()
            .map(|c| Cell::new((c.col + a % n) % n, (c.row + b % n) % n))
            .collect();
        CombinatorialTgd::from_valid(n, cells)
    }

    /// αβ, βγ and γα grids, read from `D`, `T(D)` and `T²(D)`.
    pub fn three_grids(&self) -> [GridDiagram; 3] {
        let r1 = self.rotate_colors();
        let r2 = r1.rotate_colors();
        [
            GridDiagram::from_valid(self.n, self.cells.clone(), ColorPair::AlphaBeta),
            GridDiagram::from_valid(self.n, r1.cells, ColorPair::BetaGamma),
            GridDiagram::from_valid(self.n, r2.cells, ColorPair::GammaAlpha),
        ]
    }

    /// Places cell `(i, j)` at `((4i + 1)/4n, (4j + 1)/4n)`, strictly inside
    /// its lower-left triangle.
    pub fn to_geometric(&self) -> GeometricTgd {
        let d = 4 * self.n as i128;
        let points = self
            .cells
            .iter()
            .map(|c| {
                (
                    Rational::new(4 * c.col as i128 + 1, d),
                    Rational::new(4 * c.row as i128 + 1, d),
                )
            })
            .collect::<Vec<_>>();
        GeometricTgd::new(points).expect("image of a valid combinatorial diagram is valid")
    }

    /// Every distinct cell set in the orbit under `group`.
    pub fn orbit(&self, group: SymmetryGroup) -> alloc::collections::BTreeSet<Vec<Cell>> {
        let mut out = alloc::collections::BTreeSet::new();
        for_each_image(self, group, |cells| {
            out.insert(cells.to_vec());
        });
        out
    }

    /// Lexicographically smallest cell set over the orbit under `group`.
    pub fn canonicalize(&self, group: SymmetryGroup) -> CombinatorialTgd {
        let mut best = self.cells.clone();
        for_each_image(self, group, |cells| {
            if cells < best.as_slice() {
                best.clear();
                best.extend_from_slice(cells);
            }
        });
        CombinatorialTgd { n: self.n, cells: best }
    }

    /// Whether the diagram is its own canonical form.
    pub fn is_canonical(&self, group: SymmetryGroup) -> bool {
        let mut canonical = true;
        for_each_image(self, group, |cells| {
            if cells < self.cells.as_slice() {
                canonical = false;
            }
        });
        canonical
    }
}

pub(crate) fn rotate_cell(n: u32, c: Cell) -> Cell {
    Cell::new(c.row, (2 * n - 1 - c.col - c.row) % n)
}

/// Calls `f` with the sorted cell set of every group element's image
/// (with repetition when the stabilizer is nontrivial).
fn for_each_image(d: &CombinatorialTgd, group: SymmetryGroup, mut f: impl FnMut(&[Cell])) {
    let n = d.n;
    let (rotations, reflections, translations) = match group {
        SymmetryGroup::None => (1, 1, false),
        SymmetryGroup::Translations => (1, 1, true),
        SymmetryGroup::TranslationsRotation => (3, 1, true),
        SymmetryGroup::TranslationsRotationReflection => (3, 2, true),
    };
    let shifts = if translations { n } else { 1 };
    let mut base = Vec::with_capacity(d.cells.len());
    let mut image = Vec::with_capacity(d.cells.len());
    for reflect in 0..reflections {
        for rot in 0..rotations {
            base.clear();
            base.extend(d.cells.iter().map(|&c| {
                let mut c = if reflect == 1 { Cell::new(c.row, c.col) } else { c };
                for _ in 0..rot {
                    c = rotate_cell(n, c);
                }
                c
            }));
            for a in 0..shifts {
                for b in 0..shifts {
                    image.clear();
                    image.extend(base.iter().map(|c| Cell::new((c.col + a) % n, (c.row + b) % n)));
                    image.sort_unstable();
                    f(&image);
                }
            }
        }
    }
}

/// A single two-color grid diagram: every column and row holds 0 or 2 points.
#[derive(Debug, Clone, PartialEq, Eq, Hash)]
pub struct GridDiagram {
    n: u32,
    points: Vec<Cell>,
    label: ColorPair,
}

impl GridDiagram {
    pub fn new<I, C>(n: u32, points: I, label: ColorPair) -> Result<Self>
    where
        I: IntoIterator<Item = C>,
        C: Into<Cell>,
    {
        if n == 0 {
            return Err(Error::ZeroGridNumber);
        }
        let mut points: Vec<Cell> = points.into_iter().map(Into::into).collect();
        if let Some(c) = points.iter().find(|c| c.col >= n || c.row >= n) {
            return Err(Error::InvalidParameter(alloc::format!(
                "point ({}, {}) lies outside a grid of size {n}",
                c.col,
                c.row
            )));
        }
        points.sort_unstable();
        if let Some(w) = points.windows(2).find(|w| w[0] == w[1]) {
            return Err(Error::DuplicateCell(w[0]));
        }
        let mut cols = BTreeMap::new();
        let mut rows = BTreeMap::new();
        for c in &points {
            *cols.entry(c.col).or_insert(0) += 1;
            *rows.entry(c.row).or_insert(0) += 1;
        }
        for (direction, counts) in [(Direction::Column, &cols), (Direction::Row, &rows)] {
            if let Some((index, count)) = check_lines(counts) {
                return Err(Error::LineCountViolation { direction, index, count });
            }
        }
        Ok(GridDiagram { n, points, label })
    }

    pub(crate) fn from_valid(n: u32, mut points: Vec<Cell>, label: ColorPair) -> Self {
        points.sort_unstable();
        GridDiagram { n, points, label }
    }

    pub fn n(&self) -> u32 {
        self.n
    }

    pub fn points(&self) -> &[Cell] {
        &self.points
    }

    pub fn label(&self) -> ColorPair {
        self.label
    }

    pub fn with_label(mut self, label: ColorPair) -> Self {
        self.label = label;
        self
    }

    pub fn index_of(&self, c: Cell) -> Option<usize> {
        self.points.binary_search(&c).ok()
    }

    /// Index of the other point in the same column.
    pub fn column_partner(&self, i: usize) -> usize {
        let c = self.points[i];
        // points are sorted by column, so the partner is adjacent
        if i > 0 && self.points[i - 1].col == c.col {
            i - 1
        } else {
            i + 1
        }
    }

    /// Index of the other point in the same row.
    pub fn row_partner(&self, i: usize) -> usize {
        let c = self.points[i];
        self.points
            .iter()
            .position(|p| p.row == c.row && p.col != c.col)
            .expect("valid grid rows hold two points")
    }

    /// Translates every point by `(a, b)` mod `n`, moving the cut of the torus.
    pub fn cyclic_permute(&self, a: i64, b: i64) -> GridDiagram {
        let n = self.n as i64;
        let points = self
            .points
            .iter()
            .map(|c| Cell::new((c.col as i64 + a).rem_euclid(n) as u32, (c.row as i64 + b).rem_euclid(n) as u32))
            .collect();
        GridDiagram::from_valid(self.n, points, self.label)
    }

    /// Deletes empty rows and columns.
    pub fn compress(&self) -> GridDiagram {
        let mut cols: Vec<u32> = self.points.iter().map(|c| c.col).collect();
        let mut rows: Vec<u32> = self.points.iter().map(|c| c.row).collect();
        cols.sort_unstable();
        cols.dedup();
        rows.sort_unstable();
        rows.dedup();
        let points = self
            .points
            .iter()
            .map(|c| {
                Cell::new(
                    cols.binary_search(&c.col).unwrap() as u32,
                    rows.binary_search(&c.row).unwrap() as u32,
                )
            })
            .collect();
        GridDiagram::from_valid((cols.len() as u32).max(1), points, self.label)
    }

    /// Restriction to a subset of points that is itself closed under the
    /// column and row pairings.
    pub fn restrict(&self, indices: &[usize]) -> GridDiagram {
        let points = indices.iter().map(|&i| self.points[i]).collect();
        GridDiagram::from_valid(self.n, points, self.label)
    }
}

fn frac(x: Rational) -> Rational {
    x - x.floor()
}

/// Geometric triple grid diagram: exact rational points on the unit torus,
/// paired along vertical, horizontal and slope −1 lines.
///
/// Points are stored sorted; `partners[k][i]` is the partner of point `i` in
/// direction `k` (column, row, diagonal).
#[derive(Debug, Clone, PartialEq, Eq, Hash)]
pub struct GeometricTgd {
    points: Vec<(Rational, Rational)>,
    partners: [Vec<usize>; 3],
}

/// Position of the line through a point in one direction.
type LineKey = fn(&(Rational, Rational)) -> Rational;

impl GeometricTgd {
    /// Validates a point set. Coordinates are reduced mod 1.
    ///
    /// Classes are checked by direction (column, row, diagonal) and within a
    /// direction by increasing coordinate value.
    pub fn new(points: impl IntoIterator<Item = (Rational, Rational)>) -> Result<Self> {
        let mut points: Vec<(Rational, Rational)> = points.into_iter().map(|(x, y)| (frac(x), frac(y))).collect();
        points.sort_unstable();
        if let Some(w) = points.windows(2).find(|w| w[0] == w[1]) {
            return Err(Error::DuplicatePoint(w[0]));
        }
        let keys: [LineKey; 3] = [|p| p.0, |p| p.1, |p| frac(p.0 + p.1)];
        let directions = [Direction::Column, Direction::Row, Direction::Diagonal];
        let mut partners: [Vec<usize>; 3] = Default::default();
        for (k, key) in keys.iter().enumerate() {
            let mut classes: BTreeMap<Rational, Vec<usize>> = BTreeMap::new();
            for (i, p) in points.iter().enumerate() {
                classes.entry(key(p)).or_default().push(i);
            }
            if let Some((value, members)) = classes.iter().find(|(_, m)| m.len() != 2) {
                return Err(Error::UnpairedPoint {
                    direction: directions[k],
                    value: *value,
                    count: members.len(),
                });
            }
            let mut partner = alloc::vec![0; points.len()];
            for m in classes.values() {
                partner[m[0]] = m[1];
                partner[m[1]] = m[0];
            }
            partners[k] = partner;
        }
        Ok(GeometricTgd { points, partners })
    }

    pub fn points(&self) -> &[(Rational, Rational)] {
        &self.points
    }

    pub fn size(&self) -> usize {
        self.points.len() / 2
    }

    pub fn partners(&self, direction: Direction) -> &[usize] {
        match direction {
            Direction::Column => &self.partners[0],
            Direction::Row => &self.partners[1],
            Direction::Diagonal => &self.partners[2],
        }
    }

    /// `(x, y) → (y, −x − y mod 1)`, the geometric form of the color rotation.
    pub fn rotate(&self) -> GeometricTgd {
        let points = self.points.iter().map(|&(x, y)| (y, frac(-x - y))).collect::<Vec<_>>();
        GeometricTgd::new(points).expect("rotation preserves validity")
    }

    /// The three grid diagrams with every line occupied (`n = b`): a point's
    /// column and row are the ranks of its `x` and `y` among the distinct
    /// values.
    pub fn grids(&self) -> [GridDiagram; 3] {
        let r1 = self.rotate();
        let r2 = r1.rotate();
        [
            rank_grid(&self.points, ColorPair::AlphaBeta),
            rank_grid(&r1.points, ColorPair::BetaGamma),
            rank_grid(&r2.points, ColorPair::GammaAlpha),
        ]
    }
}

fn rank_grid(points: &[(Rational, Rational)], label: ColorPair) -> GridDiagram {
    let mut xs: Vec<Rational> = points.iter().map(|p| p.0).collect();
    let mut ys: Vec<Rational> = points.iter().map(|p| p.1).collect();
    xs.sort_unstable();
    xs.dedup();
    ys.sort_unstable();
    ys.dedup();
    let cells = points
        .iter()
        .map(|p| {
            Cell::new(
                xs.binary_search(&p.0).unwrap() as u32,
                ys.binary_search(&p.1).unwrap() as u32,
            )
        })
        .collect();
    GridDiagram::from_valid((xs.len() as u32).max(1), cells, label)
}

/// Data shared by combinatorial and geometric diagrams: the three grids and
/// the column/row/diagonal pairings of the points.
pub trait TripleDiagram {
    fn point_count(&self) -> usize;
    /// Partner arrays for α (column), β (row) and γ (diagonal) lines, indexed
    /// by point.
    fn pairings(&self) -> [Vec<usize>; 3];
    fn grids(&self) -> [GridDiagram; 3];
    fn size(&self) -> usize {
        self.point_count() / 2
    }
}

impl TripleDiagram for CombinatorialTgd {
    fn point_count(&self) -> usize {
        self.cells.len()
    }

    fn pairings(&self) -> [Vec<usize>; 3] {
        let n = self.n;
        let keys: [&dyn Fn(&Cell) -> u32; 3] = [&|c| c.col, &|c| c.row, &|c| (c.col + c.row) % n];
        keys.map(|key| {
            let mut slot: BTreeMap<u32, usize> = BTreeMap::new();
            let mut partner = alloc::vec![usize::MAX; self.cells.len()];
            for (i, c) in self.cells.iter().enumerate() {
                if let Some(j) = slot.remove(&key(c)) {
                    partner[i] = j;
                    partner[j] = i;
                } else {
                    slot.insert(key(c), i);
                }
            }
            partner
        })
    }

    fn grids(&self) -> [GridDiagram; 3] {
        self.three_grids()
    }
}

impl TripleDiagram for GeometricTgd {
    fn point_count(&self) -> usize {
        self.points.len()
    }

    fn pairings(&self) -> [Vec<usize>; 3] {
        self.partners.clone()
    }

    fn grids(&self) -> [GridDiagram; 3] {
        GeometricTgd::grids(self)
    }
}

/// Parses `p/q` or an integer into a rational.
pub fn parse_rational(s: &str) -> Option<Rational> {
    let s = s.trim();
    let (p, q) = match s.split_once('/') {
        Some((p, q)) => (p.trim().parse::<i128>().ok()?, q.trim().parse::<i128>().ok()?),
        None => (s.parse::<i128>().ok()?, 1),
    };
    if q.is_zero() {
        return None;
    }
    Some(Rational::new(p, q))
}

/// `p/q` form of a rational in lowest terms (`p` alone when `q = 1`).
pub fn format_rational(r: &Rational) -> alloc::string::String {
    if r.denom().is_one() {
        alloc::format!("{}", r.numer())
    } else {
        alloc::format!("{}/{}", r.numer(), r.denom())
    }
}

#[cfg(test)]
mod tests {
    use super::*;
    use alloc::vec;

    fn r(p: i128, q: i128) -> Rational {
        Rational::new(p, q)
    }

    fn full_square() -> CombinatorialTgd {
        CombinatorialTgd::new(2, [(0, 0), (0, 1), (1, 0), (1, 1)]).unwrap()
    }

    #[test]
    fn validates_full_square() {
        let d = full_square();
        assert_eq!(d.size(), 2);
    }

    #[test]
    fn empty_diagram_is_valid() {
        let d = CombinatorialTgd::empty(3).unwrap();
        assert_eq!(d.size(), 0);
    }

    #[test]
    fn reports_first_bad_line() {
        let err = CombinatorialTgd::new(2, [(0, 0), (0, 1)]).unwrap_err();
        assert_eq!(
            err,
            Error::LineCountViolation { direction: Direction::Row, index: 0, count: 1 }
        );
        let err = CombinatorialTgd::new(2, [(0, 0), (0, 0)]).unwrap_err();
        assert_eq!(err, Error::DuplicateCell(Cell::new(0, 0)));
        // columns and rows fine, diagonals 0 and 2 carry one point each
        let err = CombinatorialTgd::new(3, [(0, 0), (0, 1), (1, 0), (1, 1)]).unwrap_err();
        assert_eq!(err, Error::LineCountViolation { direction: Direction::Diagonal, index: 0, count: 1 });
        assert_eq!(CombinatorialTgd::new(0, [(0, 0)]).unwrap_err(), Error::ZeroGridNumber);
    }

    #[test]
    fn coordinates_reduce_mod_n() {
        let d = CombinatorialTgd::new(2, [(2, 0), (0, 3), (1, 0), (1, 1)]).unwrap();
        assert_eq!(d, full_square());
    }

    #[test]
    fn rotation_cell_map() {
        let n = 2;
        assert_eq!(rotate_cell(n, Cell::new(0, 0)), Cell::new(0, 1));
        assert_eq!(rotate_cell(n, Cell::new(0, 1)), Cell::new(1, 0));
        assert_eq!(rotate_cell(n, Cell::new(1, 0)), Cell::new(0, 0));
        assert_eq!(rotate_cell(n, Cell::new(1, 1)), Cell::new(1, 1));
        assert_eq!(full_square().rotate_colors(), full_square());
        let e = CombinatorialTgd::empty(4).unwrap();
        assert_eq!(e.rotate_colors(), e);
    }

    #[test]
    fn three_grids_of_square_and_empty() {
        for g in full_square().three_grids() {
            assert_eq!(g.points(), full_square().cells());
        }
        for g in CombinatorialTgd::empty(3).unwrap().three_grids() {
            assert!(g.points().is_empty());
        }
    }

    #[test]
    fn geometric_image() {
        let g = full_square().to_geometric();
        assert_eq!(g.points()[0], (r(1, 8), r(1, 8)));
        assert_eq!(g.size(), 2);
        let xs: alloc::collections::BTreeSet<_> = g.points().iter().map(|p| p.0).collect();
        assert_eq!(xs.into_iter().collect::<Vec<_>>(), vec![r(1, 8), r(5, 8)]);
    }

    #[test]
    fn geometric_validation() {
        let pts = vec![(r(1, 8), r(1, 8)), (r(1, 8), r(5, 8)), (r(5, 8), r(1, 8)), (r(5, 8), r(5, 8))];
        assert_eq!(GeometricTgd::new(pts).unwrap().size(), 2);
        assert_eq!(GeometricTgd::new(vec![]).unwrap().size(), 0);
        let err = GeometricTgd::new(vec![(r(0, 1), r(0, 1)), (r(1, 2), r(0, 1)), (r(0, 1), r(1, 2))]).unwrap_err();
        assert_eq!(
            err,
            Error::UnpairedPoint { direction: Direction::Column, value: r(1, 2), count: 1 }
        );
        let err = GeometricTgd::new(vec![(r(1, 8), r(1, 8)), (r(9, 8), r(1, 8))]).unwrap_err();
        assert!(matches!(err, Error::DuplicatePoint(_)));
    }

    #[test]
    fn geometric_rotation() {
        let g = GeometricTgd::new(vec![
            (r(1, 8), r(1, 8)),
            (r(1, 8), r(5, 8)),
            (r(5, 8), r(1, 8)),
            (r(5, 8), r(5, 8)),
        ])
        .unwrap();
        let rot = g.rotate();
        assert!(rot.points().contains(&(r(1, 8), r(3, 4))));
        assert_eq!(rot.rotate().rotate(), g);
    }

    #[test]
    fn canonical_forms() {
        let d = full_square();
        assert_eq!(d.canonicalize(SymmetryGroup::None), d);
        // the three complements of shifted permutations at n = 3
        let diagrams: Vec<CombinatorialTgd> = (0..3)
            .map(|c| {
                let cells = (0..3u32)
                    .flat_map(|i| (0..3u32).map(move |j| (i, j)))
                    .filter(|&(i, j)| j != (i + c) % 3);
                CombinatorialTgd::new(3, cells).unwrap()
            })
            .collect();
        let canon = diagrams[0].canonicalize(SymmetryGroup::Translations);
        for d in &diagrams {
            assert_eq!(d.canonicalize(SymmetryGroup::Translations), canon);
            assert_eq!(canon.canonicalize(SymmetryGroup::Translations), canon);
        }
        assert!(canon.is_canonical(SymmetryGroup::Translations));
    }

    #[test]
    fn grid_validation_and_helpers() {
        let g = GridDiagram::new(2, [(0, 0), (0, 1), (1, 0), (1, 1)], ColorPair::AlphaBeta).unwrap();
        assert_eq!(g.column_partner(0), 1);
        assert_eq!(g.row_partner(0), 2);
        assert_eq!(g.cyclic_permute(1, 1), g);
        assert_eq!(g.cyclic_permute(0, 0), g);
        let err = GridDiagram::new(3, [(0, 0), (0, 1)], ColorPair::AlphaBeta).unwrap_err();
        assert!(matches!(err, Error::LineCountViolation { direction: Direction::Row, .. }));
        let sparse = GridDiagram::new(4, [(1, 1), (1, 3), (3, 1), (3, 3)], ColorPair::AlphaBeta).unwrap();
        assert_eq!(sparse.compress(), g);
    }

    #[test]
    fn rational_text() {
        assert_eq!(parse_rational("5/8"), Some(r(5, 8)));
        assert_eq!(parse_rational("2/4"), Some(r(1, 2)));
        assert_eq!(parse_rational("3"), Some(r(3, 1)));
        assert_eq!(parse_rational("1/0"), None);
        assert_eq!(format_rational(&r(10, 16)), "5/8");
        assert_eq!(format_rational(&r(0, 1)), "0");
    }
}
