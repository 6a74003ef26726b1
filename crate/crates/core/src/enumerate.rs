//! Exhaustive search for combinatorial diagrams of a fixed grid number.
//!
//! Rows are filled top to bottom, each with nothing or a pair of cells.
//! Column and diagonal counts never exceed two, and a branch is cut as soon
//! as the half-filled lines outnumber what the remaining rows can complete.
//! Isomorphs are rejected by keeping only canonical forms.

use alloc::collections::BTreeMap;
use alloc::vec::Vec;
use core::ops::RangeInclusive;

use crate::error::Error;
use crate::link::DEFAULT_CROSSING_BOUND;
use crate::surface::{self, FillabilityStatus, SurfaceReport};
use crate::tgd::{Cell, CombinatorialTgd, SymmetryGroup};
use crate::Result;

pub const DEFAULT_NODE_BUDGET: u64 = 100_000_000;

/// How often, in search nodes, the [`Monitor`] is consulted.
pub const TICK: u64 = 1024;

#[derive(Debug, Clone, Copy, PartialEq, Eq, PartialOrd, Ord, Hash)]
pub enum Filter {
    Simple,
    LagrangianEligible,
    ImmersedEligible,
    Orientable,
    Nonorientable,
    Connected,
}

impl Filter {
    pub fn parse(s: &str) -> Option<Filter> {
        Some(match s {
            "simple" => Filter::Simple,
            "lagrangian-eligible" => Filter::LagrangianEligible,
            "immersed-eligible" => Filter::ImmersedEligible,
            "orientable" => Filter::Orientable,
            "nonorientable" => Filter::Nonorientable,
            "connected" => Filter::Connected,
            _ => return None,
        })
    }

    fn needs_fillability(self) -> bool {
        matches!(self, Filter::Simple | Filter::LagrangianEligible | Filter::ImmersedEligible)
    }

    pub fn accepts(self, report: &SurfaceReport) -> bool {
        let fill = report.fillability.as_ref();
        match self {
            Filter::Simple => fill.is_some_and(|f| f.is_simple()),
            Filter::LagrangianEligible => fill.is_some_and(|f| f.status == FillabilityStatus::LagrangianEligible),
            Filter::ImmersedEligible => fill.is_some_and(|f| f.all_rot_zero()),
            Filter::Orientable => report.total.orientable,
            Filter::Nonorientable => !report.total.orientable,
            Filter::Connected => report.total.connected,
        }
    }
}

#[derive(Debug, Clone, PartialEq, Eq)]
pub struct EnumerationOptions {
    pub n: u32,
    /// Allowed sizes `b`; `None` means every nonempty diagram.
    pub b_range: Option<RangeInclusive<usize>>,
    pub symmetry: SymmetryGroup,
    pub filters: Vec<Filter>,
    pub node_budget: u64,
    pub crossing_bound: usize,
}

impl EnumerationOptions {
    pub fn new(n: u32) -> Self {
        EnumerationOptions {
            n,
            b_range: None,
            symmetry: SymmetryGroup::None,
            filters: Vec::new(),
            node_budget: DEFAULT_NODE_BUDGET,
            crossing_bound: DEFAULT_CROSSING_BOUND,
        }
    }

    pub fn symmetry(mut self, symmetry: SymmetryGroup) -> Self {
        self.symmetry = symmetry;
        self
    }

    pub fn filter(mut self, f: Filter) -> Self {
        self.filters.push(f);
        self
    }

    pub fn b_range(mut self, range: RangeInclusive<usize>) -> Self {
        self.b_range = Some(range);
        self
    }

    pub fn node_budget(mut self, nodes: u64) -> Self {
        self.node_budget = nodes;
        self
    }

    pub fn validate(&self) -> Result<()> {
        if self.n == 0 {
            return Err(Error::ZeroGridNumber);
        }
        if self.node_budget == 0 {
            return Err(Error::InvalidParameter("node budget must be positive".into()));
        }
        Ok(())
    }

    fn size_bounds(&self) -> (usize, usize) {
        let n = self.n as usize;
        match &self.b_range {
            Some(r) => (*r.start(), (*r.end()).min(n)),
            None => (1, n),
        }
    }
}

/// Lets a caller stop the search early, for example on a deadline or a
/// budget shared between threads. Called every [`TICK`] nodes.
pub trait Monitor {
    /// `false` stops the search.
    fn tick(&self, nodes: u64) -> bool;
}

impl Monitor for () {
    fn tick(&self, _: u64) -> bool {
        true
    }
}

impl<F: Fn(u64) -> bool> Monitor for F {
    fn tick(&self, nodes: u64) -> bool {
        self(nodes)
    }
}

#[derive(Debug, Clone, PartialEq, Eq)]
pub struct Enumeration {
    /// Canonical representatives passing the filters, sorted by cells.
    pub diagrams: Vec<CombinatorialTgd>,
    /// Valid diagrams in the size range, before symmetry reduction and
    /// filters.
    pub raw_count: u64,
    /// Orbits in the size range, before filters.
    pub orbit_count: u64,
    pub nodes: u64,
    pub complete: bool,
}

impl Enumeration {
    fn empty() -> Self {
        Enumeration { diagrams: Vec::new(), raw_count: 0, orbit_count: 0, nodes: 0, complete: true }
    }

    /// Combines the results of disjoint branches.
    pub fn merge(parts: impl IntoIterator<Item = Enumeration>) -> Enumeration {
        let mut out = Enumeration::empty();
        for p in parts {
            out.diagrams.extend(p.diagrams);
            out.raw_count += p.raw_count;
            out.orbit_count += p.orbit_count;
            out.nodes += p.nodes;
            out.complete &= p.complete;
        }
        out.diagrams.sort_unstable_by(|a, b| a.cells().cmp(b.cells()));
        out
    }

    /// Errors with `BudgetExceeded` when the search was cut short.
    pub fn into_complete(self) -> Result<Enumeration> {
        if self.complete {
            Ok(self)
        } else {
            Err(Error::BudgetExceeded { nodes: self.nodes })
        }
    }
}

/// First-row configurations, in search order: empty, then column pairs
/// `(a, b)` with `a < b` lexicographically. Branch `k` of a partitioned search
/// fixes row 0 to entry `k`.
pub fn first_row_choices(n: u32) -> Vec<Option<(u32, u32)>> {
    let mut out = Vec::from([None]);
    for a in 0..n {
        for b in (a + 1)..n {
            out.push(Some((a, b)));
        }
    }
    out
}

/// Runs the full search.
pub fn enumerate(opts: &EnumerationOptions) -> Result<Enumeration> {
    let branches: Vec<usize> = (0..first_row_choices(opts.n).len()).collect();
    enumerate_branches(opts, &branches, &())
}

/// Runs only the listed first-row branches. The node budget applies to this
/// call alone; use the monitor to share a budget between calls.
pub fn enumerate_branches(opts: &EnumerationOptions, branches: &[usize], monitor: &dyn Monitor) -> Result<Enumeration> {
    opts.validate()?;
    let (min_b, max_b) = opts.size_bounds();
    let n = opts.n as usize;
    let choices = first_row_choices(opts.n);
    let mut search = Search {
        n,
        rows: choices.clone(),
        col: alloc::vec![0; n],
        diag: alloc::vec![0; n],
        open_cols: 0,
        open_diags: 0,
        cells: Vec::with_capacity(2 * n),
        min_cells: 2 * min_b,
        max_cells: 2 * max_b,
        nodes: 0,
        budget: opts.node_budget,
        monitor,
        stopped: false,
        symmetry: opts.symmetry,
        raw: 0,
        found: Vec::new(),
    };
    for &k in branches {
        if search.stopped {
            break;
        }
        let Some(&choice) = choices.get(k) else {
            return Err(Error::InvalidParameter(alloc::format!("no first-row branch {k}")));
        };
        search.branch(0, choice);
    }
    let mut out = Enumeration {
        orbit_count: search.found.len() as u64,
        diagrams: Vec::new(),
        raw_count: search.raw,
        nodes: search.nodes,
        complete: !search.stopped,
    };
    let needs_fill = opts.filters.iter().any(|f| f.needs_fillability());
    out.diagrams = search
        .found
        .into_iter()
        .filter(|d| {
            if opts.filters.is_empty() {
                return true;
            }
            let report =
                if needs_fill { surface::analyze(d, opts.crossing_bound) } else { surface::classify(d) };
            opts.filters.iter().all(|f| f.accepts(&report))
        })
        .collect();
    out.diagrams.sort_unstable_by(|a, b| a.cells().cmp(b.cells()));
    Ok(out)
}

struct Search<'a> {
    n: usize,
    rows: Vec<Option<(u32, u32)>>,
    col: Vec<u8>,
    diag: Vec<u8>,
    /// Lines currently holding exactly one cell.
    open_cols: usize,
    open_diags: usize,
    cells: Vec<Cell>,
    min_cells: usize,
    max_cells: usize,
    nodes: u64,
    budget: u64,
    monitor: &'a dyn Monitor,
    stopped: bool,
    symmetry: SymmetryGroup,
    raw: u64,
    found: Vec<CombinatorialTgd>,
}

impl Search<'_> {
    fn bump(count: &mut u8, open: &mut usize, up: bool) {
        if up {
            *count += 1;
        } else {
            *count -= 1;
        }
        // count moved between 0, 1 and 2: the open set changes by one
        if *count == 1 {
            *open += 1;
        } else {
            *open -= 1;
        }
    }

    fn place(&mut self, row: usize, c: u32, up: bool) {
        let d = (c as usize + row) % self.n;
        Self::bump(&mut self.col[c as usize], &mut self.open_cols, up);
        Self::bump(&mut self.diag[d], &mut self.open_diags, up);
    }

    fn fits(&self, row: usize, c: u32) -> bool {
        self.col[c as usize] < 2 && self.diag[(c as usize + row) % self.n] < 2
    }

    /// Tries `choice` on `row` and searches below it.
    fn branch(&mut self, row: usize, choice: Option<(u32, u32)>) {
        let Some((a, b)) = choice else {
            self.descend(row + 1);
            return;
        };
        if !self.fits(row, a) || !self.fits(row, b) || self.cells.len() + 2 > self.max_cells {
            return;
        }
        self.place(row, a, true);
        self.place(row, b, true);
        self.cells.push(Cell::new(a, row as u32));
        self.cells.push(Cell::new(b, row as u32));
        self.descend(row + 1);
        self.cells.truncate(self.cells.len() - 2);
        self.place(row, a, false);
        self.place(row, b, false);
    }

    fn descend(&mut self, row: usize) {
        if self.stopped {
            return;
        }
        self.nodes += 1;
        if self.nodes > self.budget || (self.nodes.is_multiple_of(TICK) && !self.monitor.tick(TICK)) {
            self.stopped = true;
            return;
        }
        let remaining = self.n - row;
        if self.open_cols > 2 * remaining
            || self.open_diags > 2 * remaining
            || self.cells.len() + 2 * remaining < self.min_cells
        {
            return;
        }
        if row == self.n {
            self.leaf();
            return;
        }
        for k in 0..self.rows.len() {
            self.branch(row, self.rows[k]);
            if self.stopped {
                return;
            }
        }
    }

    fn leaf(&mut self) {
        self.raw += 1;
        let d = CombinatorialTgd::from_valid(self.n as u32, self.cells.clone());
        if d.is_canonical(self.symmetry) {
            self.found.push(d);
        }
    }
}

#[derive(Debug, Clone, Copy, PartialEq, Eq, PartialOrd, Ord, Hash)]
pub struct CensusKey {
    pub b: usize,
    pub orientable: bool,
    pub euler: i64,
    pub status: FillabilityStatus,
}

#[derive(Debug, Clone, Copy, PartialEq, Eq, Hash)]
pub struct CensusRow {
    pub key: CensusKey,
    pub orbits: u64,
    /// Sum of orbit sizes under the chosen symmetry group.
    pub raw: u64,
}

#[derive(Debug, Clone, PartialEq, Eq)]
pub struct Census {
    pub n: u32,
    pub symmetry: SymmetryGroup,
    pub rows: Vec<CensusRow>,
    pub raw_count: u64,
    pub orbit_count: u64,
    pub nodes: u64,
    pub complete: bool,
}

/// Groups canonical representatives by size, orientability, Euler
/// characteristic and fillability status.
pub fn census(opts: &EnumerationOptions) -> Result<Census> {
    let e = enumerate(opts)?;
    Ok(census_of(opts, &e))
}

pub fn census_of(opts: &EnumerationOptions, e: &Enumeration) -> Census {
    let keys = e.diagrams.iter().map(|d| CensusKey::of(d, opts.crossing_bound)).collect::<Vec<_>>();
    census_from_keys(opts, e, &keys)
}

impl CensusKey {
    pub fn of(d: &CombinatorialTgd, crossing_bound: usize) -> CensusKey {
        let report = surface::analyze(d, crossing_bound);
        CensusKey {
            b: d.size(),
            orientable: report.total.orientable,
            euler: report.total.euler,
            status: report.fillability.as_ref().map_or(FillabilityStatus::General, |f| f.status),
        }
    }
}

/// Aggregates precomputed keys, one per entry of `e.diagrams`.
pub fn census_from_keys(opts: &EnumerationOptions, e: &Enumeration, keys: &[CensusKey]) -> Census {
    assert_eq!(keys.len(), e.diagrams.len(), "one key per diagram");
    let mut rows: BTreeMap<CensusKey, (u64, u64)> = BTreeMap::new();
    for (d, key) in e.diagrams.iter().zip(keys) {
        let slot = rows.entry(*key).or_default();
        slot.0 += 1;
        slot.1 += d.orbit(opts.symmetry).len() as u64;
    }
    Census {
        n: opts.n,
        symmetry: opts.symmetry,
        rows: rows.into_iter().map(|(key, (orbits, raw))| CensusRow { key, orbits, raw }).collect(),
        raw_count: e.raw_count,
        orbit_count: e.orbit_count,
        nodes: e.nodes,
        complete: e.complete,
    }
}

/// First canonical diagram, in output order, whose analysis satisfies
/// `predicate`. Reports `BudgetExceeded` only if nothing was found before the
/// search was cut short.
pub fn find_witness<P>(opts: &EnumerationOptions, predicate: P) -> Result<Option<(CombinatorialTgd, SurfaceReport)>>
where
    P: Fn(&CombinatorialTgd, &SurfaceReport) -> bool,
{
    let e = enumerate(opts)?;
    for d in &e.diagrams {
        let report = surface::analyze(d, opts.crossing_bound);
        if predicate(d, &report) {
            return Ok(Some((d.clone(), report)));
        }
    }
    if e.complete {
        Ok(None)
    } else {
        Err(Error::BudgetExceeded { nodes: e.nodes })
    }
}
