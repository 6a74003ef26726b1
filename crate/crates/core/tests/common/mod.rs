//! Test-only oracles that share no code with the library: a grid-to-PD-code
//! converter, a recursive skein evaluator and a brute-force subset filter.

#![allow(dead_code)]

use std::collections::BTreeMap;

use rand::seq::SliceRandom;
use rand::Rng;
use trigrid_core::enumerate::{enumerate, EnumerationOptions};
use trigrid_core::{constructions, ColorPair, CombinatorialTgd, GridDiagram, LaurentPolynomial, SymmetryGroup};

pub type Poly = BTreeMap<i32, i64>;

fn add(p: &mut Poly, e: i32, c: i64) {
    let v = p.entry(e).or_insert(0);
    *v += c;
    if *v == 0 {
        p.remove(&e);
    }
}

pub fn mul(a: &Poly, b: &Poly) -> Poly {
    let mut out = Poly::new();
    for (&e1, &c1) in a {
        for (&e2, &c2) in b {
            add(&mut out, e1 + e2, c1 * c2);
        }
    }
    out
}

pub fn monomial(c: i64, e: i32) -> Poly {
    let mut p = Poly::new();
    add(&mut p, e, c);
    p
}

fn delta_pow(k: usize) -> Poly {
    let delta: Poly = [(2, -1), (-2, -1)].into_iter().collect();
    (0..k).fold(monomial(1, 0), |acc, _| mul(&acc, &delta))
}

pub fn from_library(p: &LaurentPolynomial) -> Poly {
    p.terms().map(|(e, c)| (e, c as i64)).collect()
}

/// Planar diagram code: crossings `[i, j, k, l]` listed counterclockwise from
/// the incoming under-edge, plus loops that meet no crossing.
#[derive(Debug, Clone)]
pub struct Pd {
    pub crossings: Vec<[usize; 4]>,
    pub free_loops: usize,
    /// Next edge along the orientation.
    pub next: Vec<usize>,
}

impl Pd {
    pub fn writhe(&self) -> i64 {
        // positive when the over strand runs from l to j
        self.crossings.iter().map(|x| if self.next[x[3]] == x[1] { 1 } else { -1 }).sum()
    }
}

/// Builds a PD code from the grid, joining partners inside the square and
/// putting horizontal strands over vertical ones.
pub fn grid_to_pd(g: &GridDiagram) -> Pd {
    let pts: Vec<(i64, i64)> = g.points().iter().map(|c| (c.col as i64, c.row as i64)).collect();
    let partner = |i: usize, vertical: bool| {
        (0..pts.len())
            .find(|&j| j != i && if vertical { pts[j].0 == pts[i].0 } else { pts[j].1 == pts[i].1 })
            .unwrap()
    };
    // trace components: vertical step then horizontal step
    let mut seen = vec![false; pts.len()];
    let mut segs: Vec<Vec<((i64, i64), (i64, i64))>> = Vec::new();
    for s in 0..pts.len() {
        if seen[s] {
            continue;
        }
        let mut comp = Vec::new();
        let mut p = s;
        loop {
            let q = partner(p, true);
            let r = partner(q, false);
            seen[p] = true;
            seen[q] = true;
            comp.push((pts[p], pts[q]));
            comp.push((pts[q], pts[r]));
            p = r;
            if p == s {
                break;
            }
        }
        segs.push(comp);
    }
    let all: Vec<((i64, i64), (i64, i64))> = segs.iter().flatten().copied().collect();
    let meets = |v: &((i64, i64), (i64, i64)), h: &((i64, i64), (i64, i64))| -> Option<(i64, i64)> {
        let x = v.0 .0;
        let y = h.0 .1;
        let (y1, y2) = (v.0 .1.min(v.1 .1), v.0 .1.max(v.1 .1));
        let (x1, x2) = (h.0 .0.min(h.1 .0), h.0 .0.max(h.1 .0));
        (v.0 .0 == v.1 .0 && h.0 .1 == h.1 .1 && x1 < x && x < x2 && y1 < y && y < y2).then_some((x, y))
    };
    // passages in traversal order: (crossing point, is_over, direction)
    let mut edge = 0usize;
    let mut next = Vec::new();
    let mut under: BTreeMap<(i64, i64), (usize, usize, (i64, i64))> = BTreeMap::new();
    let mut over: BTreeMap<(i64, i64), (usize, usize, (i64, i64))> = BTreeMap::new();
    let mut free_loops = 0;
    for comp in &segs {
        let mut passages = Vec::new();
        for s in comp {
            let dir = ((s.1 .0 - s.0 .0).signum(), (s.1 .1 - s.0 .1).signum());
            let vertical = s.0 .0 == s.1 .0;
            let mut here: Vec<(i64, i64)> = all
                .iter()
                .filter_map(|o| if vertical { meets(s, o) } else { meets(o, s) })
                .collect();
            here.sort_by_key(|&(x, y)| (x - s.0 .0) * dir.0 + (y - s.0 .1) * dir.1);
            passages.extend(here.into_iter().map(|pt| (pt, !vertical, dir)));
        }
        if passages.is_empty() {
            free_loops += 1;
            continue;
        }
        let base = edge;
        let m = passages.len();
        for (t, &(pt, is_over, dir)) in passages.iter().enumerate() {
            let incoming = base + t;
            let outgoing = base + (t + 1) % m;
            if is_over {
                over.insert(pt, (incoming, outgoing, dir));
            } else {
                under.insert(pt, (incoming, outgoing, dir));
            }
            next.push(outgoing);
        }
        edge += m;
    }
    let crossings = under
        .iter()
        .map(|(pt, &(ui, uo, ud))| {
            let (oi, oo, od) = over[pt];
            // rotate the incoming under direction (-ud) by +90 degrees
            let ccw = (ud.1, -ud.0);
            if ccw == od {
                [ui, oo, uo, oi]
            } else {
                [ui, oi, uo, oo]
            }
        })
        .collect();
    Pd { crossings, free_loops, next }
}

/// Kauffman bracket by expanding one crossing at a time:
/// `<X[a,b,c,d]> = A <P[a,b] P[c,d]> + A^-1 <P[a,d] P[b,c]>`.
pub fn skein_bracket(pd: &Pd) -> Poly {
    fn go(rest: &[[usize; 4]], pairs: &mut Vec<(usize, usize)>, free: usize, edges: usize) -> Poly {
        let Some((x, tail)) = rest.split_first() else {
            let mut parent: Vec<usize> = (0..edges).collect();
            fn root(p: &mut [usize], mut x: usize) -> usize {
                while p[x] != x {
                    x = p[x];
                }
                x
            }
            for &(a, b) in pairs.iter() {
                let (ra, rb) = (root(&mut parent, a), root(&mut parent, b));
                parent[ra] = rb;
            }
            let loops = (0..edges).filter(|&e| root(&mut parent, e) == e).count() + free;
            return if loops == 0 { monomial(1, 0) } else { delta_pow(loops - 1) };
        };
        let [a, b, c, d] = *x;
        pairs.extend([(a, b), (c, d)]);
        let sa = go(tail, pairs, free, edges);
        pairs.truncate(pairs.len() - 2);
        pairs.extend([(a, d), (b, c)]);
        let sb = go(tail, pairs, free, edges);
        pairs.truncate(pairs.len() - 2);
        let mut out = mul(&sa, &monomial(1, 1));
        for (e, c) in mul(&sb, &monomial(1, -1)) {
            add(&mut out, e, c);
        }
        out
    }
    go(&pd.crossings, &mut Vec::new(), pd.free_loops, pd.next.len())
}

/// `(-A^3)^{-w} <D>`.
pub fn skein_jones(pd: &Pd) -> Poly {
    let w = pd.writhe();
    let sign = if w % 2 == 0 { 1 } else { -1 };
    mul(&skein_bracket(pd), &monomial(sign, -3 * w as i32))
}

/// The right-handed trefoil with its three positive crossings.
pub fn standard_trefoil() -> Pd {
    Pd { crossings: vec![[0, 4, 1, 3], [2, 0, 3, 5], [4, 2, 5, 1]], free_loops: 0, next: vec![1, 2, 3, 4, 5, 0] }
}

/// Every cell subset of the n×n torus with 0 or 2 cells on each column, row
/// and diagonal, as sorted `(col, row)` lists.
pub fn brute_force(n: u32) -> Vec<Vec<(u32, u32)>> {
    let cells: Vec<(u32, u32)> = (0..n).flat_map(|c| (0..n).map(move |r| (c, r))).collect();
    let mut out = Vec::new();
    for mask in 0u64..(1 << (n * n)) {
        let chosen: Vec<(u32, u32)> = cells.iter().enumerate().filter(|(k, _)| mask >> k & 1 == 1).map(|(_, &c)| c).collect();
        let ok = (0..n).all(|line| {
            let count = |f: &dyn Fn(&(u32, u32)) -> bool| chosen.iter().filter(|c| f(c)).count();
            [count(&|c| c.0 == line), count(&|c| c.1 == line), count(&|c| (c.0 + c.1) % n == line)]
                .iter()
                .all(|&k| k == 0 || k == 2)
        });
        if ok {
            out.push(chosen);
        }
    }
    out.sort();
    out
}

pub fn cells_of(d: &CombinatorialTgd) -> Vec<(u32, u32)> {
    d.cells().iter().map(|c| (c.col, c.row)).collect()
}

/// Every valid diagram of grid number `n`, without symmetry reduction.
pub fn all_diagrams(n: u32) -> Vec<CombinatorialTgd> {
    enumerate(&EnumerationOptions::new(n)).unwrap().diagrams
}

/// Grid of two permutations that never agree, so every column and row holds
/// two points.
pub fn random_grid<R: Rng>(rng: &mut R, n: u32) -> GridDiagram {
    let mut xs: Vec<u32> = (0..n).collect();
    xs.shuffle(rng);
    let mut os = xs.clone();
    loop {
        os.shuffle(rng);
        if xs.iter().zip(&os).all(|(a, b)| a != b) {
            break;
        }
    }
    let pts = (0..n).flat_map(|i| [(i, xs[i as usize]), (i, os[i as usize])]);
    GridDiagram::new(n, pts, ColorPair::AlphaBeta).unwrap()
}

pub fn trefoil() -> GridDiagram {
    GridDiagram::new(
        5,
        [(0, 0), (0, 2), (1, 1), (1, 3), (2, 2), (2, 4), (3, 0), (3, 3), (4, 1), (4, 4)],
        ColorPair::AlphaBeta,
    )
    .unwrap()
}

pub fn hopf() -> GridDiagram {
    GridDiagram::new(4, [(0, 1), (0, 3), (1, 0), (1, 2), (2, 1), (2, 3), (3, 0), (3, 2)], ColorPair::AlphaBeta)
        .unwrap()
}

/// Grids used by the bracket comparisons: all grids of diagrams up to n = 4,
/// canonical diagrams at n = 5, the named families, named links, and seeded
/// random grids with their translates.
pub fn corpus() -> Vec<GridDiagram> {
    use rand::SeedableRng;
    let mut out = Vec::new();
    for n in 2..=4 {
        for d in all_diagrams(n) {
            out.extend(d.three_grids());
        }
    }
    let opts = EnumerationOptions::new(5).symmetry(SymmetryGroup::TranslationsRotation);
    for d in enumerate(&opts).unwrap().diagrams {
        out.extend(d.three_grids());
    }
    for n in 2..=7 {
        out.extend(constructions::staircase(n).unwrap().three_grids());
    }
    out.push(trefoil());
    out.push(hopf());
    let mut rng = rand_chacha::ChaCha8Rng::seed_from_u64(0x7431);
    for _ in 0..150 {
        let n = rng.gen_range(2..=7);
        let g = random_grid(&mut rng, n);
        let (a, b) = (rng.gen_range(0..n as i64), rng.gen_range(0..n as i64));
        out.push(g.cyclic_permute(a, b));
        out.push(g);
    }
    out
}
