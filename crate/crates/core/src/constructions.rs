//! Named diagram families and the Legendrian-plus-pushoff construction.

use alloc::format;
use alloc::vec::Vec;

use crate::error::Error;
use crate::tgd::{Cell, CombinatorialTgd, GeometricTgd, GridDiagram, Rational};
use crate::Result;

/// The full 2×2 grid, the only diagram of grid number 2.
pub fn example_n2() -> CombinatorialTgd {
    CombinatorialTgd::from_valid(2, Vec::from([(0, 0), (0, 1), (1, 0), (1, 1)].map(Cell::from)))
}

/// Every cell off the main diagonal of the 3×3 grid.
pub fn example_n3() -> CombinatorialTgd {
    let cells = (0..3u32).flat_map(|i| (0..3u32).filter(move |&j| j != i).map(move |j| Cell::new(i, j)));
    CombinatorialTgd::from_valid(3, cells.collect())
}

/// Cells `(i, i)` and `(i, i + 1 mod n)`.
pub fn staircase(n: u32) -> Result<CombinatorialTgd> {
    if n < 2 {
        return Err(Error::InvalidParameter(format!("staircase needs n >= 2, got {n}")));
    }
    CombinatorialTgd::new(n, (0..n).flat_map(|i| [(i, i), (i, (i + 1) % n)]))
}

fn odd_k(k: u32) -> Result<()> {
    if k == 0 || k.is_multiple_of(2) {
        return Err(Error::InvalidParameter(format!("k must be odd and positive, got {k}")));
    }
    Ok(())
}

/// `k` disjoint squares on a grid of size `2k`: square `t` has corners
/// `(t, t)` and `(t + k, t + k)`. Each square is its own Γ-component, a copy of
/// K₄, so the surface is `k` disjoint projective planes.
pub fn squares_antidiagonal(k: u32) -> Result<CombinatorialTgd> {
    odd_k(k)?;
    CombinatorialTgd::new(
        2 * k,
        (0..k).flat_map(|t| [(t, t), (t, t + k), (t + k, t), (t + k, t + k)]),
    )
}

/// `k` adjacent 2×2 blocks along the main diagonal of a grid of size `2k`.
/// Neighbouring blocks share diagonal lines, so Γ is connected and the
/// surface is `#^k RP²`.
pub fn squares_chain(k: u32) -> Result<CombinatorialTgd> {
    odd_k(k)?;
    CombinatorialTgd::new(
        2 * k,
        (0..k).flat_map(|t| {
            let (a, b) = (2 * t, 2 * t + 1);
            [(a, a), (a, b), (b, a), (b, b)]
        }),
    )
}

/// Adds a pushoff of the link of `g`, shifted northwest, with every point
/// joined to its copy by a diagonal.
///
/// Column `i` sits at `x = (4i+1)/4n + iε` and row `j` at
/// `y = (4j+1)/4n + jε²` with `ε = 1/(64n³)`, which makes every `x + y`
/// distinct. The copy of `(x, y)` is `(x − δ, y + δ)` with `δ = ε³`.
pub fn pushoff(g: &GridDiagram) -> GeometricTgd {
    let n = g.n() as i128;
    let eps = Rational::new(1, 64 * n * n * n);
    let eps2 = eps * eps;
    let delta = eps2 * eps;
    let mut points = Vec::with_capacity(2 * g.points().len());
    for c in g.points() {
        let (i, j) = (c.col as i128, c.row as i128);
        let x = Rational::new(4 * i + 1, 4 * n) + eps * i;
        let y = Rational::new(4 * j + 1, 4 * n) + eps2 * j;
        points.push((x, y));
        points.push((x - delta, y + delta));
    }
    GeometricTgd::new(points).expect("pushoff keeps every line paired")
}
