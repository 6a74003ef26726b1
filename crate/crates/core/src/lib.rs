//! Combinatorial layer of triple grid diagrams.
//!
//! A triple grid diagram places points on an `n × n` toroidal grid made of
//! vertical (α, red), horizontal (β, blue) and slope −1 diagonal (γ, green)
//! lines so that every line carries zero or two points. Each such diagram
//! determines three ordinary grid diagrams, hence three Legendrian links, and
//! a ribbon surface whose capped-off topology is read off from a properly
//! 3-edge-colored cubic graph.
//!
//! The crate is `no_std` (it needs `alloc`). File formats, rendering and the
//! command-line tool live in the `trigrid` crate.
//!
//! ```
//! use trigrid_core::{constructions, surface};
//!
//! let d = constructions::example_n3();
//! let report = surface::classify(&d);
//! assert_eq!(report.total.euler, 0);
//! assert!(report.total.orientable);
//! ```
#![cfg_attr(not(test), no_std)]

extern crate alloc;

pub mod constructions;
pub mod enumerate;
pub mod error;
pub mod legendrian;
pub mod link;
pub mod poly;
pub mod surface;
pub mod tgd;

pub use error::{Direction, Error};
pub use link::PlanarLinkDiagram;
pub use poly::LaurentPolynomial;
pub use tgd::{Cell, ColorPair, CombinatorialTgd, GeometricTgd, GridDiagram, Rational, SymmetryGroup};

pub type Result<T, E = Error> = core::result::Result<T, E>;
