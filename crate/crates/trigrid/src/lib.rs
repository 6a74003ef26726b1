//! File formats, SVG rendering, parallel enumeration and the command line
//! for triple grid diagrams. The mathematics lives in `trigrid-core`.

pub mod cli;
pub mod document;
pub mod parallel;
pub mod report;
pub mod svg;

pub use document::{Diagram, DiagramDocument, DocumentError};
