use alloc::string::String;
use core::fmt;

use crate::tgd::{Cell, Rational};

/// Line family of the torus grid.
#[derive(Debug, Clone, Copy, PartialEq, Eq, PartialOrd, Ord, Hash)]
pub enum Direction {
    Column,
    Row,
    Diagonal,
}

impl fmt::Display for Direction {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.write_str(match self {
            Direction::Column => "column",
            Direction::Row => "row",
            Direction::Diagonal => "diagonal",
        })
    }
}

#[derive(Debug, Clone, PartialEq, Eq, thiserror::Error)]
pub enum Error {
    #[error("grid number must be positive")]
    ZeroGridNumber,
    #[error("cell ({}, {}) is occupied twice", .0.col, .0.row)]
    DuplicateCell(Cell),
    #[error("{direction} {index} holds {count} points (expected 0 or 2)")]
    LineCountViolation {
        direction: Direction,
        index: u32,
        count: usize,
    },
    #[error("point ({}, {}) appears twice", .0.0, .0.1)]
    DuplicatePoint((Rational, Rational)),
    #[error("{direction} line {value} holds {count} points (expected 0 or 2)")]
    UnpairedPoint {
        direction: Direction,
        value: Rational,
        count: usize,
    },
    #[error("diagram has {crossings} crossings, above the bound of {bound}")]
    TooManyCrossings { crossings: usize, bound: usize },
    #[error("invalid parameter: {0}")]
    InvalidParameter(String),
    #[error("invalid color-pair claim: {0}")]
    LabelError(String),
    #[error("search budget exhausted after {nodes} nodes")]
    BudgetExceeded { nodes: u64 },
}
