use std::fmt;

use thiserror::Error;

/// One of the three quandle axioms, numbered as in the usual presentation.
#[derive(Clone, Copy, Debug, PartialEq, Eq, serde::Serialize)]
#[serde(rename_all = "snake_case")]
pub enum Axiom {
    Idempotence,
    RightInvertibility,
    RightDistributivity,
}

impl Axiom {
    pub fn number(self) -> u8 {
        match self {
            Axiom::Idempotence => 1,
            Axiom::RightInvertibility => 2,
            Axiom::RightDistributivity => 3,
        }
    }
}

/// The first failing axiom of a candidate table together with witnesses.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct AxiomViolation {
    pub axiom: Axiom,
    pub witness: Vec<usize>,
}

impl fmt::Display for AxiomViolation {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        let w = &self.witness;
        match self.axiom {
            Axiom::Idempotence => write!(f, "axiom 1 fails at x={} (x ▷ x ≠ x)", w[0]),
            Axiom::RightInvertibility => write!(
                f,
                "axiom 2 fails at y={}: x={} and x={} have the same image",
                w[2], w[0], w[1]
            ),
            Axiom::RightDistributivity => write!(
                f,
                "axiom 3 fails at x={}, y={}, z={}",
                w[0], w[1], w[2]
            ),
        }
    }
}

#[derive(Debug, Error, Clone, PartialEq, Eq)]
pub enum PermError {
    #[error("image array {0:?} is not a bijection")]
    NotABijection(Vec<usize>),
    #[error("generator of degree {found} in a group of degree {expected}")]
    DegreeMismatch { expected: usize, found: usize },
    #[error("group closure exceeded {cap} elements")]
    GroupTooLarge { cap: usize },
}

#[derive(Debug, Error, Clone, PartialEq, Eq)]
pub enum QuandleError {
    #[error("a quandle needs at least one element")]
    Empty,
    #[error("row {row} has {len} entries, expected {expected}")]
    NotSquare { row: usize, len: usize, expected: usize },
    #[error("entry table[{x}][{y}] = {value} is out of range")]
    EntryOutOfRange { x: usize, y: usize, value: usize },
    #[error("{0}")]
    AxiomViolation(AxiomViolation),
    #[error("{t} is not a unit modulo {m}")]
    NotAUnit { t: i64, m: u64 },
    #[error("element {element} out of range for order {order}")]
    ElementOutOfRange { element: usize, order: usize },
    #[error("map is not an automorphism: {0}")]
    NotAutomorphism(String),
    #[error("subgroup element {0} is not fixed by the automorphism")]
    NotCentralized(usize),
    #[error(transparent)]
    Perm(#[from] PermError),
}

#[derive(Debug, Error, Clone, PartialEq, Eq)]
pub enum InnerError {
    #[error("affine spec (m={m}, t={t}) is not connected: gcd(1-t, m) ≠ 1")]
    NotConnected { m: u64, t: u64 },
    #[error("relation {0} does not hold")]
    RelationFailure(&'static str),
    #[error("permutation is not in the inner automorphism group")]
    NotInGroup,
    #[error(transparent)]
    Quandle(#[from] QuandleError),
    #[error(transparent)]
    Perm(#[from] PermError),
}

#[derive(Debug, Error, Clone, PartialEq)]
pub enum ReprError {
    #[error("bad parameters: {0}")]
    BadParameters(String),
    #[error("class functions belong to different groups")]
    GroupMismatch,
    #[error("action is not transitive (rank {rank} computed anyway)")]
    NotTransitive { rank: u64 },
    #[error("inner product {value} is not within {tol} of an integer")]
    NonIntegral { value: f64, tol: f64 },
    #[error(transparent)]
    Inner(#[from] InnerError),
}

#[derive(Debug, Error, Clone, PartialEq, Eq)]
pub enum GelfandError {
    #[error("quandle is not connected")]
    NotConnected,
    #[error("K is not a subgroup of G")]
    NotASubgroup,
    #[error(transparent)]
    Perm(#[from] PermError),
    #[error(transparent)]
    Inner(#[from] InnerError),
}

/// Malformed table text; positions are 1-based.
#[derive(Debug, Error, Clone, PartialEq, Eq)]
#[error("line {line}, column {column}: {message}")]
pub struct ParseError {
    pub line: usize,
    pub column: usize,
    pub message: String,
}

#[derive(Debug, Error, Clone, PartialEq, Eq)]
pub enum TableError {
    #[error(transparent)]
    Parse(#[from] ParseError),
    #[error(transparent)]
    Quandle(#[from] QuandleError),
}
