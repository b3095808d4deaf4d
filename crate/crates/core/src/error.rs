use std::fmt;
use thiserror::Error;

/// A malformed table, as opposed to a well-formed table that breaks a law.
#[derive(Debug, Clone, PartialEq, Eq, Error)]
pub enum StructureError {
    #[error("{field}: structure must have at least one element")]
    Empty { field: String },
    #[error("{field}: row {row} has length {len}, expected {expected}")]
    Ragged {
        field: String,
        row: usize,
        len: usize,
        expected: usize,
    },
    #[error("{field}: has length {len}, expected {expected}")]
    Length {
        field: String,
        len: usize,
        expected: usize,
    },
    #[error("{field}: entry {value} at position {position} is out of range 0..{bound}")]
    OutOfRange {
        field: String,
        position: usize,
        value: usize,
        bound: usize,
    },
    #[error("{0}")]
    Invalid(String),
}

impl StructureError {
    pub(crate) fn check_len(field: &str, len: usize, expected: usize) -> Result<(), Self> {
        if len != expected {
            return Err(StructureError::Length {
                field: field.to_string(),
                len,
                expected,
            });
        }
        Ok(())
    }

    pub(crate) fn check_range(field: &str, values: &[usize], bound: usize) -> Result<(), Self> {
        match values.iter().position(|&v| v >= bound) {
            Some(position) => Err(StructureError::OutOfRange {
                field: field.to_string(),
                position,
                value: values[position],
                bound,
            }),
            None => Ok(()),
        }
    }

    /// Flattens a square-ish table, rejecting ragged rows.
    pub(crate) fn flatten(
        field: &str,
        rows: &[Vec<usize>],
        nrows: usize,
        ncols: usize,
        bound: usize,
    ) -> Result<Vec<usize>, Self> {
        Self::check_len(field, rows.len(), nrows)?;
        let mut flat = Vec::with_capacity(nrows * ncols);
        for (row, r) in rows.iter().enumerate() {
            if r.len() != ncols {
                return Err(StructureError::Ragged {
                    field: field.to_string(),
                    row,
                    len: r.len(),
                    expected: ncols,
                });
            }
            flat.extend_from_slice(r);
        }
        Self::check_range(field, &flat, bound)?;
        Ok(flat)
    }
}

/// A named law together with a concrete tuple on which it fails.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct Violation {
    pub law: String,
    pub witness: Vec<usize>,
}

impl Violation {
    pub fn new(law: impl Into<String>, witness: Vec<usize>) -> Self {
        Violation {
            law: law.into(),
            witness,
        }
    }
}

impl fmt::Display for Violation {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "{} fails at {:?}", self.law, self.witness)
    }
}

impl std::error::Error for Violation {}

#[derive(Debug, Clone, PartialEq, Error)]
pub enum Error {
    #[error(transparent)]
    Structure(#[from] StructureError),
    #[error("{structure} violates {axioms:?}")]
    AxiomFailure {
        structure: String,
        axioms: Vec<String>,
    },
    #[error(transparent)]
    Violation(#[from] Violation),
    #[error("the monoid has no zero element")]
    NoZero,
    #[error("{a} and {b} are not right-compatible")]
    NotCompatible { a: usize, b: usize },
    #[error("{a} and {b} have no least upper bound")]
    NoJoin { a: usize, b: usize },
    #[error("element {element} lies below no total element")]
    NotFactorizable { element: usize },
    #[error("no witness exists for {law} at {args:?}")]
    NoWitness { law: String, args: Vec<usize> },
    #[error("precondition violated: {0}")]
    Precondition(String),
    #[error("construction depends on an arbitrary choice: {0}")]
    ChoiceDependence(String),
    #[error("Boolean supported actions require a non-empty carrier")]
    EmptyCarrier,
    #[error("search exceeded the cap of {cap} candidate evaluations")]
    SearchCapExceeded { cap: u64 },
    #[error("element {element} is not a right-compatible join of partial units")]
    NotEtale { element: usize },
    #[error("parse error at line {line}, column {column}: {message}")]
    Parse {
        line: usize,
        column: usize,
        message: String,
    },
    #[error("unknown generator `{0}`")]
    UnknownGenerator(String),
    #[error("generator {name} would produce {size} elements, above the cap of {cap}")]
    SizeCap { name: String, size: usize, cap: usize },
}

pub type Result<T, E = Error> = std::result::Result<T, E>;
