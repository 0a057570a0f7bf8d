//! Error types shared across the crate.

use thiserror::Error;

#[derive(Debug, Error, Clone, PartialEq, Eq)]
pub enum ExactError {
    #[error("division by zero")]
    DivisionByZero,
    #[error("cannot parse {0:?}")]
    Parse(String),
}

#[derive(Debug, Error, Clone, PartialEq, Eq)]
pub enum MatrixError {
    #[error("unknown gate {0:?}")]
    UnknownGate(String),
    #[error("dimension mismatch: {0} vs {1}")]
    DimMismatch(usize, usize),
    #[error("generator is not unitary")]
    NotUnitary,
}

#[derive(Debug, Error, Clone, PartialEq, Eq)]
pub enum TableError {
    #[error("group closure exceeded cap of {0} elements")]
    CapExceeded(usize),
    #[error("subgroup is not normal")]
    NotNormal,
    #[error("not a subgroup")]
    NotSubgroup,
    #[error("dimension mismatch: {0} vs {1}")]
    DimMismatch(usize, usize),
    #[error("generator is not unitary")]
    NotUnitary,
    #[error("group too large for this operation ({0} elements)")]
    TooLarge(usize),
}

#[derive(Debug, Error, Clone, PartialEq, Eq)]
pub enum PauliError {
    #[error("matrix is not a Pauli operator")]
    NotPauli,
    #[error("dimension too large (n = {0})")]
    DimensionTooLarge(usize),
    #[error("matrix dimension {0} is not a power of two")]
    NotPowerOfTwo(usize),
    #[error("conjugate of a Pauli left the Pauli group; not a Clifford operator")]
    NotClifford,
    #[error("degree mismatch: {0} vs {1}")]
    DegreeMismatch(usize, usize),
    #[error("cannot parse {0:?}")]
    Parse(String),
}

#[derive(Debug, Error, Clone, PartialEq, Eq)]
pub enum CoxeterError {
    #[error("unsupported type {0:?}")]
    UnsupportedType(String),
    #[error("root closure did not terminate within cap {0} (non-crystallographic input?)")]
    NonTerminating(usize),
    #[error("simple roots are not crystallographic")]
    NotCrystallographic,
    #[error("weight-lattice matrix is not integral")]
    NonIntegralResult,
}

#[derive(Debug, Error, Clone, PartialEq, Eq)]
pub enum ImprimitiveError {
    #[error("invalid spec: p = {p} does not divide m = {m}")]
    InvalidSpec { m: u64, p: u64 },
    #[error("m = {0} needs roots of unity outside Q(zeta_8)")]
    UnsupportedRootOfUnity(u64),
}

#[derive(Debug, Error, Clone, PartialEq, Eq)]
pub enum GeomError {
    #[error("too many points for exhaustive hyperplane scan ({0})")]
    TooManyPoints(usize),
    #[error("hyperplane is not a grid")]
    NotAGrid,
    #[error("points are not pairwise non-commuting")]
    NotIndependent,
}

#[derive(Debug, Error, Clone, PartialEq, Eq)]
pub enum AutError {
    #[error("group too large for automorphism counting ({0} elements)")]
    TooLarge(usize),
    #[error("|Aut| not divisible by |Inn|; internal consistency failure")]
    NonIntegralOut,
}
