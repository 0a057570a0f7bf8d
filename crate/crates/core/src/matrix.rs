//! Exact square matrices over Q(ζ₈) and the standard gate set.

use std::fmt;
use std::str::FromStr;

use crate::error::MatrixError;
use crate::exact::CycEight;

/// A dim×dim matrix with entries in Q(ζ₈), stored row-major. Equality is
/// entry-wise exact equality.
#[derive(Clone, PartialEq, Eq, Hash, PartialOrd, Ord)]
pub struct ExactMatrix {
    dim: usize,
    entries: Vec<CycEight>,
}

impl ExactMatrix {
    pub fn from_entries(dim: usize, entries: Vec<CycEight>) -> Self {
        assert_eq!(entries.len(), dim * dim, "entry count must be dim^2");
        ExactMatrix { dim, entries }
    }

    pub fn from_rows(rows: Vec<Vec<CycEight>>) -> Self {
        let dim = rows.len();
        let entries: Vec<CycEight> = rows.into_iter().flatten().collect();
        Self::from_entries(dim, entries)
    }

    pub fn identity(dim: usize) -> Self {
        let mut entries = vec![CycEight::zero(); dim * dim];
        for k in 0..dim {
            entries[k * dim + k] = CycEight::one();
        }
        ExactMatrix { dim, entries }
    }

    pub fn dim(&self) -> usize {
        self.dim
    }

    pub fn get(&self, row: usize, col: usize) -> &CycEight {
        &self.entries[row * self.dim + col]
    }

    pub fn set(&mut self, row: usize, col: usize, value: CycEight) {
        self.entries[row * self.dim + col] = value;
    }

    pub fn is_identity(&self) -> bool {
        self == &Self::identity(self.dim)
    }

    pub fn mul(&self, rhs: &Self) -> Self {
        assert_eq!(self.dim, rhs.dim, "dimension mismatch");
        let d = self.dim;
        let mut entries = Vec::with_capacity(d * d);
        for i in 0..d {
            for j in 0..d {
                let mut acc = CycEight::zero();
                for k in 0..d {
                    let a = &self.entries[i * d + k];
                    if a.is_zero() {
                        continue;
                    }
                    let b = &rhs.entries[k * d + j];
                    if b.is_zero() {
                        continue;
                    }
                    acc = acc.add(&a.mul(b));
                }
                entries.push(acc);
            }
        }
        ExactMatrix { dim: d, entries }
    }

    /// Hermitian adjoint: transpose followed by complex conjugation.
    pub fn adjoint(&self) -> Self {
        let d = self.dim;
        let mut entries = Vec::with_capacity(d * d);
        for i in 0..d {
            for j in 0..d {
                entries.push(self.entries[j * d + i].conj());
            }
        }
        ExactMatrix { dim: d, entries }
    }

    pub fn scale(&self, s: &CycEight) -> Self {
        ExactMatrix {
            dim: self.dim,
            entries: self.entries.iter().map(|e| e.mul(s)).collect(),
        }
    }

    pub fn neg(&self) -> Self {
        ExactMatrix {
            dim: self.dim,
            entries: self.entries.iter().map(|e| e.neg()).collect(),
        }
    }

    /// Kronecker product: block (i,j) of the result is `self[i][j] · rhs`.
    pub fn tensor(&self, rhs: &Self) -> Self {
        let (da, db) = (self.dim, rhs.dim);
        let d = da * db;
        let mut entries = vec![CycEight::zero(); d * d];
        for i in 0..da {
            for j in 0..da {
                let a = self.get(i, j);
                if a.is_zero() {
                    continue;
                }
                for k in 0..db {
                    for l in 0..db {
                        let b = rhs.get(k, l);
                        if !b.is_zero() {
                            entries[(i * db + k) * d + (j * db + l)] = a.mul(b);
                        }
                    }
                }
            }
        }
        ExactMatrix { dim: d, entries }
    }

    /// True iff `self · self† = I` exactly.
    pub fn is_unitary(&self) -> bool {
        self.mul(&self.adjoint()).is_identity()
    }

    pub fn pow(&self, mut e: u64) -> Self {
        let mut base = self.clone();
        let mut acc = Self::identity(self.dim);
        while e > 0 {
            if e & 1 == 1 {
                acc = acc.mul(&base);
            }
            e >>= 1;
            if e > 0 {
                base = base.mul(&base);
            }
        }
        acc
    }

    /// `Some(λ)` when the matrix is λ·I.
    pub fn scalar_value(&self) -> Option<&CycEight> {
        let d = self.dim;
        let lambda = &self.entries[0];
        for i in 0..d {
            for j in 0..d {
                let e = &self.entries[i * d + j];
                if i == j {
                    if e != lambda {
                        return None;
                    }
                } else if !e.is_zero() {
                    return None;
                }
            }
        }
        Some(lambda)
    }

    /// Canonical representative of the scalar class of `self` under the
    /// group ⟨ζ⟩ of 8th-root phases: the lexicographically greatest of the
    /// eight phase multiples, compared row-major on coefficient vectors.
    pub fn projective_canonical(&self) -> Self {
        let mut best = self.clone();
        let mut current = self.clone();
        let zeta = CycEight::zeta_pow(1);
        for _ in 1..8 {
            current = current.scale(&zeta);
            if current > best {
                best = current.clone();
            }
        }
        best
    }
}

impl fmt::Display for ExactMatrix {
    /// `dim;entry;entry;...` with entries row-major in [`CycEight`] form.
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "{}", self.dim)?;
        for e in &self.entries {
            write!(f, ";{e}")?;
        }
        Ok(())
    }
}

impl fmt::Debug for ExactMatrix {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        writeln!(f, "ExactMatrix {}x{} [", self.dim, self.dim)?;
        for i in 0..self.dim {
            write!(f, "  ")?;
            for j in 0..self.dim {
                write!(f, "({})  ", self.get(i, j))?;
            }
            writeln!(f)?;
        }
        write!(f, "]")
    }
}

impl FromStr for ExactMatrix {
    type Err = crate::error::ExactError;

    fn from_str(s: &str) -> Result<Self, Self::Err> {
        let mut parts = s.split(';');
        let dim: usize = parts
            .next()
            .and_then(|p| p.trim().parse().ok())
            .ok_or_else(|| crate::error::ExactError::Parse(s.to_string()))?;
        let entries: Result<Vec<CycEight>, _> = parts.map(|p| p.parse()).collect();
        let entries = entries?;
        if entries.len() != dim * dim {
            return Err(crate::error::ExactError::Parse(s.to_string()));
        }
        Ok(ExactMatrix { dim, entries })
    }
}

/// The named gates of the construction: Pauli matrices, Hadamard, phase,
/// T = ζ·P·H, controlled-Z and the Bell basis-change matrix R.
#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub enum Gate {
    I,
    X,
    Y,
    Z,
    H,
    P,
    T,
    Cz,
    R,
}

impl FromStr for Gate {
    type Err = MatrixError;

    fn from_str(s: &str) -> Result<Self, Self::Err> {
        match s.to_ascii_uppercase().as_str() {
            "I" => Ok(Gate::I),
            "X" => Ok(Gate::X),
            "Y" => Ok(Gate::Y),
            "Z" => Ok(Gate::Z),
            "H" => Ok(Gate::H),
            "P" => Ok(Gate::P),
            "T" => Ok(Gate::T),
            "CZ" => Ok(Gate::Cz),
            "R" => Ok(Gate::R),
            other => Err(MatrixError::UnknownGate(other.to_string())),
        }
    }
}

pub fn gate(g: Gate) -> ExactMatrix {
    let zero = CycEight::zero;
    let one = CycEight::one;
    let m_one = || CycEight::from_int(-1);
    let i = CycEight::i;
    let s = CycEight::inv_sqrt2;
    let ms = || CycEight::inv_sqrt2().neg();
    match g {
        Gate::I => ExactMatrix::identity(2),
        Gate::X => ExactMatrix::from_rows(vec![vec![zero(), one()], vec![one(), zero()]]),
        Gate::Y => ExactMatrix::from_rows(vec![
            vec![zero(), i().neg()],
            vec![i(), zero()],
        ]),
        Gate::Z => ExactMatrix::from_rows(vec![vec![one(), zero()], vec![zero(), m_one()]]),
        Gate::H => ExactMatrix::from_rows(vec![vec![s(), s()], vec![s(), ms()]]),
        Gate::P => ExactMatrix::from_rows(vec![vec![one(), zero()], vec![zero(), i()]]),
        Gate::T => gate(Gate::P).mul(&gate(Gate::H)).scale(&CycEight::zeta_pow(1)),
        Gate::Cz => {
            let mut m = ExactMatrix::identity(4);
            m.set(3, 3, m_one());
            m
        }
        Gate::R => ExactMatrix::from_rows(vec![
            vec![s(), zero(), zero(), s()],
            vec![zero(), s(), ms(), zero()],
            vec![zero(), s(), s(), zero()],
            vec![ms(), zero(), zero(), s()],
        ]),
    }
}
