//! Exact rational linear algebra.
//!
//! Dense matrices over [`Rational`], a fraction-free determinant oracle,
//! closed-form evaluation of two Vandermonde-type determinant identities,
//! and an exact solver that reports rank/inconsistency certificates as data.

mod det;
mod solve;

pub use det::{
    det_gapped_vandermonde, det_oracle, det_power_vandermonde, gapped_vandermonde_matrix,
    power_vandermonde_matrix, verify_determinant_identities, LemmaVerification,
};
pub use solve::{rank, solve_exact, SolveOutcome};

use crate::error::{Error, Result};
use crate::rational::Rational;

/// Largest supported square size for the determinant oracle.
pub const MAX_DET_SIZE: usize = 12;

/// Dense row-major matrix of exact rationals.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct RationalMatrix {
    rows: usize,
    cols: usize,
    entries: Vec<Rational>,
}

impl RationalMatrix {
    pub fn new(rows: usize, cols: usize, entries: Vec<Rational>) -> Result<Self> {
        if entries.len() != rows * cols {
            return Err(Error::Domain(format!(
                "matrix entries have length {}, expected {}",
                entries.len(),
                rows * cols
            )));
        }
        Ok(Self {
            rows,
            cols,
            entries,
        })
    }

    pub fn from_fn(rows: usize, cols: usize, mut f: impl FnMut(usize, usize) -> Rational) -> Self {
        let mut entries = Vec::with_capacity(rows * cols);
        for i in 0..rows {
            for j in 0..cols {
                entries.push(f(i, j));
            }
        }
        Self {
            rows,
            cols,
            entries,
        }
    }

    pub fn from_rows(rows: Vec<Vec<Rational>>) -> Result<Self> {
        let n = rows.len();
        let m = rows.first().map_or(0, Vec::len);
        if rows.iter().any(|r| r.len() != m) {
            return Err(Error::Domain("ragged rows".into()));
        }
        Ok(Self {
            rows: n,
            cols: m,
            entries: rows.into_iter().flatten().collect(),
        })
    }

    pub fn identity(n: usize) -> Self {
        use num_traits::{One, Zero};
        Self::from_fn(n, n, |i, j| {
            if i == j {
                Rational::one()
            } else {
                Rational::zero()
            }
        })
    }

    pub fn rows(&self) -> usize {
        self.rows
    }

    pub fn cols(&self) -> usize {
        self.cols
    }

    pub fn is_square(&self) -> bool {
        self.rows == self.cols
    }

    pub fn get(&self, i: usize, j: usize) -> &Rational {
        &self.entries[i * self.cols + j]
    }

    pub fn set(&mut self, i: usize, j: usize, value: Rational) {
        self.entries[i * self.cols + j] = value;
    }

    pub fn row(&self, i: usize) -> &[Rational] {
        &self.entries[i * self.cols..(i + 1) * self.cols]
    }
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::rational::rat_int;

    #[test]
    fn rejects_wrong_entry_count() {
        assert!(RationalMatrix::new(2, 2, vec![rat_int(1); 3]).is_err());
    }

    #[test]
    fn identity_diagonal() {
        let m = RationalMatrix::identity(3);
        assert_eq!(m.get(1, 1), &rat_int(1));
        assert_eq!(m.get(0, 2), &rat_int(0));
    }
}
