//! Exact linear solving with rank/inconsistency certificates.
//!
//! Inconsistency is an expected outcome for the over-determined moment
//! systems built elsewhere in the crate, so it is returned as data rather
//! than as an error.

use num_traits::Zero;

use super::RationalMatrix;
use crate::error::{Error, Result};
use crate::rational::Rational;

#[derive(Debug, Clone, PartialEq, Eq)]
pub enum SolveOutcome {
    /// Consistent system with full column rank.
    Unique(Vec<Rational>),
    /// Consistent but rank-deficient: infinitely many solutions.
    Underdetermined { rank: usize },
    /// `rank([M | b]) > rank(M)`: no solution exists.
    Inconsistent { rank: usize, augmented_rank: usize },
}

/// Solves `M x = b` exactly by Gauss-Jordan elimination over the rationals.
pub fn solve_exact(m: &RationalMatrix, b: &[Rational]) -> Result<SolveOutcome> {
    if b.len() != m.rows() {
        return Err(Error::Domain(format!(
            "right-hand side has length {}, matrix has {} rows",
            b.len(),
            m.rows()
        )));
    }
    let rows = m.rows();
    let cols = m.cols();

    // Augmented matrix [M | b].
    let mut a: Vec<Vec<Rational>> = (0..rows)
        .map(|i| {
            let mut row: Vec<Rational> = m.row(i).to_vec();
            row.push(b[i].clone());
            row
        })
        .collect();

    let mut pivot_cols = Vec::new();
    let mut pivot_row = 0;
    for col in 0..=cols {
        if pivot_row == rows {
            break;
        }
        let Some(p) = (pivot_row..rows).find(|&i| !a[i][col].is_zero()) else {
            continue;
        };
        a.swap(pivot_row, p);
        let inv = a[pivot_row][col].recip();
        for x in a[pivot_row].iter_mut() {
            *x *= &inv;
        }
        let pivot = a[pivot_row].clone();
        for (i, row) in a.iter_mut().enumerate() {
            if i != pivot_row && !row[col].is_zero() {
                let factor = row[col].clone();
                for (x, p) in row.iter_mut().zip(&pivot) {
                    *x -= &factor * p;
                }
            }
        }
        pivot_cols.push(col);
        pivot_row += 1;
    }

    let augmented_rank = pivot_cols.len();
    let rank = pivot_cols.iter().filter(|&&c| c < cols).count();
    if augmented_rank > rank {
        return Ok(SolveOutcome::Inconsistent {
            rank,
            augmented_rank,
        });
    }
    if rank < cols {
        return Ok(SolveOutcome::Underdetermined { rank });
    }
    let mut x = vec![Rational::zero(); cols];
    for (row, &col) in pivot_cols.iter().enumerate() {
        x[col] = a[row][cols].clone();
    }
    Ok(SolveOutcome::Unique(x))
}

/// Rank of a rational matrix by exact elimination.
pub fn rank(m: &RationalMatrix) -> usize {
    let zeros = vec![Rational::zero(); m.rows()];
    match solve_exact(m, &zeros) {
        Ok(SolveOutcome::Unique(_)) => m.cols(),
        Ok(SolveOutcome::Underdetermined { rank }) => rank,
        Ok(SolveOutcome::Inconsistent { rank, .. }) => rank,
        Err(_) => unreachable!("zero right-hand side always matches"),
    }
}
