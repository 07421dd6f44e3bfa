//! Rank demonstration that the order of a (2r+1)-point scheme is at most 2r.
//!
//! If a scheme had order p > 2r, its stencil coefficients would satisfy the
//! homogeneous moment conditions `M_k = 0` for every
//! `k in {0, ..., 2r+1} \ {1}`. Those are 2r+1 equations in 2r+1 unknowns
//! whose matrix is exactly the gapped Vandermonde over the nodes `-r..=r`;
//! its determinant is nonzero, so only the zero stencil qualifies — which
//! contradicts `M_1 = a(v)` for generic wave speeds. Appending the `M_1 = 1`
//! row therefore produces a certified inconsistent system.

use num_bigint::BigInt;
use num_traits::{One, Zero};

use crate::error::{Error, Result};
use crate::linalg::{
    det_gapped_vandermonde, det_oracle, gapped_vandermonde_matrix, solve_exact, RationalMatrix,
    SolveOutcome,
};
use crate::order::stencil::MAX_STENCIL_RADIUS;
use crate::rational::Rational;

#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub enum BarrierConclusion {
    /// The homogeneous moment system forces the zero stencil.
    OnlyTrivialSolution,
    /// Additionally, `M_1 = 1` makes the system inconsistent: no stencil of
    /// order above 2r can approximate the advection term at all.
    InconsistentWithAdvection,
}

/// Exact certificate produced by [`barrier_demonstration`].
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct BarrierCertificate {
    pub r: usize,
    /// Rank of the full moment system `M_k = delta_{k,1}`, `k = 0..=2r+1`.
    pub system_rank: usize,
    /// Rank of its augmented matrix; inconsistency means it exceeds
    /// `system_rank` by one.
    pub augmented_rank: usize,
    /// Determinant of the homogeneous (k != 1) moment matrix.
    pub homogeneous_det: Rational,
    /// The same determinant by the closed form, as a cross-check.
    pub closed_form_det: Rational,
    pub conclusion: BarrierConclusion,
}

/// Builds and certifies the moment systems over the nodes `-r..=r`.
pub fn barrier_demonstration(r: usize) -> Result<BarrierCertificate> {
    if r == 0 || r > MAX_STENCIL_RADIUS {
        return Err(Error::Domain(format!(
            "radius must lie in 1..={MAX_STENCIL_RADIUS}, got {r}"
        )));
    }
    let n = 2 * r + 1;
    let nodes: Vec<Rational> = (-(r as i64)..=r as i64)
        .map(|l| Rational::from_integer(BigInt::from(l)))
        .collect();

    // Homogeneous part: moments k in {0} ∪ {2..=2r+1}; rows in that order
    // this is literally the gapped Vandermonde matrix over the nodes.
    let exponents: Vec<usize> = std::iter::once(0).chain(2..=n).collect();
    let homogeneous = RationalMatrix::from_fn(n, n, |row, j| {
        let k = exponents[row];
        Rational::from_integer(BigInt::from(j as i64 - r as i64).pow(k as u32))
    });
    let homogeneous_det = det_oracle(&homogeneous)?;
    debug_assert_eq!(homogeneous, gapped_vandermonde_matrix(&nodes)?);
    let closed_form_det = det_gapped_vandermonde(&nodes)?;

    // Full system: moments k = 0..=2r+1 with right-hand side delta_{k,1}.
    let full = RationalMatrix::from_fn(n + 1, n, |k, j| {
        Rational::from_integer(BigInt::from(j as i64 - r as i64).pow(k as u32))
    });
    let rhs: Vec<Rational> = (0..n + 1)
        .map(|k| if k == 1 { Rational::one() } else { Rational::zero() })
        .collect();

    let (system_rank, augmented_rank) = match solve_exact(&full, &rhs)? {
        SolveOutcome::Inconsistent {
            rank,
            augmented_rank,
        } => (rank, augmented_rank),
        SolveOutcome::Unique(_) => (n, n),
        SolveOutcome::Underdetermined { rank } => (rank, rank),
    };

    let conclusion = if !homogeneous_det.is_zero() && augmented_rank > system_rank {
        BarrierConclusion::InconsistentWithAdvection
    } else {
        BarrierConclusion::OnlyTrivialSolution
    };

    Ok(BarrierCertificate {
        r,
        system_rank,
        augmented_rank,
        homogeneous_det,
        closed_form_det,
        conclusion,
    })
}
