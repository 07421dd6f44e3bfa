//! Higher derivatives of compositions `f ∘ u` (Faà di Bruno's formula).
//!
//! For `f: R^n -> R` and `u: R -> R^n`, the s-th derivative of `x -> f(u(x))`
//! is the partition sum
//!
//! ```text
//! d^s f(u(x)) / dx^s = sum_{m in P_s} [s; m] f^(|m|)(u(x)) D^m u(x),
//! ```
//!
//! where `P_s` are the multi-indices with `sum_j j*m_j = s`, `[s; m]` the
//! multinomial `s!/(m_1!...m_s!)`, and `D^m u` the matrix repeating the
//! scaled derivative columns `u^(j)/j!` exactly `m_j` times.

pub mod jet;
pub mod partition;
pub mod poly;
pub mod tensor;

use std::collections::BTreeMap;

use num_bigint::BigInt;

pub use jet::{build_dm, AnalyticCurve, CurveJet, ExpOfPoly, FiniteDifferenceJet, JetFunction,
              PolyCurve};
pub use partition::{enumerate_partitions, multinomial, Partition, MAX_PARTITION_WEIGHT};
pub use poly::{MultiPoly, UniPoly};
pub use tensor::{ColMatrix, Scalar, Tensor, MAX_TENSOR_DIM, MAX_TENSOR_ORDER};

use crate::error::{Error, Result};

/// Exact s-th derivative of `x -> f(u(x))` via the partition sum.
pub fn fdb_derivative<T: Scalar>(
    f: &dyn JetFunction<T>,
    u: &dyn CurveJet<T>,
    x: &T,
    s: usize,
) -> Result<T> {
    if f.dim() != u.dim() {
        return Err(Error::Domain(format!(
            "function over R^{} composed with a curve into R^{}",
            f.dim(),
            u.dim()
        )));
    }
    if s > MAX_TENSOR_ORDER {
        return Err(Error::Domain(format!(
            "derivative order must not exceed {MAX_TENSOR_ORDER}, got {s}"
        )));
    }
    let point = u.eval(x)?;
    let mut acc = T::zero();
    for m in enumerate_partitions(s)? {
        let dm = build_dm(u, x, &m)?;
        let tensor = f.derivative_tensor(&point, m.order())?;
        let contracted = tensor.contract(&dm)?;
        acc = acc + T::from_bigint(&multinomial(&m)) * contracted;
    }
    Ok(acc)
}

/// Largest weight accepted by [`recursion_coefficients`].
pub const MAX_RECURSION_WEIGHT: usize = 12;

/// Coefficients of the partition sum at weight `s + 1`, built purely by the
/// successor recursion from the single weight-1 coefficient:
///
/// - `S_0` bumps `m_1` and carries the coefficient unchanged;
/// - `S_k` (for `m_k > 0`) moves one part from size `k` to size `k + 1` and
///   multiplies the coefficient by `m_k * (k + 1)`.
///
/// The result equals the multinomial map `m -> [s+1; m]`, which is exactly
/// what makes the partition-sum representation close under differentiation.
pub fn recursion_coefficients(s: usize) -> Result<BTreeMap<Partition, BigInt>> {
    if s == 0 || s > MAX_RECURSION_WEIGHT {
        return Err(Error::Domain(format!(
            "recursion weight must lie in 1..={MAX_RECURSION_WEIGHT}, got {s}"
        )));
    }
    let mut coeffs = BTreeMap::new();
    coeffs.insert(Partition::new(vec![1])?, BigInt::from(1));
    for _ in 1..=s {
        coeffs = successor_step(&coeffs)?;
    }
    Ok(coeffs)
}

fn successor_step(coeffs: &BTreeMap<Partition, BigInt>) -> Result<BTreeMap<Partition, BigInt>> {
    let mut next: BTreeMap<Partition, BigInt> = BTreeMap::new();
    for (m, a) in coeffs {
        let s = m.weight();

        let mut bumped = m.counts().to_vec();
        bumped.push(0);
        bumped[0] += 1;
        *next.entry(Partition::new(bumped)?).or_default() += a;

        for k in 1..=s {
            let mk = m.count(k);
            if mk == 0 {
                continue;
            }
            let mut moved = m.counts().to_vec();
            moved.push(0);
            moved[k - 1] -= 1;
            moved[k] += 1;
            *next.entry(Partition::new(moved)?).or_default() += a * BigInt::from(mk * (k + 1));
        }
    }
    Ok(next)
}
