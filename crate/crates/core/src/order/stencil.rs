//! Exact stencils and their moments.

use num_bigint::BigInt;
use num_traits::{One, ToPrimitive, Zero};

use crate::error::{Error, Result};
use crate::linalg::{solve_exact, RationalMatrix, SolveOutcome};
use crate::rational::Rational;

/// Largest supported stencil radius.
pub const MAX_STENCIL_RADIUS: usize = 8;

/// Vector of 2r+1 rational coefficients indexed `l = -r..r`, playing the role
/// of the derivative coefficients `dH/du_l` at a constant state, together
/// with the wave speed they target (`a(v)`, 1 by default).
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct Stencil {
    r: usize,
    c: Vec<Rational>,
    wave_speed: Rational,
}

impl Stencil {
    pub fn new(r: usize, c: Vec<Rational>, wave_speed: Rational) -> Result<Self> {
        if c.len() != 2 * r + 1 {
            return Err(Error::Domain(format!(
                "stencil of radius {r} needs {} coefficients, got {}",
                2 * r + 1,
                c.len()
            )));
        }
        Ok(Self { r, c, wave_speed })
    }

    pub fn with_unit_speed(r: usize, c: Vec<Rational>) -> Result<Self> {
        Self::new(r, c, Rational::one())
    }

    pub fn radius(&self) -> usize {
        self.r
    }

    pub fn coefficients(&self) -> &[Rational] {
        &self.c
    }

    /// Coefficient `c_l` for offset `l` in `-r..=r`.
    pub fn coefficient(&self, l: isize) -> &Rational {
        let idx = l + self.r as isize;
        &self.c[usize::try_from(idx).expect("offset out of stencil range")]
    }

    pub fn wave_speed(&self) -> &Rational {
        &self.wave_speed
    }

    pub fn to_f64(&self) -> Vec<f64> {
        self.c
            .iter()
            .map(|x| x.to_f64().expect("coefficient out of f64 range"))
            .collect()
    }

    /// Exact moments `M_k = sum_l l^k c_l` for `k = 0..=k_max` (with
    /// `0^0 = 1`).
    pub fn moments(&self, k_max: usize) -> Vec<Rational> {
        (0..=k_max)
            .map(|k| {
                let mut acc = Rational::zero();
                for (idx, c) in self.c.iter().enumerate() {
                    let l = idx as i64 - self.r as i64;
                    acc += c * Rational::from_integer(BigInt::from(l).pow(k as u32));
                }
                acc
            })
            .collect()
    }

    /// `M_0 = 0`: the scheme vanishes on constant states to first order.
    pub fn is_consistent(&self) -> bool {
        self.moments(0)[0].is_zero()
    }

    /// Largest `p` (capped at 2r+1) with `M_k = delta_{k,1} a` for all
    /// `k <= p`; `None` if even `M_0` fails.
    pub fn order(&self) -> Option<usize> {
        let cap = 2 * self.r + 1;
        let moments = self.moments(cap);
        let mut p = None;
        for (k, m) in moments.iter().enumerate() {
            let target = if k == 1 {
                self.wave_speed.clone()
            } else {
                Rational::zero()
            };
            if *m != target {
                break;
            }
            p = Some(k);
        }
        p
    }
}

/// The unique stencil of maximal order 2r on the nodes `-r..=r` with unit
/// wave speed: the exact solve of `M_k = delta_{k,1}`, `k = 0..=2r`.
pub fn max_order_stencil(r: usize) -> Result<Stencil> {
    max_order_stencil_with_speed(r, Rational::one())
}

/// Same with an arbitrary rational target speed.
pub fn max_order_stencil_with_speed(r: usize, speed: Rational) -> Result<Stencil> {
    if r == 0 || r > MAX_STENCIL_RADIUS {
        return Err(Error::Domain(format!(
            "stencil radius must lie in 1..={MAX_STENCIL_RADIUS}, got {r}"
        )));
    }
    let n = 2 * r + 1;
    let matrix = RationalMatrix::from_fn(n, n, |k, j| {
        let node = j as i64 - r as i64;
        Rational::from_integer(BigInt::from(node).pow(k as u32))
    });
    let rhs: Vec<Rational> = (0..n)
        .map(|k| {
            if k == 1 {
                speed.clone()
            } else {
                Rational::zero()
            }
        })
        .collect();
    match solve_exact(&matrix, &rhs)? {
        SolveOutcome::Unique(c) => Stencil::new(r, c, speed),
        other => Err(Error::Domain(format!(
            "moment system unexpectedly not uniquely solvable: {other:?}"
        ))),
    }
}

/// What attaining order 2r forces on the coefficients.
#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub struct SymmetryReport {
    pub antisymmetric: bool,
    pub c0_zero: bool,
}

/// Verifies the consequences of order 2r: `c_{-l} = -c_l` for `l = 1..=r`
/// and `c_0 = 0`, exactly. The input must actually have order 2r; the first
/// failing moment index is reported otherwise.
pub fn order2r_consequences(stencil: &Stencil) -> Result<SymmetryReport> {
    let r = stencil.radius();
    let moments = stencil.moments(2 * r);
    for (k, m) in moments.iter().enumerate() {
        let target = if k == 1 {
            stencil.wave_speed().clone()
        } else {
            Rational::zero()
        };
        if *m != target {
            return Err(Error::MomentPrecondition {
                k,
                actual: m.to_string(),
                expected: target.to_string(),
            });
        }
    }
    let antisymmetric = (1..=r as isize)
        .all(|l| (stencil.coefficient(l) + stencil.coefficient(-l)).is_zero());
    let c0_zero = stencil.coefficient(0).is_zero();
    Ok(SymmetryReport {
        antisymmetric,
        c0_zero,
    })
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::rational::{rat, rat_int};

    #[test]
    fn moments_of_the_central_stencil() {
        let s = Stencil::with_unit_speed(1, vec![rat(-1, 2), rat_int(0), rat(1, 2)]).unwrap();
        assert_eq!(s.moments(2), vec![rat_int(0), rat_int(1), rat_int(0)]);
        assert!(s.is_consistent());
        assert_eq!(s.order(), Some(2));
    }

    #[test]
    fn moments_of_zero_and_one_sided_stencils() {
        let zero = Stencil::with_unit_speed(1, vec![rat_int(0); 3]).unwrap();
        assert_eq!(
            zero.moments(3),
            vec![rat_int(0), rat_int(0), rat_int(0), rat_int(0)]
        );
        // (-1, 1) on l in {0, 1}, embedded at radius 1.
        let one_sided =
            Stencil::with_unit_speed(1, vec![rat_int(0), rat_int(-1), rat_int(1)]).unwrap();
        assert_eq!(
            one_sided.moments(3),
            vec![rat_int(0), rat_int(1), rat_int(1), rat_int(1)]
        );
    }

    #[test]
    fn max_order_stencils_match_classical_central_differences() {
        assert_eq!(
            max_order_stencil(1).unwrap().coefficients(),
            &[rat(-1, 2), rat_int(0), rat(1, 2)]
        );
        assert_eq!(
            max_order_stencil(2).unwrap().coefficients(),
            &[rat(1, 12), rat(-2, 3), rat_int(0), rat(2, 3), rat(-1, 12)]
        );
        assert_eq!(
            max_order_stencil(3).unwrap().coefficients(),
            &[
                rat(-1, 60),
                rat(3, 20),
                rat(-3, 4),
                rat_int(0),
                rat(3, 4),
                rat(-3, 20),
                rat(1, 60)
            ]
        );
    }

    #[test]
    fn max_order_stencil_has_order_exactly_2r() {
        for r in 1..=5 {
            let s = max_order_stencil(r).unwrap();
            let moments = s.moments(2 * r + 1);
            for (k, m) in moments.iter().enumerate().take(2 * r + 1) {
                let target = if k == 1 { rat_int(1) } else { rat_int(0) };
                assert_eq!(*m, target, "r = {r}, k = {k}");
            }
            assert!(!moments[2 * r + 1].is_zero(), "barrier not sharp at r = {r}");
            assert_eq!(s.order(), Some(2 * r));
        }
    }

    #[test]
    fn rational_wave_speed_scales_the_solution() {
        let s = max_order_stencil_with_speed(1, rat(3, 2)).unwrap();
        assert_eq!(s.coefficients(), &[rat(-3, 4), rat_int(0), rat(3, 4)]);
        assert_eq!(s.order(), Some(2));
    }

    #[test]
    fn consequences_hold_for_all_max_order_stencils() {
        for r in 1..=5 {
            let report = order2r_consequences(&max_order_stencil(r).unwrap()).unwrap();
            assert!(report.antisymmetric && report.c0_zero, "r = {r}");
        }
    }

    #[test]
    fn perturbed_stencil_fails_the_precondition_at_k0() {
        let s = Stencil::with_unit_speed(1, vec![rat(-1, 2), rat(1, 10), rat(1, 2)]).unwrap();
        match order2r_consequences(&s) {
            Err(Error::MomentPrecondition { k: 0, .. }) => {}
            other => panic!("expected a k = 0 precondition failure, got {other:?}"),
        }
    }

    #[test]
    fn radius_bounds() {
        assert!(max_order_stencil(0).is_err());
        assert!(max_order_stencil(MAX_STENCIL_RADIUS + 1).is_err());
        assert!(Stencil::with_unit_speed(2, vec![rat_int(0); 3]).is_err());
    }
}
