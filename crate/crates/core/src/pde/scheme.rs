//! Spatial schemes: the right-hand side `H(w_{j-r}, ..., w_{j+r}) / h`.

use num_bigint::BigInt;
use num_traits::{One, Zero};

use super::grid::GridFunction;
use super::problem::Problem;
use super::weno;
use crate::error::{Error, Result};
use crate::linalg::{solve_exact, RationalMatrix, SolveOutcome};
use crate::order::Stencil;
use crate::rational::Rational;

/// Bias direction of an upwind stencil: `Plus` leans on nodes to the right
/// (`-(r-1)..=r`), the upstream side for positive wave speeds.
#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub enum Direction {
    Plus,
    Minus,
}

/// How the scheme picks its bias at each node.
#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub enum DirectionHandling {
    /// Use one fixed bias everywhere; linear stencils are applied raw
    /// (the stencil itself carries the wave speed).
    Fixed(Direction),
    /// Freeze the wave speed at the node: `H_j = a(w_j) * sum_l c_l w_{j+l}`,
    /// with upwind stencils flipping on the sign of `a(w_j)`.
    SpeedAdaptive,
}

#[derive(Debug, Clone)]
pub enum SchemeKind {
    /// Fixed coefficient stencil `c_{-r..r}`.
    LinearStencil(Vec<f64>),
    /// Order-(2r-1) one-sided-biased stencils, chosen per direction.
    UpwindLinear { r: usize },
    /// WENO reconstruction of globally Lax-Friedrichs split fluxes,
    /// order 2r-1 with r in {2, 3}.
    Weno { r: usize },
}

/// A spatial scheme plus its direction handling.
#[derive(Debug, Clone)]
pub struct SchemeSpec {
    pub kind: SchemeKind,
    pub handling: DirectionHandling,
    /// Cached biased stencils for `UpwindLinear` (plus, minus).
    upwind: Option<(Vec<f64>, Vec<f64>)>,
}

impl SchemeSpec {
    pub fn linear_coefficients(c: Vec<f64>) -> Result<Self> {
        if c.len() % 2 != 1 {
            return Err(Error::Domain(format!(
                "need 2r+1 coefficients, got {}",
                c.len()
            )));
        }
        Ok(Self {
            kind: SchemeKind::LinearStencil(c),
            handling: DirectionHandling::SpeedAdaptive,
            upwind: None,
        })
    }

    pub fn linear_stencil(stencil: &Stencil) -> Self {
        Self {
            kind: SchemeKind::LinearStencil(stencil.to_f64()),
            handling: DirectionHandling::SpeedAdaptive,
            upwind: None,
        }
    }

    pub fn upwind_linear(r: usize) -> Result<Self> {
        let plus = make_upwind_stencil(r, Direction::Plus)?.to_f64();
        let minus = make_upwind_stencil(r, Direction::Minus)?.to_f64();
        Ok(Self {
            kind: SchemeKind::UpwindLinear { r },
            handling: DirectionHandling::SpeedAdaptive,
            upwind: Some((plus, minus)),
        })
    }

    pub fn weno(r: usize) -> Result<Self> {
        if !(r == 2 || r == 3) {
            return Err(Error::Domain(format!(
                "WENO is provided for r in {{2, 3}}, got {r}"
            )));
        }
        Ok(Self {
            kind: SchemeKind::Weno { r },
            handling: DirectionHandling::SpeedAdaptive,
            upwind: None,
        })
    }

    pub fn with_handling(mut self, handling: DirectionHandling) -> Self {
        self.handling = handling;
        self
    }

    /// Half-width of the widest window the scheme touches per node.
    pub fn radius(&self) -> usize {
        match &self.kind {
            SchemeKind::LinearStencil(c) => c.len() / 2,
            SchemeKind::UpwindLinear { r } | SchemeKind::Weno { r } => *r,
        }
    }

    /// Design order of the built-in kinds; a raw stencil reports the largest
    /// moment order it satisfies for unit speed.
    pub fn spatial_order(&self) -> Option<usize> {
        match &self.kind {
            SchemeKind::UpwindLinear { r } | SchemeKind::Weno { r } => Some(2 * r - 1),
            SchemeKind::LinearStencil(_) => None,
        }
    }
}

/// Semidiscrete right-hand side `H(w_{j-r}, ..., w_{j+r}) / h` per node.
pub fn rhs(spec: &SchemeSpec, problem: &Problem, w: &GridFunction) -> Result<GridFunction> {
    let r = spec.radius();
    let n = w.len();
    if n < 2 * r + 2 {
        return Err(Error::Domain(format!(
            "grid of {n} nodes is too small for a radius-{r} scheme (need >= {})",
            2 * r + 2
        )));
    }
    if let Some(index) = w.first_nonfinite() {
        return Err(Error::NonFinite { index });
    }
    let h = w.h();

    let values: Vec<f64> = match &spec.kind {
        SchemeKind::LinearStencil(c) => (0..n as isize)
            .map(|j| {
                let sum: f64 = c
                    .iter()
                    .enumerate()
                    .map(|(idx, cl)| cl * w.wrap(j + idx as isize - r as isize))
                    .sum();
                let factor = match spec.handling {
                    DirectionHandling::Fixed(_) => 1.0,
                    DirectionHandling::SpeedAdaptive => problem.wave_speed(w.wrap(j)),
                };
                factor * sum / h
            })
            .collect(),
        SchemeKind::UpwindLinear { .. } => {
            let (plus, minus) = spec.upwind.as_ref().expect("cached at construction");
            (0..n as isize)
                .map(|j| {
                    let speed = problem.wave_speed(w.wrap(j));
                    let direction = match spec.handling {
                        DirectionHandling::Fixed(d) => d,
                        DirectionHandling::SpeedAdaptive => {
                            if speed >= 0.0 {
                                Direction::Plus
                            } else {
                                Direction::Minus
                            }
                        }
                    };
                    let c = match direction {
                        Direction::Plus => plus,
                        Direction::Minus => minus,
                    };
                    let sum: f64 = c
                        .iter()
                        .enumerate()
                        .map(|(idx, cl)| cl * w.wrap(j + idx as isize - r as isize))
                        .sum();
                    speed * sum / h
                })
                .collect()
        }
        SchemeKind::Weno { r } => weno_rhs(*r, problem, w)?,
    };

    let out = GridFunction::from_values(values);
    if let Some(index) = out.first_nonfinite() {
        return Err(Error::NonFinite { index });
    }
    Ok(out)
}

/// Flux-form WENO right-hand side with global Lax-Friedrichs splitting:
/// `f± = (f ± alpha u) / 2` with `alpha = max |a|` over the grid, each part
/// reconstructed with its upwind bias; then `H_j = -(fhat_{j+1/2} -
/// fhat_{j-1/2})`.
fn weno_rhs(r: usize, problem: &Problem, w: &GridFunction) -> Result<Vec<f64>> {
    let n = w.len() as isize;
    let alpha = w
        .values()
        .iter()
        .fold(0.0f64, |m, &u| m.max(problem.wave_speed(u).abs()));

    let mut flux_plus = Vec::with_capacity(n as usize);
    let mut flux_minus = Vec::with_capacity(n as usize);
    for &u in w.values() {
        let f = problem.flux(u)?;
        flux_plus.push(0.5 * (f + alpha * u));
        flux_minus.push(0.5 * (f - alpha * u));
    }
    let wrap = |v: &[f64], j: isize| v[j.rem_euclid(n) as usize];

    // Face value at j + 1/2: the plus part reconstructs left-biased around
    // node j, the minus part mirror-biased around node j + 1.
    let width = 2 * r as isize - 1;
    let face: Vec<f64> = (0..n)
        .map(|j| {
            let plus_window: Vec<f64> = (0..width)
                .map(|k| wrap(&flux_plus, j + k - (r as isize - 1)))
                .collect();
            let minus_window: Vec<f64> = (0..width)
                .map(|k| wrap(&flux_minus, j + 1 - k + (r as isize - 1)))
                .collect();
            weno::reconstruct(&plus_window) + weno::reconstruct(&minus_window)
        })
        .collect();

    let h = w.h();
    Ok((0..n)
        .map(|j| {
            let jm = (j - 1).rem_euclid(n) as usize;
            -(face[j as usize] - face[jm]) / h
        })
        .collect())
}

/// The order-(2r-1) upwind-biased stencil: the exact solve of
/// `M_k = delta_{k,1}`, `k = 0..2r-1`, on the 2r nodes `-(r-1)..=r`
/// (direction `Plus`) or `-r..=r-1` (`Minus`), zero-padded to 2r+1 entries.
/// The resulting order is exactly 2r-1 (`M_{2r} != 0`).
pub fn make_upwind_stencil(r: usize, direction: Direction) -> Result<Stencil> {
    if r == 0 || r > crate::order::MAX_STENCIL_RADIUS {
        return Err(Error::Domain(format!(
            "stencil radius must lie in 1..={}, got {r}",
            crate::order::MAX_STENCIL_RADIUS
        )));
    }
    let nodes: Vec<i64> = match direction {
        Direction::Plus => (-(r as i64 - 1)..=r as i64).collect(),
        Direction::Minus => (-(r as i64)..=r as i64 - 1).collect(),
    };
    let m = 2 * r; // unknowns and equations
    let matrix = RationalMatrix::from_fn(m, m, |k, j| {
        Rational::from_integer(BigInt::from(nodes[j]).pow(k as u32))
    });
    let rhs: Vec<Rational> = (0..m)
        .map(|k| if k == 1 { Rational::one() } else { Rational::zero() })
        .collect();
    let solved = match solve_exact(&matrix, &rhs)? {
        SolveOutcome::Unique(c) => c,
        other => {
            return Err(Error::Domain(format!(
                "upwind moment system unexpectedly not uniquely solvable: {other:?}"
            )))
        }
    };
    let mut c = vec![Rational::zero(); 2 * r + 1];
    for (value, node) in solved.into_iter().zip(&nodes) {
        c[(node + r as i64) as usize] = value;
    }
    Stencil::with_unit_speed(r, c)
}
