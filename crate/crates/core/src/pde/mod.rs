//! Method-of-lines simulation harness for `u_t = a(u) u_x` on periodic
//! grids: spatial schemes (linear stencils, upwind-biased exact stencils,
//! WENO with global Lax-Friedrichs splitting), forward Euler and SSPRK3
//! integrators, norm tracking, and convergence studies.

mod convergence;
mod grid;
mod integrate;
mod problem;
mod scheme;
pub mod weno;

pub use convergence::{convergence_study, ConvergenceRow};
pub use grid::GridFunction;
pub use integrate::{
    evolve, step_fe, step_ssprk3, Evolution, EvolveOutcome, IntegratorKind, IntegratorSpec,
    NormSample, TimeStepRule, BLOWUP_THRESHOLD,
};
pub use problem::Problem;
pub use scheme::{make_upwind_stencil, rhs, Direction, DirectionHandling, SchemeKind, SchemeSpec};
