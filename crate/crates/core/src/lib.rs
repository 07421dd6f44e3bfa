//! Analysis of semidiscrete (2r+1)-point finite-difference schemes for the
//! quasilinear advection equation `u_t = a(u) u_x`.
//!
//! The crate derives stencil coefficients from exact order conditions,
//! demonstrates that the order of a (2r+1)-point scheme cannot exceed 2r,
//! certifies that forward Euler applied to any scheme attaining order 2r is
//! unstable for every time-step ratio, and provides a method-of-lines
//! simulation harness (linear stencils, upwind-biased schemes, WENO with
//! global Lax-Friedrichs splitting) showing that order 2r-1 is attained by
//! stable schemes.
//!
//! Module map:
//!
//! - [`rational`], [`linalg`]: exact rational arithmetic, fraction-free
//!   determinants, closed-form Vandermonde-type identities, exact solving.
//! - [`fdb`]: partition enumeration and the generalized chain rule
//!   (Faà di Bruno) for compositions `f ∘ u`.
//! - [`order`]: moment conditions, maximal-order stencils, the order
//!   barrier, empirical truncation-slope measurement.
//! - [`stability`]: Fourier symbols, amplification reports, instability
//!   certificates, maximal stable CFL search.
//! - [`pde`]: periodic grids, spatial schemes, forward Euler / SSPRK3
//!   integrators, convergence studies.
//! - [`suite`]: the built-in verification battery with pinned tolerances.

pub mod error;
pub mod fdb;
pub mod linalg;
pub mod numdiff;
pub mod order;
pub mod pde;
pub mod rational;
pub mod stability;
pub mod suite;

pub use error::{Error, Result};
pub use rational::Rational;
