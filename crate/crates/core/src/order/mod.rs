//! Order analysis of (2r+1)-point semidiscrete schemes.
//!
//! A scheme `v_j' = H(v_{j-r}, ..., v_{j+r}) / h` has order `p` for
//! `u_t = a(u) u_x` only if its stencil derivative coefficients
//! `c_l = dH/du_l` at constant states satisfy the moment conditions
//! `M_k = sum_l l^k c_l = delta_{k,1} a(v)` for `k = 0..p`. This module
//! derives those coefficients (exactly for linear schemes, numerically for
//! black-box `H`), constructs the unique maximal-order stencils, demonstrates
//! that `p <= 2r` by rank arguments, checks the antisymmetry consequences of
//! attaining order 2r, and measures empirical truncation slopes.

mod barrier;
mod empirical;
mod scheme;
mod stencil;

pub use barrier::{barrier_demonstration, BarrierCertificate, BarrierConclusion};
pub use empirical::{empirical_order, OrderFit, Profile};
pub use scheme::{stencil_from_scheme, SchemeFunction, SchemeGradient};
pub use stencil::{
    max_order_stencil, max_order_stencil_with_speed, order2r_consequences, Stencil,
    SymmetryReport, MAX_STENCIL_RADIUS,
};
