//! Time integrators and the evolution driver.
//!
//! Forward Euler and the three-stage strong-stability-preserving
//! Runge-Kutta method in Shu-Osher form (convex combinations of Euler
//! steps), plus an `evolve` driver that records norm series and turns
//! blow-ups into structured outcomes instead of errors.

use super::grid::GridFunction;
use super::problem::Problem;
use super::scheme::{rhs, SchemeSpec};
use crate::error::{Error, Result};

#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub enum IntegratorKind {
    ForwardEuler,
    Ssprk3,
}

/// How the step size is chosen from the grid.
#[derive(Debug, Clone, Copy, PartialEq)]
pub enum TimeStepRule {
    /// `dt = cfl * h / max |a|` over the initial grid.
    Cfl(f64),
    /// `dt = coefficient * h^exponent`; used to isolate spatial order in
    /// convergence studies.
    HPower { coefficient: f64, exponent: f64 },
}

#[derive(Debug, Clone, Copy, PartialEq)]
pub struct IntegratorSpec {
    pub kind: IntegratorKind,
    pub rule: TimeStepRule,
}

impl IntegratorSpec {
    pub fn forward_euler(cfl: f64) -> Self {
        Self {
            kind: IntegratorKind::ForwardEuler,
            rule: TimeStepRule::Cfl(cfl),
        }
    }

    pub fn ssprk3(cfl: f64) -> Self {
        Self {
            kind: IntegratorKind::Ssprk3,
            rule: TimeStepRule::Cfl(cfl),
        }
    }

    pub fn with_rule(mut self, rule: TimeStepRule) -> Self {
        self.rule = rule;
        self
    }

    /// Step size for a given state; positive and finite.
    pub fn step_size(&self, problem: &Problem, w: &GridFunction) -> Result<f64> {
        let dt = match self.rule {
            TimeStepRule::Cfl(cfl) => {
                if cfl <= 0.0 {
                    return Err(Error::Domain(format!("cfl must be positive, got {cfl}")));
                }
                let speed = w
                    .values()
                    .iter()
                    .fold(0.0f64, |m, &u| m.max(problem.wave_speed(u).abs()));
                if speed == 0.0 {
                    return Err(Error::Domain(
                        "wave speed vanishes on the whole grid; use an explicit step rule".into(),
                    ));
                }
                cfl * w.h() / speed
            }
            TimeStepRule::HPower {
                coefficient,
                exponent,
            } => {
                if coefficient <= 0.0 {
                    return Err(Error::Domain(format!(
                        "step coefficient must be positive, got {coefficient}"
                    )));
                }
                coefficient * w.h().powf(exponent)
            }
        };
        if !(dt.is_finite() && dt > 0.0) {
            return Err(Error::Domain(format!("computed step size {dt} is unusable")));
        }
        Ok(dt)
    }
}

/// One forward Euler step `w + dt * L(w)`.
pub fn step_fe(
    spec: &SchemeSpec,
    problem: &Problem,
    w: &GridFunction,
    dt: f64,
) -> Result<GridFunction> {
    Ok(w.axpy(dt, &rhs(spec, problem, w)?))
}

/// One SSPRK3 step in Shu-Osher form:
/// `u1 = u + dt L(u)`; `u2 = 3/4 u + 1/4 (u1 + dt L(u1))`;
/// `u_next = 1/3 u + 2/3 (u2 + dt L(u2))`.
pub fn step_ssprk3(
    spec: &SchemeSpec,
    problem: &Problem,
    w: &GridFunction,
    dt: f64,
) -> Result<GridFunction> {
    let u1 = w.axpy(dt, &rhs(spec, problem, w)?);
    let u1e = u1.axpy(dt, &rhs(spec, problem, &u1)?);
    let u2 = w.combine(0.75, 0.25, &u1e);
    let u2e = u2.axpy(dt, &rhs(spec, problem, &u2)?);
    Ok(w.combine(1.0 / 3.0, 2.0 / 3.0, &u2e))
}

/// One recorded norm sample.
#[derive(Debug, Clone, Copy, PartialEq)]
pub struct NormSample {
    pub step: usize,
    pub t: f64,
    pub max_norm: f64,
    pub two_norm: f64,
}

#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub enum EvolveOutcome {
    Completed,
    /// The state left the finite range at `step`; `index` is the first
    /// offending node.
    BlowUp { step: usize, index: usize },
}

#[derive(Debug, Clone)]
pub struct Evolution {
    pub state: GridFunction,
    pub series: Vec<NormSample>,
    pub outcome: EvolveOutcome,
    pub steps_taken: usize,
    pub dt: f64,
}

/// Max-norm threshold beyond which a state counts as blown up.
pub const BLOWUP_THRESHOLD: f64 = 1e10;

/// Integrates the problem to `t_final` on `n` nodes, recording both norms
/// each step. The step size is fixed from the initial state (the last step
/// is clipped to land on `t_final` exactly); blow-up halts early with a
/// structured outcome rather than an error.
pub fn evolve(
    spec: &SchemeSpec,
    problem: &Problem,
    integrator: &IntegratorSpec,
    n: usize,
) -> Result<Evolution> {
    let r = spec.radius();
    if n < 2 * r + 2 {
        return Err(Error::Domain(format!(
            "grid of {n} nodes is too small for a radius-{r} scheme"
        )));
    }
    let mut w = GridFunction::from_fn(n, |x| problem.initial(x));
    let t_final = problem.t_final;
    if t_final < 0.0 {
        return Err(Error::Domain(format!("negative final time {t_final}")));
    }

    let dt = integrator.step_size(problem, &w)?;
    let mut series = vec![NormSample {
        step: 0,
        t: 0.0,
        max_norm: w.max_norm(),
        two_norm: w.two_norm(),
    }];

    let mut t = 0.0;
    let mut step = 0;
    while t < t_final - 1e-12 * t_final.max(1.0) {
        let this_dt = dt.min(t_final - t);
        let stepped = match integrator.kind {
            IntegratorKind::ForwardEuler => step_fe(spec, problem, &w, this_dt),
            IntegratorKind::Ssprk3 => step_ssprk3(spec, problem, &w, this_dt),
        };
        step += 1;
        t += this_dt;
        match stepped {
            Ok(next) => {
                w = next;
            }
            Err(Error::NonFinite { index }) => {
                return Ok(Evolution {
                    state: w,
                    series,
                    outcome: EvolveOutcome::BlowUp { step, index },
                    steps_taken: step,
                    dt,
                });
            }
            Err(e) => return Err(e),
        }
        series.push(NormSample {
            step,
            t,
            max_norm: w.max_norm(),
            two_norm: w.two_norm(),
        });
        if let Some(index) = w.first_nonfinite() {
            return Ok(Evolution {
                state: w,
                series,
                outcome: EvolveOutcome::BlowUp { step, index },
                steps_taken: step,
                dt,
            });
        }
        if w.max_norm() > BLOWUP_THRESHOLD {
            return Ok(Evolution {
                state: w,
                series,
                outcome: EvolveOutcome::BlowUp { step, index: 0 },
                steps_taken: step,
                dt,
            });
        }
    }

    Ok(Evolution {
        state: w,
        series,
        outcome: EvolveOutcome::Completed,
        steps_taken: step,
        dt,
    })
}
