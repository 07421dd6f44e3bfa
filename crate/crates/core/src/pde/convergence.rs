//! Grid-refinement error tables.

use super::integrate::{evolve, EvolveOutcome, IntegratorSpec};
use super::problem::Problem;
use super::scheme::SchemeSpec;
use crate::error::{Error, Result};

/// One refinement level: error against the exact solution at the final
/// time, and the observed order against the previous level.
#[derive(Debug, Clone, Copy, PartialEq)]
pub struct ConvergenceRow {
    pub n: usize,
    pub h: f64,
    pub error: f64,
    pub observed_order: Option<f64>,
}

/// Runs the scheme on each grid size and tabulates max-norm errors at
/// `t_final` with the observed order between consecutive levels. Requires
/// an exact solution; a blown-up run reports an infinite error.
pub fn convergence_study(
    spec: &SchemeSpec,
    problem: &Problem,
    integrator: &IntegratorSpec,
    n_list: &[usize],
) -> Result<Vec<ConvergenceRow>> {
    if n_list.len() < 2 {
        return Err(Error::Domain("need at least two grid sizes".into()));
    }
    if n_list.windows(2).any(|w| w[1] <= w[0]) {
        return Err(Error::Domain("grid sizes must be increasing".into()));
    }
    problem.validate_exact()?;

    let mut rows: Vec<ConvergenceRow> = Vec::with_capacity(n_list.len());
    for &n in n_list {
        let run = evolve(spec, problem, integrator, n)?;
        let error = match run.outcome {
            EvolveOutcome::Completed => {
                let mut worst = 0.0f64;
                for j in 0..n {
                    let x = run.state.x(j);
                    let exact = problem
                        .exact(x, problem.t_final)
                        .expect("validated above");
                    worst = worst.max((run.state.values()[j] - exact).abs());
                }
                worst
            }
            EvolveOutcome::BlowUp { .. } => f64::INFINITY,
        };
        let observed_order = rows.last().map(|prev: &ConvergenceRow| {
            (prev.error / error).ln() / (n as f64 / prev.n as f64).ln()
        });
        rows.push(ConvergenceRow {
            n,
            h: run.state.h(),
            error,
            observed_order,
        });
    }
    Ok(rows)
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::pde::integrate::TimeStepRule;

    #[test]
    fn upwind_first_order_study() {
        let spec = SchemeSpec::upwind_linear(1).unwrap();
        let p = Problem::advection(1.0);
        let integrator = IntegratorSpec::forward_euler(0.5);
        let rows = convergence_study(&spec, &p, &integrator, &[40, 80, 160]).unwrap();
        let last = rows.last().unwrap().observed_order.unwrap();
        assert!((last - 1.0).abs() < 0.15, "observed {last}");
    }

    #[test]
    fn central_with_ssprk3_reaches_second_order() {
        let spec = SchemeSpec::linear_coefficients(vec![-0.5, 0.0, 0.5]).unwrap();
        let p = Problem::advection(1.0);
        let integrator = IntegratorSpec::ssprk3(0.4);
        let rows = convergence_study(&spec, &p, &integrator, &[40, 80, 160, 320]).unwrap();
        let last = rows.last().unwrap().observed_order.unwrap();
        assert!((last - 2.0).abs() < 0.2, "observed {last}");
    }

    #[test]
    fn burgers_pre_shock_with_weno() {
        let spec = SchemeSpec::weno(2).unwrap();
        let p = Problem::burgers(0.5);
        let integrator = IntegratorSpec::ssprk3(0.4);
        let rows = convergence_study(&spec, &p, &integrator, &[40, 80, 160, 320]).unwrap();
        let last = rows.last().unwrap().observed_order.unwrap();
        assert!(
            (2.0..4.0).contains(&last),
            "third-order scheme on a nonlinear problem: observed {last}"
        );
    }

    #[test]
    fn exact_solution_is_required() {
        let spec = SchemeSpec::upwind_linear(1).unwrap();
        let p = Problem::new("bare", |_| 1.0, f64::sin, 1.0);
        let integrator = IntegratorSpec::forward_euler(0.5);
        assert!(convergence_study(&spec, &p, &integrator, &[40, 80]).is_err());
    }

    #[test]
    fn blow_up_reports_infinite_error() {
        let spec = SchemeSpec::linear_coefficients(vec![-0.5, 0.0, 0.5]).unwrap();
        let p = Problem::advection(20.0);
        let integrator = IntegratorSpec::forward_euler(1.0);
        let rows = convergence_study(&spec, &p, &integrator, &[40, 80]).unwrap();
        assert!(rows.iter().any(|r| r.error.is_infinite()));
    }

    #[test]
    fn hpower_rule_is_honored() {
        let spec = SchemeSpec::upwind_linear(1).unwrap();
        let p = Problem::advection(0.5);
        let integrator = IntegratorSpec::forward_euler(0.5).with_rule(TimeStepRule::HPower {
            coefficient: 0.3,
            exponent: 1.5,
        });
        let rows = convergence_study(&spec, &p, &integrator, &[32, 64]).unwrap();
        assert_eq!(rows.len(), 2);
        assert!(rows[1].error < rows[0].error);
    }
}
