//! Empirical truncation-error slopes.
//!
//! The residual `|H(u(x - rh), ..., u(x + rh)) / h - a(u(x)) u'(x)|` decays
//! like `h^p` for a scheme of order p; a least-squares fit of log-residual
//! against log-step over the finest few steps estimates p. Residuals that
//! fall below the rounding floor are discarded before fitting.

use super::scheme::SchemeFunction;
use crate::error::{Error, Result};

/// Smooth test profile with its derivative.
pub struct Profile {
    u: Box<dyn Fn(f64) -> f64 + Send + Sync>,
    du: Box<dyn Fn(f64) -> f64 + Send + Sync>,
}

impl Profile {
    pub fn new(
        u: impl Fn(f64) -> f64 + Send + Sync + 'static,
        du: impl Fn(f64) -> f64 + Send + Sync + 'static,
    ) -> Self {
        Self {
            u: Box::new(u),
            du: Box::new(du),
        }
    }

    /// `u(y) = sin(y + 0.37)`: the phase shift avoids even/odd symmetry
    /// cancellations at sampled points.
    pub fn generic() -> Self {
        Self::new(|y| (y + 0.37).sin(), |y| (y + 0.37).cos())
    }

    pub fn value(&self, y: f64) -> f64 {
        (self.u)(y)
    }

    pub fn derivative(&self, y: f64) -> f64 {
        (self.du)(y)
    }
}

/// Fitted truncation slope.
#[derive(Debug, Clone)]
pub struct OrderFit {
    /// Least-squares slope of log residual vs log step: the order estimate.
    pub slope: f64,
    /// The `(h, residual)` pairs that entered the fit.
    pub samples: Vec<(f64, f64)>,
}

/// Measures the truncation slope of a scheme against `a(u(x)) u'(x)`.
///
/// `h_list` must be decreasing with at least 4 entries; the fit uses the
/// last 4 usable points. Residuals below `1e3 * eps * |u'(x)|` are in the
/// rounding regime and are dropped; if even the largest step is below the
/// floor the fit is degenerate and the caller must enlarge the steps.
pub fn empirical_order(
    scheme: &SchemeFunction,
    wave_speed: &dyn Fn(f64) -> f64,
    profile: &Profile,
    x: f64,
    h_list: &[f64],
) -> Result<OrderFit> {
    if h_list.len() < 4 {
        return Err(Error::Domain(format!(
            "need at least 4 step sizes, got {}",
            h_list.len()
        )));
    }
    if h_list.windows(2).any(|w| w[1] >= w[0]) || h_list.iter().any(|&h| h <= 0.0) {
        return Err(Error::Domain("steps must be positive and decreasing".into()));
    }

    let r = scheme.radius() as isize;
    let target = wave_speed(profile.value(x)) * profile.derivative(x);
    let floor = 1e3 * f64::EPSILON * profile.derivative(x).abs();

    let mut residuals = Vec::with_capacity(h_list.len());
    for &h in h_list {
        let window: Vec<f64> = (-r..=r).map(|l| profile.value(x + l as f64 * h)).collect();
        let value = scheme.eval(&window) / h;
        if !value.is_finite() {
            return Err(Error::Evaluation(format!("H not finite at step {h}")));
        }
        residuals.push((h, (value - target).abs()));
    }

    if residuals[0].1 < floor {
        return Err(Error::DegenerateFit(format!(
            "residual {:.3e} at the largest step is below the rounding floor {floor:.3e}; \
             enlarge the steps",
            residuals[0].1
        )));
    }
    let usable: Vec<(f64, f64)> = residuals.into_iter().filter(|&(_, e)| e >= floor).collect();
    if usable.len() < 2 {
        return Err(Error::DegenerateFit(
            "fewer than 2 residuals above the rounding floor".into(),
        ));
    }
    let samples: Vec<(f64, f64)> = usable.iter().rev().take(4).rev().copied().collect();

    // Least squares on (ln h, ln e).
    let pts: Vec<(f64, f64)> = samples.iter().map(|&(h, e)| (h.ln(), e.ln())).collect();
    let n = pts.len() as f64;
    let sx: f64 = pts.iter().map(|p| p.0).sum();
    let sy: f64 = pts.iter().map(|p| p.1).sum();
    let sxx: f64 = pts.iter().map(|p| p.0 * p.0).sum();
    let sxy: f64 = pts.iter().map(|p| p.0 * p.1).sum();
    let slope = (n * sxy - sx * sy) / (n * sxx - sx * sx);

    Ok(OrderFit { slope, samples })
}

#[cfg(test)]
mod tests {
    use super::*;

    fn steps() -> Vec<f64> {
        (0..5).map(|i| 0.2 / f64::powi(2.0, i)).collect()
    }

    #[test]
    fn central_schemes_fit_their_moment_orders() {
        let profile = Profile::generic();
        let unit = |_: f64| 1.0;
        let fit2 = empirical_order(
            &SchemeFunction::by_name("central2").unwrap(),
            &unit,
            &profile,
            0.7,
            &steps(),
        )
        .unwrap();
        assert!((fit2.slope - 2.0).abs() < 0.1, "slope {}", fit2.slope);

        let fit4 = empirical_order(
            &SchemeFunction::by_name("central4").unwrap(),
            &unit,
            &profile,
            0.7,
            &steps(),
        )
        .unwrap();
        assert!((fit4.slope - 4.0).abs() < 0.1, "slope {}", fit4.slope);
    }

    #[test]
    fn biased_third_order_scheme() {
        let fit = empirical_order(
            &SchemeFunction::by_name("upwind3").unwrap(),
            &|_| 1.0,
            &Profile::generic(),
            0.7,
            &steps(),
        )
        .unwrap();
        assert!((fit.slope - 3.0).abs() < 0.1, "slope {}", fit.slope);
    }

    #[test]
    fn every_builtin_fits_its_moment_order() {
        // The truncation slope must agree with the exact moment-based order
        // to within 0.15 for the whole built-in family.
        let expected = [
            ("central2", 2.0),
            ("central4", 4.0),
            ("central6", 6.0),
            ("upwind1", 1.0),
            ("upwind3", 3.0),
            ("burgers", 2.0),
        ];
        for (name, order) in expected {
            let scheme = SchemeFunction::by_name(name).unwrap();
            let speed: Box<dyn Fn(f64) -> f64> = if name == "burgers" {
                Box::new(|u| u)
            } else {
                Box::new(|_| 1.0)
            };
            let fit =
                empirical_order(&scheme, &*speed, &Profile::generic(), 0.7, &steps()).unwrap();
            assert!(
                (fit.slope - order).abs() < 0.15,
                "{name}: slope {} vs order {order}",
                fit.slope
            );
        }
    }

    #[test]
    fn quadratic_scheme_against_its_own_speed() {
        let fit = empirical_order(
            &SchemeFunction::burgers_central(),
            &|u| u,
            &Profile::generic(),
            0.7,
            &steps(),
        )
        .unwrap();
        assert!((fit.slope - 2.0).abs() < 0.1, "slope {}", fit.slope);
    }

    #[test]
    fn degenerate_fit_when_steps_are_too_small() {
        // An exact linear reproduction: H/h equals u' identically when u is
        // linear, so every residual sits at rounding level.
        let profile = Profile::new(|y| 2.0 * y + 1.0, |_| 2.0);
        let result = empirical_order(
            &SchemeFunction::by_name("central2").unwrap(),
            &|_| 1.0,
            &profile,
            0.7,
            &steps(),
        );
        assert!(matches!(result, Err(Error::DegenerateFit(_))));
    }

    #[test]
    fn input_validation() {
        let profile = Profile::generic();
        let scheme = SchemeFunction::by_name("central2").unwrap();
        assert!(empirical_order(&scheme, &|_| 1.0, &profile, 0.7, &[0.1, 0.05]).is_err());
        assert!(
            empirical_order(&scheme, &|_| 1.0, &profile, 0.7, &[0.1, 0.2, 0.05, 0.01]).is_err()
        );
    }
}
