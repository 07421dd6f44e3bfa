//! Problems `u_t = a(u) u_x` on the periodic domain, with optional exact
//! solutions and the flux needed by conservative schemes.

use crate::error::{Error, Result};

type Scalar1 = Box<dyn Fn(f64) -> f64 + Send + Sync>;
type Scalar2 = Box<dyn Fn(f64, f64) -> f64 + Send + Sync>;

/// Wave speed, initial data, optional exact solution, final time, and the
/// flux `f` with `f'(u) = -a(u)` used by flux-form schemes (for which
/// `u_t = a(u) u_x` is `u_t + f(u)_x = 0`).
pub struct Problem {
    pub name: String,
    a: Scalar1,
    flux: Option<Scalar1>,
    initial: Scalar1,
    exact: Option<Scalar2>,
    pub t_final: f64,
}

impl Problem {
    pub fn new(
        name: impl Into<String>,
        a: impl Fn(f64) -> f64 + Send + Sync + 'static,
        initial: impl Fn(f64) -> f64 + Send + Sync + 'static,
        t_final: f64,
    ) -> Self {
        Self {
            name: name.into(),
            a: Box::new(a),
            flux: None,
            initial: Box::new(initial),
            exact: None,
            t_final,
        }
    }

    pub fn with_flux(mut self, flux: impl Fn(f64) -> f64 + Send + Sync + 'static) -> Self {
        self.flux = Some(Box::new(flux));
        self
    }

    pub fn with_exact(mut self, exact: impl Fn(f64, f64) -> f64 + Send + Sync + 'static) -> Self {
        self.exact = Some(Box::new(exact));
        self
    }

    /// `u_t = u_x` with `u_0 = sin`: the profile translates left, so the
    /// exact solution is `sin(x + t)`. Flux `f(u) = -u`.
    pub fn advection(t_final: f64) -> Self {
        Self::new("advection", |_| 1.0, f64::sin, t_final)
            .with_flux(|u| -u)
            .with_exact(|x, t| (x + t).sin())
    }

    /// `u_t = -u u_x` (so `a(u) = -u`, flux `u^2/2`) with `u_0 = sin`.
    /// The exact pre-shock solution `u = sin(xi)`, `xi + t sin(xi) = x`,
    /// is recovered by Newton iteration; valid for `t < 1`.
    pub fn burgers(t_final: f64) -> Self {
        Self::new("burgers", |u| -u, f64::sin, t_final)
            .with_flux(|u| 0.5 * u * u)
            .with_exact(|x, t| {
                assert!(t < 1.0, "characteristics cross at t = 1");
                let mut xi = x;
                for _ in 0..100 {
                    let g = xi + t * xi.sin() - x;
                    let dg = 1.0 + t * xi.cos();
                    let step = g / dg;
                    xi -= step;
                    if step.abs() < 1e-14 {
                        break;
                    }
                }
                xi.sin()
            })
    }

    pub fn wave_speed(&self, u: f64) -> f64 {
        (self.a)(u)
    }

    pub fn flux(&self, u: f64) -> Result<f64> {
        match &self.flux {
            Some(f) => Ok(f(u)),
            None => Err(Error::Domain(format!(
                "problem {:?} provides no flux for conservative schemes",
                self.name
            ))),
        }
    }

    pub fn has_flux(&self) -> bool {
        self.flux.is_some()
    }

    pub fn initial(&self, x: f64) -> f64 {
        (self.initial)(x)
    }

    pub fn exact(&self, x: f64, t: f64) -> Option<f64> {
        self.exact.as_ref().map(|e| e(x, t))
    }

    pub fn has_exact(&self) -> bool {
        self.exact.is_some()
    }

    /// Checks `exact(x, 0) = initial(x)` to 1e-12 at sampled points.
    pub fn validate_exact(&self) -> Result<()> {
        let Some(exact) = &self.exact else {
            return Err(Error::Domain(format!(
                "problem {:?} provides no exact solution",
                self.name
            )));
        };
        for j in 0..17 {
            let x = j as f64 * 2.0 * std::f64::consts::PI / 17.0;
            let gap = (exact(x, 0.0) - self.initial(x)).abs();
            if gap > 1e-12 {
                return Err(Error::Domain(format!(
                    "exact(x, 0) deviates from the initial data by {gap:e} at x = {x}"
                )));
            }
        }
        Ok(())
    }
}

impl std::fmt::Debug for Problem {
    fn fmt(&self, f: &mut std::fmt::Formatter<'_>) -> std::fmt::Result {
        f.debug_struct("Problem")
            .field("name", &self.name)
            .field("t_final", &self.t_final)
            .field("has_flux", &self.flux.is_some())
            .field("has_exact", &self.exact.is_some())
            .finish()
    }
}
