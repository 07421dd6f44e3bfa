//! Black-box numerical derivative functions `H` and their coefficients at
//! constant states.

use super::stencil::{max_order_stencil, Stencil};
use crate::error::{Error, Result};

type WindowFn = Box<dyn Fn(&[f64]) -> f64 + Send + Sync>;

/// A smooth numerical derivative function `H` on 2r+1 arguments, so that
/// `H(v_{j-r}, ..., v_{j+r}) / h` approximates `a(u) u_x` at node `j`.
pub struct SchemeFunction {
    r: usize,
    name: String,
    description: String,
    h: WindowFn,
}

impl SchemeFunction {
    pub fn new(
        r: usize,
        name: impl Into<String>,
        description: impl Into<String>,
        h: impl Fn(&[f64]) -> f64 + Send + Sync + 'static,
    ) -> Self {
        Self {
            r,
            name: name.into(),
            description: description.into(),
            h: Box::new(h),
        }
    }

    /// Linear scheme `H = sum_l c_l u_l` from raw coefficients.
    pub fn linear(name: impl Into<String>, coefficients: &[f64]) -> Self {
        assert!(coefficients.len() % 2 == 1, "need 2r+1 coefficients");
        let r = coefficients.len() / 2;
        let c = coefficients.to_vec();
        Self::new(r, name, "linear stencil scheme", move |u: &[f64]| {
            c.iter().zip(u).map(|(ci, ui)| ci * ui).sum()
        })
    }

    pub fn from_stencil(name: impl Into<String>, stencil: &Stencil) -> Self {
        Self::linear(name, &stencil.to_f64())
    }

    /// Quadratic scheme `H = (u_1^2 - u_{-1}^2)/4`, targeting `a(u) = u`.
    pub fn burgers_central() -> Self {
        Self::new(
            1,
            "burgers",
            "central quadratic scheme for a(u) = u",
            |u: &[f64]| (u[2] * u[2] - u[0] * u[0]) / 4.0,
        )
    }

    /// Built-in schemes by name.
    pub fn by_name(name: &str) -> Option<Self> {
        let linear = |r: usize, name: &str, desc: &str| {
            let s = max_order_stencil(r).expect("radius within bounds");
            let mut f = Self::from_stencil(name, &s);
            f.description = desc.into();
            Some(f)
        };
        match name {
            "central2" => linear(1, "central2", "second-order central difference"),
            "central4" => linear(2, "central4", "fourth-order central difference"),
            "central6" => linear(3, "central6", "sixth-order central difference"),
            "upwind1" => Some(Self::linear("upwind1", &[0.0, -1.0, 1.0])),
            "upwind3" => Some(Self::linear(
                "upwind3",
                &[0.0, -1.0 / 3.0, -1.0 / 2.0, 1.0, -1.0 / 6.0],
            )),
            "burgers" => Some(Self::burgers_central()),
            _ => None,
        }
    }

    pub fn radius(&self) -> usize {
        self.r
    }

    pub fn name(&self) -> &str {
        &self.name
    }

    pub fn description(&self) -> &str {
        &self.description
    }

    /// Evaluates `H` on a window of 2r+1 values.
    pub fn eval(&self, window: &[f64]) -> f64 {
        assert_eq!(window.len(), 2 * self.r + 1, "window length mismatch");
        (self.h)(window)
    }
}

impl std::fmt::Debug for SchemeFunction {
    fn fmt(&self, f: &mut std::fmt::Formatter<'_>) -> std::fmt::Result {
        f.debug_struct("SchemeFunction")
            .field("r", &self.r)
            .field("name", &self.name)
            .finish()
    }
}

/// Numerical derivative coefficients of a scheme at a constant state.
#[derive(Debug, Clone, PartialEq)]
pub struct SchemeGradient {
    pub r: usize,
    /// `dH/du_l (v, ..., v)` for `l = -r..=r`.
    pub coefficients: Vec<f64>,
    /// `H(v, ..., v)`; zero for consistent schemes.
    pub constant_value: f64,
    /// Whether `H(v, ..., v)` vanishes within tolerance.
    pub consistent: bool,
}

/// Differentiates `H` at the constant state `(v, ..., v)` by sixth-order
/// central differences per coordinate, with step `1e-3 * (1 + |v|)`.
/// Accuracy is near rounding level (~1e-12 relative) for polynomial `H`.
pub fn stencil_from_scheme(scheme: &SchemeFunction, v: f64) -> Result<SchemeGradient> {
    let r = scheme.radius();
    let n = 2 * r + 1;
    let step = 1e-3 * (1.0 + v.abs());
    let base = vec![v; n];
    let constant_value = scheme.eval(&base);
    if !constant_value.is_finite() {
        return Err(Error::Evaluation(format!(
            "H is not finite at the constant state v = {v}"
        )));
    }

    // Sixth-order first-derivative weights over offsets -3..=3.
    let weights = [-1.0, 9.0, -45.0, 0.0, 45.0, -9.0, 1.0];
    let mut coefficients = Vec::with_capacity(n);
    for coord in 0..n {
        let mut acc = 0.0;
        for (w, offset) in weights.iter().zip(-3i32..=3) {
            if *w == 0.0 {
                continue;
            }
            let mut point = base.clone();
            point[coord] = v + offset as f64 * step;
            let value = scheme.eval(&point);
            if !value.is_finite() {
                return Err(Error::Evaluation(format!(
                    "H is not finite near the constant state (coordinate {coord})"
                )));
            }
            acc += w * value;
        }
        coefficients.push(acc / (60.0 * step));
    }

    let scale = 1.0 + v.abs();
    Ok(SchemeGradient {
        r,
        coefficients,
        constant_value,
        consistent: constant_value.abs() <= 1e-10 * scale,
    })
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn linear_scheme_gradient_is_exact() {
        let s = SchemeFunction::by_name("central2").unwrap();
        for v in [-3.0, 0.0, 1.7] {
            let g = stencil_from_scheme(&s, v).unwrap();
            assert!(g.consistent);
            assert!((g.coefficients[0] + 0.5).abs() < 1e-12);
            assert!(g.coefficients[1].abs() < 1e-12);
            assert!((g.coefficients[2] - 0.5).abs() < 1e-12);
        }
    }

    #[test]
    fn burgers_gradient_at_two() {
        let s = SchemeFunction::burgers_central();
        let g = stencil_from_scheme(&s, 2.0).unwrap();
        assert!(g.consistent);
        let expect = [-1.0, 0.0, 1.0];
        for (got, want) in g.coefficients.iter().zip(expect) {
            assert!((got - want).abs() < 1e-9, "got {got}, want {want}");
        }
    }

    #[test]
    fn inconsistent_scheme_is_flagged() {
        let s = SchemeFunction::new(1, "shifted", "H with a constant offset", |u: &[f64]| {
            (u[2] - u[0]) / 2.0 + 1.0
        });
        let g = stencil_from_scheme(&s, 0.5).unwrap();
        assert!(!g.consistent);
        assert!((g.constant_value - 1.0).abs() < 1e-12);
    }

    #[test]
    fn non_finite_evaluation_is_an_error() {
        let s = SchemeFunction::new(1, "bad", "divides by u_0", |u: &[f64]| 1.0 / u[1]);
        assert!(matches!(
            stencil_from_scheme(&s, 0.0),
            Err(Error::Evaluation(_))
        ));
    }

    #[test]
    fn builtin_names_resolve() {
        for name in ["central2", "central4", "central6", "upwind1", "upwind3", "burgers"] {
            assert!(SchemeFunction::by_name(name).is_some(), "{name}");
        }
        assert!(SchemeFunction::by_name("nonsense").is_none());
    }
}
