//! Fourier (von Neumann) analysis of the forward Euler update.
//!
//! For the linearized scheme `w_j' = sum_l alpha_l w_{j+l} / h`, forward
//! Euler with time-step ratio `lambda = dt/h` acts on the mode `e^{ij theta}`
//! as multiplication by the symbol
//!
//! ```text
//! Psi(theta) = 1 + lambda * sum_l alpha_l e^{i l theta},
//! ```
//!
//! which in the antisymmetric normal form (`alpha_0 = 0`,
//! `alpha_{-l} = -alpha_l`) collapses to
//! `1 + 2 i lambda sum_{l>=1} alpha_l sin(l theta)` — a purely imaginary
//! perturbation of 1, so `|Psi| > 1` somewhere for every positive lambda
//! unless all coefficients vanish.

use num_complex::Complex64;

use crate::error::{Error, Result};
use crate::order::Stencil;

/// Number of uniform grid points scanned over `[0, 2pi)` before local
/// refinement; far above the Nyquist rate of degree <= 8 trigonometric
/// polynomials.
const THETA_GRID: usize = 4096;
/// Target width of the golden-section bracket in theta.
const THETA_TOL: f64 = 1e-10;
/// Modulus threshold for classifying a ratio as stable; absorbs rounding so
/// genuine `|Psi| = 1` boundary cases classify as stable.
const STABILITY_TOL: f64 = 1e-12;
/// Search cap for the maximal stable ratio.
const LAMBDA_CAP: f64 = 10.0;

/// Coefficients of a linearized right-hand side `sum_l alpha_l w_{j+l} / h`.
#[derive(Debug, Clone, PartialEq)]
pub struct LinearizedScheme {
    r: usize,
    alpha: Vec<f64>,
    antisymmetric: bool,
}

impl LinearizedScheme {
    /// Wraps coefficients indexed `l = -r..=r`. Requires consistency
    /// (`sum alpha_l = 0` within 1e-12) and records whether the
    /// antisymmetric normal form applies.
    pub fn from_coefficients(alpha: &[f64]) -> Result<Self> {
        if alpha.len() % 2 != 1 {
            return Err(Error::Domain(format!(
                "need 2r+1 coefficients, got {}",
                alpha.len()
            )));
        }
        let sum: f64 = alpha.iter().sum();
        if sum.abs() > 1e-12 {
            return Err(Error::Domain(format!(
                "inconsistent coefficients: sum = {sum:e} exceeds 1e-12"
            )));
        }
        let r = alpha.len() / 2;
        let tol = 1e-12 * alpha.iter().fold(1.0f64, |m, a| m.max(a.abs()));
        let antisymmetric = alpha[r].abs() <= tol
            && (1..=r).all(|l| (alpha[r + l] + alpha[r - l]).abs() <= tol);
        Ok(Self {
            r,
            alpha: alpha.to_vec(),
            antisymmetric,
        })
    }

    pub fn from_stencil(stencil: &Stencil) -> Result<Self> {
        Self::from_coefficients(&stencil.to_f64())
    }

    pub fn radius(&self) -> usize {
        self.r
    }

    /// `alpha_l` for `l = -r..=r`.
    pub fn alpha(&self, l: isize) -> f64 {
        self.alpha[(l + self.r as isize) as usize]
    }

    pub fn coefficients(&self) -> &[f64] {
        &self.alpha
    }

    pub fn is_antisymmetric(&self) -> bool {
        self.antisymmetric
    }

    /// `sum_{l>=1} alpha_l sin(l theta)`: the imaginary part of the symbol
    /// divided by `2 lambda` in the antisymmetric case.
    fn sine_sum(&self, theta: f64) -> f64 {
        (1..=self.r as isize)
            .map(|l| self.alpha(l) * (l as f64 * theta).sin())
            .sum()
    }
}

/// Linearizes a stencil or raw coefficient vector about a constant state.
pub fn linearize(coefficients: &[f64]) -> Result<LinearizedScheme> {
    LinearizedScheme::from_coefficients(coefficients)
}

/// The amplification symbol `1 + lambda sum_l alpha_l e^{i l theta}`.
pub fn symbol(scheme: &LinearizedScheme, lambda: f64, theta: f64) -> Complex64 {
    let r = scheme.radius() as isize;
    let mut acc = Complex64::new(0.0, 0.0);
    for l in -r..=r {
        let a = scheme.alpha(l);
        if a != 0.0 {
            acc += a * Complex64::new(0.0, l as f64 * theta).exp();
        }
    }
    Complex64::new(1.0, 0.0) + lambda * acc
}

/// Where and how strongly the forward Euler update amplifies.
#[derive(Debug, Clone, Copy, PartialEq)]
pub struct AmplificationReport {
    pub lambda: f64,
    pub max_modulus: f64,
    pub argmax_theta: f64,
    /// True when the scheme is in antisymmetric normal form with a nonzero
    /// coefficient, in which case amplification exceeds 1 for every lambda.
    pub unstable_for_all_lambda: bool,
}

/// Maximum of `|Psi|` over theta: a 4096-point scan refined by
/// golden-section search around the grid argmax.
pub fn max_amplification(scheme: &LinearizedScheme, lambda: f64) -> AmplificationReport {
    let modulus = |theta: f64| symbol(scheme, lambda, theta).norm();
    let (argmax_theta, max_modulus) = grid_refine_max(&modulus);
    let unstable_for_all_lambda =
        scheme.is_antisymmetric() && scheme.coefficients().iter().any(|&a| a != 0.0);
    AmplificationReport {
        lambda,
        max_modulus,
        argmax_theta,
        unstable_for_all_lambda,
    }
}

/// Certificate that forward Euler amplifies for every positive lambda.
#[derive(Debug, Clone, Copy, PartialEq)]
pub struct InstabilityCertificate {
    pub unstable: bool,
    /// A frequency where the sine sum is nonzero, when one exists.
    pub witness_theta: Option<f64>,
    /// The sine sum at the witness; `|Psi|^2 = 1 + 4 lambda^2 (sine_sum)^2`.
    pub sine_sum: f64,
}

/// For a scheme in antisymmetric normal form, finds a witness frequency
/// `theta*` with `sum alpha_l sin(l theta*) != 0`, which makes
/// `|Psi(theta*)| > 1` for every positive lambda. Returns `unstable = false`
/// only when every coefficient is zero. Non-antisymmetric schemes are a
/// domain error: their stability depends on lambda and belongs to
/// [`max_stable_cfl`].
pub fn certify_fe_instability(scheme: &LinearizedScheme) -> Result<InstabilityCertificate> {
    if !scheme.is_antisymmetric() {
        return Err(Error::Domain(
            "instability certificate requires the antisymmetric normal form".into(),
        ));
    }
    if scheme.coefficients().iter().all(|&a| a == 0.0) {
        return Ok(InstabilityCertificate {
            unstable: false,
            witness_theta: None,
            sine_sum: 0.0,
        });
    }
    let objective = |theta: f64| scheme.sine_sum(theta).abs();
    let (theta, value) = grid_refine_max(&objective);
    debug_assert!(value > 0.0, "nonzero coefficients must excite some mode");
    Ok(InstabilityCertificate {
        unstable: true,
        witness_theta: Some(theta),
        sine_sum: scheme.sine_sum(theta),
    })
}

/// Supremum of the stable time-step ratios in `(0, 10]`, located by
/// bisection to 1e-6; zero when no ratio in `(1e-6, 10]` is stable. The
/// forward Euler stability region is star-shaped about the origin, so
/// stability is monotone in lambda and bisection is sound.
///
/// Antisymmetric schemes with a nonzero coefficient amplify for every
/// positive lambda (see [`certify_fe_instability`]), so they return 0
/// outright rather than letting the modulus tolerance admit a sliver of
/// tiny ratios.
pub fn max_stable_cfl(scheme: &LinearizedScheme) -> f64 {
    if scheme.is_antisymmetric() {
        return if scheme.coefficients().iter().all(|&a| a == 0.0) {
            LAMBDA_CAP
        } else {
            0.0
        };
    }
    let stable =
        |lambda: f64| max_amplification(scheme, lambda).max_modulus <= 1.0 + STABILITY_TOL;
    let mut lo = 1e-6;
    if !stable(lo) {
        return 0.0;
    }
    if stable(LAMBDA_CAP) {
        return LAMBDA_CAP;
    }
    let mut hi = LAMBDA_CAP;
    while hi - lo > 1e-6 {
        let mid = 0.5 * (lo + hi);
        if stable(mid) {
            lo = mid;
        } else {
            hi = mid;
        }
    }
    0.5 * (lo + hi)
}

/// Scans `THETA_GRID` points of `[0, 2pi)` and refines the best bracket by
/// golden-section search; returns `(argmax, max)`.
fn grid_refine_max(f: &dyn Fn(f64) -> f64) -> (f64, f64) {
    let two_pi = 2.0 * std::f64::consts::PI;
    let step = two_pi / THETA_GRID as f64;
    let mut best_i = 0;
    let mut best = f64::NEG_INFINITY;
    for i in 0..THETA_GRID {
        let v = f(i as f64 * step);
        if v > best {
            best = v;
            best_i = i;
        }
    }
    let center = best_i as f64 * step;
    let (mut a, mut b) = (center - step, center + step);
    let phi = (5f64.sqrt() - 1.0) / 2.0;
    let mut c = b - phi * (b - a);
    let mut d = a + phi * (b - a);
    let (mut fc, mut fd) = (f(c), f(d));
    while b - a > THETA_TOL {
        if fc > fd {
            b = d;
            d = c;
            fd = fc;
            c = b - phi * (b - a);
            fc = f(c);
        } else {
            a = c;
            c = d;
            fc = fd;
            d = a + phi * (b - a);
            fd = f(d);
        }
    }
    let theta = 0.5 * (a + b);
    let theta = theta.rem_euclid(two_pi);
    (theta, f(theta).max(best))
}
