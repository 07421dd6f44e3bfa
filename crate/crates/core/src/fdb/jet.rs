//! Jets: derivative access for functions and curves, and the scaled
//! derivative-column matrices they induce.

use super::partition::Partition;
use super::poly::{MultiPoly, UniPoly};
use super::tensor::{ColMatrix, Scalar, Tensor};
use crate::error::{Error, Result};

/// A function `f: R^n -> R` together with access to its derivative tensors
/// `f^{(k)}`, supplied analytically or approximated.
pub trait JetFunction<T: Scalar> {
    fn dim(&self) -> usize;

    fn eval(&self, u: &[T]) -> T;

    /// The order-`k` derivative tensor at `u`; entries are the mixed partials
    /// `d^k f / du_{i1} ... du_{ik}`. Must be symmetric in its indices.
    fn derivative_tensor(&self, u: &[T], k: usize) -> Result<Tensor<T>>;
}

/// A curve `u: R -> R^n` with nodal derivative access; `j = 0` is the point.
pub trait CurveJet<T: Scalar> {
    fn dim(&self) -> usize;

    fn derivative(&self, x: &T, j: usize) -> Result<Vec<T>>;

    fn eval(&self, x: &T) -> Result<Vec<T>> {
        self.derivative(x, 0)
    }
}

/// The `n x |m|` matrix whose column block `j` repeats `u^(j)(x) / j!`
/// exactly `m_j` times; part sizes with `m_j = 0` contribute no columns.
pub fn build_dm<T: Scalar>(u: &dyn CurveJet<T>, x: &T, m: &Partition) -> Result<ColMatrix<T>> {
    let mut columns = Vec::with_capacity(m.order());
    for j in 1..=m.weight() {
        let mj = m.count(j);
        if mj == 0 {
            continue;
        }
        let deriv = u.derivative(x, j)?;
        let scale = T::one() / T::from_bigint(&factorial_big(j));
        let column: Vec<T> = deriv.into_iter().map(|v| v * scale.clone()).collect();
        for _ in 0..mj {
            columns.push(column.clone());
        }
    }
    ColMatrix::from_columns(columns)
}

fn factorial_big(n: usize) -> num_bigint::BigInt {
    use num_traits::One;
    let mut acc = num_bigint::BigInt::one();
    for k in 2..=n {
        acc *= k;
    }
    acc
}

impl<T: Scalar> JetFunction<T> for MultiPoly<T> {
    fn dim(&self) -> usize {
        self.vars()
    }

    fn eval(&self, u: &[T]) -> T {
        MultiPoly::eval(self, u)
    }

    fn derivative_tensor(&self, u: &[T], k: usize) -> Result<Tensor<T>> {
        let n = self.vars();
        // Entries along a depth-first index walk share derivative prefixes,
        // but at these sizes a per-entry recompute is fine.
        Tensor::from_fn(k, n, |idx| {
            let mut p = self.clone();
            for &i in idx {
                p = p.partial(i);
            }
            p.eval(u)
        })
    }
}

/// `exp(g(u))` for a polynomial exponent `g`; derivative tensors are exact.
///
/// Each mixed partial is `p(u) * exp(g(u))` where `p` accumulates via
/// `p -> dp/du_i + p * dg/du_i`.
pub struct ExpOfPoly {
    exponent: MultiPoly<f64>,
}

impl ExpOfPoly {
    pub fn new(exponent: MultiPoly<f64>) -> Self {
        Self { exponent }
    }
}

impl JetFunction<f64> for ExpOfPoly {
    fn dim(&self) -> usize {
        self.exponent.vars()
    }

    fn eval(&self, u: &[f64]) -> f64 {
        self.exponent.eval(u).exp()
    }

    fn derivative_tensor(&self, u: &[f64], k: usize) -> Result<Tensor<f64>> {
        let n = self.exponent.vars();
        let base = self.eval(u);
        Tensor::from_fn(k, n, |idx| {
            let mut p = MultiPoly::constant(n, 1.0);
            for &i in idx {
                p = p.partial(i).add(&p.mul(&self.exponent.partial(i)));
            }
            p.eval(u) * base
        })
    }
}

/// Black-box fallback: derivative tensors by nested central differences,
/// one level per differentiation, with a fixed step per level. Accuracy
/// degrades roughly as `step^(-k) * eps`, so this is only good for low
/// orders and smoke checks; supply analytic jets where precision matters.
pub struct FiniteDifferenceJet<F> {
    dim: usize,
    f: F,
    step: f64,
}

impl<F: Fn(&[f64]) -> f64> FiniteDifferenceJet<F> {
    pub fn new(dim: usize, f: F) -> Self {
        Self {
            dim,
            f,
            step: 1e-3,
        }
    }

    pub fn with_step(dim: usize, f: F, step: f64) -> Self {
        Self { dim, f, step }
    }

    fn nested(&self, idx: &[usize], u: &[f64]) -> f64 {
        match idx.split_first() {
            None => (self.f)(u),
            Some((&i, rest)) => {
                let mut up = u.to_vec();
                let mut dn = u.to_vec();
                up[i] += self.step;
                dn[i] -= self.step;
                (self.nested(rest, &up) - self.nested(rest, &dn)) / (2.0 * self.step)
            }
        }
    }
}

impl<F: Fn(&[f64]) -> f64> JetFunction<f64> for FiniteDifferenceJet<F> {
    fn dim(&self) -> usize {
        self.dim
    }

    fn eval(&self, u: &[f64]) -> f64 {
        (self.f)(u)
    }

    fn derivative_tensor(&self, u: &[f64], k: usize) -> Result<Tensor<f64>> {
        Tensor::from_fn(k, self.dim, |idx| self.nested(idx, u))
    }
}

/// Polynomial curve: one univariate polynomial per component.
#[derive(Debug, Clone)]
pub struct PolyCurve<T> {
    components: Vec<UniPoly<T>>,
}

impl<T: Scalar> PolyCurve<T> {
    pub fn new(components: Vec<UniPoly<T>>) -> Self {
        Self { components }
    }

    pub fn components(&self) -> &[UniPoly<T>] {
        &self.components
    }
}

impl<T: Scalar> CurveJet<T> for PolyCurve<T> {
    fn dim(&self) -> usize {
        self.components.len()
    }

    fn derivative(&self, x: &T, j: usize) -> Result<Vec<T>> {
        Ok(self
            .components
            .iter()
            .map(|p| p.derivative_n(j).eval(x))
            .collect())
    }
}

/// Curve with caller-supplied analytic derivatives `(x, j) -> u^(j)(x)`,
/// available up to `max_order`.
pub struct AnalyticCurve<F> {
    dim: usize,
    max_order: usize,
    derivs: F,
}

impl<F: Fn(f64, usize) -> Vec<f64>> AnalyticCurve<F> {
    pub fn new(dim: usize, max_order: usize, derivs: F) -> Self {
        Self {
            dim,
            max_order,
            derivs,
        }
    }
}

impl<F: Fn(f64, usize) -> Vec<f64>> CurveJet<f64> for AnalyticCurve<F> {
    fn dim(&self) -> usize {
        self.dim
    }

    fn derivative(&self, x: &f64, j: usize) -> Result<Vec<f64>> {
        if j > self.max_order {
            return Err(Error::Capability(format!(
                "curve provides derivatives up to order {}, requested {j}",
                self.max_order
            )));
        }
        let v = (self.derivs)(*x, j);
        assert_eq!(v.len(), self.dim, "curve derivative dimension mismatch");
        Ok(v)
    }
}
