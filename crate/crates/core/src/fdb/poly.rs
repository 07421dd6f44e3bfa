//! Polynomial arithmetic over a generic scalar.
//!
//! Small dense univariate polynomials and sparse multivariate polynomials;
//! enough for exact derivative tensors and curve jets.

use super::tensor::Scalar;

/// Univariate polynomial with ascending coefficients.
#[derive(Debug, Clone, PartialEq)]
pub struct UniPoly<T> {
    coeffs: Vec<T>,
}

impl<T: Scalar> UniPoly<T> {
    pub fn new(coeffs: Vec<T>) -> Self {
        let mut p = Self { coeffs };
        p.trim();
        p
    }

    pub fn zero() -> Self {
        Self { coeffs: Vec::new() }
    }

    pub fn constant(c: T) -> Self {
        Self::new(vec![c])
    }

    pub fn coeffs(&self) -> &[T] {
        &self.coeffs
    }

    pub fn degree(&self) -> Option<usize> {
        self.coeffs.len().checked_sub(1)
    }

    fn trim(&mut self) {
        while self.coeffs.last().is_some_and(|c| *c == T::zero()) {
            self.coeffs.pop();
        }
    }

    pub fn eval(&self, x: &T) -> T {
        let mut acc = T::zero();
        for c in self.coeffs.iter().rev() {
            acc = acc * x.clone() + c.clone();
        }
        acc
    }

    pub fn derivative(&self) -> Self {
        let coeffs = self
            .coeffs
            .iter()
            .enumerate()
            .skip(1)
            .map(|(k, c)| c.clone() * T::from_int(k as i64))
            .collect();
        Self::new(coeffs)
    }

    /// k-th derivative.
    pub fn derivative_n(&self, k: usize) -> Self {
        let mut p = self.clone();
        for _ in 0..k {
            p = p.derivative();
        }
        p
    }

    pub fn add(&self, other: &Self) -> Self {
        let n = self.coeffs.len().max(other.coeffs.len());
        let coeffs = (0..n)
            .map(|i| {
                let a = self.coeffs.get(i).cloned().unwrap_or_else(T::zero);
                let b = other.coeffs.get(i).cloned().unwrap_or_else(T::zero);
                a + b
            })
            .collect();
        Self::new(coeffs)
    }

    pub fn mul(&self, other: &Self) -> Self {
        if self.coeffs.is_empty() || other.coeffs.is_empty() {
            return Self::zero();
        }
        let mut coeffs = vec![T::zero(); self.coeffs.len() + other.coeffs.len() - 1];
        for (i, a) in self.coeffs.iter().enumerate() {
            for (j, b) in other.coeffs.iter().enumerate() {
                coeffs[i + j] = coeffs[i + j].clone() + a.clone() * b.clone();
            }
        }
        Self::new(coeffs)
    }

    pub fn scale(&self, factor: &T) -> Self {
        Self::new(
            self.coeffs
                .iter()
                .map(|c| c.clone() * factor.clone())
                .collect(),
        )
    }

    pub fn pow(&self, k: usize) -> Self {
        let mut acc = Self::constant(T::one());
        for _ in 0..k {
            acc = acc.mul(self);
        }
        acc
    }
}

/// Sparse multivariate polynomial in `n` variables.
#[derive(Debug, Clone, PartialEq)]
pub struct MultiPoly<T> {
    n: usize,
    terms: Vec<(T, Vec<u32>)>,
}

impl<T: Scalar> MultiPoly<T> {
    /// Builds from `(coefficient, exponent vector)` terms, combining
    /// duplicates and dropping zeros.
    pub fn new(n: usize, terms: Vec<(T, Vec<u32>)>) -> Self {
        let mut combined: Vec<(T, Vec<u32>)> = Vec::new();
        for (c, e) in terms {
            assert_eq!(e.len(), n, "exponent vector length mismatch");
            match combined.iter_mut().find(|(_, f)| *f == e) {
                Some((acc, _)) => *acc = acc.clone() + c,
                None => combined.push((c, e)),
            }
        }
        combined.retain(|(c, _)| *c != T::zero());
        combined.sort_by(|a, b| a.1.cmp(&b.1));
        Self { n, terms: combined }
    }

    pub fn zero(n: usize) -> Self {
        Self {
            n,
            terms: Vec::new(),
        }
    }

    pub fn constant(n: usize, c: T) -> Self {
        Self::new(n, vec![(c, vec![0; n])])
    }

    pub fn vars(&self) -> usize {
        self.n
    }

    pub fn terms(&self) -> &[(T, Vec<u32>)] {
        &self.terms
    }

    pub fn eval(&self, u: &[T]) -> T {
        assert_eq!(u.len(), self.n, "evaluation point dimension mismatch");
        let mut acc = T::zero();
        for (c, e) in &self.terms {
            let mut term = c.clone();
            for (x, &k) in u.iter().zip(e) {
                for _ in 0..k {
                    term = term * x.clone();
                }
            }
            acc = acc + term;
        }
        acc
    }

    /// Partial derivative with respect to variable `i`.
    pub fn partial(&self, i: usize) -> Self {
        assert!(i < self.n);
        let terms = self
            .terms
            .iter()
            .filter(|(_, e)| e[i] > 0)
            .map(|(c, e)| {
                let mut e2 = e.clone();
                e2[i] -= 1;
                (c.clone() * T::from_int(e[i] as i64), e2)
            })
            .collect();
        Self::new(self.n, terms)
    }

    pub fn add(&self, other: &Self) -> Self {
        assert_eq!(self.n, other.n);
        let mut terms = self.terms.clone();
        terms.extend(other.terms.iter().cloned());
        Self::new(self.n, terms)
    }

    pub fn mul(&self, other: &Self) -> Self {
        assert_eq!(self.n, other.n);
        let mut terms = Vec::new();
        for (a, e) in &self.terms {
            for (b, f) in &other.terms {
                let exps = e.iter().zip(f).map(|(x, y)| x + y).collect();
                terms.push((a.clone() * b.clone(), exps));
            }
        }
        Self::new(self.n, terms)
    }
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn unipoly_eval_and_derivative() {
        // p(x) = 1 + 2x + 3x^2, p'(x) = 2 + 6x.
        let p = UniPoly::new(vec![1.0, 2.0, 3.0]);
        assert_eq!(p.eval(&2.0), 17.0);
        assert_eq!(p.derivative().coeffs(), &[2.0, 6.0]);
        assert_eq!(p.derivative_n(3).coeffs(), &[] as &[f64]);
    }

    #[test]
    fn unipoly_product() {
        // (1 + x)(1 - x) = 1 - x^2.
        let a = UniPoly::new(vec![1.0, 1.0]);
        let b = UniPoly::new(vec![1.0, -1.0]);
        assert_eq!(a.mul(&b).coeffs(), &[1.0, 0.0, -1.0]);
    }

    #[test]
    fn multipoly_partials() {
        // f = x0^2 x1 + 3 x1; df/dx0 = 2 x0 x1; df/dx1 = x0^2 + 3.
        let f = MultiPoly::new(2, vec![(1.0, vec![2, 1]), (3.0, vec![0, 1])]);
        assert_eq!(f.eval(&[2.0, 5.0]), 35.0);
        assert_eq!(f.partial(0).eval(&[2.0, 5.0]), 20.0);
        assert_eq!(f.partial(1).eval(&[2.0, 5.0]), 7.0);
    }

    #[test]
    fn multipoly_combines_duplicates() {
        let f = MultiPoly::new(1, vec![(1.0, vec![2]), (2.0, vec![2]), (-3.0, vec![2])]);
        assert_eq!(f.terms().len(), 0);
    }
}
