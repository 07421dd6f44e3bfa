//! Periodic nodal grid functions on `[0, 2pi)`.

/// Nodal values `v_j ~ u(x_j)` at `x_j = j * h`, `h = 2pi / N`, with
/// periodic indexing.
#[derive(Debug, Clone, PartialEq)]
pub struct GridFunction {
    values: Vec<f64>,
    h: f64,
}

impl GridFunction {
    pub fn from_values(values: Vec<f64>) -> Self {
        assert!(!values.is_empty(), "empty grid");
        let h = 2.0 * std::f64::consts::PI / values.len() as f64;
        Self { values, h }
    }

    pub fn from_fn(n: usize, f: impl Fn(f64) -> f64) -> Self {
        let h = 2.0 * std::f64::consts::PI / n as f64;
        Self {
            values: (0..n).map(|j| f(j as f64 * h)).collect(),
            h,
        }
    }

    pub fn zeros(n: usize) -> Self {
        Self::from_values(vec![0.0; n])
    }

    pub fn len(&self) -> usize {
        self.values.len()
    }

    pub fn is_empty(&self) -> bool {
        self.values.is_empty()
    }

    pub fn h(&self) -> f64 {
        self.h
    }

    pub fn x(&self, j: usize) -> f64 {
        j as f64 * self.h
    }

    pub fn values(&self) -> &[f64] {
        &self.values
    }

    pub fn values_mut(&mut self) -> &mut [f64] {
        &mut self.values
    }

    /// Periodic access: any signed index wraps into the grid.
    pub fn wrap(&self, j: isize) -> f64 {
        let n = self.values.len() as isize;
        self.values[j.rem_euclid(n) as usize]
    }

    pub fn max_norm(&self) -> f64 {
        self.values.iter().fold(0.0, |m, v| m.max(v.abs()))
    }

    /// Discrete L2 norm `sqrt(h * sum v_j^2)`.
    pub fn two_norm(&self) -> f64 {
        (self.h * self.values.iter().map(|v| v * v).sum::<f64>()).sqrt()
    }

    /// Index of the first non-finite value, if any.
    pub fn first_nonfinite(&self) -> Option<usize> {
        self.values.iter().position(|v| !v.is_finite())
    }

    /// `self + factor * other`, elementwise.
    pub fn axpy(&self, factor: f64, other: &GridFunction) -> GridFunction {
        assert_eq!(self.len(), other.len());
        GridFunction {
            values: self
                .values
                .iter()
                .zip(&other.values)
                .map(|(a, b)| a + factor * b)
                .collect(),
            h: self.h,
        }
    }

    /// Convex-type combination `ca * self + cb * other`.
    pub fn combine(&self, ca: f64, cb: f64, other: &GridFunction) -> GridFunction {
        assert_eq!(self.len(), other.len());
        GridFunction {
            values: self
                .values
                .iter()
                .zip(&other.values)
                .map(|(a, b)| ca * a + cb * b)
                .collect(),
            h: self.h,
        }
    }
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn spacing_and_sampling() {
        let g = GridFunction::from_fn(8, |x| x);
        assert!((g.h() - std::f64::consts::PI / 4.0).abs() < 1e-15);
        assert_eq!(g.values()[0], 0.0);
        assert!((g.values()[4] - std::f64::consts::PI).abs() < 1e-15);
    }

    #[test]
    fn wrap_is_periodic() {
        let g = GridFunction::from_values(vec![10.0, 20.0, 30.0]);
        assert_eq!(g.wrap(-1), 30.0);
        assert_eq!(g.wrap(3), 10.0);
        assert_eq!(g.wrap(-4), 30.0);
    }

    #[test]
    fn norms() {
        let g = GridFunction::from_values(vec![3.0, -4.0]);
        assert_eq!(g.max_norm(), 4.0);
        let expect = (g.h() * 25.0).sqrt();
        assert!((g.two_norm() - expect).abs() < 1e-15);
    }

    #[test]
    fn detects_nonfinite() {
        let mut g = GridFunction::zeros(4);
        assert_eq!(g.first_nonfinite(), None);
        g.values_mut()[2] = f64::NAN;
        assert_eq!(g.first_nonfinite(), Some(2));
    }
}
