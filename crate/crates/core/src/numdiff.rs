//! Scalar finite-difference derivatives with Richardson extrapolation.
//!
//! Used as the independent numerical oracle against analytic derivative
//! engines: the s-th central difference has even-power error terms, so a
//! Neville table over a halving step sequence squeezes them out. The best
//! diagonal entry is chosen by the smallest internal discrepancy, which also
//! yields an error estimate.

/// s-th order central difference with step `h`:
/// `delta^s g (x) / h^s` over the symmetric offsets `s/2 - k`.
pub fn central_difference(g: &dyn Fn(f64) -> f64, x: f64, order: usize, h: f64) -> f64 {
    let s = order;
    let mut acc = 0.0;
    for k in 0..=s {
        let w = binomial(s, k) * if k % 2 == 0 { 1.0 } else { -1.0 };
        let offset = s as f64 / 2.0 - k as f64;
        acc += w * g(x + offset * h);
    }
    acc / h.powi(s as i32)
}

/// Result of a Richardson-extrapolated derivative.
#[derive(Debug, Clone, Copy)]
pub struct DerivativeEstimate {
    pub value: f64,
    pub error_estimate: f64,
}

/// Richardson extrapolation of [`central_difference`] toward `h -> 0`.
///
/// Evaluates at steps `finest_h * 2^(levels - i)` for `i = 0..=levels`
/// (coarsest first, `finest_h` last) and extrapolates along the diagonal of
/// the Neville table; errors shrink as `h^2` per level while rounding grows,
/// so the returned entry is the diagonal value with the smallest discrepancy
/// against its neighbors.
pub fn richardson_derivative(
    g: &dyn Fn(f64) -> f64,
    x: f64,
    order: usize,
    finest_h: f64,
    levels: usize,
) -> DerivativeEstimate {
    assert!(finest_h > 0.0 && finest_h.is_finite());
    let rows = levels + 1;
    let mut table: Vec<Vec<f64>> = Vec::with_capacity(rows);
    let mut best = DerivativeEstimate {
        value: f64::NAN,
        error_estimate: f64::INFINITY,
    };
    for i in 0..rows {
        let h = finest_h * (1u64 << (levels - i)) as f64;
        let mut row = vec![central_difference(g, x, order, h)];
        for j in 1..=i {
            let factor = 4f64.powi(j as i32);
            let extrapolated = (factor * row[j - 1] - table[i - 1][j - 1]) / (factor - 1.0);
            row.push(extrapolated);
        }
        if i > 0 {
            let diag = row[i];
            let estimate =
                (diag - table[i - 1][i - 1]).abs().max((diag - row[i - 1]).abs());
            if estimate <= best.error_estimate {
                best = DerivativeEstimate {
                    value: diag,
                    error_estimate: estimate,
                };
            }
        } else {
            best.value = row[0];
        }
        table.push(row);
    }
    best
}

fn binomial(n: usize, k: usize) -> f64 {
    let mut acc = 1.0;
    for i in 0..k {
        acc = acc * (n - i) as f64 / (i + 1) as f64;
    }
    acc
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn low_order_derivatives_of_sine() {
        let g = |x: f64| x.sin();
        let x = 0.8;
        let d1 = richardson_derivative(&g, x, 1, 1e-2, 3);
        assert!((d1.value - x.cos()).abs() < 1e-10);
        let d2 = richardson_derivative(&g, x, 2, 1e-2, 3);
        assert!((d2.value + x.sin()).abs() < 1e-9);
    }

    #[test]
    fn fifth_derivative_of_exp() {
        let g = |x: f64| (2.0 * x).exp();
        let x = 0.1f64;
        let exact = 32.0 * (2.0 * x).exp();
        let d5 = richardson_derivative(&g, x, 5, 2e-2, 3);
        assert!(
            (d5.value - exact).abs() / exact < 1e-7,
            "value {}, exact {exact}",
            d5.value
        );
    }

    #[test]
    fn error_estimate_brackets_the_truth() {
        let g = |x: f64| (x.sin() * x.cos()).exp();
        let x = 0.3;
        let est = richardson_derivative(&g, x, 3, 1e-2, 3);
        let tight = richardson_derivative(&g, x, 3, 5e-3, 4);
        assert!((est.value - tight.value).abs() <= 10.0 * est.error_estimate.max(1e-12));
    }

    #[test]
    fn polynomials_are_differentiated_exactly() {
        // delta^2 of a cubic has no truncation error at all.
        let g = |x: f64| x * x * x - 2.0 * x;
        let d2 = central_difference(&g, 0.7, 2, 0.1);
        assert!((d2 - 6.0 * 0.7).abs() < 1e-10);
    }
}
