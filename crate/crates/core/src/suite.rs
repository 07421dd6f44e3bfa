//! The built-in verification battery.
//!
//! Nine checks with pinned tolerances covering the whole crate: exact
//! barrier certificates, symmetry consequences of maximal order,
//! unconditional forward-Euler instability (certified and realized in
//! simulation), determinant identities, composition derivatives against an
//! independent difference oracle, the recursion/multinomial identity,
//! attained order 2r-1 of biased and WENO schemes, the upwind CFL boundary,
//! and a cross-module Fourier consistency check. Used by the `acceptance`
//! test target and the CLI `paper-suite` subcommand.

use std::time::Instant;

use num_complex::Complex64;
use rand::{Rng, SeedableRng};
use rand_chacha::ChaCha8Rng;

use crate::fdb::{
    enumerate_partitions, fdb_derivative, multinomial, recursion_coefficients, AnalyticCurve,
    CurveJet, ExpOfPoly, MultiPoly, PolyCurve, UniPoly,
};
use crate::linalg::verify_determinant_identities;
use crate::numdiff::richardson_derivative;
use crate::order::{barrier_demonstration, max_order_stencil, order2r_consequences,
                   BarrierConclusion};
use crate::pde::{
    convergence_study, evolve, step_fe, GridFunction, IntegratorSpec, Problem, SchemeSpec,
    TimeStepRule,
};
use crate::rational::{rat_int, Rational};
use crate::stability::{certify_fe_instability, linearize, max_stable_cfl, symbol};

/// Outcome of one criterion.
#[derive(Debug, Clone)]
pub struct CriterionResult {
    pub id: usize,
    pub name: &'static str,
    pub passed: bool,
    /// Human-readable measured values.
    pub measured: String,
    /// The pinned tolerance the measurement is held to.
    pub tolerance: &'static str,
    pub elapsed_ms: u128,
}

impl CriterionResult {
    pub fn status(&self) -> &'static str {
        if self.passed {
            "PASS"
        } else {
            "FAIL"
        }
    }
}

/// Number of criteria in the battery.
pub const CRITERIA: usize = 9;

/// Runs the whole battery; individual failures are collected, never abort
/// the suite.
pub fn run_all(seed: u64) -> Vec<CriterionResult> {
    (1..=CRITERIA).map(|id| run_criterion(id, seed)).collect()
}

/// Runs a single criterion by its 1-based id.
pub fn run_criterion(id: usize, seed: u64) -> CriterionResult {
    let start = Instant::now();
    let mut result = match id {
        1 => barrier_sharpness(),
        2 => max_order_symmetry(),
        3 => fe_instability(),
        4 => determinant_identities(seed),
        5 => composition_derivatives(seed),
        6 => recursion_multinomial(),
        7 => biased_schemes_attain_order(),
        8 => upwind_cfl_boundary(),
        9 => fourier_cross_check(seed),
        other => panic!("criterion ids are 1..={CRITERIA}, got {other}"),
    };
    result.elapsed_ms = start.elapsed().as_millis();
    // Criteria with pinned runtime budgets (exact checks must stay cheap);
    // criterion 7 bounds each study separately inside its own body.
    let budget_ms = match id {
        1 => Some(1_000),
        4 => Some(5_000),
        _ => None,
    };
    if let Some(budget) = budget_ms {
        if result.elapsed_ms > budget {
            result.passed = false;
            result.measured = format!(
                "{} [exceeded the {budget} ms runtime budget: {} ms]",
                result.measured, result.elapsed_ms
            );
        }
    }
    result
}

fn barrier_sharpness() -> CriterionResult {
    let mut passed = true;
    let mut notes = Vec::new();
    for r in 1..=5usize {
        let cert = match barrier_demonstration(r) {
            Ok(c) => c,
            Err(e) => {
                passed = false;
                notes.push(format!("r={r}: {e}"));
                continue;
            }
        };
        if cert.conclusion != BarrierConclusion::InconsistentWithAdvection {
            passed = false;
            notes.push(format!("r={r}: conclusion {:?}", cert.conclusion));
        }
        if cert.homogeneous_det != cert.closed_form_det || cert.homogeneous_det == rat_int(0) {
            passed = false;
            notes.push(format!("r={r}: determinant mismatch"));
        }
        let stencil = match max_order_stencil(r) {
            Ok(s) => s,
            Err(e) => {
                passed = false;
                notes.push(format!("r={r}: {e}"));
                continue;
            }
        };
        let moments = stencil.moments(2 * r + 1);
        for (k, m) in moments.iter().enumerate().take(2 * r + 1) {
            let target = if k == 1 { rat_int(1) } else { rat_int(0) };
            if *m != target {
                passed = false;
                notes.push(format!("r={r}: M_{k} = {m}"));
            }
        }
        if moments[2 * r + 1] == rat_int(0) {
            passed = false;
            notes.push(format!("r={r}: M_{} vanishes", 2 * r + 1));
        }
    }
    CriterionResult {
        id: 1,
        name: "order barrier is sharp (certificates and moments, r = 1..5)",
        passed,
        measured: if notes.is_empty() {
            "all certificates inconsistent_with_advection; moments exact".into()
        } else {
            notes.join("; ")
        },
        tolerance: "exact rational equality; runtime < 1 s",
        elapsed_ms: 0,
    }
}

fn max_order_symmetry() -> CriterionResult {
    let mut passed = true;
    let mut notes = Vec::new();
    for r in 1..=5usize {
        match max_order_stencil(r).and_then(|s| order2r_consequences(&s)) {
            Ok(report) => {
                if !(report.antisymmetric && report.c0_zero) {
                    passed = false;
                    notes.push(format!("r={r}: {report:?}"));
                }
            }
            Err(e) => {
                passed = false;
                notes.push(format!("r={r}: {e}"));
            }
        }
    }
    CriterionResult {
        id: 2,
        name: "order 2r forces antisymmetry and a vanishing center",
        passed,
        measured: if notes.is_empty() {
            "c_{-l} = -c_l and c_0 = 0 exactly for r = 1..5".into()
        } else {
            notes.join("; ")
        },
        tolerance: "exact rational equality",
        elapsed_ms: 0,
    }
}

fn fe_instability() -> CriterionResult {
    let mut passed = true;
    let mut notes = Vec::new();

    for r in 1..=5usize {
        let cert = max_order_stencil(r)
            .and_then(|s| linearize(&s.to_f64()))
            .and_then(|l| certify_fe_instability(&l));
        match cert {
            Ok(c) if c.unstable && c.witness_theta.is_some() => {}
            Ok(c) => {
                passed = false;
                notes.push(format!("r={r}: no witness ({c:?})"));
            }
            Err(e) => {
                passed = false;
                notes.push(format!("r={r}: {e}"));
            }
        }
    }

    // Realization: a 100-step run on a single mode must grow per step at
    // the rate the symbol predicts, within 5%. The faster-growing rounding
    // modes cap how long the data mode stays measurable: for r = 2 at
    // ratio 1 the argmax mode amplifies by ~1.7 per step and noise seeded
    // at 1e-16 overtakes the signal before step 100, so that pairing is
    // excluded from the measurement.
    let n = 128usize;
    let mut worst_rel = 0.0f64;
    for (r, cfls) in [(1usize, &[0.1, 0.5, 1.0][..]), (2, &[0.1, 0.5][..])] {
        let stencil = max_order_stencil(r).expect("small radius");
        let scheme = SchemeSpec::linear_stencil(&stencil);
        let linear = linearize(&stencil.to_f64()).expect("consistent");
        for &cfl in cfls {
            let h = 2.0 * std::f64::consts::PI / n as f64;
            let steps = 100usize;
            let problem = Problem::new("advection", |_| 1.0, f64::sin, steps as f64 * cfl * h);
            let integrator = IntegratorSpec::forward_euler(cfl);
            let run = match evolve(&scheme, &problem, &integrator, n) {
                Ok(run) => run,
                Err(e) => {
                    passed = false;
                    notes.push(format!("r={r}, cfl={cfl}: {e}"));
                    continue;
                }
            };
            if run.series.len() != steps + 1 {
                passed = false;
                notes.push(format!(
                    "r={r}, cfl={cfl}: expected {steps} steps, took {}",
                    run.series.len() - 1
                ));
                continue;
            }
            let growth =
                (run.series[steps].two_norm / run.series[0].two_norm).powf(1.0 / steps as f64);
            let predicted = symbol(&linear, cfl, h).norm();
            let rel = (growth / predicted - 1.0).abs();
            worst_rel = worst_rel.max(rel);
            if rel > 0.05 {
                passed = false;
                notes.push(format!(
                    "r={r}, cfl={cfl}: growth {growth:.6} vs symbol {predicted:.6}"
                ));
            }
        }
    }

    CriterionResult {
        id: 3,
        name: "forward Euler at order 2r is unstable for every ratio",
        passed,
        measured: if notes.is_empty() {
            format!("witnesses found for r = 1..5; worst growth mismatch {worst_rel:.2e}")
        } else {
            notes.join("; ")
        },
        tolerance: "growth within 5% of the symbol after 100 steps",
        elapsed_ms: 0,
    }
}

fn determinant_identities(seed: u64) -> CriterionResult {
    match verify_determinant_identities(8, 500, seed) {
        Ok(report) => CriterionResult {
            id: 4,
            name: "closed-form determinants match the fraction-free oracle",
            passed: report.all_ok(),
            measured: format!(
                "lemma1_ok = {}, lemma2_ok = {} over {} trials",
                report.lemma1_ok, report.lemma2_ok, report.trials
            ),
            tolerance: "exact equality on 500 random inputs each, n <= 8; runtime < 5 s",
            elapsed_ms: 0,
        },
        Err(e) => CriterionResult {
            id: 4,
            name: "closed-form determinants match the fraction-free oracle",
            passed: false,
            measured: e.to_string(),
            tolerance: "exact equality on 500 random inputs each, n <= 8; runtime < 5 s",
            elapsed_ms: 0,
        },
    }
}

/// One accepted random composition case: the engine value against the
/// difference oracle, plus the outcome of the exact rational route when the
/// case was polynomial.
struct CompositionCase {
    rel_error: f64,
    exact_checked: bool,
    exact_ok: bool,
}

/// Draws one random composition case of weight `s` in `n` variables;
/// `None` when the case is rejected (ill-conditioned oracle target or a
/// capability gap).
fn draw_composition_case(rng: &mut ChaCha8Rng, n: usize, s: usize) -> Option<CompositionCase> {
    let x = rng.random_range(0.2..1.1);
    let case = rng.random_range(0..4u8);
    let mut exact_checked = false;
    let mut exact_ok = true;

    // Assemble the composite scalar function and its analytic jets.
    let (value, oracle_g): (f64, Box<dyn Fn(f64) -> f64>) = match case {
        0 | 1 => {
            // Polynomial function of a polynomial curve.
            let f_int = random_int_poly(rng, n);
            let u_int = random_int_curve(rng, n);
            let f: MultiPoly<f64> = int_poly_to(&f_int);
            let u = PolyCurve::new(u_int.iter().map(|c| int_unipoly_to::<f64>(c)).collect());
            let value = fdb_derivative(&f, &u, &x, s).ok()?;

            // Exact rational route against the symbolic composition.
            let fq: MultiPoly<Rational> = int_poly_to(&f_int);
            let uq: Vec<UniPoly<Rational>> =
                u_int.iter().map(|c| int_unipoly_to::<Rational>(c)).collect();
            let xq = Rational::new(num_bigint::BigInt::from(1), num_bigint::BigInt::from(3))
                * rat_int(rng.random_range(1..=3));
            let curve_q = PolyCurve::new(uq.clone());
            let got_q = fdb_derivative(&fq, &curve_q, &xq, s).expect("rational route");
            let composite = compose_polynomial(&fq, &uq);
            let expect_q = composite.derivative_n(s).eval(&xq);
            exact_checked = true;
            exact_ok = got_q == expect_q;

            let g = move |y: f64| f.eval(&u.derivative(&y, 0).expect("poly curve"));
            (value, Box::new(g))
        }
        2 => {
            // exp(polynomial) of a polynomial curve.
            let g_poly = random_small_poly(rng, n);
            let f = ExpOfPoly::new(g_poly.clone());
            let u_int = random_int_curve(rng, n);
            let u = PolyCurve::new(
                u_int
                    .iter()
                    .map(|c| int_unipoly_to::<f64>(c).scale(&0.5))
                    .collect(),
            );
            let value = fdb_derivative(&f, &u, &x, s).ok()?;
            let g = move |y: f64| g_poly.eval(&u.derivative(&y, 0).expect("poly curve")).exp();
            (value, Box::new(g))
        }
        _ => {
            // exp(polynomial) of a trigonometric curve.
            let g_poly = random_small_poly(rng, n);
            let f = ExpOfPoly::new(g_poly.clone());
            let amps: Vec<(f64, f64, f64)> = (0..n)
                .map(|_| {
                    (
                        rng.random_range(-1.0..1.0),
                        rng.random_range(-1.0..1.0),
                        rng.random_range(-0.5..0.5),
                    )
                })
                .collect();
            let amps2 = amps.clone();
            let u = AnalyticCurve::new(n, 8, move |y, j| {
                amps2
                    .iter()
                    .map(|&(a, b, c)| {
                        let (sj, cj) = match j % 4 {
                            0 => (y.sin(), y.cos()),
                            1 => (y.cos(), -y.sin()),
                            2 => (-y.sin(), -y.cos()),
                            _ => (-y.cos(), y.sin()),
                        };
                        a * sj + b * cj + if j == 0 { c } else { 0.0 }
                    })
                    .collect()
            });
            let value = fdb_derivative(&f, &u, &x, s).ok()?;
            let g = move |y: f64| {
                let point: Vec<f64> = amps
                    .iter()
                    .map(|&(a, b, c)| a * y.sin() + b * y.cos() + c)
                    .collect();
                g_poly.eval(&point).exp()
            };
            (value, Box::new(g))
        }
    };

    let oracle = richardson_derivative(&*oracle_g, x, s, 0.02, 3);
    // Keep only well-conditioned comparisons: a healthy target scale and a
    // trustworthy oracle estimate.
    if oracle.value.abs() < 0.5 || oracle.error_estimate > 1e-7 * oracle.value.abs() {
        return None;
    }
    Some(CompositionCase {
        rel_error: (value - oracle.value).abs() / oracle.value.abs(),
        exact_checked,
        exact_ok,
    })
}

fn composition_derivatives(seed: u64) -> CriterionResult {
    let mut rng = ChaCha8Rng::seed_from_u64(seed ^ 0x05ee_dfdb);
    let mut passed = true;
    let mut notes = Vec::new();
    let mut worst_rel = 0.0f64;
    let mut accepted = 0usize;
    let mut exact_checked = 0usize;
    let mut attempts = 0usize;

    while accepted < 50 && attempts < 2000 {
        attempts += 1;
        let n = rng.random_range(1..=3usize);
        let s = rng.random_range(1..=5usize);
        let Some(case) = draw_composition_case(&mut rng, n, s) else {
            continue;
        };
        accepted += 1;
        worst_rel = worst_rel.max(case.rel_error);
        if case.rel_error >= 1e-6 {
            passed = false;
            notes.push(format!("n={n}, s={s}: relative error {:.2e}", case.rel_error));
        }
        if case.exact_checked {
            exact_checked += 1;
            if !case.exact_ok {
                passed = false;
                notes.push(format!("exact mismatch (n={n}, s={s})"));
            }
        }
    }

    if accepted < 50 {
        passed = false;
        notes.push(format!("only {accepted} usable cases in {attempts} draws"));
    }

    CriterionResult {
        id: 5,
        name: "composition derivatives match an independent difference oracle",
        passed,
        measured: if notes.is_empty() {
            format!(
                "{accepted} cases, worst relative error {worst_rel:.2e}; \
                 {exact_checked} exact rational matches"
            )
        } else {
            notes.join("; ")
        },
        tolerance: "relative error < 1e-6; polynomial cases exact",
        elapsed_ms: 0,
    }
}

/// Spot check of the composition engine at a fixed weight, for the CLI:
/// partition count, worst relative error over accepted random cases, and
/// the recursion/multinomial identity at that weight.
#[derive(Debug, Clone)]
pub struct FdbSpotCheck {
    pub s: usize,
    pub partitions: usize,
    pub max_rel_error: f64,
    pub recursion_ok: bool,
    pub cases: usize,
}

pub fn fdb_spot_check(s: usize, trials: usize, seed: u64) -> crate::error::Result<FdbSpotCheck> {
    if s == 0 || s > 8 {
        return Err(crate::error::Error::Domain(format!(
            "spot-check weight must lie in 1..=8, got {s}"
        )));
    }
    let partitions = enumerate_partitions(s)?.len();

    let recursion_ok = {
        let map = recursion_coefficients(s)?;
        enumerate_partitions(s + 1)?
            .iter()
            .all(|m| map.get(m) == Some(&multinomial(m)))
    };

    let mut rng = ChaCha8Rng::seed_from_u64(seed ^ 0x05ee_dfdb);
    let mut max_rel_error = 0.0f64;
    let mut cases = 0usize;
    let mut attempts = 0usize;
    while cases < trials && attempts < 40 * trials.max(1) {
        attempts += 1;
        let n = rng.random_range(1..=3usize);
        if let Some(case) = draw_composition_case(&mut rng, n, s) {
            cases += 1;
            max_rel_error = max_rel_error.max(case.rel_error);
            if case.exact_checked && !case.exact_ok {
                max_rel_error = f64::INFINITY;
            }
        }
    }
    Ok(FdbSpotCheck {
        s,
        partitions,
        max_rel_error,
        recursion_ok,
        cases,
    })
}

fn recursion_multinomial() -> CriterionResult {
    let mut passed = true;
    let mut notes = Vec::new();
    for s in 1..=8usize {
        match (recursion_coefficients(s), enumerate_partitions(s + 1)) {
            (Ok(map), Ok(parts)) => {
                if map.len() != parts.len() {
                    passed = false;
                    notes.push(format!("s={s}: {} vs {} partitions", map.len(), parts.len()));
                }
                for m in parts {
                    if map.get(&m) != Some(&multinomial(&m)) {
                        passed = false;
                        notes.push(format!("s={s}: coefficient of {m} differs"));
                    }
                }
            }
            (Err(e), _) | (_, Err(e)) => {
                passed = false;
                notes.push(format!("s={s}: {e}"));
            }
        }
    }
    CriterionResult {
        id: 6,
        name: "successor recursion reproduces the multinomial coefficients",
        passed,
        measured: if notes.is_empty() {
            "all weights s <= 8: exact integer equality".into()
        } else {
            notes.join("; ")
        },
        tolerance: "exact integer equality",
        elapsed_ms: 0,
    }
}

fn biased_schemes_attain_order() -> CriterionResult {
    let n_list = [40usize, 80, 160, 320];
    let problem = Problem::advection(1.0);
    let mut passed = true;
    let mut notes = Vec::new();
    let mut measured = Vec::new();

    let mut run_study = |label: &str, spec: &SchemeSpec, integrator: &IntegratorSpec,
                         window: (f64, f64)| {
        let start = Instant::now();
        match convergence_study(spec, &problem, integrator, &n_list) {
            Ok(rows) => {
                let order = rows.last().and_then(|r| r.observed_order).unwrap_or(f64::NAN);
                measured.push(format!("{label}: {order:.3}"));
                if !(window.0..=window.1).contains(&order) {
                    passed = false;
                    notes.push(format!("{label} observed {order:.3}"));
                }
            }
            Err(e) => {
                passed = false;
                notes.push(format!("{label}: {e}"));
            }
        }
        let elapsed = start.elapsed().as_millis();
        if elapsed > 60_000 {
            passed = false;
            notes.push(format!("{label} study took {elapsed} ms (> 60 s)"));
        }
    };

    let upwind = SchemeSpec::upwind_linear(2).expect("radius 2");
    run_study("biased r=2", &upwind, &IntegratorSpec::ssprk3(0.4), (2.8, 3.2));

    let weno = SchemeSpec::weno(3).expect("supported radius");
    let integrator = IntegratorSpec::ssprk3(0.4).with_rule(TimeStepRule::HPower {
        coefficient: 0.4,
        exponent: 5.0 / 3.0,
    });
    run_study("weno r=3", &weno, &integrator, (4.7, 5.3));

    CriterionResult {
        id: 7,
        name: "stable biased schemes attain order 2r-1",
        passed,
        measured: if notes.is_empty() {
            measured.join(", ")
        } else {
            notes.join("; ")
        },
        tolerance: "3.0 +/- 0.2 and 5.0 +/- 0.3 at the finest pair",
        elapsed_ms: 0,
    }
}

fn upwind_cfl_boundary() -> CriterionResult {
    let mut passed = true;
    let mut notes = Vec::new();

    let scheme = linearize(&[0.0, -1.0, 1.0]).expect("consistent");
    let cfl = max_stable_cfl(&scheme);
    if (cfl - 1.0).abs() > 1e-5 {
        passed = false;
        notes.push(format!("max stable cfl {cfl}"));
    }

    // Bounded run at 90% of the boundary: 10/h steps of forward Euler.
    let n = 128usize;
    let problem = Problem::advection(1.0);
    let spec = SchemeSpec::upwind_linear(1).expect("radius 1");
    let w0 = GridFunction::from_fn(n, |x| problem.initial(x));
    let h = w0.h();
    let dt = 0.9 * h;
    let steps = (10.0 / h).ceil() as usize;
    let mut w = w0.clone();
    let mut growth = 0.0f64;
    for _ in 0..steps {
        match step_fe(&spec, &problem, &w, dt) {
            Ok(next) => w = next,
            Err(e) => {
                passed = false;
                notes.push(format!("step failed: {e}"));
                break;
            }
        }
        growth = growth.max(w.max_norm() / w0.max_norm() - 1.0);
    }
    if growth > 1e-8 {
        passed = false;
        notes.push(format!("max-norm growth {growth:.2e} over {steps} steps"));
    }

    CriterionResult {
        id: 8,
        name: "first-order upwind is stable exactly up to ratio 1",
        passed,
        measured: if notes.is_empty() {
            format!("max stable cfl {cfl:.6}; growth {growth:.2e} over {steps} steps")
        } else {
            notes.join("; ")
        },
        tolerance: "cfl within 1e-5 of 1; growth <= 1e-8 over 10/h steps",
        elapsed_ms: 0,
    }
}

fn fourier_cross_check(seed: u64) -> CriterionResult {
    let mut rng = ChaCha8Rng::seed_from_u64(seed ^ 0x0f0f_cafe);
    let n = 64usize;
    let problem = Problem::advection(1.0);
    let mut passed = true;
    let mut notes = Vec::new();
    let mut worst = 0.0f64;

    for _ in 0..20 {
        let r = rng.random_range(1..=3usize);
        let mut alpha: Vec<f64> = (0..2 * r + 1).map(|_| rng.random_range(-1.0..1.0)).collect();
        let mean = alpha.iter().sum::<f64>() / alpha.len() as f64;
        alpha.iter_mut().for_each(|a| *a -= mean);

        let lambda = rng.random_range(0.1..2.0);
        let k = rng.random_range(1..n / 2);
        let phase = rng.random_range(0.0..2.0 * std::f64::consts::PI);

        let spec = SchemeSpec::linear_coefficients(alpha.clone()).expect("odd length");
        let linear = linearize(&alpha).expect("consistent");
        let w = GridFunction::from_fn(n, |x| (k as f64 * x + phase).cos());
        let dt = lambda * w.h();
        let next = match step_fe(&spec, &problem, &w, dt) {
            Ok(g) => g,
            Err(e) => {
                passed = false;
                notes.push(e.to_string());
                continue;
            }
        };

        let coeff = |g: &GridFunction| {
            let mut acc = Complex64::new(0.0, 0.0);
            for j in 0..n {
                let angle = -(k as f64) * g.x(j);
                acc += g.values()[j] * Complex64::new(angle.cos(), angle.sin());
            }
            acc
        };
        let ratio = coeff(&next) / coeff(&w);
        let predicted = symbol(&linear, lambda, k as f64 * w.h());
        let gap = (ratio - predicted).norm();
        worst = worst.max(gap);
        if gap > 1e-10 {
            passed = false;
            notes.push(format!("r={r}, k={k}, lambda={lambda:.3}: gap {gap:.2e}"));
        }
    }

    CriterionResult {
        id: 9,
        name: "per-step mode amplification matches the symbol",
        passed,
        measured: if notes.is_empty() {
            format!("20 random triples, worst gap {worst:.2e}")
        } else {
            notes.join("; ")
        },
        tolerance: "absolute gap < 1e-10",
        elapsed_ms: 0,
    }
}

/// Substitutes univariate components into a multivariate polynomial.
/// Independent route for the exact composition check: plain polynomial
/// algebra, no partitions or tensors.
fn compose_polynomial(f: &MultiPoly<Rational>, curves: &[UniPoly<Rational>]) -> UniPoly<Rational> {
    use num_traits::One;
    let mut acc = UniPoly::zero();
    for (coeff, exps) in f.terms() {
        let mut term = UniPoly::constant(Rational::one());
        for (curve, &e) in curves.iter().zip(exps) {
            term = term.mul(&curve.pow(e as usize));
        }
        acc = acc.add(&term.scale(coeff));
    }
    acc
}

type IntPoly = Vec<(i64, Vec<u32>)>;

fn random_int_poly(rng: &mut ChaCha8Rng, n: usize) -> IntPoly {
    let terms = rng.random_range(1..=4usize);
    (0..terms)
        .map(|_| {
            let coeff = loop {
                let c = rng.random_range(-3i64..=3);
                if c != 0 {
                    break c;
                }
            };
            let mut exps = vec![0u32; n];
            let mut budget = 3u32;
            for e in exps.iter_mut() {
                let take = rng.random_range(0..=budget.min(2));
                *e = take;
                budget -= take;
            }
            (coeff, exps)
        })
        .collect()
}

fn random_int_curve(rng: &mut ChaCha8Rng, n: usize) -> Vec<Vec<i64>> {
    (0..n)
        .map(|_| {
            let degree = rng.random_range(1..=3usize);
            let mut coeffs: Vec<i64> = (0..=degree).map(|_| rng.random_range(-2..=2)).collect();
            if coeffs.iter().all(|&c| c == 0) {
                coeffs[degree] = 1;
            }
            coeffs
        })
        .collect()
}

fn random_small_poly(rng: &mut ChaCha8Rng, n: usize) -> MultiPoly<f64> {
    let terms = rng.random_range(1..=3usize);
    let list: Vec<(f64, Vec<u32>)> = (0..terms)
        .map(|_| {
            let coeff = 0.5 * rng.random_range(-2i64..=2) as f64;
            let mut exps = vec![0u32; n];
            let mut budget = 2u32;
            for e in exps.iter_mut() {
                let take = rng.random_range(0..=budget.min(2));
                *e = take;
                budget -= take;
            }
            (coeff, exps)
        })
        .collect();
    MultiPoly::new(n, list)
}

fn int_poly_to<T: crate::fdb::Scalar>(poly: &IntPoly) -> MultiPoly<T> {
    let n = poly.first().map_or(0, |(_, e)| e.len());
    MultiPoly::new(
        n,
        poly.iter()
            .map(|(c, e)| (T::from_int(*c), e.clone()))
            .collect(),
    )
}

fn int_unipoly_to<T: crate::fdb::Scalar>(coeffs: &[i64]) -> UniPoly<T> {
    UniPoly::new(coeffs.iter().map(|&c| T::from_int(c)).collect())
}
