//! Handlers for the analysis subcommands (JSON outputs).

use std::path::Path;

use serde_json::json;

use semidisc::linalg::verify_determinant_identities;
use semidisc::order::{
    barrier_demonstration, empirical_order, max_order_stencil, BarrierConclusion, Profile,
    SchemeFunction,
};
use semidisc::stability::{
    certify_fe_instability, linearize, max_amplification, max_stable_cfl, symbol,
    LinearizedScheme,
};
use semidisc::suite::fdb_spot_check;

use crate::output::OutputSink;
use crate::stencil_io::{load_stencil, StencilFile};
use crate::{CliError, CliResult};

pub fn fdb_check(s: usize, trials: usize, seed: u64, sink: &OutputSink) -> CliResult {
    let report = fdb_spot_check(s, trials, seed)?;
    let ok = report.recursion_ok && report.max_rel_error < 1e-6 && report.cases == trials;
    sink.emit_json(&json!({
        "config": { "command": "fdb check", "s": s, "trials": trials, "seed": seed },
        "s": report.s,
        "partitions": report.partitions,
        "cases": report.cases,
        "max_rel_error": report.max_rel_error,
        "recursion_ok": report.recursion_ok,
    }))?;
    if ok {
        Ok(())
    } else {
        Err(CliError::Check(format!(
            "fdb check at weight {s}: recursion_ok = {}, max_rel_error = {:.3e}, cases = {}",
            report.recursion_ok, report.max_rel_error, report.cases
        )))
    }
}

pub fn lemmas_verify(n_max: usize, trials: usize, seed: u64, sink: &OutputSink) -> CliResult {
    let report = verify_determinant_identities(n_max, trials, seed)?;
    sink.emit_json(&json!({
        "config": { "command": "lemmas verify", "n_max": n_max, "trials": trials, "seed": seed },
        "lemma1_ok": report.lemma1_ok,
        "lemma2_ok": report.lemma2_ok,
        "trials": report.trials,
    }))?;
    if report.all_ok() {
        Ok(())
    } else {
        Err(CliError::Check(format!(
            "determinant identities: lemma1_ok = {}, lemma2_ok = {}",
            report.lemma1_ok, report.lemma2_ok
        )))
    }
}

pub fn stencil_gen(r: usize, seed: u64, sink: &OutputSink) -> CliResult {
    let stencil = max_order_stencil(r)?;
    let file = StencilFile::from_stencil(&stencil);
    sink.emit_json(&json!({
        "config": { "command": "stencil gen", "r": r, "seed": seed },
        "r": file.r,
        "c": file.c,
        "wave_speed": file.wave_speed,
        "order": stencil.order(),
    }))
}

pub fn stencil_moments(file: &Path, kmax: usize, seed: u64, sink: &OutputSink) -> CliResult {
    let stencil = load_stencil(file)?;
    let moments: Vec<String> = stencil
        .moments(kmax)
        .iter()
        .map(|m| m.to_string())
        .collect();
    sink.emit_json(&json!({
        "config": {
            "command": "stencil moments",
            "file": file.display().to_string(),
            "kmax": kmax,
            "seed": seed,
        },
        "r": stencil.radius(),
        "wave_speed": stencil.wave_speed().to_string(),
        "moments": moments,
        "consistent": stencil.is_consistent(),
        "order": stencil.order(),
    }))
}

pub fn barrier(r: usize, seed: u64, sink: &OutputSink) -> CliResult {
    let cert = barrier_demonstration(r)?;
    let conclusion = match cert.conclusion {
        BarrierConclusion::InconsistentWithAdvection => "inconsistent_with_advection",
        BarrierConclusion::OnlyTrivialSolution => "only_trivial_solution",
    };
    sink.emit_json(&json!({
        "config": { "command": "barrier", "r": r, "seed": seed },
        "r": cert.r,
        "system_rank": cert.system_rank,
        "augmented_rank": cert.augmented_rank,
        "homogeneous_det": cert.homogeneous_det.to_string(),
        "closed_form_det": cert.closed_form_det.to_string(),
        "conclusion": conclusion,
    }))?;
    if cert.conclusion == BarrierConclusion::InconsistentWithAdvection {
        Ok(())
    } else {
        Err(CliError::Check(format!(
            "barrier demonstration at r = {r} did not certify inconsistency"
        )))
    }
}

pub fn order_measure(scheme: &str, x: f64, seed: u64, sink: &OutputSink) -> CliResult {
    let function = SchemeFunction::by_name(scheme)
        .ok_or_else(|| CliError::Usage(format!("unknown scheme {scheme:?}")))?;
    let wave_speed: Box<dyn Fn(f64) -> f64> = if scheme == "burgers" {
        Box::new(|u| u)
    } else {
        Box::new(|_| 1.0)
    };
    let steps: Vec<f64> = (0..5).map(|i| 0.2 / f64::powi(2.0, i)).collect();
    let fit = empirical_order(&function, &*wave_speed, &Profile::generic(), x, &steps)?;
    sink.emit_json(&json!({
        "config": { "command": "order measure", "scheme": scheme, "x": x, "seed": seed },
        "scheme": function.name(),
        "r": function.radius(),
        "x": x,
        "fitted_order": fit.slope,
        "samples": fit
            .samples
            .iter()
            .map(|&(h, e)| json!({ "h": h, "residual": e }))
            .collect::<Vec<_>>(),
    }))
}

fn load_linearized(path: &Path) -> Result<LinearizedScheme, CliError> {
    let stencil = load_stencil(path)?;
    Ok(linearize(&stencil.to_f64())?)
}

pub fn stability_symbol(
    stencil: &Path,
    lambda: f64,
    theta: f64,
    seed: u64,
    sink: &OutputSink,
) -> CliResult {
    if lambda <= 0.0 {
        return Err(CliError::Usage(format!(
            "lambda must be positive, got {lambda}"
        )));
    }
    let scheme = load_linearized(stencil)?;
    let value = symbol(&scheme, lambda, theta);
    sink.emit_json(&json!({
        "config": {
            "command": "stability symbol",
            "stencil": stencil.display().to_string(),
            "lambda": lambda,
            "theta": theta,
            "seed": seed,
        },
        "re": value.re,
        "im": value.im,
        "modulus": value.norm(),
        "antisymmetric": scheme.is_antisymmetric(),
    }))
}

pub fn stability_cfl(stencil: &Path, seed: u64, sink: &OutputSink) -> CliResult {
    let scheme = load_linearized(stencil)?;
    let cfl = max_stable_cfl(&scheme);
    let report = max_amplification(&scheme, cfl.max(1e-6));
    sink.emit_json(&json!({
        "config": {
            "command": "stability cfl",
            "stencil": stencil.display().to_string(),
            "seed": seed,
        },
        "max_stable_cfl": cfl,
        "lambda": report.lambda,
        "max_modulus": report.max_modulus,
        "argmax_theta": report.argmax_theta,
        "unstable_for_all_lambda": report.unstable_for_all_lambda,
    }))
}

pub fn stability_certify(r: usize, seed: u64, sink: &OutputSink) -> CliResult {
    let stencil = max_order_stencil(r)?;
    let scheme = linearize(&stencil.to_f64())?;
    let cert = certify_fe_instability(&scheme)?;
    sink.emit_json(&json!({
        "config": { "command": "stability certify", "r": r, "seed": seed },
        "r": r,
        "unstable": cert.unstable,
        "witness_theta": cert.witness_theta,
        "sine_sum": cert.sine_sum,
    }))?;
    if cert.unstable {
        Ok(())
    } else {
        Err(CliError::Check(format!(
            "maximal-order stencil at r = {r} was not certified unstable"
        )))
    }
}
