//! Handlers for `run` and `converge` (CSV outputs).
//!
//! CSV artifacts start with `#`-prefixed comment lines echoing the resolved
//! configuration, then the column header and rows.

use serde::Serialize;

use semidisc::pde::{
    convergence_study, evolve, EvolveOutcome, IntegratorKind, IntegratorSpec, Problem,
    TimeStepRule,
};

use crate::output::OutputSink;
use crate::stencil_io::resolve_scheme;
use crate::{CliError, CliResult, ConvergeArgs, IntegratorArg, ProblemArg, RunArgs};

fn build_problem(kind: ProblemArg, t_final: f64) -> Problem {
    match kind {
        ProblemArg::Advection => Problem::advection(t_final),
        ProblemArg::Burgers => Problem::burgers(t_final),
    }
}

fn integrator_kind(arg: IntegratorArg) -> IntegratorKind {
    match arg {
        IntegratorArg::Fe => IntegratorKind::ForwardEuler,
        IntegratorArg::Ssprk3 => IntegratorKind::Ssprk3,
    }
}

fn problem_name(arg: ProblemArg) -> &'static str {
    match arg {
        ProblemArg::Advection => "advection",
        ProblemArg::Burgers => "burgers",
    }
}

fn integrator_name(arg: IntegratorArg) -> &'static str {
    match arg {
        IntegratorArg::Fe => "fe",
        IntegratorArg::Ssprk3 => "ssprk3",
    }
}

#[derive(Serialize)]
struct NormRow {
    step: usize,
    t: f64,
    max_norm: f64,
    two_norm: f64,
}

pub fn run(args: &RunArgs, seed: u64, sink: &OutputSink) -> CliResult {
    let resolved = resolve_scheme(&args.scheme)?;
    let problem = build_problem(args.problem, args.t_final);
    let integrator = IntegratorSpec {
        kind: integrator_kind(args.integrator),
        rule: TimeStepRule::Cfl(args.cfl),
    };
    let result = evolve(&resolved.spec, &problem, &integrator, args.n)?;

    let outcome = match result.outcome {
        EvolveOutcome::Completed => "completed".to_string(),
        EvolveOutcome::BlowUp { step, index } => format!("blow-up step={step} index={index}"),
    };
    let mut payload = String::new();
    payload.push_str(&format!(
        "# config: command=run scheme={} integrator={} N={} cfl={} T={} problem={} seed={}\n",
        resolved.label,
        integrator_name(args.integrator),
        args.n,
        args.cfl,
        args.t_final,
        problem_name(args.problem),
        seed
    ));
    payload.push_str(&format!(
        "# outcome: {outcome} steps={} dt={}\n",
        result.steps_taken, result.dt
    ));

    let mut writer = csv::Writer::from_writer(Vec::new());
    for s in &result.series {
        writer
            .serialize(NormRow {
                step: s.step,
                t: s.t,
                max_norm: s.max_norm,
                two_norm: s.two_norm,
            })
            .map_err(|e| CliError::Usage(e.to_string()))?;
    }
    let data = writer
        .into_inner()
        .map_err(|e| CliError::Usage(e.to_string()))?;
    payload.push_str(&String::from_utf8(data).expect("csv is utf-8"));
    sink.emit(&payload)
}

#[derive(Serialize)]
struct ConvergenceCsvRow {
    #[serde(rename = "N")]
    n: usize,
    h: f64,
    error: f64,
    observed_order: Option<f64>,
}

pub fn converge(args: &ConvergeArgs, seed: u64, sink: &OutputSink) -> CliResult {
    let resolved = resolve_scheme(&args.scheme)?;
    // The study compares against the exact solution, which for the burgers
    // problem exists only before the characteristics cross at t = 1.
    if args.problem == ProblemArg::Burgers && args.t_final >= 1.0 {
        return Err(CliError::Usage(format!(
            "the smooth burgers solution ends at t = 1; got T = {}",
            args.t_final
        )));
    }
    let problem = build_problem(args.problem, args.t_final);

    // Keep the temporal error subdominant: dt ~ h^q with q = max(1, p/3)
    // for a spatial order p under the third-order integrator.
    let rule = match resolved.order {
        Some(p) if p > 3 && args.integrator == IntegratorArg::Ssprk3 => TimeStepRule::HPower {
            coefficient: args.cfl,
            exponent: p as f64 / 3.0,
        },
        _ => TimeStepRule::Cfl(args.cfl),
    };
    let integrator = IntegratorSpec {
        kind: integrator_kind(args.integrator),
        rule,
    };

    let rows = convergence_study(&resolved.spec, &problem, &integrator, &args.n_list)?;

    let mut payload = String::new();
    let n_list: Vec<String> = args.n_list.iter().map(|n| n.to_string()).collect();
    payload.push_str(&format!(
        "# config: command=converge scheme={} integrator={} N={} cfl={} T={} problem={} seed={}\n",
        resolved.label,
        integrator_name(args.integrator),
        n_list.join(","),
        args.cfl,
        args.t_final,
        problem_name(args.problem),
        seed
    ));

    let mut writer = csv::Writer::from_writer(Vec::new());
    for row in &rows {
        writer
            .serialize(ConvergenceCsvRow {
                n: row.n,
                h: row.h,
                error: row.error,
                observed_order: row.observed_order,
            })
            .map_err(|e| CliError::Usage(e.to_string()))?;
    }
    let data = writer
        .into_inner()
        .map_err(|e| CliError::Usage(e.to_string()))?;
    payload.push_str(&String::from_utf8(data).expect("csv is utf-8"));
    sink.emit(&payload)
}
