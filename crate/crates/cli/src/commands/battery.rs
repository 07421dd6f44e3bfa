//! The `paper-suite` handler: runs the verification battery, prints a
//! pass/fail table, and emits the structured report.

use serde_json::json;

use semidisc::suite::run_all;

use crate::output::OutputSink;
use crate::{CliError, CliResult};

pub fn paper_suite(seed: u64, sink: &OutputSink) -> CliResult {
    let results = run_all(seed);

    sink.note(&format!("{:<4} {:<6} {:<58} {:>8}", "id", "status", "criterion", "ms"));
    sink.note(&"-".repeat(80));
    for r in &results {
        sink.note(&format!(
            "{:<4} {:<6} {:<58} {:>8}",
            r.id, r.status(), r.name, r.elapsed_ms
        ));
        sink.note(&format!("       value: {}", r.measured));
        sink.note(&format!("       tolerance: {}", r.tolerance));
    }
    let failed: Vec<usize> = results.iter().filter(|r| !r.passed).map(|r| r.id).collect();
    sink.note(&"-".repeat(80));
    sink.note(&format!(
        "{} of {} criteria passed",
        results.len() - failed.len(),
        results.len()
    ));

    if let Some(path) = sink.out_path() {
        let report = json!({
            "config": { "command": "paper-suite", "seed": seed },
            "criteria": results
                .iter()
                .map(|r| {
                    json!({
                        "id": r.id,
                        "name": r.name,
                        "status": r.status(),
                        "value": r.measured,
                        "tolerance": r.tolerance,
                        "elapsed_ms": r.elapsed_ms,
                    })
                })
                .collect::<Vec<_>>(),
        });
        let mut payload = serde_json::to_string_pretty(&report)?;
        payload.push('\n');
        std::fs::write(path, payload)?;
    }

    if failed.is_empty() {
        Ok(())
    } else {
        Err(CliError::Check(format!(
            "criteria {failed:?} failed; see the table above"
        )))
    }
}
