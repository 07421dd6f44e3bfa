//! Output plumbing: stdout and/or an `--out` file, with `--quiet` muting
//! the stdout copy. No timestamps anywhere, so identical invocations give
//! byte-identical artifacts.

use std::fs;
use std::path::PathBuf;

use crate::CliResult;

pub struct OutputSink {
    out: Option<PathBuf>,
    quiet: bool,
}

impl OutputSink {
    pub fn new(out: Option<PathBuf>, quiet: bool) -> Self {
        Self { out, quiet }
    }

    /// Writes the primary artifact (already including its final newline).
    pub fn emit(&self, payload: &str) -> CliResult {
        if let Some(path) = &self.out {
            fs::write(path, payload)?;
        }
        if !self.quiet {
            print!("{payload}");
        }
        Ok(())
    }

    /// Pretty-printed JSON; `serde_json` maps iterate in sorted key order,
    /// keeping the payload deterministic.
    pub fn emit_json(&self, value: &serde_json::Value) -> CliResult {
        let mut payload = serde_json::to_string_pretty(value)?;
        payload.push('\n');
        self.emit(&payload)
    }

    /// For human-facing side text (tables): stdout only, never the file.
    pub fn note(&self, line: &str) {
        if !self.quiet {
            println!("{line}");
        }
    }

    pub fn out_path(&self) -> Option<&PathBuf> {
        self.out.as_ref()
    }
}
