//! Report assembly and rendering. The structured form is stable across runs
//! (canonical ordering throughout the core), and the text form prints every
//! assertion verdict present in the structured form.

use serde::Serialize;
use sha2::{Digest, Sha256};

use hopfact_core::report::Check;

pub const SCHEMA: &str = "hopfact.report/v1";

#[derive(Serialize)]
pub struct InputDigest {
    pub path: String,
    pub sha256: String,
}

#[derive(Serialize)]
pub struct CliReport {
    pub schema: &'static str,
    pub version: &'static str,
    pub command: String,
    pub inputs: Vec<InputDigest>,
    pub checks: Vec<Check>,
    pub data: serde_json::Value,
    pub passed: bool,
}

impl CliReport {
    pub fn new(command: &str) -> Self {
        CliReport {
            schema: SCHEMA,
            version: env!("CARGO_PKG_VERSION"),
            command: command.into(),
            inputs: Vec::new(),
            checks: Vec::new(),
            data: serde_json::Value::Null,
            passed: true,
        }
    }

    pub fn add_input(&mut self, path: &std::path::Path, bytes: &[u8]) {
        let mut hasher = Sha256::new();
        hasher.update(bytes);
        self.inputs.push(InputDigest {
            path: path.display().to_string(),
            sha256: format!("{:x}", hasher.finalize()),
        });
    }

    pub fn push(&mut self, check: Check) {
        self.passed &= check.passed;
        self.checks.push(check);
    }

    pub fn extend(&mut self, report: hopfact_core::report::Report) {
        for check in report.checks {
            self.push(check);
        }
    }
}

pub fn render(report: &CliReport, json: bool) -> String {
    if json {
        let mut s = serde_json::to_string_pretty(report).expect("report serialization");
        s.push('\n');
        return s;
    }
    let mut out = String::new();
    out.push_str(&format!("hopfact {} ({})\n", report.version, report.schema));
    for input in &report.inputs {
        out.push_str(&format!("input: {} sha256={}\n", input.path, input.sha256));
    }
    out.push_str(&format!("command: {}\n\n", report.command));
    for check in &report.checks {
        match (&check.passed, &check.detail) {
            (true, _) => out.push_str(&format!("ok   {}\n", check.name)),
            (false, Some(d)) => out.push_str(&format!("FAIL {} ({d})\n", check.name)),
            (false, None) => out.push_str(&format!("FAIL {}\n", check.name)),
        }
    }
    if !report.data.is_null() {
        out.push_str("\ndata:\n");
        let pretty = serde_json::to_string_pretty(&report.data).expect("data serialization");
        for line in pretty.lines() {
            out.push_str(&format!("  {line}\n"));
        }
    }
    out.push_str(&format!(
        "\nresult: {}\n",
        if report.passed { "PASS" } else { "FAIL" }
    ));
    out
}
