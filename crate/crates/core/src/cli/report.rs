use std::io::Write;

use serde::Serialize;

use crate::algebra::Mode;

pub const SCHEMA_VERSION: u32 = 1;

#[derive(Clone, Debug, Serialize)]
pub struct OutputRecord {
    pub n: i64,
    pub r: usize,
    pub s: usize,
    pub method: String,
    pub value: String,
    #[serde(skip_serializing_if = "Option::is_none")]
    pub path: Option<String>,
    pub elapsed_ms: Option<f64>,
    pub mode: Mode,
}

#[derive(Clone, Debug, Serialize)]
pub struct Check {
    pub suite: String,
    pub name: String,
    pub passed: bool,
    pub detail: String,
}

impl Check {
    pub fn new(suite: &str, name: impl Into<String>, passed: bool, detail: impl Into<String>) -> Self {
        Self { suite: suite.to_string(), name: name.into(), passed, detail: detail.into() }
    }
}

#[derive(Debug, Serialize)]
pub struct Report {
    pub schema_version: u32,
    pub config_echo: serde_json::Value,
    pub results: Vec<OutputRecord>,
    pub checks: Vec<Check>,
}

impl Report {
    pub fn new(config_echo: serde_json::Value) -> Self {
        Self { schema_version: SCHEMA_VERSION, config_echo, results: Vec::new(), checks: Vec::new() }
    }

    pub fn passed(&self) -> bool {
        self.checks.iter().all(|c| c.passed)
    }

    pub fn write_json(&self, w: &mut dyn Write) -> std::io::Result<()> {
        serde_json::to_writer_pretty(&mut *w, self)?;
        writeln!(w)
    }

    pub fn write_csv(&self, w: &mut dyn Write) -> std::io::Result<()> {
        let mut out = csv::Writer::from_writer(w);
        out.write_record(["n", "r", "s", "method", "value", "elapsed_ms"])?;
        for rec in &self.results {
            let method = match &rec.path {
                Some(p) => format!("{}:{p}", rec.method),
                None => rec.method.clone(),
            };
            out.write_record([
                rec.n.to_string(),
                rec.r.to_string(),
                rec.s.to_string(),
                method,
                rec.value.clone(),
                rec.elapsed_ms.map(|t| format!("{t:.3}")).unwrap_or_default(),
            ])?;
        }
        out.flush()
    }

    pub fn write_text(&self, w: &mut dyn Write) -> std::io::Result<()> {
        for rec in &self.results {
            let time = rec.elapsed_ms.map(|t| format!("  ({t:.3} ms)")).unwrap_or_default();
            match &rec.path {
                Some(p) => writeln!(w, "{p}\t{}", rec.value)?,
                None => writeln!(w, "mu({},{},{}) [{}] = {}{time}", rec.n, rec.r, rec.s, rec.method, rec.value)?,
            }
        }
        for c in &self.checks {
            let verdict = if c.passed { "PASS" } else { "FAIL" };
            if c.detail.is_empty() {
                writeln!(w, "{verdict} {}: {}", c.suite, c.name)?;
            } else {
                writeln!(w, "{verdict} {}: {} ({})", c.suite, c.name, c.detail)?;
            }
        }
        Ok(())
    }
}
