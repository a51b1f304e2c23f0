//! Output assembly: homology rows and verification checks rendered as JSON,
//! CSV, or plain text. Rows are sorted by grid key before rendering, so the
//! output is byte-stable regardless of how many workers produced them.

use std::io::Write;

use serde::Serialize;

use hlcy_core::checks::CheckResult;

#[derive(Clone, Copy, Debug, PartialEq, Eq, clap::ValueEnum)]
pub enum Format {
    Json,
    Csv,
    Text,
}

#[derive(Clone, Debug, Serialize, PartialEq, Eq, PartialOrd, Ord)]
pub struct Row {
    pub complex: String,
    pub algebra: String,
    pub weight: Option<i64>,
    pub length: Option<u32>,
    pub degree: usize,
    pub dim: usize,
    pub cycles: usize,
    pub boundaries: usize,
    pub homology: usize,
    #[serde(skip_serializing_if = "Option::is_none")]
    pub representatives: Option<Vec<String>>,
}

#[derive(Clone, Debug, Serialize)]
pub struct Check {
    pub name: String,
    pub anchor: String,
    pub pass: bool,
    #[serde(skip_serializing_if = "Option::is_none")]
    pub witness: Option<String>,
}

impl From<CheckResult> for Check {
    fn from(c: CheckResult) -> Check {
        Check {
            name: c.name,
            anchor: c.anchor,
            pass: c.pass,
            witness: c.witness,
        }
    }
}

#[derive(Serialize)]
pub struct Report {
    pub tool: &'static str,
    pub version: &'static str,
    pub rows: Vec<Row>,
    pub checks: Vec<Check>,
}

impl Report {
    pub fn new(mut rows: Vec<Row>, checks: Vec<Check>) -> Report {
        rows.sort();
        Report {
            tool: "hlcy",
            version: env!("CARGO_PKG_VERSION"),
            rows,
            checks,
        }
    }

    pub fn all_pass(&self) -> bool {
        self.checks.iter().all(|c| c.pass)
    }

    pub fn write(&self, format: Format, out: &mut dyn Write) -> std::io::Result<()> {
        match format {
            Format::Json => {
                serde_json::to_writer_pretty(&mut *out, self)?;
                writeln!(out)
            }
            Format::Csv => self.write_csv(out),
            Format::Text => self.write_text(out),
        }
    }

    fn write_csv(&self, out: &mut dyn Write) -> std::io::Result<()> {
        let mut w = csv::Writer::from_writer(out);
        if !self.rows.is_empty() || self.checks.is_empty() {
            w.write_record([
                "complex",
                "algebra",
                "weight",
                "length",
                "degree",
                "dim",
                "cycles",
                "boundaries",
                "homology",
                "representatives",
            ])?;
            for r in &self.rows {
                w.write_record([
                    r.complex.clone(),
                    r.algebra.clone(),
                    r.weight.map(|v| v.to_string()).unwrap_or_default(),
                    r.length.map(|v| v.to_string()).unwrap_or_default(),
                    r.degree.to_string(),
                    r.dim.to_string(),
                    r.cycles.to_string(),
                    r.boundaries.to_string(),
                    r.homology.to_string(),
                    r.representatives
                        .as_ref()
                        .map(|v| v.join(" ; "))
                        .unwrap_or_default(),
                ])?;
            }
        }
        if !self.checks.is_empty() {
            w.write_record(["name", "anchor", "pass", "witness", "", "", "", "", "", ""])?;
            for c in &self.checks {
                w.write_record([
                    c.name.clone(),
                    c.anchor.clone(),
                    c.pass.to_string(),
                    c.witness.clone().unwrap_or_default(),
                    String::new(),
                    String::new(),
                    String::new(),
                    String::new(),
                    String::new(),
                    String::new(),
                ])?;
            }
        }
        w.flush()?;
        Ok(())
    }

    fn write_text(&self, out: &mut dyn Write) -> std::io::Result<()> {
        for r in &self.rows {
            let weight = r
                .weight
                .map(|v| v.to_string())
                .unwrap_or_else(|| "-".into());
            let length = r
                .length
                .map(|v| v.to_string())
                .unwrap_or_else(|| "-".into());
            write!(
                out,
                "{} {} w={} L={} n={}  dim={} Z={} B={} H={}",
                r.complex,
                r.algebra,
                weight,
                length,
                r.degree,
                r.dim,
                r.cycles,
                r.boundaries,
                r.homology
            )?;
            if let Some(reps) = &r.representatives {
                if !reps.is_empty() {
                    write!(out, "  reps: {}", reps.join(" ; "))?;
                }
            }
            writeln!(out)?;
        }
        for c in &self.checks {
            let status = if c.pass { "PASS" } else { "FAIL" };
            write!(out, "{status} {} — {}", c.name, c.anchor)?;
            if let Some(w) = &c.witness {
                write!(out, " ({w})")?;
            }
            writeln!(out)?;
        }
        Ok(())
    }
}
