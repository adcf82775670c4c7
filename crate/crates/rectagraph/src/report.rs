//! Reports: the command, fingerprints of its inputs, one outcome per check
//! and a timing block kept apart so the rest is reproducible byte for byte.

use std::fmt::Write as _;
use std::time::Duration;

use serde::Serialize;
use serde_json::Value;

use crate::family::Fingerprint;

/// The result of one check.
#[derive(Clone, Debug, PartialEq, Serialize)]
pub struct Outcome {
    pub name: String,
    pub pass: bool,
    pub details: Value,
}

impl Outcome {
    pub fn new(name: impl Into<String>, pass: bool, details: Value) -> Self {
        Outcome {
            name: name.into(),
            pass,
            details,
        }
    }
}

#[derive(Clone, Copy, Debug, PartialEq, Eq, Serialize)]
#[serde(rename_all = "UPPERCASE")]
pub enum Status {
    Pass,
    Fail,
}

impl Status {
    pub fn as_str(self) -> &'static str {
        match self {
            Status::Pass => "PASS",
            Status::Fail => "FAIL",
        }
    }
}

#[derive(Clone, Debug, PartialEq, Serialize)]
pub struct CheckTiming {
    pub name: String,
    pub ms: f64,
}

#[derive(Clone, Debug, PartialEq, Serialize)]
pub struct Timings {
    pub total_ms: f64,
    pub checks: Vec<CheckTiming>,
}

#[derive(Clone, Debug, PartialEq, Serialize)]
pub struct Report {
    pub command: Vec<String>,
    pub inputs: Vec<Fingerprint>,
    pub status: Status,
    pub results: Vec<Outcome>,
    pub timings: Timings,
}

fn ms(d: Duration) -> f64 {
    (d.as_secs_f64() * 1e6).round() / 1e3
}

impl Report {
    pub fn new(
        command: Vec<String>,
        inputs: Vec<Fingerprint>,
        timed: Vec<(Outcome, Duration)>,
        total: Duration,
    ) -> Self {
        let checks = timed
            .iter()
            .map(|(o, d)| CheckTiming {
                name: o.name.clone(),
                ms: ms(*d),
            })
            .collect();
        let results: Vec<Outcome> = timed.into_iter().map(|(o, _)| o).collect();
        let status = if results.iter().all(|o| o.pass) {
            Status::Pass
        } else {
            Status::Fail
        };
        Report {
            command,
            inputs,
            status,
            results,
            timings: Timings {
                total_ms: ms(total),
                checks,
            },
        }
    }

    pub fn passed(&self) -> bool {
        self.status == Status::Pass
    }

    pub fn to_json(&self) -> serde_json::Result<String> {
        let mut s = serde_json::to_string_pretty(self)?;
        s.push('\n');
        Ok(s)
    }

    /// The report without its timing block, as JSON.
    pub fn stable_json(&self) -> serde_json::Result<String> {
        let mut v = serde_json::to_value(self)?;
        if let Value::Object(map) = &mut v {
            map.remove("timings");
        }
        serde_json::to_string_pretty(&v)
    }

    pub fn to_text(&self) -> String {
        let mut s = String::new();
        let _ = writeln!(s, "command: {}", self.command.join(" "));
        for f in &self.inputs {
            let _ = writeln!(s, "input: {} sha256={}", f.path, f.sha256);
        }
        for (o, t) in self.results.iter().zip(&self.timings.checks) {
            let status = if o.pass { "PASS" } else { "FAIL" };
            let _ = writeln!(s, "{status} {} ({:.1} ms)", o.name, t.ms);
            if let Value::Object(map) = &o.details {
                for (k, v) in map {
                    let _ = writeln!(s, "    {k}: {}", short(v));
                }
            }
        }
        let _ = writeln!(
            s,
            "status: {} ({:.1} ms)",
            self.status.as_str(),
            self.timings.total_ms
        );
        s
    }
}

fn short(v: &Value) -> String {
    let s = v.to_string();
    if s.chars().count() > 160 {
        let head: String = s.chars().take(157).collect();
        format!("{head}...")
    } else {
        s
    }
}
