//! Certificates: what was run, on which inputs, and what came out.

use serde::Serialize;
use serde_json::{Map, Value};
use sha2::{Digest, Sha256};

use confalg::CheckReport;

#[derive(Debug, Serialize)]
pub struct WitnessOut {
    pub location: String,
    pub residual: String,
}

#[derive(Debug, Serialize)]
pub struct CheckOut {
    pub name: String,
    pub passed: bool,
    pub checked: usize,
    pub witnesses: Vec<WitnessOut>,
}

impl From<&CheckReport> for CheckOut {
    fn from(r: &CheckReport) -> Self {
        CheckOut {
            name: r.name.clone(),
            passed: r.passed(),
            checked: r.checked,
            witnesses: r
                .witnesses
                .iter()
                .map(|w| WitnessOut {
                    location: w.location.clone(),
                    residual: w.residual.clone(),
                })
                .collect(),
        }
    }
}

#[derive(Debug, Serialize)]
pub struct Certificate {
    pub command: String,
    pub object: String,
    pub inputs_digest: String,
    pub parameters: Map<String, Value>,
    pub results: Vec<CheckOut>,
    pub outputs: Map<String, Value>,
    pub passed: bool,
    pub timing_ms: u64,
}

/// SHA-256 over the definition file bytes, the command and its parameters.
pub fn digest(
    file: Option<&[u8]>,
    command: &str,
    object: &str,
    params: &Map<String, Value>,
) -> String {
    let mut h = Sha256::new();
    h.update(file.unwrap_or_default());
    h.update([0]);
    h.update(command.as_bytes());
    h.update([0]);
    h.update(object.as_bytes());
    h.update([0]);
    h.update(serde_json::to_vec(params).expect("parameters serialize"));
    format!("{:x}", h.finalize())
}

impl Certificate {
    pub fn push(&mut self, r: &CheckReport) {
        self.results.push(r.into());
    }

    pub fn output(&mut self, key: &str, v: impl Into<Value>) {
        self.outputs.insert(key.into(), v.into());
    }

    pub fn all_passed(&self) -> bool {
        self.results.iter().all(|r| r.passed)
    }

    pub fn render_text(&self) -> String {
        let mut s = format!("{} {}\n", self.command, self.object);
        for (k, v) in &self.parameters {
            match v {
                Value::String(t) => s += &format!("  {k} = {t}\n"),
                _ => s += &format!("  {k} = {v}\n"),
            }
        }
        for r in &self.results {
            if r.passed {
                s += &format!("  {}: pass ({} checked)\n", r.name, r.checked);
            } else {
                s += &format!(
                    "  {}: FAIL ({} of {} failed)\n",
                    r.name,
                    r.witnesses.len(),
                    r.checked
                );
                for w in r.witnesses.iter().take(5) {
                    s += &format!("    at {}: {}\n", w.location, w.residual);
                }
            }
        }
        for (k, v) in &self.outputs {
            match v {
                Value::String(t) => s += &format!("  {k}: {t}\n"),
                Value::Array(a) if a.iter().all(Value::is_string) => {
                    if a.is_empty() {
                        s += &format!("  {k}: (none)\n");
                    } else {
                        s += &format!("  {k}:\n");
                        for t in a {
                            s += &format!("    {}\n", t.as_str().unwrap());
                        }
                    }
                }
                _ => s += &format!("  {k}: {v}\n"),
            }
        }
        s += &format!("  digest: {}\n", self.inputs_digest);
        s
    }
}
