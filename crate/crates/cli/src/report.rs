//! Verification reports.

use serde_json::{json, Map, Value};

/// One checked claim with its counts and, on failure, the first counterexample.
#[derive(Debug, Clone, PartialEq)]
pub struct Assertion {
    pub name: String,
    pub claim: String,
    pub passed: bool,
    pub counts: Map<String, Value>,
    pub counterexample: Option<Value>,
}

impl Assertion {
    pub fn new(name: &str, claim: &str) -> Self {
        Assertion {
            name: name.to_string(),
            claim: claim.to_string(),
            passed: true,
            counts: Map::new(),
            counterexample: None,
        }
    }

    pub fn count(mut self, key: &str, value: impl Into<Value>) -> Self {
        self.counts.insert(key.to_string(), value.into());
        self
    }

    /// Marks the assertion failed unless `ok`; the first counterexample wins.
    pub fn check(mut self, ok: bool, counterexample: impl FnOnce() -> Value) -> Self {
        if !ok && self.passed {
            self.passed = false;
            self.counterexample = Some(counterexample());
        }
        self
    }

    pub fn to_json(&self) -> Value {
        let mut m = Map::new();
        m.insert("name".into(), json!(self.name));
        m.insert("claim".into(), json!(self.claim));
        m.insert("passed".into(), json!(self.passed));
        m.insert("counts".into(), Value::Object(self.counts.clone()));
        m.insert("counterexample".into(), self.counterexample.clone().unwrap_or(Value::Null));
        Value::Object(m)
    }

    fn counts_text(&self) -> String {
        self.counts
            .iter()
            .map(|(k, v)| match v {
                Value::String(s) => format!("{k}={s}"),
                other => format!("{k}={other}"),
            })
            .collect::<Vec<_>>()
            .join(" ")
    }
}

/// All assertions of one or more suites over one field.
#[derive(Debug, Clone, PartialEq)]
pub struct Report {
    pub suite: String,
    pub field: String,
    pub assertions: Vec<(String, Assertion)>,
}

impl Report {
    pub fn passed(&self) -> bool {
        self.assertions.iter().all(|(_, a)| a.passed)
    }

    pub fn failures(&self) -> impl Iterator<Item = &(String, Assertion)> {
        self.assertions.iter().filter(|(_, a)| !a.passed)
    }

    pub fn to_json(&self) -> Value {
        let assertions: Vec<Value> = self
            .assertions
            .iter()
            .map(|(suite, a)| {
                let mut v = a.to_json();
                v.as_object_mut().expect("object").insert("suite".into(), json!(suite));
                v
            })
            .collect();
        json!({
            "command": "verify",
            "suite": self.suite,
            "field": self.field,
            "passed": self.passed(),
            "assertions": assertions,
        })
    }

    pub fn to_text(&self) -> String {
        let mut out = String::new();
        for (suite, a) in &self.assertions {
            let status = if a.passed { "PASS" } else { "FAIL" };
            out.push_str(&format!("{status} {suite}.{} [{}] {}\n", a.name, a.claim, a.counts_text()));
            if let Some(c) = &a.counterexample {
                out.push_str(&format!("  counterexample: {c}\n"));
            }
        }
        let verdict = if self.passed() { "PASS" } else { "FAIL" };
        out.push_str(&format!("{verdict} {} over {}\n", self.suite, self.field));
        out
    }

    pub fn to_csv(&self) -> csv::Result<String> {
        let mut w = csv::Writer::from_writer(Vec::new());
        w.write_record(["suite", "assertion", "passed", "counts", "counterexample"])?;
        for (suite, a) in &self.assertions {
            let ce = a.counterexample.as_ref().map(Value::to_string).unwrap_or_default();
            w.write_record([suite.as_str(), &a.name, &a.passed.to_string(), &a.counts_text(), &ce])?;
        }
        Ok(String::from_utf8(w.into_inner().expect("in-memory writer")).expect("utf-8"))
    }
}
