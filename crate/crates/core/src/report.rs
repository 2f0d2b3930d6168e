//! Machine-readable pass/fail reports and the sampling knobs shared by all
//! checkers.

use rand::SeedableRng;
use rand_chacha::ChaCha8Rng;
use serde::Serialize;
use serde_json::{Map, Value};

/// How checkers that cannot afford exhaustive sweeps pick their samples.
#[derive(Clone, Copy, Debug, PartialEq, Eq)]
pub struct Sampling {
    /// Disables every sampling fallback.
    pub exhaustive: bool,
    pub seed: u64,
    pub samples: usize,
}

impl Default for Sampling {
    fn default() -> Self {
        Sampling { exhaustive: false, seed: 0x5eed, samples: 1000 }
    }
}

impl Sampling {
    pub fn exhaustive() -> Self {
        Sampling { exhaustive: true, ..Self::default() }
    }

    /// A generator seeded from `seed` and a per-call-site salt.
    pub fn rng(&self, salt: u64) -> ChaCha8Rng {
        ChaCha8Rng::seed_from_u64(self.seed ^ salt.wrapping_mul(0x9e37_79b9_7f4a_7c15))
    }
}

#[derive(Clone, Debug, PartialEq, Serialize)]
pub struct Assertion {
    pub name: String,
    pub pass: bool,
    pub witness: Value,
}

/// `{"check": name, "params": {...}, "assertions": [...]}`.
#[derive(Clone, Debug, PartialEq, Serialize)]
pub struct Report {
    pub check: String,
    pub params: Map<String, Value>,
    pub assertions: Vec<Assertion>,
}

impl Report {
    pub fn new(check: impl Into<String>) -> Self {
        Report { check: check.into(), params: Map::new(), assertions: Vec::new() }
    }

    pub fn param(mut self, key: &str, value: impl Into<Value>) -> Self {
        self.params.insert(key.to_string(), value.into());
        self
    }

    pub fn assert(&mut self, name: impl Into<String>, pass: bool, witness: impl Into<Value>) -> bool {
        self.assertions.push(Assertion { name: name.into(), pass, witness: witness.into() });
        pass
    }

    /// Records an equality; the witness always carries both sides.
    pub fn assert_eq<T: Serialize + PartialEq>(&mut self, name: impl Into<String>, got: T, expected: T) -> bool {
        let pass = got == expected;
        let witness = serde_json::json!({ "got": got, "expected": expected });
        self.assert(name, pass, witness)
    }

    pub fn passed(&self) -> bool {
        self.assertions.iter().all(|a| a.pass)
    }

    pub fn failures(&self) -> impl Iterator<Item = &Assertion> {
        self.assertions.iter().filter(|a| !a.pass)
    }

    pub fn to_json(&self) -> Value {
        serde_json::to_value(self).expect("reports serialize")
    }
}

/// Several reports folded into one, as produced by `verify_all`.
#[derive(Clone, Debug, PartialEq, Serialize)]
pub struct AggregateReport {
    pub check: String,
    pub params: Map<String, Value>,
    pub assertions: Vec<Assertion>,
    pub reports: Vec<Report>,
}

impl AggregateReport {
    pub fn new(check: impl Into<String>, params: Map<String, Value>) -> Self {
        AggregateReport { check: check.into(), params, assertions: Vec::new(), reports: Vec::new() }
    }

    /// Adds a sub-report and one summary assertion naming it.
    pub fn push(&mut self, report: Report) {
        let mut label = report.check.clone();
        if !report.params.is_empty() {
            let params: Vec<String> = report.params.iter().map(|(k, v)| format!("{k}={v}")).collect();
            label = format!("{label}({})", params.join(","));
        }
        let failed: Vec<Value> = report.failures().map(|a| Value::String(a.name.clone())).collect();
        self.assertions.push(Assertion {
            name: label,
            pass: failed.is_empty(),
            witness: serde_json::json!({ "assertions": report.assertions.len(), "failed": failed }),
        });
        self.reports.push(report);
    }

    pub fn passed(&self) -> bool {
        self.assertions.iter().all(|a| a.pass)
    }
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn report_schema() {
        let mut r = Report::new("demo").param("n", 2).param("m", 1);
        r.assert_eq("dim", 3, 3);
        r.assert("extra", false, Value::Null);
        assert!(!r.passed());
        let json = serde_json::to_string(&r).unwrap();
        assert_eq!(
            json,
            r#"{"check":"demo","params":{"m":1,"n":2},"assertions":[{"name":"dim","pass":true,"witness":{"expected":3,"got":3}},{"name":"extra","pass":false,"witness":null}]}"#
        );
    }

    #[test]
    fn aggregate_summarizes() {
        let mut ok = Report::new("a").param("n", 2);
        ok.assert("x", true, Value::Null);
        let mut bad = Report::new("b");
        bad.assert("y", false, Value::Null);
        let mut agg = AggregateReport::new("all", Map::new());
        agg.push(ok);
        assert!(agg.passed());
        agg.push(bad);
        assert!(!agg.passed());
        assert_eq!(agg.assertions[0].name, "a(n=2)");
        assert_eq!(agg.assertions[1].witness["failed"][0], "y");
    }
}
