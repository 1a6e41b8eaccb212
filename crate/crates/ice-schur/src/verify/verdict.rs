use std::fmt;

use serde_json::{json, Map, Value};

use crate::algebra::Polynomial;
use crate::combinatorics::Partition;

/// Outcome of one identity instance.
#[derive(Debug, Clone, Copy, PartialEq, Eq, PartialOrd, Ord)]
pub enum Status {
    Pass,
    PassWithErratum,
    Fail,
}

impl Status {
    pub fn label(self) -> &'static str {
        match self {
            Status::Pass => "PASS",
            Status::PassWithErratum => "PASS_WITH_ERRATUM",
            Status::Fail => "FAIL",
        }
    }
}

impl fmt::Display for Status {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "{}", self.label())
    }
}

/// Instance parameters, serialized in a fixed key order.
#[derive(Debug, Clone, Default, PartialEq, Eq, PartialOrd, Ord)]
pub struct Params {
    pub lambda: Option<Vec<u32>>,
    pub mu: Option<Vec<u32>>,
    pub n: Option<u32>,
    pub m: Option<u32>,
    pub i: Option<u32>,
    pub preset: Option<String>,
    pub case: Option<String>,
    pub resolution: Option<String>,
}

impl Params {
    pub fn lambda(mut self, lambda: &Partition) -> Self {
        self.lambda = Some(lambda.trimmed().to_vec());
        self
    }

    pub fn mu(mut self, mu: &Partition) -> Self {
        self.mu = Some(mu.trimmed().to_vec());
        self
    }

    pub fn n(mut self, n: usize) -> Self {
        self.n = Some(n as u32);
        self
    }

    pub fn m(mut self, m: usize) -> Self {
        self.m = Some(m as u32);
        self
    }

    pub fn i(mut self, i: usize) -> Self {
        self.i = Some(i as u32);
        self
    }

    pub fn preset(mut self, preset: &str) -> Self {
        self.preset = Some(preset.to_string());
        self
    }

    pub fn case(mut self, case: &str) -> Self {
        self.case = Some(case.to_string());
        self
    }

    pub fn resolution(mut self, resolution: &str) -> Self {
        self.resolution = Some(resolution.to_string());
        self
    }

    pub fn to_json(&self) -> Value {
        let mut obj = Map::new();
        if let Some(v) = &self.lambda {
            obj.insert("lambda".into(), json!(v));
        }
        if let Some(v) = &self.mu {
            obj.insert("mu".into(), json!(v));
        }
        if let Some(v) = self.n {
            obj.insert("n".into(), json!(v));
        }
        if let Some(v) = self.m {
            obj.insert("m".into(), json!(v));
        }
        if let Some(v) = self.i {
            obj.insert("i".into(), json!(v));
        }
        if let Some(v) = &self.preset {
            obj.insert("preset".into(), json!(v));
        }
        if let Some(v) = &self.case {
            obj.insert("case".into(), json!(v));
        }
        if let Some(v) = &self.resolution {
            obj.insert("resolution".into(), json!(v));
        }
        Value::Object(obj)
    }
}

/// One certified identity instance.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct Verdict {
    pub identity: String,
    pub parameters: Params,
    pub status: Status,
    /// Nonzero difference LHS - RHS, attached exactly when status is FAIL.
    pub witness: Option<Polynomial>,
    pub erratum_tag: Option<String>,
}

impl Verdict {
    pub fn pass(identity: &str, parameters: Params) -> Self {
        Verdict {
            identity: identity.to_string(),
            parameters,
            status: Status::Pass,
            witness: None,
            erratum_tag: None,
        }
    }

    pub fn pass_with_erratum(identity: &str, parameters: Params, tag: &str) -> Self {
        Verdict {
            identity: identity.to_string(),
            parameters,
            status: Status::PassWithErratum,
            witness: None,
            erratum_tag: Some(tag.to_string()),
        }
    }

    pub fn fail(identity: &str, parameters: Params, witness: Polynomial) -> Self {
        debug_assert!(!witness.is_zero(), "failing verdicts carry nonzero witnesses");
        Verdict {
            identity: identity.to_string(),
            parameters,
            status: Status::Fail,
            witness: Some(witness),
            erratum_tag: None,
        }
    }

    /// Build from an exact difference: zero passes, nonzero fails.
    pub fn from_difference(identity: &str, parameters: Params, difference: Polynomial) -> Self {
        if difference.is_zero() {
            Verdict::pass(identity, parameters)
        } else {
            Verdict::fail(identity, parameters, difference)
        }
    }

    pub fn passed(&self) -> bool {
        self.status != Status::Fail
    }

    pub fn to_json(&self) -> Value {
        let mut obj = Map::new();
        obj.insert("identity".into(), json!(self.identity));
        obj.insert("parameters".into(), self.parameters.to_json());
        obj.insert("status".into(), json!(self.status.label()));
        if let Some(w) = &self.witness {
            obj.insert("witness".into(), w.to_json());
        }
        if let Some(tag) = &self.erratum_tag {
            obj.insert("erratum_tag".into(), json!(tag));
        }
        Value::Object(obj)
    }

    /// Compact JSONL line.
    pub fn to_json_line(&self) -> String {
        self.to_json().to_string()
    }

    /// Human-readable one-liner.
    pub fn to_text_line(&self) -> String {
        let mut line = format!("{} {}", self.status.label(), self.identity);
        let params = self.parameters.to_json();
        if params.as_object().is_some_and(|m| !m.is_empty()) {
            line.push(' ');
            line.push_str(&params.to_string());
        }
        if let Some(tag) = &self.erratum_tag {
            line.push_str(&format!(" [erratum: {tag}]"));
        }
        line
    }

    /// Canonical sort key: identity name, then parameters.
    pub fn sort_key(&self) -> (String, String) {
        (self.identity.clone(), self.parameters.to_json().to_string())
    }
}
