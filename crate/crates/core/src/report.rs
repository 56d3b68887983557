use serde::Serialize;

/// One checked statement in a verification report.
#[derive(Clone, Debug, PartialEq, Serialize)]
pub struct Assertion {
    pub assertion: String,
    pub pass: bool,
    #[serde(skip_serializing_if = "Option::is_none")]
    pub witness: Option<String>,
}

impl Assertion {
    pub fn pass(name: impl Into<String>) -> Self {
        Assertion { assertion: name.into(), pass: true, witness: None }
    }

    pub fn fail(name: impl Into<String>, witness: impl Into<String>) -> Self {
        Assertion { assertion: name.into(), pass: false, witness: Some(witness.into()) }
    }

    /// Passes unless a counterexample was found.
    pub fn from_counterexample(name: impl Into<String>, counterexample: Option<String>) -> Self {
        match counterexample {
            None => Assertion::pass(name),
            Some(w) => Assertion::fail(name, w),
        }
    }

    pub fn check(name: impl Into<String>, ok: bool, witness: impl FnOnce() -> String) -> Self {
        if ok {
            Assertion::pass(name)
        } else {
            Assertion::fail(name, witness())
        }
    }
}
