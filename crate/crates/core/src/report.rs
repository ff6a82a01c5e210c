use serde::Serialize;

/// Outcome of a sample-based verification: pass, or the first counterexample found.
#[derive(Debug, Clone, PartialEq, Eq, Serialize)]
pub struct Report {
    pub passed: bool,
    pub checked: usize,
    pub failure: Option<String>,
}

impl Report {
    pub fn pass(checked: usize) -> Report {
        Report { passed: true, checked, failure: None }
    }

    pub fn fail(checked: usize, why: impl Into<String>) -> Report {
        Report { passed: false, checked, failure: Some(why.into()) }
    }
}
