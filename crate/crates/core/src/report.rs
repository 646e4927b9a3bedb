//! Pass/fail records for axiom verification. Failures are data, not errors.

use serde::Serialize;

#[derive(Clone, Debug, PartialEq, Eq, Serialize)]
pub struct Check {
    pub axiom: String,
    pub status: Status,
    #[serde(skip_serializing_if = "Option::is_none")]
    pub witness: Option<String>,
}

#[derive(Clone, Copy, Debug, PartialEq, Eq, Serialize)]
#[serde(rename_all = "lowercase")]
pub enum Status {
    Pass,
    Fail,
}

#[derive(Clone, Debug, Default, Serialize)]
#[serde(transparent)]
pub struct Report {
    pub checks: Vec<Check>,
}

impl Report {
    pub fn new() -> Self {
        Self::default()
    }

    /// Records an axiom; `Err` carries the witness of the first violation.
    pub fn record(&mut self, axiom: impl Into<String>, outcome: Result<(), String>) {
        let (status, witness) = match outcome {
            Ok(()) => (Status::Pass, None),
            Err(w) => (Status::Fail, Some(w)),
        };
        self.checks.push(Check { axiom: axiom.into(), status, witness });
    }

    pub fn all_passed(&self) -> bool {
        self.checks.iter().all(|c| c.status == Status::Pass)
    }

    pub fn failures(&self) -> impl Iterator<Item = &Check> {
        self.checks.iter().filter(|c| c.status == Status::Fail)
    }

    pub fn get(&self, axiom: &str) -> Option<&Check> {
        self.checks.iter().find(|c| c.axiom == axiom)
    }

    pub fn passed(&self, axiom: &str) -> bool {
        self.get(axiom).is_some_and(|c| c.status == Status::Pass)
    }

    /// Appends another report, prefixing its axiom names with `scope.`.
    pub fn merge(&mut self, scope: &str, other: Report) {
        for mut c in other.checks {
            c.axiom = format!("{scope}.{}", c.axiom);
            self.checks.push(c);
        }
    }
}

/// Returns the first `Err` produced by `f` over `items`, or `Ok`.
pub(crate) fn first_failure<I, F>(items: I, mut f: F) -> Result<(), String>
where
    I: IntoIterator,
    F: FnMut(I::Item) -> Result<(), String>,
{
    for item in items {
        f(item)?;
    }
    Ok(())
}
