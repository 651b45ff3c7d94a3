use std::fmt;

use serde::Serialize;

/// Outcome of one axiom or condition.
#[derive(Clone, Debug, PartialEq, Eq, Serialize)]
pub struct Check {
    pub name: &'static str,
    pub passed: bool,
    /// Elements witnessing a failure.
    pub witness: Vec<usize>,
    pub detail: String,
}

impl Check {
    pub fn pass(name: &'static str) -> Check {
        Check {
            name,
            passed: true,
            witness: vec![],
            detail: String::new(),
        }
    }

    pub fn fail(name: &'static str, witness: Vec<usize>, detail: String) -> Check {
        Check {
            name,
            passed: false,
            witness,
            detail,
        }
    }

    /// Pass unless `failure` found a witness.
    pub fn from_search(
        name: &'static str,
        failure: Option<(Vec<usize>, String)>,
    ) -> Check {
        match failure {
            None => Check::pass(name),
            Some((w, d)) => Check::fail(name, w, d),
        }
    }
}

impl fmt::Display for Check {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        if self.passed {
            write!(f, "{} holds", self.name)
        } else {
            write!(f, "{} fails {}", self.name, self.detail)
        }
    }
}

/// Per-condition pass/fail list.
#[derive(Clone, Debug, Default, PartialEq, Eq, Serialize)]
pub struct Report {
    pub checks: Vec<Check>,
}

impl Report {
    pub fn passed(&self) -> bool {
        self.checks.iter().all(|c| c.passed)
    }

    pub fn get(&self, name: &str) -> Option<&Check> {
        self.checks.iter().find(|c| c.name == name)
    }

    pub fn holds(&self, name: &str) -> bool {
        self.get(name).is_some_and(|c| c.passed)
    }

    pub fn failures(&self) -> impl Iterator<Item = &Check> {
        self.checks.iter().filter(|c| !c.passed)
    }

    pub fn push(&mut self, c: Check) {
        self.checks.push(c);
    }
}

impl fmt::Display for Report {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        for c in &self.checks {
            writeln!(f, "{c}")?;
        }
        Ok(())
    }
}
