//! Pass/fail reports for structural axiom checks.

use std::fmt;

#[derive(Clone, Debug, PartialEq, Eq)]
pub struct CheckItem {
    pub name: String,
    pub passed: bool,
    /// First failing basis tuple, rendered with labels.
    pub witness: Option<String>,
}

#[derive(Clone, Debug, Default, PartialEq, Eq)]
pub struct CheckReport {
    pub items: Vec<CheckItem>,
}

impl CheckReport {
    pub fn new() -> Self {
        Self::default()
    }

    pub fn record(&mut self, name: &str, witness: Option<String>) {
        self.items.push(CheckItem {
            name: name.to_string(),
            passed: witness.is_none(),
            witness,
        });
    }

    pub fn passed(&self) -> bool {
        self.items.iter().all(|i| i.passed)
    }

    pub fn get(&self, name: &str) -> Option<&CheckItem> {
        self.items.iter().find(|i| i.name == name)
    }

    pub fn failed(&self, name: &str) -> bool {
        self.get(name).is_some_and(|i| !i.passed)
    }

    pub fn first_failure(&self) -> Option<&CheckItem> {
        self.items.iter().find(|i| !i.passed)
    }
}

impl fmt::Display for CheckReport {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        for item in &self.items {
            let status = if item.passed { "pass" } else { "FAIL" };
            write!(f, "{}: {status}", item.name)?;
            if let Some(w) = &item.witness {
                write!(f, " ({w})")?;
            }
            writeln!(f)?;
        }
        Ok(())
    }
}
