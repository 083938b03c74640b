//! Structured check results: one entry per diagram, a witness exactly when
//! the diagram fails.

use std::fmt;

#[derive(Debug, Clone, PartialEq, Eq)]
pub struct Check {
    pub name: String,
    pub pass: bool,
    pub witness: Option<Vec<String>>,
}

/// A non-fatal observation, such as a composition with several witnesses.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct Note {
    pub name: String,
    pub detail: Vec<String>,
}

#[derive(Debug, Clone, PartialEq, Eq, Default)]
pub struct Report {
    pub subject: String,
    pub checks: Vec<Check>,
    pub notes: Vec<Note>,
}

impl Report {
    pub fn new(subject: impl Into<String>) -> Self {
        Self { subject: subject.into(), ..Self::default() }
    }

    /// Records a check; it passes iff there is no witness.
    pub fn record(&mut self, name: impl Into<String>, witness: Option<Vec<String>>) {
        self.checks.push(Check { name: name.into(), pass: witness.is_none(), witness });
    }

    pub fn note(&mut self, name: impl Into<String>, detail: Vec<String>) {
        self.notes.push(Note { name: name.into(), detail });
    }

    /// Appends another report's checks and notes under a name prefix.
    pub fn absorb(&mut self, prefix: &str, other: Report) {
        for c in other.checks {
            self.checks.push(Check { name: format!("{prefix}/{}", c.name), ..c });
        }
        for n in other.notes {
            self.notes.push(Note { name: format!("{prefix}/{}", n.name), ..n });
        }
    }

    pub fn passed(&self) -> bool {
        self.checks.iter().all(|c| c.pass)
    }

    pub fn failures(&self) -> impl Iterator<Item = &Check> {
        self.checks.iter().filter(|c| !c.pass)
    }

    pub fn get(&self, name: &str) -> Option<&Check> {
        self.checks.iter().find(|c| c.name == name)
    }

    /// Whether every check whose name starts with `prefix` passed.
    pub fn passed_prefix(&self, prefix: &str) -> bool {
        self.checks.iter().filter(|c| c.name.starts_with(prefix)).all(|c| c.pass)
    }

    /// `(passed, failed)` counts.
    pub fn counts(&self) -> (usize, usize) {
        let p = self.checks.iter().filter(|c| c.pass).count();
        (p, self.checks.len() - p)
    }
}

impl fmt::Display for Report {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        let (p, n) = self.counts();
        writeln!(f, "{}: {p} passed, {n} failed", self.subject)?;
        for c in self.failures() {
            writeln!(f, "  FAIL {} {:?}", c.name, c.witness.as_deref().unwrap_or_default())?;
        }
        Ok(())
    }
}
