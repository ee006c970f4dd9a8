//! Pass/fail reports with at most one counterexample per check.

use std::fmt;

use serde::Serialize;

#[derive(Debug, Clone, PartialEq, Eq, Serialize)]
pub struct Counterexample {
    /// The carrier indices that witness the failure, in the order the check
    /// quantifies over them.
    pub cell: Vec<usize>,
    pub detail: String,
}

#[derive(Debug, Clone, PartialEq, Eq, Serialize)]
pub struct Check {
    pub name: String,
    pub passed: bool,
    /// Number of cells evaluated.
    pub cells: usize,
    #[serde(skip_serializing_if = "Option::is_none")]
    pub counterexample: Option<Counterexample>,
    #[serde(skip_serializing_if = "Option::is_none")]
    pub note: Option<String>,
}

impl Check {
    pub fn pass(name: impl Into<String>, cells: usize) -> Self {
        Check {
            name: name.into(),
            passed: true,
            cells,
            counterexample: None,
            note: None,
        }
    }

    pub fn fail(name: impl Into<String>, cell: Vec<usize>, detail: impl Into<String>) -> Self {
        Check {
            name: name.into(),
            passed: false,
            cells: 0,
            counterexample: Some(Counterexample {
                cell,
                detail: detail.into(),
            }),
            note: None,
        }
    }

    /// Evaluates `test` on every cell and keeps the first failure.
    ///
    /// `test` returns `Some(detail)` when the cell violates the property.
    pub fn scan<I, F>(name: impl Into<String>, cells: I, mut test: F) -> Self
    where
        I: IntoIterator<Item = Vec<usize>>,
        F: FnMut(&[usize]) -> Option<String>,
    {
        let name = name.into();
        let mut count = 0;
        let mut first = None;
        for cell in cells {
            count += 1;
            if first.is_none() {
                if let Some(detail) = test(&cell) {
                    first = Some(Counterexample { cell, detail });
                }
            }
        }
        Check {
            name,
            passed: first.is_none(),
            cells: count,
            counterexample: first,
            note: None,
        }
    }

    pub fn with_note(mut self, note: impl Into<String>) -> Self {
        self.note = Some(note.into());
        self
    }
}

#[derive(Debug, Clone, PartialEq, Eq, Serialize)]
pub struct Report {
    pub title: String,
    pub checks: Vec<Check>,
}

impl Report {
    pub fn new(title: impl Into<String>) -> Self {
        Report {
            title: title.into(),
            checks: Vec::new(),
        }
    }

    pub fn push(&mut self, check: Check) {
        self.checks.push(check);
    }

    pub fn passed(&self) -> bool {
        self.checks.iter().all(|c| c.passed)
    }

    pub fn get(&self, name: &str) -> Option<&Check> {
        self.checks.iter().find(|c| c.name == name)
    }

    /// True when the named check exists and passed.
    pub fn holds(&self, name: &str) -> bool {
        self.get(name).is_some_and(|c| c.passed)
    }

    pub fn failures(&self) -> impl Iterator<Item = &Check> {
        self.checks.iter().filter(|c| !c.passed)
    }

    /// Appends the checks of `other`, prefixing their names.
    pub fn absorb(&mut self, prefix: &str, other: Report) {
        for mut c in other.checks {
            c.name = format!("{prefix}.{}", c.name);
            self.checks.push(c);
        }
    }

    /// One-line summary naming the failed checks, for error messages.
    pub fn summary(&self) -> String {
        if self.passed() {
            format!("{}: pass", self.title)
        } else {
            let names: Vec<_> = self.failures().map(|c| c.name.as_str()).collect();
            format!("{}: FAIL [{}]", self.title, names.join(", "))
        }
    }
}

impl fmt::Display for Report {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        writeln!(f, "{}", self.title)?;
        for c in &self.checks {
            let status = if c.passed { "pass" } else { "FAIL" };
            write!(f, "  {status:<4}  {}", c.name)?;
            if c.cells > 0 {
                write!(f, " ({} cells)", c.cells)?;
            }
            if let Some(cx) = &c.counterexample {
                write!(f, " at {:?}: {}", cx.cell, cx.detail)?;
            }
            if let Some(note) = &c.note {
                write!(f, " [{note}]")?;
            }
            writeln!(f)?;
        }
        Ok(())
    }
}
