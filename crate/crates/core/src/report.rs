//! Pass/fail tallies returned by the verification routines.

use std::fmt;

use serde::Serialize;

/// Number of failure messages kept verbatim; later failures are only counted.
const KEPT_FAILURES: usize = 20;

#[derive(Clone, Debug, Default, PartialEq, Eq, Serialize)]
pub struct Report {
    pub name: String,
    pub checked: usize,
    pub failed: usize,
    pub failures: Vec<String>,
    pub notes: Vec<String>,
}

impl Report {
    pub fn new(name: impl Into<String>) -> Report {
        Report { name: name.into(), ..Report::default() }
    }

    /// Records one check; `detail` is only rendered on failure.
    pub fn check(&mut self, ok: bool, detail: impl FnOnce() -> String) -> bool {
        self.checked += 1;
        if !ok {
            self.failed += 1;
            if self.failures.len() < KEPT_FAILURES {
                self.failures.push(detail());
            }
        }
        ok
    }

    pub fn note(&mut self, note: impl Into<String>) {
        self.notes.push(note.into());
    }

    pub fn passed(&self) -> bool {
        self.failed == 0
    }

    pub fn absorb(&mut self, other: Report) {
        self.checked += other.checked;
        self.failed += other.failed;
        let room = KEPT_FAILURES.saturating_sub(self.failures.len());
        self.failures
            .extend(other.failures.into_iter().take(room).map(|f| format!("{}: {f}", other.name)));
        self.notes.extend(other.notes);
    }
}

impl fmt::Display for Report {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        let status = if self.passed() { "PASS" } else { "FAIL" };
        write!(f, "{status} {} ({} checks, {} failed)", self.name, self.checked, self.failed)?;
        for line in &self.failures {
            write!(f, "\n  failure: {line}")?;
        }
        for line in &self.notes {
            write!(f, "\n  note: {line}")?;
        }
        Ok(())
    }
}
