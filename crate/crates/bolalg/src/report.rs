use std::fmt;

use crate::linalg::Vector;

/// Replayable counterexample: the basis tuple that failed (0-based indices,
/// in the scan order of the checker) plus the nonzero residual vector.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct Witness {
    pub tuple: Vec<usize>,
    pub residual: Vector,
    pub note: Option<String>,
}

impl Witness {
    pub fn new(tuple: Vec<usize>, residual: Vector) -> Self {
        Witness {
            tuple,
            residual,
            note: None,
        }
    }

    pub fn with_note(tuple: Vec<usize>, residual: Vector, note: impl Into<String>) -> Self {
        Witness {
            tuple,
            residual,
            note: Some(note.into()),
        }
    }
}

impl fmt::Display for Witness {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        let idx: Vec<String> = self.tuple.iter().map(|i| i.to_string()).collect();
        write!(f, "tuple ({}) residual {}", idx.join(","), self.residual)?;
        if let Some(note) = &self.note {
            write!(f, " [{note}]")?;
        }
        Ok(())
    }
}

/// One named identity verdict. Failing entries always carry a witness.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct CheckEntry {
    pub name: String,
    pub passed: bool,
    pub witness: Option<Witness>,
}

impl CheckEntry {
    pub fn pass(name: impl Into<String>) -> Self {
        CheckEntry {
            name: name.into(),
            passed: true,
            witness: None,
        }
    }

    pub fn fail(name: impl Into<String>, witness: Witness) -> Self {
        CheckEntry {
            name: name.into(),
            passed: false,
            witness: Some(witness),
        }
    }
}

/// Report of a batch of identity checks (axioms, module laws, Jacobi, ...).
/// The checker scans basis tuples in lexicographic order, so a fail entry
/// carries the smallest failing tuple.
#[derive(Debug, Clone, PartialEq, Eq, Default)]
pub struct CheckReport {
    pub entries: Vec<CheckEntry>,
}

impl CheckReport {
    pub fn new() -> Self {
        CheckReport::default()
    }

    pub fn push(&mut self, entry: CheckEntry) {
        self.entries.push(entry);
    }

    pub fn merge(&mut self, other: CheckReport) {
        self.entries.extend(other.entries);
    }

    pub fn passed(&self) -> bool {
        self.entries.iter().all(|e| e.passed)
    }

    pub fn entry(&self, name: &str) -> Option<&CheckEntry> {
        self.entries.iter().find(|e| e.name == name)
    }

    pub fn verdict(&self, name: &str) -> Option<bool> {
        self.entry(name).map(|e| e.passed)
    }

    pub fn first_failure(&self) -> Option<&CheckEntry> {
        self.entries.iter().find(|e| !e.passed)
    }
}

impl fmt::Display for CheckReport {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        for e in &self.entries {
            write!(f, "{}: {}", e.name, if e.passed { "pass" } else { "fail" })?;
            if let Some(w) = &e.witness {
                write!(f, " ({w})")?;
            }
            writeln!(f)?;
        }
        Ok(())
    }
}
