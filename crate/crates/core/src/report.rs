use std::fmt;

/// One failed instance of an identity.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct Witness {
    /// Which identity and which tuple, e.g. `associativity (a, b, c)`.
    pub location: String,
    /// `LHS - RHS`, canonically printed.
    pub residual: String,
}

/// Outcome of a checker. Failures are data, not errors.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct CheckReport {
    pub name: String,
    pub checked: usize,
    pub witnesses: Vec<Witness>,
}

impl CheckReport {
    pub fn new(name: impl Into<String>) -> Self {
        CheckReport {
            name: name.into(),
            checked: 0,
            witnesses: Vec::new(),
        }
    }

    pub fn passed(&self) -> bool {
        self.witnesses.is_empty()
    }

    pub fn record(&mut self, w: Option<Witness>) {
        self.checked += 1;
        if let Some(w) = w {
            self.witnesses.push(w);
        }
    }

    pub fn merge(&mut self, other: CheckReport) {
        self.checked += other.checked;
        self.witnesses.extend(other.witnesses);
    }

    pub fn first(&self) -> Option<&Witness> {
        self.witnesses.first()
    }
}

impl fmt::Display for CheckReport {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        if self.passed() {
            write!(f, "{}: pass ({} checked)", self.name, self.checked)
        } else {
            let w = &self.witnesses[0];
            write!(
                f,
                "{}: FAIL ({} of {} failed); first at {}: {}",
                self.name,
                self.witnesses.len(),
                self.checked,
                w.location,
                w.residual
            )
        }
    }
}
