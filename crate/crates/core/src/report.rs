use std::fmt;

/// First disagreement found by a verification.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct Mismatch {
    /// Where it happened, e.g. an exponent vector or an index.
    pub location: String,
    pub expected: String,
    pub actual: String,
}

/// Outcome of a verification: how many values were compared and the first
/// mismatch, if any.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct VerificationReport {
    pub label: String,
    pub checked: usize,
    pub mismatch: Option<Mismatch>,
}

impl VerificationReport {
    pub fn passed(&self) -> bool {
        self.mismatch.is_none()
    }
}

impl fmt::Display for VerificationReport {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        match &self.mismatch {
            None => write!(f, "PASS {} ({} values checked)", self.label, self.checked),
            Some(m) => write!(
                f,
                "FAIL {} at {}: expected {}, got {} ({} values checked)",
                self.label, m.location, m.expected, m.actual, self.checked
            ),
        }
    }
}
