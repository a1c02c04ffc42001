//! Line-oriented verification reports.

use std::fmt;

#[derive(Clone, Debug, PartialEq, Eq, PartialOrd, Ord)]
pub struct Check {
    pub name: String,
    pub n: Option<usize>,
    pub k: Option<usize>,
    pub eps: Option<String>,
    /// Printed just before the verdict, e.g. the relation being checked.
    pub label: Option<String>,
    pub pass: bool,
    pub detail: String,
}

impl Check {
    pub fn new(name: impl Into<String>, pass: bool, detail: impl Into<String>) -> Check {
        Check {
            name: name.into(),
            n: None,
            k: None,
            eps: None,
            label: None,
            pass,
            detail: detail.into(),
        }
    }

    pub fn n(mut self, n: usize) -> Check {
        self.n = Some(n);
        self
    }

    pub fn k(mut self, k: usize) -> Check {
        self.k = Some(k);
        self
    }

    pub fn eps(mut self, eps: impl Into<String>) -> Check {
        self.eps = Some(eps.into());
        self
    }

    pub fn label(mut self, label: impl Into<String>) -> Check {
        self.label = Some(label.into());
        self
    }
}

impl fmt::Display for Check {
    /// `CHECK <name> [n=<n>] [k=<k>] [eps=<eps>] [<label>] PASS|FAIL <detail>`
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "CHECK {}", self.name)?;
        if let Some(n) = self.n {
            write!(f, " n={n}")?;
        }
        if let Some(k) = self.k {
            write!(f, " k={k}")?;
        }
        if let Some(eps) = &self.eps {
            write!(f, " eps={eps}")?;
        }
        if let Some(label) = &self.label {
            write!(f, " {label}")?;
        }
        write!(f, " {}", if self.pass { "PASS" } else { "FAIL" })?;
        if !self.detail.is_empty() {
            write!(f, " {}", self.detail)?;
        }
        Ok(())
    }
}

#[derive(Clone, Debug, Default, PartialEq, Eq)]
pub struct Report {
    pub checks: Vec<Check>,
    /// Observations that are reported but never fail a run.
    pub notes: Vec<String>,
}

impl Report {
    pub fn new() -> Report {
        Report::default()
    }

    pub fn push(&mut self, check: Check) {
        self.checks.push(check);
    }

    pub fn extend(&mut self, other: Report) {
        self.checks.extend(other.checks);
        self.notes.extend(other.notes);
    }

    pub fn note(&mut self, note: impl Into<String>) {
        self.notes.push(note.into());
    }

    pub fn passed(&self) -> usize {
        self.checks.iter().filter(|c| c.pass).count()
    }

    pub fn failed(&self) -> usize {
        self.checks.len() - self.passed()
    }

    pub fn all_pass(&self) -> bool {
        self.failed() == 0
    }

    pub fn failures(&self) -> impl Iterator<Item = &Check> {
        self.checks.iter().filter(|c| !c.pass)
    }

    pub fn summary(&self) -> String {
        format!(
            "SUMMARY total={} passed={} failed={}",
            self.checks.len(),
            self.passed(),
            self.failed()
        )
    }
}

impl FromIterator<Check> for Report {
    fn from_iter<I: IntoIterator<Item = Check>>(iter: I) -> Report {
        Report {
            checks: iter.into_iter().collect(),
            notes: Vec::new(),
        }
    }
}

impl fmt::Display for Report {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        for c in &self.checks {
            writeln!(f, "{c}")?;
        }
        for n in &self.notes {
            writeln!(f, "NOTE {n}")?;
        }
        writeln!(f, "{}", self.summary())
    }
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn line_format() {
        let c = Check::new("trace", true, "4 = 4").n(2).k(3).eps("(0)");
        assert_eq!(c.to_string(), "CHECK trace n=2 k=3 eps=(0) PASS 4 = 4");
        let c = Check::new("presentation", false, "").k(2).label("(tau*sigma1)^4=-1");
        assert_eq!(c.to_string(), "CHECK presentation k=2 (tau*sigma1)^4=-1 FAIL");
        let r: Report = [c.clone(), c.clone().eps("x")].into_iter().collect();
        assert_eq!(r.summary(), "SUMMARY total=2 passed=0 failed=2");
        assert_eq!(Report::new().summary(), "SUMMARY total=0 passed=0 failed=0");
    }
}
