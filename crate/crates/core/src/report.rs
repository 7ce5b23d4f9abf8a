//! Verification outcomes.

use std::fmt;

#[derive(Clone, Debug, PartialEq)]
pub struct Report {
    pub name: String,
    pub params: Vec<(String, String)>,
    pub passed: bool,
    pub cases: usize,
    pub witness: Option<String>,
}

impl Report {
    pub fn new(name: &str) -> Report {
        Report { name: name.to_string(), params: Vec::new(), passed: true, cases: 0, witness: None }
    }

    pub fn param(mut self, k: &str, v: impl fmt::Display) -> Report {
        self.params.push((k.to_string(), v.to_string()));
        self
    }

    /// Records one case; the first failure is kept as the witness.
    pub fn check(&mut self, ok: bool, witness: impl FnOnce() -> String) {
        self.cases += 1;
        if !ok && self.passed {
            self.passed = false;
            self.witness = Some(witness());
        }
    }

    pub fn fail(&mut self, witness: String) {
        self.cases += 1;
        if self.passed {
            self.passed = false;
            self.witness = Some(witness);
        }
    }

    /// Folds another report's cases into this one.
    pub fn absorb(&mut self, o: Report) {
        self.cases += o.cases;
        if !o.passed && self.passed {
            self.passed = false;
            self.witness = Some(format!("{}: {}", o.name, o.witness.unwrap_or_default()));
        }
    }
}

impl fmt::Display for Report {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "{} [{}] {} cases", self.name, if self.passed { "pass" } else { "FAIL" }, self.cases)?;
        if let Some(w) = &self.witness {
            write!(f, ": {}", w)?;
        }
        Ok(())
    }
}
