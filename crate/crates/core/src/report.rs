//! Axiom reports and the law runner behind every checker.
//!
//! A [`LawSet`] is a list of named universally quantified laws, each over a
//! finite product domain `0..d0 × 0..d1 × ...`. Running the set scans every
//! tuple in lexicographic order, so the first violation recorded for a law is
//! its lexicographically minimal witness. The same closures are used to
//! re-verify witnesses taken from an emitted report.

use serde::{Deserialize, Serialize};
use std::fmt;
use std::time::Instant;

use crate::error::Violation;

#[derive(Clone, Copy, Debug, PartialEq, Eq, Serialize, Deserialize)]
#[serde(rename_all = "snake_case")]
pub enum Status {
    Pass,
    Fail,
    Skipped,
}

#[derive(Clone, Debug, PartialEq, Serialize, Deserialize)]
pub struct AxiomResult {
    pub axiom: String,
    pub vars: Vec<String>,
    pub status: Status,
    /// Number of tuples scanned.
    pub checked: u64,
    pub violations: u64,
    /// Lexicographically minimal violating tuple.
    #[serde(skip_serializing_if = "Option::is_none", default)]
    pub witness: Option<Vec<usize>>,
    #[serde(skip_serializing_if = "Option::is_none", default)]
    pub note: Option<String>,
}

#[derive(Clone, Debug, PartialEq, Serialize, Deserialize)]
pub struct AxiomReport {
    pub structure: String,
    pub axioms: Vec<AxiomResult>,
    pub elapsed_ms: f64,
}

impl AxiomReport {
    pub fn new(structure: impl Into<String>) -> Self {
        AxiomReport {
            structure: structure.into(),
            axioms: Vec::new(),
            elapsed_ms: 0.0,
        }
    }

    /// True when no axiom failed. Skipped axioms do not count as failures.
    pub fn passed(&self) -> bool {
        self.axioms.iter().all(|a| a.status != Status::Fail)
    }

    pub fn failed_axioms(&self) -> Vec<&str> {
        self.axioms
            .iter()
            .filter(|a| a.status == Status::Fail)
            .map(|a| a.axiom.as_str())
            .collect()
    }

    pub fn get(&self, axiom: &str) -> Option<&AxiomResult> {
        self.axioms.iter().find(|a| a.axiom == axiom)
    }

    pub fn status(&self, axiom: &str) -> Option<Status> {
        self.get(axiom).map(|a| a.status)
    }

    /// Appends the axioms of `other`, keeping this report's name.
    pub fn merge(&mut self, other: AxiomReport) {
        self.axioms.extend(other.axioms);
        self.elapsed_ms += other.elapsed_ms;
    }

    /// `Err(AxiomFailure)` naming every failed axiom.
    pub fn ensure_passed(&self) -> crate::error::Result<()> {
        if self.passed() {
            return Ok(());
        }
        Err(crate::error::Error::AxiomFailure {
            structure: self.structure.clone(),
            axioms: self.failed_axioms().iter().map(|s| s.to_string()).collect(),
        })
    }

    pub fn first_violation(&self) -> Option<Violation> {
        self.axioms
            .iter()
            .find(|a| a.status == Status::Fail)
            .map(|a| Violation::new(a.axiom.clone(), a.witness.clone().unwrap_or_default()))
    }
}

impl fmt::Display for AxiomReport {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        writeln!(f, "{}:", self.structure)?;
        for a in &self.axioms {
            match a.status {
                Status::Pass => writeln!(f, "  {:<28} pass ({} checked)", a.axiom, a.checked)?,
                Status::Skipped => writeln!(
                    f,
                    "  {:<28} skipped ({})",
                    a.axiom,
                    a.note.as_deref().unwrap_or("precondition failed")
                )?,
                Status::Fail => {
                    let vars = a.vars.join(",");
                    let w = a
                        .witness
                        .as_ref()
                        .map(|w| format!("{w:?}"))
                        .unwrap_or_default();
                    writeln!(
                        f,
                        "  {:<28} FAIL {} violation(s), witness ({vars}) = {w}",
                        a.axiom, a.violations
                    )?
                }
            }
        }
        Ok(())
    }
}

type Pred<'a> = Box<dyn Fn(&[usize]) -> bool + 'a>;

enum LawKind<'a> {
    Check(Pred<'a>),
    Skipped(String),
}

pub struct Law<'a> {
    name: String,
    vars: Vec<String>,
    domain: Vec<usize>,
    kind: LawKind<'a>,
}

#[derive(Default)]
pub struct LawSet<'a> {
    laws: Vec<Law<'a>>,
}

impl<'a> LawSet<'a> {
    pub fn new() -> Self {
        LawSet { laws: Vec::new() }
    }

    /// Registers a law quantified over `vars`, the i-th ranging over `0..domain[i]`.
    pub fn law<F>(&mut self, name: &str, vars: &[&str], domain: &[usize], holds: F) -> &mut Self
    where
        F: Fn(&[usize]) -> bool + 'a,
    {
        assert_eq!(vars.len(), domain.len(), "law {name}: vars/domain mismatch");
        self.laws.push(Law {
            name: name.to_string(),
            vars: vars.iter().map(|v| v.to_string()).collect(),
            domain: domain.to_vec(),
            kind: LawKind::Check(Box::new(holds)),
        });
        self
    }

    pub fn skip(&mut self, name: &str, reason: &str) -> &mut Self {
        self.laws.push(Law {
            name: name.to_string(),
            vars: Vec::new(),
            domain: Vec::new(),
            kind: LawKind::Skipped(reason.to_string()),
        });
        self
    }

    pub fn append(&mut self, other: LawSet<'a>) -> &mut Self {
        self.laws.extend(other.laws);
        self
    }

    /// Renames every law to `"{prefix}: {name}"`.
    pub fn prefixed(mut self, prefix: &str) -> Self {
        for law in &mut self.laws {
            law.name = format!("{prefix}: {}", law.name);
        }
        self
    }

    pub fn names(&self) -> Vec<&str> {
        self.laws.iter().map(|l| l.name.as_str()).collect()
    }

    /// Evaluates the named law at one tuple. `None` if the law is unknown,
    /// skipped, or the tuple is outside its domain.
    pub fn holds_at(&self, name: &str, witness: &[usize]) -> Option<bool> {
        let law = self.laws.iter().find(|l| l.name == name)?;
        match &law.kind {
            LawKind::Skipped(_) => None,
            LawKind::Check(f) => {
                if witness.len() != law.domain.len()
                    || witness.iter().zip(&law.domain).any(|(w, d)| w >= d)
                {
                    return None;
                }
                Some(f(witness))
            }
        }
    }

    pub fn run(&self, structure: &str) -> AxiomReport {
        let start = Instant::now();
        let mut report = AxiomReport::new(structure);
        for law in &self.laws {
            report.axioms.push(run_law(law));
        }
        report.elapsed_ms = start.elapsed().as_secs_f64() * 1e3;
        report
    }

    /// Checks that every failed axiom in `report` carries a witness that
    /// still violates the corresponding law here.
    pub fn reverify(&self, report: &AxiomReport) -> Result<(), Violation> {
        for a in report.axioms.iter().filter(|a| a.status == Status::Fail) {
            let w = a
                .witness
                .clone()
                .ok_or_else(|| Violation::new(format!("{}: missing witness", a.axiom), vec![]))?;
            match self.holds_at(&a.axiom, &w) {
                Some(false) => {}
                _ => return Err(Violation::new(format!("{}: witness does not re-verify", a.axiom), w)),
            }
        }
        Ok(())
    }
}

fn run_law(law: &Law<'_>) -> AxiomResult {
    let mut result = AxiomResult {
        axiom: law.name.clone(),
        vars: law.vars.clone(),
        status: Status::Pass,
        checked: 0,
        violations: 0,
        witness: None,
        note: None,
    };
    let pred = match &law.kind {
        LawKind::Skipped(reason) => {
            result.status = Status::Skipped;
            result.note = Some(reason.clone());
            return result;
        }
        LawKind::Check(f) => f,
    };
    if law.domain.iter().any(|&d| d == 0) {
        return result;
    }
    let mut tuple = vec![0usize; law.domain.len()];
    loop {
        result.checked += 1;
        if !pred(&tuple) {
            result.violations += 1;
            if result.witness.is_none() {
                result.witness = Some(tuple.clone());
            }
        }
        // odometer, last coordinate fastest
        let mut i = tuple.len();
        loop {
            if i == 0 {
                if result.violations > 0 {
                    result.status = Status::Fail;
                }
                return result;
            }
            i -= 1;
            tuple[i] += 1;
            if tuple[i] < law.domain[i] {
                break;
            }
            tuple[i] = 0;
        }
    }
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn minimal_witness_is_lexicographic() {
        let mut laws = LawSet::new();
        laws.law("sum", &["a", "b"], &[4, 4], |t| t[0] + t[1] < 5);
        let r = laws.run("toy");
        let a = r.get("sum").unwrap();
        assert_eq!(a.status, Status::Fail);
        assert_eq!(a.witness, Some(vec![2, 3]));
        assert_eq!(a.violations, 3);
        assert_eq!(a.checked, 16);
        assert!(laws.reverify(&r).is_ok());
    }

    #[test]
    fn nullary_and_empty_domains() {
        let mut laws = LawSet::new();
        laws.law("nullary", &[], &[], |_| false);
        laws.law("vacuous", &["x"], &[0], |_| false);
        laws.skip("later", "needs a zero");
        let r = laws.run("toy");
        assert_eq!(r.get("nullary").unwrap().witness, Some(vec![]));
        assert_eq!(r.status("vacuous"), Some(Status::Pass));
        assert_eq!(r.status("later"), Some(Status::Skipped));
        assert!(!r.passed());
    }

    #[test]
    fn tampered_witness_is_rejected() {
        let mut laws = LawSet::new();
        laws.law("small", &["x"], &[10], |t| t[0] < 7);
        let mut r = laws.run("toy");
        r.axioms[0].witness = Some(vec![1]);
        assert!(laws.reverify(&r).is_err());
    }
}
