//! Pass/fail bookkeeping for identity checks.

use std::fmt;

use serde::Serialize;

#[derive(Clone, Debug, PartialEq, Eq, Serialize)]
pub struct FamilyResult {
    pub name: String,
    pub instances: usize,
    pub failures: Vec<String>,
}

impl FamilyResult {
    pub fn passed(&self) -> bool {
        self.failures.is_empty()
    }
}

#[derive(Clone, Debug, PartialEq, Eq, Serialize)]
pub struct RelationReport {
    pub r: usize,
    pub n: usize,
    pub families: Vec<FamilyResult>,
}

impl RelationReport {
    pub fn new(r: usize, n: usize) -> Self {
        RelationReport { r, n, families: Vec::new() }
    }

    fn family(&mut self, name: &str) -> &mut FamilyResult {
        let pos = match self.families.iter().position(|f| f.name == name) {
            Some(pos) => pos,
            None => {
                self.families.push(FamilyResult { name: name.to_string(), instances: 0, failures: Vec::new() });
                self.families.len() - 1
            }
        };
        &mut self.families[pos]
    }

    pub fn record(&mut self, family: &str, label: impl FnOnce() -> String, ok: bool) {
        let f = self.family(family);
        f.instances += 1;
        if !ok {
            f.failures.push(label());
        }
    }

    pub fn family_count(&self) -> usize {
        self.families.len()
    }

    pub fn all_passed(&self) -> bool {
        self.families.iter().all(FamilyResult::passed)
    }

    pub fn merge(&mut self, other: RelationReport) {
        for f in other.families {
            let mine = self.family(&f.name);
            mine.instances += f.instances;
            mine.failures.extend(f.failures);
        }
    }
}

impl fmt::Display for RelationReport {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        for fam in &self.families {
            let status = if fam.passed() { "PASS" } else { "FAIL" };
            writeln!(f, "{:<22} {:>5}  {}", fam.name, fam.instances, status)?;
            for failure in &fam.failures {
                writeln!(f, "    failed: {failure}")?;
            }
        }
        Ok(())
    }
}
