use std::fmt;

use super::entry::AtlasEntry;
use crate::graded::{collapse, is_fibered, is_nearly_fibered, s_top};

#[derive(Debug, Clone, PartialEq, Eq)]
pub struct EntryCheck {
    pub name: String,
    pub failures: Vec<String>,
}

impl EntryCheck {
    pub fn passed(&self) -> bool {
        self.failures.is_empty()
    }
}

#[derive(Debug, Clone, PartialEq, Eq)]
pub struct ValidationReport {
    pub entries: Vec<EntryCheck>,
    /// Pairs of entries whose collapsed groups coincide.
    pub collisions: Vec<(String, String)>,
}

impl ValidationReport {
    pub fn passed(&self) -> bool {
        self.collisions.is_empty() && self.entries.iter().all(EntryCheck::passed)
    }
}

impl fmt::Display for ValidationReport {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        for e in &self.entries {
            if e.passed() {
                writeln!(f, "PASS {}", e.name)?;
            } else {
                writeln!(f, "FAIL {}: {}", e.name, e.failures.join("; "))?;
            }
        }
        for (a, b) in &self.collisions {
            writeln!(f, "FAIL {a} and {b} have the same homology")?;
        }
        Ok(())
    }
}

fn check_entry(entry: &AtlasEntry) -> EntryCheck {
    let mut failures = Vec::new();
    let c = &entry.collapsed;
    if c.is_empty() {
        failures.push("empty group".to_string());
        return EntryCheck { name: entry.name.clone(), failures };
    }
    if c.n() != entry.n {
        failures.push(format!("component count {} but group has {}", entry.n, c.n()));
    }
    if !c.check_symmetry() {
        failures.push("collapsed group is not symmetric".to_string());
    }
    let floor = 1u64 << (entry.n - 1).min(63);
    if c.total_rank() < floor {
        failures.push(format!("total rank {} below 2^(n-1) = {floor}", c.total_rank()));
    }
    if s_top(c).ok() != Some(entry.big_genus) {
        failures.push(format!("big genus flag {} disagrees with s_top", entry.big_genus));
    }
    if is_fibered(c).ok() != Some(entry.fibered) {
        failures.push("fibered flag disagrees with top rank".to_string());
    }
    if is_nearly_fibered(c).ok() != Some(entry.nearly_fibered) {
        failures.push("nearly fibered flag disagrees with top rank".to_string());
    }
    if let Some(m) = &entry.multigraded {
        if !m.check_symmetry() {
            failures.push("multi-graded group is not symmetric".to_string());
        }
        if collapse(m).ok().as_ref() != Some(c) {
            failures.push("multi-graded group does not collapse to the collapsed group".to_string());
        }
    }
    EntryCheck { name: entry.name.clone(), failures }
}

/// Per-entry consistency checks plus pairwise distinctness of the groups.
pub fn validate_entries(entries: &[AtlasEntry]) -> ValidationReport {
    let checks = entries.iter().map(check_entry).collect();
    let mut collisions = Vec::new();
    for (i, a) in entries.iter().enumerate() {
        for b in &entries[i + 1..] {
            if a.collapsed == b.collapsed {
                collisions.push((a.name.clone(), b.name.clone()));
            }
        }
    }
    ValidationReport { entries: checks, collisions }
}

pub fn validate_catalog() -> ValidationReport {
    validate_entries(super::catalog())
}
