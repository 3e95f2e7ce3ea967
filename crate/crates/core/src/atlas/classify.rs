use std::fmt;

use super::entry::AtlasEntry;
use crate::error::Result;
use crate::graded::{s_top, top_rank, CollapsedGroup, Grading2x};

pub const SPLIT_NOTE: &str = "non-split impossible (component lemma): must be split";

#[derive(Debug, Clone, PartialEq, Eq)]
pub enum Classification {
    /// Exactly equal to the group of a non-fibered catalog link.
    Matched { names: Vec<String> },
    /// Fibered, and equal to the group of a fibered catalog link.
    Fibered { genus: Grading2x, names: Vec<String> },
    /// A nearly fibered knot; those are classified separately and not named here.
    KnotCase { genus: Grading2x },
    Unclassified { s_top: Grading2x, top_rank: u64, note: Option<String> },
}

impl Classification {
    pub fn names(&self) -> &[String] {
        match self {
            Classification::Matched { names } | Classification::Fibered { names, .. } => names,
            _ => &[],
        }
    }
}

impl fmt::Display for Classification {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        match self {
            Classification::Matched { names } => write!(f, "matched: {}", names.join(", ")),
            Classification::Fibered { genus, names } => {
                write!(f, "fibered-genus-{genus}: {}", names.join(", "))
            }
            Classification::KnotCase { genus } => write!(
                f,
                "knot-case: nearly fibered knot of genus {genus}; see the nearly fibered knot classification"
            ),
            Classification::Unclassified { s_top, top_rank, note } => {
                write!(f, "unclassified: s_top={s_top} top-rank={top_rank}")?;
                if let Some(note) = note {
                    write!(f, "; {note}")?;
                }
                Ok(())
            }
        }
    }
}

/// Classifies `group` by exact comparison against `entries`.
pub fn classify_in(entries: &[AtlasEntry], group: &CollapsedGroup) -> Result<Classification> {
    let s_top = s_top(group)?;
    let top_rank = top_rank(group)?;
    let matches: Vec<&AtlasEntry> =
        entries.iter().filter(|e| e.n == group.n() && &e.collapsed == group).collect();
    let names: Vec<String> = matches.iter().map(|e| e.name.clone()).collect();

    if top_rank == 1 && !names.is_empty() {
        return Ok(Classification::Fibered { genus: s_top, names });
    }
    if !names.is_empty() {
        return Ok(Classification::Matched { names });
    }
    if top_rank == 2 && group.n() == 1 {
        return Ok(Classification::KnotCase { genus: s_top });
    }
    let note = (top_rank == 2 && s_top == Grading2x::from_int(1) && group.n() > 2)
        .then(|| SPLIT_NOTE.to_string());
    Ok(Classification::Unclassified { s_top, top_rank, note })
}

pub fn classify(group: &CollapsedGroup) -> Result<Classification> {
    classify_in(super::catalog(), group)
}
