use std::fmt;

use crate::error::Result;
use crate::graded::{is_fibered, is_nearly_fibered, s_top, CollapsedGroup, Grading2x, MultiGradedGroup};

#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub enum Provenance {
    /// Printed in the literature and used as given.
    PaperTable,
    /// Base knot or link group derived from a classical rule.
    DerivedBase,
    /// Output of the rebuild pipeline.
    Pipeline,
}

impl fmt::Display for Provenance {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.write_str(match self {
            Provenance::PaperTable => "paper-table",
            Provenance::DerivedBase => "derived-base",
            Provenance::Pipeline => "pipeline",
        })
    }
}

#[derive(Debug, Clone, PartialEq, Eq)]
pub struct AtlasEntry {
    pub name: String,
    pub n: usize,
    pub collapsed: CollapsedGroup,
    pub multigraded: Option<MultiGradedGroup>,
    pub big_genus: Grading2x,
    pub fibered: bool,
    pub nearly_fibered: bool,
    pub provenance: Provenance,
}

impl AtlasEntry {
    /// Builds an entry, reading genus and fiberedness off the collapsed group.
    pub fn new(
        name: impl Into<String>,
        collapsed: CollapsedGroup,
        multigraded: Option<MultiGradedGroup>,
        provenance: Provenance,
    ) -> Result<Self> {
        Ok(AtlasEntry {
            name: name.into(),
            n: collapsed.n(),
            big_genus: s_top(&collapsed)?,
            fibered: is_fibered(&collapsed)?,
            nearly_fibered: is_nearly_fibered(&collapsed)?,
            collapsed,
            multigraded,
            provenance,
        })
    }
}
