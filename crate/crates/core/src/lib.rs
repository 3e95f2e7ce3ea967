//! Exact link Floer homology groups of links in S³: grading transformations,
//! fiberedness detection, h-functions of L-space knots, surgery homology, and
//! an atlas of the genus-one nearly fibered links.

pub mod atlas;
pub mod cli;
pub mod error;
pub mod format;
pub mod graded;
pub mod hfunction;
pub mod surgery;
pub mod verify;

pub use error::{Error, Result};
pub use graded::{CollapsedGroup, Grading2x, MultiGradedGroup};
