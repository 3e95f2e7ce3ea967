//! Graded link Floer homology groups over F = Z/2 and the operations on them.

mod grading;
mod group;
mod ops;

pub use grading::Grading2x;
pub use group::{field_power, format_column, CollapsedGroup, MultiGradedGroup};
pub use ops::{
    collapse, disjoint_union, is_fibered, is_nearly_fibered, mirror, reverse_component, s_top,
    top_rank,
};
