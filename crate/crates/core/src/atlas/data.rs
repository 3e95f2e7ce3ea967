//! Raw groups the atlas is built from.
//!
//! Base knot groups follow the thin-knot rule: a knot with signature σ and
//! Alexander coefficients `a_A` carries `F^{|a_A|}` in Maslov grading
//! `A + σ/2`. Mirrored bases are produced by the mirror formula, not stored.

use crate::graded::{CollapsedGroup, MultiGradedGroup};

pub const UNKNOT: &str = "unknot";
pub const TREFOIL: &str = "T₂,₃";
pub const TREFOIL_MIRROR: &str = "T₂,₋₃";
pub const FIGURE_EIGHT: &str = "4₁";
pub const HOPF: &str = "T₂,₂";
pub const HOPF_MIRROR: &str = "T₂,₋₂";
pub const TREFOIL_SPLIT: &str = "T₂,₃ ⊔ ◯";
pub const TREFOIL_MIRROR_SPLIT: &str = "T₂,₋₃ ⊔ ◯";
pub const FIGURE_EIGHT_SPLIT: &str = "4₁ ⊔ ◯";
pub const HOPF_SPLIT: &str = "T₂,₂ ⊔ ◯";
pub const HOPF_MIRROR_SPLIT: &str = "T₂,₋₂ ⊔ ◯";
pub const TORUS_ANTI: &str = "T'₂,₄";
pub const TORUS_ANTI_MIRROR: &str = "T'₂,₋₄";
pub const CABLE_ANTI: &str = "T'₂,₃;₂,₄";
pub const CABLE_ANTI_MIRROR: &str = "T'₂,₋₃;₂,₋₄";
pub const CABLE_PARALLEL: &str = "T₂,₃;₂,₄";

/// Linking number of the two components of the parallel (2,4)-cable.
pub const CABLE_PARALLEL_LINKING: i64 = 2;

fn collapsed(n: usize, terms: &[(i64, i64, u64)]) -> CollapsedGroup {
    CollapsedGroup::from_int_terms(n, terms).expect("static data is well formed")
}

fn multigraded(n: usize, terms: &[(i64, &[i64], u64)]) -> MultiGradedGroup {
    MultiGradedGroup::from_int_terms(n, terms).expect("static data is well formed")
}

pub fn unknot() -> CollapsedGroup {
    collapsed(1, &[(0, 0, 1)])
}

/// Right-handed trefoil, σ = -2, Δ = t - 1 + t⁻¹.
pub fn trefoil() -> CollapsedGroup {
    collapsed(1, &[(0, 1, 1), (-1, 0, 1), (-2, -1, 1)])
}

/// Figure-eight knot, σ = 0, Δ = -t + 3 - t⁻¹.
pub fn figure_eight() -> CollapsedGroup {
    collapsed(1, &[(1, 1, 1), (0, 0, 3), (-1, -1, 1)])
}

/// Positive Hopf link, collapsed.
pub fn hopf() -> CollapsedGroup {
    collapsed(2, &[(0, 1, 1), (-1, 0, 2), (-2, -1, 1)])
}

/// `T_{2,4}` with oppositely oriented components; enters the table as seed data.
pub fn torus_anti() -> CollapsedGroup {
    collapsed(2, &[(0, 1, 2), (-1, 0, 4), (-2, -1, 2)])
}

/// (2,4)-cable of the right-handed trefoil, components parallel.
pub fn parallel_cable_multigraded() -> MultiGradedGroup {
    multigraded(
        2,
        &[
            (0, &[2, 2], 1),
            (-1, &[2, 1], 1),
            (-1, &[1, 2], 1),
            (-2, &[1, 1], 1),
            (-2, &[0, 0], 1),
            (-3, &[0, 0], 1),
            (-6, &[-1, -1], 1),
            (-7, &[-2, -1], 1),
            (-7, &[-1, -2], 1),
            (-8, &[-2, -2], 1),
        ],
    )
}

/// The oppositely oriented cable as printed, including the misplaced
/// generator `F_(-3)[-1,2]`.
pub fn printed_reversed_cable_multigraded() -> MultiGradedGroup {
    multigraded(
        2,
        &[
            (-1, &[2, -1], 1),
            (-1, &[-1, 2], 1),
            (0, &[0, 0], 1),
            (-1, &[0, 0], 1),
            (-2, &[2, -2], 1),
            (-2, &[1, -1], 1),
            (-2, &[-1, 1], 1),
            (-2, &[-2, 2], 1),
            (-3, &[-1, 2], 1),
            (-3, &[1, -2], 1),
        ],
    )
}

/// The printed list with `F_(-3)[-1,2]` replaced by `F_(-3)[-2,1]`.
pub fn reversed_cable_multigraded() -> MultiGradedGroup {
    multigraded(
        2,
        &[
            (-1, &[2, -1], 1),
            (-1, &[-1, 2], 1),
            (0, &[0, 0], 1),
            (-1, &[0, 0], 1),
            (-2, &[2, -2], 1),
            (-2, &[1, -1], 1),
            (-2, &[-1, 1], 1),
            (-2, &[-2, 2], 1),
            (-3, &[-2, 1], 1),
            (-3, &[1, -2], 1),
        ],
    )
}

/// The nine rows of the genus-one nearly fibered link table, exactly as printed.
pub fn printed_table() -> Vec<(String, CollapsedGroup)> {
    let rows: [(&str, usize, &[(i64, i64, u64)]); 9] = [
        (TREFOIL_SPLIT, 2, &[(-3, -1, 1), (-2, -1, 1), (-2, 0, 1), (-1, 0, 1), (-1, 1, 1), (0, 1, 1)]),
        (TREFOIL_MIRROR_SPLIT, 2, &[(-1, -1, 1), (0, -1, 1), (0, 0, 1), (1, 0, 1), (1, 1, 1), (2, 1, 1)]),
        (FIGURE_EIGHT_SPLIT, 2, &[(-2, -1, 1), (-1, -1, 1), (-1, 0, 1), (0, 0, 1), (0, 1, 1), (1, 1, 1)]),
        (HOPF_SPLIT, 3, &[(-3, -1, 1), (-2, -1, 1), (-2, 0, 2), (-1, 0, 2), (-1, 1, 1), (0, 1, 1)]),
        (HOPF_MIRROR_SPLIT, 3, &[(-2, -1, 1), (-1, -1, 1), (-1, 0, 2), (0, 0, 2), (0, 1, 1), (1, 1, 1)]),
        (TORUS_ANTI, 2, &[(-2, -1, 2), (-1, 0, 4), (0, 1, 2)]),
        (TORUS_ANTI_MIRROR, 2, &[(-1, -1, 2), (0, 0, 4), (1, 1, 2)]),
        (CABLE_ANTI, 2, &[(-3, -1, 2), (-2, 0, 4), (-1, 0, 1), (0, 0, 1), (-1, 1, 2)]),
        (CABLE_ANTI_MIRROR, 2, &[(0, -1, 2), (-1, 0, 1), (0, 0, 1), (1, 0, 4), (2, 1, 2)]),
    ];
    rows.iter().map(|&(name, n, terms)| (name.to_string(), collapsed(n, terms))).collect()
}

/// Everything the table rebuild consumes. Swapping a field lets callers
/// audit how corrupted inputs surface in the report.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct SourceData {
    pub unknot: CollapsedGroup,
    pub trefoil: CollapsedGroup,
    pub figure_eight: CollapsedGroup,
    pub hopf: CollapsedGroup,
    pub torus_anti: CollapsedGroup,
    pub parallel_cable: MultiGradedGroup,
    pub parallel_cable_linking: i64,
    pub printed_table: Vec<(String, CollapsedGroup)>,
    pub printed_reversed_cable: MultiGradedGroup,
}

impl SourceData {
    pub fn standard() -> Self {
        SourceData {
            unknot: unknot(),
            trefoil: trefoil(),
            figure_eight: figure_eight(),
            hopf: hopf(),
            torus_anti: torus_anti(),
            parallel_cable: parallel_cable_multigraded(),
            parallel_cable_linking: CABLE_PARALLEL_LINKING,
            printed_table: printed_table(),
            printed_reversed_cable: printed_reversed_cable_multigraded(),
        }
    }
}

impl Default for SourceData {
    fn default() -> Self {
        Self::standard()
    }
}
