use std::collections::BTreeSet;
use std::fmt;

use super::data::{self, SourceData};
use crate::graded::{
    collapse, disjoint_union, format_column, mirror, reverse_component, CollapsedGroup,
    Grading2x, MultiGradedGroup,
};

/// How a table row was regenerated.
#[derive(Debug, Clone, PartialEq, Eq)]
pub enum RowSource {
    /// Split union of a fibered base link with the unknot.
    SplitUnion { base: &'static str },
    /// Mirror image of another row.
    Mirror { of: &'static str },
    /// Orientation reversal of one cable component followed by collapsing.
    OrientationReversal,
    /// Taken as given from the literature.
    Seed,
}

impl fmt::Display for RowSource {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        match self {
            RowSource::SplitUnion { base } => write!(f, "{base} ⊔ unknot"),
            RowSource::Mirror { of } => write!(f, "mirror of {of}"),
            RowSource::OrientationReversal => write!(f, "reverse component 2 of {}", data::CABLE_PARALLEL),
            RowSource::Seed => write!(f, "seed"),
        }
    }
}

#[derive(Debug, Clone, PartialEq, Eq)]
pub struct RebuiltRow {
    pub name: String,
    pub source: RowSource,
    pub pipeline: CollapsedGroup,
    pub printed: Option<CollapsedGroup>,
}

/// One printed-vs-pipeline disagreement, restricted to a single grading.
#[derive(Debug, Clone, PartialEq, Eq, PartialOrd, Ord)]
pub struct Discrepancy {
    pub row: String,
    pub grading: String,
    pub pipeline: String,
    pub paper: String,
}

impl fmt::Display for Discrepancy {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "{} | {} | pipeline={} paper={}", self.row, self.grading, self.pipeline, self.paper)
    }
}

#[derive(Debug, Clone, PartialEq, Eq)]
pub struct RebuildReport {
    pub rows: Vec<RebuiltRow>,
    /// Pipeline output for the oppositely oriented cable, before collapsing.
    pub reversed_cable: MultiGradedGroup,
    pub discrepancies: Vec<Discrepancy>,
}

impl RebuildReport {
    pub fn row(&self, name: &str) -> Option<&RebuiltRow> {
        self.rows.iter().find(|r| r.name == name)
    }

    /// Plain-text discrepancy report, one line per diff.
    pub fn discrepancy_text(&self) -> String {
        self.discrepancies.iter().map(|d| format!("{d}\n")).collect()
    }
}

pub const MULTIGRADED_SUFFIX: &str = " (multi-graded)";

/// The two known misprints: the middle column of the split figure-eight row,
/// and one misplaced generator in the multi-graded oppositely oriented cable.
pub fn documented_discrepancies() -> Vec<Discrepancy> {
    vec![
        Discrepancy {
            row: data::FIGURE_EIGHT_SPLIT.to_string(),
            grading: "s=0".to_string(),
            pipeline: "F³₍₋₁₎ ⊕ F³₍₀₎".to_string(),
            paper: "F₍₋₁₎ ⊕ F₍₀₎".to_string(),
        },
        Discrepancy {
            row: format!("{}{MULTIGRADED_SUFFIX}", data::CABLE_ANTI),
            grading: "d=-3".to_string(),
            pipeline: "F₍₋₃₎[1,-2] ⊕ F₍₋₃₎[-2,1]".to_string(),
            paper: "F₍₋₃₎[1,-2] ⊕ F₍₋₃₎[-1,2]".to_string(),
        },
    ]
}

fn collapsed_diffs(row: &str, pipeline: &CollapsedGroup, printed: &CollapsedGroup) -> Vec<Discrepancy> {
    let mut gradings: BTreeSet<Grading2x> = pipeline.alexander_support().into_iter().collect();
    gradings.extend(printed.alexander_support());
    let mut out = Vec::new();
    if pipeline.n() != printed.n() {
        out.push(Discrepancy {
            row: row.to_string(),
            grading: "components".to_string(),
            pipeline: pipeline.n().to_string(),
            paper: printed.n().to_string(),
        });
    }
    for s in gradings {
        let (a, b) = (pipeline.column(s), printed.column(s));
        if a != b {
            out.push(Discrepancy {
                row: row.to_string(),
                grading: format!("s={s}"),
                pipeline: format_column(&a),
                paper: format_column(&b),
            });
        }
    }
    out
}

fn maslov_slice(group: &MultiGradedGroup, d: i64) -> MultiGradedGroup {
    MultiGradedGroup::from_terms(
        group.n(),
        group.iter().filter(|&(e, _, _)| e == d).map(|(e, s, r)| (e, s.to_vec(), r)),
    )
    .expect("slice of a valid group")
}

fn multigraded_diffs(row: &str, pipeline: &MultiGradedGroup, printed: &MultiGradedGroup) -> Vec<Discrepancy> {
    let maslov: BTreeSet<i64> = pipeline.iter().chain(printed.iter()).map(|(d, _, _)| d).collect();
    let row = format!("{row}{MULTIGRADED_SUFFIX}");
    maslov
        .into_iter()
        .rev()
        .filter_map(|d| {
            let (a, b) = (maslov_slice(pipeline, d), maslov_slice(printed, d));
            (a != b).then(|| Discrepancy {
                row: row.clone(),
                grading: format!("d={d}"),
                pipeline: a.to_string(),
                paper: b.to_string(),
            })
        })
        .collect()
}

/// Regenerates every table row from base groups and compares against the
/// printed values. Differences are returned as data.
pub fn rebuild_table_from(source: &SourceData) -> RebuildReport {
    let unknot = &source.unknot;
    let trefoil_mirror = mirror(&source.trefoil);
    let hopf_mirror = mirror(&source.hopf);
    let reversed_cable =
        reverse_component(&source.parallel_cable, 2, source.parallel_cable_linking)
            .expect("the cable has two components");
    let cable = collapse(&reversed_cable).expect("the cable group is nonempty");

    let generated: Vec<(&'static str, RowSource, CollapsedGroup)> = vec![
        (
            data::TREFOIL_SPLIT,
            RowSource::SplitUnion { base: data::TREFOIL },
            disjoint_union(&source.trefoil, unknot),
        ),
        (
            data::TREFOIL_MIRROR_SPLIT,
            RowSource::SplitUnion { base: data::TREFOIL_MIRROR },
            disjoint_union(&trefoil_mirror, unknot),
        ),
        (
            data::FIGURE_EIGHT_SPLIT,
            RowSource::SplitUnion { base: data::FIGURE_EIGHT },
            disjoint_union(&source.figure_eight, unknot),
        ),
        (
            data::HOPF_SPLIT,
            RowSource::SplitUnion { base: data::HOPF },
            disjoint_union(&source.hopf, unknot),
        ),
        (
            data::HOPF_MIRROR_SPLIT,
            RowSource::SplitUnion { base: data::HOPF_MIRROR },
            disjoint_union(&hopf_mirror, unknot),
        ),
        (data::TORUS_ANTI, RowSource::Seed, source.torus_anti.clone()),
        (
            data::TORUS_ANTI_MIRROR,
            RowSource::Mirror { of: data::TORUS_ANTI },
            mirror(&source.torus_anti),
        ),
        (data::CABLE_ANTI, RowSource::OrientationReversal, cable.clone()),
        (data::CABLE_ANTI_MIRROR, RowSource::Mirror { of: data::CABLE_ANTI }, mirror(&cable)),
    ];

    let mut discrepancies = Vec::new();
    let rows: Vec<RebuiltRow> = generated
        .into_iter()
        .map(|(name, source_kind, pipeline)| {
            let printed = source
                .printed_table
                .iter()
                .find(|(n, _)| n == name)
                .map(|(_, g)| g.clone());
            match &printed {
                Some(p) => discrepancies.extend(collapsed_diffs(name, &pipeline, p)),
                None => discrepancies.push(Discrepancy {
                    row: name.to_string(),
                    grading: "row".to_string(),
                    pipeline: pipeline.to_string(),
                    paper: "missing".to_string(),
                }),
            }
            RebuiltRow { name: name.to_string(), source: source_kind, pipeline, printed }
        })
        .collect();
    for (name, group) in &source.printed_table {
        if !rows.iter().any(|r| &r.name == name) {
            discrepancies.push(Discrepancy {
                row: name.clone(),
                grading: "row".to_string(),
                pipeline: "missing".to_string(),
                paper: group.to_string(),
            });
        }
    }
    discrepancies.extend(multigraded_diffs(
        data::CABLE_ANTI,
        &reversed_cable,
        &source.printed_reversed_cable,
    ));

    RebuildReport { rows, reversed_cable, discrepancies }
}

pub fn rebuild_table() -> RebuildReport {
    rebuild_table_from(&SourceData::standard())
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn exactly_the_documented_discrepancies() {
        let report = rebuild_table();
        assert_eq!(report.discrepancies, documented_discrepancies());
        assert_eq!(report.rows.len(), 9);
    }

    #[test]
    fn cable_row_reproduces_printed_group() {
        let report = rebuild_table();
        let row = report.row(data::CABLE_ANTI).unwrap();
        assert_eq!(Some(&row.pipeline), row.printed.as_ref());
        assert_eq!(report.reversed_cable, data::reversed_cable_multigraded());
    }

    #[test]
    fn split_trefoil_row_matches() {
        let report = rebuild_table();
        let row = report.row(data::TREFOIL_SPLIT).unwrap();
        assert_eq!(Some(&row.pipeline), row.printed.as_ref());
    }

    #[test]
    fn report_lines() {
        let text = rebuild_table().discrepancy_text();
        let lines: Vec<&str> = text.lines().collect();
        assert_eq!(lines[0], "4₁ ⊔ ◯ | s=0 | pipeline=F³₍₋₁₎ ⊕ F³₍₀₎ paper=F₍₋₁₎ ⊕ F₍₀₎");
        assert_eq!(
            lines[1],
            "T'₂,₃;₂,₄ (multi-graded) | d=-3 | pipeline=F₍₋₃₎[1,-2] ⊕ F₍₋₃₎[-2,1] paper=F₍₋₃₎[1,-2] ⊕ F₍₋₃₎[-1,2]"
        );
    }

    #[test]
    fn corrupted_base_shows_up() {
        let mut source = SourceData::standard();
        source.trefoil = data::figure_eight();
        let report = rebuild_table_from(&source);
        assert!(report.discrepancies.len() > documented_discrepancies().len());
        assert!(report.discrepancies.iter().any(|d| d.row == data::TREFOIL_SPLIT));
    }

    #[test]
    fn missing_printed_row_is_reported() {
        let mut source = SourceData::standard();
        source.printed_table.retain(|(n, _)| n != data::TORUS_ANTI);
        let report = rebuild_table_from(&source);
        assert!(report
            .discrepancies
            .iter()
            .any(|d| d.row == data::TORUS_ANTI && d.paper == "missing"));
    }
}
