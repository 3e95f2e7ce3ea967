//! Catalog of genus-one fibered and nearly fibered links, the table rebuild
//! pipeline and the classifier.

mod classify;
pub mod data;
mod entry;
mod rebuild;
mod validate;

use std::sync::OnceLock;

pub use classify::{classify, classify_in, Classification, SPLIT_NOTE};
pub use data::SourceData;
pub use entry::{AtlasEntry, Provenance};
pub use rebuild::{
    documented_discrepancies, rebuild_table, rebuild_table_from, Discrepancy, RebuildReport,
    RebuiltRow, RowSource, MULTIGRADED_SUFFIX,
};
pub use validate::{validate_catalog, validate_entries, EntryCheck, ValidationReport};

use crate::graded::mirror;

/// Names of the six fibered links of big genus at most one.
pub const FIBERED_BASE: [&str; 6] = [
    data::UNKNOT,
    data::TREFOIL,
    data::TREFOIL_MIRROR,
    data::FIGURE_EIGHT,
    data::HOPF,
    data::HOPF_MIRROR,
];

/// Builds the catalog from `source`. Table rows come from the rebuild
/// pipeline, so printed misprints never enter the catalog.
pub fn catalog_from(source: &SourceData) -> Vec<AtlasEntry> {
    let entry = |name: &str, group, multi, provenance| {
        AtlasEntry::new(name, group, multi, provenance).expect("catalog groups are nonempty")
    };
    let mut entries = vec![
        entry(data::UNKNOT, source.unknot.clone(), None, Provenance::DerivedBase),
        entry(data::TREFOIL, source.trefoil.clone(), None, Provenance::DerivedBase),
        entry(data::TREFOIL_MIRROR, mirror(&source.trefoil), None, Provenance::DerivedBase),
        entry(data::FIGURE_EIGHT, source.figure_eight.clone(), None, Provenance::DerivedBase),
        entry(data::HOPF, source.hopf.clone(), None, Provenance::DerivedBase),
        entry(data::HOPF_MIRROR, mirror(&source.hopf), None, Provenance::DerivedBase),
    ];
    let parallel = crate::graded::collapse(&source.parallel_cable).expect("nonempty");
    entries.push(entry(
        data::CABLE_PARALLEL,
        parallel,
        Some(source.parallel_cable.clone()),
        Provenance::PaperTable,
    ));

    let report = rebuild_table_from(source);
    for row in report.rows {
        let (multi, provenance) = match row.source {
            RowSource::OrientationReversal => (Some(report.reversed_cable.clone()), Provenance::Pipeline),
            RowSource::Seed => (None, Provenance::PaperTable),
            _ => (None, Provenance::Pipeline),
        };
        entries.push(entry(&row.name, row.pipeline, multi, provenance));
    }
    entries
}

/// The standard catalog, built once.
pub fn catalog() -> &'static [AtlasEntry] {
    static CATALOG: OnceLock<Vec<AtlasEntry>> = OnceLock::new();
    CATALOG.get_or_init(|| catalog_from(&SourceData::standard()))
}

pub fn find(name: &str) -> Option<&'static AtlasEntry> {
    catalog().iter().find(|e| e.name == name)
}

/// The nine genus-one nearly fibered multi-component links, in table order.
pub fn table_rows() -> Vec<&'static AtlasEntry> {
    rebuild_table()
        .rows
        .iter()
        .filter_map(|r| find(&r.name))
        .collect()
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::graded::{s_top, Grading2x};

    #[test]
    fn catalog_contents() {
        let names: Vec<&str> = catalog().iter().map(|e| e.name.as_str()).collect();
        assert_eq!(names.len(), 16);
        for base in FIBERED_BASE {
            let e = find(base).unwrap();
            assert!(e.fibered, "{base}");
            assert_eq!(e.provenance, Provenance::DerivedBase);
        }
        assert_eq!(table_rows().len(), 9);
    }

    #[test]
    fn torus_anti_entry() {
        let e = find(data::TORUS_ANTI).unwrap();
        assert_eq!(e.collapsed.to_string(), "F²₍₀₎[1] ⊕ F⁴₍₋₁₎[0] ⊕ F²₍₋₂₎[-1]");
        assert!(e.nearly_fibered);
    }

    #[test]
    fn trefoil_entry() {
        let e = find(data::TREFOIL).unwrap();
        assert_eq!(e.collapsed.to_string(), "F₍₀₎[1] ⊕ F₍₋₁₎[0] ⊕ F₍₋₂₎[-1]");
        assert!(e.fibered);
    }

    #[test]
    fn reversed_cable_entry() {
        let e = find(data::CABLE_ANTI).unwrap();
        assert_eq!(e.collapsed.to_string(), "F²₍₋₁₎[1] ⊕ F₍₀₎[0] ⊕ F₍₋₁₎[0] ⊕ F⁴₍₋₂₎[0] ⊕ F²₍₋₃₎[-1]");
        assert_eq!(e.multigraded.as_ref(), Some(&data::reversed_cable_multigraded()));
        assert_eq!(e.provenance, Provenance::Pipeline);
    }

    #[test]
    fn table_rows_are_genus_one_nearly_fibered() {
        for e in table_rows() {
            assert_eq!(s_top(&e.collapsed).unwrap(), Grading2x::from_int(1));
            assert!(e.nearly_fibered && !e.fibered, "{}", e.name);
        }
    }

    #[test]
    fn classifier_round_trip() {
        for e in catalog() {
            let c = classify(&e.collapsed).unwrap();
            assert_eq!(c.names(), &[e.name.clone()], "{}", e.name);
        }
    }
}
