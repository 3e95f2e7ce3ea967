//! Exit criteria. Each criterion prints one PASS/FAIL line; the test fails
//! if any criterion fails.

mod common;

use std::collections::BTreeSet;
use std::time::{Duration, Instant};

use hfl_atlas::atlas::{self, data, documented_discrepancies, Discrepancy, FIBERED_BASE};
use hfl_atlas::format::GroupFile;
use hfl_atlas::graded::{
    collapse, disjoint_union, is_fibered, is_nearly_fibered, mirror, reverse_component, s_top,
};
use hfl_atlas::hfunction::{h_from_alexander, AlexanderPolynomial};
use hfl_atlas::surgery::{
    chain_matrix, det_exact, h1_order, solve_framing_constraint, zero_surgery_matrix, H1Order,
    IntMatrix,
};
use hfl_atlas::{CollapsedGroup, Grading2x};
use num_bigint::BigInt;
use num_traits::Signed;
use rand::Rng;

type Outcome = Result<(), String>;

fn ensure(cond: bool, msg: impl FnOnce() -> String) -> Outcome {
    if cond {
        Ok(())
    } else {
        Err(msg())
    }
}

fn one() -> Grading2x {
    Grading2x::from_int(1)
}

fn criterion_1_cable_reproduction() -> Outcome {
    let reversed = reverse_component(&data::parallel_cable_multigraded(), 2, 2).map_err(|e| e.to_string())?;
    let collapsed = collapse(&reversed).map_err(|e| e.to_string())?;
    let expected = CollapsedGroup::from_int_terms(
        2,
        &[(-1, 1, 2), (-2, 0, 4), (-1, 0, 1), (0, 0, 1), (-3, -1, 2)],
    )
    .unwrap();
    ensure(collapsed == expected, || format!("got {collapsed}"))
}

fn criterion_2_table_rebuild() -> Outcome {
    let report = atlas::rebuild_table();
    ensure(report.rows.len() == 9, || format!("{} rows", report.rows.len()))?;
    let exact = report.rows.iter().filter(|r| r.printed.as_ref() == Some(&r.pipeline)).count();
    ensure(exact == 8, || format!("{exact} rows match exactly"))?;
    let expected = vec![
        Discrepancy {
            row: "4₁ ⊔ ◯".into(),
            grading: "s=0".into(),
            pipeline: "F³₍₋₁₎ ⊕ F³₍₀₎".into(),
            paper: "F₍₋₁₎ ⊕ F₍₀₎".into(),
        },
        Discrepancy {
            row: "T'₂,₃;₂,₄ (multi-graded)".into(),
            grading: "d=-3".into(),
            pipeline: "F₍₋₃₎[1,-2] ⊕ F₍₋₃₎[-2,1]".into(),
            paper: "F₍₋₃₎[1,-2] ⊕ F₍₋₃₎[-1,2]".into(),
        },
    ];
    ensure(report.discrepancies == expected, || report.discrepancy_text())?;
    ensure(documented_discrepancies() == expected, || "documented list drifted".into())?;
    let fig8 = report.row(data::FIGURE_EIGHT_SPLIT).unwrap();
    ensure(fig8.pipeline.rank(-1, Grading2x::ZERO) == 3 && fig8.pipeline.rank(0, Grading2x::ZERO) == 3, || {
        "4₁ ⊔ ◯ middle column is not 3+3".into()
    })
}

fn criterion_3_detection() -> Outcome {
    let rows = atlas::table_rows();
    ensure(rows.len() == 9, || "nine rows".into())?;
    for e in rows {
        let c = &e.collapsed;
        ensure(s_top(c) == Ok(one()), || format!("{}: s_top", e.name))?;
        ensure(is_nearly_fibered(c) == Ok(true), || format!("{}: nearly fibered", e.name))?;
        ensure(is_fibered(c) == Ok(false), || format!("{}: fibered", e.name))?;
    }
    for name in FIBERED_BASE {
        let e = atlas::find(name).ok_or(format!("missing {name}"))?;
        ensure(is_fibered(&e.collapsed) == Ok(true), || format!("{name} not fibered"))?;
    }
    let cat = atlas::catalog();
    let distinct: BTreeSet<String> = cat.iter().map(|e| GroupFile::from(e.collapsed.clone()).to_string()).collect();
    ensure(distinct.len() == cat.len(), || "catalog groups are not pairwise distinct".into())?;
    for e in cat {
        let c = atlas::classify(&e.collapsed).map_err(|x| x.to_string())?;
        ensure(c.names() == [e.name.clone()], || format!("{} classified as {c}", e.name))?;
    }
    Ok(())
}

fn criterion_4_hfunction() -> Outcome {
    let h = h_from_alexander(&AlexanderPolynomial::torus_2(1)).map_err(|e| e.to_string())?;
    for k in -50..=50 {
        let printed = if k >= 1 { 0 } else if k == 0 { 1 } else { -k };
        ensure(h.value(k) == printed, || format!("trefoil h({k}) = {}", h.value(k)))?;
    }
    let u = h_from_alexander(&AlexanderPolynomial::unknot()).map_err(|e| e.to_string())?;
    for k in -50..=50 {
        ensure(u.value(k) == 0.max(-k), || format!("unknot h({k})"))?;
    }
    for poly in [
        AlexanderPolynomial::unknot(),
        AlexanderPolynomial::torus_2(1),
        AlexanderPolynomial::torus_2(2),
        AlexanderPolynomial::torus_2(3),
    ] {
        let h = h_from_alexander(&poly).map_err(|e| e.to_string())?;
        for k in -50..=50 {
            ensure(h.value(k + 1) <= h.value(k) && h.value(k) <= h.value(k + 1) + 1, || {
                format!("{poly}: unit step at {k}")
            })?;
        }
        for k in 0..=50 {
            ensure(h.value(-k) == h.value(k) + k, || format!("{poly}: symmetry at {k}"))?;
        }
    }
    Ok(())
}

fn criterion_5_surgery() -> Outcome {
    ensure(det_exact(&chain_matrix(-1, -1)).abs() == BigInt::from(3), || "|det| 3".into())?;
    ensure(det_exact(&chain_matrix(3, 3)).abs() == BigInt::from(35), || "|det| 35".into())?;
    ensure(h1_order(&zero_surgery_matrix(2)) == H1Order::Finite(BigInt::from(4)), || "order 4".into())?;
    let sols = solve_framing_constraint(3, 10);
    ensure(sols == BTreeSet::from([(0, 0), (-2, -2)]), || format!("{sols:?}"))?;
    for a in -20..=20i64 {
        for b in -20..=20i64 {
            ensure(det_exact(&chain_matrix(a, b)) == BigInt::from(1 - 4 * a * b), || format!("det at ({a},{b})"))?;
        }
    }
    Ok(())
}

fn criterion_6_properties() -> Outcome {
    let mut rng = common::rng(0x5eed);
    for _ in 0..1000 {
        let c = common::random_collapsed(&mut rng);
        ensure(mirror(&mirror(&c)) == c, || format!("mirror involution on {c}"))?;

        let m = common::random_multigraded(&mut rng);
        let i = rng.gen_range(1..=m.n());
        let lk = rng.gen_range(-10..=10);
        let back = reverse_component(&reverse_component(&m, i, lk).unwrap(), i, -lk).unwrap();
        ensure(back == m, || format!("reverse involution on {m}"))?;

        let collapsed = collapse(&m).unwrap();
        ensure(collapsed.total_rank() == m.total_rank(), || "collapse rank".into())?;

        let d = common::random_collapsed(&mut rng);
        let u = disjoint_union(&c, &d);
        ensure(u.total_rank() == 2 * c.total_rank() * d.total_rank(), || "union rank".into())?;
        ensure(s_top(&u).unwrap() == s_top(&c).unwrap() + s_top(&d).unwrap(), || "union s_top".into())?;

        let mat = common::random_matrix(&mut rng, 5, 9);
        let im = IntMatrix::from_i64(&mat).unwrap();
        let det = im.determinant();
        ensure(det == BigInt::from(common::cofactor_det(&mat)), || format!("det of {im}"))?;
        let product: BigInt = im.invariant_factors().iter().product();
        ensure(product == BigInt::from(common::cofactor_det(&mat).abs()), || format!("snf of {im}"))?;

        for file in [GroupFile::from(c), GroupFile::from(m)] {
            ensure(file.to_string().parse::<GroupFile>().as_ref() == Ok(&file), || "round trip".into())?;
        }
    }
    Ok(())
}

fn criterion_7_symmetry() -> Outcome {
    for e in atlas::catalog() {
        ensure(e.collapsed.check_symmetry(), || format!("{} collapsed", e.name))?;
        if let Some(m) = &e.multigraded {
            ensure(m.check_symmetry(), || format!("{} multi-graded", e.name))?;
        }
    }
    ensure(!data::printed_reversed_cable_multigraded().check_symmetry(), || {
        "uncorrected list unexpectedly symmetric".into()
    })
}

#[test]
fn acceptance() {
    let criteria: [(&str, fn() -> Outcome); 7] = [
        ("1 cable group reproduction", criterion_1_cable_reproduction),
        ("2 table rebuild with exactly two documented diffs", criterion_2_table_rebuild),
        ("3 detection suite and classifier round trip", criterion_3_detection),
        ("4 h-function values and invariants", criterion_4_hfunction),
        ("5 surgery numbers 3, 35, 4 and framing solutions", criterion_5_surgery),
        ("6 randomized property suites (1000 trials)", criterion_6_properties),
        ("7 symmetry on the catalog, failure on the misprint", criterion_7_symmetry),
    ];
    let start = Instant::now();
    let mut failed = Vec::new();
    for (name, run) in criteria {
        let t = Instant::now();
        let result = run();
        let ms = t.elapsed().as_secs_f64() * 1e3;
        match &result {
            Ok(()) => println!("PASS criterion {name} ({ms:.1} ms)"),
            Err(msg) => {
                println!("FAIL criterion {name} ({ms:.1} ms): {msg}");
                failed.push(name);
            }
        }
    }
    let total = start.elapsed();
    println!("total {:.1} ms", total.as_secs_f64() * 1e3);
    assert!(failed.is_empty(), "failed criteria: {failed:?}");
    assert!(total < Duration::from_secs(1), "took {total:?}");
}
