#![allow(dead_code)]

use hfl_atlas::{CollapsedGroup, Grading2x, MultiGradedGroup};
use rand::Rng;
use rand_chacha::rand_core::SeedableRng;
use rand_chacha::ChaCha8Rng;

pub fn rng(seed: u64) -> ChaCha8Rng {
    ChaCha8Rng::seed_from_u64(seed)
}

/// n ≤ 4, |d| ≤ 20, |2s| ≤ 20, rank ≤ 9, at least one summand.
pub fn random_collapsed(rng: &mut impl Rng) -> CollapsedGroup {
    let n = rng.gen_range(1..=4);
    let terms = (0..rng.gen_range(1..=8))
        .map(|_| {
            (rng.gen_range(-20..=20), Grading2x::from_doubled(rng.gen_range(-20..=20)), rng.gen_range(1..=9))
        })
        .collect::<Vec<_>>();
    CollapsedGroup::from_terms(n, terms).unwrap()
}

pub fn random_multigraded(rng: &mut impl Rng) -> MultiGradedGroup {
    let n = rng.gen_range(1..=4);
    let terms = (0..rng.gen_range(1..=8))
        .map(|_| {
            let s = (0..n).map(|_| Grading2x::from_doubled(rng.gen_range(-20..=20))).collect();
            (rng.gen_range(-20..=20), s, rng.gen_range(1..=9))
        })
        .collect::<Vec<_>>();
    MultiGradedGroup::from_terms(n, terms).unwrap()
}

/// Laplace expansion along the first row; independent of elimination.
pub fn cofactor_det(m: &[Vec<i64>]) -> i128 {
    let n = m.len();
    if n == 1 {
        return m[0][0] as i128;
    }
    (0..n)
        .map(|j| {
            let minor: Vec<Vec<i64>> = m[1..]
                .iter()
                .map(|row| row.iter().enumerate().filter(|&(c, _)| c != j).map(|(_, &x)| x).collect())
                .collect();
            let sign = if j % 2 == 0 { 1 } else { -1 };
            sign * m[0][j] as i128 * cofactor_det(&minor)
        })
        .sum()
}

pub fn random_matrix(rng: &mut impl Rng, max_dim: usize, bound: i64) -> Vec<Vec<i64>> {
    let m = rng.gen_range(1..=max_dim);
    (0..m).map(|_| (0..m).map(|_| rng.gen_range(-bound..=bound)).collect()).collect()
}
