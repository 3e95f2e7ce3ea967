//! Integer homology of surgery presentations: exact determinants, Smith
//! normal form and the slam-dunked chain matrices of the (2,4)-cable.

use std::collections::BTreeSet;
use std::fmt;
use std::str::FromStr;

use num_bigint::BigInt;
use num_integer::Integer;
use num_traits::{One, Signed, Zero};

use crate::error::{Error, Result};

/// Square integer matrix with arbitrary-precision entries.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct IntMatrix {
    rows: Vec<Vec<BigInt>>,
}

impl IntMatrix {
    pub fn new(rows: Vec<Vec<BigInt>>) -> Result<Self> {
        let m = rows.len();
        if m == 0 {
            return Err(Error::InvalidMatrix("empty matrix".into()));
        }
        if let Some(r) = rows.iter().position(|row| row.len() != m) {
            return Err(Error::InvalidMatrix(format!(
                "row {} has {} entries, expected {m}",
                r + 1,
                rows[r].len()
            )));
        }
        Ok(IntMatrix { rows })
    }

    pub fn from_i64<R: AsRef<[i64]>>(rows: &[R]) -> Result<Self> {
        Self::new(rows.iter().map(|r| r.as_ref().iter().map(|&x| BigInt::from(x)).collect()).collect())
    }

    pub fn identity(m: usize) -> Self {
        let rows = (0..m)
            .map(|i| (0..m).map(|j| if i == j { BigInt::one() } else { BigInt::zero() }).collect())
            .collect();
        IntMatrix { rows }
    }

    pub fn dim(&self) -> usize {
        self.rows.len()
    }

    pub fn get(&self, i: usize, j: usize) -> &BigInt {
        &self.rows[i][j]
    }

    pub fn is_symmetric(&self) -> bool {
        let m = self.dim();
        (0..m).all(|i| (0..i).all(|j| self.rows[i][j] == self.rows[j][i]))
    }

    /// Determinant by fraction-free Bareiss elimination; every division is exact.
    pub fn determinant(&self) -> BigInt {
        let m = self.dim();
        let mut a = self.rows.clone();
        let mut negate = false;
        let mut prev = BigInt::one();
        for k in 0..m {
            if a[k][k].is_zero() {
                match (k + 1..m).find(|&i| !a[i][k].is_zero()) {
                    Some(i) => {
                        a.swap(i, k);
                        negate = !negate;
                    }
                    None => return BigInt::zero(),
                }
            }
            for i in k + 1..m {
                for j in k + 1..m {
                    let num = &a[i][j] * &a[k][k] - &a[i][k] * &a[k][j];
                    a[i][j] = num / &prev;
                }
            }
            prev = a[k][k].clone();
        }
        let det = a[m - 1][m - 1].clone();
        if negate {
            -det
        } else {
            det
        }
    }

    /// Invariant factors `d_1 | d_2 | ... | d_m`, all nonnegative, zeros last.
    pub fn invariant_factors(&self) -> Vec<BigInt> {
        let m = self.dim();
        let mut a = self.rows.clone();
        let mut factors = Vec::with_capacity(m);
        for t in 0..m {
            loop {
                let pivot = (t..m)
                    .flat_map(|i| (t..m).map(move |j| (i, j)))
                    .filter(|&(i, j)| !a[i][j].is_zero())
                    .min_by(|&(i1, j1), &(i2, j2)| a[i1][j1].abs().cmp(&a[i2][j2].abs()));
                let Some((pi, pj)) = pivot else {
                    factors.resize(m, BigInt::zero());
                    return factors;
                };
                a.swap(t, pi);
                for row in a.iter_mut() {
                    row.swap(t, pj);
                }

                let p = a[t][t].clone();
                let mut clean = true;
                for i in t + 1..m {
                    let q = a[i][t].div_floor(&p);
                    if !q.is_zero() {
                        for j in t..m {
                            let delta = &q * &a[t][j];
                            a[i][j] -= delta;
                        }
                    }
                    clean &= a[i][t].is_zero();
                }
                for j in t + 1..m {
                    let q = a[t][j].div_floor(&p);
                    if !q.is_zero() {
                        for row in a.iter_mut().skip(t) {
                            let delta = &q * &row[t];
                            row[j] -= delta;
                        }
                    }
                    clean &= a[t][j].is_zero();
                }
                if !clean {
                    continue;
                }
                // pivot must divide the whole remaining block
                let offender = (t + 1..m)
                    .flat_map(|i| (t + 1..m).map(move |j| (i, j)))
                    .find(|&(i, j)| !a[i][j].is_multiple_of(&p));
                match offender {
                    Some((i, _)) => {
                        for j in t..m {
                            let v = a[i][j].clone();
                            a[t][j] += v;
                        }
                    }
                    None => break,
                }
            }
            factors.push(a[t][t].abs());
        }
        factors
    }
}

impl FromStr for IntMatrix {
    type Err = Error;

    /// Rows separated by `;`, entries by `,`, e.g. `0,2;2,0`.
    fn from_str(s: &str) -> Result<Self> {
        let rows = s
            .split(';')
            .map(|row| {
                row.split(',')
                    .map(|x| {
                        x.trim()
                            .parse::<BigInt>()
                            .map_err(|_| Error::InvalidMatrix(format!("bad entry {x:?}")))
                    })
                    .collect::<Result<Vec<_>>>()
            })
            .collect::<Result<Vec<_>>>()?;
        IntMatrix::new(rows)
    }
}

impl fmt::Display for IntMatrix {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        let rows: Vec<String> = self
            .rows
            .iter()
            .map(|r| r.iter().map(ToString::to_string).collect::<Vec<_>>().join(","))
            .collect();
        write!(f, "{}", rows.join(";"))
    }
}

/// Symmetric linking/framing matrix presenting `H_1` of a surgered manifold.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct SurgeryMatrix(IntMatrix);

impl SurgeryMatrix {
    pub fn new(matrix: IntMatrix) -> Result<Self> {
        if !matrix.is_symmetric() {
            return Err(Error::InvalidMatrix("linking matrix must be symmetric".into()));
        }
        Ok(SurgeryMatrix(matrix))
    }

    pub fn matrix(&self) -> &IntMatrix {
        &self.0
    }
}

impl FromStr for SurgeryMatrix {
    type Err = Error;
    fn from_str(s: &str) -> Result<Self> {
        SurgeryMatrix::new(s.parse()?)
    }
}

impl fmt::Display for SurgeryMatrix {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        self.0.fmt(f)
    }
}

/// Order of `H_1`; a singular presentation has infinite first homology.
#[derive(Debug, Clone, PartialEq, Eq)]
pub enum H1Order {
    Finite(BigInt),
    Infinite,
}

impl fmt::Display for H1Order {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        match self {
            H1Order::Finite(n) => write!(f, "{n}"),
            H1Order::Infinite => write!(f, "infinite"),
        }
    }
}

pub fn det_exact(matrix: &SurgeryMatrix) -> BigInt {
    matrix.0.determinant()
}

pub fn smith_normal_form(matrix: &SurgeryMatrix) -> Vec<BigInt> {
    matrix.0.invariant_factors()
}

pub fn h1_order(matrix: &SurgeryMatrix) -> H1Order {
    let det = det_exact(matrix);
    if det.is_zero() {
        H1Order::Infinite
    } else {
        H1Order::Finite(det.abs())
    }
}

/// Linking matrix of the twice slam-dunked (2,4)-cable surgery diagram with
/// end framings `a` and `b`.
pub fn chain_matrix(a: i64, b: i64) -> SurgeryMatrix {
    let m = IntMatrix::from_i64(&[[a, 1, 0, 0], [1, 0, 2, 0], [0, 2, 0, 1], [0, 0, 1, b]])
        .expect("4x4");
    SurgeryMatrix(m)
}

/// Linking matrix of (0,0)-surgery on a two-component link with linking number `l`.
pub fn zero_surgery_matrix(l: i64) -> SurgeryMatrix {
    SurgeryMatrix(IntMatrix::from_i64(&[[0, l], [l, 0]]).expect("2x2"))
}

/// All `(p, q)` with `|p|, |q| <= range` whose meridian twists give
/// `|H_1| = target`, i.e. `|det chain_matrix(-(p+1), -(q+1))| = target`.
pub fn solve_framing_constraint(target: u64, range: i64) -> BTreeSet<(i64, i64)> {
    let target = BigInt::from(target);
    let mut out = BTreeSet::new();
    for p in -range..=range {
        for q in -range..=range {
            if det_exact(&chain_matrix(-(p + 1), -(q + 1))).abs() == target {
                out.insert((p, q));
            }
        }
    }
    out
}

#[cfg(test)]
mod tests {
    use super::*;

    fn big(v: &[i64]) -> Vec<BigInt> {
        v.iter().map(|&x| BigInt::from(x)).collect()
    }

    #[test]
    fn reference_determinants() {
        assert_eq!(det_exact(&chain_matrix(-1, -1)).abs(), BigInt::from(3));
        assert_eq!(det_exact(&chain_matrix(3, 3)).abs(), BigInt::from(35));
        assert_eq!(det_exact(&chain_matrix(3, 3)), BigInt::from(-35));
        assert_eq!(IntMatrix::identity(4).determinant(), BigInt::one());
    }

    #[test]
    fn chain_matrix_layout() {
        assert_eq!(chain_matrix(-1, -1).to_string(), "-1,1,0,0;1,0,2,0;0,2,0,1;0,0,1,-1");
        assert_eq!(chain_matrix(3, 3).to_string(), "3,1,0,0;1,0,2,0;0,2,0,1;0,0,1,3");
    }

    #[test]
    fn chain_determinant_closed_form() {
        for a in -5..=5 {
            for b in -5..=5 {
                assert_eq!(det_exact(&chain_matrix(a, b)), BigInt::from(1 - 4 * a * b));
            }
        }
    }

    #[test]
    fn snf_examples() {
        let m: SurgeryMatrix = "0,2;2,0".parse().unwrap();
        assert_eq!(smith_normal_form(&m), big(&[2, 2]));
        let id = SurgeryMatrix::new(IntMatrix::identity(3)).unwrap();
        assert_eq!(smith_normal_form(&id), big(&[1, 1, 1]));
        assert_eq!(smith_normal_form(&chain_matrix(-1, -1)), big(&[1, 1, 1, 3]));
        assert_eq!(smith_normal_form(&chain_matrix(3, 3)), big(&[1, 1, 1, 35]));
        assert_eq!(smith_normal_form(&zero_surgery_matrix(0)), big(&[0, 0]));
        let m = IntMatrix::from_i64(&[[2, 4, 4], [-6, 6, 12], [10, -4, -16]]).unwrap();
        assert_eq!(m.invariant_factors(), big(&[2, 6, 12]));
    }

    #[test]
    fn h1_orders() {
        assert_eq!(h1_order(&zero_surgery_matrix(2)), H1Order::Finite(BigInt::from(4)));
        assert_eq!(h1_order(&zero_surgery_matrix(0)), H1Order::Infinite);
        assert_eq!(h1_order(&zero_surgery_matrix(3)), H1Order::Finite(BigInt::from(9)));
        assert_eq!(h1_order(&chain_matrix(3, 3)), H1Order::Finite(BigInt::from(35)));
        assert_eq!(H1Order::Infinite.to_string(), "infinite");
    }

    #[test]
    fn framing_constraint() {
        let sols: Vec<_> = solve_framing_constraint(3, 10).into_iter().collect();
        assert_eq!(sols, vec![(-2, -2), (0, 0)]);
        let sols = solve_framing_constraint(35, 10);
        let expected: BTreeSet<_> =
            [(0, 8), (8, 0), (2, 2), (-2, -10), (-10, -2), (-4, -4)].into_iter().collect();
        assert_eq!(sols, expected);
        assert!(solve_framing_constraint(2, 10).is_empty());
    }

    #[test]
    fn rejects_bad_matrices() {
        assert!("1,2;3".parse::<IntMatrix>().is_err());
        assert!("".parse::<IntMatrix>().is_err());
        assert!("1,x;0,1".parse::<IntMatrix>().is_err());
        assert!("1,2;3,4".parse::<SurgeryMatrix>().is_err());
        assert!("1,2;3,4".parse::<IntMatrix>().is_ok());
    }

    #[test]
    fn large_entries_do_not_overflow() {
        let m = IntMatrix::from_i64(
            &(0..8)
                .map(|i| (0..8).map(|j| if i == j { 1_000_000 } else { ((i * 8 + j) % 7) as i64 * 999_999 - 3_000_000 }).collect::<Vec<_>>())
                .collect::<Vec<_>>(),
        )
        .unwrap();
        let det = m.determinant();
        let product: BigInt = m.invariant_factors().iter().product();
        assert_eq!(product, det.abs());
    }
}
