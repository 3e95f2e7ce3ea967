//! Alexander polynomials of knots and h-functions of L-space knots.

use std::collections::BTreeMap;
use std::fmt;
use std::str::FromStr;

use crate::error::{Error, Result};

/// Symmetric Laurent polynomial with `Δ(1) = 1`.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct AlexanderPolynomial {
    coefficients: BTreeMap<i64, i64>,
}

impl AlexanderPolynomial {
    /// Builds `Σ coeffs[i] t^(lowest + i)`.
    ///
    /// When every exponent is nonnegative the polynomial is shifted to be
    /// centred at zero; otherwise it must already be symmetric.
    pub fn from_coefficients(lowest: i64, coeffs: &[i64]) -> Result<Self> {
        let mut coefficients: BTreeMap<i64, i64> = coeffs
            .iter()
            .enumerate()
            .filter(|&(_, &c)| c != 0)
            .map(|(i, &c)| (lowest + i as i64, c))
            .collect();
        let (lo, hi) = match (coefficients.keys().next(), coefficients.keys().next_back()) {
            (Some(&lo), Some(&hi)) => (lo, hi),
            _ => return Err(Error::InvalidPolynomial("zero polynomial".into())),
        };
        if lowest >= 0 && lo + hi != 0 {
            if (lo + hi) % 2 != 0 {
                return Err(Error::InvalidPolynomial(
                    "odd span, cannot be centred symmetrically".into(),
                ));
            }
            let shift = (lo + hi) / 2;
            coefficients = coefficients.into_iter().map(|(k, c)| (k - shift, c)).collect();
        }
        let poly = AlexanderPolynomial { coefficients };
        if let Some((&k, _)) = poly.coefficients.iter().find(|&(&k, &c)| poly.coefficient(-k) != c) {
            return Err(Error::InvalidPolynomial(format!(
                "not symmetric: coefficient of t^{k} differs from t^{}",
                -k
            )));
        }
        let at_one = poly.evaluate_at_one();
        if at_one != 1 {
            return Err(Error::InvalidPolynomial(format!("Δ(1) = {at_one}, expected 1")));
        }
        Ok(poly)
    }

    pub fn unknot() -> Self {
        AlexanderPolynomial { coefficients: BTreeMap::from([(0, 1)]) }
    }

    /// `Δ` of the torus knot `T(2, 2m+1)`: alternating signs from `t^-m` to `t^m`.
    pub fn torus_2(m: u32) -> Self {
        let m = m as i64;
        let coefficients = (-m..=m).map(|k| (k, if (k - m) % 2 == 0 { 1 } else { -1 })).collect();
        AlexanderPolynomial { coefficients }
    }

    pub fn coefficient(&self, k: i64) -> i64 {
        self.coefficients.get(&k).copied().unwrap_or(0)
    }

    /// Largest exponent with nonzero coefficient.
    pub fn degree(&self) -> i64 {
        self.coefficients.keys().next_back().copied().unwrap_or(0)
    }

    pub fn evaluate_at_one(&self) -> i64 {
        self.coefficients.values().sum()
    }

    pub fn terms(&self) -> impl Iterator<Item = (i64, i64)> + '_ {
        self.coefficients.iter().map(|(&k, &c)| (k, c))
    }
}

/// `lowest:c_0,c_1,...` or, with only nonnegative exponents, plain `c_0,c_1,...`.
impl FromStr for AlexanderPolynomial {
    type Err = Error;

    fn from_str(s: &str) -> Result<Self> {
        let (lowest, body) = match s.split_once(':') {
            Some((lo, body)) => {
                let lo = lo
                    .trim()
                    .parse::<i64>()
                    .map_err(|_| Error::InvalidPolynomial(format!("bad exponent {lo:?}")))?;
                (lo, body)
            }
            None => (0, s),
        };
        let coeffs = body
            .split(',')
            .map(|c| {
                c.trim()
                    .parse::<i64>()
                    .map_err(|_| Error::InvalidPolynomial(format!("bad coefficient {c:?}")))
            })
            .collect::<Result<Vec<_>>>()?;
        Self::from_coefficients(lowest, &coeffs)
    }
}

impl fmt::Display for AlexanderPolynomial {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        let g = self.degree();
        let coeffs: Vec<String> = (-g..=g).map(|k| self.coefficient(k).to_string()).collect();
        write!(f, "{}:{}", -g, coeffs.join(","))
    }
}

/// `t_k = Σ_{j≥1} j·a_{k+j}` for `k ≥ 0`, extended by `t_k = t_{-k} - k` for `k < 0`.
pub fn torsion_coefficient(poly: &AlexanderPolynomial, k: i64) -> i64 {
    if k < 0 {
        return torsion_coefficient(poly, -k) - k;
    }
    poly.terms().filter(|&(e, _)| e > k).map(|(e, c)| (e - k) * c).sum()
}

/// h-function of an L-space knot: an explicit table on `[-g, g]` with
/// `h(k) = 0` above and `h(k) = -k` below.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct HFunction {
    genus: i64,
    values: Vec<i64>,
}

impl HFunction {
    pub fn genus(&self) -> i64 {
        self.genus
    }

    pub fn value(&self, k: i64) -> i64 {
        if k >= self.genus {
            0
        } else if k <= -self.genus {
            -k
        } else {
            self.values[(k + self.genus) as usize]
        }
    }

    /// `(k, h(k))` for `k` in `lo..=hi`.
    pub fn table(&self, lo: i64, hi: i64) -> Vec<(i64, i64)> {
        (lo..=hi).map(|k| (k, self.value(k))).collect()
    }

    fn validate(&self) -> Result<()> {
        let g = self.genus;
        for k in -g - 1..=g + 1 {
            let (here, next) = (self.value(k), self.value(k + 1));
            if here < 0 {
                return Err(Error::NotLSpacePolynomial(format!("h({k}) = {here} is negative")));
            }
            if !(next <= here && here <= next + 1) {
                return Err(Error::NotLSpacePolynomial(format!(
                    "h({k}) = {here}, h({}) = {next} is not a unit step",
                    k + 1
                )));
            }
        }
        for k in 0..=g {
            if self.value(-k) != self.value(k) + k {
                return Err(Error::NotLSpacePolynomial(format!("h(-{k}) != h({k}) + {k}")));
            }
        }
        if self.values[(2 * g) as usize] != 0 {
            return Err(Error::NotLSpacePolynomial(format!("h({g}) is not zero")));
        }
        Ok(())
    }
}

impl fmt::Display for HFunction {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        let g = self.genus;
        writeln!(f, "genus {g}")?;
        for (k, h) in self.table(-g - 1, g + 1) {
            writeln!(f, "{k} {h}")?;
        }
        write!(f, "tail h(k) = 0 for k >= {g}; h(k) = -k for k <= {}", -g)
    }
}

/// Computes the h-function from the torsion coefficients of `Δ`.
pub fn h_from_alexander(poly: &AlexanderPolynomial) -> Result<HFunction> {
    let genus = poly.degree();
    let values = (-genus..=genus).map(|k| torsion_coefficient(poly, k)).collect();
    let h = HFunction { genus, values };
    h.validate()?;
    Ok(h)
}

/// Diagonal values `h(k, k)` of the (2,4)-cable of the right-handed trefoil.
pub fn trefoil_cable_h_diagonal(k: i64) -> i64 {
    match k {
        k if k >= 2 => 0,
        0 | 1 => 1,
        -1 => 3,
        k => -2 * k,
    }
}
