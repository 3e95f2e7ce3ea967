use std::collections::BTreeMap;
use std::fmt;

use super::grading::Grading2x;
use crate::error::{Error, Result};

/// Finitely supported rank function on Maslov × (Alexander)ⁿ gradings.
///
/// Zero ranks are never stored, so derived equality is exact equality of
/// the underlying vector spaces up to graded isomorphism.
#[derive(Debug, Clone, PartialEq, Eq, Hash)]
pub struct MultiGradedGroup {
    n: usize,
    support: BTreeMap<(i64, Vec<Grading2x>), u64>,
}

/// Rank function on Maslov × collapsed Alexander grading, tagged with the
/// number of link components.
#[derive(Debug, Clone, PartialEq, Eq, Hash)]
pub struct CollapsedGroup {
    n: usize,
    support: BTreeMap<(i64, Grading2x), u64>,
}

impl MultiGradedGroup {
    pub fn new(n: usize) -> Result<Self> {
        if n == 0 {
            return Err(Error::NoComponents);
        }
        Ok(MultiGradedGroup { n, support: BTreeMap::new() })
    }

    pub fn from_terms<I>(n: usize, terms: I) -> Result<Self>
    where
        I: IntoIterator<Item = (i64, Vec<Grading2x>, u64)>,
    {
        let mut g = Self::new(n)?;
        for (d, s, rank) in terms {
            g.insert(d, s, rank)?;
        }
        Ok(g)
    }

    /// Integer-graded terms `(d, [s_1, ..., s_n], rank)`.
    pub fn from_int_terms(n: usize, terms: &[(i64, &[i64], u64)]) -> Result<Self> {
        Self::from_terms(
            n,
            terms
                .iter()
                .map(|&(d, s, r)| (d, s.iter().map(|&x| Grading2x::from_int(x)).collect(), r)),
        )
    }

    /// Adds `rank` copies of F at `(d, s)`.
    pub fn insert(&mut self, d: i64, s: Vec<Grading2x>, rank: u64) -> Result<()> {
        if s.len() != self.n {
            return Err(Error::ArityMismatch { expected: self.n, found: s.len() });
        }
        if rank > 0 {
            *self.support.entry((d, s)).or_insert(0) += rank;
        }
        Ok(())
    }

    pub fn n(&self) -> usize {
        self.n
    }

    pub fn is_empty(&self) -> bool {
        self.support.is_empty()
    }

    pub fn rank(&self, d: i64, s: &[Grading2x]) -> u64 {
        // Vec key lookup needs an owned tuple; groups are small.
        self.support.get(&(d, s.to_vec())).copied().unwrap_or(0)
    }

    pub fn iter(&self) -> impl Iterator<Item = (i64, &[Grading2x], u64)> + '_ {
        self.support.iter().map(|((d, s), &r)| (*d, s.as_slice(), r))
    }

    pub fn total_rank(&self) -> u64 {
        self.support.values().sum()
    }

    /// Number of distinct graded summands (generators counted without rank).
    pub fn support_len(&self) -> usize {
        self.support.len()
    }
}

impl CollapsedGroup {
    pub fn new(n: usize) -> Result<Self> {
        if n == 0 {
            return Err(Error::NoComponents);
        }
        Ok(CollapsedGroup { n, support: BTreeMap::new() })
    }

    pub fn from_terms<I>(n: usize, terms: I) -> Result<Self>
    where
        I: IntoIterator<Item = (i64, Grading2x, u64)>,
    {
        let mut g = Self::new(n)?;
        for (d, s, rank) in terms {
            g.insert(d, s, rank);
        }
        Ok(g)
    }

    /// Integer-graded terms `(d, s, rank)`.
    pub fn from_int_terms(n: usize, terms: &[(i64, i64, u64)]) -> Result<Self> {
        Self::from_terms(n, terms.iter().map(|&(d, s, r)| (d, Grading2x::from_int(s), r)))
    }

    pub fn insert(&mut self, d: i64, s: Grading2x, rank: u64) {
        if rank > 0 {
            *self.support.entry((d, s)).or_insert(0) += rank;
        }
    }

    pub fn n(&self) -> usize {
        self.n
    }

    pub fn is_empty(&self) -> bool {
        self.support.is_empty()
    }

    pub fn rank(&self, d: i64, s: Grading2x) -> u64 {
        self.support.get(&(d, s)).copied().unwrap_or(0)
    }

    /// Total rank in Alexander grading `s`, summed over Maslov gradings.
    pub fn rank_at(&self, s: Grading2x) -> u64 {
        self.iter().filter(|&(_, t, _)| t == s).map(|(_, _, r)| r).sum()
    }

    pub fn iter(&self) -> impl Iterator<Item = (i64, Grading2x, u64)> + '_ {
        self.support.iter().map(|(&(d, s), &r)| (d, s, r))
    }

    pub fn total_rank(&self) -> u64 {
        self.support.values().sum()
    }

    /// Distinct Alexander gradings carrying nonzero rank, ascending.
    pub fn alexander_support(&self) -> Vec<Grading2x> {
        let mut out: Vec<Grading2x> = self.support.keys().map(|&(_, s)| s).collect();
        out.sort();
        out.dedup();
        out
    }

    /// The summand in Alexander grading `s` as `(d, rank)` pairs, ascending in `d`.
    pub fn column(&self, s: Grading2x) -> Vec<(i64, u64)> {
        let mut col: Vec<(i64, u64)> =
            self.iter().filter(|&(_, t, _)| t == s).map(|(d, _, r)| (d, r)).collect();
        col.sort();
        col
    }
}

fn superscript(n: u64) -> String {
    const DIGITS: [char; 10] = ['⁰', '¹', '²', '³', '⁴', '⁵', '⁶', '⁷', '⁸', '⁹'];
    n.to_string().chars().map(|c| DIGITS[c.to_digit(10).unwrap() as usize]).collect()
}

fn subscript(n: i64) -> String {
    const DIGITS: [char; 10] = ['₀', '₁', '₂', '₃', '₄', '₅', '₆', '₇', '₈', '₉'];
    let mut out = String::new();
    if n < 0 {
        out.push('₋');
    }
    for c in n.unsigned_abs().to_string().chars() {
        out.push(DIGITS[c.to_digit(10).unwrap() as usize]);
    }
    out
}

/// `F^r_(d)` in the usual typeset form, e.g. `F²₍₋₁₎`; rank one is left bare.
pub fn field_power(d: i64, rank: u64) -> String {
    let exp = if rank == 1 { String::new() } else { superscript(rank) };
    format!("F{exp}₍{}₎", subscript(d))
}

/// Renders a Maslov column (as returned by [`CollapsedGroup::column`]).
pub fn format_column(col: &[(i64, u64)]) -> String {
    if col.is_empty() {
        return "0".to_string();
    }
    col.iter().map(|&(d, r)| field_power(d, r)).collect::<Vec<_>>().join(" ⊕ ")
}

fn join_terms(terms: Vec<String>, f: &mut fmt::Formatter<'_>) -> fmt::Result {
    if terms.is_empty() {
        write!(f, "0")
    } else {
        write!(f, "{}", terms.join(" ⊕ "))
    }
}

/// Terms are listed by descending Alexander grading, then descending Maslov grading.
impl fmt::Display for CollapsedGroup {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        let mut keyed: Vec<(Grading2x, i64, u64)> = self.iter().map(|(d, s, r)| (s, d, r)).collect();
        keyed.sort_by(|a, b| b.cmp(a));
        let terms = keyed
            .into_iter()
            .map(|(s, d, r)| format!("{}[{s}]", field_power(d, r)))
            .collect();
        join_terms(terms, f)
    }
}

impl fmt::Display for MultiGradedGroup {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        let mut keyed: Vec<_> = self.support.iter().collect();
        keyed.sort_by(|((d1, s1), _), ((d2, s2), _)| s2.cmp(s1).then(d2.cmp(d1)));
        let terms = keyed
            .into_iter()
            .map(|((d, s), &r)| {
                let s: Vec<String> = s.iter().map(ToString::to_string).collect();
                format!("{}[{}]", field_power(*d, r), s.join(","))
            })
            .collect();
        join_terms(terms, f)
    }
}
