use super::grading::Grading2x;
use super::group::{CollapsedGroup, MultiGradedGroup};
use crate::error::{Error, Result};

/// Collapses the Alexander multi-grading to its sum `s_1 + ... + s_n`.
pub fn collapse(group: &MultiGradedGroup) -> Result<CollapsedGroup> {
    if group.is_empty() {
        return Err(Error::EmptyGroup);
    }
    let mut out = CollapsedGroup::new(group.n())?;
    for (d, s, rank) in group.iter() {
        out.insert(d, s.iter().copied().sum(), rank);
    }
    Ok(out)
}

/// Group of the mirror image: rank at `(d, s)` is the input rank at `(1 - n - d, -s)`.
pub fn mirror(group: &CollapsedGroup) -> CollapsedGroup {
    let n = group.n();
    let shift = 1 - n as i64;
    CollapsedGroup::from_terms(n, group.iter().map(|(d, s, r)| (shift - d, -s, r)))
        .expect("component count already validated")
}

/// Group of the split union `L1 ⊔ L2`.
///
/// Each pair of summands contributes at `(d1 + d2, s1 + s2)` and at
/// `(d1 + d2 - 1, s1 + s2)`.
pub fn disjoint_union(left: &CollapsedGroup, right: &CollapsedGroup) -> CollapsedGroup {
    let mut out = CollapsedGroup::new(left.n() + right.n()).expect("n1 + n2 >= 2");
    for (d1, s1, r1) in left.iter() {
        for (d2, s2, r2) in right.iter() {
            out.insert(d1 + d2, s1 + s2, r1 * r2);
            out.insert(d1 + d2 - 1, s1 + s2, r1 * r2);
        }
    }
    out
}

/// Reverses the orientation of component `component` (1-based).
///
/// `linking` is `lk(L_i, L \ L_i)` measured in the input link. A summand at
/// `(d, s)` with `s_i = a` moves to `(d - 2a + linking, s)` with `s_i` replaced
/// by `-a`, so reversing again with `-linking` restores the input.
pub fn reverse_component(
    group: &MultiGradedGroup,
    component: usize,
    linking: i64,
) -> Result<MultiGradedGroup> {
    let n = group.n();
    if component == 0 || component > n {
        return Err(Error::ComponentOutOfRange { index: component, n });
    }
    let i = component - 1;
    MultiGradedGroup::from_terms(
        n,
        group.iter().map(|(d, s, r)| {
            let mut s = s.to_vec();
            let a = s[i];
            s[i] = -a;
            (d - a.doubled() + linking, s, r)
        }),
    )
}

/// Maximal Alexander grading with nonzero rank; equals the Seifert big genus.
pub fn s_top(group: &CollapsedGroup) -> Result<Grading2x> {
    group.alexander_support().last().copied().ok_or(Error::EmptyGroup)
}

/// Rank of the summand in the top Alexander grading.
pub fn top_rank(group: &CollapsedGroup) -> Result<u64> {
    Ok(group.rank_at(s_top(group)?))
}

pub fn is_fibered(group: &CollapsedGroup) -> Result<bool> {
    Ok(top_rank(group)? == 1)
}

pub fn is_nearly_fibered(group: &CollapsedGroup) -> Result<bool> {
    Ok(top_rank(group)? == 2)
}

impl MultiGradedGroup {
    /// Whether the support is invariant under `(d, s) -> (d - 2 Σ s_i, -s)`.
    pub fn check_symmetry(&self) -> bool {
        self.iter().all(|(d, s, r)| {
            let shift: i64 = s.iter().map(|x| x.doubled()).sum();
            let flipped: Vec<Grading2x> = s.iter().map(|&x| -x).collect();
            self.rank(d - shift, &flipped) == r
        })
    }
}

impl CollapsedGroup {
    /// Whether the support is invariant under `(d, s) -> (d - 2s, -s)`.
    pub fn check_symmetry(&self) -> bool {
        self.iter().all(|(d, s, r)| self.rank(d - s.doubled(), -s) == r)
    }
}
