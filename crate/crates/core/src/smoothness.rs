//! Pattern containment and the 3412/4231 smoothness criterion for Schubert
//! varieties in type A.
//!
//! [`is_smooth`] is the quadratic fast path used by the census. The
//! exhaustive [`is_smooth_oracle`] and [`smoothness_witness`] scan every
//! 4-element subsequence and exist to check it.

use std::collections::BTreeSet;
use std::fmt;

use itertools::Itertools;
use serde::Serialize;

use crate::error::{Error, Result};
use crate::perm::{compositions, Permutation};

/// The two forbidden patterns of the smoothness criterion.
#[derive(Clone, Copy, Debug, PartialEq, Eq, Hash, Serialize)]
pub enum ForbiddenPattern {
    #[serde(rename = "3412")]
    P3412,
    #[serde(rename = "4231")]
    P4231,
}

impl ForbiddenPattern {
    pub const ALL: [ForbiddenPattern; 2] = [ForbiddenPattern::P3412, ForbiddenPattern::P4231];

    pub fn word(self) -> [u32; 4] {
        match self {
            ForbiddenPattern::P3412 => [3, 4, 1, 2],
            ForbiddenPattern::P4231 => [4, 2, 3, 1],
        }
    }

    pub fn permutation(self) -> Permutation {
        Permutation::from_vec_unchecked(self.word().to_vec())
    }

    pub fn name(self) -> &'static str {
        match self {
            ForbiddenPattern::P3412 => "3412",
            ForbiddenPattern::P4231 => "4231",
        }
    }
}

impl fmt::Display for ForbiddenPattern {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.write_str(self.name())
    }
}

/// An occurrence of a pattern inside a host word.
#[derive(Clone, Debug, PartialEq, Eq, Serialize)]
pub struct PatternOccurrence {
    /// 1-based, strictly increasing.
    pub positions: Vec<usize>,
    pub pattern: Permutation,
}

impl PatternOccurrence {
    pub fn values(&self, host: &Permutation) -> Vec<u32> {
        self.positions.iter().map(|&i| host.at(i)).collect()
    }

    /// Whether the host values at `positions` are order-isomorphic to `pattern`.
    pub fn is_valid_in(&self, host: &Permutation) -> bool {
        self.positions.len() == self.pattern.len()
            && self.positions.windows(2).all(|w| w[0] < w[1])
            && self.positions.iter().all(|&i| i >= 1 && i <= host.len())
            && order_isomorphic(&self.values(host), self.pattern.as_slice())
    }
}

/// Same relative order, compared pairwise.
pub fn order_isomorphic(a: &[u32], b: &[u32]) -> bool {
    a.len() == b.len() && (0..a.len()).all(|i| (i + 1..a.len()).all(|j| (a[i] < a[j]) == (b[i] < b[j])))
}

fn find_occurrence(w: &Permutation, mu: &Permutation) -> Option<Vec<usize>> {
    let word = w.as_slice();
    (0..word.len()).combinations(mu.len()).find(|idx| {
        let sub: Vec<u32> = idx.iter().map(|&i| word[i]).collect();
        order_isomorphic(&sub, mu.as_slice())
    })
}

/// Exhaustive containment test for an arbitrary pattern.
pub fn contains_pattern(w: &Permutation, mu: &Permutation) -> Result<bool> {
    if mu.len() > w.len() {
        return Err(Error::PatternTooLong { pattern: mu.len(), word: w.len() });
    }
    Ok(find_occurrence(w, mu).is_some())
}

/// First occurrence of 3412 or 4231, scanning position sets in
/// lexicographic order. `None` means `w` is smooth.
pub fn smoothness_witness(w: &Permutation) -> Option<PatternOccurrence> {
    let word = w.as_slice();
    for idx in (0..word.len()).combinations(4) {
        let sub: Vec<u32> = idx.iter().map(|&i| word[i]).collect();
        for pat in ForbiddenPattern::ALL {
            if order_isomorphic(&sub, &pat.word()) {
                return Some(PatternOccurrence {
                    positions: idx.iter().map(|i| i + 1).collect(),
                    pattern: pat.permutation(),
                });
            }
        }
    }
    None
}

/// Exhaustive O(n^4) smoothness check.
pub fn is_smooth_oracle(w: &Permutation) -> bool {
    ForbiddenPattern::ALL.iter().all(|pat| find_occurrence(w, &pat.permutation()).is_none())
}

/// Quadratic smoothness check: true iff `w` avoids both 3412 and 4231.
pub fn is_smooth(w: &Permutation) -> bool {
    !contains_4231(w.as_slice()) && !contains_3412(w.as_slice())
}

/// Positions a < b < c < d with w[d] < w[b] < w[c] < w[a]. For each middle
/// pair (b, c) with w[b] < w[c] we need a larger value somewhere before b and
/// a smaller one somewhere after c.
fn contains_4231(w: &[u32]) -> bool {
    let n = w.len();
    if n < 4 {
        return false;
    }
    // prefix_max[i] = max of w[..i]; suffix_min[i] = min of w[i..].
    let mut prefix_max = vec![0u32; n + 1];
    for i in 0..n {
        prefix_max[i + 1] = prefix_max[i].max(w[i]);
    }
    let mut suffix_min = vec![u32::MAX; n + 1];
    for i in (0..n).rev() {
        suffix_min[i] = suffix_min[i + 1].min(w[i]);
    }
    for b in 1..n - 2 {
        for c in b + 1..n - 1 {
            if w[b] < w[c] && prefix_max[b] > w[c] && suffix_min[c + 1] < w[b] {
                return true;
            }
        }
    }
    false
}

/// Positions a < b < c < d with w[c] < w[d] < w[a] < w[b]. Fix the "3" at a;
/// the earliest "4" after it leaves the most room, and then a "1" and "2"
/// must follow with w[c] < w[d] < w[a].
fn contains_3412(w: &[u32]) -> bool {
    let n = w.len();
    if n < 4 {
        return false;
    }
    for a in 0..n - 3 {
        let Some(b) = (a + 1..n).find(|&j| w[j] > w[a]) else {
            continue;
        };
        let mut low = u32::MAX;
        for d in b + 1..n {
            if w[d] < w[a] && low < w[d] {
                return true;
            }
            low = low.min(w[d]);
        }
    }
    false
}

/// `{ sigma_c : c a composition of n }`.
pub fn smooth_involutions(n: usize) -> Result<BTreeSet<Permutation>> {
    Ok(compositions(n)?.map(|c| c.sigma()).collect())
}
