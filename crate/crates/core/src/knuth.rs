//! Knuth moves on three consecutive letters and the classes they generate.

use std::collections::{BTreeSet, HashSet, VecDeque};

use crate::error::{Error, Result};
use crate::perm::Permutation;
use crate::tableau::rs_insert;

/// Every permutation one Knuth move away from `w`, sorted lexicographically.
///
/// For a window `(p, q, r)` at consecutive positions, a move of the first kind
/// swaps `q, r` when `p` lies between them in value (`yxz <-> yzx`), and a move
/// of the second kind swaps `p, q` when `r` lies between them (`xzy <-> zxy`).
pub fn knuth_neighbors(w: &Permutation) -> BTreeSet<Permutation> {
    let word = w.as_slice();
    let mut out = BTreeSet::new();
    for i in 0..word.len().saturating_sub(2) {
        let (p, q, r) = (word[i], word[i + 1], word[i + 2]);
        if between(p, q, r) {
            let mut v = word.to_vec();
            v.swap(i + 1, i + 2);
            out.insert(Permutation::from_vec_unchecked(v));
        }
        if between(r, p, q) {
            let mut v = word.to_vec();
            v.swap(i, i + 1);
            out.insert(Permutation::from_vec_unchecked(v));
        }
    }
    out
}

fn between(mid: u32, a: u32, b: u32) -> bool {
    a.min(b) < mid && mid < a.max(b)
}

/// The Knuth class of `w`: its connected component under [`knuth_neighbors`].
pub fn knuth_class(w: &Permutation) -> BTreeSet<Permutation> {
    let bound = rs_insert(w).shape().syt_count();
    let mut seen: HashSet<Permutation> = HashSet::with_capacity(bound.min(1 << 16) as usize);
    let mut queue = VecDeque::new();
    seen.insert(w.clone());
    queue.push_back(w.clone());
    while let Some(v) = queue.pop_front() {
        for u in knuth_neighbors(&v) {
            if seen.insert(u.clone()) {
                queue.push_back(u);
            }
        }
    }
    debug_assert!(seen.len() as u128 <= bound);
    seen.into_iter().collect()
}

/// Knuth equivalence, decided by comparing insertion tableaux.
pub fn knuth_equivalent(x: &Permutation, y: &Permutation) -> Result<bool> {
    if x.len() != y.len() {
        return Err(Error::LengthMismatch(x.len(), y.len()));
    }
    Ok(rs_insert(x) == rs_insert(y))
}

/// True when, for every `i < n`, `i` and `i + 1` appear in the same order in
/// `x` and `y`.
pub fn adjacent_values_keep_order(x: &Permutation, y: &Permutation) -> bool {
    let (px, py) = (x.positions(), y.positions());
    (0..px.len().saturating_sub(1)).all(|i| (px[i] < px[i + 1]) == (py[i] < py[i + 1]))
}
