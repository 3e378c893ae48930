//! Permutations in one-line notation, compositions, and Lehmer ranking.
//!
//! All values are 1-based: a permutation of length `n` is a word containing
//! each of `1..=n` exactly once.

use std::fmt;
use std::str::FromStr;

use serde::{Deserialize, Serialize};

use crate::error::{Error, Result};

/// Largest `n` for which `n!` fits in a `u64`.
pub const MAX_RANKED_N: usize = 20;

/// A permutation `w = (w_1, ..., w_n)` of `{1, ..., n}`.
#[derive(Clone, Debug, PartialEq, Eq, PartialOrd, Ord, Hash, Serialize, Deserialize)]
#[serde(try_from = "Vec<u32>", into = "Vec<u32>")]
pub struct Permutation(Vec<u32>);

impl Permutation {
    /// Validates `word` as a bijection of `{1..n}`, keeping the order of entries.
    pub fn new(word: Vec<u32>) -> Result<Self> {
        let n = word.len();
        if n == 0 {
            return Err(Error::EmptyPermutation);
        }
        let mut seen = vec![false; n];
        for &v in &word {
            if v == 0 || v as usize > n {
                return Err(Error::ValueOutOfRange { value: v, n });
            }
            if std::mem::replace(&mut seen[v as usize - 1], true) {
                return Err(Error::DuplicateValue(v));
            }
        }
        Ok(Permutation(word))
    }

    /// Caller guarantees `word` is a permutation of `1..=word.len()`.
    pub(crate) fn from_vec_unchecked(word: Vec<u32>) -> Self {
        debug_assert!(Permutation::new(word.clone()).is_ok());
        Permutation(word)
    }

    pub fn identity(n: usize) -> Self {
        Permutation((1..=n as u32).collect())
    }

    /// The longest element `(n, n-1, ..., 1)`.
    pub fn longest(n: usize) -> Self {
        Permutation((1..=n as u32).rev().collect())
    }

    pub fn len(&self) -> usize {
        self.0.len()
    }

    pub fn is_empty(&self) -> bool {
        self.0.is_empty()
    }

    pub fn as_slice(&self) -> &[u32] {
        &self.0
    }

    pub fn into_vec(self) -> Vec<u32> {
        self.0
    }

    /// The value `w(i)` for a 1-based position `i`.
    pub fn at(&self, i: usize) -> u32 {
        self.0[i - 1]
    }

    pub fn inverse(&self) -> Permutation {
        let mut inv = vec![0; self.len()];
        for (i, &v) in self.0.iter().enumerate() {
            inv[v as usize - 1] = i as u32 + 1;
        }
        Permutation(inv)
    }

    pub fn is_involution(&self) -> bool {
        self.0.iter().enumerate().all(|(i, &v)| self.0[v as usize - 1] as usize == i + 1)
    }

    /// 0-based positions indexed by value: `positions()[v - 1]` is where `v` sits.
    pub fn positions(&self) -> Vec<usize> {
        let mut pos = vec![0; self.len()];
        for (i, &v) in self.0.iter().enumerate() {
            pos[v as usize - 1] = i;
        }
        pos
    }

    /// Length of the longest strictly increasing subsequence (patience sorting).
    pub fn lis(&self) -> usize {
        patience(self.0.iter().copied())
    }

    /// Length of the longest strictly decreasing subsequence.
    pub fn lds(&self) -> usize {
        let n = self.len() as u32;
        patience(self.0.iter().map(|&v| n + 1 - v))
    }

    /// Lexicographic rank in `0..n!`.
    pub fn lehmer_rank(&self) -> Result<u64> {
        let n = self.len();
        if n > MAX_RANKED_N {
            return Err(Error::RankingLimit(n));
        }
        let mut rank = 0u64;
        for i in 0..n {
            let smaller_after = self.0[i + 1..].iter().filter(|&&v| v < self.0[i]).count();
            rank += smaller_after as u64 * factorial(n - 1 - i);
        }
        Ok(rank)
    }

    /// Inverse of [`Permutation::lehmer_rank`]: factorial-base decoding of `rank`.
    pub fn lehmer_unrank(n: usize, rank: u64) -> Result<Permutation> {
        if n == 0 {
            return Err(Error::EmptyDomain);
        }
        if n > MAX_RANKED_N {
            return Err(Error::RankingLimit(n));
        }
        let total = factorial(n);
        if rank >= total {
            return Err(Error::RankOutOfRange { rank, n, total });
        }
        let mut pool: Vec<u32> = (1..=n as u32).collect();
        let mut rest = rank;
        let mut word = Vec::with_capacity(n);
        for i in (0..n).rev() {
            let f = factorial(i);
            let digit = (rest / f) as usize;
            rest %= f;
            word.push(pool.remove(digit));
        }
        Ok(Permutation(word))
    }

    /// Advances to the lexicographic successor in place. Returns false at the
    /// last permutation, leaving the word unchanged.
    pub fn next_lex(&mut self) -> bool {
        next_permutation(&mut self.0)
    }
}

pub(crate) fn next_permutation(w: &mut [u32]) -> bool {
    let n = w.len();
    if n < 2 {
        return false;
    }
    let mut i = n - 1;
    while i > 0 && w[i - 1] >= w[i] {
        i -= 1;
    }
    if i == 0 {
        return false;
    }
    let mut j = n - 1;
    while w[j] <= w[i - 1] {
        j -= 1;
    }
    w.swap(i - 1, j);
    w[i..].reverse();
    true
}

fn patience(values: impl Iterator<Item = u32>) -> usize {
    let mut tops: Vec<u32> = Vec::new();
    for v in values {
        match tops.binary_search(&v) {
            Ok(_) => {}
            Err(idx) if idx == tops.len() => tops.push(v),
            Err(idx) => tops[idx] = v,
        }
    }
    tops.len()
}

pub fn factorial(n: usize) -> u64 {
    (1..=n as u64).product()
}

/// Permutations of `n` in lexicographic order over the rank range `start..end`.
#[derive(Clone, Debug)]
pub struct LexRange {
    current: Option<Permutation>,
    remaining: u64,
}

impl LexRange {
    pub fn new(n: usize, start: u64, end: u64) -> Result<Self> {
        let end = end.min(factorial(n.min(MAX_RANKED_N)));
        if start >= end {
            return Ok(LexRange { current: None, remaining: 0 });
        }
        let first = Permutation::lehmer_unrank(n, start)?;
        Ok(LexRange { current: Some(first), remaining: end - start })
    }
}

impl Iterator for LexRange {
    type Item = Permutation;

    fn next(&mut self) -> Option<Permutation> {
        if self.remaining == 0 {
            return None;
        }
        self.remaining -= 1;
        let out = self.current.clone()?;
        if self.remaining > 0 {
            if let Some(cur) = self.current.as_mut() {
                cur.next_lex();
            }
        }
        Some(out)
    }

    fn size_hint(&self) -> (usize, Option<usize>) {
        let r = self.remaining as usize;
        (r, Some(r))
    }
}

/// All of `S_n` in lexicographic order.
pub fn all_permutations(n: usize) -> Result<LexRange> {
    if n == 0 {
        return Err(Error::EmptyDomain);
    }
    LexRange::new(n, 0, u64::MAX)
}

impl fmt::Display for Permutation {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write_joined(f, &self.0)
    }
}

pub(crate) fn write_joined(f: &mut fmt::Formatter<'_>, values: &[u32]) -> fmt::Result {
    for (i, v) in values.iter().enumerate() {
        if i > 0 {
            f.write_str(",")?;
        }
        write!(f, "{v}")?;
    }
    Ok(())
}

pub(crate) fn parse_values(s: &str) -> Result<Vec<u32>> {
    s.split(',')
        .map(|field| {
            let t = field.trim();
            t.parse::<u32>().map_err(|_| Error::ParseInt(field.to_string()))
        })
        .collect()
}

/// Comma-separated 1-based values, e.g. `2,4,1,3,5`.
impl FromStr for Permutation {
    type Err = Error;

    fn from_str(s: &str) -> Result<Self> {
        if s.trim().is_empty() {
            return Err(Error::EmptyPermutation);
        }
        Permutation::new(parse_values(s)?)
    }
}

impl TryFrom<Vec<u32>> for Permutation {
    type Error = Error;

    fn try_from(word: Vec<u32>) -> Result<Self> {
        Permutation::new(word)
    }
}

impl From<Permutation> for Vec<u32> {
    fn from(p: Permutation) -> Vec<u32> {
        p.0
    }
}

/// An ordered sequence of positive parts.
#[derive(Clone, Debug, PartialEq, Eq, PartialOrd, Ord, Hash)]
pub struct Composition(Vec<usize>);

impl Composition {
    pub fn new(parts: Vec<usize>) -> Result<Self> {
        if parts.is_empty() {
            return Err(Error::EmptyDomain);
        }
        if parts.contains(&0) {
            return Err(Error::ZeroPart);
        }
        Ok(Composition(parts))
    }

    pub fn parts(&self) -> &[usize] {
        &self.0
    }

    pub fn total(&self) -> usize {
        self.0.iter().sum()
    }

    /// The longest element of the Young subgroup `S_{n_1} x ... x S_{n_k}`:
    /// each consecutive block of positions is reversed.
    pub fn sigma(&self) -> Permutation {
        let mut word = Vec::with_capacity(self.total());
        let mut offset = 0u32;
        for &part in &self.0 {
            let part = part as u32;
            word.extend((offset + 1..=offset + part).rev());
            offset += part;
        }
        Permutation(word)
    }
}

impl fmt::Display for Composition {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        let parts: Vec<String> = self.0.iter().map(usize::to_string).collect();
        write!(f, "({})", parts.join(","))
    }
}

/// Compositions of `n` in reverse lexicographic order, starting from `(n)` and
/// ending at `(1, ..., 1)`.
#[derive(Clone, Debug)]
pub struct Compositions {
    next: Option<Vec<usize>>,
}

impl Iterator for Compositions {
    type Item = Composition;

    fn next(&mut self) -> Option<Composition> {
        let current = self.next.take()?;
        // Decrement the last part above 1 and fold everything after it into one part.
        if let Some(j) = current.iter().rposition(|&p| p > 1) {
            let tail: usize = current[j + 1..].iter().sum::<usize>() + 1;
            let mut succ = current[..=j].to_vec();
            succ[j] -= 1;
            succ.push(tail);
            self.next = Some(succ);
        }
        Some(Composition(current))
    }
}

pub fn compositions(n: usize) -> Result<Compositions> {
    if n == 0 {
        return Err(Error::EmptyDomain);
    }
    Ok(Compositions { next: Some(vec![n]) })
}

#[cfg(test)]
mod tests {
    use super::*;
    use std::collections::HashSet;

    fn p(v: &[u32]) -> Permutation {
        Permutation::new(v.to_vec()).unwrap()
    }

    #[test]
    fn validation() {
        assert_eq!(p(&[1, 2, 3]).as_slice(), &[1, 2, 3]);
        assert_eq!(Permutation::new(vec![2, 2, 3]), Err(Error::DuplicateValue(2)));
        assert_eq!(p(&[2, 4, 1, 3, 5]).as_slice(), &[2, 4, 1, 3, 5]);
        assert_eq!(Permutation::new(vec![]), Err(Error::EmptyPermutation));
        assert!(matches!(Permutation::new(vec![1, 4, 2]), Err(Error::ValueOutOfRange { value: 4, .. })));
        assert!(matches!(Permutation::new(vec![0, 1]), Err(Error::ValueOutOfRange { value: 0, .. })));
    }

    #[test]
    fn parsing() {
        assert_eq!("2,4,1,3,5".parse::<Permutation>().unwrap(), p(&[2, 4, 1, 3, 5]));
        assert_eq!("1".parse::<Permutation>().unwrap(), p(&[1]));
        assert!("2,2".parse::<Permutation>().is_err());
        assert!("1, ,2".parse::<Permutation>().is_err());
        assert!("1,x".parse::<Permutation>().is_err());
        assert!("   ".parse::<Permutation>().is_err());
        assert!("1,2,".parse::<Permutation>().is_err());
        assert_eq!(p(&[2, 4, 1, 3, 5]).to_string(), "2,4,1,3,5");
    }

    #[test]
    fn inverse_examples() {
        assert_eq!(p(&[1, 2, 3]).inverse(), p(&[1, 2, 3]));
        assert_eq!(p(&[2, 4, 1, 3, 5]).inverse(), p(&[3, 1, 4, 2, 5]));
        assert_eq!(p(&[3, 2, 1]).inverse(), p(&[3, 2, 1]));
    }

    #[test]
    fn involutions() {
        assert!(p(&[2, 1, 3]).is_involution());
        assert!(!p(&[2, 3, 1]).is_involution());
        assert!(p(&[4, 2, 3, 1]).is_involution());
    }

    #[test]
    fn inverse_is_involutive_exhaustive() {
        for n in 1..=8 {
            for w in all_permutations(n).unwrap() {
                let inv = w.inverse();
                for (i, &v) in w.as_slice().iter().enumerate() {
                    assert_eq!(inv.at(v as usize) as usize, i + 1);
                }
                assert_eq!(inv.inverse(), w);
                assert_eq!(w.is_involution(), inv == w);
            }
        }
    }

    #[test]
    fn sigma_examples() {
        let c = |v: &[usize]| Composition::new(v.to_vec()).unwrap();
        assert_eq!(c(&[3]).sigma(), p(&[3, 2, 1]));
        assert_eq!(c(&[2, 1]).sigma(), p(&[2, 1, 3]));
        assert_eq!(c(&[1, 2]).sigma(), p(&[1, 3, 2]));
        assert_eq!(Composition::new(vec![2, 0]), Err(Error::ZeroPart));
    }

    #[test]
    fn composition_streams() {
        let one: Vec<_> = compositions(1).unwrap().map(|c| c.parts().to_vec()).collect();
        assert_eq!(one, vec![vec![1]]);
        let three: Vec<_> = compositions(3).unwrap().map(|c| c.parts().to_vec()).collect();
        assert_eq!(three, vec![vec![3], vec![2, 1], vec![1, 2], vec![1, 1, 1]]);
        assert_eq!(compositions(5).unwrap().count(), 16);
        assert!(compositions(0).is_err());
        for n in 1..=10 {
            let all: Vec<_> = compositions(n).unwrap().collect();
            let distinct: HashSet<_> = all.iter().cloned().collect();
            assert_eq!(all.len(), 1 << (n - 1));
            assert_eq!(distinct.len(), all.len());
            assert!(all.iter().all(|c| c.total() == n));
            assert!(all.windows(2).all(|w| w[0] > w[1]), "not reverse-lex at n={n}");
        }
    }

    #[test]
    fn sigma_is_involution() {
        for n in 1..=8 {
            for c in compositions(n).unwrap() {
                assert!(c.sigma().is_involution(), "{c}");
            }
        }
    }

    #[test]
    fn lehmer_examples() {
        assert_eq!(Permutation::lehmer_unrank(3, 0).unwrap(), p(&[1, 2, 3]));
        // 5 = 2*2! + 1*1! + 0*0!
        assert_eq!(Permutation::lehmer_unrank(3, 5).unwrap(), p(&[3, 2, 1]));
        assert_eq!(Permutation::lehmer_unrank(4, 17).unwrap().lehmer_rank().unwrap(), 17);
        assert!(matches!(Permutation::lehmer_unrank(3, 6), Err(Error::RankOutOfRange { .. })));
        assert!(Permutation::lehmer_unrank(0, 0).is_err());
        assert!(Permutation::lehmer_unrank(21, 0).is_err());
    }

    #[test]
    fn lehmer_round_trip_exhaustive() {
        for n in 1..=7 {
            let total = factorial(n);
            let mut prev: Option<Permutation> = None;
            for r in 0..total {
                let w = Permutation::lehmer_unrank(n, r).unwrap();
                assert_eq!(w.lehmer_rank().unwrap(), r);
                if let Some(prev) = prev {
                    assert!(prev < w);
                }
                prev = Some(w);
            }
        }
    }

    #[test]
    fn lex_range_matches_unrank() {
        let n = 6;
        let ranged: Vec<_> = LexRange::new(n, 100, 250).unwrap().collect();
        assert_eq!(ranged.len(), 150);
        for (i, w) in ranged.iter().enumerate() {
            assert_eq!(w, &Permutation::lehmer_unrank(n, 100 + i as u64).unwrap());
        }
        assert_eq!(all_permutations(5).unwrap().count(), 120);
        assert_eq!(LexRange::new(4, 30, 40).unwrap().count(), 0);
    }

    #[test]
    fn lis_lds_examples() {
        assert_eq!(p(&[2, 4, 1, 3, 5]).lis(), 3);
        assert_eq!(Permutation::identity(6).lis(), 6);
        assert_eq!(p(&[3, 2, 1]).lds(), 3);
        assert_eq!(p(&[2, 4, 1, 3, 5]).lds(), 2);
    }

    fn lis_brute(w: &[u32], increasing: bool) -> usize {
        let n = w.len();
        (1u32..1 << n)
            .filter(|mask| {
                let picked: Vec<u32> = (0..n).filter(|i| mask >> i & 1 == 1).map(|i| w[i]).collect();
                picked.windows(2).all(|p| (p[0] < p[1]) == increasing)
            })
            .map(|mask| mask.count_ones() as usize)
            .max()
            .unwrap()
    }

    #[test]
    fn lis_lds_against_subset_enumeration() {
        for w in all_permutations(6).unwrap() {
            assert_eq!(w.lis(), lis_brute(w.as_slice(), true));
            assert_eq!(w.lds(), lis_brute(w.as_slice(), false));
        }
    }
}
