//! Shapes, standard Young tableaux and Robinson-Schensted row insertion.

use std::fmt;
use std::str::FromStr;

use serde::{Deserialize, Serialize};

use crate::error::{Error, Result};
use crate::perm::{parse_values, write_joined, Permutation};

/// An integer partition: weakly decreasing positive row lengths.
#[derive(Clone, Debug, PartialEq, Eq, PartialOrd, Ord, Hash, Serialize, Deserialize)]
#[serde(try_from = "Vec<usize>", into = "Vec<usize>")]
pub struct Shape(Vec<usize>);

impl Shape {
    pub fn new(rows: Vec<usize>) -> Result<Self> {
        if rows.is_empty() {
            return Err(Error::InvalidShape("no rows".into()));
        }
        if rows.contains(&0) {
            return Err(Error::InvalidShape("zero-length row".into()));
        }
        if rows.windows(2).any(|w| w[0] < w[1]) {
            return Err(Error::InvalidShape(format!("{rows:?} is not weakly decreasing")));
        }
        Ok(Shape(rows))
    }

    pub fn rows(&self) -> &[usize] {
        &self.0
    }

    pub fn size(&self) -> usize {
        self.0.iter().sum()
    }

    pub fn num_rows(&self) -> usize {
        self.0.len()
    }

    pub fn num_columns(&self) -> usize {
        self.0[0]
    }

    /// Conjugate partition.
    pub fn conjugate(&self) -> Shape {
        Shape((0..self.0[0]).map(|j| self.0.iter().take_while(|&&r| r > j).count()).collect())
    }

    /// `(k, 1^(n-k))`.
    pub fn is_hook(&self) -> bool {
        self.0[1..].iter().all(|&r| r == 1)
    }

    /// Number of standard tableaux of this shape, by the hook length formula.
    ///
    /// `n! / prod(hooks)` is evaluated on prime exponents so the intermediate
    /// factorial never has to fit in a machine word.
    pub fn syt_count(&self) -> u128 {
        let n = self.size();
        let conj = self.conjugate();
        let mut exponents = vec![0i64; n + 1];
        for m in 2..=n {
            add_factors(&mut exponents, m, 1);
        }
        for (i, &len) in self.0.iter().enumerate() {
            for j in 0..len {
                let hook = (len - j - 1) + (conj.0[j] - i - 1) + 1;
                add_factors(&mut exponents, hook, -1);
            }
        }
        let mut count = 1u128;
        for (p, &e) in exponents.iter().enumerate() {
            debug_assert!(e >= 0, "hook product does not divide n!");
            for _ in 0..e {
                count *= p as u128;
            }
        }
        count
    }

    /// All partitions of `n` in decreasing lexicographic order, `(n)` first.
    pub fn partitions(n: usize) -> Vec<Shape> {
        fn go(rest: usize, max: usize, prefix: &mut Vec<usize>, out: &mut Vec<Shape>) {
            if rest == 0 {
                out.push(Shape(prefix.clone()));
                return;
            }
            for part in (1..=rest.min(max)).rev() {
                prefix.push(part);
                go(rest - part, part, prefix, out);
                prefix.pop();
            }
        }
        let mut out = Vec::new();
        if n > 0 {
            go(n, n, &mut Vec::new(), &mut out);
        }
        out
    }
}

fn add_factors(exponents: &mut [i64], mut m: usize, sign: i64) {
    let mut p = 2;
    while p * p <= m {
        while m.is_multiple_of(p) {
            exponents[p] += sign;
            m /= p;
        }
        p += 1;
    }
    if m > 1 {
        exponents[m] += sign;
    }
}

impl fmt::Display for Shape {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        let parts: Vec<String> = self.0.iter().map(usize::to_string).collect();
        f.write_str(&parts.join(","))
    }
}

impl TryFrom<Vec<usize>> for Shape {
    type Error = Error;

    fn try_from(rows: Vec<usize>) -> Result<Self> {
        Shape::new(rows)
    }
}

impl From<Shape> for Vec<usize> {
    fn from(s: Shape) -> Vec<usize> {
        s.0
    }
}

/// A standard Young tableau in English notation: rows top to bottom.
#[derive(Clone, Debug, PartialEq, Eq, PartialOrd, Ord, Hash, Serialize, Deserialize)]
#[serde(try_from = "Vec<Vec<u32>>", into = "Vec<Vec<u32>>")]
pub struct StandardTableau {
    rows: Vec<Vec<u32>>,
}

impl StandardTableau {
    /// Checks shape, then content, then row order, then column order, and
    /// reports the first violation found.
    pub fn new(rows: Vec<Vec<u32>>) -> Result<Self> {
        let lens: Vec<usize> = rows.iter().map(Vec::len).collect();
        Shape::new(lens).map_err(|e| match e {
            Error::InvalidShape(msg) => Error::InvalidTableau(format!("bad shape: {msg}")),
            other => other,
        })?;
        let n: usize = rows.iter().map(Vec::len).sum();
        let mut seen = vec![false; n];
        for &v in rows.iter().flatten() {
            if v == 0 || v as usize > n {
                return Err(Error::InvalidTableau(format!("entry {v} outside 1..={n}")));
            }
            if std::mem::replace(&mut seen[v as usize - 1], true) {
                return Err(Error::InvalidTableau(format!("duplicate entry {v}")));
            }
        }
        for (i, row) in rows.iter().enumerate() {
            if row.windows(2).any(|w| w[0] >= w[1]) {
                return Err(Error::InvalidTableau(format!("row {} not increasing", i + 1)));
            }
        }
        for (i, pair) in rows.windows(2).enumerate() {
            if pair[1].iter().zip(&pair[0]).any(|(below, above)| below <= above) {
                return Err(Error::InvalidTableau(format!(
                    "column order violated between rows {} and {}",
                    i + 1,
                    i + 2
                )));
            }
        }
        Ok(StandardTableau { rows })
    }

    pub fn rows(&self) -> &[Vec<u32>] {
        &self.rows
    }

    pub fn size(&self) -> usize {
        self.rows.iter().map(Vec::len).sum()
    }

    pub fn shape(&self) -> Shape {
        Shape(self.rows.iter().map(Vec::len).collect())
    }

    pub fn num_rows(&self) -> usize {
        self.rows.len()
    }

    pub fn num_columns(&self) -> usize {
        self.rows[0].len()
    }

    /// Column `j` (0-based) read top to bottom.
    pub fn column(&self, j: usize) -> Vec<u32> {
        self.rows.iter().map_while(|r| r.get(j).copied()).collect()
    }

    /// Row word: rows concatenated from the bottom row up.
    pub fn row_word(&self) -> Permutation {
        Permutation::from_vec_unchecked(self.rows.iter().rev().flatten().copied().collect())
    }

    /// Column word: columns left to right, each read bottom to top.
    pub fn column_word(&self) -> Permutation {
        let mut word = Vec::with_capacity(self.size());
        for j in 0..self.num_columns() {
            let mut col = self.column(j);
            col.reverse();
            word.extend(col);
        }
        Permutation::from_vec_unchecked(word)
    }

    pub fn transpose(&self) -> StandardTableau {
        StandardTableau { rows: (0..self.num_columns()).map(|j| self.column(j)).collect() }
    }

    /// Canonical text key, e.g. `1,3,5|2,4`.
    pub fn key(&self) -> String {
        self.to_string()
    }

    /// Every standard tableau of shape `shape`, ordered lexicographically by
    /// the sequence (row of entry 1, row of entry 2, ...).
    pub fn enumerate(shape: &Shape) -> Vec<StandardTableau> {
        fn go(shape: &[usize], rows: &mut Vec<Vec<u32>>, next: u32, n: u32, out: &mut Vec<StandardTableau>) {
            if next > n {
                out.push(StandardTableau { rows: rows.clone() });
                return;
            }
            for r in 0..shape.len() {
                let len = rows[r].len();
                let fits = len < shape[r] && (r == 0 || rows[r - 1].len() > len);
                if fits {
                    rows[r].push(next);
                    go(shape, rows, next + 1, n, out);
                    rows[r].pop();
                }
            }
        }
        let mut out = Vec::new();
        let mut rows = vec![Vec::new(); shape.num_rows()];
        go(shape.rows(), &mut rows, 1, shape.size() as u32, &mut out);
        out
    }
}

/// The insertion tableau `P(w)`: each value is row-inserted, bumping the
/// leftmost entry strictly larger than it into the next row.
pub fn rs_insert(w: &Permutation) -> StandardTableau {
    let mut rows: Vec<Vec<u32>> = Vec::new();
    for &value in w.as_slice() {
        let mut x = value;
        let mut r = 0;
        loop {
            if r == rows.len() {
                rows.push(vec![x]);
                break;
            }
            let row = &mut rows[r];
            let idx = row.partition_point(|&e| e < x);
            if idx == row.len() {
                row.push(x);
                break;
            }
            x = std::mem::replace(&mut row[idx], x);
            r += 1;
        }
    }
    StandardTableau { rows }
}

/// Linear-scan insertion; reference path for [`rs_insert`].
pub fn rs_insert_linear(w: &Permutation) -> StandardTableau {
    let mut rows: Vec<Vec<u32>> = Vec::new();
    for &value in w.as_slice() {
        let mut x = value;
        let mut placed = false;
        for row in rows.iter_mut() {
            match row.iter().position(|&e| e > x) {
                Some(idx) => x = std::mem::replace(&mut row[idx], x),
                None => {
                    row.push(x);
                    placed = true;
                    break;
                }
            }
        }
        if !placed {
            rows.push(vec![x]);
        }
    }
    StandardTableau { rows }
}

impl fmt::Display for StandardTableau {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        for (i, row) in self.rows.iter().enumerate() {
            if i > 0 {
                f.write_str("|")?;
            }
            write_joined(f, row)?;
        }
        Ok(())
    }
}

/// Rows separated by `|`, entries by `,`.
impl FromStr for StandardTableau {
    type Err = Error;

    fn from_str(s: &str) -> Result<Self> {
        if s.trim().is_empty() {
            return Err(Error::InvalidTableau("empty".into()));
        }
        let rows = s.split('|').map(parse_values).collect::<Result<Vec<_>>>()?;
        StandardTableau::new(rows)
    }
}

impl TryFrom<Vec<Vec<u32>>> for StandardTableau {
    type Error = Error;

    fn try_from(rows: Vec<Vec<u32>>) -> Result<Self> {
        StandardTableau::new(rows)
    }
}

impl From<StandardTableau> for Vec<Vec<u32>> {
    fn from(t: StandardTableau) -> Vec<Vec<u32>> {
        t.rows
    }
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::perm::all_permutations;

    fn t(rows: &[&[u32]]) -> StandardTableau {
        StandardTableau::new(rows.iter().map(|r| r.to_vec()).collect()).unwrap()
    }

    fn p(v: &[u32]) -> Permutation {
        Permutation::new(v.to_vec()).unwrap()
    }

    fn shape(v: &[usize]) -> Shape {
        Shape::new(v.to_vec()).unwrap()
    }

    #[test]
    fn validation() {
        assert!(StandardTableau::new(vec![vec![1, 3, 5], vec![2, 4]]).is_ok());
        let dup = StandardTableau::new(vec![vec![1, 2], vec![2, 3]]).unwrap_err();
        assert!(dup.to_string().contains("duplicate entry 2"), "{dup}");
        let row = StandardTableau::new(vec![vec![1, 4], vec![3, 2]]).unwrap_err();
        assert!(row.to_string().contains("row 2 not increasing"), "{row}");
        let col = StandardTableau::new(vec![vec![1, 2], vec![3], vec![4, 5]]).unwrap_err();
        assert!(col.to_string().contains("shape"), "{col}");
        let col = StandardTableau::new(vec![vec![2, 3], vec![1, 4]]).unwrap_err();
        assert!(col.to_string().contains("column"), "{col}");
        assert!(StandardTableau::new(vec![vec![1, 3], vec![2, 5]]).is_err());
        assert!(StandardTableau::new(vec![]).is_err());
    }

    #[test]
    fn insertion_examples() {
        assert_eq!(rs_insert(&p(&[1, 2, 3])), t(&[&[1, 2, 3]]));
        assert_eq!(rs_insert(&p(&[3, 2, 1])), t(&[&[1], &[2], &[3]]));
        assert_eq!(rs_insert(&p(&[2, 4, 1, 3, 5])), t(&[&[1, 3, 5], &[2, 4]]));
    }

    #[test]
    fn reading_words() {
        let ex = t(&[&[1, 3, 5], &[2, 4]]);
        assert_eq!(ex.row_word(), p(&[2, 4, 1, 3, 5]));
        assert_eq!(t(&[&[1, 2, 3]]).row_word(), p(&[1, 2, 3]));
        assert_eq!(t(&[&[1, 2], &[3], &[4]]).row_word(), p(&[4, 3, 1, 2]));
        assert_eq!(ex.column_word(), p(&[2, 1, 4, 3, 5]));
        assert_eq!(t(&[&[1], &[2], &[3]]).column_word(), p(&[3, 2, 1]));
        assert_eq!(t(&[&[1, 4], &[2, 5], &[3]]).column_word(), p(&[3, 2, 1, 5, 4]));
    }

    #[test]
    fn shapes() {
        assert_eq!(t(&[&[1, 3, 5], &[2, 4]]).shape(), shape(&[3, 2]));
        assert_eq!(t(&[&[1, 2, 3]]).shape(), shape(&[3]));
        assert_eq!(t(&[&[1], &[2], &[3]]).shape(), shape(&[1, 1, 1]));
        assert!(Shape::new(vec![1, 2]).is_err());
        assert_eq!(shape(&[3, 1]).conjugate(), shape(&[2, 1, 1]));
        assert!(shape(&[3, 1, 1]).is_hook());
        assert!(!shape(&[2, 2]).is_hook());
    }

    #[test]
    fn transposes() {
        assert_eq!(t(&[&[1, 2, 3]]).transpose(), t(&[&[1], &[2], &[3]]));
        assert_eq!(t(&[&[1, 3], &[2, 4]]).transpose(), t(&[&[1, 2], &[3, 4]]));
        for s in Shape::partitions(6) {
            for tab in StandardTableau::enumerate(&s) {
                let tt = tab.transpose();
                assert!(StandardTableau::new(tt.rows().to_vec()).is_ok());
                assert_eq!(tt.shape(), s.conjugate());
                assert_eq!(tt.transpose(), tab);
            }
        }
    }

    #[test]
    fn syt_enumeration_examples() {
        assert_eq!(StandardTableau::enumerate(&shape(&[5])), vec![t(&[&[1, 2, 3, 4, 5]])]);
        assert_eq!(StandardTableau::enumerate(&shape(&[2, 2])), vec![t(&[&[1, 2], &[3, 4]]), t(&[&[1, 3], &[2, 4]])]);
        assert_eq!(StandardTableau::enumerate(&shape(&[3, 2, 2])).len(), 21);
    }

    #[test]
    fn hook_length_examples() {
        assert_eq!(shape(&[7]).syt_count(), 1);
        assert_eq!(shape(&[2, 2]).syt_count(), 2);
        assert_eq!(shape(&[2, 1, 1]).syt_count(), 3);
        assert_eq!(shape(&[3, 2, 2]).syt_count(), 21);
        // 2x4 rectangle: Catalan(4).
        assert_eq!(shape(&[4, 4]).syt_count(), 14);
        // Staircase (6,5,4,3,2,1): 21! / prod of odd hooks.
        assert_eq!(shape(&[6, 5, 4, 3, 2, 1]).syt_count(), 1_100_742_656);
    }

    #[test]
    fn enumeration_matches_hook_formula() {
        for n in 1..=8 {
            for s in Shape::partitions(n) {
                let all = StandardTableau::enumerate(&s);
                assert_eq!(all.len() as u128, s.syt_count(), "shape {s}");
                assert!(all.windows(2).all(|w| w[0] != w[1]));
            }
        }
    }

    #[test]
    fn partition_counts() {
        let counts: Vec<usize> = (1..=10).map(|n| Shape::partitions(n).len()).collect();
        assert_eq!(counts, vec![1, 2, 3, 5, 7, 11, 15, 22, 30, 42]);
        assert_eq!(Shape::partitions(4)[0], shape(&[4]));
        assert_eq!(Shape::partitions(4)[4], shape(&[1, 1, 1, 1]));
    }

    #[test]
    fn reading_words_insert_back() {
        for n in 1..=7 {
            for s in Shape::partitions(n) {
                for tab in StandardTableau::enumerate(&s) {
                    assert_eq!(rs_insert(&tab.row_word()), tab);
                    assert_eq!(rs_insert(&tab.column_word()), tab);
                }
            }
        }
    }

    #[test]
    fn insertion_paths_agree_and_shapes_are_partitions() {
        for w in all_permutations(7).unwrap() {
            let fast = rs_insert(&w);
            assert_eq!(fast, rs_insert_linear(&w));
            assert!(Shape::new(fast.shape().rows().to_vec()).is_ok());
            assert_eq!(fast.size(), 7);
        }
    }

    #[test]
    fn first_row_and_column_give_lis_and_lds() {
        for w in all_permutations(6).unwrap() {
            let tab = rs_insert(&w);
            assert_eq!(tab.rows()[0].len(), w.lis());
            assert_eq!(tab.num_rows(), w.lds());
        }
    }

    #[test]
    fn text_format() {
        let tab: StandardTableau = "1,3,5|2,4".parse().unwrap();
        assert_eq!(tab, t(&[&[1, 3, 5], &[2, 4]]));
        assert_eq!(tab.key(), "1,3,5|2,4");
        assert_eq!("1,2,3".parse::<StandardTableau>().unwrap(), t(&[&[1, 2, 3]]));
        assert!("1,4|3,2".parse::<StandardTableau>().is_err());
        assert!("1,2||3".parse::<StandardTableau>().is_err());
        assert!("".parse::<StandardTableau>().is_err());
    }
}
