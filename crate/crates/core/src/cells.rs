//! Cell census of `S_n` and the smoothness classification of cells.
//!
//! A cell is the set of permutations sharing one insertion tableau. The
//! census walks all of `S_n` in Lehmer-rank order, optionally split across
//! worker lanes, and keeps only per-tableau counters and first-seen samples.

use std::collections::{BTreeSet, HashMap};
use std::fmt;
use std::thread;

use serde::{Deserialize, Serialize};

use crate::error::{Error, Result};
use crate::knuth::knuth_class;
use crate::perm::{factorial, LexRange, Permutation};
use crate::smoothness::{is_smooth, ForbiddenPattern};
use crate::tableau::{rs_insert, Shape, StandardTableau};

pub const DEFAULT_MAX_N: usize = 10;

#[derive(Clone, Copy, Debug, PartialEq, Eq, Hash, Serialize, Deserialize)]
#[serde(rename_all = "SCREAMING_SNAKE_CASE")]
pub enum CellClassification {
    AllSmooth,
    AllNonsmooth,
    Mixed,
}

impl CellClassification {
    pub fn from_counts(size: u64, smooth: u64) -> Self {
        if smooth == size {
            CellClassification::AllSmooth
        } else if smooth == 0 {
            CellClassification::AllNonsmooth
        } else {
            CellClassification::Mixed
        }
    }

    pub fn as_str(self) -> &'static str {
        match self {
            CellClassification::AllSmooth => "ALL_SMOOTH",
            CellClassification::AllNonsmooth => "ALL_NONSMOOTH",
            CellClassification::Mixed => "MIXED",
        }
    }
}

impl fmt::Display for CellClassification {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.write_str(self.as_str())
    }
}

#[derive(Clone, Debug, PartialEq, Eq, Serialize, Deserialize)]
pub struct CellReport {
    pub tableau: StandardTableau,
    pub shape: Shape,
    pub size: u64,
    pub smooth_count: u64,
    pub nonsmooth_count: u64,
    pub classification: CellClassification,
    /// Lexicographically first smooth member.
    pub sample_smooth: Option<Permutation>,
    /// Lexicographically first non-smooth member.
    pub sample_nonsmooth: Option<Permutation>,
}

#[derive(Clone, Debug, Default, PartialEq, Eq, Serialize, Deserialize)]
pub struct SurveyTotals {
    pub cells: u64,
    pub permutations: u64,
    pub all_smooth: u64,
    pub all_nonsmooth: u64,
    pub mixed: u64,
}

#[derive(Clone, Debug, PartialEq, Eq, Serialize, Deserialize)]
pub struct SurveyResult {
    pub n: usize,
    pub cells: Vec<CellReport>,
    pub totals: SurveyTotals,
}

impl SurveyResult {
    pub fn cell(&self, tableau: &StandardTableau) -> Option<&CellReport> {
        self.cells.iter().find(|c| &c.tableau == tableau)
    }
}

#[derive(Clone, Copy, Debug, PartialEq, Eq)]
pub struct SurveyOptions {
    /// Worker lanes over disjoint rank ranges.
    pub jobs: usize,
    pub max_n: usize,
}

impl Default for SurveyOptions {
    fn default() -> Self {
        SurveyOptions { jobs: 1, max_n: DEFAULT_MAX_N }
    }
}

/// The cell of `P`: the Knuth class of its row word.
pub fn cell_elements(tableau: &StandardTableau) -> BTreeSet<Permutation> {
    knuth_class(&tableau.row_word())
}

/// Classifies a single cell by materializing its members.
pub fn classify_cell(tableau: &StandardTableau) -> CellReport {
    let mut acc = Counter::default();
    // Members arrive in lexicographic order, so first-seen is the minimum.
    for w in cell_elements(tableau) {
        acc.record(&w, is_smooth(&w));
    }
    acc.into_report(tableau.clone())
}

#[derive(Clone, Debug, Default)]
struct Counter {
    size: u64,
    smooth: u64,
    sample_smooth: Option<Permutation>,
    sample_nonsmooth: Option<Permutation>,
}

impl Counter {
    fn record(&mut self, w: &Permutation, smooth: bool) {
        self.size += 1;
        let slot = if smooth {
            self.smooth += 1;
            &mut self.sample_smooth
        } else {
            &mut self.sample_nonsmooth
        };
        if slot.is_none() {
            *slot = Some(w.clone());
        }
    }

    fn merge(&mut self, other: Counter) {
        self.size += other.size;
        self.smooth += other.smooth;
        self.sample_smooth = min_sample(self.sample_smooth.take(), other.sample_smooth);
        self.sample_nonsmooth = min_sample(self.sample_nonsmooth.take(), other.sample_nonsmooth);
    }

    fn into_report(self, tableau: StandardTableau) -> CellReport {
        CellReport {
            shape: tableau.shape(),
            tableau,
            size: self.size,
            smooth_count: self.smooth,
            nonsmooth_count: self.size - self.smooth,
            classification: CellClassification::from_counts(self.size, self.smooth),
            sample_smooth: self.sample_smooth,
            sample_nonsmooth: self.sample_nonsmooth,
        }
    }
}

fn min_sample(a: Option<Permutation>, b: Option<Permutation>) -> Option<Permutation> {
    match (a, b) {
        (Some(a), Some(b)) => Some(a.min(b)),
        (a, b) => a.or(b),
    }
}

fn survey_range(n: usize, start: u64, end: u64) -> Result<HashMap<StandardTableau, Counter>> {
    let mut acc: HashMap<StandardTableau, Counter> = HashMap::new();
    for w in LexRange::new(n, start, end)? {
        let smooth = is_smooth(&w);
        acc.entry(rs_insert(&w)).or_default().record(&w, smooth);
    }
    Ok(acc)
}

/// Full census of `S_n`. Output order is by shape (decreasing
/// lexicographic), then by row word, and does not depend on `jobs`.
pub fn survey(n: usize, options: SurveyOptions) -> Result<SurveyResult> {
    if n == 0 || n > options.max_n {
        return Err(Error::SurveyRange { n, max: options.max_n });
    }
    if n > crate::perm::MAX_RANKED_N {
        return Err(Error::RankingLimit(n));
    }
    if options.jobs == 0 {
        return Err(Error::ZeroJobs);
    }
    let total = factorial(n);
    let lanes = (options.jobs as u64).min(total);
    let chunk = total.div_ceil(lanes);
    let partials: Vec<Result<HashMap<StandardTableau, Counter>>> = if lanes == 1 {
        vec![survey_range(n, 0, total)]
    } else {
        thread::scope(|scope| {
            let handles: Vec<_> = (0..lanes)
                .map(|lane| {
                    let start = lane * chunk;
                    let end = (start + chunk).min(total);
                    scope.spawn(move || survey_range(n, start, end))
                })
                .collect();
            handles.into_iter().map(|h| h.join().expect("survey lane panicked")).collect()
        })
    };

    let mut merged: HashMap<StandardTableau, Counter> = HashMap::new();
    for partial in partials {
        for (tab, counter) in partial? {
            merged.entry(tab).or_default().merge(counter);
        }
    }

    let mut cells: Vec<CellReport> = merged.into_iter().map(|(tab, c)| c.into_report(tab)).collect();
    cells.sort_by_cached_key(|c| (std::cmp::Reverse(c.shape.clone()), c.tableau.row_word()));

    let mut totals = SurveyTotals { cells: cells.len() as u64, ..Default::default() };
    for c in &cells {
        totals.permutations += c.size;
        match c.classification {
            CellClassification::AllSmooth => totals.all_smooth += 1,
            CellClassification::AllNonsmooth => totals.all_nonsmooth += 1,
            CellClassification::Mixed => totals.mixed += 1,
        }
    }
    Ok(SurveyResult { n, cells, totals })
}

fn is_interval(values: &[u32]) -> bool {
    values.windows(2).all(|w| w[1] == w[0] + 1)
}

/// Tableaux whose cells the main classification lists as entirely smooth:
/// a hook whose first-column entries below the corner are consecutive
/// integers, or shape `(n-2, 2)` with second row `(2, k)`.
pub fn theorem_main_predicate(tableau: &StandardTableau) -> bool {
    let rows = tableau.rows();
    let shape = tableau.shape();
    if shape.is_hook() {
        let below_corner: Vec<u32> = rows[1..].iter().map(|r| r[0]).collect();
        return is_interval(&below_corner);
    }
    let n = tableau.size();
    shape.rows() == [n - 2, 2] && rows[1][0] == 2
}

/// Second row is a consecutive block `k+1, ..., k+m` and `k + m - 2 > l`,
/// where `l` is the first-row length. Sufficient for every member of the
/// cell to contain 3412.
pub fn sufficient_nonsmooth_predicate(tableau: &StandardTableau) -> bool {
    let rows = tableau.rows();
    if rows.len() < 2 || !is_interval(&rows[1]) {
        return false;
    }
    let k = rows[1][0] as usize - 1;
    let m = rows[1].len();
    k + m > rows[0].len() + 2
}

/// For a two-column tableau with `b` on top of column 2, `a` at the bottom of
/// column 1 and `D` the entries of column 2 below `b`: true when every entry
/// of `D` exceeds `a`, or when, with `d` the largest entry of `D` below `a`,
/// every first-column entry smaller than `d` is also smaller than `b`.
pub fn prop6_has_smooth(tableau: &StandardTableau) -> Result<bool> {
    if tableau.num_columns() != 2 {
        return Err(Error::NotTwoColumn(tableau.num_columns()));
    }
    let first = tableau.column(0);
    let second = tableau.column(1);
    let a = *first.last().expect("nonempty column");
    let b = second[0];
    let below_b = &second[1..];
    match below_b.iter().copied().filter(|&x| x < a).max() {
        None => Ok(true),
        Some(d) => Ok(first.iter().filter(|&&e| e < d).all(|&e| e < b)),
    }
}

/// Two-column tableaux with first row `(1, 2)`, second column exactly
/// `(2, c)`, first column `(1, 3, ..., a)` with `a > c`, and some
/// first-column entry below `c`. Such cells hold both smooth and non-smooth
/// members.
pub fn two_column_mixed_family(tableau: &StandardTableau) -> bool {
    two_column_mixed_shape(tableau).is_some_and(|(first, c)| first.iter().any(|&e| e < c))
}

/// Everything in [`two_column_mixed_family`] except the "entry below `c`"
/// hypothesis; returns the first column and `c`.
pub(crate) fn two_column_mixed_shape(tableau: &StandardTableau) -> Option<(Vec<u32>, u32)> {
    let rows = tableau.rows();
    if tableau.num_columns() != 2 || rows.len() < 2 || rows[0] != [1, 2] {
        return None;
    }
    let first = tableau.column(0);
    let second = tableau.column(1);
    if second.len() != 2 || first[1] != 3 {
        return None;
    }
    let c = second[1];
    let a = *first.last()?;
    (a > c).then_some((first, c))
}

/// Whether every member of the cell of `tableau` contains the values of
/// `seq` in the given left-to-right order.
pub fn check_invariant_subsequence(tableau: &StandardTableau, seq: &[u32]) -> Result<bool> {
    let n = tableau.size();
    let mut seen = vec![false; n];
    for &v in seq {
        if v == 0 || v as usize > n {
            return Err(Error::InvalidSubsequence(format!("value {v} outside 1..={n}")));
        }
        if std::mem::replace(&mut seen[v as usize - 1], true) {
            return Err(Error::InvalidSubsequence(format!("value {v} repeated")));
        }
    }
    Ok(cell_elements(tableau).iter().all(|w| occurs_in_order(w, seq)))
}

pub fn occurs_in_order(w: &Permutation, seq: &[u32]) -> bool {
    let pos = w.positions();
    seq.windows(2).all(|p| pos[p[0] as usize - 1] < pos[p[1] as usize - 1])
}

/// A tableau together with a value sequence that every member of its cell
/// contains in order, and the forbidden pattern that sequence realizes.
#[derive(Clone, Debug, PartialEq, Eq, Serialize)]
pub struct InvariantFamily {
    pub name: &'static str,
    pub tableau: StandardTableau,
    pub invariant: Vec<u32>,
    pub pattern: ForbiddenPattern,
}

fn span(lo: u32, hi: u32) -> Vec<u32> {
    (lo..=hi).collect()
}

fn family(name: &'static str, rows: Vec<Vec<u32>>, invariant: Vec<u32>, pattern: ForbiddenPattern) -> InvariantFamily {
    let tableau = StandardTableau::new(rows).expect("family tableaux are standard");
    InvariantFamily { name, tableau, invariant, pattern }
}

/// The all-non-smooth families with invariant subsequences, for `k >= 3`.
///
/// Four two-row families carry a 3412 invariant. The two-column family
/// carrying a 4231 invariant needs rows `(k-2, k-1), (k, k+1), (k+2, k+3)`
/// stacked under full rows `(1, 2), (3, 4), ...`, which only exists for odd
/// `k`; it is included with and without an extra first-column box.
pub fn section5_families(k: usize) -> Result<Vec<InvariantFamily>> {
    if k < 3 {
        return Err(Error::FamilyParameter(k));
    }
    let k = k as u32;
    let quad = vec![k + 1, k + 2, k - 1, k];
    let mut out = vec![
        family("rectangle", vec![span(1, k), span(k + 1, 2 * k)], quad.clone(), ForbiddenPattern::P3412),
        family(
            "long-first-row",
            vec![span(1, k + 1), span(k + 2, 2 * k + 1)],
            vec![k + 2, k + 3, k, k + 1],
            ForbiddenPattern::P3412,
        ),
        family(
            "rectangle-top-corner",
            vec![[span(1, k), vec![2 * k + 1]].concat(), span(k + 1, 2 * k)],
            quad.clone(),
            ForbiddenPattern::P3412,
        ),
        family(
            "rectangle-third-row",
            vec![span(1, k), span(k + 1, 2 * k), vec![2 * k + 1]],
            quad,
            ForbiddenPattern::P3412,
        ),
    ];
    if k % 2 == 1 {
        let pairs: Vec<Vec<u32>> = (0..(k + 3) / 2).map(|r| vec![2 * r + 1, 2 * r + 2]).collect();
        let inv = vec![k + 2, k, k + 1, k - 1];
        out.push(family("two-column", pairs.clone(), inv.clone(), ForbiddenPattern::P4231));
        let mut tailed = pairs;
        tailed.push(vec![k + 4]);
        out.push(family("two-column-tail", tailed, inv, ForbiddenPattern::P4231));
    }
    Ok(out)
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

    #[test]
    fn cell_element_examples() {
        let one: Vec<_> = cell_elements(&t(&[&[1, 2, 3]])).into_iter().collect();
        assert_eq!(one, vec![p(&[1, 2, 3])]);
        let two: Vec<_> = cell_elements(&t(&[&[1, 3], &[2]])).into_iter().collect();
        assert_eq!(two, vec![p(&[2, 1, 3]), p(&[2, 3, 1])]);
        let four: Vec<_> = cell_elements(&t(&[&[1, 3], &[2, 4]])).into_iter().collect();
        assert_eq!(four, vec![p(&[2, 1, 4, 3]), p(&[2, 4, 1, 3])]);
    }

    #[test]
    fn classify_examples() {
        let r = classify_cell(&t(&[&[1, 3], &[2, 4]]));
        assert_eq!((r.classification, r.size), (CellClassification::AllSmooth, 2));
        let r = classify_cell(&t(&[&[1, 2], &[3, 4]]));
        assert_eq!((r.classification, r.size), (CellClassification::Mixed, 2));
        assert_eq!(r.sample_nonsmooth, Some(p(&[3, 4, 1, 2])));
        assert_eq!(r.sample_smooth, Some(p(&[3, 1, 4, 2])));
        let r = classify_cell(&t(&[&[1, 3], &[2], &[4]]));
        assert_eq!(r.classification, CellClassification::Mixed);
        assert_eq!(r.size, r.smooth_count + r.nonsmooth_count);
    }

    #[test]
    fn survey_small_cases() {
        let s3 = survey(3, SurveyOptions::default()).unwrap();
        assert_eq!(s3.cells.len(), 4);
        assert_eq!(s3.totals.all_smooth, 4);

        let s4 = survey(4, SurveyOptions::default()).unwrap();
        assert_eq!(s4.totals.cells, 10);
        assert_eq!((s4.totals.all_smooth, s4.totals.mixed, s4.totals.all_nonsmooth), (8, 2, 0));
        let non_smooth: BTreeSet<String> = s4
            .cells
            .iter()
            .filter(|c| c.classification != CellClassification::AllSmooth)
            .map(|c| c.tableau.key())
            .collect();
        assert_eq!(non_smooth, ["1,2|3,4".to_string(), "1,3|2|4".to_string()].into());

        let s6 = survey(6, SurveyOptions::default()).unwrap();
        assert!(s6.totals.all_nonsmooth >= 1);
        let rect = s6.cell(&t(&[&[1, 2, 3], &[4, 5, 6]])).unwrap();
        assert_eq!(rect.classification, CellClassification::AllNonsmooth);
    }

    #[test]
    fn survey_degenerate_and_range() {
        for n in 1..=2 {
            let s = survey(n, SurveyOptions::default()).unwrap();
            assert!(s.cells.iter().all(|c| c.classification == CellClassification::AllSmooth));
            assert!(s.cells.iter().all(|c| theorem_main_predicate(&c.tableau)));
        }
        assert!(matches!(survey(0, SurveyOptions::default()), Err(Error::SurveyRange { .. })));
        assert!(matches!(survey(11, SurveyOptions::default()), Err(Error::SurveyRange { max: 10, .. })));
        assert_eq!(survey(3, SurveyOptions { jobs: 0, max_n: 10 }), Err(Error::ZeroJobs));
    }

    #[test]
    fn survey_order_is_shape_then_row_word() {
        let s = survey(5, SurveyOptions::default()).unwrap();
        assert_eq!(s.cells[0].tableau, t(&[&[1, 2, 3, 4, 5]]));
        assert_eq!(s.cells.last().unwrap().tableau, t(&[&[1], &[2], &[3], &[4], &[5]]));
        for pair in s.cells.windows(2) {
            let (a, b) = (&pair[0], &pair[1]);
            assert!(a.shape > b.shape || (a.shape == b.shape && a.tableau.row_word() < b.tableau.row_word()));
        }
    }

    #[test]
    fn lanes_do_not_change_the_result() {
        let single = survey(7, SurveyOptions::default()).unwrap();
        for jobs in [2, 3, 8, 13] {
            assert_eq!(survey(7, SurveyOptions { jobs, max_n: 10 }).unwrap(), single);
        }
        // More lanes than permutations.
        assert_eq!(
            survey(2, SurveyOptions { jobs: 5, max_n: 10 }).unwrap(),
            survey(2, SurveyOptions::default()).unwrap()
        );
    }

    #[test]
    fn streaming_counts_match_materialized_cells() {
        for n in 1..=7 {
            let s = survey(n, SurveyOptions::default()).unwrap();
            for cell in &s.cells {
                assert_eq!(&classify_cell(&cell.tableau), cell);
            }
        }
    }

    #[test]
    fn survey_samples_and_counts_are_consistent() {
        let s = survey(6, SurveyOptions::default()).unwrap();
        for c in &s.cells {
            assert_eq!(c.size, c.smooth_count + c.nonsmooth_count);
            assert_eq!(c.size as u128, c.shape.syt_count());
            if let Some(w) = &c.sample_smooth {
                assert!(is_smooth(w) && rs_insert(w) == c.tableau);
            }
            if let Some(w) = &c.sample_nonsmooth {
                assert!(!is_smooth(w) && rs_insert(w) == c.tableau);
            }
            assert_eq!(c.sample_smooth.is_some(), c.smooth_count > 0);
            assert_eq!(c.sample_nonsmooth.is_some(), c.nonsmooth_count > 0);
        }
    }

    #[test]
    fn theorem_predicate_examples() {
        assert!(theorem_main_predicate(&t(&[&[1, 3], &[2, 4]])));
        assert!(!theorem_main_predicate(&t(&[&[1, 2], &[3, 4]])));
        assert!(theorem_main_predicate(&t(&[&[1, 2, 5], &[3], &[4]])));
        assert!(!theorem_main_predicate(&t(&[&[1, 2, 4], &[3], &[5]])));
        assert!(theorem_main_predicate(&t(&[&[1]])));
        assert!(theorem_main_predicate(&t(&[&[1, 2, 3, 5], &[4]])));
    }

    #[test]
    fn invariant_subsequence_examples() {
        assert!(check_invariant_subsequence(&t(&[&[1, 2, 3], &[4, 5, 6]]), &[4, 5, 2, 3]).unwrap());
        assert!(check_invariant_subsequence(&t(&[&[1, 2, 3]]), &[1, 2, 3]).unwrap());
        assert!(!check_invariant_subsequence(&t(&[&[1, 2], &[3, 4]]), &[3, 4, 1, 2]).unwrap());
        assert!(check_invariant_subsequence(&t(&[&[1, 2], &[3, 4]]), &[3, 3]).is_err());
        assert!(check_invariant_subsequence(&t(&[&[1, 2], &[3, 4]]), &[5]).is_err());
    }

    #[test]
    fn family_examples() {
        let k3 = section5_families(3).unwrap();
        assert_eq!(k3[0].tableau, t(&[&[1, 2, 3], &[4, 5, 6]]));
        assert_eq!(k3[0].invariant, vec![4, 5, 2, 3]);
        assert_eq!(k3[1].tableau, t(&[&[1, 2, 3, 4], &[5, 6, 7]]));
        assert_eq!(k3[1].invariant, vec![5, 6, 3, 4]);
        assert_eq!(k3[2].tableau, t(&[&[1, 2, 3, 7], &[4, 5, 6]]));
        assert_eq!(k3[3].tableau, t(&[&[1, 2, 3], &[4, 5, 6], &[7]]));
        assert_eq!(k3[4].tableau, t(&[&[1, 2], &[3, 4], &[5, 6]]));
        assert_eq!(k3[4].invariant, vec![5, 3, 4, 2]);
        assert_eq!(k3[5].tableau, t(&[&[1, 2], &[3, 4], &[5, 6], &[7]]));
        let k4 = section5_families(4).unwrap();
        assert_eq!(k4.len(), 4);
        assert_eq!(k4[0].tableau, t(&[&[1, 2, 3, 4], &[5, 6, 7, 8]]));
        assert_eq!(k4[0].invariant, vec![5, 6, 3, 4]);
        assert_eq!(section5_families(2), Err(Error::FamilyParameter(2)));
    }

    #[test]
    fn sufficient_predicate_examples() {
        assert!(sufficient_nonsmooth_predicate(&t(&[&[1, 2, 3], &[4, 5, 6]])));
        assert!(!sufficient_nonsmooth_predicate(&t(&[&[1, 3], &[2, 4]])));
        assert!(!sufficient_nonsmooth_predicate(&t(&[&[1, 2, 3, 4], &[5, 6]])));
        assert!(!sufficient_nonsmooth_predicate(&t(&[&[1, 2, 3]])));
    }

    #[test]
    fn prop6_examples() {
        assert!(prop6_has_smooth(&t(&[&[1, 4], &[2, 5], &[3]])).unwrap());
        assert!(prop6_has_smooth(&t(&[&[1, 3], &[2, 4], &[5], &[6]])).unwrap());
        assert!(!prop6_has_smooth(&t(&[&[1, 3], &[2, 5], &[4], &[6]])).unwrap());
        assert_eq!(prop6_has_smooth(&t(&[&[1, 2, 3]])), Err(Error::NotTwoColumn(3)));
        let w = t(&[&[1, 4], &[2, 5], &[3]]).column_word();
        assert_eq!(w, p(&[3, 2, 1, 5, 4]));
        assert!(is_smooth(&w));
    }

    #[test]
    fn mixed_family_members() {
        // First row (1,2), second column (2,c), first column (1,3,...,a), a > c.
        assert!(two_column_mixed_family(&t(&[&[1, 2], &[3, 4], &[5]])));
        assert!(!two_column_mixed_family(&t(&[&[1, 2], &[3, 5], &[4]])));
        assert!(!two_column_mixed_family(&t(&[&[1, 2], &[3, 4], &[5, 6]])));
        assert!(!two_column_mixed_family(&t(&[&[1, 3], &[2, 4], &[5]])));
        let r = classify_cell(&t(&[&[1, 2], &[3, 4], &[5]]));
        assert_eq!(r.classification, CellClassification::Mixed);
    }

    #[test]
    fn in_order_helper() {
        let w = p(&[3, 1, 4, 2]);
        assert!(occurs_in_order(&w, &[3, 4, 2]));
        assert!(!occurs_in_order(&w, &[4, 3]));
        assert!(all_permutations(4).unwrap().all(|w| occurs_in_order(&w, &[1])));
    }
}
