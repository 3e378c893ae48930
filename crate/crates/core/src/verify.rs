//! Brute-force verification of the classification statements.
//!
//! Each check returns a [`VerificationOutcome`]; a failing outcome always
//! carries a counterexample.

use std::collections::{BTreeSet, HashMap};
use std::fmt;
use std::time::{Duration, Instant};

use rand::seq::SliceRandom;
use rand::SeedableRng;
use rand_chacha::ChaCha8Rng;
use serde::Serialize;

use crate::cells::{
    classify_cell, prop6_has_smooth, section5_families, sufficient_nonsmooth_predicate, theorem_main_predicate,
    two_column_mixed_family, two_column_mixed_shape, CellClassification, SurveyResult,
};
use crate::error::Result;
use crate::knuth::{adjacent_values_keep_order, knuth_class, knuth_equivalent, knuth_neighbors};
use crate::perm::{all_permutations, factorial, Permutation};
use crate::smoothness::{
    contains_pattern, is_smooth, is_smooth_oracle, order_isomorphic, smooth_involutions, ForbiddenPattern,
};
use crate::tableau::{rs_insert, StandardTableau};

#[derive(Clone, Copy, Debug, PartialEq, Eq, Serialize)]
pub enum Status {
    #[serde(rename = "PASS")]
    Pass,
    #[serde(rename = "FAIL")]
    Fail,
}

impl fmt::Display for Status {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.write_str(match self {
            Status::Pass => "PASS",
            Status::Fail => "FAIL",
        })
    }
}

#[derive(Clone, Debug, PartialEq, Eq, Serialize)]
pub struct Counterexample {
    pub tableau: Option<StandardTableau>,
    pub permutation: Option<Permutation>,
    pub detail: String,
}

impl Counterexample {
    pub fn tableau(t: &StandardTableau, detail: impl Into<String>) -> Self {
        Counterexample { tableau: Some(t.clone()), permutation: None, detail: detail.into() }
    }

    pub fn permutation(w: &Permutation, detail: impl Into<String>) -> Self {
        Counterexample { tableau: None, permutation: Some(w.clone()), detail: detail.into() }
    }
}

#[derive(Clone, Debug, Serialize)]
pub struct VerificationOutcome {
    pub check: String,
    pub parameters: String,
    pub status: Status,
    /// Number of objects (cells, permutations, tableaux) examined.
    pub checked: u64,
    pub counterexample: Option<Counterexample>,
    pub notes: Vec<String>,
    #[serde(skip)]
    pub elapsed: Duration,
}

impl VerificationOutcome {
    pub fn passed(&self) -> bool {
        self.status == Status::Pass
    }
}

impl fmt::Display for VerificationOutcome {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        writeln!(
            f,
            "{} {}: {} (checked {}, {:.3}s)",
            self.check,
            self.parameters,
            self.status,
            self.checked,
            self.elapsed.as_secs_f64()
        )?;
        for note in &self.notes {
            writeln!(f, "  {note}")?;
        }
        if let Some(cx) = &self.counterexample {
            write!(f, "  counterexample:")?;
            if let Some(t) = &cx.tableau {
                write!(f, " tableau {t}")?;
            }
            if let Some(w) = &cx.permutation {
                write!(f, " permutation {w}")?;
            }
            writeln!(f, " -- {}", cx.detail)?;
        }
        Ok(())
    }
}

/// Accumulates a check; the first recorded counterexample wins.
struct Run {
    check: &'static str,
    parameters: String,
    started: Instant,
    checked: u64,
    counterexample: Option<Counterexample>,
    notes: Vec<String>,
}

impl Run {
    fn new(check: &'static str, parameters: String) -> Self {
        Run { check, parameters, started: Instant::now(), checked: 0, counterexample: None, notes: Vec::new() }
    }

    fn fail(&mut self, cx: Counterexample) {
        if self.counterexample.is_none() {
            self.counterexample = Some(cx);
        }
    }

    fn note(&mut self, note: impl Into<String>) {
        self.notes.push(note.into());
    }

    fn finish(self) -> VerificationOutcome {
        VerificationOutcome {
            check: self.check.to_string(),
            parameters: self.parameters,
            status: if self.counterexample.is_some() { Status::Fail } else { Status::Pass },
            checked: self.checked,
            counterexample: self.counterexample,
            notes: self.notes,
            elapsed: self.started.elapsed(),
        }
    }
}

/// Number of involutions in `S_n`: `I(n) = I(n-1) + (n-1) I(n-2)`.
pub fn involution_count(n: usize) -> u64 {
    let (mut prev, mut cur) = (1u64, 1u64);
    for m in 2..=n as u64 {
        (prev, cur) = (cur, cur + (m - 1) * prev);
    }
    cur
}

/// All-smooth cell count implied by the main classification for `n >= 4`:
/// one per consecutive first-column set of each hook, plus the `n - 3`
/// tableaux of shape `(n-2, 2)` with second row `(2, k)`.
pub fn theorem_main_expected_count(n: usize) -> u64 {
    let n = n as u64;
    1 + n * (n - 1) / 2 + n.saturating_sub(3)
}

/// Census invariants: cell count, total size, hook-length sizes, totals and
/// per-cell bookkeeping.
pub fn verify_census(survey: &SurveyResult) -> VerificationOutcome {
    let n = survey.n;
    let mut run = Run::new("census", format!("n={n}"));
    let mut totals = crate::cells::SurveyTotals::default();
    let mut seen = BTreeSet::new();
    for c in &survey.cells {
        run.checked += 1;
        totals.cells += 1;
        totals.permutations += c.size;
        match c.classification {
            CellClassification::AllSmooth => totals.all_smooth += 1,
            CellClassification::AllNonsmooth => totals.all_nonsmooth += 1,
            CellClassification::Mixed => totals.mixed += 1,
        }
        if !seen.insert(c.tableau.clone()) {
            run.fail(Counterexample::tableau(&c.tableau, "tableau listed twice"));
        }
        if c.tableau.size() != n || c.shape != c.tableau.shape() {
            run.fail(Counterexample::tableau(&c.tableau, "tableau does not match n or recorded shape"));
        }
        if c.size as u128 != c.shape.syt_count() {
            run.fail(Counterexample::tableau(
                &c.tableau,
                format!("cell size {} but hook length count {}", c.size, c.shape.syt_count()),
            ));
        }
        if c.size != c.smooth_count + c.nonsmooth_count
            || c.classification != CellClassification::from_counts(c.size, c.smooth_count)
        {
            run.fail(Counterexample::tableau(&c.tableau, "counts and classification disagree"));
        }
        let sample_ok = |s: &Option<Permutation>, smooth: bool, count: u64| match s {
            Some(w) => count > 0 && is_smooth(w) == smooth && rs_insert(w) == c.tableau,
            None => count == 0,
        };
        if !sample_ok(&c.sample_smooth, true, c.smooth_count)
            || !sample_ok(&c.sample_nonsmooth, false, c.nonsmooth_count)
        {
            run.fail(Counterexample::tableau(&c.tableau, "sample is not a member with the stated smoothness"));
        }
    }
    let expected_cells = involution_count(n);
    if totals.cells != expected_cells {
        run.fail(Counterexample {
            tableau: None,
            permutation: None,
            detail: format!("{} cells, expected involution count {expected_cells}", totals.cells),
        });
    }
    if totals.permutations != factorial(n) {
        run.fail(Counterexample {
            tableau: None,
            permutation: None,
            detail: format!("cell sizes sum to {}, expected {}", totals.permutations, factorial(n)),
        });
    }
    if totals != survey.totals {
        run.fail(Counterexample { tableau: None, permutation: None, detail: "totals inconsistent with cells".into() });
    }
    run.note(format!("cells={} permutations={}", totals.cells, totals.permutations));
    run.finish()
}

/// A cell is all-smooth exactly when [`theorem_main_predicate`] holds.
pub fn verify_theorem_main(survey: &SurveyResult) -> VerificationOutcome {
    let mut run = Run::new("theorem-main", format!("n={}", survey.n));
    let mut all_smooth = 0u64;
    let mut predicted = 0u64;
    let mut missed = 0u64;
    let mut spurious = 0u64;
    for c in &survey.cells {
        run.checked += 1;
        let is_all_smooth = c.classification == CellClassification::AllSmooth;
        let predicate = theorem_main_predicate(&c.tableau);
        all_smooth += is_all_smooth as u64;
        predicted += predicate as u64;
        if is_all_smooth && !predicate {
            missed += 1;
            run.fail(Counterexample::tableau(&c.tableau, "cell is ALL_SMOOTH but predicate is false"));
        }
        if predicate && !is_all_smooth {
            spurious += 1;
            let witness = c.sample_nonsmooth.as_ref().map(|w| format!(" (non-smooth member {w})")).unwrap_or_default();
            run.fail(Counterexample {
                tableau: Some(c.tableau.clone()),
                permutation: c.sample_nonsmooth.clone(),
                detail: format!("predicate is true but cell is {}{witness}", c.classification),
            });
        }
    }
    run.note(format!("all-smooth cells={all_smooth} predicate-true tableaux={predicted}"));
    run.note(format!("all-smooth cells outside predicate={missed} predicate tableaux not all-smooth={spurious}"));
    run.finish()
}

/// Smooth involutions are exactly the blockwise reversals `sigma_c`.
pub fn verify_hohlweg(n: usize) -> Result<VerificationOutcome> {
    let mut run = Run::new("hohlweg", format!("n={n}"));
    let by_composition = smooth_involutions(n)?;
    let mut by_filter = BTreeSet::new();
    for w in all_permutations(n)? {
        if w.is_involution() {
            run.checked += 1;
            if is_smooth(&w) {
                by_filter.insert(w);
            }
        }
    }
    if let Some(w) = by_composition.symmetric_difference(&by_filter).next() {
        let detail = if by_filter.contains(w) {
            "smooth involution that is not a blockwise reversal"
        } else {
            "blockwise reversal missing from smooth involutions"
        };
        run.fail(Counterexample::permutation(w, detail));
    }
    let expected = 1u64 << (n - 1);
    if by_composition.len() as u64 != expected {
        run.fail(Counterexample {
            tableau: None,
            permutation: None,
            detail: format!("{} distinct blockwise reversals, expected {expected}", by_composition.len()),
        });
    }
    run.note(format!("smooth involutions={}", by_filter.len()));
    Ok(run.finish())
}

/// `w` and `w^-1` are smooth together.
pub fn verify_inverse_smooth(n: usize) -> Result<VerificationOutcome> {
    let mut run = Run::new("inverse-smooth", format!("n={n}"));
    for w in all_permutations(n)? {
        run.checked += 1;
        if is_smooth(&w) != is_smooth(&w.inverse()) {
            run.fail(Counterexample::permutation(&w, "smoothness differs from its inverse"));
            break;
        }
    }
    Ok(run.finish())
}

/// Every Knuth class equals an insertion-tableau fiber of `S_n`.
pub fn verify_knuth_vs_rsk(n: usize) -> Result<VerificationOutcome> {
    let mut run = Run::new("knuth-vs-rsk", format!("n={n}"));
    let mut fibers: HashMap<StandardTableau, BTreeSet<Permutation>> = HashMap::new();
    for w in all_permutations(n)? {
        fibers.entry(rs_insert(&w)).or_default().insert(w);
    }
    let mut keys: Vec<&StandardTableau> = fibers.keys().collect();
    keys.sort();
    for tab in keys {
        let fiber = &fibers[tab];
        run.checked += 1;
        let class = knuth_class(fiber.first().expect("fibers are nonempty"));
        if &class != fiber {
            run.fail(Counterexample::tableau(
                tab,
                format!("Knuth class has {} members, fiber has {}", class.len(), fiber.len()),
            ));
            break;
        }
        if class.len() as u128 != tab.shape().syt_count() {
            run.fail(Counterexample::tableau(tab, "class size differs from hook length count"));
            break;
        }
    }
    if run.checked != involution_count(n) {
        run.fail(Counterexample {
            tableau: None,
            permutation: None,
            detail: format!("{} fibers, expected {}", run.checked, involution_count(n)),
        });
    }
    Ok(run.finish())
}

/// Knuth moves never change the relative order of `i` and `i + 1`.
pub fn verify_adjacent_order(n: usize) -> Result<VerificationOutcome> {
    let mut run = Run::new("adjacent-order", format!("n={n}"));
    'outer: for w in all_permutations(n)? {
        for v in knuth_neighbors(&w) {
            run.checked += 1;
            if !adjacent_values_keep_order(&w, &v) {
                run.fail(Counterexample::permutation(&w, format!("neighbor {v} reorders some i, i+1")));
                break 'outer;
            }
        }
    }
    run.note(format!("Knuth moves examined={}", run.checked));
    Ok(run.finish())
}

/// Fast and exhaustive smoothness tests agree on all of `S_n` and on
/// `samples` seeded random permutations of length `sample_n`.
pub fn verify_oracle_equivalence(n: usize, samples: u64, sample_n: usize, seed: u64) -> Result<VerificationOutcome> {
    let mut run = Run::new("oracle-equivalence", format!("n={n} samples={samples} sample-n={sample_n} seed={seed}"));
    for w in all_permutations(n)? {
        run.checked += 1;
        if is_smooth(&w) != is_smooth_oracle(&w) {
            run.fail(Counterexample::permutation(&w, "fast and exhaustive smoothness disagree"));
            break;
        }
    }
    if samples > 0 {
        let mut rng = ChaCha8Rng::seed_from_u64(seed);
        let mut word: Vec<u32> = (1..=sample_n as u32).collect();
        let mut smooth_seen = 0u64;
        for _ in 0..samples {
            word.shuffle(&mut rng);
            let w = Permutation::new(word.clone())?;
            run.checked += 1;
            let fast = is_smooth(&w);
            smooth_seen += fast as u64;
            if fast != is_smooth_oracle(&w) {
                run.fail(Counterexample::permutation(&w, "fast and exhaustive smoothness disagree on sample"));
                break;
            }
        }
        run.note(format!("smooth samples={smooth_seen}/{samples}"));
    }
    Ok(run.finish())
}

/// The invariant-subsequence families for each `k` in `ks`, the sufficient
/// non-smoothness condition over every cell of `survey`, and the
/// counterexample cell showing that not every all-non-smooth cell has such
/// an invariant.
pub fn verify_section5(survey: &SurveyResult, ks: &[usize]) -> Result<VerificationOutcome> {
    let ks_text: Vec<String> = ks.iter().map(usize::to_string).collect();
    let mut run = Run::new("section5", format!("n={} k={}", survey.n, ks_text.join(",")));
    for &k in ks {
        for fam in section5_families(k)? {
            run.checked += 1;
            let report = classify_cell(&fam.tableau);
            if report.classification != CellClassification::AllNonsmooth {
                run.fail(Counterexample {
                    tableau: Some(fam.tableau.clone()),
                    permutation: report.sample_smooth.clone(),
                    detail: format!("family {} (k={k}) classifies {}", fam.name, report.classification),
                });
            }
            if !crate::cells::check_invariant_subsequence(&fam.tableau, &fam.invariant)? {
                run.fail(Counterexample::tableau(
                    &fam.tableau,
                    format!("family {} (k={k}): invariant {:?} missing from some member", fam.name, fam.invariant),
                ));
            }
            if !order_isomorphic(&fam.invariant, &fam.pattern.word()) {
                run.fail(Counterexample::tableau(
                    &fam.tableau,
                    format!("family {} (k={k}): invariant is not a {} occurrence", fam.name, fam.pattern),
                ));
            }
        }
    }
    let (mut two_row, mut more_rows) = (0u64, 0u64);
    for c in &survey.cells {
        if sufficient_nonsmooth_predicate(&c.tableau) {
            run.checked += 1;
            if c.tableau.num_rows() == 2 {
                two_row += 1;
            } else {
                more_rows += 1;
            }
            if c.classification != CellClassification::AllNonsmooth {
                run.fail(Counterexample {
                    tableau: Some(c.tableau.clone()),
                    permutation: c.sample_smooth.clone(),
                    detail: format!("sufficient condition holds but cell is {}", c.classification),
                });
            }
        }
    }
    run.note(format!("sufficient-condition cells: two-row={two_row} more-rows={more_rows}"));
    let remark = verify_remark();
    run.checked += remark.checked;
    if let Some(cx) = remark.counterexample {
        run.fail(cx);
    }
    run.notes.extend(remark.notes);
    Ok(run.finish())
}

/// The cell of `(6,7,3,4,1,2,5)`: entirely non-smooth, yet some member avoids
/// 3412, and two of its members share no 4231 occurrence value set.
pub fn verify_remark() -> VerificationOutcome {
    let mut run = Run::new("remark", "w=6,7,3,4,1,2,5".to_string());
    let w = Permutation::new(vec![6, 7, 3, 4, 1, 2, 5]).expect("valid");
    let v = Permutation::new(vec![3, 6, 4, 7, 1, 5, 2]).expect("valid");
    let tab = rs_insert(&w);
    let report = classify_cell(&tab);
    run.checked += report.size;
    if report.classification != CellClassification::AllNonsmooth {
        run.fail(Counterexample::tableau(&tab, format!("cell is {}", report.classification)));
    }
    let p3412 = ForbiddenPattern::P3412.permutation();
    let avoiding =
        crate::cells::cell_elements(&tab).into_iter().find(|m| !contains_pattern(m, &p3412).expect("length 7 >= 4"));
    match &avoiding {
        Some(m) => run.note(format!("member avoiding 3412: {m}")),
        None => run.fail(Counterexample::tableau(&tab, "every member contains 3412")),
    }
    if !knuth_equivalent(&w, &v).expect("same length") {
        run.fail(Counterexample::permutation(&v, "not Knuth-equivalent to 6,7,3,4,1,2,5"));
    }
    let common: BTreeSet<_> = occurrence_value_sets(&w, ForbiddenPattern::P4231)
        .intersection(&occurrence_value_sets(&v, ForbiddenPattern::P4231))
        .cloned()
        .collect();
    if !common.is_empty() {
        run.fail(Counterexample::permutation(&v, format!("shares 4231 value sets {common:?}")));
    }
    run.finish()
}

/// Value sets of all occurrences of `pattern` in `w`.
pub fn occurrence_value_sets(w: &Permutation, pattern: ForbiddenPattern) -> BTreeSet<Vec<u32>> {
    use itertools::Itertools;
    w.as_slice()
        .iter()
        .copied()
        .combinations(4)
        .filter(|sub| order_isomorphic(sub, &pattern.word()))
        .map(|mut sub| {
            sub.sort_unstable();
            sub
        })
        .collect()
}

/// Two-column statements over every cell of `survey`: the sufficient
/// condition for a smooth member, and the mixed family.
pub fn verify_section6(survey: &SurveyResult) -> VerificationOutcome {
    let mut run = Run::new("section6", format!("n={}", survey.n));
    let (mut sufficient, mut family, mut hypothesis_idle) = (0u64, 0u64, 0u64);
    for c in &survey.cells {
        if c.tableau.num_columns() != 2 {
            continue;
        }
        run.checked += 1;
        if prop6_has_smooth(&c.tableau).expect("two-column") {
            sufficient += 1;
            if c.smooth_count == 0 {
                run.fail(Counterexample::tableau(&c.tableau, "condition holds but cell has no smooth member"));
            }
        }
        if let Some((first, cut)) = two_column_mixed_shape(&c.tableau) {
            // 3 sits in the first column and 3 < c, so the "entry below c"
            // hypothesis should never be what excludes a tableau.
            if !first.iter().any(|&e| e > 1 && e < cut) {
                hypothesis_idle += 1;
            }
        }
        if two_column_mixed_family(&c.tableau) {
            family += 1;
            if c.classification != CellClassification::Mixed {
                run.fail(Counterexample::tableau(&c.tableau, format!("family member classifies {}", c.classification)));
            }
        }
    }
    run.note(format!("two-column cells with sufficient condition={sufficient} mixed-family cells={family}"));
    run.note(format!("family shapes where the entry-below-c hypothesis is not implied={hypothesis_idle}"));
    run.finish()
}
