//! C ABI over `klcells`.
//!
//! Objects are opaque heap handles released with the matching `*_free`.
//! Every fallible call returns a [`KlStatus`]; on failure a message is
//! available from [`kl_last_error_message`] on the same thread. Strings are
//! copied into caller buffers: pass `cap = 0` to learn the size (including
//! the terminating NUL) through `needed`.

use std::cell::RefCell;
use std::ffi::{c_char, CStr, CString};
use std::panic::{catch_unwind, AssertUnwindSafe};
use std::ptr;

use klcells::cells::{
    classify_cell, survey, CellClassification, CellReport, SurveyOptions, SurveyResult, DEFAULT_MAX_N,
};
use klcells::report::survey_to_json;
use klcells::smoothness::is_smooth;
use klcells::{rs_insert, Permutation, StandardTableau};

pub const KL_ABI_VERSION: u32 = 1;

pub struct KlPermutation(Permutation);
pub struct KlTableau(StandardTableau);
pub struct KlSurvey(SurveyResult);

#[repr(C)]
#[derive(Clone, Copy, Debug, PartialEq, Eq)]
pub enum KlStatus {
    Ok = 0,
    NullPointer = 1,
    InvalidUtf8 = 2,
    InvalidPermutation = 3,
    InvalidTableau = 4,
    OutOfRange = 5,
    BufferTooSmall = 6,
    Internal = 7,
}

#[repr(C)]
#[derive(Clone, Copy, Debug, PartialEq, Eq)]
pub enum KlClassification {
    AllSmooth = 0,
    AllNonsmooth = 1,
    Mixed = 2,
}

/// Counts for one cell. The tableau itself is reached through its handle.
#[repr(C)]
#[derive(Clone, Copy, Debug, PartialEq, Eq)]
pub struct KlCellReport {
    pub size: u64,
    pub smooth_count: u64,
    pub nonsmooth_count: u64,
    pub classification: KlClassification,
}

impl From<&CellReport> for KlCellReport {
    fn from(r: &CellReport) -> Self {
        let classification = match r.classification {
            CellClassification::AllSmooth => KlClassification::AllSmooth,
            CellClassification::AllNonsmooth => KlClassification::AllNonsmooth,
            CellClassification::Mixed => KlClassification::Mixed,
        };
        KlCellReport { size: r.size, smooth_count: r.smooth_count, nonsmooth_count: r.nonsmooth_count, classification }
    }
}

thread_local! {
    static LAST_ERROR: RefCell<Option<CString>> = const { RefCell::new(None) };
}

fn set_last_error(msg: &str) {
    let c = CString::new(msg.replace('\0', " ")).unwrap_or_default();
    LAST_ERROR.with(|e| *e.borrow_mut() = Some(c));
}

type Failure = (KlStatus, String);

fn guard(f: impl FnOnce() -> Result<(), Failure>) -> KlStatus {
    match catch_unwind(AssertUnwindSafe(f)) {
        Ok(Ok(())) => KlStatus::Ok,
        Ok(Err((status, msg))) => {
            set_last_error(&msg);
            status
        }
        Err(_) => {
            set_last_error("internal panic");
            KlStatus::Internal
        }
    }
}

fn null(what: &str) -> Failure {
    (KlStatus::NullPointer, format!("{what} is null"))
}

unsafe fn deref<'a, T>(p: *const T, what: &str) -> Result<&'a T, Failure> {
    p.as_ref().ok_or_else(|| null(what))
}

unsafe fn read_str<'a>(p: *const c_char) -> Result<&'a str, Failure> {
    if p.is_null() {
        return Err(null("text"));
    }
    CStr::from_ptr(p).to_str().map_err(|e| (KlStatus::InvalidUtf8, e.to_string()))
}

unsafe fn put<T>(out: *mut T, value: T) -> Result<(), Failure> {
    if out.is_null() {
        return Err(null("out"));
    }
    out.write(value);
    Ok(())
}

unsafe fn put_handle<T>(out: *mut *mut T, value: T) -> Result<(), Failure> {
    if out.is_null() {
        return Err(null("out"));
    }
    out.write(Box::into_raw(Box::new(value)));
    Ok(())
}

/// Copies `s` plus a NUL into `buf` when it fits; always reports the size.
unsafe fn copy_string(s: &str, buf: *mut c_char, cap: usize, needed: *mut usize) -> Result<(), Failure> {
    let len = s.len() + 1;
    if !needed.is_null() {
        needed.write(len);
    }
    if cap < len {
        return Err((KlStatus::BufferTooSmall, format!("buffer holds {cap} bytes, {len} needed")));
    }
    if buf.is_null() {
        return Err(null("buf"));
    }
    ptr::copy_nonoverlapping(s.as_ptr().cast::<c_char>(), buf, s.len());
    buf.add(s.len()).write(0);
    Ok(())
}

#[no_mangle]
pub extern "C" fn kl_abi_version() -> u32 {
    KL_ABI_VERSION
}

/// Message for the last failed call on this thread, or NULL. Valid until the
/// next failing call on the same thread.
#[no_mangle]
pub extern "C" fn kl_last_error_message() -> *const c_char {
    LAST_ERROR.with(|e| e.borrow().as_ref().map_or(ptr::null(), |c| c.as_ptr()))
}

/// Parses a comma-separated one-line permutation such as `"3,1,2"`.
///
/// # Safety
/// `text` must be NUL-terminated; `out` must be writable.
#[no_mangle]
pub unsafe extern "C" fn kl_permutation_parse(text: *const c_char, out: *mut *mut KlPermutation) -> KlStatus {
    guard(|| {
        let w = read_str(text)?.parse::<Permutation>().map_err(|e| (KlStatus::InvalidPermutation, e.to_string()))?;
        put_handle(out, KlPermutation(w))
    })
}

/// # Safety
/// `values` must point to `len` readable values; `out` must be writable.
#[no_mangle]
pub unsafe extern "C" fn kl_permutation_from_values(
    values: *const u32,
    len: usize,
    out: *mut *mut KlPermutation,
) -> KlStatus {
    guard(|| {
        if values.is_null() {
            return Err(null("values"));
        }
        let v = std::slice::from_raw_parts(values, len).to_vec();
        let w = Permutation::new(v).map_err(|e| (KlStatus::InvalidPermutation, e.to_string()))?;
        put_handle(out, KlPermutation(w))
    })
}

/// # Safety
/// `p` must be NULL or a handle from this library that has not been freed.
#[no_mangle]
pub unsafe extern "C" fn kl_permutation_free(p: *mut KlPermutation) {
    if !p.is_null() {
        drop(Box::from_raw(p));
    }
}

/// Length of the permutation, 0 for NULL.
///
/// # Safety
/// `p` must be NULL or a live handle.
#[no_mangle]
pub unsafe extern "C" fn kl_permutation_len(p: *const KlPermutation) -> usize {
    p.as_ref().map_or(0, |p| p.0.len())
}

/// Copies the one-line values into `buf`; `needed` receives the length.
///
/// # Safety
/// `p` must be a live handle; `buf` must hold `cap` values; `needed` may be NULL.
#[no_mangle]
pub unsafe extern "C" fn kl_permutation_values(
    p: *const KlPermutation,
    buf: *mut u32,
    cap: usize,
    needed: *mut usize,
) -> KlStatus {
    guard(|| {
        let w = &deref(p, "permutation")?.0;
        if !needed.is_null() {
            needed.write(w.len());
        }
        if cap < w.len() {
            return Err((KlStatus::BufferTooSmall, format!("buffer holds {cap} values, {} needed", w.len())));
        }
        if buf.is_null() {
            return Err(null("buf"));
        }
        ptr::copy_nonoverlapping(w.as_slice().as_ptr(), buf, w.len());
        Ok(())
    })
}

/// # Safety
/// `p` must be a live handle; `out` must be writable.
#[no_mangle]
pub unsafe extern "C" fn kl_permutation_is_smooth(p: *const KlPermutation, out: *mut bool) -> KlStatus {
    guard(|| put(out, is_smooth(&deref(p, "permutation")?.0)))
}

/// Insertion tableau of `p`.
///
/// # Safety
/// `p` must be a live handle; `out` must be writable.
#[no_mangle]
pub unsafe extern "C" fn kl_rs_insert(p: *const KlPermutation, out: *mut *mut KlTableau) -> KlStatus {
    guard(|| put_handle(out, KlTableau(rs_insert(&deref(p, "permutation")?.0))))
}

/// Parses rows joined by `|`, entries by `,`, e.g. `"1,3,5|2,4"`.
///
/// # Safety
/// `text` must be NUL-terminated; `out` must be writable.
#[no_mangle]
pub unsafe extern "C" fn kl_tableau_parse(text: *const c_char, out: *mut *mut KlTableau) -> KlStatus {
    guard(|| {
        let t = read_str(text)?.parse::<StandardTableau>().map_err(|e| (KlStatus::InvalidTableau, e.to_string()))?;
        put_handle(out, KlTableau(t))
    })
}

/// # Safety
/// `t` must be NULL or a handle from this library that has not been freed.
#[no_mangle]
pub unsafe extern "C" fn kl_tableau_free(t: *mut KlTableau) {
    if !t.is_null() {
        drop(Box::from_raw(t));
    }
}

/// # Safety
/// `t` must be a live handle; `buf` must hold `cap` bytes; `needed` may be NULL.
#[no_mangle]
pub unsafe extern "C" fn kl_tableau_to_string(
    t: *const KlTableau,
    buf: *mut c_char,
    cap: usize,
    needed: *mut usize,
) -> KlStatus {
    guard(|| copy_string(&deref(t, "tableau")?.0.to_string(), buf, cap, needed))
}

/// Classifies the cell whose insertion tableau is `t`.
///
/// # Safety
/// `t` must be a live handle; `out` must be writable.
#[no_mangle]
pub unsafe extern "C" fn kl_tableau_classify(t: *const KlTableau, out: *mut KlCellReport) -> KlStatus {
    guard(|| put(out, KlCellReport::from(&classify_cell(&deref(t, "tableau")?.0))))
}

/// Surveys every cell of S_n, 1 <= n <= 10, on `jobs` threads.
///
/// # Safety
/// `out` must be writable.
#[no_mangle]
pub unsafe extern "C" fn kl_survey_run(n: usize, jobs: usize, out: *mut *mut KlSurvey) -> KlStatus {
    guard(|| {
        let s = survey(n, SurveyOptions { jobs, max_n: DEFAULT_MAX_N })
            .map_err(|e| (KlStatus::OutOfRange, e.to_string()))?;
        put_handle(out, KlSurvey(s))
    })
}

/// # Safety
/// `s` must be NULL or a handle from this library that has not been freed.
#[no_mangle]
pub unsafe extern "C" fn kl_survey_free(s: *mut KlSurvey) {
    if !s.is_null() {
        drop(Box::from_raw(s));
    }
}

/// Number of cells, 0 for NULL.
///
/// # Safety
/// `s` must be NULL or a live handle.
#[no_mangle]
pub unsafe extern "C" fn kl_survey_cell_count(s: *const KlSurvey) -> usize {
    s.as_ref().map_or(0, |s| s.0.cells.len())
}

unsafe fn cell<'a>(s: *const KlSurvey, index: usize) -> Result<&'a CellReport, Failure> {
    let cells = &deref(s, "survey")?.0.cells;
    cells.get(index).ok_or_else(|| (KlStatus::OutOfRange, format!("cell {index} of {}", cells.len())))
}

/// # Safety
/// `s` must be a live handle; `out` must be writable.
#[no_mangle]
pub unsafe extern "C" fn kl_survey_cell(s: *const KlSurvey, index: usize, out: *mut KlCellReport) -> KlStatus {
    guard(|| put(out, KlCellReport::from(cell(s, index)?)))
}

/// A new handle for the insertion tableau of cell `index`.
///
/// # Safety
/// `s` must be a live handle; `out` must be writable.
#[no_mangle]
pub unsafe extern "C" fn kl_survey_cell_tableau(
    s: *const KlSurvey,
    index: usize,
    out: *mut *mut KlTableau,
) -> KlStatus {
    guard(|| put_handle(out, KlTableau(cell(s, index)?.tableau.clone())))
}

/// # Safety
/// `s` must be a live handle; `buf` must hold `cap` bytes; `needed` may be NULL.
#[no_mangle]
pub unsafe extern "C" fn kl_survey_to_json(
    s: *const KlSurvey,
    buf: *mut c_char,
    cap: usize,
    needed: *mut usize,
) -> KlStatus {
    guard(|| copy_string(&survey_to_json(&deref(s, "survey")?.0), buf, cap, needed))
}
