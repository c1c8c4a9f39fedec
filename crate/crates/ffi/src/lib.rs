//! C interface to the `bipancyclic` library.
//!
//! Graphs are passed as opaque `BbgGraph` handles created by the
//! `bbg_graph_*` constructors and released with `bbg_graph_free`. Every
//! fallible call returns a `BbgStatus`; on failure `bbg_last_error_message`
//! describes the error. Strings returned by the library are released with
//! `bbg_string_free`.

use std::cell::RefCell;
use std::ffi::{c_char, CStr, CString};
use std::panic::{catch_unwind, AssertUnwindSafe};

use bipancyclic::adversary::{fan_construction, quadrilateral_breaker};
use bipancyclic::cycles::{even_cycle_spectrum, standard_hamilton};
use bipancyclic::shortcuts::count_shortcuts;
use bipancyclic::{BalancedBipartiteGraph, Error, RandomModel, SpectrumMode, Verdict};

/// Opaque graph handle.
pub struct BbgGraph(BalancedBipartiteGraph);

#[repr(C)]
#[derive(Clone, Copy, Debug, PartialEq, Eq)]
pub enum BbgStatus {
    Ok = 0,
    NullPointer = 1,
    InvalidArgument = 2,
    Parse = 3,
    Hypothesis = 4,
    Internal = 5,
    Io = 6,
}

#[repr(C)]
#[derive(Clone, Copy, Debug, PartialEq, Eq)]
pub enum BbgSpectrumMode {
    Exhaustive = 0,
    /// Uses the standard Hamilton cycle `0, 1, ..., 2n-1`, which must be present.
    Certificate = 1,
}

#[repr(C)]
#[derive(Clone, Copy, Debug, PartialEq, Eq)]
pub enum BbgVerdict {
    Yes = 0,
    No = 1,
    Unknown = 2,
}

thread_local! {
    static LAST_ERROR: RefCell<CString> = RefCell::new(CString::default());
}

fn set_error(msg: &str) {
    let c = CString::new(msg.replace('\0', " ")).expect("no interior NUL");
    LAST_ERROR.with(|e| *e.borrow_mut() = c);
}

fn status_of(err: &Error) -> BbgStatus {
    match err {
        Error::Parse { .. } => BbgStatus::Parse,
        Error::Hypothesis(_) => BbgStatus::Hypothesis,
        Error::Internal(_) => BbgStatus::Internal,
        Error::Io(_) => BbgStatus::Io,
        _ => BbgStatus::InvalidArgument,
    }
}

/// Runs `f`, turning errors and panics into a status plus message.
fn guard<F>(f: F) -> BbgStatus
where
    F: FnOnce() -> Result<(), (BbgStatus, String)>,
{
    match catch_unwind(AssertUnwindSafe(f)) {
        Ok(Ok(())) => BbgStatus::Ok,
        Ok(Err((status, msg))) => {
            set_error(&msg);
            status
        }
        Err(_) => {
            set_error("panic inside the library");
            BbgStatus::Internal
        }
    }
}

fn lib<T>(r: bipancyclic::Result<T>) -> Result<T, (BbgStatus, String)> {
    r.map_err(|e| (status_of(&e), e.to_string()))
}

fn null(what: &str) -> (BbgStatus, String) {
    (BbgStatus::NullPointer, format!("{what} is null"))
}

unsafe fn graph_ref<'a>(g: *const BbgGraph) -> Result<&'a BalancedBipartiteGraph, (BbgStatus, String)> {
    g.as_ref().map(|g| &g.0).ok_or_else(|| null("graph"))
}

unsafe fn write_out<T>(out: *mut T, value: T) -> Result<(), (BbgStatus, String)> {
    if out.is_null() {
        return Err(null("output pointer"));
    }
    out.write(value);
    Ok(())
}

unsafe fn write_graph(out: *mut *mut BbgGraph, g: BalancedBipartiteGraph) -> Result<(), (BbgStatus, String)> {
    write_out(out, Box::into_raw(Box::new(BbgGraph(g))))
}

unsafe fn write_string(out: *mut *mut c_char, s: String) -> Result<(), (BbgStatus, String)> {
    let c = CString::new(s).map_err(|e| (BbgStatus::Internal, e.to_string()))?;
    write_out(out, c.into_raw())
}

/// Message for the last failed call on this thread; empty if none. Valid until
/// the next failing call on the same thread.
#[no_mangle]
pub extern "C" fn bbg_last_error_message() -> *const c_char {
    LAST_ERROR.with(|e| e.borrow().as_ptr())
}

/// Releases a string returned by this library. Null is ignored.
///
/// # Safety
/// `s` must come from this library and not have been freed.
#[no_mangle]
pub unsafe extern "C" fn bbg_string_free(s: *mut c_char) {
    if !s.is_null() {
        drop(CString::from_raw(s));
    }
}

/// Releases a graph. Null is ignored.
///
/// # Safety
/// `g` must come from this library and not have been freed.
#[no_mangle]
pub unsafe extern "C" fn bbg_graph_free(g: *mut BbgGraph) {
    if !g.is_null() {
        drop(Box::from_raw(g));
    }
}

/// `K_{n,n}`.
///
/// # Safety
/// `out` must be valid for writes.
#[no_mangle]
pub unsafe extern "C" fn bbg_graph_complete(n: usize, out: *mut *mut BbgGraph) -> BbgStatus {
    guard(|| write_graph(out, lib(bipancyclic::complete_bipartite(n))?))
}

/// Seeded sample of `G(n, n, p)`.
///
/// # Safety
/// `out` must be valid for writes.
#[no_mangle]
pub unsafe extern "C" fn bbg_graph_sample(n: usize, p: f64, seed: u64, out: *mut *mut BbgGraph) -> BbgStatus {
    guard(|| {
        let model = lib(RandomModel::new(n, p, seed))?;
        write_graph(out, bipancyclic::sample_random(&model))
    })
}

/// Parses the `bbg 1` text format.
///
/// # Safety
/// `text` must be a NUL-terminated string; `out` must be valid for writes.
#[no_mangle]
pub unsafe extern "C" fn bbg_graph_parse(text: *const c_char, out: *mut *mut BbgGraph) -> BbgStatus {
    guard(|| {
        if text.is_null() {
            return Err(null("text"));
        }
        let s = CStr::from_ptr(text)
            .to_str()
            .map_err(|e| (BbgStatus::Parse, format!("text is not UTF-8: {e}")))?;
        write_graph(out, lib(BalancedBipartiteGraph::from_bbg(s))?)
    })
}

/// Serializes to the `bbg 1` text format; free the result with `bbg_string_free`.
///
/// # Safety
/// `g` must be a live handle; `out` must be valid for writes.
#[no_mangle]
pub unsafe extern "C" fn bbg_graph_to_text(g: *const BbgGraph, out: *mut *mut c_char) -> BbgStatus {
    guard(|| write_string(out, graph_ref(g)?.to_bbg()))
}

/// Class size `n`, or 0 for a null handle.
///
/// # Safety
/// `g` must be null or a live handle.
#[no_mangle]
pub unsafe extern "C" fn bbg_graph_n(g: *const BbgGraph) -> usize {
    g.as_ref().map_or(0, |g| g.0.n())
}

/// Number of edges, or 0 for a null handle.
///
/// # Safety
/// `g` must be null or a live handle.
#[no_mangle]
pub unsafe extern "C" fn bbg_graph_edge_count(g: *const BbgGraph) -> usize {
    g.as_ref().map_or(0, |g| g.0.edge_count())
}

/// True if `{u, v}` is an edge.
///
/// # Safety
/// `g` must be null or a live handle.
#[no_mangle]
pub unsafe extern "C" fn bbg_graph_has_edge(g: *const BbgGraph, u: usize, v: usize) -> bool {
    g.as_ref().is_some_and(|g| g.0.has_edge(u, v))
}

/// Copy of `g` with the standard Hamilton cycle added.
///
/// # Safety
/// `g` must be a live handle; `out` must be valid for writes.
#[no_mangle]
pub unsafe extern "C" fn bbg_graph_with_standard_cycle(g: *const BbgGraph, out: *mut *mut BbgGraph) -> BbgStatus {
    guard(|| write_graph(out, lib(graph_ref(g)?.with_standard_cycle())?))
}

/// Number of 4-cycles.
///
/// # Safety
/// `g` must be a live handle; `out` must be valid for writes.
#[no_mangle]
pub unsafe extern "C" fn bbg_graph_c4_count(g: *const BbgGraph, out: *mut u64) -> BbgStatus {
    guard(|| write_out(out, graph_ref(g)?.four_cycle_count()))
}

/// Distance of `i` from 0 on a cycle of length `two_n`; 0 unless `two_n` is
/// even and at least 4.
#[no_mangle]
pub extern "C" fn bbg_circ_dist(i: i64, two_n: usize) -> usize {
    if two_n < 4 || two_n % 2 == 1 {
        return 0;
    }
    bipancyclic::circ_dist(i, two_n)
}

/// `2 exp(-eps^2 mean / 3)` for `0 < eps <= 3/2`, `mean > 0`.
///
/// # Safety
/// `out` must be valid for writes.
#[no_mangle]
pub unsafe extern "C" fn bbg_chernoff_tail_bound(eps: f64, mean: f64, out: *mut f64) -> BbgStatus {
    guard(|| write_out(out, lib(bipancyclic::chernoff_tail_bound(eps, mean))?))
}

fn spectrum(g: &BalancedBipartiteGraph, mode: BbgSpectrumMode) -> bipancyclic::Result<bipancyclic::SpectrumReport> {
    match mode {
        BbgSpectrumMode::Exhaustive => even_cycle_spectrum(g, None, SpectrumMode::Exhaustive),
        BbgSpectrumMode::Certificate => {
            let h = standard_hamilton(g.n())?;
            even_cycle_spectrum(g, Some(&h), SpectrumMode::CertificateSearch)
        }
    }
}

/// Even cycle spectrum as JSON; free the result with `bbg_string_free`.
///
/// # Safety
/// `g` must be a live handle; `out` must be valid for writes.
#[no_mangle]
pub unsafe extern "C" fn bbg_spectrum_json(g: *const BbgGraph, mode: BbgSpectrumMode, out: *mut *mut c_char) -> BbgStatus {
    guard(|| write_string(out, lib(spectrum(graph_ref(g)?, mode))?.to_json()))
}

/// Whether every even length from 4 to `2n` is certified.
///
/// # Safety
/// `g` must be a live handle; `out` must be valid for writes.
#[no_mangle]
pub unsafe extern "C" fn bbg_is_bipancyclic(g: *const BbgGraph, mode: BbgSpectrumMode, out: *mut BbgVerdict) -> BbgStatus {
    guard(|| {
        let verdict = match lib(spectrum(graph_ref(g)?, mode))?.verdict() {
            Verdict::Yes => BbgVerdict::Yes,
            Verdict::No { .. } => BbgVerdict::No,
            Verdict::Unknown { .. } => BbgVerdict::Unknown,
        };
        write_out(out, verdict)
    })
}

/// Number of `l`-shortcuts with respect to the standard Hamilton cycle.
///
/// # Safety
/// `g` must be a live handle; `out` must be valid for writes.
#[no_mangle]
pub unsafe extern "C" fn bbg_count_shortcuts(g: *const BbgGraph, l: usize, out: *mut u64) -> BbgStatus {
    guard(|| write_out(out, lib(count_shortcuts(graph_ref(g)?, l))?))
}

/// Fan construction; `deleted` (may be null) receives the number of deleted edges.
///
/// # Safety
/// `g` must be a live handle; `out` must be valid for writes; `deleted` null or valid.
#[no_mangle]
pub unsafe extern "C" fn bbg_fan_construction(g: *const BbgGraph, out: *mut *mut BbgGraph, deleted: *mut usize) -> BbgStatus {
    guard(|| {
        let (h, log) = fan_construction(graph_ref(g)?);
        if !deleted.is_null() {
            deleted.write(log.len());
        }
        write_graph(out, h)
    })
}

/// Breaks every 4-cycle without touching the standard Hamilton cycle, which
/// must be present. `deleted` (may be null) receives the number of deletions.
///
/// # Safety
/// `g` must be a live handle; `out` must be valid for writes; `deleted` null or valid.
#[no_mangle]
pub unsafe extern "C" fn bbg_quadrilateral_breaker(
    g: *const BbgGraph,
    out: *mut *mut BbgGraph,
    deleted: *mut usize,
) -> BbgStatus {
    guard(|| {
        let g = graph_ref(g)?;
        let h = lib(standard_hamilton(g.n()))?;
        let (h, log) = lib(quadrilateral_breaker(g, &h, None))?;
        if !deleted.is_null() {
            deleted.write(log.len());
        }
        write_graph(out, h)
    })
}

#[cfg(test)]
mod tests {
    use std::ptr;

    use super::*;

    #[test]
    fn errors_set_message() {
        let mut g = ptr::null_mut();
        assert_eq!(unsafe { bbg_graph_complete(0, &mut g) }, BbgStatus::InvalidArgument);
        assert!(g.is_null());
        let msg = unsafe { CStr::from_ptr(bbg_last_error_message()) };
        assert!(!msg.to_bytes().is_empty());
        assert_eq!(unsafe { bbg_graph_complete(3, ptr::null_mut()) }, BbgStatus::NullPointer);
    }
}
