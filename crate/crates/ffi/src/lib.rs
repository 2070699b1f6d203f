//! C ABI for hypersupport.
//!
//! Instances live behind opaque handles created from JSON text and released
//! with the matching `*_free` function. Every fallible call returns an
//! [`HsStatus`]; on failure `hs_last_error()` describes the problem for the
//! calling thread. Strings returned through `char **` out-parameters are
//! owned by the caller and released with `hs_string_free`.

use std::cell::RefCell;
use std::ffi::{c_char, CStr, CString};
use std::ptr;

use hypersupport::io::{certificate_to_json, embedding_to_json, parse_graph, parse_hypergraph};
use hypersupport::kernel::psi_log2;
use hypersupport::planegeom::{is_planar, outerplanarity_number, Outerplanarity};
use hypersupport::supports::{find_r_outerplanar_support, is_support, LayerBound, SearchOutcome};
use hypersupport::{instances, Budget, Error, Hypergraph, SimpleGraph};

/// Result code of every fallible call.
#[repr(C)]
#[derive(Clone, Copy, Debug, PartialEq, Eq)]
pub enum HsStatus {
    Ok = 0,
    NullPointer = 1,
    InvalidUtf8 = 2,
    /// Malformed JSON, schema violation, or inconsistent input.
    InvalidInput = 3,
    /// Arguments outside the supported range.
    Domain = 4,
    Internal = 5,
}

/// Outcome of a budgeted search.
#[repr(C)]
#[derive(Clone, Copy, Debug, PartialEq, Eq)]
pub enum HsOutcome {
    Found = 0,
    NotFound = 1,
    Unknown = 2,
}

/// Opaque hypergraph handle.
pub struct HsHypergraph(Hypergraph);

/// Opaque graph handle.
pub struct HsGraph(SimpleGraph);

thread_local! {
    static LAST_ERROR: RefCell<Option<CString>> = const { RefCell::new(None) };
}

fn set_error(msg: impl Into<String>) {
    let c = CString::new(msg.into().replace('\0', " ")).expect("nul bytes removed");
    LAST_ERROR.with(|e| *e.borrow_mut() = Some(c));
}

fn fail(status: HsStatus, msg: impl Into<String>) -> HsStatus {
    set_error(msg);
    status
}

fn from_error(e: Error) -> HsStatus {
    let status = match e {
        Error::Domain(_) => HsStatus::Domain,
        _ => HsStatus::InvalidInput,
    };
    fail(status, e.to_string())
}

/// Runs `f`, turning panics into `Internal`.
fn guard(f: impl FnOnce() -> HsStatus) -> HsStatus {
    LAST_ERROR.with(|e| *e.borrow_mut() = None);
    std::panic::catch_unwind(std::panic::AssertUnwindSafe(f))
        .unwrap_or_else(|_| fail(HsStatus::Internal, "internal panic"))
}

unsafe fn read_str<'a>(s: *const c_char) -> Result<&'a str, HsStatus> {
    if s.is_null() {
        return Err(fail(HsStatus::NullPointer, "null string argument"));
    }
    CStr::from_ptr(s).to_str().map_err(|_| fail(HsStatus::InvalidUtf8, "string argument is not UTF-8"))
}

unsafe fn write_string(out: *mut *mut c_char, s: String) -> HsStatus {
    match CString::new(s) {
        Ok(c) => {
            *out = c.into_raw();
            HsStatus::Ok
        }
        Err(_) => fail(HsStatus::Internal, "output contains a nul byte"),
    }
}

macro_rules! check_null {
    ($($p:expr),+) => {
        $(if $p.is_null() {
            return fail(HsStatus::NullPointer, concat!("null argument `", stringify!($p), "`"));
        })+
    };
}

/// Message for the last failed call on this thread, or null. Valid until the
/// next call on the same thread.
#[no_mangle]
pub extern "C" fn hs_last_error() -> *const c_char {
    LAST_ERROR.with(|e| e.borrow().as_ref().map_or(ptr::null(), |c| c.as_ptr()))
}

/// Releases a string returned by this library.
///
/// # Safety
/// `s` must be null or a pointer obtained from this library, freed once.
#[no_mangle]
pub unsafe extern "C" fn hs_string_free(s: *mut c_char) {
    if !s.is_null() {
        drop(CString::from_raw(s));
    }
}

/// Parses a hypergraph from `{"vertices": [...], "hyperedges": [...]}`.
///
/// # Safety
/// `json` must be a nul-terminated string and `out` a valid pointer.
#[no_mangle]
pub unsafe extern "C" fn hs_hypergraph_from_json(json: *const c_char, out: *mut *mut HsHypergraph) -> HsStatus {
    guard(|| {
        check_null!(out);
        let text = match read_str(json) {
            Ok(t) => t,
            Err(s) => return s,
        };
        match parse_hypergraph(text) {
            Ok((h, _)) => {
                *out = Box::into_raw(Box::new(HsHypergraph(h)));
                HsStatus::Ok
            }
            Err(e) => from_error(e),
        }
    })
}

/// The twelve-vertex example hypergraph with one pair of twins.
///
/// # Safety
/// `out` must be a valid pointer.
#[no_mangle]
pub unsafe extern "C" fn hs_hypergraph_example(out: *mut *mut HsHypergraph) -> HsStatus {
    guard(|| {
        check_null!(out);
        *out = Box::into_raw(Box::new(HsHypergraph(instances::figure2_hypergraph())));
        HsStatus::Ok
    })
}

/// # Safety
/// `h` must be null or a handle from this library, freed once.
#[no_mangle]
pub unsafe extern "C" fn hs_hypergraph_free(h: *mut HsHypergraph) {
    if !h.is_null() {
        drop(Box::from_raw(h));
    }
}

/// Number of vertices, or 0 for a null handle.
///
/// # Safety
/// `h` must be null or a live handle.
#[no_mangle]
pub unsafe extern "C" fn hs_hypergraph_vertex_count(h: *const HsHypergraph) -> usize {
    h.as_ref().map_or(0, |h| h.0.n())
}

/// Number of distinct hyperedges, or 0 for a null handle.
///
/// # Safety
/// `h` must be null or a live handle.
#[no_mangle]
pub unsafe extern "C" fn hs_hypergraph_edge_count(h: *const HsHypergraph) -> usize {
    h.as_ref().map_or(0, |h| h.0.m())
}

/// Number of twin classes, or 0 for a null handle.
///
/// # Safety
/// `h` must be null or a live handle.
#[no_mangle]
pub unsafe extern "C" fn hs_hypergraph_twin_class_count(h: *const HsHypergraph) -> usize {
    h.as_ref().map_or(0, |h| h.0.twin_partition().len())
}

/// Parses a graph from `{"vertices": [...], "edges": [...]}`; rotation and
/// outer-face data, when present, are validated.
///
/// # Safety
/// `json` must be a nul-terminated string and `out` a valid pointer.
#[no_mangle]
pub unsafe extern "C" fn hs_graph_from_json(json: *const c_char, out: *mut *mut HsGraph) -> HsStatus {
    guard(|| {
        check_null!(out);
        let text = match read_str(json) {
            Ok(t) => t,
            Err(s) => return s,
        };
        match parse_graph(text) {
            Ok(g) => {
                *out = Box::into_raw(Box::new(HsGraph(g.graph)));
                HsStatus::Ok
            }
            Err(e) => from_error(e),
        }
    })
}

/// # Safety
/// `g` must be null or a handle from this library, freed once.
#[no_mangle]
pub unsafe extern "C" fn hs_graph_free(g: *mut HsGraph) {
    if !g.is_null() {
        drop(Box::from_raw(g));
    }
}

/// Whether every hyperedge of `h` induces a connected subgraph of `g`.
///
/// # Safety
/// Handles must be live and `out` valid.
#[no_mangle]
pub unsafe extern "C" fn hs_is_support(g: *const HsGraph, h: *const HsHypergraph, out: *mut bool) -> HsStatus {
    guard(|| {
        check_null!(g, h, out);
        match is_support(&(*g).0, &(*h).0) {
            Ok(b) => {
                *out = b;
                HsStatus::Ok
            }
            Err(e) => from_error(e),
        }
    })
}

/// # Safety
/// `g` must be live and `out` valid.
#[no_mangle]
pub unsafe extern "C" fn hs_is_planar(g: *const HsGraph, out: *mut bool) -> HsStatus {
    guard(|| {
        check_null!(g, out);
        *out = is_planar(&(*g).0);
        HsStatus::Ok
    })
}

/// Minimum number of layers of `g` over all plane embeddings. `exact` is set
/// to false when the budget ran out, in which case `layers` is an upper
/// bound. When `embedding_json` is non-null it receives the witness.
///
/// # Safety
/// `g` must be live; `layers` and `exact` valid; `embedding_json` null or valid.
#[no_mangle]
pub unsafe extern "C" fn hs_outerplanarity(
    g: *const HsGraph,
    budget: u64,
    layers: *mut usize,
    exact: *mut bool,
    embedding_json: *mut *mut c_char,
) -> HsStatus {
    guard(|| {
        check_null!(g, layers, exact);
        let mut b = Budget::new(budget);
        let result = match outerplanarity_number(&(*g).0, &mut b) {
            Ok(r) => r,
            Err(e) => return from_error(e),
        };
        let (k, is_exact) = match &result {
            Outerplanarity::Exact { layers, .. } => (*layers, true),
            Outerplanarity::Unknown { best_bound, .. } => (*best_bound, false),
        };
        *layers = k;
        *exact = is_exact;
        if embedding_json.is_null() {
            return HsStatus::Ok;
        }
        write_string(embedding_json, embedding_to_json(result.witness()).to_string())
    })
}

/// Exhaustive support search. `r == 0` asks for any planar support,
/// otherwise for one with at most `r` layers. On `Found`, `certificate_json`
/// (when non-null) receives the support with its embedding.
///
/// # Safety
/// `h` must be live; `outcome` valid; `certificate_json` null or valid.
#[no_mangle]
pub unsafe extern "C" fn hs_find_support(
    h: *const HsHypergraph,
    r: usize,
    budget: u64,
    outcome: *mut HsOutcome,
    certificate_json: *mut *mut c_char,
) -> HsStatus {
    guard(|| {
        check_null!(h, outcome);
        let bound = if r == 0 { LayerBound::PlanarOnly } else { LayerBound::Layers(r) };
        let report = match find_r_outerplanar_support(&(*h).0, bound, budget) {
            Ok(r) => r,
            Err(e) => return from_error(e),
        };
        if !certificate_json.is_null() {
            *certificate_json = ptr::null_mut();
        }
        match report.outcome {
            SearchOutcome::Found(c) => {
                *outcome = HsOutcome::Found;
                if certificate_json.is_null() {
                    return HsStatus::Ok;
                }
                write_string(certificate_json, certificate_to_json(&c).to_string())
            }
            SearchOutcome::None => {
                *outcome = HsOutcome::NotFound;
                HsStatus::Ok
            }
            SearchOutcome::Unknown => {
                *outcome = HsOutcome::Unknown;
                HsStatus::Ok
            }
        }
    })
}

/// Base-two logarithm of the twin-class threshold for `m` hyperedges and `r`
/// layers, as a decimal string.
///
/// # Safety
/// `out` must be valid.
#[no_mangle]
pub unsafe extern "C" fn hs_psi_log2(m: u64, r: u64, out: *mut *mut c_char) -> HsStatus {
    guard(|| {
        check_null!(out);
        match psi_log2(m, r) {
            Ok(v) => write_string(out, v.to_string()),
            Err(e) => from_error(e),
        }
    })
}
