//! C ABI over `estrada-core`.
//!
//! Graphs are opaque heap handles created by the `estrada_graph_*` and family
//! constructors and released with [`estrada_graph_free`]. Every fallible call
//! returns an [`EstradaStatus`] and writes its result through an out pointer;
//! on failure a message is available from [`estrada_last_error`] on the same
//! thread. Strings returned by the library are freed with [`estrada_string_free`].

use std::cell::RefCell;
use std::ffi::{c_char, CStr, CString};
use std::panic::{catch_unwind, AssertUnwindSafe};
use std::ptr;

use estrada_core::error::Error;
use estrada_core::families::{complete_bipartite, join_family, JoinFamilyParams};
use estrada_core::graph::Graph;
use estrada_core::graph6::{emit_graph6, parse_graph6};
use estrada_core::invariants::{edge_connectivity, matching_number, vertex_connectivity};
use estrada_core::search::is_isomorphic;
use estrada_core::spectral::{self, nullity_exact, spectral_moment_exact};

/// Result code of every fallible call.
#[repr(C)]
#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub enum EstradaStatus {
    Ok = 0,
    NullPointer = 1,
    InvalidArgument = 2,
    ParseError = 3,
    NotBipartite = 4,
    NoConvergence = 5,
    OutOfRange = 6,
    Panic = 7,
}

/// Estrada index evaluation route.
#[repr(C)]
#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub enum EstradaMethod {
    Eigen = 0,
    Cosh = 1,
    MomentSeries = 2,
}

/// Opaque graph handle.
pub struct EstradaGraph {
    inner: Graph,
}

thread_local! {
    static LAST_ERROR: RefCell<Option<CString>> = const { RefCell::new(None) };
}

fn set_error(msg: impl Into<String>) {
    let text = CString::new(msg.into().replace('\0', " ")).expect("nul bytes removed");
    LAST_ERROR.with(|e| *e.borrow_mut() = Some(text));
}

fn status_of(e: &Error) -> EstradaStatus {
    match e {
        Error::Graph6 { .. } => EstradaStatus::ParseError,
        Error::NotBipartite => EstradaStatus::NotBipartite,
        Error::NoConvergence { .. } => EstradaStatus::NoConvergence,
        Error::OrderOutOfRange(_)
        | Error::VertexOutOfRange { .. }
        | Error::WalkBudget { .. }
        | Error::MatchingTooLarge(_)
        | Error::EnumerationRange(_) => EstradaStatus::OutOfRange,
        _ => EstradaStatus::InvalidArgument,
    }
}

/// Runs `f`, translating errors and panics into status codes.
fn guard(f: impl FnOnce() -> Result<(), (EstradaStatus, String)>) -> EstradaStatus {
    match catch_unwind(AssertUnwindSafe(f)) {
        Ok(Ok(())) => EstradaStatus::Ok,
        Ok(Err((status, msg))) => {
            set_error(msg);
            status
        }
        Err(_) => {
            set_error("internal panic");
            EstradaStatus::Panic
        }
    }
}

fn core_err(e: Error) -> (EstradaStatus, String) {
    (status_of(&e), e.to_string())
}

fn null_err(name: &str) -> (EstradaStatus, String) {
    (EstradaStatus::NullPointer, format!("{name} is null"))
}

unsafe fn graph_ref<'a>(g: *const EstradaGraph) -> Result<&'a Graph, (EstradaStatus, String)> {
    g.as_ref().map(|h| &h.inner).ok_or_else(|| null_err("graph"))
}

unsafe fn write_out<T>(out: *mut T, value: T) -> Result<(), (EstradaStatus, String)> {
    if out.is_null() {
        return Err(null_err("output pointer"));
    }
    out.write(value);
    Ok(())
}

fn boxed(g: Graph) -> *mut EstradaGraph {
    Box::into_raw(Box::new(EstradaGraph { inner: g }))
}

fn c_string(s: String) -> *mut c_char {
    CString::new(s).map_or(ptr::null_mut(), CString::into_raw)
}

/// Message of the last failed call on this thread, or NULL. Valid until the
/// next failing call on the same thread.
#[no_mangle]
pub extern "C" fn estrada_last_error() -> *const c_char {
    LAST_ERROR.with(|e| e.borrow().as_ref().map_or(ptr::null(), |s| s.as_ptr()))
}

/// Parses a NUL-terminated graph6 string.
///
/// # Safety
/// `text` must be NULL or a valid NUL-terminated string; `out` must be NULL or writable.
#[no_mangle]
pub unsafe extern "C" fn estrada_graph_from_graph6(
    text: *const c_char,
    out: *mut *mut EstradaGraph,
) -> EstradaStatus {
    guard(|| {
        if text.is_null() {
            return Err(null_err("text"));
        }
        let s = CStr::from_ptr(text)
            .to_str()
            .map_err(|_| (EstradaStatus::ParseError, "graph6 text is not UTF-8".to_string()))?;
        let g = parse_graph6(s).map_err(core_err)?;
        write_out(out, boxed(g))
    })
}

/// Graph from an edge list of `edge_count` pairs stored as `2 * edge_count` vertex indices.
///
/// # Safety
/// `edges` must point to `2 * edge_count` readable values (or be NULL when `edge_count` is 0).
#[no_mangle]
pub unsafe extern "C" fn estrada_graph_from_edges(
    n: usize,
    edges: *const usize,
    edge_count: usize,
    out: *mut *mut EstradaGraph,
) -> EstradaStatus {
    guard(|| {
        let flat: &[usize] = if edge_count == 0 {
            &[]
        } else if edges.is_null() {
            return Err(null_err("edges"));
        } else {
            std::slice::from_raw_parts(edges, 2 * edge_count)
        };
        let pairs: Vec<(usize, usize)> = flat.chunks_exact(2).map(|p| (p[0], p[1])).collect();
        let g = Graph::from_edges(n, &pairs).map_err(core_err)?;
        write_out(out, boxed(g))
    })
}

/// `K_{p,q}`.
///
/// # Safety
/// `out` must be NULL or writable.
#[no_mangle]
pub unsafe extern "C" fn estrada_complete_bipartite(
    p: usize,
    q: usize,
    out: *mut *mut EstradaGraph,
) -> EstradaStatus {
    guard(|| {
        let g = complete_bipartite(p, q).map_err(core_err)?;
        write_out(out, boxed(g))
    })
}

/// `O_s v1 (K_1 u K_{p,q})`.
///
/// # Safety
/// `out` must be NULL or writable.
#[no_mangle]
pub unsafe extern "C" fn estrada_join_family(
    s: usize,
    p: usize,
    q: usize,
    out: *mut *mut EstradaGraph,
) -> EstradaStatus {
    guard(|| {
        let params = JoinFamilyParams::new(s, p, q).map_err(core_err)?;
        write_out(out, boxed(join_family(params)))
    })
}

/// Releases a handle. NULL is ignored.
///
/// # Safety
/// `g` must be NULL or a handle from this library that has not been freed.
#[no_mangle]
pub unsafe extern "C" fn estrada_graph_free(g: *mut EstradaGraph) {
    if !g.is_null() {
        drop(Box::from_raw(g));
    }
}

/// graph6 encoding; free the result with [`estrada_string_free`].
///
/// # Safety
/// `g` must be a live handle or NULL; `out` must be NULL or writable.
#[no_mangle]
pub unsafe extern "C" fn estrada_graph_to_graph6(
    g: *const EstradaGraph,
    out: *mut *mut c_char,
) -> EstradaStatus {
    guard(|| {
        let g = graph_ref(g)?;
        write_out(out, c_string(emit_graph6(g)))
    })
}

/// Releases a string returned by this library. NULL is ignored.
///
/// # Safety
/// `s` must be NULL or a string from this library that has not been freed.
#[no_mangle]
pub unsafe extern "C" fn estrada_string_free(s: *mut c_char) {
    if !s.is_null() {
        drop(CString::from_raw(s));
    }
}

/// Number of vertices.
///
/// # Safety
/// `g` must be a live handle or NULL; `out` must be NULL or writable.
#[no_mangle]
pub unsafe extern "C" fn estrada_graph_order(g: *const EstradaGraph, out: *mut usize) -> EstradaStatus {
    guard(|| write_out(out, graph_ref(g)?.order()))
}

/// Number of edges.
///
/// # Safety
/// `g` must be a live handle or NULL; `out` must be NULL or writable.
#[no_mangle]
pub unsafe extern "C" fn estrada_graph_edge_count(
    g: *const EstradaGraph,
    out: *mut usize,
) -> EstradaStatus {
    guard(|| write_out(out, graph_ref(g)?.edge_count()))
}

/// Estrada index. `bound` may be NULL; it receives the truncation bound for
/// the moment-series method and 0 otherwise.
///
/// # Safety
/// `g` must be a live handle or NULL; `value` must be NULL or writable; `bound` may be NULL.
#[no_mangle]
pub unsafe extern "C" fn estrada_index(
    g: *const EstradaGraph,
    method: EstradaMethod,
    value: *mut f64,
    bound: *mut f64,
) -> EstradaStatus {
    guard(|| {
        let g = graph_ref(g)?;
        let m = match method {
            EstradaMethod::Eigen => spectral::EstradaMethod::Eigen,
            EstradaMethod::Cosh => spectral::EstradaMethod::Cosh,
            EstradaMethod::MomentSeries => spectral::EstradaMethod::MomentSeries,
        };
        let v = spectral::estrada(g, m).map_err(core_err)?;
        write_out(value, v.value)?;
        if !bound.is_null() {
            bound.write(v.error_bound.unwrap_or(0.0));
        }
        Ok(())
    })
}

/// Exact nullity of the adjacency matrix.
///
/// # Safety
/// `g` must be a live handle or NULL; `out` must be NULL or writable.
#[no_mangle]
pub unsafe extern "C" fn estrada_nullity(g: *const EstradaGraph, out: *mut usize) -> EstradaStatus {
    guard(|| write_out(out, nullity_exact(graph_ref(g)?)))
}

/// Closed walks of length `k` as a decimal string; free with [`estrada_string_free`].
///
/// # Safety
/// `g` must be a live handle or NULL; `out` must be NULL or writable.
#[no_mangle]
pub unsafe extern "C" fn estrada_moment(
    g: *const EstradaGraph,
    k: usize,
    out: *mut *mut c_char,
) -> EstradaStatus {
    guard(|| {
        let m = spectral_moment_exact(graph_ref(g)?, k).map_err(core_err)?;
        write_out(out, c_string(m.to_string()))
    })
}

/// Size of a maximum matching.
///
/// # Safety
/// `g` must be a live handle or NULL; `out` must be NULL or writable.
#[no_mangle]
pub unsafe extern "C" fn estrada_matching_number(
    g: *const EstradaGraph,
    out: *mut usize,
) -> EstradaStatus {
    guard(|| write_out(out, matching_number(graph_ref(g)?).map_err(core_err)?))
}

/// Vertex connectivity.
///
/// # Safety
/// `g` must be a live handle or NULL; `out` must be NULL or writable.
#[no_mangle]
pub unsafe extern "C" fn estrada_vertex_connectivity(
    g: *const EstradaGraph,
    out: *mut usize,
) -> EstradaStatus {
    guard(|| write_out(out, vertex_connectivity(graph_ref(g)?)))
}

/// Edge connectivity.
///
/// # Safety
/// `g` must be a live handle or NULL; `out` must be NULL or writable.
#[no_mangle]
pub unsafe extern "C" fn estrada_edge_connectivity(
    g: *const EstradaGraph,
    out: *mut usize,
) -> EstradaStatus {
    guard(|| write_out(out, edge_connectivity(graph_ref(g)?)))
}

/// Whether two graphs are isomorphic.
///
/// # Safety
/// `g`, `h` must be live handles or NULL; `out` must be NULL or writable.
#[no_mangle]
pub unsafe extern "C" fn estrada_is_isomorphic(
    g: *const EstradaGraph,
    h: *const EstradaGraph,
    out: *mut bool,
) -> EstradaStatus {
    guard(|| {
        let (g, h) = (graph_ref(g)?, graph_ref(h)?);
        write_out(out, is_isomorphic(g, h))
    })
}
