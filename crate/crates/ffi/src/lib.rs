//! C ABI over the `kirchhoff` crate.
//!
//! Graphs live behind an opaque [`KirchhoffGraph`] handle. Every fallible
//! call returns a [`KirchhoffStatus`]; on failure the message is available
//! from [`kirchhoff_last_error`] on the same thread. Array outputs follow one
//! protocol: the required length is always written to `*len`, and nothing is
//! copied unless `capacity` is large enough.

use std::cell::RefCell;
use std::ffi::{c_char, CStr, CString};
use std::panic::{catch_unwind, AssertUnwindSafe};
use std::ptr;

use kirchhoff::flow_lattice::{lattice, theta_enumerate, theta_product};
use kirchhoff::graph::Graph;
use kirchhoff::io::parse_graph_str;
use kirchhoff::kirchhoff::{rank_sequence, torsion_check};
use kirchhoff::tutte::{complexity, poincare, tutte};
use kirchhoff::Error;

/// Opaque graph handle.
pub struct KirchhoffGraph {
    inner: Graph,
}

#[repr(C)]
#[derive(Clone, Copy, Debug, PartialEq, Eq)]
pub enum KirchhoffStatus {
    Ok = 0,
    /// Two independent computations disagreed.
    CheckFailed = 1,
    InputError = 2,
    CapacityError = 3,
    /// The operation is undefined for the argument, e.g. a cut-edge.
    DomainError = 4,
    NullArgument = 5,
    BufferTooSmall = 6,
    /// A panic was caught at the boundary.
    Internal = 7,
}

#[repr(C)]
#[derive(Clone, Copy, Debug, PartialEq, Eq)]
pub enum KirchhoffThetaMethod {
    Product = 0,
    Enumerate = 1,
}

thread_local! {
    static LAST_ERROR: RefCell<CString> = RefCell::new(CString::default());
}

struct Failure(KirchhoffStatus, String);

impl From<Error> for Failure {
    fn from(e: Error) -> Self {
        let status = match &e {
            Error::Capacity { .. } => KirchhoffStatus::CapacityError,
            Error::OracleMismatch { .. } => KirchhoffStatus::CheckFailed,
            Error::Domain(_) | Error::Infeasible(_) => KirchhoffStatus::DomainError,
            Error::Input(_) | Error::RingMismatch(..) => KirchhoffStatus::InputError,
        };
        Failure(status, e.to_string())
    }
}

fn set_last_error(msg: &str) {
    let c = CString::new(msg.replace('\0', " ")).unwrap_or_default();
    LAST_ERROR.with(|e| *e.borrow_mut() = c);
}

fn guard(f: impl FnOnce() -> Result<(), Failure>) -> KirchhoffStatus {
    match catch_unwind(AssertUnwindSafe(f)) {
        Ok(Ok(())) => {
            set_last_error("");
            KirchhoffStatus::Ok
        }
        Ok(Err(Failure(status, msg))) => {
            set_last_error(&msg);
            status
        }
        Err(_) => {
            set_last_error("internal error: panic in kirchhoff");
            KirchhoffStatus::Internal
        }
    }
}

fn null(what: &str) -> Failure {
    Failure(KirchhoffStatus::NullArgument, format!("{what} is null"))
}

unsafe fn graph_ref<'a>(g: *const KirchhoffGraph) -> Result<&'a Graph, Failure> {
    g.as_ref().map(|h| &h.inner).ok_or_else(|| null("graph"))
}

unsafe fn write_out<T>(out: *mut T, value: T) -> Result<(), Failure> {
    if out.is_null() {
        return Err(null("output pointer"));
    }
    out.write(value);
    Ok(())
}

unsafe fn write_buffer<T: Copy>(
    src: &[T],
    out: *mut T,
    capacity: usize,
    len: *mut usize,
) -> Result<(), Failure> {
    write_out(len, src.len())?;
    if src.is_empty() {
        return Ok(());
    }
    if out.is_null() || capacity < src.len() {
        return Err(Failure(
            KirchhoffStatus::BufferTooSmall,
            format!("buffer holds {capacity} values, {} required", src.len()),
        ));
    }
    ptr::copy_nonoverlapping(src.as_ptr(), out, src.len());
    Ok(())
}

fn into_handle(g: Graph) -> *mut KirchhoffGraph {
    Box::into_raw(Box::new(KirchhoffGraph { inner: g }))
}

/// Message for the last failed call on this thread, or an empty string.
/// The pointer stays valid until the next call into this library on the
/// same thread.
#[no_mangle]
pub extern "C" fn kirchhoff_last_error() -> *const c_char {
    LAST_ERROR.with(|e| e.borrow().as_ptr())
}

#[no_mangle]
pub extern "C" fn kirchhoff_version() -> *const c_char {
    concat!(env!("CARGO_PKG_VERSION"), "\0").as_ptr().cast()
}

/// Parses graph-file text (`vertex <id>` / `edge <id> <tail> <head>` lines).
///
/// # Safety
/// `text` must be a NUL-terminated string and `out` a writable pointer.
#[no_mangle]
pub unsafe extern "C" fn kirchhoff_graph_parse(
    text: *const c_char,
    out: *mut *mut KirchhoffGraph,
) -> KirchhoffStatus {
    guard(|| {
        if text.is_null() {
            return Err(null("text"));
        }
        let text = CStr::from_ptr(text)
            .to_str()
            .map_err(|_| Failure(KirchhoffStatus::InputError, "text is not UTF-8".into()))?;
        let g = parse_graph_str(text)?;
        write_out(out, into_handle(g))
    })
}

/// Builds a graph from parallel endpoint arrays. Edge `i` gets id `i + 1`;
/// the vertices are exactly the endpoints.
///
/// # Safety
/// `tails` and `heads` must each hold `edge_count` values (they may be null
/// when `edge_count` is zero) and `out` must be writable.
#[no_mangle]
pub unsafe extern "C" fn kirchhoff_graph_from_edges(
    tails: *const u32,
    heads: *const u32,
    edge_count: usize,
    out: *mut *mut KirchhoffGraph,
) -> KirchhoffStatus {
    guard(|| {
        let pairs: Vec<(u32, u32)> = if edge_count == 0 {
            Vec::new()
        } else {
            if tails.is_null() || heads.is_null() {
                return Err(null("endpoint array"));
            }
            let t = std::slice::from_raw_parts(tails, edge_count);
            let h = std::slice::from_raw_parts(heads, edge_count);
            t.iter().copied().zip(h.iter().copied()).collect()
        };
        let vertices: Vec<u32> = pairs.iter().flat_map(|&(a, b)| [a, b]).collect();
        let g = Graph::with_vertices(&vertices, &pairs)?;
        write_out(out, into_handle(g))
    })
}

/// # Safety
/// `g` must come from this library and not have been freed. Null is a no-op.
#[no_mangle]
pub unsafe extern "C" fn kirchhoff_graph_free(g: *mut KirchhoffGraph) {
    if !g.is_null() {
        drop(Box::from_raw(g));
    }
}

/// # Safety
/// `g` must be a live handle or null (which yields 0).
#[no_mangle]
pub unsafe extern "C" fn kirchhoff_graph_vertex_count(g: *const KirchhoffGraph) -> usize {
    g.as_ref().map_or(0, |h| h.inner.vertex_count())
}

/// # Safety
/// `g` must be a live handle or null (which yields 0).
#[no_mangle]
pub unsafe extern "C" fn kirchhoff_graph_edge_count(g: *const KirchhoffGraph) -> usize {
    g.as_ref().map_or(0, |h| h.inner.edge_count())
}

/// Coefficients of the Poincaré polynomial, constant term first.
///
/// # Safety
/// `g` must be a live handle, `out` must hold `capacity` values and `len`
/// must be writable.
#[no_mangle]
pub unsafe extern "C" fn kirchhoff_poincare(
    g: *const KirchhoffGraph,
    out: *mut i64,
    capacity: usize,
    len: *mut usize,
) -> KirchhoffStatus {
    guard(|| {
        let d = poincare(graph_ref(g)?)?;
        write_buffer(d.coeffs(), out, capacity, len)
    })
}

/// Ranks of the relation quotients in degrees `0..=m`.
///
/// # Safety
/// As for [`kirchhoff_poincare`].
#[no_mangle]
pub unsafe extern "C" fn kirchhoff_rank_sequence(
    g: *const KirchhoffGraph,
    out: *mut u64,
    capacity: usize,
    len: *mut usize,
) -> KirchhoffStatus {
    guard(|| {
        let ranks: Vec<u64> = rank_sequence(graph_ref(g)?)?.into_iter().map(|d| d as u64).collect();
        write_buffer(&ranks, out, capacity, len)
    })
}

/// Tutte polynomial as a dense row-major table: entry `i * cols + j` is the
/// coefficient of `x^i y^j`.
///
/// # Safety
/// `g` must be a live handle, `out` must hold `capacity` values, and `rows`
/// and `cols` must be writable.
#[no_mangle]
pub unsafe extern "C" fn kirchhoff_tutte(
    g: *const KirchhoffGraph,
    out: *mut i64,
    capacity: usize,
    rows: *mut usize,
    cols: *mut usize,
) -> KirchhoffStatus {
    guard(|| {
        let t = tutte(graph_ref(g)?)?;
        let table = t.coeffs();
        let r = table.len();
        let c = table.iter().map(Vec::len).max().unwrap_or(0);
        let mut dense = vec![0i64; r * c];
        for (i, row) in table.iter().enumerate() {
            dense[i * c..i * c + row.len()].copy_from_slice(row);
        }
        write_out(rows, r)?;
        write_out(cols, c)?;
        let mut total = 0;
        write_buffer(&dense, out, capacity, &mut total)
    })
}

/// Number of maximal forests.
///
/// # Safety
/// `g` must be a live handle and `out` writable.
#[no_mangle]
pub unsafe extern "C" fn kirchhoff_complexity(g: *const KirchhoffGraph, out: *mut u64) -> KirchhoffStatus {
    guard(|| {
        let k = complexity(graph_ref(g)?)?;
        write_out(out, k)
    })
}

/// Gram determinant of the integer flow lattice; fails with
/// `CHECK_FAILED` if it differs from the complexity.
///
/// # Safety
/// `g` must be a live handle and `out` writable.
#[no_mangle]
pub unsafe extern "C" fn kirchhoff_lattice_determinant(
    g: *const KirchhoffGraph,
    out: *mut u64,
) -> KirchhoffStatus {
    guard(|| {
        let l = lattice(graph_ref(g)?)?;
        let det = u64::try_from(&l.determinant).map_err(|_| {
            Failure(KirchhoffStatus::CapacityError, "determinant exceeds 64 bits".into())
        })?;
        write_out(out, det)
    })
}

/// Theta series coefficients for exponents `0..=max_norm`.
///
/// # Safety
/// `g` must be a live handle and `out` must hold `capacity >= max_norm + 1`
/// values.
#[no_mangle]
pub unsafe extern "C" fn kirchhoff_theta(
    g: *const KirchhoffGraph,
    max_norm: u64,
    method: KirchhoffThetaMethod,
    out: *mut i64,
    capacity: usize,
) -> KirchhoffStatus {
    guard(|| {
        let g = graph_ref(g)?;
        let series = match method {
            KirchhoffThetaMethod::Product => theta_product(g, max_norm)?,
            KirchhoffThetaMethod::Enumerate => theta_enumerate(g, max_norm)?,
        };
        let coeffs: Vec<i64> = (0..=max_norm).map(|s| series.coeff_int(s)).collect();
        let mut len = 0;
        write_buffer(&coeffs, out, capacity, &mut len)
    })
}

/// Number of integer flows of squared norm `norm`.
///
/// # Safety
/// `g` must be a live handle and `out` writable.
#[no_mangle]
pub unsafe extern "C" fn kirchhoff_flows_of_norm(
    g: *const KirchhoffGraph,
    norm: u64,
    out: *mut i64,
) -> KirchhoffStatus {
    guard(|| {
        let count = theta_enumerate(graph_ref(g)?, norm)?.coeff_int(norm);
        write_out(out, count)
    })
}

/// Whether the degree-`degree` relation quotient is torsion-free.
///
/// # Safety
/// `g` must be a live handle and `out` writable.
#[no_mangle]
pub unsafe extern "C" fn kirchhoff_torsion_free(
    g: *const KirchhoffGraph,
    degree: usize,
    out: *mut bool,
) -> KirchhoffStatus {
    guard(|| {
        let free = torsion_check(graph_ref(g)?, degree)?;
        write_out(out, free)
    })
}
