//! C ABI for the `eqdeg` library.
//!
//! Graphs are opaque `EqdegGraph` handles created by a constructor and
//! released with [`eqdeg_graph_free`]. Every other function returns an
//! [`EqdegStatus`]; on failure a message is kept per thread and can be read
//! with [`eqdeg_last_error_message`]. Strings are written into caller
//! buffers NUL-terminated; when the buffer is too small the required size
//! (including the NUL) is stored and `EQDEG_STATUS_BUFFER_TOO_SMALL` returned.

use std::cell::RefCell;
use std::ffi::{c_char, CStr};
use std::panic::{catch_unwind, AssertUnwindSafe};
use std::ptr;

use eqdeg::detector::{find_equal_degree_path, MAX_PATH_LENGTH};
use eqdeg::enumerator::canonical_graph;
use eqdeg::lambda::{lambda_bruteforce, lambda_closed, LambdaInstance};
use eqdeg::search::{compute_extremal, verify_theorem, SearchOptions};
use eqdeg::{Error, Graph};

/// Result code of every fallible call.
#[repr(C)]
#[derive(Clone, Copy, Debug, PartialEq, Eq)]
pub enum EqdegStatus {
    Ok = 0,
    NullPointer = 1,
    InvalidArgument = 2,
    Graph6 = 3,
    OutOfRange = 4,
    BufferTooSmall = 5,
    TheoremFalsified = 6,
    Internal = 7,
    Panic = 8,
}

/// Opaque graph handle.
pub struct EqdegGraph {
    inner: Graph,
}

thread_local! {
    static LAST_ERROR: RefCell<String> = const { RefCell::new(String::new()) };
}

fn set_error(msg: impl Into<String>) {
    LAST_ERROR.with(|e| *e.borrow_mut() = msg.into());
}

fn status_of(e: &Error) -> EqdegStatus {
    match e {
        Error::Graph6(_) => EqdegStatus::Graph6,
        Error::OrderOutOfRange(..)
        | Error::VertexOutOfRange { .. }
        | Error::PathLengthOutOfRange(_)
        | Error::LambdaTooLarge(_) => EqdegStatus::OutOfRange,
        Error::LoopEdge(_)
        | Error::OverlappingSets
        | Error::SameVertex(_)
        | Error::UnequalDegrees { .. }
        | Error::Precondition(_)
        | Error::NotPropertyFree(_)
        | Error::LambdaDomain(_) => EqdegStatus::InvalidArgument,
        Error::TheoremFalsified(_) => EqdegStatus::TheoremFalsified,
        Error::Internal(_) => EqdegStatus::Internal,
    }
}

struct Fail(EqdegStatus, String);

impl From<Error> for Fail {
    fn from(e: Error) -> Self {
        Fail(status_of(&e), e.to_string())
    }
}

fn null(what: &str) -> Fail {
    Fail(EqdegStatus::NullPointer, format!("{what} is null"))
}

/// Runs `body`, converting errors and panics into a status and message.
fn guard(body: impl FnOnce() -> Result<(), Fail>) -> EqdegStatus {
    match catch_unwind(AssertUnwindSafe(body)) {
        Ok(Ok(())) => EqdegStatus::Ok,
        Ok(Err(Fail(status, msg))) => {
            set_error(msg);
            status
        }
        Err(_) => {
            set_error("panic inside eqdeg");
            EqdegStatus::Panic
        }
    }
}

unsafe fn graph_ref<'a>(g: *const EqdegGraph) -> Result<&'a Graph, Fail> {
    // SAFETY: the caller passes a live handle or null.
    unsafe { g.as_ref() }.map(|h| &h.inner).ok_or_else(|| null("graph"))
}

unsafe fn write_out<T>(out: *mut T, value: T, what: &str) -> Result<(), Fail> {
    if out.is_null() {
        return Err(null(what));
    }
    // SAFETY: non-null and, per the contract, writable.
    unsafe { out.write(value) };
    Ok(())
}

/// Copies `s` plus a NUL into `buf` of `cap` bytes and stores the needed
/// size in `needed`.
unsafe fn write_str(s: &str, buf: *mut c_char, cap: usize, needed: *mut usize) -> Result<(), Fail> {
    let size = s.len() + 1;
    if !needed.is_null() {
        // SAFETY: non-null and writable per the contract.
        unsafe { needed.write(size) };
    }
    if cap < size {
        return Err(Fail(EqdegStatus::BufferTooSmall, format!("buffer of {cap} bytes, need {size}")));
    }
    if buf.is_null() {
        return Err(null("buffer"));
    }
    // SAFETY: buf holds at least cap >= size bytes.
    unsafe {
        ptr::copy_nonoverlapping(s.as_ptr(), buf.cast::<u8>(), s.len());
        buf.add(s.len()).write(0);
    }
    Ok(())
}

/// Static NUL-terminated description of `status`.
#[no_mangle]
pub extern "C" fn eqdeg_status_name(status: EqdegStatus) -> *const c_char {
    let s: &'static [u8] = match status {
        EqdegStatus::Ok => b"ok\0",
        EqdegStatus::NullPointer => b"null pointer\0",
        EqdegStatus::InvalidArgument => b"invalid argument\0",
        EqdegStatus::Graph6 => b"malformed graph6\0",
        EqdegStatus::OutOfRange => b"out of range\0",
        EqdegStatus::BufferTooSmall => b"buffer too small\0",
        EqdegStatus::TheoremFalsified => b"theorem check failed\0",
        EqdegStatus::Internal => b"internal error\0",
        EqdegStatus::Panic => b"panic\0",
    };
    s.as_ptr().cast()
}

/// Copies the calling thread's last error message into `buf`.
///
/// # Safety
/// `buf` must hold `cap` writable bytes; `needed` may be null.
#[no_mangle]
pub unsafe extern "C" fn eqdeg_last_error_message(buf: *mut c_char, cap: usize, needed: *mut usize) -> EqdegStatus {
    let msg = LAST_ERROR.with(|e| e.borrow().clone());
    match unsafe { write_str(&msg, buf, cap, needed) } {
        Ok(()) => EqdegStatus::Ok,
        Err(Fail(status, _)) => status,
    }
}

/// Parses one graph6 string into a new handle stored in `*out`.
///
/// # Safety
/// `text` must be a NUL-terminated string; `out` must be writable.
#[no_mangle]
pub unsafe extern "C" fn eqdeg_graph_from_graph6(text: *const c_char, out: *mut *mut EqdegGraph) -> EqdegStatus {
    guard(|| {
        if text.is_null() {
            return Err(null("text"));
        }
        // SAFETY: NUL-terminated per the contract.
        let s = unsafe { CStr::from_ptr(text) }
            .to_str()
            .map_err(|_| Fail(EqdegStatus::Graph6, "graph6 text is not UTF-8".into()))?;
        let g = Graph::from_graph6(s.trim_end())?;
        unsafe { write_out(out, Box::into_raw(Box::new(EqdegGraph { inner: g })), "out") }
    })
}

/// Builds a graph on `order` vertices from `edge_count` pairs stored
/// flat in `edges` (`2 * edge_count` entries).
///
/// # Safety
/// `edges` must hold `2 * edge_count` readable entries (may be null when
/// `edge_count` is 0); `out` must be writable.
#[no_mangle]
pub unsafe extern "C" fn eqdeg_graph_new(
    order: usize,
    edges: *const usize,
    edge_count: usize,
    out: *mut *mut EqdegGraph,
) -> EqdegStatus {
    guard(|| {
        let flat: &[usize] = if edge_count == 0 {
            &[]
        } else if edges.is_null() {
            return Err(null("edges"));
        } else {
            // SAFETY: 2 * edge_count readable entries per the contract.
            unsafe { std::slice::from_raw_parts(edges, 2 * edge_count) }
        };
        let g = Graph::new(order, flat.chunks_exact(2).map(|e| (e[0], e[1])))?;
        unsafe { write_out(out, Box::into_raw(Box::new(EqdegGraph { inner: g })), "out") }
    })
}

/// Releases a handle; null is ignored.
///
/// # Safety
/// `g` must come from a constructor of this library and not be used after.
#[no_mangle]
pub unsafe extern "C" fn eqdeg_graph_free(g: *mut EqdegGraph) {
    if !g.is_null() {
        // SAFETY: created by Box::into_raw in a constructor.
        drop(unsafe { Box::from_raw(g) });
    }
}

/// # Safety
/// `g` must be a live handle; `out` must be writable.
#[no_mangle]
pub unsafe extern "C" fn eqdeg_graph_order(g: *const EqdegGraph, out: *mut usize) -> EqdegStatus {
    guard(|| {
        let g = unsafe { graph_ref(g) }?;
        unsafe { write_out(out, g.order(), "out") }
    })
}

/// # Safety
/// `g` must be a live handle; `out` must be writable.
#[no_mangle]
pub unsafe extern "C" fn eqdeg_graph_edge_count(g: *const EqdegGraph, out: *mut usize) -> EqdegStatus {
    guard(|| {
        let g = unsafe { graph_ref(g) }?;
        unsafe { write_out(out, g.edge_count(), "out") }
    })
}

/// # Safety
/// `g` must be a live handle; `out` must be writable.
#[no_mangle]
pub unsafe extern "C" fn eqdeg_graph_degree(g: *const EqdegGraph, vertex: usize, out: *mut usize) -> EqdegStatus {
    guard(|| {
        let g = unsafe { graph_ref(g) }?;
        if vertex >= g.order() {
            return Err(Error::VertexOutOfRange { vertex, order: g.order() }.into());
        }
        unsafe { write_out(out, g.degree(vertex), "out") }
    })
}

/// Writes the graph6 encoding of `g`.
///
/// # Safety
/// `g` must be a live handle; `buf` must hold `cap` writable bytes;
/// `needed` may be null.
#[no_mangle]
pub unsafe extern "C" fn eqdeg_graph_to_graph6(
    g: *const EqdegGraph,
    buf: *mut c_char,
    cap: usize,
    needed: *mut usize,
) -> EqdegStatus {
    guard(|| {
        let g = unsafe { graph_ref(g) }?;
        unsafe { write_str(&g.to_graph6(), buf, cap, needed) }
    })
}

/// Writes the graph6 encoding of the canonical relabelling of `g`;
/// isomorphic graphs give identical strings.
///
/// # Safety
/// As for [`eqdeg_graph_to_graph6`].
#[no_mangle]
pub unsafe extern "C" fn eqdeg_canonical_graph6(
    g: *const EqdegGraph,
    buf: *mut c_char,
    cap: usize,
    needed: *mut usize,
) -> EqdegStatus {
    guard(|| {
        let g = unsafe { graph_ref(g) }?;
        let c = canonical_graph(g)?;
        unsafe { write_str(&c.to_graph6(), buf, cap, needed) }
    })
}

/// Looks for a path of `length` edges whose endpoints have equal degree.
/// On success `*found` says whether one exists and, if so, its
/// `length + 1` vertices are written to `path`.
///
/// # Safety
/// `g` must be a live handle; `found` must be writable; `path` must hold
/// `cap` writable entries.
#[no_mangle]
pub unsafe extern "C" fn eqdeg_find_equal_degree_path(
    g: *const EqdegGraph,
    length: usize,
    found: *mut bool,
    path: *mut usize,
    cap: usize,
) -> EqdegStatus {
    guard(|| {
        let g = unsafe { graph_ref(g) }?;
        if !(1..=MAX_PATH_LENGTH).contains(&length) {
            return Err(Error::PathLengthOutOfRange(length).into());
        }
        if cap < length + 1 {
            return Err(Fail(
                EqdegStatus::BufferTooSmall,
                format!("path buffer of {cap} entries, need {}", length + 1),
            ));
        }
        let witness = find_equal_degree_path(g, length)?;
        if let Some(w) = &witness {
            if path.is_null() {
                return Err(null("path"));
            }
            // SAFETY: cap >= length + 1 = w.vertices().len() writable entries.
            unsafe { ptr::copy_nonoverlapping(w.vertices().as_ptr(), path, w.vertices().len()) };
        }
        unsafe { write_out(found, witness.is_some(), "found") }
    })
}

fn instance(n: usize, delta: usize, beta: usize, b_size: usize) -> Result<LambdaInstance, Fail> {
    Ok(LambdaInstance::new(n, delta, beta, b_size)?)
}

/// Closed-form value of the degree-sum maximisation.
///
/// # Safety
/// `out` must be writable.
#[no_mangle]
pub unsafe extern "C" fn eqdeg_lambda_closed(
    n: usize,
    delta: usize,
    beta: usize,
    b_size: usize,
    out: *mut u64,
) -> EqdegStatus {
    guard(|| {
        let inst = instance(n, delta, beta, b_size)?;
        unsafe { write_out(out, lambda_closed(&inst), "out") }
    })
}

/// Exhaustive value of the degree-sum maximisation.
///
/// # Safety
/// `out` must be writable.
#[no_mangle]
pub unsafe extern "C" fn eqdeg_lambda_bruteforce(
    n: usize,
    delta: usize,
    beta: usize,
    b_size: usize,
    out: *mut u64,
) -> EqdegStatus {
    guard(|| {
        let inst = instance(n, delta, beta, b_size)?;
        unsafe { write_out(out, lambda_bruteforce(&inst)?, "out") }
    })
}

/// Largest edge count of a `vertices`-vertex graph with no equal-degree
/// path of `length` edges, and the number of extremal classes.
///
/// # Safety
/// `p` and `extremal_count` must be writable.
#[no_mangle]
pub unsafe extern "C" fn eqdeg_extremal(
    vertices: usize,
    length: usize,
    jobs: usize,
    p: *mut usize,
    extremal_count: *mut usize,
) -> EqdegStatus {
    guard(|| {
        if p.is_null() || extremal_count.is_null() {
            return Err(null("output"));
        }
        let r = compute_extremal(vertices, length, &SearchOptions::with_jobs(jobs))?;
        unsafe {
            write_out(p, r.p, "p")?;
            write_out(extremal_count, r.extremal.len(), "extremal_count")
        }
    })
}

/// Checks the length-3 extremal theorem at `vertices` vertices;
/// `EQDEG_STATUS_THEOREM_FALSIFIED` would mean a counterexample.
#[no_mangle]
pub extern "C" fn eqdeg_verify_theorem(vertices: usize, jobs: usize) -> EqdegStatus {
    guard(|| {
        verify_theorem(vertices, &SearchOptions::with_jobs(jobs))?;
        Ok(())
    })
}
