//! C ABI for the flipdist solver.
//!
//! Instances and witnesses are opaque handles owned by the caller and
//! released with their `_free` function. Every fallible call returns an
//! [`FdStatus`]; on failure `fd_last_error_message` describes the error for
//! the calling thread. Panics never cross the boundary.

use std::cell::RefCell;
use std::ffi::{c_char, CStr, CString};
use std::panic::{catch_unwind, AssertUnwindSafe};
use std::ptr;

use flipdist::oracle::bfs_distance;
use flipdist::{
    decide, exact_distance, is_trivial, Edge, Error, FlipRecord, Instance, Triangulation,
};

#[repr(C)]
#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub enum FdStatus {
    Ok = 0,
    NullPointer = 1,
    InvalidUtf8 = 2,
    Syntax = 3,
    InvalidTriangulation = 4,
    MismatchedSize = 5,
    SizeLimit = 6,
    CapExceeded = 7,
    MissingBudget = 8,
    IndexOutOfRange = 9,
    Panic = 10,
}

/// A flip of diagonal `(a, b)` into `(c, d)`.
#[repr(C)]
#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub struct FdFlip {
    pub a: u32,
    pub b: u32,
    pub c: u32,
    pub d: u32,
}

/// Two triangulations of the same polygon and an optional budget.
pub struct FdInstance {
    inner: Instance,
}

/// A shortest flip sequence.
pub struct FdWitness {
    flips: Vec<FlipRecord>,
}

thread_local! {
    static LAST_ERROR: RefCell<CString> = RefCell::new(CString::default());
}

fn set_error(msg: &str) {
    let c = CString::new(msg.replace('\0', " ")).unwrap_or_default();
    LAST_ERROR.with(|e| *e.borrow_mut() = c);
}

fn status_of(e: &Error) -> FdStatus {
    match e {
        Error::Syntax { .. } | Error::Tree(_) => FdStatus::Syntax,
        Error::MismatchedSize(..) => FdStatus::MismatchedSize,
        Error::SizeLimit { .. } => FdStatus::SizeLimit,
        Error::CapExceeded { .. } => FdStatus::CapExceeded,
        Error::MissingBudget => FdStatus::MissingBudget,
        _ => FdStatus::InvalidTriangulation,
    }
}

/// Runs `f`, translating errors and panics into a status.
fn guard(f: impl FnOnce() -> Result<(), (FdStatus, String)>) -> FdStatus {
    match catch_unwind(AssertUnwindSafe(f)) {
        Ok(Ok(())) => {
            set_error("");
            FdStatus::Ok
        }
        Ok(Err((status, msg))) => {
            set_error(&msg);
            status
        }
        Err(_) => {
            set_error("internal panic");
            FdStatus::Panic
        }
    }
}

fn fail(e: Error) -> (FdStatus, String) {
    (status_of(&e), e.to_string())
}

fn null(what: &str) -> (FdStatus, String) {
    (FdStatus::NullPointer, format!("{what} is null"))
}

unsafe fn inst_ref<'a>(p: *const FdInstance) -> Result<&'a Instance, (FdStatus, String)> {
    p.as_ref().map(|i| &i.inner).ok_or_else(|| null("instance"))
}

unsafe fn out<'a, T>(p: *mut T) -> Result<&'a mut T, (FdStatus, String)> {
    p.as_mut().ok_or_else(|| null("output pointer"))
}

fn boxed(inner: Instance) -> *mut FdInstance {
    Box::into_raw(Box::new(FdInstance { inner }))
}

/// Parses the text instance format from a NUL-terminated UTF-8 string.
///
/// # Safety
/// `text` must be a valid C string; `out_instance` must be writable.
#[no_mangle]
pub unsafe extern "C" fn fd_instance_parse(
    text: *const c_char,
    out_instance: *mut *mut FdInstance,
) -> FdStatus {
    guard(|| {
        let slot = out(out_instance)?;
        *slot = ptr::null_mut();
        if text.is_null() {
            return Err(null("text"));
        }
        let s = CStr::from_ptr(text)
            .to_str()
            .map_err(|e| (FdStatus::InvalidUtf8, e.to_string()))?;
        *slot = boxed(Instance::parse(s).map_err(fail)?);
        Ok(())
    })
}

fn edges(flat: &[u32]) -> Result<Vec<Edge>, (FdStatus, String)> {
    if !flat.len().is_multiple_of(2) {
        return Err((
            FdStatus::InvalidTriangulation,
            "diagonal list has odd length".into(),
        ));
    }
    flat.chunks(2)
        .map(|c| {
            if c[0] == c[1] {
                Err((
                    FdStatus::InvalidTriangulation,
                    format!("degenerate edge {} {}", c[0], c[1]),
                ))
            } else {
                Ok(Edge::new(c[0], c[1]))
            }
        })
        .collect()
}

unsafe fn slice<'a>(p: *const u32, len: usize) -> Result<&'a [u32], (FdStatus, String)> {
    if len == 0 {
        Ok(&[])
    } else if p.is_null() {
        Err(null("diagonal array"))
    } else {
        Ok(std::slice::from_raw_parts(p, len))
    }
}

/// Builds an instance from flat endpoint arrays `[a0, b0, a1, b1, ...]`
/// (`*_len` counts integers). The instance has no budget.
///
/// # Safety
/// Each array must hold `*_len` readable integers; `out_instance` must be writable.
#[no_mangle]
pub unsafe extern "C" fn fd_instance_new(
    m: u32,
    init: *const u32,
    init_len: usize,
    target: *const u32,
    target_len: usize,
    out_instance: *mut *mut FdInstance,
) -> FdStatus {
    guard(|| {
        let slot = out(out_instance)?;
        *slot = ptr::null_mut();
        let t1 = Triangulation::new(m, edges(slice(init, init_len)?)?).map_err(fail)?;
        let t2 = Triangulation::new(m, edges(slice(target, target_len)?)?).map_err(fail)?;
        *slot = boxed(Instance::new(t1, t2, None).map_err(fail)?);
        Ok(())
    })
}

/// Releases an instance. Null is ignored.
///
/// # Safety
/// `instance` must come from this library and not be used afterwards.
#[no_mangle]
pub unsafe extern "C" fn fd_instance_free(instance: *mut FdInstance) {
    if !instance.is_null() {
        drop(Box::from_raw(instance));
    }
}

/// Sets the flip budget; a negative value clears it.
///
/// # Safety
/// `instance` must be a live handle.
#[no_mangle]
pub unsafe extern "C" fn fd_instance_set_k(instance: *mut FdInstance, k: i64) -> FdStatus {
    guard(|| {
        let inst = instance.as_mut().ok_or_else(|| null("instance"))?;
        inst.inner.k = if k < 0 {
            None
        } else {
            Some(u32::try_from(k).unwrap_or(u32::MAX))
        };
        Ok(())
    })
}

/// Polygon vertex count.
///
/// # Safety
/// `instance` must be a live handle; `out_m` writable.
#[no_mangle]
pub unsafe extern "C" fn fd_instance_m(instance: *const FdInstance, out_m: *mut u32) -> FdStatus {
    guard(|| {
        *out(out_m)? = inst_ref(instance)?.m();
        Ok(())
    })
}

/// Diagonal count of each triangulation.
///
/// # Safety
/// `instance` must be a live handle; `out_phi` writable.
#[no_mangle]
pub unsafe extern "C" fn fd_instance_phi(
    instance: *const FdInstance,
    out_phi: *mut u32,
) -> FdStatus {
    guard(|| {
        *out(out_phi)? = inst_ref(instance)?.init.phi() as u32;
        Ok(())
    })
}

/// Serializes to the text format. Free the result with `fd_string_free`.
///
/// # Safety
/// `instance` must be a live handle; `out_text` writable.
#[no_mangle]
pub unsafe extern "C" fn fd_instance_serialize(
    instance: *const FdInstance,
    out_text: *mut *mut c_char,
) -> FdStatus {
    guard(|| {
        let slot = out(out_text)?;
        *slot = ptr::null_mut();
        let text = inst_ref(instance)?.to_text();
        *slot = CString::new(text).expect("no interior NUL").into_raw();
        Ok(())
    })
}

/// Releases a string returned by this library. Null is ignored.
///
/// # Safety
/// `s` must come from this library and not be used afterwards.
#[no_mangle]
pub unsafe extern "C" fn fd_string_free(s: *mut c_char) {
    if !s.is_null() {
        drop(CString::from_raw(s));
    }
}

/// Exact flip distance.
///
/// # Safety
/// `instance` must be a live handle; `out_distance` writable.
#[no_mangle]
pub unsafe extern "C" fn fd_distance(
    instance: *const FdInstance,
    out_distance: *mut u32,
) -> FdStatus {
    guard(|| {
        let slot = out(out_distance)?;
        let inst = inst_ref(instance)?;
        *slot = exact_distance(&inst.init, &inst.target)
            .map_err(fail)?
            .distance;
        Ok(())
    })
}

/// Decides whether the distance is at most `k`.
///
/// # Safety
/// `instance` must be a live handle; `out_yes` writable.
#[no_mangle]
pub unsafe extern "C" fn fd_decide(
    instance: *const FdInstance,
    k: u32,
    out_yes: *mut bool,
) -> FdStatus {
    guard(|| {
        let slot = out(out_yes)?;
        let inst = inst_ref(instance)?;
        *slot = decide(&inst.init, &inst.target, k).map_err(fail)?.is_some();
        Ok(())
    })
}

/// Decides against the instance's own budget; `FD_STATUS_MISSING_BUDGET`
/// if it has none.
///
/// # Safety
/// `instance` must be a live handle; `out_yes` writable.
#[no_mangle]
pub unsafe extern "C" fn fd_solve_decision(
    instance: *const FdInstance,
    out_yes: *mut bool,
) -> FdStatus {
    guard(|| {
        let slot = out(out_yes)?;
        *slot = flipdist::solve_decision(inst_ref(instance)?).map_err(fail)?;
        Ok(())
    })
}

/// Distance by breadth-first search over the whole flip graph (m <= 14).
///
/// # Safety
/// `instance` must be a live handle; `out_distance` writable.
#[no_mangle]
pub unsafe extern "C" fn fd_oracle_distance(
    instance: *const FdInstance,
    out_distance: *mut u32,
) -> FdStatus {
    guard(|| {
        let slot = out(out_distance)?;
        let inst = inst_ref(instance)?;
        *slot = bfs_distance(&inst.init, &inst.target).map_err(fail)?;
        Ok(())
    })
}

/// Whether the pair is solved by free flips alone; if so `out_distance`
/// receives the distance, otherwise it is left untouched.
///
/// # Safety
/// `instance` must be a live handle; outputs writable.
#[no_mangle]
pub unsafe extern "C" fn fd_is_trivial(
    instance: *const FdInstance,
    out_trivial: *mut bool,
    out_distance: *mut u32,
) -> FdStatus {
    guard(|| {
        let trivial = out(out_trivial)?;
        let distance = out(out_distance)?;
        let inst = inst_ref(instance)?;
        let r = is_trivial(&inst.init, &inst.target).map_err(fail)?;
        *trivial = r.is_some();
        if let Some(d) = r {
            *distance = d;
        }
        Ok(())
    })
}

/// Computes a shortest flip sequence. Free it with `fd_witness_free`.
///
/// # Safety
/// `instance` must be a live handle; `out_witness` writable.
#[no_mangle]
pub unsafe extern "C" fn fd_witness(
    instance: *const FdInstance,
    out_witness: *mut *mut FdWitness,
) -> FdStatus {
    guard(|| {
        let slot = out(out_witness)?;
        *slot = ptr::null_mut();
        let inst = inst_ref(instance)?;
        let sol = exact_distance(&inst.init, &inst.target).map_err(fail)?;
        *slot = Box::into_raw(Box::new(FdWitness {
            flips: sol.witness.flips,
        }));
        Ok(())
    })
}

/// Number of flips in the witness; 0 for null.
///
/// # Safety
/// `witness` must be a live handle or null.
#[no_mangle]
pub unsafe extern "C" fn fd_witness_len(witness: *const FdWitness) -> usize {
    witness.as_ref().map_or(0, |w| w.flips.len())
}

/// The `index`-th flip of the witness.
///
/// # Safety
/// `witness` must be a live handle; `out_flip` writable.
#[no_mangle]
pub unsafe extern "C" fn fd_witness_get(
    witness: *const FdWitness,
    index: usize,
    out_flip: *mut FdFlip,
) -> FdStatus {
    guard(|| {
        let slot = out(out_flip)?;
        let w = witness.as_ref().ok_or_else(|| null("witness"))?;
        let f = w.flips.get(index).ok_or_else(|| {
            (
                FdStatus::IndexOutOfRange,
                format!("index {index} out of {}", w.flips.len()),
            )
        })?;
        *slot = FdFlip {
            a: f.underlying.a,
            b: f.underlying.b,
            c: f.created.a,
            d: f.created.b,
        };
        Ok(())
    })
}

/// Releases a witness. Null is ignored.
///
/// # Safety
/// `witness` must come from this library and not be used afterwards.
#[no_mangle]
pub unsafe extern "C" fn fd_witness_free(witness: *mut FdWitness) {
    if !witness.is_null() {
        drop(Box::from_raw(witness));
    }
}

/// Message for the last failed call on this thread, empty after a success.
/// Valid until the next call into this library on the same thread.
#[no_mangle]
pub extern "C" fn fd_last_error_message() -> *const c_char {
    LAST_ERROR.with(|e| e.borrow().as_ptr())
}

/// Library version as a static C string.
#[no_mangle]
pub extern "C" fn fd_version() -> *const c_char {
    concat!(env!("CARGO_PKG_VERSION"), "\0").as_ptr().cast()
}
