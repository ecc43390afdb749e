//! C ABI over `wielandt`.
//!
//! Groups are opaque `WlGroup` handles created by [`wl_group_parse`] or
//! [`wl_k_closure`] and released with [`wl_group_free`]. Every fallible call
//! returns a [`WlStatus`]; on failure [`wl_last_error`] describes the cause
//! for the calling thread. Strings returned to the caller are released with
//! [`wl_string_free`].

use std::cell::RefCell;
use std::ffi::{c_char, CStr, CString};
use std::panic::{catch_unwind, UnwindSafe};
use std::ptr;

use wielandt::structure::base_number;
use wielandt::totality::{classify, Verdict};
use wielandt::{is_k_closed, k_closure, Error, GeneratedGroup, Limits};

#[repr(C)]
#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub enum WlStatus {
    Ok = 0,
    NullPointer = 1,
    InvalidUtf8 = 2,
    Parse = 3,
    DegreeMismatch = 4,
    PointOutOfRange = 5,
    CapExceeded = 6,
    NotNilpotent = 7,
    HypothesisNotMet = 8,
    InvalidArgument = 9,
    Other = 10,
    Panic = 11,
}

/// Opaque permutation group.
pub struct WlGroup {
    inner: GeneratedGroup,
}

thread_local! {
    static LAST_ERROR: RefCell<Option<CString>> = const { RefCell::new(None) };
}

fn set_error(msg: String) {
    let c =
        CString::new(msg).unwrap_or_else(|_| CString::new("error message contained NUL").unwrap());
    LAST_ERROR.with(|e| *e.borrow_mut() = Some(c));
}

fn status_of(e: &Error) -> WlStatus {
    match e {
        Error::Parse(_) | Error::UnknownTag(_) => WlStatus::Parse,
        Error::DegreeMismatch { .. } => WlStatus::DegreeMismatch,
        Error::PointOutOfRange { .. } => WlStatus::PointOutOfRange,
        Error::CapExceeded { .. } => WlStatus::CapExceeded,
        Error::NotNilpotent(_) => WlStatus::NotNilpotent,
        Error::HypothesisNotMet { .. } => WlStatus::HypothesisNotMet,
        Error::InvalidArgument(_) | Error::NotPrime(_) => WlStatus::InvalidArgument,
        Error::NonAbelianInput => WlStatus::Other,
    }
}

fn guard(f: impl FnOnce() -> Result<(), WlStatus> + UnwindSafe) -> WlStatus {
    match catch_unwind(f) {
        Ok(Ok(())) => WlStatus::Ok,
        Ok(Err(s)) => s,
        Err(_) => {
            set_error("internal panic".into());
            WlStatus::Panic
        }
    }
}

fn lib<T>(r: wielandt::Result<T>) -> Result<T, WlStatus> {
    r.map_err(|e| {
        set_error(e.to_string());
        status_of(&e)
    })
}

unsafe fn group<'a>(g: *const WlGroup) -> Result<&'a GeneratedGroup, WlStatus> {
    g.as_ref().map(|h| &h.inner).ok_or_else(|| {
        set_error("null group handle".into());
        WlStatus::NullPointer
    })
}

unsafe fn out<'a, T>(p: *mut T) -> Result<&'a mut T, WlStatus> {
    p.as_mut().ok_or_else(|| {
        set_error("null output pointer".into());
        WlStatus::NullPointer
    })
}

/// Parses `"degree: (1 2 3), (1 2)"` into a new handle stored in `*out_group`.
///
/// # Safety
/// `spec` must be a NUL-terminated string and `out_group` a valid pointer.
#[no_mangle]
pub unsafe extern "C" fn wl_group_parse(
    spec: *const c_char,
    out_group: *mut *mut WlGroup,
) -> WlStatus {
    guard(|| {
        let slot = out(out_group)?;
        if spec.is_null() {
            set_error("null spec".into());
            return Err(WlStatus::NullPointer);
        }
        let text = CStr::from_ptr(spec).to_str().map_err(|_| {
            set_error("spec is not UTF-8".into());
            WlStatus::InvalidUtf8
        })?;
        let inner = lib(GeneratedGroup::parse(text))?;
        *slot = Box::into_raw(Box::new(WlGroup { inner }));
        Ok(())
    })
}

/// Releases a handle. Null is ignored.
///
/// # Safety
/// `g` must come from this library and not be used afterwards.
#[no_mangle]
pub unsafe extern "C" fn wl_group_free(g: *mut WlGroup) {
    if !g.is_null() {
        drop(Box::from_raw(g));
    }
}

/// # Safety
/// `g` must be a live handle and `out_order` a valid pointer.
#[no_mangle]
pub unsafe extern "C" fn wl_group_order(g: *const WlGroup, out_order: *mut u64) -> WlStatus {
    guard(|| {
        *out(out_order)? = group(g)?.order();
        Ok(())
    })
}

/// # Safety
/// `g` must be a live handle and `out_degree` a valid pointer.
#[no_mangle]
pub unsafe extern "C" fn wl_group_degree(g: *const WlGroup, out_degree: *mut usize) -> WlStatus {
    guard(|| {
        *out(out_degree)? = group(g)?.degree();
        Ok(())
    })
}

/// Writes the group in `"degree: gen, gen"` form. Free with [`wl_string_free`].
///
/// # Safety
/// `g` must be a live handle and `out_text` a valid pointer.
#[no_mangle]
pub unsafe extern "C" fn wl_group_to_string(
    g: *const WlGroup,
    out_text: *mut *mut c_char,
) -> WlStatus {
    guard(|| {
        let slot = out(out_text)?;
        let text = CString::new(group(g)?.to_string()).map_err(|_| WlStatus::Other)?;
        *slot = text.into_raw();
        Ok(())
    })
}

/// # Safety
/// `s` must come from this library, or be null.
#[no_mangle]
pub unsafe extern "C" fn wl_string_free(s: *mut c_char) {
    if !s.is_null() {
        drop(CString::from_raw(s));
    }
}

/// Computes the k-closure as a new handle.
///
/// # Safety
/// `g` must be a live handle and `out_group` a valid pointer.
#[no_mangle]
pub unsafe extern "C" fn wl_k_closure(
    g: *const WlGroup,
    k: usize,
    out_group: *mut *mut WlGroup,
) -> WlStatus {
    guard(|| {
        let slot = out(out_group)?;
        let inner = lib(k_closure(group(g)?, k, &Limits::default()))?;
        *slot = Box::into_raw(Box::new(WlGroup { inner }));
        Ok(())
    })
}

/// # Safety
/// `g` must be a live handle and `out_closed` a valid pointer.
#[no_mangle]
pub unsafe extern "C" fn wl_is_k_closed(
    g: *const WlGroup,
    k: usize,
    out_closed: *mut bool,
) -> WlStatus {
    guard(|| {
        *out(out_closed)? = lib(is_k_closed(group(g)?, k, &Limits::default()))?;
        Ok(())
    })
}

/// # Safety
/// `g` must be a live handle and `out_base` a valid pointer.
#[no_mangle]
pub unsafe extern "C" fn wl_base_number(g: *const WlGroup, out_base: *mut usize) -> WlStatus {
    guard(|| {
        *out(out_base)? = lib(base_number(group(g)?, &Limits::default()))?;
        Ok(())
    })
}

/// Decides whether the abstract group of `g` is totally k-closed, using the
/// structural criteria only.
///
/// # Safety
/// `g` must be a live handle and `out_closed` a valid pointer.
#[no_mangle]
pub unsafe extern "C" fn wl_classify(
    g: *const WlGroup,
    k: usize,
    out_closed: *mut bool,
) -> WlStatus {
    guard(|| {
        let slot = out(out_closed)?;
        match lib(classify(group(g)?, k, &Limits::default()))? {
            Verdict::TheoremDecided { totally_closed, .. } => {
                *slot = totally_closed;
                Ok(())
            }
            _ => Err(WlStatus::Other),
        }
    })
}

/// Message for the last failed call on this thread, or null. The pointer
/// stays valid until the next failing call on the same thread.
#[no_mangle]
pub extern "C" fn wl_last_error() -> *const c_char {
    LAST_ERROR.with(|e| e.borrow().as_ref().map_or(ptr::null(), |c| c.as_ptr()))
}
