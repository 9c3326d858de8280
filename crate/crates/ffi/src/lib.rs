//! C ABI over `semiclass`.
//!
//! Objects cross the boundary as opaque handles, each released by the
//! matching `sc_*_free`. Every fallible
//! call returns an [`ScStatus`]; on failure `sc_last_error` holds a message
//! for the calling thread. Strings returned to C are owned by the caller and
//! released with `sc_string_free`.
//!
//! # Safety
//!
//! Pointer arguments must be null or valid for the access described by each
//! function. Null handles and null output pointers are reported as
//! `SC_STATUS_NULL_POINTER`, never dereferenced.

use std::cell::RefCell;
use std::ffi::{c_char, CStr, CString};
use std::panic::{catch_unwind, AssertUnwindSafe};
use std::ptr;

use semiclass::bialgebra::{cobracket_from_r, cybe_residual, preset_r, RMatrix};
use semiclass::chart::Chart;
use semiclass::json::{parse_algebra, parse_chart, tensor_from_value, tensor_value};
use semiclass::lie::{preset_algebra, LieAlgebra};
use semiclass::moduli::moduli_dimension;
use semiclass::preconnection::{canonical_xi, j1_obstruction, XiHat};
use semiclass::rational::format_rational;
use semiclass::tensor::Tensor;
use semiclass::Error;

/// Result codes; zero is success.
#[repr(C)]
#[derive(Clone, Copy, Debug, PartialEq, Eq)]
pub enum ScStatus {
    Ok = 0,
    NullPointer = 1,
    InvalidUtf8 = 2,
    Parse = 3,
    UnknownPreset = 4,
    NoRMatrix = 5,
    InvalidInput = 6,
    MissingOmegaLower = 7,
    OutOfRange = 8,
    Panic = 9,
}

/// A Lie algebra with an optional stored r-matrix.
pub struct ScAlgebra {
    algebra: LieAlgebra,
    r: Option<RMatrix>,
}

/// A dense exact tensor.
pub struct ScTensor(Tensor);

/// A polynomial Poisson chart.
pub struct ScChart(Chart);

thread_local! {
    static LAST_ERROR: RefCell<CString> = RefCell::new(CString::default());
}

fn set_error(msg: &str) {
    let c = CString::new(msg.replace('\0', " ")).unwrap_or_default();
    LAST_ERROR.with(|e| *e.borrow_mut() = c);
}

fn status_of(e: &Error) -> ScStatus {
    match e {
        Error::Parse { .. } => ScStatus::Parse,
        Error::UnknownPreset(_) => ScStatus::UnknownPreset,
        Error::NoStandardR(_) => ScStatus::NoRMatrix,
        Error::MissingOmegaLower => ScStatus::MissingOmegaLower,
        Error::AxisOutOfRange { .. } => ScStatus::OutOfRange,
        _ => ScStatus::InvalidInput,
    }
}

struct Fail(ScStatus, String);

impl From<Error> for Fail {
    fn from(e: Error) -> Self {
        Fail(status_of(&e), e.to_string())
    }
}

fn guard(f: impl FnOnce() -> Result<(), Fail>) -> ScStatus {
    match catch_unwind(AssertUnwindSafe(f)) {
        Ok(Ok(())) => {
            set_error("");
            ScStatus::Ok
        }
        Ok(Err(Fail(s, msg))) => {
            set_error(&msg);
            s
        }
        Err(_) => {
            set_error("internal panic");
            ScStatus::Panic
        }
    }
}

fn null() -> Fail {
    Fail(ScStatus::NullPointer, "null pointer argument".into())
}

unsafe fn str_arg<'a>(p: *const c_char) -> Result<&'a str, Fail> {
    if p.is_null() {
        return Err(null());
    }
    unsafe { CStr::from_ptr(p) }
        .to_str()
        .map_err(|_| Fail(ScStatus::InvalidUtf8, "argument is not UTF-8".into()))
}

unsafe fn deref<'a, T>(p: *const T) -> Result<&'a T, Fail> {
    unsafe { p.as_ref() }.ok_or_else(null)
}

unsafe fn put<T>(out: *mut *mut T, v: T) -> Result<(), Fail> {
    if out.is_null() {
        return Err(null());
    }
    unsafe { *out = Box::into_raw(Box::new(v)) };
    Ok(())
}

fn owned_string(s: String) -> *mut c_char {
    CString::new(s).map(CString::into_raw).unwrap_or(ptr::null_mut())
}

unsafe fn put_string(out: *mut *mut c_char, s: String) -> Result<(), Fail> {
    if out.is_null() {
        return Err(null());
    }
    unsafe { *out = owned_string(s) };
    Ok(())
}

fn r_of(a: &ScAlgebra) -> Result<&RMatrix, Fail> {
    a.r.as_ref().ok_or_else(|| {
        Fail(ScStatus::NoRMatrix, format!("algebra `{}` has no r-matrix", a.algebra.name()))
    })
}

/// Message for the last failure on this thread; empty after a success.
/// Valid until the next `sc_*` call on the same thread.
#[no_mangle]
pub extern "C" fn sc_last_error() -> *const c_char {
    LAST_ERROR.with(|e| e.borrow().as_ptr())
}

/// Releases a string returned by this library.
///
/// # Safety
/// `s` must be null or a pointer obtained from this library, freed once.
#[no_mangle]
pub unsafe extern "C" fn sc_string_free(s: *mut c_char) {
    if !s.is_null() {
        drop(unsafe { CString::from_raw(s) });
    }
}

/// One of `sl2`, `sl3`, `sl4`, `so5`, `b2`, with its stored r-matrix if any.
///
/// # Safety
/// `name` must be a NUL-terminated string; `out` must be writable.
#[no_mangle]
pub unsafe extern "C" fn sc_algebra_preset(name: *const c_char, out: *mut *mut ScAlgebra) -> ScStatus {
    guard(|| {
        let name = unsafe { str_arg(name) }?;
        let algebra = preset_algebra(name)?;
        let r = match preset_r(&algebra) {
            Ok(r) => Some(r),
            Err(Error::NoStandardR(_)) => None,
            Err(e) => return Err(e.into()),
        };
        unsafe { put(out, ScAlgebra { algebra, r }) }
    })
}

/// Parses the algebra JSON schema `{dim, basis_names, f, r?}`.
///
/// # Safety
/// `json` must be a NUL-terminated string; `out` must be writable.
#[no_mangle]
pub unsafe extern "C" fn sc_algebra_from_json(json: *const c_char, out: *mut *mut ScAlgebra) -> ScStatus {
    guard(|| {
        let (algebra, r) = parse_algebra(unsafe { str_arg(json) }?)?;
        unsafe { put(out, ScAlgebra { algebra, r }) }
    })
}

/// # Safety
/// `a` must be null or a handle from this library, freed once.
#[no_mangle]
pub unsafe extern "C" fn sc_algebra_free(a: *mut ScAlgebra) {
    if !a.is_null() {
        drop(unsafe { Box::from_raw(a) });
    }
}

/// Dimension of the algebra, or 0 for a null handle.
///
/// # Safety
/// `a` must be null or a live handle.
#[no_mangle]
pub unsafe extern "C" fn sc_algebra_dim(a: *const ScAlgebra) -> usize {
    unsafe { a.as_ref() }.map_or(0, |a| a.algebra.dim())
}

/// `[[r, r]]` as a rank-3 tensor.
///
/// # Safety
/// `a` must be a live handle; `out` must be writable.
#[no_mangle]
pub unsafe extern "C" fn sc_cybe_residual(a: *const ScAlgebra, out: *mut *mut ScTensor) -> ScStatus {
    guard(|| {
        let a = unsafe { deref(a) }?;
        let t = cybe_residual(&a.algebra, r_of(a)?)?;
        unsafe { put(out, ScTensor(t)) }
    })
}

/// The cobracket `δ = dr`, input leg first.
///
/// # Safety
/// `a` must be a live handle; `out` must be writable.
#[no_mangle]
pub unsafe extern "C" fn sc_cobracket(a: *const ScAlgebra, out: *mut *mut ScTensor) -> ScStatus {
    guard(|| {
        let a = unsafe { deref(a) }?;
        let d = cobracket_from_r(&a.algebra, r_of(a)?)?;
        unsafe { put(out, ScTensor(d.value)) }
    })
}

/// The canonical `Ξ`, whose `Ξ̂` vanishes.
///
/// # Safety
/// `a` must be a live handle; `out` must be writable.
#[no_mangle]
pub unsafe extern "C" fn sc_canonical_xi(a: *const ScAlgebra, out: *mut *mut ScTensor) -> ScStatus {
    guard(|| {
        let a = unsafe { deref(a) }?;
        let xi = canonical_xi(&a.algebra, r_of(a)?);
        unsafe { put(out, ScTensor(xi.value)) }
    })
}

/// Curvature obstruction for `xihat`; a null `xihat` means `Ξ̂ = 0`.
///
/// # Safety
/// `a` must be a live handle, `xihat` null or live; `out` must be writable.
#[no_mangle]
pub unsafe extern "C" fn sc_j1_obstruction(
    a: *const ScAlgebra,
    xihat: *const ScTensor,
    out: *mut *mut ScTensor,
) -> ScStatus {
    guard(|| {
        let a = unsafe { deref(a) }?;
        let value = match unsafe { xihat.as_ref() } {
            Some(t) => t.0.clone(),
            None => Tensor::zeros(3, a.algebra.dim()),
        };
        let t = j1_obstruction(&a.algebra, &XiHat { value }, r_of(a)?)?;
        unsafe { put(out, ScTensor(t)) }
    })
}

/// Dimension of the space of ad-invariant `Ξ̂`.
///
/// # Safety
/// `a` must be a live handle; `out` must be writable.
#[no_mangle]
pub unsafe extern "C" fn sc_moduli_dimension(a: *const ScAlgebra, out: *mut usize) -> ScStatus {
    guard(|| {
        let a = unsafe { deref(a) }?;
        if out.is_null() {
            return Err(null());
        }
        unsafe { *out = moduli_dimension(&a.algebra).dimension };
        Ok(())
    })
}

/// Builds a tensor from nested JSON arrays of rational strings.
///
/// # Safety
/// `json` must be a NUL-terminated string; `out` must be writable.
#[no_mangle]
pub unsafe extern "C" fn sc_tensor_from_json(
    json: *const c_char,
    rank: usize,
    dim: usize,
    out: *mut *mut ScTensor,
) -> ScStatus {
    guard(|| {
        let text = unsafe { str_arg(json) }?;
        let v: serde_json::Value = serde_json::from_str(text).map_err(|e| {
            Fail(ScStatus::Parse, format!("parse error at line {} column {}: {e}", e.line(), e.column()))
        })?;
        let t = tensor_from_value(&v, rank, dim, "tensor")?;
        unsafe { put(out, ScTensor(t)) }
    })
}

/// # Safety
/// `t` must be null or a handle from this library, freed once.
#[no_mangle]
pub unsafe extern "C" fn sc_tensor_free(t: *mut ScTensor) {
    if !t.is_null() {
        drop(unsafe { Box::from_raw(t) });
    }
}

/// # Safety
/// `t` must be null or a live handle.
#[no_mangle]
pub unsafe extern "C" fn sc_tensor_rank(t: *const ScTensor) -> usize {
    unsafe { t.as_ref() }.map_or(0, |t| t.0.rank())
}

/// # Safety
/// `t` must be null or a live handle.
#[no_mangle]
pub unsafe extern "C" fn sc_tensor_dim(t: *const ScTensor) -> usize {
    unsafe { t.as_ref() }.map_or(0, |t| t.0.dim())
}

/// Exact zero test.
///
/// # Safety
/// `t` must be a live handle; `out` must be writable.
#[no_mangle]
pub unsafe extern "C" fn sc_tensor_is_zero(t: *const ScTensor, out: *mut bool) -> ScStatus {
    guard(|| {
        let t = unsafe { deref(t) }?;
        if out.is_null() {
            return Err(null());
        }
        unsafe { *out = t.0.is_zero() };
        Ok(())
    })
}

/// One entry as a `"p/q"` string; `index` holds `rank` indices.
///
/// # Safety
/// `t` must be a live handle, `index` valid for `len` reads, `out` writable.
#[no_mangle]
pub unsafe extern "C" fn sc_tensor_entry(
    t: *const ScTensor,
    index: *const usize,
    len: usize,
    out: *mut *mut c_char,
) -> ScStatus {
    guard(|| {
        let t = unsafe { deref(t) }?;
        if index.is_null() && len > 0 {
            return Err(null());
        }
        let idx: &[usize] = if len == 0 { &[] } else { unsafe { std::slice::from_raw_parts(index, len) } };
        if idx.len() != t.0.rank() || idx.iter().any(|&i| i >= t.0.dim()) {
            return Err(Fail(
                ScStatus::OutOfRange,
                format!("index {idx:?} out of range for rank {} dim {}", t.0.rank(), t.0.dim()),
            ));
        }
        unsafe { put_string(out, format_rational(t.0.get(idx))) }
    })
}

/// Nested JSON arrays of `"p/q"` strings.
///
/// # Safety
/// `t` must be a live handle; `out` must be writable.
#[no_mangle]
pub unsafe extern "C" fn sc_tensor_to_json(t: *const ScTensor, out: *mut *mut c_char) -> ScStatus {
    guard(|| {
        let t = unsafe { deref(t) }?;
        unsafe { put_string(out, tensor_value(&t.0).to_string()) }
    })
}

/// Parses the chart JSON schema `{n, omega, gamma, omega_lower?}`.
///
/// # Safety
/// `json` must be a NUL-terminated string; `out` must be writable.
#[no_mangle]
pub unsafe extern "C" fn sc_chart_from_json(json: *const c_char, out: *mut *mut ScChart) -> ScStatus {
    guard(|| {
        let c = parse_chart(unsafe { str_arg(json) }?)?;
        unsafe { put(out, ScChart(c)) }
    })
}

/// The constant symplectic torus chart.
///
/// # Safety
/// `out` must be writable.
#[no_mangle]
pub unsafe extern "C" fn sc_chart_torus(out: *mut *mut ScChart) -> ScStatus {
    guard(|| unsafe { put(out, ScChart(Chart::torus())) })
}

/// # Safety
/// `c` must be null or a handle from this library, freed once.
#[no_mangle]
pub unsafe extern "C" fn sc_chart_free(c: *mut ScChart) {
    if !c.is_null() {
        drop(unsafe { Box::from_raw(c) });
    }
}

/// `∇ω = 0` and `T = 0`; needs `omega_lower`.
///
/// # Safety
/// `c` must be a live handle; `out` must be writable.
#[no_mangle]
pub unsafe extern "C" fn sc_chart_is_central(c: *const ScChart, out: *mut bool) -> ScStatus {
    guard(|| {
        let c = unsafe { deref(c) }?;
        if out.is_null() {
            return Err(null());
        }
        unsafe { *out = c.0.centrality_predicate()? };
        Ok(())
    })
}

/// Runs the command line with `argc` arguments (without the program name).
/// Writes the exit code to `out_code` and, unless it is 1, the JSON report
/// to `out_json`. Exit code 1 also returns `SC_STATUS_INVALID_INPUT`.
///
/// # Safety
/// `argv` must hold `argc` NUL-terminated strings; outputs must be writable.
#[no_mangle]
pub unsafe extern "C" fn sc_cli_run(
    argc: usize,
    argv: *const *const c_char,
    out_json: *mut *mut c_char,
    out_code: *mut i32,
) -> ScStatus {
    guard(|| {
        if (argv.is_null() && argc > 0) || out_code.is_null() {
            return Err(null());
        }
        let mut args = vec!["semiclass".to_string()];
        for i in 0..argc {
            args.push(unsafe { str_arg(*argv.add(i)) }?.to_string());
        }
        let o = semiclass::cli::run(args);
        unsafe { *out_code = o.code };
        if o.code == 1 {
            return Err(Fail(ScStatus::InvalidInput, o.stderr.trim_end().to_string()));
        }
        unsafe { put_string(out_json, o.stdout) }
    })
}
