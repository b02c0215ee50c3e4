//! C interface to `dgkoszul`.
//!
//! Algebras and presentations are passed around as opaque `DgkStructure`
//! handles. Every fallible function returns a `DgkStatus`; on failure the
//! message is kept per thread and can be fetched with
//! [`dgk_last_error_message`]. Strings handed out by this library must be
//! released with [`dgk_string_free`], handles with [`dgk_structure_free`].

use std::cell::RefCell;
use std::ffi::{c_char, c_int, CStr, CString};
use std::panic::{catch_unwind, AssertUnwindSafe};
use std::ptr;

use dgkoszul::assoc::mc_check;
use dgkoszul::expr::parse_homogeneous;
use dgkoszul::format::{self, Structure};
use dgkoszul::koszul::{bar, ce, cobar, harrison, truncate, Truncation};
use dgkoszul::lie::mc_check_lie;
use dgkoszul::{fixtures, Error};

/// Result codes. `DGK_STATUS_OK` is zero.
#[repr(C)]
#[derive(Clone, Copy, Debug, PartialEq, Eq)]
pub enum DgkStatus {
    Ok = 0,
    NullArgument = 1,
    InvalidUtf8 = 2,
    Parse = 3,
    Validation = 4,
    UnknownFixture = 5,
    UnknownLabel = 6,
    WrongKind = 7,
    NotMaurerCartan = 8,
    NotNilpotent = 9,
    NotCommutative = 10,
    Verification = 11,
    Other = 12,
    Panic = 13,
}

#[repr(C)]
#[derive(Clone, Copy, Debug, PartialEq, Eq)]
pub enum DgkKind {
    Dga = 0,
    Dgla = 1,
    Formal = 2,
}

/// An algebra or presentation.
pub struct DgkStructure(Structure);

thread_local! {
    static LAST_ERROR: RefCell<Option<CString>> = const { RefCell::new(None) };
}

fn set_last_error(message: &str) {
    let c = CString::new(message.replace('\0', " ")).unwrap_or_default();
    LAST_ERROR.with(|e| *e.borrow_mut() = Some(c));
}

fn status_of(e: &Error) -> DgkStatus {
    match e {
        Error::Parse { .. } | Error::Scalar(_) | Error::Expression { .. } => DgkStatus::Parse,
        Error::Validation(_) | Error::DuplicateLabel(_) | Error::WrongDegree { .. } | Error::Inhomogeneous => {
            DgkStatus::Validation
        }
        Error::UnknownFixture(_) => DgkStatus::UnknownFixture,
        Error::UnknownLabel(_) => DgkStatus::UnknownLabel,
        Error::FlavorMismatch { .. } | Error::Missing(_) => DgkStatus::WrongKind,
        Error::NotMaurerCartan(_) => DgkStatus::NotMaurerCartan,
        Error::NotNilpotent => DgkStatus::NotNilpotent,
        Error::NotCommutative(_) => DgkStatus::NotCommutative,
        Error::Verification(_) | Error::DSquaredNonzero(_) | Error::NotChainMap(_) => DgkStatus::Verification,
        _ => DgkStatus::Other,
    }
}

struct Fail(DgkStatus, String);

impl From<Error> for Fail {
    fn from(e: Error) -> Self {
        Fail(status_of(&e), e.to_string())
    }
}

/// Runs `body`, converting errors and panics into a status code.
fn guard(body: impl FnOnce() -> Result<(), Fail>) -> DgkStatus {
    match catch_unwind(AssertUnwindSafe(body)) {
        Ok(Ok(())) => DgkStatus::Ok,
        Ok(Err(Fail(status, message))) => {
            set_last_error(&message);
            status
        }
        Err(_) => {
            set_last_error("internal panic");
            DgkStatus::Panic
        }
    }
}

unsafe fn read_str<'a>(p: *const c_char, what: &str) -> Result<&'a str, Fail> {
    if p.is_null() {
        return Err(Fail(DgkStatus::NullArgument, format!("{what} is null")));
    }
    CStr::from_ptr(p)
        .to_str()
        .map_err(|_| Fail(DgkStatus::InvalidUtf8, format!("{what} is not UTF-8")))
}

unsafe fn handle<'a>(h: *const DgkStructure) -> Result<&'a Structure, Fail> {
    h.as_ref()
        .map(|s| &s.0)
        .ok_or_else(|| Fail(DgkStatus::NullArgument, "structure handle is null".into()))
}

fn check_out<T>(out: *mut T) -> Result<(), Fail> {
    if out.is_null() {
        return Err(Fail(DgkStatus::NullArgument, "output pointer is null".into()));
    }
    Ok(())
}

fn into_c_string(s: String) -> *mut c_char {
    CString::new(s.replace('\0', " ")).map_or(ptr::null_mut(), CString::into_raw)
}

fn wrong_kind(expected: &str, s: &Structure) -> Fail {
    Fail(
        DgkStatus::WrongKind,
        format!("expected a {expected}, found a {}", s.kind()),
    )
}

/// Last error message on this thread, or null if there was none. The copy
/// must be released with `dgk_string_free`.
#[no_mangle]
pub extern "C" fn dgk_last_error_message() -> *mut c_char {
    LAST_ERROR.with(|e| e.borrow().as_ref().map_or(ptr::null_mut(), |c| c.clone().into_raw()))
}

#[no_mangle]
pub extern "C" fn dgk_clear_last_error() {
    LAST_ERROR.with(|e| *e.borrow_mut() = None);
}

/// # Safety
/// `s` must be null or a string returned by this library, not yet freed.
#[no_mangle]
pub unsafe extern "C" fn dgk_string_free(s: *mut c_char) {
    if !s.is_null() {
        drop(CString::from_raw(s));
    }
}

/// # Safety
/// `h` must be null or a handle returned by this library, not yet freed.
#[no_mangle]
pub unsafe extern "C" fn dgk_structure_free(h: *mut DgkStructure) {
    if !h.is_null() {
        drop(Box::from_raw(h));
    }
}

/// Loads a built-in fixture such as `"sl2"` or `"interval"`.
///
/// # Safety
/// `name` must be a NUL-terminated string; `out` must be writable.
#[no_mangle]
pub unsafe extern "C" fn dgk_fixture_load(name: *const c_char, out: *mut *mut DgkStructure) -> DgkStatus {
    guard(|| {
        check_out(out)?;
        let s = fixtures::load(read_str(name, "name")?)?;
        *out = Box::into_raw(Box::new(DgkStructure(s)));
        Ok(())
    })
}

/// Parses the text format.
///
/// # Safety
/// `text` must be a NUL-terminated string; `out` must be writable.
#[no_mangle]
pub unsafe extern "C" fn dgk_structure_parse(text: *const c_char, out: *mut *mut DgkStructure) -> DgkStatus {
    guard(|| {
        check_out(out)?;
        let s = format::parse(read_str(text, "text")?)?;
        *out = Box::into_raw(Box::new(DgkStructure(s)));
        Ok(())
    })
}

/// Canonical text of a structure.
///
/// # Safety
/// `h` must be a live handle; `out` must be writable.
#[no_mangle]
pub unsafe extern "C" fn dgk_structure_print(h: *const DgkStructure, out: *mut *mut c_char) -> DgkStatus {
    guard(|| {
        check_out(out)?;
        *out = into_c_string(format::print(handle(h)?));
        Ok(())
    })
}

/// # Safety
/// `h` must be a live handle; `out` must be writable.
#[no_mangle]
pub unsafe extern "C" fn dgk_structure_kind(h: *const DgkStructure, out: *mut DgkKind) -> DgkStatus {
    guard(|| {
        check_out(out)?;
        *out = match handle(h)? {
            Structure::Dga(_) => DgkKind::Dga,
            Structure::Dgla(_) => DgkKind::Dgla,
            Structure::Formal(_) => DgkKind::Formal,
        };
        Ok(())
    })
}

/// Dimension of the underlying space (number of generators for a
/// presentation).
///
/// # Safety
/// `h` must be a live handle; `out` must be writable.
#[no_mangle]
pub unsafe extern "C" fn dgk_structure_dim(h: *const DgkStructure, out: *mut usize) -> DgkStatus {
    guard(|| {
        check_out(out)?;
        *out = handle(h)?.space().total_dim();
        Ok(())
    })
}

/// Runs the axiom checks. `report` may be null; otherwise it receives the
/// rendered report, to be released with `dgk_string_free`.
///
/// # Safety
/// `h` must be a live handle; `passed` must be writable.
#[no_mangle]
pub unsafe extern "C" fn dgk_check_axioms(
    h: *const DgkStructure,
    passed: *mut bool,
    report: *mut *mut c_char,
) -> DgkStatus {
    guard(|| {
        check_out(passed)?;
        let r = match handle(h)? {
            Structure::Dga(a) => a.check_axioms(),
            Structure::Dgla(g) => g.check_axioms(),
            Structure::Formal(p) => p.check(),
        };
        *passed = r.passed();
        if !report.is_null() {
            *report = into_c_string(r.to_string());
        }
        Ok(())
    })
}

/// Maurer-Cartan test for an element written as `"x - 3/2*y"`.
///
/// # Safety
/// `h` must be a live handle, `element` a NUL-terminated string, `out`
/// writable.
#[no_mangle]
pub unsafe extern "C" fn dgk_mc_check(h: *const DgkStructure, element: *const c_char, out: *mut bool) -> DgkStatus {
    guard(|| {
        check_out(out)?;
        let s = handle(h)?;
        let x = parse_homogeneous(s.space(), read_str(element, "element")?, 1)?;
        *out = match s {
            Structure::Dga(a) => mc_check(a, &x)?,
            Structure::Dgla(g) => mc_check_lie(g, &x)?,
            other => return Err(wrong_kind("dga or dgla", other)),
        };
        Ok(())
    })
}

unsafe fn construct(
    h: *const DgkStructure,
    out: *mut *mut DgkStructure,
    build: impl FnOnce(&Structure) -> Result<Structure, Fail>,
) -> DgkStatus {
    guard(|| {
        check_out(out)?;
        let s = build(handle(h)?)?;
        *out = Box::into_raw(Box::new(DgkStructure(s)));
        Ok(())
    })
}

/// Chevalley-Eilenberg presentation of a dg Lie algebra.
///
/// # Safety
/// `h` must be a live handle; `out` must be writable.
#[no_mangle]
pub unsafe extern "C" fn dgk_ce(h: *const DgkStructure, out: *mut *mut DgkStructure) -> DgkStatus {
    construct(h, out, |s| match s {
        Structure::Dgla(g) => Ok(Structure::Formal(ce(g))),
        other => Err(wrong_kind("dgla", other)),
    })
}

/// # Safety
/// `h` must be a live handle; `out` must be writable.
#[no_mangle]
pub unsafe extern "C" fn dgk_bar(h: *const DgkStructure, out: *mut *mut DgkStructure) -> DgkStatus {
    construct(h, out, |s| match s {
        Structure::Dga(a) => Ok(Structure::Formal(bar(a)?)),
        other => Err(wrong_kind("dga", other)),
    })
}

/// # Safety
/// `h` must be a live handle; `out` must be writable.
#[no_mangle]
pub unsafe extern "C" fn dgk_cobar(h: *const DgkStructure, out: *mut *mut DgkStructure) -> DgkStatus {
    construct(h, out, |s| match s {
        Structure::Dga(a) => Ok(Structure::Formal(cobar(a)?)),
        other => Err(wrong_kind("dga", other)),
    })
}

/// # Safety
/// `h` must be a live handle; `out` must be writable.
#[no_mangle]
pub unsafe extern "C" fn dgk_harrison(h: *const DgkStructure, out: *mut *mut DgkStructure) -> DgkStatus {
    construct(h, out, |s| match s {
        Structure::Dga(a) => Ok(Structure::Formal(harrison(a)?)),
        other => Err(wrong_kind("dga", other)),
    })
}

/// Betti numbers in degrees `lo..=hi`, written to `dims[0..=hi-lo]`.
/// Presentations are truncated at `weight` first; finite algebras ignore it.
///
/// # Safety
/// `h` must be a live handle; `dims` must have room for `hi - lo + 1`
/// entries.
#[no_mangle]
pub unsafe extern "C" fn dgk_betti(
    h: *const DgkStructure,
    weight: usize,
    lo: i64,
    hi: i64,
    dims: *mut usize,
) -> DgkStatus {
    guard(|| {
        check_out(dims)?;
        if hi < lo {
            return Err(Fail(DgkStatus::Validation, "empty degree range".into()));
        }
        let betti = match handle(h)? {
            Structure::Dga(a) => a.complex()?.betti(),
            Structure::Dgla(g) => g.complex()?.betti(),
            Structure::Formal(p) => match truncate(p, weight)?.result {
                Truncation::Algebra(a) => a.complex()?.betti(),
                Truncation::Lie(g) => g.complex()?.betti(),
            },
        };
        for (k, d) in (lo..=hi).enumerate() {
            *dims.add(k) = betti.get(&d).copied().unwrap_or(0);
        }
        Ok(())
    })
}

/// Runs the command line with `argc` arguments (without the program name).
/// The report goes to `output`, the exit code to `exit_code`.
///
/// # Safety
/// `argv` must point to `argc` NUL-terminated strings; the output pointers
/// must be writable.
#[no_mangle]
pub unsafe extern "C" fn dgk_run(
    argc: c_int,
    argv: *const *const c_char,
    output: *mut *mut c_char,
    exit_code: *mut c_int,
) -> DgkStatus {
    guard(|| {
        check_out(output)?;
        check_out(exit_code)?;
        if argc < 0 || (argc > 0 && argv.is_null()) {
            return Err(Fail(DgkStatus::NullArgument, "argv is null".into()));
        }
        let args = (0..argc as usize)
            .map(|i| read_str(*argv.add(i), "argument").map(str::to_string))
            .collect::<Result<Vec<_>, _>>()?;
        let (text, code) = dgkoszul::cli::run(args);
        *output = into_c_string(text);
        *exit_code = code;
        Ok(())
    })
}

/// Library version, statically allocated.
#[no_mangle]
pub extern "C" fn dgk_version() -> *const c_char {
    concat!(env!("CARGO_PKG_VERSION"), "\0").as_ptr().cast()
}
