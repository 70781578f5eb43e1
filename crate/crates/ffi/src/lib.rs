//! C ABI over the Sorani analyzer and generator.
//!
//! A grammar is an opaque [`SoraniGrammar`] handle created by
//! [`sorani_grammar_new_default`] or [`sorani_grammar_from_files`] and
//! released with [`sorani_grammar_free`]. Every fallible call returns a
//! [`SoraniStatus`]; on failure [`sorani_last_error_message`] describes the
//! most recent error on the calling thread.
//!
//! Lookup results come back as one heap string holding the results joined
//! by `\n` (empty when there is none), which the caller releases with
//! [`sorani_string_free`].

use std::cell::RefCell;
use std::ffi::{c_char, CStr, CString};
use std::panic::{catch_unwind, AssertUnwindSafe};
use std::path::Path;
use std::ptr;

use sorani_fst::cli::load_grammar;
use sorani_fst::grammar::Grammar;

/// Result of an FFI call.
#[repr(C)]
#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub enum SoraniStatus {
    Ok = 0,
    NullPointer = 1,
    InvalidUtf8 = 2,
    LoadError = 3,
    InvalidAnalysis = 4,
    Panic = 5,
}

/// Compiled grammar handle. Immutable once created, so one handle may be
/// shared by several threads.
pub struct SoraniGrammar {
    inner: Grammar,
}

thread_local! {
    static LAST_ERROR: RefCell<Option<CString>> = const { RefCell::new(None) };
}

fn set_error(message: impl Into<Vec<u8>>) {
    let mut bytes = message.into();
    bytes.retain(|&b| b != 0);
    let c = CString::new(bytes).expect("interior NULs removed");
    LAST_ERROR.with(|e| *e.borrow_mut() = Some(c));
}

fn fail(status: SoraniStatus, message: impl Into<Vec<u8>>) -> SoraniStatus {
    set_error(message);
    status
}

/// Runs `f`, turning a panic into [`SoraniStatus::Panic`].
fn guard(f: impl FnOnce() -> SoraniStatus) -> SoraniStatus {
    match catch_unwind(AssertUnwindSafe(f)) {
        Ok(s) => s,
        Err(_) => fail(SoraniStatus::Panic, "internal error"),
    }
}

/// # Safety
/// `p` is null or a NUL-terminated string.
unsafe fn opt_str<'a>(p: *const c_char, what: &str) -> Result<Option<&'a str>, SoraniStatus> {
    if p.is_null() {
        return Ok(None);
    }
    CStr::from_ptr(p)
        .to_str()
        .map(Some)
        .map_err(|_| fail(SoraniStatus::InvalidUtf8, format!("{what} is not valid UTF-8")))
}

/// # Safety
/// `p` is null or a NUL-terminated string.
unsafe fn req_str<'a>(p: *const c_char, what: &str) -> Result<&'a str, SoraniStatus> {
    opt_str(p, what)?.ok_or_else(|| fail(SoraniStatus::NullPointer, format!("{what} is null")))
}

fn store_handle(grammar: Grammar, out: *mut *mut SoraniGrammar) -> SoraniStatus {
    let handle = Box::new(SoraniGrammar { inner: grammar });
    // SAFETY: callers check `out` for null before building the grammar.
    unsafe { *out = Box::into_raw(handle) };
    SoraniStatus::Ok
}

/// Builds the built-in grammar over the built-in seed lexicon.
///
/// # Safety
/// `out` must be a valid pointer to writable storage for one handle.
#[no_mangle]
pub unsafe extern "C" fn sorani_grammar_new_default(out: *mut *mut SoraniGrammar) -> SoraniStatus {
    sorani_grammar_from_files(ptr::null(), ptr::null(), out)
}

/// Builds a grammar from a `.kfst` file and a lexicon TSV. A null path
/// selects the built-in data for that part.
///
/// # Safety
/// Non-null paths must be NUL-terminated strings; `out` must be valid for
/// one write.
#[no_mangle]
pub unsafe extern "C" fn sorani_grammar_from_files(
    grammar_path: *const c_char,
    lexicon_path: *const c_char,
    out: *mut *mut SoraniGrammar,
) -> SoraniStatus {
    guard(|| {
        if out.is_null() {
            return fail(SoraniStatus::NullPointer, "output handle pointer is null");
        }
        *out = ptr::null_mut();
        let (grammar_path, lexicon_path) = match (
            opt_str(grammar_path, "grammar path"),
            opt_str(lexicon_path, "lexicon path"),
        ) {
            (Ok(g), Ok(l)) => (g, l),
            (Err(s), _) | (_, Err(s)) => return s,
        };
        match load_grammar(grammar_path.map(Path::new), lexicon_path.map(Path::new)) {
            Ok(g) => store_handle(g, out),
            Err(m) => fail(SoraniStatus::LoadError, m),
        }
    })
}

/// Releases a handle. Null is ignored.
///
/// # Safety
/// `grammar` is null or a handle from this library not yet freed.
#[no_mangle]
pub unsafe extern "C" fn sorani_grammar_free(grammar: *mut SoraniGrammar) {
    if !grammar.is_null() {
        drop(Box::from_raw(grammar));
    }
}

/// # Safety
/// Same contract as the public lookup functions.
unsafe fn lookup(
    grammar: *const SoraniGrammar,
    input: *const c_char,
    out: *mut *mut c_char,
    count: *mut usize,
    f: impl FnOnce(&Grammar, &str) -> Result<Vec<String>, String>,
) -> SoraniStatus {
    guard(|| {
        if grammar.is_null() || out.is_null() {
            return fail(SoraniStatus::NullPointer, "grammar or output pointer is null");
        }
        *out = ptr::null_mut();
        let input = match req_str(input, "input") {
            Ok(s) => s,
            Err(s) => return s,
        };
        let results = match f(&(*grammar).inner, input) {
            Ok(r) => r,
            Err(m) => return fail(SoraniStatus::InvalidAnalysis, m),
        };
        if !count.is_null() {
            *count = results.len();
        }
        let joined = CString::new(results.join("\n")).expect("lookup results contain no NUL");
        *out = joined.into_raw();
        SoraniStatus::Ok
    })
}

/// Analyses of a surface word, newline-joined, into `*out`. `count`, when
/// not null, receives the number of analyses.
///
/// # Safety
/// `grammar` is a live handle, `word` a NUL-terminated string, `out` valid
/// for one write and `count` null or valid for one write.
#[no_mangle]
pub unsafe extern "C" fn sorani_analyze(
    grammar: *const SoraniGrammar,
    word: *const c_char,
    out: *mut *mut c_char,
    count: *mut usize,
) -> SoraniStatus {
    lookup(grammar, word, out, count, |g, w| Ok(g.analyze(w)))
}

/// Surface forms of an analysis string such as
/// `xward<verb-transitive-past-stem><past-1s>`.
///
/// # Safety
/// As for [`sorani_analyze`].
#[no_mangle]
pub unsafe extern "C" fn sorani_generate(
    grammar: *const SoraniGrammar,
    analysis: *const c_char,
    out: *mut *mut c_char,
    count: *mut usize,
) -> SoraniStatus {
    lookup(grammar, analysis, out, count, |g, a| {
        g.generate(a).map_err(|e| e.to_string())
    })
}

/// Releases a string returned by this library. Null is ignored.
///
/// # Safety
/// `s` is null or a string from this library not yet freed.
#[no_mangle]
pub unsafe extern "C" fn sorani_string_free(s: *mut c_char) {
    if !s.is_null() {
        drop(CString::from_raw(s));
    }
}

/// Message for the last failed call on this thread, or null. The pointer
/// stays valid until the next failing call on the same thread.
#[no_mangle]
pub extern "C" fn sorani_last_error_message() -> *const c_char {
    LAST_ERROR.with(|e| e.borrow().as_ref().map_or(ptr::null(), |c| c.as_ptr()))
}
