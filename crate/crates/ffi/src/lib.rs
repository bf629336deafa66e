//! C interface to `trop3`.
//!
//! Every function returns a [`Trop3Status`]. On failure the message is
//! available from [`trop3_last_error`] on the same thread. Strings handed out
//! by the library must be released with [`trop3_string_free`], triangulation
//! handles with [`trop3_triangulation_free`].

use std::cell::RefCell;
use std::ffi::{c_char, CStr, CString};
use std::panic::{catch_unwind, AssertUnwindSafe};

use trop3::incidence::{line_on_surface, IncidenceResult};
use trop3::lines::pluecker_from_ints;
use trop3::motifs;
use trop3::records::{annotate, parse_facet_list, TriangulationRecord};
use trop3::surface::{heights_from_ints, secondary_cone, triangulation_of};
use trop3::triangulation::Triangulation;
use trop3::{data, Error};

pub const TROP3_NPTS: usize = 20;
pub const TROP3_NFACETS: usize = 27;
pub const TROP3_NMOTIFS: usize = 10;

#[repr(C)]
#[derive(Clone, Copy, Debug, PartialEq, Eq)]
pub enum Trop3Status {
    Ok = 0,
    NullPointer = 1,
    InvalidArgument = 2,
    InvalidTriangulation = 3,
    NotGeneric = 4,
    DegenerateLine = 5,
    Internal = 6,
}

/// Opaque handle to a validated unimodular triangulation of 3Δ3.
pub struct Trop3Triangulation {
    inner: Triangulation,
}

thread_local! {
    static LAST_ERROR: RefCell<CString> = RefCell::new(CString::default());
}

fn set_error(msg: &str) {
    let s = CString::new(msg.replace('\0', " ")).unwrap_or_default();
    LAST_ERROR.with(|e| *e.borrow_mut() = s);
}

fn status_of(e: &Error) -> Trop3Status {
    match e {
        Error::PointOutOfRange(_)
        | Error::FacetCount { .. }
        | Error::MalformedFacet(_)
        | Error::DegenerateFacet(_)
        | Error::NotUnimodular { .. }
        | Error::Overlap(_)
        | Error::Volume(_)
        | Error::OpenLink(_) => Trop3Status::InvalidTriangulation,
        Error::NotACell(_) | Error::NotInterior => Trop3Status::NotGeneric,
        Error::NotPluecker | Error::DegenerateLine => Trop3Status::DegenerateLine,
        Error::Parse(_) | Error::ParseLine { .. } | Error::UnknownMotif(_) | Error::EmptyInterval => {
            Trop3Status::InvalidArgument
        }
        _ => Trop3Status::Internal,
    }
}

struct Fail(Trop3Status, String);

impl From<Error> for Fail {
    fn from(e: Error) -> Self {
        Fail(status_of(&e), e.to_string())
    }
}

fn null(what: &str) -> Fail {
    Fail(Trop3Status::NullPointer, format!("{what} is null"))
}

fn guard(f: impl FnOnce() -> Result<(), Fail>) -> Trop3Status {
    match catch_unwind(AssertUnwindSafe(f)) {
        Ok(Ok(())) => {
            set_error("");
            Trop3Status::Ok
        }
        Ok(Err(Fail(s, msg))) => {
            set_error(&msg);
            s
        }
        Err(_) => {
            set_error("internal panic");
            Trop3Status::Internal
        }
    }
}

unsafe fn slice<'a, T>(p: *const T, n: usize, what: &str) -> Result<&'a [T], Fail> {
    if p.is_null() {
        return Err(null(what));
    }
    Ok(std::slice::from_raw_parts(p, n))
}

unsafe fn handle<'a>(t: *const Trop3Triangulation) -> Result<&'a Triangulation, Fail> {
    t.as_ref().map(|h| &h.inner).ok_or_else(|| null("triangulation"))
}

unsafe fn put_handle(out: *mut *mut Trop3Triangulation, t: Triangulation) -> Result<(), Fail> {
    if out.is_null() {
        return Err(null("out"));
    }
    *out = Box::into_raw(Box::new(Trop3Triangulation { inner: t }));
    Ok(())
}

unsafe fn put_string(out: *mut *mut c_char, s: String) -> Result<(), Fail> {
    if out.is_null() {
        return Err(null("out"));
    }
    let c = CString::new(s).map_err(|_| Fail(Trop3Status::Internal, "string contains NUL".into()))?;
    *out = c.into_raw();
    Ok(())
}

/// Message of the last failed call on this thread, or "" after a success.
/// The pointer stays valid until the next library call on this thread.
#[no_mangle]
pub extern "C" fn trop3_last_error() -> *const c_char {
    LAST_ERROR.with(|e| e.borrow().as_ptr())
}

/// # Safety
/// `s` must be null or a string returned by this library, not yet freed.
#[no_mangle]
pub unsafe extern "C" fn trop3_string_free(s: *mut c_char) {
    if !s.is_null() {
        drop(CString::from_raw(s));
    }
}

/// # Safety
/// `t` must be null or a handle returned by this library, not yet freed.
#[no_mangle]
pub unsafe extern "C" fn trop3_triangulation_free(t: *mut Trop3Triangulation) {
    if !t.is_null() {
        drop(Box::from_raw(t));
    }
}

/// Validate 27 facets given as 108 point labels, four per facet.
///
/// # Safety
/// Pointer arguments must be null or valid for the documented number of elements; handles must be live.
#[no_mangle]
pub unsafe extern "C" fn trop3_triangulation_from_facets(
    labels: *const u32,
    nfacets: usize,
    out: *mut *mut Trop3Triangulation,
) -> Trop3Status {
    guard(|| {
        let l = slice(labels, nfacets.saturating_mul(4), "labels")?;
        let facets: Vec<Vec<usize>> = l.chunks(4).map(|c| c.iter().map(|&x| x as usize).collect()).collect();
        put_handle(out, Triangulation::validate(&facets)?)
    })
}

/// Parse a facet list such as `{{0,1,4,10},...}` or its JSON form.
///
/// # Safety
/// Pointer arguments must be null or valid for the documented number of elements; handles must be live.
#[no_mangle]
pub unsafe extern "C" fn trop3_triangulation_parse(
    text: *const c_char,
    out: *mut *mut Trop3Triangulation,
) -> Trop3Status {
    guard(|| {
        if text.is_null() {
            return Err(null("text"));
        }
        let s = CStr::from_ptr(text)
            .to_str()
            .map_err(|_| Fail(Trop3Status::InvalidArgument, "text is not UTF-8".into()))?;
        let facets = parse_facet_list(s).map_err(|m| Fail(Trop3Status::InvalidArgument, m))?;
        put_handle(out, Triangulation::validate(&facets)?)
    })
}

/// Dual triangulation of a tropical cubic with 20 integer coefficients.
///
/// # Safety
/// Pointer arguments must be null or valid for the documented number of elements; handles must be live.
#[no_mangle]
pub unsafe extern "C" fn trop3_triangulation_from_heights(
    heights: *const i64,
    n: usize,
    out: *mut *mut Trop3Triangulation,
) -> Trop3Status {
    guard(|| {
        if n != TROP3_NPTS {
            return Err(Fail(Trop3Status::InvalidArgument, format!("expected 20 heights, got {n}")));
        }
        let h = slice(heights, n, "heights")?;
        put_handle(out, triangulation_of(&heights_from_ints(h))?)
    })
}

/// Built-in examples: 0 for the typical triangulation, 1 for the honeycomb.
///
/// # Safety
/// Pointer arguments must be null or valid for the documented number of elements; handles must be live.
#[no_mangle]
pub unsafe extern "C" fn trop3_triangulation_example(which: u32, out: *mut *mut Trop3Triangulation) -> Trop3Status {
    guard(|| {
        let t = match which {
            0 => data::typical(),
            1 => data::honeycomb(),
            _ => return Err(Fail(Trop3Status::InvalidArgument, format!("no example {which}"))),
        };
        put_handle(out, t)
    })
}

/// Writes 108 labels, facets in sorted order.
///
/// # Safety
/// Pointer arguments must be null or valid for the documented number of elements; handles must be live.
#[no_mangle]
pub unsafe extern "C" fn trop3_triangulation_facets(t: *const Trop3Triangulation, out: *mut u32) -> Trop3Status {
    guard(|| {
        let t = handle(t)?;
        if out.is_null() {
            return Err(null("out"));
        }
        for (k, f) in t.facets().iter().enumerate() {
            for m in 0..4 {
                *out.add(4 * k + m) = f[m] as u32;
            }
        }
        Ok(())
    })
}

/// Writes the 20 GKZ entries.
///
/// # Safety
/// Pointer arguments must be null or valid for the documented number of elements; handles must be live.
#[no_mangle]
pub unsafe extern "C" fn trop3_triangulation_gkz(t: *const Trop3Triangulation, out: *mut u32) -> Trop3Status {
    guard(|| {
        let t = handle(t)?;
        if out.is_null() {
            return Err(null("out"));
        }
        for (i, g) in t.gkz().iter().enumerate() {
            *out.add(i) = *g as u32;
        }
        Ok(())
    })
}

/// # Safety
/// Pointer arguments must be null or valid for the documented number of elements; handles must be live.
#[no_mangle]
pub unsafe extern "C" fn trop3_triangulation_canonical_key(t: *const Trop3Triangulation, out: *mut u64) -> Trop3Status {
    guard(|| {
        let t = handle(t)?;
        if out.is_null() {
            return Err(null("out"));
        }
        *out = t.canonical_key();
        Ok(())
    })
}

/// Altshuler determinant as a decimal string.
///
/// # Safety
/// Pointer arguments must be null or valid for the documented number of elements; handles must be live.
#[no_mangle]
pub unsafe extern "C" fn trop3_triangulation_altshuler(t: *const Trop3Triangulation, out: *mut *mut c_char) -> Trop3Status {
    guard(|| put_string(out, handle(t)?.altshuler().to_string()))
}

/// Number of facets of the secondary cone.
///
/// # Safety
/// Pointer arguments must be null or valid for the documented number of elements; handles must be live.
#[no_mangle]
pub unsafe extern "C" fn trop3_secondary_facet_count(t: *const Trop3Triangulation, out: *mut usize) -> Trop3Status {
    guard(|| {
        let t = handle(t)?;
        if out.is_null() {
            return Err(null("out"));
        }
        *out = secondary_cone(t).remove_redundant().ineqs.len();
        Ok(())
    })
}

/// Occurrence counts of the ten motifs, in catalog order 3A..3J.
///
/// # Safety
/// Pointer arguments must be null or valid for the documented number of elements; handles must be live.
#[no_mangle]
pub unsafe extern "C" fn trop3_motif_counts(t: *const Trop3Triangulation, out: *mut usize) -> Trop3Status {
    guard(|| {
        let t = handle(t)?;
        if out.is_null() {
            return Err(null("out"));
        }
        let c = motifs::counts(&motifs::occurrences(t));
        for (i, v) in c.iter().enumerate() {
            *out.add(i) = *v;
        }
        Ok(())
    })
}

/// Full annotated record (motifs with visibility, walls and equations) as one JSON line.
///
/// # Safety
/// Pointer arguments must be null or valid for the documented number of elements; handles must be live.
#[no_mangle]
pub unsafe extern "C" fn trop3_triangulation_record_json(
    t: *const Trop3Triangulation,
    id: u64,
    out: *mut *mut c_char,
) -> Trop3Status {
    guard(|| {
        let r = annotate(&TriangulationRecord::new(id, handle(t)?)?)?;
        put_string(out, r.to_line())
    })
}

/// Whether the line with integer Plücker vector `p` (6 entries) lies on the
/// surface with integer coefficients `heights` (20 entries).
///
/// # Safety
/// Pointer arguments must be null or valid for the documented number of elements; handles must be live.
#[no_mangle]
pub unsafe extern "C" fn trop3_line_on_surface(
    pluecker: *const i64,
    heights: *const i64,
    contained: *mut bool,
) -> Trop3Status {
    guard(|| {
        let p = slice(pluecker, 6, "pluecker")?;
        let h = slice(heights, TROP3_NPTS, "heights")?;
        if contained.is_null() {
            return Err(null("contained"));
        }
        let p = pluecker_from_ints([p[0], p[1], p[2], p[3], p[4], p[5]]);
        let r = line_on_surface(&p, &heights_from_ints(h))?;
        *contained = matches!(r, IncidenceResult::Contained { .. });
        Ok(())
    })
}
