//! C ABI over `framelink`.
//!
//! Conventions:
//! - Every fallible call returns an [`FlStatus`] and writes results through
//!   out-pointers. On failure the out-pointers are left untouched and
//!   [`fl_last_error_message`] / [`fl_last_error_code`] describe the error on
//!   the calling thread.
//! - Handles are opaque and owned by the caller; release them with the
//!   matching `*_free` function. Strings returned by the library are freed
//!   with [`fl_string_free`].
//! - Input strings are NUL-terminated UTF-8.

#![allow(clippy::missing_safety_doc)]

use std::cell::RefCell;
use std::ffi::{c_char, CStr, CString};
use std::panic::{catch_unwind, AssertUnwindSafe};
use std::ptr;

use framelink::codecs::{self, FramedLinkDoc};
use framelink::diagram::ComponentId;
use framelink::geometry::{self, SpaceCurve, Vec3};
use framelink::invariants::{self, FramedLink};
use framelink::moves::{self, Budget};
use framelink::surgery::{self, SurgeryDescription};
use framelink::torus::{self, PeripheralClass, TorusClass};

/// Status codes. `FL_STATUS_OK` is zero; the rest name the failing layer.
#[repr(C)]
#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub enum FlStatus {
    Ok = 0,
    NullPointer = 1,
    InvalidUtf8 = 2,
    Codec = 3,
    Diagram = 4,
    Invariant = 5,
    Move = 6,
    Torus = 7,
    Surgery = 8,
    Geometry = 9,
    OutOfRange = 10,
    BufferTooSmall = 11,
    Panic = 12,
}

/// A framed link: a planar diagram plus one integer framing per component.
pub struct FlLink {
    inner: FramedLink,
}

struct LastError {
    code: CString,
    message: CString,
}

thread_local! {
    static LAST_ERROR: RefCell<Option<LastError>> = const { RefCell::new(None) };
}

struct Failure {
    status: FlStatus,
    code: &'static str,
    message: String,
}

impl Failure {
    fn new(status: FlStatus, code: &'static str, message: impl Into<String>) -> Self {
        Failure {
            status,
            code,
            message: message.into(),
        }
    }
}

macro_rules! failure_from {
    ($($t:ty => $s:ident),*) => {$(
        impl From<$t> for Failure {
            fn from(e: $t) -> Self {
                Failure::new(FlStatus::$s, e.code(), e.to_string())
            }
        }
    )*};
}

failure_from!(
    codecs::CodecError => Codec,
    framelink::diagram::DiagramError => Diagram,
    invariants::InvariantError => Invariant,
    moves::MoveError => Move,
    torus::TorusError => Torus,
    surgery::SurgeryError => Surgery,
    geometry::GeometryError => Geometry
);

fn set_error(f: &Failure) {
    let clean = |s: &str| CString::new(s.replace('\0', " ")).expect("interior NULs removed");
    LAST_ERROR.with(|e| {
        *e.borrow_mut() = Some(LastError {
            code: clean(f.code),
            message: clean(&f.message),
        })
    });
}

/// Runs `body`, mapping errors and panics to a status.
fn guard(body: impl FnOnce() -> Result<(), Failure>) -> FlStatus {
    let outcome = catch_unwind(AssertUnwindSafe(body)).unwrap_or_else(|p| {
        let msg = p
            .downcast_ref::<&str>()
            .map(|s| s.to_string())
            .or_else(|| p.downcast_ref::<String>().cloned())
            .unwrap_or_else(|| "panic".into());
        Err(Failure::new(FlStatus::Panic, "Panic", msg))
    });
    match outcome {
        Ok(()) => {
            LAST_ERROR.with(|e| *e.borrow_mut() = None);
            FlStatus::Ok
        }
        Err(f) => {
            set_error(&f);
            f.status
        }
    }
}

fn null(what: &str) -> Failure {
    Failure::new(FlStatus::NullPointer, "NullPointer", format!("{what} is null"))
}

unsafe fn text<'a>(p: *const c_char, what: &str) -> Result<&'a str, Failure> {
    if p.is_null() {
        return Err(null(what));
    }
    CStr::from_ptr(p)
        .to_str()
        .map_err(|e| Failure::new(FlStatus::InvalidUtf8, "InvalidUtf8", format!("{what}: {e}")))
}

unsafe fn link<'a>(p: *const FlLink) -> Result<&'a FramedLink, Failure> {
    p.as_ref().map(|l| &l.inner).ok_or_else(|| null("link"))
}

unsafe fn put<T>(out: *mut T, v: T) -> Result<(), Failure> {
    if out.is_null() {
        return Err(null("output pointer"));
    }
    out.write(v);
    Ok(())
}

unsafe fn put_string(out: *mut *mut c_char, s: String) -> Result<(), Failure> {
    let c = CString::new(s).map_err(|e| Failure::new(FlStatus::Codec, "InteriorNul", e.to_string()))?;
    if out.is_null() {
        return Err(null("output pointer"));
    }
    out.write(c.into_raw());
    Ok(())
}

fn component(l: &FramedLink, i: usize) -> Result<ComponentId, Failure> {
    let n = l.diagram().component_count();
    if i >= n {
        return Err(Failure::new(
            FlStatus::OutOfRange,
            "OutOfRange",
            format!("component {i} of {n}"),
        ));
    }
    Ok(ComponentId(i))
}

fn boxed(l: FramedLink) -> *mut FlLink {
    Box::into_raw(Box::new(FlLink { inner: l }))
}

/// Message of the last error on this thread, or null. Valid until the next
/// library call on the same thread.
#[no_mangle]
pub extern "C" fn fl_last_error_message() -> *const c_char {
    LAST_ERROR.with(|e| e.borrow().as_ref().map_or(ptr::null(), |e| e.message.as_ptr()))
}

/// Stable error code of the last error on this thread (e.g. "ArcCountError"),
/// or null.
#[no_mangle]
pub extern "C" fn fl_last_error_code() -> *const c_char {
    LAST_ERROR.with(|e| e.borrow().as_ref().map_or(ptr::null(), |e| e.code.as_ptr()))
}

#[no_mangle]
pub unsafe extern "C" fn fl_string_free(s: *mut c_char) {
    if !s.is_null() {
        drop(CString::from_raw(s));
    }
}

/// Parses a PD code; the link gets its blackboard framing.
#[no_mangle]
pub unsafe extern "C" fn fl_link_from_pd(pd: *const c_char, out: *mut *mut FlLink) -> FlStatus {
    guard(|| {
        let d = codecs::parse_pd(text(pd, "pd")?)?;
        put(out, boxed(invariants::blackboard_framing(&d)))
    })
}

/// Parses a framed-link JSON document `{"pd": ..., "framings": [...]}`.
#[no_mangle]
pub unsafe extern "C" fn fl_link_from_json(json: *const c_char, out: *mut *mut FlLink) -> FlStatus {
    guard(|| {
        let fl = FramedLinkDoc::from_json(text(json, "json")?)?.to_framed_link()?;
        put(out, boxed(fl))
    })
}

/// Builds a link from a PD code and explicit framings.
#[no_mangle]
pub unsafe extern "C" fn fl_link_new(
    pd: *const c_char,
    framings: *const i64,
    n_framings: usize,
    out: *mut *mut FlLink,
) -> FlStatus {
    guard(|| {
        let d = codecs::parse_pd(text(pd, "pd")?)?;
        let f = if n_framings == 0 {
            Vec::new()
        } else if framings.is_null() {
            return Err(null("framings"));
        } else {
            std::slice::from_raw_parts(framings, n_framings).to_vec()
        };
        put(out, boxed(FramedLink::new(d, f)?))
    })
}

#[no_mangle]
pub unsafe extern "C" fn fl_link_free(l: *mut FlLink) {
    if !l.is_null() {
        drop(Box::from_raw(l));
    }
}

#[no_mangle]
pub unsafe extern "C" fn fl_link_component_count(l: *const FlLink, out: *mut usize) -> FlStatus {
    guard(|| put(out, link(l)?.diagram().component_count()))
}

#[no_mangle]
pub unsafe extern "C" fn fl_link_crossing_count(l: *const FlLink, out: *mut usize) -> FlStatus {
    guard(|| put(out, link(l)?.diagram().crossing_count()))
}

/// Canonical PD text of the diagram.
#[no_mangle]
pub unsafe extern "C" fn fl_link_pd(l: *const FlLink, out: *mut *mut c_char) -> FlStatus {
    guard(|| put_string(out, codecs::serialize_pd(link(l)?.diagram())))
}

/// Canonical JSON document with framings.
#[no_mangle]
pub unsafe extern "C" fn fl_link_json(l: *const FlLink, out: *mut *mut c_char) -> FlStatus {
    guard(|| put_string(out, codecs::write_framed_link(link(l)?)))
}

#[no_mangle]
pub unsafe extern "C" fn fl_link_writhe(l: *const FlLink, out: *mut i64) -> FlStatus {
    guard(|| put(out, invariants::total_writhe(link(l)?.diagram())))
}

#[no_mangle]
pub unsafe extern "C" fn fl_link_framing(l: *const FlLink, i: usize, out: *mut i64) -> FlStatus {
    guard(|| {
        let fl = link(l)?;
        let c = component(fl, i)?;
        put(out, fl.framings()[c.0])
    })
}

#[no_mangle]
pub unsafe extern "C" fn fl_link_linking_number(l: *const FlLink, i: usize, j: usize, out: *mut i64) -> FlStatus {
    guard(|| {
        let fl = link(l)?;
        let (a, b) = (component(fl, i)?, component(fl, j)?);
        put(out, invariants::linking_number(fl.diagram(), a, b)?)
    })
}

/// Writes the n×n linking matrix row-major into `buf` (capacity `len`) and
/// sets `*n`. Returns `FL_STATUS_BUFFER_TOO_SMALL` with `*n` set when `len`
/// is below n².
#[no_mangle]
pub unsafe extern "C" fn fl_link_linking_matrix(l: *const FlLink, buf: *mut i64, len: usize, n: *mut usize) -> FlStatus {
    guard(|| {
        let m = invariants::linking_matrix(link(l)?)?;
        let size = m.size();
        put(n, size)?;
        if len < size * size {
            return Err(Failure::new(
                FlStatus::BufferTooSmall,
                "BufferTooSmall",
                format!("need {} entries", size * size),
            ));
        }
        if size > 0 && buf.is_null() {
            return Err(null("buf"));
        }
        for (k, v) in m.rows().iter().flatten().enumerate() {
            buf.add(k).write(*v);
        }
        Ok(())
    })
}

/// Bounded framed equivalence search with the default budget. `*out` is 1
/// when a move sequence was found and 0 otherwise; `report` (optional)
/// receives the JSON result with the path or the reason.
#[no_mangle]
pub unsafe extern "C" fn fl_link_framed_equivalent(
    a: *const FlLink,
    b: *const FlLink,
    out: *mut i32,
    report: *mut *mut c_char,
) -> FlStatus {
    guard(|| {
        let da = moves::realize_framing(link(a)?);
        let db = moves::realize_framing(link(b)?);
        let r = moves::framed_equivalent(&da, &db, Budget::for_inputs(&da, &db));
        if out.is_null() {
            return Err(null("output pointer"));
        }
        if !report.is_null() {
            put_string(report, serde_json::to_string(&r).expect("results serialize"))?;
        }
        put(out, r.is_equivalent() as i32)
    })
}

/// Surgery on the link with its integer framings. Writes a JSON object with
/// `recognized`, `evidence` and `H1`.
#[no_mangle]
pub unsafe extern "C" fn fl_link_surgery(l: *const FlLink, out: *mut *mut c_char) -> FlStatus {
    guard(|| {
        let s = SurgeryDescription::from_framed_link(link(l)?);
        surgery_report(&s, out)
    })
}

/// Surgery from a JSON document that may carry rational `coefficients`.
#[no_mangle]
pub unsafe extern "C" fn fl_surgery_from_json(json: *const c_char, out: *mut *mut c_char) -> FlStatus {
    guard(|| {
        let doc = FramedLinkDoc::from_json(text(json, "json")?)?;
        surgery_report(&SurgeryDescription::from_doc(&doc)?, out)
    })
}

unsafe fn surgery_report(s: &SurgeryDescription, out: *mut *mut c_char) -> Result<(), Failure> {
    let rec = surgery::recognize(s);
    let h1 = surgery::first_homology(s).ok().map(|h| h.to_string());
    let v = serde_json::json!({"recognized": rec.tag, "evidence": rec.evidence, "H1": h1});
    put_string(out, v.to_string())
}

/// 1 if a*[meridian] + b*[longitude] is a simple closed curve class.
#[no_mangle]
pub extern "C" fn fl_torus_is_embeddable(a: i64, b: i64) -> i32 {
    torus::is_embeddable(TorusClass::new(a, b)) as i32
}

/// Longitude class n*[meridian] + 1*[longitude] of framing n.
#[no_mangle]
pub unsafe extern "C" fn fl_torus_framing_to_longitude(n: i64, meridian: *mut i64, longitude: *mut i64) -> FlStatus {
    guard(|| {
        let c = torus::framing_to_longitude(n);
        put(meridian, c.meridian_coeff)?;
        put(longitude, c.longitude_coeff)
    })
}

#[no_mangle]
pub unsafe extern "C" fn fl_torus_longitude_to_framing(meridian: i64, longitude: i64, out: *mut i64) -> FlStatus {
    guard(|| {
        let f = torus::longitude_to_framing(PeripheralClass {
            meridian_coeff: meridian,
            longitude_coeff: longitude,
        })?;
        put(out, f)
    })
}

unsafe fn curve(xyz: *const f64, n: usize, what: &str) -> Result<SpaceCurve, Failure> {
    if xyz.is_null() {
        return Err(null(what));
    }
    let v = std::slice::from_raw_parts(xyz, 3 * n)
        .chunks_exact(3)
        .map(|p| Vec3::new(p[0], p[1], p[2]))
        .collect();
    Ok(SpaceCurve::new(v, None)?)
}

/// Gauss linking number of two closed polygons given as `n` xyz triples.
#[no_mangle]
pub unsafe extern "C" fn fl_gauss_linking(
    a: *const f64,
    na: usize,
    b: *const f64,
    nb: usize,
    out: *mut i64,
) -> FlStatus {
    guard(|| {
        let (ca, cb) = (curve(a, na, "a")?, curve(b, nb, "b")?);
        put(out, geometry::gauss_linking(&ca, &cb)?)
    })
}

/// Projects closed polygons to a planar diagram. `counts[i]` is the vertex
/// count of curve i; `xyz` holds all vertices back to back.
#[no_mangle]
pub unsafe extern "C" fn fl_project_curves(
    xyz: *const f64,
    counts: *const usize,
    n_curves: usize,
    seed: u64,
    out: *mut *mut FlLink,
) -> FlStatus {
    guard(|| {
        if counts.is_null() && n_curves > 0 {
            return Err(null("counts"));
        }
        let counts = if n_curves == 0 { &[][..] } else { std::slice::from_raw_parts(counts, n_curves) };
        let mut curves = Vec::new();
        let mut offset = 0;
        for &n in counts {
            curves.push(curve(xyz.wrapping_add(3 * offset), n, "xyz")?);
            offset += n;
        }
        let p = geometry::project_to_diagram(&curves, None, seed)?;
        put(out, boxed(invariants::blackboard_framing(&p.diagram)))
    })
}
