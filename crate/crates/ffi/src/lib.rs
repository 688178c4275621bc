//! C ABI for the equitangent library.
//!
//! Curves and surfaces are opaque handles created by `eqt_*_new`-style
//! constructors and released by the matching `*_free`. Every fallible call
//! returns an [`EqtStatus`]; on failure the message is available from
//! [`eqt_last_error_message`] on the same thread. Results are written through
//! out-pointers, which are left untouched on failure.

use std::cell::RefCell;
use std::ffi::{CStr, CString};
use std::os::raw::c_char;
use std::panic::{catch_unwind, AssertUnwindSafe};

use equitangent::constructions::{build_rounded_reuleaux, FourArcCurve};
use equitangent::curves2d::{equitangent_residual, width_range, ConvexCurve, Curve, SupportCurve};
use equitangent::geom2d::{Circle2, Point2};
use equitangent::hyperbolic::{equitangent_from_boundary_residual, hyp_distance, HalfPlanePoint, HyperbolicReuleaux};
use equitangent::ovaloid3d::{principal_curvatures, tangent_length_spread, Surface, Vec3};
use equitangent::GeomError;

/// Result code of every fallible call. `EQT_STATUS_OK` is zero.
#[repr(C)]
#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub enum EqtStatus {
    Ok = 0,
    ConcentricCircles = 1,
    PointNotExterior = 2,
    TangencyNotFound = 3,
    NotOnRadicalAxis = 4,
    PointInsideHull = 5,
    ArcsDoNotClose = 6,
    EvenN = 7,
    NonPositiveLambda = 8,
    NotInUpperHalfPlane = 9,
    EndpointMismatch = 10,
    NotEquitangentAtSample = 11,
    XAtTangency = 12,
    NotOnLine = 13,
    ContinuationFailed = 14,
    NotOnSurface = 15,
    NotEquitangentSource = 16,
    EmptyContactCurve = 17,
    InvalidCurve = 18,
    InvalidInput = 19,
    /// A required pointer argument was null.
    NullPointer = 100,
    /// A string argument was not valid UTF-8.
    InvalidUtf8 = 101,
    /// The library panicked; this is a bug.
    Panic = 102,
}

impl From<&GeomError> for EqtStatus {
    fn from(e: &GeomError) -> Self {
        match e.name() {
            "ConcentricCircles" => EqtStatus::ConcentricCircles,
            "PointNotExterior" => EqtStatus::PointNotExterior,
            "TangencyNotFound" => EqtStatus::TangencyNotFound,
            "NotOnRadicalAxis" => EqtStatus::NotOnRadicalAxis,
            "PointInsideHull" => EqtStatus::PointInsideHull,
            "ArcsDoNotClose" => EqtStatus::ArcsDoNotClose,
            "EvenN" => EqtStatus::EvenN,
            "NonPositiveLambda" => EqtStatus::NonPositiveLambda,
            "NotInUpperHalfPlane" => EqtStatus::NotInUpperHalfPlane,
            "EndpointMismatch" => EqtStatus::EndpointMismatch,
            "NotEquitangentAtSample" => EqtStatus::NotEquitangentAtSample,
            "XAtTangency" => EqtStatus::XAtTangency,
            "NotOnLine" => EqtStatus::NotOnLine,
            "ContinuationFailed" => EqtStatus::ContinuationFailed,
            "NotOnSurface" => EqtStatus::NotOnSurface,
            "NotEquitangentSource" => EqtStatus::NotEquitangentSource,
            "EmptyContactCurve" => EqtStatus::EmptyContactCurve,
            "InvalidCurve" => EqtStatus::InvalidCurve,
            _ => EqtStatus::InvalidInput,
        }
    }
}

/// Opaque planar convex curve.
pub struct EqtCurve(Curve);

/// Opaque convex surface.
pub struct EqtSurface(Surface);

/// One tangency from an exterior point.
#[repr(C)]
#[derive(Debug, Clone, Copy, Default, PartialEq)]
pub struct EqtTangent {
    pub x: f64,
    pub y: f64,
    /// Distance from the source point to the tangency point.
    pub length: f64,
    /// Outward-normal angle at the tangency point.
    pub param: f64,
}

#[repr(C)]
#[derive(Debug, Clone, Copy, Default, PartialEq)]
pub struct EqtLengthSpread {
    pub min: f64,
    pub max: f64,
    pub spread: f64,
}

thread_local! {
    static LAST_ERROR: RefCell<CString> = RefCell::new(CString::default());
}

struct Failure(EqtStatus, String);

impl From<GeomError> for Failure {
    fn from(e: GeomError) -> Self {
        Failure(EqtStatus::from(&e), e.to_string())
    }
}

type FfiResult<T> = Result<T, Failure>;

fn set_last_error(message: &str) {
    let text = CString::new(message.replace('\0', " ")).unwrap_or_default();
    LAST_ERROR.with(|e| *e.borrow_mut() = text);
}

/// Runs `f`, records any failure or panic, and returns its status.
fn guard(f: impl FnOnce() -> FfiResult<()>) -> EqtStatus {
    match catch_unwind(AssertUnwindSafe(f)) {
        Ok(Ok(())) => {
            set_last_error("");
            EqtStatus::Ok
        }
        Ok(Err(Failure(status, message))) => {
            set_last_error(&message);
            status
        }
        Err(_) => {
            set_last_error("Panic: internal error");
            EqtStatus::Panic
        }
    }
}

fn null(what: &str) -> Failure {
    Failure(EqtStatus::NullPointer, format!("NullPointer: {what} is null"))
}

/// # Safety
/// `p` must be null or valid for reads.
unsafe fn borrow<'a, T>(p: *const T, what: &str) -> FfiResult<&'a T> {
    // SAFETY: the caller guarantees validity when non-null.
    unsafe { p.as_ref() }.ok_or_else(|| null(what))
}

/// # Safety
/// `p` must be null or valid for writes.
unsafe fn store<T>(p: *mut T, value: T, what: &str) -> FfiResult<()> {
    if p.is_null() {
        return Err(null(what));
    }
    // SAFETY: non-null and valid for writes per the caller.
    unsafe { p.write(value) };
    Ok(())
}

/// # Safety
/// `p` must be null or point to `n` readable doubles.
unsafe fn doubles<'a>(p: *const f64, n: usize, what: &str) -> FfiResult<&'a [f64]> {
    if n == 0 {
        return Ok(&[]);
    }
    if p.is_null() {
        return Err(null(what));
    }
    // SAFETY: non-null and `n` readable doubles per the caller.
    Ok(unsafe { std::slice::from_raw_parts(p, n) })
}

/// # Safety
/// `p` must be null or a NUL-terminated string.
unsafe fn text<'a>(p: *const c_char, what: &str) -> FfiResult<&'a str> {
    if p.is_null() {
        return Err(null(what));
    }
    // SAFETY: NUL-terminated per the caller.
    unsafe { CStr::from_ptr(p) }
        .to_str()
        .map_err(|_| Failure(EqtStatus::InvalidUtf8, format!("InvalidUtf8: {what} is not UTF-8")))
}

fn new_curve(curve: impl Into<Curve>) -> *mut EqtCurve {
    Box::into_raw(Box::new(EqtCurve(curve.into())))
}

/// Message of the last failed call on this thread, empty after a success.
/// The pointer stays valid until the next call on this thread.
#[no_mangle]
pub extern "C" fn eqt_last_error_message() -> *const c_char {
    LAST_ERROR.with(|e| e.borrow().as_ptr())
}

/// Stable name of a status code, as a static string.
#[no_mangle]
pub extern "C" fn eqt_status_name(status: EqtStatus) -> *const c_char {
    let name: &'static CStr = match status {
        EqtStatus::Ok => c"Ok",
        EqtStatus::ConcentricCircles => c"ConcentricCircles",
        EqtStatus::PointNotExterior => c"PointNotExterior",
        EqtStatus::TangencyNotFound => c"TangencyNotFound",
        EqtStatus::NotOnRadicalAxis => c"NotOnRadicalAxis",
        EqtStatus::PointInsideHull => c"PointInsideHull",
        EqtStatus::ArcsDoNotClose => c"ArcsDoNotClose",
        EqtStatus::EvenN => c"EvenN",
        EqtStatus::NonPositiveLambda => c"NonPositiveLambda",
        EqtStatus::NotInUpperHalfPlane => c"NotInUpperHalfPlane",
        EqtStatus::EndpointMismatch => c"EndpointMismatch",
        EqtStatus::NotEquitangentAtSample => c"NotEquitangentAtSample",
        EqtStatus::XAtTangency => c"XAtTangency",
        EqtStatus::NotOnLine => c"NotOnLine",
        EqtStatus::ContinuationFailed => c"ContinuationFailed",
        EqtStatus::NotOnSurface => c"NotOnSurface",
        EqtStatus::NotEquitangentSource => c"NotEquitangentSource",
        EqtStatus::EmptyContactCurve => c"EmptyContactCurve",
        EqtStatus::InvalidCurve => c"InvalidCurve",
        EqtStatus::InvalidInput => c"InvalidInput",
        EqtStatus::NullPointer => c"NullPointer",
        EqtStatus::InvalidUtf8 => c"InvalidUtf8",
        EqtStatus::Panic => c"Panic",
    };
    name.as_ptr()
}

/// Releases a string returned by this library. Null is ignored.
///
/// # Safety
/// `s` must be null or a string returned by this library and not yet freed.
#[no_mangle]
pub unsafe extern "C" fn eqt_string_free(s: *mut c_char) {
    if !s.is_null() {
        // SAFETY: allocated by `CString::into_raw` in this library.
        drop(unsafe { CString::from_raw(s) });
    }
}

/// Parses a curve document (support samples or arc spline).
///
/// # Safety
/// `json` must be a NUL-terminated string; `out` must be valid for writes.
#[no_mangle]
pub unsafe extern "C" fn eqt_curve_from_json(json: *const c_char, out: *mut *mut EqtCurve) -> EqtStatus {
    guard(|| {
        let curve = Curve::from_json(unsafe { text(json, "json") }?)?;
        unsafe { store(out, new_curve(curve), "out") }
    })
}

/// Serializes a curve; release the result with [`eqt_string_free`].
///
/// # Safety
/// `curve` must be a live handle; `out` must be valid for writes.
#[no_mangle]
pub unsafe extern "C" fn eqt_curve_to_json(curve: *const EqtCurve, out: *mut *mut c_char) -> EqtStatus {
    guard(|| {
        let curve = unsafe { borrow(curve, "curve") }?;
        let json = CString::new(curve.0.to_json()).expect("JSON has no NUL bytes");
        unsafe { store(out, json.into_raw(), "out") }
    })
}

/// Releases a curve handle. Null is ignored.
///
/// # Safety
/// `curve` must be null or a handle not yet freed.
#[no_mangle]
pub unsafe extern "C" fn eqt_curve_free(curve: *mut EqtCurve) {
    if !curve.is_null() {
        // SAFETY: created by `Box::into_raw` in this library.
        drop(unsafe { Box::from_raw(curve) });
    }
}

/// Ellipse with semi-axes `a`, `b`, rotated by `rotation` about its center.
///
/// # Safety
/// `out` must be valid for writes.
#[no_mangle]
pub unsafe extern "C" fn eqt_curve_ellipse(
    cx: f64,
    cy: f64,
    a: f64,
    b: f64,
    rotation: f64,
    out: *mut *mut EqtCurve,
) -> EqtStatus {
    guard(|| {
        let curve = SupportCurve::ellipse(Point2::new(cx, cy), a, b, rotation)?;
        unsafe { store(out, new_curve(curve), "out") }
    })
}

/// Rounded Reuleaux polygon of odd order `n`, diagonal `lambda`, rounding
/// radius `epsilon`.
///
/// # Safety
/// `out` must be valid for writes.
#[no_mangle]
pub unsafe extern "C" fn eqt_curve_reuleaux(n: i64, lambda: f64, epsilon: f64, out: *mut *mut EqtCurve) -> EqtStatus {
    guard(|| {
        let (curve, _) = build_rounded_reuleaux(n, lambda, epsilon)?;
        unsafe { store(out, new_curve(curve), "out") }
    })
}

/// Four-arc curve through two circles and two points on their radical axis.
/// `circles` holds `cx, cy, r` for each circle; `points` holds `x` then `y`.
///
/// # Safety
/// `circles` must point to 6 doubles, `points` to 4; `out` must be valid for
/// writes.
#[no_mangle]
pub unsafe extern "C" fn eqt_curve_four_arc(
    circles: *const f64,
    points: *const f64,
    out: *mut *mut EqtCurve,
) -> EqtStatus {
    guard(|| {
        let c = unsafe { doubles(circles, 6, "circles") }?;
        let p = unsafe { doubles(points, 4, "points") }?;
        let fig = FourArcCurve::build(
            Circle2::new(Point2::new(c[0], c[1]), c[2])?,
            Circle2::new(Point2::new(c[3], c[4]), c[5])?,
            Point2::new(p[0], p[1]),
            Point2::new(p[2], p[3]),
        )?;
        unsafe { store(out, new_curve(fig.curve), "out") }
    })
}

/// Rounded Reuleaux triangle of constant hyperbolic width in the upper
/// half-plane, centered at `(0, 1)`.
///
/// # Safety
/// `out` must be valid for writes.
#[no_mangle]
pub unsafe extern "C" fn eqt_curve_hyperbolic_reuleaux(
    circumradius: f64,
    epsilon: f64,
    out: *mut *mut EqtCurve,
) -> EqtStatus {
    guard(|| {
        let r = HyperbolicReuleaux::build(circumradius, epsilon)?;
        unsafe { store(out, new_curve(r.curve), "out") }
    })
}

/// Both tangencies from the exterior point `(x, y)` into `out[0..2]`.
///
/// # Safety
/// `curve` must be a live handle; `out` must point to two writable
/// [`EqtTangent`]s.
#[no_mangle]
pub unsafe extern "C" fn eqt_curve_tangents(curve: *const EqtCurve, x: f64, y: f64, out: *mut EqtTangent) -> EqtStatus {
    guard(|| {
        let curve = unsafe { borrow(curve, "curve") }?;
        let (t1, t2) = curve.0.tangents_from_point(Point2::new(x, y))?;
        if out.is_null() {
            return Err(null("out"));
        }
        for (k, t) in [t1, t2].into_iter().enumerate() {
            let value = EqtTangent { x: t.point.x, y: t.point.y, length: t.length, param: t.param };
            // SAFETY: two writable slots per the caller.
            unsafe { out.add(k).write(value) };
        }
        Ok(())
    })
}

/// Largest `|L1 − L2|` over `n` points given as interleaved `x, y` pairs.
///
/// # Safety
/// `curve` must be a live handle; `xy` must point to `2n` doubles; `out` must
/// be valid for writes.
#[no_mangle]
pub unsafe extern "C" fn eqt_curve_equitangent_residual(
    curve: *const EqtCurve,
    xy: *const f64,
    n: usize,
    out: *mut f64,
) -> EqtStatus {
    guard(|| {
        let curve = unsafe { borrow(curve, "curve") }?;
        let coords = unsafe { doubles(xy, 2 * n, "xy") }?;
        let locus: Vec<Point2> = coords.chunks_exact(2).map(|c| Point2::new(c[0], c[1])).collect();
        let (residual, _) = equitangent_residual(&curve.0, &locus)?;
        unsafe { store(out, residual, "out") }
    })
}

/// Smallest and largest Euclidean width over `directions` sampled angles.
///
/// # Safety
/// `curve` must be a live handle; `min` and `max` must be valid for writes.
#[no_mangle]
pub unsafe extern "C" fn eqt_curve_width_range(
    curve: *const EqtCurve,
    directions: usize,
    min: *mut f64,
    max: *mut f64,
) -> EqtStatus {
    guard(|| {
        let curve = unsafe { borrow(curve, "curve") }?;
        if directions == 0 {
            return Err(GeomError::InvalidInput("directions must be positive".into()).into());
        }
        if min.is_null() || max.is_null() {
            return Err(null("min/max"));
        }
        let (lo, hi) = width_range(&curve.0, directions);
        unsafe {
            store(min, lo, "min")?;
            store(max, hi, "max")
        }
    })
}

/// Largest `|L1 − L2|` for tangents from the points `(xs[i], 0)` of the
/// boundary line, measured in the upper half-plane metric.
///
/// # Safety
/// `curve` must be a live handle; `xs` must point to `n` doubles; `out` must
/// be valid for writes.
#[no_mangle]
pub unsafe extern "C" fn eqt_curve_boundary_equitangent_residual(
    curve: *const EqtCurve,
    xs: *const f64,
    n: usize,
    out: *mut f64,
) -> EqtStatus {
    guard(|| {
        let curve = unsafe { borrow(curve, "curve") }?;
        let xs = unsafe { doubles(xs, n, "xs") }?;
        let residual = equitangent_from_boundary_residual(&curve.0, xs)?;
        unsafe { store(out, residual, "out") }
    })
}

/// Distance between two points of the upper half-plane.
///
/// # Safety
/// `out` must be valid for writes.
#[no_mangle]
pub unsafe extern "C" fn eqt_hyp_distance(px: f64, py: f64, qx: f64, qy: f64, out: *mut f64) -> EqtStatus {
    guard(|| {
        let d = hyp_distance(HalfPlanePoint::new(px, py)?, HalfPlanePoint::new(qx, qy)?);
        unsafe { store(out, d, "out") }
    })
}

/// Surface by name (`sphere`, `spheroid`, `ellipsoid`, `quartic`) and
/// parameters; `n_params == 0` selects the defaults.
///
/// # Safety
/// `name` must be a NUL-terminated string, `params` must point to `n_params`
/// doubles, and `out` must be valid for writes.
#[no_mangle]
pub unsafe extern "C" fn eqt_surface_new(
    name: *const c_char,
    params: *const f64,
    n_params: usize,
    out: *mut *mut EqtSurface,
) -> EqtStatus {
    guard(|| {
        let name = unsafe { text(name, "name") }?;
        let params = unsafe { doubles(params, n_params, "params") }?;
        let surface = Surface::from_name(name, params)?;
        unsafe { store(out, Box::into_raw(Box::new(EqtSurface(surface))), "out") }
    })
}

/// Releases a surface handle. Null is ignored.
///
/// # Safety
/// `surface` must be null or a handle not yet freed.
#[no_mangle]
pub unsafe extern "C" fn eqt_surface_free(surface: *mut EqtSurface) {
    if !surface.is_null() {
        // SAFETY: created by `Box::into_raw` in this library.
        drop(unsafe { Box::from_raw(surface) });
    }
}

/// Spread of tangent-segment lengths from `(x, y, z)` over `samples` contact
/// points.
///
/// # Safety
/// `surface` must be a live handle; `out` must be valid for writes.
#[no_mangle]
pub unsafe extern "C" fn eqt_surface_tangent_length_spread(
    surface: *const EqtSurface,
    x: f64,
    y: f64,
    z: f64,
    samples: usize,
    out: *mut EqtLengthSpread,
) -> EqtStatus {
    guard(|| {
        let surface = unsafe { borrow(surface, "surface") }?;
        let s = tangent_length_spread(&surface.0, &Vec3::new(x, y, z), samples)?;
        unsafe { store(out, EqtLengthSpread { min: s.min, max: s.max, spread: s.spread }, "out") }
    })
}

/// Principal curvatures `k1 >= k2` at a surface point.
///
/// # Safety
/// `surface` must be a live handle; `k1` and `k2` must be valid for writes.
#[no_mangle]
pub unsafe extern "C" fn eqt_surface_principal_curvatures(
    surface: *const EqtSurface,
    x: f64,
    y: f64,
    z: f64,
    k1: *mut f64,
    k2: *mut f64,
) -> EqtStatus {
    guard(|| {
        let surface = unsafe { borrow(surface, "surface") }?;
        if k1.is_null() || k2.is_null() {
            return Err(null("k1/k2"));
        }
        let c = principal_curvatures(&surface.0, &Vec3::new(x, y, z))?;
        unsafe {
            store(k1, c.k1, "k1")?;
            store(k2, c.k2, "k2")
        }
    })
}
