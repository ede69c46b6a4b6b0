//! C interface to `icr`.
//!
//! Groups and rings are opaque heap handles released with their `_free`
//! function. Every entry point returns an [`IcrStatus`]; on failure the
//! message is kept per thread and read back with [`icr_last_error`].
//! Panics never cross the boundary.

use icr::classify::{classify, Filter};
use icr::endo::{enumerate_automorphisms, enumerate_endomorphisms, EndoPair};
use icr::group::{parse_group_spec, FiniteGroup, Limits, DEFAULT_CAP};
use icr::interchange::{magma_props, EssentialTag, InterchangeNearRing};
use icr::Error;
use std::cell::RefCell;
use std::ffi::{c_char, CStr};
use std::panic::{catch_unwind, AssertUnwindSafe};
use std::sync::Arc;

/// Result of every call.
#[repr(C)]
#[derive(Clone, Copy, Debug, PartialEq, Eq)]
pub enum IcrStatus {
    Ok = 0,
    NullPointer = 1,
    InvalidInput = 2,
    CapExceeded = 3,
    VerificationFailed = 4,
    BufferTooSmall = 5,
    Panic = 6,
}

#[repr(C)]
#[derive(Clone, Copy, Debug, PartialEq, Eq)]
pub enum IcrFilter {
    All = 0,
    Associative = 1,
    Commutative = 2,
    Band = 3,
    Essential = 4,
}

#[repr(C)]
#[derive(Clone, Copy, Debug, PartialEq, Eq)]
pub enum IcrEssentialTag {
    Zero = 0,
    LeftZero = 1,
    RightZero = 2,
    AdditiveCopy = 3,
    Inessential = 4,
}

/// Properties of a ring's product.
#[repr(C)]
#[derive(Clone, Copy, Debug, PartialEq, Eq)]
pub struct IcrProps {
    pub associative: bool,
    pub commutative: bool,
    pub idempotent: bool,
    pub zero_semigroup: bool,
    pub proper: bool,
    pub essential_tag: IcrEssentialTag,
}

/// A finite group.
pub struct IcrGroup {
    group: Arc<FiniteGroup>,
    limits: Limits,
}

/// An interchange near ring.
pub struct IcrRing {
    ring: InterchangeNearRing,
}

thread_local! {
    static LAST_ERROR: RefCell<String> = const { RefCell::new(String::new()) };
}

fn set_error(msg: impl Into<String>) {
    LAST_ERROR.with(|e| *e.borrow_mut() = msg.into());
}

struct Fail(IcrStatus, String);

impl From<Error> for Fail {
    fn from(e: Error) -> Self {
        let status = match e {
            Error::CapExceeded { .. } | Error::BudgetExceeded { .. } => IcrStatus::CapExceeded,
            Error::Verification(_) | Error::PropertyMismatch(_) => IcrStatus::VerificationFailed,
            _ => IcrStatus::InvalidInput,
        };
        Fail(status, e.to_string())
    }
}

fn null(what: &str) -> Fail {
    Fail(IcrStatus::NullPointer, format!("{what} is null"))
}

fn guard(f: impl FnOnce() -> Result<(), Fail>) -> IcrStatus {
    match catch_unwind(AssertUnwindSafe(f)) {
        Ok(Ok(())) => {
            set_error("");
            IcrStatus::Ok
        }
        Ok(Err(Fail(status, msg))) => {
            set_error(msg);
            status
        }
        Err(p) => {
            let msg = p
                .downcast_ref::<&str>()
                .map(|s| s.to_string())
                .or_else(|| p.downcast_ref::<String>().cloned())
                .unwrap_or_else(|| "unknown panic".into());
            set_error(format!("internal panic: {msg}"));
            IcrStatus::Panic
        }
    }
}

unsafe fn text<'a>(p: *const c_char, what: &str) -> Result<&'a str, Fail> {
    if p.is_null() {
        return Err(null(what));
    }
    CStr::from_ptr(p)
        .to_str()
        .map_err(|_| Fail(IcrStatus::InvalidInput, format!("{what} is not UTF-8")))
}

unsafe fn get<'a, T>(p: *const T, what: &str) -> Result<&'a T, Fail> {
    p.as_ref().ok_or_else(|| null(what))
}

unsafe fn put<T>(out: *mut T, value: T) -> Result<(), Fail> {
    if out.is_null() {
        return Err(null("output pointer"));
    }
    out.write(value);
    Ok(())
}

/// Copies `s` with a trailing NUL into `buf`. `needed`, if non-null,
/// receives the full size including the NUL.
unsafe fn write_str(s: &str, buf: *mut c_char, len: usize, needed: *mut usize) -> Result<(), Fail> {
    let size = s.len() + 1;
    if !needed.is_null() {
        needed.write(size);
    }
    if buf.is_null() || len < size {
        return Err(Fail(IcrStatus::BufferTooSmall, format!("buffer of {len} bytes, {size} needed")));
    }
    std::ptr::copy_nonoverlapping(s.as_ptr(), buf.cast::<u8>(), s.len());
    buf.add(s.len()).write(0);
    Ok(())
}

/// Copies the calling thread's last error message into `buf` and returns
/// its size including the NUL. Pass a null `buf` to query the size. The
/// message is empty after a successful call.
///
/// # Safety
/// `buf` must be null or valid for `len` bytes.
#[no_mangle]
pub unsafe extern "C" fn icr_last_error(buf: *mut c_char, len: usize) -> usize {
    LAST_ERROR.with(|e| {
        let e = e.borrow();
        let size = e.len() + 1;
        if !buf.is_null() && len > 0 {
            let n = e.len().min(len - 1);
            std::ptr::copy_nonoverlapping(e.as_ptr(), buf.cast::<u8>(), n);
            buf.add(n).write(0);
        }
        size
    })
}

/// The library version as a static NUL-terminated string.
#[no_mangle]
pub extern "C" fn icr_version() -> *const c_char {
    concat!(env!("CARGO_PKG_VERSION"), "\0").as_ptr().cast()
}

/// Builds a group from a spec such as `Z4+Z2`, `V`, `S3`, `D4`, `Q8` or
/// `table:path`. A `cap` of 0 selects the default size cap.
///
/// # Safety
/// `spec` must be a NUL-terminated string; `out` must be writable.
#[no_mangle]
pub unsafe extern "C" fn icr_group_parse(spec: *const c_char, cap: usize, out: *mut *mut IcrGroup) -> IcrStatus {
    guard(|| {
        let spec = text(spec, "spec")?;
        let limits = Limits::with_cap(if cap == 0 { DEFAULT_CAP } else { cap });
        let group = Arc::new(parse_group_spec(spec, &limits)?);
        put(out, Box::into_raw(Box::new(IcrGroup { group, limits })))
    })
}

/// # Safety
/// `g` must be null or a handle from [`icr_group_parse`] not yet freed.
#[no_mangle]
pub unsafe extern "C" fn icr_group_free(g: *mut IcrGroup) {
    if !g.is_null() {
        drop(Box::from_raw(g));
    }
}

/// # Safety
/// `g` must be a live group handle; `out` must be writable.
#[no_mangle]
pub unsafe extern "C" fn icr_group_order(g: *const IcrGroup, out: *mut usize) -> IcrStatus {
    guard(|| put(out, get(g, "group")?.group.order()))
}

/// # Safety
/// `g` must be a live group handle; `out` must be writable.
#[no_mangle]
pub unsafe extern "C" fn icr_group_is_abelian(g: *const IcrGroup, out: *mut bool) -> IcrStatus {
    guard(|| put(out, get(g, "group")?.group.is_abelian()))
}

/// Number of endomorphisms and of automorphisms. Either output may be null.
///
/// # Safety
/// `g` must be a live group handle; non-null outputs must be writable.
#[no_mangle]
pub unsafe extern "C" fn icr_group_endomorphism_counts(
    g: *const IcrGroup,
    endomorphisms: *mut u64,
    automorphisms: *mut u64,
) -> IcrStatus {
    guard(|| {
        let g = get(g, "group")?;
        if !endomorphisms.is_null() {
            endomorphisms.write(enumerate_endomorphisms(&g.group, &g.limits)?.len() as u64);
        }
        if !automorphisms.is_null() {
            automorphisms.write(enumerate_automorphisms(&g.group, &g.limits)?.len() as u64);
        }
        Ok(())
    })
}

/// Number of isomorphism classes of rings on `g` passing `filter`.
///
/// # Safety
/// `g` must be a live group handle; `out` must be writable.
#[no_mangle]
pub unsafe extern "C" fn icr_classify(g: *const IcrGroup, filter: IcrFilter, out: *mut u64) -> IcrStatus {
    guard(|| {
        let g = get(g, "group")?;
        let filter = match filter {
            IcrFilter::All => Filter::All,
            IcrFilter::Associative => Filter::Associative,
            IcrFilter::Commutative => Filter::Commutative,
            IcrFilter::Band => Filter::Band,
            IcrFilter::Essential => Filter::Essential,
        };
        put(out, classify(&g.group, filter, &g.limits)?.total_classes as u64)
    })
}

/// Builds the ring of a pair written as `(0abc),(0def)`.
///
/// # Safety
/// `g` must be a live group handle, `pair` a NUL-terminated string and
/// `out` writable.
#[no_mangle]
pub unsafe extern "C" fn icr_ring_from_pair(g: *const IcrGroup, pair: *const c_char, out: *mut *mut IcrRing) -> IcrStatus {
    guard(|| {
        let g = get(g, "group")?;
        let pair = EndoPair::parse(&g.group, text(pair, "pair")?)?;
        let ring = InterchangeNearRing::from_pair(&g.group, pair)?;
        put(out, Box::into_raw(Box::new(IcrRing { ring })))
    })
}

/// Builds a ring from a row-major product table of `len = n * n` entries,
/// rejecting tables that break the interchange law.
///
/// # Safety
/// `g` must be a live group handle, `table` valid for `len` reads and `out`
/// writable.
#[no_mangle]
pub unsafe extern "C" fn icr_ring_from_product(
    g: *const IcrGroup,
    table: *const u32,
    len: usize,
    out: *mut *mut IcrRing,
) -> IcrStatus {
    guard(|| {
        let g = get(g, "group")?;
        if table.is_null() {
            return Err(null("table"));
        }
        let n = g.group.order();
        if len != n * n {
            return Err(Fail(IcrStatus::InvalidInput, format!("table has {len} entries, expected {}", n * n)));
        }
        let product = std::slice::from_raw_parts(table, len).to_vec();
        let ring = InterchangeNearRing::from_product(&g.group, product)?;
        put(out, Box::into_raw(Box::new(IcrRing { ring })))
    })
}

/// # Safety
/// `r` must be null or a live ring handle.
#[no_mangle]
pub unsafe extern "C" fn icr_ring_free(r: *mut IcrRing) {
    if !r.is_null() {
        drop(Box::from_raw(r));
    }
}

/// # Safety
/// `r` must be a live ring handle; `out` must be writable.
#[no_mangle]
pub unsafe extern "C" fn icr_ring_order(r: *const IcrRing, out: *mut usize) -> IcrStatus {
    guard(|| put(out, get(r, "ring")?.ring.order()))
}

/// `x . y`.
///
/// # Safety
/// `r` must be a live ring handle; `out` must be writable.
#[no_mangle]
pub unsafe extern "C" fn icr_ring_mul(r: *const IcrRing, x: u32, y: u32, out: *mut u32) -> IcrStatus {
    guard(|| {
        let r = &get(r, "ring")?.ring;
        let n = r.order() as u32;
        if x >= n || y >= n {
            return Err(Fail(IcrStatus::InvalidInput, format!("element out of range for order {n}")));
        }
        put(out, r.mul(x, y))
    })
}

/// Copies the row-major product table into `buf`, which must hold `n * n`
/// entries.
///
/// # Safety
/// `r` must be a live ring handle and `buf` valid for `len` writes.
#[no_mangle]
pub unsafe extern "C" fn icr_ring_product_table(r: *const IcrRing, buf: *mut u32, len: usize) -> IcrStatus {
    guard(|| {
        let t = get(r, "ring")?.ring.product_table();
        if buf.is_null() || len < t.len() {
            return Err(Fail(IcrStatus::BufferTooSmall, format!("buffer of {len} entries, {} needed", t.len())));
        }
        std::ptr::copy_nonoverlapping(t.as_ptr(), buf, t.len());
        Ok(())
    })
}

/// Product properties, each computed from the pair and from the table.
///
/// # Safety
/// `r` must be a live ring handle; `out` must be writable.
#[no_mangle]
pub unsafe extern "C" fn icr_ring_props(r: *const IcrRing, out: *mut IcrProps) -> IcrStatus {
    guard(|| {
        let p = magma_props(&get(r, "ring")?.ring)?;
        let essential_tag = match p.essential_tag {
            EssentialTag::Zero => IcrEssentialTag::Zero,
            EssentialTag::LeftZero => IcrEssentialTag::LeftZero,
            EssentialTag::RightZero => IcrEssentialTag::RightZero,
            EssentialTag::AdditiveCopy => IcrEssentialTag::AdditiveCopy,
            EssentialTag::Inessential => IcrEssentialTag::Inessential,
        };
        put(
            out,
            IcrProps {
                associative: p.associative,
                commutative: p.commutative,
                idempotent: p.idempotent,
                zero_semigroup: p.zero_semigroup,
                proper: p.proper,
                essential_tag,
            },
        )
    })
}

/// Writes the generating pair as `(0abc),(0def)`. `needed`, if non-null,
/// receives the size including the NUL even when `buf` is too small.
///
/// # Safety
/// `r` must be a live ring handle, `buf` null or valid for `len` bytes, and
/// `needed` null or writable.
#[no_mangle]
pub unsafe extern "C" fn icr_ring_pair(r: *const IcrRing, buf: *mut c_char, len: usize, needed: *mut usize) -> IcrStatus {
    guard(|| write_str(&get(r, "ring")?.ring.pair().notation(), buf, len, needed))
}

/// `(r+1)(r+2)(r+3)/6`, the number of associative classes on `r` copies of
/// `Z_{p^n}`. Saturates at `UINT64_MAX`.
#[no_mangle]
pub extern "C" fn icr_count_formula(r: u32) -> u64 {
    u64::try_from(icr::canonical::count_formula(r)).unwrap_or(u64::MAX)
}
