//! C ABI over the recoloring library. Graphs travel as opaque handles,
//! reports as caller-freed JSON strings, failures as status codes with a
//! thread-local message behind `pcopt_last_error_message`.

use std::cell::RefCell;
use std::ffi::{c_char, CStr, CString};
use std::panic::{catch_unwind, AssertUnwindSafe};

use pcopt::{
    analyze, conjecture_probe, construct_plan, default_budget, exact_pc_opt, generate,
    independence_number, parse_family_spec, verify, AnalysisLimits, ColoringPlan, Error, Graph,
    ProbeStatus, SolveStatus, DEFAULT_VERTEX_CAP,
};

/// Opaque handle to an immutable graph.
pub struct PcGraph(Graph);

/// Result of every fallible call. Anything other than `Ok` leaves a
/// description behind `pcopt_last_error_message`; `VerifyFailed` and
/// `Infeasible` still fill the output report when one exists.
#[repr(C)]
#[derive(Clone, Copy, PartialEq, Eq, Debug)]
pub enum PcStatus {
    Ok = 0,
    /// Unparsable input, invalid parameter, or a malformed plan.
    InvalidInput = 1,
    /// A supplied plan was applied but failed verification.
    VerifyFailed = 2,
    /// A vertex cap, search budget, or resample limit was exhausted.
    Infeasible = 3,
    /// An invariant the library promises was broken; report it.
    Internal = 4,
    NullArgument = 5,
}

thread_local! {
    static LAST_ERROR: RefCell<Option<CString>> = const { RefCell::new(None) };
}

fn set_last_error(msg: &str) {
    let owned = CString::new(msg.replace('\0', " ")).unwrap();
    LAST_ERROR.with(|slot| *slot.borrow_mut() = Some(owned));
}

fn status_of(e: &Error) -> PcStatus {
    match e {
        Error::CapExceeded { .. } | Error::TooLarge { .. } | Error::ResampleLimit { .. } => {
            PcStatus::Infeasible
        }
        Error::Internal(_) | Error::HypothesisViolation(_) => PcStatus::Internal,
        _ => PcStatus::InvalidInput,
    }
}

fn fail(e: &Error) -> PcStatus {
    set_last_error(&e.to_string());
    status_of(e)
}

fn guarded(f: impl FnOnce() -> PcStatus) -> PcStatus {
    match catch_unwind(AssertUnwindSafe(f)) {
        Ok(status) => status,
        Err(_) => {
            set_last_error("internal panic");
            PcStatus::Internal
        }
    }
}

/// Clears `*out` and hands it back, or records a null-argument error.
unsafe fn out_slot<'a, T>(out: *mut *mut T) -> Option<&'a mut *mut T> {
    if out.is_null() {
        set_last_error("null output argument");
        return None;
    }
    let slot = &mut *out;
    *slot = std::ptr::null_mut();
    Some(slot)
}

unsafe fn graph_ref<'a>(g: *const PcGraph) -> Option<&'a PcGraph> {
    if g.is_null() {
        set_last_error("null graph handle");
        None
    } else {
        Some(&*g)
    }
}

unsafe fn utf8_arg<'a>(p: *const c_char, name: &str) -> Result<&'a str, PcStatus> {
    if p.is_null() {
        set_last_error(&format!("null argument: {name}"));
        return Err(PcStatus::NullArgument);
    }
    CStr::from_ptr(p).to_str().map_err(|_| {
        set_last_error(&format!("argument {name} is not valid UTF-8"));
        PcStatus::InvalidInput
    })
}

fn put_string(slot: &mut *mut c_char, s: String) {
    *slot = CString::new(s.replace('\0', " ")).unwrap().into_raw();
}

fn limits(vertex_cap: usize, subgraph_cap: usize) -> AnalysisLimits {
    AnalysisLimits {
        vertex_cap: if vertex_cap == 0 { DEFAULT_VERTEX_CAP } else { vertex_cap },
        subgraph_cap: if subgraph_cap == 0 { DEFAULT_VERTEX_CAP } else { subgraph_cap },
    }
}

macro_rules! emit {
    ($slot:expr, $value:expr) => {
        match serde_json::to_string_pretty($value) {
            Ok(s) => put_string($slot, s),
            Err(e) => {
                set_last_error(&format!("serialization failed: {e}"));
                return PcStatus::Internal;
            }
        }
    };
}

/// Library version as a static string; do not free.
#[no_mangle]
pub extern "C" fn pcopt_version() -> *const c_char {
    concat!(env!("CARGO_PKG_VERSION"), "\0").as_ptr() as *const c_char
}

/// Message for the most recent failure on this thread, or null. The
/// pointer stays valid until the next failing call on the same thread;
/// do not free it.
#[no_mangle]
pub extern "C" fn pcopt_last_error_message() -> *const c_char {
    LAST_ERROR.with(|slot| {
        slot.borrow()
            .as_ref()
            .map_or(std::ptr::null(), |s| s.as_ptr())
    })
}

/// Frees a string returned through any `char **` output.
///
/// # Safety
/// `s` must be null or a pointer previously returned by this library
/// and not yet freed.
#[no_mangle]
pub unsafe extern "C" fn pcopt_string_free(s: *mut c_char) {
    if !s.is_null() {
        drop(CString::from_raw(s));
    }
}

/// Parses the edge-list text format into a new graph handle.
///
/// # Safety
/// `text` must be a NUL-terminated string; `out` must point to writable
/// memory for one pointer. On success the handle must be released with
/// `pcopt_graph_free`.
#[no_mangle]
pub unsafe extern "C" fn pcopt_graph_parse(
    text: *const c_char,
    out: *mut *mut PcGraph,
) -> PcStatus {
    guarded(|| {
        let Some(slot) = out_slot(out) else {
            return PcStatus::NullArgument;
        };
        let text = match utf8_arg(text, "text") {
            Ok(t) => t,
            Err(status) => return status,
        };
        match Graph::parse(text) {
            Ok(g) => {
                *slot = Box::into_raw(Box::new(PcGraph(g)));
                PcStatus::Ok
            }
            Err(e) => fail(&e),
        }
    })
}

/// Builds a graph from a family spec such as `cycle(7)` or
/// `random_tree(9)`. `seed` may be null for deterministic families.
///
/// # Safety
/// `spec` must be a NUL-terminated string; `seed` must be null or point
/// to a readable u64; `out` must point to writable memory for one
/// pointer. On success the handle must be released with
/// `pcopt_graph_free`.
#[no_mangle]
pub unsafe extern "C" fn pcopt_graph_from_family(
    spec: *const c_char,
    seed: *const u64,
    out: *mut *mut PcGraph,
) -> PcStatus {
    guarded(|| {
        let Some(slot) = out_slot(out) else {
            return PcStatus::NullArgument;
        };
        let spec = match utf8_arg(spec, "spec") {
            Ok(s) => s,
            Err(status) => return status,
        };
        let seed = if seed.is_null() { None } else { Some(*seed) };
        let family = match parse_family_spec(spec) {
            Ok(f) => f,
            Err(e) => return fail(&e),
        };
        match generate(&family, seed) {
            Ok(g) => {
                *slot = Box::into_raw(Box::new(PcGraph(g)));
                PcStatus::Ok
            }
            Err(e) => fail(&e),
        }
    })
}

/// Releases a graph handle.
///
/// # Safety
/// `g` must be null or a handle previously returned by this library and
/// not yet freed.
#[no_mangle]
pub unsafe extern "C" fn pcopt_graph_free(g: *mut PcGraph) {
    if !g.is_null() {
        drop(Box::from_raw(g));
    }
}

/// Number of vertices, or 0 for a null handle.
///
/// # Safety
/// `g` must be null or a live handle from this library.
#[no_mangle]
pub unsafe extern "C" fn pcopt_graph_order(g: *const PcGraph) -> usize {
    graph_ref(g).map_or(0, |g| g.0.order())
}

/// Number of edges, or 0 for a null handle.
///
/// # Safety
/// `g` must be null or a live handle from this library.
#[no_mangle]
pub unsafe extern "C" fn pcopt_graph_size(g: *const PcGraph) -> usize {
    graph_ref(g).map_or(0, |g| g.0.size())
}

/// Writes the graph back out in the canonical edge-list text format.
///
/// # Safety
/// `g` must be a live handle; `out` must point to writable memory for
/// one pointer. The string must be released with `pcopt_string_free`.
#[no_mangle]
pub unsafe extern "C" fn pcopt_graph_edge_list(
    g: *const PcGraph,
    out: *mut *mut c_char,
) -> PcStatus {
    guarded(|| {
        let Some(slot) = out_slot(out) else {
            return PcStatus::NullArgument;
        };
        let Some(g) = graph_ref(g) else {
            return PcStatus::NullArgument;
        };
        put_string(slot, g.0.to_edge_list());
        PcStatus::Ok
    })
}

/// Structure report as JSON. Caps of 0 select the library default.
///
/// # Safety
/// `g` must be a live handle; `out` must point to writable memory for
/// one pointer. The string must be released with `pcopt_string_free`.
#[no_mangle]
pub unsafe extern "C" fn pcopt_analyze_json(
    g: *const PcGraph,
    vertex_cap: usize,
    subgraph_cap: usize,
    out: *mut *mut c_char,
) -> PcStatus {
    guarded(|| {
        let Some(slot) = out_slot(out) else {
            return PcStatus::NullArgument;
        };
        let Some(g) = graph_ref(g) else {
            return PcStatus::NullArgument;
        };
        match analyze(&g.0, limits(vertex_cap, subgraph_cap)) {
            Ok(report) => {
                emit!(slot, &report);
                PcStatus::Ok
            }
            Err(e) => fail(&e),
        }
    })
}

/// Constructs a verified recoloring plan and returns it as JSON. Caps
/// of 0 select the library default.
///
/// # Safety
/// `g` must be a live handle; `out` must point to writable memory for
/// one pointer. The string must be released with `pcopt_string_free`.
#[no_mangle]
pub unsafe extern "C" fn pcopt_construct_plan_json(
    g: *const PcGraph,
    vertex_cap: usize,
    subgraph_cap: usize,
    out: *mut *mut c_char,
) -> PcStatus {
    guarded(|| {
        let Some(slot) = out_slot(out) else {
            return PcStatus::NullArgument;
        };
        let Some(g) = graph_ref(g) else {
            return PcStatus::NullArgument;
        };
        match construct_plan(&g.0, limits(vertex_cap, subgraph_cap)) {
            Ok(plan) => {
                emit!(slot, &plan);
                PcStatus::Ok
            }
            Err(e) => fail(&e),
        }
    })
}

/// Applies a JSON plan to the graph and verifies proper connectivity.
/// Returns `Ok` and the report when the plan holds, `VerifyFailed` and
/// the report (including the failing pair) when it does not.
///
/// # Safety
/// `g` must be a live handle; `plan_json` must be a NUL-terminated
/// string; `out` must point to writable memory for one pointer. The
/// string must be released with `pcopt_string_free`.
#[no_mangle]
pub unsafe extern "C" fn pcopt_verify_plan_json(
    g: *const PcGraph,
    plan_json: *const c_char,
    witnesses: bool,
    out: *mut *mut c_char,
) -> PcStatus {
    guarded(|| {
        let Some(slot) = out_slot(out) else {
            return PcStatus::NullArgument;
        };
        let Some(g) = graph_ref(g) else {
            return PcStatus::NullArgument;
        };
        let text = match utf8_arg(plan_json, "plan_json") {
            Ok(t) => t,
            Err(status) => return status,
        };
        let plan: ColoringPlan = match serde_json::from_str(text) {
            Ok(p) => p,
            Err(e) => return fail(&Error::InvalidPlan(format!("unreadable plan: {e}"))),
        };
        let coloring = match plan.apply(&g.0) {
            Ok(c) => c,
            Err(e) => return fail(&e),
        };
        let report = verify(&coloring, witnesses);
        let ok = report.ok;
        emit!(slot, &report);
        if ok {
            PcStatus::Ok
        } else {
            set_last_error("plan failed verification");
            PcStatus::VerifyFailed
        }
    })
}

/// Exact minimum search, reported as JSON. A negative budget selects
/// the default ceiling floor((5a - 1) / 2); a vertex cap of 0 selects
/// the library default. Returns `Infeasible` (with the report) when the
/// budget is exhausted.
///
/// # Safety
/// `g` must be a live handle; `out` must point to writable memory for
/// one pointer. The string must be released with `pcopt_string_free`.
#[no_mangle]
pub unsafe extern "C" fn pcopt_exact_json(
    g: *const PcGraph,
    budget: i64,
    vertex_cap: usize,
    out: *mut *mut c_char,
) -> PcStatus {
    guarded(|| {
        let Some(slot) = out_slot(out) else {
            return PcStatus::NullArgument;
        };
        let Some(g) = graph_ref(g) else {
            return PcStatus::NullArgument;
        };
        let cap = limits(vertex_cap, 0).vertex_cap;
        if g.0.order() > cap {
            return fail(&Error::CapExceeded {
                n: g.0.order(),
                cap,
            });
        }
        let budget = if budget < 0 {
            match independence_number(&g.0, cap) {
                Ok(alpha) => default_budget(alpha),
                Err(e) => return fail(&e),
            }
        } else {
            budget as usize
        };
        match exact_pc_opt(&g.0, budget) {
            Ok(result) => {
                let exhausted = result.status == SolveStatus::BudgetExceeded;
                emit!(slot, &result);
                if exhausted {
                    set_last_error("search budget exhausted");
                    PcStatus::Infeasible
                } else {
                    PcStatus::Ok
                }
            }
            Err(e) => fail(&e),
        }
    })
}

/// Compares the exact optimum against the 2a - 2 target, reported as
/// JSON. A negative budget selects the default ceiling; caps of 0
/// select the library default. An inconclusive probe (budget exhausted)
/// returns `Infeasible` with the report; a violation is a finding, not
/// an error.
///
/// # Safety
/// `g` must be a live handle; `out` must point to writable memory for
/// one pointer. The string must be released with `pcopt_string_free`.
#[no_mangle]
pub unsafe extern "C" fn pcopt_probe_json(
    g: *const PcGraph,
    budget: i64,
    vertex_cap: usize,
    subgraph_cap: usize,
    out: *mut *mut c_char,
) -> PcStatus {
    guarded(|| {
        let Some(slot) = out_slot(out) else {
            return PcStatus::NullArgument;
        };
        let Some(g) = graph_ref(g) else {
            return PcStatus::NullArgument;
        };
        let budget = if budget < 0 { None } else { Some(budget as usize) };
        match conjecture_probe(&g.0, limits(vertex_cap, subgraph_cap), budget) {
            Ok(report) => {
                let inconclusive = report.status == ProbeStatus::Inconclusive;
                emit!(slot, &report);
                if inconclusive {
                    set_last_error("search budget exhausted");
                    PcStatus::Infeasible
                } else {
                    PcStatus::Ok
                }
            }
            Err(e) => fail(&e),
        }
    })
}
