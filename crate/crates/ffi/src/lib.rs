//! C ABI over `resolving-core`.
//!
//! Every fallible function returns a [`ResolvingStatus`] and writes its
//! result through an out pointer. On failure, [`resolving_last_error`] gives
//! a message for the calling thread. Handles and strings handed out by this
//! library must be released with the matching `*_free` function.

use std::cell::RefCell;
use std::ffi::{c_char, CStr, CString};
use std::panic::{catch_unwind, AssertUnwindSafe};
use std::ptr;

use resolving_core::closed_forms::{self, Status};
use resolving_core::io::{self, GraphDocument, ReportDocument, ReportFormat, ReportOptions, SourceFormat};
use resolving_core::metric_dim;
use resolving_core::rational::{to_decimal_string, to_fraction_string};
use resolving_core::resolving::{resolving_index_with, IndexOptions, ShareReport};
use resolving_core::{Error, FamilySpec, Graph};

#[repr(C)]
#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub enum ResolvingStatus {
    Ok = 0,
    NullPointer = 1,
    InvalidUtf8 = 2,
    InvalidInput = 3,
    Disconnected = 4,
    OutOfRange = 5,
    TooLarge = 6,
    CapExceeded = 7,
    NoClosedForm = 8,
    Panic = 9,
}

#[repr(C)]
#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub enum ResolvingClosedFormStatus {
    Confirmed = 0,
    Corrected = 1,
    Unverified = 2,
}

/// Opaque graph handle.
pub struct ResolvingGraph {
    input: String,
    doc: GraphDocument,
}

/// Opaque handle to a computed share report.
pub struct ResolvingReport {
    doc: ReportDocument,
}

thread_local! {
    static LAST_ERROR: RefCell<Option<CString>> = const { RefCell::new(None) };
}

struct Failure {
    status: ResolvingStatus,
    message: String,
}

impl From<Error> for Failure {
    fn from(err: Error) -> Self {
        let status = match &err {
            Error::Disconnected => ResolvingStatus::Disconnected,
            Error::VertexOutOfRange { .. } => ResolvingStatus::OutOfRange,
            Error::TooLarge { .. } => ResolvingStatus::TooLarge,
            Error::ExactCapExceeded { .. } => ResolvingStatus::CapExceeded,
            Error::Hypothesis(_) => ResolvingStatus::NoClosedForm,
            _ => ResolvingStatus::InvalidInput,
        };
        Failure { status, message: err.to_string() }
    }
}

fn fail(status: ResolvingStatus, message: &str) -> Failure {
    Failure { status, message: message.to_string() }
}

fn set_last_error(message: Option<String>) {
    let message = message.map(|m| CString::new(m.replace('\0', " ")).expect("nul bytes replaced"));
    LAST_ERROR.with(|slot| *slot.borrow_mut() = message);
}

/// Runs `f`, records its error message and converts panics into
/// [`ResolvingStatus::Panic`].
fn guard(f: impl FnOnce() -> Result<(), Failure>) -> ResolvingStatus {
    match catch_unwind(AssertUnwindSafe(f)) {
        Ok(Ok(())) => {
            set_last_error(None);
            ResolvingStatus::Ok
        }
        Ok(Err(failure)) => {
            set_last_error(Some(failure.message));
            failure.status
        }
        Err(payload) => {
            let message = payload
                .downcast_ref::<&str>()
                .map(|s| s.to_string())
                .or_else(|| payload.downcast_ref::<String>().cloned())
                .unwrap_or_else(|| "unknown panic".to_string());
            set_last_error(Some(format!("panic: {message}")));
            ResolvingStatus::Panic
        }
    }
}

unsafe fn str_arg<'a>(s: *const c_char, name: &str) -> Result<&'a str, Failure> {
    if s.is_null() {
        return Err(fail(ResolvingStatus::NullPointer, &format!("{name} is null")));
    }
    CStr::from_ptr(s)
        .to_str()
        .map_err(|_| fail(ResolvingStatus::InvalidUtf8, &format!("{name} is not valid UTF-8")))
}

unsafe fn ref_arg<'a, T>(p: *const T, name: &str) -> Result<&'a T, Failure> {
    p.as_ref()
        .ok_or_else(|| fail(ResolvingStatus::NullPointer, &format!("{name} is null")))
}

unsafe fn write_out<T>(out: *mut T, value: T) -> Result<(), Failure> {
    if out.is_null() {
        return Err(fail(ResolvingStatus::NullPointer, "output pointer is null"));
    }
    out.write(value);
    Ok(())
}

fn c_string(s: String) -> *mut c_char {
    CString::new(s).expect("no interior nul").into_raw()
}

fn graph_handle(input: String, doc: GraphDocument) -> *mut ResolvingGraph {
    Box::into_raw(Box::new(ResolvingGraph { input, doc }))
}

fn plain_doc(graph: Graph, source_format: SourceFormat) -> GraphDocument {
    GraphDocument { labels: None, graph, source_format, warnings: Vec::new() }
}

/// Message for the last failed call on this thread, or null after a
/// successful call. Valid until the next call into this library.
#[no_mangle]
pub extern "C" fn resolving_last_error() -> *const c_char {
    LAST_ERROR.with(|slot| slot.borrow().as_ref().map_or(ptr::null(), |s| s.as_ptr()))
}

/// Library version as a static string.
#[no_mangle]
pub extern "C" fn resolving_version() -> *const c_char {
    concat!(env!("CARGO_PKG_VERSION"), "\0").as_ptr().cast()
}

/// Builds a graph on `n` vertices from `edge_count` pairs stored flat in
/// `edges` (`2 * edge_count` entries, 0-based).
///
/// # Safety
/// `edges` must point to `2 * edge_count` readable values (may be null when
/// `edge_count` is 0) and `out` must be writable.
#[no_mangle]
pub unsafe extern "C" fn resolving_graph_new(
    n: usize,
    edges: *const usize,
    edge_count: usize,
    out: *mut *mut ResolvingGraph,
) -> ResolvingStatus {
    guard(|| {
        let flat: &[usize] = if edge_count == 0 {
            &[]
        } else if edges.is_null() {
            return Err(fail(ResolvingStatus::NullPointer, "edges is null"));
        } else {
            std::slice::from_raw_parts(edges, 2 * edge_count)
        };
        let pairs: Vec<(usize, usize)> = flat.chunks_exact(2).map(|e| (e[0], e[1])).collect();
        let graph = Graph::new(n, &pairs)?;
        write_out(out, graph_handle("<memory>".into(), plain_doc(graph, SourceFormat::EdgeList)))
    })
}

/// Generates a named family graph such as `"petersen"` or `"wheel:9"`.
///
/// # Safety
/// `spec` must be a nul-terminated string and `out` must be writable.
#[no_mangle]
pub unsafe extern "C" fn resolving_graph_from_family(
    spec: *const c_char,
    out: *mut *mut ResolvingGraph,
) -> ResolvingStatus {
    guard(|| {
        let spec: FamilySpec = str_arg(spec, "spec")?.parse()?;
        let graph = spec.generate()?;
        write_out(out, graph_handle(format!("family:{spec}"), plain_doc(graph, SourceFormat::Family)))
    })
}

/// Parses an edge list or DIMACS text. `format` is `"edgelist"`,
/// `"dimacs"`, or null to detect it.
///
/// # Safety
/// `text` and a non-null `format` must be nul-terminated strings; `out`
/// must be writable.
#[no_mangle]
pub unsafe extern "C" fn resolving_graph_parse(
    text: *const c_char,
    format: *const c_char,
    out: *mut *mut ResolvingGraph,
) -> ResolvingStatus {
    guard(|| {
        let text = str_arg(text, "text")?;
        let format = if format.is_null() {
            None
        } else {
            Some(str_arg(format, "format")?.parse::<SourceFormat>()?)
        };
        let doc = io::parse_graph(text, format)?;
        write_out(out, graph_handle("<text>".into(), doc))
    })
}

/// # Safety
/// `graph` must be null or a handle from this library not yet freed.
#[no_mangle]
pub unsafe extern "C" fn resolving_graph_free(graph: *mut ResolvingGraph) {
    if !graph.is_null() {
        drop(Box::from_raw(graph));
    }
}

/// Number of vertices, or 0 for a null handle.
///
/// # Safety
/// `graph` must be null or a live handle.
#[no_mangle]
pub unsafe extern "C" fn resolving_graph_vertex_count(graph: *const ResolvingGraph) -> usize {
    graph.as_ref().map_or(0, |g| g.doc.graph.vertex_count())
}

/// Number of edges, or 0 for a null handle.
///
/// # Safety
/// `graph` must be null or a live handle.
#[no_mangle]
pub unsafe extern "C" fn resolving_graph_edge_count(graph: *const ResolvingGraph) -> usize {
    graph.as_ref().map_or(0, |g| g.doc.graph.edge_count())
}

/// Computes all average resolving shares and the index. `threads` of 0
/// uses the default thread pool.
///
/// # Safety
/// `graph` must be a live handle and `out` writable.
#[no_mangle]
pub unsafe extern "C" fn resolving_compute(
    graph: *const ResolvingGraph,
    threads: usize,
    per_pair: bool,
    out: *mut *mut ResolvingReport,
) -> ResolvingStatus {
    guard(|| {
        let g = ref_arg(graph, "graph")?;
        let opts = IndexOptions { per_pair, threads: (threads > 0).then_some(threads) };
        let report = resolving_index_with(&g.doc.graph, &opts)?;
        let doc = ReportDocument::new(g.input.clone(), &g.doc, report, ReportOptions { per_pair });
        write_out(out, Box::into_raw(Box::new(ResolvingReport { doc })))
    })
}

/// # Safety
/// `report` must be null or a handle from this library not yet freed.
#[no_mangle]
pub unsafe extern "C" fn resolving_report_free(report: *mut ResolvingReport) {
    if !report.is_null() {
        drop(Box::from_raw(report));
    }
}

/// Number of vertices covered by the report, or 0 for a null handle.
///
/// # Safety
/// `report` must be null or a live handle.
#[no_mangle]
pub unsafe extern "C" fn resolving_report_vertex_count(report: *const ResolvingReport) -> usize {
    report.as_ref().map_or(0, |r| r.doc.report.n)
}

fn rational_text(r: &resolving_core::Rational, decimal: bool) -> String {
    if decimal { to_decimal_string(r) } else { to_fraction_string(r) }
}

unsafe fn report_arg<'a>(report: *const ResolvingReport) -> Result<&'a ShareReport, Failure> {
    ref_arg(report, "report").map(|r| &r.doc.report)
}

/// The index as `"p/q"`, or as a 12-significant-digit decimal when
/// `decimal` is set. Free the string with [`resolving_string_free`].
///
/// # Safety
/// `report` must be a live handle and `out` writable.
#[no_mangle]
pub unsafe extern "C" fn resolving_report_index(
    report: *const ResolvingReport,
    decimal: bool,
    out: *mut *mut c_char,
) -> ResolvingStatus {
    guard(|| {
        let r = report_arg(report)?;
        write_out(out, c_string(rational_text(&r.index, decimal)))
    })
}

/// Average resolving share of `vertex`, formatted like
/// [`resolving_report_index`].
///
/// # Safety
/// `report` must be a live handle and `out` writable.
#[no_mangle]
pub unsafe extern "C" fn resolving_report_avg_share(
    report: *const ResolvingReport,
    vertex: usize,
    decimal: bool,
    out: *mut *mut c_char,
) -> ResolvingStatus {
    guard(|| {
        let r = report_arg(report)?;
        let share = r.per_vertex.get(vertex).ok_or_else(|| {
            Failure::from(Error::VertexOutOfRange { vertex, n: r.n })
        })?;
        write_out(out, c_string(rational_text(&share.avg_share, decimal)))
    })
}

/// Number of pairs resolved by `vertex`.
///
/// # Safety
/// `report` must be a live handle and `out` writable.
#[no_mangle]
pub unsafe extern "C" fn resolving_report_resolvent_count(
    report: *const ResolvingReport,
    vertex: usize,
    out: *mut u64,
) -> ResolvingStatus {
    guard(|| {
        let r = report_arg(report)?;
        let share = r.per_vertex.get(vertex).ok_or_else(|| {
            Failure::from(Error::VertexOutOfRange { vertex, n: r.n })
        })?;
        write_out(out, share.resolvent_count)
    })
}

/// The report as JSON (same layout as the CLI's `--output json`).
///
/// # Safety
/// `report` must be a live handle and `out` writable.
#[no_mangle]
pub unsafe extern "C" fn resolving_report_to_json(
    report: *const ResolvingReport,
    out: *mut *mut c_char,
) -> ResolvingStatus {
    guard(|| {
        let r = ref_arg(report, "report")?;
        write_out(out, c_string(io::write_report(&r.doc, ReportFormat::Json)))
    })
}

/// Metric dimension. Exact when the graph has at most `min(exact_cap, 64)`
/// vertices, otherwise a greedy upper bound; `out_is_exact` tells which.
///
/// # Safety
/// `graph` must be a live handle; both out pointers must be writable.
#[no_mangle]
pub unsafe extern "C" fn resolving_metric_dimension(
    graph: *const ResolvingGraph,
    exact_cap: usize,
    out_dimension: *mut usize,
    out_is_exact: *mut bool,
) -> ResolvingStatus {
    guard(|| {
        let g = &ref_arg(graph, "graph")?.doc.graph;
        if out_dimension.is_null() || out_is_exact.is_null() {
            return Err(fail(ResolvingStatus::NullPointer, "output pointer is null"));
        }
        let exact = g.vertex_count() <= exact_cap.min(metric_dim::EXACT_LIMIT);
        let dim = if exact {
            metric_dim::metric_dimension_exact(g, exact_cap)?
        } else {
            metric_dim::greedy_resolving_set(g)?.len()
        };
        write_out(out_dimension, dim)?;
        write_out(out_is_exact, exact)
    })
}

/// Checks the published closed form for a family spec against the
/// computed index (computed only up to `cap` vertices). `out_novel` is set
/// when the two disagree and the disagreement is not already documented.
/// `out_published` and `out_validated` may be null; otherwise they receive
/// `"p/q"` strings to free with [`resolving_string_free`].
///
/// # Safety
/// `spec` must be a nul-terminated string; `out_status` and `out_novel` must
/// be writable.
#[no_mangle]
pub unsafe extern "C" fn resolving_verify(
    spec: *const c_char,
    cap: usize,
    out_status: *mut ResolvingClosedFormStatus,
    out_novel: *mut bool,
    out_published: *mut *mut c_char,
    out_validated: *mut *mut c_char,
) -> ResolvingStatus {
    guard(|| {
        let spec: FamilySpec = str_arg(spec, "spec")?.parse()?;
        if out_status.is_null() || out_novel.is_null() {
            return Err(fail(ResolvingStatus::NullPointer, "output pointer is null"));
        }
        let result = closed_forms::validated_index_with_cap(&spec, cap)?;
        let status = match result.status {
            Status::Confirmed => ResolvingClosedFormStatus::Confirmed,
            Status::Corrected => ResolvingClosedFormStatus::Corrected,
            Status::Unverified => ResolvingClosedFormStatus::Unverified,
        };
        write_out(out_status, status)?;
        write_out(out_novel, result.is_novel())?;
        if !out_published.is_null() {
            write_out(out_published, c_string(to_fraction_string(&result.published)))?;
        }
        if !out_validated.is_null() {
            write_out(out_validated, c_string(to_fraction_string(&result.validated)))?;
        }
        Ok(())
    })
}

/// Frees a string returned by this library. Null is ignored.
///
/// # Safety
/// `s` must be null or a string from this library not yet freed.
#[no_mangle]
pub unsafe extern "C" fn resolving_string_free(s: *mut c_char) {
    if !s.is_null() {
        drop(CString::from_raw(s));
    }
}
