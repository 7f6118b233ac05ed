#ifndef RESOLVING_H
#define RESOLVING_H

/* Generated by cbindgen from crates/ffi/src/lib.rs. Do not edit. */

#include <stdbool.h>
#include <stddef.h>
#include <stdint.h>

typedef enum ResolvingStatus {
  RESOLVING_STATUS_OK = 0,
  RESOLVING_STATUS_NULL_POINTER = 1,
  RESOLVING_STATUS_INVALID_UTF8 = 2,
  RESOLVING_STATUS_INVALID_INPUT = 3,
  RESOLVING_STATUS_DISCONNECTED = 4,
  RESOLVING_STATUS_OUT_OF_RANGE = 5,
  RESOLVING_STATUS_TOO_LARGE = 6,
  RESOLVING_STATUS_CAP_EXCEEDED = 7,
  RESOLVING_STATUS_NO_CLOSED_FORM = 8,
  RESOLVING_STATUS_PANIC = 9,
} ResolvingStatus;

typedef enum ResolvingClosedFormStatus {
  RESOLVING_CLOSED_FORM_STATUS_CONFIRMED = 0,
  RESOLVING_CLOSED_FORM_STATUS_CORRECTED = 1,
  RESOLVING_CLOSED_FORM_STATUS_UNVERIFIED = 2,
} ResolvingClosedFormStatus;

// Opaque graph handle.
typedef struct ResolvingGraph ResolvingGraph;

// Opaque handle to a computed share report.
typedef struct ResolvingReport ResolvingReport;

// Message for the last failed call on this thread, or null after a
// successful call. Valid until the next call into this library.
const char *resolving_last_error(void);

// Library version as a static string.
const char *resolving_version(void);

// Builds a graph on `n` vertices from `edge_count` pairs stored flat in
// `edges` (`2 * edge_count` entries, 0-based).
//
// # Safety
// `edges` must point to `2 * edge_count` readable values (may be null when
// `edge_count` is 0) and `out` must be writable.
enum ResolvingStatus resolving_graph_new(size_t n,
                                         const size_t *edges,
                                         size_t edge_count,
                                         struct ResolvingGraph **out);

// Generates a named family graph such as `"petersen"` or `"wheel:9"`.
//
// # Safety
// `spec` must be a nul-terminated string and `out` must be writable.
enum ResolvingStatus resolving_graph_from_family(const char *spec, struct ResolvingGraph **out);

// Parses an edge list or DIMACS text. `format` is `"edgelist"`,
// `"dimacs"`, or null to detect it.
//
// # Safety
// `text` and a non-null `format` must be nul-terminated strings; `out`
// must be writable.
enum ResolvingStatus resolving_graph_parse(const char *text,
                                           const char *format,
                                           struct ResolvingGraph **out);

// # Safety
// `graph` must be null or a handle from this library not yet freed.
void resolving_graph_free(struct ResolvingGraph *graph);

// Number of vertices, or 0 for a null handle.
//
// # Safety
// `graph` must be null or a live handle.
size_t resolving_graph_vertex_count(const struct ResolvingGraph *graph);

// Number of edges, or 0 for a null handle.
//
// # Safety
// `graph` must be null or a live handle.
size_t resolving_graph_edge_count(const struct ResolvingGraph *graph);

// Computes all average resolving shares and the index. `threads` of 0
// uses the default thread pool.
//
// # Safety
// `graph` must be a live handle and `out` writable.
enum ResolvingStatus resolving_compute(const struct ResolvingGraph *graph,
                                       size_t threads,
                                       bool per_pair,
                                       struct ResolvingReport **out);

// # Safety
// `report` must be null or a handle from this library not yet freed.
void resolving_report_free(struct ResolvingReport *report);

// Number of vertices covered by the report, or 0 for a null handle.
//
// # Safety
// `report` must be null or a live handle.
size_t resolving_report_vertex_count(const struct ResolvingReport *report);

// The index as `"p/q"`, or as a 12-significant-digit decimal when
// `decimal` is set. Free the string with [`resolving_string_free`].
//
// # Safety
// `report` must be a live handle and `out` writable.
enum ResolvingStatus resolving_report_index(const struct ResolvingReport *report,
                                            bool decimal,
                                            char **out);

// Average resolving share of `vertex`, formatted like
// [`resolving_report_index`].
//
// # Safety
// `report` must be a live handle and `out` writable.
enum ResolvingStatus resolving_report_avg_share(const struct ResolvingReport *report,
                                                size_t vertex,
                                                bool decimal,
                                                char **out);

// Number of pairs resolved by `vertex`.
//
// # Safety
// `report` must be a live handle and `out` writable.
enum ResolvingStatus resolving_report_resolvent_count(const struct ResolvingReport *report,
                                                      size_t vertex,
                                                      uint64_t *out);

// The report as JSON (same layout as the CLI's `--output json`).
//
// # Safety
// `report` must be a live handle and `out` writable.
enum ResolvingStatus resolving_report_to_json(const struct ResolvingReport *report, char **out);

// Metric dimension. Exact when the graph has at most `min(exact_cap, 64)`
// vertices, otherwise a greedy upper bound; `out_is_exact` tells which.
//
// # Safety
// `graph` must be a live handle; both out pointers must be writable.
enum ResolvingStatus resolving_metric_dimension(const struct ResolvingGraph *graph,
                                                size_t exact_cap,
                                                size_t *out_dimension,
                                                bool *out_is_exact);

// Checks the published closed form for a family spec against the
// computed index (computed only up to `cap` vertices). `out_novel` is set
// when the two disagree and the disagreement is not already documented.
// `out_published` and `out_validated` may be null; otherwise they receive
// `"p/q"` strings to free with [`resolving_string_free`].
//
// # Safety
// `spec` must be a nul-terminated string; `out_status` and `out_novel` must
// be writable.
enum ResolvingStatus resolving_verify(const char *spec,
                                      size_t cap,
                                      enum ResolvingClosedFormStatus *out_status,
                                      bool *out_novel,
                                      char **out_published,
                                      char **out_validated);

// Frees a string returned by this library. Null is ignored.
//
// # Safety
// `s` must be null or a string from this library not yet freed.
void resolving_string_free(char *s);

#endif  /* RESOLVING_H */
