/* C interface to the fuchsia library: construction, classification and
 * rendering of flute and Loch Ness monster Fuchsian groups acting on the
 * upper half-plane.
 *
 * All functions returning fcs_status set a thread-local message readable
 * through fcs_last_error() on failure. Strings returned through char**
 * output parameters are heap-allocated and must be released with
 * fcs_string_free(). Handles are opaque and freed with their _free call.
 */
#ifndef FUCHSIA_FUCHSIA_H
#define FUCHSIA_FUCHSIA_H

#include <stddef.h>

#ifdef __cplusplus
extern "C" {
#endif

typedef enum fcs_status {
  FCS_OK = 0,
  FCS_ERR_INVALID_ARGUMENT = 1,
  FCS_ERR_NONPOSITIVE_DETERMINANT = 2,
  FCS_ERR_NOT_HYPERBOLIC = 3,
  FCS_ERR_IDENTITY_HAS_ALL_POINTS = 4,
  FCS_ERR_COINCIDENT_ENDPOINTS = 5,
  FCS_ERR_OVERLAPPING_CIRCLES = 6,
  FCS_ERR_INDEX_OUT_OF_RANGE = 7,
  FCS_ERR_INSUFFICIENT_DATA = 8,
  FCS_ERR_UNKNOWN_TYPE = 9,
  FCS_ERR_INVALID_WINDOW = 10,
  FCS_ERR_BUDGET_EXCEEDED = 11,
  FCS_ERR_EMPTY_VIEWPORT = 12,
  FCS_ERR_PARSE = 13,
  FCS_ERR_CHECK_FAILED = 14,
  FCS_ERR_INTERNAL = 15
} fcs_status;

/* Series verdict for a flute spec. */
typedef enum fcs_flute_type {
  FCS_FLUTE_FIRST_KIND_PARABOLIC = 0,
  FCS_FLUTE_SECOND_KIND_NON_PARABOLIC = 1,
  FCS_FLUTE_TYPE_UNKNOWN = 2
} fcs_flute_type;

/* Limit-set verdict for a monster spec. */
typedef enum fcs_kind {
  FCS_KIND_FIRST = 0,
  FCS_KIND_SECOND = 1,
  FCS_KIND_UNKNOWN = 2
} fcs_kind;

typedef struct fcs_flute fcs_flute;
typedef struct fcs_monster fcs_monster;
typedef struct fcs_presentation fcs_presentation;

/* Message from the last failed call on this thread; empty string if none. */
const char* fcs_last_error(void);

void fcs_string_free(char* text);

/* ---- flute groups ----------------------------------------------------- */

/* spec_json: {"prefix":[...], "tail":{"kind":...}, "n_generators":N}.
 * n_generators_override > 0 replaces the spec's generator count. */
fcs_status fcs_flute_build(const char* spec_json, int n_generators_override,
                           fcs_flute** out);
void fcs_flute_free(fcs_flute* flute);

int fcs_flute_generator_count(const fcs_flute* flute);

/* Row-major entries (a, b, c, d) of generator n. */
fcs_status fcs_flute_generator(const fcs_flute* flute, int n, double matrix_out[4]);

/* Fenchel-Nielsen length of the n-th gluing geodesic, n >= 1. */
fcs_status fcs_flute_length_param(const fcs_flute* flute, int n, double* length_out);

/* exp(-l_n/2), n >= 1. */
fcs_status fcs_flute_basmajian_term(const fcs_flute* flute, int n, double* term_out);

/* Series verdict; when the limit of the partial sums has a closed form,
 * *has_limit_out is 1 and *limit_out carries it. */
fcs_status fcs_flute_classify(const fcs_flute* flute, fcs_flute_type* verdict_out,
                              int* has_limit_out, double* limit_out);

fcs_status fcs_flute_report(const fcs_flute* flute, char** json_out);

/* ---- monster groups ---------------------------------------------------- */

/* spec_json: {"windows":[[a,b,c,d,e],...], "first_index":n,
 *             "flags":{"gapless":...,"left_unbounded":...,"right_unbounded":...}} */
fcs_status fcs_monster_build(const char* spec_json, fcs_monster** out);
void fcs_monster_free(fcs_monster* monster);

int fcs_monster_pair_count(const fcs_monster* monster);

fcs_status fcs_monster_first_kind(const fcs_monster* monster, fcs_kind* verdict_out);

fcs_status fcs_monster_report(const fcs_monster* monster, char** json_out);

/* ---- operations on raw spec text --------------------------------------- */

/* Classification-only report; detects the spec kind from its keys. */
fcs_status fcs_classify_report(const char* spec_json, char** json_out);

/* Fenchel-Nielsen length table for a flute spec. */
fcs_status fcs_fn_params_report(const char* spec_json, int n_generators_override,
                                char** json_out);

/* Runs the full invariant suite for the given spec. Returns FCS_OK when
 * every check passes and FCS_ERR_CHECK_FAILED otherwise; the report is
 * written in both cases. */
fcs_status fcs_check(const char* spec_json, char** json_out);

/* ---- tessellation and rendering ----------------------------------------- */

fcs_status fcs_presentation_build(const char* spec_json, int n_generators_override,
                                  fcs_presentation** out);
void fcs_presentation_free(fcs_presentation* presentation);

/* Orbit tiles up to word length `depth` as JSON; tile_cap <= 0 keeps the
 * default budget of 100000 tiles. */
fcs_status fcs_tessellation_report(const fcs_presentation* presentation, int depth,
                                   long tile_cap, char** json_out);

typedef struct fcs_render_options {
  int depth;                /* orbit word length, default 0 (domain only) */
  long tile_cap;            /* <= 0: default budget */
  int use_default_viewport; /* nonzero: ignore xmin/xmax/ymax */
  double xmin, xmax, ymax;  /* world window; lower edge is the real axis */
  double stroke_width;      /* px */
  int labels;               /* nonzero: annotate identity-tile arcs */
  const char* palette;      /* "default" or "mono"; NULL means default */
  int width_px;
} fcs_render_options;

void fcs_render_options_init(fcs_render_options* options);

fcs_status fcs_render_svg(const fcs_presentation* presentation,
                          const fcs_render_options* options, char** svg_out);

#ifdef __cplusplus
}
#endif

#endif /* FUCHSIA_FUCHSIA_H */
