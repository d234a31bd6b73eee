#include "fuchsia/fuchsia.h"

#include <cstdlib>
#include <cstring>
#include <string>

#include "fuchsia/error.hpp"
#include "fuchsia/flute.hpp"
#include "fuchsia/monster.hpp"
#include "fuchsia/spec_io.hpp"
#include "fuchsia/svg.hpp"
#include "fuchsia/tessellation.hpp"

struct fcs_flute {
  fuchsia::SequenceSpec spec;
  std::size_t n_generators;
  fuchsia::FluteGroup group;
};

struct fcs_monster {
  fuchsia::MonsterSpec spec;
  fuchsia::MonsterGroup group;
};

struct fcs_presentation {
  fuchsia::GroupPresentation presentation;
  fuchsia::SpecKind kind;
};

namespace {

thread_local std::string t_last_error;

fcs_status map_code(fuchsia::ErrorCode code) {
  using fuchsia::ErrorCode;
  switch (code) {
    case ErrorCode::InvalidArgument: return FCS_ERR_INVALID_ARGUMENT;
    case ErrorCode::NonPositiveDeterminant: return FCS_ERR_NONPOSITIVE_DETERMINANT;
    case ErrorCode::NotHyperbolic: return FCS_ERR_NOT_HYPERBOLIC;
    case ErrorCode::IdentityHasAllPoints: return FCS_ERR_IDENTITY_HAS_ALL_POINTS;
    case ErrorCode::CoincidentEndpoints: return FCS_ERR_COINCIDENT_ENDPOINTS;
    case ErrorCode::OverlappingCircles: return FCS_ERR_OVERLAPPING_CIRCLES;
    case ErrorCode::IndexOutOfRange: return FCS_ERR_INDEX_OUT_OF_RANGE;
    case ErrorCode::InsufficientData: return FCS_ERR_INSUFFICIENT_DATA;
    case ErrorCode::UnknownType: return FCS_ERR_UNKNOWN_TYPE;
    case ErrorCode::InvalidWindow: return FCS_ERR_INVALID_WINDOW;
    case ErrorCode::BudgetExceeded: return FCS_ERR_BUDGET_EXCEEDED;
    case ErrorCode::EmptyViewport: return FCS_ERR_EMPTY_VIEWPORT;
    case ErrorCode::ParseError: return FCS_ERR_PARSE;
  }
  return FCS_ERR_INTERNAL;
}

template <typename Fn>
fcs_status guarded(Fn&& fn) {
  try {
    fn();
    t_last_error.clear();
    return FCS_OK;
  } catch (const fuchsia::Error& e) {
    t_last_error = e.what();
    return map_code(e.code());
  } catch (const std::exception& e) {
    t_last_error = e.what();
    return FCS_ERR_INTERNAL;
  }
}

fcs_status fail_argument(const char* message) {
  t_last_error = message;
  return FCS_ERR_INVALID_ARGUMENT;
}

char* dup_string(const std::string& s) {
  char* out = static_cast<char*>(std::malloc(s.size() + 1));
  if (out != nullptr) std::memcpy(out, s.c_str(), s.size() + 1);
  return out;
}

fuchsia::GroupPresentation build_presentation(const char* spec_json,
                                              int n_generators_override,
                                              fuchsia::SpecKind* kind_out) {
  const std::string text(spec_json);
  const fuchsia::SpecKind kind = fuchsia::detect_spec_kind(text);
  *kind_out = kind;
  if (kind == fuchsia::SpecKind::Flute) {
    fuchsia::FluteInput input = fuchsia::parse_flute_spec(text);
    if (n_generators_override > 0) {
      input.n_generators = static_cast<std::size_t>(n_generators_override);
    }
    return fuchsia::presentation_of(fuchsia::build_flute(input.spec, input.n_generators));
  }
  return fuchsia::presentation_of(fuchsia::build_monster(fuchsia::parse_monster_spec(text)));
}

}  // namespace

extern "C" {

const char* fcs_last_error(void) { return t_last_error.c_str(); }

void fcs_string_free(char* text) { std::free(text); }

fcs_status fcs_flute_build(const char* spec_json, int n_generators_override,
                           fcs_flute** out) {
  if (spec_json == nullptr || out == nullptr) return fail_argument("null argument");
  *out = nullptr;
  return guarded([&] {
    fuchsia::FluteInput input = fuchsia::parse_flute_spec(spec_json);
    if (n_generators_override > 0) {
      input.n_generators = static_cast<std::size_t>(n_generators_override);
    }
    fuchsia::FluteGroup group = fuchsia::build_flute(input.spec, input.n_generators);
    *out = new fcs_flute{std::move(input.spec), input.n_generators, std::move(group)};
  });
}

void fcs_flute_free(fcs_flute* flute) { delete flute; }

int fcs_flute_generator_count(const fcs_flute* flute) {
  return flute == nullptr ? 0 : static_cast<int>(flute->group.generators.size());
}

fcs_status fcs_flute_generator(const fcs_flute* flute, int n, double matrix_out[4]) {
  if (flute == nullptr || matrix_out == nullptr) return fail_argument("null argument");
  return guarded([&] {
    if (n < 0 || n >= static_cast<int>(flute->group.generators.size())) {
      fuchsia::raise(fuchsia::ErrorCode::IndexOutOfRange,
                     "generator index " + std::to_string(n) + " out of range");
    }
    const auto& e = flute->group.generators[static_cast<std::size_t>(n)].entries();
    for (int i = 0; i < 4; ++i) matrix_out[i] = e[static_cast<std::size_t>(i)];
  });
}

fcs_status fcs_flute_length_param(const fcs_flute* flute, int n, double* length_out) {
  if (flute == nullptr || length_out == nullptr) return fail_argument("null argument");
  return guarded([&] {
    if (n < 0) fuchsia::raise(fuchsia::ErrorCode::IndexOutOfRange, "negative index");
    *length_out = fuchsia::length_param(static_cast<std::size_t>(n), flute->group.s);
  });
}

fcs_status fcs_flute_basmajian_term(const fcs_flute* flute, int n, double* term_out) {
  if (flute == nullptr || term_out == nullptr) return fail_argument("null argument");
  return guarded([&] {
    if (n < 0) fuchsia::raise(fuchsia::ErrorCode::IndexOutOfRange, "negative index");
    *term_out = fuchsia::basmajian_term(static_cast<std::size_t>(n), flute->group.s);
  });
}

fcs_status fcs_flute_classify(const fcs_flute* flute, fcs_flute_type* verdict_out,
                              int* has_limit_out, double* limit_out) {
  if (flute == nullptr || verdict_out == nullptr) return fail_argument("null argument");
  return guarded([&] {
    const fuchsia::TypeVerdict verdict = fuchsia::classify_type(flute->spec);
    switch (verdict.type) {
      case fuchsia::FluteType::FirstKindParabolic:
        *verdict_out = FCS_FLUTE_FIRST_KIND_PARABOLIC;
        break;
      case fuchsia::FluteType::SecondKindNonParabolic:
        *verdict_out = FCS_FLUTE_SECOND_KIND_NON_PARABOLIC;
        break;
      case fuchsia::FluteType::Unknown:
        *verdict_out = FCS_FLUTE_TYPE_UNKNOWN;
        break;
    }
    if (has_limit_out != nullptr) *has_limit_out = verdict.limit.has_value() ? 1 : 0;
    if (limit_out != nullptr && verdict.limit.has_value()) *limit_out = *verdict.limit;
  });
}

fcs_status fcs_flute_report(const fcs_flute* flute, char** json_out) {
  if (flute == nullptr || json_out == nullptr) return fail_argument("null argument");
  return guarded([&] {
    *json_out = dup_string(fuchsia::flute_report(flute->spec, flute->n_generators));
  });
}

fcs_status fcs_monster_build(const char* spec_json, fcs_monster** out) {
  if (spec_json == nullptr || out == nullptr) return fail_argument("null argument");
  *out = nullptr;
  return guarded([&] {
    fuchsia::MonsterSpec spec = fuchsia::parse_monster_spec(spec_json);
    fuchsia::MonsterGroup group = fuchsia::build_monster(spec);
    *out = new fcs_monster{std::move(spec), std::move(group)};
  });
}

void fcs_monster_free(fcs_monster* monster) { delete monster; }

int fcs_monster_pair_count(const fcs_monster* monster) {
  return monster == nullptr ? 0 : static_cast<int>(monster->group.pairs.size());
}

fcs_status fcs_monster_first_kind(const fcs_monster* monster, fcs_kind* verdict_out) {
  if (monster == nullptr || verdict_out == nullptr) return fail_argument("null argument");
  return guarded([&] {
    switch (fuchsia::first_kind_check(monster->spec)) {
      case fuchsia::KindVerdict::FirstKind: *verdict_out = FCS_KIND_FIRST; break;
      case fuchsia::KindVerdict::SecondKind: *verdict_out = FCS_KIND_SECOND; break;
      case fuchsia::KindVerdict::Unknown: *verdict_out = FCS_KIND_UNKNOWN; break;
    }
  });
}

fcs_status fcs_monster_report(const fcs_monster* monster, char** json_out) {
  if (monster == nullptr || json_out == nullptr) return fail_argument("null argument");
  return guarded([&] {
    *json_out = dup_string(fuchsia::monster_report(monster->spec));
  });
}

fcs_status fcs_classify_report(const char* spec_json, char** json_out) {
  if (spec_json == nullptr || json_out == nullptr) return fail_argument("null argument");
  return guarded([&] {
    *json_out = dup_string(fuchsia::classify_report(spec_json));
  });
}

fcs_status fcs_fn_params_report(const char* spec_json, int n_generators_override,
                                char** json_out) {
  if (spec_json == nullptr || json_out == nullptr) return fail_argument("null argument");
  return guarded([&] {
    fuchsia::FluteInput input = fuchsia::parse_flute_spec(spec_json);
    if (n_generators_override > 0) {
      input.n_generators = static_cast<std::size_t>(n_generators_override);
    }
    *json_out = dup_string(fuchsia::fn_params_report(input.spec, input.n_generators));
  });
}

fcs_status fcs_check(const char* spec_json, char** json_out) {
  if (spec_json == nullptr || json_out == nullptr) return fail_argument("null argument");
  fcs_status status = FCS_OK;
  const fcs_status run = guarded([&] {
    const fuchsia::CheckOutcome outcome = fuchsia::run_checks(spec_json);
    *json_out = dup_string(outcome.report);
    if (!outcome.ok) {
      t_last_error = "one or more invariant checks failed";
      status = FCS_ERR_CHECK_FAILED;
    }
  });
  if (run != FCS_OK) return run;
  if (status != FCS_OK) t_last_error = "one or more invariant checks failed";
  return status;
}

fcs_status fcs_presentation_build(const char* spec_json, int n_generators_override,
                                  fcs_presentation** out) {
  if (spec_json == nullptr || out == nullptr) return fail_argument("null argument");
  *out = nullptr;
  return guarded([&] {
    fuchsia::SpecKind kind = fuchsia::SpecKind::Flute;
    fuchsia::GroupPresentation p =
        build_presentation(spec_json, n_generators_override, &kind);
    *out = new fcs_presentation{std::move(p), kind};
  });
}

void fcs_presentation_free(fcs_presentation* presentation) { delete presentation; }

fcs_status fcs_tessellation_report(const fcs_presentation* presentation, int depth,
                                   long tile_cap, char** json_out) {
  if (presentation == nullptr || json_out == nullptr) {
    return fail_argument("null argument");
  }
  if (depth < 0) return fail_argument("depth must be >= 0");
  return guarded([&] {
    *json_out = dup_string(fuchsia::tessellation_report(
        presentation->presentation, presentation->kind,
        static_cast<std::size_t>(depth),
        tile_cap > 0 ? static_cast<std::size_t>(tile_cap) : 0));
  });
}

void fcs_render_options_init(fcs_render_options* options) {
  if (options == nullptr) return;
  options->depth = 0;
  options->tile_cap = 0;
  options->use_default_viewport = 1;
  options->xmin = -5.0;
  options->xmax = 5.0;
  options->ymax = 5.0;
  options->stroke_width = 1.25;
  options->labels = 0;
  options->palette = nullptr;
  options->width_px = 800;
}

fcs_status fcs_render_svg(const fcs_presentation* presentation,
                          const fcs_render_options* options, char** svg_out) {
  if (presentation == nullptr || options == nullptr || svg_out == nullptr) {
    return fail_argument("null argument");
  }
  if (options->depth < 0) return fail_argument("depth must be >= 0");
  return guarded([&] {
    fuchsia::OrbitOptions orbit_options;
    if (options->tile_cap > 0) {
      orbit_options.tile_cap = static_cast<std::size_t>(options->tile_cap);
    }
    const fuchsia::Orbit orbit =
        fuchsia::enumerate_orbit(presentation->presentation,
                                 static_cast<std::size_t>(options->depth), orbit_options);
    const fuchsia::Viewport viewport =
        options->use_default_viewport != 0
            ? fuchsia::default_viewport(presentation->presentation)
            : fuchsia::Viewport{options->xmin, options->xmax, options->ymax};
    fuchsia::RenderStyle style;
    style.stroke_width = options->stroke_width;
    if (options->palette != nullptr) style.palette = options->palette;
    style.labels = options->labels != 0;
    style.width_px = options->width_px;
    *svg_out = dup_string(
        fuchsia::render_svg(presentation->presentation, orbit.tiles, viewport, style));
  });
}

}  // extern "C"
