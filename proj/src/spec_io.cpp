#include "fuchsia/spec_io.hpp"

#include <algorithm>
#include <cmath>
#include <cstdio>
#include <random>
#include <sstream>

#include "fuchsia/error.hpp"
#include "fuchsia/tolerance.hpp"
#include "json.hpp"

namespace fuchsia {

namespace {

using nlohmann::json;

json parse_json(const std::string& text) {
  try {
    return json::parse(text);
  } catch (const json::exception& e) {
    raise(ErrorCode::ParseError, std::string("invalid JSON: ") + e.what());
  }
}

double require_number(const json& j, const std::string& where) {
  if (!j.is_number()) {
    raise(ErrorCode::ParseError, where + " must be a number");
  }
  return j.get<double>();
}

// ---- report writing ------------------------------------------------------
// Reports are golden-file material: numbers go out at 12 significant digits
// and key order is fixed, so identical inputs give identical bytes.

std::string fmt(double v) {
  if (v == 0.0) v = 0.0;  // never print -0
  char buf[40];
  std::snprintf(buf, sizeof(buf), "%.12g", v);
  return buf;
}

std::string jstr(const std::string& s) {
  std::string out = "\"";
  for (char ch : s) {
    switch (ch) {
      case '"': out += "\\\""; break;
      case '\\': out += "\\\\"; break;
      case '\n': out += "\\n"; break;
      case '\t': out += "\\t"; break;
      default:
        if (static_cast<unsigned char>(ch) < 0x20) {
          char buf[8];
          std::snprintf(buf, sizeof(buf), "\\u%04x", ch);
          out += buf;
        } else {
          out += ch;
        }
    }
  }
  out += '"';
  return out;
}

std::string join(const std::vector<std::string>& parts) {
  std::string out;
  for (std::size_t i = 0; i < parts.size(); ++i) {
    if (i > 0) out += ',';
    out += parts[i];
  }
  return out;
}

std::string matrix_json(const MoebiusMap& m) {
  return "[" + fmt(m.a()) + "," + fmt(m.b()) + "," + fmt(m.c()) + "," +
         fmt(m.d()) + "]";
}

const char* class_name(MapClass c) {
  switch (c) {
    case MapClass::Identity: return "identity";
    case MapClass::Elliptic: return "elliptic";
    case MapClass::Parabolic: return "parabolic";
    case MapClass::Hyperbolic: return "hyperbolic";
  }
  return "unknown";
}

std::string boundary_json(const BoundaryPoint& p) {
  return p.is_infinity() ? std::string("\"inf\"") : fmt(p.value());
}

std::string geodesic_json(const Geodesic& g) {
  if (g.is_half_circle()) {
    const HalfCircle& hc = g.half_circle();
    return "{\"center\":" + fmt(hc.center) + ",\"radius\":" + fmt(hc.radius) + "}";
  }
  return "{\"foot\":" + fmt(g.vertical_ray().foot) + "}";
}

std::string fixed_points_json(const MoebiusMap& m) {
  if (classify(m) == MapClass::Identity) return "[]";
  const FixedPointSet fps = fixed_points(m);
  std::vector<std::string> parts;
  for (const BoundaryPoint& p : fps.boundary) parts.push_back(boundary_json(p));
  if (fps.interior.has_value()) {
    parts.push_back("{\"x\":" + fmt(fps.interior->x) + ",\"y\":" +
                    fmt(fps.interior->y) + "}");
  }
  return "[" + join(parts) + "]";
}

// A loosened FUCHSIA_TOLERANCE can reclassify a generator as parabolic, in
// which case the translation length legitimately does not exist.
std::string translation_length_json(const MoebiusMap& m) {
  return classify(m) == MapClass::Hyperbolic ? fmt(translation_length(m))
                                             : std::string("null");
}

const char* flute_verdict_name(FluteType t) {
  switch (t) {
    case FluteType::FirstKindParabolic: return "first_kind_parabolic";
    case FluteType::SecondKindNonParabolic: return "second_kind_non_parabolic";
    case FluteType::Unknown: return "unknown";
  }
  return "unknown";
}

const char* kind_verdict_name(KindVerdict v) {
  switch (v) {
    case KindVerdict::FirstKind: return "first_kind";
    case KindVerdict::SecondKind: return "second_kind";
    case KindVerdict::Unknown: return "unknown";
  }
  return "unknown";
}

std::string type_verdict_json(const TypeVerdict& v) {
  std::string out = "{\"verdict\":\"";
  out += flute_verdict_name(v.type);
  out += "\",\"limit\":";
  out += v.limit.has_value() ? fmt(*v.limit) : "null";
  out += "}";
  return out;
}

/// Convex core as JSON, with the no-closed-form case folded into a
/// diagnostic instead of an error.
std::string convex_core_json_or_null(const SequenceSpec& spec,
                                     const TypeVerdict& verdict,
                                     std::vector<std::string>& diagnostics) {
  if (verdict.type == FluteType::Unknown) return "null";
  try {
    const std::optional<Geodesic> core = convex_core_boundary(spec);
    return core.has_value() ? geodesic_json(*core) : "null";
  } catch (const Error& e) {
    if (e.code() == ErrorCode::InsufficientData) {
      diagnostics.push_back(
          "convergent tail declared without closed-form limit; "
          "convex-core radius unavailable");
      return "null";
    }
    throw;
  }
}

void add_unknown_diagnostic(const SequenceSpec& spec,
                            std::vector<std::string>& diagnostics) {
  const std::size_t n = spec.prefix().size();
  if (n == 0) {
    diagnostics.push_back("series verdict unknown; no explicit terms given");
    return;
  }
  std::ostringstream os;
  const std::vector<double> s = partial_sums(spec, n);
  os << "series verdict unknown; s_" << n - 1 << " = " << fmt(s.back()) << " after "
     << n << " explicit terms";
  if (n >= 2) {
    os << "; last growth ratio x_" << n - 1 << "/x_" << n - 2 << " = "
       << fmt(spec.prefix()[n - 1] / spec.prefix()[n - 2]);
  }
  diagnostics.push_back(os.str());
}

std::string diagnostics_json(const std::vector<std::string>& diagnostics) {
  std::vector<std::string> parts;
  for (const std::string& d : diagnostics) parts.push_back(jstr(d));
  return "[" + join(parts) + "]";
}

}  // namespace

SpecKind detect_spec_kind(const std::string& json_text) {
  const json j = parse_json(json_text);
  if (j.is_object() && j.contains("prefix")) return SpecKind::Flute;
  if (j.is_object() && j.contains("windows")) return SpecKind::Monster;
  raise(ErrorCode::ParseError,
        "spec must be an object with a \"prefix\" (flute) or \"windows\" "
        "(monster) key");
}

FluteInput parse_flute_spec(const std::string& json_text) {
  const json j = parse_json(json_text);
  if (!j.is_object() || !j.contains("prefix") || !j["prefix"].is_array()) {
    raise(ErrorCode::ParseError, "flute spec requires a \"prefix\" array");
  }
  std::vector<double> prefix;
  prefix.reserve(j["prefix"].size());
  for (std::size_t i = 0; i < j["prefix"].size(); ++i) {
    prefix.push_back(require_number(j["prefix"][i], "prefix[" + std::to_string(i) + "]"));
  }

  SequenceSpec::Tail tail = std::monostate{};
  if (j.contains("tail") && !j["tail"].is_null()) {
    const json& jt = j["tail"];
    if (!jt.is_object() || !jt.contains("kind") || !jt["kind"].is_string()) {
      raise(ErrorCode::ParseError, "tail must be an object with a \"kind\" string");
    }
    const std::string kind = jt["kind"].get<std::string>();
    if (kind == "none") {
      tail = std::monostate{};
    } else if (kind == "constant") {
      const char* key = jt.contains("c") ? "c" : "value";
      if (!jt.contains(key)) {
        raise(ErrorCode::ParseError, "constant tail requires \"c\"");
      }
      tail = ConstantTail{require_number(jt[key], "tail.c")};
    } else if (kind == "geometric") {
      if (!jt.contains("first") || !jt.contains("ratio")) {
        raise(ErrorCode::ParseError, "geometric tail requires \"first\" and \"ratio\"");
      }
      tail = GeometricTail{require_number(jt["first"], "tail.first"),
                           require_number(jt["ratio"], "tail.ratio")};
    } else if (kind == "harmonic") {
      if (!jt.contains("scale")) {
        raise(ErrorCode::ParseError, "harmonic tail requires \"scale\"");
      }
      tail = HarmonicTail{require_number(jt["scale"], "tail.scale")};
    } else if (kind == "custom") {
      CustomTail custom;
      if (jt.contains("divergent") && !jt["divergent"].is_null()) {
        const json& jd = jt["divergent"];
        if (jd.is_boolean()) {
          custom.divergent = jd.get<bool>();
        } else if (jd.is_string() && jd.get<std::string>() == "unknown") {
          custom.divergent = std::nullopt;
        } else {
          raise(ErrorCode::ParseError,
                "custom tail \"divergent\" must be true, false or \"unknown\"");
        }
      }
      tail = custom;
    } else {
      raise(ErrorCode::ParseError, "unknown tail kind \"" + kind + "\"");
    }
  }

  FluteInput input{SequenceSpec(std::move(prefix), tail), 8};
  if (!input.spec.has_tail_law()) {
    input.n_generators = std::max<std::size_t>(input.spec.prefix().size(), 1);
  }
  if (j.contains("n_generators")) {
    if (!j["n_generators"].is_number_integer()) {
      raise(ErrorCode::ParseError, "n_generators must be an integer");
    }
    const long long n = j["n_generators"].get<long long>();
    if (n < 1) {
      raise(ErrorCode::InvalidArgument, "n_generators must be >= 1");
    }
    input.n_generators = static_cast<std::size_t>(n);
  }
  return input;
}

MonsterSpec parse_monster_spec(const std::string& json_text) {
  const json j = parse_json(json_text);
  if (!j.is_object() || !j.contains("windows") || !j["windows"].is_array()) {
    raise(ErrorCode::ParseError, "monster spec requires a \"windows\" array");
  }
  MonsterSpec spec;
  for (std::size_t i = 0; i < j["windows"].size(); ++i) {
    const json& jw = j["windows"][i];
    if (!jw.is_array() || jw.size() != 5) {
      raise(ErrorCode::ParseError,
            "windows[" + std::to_string(i) + "] must be [a, b, c, d, e]");
    }
    MonsterWindow w;
    w.a = require_number(jw[0], "window entry");
    w.b = require_number(jw[1], "window entry");
    w.c = require_number(jw[2], "window entry");
    w.d = require_number(jw[3], "window entry");
    w.e = require_number(jw[4], "window entry");
    spec.windows.push_back(w);
  }
  if (j.contains("first_index")) {
    if (!j["first_index"].is_number_integer()) {
      raise(ErrorCode::ParseError, "first_index must be an integer");
    }
    spec.first_index = j["first_index"].get<long>();
  }
  if (j.contains("flags")) {
    const json& jf = j["flags"];
    if (!jf.is_object()) raise(ErrorCode::ParseError, "flags must be an object");
    auto read_flag = [&](const char* name) -> std::optional<bool> {
      if (!jf.contains(name) || jf[name].is_null()) return std::nullopt;
      if (!jf[name].is_boolean()) {
        raise(ErrorCode::ParseError, std::string("flags.") + name + " must be a bool");
      }
      return jf[name].get<bool>();
    };
    spec.flags.gapless = read_flag("gapless");
    spec.flags.left_unbounded = read_flag("left_unbounded");
    spec.flags.right_unbounded = read_flag("right_unbounded");
  }
  return spec;
}

std::string flute_report(const SequenceSpec& spec, std::size_t n_generators) {
  const FluteGroup group = build_flute(spec, n_generators);
  const TypeVerdict verdict = classify_type(spec);
  std::vector<std::string> diagnostics;
  if (verdict.type == FluteType::Unknown) add_unknown_diagnostic(spec, diagnostics);
  const std::string core = convex_core_json_or_null(spec, verdict, diagnostics);

  std::vector<std::string> sums;
  for (double v : group.s) sums.push_back(fmt(v));

  std::vector<std::string> gens;
  for (std::size_t n = 0; n < group.generators.size(); ++n) {
    const MoebiusMap& m = group.generators[n];
    gens.push_back("{\"label\":\"g" + std::to_string(n) + "\",\"matrix\":" +
                   matrix_json(m) + ",\"class\":\"" + class_name(classify(m)) +
                   "\",\"trace\":" + fmt(m.trace()) +
                   ",\"fixed_points\":" + fixed_points_json(m) + "}");
  }

  std::vector<std::string> sides;
  for (const auto& [plus, minus] : group.sides) {
    sides.push_back("{\"plus\":" + geodesic_json(plus) + ",\"minus\":" +
                    geodesic_json(minus) + "}");
  }

  std::vector<std::string> lengths, terms;
  for (std::size_t n = 1; n < group.s.size(); ++n) {
    lengths.push_back("{\"n\":" + std::to_string(n) + ",\"length\":" +
                      fmt(length_param(n, group.s)) + ",\"translation_length\":" +
                      translation_length_json(group.generators[n]) + "}");
    terms.push_back("{\"n\":" + std::to_string(n) + ",\"term\":" +
                    fmt(basmajian_term(n, group.s)) + "}");
  }

  std::string out = "{\"kind\":\"flute\",\"n_generators\":" +
                    std::to_string(n_generators) + ",\"partial_sums\":[" +
                    join(sums) + "],\"generators\":[" + join(gens) +
                    "],\"sides\":[" + join(sides) + "],\"fn_lengths\":[" +
                    join(lengths) + "],\"basmajian_terms\":[" + join(terms) +
                    "],\"type_verdict\":" + type_verdict_json(verdict) +
                    ",\"convex_core_boundary\":" + core +
                    ",\"integral\":" + (is_integral(group) ? "true" : "false") +
                    ",\"diagnostics\":" + diagnostics_json(diagnostics) + "}";
  return out;
}

std::string monster_report(const MonsterSpec& spec) {
  const MonsterGroup group = build_monster(spec);

  std::vector<std::string> windows;
  for (const MonsterWindow& w : spec.windows) {
    windows.push_back("[" + fmt(w.a) + "," + fmt(w.b) + "," + fmt(w.c) + "," +
                      fmt(w.d) + "," + fmt(w.e) + "]");
  }

  std::vector<Geodesic> circles;
  std::vector<std::string> pairs;
  for (std::size_t i = 0; i < group.pairs.size(); ++i) {
    const MonsterGroup::GeneratorPair& p = group.pairs[i];
    const long n = group.first_index + static_cast<long>(i);
    circles.push_back(p.sigma);
    circles.push_back(p.sigma_image);
    circles.push_back(p.rho);
    circles.push_back(p.rho_image);
    auto gen_json = [&](const char* label, const MoebiusMap& m) {
      return std::string("\"") + label + "\":{\"matrix\":" + matrix_json(m) +
             ",\"class\":\"" + class_name(classify(m)) + "\",\"trace\":" +
             fmt(m.trace()) + ",\"fixed_points\":" + fixed_points_json(m) + "}";
    };
    pairs.push_back(
        "{\"index\":" + std::to_string(n) + "," + gen_json("f", p.f) + "," +
        gen_json("g", p.g) + ",\"circles\":{\"sigma\":" + geodesic_json(p.sigma) +
        ",\"sigma_image\":" + geodesic_json(p.sigma_image) +
        ",\"rho\":" + geodesic_json(p.rho) +
        ",\"rho_image\":" + geodesic_json(p.rho_image) + "}}");
  }

  const KindVerdict verdict = first_kind_check(spec);
  std::string out =
      "{\"kind\":\"monster\",\"first_index\":" + std::to_string(spec.first_index) +
      ",\"windows\":[" + join(windows) + "],\"pairs\":[" + join(pairs) +
      "],\"region_constraints\":" + std::to_string(group.region.constraints.size()) +
      ",\"mutually_exterior\":" + (mutually_exterior(circles) ? "true" : "false") +
      ",\"first_kind\":\"" + kind_verdict_name(verdict) +
      "\",\"diagnostics\":[]}";
  return out;
}

std::string classify_report(const std::string& json_text) {
  if (detect_spec_kind(json_text) == SpecKind::Flute) {
    const FluteInput input = parse_flute_spec(json_text);
    const TypeVerdict verdict = classify_type(input.spec);
    std::vector<std::string> diagnostics;
    if (verdict.type == FluteType::Unknown) {
      add_unknown_diagnostic(input.spec, diagnostics);
    }
    const std::string core = convex_core_json_or_null(input.spec, verdict, diagnostics);
    return "{\"kind\":\"flute\",\"type_verdict\":" + type_verdict_json(verdict) +
           ",\"convex_core_boundary\":" + core +
           ",\"diagnostics\":" + diagnostics_json(diagnostics) + "}";
  }
  const MonsterSpec spec = parse_monster_spec(json_text);
  const WindowValidation validation = validate_windows(spec);
  if (!validation.ok) {
    std::string message = "invalid window family";
    for (const std::string& v : validation.violations) message += "; " + v;
    raise(ErrorCode::InvalidWindow, message);
  }
  const KindVerdict verdict = first_kind_check(spec);
  return std::string("{\"kind\":\"monster\",\"first_kind\":\"") +
         kind_verdict_name(verdict) + "\",\"diagnostics\":[]}";
}

std::string fn_params_report(const SequenceSpec& spec, std::size_t n_generators) {
  const std::vector<double> s = partial_sums(spec, n_generators);
  std::vector<std::string> sums, lengths, terms;
  for (double v : s) sums.push_back(fmt(v));
  for (std::size_t n = 1; n < s.size(); ++n) {
    lengths.push_back("{\"n\":" + std::to_string(n) + ",\"length\":" +
                      fmt(length_param(n, s)) + ",\"translation_length\":" +
                      translation_length_json(flute_generator(n, s)) + "}");
    terms.push_back("{\"n\":" + std::to_string(n) + ",\"term\":" +
                    fmt(basmajian_term(n, s)) + "}");
  }
  return "{\"kind\":\"flute\",\"n_generators\":" + std::to_string(n_generators) +
         ",\"partial_sums\":[" + join(sums) + "],\"fn_lengths\":[" + join(lengths) +
         "],\"basmajian_terms\":[" + join(terms) + "]}";
}

std::string tessellation_report(const GroupPresentation& g, SpecKind kind,
                                std::size_t depth, std::size_t tile_cap) {
  OrbitOptions options;
  if (tile_cap > 0) options.tile_cap = tile_cap;
  const Orbit orbit = enumerate_orbit(g, depth, options);

  std::vector<std::string> tiles;
  tiles.reserve(orbit.tiles.size());
  for (const OrbitTile& tile : orbit.tiles) {
    std::vector<std::string> word;
    for (const Letter& letter : tile.word) {
      word.push_back(jstr(letter_label(g, letter)));
    }
    tiles.push_back("{\"word\":[" + join(word) + "],\"length\":" +
                    std::to_string(tile.word.size()) + ",\"matrix\":" +
                    matrix_json(tile.map) + "}");
  }

  std::vector<std::string> limit_points;
  if (depth >= 1) {
    for (const BoundaryPoint& p : limit_set_sample(g, depth, options)) {
      limit_points.push_back(boundary_json(p));
    }
  }

  return std::string("{\"kind\":\"tessellation\",\"group\":\"") +
         (kind == SpecKind::Flute ? "flute" : "monster") +
         "\",\"depth\":" + std::to_string(depth) +
         ",\"tile_count\":" + std::to_string(orbit.tiles.size()) +
         ",\"duplicate_words\":" + std::to_string(orbit.duplicate_words) +
         ",\"tiles\":[" + join(tiles) + "],\"limit_set_sample\":[" +
         join(limit_points) + "]}";
}

namespace {

struct CheckList {
  std::vector<std::string> entries;
  bool all_ok = true;

  void add(const std::string& name, bool ok, const std::string& detail = "") {
    all_ok = all_ok && ok;
    std::string row = "{\"name\":" + jstr(name) + ",\"ok\":" + (ok ? "true" : "false");
    if (!detail.empty()) row += ",\"detail\":" + jstr(detail);
    row += "}";
    entries.push_back(row);
  }
};

bool close(double actual, double expected, double tol) {
  const double scale = std::max(1.0, std::abs(expected));
  return std::abs(actual - expected) <= tol * scale;
}

bool endpoints_match(const Geodesic& g, const Geodesic& h, double tol) {
  const auto [g1, g2] = g.endpoints();
  const auto [h1, h2] = h.endpoints();
  if (g1.is_infinity() != h1.is_infinity() || g2.is_infinity() != h2.is_infinity()) {
    return false;
  }
  const bool first = g1.is_infinity() || close(g1.value(), h1.value(), tol);
  const bool second = g2.is_infinity() || close(g2.value(), h2.value(), tol);
  return first && second;
}

std::vector<UHPoint> sample_region(const Region& region,
                                   const std::vector<Geodesic>& arcs,
                                   std::size_t count) {
  double lo = -1.0, hi = 1.0, top = 1.0;
  bool seen = false;
  for (const Geodesic& arc : arcs) {
    if (!arc.is_half_circle()) continue;
    const HalfCircle& hc = arc.half_circle();
    lo = seen ? std::min(lo, hc.center - hc.radius) : hc.center - hc.radius;
    hi = seen ? std::max(hi, hc.center + hc.radius) : hc.center + hc.radius;
    top = seen ? std::max(top, 2.0 * hc.radius) : 2.0 * hc.radius;
    seen = true;
  }
  std::mt19937_64 rng(0x5eedULL);
  std::uniform_real_distribution<double> ux(lo, hi);
  std::uniform_real_distribution<double> uy(1e-6, top);
  std::vector<UHPoint> points;
  std::size_t attempts = 0;
  while (points.size() < count && attempts < 200 * count) {
    ++attempts;
    const UHPoint p{ux(rng), uy(rng)};
    if (region.contains(p)) points.push_back(p);
  }
  return points;
}

void off_region_check(CheckList& checks, const char* name, const Region& region,
                      const std::vector<Geodesic>& arcs,
                      const std::vector<MoebiusMap>& generators) {
  const std::vector<UHPoint> samples = sample_region(region, arcs, 60);
  if (samples.empty()) {
    checks.add(name, false, "could not sample the open region");
    return;
  }
  std::size_t violations = 0;
  for (const MoebiusMap& g : generators) {
    for (const MoebiusMap& m : {g, inverse(g)}) {
      for (const UHPoint& p : samples) {
        if (region.contains(apply(m, p))) ++violations;
      }
    }
  }
  checks.add(name, violations == 0,
             violations == 0
                 ? std::to_string(samples.size()) + " samples stayed off-region"
                 : std::to_string(violations) + " mapped samples landed inside");
}

void run_flute_checks(const FluteInput& input, CheckList& checks) {
  const double tol = comparison_tolerance();
  const FluteGroup group = build_flute(input.spec, input.n_generators);
  const std::vector<double>& s = group.s;

  bool increasing = s[0] > 0.0;
  for (std::size_t i = 1; i < s.size(); ++i) increasing = increasing && s[i] > s[i - 1];
  checks.add("partial sums strictly increasing and positive", increasing);

  bool dets = true, classes = true, traces = true, pairing = true, endpoint = true;
  std::size_t degenerate = 0;
  for (std::size_t n = 0; n < group.generators.size(); ++n) {
    const MoebiusMap& g = group.generators[n];
    dets = dets && det_is_one(g.a(), g.b(), g.c(), g.d());
    const MapClass cls = classify(g);
    if (n == 0) {
      classes = classes && cls == MapClass::Parabolic;
    } else if (cls == MapClass::Parabolic) {
      // trace - 2 below the active tolerance: hyperbolic in exact
      // arithmetic, parabolic by the deterministic tie-break
      ++degenerate;
    } else {
      classes = classes && cls == MapClass::Hyperbolic;
    }
    const double sp = n == 0 ? 0.0 : s[n - 1];
    traces = traces && close(g.trace(), 2.0 * (s[n] + sp) / (s[n] - sp), tol);
    pairing = pairing &&
              endpoints_match(image_of_geodesic(g, group.sides[n].first),
                              group.sides[n].second, tol);
    const BoundaryPoint left = apply(g, BoundaryPoint(sp));
    const BoundaryPoint right = apply(g, BoundaryPoint(s[n]));
    endpoint = endpoint && !left.is_infinity() && close(left.value(), -sp, tol) &&
               !right.is_infinity() && close(right.value(), -s[n], tol);
  }
  checks.add("generator determinants are one", dets);
  checks.add("g_0 parabolic, g_n hyperbolic for n >= 1", classes,
             degenerate == 0 ? ""
                             : std::to_string(degenerate) +
                                   " generator(s) within tolerance of trace 2");
  checks.add("trace identity 2(s_n+s_{n-1})/(s_n-s_{n-1})", traces);
  checks.add("each side maps onto its mirror", pairing);
  checks.add("endpoint pairing s -> -s", endpoint);

  bool lengths = true, terms = true;
  for (std::size_t n = 1; n < s.size(); ++n) {
    if (classify(group.generators[n]) == MapClass::Hyperbolic) {
      lengths = lengths &&
                close(length_param(n, s), translation_length(group.generators[n]), tol);
    }
    const double closed_form =
        (s[n] - s[n - 1]) /
        ((std::sqrt(s[n - 1]) + std::sqrt(s[n])) * (std::sqrt(s[n - 1]) + std::sqrt(s[n])));
    terms = terms && std::abs(basmajian_term(n, s) - closed_form) <= 1e-12;
  }
  checks.add("length parameter equals translation length", lengths);
  checks.add("basmajian term closed form", terms);

  std::vector<double> centers_plus, centers_minus;
  std::vector<Geodesic> all_sides;
  for (const auto& [plus, minus] : group.sides) {
    centers_plus.push_back(plus.half_circle().center);
    centers_minus.push_back(-minus.half_circle().center);
    all_sides.push_back(plus);
    all_sides.push_back(minus);
  }
  std::sort(centers_plus.begin(), centers_plus.end());
  std::sort(centers_minus.begin(), centers_minus.end());
  checks.add("sides mirror-symmetric about the imaginary axis",
             centers_plus == centers_minus);
  checks.add("sides mutually exterior", mutually_exterior(all_sides));

  std::vector<MoebiusMap> gens = group.generators;
  off_region_check(checks, "generators map the open polygon off itself",
                   flute_polygon(group), all_sides, gens);

  try {
    const TypeVerdict verdict = classify_type(input.spec);
    checks.add("type classification",
               true, std::string("verdict: ") + flute_verdict_name(verdict.type));
  } catch (const Error& e) {
    checks.add("type classification", false, e.what());
  }
}

void run_monster_checks(const MonsterSpec& spec, CheckList& checks) {
  const double tol = comparison_tolerance();
  const WindowValidation validation = validate_windows(spec);
  checks.add("window ordering", validation.ok,
             validation.ok ? "" : join(validation.violations));
  if (!validation.ok) return;

  const MonsterGroup group = build_monster(spec);
  bool hyperbolic = true, pairing = true, fixed = true;
  std::vector<Geodesic> circles;
  std::vector<MoebiusMap> gens;
  for (const MonsterGroup::GeneratorPair& p : group.pairs) {
    hyperbolic = hyperbolic && classify(p.f) == MapClass::Hyperbolic &&
                 classify(p.g) == MapClass::Hyperbolic;
    pairing = pairing &&
              endpoints_match(image_of_geodesic(p.f, p.sigma), p.sigma_image, tol) &&
              endpoints_match(image_of_geodesic(p.g, p.rho), p.rho_image, tol);
    for (const MoebiusMap& m : {p.f, p.g}) {
      const FixedPointSet fps = fixed_points(m);
      fixed = fixed && fps.boundary.size() == 2;
      for (const BoundaryPoint& q : fps.boundary) {
        const BoundaryPoint image = apply(m, q);
        fixed = fixed && !q.is_infinity() && !image.is_infinity() &&
                close(image.value(), q.value(), tol);
      }
    }
    circles.push_back(p.sigma);
    circles.push_back(p.sigma_image);
    circles.push_back(p.rho);
    circles.push_back(p.rho_image);
    gens.push_back(p.f);
    gens.push_back(p.g);
  }
  checks.add("generators hyperbolic", hyperbolic);
  checks.add("sigma -> sigma~ and rho -> rho~ pairing", pairing);
  checks.add("fixed points real, distinct, and fixed", fixed);
  checks.add("pairing circles mutually exterior", mutually_exterior(circles));

  off_region_check(checks, "generators map the open region off itself",
                   group.region, circles, gens);

  bool strips_ok = true;
  for (std::size_t i = 0; i + 1 < spec.windows.size() && strips_ok; ++i) {
    const Region left = strip(spec, spec.first_index + static_cast<long>(i));
    const Region right = strip(spec, spec.first_index + static_cast<long>(i) + 1);
    for (const UHPoint& p : sample_region(left, circles, 20)) {
      strips_ok = strips_ok && !right.contains(p);
    }
  }
  checks.add("consecutive strips disjoint", strips_ok);

  checks.add("first-kind criterion evaluates", true,
             std::string("verdict: ") + kind_verdict_name(first_kind_check(spec)));
}

}  // namespace

CheckOutcome run_checks(const std::string& json_text) {
  CheckList checks;
  const SpecKind kind = detect_spec_kind(json_text);
  try {
    if (kind == SpecKind::Flute) {
      run_flute_checks(parse_flute_spec(json_text), checks);
    } else {
      run_monster_checks(parse_monster_spec(json_text), checks);
    }
  } catch (const Error& e) {
    checks.add("construction", false, e.what());
  }
  CheckOutcome outcome;
  outcome.ok = checks.all_ok;
  outcome.report = std::string("{\"kind\":\"check\",\"spec\":\"") +
                   (kind == SpecKind::Flute ? "flute" : "monster") +
                   "\",\"ok\":" + (outcome.ok ? "true" : "false") +
                   ",\"checks\":[" + join(checks.entries) + "]}";
  return outcome;
}

}  // namespace fuchsia
