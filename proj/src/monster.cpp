#include "fuchsia/monster.hpp"

#include <cmath>
#include <sstream>
#include <tuple>

#include "fuchsia/error.hpp"
#include "fuchsia/tolerance.hpp"

namespace fuchsia {

namespace {

Geodesic circle_between(double left, double right) {
  return Geodesic(HalfCircle{0.5 * (left + right), 0.5 * (right - left)});
}

std::string describe(const MonsterWindow& w) {
  std::ostringstream os;
  os << "(" << w.a << ", " << w.b << ", " << w.c << ", " << w.d << ", " << w.e << ")";
  return os.str();
}

}  // namespace

WindowValidation validate_windows(const MonsterSpec& spec) {
  WindowValidation result;
  for (std::size_t i = 0; i < spec.windows.size(); ++i) {
    const MonsterWindow& w = spec.windows[i];
    const long n = spec.first_index + static_cast<long>(i);
    if (!w.strictly_increasing()) {
      result.violations.push_back("window " + std::to_string(n) + " " + describe(w) +
                                  " violates a < b < c < d < e");
    }
    if (i + 1 < spec.windows.size()) {
      const MonsterWindow& next = spec.windows[i + 1];
      if (!(w.e <= next.a)) {
        std::ostringstream os;
        os << "windows " << n << ", " << n + 1 << ": e_" << n << " = " << w.e
           << " exceeds a_" << n + 1 << " = " << next.a
           << ", violating e_n <= a_{n+1}";
        result.violations.push_back(os.str());
      }
    }
  }
  result.ok = result.violations.empty();
  return result;
}

std::pair<MoebiusMap, MoebiusMap> monster_generators(const MonsterWindow& w) {
  if (!w.strictly_increasing()) {
    raise(ErrorCode::InvalidWindow,
          "monster_generators: window " + describe(w) + " violates a < b < c < d < e");
  }
  const MoebiusMap f = pairing_map(circle_between(w.a, w.b), circle_between(w.c, w.d));
  const MoebiusMap g = pairing_map(circle_between(w.b, w.c), circle_between(w.d, w.e));
  return {f, g};
}

MonsterGroup build_monster(const MonsterSpec& spec) {
  const WindowValidation validation = validate_windows(spec);
  if (!validation.ok) {
    std::string message = "build_monster: invalid window family";
    for (const std::string& v : validation.violations) message += "; " + v;
    raise(ErrorCode::InvalidWindow, message);
  }
  if (spec.windows.empty()) {
    raise(ErrorCode::InvalidWindow, "build_monster: no windows given");
  }
  MonsterGroup group;
  group.first_index = spec.first_index;
  group.pairs.reserve(spec.windows.size());
  group.region.constraints.reserve(4 * spec.windows.size());
  for (const MonsterWindow& w : spec.windows) {
    MonsterGroup::GeneratorPair pair{
        MoebiusMap(), MoebiusMap(),
        circle_between(w.a, w.b), circle_between(w.c, w.d),
        circle_between(w.b, w.c), circle_between(w.d, w.e)};
    std::tie(pair.f, pair.g) = monster_generators(w);
    group.region.constraints.push_back({pair.sigma, Side::Exterior});
    group.region.constraints.push_back({pair.sigma_image, Side::Exterior});
    group.region.constraints.push_back({pair.rho, Side::Exterior});
    group.region.constraints.push_back({pair.rho_image, Side::Exterior});
    group.pairs.push_back(std::move(pair));
  }
  return group;
}

KindVerdict first_kind_check(const MonsterSpec& spec) {
  const WindowValidation validation = validate_windows(spec);
  if (!validation.ok) {
    std::string message = "first_kind_check: invalid window family";
    for (const std::string& v : validation.violations) message += "; " + v;
    raise(ErrorCode::InvalidWindow, message);
  }
  // A gap between represented windows leaves a boundary interval free of
  // limit points no matter what the tails do.
  for (std::size_t i = 0; i + 1 < spec.windows.size(); ++i) {
    if (spec.windows[i + 1].a - spec.windows[i].e > kTangencyTolerance) {
      return KindVerdict::SecondKind;
    }
  }
  const MonsterFlags& f = spec.flags;
  if (f.gapless == false || f.left_unbounded == false || f.right_unbounded == false) {
    return KindVerdict::SecondKind;
  }
  if (f.gapless == true && f.left_unbounded == true && f.right_unbounded == true) {
    return KindVerdict::FirstKind;
  }
  return KindVerdict::Unknown;
}

Region strip(const MonsterSpec& spec, long n) {
  const long offset = n - spec.first_index;
  if (offset < 0 || offset >= static_cast<long>(spec.windows.size())) {
    raise(ErrorCode::IndexOutOfRange,
          "strip: window " + std::to_string(n) + " is not represented");
  }
  const MonsterWindow& w = spec.windows[static_cast<std::size_t>(offset)];
  if (!w.strictly_increasing()) {
    raise(ErrorCode::InvalidWindow,
          "strip: window " + describe(w) + " violates a < b < c < d < e");
  }
  Region region;
  region.constraints = {
      {circle_between(w.a, w.b), Side::Exterior},
      {circle_between(w.c, w.d), Side::Exterior},
      {circle_between(w.b, w.c), Side::Exterior},
      {circle_between(w.d, w.e), Side::Exterior},
      // Interior of a left-facing ray at a_n is Re(z) > a_n; interior of a
      // right-facing ray at e_n is Re(z) < e_n.
      {Geodesic(VerticalRay{w.a, false}), Side::Interior},
      {Geodesic(VerticalRay{w.e, true}), Side::Interior},
  };
  return region;
}

}  // namespace fuchsia
