#pragma once

#include <optional>
#include <string>
#include <utility>
#include <vector>

#include "fuchsia/geodesics.hpp"
#include "fuchsia/moebius.hpp"

namespace fuchsia {

/// One window (a_n, b_n, c_n, d_n, e_n); valid when strictly increasing.
struct MonsterWindow {
  double a = 0.0;
  double b = 0.0;
  double c = 0.0;
  double d = 0.0;
  double e = 0.0;

  bool strictly_increasing() const { return a < b && b < c && c < d && d < e; }
};

/// Declared behavior of the untruncated Z-indexed family. Each flag may be
/// left unset, in which case the tail is undecided.
struct MonsterFlags {
  std::optional<bool> gapless;          // e_n = a_{n+1} for every n
  std::optional<bool> left_unbounded;   // a_n -> -infinity
  std::optional<bool> right_unbounded;  // e_n -> +infinity
};

/// Finite contiguous truncation of a window family, indexed from first_index.
struct MonsterSpec {
  std::vector<MonsterWindow> windows;
  long first_index = 0;
  MonsterFlags flags;
};

struct WindowValidation {
  bool ok = true;
  std::vector<std::string> violations;
};

/// Checks each window's strict ordering and e_n <= a_{n+1} between
/// consecutive windows; never throws, the violation list names each failure.
WindowValidation validate_windows(const MonsterSpec& spec);

/// The pair (f, g) for one window: f carries (a,b) onto (c,d) with a -> d,
/// b -> c; g carries (b,c) onto (d,e) with b -> e, c -> d. Both hyperbolic.
/// Raises InvalidWindow when the window is not strictly increasing.
std::pair<MoebiusMap, MoebiusMap> monster_generators(const MonsterWindow& w);

struct MonsterGroup {
  struct GeneratorPair {
    MoebiusMap f, g;
    Geodesic sigma, sigma_image, rho, rho_image;
  };
  std::vector<GeneratorPair> pairs;
  long first_index = 0;
  Region region;  // intersection of the exteriors of all pairing circles
};

/// Raises InvalidWindow (message carries the violation list) when
/// validate_windows fails.
MonsterGroup build_monster(const MonsterSpec& spec);

enum class KindVerdict { FirstKind, SecondKind, Unknown };

/// First kind iff the family is gapless with e_n -> +inf and a_n -> -inf.
/// Any represented gap e_n < a_{n+1} forces SecondKind regardless of flags;
/// otherwise explicit flags decide and unset flags leave Unknown.
KindVerdict first_kind_check(const MonsterSpec& spec);

/// The strip over window n: its four circle exteriors intersected with the
/// vertical band a_n < Re(z) < e_n. n is an absolute index (first_index
/// based); raises IndexOutOfRange for unrepresented windows.
Region strip(const MonsterSpec& spec, long n);

}  // namespace fuchsia
