#include "fuchsia/tolerance.hpp"

#include <cstdlib>

namespace fuchsia {

double comparison_tolerance() {
  static const double value = [] {
    const char* env = std::getenv("FUCHSIA_TOLERANCE");
    if (env != nullptr) {
      char* end = nullptr;
      const double parsed = std::strtod(env, &end);
      if (end != env && parsed > 0.0) return parsed;
    }
    return 1e-9;
  }();
  return value;
}

}  // namespace fuchsia
