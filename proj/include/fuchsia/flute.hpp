#pragma once

#include <cstddef>
#include <optional>
#include <span>
#include <utility>
#include <variant>
#include <vector>

#include "fuchsia/geodesics.hpp"
#include "fuchsia/moebius.hpp"

namespace fuchsia {

struct ConstantTail {
  double value = 1.0;  // > 0
};

struct GeometricTail {
  double first = 1.0;  // > 0
  double ratio = 1.0;  // > 0; divergent iff ratio >= 1
};

struct HarmonicTail {
  double scale = 1.0;  // > 0; terms scale/(k+1); always divergent
};

struct CustomTail {
  std::optional<bool> divergent;  // unset = unknown
};

/// Positive sequence given by a finite prefix and a declared tail law.
/// The tail law, not numeric partial sums, carries convergence knowledge.
class SequenceSpec {
 public:
  using Tail = std::variant<std::monostate, ConstantTail, GeometricTail,
                            HarmonicTail, CustomTail>;

  SequenceSpec(std::vector<double> prefix, Tail tail);

  const std::vector<double>& prefix() const { return prefix_; }
  const Tail& tail() const { return tail_; }
  bool has_tail_law() const { return !std::holds_alternative<std::monostate>(tail_); }

  /// x_i; raises InsufficientData beyond the prefix when no term law exists.
  double term(std::size_t i) const;

  /// Analytic verdict on sum(x_n): true, false, or unknown.
  std::optional<bool> series_diverges() const;

  /// Closed-form limit of the partial sums when the series converges and
  /// the tail has one (geometric ratio < 1).
  std::optional<double> series_limit() const;

 private:
  std::vector<double> prefix_;
  Tail tail_;
};

/// s_n = x_0 + ... + x_n for n < n_terms; strictly increasing and positive.
std::vector<double> partial_sums(const SequenceSpec& spec, std::size_t n_terms);

/// The generator pairing the side with endpoints {s_{n-1}, s_n} onto the
/// mirrored side {-s_{n-1}, -s_n}, with the convention s_{-1} = 0. Entries
/// ((s_n+s_{n-1})/x_n, -2 s_{n-1} s_n / x_n; -2/x_n, (s_n+s_{n-1})/x_n),
/// determinant one by construction.
MoebiusMap flute_generator(std::size_t n, std::span<const double> s);

/// Fenchel-Nielsen length of the n-th gluing geodesic (n >= 1):
/// log((s_{n-1}+s_n+2 sqrt(s_{n-1} s_n)) / (s_{n-1}+s_n-2 sqrt(s_{n-1} s_n))).
double length_param(std::size_t n, std::span<const double> s);

/// exp(-l_n/2); summand of the divergence-type series (n >= 1).
double basmajian_term(std::size_t n, std::span<const double> s);

/// Truncated flute group: partial sums, generators g_0..g_{N-1}, and the
/// mirrored side pairs (gamma_n^+, gamma_n^-).
struct FluteGroup {
  std::vector<double> s;
  std::vector<MoebiusMap> generators;
  std::vector<std::pair<Geodesic, Geodesic>> sides;
};

FluteGroup build_flute(const SequenceSpec& spec, std::size_t n_generators);

enum class FluteType { FirstKindParabolic, SecondKindNonParabolic, Unknown };

struct TypeVerdict {
  FluteType type = FluteType::Unknown;
  std::optional<double> limit;  // lim s_n when finite and analytically known
};

/// Divergence of sum(x_n) decides: divergent -> first kind and parabolic,
/// convergent -> second kind and non-parabolic. Analytic from the tail law
/// only; a finite prefix can never witness either verdict.
TypeVerdict classify_type(const SequenceSpec& spec);

/// Half-circle through +-lim s_n bounding the convex core, absent for the
/// first kind. Raises UnknownType when the tail law decides nothing and
/// InsufficientData when the kind is known but the limit has no closed form.
std::optional<Geodesic> convex_core_boundary(const SequenceSpec& spec);

/// Intersection of the exteriors of all 2N sides (open).
Region flute_polygon(const FluteGroup& group);

/// Same, intersected with the interior of the convex-core boundary.
Region flute_polygon(const FluteGroup& group, const Geodesic& core_boundary);

/// True when every generator has integer entries (within tolerance), i.e.
/// the group sits inside PSL(2,Z).
bool is_integral(const FluteGroup& group);

}  // namespace fuchsia
