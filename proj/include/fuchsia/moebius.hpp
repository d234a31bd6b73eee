#pragma once

#include <array>
#include <optional>
#include <vector>

namespace fuchsia {

/// Point of the open upper half-plane, y > 0 strictly.
struct UHPoint {
  double x = 0.0;
  double y = 1.0;
};

/// Point of the boundary circle: a real number or the point at infinity.
class BoundaryPoint {
 public:
  BoundaryPoint() = default;
  BoundaryPoint(double value) : value_(value) {}  // NOLINT: implicit by design

  static BoundaryPoint infinity() {
    BoundaryPoint p;
    p.infinite_ = true;
    return p;
  }

  bool is_infinity() const { return infinite_; }

  /// Finite coordinate; meaningless when is_infinity().
  double value() const { return value_; }

  friend bool operator==(const BoundaryPoint& p, const BoundaryPoint& q) {
    if (p.infinite_ || q.infinite_) return p.infinite_ == q.infinite_;
    return p.value_ == q.value_;
  }

  /// Total order with infinity greatest; used for deterministic output.
  friend bool operator<(const BoundaryPoint& p, const BoundaryPoint& q) {
    if (p.infinite_) return false;
    if (q.infinite_) return true;
    return p.value_ < q.value_;
  }

 private:
  double value_ = 0.0;
  bool infinite_ = false;
};

enum class MapClass { Identity, Elliptic, Parabolic, Hyperbolic };

/// Element of PSL(2,R): real 2x2 matrix of determinant one, quotiented by
/// +-I. The stored representative is sign-canonical (first nonzero entry in
/// order a, b, c, d positive) so equality and hashing are stable.
class MoebiusMap {
 public:
  MoebiusMap() : entries_{1.0, 0.0, 0.0, 1.0} {}

  /// General-entry constructor: divides by sqrt(det) and canonicalizes.
  /// Raises NonPositiveDeterminant when det <= 0.
  static MoebiusMap normalized(double a, double b, double c, double d);

  /// Entries already of determinant one (symbolically); only the sign is
  /// canonicalized. Skips the numerically fragile sqrt(det) division.
  static MoebiusMap from_det_one(double a, double b, double c, double d);

  double a() const { return entries_[0]; }
  double b() const { return entries_[1]; }
  double c() const { return entries_[2]; }
  double d() const { return entries_[3]; }
  const std::array<double, 4>& entries() const { return entries_; }

  double trace() const { return entries_[0] + entries_[3]; }
  double det() const { return entries_[0] * entries_[3] - entries_[1] * entries_[2]; }

 private:
  explicit MoebiusMap(std::array<double, 4> e) : entries_(e) {}

  std::array<double, 4> entries_;
};

/// Matrix product; m1 applied after m2.
MoebiusMap compose(const MoebiusMap& m1, const MoebiusMap& m2);

MoebiusMap inverse(const MoebiusMap& m);

/// Action on the boundary circle. The pole -d/c maps to infinity and
/// infinity maps to a/c (or stays put when c = 0).
BoundaryPoint apply(const MoebiusMap& m, const BoundaryPoint& p);

/// Action on the upper half-plane; preserves y > 0.
UHPoint apply(const MoebiusMap& m, const UHPoint& p);

/// Trace classification. Identity first; then |trace| = 2 within the
/// comparison tolerance is Parabolic (deterministic tie-break), |trace| > 2
/// Hyperbolic, otherwise Elliptic.
MapClass classify(const MoebiusMap& m);

/// Hyperbolic translation length, 2*arccosh(|trace|/2).
/// Raises NotHyperbolic for other classes.
double translation_length(const MoebiusMap& m);

/// Fixed points of a non-identity map: two boundary points (hyperbolic),
/// one boundary point (parabolic) or one interior point (elliptic).
/// Boundary points are sorted ascending with infinity last.
struct FixedPointSet {
  std::vector<BoundaryPoint> boundary;
  std::optional<UHPoint> interior;
};

FixedPointSet fixed_points(const MoebiusMap& m);

/// Entrywise comparison of canonical representatives.
bool approx_equal(const MoebiusMap& m1, const MoebiusMap& m2, double tolerance);

}  // namespace fuchsia
