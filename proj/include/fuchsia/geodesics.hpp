#pragma once

#include <span>
#include <utility>
#include <vector>

#include "fuchsia/moebius.hpp"

namespace fuchsia {

/// Half-circle orthogonal to the real axis: endpoints center +- radius.
struct HalfCircle {
  double center = 0.0;
  double radius = 1.0;  // > 0 strictly
};

/// Vertical geodesic with endpoints foot and infinity. Its "exterior" is
/// the half-plane Re(z) > foot unless exterior_right is cleared; the flag
/// exists because the half-plane split has no canonical outside.
struct VerticalRay {
  double foot = 0.0;
  bool exterior_right = true;
};

/// Complete geodesic of the upper half-plane.
class Geodesic {
 public:
  Geodesic() : circle_{}, is_circle_(true) {}
  Geodesic(const HalfCircle& hc);   // NOLINT: implicit by design
  Geodesic(const VerticalRay& vr);  // NOLINT: implicit by design

  bool is_half_circle() const { return is_circle_; }
  const HalfCircle& half_circle() const;
  const VerticalRay& vertical_ray() const;

  /// Endpoints on the boundary circle, ascending (infinity last).
  std::pair<BoundaryPoint, BoundaryPoint> endpoints() const;

 private:
  HalfCircle circle_;
  VerticalRay ray_;
  bool is_circle_;
};

/// Geodesic through two distinct boundary points. Raises CoincidentEndpoints.
Geodesic geodesic_from_endpoints(const BoundaryPoint& p, const BoundaryPoint& q);

/// Strict exterior membership: |w - center| > radius for half-circles,
/// the declared outer half-plane for vertical rays. Boundary points of the
/// geodesic belong to neither side.
bool ext_contains(const Geodesic& g, const UHPoint& w);

/// Strict interior membership (complement of the closed exterior).
bool int_contains(const Geodesic& g, const UHPoint& w);

/// The hyperbolic element f(z) = -r*r~/(z - O) + O~ carrying the half-circle
/// src (endpoints a < b) onto dst (endpoints c < d), with a -> d and b -> c.
/// Requires a < b < c < d; raises OverlappingCircles otherwise.
MoebiusMap pairing_map(const Geodesic& src, const Geodesic& dst);

/// Image geodesic, computed from the endpoint images.
Geodesic image_of_geodesic(const MoebiusMap& m, const Geodesic& g);

/// True when every pair of half-circles is disjoint or tangent:
/// |O_i - O_j| >= r_i + r_j up to the tangency slack.
bool mutually_exterior(std::span<const Geodesic> circles);

enum class Side { Exterior, Interior };

struct RegionConstraint {
  Geodesic geodesic;
  Side side = Side::Exterior;
};

/// Intersection of geodesic sides. Open by default; the closed flag switches
/// membership to the closure (boundary points count).
struct Region {
  std::vector<RegionConstraint> constraints;
  bool closed = false;

  bool contains(const UHPoint& w) const;
};

}  // namespace fuchsia
