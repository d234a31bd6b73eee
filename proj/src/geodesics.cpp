#include "fuchsia/geodesics.hpp"

#include <cmath>
#include <string>

#include "fuchsia/error.hpp"
#include "fuchsia/tolerance.hpp"

namespace fuchsia {

Geodesic::Geodesic(const HalfCircle& hc) : circle_(hc), is_circle_(true) {
  if (!(hc.radius > 0.0)) {
    raise(ErrorCode::InvalidArgument,
          "half-circle radius must be positive, got " + std::to_string(hc.radius));
  }
}

Geodesic::Geodesic(const VerticalRay& vr) : ray_(vr), is_circle_(false) {}

const HalfCircle& Geodesic::half_circle() const {
  if (!is_circle_) raise(ErrorCode::InvalidArgument, "geodesic is a vertical ray");
  return circle_;
}

const VerticalRay& Geodesic::vertical_ray() const {
  if (is_circle_) raise(ErrorCode::InvalidArgument, "geodesic is a half-circle");
  return ray_;
}

std::pair<BoundaryPoint, BoundaryPoint> Geodesic::endpoints() const {
  if (is_circle_) {
    return {BoundaryPoint(circle_.center - circle_.radius),
            BoundaryPoint(circle_.center + circle_.radius)};
  }
  return {BoundaryPoint(ray_.foot), BoundaryPoint::infinity()};
}

Geodesic geodesic_from_endpoints(const BoundaryPoint& p, const BoundaryPoint& q) {
  if (p == q) {
    raise(ErrorCode::CoincidentEndpoints,
          "geodesic_from_endpoints: endpoints coincide");
  }
  if (p.is_infinity()) return Geodesic(VerticalRay{q.value()});
  if (q.is_infinity()) return Geodesic(VerticalRay{p.value()});
  const double center = 0.5 * (p.value() + q.value());
  const double radius = 0.5 * std::abs(p.value() - q.value());
  if (radius == 0.0) {
    raise(ErrorCode::CoincidentEndpoints,
          "geodesic_from_endpoints: endpoints coincide numerically");
  }
  return Geodesic(HalfCircle{center, radius});
}

bool ext_contains(const Geodesic& g, const UHPoint& w) {
  if (g.is_half_circle()) {
    const HalfCircle& hc = g.half_circle();
    return std::hypot(w.x - hc.center, w.y) > hc.radius;
  }
  const VerticalRay& vr = g.vertical_ray();
  return vr.exterior_right ? w.x > vr.foot : w.x < vr.foot;
}

bool int_contains(const Geodesic& g, const UHPoint& w) {
  if (g.is_half_circle()) {
    const HalfCircle& hc = g.half_circle();
    return std::hypot(w.x - hc.center, w.y) < hc.radius;
  }
  const VerticalRay& vr = g.vertical_ray();
  return vr.exterior_right ? w.x < vr.foot : w.x > vr.foot;
}

namespace {

bool ext_contains_closed(const Geodesic& g, const UHPoint& w) {
  if (g.is_half_circle()) {
    const HalfCircle& hc = g.half_circle();
    return std::hypot(w.x - hc.center, w.y) >= hc.radius;
  }
  const VerticalRay& vr = g.vertical_ray();
  return vr.exterior_right ? w.x >= vr.foot : w.x <= vr.foot;
}

bool int_contains_closed(const Geodesic& g, const UHPoint& w) {
  if (g.is_half_circle()) {
    const HalfCircle& hc = g.half_circle();
    return std::hypot(w.x - hc.center, w.y) <= hc.radius;
  }
  const VerticalRay& vr = g.vertical_ray();
  return vr.exterior_right ? w.x <= vr.foot : w.x >= vr.foot;
}

}  // namespace

MoebiusMap pairing_map(const Geodesic& src, const Geodesic& dst) {
  if (!src.is_half_circle() || !dst.is_half_circle()) {
    raise(ErrorCode::InvalidArgument, "pairing_map requires two half-circles");
  }
  const HalfCircle& s = src.half_circle();
  const HalfCircle& t = dst.half_circle();
  const double a = s.center - s.radius;
  const double b = s.center + s.radius;
  const double c = t.center - t.radius;
  const double d = t.center + t.radius;
  if (!(a < b && b < c && c < d)) {
    raise(ErrorCode::OverlappingCircles,
          "pairing_map requires endpoint order a < b < c < d, got [" +
              std::to_string(a) + ", " + std::to_string(b) + "] and [" +
              std::to_string(c) + ", " + std::to_string(d) + "]");
  }
  // f(z) = -r*r~/(z-O) + O~, matrix (O~, -r*r~ - O*O~; 1, -O) of det r*r~.
  const double center_src = s.center, center_dst = t.center;
  const double rr = s.radius * t.radius;
  const double scale = std::sqrt(rr);
  return MoebiusMap::from_det_one(center_dst / scale,
                                  (-rr - center_src * center_dst) / scale,
                                  1.0 / scale, -center_src / scale);
}

Geodesic image_of_geodesic(const MoebiusMap& m, const Geodesic& g) {
  const auto ends = g.endpoints();
  return geodesic_from_endpoints(apply(m, ends.first), apply(m, ends.second));
}

bool mutually_exterior(std::span<const Geodesic> circles) {
  for (const Geodesic& g : circles) {
    if (!g.is_half_circle()) {
      raise(ErrorCode::InvalidArgument, "mutually_exterior requires half-circles");
    }
  }
  for (std::size_t i = 0; i < circles.size(); ++i) {
    const HalfCircle& gi = circles[i].half_circle();
    for (std::size_t j = i + 1; j < circles.size(); ++j) {
      const HalfCircle& gj = circles[j].half_circle();
      if (std::abs(gi.center - gj.center) <
          gi.radius + gj.radius - kTangencyTolerance) {
        return false;
      }
    }
  }
  return true;
}

bool Region::contains(const UHPoint& w) const {
  for (const RegionConstraint& rc : constraints) {
    const bool ok =
        rc.side == Side::Exterior
            ? (closed ? ext_contains_closed(rc.geodesic, w) : ext_contains(rc.geodesic, w))
            : (closed ? int_contains_closed(rc.geodesic, w) : int_contains(rc.geodesic, w));
    if (!ok) return false;
  }
  return true;
}

}  // namespace fuchsia
