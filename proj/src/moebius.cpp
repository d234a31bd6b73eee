#include "fuchsia/moebius.hpp"

#include <algorithm>
#include <cmath>
#include <complex>

#include "fuchsia/error.hpp"
#include "fuchsia/tolerance.hpp"

namespace fuchsia {

namespace {

std::array<double, 4> canonical(std::array<double, 4> e) {
  double lead = 0.0;
  for (double v : e) {
    if (v != 0.0) {
      lead = v;
      break;
    }
  }
  if (lead < 0.0) {
    for (double& v : e) v = -v;
  }
  for (double& v : e) {
    if (v == 0.0) v = 0.0;  // collapse -0.0
  }
  return e;
}

}  // namespace

MoebiusMap MoebiusMap::normalized(double a, double b, double c, double d) {
  const double det = a * d - b * c;
  if (!(det > 0.0)) {
    raise(ErrorCode::NonPositiveDeterminant,
          "normalize: determinant must be positive, got " + std::to_string(det));
  }
  const double s = std::sqrt(det);
  return MoebiusMap(canonical({a / s, b / s, c / s, d / s}));
}

MoebiusMap MoebiusMap::from_det_one(double a, double b, double c, double d) {
  return MoebiusMap(canonical({a, b, c, d}));
}

MoebiusMap compose(const MoebiusMap& m1, const MoebiusMap& m2) {
  return MoebiusMap::from_det_one(m1.a() * m2.a() + m1.b() * m2.c(),
                                  m1.a() * m2.b() + m1.b() * m2.d(),
                                  m1.c() * m2.a() + m1.d() * m2.c(),
                                  m1.c() * m2.b() + m1.d() * m2.d());
}

MoebiusMap inverse(const MoebiusMap& m) {
  return MoebiusMap::from_det_one(m.d(), -m.b(), -m.c(), m.a());
}

BoundaryPoint apply(const MoebiusMap& m, const BoundaryPoint& p) {
  const double a = m.a(), b = m.b(), c = m.c(), d = m.d();
  if (p.is_infinity()) {
    return c == 0.0 ? BoundaryPoint::infinity() : BoundaryPoint(a / c);
  }
  const double x = p.value();
  const double den = c * x + d;
  if (den == 0.0) return BoundaryPoint::infinity();
  if (c != 0.0 && std::abs(den) < 0.5 * (std::abs(c * x) + std::abs(d))) {
    // (ax+b)/(cx+d) = a/c - 1/(c(cx+d)) for det 1; the cancellation then
    // sits in the small correction term instead of the quotient.
    return BoundaryPoint(a / c - 1.0 / (c * den));
  }
  return BoundaryPoint((a * x + b) / den);
}

UHPoint apply(const MoebiusMap& m, const UHPoint& p) {
  const std::complex<double> z(p.x, p.y);
  const double a = m.a(), b = m.b(), c = m.c(), d = m.d();
  const std::complex<double> den = c * z + d;
  std::complex<double> w;
  if (c != 0.0 && std::abs(den) < 0.5 * (std::abs(c) * std::abs(z) + std::abs(d))) {
    w = a / c - 1.0 / (c * den);
  } else {
    w = (a * z + b) / den;
  }
  return UHPoint{w.real(), w.imag()};
}

MapClass classify(const MoebiusMap& m) {
  const double tol = comparison_tolerance();
  if (std::abs(m.a() - 1.0) <= tol && std::abs(m.b()) <= tol &&
      std::abs(m.c()) <= tol && std::abs(m.d() - 1.0) <= tol) {
    return MapClass::Identity;
  }
  const double t = std::abs(m.trace());
  if (std::abs(t - 2.0) <= tol) return MapClass::Parabolic;
  return t > 2.0 ? MapClass::Hyperbolic : MapClass::Elliptic;
}

double translation_length(const MoebiusMap& m) {
  if (classify(m) != MapClass::Hyperbolic) {
    raise(ErrorCode::NotHyperbolic,
          "translation_length: map is not hyperbolic (|trace| = " +
              std::to_string(std::abs(m.trace())) + ")");
  }
  return 2.0 * std::acosh(std::abs(m.trace()) / 2.0);
}

FixedPointSet fixed_points(const MoebiusMap& m) {
  const MapClass cls = classify(m);
  if (cls == MapClass::Identity) {
    raise(ErrorCode::IdentityHasAllPoints,
          "fixed_points: every point is fixed by the identity");
  }
  const double a = m.a(), b = m.b(), c = m.c(), d = m.d();
  FixedPointSet out;

  if (c == 0.0) {
    // Affine map fixing infinity. Real entries with det 1 rule out the
    // elliptic case here.
    if (cls == MapClass::Parabolic) {
      out.boundary = {BoundaryPoint::infinity()};
    } else {
      out.boundary = {BoundaryPoint(b / (d - a)), BoundaryPoint::infinity()};
    }
    return out;
  }

  // Fixed points solve c z^2 + (d - a) z - b = 0 with discriminant
  // (d-a)^2 + 4 b c = trace^2 - 4.
  const double t = m.trace();
  switch (cls) {
    case MapClass::Parabolic:
      out.boundary = {BoundaryPoint((a - d) / (2.0 * c))};
      break;
    case MapClass::Hyperbolic: {
      const double disc = std::sqrt(t * t - 4.0);
      const double B = d - a;
      // Cancellation-free quadratic roots.
      const double q = -0.5 * (B + std::copysign(disc, B));
      double r1, r2;
      if (q != 0.0) {
        r1 = q / c;
        r2 = -b / q;
      } else {  // B == 0
        r1 = disc / (2.0 * c);
        r2 = -r1;
      }
      out.boundary = {BoundaryPoint(std::min(r1, r2)), BoundaryPoint(std::max(r1, r2))};
      break;
    }
    case MapClass::Elliptic: {
      const double y = std::sqrt(std::max(4.0 - t * t, 0.0)) / (2.0 * std::abs(c));
      out.interior = UHPoint{(a - d) / (2.0 * c), y};
      break;
    }
    case MapClass::Identity:
      break;  // unreachable
  }
  return out;
}

bool approx_equal(const MoebiusMap& m1, const MoebiusMap& m2, double tolerance) {
  for (int i = 0; i < 4; ++i) {
    if (std::abs(m1.entries()[i] - m2.entries()[i]) > tolerance) return false;
  }
  return true;
}

}  // namespace fuchsia
