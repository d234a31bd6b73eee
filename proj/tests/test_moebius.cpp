#include <cmath>
#include <random>

#include "doctest.h"
#include "fuchsia/error.hpp"
#include "fuchsia/moebius.hpp"
#include "fuchsia/tolerance.hpp"

using namespace fuchsia;

namespace {

MoebiusMap random_map(std::mt19937_64& rng) {
  std::uniform_real_distribution<double> entry(-3.0, 3.0);
  for (;;) {
    const double a = entry(rng), b = entry(rng), c = entry(rng), d = entry(rng);
    if (a * d - b * c > 0.1) return MoebiusMap::normalized(a, b, c, d);
  }
}

}  // namespace

TEST_CASE("normalize scales to determinant one") {
  const MoebiusMap scaled = MoebiusMap::normalized(2, 0, 0, 2);
  CHECK(scaled.a() == doctest::Approx(1.0));
  CHECK(scaled.b() == doctest::Approx(0.0));
  CHECK(scaled.c() == doctest::Approx(0.0));
  CHECK(scaled.d() == doctest::Approx(1.0));

  // det = 1.5*2 - 1.5*1 = 1.5 by direct computation
  const double root = std::sqrt(1.5);
  const MoebiusMap m = MoebiusMap::normalized(1.5, 1.5, 1, 2);
  CHECK(m.a() == doctest::Approx(1.5 / root));
  CHECK(m.b() == doctest::Approx(1.5 / root));
  CHECK(m.c() == doctest::Approx(1.0 / root));
  CHECK(m.d() == doctest::Approx(2.0 / root));
  CHECK(det_is_one(m.a(), m.b(), m.c(), m.d()));
}

TEST_CASE("normalize canonicalizes -I to I") {
  const MoebiusMap m = MoebiusMap::normalized(-1, 0, 0, -1);
  CHECK(m.a() == 1.0);
  CHECK(m.b() == 0.0);
  CHECK(m.c() == 0.0);
  CHECK(m.d() == 1.0);
}

TEST_CASE("normalize rejects nonpositive determinants") {
  CHECK_THROWS_AS(MoebiusMap::normalized(1, 0, 0, -1), Error);
  CHECK_THROWS_AS(MoebiusMap::normalized(1, 2, 2, 4), Error);
  try {
    MoebiusMap::normalized(1, 0, 0, -1);
  } catch (const Error& e) {
    CHECK(e.code() == ErrorCode::NonPositiveDeterminant);
  }
}

TEST_CASE("sign canonicalization flips on the first nonzero entry") {
  const MoebiusMap m = MoebiusMap::normalized(0, -1, 1, 0);  // a = 0, b < 0
  CHECK(m.b() == doctest::Approx(1.0));
  CHECK(m.c() == doctest::Approx(-1.0));
}

TEST_CASE("compose satisfies the group laws") {
  std::mt19937_64 rng(7);
  const MoebiusMap m = random_map(rng);
  CHECK(approx_equal(compose(MoebiusMap(), m), m, 1e-12));
  CHECK(approx_equal(compose(m, MoebiusMap()), m, 1e-12));
  CHECK(classify(compose(m, inverse(m))) == MapClass::Identity);
}

TEST_CASE("compose of the first two flute generators, hand product") {
  // [[3,-4],[-2,3]] * [[1,0],[-2,1]] = [[3+8, -4],[-2-6, 3]] = [[11,-4],[-8,3]]
  const MoebiusMap g1 = MoebiusMap::from_det_one(3, -4, -2, 3);
  const MoebiusMap g0 = MoebiusMap::from_det_one(1, 0, -2, 1);
  const MoebiusMap prod = compose(g1, g0);
  CHECK(prod.a() == doctest::Approx(11));
  CHECK(prod.b() == doctest::Approx(-4));
  CHECK(prod.c() == doctest::Approx(-8));
  CHECK(prod.d() == doctest::Approx(3));
}

TEST_CASE("inverse is the adjugate") {
  const MoebiusMap m = MoebiusMap::normalized(1.5, 1.5, 1, 2);
  const MoebiusMap inv = inverse(m);
  CHECK(inv.a() == doctest::Approx(m.d()));
  CHECK(inv.b() == doctest::Approx(-m.b()));
  CHECK(inv.c() == doctest::Approx(-m.c()));
  CHECK(inv.d() == doctest::Approx(m.a()));

  const MoebiusMap g0_inv = inverse(MoebiusMap::from_det_one(1, 0, -2, 1));
  CHECK(g0_inv.a() == doctest::Approx(1));
  CHECK(g0_inv.b() == doctest::Approx(0));
  CHECK(g0_inv.c() == doctest::Approx(2));
  CHECK(g0_inv.d() == doctest::Approx(1));
}

TEST_CASE("apply: boundary action of the flute generators") {
  const MoebiusMap g0 = MoebiusMap::from_det_one(1, 0, -2, 1);  // s_0 = 1
  // direct evaluation of z/(-2z+1) at z = 1
  CHECK(apply(g0, BoundaryPoint(1.0)).value() == doctest::Approx(1.0 / (-2.0 + 1.0)));
  CHECK(apply(g0, BoundaryPoint(1.0)).value() == doctest::Approx(-1.0));

  const MoebiusMap g1 = MoebiusMap::from_det_one(3, -4, -2, 3);  // s = (1, 2)
  // (3*2-4)/(-2*2+3) = -2
  CHECK(apply(g1, BoundaryPoint(2.0)).value() == doctest::Approx(-2.0));
  CHECK(apply(g1, BoundaryPoint(1.0)).value() == doctest::Approx(-1.0));
}

TEST_CASE("apply: pole and infinity") {
  const MoebiusMap g1 = MoebiusMap::from_det_one(3, -4, -2, 3);
  CHECK(apply(g1, BoundaryPoint(1.5)).is_infinity());  // pole at -d/c = 1.5
  CHECK(apply(g1, BoundaryPoint::infinity()).value() == doctest::Approx(-1.5));  // a/c
  const MoebiusMap translate = MoebiusMap::from_det_one(1, 5, 0, 1);
  CHECK(apply(translate, BoundaryPoint::infinity()).is_infinity());
  CHECK(apply(translate, BoundaryPoint(2.0)).value() == doctest::Approx(7.0));
}

TEST_CASE("apply preserves the upper half-plane") {
  std::mt19937_64 rng(11);
  std::uniform_real_distribution<double> ux(-4.0, 4.0), uy(0.01, 5.0);
  for (int i = 0; i < 100; ++i) {
    const MoebiusMap m = random_map(rng);
    const UHPoint p{ux(rng), uy(rng)};
    CHECK(apply(m, p).y > 0.0);
  }
  const UHPoint i_point{0.0, 1.0};
  const UHPoint fixed = apply(MoebiusMap(), i_point);
  CHECK(fixed.x == doctest::Approx(0.0));
  CHECK(fixed.y == doctest::Approx(1.0));
}

TEST_CASE("classification by trace") {
  CHECK(classify(MoebiusMap()) == MapClass::Identity);
  const MoebiusMap g0 = MoebiusMap::from_det_one(1, 0, -2, 1);
  CHECK(classify(g0) == MapClass::Parabolic);
  CHECK(g0.trace() == doctest::Approx(2.0));

  // trace oracle 2(1 + 2 s_0/(s_1 - s_0)) = 6 for s = (1, 2)
  const MoebiusMap g1 = MoebiusMap::from_det_one(3, -4, -2, 3);
  CHECK(classify(g1) == MapClass::Hyperbolic);
  CHECK(g1.trace() == doctest::Approx(2.0 * (1.0 + 2.0 * 1.0 / 1.0)));

  const double theta = 0.3;
  const MoebiusMap rot = MoebiusMap::normalized(std::cos(theta), -std::sin(theta),
                                                std::sin(theta), std::cos(theta));
  CHECK(classify(rot) == MapClass::Elliptic);
}

TEST_CASE("near-parabolic traces classify parabolic deterministically") {
  const double tol = comparison_tolerance();
  const double eps = 0.4 * tol;
  // cosh(t/2) parametrization: trace 2 + eps via entries (1+u, u, u, 1+u)-ish;
  // simplest: diagonal map with a + 1/a = 2 + eps
  const double a_hi = 1.0 + std::sqrt(eps / 2.0);
  const MoebiusMap near_hyp = MoebiusMap::normalized(a_hi, 0.5, 0, 1.0 / a_hi);
  CHECK(std::abs(near_hyp.trace()) - 2.0 < tol);
  CHECK(classify(near_hyp) == MapClass::Parabolic);
}

TEST_CASE("fixed points: parabolic flute generator fixes 0") {
  // solve z = z/(-2z+1): -2z^2 = 0
  const FixedPointSet fps = fixed_points(MoebiusMap::from_det_one(1, 0, -2, 1));
  REQUIRE(fps.boundary.size() == 1);
  CHECK_FALSE(fps.boundary[0].is_infinity());
  CHECK(fps.boundary[0].value() == doctest::Approx(0.0));
  CHECK_FALSE(fps.interior.has_value());
}

TEST_CASE("fixed points: pairing map of the reference window") {
  // circles (-3,-1) and (0,3): O=-2, r=1, O~=1.5, r~=1.5
  // roots of z^2 + 0.5 z - 1.5 = 0 are 1 and -1.5; f(1)=1, f(-1.5)=-1.5
  const double scale = std::sqrt(1.5);
  const MoebiusMap f = MoebiusMap::from_det_one(1.5 / scale, 1.5 / scale,
                                                1.0 / scale, 2.0 / scale);
  const FixedPointSet fps = fixed_points(f);
  REQUIRE(fps.boundary.size() == 2);
  CHECK(fps.boundary[0].value() == doctest::Approx(-1.5));
  CHECK(fps.boundary[1].value() == doctest::Approx(1.0));
  for (const BoundaryPoint& p : fps.boundary) {
    CHECK(apply(f, p).value() == doctest::Approx(p.value()).epsilon(1e-9));
  }
}

TEST_CASE("fixed points: rotation about i") {
  const double theta = M_PI / 4.0;
  const MoebiusMap rot = MoebiusMap::normalized(std::cos(theta), -std::sin(theta),
                                                std::sin(theta), std::cos(theta));
  const FixedPointSet fps = fixed_points(rot);
  CHECK(fps.boundary.empty());
  REQUIRE(fps.interior.has_value());
  CHECK(fps.interior->x == doctest::Approx(0.0));
  CHECK(fps.interior->y == doctest::Approx(1.0));
}

TEST_CASE("fixed points: affine hyperbolic fixes its foot and infinity") {
  const MoebiusMap m = MoebiusMap::normalized(2, 0, 0, 0.5);  // z -> 4z
  const FixedPointSet fps = fixed_points(m);
  REQUIRE(fps.boundary.size() == 2);
  CHECK(fps.boundary[0].value() == doctest::Approx(0.0));
  CHECK(fps.boundary[1].is_infinity());
}

TEST_CASE("fixed points of the identity are an error") {
  CHECK_THROWS_AS(fixed_points(MoebiusMap()), Error);
  try {
    fixed_points(MoebiusMap());
  } catch (const Error& e) {
    CHECK(e.code() == ErrorCode::IdentityHasAllPoints);
  }
}

TEST_CASE("translation length") {
  const MoebiusMap g1 = MoebiusMap::from_det_one(3, -4, -2, 3);  // trace 6
  CHECK(translation_length(g1) == doctest::Approx(2.0 * std::acosh(3.0)));
  // same number as log((3+2 sqrt 2)/(3-2 sqrt 2))
  const double r2 = std::sqrt(2.0);
  CHECK(translation_length(g1) ==
        doctest::Approx(std::log((3 + 2 * r2) / (3 - 2 * r2))).epsilon(1e-12));

  CHECK_THROWS_AS(translation_length(MoebiusMap::from_det_one(1, 0, -2, 1)), Error);
  try {
    translation_length(MoebiusMap());
  } catch (const Error& e) {
    CHECK(e.code() == ErrorCode::NotHyperbolic);
  }
}

TEST_CASE("translation length vanishes at the parabolic boundary") {
  double previous = 10.0;
  for (double eps : {1e-2, 1e-4, 1e-6}) {
    const double a = 1.0 + std::sqrt(eps);  // trace a + 1/a = 2 + eps + O(eps^2)
    const double len = translation_length(MoebiusMap::normalized(a, 0, 0, 1 / a));
    CHECK(len < previous);
    previous = len;
  }
  CHECK(previous < 1e-2);
}

TEST_CASE("property: determinant preserved by all operations") {
  std::mt19937_64 rng(101);
  for (int i = 0; i < 200; ++i) {
    const MoebiusMap m1 = random_map(rng), m2 = random_map(rng);
    for (const MoebiusMap& m : {m1, inverse(m1), compose(m1, m2)}) {
      CHECK(det_is_one(m.a(), m.b(), m.c(), m.d()));
    }
  }
}

TEST_CASE("property: group action is a homomorphism") {
  std::mt19937_64 rng(102);
  std::uniform_real_distribution<double> ux(-4.0, 4.0), uy(0.05, 4.0);
  for (int i = 0; i < 200; ++i) {
    const MoebiusMap m1 = random_map(rng), m2 = random_map(rng);
    const UHPoint p{ux(rng), uy(rng)};
    const UHPoint lhs = apply(compose(m1, m2), p);
    const UHPoint rhs = apply(m1, apply(m2, p));
    CHECK(lhs.x == doctest::Approx(rhs.x).epsilon(1e-9));
    CHECK(lhs.y == doctest::Approx(rhs.y).epsilon(1e-9));
  }
}

TEST_CASE("property: classification and translation length survive conjugation") {
  std::mt19937_64 rng(103);
  for (int i = 0; i < 200; ++i) {
    const MoebiusMap m = random_map(rng), h = random_map(rng);
    if (std::abs(std::abs(m.trace()) - 2.0) < 1e-6) continue;  // stay off the tie
    const MoebiusMap conj = compose(compose(h, m), inverse(h));
    CHECK(classify(conj) == classify(m));
    if (classify(m) == MapClass::Hyperbolic) {
      CHECK(translation_length(conj) ==
            doctest::Approx(translation_length(m)).epsilon(1e-9));
    }
  }
}

TEST_CASE("property: fixed points round-trip under apply") {
  std::mt19937_64 rng(104);
  for (int i = 0; i < 200; ++i) {
    const MoebiusMap m = random_map(rng);
    if (classify(m) == MapClass::Identity) continue;
    const FixedPointSet fps = fixed_points(m);
    for (const BoundaryPoint& p : fps.boundary) {
      const BoundaryPoint image = apply(m, p);
      if (p.is_infinity()) {
        CHECK(image.is_infinity());
      } else {
        REQUIRE_FALSE(image.is_infinity());
        CHECK(std::abs(image.value() - p.value()) <= 1e-9 * std::max(1.0, std::abs(p.value())));
      }
    }
    if (fps.interior.has_value()) {
      const UHPoint image = apply(m, *fps.interior);
      CHECK(image.x == doctest::Approx(fps.interior->x).epsilon(1e-8));
      CHECK(image.y == doctest::Approx(fps.interior->y).epsilon(1e-8));
    }
  }
}
