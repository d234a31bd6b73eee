#include <algorithm>
#include <cmath>
#include <random>
#include <vector>

#include "doctest.h"
#include "fuchsia/error.hpp"
#include "fuchsia/flute.hpp"
#include "fuchsia/tolerance.hpp"

using namespace fuchsia;

namespace {

// Textbook evaluation of the length formula, kept separate from the
// library path so the comparison stays two-sided.
double naive_length(double sp, double sn) {
  const double root = 2.0 * std::sqrt(sp * sn);
  return std::log((sp + sn + root) / (sp + sn - root));
}

std::vector<double> random_prefix(std::mt19937_64& rng, int max_len = 12) {
  std::uniform_int_distribution<int> len(1, max_len);
  std::uniform_real_distribution<double> entry(0.05, 10.0);
  std::vector<double> x(static_cast<std::size_t>(len(rng)));
  for (double& v : x) v = entry(rng);
  return x;
}

}  // namespace

TEST_CASE("partial sums") {
  const SequenceSpec ones({1, 1, 1}, std::monostate{});
  CHECK(partial_sums(ones, 3) == std::vector<double>{1, 2, 3});

  const SequenceSpec halves({1, 0.5, 0.25, 0.125}, std::monostate{});
  const std::vector<double> s = partial_sums(halves, 4);
  CHECK(s == std::vector<double>{1, 1.5, 1.75, 1.875});

  const SequenceSpec alternating({1, 2, 1, 2}, std::monostate{});
  CHECK(partial_sums(alternating, 4) == std::vector<double>{1, 3, 4, 6});

  CHECK_THROWS_AS(partial_sums(ones, 4), Error);   // no tail law
  CHECK_THROWS_AS(partial_sums(ones, 0), Error);
  try {
    partial_sums(ones, 4);
  } catch (const Error& e) {
    CHECK(e.code() == ErrorCode::InsufficientData);
  }
}

TEST_CASE("tail laws extend the prefix") {
  const SequenceSpec constant({1}, ConstantTail{2});
  CHECK(partial_sums(constant, 3) == std::vector<double>{1, 3, 5});

  const SequenceSpec geometric({1}, GeometricTail{0.5, 0.5});
  const std::vector<double> s = partial_sums(geometric, 4);
  CHECK(s[1] == doctest::Approx(1.5));
  CHECK(s[2] == doctest::Approx(1.75));
  CHECK(s[3] == doctest::Approx(1.875));

  const SequenceSpec harmonic({}, HarmonicTail{1.0});
  const std::vector<double> h = partial_sums(harmonic, 3);
  CHECK(h[2] == doctest::Approx(1.0 + 0.5 + 1.0 / 3.0));
}

TEST_CASE("sequence validation") {
  CHECK_THROWS_AS(SequenceSpec({1, -1}, std::monostate{}), Error);
  CHECK_THROWS_AS(SequenceSpec({0}, std::monostate{}), Error);
  CHECK_THROWS_AS(SequenceSpec({1}, ConstantTail{0}), Error);
  CHECK_THROWS_AS(SequenceSpec({1}, GeometricTail{1, -0.5}), Error);
  CHECK_THROWS_AS(SequenceSpec({1}, HarmonicTail{0}), Error);
}

TEST_CASE("flute generator matrices against the displayed entries") {
  const std::vector<double> s0{1.0};
  const MoebiusMap g0 = flute_generator(0, s0);
  CHECK(g0.a() == doctest::Approx(1));
  CHECK(g0.b() == doctest::Approx(0));
  CHECK(g0.c() == doctest::Approx(-2));
  CHECK(g0.d() == doctest::Approx(1));
  CHECK(classify(g0) == MapClass::Parabolic);

  const std::vector<double> s{1.0, 2.0};
  const MoebiusMap g1 = flute_generator(1, s);
  // independent form: 1 + 2 s_0/(s_1-s_0), -2 s_0 (1 + s_0/(s_1-s_0)), -2/(s_1-s_0)
  const double delta = s[1] - s[0];
  CHECK(g1.a() == doctest::Approx(1.0 + 2.0 * s[0] / delta));
  CHECK(g1.b() == doctest::Approx(-2.0 * s[0] * (1.0 + s[0] / delta)));
  CHECK(g1.c() == doctest::Approx(-2.0 / delta));
  CHECK(g1.d() == doctest::Approx(1.0 + 2.0 * s[0] / delta));
  CHECK(g1.a() == doctest::Approx(3));
  CHECK(g1.b() == doctest::Approx(-4));
  CHECK(classify(g1) == MapClass::Hyperbolic);
  CHECK(g1.trace() == doctest::Approx(6));

  CHECK(apply(g1, BoundaryPoint(1.0)).value() == doctest::Approx(-1.0));
  CHECK(apply(g1, BoundaryPoint(2.0)).value() == doctest::Approx(-2.0));

  CHECK_THROWS_AS(flute_generator(2, s), Error);
}

TEST_CASE("displayed generator entries have determinant one as written") {
  std::mt19937_64 rng(301);
  for (int i = 0; i < 100; ++i) {
    const SequenceSpec spec(random_prefix(rng), std::monostate{});
    const std::vector<double> s = partial_sums(spec, spec.prefix().size());
    for (std::size_t n = 0; n < s.size(); ++n) {
      const double sp = n == 0 ? 0.0 : s[n - 1];
      const double delta = s[n] - sp;
      const double a = 1.0 + 2.0 * sp / delta;
      const double b = -2.0 * sp * (1.0 + sp / delta);
      const double c = -2.0 / delta;
      CHECK(det_is_one(a, b, c, a));
    }
  }
}

TEST_CASE("build_flute assembles generators and mirrored sides") {
  const SequenceSpec spec({1, 1}, std::monostate{});
  const FluteGroup group = build_flute(spec, 2);
  REQUIRE(group.generators.size() == 2);
  REQUIRE(group.sides.size() == 2);

  CHECK(approx_equal(group.generators[0], MoebiusMap::from_det_one(1, 0, -2, 1), 1e-12));
  CHECK(approx_equal(group.generators[1], MoebiusMap::from_det_one(3, -4, -2, 3), 1e-12));

  CHECK(group.sides[0].first.half_circle().center == doctest::Approx(0.5));
  CHECK(group.sides[0].first.half_circle().radius == doctest::Approx(0.5));
  CHECK(group.sides[0].second.half_circle().center == doctest::Approx(-0.5));
  CHECK(group.sides[1].first.half_circle().center == doctest::Approx(1.5));
  CHECK(group.sides[1].second.half_circle().center == doctest::Approx(-1.5));
  CHECK(group.sides[1].first.half_circle().radius == doctest::Approx(0.5));

  std::vector<Geodesic> all;
  for (const auto& [p, m] : group.sides) {
    all.push_back(p);
    all.push_back(m);
  }
  CHECK(mutually_exterior(all));

  CHECK_THROWS_AS(build_flute(spec, 0), Error);
}

TEST_CASE("length parameter anchor and consistency") {
  const std::vector<double> s{1.0, 2.0};
  const double r2 = std::sqrt(2.0);
  const double expected = std::log((3 + 2 * r2) / (3 - 2 * r2));
  CHECK(length_param(1, s) == doctest::Approx(expected).epsilon(1e-12));
  CHECK(length_param(1, s) == doctest::Approx(3.5254943).epsilon(1e-6));
  CHECK(length_param(1, s) == doctest::Approx(2.0 * std::acosh(3.0)).epsilon(1e-12));

  CHECK_THROWS_AS(length_param(0, s), Error);
  CHECK_THROWS_AS(length_param(2, s), Error);
  try {
    length_param(0, s);
  } catch (const Error& e) {
    CHECK(e.code() == ErrorCode::IndexOutOfRange);
  }
}

TEST_CASE("basmajian term anchor, closed form and scale invariance") {
  const std::vector<double> s{1.0, 2.0};
  const double r2 = std::sqrt(2.0);
  // oracle: exp(-l_1/2) with l_1 evaluated from the displayed formula
  CHECK(basmajian_term(1, s) ==
        doctest::Approx(std::exp(-0.5 * naive_length(1, 2))).epsilon(1e-12));
  CHECK(basmajian_term(1, s) ==
        doctest::Approx(1.0 / ((1 + r2) * (1 + r2))).epsilon(1e-12));

  for (double k : {0.5, 3.0, 17.0}) {
    const std::vector<double> scaled{k * 1.0, k * 2.0};
    CHECK(basmajian_term(1, scaled) == doctest::Approx(basmajian_term(1, s)).epsilon(1e-12));
  }
}

TEST_CASE("constant sequence terms behave like 1/(4n)") {
  const SequenceSpec spec({}, ConstantTail{1.0});
  const std::size_t N = 10000;
  const std::vector<double> s = partial_sums(spec, N + 1);
  double sum = 0.0;
  for (std::size_t n = 1; n <= N; ++n) sum += basmajian_term(n, s);
  CHECK(sum > 2.0);   // divergence witness
  CHECK(sum < 3.0);
  // asymptotic: term_n * 4n -> 1
  CHECK(basmajian_term(N, s) * 4.0 * static_cast<double>(N) == doctest::Approx(1.0).epsilon(0.01));
}

TEST_CASE("type classification from tail laws") {
  CHECK(classify_type(SequenceSpec({1}, ConstantTail{1})).type ==
        FluteType::FirstKindParabolic);
  CHECK(classify_type(SequenceSpec({1}, HarmonicTail{2})).type ==
        FluteType::FirstKindParabolic);
  CHECK(classify_type(SequenceSpec({1}, GeometricTail{1, 1.0})).type ==
        FluteType::FirstKindParabolic);
  CHECK(classify_type(SequenceSpec({1}, GeometricTail{1, 2.0})).type ==
        FluteType::FirstKindParabolic);

  const TypeVerdict second = classify_type(SequenceSpec({1}, GeometricTail{0.5, 0.5}));
  CHECK(second.type == FluteType::SecondKindNonParabolic);
  REQUIRE(second.limit.has_value());
  CHECK(*second.limit == doctest::Approx(2.0).epsilon(1e-15));

  CHECK(classify_type(SequenceSpec({1, 2, 3}, std::monostate{})).type == FluteType::Unknown);
  CHECK(classify_type(SequenceSpec({1}, CustomTail{std::nullopt})).type == FluteType::Unknown);
  CHECK(classify_type(SequenceSpec({1}, CustomTail{true})).type ==
        FluteType::FirstKindParabolic);
  const TypeVerdict custom_conv = classify_type(SequenceSpec({1}, CustomTail{false}));
  CHECK(custom_conv.type == FluteType::SecondKindNonParabolic);
  CHECK_FALSE(custom_conv.limit.has_value());
}

TEST_CASE("convex core boundary") {
  const auto core = convex_core_boundary(SequenceSpec({1}, GeometricTail{0.5, 0.5}));
  REQUIRE(core.has_value());
  CHECK(core->half_circle().center == doctest::Approx(0.0));
  CHECK(core->half_circle().radius == doctest::Approx(2.0).epsilon(1e-15));

  CHECK_FALSE(convex_core_boundary(SequenceSpec({1}, ConstantTail{1})).has_value());

  CHECK_THROWS_AS(convex_core_boundary(SequenceSpec({1}, std::monostate{})), Error);
  try {
    convex_core_boundary(SequenceSpec({1}, std::monostate{}));
  } catch (const Error& e) {
    CHECK(e.code() == ErrorCode::UnknownType);
  }
  CHECK_THROWS_AS(convex_core_boundary(SequenceSpec({1}, CustomTail{false})), Error);
}

TEST_CASE("flute polygon membership") {
  const FluteGroup group = build_flute(SequenceSpec({1, 1}, std::monostate{}), 2);
  const Region region = flute_polygon(group);
  CHECK(region.constraints.size() == 4);
  CHECK(region.contains(UHPoint{0, 10}));
  CHECK_FALSE(region.contains(UHPoint{0.5, 0.3}));  // inside gamma_0^+
  CHECK_FALSE(region.contains(UHPoint{0.5, 0.5}));  // exactly on gamma_0^+

  Region closure = region;
  closure.closed = true;
  CHECK(closure.contains(UHPoint{0.5, 0.5}));
}

TEST_CASE("flute polygon clipped by the convex core") {
  const SequenceSpec spec({1}, GeometricTail{0.5, 0.5});
  const FluteGroup group = build_flute(spec, 3);
  const auto core = convex_core_boundary(spec);
  REQUIRE(core.has_value());
  const Region region = flute_polygon(group, *core);
  CHECK(region.constraints.size() == 7);
  CHECK(region.contains(UHPoint{0, 1.5}));
  CHECK_FALSE(region.contains(UHPoint{0, 3}));  // outside the core half-circle
}

TEST_CASE("integrality of {1,2}-sequences") {
  CHECK(is_integral(build_flute(SequenceSpec({1, 2, 1}, std::monostate{}), 3)));
  CHECK(is_integral(build_flute(SequenceSpec({1, 1, 1, 1}, std::monostate{}), 4)));
  CHECK_FALSE(is_integral(build_flute(SequenceSpec({0.5, 0.3}, std::monostate{}), 2)));
}

TEST_CASE("property: side pairing, trace formula, length consistency") {
  std::mt19937_64 rng(302);
  for (int i = 0; i < 100; ++i) {
    const SequenceSpec spec(random_prefix(rng), std::monostate{});
    const FluteGroup group = build_flute(spec, spec.prefix().size());
    const std::vector<double>& s = group.s;
    for (std::size_t n = 0; n < s.size(); ++n) {
      const MoebiusMap& g = group.generators[n];
      const double sp = n == 0 ? 0.0 : s[n - 1];

      const Geodesic image = image_of_geodesic(g, group.sides[n].first);
      CHECK(image.half_circle().center ==
            doctest::Approx(group.sides[n].second.half_circle().center).epsilon(1e-9));
      CHECK(image.half_circle().radius ==
            doctest::Approx(group.sides[n].second.half_circle().radius).epsilon(1e-9));

      CHECK(g.trace() == doctest::Approx(2.0 * (s[n] + sp) / (s[n] - sp)).epsilon(1e-12));

      if (n >= 1) {
        CHECK(length_param(n, s) == doctest::Approx(translation_length(g)).epsilon(1e-10));
        const double root_sum = std::sqrt(s[n - 1]) + std::sqrt(s[n]);
        CHECK(std::abs(basmajian_term(n, s) - (s[n] - s[n - 1]) / (root_sum * root_sum)) <=
              1e-12);
      }
    }
  }
}

TEST_CASE("property: sides are mirror-symmetric across the imaginary axis") {
  std::mt19937_64 rng(303);
  for (int i = 0; i < 50; ++i) {
    const SequenceSpec spec(random_prefix(rng), std::monostate{});
    const FluteGroup group = build_flute(spec, spec.prefix().size());
    std::vector<double> plus, minus_reflected;
    for (const auto& [p, m] : group.sides) {
      plus.push_back(p.half_circle().center);
      minus_reflected.push_back(-m.half_circle().center);
      CHECK(p.half_circle().radius == doctest::Approx(m.half_circle().radius));
    }
    std::sort(plus.begin(), plus.end());
    std::sort(minus_reflected.begin(), minus_reflected.end());
    for (std::size_t k = 0; k < plus.size(); ++k) {
      CHECK(plus[k] == doctest::Approx(minus_reflected[k]));
    }
  }
}

TEST_CASE("property: divergence verdicts of sum x_n and sum exp(-l_n/2) agree") {
  // divergent tails: the basmajian partial sums keep growing
  for (const SequenceSpec& spec :
       {SequenceSpec({1}, ConstantTail{1}), SequenceSpec({1}, HarmonicTail{1})}) {
    CHECK(classify_type(spec).type == FluteType::FirstKindParabolic);
    const std::vector<double> s = partial_sums(spec, 10001);
    double to_1k = 0.0, to_10k = 0.0;
    for (std::size_t n = 1; n <= 10000; ++n) {
      const double term = basmajian_term(n, s);
      if (n <= 1000) to_1k += term;
      to_10k += term;
    }
    CHECK(to_10k - to_1k > 0.03);  // still accumulating mass at depth 10^4
  }
  // convergent tail: the sum settles after a handful of terms (the
  // geometric increments drop below the ulp of the limit soon after)
  const SequenceSpec geometric({1}, GeometricTail{0.5, 0.5});
  CHECK(classify_type(geometric).type == FluteType::SecondKindNonParabolic);
  const std::vector<double> s = partial_sums(geometric, 41);
  double tail = 0.0;
  for (std::size_t n = 20; n <= 40; ++n) tail += basmajian_term(n, s);
  CHECK(tail < 1e-6);
}

TEST_CASE("partial sums refuse terms below double resolution") {
  const SequenceSpec spec({1}, GeometricTail{0.5, 0.5});
  CHECK(partial_sums(spec, 40).size() == 40);
  CHECK_THROWS_AS(partial_sums(spec, 500), Error);
  try {
    partial_sums(spec, 500);
  } catch (const Error& e) {
    CHECK(e.code() == ErrorCode::InsufficientData);
  }
}

TEST_CASE("length parameter rejects non-increasing sums") {
  const std::vector<double> stuck{1.0, 1.0};
  CHECK_THROWS_AS(length_param(1, stuck), Error);
  const std::vector<double> decreasing{2.0, 1.0};
  CHECK_THROWS_AS(length_param(1, decreasing), Error);
}

TEST_CASE("endpoint pairing stays sharp for extreme sequences") {
  // 19 large steps followed by a tiny one: the generator's entries reach
  // ~4e7 and both endpoints sit next to the pole.
  std::vector<double> x(19, 1000.0);
  x.push_back(0.001);
  const SequenceSpec spec(x, std::monostate{});
  const FluteGroup group = build_flute(spec, x.size());
  const std::size_t n = x.size() - 1;
  const double sp = group.s[n - 1];
  const double sn = group.s[n];

  const BoundaryPoint left = apply(group.generators[n], BoundaryPoint(sp));
  const BoundaryPoint right = apply(group.generators[n], BoundaryPoint(sn));
  REQUIRE_FALSE(left.is_infinity());
  REQUIRE_FALSE(right.is_infinity());
  CHECK(std::abs(left.value() - (-sp)) <= 1e-9);
  CHECK(std::abs(right.value() - (-sn)) <= 1e-9);

  CHECK(length_param(n, group.s) ==
        doctest::Approx(translation_length(group.generators[n])).epsilon(1e-12));
}
