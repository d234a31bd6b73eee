#include "fuchsia/flute.hpp"

#include <cmath>
#include <string>

#include "fuchsia/error.hpp"
#include "fuchsia/tolerance.hpp"

namespace fuchsia {

SequenceSpec::SequenceSpec(std::vector<double> prefix, Tail tail)
    : prefix_(std::move(prefix)), tail_(std::move(tail)) {
  for (std::size_t i = 0; i < prefix_.size(); ++i) {
    if (!(prefix_[i] > 0.0) || !std::isfinite(prefix_[i])) {
      raise(ErrorCode::InvalidArgument,
            "sequence prefix entry " + std::to_string(i) +
                " must be a positive real, got " + std::to_string(prefix_[i]));
    }
  }
  if (const auto* t = std::get_if<ConstantTail>(&tail_)) {
    if (!(t->value > 0.0)) {
      raise(ErrorCode::InvalidArgument, "constant tail value must be positive");
    }
  } else if (const auto* g = std::get_if<GeometricTail>(&tail_)) {
    if (!(g->first > 0.0) || !(g->ratio > 0.0)) {
      raise(ErrorCode::InvalidArgument,
            "geometric tail needs positive first term and ratio");
    }
  } else if (const auto* h = std::get_if<HarmonicTail>(&tail_)) {
    if (!(h->scale > 0.0)) {
      raise(ErrorCode::InvalidArgument, "harmonic tail scale must be positive");
    }
  }
}

double SequenceSpec::term(std::size_t i) const {
  if (i < prefix_.size()) return prefix_[i];
  const std::size_t k = i - prefix_.size();
  if (const auto* t = std::get_if<ConstantTail>(&tail_)) return t->value;
  if (const auto* g = std::get_if<GeometricTail>(&tail_)) {
    return g->first * std::pow(g->ratio, static_cast<double>(k));
  }
  if (const auto* h = std::get_if<HarmonicTail>(&tail_)) {
    return h->scale / static_cast<double>(k + 1);
  }
  raise(ErrorCode::InsufficientData,
        "term " + std::to_string(i) + " requested, but the sequence has only " +
            std::to_string(prefix_.size()) + " explicit entries and no term law");
}

std::optional<bool> SequenceSpec::series_diverges() const {
  if (std::holds_alternative<ConstantTail>(tail_)) return true;
  if (std::holds_alternative<HarmonicTail>(tail_)) return true;
  if (const auto* g = std::get_if<GeometricTail>(&tail_)) return g->ratio >= 1.0;
  if (const auto* c = std::get_if<CustomTail>(&tail_)) return c->divergent;
  return std::nullopt;  // no tail law: a finite prefix decides nothing
}

std::optional<double> SequenceSpec::series_limit() const {
  const auto* g = std::get_if<GeometricTail>(&tail_);
  if (g == nullptr || g->ratio >= 1.0) return std::nullopt;
  double sum = 0.0;
  for (double x : prefix_) sum += x;
  return sum + g->first / (1.0 - g->ratio);
}

std::vector<double> partial_sums(const SequenceSpec& spec, std::size_t n_terms) {
  if (n_terms < 1) {
    raise(ErrorCode::InvalidArgument, "partial_sums requires n_terms >= 1");
  }
  std::vector<double> s;
  s.reserve(n_terms);
  double acc = 0.0;
  for (std::size_t i = 0; i < n_terms; ++i) {
    const double next = acc + spec.term(i);
    if (!(next > acc)) {
      // A fast-converging tail eventually adds less than one ulp of the
      // running sum; the truncation is not representable past this point.
      raise(ErrorCode::InsufficientData,
            "partial_sums: term " + std::to_string(i) +
                " is below the resolution of the accumulated sum " +
                std::to_string(acc) + "; request fewer terms");
    }
    acc = next;
    s.push_back(acc);
  }
  return s;
}

namespace {

void check_index(std::size_t n, std::span<const double> s, std::size_t min_index,
                 const char* op) {
  if (n < min_index || n >= s.size()) {
    raise(ErrorCode::IndexOutOfRange,
          std::string(op) + ": index " + std::to_string(n) +
              " outside [" + std::to_string(min_index) + ", " +
              std::to_string(s.size()) + ")");
  }
}

void check_sums(std::span<const double> s, const char* op) {
  double prev = 0.0;
  for (double v : s) {
    if (!(v > prev)) {
      raise(ErrorCode::InvalidArgument,
            std::string(op) + ": partial sums must be strictly increasing and positive");
    }
    prev = v;
  }
}

}  // namespace

MoebiusMap flute_generator(std::size_t n, std::span<const double> s) {
  check_index(n, s, 0, "flute_generator");
  check_sums(s, "flute_generator");
  const double sp = n == 0 ? 0.0 : s[n - 1];
  const double sn = s[n];
  const double xn = sn - sp;
  return MoebiusMap::from_det_one((sn + sp) / xn, -2.0 * sp * sn / xn,
                                  -2.0 / xn, (sn + sp) / xn);
}

double length_param(std::size_t n, std::span<const double> s) {
  check_index(n, s, 1, "length_param");
  check_sums(s, "length_param");
  const double rp = std::sqrt(s[n - 1]);
  const double rn = std::sqrt(s[n]);
  const double xn = s[n] - s[n - 1];
  // Equals log((s_{n-1}+s_n+2 sqrt(s_{n-1} s_n))/(s_{n-1}+s_n-2 sqrt(s_{n-1} s_n)));
  // the denominator is (sqrt(s_n)-sqrt(s_{n-1}))^2 = x_n^2/(rp+rn)^2, so this
  // form never subtracts nearly equal quantities.
  return 2.0 * std::log((rp + rn) * (rp + rn) / xn);
}

double basmajian_term(std::size_t n, std::span<const double> s) {
  return std::exp(-0.5 * length_param(n, s));
}

FluteGroup build_flute(const SequenceSpec& spec, std::size_t n_generators) {
  if (n_generators < 1) {
    raise(ErrorCode::InvalidArgument, "build_flute requires n_generators >= 1");
  }
  FluteGroup group;
  group.s = partial_sums(spec, n_generators);
  group.generators.reserve(n_generators);
  group.sides.reserve(n_generators);
  for (std::size_t n = 0; n < n_generators; ++n) {
    group.generators.push_back(flute_generator(n, group.s));
    const double sp = n == 0 ? 0.0 : group.s[n - 1];
    const double sn = group.s[n];
    const HalfCircle plus{0.5 * (sp + sn), 0.5 * (sn - sp)};
    const HalfCircle minus{-0.5 * (sp + sn), 0.5 * (sn - sp)};
    group.sides.emplace_back(Geodesic(plus), Geodesic(minus));
  }
  return group;
}

TypeVerdict classify_type(const SequenceSpec& spec) {
  const std::optional<bool> diverges = spec.series_diverges();
  if (!diverges.has_value()) return TypeVerdict{FluteType::Unknown, std::nullopt};
  if (*diverges) return TypeVerdict{FluteType::FirstKindParabolic, std::nullopt};
  return TypeVerdict{FluteType::SecondKindNonParabolic, spec.series_limit()};
}

std::optional<Geodesic> convex_core_boundary(const SequenceSpec& spec) {
  const TypeVerdict verdict = classify_type(spec);
  if (verdict.type == FluteType::Unknown) {
    raise(ErrorCode::UnknownType,
          "convex_core_boundary: series divergence is undecided for this spec");
  }
  if (verdict.type == FluteType::FirstKindParabolic) return std::nullopt;
  if (!verdict.limit.has_value()) {
    raise(ErrorCode::InsufficientData,
          "convex_core_boundary: convergent tail with no closed-form limit");
  }
  return Geodesic(HalfCircle{0.0, *verdict.limit});
}

Region flute_polygon(const FluteGroup& group) {
  Region region;
  region.constraints.reserve(2 * group.sides.size());
  for (const auto& [plus, minus] : group.sides) {
    region.constraints.push_back({plus, Side::Exterior});
    region.constraints.push_back({minus, Side::Exterior});
  }
  return region;
}

Region flute_polygon(const FluteGroup& group, const Geodesic& core_boundary) {
  Region region = flute_polygon(group);
  region.constraints.push_back({core_boundary, Side::Interior});
  return region;
}

bool is_integral(const FluteGroup& group) {
  const double tol = comparison_tolerance();
  for (const MoebiusMap& g : group.generators) {
    for (double e : g.entries()) {
      if (std::abs(e - std::round(e)) > tol) return false;
    }
  }
  return true;
}

}  // namespace fuchsia
