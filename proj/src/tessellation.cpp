#include "fuchsia/tessellation.hpp"

#include <algorithm>
#include <cmath>
#include <cstdint>
#include <unordered_map>

#include "fuchsia/error.hpp"
#include "fuchsia/tolerance.hpp"

namespace fuchsia {

GroupPresentation presentation_of(const FluteGroup& group) {
  GroupPresentation p;
  p.generators.reserve(group.generators.size());
  for (std::size_t n = 0; n < group.generators.size(); ++n) {
    p.generators.push_back({"g" + std::to_string(n), group.generators[n]});
  }
  p.domain = flute_polygon(group);
  for (std::size_t n = 0; n < group.sides.size(); ++n) {
    p.boundary_arcs.push_back(group.sides[n].first);
    p.boundary_arcs.push_back(group.sides[n].second);
    p.arc_labels.push_back("g" + std::to_string(n) + "+");
    p.arc_labels.push_back("g" + std::to_string(n) + "-");
  }
  return p;
}

GroupPresentation presentation_of(const MonsterGroup& group) {
  GroupPresentation p;
  p.generators.reserve(2 * group.pairs.size());
  for (std::size_t i = 0; i < group.pairs.size(); ++i) {
    const long n = group.first_index + static_cast<long>(i);
    p.generators.push_back({"f" + std::to_string(n), group.pairs[i].f});
    p.generators.push_back({"g" + std::to_string(n), group.pairs[i].g});
    p.boundary_arcs.push_back(group.pairs[i].sigma);
    p.boundary_arcs.push_back(group.pairs[i].sigma_image);
    p.boundary_arcs.push_back(group.pairs[i].rho);
    p.boundary_arcs.push_back(group.pairs[i].rho_image);
    const std::string suffix = std::to_string(n);
    p.arc_labels.push_back("s" + suffix);
    p.arc_labels.push_back("s~" + suffix);
    p.arc_labels.push_back("r" + suffix);
    p.arc_labels.push_back("r~" + suffix);
  }
  p.domain = group.region;
  return p;
}

std::string letter_label(const GroupPresentation& g, const Letter& letter) {
  const std::string& base = g.generators[letter.index].label;
  return letter.inverse ? base + "^-1" : base;
}

namespace {

// Spatial hash over quantized matrix entries; probing the 3^4 neighbor
// cells finds every map within one bucket of tolerance.
struct MapIndex {
  explicit MapIndex(double tolerance) : bucket_(tolerance) {}

  std::int64_t quantize(double v) const {
    const double q = std::floor(v / bucket_);
    if (q >= 9.0e18) return INT64_MAX / 2;
    if (q <= -9.0e18) return INT64_MIN / 2;
    return static_cast<std::int64_t>(q);
  }

  static std::uint64_t key_hash(const std::array<std::int64_t, 4>& k) {
    std::uint64_t h = 1469598103934665603ull;
    for (std::int64_t v : k) {
      h ^= static_cast<std::uint64_t>(v);
      h *= 1099511628211ull;
    }
    return h;
  }

  bool contains(const MoebiusMap& m, const std::vector<OrbitTile>& tiles) const {
    std::array<std::int64_t, 4> base{};
    for (int i = 0; i < 4; ++i) base[i] = quantize(m.entries()[i]);
    std::array<std::int64_t, 4> probe{};
    for (int d0 = -1; d0 <= 1; ++d0)
      for (int d1 = -1; d1 <= 1; ++d1)
        for (int d2 = -1; d2 <= 1; ++d2)
          for (int d3 = -1; d3 <= 1; ++d3) {
            probe = {base[0] + d0, base[1] + d1, base[2] + d2, base[3] + d3};
            const auto it = cells_.find(key_hash(probe));
            if (it == cells_.end()) continue;
            for (std::size_t tile : it->second) {
              if (approx_equal(m, tiles[tile].map, bucket_)) return true;
            }
          }
    return false;
  }

  void insert(const MoebiusMap& m, std::size_t tile) {
    std::array<std::int64_t, 4> base{};
    for (int i = 0; i < 4; ++i) base[i] = quantize(m.entries()[i]);
    cells_[key_hash(base)].push_back(tile);
  }

 private:
  double bucket_;
  std::unordered_map<std::uint64_t, std::vector<std::size_t>> cells_;
};

std::vector<Geodesic> arc_images(const MoebiusMap& m,
                                 const std::vector<Geodesic>& arcs) {
  std::vector<Geodesic> out;
  out.reserve(arcs.size());
  for (const Geodesic& arc : arcs) out.push_back(image_of_geodesic(m, arc));
  return out;
}

}  // namespace

Orbit enumerate_orbit(const GroupPresentation& g, std::size_t max_word_length,
                      const OrbitOptions& options) {
  if (g.generators.empty()) {
    raise(ErrorCode::InvalidArgument, "enumerate_orbit: no generators");
  }
  Orbit orbit;
  MapIndex index(comparison_tolerance());

  orbit.tiles.push_back({{}, MoebiusMap(), g.boundary_arcs});
  index.insert(orbit.tiles[0].map, 0);

  std::size_t frontier_begin = 0;
  for (std::size_t length = 1; length <= max_word_length; ++length) {
    const std::size_t frontier_end = orbit.tiles.size();
    for (std::size_t t = frontier_begin; t < frontier_end; ++t) {
      for (std::uint32_t gen = 0; gen < g.generators.size(); ++gen) {
        for (const bool inv : {false, true}) {
          const Letter letter{gen, inv};
          const std::vector<Letter>& word = orbit.tiles[t].word;
          if (!word.empty() && word.back().index == gen &&
              word.back().inverse != inv) {
            continue;  // not freely reduced
          }
          const MoebiusMap& base = g.generators[gen].map;
          const MoebiusMap map =
              compose(orbit.tiles[t].map, inv ? inverse(base) : base);
          if (index.contains(map, orbit.tiles)) {
            ++orbit.duplicate_words;
            continue;
          }
          if (orbit.tiles.size() >= options.tile_cap) {
            raise(ErrorCode::BudgetExceeded,
                  "enumerate_orbit: tile cap of " + std::to_string(options.tile_cap) +
                      " exceeded at word length " + std::to_string(length));
          }
          OrbitTile tile;
          tile.word = word;
          tile.word.push_back(letter);
          tile.map = map;
          tile.arcs = arc_images(map, g.boundary_arcs);
          index.insert(map, orbit.tiles.size());
          orbit.tiles.push_back(std::move(tile));
        }
      }
    }
    frontier_begin = frontier_end;
  }
  return orbit;
}

std::vector<BoundaryPoint> limit_set_sample(const GroupPresentation& g,
                                            std::size_t max_word_length,
                                            const OrbitOptions& options) {
  if (max_word_length < 1) {
    raise(ErrorCode::InvalidArgument, "limit_set_sample: depth must be >= 1");
  }
  const Orbit orbit = enumerate_orbit(g, max_word_length, options);
  std::vector<double> finite;
  bool has_infinity = false;
  for (const OrbitTile& tile : orbit.tiles) {
    if (tile.word.empty()) continue;
    if (classify(tile.map) == MapClass::Identity) continue;  // relation word
    const FixedPointSet fps = fixed_points(tile.map);
    for (const BoundaryPoint& p : fps.boundary) {
      if (p.is_infinity()) {
        has_infinity = true;
      } else {
        finite.push_back(p.value());
      }
    }
  }
  std::sort(finite.begin(), finite.end());
  const double tol = comparison_tolerance();
  std::vector<BoundaryPoint> out;
  for (double v : finite) {
    if (out.empty() || v - out.back().value() > tol) {
      out.push_back(BoundaryPoint(v));
    }
  }
  if (has_infinity) out.push_back(BoundaryPoint::infinity());
  return out;
}

}  // namespace fuchsia
