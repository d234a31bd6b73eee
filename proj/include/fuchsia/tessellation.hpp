#pragma once

#include <cstddef>
#include <cstdint>
#include <string>
#include <vector>

#include "fuchsia/flute.hpp"
#include "fuchsia/geodesics.hpp"
#include "fuchsia/moebius.hpp"
#include "fuchsia/monster.hpp"

namespace fuchsia {

struct LabeledGenerator {
  std::string label;
  MoebiusMap map;
};

/// Group data sufficient for tiling: labeled generators, the open
/// fundamental region, and the boundary arcs to draw. arc_labels, when
/// nonempty, parallels boundary_arcs.
struct GroupPresentation {
  std::vector<LabeledGenerator> generators;
  Region domain;
  std::vector<Geodesic> boundary_arcs;
  std::vector<std::string> arc_labels;
};

GroupPresentation presentation_of(const FluteGroup& group);
GroupPresentation presentation_of(const MonsterGroup& group);

/// One letter of a group word: generator index, possibly inverted.
struct Letter {
  std::uint32_t index = 0;
  bool inverse = false;

  friend bool operator==(const Letter&, const Letter&) = default;
};

std::string letter_label(const GroupPresentation& g, const Letter& letter);

/// A fundamental-domain translate: the freely reduced word, its map (the
/// left-to-right product of the letters' maps) and the images of the
/// domain's boundary arcs.
struct OrbitTile {
  std::vector<Letter> word;
  MoebiusMap map;
  std::vector<Geodesic> arcs;
};

struct OrbitOptions {
  std::size_t tile_cap = 100000;
};

struct Orbit {
  std::vector<OrbitTile> tiles;
  /// Words whose maps collided with an earlier tile (unexpected relations);
  /// reported rather than treated as an error.
  std::size_t duplicate_words = 0;
};

/// Breadth-first enumeration of freely reduced words up to max_word_length,
/// identity first, children in generator order (straight letter before
/// inverse). Tiles with maps within tolerance of an earlier tile are
/// dropped and counted. Raises BudgetExceeded past options.tile_cap.
Orbit enumerate_orbit(const GroupPresentation& g, std::size_t max_word_length,
                      const OrbitOptions& options = {});

/// Boundary fixed points of the non-identity orbit words, deduplicated
/// within tolerance and sorted ascending (infinity last).
std::vector<BoundaryPoint> limit_set_sample(const GroupPresentation& g,
                                            std::size_t max_word_length,
                                            const OrbitOptions& options = {});

}  // namespace fuchsia
