#pragma once

#include <cstddef>
#include <string>

#include "fuchsia/flute.hpp"
#include "fuchsia/monster.hpp"
#include "fuchsia/tessellation.hpp"

namespace fuchsia {

enum class SpecKind { Flute, Monster };

/// Flute input: {"prefix":[...], "tail":{"kind":...}, "n_generators":N}.
/// n_generators is optional (default 8).
struct FluteInput {
  SequenceSpec spec;
  std::size_t n_generators = 8;
};

/// Distinguishes the two spec schemas ("prefix" vs "windows" key).
/// Raises ParseError for anything else.
SpecKind detect_spec_kind(const std::string& json_text);

FluteInput parse_flute_spec(const std::string& json_text);

/// Monster input: {"windows":[[a,b,c,d,e],...], "first_index":n,
/// "flags":{"gapless":bool,"left_unbounded":bool,"right_unbounded":bool}}.
/// first_index and each flag are optional.
MonsterSpec parse_monster_spec(const std::string& json_text);

/// Reports are deterministic JSON with numbers at 12 significant digits.
std::string flute_report(const SequenceSpec& spec, std::size_t n_generators);
std::string monster_report(const MonsterSpec& spec);
std::string classify_report(const std::string& json_text);
std::string fn_params_report(const SequenceSpec& spec, std::size_t n_generators);
std::string tessellation_report(const GroupPresentation& g, SpecKind kind,
                                std::size_t depth, std::size_t tile_cap);

/// Runs every module invariant that applies to the given spec; ok is true
/// only when all of them hold. The report lists each check with a detail
/// line for failures.
struct CheckOutcome {
  bool ok = false;
  std::string report;
};

CheckOutcome run_checks(const std::string& json_text);

}  // namespace fuchsia
