#pragma once

#include <cstddef>
#include <optional>
#include <string>
#include <string_view>
#include <vector>

#include "platjones/qarith.hpp"

namespace platjones::braid {

/// Color and orientation of one strand at one height.
struct StrandState {
  Spin color;
  bool up = true;
  bool operator==(const StrandState&) const = default;
};

/// Strand states across the braid at one horizontal level.
struct LevelSlice {
  std::vector<StrandState> strands;

  std::size_t size() const { return strands.size(); }
  const StrandState& operator[](std::size_t i) const { return strands[i]; }
  bool operator==(const LevelSlice&) const = default;

  /// Copy with positions i and i+1 (0-based) exchanged.
  LevelSlice swapped(std::size_t i) const;
};

/// A braid on an even number of strands, closed into a plat by caps on
/// strand pairs (1,2), (3,4), ... at the top and bottom. Letter g > 0 is
/// the generator crossing strands |g| and |g|+1 with strand |g| passing
/// over; g < 0 is its inverse.
struct ColoredBraidWord {
  int strands = 2;
  std::vector<int> word;
  LevelSlice bottom;

  int caps() const { return strands / 2; }
  std::size_t length() const { return word.size(); }
  bool operator==(const ColoredBraidWord&) const = default;
};

/// Builds and validates a braid. When `orient` is absent the orientations
/// are inferred by walking each component of the plat closure upward from
/// its lowest-indexed bottom strand.
ColoredBraidWord make_braid(int strands, const std::vector<int>& colors_twice,
                            const std::vector<int>& word,
                            const std::optional<std::string>& orient = std::nullopt);

/// Parses either the key=value text form or the JSON form (text starting
/// with '{'). Errors: SyntaxError, IndexError, PlatError.
ColoredBraidWord parse(std::string_view text);

/// Canonical text form; parse(render(b)) == b.
std::string render(const ColoredBraidWord& b);

/// JSON form with fields strands, colors_twice, word, orient.
std::string render_json(const ColoredBraidWord& b);

/// Strand states after the first `position` letters.
LevelSlice slice_at(const ColoredBraidWord& b, std::size_t position);

/// Mirror image: letters negated and reversed, starting from the top slice
/// with orientations reversed.
ColoredBraidWord mirror(const ColoredBraidWord& b);

/// Throws PlatError unless both ends pair equal colors with opposite
/// orientations.
void check_plat(const ColoredBraidWord& b);

/// Throws TruncationError if any color exceeds k/2.
void check_level(const ColoredBraidWord& b, const Level& level);

/// Number of link components of the plat closure.
int component_count(const ColoredBraidWord& b);

/// Insert the letters g, -g before position `at`.
ColoredBraidWord insert_cancelling_pair(const ColoredBraidWord& b, std::size_t at, int g);

std::string format_spin(Spin s);

}  // namespace platjones::braid
