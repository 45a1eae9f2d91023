#pragma once

#include <cstddef>
#include <cstdint>
#include <optional>
#include <span>
#include <string>
#include <string_view>
#include <vector>

#include "thoth/text_ingest.hpp"

namespace thoth {

struct Rgb {
  std::uint8_t r = 0;
  std::uint8_t g = 0;
  std::uint8_t b = 0;

  friend bool operator==(const Rgb&, const Rgb&) = default;
};

/// "#rrggbb", lowercase.
std::string to_hex(Rgb c);
std::optional<Rgb> parse_hex(std::string_view text);

inline constexpr int kMinLineWidth = 20;
inline constexpr int kMaxLineWidth = 120;

struct GradientConfig {
  int line_width_cpl = 55;
  Rgb color_a{0x00, 0x42, 0x9d};
  Rgb color_b{0xd1, 0x49, 0x5b};
  bool serpentine = true;

  /// Throws Error(Validation) when the width is outside [20, 120].
  void validate() const;
};

/// Words [first, last) of the document's word sequence.
struct LineRange {
  std::size_t first = 0;
  std::size_t last = 0;

  std::size_t size() const { return last - first; }
  friend bool operator==(const LineRange&, const LineRange&) = default;
};

/// Greedy wrap over word lengths in characters: a word joins the current
/// line when line length + 1 + word length <= width, otherwise it opens a
/// new line. An overlong word sits alone on its line.
std::vector<LineRange> wrap_lengths(std::span<const std::size_t> word_lengths,
                                    std::size_t width);

std::vector<LineRange> wrap_lines(const TokenizedDocument& doc, std::size_t width);

/// One color per word. Within a line of n words, word k is interpolated at
/// t = k/(n-1) (t = 0 when n = 1), rounding each channel half-up. Without
/// serpentine every line runs A->B. With serpentine each line starts at the
/// color the previous line ended on and runs to the other endpoint, so lines
/// alternate A->B, B->A; a one-word line does not flip the direction.
std::vector<Rgb> assign_colors(std::span<const LineRange> lines, const GradientConfig& config);

Rgb interpolate(Rgb from, Rgb to, double t);

}  // namespace thoth
