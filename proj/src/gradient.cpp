#include "thoth/gradient.hpp"

#include <cmath>
#include <cstdio>

#include "thoth/error.hpp"
#include "thoth/utf8.hpp"

namespace thoth {

std::string to_hex(Rgb c) {
  char buf[8];
  std::snprintf(buf, sizeof buf, "#%02x%02x%02x", c.r, c.g, c.b);
  return buf;
}

std::optional<Rgb> parse_hex(std::string_view text) {
  if (text.size() != 7 || text[0] != '#') return std::nullopt;
  auto nibble = [](char c) -> int {
    if (c >= '0' && c <= '9') return c - '0';
    if (c >= 'a' && c <= 'f') return c - 'a' + 10;
    if (c >= 'A' && c <= 'F') return c - 'A' + 10;
    return -1;
  };
  std::uint8_t channel[3];
  for (int i = 0; i < 3; ++i) {
    const int hi = nibble(text[1 + 2 * i]);
    const int lo = nibble(text[2 + 2 * i]);
    if (hi < 0 || lo < 0) return std::nullopt;
    channel[i] = static_cast<std::uint8_t>(hi * 16 + lo);
  }
  return Rgb{channel[0], channel[1], channel[2]};
}

void GradientConfig::validate() const {
  if (line_width_cpl < kMinLineWidth || line_width_cpl > kMaxLineWidth) {
    throw Error(ErrorCode::Validation, "line width must be in [20, 120], got " +
                                           std::to_string(line_width_cpl));
  }
}

std::vector<LineRange> wrap_lengths(std::span<const std::size_t> lengths, std::size_t width) {
  std::vector<LineRange> lines;
  if (lengths.empty()) return lines;
  LineRange current{0, 1};
  std::size_t line_len = lengths[0];
  for (std::size_t i = 1; i < lengths.size(); ++i) {
    if (line_len + 1 + lengths[i] <= width) {
      line_len += 1 + lengths[i];
      current.last = i + 1;
    } else {
      lines.push_back(current);
      current = {i, i + 1};
      line_len = lengths[i];
    }
  }
  lines.push_back(current);
  return lines;
}

std::vector<LineRange> wrap_lines(const TokenizedDocument& doc, std::size_t width) {
  std::vector<std::size_t> lengths;
  lengths.reserve(doc.word_count());
  for (std::size_t i : doc.word_indices()) lengths.push_back(utf8::length(doc.token(i).text));
  return wrap_lengths(lengths, width);
}

Rgb interpolate(Rgb from, Rgb to, double t) {
  auto mix = [t](std::uint8_t a, std::uint8_t b) {
    const double v = a + (static_cast<double>(b) - a) * t;
    return static_cast<std::uint8_t>(std::floor(v + 0.5));
  };
  return {mix(from.r, to.r), mix(from.g, to.g), mix(from.b, to.b)};
}

std::vector<Rgb> assign_colors(std::span<const LineRange> lines, const GradientConfig& config) {
  std::vector<Rgb> colors;
  // A line runs from where the previous one ended towards the opposite
  // endpoint. A one-word line ends where it starts, so the next line keeps
  // the same direction rather than jumping.
  bool at_a = true;
  for (const LineRange& line : lines) {
    const bool reversed = config.serpentine && !at_a;
    const Rgb from = reversed ? config.color_b : config.color_a;
    const Rgb to = reversed ? config.color_a : config.color_b;
    const std::size_t n = line.size();
    for (std::size_t k = 0; k < n; ++k) {
      const double t = n == 1 ? 0.0 : static_cast<double>(k) / static_cast<double>(n - 1);
      colors.push_back(interpolate(from, to, t));
    }
    if (n > 1) at_a = reversed;
  }
  return colors;
}

}  // namespace thoth
