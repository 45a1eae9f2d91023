#include "thoth/chars.hpp"

#include "thoth/utf8.hpp"

namespace thoth::chars {

namespace {

bool in(char32_t cp, char32_t lo, char32_t hi) { return cp >= lo && cp <= hi; }

bool is_space_cp(char32_t cp) {
  return in(cp, 0x09, 0x0D) || cp == 0x20 || cp == 0x85 || cp == 0xA0 ||
         cp == 0x1680 || in(cp, 0x2000, 0x200A) || cp == 0x2028 ||
         cp == 0x2029 || cp == 0x202F || cp == 0x205F || cp == 0x3000;
}

bool is_letter_cp(char32_t cp) {
  if (cp < 0x80) return in(cp, 'a', 'z') || in(cp, 'A', 'Z');
  if (in(cp, 0xC0, 0x24F)) return cp != 0xD7 && cp != 0xF7;
  return in(cp, 0x250, 0x1FFF) || in(cp, 0x2C00, 0x2DFF) ||
         in(cp, 0x3040, 0xD7FF) || in(cp, 0xF900, 0xFDFF) ||
         in(cp, 0xFE70, 0xFEFF) || in(cp, 0x10000, 0x1EFFF) ||
         in(cp, 0x20000, 0x3FFFF);
}

}  // namespace

Class classify(char32_t cp) {
  if (is_space_cp(cp)) return Class::Space;
  if (is_digit(cp)) return Class::Digit;
  if (is_letter_cp(cp)) return Class::Letter;
  return Class::Other;
}

bool is_upper(char32_t cp) {
  return in(cp, 'A', 'Z') || (in(cp, 0xC0, 0xDE) && cp != 0xD7);
}

char32_t to_lower(char32_t cp) { return is_upper(cp) ? cp + 0x20 : cp; }

std::string to_lower(std::string_view s) {
  std::string out;
  out.reserve(s.size());
  for (std::size_t pos = 0; pos < s.size();) {
    const auto d = utf8::decode(s, pos);
    utf8::append(out, to_lower(d.cp));
    pos += d.length;
  }
  return out;
}

bool is_apostrophe(char32_t cp) { return cp == U'\'' || cp == 0x2019; }

bool is_hyphen(char32_t cp) { return cp == U'-' || cp == 0x2010; }

bool is_closing_mark(char32_t cp) {
  switch (cp) {
    case U'"': case U'\'': case U')': case U']': case U'}':
    case 0x201D: case 0x2019: case 0xBB:
      return true;
    default:
      return false;
  }
}

bool is_opening_mark(char32_t cp) {
  switch (cp) {
    case U'"': case U'\'': case U'(': case U'[':
    case 0x201C: case 0x2018: case 0xAB:
      return true;
    default:
      return false;
  }
}

}  // namespace thoth::chars
