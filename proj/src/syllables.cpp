#include "thoth/syllables.hpp"

#include <charconv>
#include <fstream>
#include <sstream>
#include <vector>

#include "thoth/chars.hpp"
#include "thoth/error.hpp"
#include "thoth/utf8.hpp"

namespace thoth {

namespace {

std::string_view trim(std::string_view s) {
  const auto ws = " \t\r\n";
  const auto b = s.find_first_not_of(ws);
  if (b == std::string_view::npos) return {};
  return s.substr(b, s.find_last_not_of(ws) - b + 1);
}

// Folds Latin-1 accented vowels onto their base letter; 0 for non-letters.
char fold(char32_t cp) {
  if (cp < 0x80) return static_cast<char>(cp);
  if (cp >= 0xE0 && cp <= 0xE5) return 'a';
  if (cp >= 0xE8 && cp <= 0xEB) return 'e';
  if (cp >= 0xEC && cp <= 0xEF) return 'i';
  if ((cp >= 0xF2 && cp <= 0xF6) || cp == 0xF8) return 'o';
  if (cp >= 0xF9 && cp <= 0xFC) return 'u';
  if (cp == 0xFD || cp == 0xFF) return 'y';
  return 'x';  // any other letter behaves as a consonant
}

int vowel_groups(std::string_view lower_part) {
  std::string letters;
  for (std::size_t pos = 0; pos < lower_part.size();) {
    const auto d = utf8::decode(lower_part, pos);
    if (chars::is_letter(d.cp)) letters.push_back(fold(d.cp));
    pos += d.length;
  }
  const std::size_t n = letters.size();
  std::vector<bool> vowel(n);
  for (std::size_t i = 0; i < n; ++i) {
    const char c = letters[i];
    vowel[i] = c == 'a' || c == 'e' || c == 'i' || c == 'o' || c == 'u' ||
               (c == 'y' && i > 0);
  }
  int groups = 0;
  for (std::size_t i = 0; i < n; ++i) {
    if (vowel[i] && (i == 0 || !vowel[i - 1])) ++groups;
  }
  if (n >= 2 && letters[n - 1] == 'e' && groups > 1 && !vowel[n - 2]) {
    const bool consonant_le = n >= 3 && letters[n - 2] == 'l' && !vowel[n - 3];
    if (!consonant_le) --groups;
  }
  return groups < 1 ? 1 : groups;
}

bool has_letter(std::string_view s) {
  for (std::size_t pos = 0; pos < s.size();) {
    const auto d = utf8::decode(s, pos);
    if (chars::is_letter(d.cp)) return true;
    pos += d.length;
  }
  return false;
}

bool ends_with(std::string_view s, std::string_view suffix) {
  return s.size() >= suffix.size() && s.substr(s.size() - suffix.size()) == suffix;
}

// Table entry for w, or for w minus a plural "es" (one more syllable) or "s"
// (one more after a sibilant), so a listed word and its plural stay within
// one of each other.
std::optional<int> lookup(const SyllableExceptions& exceptions, std::string_view w) {
  if (auto hit = exceptions.find(w)) return hit;
  if (w.size() < 2 || w.back() != 's') return std::nullopt;
  if (ends_with(w, "es")) {
    if (auto hit = exceptions.find(w.substr(0, w.size() - 2))) return *hit + 1;
  }
  const std::string_view base = w.substr(0, w.size() - 1);
  auto hit = exceptions.find(base);
  if (!hit) return std::nullopt;
  for (std::string_view sib : {"s", "x", "z", "ch", "sh", "ce", "ge", "se", "ze"}) {
    if (ends_with(base, sib)) return *hit + 1;
  }
  return hit;
}

}  // namespace

SyllableExceptions SyllableExceptions::parse(std::string_view content) {
  utf8::validate(content);
  SyllableExceptions out;
  std::size_t line_no = 0;
  while (!content.empty()) {
    const auto nl = content.find('\n');
    std::string_view line = content.substr(0, nl);
    content = nl == std::string_view::npos ? std::string_view{} : content.substr(nl + 1);
    ++line_no;
    if (trim(line).empty() || trim(line).front() == '#') continue;
    const auto tab = line.find('\t');
    if (tab == std::string_view::npos) {
      throw Error(ErrorCode::Load, "syllable exceptions line " +
                                       std::to_string(line_no) + ": expected word<TAB>count");
    }
    const auto word = trim(line.substr(0, tab));
    const auto num = trim(line.substr(tab + 1));
    int count = 0;
    auto [ptr, ec] = std::from_chars(num.data(), num.data() + num.size(), count);
    if (ec != std::errc{} || ptr != num.data() + num.size() || count < 1 || word.empty()) {
      throw Error(ErrorCode::Load, "syllable exceptions line " +
                                       std::to_string(line_no) + ": bad entry");
    }
    out.table_[chars::to_lower(word)] = count;
  }
  return out;
}

SyllableExceptions SyllableExceptions::load(const std::filesystem::path& path) {
  std::ifstream in(path, std::ios::binary);
  if (!in) throw Error(ErrorCode::Load, "cannot open " + path.string());
  std::ostringstream ss;
  ss << in.rdbuf();
  return parse(ss.str());
}

std::optional<int> SyllableExceptions::find(std::string_view w) const {
  if (auto it = table_.find(w); it != table_.end()) return it->second;
  return std::nullopt;
}

int count_number_syllables(std::string_view number) {
  int digits = 0;
  for (char c : number) digits += (c >= '0' && c <= '9') ? 1 : 0;
  return digits;
}

int count_syllables(std::string_view word, const SyllableExceptions& exceptions) {
  if (!has_letter(word)) {
    throw Error(ErrorCode::Argument,
                "count_syllables: no letters in '" + std::string(word) + "'");
  }
  const std::string lower = chars::to_lower(word);
  if (auto hit = lookup(exceptions, lower)) return *hit;

  int total = 0;
  std::size_t part_begin = 0;
  auto flush = [&](std::size_t end) {
    const std::string_view part(lower.data() + part_begin, end - part_begin);
    if (has_letter(part)) {
      auto hit = lookup(exceptions, part);
      total += hit ? *hit : vowel_groups(part);
    } else {
      total += count_number_syllables(part);
    }
  };
  for (std::size_t pos = 0; pos < lower.size();) {
    const auto d = utf8::decode(lower, pos);
    if (chars::is_hyphen(d.cp)) {
      flush(pos);
      part_begin = pos + d.length;
    }
    pos += d.length;
  }
  flush(lower.size());
  return total < 1 ? 1 : total;
}

}  // namespace thoth
