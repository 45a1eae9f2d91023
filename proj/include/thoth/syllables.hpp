#pragma once

#include <cstddef>
#include <filesystem>
#include <map>
#include <optional>
#include <string>
#include <string_view>

namespace thoth {

/// Word -> syllable count overrides, consulted before the heuristic.
/// File format: UTF-8, one `word<TAB>count` per line, `#` comments.
class SyllableExceptions {
 public:
  SyllableExceptions() = default;

  static SyllableExceptions parse(std::string_view content);
  static SyllableExceptions load(const std::filesystem::path& path);

  std::optional<int> find(std::string_view lowercase_word) const;
  std::size_t size() const { return table_.size(); }

 private:
  std::map<std::string, int, std::less<>> table_;
};

/// Syllables in a word that contains at least one letter.
///
/// Counts vowel groups (a e i o u, plus y when not word-initial), drops a
/// silent final e after a consonant unless it forms a consonant+"le" ending,
/// and floors at 1. Hyphenated words sum their parts; digit-only parts count
/// one syllable per digit. Case-insensitive. Throws Error(Argument) when the
/// word has no letters.
int count_syllables(std::string_view word,
                    const SyllableExceptions& exceptions = {});

/// Syllables for a Number token: one per digit.
int count_number_syllables(std::string_view number);

}  // namespace thoth
