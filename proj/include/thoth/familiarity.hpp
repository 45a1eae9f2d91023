#pragma once

#include <cstddef>
#include <filesystem>
#include <optional>
#include <set>
#include <string>
#include <string_view>
#include <vector>

#include "thoth/text_ingest.hpp"

namespace thoth {

enum class LexiconName { DaleChall, Spache, Top1000 };

/// "dale-chall", "spache", "top1000".
std::string_view to_string(LexiconName name);
std::optional<LexiconName> parse_lexicon_name(std::string_view text);

/// A set of familiar words. Entries are lowercase and trimmed.
class FamiliarityLexicon {
 public:
  FamiliarityLexicon(LexiconName name, std::vector<std::string> words,
                     bool allow_inflections = true);

  /// Reads one word per line; blank lines and `#` comments are skipped and
  /// duplicates collapse case-insensitively. Throws Error(Load) for a missing
  /// file, malformed UTF-8 or a list with no words.
  static FamiliarityLexicon load(LexiconName name, const std::filesystem::path& path,
                                 bool allow_inflections = true);

  LexiconName name() const { return name_; }
  bool allow_inflections() const { return allow_inflections_; }
  std::size_t size() const { return words_.size(); }
  bool contains(std::string_view word) const { return words_.contains(word); }
  const std::set<std::string, std::less<>>& words() const { return words_; }

  /// The list entry a normalized word matches, either exactly or (when
  /// inflections are allowed) after removing one regular suffix: 's, -ies
  /// (-> y), -es, -s, -ed, -ing. For -ed/-ing the bare stem is tried, then
  /// stem+e ("hoping" -> hope), then the undoubled stem ("running" -> run).
  /// Numbers never match.
  std::optional<std::string> match(std::string_view normalized_word) const;

  bool is_familiar(std::string_view normalized_word) const {
    return match(normalized_word).has_value();
  }

  FamiliarityLexicon with_word(std::string word) const;

 private:
  LexiconName name_;
  std::set<std::string, std::less<>> words_;
  bool allow_inflections_;
};

/// Whether the Word/Number token text is unfamiliar (normalizes first).
bool is_unfamiliar_token(const Token& token, const FamiliarityLexicon& lexicon);

/// Fraction of Word/Number tokens whose normalized form is unfamiliar.
/// Throws insufficient-text when the document has no words.
double difficult_fraction(const TokenizedDocument& doc, const FamiliarityLexicon& lexicon);

}  // namespace thoth
