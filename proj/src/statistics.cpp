#include "thoth/statistics.hpp"

#include "thoth/chars.hpp"
#include "thoth/kernels.hpp"
#include "thoth/utf8.hpp"

namespace thoth {

namespace {

bool ends_with(std::string_view s, std::string_view suffix) {
  return s.size() > suffix.size() && s.substr(s.size() - suffix.size()) == suffix;
}

bool contains_letter(std::string_view s) {
  for (std::size_t pos = 0; pos < s.size();) {
    const auto d = utf8::decode(s, pos);
    if (chars::is_letter(d.cp)) return true;
    pos += d.length;
  }
  return false;
}

bool contains_hyphen(std::string_view s) {
  for (std::size_t pos = 0; pos < s.size();) {
    const auto d = utf8::decode(s, pos);
    if (chars::is_hyphen(d.cp)) return true;
    pos += d.length;
  }
  return false;
}

}  // namespace

bool is_complex_word(const TokenizedDocument& doc, std::size_t token_index,
                     const SyllableExceptions& exceptions) {
  const Token& t = doc.token(token_index);
  if (t.kind != TokenKind::Word || contains_hyphen(t.text)) return false;
  if (chars::is_upper(utf8::decode(t.text, 0).cp) && !doc.starts_sentence(token_index)) {
    return false;
  }
  std::string stem = chars::to_lower(t.text);
  for (std::string_view suffix : {"ing", "ed", "es"}) {
    if (ends_with(stem, suffix)) {
      stem.resize(stem.size() - suffix.size());
      break;
    }
  }
  const int syllables = contains_letter(stem) ? count_syllables(stem, exceptions)
                                              : count_syllables(t.text, exceptions);
  return syllables >= 3;
}

TextStatistics compute_statistics(const TokenizedDocument& doc,
                                  const FamiliarityLexicon& lexicon,
                                  const SyllableExceptions& exceptions) {
  TextStatistics s;
  s.sentence_count = doc.sentence_count();
  s.word_count = doc.word_count();
  for (const Token& t : doc.tokens()) {
    if (t.kind == TokenKind::Whitespace) continue;
    s.char_count += utf8::length(t.text);
    if (t.kind != TokenKind::Word) continue;
    for (std::size_t pos = 0; pos < t.text.size();) {
      const auto d = utf8::decode(t.text, pos);
      s.letter_count += chars::is_letter(d.cp) ? 1 : 0;
      pos += d.length;
    }
  }

  s.per_word_syllables = kernels::omp::word_syllables(doc, exceptions);
  const auto flags = kernels::omp::unfamiliar_flags(doc, lexicon);
  const auto words = doc.word_indices();
  for (std::size_t i = 0; i < words.size(); ++i) {
    const int syl = s.per_word_syllables[i];
    s.syllable_count += static_cast<std::size_t>(syl);
    s.polysyllable_count += syl >= 3 ? 1 : 0;
    s.difficult_word_count += flags[i];
    s.complex_word_count += is_complex_word(doc, words[i], exceptions) ? 1 : 0;
  }
  return s;
}

}  // namespace thoth
