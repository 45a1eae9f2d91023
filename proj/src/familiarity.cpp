#include "thoth/familiarity.hpp"

#include <fstream>
#include <sstream>

#include "thoth/chars.hpp"
#include "thoth/error.hpp"
#include "thoth/utf8.hpp"

namespace thoth {

namespace {

bool ends_with(std::string_view s, std::string_view suffix) {
  return s.size() > suffix.size() && s.substr(s.size() - suffix.size()) == suffix;
}

bool is_vowel(char c) {
  return c == 'a' || c == 'e' || c == 'i' || c == 'o' || c == 'u';
}

bool has_letter(std::string_view s) {
  for (std::size_t pos = 0; pos < s.size();) {
    const auto d = utf8::decode(s, pos);
    if (chars::is_letter(d.cp)) return true;
    pos += d.length;
  }
  return false;
}

std::vector<std::string> inflection_candidates(std::string_view w) {
  std::vector<std::string> out;
  auto strip = [&](std::size_t n) { return std::string(w.substr(0, w.size() - n)); };
  if (ends_with(w, "'s")) out.push_back(strip(2));
  if (ends_with(w, "’s")) out.push_back(strip(4));
  if (ends_with(w, "ies")) out.push_back(strip(3) + "y");
  if (ends_with(w, "es")) out.push_back(strip(2));
  if (ends_with(w, "s") && !ends_with(w, "ss")) out.push_back(strip(1));
  for (std::string_view suffix : {std::string_view("ed"), std::string_view("ing")}) {
    if (!ends_with(w, suffix)) continue;
    std::string stem = strip(suffix.size());
    out.push_back(stem);
    out.push_back(stem + "e");
    const std::size_t n = stem.size();
    if (n >= 2 && stem[n - 1] == stem[n - 2] && !is_vowel(stem[n - 1])) {
      out.push_back(stem.substr(0, n - 1));
    }
  }
  return out;
}

}  // namespace

std::string_view to_string(LexiconName name) {
  switch (name) {
    case LexiconName::DaleChall: return "dale-chall";
    case LexiconName::Spache: return "spache";
    case LexiconName::Top1000: return "top1000";
  }
  return "?";
}

std::optional<LexiconName> parse_lexicon_name(std::string_view text) {
  if (text == "dale-chall") return LexiconName::DaleChall;
  if (text == "spache") return LexiconName::Spache;
  if (text == "top1000") return LexiconName::Top1000;
  return std::nullopt;
}

FamiliarityLexicon::FamiliarityLexicon(LexiconName name, std::vector<std::string> words,
                                       bool allow_inflections)
    : name_(name), allow_inflections_(allow_inflections) {
  for (auto& w : words) {
    std::string lower = chars::to_lower(w);
    const auto b = lower.find_first_not_of(" \t\r\n");
    if (b == std::string::npos) continue;
    lower = lower.substr(b, lower.find_last_not_of(" \t\r\n") - b + 1);
    words_.insert(std::move(lower));
  }
}

FamiliarityLexicon FamiliarityLexicon::load(LexiconName name,
                                            const std::filesystem::path& path,
                                            bool allow_inflections) {
  std::ifstream in(path, std::ios::binary);
  if (!in) throw Error(ErrorCode::Load, "lexicon not found: " + path.string());
  std::ostringstream ss;
  ss << in.rdbuf();
  const std::string content = ss.str();
  if (auto bad = utf8::first_invalid(content)) {
    throw Error(ErrorCode::Load, "lexicon " + path.string() +
                                     ": invalid UTF-8 at byte offset " + std::to_string(*bad));
  }
  std::vector<std::string> words;
  std::istringstream lines(content);
  for (std::string line; std::getline(lines, line);) {
    const auto b = line.find_first_not_of(" \t\r");
    if (b == std::string::npos || line[b] == '#') continue;
    words.push_back(line);
  }
  FamiliarityLexicon lex(name, std::move(words), allow_inflections);
  if (lex.size() == 0) throw Error(ErrorCode::Load, "lexicon is empty: " + path.string());
  return lex;
}

std::optional<std::string> FamiliarityLexicon::match(std::string_view w) const {
  if (w.empty() || !has_letter(w)) return std::nullopt;
  if (auto it = words_.find(w); it != words_.end()) return *it;
  if (!allow_inflections_) return std::nullopt;
  for (auto& candidate : inflection_candidates(w)) {
    if (candidate.empty()) continue;
    if (auto it = words_.find(candidate); it != words_.end()) return *it;
  }
  return std::nullopt;
}

FamiliarityLexicon FamiliarityLexicon::with_word(std::string word) const {
  FamiliarityLexicon copy = *this;
  copy.words_.insert(chars::to_lower(word));
  return copy;
}

bool is_unfamiliar_token(const Token& token, const FamiliarityLexicon& lexicon) {
  if (token.kind == TokenKind::Number) return true;
  return !lexicon.is_familiar(normalize_word(token.text));
}

double difficult_fraction(const TokenizedDocument& doc, const FamiliarityLexicon& lexicon) {
  if (doc.word_count() == 0) throw insufficient_text("document has no words");
  std::size_t unfamiliar = 0;
  for (std::size_t i : doc.word_indices()) {
    unfamiliar += is_unfamiliar_token(doc.token(i), lexicon) ? 1 : 0;
  }
  return static_cast<double>(unfamiliar) / static_cast<double>(doc.word_count());
}

}  // namespace thoth
