#include "thoth/text_ingest.hpp"

#include <algorithm>
#include <array>

#include "thoth/chars.hpp"
#include "thoth/utf8.hpp"

namespace thoth {

namespace {

using chars::Class;

constexpr std::array<std::string_view, 14> kAbbreviations = {
    "mr", "mrs", "ms", "dr", "prof", "sr", "jr",
    "st", "vs", "etc", "e.g", "i.e", "fig", "al"};

struct Cp {
  char32_t cp;
  Class cls;
  std::size_t offset;
  std::size_t length;
};

std::vector<Cp> decode_all(std::string_view s) {
  std::vector<Cp> out;
  out.reserve(s.size());
  for (std::size_t pos = 0; pos < s.size();) {
    const auto d = utf8::decode(s, pos);
    out.push_back({d.cp, chars::classify(d.cp), pos, d.length});
    pos += d.length;
  }
  return out;
}

bool alnum(Class c) { return c == Class::Letter || c == Class::Digit; }

// Whether cps[j] (a potential joiner) continues the word run ending at j.
bool joins(const std::vector<Cp>& cps, std::size_t j, bool run_has_letter) {
  if (j + 1 >= cps.size() || !alnum(cps[j + 1].cls)) return false;
  const Cp& prev = cps[j - 1];
  const Cp& next = cps[j + 1];
  const char32_t c = cps[j].cp;
  if (chars::is_apostrophe(c)) {
    return prev.cls == Class::Letter && next.cls == Class::Letter;
  }
  if (chars::is_hyphen(c)) {
    return run_has_letter || next.cls == Class::Letter;
  }
  if (c == U'.' || c == U',') {
    return prev.cls == Class::Digit && next.cls == Class::Digit;
  }
  return false;
}

char32_t first_cp(const Token& t) { return utf8::decode(t.text, 0).cp; }

bool is_punct(const Token& t, bool (*pred)(char32_t)) {
  return t.kind == TokenKind::Punctuation && pred(first_cp(t));
}

bool is_terminator(const Token& t) {
  return t.kind == TokenKind::Punctuation &&
         (t.text == "." || t.text == "!" || t.text == "?");
}

// Lowercased run of non-whitespace text ending just before token i, with
// leading non-alphanumerics removed ("(Dr" -> "dr", "e.g" -> "e.g").
std::string preceding_run(const std::vector<Token>& tokens, std::size_t i) {
  std::size_t k = i;
  while (k > 0 && tokens[k - 1].kind != TokenKind::Whitespace) --k;
  std::string run;
  for (std::size_t j = k; j < i; ++j) run += tokens[j].text;
  std::size_t pos = 0;
  while (pos < run.size()) {
    const auto d = utf8::decode(run, pos);
    if (alnum(chars::classify(d.cp))) break;
    pos += d.length;
  }
  return chars::to_lower(std::string_view(run).substr(pos));
}

bool ends_sentence(const std::vector<Token>& tokens, std::size_t i) {
  const std::size_t n = tokens.size();
  if (i + 1 < n && is_terminator(tokens[i + 1])) return false;
  std::size_t j = i + 1;
  while (j < n && is_punct(tokens[j], chars::is_closing_mark)) ++j;
  bool boundary = false;
  if (j >= n) {
    boundary = true;
  } else if (tokens[j].kind == TokenKind::Whitespace) {
    std::size_t k = j + 1;
    while (k < n && is_punct(tokens[k], chars::is_opening_mark)) ++k;
    if (k >= n) {
      boundary = true;
    } else {
      const char32_t c = first_cp(tokens[k]);
      boundary = chars::is_upper(c) || chars::is_digit(c);
    }
  }
  if (boundary && tokens[i].text == ".") {
    boundary = !is_abbreviation(preceding_run(tokens, i));
  }
  return boundary;
}

}  // namespace

std::string_view to_string(TokenKind kind) {
  switch (kind) {
    case TokenKind::Word: return "word";
    case TokenKind::Number: return "number";
    case TokenKind::Punctuation: return "punctuation";
    case TokenKind::Whitespace: return "whitespace";
  }
  return "?";
}

bool is_abbreviation(std::string_view w) {
  return std::find(kAbbreviations.begin(), kAbbreviations.end(), w) !=
         kAbbreviations.end();
}

bool TokenizedDocument::starts_sentence(std::size_t token_index) const {
  const Token& t = tokens_.at(token_index);
  return t.is_word_like() &&
         first_word_of_sentence_.at(t.sentence_index) == token_index;
}

TokenizedDocument tokenize(std::string_view source_text) {
  utf8::validate(source_text);
  const auto cps = decode_all(source_text);

  TokenizedDocument doc;
  doc.source_.assign(source_text);
  auto& tokens = doc.tokens_;

  auto emit = [&](TokenKind kind, std::size_t from, std::size_t to) {
    const std::size_t begin = cps[from].offset;
    const std::size_t end = cps[to - 1].offset + cps[to - 1].length;
    tokens.push_back(Token{kind, std::string(source_text.substr(begin, end - begin)),
                           Span{begin, end}, 0, false});
  };

  for (std::size_t i = 0; i < cps.size();) {
    const Class cls = cps[i].cls;
    std::size_t j = i + 1;
    if (cls == Class::Space) {
      while (j < cps.size() && cps[j].cls == Class::Space) ++j;
      emit(TokenKind::Whitespace, i, j);
    } else if (alnum(cls)) {
      bool has_letter = cls == Class::Letter;
      for (;;) {
        if (j < cps.size() && alnum(cps[j].cls)) {
          has_letter |= cps[j].cls == Class::Letter;
          ++j;
        } else if (j < cps.size() && joins(cps, j, has_letter)) {
          j += 1;
        } else {
          break;
        }
      }
      emit(has_letter ? TokenKind::Word : TokenKind::Number, i, j);
    } else {
      emit(TokenKind::Punctuation, i, j);
    }
    i = j;
  }

  // Sentence assignment. A boundary takes effect after any closing marks
  // that trail the terminator.
  std::size_t current = 0;
  std::size_t last_assigned = 0;
  constexpr std::size_t kNoBump = static_cast<std::size_t>(-1);
  std::size_t bump_after = kNoBump;
  bool any = false;
  for (std::size_t i = 0; i < tokens.size(); ++i) {
    Token& t = tokens[i];
    if (t.kind == TokenKind::Whitespace) {
      t.sentence_index = last_assigned;
      continue;
    }
    if (bump_after != kNoBump && i > bump_after) {
      ++current;
      bump_after = kNoBump;
    }
    t.sentence_index = current;
    last_assigned = current;
    any = true;
    if (is_terminator(t) && ends_sentence(tokens, i)) {
      t.sentence_final = true;
      std::size_t j = i + 1;
      while (j < tokens.size() && is_punct(tokens[j], chars::is_closing_mark)) ++j;
      bump_after = j - 1;
    }
  }
  doc.sentence_count_ = any ? last_assigned + 1 : 0;

  doc.first_word_of_sentence_.assign(doc.sentence_count_, tokens.size());
  for (std::size_t i = 0; i < tokens.size(); ++i) {
    if (!tokens[i].is_word_like()) continue;
    doc.words_.push_back(i);
    auto& first = doc.first_word_of_sentence_[tokens[i].sentence_index];
    if (first == tokens.size()) first = i;
  }
  return doc;
}

std::string normalize_word(std::string_view word) {
  const std::string lower = chars::to_lower(word);
  std::size_t begin = 0;
  std::size_t end = 0;
  bool found = false;
  for (std::size_t pos = 0; pos < lower.size();) {
    const auto d = utf8::decode(lower, pos);
    if (alnum(chars::classify(d.cp))) {
      if (!found) begin = pos;
      found = true;
      end = pos + d.length;
    }
    pos += d.length;
  }
  return found ? lower.substr(begin, end - begin) : std::string();
}

}  // namespace thoth
