#pragma once

#include <cstddef>
#include <span>
#include <string>
#include <string_view>
#include <vector>

namespace thoth {

enum class TokenKind { Word, Number, Punctuation, Whitespace };

std::string_view to_string(TokenKind kind);

/// Half-open byte range into the source text.
struct Span {
  std::size_t begin = 0;
  std::size_t end = 0;

  std::size_t size() const { return end - begin; }
  friend bool operator==(const Span&, const Span&) = default;
};

struct Token {
  TokenKind kind = TokenKind::Whitespace;
  std::string text;
  Span span;
  // Whitespace tokens carry the index of the preceding non-whitespace token.
  std::size_t sentence_index = 0;
  bool sentence_final = false;

  bool is_word_like() const {
    return kind == TokenKind::Word || kind == TokenKind::Number;
  }
};

/// Lossless token stream over a UTF-8 source. Concatenating token texts in
/// order yields the source exactly.
class TokenizedDocument {
 public:
  TokenizedDocument() = default;

  const std::string& source_text() const { return source_; }
  std::span<const Token> tokens() const { return tokens_; }
  const Token& token(std::size_t i) const { return tokens_.at(i); }
  std::size_t sentence_count() const { return sentence_count_; }

  /// Token indices of Word and Number tokens, in order.
  std::span<const std::size_t> word_indices() const { return words_; }
  std::size_t word_count() const { return words_.size(); }

  /// True when the word-like token at index i is the first word-like token
  /// of its sentence.
  bool starts_sentence(std::size_t token_index) const;

 private:
  friend TokenizedDocument tokenize(std::string_view source_text);

  std::string source_;
  std::vector<Token> tokens_;
  std::vector<std::size_t> words_;
  std::vector<std::size_t> first_word_of_sentence_;
  std::size_t sentence_count_ = 0;
};

/// Splits UTF-8 text into Word, Number, Punctuation and Whitespace tokens and
/// assigns sentence indices.
///
/// A '.', '!' or '?' ends a sentence when, after any closing quotes or
/// brackets, it is followed by end-of-text or by whitespace and an uppercase
/// letter or digit (opening quotes/brackets may intervene). A '.' after a
/// known abbreviation (dr, mr, e.g, et al, ...) never ends a sentence, and in
/// a cluster like "?!" only the last mark is sentence-final.
///
/// Throws EncodingError on malformed UTF-8.
TokenizedDocument tokenize(std::string_view source_text);

/// Lowercases and strips leading/trailing non-alphanumerics. Internal
/// apostrophes and hyphens survive. Idempotent; may return "".
std::string normalize_word(std::string_view word);

/// Abbreviations whose trailing period does not end a sentence.
bool is_abbreviation(std::string_view lowercase_word);

}  // namespace thoth
