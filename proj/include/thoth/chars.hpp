#pragma once

#include <string>
#include <string_view>

// Character classes used by the tokenizer and every count derived from it.
// Coverage is deliberately coarse outside Latin scripts: code points in the
// major alphabetic and ideographic blocks are letters, everything else that
// is not whitespace or an ASCII digit is punctuation.
namespace thoth::chars {

enum class Class { Space, Letter, Digit, Other };

Class classify(char32_t cp);

inline bool is_letter(char32_t cp) { return classify(cp) == Class::Letter; }
inline bool is_digit(char32_t cp) { return cp >= U'0' && cp <= U'9'; }
inline bool is_space(char32_t cp) { return classify(cp) == Class::Space; }

/// ASCII and Latin-1 uppercase letters.
bool is_upper(char32_t cp);

/// Lowercases ASCII and Latin-1 letters; other code points pass through.
char32_t to_lower(char32_t cp);

std::string to_lower(std::string_view utf8);

bool is_apostrophe(char32_t cp);
bool is_hyphen(char32_t cp);

/// Marks that may trail a sentence terminator and still belong to it.
bool is_closing_mark(char32_t cp);
/// Marks that may precede the first word of a sentence.
bool is_opening_mark(char32_t cp);

}  // namespace thoth::chars
