#pragma once

#include <cstddef>
#include <optional>
#include <string>
#include <string_view>

namespace thoth::utf8 {

struct Decoded {
  char32_t cp;
  std::size_t length;  // bytes consumed
};

/// Byte offset of the first malformed sequence (overlong forms, surrogates
/// and code points above U+10FFFF are malformed), or nullopt.
std::optional<std::size_t> first_invalid(std::string_view s);

/// Throws EncodingError naming the offending byte offset.
void validate(std::string_view s);

/// Decodes the code point starting at pos. Input must be valid.
Decoded decode(std::string_view s, std::size_t pos);

std::size_t length(std::string_view s);

void append(std::string& out, char32_t cp);

}  // namespace thoth::utf8
