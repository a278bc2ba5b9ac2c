#pragma once

#include <cstddef>
#include <string>
#include <string_view>

namespace typeqa {

std::string ascii_lower(std::string_view s);

// Strips ASCII whitespace from both ends.
std::string trim(std::string_view s);

// Collapses every internal run of ASCII whitespace to a single space and
// strips it from the ends.
std::string collapse_whitespace(std::string_view s);

bool is_ascii_space(char c);

// Word constituents for dictionary-match boundaries: ASCII letters and digits.
bool is_ascii_word_byte(char c);

// True if pos sits on a UTF-8 code point boundary of s (pos == s.size() counts).
bool utf8_boundary(std::string_view s, std::size_t pos);

}  // namespace typeqa
