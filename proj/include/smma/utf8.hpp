#pragma once

#include <cstddef>
#include <string>
#include <string_view>
#include <vector>

namespace smma::utf8 {

inline constexpr char32_t kReplacement = 0xFFFD;

/// Decodes the codepoint starting at byte offset `pos` and advances `pos`
/// past it. Invalid sequences decode as U+FFFD and advance one byte, so a
/// scan always terminates.
char32_t decode_next(std::string_view text, std::size_t& pos);

/// All codepoints of `text`, invalid bytes mapped to U+FFFD.
std::vector<char32_t> decode(std::string_view text);

/// UTF-8 encoding of a single codepoint.
std::string encode(char32_t cp);

/// Number of codepoints in `text`.
std::size_t length(std::string_view text);

} // namespace smma::utf8
