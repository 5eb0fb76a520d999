#pragma once

#include <cstddef>
#include <cstdint>
#include <string>
#include <string_view>

namespace senti::utf8 {

inline constexpr char32_t kInvalid = 0xFFFFFFFF;

// Decodes the codepoint starting at byte offset `i` and advances `i` past
// it. Returns kInvalid (and advances by one byte) on malformed input.
char32_t decode(std::string_view s, std::size_t& i);

void append(std::string& out, char32_t cp);

bool valid(std::string_view s);

// Number of codepoints; malformed bytes count as one each.
std::size_t length(std::string_view s);

}  // namespace senti::utf8
