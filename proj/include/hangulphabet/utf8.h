#pragma once

#include <string>
#include <string_view>

namespace hangulphabet {

// Throws InputError(InvalidUtf8) on malformed sequences.
std::u32string utf8_decode(std::string_view text);

std::string utf8_encode(std::u32string_view text);
std::string utf8_encode(char32_t scalar);

// "U+0070" style, uppercase hex, at least four digits.
std::string scalar_name(char32_t scalar);

}  // namespace hangulphabet
