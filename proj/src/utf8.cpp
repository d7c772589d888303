#include "hangulphabet/utf8.h"

#include <cstdio>

#include "hangulphabet/error.h"

namespace hangulphabet {

namespace {

[[noreturn]] void bad(std::size_t offset) {
  throw InputError(Errc::InvalidUtf8,
                   "invalid UTF-8 at byte offset " + std::to_string(offset));
}

bool continuation(unsigned char b) { return (b & 0xC0) == 0x80; }

}  // namespace

std::u32string utf8_decode(std::string_view text) {
  std::u32string out;
  out.reserve(text.size());
  std::size_t i = 0;
  while (i < text.size()) {
    const unsigned char b0 = static_cast<unsigned char>(text[i]);
    if (b0 < 0x80) {
      out.push_back(b0);
      i += 1;
    } else if ((b0 & 0xE0) == 0xC0) {
      if (i + 1 >= text.size() || !continuation(text[i + 1])) bad(i);
      char32_t cp = ((b0 & 0x1Fu) << 6) | (text[i + 1] & 0x3Fu);
      if (cp < 0x80) bad(i);  // overlong
      out.push_back(cp);
      i += 2;
    } else if ((b0 & 0xF0) == 0xE0) {
      if (i + 2 >= text.size() || !continuation(text[i + 1]) ||
          !continuation(text[i + 2])) {
        bad(i);
      }
      char32_t cp = ((b0 & 0x0Fu) << 12) | ((text[i + 1] & 0x3Fu) << 6) |
                    (text[i + 2] & 0x3Fu);
      if (cp < 0x800 || (cp >= 0xD800 && cp <= 0xDFFF)) bad(i);
      out.push_back(cp);
      i += 3;
    } else if ((b0 & 0xF8) == 0xF0) {
      if (i + 3 >= text.size() || !continuation(text[i + 1]) ||
          !continuation(text[i + 2]) || !continuation(text[i + 3])) {
        bad(i);
      }
      char32_t cp = ((b0 & 0x07u) << 18) | ((text[i + 1] & 0x3Fu) << 12) |
                    ((text[i + 2] & 0x3Fu) << 6) | (text[i + 3] & 0x3Fu);
      if (cp < 0x10000 || cp > 0x10FFFF) bad(i);
      out.push_back(cp);
      i += 4;
    } else {
      bad(i);
    }
  }
  return out;
}

std::string utf8_encode(char32_t scalar) {
  std::string out;
  if (scalar < 0x80) {
    out.push_back(static_cast<char>(scalar));
  } else if (scalar < 0x800) {
    out.push_back(static_cast<char>(0xC0 | (scalar >> 6)));
    out.push_back(static_cast<char>(0x80 | (scalar & 0x3F)));
  } else if (scalar < 0x10000) {
    out.push_back(static_cast<char>(0xE0 | (scalar >> 12)));
    out.push_back(static_cast<char>(0x80 | ((scalar >> 6) & 0x3F)));
    out.push_back(static_cast<char>(0x80 | (scalar & 0x3F)));
  } else {
    out.push_back(static_cast<char>(0xF0 | (scalar >> 18)));
    out.push_back(static_cast<char>(0x80 | ((scalar >> 12) & 0x3F)));
    out.push_back(static_cast<char>(0x80 | ((scalar >> 6) & 0x3F)));
    out.push_back(static_cast<char>(0x80 | (scalar & 0x3F)));
  }
  return out;
}

std::string utf8_encode(std::u32string_view text) {
  std::string out;
  out.reserve(text.size());
  for (char32_t cp : text) out += utf8_encode(cp);
  return out;
}

std::string scalar_name(char32_t scalar) {
  char buf[16];
  std::snprintf(buf, sizeof buf, "U+%04X", static_cast<unsigned>(scalar));
  return buf;
}

}  // namespace hangulphabet
