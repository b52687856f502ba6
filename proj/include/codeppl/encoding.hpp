// Copyright 2026 The codeppl Authors.
//
// Licensed under the Apache License, Version 2.0 (the "License");
// you may not use this file except in compliance with the License.
// You may obtain a copy of the License at
//
//     http://www.apache.org/licenses/LICENSE-2.0
//
// Unless required by applicable law or agreed to in writing, software
// distributed under the License is distributed on an "AS IS" BASIS,
// WITHOUT WARRANTIES OR CONDITIONS OF ANY KIND, either express or implied.
// See the License for the specific language governing permissions and
// limitations under the License.


#ifndef CODEPPL_ENCODING_HPP_
#define CODEPPL_ENCODING_HPP_

#include <cstdint>
#include <string>
#include <string_view>

namespace codeppl {

struct DecodedText {
  std::string text;  // UTF-8, never starts with a BOM
  std::string encoding;
  // Set when the bytes were not valid UTF-8 and the Latin-1 fallback ran.
  bool flagged = false;
};

namespace detail {

inline void append_utf8(std::string& out, char32_t cp) {
  if (cp < 0x80) {
    out += static_cast<char>(cp);
  } else if (cp < 0x800) {
    out += static_cast<char>(0xC0 | (cp >> 6));
    out += static_cast<char>(0x80 | (cp & 0x3F));
  } else if (cp < 0x10000) {
    out += static_cast<char>(0xE0 | (cp >> 12));
    out += static_cast<char>(0x80 | ((cp >> 6) & 0x3F));
    out += static_cast<char>(0x80 | (cp & 0x3F));
  } else {
    out += static_cast<char>(0xF0 | (cp >> 18));
    out += static_cast<char>(0x80 | ((cp >> 12) & 0x3F));
    out += static_cast<char>(0x80 | ((cp >> 6) & 0x3F));
    out += static_cast<char>(0x80 | (cp & 0x3F));
  }
}

inline std::string decode_utf16(std::string_view bytes, bool little_endian) {
  std::string out;
  auto unit = [&](std::size_t i) -> char32_t {
    auto lo = static_cast<unsigned char>(bytes[i]);
    auto hi = static_cast<unsigned char>(bytes[i + 1]);
    return little_endian ? (hi << 8 | lo) : (lo << 8 | hi);
  };
  std::size_t i = 0;
  for (; i + 1 < bytes.size(); i += 2) {
    char32_t u = unit(i);
    if (u >= 0xD800 && u <= 0xDBFF && i + 3 < bytes.size()) {
      char32_t v = unit(i + 2);
      if (v >= 0xDC00 && v <= 0xDFFF) {
        append_utf8(out, 0x10000 + ((u - 0xD800) << 10) + (v - 0xDC00));
        i += 2;
        continue;
      }
    }
    append_utf8(out, (u >= 0xD800 && u <= 0xDFFF) ? char32_t{0xFFFD} : u);
  }
  if (i < bytes.size()) append_utf8(out, 0xFFFD);
  return out;
}

}  // namespace detail

// Strict UTF-8 validation: rejects overlong forms, surrogates and code
// points above U+10FFFF.
inline bool is_valid_utf8(std::string_view s) {
  std::size_t i = 0;
  while (i < s.size()) {
    auto c = static_cast<unsigned char>(s[i]);
    if (c < 0x80) {
      ++i;
      continue;
    }
    std::size_t len;
    char32_t cp;
    if (c >= 0xC2 && c <= 0xDF) {
      len = 2;
      cp = c & 0x1F;
    } else if (c >= 0xE0 && c <= 0xEF) {
      len = 3;
      cp = c & 0x0F;
    } else if (c >= 0xF0 && c <= 0xF4) {
      len = 4;
      cp = c & 0x07;
    } else {
      return false;
    }
    if (i + len > s.size()) return false;
    for (std::size_t k = 1; k < len; ++k) {
      auto cc = static_cast<unsigned char>(s[i + k]);
      if ((cc & 0xC0) != 0x80) return false;
      cp = (cp << 6) | (cc & 0x3F);
    }
    if ((len == 3 && cp < 0x800) || (len == 4 && cp < 0x10000) || cp > 0x10FFFF ||
        (cp >= 0xD800 && cp <= 0xDFFF)) {
      return false;
    }
    i += len;
  }
  return true;
}

// BOM sniff, then strict UTF-8, then Latin-1. Total: every byte string
// decodes.
inline DecodedText detect_and_decode(std::string_view bytes) {
  if (bytes.substr(0, 3) == "\xEF\xBB\xBF") {
    std::string_view rest = bytes.substr(3);
    if (is_valid_utf8(rest)) return {std::string(rest), "utf-8-bom", false};
    bytes = rest;  // lying BOM: fall through to the Latin-1 path below
  } else if (bytes.substr(0, 2) == "\xFF\xFE") {
    return {detail::decode_utf16(bytes.substr(2), true), "utf-16-le", false};
  } else if (bytes.substr(0, 2) == "\xFE\xFF") {
    return {detail::decode_utf16(bytes.substr(2), false), "utf-16-be", false};
  } else if (is_valid_utf8(bytes)) {
    return {std::string(bytes), "utf-8", false};
  }
  DecodedText out;
  out.encoding = "latin-1";
  out.flagged = true;
  out.text.reserve(bytes.size() + bytes.size() / 4);
  for (unsigned char c : bytes) detail::append_utf8(out.text, c);
  return out;
}

}  // namespace codeppl

#endif  // CODEPPL_ENCODING_HPP_
