/*
 * Copyright 2026 Filature Contributors
 *
 * Licensed under the Apache License, Version 2.0 (the "License");
 * you may not use this file except in compliance with the License.
 * You may obtain a copy of the License at
 *
 *     http://www.apache.org/licenses/LICENSE-2.0
 *
 * Unless required by applicable law or agreed to in writing, software
 * distributed under the License is distributed on an "AS IS" BASIS,
 * WITHOUT WARRANTIES OR CONDITIONS OF ANY KIND, either express or implied.
 * See the License for the specific language governing permissions and
 * limitations under the License.
 */

#include "filature/unicode.hpp"

#include <algorithm>

namespace filature::uni {

namespace {

constexpr char32_t kReplacement = 0xFFFD;

// Decodes one code point starting at bytes[i]. Returns its byte length, or
// 0 when the sequence is invalid (overlong, truncated, surrogate, or out of
// range), in which case *cp is untouched.
std::size_t decode_one(std::string_view bytes, std::size_t i, char32_t* cp) {
  const auto b0 = static_cast<unsigned char>(bytes[i]);
  std::size_t len;
  char32_t acc;
  if (b0 < 0x80) {
    *cp = b0;
    return 1;
  } else if ((b0 & 0xE0) == 0xC0) {
    len = 2;
    acc = b0 & 0x1F;
  } else if ((b0 & 0xF0) == 0xE0) {
    len = 3;
    acc = b0 & 0x0F;
  } else if ((b0 & 0xF8) == 0xF0) {
    len = 4;
    acc = b0 & 0x07;
  } else {
    return 0;
  }
  if (i + len > bytes.size()) return 0;
  for (std::size_t k = 1; k < len; ++k) {
    const auto b = static_cast<unsigned char>(bytes[i + k]);
    if ((b & 0xC0) != 0x80) return 0;
    acc = (acc << 6) | (b & 0x3F);
  }
  constexpr char32_t kMin[5] = {0, 0, 0x80, 0x800, 0x10000};
  if (acc < kMin[len] || acc > 0x10FFFF) return 0;
  if (acc >= 0xD800 && acc <= 0xDFFF) return 0;
  *cp = acc;
  return len;
}

}  // namespace

std::u32string decode_utf8(std::string_view bytes) {
  std::u32string out;
  out.reserve(bytes.size());
  std::size_t i = 0;
  while (i < bytes.size()) {
    char32_t cp = kReplacement;
    const std::size_t len = decode_one(bytes, i, &cp);
    if (len == 0) {
      out.push_back(kReplacement);
      ++i;
    } else {
      out.push_back(cp);
      i += len;
    }
  }
  return out;
}

std::string encode_utf8(std::u32string_view chars) {
  std::string out;
  out.reserve(chars.size());
  for (char32_t c : chars) {
    if (c > 0x10FFFF || (c >= 0xD800 && c <= 0xDFFF)) c = kReplacement;
    if (c < 0x80) {
      out.push_back(static_cast<char>(c));
    } else if (c < 0x800) {
      out.push_back(static_cast<char>(0xC0 | (c >> 6)));
      out.push_back(static_cast<char>(0x80 | (c & 0x3F)));
    } else if (c < 0x10000) {
      out.push_back(static_cast<char>(0xE0 | (c >> 12)));
      out.push_back(static_cast<char>(0x80 | ((c >> 6) & 0x3F)));
      out.push_back(static_cast<char>(0x80 | (c & 0x3F)));
    } else {
      out.push_back(static_cast<char>(0xF0 | (c >> 18)));
      out.push_back(static_cast<char>(0x80 | ((c >> 12) & 0x3F)));
      out.push_back(static_cast<char>(0x80 | ((c >> 6) & 0x3F)));
      out.push_back(static_cast<char>(0x80 | (c & 0x3F)));
    }
  }
  return out;
}

std::size_t length(std::string_view bytes) {
  std::size_t n = 0;
  std::size_t i = 0;
  while (i < bytes.size()) {
    char32_t cp;
    const std::size_t len = decode_one(bytes, i, &cp);
    i += len == 0 ? 1 : len;
    ++n;
  }
  return n;
}

char32_t fold_char(char32_t c) {
  if (c < 0x80) return (c >= U'A' && c <= U'Z') ? c + 0x20 : c;
  // Latin-1 capitals; 0xD7 is the multiplication sign, 0xDF has no
  // one-to-one folding.
  if (c >= 0xC0 && c <= 0xDE && c != 0xD7) return c + 0x20;
  // Latin Extended-A, alternating capital/small pairs.
  if (c == 0x0130) return 0x0069;  // dotted capital I folds to plain i
  if (c >= 0x0100 && c <= 0x0137) return (c % 2 == 0) ? c + 1 : c;
  if (c >= 0x0139 && c <= 0x0148) return (c % 2 == 1) ? c + 1 : c;
  if (c >= 0x014A && c <= 0x0177) return (c % 2 == 0) ? c + 1 : c;
  if (c == 0x0178) return 0x00FF;  // capital Y with diaeresis
  if (c >= 0x0179 && c <= 0x017E) return (c % 2 == 1) ? c + 1 : c;
  if (c == 0x017F) return 0x0073;  // long s
  // Greek.
  if (c == 0x03C2) return 0x03C3;  // final sigma
  if (c >= 0x0391 && c <= 0x03AB && c != 0x03A2) return c + 0x20;
  // Cyrillic.
  if (c >= 0x0410 && c <= 0x042F) return c + 0x20;
  if (c >= 0x0400 && c <= 0x040F) return c + 0x50;
  // Latin Extended Additional, alternating pairs.
  if (c >= 0x1E00 && c <= 0x1E95 && c % 2 == 0) return c + 1;
  if (c >= 0x1EA0 && c <= 0x1EFF && c % 2 == 0) return c + 1;
  return c;
}

std::u32string fold(std::u32string_view chars) {
  std::u32string out;
  out.reserve(chars.size());
  for (char32_t c : chars) out.push_back(fold_char(c));
  return out;
}

bool is_word_char(char32_t c) {
  if (c < 0x80) {
    return (c >= U'0' && c <= U'9') || (c >= U'A' && c <= U'Z') ||
           (c >= U'a' && c <= U'z') || c == U'_';
  }
  if (c == 0xAA || c == 0xB5 || c == 0xBA) return true;  // ª µ º
  if (c >= 0xC0 && c <= 0x024F) return c != 0xD7 && c != 0xF7;
  if (c >= 0x0300 && c <= 0x036F) return true;  // combining marks
  if (c >= 0x0386 && c <= 0x03FF) return c != 0x0387;  // Greek
  if (c >= 0x0400 && c <= 0x052F) return true;         // Cyrillic
  if (c >= 0x1E00 && c <= 0x1FFF) return true;  // Latin additional, Greek ext.
  return false;
}

CharMap::CharMap(std::string_view bytes) {
  starts_.reserve(bytes.size() + 1);
  std::size_t i = 0;
  while (i < bytes.size()) {
    starts_.push_back(i);
    char32_t cp;
    const std::size_t len = decode_one(bytes, i, &cp);
    i += len == 0 ? 1 : len;
  }
  starts_.push_back(bytes.size());
}

std::size_t CharMap::floor_char(std::size_t byte) const {
  auto it = std::upper_bound(starts_.begin(), starts_.end(), byte);
  return static_cast<std::size_t>(it - starts_.begin()) - 1;
}

std::size_t CharMap::ceil_char(std::size_t byte) const {
  auto it = std::lower_bound(starts_.begin(), starts_.end(), byte);
  return static_cast<std::size_t>(it - starts_.begin());
}

}  // namespace filature::uni

