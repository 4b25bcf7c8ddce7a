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

#ifndef FILATURE_UNICODE_HPP_
#define FILATURE_UNICODE_HPP_

#include <cstddef>
#include <string>
#include <string_view>
#include <vector>

namespace filature::uni {

/// Decodes UTF-8 into code points. Every byte of an invalid sequence
/// becomes U+FFFD; decoding never fails.
std::u32string decode_utf8(std::string_view bytes);

std::string encode_utf8(std::u32string_view chars);

/// Number of code points in `bytes` under the same lenient decoding.
std::size_t length(std::string_view bytes);

/// One-to-one simple case folding. Covers ASCII, Latin-1, Latin Extended-A,
/// Latin Extended Additional, Greek and Cyrillic; other code points are
/// returned unchanged. Folding never changes the character count.
char32_t fold_char(char32_t c);

std::u32string fold(std::u32string_view chars);

/// Word characters for boundary checks: ASCII alphanumerics, underscore,
/// letters of the Latin, Greek and Cyrillic ranges, and combining marks.
/// An approximation of the Unicode word classes, adequate for the scripts
/// this toolkit targets.
bool is_word_char(char32_t c);

/// Byte offsets of each character of a UTF-8 string, for translating the
/// byte spans a byte-level matcher reports into character spans.
class CharMap {
 public:
  explicit CharMap(std::string_view bytes);

  std::size_t char_count() const { return starts_.size() - 1; }

  /// Character containing (or starting at) the given byte offset.
  std::size_t floor_char(std::size_t byte) const;

  /// First character starting at or after the given byte offset.
  std::size_t ceil_char(std::size_t byte) const;

 private:
  std::vector<std::size_t> starts_;  // starts_[char_count()] == bytes.size()
};

}  // namespace filature::uni

#endif  // FILATURE_UNICODE_HPP_
