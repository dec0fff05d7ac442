/*
 * Copyright 2026 The Chandassu Authors
 *
 * Licensed under the Apache License, Version 2.0 (the "License");
 * you may not use this file except in compliance with the License.
 * You may obtain a copy of the License at
 *
 * http://www.apache.org/licenses/LICENSE-2.0
 *
 * Unless required by applicable law or agreed to in writing, software
 * distributed under the License is distributed on an "AS IS" BASIS,
 * WITHOUT WARRANTIES OR CONDITIONS OF ANY KIND, either express or implied.
 * See the License for the specific language governing permissions and
 * limitations under the License.
 */


#pragma once

#include <string>
#include <string_view>
#include <vector>

namespace chandassu::unicode {

// Decodes UTF-8. Malformed sequences decode to U+FFFD, one per offending byte.
std::u32string decode_utf8(std::string_view text);

std::string encode_utf8(std::u32string_view text);
std::string encode_utf8(char32_t codepoint);

// Removes a leading byte-order mark, if present.
std::string_view strip_bom(std::string_view text);

// Grapheme_Cluster_Break property values (UAX #29).
enum class GraphemeBreak : unsigned char {
  kOther = 0,
  kCR,
  kLF,
  kControl,
  kExtend,
  kZWJ,
  kRegionalIndicator,
  kPrepend,
  kSpacingMark,
  kL,
  kV,
  kT,
  kLV,
  kLVT,
};

GraphemeBreak grapheme_break(char32_t codepoint);
bool is_extended_pictographic(char32_t codepoint);

// Extended grapheme cluster segmentation per UAX #29 as of Unicode 14.0.
// Later revisions added a rule (GB9c) that keeps Indic consonant+virama+
// consonant sequences in one cluster; it is deliberately absent here, so a
// consonant carrying a virama forms its own cluster.
std::vector<std::u32string> grapheme_split(std::u32string_view text);
std::vector<std::string> grapheme_split(std::string_view utf8);

// Unicode White_Space.
bool is_whitespace(char32_t codepoint);

}  // namespace chandassu::unicode
