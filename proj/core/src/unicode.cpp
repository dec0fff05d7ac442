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


#include "chandassu/unicode.hpp"

#include <algorithm>
#include <array>
#include <cstdint>

namespace chandassu::unicode {
namespace {

struct BreakRange {
  char32_t first;
  char32_t last;
  std::uint8_t property;
};

constexpr BreakRange kBreakTable[] = {
#include "grapheme_break_table.inc"
};

constexpr std::uint8_t kPictographicBit = 0x10;

std::uint8_t lookup(char32_t cp) {
  const auto* end = std::end(kBreakTable);
  const auto* it = std::upper_bound(
      std::begin(kBreakTable), end, cp,
      [](char32_t value, const BreakRange& r) { return value < r.first; });
  if (it == std::begin(kBreakTable)) return 0;
  --it;
  return cp <= it->last ? it->property : 0;
}

bool is_control_like(GraphemeBreak p) {
  return p == GraphemeBreak::kControl || p == GraphemeBreak::kCR ||
         p == GraphemeBreak::kLF;
}

}  // namespace

std::u32string decode_utf8(std::string_view text) {
  std::u32string out;
  out.reserve(text.size());
  std::size_t i = 0;
  const auto byte = [&](std::size_t k) {
    return static_cast<unsigned char>(text[k]);
  };
  while (i < text.size()) {
    unsigned char b0 = byte(i);
    if (b0 < 0x80) {
      out.push_back(b0);
      ++i;
      continue;
    }
    int extra = 0;
    char32_t cp = 0;
    char32_t min = 0;
    if ((b0 & 0xE0) == 0xC0) {
      extra = 1, cp = b0 & 0x1F, min = 0x80;
    } else if ((b0 & 0xF0) == 0xE0) {
      extra = 2, cp = b0 & 0x0F, min = 0x800;
    } else if ((b0 & 0xF8) == 0xF0) {
      extra = 3, cp = b0 & 0x07, min = 0x10000;
    } else {
      out.push_back(U'\uFFFD');
      ++i;
      continue;
    }
    if (i + extra >= text.size()) {
      out.push_back(U'\uFFFD');
      ++i;
      continue;
    }
    bool ok = true;
    for (int k = 1; k <= extra; ++k) {
      unsigned char b = byte(i + k);
      if ((b & 0xC0) != 0x80) {
        ok = false;
        break;
      }
      cp = (cp << 6) | (b & 0x3F);
    }
    if (!ok || cp < min || cp > 0x10FFFF || (cp >= 0xD800 && cp <= 0xDFFF)) {
      out.push_back(U'\uFFFD');
      ++i;
      continue;
    }
    out.push_back(cp);
    i += extra + 1;
  }
  return out;
}

std::string encode_utf8(char32_t cp) {
  std::string out;
  if (cp < 0x80) {
    out.push_back(static_cast<char>(cp));
  } else if (cp < 0x800) {
    out.push_back(static_cast<char>(0xC0 | (cp >> 6)));
    out.push_back(static_cast<char>(0x80 | (cp & 0x3F)));
  } else if (cp < 0x10000) {
    out.push_back(static_cast<char>(0xE0 | (cp >> 12)));
    out.push_back(static_cast<char>(0x80 | ((cp >> 6) & 0x3F)));
    out.push_back(static_cast<char>(0x80 | (cp & 0x3F)));
  } else {
    out.push_back(static_cast<char>(0xF0 | (cp >> 18)));
    out.push_back(static_cast<char>(0x80 | ((cp >> 12) & 0x3F)));
    out.push_back(static_cast<char>(0x80 | ((cp >> 6) & 0x3F)));
    out.push_back(static_cast<char>(0x80 | (cp & 0x3F)));
  }
  return out;
}

std::string encode_utf8(std::u32string_view text) {
  std::string out;
  out.reserve(text.size() * 3);
  for (char32_t cp : text) out += encode_utf8(cp);
  return out;
}

std::string_view strip_bom(std::string_view text) {
  constexpr std::string_view kBom = "\xEF\xBB\xBF";
  if (text.substr(0, kBom.size()) == kBom) text.remove_prefix(kBom.size());
  return text;
}

GraphemeBreak grapheme_break(char32_t codepoint) {
  return static_cast<GraphemeBreak>(lookup(codepoint) & 0x0F);
}

bool is_extended_pictographic(char32_t codepoint) {
  return (lookup(codepoint) & kPictographicBit) != 0;
}

std::vector<std::u32string> grapheme_split(std::u32string_view text) {
  using GB = GraphemeBreak;
  std::vector<std::u32string> clusters;
  if (text.empty()) return clusters;

  std::u32string current(1, text[0]);
  GB prev = grapheme_break(text[0]);
  // GB11: inside ExtPict Extend* (ZWJ)?
  bool pictographic_run = is_extended_pictographic(text[0]);
  bool pictographic_zwj = false;
  // GB12/GB13: count of regional indicators ending at prev.
  int regional_run = prev == GB::kRegionalIndicator ? 1 : 0;

  for (std::size_t i = 1; i < text.size(); ++i) {
    const char32_t cp = text[i];
    const GB next = grapheme_break(cp);
    const bool next_pict = is_extended_pictographic(cp);

    bool join;
    if (prev == GB::kCR && next == GB::kLF) {
      join = true;  // GB3
    } else if (is_control_like(prev) || is_control_like(next)) {
      join = false;  // GB4, GB5
    } else if (prev == GB::kL && (next == GB::kL || next == GB::kV ||
                                  next == GB::kLV || next == GB::kLVT)) {
      join = true;  // GB6
    } else if ((prev == GB::kLV || prev == GB::kV) &&
               (next == GB::kV || next == GB::kT)) {
      join = true;  // GB7
    } else if ((prev == GB::kLVT || prev == GB::kT) && next == GB::kT) {
      join = true;  // GB8
    } else if (next == GB::kExtend || next == GB::kZWJ) {
      join = true;  // GB9
    } else if (next == GB::kSpacingMark) {
      join = true;  // GB9a
    } else if (prev == GB::kPrepend) {
      join = true;  // GB9b
    } else if (pictographic_zwj && next_pict) {
      join = true;  // GB11
    } else if (prev == GB::kRegionalIndicator &&
               next == GB::kRegionalIndicator) {
      join = regional_run % 2 == 1;  // GB12, GB13
    } else {
      join = false;  // GB999
    }

    if (join) {
      current.push_back(cp);
    } else {
      clusters.push_back(std::move(current));
      current.assign(1, cp);
    }

    // Track the ExtPict Extend* ZWJ prefix for GB11.
    if (next_pict) {
      pictographic_run = true;
      pictographic_zwj = false;
    } else if (pictographic_run && next == GB::kExtend) {
      pictographic_zwj = false;
    } else if (pictographic_run && next == GB::kZWJ) {
      pictographic_zwj = true;
      pictographic_run = false;
    } else {
      pictographic_run = false;
      pictographic_zwj = false;
    }
    regional_run = next == GB::kRegionalIndicator ? regional_run + 1 : 0;
    prev = next;
  }
  clusters.push_back(std::move(current));
  return clusters;
}

std::vector<std::string> grapheme_split(std::string_view utf8) {
  std::vector<std::string> out;
  for (const auto& cluster : grapheme_split(std::u32string_view(decode_utf8(utf8)))) {
    out.push_back(encode_utf8(cluster));
  }
  return out;
}

bool is_whitespace(char32_t cp) {
  switch (cp) {
    case 0x09: case 0x0A: case 0x0B: case 0x0C: case 0x0D: case 0x20:
    case 0x85: case 0xA0: case 0x1680: case 0x2028: case 0x2029:
    case 0x202F: case 0x205F: case 0x3000:
      return true;
    default:
      return cp >= 0x2000 && cp <= 0x200A;
  }
}

}  // namespace chandassu::unicode
