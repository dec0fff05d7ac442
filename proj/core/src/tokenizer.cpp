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


#include "chandassu/tokenizer.hpp"

#include "chandassu/errors.hpp"
#include "chandassu/unicode.hpp"
#include "chandassu/varnamala.hpp"

namespace chandassu {
namespace {

using varnamala::CharClass;

constexpr char32_t kZwnj = 0x200C;
constexpr char32_t kZwj = 0x200D;

// Kannada anusvara and visarga occur in Telugu text produced by some
// keyboards; fold them onto their Telugu counterparts.
char32_t normalize(char32_t cp) {
  switch (cp) {
    case 0x0C82: return 0x0C02;
    case 0x0C83: return 0x0C03;
    default: return cp;
  }
}

std::u32string clean(std::u32string_view text) {
  std::u32string out;
  out.reserve(text.size());
  for (char32_t raw : text) {
    const char32_t cp = normalize(raw);
    if (unicode::is_whitespace(cp)) {
      out.push_back(cp);
      continue;
    }
    if (cp == kZwj || cp == kZwnj) continue;
    switch (varnamala::classify(cp)) {
      case CharClass::kOther:
      case CharClass::kDigit:
      case CharClass::kCandrabindu:
        continue;
      default:
        out.push_back(cp);
    }
  }
  return out;
}

bool is_space_cluster(const std::u32string& cluster) {
  return unicode::is_whitespace(cluster.front());
}

bool has_base_letter(const std::u32string& cluster) {
  for (char32_t cp : cluster) {
    if (varnamala::is_base_letter(cp)) return true;
  }
  return false;
}

bool ends_with_virama(const std::u32string& cluster) {
  return !cluster.empty() && cluster.back() == varnamala::kVirama;
}

}  // namespace

AksharamToken::AksharamToken(std::string_view utf8)
    : text_(unicode::decode_utf8(utf8)) {}

std::string AksharamToken::str() const { return unicode::encode_utf8(text_); }

std::vector<LocatedToken> tokenize_located(std::string_view text) {
  const std::u32string cleaned = clean(unicode::decode_utf8(text));

  // Each cluster is either whitespace (a word boundary, possibly with
  // stray marks after it) or carries a base letter. Marks with no base
  // letter to sit on are dropped.
  struct Cluster {
    std::u32string text;
    std::size_t line;
    bool space;
  };
  std::vector<Cluster> clusters;
  std::size_t line = 0;
  for (auto& c : unicode::grapheme_split(std::u32string_view(cleaned))) {
    if (is_space_cluster(c)) {
      const std::size_t at = line;
      for (char32_t cp : c) line += cp == U'\n';
      clusters.push_back({{}, at, true});
    } else if (has_base_letter(c)) {
      clusters.push_back({std::move(c), line, false});
    }
  }

  std::vector<LocatedToken> tokens;
  std::u32string pending;
  std::size_t pending_line = 0;
  for (std::size_t i = 0; i < clusters.size(); ++i) {
    const Cluster& c = clusters[i];
    if (c.space) continue;
    const bool boundary_next = i + 1 == clusters.size() || clusters[i + 1].space;

    if (ends_with_virama(c.text) && !boundary_next) {
      if (pending.empty()) pending_line = c.line;
      pending += c.text;
    } else if (ends_with_virama(c.text)) {
      // Word-final pollu closes the previous syllable.
      if (tokens.empty()) {
        throw InputShapeError("word-final pollu \"" +
                              unicode::encode_utf8(pending + c.text) +
                              "\" has no preceding aksharam");
      }
      tokens.back().token += pending;
      tokens.back().token += c.text;
      pending.clear();
    } else if (!pending.empty()) {
      tokens.push_back({AksharamToken(pending + c.text), pending_line});
      pending.clear();
    } else {
      tokens.push_back({AksharamToken(c.text), c.line});
    }
  }
  return tokens;
}

std::vector<AksharamToken> tokenize(std::string_view text) {
  std::vector<AksharamToken> out;
  for (auto& t : tokenize_located(text)) out.push_back(std::move(t.token));
  return out;
}

std::vector<std::vector<AksharamToken>> tokenize_lines(std::string_view text) {
  std::vector<std::vector<AksharamToken>> lines;
  std::size_t start = 0;
  while (start <= text.size()) {
    std::size_t end = text.find('\n', start);
    if (end == std::string_view::npos) end = text.size();
    auto tokens = tokenize(text.substr(start, end - start));
    if (!tokens.empty()) lines.push_back(std::move(tokens));
    start = end + 1;
  }
  return lines;
}

std::vector<std::string> to_strings(const std::vector<AksharamToken>& tokens) {
  std::vector<std::string> out;
  out.reserve(tokens.size());
  for (const auto& t : tokens) out.push_back(t.str());
  return out;
}

}  // namespace chandassu
