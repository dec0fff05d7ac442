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


#include "chandassu/prosody.hpp"

#include <algorithm>

#include "chandassu/errors.hpp"
#include "chandassu/unicode.hpp"

namespace chandassu {
namespace {

using varnamala::CharClass;

bool is_consonant(char32_t cp) {
  return varnamala::classify(cp) == CharClass::kConsonant;
}

bool ends_with_virama(std::u32string_view s) {
  return !s.empty() && s.back() == varnamala::kVirama;
}

// Does `next` make the syllable before it heavy?
bool makes_previous_heavy(const std::u32string& next) {
  const auto clusters = unicode::grapheme_split(std::u32string_view(next));

  std::u32string onset;
  for (std::size_t i = 0; i < clusters.size(); ++i) {
    if (i + 1 == clusters.size() && ends_with_virama(clusters[i])) break;
    onset += clusters[i];
  }
  const auto non_ra = std::count_if(onset.begin(), onset.end(), [](char32_t cp) {
    return is_consonant(cp) && cp != varnamala::kRa;
  });
  const bool has_ra = next.find(varnamala::kRa) != std::u32string::npos;
  if (has_ra && (non_ra == 0 || (non_ra == 1 && next.front() != varnamala::kRa))) {
    return false;
  }

  const auto letters =
      std::count_if(next.begin(), next.end(), varnamala::is_base_letter);
  if (letters <= 1) return false;
  if (!ends_with_virama(next)) return true;
  return ends_with_virama(clusters.front());
}

}  // namespace

LGMark inherent_weight(const AksharamToken& token) {
  if (token.empty()) throw LookupMissError("", 0);
  const auto mark = varnamala::lg_weight(token.back());
  if (!mark) throw LookupMissError(token.str(), token.back());
  return *mark;
}

std::vector<AnnotatedToken> generate_lg(std::span<const AksharamToken> tokens) {
  std::vector<AnnotatedToken> out;
  out.reserve(tokens.size());
  for (std::size_t i = 0; i < tokens.size(); ++i) {
    const bool heavy =
        i + 1 < tokens.size() && makes_previous_heavy(tokens[i + 1].codepoints());
    out.push_back({tokens[i], heavy ? LGMark::kGuruvu : inherent_weight(tokens[i])});
  }
  return out;
}

std::vector<AnnotatedToken> generate_lg(std::string_view text) {
  const auto tokens = tokenize(text);
  return generate_lg(std::span<const AksharamToken>(tokens));
}

std::vector<LGMark> marks_of(std::span<const AnnotatedToken> lg) {
  std::vector<LGMark> out;
  out.reserve(lg.size());
  for (const auto& t : lg) out.push_back(t.mark);
  return out;
}

std::string render_marks(std::span<const LGMark> marks) {
  std::string out;
  out.reserve(marks.size());
  for (LGMark m : marks) out.push_back(render(m));
  return out;
}

std::string render_lg(std::span<const AnnotatedToken> lg) {
  std::string out;
  out.reserve(lg.size());
  for (const auto& t : lg) out.push_back(render(t.mark));
  return out;
}

}  // namespace chandassu
