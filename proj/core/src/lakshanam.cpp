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


#include "chandassu/lakshanam.hpp"

#include <algorithm>

#include "chandassu/errors.hpp"
#include "chandassu/varnamala.hpp"

namespace chandassu {
namespace {

using varnamala::CharClass;
using varnamala::VowelLength;

bool contains(const std::u32string& set, char32_t cp) {
  return set.find(cp) != std::u32string::npos;
}

// Vowel carried by an aksharam: its sign, the independent vowel itself, or
// the inherent vowel of a bare consonant.
char32_t vowel_of(const std::u32string& token) {
  if (auto sign = varnamala::extract_gunintha_chihnam(token)) return *sign;
  for (char32_t cp : token) {
    if (varnamala::classify(cp) == CharClass::kIndependentVowel) return cp;
  }
  return YatiTable::kInherentVowel;
}

VowelLength length_flag(const AksharamToken& token) {
  const char32_t last = token.back();
  switch (varnamala::classify(last)) {
    case CharClass::kVowelDiacritic: return *varnamala::vowel_length(last);
    case CharClass::kAnusvara:
    case CharClass::kVisarga: return VowelLength::kDeergha;
    default: return VowelLength::kHraswa;
  }
}

}  // namespace

std::size_t YatiVerdict::passed() const {
  return static_cast<std::size_t>(std::count(per_paadam.begin(), per_paadam.end(), true));
}

bool yati_check(const AksharamToken& first_letter,
                const AksharamToken& yati_sthanam_letter, const YatiTable& table) {
  const auto a = varnamala::strip_bindu_visarga(first_letter.codepoints());
  const auto b = varnamala::strip_bindu_visarga(yati_sthanam_letter.codepoints());

  const char32_t va = vowel_of(a);
  const char32_t vb = vowel_of(b);
  bool chihna = false;
  for (const auto& cls : table.vowel_classes()) {
    if (!contains(cls, va)) continue;
    if (!contains(cls, vb)) return false;
    chihna = true;
    break;
  }

  bool akshara = false;
  const auto la = varnamala::extract_aksharam(a);
  const auto lb = varnamala::extract_aksharam(b);
  for (char32_t x : la) {
    const auto cls = table.letter_class_of(x);
    if (!cls) continue;
    const auto& members = table.letter_classes()[*cls];
    if (std::any_of(lb.begin(), lb.end(), [&](char32_t y) { return contains(members, y); })) {
      akshara = true;
      break;
    }
  }
  return chihna && akshara;
}

YatiVerdict prasa_yati_check(const PaadamBreakdown& paadam_data,
                             const PadyamConfig& config, bool only_generic,
                             const YatiTable& table) {
  YatiVerdict verdict;
  const std::size_t g = config.yati_sthanam.ganam;
  const std::size_t offset = config.yati_sthanam.offset;

  for (int line : config.yati_paadalu) {
    if (line < 1 || static_cast<std::size_t>(line) > paadam_data.size()) continue;
    const PaadamRow& row = paadam_data[line - 1];
    if (g == 0 || g > row.size()) {
      throw ConfigShapeError("yati ganam " + std::to_string(g) + " is beyond the " +
                             std::to_string(row.size()) + " ganams of line " +
                             std::to_string(line));
    }
    const auto& first = row.front().tokens;
    const auto& yati = row[g - 1].tokens;
    if (first.size() <= 1 || yati.size() <= 1 || offset >= yati.size()) {
      verdict.per_paadam.push_back(false);
      continue;
    }

    const bool generic = yati_check(first[0].token, yati[offset].token, table);
    if (only_generic || generic) {
      verdict.per_paadam.push_back(generic);
      continue;
    }
    const bool same_length = length_flag(first[0].token) == length_flag(yati[0].token);
    const bool same_skeleton =
        varnamala::remove_gunintha_chihnam(first[1].token.codepoints()) ==
        varnamala::remove_gunintha_chihnam(yati[1].token.codepoints());
    verdict.per_paadam.push_back(same_length && same_skeleton);
  }
  return verdict;
}

}  // namespace chandassu
