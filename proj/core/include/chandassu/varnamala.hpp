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

#include <optional>
#include <ostream>
#include <string>
#include <string_view>
#include <vector>

namespace chandassu {

// Syllable weight. Rendered "|" (laghuvu) and "U" (guruvu).
enum class LGMark : unsigned char { kLaghuvu, kGuruvu };

char render(LGMark mark);
std::optional<LGMark> parse_mark(char symbol);

namespace varnamala {

enum class CharClass : unsigned char {
  kIndependentVowel,  // achhu
  kConsonant,         // hallu
  kVowelDiacritic,    // gunintha chihnam
  kVirama,            // pollu
  kAnusvara,          // purna bindu
  kVisarga,
  kCandrabindu,       // ara sunna
  kDigit,
  kOther,
};

enum class VowelLength : unsigned char { kHraswa, kDeergha };

inline constexpr char32_t kVirama = U'్';
inline constexpr char32_t kAnusvara = U'ం';
inline constexpr char32_t kVisarga = U'ః';
inline constexpr char32_t kCandrabindu = U'ఁ';
inline constexpr char32_t kRa = U'ర';

std::string_view to_string(CharClass c);
std::string_view to_string(VowelLength v);

CharClass classify(char32_t codepoint);

// Independent vowels and vowel diacritics only.
std::optional<VowelLength> vowel_length(char32_t codepoint);

// Weight of a token whose final codepoint is `codepoint`; empty when the
// codepoint cannot end a token.
std::optional<LGMark> lg_weight(char32_t codepoint);

inline bool is_base_letter(char32_t cp) {
  const CharClass c = classify(cp);
  return c == CharClass::kConsonant || c == CharClass::kIndependentVowel;
}

// Last vowel diacritic in the token; empty for a bare consonant (inherent
// vowel) or an independent vowel.
std::optional<char32_t> extract_gunintha_chihnam(std::u32string_view token);
std::u32string remove_gunintha_chihnam(std::u32string_view token);
std::u32string extract_aksharam(std::u32string_view token);
std::u32string strip_bindu_visarga(std::u32string_view token);

// UTF-8 conveniences.
std::optional<std::string> extract_gunintha_chihnam(std::string_view token);
std::string remove_gunintha_chihnam(std::string_view token);
std::vector<std::string> extract_aksharam(std::string_view token);
std::string strip_bindu_visarga(std::string_view token);

// Human-readable dump of the Telugu block, one row per assigned codepoint:
// hex, glyph, category, vowel length, weight (tab separated).
void write_character_table(std::ostream& out);

}  // namespace varnamala
}  // namespace chandassu
