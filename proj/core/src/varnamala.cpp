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


#include "chandassu/varnamala.hpp"

#include <algorithm>
#include <cstdio>

#include "chandassu/unicode.hpp"

namespace chandassu {

char render(LGMark mark) { return mark == LGMark::kGuruvu ? 'U' : '|'; }

std::optional<LGMark> parse_mark(char symbol) {
  switch (symbol) {
    case '|': return LGMark::kLaghuvu;
    case 'U': return LGMark::kGuruvu;
    default: return std::nullopt;
  }
}

namespace varnamala {
namespace {

bool in(char32_t cp, char32_t lo, char32_t hi) { return cp >= lo && cp <= hi; }

// Assigned codepoints of the block that carry no prosodic role.
constexpr char32_t kAssignedOther[] = {0x0C3C, 0x0C3D, 0x0C77, 0x0C7F};

}  // namespace

std::string_view to_string(CharClass c) {
  switch (c) {
    case CharClass::kIndependentVowel: return "IndependentVowel";
    case CharClass::kConsonant: return "Consonant";
    case CharClass::kVowelDiacritic: return "VowelDiacritic";
    case CharClass::kVirama: return "Virama";
    case CharClass::kAnusvara: return "Anusvara";
    case CharClass::kVisarga: return "Visarga";
    case CharClass::kCandrabindu: return "Candrabindu";
    case CharClass::kDigit: return "Digit";
    case CharClass::kOther: return "Other";
  }
  return "Other";
}

std::string_view to_string(VowelLength v) {
  return v == VowelLength::kDeergha ? "Deergha" : "Hraswa";
}

CharClass classify(char32_t cp) {
  if (!in(cp, 0x0C00, 0x0C7F)) return CharClass::kOther;
  switch (cp) {
    case 0x0C00:
    case 0x0C01: return CharClass::kCandrabindu;
    case 0x0C02:
    case 0x0C04: return CharClass::kAnusvara;
    case 0x0C03: return CharClass::kVisarga;
    case 0x0C4D: return CharClass::kVirama;
    case 0x0C0D:
    case 0x0C11:
    case 0x0C29:
    case 0x0C45:
    case 0x0C49: return CharClass::kOther;
    case 0x0C5D: return CharClass::kConsonant;
    default: break;
  }
  if (in(cp, 0x0C05, 0x0C14) || in(cp, 0x0C60, 0x0C61)) {
    return CharClass::kIndependentVowel;
  }
  if (in(cp, 0x0C15, 0x0C39) || in(cp, 0x0C58, 0x0C5A)) {
    return CharClass::kConsonant;
  }
  if (in(cp, 0x0C3E, 0x0C4C) || in(cp, 0x0C55, 0x0C56) ||
      in(cp, 0x0C62, 0x0C63)) {
    return CharClass::kVowelDiacritic;
  }
  if (in(cp, 0x0C66, 0x0C6F) || in(cp, 0x0C78, 0x0C7E)) {
    return CharClass::kDigit;
  }
  return CharClass::kOther;
}

std::optional<VowelLength> vowel_length(char32_t cp) {
  const CharClass c = classify(cp);
  if (c != CharClass::kIndependentVowel && c != CharClass::kVowelDiacritic) {
    return std::nullopt;
  }
  switch (cp) {
    // అ ఇ ఉ ఋ ఌ ఎ ఒ and their signs.
    case 0x0C05: case 0x0C07: case 0x0C09: case 0x0C0B: case 0x0C0C:
    case 0x0C0E: case 0x0C12:
    case 0x0C3F: case 0x0C41: case 0x0C43: case 0x0C46: case 0x0C4A:
    case 0x0C62:
      return VowelLength::kHraswa;
    default:
      return VowelLength::kDeergha;
  }
}

std::optional<LGMark> lg_weight(char32_t cp) {
  switch (classify(cp)) {
    case CharClass::kConsonant:
      return LGMark::kLaghuvu;
    case CharClass::kIndependentVowel:
    case CharClass::kVowelDiacritic:
      return vowel_length(cp) == VowelLength::kDeergha ? LGMark::kGuruvu
                                                       : LGMark::kLaghuvu;
    case CharClass::kAnusvara:
    case CharClass::kVisarga:
    case CharClass::kVirama:  // closed syllable
      return LGMark::kGuruvu;
    default:
      return std::nullopt;
  }
}

std::optional<char32_t> extract_gunintha_chihnam(std::u32string_view token) {
  std::optional<char32_t> found;
  for (char32_t cp : token) {
    if (classify(cp) == CharClass::kVowelDiacritic) found = cp;
  }
  return found;
}

std::u32string remove_gunintha_chihnam(std::u32string_view token) {
  std::u32string out;
  for (char32_t cp : token) {
    if (classify(cp) != CharClass::kVowelDiacritic) out.push_back(cp);
  }
  return out;
}

std::u32string extract_aksharam(std::u32string_view token) {
  std::u32string out;
  for (char32_t cp : token) {
    if (is_base_letter(cp)) out.push_back(cp);
  }
  return out;
}

std::u32string strip_bindu_visarga(std::u32string_view token) {
  std::u32string out;
  for (char32_t cp : token) {
    const CharClass c = classify(cp);
    if (c != CharClass::kAnusvara && c != CharClass::kVisarga) out.push_back(cp);
  }
  return out;
}

std::optional<std::string> extract_gunintha_chihnam(std::string_view token) {
  auto cp = extract_gunintha_chihnam(unicode::decode_utf8(token));
  if (!cp) return std::nullopt;
  return unicode::encode_utf8(*cp);
}

std::string remove_gunintha_chihnam(std::string_view token) {
  return unicode::encode_utf8(remove_gunintha_chihnam(unicode::decode_utf8(token)));
}

std::vector<std::string> extract_aksharam(std::string_view token) {
  std::vector<std::string> out;
  for (char32_t cp : extract_aksharam(unicode::decode_utf8(token))) {
    out.push_back(unicode::encode_utf8(cp));
  }
  return out;
}

std::string strip_bindu_visarga(std::string_view token) {
  return unicode::encode_utf8(strip_bindu_visarga(unicode::decode_utf8(token)));
}

void write_character_table(std::ostream& out) {
  out << "# Telugu block character table (generated; see varnamala.cpp)\n";
  out << "# hex\tglyph\tcategory\tvowel_length\tlg\n";
  for (char32_t cp = 0x0C00; cp <= 0x0C7F; ++cp) {
    const CharClass c = classify(cp);
    const bool listed = std::find(std::begin(kAssignedOther),
                                  std::end(kAssignedOther),
                                  cp) != std::end(kAssignedOther);
    if (c == CharClass::kOther && !listed) continue;
    char hex[8];
    std::snprintf(hex, sizeof hex, "%04X", static_cast<unsigned>(cp));
    const auto length = vowel_length(cp);
    const auto weight = lg_weight(cp);
    out << "U+" << hex << '\t' << unicode::encode_utf8(cp) << '\t'
        << to_string(c) << '\t' << (length ? to_string(*length) : "-") << '\t'
        << (weight ? render(*weight) : '-') << '\n';
  }
}

}  // namespace varnamala
}  // namespace chandassu
