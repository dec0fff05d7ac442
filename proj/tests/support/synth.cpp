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


#include "synth.hpp"

#include <algorithm>
#include <array>

#include "chandassu/unicode.hpp"

namespace chandassu::testing {
namespace {

// Consonants without special weight behaviour in onset position.
constexpr std::array<char32_t, 16> kConsonants = {
    U'క', U'గ', U'చ', U'జ', U'ట', U'డ', U'త', U'ద',
    U'ప', U'బ', U'మ', U'న', U'ల', U'వ', U'స', U'య'};

// Three vowel classes, each with a short and a long form. 0 is the
// inherent vowel (no sign).
struct VowelPair {
  char32_t light;
  char32_t heavy;
};
constexpr std::array<VowelPair, 3> kVowels = {{
    {0, U'ా'},
    {U'ి', U'ీ'},
    {U'ు', U'ూ'},
}};

template <typename T>
const T& pick(const std::vector<T>& v, std::mt19937& rng) {
  return v[std::uniform_int_distribution<std::size_t>(0, v.size() - 1)(rng)];
}

template <typename T, std::size_t N>
const T& pick(const std::array<T, N>& v, std::mt19937& rng) {
  return v[std::uniform_int_distribution<std::size_t>(0, N - 1)(rng)];
}

int uniform(std::mt19937& rng, int lo, int hi) {
  return std::uniform_int_distribution<int>(lo, hi)(rng);
}

std::u32string syllable(char32_t consonant, std::size_t vowel_class, LGMark mark) {
  std::u32string s(1, consonant);
  const auto& v = kVowels[vowel_class];
  const char32_t sign = mark == LGMark::kGuruvu ? v.heavy : v.light;
  if (sign) s.push_back(sign);
  return s;
}

}  // namespace

SynthPadyam synthesize(const PadyamConfig& config, std::mt19937& rng) {
  SynthPadyam out;
  const char32_t prasa = pick(kConsonants, rng);
  std::u32string text;

  for (std::size_t line = 0; line < config.gana_kramam.size(); ++line) {
    std::vector<LGMark> pattern;
    std::vector<std::size_t> cell_start;
    auto& sizes = out.cell_sizes.emplace_back();
    for (const auto& alts : config.gana_kramam[line]) {
      const GanamSpec* g = pick(alts, rng);
      cell_start.push_back(pattern.size());
      sizes.push_back(g->size());
      pattern.insert(pattern.end(), g->pattern.begin(), g->pattern.end());
    }

    std::vector<std::u32string> syl(pattern.size());
    for (std::size_t k = 0; k < pattern.size(); ++k) {
      syl[k] = syllable(pick(kConsonants, rng), uniform(rng, 0, 2), pattern[k]);
    }
    // Yati: the first aksharam and the yati aksharam share consonant and
    // vowel class.
    const std::size_t g = config.yati_sthanam.ganam;
    if (g <= cell_start.size()) {
      const std::size_t at = cell_start[g - 1] + config.yati_sthanam.offset;
      const char32_t c = pick(kConsonants, rng);
      const auto v = static_cast<std::size_t>(uniform(rng, 0, 2));
      syl[0] = syllable(c, v, pattern[0]);
      syl[at] = syllable(c, v, pattern[at]);
    }
    // Prasa: every line's second aksharam carries the same consonant.
    syl[1] = syllable(prasa, uniform(rng, 0, 2), pattern[1]);

    std::size_t k = 0;
    while (k < syl.size()) {
      const std::size_t len = std::min<std::size_t>(uniform(rng, 2, 5), syl.size() - k);
      for (std::size_t j = 0; j < len; ++j, ++k) {
        text += syl[k];
        out.syllables.push_back(unicode::encode_utf8(syl[k]));
        out.marks.push_back(pattern[k]);
      }
      if (k < syl.size()) text.push_back(U' ');
    }
    text.push_back(U'\n');
  }
  out.text = unicode::encode_utf8(text);
  return out;
}

std::vector<AnnotatedToken> tiled_stream(const PadyamConfig& config, std::mt19937& rng) {
  std::vector<AnnotatedToken> out;
  for (const auto& line : config.gana_kramam) {
    for (const auto& alts : line) {
      for (LGMark m : pick(alts, rng)->pattern) {
        out.push_back({AksharamToken(std::u32string(1, pick(kConsonants, rng))), m});
      }
    }
  }
  return out;
}

std::string random_text(std::mt19937& rng) {
  static const std::vector<char32_t> consonants = [] {
    std::vector<char32_t> v;
    for (char32_t c = 0x0C15; c <= 0x0C39; ++c) {
      if (c != 0x0C29) v.push_back(c);
    }
    return v;
  }();
  static const std::vector<char32_t> vowels = {U'అ', U'ఆ', U'ఇ', U'ఈ', U'ఉ', U'ఊ', U'ఋ',
                                               U'ఎ', U'ఏ', U'ఐ', U'ఒ', U'ఓ', U'ఔ'};
  static const std::vector<char32_t> signs = {U'ా', U'ి', U'ీ', U'ు', U'ూ', U'ృ', U'ౄ',
                                              U'ె', U'ే', U'ై', U'ొ', U'ో', U'ౌ'};
  static const std::vector<char32_t> codas = {U'ం', U'ః', U'ఁ', 0x0C00};
  static const std::vector<std::u32string> noise = {
      U"a", U"Z", U"7", U"౭", U",", U".", U"!", U"‍", U"‌",
      U"\U0001F600", U"«", U"-", U"ab1", U"́"};
  static const std::vector<std::u32string> spaces = {U" ", U"  ", U"\n", U"\t", U"\r\n",
                                                     U" "};

  std::u32string out;
  const int words = uniform(rng, 1, 12);
  for (int w = 0; w < words; ++w) {
    if (w) out += pick(spaces, rng);
    const int syllables = uniform(rng, 1, 5);
    for (int s = 0; s < syllables; ++s) {
      if (uniform(rng, 0, 9) == 0) out += pick(noise, rng);
      if (uniform(rng, 0, 7) == 0) {
        out.push_back(pick(vowels, rng));
      } else {
        const int cluster = uniform(rng, 0, 5) == 0 ? uniform(rng, 2, 3) : 1;
        for (int c = 0; c < cluster; ++c) {
          if (c) out.push_back(U'్');
          out.push_back(pick(consonants, rng));
          if (c && uniform(rng, 0, 12) == 0) out.push_back(U'‌');
        }
        if (uniform(rng, 0, 2)) out.push_back(pick(signs, rng));
      }
      if (uniform(rng, 0, 5) == 0) out.push_back(pick(codas, rng));
    }
    // Word-final pollu, sometimes a two-consonant one.
    if (uniform(rng, 0, 5) == 0) {
      if (uniform(rng, 0, 3) == 0) {
        out.push_back(pick(consonants, rng));
        out.push_back(U'్');
      }
      out.push_back(pick(consonants, rng));
      out.push_back(U'్');
    }
    if (uniform(rng, 0, 9) == 0) out += pick(noise, rng);
  }
  return unicode::encode_utf8(out);
}

std::u32string reconstruction_oracle(std::u32string_view text) {
  auto keep = [](char32_t c) {
    return (c >= 0x0C05 && c <= 0x0C14 && c != 0x0C0D && c != 0x0C11) ||  // vowels
           (c >= 0x0C60 && c <= 0x0C61) ||
           (c >= 0x0C15 && c <= 0x0C39 && c != 0x0C29) ||  // consonants
           (c >= 0x0C58 && c <= 0x0C5A) || c == 0x0C5D ||
           (c >= 0x0C3E && c <= 0x0C4C && c != 0x0C45 && c != 0x0C49) ||  // signs
           c == 0x0C55 || c == 0x0C56 || c == 0x0C62 || c == 0x0C63 ||
           c == 0x0C4D ||                                // virama
           c == 0x0C02 || c == 0x0C03 || c == 0x0C04;    // anusvara, visarga
  };
  std::u32string out;
  for (char32_t c : text) {
    if (keep(c)) out.push_back(c);
  }
  return out;
}

}  // namespace chandassu::testing
