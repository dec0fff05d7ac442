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

#include <random>
#include <string>
#include <vector>

#include "chandassu/meter_config.hpp"
#include "chandassu/prosody.hpp"

namespace chandassu::testing {

struct SynthPadyam {
  std::string text;
  std::vector<std::string> syllables;  // expected tokens, in order
  std::vector<LGMark> marks;           // expected weights
  std::vector<std::vector<std::size_t>> cell_sizes;  // per line, per position
};

// Builds a padyam whose weights tile `config` exactly and whose lines
// satisfy generic yati and a shared prasa consonant. Uses only plain
// consonant+vowel-sign syllables (no conjuncts, no ra), so every weight is
// fixed by the syllable's own vowel.
SynthPadyam synthesize(const PadyamConfig& config, std::mt19937& rng);

// Annotated stream for `config` with random alternatives per position.
std::vector<AnnotatedToken> tiled_stream(const PadyamConfig& config, std::mt19937& rng);

// Random text mixing Telugu words (with conjuncts, word-final pollu,
// vowel signs, anusvara, visarga, ara sunna) and noise: Latin letters,
// digits, punctuation, ZWJ/ZWNJ, emoji and assorted whitespace. Vowel signs
// always follow a consonant.
std::string random_text(std::mt19937& rng);

// Independent reference: the input with whitespace, ara sunna and all
// characters outside the prosodic Telugu inventory removed.
std::u32string reconstruction_oracle(std::u32string_view text);

}  // namespace chandassu::testing
