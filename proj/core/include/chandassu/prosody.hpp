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

#include <span>
#include <string>
#include <string_view>
#include <vector>

#include "chandassu/tokenizer.hpp"
#include "chandassu/varnamala.hpp"

namespace chandassu {

struct AnnotatedToken {
  AksharamToken token;
  LGMark mark = LGMark::kLaghuvu;

  friend bool operator==(const AnnotatedToken&, const AnnotatedToken&) = default;
};

// Assigns a laghuvu/guruvu mark to each token. A syllable is heavy when its
// own final sound is long or closed, or when the following aksharam opens
// with a consonant cluster (subject to the ra exceptions).
// Throws LookupMissError when a token ends in a codepoint without a weight.
std::vector<AnnotatedToken> generate_lg(std::span<const AksharamToken> tokens);
std::vector<AnnotatedToken> generate_lg(std::string_view text);

// Weight of a token taken in isolation.
LGMark inherent_weight(const AksharamToken& token);

std::vector<LGMark> marks_of(std::span<const AnnotatedToken> lg);
std::string render_lg(std::span<const AnnotatedToken> lg);
std::string render_marks(std::span<const LGMark> marks);

}  // namespace chandassu
