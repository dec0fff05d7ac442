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

#include "chandassu/prosody.hpp"

namespace chandassu {

// Positional role in the Vupajaathi meters.
enum class FunctionalClass : unsigned char { kNone, kIndra, kSurya };

std::string_view to_string(FunctionalClass c);

// A named laghuvu/guruvu pattern.
struct GanamSpec {
  std::string_view name;
  std::vector<LGMark> pattern;
  std::string_view pattern_text;  // e.g. "U|U"
  FunctionalClass functional_class = FunctionalClass::kNone;

  std::size_t size() const { return pattern.size(); }
};

// The 17 named ganams, in a fixed order.
std::span<const GanamSpec> all_ganams();

// Throws UnknownGanamError.
const GanamSpec& ganam_by_name(std::string_view name);

// nullptr when no ganam has this pattern.
const GanamSpec* ganam_by_pattern(std::span<const LGMark> pattern);

// Members in table order. Indra: BHA RA THA NALA NAGA SALA. Surya: HA NA.
std::vector<const GanamSpec*> expand_class(FunctionalClass c);

// One slot of a matched line: the tokens it covers and the ganam that
// matched them, or nullptr when none of the allowed alternatives did.
struct GanamMatchCell {
  std::vector<AnnotatedToken> tokens;
  const GanamSpec* matched = nullptr;

  std::string_view matched_name() const {
    return matched ? matched->name : std::string_view("UnMatched");
  }
};

using PaadamRow = std::vector<GanamMatchCell>;
using PaadamBreakdown = std::vector<PaadamRow>;

}  // namespace chandassu
