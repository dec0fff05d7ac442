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


#include "chandassu/ganam.hpp"

#include <algorithm>
#include <array>

#include "chandassu/errors.hpp"

namespace chandassu {
namespace {

std::vector<LGMark> parse_pattern(std::string_view text) {
  std::vector<LGMark> out;
  for (char c : text) out.push_back(*parse_mark(c));
  return out;
}

const std::vector<GanamSpec>& table() {
  static const std::vector<GanamSpec> ganams = [] {
    constexpr std::array<std::pair<std::string_view, std::string_view>, 17> rows{{
        {"LA", "|"},     {"GA", "U"},     {"LAA", "||"},   {"VA", "|U"},
        {"HA", "U|"},    {"GAA", "UU"},   {"NA", "|||"},   {"SA", "||U"},
        {"JA", "|U|"},   {"YA", "|UU"},   {"BHA", "U||"},  {"RA", "U|U"},
        {"THA", "UU|"},  {"MA", "UUU"},   {"NALA", "||||"}, {"NAGA", "|||U"},
        {"SALA", "||U|"},
    }};
    std::vector<GanamSpec> out;
    for (const auto& [name, pattern] : rows) {
      FunctionalClass c = FunctionalClass::kNone;
      if (name == "HA" || name == "NA") {
        c = FunctionalClass::kSurya;
      } else if (name == "BHA" || name == "RA" || name == "THA" ||
                 pattern.size() == 4) {
        c = FunctionalClass::kIndra;
      }
      out.push_back({name, parse_pattern(pattern), pattern, c});
    }
    return out;
  }();
  return ganams;
}

}  // namespace

std::string_view to_string(FunctionalClass c) {
  switch (c) {
    case FunctionalClass::kIndra: return "Indra";
    case FunctionalClass::kSurya: return "Surya";
    case FunctionalClass::kNone: break;
  }
  return "None";
}

std::span<const GanamSpec> all_ganams() { return table(); }

const GanamSpec& ganam_by_name(std::string_view name) {
  for (const auto& g : table()) {
    if (g.name == name) return g;
  }
  throw UnknownGanamError("unknown ganam \"" + std::string(name) + "\"");
}

const GanamSpec* ganam_by_pattern(std::span<const LGMark> pattern) {
  for (const auto& g : table()) {
    if (std::ranges::equal(g.pattern, pattern)) return &g;
  }
  return nullptr;
}

std::vector<const GanamSpec*> expand_class(FunctionalClass c) {
  std::vector<const GanamSpec*> out;
  if (c == FunctionalClass::kNone) return out;
  for (const auto& g : table()) {
    if (g.functional_class == c) out.push_back(&g);
  }
  return out;
}

}  // namespace chandassu
