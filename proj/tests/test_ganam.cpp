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


#include <map>
#include <set>

#include <gtest/gtest.h>

#include "chandassu/errors.hpp"
#include "chandassu/ganam.hpp"

namespace {

using namespace chandassu;

std::vector<LGMark> marks(std::string_view text) {
  std::vector<LGMark> out;
  for (char c : text) out.push_back(*parse_mark(c));
  return out;
}

TEST(Ganam, Lookups) {
  EXPECT_EQ(ganam_by_name("BHA").pattern_text, "U||");
  EXPECT_EQ(ganam_by_name("SALA").pattern_text, "||U|");
  EXPECT_EQ(ganam_by_pattern(marks("U|U"))->name, "RA");
  EXPECT_EQ(ganam_by_pattern(marks("UU"))->name, "GAA");
  EXPECT_EQ(ganam_by_pattern(marks("UUUU")), nullptr);
  EXPECT_EQ(ganam_by_pattern({}), nullptr);
  EXPECT_THROW(ganam_by_name("XA"), UnknownGanamError);
}

TEST(Ganam, TableIsBijective) {
  std::set<std::string_view> names;
  std::set<std::vector<LGMark>> patterns;
  for (const auto& g : all_ganams()) {
    EXPECT_TRUE(names.insert(g.name).second) << g.name;
    EXPECT_TRUE(patterns.insert(g.pattern).second) << g.name;
    EXPECT_EQ(&ganam_by_name(g.name), &g);
    EXPECT_EQ(ganam_by_pattern(g.pattern), &g);
    EXPECT_EQ(render_marks(g.pattern), g.pattern_text);
  }
  EXPECT_EQ(names.size(), 17u);
}

TEST(Ganam, PatternLengthPartition) {
  std::map<std::size_t, int> by_length;
  for (const auto& g : all_ganams()) ++by_length[g.size()];
  EXPECT_EQ(by_length, (std::map<std::size_t, int>{{1, 2}, {2, 4}, {3, 8}, {4, 3}}));
}

TEST(Ganam, EveryTrisyllableIsNamed) {
  for (int bits = 0; bits < 8; ++bits) {
    std::vector<LGMark> p;
    for (int k = 2; k >= 0; --k) p.push_back((bits >> k) & 1 ? LGMark::kGuruvu : LGMark::kLaghuvu);
    EXPECT_NE(ganam_by_pattern(p), nullptr);
  }
}

TEST(Ganam, FunctionalClasses) {
  std::set<std::string_view> indra, surya;
  for (const auto* g : expand_class(FunctionalClass::kIndra)) indra.insert(g->name);
  for (const auto* g : expand_class(FunctionalClass::kSurya)) surya.insert(g->name);
  EXPECT_EQ(indra, (std::set<std::string_view>{"BHA", "RA", "THA", "NALA", "NAGA", "SALA"}));
  EXPECT_EQ(surya, (std::set<std::string_view>{"HA", "NA"}));
  EXPECT_TRUE(expand_class(FunctionalClass::kNone).empty());
  for (const auto& g : all_ganams()) {
    EXPECT_EQ(indra.count(g.name) + surya.count(g.name) > 0,
              g.functional_class != FunctionalClass::kNone);
  }
}

TEST(GanamMatchCell, UnmatchedName) {
  GanamMatchCell cell;
  EXPECT_EQ(cell.matched_name(), "UnMatched");
  cell.matched = &ganam_by_name("MA");
  EXPECT_EQ(cell.matched_name(), "MA");
}

}  // namespace
