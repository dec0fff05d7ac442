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

// Emits core/src/grapheme_break_table.inc from the ICU character database.
//
//   g++ -std=c++20 scripts/gen_grapheme_table.cpp -licuuc -o /tmp/gen
//   /tmp/gen > core/src/grapheme_break_table.inc
//
// Each row is {first, last, property}. The property byte packs the
// Grapheme_Cluster_Break value in the low nibble (numbering of
// chandassu::unicode::GraphemeBreak) and Extended_Pictographic in bit 4.

#include <unicode/uchar.h>
#include <unicode/uversion.h>

#include <cstdio>

namespace {

int remap(int icu_value) {
  switch (icu_value) {
    case U_GCB_CR: return 1;
    case U_GCB_LF: return 2;
    case U_GCB_CONTROL: return 3;
    case U_GCB_EXTEND: return 4;
    case U_GCB_ZWJ: return 5;
    case U_GCB_REGIONAL_INDICATOR: return 6;
    case U_GCB_PREPEND: return 7;
    case U_GCB_SPACING_MARK: return 8;
    case U_GCB_L: return 9;
    case U_GCB_V: return 10;
    case U_GCB_T: return 11;
    case U_GCB_LV: return 12;
    case U_GCB_LVT: return 13;
    default: return 0;
  }
}

int property(UChar32 cp) {
  int value = remap(u_getIntPropertyValue(cp, UCHAR_GRAPHEME_CLUSTER_BREAK));
  if (u_hasBinaryProperty(cp, UCHAR_EXTENDED_PICTOGRAPHIC)) value |= 0x10;
  return value;
}

}  // namespace

int main() {
  std::printf("// Generated by scripts/gen_grapheme_table.cpp from Unicode %s.\n",
              U_UNICODE_VERSION);
  std::printf("// Do not edit by hand.\n");
  UChar32 start = 0;
  int current = property(0);
  for (UChar32 cp = 1; cp <= 0x110000; ++cp) {
    int next = cp <= 0x10FFFF ? property(cp) : -1;
    if (next != current) {
      if (current != 0) {
        std::printf("{0x%04X, 0x%04X, 0x%02X},\n", start, cp - 1, current);
      }
      start = cp;
      current = next;
    }
  }
  return 0;
}
