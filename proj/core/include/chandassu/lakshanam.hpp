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

#include <vector>

#include "chandassu/ganam.hpp"
#include "chandassu/meter_config.hpp"
#include "chandassu/tokenizer.hpp"

namespace chandassu {

struct YatiVerdict {
  std::vector<bool> per_paadam;  // one entry per examined line

  std::size_t passed() const;
};

// Generic yati: the vowels of both aksharams fall in one vowel class and
// some base letter of each shares a letter class. The vowel test is
// decided by the first argument's class, so the check is not symmetric
// when only one vowel appears in the table.
bool yati_check(const AksharamToken& first_letter,
                const AksharamToken& yati_sthanam_letter, const YatiTable& table);

// Yati over the lines listed in config.yati_paadalu that are present in
// `paadam_data`. Unless `only_generic` is set, a generic failure may still
// pass as prasa-yati: equal vowel length on the first aksharams and equal
// consonant skeletons on the second aksharams.
// Throws ConfigShapeError when the yati ganam lies beyond a line's cells.
YatiVerdict prasa_yati_check(const PaadamBreakdown& paadam_data,
                             const PadyamConfig& config, bool only_generic,
                             const YatiTable& table);

}  // namespace chandassu
