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


#include "chandassu/errors.hpp"

#include <cstdio>

#include "chandassu/unicode.hpp"

namespace chandassu {
namespace {

std::string describe_miss(const std::string& token, char32_t cp) {
  char hex[16];
  std::snprintf(hex, sizeof hex, "U+%04X", static_cast<unsigned>(cp));
  return "no laghuvu/guruvu weight for final codepoint " + std::string(hex) +
         " of token \"" + token + "\"";
}

}  // namespace

LookupMissError::LookupMissError(const std::string& token, char32_t codepoint)
    : Error(describe_miss(token, codepoint)), codepoint_(codepoint) {}

SchemaError::SchemaError(std::size_t row, const std::string& message)
    : Error("row " + std::to_string(row) + ": " + message), row_(row) {}

}  // namespace chandassu
