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

#include <cstddef>
#include <filesystem>
#include <optional>
#include <span>
#include <string>
#include <string_view>
#include <utility>
#include <vector>

#include "chandassu/ganam.hpp"

namespace chandassu {

enum class ProsodicClass : unsigned char { kVruttamu, kJaathi, kVupajaathi };

std::string_view to_string(ProsodicClass c);
// Case-insensitive. Throws ConfigValidationError.
ProsodicClass parse_prosodic_class(std::string_view name);

struct YatiPosition {
  std::size_t ganam = 1;   // 1-based ganam index within the line
  std::size_t offset = 0;  // 0-based aksharam offset within that ganam
};

// Candidate ganams for one position, tried in order.
using GanamAlternatives = std::vector<const GanamSpec*>;

struct PadyamConfig {
  std::string type_name;
  ProsodicClass prosodic_class = ProsodicClass::kVruttamu;
  int n_paadalu = 4;
  // Physical lines per paadam; seesamu writes each paadam over two lines.
  int lines_per_paadam = 1;
  std::vector<std::vector<GanamAlternatives>> gana_kramam;  // line, position
  std::optional<int> n_aksharalu;
  YatiPosition yati_sthanam;
  std::vector<int> yati_paadalu;  // 1-based physical line numbers
  bool prasa_required = false;
  bool only_generic_yati = false;

  std::size_t total_ganams() const;
};

// Yati equivalence classes. Symbols belong to at most one class per kind.
class YatiTable {
 public:
  // Stands for the implicit vowel of a consonant without a vowel sign.
  static constexpr char32_t kInherentVowel = U'\0';

  YatiTable(std::vector<std::u32string> vowel_classes,
            std::vector<std::u32string> letter_classes);

  // Parses the line-oriented text format. Throws ConfigValidationError.
  static YatiTable parse(std::string_view text);

  const std::vector<std::u32string>& vowel_classes() const { return vowel_; }
  const std::vector<std::u32string>& letter_classes() const { return letter_; }

  std::optional<std::size_t> letter_class_of(char32_t letter) const;

 private:
  std::vector<std::u32string> vowel_;
  std::vector<std::u32string> letter_;
};

// Parses and validates one config document (JSON). Throws
// ConfigValidationError naming the violated rule.
PadyamConfig parse_config(std::string_view json_text);

// The set of meter configurations plus the yati table used to evaluate them.
class MeterLibrary {
 public:
  // Configurations compiled into the library; parsed once.
  static const MeterLibrary& builtin();

  // Reads <type>.json files and yati_table.txt from `dir`. Built-in data
  // fills in whatever the directory does not provide. Types not among the
  // built-in eight are appended in file-name order.
  static MeterLibrary from_directory(const std::filesystem::path& dir);

  // Throws UnknownTypeError.
  const PadyamConfig& config(std::string_view type_name) const;
  bool has_type(std::string_view type_name) const;

  // Canonical order: Vruttamu, Jaathi, then Vupajaathi types.
  std::span<const PadyamConfig> configs() const { return configs_; }
  const YatiTable& yati_table() const { return yati_; }

 private:
  MeterLibrary(std::vector<PadyamConfig> configs, YatiTable yati)
      : configs_(std::move(configs)), yati_(std::move(yati)) {}

  std::vector<PadyamConfig> configs_;
  YatiTable yati_;
};

// Built-in lookups.
PadyamConfig load_config(std::string_view type_name);
std::vector<std::pair<std::string, ProsodicClass>> list_types();

// Raw text of a built-in data file ("vutpalamaala.json", "yati_table.txt").
std::optional<std::string_view> builtin_file(std::string_view name);

}  // namespace chandassu
