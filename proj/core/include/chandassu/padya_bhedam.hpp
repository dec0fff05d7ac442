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
#include <optional>
#include <span>
#include <string>
#include <string_view>
#include <utility>
#include <vector>

#include "chandassu/ganam.hpp"
#include "chandassu/lakshanam.hpp"
#include "chandassu/meter_config.hpp"
#include "chandassu/prosody.hpp"

namespace chandassu {

// How far the cursor moves past a position none of whose alternatives
// matched.
enum class UnmatchedAdvance : unsigned char {
  kLastAlternative,   // length of the last alternative tried (default)
  kFirstAlternative,  // length of the first alternative (strict reading)
};

struct MatchResult {
  PaadamBreakdown breakdown;
  std::size_t gana_kramam_hits = 0;
  std::size_t paadam_count = 0;  // lines whose first cell holds >1 token
};

// Greedy left-to-right tiling of the LG stream against the configured
// ganam sequence. Stops once the stream is consumed.
MatchResult match_ganams(std::span<const AnnotatedToken> lg_data,
                         const PadyamConfig& config,
                         UnmatchedAdvance advance = UnmatchedAdvance::kLastAlternative);

struct ScoreReport {
  std::string type_name;
  ProsodicClass prosodic_class = ProsodicClass::kVruttamu;

  double n_paadalu_score = 0;
  double gana_kramam_score = 0;
  double yati_score = 0;
  std::optional<double> n_aksharaalu_score;  // Vruttamu types only
  std::optional<double> prasa_score;         // when prasa is required
  double chandassu_score = 0;                // mean of the scores present
  // n_aksharaalu_score went below zero: more stray aksharams than matched.
  bool n_aksharaalu_negative = false;

  std::vector<AnnotatedToken> lg_data;
  std::vector<std::size_t> token_lines;  // source line of each lg_data entry
  PaadamBreakdown paadam_breakdown;
  std::size_t gana_kramam_hits = 0;
  std::size_t paadam_count = 0;
  YatiVerdict yati;
  std::optional<AksharamToken> prasa_modal_aksharam;

  // Present micro-scores in reporting order, keyed by their report names.
  std::vector<std::pair<std::string_view, double>> micro_scores() const;
};

struct EvaluateOptions {
  UnmatchedAdvance advance = UnmatchedAdvance::kLastAlternative;
};

// Scores an LG stream against one meter. `token_lines` may be empty.
ScoreReport evaluate_lg(std::vector<AnnotatedToken> lg_data, const PadyamConfig& config,
                        const YatiTable& table, EvaluateOptions options = {},
                        std::vector<std::size_t> token_lines = {});

class Evaluator {
 public:
  explicit Evaluator(const MeterLibrary& library = MeterLibrary::builtin(),
                     EvaluateOptions options = {})
      : library_(&library), options_(options) {}

  // Throws UnknownTypeError, EmptyInputError, InputShapeError, LookupMissError.
  ScoreReport evaluate(std::string_view text, std::string_view type_name) const;

  // Scores every configured type and keeps the best; ties go to the type
  // listed first.
  std::pair<std::string, ScoreReport> evaluate_auto(std::string_view text) const;

  const MeterLibrary& library() const { return *library_; }

 private:
  struct Prepared {
    std::vector<AnnotatedToken> lg;
    std::vector<std::size_t> lines;
  };
  static Prepared prepare(std::string_view text);

  const MeterLibrary* library_;
  EvaluateOptions options_;
};

ScoreReport evaluate(std::string_view text, std::string_view type_name);
std::pair<std::string, ScoreReport> evaluate_auto(std::string_view text);

}  // namespace chandassu
