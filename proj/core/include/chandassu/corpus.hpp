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
#include <iosfwd>
#include <map>
#include <optional>
#include <span>
#include <string>
#include <vector>

#include "chandassu/meter_config.hpp"
#include "chandassu/padya_bhedam.hpp"

namespace chandassu {

struct PadyamRecord {
  std::string type;        // lower-case type name
  std::string padyam;
  std::string class_name;  // canonical spelling, e.g. "Vruttamu"
  std::string satakam;
  std::vector<LGMark> lg;
  // Per-token annotation text, when the source carried it.
  std::vector<std::string> lg_tokens;

  friend bool operator==(const PadyamRecord&, const PadyamRecord&) = default;
};

struct LoadIssue {
  std::string source;  // file the row came from
  std::size_t row = 0; // 1-based record number within that file
  std::string message;
};

struct LoadResult {
  std::vector<PadyamRecord> records;
  std::vector<LoadIssue> issues;
};

struct LoadOptions {
  const MeterLibrary* library = nullptr;  // defaults to the built-in one
  bool strict = false;                    // throw SchemaError on the first bad row
};

// Reads a dataset file or every dataset file in a directory. Accepts JSON
// Lines (.jsonl), a JSON array or {"data": [...]} document (.json), and
// CSV with a header row (.csv). Rows that fail validation are reported in
// LoadResult::issues. Throws IoError when nothing can be read.
LoadResult load_dataset(const std::filesystem::path& path, const LoadOptions& options = {});

// In-memory variants; `source` labels issues.
LoadResult parse_jsonl(std::string_view text, const std::string& source = "<jsonl>",
                       const LoadOptions& options = {});
LoadResult parse_json(std::string_view text, const std::string& source = "<json>",
                      const LoadOptions& options = {});
LoadResult parse_csv(std::string_view text, const std::string& source = "<csv>",
                     const LoadOptions& options = {});

void write_jsonl(std::ostream& out, std::span<const PadyamRecord> records);

struct RecordScore {
  std::size_t index = 0;  // position in the benchmark input
  std::string type;
  std::string class_name;
  std::string satakam;
  bool ok = true;
  std::string error;  // set when evaluation failed; scores are then 0
  double n_paadalu_score = 0;
  double gana_kramam_score = 0;
  double yati_score = 0;
  std::optional<double> n_aksharaalu_score;
  std::optional<double> prasa_score;
  double chandassu_score = 0;
};

// Means over the records in a group. Optional scores average over the
// records that carry them and stay empty when none does.
struct ScoreMeans {
  std::size_t count = 0;
  std::size_t failures = 0;
  double n_paadalu_score = 0;
  double gana_kramam_score = 0;
  double yati_score = 0;
  std::optional<double> n_aksharaalu_score;
  std::optional<double> prasa_score;
  double chandassu_score = 0;
};

struct EvaluationSummary {
  ScoreMeans overall;
  std::vector<std::pair<std::string, ScoreMeans>> per_class;  // canonical order
  std::vector<std::pair<std::string, ScoreMeans>> per_type;   // canonical order
  std::map<std::string, std::size_t> per_satakam_counts;
  std::vector<RecordScore> records;  // in input order
};

struct BenchmarkOptions {
  const MeterLibrary* library = nullptr;
  EvaluateOptions evaluate;
  unsigned threads = 0;  // 0: hardware concurrency
};

// Evaluates each record against its labelled type. Failures are scored 0
// and counted, never rethrown.
EvaluationSummary run_benchmark(std::span<const PadyamRecord> records,
                                const BenchmarkOptions& options = {});

// Recomputes group means from per-record scores.
EvaluationSummary summarize(std::vector<RecordScore> records, const MeterLibrary& library);

struct LgDisagreement {
  std::size_t record = 0;
  std::size_t token = 0;  // index into the generated stream
  std::string token_text;
  std::optional<LGMark> expected;  // stored annotation; empty past its end
  std::optional<LGMark> actual;    // generated mark; empty past its end
};

struct LgAgreementReport {
  std::size_t records = 0;
  std::size_t unannotated = 0;      // records without an lg field, not compared
  std::size_t tokens_compared = 0;  // max of both lengths, summed
  std::size_t tokens_agreeing = 0;
  std::vector<std::size_t> failed_records;  // tokenization or lookup failures
  std::vector<LgDisagreement> disagreements;

  double agreement() const {
    return tokens_compared ? static_cast<double>(tokens_agreeing) / tokens_compared : 1.0;
  }
};

LgAgreementReport verify_lg_annotations(std::span<const PadyamRecord> records);

// Table with one row per class (or type) and the columns c_na c_np c_gk
// c_yt c_pr C in percent; "-" marks constraints that do not apply.
std::string render_class_table(const EvaluationSummary& summary);
std::string render_type_table(const EvaluationSummary& summary);

// Per-record scores as CSV.
void write_record_csv(std::ostream& out, const EvaluationSummary& summary);

}  // namespace chandassu
