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


#include "chandassu/padya_bhedam.hpp"

#include <algorithm>
#include <map>

#include "chandassu/errors.hpp"
#include "chandassu/varnamala.hpp"

namespace chandassu {
namespace {

bool matches(std::span<const AnnotatedToken> slice, const GanamSpec& g) {
  if (slice.size() != g.size()) return false;
  for (std::size_t k = 0; k < slice.size(); ++k) {
    if (slice[k].mark != g.pattern[k]) return false;
  }
  return true;
}

std::vector<AnnotatedToken> take(std::span<const AnnotatedToken> lg, std::size_t from,
                                 std::size_t count) {
  if (from >= lg.size()) return {};
  const std::size_t n = std::min(count, lg.size() - from);
  return {lg.begin() + from, lg.begin() + from + n};
}

}  // namespace

MatchResult match_ganams(std::span<const AnnotatedToken> lg_data,
                         const PadyamConfig& config, UnmatchedAdvance advance) {
  MatchResult result;
  std::size_t end = 0;
  for (const auto& line : config.gana_kramam) {
    PaadamRow row;
    for (const auto& alternatives : line) {
      const GanamSpec* hit = nullptr;
      for (const GanamSpec* g : alternatives) {
        const auto from = std::min(end, lg_data.size());
        const auto n = std::min(g->size(), lg_data.size() - from);
        if (matches(lg_data.subspan(from, n), *g)) {
          hit = g;
          break;
        }
      }
      const GanamSpec* step = hit;
      if (!step) {
        step = advance == UnmatchedAdvance::kLastAlternative ? alternatives.back()
                                                             : alternatives.front();
      } else {
        ++result.gana_kramam_hits;
      }
      row.push_back({take(lg_data, end, step->size()), hit});
      end += step->size();
    }
    if (row.front().tokens.size() > 1) ++result.paadam_count;
    result.breakdown.push_back(std::move(row));
    if (end >= lg_data.size()) break;
  }
  return result;
}

std::vector<std::pair<std::string_view, double>> ScoreReport::micro_scores() const {
  std::vector<std::pair<std::string_view, double>> out = {
      {"n_paadalu_score", n_paadalu_score},
      {"gana_kramam_score", gana_kramam_score},
      {"yati_score", yati_score},
  };
  if (n_aksharaalu_score) out.emplace_back("n_aksharaalu_score", *n_aksharaalu_score);
  if (prasa_score) out.emplace_back("prasa_score", *prasa_score);
  return out;
}

ScoreReport evaluate_lg(std::vector<AnnotatedToken> lg_data, const PadyamConfig& config,
                        const YatiTable& table, EvaluateOptions options,
                        std::vector<std::size_t> token_lines) {
  if (lg_data.empty()) throw EmptyInputError("no aksharams to evaluate");

  ScoreReport r;
  r.type_name = config.type_name;
  r.prosodic_class = config.prosodic_class;

  auto match = match_ganams(lg_data, config, options.advance);
  r.yati = prasa_yati_check(match.breakdown, config, config.only_generic_yati, table);

  const double n_paadalu = config.n_paadalu;
  r.gana_kramam_hits = match.gana_kramam_hits;
  r.paadam_count = match.paadam_count;
  r.n_paadalu_score =
      static_cast<double>(match.paadam_count) / config.lines_per_paadam / n_paadalu;
  r.gana_kramam_score =
      static_cast<double>(match.gana_kramam_hits) / static_cast<double>(config.total_ganams());
  r.yati_score = static_cast<double>(r.yati.passed()) /
                 static_cast<double>(config.yati_paadalu.size());

  if (config.n_aksharalu) {
    std::size_t counted = 0;
    for (const auto& row : match.breakdown) {
      for (const auto& cell : row) counted += cell.tokens.size();
    }
    const double extra = static_cast<double>(lg_data.size() - counted);
    r.n_aksharaalu_score =
        (static_cast<double>(counted) - extra) / (n_paadalu * *config.n_aksharalu);
    r.n_aksharaalu_negative = *r.n_aksharaalu_score < 0;
  }

  if (config.prasa_required) {
    // Second aksharam of each line with its vowel sign removed; first seen
    // wins among equally frequent skeletons.
    std::vector<std::pair<std::u32string, std::size_t>> frequency;
    for (const auto& row : match.breakdown) {
      const auto& first = row.front().tokens;
      if (first.size() < 2) continue;
      auto key = varnamala::remove_gunintha_chihnam(first[1].token.codepoints());
      auto it = std::find_if(frequency.begin(), frequency.end(),
                             [&](const auto& e) { return e.first == key; });
      if (it == frequency.end()) {
        frequency.emplace_back(std::move(key), 1);
      } else {
        ++it->second;
      }
    }
    std::size_t best = 0;
    for (const auto& [key, count] : frequency) {
      if (count > best) {
        best = count;
        r.prasa_modal_aksharam = AksharamToken(key);
      }
    }
    r.prasa_score = static_cast<double>(best) / n_paadalu;
  }

  const auto scores = r.micro_scores();
  double sum = 0;
  for (const auto& [_, v] : scores) sum += v;
  r.chandassu_score = sum / static_cast<double>(scores.size());

  r.paadam_breakdown = std::move(match.breakdown);
  r.lg_data = std::move(lg_data);
  r.token_lines = std::move(token_lines);
  return r;
}

Evaluator::Prepared Evaluator::prepare(std::string_view text) {
  auto located = tokenize_located(text);
  if (located.empty()) throw EmptyInputError("input contains no Telugu aksharams");
  std::vector<AksharamToken> tokens;
  Prepared p;
  tokens.reserve(located.size());
  p.lines.reserve(located.size());
  for (auto& t : located) {
    tokens.push_back(std::move(t.token));
    p.lines.push_back(t.line);
  }
  p.lg = generate_lg(tokens);
  return p;
}

ScoreReport Evaluator::evaluate(std::string_view text, std::string_view type_name) const {
  const PadyamConfig& config = library_->config(type_name);
  auto p = prepare(text);
  return evaluate_lg(std::move(p.lg), config, library_->yati_table(), options_,
                     std::move(p.lines));
}

std::pair<std::string, ScoreReport> Evaluator::evaluate_auto(std::string_view text) const {
  const auto p = prepare(text);
  std::optional<ScoreReport> best;
  for (const auto& config : library_->configs()) {
    auto r = evaluate_lg(p.lg, config, library_->yati_table(), options_, p.lines);
    if (!best || r.chandassu_score > best->chandassu_score) best = std::move(r);
  }
  std::string name = best->type_name;
  return {std::move(name), std::move(*best)};
}

ScoreReport evaluate(std::string_view text, std::string_view type_name) {
  return Evaluator().evaluate(text, type_name);
}

std::pair<std::string, ScoreReport> evaluate_auto(std::string_view text) {
  return Evaluator().evaluate_auto(text);
}

}  // namespace chandassu
