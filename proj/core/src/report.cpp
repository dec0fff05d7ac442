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


#include "chandassu/report.hpp"

#include <cstdio>
#include <sstream>

namespace chandassu {
namespace {

using nlohmann::ordered_json;

std::string fixed2(double v) {
  char buf[32];
  std::snprintf(buf, sizeof buf, "%.2f", v);
  return buf;
}

ordered_json micro_json(const ScoreReport& r) {
  ordered_json m = ordered_json::object();
  for (const auto& [name, value] : r.micro_scores()) m[std::string(name)] = value;
  return m;
}

ordered_json optional_number(const std::optional<double>& v) {
  return v ? ordered_json(*v) : ordered_json(nullptr);
}

ordered_json means_json(const ScoreMeans& m) {
  return {{"count", m.count},
          {"failures", m.failures},
          {"n_paadalu_score", m.n_paadalu_score},
          {"gana_kramam_score", m.gana_kramam_score},
          {"yati_score", m.yati_score},
          {"n_aksharaalu_score", optional_number(m.n_aksharaalu_score)},
          {"prasa_score", optional_number(m.prasa_score)},
          {"chandassu_score", m.chandassu_score}};
}

}  // namespace

ordered_json analysis_json(const ScoreReport& r, bool type_detected) {
  ordered_json doc;
  doc["schema_version"] = kReportSchemaVersion;
  doc["detected_type"] = r.type_name;
  doc["type_source"] = type_detected ? "detected" : "given";
  doc["class"] = std::string(to_string(r.prosodic_class));
  doc["chandassu_score"] = r.chandassu_score;
  doc["micro_score"] = micro_json(r);
  doc["flags"] = {{"n_aksharaalu_negative", r.n_aksharaalu_negative}};
  doc["lg"] = render_lg(r.lg_data);

  ordered_json lines = ordered_json::array();
  std::size_t current = 0;
  bool open = false;
  for (std::size_t i = 0; i < r.lg_data.size(); ++i) {
    const std::size_t line = i < r.token_lines.size() ? r.token_lines[i] : 0;
    if (!open || line != current) {
      lines.push_back(ordered_json::array());
      current = line;
      open = true;
    }
    lines.back().push_back({{"token", r.lg_data[i].token.str()},
                            {"mark", std::string(1, render(r.lg_data[i].mark))}});
  }
  doc["tokens"] = std::move(lines);

  ordered_json rows = ordered_json::array();
  for (const auto& row : r.paadam_breakdown) {
    ordered_json cells = ordered_json::array();
    for (const auto& cell : row) {
      ordered_json tokens = ordered_json::array();
      for (const auto& t : cell.tokens) tokens.push_back(t.token.str());
      cells.push_back({{"tokens", std::move(tokens)},
                       {"marks", render_lg(cell.tokens)},
                       {"matched_name", std::string(cell.matched_name())}});
    }
    rows.push_back(std::move(cells));
  }
  doc["ganam_cells"] = std::move(rows);

  ordered_json verdicts = ordered_json::array();
  for (bool v : r.yati.per_paadam) verdicts.push_back(v);
  doc["yati_verdicts"] = std::move(verdicts);
  doc["prasa_modal_aksharam"] =
      r.prasa_modal_aksharam ? ordered_json(r.prasa_modal_aksharam->str()) : ordered_json(nullptr);
  doc["gana_kramam_hits"] = r.gana_kramam_hits;
  doc["paadam_count"] = r.paadam_count;
  return doc;
}

ordered_json types_json(const MeterLibrary& library) {
  ordered_json out = ordered_json::array();
  for (const auto& c : library.configs()) {
    ordered_json scores = {"n_paadalu_score", "gana_kramam_score", "yati_score"};
    if (c.n_aksharalu) scores.push_back("n_aksharaalu_score");
    if (c.prasa_required) scores.push_back("prasa_score");
    out.push_back({{"type_name", c.type_name},
                   {"class_name", std::string(to_string(c.prosodic_class))},
                   {"constraints",
                    {{"n_paadalu", c.n_paadalu},
                     {"lines", c.gana_kramam.size()},
                     {"n_aksharalu", c.n_aksharalu ? ordered_json(*c.n_aksharalu)
                                                   : ordered_json(nullptr)},
                     {"prasa", c.prasa_required},
                     {"yati_sthanam", {c.yati_sthanam.ganam, c.yati_sthanam.offset}},
                     {"only_generic_yati", c.only_generic_yati}}},
                   {"micro_scores", std::move(scores)}});
  }
  return out;
}

ordered_json summary_json(const EvaluationSummary& s) {
  ordered_json doc;
  doc["schema_version"] = kReportSchemaVersion;
  doc["overall"] = means_json(s.overall);
  ordered_json classes = ordered_json::object();
  for (const auto& [name, m] : s.per_class) classes[name] = means_json(m);
  doc["per_class"] = std::move(classes);
  ordered_json types = ordered_json::object();
  for (const auto& [name, m] : s.per_type) types[name] = means_json(m);
  doc["per_type"] = std::move(types);
  ordered_json satakams = ordered_json::object();
  for (const auto& [name, n] : s.per_satakam_counts) satakams[name] = n;
  doc["per_satakam_counts"] = std::move(satakams);
  ordered_json failures = ordered_json::array();
  for (const auto& r : s.records) {
    if (!r.ok) failures.push_back({{"index", r.index}, {"type", r.type}, {"error", r.error}});
  }
  doc["failures"] = std::move(failures);
  return doc;
}

ordered_json lg_agreement_json(const LgAgreementReport& report) {
  auto mark = [](const std::optional<LGMark>& m) {
    return m ? ordered_json(std::string(1, render(*m))) : ordered_json(nullptr);
  };
  ordered_json doc;
  doc["schema_version"] = kReportSchemaVersion;
  doc["records"] = report.records;
  doc["unannotated_records"] = report.unannotated;
  doc["tokens_compared"] = report.tokens_compared;
  doc["tokens_agreeing"] = report.tokens_agreeing;
  doc["agreement"] = report.agreement();
  doc["failed_records"] = report.failed_records;
  ordered_json items = ordered_json::array();
  for (const auto& d : report.disagreements) {
    items.push_back({{"record", d.record},
                     {"token_index", d.token},
                     {"token", d.token_text},
                     {"expected", mark(d.expected)},
                     {"actual", mark(d.actual)}});
  }
  doc["disagreements"] = std::move(items);
  return doc;
}

std::string dump(const ordered_json& doc) { return doc.dump(2) + "\n"; }

std::string render_report_text(const ScoreReport& r, bool type_detected) {
  std::ostringstream out;
  out << "type: " << r.type_name << " (" << to_string(r.prosodic_class) << ")"
      << (type_detected ? " [detected]" : "") << '\n';
  out << "lg:   " << render_lg(r.lg_data) << '\n';
  out << "ganams:\n";
  for (std::size_t i = 0; i < r.paadam_breakdown.size(); ++i) {
    out << "  " << i + 1 << ':';
    for (const auto& cell : r.paadam_breakdown[i]) {
      out << ' ' << cell.matched_name() << '[';
      for (const auto& t : cell.tokens) out << t.token.str();
      out << ']';
    }
    out << '\n';
  }
  out << "yati:";
  for (bool v : r.yati.per_paadam) out << ' ' << (v ? "pass" : "fail");
  out << '\n';
  if (r.prasa_modal_aksharam) out << "prasa aksharam: " << r.prasa_modal_aksharam->str() << '\n';
  for (const auto& [name, value] : r.micro_scores()) {
    out << name << ": " << fixed2(value * 100.0) << '\n';
  }
  out << "chandassu_score: " << fixed2(r.chandassu_score * 100.0) << '\n';
  if (r.n_aksharaalu_negative) out << "note: n_aksharaalu_score is negative\n";
  return out.str();
}

}  // namespace chandassu
