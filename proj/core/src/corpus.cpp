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


#include "chandassu/corpus.hpp"

#include <algorithm>
#include <atomic>
#include <cctype>
#include <cstdio>
#include <fstream>
#include <mutex>
#include <ostream>
#include <sstream>
#include <thread>

#include <nlohmann/json.hpp>

#include "chandassu/errors.hpp"
#include "chandassu/unicode.hpp"

namespace chandassu {
namespace {

using nlohmann::json;

const MeterLibrary& library_or_builtin(const MeterLibrary* library) {
  return library ? *library : MeterLibrary::builtin();
}

std::string trim(std::string_view s) {
  const auto b = s.find_first_not_of(" \t\r\n");
  if (b == std::string_view::npos) return {};
  const auto e = s.find_last_not_of(" \t\r\n");
  return std::string(s.substr(b, e - b + 1));
}

std::string lower(std::string s) {
  std::transform(s.begin(), s.end(), s.begin(),
                 [](unsigned char c) { return static_cast<char>(std::tolower(c)); });
  return s;
}

// Accepts "|" / "U" (any case for U) and ignores separators.
std::vector<LGMark> parse_mark_string(std::string_view s) {
  std::vector<LGMark> out;
  for (char c : s) {
    if (c == '|') {
      out.push_back(LGMark::kLaghuvu);
    } else if (c == 'U' || c == 'u') {
      out.push_back(LGMark::kGuruvu);
    } else if (!std::isspace(static_cast<unsigned char>(c)) && c != ',') {
      throw std::invalid_argument(std::string("unexpected lg symbol '") + c + "'");
    }
  }
  return out;
}

LGMark single_mark(const json& v) {
  if (!v.is_string()) throw std::invalid_argument("lg marks must be strings");
  const auto marks = parse_mark_string(v.get<std::string>());
  if (marks.size() != 1) throw std::invalid_argument("lg entry is not a single mark");
  return marks.front();
}

// Python literal lists ("[('అ', '|'), ...]") show up in CSV exports.
std::string python_to_json(std::string_view s) {
  std::string out;
  out.reserve(s.size());
  for (char c : s) {
    switch (c) {
      case '(': out.push_back('['); break;
      case ')': out.push_back(']'); break;
      case '\'': out.push_back('"'); break;
      default: out.push_back(c);
    }
  }
  return out;
}

void parse_lg(const json& v, PadyamRecord& r) {
  if (v.is_null()) return;
  if (v.is_string()) {
    const std::string s = trim(v.get<std::string>());
    if (!s.empty() && s.front() == '[') {
      json parsed = json::parse(s, nullptr, false);
      if (parsed.is_discarded()) parsed = json::parse(python_to_json(s), nullptr, false);
      if (parsed.is_discarded()) throw std::invalid_argument("unreadable lg list");
      parse_lg(parsed, r);
      return;
    }
    r.lg = parse_mark_string(s);
    return;
  }
  if (!v.is_array()) throw std::invalid_argument("lg must be a string or a list");
  bool any_token = false;
  for (const auto& item : v) {
    if (item.is_string()) {
      r.lg.push_back(single_mark(item));
      r.lg_tokens.emplace_back();
    } else if (item.is_array() && item.size() == 2 && item[0].is_string()) {
      r.lg_tokens.push_back(item[0].get<std::string>());
      r.lg.push_back(single_mark(item[1]));
      any_token = true;
    } else if (item.is_object() && item.contains("token")) {
      const auto& mark = item.contains("mark") ? item["mark"] : item.value("lg", json());
      r.lg_tokens.push_back(item["token"].get<std::string>());
      r.lg.push_back(single_mark(mark));
      any_token = true;
    } else {
      throw std::invalid_argument("unrecognised lg entry " + item.dump());
    }
  }
  if (!any_token) r.lg_tokens.clear();
}

std::string as_text(const json& v) {
  if (v.is_null()) return {};
  if (v.is_string()) return v.get<std::string>();
  return v.dump();
}

const json* field(const json& obj, std::initializer_list<const char*> names) {
  for (const char* n : names) {
    auto it = obj.find(n);
    if (it != obj.end()) return &*it;
  }
  return nullptr;
}

PadyamRecord record_from_json(const json& obj, const MeterLibrary& library) {
  if (!obj.is_object()) throw std::invalid_argument("record is not an object");
  PadyamRecord r;

  const json* type = field(obj, {"type", "padyam_type"});
  if (!type || !type->is_string()) throw std::invalid_argument("missing type");
  r.type = lower(trim(type->get<std::string>()));
  if (!library.has_type(r.type)) throw std::invalid_argument("unknown type \"" + r.type + "\"");
  const PadyamConfig& config = library.config(r.type);

  const json* text = field(obj, {"padyam", "text"});
  if (!text || !text->is_string()) throw std::invalid_argument("missing padyam");
  r.padyam = text->get<std::string>();

  r.class_name = std::string(to_string(config.prosodic_class));
  if (const json* cls = field(obj, {"class", "class_name", "prosodic_class"});
      cls && !cls->is_null()) {
    ProsodicClass parsed;
    try {
      parsed = parse_prosodic_class(trim(as_text(*cls)));
    } catch (const ConfigValidationError&) {
      throw std::invalid_argument("unknown class \"" + as_text(*cls) + "\"");
    }
    if (parsed != config.prosodic_class) {
      throw std::invalid_argument("class " + std::string(to_string(parsed)) +
                                  " does not match type " + r.type);
    }
  }

  if (const json* s = field(obj, {"satakam"})) r.satakam = as_text(*s);
  if (const json* lg = field(obj, {"lg", "laghuvu_guruvu"})) parse_lg(*lg, r);
  return r;
}

void take_record(LoadResult& result, const std::string& source, std::size_t row,
                 const json& obj, const LoadOptions& options) {
  try {
    result.records.push_back(record_from_json(obj, library_or_builtin(options.library)));
  } catch (const std::exception& e) {
    if (options.strict) throw SchemaError(row, source + ": " + e.what());
    result.issues.push_back({source, row, e.what()});
  }
}

std::vector<std::vector<std::string>> split_csv(std::string_view text) {
  std::vector<std::vector<std::string>> rows;
  std::vector<std::string> row;
  std::string cell;
  bool quoted = false;
  bool row_has_content = false;
  for (std::size_t i = 0; i < text.size(); ++i) {
    const char c = text[i];
    if (quoted) {
      if (c == '"' && i + 1 < text.size() && text[i + 1] == '"') {
        cell.push_back('"');
        ++i;
      } else if (c == '"') {
        quoted = false;
      } else {
        cell.push_back(c);
      }
      continue;
    }
    switch (c) {
      case '"':
        quoted = true;
        row_has_content = true;
        break;
      case ',':
        row.push_back(std::move(cell));
        cell.clear();
        row_has_content = true;
        break;
      case '\r':
        break;
      case '\n':
        if (row_has_content || !cell.empty()) {
          row.push_back(std::move(cell));
          rows.push_back(std::move(row));
        }
        row.clear();
        cell.clear();
        row_has_content = false;
        break;
      default:
        cell.push_back(c);
        row_has_content = true;
    }
  }
  if (row_has_content || !cell.empty()) {
    row.push_back(std::move(cell));
    rows.push_back(std::move(row));
  }
  return rows;
}

std::string read_file(const std::filesystem::path& path) {
  std::ifstream in(path, std::ios::binary);
  if (!in) throw IoError("cannot read " + path.string());
  std::ostringstream buf;
  buf << in.rdbuf();
  return buf.str();
}

void append(LoadResult& into, LoadResult&& from) {
  into.records.insert(into.records.end(), std::make_move_iterator(from.records.begin()),
                      std::make_move_iterator(from.records.end()));
  into.issues.insert(into.issues.end(), std::make_move_iterator(from.issues.begin()),
                     std::make_move_iterator(from.issues.end()));
}

LoadResult load_file(const std::filesystem::path& path, const LoadOptions& options) {
  const std::string text = read_file(path);
  const std::string ext = lower(path.extension().string());
  const std::string source = path.string();
  if (ext == ".csv") return parse_csv(text, source, options);
  if (ext == ".jsonl" || ext == ".ndjson") return parse_jsonl(text, source, options);
  // .json may still hold one record per line.
  const std::string_view body = unicode::strip_bom(text);
  const auto first = body.find_first_not_of(" \t\r\n");
  if (first != std::string_view::npos && body[first] == '[') {
    return parse_json(text, source, options);
  }
  if (json::accept(body)) return parse_json(text, source, options);
  return parse_jsonl(text, source, options);
}

json lg_to_json(const PadyamRecord& r) {
  if (r.lg_tokens.empty()) return render_marks(r.lg);
  json out = json::array();
  for (std::size_t i = 0; i < r.lg.size(); ++i) {
    out.push_back(json::array({r.lg_tokens[i], std::string(1, render(r.lg[i]))}));
  }
  return out;
}

// Sum of values in ascending order, so group means do not depend on the
// order records arrive in.
double ordered_mean(std::vector<double>& v) {
  if (v.empty()) return 0;
  std::sort(v.begin(), v.end());
  double sum = 0;
  for (double x : v) sum += x;
  return sum / static_cast<double>(v.size());
}

struct Accumulator {
  std::size_t failures = 0;
  std::vector<double> np, gk, yt, na, pr, c;

  void add(const RecordScore& s) {
    failures += !s.ok;
    np.push_back(s.n_paadalu_score);
    gk.push_back(s.gana_kramam_score);
    yt.push_back(s.yati_score);
    if (s.n_aksharaalu_score) na.push_back(*s.n_aksharaalu_score);
    if (s.prasa_score) pr.push_back(*s.prasa_score);
    c.push_back(s.chandassu_score);
  }

  ScoreMeans finish() {
    ScoreMeans m;
    m.count = c.size();
    m.failures = failures;
    m.n_paadalu_score = ordered_mean(np);
    m.gana_kramam_score = ordered_mean(gk);
    m.yati_score = ordered_mean(yt);
    if (!na.empty()) m.n_aksharaalu_score = ordered_mean(na);
    if (!pr.empty()) m.prasa_score = ordered_mean(pr);
    m.chandassu_score = ordered_mean(c);
    return m;
  }
};

RecordScore score_record(const PadyamRecord& record, std::size_t index,
                         const MeterLibrary& library, const EvaluateOptions& options) {
  RecordScore s;
  s.index = index;
  s.type = record.type;
  s.class_name = record.class_name;
  s.satakam = record.satakam;
  try {
    const ScoreReport r = Evaluator(library, options).evaluate(record.padyam, record.type);
    s.n_paadalu_score = r.n_paadalu_score;
    s.gana_kramam_score = r.gana_kramam_score;
    s.yati_score = r.yati_score;
    s.n_aksharaalu_score = r.n_aksharaalu_score;
    s.prasa_score = r.prasa_score;
    s.chandassu_score = r.chandassu_score;
  } catch (const std::exception& e) {
    s.ok = false;
    s.error = e.what();
    if (library.has_type(record.type)) {
      const PadyamConfig& config = library.config(record.type);
      if (config.n_aksharalu) s.n_aksharaalu_score = 0.0;
      if (config.prasa_required) s.prasa_score = 0.0;
    }
  }
  return s;
}

std::string percent_cell(const std::optional<double>& v) {
  if (!v) return "-";
  char buf[32];
  std::snprintf(buf, sizeof buf, "%.2f", *v * 100.0);
  return buf;
}

std::string render_table(const char* heading,
                         const std::vector<std::pair<std::string, ScoreMeans>>& rows,
                         const ScoreMeans* overall) {
  std::vector<std::vector<std::string>> cells;
  cells.push_back({heading, "c_na", "c_np", "c_gk", "c_yt", "c_pr", "C", "n"});
  auto add = [&](const std::string& name, const ScoreMeans& m) {
    cells.push_back({name, percent_cell(m.n_aksharaalu_score),
                     percent_cell(m.n_paadalu_score), percent_cell(m.gana_kramam_score),
                     percent_cell(m.yati_score), percent_cell(m.prasa_score),
                     percent_cell(m.chandassu_score), std::to_string(m.count)});
  };
  for (const auto& [name, m] : rows) {
    if (m.count) add(name, m);
  }
  if (overall) add("Overall", *overall);

  std::vector<std::size_t> width(cells.front().size(), 0);
  for (const auto& row : cells) {
    for (std::size_t i = 0; i < row.size(); ++i) width[i] = std::max(width[i], row[i].size());
  }
  std::ostringstream out;
  for (std::size_t r = 0; r < cells.size(); ++r) {
    for (std::size_t i = 0; i < cells[r].size(); ++i) {
      const auto& cell = cells[r][i];
      const std::string pad(width[i] - cell.size(), ' ');
      if (i == 0) {
        out << cell << pad;
      } else {
        out << "  " << pad << cell;
      }
    }
    out << '\n';
    if (r == 0) {
      std::size_t total = 0;
      for (auto w : width) total += w + 2;
      out << std::string(total - 2, '-') << '\n';
    }
  }
  return out.str();
}

std::string capitalize(std::string s) {
  if (!s.empty()) s[0] = static_cast<char>(std::toupper(static_cast<unsigned char>(s[0])));
  return s;
}

}  // namespace

LoadResult parse_jsonl(std::string_view text, const std::string& source,
                       const LoadOptions& options) {
  LoadResult result;
  std::istringstream in{std::string(unicode::strip_bom(text))};
  std::string line;
  std::size_t row = 0;
  while (std::getline(in, line)) {
    if (trim(line).empty()) continue;
    ++row;
    json obj = json::parse(line, nullptr, false);
    if (obj.is_discarded()) {
      if (options.strict) throw SchemaError(row, source + ": malformed JSON");
      result.issues.push_back({source, row, "malformed JSON"});
      continue;
    }
    take_record(result, source, row, obj, options);
  }
  return result;
}

LoadResult parse_json(std::string_view text, const std::string& source,
                      const LoadOptions& options) {
  LoadResult result;
  json doc = json::parse(unicode::strip_bom(text), nullptr, false);
  if (doc.is_discarded()) throw IoError(source + ": malformed JSON document");
  if (doc.is_object()) {
    if (auto it = doc.find("data"); it != doc.end() && it->is_array()) {
      doc = std::move(*it);
    } else {
      doc = json::array({std::move(doc)});
    }
  }
  if (!doc.is_array()) throw IoError(source + ": expected a list of records");
  std::size_t row = 0;
  for (const auto& obj : doc) take_record(result, source, ++row, obj, options);
  return result;
}

LoadResult parse_csv(std::string_view text, const std::string& source,
                     const LoadOptions& options) {
  LoadResult result;
  auto rows = split_csv(unicode::strip_bom(text));
  if (rows.empty()) return result;
  std::vector<std::string> header;
  for (const auto& h : rows.front()) header.push_back(lower(trim(h)));
  for (std::size_t r = 1; r < rows.size(); ++r) {
    const auto& cells = rows[r];
    if (cells.size() != header.size()) {
      const std::string msg = "expected " + std::to_string(header.size()) + " fields, found " +
                              std::to_string(cells.size());
      if (options.strict) throw SchemaError(r, source + ": " + msg);
      result.issues.push_back({source, r, msg});
      continue;
    }
    json obj = json::object();
    for (std::size_t i = 0; i < header.size(); ++i) obj[header[i]] = cells[i];
    take_record(result, source, r, obj, options);
  }
  return result;
}

LoadResult load_dataset(const std::filesystem::path& path, const LoadOptions& options) {
  namespace fs = std::filesystem;
  if (!fs::exists(path)) throw IoError(path.string() + " does not exist");
  if (!fs::is_directory(path)) return load_file(path, options);

  std::vector<fs::path> files;
  for (const auto& entry : fs::recursive_directory_iterator(path)) {
    if (!entry.is_regular_file()) continue;
    const auto ext = lower(entry.path().extension().string());
    if (ext == ".jsonl" || ext == ".ndjson" || ext == ".json" || ext == ".csv") {
      files.push_back(entry.path());
    }
  }
  if (files.empty()) throw IoError(path.string() + " holds no dataset files");
  std::sort(files.begin(), files.end());
  LoadResult result;
  for (const auto& f : files) append(result, load_file(f, options));
  return result;
}

void write_jsonl(std::ostream& out, std::span<const PadyamRecord> records) {
  for (const auto& r : records) {
    json obj = {{"type", r.type},
                {"padyam", r.padyam},
                {"class", r.class_name},
                {"satakam", r.satakam},
                {"lg", lg_to_json(r)}};
    out << obj.dump() << '\n';
  }
}

EvaluationSummary summarize(std::vector<RecordScore> records, const MeterLibrary& library) {
  EvaluationSummary summary;
  Accumulator overall;
  std::map<std::string, Accumulator> by_class;
  std::map<std::string, Accumulator> by_type;
  for (const auto& s : records) {
    overall.add(s);
    by_class[s.class_name].add(s);
    by_type[s.type].add(s);
    ++summary.per_satakam_counts[s.satakam];
  }
  summary.overall = overall.finish();

  for (ProsodicClass c : {ProsodicClass::kVruttamu, ProsodicClass::kJaathi,
                          ProsodicClass::kVupajaathi}) {
    const std::string name(to_string(c));
    auto it = by_class.find(name);
    summary.per_class.emplace_back(name, it == by_class.end() ? ScoreMeans{} : it->second.finish());
    if (it != by_class.end()) by_class.erase(it);
  }
  for (auto& [name, acc] : by_class) summary.per_class.emplace_back(name, acc.finish());

  for (const auto& config : library.configs()) {
    auto it = by_type.find(config.type_name);
    summary.per_type.emplace_back(config.type_name,
                                  it == by_type.end() ? ScoreMeans{} : it->second.finish());
    if (it != by_type.end()) by_type.erase(it);
  }
  for (auto& [name, acc] : by_type) summary.per_type.emplace_back(name, acc.finish());

  summary.records = std::move(records);
  return summary;
}

EvaluationSummary run_benchmark(std::span<const PadyamRecord> records,
                                const BenchmarkOptions& options) {
  const MeterLibrary& library = library_or_builtin(options.library);
  std::vector<RecordScore> scores(records.size());

  unsigned threads = options.threads ? options.threads : std::thread::hardware_concurrency();
  const auto cap = static_cast<unsigned>(std::min<std::size_t>(records.size(), 256));
  threads = std::clamp(threads, 1u, std::max(1u, cap));

  std::atomic<std::size_t> next{0};
  auto worker = [&] {
    for (std::size_t i = next++; i < records.size(); i = next++) {
      scores[i] = score_record(records[i], i, library, options.evaluate);
    }
  };
  if (threads == 1) {
    worker();
  } else {
    std::vector<std::thread> pool;
    for (unsigned t = 0; t < threads; ++t) pool.emplace_back(worker);
    for (auto& t : pool) t.join();
  }
  return summarize(std::move(scores), library);
}

LgAgreementReport verify_lg_annotations(std::span<const PadyamRecord> records) {
  LgAgreementReport report;
  for (std::size_t i = 0; i < records.size(); ++i) {
    const PadyamRecord& r = records[i];
    ++report.records;
    if (r.lg.empty()) {
      ++report.unannotated;
      continue;
    }
    std::vector<AnnotatedToken> generated;
    try {
      generated = generate_lg(std::string_view(r.padyam));
    } catch (const Error&) {
      report.failed_records.push_back(i);
      continue;
    }
    const std::size_t n = std::max(generated.size(), r.lg.size());
    report.tokens_compared += n;
    for (std::size_t k = 0; k < n; ++k) {
      std::optional<LGMark> expected;
      std::optional<LGMark> actual;
      if (k < r.lg.size()) expected = r.lg[k];
      if (k < generated.size()) actual = generated[k].mark;
      if (expected == actual) {
        ++report.tokens_agreeing;
        continue;
      }
      std::string text;
      if (k < generated.size()) {
        text = generated[k].token.str();
      } else if (k < r.lg_tokens.size()) {
        text = r.lg_tokens[k];
      }
      report.disagreements.push_back({i, k, std::move(text), expected, actual});
    }
  }
  return report;
}

std::string render_class_table(const EvaluationSummary& summary) {
  return render_table("Prosodic Class", summary.per_class, &summary.overall);
}

std::string render_type_table(const EvaluationSummary& summary) {
  std::vector<std::pair<std::string, ScoreMeans>> rows;
  for (const auto& [name, m] : summary.per_type) rows.emplace_back(capitalize(name), m);
  return render_table("Padyam Type", rows, nullptr);
}

void write_record_csv(std::ostream& out, const EvaluationSummary& summary) {
  auto quote = [](const std::string& s) {
    if (s.find_first_of(",\"\n\r") == std::string::npos) return s;
    std::string q = "\"";
    for (char c : s) {
      if (c == '"') q.push_back('"');
      q.push_back(c);
    }
    return q + "\"";
  };
  auto num = [](const std::optional<double>& v) {
    if (!v) return std::string();
    char buf[32];
    std::snprintf(buf, sizeof buf, "%.6f", *v);
    return std::string(buf);
  };
  out << "index,type,class,satakam,ok,n_paadalu_score,gana_kramam_score,yati_score,"
         "n_aksharaalu_score,prasa_score,chandassu_score,error\n";
  for (const auto& s : summary.records) {
    out << s.index << ',' << quote(s.type) << ',' << quote(s.class_name) << ','
        << quote(s.satakam) << ',' << (s.ok ? "true" : "false") << ','
        << num(s.n_paadalu_score) << ',' << num(s.gana_kramam_score) << ','
        << num(s.yati_score) << ',' << num(s.n_aksharaalu_score) << ','
        << num(s.prasa_score) << ',' << num(s.chandassu_score) << ',' << quote(s.error)
        << '\n';
  }
}

}  // namespace chandassu
