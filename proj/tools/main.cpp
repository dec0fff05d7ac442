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


#include <cstdlib>
#include <fstream>
#include <iostream>
#include <iterator>
#include <optional>
#include <sstream>
#include <string>

#include <CLI11.hpp>
#include <nlohmann/json.hpp>

#include "chandassu/corpus.hpp"
#include "chandassu/errors.hpp"
#include "chandassu/meter_config.hpp"
#include "chandassu/padya_bhedam.hpp"
#include "chandassu/prosody.hpp"
#include "chandassu/report.hpp"
#include "chandassu/service.hpp"
#include "chandassu/tokenizer.hpp"
#include "chandassu/unicode.hpp"

namespace {

using namespace chandassu;

constexpr int kExitOk = 0;
constexpr int kExitInput = 1;
constexpr int kExitConfig = 2;
constexpr int kExitUsage = 64;

struct Options {
  std::string input = "-";
  std::string format = "text";
  std::string type;
  std::string config_dir;
  std::string dataset;
  std::string summary_json;
  std::string records_csv;
  unsigned threads = 0;
  bool strict_advance = false;
  std::size_t show = 50;
  std::string host = "127.0.0.1";
  int port = 8080;
};

std::string read_input(const std::string& path) {
  std::string data;
  if (path == "-") {
    data.assign(std::istreambuf_iterator<char>(std::cin), {});
  } else {
    std::ifstream in(path, std::ios::binary);
    if (!in) throw IoError("cannot read " + path);
    data.assign(std::istreambuf_iterator<char>(in), {});
  }
  return std::string(unicode::strip_bom(data));
}

void write_file(const std::string& path, const std::string& content) {
  std::ofstream out(path, std::ios::binary);
  if (!out) throw IoError("cannot write " + path);
  out << content;
}

bool json_output(const Options& o) { return o.format == "json"; }

int run_tokenize(const Options& o) {
  const auto tokens = tokenize(read_input(o.input));
  if (json_output(o)) {
    std::cout << dump({{"tokens", to_strings(tokens)}});
  } else {
    for (const auto& t : tokens) std::cout << t.str() << '\n';
  }
  return kExitOk;
}

int run_lg(const Options& o) {
  const auto lg = generate_lg(std::string_view(read_input(o.input)));
  if (json_output(o)) {
    nlohmann::ordered_json items = nlohmann::ordered_json::array();
    for (const auto& t : lg) {
      items.push_back({{"token", t.token.str()}, {"mark", std::string(1, render(t.mark))}});
    }
    std::cout << dump({{"lg", render_lg(lg)}, {"tokens", std::move(items)}});
  } else {
    for (const auto& t : lg) std::cout << t.token.str() << '\t' << render(t.mark) << '\n';
  }
  return kExitOk;
}

int run_evaluate(const Options& o, const MeterLibrary& library, bool detect_only) {
  const Evaluator evaluator(library, {o.strict_advance ? UnmatchedAdvance::kFirstAlternative
                                                       : UnmatchedAdvance::kLastAlternative});
  const std::string text = read_input(o.input);
  const bool detect = detect_only || o.type.empty();
  if (detect && !detect_only) {
    std::cerr << "note: no --type given; detecting the best-scoring type\n";
  }
  ScoreReport report;
  if (detect) {
    report = evaluator.evaluate_auto(text).second;
  } else {
    report = evaluator.evaluate(text, o.type);
  }
  if (json_output(o)) {
    std::cout << dump(analysis_json(report, detect));
  } else if (detect_only) {
    char score[32];
    std::snprintf(score, sizeof score, "%.2f", report.chandassu_score * 100.0);
    std::cout << report.type_name << '\t' << score << '\n';
  } else {
    std::cout << render_report_text(report, detect);
  }
  return kExitOk;
}

LoadResult load(const Options& o, const MeterLibrary& library) {
  LoadOptions lo;
  lo.library = &library;
  auto loaded = load_dataset(o.dataset, lo);
  for (const auto& issue : loaded.issues) {
    std::cerr << "skipped " << issue.source << " row " << issue.row << ": " << issue.message
              << '\n';
  }
  return loaded;
}

int run_benchmark_cmd(const Options& o, const MeterLibrary& library) {
  const auto loaded = load(o, library);
  if (loaded.records.empty()) throw IoError("dataset holds no valid records");
  BenchmarkOptions bo;
  bo.library = &library;
  bo.threads = o.threads;
  bo.evaluate.advance =
      o.strict_advance ? UnmatchedAdvance::kFirstAlternative : UnmatchedAdvance::kLastAlternative;
  const auto summary = run_benchmark(loaded.records, bo);

  if (!o.summary_json.empty()) write_file(o.summary_json, dump(summary_json(summary)));
  if (!o.records_csv.empty()) {
    std::ostringstream csv;
    write_record_csv(csv, summary);
    write_file(o.records_csv, csv.str());
  }
  if (json_output(o)) {
    std::cout << dump(summary_json(summary));
  } else {
    std::cout << render_class_table(summary) << '\n' << render_type_table(summary);
    std::cout << "\nrecords: " << summary.overall.count
              << "  failed: " << summary.overall.failures
              << "  skipped rows: " << loaded.issues.size() << '\n';
  }
  return kExitOk;
}

int run_verify(const Options& o, const MeterLibrary& library) {
  const auto loaded = load(o, library);
  const auto report = verify_lg_annotations(loaded.records);
  if (json_output(o)) {
    std::cout << dump(lg_agreement_json(report));
    return kExitOk;
  }
  char pct[32];
  std::snprintf(pct, sizeof pct, "%.4f", report.agreement() * 100.0);
  std::cout << "records: " << report.records << "\nunannotated: " << report.unannotated
            << "\ntokens compared: "
            << report.tokens_compared << "\ntokens agreeing: " << report.tokens_agreeing
            << "\nagreement: " << pct << "%\nfailed records: " << report.failed_records.size()
            << "\ndisagreements: " << report.disagreements.size() << '\n';
  std::size_t shown = 0;
  for (const auto& d : report.disagreements) {
    if (shown++ == o.show) {
      std::cout << "... (use --show to list more)\n";
      break;
    }
    auto mark = [](const std::optional<LGMark>& m) { return m ? render(*m) : '-'; };
    std::cout << "  record " << d.record << " token " << d.token << " " << d.token_text
              << ": expected " << mark(d.expected) << ", generated " << mark(d.actual) << '\n';
  }
  return kExitOk;
}

int run_serve(const Options& o, const MeterLibrary& library) {
  service::Server server({o.host, o.port, &library});
  const int port = server.bind();
  std::cerr << "listening on http://" << o.host << ':' << port << '\n';
  server.listen();
  return kExitOk;
}

std::optional<std::string> env(const char* name) {
  const char* v = std::getenv(name);
  if (!v || !*v) return std::nullopt;
  return std::string(v);
}

}  // namespace

int main(int argc, char** argv) {
  Options o;
  if (auto dir = env("CHANDASSU_CONFIG_DIR")) o.config_dir = *dir;
  if (auto host = env("CHANDASSU_HOST")) o.host = *host;
  if (auto port = env("CHANDASSU_PORT")) o.port = std::atoi(port->c_str());

  CLI::App app{"Telugu chandassu (metre) analysis"};
  app.require_subcommand(1);
  app.add_option("--config-dir", o.config_dir,
                 "Directory of meter configs (default: built-in; env CHANDASSU_CONFIG_DIR)");

  auto add_input = [&](CLI::App* cmd) {
    cmd->add_option("-i,--input", o.input, "Input file, or - for standard input");
    cmd->add_option("-f,--format", o.format, "Output format")
        ->check(CLI::IsMember({"text", "json"}));
  };
  auto add_dataset = [&](CLI::App* cmd) {
    cmd->add_option("-d,--dataset", o.dataset, "Dataset file or directory")->required();
    cmd->add_option("-f,--format", o.format, "Output format")
        ->check(CLI::IsMember({"text", "json"}));
  };

  auto* tok = app.add_subcommand("tokenize", "Split text into aksharams");
  add_input(tok);
  auto* lg = app.add_subcommand("lg", "Mark each aksharam laghuvu (|) or guruvu (U)");
  add_input(lg);
  auto* ev = app.add_subcommand("evaluate", "Score a padyam against a meter");
  add_input(ev);
  ev->add_option("-t,--type", o.type, "Padyam type; detected when omitted");
  ev->add_flag("--strict-advance", o.strict_advance,
               "Advance past unmatched positions by the first alternative's length");
  auto* det = app.add_subcommand("detect", "Find the best-scoring meter");
  add_input(det);
  auto* bench = app.add_subcommand("benchmark", "Score an annotated dataset");
  add_dataset(bench);
  bench->add_option("--threads", o.threads, "Worker threads (default: all cores)");
  bench->add_option("--summary-json", o.summary_json, "Write the summary document here");
  bench->add_option("--records-csv", o.records_csv, "Write per-record scores here");
  bench->add_flag("--strict-advance", o.strict_advance,
                  "Advance past unmatched positions by the first alternative's length");
  auto* verify = app.add_subcommand("verify-lg", "Compare generated marks with annotations");
  add_dataset(verify);
  verify->add_option("--show", o.show, "Disagreements to list in text output");
  auto* serve = app.add_subcommand("serve", "Run the HTTP analysis service");
  serve->add_option("--host", o.host, "Listen address (env CHANDASSU_HOST)");
  serve->add_option("--port", o.port, "Listen port (env CHANDASSU_PORT)");

  try {
    app.parse(argc, argv);
  } catch (const CLI::CallForHelp& e) {
    return app.exit(e);
  } catch (const CLI::ParseError& e) {
    app.exit(e);
    std::cerr << app.help();
    return kExitUsage;
  }

  try {
    std::optional<MeterLibrary> custom;
    if (!o.config_dir.empty()) custom = MeterLibrary::from_directory(o.config_dir);
    const MeterLibrary& library = custom ? *custom : MeterLibrary::builtin();
    if (!o.type.empty() && !library.has_type(o.type)) {
      throw UnknownTypeError("unknown padyam type \"" + o.type + "\"");
    }

    if (*tok) return run_tokenize(o);
    if (*lg) return run_lg(o);
    if (*ev) return run_evaluate(o, library, false);
    if (*det) return run_evaluate(o, library, true);
    if (*bench) return run_benchmark_cmd(o, library);
    if (*verify) return run_verify(o, library);
    if (*serve) return run_serve(o, library);
  } catch (const ConfigValidationError& e) {
    std::cerr << "config error: " << e.what() << '\n';
    return kExitConfig;
  } catch (const UnknownTypeError& e) {
    std::cerr << "config error: " << e.what() << '\n';
    return kExitConfig;
  } catch (const Error& e) {
    std::cerr << "error: " << e.what() << '\n';
    return kExitInput;
  }
  return kExitUsage;
}
