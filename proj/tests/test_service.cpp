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


#include <cstdio>
#include <fstream>
#include <future>
#include <random>
#include <thread>

#include <gtest/gtest.h>
#include <httplib.h>
#include <nlohmann/json.hpp>

#include "chandassu/service.hpp"
#include "synth.hpp"

namespace {

using namespace chandassu;
using nlohmann::json;

const MeterLibrary& lib() { return MeterLibrary::builtin(); }

std::string fixture_text() {
  std::ifstream in(std::string(CHANDASSU_FIXTURE_DIR) + "/vutpalamaala_ganapati.txt");
  return {std::istreambuf_iterator<char>(in), {}};
}

std::string request(const std::string& text, const std::string& type = "") {
  json body = {{"text", text}};
  if (!type.empty()) body["type_name"] = type;
  return body.dump();
}

TEST(Analyze, PerfectPadyamWithType) {
  const auto r = service::handle_analyze(request(fixture_text(), "vutpalamaala"), lib());
  ASSERT_EQ(r.status, 200) << r.body;
  EXPECT_EQ(r.content_type.rfind("application/json", 0), 0u);
  const auto doc = json::parse(r.body);
  EXPECT_EQ(doc["chandassu_score"], 1.0);
  EXPECT_EQ(doc["detected_type"], "vutpalamaala");
  EXPECT_EQ(doc["type_source"], "given");
  EXPECT_EQ(doc["micro_score"].size(), 5u);
  EXPECT_EQ(doc["tokens"].size(), 4u);
  EXPECT_EQ(doc["ganam_cells"].size(), 4u);
  EXPECT_EQ(doc["yati_verdicts"], json({true, true, true, true}));
  EXPECT_TRUE(doc["prasa_modal_aksharam"].is_string());
  for (const auto& line : doc["ganam_cells"]) {
    for (const auto& cell : line) EXPECT_NE(cell["matched_name"], "UnMatched");
  }
}

TEST(Analyze, TokenCountsAgreeWithLgString) {
  const auto doc = json::parse(service::handle_analyze(request(fixture_text()), lib()).body);
  std::size_t tokens = 0;
  for (const auto& line : doc["tokens"]) tokens += line.size();
  EXPECT_EQ(tokens, doc["lg"].get<std::string>().size());
}

TEST(Analyze, DetectsTypeWhenOmitted) {
  const auto r = service::handle_analyze(request(fixture_text()), lib());
  ASSERT_EQ(r.status, 200);
  const auto doc = json::parse(r.body);
  EXPECT_EQ(doc["detected_type"], "vutpalamaala");
  EXPECT_EQ(doc["type_source"], "detected");
}

TEST(Analyze, ClientErrors) {
  EXPECT_EQ(service::handle_analyze(request(""), lib()).status, 400);
  EXPECT_EQ(service::handle_analyze(request("hello"), lib()).status, 400);
  EXPECT_EQ(service::handle_analyze("{", lib()).status, 400);
  EXPECT_EQ(service::handle_analyze("[]", lib()).status, 400);
  EXPECT_EQ(service::handle_analyze(R"({"text": 3})", lib()).status, 400);
  EXPECT_EQ(service::handle_analyze(R"({"text": "రామ", "type_name": 3})", lib()).status, 400);
  EXPECT_EQ(service::handle_analyze(request("న్ రామ"), lib()).status, 400);
  EXPECT_EQ(service::handle_analyze(request(std::string(service::kMaxTextBytes + 1, 'a')), lib())
                .status,
            400);
  const auto unknown = service::handle_analyze(request("రామ", "sonnet"), lib());
  EXPECT_EQ(unknown.status, 422);
  EXPECT_EQ(json::parse(unknown.body)["status"], 422);
}

TEST(Analyze, Stateless) {
  std::mt19937 rng(1);
  const auto text = chandassu::testing::synthesize(lib().config("kandamu"), rng).text;
  const auto a = service::handle_analyze(request(text), lib());
  service::handle_analyze(request(fixture_text(), "seesamu"), lib());
  const auto b = service::handle_analyze(request(text), lib());
  EXPECT_EQ(a.body, b.body);
}

TEST(Types, ListsEightTypesInOrder) {
  const auto r = service::handle_types(lib());
  ASSERT_EQ(r.status, 200);
  const auto doc = json::parse(r.body);
  ASSERT_EQ(doc.size(), 8u);
  EXPECT_EQ(doc[0]["type_name"], "vutpalamaala");
  const auto& kandamu = doc[4];
  EXPECT_EQ(kandamu["type_name"], "kandamu");
  EXPECT_EQ(kandamu["class_name"], "Jaathi");
  EXPECT_TRUE(kandamu["constraints"]["prasa"].get<bool>());
  EXPECT_TRUE(kandamu["constraints"]["n_aksharalu"].is_null());
  EXPECT_EQ(kandamu["micro_scores"],
            json({"n_paadalu_score", "gana_kramam_score", "yati_score", "prasa_score"}));
  EXPECT_EQ(doc[7]["micro_scores"].size(), 3u);
  EXPECT_EQ(service::handle_types(lib()).body, r.body);
}

class LiveServer : public ::testing::Test {
 protected:
  void SetUp() override {
    server_ = std::make_unique<service::Server>(service::ServerOptions{"127.0.0.1", 0, &lib()});
    port_ = server_->bind();
    thread_ = std::thread([this] { server_->listen(); });
  }
  void TearDown() override {
    server_->stop();
    thread_.join();
  }

  std::unique_ptr<service::Server> server_;
  int port_ = 0;
  std::thread thread_;
};

TEST_F(LiveServer, ServesBothEndpoints) {
  httplib::Client client("127.0.0.1", port_);
  client.set_connection_timeout(5);

  auto types = client.Get("/api/v1/types");
  ASSERT_TRUE(types);
  EXPECT_EQ(types->status, 200);
  EXPECT_EQ(types->body, service::handle_types(lib()).body);
  EXPECT_EQ(types->get_header_value("Access-Control-Allow-Origin"), "*");

  const std::string body = request(fixture_text(), "vutpalamaala");
  auto analyze = client.Post("/api/v1/analyze", body, "application/json");
  ASSERT_TRUE(analyze);
  EXPECT_EQ(analyze->status, 200);
  EXPECT_EQ(analyze->body, service::handle_analyze(body, lib()).body);

  auto bad = client.Post("/api/v1/analyze", "nope", "application/json");
  ASSERT_TRUE(bad);
  EXPECT_EQ(bad->status, 400);

  auto preflight = client.Options("/api/v1/analyze");
  ASSERT_TRUE(preflight);
  EXPECT_EQ(preflight->status, 204);
}

TEST_F(LiveServer, ConcurrentIdenticalRequestsAgree) {
  const std::string body = request(fixture_text());
  std::vector<std::future<std::string>> replies;
  for (int i = 0; i < 8; ++i) {
    replies.push_back(std::async(std::launch::async, [&] {
      httplib::Client client("127.0.0.1", port_);
      auto r = client.Post("/api/v1/analyze", body, "application/json");
      return r ? r->body : std::string("<no response>");
    }));
  }
  const std::string expected = service::handle_analyze(body, lib()).body;
  for (auto& f : replies) EXPECT_EQ(f.get(), expected);
}

#ifdef CHANDASSU_CLI
std::string run_cli(const std::string& args, int* status) {
  const std::string cmd = std::string("\"") + CHANDASSU_CLI + "\" " + args + " 2>/dev/null";
  FILE* pipe = popen(cmd.c_str(), "r");
  std::string out;
  char buf[4096];
  for (std::size_t n; (n = fread(buf, 1, sizeof buf, pipe)) > 0;) out.append(buf, n);
  *status = pclose(pipe);
  return out;
}

TEST(Cli, JsonOutputMatchesServiceByteForByte) {
  const std::string fixture = std::string(CHANDASSU_FIXTURE_DIR) + "/vutpalamaala_ganapati.txt";
  int status = 0;
  const auto given = run_cli("evaluate --type vutpalamaala -f json -i \"" + fixture + "\"", &status);
  EXPECT_EQ(status, 0);
  EXPECT_EQ(given, service::handle_analyze(request(fixture_text(), "vutpalamaala"), lib()).body);
  const auto detected = run_cli("evaluate -f json -i \"" + fixture + "\"", &status);
  EXPECT_EQ(detected, service::handle_analyze(request(fixture_text()), lib()).body);
}

TEST(Cli, ExitCodes) {
  int status = 0;
  const std::string fixture = std::string(CHANDASSU_FIXTURE_DIR) + "/vutpalamaala_ganapati.txt";
  EXPECT_EQ(run_cli("tokenize -i \"" + fixture + "\"", &status).substr(0, 10), "తొం\n");
  EXPECT_EQ(WEXITSTATUS(status), 0);
  run_cli("evaluate --type sonnet -i \"" + fixture + "\"", &status);
  EXPECT_EQ(WEXITSTATUS(status), 2);
  run_cli("evaluate --type kandamu -i /nonexistent/file", &status);
  EXPECT_EQ(WEXITSTATUS(status), 1);
  run_cli("frobnicate", &status);
  EXPECT_EQ(WEXITSTATUS(status), 64);
  run_cli("--config-dir /nonexistent tokenize -i \"" + fixture + "\"", &status);
  EXPECT_EQ(WEXITSTATUS(status), 1);
}
#endif

}  // namespace
