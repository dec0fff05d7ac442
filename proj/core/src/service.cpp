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


#include "chandassu/service.hpp"

#include <httplib.h>

#include <nlohmann/json.hpp>

#include "chandassu/errors.hpp"
#include "chandassu/padya_bhedam.hpp"
#include "chandassu/report.hpp"
#include "chandassu/unicode.hpp"

namespace chandassu::service {
namespace {

Response error(int status, std::string_view message) {
  nlohmann::ordered_json doc = {{"error", message}, {"status", status}};
  return {status, dump(doc)};
}

}  // namespace

Response handle_analyze(std::string_view body, const MeterLibrary& library) {
  const auto doc = nlohmann::json::parse(body, nullptr, false);
  if (doc.is_discarded() || !doc.is_object()) return error(400, "body must be a JSON object");
  const auto text_it = doc.find("text");
  if (text_it == doc.end() || !text_it->is_string()) return error(400, "\"text\" must be a string");
  const std::string& text = text_it->get_ref<const std::string&>();
  if (text.size() > kMaxTextBytes) return error(400, "text exceeds 64 KiB");

  std::optional<std::string> type;
  if (auto it = doc.find("type_name"); it != doc.end() && !it->is_null()) {
    if (!it->is_string()) return error(400, "\"type_name\" must be a string");
    if (!it->get_ref<const std::string&>().empty()) type = it->get<std::string>();
  }
  if (type && !library.has_type(*type)) return error(422, "unknown type_name \"" + *type + "\"");

  try {
    const Evaluator evaluator(library);
    const std::string_view input = unicode::strip_bom(text);
    if (type) return {200, dump(analysis_json(evaluator.evaluate(input, *type), false))};
    auto [name, report] = evaluator.evaluate_auto(input);
    return {200, dump(analysis_json(report, true))};
  } catch (const EmptyInputError&) {
    return error(400, "text contains no Telugu aksharams");
  } catch (const InputShapeError& e) {
    return error(400, e.what());
  } catch (const LookupMissError& e) {
    return error(400, e.what());
  } catch (const std::exception&) {
    return error(500, "internal error");
  }
}

Response handle_types(const MeterLibrary& library) {
  return {200, dump(types_json(library))};
}

struct Server::Impl {
  ServerOptions options;
  httplib::Server http;
};

Server::Server(ServerOptions options) : impl_(std::make_unique<Impl>()) {
  impl_->options = std::move(options);
  const MeterLibrary& library =
      impl_->options.library ? *impl_->options.library : MeterLibrary::builtin();
  auto& http = impl_->http;

  http.set_default_headers({{"Access-Control-Allow-Origin", "*"},
                            {"Access-Control-Allow-Methods", "GET, POST, OPTIONS"},
                            {"Access-Control-Allow-Headers", "Content-Type"}});
  http.set_payload_max_length(kMaxTextBytes * 8);
  auto send = [](httplib::Response& res, const Response& r) {
    res.status = r.status;
    res.set_content(r.body, r.content_type);
  };
  http.Post("/api/v1/analyze", [&library, send](const httplib::Request& req,
                                                httplib::Response& res) {
    send(res, handle_analyze(req.body, library));
  });
  http.Get("/api/v1/types", [&library, send](const httplib::Request&, httplib::Response& res) {
    send(res, handle_types(library));
  });
  http.Options(R"(/api/v1/.*)", [](const httplib::Request&, httplib::Response& res) {
    res.status = 204;
  });
  http.set_exception_handler([send](const httplib::Request&, httplib::Response& res,
                                    std::exception_ptr) {
    send(res, error(500, "internal error"));
  });
}

Server::~Server() { stop(); }

int Server::bind() {
  auto& o = impl_->options;
  if (o.port == 0) {
    const int port = impl_->http.bind_to_any_port(o.host);
    if (port < 0) throw IoError("cannot bind " + o.host);
    o.port = port;
  } else if (!impl_->http.bind_to_port(o.host, o.port)) {
    throw IoError("cannot bind " + o.host + ":" + std::to_string(o.port));
  }
  return o.port;
}

void Server::listen() { impl_->http.listen_after_bind(); }

void Server::stop() {
  if (impl_) impl_->http.stop();
}

}  // namespace chandassu::service
