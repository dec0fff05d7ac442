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
#include <functional>
#include <memory>
#include <string>
#include <string_view>

#include "chandassu/meter_config.hpp"

namespace chandassu::service {

inline constexpr std::size_t kMaxTextBytes = 64 * 1024;

struct Response {
  int status = 200;
  std::string body;
  std::string content_type = "application/json; charset=utf-8";
};

// Request handlers, usable without a socket. `body` is the raw request body:
// {"text": "...", "type_name": "..."} with type_name optional.
Response handle_analyze(std::string_view body, const MeterLibrary& library);
Response handle_types(const MeterLibrary& library);

struct ServerOptions {
  std::string host = "127.0.0.1";
  int port = 8080;  // 0 picks a free port
  const MeterLibrary* library = nullptr;
};

// HTTP front end: POST /api/v1/analyze, GET /api/v1/types.
class Server {
 public:
  explicit Server(ServerOptions options);
  ~Server();
  Server(const Server&) = delete;
  Server& operator=(const Server&) = delete;

  // Binds the socket; returns the bound port. Throws IoError.
  int bind();
  // Serves until stop(); bind() first.
  void listen();
  void stop();

 private:
  struct Impl;
  std::unique_ptr<Impl> impl_;
};

}  // namespace chandassu::service
