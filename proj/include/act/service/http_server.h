// Copyright 2026 The ACT Authors.
//
// Licensed under the Apache License, Version 2.0 (the "License");
// you may not use this file except in compliance with the License.
// You may obtain a copy of the License at
//
//     http://www.apache.org/licenses/LICENSE-2.0
//
// Unless required by applicable law or agreed to in writing, software
// distributed under the License is distributed on an "AS IS" BASIS,
// WITHOUT WARRANTIES OR CONDITIONS OF ANY KIND, either express or implied.
// See the License for the specific language governing permissions and
// limitations under the License.

#pragma once

#include <memory>
#include <string>

#include "act/service/api.h"

namespace httplib {
class Server;
}

namespace act::service {

struct HttpOptions {
  std::string bind = "127.0.0.1";
  int port = 8080;  // 0 picks a free port
  std::string cors_origin = "*";
  size_t threads = 8;
};

// HTTP/1.1 front end for Api. GET only; every body is JSON.
class HttpServer {
 public:
  HttpServer(const Api& api, HttpOptions options);
  ~HttpServer();

  HttpServer(const HttpServer&) = delete;
  HttpServer& operator=(const HttpServer&) = delete;

  // Binds the socket and returns the bound port. Throws IoError on failure.
  int Bind();

  // Serves until Stop(). Bind() must have succeeded.
  void Serve();
  void Stop();
  // Blocks until Serve() is accepting connections.
  void WaitUntilReady() const;

  int port() const { return port_; }

 private:
  const Api& api_;
  HttpOptions options_;
  std::unique_ptr<httplib::Server> server_;
  int port_ = 0;
};

}  // namespace act::service
