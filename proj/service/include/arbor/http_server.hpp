#pragma once

#include <filesystem>
#include <memory>
#include <optional>
#include <string>
#include <vector>

#include "arbor/play_service.hpp"

namespace arbor::service {

struct ServerConfig {
  std::string host = "127.0.0.1";
  int port = 8080;
  /// Origins allowed by CORS. Empty means no CORS headers; "*" allows any.
  std::vector<std::string> cors_origins;
  std::optional<std::filesystem::path> static_dir;
};

/// HTTP front end for GameService. Routes live under /api.
class HttpServer {
 public:
  HttpServer(GameService& service, ServerConfig config);
  ~HttpServer();
  HttpServer(const HttpServer&) = delete;
  HttpServer& operator=(const HttpServer&) = delete;

  /// Binds the listening socket. Port 0 picks a free port. Returns the bound port or -1.
  int bind();
  /// Blocks serving requests until stop() is called.
  bool listen_after_bind();
  void stop();
  bool is_running() const;
  void wait_until_ready() const;

 private:
  struct Impl;
  std::unique_ptr<Impl> impl_;
};

}  // namespace arbor::service
