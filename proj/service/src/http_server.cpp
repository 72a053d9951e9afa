#include "arbor/http_server.hpp"

#include <algorithm>
#include <limits>

#include "httplib.h"

namespace arbor::service {

using nlohmann::json;

struct HttpServer::Impl {
  GameService& service;
  ServerConfig config;
  httplib::Server server;

  Impl(GameService& s, ServerConfig c) : service(s), config(std::move(c)) {}

  bool origin_allowed(const std::string& origin) const {
    for (const auto& o : config.cors_origins)
      if (o == "*" || o == origin) return true;
    return false;
  }

  void add_cors(const httplib::Request& req, httplib::Response& res) const {
    if (config.cors_origins.empty() || !req.has_header("Origin")) return;
    std::string origin = req.get_header_value("Origin");
    if (!origin_allowed(origin)) return;
    res.set_header("Access-Control-Allow-Origin", origin);
    res.set_header("Vary", "Origin");
    res.set_header("Access-Control-Allow-Methods", "GET, POST, DELETE, OPTIONS");
    res.set_header("Access-Control-Allow-Headers", "Content-Type");
  }

  static void send(httplib::Response& res, int status, const json& body) {
    res.status = status;
    res.set_content(body.dump(), "application/json");
  }

  template <class Fn>
  httplib::Server::Handler wrap(Fn fn) {
    return [this, fn](const httplib::Request& req, httplib::Response& res) {
      add_cors(req, res);
      try {
        fn(req, res);
      } catch (const ApiError& e) {
        send(res, e.http_status(), e.to_json());
      } catch (const std::exception& e) {
        send(res, 500, json{{"error", {{"code", "Internal"}, {"message", e.what()}}}});
      }
    };
  }

  static json parse_body(const httplib::Request& req) {
    json body = json::parse(req.body, nullptr, false);
    if (body.is_discarded()) throw ApiError(ApiErrc::BadRequest, "request body is not valid JSON");
    return body;
  }

  void install_routes() {
    server.Options(R"(/api/.*)", [this](const httplib::Request& req, httplib::Response& res) {
      add_cors(req, res);
      res.status = 204;
    });

    server.Post("/api/games", wrap([this](const httplib::Request& req, httplib::Response& res) {
      send(res, 201, service.create(GameService::parse_create(parse_body(req))));
    }));

    server.Get("/api/games", wrap([this](const httplib::Request&, httplib::Response& res) {
      send(res, 200, json{{"games", service.list()}});
    }));

    server.Get(R"(/api/games/([A-Za-z0-9_-]+))", wrap([this](const httplib::Request& req, httplib::Response& res) {
      send(res, 200, service.get(req.matches[1]));
    }));

    server.Delete(R"(/api/games/([A-Za-z0-9_-]+))", wrap([this](const httplib::Request& req, httplib::Response& res) {
      service.remove(req.matches[1]);
      res.status = 204;
    }));

    server.Post(R"(/api/games/([A-Za-z0-9_-]+)/guess)",
                wrap([this](const httplib::Request& req, httplib::Response& res) {
                  json body = parse_body(req);
                  if (!body.is_object() || !body.contains("vertex") || !body["vertex"].is_number_integer())
                    throw ApiError(ApiErrc::BadRequest, "body must be {\"vertex\": int}");
                  auto v = body["vertex"].get<std::int64_t>();
                  if (v < 0 || v > std::numeric_limits<int>::max())
                    throw ApiError(ApiErrc::NotACandidate, "vertex " + std::to_string(v) + " is not a candidate");
                  send(res, 200, service.guess(req.matches[1], static_cast<Vertex>(v)));
                }));

    server.Get("/api/analyze", wrap([this](const httplib::Request& req, httplib::Response& res) {
      if (!req.has_param("tree")) throw ApiError(ApiErrc::BadRequest, "missing query parameter 'tree'");
      send(res, 200, service.analyze(req.get_param_value("tree")));
    }));

    if (config.static_dir) server.set_mount_point("/", config.static_dir->string());
  }
};

HttpServer::HttpServer(GameService& service, ServerConfig config)
    : impl_(std::make_unique<Impl>(service, std::move(config))) {
  impl_->install_routes();
}

HttpServer::~HttpServer() { stop(); }

int HttpServer::bind() {
  if (impl_->config.port == 0) return impl_->server.bind_to_any_port(impl_->config.host);
  return impl_->server.bind_to_port(impl_->config.host, impl_->config.port) ? impl_->config.port : -1;
}

bool HttpServer::listen_after_bind() { return impl_->server.listen_after_bind(); }

void HttpServer::stop() {
  if (impl_->server.is_running()) impl_->server.stop();
}

bool HttpServer::is_running() const { return impl_->server.is_running(); }

void HttpServer::wait_until_ready() const { impl_->server.wait_until_ready(); }

}  // namespace arbor::service
