#include "termgraph/service/server.hpp"

#include <filesystem>
#include <ostream>

#include "httplib.h"
#include "json.hpp"
#include "termgraph/error.hpp"

namespace termgraph::service {
namespace {

// SO_REUSEADDR without SO_REUSEPORT, so that a second server on a busy port
// fails to bind instead of sharing it.
void socket_options(socket_t sock) {
  int yes = 1;
  setsockopt(sock, SOL_SOCKET, SO_REUSEADDR, reinterpret_cast<const char*>(&yes), sizeof yes);
}

void apply_cors(const ServiceConfig& config, httplib::Response& res) {
  if (config.cors_allowed) res.set_header("Access-Control-Allow-Origin", "*");
}

}  // namespace

HttpServer::HttpServer(ServiceConfig config, std::shared_ptr<NetworkHolder> holder)
    : config_(std::move(config)), holder_(std::move(holder)), server_(std::make_unique<httplib::Server>()) {
  config_.validate();
  server_->set_socket_options(socket_options);
  server_->Get(R"(/api/.*)", [this](const httplib::Request& req, httplib::Response& res) {
    ApiRequest api{req.path, {}};
    for (const auto& [key, value] : req.params) api.params.emplace(key, value);
    const auto snapshot = holder_->snapshot();
    const ApiResponse out = handle_request(api, *snapshot, config_);
    res.status = out.status;
    apply_cors(config_, res);
    res.set_content(out.body, "application/json");
  });
  server_->Post("/api/admin/reload", [this](const httplib::Request&, httplib::Response& res) {
    nlohmann::json body = {{"version", kApiVersion}, {"data", nullptr}, {"error", nullptr}};
    try {
      auto fresh = std::make_shared<const TermNetwork>(load_network_file(config_.network_path));
      const auto terms = fresh->inventory().size();
      holder_->replace(std::move(fresh));
      body["data"] = {{"reloaded", true}, {"terms", terms}};
      res.status = 200;
    } catch (const std::exception& e) {
      body["error"] = {{"code", "reload_failed"}, {"message", e.what()}};
      res.status = 500;
    }
    apply_cors(config_, res);
    res.set_content(body.dump(), "application/json");
  });
  if (!config_.static_dir.empty()) {
    if (!std::filesystem::is_directory(config_.static_dir) ||
        !server_->set_mount_point("/", config_.static_dir)) {
      throw Error(Errc::io_error, "static directory '" + config_.static_dir + "' is not readable");
    }
  }
}

HttpServer::~HttpServer() { stop(); }

int HttpServer::bind() {
  int port = config_.port;
  if (port == 0) {
    port = server_->bind_to_any_port(config_.host);
  } else if (!server_->bind_to_port(config_.host, port)) {
    port = -1;
  }
  if (port < 0) {
    throw Error(Errc::io_error,
                "cannot listen on " + config_.host + ":" + std::to_string(config_.port));
  }
  config_.port = port;
  return port;
}

void HttpServer::listen() { server_->listen_after_bind(); }

void HttpServer::stop() {
  if (server_) server_->stop();
}

void HttpServer::wait_until_ready() const { server_->wait_until_ready(); }

int run_server(const ServiceConfig& config, std::ostream& log) {
  auto holder = std::make_shared<NetworkHolder>(
      std::make_shared<const TermNetwork>(load_network_file(config.network_path)));
  HttpServer server(config, holder);
  const int port = server.bind();
  log << "serving " << holder->snapshot()->inventory().size() << " terms on http://" << config.host
      << ":" << port << std::endl;
  server.listen();
  return 0;
}

}  // namespace termgraph::service
