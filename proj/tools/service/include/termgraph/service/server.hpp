#pragma once

#include <iosfwd>
#include <memory>

#include "termgraph/service/api.hpp"

namespace httplib {
class Server;
}

namespace termgraph::service {

// HTTP front end for handle_request. Also serves config.static_dir under /
// and accepts POST /api/admin/reload, which reloads config.network_path.
class HttpServer {
 public:
  HttpServer(ServiceConfig config, std::shared_ptr<NetworkHolder> holder);
  ~HttpServer();
  HttpServer(const HttpServer&) = delete;
  HttpServer& operator=(const HttpServer&) = delete;

  // Binds config.host:config.port; port 0 picks a free port. Throws
  // Error(io_error) when the address cannot be bound.
  int bind();
  // Blocks until stop() is called.
  void listen();
  void stop();
  void wait_until_ready() const;

 private:
  ServiceConfig config_;
  std::shared_ptr<NetworkHolder> holder_;
  std::unique_ptr<httplib::Server> server_;
};

// Loads the network, binds and serves until the process is stopped.
int run_server(const ServiceConfig& config, std::ostream& log);

}  // namespace termgraph::service
