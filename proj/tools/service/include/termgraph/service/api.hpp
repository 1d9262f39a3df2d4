#pragma once

#include <cstddef>
#include <map>
#include <memory>
#include <mutex>
#include <string>

#include "termgraph/network.hpp"

namespace termgraph::service {

inline constexpr int kApiVersion = 1;

struct ServiceConfig {
  std::string network_path;
  std::string host = "127.0.0.1";
  int port = 8080;
  int max_k = 3;
  std::size_t suggestion_limit = 50;
  bool cors_allowed = false;
  std::string static_dir;

  // Throws Error(invalid_argument) when max_k is outside 0..5 or
  // suggestion_limit is zero.
  void validate() const;
};

// Holds the current network snapshot. Readers keep the snapshot they got
// alive for the whole request; replace() swaps in a new one.
class NetworkHolder {
 public:
  explicit NetworkHolder(std::shared_ptr<const TermNetwork> net) : net_(std::move(net)) {}

  std::shared_ptr<const TermNetwork> snapshot() const;
  void replace(std::shared_ptr<const TermNetwork> net);

 private:
  mutable std::mutex mu_;
  std::shared_ptr<const TermNetwork> net_;
};

struct ApiRequest {
  std::string path;
  std::map<std::string, std::string> params;
};

struct ApiResponse {
  int status = 200;
  std::string body;
};

// GET routes under /api. The body is a JSON envelope
// {"version", "data", "error"} and depends only on the inputs.
ApiResponse handle_request(const ApiRequest& request, const TermNetwork& net,
                           const ServiceConfig& config);

}  // namespace termgraph::service
