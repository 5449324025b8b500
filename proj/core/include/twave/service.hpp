#pragma once

#include <cstdint>
#include <memory>
#include <optional>
#include <string>
#include <string_view>

#include "twave/solver.hpp"

namespace twave {

struct HttpResponse {
  int status = 200;
  std::string body;  // JSON
};

struct ServiceConfig {
  std::size_t max_sessions = 1024;
  SolveBudget analysis_budget{};
  // Append-only log of session events, one JSON object per line.
  std::optional<std::string> history_path;
};

// JSON-over-HTTP play and analysis service. `handle` is the whole API and can
// be driven without a socket; `serve` binds it to a port.
class Service {
 public:
  explicit Service(ServiceConfig config = {});
  ~Service();
  Service(const Service&) = delete;
  Service& operator=(const Service&) = delete;

  HttpResponse handle(std::string_view method, std::string_view path, std::string_view body);

  std::size_t session_count() const;

  // Blocks until `stop` is called from another thread.
  bool serve(const std::string& host, int port);
  // Split form of serve: bind (port 0 picks a free port) and return the bound
  // port or -1, then block in listen.
  int bind(const std::string& host, int port);
  bool listen();
  void wait_until_ready() const;
  void stop();

 private:
  struct State;
  std::unique_ptr<State> state_;
};

}  // namespace twave
