#include "twave/service.hpp"

#include <atomic>
#include <chrono>
#include <ctime>
#include <fstream>
#include <list>
#include <mutex>
#include <random>
#include <unordered_map>
#include <vector>

#include "httplib.h"
#include "json.hpp"
#include "twave/engine.hpp"
#include "twave/error.hpp"
#include "twave/io.hpp"
#include "twave/reductions.hpp"

namespace twave {

using nlohmann::json;

namespace {

struct ApiError {
  int status;
  std::string code;
  std::string detail;
  json extra = nullptr;
};

HttpResponse reply(int status, const json& body) { return {status, body.dump()}; }

HttpResponse error_reply(const ApiError& e) {
  json body = {{"error", e.code}, {"detail", e.detail}};
  if (!e.extra.is_null()) body["partial"] = e.extra;
  return reply(e.status, body);
}

json doc_json(const PositionDocument& doc) { return json::parse(serialize_position(doc)); }

std::string now_iso8601() {
  const auto t = std::chrono::system_clock::to_time_t(std::chrono::system_clock::now());
  std::tm tm{};
  gmtime_r(&t, &tm);
  char buf[32];
  std::strftime(buf, sizeof buf, "%Y-%m-%dT%H:%M:%SZ", &tm);
  return buf;
}

json parse_body(std::string_view body) {
  if (body.empty()) return json::object();
  try {
    auto j = json::parse(body);
    if (!j.is_object()) throw ApiError{400, "bad_request", "request body must be a JSON object"};
    return j;
  } catch (const json::parse_error& e) {
    throw ApiError{400, "parse_error", e.what()};
  }
}

RulesetId ruleset_field(const json& v) {
  if (!v.is_string()) throw ApiError{400, "validation_error", "ruleset must be a string"};
  auto id = ruleset_from_name(v.get<std::string>());
  if (!id) throw ApiError{422, "unsupported_ruleset", "unknown ruleset \"" + v.get<std::string>() + "\""};
  return *id;
}

// Accepts a literal string, a full document, or payload fields plus a
// separately named ruleset.
PositionDocument read_position(const json& v, std::optional<RulesetId> ruleset) {
  if (v.is_string()) {
    auto doc = parse_position(v.get<std::string>());
    if (ruleset && *ruleset != doc.ruleset) {
      throw ApiError{400, "validation_error", "literal positions are Transverse Wave grids"};
    }
    return doc;
  }
  if (!v.is_object()) throw ApiError{400, "validation_error", "position must be an object or a grid literal"};
  json obj = v;
  if (!obj.contains("ruleset")) {
    if (!ruleset) throw ApiError{400, "validation_error", "position has no ruleset"};
    obj["ruleset"] = ruleset_name(*ruleset);
  } else {
    const auto inner = ruleset_field(obj["ruleset"]);
    if (ruleset && inner != *ruleset) throw ApiError{400, "validation_error", "ruleset and position disagree"};
  }
  return parse_position(obj.dump());
}

SolveBudget read_budget(const json& v, SolveBudget fallback) {
  if (v.is_null()) return fallback;
  if (!v.is_object()) throw ApiError{400, "validation_error", "analysis_budget must be an object"};
  SolveBudget b = fallback;
  auto get = [&](const char* key, std::uint64_t& out) {
    if (!v.contains(key)) return;
    const auto& x = v[key];
    if (!x.is_number_unsigned() || x.get<std::uint64_t>() == 0) {
      throw ApiError{400, "validation_error", std::string(key) + " must be a positive integer"};
    }
    out = x.get<std::uint64_t>();
  };
  get("max_nodes", b.max_nodes);
  get("max_memo_entries", b.max_memo_entries);
  return b;
}

std::vector<std::string> split_path(std::string_view path) {
  if (auto q = path.find('?'); q != std::string_view::npos) path = path.substr(0, q);
  std::vector<std::string> parts;
  std::size_t i = 0;
  while (i < path.size()) {
    while (i < path.size() && path[i] == '/') ++i;
    auto j = path.find('/', i);
    if (j == std::string_view::npos) j = path.size();
    if (j > i) parts.emplace_back(path.substr(i, j - i));
    i = j;
  }
  return parts;
}

struct Session {
  std::string id;
  RulesetId ruleset;
  PositionDocument initial;
  PositionDocument current;
  std::vector<std::pair<std::string, PositionDocument>> history;
  std::string created_at;
  SolveBudget budget;
  Engine engine;
  std::mutex mutex;

  Session(std::string id_, PositionDocument start, SolveBudget b)
      : id(std::move(id_)),
        ruleset(start.ruleset),
        initial(start),
        current(start),
        created_at(now_iso8601()),
        budget(b),
        engine(start.ruleset, b) {}
};

json moves_json(const std::vector<std::string>& moves) { return json(moves); }

// Player 1 moves first; the player left without a move loses.
json winner_json(const Session& s, bool over) {
  if (!over) return nullptr;
  return s.history.size() % 2 == 1 ? "first" : "second";
}

}  // namespace

struct Service::State {
  ServiceConfig config;
  mutable std::mutex store_mutex;
  std::list<std::string> lru;  // most recent first
  std::unordered_map<std::string, std::pair<std::shared_ptr<Session>, std::list<std::string>::iterator>> sessions;
  std::mutex id_mutex;
  std::mt19937_64 id_rng{std::random_device{}()};
  std::mutex log_mutex;
  httplib::Server server;

  std::string new_id() {
    std::lock_guard lock(id_mutex);
    static constexpr char hex[] = "0123456789abcdef";
    std::string id;
    for (int i = 0; i < 2; ++i) {
      auto v = id_rng();
      for (int k = 0; k < 16; ++k) {
        id += hex[v & 0xF];
        v >>= 4;
      }
    }
    return id;
  }

  void store(std::shared_ptr<Session> s) {
    std::lock_guard lock(store_mutex);
    const std::string id = s->id;
    lru.push_front(id);
    sessions[id] = {std::move(s), lru.begin()};
    while (sessions.size() > config.max_sessions) {
      sessions.erase(lru.back());
      lru.pop_back();
    }
  }

  std::shared_ptr<Session> find(const std::string& id) {
    std::lock_guard lock(store_mutex);
    auto it = sessions.find(id);
    if (it == sessions.end()) throw ApiError{404, "not_found", "unknown session " + id};
    lru.splice(lru.begin(), lru, it->second.second);
    return it->second.first;
  }

  void log(const json& event) {
    if (!config.history_path) return;
    std::lock_guard lock(log_mutex);
    std::ofstream out(*config.history_path, std::ios::app);
    out << event.dump() << '\n';
  }

  json summary(Session& s) {
    const auto moves = s.engine.moves(s.current);
    json history = json::array();
    for (const auto& [m, d] : s.history) history.push_back({{"move", m}, {"position", doc_json(d)}});
    return {{"id", s.id},
            {"ruleset", ruleset_name(s.ruleset)},
            {"position", doc_json(s.current)},
            {"initial_position", doc_json(s.initial)},
            {"history", std::move(history)},
            {"feasible_moves", moves_json(moves)},
            {"game_over", moves.empty()},
            {"created_at", s.created_at},
            {"analysis_budget", {{"max_nodes", s.budget.max_nodes}, {"max_memo_entries", s.budget.max_memo_entries}}},
            {"version", PositionDocument::kVersion}};
  }

  HttpResponse create_session(const json& req) {
    std::optional<RulesetId> ruleset;
    if (req.contains("ruleset")) ruleset = ruleset_field(req["ruleset"]);
    if (!req.contains("position")) throw ApiError{400, "validation_error", "position is required"};
    auto doc = read_position(req["position"], ruleset);
    auto budget = read_budget(req.value("analysis_budget", json()), config.analysis_budget);
    auto s = std::make_shared<Session>(new_id(), doc, budget);
    json body;
    {
      std::lock_guard lock(s->mutex);
      body = summary(*s);
    }
    log({{"event", "create"}, {"session", s->id}, {"position", doc_json(doc)}});
    store(s);
    return reply(201, body);
  }

  HttpResponse post_move(const std::string& id, const json& req) {
    auto s = find(id);
    std::lock_guard lock(s->mutex);
    if (!req.contains("move")) throw ApiError{400, "validation_error", "move is required"};
    std::string move;
    if (req["move"].is_string()) {
      move = req["move"].get<std::string>();
    } else if (req["move"].is_number_integer()) {
      move = req["move"].dump();
    } else {
      throw ApiError{400, "validation_error", "move must be a string or an integer"};
    }
    const std::string reply_mode = req.value("engine_reply", std::string("none"));
    if (reply_mode != "none" && reply_mode != "optimal" && reply_mode != "random") {
      throw ApiError{400, "validation_error", "engine_reply must be none, optimal or random"};
    }
    std::uint64_t seed = 0;
    if (req.contains("seed")) {
      if (!req["seed"].is_number_unsigned()) throw ApiError{400, "validation_error", "seed must be a non-negative integer"};
      seed = req["seed"].get<std::uint64_t>();
    }

    auto options = s->engine.options(s->current);
    const auto wanted = canonical_move_text(move);
    auto chosen = std::find_if(options.begin(), options.end(), [&](const MoveOption& o) { return o.move == wanted; });
    if (chosen == options.end()) {
      throw ApiError{409, "infeasible_move", options.empty() ? "the game is over" : "move " + move + " is not feasible"};
    }
    advance(*s, *chosen);

    json engine_move = nullptr;
    json note = nullptr;
    auto next = s->engine.options(s->current);
    if (!next.empty() && reply_mode != "none") {
      std::size_t pick = 0;
      if (reply_mode == "random") {
        std::mt19937_64 rng(seed);
        pick = std::uniform_int_distribution<std::size_t>(0, next.size() - 1)(rng);
      } else {
        try {
          auto r = s->engine.solve(s->current);
          if (r.best_move) {
            for (std::size_t i = 0; i < next.size(); ++i) {
              if (next[i].move == *r.best_move) pick = i;
            }
          }
        } catch (const BudgetExceeded&) {
          note = std::string("analysis budget exceeded; played the first feasible move");
        }
      }
      engine_move = next[pick].move;
      advance(*s, next[pick]);
      next = s->engine.options(s->current);
    }

    std::vector<std::string> moves;
    for (const auto& o : next) moves.push_back(o.move);
    json body = {{"position", doc_json(s->current)},
                 {"feasible_moves", moves_json(moves)},
                 {"game_over", next.empty()},
                 {"winner_to_move_lost", next.empty()},
                 {"winner", winner_json(*s, next.empty())},
                 {"engine_move", engine_move},
                 {"history_length", s->history.size()},
                 {"version", PositionDocument::kVersion}};
    if (!note.is_null()) body["engine_note"] = note;
    return reply(200, body);
  }

  void advance(Session& s, const MoveOption& o) {
    s.history.emplace_back(o.move, o.successor);
    s.current = o.successor;
    log({{"event", "move"}, {"session", s.id}, {"move", o.move}});
  }

  HttpResponse analysis(const std::string& id) {
    auto s = find(id);
    std::lock_guard lock(s->mutex);
    bool exhausted = false;
    auto options = s->engine.analyse_options(s->current, exhausted);
    json rows = json::array();
    std::vector<Nimber> values;
    json best = nullptr;
    for (const auto& o : options) {
      json row = {{"move", o.move}};
      if (o.grundy) {
        row["grundy"] = o.grundy->to_string();
        row["outcome"] = to_string(outcome_of(*o.grundy));
        values.push_back(*o.grundy);
        if (o.grundy->is_zero() && best.is_null()) best = o.move;
      } else {
        row["budget_exceeded"] = true;
      }
      rows.push_back(std::move(row));
    }
    json body = {{"position", doc_json(s->current)}, {"options", rows}, {"best_move", best}};
    if (exhausted) {
      throw ApiError{503, "budget_exceeded", "analysis budget exhausted before every option was solved", body};
    }
    const Nimber g = mex(values);
    body["grundy"] = g.to_string();
    body["outcome"] = to_string(outcome_of(g));
    body["version"] = PositionDocument::kVersion;
    return reply(200, body);
  }

  HttpResponse convert_request(const json& req) {
    std::optional<RulesetId> from;
    if (req.contains("from_ruleset")) from = ruleset_field(req["from_ruleset"]);
    if (!req.contains("to_ruleset")) throw ApiError{400, "validation_error", "to_ruleset is required"};
    const auto to = ruleset_field(req["to_ruleset"]);
    if (!req.contains("position")) throw ApiError{400, "validation_error", "position is required"};
    const auto doc = read_position(req["position"], from);
    if (!conversion_path(doc.ruleset, to)) {
      throw ApiError{422, "no_transformer",
                     "no registered transformer from " + std::string(ruleset_name(doc.ruleset)) + " to " +
                         std::string(ruleset_name(to))};
    }
    auto c = convert(doc, to);
    json table = json::array();
    for (const auto& [a, b] : c.moves) table.push_back({{"source", a}, {"target", b}});
    return reply(200, {{"position", doc_json(c.document)},
                       {"chain", c.chain},
                       {"move_bijection", std::move(table)},
                       {"version", PositionDocument::kVersion}});
  }

  HttpResponse solve_request(json req) {
    SolveBudget budget = config.analysis_budget;
    if (req.contains("budget")) {
      budget = read_budget(req["budget"], budget);
      req.erase("budget");
    }
    const auto doc = read_position(req, std::nullopt);
    Engine engine(doc.ruleset, budget);
    try {
      auto r = engine.solve(doc);
      return reply(200, {{"grundy", r.grundy.to_string()},
                         {"outcome", to_string(r.outcome)},
                         {"best_move", r.best_move ? json(*r.best_move) : json(nullptr)},
                         {"nodes", r.nodes_expanded},
                         {"max_depth", r.max_depth},
                         {"version", PositionDocument::kVersion}});
    } catch (const BudgetExceeded& e) {
      throw ApiError{503, "budget_exceeded", e.what(), {{"nodes", e.nodes_expanded()}}};
    }
  }

  HttpResponse dispatch(std::string_view method, std::string_view path, std::string_view raw) {
    const auto parts = split_path(path);
    auto method_is = [&](std::string_view m) { return method == m; };
    if (parts.size() == 1 && parts[0] == "sessions") {
      if (!method_is("POST")) throw ApiError{405, "method_not_allowed", "use POST"};
      return create_session(parse_body(raw));
    }
    if (parts.size() == 2 && parts[0] == "sessions") {
      if (!method_is("GET")) throw ApiError{405, "method_not_allowed", "use GET"};
      auto s = find(parts[1]);
      std::lock_guard lock(s->mutex);
      return reply(200, summary(*s));
    }
    if (parts.size() == 3 && parts[0] == "sessions" && parts[2] == "moves") {
      if (!method_is("POST")) throw ApiError{405, "method_not_allowed", "use POST"};
      return post_move(parts[1], parse_body(raw));
    }
    if (parts.size() == 3 && parts[0] == "sessions" && parts[2] == "analysis") {
      if (!method_is("GET")) throw ApiError{405, "method_not_allowed", "use GET"};
      return analysis(parts[1]);
    }
    if (parts.size() == 1 && parts[0] == "convert") {
      if (!method_is("POST")) throw ApiError{405, "method_not_allowed", "use POST"};
      return convert_request(parse_body(raw));
    }
    if (parts.size() == 1 && parts[0] == "solve") {
      if (!method_is("POST")) throw ApiError{405, "method_not_allowed", "use POST"};
      return solve_request(parse_body(raw));
    }
    throw ApiError{404, "not_found", "no route for " + std::string(path)};
  }
};

Service::Service(ServiceConfig config) : state_(std::make_unique<State>()) {
  config.analysis_budget.validate();
  if (config.max_sessions == 0) throw InvalidArgument("max_sessions must be at least 1");
  state_->config = std::move(config);
}

Service::~Service() = default;

HttpResponse Service::handle(std::string_view method, std::string_view path, std::string_view body) {
  try {
    return state_->dispatch(method, path, body);
  } catch (const ApiError& e) {
    return error_reply(e);
  } catch (const ParseError& e) {
    return error_reply({400, "parse_error", e.what()});
  } catch (const ValidationError& e) {
    return error_reply({400, "validation_error", e.what()});
  } catch (const InfeasibleMove& e) {
    return error_reply({409, "infeasible_move", e.what()});
  } catch (const InapplicableTransformer& e) {
    return error_reply({422, "no_transformer", e.what()});
  } catch (const InvalidArgument& e) {
    return error_reply({400, "bad_request", e.what()});
  } catch (const BudgetExceeded& e) {
    return error_reply({503, "budget_exceeded", e.what()});
  } catch (const std::exception& e) {
    return error_reply({500, "internal_error", e.what()});
  }
}

std::size_t Service::session_count() const {
  std::lock_guard lock(state_->store_mutex);
  return state_->sessions.size();
}

int Service::bind(const std::string& host, int port) {
  auto& srv = state_->server;
  auto forward = [this](const httplib::Request& req, httplib::Response& res) {
    auto r = handle(req.method, req.path, req.body);
    res.status = r.status;
    res.set_content(r.body, "application/json");
  };
  srv.set_default_headers({{"Access-Control-Allow-Origin", "*"},
                           {"Access-Control-Allow-Headers", "Content-Type"},
                           {"Access-Control-Allow-Methods", "GET, POST, OPTIONS"}});
  srv.Get(".*", forward);
  srv.Post(".*", forward);
  srv.Options(".*", [](const httplib::Request&, httplib::Response& res) { res.status = 204; });
  if (port == 0) return srv.bind_to_any_port(host);
  return srv.bind_to_port(host, port) ? port : -1;
}

bool Service::listen() { return state_->server.listen_after_bind(); }

bool Service::serve(const std::string& host, int port) { return bind(host, port) >= 0 && listen(); }

void Service::wait_until_ready() const { state_->server.wait_until_ready(); }

void Service::stop() { state_->server.stop(); }

}  // namespace twave
