// twave: solve, inspect, convert and serve Transverse Wave family positions.

#include <csignal>
#include <fstream>
#include <iostream>
#include <iterator>
#include <sstream>

#include "CLI11.hpp"
#include "json.hpp"
#include "twave/closed_form.hpp"
#include "twave/engine.hpp"
#include "twave/error.hpp"
#include "twave/io.hpp"
#include "twave/quantum_nim.hpp"
#include "twave/reductions.hpp"
#include "twave/service.hpp"

namespace {

using namespace twave;
using nlohmann::json;

enum Exit { kOk = 0, kFailed = 1, kBadInput = 2, kInfeasible = 3, kBudget = 4 };

std::string read_input(const std::string& path) {
  if (path == "-") {
    return {std::istreambuf_iterator<char>(std::cin), std::istreambuf_iterator<char>()};
  }
  std::ifstream in(path);
  if (!in) throw ValidationError("cannot open " + path);
  std::ostringstream ss;
  ss << in.rdbuf();
  return ss.str();
}

PositionDocument load(const std::string& path) { return parse_position(read_input(path)); }

SolveBudget budget_from(std::uint64_t nodes, std::uint64_t memo) {
  SolveBudget b;
  if (nodes) b.max_nodes = nodes;
  if (memo) b.max_memo_entries = memo;
  return b;
}

int cmd_solve(const std::string& file, std::uint64_t nodes, std::uint64_t memo, bool extract, bool as_json) {
  const auto doc = load(file);
  Engine engine(doc.ruleset, budget_from(nodes, memo), EngineOptions{extract, 0});
  const auto r = engine.solve(doc);
  if (as_json) {
    std::cout << json{{"grundy", r.grundy.to_string()},
                      {"outcome", to_string(r.outcome)},
                      {"best_move", r.best_move ? json(*r.best_move) : json(nullptr)},
                      {"nodes", r.nodes_expanded},
                      {"max_depth", r.max_depth}}
                     .dump()
              << '\n';
  } else {
    std::cout << "grundy:    " << r.grundy << '\n'
              << "outcome:   " << r.outcome << '\n'
              << "best move: " << r.best_move.value_or("-") << '\n'
              << "nodes:     " << r.nodes_expanded << '\n'
              << "depth:     " << r.max_depth << '\n';
  }
  return kOk;
}

int cmd_moves(const std::string& file, bool as_json) {
  const auto doc = load(file);
  Engine engine(doc.ruleset);
  const auto options = engine.options(doc);
  if (as_json) {
    json out = json::array();
    for (const auto& o : options) {
      out.push_back({{"move", o.move}, {"position", json::parse(serialize_position(o.successor))}});
    }
    std::cout << out.dump() << '\n';
    return kOk;
  }
  for (const auto& o : options) {
    std::cout << o.move << '\t';
    if (const auto* g = std::get_if<Grid>(&o.successor.payload)) {
      std::cout << g->to_literal();
    } else {
      std::cout << serialize_position(o.successor);
    }
    std::cout << '\n';
  }
  return kOk;
}

int cmd_apply(const std::string& file, const std::string& move, const std::string& out_path) {
  const auto doc = load(file);
  const auto next = Engine(doc.ruleset).apply(doc, move);
  const auto text = serialize_position(next) + "\n";
  if (out_path.empty() || out_path == "-") {
    std::cout << text;
  } else {
    std::ofstream(out_path) << text;
  }
  return kOk;
}

int cmd_triangle(std::uint32_t max_rows, bool oracle, std::uint32_t extras, bool as_json) {
  bool all_agree = true;
  json rows = json::array();
  Engine engine(RulesetId::TransverseWave);
  for (std::uint32_t p = 1; p <= max_rows; ++p) {
    json row = json::array();
    std::string line = "p=" + std::to_string(p) + ":";
    std::string oracle_line = "  oracle:";
    for (std::uint32_t k = 0; k <= p; ++k) {
      const auto v = triangle_value({p, k, extras & 1U});
      line += " " + v.to_string();
      json cell = {{"k", k}, {"value", v.to_string()}};
      if (oracle) {
        const auto g = engine.solve(make_document(RulesetId::TransverseWave, triangle_position(p, k, extras))).grundy;
        oracle_line += " " + g.to_string();
        cell["oracle"] = g.to_string();
        if (g != v) {
          all_agree = false;
          oracle_line += "!";
        }
      }
      row.push_back(std::move(cell));
    }
    rows.push_back(std::move(row));
    if (!as_json) {
      std::cout << line << '\n';
      if (oracle) std::cout << oracle_line << '\n';
    }
  }
  if (as_json) std::cout << json{{"rows", rows}, {"agree", all_agree}}.dump() << '\n';
  if (oracle && !as_json) std::cout << (all_agree ? "closed form agrees with the solver\n" : "MISMATCH\n");
  return all_agree ? kOk : kFailed;
}

int cmd_convert(const std::string& file, const std::string& to, bool show_moves) {
  const auto doc = load(file);
  const auto target = ruleset_from_name(to);
  if (!target) throw ValidationError("unknown ruleset " + to);
  const auto c = convert(doc, *target);
  std::cout << serialize_position(c.document) << '\n';
  if (show_moves) {
    std::cerr << "chain:";
    for (const auto& n : c.chain) std::cerr << ' ' << n;
    std::cerr << '\n';
    for (const auto& [a, b] : c.moves) std::cerr << "  " << a << " -> " << b << '\n';
  }
  return kOk;
}

void print_report(const ReductionReport& r) {
  std::cout << (r.pass ? "pass" : "FAIL") << "  " << r.transformer << "  source " << r.source_grundy << "  target "
            << r.target_grundy << "  depth " << r.move_bijection_depth << "  pairs " << r.position_pairs << '\n';
  if (!r.pass) {
    std::cout << "  " << r.detail << '\n';
    if (r.counterexample) std::cout << "  counterexample: " << *r.counterexample << '\n';
  }
}

int cmd_verify(const std::string& name, const std::string& file, std::uint32_t samples, std::uint64_t seed,
               std::uint64_t nodes) {
  const auto budget = budget_from(nodes, 0);
  if (!file.empty()) {
    const auto r = verify_reduction(load(file), name, budget);
    print_report(r);
    return r.pass ? kOk : kFailed;
  }
  Rng rng(seed);
  std::uint32_t failures = 0;
  for (std::uint32_t i = 0; i < samples; ++i) {
    const auto doc = sample_source(name, rng);
    const auto r = verify_reduction(doc, name, budget);
    if (!r.pass) {
      ++failures;
      print_report(r);
    }
  }
  std::cout << name << ": " << samples - failures << "/" << samples << " samples pass\n";
  return failures ? kFailed : kOk;
}

int cmd_qnim(const std::string& file, std::uint32_t max_width, std::uint64_t nodes, bool as_json) {
  auto doc = load(file);
  if (doc.ruleset == RulesetId::DemiQuantumNim || doc.ruleset == RulesetId::Nim) {
    Superposition s = doc.ruleset == RulesetId::Nim ? Superposition{std::vector<NimPosition>{std::get<NimPosition>(doc.payload)}}
                                                     : std::get<Superposition>(doc.payload);
    doc = make_document(RulesetId::QuantumNim, std::move(s));
  }
  if (doc.ruleset != RulesetId::QuantumNim) throw ValidationError("qnim expects a Nim or superposition position");
  Engine engine(RulesetId::QuantumNim, budget_from(nodes, 0), EngineOptions{false, max_width});
  const auto r = engine.solve(doc);
  const auto options = engine.options(doc);
  if (as_json) {
    json opts = json::array();
    for (const auto& o : options) opts.push_back(o.move);
    std::cout << json{{"outcome", to_string(r.outcome)},
                      {"grundy", r.grundy.to_string()},
                      {"best_move", r.best_move ? json(*r.best_move) : json(nullptr)},
                      {"moves", opts},
                      {"nodes", r.nodes_expanded}}
                     .dump()
              << '\n';
  } else {
    std::cout << "outcome:   " << r.outcome << '\n'
              << "grundy:    " << r.grundy << '\n'
              << "best move: " << r.best_move.value_or("-") << '\n'
              << "moves:     " << options.size() << '\n'
              << "nodes:     " << r.nodes_expanded << '\n';
  }
  return kOk;
}

Service* running = nullptr;

int cmd_serve(const std::string& host, int port, const std::string& history, std::uint64_t nodes) {
  ServiceConfig config;
  config.analysis_budget = budget_from(nodes, 0);
  if (!history.empty()) config.history_path = history;
  Service service(config);
  running = &service;
  std::signal(SIGINT, [](int) {
    if (running) running->stop();
  });
  std::cerr << "listening on " << host << ":" << port << '\n';
  const bool ok = service.serve(host, port);
  running = nullptr;
  return ok ? kOk : kFailed;
}

}  // namespace

int main(int argc, char** argv) {
  CLI::App app{"Transverse Wave workbench"};
  app.require_subcommand(1);

  std::string file = "-";
  std::string move;
  std::string out;
  std::string to;
  std::string reduction;
  std::string host = "127.0.0.1";
  std::string history;
  std::uint64_t nodes = 0;
  std::uint64_t memo = 0;
  std::uint64_t seed = 1;
  std::uint32_t samples = 0;
  std::uint32_t max_rows = 8;
  std::uint32_t extras = 0;
  std::uint32_t max_width = 0;
  int port = 8080;
  bool as_json = false;
  bool extract = false;
  bool oracle = false;
  bool show_moves = false;

  auto* solve = app.add_subcommand("solve", "Grundy value, outcome and best move");
  solve->add_option("file", file, "position file, or - for stdin");
  solve->add_option("--budget-nodes", nodes, "node expansion limit");
  solve->add_option("--budget-memo", memo, "memo entry limit");
  solve->add_flag("--extract-green", extract, "treat all-green columns as *1 summands");
  solve->add_flag("--json", as_json);

  auto* moves = app.add_subcommand("moves", "List feasible moves and successors");
  moves->add_option("file", file)->required();
  moves->add_flag("--json", as_json);

  auto* apply = app.add_subcommand("apply", "Write the successor after a move");
  apply->add_option("file", file)->required();
  apply->add_option("--move,-m", move)->required();
  apply->add_option("--out,-o", out);

  auto* triangle = app.add_subcommand("triangle", "Print the nimber triangle");
  triangle->add_option("--max-rows", max_rows)->check(CLI::Range(1, 20));
  triangle->add_option("--extra-columns", extras, "all-green columns added to each position");
  triangle->add_flag("--oracle", oracle, "check each entry with the solver");
  triangle->add_flag("--json", as_json);

  auto* conv = app.add_subcommand("convert", "Transform a position into another ruleset");
  conv->add_option("file", file)->required();
  conv->add_option("--to", to)->required();
  conv->add_flag("--moves", show_moves, "print the move correspondence to stderr");

  auto* verify = app.add_subcommand("verify", "Check a reduction by exhaustive search");
  verify->add_option("--reduction", reduction)->required();
  auto* vfile = verify->add_option("--file", file);
  auto* vsamples = verify->add_option("--samples", samples);
  verify->add_option("--seed", seed);
  verify->add_option("--budget-nodes", nodes);
  vfile->excludes(vsamples);

  auto* qnim = app.add_subcommand("qnim", "Variant-D quantum Nim outcome");
  qnim->add_option("file", file)->required();
  qnim->add_option("--max-width", max_width, "largest number of parts in a quantum move");
  qnim->add_option("--budget-nodes", nodes);
  qnim->add_flag("--json", as_json);

  auto* serve = app.add_subcommand("serve", "Run the HTTP service");
  serve->add_option("--port", port);
  serve->add_option("--host", host);
  serve->add_option("--history", history, "append session events to this file");
  serve->add_option("--budget-nodes", nodes);

  try {
    app.parse(argc, argv);
  } catch (const CLI::ParseError& e) {
    const int code = app.exit(e);
    return code == 0 ? kOk : kBadInput;
  }

  try {
    if (*solve) return cmd_solve(file, nodes, memo, extract, as_json);
    if (*moves) return cmd_moves(file, as_json);
    if (*apply) return cmd_apply(file, move, out);
    if (*triangle) return cmd_triangle(max_rows, oracle, extras, as_json);
    if (*conv) return cmd_convert(file, to, show_moves);
    if (*verify) {
      if (vfile->count() == 0 && samples == 0) throw ValidationError("verify needs --file or --samples");
      return cmd_verify(reduction, vfile->count() ? file : "", samples, seed, nodes);
    }
    if (*qnim) return cmd_qnim(file, max_width, nodes, as_json);
    if (*serve) return cmd_serve(host, port, history, nodes);
  } catch (const ParseError& e) {
    std::cerr << "parse error: " << e.what() << '\n';
    return kBadInput;
  } catch (const ValidationError& e) {
    std::cerr << "invalid position: " << e.what() << '\n';
    return kBadInput;
  } catch (const InfeasibleMove& e) {
    std::cerr << "infeasible move: " << e.what() << '\n';
    return kInfeasible;
  } catch (const BudgetExceeded& e) {
    std::cerr << "budget exceeded after " << e.nodes_expanded() << " nodes: " << e.what() << '\n';
    return kBudget;
  } catch (const Error& e) {
    std::cerr << "error: " << e.what() << '\n';
    return kBadInput;
  }
  return kOk;
}
