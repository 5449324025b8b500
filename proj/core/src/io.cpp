#include "twave/io.hpp"

#include <algorithm>
#include <array>
#include <bit>
#include <limits>

#include "json.hpp"
#include "twave/error.hpp"

namespace twave {

using nlohmann::json;

namespace {

constexpr std::array<std::pair<RulesetId, std::string_view>, 12> kNames{{
    {RulesetId::TransverseWave, "transverse_wave"},
    {RulesetId::CrosswiseAnd, "crosswise_and"},
    {RulesetId::CrosswiseOr, "crosswise_or"},
    {RulesetId::DemiQuantumBooleanNim, "demi_quantum_boolean_nim"},
    {RulesetId::Nim, "nim"},
    {RulesetId::DemiQuantumNim, "demi_quantum_nim"},
    {RulesetId::QuantumNim, "quantum_nim"},
    {RulesetId::AvoidTrue, "avoid_true"},
    {RulesetId::NodeKayles, "node_kayles"},
    {RulesetId::FriendCircle, "friend_circle"},
    {RulesetId::DemographicInfluence, "demographic_influence"},
    {RulesetId::HypergraphNim, "hypergraph_nim"},
}};

std::size_t payload_index(RulesetId id) {
  switch (id) {
    case RulesetId::TransverseWave: return 0;
    case RulesetId::CrosswiseAnd:
    case RulesetId::CrosswiseOr:
    case RulesetId::DemiQuantumBooleanNim: return 1;
    case RulesetId::Nim: return 2;
    case RulesetId::DemiQuantumNim:
    case RulesetId::QuantumNim: return 3;
    case RulesetId::AvoidTrue: return 4;
    case RulesetId::NodeKayles: return 5;
    case RulesetId::FriendCircle: return 6;
    case RulesetId::DemographicInfluence: return 7;
    case RulesetId::HypergraphNim: return 8;
  }
  return 0;
}

std::pair<std::size_t, std::size_t> line_column(std::string_view text, std::size_t offset) {
  std::size_t line = 1;
  std::size_t col = 1;
  for (std::size_t i = 0; i < offset && i < text.size(); ++i) {
    if (text[i] == '\n') {
      ++line;
      col = 1;
    } else {
      ++col;
    }
  }
  return {line, col};
}

[[noreturn]] void invalid(const std::string& where, const std::string& what) {
  throw ValidationError(where + ": " + what);
}

const json& field(const json& obj, const char* key) {
  auto it = obj.find(key);
  if (it == obj.end()) invalid(key, "missing");
  return *it;
}

std::int64_t as_int(const json& v, const std::string& where) {
  if (!v.is_number_integer()) invalid(where, "expected an integer");
  if (v.is_number_unsigned()) {
    auto u = v.get<std::uint64_t>();
    if (u > static_cast<std::uint64_t>(std::numeric_limits<std::int64_t>::max())) invalid(where, "out of range");
    return static_cast<std::int64_t>(u);
  }
  return v.get<std::int64_t>();
}

std::uint32_t as_count(const json& v, const std::string& where, std::uint64_t max = 0xFFFFFFFFULL) {
  auto x = as_int(v, where);
  if (x < 0) invalid(where, "must be non-negative");
  if (static_cast<std::uint64_t>(x) > max) invalid(where, "must be at most " + std::to_string(max));
  return static_cast<std::uint32_t>(x);
}

const json& as_array(const json& v, const std::string& where) {
  if (!v.is_array()) invalid(where, "expected an array");
  return v;
}

std::string at(const std::string& where, std::size_t i) { return where + "[" + std::to_string(i) + "]"; }

// Vertex index list -> mask, rejecting repeats.
std::uint64_t vertex_set(const json& v, const std::string& where, std::uint32_t limit, std::uint32_t base = 0) {
  std::uint64_t mask = 0;
  const auto& arr = as_array(v, where);
  for (std::size_t i = 0; i < arr.size(); ++i) {
    auto x = as_int(arr[i], at(where, i));
    if (x < base || x >= static_cast<std::int64_t>(limit) + base) {
      invalid(at(where, i), "index " + std::to_string(x) + " out of range");
    }
    const auto bit = 1ULL << (x - base);
    if (mask & bit) invalid(at(where, i), "repeated index " + std::to_string(x));
    mask |= bit;
  }
  return mask;
}

json mask_to_list(std::uint64_t mask, std::uint32_t base = 0) {
  json out = json::array();
  while (mask) {
    out.push_back(std::countr_zero(mask) + base);
    mask &= mask - 1;
  }
  return out;
}

BitRows read_rows(const json& v, bool grid) {
  const auto& arr = as_array(v, "rows");
  std::string literal;
  for (std::size_t i = 0; i < arr.size(); ++i) {
    if (!arr[i].is_string()) invalid(at("rows", i), "expected a string");
    const auto& s = arr[i].get_ref<const std::string&>();
    if (s.empty()) throw ParseError("empty row", i + 1, 1);
    if (s.find_first_of("/\n") != std::string::npos) throw ParseError("row separator inside a row", i + 1, 1);
    if (i) literal += '/';
    literal += s;
  }
  if (arr.empty()) return BitRows{};
  // The literal parser reports (row, column) positions.
  if (grid) return Grid::parse(literal).purple();
  return BooleanMatrix::parse(literal).bits();
}

void check_keys(const json& obj, std::initializer_list<const char*> allowed) {
  for (auto it = obj.begin(); it != obj.end(); ++it) {
    const auto& k = it.key();
    if (k == "ruleset" || k == "version") continue;
    if (std::none_of(allowed.begin(), allowed.end(), [&](const char* a) { return k == a; })) {
      invalid(k, "unknown field");
    }
  }
}

UndirectedGraph read_graph(const json& obj, const std::string& where) {
  const auto n = as_count(field(obj, "vertices"), where + "vertices", UndirectedGraph::kMaxVertices);
  UndirectedGraph g(n);
  const auto& edges = as_array(field(obj, "edges"), where + "edges");
  for (std::size_t i = 0; i < edges.size(); ++i) {
    const auto name = at(where + "edges", i);
    const auto& e = as_array(edges[i], name);
    if (e.size() != 2) invalid(name, "an edge has two endpoints");
    const auto u = as_count(e[0], name, n == 0 ? 0 : n - 1);
    const auto v = as_count(e[1], name, n == 0 ? 0 : n - 1);
    if (n == 0) invalid(name, "graph has no vertices");
    if (u == v) invalid(name, "self-loop");
    if (g.has_edge(u, v)) invalid(name, "repeated edge");
    g.add_edge(u, v);
  }
  return g;
}

json write_edges(const UndirectedGraph& g) {
  json edges = json::array();
  for (auto [u, v] : g.edges()) edges.push_back({u, v});
  return edges;
}

Payload read_payload(RulesetId id, const json& obj) {
  switch (id) {
    case RulesetId::TransverseWave:
    case RulesetId::CrosswiseAnd:
    case RulesetId::CrosswiseOr:
    case RulesetId::DemiQuantumBooleanNim: {
      check_keys(obj, {"rows", "cols"});
      const bool grid = id == RulesetId::TransverseWave;
      BitRows bits = read_rows(field(obj, "rows"), grid);
      if (auto it = obj.find("cols"); it != obj.end()) {
        const auto cols = as_count(*it, "cols", BitRows::kMaxColumns);
        if (bits.rows() != 0) invalid("cols", "only allowed when rows is empty");
        bits = BitRows(0, cols);
      }
      if (grid) return Grid{std::move(bits)};
      return BooleanMatrix{std::move(bits)};
    }
    case RulesetId::Nim: {
      check_keys(obj, {"heaps"});
      const auto& arr = as_array(field(obj, "heaps"), "heaps");
      NimPosition p;
      for (std::size_t i = 0; i < arr.size(); ++i) p.heaps.push_back(as_count(arr[i], at("heaps", i)));
      return p;
    }
    case RulesetId::DemiQuantumNim:
    case RulesetId::QuantumNim: {
      check_keys(obj, {"realizations"});
      const auto& arr = as_array(field(obj, "realizations"), "realizations");
      std::vector<NimPosition> rs;
      for (std::size_t i = 0; i < arr.size(); ++i) {
        const auto& row = as_array(arr[i], at("realizations", i));
        NimPosition p;
        for (std::size_t j = 0; j < row.size(); ++j) {
          p.heaps.push_back(as_count(row[j], at(at("realizations", i), j)));
        }
        rs.push_back(std::move(p));
      }
      return Superposition{std::move(rs)};
    }
    case RulesetId::AvoidTrue: {
      check_keys(obj, {"vars", "clauses", "true_set"});
      CnfPosition c;
      c.var_count = as_count(field(obj, "vars"), "vars", 64);
      const auto& clauses = as_array(field(obj, "clauses"), "clauses");
      for (std::size_t i = 0; i < clauses.size(); ++i) {
        c.clauses.push_back(vertex_set(clauses[i], at("clauses", i), c.var_count, 1));
      }
      c.true_set = vertex_set(field(obj, "true_set"), "true_set", c.var_count, 1);
      return c;
    }
    case RulesetId::NodeKayles: {
      check_keys(obj, {"vertices", "edges", "removed"});
      UndirectedGraph g = read_graph(obj, "");
      if (auto it = obj.find("removed"); it != obj.end()) {
        g.remove_vertices(vertex_set(*it, "removed", static_cast<std::uint32_t>(g.vertex_count())));
      }
      return g;
    }
    case RulesetId::FriendCircle: {
      check_keys(obj, {"vertices", "edges", "seeds", "weights"});
      UndirectedGraph g = read_graph(obj, "");
      const auto n = static_cast<std::uint32_t>(g.vertex_count());
      FriendCirclePosition p(g, vertex_set(field(obj, "seeds"), "seeds", n));
      const auto& weights = as_array(field(obj, "weights"), "weights");
      std::vector<std::uint64_t> covered(n, 0);
      for (std::size_t i = 0; i < weights.size(); ++i) {
        const auto name = at("weights", i);
        const auto& w = as_array(weights[i], name);
        if (w.size() != 3 || !w[2].is_string()) invalid(name, "expected [u, v, \"t\"|\"f\"]");
        const auto u = as_count(w[0], name, n == 0 ? 0 : n - 1);
        const auto v = as_count(w[1], name, n == 0 ? 0 : n - 1);
        const auto& tag = w[2].get_ref<const std::string&>();
        if (tag != "t" && tag != "f") invalid(name, "weight must be \"t\" or \"f\"");
        if (n == 0 || !g.has_edge(u, v)) invalid(name, "weight on a non-edge");
        if ((covered[u] >> v) & 1U) invalid(name, "repeated weight");
        covered[u] |= 1ULL << v;
        covered[v] |= 1ULL << u;
        p.set_weight(u, v, tag == "t");
      }
      for (std::uint32_t v = 0; v < n; ++v) {
        if (covered[v] != g.neighbors(v)) invalid("weights", "every edge needs exactly one weight");
      }
      return p;
    }
    case RulesetId::DemographicInfluence: {
      check_keys(obj, {"graph", "theta", "demographics"});
      const auto& gj = field(obj, "graph");
      if (!gj.is_object()) invalid("graph", "expected an object");
      for (auto it = gj.begin(); it != gj.end(); ++it) {
        if (it.key() != "vertices" && it.key() != "edges") invalid("graph." + it.key(), "unknown field");
      }
      InfluenceNetwork z;
      z.graph = read_graph(gj, "graph.");
      const auto n = static_cast<std::uint32_t>(z.graph.vertex_count());
      const auto& theta = as_array(field(obj, "theta"), "theta");
      if (theta.size() != n) invalid("theta", "needs one entry per vertex");
      for (std::size_t i = 0; i < theta.size(); ++i) z.theta.push_back(as_int(theta[i], at("theta", i)));
      const auto& demos = as_array(field(obj, "demographics"), "demographics");
      for (std::size_t i = 0; i < demos.size(); ++i) z.demographics.push_back(vertex_set(demos[i], at("demographics", i), n));
      return z;
    }
    case RulesetId::HypergraphNim: {
      check_keys(obj, {"vertices", "hyperedges", "pebbles", "current"});
      HypergraphNimPosition h;
      h.vertex_count = as_count(field(obj, "vertices"), "vertices", 64);
      const auto& edges = as_array(field(obj, "hyperedges"), "hyperedges");
      for (std::size_t i = 0; i < edges.size(); ++i) h.hyperedges.push_back(vertex_set(edges[i], at("hyperedges", i), h.vertex_count));
      const auto& pebbles = as_array(field(obj, "pebbles"), "pebbles");
      if (pebbles.size() != h.vertex_count) invalid("pebbles", "needs one entry per vertex");
      for (std::size_t i = 0; i < pebbles.size(); ++i) {
        if (as_count(pebbles[i], at("pebbles", i), 1)) h.pebbles |= 1ULL << i;
      }
      h.current = as_count(field(obj, "current"), "current");
      return h;
    }
  }
  throw ValidationError("unknown ruleset");
}

json write_payload(const PositionDocument& doc) {
  json out = json::object();
  std::visit(
      [&](const auto& p) {
        using T = std::decay_t<decltype(p)>;
        if constexpr (std::is_same_v<T, Grid> || std::is_same_v<T, BooleanMatrix>) {
          out["rows"] = p.row_strings();
          if (p.rows() == 0 && p.cols() != 0) out["cols"] = p.cols();
        } else if constexpr (std::is_same_v<T, NimPosition>) {
          out["heaps"] = p.heaps;
        } else if constexpr (std::is_same_v<T, Superposition>) {
          json rs = json::array();
          for (const auto& r : p.realizations()) rs.push_back(r.heaps);
          out["realizations"] = std::move(rs);
        } else if constexpr (std::is_same_v<T, CnfPosition>) {
          out["vars"] = p.var_count;
          json clauses = json::array();
          for (auto c : p.clauses) clauses.push_back(mask_to_list(c, 1));
          out["clauses"] = std::move(clauses);
          out["true_set"] = mask_to_list(p.true_set, 1);
        } else if constexpr (std::is_same_v<T, UndirectedGraph>) {
          out["vertices"] = p.vertex_count();
          out["edges"] = write_edges(p);
          const std::uint64_t all = p.vertex_count() == 64 ? ~0ULL : ((1ULL << p.vertex_count()) - 1);
          if (p.vertices() != all) out["removed"] = mask_to_list(all & ~p.vertices());
        } else if constexpr (std::is_same_v<T, FriendCirclePosition>) {
          out["vertices"] = p.graph.vertex_count();
          out["edges"] = write_edges(p.graph);
          out["seeds"] = mask_to_list(p.seeds);
          json weights = json::array();
          for (auto [u, v] : p.graph.edges()) weights.push_back({u, v, p.is_true(u, v) ? "t" : "f"});
          out["weights"] = std::move(weights);
        } else if constexpr (std::is_same_v<T, InfluenceNetwork>) {
          out["graph"] = {{"vertices", p.graph.vertex_count()}, {"edges", write_edges(p.graph)}};
          out["theta"] = p.theta;
          json demos = json::array();
          for (auto d : p.demographics) demos.push_back(mask_to_list(d));
          out["demographics"] = std::move(demos);
        } else if constexpr (std::is_same_v<T, HypergraphNimPosition>) {
          out["vertices"] = p.vertex_count;
          json edges = json::array();
          for (auto e : p.hyperedges) edges.push_back(mask_to_list(e));
          out["hyperedges"] = std::move(edges);
          json pebbles = json::array();
          for (std::uint32_t v = 0; v < p.vertex_count; ++v) pebbles.push_back((p.pebbles >> v) & 1U);
          out["pebbles"] = std::move(pebbles);
          out["current"] = p.current;
        }
      },
      doc.payload);
  out["ruleset"] = ruleset_name(doc.ruleset);
  out["version"] = doc.version;
  return out;
}

std::string_view trim(std::string_view s) {
  while (!s.empty() && std::isspace(static_cast<unsigned char>(s.front()))) s.remove_prefix(1);
  while (!s.empty() && std::isspace(static_cast<unsigned char>(s.back()))) s.remove_suffix(1);
  return s;
}

}  // namespace

std::string_view ruleset_name(RulesetId id) {
  for (auto [k, name] : kNames) {
    if (k == id) return name;
  }
  return "unknown";
}

std::optional<RulesetId> ruleset_from_name(std::string_view name) {
  for (auto [k, n] : kNames) {
    if (n == name) return k;
  }
  return std::nullopt;
}

const std::vector<RulesetId>& all_rulesets() {
  static const std::vector<RulesetId> ids = [] {
    std::vector<RulesetId> out;
    for (auto [k, n] : kNames) out.push_back(k);
    return out;
  }();
  return ids;
}

PositionDocument make_document(RulesetId ruleset, Payload payload) {
  if (payload.index() != payload_index(ruleset)) {
    throw ValidationError("payload type does not match ruleset " + std::string(ruleset_name(ruleset)));
  }
  std::visit(
      [](const auto& p) {
        if constexpr (requires { p.validate(); }) p.validate();
      },
      payload);
  return PositionDocument{ruleset, std::move(payload), PositionDocument::kVersion};
}

PositionDocument parse_position(std::string_view text) {
  const auto body = trim(text);
  if (body.empty()) throw ParseError("empty input", 1, 1);
  if (body.front() != '{') return make_document(RulesetId::TransverseWave, Grid::parse(body));

  json obj;
  try {
    obj = json::parse(text);
  } catch (const json::parse_error& e) {
    auto [line, col] = line_column(text, e.byte == 0 ? 0 : e.byte - 1);
    std::string msg = e.what();
    if (auto p = msg.find("syntax error"); p != std::string::npos) msg = msg.substr(p);
    throw ParseError(msg, line, col);
  }
  if (!obj.is_object()) throw ValidationError("document must be a JSON object");
  const auto& rs = field(obj, "ruleset");
  if (!rs.is_string()) invalid("ruleset", "expected a string");
  auto id = ruleset_from_name(rs.get_ref<const std::string&>());
  if (!id) invalid("ruleset", "unknown ruleset \"" + rs.get<std::string>() + "\"");
  if (auto it = obj.find("version"); it != obj.end()) {
    if (as_int(*it, "version") != PositionDocument::kVersion) invalid("version", "only version 1 is supported");
  }
  return make_document(*id, read_payload(*id, obj));
}

std::string serialize_position(const PositionDocument& doc) { return write_payload(doc).dump(); }

}  // namespace twave
