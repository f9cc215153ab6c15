#include "wvc/io.hpp"

#include <charconv>
#include <fstream>
#include <sstream>

#include "wvc/errors.hpp"

namespace wvc {

std::optional<GraphFormat> parse_graph_format(std::string_view name) {
  if (name == "dimacs") return GraphFormat::dimacs;
  if (name == "json") return GraphFormat::json;
  return std::nullopt;
}

std::string to_string(GraphFormat format) {
  return format == GraphFormat::json ? "json" : "dimacs";
}

GraphFormat detect_format(std::string_view text) {
  for (char c : text) {
    if (c == ' ' || c == '\t' || c == '\r' || c == '\n') continue;
    return c == '{' ? GraphFormat::json : GraphFormat::dimacs;
  }
  return GraphFormat::dimacs;
}

namespace {

[[noreturn]] void fail_at(int line, const std::string& message) {
  throw InputError("line " + std::to_string(line) + ": " + message);
}

std::int64_t to_integer(std::string_view token, int line) {
  std::int64_t value = 0;
  const auto* end = token.data() + token.size();
  const auto [ptr, ec] = std::from_chars(token.data(), end, value);
  if (ec != std::errc{} || ptr != end) fail_at(line, "expected an integer, got '" + std::string(token) + "'");
  return value;
}

}  // namespace

WeightedGraph parse_dimacs(std::string_view text) {
  std::istringstream in{std::string(text)};
  std::string raw;
  int line = 0;
  std::optional<std::int64_t> n;
  std::vector<Edge> edges;
  std::vector<Weight> weights;
  while (std::getline(in, raw)) {
    ++line;
    std::istringstream fields(raw);
    std::vector<std::string> tok;
    for (std::string t; fields >> t;) tok.push_back(t);
    if (tok.empty() || tok[0] == "c") continue;
    const std::string& kind = tok[0];
    if (kind == "p") {
      if (n) fail_at(line, "duplicate problem line");
      if (tok.size() != 4 || tok[1] != "edge") fail_at(line, "expected 'p edge <n> <m>'");
      n = to_integer(tok[2], line);
      to_integer(tok[3], line);
      if (*n < 0) fail_at(line, "negative vertex count");
      weights.assign(static_cast<std::size_t>(*n), 1);
    } else if (kind == "e" || kind == "w") {
      if (!n) fail_at(line, "'" + kind + "' line before the problem line");
      if (tok.size() != 3) fail_at(line, "expected '" + kind + (kind == "e" ? " <u> <v>'" : " <v> <weight>'"));
      const auto a = to_integer(tok[1], line);
      const auto b = to_integer(tok[2], line);
      if (a < 1 || a > *n) fail_at(line, "vertex " + tok[1] + " out of range 1.." + std::to_string(*n));
      if (kind == "e") {
        if (b < 1 || b > *n) fail_at(line, "vertex " + tok[2] + " out of range 1.." + std::to_string(*n));
        if (a == b) fail_at(line, "self-loop at vertex " + tok[1]);
        edges.emplace_back(static_cast<Vertex>(a - 1), static_cast<Vertex>(b - 1));
      } else {
        if (b < 1) fail_at(line, "nonpositive weight " + tok[2] + " for vertex " + tok[1]);
        weights[a - 1] = b;
      }
    } else {
      fail_at(line, "unknown line type '" + kind + "'");
    }
  }
  if (!n) throw InputError("line " + std::to_string(line + 1) + ": missing 'p edge <n> <m>' line");
  return WeightedGraph::build(static_cast<int>(*n), edges, weights);
}

std::string to_dimacs(const WeightedGraph& g) {
  std::ostringstream out;
  const auto edges = g.edges();
  out << "p edge " << g.size() << ' ' << edges.size() << '\n';
  for (auto [u, v] : edges) out << "e " << u + 1 << ' ' << v + 1 << '\n';
  for (Vertex v = 0; v < g.size(); ++v) {
    if (g.weight(v) != 1) out << "w " << v + 1 << ' ' << g.weight(v) << '\n';
  }
  return out.str();
}

WeightedGraph graph_from_json(const nlohmann::json& doc) {
  try {
    if (!doc.is_object() || !doc.contains("n")) throw InputError("graph JSON needs an object with \"n\"");
    const auto n = doc.at("n").get<std::int64_t>();
    if (n < 0) throw InputError("negative vertex count");
    std::vector<Edge> edges;
    if (doc.contains("edges")) {
      for (const auto& e : doc.at("edges")) {
        if (!e.is_array() || e.size() != 2) throw InputError("edge " + e.dump() + " is not a pair");
        edges.emplace_back(e[0].get<Vertex>(), e[1].get<Vertex>());
      }
    }
    std::vector<Weight> weights(static_cast<std::size_t>(n), 1);
    if (doc.contains("weights")) {
      for (const auto& [key, value] : doc.at("weights").items()) {
        std::int64_t v = 0;
        const auto [ptr, ec] = std::from_chars(key.data(), key.data() + key.size(), v);
        if (ec != std::errc{} || ptr != key.data() + key.size() || v < 0 || v >= n) {
          throw InputError("weight key '" + key + "' is not a vertex in 0.." + std::to_string(n - 1));
        }
        weights[v] = value.get<Weight>();
      }
    }
    return WeightedGraph::build(static_cast<int>(n), edges, weights);
  } catch (const nlohmann::json::exception& e) {
    throw InputError(std::string("graph JSON: ") + e.what());
  }
}

nlohmann::json graph_to_json(const WeightedGraph& g) {
  nlohmann::json doc;
  doc["n"] = g.size();
  doc["edges"] = nlohmann::json::array();
  for (auto [u, v] : g.edges()) doc["edges"].push_back({u, v});
  doc["weights"] = nlohmann::json::object();
  for (Vertex v = 0; v < g.size(); ++v) doc["weights"][std::to_string(v)] = g.weight(v);
  return doc;
}

WeightedGraph parse_graph_json(std::string_view text) {
  nlohmann::json doc;
  try {
    doc = nlohmann::json::parse(text);
  } catch (const nlohmann::json::parse_error& e) {
    throw InputError(std::string("graph JSON: ") + e.what());
  }
  return graph_from_json(doc);
}

WeightedGraph parse_graph(std::string_view text, std::optional<GraphFormat> format) {
  return format.value_or(detect_format(text)) == GraphFormat::json ? parse_graph_json(text)
                                                                   : parse_dimacs(text);
}

std::string serialize_graph(const WeightedGraph& g, GraphFormat format) {
  return format == GraphFormat::json ? graph_to_json(g).dump() + "\n" : to_dimacs(g);
}

std::string read_text_file(const std::filesystem::path& path) {
  std::ifstream in(path, std::ios::binary);
  if (!in) throw InputError("cannot read " + path.string());
  std::ostringstream buffer;
  buffer << in.rdbuf();
  return buffer.str();
}

void write_text_file(const std::filesystem::path& path, std::string_view text) {
  if (path.has_parent_path()) std::filesystem::create_directories(path.parent_path());
  std::ofstream out(path, std::ios::binary);
  if (!out) throw InputError("cannot write " + path.string());
  out << text;
}

nlohmann::json coloring_to_json(const WeightedColoring& c) {
  nlohmann::json classes = nlohmann::json::array();
  for (const auto& cls : c.classes) classes.push_back(cls);
  return classes;
}

WeightedColoring coloring_from_json(const nlohmann::json& classes) {
  WeightedColoring c;
  try {
    for (const auto& cls : classes) c.classes.push_back(cls.get<VertexSet>());
  } catch (const nlohmann::json::exception& e) {
    throw InputError(std::string("colouring JSON: ") + e.what());
  }
  return c;
}

}  // namespace wvc
