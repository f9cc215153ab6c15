#pragma once

#include <filesystem>
#include <optional>
#include <string>
#include <string_view>

#include <json.hpp>

#include "wvc/graph.hpp"

namespace wvc {

enum class GraphFormat { dimacs, json };

std::optional<GraphFormat> parse_graph_format(std::string_view name);
std::string to_string(GraphFormat format);
// JSON when the first non-blank character is '{', DIMACS otherwise.
GraphFormat detect_format(std::string_view text);

// Extended DIMACS: "p edge n m", "e u v" (1-based), "w v weight", "c ...".
// Errors are InputError messages starting with "line N:".
WeightedGraph parse_dimacs(std::string_view text);
std::string to_dimacs(const WeightedGraph& g);

// {"n": int, "edges": [[u, v], ...], "weights": {"v": w, ...}}, 0-based.
WeightedGraph graph_from_json(const nlohmann::json& doc);
nlohmann::json graph_to_json(const WeightedGraph& g);
WeightedGraph parse_graph_json(std::string_view text);

WeightedGraph parse_graph(std::string_view text, std::optional<GraphFormat> format = {});
std::string serialize_graph(const WeightedGraph& g, GraphFormat format);

// Throws InputError when the file cannot be read.
std::string read_text_file(const std::filesystem::path& path);
void write_text_file(const std::filesystem::path& path, std::string_view text);

nlohmann::json coloring_to_json(const WeightedColoring& c);
WeightedColoring coloring_from_json(const nlohmann::json& classes);

}  // namespace wvc
