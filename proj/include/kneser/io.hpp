#pragma once

#include <filesystem>
#include <string>
#include <string_view>

#include <json.hpp>

#include "kneser/clique_cover.hpp"
#include "kneser/encoding.hpp"
#include "kneser/exact.hpp"
#include "kneser/graph.hpp"
#include "kneser/linear_space.hpp"
#include "kneser/representation.hpp"

// Readers throw ParameterError on malformed input.
namespace kneser::io {

using nlohmann::json;

std::string read_file(const std::filesystem::path& path);
void write_file(const std::filesystem::path& path, std::string_view text);

/// {"n": int, "edges": [[u,v],...]}, u < v, sorted.
json graph_to_json(const Graph& g);
Graph graph_from_json(const json& j);

/// "n=<int>" header line, then one "u v" pair per line. Blank lines and
/// lines starting with '#' are skipped.
std::string graph_to_edge_list(const Graph& g);
Graph graph_from_edge_list(std::string_view text);

/// JSON when the first non-blank character is '{', edge list otherwise.
Graph parse_graph(std::string_view text);

/// Graph JSON plus "sides": 2; edges are [left, right].
json bipartite_to_json(const BipartiteGraph& g);
BipartiteGraph bipartite_from_json(const json& j);

/// {"ground_size": s, "sets": {"0": [...], "1": [...], ...}}
json representation_to_json(const SetRepresentation& rep);
SetRepresentation representation_from_json(const json& j);

/// Permutations as arrays; each matrix is n rows by ground_size columns,
/// row-major, packed most significant bit first and base64-encoded.
json encoding_to_json(const BipartiteEncoding& enc);
BipartiteEncoding encoding_from_json(const json& j);

/// {"n": int, "cliques": [[...], ...]}
json cover_to_json(const CliqueCover& c);
CliqueCover cover_from_json(const json& j);

/// {"points": N, "lines": [[...], ...]}
json linear_space_to_json(const LinearSpace& ls);
LinearSpace linear_space_from_json(const json& j);

/// {"value", "exact", "witness", "nodes_explored"}; the witness is a
/// representation object or a list of colorings.
json solver_result_to_json(const SolverResult& r);

json parse_json(std::string_view text);

}  // namespace kneser::io
