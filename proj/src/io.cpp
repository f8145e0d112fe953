#include "kneser/io.hpp"

#include <sodium.h>

#include <algorithm>
#include <charconv>
#include <fstream>
#include <sstream>

namespace kneser::io {

namespace {

[[noreturn]] void bad(const std::string& what) { throw ParameterError(what); }

template <typename T>
T get(const json& j, const char* key) {
  if (!j.is_object() || !j.contains(key)) bad(std::string("missing field \"") + key + "\"");
  try {
    return j.at(key).get<T>();
  } catch (const json::exception&) {
    bad(std::string("field \"") + key + "\" has the wrong type");
  }
}

std::string to_base64(const std::vector<unsigned char>& bytes) {
  if (bytes.empty()) return {};
  const int variant = sodium_base64_VARIANT_ORIGINAL;
  std::string out(sodium_base64_ENCODED_LEN(bytes.size(), variant), '\0');
  sodium_bin2base64(out.data(), out.size(), bytes.data(), bytes.size(), variant);
  out.pop_back();  // trailing NUL
  return out;
}

std::vector<unsigned char> from_base64(const std::string& text) {
  if (text.empty()) return {};
  std::vector<unsigned char> out(text.size());
  std::size_t len = 0;
  if (sodium_base642bin(out.data(), out.size(), text.data(), text.size(), nullptr, &len, nullptr,
                        sodium_base64_VARIANT_ORIGINAL) != 0) {
    bad("invalid base64 matrix");
  }
  out.resize(len);
  // libsodium tolerates missing padding; only the canonical form is accepted
  if (to_base64(out) != text) bad("invalid base64 matrix");
  return out;
}

std::string pack_rows(const std::vector<Bitset>& rows, std::size_t columns) {
  std::vector<unsigned char> bytes((rows.size() * columns + 7) / 8, 0);
  std::size_t bit = 0;
  for (const auto& row : rows) {
    for (std::size_t c = 0; c < columns; ++c, ++bit) {
      if (row.test(c)) bytes[bit / 8] |= static_cast<unsigned char>(0x80u >> (bit % 8));
    }
  }
  return to_base64(bytes);
}

std::vector<Bitset> unpack_rows(const std::string& text, std::size_t rows, std::size_t columns) {
  const auto bytes = from_base64(text);
  if (bytes.size() != (rows * columns + 7) / 8) bad("matrix has the wrong number of bytes");
  std::vector<Bitset> out(rows, Bitset(columns));
  std::size_t bit = 0;
  for (auto& row : out) {
    for (std::size_t c = 0; c < columns; ++c, ++bit) {
      if (bytes[bit / 8] & (0x80u >> (bit % 8))) row.set(c);
    }
  }
  return out;
}

Graph build_graph(std::size_t n, const std::vector<Edge>& edges) {
  Graph g(static_cast<Vertex>(n));
  for (auto [u, v] : edges) {
    if (u >= n || v >= n || u == v) {
      bad("invalid edge {" + std::to_string(u) + "," + std::to_string(v) + "}");
    }
    g.add_edge(u, v);
  }
  return g;
}

std::vector<Edge> edge_pairs(const json& j) {
  const auto raw = get<std::vector<std::vector<long long>>>(j, "edges");
  std::vector<Edge> edges;
  for (const auto& e : raw) {
    if (e.size() != 2 || e[0] < 0 || e[1] < 0) bad("edges must be pairs of vertex labels");
    edges.emplace_back(static_cast<Vertex>(e[0]), static_cast<Vertex>(e[1]));
  }
  return edges;
}

std::size_t count_field(const json& j, const char* key) {
  const auto v = get<long long>(j, key);
  if (v < 0) bad(std::string("field \"") + key + "\" must be nonnegative");
  return static_cast<std::size_t>(v);
}

}  // namespace

std::string read_file(const std::filesystem::path& path) {
  std::ifstream in(path, std::ios::binary);
  if (!in) bad("cannot read " + path.string());
  std::ostringstream ss;
  ss << in.rdbuf();
  return ss.str();
}

void write_file(const std::filesystem::path& path, std::string_view text) {
  std::ofstream out(path, std::ios::binary);
  if (!out) bad("cannot write " + path.string());
  out << text;
}

json parse_json(std::string_view text) {
  try {
    return json::parse(text);
  } catch (const json::parse_error& e) {
    bad(std::string("malformed JSON: ") + e.what());
  }
}

json graph_to_json(const Graph& g) {
  json edges = json::array();
  for (auto [u, v] : g.edges()) edges.push_back({u, v});
  return {{"n", g.vertex_count()}, {"edges", std::move(edges)}};
}

Graph graph_from_json(const json& j) {
  if (j.contains("sides")) bad("expected a graph, got a bipartite graph");
  return build_graph(count_field(j, "n"), edge_pairs(j));
}

std::string graph_to_edge_list(const Graph& g) {
  std::string out = "n=" + std::to_string(g.vertex_count()) + "\n";
  for (auto [u, v] : g.edges()) out += std::to_string(u) + " " + std::to_string(v) + "\n";
  return out;
}

Graph graph_from_edge_list(std::string_view text) {
  std::istringstream in{std::string(text)};
  std::string line;
  std::optional<std::size_t> n;
  std::vector<Edge> edges;
  std::size_t lineno = 0;
  while (std::getline(in, line)) {
    ++lineno;
    const auto first = line.find_first_not_of(" \t\r");
    if (first == std::string::npos || line[first] == '#') continue;
    std::istringstream fields(line.substr(first));
    if (!n) {
      std::string header;
      fields >> header;
      std::size_t value = 0;
      if (header.rfind("n=", 0) != 0 ||
          std::from_chars(header.data() + 2, header.data() + header.size(), value).ec !=
              std::errc{}) {
        bad("edge list must start with a header n=<int>");
      }
      n = value;
      continue;
    }
    long long u = -1, v = -1;
    std::string rest;
    if (!(fields >> u >> v) || (fields >> rest) || u < 0 || v < 0) {
      bad("edge list line " + std::to_string(lineno) + " is not a pair \"u v\"");
    }
    edges.emplace_back(static_cast<Vertex>(u), static_cast<Vertex>(v));
  }
  if (!n) bad("edge list must start with a header n=<int>");
  return build_graph(*n, edges);
}

Graph parse_graph(std::string_view text) {
  const auto first = text.find_first_not_of(" \t\r\n");
  if (first != std::string_view::npos && text[first] == '{') {
    return graph_from_json(parse_json(text));
  }
  return graph_from_edge_list(text);
}

json bipartite_to_json(const BipartiteGraph& g) {
  json edges = json::array();
  for (auto [l, r] : g.edges()) edges.push_back({l, r});
  return {{"n", g.side_size()}, {"sides", 2}, {"edges", std::move(edges)}};
}

BipartiteGraph bipartite_from_json(const json& j) {
  if (get<long long>(j, "sides") != 2) bad("bipartite JSON needs \"sides\": 2");
  const std::size_t n = count_field(j, "n");
  BipartiteGraph g(static_cast<Vertex>(n));
  for (auto [l, r] : edge_pairs(j)) {
    if (l >= n || r >= n) bad("bipartite edge out of range");
    g.add_edge(l, r);
  }
  return g;
}

json representation_to_json(const SetRepresentation& rep) {
  json sets = json::object();
  for (Vertex v = 0; v < rep.vertex_count(); ++v) sets[std::to_string(v)] = rep.elements(v);
  return {{"ground_size", rep.ground_size()}, {"sets", std::move(sets)}};
}

SetRepresentation representation_from_json(const json& j) {
  const std::size_t s = count_field(j, "ground_size");
  if (!j.contains("sets")) bad("missing field \"sets\"");
  const json& sets = j.at("sets");
  if (!sets.is_object()) bad("\"sets\" must be an object keyed by vertex");
  std::vector<std::vector<Element>> lists(sets.size());
  std::vector<bool> seen(sets.size(), false);
  for (const auto& [key, value] : sets.items()) {
    std::size_t v = 0;
    if (std::from_chars(key.data(), key.data() + key.size(), v).ec != std::errc{} ||
        std::to_string(v) != key || v >= lists.size() || seen[v]) {
      bad("set keys must be the vertex labels 0..n-1, got \"" + key + "\"");
    }
    seen[v] = true;
    std::vector<long long> raw;
    try {
      raw = value.get<std::vector<long long>>();
    } catch (const json::exception&) {
      bad("set of vertex " + key + " must be a list of integers");
    }
    for (long long x : raw) {
      if (x < 0 || static_cast<std::size_t>(x) >= s) {
        bad("element " + std::to_string(x) + " of vertex " + key + " is outside the ground set");
      }
      lists[v].push_back(static_cast<Element>(x));
    }
  }
  return SetRepresentation::from_lists(s, lists);
}

json encoding_to_json(const BipartiteEncoding& enc) {
  return {{"n", enc.n},
          {"ground_size", enc.ground_size},
          {"left_order", enc.left_order},
          {"right_order", enc.right_order},
          {"left_rows", pack_rows(enc.left_rows, enc.ground_size)},
          {"right_rows", pack_rows(enc.right_rows, enc.ground_size)}};
}

BipartiteEncoding encoding_from_json(const json& j) {
  BipartiteEncoding enc;
  enc.n = static_cast<Vertex>(count_field(j, "n"));
  enc.ground_size = count_field(j, "ground_size");
  enc.left_order = get<std::vector<Vertex>>(j, "left_order");
  enc.right_order = get<std::vector<Vertex>>(j, "right_order");
  enc.left_rows = unpack_rows(get<std::string>(j, "left_rows"), enc.n, enc.ground_size);
  enc.right_rows = unpack_rows(get<std::string>(j, "right_rows"), enc.n, enc.ground_size);
  for (const auto* order : {&enc.left_order, &enc.right_order}) {
    std::vector<bool> seen(enc.n, false);
    if (order->size() != enc.n) bad("encoding order has the wrong length");
    for (Vertex v : *order) {
      if (v >= enc.n || seen[v]) bad("encoding order is not a permutation");
      seen[v] = true;
    }
  }
  return enc;
}

json cover_to_json(const CliqueCover& c) { return {{"n", c.n}, {"cliques", c.cliques}}; }

CliqueCover cover_from_json(const json& j) {
  CliqueCover c;
  c.n = static_cast<Vertex>(count_field(j, "n"));
  c.cliques = get<std::vector<std::vector<Vertex>>>(j, "cliques");
  for (auto& clique : c.cliques) {
    std::sort(clique.begin(), clique.end());
    for (Vertex v : clique) {
      if (v >= c.n) bad("clique vertex " + std::to_string(v) + " out of range");
    }
  }
  return c;
}

json linear_space_to_json(const LinearSpace& ls) {
  return {{"points", ls.points}, {"lines", ls.lines}};
}

LinearSpace linear_space_from_json(const json& j) {
  LinearSpace ls;
  ls.points = static_cast<Vertex>(count_field(j, "points"));
  ls.lines = get<std::vector<std::vector<Vertex>>>(j, "lines");
  return ls;
}

json solver_result_to_json(const SolverResult& r) {
  json witness = std::visit(
      [](const auto& w) -> json {
        if constexpr (std::is_same_v<std::decay_t<decltype(w)>, SetRepresentation>) {
          return representation_to_json(w);
        } else {
          return w;
        }
      },
      r.witness);
  return {{"value", r.value},
          {"exact", r.exact},
          {"witness", std::move(witness)},
          {"nodes_explored", r.nodes_explored}};
}

}  // namespace kneser::io
