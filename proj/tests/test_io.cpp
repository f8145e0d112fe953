#include <doctest.h>

#include <filesystem>

#include "generators.hpp"
#include "kneser/io.hpp"

using namespace kneser;
using kneser::io::json;

TEST_SUITE("io") {

TEST_CASE("graph json and edge lists round trip") {
  for (std::uint64_t s = 0; s < 50; ++s) {
    const Graph g = gen_gnp(1 + static_cast<Vertex>(s), 0.3, Seed{30, {s}});
    CHECK(io::graph_from_json(io::graph_to_json(g)) == g);
    CHECK(io::graph_from_edge_list(io::graph_to_edge_list(g)) == g);
    CHECK(io::parse_graph(io::graph_to_json(g).dump()) == g);
    CHECK(io::parse_graph(io::graph_to_edge_list(g)) == g);
  }
  const auto j = io::graph_to_json(path_graph(3));
  CHECK(j.dump() == R"({"edges":[[0,1],[1,2]],"n":3})");
  CHECK(io::graph_from_edge_list("# comment\nn=3\n\n0 1\n  # more\n2 1\n") == path_graph(3));
}

TEST_CASE("malformed graphs") {
  CHECK_THROWS_AS(io::parse_graph("{\"n\": 3, \"edges\": [[0, 3]]}"), ParameterError);
  CHECK_THROWS_AS(io::parse_graph("{\"n\": 3, \"edges\": [[1, 1]]}"), ParameterError);
  CHECK_THROWS_AS(io::parse_graph("{\"n\": -1, \"edges\": []}"), ParameterError);
  CHECK_THROWS_AS(io::parse_graph("{\"n\": 3"), ParameterError);
  CHECK_THROWS_AS(io::parse_graph("{\"edges\": []}"), ParameterError);
  CHECK_THROWS_AS(io::parse_graph("0 1\n"), ParameterError);
  CHECK_THROWS_AS(io::parse_graph("n=3\n0 1 2\n"), ParameterError);
  CHECK_THROWS_AS(io::parse_graph("n=3\n0 x\n"), ParameterError);
  CHECK_THROWS_AS(io::parse_graph(""), ParameterError);
}

TEST_CASE("bipartite graphs") {
  const auto g = gen_gnnp(6, 0.5, Seed{31});
  const auto j = io::bipartite_to_json(g);
  CHECK(j.at("sides") == 2);
  CHECK(io::bipartite_from_json(j) == g);
  CHECK_THROWS_AS(io::bipartite_from_json(io::graph_to_json(path_graph(3))), ParameterError);
}

TEST_CASE("representations") {
  const auto rep = SetRepresentation::from_lists(4, {{0, 2}, {}, {1, 2, 3}});
  const auto j = io::representation_to_json(rep);
  CHECK(j.dump() == R"({"ground_size":4,"sets":{"0":[0,2],"1":[],"2":[1,2,3]}})");
  CHECK(io::representation_from_json(j) == rep);
  CHECK_THROWS_AS(io::representation_from_json(
                      io::parse_json(R"({"ground_size":2,"sets":{"0":[2]}})")),
                  ParameterError);
  CHECK_THROWS_AS(io::representation_from_json(
                      io::parse_json(R"({"ground_size":2,"sets":{"1":[0]}})")),
                  ParameterError);
  Rng rng(Seed{32});
  for (int t = 0; t < 50; ++t) {
    const auto r = gen::random_rep(rng, 1 + static_cast<Vertex>(rng.below(12)), rng.below(90), 0.4);
    CHECK(io::representation_from_json(io::parse_json(io::representation_to_json(r).dump())) == r);
  }
}

TEST_CASE("encodings pack bits most significant first") {
  // rows 101 and 011 give the bit string 101011, padded to 10101100 = 0xAC
  const auto left = SetRepresentation::from_lists(3, {{0, 2}, {1, 2}}).sets();
  const std::vector<Bitset> right(2, Bitset(3));
  const auto enc = encode_bipartite(left, right);
  const auto j = io::encoding_to_json(enc);
  CHECK(j.at("left_rows") == "rA==");
  CHECK(j.at("right_rows") == "AA==");
  CHECK(io::encoding_from_json(j) == enc);

  BipartiteEncoding empty;
  CHECK(io::encoding_from_json(io::encoding_to_json(empty)) == empty);

  Rng rng(Seed{33});
  for (int t = 0; t < 50; ++t) {
    const auto n = static_cast<Vertex>(1 + rng.below(5));
    const std::size_t k = 1 + rng.below(3);
    const auto e = encode_bipartite(gen::random_bipartite_rep(rng, n, 1 + rng.below(20), k));
    CHECK(io::encoding_from_json(io::parse_json(io::encoding_to_json(e).dump())) == e);
  }

  auto broken = j;
  broken["left_rows"] = "rA";
  CHECK_THROWS_AS(io::encoding_from_json(broken), ParameterError);
  broken["left_rows"] = "AAAA";
  CHECK_THROWS_AS(io::encoding_from_json(broken), ParameterError);
  broken = j;
  broken["left_order"] = json::array({0, 0});
  CHECK_THROWS_AS(io::encoding_from_json(broken), ParameterError);
}

TEST_CASE("covers and linear spaces") {
  const CliqueCover c{4, {{0, 1, 2}, {2, 3}, {2, 3}}};
  CHECK(io::cover_from_json(io::cover_to_json(c)) == c);
  CHECK_THROWS_AS(io::cover_from_json(io::parse_json(R"({"n":2,"cliques":[[0,2]]})")),
                  ParameterError);
  const auto ls = affine_plane(5);
  CHECK(io::linear_space_from_json(io::linear_space_to_json(ls)) == ls);
}

TEST_CASE("solver results") {
  const auto r = exact_f_kn(cycle_graph(5));
  const auto j = io::solver_result_to_json(r);
  CHECK(j.at("value") == 2);
  CHECK(j.at("exact") == true);
  CHECK(io::representation_from_json(j.at("witness")) == std::get<SetRepresentation>(r.witness));
  const auto p = io::solver_result_to_json(exact_prague(Graph(3)));
  CHECK(p.at("witness").is_array());
  CHECK(p.at("nodes_explored").is_number_unsigned());
}

TEST_CASE("files") {
  const auto dir = std::filesystem::temp_directory_path() / "kneser_io_test";
  std::filesystem::create_directories(dir);
  io::write_file(dir / "g.json", "hello\n");
  CHECK(io::read_file(dir / "g.json") == "hello\n");
  CHECK_THROWS_AS(io::read_file(dir / "missing.json"), ParameterError);
  CHECK_THROWS_AS(io::write_file(dir / "no" / "such" / "dir.json", "x"), ParameterError);
  std::filesystem::remove_all(dir);
}

}  // TEST_SUITE
