#include <doctest.h>

#include <cmath>

#include "kneser/clique.hpp"
#include "kneser/clique_cover.hpp"
#include "kneser/linear_space.hpp"
#include "oracles.hpp"

using namespace kneser;

namespace {

bool pair_on_line(const std::vector<Vertex>& line, Vertex a, Vertex b) {
  return std::find(line.begin(), line.end(), a) != line.end() &&
         std::find(line.begin(), line.end(), b) != line.end();
}

// Pair-exhaustive L1/L2 check, written independently of validate_linear_space.
bool axioms_hold(const LinearSpace& ls) {
  for (const auto& line : ls.lines) {
    if (line.size() < 2) return false;
  }
  for (Vertex a = 0; a < ls.points; ++a) {
    for (Vertex b = a + 1; b < ls.points; ++b) {
      std::size_t on = 0;
      for (const auto& line : ls.lines) on += pair_on_line(line, a, b);
      if (on != 1) return false;
    }
  }
  return true;
}

}  // namespace

TEST_SUITE("clique_cover") {

TEST_CASE("greedy examples") {
  for (auto s : {CoverStrategy::edge_greedy, CoverStrategy::vertex_greedy,
                 CoverStrategy::random_order}) {
    CHECK(greedy_cover(complete_graph(5), s, Seed{1}).cliques ==
          std::vector<std::vector<Vertex>>{{0, 1, 2, 3, 4}});
    const auto c5 = greedy_cover(cycle_graph(5), s, Seed{1});
    CHECK(c5.cliques.size() == 5);
    for (const auto& c : c5.cliques) CHECK(c.size() == 2);
    CHECK(greedy_cover(Graph(4), s, Seed{1}).cliques.empty());
  }
  for (auto s : {CoverStrategy::edge_greedy, CoverStrategy::vertex_greedy,
                 CoverStrategy::random_order}) {
    CHECK(parse_cover_strategy(to_string(s)) == s);
  }
  CHECK_THROWS_AS(parse_cover_strategy("best"), ParameterError);
}

TEST_CASE("greedy covers validate") {
  for (std::uint64_t s = 0; s < 200; ++s) {
    const Graph g = gen_gnp(20 + static_cast<Vertex>(s % 20), 0.1 + 0.004 * double(s), Seed{3, {s}});
    for (auto strategy : {CoverStrategy::edge_greedy, CoverStrategy::vertex_greedy,
                          CoverStrategy::random_order}) {
      const auto c = greedy_cover(g, strategy, Seed{4, {s}});
      CHECK(validate_cover(g, c));
      for (const auto& cl : c.cliques) CHECK(std::is_sorted(cl.begin(), cl.end()));
    }
  }
  const Graph g = gen_gnp(30, 0.5, Seed{5});
  CHECK(greedy_cover(g, CoverStrategy::random_order, Seed{6}) ==
        greedy_cover(g, CoverStrategy::random_order, Seed{6}));
}

TEST_CASE("thickness and size") {
  const CliqueCover tri{3, {{0, 1, 2}}};
  CHECK(thickness(tri) == 1);
  CHECK(cover_size(tri) == 1);
  const CliqueCover p3{3, {{0, 1}, {1, 2}}};
  CHECK(thickness(p3) == 2);
  CHECK(cover_loads(p3) == std::vector<std::size_t>{1, 2, 1});
  const auto c5 = greedy_cover(cycle_graph(5), CoverStrategy::edge_greedy, Seed{1});
  CHECK(thickness(c5) == 2);
  CHECK(cover_size(c5) == 5);
  CHECK(cover_size(CliqueCover{3, {}}) == 0);
  CHECK(thickness(CliqueCover{3, {}}) == 0);
  CHECK(thickness(CliqueCover{3, {{0, 1}, {0, 1}}}) == 2);
}

TEST_CASE("chromatic index greedy") {
  CHECK(chromatic_index_greedy(CliqueCover{4, {{0, 1}, {2, 3}}}).classes == 1);
  CHECK(chromatic_index_greedy(CliqueCover{3, {{0, 1}, {1, 2}}}).classes == 2);
  const auto c5 = greedy_cover(cycle_graph(5), CoverStrategy::edge_greedy, Seed{1});
  CHECK(chromatic_index_greedy(c5).classes == 3);

  for (std::uint64_t s = 0; s < 100; ++s) {
    const Graph g = gen_gnp(16, 0.4, Seed{7, {s}});
    const auto c = greedy_cover(g, CoverStrategy::edge_greedy, Seed{1});
    const auto col = chromatic_index_greedy(c);
    CHECK(col.classes >= thickness(c));
    for (std::size_t a = 0; a < c.cliques.size(); ++a) {
      for (std::size_t b = a + 1; b < c.cliques.size(); ++b) {
        if (col.color[a] != col.color[b]) continue;
        std::vector<Vertex> common;
        std::set_intersection(c.cliques[a].begin(), c.cliques[a].end(), c.cliques[b].begin(),
                              c.cliques[b].end(), std::back_inserter(common));
        CHECK(common.empty());
      }
    }
  }
}

TEST_CASE("validate cover messages") {
  CHECK(validate_cover(complete_graph(3), CliqueCover{3, {{0, 1, 2}}}));
  const Report missing = validate_cover(complete_graph(3), CliqueCover{3, {{0, 1}}});
  CHECK_FALSE(missing.valid);
  REQUIRE(missing.pair.has_value());
  CHECK(*missing.pair == std::pair<std::uint32_t, std::uint32_t>{0, 2});
  const Report notclique = validate_cover(matching_graph(2), CliqueCover{4, {{0, 1, 2}}});
  CHECK_FALSE(notclique.valid);
  CHECK(notclique.reason.find("not a clique") != std::string::npos);
}

TEST_CASE("theta0 lower bound") {
  CHECK(theta0_lower_bound(cycle_graph(5)) == 2);
  CHECK(theta0_lower_bound(complete_graph(6)) == 1);
  CHECK(theta0_lower_bound(petersen_graph()) == 3);
  CHECK(theta0_lower_bound(Graph(3)) == 0);
}

TEST_CASE("exact theta0 examples") {
  CHECK(exact_theta0(complete_graph(6)) == 1);
  CHECK(exact_theta0(cycle_graph(5)) == 2);
  CHECK(exact_theta0(petersen_graph()) == 3);
  CHECK(exact_theta0(Graph(5)) == 0);
  CHECK_THROWS_AS(exact_theta0(Graph(kExactTheta0Limit + 1)), CapacityError);
}

TEST_CASE("exact theta0 against the oracle") {
  for (Vertex n = 1; n <= 4; ++n) {
    for (const auto& g : oracle::all_graphs(n)) {
      const auto r = exact_theta0_search(g);
      CHECK(r.value == oracle::theta0(g));
      CHECK(validate_cover(g, r.cover));
      CHECK(thickness(r.cover) == r.value);
    }
  }
}

TEST_CASE("exact theta0 respects the lower bound") {
  for (Vertex n = 1; n <= 5; ++n) {
    for (const auto& g : oracle::all_graphs(n)) {
      const auto r = exact_theta0_search(g);
      CHECK(r.value >= theta0_lower_bound(g));
      CHECK(validate_cover(g, r.cover));
      CHECK(r.value <= thickness(greedy_cover(g, CoverStrategy::edge_greedy, Seed{1})));
    }
  }
  for (std::uint64_t s = 0; s < 300; ++s) {
    const Graph g = gen_gnp(7, 0.2 + 0.002 * double(s), Seed{9, {s}});
    CHECK(exact_theta0(g) >= theta0_lower_bound(g));
  }
}

TEST_CASE("exact theta0 prime") {
  CHECK(exact_theta0_prime(complete_graph(4)) == 1);
  CHECK(exact_theta0_prime(path_graph(3)) == 2);
  CHECK(exact_theta0_prime(cycle_graph(5)) == 3);
  CHECK_THROWS_AS(exact_theta0_prime(Graph(kExactTheta0PrimeLimit + 1)), CapacityError);
  for (Vertex n = 1; n <= 4; ++n) {
    for (const auto& g : oracle::all_graphs(n)) {
      const auto r = exact_theta0_prime_search(g);
      CHECK(r.value == oracle::theta0_prime(g));
      CHECK(r.value >= exact_theta0(g));
      CHECK(r.classes.size() == r.value);
      // classes are vertex-disjoint cliques covering every edge
      Graph covered(n);
      for (const auto& cls : r.classes) {
        std::vector<int> used(n, 0);
        for (const auto& c : cls) {
          CHECK(g.is_clique(c));
          for (std::size_t a = 0; a < c.size(); ++a) {
            CHECK(used[c[a]]++ == 0);
            for (std::size_t b = a + 1; b < c.size(); ++b) covered.add_edge(c[a], c[b]);
          }
        }
      }
      CHECK(covered == g);
    }
  }
  for (std::uint64_t s = 0; s < 40; ++s) {
    const Graph g = gen_gnp(5, 0.5, Seed{10, {s}});
    CHECK(exact_theta0_prime(g) == oracle::theta0_prime(g));
  }
}

TEST_CASE("bounded cover search sees loads") {
  std::uint64_t nodes = 0;
  const auto found = search_bounded_covers(
      cycle_graph(5), 2, [](const auto&, const auto& loads) {
        return *std::max_element(loads.begin(), loads.end()) <= 2;
      },
      &nodes);
  REQUIRE(found.has_value());
  CHECK(validate_cover(cycle_graph(5), CliqueCover{5, *found}));
  CHECK(nodes > 0);
  CHECK_FALSE(search_bounded_covers(cycle_graph(5), 1, [](const auto&, const auto&) {
                return true;
              }).has_value());
}

}  // TEST_SUITE

TEST_SUITE("linear_space") {

TEST_CASE("primes") {
  std::vector<std::uint64_t> found;
  for (std::uint64_t q = 0; q <= 31; ++q) {
    if (is_prime(q)) found.push_back(q);
  }
  CHECK(found == std::vector<std::uint64_t>{2, 3, 5, 7, 11, 13, 17, 19, 23, 29, 31});
  CHECK_THROWS_AS(affine_plane(4), ParameterError);
  CHECK_THROWS_AS(affine_plane(1), ParameterError);
}

TEST_CASE("small affine planes") {
  const auto ag2 = affine_plane(2);
  CHECK(ag2.points == 4);
  CHECK(ag2.lines.size() == 6);
  for (const auto& l : ag2.lines) CHECK(l.size() == 2);
  CHECK(point_degrees(ag2) == std::vector<std::size_t>(4, 3));

  const auto ag3 = affine_plane(3);
  CHECK(ag3.points == 9);
  CHECK(ag3.lines.size() == 12);
  for (const auto& l : ag3.lines) CHECK(l.size() == 3);
  CHECK(point_degrees(ag3) == std::vector<std::size_t>(9, 4));
  CHECK(validate_linear_space(ag3));

  const auto ag7 = affine_plane(7);
  CHECK(ag7.points == 49);
  CHECK(ag7.lines.size() == 56);
  CHECK(validate_linear_space(ag7));
  CHECK(axioms_hold(ag7));
}

TEST_CASE("affine planes up to 31") {
  for (std::uint32_t q = 2; q <= 31; ++q) {
    if (!is_prime(q)) continue;
    const auto ls = affine_plane(q);
    CHECK(ls.points == q * q);
    CHECK(ls.lines.size() == q * q + q);
    for (const auto& l : ls.lines) CHECK(l.size() == q);
    CHECK(point_degrees(ls) == std::vector<std::size_t>(q * q, q + 1));
    CHECK(validate_linear_space(ls));
    if (q <= 11) CHECK(axioms_hold(ls));
  }
}

TEST_CASE("validator reports violations") {
  LinearSpace missing = affine_plane(2);
  missing.lines.pop_back();
  const Report r = validate_linear_space(missing);
  CHECK_FALSE(r.valid);
  CHECK(r.pair.has_value());

  LinearSpace shortline{3, {{0, 1, 2}, {1}}};
  const Report s = validate_linear_space(shortline);
  CHECK_FALSE(s.valid);
  CHECK(s.reason.find("L2") != std::string::npos);

  LinearSpace doubled{3, {{0, 1, 2}, {0, 1}}};
  CHECK_FALSE(validate_linear_space(doubled).valid);
}

TEST_CASE("restrict to points") {
  const auto ag3 = affine_plane(3);
  std::vector<Vertex> all(9);
  std::iota(all.begin(), all.end(), Vertex{0});
  const auto same = restrict_to_points(ag3, all);
  CHECK(same.points == 9);
  CHECK(same.lines.size() == 12);
  CHECK(axioms_hold(same));

  const auto four = restrict_to_points(ag3, {0, 1, 5, 7});
  CHECK(four.points == 4);
  CHECK(axioms_hold(four));
  CHECK(validate_linear_space(four));

  const auto two = restrict_to_points(ag3, {2, 6});
  CHECK(two.lines == std::vector<std::vector<Vertex>>{{0, 1}});

  for (std::uint64_t s = 0; s < 50; ++s) {
    const auto sized = linear_space_for(2 + static_cast<Vertex>(s * 3), Seed{12, {s}});
    CHECK(axioms_hold(sized.space));
  }
}

TEST_CASE("linear_space_for picks the smallest prime") {
  const auto nine = linear_space_for(9, Seed{1});
  CHECK(nine.q == 3);
  CHECK(nine.space.lines.size() == 12);
  const auto ten = linear_space_for(10, Seed{1});
  CHECK(ten.q == 5);
  CHECK(ten.space.points == 10);
  CHECK(validate_linear_space(ten.space));
  const auto big = linear_space_for(4096, Seed{1});
  CHECK(big.q == 67);
  CHECK(big.max_line_size <= 67);
  CHECK(big.max_point_degree <= 68);
  CHECK(validate_linear_space(big.space));
  CHECK_THROWS_AS(linear_space_for(1, Seed{1}), ParameterError);
  CHECK(linear_space_for(100, Seed{2}).space == linear_space_for(100, Seed{2}).space);
}

TEST_CASE("line-partitioned covers") {
  const auto k4 = linear_space_cover(complete_graph(4), affine_plane(2), CoverStrategy::edge_greedy,
                                     Seed{1});
  CHECK(k4.cliques.size() == 6);
  CHECK(thickness(k4) == 3);
  CHECK(validate_cover(complete_graph(4), k4));

  CHECK(linear_space_cover(Graph(9), affine_plane(3), CoverStrategy::edge_greedy, Seed{1})
            .cliques.empty());
  CHECK_THROWS_AS(
      linear_space_cover(Graph(5), affine_plane(2), CoverStrategy::edge_greedy, Seed{1}),
      ParameterError);

  for (std::uint64_t s = 0; s < 100; ++s) {
    Rng rng(Seed{13, {s}});
    const auto n = static_cast<Vertex>(2 + rng.below(511));
    const Graph g = gen_gnp(n, 0.5, Seed{14, {s}});
    const auto ls = linear_space_for(n, Seed{15, {s}});
    const auto parts = linear_space_cover_parts(g, ls.space, CoverStrategy::edge_greedy, Seed{16});
    CHECK(parts.size() == ls.space.lines.size());
    CliqueCover all{n, {}};
    for (const auto& p : parts) all.cliques.insert(all.cliques.end(), p.cliques.begin(), p.cliques.end());
    CHECK(all == linear_space_cover(g, ls.space, CoverStrategy::edge_greedy, Seed{16}));
    CHECK(validate_cover(g, all));
  }
}

}  // TEST_SUITE
