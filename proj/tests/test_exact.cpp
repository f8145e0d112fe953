#include <doctest.h>

#include "kneser/clique_cover.hpp"
#include "kneser/exact.hpp"
#include "oracles.hpp"

using namespace kneser;

namespace {

Graph co_star_graph(Vertex n) { return complement(star_graph(n - 1)); }

const char* name(Mode m) {
  switch (m) {
    case Mode::min: return "min";
    case Mode::max: return "max";
    default: return "avg";
  }
}

struct Params {
  std::size_t kn, mn, mx, av, pra;
};

Params all_params(const Graph& g) {
  return {exact_f_kn(g).value, exact_f_mode(g, Mode::min).value, exact_f_mode(g, Mode::max).value,
          exact_f_mode(g, Mode::avg).value, exact_prague(g).value};
}

constexpr Mode kDiff[] = {Mode::min, Mode::max, Mode::avg};

}  // namespace

TEST_SUITE("exact") {

TEST_CASE("kneser rank examples") {
  for (Vertex n = 3; n <= 6; ++n) {
    const auto r = exact_f_kn(co_star_graph(n));
    CHECK(r.value == n - 1);
    CHECK(r.exact);
  }
  const auto pet = exact_f_kn(petersen_graph());
  CHECK(pet.value == 2);
  CHECK(verify(std::get<SetRepresentation>(pet.witness), petersen_graph(), Mode::kneser, 2));
  CHECK(exact_f_kn(cycle_graph(5)).value == 2);
  CHECK(exact_f_kn(complete_graph(4)).value == 1);
  CHECK(exact_f_kn(Graph(0)).value == 0);
  CHECK_THROWS_AS(exact_f_kn(Graph(kExactFknLimit + 1)), CapacityError);
}

TEST_CASE("kneser rank against the oracle") {
  for (Vertex n = 1; n <= 4; ++n) {
    for (const auto& g : oracle::all_graphs(n)) {
      const auto r = exact_f_kn(g);
      CHECK(verify(std::get<SetRepresentation>(r.witness), g, Mode::kneser, r.value));
      CHECK(oracle::has_kneser_rep(g, r.value));
      if (r.value > 1) CHECK_FALSE(oracle::has_kneser_rep(g, r.value - 1));
    }
  }
  for (const auto& g : oracle::graph_classes(5)) {
    const auto r = exact_f_kn(g);
    CHECK(oracle::has_kneser_rep(g, r.value));
    if (r.value > 1) CHECK_FALSE(oracle::has_kneser_rep(g, r.value - 1));
  }
}

TEST_CASE("kneser rank sandwich") {
  for (Vertex n = 1; n <= 5; ++n) {
    for (const auto& g : oracle::all_graphs(n)) {
      const auto t = exact_theta0(g);
      const auto f = exact_f_kn(complement(g)).value;
      CHECK(t <= f);
      CHECK(f <= t + 1);
    }
  }
  for (std::uint64_t s = 0; s < 200; ++s) {
    const Graph g = gen_gnp(6, 0.5, Seed{20, {s}});
    const auto t = exact_theta0(g);
    const auto f = exact_f_kn(complement(g));
    CHECK(t <= f.value);
    CHECK(f.value <= t + 1);
    CHECK(verify(std::get<SetRepresentation>(f.witness), complement(g), Mode::kneser, f.value));
  }
}

TEST_CASE("difference decision examples") {
  const auto k2 = decide_difference_rep(complete_graph(2), Mode::min, 1, 1);
  REQUIRE(k2.has_value());
  CHECK(verify(*k2, complete_graph(2), Mode::min, 1));

  const auto mk = decide_difference_rep(matching_graph(2), Mode::min, 1, 1);
  REQUIRE(mk.has_value());
  CHECK(verify(*mk, matching_graph(2), Mode::min, 1));

  CHECK_FALSE(decide_difference_rep(matching_graph(2), Mode::max, 1, 2).has_value());

  CHECK_THROWS_AS(decide_difference_rep(complete_graph(2), Mode::kneser, 1, 1), ParameterError);
  CHECK_THROWS_AS(decide_difference_rep(complete_graph(2), Mode::min, 0, 1), ParameterError);
  CHECK_THROWS_AS(decide_difference_rep(complete_graph(2), Mode::min, 1, 0), ParameterError);
  CHECK_THROWS_AS(decide_difference_rep(Graph(kExactDifferenceLimit + 1), Mode::min, 1, 1),
                  CapacityError);
}

TEST_CASE("difference decision against the oracle") {
  for (Vertex n = 2; n <= 3; ++n) {
    for (const auto& g : oracle::all_graphs(n)) {
      for (Mode m : kDiff) {
        for (std::size_t k = 1; k <= 2; ++k) {
          const auto cap = complete_cap(m, k);
          const auto r = decide_difference_rep(g, m, k, cap);
          CHECK(r.has_value() == oracle::has_difference_rep(g, name(m), k, cap));
          if (r) CHECK(verify(*r, g, m, k));
        }
      }
    }
  }
  for (const auto& g : oracle::all_graphs(4)) {
    for (Mode m : {Mode::min, Mode::max}) {
      CHECK(decide_difference_rep(g, m, 1, 1).has_value() ==
            oracle::has_difference_rep(g, name(m), 1, 1));
    }
  }
}

TEST_CASE("the complete cap loses nothing") {
  CHECK(complete_cap(Mode::min, 3) == 3);
  CHECK(complete_cap(Mode::max, 3) == 3);
  CHECK(complete_cap(Mode::avg, 3) == 6);
  CHECK_THROWS_AS(complete_cap(Mode::kneser, 1), ParameterError);
  for (Vertex n = 2; n <= 4; ++n) {
    for (const auto& g : oracle::graph_classes(n)) {
      for (Mode m : kDiff) {
        for (std::size_t k = 1; k <= 2; ++k) {
          const auto cap = complete_cap(m, k);
          CHECK(decide_difference_rep(g, m, k, cap).has_value() ==
                decide_difference_rep(g, m, k, cap + 2).has_value());
        }
      }
    }
  }
}

TEST_CASE("difference rank examples") {
  CHECK(exact_f_mode(matching_graph(1), Mode::min).value == 1);
  CHECK(exact_f_mode(matching_graph(2), Mode::min).value == 1);
  CHECK(exact_f_mode(complete_graph(3), Mode::min).value == 1);
  const auto mx = exact_f_mode(matching_graph(2), Mode::max);
  CHECK(mx.value == 2);
  CHECK(mx.exact);
  CHECK(verify(std::get<SetRepresentation>(mx.witness), matching_graph(2), Mode::max, 2));
  CHECK(exact_f_mode(matching_graph(1), Mode::max).value == 1);
  CHECK_THROWS_AS(exact_f_mode(Graph(kExactDifferenceLimit + 1), Mode::min), CapacityError);
}

TEST_CASE("small caps are flagged") {
  const CapSchedule one = [](std::size_t) { return std::size_t{1}; };
  for (Vertex n = 2; n <= 4; ++n) {
    for (const auto& g : oracle::graph_classes(n)) {
      for (Mode m : kDiff) {
        const auto full = exact_f_mode(g, m);
        const auto capped = exact_f_mode(g, m, one);
        CHECK(capped.value >= full.value);
        CHECK(verify(std::get<SetRepresentation>(capped.witness), g, m, capped.value));
        // a refutation at some k ran below complete_cap(m, k)
        const bool short_run = m == Mode::avg ? capped.value > 1 : capped.value > 2;
        CHECK(capped.exact == !short_run);
      }
    }
  }
}

TEST_CASE("prague examples") {
  CHECK(exact_prague(complete_graph(5)).value == 1);
  const auto e3 = exact_prague(Graph(3));
  CHECK(e3.value == 2);
  CHECK(verify_prague(std::get<Colorings>(e3.witness), Graph(3)));
  CHECK_FALSE(verify_prague(Colorings{{0, 0}}, complete_graph(2)).valid);
  CHECK_FALSE(verify_prague(Colorings{{0, 1}}, Graph(2)).valid);
  CHECK_THROWS_AS(exact_prague(Graph(kExactPragueLimit + 1)), CapacityError);
}

TEST_CASE("prague against the oracle") {
  for (Vertex n = 1; n <= 4; ++n) {
    for (const auto& g : oracle::all_graphs(n)) {
      const auto r = exact_prague(g);
      CHECK(verify_prague(std::get<Colorings>(r.witness), g));
      if (r.value <= 2) CHECK(oracle::has_prague(g, r.value));
      if (r.value >= 2 && r.value - 1 <= 2) CHECK_FALSE(oracle::has_prague(g, r.value - 1));
    }
  }
}

TEST_CASE("witnesses verify on every graph with at most 5 vertices") {
  for (Vertex n = 1; n <= 5; ++n) {
    for (const auto& g : oracle::all_graphs(n)) {
      const auto kn = exact_f_kn(g);
      CHECK(verify(std::get<SetRepresentation>(kn.witness), g, Mode::kneser, kn.value));
      for (Mode m : kDiff) {
        const auto r = exact_f_mode(g, m);
        CHECK(r.exact);
        CHECK(verify(std::get<SetRepresentation>(r.witness), g, m, r.value));
        if (r.value > 1) {
          CHECK_FALSE(decide_difference_rep(g, m, r.value - 1, complete_cap(m, r.value - 1)));
        }
      }
      const auto pr = exact_prague(g);
      CHECK(verify_prague(std::get<Colorings>(pr.witness), g));
    }
  }
}

TEST_CASE("chain of parameters") {
  for (Vertex n = 1; n <= 5; ++n) {
    for (const auto& g : oracle::all_graphs(n)) {
      const auto p = all_params(g);
      CHECK(p.mn <= p.kn);
      CHECK(p.mx <= p.kn);
      CHECK(p.av <= p.kn);
      CHECK(p.kn <= p.pra);
      CHECK(p.mn <= p.av);
      CHECK(p.av <= p.mx);
    }
  }
}

TEST_CASE("prague sandwich") {
  for (Vertex n = 1; n <= 5; ++n) {
    for (const auto& g : oracle::all_graphs(n)) {
      const auto t = exact_theta0_prime(g);
      const auto f = exact_prague(complement(g)).value;
      CHECK(t <= f);
      CHECK(f <= t + 1);
    }
  }
}

TEST_CASE("parameters are hereditary") {
  Rng rng(Seed{21});
  for (int trial = 0; trial < 150; ++trial) {
    const Graph g = gen_gnp(5, 0.5, Seed{22, {static_cast<std::uint64_t>(trial)}});
    std::vector<Vertex> keep;
    for (Vertex v = 0; v < 5; ++v) {
      if (rng.bernoulli(0.6)) keep.push_back(v);
    }
    if (keep.empty()) continue;
    const Graph h = induced_subgraph(g, keep);
    const auto pg = all_params(g), ph = all_params(h);
    CHECK(ph.kn <= pg.kn);
    CHECK(ph.mn <= pg.mn);
    CHECK(ph.mx <= pg.mx);
    CHECK(ph.av <= pg.av);
    CHECK(ph.pra <= pg.pra);
  }
}

}  // TEST_SUITE
