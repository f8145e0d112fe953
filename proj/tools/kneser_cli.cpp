// Command-line front end: generation, representations, covers, exact
// solvers and experiments. Files are the composition mechanism; see README.

#include <CLI11.hpp>

#include <iostream>
#include <iterator>
#include <sstream>

#include "kneser/clique.hpp"
#include "kneser/clique_cover.hpp"
#include "kneser/encoding.hpp"
#include "kneser/exact.hpp"
#include "kneser/experiments.hpp"
#include "kneser/io.hpp"
#include "kneser/linear_space.hpp"
#include "kneser/representation.hpp"

using namespace kneser;
using io::json;

namespace {

struct Globals {
  std::uint64_t seed = 1;
  bool json_out = false;
  std::string out;
};

// Thrown after a Report came back invalid; the message is already printed.
struct InvalidResult {};

std::string slurp(const std::string& path) {
  if (path == "-") {
    return {std::istreambuf_iterator<char>(std::cin), std::istreambuf_iterator<char>()};
  }
  return io::read_file(path);
}

Graph load_graph(const std::string& path) { return io::parse_graph(slurp(path)); }
json load_json(const std::string& path) { return io::parse_json(slurp(path)); }

void emit(const Globals& g, const std::string& text) {
  if (g.out.empty()) {
    std::cout << text;
  } else {
    io::write_file(g.out, text);
  }
}

void emit_json(const Globals& g, const json& j) { emit(g, j.dump() + "\n"); }

json report_json(const Report& r) {
  json j = {{"valid", r.valid}};
  if (!r.valid) j["reason"] = r.reason;
  if (r.pair) j["pair"] = {r.pair->first, r.pair->second};
  return j;
}

// Prints a report, then fails the command if it is invalid.
void finish_report(const Globals& g, const Report& r) {
  if (g.json_out) {
    emit_json(g, report_json(r));
  } else {
    emit(g, r.valid ? "valid\n" : "invalid: " + r.reason + "\n");
  }
  if (!r.valid) throw InvalidResult{};
}

std::vector<Vertex> parse_grid(const std::string& text) {
  std::vector<Vertex> grid;
  std::stringstream ss(text);
  for (std::string item; std::getline(ss, item, ',');) {
    try {
      grid.push_back(static_cast<Vertex>(std::stoul(item)));
    } catch (const std::logic_error&) {
      throw ParameterError("bad n-grid entry \"" + item + "\"");
    }
  }
  return grid;
}

std::vector<std::string> split(const std::string& text) {
  std::vector<std::string> out;
  std::stringstream ss(text);
  for (std::string item; std::getline(ss, item, ',');) out.push_back(item);
  return out;
}

void add_gen(CLI::App& app, Globals& g) {
  auto* gen = app.add_subcommand("gen", "Generate graphs")->require_subcommand(1);

  static Vertex n = 0;
  static double p = 0.5;
  auto* gnp = gen->add_subcommand("gnp", "Random graph G(n, p)");
  gnp->add_option("--n", n, "Vertex count")->required();
  gnp->add_option("--p", p, "Edge probability")->required();
  static std::string format = "json";
  gnp->add_option("--format", format, "json or edges")
      ->check(CLI::IsMember({"json", "edges"}));
  gnp->callback([&] {
    const Graph graph = gen_gnp(n, p, Seed{g.seed, {}});
    if (format == "edges") {
      emit(g, io::graph_to_edge_list(graph));
    } else {
      emit_json(g, io::graph_to_json(graph));
    }
  });

  auto* gnnp = gen->add_subcommand("gnnp", "Random bipartite graph G(n, n, p)");
  gnnp->add_option("--n", n, "Side size")->required();
  gnnp->add_option("--p", p, "Edge probability")->required();
  gnnp->callback([&] { emit_json(g, io::bipartite_to_json(gen_gnnp(n, p, Seed{g.seed, {}}))); });

  static Vertex s = 5, k = 2;
  auto* kn = gen->add_subcommand("kneser", "Kneser graph Kn(s, k)");
  kn->add_option("--s", s, "Ground set size")->required();
  kn->add_option("--k", k, "Subset size")->required();
  kn->callback([&] { emit_json(g, io::graph_to_json(kneser_graph(s, k))); });
}

void add_rep(CLI::App& app, Globals& g) {
  auto* rep = app.add_subcommand("rep", "Set representations")->require_subcommand(1);
  static std::string graph_path, rep_path, cover_path, mode_name = "kneser";
  static std::size_t k = 1;

  auto* verify_cmd = rep->add_subcommand("verify", "Check that a representation induces a graph");
  verify_cmd->add_option("graph", graph_path)->required();
  verify_cmd->add_option("rep", rep_path)->required();
  verify_cmd->add_option("--mode", mode_name, "kneser, min, max or avg");
  verify_cmd->add_option("--k", k, "Rank")->required();
  verify_cmd->callback([&] {
    const Graph graph = load_graph(graph_path);
    const auto r = io::representation_from_json(load_json(rep_path));
    finish_report(g, verify(r, graph, parse_mode(mode_name), k));
  });

  auto ranked = [&](const RankedRepresentation& r) {
    json j = io::representation_to_json(r.rep);
    j["rank"] = r.rank;
    emit_json(g, j);
  };

  auto* costar = rep->add_subcommand("costar", "Co-star Kneser representation");
  costar->add_option("graph", graph_path)->required();
  costar->callback([&, ranked] { ranked(co_star(load_graph(graph_path))); });

  auto* reduce_cmd = rep->add_subcommand("reduce", "Delete redundant elements");
  reduce_cmd->add_option("rep", rep_path)->required();
  reduce_cmd->add_option("--mode", mode_name, "min, max or avg")->required();
  reduce_cmd->add_option("--k", k, "Rank")->required();
  reduce_cmd->callback([&] {
    const auto r = io::representation_from_json(load_json(rep_path));
    emit_json(g, io::representation_to_json(reduce(r, parse_mode(mode_name), k)));
  });

  auto* atoms_cmd = rep->add_subcommand("atoms", "Atom partition of the ground set");
  atoms_cmd->add_option("rep", rep_path)->required();
  atoms_cmd->callback([&] {
    const auto part = atoms(io::representation_from_json(load_json(rep_path)));
    json list = json::array();
    for (const auto& a : part.atoms) {
      list.push_back({{"pattern", a.pattern.to_indices()}, {"elements", a.elements}});
    }
    emit_json(g, {{"atoms", list}});
  });

  auto* from_cover = rep->add_subcommand(
      "from-cover", "Kneser representation of the complement from a clique cover");
  from_cover->add_option("graph", graph_path)->required();
  from_cover->add_option("cover", cover_path)->required();
  from_cover->callback([&, ranked] {
    ranked(kneser_from_cover(load_graph(graph_path), io::cover_from_json(load_json(cover_path))));
  });

  auto* encode = rep->add_subcommand("encode", "Matrix encoding of a bipartite representation");
  encode->add_option("rep", rep_path, "Representation listing 2n sets, left side first")
      ->required();
  encode->callback([&] {
    emit_json(g, io::encoding_to_json(
                     encode_bipartite(io::representation_from_json(load_json(rep_path)))));
  });

  static std::string enc_path;
  auto* decode = rep->add_subcommand("decode", "Bipartite graph from a matrix encoding");
  decode->add_option("encoding", enc_path)->required();
  decode->add_option("--k", k, "Rank")->required();
  decode->callback([&] {
    emit_json(g, io::bipartite_to_json(
                     decode_bipartite(io::encoding_from_json(load_json(enc_path)), k)));
  });
}

void add_cover(CLI::App& app, Globals& g) {
  auto* cover = app.add_subcommand("cover", "Edge clique covers")->require_subcommand(1);
  static std::string graph_path, cover_path, strategy = "edge_greedy", space_out;

  auto* greedy = cover->add_subcommand("greedy", "Greedy clique cover");
  greedy->add_option("graph", graph_path)->required();
  greedy->add_option("--strategy", strategy, "edge_greedy, vertex_greedy or random_order");
  greedy->callback([&] {
    emit_json(g, io::cover_to_json(greedy_cover(load_graph(graph_path),
                                                parse_cover_strategy(strategy), Seed{g.seed, {}})));
  });

  auto* lin = cover->add_subcommand("linear-space", "Cover assembled line by line");
  lin->add_option("graph", graph_path)->required();
  lin->add_option("--strategy", strategy, "Inner greedy strategy");
  lin->add_option("--space-out", space_out, "Also write the linear space JSON here");
  lin->callback([&] {
    const Graph graph = load_graph(graph_path);
    const Seed seed{g.seed, {}};
    const auto ls = linear_space_for(graph.vertex_count(), seed.child("space"));
    if (!space_out.empty()) io::write_file(space_out, io::linear_space_to_json(ls.space).dump() + "\n");
    emit_json(g, io::cover_to_json(linear_space_cover(graph, ls.space,
                                                      parse_cover_strategy(strategy),
                                                      seed.child("cover"))));
  });

  auto* validate = cover->add_subcommand("validate", "Check a clique cover");
  validate->add_option("graph", graph_path)->required();
  validate->add_option("cover", cover_path)->required();
  validate->callback([&] {
    finish_report(g, validate_cover(load_graph(graph_path),
                                    io::cover_from_json(load_json(cover_path))));
  });

  auto* stats = cover->add_subcommand("stats", "Thickness, size and greedy chromatic index");
  stats->add_option("cover", cover_path)->required();
  stats->callback([&] {
    const CliqueCover c = io::cover_from_json(load_json(cover_path));
    const std::size_t th = thickness(c), size = cover_size(c),
                      classes = chromatic_index_greedy(c).classes;
    if (g.json_out) {
      emit_json(g, {{"thickness", th}, {"size", size}, {"chromatic_index_greedy", classes}});
    } else {
      emit(g, "thickness " + std::to_string(th) + "\nsize " + std::to_string(size) +
                  "\nchromatic_index_greedy " + std::to_string(classes) + "\n");
    }
  });
}

void add_exact(CLI::App& app, Globals& g) {
  auto* exact = app.add_subcommand("exact", "Exact solvers for small graphs")->require_subcommand(1);
  static std::string graph_path;
  static std::size_t cap_factor = 0;

  auto solver = [&](const char* name, const char* help, std::function<json(const Graph&)> run) {
    auto* cmd = exact->add_subcommand(name, help);
    cmd->add_option("graph", graph_path)->required();
    cmd->callback([&g, run] { emit_json(g, run(load_graph(graph_path))); });
    return cmd;
  };
  solver("fkn", "Kneser rank", [](const Graph& gr) {
    return io::solver_result_to_json(exact_f_kn(gr));
  });
  for (auto [name, mode] : {std::pair{"fmin", Mode::min}, std::pair{"fmax", Mode::max},
                            std::pair{"favg", Mode::avg}}) {
    const Mode m = mode;
    auto* cmd = solver(name, "Difference rank", [m](const Graph& gr) {
      CapSchedule caps;
      if (cap_factor > 0) caps = [](std::size_t k) { return cap_factor * k; };
      return io::solver_result_to_json(exact_f_mode(gr, m, caps));
    });
    cmd->add_option("--cap-factor", cap_factor,
                    "Multiplicity cap = factor * k (default: the conclusive cap)");
  }
  solver("prague", "Prague dimension", [](const Graph& gr) {
    return io::solver_result_to_json(exact_prague(gr));
  });
  solver("theta0", "Minimum clique cover thickness", [](const Graph& gr) {
    const auto r = exact_theta0_search(gr);
    return json{{"value", r.value},
                {"exact", true},
                {"witness", io::cover_to_json(r.cover)},
                {"nodes_explored", r.nodes}};
  });
  solver("theta0p", "Minimum cover chromatic index", [](const Graph& gr) {
    const auto r = exact_theta0_prime_search(gr);
    return json{{"value", r.value},
                {"exact", true},
                {"witness", r.classes},
                {"nodes_explored", r.nodes}};
  });
}

void add_exp(CLI::App& app, Globals& g) {
  auto* exp = app.add_subcommand("exp", "Random-graph experiments")->require_subcommand(1);
  static ExperimentConfig cfg;
  static std::string grid = "256,512,1024,2048,4096", strategies = "greedy,linear_space", plot;

  auto common = [&](CLI::App* cmd) {
    cmd->add_option("--n-grid", grid, "Comma-separated ascending vertex counts");
    cmd->add_option("--p", cfg.p, "Edge probability");
    cmd->add_option("--trials", cfg.trials, "Trials per n");
    cmd->add_option("--strategies", strategies,
                    "Comma-separated: greedy, vertex_greedy, random_order, linear_space");
    cmd->add_option("--budget", cfg.omega_node_budget, "Clique search node budget");
    cmd->add_option("--threads", cfg.threads, "Worker threads (0: all cores)");
    cmd->add_flag("--timing", cfg.record_time, "Fill the wall_ms column");
    cmd->add_option("--plot", plot, "Also write an SVG plot here");
  };
  auto run = [&](auto runner) {
    cfg.n_grid = parse_grid(grid);
    cfg.strategies = split(strategies);
    cfg.master_seed = g.seed;
    const auto rows = runner(cfg);
    emit(g, format_csv(rows));
    if (!plot.empty()) emit_plot(rows, plot);
  };

  auto* scaling = exp->add_subcommand("theta0-scaling", "Thickness bounds on G(n, p)");
  common(scaling);
  scaling->callback([run] { run(run_theta0_scaling); });

  auto* bip = exp->add_subcommand("fkn-bipartite", "Kneser rank bounds on G(n, n, p)");
  common(bip);
  bip->callback([run] { run(run_fkn_bipartite); });

  static Vertex n = 4096;
  static double p = 0.5;
  static std::optional<double> c;
  static std::string csv;
  auto* conc = exp->add_subcommand("concentration", "Per-vertex thickness of a line cover");
  conc->add_option("--n", n, "Vertex count");
  conc->add_option("--p", p, "Edge probability");
  conc->add_option("--c", c, "Constant of the threshold (default: calibrated)");
  conc->add_option("--csv", csv, "Write the per-vertex table here");
  conc->callback([&] {
    const auto r = run_concentration(n, p, g.seed, c);
    if (!csv.empty()) io::write_file(csv, format_concentration_csv(r));
    const json summary = {{"n", r.n},
                          {"max_line_size", r.max_line_size},
                          {"mean_part_load", r.mean_part_load},
                          {"c", r.c},
                          {"max_thickness", *std::max_element(r.load.begin(), r.load.end())},
                          {"exceed_count", r.exceed_count},
                          {"exceed_fraction", r.exceed_fraction}};
    if (g.json_out) {
      emit_json(g, summary);
    } else {
      std::string text;
      for (const auto& [key, value] : summary.items()) text += key + " " + value.dump() + "\n";
      emit(g, text);
    }
  });
}

}  // namespace

int main(int argc, char** argv) {
  CLI::App app{"Set representations of graphs and edge clique covers"};
  app.require_subcommand(1);
  app.fallthrough();
  Globals g;
  app.add_option("--seed", g.seed, "Master seed")->capture_default_str();
  app.add_flag("--json", g.json_out, "Machine-readable output");
  app.add_option("--out", g.out, "Write the main output to this file");
  add_gen(app, g);
  add_rep(app, g);
  add_cover(app, g);
  add_exact(app, g);
  add_exp(app, g);

  try {
    app.parse(argc, argv);
  } catch (const CLI::CallForHelp& e) {
    return app.exit(e);
  } catch (const CLI::CallForAllHelp& e) {
    return app.exit(e);
  } catch (const CLI::Success& e) {
    return app.exit(e);
  } catch (const CLI::ParseError& e) {
    app.exit(e);
    return 2;
  } catch (const InvalidResult&) {
    return 1;
  } catch (const std::exception& e) {
    std::cerr << "error: " << e.what() << "\n";
    return 1;
  }
  return 0;
}
