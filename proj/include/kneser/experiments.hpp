#pragma once

#include <cstdint>
#include <filesystem>
#include <optional>
#include <string>
#include <vector>

#include "kneser/clique_cover.hpp"
#include "kneser/graph.hpp"
#include "kneser/linear_space.hpp"
#include "kneser/random.hpp"

namespace kneser {

/// Cover strategies the harness knows: "greedy" (edge greedy on the whole
/// graph), "vertex_greedy", "random_order" and "linear_space" (edge greedy
/// inside each line of linear_space_for(n)).
inline constexpr const char* kExperimentStrategies[] = {"greedy", "vertex_greedy",
                                                        "random_order", "linear_space"};

struct ExperimentConfig {
  std::vector<Vertex> n_grid;
  double p = 0.5;
  std::size_t trials = 1;
  std::uint64_t master_seed = 1;
  std::vector<std::string> strategies = {"greedy", "linear_space"};
  /// Branch-and-bound nodes allowed for ω before the incumbent is used.
  std::uint64_t omega_node_budget = 1'000'000;
  /// Worker threads; 0 means hardware concurrency.
  std::size_t threads = 0;
  /// Fill wall_ms. Off by default so reruns produce identical files.
  bool record_time = false;
};

/// Throws ParameterError unless n_grid is nonempty and ascending, trials >= 1,
/// p is in [0,1] and every strategy is known.
void validate_config(const ExperimentConfig& cfg);

struct ExperimentRow {
  Vertex n = 0;
  double p = 0;
  std::size_t trial = 0;
  std::string strategy;
  std::size_t theta0_upper = 0;
  std::size_t theta0_lower = 0;
  std::size_t fkn_upper = 0;
  double ratio_upper = 0;
  double ratio_lower = 0;
  bool omega_exact = true;
  std::optional<double> wall_ms;
};

/// Rows sorted by (n, trial, strategy). Ratios are value * ln(n) / n.
/// Every cover is validated before its row is recorded.
std::vector<ExperimentRow> run_theta0_scaling(const ExperimentConfig& cfg);

/// Bipartite G in G(n,n,p) with both sides filled by G(n,p) to form H on
/// N = 2n vertices. theta0_upper is the thickness of a cover of complement(H),
/// fkn_upper = theta0_upper + 2 bounds f_Kn(G), theta0_lower bounds
/// θ0(complement H), and ratios use N: ratio_upper = fkn_upper ln N / N.
std::vector<ExperimentRow> run_fkn_bipartite(const ExperimentConfig& cfg);

/// The graph H of run_fkn_bipartite for one (n, trial), with G itself.
struct BipartiteInstance {
  BipartiteGraph g;
  Graph h;
};
BipartiteInstance bipartite_instance(Vertex n, double p, const Seed& seed);

/// Seeds: graph of (n, trial) and cover of (n, trial, strategy).
Seed graph_seed(std::uint64_t master, Vertex n, std::size_t trial);
Seed strategy_seed(std::uint64_t master, Vertex n, std::size_t trial, std::string_view strategy);

struct ConcentrationReport {
  Vertex n = 0;
  std::size_t max_line_size = 0;   // ℓ
  double mean_part_load = 0;       // mean of X_i(v) over lines i and v on L_i
  double c = 0;                    // constant in c·b·√n/ln n
  std::vector<std::size_t> lines;  // b_v
  std::vector<std::size_t> load;   // X(v)
  std::vector<double> threshold;   // c·b_v·√n/ln n + ℓ·√(4 b_v ln n)
  std::size_t exceed_count = 0;
  double exceed_fraction = 0;
};

/// Per-vertex thickness of a line-partitioned cover against the Chernoff
/// threshold. c defaults to the calibrated value mean(X_i(v))·ln n/√n.
/// Throws ParameterError when the parts do not match the lines of ls or a
/// part uses a vertex off its line.
ConcentrationReport concentration_report(const Graph& g, const LinearSpace& ls,
                                         const std::vector<CliqueCover>& parts,
                                         std::optional<double> c = std::nullopt);

/// One G(n, p) with its line-partitioned cover, seeded like trial 0 of the
/// linear_space strategy.
ConcentrationReport run_concentration(Vertex n, double p, std::uint64_t master,
                                      std::optional<double> c = std::nullopt);

inline constexpr const char* kCsvHeader =
    "n,p,trial,strategy,theta0_upper,theta0_lower,fkn_upper,ratio_upper,ratio_lower,"
    "omega_exact,wall_ms";
inline constexpr const char* kConcentrationHeader = "vertex,lines,thickness,threshold,exceeds";

std::string format_csv(const std::vector<ExperimentRow>& rows);
std::vector<ExperimentRow> parse_csv(std::string_view text);
std::string format_concentration_csv(const ConcentrationReport& report);

void emit_csv(const std::vector<ExperimentRow>& rows, const std::filesystem::path& path);
std::vector<ExperimentRow> read_csv(const std::filesystem::path& path);

/// Self-contained SVG, log-x: mean ratio_upper per strategy against n, and
/// the mean ratio_lower as a dashed series. Throws ParameterError on no rows.
std::string format_plot(const std::vector<ExperimentRow>& rows);
void emit_plot(const std::vector<ExperimentRow>& rows, const std::filesystem::path& path);

}  // namespace kneser
