#include "kneser/experiments.hpp"

#include <algorithm>
#include <atomic>
#include <chrono>
#include <cmath>
#include <cstdio>
#include <exception>
#include <map>
#include <mutex>
#include <sstream>
#include <thread>

#include "kneser/clique.hpp"
#include "kneser/io.hpp"

namespace kneser {

namespace {

bool known_strategy(std::string_view s) {
  return std::find(std::begin(kExperimentStrategies), std::end(kExperimentStrategies), s) !=
         std::end(kExperimentStrategies);
}

// Runs fn(i) for i in [0, count) on a small pool. Each i writes only its own
// slot, so the outcome does not depend on scheduling.
template <typename Fn>
void parallel_for(std::size_t count, std::size_t threads, Fn fn) {
  if (threads == 0) threads = std::max(1u, std::thread::hardware_concurrency());
  threads = std::min(threads, count);
  if (threads <= 1) {
    for (std::size_t i = 0; i < count; ++i) fn(i);
    return;
  }
  std::atomic<std::size_t> next{0};
  std::exception_ptr failure;
  std::mutex failure_mutex;
  std::vector<std::thread> pool;
  for (std::size_t t = 0; t < threads; ++t) {
    pool.emplace_back([&] {
      for (std::size_t i; (i = next++) < count;) {
        try {
          fn(i);
        } catch (...) {
          std::lock_guard lock(failure_mutex);
          if (!failure) failure = std::current_exception();
        }
      }
    });
  }
  for (auto& th : pool) th.join();
  if (failure) std::rethrow_exception(failure);
}

double log_ratio(std::size_t value, Vertex n) {
  return n < 2 ? 0.0 : static_cast<double>(value) * std::log(static_cast<double>(n)) / n;
}

struct LowerBound {
  std::size_t value = 0;
  bool omega_exact = true;
};

// ceil(Δ/(ω−1)). When the clique search runs out of budget the incumbent
// stands in for ω and the row is flagged.
LowerBound theta0_lower(const Graph& g, std::uint64_t budget) {
  const std::size_t delta = degree_stats(g).max_degree;
  if (delta == 0) return {};
  const auto omega = clique_search(g, {budget});
  const std::size_t w = omega.clique.size();
  return {(delta + w - 2) / (w - 1), omega.exact};
}

CliqueCover build_cover(const Graph& g, std::string_view strategy, const Seed& seed) {
  if (strategy == "linear_space") {
    if (g.vertex_count() < 2) return {g.vertex_count(), {}};
    const auto ls = linear_space_for(g.vertex_count(), seed.child("space"));
    return linear_space_cover(g, ls.space, CoverStrategy::edge_greedy, seed.child("cover"));
  }
  const CoverStrategy s = strategy == "greedy" ? CoverStrategy::edge_greedy
                                               : parse_cover_strategy(strategy);
  return greedy_cover(g, s, seed);
}

struct Cell {
  Vertex n;
  std::size_t trial;
};

std::vector<Cell> cells(const ExperimentConfig& cfg) {
  std::vector<Cell> out;
  for (Vertex n : cfg.n_grid) {
    for (std::size_t t = 0; t < cfg.trials; ++t) out.push_back({n, t});
  }
  return out;
}

// Covers `target` with every configured strategy and fills one row each.
// fkn_upper = thickness + extra; big_n is the vertex count used in the ratios.
std::vector<ExperimentRow> cover_rows(const ExperimentConfig& cfg, const Cell& cell,
                                      const Graph& target, std::size_t extra, Vertex big_n,
                                      bool ratio_of_fkn) {
  const LowerBound lower = theta0_lower(target, cfg.omega_node_budget);
  std::vector<ExperimentRow> rows;
  for (const auto& strategy : cfg.strategies) {
    const auto start = std::chrono::steady_clock::now();
    const CliqueCover cover =
        build_cover(target, strategy, strategy_seed(cfg.master_seed, cell.n, cell.trial, strategy));
    const Report valid = validate_cover(target, cover);
    if (!valid) {
      throw std::logic_error("strategy " + strategy + " produced an invalid cover at n=" +
                             std::to_string(cell.n) + ": " + valid.reason);
    }
    ExperimentRow row;
    row.n = cell.n;
    row.p = cfg.p;
    row.trial = cell.trial;
    row.strategy = strategy;
    row.theta0_upper = thickness(cover);
    row.theta0_lower = lower.value;
    row.fkn_upper = row.theta0_upper + extra;
    row.omega_exact = lower.omega_exact;
    if (cfg.record_time) {
      row.wall_ms = std::chrono::duration<double, std::milli>(std::chrono::steady_clock::now() -
                                                              start)
                        .count();
    }
    rows.push_back(std::move(row));
  }
  for (auto& row : rows) {
    row.ratio_lower = log_ratio(row.theta0_lower, big_n);
    row.ratio_upper = log_ratio(ratio_of_fkn ? row.fkn_upper : row.theta0_upper, big_n);
  }
  return rows;
}

std::vector<ExperimentRow> run_cells(
    const ExperimentConfig& cfg,
    const std::function<std::vector<ExperimentRow>(const Cell&)>& one) {
  validate_config(cfg);
  const auto grid = cells(cfg);
  std::vector<std::vector<ExperimentRow>> slots(grid.size());
  parallel_for(grid.size(), cfg.threads, [&](std::size_t i) { slots[i] = one(grid[i]); });
  std::vector<ExperimentRow> rows;
  for (auto& slot : slots) {
    for (auto& r : slot) rows.push_back(std::move(r));
  }
  std::stable_sort(rows.begin(), rows.end(), [](const ExperimentRow& a, const ExperimentRow& b) {
    return std::tie(a.n, a.trial, a.strategy) < std::tie(b.n, b.trial, b.strategy);
  });
  return rows;
}

std::string fmt(const char* pattern, double x) {
  char buf[64];
  std::snprintf(buf, sizeof buf, pattern, x);
  return buf;
}

}  // namespace

void validate_config(const ExperimentConfig& cfg) {
  if (cfg.n_grid.empty()) throw ParameterError("n_grid must be nonempty");
  if (!std::is_sorted(cfg.n_grid.begin(), cfg.n_grid.end()) ||
      std::adjacent_find(cfg.n_grid.begin(), cfg.n_grid.end()) != cfg.n_grid.end()) {
    throw ParameterError("n_grid must be strictly ascending");
  }
  if (cfg.trials == 0) throw ParameterError("trials must be at least 1");
  if (!(cfg.p >= 0.0 && cfg.p <= 1.0)) throw ParameterError("p must lie in [0, 1]");
  if (cfg.strategies.empty()) throw ParameterError("at least one strategy is required");
  for (const auto& s : cfg.strategies) {
    if (!known_strategy(s)) throw ParameterError("unknown strategy \"" + s + "\"");
  }
}

Seed graph_seed(std::uint64_t master, Vertex n, std::size_t trial) {
  return Seed{master, {}}.child(n).child(trial);
}

Seed strategy_seed(std::uint64_t master, Vertex n, std::size_t trial, std::string_view strategy) {
  return graph_seed(master, n, trial).child(strategy);
}

std::vector<ExperimentRow> run_theta0_scaling(const ExperimentConfig& cfg) {
  return run_cells(cfg, [&](const Cell& cell) {
    const Graph g = gen_gnp(cell.n, cfg.p, graph_seed(cfg.master_seed, cell.n, cell.trial));
    return cover_rows(cfg, cell, g, 1, cell.n, false);
  });
}

BipartiteInstance bipartite_instance(Vertex n, double p, const Seed& seed) {
  BipartiteInstance inst{gen_gnnp(n, p, seed.child("cross")), Graph(2 * n)};
  inst.h = inst.g.to_graph();
  const Graph a = gen_gnp(n, p, seed.child("left"));
  const Graph b = gen_gnp(n, p, seed.child("right"));
  for (auto [u, v] : a.edges()) inst.h.add_edge(u, v);
  for (auto [u, v] : b.edges()) inst.h.add_edge(n + u, n + v);
  return inst;
}

std::vector<ExperimentRow> run_fkn_bipartite(const ExperimentConfig& cfg) {
  return run_cells(cfg, [&](const Cell& cell) {
    const auto inst =
        bipartite_instance(cell.n, cfg.p, graph_seed(cfg.master_seed, cell.n, cell.trial));
    return cover_rows(cfg, cell, complement(inst.h), 2, 2 * cell.n, true);
  });
}

ConcentrationReport concentration_report(const Graph& g, const LinearSpace& ls,
                                         const std::vector<CliqueCover>& parts,
                                         std::optional<double> c) {
  const Vertex n = g.vertex_count();
  if (ls.points != n) throw ParameterError("linear space and graph differ in size");
  if (parts.size() != ls.lines.size()) {
    throw ParameterError("expected one cover part per line: " + std::to_string(ls.lines.size()) +
                         " lines, " + std::to_string(parts.size()) + " parts");
  }
  ConcentrationReport r;
  r.n = n;
  r.lines = point_degrees(ls);
  r.load.assign(n, 0);
  std::size_t pairs = 0, total = 0;
  Bitset on_line(n);
  for (std::size_t i = 0; i < parts.size(); ++i) {
    on_line.clear();
    for (Vertex v : ls.lines[i]) on_line.set(v);
    r.max_line_size = std::max(r.max_line_size, ls.lines[i].size());
    pairs += ls.lines[i].size();
    for (const auto& clique : parts[i].cliques) {
      for (Vertex v : clique) {
        if (v >= n || !on_line.test(v)) {
          throw ParameterError("part " + std::to_string(i) + " uses vertex " + std::to_string(v) +
                               " off its line");
        }
        ++r.load[v];
        ++total;
      }
    }
  }
  r.mean_part_load = pairs == 0 ? 0.0 : static_cast<double>(total) / pairs;
  const double ln = n < 2 ? 1.0 : std::log(static_cast<double>(n));
  const double root = std::sqrt(static_cast<double>(n));
  r.c = c ? *c : r.mean_part_load * ln / root;
  r.threshold.resize(n);
  for (Vertex v = 0; v < n; ++v) {
    const double b = static_cast<double>(r.lines[v]);
    r.threshold[v] = r.c * b * root / ln + r.max_line_size * std::sqrt(4.0 * b * ln);
    if (r.load[v] > r.threshold[v]) ++r.exceed_count;
  }
  r.exceed_fraction = n == 0 ? 0.0 : static_cast<double>(r.exceed_count) / n;
  return r;
}

ConcentrationReport run_concentration(Vertex n, double p, std::uint64_t master,
                                      std::optional<double> c) {
  const Graph g = gen_gnp(n, p, graph_seed(master, n, 0));
  const Seed seed = strategy_seed(master, n, 0, "linear_space");
  const auto ls = linear_space_for(n, seed.child("space"));
  const auto parts =
      linear_space_cover_parts(g, ls.space, CoverStrategy::edge_greedy, seed.child("cover"));
  return concentration_report(g, ls.space, parts, c);
}

std::string format_csv(const std::vector<ExperimentRow>& rows) {
  std::ostringstream out;
  out << kCsvHeader << '\n';
  for (const auto& r : rows) {
    out << r.n << ',' << fmt("%g", r.p) << ',' << r.trial << ',' << r.strategy << ','
        << r.theta0_upper << ',' << r.theta0_lower << ',' << r.fkn_upper << ','
        << fmt("%.6f", r.ratio_upper) << ',' << fmt("%.6f", r.ratio_lower) << ','
        << (r.omega_exact ? 1 : 0) << ',' << (r.wall_ms ? fmt("%.3f", *r.wall_ms) : "") << '\n';
  }
  return out.str();
}

std::vector<ExperimentRow> parse_csv(std::string_view text) {
  std::istringstream in{std::string(text)};
  std::string line;
  if (!std::getline(in, line) || line != kCsvHeader) {
    throw ParameterError("CSV does not start with the expected header");
  }
  std::vector<ExperimentRow> rows;
  while (std::getline(in, line)) {
    if (line.empty()) continue;
    std::vector<std::string> f;
    std::istringstream fields(line);
    for (std::string cell; std::getline(fields, cell, ',');) f.push_back(cell);
    if (!line.empty() && line.back() == ',') f.emplace_back();
    if (f.size() != 11) throw ParameterError("CSV row has " + std::to_string(f.size()) + " fields");
    try {
      ExperimentRow r;
      r.n = static_cast<Vertex>(std::stoul(f[0]));
      r.p = std::stod(f[1]);
      r.trial = std::stoul(f[2]);
      r.strategy = f[3];
      r.theta0_upper = std::stoul(f[4]);
      r.theta0_lower = std::stoul(f[5]);
      r.fkn_upper = std::stoul(f[6]);
      r.ratio_upper = std::stod(f[7]);
      r.ratio_lower = std::stod(f[8]);
      r.omega_exact = f[9] == "1";
      if (!f[10].empty()) r.wall_ms = std::stod(f[10]);
      rows.push_back(std::move(r));
    } catch (const std::logic_error&) {
      throw ParameterError("malformed CSV row: " + line);
    }
  }
  return rows;
}

std::string format_concentration_csv(const ConcentrationReport& report) {
  std::ostringstream out;
  out << kConcentrationHeader << '\n';
  for (Vertex v = 0; v < report.n; ++v) {
    out << v << ',' << report.lines[v] << ',' << report.load[v] << ','
        << fmt("%.6f", report.threshold[v]) << ',' << (report.load[v] > report.threshold[v])
        << '\n';
  }
  return out.str();
}

void emit_csv(const std::vector<ExperimentRow>& rows, const std::filesystem::path& path) {
  io::write_file(path, format_csv(rows));
}

std::vector<ExperimentRow> read_csv(const std::filesystem::path& path) {
  return parse_csv(io::read_file(path));
}

std::string format_plot(const std::vector<ExperimentRow>& rows) {
  if (rows.empty()) throw ParameterError("cannot plot an empty result set");
  // series -> n -> (sum, count)
  std::map<std::string, std::map<Vertex, std::pair<double, std::size_t>>> series;
  for (const auto& r : rows) {
    auto& up = series[r.strategy][r.n];
    up.first += r.ratio_upper;
    ++up.second;
  }
  std::map<Vertex, std::pair<double, std::size_t>> lower;
  for (const auto& r : rows) {
    lower[r.n].first += r.ratio_lower;
    ++lower[r.n].second;
  }
  series["lower bound"] = lower;

  double xmin = std::log2(static_cast<double>(std::max<Vertex>(rows.front().n, 1)));
  double xmax = xmin, ymax = 0;
  for (const auto& [name, pts] : series) {
    for (const auto& [n, acc] : pts) {
      const double x = std::log2(static_cast<double>(std::max<Vertex>(n, 1)));
      xmin = std::min(xmin, x);
      xmax = std::max(xmax, x);
      ymax = std::max(ymax, acc.first / acc.second);
    }
  }
  if (xmax == xmin) {
    xmin -= 0.5;
    xmax += 0.5;
  }
  if (ymax <= 0) ymax = 1;
  ymax *= 1.1;

  const double w = 640, h = 400, left = 60, right = 160, top = 20, bottom = 50;
  const double pw = w - left - right, ph = h - top - bottom;
  auto px = [&](double x) { return left + (x - xmin) / (xmax - xmin) * pw; };
  auto py = [&](double y) { return top + ph - y / ymax * ph; };

  static const char* palette[] = {"#1f77b4", "#d62728", "#2ca02c", "#9467bd", "#ff7f0e"};
  std::ostringstream svg;
  svg << "<svg xmlns=\"http://www.w3.org/2000/svg\" width=\"" << w << "\" height=\"" << h
      << "\" font-family=\"sans-serif\" font-size=\"12\">\n"
      << "<rect width=\"100%\" height=\"100%\" fill=\"white\"/>\n"
      << "<line x1=\"" << left << "\" y1=\"" << top + ph << "\" x2=\"" << left + pw << "\" y2=\""
      << top + ph << "\" stroke=\"black\"/>\n"
      << "<line x1=\"" << left << "\" y1=\"" << top << "\" x2=\"" << left << "\" y2=\"" << top + ph
      << "\" stroke=\"black\"/>\n";
  for (const auto& [n, acc] : lower) {
    const double x = px(std::log2(static_cast<double>(std::max<Vertex>(n, 1))));
    svg << "<text x=\"" << fmt("%.1f", x) << "\" y=\"" << top + ph + 18
        << "\" text-anchor=\"middle\">" << n << "</text>\n";
  }
  for (int i = 0; i <= 4; ++i) {
    const double y = ymax * i / 4;
    svg << "<text x=\"" << left - 6 << "\" y=\"" << fmt("%.1f", py(y) + 4)
        << "\" text-anchor=\"end\">" << fmt("%.2f", y) << "</text>\n";
  }
  svg << "<text x=\"" << left + pw / 2 << "\" y=\"" << h - 10
      << "\" text-anchor=\"middle\">n (log scale)</text>\n"
      << "<text x=\"15\" y=\"" << top + ph / 2 << "\" transform=\"rotate(-90 15 " << top + ph / 2
      << ")\" text-anchor=\"middle\">value * ln(n) / n</text>\n";
  std::size_t idx = 0;
  for (const auto& [name, pts] : series) {
    const bool dashed = name == "lower bound";
    const char* color = dashed ? "#555555" : palette[idx++ % std::size(palette)];
    std::string points;
    for (const auto& [n, acc] : pts) {
      const double x = px(std::log2(static_cast<double>(std::max<Vertex>(n, 1))));
      points += fmt("%.1f", x) + "," + fmt("%.1f", py(acc.first / acc.second)) + " ";
      svg << "<circle cx=\"" << fmt("%.1f", x) << "\" cy=\""
          << fmt("%.1f", py(acc.first / acc.second)) << "\" r=\"3\" fill=\"" << color << "\"/>\n";
    }
    svg << "<polyline fill=\"none\" stroke=\"" << color << "\" stroke-width=\"2\""
        << (dashed ? " stroke-dasharray=\"6 4\"" : "") << " points=\"" << points << "\"/>\n";
    const double ly = top + 10 + 18.0 * (dashed ? series.size() - 1 : idx - 1);
    svg << "<line x1=\"" << left + pw + 10 << "\" y1=\"" << ly << "\" x2=\"" << left + pw + 30
        << "\" y2=\"" << ly << "\" stroke=\"" << color << "\" stroke-width=\"2\""
        << (dashed ? " stroke-dasharray=\"6 4\"" : "") << "/>\n"
        << "<text x=\"" << left + pw + 36 << "\" y=\"" << ly + 4 << "\">" << name << "</text>\n";
  }
  svg << "</svg>\n";
  return svg.str();
}

void emit_plot(const std::vector<ExperimentRow>& rows, const std::filesystem::path& path) {
  io::write_file(path, format_plot(rows));
}

}  // namespace kneser
