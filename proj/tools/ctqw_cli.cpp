// Command-line runner for continuous-time quantum walks on odd graphs.
//
// Exit codes: 0 success, 1 usage error, 2 numeric failure,
// 3 verification failure, 4 expected (documented) discrepancy.

#include <complex>
#include <cstdlib>
#include <fstream>
#include <iostream>
#include <memory>
#include <string>
#include <vector>

#include <CLI11.hpp>

#include "ctqw/ctqw.hpp"

namespace {

constexpr int exit_ok = 0;
constexpr int exit_usage = 1;
constexpr int exit_numeric = 2;
constexpr int exit_verify_failed = 3;
constexpr int exit_expected_discrepancy = 4;

struct Options {
  int k = 4;
  std::string mode = "exact";
  int levels = 0;  // 0 = one per stratum
  double t_start = 0.0;
  double t_end = 10.0;
  int t_steps = 101;
  double t = 1.0;
  int m = 0;
  int m_max = -1;  // -1 = all strata
  std::string format = "csv";
  std::string output;
  std::string cache_dir;
  double tolerance = 1e-9;
  bool convergence = false;
  std::vector<int> k_list;
  bool paper_convergence = false;
};

// Writes either to --output or stdout.
class Sink {
 public:
  explicit Sink(const std::string& path) {
    if (!path.empty()) {
      file_.open(path);
      if (!file_) throw std::invalid_argument("cannot open output file " + path);
    }
  }
  std::ostream& stream() { return file_.is_open() ? file_ : std::cout; }

 private:
  std::ofstream file_;
};

std::vector<double> make_grid(double t0, double t1, int steps) {
  if (steps < 1) throw std::invalid_argument("t-steps must be >= 1");
  if (t0 > t1) throw std::invalid_argument("t-start must not exceed t-end");
  std::vector<double> grid(steps);
  for (int i = 0; i < steps; ++i)
    grid[i] = steps == 1 ? t0 : t0 + (t1 - t0) * i / (steps - 1);
  return grid;
}

std::string cache_dir_or_env(const Options& opt) {
  if (!opt.cache_dir.empty()) return opt.cache_dir;
  if (const char* env = std::getenv("CTQW_CACHE_DIR")) return env;
  return {};
}

ctqw::JacobiSequence sequence_for(const Options& opt) {
  const auto mode = ctqw::jacobi_mode_from_string(opt.mode);
  if (mode == ctqw::JacobiMode::limit) {
    if (opt.levels < 1)
      throw std::invalid_argument("limit mode needs --levels >= 1");
    return ctqw::jacobi_limit(opt.levels);
  }
  return ctqw::jacobi_from_intersection(ctqw::closed_form_intersection(opt.k), mode);
}

ctqw::SpectralMeasure measure_for(const Options& opt, const ctqw::JacobiSequence& jac) {
  const int n = opt.levels > 0 ? opt.levels : jac.n_levels() - (jac.mode == ctqw::JacobiMode::limit ? 1 : 0);
  const std::string dir = cache_dir_or_env(opt);
  if (!dir.empty()) {
    ctqw::MeasureCache cache{dir};
    if (auto cached = cache.load(jac.mode, jac.k, n)) return *cached;
    auto mu = ctqw::gauss_measure(jac, n);
    cache.store(mu);
    return mu;
  }
  return ctqw::gauss_measure(jac, n);
}

int run_graph(const Options& opt, std::ostream& os) {
  const auto g = ctqw::build_odd_graph(opt.k);
  const auto strat = ctqw::stratify(g);
  const auto inter = ctqw::intersection_numbers(g, strat);
  os << "odd graph O_" << g.k << ": " << g.vertex_count() << " vertices, "
     << g.edge_count() << " edges, " << g.k << "-regular, diameter "
     << strat.diameter << "\n";
  os << "strata sizes:";
  for (int s : strat.sizes) os << ' ' << s;
  os << "\nintersection numbers (b back, a same, c forward):\n";
  for (int i = 0; i <= inter.d; ++i)
    os << "  level " << i << ": b=" << inter.b[i] << " a=" << inter.a[i]
       << " c=" << inter.c[i] << "\n";
  return exit_ok;
}

int run_jacobi(const Options& opt, std::ostream& os) {
  os << ctqw::jacobi_to_json(sequence_for(opt)).dump(2) << "\n";
  return exit_ok;
}

int run_measure(const Options& opt, std::ostream& os) {
  const auto jac = sequence_for(opt);
  os << ctqw::measure_to_json(measure_for(opt, jac)).dump(2) << "\n";
  return exit_ok;
}

int run_walk(const Options& opt, std::ostream& os) {
  const auto mode = ctqw::jacobi_mode_from_string(opt.mode);
  if (mode == ctqw::JacobiMode::limit)
    throw std::invalid_argument("walk runs on a finite graph; use `qclt` for the limit");
  const auto inter = ctqw::closed_form_intersection(opt.k);
  const auto jac = ctqw::jacobi_from_intersection(inter, mode);
  const auto mu = measure_for(opt, jac);
  const int m_max = opt.m_max >= 0 ? opt.m_max : jac.n_levels() - 1;
  const auto series = ctqw::amplitude_series(mu, jac, make_grid(opt.t_start, opt.t_end, opt.t_steps),
                                             m_max, inter.shell_sizes);
  if (opt.format == "json")
    os << ctqw::series_to_json(series).dump(2) << "\n";
  else
    ctqw::write_amplitude_csv(os, series);
  if (series.conservation_checked && !series.conservation_ok) {
    std::cerr << "walk: probability conservation violated by "
              << ctqw::format_g17(series.conservation_max_dev) << "\n";
    return exit_numeric;
  }
  return exit_ok;
}

int run_qclt(const Options& opt, std::ostream& os) {
  if (opt.convergence) {
    if (opt.k_list.empty())
      throw std::invalid_argument("--convergence needs --k k1,k2,...");
    const auto table = ctqw::convergence_experiment(
        opt.k_list, opt.m, opt.t,
        opt.paper_convergence ? ctqw::JacobiMode::paper : ctqw::JacobiMode::exact);
    ctqw::write_convergence_csv(os, table);
    if (!table.monotone_decreasing)
      std::cerr << "qclt: gap sequence is not monotone over the given k\n";
    return exit_ok;
  }
  const int m_max = opt.m_max >= 0 ? opt.m_max : 3;
  os << "t,m,re_q,im_q\n";
  for (const double t : make_grid(opt.t_start, opt.t_end, opt.t_steps))
    for (int m = 0; m <= m_max; ++m) {
      const auto q = ctqw::qm_limit_quadrature(m, t);
      os << ctqw::format_g17(t) << ',' << m << ',' << ctqw::format_g17(q.real())
         << ',' << ctqw::format_g17(q.imag()) << '\n';
    }
  return exit_ok;
}

int run_verify(const Options& opt, std::ostream& os) {
  const auto mode = ctqw::jacobi_mode_from_string(opt.mode);
  if (mode == ctqw::JacobiMode::limit)
    throw std::invalid_argument("verify compares against the full-graph oracle; mode must be paper or exact");
  const auto g = ctqw::build_odd_graph(opt.k);
  const auto strat = ctqw::stratify(g);
  const auto jac = ctqw::jacobi_from_intersection(ctqw::intersection_numbers(g, strat), mode);
  const auto mu = ctqw::gauss_measure(jac, jac.n_levels());
  const ctqw::DirectOracle oracle(g, strat);

  double max_gap = 0.0;
  for (const double t : make_grid(0.0, opt.t_end, opt.t_steps)) {
    const auto reference = oracle.amplitudes(t);
    for (int m = 0; m < jac.n_levels(); ++m)
      max_gap = std::max(max_gap,
                         std::abs(ctqw::amplitude(mu, jac, m, t) - reference[m]));
  }

  if (mode == ctqw::JacobiMode::paper) {
    // The published coefficient model drops the last diagonal entry, so it is
    // expected to disagree with the graph oracle; report, never claim success.
    os << "EXPECTED DISCREPANCY: paper-mode amplitudes vs oracle, max gap = "
       << ctqw::format_g17(max_gap) << " over t in [0, " << opt.t_end
       << "] (paper mode models its own coefficient system, not O_"
       << opt.k << ")\n";
    return exit_expected_discrepancy;
  }
  if (max_gap < opt.tolerance) {
    os << "PASS: exact-mode amplitudes vs oracle, max gap = "
       << ctqw::format_g17(max_gap) << " < " << ctqw::format_g17(opt.tolerance)
       << "\n";
    return exit_ok;
  }
  os << "FAIL: exact-mode amplitudes vs oracle, max gap = "
     << ctqw::format_g17(max_gap) << " >= " << ctqw::format_g17(opt.tolerance)
     << "\n";
  return exit_verify_failed;
}

}  // namespace

int main(int argc, char** argv) {
  CLI::App app{"continuous-time quantum walk on odd graphs via spectral measures"};
  app.require_subcommand(1);
  Options opt;

  auto* graph = app.add_subcommand("graph", "vertex/edge/strata summary of O_k");
  graph->add_option("--k", opt.k, "degree parameter")->required();

  auto* jacobi = app.add_subcommand("jacobi", "emit the coefficient sequence as JSON");
  jacobi->add_option("--k", opt.k, "degree parameter");
  jacobi->add_option("--mode", opt.mode, "paper | exact | limit");
  jacobi->add_option("--levels", opt.levels, "levels for limit mode");

  auto* measure = app.add_subcommand("measure", "emit the spectral measure as JSON");
  measure->add_option("--k", opt.k, "degree parameter");
  measure->add_option("--mode", opt.mode, "paper | exact | limit");
  measure->add_option("--levels", opt.levels, "truncation level (default: one per stratum)");
  measure->add_option("--cache-dir", opt.cache_dir, "measure cache directory (or CTQW_CACHE_DIR)");

  auto* walk = app.add_subcommand("walk", "amplitudes over a time grid");
  walk->add_option("--k", opt.k, "degree parameter");
  walk->add_option("--mode", opt.mode, "paper | exact");
  walk->add_option("--t-start", opt.t_start, "grid start");
  walk->add_option("--t-end", opt.t_end, "grid end");
  walk->add_option("--t-steps", opt.t_steps, "grid point count");
  walk->add_option("--m-max", opt.m_max, "highest stratum (default: all)");
  walk->add_option("--format", opt.format, "csv | json")
      ->check(CLI::IsMember({"csv", "json"}));
  walk->add_option("--cache-dir", opt.cache_dir, "measure cache directory");

  auto* qclt = app.add_subcommand("qclt", "limit amplitudes or convergence tables");
  qclt->add_flag("--convergence", opt.convergence, "emit the finite-k gap table");
  qclt->add_option("--k", opt.k_list, "comma-separated k list for --convergence")->delimiter(',');
  qclt->add_option("--m", opt.m, "stratum for --convergence");
  qclt->add_option("--t", opt.t, "time for --convergence");
  qclt->add_flag("--paper-mode", opt.paper_convergence, "use the zero-diagonal finite systems");
  qclt->add_option("--m-max", opt.m_max, "highest stratum for the amplitude table");
  qclt->add_option("--t-start", opt.t_start, "grid start");
  qclt->add_option("--t-end", opt.t_end, "grid end");
  qclt->add_option("--t-steps", opt.t_steps, "grid point count");

  auto* verify = app.add_subcommand("verify", "spectral amplitudes vs dense-oracle comparison");
  verify->add_option("--k", opt.k, "degree parameter (graph must fit in memory)");
  verify->add_option("--mode", opt.mode, "paper | exact");
  verify->add_option("--t-end", opt.t_end, "grid end")->default_val(5.0);
  verify->add_option("--t-steps", opt.t_steps, "grid point count")->default_val(51);
  verify->add_option("--tolerance", opt.tolerance, "max allowed gap");

  for (auto* sub : {graph, jacobi, measure, walk, qclt, verify})
    sub->add_option("--output", opt.output, "write to this file instead of stdout");

  try {
    app.parse(argc, argv);
  } catch (const CLI::CallForHelp& e) {
    return app.exit(e);
  } catch (const CLI::ParseError& e) {
    app.exit(e);
    return exit_usage;
  }

  try {
    Sink sink(opt.output);
    if (graph->parsed()) return run_graph(opt, sink.stream());
    if (jacobi->parsed()) return run_jacobi(opt, sink.stream());
    if (measure->parsed()) return run_measure(opt, sink.stream());
    if (walk->parsed()) return run_walk(opt, sink.stream());
    if (qclt->parsed()) return run_qclt(opt, sink.stream());
    if (verify->parsed()) return run_verify(opt, sink.stream());
    std::cerr << "no subcommand\n";
    return exit_usage;
  } catch (const std::invalid_argument& e) {
    std::cerr << "error: " << e.what() << "\n";
    return exit_usage;
  } catch (const std::out_of_range& e) {
    std::cerr << "error: " << e.what() << "\n";
    return exit_usage;
  } catch (const std::exception& e) {
    std::cerr << "numeric error: " << e.what() << "\n";
    return exit_numeric;
  }
}
