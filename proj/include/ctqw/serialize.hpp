#pragma once

#include <fcntl.h>
#include <unistd.h>

#include <chrono>
#include <cstdio>
#include <filesystem>
#include <fstream>
#include <optional>
#include <ostream>
#include <string>
#include <thread>

#include <json.hpp>

#include "ctqw/jacobi.hpp"
#include "ctqw/qclt.hpp"
#include "ctqw/spectral.hpp"
#include "ctqw/walk.hpp"

namespace ctqw {

inline constexpr int measure_schema_version = 1;

// Fixed 17-significant-digit rendering: enough to round-trip any double and
// byte-identical across runs, so emitted files are reproducible.
inline std::string format_g17(double v) {
  char buf[32];
  std::snprintf(buf, sizeof buf, "%.17g", v);
  return buf;
}

inline nlohmann::json jacobi_to_json(const JacobiSequence& jac) {
  nlohmann::json j;
  j["mode"] = to_string(jac.mode);
  if (jac.mode != JacobiMode::limit) j["k"] = jac.k;
  j["omega"] = jac.omega;
  j["alpha"] = jac.alpha;
  return j;
}

inline JacobiSequence jacobi_from_json(const nlohmann::json& j) {
  JacobiSequence jac;
  jac.mode = jacobi_mode_from_string(j.at("mode").get<std::string>());
  jac.k = j.value("k", 0);
  jac.omega = j.at("omega").get<std::vector<std::int64_t>>();
  jac.alpha = j.at("alpha").get<std::vector<std::int64_t>>();
  return jac;
}

inline nlohmann::json measure_to_json(const SpectralMeasure& mu) {
  nlohmann::json j;
  j["schema_version"] = measure_schema_version;
  j["mode"] = to_string(mu.mode);
  j["k"] = mu.k;
  j["n"] = mu.n;
  auto atoms = nlohmann::json::array();
  for (const auto& a : mu.atoms) atoms.push_back({{"x", a.x}, {"w", a.w}});
  j["atoms"] = std::move(atoms);
  return j;
}

inline SpectralMeasure measure_from_json(const nlohmann::json& j) {
  if (j.value("schema_version", -1) != measure_schema_version)
    throw std::invalid_argument("measure_from_json: unsupported schema version");
  SpectralMeasure mu;
  mu.mode = jacobi_mode_from_string(j.at("mode").get<std::string>());
  mu.k = j.at("k").get<int>();
  mu.n = j.at("n").get<int>();
  for (const auto& a : j.at("atoms"))
    mu.atoms.push_back({a.at("x").get<double>(), a.at("w").get<double>()});
  return mu;
}

namespace detail {

// Exclusive-create advisory lock; held for the duration of a cache write.
class FileLock {
 public:
  explicit FileLock(std::filesystem::path path) : path_(std::move(path)) {
    using namespace std::chrono_literals;
    for (int tries = 0; tries < 50; ++tries) {
      fd_ = ::open(path_.c_str(), O_CREAT | O_EXCL | O_WRONLY, 0644);
      if (fd_ >= 0) return;
      std::this_thread::sleep_for(100ms);
    }
    throw std::runtime_error("could not acquire lock " + path_.string());
  }
  FileLock(const FileLock&) = delete;
  FileLock& operator=(const FileLock&) = delete;
  ~FileLock() {
    if (fd_ >= 0) {
      ::close(fd_);
      ::unlink(path_.c_str());
    }
  }

 private:
  std::filesystem::path path_;
  int fd_ = -1;
};

}  // namespace detail

// Measures keyed by (mode, k, n). Entries written under an older schema are
// recomputed, not migrated; unreadable entries are treated as absent.
class MeasureCache {
 public:
  explicit MeasureCache(std::filesystem::path dir) : dir_(std::move(dir)) {
    std::filesystem::create_directories(dir_);
  }

  std::filesystem::path path_for(JacobiMode mode, int k, int n) const {
    return dir_ / ("measure_" + std::string(to_string(mode)) + "_k" +
                   std::to_string(k) + "_n" + std::to_string(n) + ".json");
  }

  std::optional<SpectralMeasure> load(JacobiMode mode, int k, int n) const {
    std::ifstream in(path_for(mode, k, n));
    if (!in) return std::nullopt;
    try {
      return measure_from_json(nlohmann::json::parse(in));
    } catch (const std::exception&) {
      return std::nullopt;
    }
  }

  void store(const SpectralMeasure& mu) const {
    detail::FileLock lock(dir_ / ".lock");
    std::ofstream out(path_for(mu.mode, mu.k, mu.n));
    out << measure_to_json(mu).dump(2) << "\n";
  }

 private:
  std::filesystem::path dir_;
};

inline void write_amplitude_csv(std::ostream& os, const AmplitudeSeries& s) {
  os << "t,m,re_q,im_q,prob_stratum,prob_vertex\n";
  for (std::size_t ti = 0; ti < s.t_grid.size(); ++ti)
    for (int m = 0; m <= s.m_max; ++m) {
      const auto q = s.q[ti][m];
      const double prob = std::norm(q);
      const bool sized = m < static_cast<int>(s.strata_sizes.size());
      os << format_g17(s.t_grid[ti]) << ',' << m << ',' << format_g17(q.real())
         << ',' << format_g17(q.imag()) << ',' << format_g17(prob) << ','
         << (sized ? format_g17(prob / double(s.strata_sizes[m])) : "nan")
         << '\n';
    }
}

inline nlohmann::json series_to_json(const AmplitudeSeries& s) {
  nlohmann::json j;
  j["mode"] = to_string(s.mode);
  j["k"] = s.k;
  j["m_max"] = s.m_max;
  j["t_grid"] = s.t_grid;
  j["strata_sizes"] = s.strata_sizes;
  j["conservation"] = {{"checked", s.conservation_checked},
                       {"tolerance", s.conservation_tol},
                       {"max_deviation", s.conservation_max_dev},
                       {"ok", s.conservation_ok}};
  auto rows = nlohmann::json::array();
  for (std::size_t ti = 0; ti < s.t_grid.size(); ++ti) {
    auto row = nlohmann::json::array();
    for (int m = 0; m <= s.m_max; ++m)
      row.push_back({{"re", s.q[ti][m].real()}, {"im", s.q[ti][m].imag()}});
    rows.push_back(std::move(row));
  }
  j["q"] = std::move(rows);
  return j;
}

inline void write_convergence_csv(std::ostream& os, const ConvergenceTable& t) {
  os << "k,m,t,re_finite,im_finite,re_limit,im_limit,gap\n";
  for (const auto& row : t.rows)
    os << row.k << ',' << t.m << ',' << format_g17(t.t) << ','
       << format_g17(row.finite.real()) << ',' << format_g17(row.finite.imag())
       << ',' << format_g17(row.limit.real()) << ','
       << format_g17(row.limit.imag()) << ',' << format_g17(row.gap) << '\n';
}

}  // namespace ctqw
