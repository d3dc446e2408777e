#pragma once

// Plain-text exchange formats. Numbers are written with std::to_chars, so
// the decimal separator is '.' whatever the global locale.
//
//   trajectory CSV   t,p_0..p_{n-1},sum_drift,info_drift   (15 digits)
//   density CSV      z,f                                   (17 digits)
//     + JSON sidecar {"h", "dz", "z0", "N"}
//   Wigner CSV       x,p,w                                 (17 digits)
//     + JSON sidecar {"h", "mass", "x0", "dx", "p0", "dp", "Nx", "Np"}
//   diagnostics CSV  t,sum,I,moment3                       (15 digits)
//
// Grids use 17 significant digits so that re-import is bit-exact.

#include <charconv>
#include <cmath>
#include <istream>
#include <ostream>
#include <sstream>
#include <string>
#include <string_view>
#include <system_error>
#include <vector>

#include <json.hpp>

#include "logent/continuum.hpp"
#include "logent/dynamics_fd.hpp"
#include "logent/errors.hpp"
#include "logent/prob_core.hpp"
#include "logent/wigner.hpp"

namespace logent::io {

inline constexpr int kReportDigits = 15;
inline constexpr int kGridDigits = 17;

inline std::string format_number(double v, int digits = kReportDigits) {
  char buf[64];
  const auto res = std::to_chars(buf, buf + sizeof(buf), v,
                                 std::chars_format::general, digits);
  return std::string(buf, res.ptr);
}

inline double parse_number(std::string_view s) {
  while (!s.empty() && (s.front() == ' ' || s.front() == '\t'))
    s.remove_prefix(1);
  while (!s.empty() && (s.back() == ' ' || s.back() == '\t' ||
                        s.back() == '\r'))
    s.remove_suffix(1);
  if (!s.empty() && s.front() == '+')
    s.remove_prefix(1);
  double v = 0.0;
  const auto res = std::from_chars(s.data(), s.data() + s.size(), v);
  if (res.ec != std::errc() || res.ptr != s.data() + s.size())
    throw invalid_input("cannot parse number '" + std::string(s) + "'");
  return v;
}

/// "a,b,c" -> {a, b, c}
inline std::vector<double> parse_list(std::string_view s) {
  std::vector<double> out;
  std::size_t start = 0;
  while (start <= s.size()) {
    const auto comma = s.find(',', start);
    const auto end = comma == std::string_view::npos ? s.size() : comma;
    out.push_back(parse_number(s.substr(start, end - start)));
    if (comma == std::string_view::npos)
      break;
    start = comma + 1;
  }
  return out;
}

struct CsvTable {
  std::vector<std::string> header;
  std::vector<std::vector<double>> rows;

  std::size_t column(std::string_view name) const {
    for (std::size_t i = 0; i < header.size(); ++i)
      if (header[i] == name)
        return i;
    throw invalid_input("CSV has no column '" + std::string(name) + "'");
  }
};

inline std::vector<std::string> split_fields(const std::string &line) {
  std::vector<std::string> out;
  std::string cur;
  for (char c : line) {
    if (c == ',') {
      out.push_back(cur);
      cur.clear();
    } else if (c != '\r') {
      cur.push_back(c);
    }
  }
  out.push_back(cur);
  return out;
}

inline CsvTable read_csv(std::istream &in) {
  CsvTable t;
  std::string line;
  if (!std::getline(in, line))
    throw invalid_input("empty CSV input");
  t.header = split_fields(line);
  while (std::getline(in, line)) {
    if (line.empty() || line == "\r")
      continue;
    const auto fields = split_fields(line);
    if (fields.size() != t.header.size())
      throw invalid_input("CSV row has " + std::to_string(fields.size()) +
                          " fields, header has " +
                          std::to_string(t.header.size()));
    std::vector<double> row;
    row.reserve(fields.size());
    for (const auto &f : fields)
      row.push_back(parse_number(f));
    t.rows.push_back(std::move(row));
  }
  return t;
}

inline nlohmann::json to_json(const SignedProbVector &p) {
  return nlohmann::json(p.values());
}

inline SignedProbVector vector_from_json(const nlohmann::json &j) {
  if (!j.is_array())
    throw invalid_input("probability vector must be a JSON array");
  return SignedProbVector(j.get<std::vector<double>>());
}

// --- finite-dimensional trajectories -------------------------------------

inline void write_trajectory_csv(std::ostream &os, const TrajectoryRecord &rec) {
  const std::size_t n = rec.states.empty() ? 0 : rec.states.front().size();
  os << "t";
  for (std::size_t i = 0; i < n; ++i)
    os << ",p_" << i;
  os << ",sum_drift,info_drift\n";
  for (std::size_t k = 0; k < rec.times.size(); ++k) {
    os << format_number(rec.times[k]);
    for (double v : rec.states[k].entries())
      os << ',' << format_number(v);
    os << ',' << format_number(rec.probability_drift[k]) << ','
       << format_number(rec.information_drift[k]) << '\n';
  }
}

// --- continuum densities ---------------------------------------------------

inline void write_density_csv(std::ostream &os, const DensityGrid &f) {
  os << "z,f\n";
  for (std::size_t j = 0; j < f.size(); ++j)
    os << format_number(f.z(j), kGridDigits) << ','
       << format_number(f[j], kGridDigits) << '\n';
}

inline nlohmann::json density_metadata(const DensityGrid &f) {
  return {{"h", f.h()}, {"dz", f.dz()}, {"z0", f.z0()}, {"N", f.size()}};
}

inline DensityGrid read_density(std::istream &csv, const nlohmann::json &meta) {
  const CsvTable t = read_csv(csv);
  const std::size_t fcol = t.column("f");
  const auto n = meta.at("N").get<std::size_t>();
  if (t.rows.size() != n)
    throw invalid_input("density CSV has " + std::to_string(t.rows.size()) +
                        " rows, metadata says " + std::to_string(n));
  std::vector<double> v;
  v.reserve(n);
  for (const auto &row : t.rows)
    v.push_back(row[fcol]);
  return DensityGrid(std::move(v), meta.at("z0").get<double>(),
                     meta.at("dz").get<double>(), meta.at("h").get<double>());
}

// --- Wigner snapshots ------------------------------------------------------

inline void write_wigner_csv(std::ostream &os, const WignerGrid &w) {
  const auto &g = w.grid();
  os << "x,p,w\n";
  for (std::size_t i = 0; i < g.nx; ++i)
    for (std::size_t j = 0; j < g.np; ++j)
      os << format_number(g.x(i), kGridDigits) << ','
         << format_number(g.p(j), kGridDigits) << ','
         << format_number(w(i, j), kGridDigits) << '\n';
}

inline nlohmann::json wigner_metadata(const WignerGrid &w) {
  const auto &g = w.grid();
  return {{"h", g.h},   {"mass", g.mass}, {"x0", g.x0}, {"dx", g.dx},
          {"p0", g.p0}, {"dp", g.dp},     {"Nx", g.nx}, {"Np", g.np}};
}

inline WignerGrid read_wigner(std::istream &csv, const nlohmann::json &meta) {
  PhaseSpaceGrid g;
  g.h = meta.at("h").get<double>();
  g.mass = meta.at("mass").get<double>();
  g.x0 = meta.at("x0").get<double>();
  g.dx = meta.at("dx").get<double>();
  g.p0 = meta.at("p0").get<double>();
  g.dp = meta.at("dp").get<double>();
  g.nx = meta.at("Nx").get<std::size_t>();
  g.np = meta.at("Np").get<std::size_t>();
  const CsvTable t = read_csv(csv);
  const std::size_t wcol = t.column("w");
  if (t.rows.size() != g.nx * g.np)
    throw invalid_input("Wigner CSV row count does not match metadata");
  std::vector<double> v;
  v.reserve(t.rows.size());
  for (const auto &row : t.rows)
    v.push_back(row[wcol]);
  return WignerGrid(g, std::move(v));
}

struct WignerDiagnostic {
  double t;
  double sum;
  double information;
  double moment3;
};

inline WignerDiagnostic diagnose(const WignerGrid &w, double t) {
  return {t, w.total(), w.information(), higher_moment(w, 3)};
}

inline void write_diagnostics_csv(std::ostream &os,
                                  const std::vector<WignerDiagnostic> &d) {
  os << "t,sum,I,moment3\n";
  for (const auto &s : d)
    os << format_number(s.t) << ',' << format_number(s.sum) << ','
       << format_number(s.information) << ',' << format_number(s.moment3)
       << '\n';
}

} // namespace logent::io
