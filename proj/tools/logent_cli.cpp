// logent command-line front-end.
//
// Exit status: 0 success, 1 inadmissible state, 2 usage or input error.

#include <CLI11.hpp>
#include <json.hpp>

#include <cmath>
#include <filesystem>
#include <fstream>
#include <iostream>
#include <numbers>
#include <sstream>
#include <string>
#include <vector>

#include "logent/logent.hpp"
#include "run_config.hpp"

using namespace logent;
using ordered_json = nlohmann::ordered_json;

namespace {

constexpr int kExitOk = 0;
constexpr int kExitInadmissible = 1;
constexpr int kExitUsage = 2;

// Ordered key/value report printed as "key = value" lines or one JSON object.
class Report {
public:
  template <class T> void add(const std::string &key, const T &value) {
    doc_[key] = value;
  }

  void print(std::ostream &os, const std::string &format) const {
    if (format == "json") {
      os << dump_json(doc_) << '\n';
      return;
    }
    for (const auto &[key, value] : doc_.items())
      os << key << " = " << text(value) << '\n';
  }

private:
  // Reports print -0 as 0.
  static std::string number(double v) { return io::format_number(v + 0.0); }

  static std::string text(const ordered_json &v) {
    if (v.is_number_float())
      return number(v.get<double>());
    if (v.is_string())
      return v.get<std::string>();
    if (v.is_array()) {
      std::string out;
      for (const auto &e : v)
        out += (out.empty() ? "" : ",") + text(e);
      return out;
    }
    return v.dump();
  }

  // Floats at report precision rather than nlohmann's shortest round-trip.
  static std::string dump_json(const ordered_json &v) {
    if (v.is_number_float())
      return number(v.get<double>());
    if (v.is_array()) {
      std::string out = "[";
      for (std::size_t i = 0; i < v.size(); ++i)
        out += (i ? "," : "") + dump_json(v[i]);
      return out + "]";
    }
    if (v.is_object()) {
      std::string out = "{";
      bool first = true;
      for (const auto &[k, e] : v.items()) {
        out += (first ? "" : ",") + ordered_json(k).dump() + ":" + dump_json(e);
        first = false;
      }
      return out + "}";
    }
    return v.dump();
  }

  ordered_json doc_ = ordered_json::object();
};

std::string read_text_file(const std::string &path) {
  std::ifstream in(path);
  if (!in)
    throw invalid_input("cannot open '" + path + "'");
  std::stringstream ss;
  ss << in.rdbuf();
  return ss.str();
}

std::ofstream open_output(const std::string &path) {
  std::ofstream out(path);
  if (!out)
    throw invalid_input("cannot write '" + path + "'");
  return out;
}

// A JSON array, or numbers separated by commas, whitespace or newlines.
std::vector<double> parse_vector_text(const std::string &text) {
  const auto start = text.find_first_not_of(" \t\r\n");
  if (start != std::string::npos && text[start] == '[') {
    const auto j = nlohmann::json::parse(text, nullptr, false);
    if (j.is_discarded() || !j.is_array())
      throw invalid_input("malformed JSON array");
    try {
      return j.get<std::vector<double>>();
    } catch (const nlohmann::json::exception &) {
      throw invalid_input("JSON array must hold numbers only");
    }
  }
  std::string flat;
  for (char c : text)
    flat.push_back(c == '\n' || c == ' ' || c == '\t' ? ',' : c);
  std::vector<double> out;
  std::string cur;
  std::istringstream ss(flat);
  while (std::getline(ss, cur, ','))
    if (!cur.empty() && cur != "\r")
      out.push_back(io::parse_number(cur));
  return out;
}

// Entries within `tol` of unit sum are rescaled onto the hyperplane, so that
// vectors printed at a few digits are accepted.
SignedProbVector normalized_vector(std::vector<double> v, double tol) {
  if (v.size() < 2)
    throw invalid_input("need at least 2 entries");
  double sum = 0.0;
  for (double x : v)
    sum += x;
  if (!(std::abs(sum - 1.0) <= tol))
    throw invalid_input("entries sum to " + io::format_number(sum) +
                        ", outside 1 +- " + io::format_number(tol));
  for (auto &x : v)
    x /= sum;
  return SignedProbVector(std::move(v));
}

void add_radii(Report &r, std::size_t n) {
  const auto radii = feasibility_radii(n);
  r.add("n", n);
  r.add("r_max", radii.r_max);
  r.add("r_pos", radii.r_pos);
  r.add("r_min", radii.r_min);
  r.add("negatives_possible", radii.negatives_possible);
}

// --- entropy ----------------------------------------------------------------

struct EntropyArgs {
  std::string p;
  std::string file;
  double tol = 1e-5;
  std::string format = "text";
};

int cmd_entropy(const EntropyArgs &a) {
  if (a.p.empty() == a.file.empty())
    throw invalid_input("give exactly one of --p or --file");
  const auto raw = a.p.empty() ? parse_vector_text(read_text_file(a.file))
                               : io::parse_list(a.p);
  const auto p = normalized_vector(raw, a.tol);
  const auto cls = classify(p, a.tol);
  Report r;
  r.add("p", p.values());
  r.add("S_L", logical_entropy(p));
  r.add("I", information(p));
  r.add("class", to_string(cls));
  add_radii(r, p.size());
  r.print(std::cout, a.format);
  return cls == StateClass::Inadmissible ? kExitInadmissible : kExitOk;
}

// --- maxent -----------------------------------------------------------------

struct MaxentArgs {
  std::string x;
  double m = 0.0;
  bool find_max = false;
  bool nonnegative = false;
  bool negative = false;
  std::string format = "text";
};

int cmd_maxent(const MaxentArgs &a, bool has_m) {
  if (has_m == a.find_max)
    throw invalid_input("give exactly one of --m or --find-max");
  const auto x = io::parse_list(a.x);
  const Branch branch = a.negative ? Branch::Negative : Branch::Positive;
  Report r;
  if (a.find_max) {
    const double m = a.nonnegative ? max_mean_nonnegative(x, branch)
                                   : max_mean(x, branch);
    r.add(a.nonnegative ? "m_max_nonnegative" : "m_max", m);
    const auto sol = equilibrium({x, m});
    r.add("p", sol.p.values());
    r.add("I", sol.information);
    r.print(std::cout, a.format);
    return kExitOk;
  }
  const auto sol = equilibrium({x, a.m});
  r.add("m", a.m);
  r.add("p", sol.p.values());
  r.add("lambda", sol.lambda);
  r.add("mu", sol.mu);
  r.add("I", sol.information);
  r.add("S_L", 1.0 - sol.information);
  r.add("class", to_string(classify(sol.p)));
  r.print(std::cout, a.format);
  return sol.admissible ? kExitOk : kExitInadmissible;
}

// --- scenario / feasibility -------------------------------------------------

int cmd_scenario(const std::string &name, const std::string &format) {
  Report r;
  if (name == "marbles") {
    // Colours in order red, blue, green.
    const SignedProbVector p{2.0 / 3, 2.0 / 3, -1.0 / 3};
    const SignedProbVector q{-1.0 / 3, 2.0 / 3, 2.0 / 3};
    const std::size_t blue_green[2] = {1, 2};
    const double rr = pair_outcome_probability(q, 0, 0);
    const double bb_gg = same_outcome_probability(p, blue_green);
    r.add("p", p.values());
    r.add("q", q.values());
    r.add("p.q", scalar_product(p, q));
    r.add("I_p", information(p));
    r.add("I_q", information(q));
    r.add("Prob_q(RR)", rr);
    r.add("Prob_p(BB)+Prob_p(GG)", bb_gg);
    r.add("mismatch", std::abs(rr - bb_gg) > 1e-12
                          ? "Prob_q(RR) = 1/9 differs from Prob_p(BB)+Prob_p(GG) = 5/9"
                          : "none");
  } else {
    const std::vector<double> die{-1.0, 0.0, 1.0};
    const double m_classical = max_mean_nonnegative(die);
    const double m_signed = max_mean(die);
    const auto classical = equilibrium({die, m_classical});
    const auto signed_state = equilibrium({die, m_signed});
    r.add("X", die);
    r.add("classical_m_max", m_classical);
    r.add("classical_p", classical.p.values());
    r.add("classical_I", classical.information);
    r.add("signed_m_max", m_signed);
    r.add("signed_p", signed_state.p.values());
    r.add("signed_I", signed_state.information);
  }
  r.print(std::cout, format);
  return kExitOk;
}

int cmd_feasibility(std::size_t n, const std::string &format) {
  Report r;
  add_radii(r, n);
  r.print(std::cout, format);
  return kExitOk;
}

// --- evolve -----------------------------------------------------------------

struct EvolveArgs {
  std::string config;
  std::vector<std::string> overrides;
  std::string out;
  std::string format = "text";
};

cli::RunConfig load_config(std::vector<cli::KeySpec> schema,
                           const EvolveArgs &a) {
  cli::RunConfig cfg(std::move(schema));
  if (!a.config.empty())
    cfg.load_file(a.config);
  for (const auto &o : a.overrides)
    cfg.apply_override(o);
  return cfg;
}

std::vector<cli::KeySpec> potential_keys(bool with_mass) {
  std::vector<cli::KeySpec> k{
      {"potential.family", "harmonic",
       "constant | linear | harmonic | quartic | tabulated"},
      {"potential.v0", "0", "energy"},
      {"potential.force", "1", "energy / length (V = -force x)"},
      {"potential.frequency", "1", "1 / time (V = m w^2 x^2 / 2)"},
      {"potential.beta", "0.1", "energy / length^4 (V = beta x^4)"},
      {"potential.table_x", "", "length, comma list"},
      {"potential.table_v", "", "energy, comma list"}};
  if (with_mass)
    k.push_back({"potential.mass", "1", "mass (harmonic only)"});
  return k;
}

PotentialSpec make_potential(const cli::RunConfig &c, double mass) {
  const auto &family = c.text("potential.family");
  if (family == "constant")
    return PotentialSpec::constant(c.number("potential.v0"));
  if (family == "linear")
    return PotentialSpec::linear(c.number("potential.force"));
  if (family == "harmonic")
    return PotentialSpec::harmonic(c.number("potential.frequency"), mass);
  if (family == "quartic")
    return PotentialSpec::quartic(c.number("potential.beta"));
  if (family == "tabulated")
    return PotentialSpec::tabulated(c.list("potential.table_x"),
                                    c.list("potential.table_v"));
  throw invalid_input("potential.family: unknown family '" + family + "'");
}

int cmd_evolve_fd(const EvolveArgs &a) {
  const auto c = load_config(
      {{"fd.generator", "cyclic3", "cyclic3 | random"},
       {"fd.n", "3", "outcomes (random generator)"},
       {"fd.seed", "1", "random generator seed"},
       {"fd.rate", "1", "1 / time (random generator)"},
       {"fd.p0", "1,0,0", "initial signed probabilities"},
       {"fd.t_end", "10", "time"},
       {"fd.dt", "0.05", "time between samples"},
       {"fd.scheme", "gauss-legendre6", "gauss-legendre6 | implicit-midpoint"}},
      a);
  const auto &kind = c.text("fd.generator");
  GeneratorMatrix g = kind == "cyclic3" ? paper_generator3()
                      : kind == "random"
                          ? random_generator(c.count("fd.n"),
                                             static_cast<std::uint64_t>(
                                                 c.number("fd.seed")),
                                             c.number("fd.rate"))
                          : throw invalid_input(
                                "fd.generator: expected cyclic3 or random");
  EvolveOptions opts;
  const auto &scheme = c.text("fd.scheme");
  if (scheme == "implicit-midpoint")
    opts.scheme = SkewScheme::ImplicitMidpoint;
  else if (scheme != "gauss-legendre6")
    throw invalid_input("fd.scheme: unknown scheme '" + scheme + "'");

  const SignedProbVector p0(c.list("fd.p0"));
  if (p0.size() != g.size())
    throw invalid_input("fd.p0 has " + std::to_string(p0.size()) +
                        " entries, generator has " + std::to_string(g.size()));
  if (!p0.admissible())
    throw inadmissible_state("fd.p0 is inadmissible (I = " +
                             io::format_number(p0.information()) + ")");
  const auto rec =
      trajectory(p0, g, c.number("fd.t_end"), c.number("fd.dt"), opts);
  if (!a.out.empty()) {
    auto os = open_output(a.out);
    io::write_trajectory_csv(os, rec);
  }
  Report r;
  r.add("engine", "fd");
  r.add("n", g.size());
  r.add("samples", rec.times.size());
  r.add("t_end", rec.times.back());
  r.add("initial_class", to_string(classify(p0)));
  r.add("final_class", to_string(classify(rec.states.back())));
  r.add("final_p", rec.states.back().values());
  r.add("sum_drift_max", rec.max_probability_drift());
  r.add("info_drift_max", rec.max_information_drift());
  r.print(std::cout, a.format);
  return kExitOk;
}

int cmd_evolve_continuum(const EvolveArgs &a) {
  auto schema = std::vector<cli::KeySpec>{
      {"grid.n", "256", "samples (power of two)"},
      {"grid.length", "12", "z units"},
      {"grid.h", "1", "action units"},
      {"state.kind", "gaussian", "gaussian | file"},
      {"state.sigma", "0.5", "z units"},
      {"state.center", "0", "z units"},
      {"state.file", "", "density CSV (z,f)"},
      {"state.metadata", "", "JSON sidecar; defaults to state.file with .json"},
      {"continuum.offset", "0", "a, z units"},
      {"continuum.t", "1", "time"},
      {"continuum.samples", "10", "diagnostic samples after t = 0"},
      {"continuum.cross_check", "false",
       "also run the delta-localized quadrature and report the difference"}};
  for (auto &k : potential_keys(true))
    schema.push_back(std::move(k));
  const auto c = load_config(std::move(schema), a);

  const double h = c.number("grid.h");
  DensityGrid f0 = [&] {
    const auto &kind = c.text("state.kind");
    if (kind == "gaussian")
      return gaussian_density(c.count("grid.n"), c.number("grid.length"), h,
                              c.number("state.sigma"),
                              c.number("state.center"));
    if (kind != "file")
      throw invalid_input("state.kind: expected gaussian or file");
    const auto &file = c.text("state.file");
    auto meta_path = c.text("state.metadata");
    if (meta_path.empty())
      meta_path = std::filesystem::path(file).replace_extension(".json").string();
    std::ifstream csv(file);
    if (!csv)
      throw invalid_input("state.file: cannot open '" + file + "'");
    const auto meta = nlohmann::json::parse(read_text_file(meta_path), nullptr,
                                            false);
    if (meta.is_discarded())
      throw invalid_input("state.metadata: malformed JSON in '" + meta_path + "'");
    return io::read_density(csv, meta);
  }();
  if (!f0.admissible())
    throw inadmissible_state("initial density is inadmissible (I = " +
                             io::format_number(f0.information()) + ")");

  const auto v = make_potential(c, c.number("potential.mass"));
  const double offset = c.number("continuum.offset");
  const auto kernel = build_kernel(v.frequency(h), offset, f0);
  const double t = c.number("continuum.t");
  const std::size_t samples = c.count("continuum.samples");

  double sum_drift = 0.0, info_drift = 0.0;
  bool bound_ok = amplitude_bound_check(f0).satisfied;
  DensityGrid f = f0;
  for (std::size_t s = 1; s <= samples; ++s) {
    f = evolve_density(f0, kernel, t * static_cast<double>(s) /
                                       static_cast<double>(samples));
    sum_drift = std::max(sum_drift, std::abs(f.total() - f0.total()));
    info_drift =
        std::max(info_drift, std::abs(f.information() - f0.information()));
    bound_ok = bound_ok && amplitude_bound_check(f).satisfied;
  }
  if (!a.out.empty()) {
    auto os = open_output(a.out);
    io::write_density_csv(os, f);
    auto meta = open_output(
        std::filesystem::path(a.out).replace_extension(".json").string());
    meta << io::density_metadata(f).dump(2) << '\n';
  }

  Report r;
  r.add("engine", "continuum");
  r.add("potential", v.family());
  r.add("offset", offset);
  r.add("t", t);
  r.add("I_initial", f0.information());
  r.add("sum_drift_max", sum_drift);
  r.add("info_drift_max", info_drift);
  r.add("amplitude_bound_held", bound_ok);
  r.add("characteristic_time", characteristic_time(f0, kernel));
  if (c.flag("continuum.cross_check")) {
    const auto direct = delta_localized_evolve(f0, v, offset, t);
    double diff = 0.0;
    for (std::size_t j = 0; j < f.size(); ++j)
      diff = std::max(diff, std::abs(direct[j] - f[j]));
    r.add("cross_check_linf", diff);
  }
  r.print(std::cout, a.format);
  return kExitOk;
}

int cmd_evolve_wigner(const EvolveArgs &a) {
  auto schema = std::vector<cli::KeySpec>{
      {"grid.nx", "128", "position samples (power of two)"},
      {"grid.np", "128", "momentum samples (power of two)"},
      {"grid.x_length", "8", "length"},
      {"grid.p_length", "8", "momentum"},
      {"grid.h", "1", "action"},
      {"grid.mass", "1", "mass"},
      {"state.sigma_x", "0.28209479177387814", "length"},
      {"state.x_center", "1", "length"},
      {"state.p_center", "0", "momentum"},
      {"state.correlation", "0", "x-p correlation in (-1, 1)"},
      {"wigner.t", "1.5707963267948966", "time"},
      {"wigner.dt", "0", "time; 0 picks the 0.1 rad step"},
      {"wigner.record_every", "10", "steps between diagnostic rows"},
      {"wigner.snapshot", "", "final Wigner CSV (x,p,w) plus .json sidecar"}};
  for (auto &k : potential_keys(false))
    schema.push_back(std::move(k));
  const auto c = load_config(std::move(schema), a);

  const auto g = PhaseSpaceGrid::centered(
      c.count("grid.nx"), c.count("grid.np"), c.number("grid.x_length"),
      c.number("grid.p_length"), c.number("grid.h"), c.number("grid.mass"));
  const GaussianState state{c.number("state.sigma_x"),
                            c.number("state.x_center"),
                            c.number("state.p_center"),
                            c.number("state.correlation")};
  const auto w0 = gaussian_pure_wigner(g, state);
  const auto v = make_potential(c, g.mass);
  const double t = c.number("wigner.t");
  double dt = c.number("wigner.dt");
  if (dt == 0.0)
    dt = default_time_step(g, v);
  if (!(dt > 0.0))
    throw invalid_input("wigner.dt: must be positive (or 0 for automatic)");
  const auto steps = static_cast<std::size_t>(
      std::max(1.0, std::ceil(std::abs(t) / dt - 1e-9)));
  const double step = t / static_cast<double>(steps);
  const auto phases = step_phase_report(g, v, step);
  if (!phases.within_default)
    std::cerr << "warning: step advances grid phases by up to "
              << io::format_number(
                     std::max(phases.max_kick_phase, phases.max_transport_phase),
                     3)
              << " rad (default bound 0.1)"
              << (phases.resolved ? "" : "; fastest modes are not resolved")
              << '\n';

  const std::size_t every = c.count("wigner.record_every");
  WignerSplitStep stepper(g, v, step);
  std::vector<double> w = w0.values();
  std::vector<io::WignerDiagnostic> diag{io::diagnose(w0, 0.0)};
  for (std::size_t done = 0; done < steps;) {
    const std::size_t chunk = std::min(every, steps - done);
    stepper.advance(w, chunk);
    done += chunk;
    diag.push_back(io::diagnose(w0.with_values(w), step * static_cast<double>(done)));
  }
  const auto wt = w0.with_values(w);

  if (!a.out.empty()) {
    auto os = open_output(a.out);
    io::write_diagnostics_csv(os, diag);
  }
  const auto &snap = c.text("wigner.snapshot");
  if (!snap.empty()) {
    auto os = open_output(snap);
    io::write_wigner_csv(os, wt);
    auto meta = open_output(
        std::filesystem::path(snap).replace_extension(".json").string());
    meta << io::wigner_metadata(wt).dump(2) << '\n';
  }

  double sum_drift = 0.0, info_drift = 0.0;
  for (const auto &d : diag) {
    sum_drift = std::max(sum_drift, std::abs(d.sum - diag.front().sum));
    info_drift =
        std::max(info_drift, std::abs(d.information - diag.front().information));
  }
  Report r;
  r.add("engine", "wigner");
  r.add("potential", v.family());
  r.add("steps", steps);
  r.add("dt", step);
  r.add("max_step_phase",
        std::max(phases.max_kick_phase, phases.max_transport_phase));
  r.add("sum_drift_max", sum_drift);
  r.add("info_drift_max", info_drift);
  r.add("moment3_relative_change",
        std::abs(diag.back().moment3 - diag.front().moment3) /
            std::abs(diag.front().moment3));
  r.add("min_w", wt.min_value());
  if (v.family() == "harmonic") {
    const auto ref = harmonic_rotation_reference(
        g, state, c.number("potential.frequency"), t);
    double l2 = 0.0;
    for (std::size_t k = 0; k < ref.size(); ++k)
      l2 += (wt.values()[k] - ref[k]) * (wt.values()[k] - ref[k]);
    r.add("rotation_l2_error", std::sqrt(l2 * wt.cell()));
  }
  r.print(std::cout, a.format);
  return kExitOk;
}

} // namespace

int main(int argc, char **argv) {
  CLI::App app{"Logical entropy toolkit for signed probability distributions"};
  app.require_subcommand(1);
  const std::vector<std::string> formats{"text", "json"};

  EntropyArgs ent;
  auto *entropy = app.add_subcommand(
      "entropy", "logical entropy, information and class of a vector");
  entropy->add_option("--p", ent.p, "comma-separated entries");
  entropy->add_option("--file", ent.file,
                      "file holding the entries (JSON array or CSV)");
  entropy->add_option("--tol", ent.tol, "sum and classification tolerance")
      ->capture_default_str();
  entropy->add_option("--format", ent.format)->check(CLI::IsMember(formats));

  MaxentArgs mx;
  auto *maxent = app.add_subcommand(
      "maxent", "maximum logical entropy state under a mean constraint");
  maxent->add_option("--x", mx.x, "observable values, comma-separated")
      ->required();
  auto *m_opt = maxent->add_option("--m", mx.m, "target mean");
  auto *fm = maxent->add_flag("--find-max", mx.find_max,
                              "largest mean with an admissible equilibrium");
  maxent->add_flag("--nonnegative", mx.nonnegative,
                   "restrict --find-max to nonnegative states")
      ->needs(fm);
  maxent->add_flag("--negative", mx.negative,
                   "search the lower branch instead")
      ->needs(fm);
  m_opt->excludes(fm);
  maxent->add_option("--format", mx.format)->check(CLI::IsMember(formats));

  EvolveArgs ev;
  auto *evolve_cmd =
      app.add_subcommand("evolve", "run an evolution engine from a config");
  evolve_cmd->require_subcommand(1);
  const char *engines[3][2] = {
      {"fd", "finite-dimensional skew-symmetric flow"},
      {"continuum", "continuum density flow"},
      {"wigner", "phase-space Wigner flow"}};
  std::vector<CLI::App *> engine_cmds;
  for (const auto &e : engines) {
    auto *sub = evolve_cmd->add_subcommand(e[0], e[1]);
    sub->add_option("--config", ev.config, "key = value config file");
    sub->add_option("--set", ev.overrides, "override section.key=value");
    sub->add_option("--out", ev.out, "output file");
    sub->add_option("--format", ev.format, "summary format")
        ->check(CLI::IsMember(formats));
    engine_cmds.push_back(sub);
  }

  std::string scenario_name, scenario_format = "text";
  auto *scenario = app.add_subcommand("scenario", "worked examples");
  scenario->add_option("name", scenario_name, "marbles | die")
      ->required()
      ->check(CLI::IsMember({"marbles", "die"}));
  scenario->add_option("--format", scenario_format)
      ->check(CLI::IsMember(formats));

  std::size_t feas_n = 0;
  std::string feas_format = "text";
  auto *feasibility = app.add_subcommand(
      "feasibility", "radii bounding the states of n outcomes");
  feasibility->add_option("--n", feas_n, "number of outcomes")->required();
  feasibility->add_option("--format", feas_format)
      ->check(CLI::IsMember(formats));

  try {
    app.parse(argc, argv);
  } catch (const CLI::ParseError &e) {
    return app.exit(e) == 0 ? kExitOk : kExitUsage;
  }

  try {
    if (*entropy)
      return cmd_entropy(ent);
    if (*maxent)
      return cmd_maxent(mx, m_opt->count() > 0);
    if (*scenario)
      return cmd_scenario(scenario_name, scenario_format);
    if (*feasibility)
      return cmd_feasibility(feas_n, feas_format);
    if (*engine_cmds[0])
      return cmd_evolve_fd(ev);
    if (*engine_cmds[1])
      return cmd_evolve_continuum(ev);
    if (*engine_cmds[2])
      return cmd_evolve_wigner(ev);
  } catch (const inadmissible_state &e) {
    std::cerr << "inadmissible state: " << e.what() << '\n';
    return kExitInadmissible;
  } catch (const no_solution &e) {
    std::cerr << "no solution: " << e.what() << '\n';
    return kExitInadmissible;
  } catch (const invalid_input &e) {
    std::cerr << "error: " << e.what() << '\n';
    return kExitUsage;
  } catch (const std::exception &e) {
    std::cerr << "error: " << e.what() << '\n';
    return kExitUsage;
  }
  return kExitUsage;
}
