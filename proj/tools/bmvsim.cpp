// Copyright 2026 The bmvsim Authors
//
// Licensed under the Apache License, Version 2.0 (the "License");
// you may not use this file except in compliance with the License.
// You may obtain a copy of the License at
//
//     http://www.apache.org/licenses/LICENSE-2.0
//
// Unless required by applicable law or agreed to in writing, software
// distributed under the License is distributed on an "AS IS" BASIS,
// WITHOUT WARRANTIES OR CONDITIONS OF ANY KIND, either express or implied.
// See the License for the specific language governing permissions and
// limitations under the License.

// Command-line front end. All physical inputs are SI; everything behind
// the `design` subcommand is dimensionless. Data go to the output stream
// only (CSV by default, JSON lines with --format jsonl), diagnostics to
// stderr. Exit codes: 0 ok, 2 input error, 3 domain error.

#include <cstdio>
#include <cstdlib>
#include <fstream>
#include <iostream>
#include <memory>
#include <optional>
#include <string>
#include <variant>
#include <vector>

#include "CLI11.hpp"
#include "bmv/chsh.hpp"
#include "bmv/dynamics.hpp"
#include "bmv/entanglement.hpp"
#include "bmv/fluctuations.hpp"
#include "bmv/model.hpp"
#include "bmv/sweep.hpp"

namespace {

constexpr std::uint64_t kDefaultSeed = 123456789;  // documented default for monte-carlo

// A value in an output row: number, integer, flag, or not-applicable.
using Field = std::variant<double, std::int64_t, bool, std::monostate>;

std::string format_double(double v) {
  char buf[64];
  std::snprintf(buf, sizeof buf, "%.17g", v);
  return buf;
}

class TableWriter {
 public:
  TableWriter(std::ostream& out, bool jsonl, std::vector<std::string> columns)
      : out_(out), jsonl_(jsonl), columns_(std::move(columns)) {
    if (!jsonl_) {
      for (std::size_t i = 0; i < columns_.size(); ++i)
        out_ << (i ? "," : "") << columns_[i];
      out_ << "\n";
    }
  }

  void row(const std::vector<Field>& fields) {
    if (jsonl_) {
      out_ << "{";
      for (std::size_t i = 0; i < fields.size(); ++i)
        out_ << (i ? "," : "") << "\"" << columns_[i] << "\":" << json_value(fields[i]);
      out_ << "}\n";
    } else {
      for (std::size_t i = 0; i < fields.size(); ++i)
        out_ << (i ? "," : "") << csv_value(fields[i]);
      out_ << "\n";
    }
  }

 private:
  static std::string csv_value(const Field& f) {
    if (std::holds_alternative<double>(f)) return format_double(std::get<double>(f));
    if (std::holds_alternative<std::int64_t>(f)) return std::to_string(std::get<std::int64_t>(f));
    if (std::holds_alternative<bool>(f)) return std::get<bool>(f) ? "1" : "0";
    return "";
  }

  static std::string json_value(const Field& f) {
    if (std::holds_alternative<double>(f)) return format_double(std::get<double>(f));
    if (std::holds_alternative<std::int64_t>(f)) return std::to_string(std::get<std::int64_t>(f));
    if (std::holds_alternative<bool>(f)) return std::get<bool>(f) ? "true" : "false";
    return "null";
  }

  std::ostream& out_;
  bool jsonl_;
  std::vector<std::string> columns_;
};

struct OutputOptions {
  std::string format;  // "csv" or "jsonl"
  std::string path;    // empty = stdout

  bool jsonl() const { return format == "jsonl"; }
};

// Writes through either stdout or --output PATH.
class OutputStream {
 public:
  explicit OutputStream(const std::string& path) {
    if (!path.empty()) {
      file_.open(path, std::ios::binary);
      if (!file_) throw std::invalid_argument("cannot open output file: " + path);
    }
  }
  std::ostream& get() { return file_.is_open() ? file_ : std::cout; }

 private:
  std::ofstream file_;
};

struct SweepOptions {
  std::string quantity;
  std::string var;  // "t" or "omega"; empty = quantity default
  std::vector<double> range;
  std::optional<double> omega;
  std::optional<double> t;
  double s_t = 0.0;
  double s_omega = 0.0;
};

std::vector<double> sweep_grid(const SweepOptions& o) {
  const double start = o.range[0];
  const double stop = o.range[1];
  const double steps_real = o.range[2];
  const int steps = static_cast<int>(steps_real);
  if (steps_real != steps || steps < 2)
    throw std::invalid_argument("sweep: STEPS must be an integer >= 2");
  return bmv::linspace(start, stop, steps);
}

double require(const std::optional<double>& v, const char* what) {
  if (!v) throw std::invalid_argument(std::string("sweep: missing required flag ") + what);
  return *v;
}

void run_sweep(const SweepOptions& o, const OutputOptions& out_opts) {
  std::string var = o.var;
  if (var.empty())
    var = (o.quantity == "optimal_time" || o.quantity == "jitter_bound") ? "omega" : "t";

  const std::vector<double> xs = sweep_grid(o);
  OutputStream os(out_opts.path);

  if (o.quantity == "lambda") {
    std::vector<double> values;
    if (var == "t") {
      values = bmv::lambda_curve(require(o.omega, "--omega"), xs);
    } else {
      const double t = require(o.t, "--t");
      values = bmv::map_curve(xs, [t](double w) { return bmv::ppt_eigenvalue({w, t}); });
    }
    TableWriter w(os.get(), out_opts.jsonl(), {var, "lambda", "entangled"});
    for (std::size_t i = 0; i < xs.size(); ++i)
      w.row({xs[i], values[i], values[i] < -bmv::kEntanglementTol});
  } else if (o.quantity == "lambda_bar") {
    const bmv::FluctuationSpec spec{o.s_t, o.s_omega};
    std::vector<double> values;
    double fixed = 0.0;
    if (var == "t") {
      fixed = require(o.omega, "--omega");
      values = bmv::averaged_lambda_curve(fixed, spec, xs);
    } else {
      fixed = require(o.t, "--t");
      values = bmv::map_curve(
          xs, [fixed, &spec](double w) { return bmv::averaged_ppt_eigenvalue({w, fixed}, spec); });
    }
    TableWriter w(os.get(), out_opts.jsonl(),
                  {var, "lambda_bar", "entangled", "small_fluctuation_ok"});
    for (std::size_t i = 0; i < xs.size(); ++i) {
      const bmv::SimPoint point = (var == "t") ? bmv::SimPoint{fixed, xs[i]}
                                               : bmv::SimPoint{xs[i], fixed};
      w.row({xs[i], values[i], values[i] < -bmv::kEntanglementTol,
             spec.small_relative_to(point)});
    }
  } else if (o.quantity == "optimal_time") {
    if (var != "omega") throw std::invalid_argument("sweep: optimal_time sweeps over omega only");
    const std::vector<double> values = bmv::optimal_time_curve(xs);
    TableWriter w(os.get(), out_opts.jsonl(), {"omega", "t0"});
    for (std::size_t i = 0; i < xs.size(); ++i) w.row({xs[i], values[i]});
  } else if (o.quantity == "jitter_bound") {
    if (var != "omega") throw std::invalid_argument("sweep: jitter_bound sweeps over omega only");
    const std::vector<double> values = bmv::jitter_bound_curve(xs);
    TableWriter w(os.get(), out_opts.jsonl(), {"omega", "s_t_max_squared"});
    for (std::size_t i = 0; i < xs.size(); ++i) w.row({xs[i], values[i]});
  } else {  // horodecki_M
    std::vector<double> values;
    if (var == "t") {
      values = bmv::horodecki_curve(require(o.omega, "--omega"), xs);
    } else {
      const double t = require(o.t, "--t");
      values = bmv::map_curve(xs, [t](double w) { return bmv::horodecki_parameter_at({w, t}); });
    }
    TableWriter w(os.get(), out_opts.jsonl(), {var, "horodecki_M", "violates_chsh"});
    for (std::size_t i = 0; i < xs.size(); ++i)
      w.row({xs[i], values[i], values[i] > 1.0});
  }
}

struct DesignOptions {
  bmv::PhysicalParams params;
  std::optional<double> target_omega;
};

void run_design(const DesignOptions& o, const OutputOptions& out_opts) {
  const double delta = bmv::coupling_energy(o.params);
  const double omega = bmv::dimensionless_coupling(o.params);
  const double omega_star = bmv::chsh_threshold().omega_star;

  Field t0 = std::monostate{};
  Field t0_seconds = std::monostate{};
  Field jitter = std::monostate{};
  if (omega > 1.0) {
    const double t0_val = bmv::optimal_interaction_time(omega);
    t0 = t0_val;
    t0_seconds = t0_val * o.params.T;
    jitter = bmv::max_time_jitter_variance(omega);
  }
  Field required_T = std::monostate{};
  if (o.target_omega) {
    if (*o.target_omega <= 0.0)
      throw std::invalid_argument("design: --target-omega must be positive");
    required_T = *o.target_omega * o.params.hbar / delta;
  }

  OutputStream os(out_opts.path);
  TableWriter w(os.get(), out_opts.jsonl(),
                {"delta_J", "omega", "entangled", "chsh_violating", "t0", "t0_seconds",
                 "s_t_max_squared", "required_T_seconds"});
  w.row({delta, omega, omega > 1.0, omega > omega_star, t0, t0_seconds, jitter, required_T});
}

void run_evolve(double omega, double t, const OutputOptions& out_opts) {
  const bmv::Mat4 rho = bmv::evolve_closed({omega, t}).matrix();
  OutputStream os(out_opts.path);
  TableWriter w(os.get(), out_opts.jsonl(), {"i", "j", "re", "im"});
  for (int i = 0; i < 4; ++i)
    for (int j = 0; j < 4; ++j)
      w.row({static_cast<std::int64_t>(i), static_cast<std::int64_t>(j), rho(i, j).real(),
             rho(i, j).imag()});
}

void run_monte_carlo(double omega, double t, double s_t, double s_omega, std::uint64_t samples,
                     std::uint64_t seed, const OutputOptions& out_opts) {
  const bmv::MonteCarloResult mc =
      bmv::monte_carlo_average({omega, t}, {s_t, s_omega}, samples, seed);
  if (mc.clamped_samples > 0)
    std::cerr << "note: " << mc.clamped_samples
              << " draws had negative sampled time and were clamped to 0\n";
  OutputStream os(out_opts.path);
  TableWriter w(os.get(), out_opts.jsonl(),
                {"i", "j", "mean_re", "mean_im", "se_re", "se_im", "clamped_samples"});
  for (int i = 0; i < 4; ++i)
    for (int j = 0; j < 4; ++j)
      w.row({static_cast<std::int64_t>(i), static_cast<std::int64_t>(j), mc.mean(i, j).real(),
             mc.mean(i, j).imag(), mc.std_error(i, j).real(), mc.std_error(i, j).imag(),
             static_cast<std::int64_t>(mc.clamped_samples)});
}

void run_optimal_time(double omega, const OutputOptions& out_opts) {
  const double t0 = bmv::optimal_interaction_time(omega);
  const double residual =
      std::exp(-t0) + std::sin(omega * t0) - omega * std::cos(omega * t0);
  OutputStream os(out_opts.path);
  TableWriter w(os.get(), out_opts.jsonl(), {"omega", "t0", "residual"});
  w.row({omega, t0, residual});
}

void run_jitter_bound(double omega, const OutputOptions& out_opts) {
  const double bound = bmv::max_time_jitter_variance(omega);
  OutputStream os(out_opts.path);
  TableWriter w(os.get(), out_opts.jsonl(), {"omega", "s_t_max_squared"});
  w.row({omega, bound});
}

void run_chsh_threshold(const OutputOptions& out_opts) {
  const bmv::ChshThreshold th = bmv::chsh_threshold();
  OutputStream os(out_opts.path);
  TableWriter w(os.get(), out_opts.jsonl(),
                {"omega_star", "bracket_lo", "bracket_hi", "residual"});
  w.row({th.omega_star, th.bracket_lo, th.bracket_hi, th.residual});
}

}  // namespace

int main(int argc, char** argv) {
  CLI::App app{"entanglement dynamics of two gravitationally coupled particles under dephasing"};
  app.require_subcommand(1);

  OutputOptions out_opts;
  out_opts.format = "csv";
  if (const char* env = std::getenv("BMVSIM_FORMAT")) {
    const std::string value = env;
    if (value != "csv" && value != "jsonl") {
      std::cerr << "error: input: BMVSIM_FORMAT must be csv or jsonl, got '" << value << "'\n";
      return 2;
    }
    out_opts.format = value;
  }
  app.add_option("--format", out_opts.format, "output format")
      ->check(CLI::IsMember({"csv", "jsonl"}))
      ->capture_default_str();
  app.add_option("--output", out_opts.path, "write data to PATH instead of stdout");

  // design
  DesignOptions design;
  auto* cmd_design = app.add_subcommand("design", "map SI experiment parameters to the model");
  cmd_design->fallthrough();
  cmd_design->add_option("--m1", design.params.m1, "mass of particle 1 (kg)")->required();
  cmd_design->add_option("--m2", design.params.m2, "mass of particle 2 (kg)")->required();
  cmd_design->add_option("--d", design.params.d, "minimal inter-particle distance (m)")->required();
  cmd_design->add_option("--L", design.params.L, "superposition separation (m)")->required();
  cmd_design->add_option("--T", design.params.T, "decoherence time (s)")->required();
  double target_omega = 0.0;
  auto* target_opt =
      cmd_design->add_option("--target-omega", target_omega, "also report the T reaching this omega");
  cmd_design->callback([&] {
    if (*target_opt) design.target_omega = target_omega;
    run_design(design, out_opts);
  });

  // evolve
  double ev_omega = 0.0, ev_t = 0.0;
  auto* cmd_evolve = app.add_subcommand("evolve", "print the evolved state at one point");
  cmd_evolve->fallthrough();
  cmd_evolve->add_option("--omega", ev_omega, "dimensionless coupling")->required();
  cmd_evolve->add_option("--t", ev_t, "dimensionless time")->required();
  cmd_evolve->callback([&] { run_evolve(ev_omega, ev_t, out_opts); });

  // sweep
  SweepOptions sweep;
  double sweep_omega = 0.0, sweep_t = 0.0;
  auto* cmd_sweep = app.add_subcommand("sweep", "tabulate a quantity over a parameter grid");
  cmd_sweep->fallthrough();
  cmd_sweep->add_option("--quantity", sweep.quantity, "what to tabulate")
      ->check(CLI::IsMember({"lambda", "lambda_bar", "optimal_time", "jitter_bound", "horodecki_M"}))
      ->required();
  cmd_sweep->add_option("--var", sweep.var, "independent variable (t or omega)")
      ->check(CLI::IsMember({"t", "omega"}));
  cmd_sweep->add_option("--range", sweep.range, "grid as START STOP STEPS")
      ->expected(3)
      ->required();
  auto* sweep_omega_opt = cmd_sweep->add_option("--omega", sweep_omega, "fixed coupling");
  auto* sweep_t_opt = cmd_sweep->add_option("--t", sweep_t, "fixed time");
  cmd_sweep->add_option("--s-t", sweep.s_t, "time jitter standard deviation");
  cmd_sweep->add_option("--s-omega", sweep.s_omega, "coupling jitter standard deviation");
  cmd_sweep->callback([&] {
    if (*sweep_omega_opt) sweep.omega = sweep_omega;
    if (*sweep_t_opt) sweep.t = sweep_t;
    run_sweep(sweep, out_opts);
  });

  // optimal-time
  double ot_omega = 0.0;
  auto* cmd_ot = app.add_subcommand("optimal-time", "first most-entangled time for a coupling");
  cmd_ot->fallthrough();
  cmd_ot->add_option("--omega", ot_omega, "dimensionless coupling")->required();
  cmd_ot->callback([&] { run_optimal_time(ot_omega, out_opts); });

  // jitter-bound
  double jb_omega = 0.0;
  auto* cmd_jb = app.add_subcommand("jitter-bound", "largest tolerable time-jitter variance");
  cmd_jb->fallthrough();
  cmd_jb->add_option("--omega", jb_omega, "dimensionless coupling")->required();
  cmd_jb->callback([&] { run_jitter_bound(jb_omega, out_opts); });

  // chsh-threshold
  auto* cmd_chsh = app.add_subcommand("chsh-threshold", "coupling threshold for CHSH violation");
  cmd_chsh->fallthrough();
  cmd_chsh->callback([&] { run_chsh_threshold(out_opts); });

  // monte-carlo
  double mc_omega = 0.0, mc_t = 0.0, mc_s_t = 0.0, mc_s_omega = 0.0;
  std::uint64_t mc_samples = 1000000;
  std::uint64_t mc_seed = kDefaultSeed;
  auto* cmd_mc = app.add_subcommand("monte-carlo", "sample average over parameter jitter");
  cmd_mc->fallthrough();
  cmd_mc->add_option("--omega", mc_omega, "dimensionless coupling")->required();
  cmd_mc->add_option("--t", mc_t, "dimensionless time")->required();
  cmd_mc->add_option("--s-t", mc_s_t, "time jitter standard deviation");
  cmd_mc->add_option("--s-omega", mc_s_omega, "coupling jitter standard deviation");
  cmd_mc->add_option("--samples", mc_samples, "number of draws")->capture_default_str();
  cmd_mc->add_option("--seed", mc_seed, "generator seed")->capture_default_str();
  cmd_mc->callback(
      [&] { run_monte_carlo(mc_omega, mc_t, mc_s_t, mc_s_omega, mc_samples, mc_seed, out_opts); });

  try {
    app.parse(argc, argv);
  } catch (const CLI::ParseError& e) {
    if (e.get_exit_code() == 0) return app.exit(e);  // --help and friends
    std::cerr << "error: input: " << e.what() << "\n";
    return 2;
  } catch (const std::domain_error& e) {
    std::cerr << "error: domain: " << e.what() << "\n";
    return 3;
  } catch (const std::invalid_argument& e) {
    std::cerr << "error: input: " << e.what() << "\n";
    return 2;
  } catch (const std::exception& e) {
    std::cerr << "error: internal: " << e.what() << "\n";
    return 1;
  }
  return 0;
}
