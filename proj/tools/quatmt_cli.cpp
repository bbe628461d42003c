// Experiment driver: exposes the library as reproducible commands with a JSON
// config per run and CSV/JSON outputs. Relative paths inside a config are
// resolved against the config file's directory so a run can be archived and
// replayed from anywhere.

#include <cmath>
#include <complex>
#include <cstdint>
#include <cstdlib>
#include <filesystem>
#include <fstream>
#include <iostream>
#include <optional>
#include <string>
#include <vector>

#include <CLI11.hpp>
#include <json.hpp>

#include "quatmt/hardy.hpp"
#include "quatmt/io.hpp"
#include "quatmt/mt_system.hpp"
#include "quatmt/projection.hpp"
#include "quatmt/selftest.hpp"
#include "quatmt/series.hpp"

namespace fs = std::filesystem;
using nlohmann::json;
using namespace quatmt;

namespace {

constexpr int kExitFailure = 1;   // a checked tolerance was exceeded
constexpr int kExitBadConfig = 2; // unusable config or input data

struct Overrides {
  std::optional<std::string> out;
  std::optional<int> nodes;
  std::optional<int> degree;
  std::optional<double> tol;
};

json load_config(const fs::path& path) {
  std::ifstream in(path);
  if (!in) throw std::runtime_error("cannot open config " + path.string());
  json j;
  in >> j;
  return j;
}

fs::path resolve(const fs::path& base, const std::string& p) {
  fs::path candidate(p);
  return candidate.is_absolute() ? candidate : base / candidate;
}

PoleSequence load_poles(const json& cfg, const fs::path& base) {
  if (cfg.contains("poles_file")) {
    return load_pole_sequence_json(resolve(base, cfg["poles_file"].get<std::string>()));
  }
  if (cfg.contains("poles")) {
    std::vector<Quaternion> poles;
    for (const json& entry : cfg["poles"]) {
      poles.push_back({entry[0].get<double>(), entry[1].get<double>(),
                       entry[2].get<double>(), entry[3].get<double>()});
    }
    std::optional<UnitImaginary> slice;
    if (cfg.contains("slice") && !cfg["slice"].is_null()) {
      const json& s = cfg["slice"];
      slice = UnitImaginary(s[0].get<double>(), s[1].get<double>(), s[2].get<double>());
    }
    return PoleSequence(std::move(poles), slice);
  }
  throw std::runtime_error("config needs \"poles_file\" or inline \"poles\"");
}

template <typename T>
T config_value(const json& cfg, const std::string& key, T fallback) {
  return cfg.contains(key) ? cfg[key].get<T>() : fallback;
}

// QUATMT_MAX_DEGREE is a hard ceiling on every truncation degree a run may
// request, on top of initializing the library default.
int apply_degree_cap(int requested) {
  if (const char* env = std::getenv("QUATMT_MAX_DEGREE")) {
    const int cap = std::atoi(env);
    if (cap >= 1 && requested > cap) {
      std::cout << "degree " << requested << " capped at " << cap
                << " by QUATMT_MAX_DEGREE\n";
      return cap;
    }
  }
  return requested;
}

int cmd_gram(const fs::path& config_path, const Overrides& ov) {
  const json cfg = load_config(config_path);
  const fs::path base = config_path.parent_path();

  const PoleSequence poles = load_poles(cfg, base);
  if (poles.size() == 0) throw std::runtime_error("empty pole list");
  const int count = config_value(cfg, "count", poles.size());
  if (count < 1 || count > poles.size()) {
    throw std::runtime_error("count must be between 1 and the number of poles");
  }
  const int degree = apply_degree_cap(ov.degree.value_or(config_value(cfg, "degree", 256)));
  const int nodes = ov.nodes.value_or(config_value(cfg, "nodes", 1024));
  if (nodes < 4) throw std::runtime_error("nodes must be >= 4");
  const double tol = ov.tol.value_or(config_value(cfg, "tol", 1e-8));
  const fs::path out = resolve(base, ov.out.value_or(config_value<std::string>(cfg, "out", "gram")));

  const MTSystem sys = build_mt(poles, count, degree);

  const QuaternionMatrix coeff = gram_matrix(sys, GramMethod::coeff);
  const double dev_coeff = max_deviation_from_identity(coeff);
  save_gram_csv(out.string() + "_coeff.csv", coeff);

  std::string summary = "method,max_deviation\n";
  summary += "coeff," + format_double(dev_coeff) + "\n";
  std::cout << "coeff-method deviation from identity: " << format_double(dev_coeff) << "\n";

  double dev = dev_coeff;
  if (poles.common_slice()) {
    const QuaternionMatrix quad = gram_matrix(sys, GramMethod::quadrature, nodes);
    const double dev_quad = max_deviation_from_identity(quad);
    save_gram_csv(out.string() + "_quad.csv", quad);
    summary += "quadrature," + format_double(dev_quad) + "\n";
    std::cout << "quadrature-method deviation from identity: " << format_double(dev_quad) << "\n";
    dev = std::max(dev, dev_quad);
  } else {
    std::cout << "no common slice declared: quadrature method skipped, "
                 "deviation reported without a pass/fail verdict\n";
  }
  std::ofstream(out.string() + "_summary.csv", std::ios::binary) << summary;

  if (!poles.common_slice()) return 0;
  if (dev < tol) return 0;

  double max_pole = 0.0;
  for (const Quaternion& a : poles.params()) max_pole = std::max(max_pole, a.norm());
  std::cerr << "FAIL: deviation " << format_double(dev) << " >= tol " << format_double(tol)
            << " (max |a| = " << format_double(max_pole) << ", degree = " << degree
            << "; coefficients decay like |a|^n, so a larger --degree may be needed)\n";
  return kExitFailure;
}

int cmd_approximate(const fs::path& config_path, const Overrides& ov) {
  const json cfg = load_config(config_path);
  const fs::path base = config_path.parent_path();

  const PoleSequence poles = load_poles(cfg, base);
  if (poles.size() == 0) throw std::runtime_error("empty pole list");
  const int count = config_value(cfg, "count", poles.size());
  if (count < 1 || count > poles.size()) {
    throw std::runtime_error("count must be between 1 and the number of poles");
  }
  const int degree = apply_degree_cap(ov.degree.value_or(config_value(cfg, "degree", 256)));
  const fs::path out = resolve(base, ov.out.value_or(config_value<std::string>(cfg, "out", "approx")));

  const MTSystem sys = build_mt(poles, count, degree);

  std::vector<Quaternion> coefficients;
  std::vector<std::pair<int, double>> table;
  std::vector<double> interpolation;

  if (cfg.contains("target_series")) {
    const RegularSeries f =
        load_series_json(resolve(base, cfg["target_series"].get<std::string>()));
    const ProjectionResult pr = project(f, sys);
    coefficients = pr.coefficients;
    table = convergence_table(f, poles, count, degree);
    interpolation = interpolation_residuals(f, sys);
  } else if (cfg.contains("target_boundary")) {
    const SliceBoundaryGrid grid =
        load_boundary_grid_csv(resolve(base, cfg["target_boundary"].get<std::string>()));
    coefficients = mt_coefficients(grid, sys);

    // Residuals by the Pythagoras complement; the target is only known by
    // its boundary samples.
    const double total = inner_product_quadrature(grid, grid).re();
    double captured = 0.0;
    for (int n = 1; n <= count; ++n) {
      captured += coefficients[static_cast<std::size_t>(n - 1)].norm_sq();
      table.emplace_back(n, std::sqrt(std::max(0.0, total - captured)));
    }

    RegularSeries approx = RegularSeries::zero(degree);
    for (int k = 0; k < count; ++k) {
      approx = approx + right_scaled(sys.basis[static_cast<std::size_t>(k)],
                                     coefficients[static_cast<std::size_t>(k)]);
    }
    for (int k = 0; k < count; ++k) {
      const Quaternion& a = sys.poles.params()[static_cast<std::size_t>(k)];
      interpolation.push_back(distance(eval(approx, a), cauchy_slice_eval(grid, a)));
    }
  } else {
    throw std::runtime_error("config needs \"target_series\" or \"target_boundary\"");
  }

  save_quaternion_list_json(out.string() + "_coefficients.json", coefficients);
  save_convergence_csv(out.string() + "_convergence.csv", table);
  {
    std::string text = "k,residual\n";
    for (std::size_t l = 0; l < interpolation.size(); ++l) {
      text += std::to_string(l + 1) + "," + format_double(interpolation[l]) + "\n";
    }
    std::ofstream(out.string() + "_interpolation.csv", std::ios::binary) << text;
  }
  std::cout << "final residual: " << format_double(table.back().second) << "\n";
  return 0;
}

int cmd_reconstruct(const fs::path& config_path, const Overrides& ov) {
  const json cfg = load_config(config_path);
  const fs::path base = config_path.parent_path();

  if (!cfg.contains("boundary_file")) {
    throw std::runtime_error("config needs \"boundary_file\"");
  }
  const SliceBoundaryGrid grid =
      load_boundary_grid_csv(resolve(base, cfg["boundary_file"].get<std::string>()));
  const UnitImaginary I = grid.direction();

  std::vector<Quaternion> queries;
  if (cfg.contains("queries_file")) {
    queries = load_quaternion_list_json(resolve(base, cfg["queries_file"].get<std::string>()));
  } else if (cfg.contains("queries")) {
    for (const json& entry : cfg["queries"]) {
      queries.push_back({entry[0].get<double>(), entry[1].get<double>(),
                         entry[2].get<double>(), entry[3].get<double>()});
    }
  } else {
    throw std::runtime_error("config needs \"queries\" or \"queries_file\"");
  }
  if (queries.empty()) throw std::runtime_error("no query points given");

  std::vector<Quaternion> reference;
  bool have_reference = false;
  if (cfg.contains("reference_file")) {
    reference = load_quaternion_list_json(resolve(base, cfg["reference_file"].get<std::string>()));
    if (reference.size() != queries.size()) {
      throw std::runtime_error("reference values must align with the queries");
    }
    have_reference = true;
  } else if (cfg.contains("reference_series")) {
    const RegularSeries f =
        load_series_json(resolve(base, cfg["reference_series"].get<std::string>()));
    for (const Quaternion& q : queries) reference.push_back(eval(f, q));
    have_reference = true;
  }

  const fs::path out = resolve(base, ov.out.value_or(config_value<std::string>(cfg, "out", "reconstruct.csv")));

  const auto slice_values_poisson = [&grid, &I](const Quaternion& zq) {
    const std::complex<double> zc = slice_components(zq, I);
    return poisson_eval(grid, std::abs(zc), std::arg(zc));
  };
  const auto slice_values_cauchy = [&grid](const Quaternion& zq) {
    return cauchy_slice_eval(grid, zq);
  };

  const double nan = std::nan("");
  std::string text =
      "qw,qx,qy,qz,status,"
      "cauchy_w,cauchy_x,cauchy_y,cauchy_z,"
      "poisson_w,poisson_x,poisson_y,poisson_z,"
      "ext_w,ext_x,ext_y,ext_z,"
      "err_cauchy,err_poisson,err_ext\n";
  const auto append_quaternion = [&text](const Quaternion& q) {
    text += "," + format_double(q.w) + "," + format_double(q.x) + "," +
            format_double(q.y) + "," + format_double(q.z);
  };

  for (std::size_t idx = 0; idx < queries.size(); ++idx) {
    const Quaternion& q = queries[idx];
    text += format_double(q.w) + "," + format_double(q.x) + "," +
            format_double(q.y) + "," + format_double(q.z);
    if (q.norm() >= 1.0 - 1e-9) {
      text += ",outside_ball";
      const Quaternion bad(nan, nan, nan, nan);
      append_quaternion(bad);
      append_quaternion(bad);
      append_quaternion(bad);
      text += "," + format_double(nan) + "," + format_double(nan) + "," + format_double(nan);
      text += "\n";
      continue;
    }
    const Quaternion via_cauchy = regular_cauchy_eval(grid, q);
    const Quaternion via_poisson = extend_from_slice(slice_values_poisson, I, q);
    const Quaternion via_ext = extend_from_slice(slice_values_cauchy, I, q);
    text += ",ok";
    append_quaternion(via_cauchy);
    append_quaternion(via_poisson);
    append_quaternion(via_ext);
    if (have_reference) {
      const Quaternion& ref = reference[idx];
      text += "," + format_double(distance(via_cauchy, ref)) + "," +
              format_double(distance(via_poisson, ref)) + "," +
              format_double(distance(via_ext, ref));
    } else {
      text += "," + format_double(nan) + "," + format_double(nan) + "," + format_double(nan);
    }
    text += "\n";
  }
  std::ofstream(out, std::ios::binary) << text;
  std::cout << "wrote " << queries.size() << " reconstruction rows\n";
  return 0;
}

int cmd_selftest(std::uint64_t seed, bool list_only) {
  const auto& checks = selftest::all_checks();
  if (list_only) {
    for (const auto& check : checks) std::cout << check.name << "\n";
    return 0;
  }
  const int failures = selftest::run_checks(checks, seed, std::cout);
  if (failures > 0) {
    std::cout << failures << " invariant(s) failed\n";
    return kExitFailure;
  }
  return 0;
}

}  // namespace

int main(int argc, char** argv) {
  CLI::App app{"slice-regular rational orthonormal systems: experiment driver"};
  app.require_subcommand(1);

  std::string config_path;
  Overrides ov;
  std::uint64_t seed = 0;
  bool list_only = false;

  const auto add_common = [&](CLI::App* cmd, bool needs_config) {
    auto* opt = cmd->add_option("--config", config_path, "JSON config file");
    if (needs_config) opt->required();
    cmd->add_option("--out", [&ov](const CLI::results_t& r) { ov.out = r[0]; return true; },
                    "output path or prefix (overrides config)");
    cmd->add_option("--nodes", [&ov](const CLI::results_t& r) { ov.nodes = std::stoi(r[0]); return true; },
                    "quadrature node count (overrides config)");
    cmd->add_option("--degree", [&ov](const CLI::results_t& r) { ov.degree = std::stoi(r[0]); return true; },
                    "series truncation degree (overrides config)");
    cmd->add_option("--tol", [&ov](const CLI::results_t& r) { ov.tol = std::stod(r[0]); return true; },
                    "pass/fail tolerance (overrides config)");
    cmd->add_option("--seed", seed, "seed for randomized checks");
  };

  CLI::App* gram = app.add_subcommand("gram", "Gram matrices of a system and their deviation from identity");
  add_common(gram, true);
  CLI::App* approximate = app.add_subcommand("approximate", "project a target onto a system; emit coefficients and residuals");
  add_common(approximate, true);
  CLI::App* reconstruct = app.add_subcommand("reconstruct", "reconstruct interior values from single-slice boundary samples");
  add_common(reconstruct, true);
  CLI::App* selftest_cmd = app.add_subcommand("selftest", "run the library invariant suite");
  selftest_cmd->add_option("--seed", seed, "seed for randomized checks");
  selftest_cmd->add_flag("--list", list_only, "list invariant names without running");

  CLI11_PARSE(app, argc, argv);

  try {
    if (gram->parsed()) return cmd_gram(config_path, ov);
    if (approximate->parsed()) return cmd_approximate(config_path, ov);
    if (reconstruct->parsed()) return cmd_reconstruct(config_path, ov);
    if (selftest_cmd->parsed()) return cmd_selftest(seed, list_only);
  } catch (const std::exception& e) {
    std::cerr << "error: " << e.what() << "\n";
    return kExitBadConfig;
  }
  return kExitBadConfig;
}
