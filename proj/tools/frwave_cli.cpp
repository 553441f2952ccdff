#include <algorithm>
#include <charconv>
#include <cstdint>
#include <fstream>
#include <iostream>
#include <memory>
#include <numbers>
#include <optional>
#include <sstream>
#include <string>
#include <vector>

#include <CLI11.hpp>
#include <json.hpp>

#include "frwave/background.hpp"
#include "frwave/lk_system.hpp"
#include "frwave/report.hpp"
#include "frwave/series_kernels.hpp"
#include "frwave/transform.hpp"
#include "frwave/verifier.hpp"
#include "frwave/wavefield.hpp"

namespace {

using frwave::Curvature;

// JSON config files: top-level keys feed the main app, one nested object
// per subcommand feeds that subcommand's options. Command-line flags take
// precedence over file values.
class JsonConfig : public CLI::Config {
 public:
  std::string to_config(const CLI::App*, bool, bool, std::string) const override {
    return "{}\n";
  }

  std::vector<CLI::ConfigItem> from_config(std::istream& input) const override {
    nlohmann::json j;
    try {
      j = nlohmann::json::parse(input);
    } catch (const nlohmann::json::parse_error& e) {
      throw CLI::FileError(std::string("config is not valid JSON: ") + e.what());
    }
    std::vector<CLI::ConfigItem> items;
    flatten(j, {}, items);
    return items;
  }

 private:
  static void flatten(const nlohmann::json& j, std::vector<std::string> parents,
                      std::vector<CLI::ConfigItem>& items) {
    for (const auto& [key, value] : j.items()) {
      if (value.is_object()) {
        auto nested = parents;
        nested.push_back(key);
        flatten(value, std::move(nested), items);
        continue;
      }
      CLI::ConfigItem item;
      item.parents = parents;
      item.name = key;
      if (value.is_array()) {
        for (const auto& element : value) {
          item.inputs.push_back(scalar_text(element));
        }
      } else {
        item.inputs.push_back(scalar_text(value));
      }
      items.push_back(std::move(item));
    }
  }

  static std::string scalar_text(const nlohmann::json& v) {
    return v.is_string() ? v.get<std::string>() : v.dump();
  }
};

void write_output(const std::string& path, const std::string& content) {
  if (path.empty()) {
    std::cout << content;
    return;
  }
  std::ofstream f(path, std::ios::binary);
  if (!f) throw std::runtime_error("cannot open output file: " + path);
  f << content;
  if (!f) throw std::runtime_error("failed writing output file: " + path);
}

// Column-oriented view of a CSV file with a header row; comment lines
// (leading '#') are skipped.
struct CsvTable {
  std::vector<std::string> names;
  std::vector<std::vector<double>> columns;

  const std::vector<double>& column(const std::string& name) const {
    for (std::size_t i = 0; i < names.size(); ++i) {
      if (names[i] == name) return columns[i];
    }
    throw std::runtime_error("input CSV has no column named '" + name + "'");
  }
};

double parse_field(const std::string& text) {
  double v = 0.0;
  const char* first = text.data();
  const char* last = first + text.size();
  const auto res = std::from_chars(first, last, v);
  if (res.ec != std::errc{} || res.ptr != last) {
    throw std::runtime_error("malformed CSV number: '" + text + "'");
  }
  return v;
}

std::vector<std::string> split_csv_line(const std::string& line) {
  std::vector<std::string> fields;
  std::string field;
  std::istringstream ss(line);
  while (std::getline(ss, field, ',')) fields.push_back(field);
  if (!line.empty() && line.back() == ',') fields.emplace_back();
  return fields;
}

CsvTable read_csv(const std::string& path) {
  std::ifstream f(path);
  if (!f) throw std::runtime_error("cannot open input file: " + path);
  CsvTable table;
  std::string line;
  bool have_header = false;
  while (std::getline(f, line)) {
    if (!line.empty() && line.back() == '\r') line.pop_back();
    if (line.empty() || line.front() == '#') continue;
    const std::vector<std::string> fields = split_csv_line(line);
    if (!have_header) {
      table.names = fields;
      table.columns.assign(fields.size(), {});
      have_header = true;
      continue;
    }
    if (fields.size() != table.names.size()) {
      throw std::runtime_error("CSV row width differs from header");
    }
    for (std::size_t i = 0; i < fields.size(); ++i) {
      table.columns[i].push_back(parse_field(fields[i]));
    }
  }
  if (!have_header) throw std::runtime_error("input CSV is empty: " + path);
  return table;
}

std::vector<double> linspace(double lo, double hi, std::size_t n) {
  if (n < 2) throw std::invalid_argument("need at least 2 samples");
  if (!(hi > lo)) throw std::invalid_argument("range max must exceed min");
  std::vector<double> out(n);
  const double h = (hi - lo) / static_cast<double>(n - 1);
  for (std::size_t i = 0; i < n; ++i) {
    out[i] = lo + static_cast<double>(i) * h;
  }
  out.back() = hi;
  return out;
}

struct CommonArgs {
  int curvature = 0;
  double k = 1.0;
  double eta_min = 0.0;  // 0 means "use the curvature default"
  double eta_max = 0.0;
  std::size_t samples = 0;
  std::string output;
};

frwave::EtaInterval resolve_eta(const CommonArgs& a, Curvature curv) {
  frwave::EtaInterval domain = frwave::default_eta_domain(curv);
  if (a.eta_min != 0.0) domain.min = a.eta_min;
  if (a.eta_max != 0.0) domain.max = a.eta_max;
  frwave::make_background_model(curv, domain);  // validates
  return domain;
}

struct VerifyArgs {
  CommonArgs common;
  std::string suite;
  std::string check = "theorem";
  std::uint64_t seed = 7;
  double rtol = 1e-10;
  double atol = 1e-12;
  double tol = 1e-6;
  double freq_tol = 1e-4;
  bool serial = false;
  bool k_given = false;
};

int cmd_verify(const VerifyArgs& args) {
  frwave::TheoremCheckOptions opts;
  std::optional<frwave::ModeParams> params;
  frwave::EtaInterval domain{};
  Curvature curv = Curvature::flat;
  try {
    if (!args.suite.empty() && args.suite != "default") {
      throw std::invalid_argument("unknown suite '" + args.suite +
                                  "' (supported: default)");
    }
    if (args.check != "theorem" && args.check != "roundtrip") {
      throw std::invalid_argument("unknown check '" + args.check +
                                  "' (supported: theorem, roundtrip)");
    }
    if (args.common.samples != 0) opts.n_samples = args.common.samples;
    opts.rtol = args.rtol;
    opts.atol = args.atol;
    opts.tol = args.tol;
    opts.freq_tol = args.freq_tol;
    if (args.suite.empty()) {
      if (!args.k_given) {
        throw std::invalid_argument("single-case verify requires --k");
      }
      curv = frwave::curvature_from_int(args.common.curvature);
      params = frwave::make_mode_params(curv, args.common.k);
      domain = resolve_eta(args.common, curv);
    }
  } catch (const std::exception& e) {
    std::cerr << "configuration error: " << e.what() << "\n";
    return 2;
  }

  try {
    bool pass = false;
    std::string text;
    if (!args.suite.empty()) {
      frwave::SuiteConfig config;
      config.options = opts;
      config.seed = args.seed;
      config.parallel = !args.serial;
      const frwave::SuiteReport rep = frwave::run_suite(config);
      pass = rep.pass;
      text = frwave::suite_report_json(rep);
    } else if (args.check == "roundtrip") {
      const frwave::RoundtripReport rep =
          frwave::run_roundtrip_check(args.seed, *params, domain, opts);
      pass = rep.pass;
      text = frwave::roundtrip_report_json(rep);
    } else {
      const frwave::TheoremReport rep =
          frwave::run_theorem_check_seeded(args.seed, *params, domain, opts);
      pass = rep.pass;
      text = frwave::theorem_report_json(rep);
    }
    write_output(args.common.output, text);
    return pass ? 0 : 1;
  } catch (const std::exception& e) {
    std::cerr << "verification failed: " << e.what() << "\n";
    return 1;
  }
}

struct EvolveArgs {
  CommonArgs common;
  frwave::PerturbationState initial{};
  std::uint64_t seed = 0;
  bool seed_given = false;
  double rtol = 1e-10;
  double atol = 1e-12;
  bool serial = false;
};

int cmd_evolve(const EvolveArgs& args) {
  frwave::ModeParams params{};
  frwave::EtaInterval domain{};
  frwave::IntegrateOptions iopts;
  try {
    const Curvature curv = frwave::curvature_from_int(args.common.curvature);
    params = frwave::make_mode_params(curv, args.common.k);
    domain = resolve_eta(args.common, curv);
    if (args.common.samples != 0) iopts.n_out = args.common.samples;
    iopts.rtol = args.rtol;
    iopts.atol = args.atol;
  } catch (const std::exception& e) {
    std::cerr << "configuration error: " << e.what() << "\n";
    return 2;
  }

  try {
    const frwave::PerturbationState initial =
        args.seed_given ? frwave::random_initial_state(args.seed) : args.initial;
    const frwave::Trajectory traj =
        frwave::integrate(initial, params, domain, iopts);
    const frwave::kernels::ContrastPsiSeries series =
        frwave::kernels::contrast_psi_series(
            traj, args.serial ? frwave::kernels::Exec::serial
                              : frwave::kernels::Exec::parallel);
    write_output(args.common.output, frwave::trajectory_csv(traj, series));
    return 0;
  } catch (const std::exception& e) {
    std::cerr << "evolution failed: " << e.what() << "\n";
    return 1;
  }
}

struct DispersionArgs {
  int curvature = 0;
  std::vector<double> k_values;
  double k_min = 0.0;
  double k_max = 0.0;
  std::size_t samples = 101;
  std::string output;
};

int cmd_dispersion(const DispersionArgs& args) {
  Curvature curv = Curvature::flat;
  std::vector<double> ks;
  try {
    curv = frwave::curvature_from_int(args.curvature);
    if (!args.k_values.empty()) {
      ks = args.k_values;
    } else if (args.k_max > 0.0) {
      ks = linspace(args.k_min, args.k_max, args.samples);
    } else {
      throw std::invalid_argument("provide --k values or --k-min/--k-max");
    }
    for (const double k : ks) {
      if (!(k > 0.0)) throw std::invalid_argument("wave numbers must be > 0");
      frwave::group_velocity(k, curv);  // validates k^2 - K > 0
    }
  } catch (const std::exception& e) {
    std::cerr << "configuration error: " << e.what() << "\n";
    return 2;
  }

  try {
    std::vector<double> omegas(ks.size()), vgs(ks.size());
    for (std::size_t i = 0; i < ks.size(); ++i) {
      omegas[i] = frwave::omega(ks[i], curv);
      vgs[i] = frwave::group_velocity(ks[i], curv);
    }
    write_output(args.output, frwave::table_csv({{"k", ks},
                                                 {"omega", omegas},
                                                 {"v_g", vgs}}));
    return 0;
  } catch (const std::exception& e) {
    std::cerr << "dispersion failed: " << e.what() << "\n";
    return 1;
  }
}

struct ModesArgs {
  int curvature = 0;
  double k = 1.0;
  int l = 0;
  double chi_min = 0.0;
  double chi_max = 0.0;
  std::size_t samples = 201;
  std::string output;
  bool serial = false;
};

int cmd_modes(const ModesArgs& args) {
  Curvature curv = Curvature::flat;
  std::vector<double> chi;
  double kappa2 = 0.0;
  try {
    curv = frwave::curvature_from_int(args.curvature);
    kappa2 = args.k * args.k -
             static_cast<double>(frwave::curvature_value(curv));
    double hi = args.chi_max;
    if (hi == 0.0) {
      hi = curv == Curvature::closed ? std::numbers::pi - 0.05 : 5.0;
    }
    chi = linspace(args.chi_min, hi, args.samples);
    frwave::radial_mode(curv, args.k, args.l, chi.front());  // validates
    frwave::radial_mode(curv, args.k, args.l, chi.back());
  } catch (const std::exception& e) {
    std::cerr << "configuration error: " << e.what() << "\n";
    return 2;
  }

  try {
    const std::vector<double> phi = frwave::kernels::radial_mode_series(
        curv, args.k, args.l, chi,
        args.serial ? frwave::kernels::Exec::serial
                    : frwave::kernels::Exec::parallel);
    std::string text = "# eigenvalue = " + frwave::format_double(-kappa2) + "\n";
    text += frwave::table_csv({{"chi", chi}, {"phi", phi}});
    write_output(args.output, text);
    return 0;
  } catch (const std::exception& e) {
    std::cerr << "mode evaluation failed: " << e.what() << "\n";
    return 1;
  }
}

struct ReconstructArgs {
  CommonArgs common;
  std::string psi_csv;
  double A = 0.0;
  double B = 0.0;
  double omega = -1.0;
  double c1 = 0.0;
  double c2 = 0.0;
  bool decompose = false;
};

int cmd_reconstruct(const ReconstructArgs& args) {
  Curvature curv = Curvature::flat;
  frwave::EtaInterval domain{};
  try {
    curv = frwave::curvature_from_int(args.common.curvature);
    if (args.psi_csv.empty()) {
      if (args.omega < 0.0) {
        throw std::invalid_argument(
            "analytic input requires --omega (with --A/--B); alternatively "
            "pass --psi-csv");
      }
      domain = resolve_eta(args.common, curv);
      if (curv == Curvature::closed && !(domain.max < std::numbers::pi / 2.0)) {
        throw std::invalid_argument(
            "closed-universe reconstruction requires eta range inside "
            "(0, pi/2)");
      }
    }
  } catch (const std::exception& e) {
    std::cerr << "configuration error: " << e.what() << "\n";
    return 2;
  }

  try {
    std::vector<double> eta, delta;
    if (!args.psi_csv.empty()) {
      const CsvTable table = read_csv(args.psi_csv);
      eta = table.column("eta");
      delta = frwave::reconstruct_delta(eta, table.column("psi"), curv,
                                        args.c1, args.c2);
    } else {
      const std::size_t n =
          args.common.samples != 0 ? args.common.samples : 1001;
      eta = linspace(domain.min, domain.max, n);
      const double A = args.A, B = args.B, w = args.omega;
      delta = frwave::reconstruct_delta_analytic(
          eta,
          [A, B, w](double e) { return frwave::analytic_psi(A, B, w, e); },
          curv, args.c1, args.c2);
    }

    std::string text;
    if (args.decompose) {
      const frwave::GaugeProjection proj =
          frwave::project_onto_gauge(eta, delta, curv);
      text += "# gauge_c1 = " + frwave::format_double(proj.c1) + "\n";
      text += "# gauge_c2 = " + frwave::format_double(proj.c2) + "\n";
    }
    text += frwave::table_csv({{"eta", eta}, {"delta", delta}});
    write_output(args.common.output, text);
    return 0;
  } catch (const std::exception& e) {
    std::cerr << "reconstruction failed: " << e.what() << "\n";
    return 1;
  }
}

void add_common_eta_options(CLI::App* sub, CommonArgs& common) {
  sub->add_option("--eta-min", common.eta_min,
                  "Start of the conformal-time window (default per curvature)");
  sub->add_option("--eta-max", common.eta_max,
                  "End of the conformal-time window (default per curvature)");
  sub->add_option("--samples", common.samples, "Output grid size");
  sub->add_option("-o,--output", common.output,
                  "Output file (default: stdout)");
}

}  // namespace

int main(int argc, char** argv) {
  CLI::App app{
      "Acoustic perturbations of the radiation-dominated FRW universe: "
      "verify the wave-equation property of the transformed density "
      "contrast, evolve modes, and tabulate the dispersion relation"};
  app.require_subcommand(1);
  app.set_config("--config", "", "JSON config file; flags take precedence");
  app.config_formatter(std::make_shared<JsonConfig>());

  VerifyArgs verify_args;
  CLI::App* verify = app.add_subcommand(
      "verify", "Check the wave-equation property of the transform");
  verify->add_option("--curvature", verify_args.common.curvature,
                     "Spatial curvature K: -1, 0 or +1");
  CLI::Option* verify_k_opt =
      verify->add_option("--k", verify_args.common.k, "Wave number");
  verify->add_option("--suite", verify_args.suite,
                     "Run a named batch instead of one case ('default')");
  verify->add_option("--check", verify_args.check,
                     "Which check to run: theorem or roundtrip");
  verify->add_option("--seed", verify_args.seed, "Seed for the initial data");
  verify->add_option("--rtol", verify_args.rtol, "Integrator relative tolerance");
  verify->add_option("--atol", verify_args.atol, "Integrator absolute tolerance");
  verify->add_option("--tol", verify_args.tol, "Residual pass threshold");
  verify->add_option("--freq-tol", verify_args.freq_tol,
                     "Frequency mismatch threshold");
  verify->add_flag("--serial", verify_args.serial,
                   "Run suite cases sequentially");
  add_common_eta_options(verify, verify_args.common);

  EvolveArgs evolve_args;
  CLI::App* evolve = app.add_subcommand(
      "evolve", "Integrate one mode and emit the solution as CSV");
  evolve->add_option("--curvature", evolve_args.common.curvature,
                     "Spatial curvature K: -1, 0 or +1");
  evolve->add_option("--k", evolve_args.common.k, "Wave number")->required();
  evolve->add_option("--lambda", evolve_args.initial.lambda, "Initial lambda");
  evolve->add_option("--dlambda", evolve_args.initial.dlambda,
                     "Initial lambda'");
  evolve->add_option("--mu", evolve_args.initial.mu, "Initial mu");
  evolve->add_option("--dmu", evolve_args.initial.dmu, "Initial mu'");
  CLI::Option* evolve_seed_opt =
      evolve->add_option("--seed", evolve_args.seed,
                         "Seed random initial data instead of explicit values");
  evolve->add_option("--rtol", evolve_args.rtol, "Integrator relative tolerance");
  evolve->add_option("--atol", evolve_args.atol, "Integrator absolute tolerance");
  evolve->add_flag("--serial", evolve_args.serial,
                   "Evaluate derived series without OpenMP");
  add_common_eta_options(evolve, evolve_args.common);

  DispersionArgs dispersion_args;
  CLI::App* dispersion = app.add_subcommand(
      "dispersion", "Tabulate omega(k) and the group velocity");
  dispersion->add_option("--curvature", dispersion_args.curvature,
                         "Spatial curvature K: -1, 0 or +1");
  dispersion->add_option("--k", dispersion_args.k_values,
                         "Explicit wave numbers (repeatable)");
  dispersion->add_option("--k-min", dispersion_args.k_min, "Range start");
  dispersion->add_option("--k-max", dispersion_args.k_max, "Range end");
  dispersion->add_option("--samples", dispersion_args.samples,
                         "Number of range samples");
  dispersion->add_option("-o,--output", dispersion_args.output,
                         "Output file (default: stdout)");

  ModesArgs modes_args;
  CLI::App* modes = app.add_subcommand(
      "modes", "Emit the radial eigenfunction profile as CSV");
  modes->add_option("--curvature", modes_args.curvature,
                    "Spatial curvature K: -1, 0 or +1");
  modes->add_option("--k", modes_args.k, "Wave number")->required();
  modes->add_option("--l", modes_args.l, "Multipole (0 or 1)");
  modes->add_option("--chi-min", modes_args.chi_min, "Radial range start");
  modes->add_option("--chi-max", modes_args.chi_max,
                    "Radial range end (default per curvature)");
  modes->add_option("--samples", modes_args.samples, "Grid size");
  modes->add_flag("--serial", modes_args.serial, "Evaluate without OpenMP");
  modes->add_option("-o,--output", modes_args.output,
                    "Output file (default: stdout)");

  ReconstructArgs reconstruct_args;
  CLI::App* reconstruct = app.add_subcommand(
      "reconstruct", "Invert the transform back to a density contrast");
  reconstruct->add_option("--curvature", reconstruct_args.common.curvature,
                          "Spatial curvature K: -1, 0 or +1");
  reconstruct->add_option("--psi-csv", reconstruct_args.psi_csv,
                          "CSV with eta and psi columns (e.g. evolve output)");
  reconstruct->add_option("--A", reconstruct_args.A,
                          "Cosine amplitude of the analytic input");
  reconstruct->add_option("--B", reconstruct_args.B,
                          "Sine amplitude of the analytic input");
  reconstruct->add_option("--omega", reconstruct_args.omega,
                          "Frequency of the analytic input (0 = linear branch)");
  reconstruct->add_option("--c1", reconstruct_args.c1,
                          "Coefficient of the first gauge mode");
  reconstruct->add_option("--c2", reconstruct_args.c2,
                          "Coefficient of the second gauge mode");
  reconstruct->add_flag("--decompose", reconstruct_args.decompose,
                        "Prepend gauge-projection coefficients as comments");
  add_common_eta_options(reconstruct, reconstruct_args.common);

  try {
    app.parse(argc, argv);
  } catch (const CLI::ParseError& e) {
    const int code = app.exit(e);
    return code == 0 ? 0 : 2;
  }
  verify_args.k_given = verify_k_opt->count() > 0;
  evolve_args.seed_given = evolve_seed_opt->count() > 0;

  if (verify->parsed()) return cmd_verify(verify_args);
  if (evolve->parsed()) return cmd_evolve(evolve_args);
  if (dispersion->parsed()) return cmd_dispersion(dispersion_args);
  if (modes->parsed()) return cmd_modes(modes_args);
  if (reconstruct->parsed()) return cmd_reconstruct(reconstruct_args);
  return 2;
}
