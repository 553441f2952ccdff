#include "frwave/report.hpp"

#include <charconv>
#include <stdexcept>
#include <system_error>

#include <json.hpp>

namespace frwave {

std::string format_double(double v) {
  char buf[40];
  const auto res = std::to_chars(buf, buf + sizeof(buf), v,
                                 std::chars_format::general, 17);
  if (res.ec != std::errc{}) throw std::runtime_error("number formatting failed");
  return std::string(buf, res.ptr);
}

std::string table_csv(const std::vector<CsvColumn>& columns) {
  if (columns.empty()) throw std::invalid_argument("no columns");
  const std::size_t rows = columns.front().values.size();
  std::string out;
  for (std::size_t c = 0; c < columns.size(); ++c) {
    if (columns[c].values.size() != rows) {
      throw std::invalid_argument("column length mismatch");
    }
    if (c > 0) out += ',';
    out += columns[c].name;
  }
  out += '\n';
  for (std::size_t r = 0; r < rows; ++r) {
    for (std::size_t c = 0; c < columns.size(); ++c) {
      if (c > 0) out += ',';
      out += format_double(columns[c].values[r]);
    }
    out += '\n';
  }
  return out;
}

std::string trajectory_csv(const Trajectory& traj,
                           const kernels::ContrastPsiSeries& series) {
  const std::size_t n = traj.eta.size();
  std::vector<double> lambda(n), dlambda(n), mu(n), dmu(n);
  for (std::size_t i = 0; i < n; ++i) {
    lambda[i] = traj.states[i].lambda;
    dlambda[i] = traj.states[i].dlambda;
    mu[i] = traj.states[i].mu;
    dmu[i] = traj.states[i].dmu;
  }
  return table_csv({{"eta", traj.eta},
                    {"lambda", lambda},
                    {"dlambda", dlambda},
                    {"mu", mu},
                    {"dmu", dmu},
                    {"delta", series.delta},
                    {"psi", series.psi}});
}

namespace {

nlohmann::ordered_json theorem_case_json(const TheoremReport& rep) {
  nlohmann::ordered_json j;
  j["curvature"] = curvature_value(rep.params.curvature);
  j["k"] = rep.params.k;
  j["kappa2"] = rep.params.kappa2;
  j["omega"] = rep.omega;
  j["fit"] = nlohmann::ordered_json{{"A", rep.fit.A}, {"B", rep.fit.B}};
  j["rms_residual"] = rep.rms_residual;
  j["max_residual"] = rep.max_residual;
  if (rep.freq_estimate.has_value()) {
    j["freq_estimate"] = *rep.freq_estimate;
  } else {
    j["freq_estimate"] = nullptr;
  }
  j["kernel_case"] = rep.kernel_case;
  j["pass"] = rep.pass;
  return j;
}

}  // namespace

std::string theorem_report_json(const TheoremReport& rep) {
  nlohmann::ordered_json j = theorem_case_json(rep);
  if (rep.seed.has_value()) j["seed"] = *rep.seed;
  return j.dump(2) + "\n";
}

std::string suite_report_json(const SuiteReport& rep) {
  nlohmann::ordered_json j;
  j["seed"] = rep.seed;
  nlohmann::ordered_json cases = nlohmann::ordered_json::array();
  for (const TheoremReport& r : rep.reports) {
    cases.push_back(theorem_case_json(r));
  }
  j["cases"] = std::move(cases);
  j["pass"] = rep.pass;
  return j.dump(2) + "\n";
}

std::string roundtrip_report_json(const RoundtripReport& rep) {
  nlohmann::ordered_json j;
  j["curvature"] = curvature_value(rep.params.curvature);
  j["k"] = rep.params.k;
  j["kappa2"] = rep.params.kappa2;
  j["seed"] = rep.seed;
  j["residual"] = rep.residual;
  j["gauge_c1"] = rep.gauge_c1;
  j["gauge_c2"] = rep.gauge_c2;
  j["pass"] = rep.pass;
  return j.dump(2) + "\n";
}

}  // namespace frwave
