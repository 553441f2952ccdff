#pragma once
//==========================================================
// Deterministic, locale-free serialization of results: CSV tables with
// 17-significant-digit numbers (exact double round-trip) and the JSON
// report format consumed by the CLI. Identical inputs produce
// byte-identical output on every platform.
//==========================================================

#include <string>
#include <vector>

#include "frwave/series_kernels.hpp"
#include "frwave/verifier.hpp"

namespace frwave {

std::string format_double(double v);

struct CsvColumn {
  std::string name;
  std::vector<double> values;
};

// Header row then data rows; all columns must share one length. The final
// line is newline-terminated.
std::string table_csv(const std::vector<CsvColumn>& columns);

// Columns eta, lambda, dlambda, mu, dmu, delta, psi.
std::string trajectory_csv(const Trajectory& traj,
                           const kernels::ContrastPsiSeries& series);

std::string theorem_report_json(const TheoremReport& rep);
std::string suite_report_json(const SuiteReport& rep);
std::string roundtrip_report_json(const RoundtripReport& rep);

}  // namespace frwave
