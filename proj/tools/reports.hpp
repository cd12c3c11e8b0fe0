#pragma once

#include "table.hpp"

#include "qcx/quadrature.hpp"

#include <map>
#include <optional>
#include <string>
#include <vector>

namespace qcx::cli {

// Named parameters of a single-state report, as strings.  Lists use ';'.
using Params = std::map<std::string, std::string>;

int param_int(const Params& p, const std::string& key, std::optional<int> fallback = std::nullopt);
double param_double(const Params& p, const std::string& key, std::optional<double> fallback = std::nullopt);
std::string param_str(const Params& p, const std::string& key, std::optional<std::string> fallback = std::nullopt);
std::vector<double> parse_list(const std::string& s);
std::string fmt_num(double v);

// Report targets: hydrogen, hydrod, kleingordon, hermite, laguerre.
const std::vector<std::string>& report_targets();
// Parameter names accepted by a target.
const std::vector<std::string>& target_params(const std::string& target);
Row report_row(const std::string& target, const Params& p, const QuadConfig& cfg);

Row hydrogen_row(const Params& p, const QuadConfig& cfg);
Row hydrod_row(const Params& p, const QuadConfig& cfg);
Row kleingordon_row(const Params& p, const QuadConfig& cfg);
Row polylen_row(const std::string& family, const Params& p, const QuadConfig& cfg);

}  // namespace qcx::cli
