#pragma once

#include <optional>
#include <string>
#include <vector>

#include <json.hpp>

#include "phipade/approximant.hpp"

namespace phipade::cli {

// Raised for malformed command-line input; maps to exit status 2.
struct UsageError : std::runtime_error {
  using std::runtime_error::runtime_error;
};

struct Grid {
  Real min;
  Real max;
  int points = 1;
  bool log = true;

  std::vector<Real> values() const;
};

// "min:max:points:log|linear"
Grid parse_grid(const std::string& text);

// Coefficient series by builtin name. quartic and sextic are the once-
// subtracted oscillator series; `count` is the number of coefficients after
// subtraction.
PowerSeries builtin_series(const std::string& name, std::size_t count);
const std::vector<std::string>& builtin_names();

// Inline JSON, "@path" for a file, or "-" for stdin.
PowerSeries read_series_argument(const std::string& source, const Context& ctx);

PhiSpec parse_spec(const std::string& a, const std::string& b, int m, int mu);

// Exact reference values by oracle name ("none" returns nullopt).
std::optional<Real> oracle_value(const std::string& oracle, const Real& g, const Context& ctx);

const nlohmann::json& manifest();

// Full-precision text for tables; "nan" for missing values.
std::string cell(const std::optional<Real>& x, unsigned digits);

} // namespace phipade::cli
