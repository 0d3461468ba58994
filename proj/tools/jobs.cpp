#include "jobs.hpp"

#include <fstream>
#include <iostream>
#include <iterator>
#include <sstream>

#include "manifest.hpp"
#include "phipade/errors.hpp"
#include "phipade/json_io.hpp"
#include "phipade/oracles.hpp"

namespace phipade::cli {

namespace mp = boost::multiprecision;

std::vector<Real> Grid::values() const {
  std::vector<Real> out;
  if (points == 1) {
    out.push_back(min);
    return out;
  }
  for (int i = 0; i < points; ++i) {
    Real t = Real(i) / (points - 1);
    if (log) {
      out.push_back(mp::exp(mp::log(min) + t * (mp::log(max) - mp::log(min))));
    } else {
      out.push_back(min + t * (max - min));
    }
  }
  // endpoints exactly as given
  out.front() = min;
  out.back() = max;
  return out;
}

Grid parse_grid(const std::string& text) {
  std::vector<std::string> parts;
  std::stringstream in(text);
  for (std::string item; std::getline(in, item, ':');) parts.push_back(item);
  if (parts.size() != 4) throw UsageError("grid must look like min:max:points:log|linear, got '" + text + "'");
  Grid grid;
  try {
    grid.min = BigValue::parse(parts[0]).to_real();
    grid.max = BigValue::parse(parts[1]).to_real();
    std::size_t used = 0;
    grid.points = std::stoi(parts[2], &used);
    if (used != parts[2].size()) throw UsageError("bad point count");
  } catch (const std::exception&) {
    throw UsageError("cannot parse grid '" + text + "'");
  }
  if (parts[3] == "log") grid.log = true;
  else if (parts[3] == "linear") grid.log = false;
  else throw UsageError("grid spacing must be log or linear, got '" + parts[3] + "'");
  if (grid.points < 1) throw UsageError("grid needs at least one point");
  if (grid.points == 1) {
    if (grid.min != grid.max) throw UsageError("a one-point grid needs min == max");
  } else if (!(grid.min < grid.max)) {
    throw UsageError("grid needs min < max");
  }
  if (grid.log && grid.points > 1 && grid.min <= 0) throw UsageError("log grid needs min > 0");
  return grid;
}

const std::vector<std::string>& builtin_names() {
  static const std::vector<std::string> names = {"zero-dim", "euler-heisenberg", "quartic", "sextic",
                                                 "beta"};
  return names;
}

PowerSeries builtin_series(const std::string& name, std::size_t count) {
  if (count < 1) throw UsageError("coefficient count must be positive");
  if (name == "zero-dim") return zero_dim_partition_series(count);
  if (name == "euler-heisenberg") return euler_heisenberg_series(count);
  if (name == "quartic") return subtract_leading(quartic_rspt_series(count + 1));
  if (name == "sextic") return subtract_leading(sextic_rspt_series(count + 1));
  if (name == "beta") {
    PowerSeries s = beta_function_series();
    if (count > s.size()) {
      throw UsageError("the beta series has " + std::to_string(s.size()) + " coefficients");
    }
    return s.prefix(count);
  }
  throw UsageError("unknown builtin series '" + name + "'");
}

PowerSeries read_series_argument(const std::string& source, const Context& ctx) {
  std::string text;
  if (source == "-") {
    text.assign(std::istreambuf_iterator<char>(std::cin), {});
  } else if (!source.empty() && source[0] == '@') {
    std::ifstream in(source.substr(1));
    if (!in) throw UsageError("cannot read series file " + source.substr(1));
    text.assign(std::istreambuf_iterator<char>(in), {});
  } else {
    text = source;
  }
  try {
    return series_from_json(text, ctx);
  } catch (const ParseError& e) {
    throw UsageError(std::string("bad series: ") + e.what());
  }
}

PhiSpec parse_spec(const std::string& a, const std::string& b, int m, int mu) {
  PhiSpec spec;
  try {
    spec.a = BigValue::parse(a);
    spec.b = BigValue::parse(b);
  } catch (const std::exception& e) {
    throw UsageError(std::string("bad Phi parameter: ") + e.what());
  }
  spec.m = m;
  spec.mu = mu;
  try {
    spec.validate();
  } catch (const InvalidArgument& e) {
    throw UsageError(e.what());
  }
  return spec;
}

std::optional<Real> oracle_value(const std::string& oracle, const Real& g, const Context& ctx) {
  if (oracle == "none") return std::nullopt;
  if (oracle == "zero-dim-integral") return zero_dim_Z(g, ctx);
  if (oracle == "euler-heisenberg-integral") {
    if (g == 0) return Real(0);
    return eh_lagrangian(g, ctx);
  }
  if (oracle == "oscillator-4") return oscillator_energy(4, g);
  if (oracle == "oscillator-6") return oscillator_energy(6, g);
  throw UsageError("unknown oracle '" + oracle + "'");
}

const nlohmann::json& manifest() {
  static const nlohmann::json doc = nlohmann::json::parse(kManifestJson);
  return doc;
}

std::string cell(const std::optional<Real>& x, unsigned digits) {
  if (!x) return "nan";
  return format_real(*x, digits);
}

} // namespace phipade::cli
