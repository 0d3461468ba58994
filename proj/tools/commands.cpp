#include "commands.hpp"

#include <algorithm>
#include <filesystem>
#include <fstream>
#include <functional>
#include <iomanip>
#include <optional>
#include <vector>

#include <boost/math/quadrature/exp_sinh.hpp>
#include <boost/math/special_functions/expint.hpp>
#include <json.hpp>

#include "jobs.hpp"
#include "phipade/errors.hpp"
#include "phipade/json_io.hpp"
#include "phipade/oracles.hpp"
#include "phipade/special.hpp"

namespace phipade::cli {

namespace fs = std::filesystem;
namespace mp = boost::multiprecision;
using nlohmann::json;

namespace {

void write_file(const fs::path& path, const std::string& content) {
  std::ofstream file(path);
  if (!file) throw UsageError("cannot write " + path.string());
  file << content;
}

fs::path prepare_dir(const std::string& dir) {
  fs::path p(dir);
  std::error_code ec;
  fs::create_directories(p, ec);
  if (ec) throw UsageError("cannot create output directory " + dir + ": " + ec.message());
  return p;
}

std::optional<Real> real_or_nothing(const PhiPadeApproximant& ap, const Real& g, const Context& ctx) {
  try {
    BigComplex v = evaluate(ap, BigComplex(g), ctx);
    return v.re;
  } catch (const BranchCutError&) {
    return std::nullopt;
  }
}

json leading_json(const PhiPadeApproximant& ap, const Context& ctx, unsigned digits) {
  try {
    const AsymptoteForm form = asymptote(ap, ctx);
    const auto& t = form.leading();
    return {{"coefficient", format_real(t.coefficient.re, digits)},
            {"power", format_real(t.power, 12)},
            {"log_power", t.log_power}};
  } catch (const Error& e) {
    return {{"error", e.what()}};
  }
}

} // namespace

int cmd_sum(const SumJob& job, std::ostream& out, std::ostream& diag) {
  const Context ctx(job.precision);
  ScopedPrecision guard(ctx);
  if (job.series.empty() == job.builtin.empty()) {
    throw UsageError("give exactly one of --series and --builtin");
  }
  if (job.n < 1) throw UsageError("--n must be >= 1");
  if (job.format != "json" && job.format != "csv") throw UsageError("--format must be json or csv");
  const PhiSpec spec = parse_spec(job.a, job.b, job.m, job.mu);
  const Grid grid = parse_grid(job.grid);
  const PowerSeries series =
      job.builtin.empty()
          ? read_series_argument(job.series, ctx)
          : builtin_series(job.builtin, job.count ? job.count : 2 * static_cast<std::size_t>(job.n));

  const PhiPadeApproximant ap = build(series, spec, job.n, ctx);
  for (const auto& w : ap.warnings) diag << "warning: " << w.message << "\n";

  const unsigned digits = job.precision;
  std::vector<std::pair<Real, std::optional<Real>>> rows;
  for (const Real& g : grid.values()) rows.emplace_back(g, real_or_nothing(ap, g, ctx));
  for (const auto& [g, v] : rows) {
    if (!v) diag << "warning: evaluation ray blocked at g = " << format_real(g, 12) << "\n";
  }

  const std::string approx_text = approximant_to_json(ap, digits);
  std::string table;
  if (job.format == "csv") {
    table = "g,value\n";
    for (const auto& [g, v] : rows) table += format_real(g, digits) + "," + cell(v, digits) + "\n";
  } else {
    json values = json::array();
    for (const auto& [g, v] : rows) values.push_back({{"g", format_real(g, digits)}, {"value", cell(v, digits)}});
    table = values.dump(2) + "\n";
  }

  if (!job.out.empty()) {
    const fs::path dir = prepare_dir(job.out);
    write_file(dir / "approximant.json", approx_text + "\n");
    write_file(dir / ("values." + job.format), table);
    diag << "wrote " << (dir / "approximant.json").string() << " and "
         << (dir / ("values." + job.format)).string() << "\n";
  } else if (job.format == "csv") {
    out << table;
  } else {
    json doc = {{"approximant", json::parse(approx_text)}, {"values", json::parse(table)}};
    out << doc.dump(2) << "\n";
  }
  return 0;
}

int cmd_reproduce(const std::string& example, unsigned precision, const std::string& out_dir,
                  std::ostream& out, std::ostream& diag) {
  const Context ctx(precision);
  ScopedPrecision guard(ctx);
  const json& examples = manifest().at("examples");
  if (!examples.contains(example)) {
    std::string known;
    for (auto it = examples.begin(); it != examples.end(); ++it) known += " " + it.key();
    throw UsageError("unknown example '" + example + "'; known:" + known);
  }
  const json& ex = examples.at(example);
  const PowerSeries series =
      builtin_series(ex.at("series").at("builtin").get<std::string>(),
                     ex.at("series").at("count").get<std::size_t>());
  const std::string oracle = ex.at("oracle").get<std::string>();
  const Grid grid = parse_grid(ex.at("grid").get<std::string>());

  struct Entry {
    std::string label;
    PhiPadeApproximant ap;
  };
  std::vector<Entry> entries;
  for (const auto& cfg : ex.at("approximants")) {
    PhiSpec spec;
    if (cfg.contains("growth")) {
      auto [a, b] = match_growth(BigValue::parse(cfg.at("growth").get<std::string>()));
      spec.a = a;
      spec.b = b;
    } else {
      spec.a = BigValue::parse(cfg.at("a").get<std::string>());
      spec.b = BigValue::parse(cfg.at("b").get<std::string>());
    }
    spec.m = cfg.value("m", 1);
    spec.mu = cfg.value("mu", 0);
    entries.push_back({cfg.at("label").get<std::string>(), build(series, spec, cfg.at("n").get<int>(), ctx)});
    for (const auto& w : entries.back().ap.warnings) diag << "warning (" << entries.back().label << "): " << w.message << "\n";
  }

  const unsigned digits = precision;
  std::string csv = "g";
  if (oracle != "none") csv += ",exact";
  for (const auto& e : entries) csv += "," + e.label;
  csv += "\n";

  std::vector<Real> worst(entries.size(), Real(0));
  std::vector<std::optional<Real>> at_max(entries.size());
  const std::vector<Real> gs = grid.values();
  for (const Real& g : gs) {
    const std::optional<Real> exact = oracle_value(oracle, g, ctx);
    csv += format_real(g, digits);
    if (exact) csv += "," + format_real(*exact, digits);
    for (std::size_t i = 0; i < entries.size(); ++i) {
      const std::optional<Real> v = real_or_nothing(entries[i].ap, g, ctx);
      csv += "," + cell(v, digits);
      if (exact && v && *exact != 0) {
        Real rel = abs((*v - *exact) / *exact);
        worst[i] = std::max(worst[i], rel);
        if (&g == &gs.back()) at_max[i] = rel;
      }
    }
    csv += "\n";
  }

  json summary = {{"example", example},
                  {"manifest_version", manifest().at("version")},
                  {"precision", precision},
                  {"grid", ex.at("grid")}};
  json list = json::array();
  for (std::size_t i = 0; i < entries.size(); ++i) {
    const auto& ap = entries[i].ap;
    json item = {{"label", entries[i].label},
                 {"spec", json::parse(phi_spec_to_json(ap.spec, 20))},
                 {"n", ap.n},
                 {"leading_asymptote", leading_json(ap, ctx, 15)}};
    if (oracle != "none") {
      item["max_relative_error"] = format_real(worst[i], 6);
      item["relative_error_at_max_g"] = at_max[i] ? format_real(*at_max[i], 6) : "nan";
    }
    json poles = json::array();
    for (const auto& z : ap.pf.poles) poles.push_back(to_string(z, 15));
    item["poles"] = poles;
    list.push_back(item);
  }
  summary["approximants"] = list;

  if (ex.contains("root_bracket")) {
    const Real lo(ex["root_bracket"][0].get<double>());
    const Real hi(ex["root_bracket"][1].get<double>());
    for (std::size_t i = 0; i < entries.size(); ++i) {
      summary["approximants"][i]["root"] = format_real(find_root(entries[i].ap, lo, hi, ctx), 10);
    }
  }
  if (ex.contains("pole_probe")) {
    const json& cfg = ex["pole_probe"];
    PhiSpec spec;
    spec.a = BigValue::parse(cfg.at("a").get<std::string>());
    spec.b = BigValue::parse(cfg.at("b").get<std::string>());
    spec.m = cfg.value("m", 1);
    spec.mu = cfg.value("mu", 0);
    const PhiPadeApproximant probe = build(series, spec, cfg.at("n").get<int>(), ctx);
    json blocked = json::array();
    for (const auto& w : probe.warnings) blocked.push_back(to_string(w.pole, 15));
    summary["pole_probe"] = {{"label", cfg.at("label")}, {"positive_axis_poles", blocked}};
  }

  if (!out_dir.empty()) {
    const fs::path dir = prepare_dir(out_dir);
    write_file(dir / (example + ".csv"), csv);
    write_file(dir / (example + ".summary.json"), summary.dump(2) + "\n");
    out << summary.dump(2) << "\n";
  } else {
    out << csv;
    diag << summary.dump(2) << "\n";
  }
  return 0;
}

namespace {

struct CheckResult {
  std::string name;
  bool passed = false;
  std::string detail;
};

Real threshold(unsigned precision, int nominal) {
  const int digits = std::min(nominal, static_cast<int>(precision) - 5);
  return pow10(-digits);
}

CheckResult check_within(const std::string& name, const Real& err, const Real& limit) {
  return {name, err < limit, "error " + format_real(err, 3) + " (limit " + format_real(limit, 2) + ")"};
}

} // namespace

int cmd_verify(unsigned precision, bool fault, std::ostream& out) {
  const Context ctx(precision);
  ScopedPrecision guard(ctx);
  std::vector<std::pair<std::string, std::function<CheckResult()>>> checks;

  checks.emplace_back("phi-exponential-integral", [&] {
    // a = b = 1: Phi(z) = e^(1/z) E1(1/z) / z
    PhiSpec borel;
    Real worst(0);
    for (const char* zs : {"0.1", "1", "10"}) {
      Real z(zs);
      Real x = 1 / z;
      Real expected = mp::exp(x) * boost::math::expint(1, x) / z;
      Real got = phi_eval(borel, BigComplex(z), ctx).re;
      worst = std::max(worst, abs(got - expected) / abs(expected));
    }
    return check_within("phi-exponential-integral", worst, threshold(precision, 20));
  });

  checks.emplace_back("zero-dim-exact-pole", [&] {
    PhiSpec spec{BigValue::ratio(3, 4), BigValue::ratio(1, 4)};
    auto ap = build(zero_dim_partition_series(2), spec, 1, ctx);
    bool ok = ap.pf.exact_poles && ap.pf.exact_poles->size() == 1 &&
              (*ap.pf.exact_poles)[0] == Rational(-3, 2) && (*ap.pf.exact_residues)[0] == Rational(3, 2);
    return CheckResult{"zero-dim-exact-pole", ok, ok ? "pole -3/2, residue 3/2" : "unexpected partial fractions"};
  });

  checks.emplace_back("zero-dim-exactness", [&] {
    PhiSpec spec{BigValue::ratio(3, 4), BigValue::ratio(1, 4)};
    auto ap = build(zero_dim_partition_series(2), spec, 1, ctx);
    Real worst(0);
    for (const char* gs : {"0.1", "1", "10"}) {
      Real g(gs);
      worst = std::max(worst, abs(evaluate_real(ap, g, ctx) - zero_dim_Z(g, ctx)));
    }
    return check_within("zero-dim-exactness", worst, threshold(precision, 20));
  });

  checks.emplace_back("inverse-transform-identity", [&] {
    PhiSpec spec{BigValue::ratio(3, 4), BigValue::ratio(1, 4)};
    const Context inner(std::min(precision, 30u));
    auto psi = inverse_transform(
        [](const BigComplex& u) {
          return BigComplex(Real(1)) / (BigComplex(Real(1)) + u * (Real(2) / 3));
        },
        spec, inner);
    Real worst(0);
    for (const char* gs : {"0.5", "2"}) {
      Real g(gs);
      worst = std::max(worst, abs(psi(BigComplex(g)).re - zero_dim_Z(g, ctx)));
    }
    return check_within("inverse-transform-identity", worst, threshold(precision, 15));
  });

  checks.emplace_back("matching-property", [&] {
    struct Case {
      PowerSeries series;
      PhiSpec spec;
      int max_n;
    };
    std::vector<Case> cases = {
        {zero_dim_partition_series(8), {BigValue::ratio(3, 4), BigValue::ratio(1, 4)}, 4},
        {subtract_leading(quartic_rspt_series(9)), {BigValue::ratio(2, 3), BigValue(1)}, 4},
        {subtract_leading(sextic_rspt_series(19)), {BigValue::ratio(3, 2), BigValue(1), 2, 0}, 9},
        {euler_heisenberg_series(8), {BigValue(2), BigValue(1), 2, 0}, 4},
    };
    Real worst(0);
    for (auto& c : cases) {
      for (int n = 1; n <= c.max_n; ++n) {
        auto ap = build(c.series, c.spec, n, ctx);
        PowerSeries reference = c.series;
        if (fault) reference.coeffs[1] = reference.coeffs[1] * BigValue::parse("1.000001");
        worst = std::max(worst, matching_error(ap, reference, ctx));
      }
    }
    return check_within("matching-property", worst, ctx.tolerance());
  });

  checks.emplace_back("borel-pade-laplace", [&] {
    // [0,1] Borel-Pade of the subtracted quartic series: B(t) = (3/4) / (1 + 7t/2)
    PhiSpec borel;
    auto ap = build(subtract_leading(quartic_rspt_series(3)), borel, 1, ctx);
    Real worst(0);
    boost::math::quadrature::exp_sinh<Real> integrator;
    for (const char* gs : {"0.1", "1"}) {
      Real g(gs);
      auto f = [&](const Real& t) -> Real { return mp::exp(-t) * Real(3) / 4 / (1 + Real(7) / 2 * g * t); };
      Real laplace = Real(1) / 2 + g * integrator.integrate(f, pow10(-static_cast<int>(precision) + 5));
      worst = std::max(worst, abs(evaluate_real(ap, g, ctx) - laplace));
    }
    return check_within("borel-pade-laplace", worst, threshold(precision, 20));
  });

  bool all = true;
  out << std::left << std::setw(28) << "check" << std::setw(7) << "result" << "detail\n";
  for (auto& [name, run] : checks) {
    CheckResult r;
    try {
      r = run();
    } catch (const Error& e) {
      r = {name, false, e.what()};
    }
    all = all && r.passed;
    out << std::left << std::setw(28) << r.name << std::setw(7) << (r.passed ? "PASS" : "FAIL") << r.detail
        << "\n";
  }
  return all ? 0 : 1;
}

} // namespace phipade::cli
