#include "radmax/cli.hpp"

#include <algorithm>
#include <cmath>
#include <fstream>
#include <functional>
#include <optional>
#include <ostream>
#include <sstream>
#include <stdexcept>

#include "CLI11.hpp"
#include "radmax/bounds.hpp"
#include "radmax/errors.hpp"
#include "radmax/geometry.hpp"
#include "radmax/optimize.hpp"
#include "radmax/oracle.hpp"
#include "radmax/serialize.hpp"
#include "radmax/verify.hpp"

namespace radmax {

namespace {

std::vector<std::string> split(const std::string& text, char sep) {
  std::vector<std::string> parts;
  std::string part;
  std::istringstream in(text);
  while (std::getline(in, part, sep)) parts.push_back(part);
  if (!text.empty() && text.back() == sep) parts.emplace_back();
  return parts;
}

double parse_number(const std::string& text) {
  std::size_t used = 0;
  double value = 0.0;
  try {
    value = std::stod(text, &used);
  } catch (const std::exception&) {
    throw UsageError("not a number: '" + text + "'");
  }
  if (used != text.size() || !std::isfinite(value)) {
    throw UsageError("not a finite number: '" + text + "'");
  }
  return value;
}

struct Config {
  std::string format = "json";
  std::string output;
  std::string measure = "gaussian";
  std::string table;
  std::string construction;
  long exact_threshold = kExactThreshold;
  std::uint64_t seed = 12345;
  std::uint64_t samples = 10'000'000;
  std::size_t grid = 0;
  double tol = 0.0;

  std::string target;
  long n = 0;
  std::optional<double> p;
  std::optional<double> lambda;
  std::optional<double> R;
  std::optional<double> r;
  std::optional<double> d;
  std::optional<double> t;
  std::size_t points = 256;

  std::string n_range;
  std::string p_range;
  std::string lambda_range = "0.2";
  std::string R_range = "1";
};

RadialDensity make_density(const Config& config) {
  if (config.measure == "gaussian") return RadialDensity::gaussian();
  if (config.measure == "unitball") return RadialDensity::unit_ball_indicator();
  if (config.measure == "lebesgue") return RadialDensity::lebesgue();
  if (config.measure == "tabulated") {
    if (config.table.empty()) throw UsageError("--measure tabulated needs --table");
    return load_tabulated_file(config.table);
  }
  throw UsageError("unknown measure: " + config.measure);
}

template <class T>
T require(const std::optional<T>& value, const std::string& flag) {
  if (!value) throw UsageError("missing required option " + flag);
  return *value;
}

Dimension require_dimension(long n) {
  if (n < 1) throw UsageError("--n must be a positive integer");
  return Dimension(n);
}

std::string default_construction(const Config& config) {
  if (!config.construction.empty()) return config.construction;
  if (config.R) return config.measure == "unitball" ? "unitball" : "exact";
  return "theorem1";
}

BoundReport build_report(const RadialDensity& f, const std::string& construction,
                         Dimension n, double p, std::optional<double> lambda,
                         std::optional<double> R, std::optional<double> r,
                         long threshold) {
  if (construction == "theorem1") {
    return theorem1_construction(f, n, p, require(lambda, "--lambda"), threshold);
  }
  if (construction == "gaussian") {
    if (f.kind() != DensityKind::Gaussian) {
      throw UsageError("--construction gaussian needs --measure gaussian");
    }
    return gaussian_construction(n, p, require(lambda, "--lambda"), threshold);
  }
  if (construction == "unitball") {
    if (f.kind() != DensityKind::UnitBallIndicator) {
      throw UsageError("--construction unitball needs --measure unitball");
    }
    const double radius = R.value_or(1.0);
    const double ratio = lambda ? *lambda : require(r, "--lambda or --r") / radius;
    return unitball_construction(n, p, radius, ratio, threshold);
  }
  if (construction == "exact") {
    const double radius = require(R, "--R");
    const double small = r ? *r : radius * require(lambda, "--lambda or --r");
    return exact_report(f, n, p, radius, small);
  }
  throw UsageError("unknown construction: " + construction);
}

struct Output {
  std::string text;
  int code = kExitSuccess;
};

void emit(const Config& config, const Output& result, std::ostream& out) {
  if (config.output.empty()) {
    out << result.text;
    return;
  }
  std::ofstream file(config.output, std::ios::binary);
  if (!file) throw UsageError("cannot open output file " + config.output);
  file << result.text;
}

void require_format(const Config& config, std::initializer_list<const char*> allowed) {
  for (const char* name : allowed) {
    if (config.format == name) return;
  }
  throw UsageError("unsupported --format " + config.format);
}

std::string kv_csv(const Json& object) {
  std::vector<std::vector<std::string>> rows;
  for (const auto& [key, value] : object.items()) {
    if (value.is_object()) {
      for (const auto& [sub, item] : value.items()) {
        rows.push_back({key + "." + sub, item.is_number_float()
                                             ? format_double(item.get<double>())
                                             : item.dump()});
      }
      continue;
    }
    rows.push_back(
        {key, value.is_number_float() ? format_double(value.get<double>()) : value.dump()});
  }
  std::ostringstream out;
  write_csv(out, {}, {"field", "value"}, rows);
  return out.str();
}

Output cmd_p0(const Config& config) {
  require_format(config, {"json", "csv"});
  SearchSettings settings;
  if (config.grid) settings.grid = config.grid;
  if (config.tol > 0.0) settings.tol = config.tol;
  const ExponentKind kind = [&] {
    try {
      return parse_exponent_kind(config.target);
    } catch (const DomainError& e) {
      throw UsageError(e.what());
    }
  }();
  const SupremumResult result = critical_exponent(kind, settings);
  if (config.format == "csv") {
    std::ostringstream out;
    write_csv(out, {{"command", "p0"}}, {"target", "value", "argmax", "bracket_lo", "bracket_hi",
                                         "evaluations"},
              {{config.target, format_double(result.value), format_double(result.argmax),
                format_double(result.bracket_lo), format_double(result.bracket_hi),
                std::to_string(result.evaluations)}});
    return {out.str()};
  }
  Json j;
  j["target"] = config.target;
  const Json body = to_json(result);
  for (const auto& [key, value] : body.items()) j[key] = value;
  return {dump_json(j) + "\n"};
}

Output cmd_bound(const Config& config) {
  require_format(config, {"json", "csv"});
  const RadialDensity f = make_density(config);
  const Dimension n = require_dimension(config.n);
  const double p = require(config.p, "--p");
  const std::string construction = default_construction(config);
  const BoundReport report = build_report(f, construction, n, p, config.lambda, config.R,
                                          config.r, config.exact_threshold);
  Json j = to_json(report);
  Json checks = Json::object();
  bool ok = true;
  if (report.logT_exact) {
    const bool holds = *report.logT_exact >= report.logT_lower - 1e-9;
    checks["lower_le_exact"] = holds;
    ok = ok && holds;
    if (const auto upper = report.term("logT_upper")) {
      const bool within = holds && *report.logT_exact <= *upper + 1e-9;
      checks["within_sandwich"] = within;
      ok = ok && within;
    }
    if (const auto bound = report.term("log_case_bound")) {
      const bool below = *report.logT_exact <= *bound + 1e-9;
      checks["exact_le_case_bound"] = below;
      ok = ok && below;
    }
  }
  j["checks"] = checks;
  return {config.format == "csv" ? kv_csv(j) : dump_json(j) + "\n",
          ok ? kExitSuccess : kExitFailure};
}

Output cmd_sweep(const Config& config) {
  require_format(config, {"csv", "json"});
  const std::vector<long> dims = parse_dimension_range(config.n_range);
  const std::vector<double> ps = parse_range(config.p_range);
  const std::vector<double> lambdas = parse_range(config.lambda_range);
  const RadialDensity f = make_density(config);
  const std::string construction =
      config.construction.empty() ? std::string("theorem1") : config.construction;
  const bool uses_R = construction == "unitball" || construction == "exact";
  const std::vector<double> radii = uses_R ? parse_range(config.R_range) : std::vector<double>{0.0};

  const std::vector<std::string> header{"n",          "lambda",     "p",          "R",
                                        "r",          "alpha",      "log_alpha",  "logT_lower",
                                        "logT_exact", "logT_upper", "slope",      "error"};
  std::vector<std::vector<std::string>> rows;
  for (double lambda : lambdas) {
    for (double p : ps) {
      for (double radius : radii) {
        bool have_previous = false;
        double previous_lower = 0.0;
        long previous_n = 0;
        for (long n : dims) {
          std::vector<std::string> row(header.size());
          row[0] = std::to_string(n);
          row[1] = format_double(lambda);
          row[2] = format_double(p);
          try {
            const std::optional<double> R = uses_R ? std::optional<double>(radius) : std::nullopt;
            const BoundReport report = build_report(f, construction, Dimension(n), p, lambda, R,
                                                    std::nullopt, config.exact_threshold);
            row[3] = format_double(report.R);
            row[4] = format_double(report.r);
            row[5] = format_double(report.alpha);
            row[6] = format_double(std::log(report.alpha));
            row[7] = format_double(report.logT_lower);
            if (report.logT_exact) row[8] = format_double(*report.logT_exact);
            if (const auto upper = report.term("logT_upper")) {
              row[9] = format_double(*upper);
            } else if (construction == "gaussian") {
              row[9] = format_double(
                  gaussian_upper_construction(Dimension(n), p, report.R, report.r));
            }
            if (have_previous) {
              row[10] = format_double((report.logT_lower - previous_lower) /
                                      static_cast<double>(n - previous_n));
            }
            previous_lower = report.logT_lower;
            have_previous = true;
            previous_n = n;
          } catch (const UsageError&) {
            throw;
          } catch (const std::exception& e) {
            row[11] = e.what();
            have_previous = false;
          }
          rows.push_back(std::move(row));
        }
      }
    }
  }
  if (config.format == "json") {
    Json array = Json::array();
    for (const auto& row : rows) {
      Json item;
      for (std::size_t i = 0; i < header.size(); ++i) item[header[i]] = row[i];
      array.push_back(item);
    }
    return {dump_json(array) + "\n"};
  }
  std::ostringstream out;
  write_csv(out,
            {{"command", "sweep"},
             {"measure", f.name()},
             {"construction", construction},
             {"n", config.n_range},
             {"p", config.p_range},
             {"lambda", config.lambda_range},
             {"R", uses_R ? config.R_range : std::string("derived")},
             {"exact_threshold", std::to_string(config.exact_threshold)}},
            header, rows);
  return {out.str()};
}

VerifyOptions verify_options(const Config& config) {
  VerifyOptions options;
  options.samples = config.samples;
  options.seed = config.seed;
  if (config.grid) options.maximal_grid = config.grid;
  return options;
}

Output cmd_verify(const Config& config) {
  require_format(config, {"text", "json"});
  const auto names = verify_suite_names();
  if (std::find(names.begin(), names.end(), config.target) == names.end()) {
    throw UsageError("unknown verify suite: " + config.target);
  }
  const auto checks = run_verify_suite(config.target, verify_options(config));
  const bool ok = std::all_of(checks.begin(), checks.end(),
                              [](const CheckResult& c) { return c.passed; });
  std::ostringstream out;
  if (config.format == "json") {
    Json j;
    j["suite"] = config.target;
    Json list = Json::array();
    for (const auto& c : checks) {
      list.push_back(Json{{"suite", c.suite}, {"name", c.name}, {"passed", c.passed},
                          {"detail", c.detail}, {"reproducer", c.reproducer}});
    }
    j["checks"] = list;
    j["ok"] = ok;
    out << dump_json(j) << '\n';
  } else {
    for (const auto& c : checks) {
      out << (c.passed ? "PASS " : "FAIL ") << c.suite << ' ' << c.name << ": " << c.detail
          << '\n';
      if (!c.passed && !c.reproducer.empty()) out << "  reproduce: " << c.reproducer << '\n';
    }
    out << (ok ? "ALL PASS" : "SOME CHECKS FAILED") << '\n';
  }
  return {out.str(), ok ? kExitSuccess : kExitFailure};
}

Output cmd_oracle(const Config& config) {
  const RadialDensity f = make_density(config);
  const Dimension n = require_dimension(config.n);
  MaximalOptions maximal;
  if (config.grid) maximal.grid = config.grid;
  if (config.tol > 0.0) maximal.tol = config.tol;

  if (config.target == "profile") {
    require_format(config, {"csv", "json"});
    const TestFunctionSpec g(require(config.r, "--r"));
    ProfileOptions options;
    options.points = config.points;
    options.maximal = maximal;
    if (config.R) {
      options.focus = *config.R;
      options.extra_radii = {*config.R};
    }
    const RadialProfile profile = maximal_function_profile(f, n, g, options);
    if (config.format == "json") {
      Json j;
      j["density"] = f.name();
      j["n"] = n.value();
      j["r"] = g.r;
      j["grid"] = profile.grid;
      j["values"] = profile.values;
      return {dump_json(j) + "\n"};
    }
    std::ostringstream out;
    write_profile_csv(out, profile,
                      {{"density", f.name()},
                       {"n", std::to_string(n.value())},
                       {"r", format_double(g.r)},
                       {"grid", std::to_string(options.points) + " points, quadratic grading" +
                                    (config.R ? ", focus R=" + format_double(*config.R) : "")},
                       {"t_grid", std::to_string(maximal.grid)},
                       {"seed", "none"}});
    return {out.str()};
  }
  require_format(config, {"json"});
  if (config.target == "constant") {
    const TestFunctionSpec g(require(config.r, "--r"));
    const double p = require(config.p, "--p");
    ProfileOptions options;
    options.points = config.points;
    options.maximal = maximal;
    if (config.R) {
      options.focus = *config.R;
      options.extra_radii = {*config.R};
    }
    Json j;
    j["density"] = f.name();
    j["n"] = n.value();
    j["p"] = p;
    j["r"] = g.r;
    j["value"] = empirical_constant_lower_bound(f, n, g, p, options);
    if (config.R) {
      j["R"] = *config.R;
      j["T_exact"] = T_exact(f, n, p, *config.R, g.r).value();
    }
    return {dump_json(j) + "\n"};
  }
  if (config.target == "montecarlo") {
    const double d = require(config.d, "--d");
    const double t = require(config.t, "--t");
    const MonteCarloResult mc = monte_carlo_ball_measure(f, n, d, t, config.samples, config.seed);
    Json j = to_json(mc);
    const double exact = std::exp(off_center_ball_measure(f, GeometrySpec(n, d, t)).log() -
                                  log_total_measure(f, n).log());
    j["quadrature"] = exact;
    j["z"] = mc.standard_error > 0.0 ? (mc.estimate - exact) / mc.standard_error : 0.0;
    j["seed"] = config.seed;
    return {dump_json(j) + "\n"};
  }
  if (config.target == "inclusion") {
    MaximalOptions options = maximal;
    const InclusionReport report = verify_level_set_inclusion(
        f, n, require(config.R, "--R"), require(config.r, "--r"), 64, options);
    return {dump_json(to_json(report)) + "\n", report.all_ok() ? kExitSuccess : kExitFailure};
  }
  throw UsageError("unknown oracle command: " + config.target);
}

void add_output_options(CLI::App* cmd, Config& config, const std::string& default_format) {
  config.format = default_format;
  cmd->add_option("--format", config.format, "Output format")->capture_default_str();
  cmd->add_option("--output,-o", config.output, "Write output to this file instead of stdout");
}

void add_measure_options(CLI::App* cmd, Config& config) {
  cmd->add_option("--measure", config.measure, "gaussian | unitball | lebesgue | tabulated")
      ->capture_default_str();
  cmd->add_option("--table", config.table, "Tabulated density file (\"s logf\" lines)");
}

}  // namespace

std::vector<double> parse_range(const std::string& text) {
  if (text.empty()) throw UsageError("empty range");
  std::vector<double> values;
  if (text.find(':') != std::string::npos) {
    const auto parts = split(text, ':');
    if (parts.size() != 3) throw UsageError("range must be a:b:step or a:b:xF: " + text);
    const double lo = parse_number(parts[0]);
    const double hi = parse_number(parts[1]);
    if (hi < lo) throw UsageError("range end below start: " + text);
    if (!parts[2].empty() && parts[2][0] == 'x') {
      const double factor = parse_number(parts[2].substr(1));
      if (!(factor > 1.0) || !(lo > 0.0)) throw UsageError("geometric range needs a > 0, F > 1");
      for (double v = lo; v <= hi * (1.0 + 1e-12); v *= factor) values.push_back(v);
    } else {
      const double step = parse_number(parts[2]);
      if (!(step > 0.0)) throw UsageError("range step must be positive: " + text);
      const auto count = static_cast<long>(std::floor((hi - lo) / step + 1e-9));
      for (long i = 0; i <= count; ++i) values.push_back(lo + step * static_cast<double>(i));
    }
  } else {
    for (const auto& part : split(text, ',')) values.push_back(parse_number(part));
  }
  if (values.empty()) throw UsageError("empty range: " + text);
  return values;
}

std::vector<long> parse_dimension_range(const std::string& text) {
  std::vector<long> dims;
  for (double v : parse_range(text)) {
    const double rounded = std::round(v);
    if (rounded < 1.0 || std::abs(v - rounded) > 1e-9 * std::max(1.0, rounded)) {
      throw UsageError("dimensions must be positive integers: " + text);
    }
    dims.push_back(static_cast<long>(rounded));
  }
  return dims;
}

int run_cli(const std::vector<std::string>& args, std::ostream& out, std::ostream& err) {
  CLI::App app{"Lower bounds for centered maximal operators of radial measures"};
  app.name("radmax");
  app.require_subcommand(1);
  Config config;

  auto* p0 = app.add_subcommand("p0", "Critical exponent below which a construction grows");
  p0->add_option("target", config.target, "general | gaussian-lower | gaussian-upper | unitball")
      ->required();
  p0->add_option("--grid", config.grid, "Pre-scan grid size (default 2048)");
  p0->add_option("--tol", config.tol, "Golden-section tolerance in lambda (default 1e-12)");
  add_output_options(p0, config, "json");

  auto* bound = app.add_subcommand("bound", "Lower bound report for one configuration");
  add_measure_options(bound, config);
  bound->add_option("--n", config.n, "Dimension")->required();
  bound->add_option("--p", config.p, "Exponent p >= 1")->required();
  bound->add_option("--lambda", config.lambda, "Radius ratio r/R");
  bound->add_option("--R", config.R, "Outer radius");
  bound->add_option("--r", config.r, "Inner radius");
  bound->add_option("--construction", config.construction,
                    "theorem1 | gaussian | unitball | exact (default: theorem1, or exact/unitball "
                    "when --R is given)");
  bound->add_option("--exact-threshold", config.exact_threshold,
                    "Largest n with exact quadrature of T")
      ->capture_default_str();
  add_output_options(bound, config, "json");

  auto* sweep = app.add_subcommand("sweep", "Bounds over a grid of (lambda, p, R, n)");
  add_measure_options(sweep, config);
  sweep->add_option("--n", config.n_range, "Dimensions: a:b:step, a:b:xF or a,b,c")->required();
  sweep->add_option("--p", config.p_range, "Exponents (range)")->required();
  sweep->add_option("--lambda", config.lambda_range, "Radius ratios (range)")
      ->capture_default_str();
  sweep->add_option("--R", config.R_range, "Outer radii for unitball/exact (range)")
      ->capture_default_str();
  sweep->add_option("--construction", config.construction,
                    "theorem1 | gaussian | unitball | exact (default theorem1)");
  sweep->add_option("--exact-threshold", config.exact_threshold,
                    "Largest n with exact quadrature of T")
      ->capture_default_str();
  add_output_options(sweep, config, "csv");

  auto* verify = app.add_subcommand("verify", "Run an invariant suite");
  verify->add_option("suite", config.target,
                     "spheres | gaussian-lemmas | remark | inclusion | montecarlo | all")
      ->required();
  verify->add_option("--samples", config.samples, "Monte Carlo samples per configuration")
      ->capture_default_str();
  verify->add_option("--seed", config.seed, "Monte Carlo seed")->capture_default_str();
  verify->add_option("--grid", config.grid, "Maximal-function t-grid size (default 512)");
  add_output_options(verify, config, "text");

  auto* oracle = app.add_subcommand("oracle", "Brute-force low-dimensional checks (n <= 6)");
  oracle->add_option("what", config.target, "profile | constant | montecarlo | inclusion")
      ->required();
  add_measure_options(oracle, config);
  oracle->add_option("--n", config.n, "Dimension")->required();
  oracle->add_option("--p", config.p, "Exponent p >= 1");
  oracle->add_option("--R", config.R, "Outer radius");
  oracle->add_option("--r", config.r, "Test function radius");
  oracle->add_option("--d", config.d, "Ball centre distance (montecarlo)");
  oracle->add_option("--t", config.t, "Ball radius (montecarlo)");
  oracle->add_option("--samples", config.samples, "Monte Carlo samples")->capture_default_str();
  oracle->add_option("--seed", config.seed, "Monte Carlo seed")->capture_default_str();
  oracle->add_option("--points", config.points, "Profile grid points")->capture_default_str();
  oracle->add_option("--grid", config.grid, "Maximal-function t-grid size (default 512)");
  oracle->add_option("--tol", config.tol, "Golden-section tolerance in log t (default 1e-10)");
  add_output_options(oracle, config, "json");
  // Output format defaults differ per command; reset after parsing.
  config.format.clear();

  std::vector<std::string> argv_storage{"radmax"};
  argv_storage.insert(argv_storage.end(), args.begin(), args.end());
  std::vector<const char*> argv;
  for (const auto& a : argv_storage) argv.push_back(a.c_str());

  try {
    app.parse(static_cast<int>(argv.size()), argv.data());
  } catch (const CLI::CallForHelp&) {
    out << app.help();
    return kExitSuccess;
  } catch (const CLI::CallForAllHelp&) {
    out << app.help("", CLI::AppFormatMode::All);
    return kExitSuccess;
  } catch (const CLI::ParseError& e) {
    err << "usage error: " << e.what() << '\n';
    return kExitFailure;
  }

  try {
    Output result;
    if (p0->parsed()) {
      if (config.format.empty()) config.format = "json";
      result = cmd_p0(config);
    } else if (bound->parsed()) {
      if (config.format.empty()) config.format = "json";
      result = cmd_bound(config);
    } else if (sweep->parsed()) {
      if (config.format.empty()) config.format = "csv";
      result = cmd_sweep(config);
    } else if (verify->parsed()) {
      if (config.format.empty()) config.format = "text";
      result = cmd_verify(config);
    } else {
      if (config.format.empty()) config.format = config.target == "profile" ? "csv" : "json";
      result = cmd_oracle(config);
    }
    emit(config, result, out);
    return result.code;
  } catch (const UsageError& e) {
    err << "usage error: " << e.what() << '\n';
    return kExitFailure;
  } catch (const NonFiniteMeasure& e) {
    err << "NonFiniteMeasure: " << e.what() << '\n';
  } catch (const NoBalancedRadius& e) {
    err << "NoBalancedRadius: " << e.what() << '\n';
  } catch (const DomainError& e) {
    err << "DomainError: " << e.what() << '\n';
  } catch (const BracketError& e) {
    err << "BracketError: " << e.what() << '\n';
  } catch (const NumericalError& e) {
    err << "NumericalError: " << e.what() << '\n';
  } catch (const std::exception& e) {
    err << "error: " << e.what() << '\n';
  }
  return kExitNumerical;
}

}  // namespace radmax
