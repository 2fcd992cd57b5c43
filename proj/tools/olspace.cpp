// olspace: classify | norm | table | verify

#include <cmath>
#include <cstdio>
#include <fstream>
#include <iostream>
#include <set>
#include <sstream>
#include <string>

#include <CLI11.hpp>

#include "olspace/classifier.hpp"
#include "olspace/errors.hpp"
#include "olspace/json_io.hpp"
#include "olspace/norm.hpp"
#include "olspace/verify.hpp"

using namespace olspace;

namespace {

constexpr int kUsage = 2;

std::string fixed12(double x) {
  if (std::isinf(x)) return "inf";
  char buf[64];
  std::snprintf(buf, sizeof buf, "%.12f", x);
  return buf;
}

struct UsageError : std::runtime_error {
  using std::runtime_error::runtime_error;
};

int cmd_classify(const std::string& config, const std::string& format) {
  const SpaceSpec spec = io::load_spec(config);
  const ClassificationReport report = classify(spec);
  if (format == "table") {
    std::cout << io::to_table(report);
  } else {
    std::cout << io::to_json(report).dump(2) << '\n';
  }
  return 0;
}

int cmd_norm(const std::string& config, const std::string& input, const std::string& which) {
  const SpaceSpec spec = io::load_spec(config);
  std::ifstream in(input);
  if (!in) throw UsageError("cannot open input '" + input + "'");
  const StepFunction f = io::step_function_from_csv(in, spec.kind());
  double value;
  if (which == "orlicz") {
    if (spec.side != Side::m) throw UsageError("--norm orlicz needs an M-side spec (\"side\": \"m\")");
    value = orlicz_amemiya_norm(spec.phi, spec.weight, f);
  } else {
    value = norm(spec, f);
  }
  std::cout << fixed12(value) << '\n';
  return 0;
}

std::vector<double> table_grid(double tmin, double tmax, int points, bool sequence) {
  std::vector<double> t;
  if (sequence) {
    const double lo = std::ceil(tmin), hi = std::floor(tmax);
    if (lo > hi) throw UsageError("no integer t in [tmin, tmax]");
    std::set<double> picked;
    for (int i = 0; i < points; ++i) {
      const double s = points == 1 ? 0.0 : static_cast<double>(i) / (points - 1);
      picked.insert(std::round(lo * std::pow(hi / lo, s)));
    }
    t.assign(picked.begin(), picked.end());
  } else {
    for (int i = 0; i < points; ++i) {
      t.push_back(i == points - 1 ? tmax : tmin * std::pow(tmax / tmin, static_cast<double>(i) / (points - 1)));
    }
  }
  return t;
}

int cmd_table(const std::string& config, double tmin, double tmax, int points, const std::string& out) {
  const SpaceSpec spec = io::load_spec(config);
  if (!(tmin > 0.0 && tmin < tmax && tmax < spec.gamma())) {
    throw UsageError("need 0 < tmin < tmax < gamma");
  }
  if (points < 2) throw UsageError("need --points >= 2");

  // Columns are the Lambda space of phi and the M space of its conjugate.
  ExtendedOrliczFunction lambda_phi = spec.phi;
  ExtendedOrliczFunction m_phi = spec.phi;
  if (spec.side == Side::lambda) {
    m_phi = conjugate(OrliczFunction::from_extended(spec.phi));
  } else {
    if (!spec.phi.is_finite()) throw UsageError("table: the conjugate of an infinite-valued M-side phi is not available");
    lambda_phi = conjugate(OrliczFunction::from_extended(spec.phi));
    if (!lambda_phi.is_finite()) throw UsageError("table: the Lambda-side partner is not finite-valued");
  }

  std::ofstream os(out);
  if (!os) throw UsageError("cannot write '" + out + "'");
  os << "t,phi_Lambda,phi_M\n";
  for (double t : table_grid(tmin, tmax, points, spec.is_sequence())) {
    os << fixed12(t) << ',' << fixed12(fundamental_lambda(lambda_phi, spec.weight, t)) << ','
       << fixed12(fundamental_m(m_phi, spec.weight, t)) << '\n';
  }
  return 0;
}

int cmd_verify(const std::string& config, const std::string& suite, std::uint64_t seed, std::size_t budget,
               double tol_scale, unsigned jobs, const std::string& out) {
  if (!verify::is_suite(suite)) throw UsageError("unknown suite '" + suite + "'");
  verify::SuiteOptions opts;
  opts.seed = seed;
  opts.budget = budget;
  opts.tol_scale = tol_scale;
  opts.jobs = jobs;
  if (!config.empty()) opts.extra_spec = io::load_spec(config);
  const auto results = verify::run_suite(suite, opts);
  nlohmann::json report = verify::to_json(results);
  report["suite"] = suite;
  report["seed"] = seed;
  report["budget"] = budget;
  report["tol_scale"] = tol_scale;
  const std::string text = report.dump(2) + "\n";
  if (out.empty()) {
    std::cout << text;
  } else {
    std::ofstream os(out);
    if (!os) throw UsageError("cannot write '" + out + "'");
    os << text;
  }
  for (const auto& r : results) {
    if (!r.passed) std::cerr << "FAILED " << r.name << '\n';
  }
  return report["passed"].get<bool>() ? 0 : 1;
}

}  // namespace

int main(int argc, char** argv) {
  CLI::App app{"Orlicz-Lorentz space toolkit"};
  app.require_subcommand(1);

  std::string config, format = "json", input, which = "luxemburg", out, suite = "all";
  double tmin = 0.0, tmax = 0.0, tol_scale = 1.0;
  int points = 0;
  std::uint64_t seed = 42;
  std::size_t budget = 1000;
  unsigned jobs = 1;

  auto* classify_cmd = app.add_subcommand("classify", "Classify the geometric properties of a space");
  classify_cmd->add_option("--config", config, "Space spec JSON")->required();
  classify_cmd->add_option("--format", format)->check(CLI::IsMember({"json", "table"}));

  auto* norm_cmd = app.add_subcommand("norm", "Norm of a step function read from CSV");
  norm_cmd->add_option("--config", config, "Space spec JSON")->required();
  norm_cmd->add_option("--input", input, "CSV rows length,value")->required();
  norm_cmd->add_option("--norm", which)->check(CLI::IsMember({"luxemburg", "orlicz"}));

  auto* table_cmd = app.add_subcommand("table", "Tabulate fundamental functions to CSV");
  table_cmd->add_option("--config", config, "Space spec JSON")->required();
  table_cmd->add_option("--tmin", tmin)->required();
  table_cmd->add_option("--tmax", tmax)->required();
  table_cmd->add_option("--points", points)->required();
  table_cmd->add_option("--out", out)->required();

  auto* verify_cmd = app.add_subcommand("verify", "Run verification suites");
  verify_cmd->add_option("--config", config, "Extra Lambda-side spec for the axiom checks");
  verify_cmd->add_option("--suite", suite);
  verify_cmd->add_option("--seed", seed);
  verify_cmd->add_option("--budget", budget);
  verify_cmd->add_option("--tol-scale", tol_scale)->check(CLI::PositiveNumber);
  verify_cmd->add_option("--jobs", jobs)->check(CLI::PositiveNumber);
  verify_cmd->add_option("--out", out);

  try {
    app.parse(argc, argv);
  } catch (const CLI::ParseError& e) {
    const int code = app.exit(e);
    return code == 0 ? 0 : kUsage;
  }

  try {
    if (*classify_cmd) return cmd_classify(config, format);
    if (*norm_cmd) return cmd_norm(config, input, which);
    if (*table_cmd) return cmd_table(config, tmin, tmax, points, out);
    if (*verify_cmd) return cmd_verify(config, suite, seed, budget, tol_scale, jobs, out);
  } catch (const UsageError& e) {
    std::cerr << "error: " << e.what() << '\n';
    return kUsage;
  } catch (const std::logic_error& e) {
    // InvalidInput, DomainError, PreconditionError and Unsupported
    std::cerr << "error: " << e.what() << '\n';
    return kUsage;
  } catch (const std::exception& e) {
    std::cerr << "error: " << e.what() << '\n';
    return 1;
  }
  return kUsage;
}
