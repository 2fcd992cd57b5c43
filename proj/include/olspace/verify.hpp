#pragma once

#include <cstdint>
#include <optional>
#include <random>
#include <string>
#include <vector>

#include <json.hpp>

#include "olspace/modular.hpp"
#include "olspace/norm.hpp"

namespace olspace::verify {

using nlohmann::json;

struct CheckResult {
  std::string name;
  std::size_t cases_run = 0;
  double max_abs_err = 0.0;
  double max_rel_err = 0.0;
  double tolerance = 0.0;
  bool passed = true;
  /// "relative", "absolute", "bound" (violation of a one-sided inequality) or "count".
  std::string mode = "relative";
  /// Inputs of the case with the largest error, enough to re-run it.
  json worst_case = json::object();
};

json to_json(const CheckResult& r);
json to_json(const std::vector<CheckResult>& results);

/// Deterministic random stream for one check: mt19937_64 seeded with
/// seed ^ FNV-1a(check name).
class Rng {
 public:
  Rng(std::uint64_t seed, const std::string& stream);
  double uniform();  // [0, 1)
  double uniform(double lo, double hi);
  double log_uniform(double lo, double hi);
  /// Integer in [lo, hi].
  int integer(int lo, int hi);
  bool coin();

 private:
  std::mt19937_64 engine_;
};

// Building-block checks --------------------------------------------------------

/// |P - Q| / (1 + Q) over the (t, c) grid for c chi_(0,t), plus the Jensen bound
/// objective(v) >= Q at random admissible v.
CheckResult check_pq_indicators(const std::string& name, const ExtendedOrliczFunction& phi, const Weight& w,
                                const std::vector<double>& t_grid, const std::vector<std::vector<double>>& c_grid,
                                std::uint64_t seed, double tolerance = 1e-5);

/// fundamental_m against the Luxemburg norm of chi_(0,t) on the Q modular.
CheckResult check_fundamental_m(const std::string& name, const ExtendedOrliczFunction& phi, const Weight& w,
                                const std::vector<double>& t_grid, double tolerance = 1e-7);

/// Constants of the two-sided L1 comparison for phi not an N-function at infinity.
struct L1Constants {
  double K = 0.0;   // lim phi(u)/u
  double M = 0.0;   // K / 2
  double u0 = 0.0;  // phi(u) >= M u for u >= u0
  double C = 0.0;   // 1/M + u0 W(gamma)
  double c = 0.0;   // lim W(t)/t
  double lower = 0.0;  // W(gamma) / (C gamma)
  double upper = 0.0;  // c K
};
/// Throws PreconditionError unless gamma < inf, phi is not an N-function at
/// infinity and 0 < lim W(t)/t < inf.
L1Constants l1_constants(const OrliczFunction& phi, const Weight& w);

CheckResult check_l1_equivalence(const std::string& name, const OrliczFunction& phi, const Weight& w,
                                 std::size_t samples, std::uint64_t seed, double tolerance = 1e-12);

struct WitnessResult {
  StepFunction x;
  double a = 0.0;
  double support = 0.0;  // m(A) with W(m(A)) = 1 / phi(a)
  double norm_x = 0.0;
  double delta_hat = 0.0;
  std::size_t samples = 0;
  /// Sample attaining max min(||x + y||, ||x - y||).
  json worst_y = json::object();
};

/// x = a chi_(0, m(A)) and delta_hat = 2 - max_y min(||x + y||, ||x - y||) over
/// random unit y. Throws PreconditionError when a <= d_phi (in particular for
/// linear phi) or m(A) >= gamma.
WitnessResult nonsquare_witness(const OrliczFunction& phi, const Weight& w, double a, std::size_t samples,
                                std::uint64_t seed);

// Suites ----------------------------------------------------------------------

struct SuiteOptions {
  std::uint64_t seed = 42;
  std::size_t budget = 1000;
  double tol_scale = 1.0;
  unsigned jobs = 1;
  /// Extra Lambda-side spec folded into the norm-axiom and witness checks.
  std::optional<SpaceSpec> extra_spec;
};

const std::vector<std::string>& suite_names();
bool is_suite(const std::string& name);

/// Runs the named suite ("all" runs everything). Throws InvalidInput for an
/// unknown suite name. Results come back in a fixed order regardless of jobs.
std::vector<CheckResult> run_suite(const std::string& suite, const SuiteOptions& options);

/// Labelled specs used by the classifier regression matrix.
struct MatrixRow {
  std::string label;
  SpaceSpec spec;
};
std::vector<MatrixRow> classifier_matrix();

}  // namespace olspace::verify
