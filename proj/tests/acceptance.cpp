// One line per acceptance criterion; exit status 1 if any fails.

#include <chrono>
#include <cstdio>
#include <cstdlib>
#include <filesystem>
#include <fstream>
#include <functional>
#include <iostream>
#include <sstream>
#include <string>

#include "olspace/classifier.hpp"
#include "olspace/errors.hpp"
#include "olspace/json_io.hpp"
#include "olspace/verify.hpp"

using namespace olspace;
using namespace olspace::verify;

namespace {

struct Outcome {
  bool ok = true;
  std::string detail;
};

bool suite_passes(const std::string& suite, std::string& detail) {
  SuiteOptions opts;
  opts.seed = 42;
  opts.budget = 1000;
  bool ok = true;
  std::ostringstream os;
  for (const auto& r : run_suite(suite, opts)) {
    if (!r.passed) {
      ok = false;
      os << " failed:" << r.name << "(err " << (r.mode == "absolute" || r.mode == "count" ? r.max_abs_err : r.max_rel_err)
         << ")";
    }
  }
  detail += os.str();
  return ok;
}

Outcome suite_only(const std::string& suite) {
  Outcome o;
  o.ok = suite_passes(suite, o.detail);
  return o;
}

Outcome witness() {
  Outcome o;
  o.ok = suite_passes("witness", o.detail);
  std::ifstream in(OLSPACE_FIXTURES "/witness_delta_hat.json");
  const auto fx = nlohmann::json::parse(in);
  const std::size_t samples = fx["samples"].get<std::size_t>();
  const std::uint64_t seed = fx["seed"].get<std::uint64_t>();
  const double a = fx["a"].get<double>();
  const std::vector<std::pair<OrliczFunction, Weight>> specs{{OrliczFunction::power(2.0), Weight::constant(1.0)},
                                                             {OrliczFunction::power(3.0), Weight::power_decay(0.5)}};
  for (std::size_t i = 0; i < specs.size(); ++i) {
    const auto first = nonsquare_witness(specs[i].first, specs[i].second, a, samples, seed);
    const auto again = nonsquare_witness(specs[i].first, specs[i].second, a, samples, seed);
    const double expect = fx["cases"][i]["delta_hat"].get<double>();
    const bool good = std::abs(first.norm_x - 1.0) <= 1e-10 && first.delta_hat > 0.0 &&
                      first.delta_hat == again.delta_hat && first.delta_hat == expect;
    if (!good) {
      o.ok = false;
      char buf[160];
      std::snprintf(buf, sizeof buf, " %s: delta_hat %.17g vs fixture %.17g, ||x|| %.17g",
                    fx["cases"][i]["label"].get<std::string>().c_str(), first.delta_hat, expect, first.norm_x);
      o.detail += buf;
    }
  }
  try {
    nonsquare_witness(OrliczFunction::linear(1.0), Weight::constant(1.0), 1.0, 1, seed);
    o.ok = false;
    o.detail += " linear phi was not refused";
  } catch (const PreconditionError&) {
  }
  return o;
}

Outcome classifier() {
  Outcome o;
  o.ok = suite_passes("classifier", o.detail);
  std::ifstream in(OLSPACE_FIXTURES "/classifier_matrix.json");
  const auto fx = nlohmann::json::parse(in);
  const auto matrix = classifier_matrix();
  if (fx.size() != matrix.size()) {
    o.ok = false;
    o.detail += " fixture size mismatch";
    return o;
  }
  for (std::size_t i = 0; i < matrix.size(); ++i) {
    const auto rep = classify(io::spec_from_json(fx[i]["spec"]));
    for (const auto& e : rep.entries) {
      const std::string name(to_string(e.property));
      if (to_string(e.verdict) != fx[i]["expected"][name].get<std::string>()) {
        o.ok = false;
        o.detail += " " + fx[i]["label"].get<std::string>() + ":" + name;
      }
    }
  }
  return o;
}

std::string slurp(const std::string& path) {
  std::ifstream in(path, std::ios::binary);
  std::ostringstream os;
  os << in.rdbuf();
  return os.str();
}

Outcome determinism() {
  Outcome o;
  const auto dir = std::filesystem::temp_directory_path();
  const std::string a = (dir / "olspace_acceptance_run1.json").string();
  const std::string b = (dir / "olspace_acceptance_run2.json").string();
  const std::string base = std::string("\"") + OLSPACE_BIN + "\" verify --suite all --seed 42 --out ";
  const int ra = std::system((base + "\"" + a + "\"").c_str());
  const int rb = std::system((base + "\"" + b + "\"").c_str());
  const std::string ja = slurp(a), jb = slurp(b);
  o.ok = ra == 0 && rb == 0 && !ja.empty() && ja == jb;
  if (ra != 0 || rb != 0) o.detail += " nonzero exit";
  if (ja != jb) o.detail += " reports differ";
  std::filesystem::remove(a);
  std::filesystem::remove(b);
  return o;
}

}  // namespace

int main() {
  struct Criterion {
    int id;
    std::string what;
    double limit_s;
    std::function<Outcome()> run;
  };
  const std::vector<Criterion> criteria{
      {1, "P = Q on indicators, 10x10 grid, 3 pairs, tol 1e-5", 60, [] { return suite_only("pq"); }},
      {2, "fundamental function of M vs bisection oracle, 50 points, 3 specs, tol 1e-7", 10,
       [] { return suite_only("fundamental"); }},
      {3, "conjugate involution 1e-8 and Young inequality on 1e4 pairs", 5, [] { return suite_only("conjugate"); }},
      {4, "level function identities, mass, monotonicity, brute force", 60, [] { return suite_only("level"); }},
      {5, "norm axioms on 1e3 cases per spec", 30, [] { return suite_only("norms"); }},
      {6, "Lorentz distribution identity, 200 functions, 2 weights, exact", 5, [] { return suite_only("lorentz"); }},
      {7, "L1 sandwich with proof constants, 500 functions per spec", 30, [] { return suite_only("l1"); }},
      {8, "nonsquare witness, ||x|| = 1, delta_hat > 0, fixture reproduced", 120, witness},
      {9, "classifier coherence, matrix fixture, Delta2 flip", 5, classifier},
      {10, "verify --suite all --seed 42 twice gives identical JSON", 600, determinism},
  };

  int failed = 0;
  for (const auto& c : criteria) {
    const auto t0 = std::chrono::steady_clock::now();
    Outcome o;
    try {
      o = c.run();
    } catch (const std::exception& e) {
      o.ok = false;
      o.detail = std::string(" exception: ") + e.what();
    }
    const double secs = std::chrono::duration<double>(std::chrono::steady_clock::now() - t0).count();
    const bool in_time = secs <= c.limit_s;
    const bool pass = o.ok && in_time;
    if (!pass) ++failed;
    std::printf("[%s] criterion %d: %s (%.2f s, limit %.0f s)%s%s\n", pass ? "PASS" : "FAIL", c.id, c.what.c_str(), secs,
                c.limit_s, in_time ? "" : " over time limit", o.detail.c_str());
    std::fflush(stdout);
  }
  std::printf("%d of %zu criteria passed\n", static_cast<int>(criteria.size()) - failed, criteria.size());
  return failed == 0 ? 0 : 1;
}
