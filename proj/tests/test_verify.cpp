#include <doctest.h>

#include <fstream>

#include "olspace/errors.hpp"
#include "olspace/verify.hpp"

using namespace olspace;
using namespace olspace::verify;

TEST_CASE("random streams depend only on seed and name") {
  Rng a(42, "x"), b(42, "x"), c(42, "y");
  const double va = a.uniform();
  CHECK(va == b.uniform());
  CHECK(va != c.uniform());
  for (int i = 0; i < 1000; ++i) {
    const int k = a.integer(2, 5);
    CHECK(k >= 2);
    CHECK(k <= 5);
  }
}

TEST_CASE("L1 comparison constants") {
  const auto k = l1_constants(OrliczFunction::linear(1.0), Weight::constant(1.0, 1.0));
  CHECK(k.K == 1.0);
  CHECK(k.u0 == 0.0);
  CHECK(k.C == 2.0);
  CHECK(k.lower == 0.5);
  CHECK(k.upper == 1.0);

  // phi = u^2 on [0,1], then 2u - 1: K = 2, M = 1, phi(u) >= u from u0 = 1
  const auto psl = l1_constants(OrliczFunction::power_splice_linear(1.0, 2.0, 2.0), Weight::constant(1.0, 1.0));
  CHECK(psl.K == 2.0);
  CHECK(psl.u0 == doctest::Approx(1.0));
  const auto phi = OrliczFunction::power_splice_linear(1.0, 2.0, 2.0);
  CHECK(phi(psl.u0) >= psl.M * psl.u0 - 1e-12);
  CHECK(phi(0.99 * psl.u0) < psl.M * 0.99 * psl.u0);

  CHECK_THROWS_AS(l1_constants(OrliczFunction::power(2.0), Weight::constant(1.0, 1.0)), PreconditionError);
  CHECK_THROWS_AS(l1_constants(OrliczFunction::linear(1.0), Weight::constant(1.0)), PreconditionError);
  CHECK_THROWS_AS(l1_constants(OrliczFunction::linear(1.0), Weight::power_decay(0.5, 1.0)), PreconditionError);
}

TEST_CASE("L1 sandwich on the indicator of the whole interval") {
  const auto phi = OrliczFunction::power_splice_linear(1.0, 2.0, 2.0);
  const auto w = Weight::constant(1.0, 1.0);
  const auto k = l1_constants(phi, w);
  const double n = lambda_norm(phi, w, StepFunction::indicator(1.0));
  CHECK(n >= k.lower);
  CHECK(n <= k.upper);
}

TEST_CASE("witness construction") {
  const auto r = nonsquare_witness(OrliczFunction::power(2.0), Weight::constant(1.0), 1.0, 200, 42);
  CHECK(r.support == doctest::Approx(1.0));
  CHECK(r.norm_x == doctest::Approx(1.0).epsilon(1e-10));
  CHECK(r.delta_hat > 0.0);
  CHECK(r.delta_hat <= 1.0);
  CHECK_THROWS_AS(nonsquare_witness(OrliczFunction::linear(1.0), Weight::constant(1.0), 1.0, 10, 42),
                  PreconditionError);
  CHECK_THROWS_AS(nonsquare_witness(OrliczFunction::linear_splice_power(1.0, 2.0), Weight::constant(1.0), 0.5, 10, 42),
                  PreconditionError);
  CHECK_THROWS_AS(nonsquare_witness(OrliczFunction::power(2.0), Weight::constant(1.0, 0.5), 1.0, 10, 42),
                  PreconditionError);
}

TEST_CASE("suite dispatch") {
  CHECK(is_suite("all"));
  CHECK(is_suite("pq"));
  CHECK_FALSE(is_suite("bogus"));
  CHECK_THROWS_AS(run_suite("bogus", {}), InvalidInput);
  SuiteOptions o;
  o.budget = 20;
  const auto small = run_suite("pq", o);
  CHECK(small.size() == 3);
  for (const auto& r : small) CHECK(r.passed);
}

TEST_CASE("check results re-run to the same error") {
  SuiteOptions o;
  o.budget = 50;
  o.jobs = 3;
  const auto a = to_json(run_suite("level", o));
  o.jobs = 1;
  const auto b = to_json(run_suite("level", o));
  CHECK(a == b);
}

TEST_CASE("a failing check reports its worst case") {
  const auto phi = conjugate(OrliczFunction::power(2.0));
  const auto w = Weight::constant(1.0);
  auto r = check_fundamental_m("tight", phi, w, {0.5, 2.0}, 0.0);
  CHECK(r.cases_run == 2);
  CHECK(r.passed == (r.max_rel_err == 0.0));
  CHECK(r.worst_case.contains("t"));
}
