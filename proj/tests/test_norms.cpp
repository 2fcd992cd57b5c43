#include <doctest.h>

#include <cmath>

#include "olspace/errors.hpp"
#include "olspace/norm.hpp"
#include "support.hpp"

using namespace olspace;
using testing_support::close_rel;

namespace {

StepFunction sf(std::vector<Piece> p) { return StepFunction(std::move(p)); }

}  // namespace

TEST_CASE("weights and primitives") {
  CHECK(Weight::constant(1.0).big_w(4.0) == 4.0);
  CHECK(Weight::power_decay(0.5).big_w(4.0) == doctest::Approx(4.0));
  CHECK(Weight::tabulated({{1, 2}, {1, 1}}).big_w(1.5) == doctest::Approx(2.5));
  CHECK(Weight::tabulated({{1, 2}, {1, 1}}).big_w(5.0) == doctest::Approx(6.0));
  CHECK(Weight::exp_plus_const(0.5).big_w(1.0) == doctest::Approx(1.0 - std::exp(-1.0) + 0.5));
  CHECK_THROWS_AS(Weight::constant(1.0, 2.0).big_w(3.0), DomainError);
  CHECK_THROWS_AS(Weight::exp_plus_const(0.0), InvalidInput);
  CHECK_NOTHROW(Weight::exp_plus_const(0.0, 1.0));
  CHECK_THROWS_AS(Weight::power_decay(1.0), InvalidInput);
  CHECK_THROWS_AS(Weight::tabulated({{1, 1}, {1, 2}}), InvalidInput);

  for (const auto& w : {Weight::power_decay(0.3), Weight::exp_plus_const(0.1), Weight::tabulated({{1, 2}, {2, 1}})}) {
    for (double s : {0.01, 0.5, 2.0, 9.0}) CHECK(w.big_w(w.inverse_big_w(s)) == doctest::Approx(s).epsilon(1e-12));
  }
}

TEST_CASE("sequence weights interpolate partial sums") {
  const auto w = Weight::tabulated({{1, 1}, {1, 0.5}, {1, 0.25}}, kInf, DomainKind::sequence);
  CHECK(w.big_w(2.0) == 1.5);
  CHECK(w.big_w(2.5) == doctest::Approx(1.625));
  CHECK(w.density(2.5) == 0.25);
  CHECK_THROWS_AS(Weight::tabulated({{1.5, 1}}, kInf, DomainKind::sequence), InvalidInput);
}

TEST_CASE("regularity of weights") {
  CHECK(Weight::constant(2.0).regular().verdict == Verdict::holds);
  const auto r = Weight::power_decay(0.5).regular();
  CHECK(r.verdict == Verdict::holds);
  CHECK(r.ratio == doctest::Approx(2.0));
  CHECK(Weight::tabulated({{1, 5}, {1, 1}}).regular().verdict == Verdict::unknown);
  CHECK(Weight::tabulated({{1, 5}, {1, 1}}, 2.0).regular().verdict == Verdict::holds);
  CHECK(Weight::constant(2.0).limit_t_over_big_w() == 0.5);
  CHECK(Weight::power_decay(0.5).limit_t_over_big_w() == 0.0);
}

TEST_CASE("modular rho") {
  CHECK(modular_rho(OrliczFunction::power(2.0), Weight::constant(1.0), StepFunction::indicator(4.0, 0.5)) ==
        doctest::Approx(1.0));
  CHECK(modular_rho(OrliczFunction::power(2.0), Weight::constant(1.0), StepFunction()) == 0.0);
  const auto f = sf({{1, 2}, {3, 1}});
  const double rho = modular_rho(OrliczFunction::power(2.0), Weight::power_decay(0.5), f);
  CHECK(rho == doctest::Approx(10.0));

  // midpoint rule after t = s^2, panels aligned with the jumps at s = 1 and s = 2
  const int n = 1000000;
  double q = 0.0;
  for (int i = 0; i < n; ++i) {
    const double s = 2.0 * (i + 0.5) / n;
    const double v = f.value_at(s * s);
    q += 2.0 * v * v * (2.0 / n);
  }
  CHECK(std::abs(q - rho) <= 1e-9 * rho);
  CHECK_THROWS_AS(modular_rho(OrliczFunction::power(2.0), Weight::constant(1.0, 1.0), StepFunction::indicator(2.0)),
                  DomainError);
}

TEST_CASE("modular alpha on sequences") {
  const auto w = Weight::tabulated({{1, 1}, {1, 0.5}, {1, 0.25}}, kInf, DomainKind::sequence);
  CHECK(modular_alpha(OrliczFunction::power(2.0), w, StepFunction::sequence({1, 1})) == doctest::Approx(1.5));
  CHECK(modular_alpha(OrliczFunction::power(2.0), w, StepFunction({}, DomainKind::sequence)) == 0.0);
  CHECK(modular_alpha(OrliczFunction::power(3.0), w, StepFunction::sequence({1, 2})) == doctest::Approx(8.5));
}

TEST_CASE("modular Q") {
  const auto phi = conjugate(OrliczFunction::power(2.0));  // v^2/4
  const auto w = Weight::power_decay(0.5);
  for (double t : {0.5, 4.0}) {
    for (double c : {0.3, 1.0}) {
      const double expect = phi(c * t / w.big_w(t)) * w.big_w(t);
      CHECK(modular_q(phi, w, StepFunction::indicator(t, c)) == doctest::Approx(expect).epsilon(1e-14));
    }
  }
  CHECK(modular_q(phi, w, StepFunction()) == 0.0);
  // w = 1: level function of a decreasing f is f itself
  const auto f = sf({{1, 2}, {1, 1}});
  CHECK(modular_q(phi, Weight::constant(1.0), f) == doctest::Approx(1.0 + 0.25));
  CHECK(modular_q(conjugate(OrliczFunction::linear(2.0)), Weight::constant(1.0), StepFunction::indicator(1.0, 3.0)) ==
        kInf);
}

TEST_CASE("modular P") {
  const auto phi = conjugate(OrliczFunction::power(2.0));
  CHECK(modular_p(phi, Weight::constant(1.0), StepFunction()).value == 0.0);
  const auto r = modular_p(phi, Weight::constant(1.0), StepFunction::indicator(1.0));
  CHECK(r.converged);
  CHECK(r.value == doctest::Approx(0.25).epsilon(1e-6));
  // phi* = 0 on [0, k]: below the threshold both modulars vanish
  const auto zero_inf = conjugate(OrliczFunction::linear(2.0));
  CHECK(modular_p(zero_inf, Weight::constant(1.0), StepFunction::indicator(1.0, 1.5)).value == 0.0);
  CHECK(modular_q(zero_inf, Weight::constant(1.0), StepFunction::indicator(1.0, 1.5)) == 0.0);
  // no decreasing v <= w keeps f/v below b = 2
  CHECK(modular_p(zero_inf, Weight::constant(1.0), StepFunction::indicator(1.0, 3.0)).value == kInf);

  const auto w = Weight::power_decay(0.5);
  PSolverOptions opts;
  opts.cells_per_piece = 4;
  const double p = modular_p(phi, w, StepFunction::indicator(4.0), opts).value;
  CHECK(p == doctest::Approx(phi(1.0) * 4.0).epsilon(1e-6));
}

TEST_CASE("property: P against Q on random two-step functions for an N-function") {
  testing_support::Gen gen(21);
  const auto phi = conjugate(OrliczFunction::power(2.0));
  const auto w = Weight::power_decay(0.5);
  for (int i = 0; i < 100; ++i) {
    const auto f = gen.step(2);
    const double q = modular_q(phi, w, f);
    const double p = modular_p(phi, w, f).value;
    CHECK(p <= q + 1e-6 * (1.0 + q));
    CHECK(std::abs(p - q) <= 1e-4 * (1.0 + q));
  }
}

TEST_CASE("isotonic fit") {
  const auto v = isotonic_decreasing({1.0, 3.0, 2.0, 0.5}, {1.0, 1.0, 1.0, 1.0});
  CHECK(v[0] == doctest::Approx(2.0));
  CHECK(v[1] == doctest::Approx(2.0));
  CHECK(v[2] == doctest::Approx(2.0));
  CHECK(v[3] == 0.5);
}

TEST_CASE("luxemburg norm") {
  const auto phi = OrliczFunction::power(2.0);
  auto rho = [&](const Weight& w) { return [&phi, w](const StepFunction& g) { return modular_rho(phi, w, g); }; };
  CHECK(luxemburg_norm(rho(Weight::constant(1.0)), StepFunction::indicator(4.0)) == doctest::Approx(2.0));
  CHECK(luxemburg_norm(rho(Weight::constant(1.0)), StepFunction()) == 0.0);
  CHECK(luxemburg_norm(rho(Weight::power_decay(0.5)), StepFunction::indicator(4.0)) == doctest::Approx(2.0));
  // infinite for every scale
  CHECK(luxemburg_norm([](const StepFunction&) { return kInf; }, StepFunction::indicator(1.0)) == kInf);
}

TEST_CASE("amemiya norm") {
  const auto phi = conjugate(OrliczFunction::power(2.0));
  CHECK(orlicz_amemiya_norm(phi, Weight::constant(1.0), StepFunction()) == 0.0);
  CHECK(orlicz_amemiya_norm(phi, Weight::constant(1.0), StepFunction::indicator(1.0)) == doctest::Approx(1.0));
  testing_support::Gen gen(22);
  for (int i = 0; i < 30; ++i) {
    const auto f = gen.step(3);
    const double lux = m_norm(phi, Weight::power_decay(0.5), f);
    const double ame = orlicz_amemiya_norm(phi, Weight::power_decay(0.5), f);
    CHECK(lux <= ame * (1 + 1e-9));
    CHECK(ame <= 2.0 * lux * (1 + 1e-9));
  }
}

TEST_CASE("fundamental functions") {
  const auto w1 = Weight::constant(1.0);
  for (double t : {0.1, 1.0, 7.0}) {
    CHECK(fundamental_lambda(OrliczFunction::power(3.0), w1, t) == doctest::Approx(std::cbrt(t)));
    CHECK(fundamental_lambda(OrliczFunction::linear(1.0), Weight::power_decay(0.5), t) ==
          doctest::Approx(Weight::power_decay(0.5).big_w(t)));
    CHECK(fundamental_m(OrliczFunction::power(2.0), w1, t) == doctest::Approx(std::sqrt(t)));
    CHECK(fundamental_m(OrliczFunction::linear(3.0), w1, t) == doctest::Approx(3.0 * t));
  }
  CHECK_THROWS_AS(fundamental_lambda(OrliczFunction::power(2.0), Weight::constant(1.0, 1.0), 1.0), DomainError);
  CHECK_THROWS_AS(fundamental_m(OrliczFunction::power(2.0), w1, 0.0), DomainError);

  const auto phi = OrliczFunction::exp_minus_one();
  const auto w = Weight::power_decay(0.5);
  for (double t = 0.01; t < 100.0; t *= 1.7) {
    const double oracle = luxemburg_norm([&](const StepFunction& g) { return modular_rho(phi, w, g); },
                                         StepFunction::indicator(t));
    CHECK(close_rel(fundamental_lambda(phi, w, t), oracle, 1e-9));
  }
  const auto star = conjugate(OrliczFunction::power(2.0));
  for (double t = 0.01; t < 100.0; t *= 1.7) {
    const double oracle = m_norm(star, w, StepFunction::indicator(t));
    CHECK(close_rel(fundamental_m(star, w, t), oracle, 1e-8));
  }
}

TEST_CASE("lorentz norm by the distribution formula") {
  CHECK(lorentz_norm_distribution(Weight::constant(1.0), StepFunction::indicator(4.0)) == 4.0);
  CHECK(lorentz_norm_distribution(Weight::power_decay(0.5), StepFunction::indicator(4.0)) == doctest::Approx(4.0));
  testing_support::Gen gen(23);
  for (int i = 0; i < 200; ++i) {
    const auto f = gen.step(6);
    const auto w = Weight::exp_plus_const(0.3);
    CHECK(close_rel(lorentz_norm_distribution(w, f), modular_rho(OrliczFunction::linear(1.0), w, f), 1e-13));
  }
}

TEST_CASE("property: norm axioms") {
  testing_support::Gen gen(24);
  const auto phi = OrliczFunction::power_splice_linear(1.0, 2.0, 2.0);
  const auto w = Weight::tabulated({{0.5, 2.0}, {0.5, 1.0}}, 1.0);
  for (int i = 0; i < 200; ++i) {
    const auto f = gen.step(4, 1.0), g = gen.step(4, 1.0);
    const double nf = lambda_norm(phi, w, f), ng = lambda_norm(phi, w, g);
    CHECK(close_rel(lambda_norm(phi, w, f.scaled(3.5)), 3.5 * nf, 1e-10));
    CHECK(lambda_norm(phi, w, f + g) <= nf + ng + 1e-8);
    CHECK(lambda_norm(phi, w, rearrange(f)) == nf);
    CHECK((modular_rho(phi, w, f.scaled(1.0 / nf)) <= 1.0 + 1e-9));
  }
}
