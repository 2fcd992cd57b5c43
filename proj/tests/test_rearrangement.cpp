#include <doctest.h>

#include <algorithm>

#include "olspace/errors.hpp"
#include "olspace/level_function.hpp"
#include "olspace/step_function.hpp"
#include "support.hpp"

using namespace olspace;
using testing_support::close_rel;

namespace {

StepFunction sf(std::vector<Piece> p) { return StepFunction(std::move(p)); }

// Measure of {f > lambda} straight from the piece list.
double count_above(const std::vector<Piece>& p, double lambda) {
  double m = 0.0;
  for (const auto& q : p) m += q.value > lambda ? q.length : 0.0;
  return m;
}

// Slopes of the least concave majorant of the points (W(T_i), F(T_i)),
// assigned back to each piece. Upper hull by exhaustive chord search.
std::vector<double> majorant_slopes(const std::vector<double>& x, const std::vector<double>& y) {
  const std::size_t n = x.size();
  std::vector<double> slope(n - 1);
  std::size_t i = 0;
  while (i + 1 < n) {
    std::size_t best = i + 1;
    double best_s = (y[i + 1] - y[i]) / (x[i + 1] - x[i]);
    for (std::size_t j = i + 2; j < n; ++j) {
      const double s = (y[j] - y[i]) / (x[j] - x[i]);
      if (s >= best_s) {
        best_s = s;
        best = j;
      }
    }
    for (std::size_t k = i; k < best; ++k) slope[k] = best_s;
    i = best;
  }
  return slope;
}

}  // namespace

TEST_CASE("distribution examples") {
  const auto f = sf({{1, 1}, {1, 3}, {1, 2}});
  CHECK(distribution(f, 1.5) == 2.0);
  CHECK(distribution(f, 3.0) == 0.0);
  CHECK(distribution(f, 7.0) == 0.0);
  CHECK(distribution(StepFunction::indicator(4.0), 0.0) == 4.0);
}

TEST_CASE("rearrange examples") {
  CHECK(rearrange(sf({{1, 1}, {1, 3}, {1, 2}})) == sf({{1, 3}, {1, 2}, {1, 1}}));
  const auto dec = sf({{2, 5}, {1, 1}});
  CHECK(rearrange(dec) == dec);
  const auto g = sf({{2, 1}, {1, 5}});
  const auto gs = rearrange(g);
  CHECK(gs == sf({{1, 5}, {2, 1}}));
  for (double lambda : {0.5, 1.0, 3.0, 5.0}) CHECK(distribution(gs, lambda) == count_above(g.pieces(), lambda));
}

TEST_CASE("canonical form merges equal neighbours and trims trailing zeros") {
  const auto f = sf({{1, 2}, {0.5, 2}, {1, 0}, {2, 1}, {3, 0}});
  REQUIRE(f.pieces().size() == 3);
  CHECK(f.pieces()[0] == Piece{1.5, 2});
  CHECK(f.pieces()[1] == Piece{1, 0});
  CHECK(f.support_length() == 4.5);
  CHECK(f.integral() == 5.0);
  CHECK_THROWS_AS(sf({{-1, 1}}), InvalidInput);
  CHECK_THROWS_AS(sf({{1, -1}}), InvalidInput);
  CHECK_THROWS_AS(StepFunction({{1.5, 1}}, DomainKind::sequence), InvalidInput);
}

TEST_CASE("submajorization examples") {
  const auto f = sf({{1, 1}, {2, 3}});
  CHECK(submajorizes(f, f));
  CHECK(submajorizes(StepFunction::indicator(1.0, 2.0), StepFunction::indicator(2.0)));
  CHECK_FALSE(submajorizes(StepFunction::indicator(1.0), StepFunction::indicator(2.0, 2.0)));
}

TEST_CASE("property: equimeasurability and idempotence of rearrange") {
  testing_support::Gen gen(11);
  for (int i = 0; i < 300; ++i) {
    const auto f = gen.step(8);
    const auto fs = rearrange(f);
    CHECK(rearrange(fs) == fs);
    CHECK(fs.is_decreasing());
    for (const auto& p : f.pieces()) {
      for (double lambda : {p.value * (1 - 1e-9), p.value, p.value * (1 + 1e-9)}) {
        CHECK(distribution(fs, lambda) == doctest::Approx(count_above(f.pieces(), lambda)).epsilon(1e-14));
      }
    }
  }
}

TEST_CASE("property: submajorization is reflexive and transitive") {
  testing_support::Gen gen(12);
  int chains = 0;
  for (int i = 0; i < 2000; ++i) {
    const auto a = gen.step(3), b = gen.step(3), c = gen.step(3);
    CHECK(submajorizes(a, a));
    if (submajorizes(b, a) && submajorizes(c, b)) {
      ++chains;
      CHECK(submajorizes(c, a));
    }
  }
  CHECK(chains > 0);
}

TEST_CASE("level function of an indicator") {
  const auto w = Weight::power_decay(0.5);
  const auto lf = level_function(StepFunction::indicator(4.0), w);
  REQUIRE(lf.blocks().size() == 1);
  CHECK(lf.blocks()[0].ratio == doctest::Approx(4.0 / w.big_w(4.0)));
  CHECK(lf.value_at(1.0) == doctest::Approx(4.0 * w.density(1.0) / w.big_w(4.0)));
}

TEST_CASE("level function leaves f alone when f/w already decreases") {
  const auto f = sf({{1, 2}, {1, 1}});
  const auto lf = level_function(f, Weight::constant(1.0));
  REQUIRE(lf.blocks().size() == 2);
  CHECK(lf.value_at(0.5) == 2.0);
  CHECK(lf.value_at(1.5) == 1.0);
}

TEST_CASE("level function averages where f/w increases") {
  // f = chi_(0,2) against t^{-1/2}: f/w = sqrt(t) increases, so one block on [0, 2]
  const auto w = Weight::power_decay(0.5);
  const auto lf = level_function(sf({{1, 1}, {1, 1}, {2, 0}}), w);
  REQUIRE(lf.blocks().size() >= 1);
  CHECK(lf.blocks()[0].length == doctest::Approx(2.0));
  CHECK(lf.blocks()[0].ratio == doctest::Approx(2.0 / w.big_w(2.0)));
  CHECK_THROWS_AS(level_function(sf({{1, 1}, {1, 2}}), w), PreconditionError);
}

TEST_CASE("property: level function against a concave-majorant oracle") {
  testing_support::Gen gen(13);
  const std::vector<Weight> ws{Weight::power_decay(0.3), Weight::exp_plus_const(0.2),
                               Weight::tabulated({{0.7, 3.0}, {1.1, 1.5}, {2.0, 0.4}})};
  for (int i = 0; i < 600; ++i) {
    const Weight& w = ws[static_cast<std::size_t>(i) % ws.size()];
    const auto f = rearrange(gen.step(6));
    const auto lf = level_function(f, w);

    std::vector<double> x{0.0}, y{0.0};
    double t = 0.0;
    for (const auto& p : f.pieces()) {
      t += p.length;
      x.push_back(w.big_w(t));
      y.push_back(y.back() + p.value * p.length);
    }
    const auto slopes = majorant_slopes(x, y);
    t = 0.0;
    for (std::size_t k = 0; k < f.pieces().size(); ++k) {
      const double mid = t + 0.5 * f.pieces()[k].length;
      const double got = lf.value_at(mid) / w.density(mid);
      CHECK(close_rel(got, slopes[k], 1e-10));
      t += f.pieces()[k].length;
    }
    CHECK(close_rel(lf.integral(), f.integral(), 1e-12));
    const auto r = lf.ratio_steps();
    CHECK(r.is_decreasing());
  }
}
