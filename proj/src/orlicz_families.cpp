#include "olspace/orlicz_families.hpp"

#include <algorithm>
#include <cmath>
#include <limits>

#include <boost/math/special_functions/lambert_w.hpp>
#include <boost/math/tools/roots.hpp>

namespace olspace::family {

namespace {
constexpr double inf = std::numeric_limits<double>::infinity();
}

// Power

double Power::value(double u) const { return k * std::pow(u, p); }
double Power::derivative(double u) const { return k * p * std::pow(u, p - 1.0); }
double Power::b() const { return inf; }
double Power::value_at_b() const { return inf; }
double Power::slope_at_infinity() const { return inf; }
double Power::inverse(double s) const { return std::pow(s / k, 1.0 / p); }

// Linear

double Linear::b() const { return inf; }
double Linear::d() const { return inf; }
double Linear::value_at_b() const { return inf; }

// ExpMinusOne

double ExpMinusOne::value(double u) const { return std::expm1(u); }
double ExpMinusOne::derivative(double u) const { return std::exp(u); }
double ExpMinusOne::b() const { return inf; }
double ExpMinusOne::value_at_b() const { return inf; }
double ExpMinusOne::slope_at_infinity() const { return inf; }
double ExpMinusOne::inverse(double s) const { return std::log1p(s); }

// LinearSplicePower

double LinearSplicePower::value(double u) const {
  const double x = u - shift;
  if (x <= 0.0) return 0.0;
  if (x <= u0) return k * x;
  return k * u0 * (std::pow(x / u0, p) / p + 1.0 - 1.0 / p);
}

double LinearSplicePower::derivative(double u) const {
  const double x = u - shift;
  if (x <= 0.0) return (shift > 0.0) ? 0.0 : k;
  if (x <= u0) return k;
  return k * std::pow(x / u0, p - 1.0);
}

double LinearSplicePower::b() const { return inf; }
double LinearSplicePower::value_at_b() const { return inf; }
double LinearSplicePower::slope_at_infinity() const { return inf; }

double LinearSplicePower::inverse(double s) const {
  if (s <= k * u0) return shift + s / k;
  return shift + u0 * std::pow(p * (s / (k * u0) - 1.0 + 1.0 / p), 1.0 / p);
}

// PowerSpliceLinear

double PowerSpliceLinear::value(double u) const {
  if (u <= u0) return k * u0 / p * std::pow(u / u0, p);
  return k * u0 / p + k * (u - u0);
}

double PowerSpliceLinear::derivative(double u) const {
  if (u <= u0) return k * std::pow(u / u0, p - 1.0);
  return k;
}

double PowerSpliceLinear::b() const { return inf; }
double PowerSpliceLinear::value_at_b() const { return inf; }

double PowerSpliceLinear::inverse(double s) const {
  const double knee = k * u0 / p;
  if (s <= knee) return u0 * std::pow(s / knee, 1.0 / p);
  return u0 + (s - knee) / k;
}

// Tabulated

double Tabulated::slope(std::size_t i) const { return (phi[i + 1] - phi[i]) / (u[i + 1] - u[i]); }

double Tabulated::value(double x) const {
  const std::size_t n = u.size();
  if (x >= u[n - 1]) {
    if (x == u[n - 1]) return phi[n - 1];
    if (finite_domain) return inf;
    return phi[n - 1] + slope(n - 2) * (x - u[n - 1]);
  }
  const auto it = std::upper_bound(u.begin(), u.end(), x);
  const std::size_t i = static_cast<std::size_t>(it - u.begin()) - 1;
  return phi[i] + slope(i) * (x - u[i]);
}

double Tabulated::derivative(double x) const {
  const std::size_t n = u.size();
  if (x <= 0.0) return slope(0);
  if (x > u[n - 1]) return finite_domain ? inf : slope(n - 2);
  // left derivative: segment whose right end is >= x
  const auto it = std::lower_bound(u.begin(), u.end(), x);
  const std::size_t j = static_cast<std::size_t>(it - u.begin());
  return slope(j - 1);
}

double Tabulated::a() const {
  double out = 0.0;
  for (std::size_t i = 0; i < u.size() && phi[i] == 0.0; ++i) out = u[i];
  if (!finite_domain && out == u.back()) return inf;
  return out;
}

double Tabulated::b() const { return finite_domain ? u.back() : inf; }

double Tabulated::d() const {
  const double s0 = slope(0);
  for (std::size_t i = 1; i < segments(); ++i) {
    if (slope(i) > s0 + 1e-12 * std::max(1.0, std::abs(s0))) return u[i];
  }
  return finite_domain ? u.back() : inf;
}

double Tabulated::value_at_b() const { return finite_domain ? phi.back() : inf; }
double Tabulated::slope_at_zero() const { return slope(0); }
double Tabulated::slope_at_infinity() const { return finite_domain ? inf : slope(segments() - 1); }

double Tabulated::inverse(double s) const {
  const std::size_t n = u.size();
  if (s > phi[n - 1]) {
    if (finite_domain) return u[n - 1];
    return u[n - 1] + (s - phi[n - 1]) / slope(n - 2);
  }
  // first node with phi >= s; the segment before it is strictly increasing
  const auto it = std::lower_bound(phi.begin(), phi.end(), s);
  const std::size_t j = static_cast<std::size_t>(it - phi.begin());
  if (phi[j] == s) return u[j];
  return u[j - 1] + (s - phi[j - 1]) / slope(j - 1);
}

// ZeroThenInfinite

double ZeroThenInfinite::value(double v) const { return v <= k ? 0.0 : inf; }
double ZeroThenInfinite::slope_at_infinity() const { return inf; }

// ExpConjugate

double ExpConjugate::value(double v) const {
  if (v <= 1.0) return 0.0;
  return v * std::log(v) - v + 1.0;
}

double ExpConjugate::derivative(double v) const { return v <= 1.0 ? 0.0 : std::log(v); }
double ExpConjugate::b() const { return inf; }
double ExpConjugate::value_at_b() const { return inf; }
double ExpConjugate::slope_at_infinity() const { return inf; }

double ExpConjugate::inverse(double s) const {
  // v ln v - v + 1 = s  <=>  v = e^{1 + W0((s-1)/e)}
  const double w = boost::math::lambert_w0((s - 1.0) / std::exp(1.0));
  double v = std::exp(1.0 + w);
  for (int it = 0; it < 3; ++it) {
    const double lv = std::log(v);
    if (lv < 1e-6) break;
    v -= (v * lv - v + 1.0 - s) / lv;
  }
  return v;
}

// LinearSplicePowerConjugate

namespace {
double q_of(double p) { return p / (p - 1.0); }
}  // namespace

double LinearSplicePowerConjugate::value(double v) const {
  const double tail =
      v <= of.k ? 0.0
                : of.k * of.u0 * (1.0 - 1.0 / of.p) * (std::pow(v / of.k, q_of(of.p)) - 1.0);
  return of.shift * v + tail;
}

double LinearSplicePowerConjugate::derivative(double v) const {
  if (v <= of.k) return of.shift;
  return of.shift + of.u0 * std::pow(v / of.k, q_of(of.p) - 1.0);
}

double LinearSplicePowerConjugate::b() const { return inf; }
double LinearSplicePowerConjugate::value_at_b() const { return inf; }
double LinearSplicePowerConjugate::slope_at_infinity() const { return inf; }

double LinearSplicePowerConjugate::inverse(double s) const {
  const double c = of.k * of.u0 * (1.0 - 1.0 / of.p);
  const double q = q_of(of.p);
  if (of.shift == 0.0) return of.k * std::pow(1.0 + s / c, 1.0 / q);
  if (s <= of.shift * of.k) return s / of.shift;
  // the value grows at least linearly with slope shift, so s/shift brackets the root
  const double lo = of.k;
  const double hi = std::max(s / of.shift, of.k * std::pow(1.0 + s / c, 1.0 / q));
  auto g = [&](double v) { return value(v) - s; };
  std::uintmax_t iters = 200;
  const auto r = boost::math::tools::toms748_solve(
      g, lo, hi, boost::math::tools::eps_tolerance<double>(52), iters);
  return 0.5 * (r.first + r.second);
}

// PowerSpliceLinearConjugate

double PowerSpliceLinearConjugate::value(double v) const {
  if (v > of.k) return inf;
  return value_at_b() * std::pow(v / of.k, q_of(of.p));
}

double PowerSpliceLinearConjugate::derivative(double v) const {
  if (v > of.k) return inf;
  return of.u0 * std::pow(v / of.k, q_of(of.p) - 1.0);
}

double PowerSpliceLinearConjugate::value_at_b() const {
  return of.k * of.u0 * (1.0 - 1.0 / of.p);
}

double PowerSpliceLinearConjugate::slope_at_infinity() const { return inf; }

double PowerSpliceLinearConjugate::inverse(double s) const {
  const double c = value_at_b();
  if (s >= c) return of.k;
  return of.k * std::pow(s / c, 1.0 / q_of(of.p));
}

}  // namespace olspace::family
