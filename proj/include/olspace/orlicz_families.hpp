#pragma once

#include <string_view>
#include <vector>

// Parametric families behind OrliczFunction / ExtendedOrliczFunction. Each family
// knows its closed-form value, left derivative, structural constants and the
// inverse on the strictly increasing part (a, b].

namespace olspace::family {

/// k * u^p, p > 1.
struct Power {
  double p = 2.0;
  double k = 1.0;

  static constexpr std::string_view name = "power";
  double value(double u) const;
  double derivative(double u) const;
  double a() const { return 0.0; }
  double b() const;
  double d() const { return 0.0; }
  double value_at_b() const;
  double slope_at_zero() const { return 0.0; }
  double slope_at_infinity() const;
  double inverse(double s) const;
};

/// k * u.
struct Linear {
  double k = 1.0;

  static constexpr std::string_view name = "linear";
  double value(double u) const { return k * u; }
  double derivative(double) const { return k; }
  double a() const { return 0.0; }
  double b() const;
  double d() const;
  double value_at_b() const;
  double slope_at_zero() const { return k; }
  double slope_at_infinity() const { return k; }
  double inverse(double s) const { return s / k; }
};

/// e^u - 1.
struct ExpMinusOne {
  static constexpr std::string_view name = "exp_minus_one";
  double value(double u) const;
  double derivative(double u) const;
  double a() const { return 0.0; }
  double b() const;
  double d() const { return 0.0; }
  double value_at_b() const;
  double slope_at_zero() const { return 1.0; }
  double slope_at_infinity() const;
  double inverse(double s) const;
};

/// Zero on [0, shift], then slope k for a stretch of length u0, then the
/// C^1 power continuation k*u0*((x/u0)^p/p + 1 - 1/p) with x = u - shift.
struct LinearSplicePower {
  double u0 = 1.0;
  double p = 2.0;
  double k = 1.0;
  double shift = 0.0;

  static constexpr std::string_view name = "linear_splice_power";
  double value(double u) const;
  double derivative(double u) const;
  double a() const { return shift; }
  double b() const;
  double d() const { return shift > 0.0 ? shift : u0; }
  double value_at_b() const;
  double slope_at_zero() const { return shift > 0.0 ? 0.0 : k; }
  double slope_at_infinity() const;
  double inverse(double s) const;
};

/// (k*u0/p)*(u/u0)^p on [0, u0], then linear with slope k (C^1 matched).
struct PowerSpliceLinear {
  double u0 = 1.0;
  double p = 2.0;
  double k = 1.0;

  static constexpr std::string_view name = "power_splice_linear";
  double value(double u) const;
  double derivative(double u) const;
  double a() const { return 0.0; }
  double b() const;
  double d() const { return 0.0; }
  double value_at_b() const;
  double slope_at_zero() const { return 0.0; }
  double slope_at_infinity() const { return k; }
  double inverse(double s) const;
};

/// Piecewise-linear interpolation of convex nodes starting at (0, 0). Beyond the
/// last node: linear extrapolation, or +inf when finite_domain is set.
struct Tabulated {
  std::vector<double> u;
  std::vector<double> phi;
  bool finite_domain = false;

  static constexpr std::string_view name = "tabulated";
  double value(double x) const;
  double derivative(double x) const;
  double a() const;
  double b() const;
  double d() const;
  double value_at_b() const;
  double slope_at_zero() const;
  double slope_at_infinity() const;
  double inverse(double s) const;

  double slope(std::size_t segment) const;
  std::size_t segments() const { return u.size() - 1; }
};

/// 0 on [0, k], +inf on (k, inf). Complementary function of k*u.
struct ZeroThenInfinite {
  double k = 1.0;

  static constexpr std::string_view name = "zero_then_infinite";
  double value(double v) const;
  double derivative(double) const { return 0.0; }
  double a() const { return k; }
  double b() const { return k; }
  double d() const { return k; }
  double value_at_b() const { return 0.0; }
  double slope_at_zero() const { return 0.0; }
  double slope_at_infinity() const;
  double inverse(double) const { return k; }
};

/// 0 on [0, 1], v ln v - v + 1 beyond. Complementary function of e^u - 1.
struct ExpConjugate {
  static constexpr std::string_view name = "exp_conjugate";
  double value(double v) const;
  double derivative(double v) const;
  double a() const { return 1.0; }
  double b() const;
  double d() const { return 1.0; }
  double value_at_b() const;
  double slope_at_zero() const { return 0.0; }
  double slope_at_infinity() const;
  double inverse(double s) const;
};

/// shift*v + k*u0*(1-1/p)*((v/k)^q - 1)_+ with q = p/(p-1).
struct LinearSplicePowerConjugate {
  LinearSplicePower of;

  static constexpr std::string_view name = "linear_splice_power_conjugate";
  double value(double v) const;
  double derivative(double v) const;
  double a() const { return of.shift > 0.0 ? 0.0 : of.k; }
  double b() const;
  double d() const { return of.k; }
  double value_at_b() const;
  double slope_at_zero() const { return of.shift; }
  double slope_at_infinity() const;
  double inverse(double s) const;
};

/// k*u0*(1-1/p)*(v/k)^q on [0, k], +inf beyond; finite value at b = k.
struct PowerSpliceLinearConjugate {
  PowerSpliceLinear of;

  static constexpr std::string_view name = "power_splice_linear_conjugate";
  double value(double v) const;
  double derivative(double v) const;
  double a() const { return 0.0; }
  double b() const { return of.k; }
  double d() const { return 0.0; }
  double value_at_b() const;
  double slope_at_zero() const { return 0.0; }
  double slope_at_infinity() const;
  double inverse(double s) const;
};

}  // namespace olspace::family
