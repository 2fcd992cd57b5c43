#pragma once

#include <cstddef>
#include <limits>
#include <optional>
#include <string_view>
#include <utility>
#include <variant>
#include <vector>

#include "olspace/orlicz_families.hpp"
#include "olspace/verdict.hpp"

namespace olspace {

inline constexpr double kInf = std::numeric_limits<double>::infinity();

using Family = std::variant<family::Power, family::Linear, family::ExpMinusOne,
                            family::LinearSplicePower, family::PowerSpliceLinear,
                            family::Tabulated, family::ZeroThenInfinite, family::ExpConjugate,
                            family::LinearSplicePowerConjugate,
                            family::PowerSpliceLinearConjugate>;

/// Convex, left-continuous phi: [0, inf) -> [0, inf] with phi(0) = 0, neither
/// identically 0 nor identically inf on (0, inf). This is the generating
/// function on the Koethe-dual side; finite Orlicz functions are the special
/// case b() == inf.
class ExtendedOrliczFunction {
 public:
  explicit ExtendedOrliczFunction(Family f);

  /// phi(u); +inf beyond b. Throws DomainError for negative or NaN u.
  double operator()(double u) const;

  /// Left derivative at u > 0 (right derivative at 0). Only meaningful on [0, b].
  double derivative(double u) const;

  /// sup{u > 0 : phi(u) = 0}.
  double a() const noexcept { return a_; }
  /// sup{u >= 0 : phi(u) < inf}.
  double b() const noexcept { return b_; }
  /// End of the initial linear segment through the origin.
  double d() const noexcept { return d_; }
  /// phi(b) as the left limit; +inf when b = inf.
  double value_at_b() const;
  /// lim_{u->0+} phi(u)/u.
  double slope_at_zero() const;
  /// lim_{u->inf} phi(u)/u (+inf when b is finite).
  double slope_at_infinity() const;

  bool is_finite() const noexcept { return b_ == kInf; }
  bool is_degenerate() const noexcept { return a_ > 0.0; }
  bool is_linear() const noexcept { return d_ == kInf; }
  /// Finite, positive on (0, inf), phi(u)/u -> 0 at 0 and -> inf at inf.
  bool is_n_function() const;

  /// The inverse of phi restricted to (a, b]. At a finite b the graph is
  /// closed vertically (phi jumps to inf right after b), so every s >= phi(b)
  /// maps to b. Throws DomainError for s <= 0 or non-finite s.
  double inverse_upper(double s) const;

  const Family& family() const noexcept { return family_; }
  std::string_view family_name() const;

 private:
  Family family_;
  double a_ = 0.0;
  double b_ = kInf;
  double d_ = 0.0;
};

/// Finite Orlicz function phi: [0, inf) -> [0, inf).
class OrliczFunction {
 public:
  static OrliczFunction power(double p, double k = 1.0);
  static OrliczFunction linear(double k);
  static OrliczFunction exp_minus_one();
  static OrliczFunction linear_splice_power(double u0, double p, double k = 1.0,
                                            double shift = 0.0);
  static OrliczFunction power_splice_linear(double u0, double p, double k = 1.0);
  /// Nodes (u, phi(u)); first node must be (0, 0), at least 3 nodes, convex.
  static OrliczFunction tabulated(const std::vector<std::pair<double, double>>& nodes);
  /// Throws InvalidInput unless f is finite-valued.
  static OrliczFunction from_extended(ExtendedOrliczFunction f);

  double operator()(double u) const { return fn_(u); }
  double derivative(double u) const { return fn_.derivative(u); }
  double a() const noexcept { return fn_.a(); }
  double b() const noexcept { return fn_.b(); }
  double d() const noexcept { return fn_.d(); }
  double slope_at_zero() const { return fn_.slope_at_zero(); }
  double slope_at_infinity() const { return fn_.slope_at_infinity(); }
  bool is_degenerate() const noexcept { return fn_.is_degenerate(); }
  bool is_linear() const noexcept { return fn_.is_linear(); }
  bool is_n_function() const { return fn_.is_n_function(); }
  double inverse_upper(double s) const { return fn_.inverse_upper(s); }
  const Family& family() const noexcept { return fn_.family(); }
  std::string_view family_name() const { return fn_.family_name(); }

  const ExtendedOrliczFunction& extended() const noexcept { return fn_; }
  operator const ExtendedOrliczFunction&() const noexcept { return fn_; }

 private:
  explicit OrliczFunction(ExtendedOrliczFunction f) : fn_(std::move(f)) {}
  ExtendedOrliczFunction fn_;
};

/// Tabulated extended function; with finite_domain the value is +inf past the
/// last node. Used for the Koethe-dual side.
ExtendedOrliczFunction tabulated_extended(const std::vector<std::pair<double, double>>& nodes,
                                          bool finite_domain);

/// Complementary function phi_*(v) = sup_{u>0} (uv - phi(u)), in closed form.
ExtendedOrliczFunction conjugate(const OrliczFunction& phi);

/// sup_{u >= 0} (uv - phi(u)) by golden-section search on the concave map
/// u -> uv - phi(u). Works for any extended function; used to close the
/// involution phi_** = phi numerically.
double legendre_sup(const ExtendedOrliczFunction& phi, double v);

struct GrowthProbe {
  double u_lo = 1e-3;
  double u_hi = 1e3;
  std::size_t doubling_samples = 64;
  /// Ratios phi(2u)/phi(u) above this count as blowing up.
  double k_cap = 64.0;
  /// phi(u)/u must climb monotonically past this to report an N-function at infinity.
  double divergence_threshold = 1e6;
};

struct GrowthReport {
  Verdict delta2_zero = Verdict::unknown;
  Verdict delta2_inf = Verdict::unknown;
  Verdict delta2_full = Verdict::unknown;
  Verdict n_at_infinity = Verdict::unknown;
  /// phi(2u) <= witness_K * phi(u) for u >= witness_u0 (Delta2 at infinity).
  std::optional<double> witness_K;
  std::optional<double> witness_u0;
  /// phi(2u) <= zero_witness_K * phi(u) for u <= zero_witness_u0 (Delta2 at zero).
  std::optional<double> zero_witness_K;
  std::optional<double> zero_witness_u0;
  /// True when the verdicts come from closed-form analysis rather than probing.
  bool analytic = true;
  std::pair<double, double> probed_range{0.0, 0.0};
};

GrowthReport growth_report(const OrliczFunction& phi, const GrowthProbe& probe = {});

/// sigma = sup_{u in [lo, hi]} 2 phi(u/2) / phi(u). Requires lo > d_phi.
double sigma_on_interval(const OrliczFunction& phi, double lo, double hi);

}  // namespace olspace
