#pragma once

#include <string_view>
#include <utility>
#include <vector>

#include "olspace/orlicz.hpp"
#include "olspace/verdict.hpp"

namespace olspace {

enum class DomainKind { function, sequence };

/// Decreasing positive weight w on I = [0, gamma) with primitive W(t) = int_0^t w.
///
/// In sequence mode the weight is the sequence (w(1), w(2), ...) and is laid out
/// as the step function taking the value w(i) on [i-1, i); W is then the
/// piecewise-linear interpolation of the partial sums and gamma is infinite.
class Weight {
 public:
  enum class Family { constant, power_decay, exp_plus_const, tabulated };

  /// w = c.
  static Weight constant(double c, double gamma = kInf, DomainKind kind = DomainKind::function);
  /// w(t) = t^{-alpha}, 0 <= alpha < 1.
  static Weight power_decay(double alpha, double gamma = kInf,
                            DomainKind kind = DomainKind::function);
  /// w(t) = e^{-t} + c, c >= 0 (c > 0 required when gamma = inf).
  static Weight exp_plus_const(double c, double gamma = kInf,
                               DomainKind kind = DomainKind::function);
  /// Steps (length, value) with strictly positive nonincreasing values; the last
  /// value continues past the end of the table.
  static Weight tabulated(std::vector<std::pair<double, double>> steps, double gamma = kInf,
                          DomainKind kind = DomainKind::function);

  Family family() const noexcept { return family_; }
  std::string_view family_name() const;
  DomainKind kind() const noexcept { return kind_; }
  bool is_sequence() const noexcept { return kind_ == DomainKind::sequence; }
  double gamma() const noexcept { return gamma_; }
  double parameter() const noexcept { return param_; }
  const std::vector<std::pair<double, double>>& steps() const noexcept { return steps_; }

  /// w(t) for t in (0, gamma); in sequence mode w(ceil(t)).
  double density(double t) const;
  /// W(t); throws DomainError outside [0, gamma].
  double big_w(double t) const;
  /// W(hi) - W(lo).
  double mass(double lo, double hi) const;
  /// The t in [0, gamma] with W(t) = s; throws DomainError when s > W(gamma).
  double inverse_big_w(double s) const;

  /// lim_{t->0+} t / W(t), in closed form.
  double limit_t_over_big_w() const;
  /// lim_{t->0+} W(t) / t, in closed form (+inf for singular weights).
  double limit_big_w_over_t() const;
  bool is_constant() const;

  struct Regularity {
    Verdict verdict = Verdict::unknown;
    /// sup W(t)/(t w(t)) over (0, gamma) when known, otherwise the sup over the probed range.
    double ratio = 0.0;
  };
  /// Regularity in the sense sup_{0<t<gamma} W(t) / (t w(t)) < inf.
  Regularity regular() const;

 private:
  Weight(Family f, double param, std::vector<std::pair<double, double>> steps, double gamma,
         DomainKind kind);

  double seq_value(long i) const;           // w(i), i >= 1
  double seq_partial_sum(long n) const;     // w(1) + ... + w(n)
  double continuous_w(double t) const;
  double continuous_big_w(double t) const;

  Family family_;
  double param_ = 0.0;
  std::vector<std::pair<double, double>> steps_;
  std::vector<double> step_ends_;  // cumulative lengths
  std::vector<double> step_mass_;  // cumulative masses
  double gamma_ = kInf;
  DomainKind kind_ = DomainKind::function;
};

}  // namespace olspace
