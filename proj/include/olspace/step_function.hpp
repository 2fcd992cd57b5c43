#pragma once

#include <vector>

#include "olspace/weight.hpp"

namespace olspace {

struct Piece {
  double length = 0.0;
  double value = 0.0;

  friend bool operator==(const Piece&, const Piece&) = default;
};

/// Nonnegative step function with finite support. Pieces are laid out left to
/// right from 0: piece i occupies [T_{i-1}, T_i) with T_i the cumulative length.
/// The representation is canonical: adjacent equal values are merged and
/// trailing zeros are dropped, so two equal functions compare equal.
///
/// In sequence mode every length is a whole number (a run of equal entries).
class StepFunction {
 public:
  StepFunction() = default;
  explicit StepFunction(std::vector<Piece> pieces, DomainKind kind = DomainKind::function);

  /// c * chi_(0, t).
  static StepFunction indicator(double t, double c = 1.0, DomainKind kind = DomainKind::function);
  /// Sequence with entries x(1), x(2), ...
  static StepFunction sequence(const std::vector<double>& values);

  const std::vector<Piece>& pieces() const noexcept { return pieces_; }
  DomainKind kind() const noexcept { return kind_; }
  bool is_zero() const noexcept { return pieces_.empty(); }
  double support_length() const;
  double max_value() const;
  /// int f.
  double integral() const;
  /// Value on the piece containing t (right-continuous); 0 beyond the support.
  double value_at(double t) const;
  /// True when the values are nonincreasing from left to right.
  bool is_decreasing() const;

  StepFunction scaled(double c) const;

  friend bool operator==(const StepFunction&, const StepFunction&) = default;

 private:
  std::vector<Piece> pieces_;
  DomainKind kind_ = DomainKind::function;
};

/// d_f(lambda) = |{t : f(t) > lambda}|.
double distribution(const StepFunction& f, double lambda);

/// Decreasing rearrangement f*.
StepFunction rearrange(const StepFunction& f);

/// int_0^t f, for f as laid out (not rearranged).
double cumulative(const StepFunction& f, double t);

/// f < g in the Hardy-Littlewood-Polya sense: int_0^t f* <= int_0^t g* for all t.
bool submajorizes(const StepFunction& g, const StepFunction& f);

/// |ca * a + cb * b| for positioned, possibly signed piece lists.
StepFunction abs_combination(const std::vector<Piece>& a, double ca, const std::vector<Piece>& b,
                             double cb, DomainKind kind = DomainKind::function);

/// Pointwise sum of two positioned step functions.
StepFunction operator+(const StepFunction& f, const StepFunction& g);

}  // namespace olspace
