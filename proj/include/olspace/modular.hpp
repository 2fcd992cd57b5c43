#pragma once

#include <vector>

#include "olspace/level_function.hpp"
#include "olspace/orlicz.hpp"
#include "olspace/step_function.hpp"
#include "olspace/weight.hpp"

namespace olspace {

enum class Side { lambda, m };

/// (phi, w, kind, side): Lambda_{phi,w}, lambda_{phi,w}, M_{phi,w} or m_{phi,w}.
/// On the Lambda side phi must be finite-valued.
struct SpaceSpec {
  ExtendedOrliczFunction phi;
  Weight weight;
  Side side = Side::lambda;

  SpaceSpec(ExtendedOrliczFunction phi, Weight weight, Side side = Side::lambda);
  DomainKind kind() const noexcept { return weight.kind(); }
  bool is_sequence() const noexcept { return weight.is_sequence(); }
  double gamma() const noexcept { return weight.gamma(); }
};

/// rho(f) = int phi(f*) w = sum phi(v_i) (W(T_i) - W(T_{i-1})) over the pieces of f*.
double modular_rho(const ExtendedOrliczFunction& phi, const Weight& w, const StepFunction& f);

/// alpha(x) = sum phi(x*(i)) w(i), for sequences.
double modular_alpha(const ExtendedOrliczFunction& phi, const Weight& w, const StepFunction& x);

/// Q(f) = int phi((f*)^0 / w) w.
double modular_q(const ExtendedOrliczFunction& phi, const Weight& w, const StepFunction& f);

struct PSolverOptions {
  int max_iterations = 10000;
  /// Stop once the objective changes by less than this, relatively.
  double rel_tol = 1e-10;
  /// Each piece of f* is split into this many equal cells.
  int cells_per_piece = 1;
};

struct PResult {
  double value = 0.0;
  /// Minimizing v, one value per cell.
  std::vector<double> v;
  /// Cell lengths, left to right from 0.
  std::vector<double> cells;
  int iterations = 0;
  bool converged = true;
};

/// P(f) = inf { int phi(f*/v) v : v decreasing, v > 0, v < w (submajorized) }
/// by projected gradient over cell-wise constant v. Returns +inf when no
/// admissible v keeps f*/v inside [0, b_phi]. Throws NumericalFailure (carrying
/// the best objective seen) when the iteration budget runs out.
PResult modular_p(const ExtendedOrliczFunction& phi, const Weight& w, const StepFunction& f,
                  const PSolverOptions& options = {});

/// Objective of the P infimum for a given cell-wise constant v on the cells
/// of modular_p; +inf if some f*/v exceeds b_phi.
double p_objective(const ExtendedOrliczFunction& phi, const std::vector<double>& f_cells,
                   const std::vector<double>& v, const std::vector<double>& cells);

/// Weighted least-squares nonincreasing fit (pool adjacent violators).
std::vector<double> isotonic_decreasing(const std::vector<double>& y, const std::vector<double>& weights);

}  // namespace olspace
