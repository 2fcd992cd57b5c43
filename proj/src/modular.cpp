#include "olspace/modular.hpp"

#include <algorithm>
#include <cmath>
#include <numeric>

#include "olspace/errors.hpp"

namespace olspace {

SpaceSpec::SpaceSpec(ExtendedOrliczFunction phi_, Weight weight_, Side side_)
    : phi(std::move(phi_)), weight(std::move(weight_)), side(side_) {
  if (side == Side::lambda && !phi.is_finite()) {
    throw InvalidInput("Lambda-side spaces need a finite-valued Orlicz function");
  }
}

namespace {

void require_kind(const Weight& w, const StepFunction& f) {
  if (w.kind() != f.kind()) throw PreconditionError("weight and function live on different domains");
  if (f.support_length() > w.gamma()) throw DomainError("support of f exceeds the interval length gamma");
}

double rho_sum(const ExtendedOrliczFunction& phi, const Weight& w, const StepFunction& f) {
  const StepFunction fs = rearrange(f);
  double total = 0.0;
  double end = 0.0;
  double w_prev = 0.0;
  for (const auto& p : fs.pieces()) {
    end += p.length;
    const double w_end = w.big_w(end);
    const double v = phi(p.value);
    if (v == kInf) return kInf;
    total += v * (w_end - w_prev);
    w_prev = w_end;
  }
  return total;
}

}  // namespace

double modular_rho(const ExtendedOrliczFunction& phi, const Weight& w, const StepFunction& f) {
  require_kind(w, f);
  return rho_sum(phi, w, f);
}

double modular_alpha(const ExtendedOrliczFunction& phi, const Weight& w, const StepFunction& x) {
  if (!x.pieces().empty() && x.kind() != DomainKind::sequence) {
    throw PreconditionError("modular_alpha needs a sequence");
  }
  require_kind(w, x);
  return rho_sum(phi, w, x);
}

double modular_q(const ExtendedOrliczFunction& phi, const Weight& w, const StepFunction& f) {
  require_kind(w, f);
  const LevelFunction lf = level_function(rearrange(f), w);
  double total = 0.0;
  for (const auto& b : lf.blocks()) {
    double ratio = b.ratio;
    if (ratio > phi.b() && ratio <= phi.b() * (1.0 + 1e-12)) ratio = phi.b();  // rounding at f0/w = b
    const double v = phi(ratio);
    if (v == kInf) return kInf;
    total += v * b.weight_mass;
  }
  return total;
}

std::vector<double> isotonic_decreasing(const std::vector<double>& y, const std::vector<double>& weights) {
  struct Block {
    double sum_wy, sum_w;
    std::size_t count;
  };
  std::vector<Block> st;
  for (std::size_t i = 0; i < y.size(); ++i) {
    Block b{weights[i] * y[i], weights[i], 1};
    while (!st.empty() && st.back().sum_wy / st.back().sum_w <= b.sum_wy / b.sum_w) {
      b.sum_wy += st.back().sum_wy;
      b.sum_w += st.back().sum_w;
      b.count += st.back().count;
      st.pop_back();
    }
    st.push_back(b);
  }
  std::vector<double> out;
  out.reserve(y.size());
  for (const auto& b : st) out.insert(out.end(), b.count, b.sum_wy / b.sum_w);
  return out;
}

double p_objective(const ExtendedOrliczFunction& phi, const std::vector<double>& f_cells,
                   const std::vector<double>& v, const std::vector<double>& cells) {
  double total = 0.0;
  for (std::size_t k = 0; k < cells.size(); ++k) {
    if (f_cells[k] == 0.0) continue;
    if (!(v[k] > 0.0)) return kInf;
    double ratio = f_cells[k] / v[k];
    if (ratio > phi.b() && ratio <= phi.b() * (1.0 + 1e-12)) ratio = phi.b();  // rounding at v = f/b
    const double val = phi(ratio);
    if (val == kInf) return kInf;
    total += val * v[k] * cells[k];
  }
  return total;
}

namespace {

// Feasible set for v, one entry per cell:
//   nonincreasing; sum_{i<=k} cells_i v_i <= W(T_k); v >= lower.
// Projections use the cell-weighted inner product.
struct Feasible {
  std::vector<double> cells;
  std::vector<double> w_avg;  // cell averages of w
  std::vector<double> lower;

  std::vector<double> project_monotone(const std::vector<double>& z) const {
    return isotonic_decreasing(z, cells);
  }

  std::vector<double> project_caps(const std::vector<double>& z) const {
    // v = z - lambda with lambda nonincreasing, nonnegative: the dual of the
    // cumulative constraints is itself an isotonic fit.
    std::vector<double> r(z.size());
    for (std::size_t k = 0; k < z.size(); ++k) r[k] = z[k] - w_avg[k];
    std::vector<double> lam = isotonic_decreasing(r, cells);
    std::vector<double> v(z.size());
    for (std::size_t k = 0; k < z.size(); ++k) v[k] = z[k] - std::max(0.0, lam[k]);
    return v;
  }

  std::vector<double> project_lower(const std::vector<double>& z) const {
    std::vector<double> v(z.size());
    for (std::size_t k = 0; k < z.size(); ++k) v[k] = std::max(z[k], lower[k]);
    return v;
  }

  // Dykstra's alternating projection onto the intersection.
  std::vector<double> project(const std::vector<double>& z) const {
    const std::size_t n = z.size();
    std::vector<double> x = z, p1(n, 0.0), p2(n, 0.0), p3(n, 0.0), y(n);
    auto step = [&](auto proj, std::vector<double>& inc) {
      for (std::size_t k = 0; k < n; ++k) y[k] = x[k] + inc[k];
      std::vector<double> nx = proj(y);
      double change = 0.0;
      for (std::size_t k = 0; k < n; ++k) {
        inc[k] = y[k] - nx[k];
        change = std::max(change, std::abs(nx[k] - x[k]) / std::max(1e-300, std::abs(nx[k])));
      }
      x = std::move(nx);
      return change;
    };
    for (int it = 0; it < 5000; ++it) {
      double change = step([&](const auto& q) { return project_monotone(q); }, p1);
      change = std::max(change, step([&](const auto& q) { return project_caps(q); }, p2));
      change = std::max(change, step([&](const auto& q) { return project_lower(q); }, p3));
      if (change < 1e-15) break;
    }
    return x;
  }
};

double weighted_dot(const std::vector<double>& a, const std::vector<double>& b,
                    const std::vector<double>& wts) {
  double s = 0.0;
  for (std::size_t k = 0; k < a.size(); ++k) s += wts[k] * a[k] * b[k];
  return s;
}

}  // namespace

PResult modular_p(const ExtendedOrliczFunction& phi, const Weight& w, const StepFunction& f,
                  const PSolverOptions& options) {
  require_kind(w, f);
  PResult res;
  const StepFunction fs = rearrange(f);
  if (fs.is_zero()) return res;

  const int per_piece = w.is_sequence() ? 1 : std::max(1, options.cells_per_piece);
  std::vector<double> f_cells;
  Feasible feas;
  double start = 0.0, w_prev = 0.0;
  for (const auto& p : fs.pieces()) {
    for (int j = 0; j < per_piece; ++j) {
      const double end = (j + 1 == per_piece) ? start + p.length * 1.0
                                              : start + p.length * (j + 1) / per_piece;
      const double cell_start = start + p.length * j / per_piece;
      const double len = end - cell_start;
      const double w_end = w.big_w(end);
      feas.cells.push_back(len);
      feas.w_avg.push_back((w_end - w_prev) / len);
      f_cells.push_back(p.value);
      w_prev = w_end;
    }
    start += p.length;
  }
  const std::size_t n = feas.cells.size();
  res.cells = feas.cells;

  // f*/v must stay in [0, b]; the smallest admissible v is f*/b itself.
  const double b = phi.b();
  feas.lower.assign(n, 0.0);
  if (b < kInf) {
    double cum = 0.0, cap = 0.0;
    for (std::size_t k = 0; k < n; ++k) {
      feas.lower[k] = f_cells[k] / b;
      cum += feas.lower[k] * feas.cells[k];
      cap += feas.w_avg[k] * feas.cells[k];
      if (cum > cap * (1.0 + 1e-12)) {
        res.value = kInf;
        res.v = feas.lower;
        return res;
      }
    }
  }

  std::vector<double> v = feas.project(feas.w_avg);
  double F = p_objective(phi, f_cells, v, feas.cells);
  if (F == kInf) {
    // the lower bound is feasible; start from it instead
    v = feas.project(feas.lower);
    F = p_objective(phi, f_cells, v, feas.cells);
  }
  double best = F;

  auto gradient = [&](const std::vector<double>& x) {
    std::vector<double> g(n);
    for (std::size_t k = 0; k < n; ++k) {
      const double s = std::min(f_cells[k] / x[k], b);
      g[k] = phi(s) - s * phi.derivative(s);
    }
    return g;
  };

  const double vmax = *std::max_element(v.begin(), v.end());
  double eta = 0.0;
  int stalled = 0;
  res.converged = false;
  int it = 0;
  for (; it < options.max_iterations; ++it) {
    if (F == 0.0) {
      res.converged = true;
      break;
    }
    const std::vector<double> g = gradient(v);
    double gmax = 0.0;
    for (double x : g) gmax = std::max(gmax, std::abs(x));
    if (gmax == 0.0) {
      res.converged = true;
      break;
    }
    if (eta == 0.0) eta = 0.5 * vmax / gmax;

    std::vector<double> vn, d(n);
    double Fn = kInf;
    bool accepted = false;
    for (int bt = 0; bt < 80; ++bt) {
      std::vector<double> z(n);
      for (std::size_t k = 0; k < n; ++k) z[k] = v[k] - eta * g[k];
      vn = feas.project(z);
      for (std::size_t k = 0; k < n; ++k) d[k] = vn[k] - v[k];
      Fn = p_objective(phi, f_cells, vn, feas.cells);
      const double model = F + weighted_dot(g, d, feas.cells) +
                           weighted_dot(d, d, feas.cells) / (2.0 * eta);
      if (Fn <= model + 1e-15 * std::abs(F)) {
        accepted = true;
        break;
      }
      eta *= 0.5;
    }
    if (!accepted) {
      res.converged = true;  // no descent left at machine precision
      break;
    }
    double dnorm = 0.0, vnorm = 0.0;
    for (std::size_t k = 0; k < n; ++k) {
      dnorm = std::max(dnorm, std::abs(d[k]));
      vnorm = std::max(vnorm, std::abs(vn[k]));
    }
    const double change = std::abs(F - Fn);
    v = std::move(vn);
    F = Fn;
    best = std::min(best, F);
    // near the minimum the objective is flat to rounding and v may keep drifting
    stalled = change <= options.rel_tol * std::abs(F) ? stalled + 1 : 0;
    if (dnorm == 0.0 || (stalled > 0 && dnorm <= 1e-8 * vnorm) || stalled >= 5) {
      res.converged = true;
      ++it;
      break;
    }
    eta *= 2.0;
  }
  res.iterations = it;
  res.v = v;
  res.value = F;
  if (!res.converged) throw NumericalFailure("modular_p: iteration budget exhausted", best);
  return res;
}

}  // namespace olspace
