#include "olspace/norm.hpp"

#include <algorithm>
#include <cmath>

#include "olspace/errors.hpp"

namespace olspace {

double luxemburg_norm(const Modular& modular, const StepFunction& f, double rel_tol) {
  if (f.is_zero()) return 0.0;
  auto feasible = [&](double eps) { return modular(f.scaled(1.0 / eps)) <= 1.0; };
  double lo, hi;
  if (feasible(1.0)) {
    hi = 1.0;
    lo = 0.5;
    while (feasible(lo)) {
      hi = lo;
      lo *= 0.5;
      if (lo < 1e-300) return hi;
    }
  } else {
    lo = 1.0;
    hi = 2.0;
    while (!feasible(hi)) {
      lo = hi;
      hi *= 2.0;
      if (hi > 1e300) return kInf;
    }
  }
  while (hi - lo > rel_tol * hi) {
    const double mid = 0.5 * (lo + hi);
    if (mid <= lo || mid >= hi) break;
    if (feasible(mid)) {
      hi = mid;
    } else {
      lo = mid;
    }
  }
  return hi;
}

double lambda_norm(const ExtendedOrliczFunction& phi, const Weight& w, const StepFunction& f) {
  return luxemburg_norm([&](const StepFunction& g) { return modular_rho(phi, w, g); }, f);
}

double m_norm(const ExtendedOrliczFunction& phi, const Weight& w, const StepFunction& f) {
  return luxemburg_norm([&](const StepFunction& g) { return modular_q(phi, w, g); }, f);
}

double norm(const SpaceSpec& spec, const StepFunction& f) {
  return spec.side == Side::lambda ? lambda_norm(spec.phi, spec.weight, f)
                                   : m_norm(spec.phi, spec.weight, f);
}

double orlicz_amemiya_norm(const ExtendedOrliczFunction& phi, const Weight& w, const StepFunction& f,
                           const PSolverOptions& options) {
  if (f.is_zero()) return 0.0;
  const bool use_q = phi.is_n_function();
  auto g = [&](double k) {
    const StepFunction kf = f.scaled(k);
    const double m = use_q ? modular_q(phi, w, kf) : modular_p(phi, w, kf, options).value;
    return (1.0 + m) / k;
  };
  // g is quasiconvex in k: {k : 1 + P(kf) <= c k} is an interval.
  double k = 1.0;
  double gk = g(k);
  while (gk == kInf) {
    k *= 0.5;
    if (k < 1e-300) return kInf;
    gk = g(k);
  }
  // walk by doubling/halving until [k/2, 2k] brackets the minimum
  for (int guard = 0; guard < 2000; ++guard) {
    const double up = g(2.0 * k);
    if (up < gk) {
      k *= 2.0;
      gk = up;
      continue;
    }
    const double down = g(0.5 * k);
    if (down < gk) {
      k *= 0.5;
      gk = down;
      continue;
    }
    break;
  }
  double lo = 0.5 * k, hi = 2.0 * k;
  const double r = 0.5 * (std::sqrt(5.0) - 1.0);
  double x1 = hi - r * (hi - lo), x2 = lo + r * (hi - lo);
  double g1 = g(x1), g2 = g(x2);
  double best = std::min({g1, g2, g(k)});
  while (hi - lo > 1e-12 * hi) {
    if (g1 <= g2) {
      hi = x2;
      x2 = x1;
      g2 = g1;
      x1 = hi - r * (hi - lo);
      g1 = g(x1);
    } else {
      lo = x1;
      x1 = x2;
      g1 = g2;
      x2 = lo + r * (hi - lo);
      g2 = g(x2);
    }
    best = std::min({best, g1, g2});
  }
  return best;
}

double fundamental_lambda(const ExtendedOrliczFunction& phi, const Weight& w, double t) {
  if (!(t > 0.0) || !(t < w.gamma())) throw DomainError("fundamental_lambda needs 0 < t < gamma");
  return 1.0 / phi.inverse_upper(1.0 / w.big_w(t));
}

double fundamental_m(const ExtendedOrliczFunction& phi, const Weight& w, double t) {
  if (!(t > 0.0) || !(t < w.gamma())) throw DomainError("fundamental_m needs 0 < t < gamma");
  const double W = w.big_w(t);
  return (t / W) / phi.inverse_upper(1.0 / W);
}

double lorentz_norm_distribution(const Weight& w, const StepFunction& f) {
  // d_f is constant between consecutive distinct levels of f*
  const StepFunction fs = rearrange(f);
  const auto& p = fs.pieces();
  double total = 0.0;
  double level_end = 0.0;
  for (std::size_t j = 0; j < p.size(); ++j) {
    level_end += p[j].length;
    const double next = j + 1 < p.size() ? p[j + 1].value : 0.0;
    total += w.big_w(level_end) * (p[j].value - next);
  }
  return total;
}

}  // namespace olspace
