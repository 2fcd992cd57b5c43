#pragma once

#include <cmath>
#include <cstdint>
#include <random>
#include <vector>

#include "olspace/step_function.hpp"

namespace testing_support {

inline bool close_rel(double a, double b, double tol) {
  if (a == b) return true;
  return std::abs(a - b) <= tol * std::max(std::abs(a), std::abs(b));
}

// Small generator for property tests.
class Gen {
 public:
  explicit Gen(std::uint64_t seed) : rng_(seed) {}
  double uniform(double lo, double hi) { return std::uniform_real_distribution<double>(lo, hi)(rng_); }
  double log_uniform(double lo, double hi) { return std::exp(uniform(std::log(lo), std::log(hi))); }
  int integer(int lo, int hi) { return std::uniform_int_distribution<int>(lo, hi)(rng_); }

  olspace::StepFunction step(int max_pieces, double room = INFINITY) {
    std::vector<olspace::Piece> p;
    double total = 0.0;
    const int n = integer(1, max_pieces);
    for (int i = 0; i < n; ++i) {
      p.push_back({log_uniform(1e-2, 5.0), log_uniform(1e-2, 10.0)});
      total += p.back().length;
    }
    if (total > room) {
      for (auto& q : p) q.length *= 0.9 * room / total;
    }
    return olspace::StepFunction(p);
  }

  olspace::StepFunction sequence(int max_len) {
    std::vector<double> v(static_cast<std::size_t>(integer(1, max_len)));
    for (auto& x : v) x = log_uniform(1e-2, 10.0);
    return olspace::StepFunction::sequence(v);
  }

 private:
  std::mt19937_64 rng_;
};

// sup_u (u v - phi(u)) on a fine u-grid plus golden refinement around the best node.
template <class F>
double grid_sup(const F& phi, double v, double u_max, int nodes = 20000) {
  double best = 0.0, best_u = 0.0;
  for (int i = 0; i <= nodes; ++i) {
    const double u = u_max * i / nodes;
    const double h = u * v - phi(u);
    if (h > best) {
      best = h;
      best_u = u;
    }
  }
  double lo = std::max(0.0, best_u - u_max / nodes), hi = best_u + u_max / nodes;
  for (int it = 0; it < 200; ++it) {
    const double m1 = lo + (hi - lo) / 3.0, m2 = hi - (hi - lo) / 3.0;
    if (m1 * v - phi(m1) < m2 * v - phi(m2)) lo = m1; else hi = m2;
  }
  return std::max(best, lo * v - phi(lo));
}

// Root of an increasing function by plain bisection.
template <class F>
double bisect(const F& g, double target, double lo, double hi) {
  for (int it = 0; it < 400 && hi - lo > 1e-15 * hi; ++it) {
    const double mid = 0.5 * (lo + hi);
    (g(mid) < target ? lo : hi) = mid;
  }
  return 0.5 * (lo + hi);
}

}  // namespace testing_support
