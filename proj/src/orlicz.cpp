#include "olspace/orlicz.hpp"

#include <algorithm>
#include <cmath>
#include <string>

#include "olspace/errors.hpp"

namespace olspace {

namespace {

template <class... Ts>
struct overloaded : Ts... {
  using Ts::operator()...;
};
template <class... Ts>
overloaded(Ts...) -> overloaded<Ts...>;

bool positive_finite(double x) { return std::isfinite(x) && x > 0.0; }

void require(bool ok, const std::string& msg) {
  if (!ok) throw InvalidInput(msg);
}

void validate_power_params(double p, double k, std::string_view who) {
  require(std::isfinite(p) && p > 1.0, std::string(who) + ": exponent p must be > 1");
  require(positive_finite(k), std::string(who) + ": coefficient k must be > 0");
}

void validate(const family::Power& f) { validate_power_params(f.p, f.k, "power"); }
void validate(const family::Linear& f) {
  require(positive_finite(f.k), "linear: slope k must be > 0");
}
void validate(const family::ExpMinusOne&) {}
void validate(const family::LinearSplicePower& f) {
  validate_power_params(f.p, f.k, "linear_splice_power");
  require(positive_finite(f.u0), "linear_splice_power: u0 must be > 0");
  require(std::isfinite(f.shift) && f.shift >= 0.0, "linear_splice_power: shift must be >= 0");
}
void validate(const family::PowerSpliceLinear& f) {
  validate_power_params(f.p, f.k, "power_splice_linear");
  require(positive_finite(f.u0), "power_splice_linear: u0 must be > 0");
}
void validate(const family::ZeroThenInfinite& f) {
  require(positive_finite(f.k), "zero_then_infinite: k must be > 0");
}
void validate(const family::ExpConjugate&) {}
void validate(const family::LinearSplicePowerConjugate& f) { validate(f.of); }
void validate(const family::PowerSpliceLinearConjugate& f) { validate(f.of); }

void validate(const family::Tabulated& t) {
  require(t.u.size() == t.phi.size(), "tabulated: node arrays differ in length");
  require(t.u.size() >= 2, "tabulated: need at least 2 nodes");
  require(t.u[0] == 0.0 && t.phi[0] == 0.0, "tabulated: first node must be (0, 0)");
  for (std::size_t i = 0; i < t.u.size(); ++i) {
    require(std::isfinite(t.u[i]) && std::isfinite(t.phi[i]), "tabulated: nodes must be finite");
    if (i > 0) require(t.u[i] > t.u[i - 1], "tabulated: u must be strictly increasing");
  }
  require(t.slope(0) >= 0.0, "tabulated: values must be nondecreasing");
  for (std::size_t i = 1; i < t.segments(); ++i) {
    const double prev = t.slope(i - 1);
    require(t.slope(i) >= prev - 1e-12 * std::max(1.0, std::abs(prev)),
            "tabulated: table is not convex (slopes decrease at node " + std::to_string(i) + ")");
  }
  if (!t.finite_domain) require(t.phi.back() > 0.0, "tabulated: function is identically zero");
}

}  // namespace

// ExtendedOrliczFunction

ExtendedOrliczFunction::ExtendedOrliczFunction(Family f) : family_(std::move(f)) {
  std::visit([](const auto& fam) { validate(fam); }, family_);
  std::visit(
      [this](const auto& fam) {
        a_ = fam.a();
        b_ = fam.b();
        d_ = fam.d();
      },
      family_);
}

double ExtendedOrliczFunction::operator()(double u) const {
  if (std::isnan(u) || u < 0.0) throw DomainError("Orlicz function evaluated at negative or NaN argument");
  if (u > b_) return kInf;
  if (u == kInf) return kInf;
  return std::visit([u](const auto& fam) { return fam.value(u); }, family_);
}

double ExtendedOrliczFunction::derivative(double u) const {
  if (std::isnan(u) || u < 0.0) throw DomainError("derivative at negative or NaN argument");
  if (u > b_) return kInf;
  return std::visit([u](const auto& fam) { return fam.derivative(u); }, family_);
}

double ExtendedOrliczFunction::value_at_b() const {
  return std::visit([](const auto& fam) { return fam.value_at_b(); }, family_);
}

double ExtendedOrliczFunction::slope_at_zero() const {
  return std::visit([](const auto& fam) { return fam.slope_at_zero(); }, family_);
}

double ExtendedOrliczFunction::slope_at_infinity() const {
  return std::visit([](const auto& fam) { return fam.slope_at_infinity(); }, family_);
}

bool ExtendedOrliczFunction::is_n_function() const {
  return a_ == 0.0 && b_ == kInf && slope_at_zero() == 0.0 && slope_at_infinity() == kInf;
}

double ExtendedOrliczFunction::inverse_upper(double s) const {
  if (!(s > 0.0) || !std::isfinite(s)) throw DomainError("inverse_upper needs a finite s > 0");
  if (b_ < kInf && s >= value_at_b()) return b_;
  return std::visit([s](const auto& fam) { return fam.inverse(s); }, family_);
}

std::string_view ExtendedOrliczFunction::family_name() const {
  return std::visit([](const auto& fam) { return std::decay_t<decltype(fam)>::name; }, family_);
}

// OrliczFunction

OrliczFunction OrliczFunction::power(double p, double k) {
  return OrliczFunction(ExtendedOrliczFunction(family::Power{p, k}));
}

OrliczFunction OrliczFunction::linear(double k) {
  return OrliczFunction(ExtendedOrliczFunction(family::Linear{k}));
}

OrliczFunction OrliczFunction::exp_minus_one() {
  return OrliczFunction(ExtendedOrliczFunction(family::ExpMinusOne{}));
}

OrliczFunction OrliczFunction::linear_splice_power(double u0, double p, double k, double shift) {
  return OrliczFunction(ExtendedOrliczFunction(family::LinearSplicePower{u0, p, k, shift}));
}

OrliczFunction OrliczFunction::power_splice_linear(double u0, double p, double k) {
  return OrliczFunction(ExtendedOrliczFunction(family::PowerSpliceLinear{u0, p, k}));
}

OrliczFunction OrliczFunction::tabulated(const std::vector<std::pair<double, double>>& nodes) {
  require(nodes.size() >= 3, "tabulated: need at least 3 nodes");
  return OrliczFunction(tabulated_extended(nodes, false));
}

OrliczFunction OrliczFunction::from_extended(ExtendedOrliczFunction f) {
  require(f.is_finite(), std::string(f.family_name()) + " is not finite-valued");
  return OrliczFunction(std::move(f));
}

ExtendedOrliczFunction tabulated_extended(const std::vector<std::pair<double, double>>& nodes,
                                          bool finite_domain) {
  family::Tabulated t;
  t.finite_domain = finite_domain;
  for (const auto& [u, v] : nodes) {
    t.u.push_back(u);
    t.phi.push_back(v);
  }
  return ExtendedOrliczFunction(std::move(t));
}

// Conjugation

namespace {

ExtendedOrliczFunction conjugate_table(const family::Tabulated& t) {
  // phi_* is piecewise linear with kinks at the slopes of phi; on [s_{i-1}, s_i]
  // the supremum is attained at node i.
  std::vector<std::pair<double, double>> nodes{{0.0, 0.0}};
  for (std::size_t i = 0; i < t.segments(); ++i) {
    const double s = t.slope(i);
    if (s <= nodes.back().first) continue;
    nodes.emplace_back(s, t.u[i + 1] * s - t.phi[i + 1]);
  }
  return tabulated_extended(nodes, true);
}

}  // namespace

ExtendedOrliczFunction conjugate(const OrliczFunction& phi) {
  return std::visit(
      overloaded{
          [](const family::Power& f) {
            const double kstar = (1.0 - 1.0 / f.p) * std::pow(f.k * f.p, -1.0 / (f.p - 1.0));
            return ExtendedOrliczFunction(family::Power{f.p / (f.p - 1.0), kstar});
          },
          [](const family::Linear& f) {
            return ExtendedOrliczFunction(family::ZeroThenInfinite{f.k});
          },
          [](const family::ExpMinusOne&) {
            return ExtendedOrliczFunction(family::ExpConjugate{});
          },
          [](const family::LinearSplicePower& f) {
            return ExtendedOrliczFunction(family::LinearSplicePowerConjugate{f});
          },
          [](const family::PowerSpliceLinear& f) {
            return ExtendedOrliczFunction(family::PowerSpliceLinearConjugate{f});
          },
          [](const family::Tabulated& f) { return conjugate_table(f); },
          [](const family::ExpConjugate&) {
            return ExtendedOrliczFunction(family::ExpMinusOne{});
          },
          [](const family::LinearSplicePowerConjugate& f) { return ExtendedOrliczFunction(f.of); },
          [](const auto&) -> ExtendedOrliczFunction {
            throw Unsupported("conjugate: family is not finite-valued");
          },
      },
      phi.family());
}

double legendre_sup(const ExtendedOrliczFunction& phi, double v) {
  if (std::isnan(v) || v < 0.0) throw DomainError("legendre_sup needs v >= 0");
  auto h = [&](double u) { return u * v - phi(u); };
  double hi;
  if (phi.b() < kInf) {
    hi = phi.b();
  } else {
    if (v > phi.slope_at_infinity()) return kInf;
    hi = 1.0;
    int guard = 0;
    while (guard++ < 1000 && std::isfinite(h(4.0 * hi)) && h(2.0 * hi) > h(hi)) hi *= 2.0;
    hi *= 2.0;
  }
  // golden section for the concave map h on [0, hi]
  const double r = 0.5 * (std::sqrt(5.0) - 1.0);
  double lo = 0.0;
  double x1 = hi - r * (hi - lo);
  double x2 = lo + r * (hi - lo);
  double h1 = h(x1), h2 = h(x2);
  for (int it = 0; it < 200 && hi - lo > 1e-15 * std::max(1.0, hi); ++it) {
    if (h1 < h2) {
      lo = x1;
      x1 = x2;
      h1 = h2;
      x2 = lo + r * (hi - lo);
      h2 = h(x2);
    } else {
      hi = x2;
      x2 = x1;
      h2 = h1;
      x1 = hi - r * (hi - lo);
      h1 = h(x1);
    }
  }
  double best = std::max({h1, h2, h(lo), h(hi), 0.0});
  if (phi.b() < kInf) best = std::max(best, h(phi.b()));
  return best;
}

// Growth

namespace {

GrowthReport finish(GrowthReport r) {
  r.delta2_full = r.delta2_zero && r.delta2_inf;
  return r;
}

double doubling_ratio(const OrliczFunction& phi, double u) {
  const double num = phi(2.0 * u);
  const double den = phi(u);
  if (den == 0.0) return num == 0.0 ? 0.0 : kInf;
  return num / den;
}

struct SideProbe {
  Verdict verdict = Verdict::unknown;
  double max_ratio = 0.0;
  double boundary_u = 0.0;
};

// ratios ordered from the interior toward the boundary being probed
SideProbe classify_side(const std::vector<double>& ratios, const std::vector<double>& us,
                        double k_cap) {
  SideProbe out;
  bool monotone_down = true;
  bool monotone_up = true;
  for (std::size_t i = 0; i < ratios.size(); ++i) {
    out.max_ratio = std::max(out.max_ratio, ratios[i]);
    if (i > 0) {
      const double prev = ratios[i - 1];
      const double slack = 1e-9 * std::max(1.0, prev);
      if (ratios[i] > prev + slack) monotone_down = false;
      if (ratios[i] < prev - slack) monotone_up = false;
    }
  }
  out.boundary_u = us.front();
  if (std::isfinite(out.max_ratio) && out.max_ratio <= k_cap && monotone_down) {
    out.verdict = Verdict::holds;
  } else if (monotone_up && ratios.back() > k_cap) {
    out.verdict = Verdict::fails;
  }
  return out;
}

GrowthReport probe_growth(const OrliczFunction& phi, const GrowthProbe& probe) {
  GrowthReport r;
  r.analytic = false;
  r.probed_range = {probe.u_lo, probe.u_hi};
  const std::size_t n = std::max<std::size_t>(probe.doubling_samples, 4);
  std::vector<double> us(n);
  const double step = std::log(probe.u_hi / probe.u_lo) / static_cast<double>(n - 1);
  for (std::size_t i = 0; i < n; ++i) us[i] = probe.u_lo * std::exp(step * static_cast<double>(i));
  us.back() = probe.u_hi;

  const std::size_t half = n / 2;
  std::vector<double> low_u, low_r, high_u, high_r;
  for (std::size_t i = half; i-- > 0;) {  // toward 0
    low_u.push_back(us[i]);
    low_r.push_back(doubling_ratio(phi, us[i]));
  }
  for (std::size_t i = half; i < n; ++i) {  // toward infinity
    high_u.push_back(us[i]);
    high_r.push_back(doubling_ratio(phi, us[i]));
  }
  const SideProbe lo = classify_side(low_r, low_u, probe.k_cap);
  const SideProbe hi = classify_side(high_r, high_u, probe.k_cap);
  r.delta2_zero = lo.verdict;
  r.delta2_inf = hi.verdict;
  if (lo.verdict == Verdict::holds) {
    r.zero_witness_K = std::max(lo.max_ratio, 2.0);
    r.zero_witness_u0 = lo.boundary_u;
  }
  if (hi.verdict == Verdict::holds) {
    r.witness_K = std::max(hi.max_ratio, 2.0);
    r.witness_u0 = hi.boundary_u;
  }

  bool increasing = true;
  double prev = 0.0;
  for (std::size_t i = 0; i < n; ++i) {
    const double q = phi(us[i]) / us[i];
    if (q < prev) increasing = false;
    prev = q;
  }
  r.n_at_infinity = (increasing && prev > probe.divergence_threshold) ? Verdict::holds
                                                                       : Verdict::unknown;
  return finish(r);
}

}  // namespace

GrowthReport growth_report(const OrliczFunction& phi, const GrowthProbe& probe) {
  if (!(probe.u_lo > 0.0) || !(probe.u_hi > probe.u_lo)) {
    throw PreconditionError("growth_report: need 0 < u_lo < u_hi");
  }
  GrowthReport r;
  auto both = [&r](double K, double u_inf, double u_zero) {
    r.delta2_zero = r.delta2_inf = Verdict::holds;
    r.witness_K = r.zero_witness_K = K;
    r.witness_u0 = u_inf;
    r.zero_witness_u0 = u_zero;
  };
  return std::visit(
      overloaded{
          [&](const family::Power& f) {
            both(std::pow(2.0, f.p), 0.0, kInf);
            r.n_at_infinity = Verdict::holds;
            return finish(r);
          },
          [&](const family::Linear&) {
            both(2.0, 0.0, kInf);
            r.n_at_infinity = Verdict::fails;
            return finish(r);
          },
          [&](const family::ExpMinusOne&) {
            // (e^{2u}-1)/(e^u-1) = e^u + 1
            r.delta2_zero = Verdict::holds;
            r.zero_witness_K = std::exp(1.0) + 1.0;
            r.zero_witness_u0 = 1.0;
            r.delta2_inf = Verdict::fails;
            r.n_at_infinity = Verdict::holds;
            return finish(r);
          },
          [&](const family::LinearSplicePower& f) {
            if (f.shift == 0.0) {
              both(std::pow(2.0, f.p), 0.0, kInf);
            } else {
              // zero on [0, shift]; beyond 2*shift + u0 the argument 2u - shift stays below 3x
              r.delta2_zero = r.delta2_inf = Verdict::holds;
              r.zero_witness_K = std::pow(3.0, f.p);
              r.zero_witness_u0 = 0.5 * f.shift;
              r.witness_K = std::pow(3.0, f.p);
              r.witness_u0 = 2.0 * f.shift + f.u0;
            }
            r.n_at_infinity = Verdict::holds;
            return finish(r);
          },
          [&](const family::PowerSpliceLinear& f) {
            r.delta2_zero = r.delta2_inf = Verdict::holds;
            r.zero_witness_K = std::pow(2.0, f.p);
            r.zero_witness_u0 = 0.5 * f.u0;
            r.witness_K = f.p + 1.0;
            r.witness_u0 = f.u0;
            r.n_at_infinity = Verdict::fails;
            return finish(r);
          },
          [&](const auto&) { return probe_growth(phi, probe); },
      },
      phi.family());
}

// sigma

double sigma_on_interval(const OrliczFunction& phi, double lo, double hi) {
  if (!std::isfinite(lo) || !std::isfinite(hi) || lo > hi) {
    throw PreconditionError("sigma_on_interval: need a bounded interval lo <= hi");
  }
  if (!(lo > phi.d())) {
    throw PreconditionError("sigma_on_interval: interval must lie beyond the linear segment [0, d]");
  }
  auto ratio = [&](double u) { return 2.0 * phi(0.5 * u) / phi(u); };
  if (const auto* f = std::get_if<family::Power>(&phi.family())) return std::pow(2.0, 1.0 - f->p);
  if (std::holds_alternative<family::ExpMinusOne>(phi.family())) {
    return 2.0 / (std::exp(0.5 * lo) + 1.0);  // decreasing in u
  }
  if (lo == hi) return ratio(lo);
  constexpr int kSamples = 10000;
  double best = -kInf;
  int best_i = 0;
  for (int i = 0; i <= kSamples; ++i) {
    const double u = lo + (hi - lo) * i / kSamples;
    const double r = ratio(u);
    if (r > best) {
      best = r;
      best_i = i;
    }
  }
  double a = lo + (hi - lo) * std::max(0, best_i - 1) / kSamples;
  double b = lo + (hi - lo) * std::min(kSamples, best_i + 1) / kSamples;
  const double g = 0.5 * (std::sqrt(5.0) - 1.0);
  for (int it = 0; it < 100; ++it) {
    const double x1 = b - g * (b - a);
    const double x2 = a + g * (b - a);
    if (ratio(x1) > ratio(x2)) {
      b = x2;
    } else {
      a = x1;
    }
    best = std::max({best, ratio(x1), ratio(x2)});
  }
  return best;
}

}  // namespace olspace
