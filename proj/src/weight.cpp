#include "olspace/weight.hpp"

#include <algorithm>
#include <cmath>
#include <string>

#include <boost/math/tools/roots.hpp>

#include "olspace/errors.hpp"

namespace olspace {

Weight::Weight(Family f, double param, std::vector<std::pair<double, double>> steps, double gamma,
               DomainKind kind)
    : family_(f), param_(param), steps_(std::move(steps)), gamma_(gamma), kind_(kind) {
  if (kind_ == DomainKind::sequence) gamma_ = kInf;
  if (!(gamma_ > 0.0) || std::isnan(gamma_)) throw InvalidInput("weight: gamma must be > 0");
  double end = 0.0, mass = 0.0;
  for (const auto& [len, val] : steps_) {
    end += len;
    mass += len * val;
    step_ends_.push_back(end);
    step_mass_.push_back(mass);
  }
}

Weight Weight::constant(double c, double gamma, DomainKind kind) {
  if (!(c > 0.0) || !std::isfinite(c)) throw InvalidInput("constant weight: c must be > 0");
  return Weight(Family::constant, c, {}, gamma, kind);
}

Weight Weight::power_decay(double alpha, double gamma, DomainKind kind) {
  if (!(alpha >= 0.0 && alpha < 1.0)) throw InvalidInput("power_decay weight: alpha must lie in [0, 1)");
  return Weight(Family::power_decay, alpha, {}, gamma, kind);
}

Weight Weight::exp_plus_const(double c, double gamma, DomainKind kind) {
  if (!(c >= 0.0) || !std::isfinite(c)) throw InvalidInput("exp_plus_const weight: c must be >= 0");
  if (c == 0.0 && (gamma == kInf || kind == DomainKind::sequence)) {
    throw InvalidInput("exp_plus_const weight: c = 0 has finite total mass, not allowed with gamma = inf");
  }
  return Weight(Family::exp_plus_const, c, {}, gamma, kind);
}

Weight Weight::tabulated(std::vector<std::pair<double, double>> steps, double gamma,
                         DomainKind kind) {
  if (steps.empty()) throw InvalidInput("tabulated weight: no steps");
  for (std::size_t i = 0; i < steps.size(); ++i) {
    const auto [len, val] = steps[i];
    if (!(len > 0.0) || !std::isfinite(len)) throw InvalidInput("tabulated weight: lengths must be > 0");
    if (!(val > 0.0) || !std::isfinite(val)) throw InvalidInput("tabulated weight: values must be > 0");
    if (i > 0 && val > steps[i - 1].second) throw InvalidInput("tabulated weight: values must be nonincreasing");
    if (kind == DomainKind::sequence && len != std::floor(len)) {
      throw InvalidInput("tabulated sequence weight: step lengths must be whole numbers");
    }
  }
  return Weight(Family::tabulated, 0.0, std::move(steps), gamma, kind);
}

std::string_view Weight::family_name() const {
  switch (family_) {
    case Family::constant: return "constant";
    case Family::power_decay: return "power_decay";
    case Family::exp_plus_const: return "exp_plus_const";
    case Family::tabulated: return "tabulated";
  }
  return "";
}

double Weight::continuous_w(double t) const {
  switch (family_) {
    case Family::constant: return param_;
    case Family::power_decay: return param_ == 0.0 ? 1.0 : std::pow(t, -param_);
    case Family::exp_plus_const: return std::exp(-t) + param_;
    case Family::tabulated: {
      const auto it = std::upper_bound(step_ends_.begin(), step_ends_.end(), t);
      if (it == step_ends_.end()) return steps_.back().second;
      return steps_[static_cast<std::size_t>(it - step_ends_.begin())].second;
    }
  }
  return 0.0;
}

double Weight::continuous_big_w(double t) const {
  switch (family_) {
    case Family::constant: return param_ * t;
    case Family::power_decay: return std::pow(t, 1.0 - param_) / (1.0 - param_);
    case Family::exp_plus_const: return -std::expm1(-t) + param_ * t;
    case Family::tabulated: {
      const auto it = std::lower_bound(step_ends_.begin(), step_ends_.end(), t);
      if (it == step_ends_.end()) {
        return step_mass_.back() + steps_.back().second * (t - step_ends_.back());
      }
      const std::size_t j = static_cast<std::size_t>(it - step_ends_.begin());
      const double start = j == 0 ? 0.0 : step_ends_[j - 1];
      const double before = j == 0 ? 0.0 : step_mass_[j - 1];
      return before + steps_[j].second * (t - start);
    }
  }
  return 0.0;
}

double Weight::seq_value(long i) const {
  switch (family_) {
    case Family::constant: return param_;
    case Family::power_decay: return std::pow(static_cast<double>(i), -param_);
    case Family::exp_plus_const: return std::exp(-static_cast<double>(i)) + param_;
    case Family::tabulated: return continuous_w(static_cast<double>(i) - 0.5);
  }
  return 0.0;
}

double Weight::seq_partial_sum(long n) const {
  const double nd = static_cast<double>(n);
  switch (family_) {
    case Family::constant: return param_ * nd;
    case Family::tabulated: return continuous_big_w(nd);
    case Family::exp_plus_const: {
      const double r = std::exp(-1.0);
      return r * -std::expm1(-nd) / (1.0 - r) + param_ * nd;
    }
    case Family::power_decay: {
      double s = 0.0;
      for (long i = n; i >= 1; --i) s += std::pow(static_cast<double>(i), -param_);
      return s;
    }
  }
  return 0.0;
}

double Weight::density(double t) const {
  if (std::isnan(t) || t < 0.0 || t > gamma_) throw DomainError("weight evaluated outside [0, gamma]");
  if (is_sequence()) return seq_value(std::max(1L, static_cast<long>(std::ceil(t))));
  return continuous_w(t);
}

double Weight::big_w(double t) const {
  if (std::isnan(t) || t < 0.0 || t > gamma_) throw DomainError("W evaluated outside [0, gamma]");
  if (t == 0.0) return 0.0;
  if (t == kInf) return kInf;
  if (is_sequence()) {
    const double fl = std::floor(t);
    const long n = static_cast<long>(fl);
    const double frac = t - fl;
    const double base = seq_partial_sum(n);
    return frac == 0.0 ? base : base + frac * seq_value(n + 1);
  }
  return continuous_big_w(t);
}

double Weight::mass(double lo, double hi) const { return big_w(hi) - big_w(lo); }

double Weight::inverse_big_w(double s) const {
  if (std::isnan(s) || s < 0.0) throw DomainError("inverse_big_w needs s >= 0");
  if (s == 0.0) return 0.0;
  if (gamma_ < kInf && s > big_w(gamma_)) throw DomainError("inverse_big_w: s exceeds W(gamma)");
  if (is_sequence()) {
    long n = 0;
    double acc = 0.0;
    while (true) {
      const double next = seq_value(n + 1);
      if (acc + next >= s) return static_cast<double>(n) + (s - acc) / next;
      acc += next;
      ++n;
    }
  }
  switch (family_) {
    case Family::constant: return s / param_;
    case Family::power_decay: return std::pow((1.0 - param_) * s, 1.0 / (1.0 - param_));
    case Family::tabulated: {
      const auto it = std::lower_bound(step_mass_.begin(), step_mass_.end(), s);
      if (it == step_mass_.end()) {
        return step_ends_.back() + (s - step_mass_.back()) / steps_.back().second;
      }
      const std::size_t j = static_cast<std::size_t>(it - step_mass_.begin());
      const double start = j == 0 ? 0.0 : step_ends_[j - 1];
      const double before = j == 0 ? 0.0 : step_mass_[j - 1];
      return start + (s - before) / steps_[j].second;
    }
    case Family::exp_plus_const: {
      double hi = 1.0;
      while (continuous_big_w(hi) < s) hi *= 2.0;
      if (gamma_ < kInf) hi = std::min(hi, gamma_);
      auto g = [&](double t) { return continuous_big_w(t) - s; };
      std::uintmax_t iters = 200;
      const auto r = boost::math::tools::toms748_solve(
          g, 0.0, hi, -s, continuous_big_w(hi) - s, boost::math::tools::eps_tolerance<double>(52),
          iters);
      return 0.5 * (r.first + r.second);
    }
  }
  return 0.0;
}

double Weight::limit_big_w_over_t() const {
  if (is_sequence()) return seq_value(1);
  switch (family_) {
    case Family::constant: return param_;
    case Family::power_decay: return param_ > 0.0 ? kInf : 1.0;
    case Family::exp_plus_const: return 1.0 + param_;
    case Family::tabulated: return steps_.front().second;
  }
  return 0.0;
}

double Weight::limit_t_over_big_w() const {
  const double l = limit_big_w_over_t();
  return l == kInf ? 0.0 : 1.0 / l;
}

bool Weight::is_constant() const {
  switch (family_) {
    case Family::constant: return true;
    case Family::power_decay: return param_ == 0.0;
    case Family::exp_plus_const: return false;
    case Family::tabulated: {
      const bool flat = steps_.front().second == steps_.back().second;
      return flat;
    }
  }
  return false;
}

Weight::Regularity Weight::regular() const {
  switch (family_) {
    case Family::constant: return {Verdict::holds, 1.0};
    case Family::power_decay: return {Verdict::holds, 1.0 / (1.0 - param_)};
    case Family::exp_plus_const: {
      // W(t)/(t w(t)) -> 1 at 0 and (when c > 0) at infinity; bounded in between
      const double top = std::min(gamma_, 1e6);
      double sup = 1.0;
      for (int i = 0; i <= 2000; ++i) {
        const double t = 1e-6 * std::pow(top / 1e-6, i / 2000.0);
        sup = std::max(sup, continuous_big_w(t) / (t * continuous_w(t)));
      }
      return {Verdict::holds, sup};
    }
    case Family::tabulated: {
      // on each step the ratio decreases, so the supremum sits at the step starts
      double sup = 1.0;
      for (std::size_t j = 1; j < steps_.size() && step_ends_[j - 1] < gamma_; ++j) {
        sup = std::max(sup, step_mass_[j - 1] / (step_ends_[j - 1] * steps_[j].second));
      }
      const bool covered = gamma_ < kInf && step_ends_.back() >= gamma_;
      return {covered ? Verdict::holds : Verdict::unknown, sup};
    }
  }
  return {};
}

}  // namespace olspace
