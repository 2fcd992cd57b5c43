#include "olspace/step_function.hpp"

#include <algorithm>
#include <cmath>
#include <string>

#include "olspace/errors.hpp"

namespace olspace {

namespace {

std::vector<Piece> canonical(std::vector<Piece> in) {
  std::vector<Piece> out;
  out.reserve(in.size());
  for (const auto& p : in) {
    if (!out.empty() && out.back().value == p.value) {
      out.back().length += p.length;
    } else {
      out.push_back(p);
    }
  }
  while (!out.empty() && out.back().value == 0.0) out.pop_back();
  return out;
}

}  // namespace

StepFunction::StepFunction(std::vector<Piece> pieces, DomainKind kind) : kind_(kind) {
  for (const auto& p : pieces) {
    if (!(p.length > 0.0) || !std::isfinite(p.length)) {
      throw InvalidInput("step function: piece lengths must be finite and > 0");
    }
    if (!(p.value >= 0.0) || !std::isfinite(p.value)) {
      throw InvalidInput("step function: piece values must be finite and >= 0");
    }
    if (kind == DomainKind::sequence && p.length != std::floor(p.length)) {
      throw InvalidInput("sequence: run lengths must be whole numbers");
    }
  }
  pieces_ = canonical(std::move(pieces));
}

StepFunction StepFunction::indicator(double t, double c, DomainKind kind) {
  return StepFunction({{t, c}}, kind);
}

StepFunction StepFunction::sequence(const std::vector<double>& values) {
  std::vector<Piece> p;
  p.reserve(values.size());
  for (double v : values) p.push_back({1.0, v});
  return StepFunction(std::move(p), DomainKind::sequence);
}

double StepFunction::support_length() const {
  double s = 0.0;
  for (const auto& p : pieces_) s += p.length;
  return s;
}

double StepFunction::max_value() const {
  double m = 0.0;
  for (const auto& p : pieces_) m = std::max(m, p.value);
  return m;
}

double StepFunction::integral() const {
  double s = 0.0;
  for (const auto& p : pieces_) s += p.length * p.value;
  return s;
}

double StepFunction::value_at(double t) const {
  double end = 0.0;
  for (const auto& p : pieces_) {
    end += p.length;
    if (t < end) return p.value;
  }
  return 0.0;
}

bool StepFunction::is_decreasing() const {
  for (std::size_t i = 1; i < pieces_.size(); ++i) {
    if (pieces_[i].value > pieces_[i - 1].value) return false;
  }
  return true;
}

StepFunction StepFunction::scaled(double c) const {
  if (!(c >= 0.0) || !std::isfinite(c)) throw InvalidInput("step function: scale must be finite and >= 0");
  if (c == 0.0) return StepFunction({}, kind_);
  StepFunction out = *this;
  for (auto& p : out.pieces_) p.value *= c;
  return out;
}

double distribution(const StepFunction& f, double lambda) {
  if (std::isnan(lambda) || lambda < 0.0) throw DomainError("distribution needs lambda >= 0");
  double s = 0.0;
  for (const auto& p : f.pieces()) {
    if (p.value > lambda) s += p.length;
  }
  return s;
}

StepFunction rearrange(const StepFunction& f) {
  std::vector<Piece> p = f.pieces();
  std::stable_sort(p.begin(), p.end(), [](const Piece& x, const Piece& y) { return x.value > y.value; });
  return StepFunction(std::move(p), f.kind());
}

double cumulative(const StepFunction& f, double t) {
  double s = 0.0, start = 0.0;
  for (const auto& p : f.pieces()) {
    if (t <= start) break;
    s += p.value * (std::min(t, start + p.length) - start);
    start += p.length;
  }
  return s;
}

bool submajorizes(const StepFunction& g, const StepFunction& f) {
  const StepFunction fs = rearrange(f);
  const StepFunction gs = rearrange(g);
  std::vector<double> ts;
  double end = 0.0;
  for (const auto& p : fs.pieces()) ts.push_back(end += p.length);
  end = 0.0;
  for (const auto& p : gs.pieces()) ts.push_back(end += p.length);
  for (double t : ts) {
    const double lhs = cumulative(fs, t);
    const double rhs = cumulative(gs, t);
    if (lhs > rhs + 1e-12 * std::max(1.0, std::abs(rhs))) return false;
  }
  return true;
}

StepFunction abs_combination(const std::vector<Piece>& a, double ca, const std::vector<Piece>& b,
                             double cb, DomainKind kind) {
  std::vector<double> cuts{0.0};
  double e = 0.0;
  for (const auto& p : a) cuts.push_back(e += p.length);
  e = 0.0;
  for (const auto& p : b) cuts.push_back(e += p.length);
  std::sort(cuts.begin(), cuts.end());
  cuts.erase(std::unique(cuts.begin(), cuts.end()), cuts.end());

  auto value_of = [](const std::vector<Piece>& ps, double mid) {
    double end = 0.0;
    for (const auto& p : ps) {
      end += p.length;
      if (mid < end) return p.value;
    }
    return 0.0;
  };
  std::vector<Piece> out;
  for (std::size_t i = 1; i < cuts.size(); ++i) {
    const double mid = 0.5 * (cuts[i - 1] + cuts[i]);
    const double v = std::abs(ca * value_of(a, mid) + cb * value_of(b, mid));
    out.push_back({cuts[i] - cuts[i - 1], v});
  }
  return StepFunction(std::move(out), kind);
}

StepFunction operator+(const StepFunction& f, const StepFunction& g) {
  return abs_combination(f.pieces(), 1.0, g.pieces(), 1.0, f.kind());
}

}  // namespace olspace
