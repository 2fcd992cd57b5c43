#include "olspace/level_function.hpp"

#include <algorithm>

#include "olspace/errors.hpp"

namespace olspace {

LevelFunction::LevelFunction(std::vector<LevelBlock> blocks, Weight w)
    : blocks_(std::move(blocks)), w_(std::move(w)) {}

double LevelFunction::value_at(double t) const {
  for (const auto& b : blocks_) {
    if (t >= b.start && t < b.start + b.length) return b.ratio * w_.density(t);
  }
  return 0.0;
}

StepFunction LevelFunction::ratio_steps() const {
  std::vector<Piece> p;
  p.reserve(blocks_.size());
  for (const auto& b : blocks_) p.push_back({b.length, b.ratio});
  return StepFunction(std::move(p));
}

double LevelFunction::cumulative(double t) const {
  double s = 0.0;
  for (const auto& b : blocks_) {
    if (t <= b.start) break;
    const double end = std::min(t, b.start + b.length);
    s += end == b.start + b.length ? b.mass : b.ratio * w_.mass(b.start, end);
  }
  return s;
}

double LevelFunction::integral() const {
  double s = 0.0;
  for (const auto& b : blocks_) s += b.mass;
  return s;
}

LevelFunction level_function(const StepFunction& f, const Weight& w) {
  if (!f.is_decreasing()) throw PreconditionError("level_function: f must be decreasing (rearrange it first)");
  std::vector<LevelBlock> stack;
  double start = 0.0;
  double w_prev = 0.0;
  for (const auto& p : f.pieces()) {
    const double end = start + p.length;
    const double w_end = w.big_w(end);
    LevelBlock b{start, p.length, 0.0, w_end - w_prev, p.value * p.length};
    b.ratio = b.mass / b.weight_mass;
    // pool while the ratio would increase
    while (!stack.empty() && stack.back().ratio <= b.ratio) {
      const LevelBlock& top = stack.back();
      b.start = top.start;
      b.length += top.length;
      b.mass += top.mass;
      b.weight_mass += top.weight_mass;
      b.ratio = b.mass / b.weight_mass;
      stack.pop_back();
    }
    stack.push_back(b);
    start = end;
    w_prev = w_end;
  }
  return LevelFunction(std::move(stack), w);
}

}  // namespace olspace
