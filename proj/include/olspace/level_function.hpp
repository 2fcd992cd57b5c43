#pragma once

#include <vector>

#include "olspace/step_function.hpp"
#include "olspace/weight.hpp"

namespace olspace {

/// One level interval [start, start + length): f0 = ratio * w there.
struct LevelBlock {
  double start = 0.0;
  double length = 0.0;
  double ratio = 0.0;
  /// int_block w = W(start + length) - W(start).
  double weight_mass = 0.0;
  /// int_block f = int_block f0.
  double mass = 0.0;
};

/// Halperin level function f0 of a decreasing step function with respect to w.
/// f0 / w is the step function ratio_steps(); f0 itself is ratio * w block by
/// block, which is a step function only when w is.
class LevelFunction {
 public:
  LevelFunction(std::vector<LevelBlock> blocks, Weight w);

  const std::vector<LevelBlock>& blocks() const noexcept { return blocks_; }
  const Weight& weight() const noexcept { return w_; }

  /// f0(t).
  double value_at(double t) const;
  /// f0 / w as a step function.
  StepFunction ratio_steps() const;
  /// int_0^t f0.
  double cumulative(double t) const;
  /// int f0.
  double integral() const;

 private:
  std::vector<LevelBlock> blocks_;
  Weight w_;
};

/// Least concave majorant of t -> int_0^t f in W-time, differentiated back.
/// Pool-adjacent-violators over the pieces of f with weights int_piece w.
/// Throws PreconditionError unless f is decreasing.
LevelFunction level_function(const StepFunction& f, const Weight& w);

}  // namespace olspace
