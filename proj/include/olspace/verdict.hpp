#pragma once

#include <string_view>

namespace olspace {

/// Three-valued truth used by every analytic or probed condition.
enum class Verdict { holds, fails, unknown };

constexpr std::string_view to_string(Verdict v) {
  switch (v) {
    case Verdict::holds: return "holds";
    case Verdict::fails: return "fails";
    case Verdict::unknown: return "unknown";
  }
  return "unknown";
}

constexpr Verdict from_bool(bool b) { return b ? Verdict::holds : Verdict::fails; }

// Kleene connectives.
constexpr Verdict operator&&(Verdict a, Verdict b) {
  if (a == Verdict::fails || b == Verdict::fails) return Verdict::fails;
  if (a == Verdict::holds && b == Verdict::holds) return Verdict::holds;
  return Verdict::unknown;
}

constexpr Verdict operator||(Verdict a, Verdict b) {
  if (a == Verdict::holds || b == Verdict::holds) return Verdict::holds;
  if (a == Verdict::fails && b == Verdict::fails) return Verdict::fails;
  return Verdict::unknown;
}

constexpr Verdict operator!(Verdict a) {
  if (a == Verdict::holds) return Verdict::fails;
  if (a == Verdict::fails) return Verdict::holds;
  return Verdict::unknown;
}

}  // namespace olspace
