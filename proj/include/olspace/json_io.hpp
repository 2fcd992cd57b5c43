#pragma once

#include <iosfwd>
#include <string>

#include <json.hpp>

#include "olspace/classifier.hpp"
#include "olspace/modular.hpp"
#include "olspace/orlicz.hpp"
#include "olspace/step_function.hpp"
#include "olspace/weight.hpp"

// JSON and CSV (de)serialization. Every reader rejects unknown keys and throws
// InvalidInput with a message naming the offending field.

namespace olspace::io {

using nlohmann::json;

ExtendedOrliczFunction orlicz_from_json(const json& j);
json to_json(const ExtendedOrliczFunction& phi);

/// gamma is read from the weight object ("inf" or a number, default "inf").
Weight weight_from_json(const json& j, DomainKind kind);
json to_json(const Weight& w);

/// {"orlicz": {...}, "weight": {...}, "kind": "function"|"sequence", "side": "lambda"|"m"}
SpaceSpec spec_from_json(const json& j);
json to_json(const SpaceSpec& spec);
/// Reads and parses a spec file; malformed JSON becomes InvalidInput.
SpaceSpec load_spec(const std::string& path);

/// {"pieces": [[length, value], ...]}
StepFunction step_function_from_json(const json& j, DomainKind kind);
json to_json(const StepFunction& f);
/// Rows "length,value"; an optional header row and blank lines are skipped.
StepFunction step_function_from_csv(std::istream& in, DomainKind kind);

json to_json(const ClassificationReport& report);
std::string to_table(const ClassificationReport& report);

/// Doubles as JSON numbers, with +inf written as the string "inf".
json number(double x);

}  // namespace olspace::io
