#include "olspace/json_io.hpp"

#include <cmath>
#include <fstream>
#include <initializer_list>
#include <istream>
#include <sstream>

#include "olspace/errors.hpp"

namespace olspace::io {

namespace {

void only_keys(const json& j, std::initializer_list<const char*> allowed, const std::string& where) {
  if (!j.is_object()) throw InvalidInput(where + ": expected an object");
  for (const auto& item : j.items()) {
    bool ok = false;
    for (const char* k : allowed) ok = ok || item.key() == k;
    if (!ok) throw InvalidInput(where + ": unknown key '" + item.key() + "'");
  }
}

double get_number(const json& j, const char* key, const std::string& where) {
  if (!j.contains(key)) throw InvalidInput(where + ": missing '" + key + "'");
  const json& v = j.at(key);
  if (v.is_string() && v.get<std::string>() == "inf") return kInf;
  if (!v.is_number()) throw InvalidInput(where + ": '" + key + "' must be a number");
  return v.get<double>();
}

double get_number_or(const json& j, const char* key, double fallback, const std::string& where) {
  return j.contains(key) ? get_number(j, key, where) : fallback;
}

std::vector<std::pair<double, double>> pairs(const json& j, const std::string& where) {
  if (!j.is_array()) throw InvalidInput(where + ": expected an array of pairs");
  std::vector<std::pair<double, double>> out;
  for (const auto& row : j) {
    if (!row.is_array() || row.size() != 2 || !row[0].is_number() || !row[1].is_number()) {
      throw InvalidInput(where + ": each entry must be a pair of numbers");
    }
    out.emplace_back(row[0].get<double>(), row[1].get<double>());
  }
  return out;
}

std::string family_of(const json& j, const std::string& where) {
  if (!j.is_object() || !j.contains("family") || !j.at("family").is_string()) {
    throw InvalidInput(where + ": missing string 'family'");
  }
  return j.at("family").get<std::string>();
}

json family_json(const Family& fam) {
  return std::visit(
      [](const auto& f) -> json {
        using F = std::decay_t<decltype(f)>;
        if constexpr (std::is_same_v<F, family::Power>) {
          return {{"family", "power"}, {"p", f.p}, {"k", f.k}};
        } else if constexpr (std::is_same_v<F, family::Linear>) {
          return {{"family", "linear"}, {"k", f.k}};
        } else if constexpr (std::is_same_v<F, family::ExpMinusOne>) {
          return {{"family", "exp_minus_one"}};
        } else if constexpr (std::is_same_v<F, family::LinearSplicePower>) {
          return {{"family", "linear_splice_power"}, {"u0", f.u0}, {"p", f.p}, {"k", f.k}, {"shift", f.shift}};
        } else if constexpr (std::is_same_v<F, family::PowerSpliceLinear>) {
          return {{"family", "power_splice_linear"}, {"u0", f.u0}, {"p", f.p}, {"k", f.k}};
        } else if constexpr (std::is_same_v<F, family::Tabulated>) {
          json nodes = json::array();
          for (std::size_t i = 0; i < f.u.size(); ++i) nodes.push_back({f.u[i], f.phi[i]});
          return {{"family", "tabulated"}, {"nodes", nodes}, {"finite_domain", f.finite_domain}};
        } else if constexpr (std::is_same_v<F, family::ZeroThenInfinite>) {
          return {{"family", "conjugate"}, {"of", {{"family", "linear"}, {"k", f.k}}}};
        } else if constexpr (std::is_same_v<F, family::ExpConjugate>) {
          return {{"family", "conjugate"}, {"of", {{"family", "exp_minus_one"}}}};
        } else if constexpr (std::is_same_v<F, family::LinearSplicePowerConjugate>) {
          return {{"family", "conjugate"}, {"of", family_json(Family(f.of))}};
        } else {
          return {{"family", "conjugate"}, {"of", family_json(Family(f.of))}};
        }
      },
      fam);
}

}  // namespace

json number(double x) {
  if (x == kInf) return "inf";
  if (x == -kInf) return "-inf";
  if (std::isnan(x)) return "nan";
  return x;
}

ExtendedOrliczFunction orlicz_from_json(const json& j) {
  const std::string where = "orlicz";
  const std::string fam = family_of(j, where);
  const std::string w = where + "(" + fam + ")";
  if (fam == "power") {
    only_keys(j, {"family", "p", "k"}, w);
    return OrliczFunction::power(get_number(j, "p", w), get_number_or(j, "k", 1.0, w));
  }
  if (fam == "linear") {
    only_keys(j, {"family", "k"}, w);
    return OrliczFunction::linear(get_number_or(j, "k", 1.0, w));
  }
  if (fam == "exp_minus_one") {
    only_keys(j, {"family"}, w);
    return OrliczFunction::exp_minus_one();
  }
  if (fam == "linear_splice_power") {
    only_keys(j, {"family", "u0", "p", "k", "shift"}, w);
    return OrliczFunction::linear_splice_power(get_number(j, "u0", w), get_number(j, "p", w),
                                               get_number_or(j, "k", 1.0, w), get_number_or(j, "shift", 0.0, w));
  }
  if (fam == "power_splice_linear") {
    only_keys(j, {"family", "u0", "p", "k"}, w);
    return OrliczFunction::power_splice_linear(get_number(j, "u0", w), get_number(j, "p", w),
                                               get_number_or(j, "k", 1.0, w));
  }
  if (fam == "tabulated") {
    only_keys(j, {"family", "nodes", "finite_domain"}, w);
    if (!j.contains("nodes")) throw InvalidInput(w + ": missing 'nodes'");
    const bool finite_domain = j.value("finite_domain", false);
    const auto nodes = pairs(j.at("nodes"), w + ".nodes");
    if (!finite_domain) return OrliczFunction::tabulated(nodes);
    return tabulated_extended(nodes, true);
  }
  if (fam == "conjugate") {
    only_keys(j, {"family", "of"}, w);
    if (!j.contains("of")) throw InvalidInput(w + ": missing 'of'");
    const ExtendedOrliczFunction inner = orlicz_from_json(j.at("of"));
    return conjugate(OrliczFunction::from_extended(inner));
  }
  throw InvalidInput(where + ": unknown family '" + fam + "'");
}

json to_json(const ExtendedOrliczFunction& phi) { return family_json(phi.family()); }

Weight weight_from_json(const json& j, DomainKind kind) {
  const std::string where = "weight";
  const std::string fam = family_of(j, where);
  const std::string w = where + "(" + fam + ")";
  const double gamma = get_number_or(j, "gamma", kInf, w);
  if (fam == "constant") {
    only_keys(j, {"family", "c", "gamma"}, w);
    return Weight::constant(get_number_or(j, "c", 1.0, w), gamma, kind);
  }
  if (fam == "power_decay") {
    only_keys(j, {"family", "alpha", "gamma"}, w);
    return Weight::power_decay(get_number(j, "alpha", w), gamma, kind);
  }
  if (fam == "exp_plus_const") {
    only_keys(j, {"family", "c", "gamma"}, w);
    return Weight::exp_plus_const(get_number(j, "c", w), gamma, kind);
  }
  if (fam == "tabulated") {
    only_keys(j, {"family", "steps", "gamma"}, w);
    if (!j.contains("steps")) throw InvalidInput(w + ": missing 'steps'");
    return Weight::tabulated(pairs(j.at("steps"), w + ".steps"), gamma, kind);
  }
  throw InvalidInput(where + ": unknown family '" + fam + "'");
}

json to_json(const Weight& w) {
  json j{{"family", std::string(w.family_name())}};
  switch (w.family()) {
    case Weight::Family::constant: j["c"] = w.parameter(); break;
    case Weight::Family::power_decay: j["alpha"] = w.parameter(); break;
    case Weight::Family::exp_plus_const: j["c"] = w.parameter(); break;
    case Weight::Family::tabulated: {
      json steps = json::array();
      for (const auto& [len, val] : w.steps()) steps.push_back({len, val});
      j["steps"] = steps;
      break;
    }
  }
  j["gamma"] = number(w.gamma());
  return j;
}

SpaceSpec spec_from_json(const json& j) {
  only_keys(j, {"orlicz", "weight", "kind", "side"}, "spec");
  if (!j.contains("orlicz")) throw InvalidInput("spec: missing 'orlicz'");
  if (!j.contains("weight")) throw InvalidInput("spec: missing 'weight'");
  const std::string kind = j.value("kind", "function");
  const std::string side = j.value("side", "lambda");
  if (kind != "function" && kind != "sequence") throw InvalidInput("spec: kind must be 'function' or 'sequence'");
  if (side != "lambda" && side != "m") throw InvalidInput("spec: side must be 'lambda' or 'm'");
  const DomainKind dk = kind == "sequence" ? DomainKind::sequence : DomainKind::function;
  return SpaceSpec(orlicz_from_json(j.at("orlicz")), weight_from_json(j.at("weight"), dk),
                   side == "m" ? Side::m : Side::lambda);
}

json to_json(const SpaceSpec& spec) {
  return {{"orlicz", to_json(spec.phi)},
          {"weight", to_json(spec.weight)},
          {"kind", spec.is_sequence() ? "sequence" : "function"},
          {"side", spec.side == Side::m ? "m" : "lambda"}};
}

SpaceSpec load_spec(const std::string& path) {
  std::ifstream in(path);
  if (!in) throw InvalidInput("cannot open config file '" + path + "'");
  json j;
  try {
    j = json::parse(in);
  } catch (const json::parse_error& e) {
    throw InvalidInput("malformed JSON in '" + path + "': " + e.what());
  }
  try {
    return spec_from_json(j);
  } catch (const json::exception& e) {
    throw InvalidInput(std::string("invalid spec: ") + e.what());
  }
}

StepFunction step_function_from_json(const json& j, DomainKind kind) {
  only_keys(j, {"pieces"}, "step function");
  if (!j.contains("pieces")) throw InvalidInput("step function: missing 'pieces'");
  std::vector<Piece> pieces;
  for (const auto& [len, val] : pairs(j.at("pieces"), "step function.pieces")) pieces.push_back({len, val});
  return StepFunction(std::move(pieces), kind);
}

json to_json(const StepFunction& f) {
  json pieces = json::array();
  for (const auto& p : f.pieces()) pieces.push_back({p.length, p.value});
  return {{"pieces", pieces}};
}

StepFunction step_function_from_csv(std::istream& in, DomainKind kind) {
  std::vector<Piece> pieces;
  std::string line;
  int row = 0;
  while (std::getline(in, line)) {
    ++row;
    if (!line.empty() && line.back() == '\r') line.pop_back();
    if (line.find_first_not_of(" \t") == std::string::npos) continue;
    const auto comma = line.find(',');
    if (comma == std::string::npos) throw InvalidInput("CSV row " + std::to_string(row) + ": expected 'length,value'");
    const std::string a = line.substr(0, comma), b = line.substr(comma + 1);
    double len = 0.0, val = 0.0;
    std::size_t used_a = 0, used_b = 0;
    try {
      len = std::stod(a, &used_a);
      val = std::stod(b, &used_b);
    } catch (const std::exception&) {
      if (row == 1 && pieces.empty()) continue;  // header
      throw InvalidInput("CSV row " + std::to_string(row) + ": not numeric");
    }
    if (a.find_first_not_of(" \t", used_a) != std::string::npos ||
        b.find_first_not_of(" \t", used_b) != std::string::npos) {
      throw InvalidInput("CSV row " + std::to_string(row) + ": trailing characters");
    }
    pieces.push_back({len, val});
  }
  return StepFunction(std::move(pieces), kind);
}

json to_json(const ClassificationReport& report) {
  json out = json::array();
  for (const auto& e : report.entries) {
    json premises = json::array();
    for (const auto& p : e.premises) {
      premises.push_back({{"condition", p.condition}, {"verdict", std::string(to_string(p.verdict))}});
    }
    json entry{{"property", std::string(to_string(e.property))},
               {"verdict", std::string(to_string(e.verdict))},
               {"rule", e.rule},
               {"premises", premises}};
    if (!e.note.empty()) entry["note"] = e.note;
    out.push_back(entry);
  }
  return out;
}

std::string to_table(const ClassificationReport& report) {
  std::ostringstream os;
  std::size_t width = 8;
  for (const auto& e : report.entries) width = std::max(width, to_string(e.property).size());
  for (const auto& e : report.entries) {
    const std::string name(to_string(e.property));
    os << name << std::string(width - name.size() + 2, ' ');
    const std::string verdict(to_string(e.verdict));
    os << verdict << std::string(9 - verdict.size(), ' ') << e.rule << '\n';
    if (!e.note.empty()) os << std::string(width + 11, ' ') << "note: " << e.note << '\n';
  }
  return os.str();
}

}  // namespace olspace::io
