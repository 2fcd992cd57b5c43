#pragma once

#include <string>
#include <string_view>
#include <vector>

#include "olspace/modular.hpp"
#include "olspace/verdict.hpp"

namespace olspace {

enum class Property {
  RNP,
  SD2P,
  D2P,
  LD2P,
  DLD2P,
  DD2P,
  Daugavet,
  OrderContinuousSubspaceIsMIdeal,
  DualOctahedral,
  DualWeaklyOctahedral,
  DualLocallyOctahedral,
  IsometricallyL1,
};

std::string_view to_string(Property p);

/// A condition the rule checked, possibly compound, with its three-valued outcome.
struct Premise {
  std::string condition;
  Verdict verdict = Verdict::unknown;
};

struct ClassificationEntry {
  Property property = Property::RNP;
  Verdict verdict = Verdict::unknown;
  std::string rule;
  std::vector<Premise> premises;
  std::string note;
};

struct ClassificationReport {
  std::vector<ClassificationEntry> entries;

  const ClassificationEntry& at(Property p) const;
};

/// Premise verdicts shared by the rules, derived once per spec.
struct SpecFacts {
  Verdict nondegenerate = Verdict::unknown;
  Verdict linear = Verdict::unknown;
  Verdict n_at_infinity = Verdict::unknown;
  Verdict appropriate_delta2 = Verdict::unknown;
  std::string appropriate_delta2_name;
  Verdict t_over_w_vanishes = Verdict::unknown;  // lim_{t->0+} t/W(t) = 0
  Verdict weight_regular = Verdict::unknown;
  bool constant_weight = false;
  bool sequence = false;
};

/// Throws Unsupported for M-side specs.
SpecFacts spec_facts(const SpaceSpec& spec);

ClassificationEntry classify_rnp(const SpaceSpec& spec);
/// SD2P, D2P, LD2P and the three dual octahedralities.
std::vector<ClassificationEntry> classify_d2p_bundle(const SpaceSpec& spec);
/// Daugavet, DD2P, DLD2P and isometric identification with L1.
std::vector<ClassificationEntry> classify_daugavet(const SpaceSpec& spec);
ClassificationEntry classify_m_ideal(const SpaceSpec& spec);

Weight::Regularity weight_regular(const Weight& w);

/// Every property, in enum order. Throws Unsupported for M-side specs.
ClassificationReport classify(const SpaceSpec& spec);

/// Violations of the implication chains SD2P => D2P => LD2P,
/// Daugavet => DD2P => DLD2P and RNP => no DLD2P / no LD2P, plus any entry
/// that decides a verdict while one of its premises is unknown.
std::vector<std::string> coherence_violations(const ClassificationReport& report);

}  // namespace olspace
