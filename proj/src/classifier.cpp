#include "olspace/classifier.hpp"

#include <algorithm>

#include "olspace/errors.hpp"

namespace olspace {

std::string_view to_string(Property p) {
  switch (p) {
    case Property::RNP: return "RNP";
    case Property::SD2P: return "SD2P";
    case Property::D2P: return "D2P";
    case Property::LD2P: return "LD2P";
    case Property::DLD2P: return "DLD2P";
    case Property::DD2P: return "DD2P";
    case Property::Daugavet: return "Daugavet";
    case Property::OrderContinuousSubspaceIsMIdeal: return "OrderContinuousSubspaceIsMIdeal";
    case Property::DualOctahedral: return "DualOctahedral";
    case Property::DualWeaklyOctahedral: return "DualWeaklyOctahedral";
    case Property::DualLocallyOctahedral: return "DualLocallyOctahedral";
    case Property::IsometricallyL1: return "IsometricallyL1";
  }
  return "";
}

const ClassificationEntry& ClassificationReport::at(Property p) const {
  for (const auto& e : entries) {
    if (e.property == p) return e;
  }
  throw std::out_of_range("classification report has no entry for " + std::string(to_string(p)));
}

namespace {

struct Rule {
  Verdict conclusion;
  std::string text;
  std::vector<Premise> premises;
  std::string note = {};
};

// The first rule whose premises all hold decides the entry. Otherwise the entry
// is unknown and lists the premises that kept the remaining rules from firing.
ClassificationEntry decide(Property prop, const std::vector<Rule>& rules, std::string fallback_note) {
  ClassificationEntry e;
  e.property = prop;
  for (const auto& r : rules) {
    const bool fires = std::all_of(r.premises.begin(), r.premises.end(),
                                   [](const Premise& p) { return p.verdict == Verdict::holds; });
    if (fires) {
      e.verdict = r.conclusion;
      e.rule = r.text;
      e.premises = r.premises;
      e.note = r.note;
      return e;
    }
  }
  e.verdict = Verdict::unknown;
  e.rule = "no rule applies";
  for (const auto& r : rules) {
    for (const auto& p : r.premises) {
      if (p.verdict == Verdict::unknown) e.premises.push_back(p);
    }
  }
  e.note = std::move(fallback_note);
  return e;
}

Premise negated(const Premise& p, std::string text) { return {std::move(text), !p.verdict}; }

std::string delta2_label(const SpecFacts& f) {
  return "phi satisfies the appropriate Delta2 condition (" + f.appropriate_delta2_name + ")";
}

std::string rnp_premise_text(const SpecFacts& f) {
  return std::string(f.sequence ? "lambda" : "Lambda") + "_{phi,w} has the RNP";
}

}  // namespace

Weight::Regularity weight_regular(const Weight& w) { return w.regular(); }

SpecFacts spec_facts(const SpaceSpec& spec) {
  if (spec.side != Side::lambda) {
    throw Unsupported("classification rules cover Lambda-side spaces only");
  }
  SpecFacts f;
  const OrliczFunction phi = OrliczFunction::from_extended(spec.phi);
  const GrowthReport g = growth_report(phi);
  f.sequence = spec.is_sequence();
  f.nondegenerate = from_bool(phi.a() == 0.0);
  f.linear = from_bool(phi.is_linear());
  f.n_at_infinity = g.n_at_infinity;
  if (f.sequence) {
    f.appropriate_delta2 = g.delta2_zero;
    f.appropriate_delta2_name = "Delta2 at zero, sequence space";
  } else if (spec.gamma() < kInf) {
    f.appropriate_delta2 = g.delta2_inf;
    f.appropriate_delta2_name = "Delta2 at infinity, gamma finite";
  } else {
    f.appropriate_delta2 = g.delta2_full;
    f.appropriate_delta2_name = "Delta2 everywhere, gamma infinite";
  }
  f.t_over_w_vanishes = from_bool(spec.weight.limit_t_over_big_w() == 0.0);
  f.weight_regular = spec.weight.regular().verdict;
  f.constant_weight = spec.weight.is_constant();
  return f;
}

ClassificationEntry classify_rnp(const SpaceSpec& spec) {
  const SpecFacts f = spec_facts(spec);
  const Premise d2{delta2_label(f), f.appropriate_delta2};
  std::vector<Rule> rules;
  if (f.sequence) {
    rules.push_back({Verdict::holds, "Orlicz-Lorentz sequence space has the RNP iff phi satisfies Delta2 at zero", {d2}});
    rules.push_back({Verdict::fails, "Orlicz-Lorentz sequence space has the RNP iff phi satisfies Delta2 at zero",
                     {negated(d2, "phi fails Delta2 at zero")}});
  } else if (f.linear == Verdict::holds) {
    const Premise lim{"lim_{t->0+} t/W(t) = 0", f.t_over_w_vanishes};
    const std::string text = "Lorentz space Lambda_{1,w} (phi linear) has the RNP iff lim_{t->0+} t/W(t) = 0";
    rules.push_back({Verdict::holds, text, {{"phi is linear", f.linear}, lim}});
    rules.push_back({Verdict::fails, text, {{"phi is linear", f.linear}, negated(lim, "lim_{t->0+} t/W(t) > 0")}});
  } else {
    const Premise growth{"phi is an N-function at infinity or lim_{t->0+} t/W(t) = 0",
                         f.n_at_infinity || f.t_over_w_vanishes};
    rules.push_back({Verdict::holds,
                     "RNP iff (phi N-function at infinity or t/W(t) -> 0) and the appropriate Delta2 condition",
                     {growth, d2}});
    rules.push_back({Verdict::fails,
                     "phi not an N-function at infinity with lim t/W(t) > 0 embeds L1 isomorphically, so no RNP",
                     {negated(growth, "phi is not an N-function at infinity and lim_{t->0+} t/W(t) > 0")}});
    rules.push_back({Verdict::fails, "RNP forces order continuity, which needs the appropriate Delta2 condition",
                     {negated(d2, "phi fails the appropriate Delta2 condition")}});
  }
  return decide(Property::RNP, rules, "");
}

std::vector<ClassificationEntry> classify_d2p_bundle(const SpaceSpec& spec) {
  const SpecFacts f = spec_facts(spec);
  const ClassificationEntry rnp = classify_rnp(spec);
  const Premise has_rnp{rnp_premise_text(f), rnp.verdict};
  const Premise nondeg{"phi is nondegenerate (a_phi = 0)", f.nondegenerate};
  const Premise no_d2{"phi fails the appropriate Delta2 condition (" + f.appropriate_delta2_name + ")",
                      !f.appropriate_delta2};
  const Premise n_inf{"phi is an N-function at infinity", f.n_at_infinity};

  std::vector<ClassificationEntry> out;
  const std::string degenerate_note =
      f.nondegenerate == Verdict::fails ? "degenerate phi: the diameter-two rules assume a_phi = 0" : "";
  for (Property p : {Property::SD2P, Property::D2P, Property::LD2P}) {
    std::vector<Rule> rules{
        {Verdict::fails, "the RNP gives slices of the unit ball with arbitrarily small diameter", {has_rnp}},
        {Verdict::holds,
         "nondegenerate phi failing the appropriate Delta2 condition makes the order-continuous part a proper "
         "M-ideal with norming complement, hence SD2P (and D2P, LD2P)",
         {nondeg, no_d2}},
    };
    out.push_back(decide(p, rules, degenerate_note));
  }
  const std::string oct_note =
      "dual octahedrality is tied to the diameter-two properties only for nondegenerate N-functions at infinity";
  for (Property p : {Property::DualOctahedral, Property::DualWeaklyOctahedral, Property::DualLocallyOctahedral}) {
    std::vector<Rule> rules{
        {Verdict::fails,
         "nondegenerate N-function at infinity: the Koethe dual is (weakly, locally) octahedral iff the "
         "order-continuous part has the SD2P (D2P, LD2P); the RNP rules that out",
         {nondeg, n_inf, has_rnp}},
        {Verdict::holds,
         "nondegenerate N-function at infinity failing the appropriate Delta2 condition: order-continuous part has "
         "the SD2P, so its dual is octahedral",
         {nondeg, n_inf, no_d2}},
    };
    out.push_back(decide(p, rules, oct_note));
  }
  return out;
}

std::vector<ClassificationEntry> classify_daugavet(const SpaceSpec& spec) {
  const SpecFacts f = spec_facts(spec);
  const ClassificationEntry rnp = classify_rnp(spec);
  const Premise has_rnp{rnp_premise_text(f), rnp.verdict};
  const Premise nonlinear{"phi is not linear (d_phi < inf)", !f.linear};
  const Premise linear{"phi is linear (d_phi = inf)", f.linear};
  const Premise lim_pos{"lim_{t->0+} t/W(t) > 0", !f.t_over_w_vanishes};
  const Premise regular{"w is regular (sup W(t)/(t w(t)) < inf)", f.weight_regular};

  std::string open_note;
  if (!f.sequence && f.linear == Verdict::holds && f.t_over_w_vanishes == Verdict::fails) {
    if (f.weight_regular == Verdict::holds) {
      open_note = "phi linear with lim t/W(t) > 0 and w regular: the Daugavet property, if present, forces an "
                  "isometric copy of L1; no rule decides whether it is present";
    } else {
      open_note = "open problem: whether the Lorentz space Lambda_{1,w} can have the Daugavet property when w is "
                  "not regular";
    }
  }

  std::vector<ClassificationEntry> out;
  for (Property p : {Property::Daugavet, Property::DD2P, Property::DLD2P}) {
    std::vector<Rule> rules{
        {Verdict::fails, "the RNP gives slices of arbitrarily small diameter, so no DLD2P, DD2P or Daugavet property",
         {has_rnp}},
    };
    if (!f.sequence) {
      rules.push_back({Verdict::fails,
                       "nonlinear phi yields a locally uniformly nonsquare point, which is not a Delta-point; "
                       "DLD2P, DD2P and the Daugavet property need phi linear",
                       {nonlinear}});
    }
    out.push_back(decide(p, rules, open_note));
  }

  std::vector<Rule> l1_rules{
      {Verdict::fails, "L1 fails the RNP", {has_rnp}},
  };
  if (!f.sequence) {
    l1_rules.push_back({Verdict::fails,
                        "nonlinear phi yields a locally uniformly nonsquare point; L1 spaces have none",
                        {nonlinear}});
    const Premise constant{"w is constant", from_bool(f.constant_weight)};
    l1_rules.push_back({Verdict::holds,
                        "phi(u) = k u with constant weight c: the norm is k c times the L1 norm",
                        {linear, constant},
                        "equality of norms when k c = 1, i.e. W(1) = 1 for k = 1"});
  }
  std::string l1_note = open_note;
  if (!f.sequence && f.linear == Verdict::holds && regular.verdict == Verdict::holds && lim_pos.verdict == Verdict::holds) {
    l1_note = "w regular: isometric to L1 whenever the Daugavet property holds, which no rule decides here";
  }
  out.push_back(decide(Property::IsometricallyL1, l1_rules, l1_note));
  return out;
}

ClassificationEntry classify_m_ideal(const SpaceSpec& spec) {
  const SpecFacts f = spec_facts(spec);
  const Premise nondeg{"phi is nondegenerate (a_phi = 0)", f.nondegenerate};
  std::vector<Rule> rules{
      {Verdict::holds, "for nondegenerate phi the order-continuous subspace is an M-ideal (3-ball property)", {nondeg}},
  };
  return decide(Property::OrderContinuousSubspaceIsMIdeal, rules,
                f.nondegenerate == Verdict::fails ? "degenerate phi is outside the M-ideal rule" : "");
}

ClassificationReport classify(const SpaceSpec& spec) {
  std::vector<ClassificationEntry> all;
  all.push_back(classify_rnp(spec));
  for (auto& e : classify_d2p_bundle(spec)) all.push_back(std::move(e));
  for (auto& e : classify_daugavet(spec)) all.push_back(std::move(e));
  all.push_back(classify_m_ideal(spec));
  std::sort(all.begin(), all.end(), [](const ClassificationEntry& a, const ClassificationEntry& b) {
    return static_cast<int>(a.property) < static_cast<int>(b.property);
  });
  return ClassificationReport{std::move(all)};
}

std::vector<std::string> coherence_violations(const ClassificationReport& report) {
  std::vector<std::string> out;
  auto v = [&](Property p) { return report.at(p).verdict; };
  auto chain = [&](Property stronger, Property weaker) {
    if (v(stronger) == Verdict::holds && v(weaker) != Verdict::holds) {
      out.push_back(std::string(to_string(stronger)) + " holds but " + std::string(to_string(weaker)) + " does not");
    }
    if (v(weaker) == Verdict::fails && v(stronger) != Verdict::fails) {
      out.push_back(std::string(to_string(weaker)) + " fails but " + std::string(to_string(stronger)) + " does not");
    }
  };
  chain(Property::SD2P, Property::D2P);
  chain(Property::D2P, Property::LD2P);
  chain(Property::Daugavet, Property::DD2P);
  chain(Property::DD2P, Property::DLD2P);
  chain(Property::DualOctahedral, Property::DualWeaklyOctahedral);
  chain(Property::DualWeaklyOctahedral, Property::DualLocallyOctahedral);
  if (v(Property::RNP) == Verdict::holds) {
    if (v(Property::DLD2P) != Verdict::fails) out.push_back("RNP holds but DLD2P does not fail");
    if (v(Property::LD2P) != Verdict::fails) out.push_back("RNP holds but LD2P does not fail");
  }
  for (const auto& e : report.entries) {
    if (e.verdict == Verdict::unknown) continue;
    if (e.rule.empty()) out.push_back(std::string(to_string(e.property)) + " has no rule citation");
    for (const auto& p : e.premises) {
      if (p.verdict == Verdict::unknown) {
        out.push_back(std::string(to_string(e.property)) + " decided with unknown premise: " + p.condition);
      }
    }
  }
  return out;
}

}  // namespace olspace
