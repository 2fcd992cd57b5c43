#include <doctest.h>

#include <fstream>

#include "olspace/classifier.hpp"
#include "olspace/errors.hpp"
#include "olspace/json_io.hpp"
#include "olspace/verify.hpp"

using namespace olspace;

namespace {

Verdict at(const SpaceSpec& s, Property p) { return classify(s).at(p).verdict; }

SpaceSpec lam(OrliczFunction phi, Weight w) { return SpaceSpec(phi, std::move(w)); }

}  // namespace

TEST_CASE("Kleene connectives") {
  const Verdict H = Verdict::holds, F = Verdict::fails, U = Verdict::unknown;
  CHECK((H && U) == U);
  CHECK((F && U) == F);
  CHECK((H || U) == H);
  CHECK((F || U) == U);
  CHECK(!U == U);
  CHECK(!H == F);
}

TEST_CASE("RNP rules") {
  CHECK(at(lam(OrliczFunction::power(2.0), Weight::power_decay(0.5)), Property::RNP) == Verdict::holds);
  CHECK(at(lam(OrliczFunction::linear(1.0), Weight::constant(1.0)), Property::RNP) == Verdict::fails);
  CHECK(at(lam(OrliczFunction::exp_minus_one(), Weight::constant(1.0)), Property::RNP) == Verdict::fails);
  CHECK(at(lam(OrliczFunction::exp_minus_one(), Weight::constant(1.0, kInf, DomainKind::sequence)), Property::RNP) ==
        Verdict::holds);
  CHECK_THROWS_AS(classify(SpaceSpec(conjugate(OrliczFunction::power(2.0)), Weight::constant(1.0), Side::m)),
                  Unsupported);
}

TEST_CASE("diameter-two rules") {
  const auto ex = classify(lam(OrliczFunction::exp_minus_one(), Weight::constant(1.0)));
  CHECK(ex.at(Property::SD2P).verdict == Verdict::holds);
  CHECK(ex.at(Property::DualOctahedral).verdict == Verdict::holds);
  CHECK(at(lam(OrliczFunction::power(2.0), Weight::constant(1.0)), Property::LD2P) == Verdict::fails);
  // linear phi with W = 2 sqrt(t): the Lorentz criterion gives RNP and so no LD2P
  const auto lor = classify(lam(OrliczFunction::linear(1.0), Weight::power_decay(0.5)));
  CHECK(lor.at(Property::RNP).verdict == Verdict::holds);
  CHECK(lor.at(Property::LD2P).verdict == Verdict::fails);
  CHECK(lor.at(Property::DualOctahedral).verdict == Verdict::unknown);
}

TEST_CASE("Daugavet rules") {
  for (const auto& w : {Weight::constant(1.0), Weight::power_decay(0.5), Weight::tabulated({{1, 2}}, 1.0)}) {
    CHECK(at(lam(OrliczFunction::power(2.0), w), Property::Daugavet) == Verdict::fails);
  }
  const auto l1 = classify(lam(OrliczFunction::linear(1.0), Weight::constant(1.0, 1.0)));
  CHECK(l1.at(Property::IsometricallyL1).verdict == Verdict::holds);
  CHECK(l1.at(Property::IsometricallyL1).note.find("W(1) = 1") != std::string::npos);
  CHECK(l1.at(Property::Daugavet).verdict == Verdict::unknown);
  CHECK(at(lam(OrliczFunction::linear(1.0), Weight::power_decay(0.5)), Property::Daugavet) == Verdict::fails);
  // linear phi, lim t/W > 0, weight of unknown regularity: left open
  const auto open = classify(lam(OrliczFunction::linear(1.0), Weight::tabulated({{1, 3}, {1, 1}})));
  CHECK(open.at(Property::Daugavet).verdict == Verdict::unknown);
  CHECK_FALSE(open.at(Property::Daugavet).note.empty());
}

TEST_CASE("M-ideal rule and weight regularity") {
  CHECK(at(lam(OrliczFunction::power(2.0), Weight::constant(1.0)), Property::OrderContinuousSubspaceIsMIdeal) ==
        Verdict::holds);
  CHECK(at(lam(OrliczFunction::exp_minus_one(), Weight::constant(1.0)), Property::OrderContinuousSubspaceIsMIdeal) ==
        Verdict::holds);
  CHECK(at(lam(OrliczFunction::linear_splice_power(1.0, 2.0, 1.0, 0.5), Weight::constant(1.0)),
           Property::OrderContinuousSubspaceIsMIdeal) == Verdict::unknown);
  CHECK(weight_regular(Weight::constant(3.0)).verdict == Verdict::holds);
  CHECK(weight_regular(Weight::power_decay(0.5)).ratio == doctest::Approx(2.0));
  CHECK(weight_regular(Weight::tabulated({{1, 100}, {1, 1}})).verdict == Verdict::unknown);
}

TEST_CASE("every entry is cited and coherent across a pool of specs") {
  const std::vector<OrliczFunction> phis{
      OrliczFunction::linear(1.0), OrliczFunction::power(2.0), OrliczFunction::power(1.2),
      OrliczFunction::exp_minus_one(), OrliczFunction::linear_splice_power(1.0, 3.0),
      OrliczFunction::linear_splice_power(1.0, 2.0, 1.0, 1.0), OrliczFunction::power_splice_linear(1.0, 2.0),
      OrliczFunction::tabulated({{0, 0}, {1, 1}, {2, 4}})};
  const std::vector<Weight> ws{Weight::constant(1.0),
                               Weight::constant(2.0, 1.0),
                               Weight::power_decay(0.5),
                               Weight::power_decay(0.2, 3.0),
                               Weight::exp_plus_const(0.5),
                               Weight::tabulated({{1, 2}, {1, 1}}),
                               Weight::tabulated({{1, 1}, {1, 0.5}}, kInf, DomainKind::sequence)};
  for (const auto& phi : phis) {
    for (const auto& w : ws) {
      const auto rep = classify(lam(phi, w));
      CHECK(rep.entries.size() == 12);
      CHECK(coherence_violations(rep).empty());
      for (const auto& e : rep.entries) {
        CHECK_FALSE(e.rule.empty());
        if (e.verdict != Verdict::unknown) {
          for (const auto& p : e.premises) CHECK(p.verdict != Verdict::unknown);
        }
      }
      if (!phi.is_linear() && !w.is_sequence()) CHECK(rep.at(Property::Daugavet).verdict == Verdict::fails);
    }
  }
}

TEST_CASE("regression matrix matches the hand-derived table") {
  std::ifstream in(OLSPACE_FIXTURES "/classifier_matrix.json");
  REQUIRE(in);
  const auto fixture = nlohmann::json::parse(in);
  const auto matrix = verify::classifier_matrix();
  REQUIRE(fixture.size() == matrix.size());
  for (std::size_t i = 0; i < matrix.size(); ++i) {
    const auto& row = fixture[i];
    CAPTURE(row["label"].get<std::string>());
    CHECK(row["label"] == matrix[i].label);
    CHECK_FALSE(row["cites"].get<std::string>().empty());
    const SpaceSpec spec = io::spec_from_json(row["spec"]);
    CHECK(io::to_json(spec) == io::to_json(matrix[i].spec));
    const auto rep = classify(spec);
    for (const auto& e : rep.entries) {
      CAPTURE(to_string(e.property));
      CHECK(to_string(e.verdict) == row["expected"][std::string(to_string(e.property))].get<std::string>());
    }
  }
}
