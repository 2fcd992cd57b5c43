#include <doctest.h>

#include <sstream>

#include "olspace/errors.hpp"
#include "olspace/json_io.hpp"

using namespace olspace;
using nlohmann::json;

TEST_CASE("spec round trip") {
  const json j = json::parse(R"({"orlicz":{"family":"power","p":2.0,"k":1.0},
    "weight":{"family":"power_decay","alpha":0.5,"gamma":"inf"},"kind":"function","side":"lambda"})");
  const SpaceSpec s = io::spec_from_json(j);
  CHECK(s.gamma() == kInf);
  CHECK(s.phi(3.0) == 9.0);
  CHECK(io::spec_from_json(io::to_json(s)).weight.big_w(4.0) == doctest::Approx(4.0));
  CHECK(io::to_json(s)["weight"]["gamma"] == "inf");
}

TEST_CASE("conjugate specs for the M side") {
  const json j = json::parse(R"({"orlicz":{"family":"conjugate","of":{"family":"linear","k":2}},
    "weight":{"family":"constant","c":1},"side":"m"})");
  const SpaceSpec s = io::spec_from_json(j);
  CHECK(s.side == Side::m);
  CHECK(s.phi.b() == 2.0);
  CHECK(io::to_json(s.phi)["family"] == "conjugate");
  CHECK_THROWS_AS(io::spec_from_json(json::parse(R"({"orlicz":{"family":"conjugate","of":{"family":"linear","k":2}},
    "weight":{"family":"constant","c":1}})")), InvalidInput);
}

TEST_CASE("unknown keys and bad values are rejected") {
  CHECK_THROWS_AS(io::spec_from_json(json::parse(R"({"orlicz":{"family":"power","p":2},"weight":{"family":"constant"},"extra":1})")),
                  InvalidInput);
  CHECK_THROWS_AS(io::orlicz_from_json(json::parse(R"({"family":"power","p":2,"q":3})")), InvalidInput);
  CHECK_THROWS_AS(io::orlicz_from_json(json::parse(R"({"family":"cosh"})")), InvalidInput);
  CHECK_THROWS_AS(io::orlicz_from_json(json::parse(R"({"family":"power","p":"two"})")), InvalidInput);
  CHECK_THROWS_AS(io::weight_from_json(json::parse(R"({"family":"constant","gamma":-1})"), DomainKind::function),
                  InvalidInput);
}

TEST_CASE("step functions from CSV and JSON") {
  std::istringstream csv("length,value\n1,2\n\n3,1\n");
  const StepFunction f = io::step_function_from_csv(csv, DomainKind::function);
  CHECK(f == StepFunction({{1, 2}, {3, 1}}));
  std::istringstream empty("length,value\n");
  CHECK(io::step_function_from_csv(empty, DomainKind::function).is_zero());
  std::istringstream bad("length,value\n1,x\n");
  CHECK_THROWS_AS(io::step_function_from_csv(bad, DomainKind::function), InvalidInput);
  CHECK(io::step_function_from_json(io::to_json(f), DomainKind::function) == f);
}

TEST_CASE("report serialization") {
  const auto rep = classify(SpaceSpec(OrliczFunction::power(2.0), Weight::constant(1.0)));
  const json j = io::to_json(rep);
  REQUIRE(j.is_array());
  CHECK(j.size() == 12);
  CHECK(j[0]["property"] == "RNP");
  CHECK(j[0]["verdict"] == "holds");
  CHECK(j[0].contains("premises"));
  CHECK(io::to_table(rep).find("IsometricallyL1") != std::string::npos);
}
