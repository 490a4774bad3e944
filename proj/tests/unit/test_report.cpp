#include "doctest.h"
#include "fsplit/report.hpp"
#include "support/helpers.hpp"

using namespace fsplit;
using namespace fsplit::testing;

TEST_CASE("splitting report encoding") {
  const auto r = make_report(1, 2, 1, 1, 0);
  const Json j = to_json(r);
  CHECK(j.dump() == R"({"e":1,"q":2,"lambda":"1","dim":1,"s_e":"1/2","a_e":"1","alpha":0})");
  CHECK(splitting_report_from_json(j) == r);
}

TEST_CASE("large values survive as strings") {
  const auto r = make_report(3, 125, big_pow(125, 9), 9, 2);
  const Json j = to_json(r);
  CHECK(j["lambda"] == to_string(big_pow(5, 27)));
  CHECK(splitting_report_from_json(Json::parse(j.dump())) == r);
}

TEST_CASE("signature round trip") {
  auto R = prime_ring(2, {"x", "y"});
  const auto s = f_signature_sequence(ideal(R, {"x*y"}), 3);
  const Json j = to_json(s);
  CHECK(j["tail_min"] == "1/8");
  CHECK(signature_from_json(Json::parse(j.dump())) == s);
}

TEST_CASE("probe reports round trip") {
  auto R = prime_ring(2, {"x", "y", "z"});
  const auto I = ideal(R, {"x*y"});
  std::vector<CoordinatePrime> sample{make_coordinate_prime(R, {"x"}), make_coordinate_prime(R, {"x", "y"}),
                                      make_coordinate_prime(R, {"x", "y", "z"}, "M")};
  CHECK(prime_from_json(to_json(sample[2])) == sample[2]);

  const auto scan = semicontinuity_scan(I, sample, 1, {rat("0"), rat("1/2")});
  const auto back = semicontinuity_from_json(Json::parse(to_json(scan).dump()));
  CHECK(to_json(back).dump() == to_json(scan).dump());
  CHECK(back.passed() == scan.passed());

  const auto mono = check_localization_monotonicity(I, make_prime_chain(R, {{"x"}, {"x", "y"}}), 1, {true, true});
  CHECK(to_json(monotonicity_from_json(to_json(mono))).dump() == to_json(mono).dump());

  const auto kunz = check_kunz_constancy(I, sample, {true, true});
  const auto kb = kunz_from_json(to_json(kunz));
  CHECK(kb.sums == kunz.sums);
  CHECK(kb.holds == kunz.holds);
}

TEST_CASE("malformed documents") {
  CHECK_THROWS(splitting_report_from_json(Json{{"e", 1}}));
  Json bad = to_json(make_report(1, 2, 1, 1, 0));
  bad["s_e"] = "one half";
  CHECK_THROWS(splitting_report_from_json(bad));
}
