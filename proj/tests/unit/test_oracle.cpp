#include "doctest.h"
#include "fsplit/oracle.hpp"
#include "support/corpus.hpp"
#include "support/helpers.hpp"

using namespace fsplit;
using namespace fsplit::testing;

TEST_CASE("length modulo the bracket power") {
  auto R = prime_ring(2, {"x", "y"});
  CHECK(oracle::length_mod_bracket(R, {}, 1) == 4);
  CHECK(oracle::length_mod_bracket(R, polys(R, {"x*y"}), 1) == 3);
  auto L = prime_ring(3, {"x"});
  CHECK(oracle::length_mod_bracket(L, polys(L, {"x"}), 1) == 1);
}

TEST_CASE("length modulo the bracket power agrees with the staircase") {
  auto R = prime_ring(3, {"x", "y", "z"});
  for (const auto& gens : std::vector<std::vector<std::string>>{
           {"x^2+y^2+z^2"}, {"x*y", "y*z-x^2"}, {"x+y*z", "y^3-z"}, {"x^2*y-z", "x*y*z+1"}}) {
    for (unsigned e = 1; e <= 2; ++e) {
      const auto b = bracket_power(maximal_ideal(R), e);
      const auto gb = buchberger(ideal_sum(ideal(R, gens), b.ideal));
      CHECK(oracle::length_mod_bracket(R, polys(R, gens), e) == length(gb));
    }
  }
}

TEST_CASE("dual length examples") {
  auto R2 = prime_ring(2, {"x", "y"});
  CHECK(oracle::dual_splitting_length(ideal(R2, {}), 2) == 16);
  CHECK(oracle::dual_splitting_length(ideal(R2, {"x*y"}), 1) == 1);
  // (x^6) : (x^2) = (x^4), already inside (x^3)
  auto L = prime_ring(3, {"x"});
  CHECK(oracle::dual_splitting_length(ideal(L, {"x^2"}), 1) == 0);
  CHECK(oracle::dual_splitting_length(ideal(L, {"x"}), 1) == 1);
}

TEST_CASE("oracle refuses inhomogeneous input and oversized boxes") {
  auto R = prime_ring(5, {"x", "y"});
  CHECK(error_kind([&] { (void)oracle::dual_splitting_length(ideal(R, {"y^2-x^3"}), 1); }) == ErrorKind::NotHomogeneous);
  CHECK(error_kind([&] { (void)oracle::length_mod_bracket(R, {}, 3, 100); }) == ErrorKind::BudgetExceeded);
}

TEST_CASE("oracle matches the corpus on homogeneous entries") {
  for (const auto& entry : corpus()) {
    if (!entry.homogeneous) continue;
    const auto spec = parse_ring_spec(entry.spec);
    if (spec.over_function_field()) continue;
    const auto pres = build_presentation<PF>(spec);
    for (const auto& [e, lambda] : entry.lambda) {
      const BigInt box = big_pow(spec.characteristic, e * static_cast<unsigned>(spec.variables.size()));
      if (box > 100000) continue;
      CAPTURE(entry.name);
      CAPTURE(e);
      CHECK(to_string(oracle::dual_splitting_length(pres.ideal, e)) == lambda);
    }
  }
}

TEST_CASE("power of f inside the bracket power") {
  auto R5 = prime_ring(5, {"x", "y"});
  CHECK(oracle::power_in_bracket(poly(R5, "y^2-x^3"), 1));
  CHECK(oracle::power_in_bracket(poly(R5, "y^2-x^3"), 2));
  auto R2 = prime_ring(2, {"x", "y"});
  CHECK_FALSE(oracle::power_in_bracket(poly(R2, "x*y"), 1));
  auto R7 = prime_ring(7, {"x", "y"});
  CHECK(oracle::power_in_bracket(poly(R7, "y^2-x^3"), 1));
  auto R3 = prime_ring(3, {"x", "y", "z"});
  CHECK_FALSE(oracle::power_in_bracket(poly(R3, "x^2+y^2+z^2"), 1));
  CHECK(oracle::power_in_bracket(poly(R7, "y^2-x^3"), 2));
}
