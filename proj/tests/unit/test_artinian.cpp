#include "doctest.h"
#include "fsplit/artinian.hpp"
#include "support/helpers.hpp"

using namespace fsplit;
using namespace fsplit::testing;

TEST_CASE("Artinian detection") {
  auto R = prime_ring(3, {"x", "y"});
  CHECK(is_artinian(buchberger(ideal(R, {"x^2", "y^3"}))));
  CHECK_FALSE(is_artinian(buchberger(ideal(R, {"x*y"}))));
  auto L = prime_ring(3, {"x"});
  CHECK(is_artinian(buchberger(ideal(L, {"x"}))));
}

TEST_CASE("lengths") {
  auto R = prime_ring(3, {"x", "y"});
  CHECK(length(buchberger(ideal(R, {"x^2", "y^3"}))) == 6);
  CHECK(length(buchberger(ideal(R, {"x", "y"}))) == 1);
  CHECK(length(buchberger(ideal(R, {"x^2", "x*y", "y^2"}))) == 3);
  CHECK(length(buchberger(ideal(R, {"1"}))) == 0);
  CHECK(error_kind([&] { (void)length(buchberger(ideal(R, {"x*y"}))); }) == ErrorKind::NotArtinian);
}

TEST_CASE("staircase enumeration matches the count") {
  auto R = prime_ring(5, {"x", "y", "z"});
  const auto gb = buchberger(ideal(R, {"x^3", "x*y^2", "y^4", "z^2-x*y", "x*z"}));
  const auto basis = standard_monomials(gb);
  CHECK(BigInt(basis.monomials.size()) == length(gb));
  const auto lead = gb.leading_monomials();
  for (const auto& m : basis.monomials)
    for (const auto& l : lead) CHECK_FALSE(l.divides(m));
}

TEST_CASE("interval counter handles huge boxes quickly") {
  std::vector<Monomial> gens{Monomial::variable(0, 30000), Monomial::variable(1, 30000), Monomial::variable(2, 30000)};
  CHECK(count_standard_monomials(gens, 3) == BigInt(30000) * 30000 * 30000);
  std::vector<Monomial> none;
  CHECK(error_kind([&] { (void)count_standard_monomials(none, 2); }) == ErrorKind::NotArtinian);
}

TEST_CASE("budget is enforced") {
  auto R = prime_ring(5, {"x", "y"});
  const auto gb = buchberger(ideal(R, {"x^50", "y^50"}));
  CHECK(error_kind([&] { (void)standard_monomials(gb, 100); }) == ErrorKind::CostGuardExceeded);
  CHECK(length(gb, 100) == 2500);
}

TEST_CASE("Krull dimension") {
  auto R3 = prime_ring(5, {"x", "y", "z"});
  CHECK(krull_dimension(buchberger(ideal(R3, {}))) == 3);
  auto R2 = prime_ring(5, {"x", "y"});
  CHECK(krull_dimension(buchberger(ideal(R2, {"x*y"}))) == 1);
  CHECK(krull_dimension(buchberger(ideal(R2, {"y^2-x^3"}))) == 1);
  CHECK(krull_dimension(buchberger(ideal(R2, {"x", "y"}))) == 0);
  CHECK(krull_dimension(buchberger(ideal(R2, {"1"}))) == -1);
  CHECK(krull_dimension(buchberger(ideal(R3, {"x*y", "x*z", "y*z"}))) == 1);
}

TEST_CASE("local length at the origin") {
  auto R = prime_ring(3, {"x", "y"});
  // two points, x = 0 and x = 1
  CHECK(local_length(ideal(R, {"x^2-x", "y"})) == 1);
  CHECK(local_length(ideal(R, {"x^2", "x*y-y"})) == 2);
  CHECK(local_length(ideal(R, {"x^3-x^2", "y^2"})) == 4);
  CHECK(local_length(ideal(R, {"x-1", "y"})) == 0);
  CHECK(local_length(ideal(R, {"x^2", "y^3"})) == 6);
}
