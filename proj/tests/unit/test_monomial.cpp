#include <random>

#include "doctest.h"
#include "fsplit/monomial.hpp"
#include "support/helpers.hpp"

using namespace fsplit;
using namespace fsplit::testing;

namespace {

Monomial mono(std::vector<std::uint32_t> e) { return Monomial(e); }

Monomial random_monomial(std::mt19937_64& rng, std::size_t n, std::uint32_t max) {
  std::uniform_int_distribution<std::uint32_t> d(0, max);
  std::vector<std::uint32_t> e(n);
  for (auto& v : e) v = d(rng);
  return Monomial(e);
}

}  // namespace

TEST_CASE("packing round trip") {
  std::vector<std::uint32_t> e(kMaxVariables);
  for (std::size_t i = 0; i < e.size(); ++i) e[i] = static_cast<std::uint32_t>(i * 1000 + 7);
  const Monomial m(e);
  CHECK(m.exponents(kMaxVariables) == e);
  std::uint32_t total = 0;
  for (auto v : e) total += v;
  CHECK(m.degree() == total);
}

TEST_CASE("divisibility, lcm, quotient") {
  const auto a = mono({2, 1, 0}), b = mono({3, 1, 4}), c = mono({0, 2, 1});
  CHECK(a.divides(b));
  CHECK_FALSE(b.divides(a));
  CHECK_FALSE(c.divides(b));
  CHECK(a.lcm(c) == mono({2, 2, 1}));
  CHECK(b / a == mono({1, 0, 4}));
  CHECK(a.coprime(mono({0, 0, 5})));
  CHECK_FALSE(a.coprime(c));
  CHECK(a.support() == 0b011);
}

TEST_CASE("exponent overflow is reported") {
  const auto big = Monomial::variable(0, kMaxExponent);
  CHECK(error_kind([&] { (void)(big * Monomial::variable(0)); }) == ErrorKind::ExponentOverflow);
  CHECK(error_kind([&] { (void)Monomial::variable(1, 200).pow(200); }) == ErrorKind::ExponentOverflow);
  CHECK(error_kind([&] { (void)mono({kMaxExponent + 1}); }) == ErrorKind::ExponentOverflow);
  CHECK(Monomial::variable(2, 3).pow(5) == Monomial::variable(2, 15));
}

TEST_CASE("lex and grevlex on small cases") {
  const auto lex = MonomialOrder::lex(), grl = MonomialOrder::grevlex();
  // x^2 vs xy^2 in two variables
  CHECK(lex.greater(mono({2, 0}), mono({1, 2})));
  CHECK(grl.greater(mono({1, 2}), mono({2, 0})));
  // grevlex: x y^2 z^0 > x^2 z? same degree 3, smallest variable z breaks the tie
  CHECK(grl.greater(mono({1, 2, 0}), mono({2, 0, 1})));
  CHECK(lex.compare(mono({1, 1}), mono({1, 1})) == 0);
}

TEST_CASE("block elimination puts the first block in front") {
  const auto order = MonomialOrder::block_elimination(0b001);
  CHECK(order.greater(mono({1, 0, 0}), mono({0, 5, 5})));
  CHECK(order.greater(mono({0, 2, 0}), mono({0, 0, 1})));
}

TEST_CASE("orders are total, multiplicative and well founded") {
  std::mt19937_64 rng(20261018);
  for (const auto& order : {MonomialOrder::lex(), MonomialOrder::grevlex(), MonomialOrder::block_elimination(0b0101)}) {
    for (int trial = 0; trial < 500; ++trial) {
      const auto a = random_monomial(rng, 4, 6), b = random_monomial(rng, 4, 6), c = random_monomial(rng, 4, 6);
      const int ab = order.compare(a, b);
      CHECK((ab == 0) == (a == b));
      CHECK(order.compare(b, a) == -ab);
      if (ab > 0 && order.compare(b, c) > 0) CHECK(order.compare(a, c) > 0);
      CHECK(order.compare(a * c, b * c) == ab);
      CHECK(order.compare(a, Monomial()) >= 0);
    }
  }
}

TEST_CASE("to_string") {
  const std::vector<std::string> names{"x", "y", "z"};
  CHECK(mono({2, 0, 1}).to_string(names) == "x^2*z");
  CHECK(Monomial().to_string(names) == "1");
}
