#include <cmath>
#include <set>

#include "doctest.h"
#include "support/helpers.hpp"

using namespace fsplit;
using namespace fsplit::testing;

TEST_CASE("prime field arithmetic") {
  PrimeField f5(5);
  CHECK(f5.add(Fp{2}, Fp{4}) == Fp{1});
  CHECK(f5.inv(Fp{3}) == Fp{2});
  CHECK(f5.sub(Fp{1}, Fp{3}) == Fp{3});
  CHECK(f5.from_int(-7) == Fp{3});
  CHECK(f5.pow(Fp{2}, 4) == Fp{1});
  CHECK(frobenius_map(f5, Fp{3}, 1) == Fp{3});
  CHECK(error_kind([&] { f5.inv(Fp{0}); }) == ErrorKind::DivisionByZero);
}

TEST_CASE("prime field rejects composite characteristic") {
  CHECK(error_kind([] { PrimeField f(4); }) == ErrorKind::NonPrimeCharacteristic);
  CHECK(error_kind([] { PrimeField f(1); }) == ErrorKind::NonPrimeCharacteristic);
  CHECK_FALSE(error_kind([] { PrimeField f(13); }));
}

TEST_CASE("every nonzero element of F_p has an inverse") {
  for (std::uint32_t p : {2u, 3u, 5u, 7u, 11u, 13u}) {
    PrimeField f(p);
    for (std::uint32_t a = 1; a < p; ++a) CHECK(f.mul(Fp{a}, f.inv(Fp{a})) == f.one());
  }
}

TEST_CASE("rational functions cancel") {
  FunctionField k(2, {"t"});
  const auto t = k.transcendental(0);
  const auto t1 = k.add(t, k.one());
  const auto a = k.div(t, t1);
  const auto b = k.div(t1, k.mul(t, t));
  CHECK(k.mul(a, b) == k.inv(t));
  CHECK(k.to_string(k.mul(a, b)) == "1/t");
}

TEST_CASE("Frobenius on F_p(t)") {
  FunctionField k2(2, {"t"});
  const auto t = k2.transcendental(0);
  CHECK(frobenius_map(k2, t, 1) == k2.mul(t, t));

  FunctionField k3(3, {"t"});
  const auto s = k3.transcendental(0);
  const auto lhs = frobenius_map(k3, k3.add(s, k3.one()), 1);
  CHECK(lhs == k3.add(k3.pow(s, 3), k3.one()));

  const auto q = k3.div(k3.one(), k3.add(s, k3.one()));
  CHECK(frobenius_map(k3, q, 2) == k3.pow(q, 9));
}

TEST_CASE("alpha counts transcendentals") {
  CHECK(alpha(FieldDescriptor{5, {}}) == 0);
  CHECK(alpha(FieldDescriptor{2, {"t"}}) == 1);
  CHECK(alpha(FieldDescriptor{3, {"t1", "t2"}}) == 2);
  CHECK(FunctionField(3, {"t1", "t2"}).alpha() == 2);
}

TEST_CASE("p-basis of F_3(t1,t2) over its cubes has nine elements") {
  // t1^i t2^j with i, j < 3 are independent over k^3: each has a distinct
  // exponent class mod 3, and cubes only contribute multiples of 3.
  FunctionField k(3, {"t1", "t2"});
  std::set<std::pair<unsigned, unsigned>> classes;
  for (unsigned i = 0; i < 3; ++i)
    for (unsigned j = 0; j < 3; ++j) {
      const auto m = k.mul(k.pow(k.transcendental(0), i), k.pow(k.transcendental(1), j));
      const auto& term = m.num.terms().front();
      classes.insert({term.exponents[0] % 3, term.exponents[1] % 3});
    }
  CHECK(classes.size() == 9);
  CHECK(std::pow(3, k.alpha()) == doctest::Approx(classes.size()));
}

TEST_CASE("function field canonical form") {
  FunctionField k(5, {"t", "u"});
  const auto t = k.transcendental(0), u = k.transcendental(1);
  const auto a = k.div(k.mul(t, u), k.mul(u, k.from_int(3)));
  CHECK(a == k.div(t, k.from_int(3)));
  CHECK(a.den.is_constant());
  CHECK(k.is_zero(k.sub(a, a)));
  CHECK(error_kind([&] { k.inv(k.zero()); }) == ErrorKind::DivisionByZero);
  CHECK(error_kind([&] { k.add(t, FunctionField(5, {"t"}).one()); }) == ErrorKind::FieldMismatch);
}

TEST_CASE("multivariate gcd over F_p") {
  const std::size_t n = 2;
  const auto x = FpMPoly::variable(7, n, 0), y = FpMPoly::variable(7, n, 1);
  const auto one = FpMPoly::constant(7, n, 1);
  const auto g = x * y + one;
  const auto a = g * (x - y), b = g * (x + y * y);
  const auto d = gcd(a, b);
  CHECK((d == g || d == -g || d.divide_exact(g).has_value()));
  CHECK(g.divide_exact(d).has_value());
}
