#pragma once

#include <functional>
#include <optional>
#include <random>
#include <string>
#include <vector>

#include "fsplit/ringspec.hpp"
#include "fsplit/splitting.hpp"

namespace fsplit::testing {

using PF = PrimeField;
using FF = FunctionField;

inline RingPtr<PF> prime_ring(std::uint32_t p, std::vector<std::string> vars,
                              MonomialOrder order = MonomialOrder::grevlex()) {
  return make_ring(PF(p), std::move(vars), order);
}

inline RingPtr<FF> function_ring(std::uint32_t p, std::vector<std::string> trans, std::vector<std::string> vars,
                                 MonomialOrder order = MonomialOrder::grevlex()) {
  return make_ring(FF(p, std::move(trans)), std::move(vars), order);
}

template <CoefficientField F>
Polynomial<F> poly(const RingPtr<F>& ring, const std::string& text) {
  return parse_polynomial(ring, SourceText{text, {1, 1}});
}

template <CoefficientField F>
IdealPresentation<F> ideal(const RingPtr<F>& ring, const std::vector<std::string>& gens) {
  std::vector<Polynomial<F>> out;
  for (const auto& g : gens) out.push_back(poly(ring, g));
  return IdealPresentation<F>(ring, std::move(out));
}

template <CoefficientField F>
std::vector<Polynomial<F>> polys(const RingPtr<F>& ring, const std::vector<std::string>& gens) {
  return ideal(ring, gens).generators();
}

inline Polynomial<PF> random_poly(const RingPtr<PF>& ring, std::mt19937_64& rng, int max_terms = 4,
                                  std::uint32_t max_degree = 3) {
  const std::size_t n = ring->variable_count();
  std::uniform_int_distribution<int> terms(0, max_terms);
  std::uniform_int_distribution<std::uint32_t> expo(0, max_degree);
  std::uniform_int_distribution<std::uint32_t> coeff(1, ring->field().characteristic() - 1);
  Polynomial<PF> f(ring);
  for (int t = terms(rng); t > 0; --t) {
    std::vector<std::uint32_t> e(n);
    for (auto& v : e) v = expo(rng);
    f += Polynomial<PF>::term(ring, Monomial(e), Fp{coeff(rng)});
  }
  return f;
}

inline Polynomial<PF> random_homogeneous(const RingPtr<PF>& ring, std::mt19937_64& rng, std::uint32_t degree,
                                         int max_terms = 3) {
  const std::size_t n = ring->variable_count();
  std::uniform_int_distribution<int> terms(1, max_terms);
  std::uniform_int_distribution<std::size_t> var(0, n - 1);
  std::uniform_int_distribution<std::uint32_t> coeff(1, ring->field().characteristic() - 1);
  Polynomial<PF> f(ring);
  for (int t = terms(rng); t > 0; --t) {
    std::vector<std::uint32_t> e(n, 0);
    for (std::uint32_t d = 0; d < degree; ++d) ++e[var(rng)];
    f += Polynomial<PF>::term(ring, Monomial(e), Fp{coeff(rng)});
  }
  return f;
}

// Kind of the fsplit::Error thrown by fn, or nullopt when it returns normally.
inline std::optional<ErrorKind> error_kind(const std::function<void()>& fn) {
  try {
    fn();
  } catch (const Error& e) {
    return e.kind();
  }
  return std::nullopt;
}

inline Rational rat(const std::string& text) { return parse_rational(text); }

}  // namespace fsplit::testing
