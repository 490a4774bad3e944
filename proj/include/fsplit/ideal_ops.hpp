#pragma once

#include <cstdint>

#include "fsplit/groebner.hpp"

namespace fsplit {

// I^[q] for q = p^e, tagged with the exponent it was built from.
template <CoefficientField F>
struct BracketPower {
  IdealPresentation<F> ideal;
  unsigned e = 0;
  std::uint64_t q = 1;
};

// Generators of I followed by generators of J.
template <CoefficientField F>
IdealPresentation<F> ideal_sum(const IdealPresentation<F>& I, const IdealPresentation<F>& J);

// Generated by g^q for each generator g; valid because Frobenius is a ring map.
template <CoefficientField F>
IdealPresentation<F> frobenius_power(const IdealPresentation<F>& I, unsigned e);

template <CoefficientField F>
BracketPower<F> bracket_power(const IdealPresentation<F>& I, unsigned e);

// I ∩ J via elimination of an auxiliary variable from t*I + (1-t)*J.
template <CoefficientField F>
ReducedGB<F> intersect(const IdealPresentation<F>& I, const IdealPresentation<F>& J);

// (I : f) = (I ∩ (f)) / f.
template <CoefficientField F>
ReducedGB<F> colon_by_element(const IdealPresentation<F>& I, const Polynomial<F>& f);

// (I : J) folded over the generators of J in input order. ZeroDivisorColon if J = 0.
template <CoefficientField F>
ReducedGB<F> colon_ideal(const IdealPresentation<F>& I, const IdealPresentation<F>& J);

}  // namespace fsplit
