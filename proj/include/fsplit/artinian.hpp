#pragma once

#include <cstdint>
#include <vector>

#include "fsplit/groebner.hpp"
#include "fsplit/numeric.hpp"

namespace fsplit {

// Default ceiling on staircase work units (recursion nodes of the interval
// counter, or monomials when enumerating explicitly).
inline constexpr std::uint64_t kDefaultStaircaseBudget = 1'000'000;

// Standard monomials of a GB, i.e. a k-basis of S/J.
struct StaircaseBasis {
  std::vector<Monomial> monomials;
};

// Number of monomials in nvars variables divisible by none of `generators`.
// Counts whole intervals of the first variable at once, so the work is
// governed by the number of distinct generator exponents, not by the length.
BigInt count_standard_monomials(std::vector<Monomial> generators, std::size_t nvars,
                                std::uint64_t budget = kDefaultStaircaseBudget);

template <CoefficientField F>
bool is_artinian(const ReducedGB<F>& gb);

template <CoefficientField F>
BigInt length(const ReducedGB<F>& gb, std::uint64_t budget = kDefaultStaircaseBudget);

template <CoefficientField F>
StaircaseBasis standard_monomials(const ReducedGB<F>& gb, std::uint64_t budget = kDefaultStaircaseBudget);

// Largest set of variables containing the support of no leading monomial;
// -1 for the unit ideal.
template <CoefficientField F>
int krull_dimension(const ReducedGB<F>& gb);

// GB of L + n^[N] for the first doubling N at which the length stabilises;
// S/(that ideal) is the localisation of S/L at the origin.
template <CoefficientField F>
ReducedGB<F> local_component_at_origin(const IdealPresentation<F>& L, std::uint64_t budget = kDefaultStaircaseBudget);

// Length of (S/L) localised at the origin.
template <CoefficientField F>
BigInt local_length(const IdealPresentation<F>& L, std::uint64_t budget = kDefaultStaircaseBudget);

}  // namespace fsplit
