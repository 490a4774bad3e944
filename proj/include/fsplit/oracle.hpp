#pragma once

// Brute-force cross-checks by linear algebra over F_p on the monomial box
// [0, q)^n. Nothing here touches the Groebner machinery; polynomials are
// converted to plain exponent/coefficient lists on entry.

#include <cstdint>
#include <vector>

#include "fsplit/numeric.hpp"
#include "fsplit/polynomial.hpp"

namespace fsplit::oracle {

inline constexpr std::uint64_t kDefaultOracleBudget = 1'000'000;

// length S/((gens) + n^[q]) as q^n - rank of all truncated products m*g.
BigInt length_mod_bracket(const RingPtr<PrimeField>& ring, const std::vector<Polynomial<PrimeField>>& gens,
                          unsigned e, std::uint64_t budget = kDefaultOracleBudget);

// length ((I^[q] : I) + n^[q]) / n^[q] for homogeneous I, computing the colon
// degree by degree.
BigInt dual_splitting_length(const IdealPresentation<PrimeField>& I, unsigned e,
                             std::uint64_t budget = kDefaultOracleBudget);

// f^(q-1) ∈ n^[q], decided on the expanded power.
bool power_in_bracket(const Polynomial<PrimeField>& f, unsigned e);

}  // namespace fsplit::oracle
