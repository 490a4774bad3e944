#pragma once

// Splitting numbers at coordinate primes P = (subset of the variables).
// Localizing moves the variables outside P into the coefficient field, so
// every computation here ends up over F_p(t..., complement variables).

#include <string>
#include <vector>

#include "fsplit/splitting.hpp"

namespace fsplit {

struct CoordinatePrime {
  std::string name;
  std::vector<std::string> variables;  // in ring order

  std::string to_string() const;
  friend bool operator==(const CoordinatePrime&, const CoordinatePrime&) = default;
};

// Strictly increasing P_1 ⊂ P_2 ⊂ ...
struct PrimeChain {
  std::string name;
  std::vector<CoordinatePrime> primes;
};

// User-asserted properties of R; neither is computed.
struct RingFlags {
  bool equidimensional = false;
  bool connected = false;
};

template <CoefficientField F>
CoordinatePrime make_coordinate_prime(const RingPtr<F>& ring, const std::vector<std::string>& variables,
                                      std::string name = {});

template <CoefficientField F>
PrimeChain make_prime_chain(const RingPtr<F>& ring, const std::vector<std::vector<std::string>>& subsets,
                            std::string name = {});

bool is_subprime(const CoordinatePrime& p, const CoordinatePrime& q);

template <CoefficientField F>
bool contained_in_prime(const IdealPresentation<F>& I, const CoordinatePrime& P);

template <CoefficientField F>
IdealPresentation<FunctionField> localize_at_coordinate_prime(const IdealPresentation<F>& I, const CoordinatePrime& P);

template <CoefficientField F>
SplittingReport s_e_at_prime(const IdealPresentation<F>& I, const CoordinatePrime& P, unsigned e,
                             const ComputeOptions& options = {});

struct PrimeValue {
  CoordinatePrime prime;
  SplittingReport report;
};

struct MonotonicityReport {
  std::vector<PrimeValue> values;  // along the chain
  bool holds = false;
};

template <CoefficientField F>
MonotonicityReport check_localization_monotonicity(const IdealPresentation<F>& I, const PrimeChain& chain, unsigned e,
                                                   const RingFlags& flags, const ComputeOptions& options = {});

struct KunzReport {
  std::vector<CoordinatePrime> primes;
  std::vector<int> sums;  // dim(R_P) + alpha(R_P)
  bool holds = false;
};

template <CoefficientField F>
KunzReport check_kunz_constancy(const IdealPresentation<F>& I, const std::vector<CoordinatePrime>& primes,
                                const RingFlags& flags);

struct ThresholdVerdict {
  Rational threshold;
  std::vector<std::string> above;        // {s_e > r}
  std::vector<std::string> at_least;     // {s_e >= r}
  bool above_closed = false;
  bool at_least_closed = false;
};

struct SemicontinuityReport {
  unsigned e = 0;
  std::vector<PrimeValue> values;
  std::vector<int> kunz_sums;
  std::vector<ThresholdVerdict> thresholds;

  bool passed() const;
};

// Closed under generization: Q in the set and P ⊆ Q force P in the set.
bool generization_closed(const std::vector<CoordinatePrime>& sample, const std::vector<bool>& member);

SemicontinuityReport evaluate_thresholds(unsigned e, std::vector<PrimeValue> values,
                                         const std::vector<Rational>& thresholds);

template <CoefficientField F>
SemicontinuityReport semicontinuity_scan(const IdealPresentation<F>& I, const std::vector<CoordinatePrime>& primes,
                                         unsigned e, const std::vector<Rational>& thresholds,
                                         const ComputeOptions& options = {});

}  // namespace fsplit
