#pragma once

// Frobenius splitting numbers of R = S/I localised at the origin, where S is a
// polynomial ring over F_p or F_p(t...). With n the ideal of all variables and
// K = (I^[q] : I):
//
//   s_e(R) * q^dim(R) = length S/(n^[q] : K) = length (K + n^[q]) / n^[q]
//
// and for Gorenstein R with parameters x and socle lift u,
//
//   s_e(R) * q^d = length (R u^q + (x)^[q]) / (x)^[q].

#include <cstdint>
#include <optional>
#include <vector>

#include "fsplit/artinian.hpp"
#include "fsplit/ideal_ops.hpp"
#include "fsplit/numeric.hpp"

namespace fsplit {

struct ComputeOptions {
  std::uint64_t budget = kDefaultStaircaseBudget;

  // Honours FSPLIT_BUDGET when set.
  static ComputeOptions from_environment();
};

struct SplittingReport {
  unsigned e = 0;
  std::uint64_t q = 1;
  BigInt lambda = 0;
  int dim = 0;
  Rational s_e = 0;
  std::optional<BigInt> a_e;
  unsigned alpha = 0;

  friend bool operator==(const SplittingReport&, const SplittingReport&) = default;
};

struct SignatureEstimate {
  std::vector<SplittingReport> reports;  // e = 0, 1, ...
  Rational tail_max = 0;                 // over e >= 1
  Rational tail_min = 0;
  bool positive = false;                 // s_e > 0 for every 1 <= e <= e_max

  friend bool operator==(const SignatureEstimate&, const SignatureEstimate&) = default;
};

// Thrown by f_signature_sequence when the budget runs out mid-sequence.
class SignatureCostGuard : public Error {
 public:
  SignatureCostGuard(const std::string& message, SignatureEstimate partial)
      : Error(ErrorKind::CostGuardExceeded, message), partial_(std::move(partial)) {}
  const SignatureEstimate& partial() const { return partial_; }

 private:
  SignatureEstimate partial_;
};

// Builds the report fields that follow from (e, q, lambda, dim, alpha) and
// checks a_e integrality.
SplittingReport make_report(unsigned e, std::uint64_t q, BigInt lambda, int dim, unsigned alpha);

// (I^[q] : I); the unit ideal when I = 0.
template <CoefficientField F>
ReducedGB<F> frobenius_colon(const IdealPresentation<F>& I, unsigned e);

// n^[q] : (I^[q] : I).
template <CoefficientField F>
ReducedGB<F> splitting_ideal(const IdealPresentation<F>& I, unsigned e);

template <CoefficientField F>
BigInt dual_splitting_length(const IdealPresentation<F>& I, unsigned e, const ComputeOptions& options = {});

// Primal length, cross-checked against the dual form (InternalInconsistency on disagreement).
template <CoefficientField F>
SplittingReport normalized_splitting_number(const IdealPresentation<F>& I, unsigned e,
                                            const ComputeOptions& options = {});

template <CoefficientField F>
bool regularity_test(const IdealPresentation<F>& I, unsigned e, const ComputeOptions& options = {});

// Lift of the generator of the socle of S/(I + (sop)) at the origin.
template <CoefficientField F>
Polynomial<F> socle_generator(const IdealPresentation<F>& I, const std::vector<Polynomial<F>>& sop,
                              const ComputeOptions& options = {});

template <CoefficientField F>
SplittingReport gorenstein_splitting_number(const IdealPresentation<F>& I, const std::vector<Polynomial<F>>& sop,
                                            unsigned e, const std::optional<Polynomial<F>>& socle = std::nullopt,
                                            const ComputeOptions& options = {});

template <CoefficientField F>
SignatureEstimate f_signature_sequence(const IdealPresentation<F>& I, unsigned e_max,
                                       const ComputeOptions& options = {});

// Summary statistics over e >= 1 of a report list starting at e = 0.
SignatureEstimate summarize_signature(std::vector<SplittingReport> reports);

}  // namespace fsplit
