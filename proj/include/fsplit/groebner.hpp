#pragma once

#include <string>
#include <vector>

#include "fsplit/polynomial.hpp"

namespace fsplit {

// Reduced Groebner basis: monic, no term of any element divisible by the
// leading monomial of another, sorted by increasing leading monomial. The
// ring carries the monomial order the basis is reduced for.
template <CoefficientField F>
class ReducedGB {
 public:
  ReducedGB(RingPtr<F> ring, std::vector<Polynomial<F>> basis) : ring_(std::move(ring)), basis_(std::move(basis)) {}

  const RingPtr<F>& ring() const { return ring_; }
  const MonomialOrder& order() const { return ring_->order(); }
  const std::vector<Polynomial<F>>& basis() const { return basis_; }
  std::size_t size() const { return basis_.size(); }
  bool is_zero_ideal() const { return basis_.empty(); }
  bool is_unit_ideal() const { return basis_.size() == 1 && basis_[0].is_constant(); }
  std::vector<Monomial> leading_monomials() const;
  IdealPresentation<F> presentation() const { return IdealPresentation<F>(ring_, basis_); }
  std::string to_string() const;

  friend bool operator==(const ReducedGB& a, const ReducedGB& b) { return a.basis_ == b.basis_; }

 private:
  RingPtr<F> ring_;
  std::vector<Polynomial<F>> basis_;
};

// Full reduction of f by an arbitrary divisor list (first divisor whose
// leading monomial divides the current leading term is used).
template <CoefficientField F>
Polynomial<F> reduce_by(const Polynomial<F>& f, const std::vector<Polynomial<F>>& divisors);

template <CoefficientField F>
Polynomial<F> normal_form(const Polynomial<F>& f, const ReducedGB<F>& gb);

template <CoefficientField F>
bool ideal_member(const Polynomial<F>& f, const ReducedGB<F>& gb);

template <CoefficientField F>
Polynomial<F> s_polynomial(const Polynomial<F>& f, const Polynomial<F>& g);

// Buchberger with the coprime and chain criteria; pairs are processed by
// smallest lcm, ties broken by basis index, so output is deterministic.
template <CoefficientField F>
ReducedGB<F> buchberger(const IdealPresentation<F>& ideal);

// Same, after re-homing the generators into a copy of the ring using `order`.
template <CoefficientField F>
ReducedGB<F> buchberger(const IdealPresentation<F>& ideal, const MonomialOrder& order);

// Every S-polynomial of the basis reduces to zero.
template <CoefficientField F>
bool passes_buchberger_certificate(const ReducedGB<F>& gb);

template <CoefficientField F>
bool is_reduced(const ReducedGB<F>& gb);

// J ⊆ ideal(gb), by membership of every generator.
template <CoefficientField F>
bool contains_ideal(const ReducedGB<F>& gb, const IdealPresentation<F>& ideal);

template <CoefficientField F>
bool same_ideal(const ReducedGB<F>& a, const ReducedGB<F>& b);

extern template class ReducedGB<PrimeField>;
extern template class ReducedGB<FunctionField>;

}  // namespace fsplit
