#pragma once

#include <memory>
#include <optional>
#include <string>
#include <vector>

#include "fsplit/fields.hpp"
#include "fsplit/monomial.hpp"

namespace fsplit {

// Name of the auxiliary variable used by elimination; user input may not
// introduce identifiers starting with an underscore.
inline const std::string kEliminationVariable = "_elim";

template <CoefficientField F>
class RingDescriptor {
 public:
  RingDescriptor(F field, std::vector<std::string> variables, MonomialOrder order = MonomialOrder::grevlex());

  const F& field() const { return field_; }
  const std::vector<std::string>& variables() const { return variables_; }
  std::size_t variable_count() const { return variables_.size(); }
  const MonomialOrder& order() const { return order_; }
  std::optional<std::size_t> index_of(const std::string& name) const;

  friend bool operator==(const RingDescriptor& a, const RingDescriptor& b) {
    return a.field_ == b.field_ && a.variables_ == b.variables_ && a.order_ == b.order_;
  }

 private:
  F field_;
  std::vector<std::string> variables_;
  MonomialOrder order_;
};

template <CoefficientField F>
using RingPtr = std::shared_ptr<const RingDescriptor<F>>;

template <CoefficientField F>
RingPtr<F> make_ring(F field, std::vector<std::string> variables, MonomialOrder order = MonomialOrder::grevlex()) {
  return std::make_shared<const RingDescriptor<F>>(std::move(field), std::move(variables), order);
}

// FieldMismatch when the coefficient fields differ, RingMismatch otherwise.
template <CoefficientField F>
void require_same_ring(const RingPtr<F>& a, const RingPtr<F>& b);

template <CoefficientField F>
class Polynomial {
 public:
  using Element = typename F::Element;
  struct Term {
    Monomial monomial;
    Element coeff;
    friend bool operator==(const Term&, const Term&) = default;
  };

  explicit Polynomial(RingPtr<F> ring) : ring_(std::move(ring)) {}

  static Polynomial constant(RingPtr<F> ring, const Element& c);
  static Polynomial variable(RingPtr<F> ring, std::size_t index);
  static Polynomial term(RingPtr<F> ring, const Monomial& m, const Element& c);
  static Polynomial from_terms(RingPtr<F> ring, std::vector<Term> terms);

  const RingPtr<F>& ring() const { return ring_; }
  const F& field() const { return ring_->field(); }
  const std::vector<Term>& terms() const { return terms_; }
  std::size_t size() const { return terms_.size(); }
  bool is_zero() const { return terms_.empty(); }
  bool is_constant() const { return terms_.empty() || (terms_.size() == 1 && terms_[0].monomial.is_one()); }
  bool is_homogeneous() const;
  // Coefficient of the monomial 1.
  Element constant_coeff() const;

  const Term& leading_term() const { return terms_.front(); }
  const Monomial& leading_monomial() const { return terms_.front().monomial; }
  const Element& leading_coeff() const { return terms_.front().coeff; }

  Polynomial operator+(const Polynomial& o) const;
  Polynomial operator-(const Polynomial& o) const;
  Polynomial operator*(const Polynomial& o) const;
  Polynomial operator-() const;
  Polynomial& operator+=(const Polynomial& o) { return *this = *this + o; }
  Polynomial& operator-=(const Polynomial& o) { return *this = *this - o; }

  Polynomial scaled(const Element& c) const;
  Polynomial mul_term(const Monomial& m, const Element& c) const;
  // *this -= c * m * g, same ring assumed.
  void sub_mul_term(const Element& c, const Monomial& m, const Polynomial& g);
  Polynomial pow(std::uint64_t n) const;
  // f^(p^e), computed termwise since Frobenius is additive.
  Polynomial frobenius(unsigned e) const;
  Polynomial monic() const;
  // Removes and returns the leading term; precondition: nonzero.
  Term pop_leading();
  // Appends a term smaller than every present term.
  void push_trailing(Term t);
  std::optional<Polynomial> divide_exact(const Polynomial& divisor) const;

  // Re-homes the polynomial in a ring over the same field whose variables
  // agree on every index this polynomial uses; terms are re-sorted.
  Polynomial in_ring(const RingPtr<F>& target) const;

  std::string to_string() const;

  friend bool operator==(const Polynomial& a, const Polynomial& b) {
    return (a.ring_ == b.ring_ || *a.ring_ == *b.ring_) && a.terms_ == b.terms_;
  }

 private:
  void sort_and_combine();

  RingPtr<F> ring_;
  std::vector<Term> terms_;  // strictly decreasing in the ring's order, no zero coefficients
};

enum class PolyOp { Add, Sub, Mul };

template <CoefficientField F>
Polynomial<F> poly_arith(const Polynomial<F>& f, const Polynomial<F>& g, PolyOp op) {
  switch (op) {
    case PolyOp::Add: return f + g;
    case PolyOp::Sub: return f - g;
    case PolyOp::Mul: return f * g;
  }
  fail(ErrorKind::InvalidArgument, "unknown polynomial operation");
}

template <CoefficientField F>
class IdealPresentation {
 public:
  explicit IdealPresentation(RingPtr<F> ring) : ring_(std::move(ring)) {}
  IdealPresentation(RingPtr<F> ring, std::vector<Polynomial<F>> generators);

  const RingPtr<F>& ring() const { return ring_; }
  const std::vector<Polynomial<F>>& generators() const { return generators_; }
  std::vector<Polynomial<F>> nonzero_generators() const;
  bool is_zero() const;
  bool is_homogeneous() const;
  std::string to_string() const;

 private:
  RingPtr<F> ring_;
  std::vector<Polynomial<F>> generators_;
};

// The ideal generated by all ring variables.
template <CoefficientField F>
IdealPresentation<F> maximal_ideal(const RingPtr<F>& ring);

extern template class RingDescriptor<PrimeField>;
extern template class RingDescriptor<FunctionField>;
extern template class Polynomial<PrimeField>;
extern template class Polynomial<FunctionField>;
extern template class IdealPresentation<PrimeField>;
extern template class IdealPresentation<FunctionField>;

}  // namespace fsplit
