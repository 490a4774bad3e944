#pragma once

// Coefficient fields: the prime field F_p and the rational function field
// F_p(t_1, ..., t_m). Both satisfy the CoefficientField concept, which is the
// only thing the polynomial and Groebner layers rely on.

#include <concepts>
#include <cstdint>
#include <optional>
#include <string>
#include <vector>

#include "fsplit/error.hpp"

namespace fsplit {

struct FieldDescriptor {
  std::uint32_t characteristic = 2;
  std::vector<std::string> transcendentals;

  friend bool operator==(const FieldDescriptor&, const FieldDescriptor&) = default;
};

// log_p [k : k^p] for k = F_p(t_1..t_m) is m.
unsigned alpha(const FieldDescriptor& field);

enum class FieldOp { Add, Sub, Mul, Div };

// ---------------------------------------------------------------------------
// F_p

struct Fp {
  std::uint32_t value = 0;
  friend bool operator==(Fp, Fp) = default;
};

class PrimeField {
 public:
  using Element = Fp;

  explicit PrimeField(std::uint64_t p);

  std::uint32_t characteristic() const { return p_; }
  unsigned alpha() const { return 0; }
  FieldDescriptor descriptor() const { return {p_, {}}; }

  Element zero() const { return {0}; }
  Element one() const { return {1}; }
  Element from_int(std::int64_t v) const;

  bool is_zero(Element a) const { return a.value == 0; }
  bool is_one(Element a) const { return a.value == 1; }

  Element add(Element a, Element b) const {
    std::uint32_t s = a.value + b.value;
    return {s >= p_ ? s - p_ : s};
  }
  Element sub(Element a, Element b) const { return {a.value >= b.value ? a.value - b.value : a.value + p_ - b.value}; }
  Element neg(Element a) const { return {a.value == 0 ? 0 : p_ - a.value}; }
  Element mul(Element a, Element b) const {
    return {static_cast<std::uint32_t>(static_cast<std::uint64_t>(a.value) * b.value % p_)};
  }
  Element inv(Element a) const;
  Element div(Element a, Element b) const { return mul(a, inv(b)); }
  Element pow(Element a, std::uint64_t n) const;
  // a^(p^e) = a on F_p.
  Element frobenius(Element a, unsigned /*e*/) const { return a; }

  std::string to_string(Element a) const { return std::to_string(a.value); }
  bool is_integer_literal(Element) const { return true; }

  friend bool operator==(const PrimeField&, const PrimeField&) = default;

 private:
  std::uint32_t p_;
};

// ---------------------------------------------------------------------------
// Multivariate polynomials over F_p in the transcendentals. Only used as the
// numerator/denominator representation of FunctionField elements.

class FpMPoly {
 public:
  struct Term {
    std::vector<std::uint32_t> exponents;
    std::uint32_t coeff;
    friend bool operator==(const Term&, const Term&) = default;
  };

  FpMPoly() = default;
  FpMPoly(std::uint32_t p, std::size_t nvars) : p_(p), nvars_(nvars) {}

  static FpMPoly constant(std::uint32_t p, std::size_t nvars, std::uint32_t c);
  static FpMPoly variable(std::uint32_t p, std::size_t nvars, std::size_t index);
  static FpMPoly from_terms(std::uint32_t p, std::size_t nvars, std::vector<Term> terms);

  std::uint32_t modulus() const { return p_; }
  std::size_t variable_count() const { return nvars_; }
  const std::vector<Term>& terms() const { return terms_; }

  bool is_zero() const { return terms_.empty(); }
  bool is_constant() const;
  std::uint32_t constant_value() const;

  unsigned degree_in(std::size_t var) const;
  FpMPoly coefficient_in(std::size_t var, unsigned degree) const;
  // Coefficient of the leading term under grevlex on the transcendentals.
  std::uint32_t grevlex_leading_coeff() const;

  FpMPoly operator+(const FpMPoly& o) const;
  FpMPoly operator-(const FpMPoly& o) const;
  FpMPoly operator*(const FpMPoly& o) const;
  FpMPoly operator-() const;
  FpMPoly scaled(std::uint32_t c) const;
  FpMPoly shifted(std::size_t var, unsigned by) const;
  // f^(p^e), coefficientwise Frobenius is trivial over F_p.
  FpMPoly frobenius(std::uint64_t q) const;
  FpMPoly pow(std::uint64_t n) const;

  std::optional<FpMPoly> divide_exact(const FpMPoly& divisor) const;
  FpMPoly pseudo_remainder(const FpMPoly& divisor, std::size_t var) const;

  std::string to_string(const std::vector<std::string>& names) const;

  friend bool operator==(const FpMPoly& a, const FpMPoly& b) {
    return a.p_ == b.p_ && a.nvars_ == b.nvars_ && a.terms_ == b.terms_;
  }

 private:
  void canonicalize();
  void check_compatible(const FpMPoly& o) const;

  std::uint32_t p_ = 2;
  std::size_t nvars_ = 0;
  std::vector<Term> terms_;  // strictly decreasing lex order of exponent vectors
};

FpMPoly gcd(const FpMPoly& a, const FpMPoly& b);

// ---------------------------------------------------------------------------
// F_p(t_1..t_m)

struct RatFunc {
  FpMPoly num;
  FpMPoly den;
  friend bool operator==(const RatFunc&, const RatFunc&) = default;
};

class FunctionField {
 public:
  using Element = RatFunc;

  FunctionField(std::uint64_t p, std::vector<std::string> transcendentals);

  std::uint32_t characteristic() const { return p_; }
  unsigned alpha() const { return static_cast<unsigned>(names_.size()); }
  const std::vector<std::string>& transcendentals() const { return names_; }
  FieldDescriptor descriptor() const { return {p_, names_}; }

  Element zero() const;
  Element one() const;
  Element from_int(std::int64_t v) const;
  Element transcendental(std::size_t index) const;
  // Builds num/den in canonical form (gcd 1, den monic).
  Element make(FpMPoly num, FpMPoly den) const;

  bool is_zero(const Element& a) const { return a.num.is_zero(); }
  bool is_one(const Element& a) const;

  Element add(const Element& a, const Element& b) const;
  Element sub(const Element& a, const Element& b) const;
  Element neg(const Element& a) const;
  Element mul(const Element& a, const Element& b) const;
  Element inv(const Element& a) const;
  Element div(const Element& a, const Element& b) const;
  Element pow(const Element& a, std::uint64_t n) const;
  Element frobenius(const Element& a, unsigned e) const;

  std::string to_string(const Element& a) const;
  // True when the element is an image of an integer, so printing needs no parentheses.
  bool is_integer_literal(const Element& a) const { return a.num.is_constant() && a.den.is_constant(); }

  friend bool operator==(const FunctionField& a, const FunctionField& b) {
    return a.p_ == b.p_ && a.names_ == b.names_;
  }

 private:
  void check(const Element& a) const;

  std::uint32_t p_;
  std::vector<std::string> names_;
};

template <class F>
concept CoefficientField = requires(const F& f, const typename F::Element& a, std::int64_t n) {
  { f.characteristic() } -> std::convertible_to<std::uint32_t>;
  { f.alpha() } -> std::convertible_to<unsigned>;
  { f.descriptor() } -> std::same_as<FieldDescriptor>;
  { f.zero() } -> std::same_as<typename F::Element>;
  { f.one() } -> std::same_as<typename F::Element>;
  { f.from_int(n) } -> std::same_as<typename F::Element>;
  { f.is_zero(a) } -> std::convertible_to<bool>;
  { f.is_one(a) } -> std::convertible_to<bool>;
  { f.is_integer_literal(a) } -> std::convertible_to<bool>;
  { f.add(a, a) } -> std::same_as<typename F::Element>;
  { f.sub(a, a) } -> std::same_as<typename F::Element>;
  { f.mul(a, a) } -> std::same_as<typename F::Element>;
  { f.div(a, a) } -> std::same_as<typename F::Element>;
  { f.neg(a) } -> std::same_as<typename F::Element>;
  { f.inv(a) } -> std::same_as<typename F::Element>;
  { f.frobenius(a, 1u) } -> std::same_as<typename F::Element>;
  { f.to_string(a) } -> std::convertible_to<std::string>;
  { a == a } -> std::convertible_to<bool>;
};

static_assert(CoefficientField<PrimeField>);
static_assert(CoefficientField<FunctionField>);

template <CoefficientField F>
typename F::Element field_arith(const F& field, const typename F::Element& a, const typename F::Element& b,
                                FieldOp op) {
  switch (op) {
    case FieldOp::Add: return field.add(a, b);
    case FieldOp::Sub: return field.sub(a, b);
    case FieldOp::Mul: return field.mul(a, b);
    case FieldOp::Div: return field.div(a, b);
  }
  fail(ErrorKind::InvalidArgument, "unknown field operation");
}

template <CoefficientField F>
typename F::Element frobenius_map(const F& field, const typename F::Element& a, unsigned e) {
  return field.frobenius(a, e);
}

}  // namespace fsplit
