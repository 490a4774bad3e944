#include "fsplit/polynomial.hpp"

#include <algorithm>
#include <set>
#include <unordered_map>

#include "fsplit/numeric.hpp"

namespace fsplit {

namespace {

template <CoefficientField F>
std::vector<std::string> transcendentals_of(const F& field) {
  return field.descriptor().transcendentals;
}

}  // namespace

template <CoefficientField F>
RingDescriptor<F>::RingDescriptor(F field, std::vector<std::string> variables, MonomialOrder order)
    : field_(std::move(field)), variables_(std::move(variables)), order_(order) {
  if (variables_.size() > kMaxVariables)
    fail(ErrorKind::InvalidArgument, "at most " + std::to_string(kMaxVariables) + " variables are supported");
  std::set<std::string> seen;
  for (const auto& t : transcendentals_of(field_)) seen.insert(t);
  for (const auto& v : variables_) {
    if (v.empty()) fail(ErrorKind::InvalidArgument, "empty variable name");
    if (!seen.insert(v).second) fail(ErrorKind::DuplicateVariable, "variable '" + v + "' is declared twice");
  }
}

template <CoefficientField F>
std::optional<std::size_t> RingDescriptor<F>::index_of(const std::string& name) const {
  auto it = std::find(variables_.begin(), variables_.end(), name);
  if (it == variables_.end()) return std::nullopt;
  return static_cast<std::size_t>(it - variables_.begin());
}

template <CoefficientField F>
void require_same_ring(const RingPtr<F>& a, const RingPtr<F>& b) {
  if (a == b) return;
  if (!(a->field() == b->field())) fail(ErrorKind::FieldMismatch, "operands live over different coefficient fields");
  if (!(*a == *b)) fail(ErrorKind::RingMismatch, "operands live in different polynomial rings");
}

// ---------------------------------------------------------------------------

template <CoefficientField F>
Polynomial<F> Polynomial<F>::constant(RingPtr<F> ring, const Element& c) {
  Polynomial p(std::move(ring));
  if (!p.field().is_zero(c)) p.terms_.push_back({Monomial(), c});
  return p;
}

template <CoefficientField F>
Polynomial<F> Polynomial<F>::variable(RingPtr<F> ring, std::size_t index) {
  if (index >= ring->variable_count()) fail(ErrorKind::InvalidArgument, "variable index out of range");
  Polynomial p(std::move(ring));
  p.terms_.push_back({Monomial::variable(index), p.field().one()});
  return p;
}

template <CoefficientField F>
Polynomial<F> Polynomial<F>::term(RingPtr<F> ring, const Monomial& m, const Element& c) {
  Polynomial p(std::move(ring));
  if (!p.field().is_zero(c)) p.terms_.push_back({m, c});
  return p;
}

template <CoefficientField F>
Polynomial<F> Polynomial<F>::from_terms(RingPtr<F> ring, std::vector<Term> terms) {
  Polynomial p(std::move(ring));
  p.terms_ = std::move(terms);
  p.sort_and_combine();
  return p;
}

template <CoefficientField F>
void Polynomial<F>::sort_and_combine() {
  const auto& order = ring_->order();
  const auto& k = field();
  std::stable_sort(terms_.begin(), terms_.end(),
                   [&](const Term& a, const Term& b) { return order.greater(a.monomial, b.monomial); });
  std::vector<Term> out;
  out.reserve(terms_.size());
  for (auto& t : terms_) {
    if (!out.empty() && out.back().monomial == t.monomial) {
      out.back().coeff = k.add(out.back().coeff, t.coeff);
      if (k.is_zero(out.back().coeff)) out.pop_back();
    } else if (!k.is_zero(t.coeff)) {
      out.push_back(std::move(t));
    }
  }
  terms_ = std::move(out);
}

template <CoefficientField F>
bool Polynomial<F>::is_homogeneous() const {
  return std::all_of(terms_.begin(), terms_.end(),
                     [&](const Term& t) { return t.monomial.degree() == terms_.front().monomial.degree(); });
}

template <CoefficientField F>
typename F::Element Polynomial<F>::constant_coeff() const {
  if (!terms_.empty() && terms_.back().monomial.is_one()) return terms_.back().coeff;
  return field().zero();
}

template <CoefficientField F>
Polynomial<F> Polynomial<F>::operator+(const Polynomial& o) const {
  require_same_ring(ring_, o.ring_);
  const auto& order = ring_->order();
  const auto& k = field();
  Polynomial r(ring_);
  r.terms_.reserve(terms_.size() + o.terms_.size());
  std::size_t i = 0, j = 0;
  while (i < terms_.size() && j < o.terms_.size()) {
    const int c = order.compare(terms_[i].monomial, o.terms_[j].monomial);
    if (c > 0) {
      r.terms_.push_back(terms_[i++]);
    } else if (c < 0) {
      r.terms_.push_back(o.terms_[j++]);
    } else {
      auto s = k.add(terms_[i].coeff, o.terms_[j].coeff);
      if (!k.is_zero(s)) r.terms_.push_back({terms_[i].monomial, std::move(s)});
      ++i;
      ++j;
    }
  }
  r.terms_.insert(r.terms_.end(), terms_.begin() + static_cast<std::ptrdiff_t>(i), terms_.end());
  r.terms_.insert(r.terms_.end(), o.terms_.begin() + static_cast<std::ptrdiff_t>(j), o.terms_.end());
  return r;
}

template <CoefficientField F>
Polynomial<F> Polynomial<F>::operator-() const {
  Polynomial r = *this;
  for (auto& t : r.terms_) t.coeff = field().neg(t.coeff);
  return r;
}

template <CoefficientField F>
Polynomial<F> Polynomial<F>::operator-(const Polynomial& o) const {
  return *this + (-o);
}

template <CoefficientField F>
Polynomial<F> Polynomial<F>::mul_term(const Monomial& m, const Element& c) const {
  Polynomial r(ring_);
  if (field().is_zero(c)) return r;
  r.terms_.reserve(terms_.size());
  for (const auto& t : terms_) r.terms_.push_back({t.monomial * m, field().mul(t.coeff, c)});
  return r;
}

template <CoefficientField F>
Polynomial<F> Polynomial<F>::operator*(const Polynomial& o) const {
  require_same_ring(ring_, o.ring_);
  if (is_zero() || o.is_zero()) return Polynomial(ring_);
  if (o.terms_.size() == 1) return mul_term(o.terms_[0].monomial, o.terms_[0].coeff);
  if (terms_.size() == 1) return o.mul_term(terms_[0].monomial, terms_[0].coeff);
  const auto& k = field();
  std::unordered_map<Monomial, Element, MonomialHash> acc;
  acc.reserve(terms_.size() * o.terms_.size());
  for (const auto& a : terms_) {
    for (const auto& b : o.terms_) {
      auto prod = k.mul(a.coeff, b.coeff);
      auto [it, inserted] = acc.try_emplace(a.monomial * b.monomial, prod);
      if (!inserted) it->second = k.add(it->second, prod);
    }
  }
  std::vector<Term> terms;
  terms.reserve(acc.size());
  for (auto& [m, c] : acc)
    if (!k.is_zero(c)) terms.push_back({m, std::move(c)});
  return from_terms(ring_, std::move(terms));
}

template <CoefficientField F>
Polynomial<F> Polynomial<F>::scaled(const Element& c) const {
  return mul_term(Monomial(), c);
}

template <CoefficientField F>
void Polynomial<F>::sub_mul_term(const Element& c, const Monomial& m, const Polynomial& g) {
  const auto& order = ring_->order();
  const auto& k = field();
  std::vector<Term> out;
  out.reserve(terms_.size() + g.terms_.size());
  std::size_t i = 0, j = 0;
  const Element neg_c = k.neg(c);
  while (i < terms_.size() || j < g.terms_.size()) {
    if (j == g.terms_.size()) {
      out.push_back(std::move(terms_[i++]));
      continue;
    }
    const Monomial gm = g.terms_[j].monomial * m;
    const int cmp = i == terms_.size() ? -1 : order.compare(terms_[i].monomial, gm);
    if (cmp > 0) {
      out.push_back(std::move(terms_[i++]));
    } else if (cmp < 0) {
      out.push_back({gm, k.mul(neg_c, g.terms_[j].coeff)});
      ++j;
    } else {
      auto s = k.add(terms_[i].coeff, k.mul(neg_c, g.terms_[j].coeff));
      if (!k.is_zero(s)) out.push_back({gm, std::move(s)});
      ++i;
      ++j;
    }
  }
  terms_ = std::move(out);
}

template <CoefficientField F>
Polynomial<F> Polynomial<F>::pow(std::uint64_t n) const {
  Polynomial result = constant(ring_, field().one());
  Polynomial base = *this;
  while (n) {
    if (n & 1) result = result * base;
    n >>= 1;
    if (n) base = base * base;
  }
  return result;
}

template <CoefficientField F>
Polynomial<F> Polynomial<F>::frobenius(unsigned e) const {
  const std::uint64_t q = checked_prime_power(field().characteristic(), e);
  Polynomial r(ring_);
  r.terms_.reserve(terms_.size());
  // Raising to the q-th power is strictly monotone for a monomial order.
  for (const auto& t : terms_) r.terms_.push_back({t.monomial.pow(q), field().frobenius(t.coeff, e)});
  return r;
}

template <CoefficientField F>
Polynomial<F> Polynomial<F>::monic() const {
  if (is_zero() || field().is_one(leading_coeff())) return *this;
  return scaled(field().inv(leading_coeff()));
}

template <CoefficientField F>
typename Polynomial<F>::Term Polynomial<F>::pop_leading() {
  Term t = std::move(terms_.front());
  terms_.erase(terms_.begin());
  return t;
}

template <CoefficientField F>
void Polynomial<F>::push_trailing(Term t) {
  terms_.push_back(std::move(t));
}

template <CoefficientField F>
std::optional<Polynomial<F>> Polynomial<F>::divide_exact(const Polynomial& divisor) const {
  require_same_ring(ring_, divisor.ring_);
  if (divisor.is_zero()) fail(ErrorKind::DivisionByZero, "polynomial division by zero");
  const auto& k = field();
  const Element lc_inv = k.inv(divisor.leading_coeff());
  Polynomial rem = *this;
  std::vector<Term> quotient;
  while (!rem.is_zero()) {
    const Term& lead = rem.leading_term();
    if (!divisor.leading_monomial().divides(lead.monomial)) return std::nullopt;
    Term q{lead.monomial / divisor.leading_monomial(), k.mul(lead.coeff, lc_inv)};
    rem.sub_mul_term(q.coeff, q.monomial, divisor);
    quotient.push_back(std::move(q));
  }
  Polynomial r(ring_);
  r.terms_ = std::move(quotient);  // produced in decreasing order
  return r;
}

template <CoefficientField F>
Polynomial<F> Polynomial<F>::in_ring(const RingPtr<F>& target) const {
  if (target == ring_) return *this;
  if (!(target->field() == field())) fail(ErrorKind::FieldMismatch, "cannot move a polynomial across fields");
  const std::size_t shared = std::min(target->variable_count(), ring_->variable_count());
  for (std::size_t v = 0; v < shared; ++v)
    if (target->variables()[v] != ring_->variables()[v])
      fail(ErrorKind::RingMismatch, "variable lists disagree at '" + ring_->variables()[v] + "'");
  for (const auto& t : terms_)
    for (std::size_t v = shared; v < ring_->variable_count(); ++v)
      if (t.monomial[v]) fail(ErrorKind::RingMismatch, "variable '" + ring_->variables()[v] + "' missing in target ring");
  Polynomial r(target);
  r.terms_ = terms_;
  if (!(target->order() == ring_->order())) r.sort_and_combine();
  return r;
}

template <CoefficientField F>
std::string Polynomial<F>::to_string() const {
  if (terms_.empty()) return "0";
  const auto& k = field();
  std::string out;
  for (const auto& t : terms_) {
    if (!out.empty()) out += " + ";
    const bool unit = k.is_one(t.coeff);
    std::string c = k.to_string(t.coeff);
    if (!k.is_integer_literal(t.coeff)) c = "(" + c + ")";
    if (t.monomial.is_one()) out += c;
    else if (unit) out += t.monomial.to_string(ring_->variables());
    else out += c + "*" + t.monomial.to_string(ring_->variables());
  }
  return out;
}

// ---------------------------------------------------------------------------

template <CoefficientField F>
IdealPresentation<F>::IdealPresentation(RingPtr<F> ring, std::vector<Polynomial<F>> generators)
    : ring_(std::move(ring)), generators_(std::move(generators)) {
  for (const auto& g : generators_) require_same_ring(ring_, g.ring());
}

template <CoefficientField F>
std::vector<Polynomial<F>> IdealPresentation<F>::nonzero_generators() const {
  std::vector<Polynomial<F>> out;
  for (const auto& g : generators_)
    if (!g.is_zero()) out.push_back(g);
  return out;
}

template <CoefficientField F>
bool IdealPresentation<F>::is_zero() const {
  return std::all_of(generators_.begin(), generators_.end(), [](const auto& g) { return g.is_zero(); });
}

template <CoefficientField F>
bool IdealPresentation<F>::is_homogeneous() const {
  return std::all_of(generators_.begin(), generators_.end(), [](const auto& g) { return g.is_homogeneous(); });
}

template <CoefficientField F>
std::string IdealPresentation<F>::to_string() const {
  std::string out = "(";
  for (std::size_t i = 0; i < generators_.size(); ++i) {
    if (i) out += ", ";
    out += generators_[i].to_string();
  }
  return out + ")";
}

template <CoefficientField F>
IdealPresentation<F> maximal_ideal(const RingPtr<F>& ring) {
  std::vector<Polynomial<F>> gens;
  for (std::size_t v = 0; v < ring->variable_count(); ++v) gens.push_back(Polynomial<F>::variable(ring, v));
  return IdealPresentation<F>(ring, std::move(gens));
}

template class RingDescriptor<PrimeField>;
template class RingDescriptor<FunctionField>;
template class Polynomial<PrimeField>;
template class Polynomial<FunctionField>;
template class IdealPresentation<PrimeField>;
template class IdealPresentation<FunctionField>;
template void require_same_ring(const RingPtr<PrimeField>&, const RingPtr<PrimeField>&);
template void require_same_ring(const RingPtr<FunctionField>&, const RingPtr<FunctionField>&);
template IdealPresentation<PrimeField> maximal_ideal(const RingPtr<PrimeField>&);
template IdealPresentation<FunctionField> maximal_ideal(const RingPtr<FunctionField>&);

}  // namespace fsplit
