#include "fsplit/groebner.hpp"

#include <algorithm>
#include <set>

namespace fsplit {

template <CoefficientField F>
std::vector<Monomial> ReducedGB<F>::leading_monomials() const {
  std::vector<Monomial> out;
  out.reserve(basis_.size());
  for (const auto& g : basis_) out.push_back(g.leading_monomial());
  return out;
}

template <CoefficientField F>
std::string ReducedGB<F>::to_string() const {
  return presentation().to_string();
}

template <CoefficientField F>
Polynomial<F> reduce_by(const Polynomial<F>& f, const std::vector<Polynomial<F>>& divisors) {
  const auto& k = f.field();
  Polynomial<F> rest = f;
  Polynomial<F> remainder(f.ring());
  while (!rest.is_zero()) {
    const auto& lead = rest.leading_term();
    const Polynomial<F>* divisor = nullptr;
    for (const auto& g : divisors) {
      if (!g.is_zero() && g.leading_monomial().divides(lead.monomial)) {
        divisor = &g;
        break;
      }
    }
    if (divisor) {
      auto c = k.is_one(divisor->leading_coeff()) ? lead.coeff : k.div(lead.coeff, divisor->leading_coeff());
      const Monomial m = lead.monomial / divisor->leading_monomial();
      rest.sub_mul_term(c, m, *divisor);
    } else {
      remainder.push_trailing(rest.pop_leading());
    }
  }
  return remainder;
}

template <CoefficientField F>
Polynomial<F> normal_form(const Polynomial<F>& f, const ReducedGB<F>& gb) {
  require_same_ring(f.ring(), gb.ring());
  return reduce_by(f, gb.basis());
}

template <CoefficientField F>
bool ideal_member(const Polynomial<F>& f, const ReducedGB<F>& gb) {
  return normal_form(f, gb).is_zero();
}

template <CoefficientField F>
Polynomial<F> s_polynomial(const Polynomial<F>& f, const Polynomial<F>& g) {
  require_same_ring(f.ring(), g.ring());
  const auto& k = f.field();
  const Monomial l = f.leading_monomial().lcm(g.leading_monomial());
  Polynomial<F> s = f.mul_term(l / f.leading_monomial(), k.inv(f.leading_coeff()));
  s.sub_mul_term(k.inv(g.leading_coeff()), l / g.leading_monomial(), g);
  return s;
}

namespace {

struct Pair {
  std::size_t i;
  std::size_t j;
  Monomial lcm;
};

template <CoefficientField F>
class BuchbergerEngine {
 public:
  explicit BuchbergerEngine(RingPtr<F> ring)
      : ring_(std::move(ring)), queue_(PairLess{&ring_->order()}) {}

  void add_generator(const Polynomial<F>& g) {
    Polynomial<F> h = reduce_by(g, basis_);
    if (!h.is_zero()) insert(h.monic());
  }

  void run() {
    while (!queue_.empty()) {
      const Pair pair = *queue_.begin();
      queue_.erase(queue_.begin());
      pending_.erase({pair.i, pair.j});
      if (unit_) return;
      if (basis_[pair.i].leading_monomial().coprime(basis_[pair.j].leading_monomial())) continue;
      if (chain_criterion(pair)) continue;
      Polynomial<F> h = reduce_by(s_polynomial(basis_[pair.i], basis_[pair.j]), basis_);
      if (!h.is_zero()) insert(h.monic());
    }
  }

  ReducedGB<F> reduced() const {
    if (unit_) return ReducedGB<F>(ring_, {Polynomial<F>::constant(ring_, ring_->field().one())});
    const auto& order = ring_->order();
    std::vector<Polynomial<F>> minimal;
    for (std::size_t i = 0; i < basis_.size(); ++i) {
      bool redundant = false;
      for (std::size_t j = 0; j < basis_.size() && !redundant; ++j) {
        if (i == j) continue;
        const auto& mi = basis_[i].leading_monomial();
        const auto& mj = basis_[j].leading_monomial();
        redundant = mj.divides(mi) && (mi != mj || j < i);
      }
      if (!redundant) minimal.push_back(basis_[i]);
    }
    std::vector<Polynomial<F>> reduced;
    reduced.reserve(minimal.size());
    for (std::size_t i = 0; i < minimal.size(); ++i) {
      std::vector<Polynomial<F>> others;
      for (std::size_t j = 0; j < minimal.size(); ++j)
        if (j != i) others.push_back(minimal[j]);
      Polynomial<F> g = minimal[i];
      auto lead = g.pop_leading();
      Polynomial<F> tail = reduce_by(g, others);
      Polynomial<F> r = Polynomial<F>::term(ring_, lead.monomial, lead.coeff) + tail;
      reduced.push_back(r.monic());
    }
    std::sort(reduced.begin(), reduced.end(), [&](const auto& a, const auto& b) {
      return order.compare(a.leading_monomial(), b.leading_monomial()) < 0;
    });
    return ReducedGB<F>(ring_, std::move(reduced));
  }

 private:
  struct PairLess {
    const MonomialOrder* order;
    bool operator()(const Pair& a, const Pair& b) const {
      if (int c = order->compare(a.lcm, b.lcm)) return c < 0;
      if (a.j != b.j) return a.j < b.j;
      return a.i < b.i;
    }
  };

  void insert(Polynomial<F> h) {
    if (h.is_constant()) unit_ = true;
    const std::size_t k = basis_.size();
    for (std::size_t i = 0; i < k; ++i) {
      Pair p{i, k, basis_[i].leading_monomial().lcm(h.leading_monomial())};
      queue_.insert(p);
      pending_.insert({i, k});
    }
    basis_.push_back(std::move(h));
  }

  bool is_pending(std::size_t a, std::size_t b) const { return pending_.count({std::min(a, b), std::max(a, b)}) > 0; }

  bool chain_criterion(const Pair& pair) const {
    for (std::size_t k = 0; k < basis_.size(); ++k) {
      if (k == pair.i || k == pair.j) continue;
      if (!basis_[k].leading_monomial().divides(pair.lcm)) continue;
      if (!is_pending(pair.i, k) && !is_pending(pair.j, k)) return true;
    }
    return false;
  }

  RingPtr<F> ring_;
  std::vector<Polynomial<F>> basis_;
  std::set<Pair, PairLess> queue_;
  std::set<std::pair<std::size_t, std::size_t>> pending_;
  bool unit_ = false;
};

}  // namespace

template <CoefficientField F>
ReducedGB<F> buchberger(const IdealPresentation<F>& ideal) {
  BuchbergerEngine<F> engine(ideal.ring());
  for (const auto& g : ideal.generators())
    if (!g.is_zero()) engine.add_generator(g);
  engine.run();
  return engine.reduced();
}

template <CoefficientField F>
ReducedGB<F> buchberger(const IdealPresentation<F>& ideal, const MonomialOrder& order) {
  if (ideal.ring()->order() == order) return buchberger(ideal);
  const auto& src = *ideal.ring();
  auto ring = make_ring(src.field(), src.variables(), order);
  std::vector<Polynomial<F>> gens;
  for (const auto& g : ideal.generators()) gens.push_back(g.in_ring(ring));
  return buchberger(IdealPresentation<F>(ring, std::move(gens)));
}

template <CoefficientField F>
bool passes_buchberger_certificate(const ReducedGB<F>& gb) {
  const auto& b = gb.basis();
  for (std::size_t i = 0; i < b.size(); ++i)
    for (std::size_t j = i + 1; j < b.size(); ++j)
      if (!normal_form(s_polynomial(b[i], b[j]), gb).is_zero()) return false;
  return true;
}

template <CoefficientField F>
bool is_reduced(const ReducedGB<F>& gb) {
  const auto& b = gb.basis();
  const auto& k = gb.ring()->field();
  for (std::size_t i = 0; i < b.size(); ++i) {
    if (b[i].is_zero() || !k.is_one(b[i].leading_coeff())) return false;
    if (i > 0 && gb.order().compare(b[i - 1].leading_monomial(), b[i].leading_monomial()) >= 0) return false;
    for (std::size_t j = 0; j < b.size(); ++j) {
      if (i == j) continue;
      for (const auto& t : b[i].terms())
        if (b[j].leading_monomial().divides(t.monomial)) return false;
    }
  }
  return true;
}

template <CoefficientField F>
bool contains_ideal(const ReducedGB<F>& gb, const IdealPresentation<F>& ideal) {
  return std::all_of(ideal.generators().begin(), ideal.generators().end(),
                     [&](const auto& g) { return ideal_member(g.in_ring(gb.ring()), gb); });
}

template <CoefficientField F>
bool same_ideal(const ReducedGB<F>& a, const ReducedGB<F>& b) {
  return contains_ideal(a, b.presentation()) && contains_ideal(b, a.presentation());
}

#define FSPLIT_INSTANTIATE_GB(F)                                                          \
  template class ReducedGB<F>;                                                            \
  template Polynomial<F> reduce_by(const Polynomial<F>&, const std::vector<Polynomial<F>>&); \
  template Polynomial<F> normal_form(const Polynomial<F>&, const ReducedGB<F>&);         \
  template bool ideal_member(const Polynomial<F>&, const ReducedGB<F>&);                 \
  template Polynomial<F> s_polynomial(const Polynomial<F>&, const Polynomial<F>&);       \
  template ReducedGB<F> buchberger(const IdealPresentation<F>&);                         \
  template ReducedGB<F> buchberger(const IdealPresentation<F>&, const MonomialOrder&);   \
  template bool passes_buchberger_certificate(const ReducedGB<F>&);                      \
  template bool is_reduced(const ReducedGB<F>&);                                         \
  template bool contains_ideal(const ReducedGB<F>&, const IdealPresentation<F>&);        \
  template bool same_ideal(const ReducedGB<F>&, const ReducedGB<F>&);

FSPLIT_INSTANTIATE_GB(PrimeField)
FSPLIT_INSTANTIATE_GB(FunctionField)

}  // namespace fsplit
