#include "fsplit/ideal_ops.hpp"

#include "fsplit/numeric.hpp"

namespace fsplit {

template <CoefficientField F>
IdealPresentation<F> ideal_sum(const IdealPresentation<F>& I, const IdealPresentation<F>& J) {
  require_same_ring(I.ring(), J.ring());
  std::vector<Polynomial<F>> gens = I.generators();
  gens.insert(gens.end(), J.generators().begin(), J.generators().end());
  return IdealPresentation<F>(I.ring(), std::move(gens));
}

template <CoefficientField F>
IdealPresentation<F> frobenius_power(const IdealPresentation<F>& I, unsigned e) {
  std::vector<Polynomial<F>> gens;
  gens.reserve(I.generators().size());
  for (const auto& g : I.generators()) gens.push_back(g.frobenius(e));
  return IdealPresentation<F>(I.ring(), std::move(gens));
}

template <CoefficientField F>
BracketPower<F> bracket_power(const IdealPresentation<F>& I, unsigned e) {
  const std::uint64_t q = checked_prime_power(I.ring()->field().characteristic(), e);
  return {frobenius_power(I, e), e, q};
}

template <CoefficientField F>
ReducedGB<F> intersect(const IdealPresentation<F>& I, const IdealPresentation<F>& J) {
  require_same_ring(I.ring(), J.ring());
  const auto& base = I.ring();
  if (I.is_zero() || J.is_zero()) return ReducedGB<F>(base, {});
  const std::size_t n = base->variable_count();
  if (n + 1 > kMaxVariables) fail(ErrorKind::InvalidArgument, "no room for the elimination variable");

  std::vector<std::string> vars = base->variables();
  vars.push_back(kEliminationVariable);
  auto elim_ring = make_ring(base->field(), vars, MonomialOrder::block_elimination(1u << n));
  const auto& k = base->field();
  const auto t = Polynomial<F>::variable(elim_ring, n);
  const auto one_minus_t = Polynomial<F>::constant(elim_ring, k.one()) - t;

  std::vector<Polynomial<F>> gens;
  for (const auto& f : I.nonzero_generators()) gens.push_back(t * f.in_ring(elim_ring));
  for (const auto& g : J.nonzero_generators()) gens.push_back(one_minus_t * g.in_ring(elim_ring));
  const ReducedGB<F> elim = buchberger(IdealPresentation<F>(elim_ring, std::move(gens)));

  std::vector<Polynomial<F>> kept;
  for (const auto& g : elim.basis()) {
    bool uses_t = false;
    for (const auto& term : g.terms()) uses_t = uses_t || term.monomial[n] != 0;
    if (!uses_t) kept.push_back(g.in_ring(base));
  }
  return buchberger(IdealPresentation<F>(base, std::move(kept)));
}

template <CoefficientField F>
ReducedGB<F> colon_by_element(const IdealPresentation<F>& I, const Polynomial<F>& f) {
  require_same_ring(I.ring(), f.ring());
  if (f.is_zero()) fail(ErrorKind::ZeroDivisorColon, "colon by the zero ideal");
  if (f.is_constant()) return buchberger(I);
  const ReducedGB<F> meet = intersect(I, IdealPresentation<F>(I.ring(), {f}));
  std::vector<Polynomial<F>> quotients;
  quotients.reserve(meet.size());
  for (const auto& g : meet.basis()) {
    auto q = g.divide_exact(f);
    if (!q) fail(ErrorKind::InternalInconsistency, "element of I ∩ (f) not divisible by f: " + g.to_string());
    quotients.push_back(std::move(*q));
  }
  return buchberger(IdealPresentation<F>(I.ring(), std::move(quotients)));
}

template <CoefficientField F>
ReducedGB<F> colon_ideal(const IdealPresentation<F>& I, const IdealPresentation<F>& J) {
  require_same_ring(I.ring(), J.ring());
  const auto gens = J.nonzero_generators();
  if (gens.empty()) fail(ErrorKind::ZeroDivisorColon, "colon by the zero ideal");
  ReducedGB<F> acc = colon_by_element(I, gens.front());
  for (std::size_t i = 1; i < gens.size(); ++i) {
    if (acc.is_unit_ideal()) {
      // (S ∩ X) = X, so the fold continues with the next quotient alone.
      acc = colon_by_element(I, gens[i]);
      continue;
    }
    const ReducedGB<F> next = colon_by_element(I, gens[i]);
    if (next.is_unit_ideal()) continue;
    acc = intersect(acc.presentation(), next.presentation());
  }
  return acc;
}

#define FSPLIT_INSTANTIATE_IDEAL_OPS(F)                                                              \
  template IdealPresentation<F> ideal_sum(const IdealPresentation<F>&, const IdealPresentation<F>&); \
  template IdealPresentation<F> frobenius_power(const IdealPresentation<F>&, unsigned);              \
  template BracketPower<F> bracket_power(const IdealPresentation<F>&, unsigned);                     \
  template ReducedGB<F> intersect(const IdealPresentation<F>&, const IdealPresentation<F>&);         \
  template ReducedGB<F> colon_by_element(const IdealPresentation<F>&, const Polynomial<F>&);         \
  template ReducedGB<F> colon_ideal(const IdealPresentation<F>&, const IdealPresentation<F>&);

FSPLIT_INSTANTIATE_IDEAL_OPS(PrimeField)
FSPLIT_INSTANTIATE_IDEAL_OPS(FunctionField)

}  // namespace fsplit
