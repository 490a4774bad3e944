#include "fsplit/artinian.hpp"

#include <algorithm>
#include <bit>

#include "fsplit/ideal_ops.hpp"

namespace fsplit {

namespace {

void minimize(std::vector<Monomial>& gens) {
  std::sort(gens.begin(), gens.end(), [](const Monomial& a, const Monomial& b) {
    if (a.degree() != b.degree()) return a.degree() < b.degree();
    return a.words() < b.words();
  });
  gens.erase(std::unique(gens.begin(), gens.end()), gens.end());
  std::vector<Monomial> out;
  for (const auto& g : gens) {
    bool redundant = false;
    for (const auto& h : out)
      if (h.divides(g)) {
        redundant = true;
        break;
      }
    if (!redundant) out.push_back(g);
  }
  gens = std::move(out);
}

class StaircaseCounter {
 public:
  StaircaseCounter(std::size_t nvars, std::uint64_t budget) : nvars_(nvars), budget_(budget) {}

  BigInt count(std::vector<Monomial> gens, std::size_t var) {
    if (++work_ > budget_)
      fail(ErrorKind::CostGuardExceeded, "staircase count exceeded the budget of " + std::to_string(budget_));
    minimize(gens);
    if (!gens.empty() && gens.front().is_one()) return 0;
    if (var == nvars_) return 1;
    if (gens.empty()) fail(ErrorKind::NotArtinian, "quotient has infinitely many standard monomials");

    std::vector<std::uint32_t> breaks;
    for (const auto& g : gens) breaks.push_back(g[var]);
    std::sort(breaks.begin(), breaks.end());
    breaks.erase(std::unique(breaks.begin(), breaks.end()), breaks.end());

    BigInt total = 0;
    if (breaks.front() > 0) total += BigInt(breaks.front()) * count({}, var + 1);
    for (std::size_t i = 0; i < breaks.size(); ++i) {
      std::vector<Monomial> active;
      for (const auto& g : gens) {
        if (g[var] > breaks[i]) continue;
        Monomial h = g;
        h.set(var, 0);
        active.push_back(h);
      }
      BigInt sub = count(std::move(active), var + 1);
      if (i + 1 == breaks.size()) {
        if (sub != 0) fail(ErrorKind::NotArtinian, "no pure power of a variable in the leading ideal");
      } else {
        total += BigInt(breaks[i + 1] - breaks[i]) * sub;
      }
    }
    return total;
  }

 private:
  std::size_t nvars_;
  std::uint64_t budget_;
  std::uint64_t work_ = 0;
};

}  // namespace

BigInt count_standard_monomials(std::vector<Monomial> generators, std::size_t nvars, std::uint64_t budget) {
  StaircaseCounter counter(nvars, budget);
  return counter.count(std::move(generators), 0);
}

template <CoefficientField F>
bool is_artinian(const ReducedGB<F>& gb) {
  if (gb.is_unit_ideal()) return true;
  const std::size_t n = gb.ring()->variable_count();
  for (std::size_t v = 0; v < n; ++v) {
    bool found = false;
    for (const auto& m : gb.leading_monomials()) found = found || m.support() == (1u << v);
    if (!found) return false;
  }
  return true;
}

template <CoefficientField F>
BigInt length(const ReducedGB<F>& gb, std::uint64_t budget) {
  if (!is_artinian(gb)) fail(ErrorKind::NotArtinian, "S/J is not Artinian for J = " + gb.to_string());
  return count_standard_monomials(gb.leading_monomials(), gb.ring()->variable_count(), budget);
}

template <CoefficientField F>
StaircaseBasis standard_monomials(const ReducedGB<F>& gb, std::uint64_t budget) {
  if (!is_artinian(gb)) fail(ErrorKind::NotArtinian, "S/J is not Artinian for J = " + gb.to_string());
  StaircaseBasis out;
  if (gb.is_unit_ideal()) return out;
  const std::size_t n = gb.ring()->variable_count();
  const auto leads = gb.leading_monomials();
  std::vector<std::uint32_t> caps(n, 0);
  for (const auto& m : leads)
    for (std::size_t v = 0; v < n; ++v)
      if (m.support() == (1u << v)) caps[v] = caps[v] ? std::min(caps[v], m[v]) : m[v];

  Monomial current;
  auto standard = [&](const Monomial& m) {
    return std::none_of(leads.begin(), leads.end(), [&](const Monomial& l) { return l.divides(m); });
  };
  // Depth-first over the box; a monomial divisible by a leading term has no
  // standard multiples, so the branch is pruned.
  auto visit = [&](auto&& self, std::size_t var) -> void {
    if (var == n) {
      if (out.monomials.size() >= budget)
        fail(ErrorKind::CostGuardExceeded, "staircase enumeration exceeded the budget");
      out.monomials.push_back(current);
      return;
    }
    for (std::uint32_t e = 0; e < caps[var]; ++e) {
      current.set(var, e);
      if (!standard(current)) break;
      self(self, var + 1);
    }
    current.set(var, 0);
  };
  visit(visit, 0);
  const auto& order = gb.order();
  std::sort(out.monomials.begin(), out.monomials.end(),
            [&](const Monomial& a, const Monomial& b) { return order.compare(a, b) < 0; });
  return out;
}

template <CoefficientField F>
int krull_dimension(const ReducedGB<F>& gb) {
  if (gb.is_unit_ideal()) return -1;
  const std::size_t n = gb.ring()->variable_count();
  std::vector<std::uint32_t> supports;
  for (const auto& m : gb.leading_monomials()) supports.push_back(m.support());
  int best = 0;
  for (std::uint32_t subset = 0; subset < (1u << n); ++subset) {
    const int size = std::popcount(subset);
    if (size <= best) continue;
    const bool independent =
        std::none_of(supports.begin(), supports.end(), [&](std::uint32_t s) { return (s & ~subset) == 0; });
    if (independent) best = size;
  }
  return best;
}

template <CoefficientField F>
ReducedGB<F> local_component_at_origin(const IdealPresentation<F>& L, std::uint64_t budget) {
  const auto& ring = L.ring();
  auto with_bracket = [&](unsigned exponent) {
    std::vector<Polynomial<F>> gens = L.generators();
    for (std::size_t v = 0; v < ring->variable_count(); ++v)
      gens.push_back(Polynomial<F>::term(ring, Monomial::variable(v, exponent), ring->field().one()));
    return buchberger(IdealPresentation<F>(ring, std::move(gens)));
  };
  // Strictly increasing in N until n^[N] lies in L locally, constant afterwards.
  for (unsigned N = 1; N < kMaxExponent; N *= 2) {
    ReducedGB<F> gb = with_bracket(N);
    const BigInt here = length(gb, budget);
    const BigInt next = length(with_bracket(N + 1), budget);
    if (here == next) return gb;
  }
  fail(ErrorKind::NotArtinian, "quotient is not Artinian at the origin: " + L.to_string());
}

template <CoefficientField F>
BigInt local_length(const IdealPresentation<F>& L, std::uint64_t budget) {
  return length(local_component_at_origin(L, budget), budget);
}

#define FSPLIT_INSTANTIATE_ARTINIAN(F)                                                         \
  template bool is_artinian(const ReducedGB<F>&);                                              \
  template BigInt length(const ReducedGB<F>&, std::uint64_t);                                  \
  template StaircaseBasis standard_monomials(const ReducedGB<F>&, std::uint64_t);              \
  template int krull_dimension(const ReducedGB<F>&);                                           \
  template ReducedGB<F> local_component_at_origin(const IdealPresentation<F>&, std::uint64_t); \
  template BigInt local_length(const IdealPresentation<F>&, std::uint64_t);

FSPLIT_INSTANTIATE_ARTINIAN(PrimeField)
FSPLIT_INSTANTIATE_ARTINIAN(FunctionField)

}  // namespace fsplit
