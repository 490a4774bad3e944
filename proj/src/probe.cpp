#include "fsplit/probe.hpp"

#include <algorithm>
#include <set>

namespace fsplit {

std::string CoordinatePrime::to_string() const {
  std::string out = "(";
  for (std::size_t i = 0; i < variables.size(); ++i) out += (i ? "," : "") + variables[i];
  return out + ")";
}

bool is_subprime(const CoordinatePrime& p, const CoordinatePrime& q) {
  return std::all_of(p.variables.begin(), p.variables.end(), [&](const std::string& v) {
    return std::find(q.variables.begin(), q.variables.end(), v) != q.variables.end();
  });
}

namespace {

template <CoefficientField F>
std::uint32_t prime_mask(const RingPtr<F>& ring, const CoordinatePrime& P) {
  std::uint32_t mask = 0;
  for (const auto& v : P.variables) {
    const auto idx = ring->index_of(v);
    if (!idx) fail(ErrorKind::InvalidArgument, "prime " + P.to_string() + " uses unknown variable " + v);
    mask |= 1u << *idx;
  }
  return mask;
}

FpMPoly embed(const FpMPoly& f, std::size_t nvars) {
  std::vector<FpMPoly::Term> terms;
  for (auto t : f.terms()) {
    t.exponents.resize(nvars, 0);
    terms.push_back(std::move(t));
  }
  return FpMPoly::from_terms(f.modulus(), nvars, std::move(terms));
}

// Coefficient c of the source ring as a fraction over the enlarged transcendentals.
RatFunc lift_coefficient(const FunctionField&, const Fp& c, std::uint32_t p, std::size_t m) {
  return {FpMPoly::constant(p, m, c.value), FpMPoly::constant(p, m, 1)};
}

RatFunc lift_coefficient(const FunctionField&, const RatFunc& c, std::uint32_t, std::size_t m) {
  return {embed(c.num, m), embed(c.den, m)};
}

std::vector<std::string> source_transcendentals(const PrimeField&) { return {}; }
std::vector<std::string> source_transcendentals(const FunctionField& k) { return k.transcendentals(); }

std::string display_name(const CoordinatePrime& P) { return P.name.empty() ? P.to_string() : P.name; }

}  // namespace

template <CoefficientField F>
CoordinatePrime make_coordinate_prime(const RingPtr<F>& ring, const std::vector<std::string>& variables,
                                      std::string name) {
  std::set<std::size_t> seen;
  for (const auto& v : variables) {
    const auto idx = ring->index_of(v);
    if (!idx) fail(ErrorKind::InvalidArgument, "unknown variable '" + v + "' in prime");
    if (!seen.insert(*idx).second) fail(ErrorKind::DuplicateVariable, "variable '" + v + "' repeated in prime");
  }
  CoordinatePrime P;
  for (auto idx : seen) P.variables.push_back(ring->variables()[idx]);
  P.name = name.empty() ? P.to_string() : std::move(name);
  return P;
}

template <CoefficientField F>
PrimeChain make_prime_chain(const RingPtr<F>& ring, const std::vector<std::vector<std::string>>& subsets,
                            std::string name) {
  PrimeChain chain;
  chain.name = std::move(name);
  for (const auto& s : subsets) {
    CoordinatePrime P = make_coordinate_prime(ring, s);
    if (!chain.primes.empty()) {
      const auto& prev = chain.primes.back();
      if (!is_subprime(prev, P) || prev.variables.size() == P.variables.size())
        fail(ErrorKind::InvalidArgument, "chain needs strict inclusions, got " + prev.to_string() + " then " +
                                             P.to_string());
    }
    chain.primes.push_back(std::move(P));
  }
  return chain;
}

template <CoefficientField F>
bool contained_in_prime(const IdealPresentation<F>& I, const CoordinatePrime& P) {
  const std::uint32_t mask = prime_mask(I.ring(), P);
  for (const auto& g : I.generators())
    for (const auto& t : g.terms())
      if ((t.monomial.support() & mask) == 0) return false;
  return true;
}

template <CoefficientField F>
IdealPresentation<FunctionField> localize_at_coordinate_prime(const IdealPresentation<F>& I,
                                                              const CoordinatePrime& P) {
  const auto& ring = I.ring();
  if (!contained_in_prime(I, P))
    fail(ErrorKind::NotContaining, I.to_string() + " is not contained in " + P.to_string());
  const std::uint32_t mask = prime_mask(ring, P);
  const std::size_t n = ring->variable_count();

  std::vector<std::string> trans = source_transcendentals(ring->field());
  const std::size_t old_trans = trans.size();
  std::vector<std::size_t> kept, moved;
  for (std::size_t v = 0; v < n; ++v) {
    if (mask & (1u << v)) {
      kept.push_back(v);
    } else {
      moved.push_back(v);
      trans.push_back(ring->variables()[v]);
    }
  }
  const std::uint32_t p = ring->field().characteristic();
  const std::size_t m = trans.size();
  FunctionField field(p, trans);
  std::vector<std::string> names;
  for (auto v : kept) names.push_back(ring->variables()[v]);
  auto target = make_ring(field, names, MonomialOrder::grevlex());

  std::vector<Polynomial<FunctionField>> gens;
  for (const auto& g : I.generators()) {
    Polynomial<FunctionField> acc(target);
    for (const auto& t : g.terms()) {
      RatFunc c = lift_coefficient(field, t.coeff, p, m);
      std::vector<std::uint32_t> shift(m, 0);
      for (std::size_t i = 0; i < moved.size(); ++i) shift[old_trans + i] = t.monomial[moved[i]];
      FpMPoly unit = FpMPoly::from_terms(p, m, {{shift, 1}});
      RatFunc coeff = field.make(c.num * unit, c.den);
      std::vector<std::uint32_t> exps(kept.size());
      for (std::size_t i = 0; i < kept.size(); ++i) exps[i] = t.monomial[kept[i]];
      acc += Polynomial<FunctionField>::term(target, Monomial(exps), coeff);
    }
    gens.push_back(acc.is_zero() ? acc : acc.monic());
  }
  return IdealPresentation<FunctionField>(target, std::move(gens));
}

template <CoefficientField F>
SplittingReport s_e_at_prime(const IdealPresentation<F>& I, const CoordinatePrime& P, unsigned e,
                             const ComputeOptions& options) {
  return normalized_splitting_number(localize_at_coordinate_prime(I, P), e, options);
}

template <CoefficientField F>
MonotonicityReport check_localization_monotonicity(const IdealPresentation<F>& I, const PrimeChain& chain, unsigned e,
                                                   const RingFlags& flags, const ComputeOptions& options) {
  if (!flags.equidimensional)
    fail(ErrorKind::MissingFlag, "monotonicity under localization needs R locally equidimensional "
                                 "(set equidimensional = true)");
  MonotonicityReport report;
  for (const auto& P : chain.primes) report.values.push_back({P, s_e_at_prime(I, P, e, options)});
  report.holds = true;
  for (std::size_t i = 0; i + 1 < report.values.size(); ++i)
    report.holds = report.holds && report.values[i].report.s_e >= report.values[i + 1].report.s_e;
  return report;
}

template <CoefficientField F>
KunzReport check_kunz_constancy(const IdealPresentation<F>& I, const std::vector<CoordinatePrime>& primes,
                                const RingFlags& flags) {
  if (!flags.equidimensional || !flags.connected)
    fail(ErrorKind::MissingFlag, "dim + alpha constancy needs R connected and locally equidimensional "
                                 "(set connected = true and equidimensional = true)");
  KunzReport report;
  for (const auto& P : primes) {
    const auto local = localize_at_coordinate_prime(I, P);
    report.primes.push_back(P);
    report.sums.push_back(krull_dimension(buchberger(local)) + static_cast<int>(local.ring()->field().alpha()));
  }
  report.holds = std::adjacent_find(report.sums.begin(), report.sums.end(), std::not_equal_to<>()) ==
                 report.sums.end();
  return report;
}

bool generization_closed(const std::vector<CoordinatePrime>& sample, const std::vector<bool>& member) {
  for (std::size_t q = 0; q < sample.size(); ++q) {
    if (!member[q]) continue;
    for (std::size_t p = 0; p < sample.size(); ++p)
      if (!member[p] && is_subprime(sample[p], sample[q])) return false;
  }
  return true;
}

SemicontinuityReport evaluate_thresholds(unsigned e, std::vector<PrimeValue> values,
                                         const std::vector<Rational>& thresholds) {
  SemicontinuityReport report;
  report.e = e;
  report.values = std::move(values);
  std::vector<CoordinatePrime> sample;
  for (const auto& v : report.values) {
    sample.push_back(v.prime);
    report.kunz_sums.push_back(v.report.dim + static_cast<int>(v.report.alpha));
  }
  for (const auto& r : thresholds) {
    ThresholdVerdict verdict;
    verdict.threshold = r;
    std::vector<bool> above, at_least;
    for (const auto& v : report.values) {
      above.push_back(v.report.s_e > r);
      at_least.push_back(v.report.s_e >= r);
      if (above.back()) verdict.above.push_back(display_name(v.prime));
      if (at_least.back()) verdict.at_least.push_back(display_name(v.prime));
    }
    verdict.above_closed = generization_closed(sample, above);
    verdict.at_least_closed = generization_closed(sample, at_least);
    report.thresholds.push_back(std::move(verdict));
  }
  return report;
}

bool SemicontinuityReport::passed() const {
  return std::all_of(thresholds.begin(), thresholds.end(),
                     [](const ThresholdVerdict& v) { return v.above_closed && v.at_least_closed; });
}

template <CoefficientField F>
SemicontinuityReport semicontinuity_scan(const IdealPresentation<F>& I, const std::vector<CoordinatePrime>& primes,
                                         unsigned e, const std::vector<Rational>& thresholds,
                                         const ComputeOptions& options) {
  std::vector<PrimeValue> values;
  for (const auto& P : primes) values.push_back({P, s_e_at_prime(I, P, e, options)});
  return evaluate_thresholds(e, std::move(values), thresholds);
}

#define FSPLIT_INSTANTIATE_PROBE(F)                                                                                 \
  template CoordinatePrime make_coordinate_prime(const RingPtr<F>&, const std::vector<std::string>&, std::string);  \
  template PrimeChain make_prime_chain(const RingPtr<F>&, const std::vector<std::vector<std::string>>&,             \
                                       std::string);                                                               \
  template bool contained_in_prime(const IdealPresentation<F>&, const CoordinatePrime&);                          \
  template IdealPresentation<FunctionField> localize_at_coordinate_prime(const IdealPresentation<F>&,              \
                                                                         const CoordinatePrime&);                  \
  template SplittingReport s_e_at_prime(const IdealPresentation<F>&, const CoordinatePrime&, unsigned,            \
                                        const ComputeOptions&);                                                    \
  template MonotonicityReport check_localization_monotonicity(const IdealPresentation<F>&, const PrimeChain&,      \
                                                              unsigned, const RingFlags&, const ComputeOptions&);  \
  template KunzReport check_kunz_constancy(const IdealPresentation<F>&, const std::vector<CoordinatePrime>&,      \
                                           const RingFlags&);                               \
  template SemicontinuityReport semicontinuity_scan(const IdealPresentation<F>&,                                  \
                                                    const std::vector<CoordinatePrime>&, unsigned,                 \
                                                    const std::vector<Rational>&, const ComputeOptions&);

FSPLIT_INSTANTIATE_PROBE(PrimeField)
FSPLIT_INSTANTIATE_PROBE(FunctionField)

}  // namespace fsplit
