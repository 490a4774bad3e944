#include "fsplit/splitting.hpp"

#include <cstdlib>
#include <iostream>

namespace fsplit {

ComputeOptions ComputeOptions::from_environment() {
  ComputeOptions options;
  if (const char* env = std::getenv("FSPLIT_BUDGET")) {
    char* end = nullptr;
    const unsigned long long v = std::strtoull(env, &end, 10);
    if (end == env || *end != '\0' || v == 0)
      fail(ErrorKind::InvalidArgument, std::string("FSPLIT_BUDGET must be a positive integer, got '") + env + "'");
    options.budget = v;
  }
  return options;
}

SplittingReport make_report(unsigned e, std::uint64_t q, BigInt lambda, int dim, unsigned alpha) {
  if (dim < 0) fail(ErrorKind::InvalidArgument, "the zero ring has no splitting numbers");
  SplittingReport r;
  r.e = e;
  r.q = q;
  r.lambda = std::move(lambda);
  r.dim = dim;
  r.alpha = alpha;
  r.s_e = Rational(r.lambda, big_pow(q, static_cast<unsigned>(dim)));
  const Rational a = r.s_e * Rational(big_pow(q, static_cast<unsigned>(dim) + alpha));
  if (boost::multiprecision::denominator(a) != 1)
    fail(ErrorKind::InternalInconsistency, "a_e = " + to_string(a) + " is not an integer");
  r.a_e = boost::multiprecision::numerator(a);
  if (r.s_e > 1) std::clog << "fsplit: note: s_" << e << " = " << to_string(r.s_e) << " exceeds 1\n";
  return r;
}

namespace {

template <CoefficientField F>
void require_inside_maximal_ideal(const IdealPresentation<F>& I) {
  const auto& k = I.ring()->field();
  for (const auto& g : I.generators())
    if (!k.is_zero(g.constant_coeff()))
      fail(ErrorKind::NotContaining, "generator " + g.to_string() + " does not vanish at the origin");
}

template <CoefficientField F>
IdealPresentation<F> bracket_of_maximal(const RingPtr<F>& ring, std::uint64_t q) {
  std::vector<Polynomial<F>> gens;
  for (std::size_t v = 0; v < ring->variable_count(); ++v)
    gens.push_back(Polynomial<F>::term(ring, Monomial::variable(v, static_cast<std::uint32_t>(q)), ring->field().one()));
  return IdealPresentation<F>(ring, std::move(gens));
}

template <CoefficientField F>
int dimension_of(const IdealPresentation<F>& I) {
  return krull_dimension(buchberger(I));
}

}  // namespace

template <CoefficientField F>
ReducedGB<F> frobenius_colon(const IdealPresentation<F>& I, unsigned e) {
  if (I.is_zero()) return ReducedGB<F>(I.ring(), {Polynomial<F>::constant(I.ring(), I.ring()->field().one())});
  return colon_ideal(frobenius_power(I, e), I);
}

namespace {

template <CoefficientField F>
ReducedGB<F> splitting_ideal_from(const IdealPresentation<F>& bracket, const ReducedGB<F>& K) {
  if (K.is_unit_ideal() || bracket.generators().empty()) return buchberger(bracket);
  return colon_ideal(bracket, K.presentation());
}

template <CoefficientField F>
BigInt dual_length_from(const IdealPresentation<F>& bracket, const ReducedGB<F>& K, std::uint64_t q,
                        const ComputeOptions& options) {
  const BigInt full = big_pow(q, static_cast<unsigned>(bracket.ring()->variable_count()));
  return full - length(buchberger(ideal_sum(K.presentation(), bracket)), options.budget);
}

}  // namespace

template <CoefficientField F>
ReducedGB<F> splitting_ideal(const IdealPresentation<F>& I, unsigned e) {
  require_inside_maximal_ideal(I);
  const std::uint64_t q = checked_prime_power(I.ring()->field().characteristic(), e);
  return splitting_ideal_from(bracket_of_maximal(I.ring(), q), frobenius_colon(I, e));
}

template <CoefficientField F>
BigInt dual_splitting_length(const IdealPresentation<F>& I, unsigned e, const ComputeOptions& options) {
  require_inside_maximal_ideal(I);
  const std::uint64_t q = checked_prime_power(I.ring()->field().characteristic(), e);
  return dual_length_from(bracket_of_maximal(I.ring(), q), frobenius_colon(I, e), q, options);
}

template <CoefficientField F>
SplittingReport normalized_splitting_number(const IdealPresentation<F>& I, unsigned e, const ComputeOptions& options) {
  require_inside_maximal_ideal(I);
  const std::uint64_t q = checked_prime_power(I.ring()->field().characteristic(), e);
  const auto bracket = bracket_of_maximal(I.ring(), q);
  const ReducedGB<F> K = frobenius_colon(I, e);
  BigInt lambda = length(splitting_ideal_from(bracket, K), options.budget);
  const BigInt dual = dual_length_from(bracket, K, q, options);
  if (lambda != dual)
    fail(ErrorKind::InternalInconsistency,
         "primal length " + to_string(lambda) + " differs from dual length " + to_string(dual));
  return make_report(e, q, std::move(lambda), dimension_of(I), I.ring()->field().alpha());
}

template <CoefficientField F>
bool regularity_test(const IdealPresentation<F>& I, unsigned e, const ComputeOptions& options) {
  if (e < 1) fail(ErrorKind::InvalidArgument, "regularity test needs e >= 1");
  return normalized_splitting_number(I, e, options).s_e == 1;
}

template <CoefficientField F>
Polynomial<F> socle_generator(const IdealPresentation<F>& I, const std::vector<Polynomial<F>>& sop,
                              const ComputeOptions& options) {
  require_inside_maximal_ideal(I);
  const auto& ring = I.ring();
  const int d = dimension_of(I);
  if (static_cast<int>(sop.size()) < d)
    fail(ErrorKind::NotArtinian, "need " + std::to_string(d) + " parameters, got " + std::to_string(sop.size()));
  const auto L = ideal_sum(I, IdealPresentation<F>(ring, sop));
  require_inside_maximal_ideal(L);
  const ReducedGB<F> local = local_component_at_origin(L, options.budget);
  const auto one = Polynomial<F>::constant(ring, ring->field().one());
  if (ring->variable_count() == 0) return one;

  const ReducedGB<F> socle_lift = colon_ideal(local.presentation(), maximal_ideal(ring));
  const BigInt socle_dim = length(local, options.budget) - length(socle_lift, options.budget);
  if (socle_dim != 1)
    fail(ErrorKind::NotGorenstein, "socle of S/(I + (x)) has dimension " + to_string(socle_dim));
  for (const auto& g : socle_lift.basis()) {
    Polynomial<F> r = normal_form(g, local);
    if (!r.is_zero()) return r.monic();
  }
  fail(ErrorKind::InternalInconsistency, "nonzero socle without a generator");
}

template <CoefficientField F>
SplittingReport gorenstein_splitting_number(const IdealPresentation<F>& I, const std::vector<Polynomial<F>>& sop,
                                            unsigned e, const std::optional<Polynomial<F>>& socle,
                                            const ComputeOptions& options) {
  const auto& ring = I.ring();
  const std::uint64_t q = checked_prime_power(ring->field().characteristic(), e);
  const int d = dimension_of(I);
  if (static_cast<int>(sop.size()) != d)
    fail(d > static_cast<int>(sop.size()) ? ErrorKind::NotArtinian : ErrorKind::InvalidArgument,
         "a system of parameters needs exactly " + std::to_string(d) + " elements");

  const Polynomial<F> generator = socle_generator(I, sop, options);
  Polynomial<F> u = generator;
  if (socle) {
    u = socle->in_ring(ring);
    // Both generate the one-dimensional socle, so u must be a nonzero multiple of it.
    const auto L = ideal_sum(I, IdealPresentation<F>(ring, sop));
    const ReducedGB<F> local = local_component_at_origin(L, options.budget);
    const Polynomial<F> reduced = normal_form(u, local);
    const Polynomial<F> expected = normal_form(generator, local);
    if (reduced.is_zero() || !(reduced.monic() == expected.monic()))
      fail(ErrorKind::NotGorenstein, "the supplied element " + u.to_string() + " does not generate the socle");
  }

  const auto sop_bracket = frobenius_power(IdealPresentation<F>(ring, sop), e);
  const auto base = ideal_sum(I, sop_bracket);
  const Polynomial<F> uq = u.frobenius(e);
  BigInt lambda = uq.is_zero() ? BigInt(0) : local_length(colon_by_element(base, uq).presentation(), options.budget);
  return make_report(e, q, std::move(lambda), d, ring->field().alpha());
}

SignatureEstimate summarize_signature(std::vector<SplittingReport> reports) {
  SignatureEstimate est;
  est.reports = std::move(reports);
  bool first = true;
  est.positive = est.reports.size() > 1;
  for (const auto& r : est.reports) {
    if (r.e == 0) continue;
    if (first || r.s_e > est.tail_max) est.tail_max = r.s_e;
    if (first || r.s_e < est.tail_min) est.tail_min = r.s_e;
    first = false;
    est.positive = est.positive && r.s_e > 0;
  }
  return est;
}

template <CoefficientField F>
SignatureEstimate f_signature_sequence(const IdealPresentation<F>& I, unsigned e_max, const ComputeOptions& options) {
  if (e_max < 1) fail(ErrorKind::InvalidArgument, "e_max must be positive");
  checked_prime_power(I.ring()->field().characteristic(), e_max);
  std::vector<SplittingReport> reports;
  for (unsigned e = 0; e <= e_max; ++e) {
    try {
      reports.push_back(normalized_splitting_number(I, e, options));
    } catch (const Error& err) {
      if (err.kind() != ErrorKind::CostGuardExceeded) throw;
      throw SignatureCostGuard("stopped at e = " + std::to_string(e) + ": " + err.what(),
                               summarize_signature(std::move(reports)));
    }
  }
  return summarize_signature(std::move(reports));
}

#define FSPLIT_INSTANTIATE_SPLITTING(F)                                                                        \
  template ReducedGB<F> frobenius_colon(const IdealPresentation<F>&, unsigned);                                \
  template ReducedGB<F> splitting_ideal(const IdealPresentation<F>&, unsigned);                                \
  template BigInt dual_splitting_length(const IdealPresentation<F>&, unsigned, const ComputeOptions&);          \
  template SplittingReport normalized_splitting_number(const IdealPresentation<F>&, unsigned,                  \
                                                       const ComputeOptions&);                                 \
  template bool regularity_test(const IdealPresentation<F>&, unsigned, const ComputeOptions&);                 \
  template Polynomial<F> socle_generator(const IdealPresentation<F>&, const std::vector<Polynomial<F>>&,       \
                                         const ComputeOptions&);                                               \
  template SplittingReport gorenstein_splitting_number(const IdealPresentation<F>&,                            \
                                                       const std::vector<Polynomial<F>>&, unsigned,            \
                                                       const std::optional<Polynomial<F>>&,                    \
                                                       const ComputeOptions&);                                 \
  template SignatureEstimate f_signature_sequence(const IdealPresentation<F>&, unsigned, const ComputeOptions&);

FSPLIT_INSTANTIATE_SPLITTING(PrimeField)
FSPLIT_INSTANTIATE_SPLITTING(FunctionField)

}  // namespace fsplit
