#include "fsplit/api.hpp"

#include "fsplit/oracle.hpp"

namespace fsplit {

namespace {

template <CoefficientField F>
Json describe(const Presentation<F>& pres) {
  const auto& ring = pres.ring;
  std::vector<std::string> trans;
  if constexpr (std::is_same_v<F, FunctionField>) trans = ring->field().transcendentals();
  return Json{{"char", ring->field().characteristic()},
              {"vars", ring->variables()},
              {"trans", trans},
              {"ideal", pres.ideal.to_string()}};
}

Json header(const char* command) { return Json{{"schema", kSchema}, {"command", command}}; }

template <CoefficientField F>
void attach_oracle(Json& report, const SplittingReport& r, const Presentation<F>& pres) {
  if constexpr (std::is_same_v<F, PrimeField>) {
    const BigInt lambda = oracle::dual_splitting_length(pres.ideal, r.e);
    if (lambda != r.lambda)
      fail(ErrorKind::InternalInconsistency,
           "oracle length " + to_string(lambda) + " differs from " + to_string(r.lambda));
    report["oracle_lambda"] = to_string(lambda);
  } else {
    fail(ErrorKind::InvalidArgument, "the oracle only works over F_p");
  }
}

template <CoefficientField F>
std::vector<CoordinatePrime> resolve_primes(const RingSpec& spec, const RingPtr<F>& ring, const std::string& text) {
  std::vector<CoordinatePrime> out;
  for (const auto& vars : parse_prime_list(text)) {
    if (vars.size() == 1 && !ring->index_of(vars[0])) {
      auto it = std::find_if(spec.primes.begin(), spec.primes.end(), [&](const auto& p) { return p.first == vars[0]; });
      if (it == spec.primes.end()) fail(ErrorKind::InvalidArgument, "'" + vars[0] + "' is neither a variable nor a prime");
      out.push_back(make_coordinate_prime(ring, it->second, it->first));
      continue;
    }
    out.push_back(make_coordinate_prime(ring, vars));
  }
  return out;
}

template <CoefficientField F>
std::vector<Polynomial<F>> parse_list(const RingPtr<F>& ring, const std::string& text) {
  std::vector<Polynomial<F>> out;
  for (const auto& item : split_list({text, {1, 1}})) out.push_back(parse_polynomial(ring, item));
  return out;
}

}  // namespace

Json run_se(const RingSpec& spec, unsigned e, const CommandOptions& options) {
  return with_presentation(spec, [&](const auto& pres) {
    const SplittingReport r = normalized_splitting_number(pres.ideal, e, options.compute);
    Json doc = header("se");
    doc["ring"] = describe(pres);
    Json report = to_json(r);
    if (options.oracle) attach_oracle(report, r, pres);
    doc["report"] = report;
    return doc;
  });
}

Json run_signature(const RingSpec& spec, unsigned e_max, const CommandOptions& options) {
  return with_presentation(spec, [&](const auto& pres) {
    const SignatureEstimate est = f_signature_sequence(pres.ideal, e_max, options.compute);
    Json doc = header("se");
    doc["ring"] = describe(pres);
    doc["signature"] = to_json(est);
    if (options.oracle)
      for (std::size_t i = 0; i < est.reports.size(); ++i)
        attach_oracle(doc["signature"]["reports"][i], est.reports[i], pres);
    return doc;
  });
}

Json partial_signature(const RingSpec& spec, const SignatureCostGuard& err) {
  return with_presentation(spec, [&](const auto& pres) {
    Json doc = header("se");
    doc["ring"] = describe(pres);
    doc["signature"] = to_json(err.partial());
    doc["error"] = Json{{"kind", error_kind_name(err.kind())}, {"message", err.what()}};
    return doc;
  });
}

Json run_probe(const RingSpec& spec, const std::optional<std::string>& primes, const std::vector<std::string>& chains,
               unsigned e, const std::vector<Rational>& thresholds, const CommandOptions& options) {
  return with_presentation(spec, [&](const auto& pres) {
    const auto& ring = pres.ring;
    std::vector<CoordinatePrime> sample;
    if (primes) {
      sample = resolve_primes(spec, ring, *primes);
    } else {
      for (const auto& [name, vars] : spec.primes) sample.push_back(make_coordinate_prime(ring, vars, name));
    }
    if (sample.empty()) fail(ErrorKind::InvalidArgument, "no primes to probe; pass --primes or add prime.NAME entries");

    std::vector<PrimeChain> all_chains;
    for (const auto& [name, subsets] : spec.chains) all_chains.push_back(make_prime_chain(ring, subsets, name));
    for (const auto& text : chains) all_chains.push_back(make_prime_chain(ring, parse_prime_list(text), text));
    if (!all_chains.empty() && !spec.flags.equidimensional)
      fail(ErrorKind::MissingFlag, "monotonicity checks need 'equidimensional = true' in the ring file");

    Json doc = header("probe");
    doc["ring"] = describe(pres);
    const SemicontinuityReport scan = semicontinuity_scan(pres.ideal, sample, e, thresholds, options.compute);
    doc["scan"] = to_json(scan);
    Json mono = Json::array();
    bool ok = scan.passed();
    for (const auto& chain : all_chains) {
      const auto m = check_localization_monotonicity(pres.ideal, chain, e, spec.flags, options.compute);
      Json j = to_json(m);
      j["chain"] = chain.name;
      mono.push_back(j);
      ok = ok && m.holds;
    }
    doc["monotonicity"] = mono;
    if (spec.flags.connected && spec.flags.equidimensional) {
      const auto k = check_kunz_constancy(pres.ideal, sample, spec.flags);
      doc["kunz"] = to_json(k);
      ok = ok && k.holds;
    } else {
      doc["kunz"] = nullptr;
    }
    doc["pass"] = ok;
    return doc;
  });
}

Json run_gorenstein(const RingSpec& spec, const std::optional<std::string>& sop,
                    const std::optional<std::string>& socle, unsigned e, const CommandOptions& options) {
  return with_presentation(spec, [&](const auto& pres) {
    using Poly = typename std::decay_t<decltype(pres.ideal.generators())>::value_type;
    const auto& ring = pres.ring;
    std::vector<Poly> params = sop ? parse_list(ring, *sop) : pres.sop;
    std::optional<Poly> u = pres.socle;
    if (socle) u = parse_polynomial(ring, SourceText{*socle, {1, 1}});
    const SplittingReport r = gorenstein_splitting_number(pres.ideal, params, e, u, options.compute);
    const Poly generator = socle_generator(pres.ideal, params, options.compute);
    Json doc = header("gorenstein");
    doc["ring"] = describe(pres);
    Json sop_json = Json::array();
    for (const auto& x : params) sop_json.push_back(x.to_string());
    doc["sop"] = sop_json;
    doc["socle"] = generator.to_string();
    doc["report"] = to_json(r);
    return doc;
  });
}

int exit_code_for(ErrorKind kind) {
  if (is_budget_error(kind)) return 3;
  switch (kind) {
    case ErrorKind::ParseError:
    case ErrorKind::InvalidArgument:
    case ErrorKind::DuplicateVariable:
      return 1;
    default:
      return 2;
  }
}

std::vector<Rational> parse_thresholds(const std::string& text) {
  std::vector<Rational> out;
  for (const auto& item : split_list({text, {1, 1}})) out.push_back(parse_rational(item.text));
  return out;
}

}  // namespace fsplit
