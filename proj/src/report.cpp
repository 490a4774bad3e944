#include "fsplit/report.hpp"

namespace fsplit {

namespace {

BigInt big_from(const Json& j) {
  if (!j.is_string()) fail(ErrorKind::ParseError, "expected a decimal string, got " + j.dump());
  return BigInt(j.get<std::string>());
}

Rational rational_from(const Json& j) {
  if (!j.is_string()) fail(ErrorKind::ParseError, "expected a rational string, got " + j.dump());
  return parse_rational(j.get<std::string>());
}

Json names(const std::vector<std::string>& v) {
  Json out = Json::array();
  for (const auto& s : v) out.push_back(s);
  return out;
}

std::vector<PrimeValue> values_from(const Json& j) {
  std::vector<PrimeValue> out;
  for (const auto& v : j) out.push_back({prime_from_json(v.at("prime")), splitting_report_from_json(v.at("report"))});
  return out;
}

Json values_to(const std::vector<PrimeValue>& values) {
  Json out = Json::array();
  for (const auto& v : values) out.push_back(Json{{"prime", to_json(v.prime)}, {"report", to_json(v.report)}});
  return out;
}

}  // namespace

Json to_json(const SplittingReport& r) {
  Json j;
  j["e"] = r.e;
  j["q"] = r.q;
  j["lambda"] = to_string(r.lambda);
  j["dim"] = r.dim;
  j["s_e"] = to_string(r.s_e);
  j["a_e"] = r.a_e ? Json(to_string(*r.a_e)) : Json(nullptr);
  j["alpha"] = r.alpha;
  return j;
}

SplittingReport splitting_report_from_json(const Json& j) {
  SplittingReport r;
  r.e = j.at("e").get<unsigned>();
  r.q = j.at("q").get<std::uint64_t>();
  r.lambda = big_from(j.at("lambda"));
  r.dim = j.at("dim").get<int>();
  r.s_e = rational_from(j.at("s_e"));
  if (j.contains("a_e") && !j.at("a_e").is_null()) r.a_e = big_from(j.at("a_e"));
  r.alpha = j.value("alpha", 0u);
  return r;
}

Json to_json(const SignatureEstimate& s) {
  Json reports = Json::array();
  for (const auto& r : s.reports) reports.push_back(to_json(r));
  return Json{{"reports", reports},
              {"tail_min", to_string(s.tail_min)},
              {"tail_max", to_string(s.tail_max)},
              {"positive", s.positive}};
}

SignatureEstimate signature_from_json(const Json& j) {
  SignatureEstimate s;
  for (const auto& r : j.at("reports")) s.reports.push_back(splitting_report_from_json(r));
  s.tail_min = rational_from(j.at("tail_min"));
  s.tail_max = rational_from(j.at("tail_max"));
  s.positive = j.at("positive").get<bool>();
  return s;
}

Json to_json(const CoordinatePrime& p) { return Json{{"name", p.name}, {"variables", names(p.variables)}}; }

CoordinatePrime prime_from_json(const Json& j) {
  return {j.at("name").get<std::string>(), j.at("variables").get<std::vector<std::string>>()};
}

Json to_json(const SemicontinuityReport& r) {
  Json thresholds = Json::array();
  for (const auto& t : r.thresholds)
    thresholds.push_back(Json{{"r", to_string(t.threshold)},
                              {"above", names(t.above)},
                              {"above_closed", t.above_closed},
                              {"at_least", names(t.at_least)},
                              {"at_least_closed", t.at_least_closed}});
  return Json{{"e", r.e},
              {"values", values_to(r.values)},
              {"kunz_sums", r.kunz_sums},
              {"thresholds", thresholds},
              {"pass", r.passed()}};
}

SemicontinuityReport semicontinuity_from_json(const Json& j) {
  std::vector<Rational> rs;
  for (const auto& t : j.at("thresholds")) rs.push_back(rational_from(t.at("r")));
  // Verdicts are recomputed from the values rather than trusted.
  return evaluate_thresholds(j.at("e").get<unsigned>(), values_from(j.at("values")), rs);
}

Json to_json(const MonotonicityReport& r) { return Json{{"values", values_to(r.values)}, {"holds", r.holds}}; }

MonotonicityReport monotonicity_from_json(const Json& j) {
  MonotonicityReport r;
  r.values = values_from(j.at("values"));
  r.holds = j.at("holds").get<bool>();
  return r;
}

Json to_json(const KunzReport& r) {
  Json primes = Json::array();
  for (const auto& p : r.primes) primes.push_back(to_json(p));
  return Json{{"primes", primes}, {"sums", r.sums}, {"holds", r.holds}};
}

KunzReport kunz_from_json(const Json& j) {
  KunzReport r;
  for (const auto& p : j.at("primes")) r.primes.push_back(prime_from_json(p));
  r.sums = j.at("sums").get<std::vector<int>>();
  r.holds = j.at("holds").get<bool>();
  return r;
}

}  // namespace fsplit
