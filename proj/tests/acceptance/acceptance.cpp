// Acceptance suite: one PASS/FAIL line per criterion, nonzero exit if any fails.

#include <chrono>
#include <fstream>
#include <functional>
#include <iostream>
#include <random>
#include <sstream>

#include "fsplit/api.hpp"
#include "fsplit/oracle.hpp"
#include "support/corpus.hpp"
#include "support/helpers.hpp"

using namespace fsplit;
using namespace fsplit::testing;

namespace {

// Wall-clock ceilings in seconds, per single computation.
constexpr double kRegularLimit = 1.0;
constexpr double kNodeLimit = 5.0;
constexpr double kCuspLimit = 5.0;
constexpr double kScanLimit = 10.0;

// Box size bound for the oracle comparison.
constexpr std::uint64_t kOracleBoxLimit = 1'000'000;
constexpr int kNormalFormTrials = 1000;
constexpr std::size_t kMinMatlisPairs = 12;
constexpr std::size_t kMinGorensteinCases = 6;

using Clock = std::chrono::steady_clock;

double seconds_since(Clock::time_point start) {
  return std::chrono::duration<double>(Clock::now() - start).count();
}

// Times fn and returns its value, widening worst to the elapsed time.
template <class Fn>
auto timed(double& worst, Fn&& fn) {
  const auto start = Clock::now();
  auto value = fn();
  worst = std::max(worst, seconds_since(start));
  return value;
}

struct Outcome {
  bool pass = true;
  std::string detail;
  std::vector<std::string> problems;

  void require(bool ok, const std::string& what) {
    if (!ok) {
      pass = false;
      if (problems.size() < 5) problems.push_back(what);
    }
  }
};

std::string fmt_seconds(double s) {
  std::ostringstream out;
  out.precision(3);
  out << std::fixed << s << "s";
  return out.str();
}

// Every reduced basis built during the run, for the certificate check.
std::vector<ReducedGB<PF>> prime_bases;
std::vector<ReducedGB<FF>> function_bases;

void remember(const ReducedGB<PF>& gb) { prime_bases.push_back(gb); }
void remember(const ReducedGB<FF>& gb) { function_bases.push_back(gb); }

CoordinatePrime cp(const RingPtr<PF>& R, std::vector<std::string> vars) { return make_coordinate_prime(R, vars); }

// ---------------------------------------------------------------------------

Outcome regular_anchor() {
  Outcome o;
  double worst = 0;
  int cases = 0;
  const std::vector<std::string> names{"x1", "x2", "x3"};
  for (std::uint32_t p : {2u, 3u, 5u})
    for (std::size_t n = 1; n <= 3; ++n) {
      auto R = prime_ring(p, {names.begin(), names.begin() + static_cast<long>(n)});
      for (unsigned e = 0; e <= 3; ++e) {
        const auto r = timed(worst, [&] { return normalized_splitting_number(IdealPresentation<PF>(R), e); });
        o.require(r.s_e == 1 && r.lambda == big_pow(p, e * static_cast<unsigned>(n)),
                  "p=" + std::to_string(p) + " n=" + std::to_string(n) + " e=" + std::to_string(e));
        ++cases;
      }
    }
  o.require(worst < kRegularLimit, "slowest case took " + fmt_seconds(worst));
  o.detail = std::to_string(cases) + " cases, slowest " + fmt_seconds(worst) + " < " + fmt_seconds(kRegularLimit);
  return o;
}

Outcome node_family() {
  Outcome o;
  double worst = 0;
  int cases = 0;
  for (std::uint32_t p : {2u, 3u, 5u}) {
    auto R2 = prime_ring(p, {"x", "y"});
    auto R3 = prime_ring(p, {"x", "y", "z"});
    const auto I2 = ideal(R2, {"x*y"});
    const auto I3 = ideal(R3, {"x*y"});
    for (unsigned e = 1; e <= 3; ++e) {
      const Rational inv_q(1, static_cast<long long>(checked_prime_power(p, e)));
      const auto r = timed(worst, [&] { return normalized_splitting_number(I2, e); });
      o.require(r.s_e == inv_q, "plane node p=" + std::to_string(p) + " e=" + std::to_string(e));
      ++cases;
      const std::vector<std::pair<std::vector<std::string>, Rational>> expected{
          {{"x"}, 1}, {{"x", "z"}, 1}, {{"x", "y"}, inv_q}, {{"x", "y", "z"}, inv_q}};
      for (const auto& [vars, value] : expected) {
        const auto v = timed(worst, [&] { return s_e_at_prime(I3, cp(R3, vars), e); });
        o.require(v.s_e == value, "node in 3-space at " + cp(R3, vars).to_string() + " p=" + std::to_string(p) +
                                      " e=" + std::to_string(e) + " got " + to_string(v.s_e));
        ++cases;
      }
    }
  }
  o.require(worst < kNodeLimit, "slowest case took " + fmt_seconds(worst));
  o.detail = std::to_string(cases) + " values, slowest " + fmt_seconds(worst) + " < " + fmt_seconds(kNodeLimit);
  return o;
}

Outcome cusp_purity() {
  Outcome o;
  double worst = 0;
  auto R = prime_ring(5, {"x", "y"});
  const auto I = ideal(R, {"y^2-x^3"});
  for (unsigned e = 1; e <= 2; ++e) {
    const auto r = timed(worst, [&] { return normalized_splitting_number(I, e); });
    const bool fedder = timed(worst, [&] { return oracle::power_in_bracket(I.generators()[0], e); });
    o.require(r.s_e == 0, "s_" + std::to_string(e) + " = " + to_string(r.s_e));
    // f^(q-1) in n^[q] means not F-pure, which must match s_e = 0
    o.require(fedder == (r.lambda == 0), "power check disagrees at e=" + std::to_string(e));
  }
  o.require(worst < kCuspLimit, "slowest step took " + fmt_seconds(worst));
  o.detail = "s_1 = s_2 = 0, power check agrees, slowest " + fmt_seconds(worst) + " < " + fmt_seconds(kCuspLimit);
  return o;
}

template <CoefficientField F>
void matlis_one(Outcome& o, const CorpusEntry& entry, const Presentation<F>& pres, std::size_t& pairs) {
  for (const auto& [e, lambda] : entry.lambda) {
    const auto J = splitting_ideal(pres.ideal, e);
    remember(J);
    remember(frobenius_colon(pres.ideal, e));
    const BigInt primal = length(J);
    const BigInt dual = dual_splitting_length(pres.ideal, e);
    const std::string where = entry.name + " e=" + std::to_string(e);
    o.require(primal == dual, where + ": " + to_string(primal) + " vs " + to_string(dual));
    o.require(to_string(primal) == lambda, where + ": frozen " + lambda + ", got " + to_string(primal));
    ++pairs;
  }
}

Outcome matlis_identity() {
  Outcome o;
  std::size_t pairs = 0;
  for (const auto& entry : corpus())
    with_presentation(parse_ring_spec(entry.spec), [&](const auto& pres) { matlis_one(o, entry, pres, pairs); });
  o.require(pairs >= kMinMatlisPairs, "only " + std::to_string(pairs) + " pairs");
  o.detail = std::to_string(pairs) + " (I, e) pairs, all equal and matching frozen values";
  return o;
}

template <CoefficientField F>
void gorenstein_one(Outcome& o, const CorpusEntry& entry, const Presentation<F>& pres, std::size_t& cases) {
  for (const auto& [e, lambda] : entry.lambda) {
    const auto via_socle = gorenstein_splitting_number(pres.ideal, pres.sop, e, std::optional<Polynomial<F>>{});
    const auto via_colon = normalized_splitting_number(pres.ideal, e);
    o.require(via_socle == via_colon, entry.name + " e=" + std::to_string(e) + ": " + to_string(via_socle.lambda) +
                                          " vs " + to_string(via_colon.lambda));
    ++cases;
  }
}

Outcome gorenstein_agreement() {
  Outcome o;
  std::size_t entries = 0, cases = 0;
  for (const auto& entry : corpus()) {
    if (!entry.hypersurface) continue;
    ++entries;
    with_presentation(parse_ring_spec(entry.spec), [&](const auto& pres) { gorenstein_one(o, entry, pres, cases); });
  }
  o.require(entries >= kMinGorensteinCases, "only " + std::to_string(entries) + " hypersurfaces");
  o.detail = std::to_string(entries) + " hypersurfaces, " + std::to_string(cases) + " (I, e) pairs agree";
  return o;
}

Outcome oracle_equivalence() {
  Outcome o;
  std::size_t cases = 0;
  for (const auto& entry : corpus()) {
    if (!entry.homogeneous) continue;
    const auto spec = parse_ring_spec(entry.spec);
    if (spec.over_function_field()) continue;
    const auto pres = build_presentation<PF>(spec);
    for (const auto& [e, lambda] : entry.lambda) {
      const BigInt box = big_pow(spec.characteristic, e * static_cast<unsigned>(spec.variables.size()));
      if (box > kOracleBoxLimit) continue;
      const std::string where = entry.name + " e=" + std::to_string(e);
      const auto r = normalized_splitting_number(pres.ideal, e);
      const BigInt dual = oracle::dual_splitting_length(pres.ideal, e);
      o.require(r.lambda == dual, where + ": " + to_string(r.lambda) + " vs oracle " + to_string(dual));
      // the colon-free half: length S/(I + n^[q]) by both routes
      const auto b = bracket_power(maximal_ideal(pres.ring), e);
      const BigInt staircase = length(buchberger(ideal_sum(pres.ideal, b.ideal)));
      const BigInt rank = oracle::length_mod_bracket(pres.ring, pres.ideal.generators(), e, kOracleBoxLimit);
      o.require(staircase == rank, where + ": quotient " + to_string(staircase) + " vs " + to_string(rank));
      ++cases;
    }
  }
  o.require(cases > 0, "no homogeneous cases");
  o.detail = std::to_string(cases) + " homogeneous (I, e) pairs with q^n <= 10^6 agree";
  return o;
}

Outcome semicontinuity() {
  Outcome o;
  double worst = 0;
  std::size_t scans = 0;
  for (std::uint32_t p : {2u, 3u}) {
    auto R = prime_ring(p, {"x", "y", "z"});
    const std::vector<CoordinatePrime> node_sample{cp(R, {"x"}), cp(R, {"x", "z"}), cp(R, {"x", "y"}),
                                                   cp(R, {"x", "y", "z"})};
    const std::vector<CoordinatePrime> zero_sample{cp(R, {"x"}), cp(R, {"y"}), cp(R, {"x", "y"}), cp(R, {"x", "z"}),
                                                   cp(R, {"x", "y", "z"})};
    for (unsigned e = 1; e <= 2; ++e) {
      const Rational inv_q(1, static_cast<long long>(checked_prime_power(p, e)));
      const std::vector<Rational> thresholds{0, inv_q, Rational(1, 2), Rational(3, 4), 1};
      for (const auto& [I, sample] : {std::pair{ideal(R, {"x*y"}), node_sample}, std::pair{ideal(R, {}), zero_sample}}) {
        const auto scan = timed(worst, [&] { return semicontinuity_scan(I, sample, e, thresholds); });
        for (const auto& t : scan.thresholds)
          o.require(t.above_closed && t.at_least_closed,
                    I.to_string() + " p=" + std::to_string(p) + " e=" + std::to_string(e) + " r=" +
                        to_string(t.threshold));
        ++scans;
      }
    }
  }
  o.require(worst < kScanLimit, "slowest scan took " + fmt_seconds(worst));
  o.detail = std::to_string(scans) + " scans x 5 thresholds closed, slowest " + fmt_seconds(worst) + " < " +
             fmt_seconds(kScanLimit);
  return o;
}

// Corpus examples with user-asserted flags, primes and chains.
struct FlaggedExample {
  std::string name;
  std::string spec;
};

const std::vector<FlaggedExample>& flagged_examples() {
  static const std::vector<FlaggedExample> list{
      {"node in 3-space/F2",
       "char=2; vars=x,y,z; ideal=x*y; equidimensional=true; connected=true;"
       "prime.A=x; prime.B=x,z; prime.C=x,y; prime.M=x,y,z;"
       "chain.up=x | x,z; chain.top=x | x,y,z; chain.node=x,y | x,y,z; chain.long=x | x,y | x,y,z"},
      {"node in 3-space/F3",
       "char=3; vars=x,y,z; ideal=x*y; equidimensional=true; connected=true;"
       "prime.A=x; prime.B=x,z; prime.C=x,y; prime.M=x,y,z; chain.long=x | x,z | x,y,z; chain.node=x,y | x,y,z"},
      {"plane/F3",
       "char=3; vars=x,y; ideal=; equidimensional=true; connected=true;"
       "prime.X=x; prime.Y=y; prime.M=x,y; chain.c=x | x,y; chain.d=y | x,y"},
      {"axes/F3",
       "char=3; vars=x,y,z; ideal=x*y,x*z,y*z; equidimensional=true; connected=true;"
       "prime.XY=x,y; prime.XZ=x,z; prime.YZ=y,z; prime.M=x,y,z; chain.c=x,y | x,y,z; chain.d=y,z | x,y,z"},
      {"cone/F5",
       "char=5; vars=x,y,z; ideal=x*y-z^2; equidimensional=true; connected=true;"
       "prime.P=x,z; prime.Q=y,z; prime.M=x,y,z; chain.c=x,z | x,y,z"},
      {"generic node/F3(t)",
       "char=3; vars=x,y,z; trans=t; ideal=t*x*y; equidimensional=true; connected=true;"
       "prime.A=x; prime.C=x,y; prime.M=x,y,z; chain.c=x | x,y | x,y,z"},
  };
  return list;
}

template <CoefficientField F>
std::vector<CoordinatePrime> sample_of(const RingSpec& spec, const Presentation<F>& pres) {
  std::vector<CoordinatePrime> out;
  for (const auto& [name, vars] : spec.primes) out.push_back(make_coordinate_prime(pres.ring, vars, name));
  return out;
}

Outcome monotonicity() {
  Outcome o;
  std::size_t chains = 0;
  for (const auto& ex : flagged_examples()) {
    const auto spec = parse_ring_spec(ex.spec);
    with_presentation(spec, [&](const auto& pres) {
      for (const auto& [name, subsets] : spec.chains) {
        const auto chain = make_prime_chain(pres.ring, subsets, name);
        for (unsigned e = 1; e <= 2; ++e) {
          const auto m = check_localization_monotonicity(pres.ideal, chain, e, spec.flags);
          bool ok = true;
          for (std::size_t i = 1; i < m.values.size(); ++i) ok = ok && m.values[i - 1].report.s_e >= m.values[i].report.s_e;
          o.require(m.holds && ok, ex.name + " chain " + name + " e=" + std::to_string(e));
          ++chains;
        }
      }
    });
  }
  o.detail = std::to_string(chains) + " (chain, e) pairs monotone";
  return o;
}

Outcome kunz_constancy() {
  Outcome o;
  std::size_t examples = 0;
  for (const auto& ex : flagged_examples()) {
    const auto spec = parse_ring_spec(ex.spec);
    if (!spec.flags.connected || !spec.flags.equidimensional) continue;
    with_presentation(spec, [&](const auto& pres) {
      const auto k = check_kunz_constancy(pres.ideal, sample_of(spec, pres), spec.flags);
      bool constant = true;
      for (int s : k.sums) constant = constant && s == k.sums.front();
      o.require(k.holds && constant, ex.name);
      ++examples;
    });
  }
  o.detail = std::to_string(examples) + " connected equidimensional examples";
  return o;
}

// Full JSON output of the suite's command-level runs.
std::string suite_json() {
  std::ostringstream out;
  for (const auto& entry : corpus()) {
    const auto spec = parse_ring_spec(entry.spec);
    unsigned e_max = 0;
    for (const auto& [e, lambda] : entry.lambda) e_max = std::max(e_max, e);
    out << run_signature(spec, e_max).dump() << "\n";
    if (entry.hypersurface) out << run_gorenstein(spec, std::nullopt, std::nullopt, 1).dump() << "\n";
  }
  for (const auto& ex : flagged_examples()) {
    const auto spec = parse_ring_spec(ex.spec);
    out << run_probe(spec, std::nullopt, {}, 1, {0, Rational(1, 2), 1}).dump() << "\n";
  }
  return out.str();
}

Outcome engine_health() {
  Outcome o;
  std::mt19937_64 rng(0xACCE97);
  std::uniform_int_distribution<int> pick_p(0, 2), pick_gens(1, 3);
  const std::uint32_t primes[] = {2, 3, 7};
  int trials = 0;
  while (trials < kNormalFormTrials) {
    auto R = prime_ring(primes[pick_p(rng)], {"x", "y", "z"});
    std::vector<Polynomial<PF>> gens;
    for (int i = pick_gens(rng); i > 0; --i) gens.push_back(random_poly(R, rng, 3, 3));
    const auto gb = buchberger(IdealPresentation<PF>(R, gens));
    remember(gb);
    for (int k = 0; k < 10; ++k, ++trials) {
      const auto f = random_poly(R, rng, 5, 4);
      const auto nf = normal_form(f, gb);
      o.require(normal_form(nf, gb) == nf, "normal form not idempotent for " + f.to_string());
      o.require(ideal_member(f - nf, gb), "f - NF(f) not in the ideal for " + f.to_string());
    }
  }

  std::size_t certified = 0;
  for (const auto& gb : prime_bases) {
    o.require(is_reduced(gb) && passes_buchberger_certificate(gb), "basis " + gb.to_string());
    ++certified;
  }
  for (const auto& gb : function_bases) {
    o.require(is_reduced(gb) && passes_buchberger_certificate(gb), "basis " + gb.to_string());
    ++certified;
  }

  const std::string first = suite_json();
  const std::string second = suite_json();
  o.require(first == second, "JSON differs between runs");
  o.detail = std::to_string(trials) + " normal forms, " + std::to_string(certified) + " bases certified, " +
             std::to_string(first.size()) + " bytes of JSON identical across two runs";
  return o;
}

}  // namespace

int main(int argc, char** argv) {
  if (argc == 3 && std::string(argv[1]) == "--dump") {
    std::ofstream(argv[2]) << suite_json();
    return 0;
  }
  const std::vector<std::pair<std::string, std::function<Outcome()>>> criteria{
      {"regular anchor", regular_anchor},
      {"node family", node_family},
      {"cusp and power check", cusp_purity},
      {"primal = dual length", matlis_identity},
      {"socle route agreement", gorenstein_agreement},
      {"oracle equivalence", oracle_equivalence},
      {"semicontinuity scan", semicontinuity},
      {"localization monotonicity", monotonicity},
      {"dim + alpha constancy", kunz_constancy},
      {"engine health", engine_health},
  };
  int failures = 0;
  for (std::size_t i = 0; i < criteria.size(); ++i) {
    const auto start = Clock::now();
    Outcome o;
    try {
      o = criteria[i].second();
    } catch (const std::exception& ex) {
      o.pass = false;
      o.problems.push_back(std::string("threw ") + ex.what());
    }
    const double took = seconds_since(start);
    std::cout << (o.pass ? "PASS" : "FAIL") << "  " << (i + 1) << ". " << criteria[i].first;
    if (!o.detail.empty()) std::cout << ": " << o.detail;
    std::cout << " [" << fmt_seconds(took) << "]\n";
    for (const auto& p : o.problems) std::cout << "        " << p << "\n";
    if (!o.pass) ++failures;
  }
  std::cout << (criteria.size() - failures) << "/" << criteria.size() << " criteria passed\n";
  return failures == 0 ? 0 : 1;
}
