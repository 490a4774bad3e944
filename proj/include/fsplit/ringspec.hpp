#pragma once

// Ring-specification files.
//
//   # comment
//   char  = 5
//   vars  = x, y
//   trans = t                  (optional)
//   ideal = y^2 - x^3, t*x*y   (comma separated; empty for the zero ideal)
//   equidimensional = true     (optional flags, default false)
//   connected = true
//   prime.P = x, y             (named coordinate primes)
//   chain.C = x | x,y          (named chains, strictly increasing)
//   sop   = x                  (system of parameters)
//   socle = y                  (socle hint)
//
// Entries are separated by newlines or ';'. Expressions use + - * / ^,
// parentheses and integer literals, which are reduced mod p. Division is only
// by nonzero constants of the coefficient field.

#include <cstdint>
#include <optional>
#include <string>
#include <utility>
#include <vector>

#include "fsplit/polynomial.hpp"
#include "fsplit/probe.hpp"

namespace fsplit {

struct SourcePos {
  std::size_t line = 1;
  std::size_t column = 1;
};

struct SourceText {
  std::string text;
  SourcePos pos;
};

struct RingSpec {
  std::uint32_t characteristic = 0;
  std::vector<std::string> variables;
  std::vector<std::string> transcendentals;
  std::vector<SourceText> ideal;
  RingFlags flags;
  std::vector<std::pair<std::string, std::vector<std::string>>> primes;
  std::vector<std::pair<std::string, std::vector<std::vector<std::string>>>> chains;
  std::vector<SourceText> sop;
  std::optional<SourceText> socle;

  bool over_function_field() const { return !transcendentals.empty(); }
};

RingSpec parse_ring_spec(const std::string& text);
RingSpec load_ring_spec(const std::string& path);

// Splits "a, b, c" at top-level commas, keeping positions.
std::vector<SourceText> split_list(const SourceText& value, char separator = ',');

// "x | x,z | x,y,z" into variable lists.
std::vector<std::vector<std::string>> parse_prime_list(const std::string& text);

template <CoefficientField F>
Polynomial<F> parse_polynomial(const RingPtr<F>& ring, const SourceText& source);

template <CoefficientField F>
struct Presentation {
  RingPtr<F> ring;
  IdealPresentation<F> ideal;
  std::vector<Polynomial<F>> sop;
  std::optional<Polynomial<F>> socle;
};

template <CoefficientField F>
Presentation<F> build_presentation(const RingSpec& spec);

// Calls fn with the Presentation over F_p or over F_p(t...).
template <class Fn>
decltype(auto) with_presentation(const RingSpec& spec, Fn&& fn) {
  if (spec.over_function_field()) return fn(build_presentation<FunctionField>(spec));
  return fn(build_presentation<PrimeField>(spec));
}

}  // namespace fsplit
