#include "fsplit/numeric.hpp"

#include <cctype>

#include "fsplit/error.hpp"
#include "fsplit/monomial.hpp"

namespace fsplit {

std::string_view error_kind_name(ErrorKind kind) {
  switch (kind) {
    case ErrorKind::DivisionByZero: return "DivisionByZero";
    case ErrorKind::FieldMismatch: return "FieldMismatch";
    case ErrorKind::RingMismatch: return "RingMismatch";
    case ErrorKind::ExponentOverflow: return "ExponentOverflow";
    case ErrorKind::ZeroDivisorColon: return "ZeroDivisorColon";
    case ErrorKind::NotArtinian: return "NotArtinian";
    case ErrorKind::NotGorenstein: return "NotGorenstein";
    case ErrorKind::NotContaining: return "NotContaining";
    case ErrorKind::NotHomogeneous: return "NotHomogeneous";
    case ErrorKind::MissingFlag: return "MissingFlag";
    case ErrorKind::CostGuardExceeded: return "CostGuardExceeded";
    case ErrorKind::BudgetExceeded: return "BudgetExceeded";
    case ErrorKind::InternalInconsistency: return "InternalInconsistency";
    case ErrorKind::ParseError: return "ParseError";
    case ErrorKind::NonPrimeCharacteristic: return "NonPrimeCharacteristic";
    case ErrorKind::DuplicateVariable: return "DuplicateVariable";
    case ErrorKind::InvalidArgument: return "InvalidArgument";
  }
  return "Unknown";
}

bool is_budget_error(ErrorKind kind) {
  return kind == ErrorKind::CostGuardExceeded || kind == ErrorKind::BudgetExceeded;
}

Rational parse_rational(const std::string& text) {
  auto bad = [&] { fail(ErrorKind::InvalidArgument, "not a rational number: '" + text + "'"); };
  auto parse_int = [&](const std::string& s) {
    std::size_t i = 0;
    if (!s.empty() && (s[0] == '-' || s[0] == '+')) i = 1;
    if (i == s.size()) bad();
    for (std::size_t k = i; k < s.size(); ++k)
      if (!std::isdigit(static_cast<unsigned char>(s[k]))) bad();
    return BigInt(s[0] == '+' ? s.substr(1) : s);
  };
  std::string trimmed;
  for (char c : text)
    if (!std::isspace(static_cast<unsigned char>(c))) trimmed.push_back(c);
  auto slash = trimmed.find('/');
  if (slash == std::string::npos) return Rational(parse_int(trimmed));
  BigInt den = parse_int(trimmed.substr(slash + 1));
  if (den == 0) fail(ErrorKind::DivisionByZero, "zero denominator in '" + text + "'");
  return Rational(parse_int(trimmed.substr(0, slash)), den);
}

std::uint64_t checked_prime_power(std::uint64_t p, unsigned e) {
  std::uint64_t q = 1;
  for (unsigned i = 0; i < e; ++i) {
    q *= p;
    if (q > kMaxExponent)
      fail(ErrorKind::ExponentOverflow,
           "q = " + std::to_string(p) + "^" + std::to_string(e) + " exceeds the exponent width");
  }
  return q;
}

bool is_prime(std::uint64_t n) {
  if (n < 2) return false;
  for (std::uint64_t d = 2; d * d <= n; ++d)
    if (n % d == 0) return false;
  return true;
}

}  // namespace fsplit
