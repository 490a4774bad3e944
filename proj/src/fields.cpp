#include "fsplit/fields.hpp"

#include <algorithm>
#include <map>
#include <set>

#include "fsplit/numeric.hpp"

namespace fsplit {

unsigned alpha(const FieldDescriptor& field) { return static_cast<unsigned>(field.transcendentals.size()); }

namespace {

constexpr std::uint32_t kMaxCharacteristic = 1u << 30;

std::uint32_t checked_characteristic(std::uint64_t p) {
  if (p > kMaxCharacteristic || !is_prime(p))
    fail(ErrorKind::NonPrimeCharacteristic, "characteristic " + std::to_string(p) + " is not a supported prime");
  return static_cast<std::uint32_t>(p);
}

std::uint32_t mod_mul(std::uint32_t a, std::uint32_t b, std::uint32_t p) {
  return static_cast<std::uint32_t>(static_cast<std::uint64_t>(a) * b % p);
}

std::uint32_t mod_pow(std::uint32_t a, std::uint64_t n, std::uint32_t p) {
  std::uint32_t r = 1 % p;
  while (n) {
    if (n & 1) r = mod_mul(r, a, p);
    a = mod_mul(a, a, p);
    n >>= 1;
  }
  return r;
}

std::uint32_t mod_inv(std::uint32_t a, std::uint32_t p) {
  if (a % p == 0) fail(ErrorKind::DivisionByZero, "inverse of zero");
  return mod_pow(a, p - 2, p);
}

// Grevlex on exponent vectors: larger total degree wins, ties broken by the
// smaller exponent in the last differing variable.
bool grevlex_greater(const std::vector<std::uint32_t>& a, const std::vector<std::uint32_t>& b) {
  std::uint64_t da = 0, db = 0;
  for (auto v : a) da += v;
  for (auto v : b) db += v;
  if (da != db) return da > db;
  for (std::size_t i = a.size(); i-- > 0;)
    if (a[i] != b[i]) return a[i] < b[i];
  return false;
}

}  // namespace

// ---------------------------------------------------------------------------

PrimeField::PrimeField(std::uint64_t p) : p_(checked_characteristic(p)) {}

Fp PrimeField::from_int(std::int64_t v) const {
  std::int64_t r = v % static_cast<std::int64_t>(p_);
  if (r < 0) r += p_;
  return {static_cast<std::uint32_t>(r)};
}

Fp PrimeField::inv(Fp a) const { return {mod_inv(a.value, p_)}; }

Fp PrimeField::pow(Fp a, std::uint64_t n) const { return {mod_pow(a.value, n, p_)}; }

// ---------------------------------------------------------------------------

FpMPoly FpMPoly::constant(std::uint32_t p, std::size_t nvars, std::uint32_t c) {
  FpMPoly r(p, nvars);
  if (c % p) r.terms_.push_back({std::vector<std::uint32_t>(nvars, 0), c % p});
  return r;
}

FpMPoly FpMPoly::variable(std::uint32_t p, std::size_t nvars, std::size_t index) {
  FpMPoly r(p, nvars);
  std::vector<std::uint32_t> e(nvars, 0);
  e.at(index) = 1;
  r.terms_.push_back({std::move(e), 1});
  return r;
}

FpMPoly FpMPoly::from_terms(std::uint32_t p, std::size_t nvars, std::vector<Term> terms) {
  FpMPoly r(p, nvars);
  r.terms_ = std::move(terms);
  r.canonicalize();
  return r;
}

void FpMPoly::canonicalize() {
  std::sort(terms_.begin(), terms_.end(), [](const Term& a, const Term& b) { return a.exponents > b.exponents; });
  std::vector<Term> out;
  out.reserve(terms_.size());
  for (auto& t : terms_) {
    t.coeff %= p_;
    if (!out.empty() && out.back().exponents == t.exponents) {
      out.back().coeff = (out.back().coeff + t.coeff) % p_;
      if (out.back().coeff == 0) out.pop_back();
    } else if (t.coeff != 0) {
      out.push_back(std::move(t));
    }
  }
  terms_ = std::move(out);
}

void FpMPoly::check_compatible(const FpMPoly& o) const {
  if (p_ != o.p_ || nvars_ != o.nvars_) fail(ErrorKind::FieldMismatch, "rational functions over different fields");
}

bool FpMPoly::is_constant() const {
  if (terms_.empty()) return true;
  if (terms_.size() > 1) return false;
  return std::all_of(terms_[0].exponents.begin(), terms_[0].exponents.end(), [](auto v) { return v == 0; });
}

std::uint32_t FpMPoly::constant_value() const { return terms_.empty() ? 0 : terms_[0].coeff; }

unsigned FpMPoly::degree_in(std::size_t var) const {
  unsigned d = 0;
  for (const auto& t : terms_) d = std::max(d, t.exponents[var]);
  return d;
}

FpMPoly FpMPoly::coefficient_in(std::size_t var, unsigned degree) const {
  FpMPoly r(p_, nvars_);
  for (const auto& t : terms_) {
    if (t.exponents[var] != degree) continue;
    Term c = t;
    c.exponents[var] = 0;
    r.terms_.push_back(std::move(c));
  }
  return r;  // removing one coordinate keeps lex order intact
}

std::uint32_t FpMPoly::grevlex_leading_coeff() const {
  if (terms_.empty()) fail(ErrorKind::DivisionByZero, "leading coefficient of zero");
  const Term* best = &terms_[0];
  for (const auto& t : terms_)
    if (grevlex_greater(t.exponents, best->exponents)) best = &t;
  return best->coeff;
}

FpMPoly FpMPoly::operator+(const FpMPoly& o) const {
  check_compatible(o);
  FpMPoly r(p_, nvars_);
  r.terms_.reserve(terms_.size() + o.terms_.size());
  std::size_t i = 0, j = 0;
  while (i < terms_.size() || j < o.terms_.size()) {
    if (j == o.terms_.size() || (i < terms_.size() && terms_[i].exponents > o.terms_[j].exponents)) {
      r.terms_.push_back(terms_[i++]);
    } else if (i == terms_.size() || o.terms_[j].exponents > terms_[i].exponents) {
      r.terms_.push_back(o.terms_[j++]);
    } else {
      std::uint32_t c = (terms_[i].coeff + o.terms_[j].coeff) % p_;
      if (c) r.terms_.push_back({terms_[i].exponents, c});
      ++i;
      ++j;
    }
  }
  return r;
}

FpMPoly FpMPoly::operator-() const {
  FpMPoly r = *this;
  for (auto& t : r.terms_) t.coeff = p_ - t.coeff;
  return r;
}

FpMPoly FpMPoly::operator-(const FpMPoly& o) const { return *this + (-o); }

FpMPoly FpMPoly::operator*(const FpMPoly& o) const {
  check_compatible(o);
  std::map<std::vector<std::uint32_t>, std::uint32_t, std::greater<>> acc;
  for (const auto& a : terms_) {
    for (const auto& b : o.terms_) {
      std::vector<std::uint32_t> e(nvars_);
      for (std::size_t k = 0; k < nvars_; ++k) e[k] = a.exponents[k] + b.exponents[k];
      auto& c = acc[std::move(e)];
      c = (c + mod_mul(a.coeff, b.coeff, p_)) % p_;
    }
  }
  FpMPoly r(p_, nvars_);
  for (auto& [e, c] : acc)
    if (c) r.terms_.push_back({e, c});
  return r;
}

FpMPoly FpMPoly::scaled(std::uint32_t c) const {
  c %= p_;
  FpMPoly r(p_, nvars_);
  if (c == 0) return r;
  r.terms_ = terms_;
  for (auto& t : r.terms_) t.coeff = mod_mul(t.coeff, c, p_);
  return r;
}

FpMPoly FpMPoly::shifted(std::size_t var, unsigned by) const {
  FpMPoly r = *this;
  for (auto& t : r.terms_) t.exponents[var] += by;
  return r;
}

FpMPoly FpMPoly::frobenius(std::uint64_t q) const {
  FpMPoly r = *this;
  for (auto& t : r.terms_)
    for (auto& v : t.exponents) v = static_cast<std::uint32_t>(v * q);
  return r;
}

FpMPoly FpMPoly::pow(std::uint64_t n) const {
  FpMPoly result = constant(p_, nvars_, 1);
  FpMPoly base = *this;
  while (n) {
    if (n & 1) result = result * base;
    n >>= 1;
    if (n) base = base * base;
  }
  return result;
}

std::optional<FpMPoly> FpMPoly::divide_exact(const FpMPoly& divisor) const {
  check_compatible(divisor);
  if (divisor.is_zero()) fail(ErrorKind::DivisionByZero, "polynomial division by zero");
  FpMPoly rem = *this;
  FpMPoly quot(p_, nvars_);
  const Term& lead = divisor.terms_[0];
  const std::uint32_t lead_inv = mod_inv(lead.coeff, p_);
  while (!rem.is_zero()) {
    const Term& t = rem.terms_[0];
    Term q{std::vector<std::uint32_t>(nvars_), mod_mul(t.coeff, lead_inv, p_)};
    for (std::size_t k = 0; k < nvars_; ++k) {
      if (t.exponents[k] < lead.exponents[k]) return std::nullopt;
      q.exponents[k] = t.exponents[k] - lead.exponents[k];
    }
    FpMPoly mono(p_, nvars_);
    mono.terms_.push_back(q);
    rem = rem - mono * divisor;
    quot = quot + mono;
  }
  return quot;
}

FpMPoly FpMPoly::pseudo_remainder(const FpMPoly& divisor, std::size_t var) const {
  const unsigned db = divisor.degree_in(var);
  const FpMPoly lb = divisor.coefficient_in(var, db);
  FpMPoly r = *this;
  while (!r.is_zero()) {
    const unsigned dr = r.degree_in(var);
    if (dr < db) break;
    FpMPoly lr = r.coefficient_in(var, dr);
    r = lb * r - (lr * divisor).shifted(var, dr - db);
  }
  return r;
}

std::string FpMPoly::to_string(const std::vector<std::string>& names) const {
  if (terms_.empty()) return "0";
  std::string out;
  for (const auto& t : terms_) {
    std::string mono;
    for (std::size_t k = 0; k < nvars_; ++k) {
      if (t.exponents[k] == 0) continue;
      if (!mono.empty()) mono += "*";
      mono += names.at(k);
      if (t.exponents[k] > 1) mono += "^" + std::to_string(t.exponents[k]);
    }
    if (!out.empty()) out += "+";
    if (mono.empty()) out += std::to_string(t.coeff);
    else if (t.coeff == 1) out += mono;
    else out += std::to_string(t.coeff) + "*" + mono;
  }
  return out;
}

namespace {

FpMPoly monic_grevlex(const FpMPoly& f) {
  if (f.is_zero()) return f;
  return f.scaled(mod_inv(f.grevlex_leading_coeff(), f.modulus()));
}

int main_variable(const FpMPoly& a, const FpMPoly& b) {
  for (std::size_t v = a.variable_count(); v-- > 0;)
    if (a.degree_in(v) > 0 || b.degree_in(v) > 0) return static_cast<int>(v);
  return -1;
}

FpMPoly exact_quotient(const FpMPoly& a, const FpMPoly& b) {
  auto q = a.divide_exact(b);
  if (!q) fail(ErrorKind::InternalInconsistency, "inexact division in polynomial gcd");
  return *q;
}

FpMPoly content_in(const FpMPoly& f, std::size_t var) {
  FpMPoly c(f.modulus(), f.variable_count());
  for (unsigned d = 0, top = f.degree_in(var); d <= top; ++d) {
    FpMPoly coeff = f.coefficient_in(var, d);
    if (coeff.is_zero()) continue;
    c = gcd(c, coeff);
    if (c.is_constant()) break;
  }
  return c;
}

}  // namespace

// Recursive primitive-PRS gcd over F_p[t_1..t_m], main variable is the
// highest-index variable present; result is monic under grevlex.
FpMPoly gcd(const FpMPoly& a, const FpMPoly& b) {
  if (a.modulus() != b.modulus() || a.variable_count() != b.variable_count())
    fail(ErrorKind::FieldMismatch, "gcd of polynomials over different fields");
  if (a.is_zero()) return monic_grevlex(b);
  if (b.is_zero()) return monic_grevlex(a);
  const std::uint32_t p = a.modulus();
  const std::size_t n = a.variable_count();
  const int v = main_variable(a, b);
  if (v < 0) return FpMPoly::constant(p, n, 1);
  const auto var = static_cast<std::size_t>(v);
  if (a.degree_in(var) == 0) return gcd(a, content_in(b, var));
  if (b.degree_in(var) == 0) return gcd(content_in(a, var), b);

  const FpMPoly ca = content_in(a, var);
  const FpMPoly cb = content_in(b, var);
  const FpMPoly c = gcd(ca, cb);
  FpMPoly f = exact_quotient(a, ca);
  FpMPoly g = exact_quotient(b, cb);
  if (f.degree_in(var) < g.degree_in(var)) std::swap(f, g);
  while (!g.is_zero()) {
    FpMPoly r = f.pseudo_remainder(g, var);
    f = std::move(g);
    if (r.is_zero()) {
      g = FpMPoly(p, n);
    } else if (r.degree_in(var) == 0) {
      f = FpMPoly::constant(p, n, 1);  // coprime as primitive polynomials
      g = FpMPoly(p, n);
    } else {
      g = exact_quotient(r, content_in(r, var));
    }
  }
  if (f.degree_in(var) > 0) f = exact_quotient(f, content_in(f, var));
  return monic_grevlex(c * f);
}

// ---------------------------------------------------------------------------

FunctionField::FunctionField(std::uint64_t p, std::vector<std::string> transcendentals)
    : p_(checked_characteristic(p)), names_(std::move(transcendentals)) {
  std::set<std::string> seen;
  for (const auto& n : names_)
    if (!seen.insert(n).second) fail(ErrorKind::DuplicateVariable, "duplicate transcendental '" + n + "'");
}

RatFunc FunctionField::zero() const {
  return {FpMPoly(p_, names_.size()), FpMPoly::constant(p_, names_.size(), 1)};
}

RatFunc FunctionField::one() const {
  return {FpMPoly::constant(p_, names_.size(), 1), FpMPoly::constant(p_, names_.size(), 1)};
}

RatFunc FunctionField::from_int(std::int64_t v) const {
  std::int64_t r = v % static_cast<std::int64_t>(p_);
  if (r < 0) r += p_;
  return {FpMPoly::constant(p_, names_.size(), static_cast<std::uint32_t>(r)),
          FpMPoly::constant(p_, names_.size(), 1)};
}

RatFunc FunctionField::transcendental(std::size_t index) const {
  return {FpMPoly::variable(p_, names_.size(), index), FpMPoly::constant(p_, names_.size(), 1)};
}

RatFunc FunctionField::make(FpMPoly num, FpMPoly den) const {
  if (den.is_zero()) fail(ErrorKind::DivisionByZero, "zero denominator");
  if (num.is_zero()) return zero();
  if (!den.is_constant() && !num.is_constant()) {
    FpMPoly g = gcd(num, den);
    if (!g.is_constant()) {
      num = exact_quotient(num, g);
      den = exact_quotient(den, g);
    }
  } else if (!den.is_constant()) {
    // num is a nonzero constant, already coprime
  }
  const std::uint32_t lc_inv = mod_inv(den.grevlex_leading_coeff(), p_);
  return {num.scaled(lc_inv), den.scaled(lc_inv)};
}

void FunctionField::check(const RatFunc& a) const {
  if (a.num.modulus() != p_ || a.num.variable_count() != names_.size())
    fail(ErrorKind::FieldMismatch, "element does not belong to this function field");
}

bool FunctionField::is_one(const RatFunc& a) const {
  return a.den.is_constant() && a.num.is_constant() && a.num.constant_value() == 1;
}

RatFunc FunctionField::add(const RatFunc& a, const RatFunc& b) const {
  check(a);
  check(b);
  if (a.num.is_zero()) return b;
  if (b.num.is_zero()) return a;
  if (a.den == b.den) return make(a.num + b.num, a.den);
  return make(a.num * b.den + b.num * a.den, a.den * b.den);
}

RatFunc FunctionField::neg(const RatFunc& a) const { return {-a.num, a.den}; }

RatFunc FunctionField::sub(const RatFunc& a, const RatFunc& b) const { return add(a, neg(b)); }

RatFunc FunctionField::mul(const RatFunc& a, const RatFunc& b) const {
  check(a);
  check(b);
  if (a.num.is_zero() || b.num.is_zero()) return zero();
  return make(a.num * b.num, a.den * b.den);
}

RatFunc FunctionField::inv(const RatFunc& a) const {
  check(a);
  if (a.num.is_zero()) fail(ErrorKind::DivisionByZero, "inverse of zero");
  return make(a.den, a.num);
}

RatFunc FunctionField::div(const RatFunc& a, const RatFunc& b) const {
  check(b);
  if (b.num.is_zero()) fail(ErrorKind::DivisionByZero, "division by zero");
  return mul(a, inv(b));
}

RatFunc FunctionField::pow(const RatFunc& a, std::uint64_t n) const {
  if (n == 0) return one();
  return {a.num.pow(n), a.den.pow(n)};  // powers of coprime polynomials stay coprime
}

RatFunc FunctionField::frobenius(const RatFunc& a, unsigned e) const {
  const std::uint64_t q = checked_prime_power(p_, e);
  FpMPoly num = a.num.frobenius(q);
  FpMPoly den = a.den.frobenius(q);
  // (lc)^q = lc over F_p, so the grevlex-monic denominator stays monic.
  return {std::move(num), std::move(den)};
}

std::string FunctionField::to_string(const RatFunc& a) const {
  if (a.den.is_constant()) return a.num.to_string(names_);
  auto wrap = [&](const FpMPoly& f) {
    const std::string s = f.to_string(names_);
    return f.terms().size() == 1 ? s : "(" + s + ")";
  };
  return wrap(a.num) + "/" + wrap(a.den);
}

}  // namespace fsplit
