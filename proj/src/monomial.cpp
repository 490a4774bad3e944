#include "fsplit/monomial.hpp"

#include "fsplit/error.hpp"

namespace fsplit {

namespace {

std::uint32_t lane_sum(std::uint64_t w) {
  return static_cast<std::uint32_t>((w & 0xFFFF) + ((w >> 16) & 0xFFFF) + ((w >> 32) & 0xFFFF) + (w >> 48));
}

[[noreturn]] void overflow() {
  fail(ErrorKind::ExponentOverflow, "exponent exceeds " + std::to_string(kMaxExponent));
}

// Equal degrees: the smaller exponent in the last differing variable wins.
int revlex_tiebreak(const std::array<std::uint64_t, Monomial::kWords>& a,
                    const std::array<std::uint64_t, Monomial::kWords>& b) {
  for (std::size_t w = Monomial::kWords; w-- > 0;) {
    const std::uint64_t diff = a[w] ^ b[w];
    if (diff == 0) continue;
    const unsigned shift = static_cast<unsigned>(std::countr_zero(diff)) / 16 * 16;
    const auto ea = (a[w] >> shift) & 0xFFFF;
    const auto eb = (b[w] >> shift) & 0xFFFF;
    return ea < eb ? 1 : -1;
  }
  return 0;
}

// Grevlex on already-masked words.
int grevlex_words(const std::array<std::uint64_t, Monomial::kWords>& a,
                  const std::array<std::uint64_t, Monomial::kWords>& b) {
  std::uint32_t da = 0, db = 0;
  for (std::size_t w = 0; w < Monomial::kWords; ++w) {
    da += lane_sum(a[w]);
    db += lane_sum(b[w]);
  }
  if (da != db) return da > db ? 1 : -1;
  return revlex_tiebreak(a, b);
}

}  // namespace

Monomial::Monomial(std::span<const std::uint32_t> exponents) {
  if (exponents.size() > kMaxVariables) fail(ErrorKind::InvalidArgument, "too many variables");
  for (std::size_t i = 0; i < exponents.size(); ++i) set(i, exponents[i]);
}

Monomial Monomial::variable(std::size_t index, std::uint32_t exponent) {
  Monomial m;
  m.set(index, exponent);
  return m;
}

void Monomial::set(std::size_t var, std::uint32_t exponent) {
  if (var >= kMaxVariables) fail(ErrorKind::InvalidArgument, "variable index out of range");
  if (exponent > kMaxExponent) overflow();
  const std::uint32_t old = (*this)[var];
  const unsigned shift = lane_shift(var);
  words_[var / 4] = (words_[var / 4] & ~(0xFFFFULL << shift)) | (static_cast<std::uint64_t>(exponent) << shift);
  degree_ = degree_ - old + exponent;
}

bool Monomial::coprime(const Monomial& other) const {
  for (std::size_t v = 0; v < kMaxVariables; ++v)
    if ((*this)[v] && other[v]) return false;
  return true;
}

Monomial Monomial::operator*(const Monomial& other) const {
  Monomial r;
  for (std::size_t w = 0; w < kWords; ++w) {
    r.words_[w] = words_[w] + other.words_[w];
    if (r.words_[w] & kGuard) overflow();
  }
  r.degree_ = degree_ + other.degree_;
  return r;
}

Monomial Monomial::pow(std::uint64_t n) const {
  Monomial r;
  for (std::size_t v = 0; v < kMaxVariables; ++v) {
    const std::uint64_t e = static_cast<std::uint64_t>((*this)[v]) * n;
    if (e > kMaxExponent) overflow();
    if (e) r.set(v, static_cast<std::uint32_t>(e));
  }
  return r;
}

Monomial Monomial::operator/(const Monomial& other) const {
  Monomial r;
  for (std::size_t w = 0; w < kWords; ++w) r.words_[w] = words_[w] - other.words_[w];
  r.degree_ = degree_ - other.degree_;
  return r;
}

Monomial Monomial::lcm(const Monomial& other) const {
  Monomial r;
  for (std::size_t v = 0; v < kMaxVariables; ++v) {
    const std::uint32_t e = std::max((*this)[v], other[v]);
    if (e) r.set(v, e);
  }
  return r;
}

std::uint32_t Monomial::support() const {
  std::uint32_t mask = 0;
  for (std::size_t v = 0; v < kMaxVariables; ++v)
    if ((*this)[v]) mask |= 1u << v;
  return mask;
}

std::vector<std::uint32_t> Monomial::exponents(std::size_t nvars) const {
  std::vector<std::uint32_t> out(nvars);
  for (std::size_t v = 0; v < nvars; ++v) out[v] = (*this)[v];
  return out;
}

std::string Monomial::to_string(const std::vector<std::string>& names) const {
  std::string out;
  for (std::size_t v = 0; v < names.size(); ++v) {
    const auto e = (*this)[v];
    if (!e) continue;
    if (!out.empty()) out += "*";
    out += names[v];
    if (e > 1) out += "^" + std::to_string(e);
  }
  return out.empty() ? "1" : out;
}

// ---------------------------------------------------------------------------

MonomialOrder::MonomialOrder(Kind kind, std::uint32_t first_block) : kind_(kind), first_block_(first_block) {
  for (std::size_t v = 0; v < kMaxVariables; ++v)
    if (first_block & (1u << v)) block_lanes_[v / 4] |= 0xFFFFULL << (48 - 16 * (v % 4));
}

int MonomialOrder::compare(const Monomial& a, const Monomial& b) const {
  switch (kind_) {
    case Kind::Lex:
      for (std::size_t w = 0; w < Monomial::kWords; ++w)
        if (a.words()[w] != b.words()[w]) return a.words()[w] > b.words()[w] ? 1 : -1;
      return 0;
    case Kind::Grevlex: {
      if (a.degree() != b.degree()) return a.degree() > b.degree() ? 1 : -1;
      return revlex_tiebreak(a.words(), b.words());
    }
    case Kind::BlockElimination: {
      std::array<std::uint64_t, Monomial::kWords> a1{}, b1{}, a2{}, b2{};
      for (std::size_t w = 0; w < Monomial::kWords; ++w) {
        a1[w] = a.words()[w] & block_lanes_[w];
        b1[w] = b.words()[w] & block_lanes_[w];
        a2[w] = a.words()[w] & ~block_lanes_[w];
        b2[w] = b.words()[w] & ~block_lanes_[w];
      }
      if (int c = grevlex_words(a1, b1)) return c;
      return grevlex_words(a2, b2);
    }
  }
  return 0;
}

std::string MonomialOrder::to_string() const {
  switch (kind_) {
    case Kind::Lex: return "lex";
    case Kind::Grevlex: return "grevlex";
    case Kind::BlockElimination: return "block(" + std::to_string(first_block_) + ")";
  }
  return "?";
}

}  // namespace fsplit
