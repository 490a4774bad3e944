#pragma once

// Exponent vectors packed as 16 lanes of 16 bits in four 64-bit words.
// Variable 0 sits in the most significant lane of word 0, so lex comparison is
// plain word comparison. Exponents are kept below 2^15: the spare top bit of
// each lane makes divisibility and overflow checks branch-free.

#include <array>
#include <bit>
#include <cstdint>
#include <functional>
#include <span>
#include <string>
#include <vector>

namespace fsplit {

inline constexpr std::size_t kMaxVariables = 16;
inline constexpr std::uint32_t kMaxExponent = 0x7FFF;

class Monomial {
 public:
  static constexpr std::size_t kWords = kMaxVariables / 4;

  Monomial() = default;
  explicit Monomial(std::span<const std::uint32_t> exponents);

  static Monomial variable(std::size_t index, std::uint32_t exponent = 1);

  std::uint32_t operator[](std::size_t var) const {
    return static_cast<std::uint32_t>((words_[var / 4] >> lane_shift(var)) & 0xFFFF);
  }
  void set(std::size_t var, std::uint32_t exponent);
  std::uint32_t degree() const { return degree_; }
  bool is_one() const { return degree_ == 0; }

  bool divides(const Monomial& other) const {
    for (std::size_t w = 0; w < kWords; ++w)
      if ((((other.words_[w] | kGuard) - words_[w]) & kGuard) != kGuard) return false;
    return true;
  }
  bool coprime(const Monomial& other) const;

  // All of these throw ExponentOverflow instead of wrapping.
  Monomial operator*(const Monomial& other) const;
  Monomial pow(std::uint64_t n) const;
  // Precondition: other divides *this.
  Monomial operator/(const Monomial& other) const;
  Monomial lcm(const Monomial& other) const;

  // Support bitmask: bit i set iff variable i occurs.
  std::uint32_t support() const;
  std::vector<std::uint32_t> exponents(std::size_t nvars) const;
  std::string to_string(const std::vector<std::string>& names) const;

  const std::array<std::uint64_t, kWords>& words() const { return words_; }

  friend bool operator==(const Monomial&, const Monomial&) = default;

 private:
  static constexpr std::uint64_t kGuard = 0x8000800080008000ULL;
  static constexpr unsigned lane_shift(std::size_t var) { return 48 - 16 * static_cast<unsigned>(var % 4); }

  std::array<std::uint64_t, kWords> words_{};
  std::uint32_t degree_ = 0;
};

struct MonomialHash {
  std::size_t operator()(const Monomial& m) const {
    std::uint64_t h = 0x9E3779B97F4A7C15ULL;
    for (auto w : m.words()) h = (h ^ w) * 0x100000001B3ULL + (h >> 29);
    return static_cast<std::size_t>(h);
  }
};

class MonomialOrder {
 public:
  enum class Kind { Lex, Grevlex, BlockElimination };

  static MonomialOrder lex() { return MonomialOrder(Kind::Lex, 0); }
  static MonomialOrder grevlex() { return MonomialOrder(Kind::Grevlex, 0); }
  // Variables whose bit is set in `first_block` form the first block; each
  // block is compared by grevlex.
  static MonomialOrder block_elimination(std::uint32_t first_block) {
    return MonomialOrder(Kind::BlockElimination, first_block);
  }

  Kind kind() const { return kind_; }
  std::uint32_t first_block() const { return first_block_; }

  // <0, 0, >0 like strcmp.
  int compare(const Monomial& a, const Monomial& b) const;
  bool greater(const Monomial& a, const Monomial& b) const { return compare(a, b) > 0; }

  std::string to_string() const;

  friend bool operator==(const MonomialOrder&, const MonomialOrder&) = default;

 private:
  MonomialOrder(Kind kind, std::uint32_t first_block);

  Kind kind_ = Kind::Grevlex;
  std::uint32_t first_block_ = 0;
  std::array<std::uint64_t, Monomial::kWords> block_lanes_{};
};

}  // namespace fsplit
