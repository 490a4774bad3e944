#include "fsplit/oracle.hpp"

#include <algorithm>
#include <functional>
#include <map>
#include <unordered_map>

namespace fsplit::oracle {

namespace {

using Exponents = std::vector<std::uint32_t>;
using RawPoly = std::map<Exponents, std::uint32_t>;
using Row = std::vector<std::pair<std::uint64_t, std::uint32_t>>;  // sorted by column

std::uint32_t mulmod(std::uint32_t a, std::uint32_t b, std::uint32_t p) {
  return static_cast<std::uint32_t>(static_cast<std::uint64_t>(a) * b % p);
}

std::uint32_t inverse(std::uint32_t a, std::uint32_t p) {
  std::uint32_t r = 1, base = a % p;
  for (std::uint32_t n = p - 2; n; n >>= 1) {
    if (n & 1) r = mulmod(r, base, p);
    base = mulmod(base, base, p);
  }
  return r;
}

RawPoly to_raw(const Polynomial<PrimeField>& f) {
  RawPoly out;
  const std::size_t n = f.ring()->variable_count();
  for (const auto& t : f.terms()) out[t.monomial.exponents(n)] = t.coeff.value;
  return out;
}

RawPoly multiply(const RawPoly& a, const RawPoly& b, std::uint32_t p) {
  RawPoly out;
  for (const auto& [ea, ca] : a)
    for (const auto& [eb, cb] : b) {
      Exponents e(ea.size());
      for (std::size_t i = 0; i < e.size(); ++i) e[i] = ea[i] + eb[i];
      auto& c = out[e];
      c = (c + mulmod(ca, cb, p)) % p;
    }
  std::erase_if(out, [](const auto& kv) { return kv.second == 0; });
  return out;
}

RawPoly shift(const RawPoly& f, const Exponents& m) {
  RawPoly out;
  for (const auto& [e, c] : f) {
    Exponents s(e.size());
    for (std::size_t i = 0; i < s.size(); ++i) s[i] = e[i] + m[i];
    out.emplace(std::move(s), c);
  }
  return out;
}

// Repeated multiplication on purpose: no Frobenius shortcut.
RawPoly power(const RawPoly& f, std::uint64_t n, std::size_t nvars, std::uint32_t p) {
  RawPoly result{{Exponents(nvars, 0), 1 % p}};
  for (std::uint64_t i = 0; i < n; ++i) result = multiply(result, f, p);
  return result;
}

std::uint64_t ipow(std::uint64_t b, std::size_t n) {
  std::uint64_t r = 1;
  for (std::size_t i = 0; i < n; ++i) r *= b;
  return r;
}

std::uint32_t degree_of(const Exponents& e) {
  std::uint32_t d = 0;
  for (auto v : e) d += v;
  return d;
}

// Row echelon form over F_p, one pivot row per leading column, rows added in
// arrival order.
class SparseEchelon {
 public:
  SparseEchelon(std::uint32_t p, std::uint64_t* stored, std::uint64_t budget)
      : p_(p), stored_(stored), budget_(budget) {}

  // Zeroes every pivot column of row; the result is a canonical
  // representative of row modulo the span.
  Row reduce(Row row) const {
    std::size_t i = 0;
    while (i < row.size()) {
      auto it = pivots_.find(row[i].first);
      if (it == pivots_.end()) {
        ++i;
        continue;
      }
      row = axpy(row, it->second, p_ - row[i].second);
    }
    return row;
  }

  // Returns true when row is independent of the rows seen so far.
  bool insert(Row row) {
    row = reduce(std::move(row));
    if (row.empty()) return false;
    const std::uint32_t inv = inverse(row.front().second, p_);
    for (auto& entry : row) entry.second = mulmod(entry.second, inv, p_);
    *stored_ += row.size();
    own_ += row.size();
    if (*stored_ > budget_)
      fail(ErrorKind::BudgetExceeded, "oracle elimination stored more than " + std::to_string(budget_) + " entries");
    pivots_.emplace(row.front().first, std::move(row));
    return true;
  }

  std::size_t rank() const { return pivots_.size(); }

  // Gives the entries back to the shared count.
  void release() {
    *stored_ -= own_;
    own_ = 0;
    pivots_.clear();
  }

 private:
  // row + scale * pivot
  Row axpy(const Row& row, const Row& pivot, std::uint32_t scale) const {
    Row out;
    out.reserve(row.size() + pivot.size());
    std::size_t i = 0, j = 0;
    while (i < row.size() || j < pivot.size()) {
      if (j == pivot.size() || (i < row.size() && row[i].first < pivot[j].first)) {
        out.push_back(row[i++]);
      } else if (i == row.size() || pivot[j].first < row[i].first) {
        out.emplace_back(pivot[j].first, mulmod(pivot[j].second, scale, p_));
        ++j;
      } else {
        const std::uint32_t v = (row[i].second + mulmod(pivot[j].second, scale, p_)) % p_;
        if (v) out.emplace_back(row[i].first, v);
        ++i;
        ++j;
      }
    }
    return out;
  }

  std::uint32_t p_;
  std::uint64_t* stored_;
  std::uint64_t budget_;
  std::uint64_t own_ = 0;
  std::unordered_map<std::uint64_t, Row> pivots_;
};

void for_each_box_monomial(std::size_t nvars, std::uint64_t q, const std::function<void(const Exponents&)>& visit) {
  Exponents e(nvars, 0);
  while (true) {
    visit(e);
    std::size_t i = 0;
    while (i < nvars && ++e[i] == q) e[i++] = 0;
    if (i == nvars) return;
  }
}

std::uint64_t box_index(const Exponents& e, std::uint64_t q) {
  std::uint64_t idx = 0;
  for (std::size_t i = e.size(); i-- > 0;) idx = idx * q + e[i];
  return idx;
}

std::vector<Exponents> monomials_of_degree(std::size_t nvars, std::uint32_t degree) {
  std::vector<Exponents> out;
  if (nvars == 0) {
    if (degree == 0) out.emplace_back();
    return out;
  }
  Exponents e(nvars, 0);
  auto rec = [&](auto&& self, std::size_t var, std::uint32_t left) -> void {
    if (var + 1 == nvars) {
      e[var] = left;
      out.push_back(e);
      return;
    }
    for (std::uint32_t k = 0; k <= left; ++k) {
      e[var] = k;
      self(self, var + 1, left - k);
    }
  };
  rec(rec, 0, degree);
  return out;
}

// Graded pieces of S and of the ideal generated by gens_, with monomials of
// each degree numbered in a fixed order.
class GradedPieces {
 public:
  GradedPieces(std::size_t nvars, std::uint32_t p, std::vector<RawPoly> gens, std::uint64_t* stored,
               std::uint64_t budget)
      : nvars_(nvars), p_(p), gens_(std::move(gens)), stored_(stored), budget_(budget) {}

  const std::vector<Exponents>& basis(std::uint32_t degree) {
    auto it = monomials_.find(degree);
    if (it == monomials_.end()) {
      it = monomials_.emplace(degree, monomials_of_degree(nvars_, degree)).first;
      auto& index = index_[degree];
      for (std::size_t i = 0; i < it->second.size(); ++i) index[it->second[i]] = i;
    }
    return it->second;
  }

  Row vectorize(const RawPoly& f, std::uint32_t degree) {
    basis(degree);
    const auto& index = index_.at(degree);
    Row row;
    for (const auto& [e, c] : f) row.emplace_back(index.at(e), c);
    std::sort(row.begin(), row.end());
    return row;
  }

  const SparseEchelon& ideal_piece(std::uint32_t degree) {
    auto it = pieces_.find(degree);
    if (it != pieces_.end()) return it->second;
    SparseEchelon ech(p_, stored_, budget_);
    for (const auto& g : gens_) {
      const std::uint32_t gd = degree_of(g.begin()->first);
      if (gd > degree) continue;
      for (const auto& m : monomials_of_degree(nvars_, degree - gd)) ech.insert(vectorize(shift(g, m), degree));
    }
    return pieces_.emplace(degree, std::move(ech)).first->second;
  }

  void release_below(std::uint32_t degree) {
    while (!pieces_.empty() && pieces_.begin()->first < degree) {
      pieces_.begin()->second.release();
      pieces_.erase(pieces_.begin());
    }
  }

 private:
  std::size_t nvars_;
  std::uint32_t p_;
  std::vector<RawPoly> gens_;
  std::uint64_t* stored_;
  std::uint64_t budget_;
  std::map<std::uint32_t, std::vector<Exponents>> monomials_;
  std::map<std::uint32_t, std::map<Exponents, std::size_t>> index_;
  std::map<std::uint32_t, SparseEchelon> pieces_;
};

}  // namespace

BigInt length_mod_bracket(const RingPtr<PrimeField>& ring, const std::vector<Polynomial<PrimeField>>& gens,
                          unsigned e, std::uint64_t budget) {
  const std::uint32_t p = ring->field().characteristic();
  const std::size_t n = ring->variable_count();
  const std::uint64_t q = checked_prime_power(p, e);
  const std::uint64_t box = ipow(q, n);
  if (box > budget) fail(ErrorKind::BudgetExceeded, "q^n = " + std::to_string(box) + " exceeds the oracle budget");

  std::uint64_t stored = 0;
  SparseEchelon echelon(p, &stored, budget * 8);
  for (const auto& g : gens) {
    if (g.ring() != ring && !(*g.ring() == *ring)) fail(ErrorKind::RingMismatch, "generator from another ring");
    const RawPoly raw = to_raw(g);
    if (raw.empty()) continue;
    for_each_box_monomial(n, q, [&](const Exponents& m) {
      Row row;
      for (const auto& [te, c] : raw) {
        Exponents prod(n);
        bool survives = true;
        for (std::size_t i = 0; i < n; ++i) {
          prod[i] = te[i] + m[i];
          survives = survives && prod[i] < q;
        }
        if (survives) row.emplace_back(box_index(prod, q), c);
      }
      std::sort(row.begin(), row.end());
      echelon.insert(std::move(row));
    });
  }
  return BigInt(box - echelon.rank());
}

BigInt dual_splitting_length(const IdealPresentation<PrimeField>& I, unsigned e, std::uint64_t budget) {
  const auto& ring = I.ring();
  const std::uint32_t p = ring->field().characteristic();
  const std::size_t n = ring->variable_count();
  const std::uint64_t q = checked_prime_power(p, e);
  if (!I.is_homogeneous()) fail(ErrorKind::NotHomogeneous, "oracle needs a homogeneous ideal");

  std::vector<RawPoly> gens;
  for (const auto& g : I.generators())
    if (!g.is_zero()) gens.push_back(to_raw(g));
  if (gens.empty()) return BigInt(ipow(q, n));
  for (const auto& g : gens)
    if (degree_of(g.begin()->first) == 0) fail(ErrorKind::NotContaining, "generator is a unit");

  std::vector<RawPoly> bracket;
  for (const auto& g : gens) bracket.push_back(power(g, q, n, p));
  std::uint64_t stored = 0;
  GradedPieces pieces(n, p, bracket, &stored, budget);

  std::uint64_t total = 0;
  const std::uint32_t top = static_cast<std::uint32_t>(n * (q - 1));
  for (std::uint32_t d = 0; d <= top; ++d) {
    const std::vector<Exponents> domain = pieces.basis(d);
    // Columns: the reduced products m*g_i side by side, then one column per
    // monomial m of degree d recording the combination.
    std::vector<std::uint64_t> offsets;
    std::uint64_t width = 0;
    for (const auto& g : gens) {
      offsets.push_back(width);
      width += pieces.basis(d + degree_of(g.begin()->first)).size();
    }
    SparseEchelon phi(p, &stored, budget);
    SparseEchelon image(p, &stored, budget);
    for (std::size_t r = 0; r < domain.size(); ++r) {
      Row row;
      for (std::size_t i = 0; i < gens.size(); ++i) {
        const std::uint32_t target = d + degree_of(gens[i].begin()->first);
        Row v = pieces.ideal_piece(target).reduce(pieces.vectorize(shift(gens[i], domain[r]), target));
        for (const auto& [col, c] : v) row.emplace_back(col + offsets[i], c);
      }
      row.emplace_back(width + r, 1);
      row = phi.reduce(std::move(row));
      if (row.front().first < width) {
        phi.insert(std::move(row));
        continue;
      }
      // A kernel element of degree d; keep its monomials inside the box.
      Row truncated;
      for (const auto& [col, c] : row) {
        const auto& m = domain[col - width];
        if (std::all_of(m.begin(), m.end(), [&](auto v) { return v < q; })) truncated.emplace_back(col - width, c);
      }
      if (image.insert(std::move(truncated))) ++total;
    }
    phi.release();
    image.release();
    pieces.release_below(d + 1);
  }
  return BigInt(total);
}

bool power_in_bracket(const Polynomial<PrimeField>& f, unsigned e) {
  const std::uint32_t p = f.ring()->field().characteristic();
  const std::size_t n = f.ring()->variable_count();
  const std::uint64_t q = checked_prime_power(p, e);
  const RawPoly g = power(to_raw(f), q - 1, n, p);
  return std::all_of(g.begin(), g.end(), [&](const auto& kv) {
    return std::any_of(kv.first.begin(), kv.first.end(), [&](auto v) { return v >= q; });
  });
}

}  // namespace fsplit::oracle
