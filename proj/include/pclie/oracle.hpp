#ifndef PCLIE_ORACLE_HPP
#define PCLIE_ORACLE_HPP

#include <algorithm>
#include <array>
#include <cstddef>
#include <cstdint>
#include <sstream>
#include <string>
#include <vector>

#include "pclie/analysis.hpp"
#include "pclie/error.hpp"
#include "pclie/graph.hpp"
#include "pclie/nilpotent.hpp"
#include "pclie/structure.hpp"

namespace pclie {

struct OracleOptions {
  /// Largest dimension of N_m over GF(p) that is enumerated exhaustively.
  std::size_t dimension_cap = 8;
};

struct OracleResult {
  bool found = false;
  std::size_t dimension = 0;
  std::uint32_t prime = 2;
  int degree = 2;
  std::vector<Word> basis;
  /// Reduced row-echelon bases of the two summands when found.
  std::vector<std::vector<std::uint32_t>> l1;
  std::vector<std::vector<std::uint32_t>> l2;
  std::size_t subspaces_enumerated = 0;
  std::size_t closed_subspaces = 0;
  std::size_t ideals = 0;
  std::size_t pairs_tested = 0;
};

namespace oracle_detail {

inline constexpr std::size_t kMaxDim = 16;

using FpVec = std::array<std::uint32_t, kMaxDim>;

struct FpSpace {
  std::size_t dim = 0;
  std::array<FpVec, kMaxDim> rows{};
  std::array<std::size_t, kMaxDim> pivots{};
};

/// Dense GF(p) image of a structure table.
class FpAlgebra {
 public:
  FpAlgebra(const StructureTable& tbl, std::uint32_t p) : d_(tbl.dim()), p_(p) {
    consts_.assign(d_ * d_, FpVec{});
    for (std::size_t i = 0; i < d_; ++i) {
      for (std::size_t j = 0; j < d_; ++j) {
        for (const auto& [k, c] : tbl.bracket_basis(i, j)) consts_[i * d_ + j][k] = c.residue();
      }
    }
  }

  std::size_t dim() const { return d_; }
  std::uint32_t prime() const { return p_; }

  FpVec bracket(const FpVec& x, const FpVec& y) const {
    FpVec out{};
    for (std::size_t i = 0; i < d_; ++i) {
      if (!x[i]) continue;
      for (std::size_t j = 0; j < d_; ++j) {
        if (!y[j]) continue;
        const std::uint32_t c = x[i] * y[j] % p_;
        const FpVec& s = consts_[i * d_ + j];
        for (std::size_t k = 0; k < d_; ++k) out[k] = (out[k] + c * s[k]) % p_;
      }
    }
    return out;
  }

  FpVec reduce(FpVec v, const FpSpace& s) const {
    for (std::size_t r = 0; r < s.dim; ++r) {
      const std::uint32_t c = v[s.pivots[r]];
      if (!c) continue;
      for (std::size_t k = 0; k < d_; ++k) v[k] = (v[k] + (p_ - c) * s.rows[r][k]) % p_;
    }
    return v;
  }

  bool is_zero(const FpVec& v) const {
    for (std::size_t k = 0; k < d_; ++k) {
      if (v[k]) return false;
    }
    return true;
  }

  bool contains(const FpSpace& s, const FpVec& v) const { return is_zero(reduce(v, s)); }

  bool closed(const FpSpace& s) const {
    for (std::size_t i = 0; i < s.dim; ++i) {
      for (std::size_t j = i + 1; j < s.dim; ++j) {
        if (!contains(s, bracket(s.rows[i], s.rows[j]))) return false;
      }
    }
    return true;
  }

  bool ideal(const FpSpace& s) const {
    for (std::size_t i = 0; i < s.dim; ++i) {
      for (std::size_t k = 0; k < d_; ++k) {
        FpVec e{};
        e[k] = 1;
        if (!contains(s, bracket(s.rows[i], e))) return false;
      }
    }
    return true;
  }

  bool annihilate(const FpSpace& a, const FpSpace& b) const {
    for (std::size_t i = 0; i < a.dim; ++i) {
      for (std::size_t j = 0; j < b.dim; ++j) {
        if (!is_zero(bracket(a.rows[i], b.rows[j]))) return false;
      }
    }
    return true;
  }

  /// a + b has dimension dim a + dim b.
  bool independent(const FpSpace& a, const FpSpace& b) const {
    FpSpace acc = a;
    for (std::size_t j = 0; j < b.dim; ++j) {
      FpVec v = reduce(b.rows[j], acc);
      std::size_t piv = 0;
      while (piv < d_ && !v[piv]) ++piv;
      if (piv == d_) return false;
      const std::uint32_t inv = inverse(v[piv]);
      for (std::size_t k = 0; k < d_; ++k) v[k] = v[k] * inv % p_;
      for (std::size_t r = 0; r < acc.dim; ++r) {
        const std::uint32_t c = acc.rows[r][piv];
        if (!c) continue;
        for (std::size_t k = 0; k < d_; ++k) acc.rows[r][k] = (acc.rows[r][k] + (p_ - c) * v[k]) % p_;
      }
      acc.rows[acc.dim] = v;
      acc.pivots[acc.dim] = piv;
      ++acc.dim;
    }
    return true;
  }

 private:
  std::uint32_t inverse(std::uint32_t a) const {
    std::uint32_t r = 1;
    std::uint32_t base = a;
    for (std::uint32_t e = p_ - 2; e; e >>= 1) {
      if (e & 1u) r = r * base % p_;
      base = base * base % p_;
    }
    return r;
  }

  std::size_t d_;
  std::uint32_t p_;
  std::vector<FpVec> consts_;
};

/// Calls visit(space) for every k-dimensional subspace of GF(p)^d in reduced
/// row-echelon form. Pivot sets run in descending lexicographic order; within
/// a pivot set the free entries count upward, first free entry fastest.
template <class Visit>
void for_each_subspace(std::size_t d, std::size_t k, std::uint32_t p, Visit&& visit) {
  std::vector<std::vector<std::size_t>> pivot_sets;
  std::vector<std::size_t> cur;
  auto rec = [&](auto&& self, std::size_t start) -> void {
    if (cur.size() == k) {
      pivot_sets.push_back(cur);
      return;
    }
    for (std::size_t c = start; c < d; ++c) {
      cur.push_back(c);
      self(self, c + 1);
      cur.pop_back();
    }
  };
  rec(rec, 0);
  std::reverse(pivot_sets.begin(), pivot_sets.end());
  for (const auto& piv : pivot_sets) {
    std::vector<bool> is_pivot(d, false);
    for (auto c : piv) is_pivot[c] = true;
    std::vector<std::pair<std::size_t, std::size_t>> free;  // (row, column)
    for (std::size_t r = 0; r < k; ++r) {
      for (std::size_t c = piv[r] + 1; c < d; ++c) {
        if (!is_pivot[c]) free.emplace_back(r, c);
      }
    }
    std::vector<std::uint32_t> digits(free.size(), 0);
    for (;;) {
      FpSpace s;
      s.dim = k;
      for (std::size_t r = 0; r < k; ++r) {
        s.rows[r] = FpVec{};
        s.rows[r][piv[r]] = 1;
        s.pivots[r] = piv[r];
      }
      for (std::size_t f = 0; f < free.size(); ++f) s.rows[free[f].first][free[f].second] = digits[f];
      visit(s);
      std::size_t pos = 0;
      while (pos < digits.size() && ++digits[pos] == p) digits[pos++] = 0;
      if (pos == digits.size()) break;
    }
  }
}

}  // namespace oracle_detail

/// Exhaustive search for L = L1 + L2 with [L1, L2] = 0, L1 and L2 nonzero
/// subalgebras meeting trivially, in N_m(A;G) over GF(p). First every
/// bracket-closed proper subspace is collected; then pairs of complementary
/// dimension are tested, smaller summand first. A summand of such a split is an
/// ideal, which prunes the pair stage.
inline OracleResult search_decomposition(const Graph& g, int m, std::uint32_t p, const OracleOptions& opts = {}) {
  using namespace oracle_detail;
  const FieldTag field = FieldTag::prime(p);
  detail::require(p < 256, "oracle supports primes below 256");
  const StructureTable tbl = build_structure(g, m, field);
  OracleResult res;
  res.dimension = tbl.dim();
  res.prime = p;
  res.degree = m;
  for (const auto& b : tbl.basis()) res.basis.push_back(b.word);
  if (tbl.dim() > opts.dimension_cap || tbl.dim() > kMaxDim) {
    throw CapExceeded("oracle dimension " + std::to_string(tbl.dim()) + " exceeds the cap of " +
                      std::to_string(std::min(opts.dimension_cap, kMaxDim)) + "; lower m or the vertex count");
  }
  const std::size_t d = tbl.dim();
  const FpAlgebra alg(tbl, p);

  std::vector<std::vector<FpSpace>> closed(d + 1);
  for (std::size_t k = 1; k < d; ++k) {
    for_each_subspace(d, k, p, [&](const FpSpace& s) {
      ++res.subspaces_enumerated;
      if (alg.closed(s)) closed[k].push_back(s);
    });
    res.closed_subspaces += closed[k].size();
  }

  std::vector<std::vector<bool>> is_ideal(d + 1);
  for (std::size_t k = 1; k < d; ++k) {
    for (const auto& s : closed[k]) {
      is_ideal[k].push_back(alg.ideal(s));
      if (is_ideal[k].back()) ++res.ideals;
    }
  }

  auto export_rows = [&](const FpSpace& s) {
    std::vector<std::vector<std::uint32_t>> rows;
    for (std::size_t r = 0; r < s.dim; ++r) rows.emplace_back(s.rows[r].begin(), s.rows[r].begin() + static_cast<std::ptrdiff_t>(d));
    return rows;
  };

  for (std::size_t k = 1; 2 * k <= d; ++k) {
    for (std::size_t a = 0; a < closed[k].size(); ++a) {
      if (!is_ideal[k][a]) continue;
      const FpSpace& l1 = closed[k][a];
      for (std::size_t b = 0; b < closed[d - k].size(); ++b) {
        if (!is_ideal[d - k][b]) continue;
        const FpSpace& l2 = closed[d - k][b];
        ++res.pairs_tested;
        if (alg.annihilate(l1, l2) && alg.independent(l1, l2)) {
          res.found = true;
          res.l1 = export_rows(l1);
          res.l2 = export_rows(l2);
          return res;
        }
      }
    }
  }
  return res;
}

/// Renders a GF(p) coordinate row over the oracle basis, e.g. `1*a1 + 2*[a2,a1]`.
inline std::string format_fp_row(const std::vector<std::uint32_t>& row, const std::vector<Word>& basis) {
  std::string s;
  for (std::size_t k = 0; k < row.size(); ++k) {
    if (!row[k]) continue;
    if (!s.empty()) s += " + ";
    s += std::to_string(row[k]) + "*" + basis[k].to_string();
  }
  return s.empty() ? "0" : s;
}

}  // namespace pclie

#endif  // PCLIE_ORACLE_HPP
