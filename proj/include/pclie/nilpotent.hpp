#ifndef PCLIE_NILPOTENT_HPP
#define PCLIE_NILPOTENT_HPP

#include <algorithm>
#include <cstddef>
#include <map>
#include <memory>
#include <set>
#include <string>
#include <utility>
#include <vector>

#include "pclie/error.hpp"
#include "pclie/free_lie.hpp"
#include "pclie/graph.hpp"
#include "pclie/linalg.hpp"
#include "pclie/metabelian.hpp"
#include "pclie/structure.hpp"
#include "pclie/term.hpp"

namespace pclie {

struct BuildOptions {
  /// Refuse to build when the free-algebra dimension bound exceeds this.
  std::size_t dimension_cap = 20000;
};

/// Dimension of the degree-d component of the free Lie algebra on n generators:
/// (1/d) sum_{e | d} mu(d/e) n^e.
inline std::size_t witt_dimension(int n, int d) {
  auto mobius = [](int k) {
    int result = 1;
    for (int p = 2; p * p <= k; ++p) {
      if (k % p) continue;
      k /= p;
      if (k % p == 0) return 0;
      result = -result;
    }
    if (k > 1) result = -result;
    return result;
  };
  mpz_class sum = 0;
  for (int e = 1; e <= d; ++e) {
    if (d % e) continue;
    mpz_class pw;
    mpz_ui_pow_ui(pw.get_mpz_t(), static_cast<unsigned long>(n), static_cast<unsigned long>(e));
    sum += mobius(d / e) * pw;
  }
  sum /= d;
  return sum.fits_ulong_p() ? static_cast<std::size_t>(sum.get_ui()) : static_cast<std::size_t>(-1);
}

namespace nilpotent_detail {

struct Component {
  std::shared_ptr<const free_lie::LyndonComponent> free;
  std::vector<AssocPoly> relations;  // independent generators of the relation part, associative form
  std::vector<Word> chosen;          // quotient basis words
  std::vector<Vector> inverse;       // inverse of [relation coords; chosen coords]
};

}  // namespace nilpotent_detail

/// N_m(A;G): the free Lie algebra on a_1..a_n modulo [a_i,a_j] for edges {i,j}
/// and all brackets of length > m.
///
/// Each multidegree component of the free algebra is coordinatised by Lyndon
/// words. The relation part at multidegree d is spanned by [r, a_k] for r in the
/// relation part at d - e_k, seeded by the edge commutators in degree 2. The
/// quotient basis is picked greedily among left-normed words: the metabelian
/// basis words first (they are always independent, since M(A;G) is a quotient
/// of L(A;G)), then all left-normed words in lexicographic order.
inline StructureTable build_structure(const Graph& g, int m, FieldTag field = FieldTag::rationals(),
                                      const BuildOptions& opts = {},
                                      Variety label = Variety{VarietyKind::nilpotent, 0}) {
  using nilpotent_detail::Component;
  detail::require(m >= 2, "nilpotency degree must be at least 2");
  const int n = g.vertex_count();
  std::size_t bound = 0;
  for (int d = 1; d <= m; ++d) {
    const std::size_t w = witt_dimension(n, d);
    bound = (w > opts.dimension_cap || bound + w > opts.dimension_cap) ? opts.dimension_cap + 1 : bound + w;
  }
  if (bound > opts.dimension_cap) {
    throw CapExceeded("predicted dimension of degree " + std::to_string(m) + " truncation on " + std::to_string(n) +
                      " generators exceeds the cap of " + std::to_string(opts.dimension_cap));
  }
  if (label.degree == 0) label.degree = m;

  std::map<MultiDegree, Component> comps;
  std::vector<BasisElement> basis;
  for (int i = 1; i <= n; ++i) basis.push_back({Word{i}, MultiDegree::unit(n, i), 1});

  for (int d = 2; d <= m; ++d) {
    for (const auto& md : multidegrees_of_length(n, d)) {
      Component comp;
      comp.free = free_lie::lyndon_component(md, field);
      const std::size_t fdim = comp.free->dim();
      if (fdim == 0) continue;
      Subspace span(fdim, field);
      std::vector<Vector> rows;
      auto add_relation = [&](AssocPoly q) {
        Vector v = comp.free->coordinates(q);
        if (span.insert(v)) {
          rows.push_back(std::move(v));
          comp.relations.push_back(std::move(q));
        }
      };
      if (d == 2) {
        const auto s = md.support();
        if (s.size() == 2 && g.adjacent(s.front(), s.back())) {
          add_relation(free_lie::commutator(free_lie::letter(s.front(), field), free_lie::letter(s.back(), field)));
        }
      } else {
        for (int k = 1; k <= n; ++k) {
          if (md[k] == 0) continue;
          MultiDegree prev = md;
          --prev.counts[static_cast<std::size_t>(k - 1)];
          auto it = comps.find(prev);
          if (it == comps.end()) continue;
          for (const auto& r : it->second.relations) add_relation(free_lie::commutator(r, free_lie::letter(k, field)));
        }
      }
      const std::size_t quotient_dim = fdim - comp.relations.size();
      if (quotient_dim > 0) {
        std::vector<Word> candidates = metabelian_basis(g, md);
        std::set<Word> seen(candidates.begin(), candidates.end());
        for (auto& w : free_lie::words_of_multidegree(md)) {
          Word cand(std::move(w));
          if (cand.letters[0] != cand.letters[1] && seen.insert(cand).second) candidates.push_back(std::move(cand));
        }
        for (const auto& cand : candidates) {
          if (comp.chosen.size() == quotient_dim) break;
          Vector v = comp.free->coordinates(free_lie::expand_left_normed(cand, field));
          if (span.insert(v)) {
            rows.push_back(std::move(v));
            comp.chosen.push_back(cand);
          }
        }
        detail::ensure(comp.chosen.size() == quotient_dim, "left-normed words fail to span multidegree " + md.to_string());
        auto inv = inverse(rows, field);
        detail::ensure(inv.has_value(), "singular change of basis in multidegree " + md.to_string());
        comp.inverse = std::move(*inv);
        for (const auto& w : comp.chosen) basis.push_back({w, md, d});
      }
      comps.emplace(md, std::move(comp));
    }
  }

  std::sort(basis.begin(), basis.end(), [](const auto& a, const auto& b) { return a.word < b.word; });
  StructureTable tbl(make_context(g, label, field), m, basis);

  std::vector<AssocPoly> expansions;
  expansions.reserve(basis.size());
  for (const auto& b : basis) expansions.push_back(free_lie::expand_left_normed(b.word, field));

  for (std::size_t i = 0; i < basis.size(); ++i) {
    for (std::size_t j = i + 1; j < basis.size(); ++j) {
      if (basis[i].degree + basis[j].degree > m) continue;
      const MultiDegree md = basis[i].mdeg + basis[j].mdeg;
      auto it = comps.find(md);
      if (it == comps.end() || it->second.chosen.empty()) continue;
      const Component& comp = it->second;
      const Vector v = comp.free->coordinates(free_lie::commutator(expansions[i], expansions[j]));
      const Vector x = row_times(v, comp.inverse, field);
      const std::size_t offset = comp.relations.size();
      SparseVector entry;
      for (std::size_t k = 0; k < comp.chosen.size(); ++k) {
        if (x[offset + k].is_zero()) continue;
        entry.emplace_back(*tbl.index_of(comp.chosen[k]), x[offset + k]);
      }
      std::sort(entry.begin(), entry.end(), [](const auto& a, const auto& b) { return a.first < b.first; });
      tbl.set_bracket(i, j, std::move(entry));
    }
  }
  return tbl;
}

/// The degree-<=k window of the free partially commutative algebra L(A;G).
/// Graded components of degree <= k of L(A;G) and N_k(A;G) coincide, so this is
/// build_structure under a different label.
inline StructureTable truncated_free(const Graph& g, int k, FieldTag field = FieldTag::rationals(),
                                     const BuildOptions& opts = {}) {
  return build_structure(g, k, field, opts, Variety::free(k));
}

/// Table for a nilpotent or free-window variety; metabelian needs a truncation degree.
inline StructureTable build_table(const Graph& g, const Variety& v, FieldTag field, const BuildOptions& opts = {}) {
  switch (v.kind) {
    case VarietyKind::nilpotent:
      return build_structure(g, v.degree, field, opts);
    case VarietyKind::free:
      return truncated_free(g, v.degree, field, opts);
    case VarietyKind::metabelian:
      detail::require(v.degree >= 1, "metabelian table needs a truncation degree");
      return MetabelianEngine(g, field).truncated_table(v.degree, opts.dimension_cap);
  }
  throw InvariantViolation("unknown variety");
}

inline LiePoly nf_nilpotent(const StructureTable& tbl, const LieTerm& t) { return tbl.evaluate(t); }

inline LiePoly bracket_nilpotent(const StructureTable& tbl, const LiePoly& p, const LiePoly& q) {
  return tbl.bracket(p, q);
}

inline DimReport dim_report(const StructureTable& tbl) { return tbl.dim_report(); }

}  // namespace pclie

#endif  // PCLIE_NILPOTENT_HPP
