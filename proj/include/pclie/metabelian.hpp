#ifndef PCLIE_METABELIAN_HPP
#define PCLIE_METABELIAN_HPP

#include <algorithm>
#include <cstddef>
#include <map>
#include <memory>
#include <mutex>
#include <string>
#include <utility>
#include <vector>

#include "pclie/error.hpp"
#include "pclie/graph.hpp"
#include "pclie/linalg.hpp"
#include "pclie/structure.hpp"
#include "pclie/term.hpp"

namespace pclie {

namespace metabelian_detail {

/// Word (c, b, rest...) with rest sorted.
inline Word shaped(int c, int b, std::vector<int> rest) {
  std::sort(rest.begin(), rest.end());
  std::vector<int> w{c, b};
  w.insert(w.end(), rest.begin(), rest.end());
  return Word(std::move(w));
}

inline void remove_one(std::vector<int>& v, int x) {
  auto it = std::find(v.begin(), v.end(), x);
  detail::ensure(it != v.end(), "letter missing from multiset");
  v.erase(it);
}

inline std::vector<int> letters_of(const MultiDegree& d) {
  std::vector<int> w;
  for (int i = 1; i <= d.vars(); ++i) w.insert(w.end(), static_cast<std::size_t>(d[i]), i);
  return w;
}

}  // namespace metabelian_detail

/// Element of the free metabelian algebra, over words in canonical shape:
/// a single letter, or [c, b, t_1, ..., t_k] with b the smallest letter, c > b
/// and the tail sorted.
using MetabelianVector = std::map<Word, Scalar>;

inline void accumulate(MetabelianVector& v, const Word& w, const Scalar& c) {
  if (c.is_zero()) return;
  auto [it, inserted] = v.emplace(w, c);
  if (!inserted) {
    it->second += c;
    if (it->second.is_zero()) v.erase(it);
  }
}

/// Rewrites a left-normed word of length >= 2 into canonical shape using
/// anticommutativity, tail symmetry ([c,x,y] = [c,y,x] for c in the derived
/// algebra) and [[x,y],b] = [[x,b],y] - [[y,b],x].
inline MetabelianVector canonical_left_normed(const Word& w, FieldTag f) {
  using metabelian_detail::shaped;
  detail::require(w.length() >= 2, "canonical_left_normed needs length >= 2");
  MetabelianVector out;
  const auto& l = w.letters;
  if (l[0] == l[1]) return out;
  const int b = *std::min_element(l.begin(), l.end());
  std::vector<int> tail(l.begin() + 2, l.end());
  const Scalar one = Scalar::one(f);
  if (l[1] == b) {
    accumulate(out, shaped(l[0], b, tail), one);
  } else if (l[0] == b) {
    accumulate(out, shaped(l[1], b, tail), -one);
  } else {
    metabelian_detail::remove_one(tail, b);
    auto with = [&](int extra) {
      auto t = tail;
      t.push_back(extra);
      return t;
    };
    accumulate(out, shaped(l[0], b, with(l[1])), one);
    accumulate(out, shaped(l[1], b, with(l[0])), -one);
  }
  return out;
}

/// Bracket of two canonical words in the free metabelian algebra.
inline MetabelianVector free_metabelian_bracket(const Word& u, const Word& v, FieldTag f) {
  if (u.length() >= 2 && v.length() >= 2) return {};
  if (u.length() == 1 || v.length() == 1) {
    if (u.length() >= 2 || v.length() == 1) {
      Word w = u;
      w.letters.insert(w.letters.end(), v.letters.begin(), v.letters.end());
      return canonical_left_normed(w, f);
    }
    MetabelianVector out = free_metabelian_bracket(v, u, f);
    for (auto& [w, c] : out) c = -c;
    return out;
  }
  return {};
}

inline MetabelianVector free_metabelian_bracket(const MetabelianVector& x, const MetabelianVector& y, FieldTag f) {
  MetabelianVector out;
  for (const auto& [u, cu] : x) {
    for (const auto& [v, cv] : y) {
      const Scalar c = cu * cv;
      for (const auto& [w, cw] : free_metabelian_bracket(u, v, f)) accumulate(out, w, c * cw);
    }
  }
  return out;
}

/// Canonical-shape words of multidegree d: the basis of the free metabelian
/// algebra in that multidegree, lexicographically.
inline std::vector<Word> free_metabelian_basis(const MultiDegree& d) {
  const int r = d.length();
  detail::require(r >= 1, "zero multidegree");
  const VertexSet s = d.support();
  if (r == 1) return {Word{s.front()}};
  const int b = s.front();
  std::vector<Word> out;
  for (int c : s) {
    if (c == b) continue;
    auto rest = metabelian_detail::letters_of(d);
    metabelian_detail::remove_one(rest, c);
    metabelian_detail::remove_one(rest, b);
    out.push_back(metabelian_detail::shaped(c, b, rest));
  }
  return out;
}

/// The basis of M(A;G) in multidegree d: words [c, b, sorted tail] where b is
/// the smallest vertex of the support and c is the largest vertex of one of
/// the components of G(support) not containing b. Sorted lexicographically.
inline std::vector<Word> metabelian_basis(const Graph& g, const MultiDegree& d) {
  detail::require(d.vars() == g.vertex_count(), "multidegree arity does not match the graph");
  const int r = d.length();
  detail::require(r >= 1, "zero multidegree");
  const VertexSet s = d.support();
  if (r == 1) return {Word{s.front()}};
  const auto sub = induced_subgraph(g, s);
  const auto comps = connected_components(sub.graph);
  const int b = s.front();
  std::vector<Word> out;
  // comps[0] holds the smallest vertex, i.e. b.
  for (std::size_t t = 1; t < comps.size(); ++t) {
    const int c = sub.lift(comps[t]).back();
    auto rest = metabelian_detail::letters_of(d);
    metabelian_detail::remove_one(rest, c);
    metabelian_detail::remove_one(rest, b);
    out.push_back(metabelian_detail::shaped(c, b, rest));
  }
  std::sort(out.begin(), out.end());
  return out;
}

inline Vector to_coordinates(const MetabelianVector& v, const std::vector<Word>& columns, FieldTag f) {
  Vector out = zero_vector(columns.size(), f);
  for (const auto& [w, c] : v) {
    auto it = std::lower_bound(columns.begin(), columns.end(), w);
    detail::ensure(it != columns.end() && *it == w, "word " + w.to_string() + " outside the expected component");
    out[static_cast<std::size_t>(it - columns.begin())] = c;
  }
  return out;
}

/// Span of the multidegree-d part of the ideal generated by [a_i,a_j] for the
/// edges {i,j}, in coordinates over free_metabelian_basis(d). Since the derived
/// algebra is abelian, that part is spanned by [a_i, a_j, sorted rest].
inline Subspace relation_subspace(const Graph& g, const MultiDegree& d, FieldTag f) {
  detail::require(d.vars() == g.vertex_count(), "multidegree arity does not match the graph");
  detail::require(d.length() >= 2, "relation subspace needs total degree >= 2");
  const auto columns = free_metabelian_basis(d);
  Subspace rel(columns.size(), f);
  for (auto [i, j] : g.edges()) {
    if (d[i] == 0 || d[j] == 0) continue;
    auto rest = metabelian_detail::letters_of(d);
    metabelian_detail::remove_one(rest, i);
    metabelian_detail::remove_one(rest, j);
    std::sort(rest.begin(), rest.end());
    std::vector<int> w{i, j};
    w.insert(w.end(), rest.begin(), rest.end());
    rel.insert(to_coordinates(canonical_left_normed(Word(std::move(w)), f), columns, f));
  }
  return rel;
}

/// Partially commutative metabelian Lie algebra M(A;G) with normal forms over
/// metabelian_basis. The per-multidegree reduction data is memoised; the memo
/// is the only mutable state and is guarded by a mutex.
class MetabelianEngine {
 public:
  MetabelianEngine(Graph g, FieldTag f = FieldTag::rationals())
      : ctx_(make_context(std::move(g), Variety::metabelian(), f)) {}

  const Graph& graph() const { return ctx_->graph; }
  FieldTag field() const { return ctx_->field; }
  const ContextPtr& context_ptr() const { return ctx_; }

  std::vector<Word> basis_for_multidegree(const MultiDegree& d) const { return metabelian_basis(graph(), d); }

  Subspace relation_subspace(const MultiDegree& d) const { return pclie::relation_subspace(graph(), d, field()); }

  LiePoly generator(int i) const {
    detail::require(i >= 1 && i <= graph().vertex_count(), "generator a" + std::to_string(i) + " out of range");
    LiePoly p(ctx_);
    p.add_term(Word{i}, Scalar::one(field()));
    return p;
  }

  LiePoly nf(const LieTerm& t) const {
    check_range(t, graph().vertex_count());
    const FieldTag f = field();
    auto v = pclie::evaluate<MetabelianVector>(
        t, [&](int i) { return MetabelianVector{{Word{i}, Scalar::one(f)}}; },
        [&](const MetabelianVector& a, const MetabelianVector& b) { return free_metabelian_bracket(a, b, f); },
        [&](const std::vector<std::pair<mpq_class, MetabelianVector>>& parts) {
          MetabelianVector acc;
          for (const auto& [w, x] : parts) {
            const Scalar s = Scalar::from_rational(w, f);
            for (const auto& [u, c] : x) accumulate(acc, u, s * c);
          }
          return acc;
        });
    return reduce(v);
  }

  LiePoly bracket(const LiePoly& p, const LiePoly& q) const {
    check(p);
    check(q);
    MetabelianVector x(p.terms().begin(), p.terms().end());
    MetabelianVector y(q.terms().begin(), q.terms().end());
    return reduce(free_metabelian_bracket(x, y, field()));
  }

  /// Reduces a free-metabelian element to the basis modulo the relations.
  LiePoly reduce(const MetabelianVector& v) const {
    std::map<MultiDegree, MetabelianVector> parts;
    for (const auto& [w, c] : v) parts[mdeg(w, graph().vertex_count())].emplace(w, c);
    LiePoly out(ctx_);
    for (const auto& [d, part] : parts) {
      if (d.length() == 1) {
        for (const auto& [w, c] : part) out.add_term(w, c);
        continue;
      }
      const auto red = reducer(d);
      Vector x = to_coordinates(part, red->columns, field());
      Vector permuted(x.size(), Scalar::zero(field()));
      for (std::size_t k = 0; k < x.size(); ++k) permuted[k] = x[red->order[k]];
      permuted = red->relations.reduce(std::move(permuted));
      for (std::size_t k = 0; k < permuted.size(); ++k) {
        if (permuted[k].is_zero()) continue;
        detail::ensure(red->is_basis[red->order[k]], "metabelian reduction left a non-basis monomial");
        out.add_term(red->columns[red->order[k]], permuted[k]);
      }
    }
    return out;
  }

  /// Quotient by all monomials of length > k, as a structure table over the
  /// basis words of length <= k.
  StructureTable truncated_table(int k, std::size_t dimension_cap = 20000) const {
    detail::require(k >= 1, "truncation degree must be positive");
    const int n = graph().vertex_count();
    std::vector<BasisElement> basis;
    for (int d = 1; d <= k; ++d) {
      for (const auto& md : multidegrees_of_length(n, d)) {
        for (auto& w : basis_for_multidegree(md)) basis.push_back({std::move(w), md, d});
        if (basis.size() > dimension_cap) {
          throw CapExceeded("metabelian truncation exceeds the dimension cap of " + std::to_string(dimension_cap));
        }
      }
    }
    std::sort(basis.begin(), basis.end(), [](const auto& a, const auto& b) { return a.word < b.word; });
    StructureTable tbl(make_context(graph(), Variety::metabelian(k), field()), k, basis);
    for (std::size_t i = 0; i < basis.size(); ++i) {
      for (std::size_t j = i + 1; j < basis.size(); ++j) {
        if (basis[i].degree + basis[j].degree > k) continue;
        const LiePoly prod = reduce(free_metabelian_bracket(basis[i].word, basis[j].word, field()));
        SparseVector entry;
        for (const auto& [w, c] : prod.terms()) {
          auto idx = tbl.index_of(w);
          detail::ensure(idx.has_value(), "metabelian product outside the truncated basis");
          entry.emplace_back(*idx, c);
        }
        tbl.set_bracket(i, j, std::move(entry));
      }
    }
    return tbl;
  }

 private:
  struct Reducer {
    std::vector<Word> columns;        // free metabelian basis of the multidegree
    std::vector<bool> is_basis;       // column belongs to metabelian_basis
    std::vector<std::size_t> order;   // non-basis columns first
    Subspace relations;               // in permuted coordinates
  };

  void check(const LiePoly& p) const {
    if (p.context_ptr() != ctx_ && !(p.context() == *ctx_)) {
      throw InputError("context mismatch: element of " + p.context().variety.to_string() + " over " +
                       p.field().name() + " used with the metabelian engine");
    }
  }

  std::shared_ptr<const Reducer> reducer(const MultiDegree& d) const {
    {
      std::lock_guard lock(mu_);
      if (auto it = cache_.find(d); it != cache_.end()) return it->second;
    }
    auto red = std::make_shared<Reducer>();
    red->columns = free_metabelian_basis(d);
    const auto basis = basis_for_multidegree(d);
    red->is_basis.resize(red->columns.size());
    for (std::size_t k = 0; k < red->columns.size(); ++k) {
      red->is_basis[k] = std::binary_search(basis.begin(), basis.end(), red->columns[k]);
      if (!red->is_basis[k]) red->order.push_back(k);
    }
    const std::size_t non_basis = red->order.size();
    for (std::size_t k = 0; k < red->columns.size(); ++k) {
      if (red->is_basis[k]) red->order.push_back(k);
    }
    const Subspace rel = relation_subspace(d);
    red->relations = Subspace(red->columns.size(), field());
    for (const auto& row : rel.rows()) {
      Vector p(row.size(), Scalar::zero(field()));
      for (std::size_t k = 0; k < row.size(); ++k) p[k] = row[red->order[k]];
      red->relations.insert(p);
    }
    // The basis words complement the relations exactly when the pivots are
    // precisely the non-basis columns.
    std::vector<std::size_t> expected(non_basis);
    for (std::size_t k = 0; k < non_basis; ++k) expected[k] = k;
    detail::ensure(red->relations.pivots() == expected,
                   "metabelian basis is not a complement of the relations in multidegree " + d.to_string());
    std::lock_guard lock(mu_);
    return cache_.emplace(d, std::move(red)).first->second;
  }

  ContextPtr ctx_;
  mutable std::mutex mu_;
  mutable std::map<MultiDegree, std::shared_ptr<const Reducer>> cache_;
};

}  // namespace pclie

#endif  // PCLIE_METABELIAN_HPP
