// Test-only reference computations. None of these go through the engines they
// are used to check.
#ifndef PCLIE_TESTS_SUPPORT_ORACLES_HPP
#define PCLIE_TESTS_SUPPORT_ORACLES_HPP

#include <cstddef>
#include <map>
#include <memory>
#include <vector>

#include "pclie/free_lie.hpp"
#include "pclie/graph.hpp"
#include "pclie/linalg.hpp"
#include "pclie/term.hpp"

namespace pclie::testing {

/// (1/d) sum_{e|d} mu(d/e) n^e, by direct divisor and factor loops.
inline long long witt(int n, int d) {
  auto mu = [](int k) {
    int primes = 0;
    for (int p = 2; p <= k; ++p) {
      if (k % p) continue;
      int e = 0;
      while (k % p == 0) {
        k /= p;
        ++e;
      }
      if (e > 1) return 0;
      ++primes;
    }
    return primes % 2 ? -1 : 1;
  };
  long long s = 0;
  for (int e = 1; e <= d; ++e) {
    if (d % e) continue;
    long long pw = 1;
    for (int k = 0; k < e; ++k) pw *= n;
    s += mu(d / e) * pw;
  }
  return s / d;
}

/// Associative expansion of an arbitrary term (brackets become commutators).
inline AssocPoly expand_term(const LieTerm& t, FieldTag f) {
  return evaluate<AssocPoly>(
      t, [&](int i) { return free_lie::letter(i, f); },
      [&](const AssocPoly& a, const AssocPoly& b) { return free_lie::commutator(a, b); },
      [&](const std::vector<std::pair<mpq_class, AssocPoly>>& parts) {
        AssocPoly acc;
        for (const auto& [w, p] : parts) {
          const Scalar s = Scalar::from_rational(w, f);
          for (const auto& [u, c] : p) free_lie::accumulate(acc, u, s * c);
        }
        return acc;
      });
}

inline AssocPoly expand_poly(const LiePoly& p) {
  AssocPoly acc;
  for (const auto& [w, c] : p.terms()) {
    for (const auto& [u, cu] : free_lie::expand_left_normed(w, p.field())) free_lie::accumulate(acc, u, c * cu);
  }
  return acc;
}

inline std::map<MultiDegree, AssocPoly> split_by_multidegree(const AssocPoly& p, int n) {
  std::map<MultiDegree, AssocPoly> out;
  for (const auto& [w, c] : p) out[mdeg(Word(w), n)].emplace(w, c);
  return out;
}

/// Kernel of the quotient map from the free Lie algebra to L(A;G) (and, when
/// metabelian is set, to M(A;G)), computed per multidegree inside the free
/// associative algebra. Graph relations: [r, a_k] iterated from the edge
/// commutators. Metabelian identity: [x, y] for x, y Lyndon elements of degree >= 2.
class QuotientKernelOracle {
 public:
  QuotientKernelOracle(Graph g, FieldTag f, bool metabelian) : g_(std::move(g)), f_(f), metabelian_(metabelian) {}

  struct Component {
    std::shared_ptr<const free_lie::LyndonComponent> free;
    Subspace kernel;
    std::vector<AssocPoly> graph_relations;
  };

  const Component& component(const MultiDegree& d) {
    if (auto it = cache_.find(d); it != cache_.end()) return it->second;
    const int n = g_.vertex_count();
    Component c;
    c.free = free_lie::lyndon_component(d, f_);
    c.kernel = Subspace(c.free->dim(), f_);
    Subspace graph_span(c.free->dim(), f_);
    auto add_graph = [&](AssocPoly q) {
      Vector v = c.free->coordinates(q);
      if (graph_span.insert(v)) c.graph_relations.push_back(std::move(q));
      c.kernel.insert(v);
    };
    const int len = d.length();
    if (len == 2) {
      const auto s = d.support();
      if (s.size() == 2 && g_.adjacent(s.front(), s.back())) {
        add_graph(free_lie::commutator(free_lie::letter(s.front(), f_), free_lie::letter(s.back(), f_)));
      }
    } else if (len > 2) {
      for (int k = 1; k <= n; ++k) {
        if (d[k] == 0) continue;
        MultiDegree prev = d;
        --prev.counts[static_cast<std::size_t>(k - 1)];
        const auto rels = component(prev).graph_relations;
        for (const auto& r : rels) add_graph(free_lie::commutator(r, free_lie::letter(k, f_)));
      }
    }
    if (metabelian_ && len >= 4) {
      // Split d = d1 + d2 with both parts of length >= 2.
      for (int l1 = 2; l1 + 2 <= len; ++l1) {
        for (const auto& d1 : multidegrees_of_length(n, l1)) {
          MultiDegree d2 = d;
          bool ok = true;
          for (int i = 1; i <= n; ++i) {
            d2.counts[static_cast<std::size_t>(i - 1)] -= d1[i];
            if (d2[i] < 0) ok = false;
          }
          if (!ok) continue;
          auto c1 = free_lie::lyndon_component(d1, f_);
          auto c2 = free_lie::lyndon_component(d2, f_);
          for (std::size_t a = 0; a < c1->dim(); ++a) {
            for (std::size_t b = 0; b < c2->dim(); ++b) {
              c.kernel.insert(c.free->coordinates(free_lie::commutator(c1->expansion(a), c2->expansion(b))));
            }
          }
        }
      }
    }
    return cache_.emplace(d, std::move(c)).first->second;
  }

  /// Dimension of the quotient in multidegree d.
  std::size_t dim(const MultiDegree& d) {
    const auto& c = component(d);
    return c.free->dim() - c.kernel.dim();
  }

  /// True when the Lie element with associative expansion p vanishes in the
  /// quotient, ignoring multidegrees longer than max_length (0 = none ignored).
  bool vanishes(const AssocPoly& p, int max_length = 0) {
    for (const auto& [d, part] : split_by_multidegree(p, g_.vertex_count())) {
      if (max_length > 0 && d.length() > max_length) continue;
      const auto& c = component(d);
      if (!c.kernel.contains(c.free->coordinates(part))) return false;
    }
    return true;
  }

 private:
  Graph g_;
  FieldTag f_;
  bool metabelian_;
  std::map<MultiDegree, Component> cache_;
};

}  // namespace pclie::testing

#endif  // PCLIE_TESTS_SUPPORT_ORACLES_HPP
