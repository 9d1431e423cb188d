#ifndef PCLIE_ANALYSIS_HPP
#define PCLIE_ANALYSIS_HPP

#include <algorithm>
#include <cstddef>
#include <sstream>
#include <string>
#include <utility>
#include <vector>

#include "pclie/error.hpp"
#include "pclie/graph.hpp"
#include "pclie/linalg.hpp"
#include "pclie/metabelian.hpp"
#include "pclie/nilpotent.hpp"
#include "pclie/structure.hpp"
#include "pclie/term.hpp"

namespace pclie {

// ---------------------------------------------------------------------------
// Centralizers

struct SplitPart {
  VertexSet vertices;
  LiePoly part;
};

/// Groups the monomials of x by the component of complement(G(supp x)) that
/// contains their support. Parts follow component order and sum to x.
inline std::vector<SplitPart> support_split(const Graph& g, const LiePoly& x) {
  detail::require(!x.is_zero(), "support decomposition of zero");
  detail::require(x.context().graph == g, "element does not belong to the algebra of this graph");
  const VertexSet s = supp(x);
  const auto sub = induced_subgraph(g, s);
  std::vector<SplitPart> parts;
  for (const auto& c : connected_components(complement(sub.graph))) parts.push_back({sub.lift(c), LiePoly(x.context_ptr())});
  for (const auto& [w, c] : x.terms()) {
    const VertexSet ws = mdeg(w, g.vertex_count()).support();
    auto it = std::find_if(parts.begin(), parts.end(), [&](const SplitPart& p) { return ws.is_subset_of(p.vertices); });
    // A nonzero monomial whose support met two components would be a product
    // of commuting vertex sets, hence zero.
    detail::ensure(it != parts.end(), "monomial " + w.to_string() + " straddles complement components");
    it->part.add_term(w, c);
  }
  for (const auto& p : parts) {
    detail::ensure(supp(p.part) == p.vertices, "support of a decomposition part differs from its component");
  }
  return parts;
}

struct CentralizerDescription {
  std::vector<SplitPart> parts;
  /// Vertices adjacent to every vertex of supp(x).
  VertexSet hull;
};

inline CentralizerDescription describe_centralizer(const Graph& g, const LiePoly& x) {
  return {support_split(g, x), adjacency_hull(g, supp(x))};
}

/// Kernel of y -> [y, x] with y restricted to basis elements of degree <= max_degree.
inline Subspace centralizer_computed(const StructureTable& tbl, const LiePoly& x, int max_degree) {
  detail::require(!x.is_zero(), "centralizer of zero");
  const Vector xv = tbl.coordinates(x);
  const FieldTag f = tbl.field();
  const auto domain = tbl.of_degree_at_most(max_degree);
  std::vector<Vector> rows(tbl.dim(), zero_vector(domain.size(), f));
  for (std::size_t c = 0; c < domain.size(); ++c) {
    const Vector col = tbl.bracket(unit_vector(tbl.dim(), domain[c], f), xv);
    for (std::size_t r = 0; r < tbl.dim(); ++r) rows[r][c] = col[r];
  }
  Subspace out(tbl.dim(), f);
  for (const auto& k : nullspace(rows, domain.size(), f)) {
    Vector y = zero_vector(tbl.dim(), f);
    for (std::size_t c = 0; c < domain.size(); ++c) y[domain[c]] = k[c];
    out.insert(y);
  }
  return out;
}

/// Kernel of y -> [y, x] on the whole table.
inline Subspace centralizer_computed(const StructureTable& tbl, const LiePoly& x) {
  return centralizer_computed(tbl, x, tbl.max_degree());
}

/// span{g_1,...,g_p} + span{basis monomials supported in the adjacency hull}.
inline Subspace centralizer_predicted(const StructureTable& tbl, const LiePoly& x) {
  detail::require(!x.is_zero(), "centralizer of zero");
  tbl.check_context(x);
  const auto desc = describe_centralizer(tbl.graph(), x);
  Subspace out(tbl.dim(), tbl.field());
  for (const auto& p : desc.parts) out.insert(tbl.coordinates(p.part));
  if (!desc.hull.empty()) {
    for (auto k : tbl.supported_in(desc.hull)) out.insert(unit_vector(tbl.dim(), k, tbl.field()));
  }
  return out;
}

struct CentralizerComparison {
  /// Degrees 1..window are faithful: there [y, x] never crosses the truncation.
  int window = 0;
  Subspace computed;
  Subspace predicted;
  bool match = false;
};

/// Compares both centralizers on elements of degree <= m - (max length of x).
inline CentralizerComparison compare_centralizer(const StructureTable& tbl, const LiePoly& x) {
  CentralizerComparison cmp;
  cmp.window = tbl.max_degree() - max_length(x);
  if (cmp.window < 1) {
    cmp.computed = Subspace(tbl.dim(), tbl.field());
    cmp.predicted = cmp.computed;
    cmp.match = true;
    return cmp;
  }
  cmp.computed = centralizer_computed(tbl, x, cmp.window);
  Subspace window_space(tbl.dim(), tbl.field());
  for (auto k : tbl.of_degree_at_most(cmp.window)) window_space.insert(unit_vector(tbl.dim(), k, tbl.field()));
  cmp.predicted = subspace_intersection(centralizer_predicted(tbl, x), window_space);
  cmp.match = cmp.computed == cmp.predicted;
  return cmp;
}

// ---------------------------------------------------------------------------
// Direct-sum decompositions

struct DecomposabilityVerdict {
  bool decomposable = false;
  std::vector<VertexSet> complement_components;
};

/// The algebra splits into two nonzero summands iff complement(G) is disconnected.
inline DecomposabilityVerdict is_decomposable(const Graph& g) {
  detail::require(g.vertex_count() >= 2, "decomposability needs at least two vertices");
  DecomposabilityVerdict v;
  v.complement_components = connected_components(complement(g));
  v.decomposable = v.complement_components.size() > 1;
  return v;
}

struct VerificationReport {
  bool cross_brackets_vanish = false;
  bool spans = false;
  bool trivial_intersection = false;
  bool closed = false;
  bool nonzero = false;

  bool passed() const { return cross_brackets_vanish && spans && trivial_intersection && closed && nonzero; }
};

enum class DecompositionKind { vertex_split, subspace_split };

struct Decomposition {
  DecompositionKind kind = DecompositionKind::vertex_split;
  VertexSet part1;
  VertexSet part2;
  Subspace l1;
  Subspace l2;
  std::string variety;
  FieldTag field;
  std::size_t total_dim = 0;
  VerificationReport report;
};

/// Span of the basis monomials supported in s.
inline Subspace vertex_subspace(const StructureTable& tbl, const VertexSet& s) {
  Subspace out(tbl.dim(), tbl.field());
  for (auto k : tbl.supported_in(s)) out.insert(unit_vector(tbl.dim(), k, tbl.field()));
  return out;
}

inline VerificationReport verify_split(const StructureTable& tbl, const Subspace& l1, const Subspace& l2) {
  VerificationReport r;
  r.cross_brackets_vanish = true;
  for (const auto& u : l1.rows()) {
    for (const auto& v : l2.rows()) {
      if (!is_zero(tbl.bracket(u, v))) r.cross_brackets_vanish = false;
    }
  }
  const Subspace sum = subspace_sum(l1, l2);
  r.spans = sum.dim() == tbl.dim();
  r.trivial_intersection = sum.dim() == l1.dim() + l2.dim();
  auto closed = [&](const Subspace& s) {
    for (std::size_t i = 0; i < s.dim(); ++i) {
      for (std::size_t j = i + 1; j < s.dim(); ++j) {
        if (!s.contains(tbl.bracket(s.rows()[i], s.rows()[j]))) return false;
      }
    }
    return true;
  };
  r.closed = closed(l1) && closed(l2);
  r.nonzero = l1.dim() > 0 && l2.dim() > 0;
  return r;
}

/// Re-checks a decomposition against a table; vertex splits are re-expanded
/// into their monomial subspaces first.
inline VerificationReport verify_split(const StructureTable& tbl, const Decomposition& d) {
  if (d.kind == DecompositionKind::vertex_split) {
    return verify_split(tbl, vertex_subspace(tbl, d.part1), vertex_subspace(tbl, d.part2));
  }
  return verify_split(tbl, d.l1, d.l2);
}

/// Default truncation used when verifying metabelian splits.
inline constexpr int kMetabelianVerifyDegree = 4;

/// The variety whose truncation is used to verify a split.
inline Variety verification_variety(Variety v) {
  if (v.kind == VarietyKind::metabelian && v.degree == 0) v.degree = kMetabelianVerifyDegree;
  return v;
}

/// Two-summand vertex split: the complement component of vertex 1 against
/// the rest, verified on the table of `variety`.
inline Decomposition split(const Graph& g, const Variety& variety, FieldTag field = FieldTag::rationals(),
                           const BuildOptions& opts = {}) {
  const auto verdict = is_decomposable(g);
  detail::require(verdict.decomposable, "complement graph is connected; no split exists");
  Decomposition d;
  d.kind = DecompositionKind::vertex_split;
  d.part1 = verdict.complement_components.front();
  d.part2 = set_difference(VertexSet::range(g.vertex_count()), d.part1);
  const Variety v = verification_variety(variety);
  const StructureTable tbl = build_table(g, v, field, opts);
  d.variety = v.to_string();
  d.field = field;
  d.l1 = vertex_subspace(tbl, d.part1);
  d.l2 = vertex_subspace(tbl, d.part2);
  d.total_dim = tbl.dim();
  d.report = verify_split(tbl, d.l1, d.l2);
  return d;
}

/// One summand per complement component.
inline std::vector<VertexSet> finest_split(const Graph& g) {
  const auto verdict = is_decomposable(g);
  detail::require(verdict.decomposable, "complement graph is connected; no split exists");
  return verdict.complement_components;
}

inline std::string pass_fail(bool b) { return b ? "pass" : "fail"; }

/// Stable key=value serialisation of a decomposition report.
inline std::string format_decomposition_machine(const Decomposition& d) {
  std::ostringstream out;
  auto ids = [](const VertexSet& s) {
    std::string r;
    for (int v : s) r += (r.empty() ? "" : ",") + std::to_string(v);
    return r;
  };
  out << "kind=" << (d.kind == DecompositionKind::vertex_split ? "vertex-split" : "subspace-split") << "\n";
  if (d.kind == DecompositionKind::vertex_split) {
    out << "A1=" << ids(d.part1) << "\n";
    out << "A2=" << ids(d.part2) << "\n";
  }
  out << "variety=" << d.variety << "\n";
  out << "field=" << d.field.name() << "\n";
  out << "dim_total=" << d.total_dim << "\n";
  out << "dim_L1=" << d.l1.dim() << "\n";
  out << "dim_L2=" << d.l2.dim() << "\n";
  out << "check.cross_brackets=" << pass_fail(d.report.cross_brackets_vanish) << "\n";
  out << "check.spans=" << pass_fail(d.report.spans) << "\n";
  out << "check.trivial_intersection=" << pass_fail(d.report.trivial_intersection) << "\n";
  out << "check.closed=" << pass_fail(d.report.closed) << "\n";
  out << "check.nonzero=" << pass_fail(d.report.nonzero) << "\n";
  out << "verified=" << (d.report.passed() ? "yes" : "no") << "\n";
  return out.str();
}

}  // namespace pclie

#endif  // PCLIE_ANALYSIS_HPP
