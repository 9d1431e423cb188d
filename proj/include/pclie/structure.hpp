#ifndef PCLIE_STRUCTURE_HPP
#define PCLIE_STRUCTURE_HPP

#include <cstddef>
#include <map>
#include <optional>
#include <sstream>
#include <string>
#include <unordered_map>
#include <utility>
#include <vector>

#include "pclie/error.hpp"
#include "pclie/linalg.hpp"
#include "pclie/term.hpp"

namespace pclie {

struct BasisElement {
  Word word;
  MultiDegree mdeg;
  int degree = 0;
};

using SparseVector = std::vector<std::pair<std::size_t, Scalar>>;

struct DimReport {
  std::vector<std::size_t> by_degree;  // entry d-1 is the dimension of degree d
  std::map<MultiDegree, std::size_t> by_multidegree;
  std::size_t total = 0;
};

/// Finite-dimensional graded Lie algebra given by an ordered basis of
/// left-normed words and exact structure constants. Brackets whose degree
/// exceeds max_degree vanish. Immutable after construction.
class StructureTable {
 public:
  StructureTable(ContextPtr ctx, int max_degree, std::vector<BasisElement> basis)
      : ctx_(std::move(ctx)), max_degree_(max_degree), basis_(std::move(basis)) {
    for (std::size_t k = 0; k < basis_.size(); ++k) {
      detail::ensure(k == 0 || basis_[k - 1].word < basis_[k].word, "basis words out of canonical order");
      index_.emplace(basis_[k].word, k);
    }
  }

  const Context& context() const { return *ctx_; }
  const ContextPtr& context_ptr() const { return ctx_; }
  FieldTag field() const { return ctx_->field; }
  const Graph& graph() const { return ctx_->graph; }
  int max_degree() const { return max_degree_; }
  std::size_t dim() const { return basis_.size(); }
  const std::vector<BasisElement>& basis() const { return basis_; }

  std::optional<std::size_t> index_of(const Word& w) const {
    auto it = index_.find(w);
    if (it == index_.end()) return std::nullopt;
    return it->second;
  }

  /// Records [b_i, b_j] for i < j. Used by the builders only.
  void set_bracket(std::size_t i, std::size_t j, SparseVector v) {
    detail::ensure(i < j && j < basis_.size(), "bracket entry must have i < j");
    if (!v.empty()) brackets_[key(i, j)] = std::move(v);
  }

  /// [b_i, b_j] in the basis.
  SparseVector bracket_basis(std::size_t i, std::size_t j) const {
    if (i == j) return {};
    const bool swapped = i > j;
    auto it = brackets_.find(swapped ? key(j, i) : key(i, j));
    if (it == brackets_.end()) return {};
    if (!swapped) return it->second;
    SparseVector out = it->second;
    for (auto& [k, c] : out) c = -c;
    return out;
  }

  Vector bracket(const Vector& x, const Vector& y) const {
    Vector out = zero_vector(dim(), field());
    for (std::size_t i = 0; i < x.size(); ++i) {
      if (x[i].is_zero()) continue;
      for (std::size_t j = 0; j < y.size(); ++j) {
        if (y[j].is_zero() || i == j) continue;
        if (basis_[i].degree + basis_[j].degree > max_degree_) continue;
        const Scalar c = x[i] * y[j];
        for (const auto& [k, s] : bracket_basis(i, j)) out[k] += c * s;
      }
    }
    return out;
  }

  Vector coordinates(const LiePoly& p) const {
    check_context(p);
    Vector v = zero_vector(dim(), field());
    for (const auto& [w, c] : p.terms()) {
      auto k = index_of(w);
      detail::ensure(k.has_value(), "monomial " + w.to_string() + " is not a basis element of this table");
      v[*k] = c;
    }
    return v;
  }

  LiePoly to_poly(const Vector& v) const {
    LiePoly p(ctx_);
    for (std::size_t k = 0; k < v.size(); ++k) p.add_term(basis_[k].word, v[k]);
    return p;
  }

  LiePoly generator(int i) const {
    detail::require(i >= 1 && i <= graph().vertex_count(), "generator a" + std::to_string(i) + " out of range");
    return to_poly(unit_vector(dim(), *index_of(Word{i}), field()));
  }

  LiePoly bracket(const LiePoly& p, const LiePoly& q) const {
    return to_poly(bracket(coordinates(p), coordinates(q)));
  }

  /// Normal form of an arbitrary term; products above max_degree vanish.
  LiePoly evaluate(const LieTerm& t) const {
    check_range(t, graph().vertex_count());
    return to_poly(evaluate_vector(t));
  }

  Vector evaluate_vector(const LieTerm& t) const {
    const FieldTag f = field();
    return pclie::evaluate<Vector>(
        t, [&](int i) { return unit_vector(dim(), *index_of(Word{i}), f); },
        [&](const Vector& a, const Vector& b) { return bracket(a, b); },
        [&](const std::vector<std::pair<mpq_class, Vector>>& parts) {
          Vector acc = zero_vector(dim(), f);
          for (const auto& [w, v] : parts) axpy(acc, Scalar::from_rational(w, f), v);
          return acc;
        });
  }

  DimReport dim_report() const {
    DimReport r;
    r.by_degree.assign(static_cast<std::size_t>(max_degree_), 0);
    for (const auto& b : basis_) {
      ++r.by_degree[static_cast<std::size_t>(b.degree - 1)];
      ++r.by_multidegree[b.mdeg];
    }
    r.total = basis_.size();
    return r;
  }

  /// Basis elements whose support lies inside s.
  std::vector<std::size_t> supported_in(const VertexSet& s) const {
    std::vector<std::size_t> out;
    for (std::size_t k = 0; k < basis_.size(); ++k) {
      if (basis_[k].mdeg.support().is_subset_of(s)) out.push_back(k);
    }
    return out;
  }

  std::vector<std::size_t> of_degree_at_most(int d) const {
    std::vector<std::size_t> out;
    for (std::size_t k = 0; k < basis_.size(); ++k) {
      if (basis_[k].degree <= d) out.push_back(k);
    }
    return out;
  }

  /// Text dump: `b <id> <word>` per basis element, then `<u> <v> <w> <c>` per
  /// nonzero structure constant with u < v. Ids are 1-based basis positions.
  std::string dump() const {
    std::ostringstream out;
    out << "# " << ctx_->variety.to_string() << " over " << field().name() << "\n";
    for (std::size_t k = 0; k < basis_.size(); ++k) out << "b " << k + 1 << " " << basis_[k].word.to_string() << "\n";
    for (std::size_t i = 0; i < basis_.size(); ++i) {
      for (std::size_t j = i + 1; j < basis_.size(); ++j) {
        for (const auto& [k, c] : bracket_basis(i, j)) {
          out << i + 1 << " " << j + 1 << " " << k + 1 << " " << c.to_string() << "\n";
        }
      }
    }
    return out.str();
  }

  /// Same basis and structure constants (the context label may differ).
  bool same_structure(const StructureTable& o) const {
    if (dim() != o.dim() || max_degree_ != o.max_degree_ || field() != o.field()) return false;
    for (std::size_t k = 0; k < dim(); ++k) {
      if (basis_[k].word != o.basis_[k].word) return false;
    }
    if (brackets_.size() != o.brackets_.size()) return false;
    for (const auto& [k, v] : brackets_) {
      auto it = o.brackets_.find(k);
      if (it == o.brackets_.end() || !(it->second == v)) return false;
    }
    return true;
  }

  void check_context(const LiePoly& p) const {
    if (p.context_ptr() != ctx_ && !(p.context() == *ctx_)) {
      throw InputError("context mismatch: element of " + p.context().variety.to_string() + " used with table of " +
                       ctx_->variety.to_string());
    }
  }

 private:
  std::size_t key(std::size_t i, std::size_t j) const { return i * basis_.size() + j; }

  ContextPtr ctx_;
  int max_degree_ = 0;
  std::vector<BasisElement> basis_;
  std::map<Word, std::size_t> index_;
  std::unordered_map<std::size_t, SparseVector> brackets_;
};

inline std::string format_dims(const DimReport& r) {
  std::string s;
  for (std::size_t d = 0; d < r.by_degree.size(); ++d) {
    s += "deg" + std::to_string(d + 1) + ": " + std::to_string(r.by_degree[d]) + ", ";
  }
  return s + "total " + std::to_string(r.total);
}

}  // namespace pclie

#endif  // PCLIE_STRUCTURE_HPP
