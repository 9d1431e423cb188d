#ifndef PCLIE_TERM_HPP
#define PCLIE_TERM_HPP

#include <cctype>
#include <compare>
#include <cstddef>
#include <map>
#include <memory>
#include <optional>
#include <string>
#include <string_view>
#include <utility>
#include <vector>

#include <gmpxx.h>

#include "pclie/error.hpp"
#include "pclie/graph.hpp"
#include "pclie/scalar.hpp"

namespace pclie {

/// Left-normed word [a_{i1}, a_{i2}, ..., a_{ir}]; letters are 1-based generator indices.
/// Ordered by length first, then lexicographically. This is the basis order everywhere.
struct Word {
  std::vector<int> letters;

  Word() = default;
  Word(std::initializer_list<int> l) : letters(l) {}
  explicit Word(std::vector<int> l) : letters(std::move(l)) {}

  std::size_t length() const { return letters.size(); }

  friend bool operator==(const Word&, const Word&) = default;
  friend std::strong_ordering operator<=>(const Word& a, const Word& b) {
    if (auto c = a.letters.size() <=> b.letters.size(); c != 0) return c;
    return a.letters <=> b.letters;
  }

  std::string to_string() const {
    if (letters.size() == 1) return "a" + std::to_string(letters[0]);
    std::string s = "[";
    for (std::size_t i = 0; i < letters.size(); ++i) {
      if (i) s += ",";
      s += "a" + std::to_string(letters[i]);
    }
    return s + "]";
  }
};

/// Per-generator occurrence counts.
struct MultiDegree {
  std::vector<int> counts;

  MultiDegree() = default;
  explicit MultiDegree(std::vector<int> c) : counts(std::move(c)) {}
  MultiDegree(std::initializer_list<int> c) : counts(c) {}

  static MultiDegree zero(int n) { return MultiDegree(std::vector<int>(static_cast<std::size_t>(n), 0)); }
  static MultiDegree unit(int n, int i) {
    auto d = zero(n);
    d.counts[static_cast<std::size_t>(i - 1)] = 1;
    return d;
  }

  int vars() const { return static_cast<int>(counts.size()); }
  int operator[](int i) const { return counts[static_cast<std::size_t>(i - 1)]; }

  int length() const {
    int s = 0;
    for (int c : counts) s += c;
    return s;
  }

  VertexSet support() const {
    std::vector<int> out;
    for (std::size_t i = 0; i < counts.size(); ++i) {
      if (counts[i]) out.push_back(static_cast<int>(i + 1));
    }
    return VertexSet(std::move(out));
  }

  MultiDegree& operator+=(const MultiDegree& o) {
    detail::require(o.counts.size() == counts.size(), "multidegrees of different arity");
    for (std::size_t i = 0; i < counts.size(); ++i) counts[i] += o.counts[i];
    return *this;
  }
  friend MultiDegree operator+(MultiDegree a, const MultiDegree& b) { return a += b; }

  std::string to_string() const {
    std::string s = "(";
    for (std::size_t i = 0; i < counts.size(); ++i) {
      if (i) s += ",";
      s += std::to_string(counts[i]);
    }
    return s + ")";
  }

  friend bool operator==(const MultiDegree&, const MultiDegree&) = default;
  friend auto operator<=>(const MultiDegree&, const MultiDegree&) = default;
};

inline MultiDegree mdeg(const Word& w, int n) {
  auto d = MultiDegree::zero(n);
  for (int a : w.letters) {
    detail::require(a >= 1 && a <= n, "generator a" + std::to_string(a) + " out of range");
    ++d.counts[static_cast<std::size_t>(a - 1)];
  }
  return d;
}

/// All multidegrees in n variables of total degree d, lexicographically ascending.
inline std::vector<MultiDegree> multidegrees_of_length(int n, int d) {
  std::vector<MultiDegree> out;
  std::vector<int> cur(static_cast<std::size_t>(n), 0);
  auto rec = [&](auto&& self, int pos, int left) -> void {
    if (pos == n - 1) {
      cur[static_cast<std::size_t>(pos)] = left;
      out.emplace_back(cur);
      return;
    }
    for (int k = 0; k <= left; ++k) {
      cur[static_cast<std::size_t>(pos)] = k;
      self(self, pos + 1, left - k);
    }
  };
  if (n >= 1) rec(rec, 0, d);
  return out;
}

/// Unevaluated Lie expression: a generator, a bracket of two terms, or a
/// rational-weighted sum of terms.
class LieTerm {
 public:
  enum class Kind { generator, bracket, sum };

  static LieTerm generator(int i) {
    auto n = std::make_shared<Node>();
    n->kind = Kind::generator;
    n->index = i;
    return LieTerm(std::move(n));
  }

  static LieTerm bracket(LieTerm l, LieTerm r) {
    auto n = std::make_shared<Node>();
    n->kind = Kind::bracket;
    n->children = {std::move(l), std::move(r)};
    return LieTerm(std::move(n));
  }

  static LieTerm sum(std::vector<std::pair<mpq_class, LieTerm>> parts) {
    auto n = std::make_shared<Node>();
    n->kind = Kind::sum;
    for (auto& [w, t] : parts) {
      n->weights.push_back(w);
      n->children.push_back(std::move(t));
    }
    return LieTerm(std::move(n));
  }

  /// Left-normed bracketing of a word.
  static LieTerm left_normed(const Word& w) {
    detail::require(w.length() >= 1, "empty word");
    LieTerm t = generator(w.letters[0]);
    for (std::size_t i = 1; i < w.length(); ++i) t = bracket(std::move(t), generator(w.letters[i]));
    return t;
  }

  Kind kind() const { return node_->kind; }
  int index() const { return node_->index; }
  const LieTerm& left() const { return node_->children[0]; }
  const LieTerm& right() const { return node_->children[1]; }
  std::size_t part_count() const { return node_->children.size(); }
  const LieTerm& part(std::size_t k) const { return node_->children[k]; }
  const mpq_class& weight(std::size_t k) const { return node_->weights[k]; }

  std::string to_string() const {
    switch (kind()) {
      case Kind::generator:
        return "a" + std::to_string(index());
      case Kind::bracket:
        return "[" + left().to_string() + "," + right().to_string() + "]";
      case Kind::sum: {
        if (part_count() == 0) return "0";
        std::string s;
        for (std::size_t k = 0; k < part_count(); ++k) {
          if (k) s += " + ";
          s += weight(k).get_str() + "*" + part(k).to_string();
        }
        return s;
      }
    }
    return {};
  }

 private:
  struct Node {
    Kind kind = Kind::generator;
    int index = 0;
    std::vector<LieTerm> children;
    std::vector<mpq_class> weights;
  };

  explicit LieTerm(std::shared_ptr<const Node> n) : node_(std::move(n)) {}

  std::shared_ptr<const Node> node_;
};

/// Multidegree of a single bracket monomial (no sums).
inline MultiDegree mdeg(const LieTerm& t, int n) {
  switch (t.kind()) {
    case LieTerm::Kind::generator:
      return mdeg(Word{t.index()}, n);
    case LieTerm::Kind::bracket:
      return mdeg(t.left(), n) + mdeg(t.right(), n);
    case LieTerm::Kind::sum:
      break;
  }
  throw InputError("multidegree is defined for monomials only, got a sum");
}

/// Generators occurring in the expression tree.
inline VertexSet supp(const LieTerm& t) {
  std::vector<int> acc;
  auto rec = [&](auto&& self, const LieTerm& u) -> void {
    if (u.kind() == LieTerm::Kind::generator) {
      acc.push_back(u.index());
      return;
    }
    for (std::size_t k = 0; k < u.part_count(); ++k) self(self, u.part(k));
  };
  rec(rec, t);
  return VertexSet(std::move(acc));
}

inline void check_range(const LieTerm& t, int n) {
  for (int v : supp(t)) {
    detail::require(v >= 1 && v <= n,
                    "generator a" + std::to_string(v) + " out of range for a graph on " + std::to_string(n) + " vertices");
  }
}

/// Folds a term through an algebra given by generator, bracket and linear-combination callbacks.
template <class Value, class Gen, class Bracket, class Combine>
Value evaluate(const LieTerm& t, Gen&& gen, Bracket&& br, Combine&& combine) {
  switch (t.kind()) {
    case LieTerm::Kind::generator:
      return gen(t.index());
    case LieTerm::Kind::bracket: {
      Value l = evaluate<Value>(t.left(), gen, br, combine);
      Value r = evaluate<Value>(t.right(), gen, br, combine);
      return br(l, r);
    }
    case LieTerm::Kind::sum: {
      std::vector<std::pair<mpq_class, Value>> parts;
      for (std::size_t k = 0; k < t.part_count(); ++k) {
        parts.emplace_back(t.weight(k), evaluate<Value>(t.part(k), gen, br, combine));
      }
      return combine(parts);
    }
  }
  throw InvariantViolation("unknown term kind");
}

namespace detail {

class ExprParser {
 public:
  ExprParser(std::string_view text, std::optional<int> n) : s_(text), n_(n) {}

  LieTerm parse() {
    LieTerm t = expr();
    skip_ws();
    if (pos_ != s_.size()) fail("unexpected '" + std::string(1, s_[pos_]) + "'");
    return t;
  }

 private:
  [[noreturn]] void fail(const std::string& msg) const {
    throw InputError("syntax error at position " + std::to_string(pos_) + ": " + msg);
  }

  void skip_ws() {
    while (pos_ < s_.size() && std::isspace(static_cast<unsigned char>(s_[pos_]))) ++pos_;
  }

  bool at_digit(std::size_t p) const { return p < s_.size() && std::isdigit(static_cast<unsigned char>(s_[p])); }

  LieTerm expr() {
    std::vector<std::pair<mpq_class, LieTerm>> parts;
    skip_ws();
    mpq_class sign = 1;
    // A leading sign not followed by a digit negates the first atom.
    if (pos_ < s_.size() && (s_[pos_] == '-' || s_[pos_] == '+') && !at_digit(pos_ + 1)) {
      if (s_[pos_] == '-') sign = -1;
      ++pos_;
    }
    parts.push_back(term(sign));
    for (;;) {
      skip_ws();
      if (pos_ < s_.size() && (s_[pos_] == '+' || s_[pos_] == '-')) {
        const mpq_class sgn = s_[pos_] == '-' ? -1 : 1;
        ++pos_;
        parts.push_back(term(sgn));
      } else {
        break;
      }
    }
    if (parts.size() == 1 && parts[0].first == 1) return parts[0].second;
    return LieTerm::sum(std::move(parts));
  }

  std::pair<mpq_class, LieTerm> term(const mpq_class& sign) {
    skip_ws();
    mpq_class w = sign;
    if (pos_ < s_.size() && (at_digit(pos_) || ((s_[pos_] == '-' || s_[pos_] == '+') && at_digit(pos_ + 1)))) {
      w *= scalar();
      skip_ws();
      if (pos_ >= s_.size() || s_[pos_] != '*') fail("expected '*' after coefficient");
      ++pos_;
    }
    return {w, atom()};
  }

  mpq_class scalar() {
    const std::size_t start = pos_;
    if (s_[pos_] == '-' || s_[pos_] == '+') ++pos_;
    while (at_digit(pos_)) ++pos_;
    if (pos_ < s_.size() && s_[pos_] == '/') {
      ++pos_;
      if (!at_digit(pos_)) fail("expected denominator");
      while (at_digit(pos_)) ++pos_;
    }
    std::string lit(s_.substr(start, pos_ - start));
    if (lit[0] == '+') lit.erase(0, 1);
    mpq_class q(lit);
    if (q.get_den() == 0) fail("zero denominator");
    q.canonicalize();
    return q;
  }

  LieTerm atom() {
    skip_ws();
    if (pos_ >= s_.size()) fail("unexpected end of input");
    if (s_[pos_] == 'a') {
      ++pos_;
      if (!at_digit(pos_)) fail("expected generator index after 'a'");
      const std::size_t start = pos_;
      while (at_digit(pos_)) ++pos_;
      if (pos_ - start > 9) fail("generator index too large");
      const int idx = std::stoi(std::string(s_.substr(start, pos_ - start)));
      if (idx < 1 || (n_ && idx > *n_)) {
        throw InputError("generator a" + std::to_string(idx) + " out of range" +
                         (n_ ? " for a graph on " + std::to_string(*n_) + " vertices" : std::string()));
      }
      return LieTerm::generator(idx);
    }
    if (s_[pos_] == '[') {
      ++pos_;
      LieTerm acc = expr();
      int items = 1;
      for (;;) {
        skip_ws();
        if (pos_ >= s_.size()) fail("unterminated bracket");
        if (s_[pos_] == ',') {
          ++pos_;
          acc = LieTerm::bracket(std::move(acc), expr());
          ++items;
        } else if (s_[pos_] == ']') {
          ++pos_;
          break;
        } else {
          fail("expected ',' or ']'");
        }
      }
      if (items < 2) fail("bracket needs at least two entries");
      return acc;
    }
    if (std::isalpha(static_cast<unsigned char>(s_[pos_]))) fail("unknown generator '" + std::string(1, s_[pos_]) + "'");
    fail("unexpected '" + std::string(1, s_[pos_]) + "'");
  }

  std::string_view s_;
  std::optional<int> n_;
  std::size_t pos_ = 0;
};

}  // namespace detail

/// Parses `expr := term (('+'|'-') term)*`, `term := [scalar '*'] atom`,
/// `atom := 'a'<int> | '[' expr (',' expr)+ ']'`. Lists longer than two are left-normed.
/// When n is given, generator indices above n are rejected.
inline LieTerm parse_expr(std::string_view text, std::optional<int> n = std::nullopt) {
  return detail::ExprParser(text, n).parse();
}

enum class VarietyKind { free, metabelian, nilpotent };

/// free:k is the degree-<=k window of the free partially commutative algebra,
/// nilpotent:m is N_m, metabelian with degree 0 is the whole metabelian algebra
/// and metabelian:k its degree-<=k truncation.
struct Variety {
  VarietyKind kind = VarietyKind::nilpotent;
  int degree = 2;

  static Variety metabelian(int truncation = 0) { return {VarietyKind::metabelian, truncation}; }
  static Variety nilpotent(int m) { return {VarietyKind::nilpotent, m}; }
  static Variety free(int k) { return {VarietyKind::free, k}; }

  static Variety parse(std::string_view text) {
    const std::string t(text);
    const auto colon = t.find(':');
    const std::string head = t.substr(0, colon);
    auto degree_of = [&]() {
      detail::require(colon != std::string::npos, "variety '" + t + "' needs a degree, e.g. " + head + ":3");
      const std::string num = t.substr(colon + 1);
      detail::require(!num.empty() && num.size() < 6 && num.find_first_not_of("0123456789") == std::string::npos,
                      "malformed degree in variety '" + t + "'");
      const int d = std::stoi(num);
      detail::require(d >= 2, "variety degree must be at least 2 in '" + t + "'");
      return d;
    };
    if (head == "metabelian") return colon == std::string::npos ? metabelian() : metabelian(degree_of());
    if (head == "nilpotent") return nilpotent(degree_of());
    if (head == "free") return free(degree_of());
    throw InputError("unknown variety '" + t + "' (expected metabelian, nilpotent:m or free:k)");
  }

  std::string to_string() const {
    switch (kind) {
      case VarietyKind::free:
        return "free:" + std::to_string(degree);
      case VarietyKind::nilpotent:
        return "nilpotent:" + std::to_string(degree);
      case VarietyKind::metabelian:
        return degree == 0 ? "metabelian" : "metabelian:" + std::to_string(degree);
    }
    return {};
  }

  friend bool operator==(const Variety&, const Variety&) = default;
};

/// The algebra an element lives in.
struct Context {
  Graph graph;
  Variety variety;
  FieldTag field;

  friend bool operator==(const Context&, const Context&) = default;
};

using ContextPtr = std::shared_ptr<const Context>;

inline ContextPtr make_context(Graph g, Variety v, FieldTag f) {
  return std::make_shared<const Context>(Context{std::move(g), v, f});
}

/// Finite combination of canonical basis monomials with nonzero coefficients.
/// Engines are responsible for only ever inserting canonical monomials.
class LiePoly {
 public:
  explicit LiePoly(ContextPtr ctx) : ctx_(std::move(ctx)) {}

  const Context& context() const { return *ctx_; }
  const ContextPtr& context_ptr() const { return ctx_; }
  int vars() const { return ctx_->graph.vertex_count(); }
  FieldTag field() const { return ctx_->field; }

  const std::map<Word, Scalar>& terms() const { return terms_; }
  bool is_zero() const { return terms_.empty(); }

  Scalar coefficient(const Word& w) const {
    auto it = terms_.find(w);
    return it == terms_.end() ? Scalar::zero(field()) : it->second;
  }

  void add_term(const Word& w, const Scalar& c) {
    if (c.is_zero()) return;
    auto [it, inserted] = terms_.emplace(w, c);
    if (!inserted) {
      it->second += c;
      if (it->second.is_zero()) terms_.erase(it);
    }
  }

  LiePoly& operator+=(const LiePoly& o) {
    check_same(o);
    for (const auto& [w, c] : o.terms_) add_term(w, c);
    return *this;
  }
  LiePoly& operator-=(const LiePoly& o) {
    check_same(o);
    for (const auto& [w, c] : o.terms_) add_term(w, -c);
    return *this;
  }
  LiePoly& operator*=(const Scalar& s) {
    if (s.is_zero()) {
      terms_.clear();
      return *this;
    }
    for (auto& [w, c] : terms_) c *= s;
    return *this;
  }
  friend LiePoly operator+(LiePoly a, const LiePoly& b) { return a += b; }
  friend LiePoly operator-(LiePoly a, const LiePoly& b) { return a -= b; }
  friend LiePoly operator*(const Scalar& s, LiePoly a) { return a *= s; }
  LiePoly operator-() const { return Scalar::from_integer(-1, field()) * *this; }

  friend bool operator==(const LiePoly& a, const LiePoly& b) {
    return *a.ctx_ == *b.ctx_ && a.terms_ == b.terms_;
  }

  /// Canonical text: monomials in basis order, explicit coefficients, "0" for zero.
  std::string to_string() const {
    if (terms_.empty()) return "0";
    std::string s;
    bool first = true;
    for (const auto& [w, c] : terms_) {
      if (first) {
        s += c.to_string();
      } else if (c.is_negative()) {
        s += " - " + (-c).to_string();
      } else {
        s += " + " + c.to_string();
      }
      s += "*" + w.to_string();
      first = false;
    }
    return s;
  }

  void check_same(const LiePoly& o) const {
    if (ctx_ != o.ctx_ && !(*ctx_ == *o.ctx_)) {
      throw InputError("context mismatch: " + ctx_->variety.to_string() + " over " + ctx_->field.name() +
                       " vs " + o.ctx_->variety.to_string() + " over " + o.ctx_->field.name());
    }
  }

 private:
  ContextPtr ctx_;
  std::map<Word, Scalar> terms_;
};

inline VertexSet supp(const LiePoly& p) {
  std::vector<int> acc;
  for (const auto& [w, c] : p.terms()) acc.insert(acc.end(), w.letters.begin(), w.letters.end());
  return VertexSet(std::move(acc));
}

/// omega_i: the monomials of length exactly i.
inline LiePoly graded_part(const LiePoly& p, int i) {
  LiePoly out(p.context_ptr());
  for (const auto& [w, c] : p.terms()) {
    if (static_cast<int>(w.length()) == i) out.add_term(w, c);
  }
  return out;
}

/// O_k: the monomials of length at most k.
inline LiePoly lower_part(const LiePoly& p, int k) {
  LiePoly out(p.context_ptr());
  for (const auto& [w, c] : p.terms()) {
    if (static_cast<int>(w.length()) <= k) out.add_term(w, c);
  }
  return out;
}

/// o_k = p - O_k(p).
inline LiePoly upper_part(const LiePoly& p, int k) { return p - lower_part(p, k); }

inline int max_length(const LiePoly& p) {
  int m = 0;
  for (const auto& [w, c] : p.terms()) m = std::max(m, static_cast<int>(w.length()));
  return m;
}

/// Groups monomials by multidegree. Groups appear in the order of their first
/// monomial in the canonical basis order, so printing the parts in sequence
/// reproduces the printing of p.
inline std::vector<std::pair<MultiDegree, LiePoly>> multihomogeneous_split(const LiePoly& p) {
  std::vector<std::pair<MultiDegree, LiePoly>> groups;
  std::map<MultiDegree, std::size_t> slot;
  for (const auto& [w, c] : p.terms()) {
    auto d = mdeg(w, p.vars());
    auto [it, fresh] = slot.emplace(d, groups.size());
    if (fresh) groups.emplace_back(d, LiePoly(p.context_ptr()));
    groups[it->second].second.add_term(w, c);
  }
  return groups;
}

/// f ~ g: alpha f = beta g with alpha, beta nonzero. Over a field this is
/// proportionality with a nonzero factor; zero is only related to zero.
inline bool proportional(const LiePoly& f, const LiePoly& g) {
  f.check_same(g);
  if (f.is_zero() || g.is_zero()) return f.is_zero() && g.is_zero();
  if (f.terms().size() != g.terms().size()) return false;
  const auto& [w0, c0] = *f.terms().begin();
  const Scalar ratio = g.coefficient(w0) / c0;
  if (ratio.is_zero()) return false;
  return ratio * f == g;
}

}  // namespace pclie

#endif  // PCLIE_TERM_HPP
