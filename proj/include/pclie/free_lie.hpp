#ifndef PCLIE_FREE_LIE_HPP
#define PCLIE_FREE_LIE_HPP

#include <algorithm>
#include <cstddef>
#include <map>
#include <memory>
#include <mutex>
#include <string>
#include <utility>
#include <vector>

#include "pclie/error.hpp"
#include "pclie/linalg.hpp"
#include "pclie/term.hpp"

namespace pclie {

/// Noncommutative polynomial: letter sequence -> coefficient, lexicographic order.
using AssocPoly = std::map<std::vector<int>, Scalar>;

namespace free_lie {

inline void accumulate(AssocPoly& p, const std::vector<int>& w, const Scalar& c) {
  if (c.is_zero()) return;
  auto [it, inserted] = p.emplace(w, c);
  if (!inserted) {
    it->second += c;
    if (it->second.is_zero()) p.erase(it);
  }
}

inline AssocPoly multiply(const AssocPoly& a, const AssocPoly& b) {
  AssocPoly out;
  std::vector<int> w;
  for (const auto& [u, cu] : a) {
    for (const auto& [v, cv] : b) {
      w = u;
      w.insert(w.end(), v.begin(), v.end());
      accumulate(out, w, cu * cv);
    }
  }
  return out;
}

/// ab - ba
inline AssocPoly commutator(const AssocPoly& a, const AssocPoly& b) {
  AssocPoly out = multiply(a, b);
  for (const auto& [w, c] : multiply(b, a)) accumulate(out, w, -c);
  return out;
}

inline AssocPoly letter(int i, FieldTag f) { return AssocPoly{{std::vector<int>{i}, Scalar::one(f)}}; }

/// Associative expansion of the left-normed bracket of w.
inline AssocPoly expand_left_normed(const Word& w, FieldTag f) {
  detail::require(w.length() >= 1, "empty word");
  AssocPoly p = letter(w.letters[0], f);
  for (std::size_t i = 1; i < w.length(); ++i) p = commutator(p, letter(w.letters[i], f));
  return p;
}

/// Strictly smaller than all of its proper rotations.
inline bool is_lyndon(const std::vector<int>& w) {
  const std::size_t n = w.size();
  if (n == 0) return false;
  for (std::size_t r = 1; r < n; ++r) {
    for (std::size_t k = 0; k < n; ++k) {
      const int a = w[k];
      const int b = w[(k + r) % n];
      if (a < b) break;
      if (a > b) return false;
      if (k == n - 1) return false;  // periodic
    }
  }
  return true;
}

/// Every letter sequence with multidegree d, lexicographically.
inline std::vector<std::vector<int>> words_of_multidegree(const MultiDegree& d) {
  std::vector<int> w;
  for (int i = 1; i <= d.vars(); ++i) w.insert(w.end(), static_cast<std::size_t>(d[i]), i);
  std::vector<std::vector<int>> out;
  if (w.empty()) return out;
  do {
    out.push_back(w);
  } while (std::next_permutation(w.begin(), w.end()));
  return out;
}

inline std::vector<std::vector<int>> lyndon_words(const MultiDegree& d) {
  std::vector<std::vector<int>> out;
  for (auto& w : words_of_multidegree(d)) {
    if (is_lyndon(w)) out.push_back(std::move(w));
  }
  return out;
}

/// Lyndon words with their standard-bracketing expansions for one multidegree.
/// The expansion of a Lyndon word w equals w plus lexicographically larger
/// words, which makes coordinate extraction triangular.
class LyndonComponent {
 public:
  LyndonComponent(const MultiDegree& d, FieldTag f) : field_(f) {
    words_ = lyndon_words(d);
    for (std::size_t k = 0; k < words_.size(); ++k) index_.emplace(words_[k], k);
    std::map<std::vector<int>, AssocPoly> memo;
    for (const auto& w : words_) expansions_.push_back(standard_expansion(w, memo));
  }

  std::size_t dim() const { return words_.size(); }
  const std::vector<std::vector<int>>& words() const { return words_; }
  const AssocPoly& expansion(std::size_t k) const { return expansions_[k]; }

  /// Coordinates of a Lie element (given by its associative expansion) in the Lyndon basis.
  Vector coordinates(AssocPoly p) const {
    Vector out = zero_vector(words_.size(), field_);
    while (!p.empty()) {
      const auto& [w, c] = *p.begin();
      auto it = index_.find(w);
      detail::ensure(it != index_.end(), "leading word of a Lie element is not a Lyndon word of its multidegree");
      const std::size_t k = it->second;
      const Scalar coef = c;
      out[k] += coef;
      for (const auto& [u, cu] : expansions_[k]) accumulate(p, u, -(coef * cu));
    }
    return out;
  }

 private:
  AssocPoly standard_expansion(const std::vector<int>& w, std::map<std::vector<int>, AssocPoly>& memo) const {
    if (w.size() == 1) return letter(w[0], field_);
    if (auto it = memo.find(w); it != memo.end()) return it->second;
    // w = uv with v the longest proper suffix that is Lyndon.
    std::size_t split = 1;
    for (; split < w.size(); ++split) {
      if (is_lyndon(std::vector<int>(w.begin() + static_cast<std::ptrdiff_t>(split), w.end()))) break;
    }
    const std::vector<int> u(w.begin(), w.begin() + static_cast<std::ptrdiff_t>(split));
    const std::vector<int> v(w.begin() + static_cast<std::ptrdiff_t>(split), w.end());
    AssocPoly p = commutator(standard_expansion(u, memo), standard_expansion(v, memo));
    memo.emplace(w, p);
    return p;
  }

  FieldTag field_;
  std::vector<std::vector<int>> words_;
  std::map<std::vector<int>, std::size_t> index_;
  std::vector<AssocPoly> expansions_;
};

/// Process-wide memo of Lyndon components; graph independent.
inline std::shared_ptr<const LyndonComponent> lyndon_component(const MultiDegree& d, FieldTag f) {
  static std::mutex mu;
  static std::map<std::pair<std::uint32_t, std::vector<int>>, std::shared_ptr<const LyndonComponent>> cache;
  const auto key = std::make_pair(f.modulus(), d.counts);
  {
    std::lock_guard lock(mu);
    if (auto it = cache.find(key); it != cache.end()) return it->second;
  }
  auto comp = std::make_shared<const LyndonComponent>(d, f);
  std::lock_guard lock(mu);
  return cache.emplace(key, std::move(comp)).first->second;
}

}  // namespace free_lie
}  // namespace pclie

#endif  // PCLIE_FREE_LIE_HPP
