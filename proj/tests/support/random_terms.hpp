#ifndef PCLIE_TESTS_SUPPORT_RANDOM_TERMS_HPP
#define PCLIE_TESTS_SUPPORT_RANDOM_TERMS_HPP

#include <random>
#include <utility>
#include <vector>

#include "pclie/term.hpp"

namespace pclie::testing {

/// Random bracket tree with `leaves` leaves over generators 1..n.
inline LieTerm random_monomial(std::mt19937& rng, int n, int leaves) {
  if (leaves <= 1) return LieTerm::generator(std::uniform_int_distribution<int>(1, n)(rng));
  const int left = std::uniform_int_distribution<int>(1, leaves - 1)(rng);
  return LieTerm::bracket(random_monomial(rng, n, left), random_monomial(rng, n, leaves - left));
}

/// Weighted sum of 1..max_parts random monomials of 1..max_leaves leaves.
inline LieTerm random_term(std::mt19937& rng, int n, int max_leaves, int max_parts = 3) {
  const int parts = std::uniform_int_distribution<int>(1, max_parts)(rng);
  std::vector<std::pair<mpq_class, LieTerm>> sum;
  std::uniform_int_distribution<int> num(-3, 3);
  std::uniform_int_distribution<int> den(1, 3);
  for (int k = 0; k < parts; ++k) {
    mpq_class w(num(rng), den(rng));
    w.canonicalize();
    if (w == 0) w = 1;
    sum.emplace_back(w, random_monomial(rng, n, std::uniform_int_distribution<int>(1, max_leaves)(rng)));
  }
  return LieTerm::sum(std::move(sum));
}

}  // namespace pclie::testing

#endif  // PCLIE_TESTS_SUPPORT_RANDOM_TERMS_HPP
