#ifndef PCLIE_TESTS_SUPPORT_POLY_TERMS_HPP
#define PCLIE_TESTS_SUPPORT_POLY_TERMS_HPP

#include <utility>
#include <vector>

#include "pclie/term.hpp"

namespace pclie::testing {

/// The term sum_w c_w [w] for a normal form, so it can be fed back to nf.
inline LieTerm as_term(const LiePoly& p) {
  std::vector<std::pair<mpq_class, LieTerm>> parts;
  for (const auto& [w, c] : p.terms()) {
    const mpq_class q = p.field().is_rational() ? c.rational() : mpq_class(c.residue());
    parts.emplace_back(q, LieTerm::left_normed(w));
  }
  if (parts.empty()) return LieTerm::sum({{mpq_class(0), LieTerm::generator(1)}});
  return LieTerm::sum(std::move(parts));
}

}  // namespace pclie::testing

#endif  // PCLIE_TESTS_SUPPORT_POLY_TERMS_HPP
