#ifndef PCLIE_SCALAR_HPP
#define PCLIE_SCALAR_HPP

#include <cstdint>
#include <string>
#include <string_view>
#include <variant>

#include <gmpxx.h>

#include "pclie/error.hpp"

namespace pclie {

/// Names the coefficient field: the rationals (modulus 0) or GF(p).
class FieldTag {
 public:
  constexpr FieldTag() = default;

  static constexpr FieldTag rationals() { return FieldTag(); }

  static FieldTag prime(std::uint32_t p) {
    detail::require(p >= 2 && p < (1u << 16), "field modulus must satisfy 2 <= p < 65536");
    for (std::uint32_t d = 2; d * d <= p; ++d) {
      detail::require(p % d != 0, "field modulus " + std::to_string(p) + " is not prime");
    }
    FieldTag t;
    t.modulus_ = p;
    return t;
  }

  constexpr bool is_rational() const { return modulus_ == 0; }
  constexpr std::uint32_t modulus() const { return modulus_; }

  std::string name() const { return is_rational() ? "Q" : "GF(" + std::to_string(modulus_) + ")"; }

  friend constexpr bool operator==(FieldTag, FieldTag) = default;

 private:
  std::uint32_t modulus_ = 0;
};

/// Exact field element. Rationals are kept reduced with positive denominator;
/// prime-field residues are kept in [0, p).
class Scalar {
 public:
  Scalar() : field_(FieldTag::rationals()), value_(mpq_class(0)) {}

  static Scalar zero(FieldTag f) { return from_integer(0, f); }
  static Scalar one(FieldTag f) { return from_integer(1, f); }

  static Scalar from_integer(long v, FieldTag f) { return from_rational(mpq_class(v), f); }

  /// Maps a rational into the field; fails when the denominator vanishes mod p.
  static Scalar from_rational(const mpq_class& q, FieldTag f) {
    Scalar s;
    s.field_ = f;
    if (f.is_rational()) {
      mpq_class c(q);
      c.canonicalize();
      s.value_ = std::move(c);
      return s;
    }
    const std::uint32_t p = f.modulus();
    const std::uint32_t num = reduce_mod(q.get_num(), p);
    const std::uint32_t den = reduce_mod(q.get_den(), p);
    detail::require(den != 0, "denominator of " + q.get_str() + " vanishes in " + f.name());
    s.value_ = mul_mod(num, inv_mod(den, p), p);
    return s;
  }

  /// Parses `[+|-]int[/int]`.
  static Scalar parse(std::string_view text, FieldTag f) {
    std::string t(text);
    detail::require(!t.empty(), "empty scalar literal");
    std::size_t i = 0;
    if (t[0] == '+' || t[0] == '-') i = 1;
    const auto slash = t.find('/');
    auto digits = [&](std::size_t from, std::size_t to) {
      if (from >= to) return false;
      for (std::size_t k = from; k < to; ++k) {
        if (t[k] < '0' || t[k] > '9') return false;
      }
      return true;
    };
    const std::size_t num_end = slash == std::string::npos ? t.size() : slash;
    detail::require(digits(i, num_end), "malformed scalar literal '" + t + "'");
    mpz_class num(t.substr(i, num_end - i));
    if (t[0] == '-') num = -num;
    mpz_class den(1);
    if (slash != std::string::npos) {
      detail::require(digits(slash + 1, t.size()), "malformed scalar literal '" + t + "'");
      den = mpz_class(t.substr(slash + 1));
      detail::require(den != 0, "zero denominator in scalar literal '" + t + "'");
    }
    return from_rational(mpq_class(num, den), f);
  }

  FieldTag field() const { return field_; }

  bool is_zero() const {
    if (field_.is_rational()) return sgn(rational()) == 0;
    return residue() == 0;
  }
  bool is_one() const {
    if (field_.is_rational()) return rational() == 1;
    return residue() == 1;
  }

  const mpq_class& rational() const { return std::get<mpq_class>(value_); }
  std::uint32_t residue() const { return std::get<std::uint32_t>(value_); }

  Scalar& operator+=(const Scalar& o) {
    check_same(o);
    if (field_.is_rational()) {
      std::get<mpq_class>(value_) += o.rational();
    } else {
      value_ = static_cast<std::uint32_t>((residue() + o.residue()) % field_.modulus());
    }
    return *this;
  }
  Scalar& operator-=(const Scalar& o) {
    check_same(o);
    if (field_.is_rational()) {
      std::get<mpq_class>(value_) -= o.rational();
    } else {
      const std::uint32_t p = field_.modulus();
      value_ = static_cast<std::uint32_t>((residue() + p - o.residue()) % p);
    }
    return *this;
  }
  Scalar& operator*=(const Scalar& o) {
    check_same(o);
    if (field_.is_rational()) {
      std::get<mpq_class>(value_) *= o.rational();
    } else {
      value_ = mul_mod(residue(), o.residue(), field_.modulus());
    }
    return *this;
  }
  Scalar& operator/=(const Scalar& o) { return *this *= o.inverse(); }

  Scalar operator-() const {
    Scalar r(*this);
    if (field_.is_rational()) {
      std::get<mpq_class>(r.value_) = -rational();
    } else if (residue() != 0) {
      r.value_ = field_.modulus() - residue();
    }
    return r;
  }

  Scalar inverse() const {
    detail::require(!is_zero(), "inversion of zero");
    Scalar r(*this);
    if (field_.is_rational()) {
      std::get<mpq_class>(r.value_) = 1 / rational();
    } else {
      r.value_ = inv_mod(residue(), field_.modulus());
    }
    return r;
  }

  friend Scalar operator+(Scalar a, const Scalar& b) { return a += b; }
  friend Scalar operator-(Scalar a, const Scalar& b) { return a -= b; }
  friend Scalar operator*(Scalar a, const Scalar& b) { return a *= b; }
  friend Scalar operator/(Scalar a, const Scalar& b) { return a /= b; }

  friend bool operator==(const Scalar& a, const Scalar& b) {
    if (a.field_ != b.field_) return false;
    if (a.field_.is_rational()) return a.rational() == b.rational();
    return a.residue() == b.residue();
  }

  /// Canonical literal: `n`, `-n`, or `n/d`; residues print in [0, p).
  std::string to_string() const {
    if (field_.is_rational()) return rational().get_str();
    return std::to_string(residue());
  }

  /// Sign used when printing sums: residues are never negative.
  bool is_negative() const { return field_.is_rational() && sgn(rational()) < 0; }

 private:
  void check_same(const Scalar& o) const {
    if (field_ != o.field_) {
      throw InputError("mixed coefficient fields: " + field_.name() + " and " + o.field_.name());
    }
  }

  static std::uint32_t reduce_mod(const mpz_class& z, std::uint32_t p) {
    mpz_class r = z % p;
    if (r < 0) r += p;
    return static_cast<std::uint32_t>(r.get_ui());
  }
  static std::uint32_t mul_mod(std::uint32_t a, std::uint32_t b, std::uint32_t p) {
    return static_cast<std::uint32_t>((static_cast<std::uint64_t>(a) * b) % p);
  }
  static std::uint32_t inv_mod(std::uint32_t a, std::uint32_t p) {
    // Fermat: a^(p-2).
    std::uint32_t result = 1;
    std::uint32_t base = a % p;
    for (std::uint32_t e = p - 2; e > 0; e >>= 1) {
      if (e & 1u) result = mul_mod(result, base, p);
      base = mul_mod(base, base, p);
    }
    return result;
  }

  FieldTag field_;
  std::variant<mpq_class, std::uint32_t> value_;
};

}  // namespace pclie

#endif  // PCLIE_SCALAR_HPP
