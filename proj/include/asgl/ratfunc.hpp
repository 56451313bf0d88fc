#pragma once

#include <string>

#include "asgl/bivar_poly.hpp"

namespace asgl {

/**
 * Rational function in t, x over F_q in canonical form.
 *
 * The numerator and denominator are coprime in F_q[t, x] and the denominator's
 * leading coefficient (lex order, x > t) is 1. Zero is 0/1. Because the form is
 * canonical, operator== compares representatives directly; equal_by_cross()
 * is the independent check.
 */
class RatFunc {
 public:
  using Value = GaloisField::Value;

  RatFunc() = default;
  explicit RatFunc(FieldPtr field);
  explicit RatFunc(const BivarPoly& poly);

  // ratfunc_normalize: gcd-reduces and normalizes num/den. Throws DomainError on den = 0.
  static RatFunc normalize(const BivarPoly& num, const BivarPoly& den);
  static RatFunc constant(const FieldPtr& field, Value c);
  static RatFunc t(const FieldPtr& field) { return RatFunc(BivarPoly::var_t(field)); }
  static RatFunc x(const FieldPtr& field) { return RatFunc(BivarPoly::var_x(field)); }

  const FieldPtr& field() const { return num_.field(); }
  const BivarPoly& num() const { return num_; }
  const BivarPoly& den() const { return den_; }
  bool is_zero() const { return num_.is_zero(); }
  bool is_polynomial() const { return den_.is_constant(); }
  bool free_of_t() const { return num_.free_of_t() && den_.free_of_t(); }
  bool free_of_x() const { return num_.free_of_x() && den_.free_of_x(); }

  RatFunc operator+(const RatFunc& o) const;
  RatFunc operator-(const RatFunc& o) const;
  RatFunc operator-() const;
  RatFunc operator*(const RatFunc& o) const;
  RatFunc operator/(const RatFunc& o) const;
  RatFunc& operator+=(const RatFunc& o) { return *this = *this + o; }
  RatFunc& operator-=(const RatFunc& o) { return *this = *this - o; }
  RatFunc pow(long long k) const;
  RatFunc scaled(Value c) const;

  RatFunc map_coeffs(const FieldEmbedding& emb) const;

  bool operator==(const RatFunc& o) const { return num_ == o.num_ && den_ == o.den_; }
  bool operator!=(const RatFunc& o) const { return !(*this == o); }

  // Canonical ASCII rendering, e.g. "(2*t*x + 2*t)/(x^2 + 2*x)".
  std::string to_string(const std::string& tvar = "t", const std::string& xvar = "x") const;

 private:
  RatFunc(BivarPoly num, BivarPoly den, bool /*already canonical*/);
  friend RatFunc frobenius_power(const RatFunc& f, int i);

  BivarPoly num_;
  BivarPoly den_;
};

/// f^(p^i) by coefficient Frobenius and exponent scaling (no multiplication).
RatFunc frobenius_power(const RatFunc& f, int i);

/// a/b == c/d decided by a*d == b*c.
bool equal_by_cross(const RatFunc& a, const RatFunc& b);

/**
 * Unreduced quotient num/den. Used for exact identity checks whose canonical
 * forms would be needlessly expensive: arithmetic never takes a gcd, and
 * equality is decided by cross-multiplication.
 */
struct Fraction {
  BivarPoly num;
  BivarPoly den;

  static Fraction of(const RatFunc& f) { return {f.num(), f.den()}; }

  Fraction operator+(const Fraction& o) const;
  Fraction operator-(const Fraction& o) const;
  Fraction operator-() const { return {-num, den}; }
  Fraction operator*(const Fraction& o) const { return {num * o.num, den * o.den}; }
  Fraction frobenius(int k) const { return {num.frobenius(k), den.frobenius(k)}; }
  bool equals(const Fraction& o) const;
};

}  // namespace asgl
