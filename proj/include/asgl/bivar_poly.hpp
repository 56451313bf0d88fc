#pragma once

#include <string>
#include <vector>

#include "asgl/galois_field.hpp"
#include "asgl/upoly.hpp"

namespace asgl {

/**
 * Sparse polynomial in two variables t, x over a finite field.
 *
 * Terms are kept sorted by (x exponent, t exponent) ascending with no zero
 * coefficients; the last term is the leading term of the lexicographic order
 * with x > t. The same type holds local polynomials in (t, s); only the
 * rendering changes.
 */
class BivarPoly {
 public:
  using Value = GaloisField::Value;

  struct Term {
    int x;
    int t;
    Value c;
    bool operator==(const Term& o) const { return x == o.x && t == o.t && c == o.c; }
  };

  BivarPoly() = default;
  explicit BivarPoly(FieldPtr field) : field_(std::move(field)) {}
  // Combines duplicates and drops zeros; input order is irrelevant.
  BivarPoly(FieldPtr field, std::vector<Term> terms);

  static BivarPoly constant(const FieldPtr& field, Value c);
  static BivarPoly monomial(const FieldPtr& field, Value c, int t_exp, int x_exp);
  static BivarPoly var_t(const FieldPtr& field) { return monomial(field, 1, 1, 0); }
  static BivarPoly var_x(const FieldPtr& field) { return monomial(field, 1, 0, 1); }
  static BivarPoly from_t_poly(const UPoly& p);  // p(t)
  static BivarPoly from_x_poly(const UPoly& p);  // p(x)

  const FieldPtr& field() const { return field_; }
  const std::vector<Term>& terms() const { return terms_; }
  bool is_zero() const { return terms_.empty(); }
  bool is_constant() const { return terms_.empty() || (terms_.size() == 1 && terms_[0].x == 0 && terms_[0].t == 0); }
  Value leading_coeff() const { return terms_.empty() ? 0 : terms_.back().c; }
  Value coeff(int t_exp, int x_exp) const;
  Value constant_term() const { return coeff(0, 0); }

  int degree_x() const;  // -1 for zero
  int degree_t() const;
  int total_degree() const;
  int min_x() const;  // lowest x exponent present; 0 for zero
  int min_t() const;
  bool free_of_t() const { return degree_t() <= 0; }
  bool free_of_x() const { return degree_x() <= 0; }

  BivarPoly operator+(const BivarPoly& o) const;
  BivarPoly operator-(const BivarPoly& o) const;
  BivarPoly operator-() const;
  BivarPoly operator*(const BivarPoly& o) const;
  BivarPoly& operator+=(const BivarPoly& o) { return *this = *this + o; }
  BivarPoly scaled(Value c) const;
  BivarPoly shifted(int t_exp, int x_exp) const;  // times t^a x^b, a, b >= 0
  BivarPoly pow(unsigned long long k) const;
  BivarPoly frobenius(int k = 1) const;  // f^(p^k), coefficientwise Frobenius and exponent scaling

  bool is_pth_power() const;
  BivarPoly pth_root() const;  // requires is_pth_power()

  Value evaluate(Value t0, Value x0) const;
  BivarPoly map_coeffs(const FieldEmbedding& emb) const;

  // f = sum_j c_j(t) x^j, returned as [c_0, c_1, ...].
  std::vector<UPoly> x_coefficients() const;
  // f = sum_i d_i(x) t^i, returned as [d_0, d_1, ...].
  std::vector<UPoly> t_coefficients() const;
  static BivarPoly from_x_coefficients(const FieldPtr& field, const std::vector<UPoly>& cs);

  bool operator==(const BivarPoly& o) const { return terms_ == o.terms_; }
  bool operator!=(const BivarPoly& o) const { return !(*this == o); }

  std::string to_string(const std::string& tvar = "t", const std::string& xvar = "x") const;

 private:
  FieldPtr field_;
  std::vector<Term> terms_;
};

// Greatest common divisor in F_q[t, x], scaled so its leading coefficient is 1.
BivarPoly gcd(const BivarPoly& a, const BivarPoly& b);

// a / b when b divides a; throws DomainError otherwise.
BivarPoly exact_div(const BivarPoly& a, const BivarPoly& b);

// Formats one coefficient*monomial term; exponents may be negative.
std::string format_term(const GaloisField& field, GaloisField::Value c,
                        const std::vector<std::pair<std::string, int>>& powers);

}  // namespace asgl
