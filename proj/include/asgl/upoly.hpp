#pragma once

#include <string>
#include <utility>
#include <vector>

#include "asgl/galois_field.hpp"

namespace asgl {

/// Dense univariate polynomial over a finite field; coefficients low to high,
/// no trailing zeros (the zero polynomial has no coefficients).
class UPoly {
 public:
  using Value = GaloisField::Value;

  UPoly() = default;
  explicit UPoly(FieldPtr field) : field_(std::move(field)) {}
  UPoly(FieldPtr field, std::vector<Value> coeffs);

  static UPoly constant(const FieldPtr& field, Value c);
  static UPoly monomial(const FieldPtr& field, Value c, int degree);
  // Monic polynomial of the given degree whose low coefficients are the base-q digits of code.
  static UPoly from_code(const FieldPtr& field, int degree, unsigned long long code);

  const FieldPtr& field() const { return field_; }
  const std::vector<Value>& coeffs() const { return c_; }
  int degree() const { return static_cast<int>(c_.size()) - 1; }
  bool is_zero() const { return c_.empty(); }
  Value coeff(int i) const { return i >= 0 && i < static_cast<int>(c_.size()) ? c_[i] : 0; }
  Value leading() const { return c_.empty() ? 0 : c_.back(); }
  // Exponent of the lowest nonzero term; the zero polynomial has none.
  int low_degree() const;

  UPoly operator+(const UPoly& o) const;
  UPoly operator-(const UPoly& o) const;
  UPoly operator-() const;
  UPoly operator*(const UPoly& o) const;
  UPoly scaled(Value c) const;
  UPoly shifted(int k) const;  // times X^k, k >= 0

  std::pair<UPoly, UPoly> divmod(const UPoly& d) const;
  UPoly operator/(const UPoly& d) const { return divmod(d).first; }
  UPoly operator%(const UPoly& d) const { return divmod(d).second; }

  UPoly monic() const;
  Value eval(Value x) const;
  UPoly frobenius(int k = 1) const;  // f^(p^k)
  UPoly pow_mod(unsigned long long e, const UPoly& m) const;

  bool operator==(const UPoly& o) const { return c_ == o.c_; }
  bool operator!=(const UPoly& o) const { return c_ != o.c_; }

  std::string to_string(const std::string& var = "x") const;

 private:
  void trim();

  FieldPtr field_;
  std::vector<Value> c_;
};

UPoly gcd(const UPoly& a, const UPoly& b);  // monic, or zero
bool is_irreducible(const UPoly& f);

}  // namespace asgl
