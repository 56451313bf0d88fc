#include "asgl/ratfunc.hpp"

#include "asgl/errors.hpp"

namespace asgl {

RatFunc::RatFunc(FieldPtr field) : num_(field), den_(BivarPoly::constant(field, 1)) {}

RatFunc::RatFunc(const BivarPoly& poly) : num_(poly), den_(BivarPoly::constant(poly.field(), 1)) {}

RatFunc::RatFunc(BivarPoly num, BivarPoly den, bool) : num_(std::move(num)), den_(std::move(den)) {}

RatFunc RatFunc::constant(const FieldPtr& field, Value c) { return RatFunc(BivarPoly::constant(field, c)); }

RatFunc RatFunc::normalize(const BivarPoly& num, const BivarPoly& den) {
  if (den.is_zero()) throw DomainError("rational function with zero denominator");
  const auto& F = den.field();
  if (num.is_zero()) return RatFunc(F);
  BivarPoly n = num, d = den;
  if (!d.is_constant()) {
    const BivarPoly g = gcd(num, den);
    if (!g.is_constant()) {
      n = exact_div(num, g);
      d = exact_div(den, g);
    }
  }
  const Value lead_inv = F->inv(d.leading_coeff());
  return RatFunc(n.scaled(lead_inv), d.scaled(lead_inv), true);
}

RatFunc RatFunc::operator+(const RatFunc& o) const {
  if (is_zero()) return o;
  if (o.is_zero()) return *this;
  if (den_ == o.den_) return normalize(num_ + o.num_, den_);
  return normalize(num_ * o.den_ + o.num_ * den_, den_ * o.den_);
}

RatFunc RatFunc::operator-() const { return RatFunc(-num_, den_, true); }

RatFunc RatFunc::operator-(const RatFunc& o) const { return *this + (-o); }

RatFunc RatFunc::operator*(const RatFunc& o) const {
  if (is_zero() || o.is_zero()) return RatFunc(field());
  return normalize(num_ * o.num_, den_ * o.den_);
}

RatFunc RatFunc::operator/(const RatFunc& o) const {
  if (o.is_zero()) throw DomainError("division by the zero rational function");
  return normalize(num_ * o.den_, den_ * o.num_);
}

RatFunc RatFunc::pow(long long k) const {
  if (k < 0) return (RatFunc::constant(field(), 1) / *this).pow(-k);
  // Coprimality is preserved by powers, so only the leading coefficient needs care.
  const BivarPoly n = num_.pow(static_cast<unsigned long long>(k));
  const BivarPoly d = den_.pow(static_cast<unsigned long long>(k));
  const Value lead_inv = field()->inv(d.leading_coeff());
  return RatFunc(n.scaled(lead_inv), d.scaled(lead_inv), true);
}

RatFunc RatFunc::scaled(Value c) const {
  if (c == 0) return RatFunc(field());
  return RatFunc(num_.scaled(c), den_, true);
}

RatFunc RatFunc::map_coeffs(const FieldEmbedding& emb) const {
  return RatFunc(num_.map_coeffs(emb), den_.map_coeffs(emb), true);
}

std::string RatFunc::to_string(const std::string& tvar, const std::string& xvar) const {
  // The numerator only needs parentheses around sums; the denominator also around products.
  auto wrap = [&](const BivarPoly& p, const char* breaks) {
    std::string s = p.to_string(tvar, xvar);
    if (s.find_first_of(breaks) != std::string::npos) s = "(" + s + ")";
    return s;
  };
  if (den_.is_constant()) return num_.to_string(tvar, xvar);
  return wrap(num_, "+-") + "/" + wrap(den_, "+-*");
}

RatFunc frobenius_power(const RatFunc& f, int i) {
  if (i < 0) throw PreconditionError("Frobenius power index must be nonnegative");
  return RatFunc(f.num_.frobenius(i), f.den_.frobenius(i), true);
}

bool equal_by_cross(const RatFunc& a, const RatFunc& b) { return a.num() * b.den() == b.num() * a.den(); }

Fraction Fraction::operator+(const Fraction& o) const {
  if (den == o.den) return {num + o.num, den};
  return {num * o.den + o.num * den, den * o.den};
}

Fraction Fraction::operator-(const Fraction& o) const { return *this + (-o); }

bool Fraction::equals(const Fraction& o) const { return num * o.den == o.num * den; }

}  // namespace asgl
