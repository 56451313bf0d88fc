#include "asgl/upoly.hpp"

#include <sstream>

#include "asgl/errors.hpp"

namespace asgl {

UPoly::UPoly(FieldPtr field, std::vector<Value> coeffs) : field_(std::move(field)), c_(std::move(coeffs)) {
  trim();
}

UPoly UPoly::constant(const FieldPtr& field, Value c) { return UPoly(field, {c}); }

UPoly UPoly::monomial(const FieldPtr& field, Value c, int degree) {
  std::vector<Value> v(degree + 1, 0);
  v[degree] = c;
  return UPoly(field, std::move(v));
}

UPoly UPoly::from_code(const FieldPtr& field, int degree, unsigned long long code) {
  std::vector<Value> v(degree + 1, 0);
  for (int i = 0; i < degree; ++i) {
    v[i] = static_cast<Value>(code % field->order());
    code /= field->order();
  }
  v[degree] = 1;
  return UPoly(field, std::move(v));
}

void UPoly::trim() {
  while (!c_.empty() && c_.back() == 0) c_.pop_back();
}

int UPoly::low_degree() const {
  for (std::size_t i = 0; i < c_.size(); ++i) {
    if (c_[i] != 0) return static_cast<int>(i);
  }
  return -1;
}

UPoly UPoly::operator+(const UPoly& o) const {
  const auto& F = field_ ? field_ : o.field_;
  std::vector<Value> r(std::max(c_.size(), o.c_.size()), 0);
  for (std::size_t i = 0; i < r.size(); ++i) r[i] = F->add(coeff(static_cast<int>(i)), o.coeff(static_cast<int>(i)));
  return UPoly(F, std::move(r));
}

UPoly UPoly::operator-() const {
  std::vector<Value> r(c_.size());
  for (std::size_t i = 0; i < c_.size(); ++i) r[i] = field_->neg(c_[i]);
  return UPoly(field_, std::move(r));
}

UPoly UPoly::operator-(const UPoly& o) const { return *this + (-o); }

UPoly UPoly::operator*(const UPoly& o) const {
  const auto& F = field_ ? field_ : o.field_;
  if (c_.empty() || o.c_.empty()) return UPoly(F);
  std::vector<Value> r(c_.size() + o.c_.size() - 1, 0);
  for (std::size_t i = 0; i < c_.size(); ++i) {
    if (c_[i] == 0) continue;
    for (std::size_t j = 0; j < o.c_.size(); ++j) {
      if (o.c_[j] == 0) continue;
      r[i + j] = F->add(r[i + j], F->mul(c_[i], o.c_[j]));
    }
  }
  return UPoly(F, std::move(r));
}

UPoly UPoly::scaled(Value c) const {
  std::vector<Value> r(c_.size());
  for (std::size_t i = 0; i < c_.size(); ++i) r[i] = field_->mul(c_[i], c);
  return UPoly(field_, std::move(r));
}

UPoly UPoly::shifted(int k) const {
  if (c_.empty()) return *this;
  std::vector<Value> r(k, 0);
  r.insert(r.end(), c_.begin(), c_.end());
  return UPoly(field_, std::move(r));
}

std::pair<UPoly, UPoly> UPoly::divmod(const UPoly& d) const {
  if (d.is_zero()) throw DomainError("polynomial division by zero");
  const auto& F = d.field_;
  std::vector<Value> rem = c_;
  const int dd = d.degree();
  if (degree() < dd) return {UPoly(F), *this};
  std::vector<Value> quot(degree() - dd + 1, 0);
  const Value lead_inv = F->inv(d.leading());
  for (int i = degree(); i >= dd; --i) {
    const Value c = rem[i];
    if (c == 0) continue;
    const Value factor = F->mul(c, lead_inv);
    quot[i - dd] = factor;
    for (int j = 0; j <= dd; ++j) rem[i - dd + j] = F->sub(rem[i - dd + j], F->mul(factor, d.c_[j]));
  }
  return {UPoly(F, std::move(quot)), UPoly(F, std::move(rem))};
}

UPoly UPoly::monic() const {
  if (c_.empty()) return *this;
  return scaled(field_->inv(leading()));
}

UPoly::Value UPoly::eval(Value x) const {
  Value acc = 0;
  for (auto it = c_.rbegin(); it != c_.rend(); ++it) acc = field_->add(field_->mul(acc, x), *it);
  return acc;
}

UPoly UPoly::frobenius(int k) const {
  if (c_.empty()) return *this;
  long long scale = 1;
  for (int i = 0; i < k; ++i) scale *= field_->characteristic();
  std::vector<Value> r(static_cast<std::size_t>(degree()) * scale + 1, 0);
  for (std::size_t i = 0; i < c_.size(); ++i) r[i * scale] = field_->frobenius(c_[i], k);
  return UPoly(field_, std::move(r));
}

UPoly UPoly::pow_mod(unsigned long long e, const UPoly& m) const {
  UPoly result = constant(m.field(), 1) % m;
  UPoly base = *this % m;
  while (e > 0) {
    if (e & 1ULL) result = (result * base) % m;
    base = (base * base) % m;
    e >>= 1;
  }
  return result;
}

std::string UPoly::to_string(const std::string& var) const {
  if (c_.empty()) return "0";
  std::ostringstream os;
  bool first = true;
  for (int i = degree(); i >= 0; --i) {
    if (c_[i] == 0) continue;
    if (!first) os << " + ";
    first = false;
    std::string coef = field_->format(c_[i]);
    if (coef.find('+') != std::string::npos) coef = "(" + coef + ")";
    if (i == 0) {
      os << coef;
      continue;
    }
    if (c_[i] != 1) os << coef << "*";
    os << var;
    if (i > 1) os << "^" << i;
  }
  return os.str();
}

UPoly gcd(const UPoly& a, const UPoly& b) {
  UPoly x = a, y = b;
  while (!y.is_zero()) {
    UPoly r = x % y;
    x = std::move(y);
    y = std::move(r);
  }
  return x.monic();
}

bool is_irreducible(const UPoly& f) {
  // Rabin: f | X^(q^n) - X, and gcd(f, X^(q^(n/r)) - X) = 1 for each prime r | n.
  const int n = f.degree();
  if (n < 1) return false;
  if (n == 1) return true;
  const auto& F = f.field();
  const UPoly m = f.monic();
  const UPoly x = UPoly::monomial(F, 1, 1);
  auto x_pow_q_iter = [&](int k) {
    UPoly r = x;
    for (int i = 0; i < k; ++i) r = r.pow_mod(F->order(), m);
    return r;
  };
  if (!((x_pow_q_iter(n) - x) % m).is_zero()) return false;
  for (int r = 2; r <= n; ++r) {
    if (n % r != 0 || !is_prime(r)) continue;
    if (gcd(x_pow_q_iter(n / r) - x, m).degree() != 0) return false;
  }
  return true;
}

}  // namespace asgl
