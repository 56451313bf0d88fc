#include "asgl/bivar_poly.hpp"

#include <algorithm>
#include <cstdint>
#include <sstream>

#include "asgl/errors.hpp"

namespace asgl {

namespace {

std::uint64_t pack(int x, int t) {
  return (static_cast<std::uint64_t>(static_cast<std::uint32_t>(x)) << 32) | static_cast<std::uint32_t>(t);
}

using XPoly = std::vector<UPoly>;  // polynomial in x with coefficients in F_q[t]

void trim(XPoly& a) {
  while (!a.empty() && a.back().is_zero()) a.pop_back();
}

UPoly content(const XPoly& a, const FieldPtr& F) {
  UPoly g(F);
  for (const auto& c : a) {
    g = gcd(g, c);
    if (g.degree() == 0) break;
  }
  return g;
}

XPoly divide_coeffs(const XPoly& a, const UPoly& d) {
  XPoly r;
  r.reserve(a.size());
  for (const auto& c : a) r.push_back(c / d);
  return r;
}

XPoly primitive_part(const XPoly& a, const FieldPtr& F) {
  if (a.empty()) return a;
  return divide_coeffs(a, content(a, F));
}

// lc(b)^k * a mod b, reducing one leading term at a time.
XPoly pseudo_remainder(XPoly a, const XPoly& b) {
  const int db = static_cast<int>(b.size()) - 1;
  const UPoly& lb = b.back();
  while (static_cast<int>(a.size()) - 1 >= db && !a.empty()) {
    const int shift = static_cast<int>(a.size()) - 1 - db;
    const UPoly la = a.back();
    for (auto& c : a) c = c * lb;
    for (int j = 0; j <= db; ++j) a[j + shift] = a[j + shift] - la * b[j];
    trim(a);
  }
  return a;
}

}  // namespace

BivarPoly::BivarPoly(FieldPtr field, std::vector<Term> terms) : field_(std::move(field)) {
  std::sort(terms.begin(), terms.end(),
            [](const Term& a, const Term& b) { return pack(a.x, a.t) < pack(b.x, b.t); });
  for (const auto& term : terms) {
    if (!terms_.empty() && terms_.back().x == term.x && terms_.back().t == term.t) {
      terms_.back().c = field_->add(terms_.back().c, term.c);
      if (terms_.back().c == 0) terms_.pop_back();
    } else if (term.c != 0) {
      if (term.x < 0 || term.t < 0) throw DomainError("negative exponent in polynomial");
      terms_.push_back(term);
    }
  }
}

BivarPoly BivarPoly::constant(const FieldPtr& field, Value c) { return monomial(field, c, 0, 0); }

BivarPoly BivarPoly::monomial(const FieldPtr& field, Value c, int t_exp, int x_exp) {
  return BivarPoly(field, {Term{x_exp, t_exp, c}});
}

BivarPoly BivarPoly::from_t_poly(const UPoly& p) {
  std::vector<Term> ts;
  for (int i = 0; i <= p.degree(); ++i) ts.push_back({0, i, p.coeff(i)});
  return BivarPoly(p.field(), std::move(ts));
}

BivarPoly BivarPoly::from_x_poly(const UPoly& p) {
  std::vector<Term> ts;
  for (int i = 0; i <= p.degree(); ++i) ts.push_back({i, 0, p.coeff(i)});
  return BivarPoly(p.field(), std::move(ts));
}

BivarPoly::Value BivarPoly::coeff(int t_exp, int x_exp) const {
  const auto key = pack(x_exp, t_exp);
  auto it = std::lower_bound(terms_.begin(), terms_.end(), key,
                             [](const Term& a, std::uint64_t k) { return pack(a.x, a.t) < k; });
  if (it != terms_.end() && it->x == x_exp && it->t == t_exp) return it->c;
  return 0;
}

int BivarPoly::degree_x() const { return terms_.empty() ? -1 : terms_.back().x; }

int BivarPoly::degree_t() const {
  int d = -1;
  for (const auto& term : terms_) d = std::max(d, term.t);
  return d;
}

int BivarPoly::total_degree() const {
  int d = -1;
  for (const auto& term : terms_) d = std::max(d, term.t + term.x);
  return d;
}

int BivarPoly::min_x() const { return terms_.empty() ? 0 : terms_.front().x; }

int BivarPoly::min_t() const {
  if (terms_.empty()) return 0;
  int d = terms_.front().t;
  for (const auto& term : terms_) d = std::min(d, term.t);
  return d;
}

BivarPoly BivarPoly::operator+(const BivarPoly& o) const {
  const auto& F = field_ ? field_ : o.field_;
  BivarPoly r(F);
  r.terms_.reserve(terms_.size() + o.terms_.size());
  std::size_t i = 0, j = 0;
  while (i < terms_.size() || j < o.terms_.size()) {
    if (j == o.terms_.size() ||
        (i < terms_.size() && pack(terms_[i].x, terms_[i].t) < pack(o.terms_[j].x, o.terms_[j].t))) {
      r.terms_.push_back(terms_[i++]);
    } else if (i == terms_.size() ||
               pack(o.terms_[j].x, o.terms_[j].t) < pack(terms_[i].x, terms_[i].t)) {
      r.terms_.push_back(o.terms_[j++]);
    } else {
      const Value c = F->add(terms_[i].c, o.terms_[j].c);
      if (c != 0) r.terms_.push_back({terms_[i].x, terms_[i].t, c});
      ++i;
      ++j;
    }
  }
  return r;
}

BivarPoly BivarPoly::operator-() const {
  BivarPoly r = *this;
  for (auto& term : r.terms_) term.c = field_->neg(term.c);
  return r;
}

BivarPoly BivarPoly::operator-(const BivarPoly& o) const { return *this + (-o); }

BivarPoly BivarPoly::operator*(const BivarPoly& o) const {
  const auto& F = field_ ? field_ : o.field_;
  if (terms_.empty() || o.terms_.empty()) return BivarPoly(F);
  std::vector<std::pair<std::uint64_t, Value>> prods;
  prods.reserve(terms_.size() * o.terms_.size());
  for (const auto& a : terms_) {
    for (const auto& b : o.terms_) prods.emplace_back(pack(a.x + b.x, a.t + b.t), F->mul(a.c, b.c));
  }
  std::sort(prods.begin(), prods.end(), [](const auto& a, const auto& b) { return a.first < b.first; });
  BivarPoly r(F);
  for (std::size_t i = 0; i < prods.size();) {
    Value c = 0;
    std::size_t j = i;
    for (; j < prods.size() && prods[j].first == prods[i].first; ++j) c = F->add(c, prods[j].second);
    if (c != 0) {
      r.terms_.push_back({static_cast<int>(prods[i].first >> 32),
                          static_cast<int>(prods[i].first & 0xffffffffu), c});
    }
    i = j;
  }
  return r;
}

BivarPoly BivarPoly::scaled(Value c) const {
  if (c == 0) return BivarPoly(field_);
  BivarPoly r = *this;
  for (auto& term : r.terms_) term.c = field_->mul(term.c, c);
  return r;
}

BivarPoly BivarPoly::shifted(int t_exp, int x_exp) const {
  BivarPoly r = *this;
  for (auto& term : r.terms_) {
    term.t += t_exp;
    term.x += x_exp;
  }
  return r;
}

BivarPoly BivarPoly::pow(unsigned long long k) const {
  BivarPoly result = constant(field_, 1);
  BivarPoly base = *this;
  while (k > 0) {
    if (k & 1ULL) result = result * base;
    k >>= 1;
    if (k > 0) base = base * base;
  }
  return result;
}

BivarPoly BivarPoly::frobenius(int k) const {
  int scale = 1;
  for (int i = 0; i < k; ++i) scale *= field_->characteristic();
  BivarPoly r = *this;
  for (auto& term : r.terms_) {
    term.x *= scale;
    term.t *= scale;
    term.c = field_->frobenius(term.c, k);
  }
  return r;
}

bool BivarPoly::is_pth_power() const {
  const int p = field_ ? field_->characteristic() : 2;
  return std::all_of(terms_.begin(), terms_.end(), [p](const Term& a) { return a.x % p == 0 && a.t % p == 0; });
}

BivarPoly BivarPoly::pth_root() const {
  if (!is_pth_power()) throw DomainError("polynomial is not a p-th power");
  const int p = field_->characteristic();
  BivarPoly r = *this;
  for (auto& term : r.terms_) {
    term.x /= p;
    term.t /= p;
    term.c = field_->pth_root(term.c);
  }
  return r;
}

BivarPoly::Value BivarPoly::evaluate(Value t0, Value x0) const {
  Value acc = 0;
  for (const auto& term : terms_) {
    acc = field_->add(acc, field_->mul(term.c, field_->mul(field_->pow(t0, term.t), field_->pow(x0, term.x))));
  }
  return acc;
}

BivarPoly BivarPoly::map_coeffs(const FieldEmbedding& emb) const {
  BivarPoly r(emb.target());
  r.terms_ = terms_;
  for (auto& term : r.terms_) term.c = emb(term.c);
  return r;
}

std::vector<UPoly> BivarPoly::x_coefficients() const {
  std::vector<UPoly> out(std::max(degree_x() + 1, 0), UPoly(field_));
  std::vector<std::vector<Value>> dense(out.size());
  for (const auto& term : terms_) {
    auto& d = dense[term.x];
    if (static_cast<int>(d.size()) <= term.t) d.resize(term.t + 1, 0);
    d[term.t] = term.c;
  }
  for (std::size_t j = 0; j < out.size(); ++j) out[j] = UPoly(field_, std::move(dense[j]));
  return out;
}

std::vector<UPoly> BivarPoly::t_coefficients() const {
  const int dt = degree_t();
  std::vector<std::vector<Value>> dense(std::max(dt + 1, 0));
  for (const auto& term : terms_) {
    auto& d = dense[term.t];
    if (static_cast<int>(d.size()) <= term.x) d.resize(term.x + 1, 0);
    d[term.x] = term.c;
  }
  std::vector<UPoly> out;
  out.reserve(dense.size());
  for (auto& d : dense) out.emplace_back(field_, std::move(d));
  return out;
}

BivarPoly BivarPoly::from_x_coefficients(const FieldPtr& field, const std::vector<UPoly>& cs) {
  BivarPoly r(field);
  for (std::size_t j = 0; j < cs.size(); ++j) {
    for (int i = 0; i <= cs[j].degree(); ++i) {
      if (cs[j].coeff(i) != 0) r.terms_.push_back({static_cast<int>(j), i, cs[j].coeff(i)});
    }
  }
  return r;
}

std::string format_term(const GaloisField& field, GaloisField::Value c,
                        const std::vector<std::pair<std::string, int>>& powers) {
  std::ostringstream os;
  std::string coef = field.format(c);
  if (coef.find('+') != std::string::npos) coef = "(" + coef + ")";
  bool any_var = false;
  for (const auto& [name, e] : powers) any_var = any_var || e != 0;
  if (!any_var) return coef;
  bool first = true;
  if (c != 1) {
    os << coef;
    first = false;
  }
  for (const auto& [name, e] : powers) {
    if (e == 0) continue;
    if (!first) os << "*";
    first = false;
    os << name;
    if (e != 1) os << "^" << e;
  }
  return os.str();
}

std::string BivarPoly::to_string(const std::string& tvar, const std::string& xvar) const {
  if (terms_.empty()) return "0";
  std::ostringstream os;
  for (auto it = terms_.rbegin(); it != terms_.rend(); ++it) {
    if (it != terms_.rbegin()) os << " + ";
    os << format_term(*field_, it->c, {{tvar, it->t}, {xvar, it->x}});
  }
  return os.str();
}

BivarPoly gcd(const BivarPoly& a, const BivarPoly& b) {
  const auto& F = a.field() ? a.field() : b.field();
  auto normalized = [&F](const BivarPoly& g) {
    if (g.is_zero()) return g;
    return g.scaled(F->inv(g.leading_coeff()));
  };
  if (a.is_zero()) return normalized(b);
  if (b.is_zero()) return normalized(a);

  XPoly A = a.x_coefficients();
  XPoly B = b.x_coefficients();
  const UPoly c = gcd(content(A, F), content(B, F));
  A = primitive_part(A, F);
  B = primitive_part(B, F);
  if (A.size() < B.size()) std::swap(A, B);

  // Primitive polynomial remainder sequence over F_q[t].
  bool unit = false;
  while (!B.empty()) {
    if (B.size() == 1) {
      unit = true;
      break;
    }
    XPoly R = pseudo_remainder(A, B);
    A = std::move(B);
    B = primitive_part(R, F);
  }
  XPoly g = unit ? XPoly{UPoly::constant(F, 1)} : A;
  for (auto& coef : g) coef = coef * c;
  return normalized(BivarPoly::from_x_coefficients(F, g));
}

BivarPoly exact_div(const BivarPoly& a, const BivarPoly& b) {
  if (b.is_zero()) throw DomainError("polynomial division by zero");
  const auto& F = b.field();
  XPoly A = a.x_coefficients();
  const XPoly B = b.x_coefficients();
  const int db = static_cast<int>(B.size()) - 1;
  XPoly Q(std::max(static_cast<int>(A.size()) - db, 0), UPoly(F));
  while (!A.empty() && static_cast<int>(A.size()) - 1 >= db) {
    const int shift = static_cast<int>(A.size()) - 1 - db;
    auto [q, r] = A.back().divmod(B.back());
    if (!r.is_zero()) throw DomainError("polynomial division is not exact");
    Q[shift] = Q[shift] + q;
    for (int j = 0; j <= db; ++j) A[j + shift] = A[j + shift] - q * B[j];
    trim(A);
  }
  if (!A.empty()) throw DomainError("polynomial division is not exact");
  return BivarPoly::from_x_coefficients(F, Q);
}

}  // namespace asgl
