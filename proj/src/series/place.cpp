#include "asgl/place.hpp"

#include <algorithm>
#include <stdexcept>

#include "asgl/errors.hpp"

namespace asgl {

namespace {

using Value = GaloisField::Value;

// Divides by s^m (the x slot), m <= min_x.
BivarPoly shift_down(const BivarPoly& g, int m) {
  if (m == 0) return g;
  std::vector<BivarPoly::Term> terms;
  terms.reserve(g.terms().size());
  for (const auto& term : g.terms()) terms.push_back({term.x - m, term.t, term.c});
  return BivarPoly(g.field(), std::move(terms));
}

// Terms with x exponent 0, as a polynomial in t alone.
BivarPoly x_constant_part(const BivarPoly& g) {
  std::vector<BivarPoly::Term> terms;
  for (const auto& term : g.terms()) {
    if (term.x == 0) terms.push_back(term);
  }
  return BivarPoly(g.field(), std::move(terms));
}

constexpr int kExact = 1 << 28;

// sum c[k] t^(val + k), known below t^prec.
struct LaurentT {
  int val = 0;
  std::vector<Value> c;
  int prec = kExact;

  int low() const {
    for (std::size_t k = 0; k < c.size(); ++k) {
      if (c[k] != 0) return val + static_cast<int>(k);
    }
    return prec;
  }
};

LaurentT from_upoly(const UPoly& u) { return {0, u.coeffs(), kExact}; }

LaurentT mul(const GaloisField& F, const LaurentT& a, const LaurentT& b) {
  LaurentT r;
  r.prec = std::min({kExact, a.prec + b.low(), b.prec + a.low()});
  r.val = a.val + b.val;
  const int len = std::max(0, r.prec - r.val);
  r.c.assign(std::min<std::size_t>(len, a.c.size() + b.c.size()), 0);
  for (std::size_t i = 0; i < a.c.size(); ++i) {
    if (a.c[i] == 0) continue;
    for (std::size_t j = 0; j < b.c.size() && i + j < r.c.size(); ++j) {
      r.c[i + j] = F.add(r.c[i + j], F.mul(a.c[i], b.c[j]));
    }
  }
  return r;
}

LaurentT sub(const GaloisField& F, const LaurentT& a, const LaurentT& b) {
  LaurentT r;
  r.prec = std::min(a.prec, b.prec);
  r.val = std::min(a.val, b.val);
  auto at = [](const LaurentT& s, int e) -> Value {
    const int k = e - s.val;
    return k >= 0 && k < static_cast<int>(s.c.size()) ? s.c[k] : 0;
  };
  const int hi = std::min(r.prec, std::max(a.val + static_cast<int>(a.c.size()), b.val + static_cast<int>(b.c.size())));
  for (int e = r.val; e < hi; ++e) r.c.push_back(F.sub(at(a, e), at(b, e)));
  return r;
}

// 1/h for a nonzero polynomial h, known below t^prec.
LaurentT inverse(const GaloisField& F, const UPoly& h, int prec) {
  const int e = h.low_degree();
  const int n = std::max(0, prec + e);
  const Value u0inv = F.inv(h.coeff(e));
  LaurentT r{-e, std::vector<Value>(n, 0), prec};
  for (int k = 0; k < n; ++k) {
    Value acc = k == 0 ? 1 : 0;
    for (int i = 1; i <= k && e + i <= h.degree(); ++i) acc = F.sub(acc, F.mul(h.coeff(e + i), r.c[k - i]));
    r.c[k] = F.mul(acc, u0inv);
  }
  return r;
}

}  // namespace

Place Place::finite(const UPoly& pi) {
  if (pi.degree() < 1 || pi.leading() != 1) throw PreconditionError("place polynomial must be monic of positive degree");
  if (!is_irreducible(pi)) throw PreconditionError("place polynomial " + pi.to_string() + " is not irreducible");
  Place p(Kind::kFinite);
  p.pi_ = pi;
  return p;
}

int Place::degree() const {
  switch (kind_) {
    case Kind::kFinite:
      return pi_.degree();
    case Kind::kInfinity:
      return 1;
    case Kind::kGauss:
      return 0;
  }
  return 0;
}

std::string Place::to_string() const {
  switch (kind_) {
    case Kind::kFinite:
      return "pt:" + pi_.to_string("x");
    case Kind::kInfinity:
      return "inf";
    case Kind::kGauss:
      return "gauss";
  }
  return "";
}

LocalFrame::LocalFrame(const Place& place, const FieldPtr& base) : place_(place), base_(base), residue_(base) {
  if (place.is_gauss()) throw PreconditionError("the Gauss place has no (t, s) frame");
  if (!place.is_finite()) return;
  if (!place.pi().field()->same_as(*base)) throw PreconditionError("place is defined over a different field");
  const int d = place.pi().degree();
  if (d > 1) {
    long long order = 1;
    for (int i = 0; i < base->degree() * d; ++i) {
      order *= base->characteristic();
      if (order > static_cast<long long>(GaloisField::kMaxOrder)) {
        throw PreconditionError("residue field of " + place.to_string() + " is too large");
      }
    }
    residue_ = GaloisField::make(base->characteristic(), base->degree() * d);
    embedding_.emplace(base, residue_);
  }
  const auto& pc = place.pi().coeffs();
  for (Value b = 0; b < residue_->order(); ++b) {
    Value acc = 0;
    for (auto it = pc.rbegin(); it != pc.rend(); ++it) {
      acc = residue_->add(residue_->mul(acc, b), embedding_ ? (*embedding_)(*it) : *it);
    }
    if (acc == 0) {
      theta_ = b;
      return;
    }
  }
  throw std::logic_error("irreducible polynomial has no root in its splitting field");
}

RatFunc LocalFrame::lift(const RatFunc& f) const {
  if (f.field()->same_as(*residue_)) return f;
  if (embedding_ && f.field()->same_as(*base_)) return f.map_coeffs(*embedding_);
  throw PreconditionError("rational function is defined over a different field");
}

BivarPoly LocalFrame::to_local(const BivarPoly& g) const {
  const auto& L = *residue_;
  std::vector<BivarPoly::Term> out;
  if (place_.is_infinity()) {
    const int dg = g.degree_x();
    for (const auto& term : g.terms()) out.push_back({dg - term.x, term.t, term.c});
    return BivarPoly(residue_, std::move(out));
  }
  // (theta + s)^j for j up to deg_x g.
  std::vector<std::vector<Value>> binom{{1}};
  for (int j = 1; j <= g.degree_x(); ++j) {
    const auto& prev = binom.back();
    std::vector<Value> next(prev.size() + 1, 0);
    for (std::size_t i = 0; i < prev.size(); ++i) {
      next[i] = L.add(next[i], L.mul(prev[i], theta_));
      next[i + 1] = L.add(next[i + 1], prev[i]);
    }
    binom.push_back(std::move(next));
  }
  for (const auto& term : g.terms()) {
    const auto& row = binom[term.x];
    for (std::size_t i = 0; i < row.size(); ++i) {
      if (row[i] != 0) out.push_back({static_cast<int>(i), term.t, L.mul(term.c, row[i])});
    }
  }
  return BivarPoly(residue_, std::move(out));
}

LocalFrame::LocalParts LocalFrame::local_parts(const RatFunc& f) const {
  if (f.is_zero()) throw ZeroValuationError();
  const RatFunc F = lift(f);
  LocalParts parts{to_local(F.num()), to_local(F.den()), 0};
  if (place_.is_infinity()) {
    parts.shift = F.den().degree_x() - F.num().degree_x();
  } else {
    const int vn = parts.num.min_x();
    const int vd = parts.den.min_x();
    parts.num = shift_down(parts.num, vn);
    parts.den = shift_down(parts.den, vd);
    parts.shift = vn - vd;
  }
  return parts;
}

RatFunc LocalFrame::s_power(int m) const {
  if (place_.is_infinity()) {
    const RatFunc x = RatFunc::x(residue_);
    return x.pow(-m);
  }
  const RatFunc s = RatFunc::x(residue_) - RatFunc::constant(residue_, theta_);
  return s.pow(m);
}

RatFunc LocalFrame::from_local(const BivarPoly& g) const {
  RatFunc acc(residue_);
  const auto cols = g.x_coefficients();
  for (std::size_t j = 0; j < cols.size(); ++j) {
    if (cols[j].is_zero()) continue;
    acc += RatFunc(BivarPoly::from_t_poly(cols[j])) * s_power(static_cast<int>(j));
  }
  return acc;
}

int LocalFrame::s_valuation(const RatFunc& f) const { return local_parts(f).shift; }

RatFunc LocalFrame::s_leading(const RatFunc& f) const {
  const auto parts = local_parts(f);
  return RatFunc::normalize(x_constant_part(parts.num), x_constant_part(parts.den));
}

TruncSeries LocalFrame::expand(const RatFunc& f, Precision precision) const {
  if (precision.t <= 0 || precision.s <= 0) throw PreconditionError("precision must be positive");
  if (f.is_zero()) return TruncSeries(residue_, precision, precision.s);
  const auto parts = local_parts(f);
  const int v = parts.shift;
  TruncSeries out(residue_, precision, v);
  const int J = precision.s - v;
  if (J <= 0) return out;

  const auto& L = *residue_;
  const auto G = parts.num.x_coefficients();
  const auto H = parts.den.x_coefficients();
  const int e = H[0].low_degree();
  const int W = precision.t + e * (J + 1) + 1;
  const LaurentT inv0 = inverse(L, H[0], W);

  // num = den * sum Q_j s^j, solved degree by degree in s.
  std::vector<LaurentT> Q;
  Q.reserve(J);
  for (int j = 0; j < J; ++j) {
    LaurentT acc = j < static_cast<int>(G.size()) ? from_upoly(G[j]) : LaurentT{};
    for (int l = 1; l <= j && l < static_cast<int>(H.size()); ++l) {
      if (H[l].is_zero()) continue;
      acc = sub(L, acc, mul(L, from_upoly(H[l]), Q[j - l]));
    }
    Q.push_back(mul(L, acc, inv0));
    if (Q.back().prec < precision.t) throw std::logic_error("series expansion lost t-precision");
  }
  for (int j = 0; j < J; ++j) {
    for (std::size_t k = 0; k < Q[j].c.size(); ++k) {
      out.set(Q[j].val + static_cast<int>(k), v + j, Q[j].c[k]);
    }
  }
  return out;
}

int t_valuation(const RatFunc& f) {
  if (f.is_zero()) throw ZeroValuationError();
  return f.num().min_t() - f.den().min_t();
}

RatFunc t_leading(const RatFunc& f) {
  if (f.is_zero()) throw ZeroValuationError();
  auto part = [](const BivarPoly& g) {
    const int m = g.min_t();
    std::vector<BivarPoly::Term> terms;
    for (const auto& term : g.terms()) {
      if (term.t == m) terms.push_back({term.x, 0, term.c});
    }
    return BivarPoly(g.field(), std::move(terms));
  };
  return RatFunc::normalize(part(f.num()), part(f.den()));
}

RatFunc t_power(const FieldPtr& field, int m) { return RatFunc::t(field).pow(m); }

GaussSeries expand_gauss(const RatFunc& f, int precision) {
  if (precision <= 0) throw PreconditionError("precision must be positive");
  const auto& F = f.field();
  if (f.is_zero()) return GaussSeries(F, precision);
  const auto g = f.num().t_coefficients();
  const auto h = f.den().t_coefficients();
  const int vg = f.num().min_t();
  const int vh = f.den().min_t();
  const int v = vg - vh;
  GaussSeries out(F, precision);
  const int n = precision - v;
  auto rf = [](const UPoly& u) { return RatFunc(BivarPoly::from_x_poly(u)); };
  const RatFunc h0 = rf(h[vh]);
  std::vector<RatFunc> Q;
  for (int i = 0; i < n; ++i) {
    RatFunc acc = vg + i < static_cast<int>(g.size()) ? rf(g[vg + i]) : RatFunc(F);
    for (int l = 1; l <= i && vh + l < static_cast<int>(h.size()); ++l) {
      if (!h[vh + l].is_zero() && !Q[i - l].is_zero()) acc -= rf(h[vh + l]) * Q[i - l];
    }
    Q.push_back(acc / h0);
    out.set(v + i, Q.back());
  }
  return out;
}

LocalFrame frame_at(const Place& place, const FieldPtr& f_field) {
  return LocalFrame(place, place.is_finite() ? place.pi().field() : f_field);
}

LocalSeries expand_at_place(const RatFunc& f, const Place& place, Precision precision) {
  if (place.is_gauss()) return expand_gauss(f, precision.t);
  return frame_at(place, f.field()).expand(f, precision);
}

int valuation_exact(const RatFunc& f, const Place& place) {
  if (f.is_zero()) throw ZeroValuationError();
  if (place.is_gauss()) return t_valuation(f);
  return frame_at(place, f.field()).s_valuation(f);
}

std::string Membership::to_string() const {
  switch (kind) {
    case Kind::kInMaxIdeal:
      return "IN_MAX_IDEAL";
    case Kind::kNotInRing:
      return "NOT_IN_RING";
    case Kind::kUnit:
      if (residue) return "UNIT(" + residue->to_string() + ")";
      return "UNIT(" + residue_function->to_string() + ")";
  }
  return "";
}

Membership maximal_ideal_membership(const RatFunc& f, const Place& place) {
  if (f.is_zero()) return {Membership::Kind::kInMaxIdeal, std::nullopt, std::nullopt};
  if (place.is_gauss()) {
    const int v = t_valuation(f);
    if (v < 0) return {Membership::Kind::kNotInRing, std::nullopt, std::nullopt};
    if (v > 0) return {Membership::Kind::kInMaxIdeal, std::nullopt, std::nullopt};
    return {Membership::Kind::kUnit, std::nullopt, t_leading(f)};
  }
  const LocalFrame frame = frame_at(place, f.field());
  const auto parts = frame.local_parts(f);
  // f = N/D with N = num * s^max(shift, 0), D = den * s^max(-shift, 0); evaluate at t = s = 0.
  const Value d0 = parts.shift < 0 ? 0 : parts.den.constant_term();
  if (d0 == 0) return {Membership::Kind::kNotInRing, std::nullopt, std::nullopt};
  const Value n0 = parts.shift > 0 ? 0 : parts.num.constant_term();
  if (n0 == 0) return {Membership::Kind::kInMaxIdeal, std::nullopt, std::nullopt};
  const auto& L = frame.residue_field();
  return {Membership::Kind::kUnit, FieldElement(L, L->div(n0, d0)), std::nullopt};
}

}  // namespace asgl
