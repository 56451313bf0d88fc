#include "asgl/series.hpp"

#include <algorithm>
#include <climits>
#include <sstream>

#include "asgl/errors.hpp"

namespace asgl {

namespace {

void check_fields(const FieldPtr& a, const FieldPtr& b) {
  if (!a || !b || !a->same_as(*b)) throw PreconditionError("series over different fields");
}

}  // namespace

TruncSeries::TruncSeries(FieldPtr field, Precision precision, int s_floor)
    : field_(std::move(field)), precision_(precision), s_floor_(s_floor) {}

TruncSeries::Value TruncSeries::coeff(int t_exp, int s_exp) const {
  const auto it = terms_.find({s_exp, t_exp});
  return it == terms_.end() ? 0 : it->second;
}

void TruncSeries::set(int t_exp, int s_exp, Value c) {
  if (t_exp >= precision_.t || s_exp >= precision_.s) return;
  if (c == 0) {
    terms_.erase({s_exp, t_exp});
  } else {
    terms_[{s_exp, t_exp}] = c;
  }
}

int TruncSeries::min_t() const {
  int m = precision_.t;
  for (const auto& [k, c] : terms_) m = std::min(m, k.second);
  return m;
}

int TruncSeries::min_s() const { return terms_.empty() ? precision_.s : terms_.begin()->first.first; }

TruncSeries TruncSeries::operator+(const TruncSeries& o) const {
  check_fields(field_, o.field_);
  TruncSeries r(field_, {std::min(precision_.t, o.precision_.t), std::min(precision_.s, o.precision_.s)},
                std::min(s_floor_, o.s_floor_));
  for (const auto& [k, c] : terms_) r.set(k.second, k.first, c);
  for (const auto& [k, c] : o.terms_) r.set(k.second, k.first, field_->add(r.coeff(k.second, k.first), c));
  return r;
}

TruncSeries TruncSeries::operator-() const {
  TruncSeries r = *this;
  for (auto& [k, c] : r.terms_) c = field_->neg(c);
  return r;
}

TruncSeries TruncSeries::operator-(const TruncSeries& o) const { return *this + (-o); }

TruncSeries TruncSeries::operator*(const TruncSeries& o) const {
  check_fields(field_, o.field_);
  // Unknown parts are t^At * (t-valuation >= vt(b)) and s^As * (s-valuation >= floor(b)).
  const int pt = std::min(precision_.t + o.min_t(), o.precision_.t + min_t());
  const int ps = std::min(precision_.s + o.s_floor_, o.precision_.s + s_floor_);
  TruncSeries r(field_, {pt, ps}, s_floor_ + o.s_floor_);
  for (const auto& [ka, ca] : terms_) {
    for (const auto& [kb, cb] : o.terms_) {
      const int s = ka.first + kb.first;
      if (s >= ps) break;  // kb iterates in increasing s
      const int t = ka.second + kb.second;
      if (t >= pt) continue;
      Value& slot = r.terms_[{s, t}];
      slot = field_->add(slot, field_->mul(ca, cb));
    }
  }
  for (auto it = r.terms_.begin(); it != r.terms_.end();) {
    it = it->second == 0 ? r.terms_.erase(it) : std::next(it);
  }
  return r;
}

TruncSeries TruncSeries::scaled(Value c) const {
  TruncSeries r(field_, precision_, s_floor_);
  if (c == 0) return r;
  for (const auto& [k, v] : terms_) r.terms_[k] = field_->mul(v, c);
  return r;
}

TruncSeries TruncSeries::frobenius(int k) const {
  long long q = 1;
  for (int i = 0; i < k; ++i) q *= field_->characteristic();
  // The error terms are raised to the p^k-th power as well, so the scaled window is valid; keep
  // the smaller of the two.
  auto scale = [q](int n) { return static_cast<int>(std::min<long long>(n, std::max<long long>(INT_MIN / 4, n * q))); };
  TruncSeries r(field_, {scale(precision_.t), scale(precision_.s)}, static_cast<int>(s_floor_ * q));
  for (const auto& [key, v] : terms_) {
    r.set(static_cast<int>(key.second * q), static_cast<int>(key.first * q), field_->frobenius(v, k));
  }
  return r;
}

TruncSeries TruncSeries::truncated(Precision p) const {
  TruncSeries r(field_, {std::min(p.t, precision_.t), std::min(p.s, precision_.s)}, s_floor_);
  for (const auto& [k, c] : terms_) r.set(k.second, k.first, c);
  return r;
}

bool TruncSeries::operator==(const TruncSeries& o) const {
  return field_->same_as(*o.field_) && precision_ == o.precision_ && terms_ == o.terms_;
}

std::string TruncSeries::to_string(const std::string& tvar, const std::string& svar) const {
  std::ostringstream os;
  bool first = true;
  for (const auto& [k, c] : terms_) {
    if (!first) os << " + ";
    first = false;
    os << format_term(*field_, c, {{tvar, k.second}, {svar, k.first}});
  }
  if (first) os << "0";
  os << " + O(" << tvar << "^" << precision_.t << ", " << svar << "^" << precision_.s << ")";
  return os.str();
}

void GaussSeries::set(int t_exp, const RatFunc& c) {
  if (t_exp >= precision_) return;
  if (c.is_zero()) {
    terms_.erase(t_exp);
  } else {
    terms_[t_exp] = c;
  }
}

RatFunc GaussSeries::coeff(int t_exp) const {
  const auto it = terms_.find(t_exp);
  return it == terms_.end() ? RatFunc(field_) : it->second;
}

int GaussSeries::min_t() const { return terms_.empty() ? precision_ : terms_.begin()->first; }

GaussSeries GaussSeries::operator+(const GaussSeries& o) const {
  check_fields(field_, o.field_);
  GaussSeries r(field_, std::min(precision_, o.precision_));
  for (const auto& [e, c] : terms_) r.set(e, c);
  for (const auto& [e, c] : o.terms_) r.set(e, r.coeff(e) + c);
  return r;
}

GaussSeries GaussSeries::operator-() const {
  GaussSeries r = *this;
  for (auto& [e, c] : r.terms_) c = -c;
  return r;
}

GaussSeries GaussSeries::operator-(const GaussSeries& o) const { return *this + (-o); }

GaussSeries GaussSeries::operator*(const GaussSeries& o) const {
  check_fields(field_, o.field_);
  GaussSeries r(field_, std::min(precision_ + o.min_t(), o.precision_ + min_t()));
  for (const auto& [ea, ca] : terms_) {
    for (const auto& [eb, cb] : o.terms_) {
      if (ea + eb >= r.precision_) break;
      r.set(ea + eb, r.coeff(ea + eb) + ca * cb);
    }
  }
  return r;
}

GaussSeries GaussSeries::frobenius(int k) const {
  long long q = 1;
  for (int i = 0; i < k; ++i) q *= field_->characteristic();
  GaussSeries r(field_, static_cast<int>(std::min<long long>(precision_, precision_ * q)));
  for (const auto& [e, c] : terms_) r.set(static_cast<int>(e * q), frobenius_power(c, k));
  return r;
}

bool GaussSeries::operator==(const GaussSeries& o) const {
  return field_->same_as(*o.field_) && precision_ == o.precision_ && terms_ == o.terms_;
}

std::string GaussSeries::to_string() const {
  std::ostringstream os;
  bool first = true;
  for (const auto& [e, c] : terms_) {
    if (!first) os << " + ";
    first = false;
    std::string coef = c.to_string();
    const bool atom = coef.find_first_of("+/* ") == std::string::npos;
    if (!atom) coef = "(" + coef + ")";
    if (e == 0) {
      os << coef;
    } else {
      if (coef != "1") os << coef << "*";
      os << "t";
      if (e != 1) os << "^" << e;
    }
  }
  if (first) os << "0";
  os << " + O(t^" << precision_ << ")";
  return os.str();
}

std::string to_string(const LocalSeries& s) {
  return std::visit([](const auto& v) { return v.to_string(); }, s);
}

LocalSeries operator+(const LocalSeries& a, const LocalSeries& b) {
  if (a.index() != b.index()) throw PreconditionError("series of different kinds");
  if (a.index() == 0) return std::get<0>(a) + std::get<0>(b);
  return std::get<1>(a) + std::get<1>(b);
}

LocalSeries operator-(const LocalSeries& a, const LocalSeries& b) {
  if (a.index() != b.index()) throw PreconditionError("series of different kinds");
  if (a.index() == 0) return std::get<0>(a) - std::get<0>(b);
  return std::get<1>(a) - std::get<1>(b);
}

LocalSeries frobenius(const LocalSeries& s, int k) {
  return std::visit([k](const auto& v) -> LocalSeries { return v.frobenius(k); }, s);
}

bool is_zero(const LocalSeries& s) {
  return std::visit([](const auto& v) { return v.is_zero(); }, s);
}

nlohmann::json to_json(const TruncSeries& s) {
  nlohmann::json terms = nlohmann::json::array();
  for (const auto& [k, c] : s.terms()) terms.push_back({{"s", k.first}, {"t", k.second}, {"c", c}});
  return {{"kind", "trunc"},
          {"field", {s.field()->characteristic(), s.field()->degree()}},
          {"precision", {s.precision().t, s.precision().s}},
          {"s_floor", s.s_floor()},
          {"terms", terms}};
}

TruncSeries truncseries_from_json(const nlohmann::json& j) {
  try {
    const auto F = GaloisField::make(j.at("field").at(0).get<int>(), j.at("field").at(1).get<int>());
    TruncSeries s(F, {j.at("precision").at(0).get<int>(), j.at("precision").at(1).get<int>()},
                  j.at("s_floor").get<int>());
    for (const auto& term : j.at("terms")) {
      const auto c = term.at("c").get<GaloisField::Value>();
      if (c >= F->order()) throw PreconditionError("series coefficient out of range");
      s.set(term.at("t").get<int>(), term.at("s").get<int>(), c);
    }
    return s;
  } catch (const nlohmann::json::exception& e) {
    throw PreconditionError(std::string("malformed series: ") + e.what());
  }
}

nlohmann::json to_json(const GaussSeries& s) {
  nlohmann::json terms = nlohmann::json::array();
  for (const auto& [e, c] : s.terms()) terms.push_back({{"t", e}, {"c", c.to_string()}});
  return {{"kind", "gauss"},
          {"field", {s.field()->characteristic(), s.field()->degree()}},
          {"precision", s.precision()},
          {"terms", terms}};
}

nlohmann::json to_json(const LocalSeries& s) {
  return std::visit([](const auto& v) { return to_json(v); }, s);
}

}  // namespace asgl
