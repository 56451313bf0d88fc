#pragma once

#include <map>
#include <optional>
#include <string>
#include <utility>
#include <variant>

#include "asgl/ratfunc.hpp"
#include "json.hpp"

namespace asgl {

/// Truncation bounds: a series is known modulo the monomials t^i s^j with
/// i >= t or j >= s.
struct Precision {
  int t = 32;
  int s = 32;
  bool operator==(const Precision& o) const { return t == o.t && s == o.s; }
};

/**
 * Truncated series sum c_{ij} t^i s^j over a finite field.
 *
 * Models an element of k((t))((s)): for every s-degree j < precision().s the
 * coefficient (a Laurent series in t) is known modulo t^precision().t. Both
 * exponents may be negative. s_floor() is a lower bound on the s-valuation of
 * the true element and drives the precision bookkeeping of products; series
 * expanded from a rational function carry their exact valuation there.
 *
 * Elements of the two-dimensional ring k[[t, s]] are the special case of
 * nonnegative exponents, where products keep the window (t^Nt, s^Ns).
 */
class TruncSeries {
 public:
  using Value = GaloisField::Value;
  using Key = std::pair<int, int>;  // (s exponent, t exponent)

  TruncSeries() = default;
  TruncSeries(FieldPtr field, Precision precision, int s_floor = 0);

  const FieldPtr& field() const { return field_; }
  Precision precision() const { return precision_; }
  int s_floor() const { return s_floor_; }
  const std::map<Key, Value>& terms() const { return terms_; }

  Value coeff(int t_exp, int s_exp) const;
  // Terms outside the window are dropped.
  void set(int t_exp, int s_exp, Value c);
  void set_s_floor(int v) { s_floor_ = v; }

  bool is_zero() const { return terms_.empty(); }
  int min_t() const;  // precision().t when no terms are known
  int min_s() const;  // precision().s when no terms are known

  TruncSeries operator+(const TruncSeries& o) const;
  TruncSeries operator-(const TruncSeries& o) const;
  TruncSeries operator-() const;
  TruncSeries operator*(const TruncSeries& o) const;
  TruncSeries scaled(Value c) const;
  // f^(p^k) by coefficient Frobenius and exponent scaling, within the same window.
  TruncSeries frobenius(int k = 1) const;
  TruncSeries truncated(Precision p) const;

  bool operator==(const TruncSeries& o) const;
  bool operator!=(const TruncSeries& o) const { return !(*this == o); }

  // Terms sorted by (s exponent, t exponent), then "+ O(t^Nt, s^Ns)".
  std::string to_string(const std::string& tvar = "t", const std::string& svar = "s") const;

 private:
  FieldPtr field_;
  Precision precision_;
  int s_floor_ = 0;
  std::map<Key, Value> terms_;
};

/**
 * Series sum r_i(x) t^i with exact rational-function coefficients r_i in k(x),
 * known modulo t^precision(). Elements of the completion of K(x) at the
 * Gauss (t-adic) valuation.
 */
class GaussSeries {
 public:
  GaussSeries() = default;
  GaussSeries(FieldPtr field, int precision) : field_(std::move(field)), precision_(precision) {}

  const FieldPtr& field() const { return field_; }
  int precision() const { return precision_; }
  const std::map<int, RatFunc>& terms() const { return terms_; }
  void set(int t_exp, const RatFunc& c);
  RatFunc coeff(int t_exp) const;

  bool is_zero() const { return terms_.empty(); }
  int min_t() const;

  GaussSeries operator+(const GaussSeries& o) const;
  GaussSeries operator-(const GaussSeries& o) const;
  GaussSeries operator-() const;
  GaussSeries operator*(const GaussSeries& o) const;
  GaussSeries frobenius(int k = 1) const;

  bool operator==(const GaussSeries& o) const;
  bool operator!=(const GaussSeries& o) const { return !(*this == o); }

  std::string to_string() const;

 private:
  FieldPtr field_;
  int precision_ = 0;
  std::map<int, RatFunc> terms_;
};

using LocalSeries = std::variant<TruncSeries, GaussSeries>;

std::string to_string(const LocalSeries& s);
LocalSeries operator+(const LocalSeries& a, const LocalSeries& b);
LocalSeries operator-(const LocalSeries& a, const LocalSeries& b);
LocalSeries frobenius(const LocalSeries& s, int k = 1);
bool is_zero(const LocalSeries& s);

nlohmann::json to_json(const TruncSeries& s);
TruncSeries truncseries_from_json(const nlohmann::json& j);
nlohmann::json to_json(const GaussSeries& s);
nlohmann::json to_json(const LocalSeries& s);

}  // namespace asgl
