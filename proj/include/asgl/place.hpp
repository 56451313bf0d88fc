#pragma once

#include <optional>
#include <string>
#include <variant>

#include "asgl/ratfunc.hpp"
#include "asgl/series.hpp"

namespace asgl {

/// A place of k(x)/k (a closed point of P^1 or infinity), or the Gauss valuation on K(x).
class Place {
 public:
  enum class Kind { kFinite, kInfinity, kGauss };

  // pi must be monic and irreducible over its field.
  static Place finite(const UPoly& pi);
  static Place infinity() { return Place(Kind::kInfinity); }
  static Place gauss() { return Place(Kind::kGauss); }

  Kind kind() const { return kind_; }
  bool is_finite() const { return kind_ == Kind::kFinite; }
  bool is_infinity() const { return kind_ == Kind::kInfinity; }
  bool is_gauss() const { return kind_ == Kind::kGauss; }
  const UPoly& pi() const { return pi_; }
  // Residue degree over k: deg pi, 1 at infinity, 0 for the Gauss place (residue field k(x)).
  int degree() const;

  // "pt:<pi>", "inf" or "gauss".
  std::string to_string() const;

  bool operator==(const Place& o) const { return kind_ == o.kind_ && pi_ == o.pi_; }
  bool operator!=(const Place& o) const { return !(*this == o); }

 private:
  explicit Place(Kind k) : kind_(k) {}
  Kind kind_;
  UPoly pi_;
};

/**
 * Local coordinates at a finite place or infinity: s = x - theta for a fixed
 * root theta of pi in the residue field L = F_{q^d} (the least-encoded one),
 * or s = 1/x. Rational functions over k are base-changed to L.
 */
class LocalFrame {
 public:
  LocalFrame(const Place& place, const FieldPtr& base);

  const Place& place() const { return place_; }
  const FieldPtr& base_field() const { return base_; }
  const FieldPtr& residue_field() const { return residue_; }
  // theta; zero at infinity.
  FieldElement point() const { return {residue_, theta_}; }

  // f over k or L, returned over L.
  RatFunc lift(const RatFunc& f) const;

  /// f = s^shift * num(t, s) / den(t, s) with num, den coprime and not divisible by s;
  /// polynomials in (t, s) use the x slot of BivarPoly for s.
  struct LocalParts {
    BivarPoly num;
    BivarPoly den;
    int shift = 0;
  };
  LocalParts local_parts(const RatFunc& f) const;

  // Converts a polynomial in (t, s) back to a rational function in (t, x) over L.
  RatFunc from_local(const BivarPoly& g) const;
  // s^m as a rational function in (t, x) over L.
  RatFunc s_power(int m) const;

  // Exact s-adic valuation; throws ZeroValuationError for f = 0.
  int s_valuation(const RatFunc& f) const;
  // Leading s-coefficient of f: an element of k'(t) returned as a t-only RatFunc over L.
  RatFunc s_leading(const RatFunc& f) const;

  TruncSeries expand(const RatFunc& f, Precision precision) const;

 private:
  BivarPoly to_local(const BivarPoly& g) const;

  Place place_;
  FieldPtr base_;
  FieldPtr residue_;
  std::optional<FieldEmbedding> embedding_;
  GaloisField::Value theta_ = 0;
};

// Frame at a finite place or infinity for elements over f_field (the base field or the residue field).
LocalFrame frame_at(const Place& place, const FieldPtr& f_field);

// t-adic valuation of a nonzero rational function; throws ZeroValuationError for 0.
int t_valuation(const RatFunc& f);
// (f / t^v)(t = 0) as a rational function of x alone.
RatFunc t_leading(const RatFunc& f);
RatFunc t_power(const FieldPtr& field, int m);

LocalSeries expand_at_place(const RatFunc& f, const Place& place, Precision precision = {});
GaussSeries expand_gauss(const RatFunc& f, int precision);

int valuation_exact(const RatFunc& f, const Place& place);

struct Membership {
  enum class Kind { kInMaxIdeal, kUnit, kNotInRing };
  Kind kind;
  // For kUnit: the residue, an element of L (points) or of k(x) (Gauss).
  std::optional<FieldElement> residue;
  std::optional<RatFunc> residue_function;

  std::string to_string() const;
};

Membership maximal_ideal_membership(const RatFunc& f, const Place& place);

}  // namespace asgl
