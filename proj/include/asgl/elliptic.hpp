#pragma once

#include <string>
#include <vector>

#include "asgl/galois_field.hpp"
#include "json.hpp"

namespace asgl {

/// y^2 = x^3 + a x + b over F_q with p >= 5 and 4a^3 + 27b^2 != 0.
class EllipticCurve {
 public:
  EllipticCurve(FieldElement a, FieldElement b);

  const FieldPtr& field() const { return a_.field(); }
  const FieldElement& a() const { return a_; }
  const FieldElement& b() const { return b_; }
  FieldElement discriminant_part() const;  // 4a^3 + 27b^2

  std::string to_string() const;

 private:
  FieldElement a_;
  FieldElement b_;
};

/// Coefficient of x^(p-1) in (x^3 + a x + b)^((p-1)/2).
FieldElement hasse_invariant(const EllipticCurve& curve);
bool is_supersingular(const EllipticCurve& curve);
FieldElement j_invariant(const EllipticCurve& curve);

/// Some curve with the given j-invariant.
EllipticCurve curve_with_j(const FieldElement& j);
/// |Aut| over an algebraically closed field: 6 at j = 0, 4 at j = 1728, else 2 (p >= 5).
int automorphism_count(const FieldElement& j);

/// Number of points over F_q including infinity, by enumeration.
long long point_count(const EllipticCurve& curve);

struct SupersingularCensus {
  int p = 0;
  FieldPtr field;                  // F_{p^2}
  std::vector<FieldElement> j;     // ascending by encoding
  // sum of 24/|Aut| over the classes; the mass formula says it equals p - 1.
  int weighted_mass_24 = 0;

  nlohmann::json to_json() const;
  std::string to_text() const;
};

/// One representative per j in F_{p^2}, ascending; throws for p < 5 or p not prime.
SupersingularCensus supersingular_census(int p);

/// j-invariants of all supersingular curves over F_{p^2}, found by enumerating every (a, b).
std::vector<FieldElement> supersingular_j_brute_force(int p);

}  // namespace asgl
