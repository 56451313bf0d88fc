#include "asgl/elliptic.hpp"

#include <algorithm>
#include <set>
#include <sstream>

#include "asgl/errors.hpp"

namespace asgl {

namespace {

using Value = GaloisField::Value;

bool is_prime(int p) {
  if (p < 2) return false;
  for (int d = 2; d * d <= p; ++d) {
    if (p % d == 0) return false;
  }
  return true;
}

FieldElement c(const FieldPtr& F, long long k) { return FieldElement::from_int(F, k); }

}  // namespace

EllipticCurve::EllipticCurve(FieldElement a, FieldElement b) : a_(std::move(a)), b_(std::move(b)) {
  if (!a_.field()->same_as(*b_.field())) throw PreconditionError("curve coefficients live in different fields");
  if (a_.field()->characteristic() < 5) throw PreconditionError("short Weierstrass curves need characteristic >= 5");
  if (discriminant_part().is_zero()) throw PreconditionError("singular curve: 4a^3 + 27b^2 = 0");
}

FieldElement EllipticCurve::discriminant_part() const {
  const auto& F = field();
  return c(F, 4) * a_.pow(3) + c(F, 27) * b_.pow(2);
}

std::string EllipticCurve::to_string() const {
  return "y^2 = x^3 + (" + a_.to_string() + ")*x + (" + b_.to_string() + ")";
}

FieldElement hasse_invariant(const EllipticCurve& curve) {
  const auto& F = *curve.field();
  const int p = F.characteristic();
  const std::vector<Value> cubic{curve.b().value(), curve.a().value(), 0, 1};
  std::vector<Value> acc{1};
  for (int e = 0; e < (p - 1) / 2; ++e) {
    std::vector<Value> next(acc.size() + 3, 0);
    for (std::size_t i = 0; i < acc.size(); ++i) {
      if (acc[i] == 0) continue;
      for (std::size_t k = 0; k < cubic.size(); ++k) next[i + k] = F.add(next[i + k], F.mul(acc[i], cubic[k]));
    }
    acc = std::move(next);
  }
  return {curve.field(), acc[p - 1]};
}

bool is_supersingular(const EllipticCurve& curve) { return hasse_invariant(curve).is_zero(); }

FieldElement j_invariant(const EllipticCurve& curve) {
  const auto& F = curve.field();
  const auto a3 = c(F, 4) * curve.a().pow(3);
  return c(F, 1728) * a3 / curve.discriminant_part();
}

EllipticCurve curve_with_j(const FieldElement& j) {
  const auto& F = j.field();
  const auto k1728 = c(F, 1728);
  if (j.is_zero()) return {c(F, 0), c(F, 1)};
  if (j == k1728) return {c(F, 1), c(F, 0)};
  const auto m = k1728 - j;
  return {c(F, 3) * j * m, c(F, 2) * j * m * m};
}

int automorphism_count(const FieldElement& j) {
  if (j.is_zero()) return 6;
  if (j == c(j.field(), 1728)) return 4;
  return 2;
}

long long point_count(const EllipticCurve& curve) {
  const auto& F = *curve.field();
  // Number of square roots of each value.
  std::vector<int> roots(F.order(), 0);
  for (Value y = 0; y < F.order(); ++y) ++roots[F.mul(y, y)];
  long long n = 1;
  for (Value x = 0; x < F.order(); ++x) {
    const Value rhs = F.add(F.add(F.mul(F.mul(x, x), x), F.mul(curve.a().value(), x)), curve.b().value());
    n += roots[rhs];
  }
  return n;
}

SupersingularCensus supersingular_census(int p) {
  if (!is_prime(p) || p < 5) throw PreconditionError("the census needs a prime p >= 5");
  SupersingularCensus census;
  census.p = p;
  census.field = GaloisField::make(p, 2);
  for (Value v = 0; v < census.field->order(); ++v) {
    const FieldElement j(census.field, v);
    if (!is_supersingular(curve_with_j(j))) continue;
    census.j.push_back(j);
    census.weighted_mass_24 += 24 / automorphism_count(j);
  }
  return census;
}

std::vector<FieldElement> supersingular_j_brute_force(int p) {
  if (!is_prime(p) || p < 5) throw PreconditionError("the census needs a prime p >= 5");
  const auto F = GaloisField::make(p, 2);
  std::set<Value> js;
  for (Value a = 0; a < F->order(); ++a) {
    for (Value b = 0; b < F->order(); ++b) {
      const FieldElement A(F, a), B(F, b);
      if ((c(F, 4) * A.pow(3) + c(F, 27) * B.pow(2)).is_zero()) continue;
      const EllipticCurve E(A, B);
      if (is_supersingular(E)) js.insert(j_invariant(E).value());
    }
  }
  std::vector<FieldElement> out;
  for (Value v : js) out.emplace_back(F, v);
  return out;
}

nlohmann::json SupersingularCensus::to_json() const {
  nlohmann::json classes = nlohmann::json::array();
  for (const auto& jv : j) {
    classes.push_back({{"j", jv.to_string()}, {"encoding", jv.value()}, {"automorphisms", automorphism_count(jv)}});
  }
  return {{"p", p},
          {"field", "F_" + std::to_string(p * p)},
          {"count", j.size()},
          {"classes", classes},
          {"mass", {{"numerator", weighted_mass_24}, {"denominator", 24}, {"expected_numerator", p - 1}}}};
}

std::string SupersingularCensus::to_text() const {
  std::ostringstream out;
  out << "supersingular j-invariants over F_" << p * p << " (p = " << p << "): " << j.size() << "\n";
  for (const auto& jv : j) out << "  j = " << jv.to_string() << "  |Aut| = " << automorphism_count(jv) << "\n";
  out << "mass: " << weighted_mass_24 << "/24, expected (p - 1)/24 = " << p - 1 << "/24\n";
  return out.str();
}

}  // namespace asgl
