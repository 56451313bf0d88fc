#include <map>
#include <random>

#include "asgl/elliptic.hpp"
#include "asgl/errors.hpp"
#include "gtest/gtest.h"

namespace asgl {
namespace {

EllipticCurve curve(const FieldPtr& F, long long a, long long b) {
  return {FieldElement::from_int(F, a), FieldElement::from_int(F, b)};
}

std::vector<std::string> rendered(const std::vector<FieldElement>& js) {
  std::vector<std::string> out;
  for (const auto& j : js) out.push_back(j.to_string());
  return out;
}

TEST(Hasse, Examples) {
  const auto F5 = GaloisField::make(5);
  EXPECT_EQ(hasse_invariant(curve(F5, 0, 1)).value(), 0u);
  EXPECT_EQ(hasse_invariant(curve(F5, 1, 0)).value(), 2u);
  EXPECT_EQ(hasse_invariant(curve(GaloisField::make(7), 1, 0)).value(), 0u);

  EXPECT_TRUE(is_supersingular(curve(F5, 0, 1)));
  EXPECT_EQ(point_count(curve(F5, 0, 1)), 6);
  EXPECT_FALSE(is_supersingular(curve(F5, 1, 0)));
  EXPECT_EQ(point_count(curve(F5, 1, 0)), 4);
  EXPECT_FALSE(is_supersingular(curve(GaloisField::make(13), 0, 1)));
}

TEST(Hasse, Preconditions) {
  EXPECT_THROW(curve(GaloisField::make(5), 0, 0), PreconditionError);
  EXPECT_THROW(curve(GaloisField::make(3), 1, 0), PreconditionError);
  // 4 * (-3)^3 + 27 * 2^2 = 0
  EXPECT_THROW(curve(GaloisField::make(7), -3, 2), PreconditionError);
}

TEST(Hasse, AgreesWithPointCountOverPrimeFields) {
  for (int p : {5, 7, 11, 13}) {
    const auto F = GaloisField::make(p);
    for (int a = 0; a < p; ++a) {
      for (int b = 0; b < p; ++b) {
        if ((FieldElement::from_int(F, 4 * a * a * a + 27 * b * b)).is_zero()) continue;
        const auto E = curve(F, a, b);
        EXPECT_EQ(is_supersingular(E), point_count(E) % p == 1) << "p=" << p << " a=" << a << " b=" << b;
      }
    }
  }
}

TEST(JInvariant, Examples) {
  const auto F = GaloisField::make(11);
  EXPECT_EQ(j_invariant(curve(F, 3, 0)).value(), 1728u % 11);
  EXPECT_EQ(j_invariant(curve(F, 0, 5)).value(), 0u);
  for (GaloisField::Value v = 0; v < F->order(); ++v) {
    const FieldElement j(F, v);
    EXPECT_EQ(j_invariant(curve_with_j(j)), j);
  }
}

TEST(JInvariant, SupersingularityDependsOnlyOnJ) {
  std::mt19937 rng(3);
  for (int p : {5, 7, 11, 13}) {
    const auto F = GaloisField::make(p, 2);
    std::uniform_int_distribution<GaloisField::Value> pick(1, F->order() - 1);
    for (int i = 0; i < 40; ++i) {
      const FieldElement a(F, pick(rng) - 1), b(F, pick(rng) - 1);
      if ((FieldElement::from_int(F, 4) * a.pow(3) + FieldElement::from_int(F, 27) * b.pow(2)).is_zero()) continue;
      const EllipticCurve E(a, b);
      // (u^4 a, u^6 b) is isomorphic; (d^2 a, d^3 b) is a quadratic twist.
      const FieldElement u(F, pick(rng));
      const EllipticCurve iso(u.pow(4) * a, u.pow(6) * b);
      const EllipticCurve twist(u.pow(2) * a, u.pow(3) * b);
      EXPECT_EQ(j_invariant(iso), j_invariant(E));
      EXPECT_EQ(j_invariant(twist), j_invariant(E));
      EXPECT_EQ(is_supersingular(iso), is_supersingular(E));
      EXPECT_EQ(is_supersingular(twist), is_supersingular(E));
      EXPECT_EQ(is_supersingular(curve_with_j(j_invariant(E))), is_supersingular(E));
    }
  }
}

TEST(Census, CountsAndMass) {
  const std::map<int, std::vector<std::string>> expected{
      {5, {"0"}}, {7, {"6"}}, {11, {"0", "1"}}, {13, {"5"}}};
  for (const auto& [p, js] : expected) {
    const auto census = supersingular_census(p);
    EXPECT_EQ(rendered(census.j), js) << "p=" << p;
    EXPECT_EQ(rendered(supersingular_j_brute_force(p)), js) << "p=" << p;
    EXPECT_EQ(census.weighted_mass_24, p - 1) << "p=" << p;
    EXPECT_LE(static_cast<int>(census.j.size()), p / 12 + 2);
    EXPECT_EQ(census.to_json().at("count"), js.size());
  }
  EXPECT_THROW(supersingular_census(3), PreconditionError);
  EXPECT_THROW(supersingular_census(9), PreconditionError);
}

TEST(Census, LargerPrimesSatisfyMassFormula) {
  for (int p : {17, 19, 23, 29, 31, 37}) {
    const auto census = supersingular_census(p);
    EXPECT_EQ(census.weighted_mass_24, p - 1) << "p=" << p;
    EXPECT_LE(static_cast<int>(census.j.size()), p / 12 + 2);
  }
}

}  // namespace
}  // namespace asgl
