#include <random>

#include "asgl/errors.hpp"
#include "asgl/place.hpp"
#include "gtest/gtest.h"
#include "random_algebra.hpp"

namespace asgl {
namespace {

struct Vars {
  FieldPtr F;
  RatFunc t, x;
  explicit Vars(int p, int n = 1) : F(GaloisField::make(p, n)), t(RatFunc::t(F)), x(RatFunc::x(F)) {}
  RatFunc c(long long k) const { return RatFunc::constant(F, F->from_int(k)); }
  Place pt(std::vector<long long> coeffs) const {
    std::vector<GaloisField::Value> v;
    for (auto k : coeffs) v.push_back(F->from_int(k));
    return Place::finite(UPoly(F, v));
  }
};

// Compares the terms of a and b inside the smaller of the two windows.
bool agree(const TruncSeries& a, const TruncSeries& b) {
  const Precision w{std::min(a.precision().t, b.precision().t), std::min(a.precision().s, b.precision().s)};
  return a.truncated(w).terms() == b.truncated(w).terms();
}

TEST(Expansion, GeometricSeriesAtOrigin) {
  const Vars V(3);
  const auto s = expand_at_place(V.t / (V.x - V.c(1)), V.pt({0, 1}), {4, 4});
  EXPECT_EQ(to_string(s), "2*t + 2*t*s + 2*t*s^2 + 2*t*s^3 + O(t^4, s^4)");
}

TEST(Expansion, InverseAtInfinity) {
  const Vars V(3);
  const auto s = expand_at_place(V.c(1) / V.x, Place::infinity(), {2, 3});
  EXPECT_EQ(to_string(s), "s + O(t^2, s^3)");
}

TEST(Expansion, GaussMonomial) {
  const Vars V(3);
  const auto s = std::get<GaussSeries>(expand_at_place(V.t / V.x, Place::gauss(), {3, 1}));
  ASSERT_EQ(s.terms().size(), 1u);
  EXPECT_EQ(s.coeff(1), V.c(1) / V.x);
  EXPECT_EQ(s.to_string(), "(1/x)*t + O(t^3)");
}

TEST(Expansion, RejectsNonpositivePrecision) {
  const Vars V(3);
  EXPECT_THROW(expand_at_place(V.x, Place::infinity(), {0, 3}), PreconditionError);
  EXPECT_THROW(expand_at_place(V.x, Place::gauss(), {0, 3}), PreconditionError);
}

TEST(Expansion, LaurentInT) {
  // 1/(t + x) at x = 0: sum (-1)^j s^j / t^(j+1).
  const Vars V(5);
  const auto s = std::get<TruncSeries>(expand_at_place(V.c(1) / (V.t + V.x), V.pt({0, 1}), {2, 3}));
  EXPECT_EQ(s.to_string(), "t^-1 + 4*t^-2*s + t^-3*s^2 + O(t^2, s^3)");
}

TEST(Expansion, DegreeTwoPlaceUsesResidueField) {
  const Vars V(3);
  const Place P = V.pt({1, 0, 1});  // x^2 + 1
  EXPECT_EQ(P.degree(), 2);
  const auto s = std::get<TruncSeries>(expand_at_place(V.c(1) / (V.x * V.x + V.c(1)), P, {3, 3}));
  EXPECT_EQ(s.field()->order(), 9u);
  EXPECT_EQ(s.min_s(), -1);
  const LocalFrame frame(P, V.F);
  const auto L = frame.residue_field();
  const auto theta = frame.point().value();
  EXPECT_EQ(L->add(L->mul(theta, theta), 1), 0u);
}

TEST(Valuation, WorkedExamples) {
  const Vars V(3);
  const RatFunc f = V.t / V.x + V.t / (V.x - V.c(1));
  EXPECT_EQ(valuation_exact(f, V.pt({0, 1})), -1);
  EXPECT_EQ(valuation_exact(f, V.pt({-1, 1})), -1);
  EXPECT_EQ(valuation_exact((V.x * V.x - V.c(1)) / (V.x * V.x * V.x), V.pt({0, 1})), -3);
}

TEST(Valuation, InfinityAndGauss) {
  const Vars V(5);
  EXPECT_EQ(valuation_exact(V.x * V.x * V.t, Place::infinity()), -2);
  EXPECT_EQ(valuation_exact(V.t / (V.x + V.c(1)), Place::infinity()), 1);
  EXPECT_EQ(valuation_exact(V.t * V.t / (V.x + V.t), Place::gauss()), 2);
  EXPECT_EQ(valuation_exact((V.x + V.t) / (V.t * V.t * V.t), Place::gauss()), -3);
  // t is a unit at every point.
  EXPECT_EQ(valuation_exact(V.t, V.pt({0, 1})), 0);
}

TEST(Valuation, ZeroIsAnError) {
  const Vars V(3);
  EXPECT_THROW(valuation_exact(RatFunc(V.F), V.pt({0, 1})), ZeroValuationError);
  EXPECT_THROW(valuation_exact(RatFunc(V.F), Place::gauss()), ZeroValuationError);
}

TEST(Membership, WorkedExamples) {
  const Vars V(3);
  EXPECT_EQ(maximal_ideal_membership(V.t / V.x, V.pt({-1, 1})).kind, Membership::Kind::kInMaxIdeal);
  EXPECT_EQ(maximal_ideal_membership(V.t / (V.x - V.c(1)), V.pt({0, 1})).kind, Membership::Kind::kInMaxIdeal);
  EXPECT_EQ(maximal_ideal_membership(V.t / V.x, V.pt({0, 1})).kind, Membership::Kind::kNotInRing);
}

TEST(Membership, UnitsCarryResidues) {
  const Vars V(5);
  const auto m = maximal_ideal_membership((V.x + V.c(2)) / (V.x + V.t + V.c(3)), V.pt({0, 1}));
  ASSERT_EQ(m.kind, Membership::Kind::kUnit);
  EXPECT_EQ(m.residue->value(), V.F->div(2, 3));
  EXPECT_EQ(m.to_string(), "UNIT(4)");
  // x/(x + t) is not in k[[t, x]] although neither part is a unit.
  EXPECT_EQ(maximal_ideal_membership(V.x / (V.x + V.t), V.pt({0, 1})).kind, Membership::Kind::kNotInRing);
  // At infinity, x/(x + 1) -> 1.
  const auto inf = maximal_ideal_membership(V.x / (V.x + V.c(1)), Place::infinity());
  ASSERT_EQ(inf.kind, Membership::Kind::kUnit);
  EXPECT_EQ(inf.residue->value(), 1u);
  const auto g = maximal_ideal_membership((V.x + V.t) / (V.x * V.x + V.c(1)), Place::gauss());
  ASSERT_EQ(g.kind, Membership::Kind::kUnit);
  EXPECT_EQ(*g.residue_function, V.x / (V.x * V.x + V.c(1)));
  EXPECT_EQ(maximal_ideal_membership(V.x / V.t, Place::gauss()).kind, Membership::Kind::kNotInRing);
}

TEST(Place, RejectsReduciblePolynomials) {
  const Vars V(3);
  EXPECT_THROW(V.pt({2, 0, 1}), PreconditionError);  // x^2 - 1
  EXPECT_THROW(V.pt({0, 2}), PreconditionError);     // not monic
  EXPECT_EQ(V.pt({1, 0, 1}).to_string(), "pt:x^2 + 1");
}

std::vector<Place> test_places(const Vars& V) {
  unsigned long long code = 0;
  while (!is_irreducible(UPoly::from_code(V.F, 2, code))) ++code;
  return {V.pt({0, 1}), V.pt({1, 1}), Place::finite(UPoly::from_code(V.F, 2, code)), Place::infinity(), Place::gauss()};
}

TEST(SeriesProperties, ValuationIsAHomomorphism) {
  const Vars V(3);
  std::mt19937 rng(7);
  for (int iter = 0; iter < 150; ++iter) {
    const RatFunc f = testing::random_ratfunc(rng, V.F, 3, 3);
    const RatFunc g = testing::random_ratfunc(rng, V.F, 3, 3);
    if (f.is_zero() || g.is_zero()) continue;
    for (const auto& P : test_places(V)) {
      const int vf = valuation_exact(f, P);
      const int vg = valuation_exact(g, P);
      EXPECT_EQ(valuation_exact(f * g, P), vf + vg) << P.to_string();
      const RatFunc sum = f + g;
      if (sum.is_zero()) continue;
      const int vs = valuation_exact(sum, P);
      EXPECT_GE(vs, std::min(vf, vg));
      if (vf != vg) {
        EXPECT_EQ(vs, std::min(vf, vg)) << f.to_string() << " + " << g.to_string() << " at " << P.to_string();
      }
    }
  }
}

TEST(SeriesProperties, ExpansionMatchesValuation) {
  const Vars V(5);
  std::mt19937 rng(11);
  for (int iter = 0; iter < 100; ++iter) {
    const RatFunc f = testing::random_ratfunc(rng, V.F, 3, 3);
    if (f.is_zero()) continue;
    for (const auto& P : test_places(V)) {
      const int v = valuation_exact(f, P);
      const auto e = expand_at_place(f, P, {8, 8});
      if (P.is_gauss()) {
        const auto& g = std::get<GaussSeries>(e);
        if (v < 8) {
          EXPECT_EQ(g.min_t(), v);
        }
        continue;
      }
      const auto& s = std::get<TruncSeries>(e);
      if (v < 8) {
        EXPECT_EQ(s.min_s(), v) << f.to_string() << " at " << P.to_string();
      }
    }
  }
}

TEST(SeriesProperties, ExpansionIsARingMap) {
  for (int p : {2, 3}) {
    const Vars V(p);
    std::mt19937 rng(100 + p);
    for (int iter = 0; iter < 60; ++iter) {
      const RatFunc f = testing::random_ratfunc(rng, V.F, 3, 2);
      const RatFunc g = testing::random_ratfunc(rng, V.F, 3, 2);
      for (const auto& P : test_places(V)) {
        const Precision prec{6, 6};
        if (P.is_gauss()) {
          const auto ef = expand_gauss(f, 6), eg = expand_gauss(g, 6);
          EXPECT_EQ(expand_gauss(f + g, 6), ef + eg);
          const auto prod = ef * eg;
          const auto direct = expand_gauss(f * g, prod.precision());
          EXPECT_EQ(direct.terms(), prod.terms());
          continue;
        }
        const auto ef = std::get<TruncSeries>(expand_at_place(f, P, prec));
        const auto eg = std::get<TruncSeries>(expand_at_place(g, P, prec));
        EXPECT_TRUE(agree(std::get<TruncSeries>(expand_at_place(f + g, P, prec)), ef + eg)) << P.to_string();
        const auto prod = ef * eg;
        EXPECT_TRUE(agree(std::get<TruncSeries>(expand_at_place(f * g, P, prec)), prod))
            << f.to_string() << " * " << g.to_string() << " at " << P.to_string();
      }
    }
  }
}

TEST(SeriesProperties, FrobeniusCommutesWithExpansion) {
  const Vars V(3);
  std::mt19937 rng(5);
  for (int iter = 0; iter < 60; ++iter) {
    const RatFunc f = testing::random_ratfunc(rng, V.F, 2, 2);
    for (const auto& P : test_places(V)) {
      if (P.is_gauss()) {
        EXPECT_EQ(expand_gauss(frobenius_power(f, 1), 9).terms(), expand_gauss(f, 9).frobenius().terms());
        continue;
      }
      const auto e = std::get<TruncSeries>(expand_at_place(f, P, {9, 9}));
      EXPECT_TRUE(agree(std::get<TruncSeries>(expand_at_place(frobenius_power(f, 1), P, {9, 9})), e.frobenius()));
    }
  }
}

TEST(SeriesProperties, MembershipIsExact) {
  const Vars V(3);
  std::mt19937 rng(23);
  int in_ideal = 0, units = 0;
  for (int iter = 0; iter < 200; ++iter) {
    const RatFunc f = testing::random_ratfunc(rng, V.F, 3, 2);
    for (const auto& P : test_places(V)) {
      if (P.is_gauss()) continue;
      const auto m = maximal_ideal_membership(f, P);
      for (int n : {1, 3, 6}) {
        const auto e = std::get<TruncSeries>(expand_at_place(f, P, {n, n}));
        if (m.kind == Membership::Kind::kInMaxIdeal) {
          ++in_ideal;
          EXPECT_EQ(e.coeff(0, 0), 0u);
          EXPECT_GE(e.min_s(), 0);
          EXPECT_GE(e.min_t(), 0);
        } else if (m.kind == Membership::Kind::kUnit) {
          ++units;
          EXPECT_EQ(e.coeff(0, 0), m.residue->value());
          EXPECT_GE(e.min_t(), 0);
        }
      }
    }
  }
  EXPECT_GT(in_ideal, 0);
  EXPECT_GT(units, 0);
}

TEST(SeriesProperties, CrossMultiplicationReproducesNumerator) {
  const Vars V(2, 2);
  std::mt19937 rng(3);
  for (int iter = 0; iter < 40; ++iter) {
    const RatFunc f = testing::random_ratfunc(rng, V.F, 3, 2);
    if (f.is_zero()) continue;
    for (const auto& P : {V.pt({0, 1}), Place::infinity()}) {
      const auto e = std::get<TruncSeries>(expand_at_place(f, P, {7, 7}));
      const auto d = std::get<TruncSeries>(expand_at_place(RatFunc(f.den()), P, {7, 7}));
      const auto n = std::get<TruncSeries>(expand_at_place(RatFunc(f.num()), P, {7, 7}));
      EXPECT_TRUE(agree(e * d, n));
    }
  }
}

TEST(TruncSeries, JsonRoundTrip) {
  const Vars V(3, 2);
  const auto e = std::get<TruncSeries>(expand_at_place(V.c(1) / (V.t + V.x), V.pt({0, 1}), {3, 3}));
  EXPECT_EQ(truncseries_from_json(to_json(e)), e);
}

}  // namespace
}  // namespace asgl
