#include <random>

#include "asgl/artin_schreier.hpp"
#include "asgl/errors.hpp"
#include "gtest/gtest.h"
#include "random_algebra.hpp"

namespace asgl {
namespace {

struct Vars {
  FieldPtr F;
  RatFunc t, x;
  explicit Vars(int p, int n = 1) : F(GaloisField::make(p, n)), t(RatFunc::t(F)), x(RatFunc::x(F)) {}
  RatFunc c(long long k) const { return RatFunc::constant(F, F->from_int(k)); }
  Place pt(long long a) const { return Place::finite(UPoly(F, {F->from_int(-a), 1})); }  // x - a
};

TEST(FiniteField, Examples) {
  const auto F5 = GaloisField::make(5);
  const auto zero = as_solvable_finite_field({F5, 0});
  EXPECT_EQ(zero.verdict, ASVerdict::kSolvable);
  EXPECT_EQ(zero.root->value(), 0u);
  const auto two = as_solvable_finite_field({F5, 2});
  EXPECT_EQ(two.verdict, ASVerdict::kUnsolvable);
  ASSERT_TRUE(two.obstruction);
  EXPECT_EQ(two.obstruction->kind, Obstruction::Kind::kTrace);

  const auto F4 = GaloisField::make(2, 2);
  EXPECT_EQ(as_solvable_finite_field({F4, 1}).verdict, ASVerdict::kSolvable);
  const auto roots = as_roots_finite_field({F4, 1});
  ASSERT_EQ(roots.size(), 2u);
  // omega and omega^2 = omega + 1
  EXPECT_EQ(roots[0].value(), F4->generator());
  EXPECT_EQ(roots[1].value(), F4->mul(F4->generator(), F4->generator()));
}

TEST(FiniteField, TraceCriterionMatchesExhaustiveSearch) {
  for (auto [p, n] : std::vector<std::pair<int, int>>{{2, 1}, {3, 1}, {2, 2}, {5, 1}, {7, 1}, {2, 3}, {3, 2}}) {
    const auto F = GaloisField::make(p, n);
    for (GaloisField::Value c = 0; c < F->order(); ++c) {
      bool found = false;
      for (GaloisField::Value z = 0; z < F->order() && !found; ++z) found = F->sub(F->pow(z, p), z) == c;
      const auto d = as_solvable_finite_field({F, c});
      EXPECT_EQ(d.verdict == ASVerdict::kSolvable, found) << "q=" << F->order() << " c=" << c;
      if (found) {
        EXPECT_EQ(F->sub(F->pow(d.root->value(), p), d.root->value()), c);
      }
    }
  }
}

TEST(RootSeries, PowersOfT) {
  for (int p : {2, 3, 5}) {
    const Vars V(p);
    const int Nt = p * p * p;  // t^(p^3) is the first power outside the window
    const auto r = as_root_series(V.t, V.pt(1), {Nt, 4});
    EXPECT_EQ(r.terms, 3);
    const auto& u = std::get<TruncSeries>(r.series);
    const auto minus_one = V.F->from_int(-1);
    EXPECT_EQ(u.terms().size(), 3u);
    EXPECT_EQ(u.coeff(1, 0), minus_one);
    EXPECT_EQ(u.coeff(p, 0), minus_one);
    EXPECT_EQ(u.coeff(p * p, 0), minus_one);
  }
}

TEST(RootSeries, GeometricSeriesOracle) {
  // Values from the independent Python series oracle.
  const Vars V(3);
  const auto r = as_root_series(V.t / (V.x - V.c(1)), V.pt(0), {4, 4});
  EXPECT_EQ(r.terms, 2);
  EXPECT_EQ(to_string(r.series), "t + t^3 + t*s + t*s^2 + t*s^3 + t^3*s^3 + O(t^4, s^4)");
}

TEST(RootSeries, ZeroAndPreconditions) {
  const Vars V(3);
  const auto r = as_root_series(RatFunc(V.F), V.pt(0), {4, 4});
  EXPECT_TRUE(is_zero(r.series));
  EXPECT_EQ(r.terms, 0);
  EXPECT_THROW(as_root_series(V.t / V.x, V.pt(0), {4, 4}), PreconditionError);
  EXPECT_THROW(as_root_series(V.c(1), V.pt(0), {4, 4}), PreconditionError);
}

TEST(RootSeries, GaussPlace) {
  const Vars V(3);
  const RatFunc f = V.t / V.x;
  const auto r = as_root_series(f, Place::gauss(), {10, 1});
  EXPECT_EQ(r.terms, 3);
  EXPECT_TRUE(check_root_series(r.series, f, DvrView::completion_at(Place::gauss()), {10, 1}));
}

TEST(PartialSums, Examples) {
  EXPECT_TRUE(partial_sum_identity_check(Vars(3).t, 2));
  const Vars V2(2);
  EXPECT_TRUE(partial_sum_identity_check(V2.t / V2.x, 1));
  EXPECT_TRUE(partial_sum_identity_check(V2.t / V2.x, 0));
  const Vars V5(5);
  EXPECT_TRUE(partial_sum_identity_check(V5.t / (V5.x - V5.c(1)), 0));
  EXPECT_THROW(partial_sum_identity_check(V5.t, -1), PreconditionError);
}

TEST(PartialSums, ExactTelescopingProperty) {
  for (int p : {2, 3, 5}) {
    const Vars V(p);
    std::mt19937 rng(40 + p);
    for (int iter = 0; iter < 25; ++iter) {
      const RatFunc f = testing::random_ratfunc(rng, V.F, 2, 2);
      for (int I = 0; I <= 4; ++I) EXPECT_TRUE(partial_sum_identity_check(f, I)) << f.to_string() << " I=" << I;
    }
  }
}

TEST(PartialSums, WrongSignIsDetected) {
  // u = +sum f^(p^i) solves z^p - z = -f + ..., so the identity must reject it for p odd.
  const Vars V(3);
  const RatFunc f = V.t / V.x;
  const Fraction u = Fraction::of(f) + Fraction::of(frobenius_power(f, 1));
  const Fraction lhs = u.frobenius(1) - u;
  const Fraction rhs = Fraction::of(f) - Fraction::of(frobenius_power(f, 2));
  EXPECT_FALSE(lhs.equals(rhs));
}

TEST(PartialSums, SeriesVariant) {
  const Vars V(3);
  const auto e = std::get<TruncSeries>(expand_at_place(V.t / (V.x - V.c(1)), V.pt(0), {8, 8}));
  for (int I = 0; I <= 3; ++I) EXPECT_TRUE(partial_sum_identity_check(e, I));
}

TEST(Valuation, ObstructedInstances) {
  const Vars V(3);
  const auto d = as_unsolvable_valuation(V.t / V.x, V.pt(0));
  EXPECT_EQ(d.verdict, ASVerdict::kUnsolvable);
  ASSERT_TRUE(d.obstruction);
  EXPECT_EQ(d.obstruction->valuation, -1);
  EXPECT_EQ(d.obstruction->label, "extended-valuation-argument");
  EXPECT_EQ(d.obstruction->sub_label, "valuation-minus-one");
  const RatFunc f0 = V.t / V.x + V.t / (V.x - V.c(1));
  const auto d1 = as_unsolvable_valuation(f0, V.pt(1));
  EXPECT_EQ(d1.verdict, ASVerdict::kUnsolvable);
  EXPECT_EQ(d1.obstruction->valuation, -1);
}

TEST(Valuation, ExtendedCaseAndDeferral) {
  const Vars V(3);
  const auto d = as_unsolvable_valuation(V.t / (V.x * V.x), V.pt(0));
  EXPECT_EQ(d.verdict, ASVerdict::kUnsolvable);
  EXPECT_EQ(d.obstruction->sub_label, "p-does-not-divide-valuation");
  EXPECT_EQ(as_unsolvable_valuation(V.c(1) / V.x.pow(3), V.pt(0)).verdict, ASVerdict::kDeferred);
  EXPECT_THROW(as_unsolvable_valuation(V.t, V.pt(0)), PreconditionError);
  EXPECT_THROW(as_unsolvable_valuation(RatFunc(V.F), V.pt(0)), ZeroValuationError);
  // Gauss valuation: t^-2 over p = 3.
  EXPECT_EQ(as_unsolvable_valuation(V.x / (V.t * V.t), Place::gauss()).verdict, ASVerdict::kUnsolvable);
}

TEST(Dvr, PoleOfOrderOne) {
  const Vars V(3);
  const auto d = as_decide_dvr(V.t / V.x, DvrView::completion_at(V.pt(0)), {8, 8});
  EXPECT_EQ(d.verdict, ASVerdict::kUnsolvable);
  EXPECT_TRUE(d.transcript.steps.empty());
  EXPECT_EQ(d.obstruction->kind, Obstruction::Kind::kValuation);
}

TEST(Dvr, UnitWithSolvableResidue) {
  const Vars V(3);
  const RatFunc f = V.t / (V.x - V.c(1));
  const auto view = DvrView::completion_at(V.pt(0));
  const auto d = as_decide_dvr(f, view, {8, 8});
  ASSERT_EQ(d.verdict, ASVerdict::kSolvable);
  ASSERT_TRUE(d.residue_decision);
  EXPECT_EQ(d.residue_decision->verdict, ASVerdict::kSolvable);
  EXPECT_TRUE(check_root_series(*d.witness, f, view, {8, 8}));
}

TEST(Dvr, ReductionOfPthPowerPole) {
  for (int p : {2, 3, 5}) {
    const Vars V(p);
    const RatFunc f = V.c(1) / V.x.pow(p);
    for (const auto& view : {DvrView::finite_residue(V.pt(0)), DvrView::completion_at(V.pt(0))}) {
      const auto d = as_decide_dvr(f, view, {8, 8});
      EXPECT_EQ(d.verdict, ASVerdict::kUnsolvable) << view.to_string();
      ASSERT_EQ(d.transcript.steps.size(), 1u);
      EXPECT_EQ(d.transcript.steps[0].valuation, -p);
      EXPECT_EQ(d.transcript.steps[0].after, V.c(1) / V.x);
      EXPECT_EQ(d.transcript.steps[0].next_valuation, -1);
      EXPECT_TRUE(replay_transcript(d.transcript, view));
      auto tampered = d.transcript;
      tampered.steps[0].after = V.c(2) / V.x + V.c(1);
      EXPECT_FALSE(replay_transcript(tampered, view));
    }
  }
}

TEST(Dvr, LeadingCoefficientNotAPthPower) {
  // t/x^3 at x = 0, p = 3: valuation -3 but t is not a cube in k((t)).
  const Vars V(3);
  const auto d = as_decide_dvr(V.t / V.x.pow(3), DvrView::completion_at(V.pt(0)));
  EXPECT_EQ(d.verdict, ASVerdict::kUnsolvable);
  EXPECT_EQ(d.obstruction->kind, Obstruction::Kind::kPthPower);
}

TEST(Dvr, ResidueTowerObstruction) {
  // Residue 1/t at the point: unsolvable in k((t)).
  const Vars V(3);
  const auto d = as_decide_dvr(V.c(1) / V.t + V.x, DvrView::completion_at(V.pt(0)));
  EXPECT_EQ(d.verdict, ASVerdict::kUnsolvable);
  EXPECT_EQ(d.obstruction->kind, Obstruction::Kind::kResidue);
  ASSERT_TRUE(d.residue_decision);
  EXPECT_EQ(d.residue_decision->obstruction->kind, Obstruction::Kind::kValuation);
  // Residue 1 over F_3 has trace 1.
  const auto e = as_decide_dvr(V.c(1) + V.x, DvrView::completion_at(V.pt(0)));
  EXPECT_EQ(e.verdict, ASVerdict::kUnsolvable);
  EXPECT_EQ(e.residue_decision->obstruction->kind, Obstruction::Kind::kTrace);
}

TEST(Dvr, GaussResidueDecidedExactly) {
  const Vars V(3);
  const auto view = DvrView::completion_at(Place::gauss());
  const auto no = as_decide_dvr(V.x / (V.x + V.c(1)) + V.t, view, {6, 1});
  EXPECT_EQ(no.verdict, ASVerdict::kUnsolvable);
  EXPECT_EQ(no.obstruction->kind, Obstruction::Kind::kRationalResidue);
  EXPECT_EQ(as_decide_dvr(V.c(1), view, {6, 1}).verdict, ASVerdict::kUnsolvable);
  const RatFunc z = V.c(1) / (V.x * V.x + V.c(1));
  const RatFunc f = z.pow(3) - z + V.t / V.x;
  const auto yes = as_decide_dvr(f, view, {6, 1});
  ASSERT_EQ(yes.verdict, ASVerdict::kSolvable);
  EXPECT_TRUE(check_root_series(*yes.witness, f, view, {6, 1}));
}

TEST(Dvr, ViewValidation) {
  const Vars V(3);
  EXPECT_THROW(DvrView(V.pt(0), DvrView::Axis::kS, DvrView::Residue::kLaurentTower, 4), PreconditionError);
  EXPECT_THROW(DvrView(V.pt(0), DvrView::Axis::kT, DvrView::Residue::kFiniteField, 1), PreconditionError);
  EXPECT_THROW(DvrView(Place::gauss(), DvrView::Axis::kS, DvrView::Residue::kLaurentTower, 2), PreconditionError);
  EXPECT_THROW(as_decide_dvr(V.t / V.x, DvrView::finite_residue(V.pt(0))), PreconditionError);
  EXPECT_THROW(as_decide_dvr(V.t / V.x, DvrView::constant_field()), PreconditionError);
}

TEST(Dvr, ConstantField) {
  const Vars V(3);
  const auto d = as_decide_dvr(V.t, DvrView::constant_field(), {10, 1});
  ASSERT_EQ(d.verdict, ASVerdict::kSolvable);
  EXPECT_TRUE(check_root_series(*d.witness, V.t, DvrView::constant_field(), {10, 1}));
  // 2/t^3 + 1/t = (2/t)^3 - 2/t.
  const auto e = as_decide_dvr(V.c(2) / V.t.pow(3) + V.c(1) / V.t, DvrView::constant_field());
  EXPECT_EQ(e.verdict, ASVerdict::kSolvable);
  EXPECT_EQ(e.remainder, RatFunc(V.F));
  // 1/t^3 + 1/t^2 reduces to 1/t^2 + 1/t: unsolvable.
  const auto g = as_decide_dvr(V.c(1) / V.t.pow(3) + V.c(1) / V.t.pow(2), DvrView::constant_field());
  EXPECT_EQ(g.verdict, ASVerdict::kUnsolvable);
  EXPECT_EQ(g.transcript.steps.size(), 1u);
  EXPECT_EQ(g.obstruction->valuation, -2);
}

std::vector<Place> places(const Vars& V) {
  unsigned long long code = 0;
  while (!is_irreducible(UPoly::from_code(V.F, 2, code))) ++code;
  return {V.pt(0), V.pt(1), Place::finite(UPoly::from_code(V.F, 2, code)), Place::infinity(), Place::gauss()};
}

TEST(DvrProperties, RootsCheckAndTranslatesToo) {
  for (int p : {2, 3}) {
    const Vars V(p);
    std::mt19937 rng(900 + p);
    int solvable = 0;
    for (int iter = 0; iter < 40; ++iter) {
      // Half the inputs are built to be solvable: h^p - h + small.
      RatFunc f = testing::random_ratfunc(rng, V.F, 2, 2);
      if (iter % 2 == 0) {
        const RatFunc h = testing::random_ratfunc(rng, V.F, 2, 1);
        f = h.pow(p) - h + V.t * testing::random_ratfunc(rng, V.F, 1, 1);
      }
      for (const auto& P : places(V)) {
        const auto view = DvrView::completion_at(P);
        const Precision prec{6, 6};
        const auto d = as_decide_dvr(f, view, prec);
        EXPECT_TRUE(replay_transcript(d.transcript, view));
        if (d.verdict != ASVerdict::kSolvable) continue;
        ++solvable;
        ASSERT_TRUE(d.witness);
        EXPECT_TRUE(check_root_series(*d.witness, f, view, prec)) << f.to_string() << " at " << P.to_string();
        for (int c = 1; c < p; ++c) {
          LocalSeries shifted = *d.witness;
          if (std::holds_alternative<TruncSeries>(shifted)) {
            auto& s = std::get<TruncSeries>(shifted);
            s.set(0, 0, s.field()->add(s.coeff(0, 0), c));
          } else {
            auto& g = std::get<GaussSeries>(shifted);
            g.set(0, g.coeff(0) + RatFunc::constant(V.F, c));
          }
          EXPECT_TRUE(check_root_series(shifted, f, view, prec));
        }
      }
    }
    EXPECT_GT(solvable, 20);
  }
}

TEST(DvrProperties, TranscriptValuationsIncrease) {
  const Vars V(3);
  std::mt19937 rng(77);
  int steps = 0;
  for (int iter = 0; iter < 40; ++iter) {
    const RatFunc h = testing::random_ratfunc(rng, V.F, 2, 2) / V.x.pow(1 + iter % 3);
    const RatFunc f = h.pow(3) - h + testing::random_ratfunc(rng, V.F, 2, 2);
    const auto view = DvrView::completion_at(V.pt(0));
    const auto d = as_decide_dvr(f, view, {5, 5});
    int prev = INT_MIN;
    for (const auto& s : d.transcript.steps) {
      EXPECT_GT(s.valuation, prev);
      prev = s.valuation;
      ++steps;
    }
    EXPECT_TRUE(replay_transcript(d.transcript, view));
  }
  EXPECT_GT(steps, 10);
}

TEST(DvrProperties, Deterministic) {
  const Vars V(5);
  const RatFunc f = V.t / (V.x - V.c(1)) + V.c(1) / V.x.pow(5);
  const auto view = DvrView::completion_at(V.pt(0));
  EXPECT_EQ(as_decide_dvr(f, view, {6, 6}).to_json().dump(), as_decide_dvr(f, view, {6, 6}).to_json().dump());
}

TEST(RationalRoot, RecoversPlantedRoots) {
  for (auto [p, n] : std::vector<std::pair<int, int>>{{2, 1}, {3, 1}, {2, 2}, {5, 1}}) {
    const auto F = GaloisField::make(p, n);
    std::mt19937 rng(p * 10 + n);
    for (int iter = 0; iter < 15; ++iter) {
      const RatFunc z = testing::random_ratfunc(rng, F, 2, 2);
      const RatFunc c = z.pow(p) - z;
      bool exhaustive = false;
      const auto r = rational_as_root(c, 6, &exhaustive);
      ASSERT_TRUE(r) << z.to_string();
      EXPECT_EQ(r->pow(p) - *r, c);
    }
  }
}

TEST(RationalRoot, CompleteNegativeAnswers) {
  const Vars V(3);
  bool exhaustive = false;
  EXPECT_FALSE(rational_as_root(V.t / V.x, 6, &exhaustive));
  EXPECT_TRUE(exhaustive);
  EXPECT_FALSE(rational_as_root(V.t, 6, &exhaustive));
  EXPECT_TRUE(exhaustive);
  EXPECT_FALSE(rational_as_root(V.c(1), 6, &exhaustive));
}

TEST(TruncatedDecision, Verdicts) {
  const auto F = GaloisField::make(3);
  // 1/s^3 with a cube leading coefficient: deciding needs a p-th root of a truncated series.
  TruncSeries a(F, {6, 6}, -3);
  a.set(0, -3, 1);
  EXPECT_EQ(as_decide_series(a).verdict, ASVerdict::kUnknownAtPrecision);
  // Valuation unknown: the floor leaves room below the known terms.
  TruncSeries b(F, {6, 6}, -2);
  b.set(1, 1, 1);
  EXPECT_EQ(as_decide_series(b).verdict, ASVerdict::kUnknownAtPrecision);
  // Pole of order one: exact.
  TruncSeries c(F, {6, 6}, -1);
  c.set(1, -1, 1);
  EXPECT_EQ(as_decide_series(c).verdict, ASVerdict::kUnsolvable);
  // Leading t-exponent not divisible by 3 at valuation -3: exact.
  TruncSeries e(F, {6, 6}, -3);
  e.set(1, -3, 1);
  EXPECT_EQ(as_decide_series(e).obstruction->kind, Obstruction::Kind::kPthPower);
  // In k[[t, s]] with zero constant term: solvable.
  TruncSeries g(F, {6, 6}, 0);
  g.set(1, 0, 1);
  g.set(0, 2, 2);
  const auto dg = as_decide_series(g);
  ASSERT_EQ(dg.verdict, ASVerdict::kSolvable);
  EXPECT_TRUE(check_root_series(*dg.witness, LocalSeries(g)));
}

}  // namespace
}  // namespace asgl
