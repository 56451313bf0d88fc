#include "asgl/local_global.hpp"
#include "asgl/serialize.hpp"

namespace asgl {

namespace {

// (Y - W)^p - (Y - W) = (Y^p - Y) - (W^p - W) in F_p[Y, W], expanded by repeated multiplication.
bool additivity_identity(int p) {
  const auto Fp = GaloisField::make(p);
  const auto Y = BivarPoly::var_t(Fp);
  const auto W = BivarPoly::var_x(Fp);
  const auto d = Y - W;
  BivarPoly dp = d;
  BivarPoly yp = Y;
  BivarPoly wp = W;
  for (int i = 1; i < p; ++i) {
    dp = dp * d;
    yp = yp * Y;
    wp = wp * W;
  }
  return dp - d == (yp - Y) - (wp - W);
}

}  // namespace

TranslationCertificate translated_root_certificate(const RatFunc& f_total, const RatFunc& g, const Place& place,
                                                   Precision precision, const std::optional<RatFunc>& declared_target) {
  TranslationCertificate tc(f_total, g, f_total - g);
  tc.declared_target = declared_target;
  tc.place = place;
  tc.precision = precision;
  tc.target_matches = !declared_target || *declared_target == tc.target;
  if (!tc.target_matches) tc.difference = *declared_target - tc.target;
  tc.additivity_identity = additivity_identity(f_total.field()->characteristic());

  // With g = 0 the root y itself must be certified locally.
  const RatFunc& h = g.is_zero() ? f_total : g;
  const auto view = DvrView::completion_at(place);
  if (h.is_zero()) {
    tc.g_in_maximal_ideal = true;
    tc.witness = expand_in_view(h, view, precision);
  } else if (maximal_ideal_membership(h, place).kind == Membership::Kind::kInMaxIdeal) {
    tc.g_in_maximal_ideal = true;
    const auto rs = as_root_series(h, place, precision);
    tc.witness = rs.series;
    tc.witness_terms = rs.terms;
  }
  if (tc.witness) tc.root_series_checks = check_root_series(*tc.witness, h, view, precision);

  if (!tc.target_matches) {
    tc.failure = "target mismatch";
  } else if (!tc.g_in_maximal_ideal) {
    tc.failure = g.is_zero() ? "f_total is not in the maximal ideal" : "g is not in the maximal ideal";
  } else if (!tc.root_series_checks) {
    tc.failure = "root series check";
  } else if (!tc.additivity_identity) {
    tc.failure = "additivity identity";
  }
  tc.valid = tc.failure.empty();
  return tc;
}

nlohmann::json TranslationCertificate::to_json() const {
  return {{"type", "translation"},
          {"status", valid ? "VALID" : "FAIL"},
          {"failure", failure},
          {"f_total", asgl::to_json(f_total)},
          {"g", asgl::to_json(g)},
          {"target", asgl::to_json(target)},
          {"declared_target", declared_target ? asgl::to_json(*declared_target) : nlohmann::json()},
          {"difference", difference ? asgl::to_json(*difference) : nlohmann::json()},
          {"place", asgl::to_json(place)},
          {"precision", {precision.t, precision.s}},
          {"root", "z = y - w, y^p - y = f_total, w^p - w = g"},
          {"checks",
           {{"target_equation", target_matches},
            {"g_in_maximal_ideal", g_in_maximal_ideal},
            {"root_series", root_series_checks},
            {"frobenius_additivity", additivity_identity}}},
          {"witness", witness ? asgl::to_json(*witness) : nlohmann::json()},
          {"witness_terms", witness_terms}};
}

}  // namespace asgl
