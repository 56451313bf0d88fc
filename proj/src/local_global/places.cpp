#include "asgl/errors.hpp"
#include "asgl/local_global.hpp"
#include "asgl/serialize.hpp"

namespace asgl {

namespace {

// Roots in K(x) are searched with numerator degrees up to this bound before giving up locally.
constexpr int kLocalRationalRootBound = 6;

PlaceDecision with_root(PlaceDecision d, const LocalSeries& witness, const RatFunc& f, Precision precision,
                        PlaceVerdict verdict = PlaceVerdict::kSolvableInLocalField) {
  const bool ok = check_root_series(witness, f, DvrView::completion_at(d.place), precision);
  d.certificate["witness"] = to_json(witness);
  d.certificate["root_check"] = ok;
  d.verdict = ok ? verdict : PlaceVerdict::kUnknown;
  if (!ok) d.notes.push_back("witness failed its root check");
  return d;
}

PlaceDecision decide_gauss(const RatFunc& f, const Place& place, Precision precision) {
  PlaceDecision d{place, PlaceVerdict::kUnknown, "gauss-dvr", {}, {}};
  const auto view = DvrView::completion_at(place);
  const auto dec = as_decide_dvr(f, view, precision);
  d.certificate = {{"route", d.route}, {"decision", dec.to_json()}};
  if (dec.verdict == ASVerdict::kSolvable) return with_root(d, *dec.witness, f, precision);
  if (dec.verdict == ASVerdict::kUnsolvable) {
    d.route = "dvr-obstruction";
    d.certificate["route"] = d.route;
    d.verdict = PlaceVerdict::kUnsolvableInCompletion;
  }
  return d;
}

PlaceDecision decide_base(const RatFunc& f, const Place& place, Precision precision) {
  if (f.is_zero()) {
    PlaceDecision d{place, PlaceVerdict::kSolvableInLocalField, "zero", {{"route", "zero"}}, {}};
    return d;
  }
  if (place.is_gauss()) return decide_gauss(f, place, precision);

  const auto view = DvrView::completion_at(place);
  const auto m = maximal_ideal_membership(f, place);
  PlaceDecision d{place, PlaceVerdict::kUnknown, "", {{"membership", m.to_string()}}, {}};

  switch (m.kind) {
    case Membership::Kind::kInMaxIdeal: {
      d.route = "lemma-a";
      const auto rs = as_root_series(f, place, precision);
      d.certificate["route"] = d.route;
      d.certificate["terms"] = rs.terms;
      return with_root(d, rs.series, f, precision);
    }
    case Membership::Kind::kUnit: {
      const auto fd = as_solvable_finite_field(*m.residue);
      d.certificate["residue_decision"] = fd.to_json();
      if (fd.verdict != ASVerdict::kSolvable) {
        d.route = "residue-trace";
        d.certificate["route"] = d.route;
        d.verdict = PlaceVerdict::kUnsolvableInCompletion;
        return d;
      }
      d.route = "residue-lift";
      d.certificate["route"] = d.route;
      const auto frame = frame_at(place, f.field());
      const auto L = frame.residue_field();
      const auto z0 = RatFunc::constant(L, fd.root->value());
      const RatFunc rem = frame.lift(f) - (z0.pow(L->characteristic()) - z0);
      d.certificate["remainder"] = rem.to_string();
      LocalSeries witness = expand_in_view(z0, view, precision);
      if (!rem.is_zero()) {
        const auto rs = as_root_series(rem, place, precision);
        d.certificate["terms"] = rs.terms;
        witness = witness + rs.series;
      }
      return with_root(d, witness, f, precision);
    }
    case Membership::Kind::kNotInRing:
      break;
  }

  const auto dec = as_decide_dvr(f, view, precision);
  d.certificate["decision"] = dec.to_json();
  if (dec.verdict == ASVerdict::kUnsolvable) {
    d.route = "dvr-obstruction";
    d.certificate["route"] = d.route;
    d.verdict = PlaceVerdict::kUnsolvableInCompletion;
    return d;
  }
  if (dec.verdict == ASVerdict::kSolvable && dec.remainder) {
    const auto& rem = *dec.remainder;
    if (rem.is_zero() || maximal_ideal_membership(rem, place).kind == Membership::Kind::kInMaxIdeal) {
      d.route = "reduction";
      d.certificate["route"] = d.route;
      return with_root(d, *dec.witness, f, precision);
    }
  }
  if (const auto z = rational_as_root(f, kLocalRationalRootBound)) {
    d.route = "global-rational-root";
    d.certificate["route"] = d.route;
    d.certificate["root"] = to_json(*z);
    return with_root(d, expand_in_view(*z, view, precision), f, precision);
  }
  d.route = "unresolved";
  d.certificate["route"] = d.route;
  d.notes.push_back("not in the local ring; marked for translation");
  return d;
}

}  // namespace

std::string to_string(PlaceVerdict v) {
  switch (v) {
    case PlaceVerdict::kSolvableInLocalField:
      return "SOLVABLE_IN_LOCAL_FIELD";
    case PlaceVerdict::kSolvableViaTranslation:
      return "SOLVABLE_VIA_TRANSLATION";
    case PlaceVerdict::kUnsolvableInCompletion:
      return "UNSOLVABLE_IN_COMPLETION";
    case PlaceVerdict::kUnknown:
      return "UNKNOWN";
  }
  return "";
}

bool is_solvable(PlaceVerdict v) {
  return v == PlaceVerdict::kSolvableInLocalField || v == PlaceVerdict::kSolvableViaTranslation;
}

nlohmann::json PlaceDecision::to_json() const {
  return {{"place", place.to_string()},
          {"status", asgl::to_string(verdict)},
          {"route", route},
          {"certificate", certificate},
          {"notes", notes}};
}

std::vector<Place> enumerate_places(const FieldPtr& k, int degree_bound) {
  if (degree_bound < 1) throw PreconditionError("degree bound must be at least 1");
  std::vector<Place> places{Place::infinity(), Place::gauss()};
  unsigned long long count = 1;
  for (int d = 1; d <= degree_bound; ++d) {
    count *= k->order();
    if (count > GaloisField::kMaxOrder) throw PreconditionError("too many candidate places; lower the degree bound");
    for (unsigned long long code = 0; code < count; ++code) {
      const auto pi = UPoly::from_code(k, d, code);
      if (is_irreducible(pi)) places.push_back(Place::finite(pi));
    }
  }
  return places;
}

PlaceDecision decide_at_place(const RatFunc& f, const Place& place, Precision precision,
                              const std::optional<RatFunc>& f0) {
  auto base = decide_base(f, place, precision);
  if (!f0 || is_solvable(base.verdict)) return base;

  const int p = f.field()->characteristic();
  for (int c = 1; c < p; ++c) {
    const RatFunc f_total = f0->scaled(f.field()->from_int(c));
    const RatFunc g = f_total - f;
    if (g.is_zero()) {
      PlaceDecision d{place, PlaceVerdict::kSolvableViaTranslation, "translation", {}, base.notes};
      d.certificate = {{"route", "translation"}, {"multiplier", c}, {"g", to_json(g)}, {"note", "f is a multiple of f0"}};
      return d;
    }
    if (maximal_ideal_membership(g, place).kind != Membership::Kind::kInMaxIdeal) continue;
    const auto tc = translated_root_certificate(f_total, g, place, precision, f);
    if (!tc.valid) continue;
    PlaceDecision d{place, PlaceVerdict::kSolvableViaTranslation, "translation", {}, {}};
    d.certificate = {{"route", "translation"}, {"multiplier", c}, {"translation", tc.to_json()},
                     {"base_decision", base.certificate}};
    return d;
  }

  if (base.verdict == PlaceVerdict::kUnsolvableInCompletion) {
    // F splits over this completion exactly when f0 has a root there; then F_v is the completion itself.
    const auto split = decide_base(*f0, place, precision);
    if (is_solvable(split.verdict)) {
      base.certificate["extension_splits"] = split.certificate;
      return base;
    }
    base.notes.push_back("obstruction in the base completion does not transfer to F_v");
  }
  base.verdict = PlaceVerdict::kUnknown;
  return base;
}

}  // namespace asgl
