#include "asgl/artin_schreier.hpp"

#include <algorithm>
#include <climits>
#include <map>
#include <stdexcept>

#include "asgl/errors.hpp"
#include "asgl/fp_linear.hpp"

namespace asgl {

namespace {

constexpr int kMaxLemmaTerms = 64;
// Residue equations over k(x) are searched exhaustively up to this numerator degree.
constexpr int kResidueDegreeCap = 48;

Place origin(const FieldPtr& F) { return Place::finite(UPoly(F, {0, 1})); }

std::optional<RatFunc> pth_root_exact(const RatFunc& c) {
  if (!c.num().is_pth_power() || !c.den().is_pth_power()) return std::nullopt;
  return RatFunc::normalize(c.num().pth_root(), c.den().pth_root());
}

// Valuation, leading coefficient and uniformizer of a view, with f base-changed to the view's field.
class ViewOps {
 public:
  ViewOps(const DvrView& view, const FieldPtr& f_field) : view_(view) {
    if (view.axis == DvrView::Axis::kS) frame_.emplace(frame_at(*view.place, f_field));
  }

  RatFunc prepare(const RatFunc& f) const {
    if (view_.axis == DvrView::Axis::kS) {
      if (view_.residue == DvrView::Residue::kFiniteField && !f.free_of_t()) {
        throw PreconditionError("the view " + view_.to_string() + " needs an element free of t");
      }
      return frame_->lift(f);
    }
    if (view_.residue == DvrView::Residue::kFiniteField && !f.free_of_x()) {
      throw PreconditionError("the view " + view_.to_string() + " needs an element free of x");
    }
    return f;
  }

  int valuation(const RatFunc& f) const {
    return view_.axis == DvrView::Axis::kS ? frame_->s_valuation(f) : t_valuation(f);
  }

  RatFunc leading(const RatFunc& f) const {
    return view_.axis == DvrView::Axis::kS ? frame_->s_leading(f) : t_leading(f);
  }

  RatFunc uniformizer_power(const FieldPtr& F, int m) const {
    return view_.axis == DvrView::Axis::kS ? frame_->s_power(m) : t_power(F, m);
  }

 private:
  const DvrView& view_;
  std::optional<LocalFrame> frame_;
};

FieldElement constant_value(const RatFunc& c) {
  if (!c.free_of_t() || !c.free_of_x()) throw std::logic_error("residue is not a constant");
  const auto& F = c.field();
  return {F, F->div(c.num().constant_term(), c.den().constant_term())};
}

bool agree(const TruncSeries& a, const TruncSeries& b) {
  const Precision w{std::min(a.precision().t, b.precision().t), std::min(a.precision().s, b.precision().s)};
  return a.truncated(w).terms() == b.truncated(w).terms();
}

bool agree(const GaussSeries& a, const GaussSeries& b) {
  const int w = std::min(a.precision(), b.precision());
  for (const auto& [e, c] : a.terms()) {
    if (e < w && b.coeff(e) != c) return false;
  }
  for (const auto& [e, c] : b.terms()) {
    if (e < w && a.coeff(e) != c) return false;
  }
  return true;
}

std::string field_json(const FieldElement& e) { return e.to_string(); }

Obstruction valuation_obstruction(int v) {
  Obstruction o{Obstruction::Kind::kValuation};
  o.valuation = v;
  o.label = "extended-valuation-argument";
  o.sub_label = v == -1 ? "valuation-minus-one" : "p-does-not-divide-valuation";
  return o;
}

}  // namespace

std::string to_string(ASVerdict v) {
  switch (v) {
    case ASVerdict::kSolvable:
      return "SOLVABLE";
    case ASVerdict::kUnsolvable:
      return "UNSOLVABLE";
    case ASVerdict::kUnknownAtPrecision:
      return "UNKNOWN_AT_PRECISION";
    case ASVerdict::kUnknownResidue:
      return "UNKNOWN_RESIDUE";
    case ASVerdict::kDeferred:
      return "DEFERRED";
  }
  return "";
}

DvrView::DvrView(std::optional<Place> p, Axis a, Residue r, int height)
    : place(std::move(p)), axis(a), residue(r), tower_height(height) {
  if (height < 1 || height > 3) throw PreconditionError("residue towers have height 1 to 3");
  const int expected = r == Residue::kFiniteField ? 1 : 2;
  if (height != expected) throw PreconditionError("residue tower height does not match its descriptor");
  if (axis == Axis::kS) {
    if (!place || place->is_gauss()) throw PreconditionError("an s-adic view needs a finite place or infinity");
    if (r == Residue::kRationalFunction) throw PreconditionError("s-adic views have finite or Laurent residues");
  } else {
    if (r == Residue::kLaurentTower) throw PreconditionError("t-adic views have finite or rational residues");
    if (r == Residue::kRationalFunction && (!place || !place->is_gauss())) {
      throw PreconditionError("the rational-function residue belongs to the Gauss place");
    }
    if (r == Residue::kFiniteField && place) {
      throw PreconditionError("t-adic valuation at " + place->to_string() + " is not supported");
    }
  }
}

DvrView DvrView::completion_at(const Place& place) {
  if (place.is_gauss()) return DvrView(place, Axis::kT, Residue::kRationalFunction, 2);
  return DvrView(place, Axis::kS, Residue::kLaurentTower, 2);
}

DvrView DvrView::finite_residue(const Place& place) { return DvrView(place, Axis::kS, Residue::kFiniteField, 1); }

DvrView DvrView::constant_field() { return DvrView(std::nullopt, Axis::kT, Residue::kFiniteField, 1); }

std::string DvrView::to_string() const {
  if (axis == Axis::kT) return residue == Residue::kFiniteField ? "k((t))" : "k(x)((t)) at gauss";
  const std::string at = " at " + place->to_string();
  return residue == Residue::kFiniteField ? "k((s))" + at : "k((t))((s))" + at;
}

nlohmann::json Obstruction::to_json() const {
  static const char* kNames[] = {"valuation", "pth-power", "trace", "residue", "rational-residue"};
  nlohmann::json j{{"kind", kNames[static_cast<int>(kind)]}};
  if (kind == Kind::kValuation || kind == Kind::kPthPower) j["valuation"] = valuation;
  if (!label.empty()) j["label"] = label;
  if (!sub_label.empty()) j["case"] = sub_label;
  if (residue) j["residue"] = field_json(*residue);
  if (trace) j["trace"] = field_json(*trace);
  if (leading) j["leading"] = leading->to_string();
  if (kind == Kind::kRationalResidue) j["degree_bound"] = degree_bound;
  return j;
}

nlohmann::json ReductionTranscript::to_json() const {
  nlohmann::json steps_json = nlohmann::json::array();
  for (const auto& s : steps) {
    steps_json.push_back({{"valuation", s.valuation},
                          {"leading", s.leading.to_string()},
                          {"root", s.root.to_string()},
                          {"correction", s.correction.to_string()},
                          {"after", s.after.to_string()},
                          {"next_valuation", s.next_valuation ? nlohmann::json(*s.next_valuation) : nlohmann::json()}});
  }
  return {{"start", start.to_string()}, {"steps", steps_json}, {"terminal", terminal}};
}

nlohmann::json ASDecision::to_json() const {
  nlohmann::json j{{"verdict", asgl::to_string(verdict)},
                   {"view", view},
                   {"precision", {precision.t, precision.s}},
                   {"valuation", valuation ? nlohmann::json(*valuation) : nlohmann::json()},
                   {"obstruction", obstruction ? obstruction->to_json() : nlohmann::json()},
                   {"transcript", transcript.to_json()},
                   {"witness", witness ? asgl::to_json(*witness) : nlohmann::json()}};
  if (exact_part) j["exact_part"] = exact_part->to_string();
  if (remainder) j["remainder"] = remainder->to_string();
  if (root) j["root"] = field_json(*root);
  if (residue_decision) j["residue_decision"] = residue_decision->to_json();
  if (!note.empty()) j["note"] = note;
  return j;
}

std::vector<FieldElement> as_roots_finite_field(const FieldElement& c) {
  const auto& F = c.field();
  const int p = F->characteristic();
  std::vector<FieldElement> roots;
  for (GaloisField::Value z = 0; z < F->order(); ++z) {
    if (F->sub(F->pow(z, p), z) == c.value()) roots.emplace_back(F, z);
  }
  return roots;
}

ASDecision as_solvable_finite_field(const FieldElement& c) {
  ASDecision d;
  const auto& F = c.field();
  d.view = "F_" + std::to_string(F->order());
  d.precision = {0, 0};
  d.transcript.start = RatFunc::constant(F, c.value());
  const FieldElement tr = fq_trace(c);
  if (!tr.is_zero()) {
    d.verdict = ASVerdict::kUnsolvable;
    Obstruction o{Obstruction::Kind::kTrace};
    o.residue = c;
    o.trace = tr;
    d.obstruction = o;
    d.transcript.terminal = "trace-obstruction";
    return d;
  }
  // Trace zero: the root exists; the least one is found by search.
  const auto roots = as_roots_finite_field(c);
  if (roots.empty()) throw std::logic_error("trace criterion disagrees with root search");
  d.verdict = ASVerdict::kSolvable;
  d.root = roots.front();
  d.transcript.terminal = "trace-zero";
  return d;
}

RootSeries lemma_a_sum(const LocalSeries& f) {
  RootSeries out;
  if (std::holds_alternative<TruncSeries>(f)) {
    const auto& fs = std::get<TruncSeries>(f);
    TruncSeries sum(fs.field(), fs.precision(), std::max(0, fs.s_floor()));
    TruncSeries cur = fs;
    while (!cur.is_zero()) {
      if (out.terms >= kMaxLemmaTerms) throw PreconditionError("root series does not converge in the window");
      sum = sum - cur;
      cur = cur.frobenius();
      ++out.terms;
    }
    out.series = sum;
    return out;
  }
  const auto& fg = std::get<GaussSeries>(f);
  GaussSeries sum(fg.field(), fg.precision());
  GaussSeries cur = fg;
  while (!cur.is_zero()) {
    if (out.terms >= kMaxLemmaTerms || cur.min_t() <= 0) {
      throw PreconditionError("root series does not converge in the window");
    }
    sum = sum - cur;
    cur = cur.frobenius();
    ++out.terms;
  }
  out.series = sum;
  return out;
}

RootSeries as_root_series(const RatFunc& f, const Place& place, Precision precision) {
  const auto m = maximal_ideal_membership(f, place);
  if (m.kind != Membership::Kind::kInMaxIdeal) {
    throw PreconditionError(f.to_string() + " is not in the maximal ideal at " + place.to_string() + " (" +
                            m.to_string() + "); use the translation or reduction path");
  }
  return lemma_a_sum(expand_at_place(f, place, precision));
}

bool partial_sum_identity_check(const RatFunc& f, int I) {
  if (I < 0) throw PreconditionError("the number of terms must be nonnegative");
  const auto& F = f.field();
  const Fraction base = Fraction::of(f);
  Fraction u{BivarPoly(F), BivarPoly::constant(F, 1)};
  Fraction power = base;
  for (int i = 0; i < I; ++i) {
    u = u - power;
    power = power.frobenius(1);
  }
  const Fraction lhs = u.frobenius(1) - u;
  const Fraction rhs = base - power;
  return lhs.equals(rhs);
}

bool partial_sum_identity_check(const TruncSeries& f, int I) {
  if (I < 0) throw PreconditionError("the number of terms must be nonnegative");
  TruncSeries u(f.field(), f.precision(), std::max(0, f.s_floor()));
  TruncSeries power = f;
  for (int i = 0; i < I; ++i) {
    u = u - power;
    power = power.frobenius();
  }
  return agree(u.frobenius() - u, f - power);
}

LocalSeries expand_in_view(const RatFunc& f, const DvrView& view, Precision precision) {
  if (view.axis == DvrView::Axis::kS) return frame_at(*view.place, f.field()).expand(f, precision);
  if (view.residue == DvrView::Residue::kRationalFunction) return expand_gauss(f, precision.t);
  return LocalFrame(origin(f.field()), f.field()).expand(f, precision);
}

bool check_root_series(const LocalSeries& u, const LocalSeries& f) {
  if (u.index() != f.index()) return false;
  const LocalSeries lhs = frobenius(u) - u;
  if (std::holds_alternative<TruncSeries>(f)) return agree(std::get<TruncSeries>(lhs), std::get<TruncSeries>(f));
  return agree(std::get<GaussSeries>(lhs), std::get<GaussSeries>(f));
}

bool check_root_series(const LocalSeries& u, const RatFunc& f, const DvrView& view, Precision precision) {
  return check_root_series(u, expand_in_view(f, view, precision));
}

ASDecision as_unsolvable_valuation(const RatFunc& f, const DvrView& view) {
  if (f.is_zero()) throw ZeroValuationError();
  const ViewOps ops(view, f.field());
  const RatFunc g = ops.prepare(f);
  const int v = ops.valuation(g);
  if (v >= 0) throw PreconditionError("valuation " + std::to_string(v) + " is not negative");
  const int p = f.field()->characteristic();
  ASDecision d;
  d.view = view.to_string();
  d.valuation = v;
  d.transcript.start = g;
  if (v % p != 0) {
    d.verdict = ASVerdict::kUnsolvable;
    d.obstruction = valuation_obstruction(v);
    d.transcript.terminal = "valuation-obstruction";
  } else {
    d.verdict = ASVerdict::kDeferred;
    d.transcript.terminal = "deferred";
    d.note = "p divides the valuation; the reduction procedure decides this case";
  }
  return d;
}

ASDecision as_unsolvable_valuation(const RatFunc& f, const Place& place) {
  return as_unsolvable_valuation(f, DvrView::completion_at(place));
}

ASDecision as_decide_dvr(const RatFunc& f, const DvrView& view, Precision precision) {
  const ViewOps ops(view, f.field());
  RatFunc cur = ops.prepare(f);
  const FieldPtr& F = cur.field();
  const int p = F->characteristic();
  ASDecision d;
  d.view = view.to_string();
  d.precision = precision;
  d.transcript.start = cur;
  if (!cur.is_zero()) d.valuation = ops.valuation(cur);
  RatFunc E(F);

  auto subtract_root = [&](const RatFunc& z) {
    E += z;
    cur -= z.pow(p) - z;
  };

  while (!cur.is_zero()) {
    const int v = ops.valuation(cur);
    if (v >= 0) break;
    if (v % p != 0) {
      d.verdict = ASVerdict::kUnsolvable;
      d.obstruction = valuation_obstruction(v);
      d.transcript.terminal = "valuation-obstruction";
      return d;
    }
    const int m = -v / p;
    const RatFunc c = ops.leading(cur);
    const auto r = pth_root_exact(c);
    if (!r) {
      d.verdict = ASVerdict::kUnsolvable;
      Obstruction o{Obstruction::Kind::kPthPower};
      o.valuation = v;
      o.leading = c;
      d.obstruction = o;
      d.transcript.terminal = "pth-power-obstruction";
      return d;
    }
    const RatFunc tau = *r * ops.uniformizer_power(F, -m);
    const RatFunc after = cur - (tau.pow(p) - tau);
    std::optional<int> next;
    if (!after.is_zero()) next = ops.valuation(after);
    d.transcript.steps.push_back({v, c, *r, tau, after, next});
    E += tau;
    cur = after;
  }

  if (cur.is_zero()) {
    d.transcript.terminal = "zero";
  } else if (ops.valuation(cur) > 0) {
    d.transcript.terminal = "maximal-ideal";
  } else {
    d.transcript.terminal = "residue";
    const RatFunc cbar = ops.leading(cur);
    switch (view.residue) {
      case DvrView::Residue::kFiniteField: {
        auto sub = std::make_shared<ASDecision>(as_solvable_finite_field(constant_value(cbar)));
        d.residue_decision = sub;
        if (sub->verdict != ASVerdict::kSolvable) {
          d.verdict = ASVerdict::kUnsolvable;
          d.obstruction = sub->obstruction;
          return d;
        }
        subtract_root(RatFunc::constant(F, sub->root->value()));
        break;
      }
      case DvrView::Residue::kLaurentTower: {
        auto sub = std::make_shared<ASDecision>(as_decide_dvr(cbar, DvrView::constant_field(), precision));
        d.residue_decision = sub;
        if (sub->verdict == ASVerdict::kUnsolvable) {
          d.verdict = ASVerdict::kUnsolvable;
          Obstruction o{Obstruction::Kind::kResidue};
          o.leading = cbar;
          d.obstruction = o;
          return d;
        }
        if (sub->verdict != ASVerdict::kSolvable) {
          d.verdict = sub->verdict;
          return d;
        }
        subtract_root(*sub->exact_part);
        break;
      }
      case DvrView::Residue::kRationalFunction: {
        bool exhaustive = false;
        const auto z = rational_as_root(cbar, kResidueDegreeCap, &exhaustive);
        if (!z) {
          if (exhaustive) {
            d.verdict = ASVerdict::kUnsolvable;
            Obstruction o{Obstruction::Kind::kRationalResidue};
            o.leading = cbar;
            o.degree_bound = kResidueDegreeCap;
            d.obstruction = o;
          } else {
            d.verdict = ASVerdict::kUnknownResidue;
            d.note = "residue equation over k(x) exceeds the search bound";
          }
          return d;
        }
        subtract_root(*z);
        break;
      }
    }
  }

  d.verdict = ASVerdict::kSolvable;
  d.exact_part = E;
  d.remainder = cur;
  const LocalSeries exact = expand_in_view(E, view, precision);
  d.witness = exact + lemma_a_sum(expand_in_view(cur, view, precision)).series;
  return d;
}

ASDecision as_decide_series(const TruncSeries& f) {
  const auto& F = f.field();
  const int p = F->characteristic();
  const Precision w = f.precision();
  ASDecision d;
  d.view = "truncated k((t))((s))";
  d.precision = w;
  auto unknown = [&](const std::string& why) {
    d.verdict = ASVerdict::kUnknownAtPrecision;
    d.note = why;
    d.transcript.terminal = "precision";
    return d;
  };

  const int v = f.min_s();
  // Terms below the first known one may hide beyond t^Nt unless the floor rules them out.
  if (f.s_floor() < std::min(v, 0)) return unknown("valuation is not determined inside the window");
  if (v < 0) {
    d.valuation = v;
    if (v % p != 0) {
      d.verdict = ASVerdict::kUnsolvable;
      d.obstruction = valuation_obstruction(v);
      d.transcript.terminal = "valuation-obstruction";
      return d;
    }
    for (const auto& [key, c] : f.terms()) {
      if (key.first == v && key.second % p != 0) {
        d.verdict = ASVerdict::kUnsolvable;
        Obstruction o{Obstruction::Kind::kPthPower};
        o.valuation = v;
        o.label = "known-term-t^" + std::to_string(key.second);
        d.obstruction = o;
        d.transcript.terminal = "pth-power-obstruction";
        return d;
      }
    }
    return unknown("p-th root of a truncated leading coefficient");
  }

  d.valuation = std::max(v, 0);
  // Residue: the s^0 coefficient, a t-series known below t^Nt.
  int vt = w.t;
  for (const auto& [key, c] : f.terms()) {
    if (key.first == 0) vt = std::min(vt, key.second);
  }
  TruncSeries cur = f;
  TruncSeries shift(F, w, 0);
  if (vt < 0) {
    auto sub = std::make_shared<ASDecision>();
    sub->view = "k((t))";
    sub->valuation = vt;
    if (vt % p == 0) return unknown("p-th root of a truncated residue coefficient");
    sub->verdict = ASVerdict::kUnsolvable;
    sub->obstruction = valuation_obstruction(vt);
    d.residue_decision = sub;
    d.verdict = ASVerdict::kUnsolvable;
    d.obstruction = Obstruction{Obstruction::Kind::kResidue};
    d.transcript.terminal = "residue";
    return d;
  }
  if (vt == 0) {
    auto sub = std::make_shared<ASDecision>(as_solvable_finite_field({F, f.coeff(0, 0)}));
    d.residue_decision = sub;
    if (sub->verdict != ASVerdict::kSolvable) {
      d.verdict = ASVerdict::kUnsolvable;
      d.obstruction = sub->obstruction;
      d.transcript.terminal = "residue";
      return d;
    }
    const auto z = sub->root->value();
    shift.set(0, 0, z);
    cur.set(0, 0, F->sub(cur.coeff(0, 0), F->sub(F->pow(z, p), z)));
  }
  d.verdict = ASVerdict::kSolvable;
  d.transcript.terminal = vt == 0 ? "residue" : "maximal-ideal";
  d.witness = LocalSeries(shift) + lemma_a_sum(cur).series;
  return d;
}

bool replay_transcript(const ReductionTranscript& transcript, const DvrView& view) {
  const auto& F = transcript.start.field();
  const int p = F->characteristic();
  const ViewOps ops(view, F);
  RatFunc cur = transcript.start;
  int prev = INT_MIN;
  for (const auto& step : transcript.steps) {
    if (cur.is_zero()) return false;
    const int v = ops.valuation(cur);
    if (v != step.valuation || v <= prev || v >= 0 || v % p != 0) return false;
    if (!equal_by_cross(ops.leading(cur), step.leading)) return false;
    if (!equal_by_cross(step.root.pow(p), step.leading)) return false;
    if (!equal_by_cross(step.correction, step.root * ops.uniformizer_power(F, v / p))) return false;
    const Fraction expected = Fraction::of(cur) - (Fraction::of(step.correction).frobenius(1) - Fraction::of(step.correction));
    if (!expected.equals(Fraction::of(step.after))) return false;
    if (step.after.is_zero() != !step.next_valuation.has_value()) return false;
    if (step.next_valuation && (ops.valuation(step.after) != *step.next_valuation || *step.next_valuation <= v)) {
      return false;
    }
    prev = v;
    cur = step.after;
  }
  return true;
}

std::optional<RatFunc> rational_as_root(const RatFunc& c, int degree_cap, bool* exhaustive) {
  const auto& F = c.field();
  const int p = F->characteristic();
  const int n = F->degree();
  if (exhaustive) *exhaustive = true;
  if (c.is_zero()) return RatFunc(F);
  if (!c.den().is_pth_power()) return std::nullopt;
  const BivarPoly B = c.den().pth_root();
  const BivarPoly& a = c.num();
  auto ceil_div = [](int x, int y) { return (x + y - 1) / y; };
  int Dt = std::max(B.degree_t(), ceil_div(std::max(a.degree_t(), 0), p));
  int Dx = std::max(B.degree_x(), ceil_div(std::max(a.degree_x(), 0), p));
  if (Dt > degree_cap || Dx > degree_cap) {
    if (exhaustive) *exhaustive = false;
    Dt = std::min(Dt, degree_cap);
    Dx = std::min(Dx, degree_cap);
  }
  const BivarPoly Bp1 = B.pow(p - 1);

  // Columns: the F_p-basis a^k t^i x^j of the candidate numerators; A -> A^p - A*B^(p-1) is F_p-linear.
  struct Column {
    int i, j;
    GaloisField::Value beta;
    BivarPoly image;
  };
  std::vector<Column> cols;
  std::map<std::pair<int, int>, int> row_of;  // monomial (x, t) -> row block
  GaloisField::Value beta = 1;
  std::vector<GaloisField::Value> basis;
  for (int k = 0; k < n; ++k, beta *= p) basis.push_back(beta);
  for (int i = 0; i <= Dt; ++i) {
    for (int j = 0; j <= Dx; ++j) {
      for (const auto b : basis) {
        const BivarPoly e = BivarPoly::monomial(F, b, i, j);
        BivarPoly image = e.frobenius(1) - e * Bp1;
        for (const auto& term : image.terms()) row_of.emplace(std::make_pair(term.x, term.t), 0);
        cols.push_back({i, j, b, std::move(image)});
      }
    }
  }
  for (const auto& term : a.terms()) {
    if (!row_of.count({term.x, term.t})) return std::nullopt;  // monomial outside every image
  }
  int next = 0;
  for (auto& [key, idx] : row_of) idx = next++;
  const std::size_t rows = static_cast<std::size_t>(next) * n;
  std::vector<std::vector<int>> M(rows, std::vector<int>(cols.size(), 0));
  for (std::size_t col = 0; col < cols.size(); ++col) {
    for (const auto& term : cols[col].image.terms()) {
      const auto dig = F->digits(term.c);
      const int base = row_of.at({term.x, term.t}) * n;
      for (int k = 0; k < n; ++k) M[base + k][col] = dig[k];
    }
  }
  std::vector<int> rhs(rows, 0);
  for (const auto& term : a.terms()) {
    const auto dig = F->digits(term.c);
    const int base = row_of.at({term.x, term.t}) * n;
    for (int k = 0; k < n; ++k) rhs[base + k] = dig[k];
  }
  const auto y = solve_mod_p(std::move(M), std::move(rhs), p);
  if (!y) return std::nullopt;
  std::vector<BivarPoly::Term> terms;
  for (std::size_t col = 0; col < cols.size(); ++col) {
    if ((*y)[col] != 0) terms.push_back({cols[col].j, cols[col].i, F->mul(F->from_int((*y)[col]), cols[col].beta)});
  }
  const RatFunc z = RatFunc::normalize(BivarPoly(F, std::move(terms)), B);
  if (z.pow(p) - z != c) throw std::logic_error("rational Artin-Schreier root failed its check");
  return z;
}

}  // namespace asgl
