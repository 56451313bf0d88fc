#include <iomanip>
#include <sstream>

#include "asgl/errors.hpp"
#include "asgl/local_global.hpp"
#include "asgl/serialize.hpp"

namespace asgl {

namespace {

const char* kPlaceCoverage =
    "place coverage: every discrete valuation of F is handled through a point of P^1 over k or the t-adic "
    "valuation (Harbater-Hartmann-Krashen, Prop. 7.4); cited, not verified";
const char* kOmegaNote =
    "valuations whose ring contains k[[t]] are covered by the same reduction; they are not enumerated separately";

struct GlobalResult {
  GlobalVerdict verdict = GlobalVerdict::kUnknown;
  std::string route;
  nlohmann::json certificate;
};

// A root of Z^p - Z = h in K(x): x-free h decided over k((t)), else a bounded rational search.
std::optional<GlobalResult> root_in_base(const RatFunc& h, const ReportConfig& config) {
  if (h.free_of_x()) {
    const auto dec = as_decide_dvr(h, DvrView::constant_field(), config.precision);
    if (dec.verdict == ASVerdict::kSolvable) {
      return GlobalResult{GlobalVerdict::kSolvable, "constant-field-root", dec.to_json()};
    }
    if (dec.verdict == ASVerdict::kUnsolvable) {
      // k((t)) is algebraically closed in k((t))(x).
      return GlobalResult{GlobalVerdict::kUnsolvable, "constant-field-obstruction", dec.to_json()};
    }
  }
  bool exhaustive = false;
  if (const auto z = rational_as_root(h, config.root_degree_bound, &exhaustive)) {
    return GlobalResult{GlobalVerdict::kSolvable, "rational-root", {{"root", to_json(*z)}}};
  }
  return std::nullopt;
}

GlobalResult decide_global(const RatFunc& f, const std::optional<RatFunc>& f0, const std::vector<Place>& places,
                           const std::vector<PlaceDecision>& decisions, const ReportConfig& config) {
  for (const auto& d : decisions) {
    if (d.verdict == PlaceVerdict::kUnsolvableInCompletion) {
      return {GlobalVerdict::kUnsolvable, "local-obstruction", {{"place", d.place.to_string()}, {"local", d.certificate}}};
    }
  }
  if (auto r = root_in_base(f, config)) {
    // An obstruction over k((t)) says nothing about F.
    if (!f0 || r->verdict == GlobalVerdict::kSolvable) return *r;
  }
  if (!f0) return {};

  const int p = f.field()->characteristic();
  for (int c = 1; c < p; ++c) {
    const RatFunc g = f0->scaled(f.field()->from_int(c)) - f;
    if (g.is_zero()) return {GlobalVerdict::kSolvable, "multiple-of-f0", {{"multiplier", c}}};
    if (auto r = root_in_base(g, config); r && r->verdict == GlobalVerdict::kSolvable) {
      return {GlobalVerdict::kSolvable, "translated-root",
              {{"multiplier", c}, {"g", to_json(g)}, {"root", "z = c*y - w"}, {"w", r->certificate}}};
    }
  }

  // E = K(x)(root of f) and F both have degree p; if some completion contains E but not F,
  // a root of f in F would force E = F.
  std::optional<nlohmann::json> degree_of_e;
  std::optional<nlohmann::json> separating;
  for (const auto& place : places) {
    const auto view = DvrView::completion_at(place);
    const auto df = as_decide_dvr(f, view, config.precision);
    if (!degree_of_e && df.verdict == ASVerdict::kUnsolvable) {
      degree_of_e = nlohmann::json{{"place", place.to_string()}, {"decision", df.to_json()}};
    }
    if (!separating && df.verdict == ASVerdict::kSolvable) {
      const auto d0 = as_decide_dvr(*f0, view, config.precision);
      if (d0.verdict == ASVerdict::kUnsolvable) {
        const bool ok = check_root_series(*df.witness, f, view, config.precision);
        if (ok) {
          separating = nlohmann::json{{"place", place.to_string()},
                                      {"f_solvable", df.to_json()},
                                      {"root_check", ok},
                                      {"f0_unsolvable", d0.to_json()}};
        }
      }
    }
    if (degree_of_e && separating) {
      return {GlobalVerdict::kUnsolvable, "compositum",
              {{"degree_of_E", *degree_of_e},
               {"E_in_completion_F_not", *separating},
               {"logic", "root in F => E subset F => E = F (both degree p) => F in the completion, contradiction"}}};
    }
  }
  return {};
}

std::string precision_text(Precision p) { return "(" + std::to_string(p.t) + ", " + std::to_string(p.s) + ")"; }

}  // namespace

std::string to_string(GlobalVerdict v) {
  switch (v) {
    case GlobalVerdict::kSolvable:
      return "SOLVABLE";
    case GlobalVerdict::kUnsolvable:
      return "UNSOLVABLE";
    case GlobalVerdict::kUnknown:
      return "GLOBAL_UNKNOWN";
  }
  return "";
}

Report local_global_report(const RatFunc& f, const std::optional<RatFunc>& f0, const ReportConfig& config) {
  if (config.precision.t < 1 || config.precision.s < 1 || config.root_degree_bound < 1) {
    throw PreconditionError("precision and bounds must be at least 1");
  }
  if (f0 && !f0->field()->same_as(*f.field())) throw PreconditionError("f and f0 live over different fields");
  Report r(f);
  r.f0 = f0;
  r.config = config;
  const auto places = enumerate_places(f.field(), config.degree_bound);
  for (const auto& place : places) r.places.push_back(decide_at_place(f, place, config.precision, f0));
  auto g = decide_global(f, f0, places, r.places, config);
  r.global = g.verdict;
  r.global_route = g.route;
  r.global_certificate = std::move(g.certificate);
  r.assumptions.push_back(kPlaceCoverage);
  r.notes.push_back(kOmegaNote);
  if (f0) r.notes.push_back("valuations of F above a place are covered by the completion of K(x) or by translation");
  return r;
}

nlohmann::json Report::to_json() const {
  const auto& F = f.field();
  nlohmann::json config_json{{"p", F->characteristic()},
                             {"ext_degree", F->degree()},
                             {"f", f.to_string()},
                             {"field", f0 ? nlohmann::json{{"extension_by", f0->to_string()}} : nlohmann::json("base")},
                             {"degree_bound", config.degree_bound},
                             {"precision", {config.precision.t, config.precision.s}},
                             {"root_degree_bound", config.root_degree_bound}};
  nlohmann::json places_json = nlohmann::json::array();
  for (const auto& d : places) places_json.push_back(d.to_json());
  return {{"config", config_json},
          {"places", places_json},
          {"global", {{"verdict", to_string(global)}, {"route", global_route}, {"certificate", global_certificate}}},
          {"assumptions", assumptions},
          {"notes", notes}};
}

std::string Report::to_text() const {
  std::ostringstream out;
  out << "f = " << f.to_string();
  if (f0) {
    out << " over F = K(x)(y), y^p - y = " << f0->to_string() << "\n";
  } else {
    out << " over K(x)\n";
  }
  out << "p = " << f.field()->characteristic() << ", q = " << f.field()->order() << ", degree bound "
      << config.degree_bound << ", precision " << precision_text(config.precision) << "\n\n";
  std::size_t width = 5;
  for (const auto& d : places) width = std::max(width, d.place.to_string().size());
  out << std::left << std::setw(static_cast<int>(width) + 2) << "place" << std::setw(27) << "status" << "route\n";
  for (const auto& d : places) {
    out << std::setw(static_cast<int>(width) + 2) << d.place.to_string() << std::setw(27) << to_string(d.verdict)
        << d.route << "\n";
    for (const auto& n : d.notes) out << "    note: " << n << "\n";
  }
  out << "\nglobal: " << to_string(global);
  if (!global_route.empty()) out << " (" << global_route << ")";
  out << "\n";
  if (!assumptions.empty()) {
    out << "assumptions:\n";
    for (const auto& a : assumptions) out << "  - " << a << "\n";
  }
  if (!notes.empty()) {
    out << "notes:\n";
    for (const auto& n : notes) out << "  - " << n << "\n";
  }
  return out.str();
}

}  // namespace asgl
