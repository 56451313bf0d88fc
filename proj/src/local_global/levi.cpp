#include <sstream>

#include "asgl/errors.hpp"
#include "asgl/local_global.hpp"

namespace asgl {

std::string levi_statement(PlaceVerdict v) {
  switch (v) {
    case PlaceVerdict::kSolvableInLocalField:
      return "G_f acquires a Levi factor over this completion (root in the completion)";
    case PlaceVerdict::kSolvableViaTranslation:
      return "G_f acquires a Levi factor over this completion (root by translation)";
    case PlaceVerdict::kUnsolvableInCompletion:
      return "G_f has no Levi factor over this completion";
    case PlaceVerdict::kUnknown:
      return "Levi factor over this completion undetermined";
  }
  return "";
}

std::string levi_statement(GlobalVerdict v) {
  switch (v) {
    case GlobalVerdict::kSolvable:
      return "G_f has a Levi factor over the global field";
    case GlobalVerdict::kUnsolvable:
      return "G_f has no Levi factor over the global field";
    case GlobalVerdict::kUnknown:
      return "Levi factor over the global field undetermined";
  }
  return "";
}

LeviReport levi_report(const RatFunc& f, const std::optional<RatFunc>& f0, const ReportConfig& config) {
  if (f.field()->characteristic() == 2) {
    throw PreconditionError("the Levi-factor criterion requires characteristic > 2; p = 2 is not supported");
  }
  LeviReport r(local_global_report(f, f0, config));
  bool all_local = true;
  for (const auto& d : r.base.places) {
    r.local_statements.push_back(levi_statement(d.verdict));
    all_local = all_local && is_solvable(d.verdict);
  }
  r.global_statement = levi_statement(r.base.global);
  const std::string field = f0 ? "F" : "K(x)";
  if (all_local && r.base.global == GlobalVerdict::kUnsolvable) {
    r.summary = "Levi factor exists over every F_v; no Levi factor over " + field;
  } else if (all_local && r.base.global == GlobalVerdict::kSolvable) {
    r.summary = "Levi factor exists over " + field + " and over every F_v";
  } else {
    int local = 0;
    for (const auto& d : r.base.places) local += is_solvable(d.verdict) ? 1 : 0;
    r.summary = "Levi factor exists over " + std::to_string(local) + " of " + std::to_string(r.base.places.size()) +
                " completions; " + r.global_statement;
  }
  return r;
}

nlohmann::json LeviReport::to_json() const {
  auto j = base.to_json();
  nlohmann::json locals = nlohmann::json::array();
  for (std::size_t i = 0; i < base.places.size(); ++i) {
    locals.push_back({{"place", base.places[i].place.to_string()}, {"statement", local_statements[i]}});
  }
  j["levi"] = {{"convention", "G_f = E_{-f}"},
               {"criterion", "G_f has a Levi factor over L iff Z^p - Z = f has a root in L"},
               {"local", locals},
               {"global", global_statement},
               {"summary", summary}};
  return j;
}

std::string LeviReport::to_text() const {
  std::ostringstream out;
  out << base.to_text() << "\nLevi factors (G_f = E_{-f}):\n";
  for (std::size_t i = 0; i < base.places.size(); ++i) {
    out << "  " << base.places[i].place.to_string() << ": " << local_statements[i] << "\n";
  }
  out << "  global: " << global_statement << "\n" << summary << "\n";
  return out.str();
}

}  // namespace asgl
