#pragma once

#include <optional>
#include <string>
#include <vector>

#include "asgl/artin_schreier.hpp"
#include "json.hpp"

namespace asgl {

/// Infinity, the Gauss place, then FinitePoint(pi) for monic irreducible pi of
/// degree <= degree_bound, ordered by degree and then by encoding.
std::vector<Place> enumerate_places(const FieldPtr& k, int degree_bound);

enum class PlaceVerdict { kSolvableInLocalField, kSolvableViaTranslation, kUnsolvableInCompletion, kUnknown };

// "SOLVABLE_IN_LOCAL_FIELD", "SOLVABLE_VIA_TRANSLATION", "UNSOLVABLE_IN_COMPLETION", "UNKNOWN".
std::string to_string(PlaceVerdict v);
bool is_solvable(PlaceVerdict v);

/**
 * Root of Z^p - Z = f_total - g in an extension containing a root y of
 * Y^p - Y = f_total: z = y - w with w the root series of g at the place.
 */
struct TranslationCertificate {
  TranslationCertificate(RatFunc ft, RatFunc gg, RatFunc tg)
      : f_total(std::move(ft)), g(std::move(gg)), target(std::move(tg)) {}

  RatFunc f_total;
  RatFunc g;
  RatFunc target;  // f_total - g
  std::optional<RatFunc> declared_target;
  Place place = Place::gauss();
  Precision precision;

  bool target_matches = false;
  bool g_in_maximal_ideal = false;
  bool root_series_checks = false;
  bool additivity_identity = false;
  bool valid = false;
  std::string failure;
  std::optional<RatFunc> difference;  // declared_target - (f_total - g) on a mismatch
  std::optional<LocalSeries> witness;
  int witness_terms = 0;

  nlohmann::json to_json() const;
};

TranslationCertificate translated_root_certificate(const RatFunc& f_total, const RatFunc& g, const Place& place,
                                                   Precision precision = {},
                                                   const std::optional<RatFunc>& declared_target = std::nullopt);

struct PlaceDecision {
  Place place = Place::gauss();
  PlaceVerdict verdict = PlaceVerdict::kUnknown;
  std::string route;
  nlohmann::json certificate;
  std::vector<std::string> notes;

  nlohmann::json to_json() const;
};

/// Decision in the completion of K(x) at the place. With f0, the field is
/// F = K(x)(y), y^p - y = f0, and translation by multiples of y is attempted.
PlaceDecision decide_at_place(const RatFunc& f, const Place& place, Precision precision = {},
                              const std::optional<RatFunc>& f0 = std::nullopt);

struct ReportConfig {
  int degree_bound = 3;
  Precision precision;
  int root_degree_bound = 6;
};

enum class GlobalVerdict { kSolvable, kUnsolvable, kUnknown };
// "SOLVABLE", "UNSOLVABLE", "GLOBAL_UNKNOWN".
std::string to_string(GlobalVerdict v);

struct Report {
  explicit Report(RatFunc ff) : f(std::move(ff)) {}

  RatFunc f;
  std::optional<RatFunc> f0;
  ReportConfig config;
  std::vector<PlaceDecision> places;
  GlobalVerdict global = GlobalVerdict::kUnknown;
  std::string global_route;
  nlohmann::json global_certificate;
  std::vector<std::string> assumptions;
  std::vector<std::string> notes;

  nlohmann::json to_json() const;
  std::string to_text() const;
};

Report local_global_report(const RatFunc& f, const std::optional<RatFunc>& f0, const ReportConfig& config = {});

/// One step of the counterexample proof.
struct Fact {
  int id = 0;
  std::string claim;
  std::string kind;  // "computation", "logic" or "cited-assumption"
  bool holds = false;
  nlohmann::json data;
};

struct CounterexampleCertificate {
  int p = 0;
  Precision precision;
  int degree_bound = 0;
  std::vector<Fact> facts;
  bool valid = false;
  std::string failing_step;

  nlohmann::json to_json() const;
};

/// f0 = t/x + t/(x-1) and target t/x over k = F_p.
CounterexampleCertificate verify_counterexample(int p, Precision precision = {16, 16}, int degree_bound = 3);

struct ReplayResult {
  bool valid = false;
  std::string reason;
};

/// Recomputes a serialized certificate (counterexample or translation) from its
/// inputs, compares every stored field and rechecks stored witness series.
ReplayResult replay_certificate(const nlohmann::json& certificate);

/// Levi-factor reading of a report; G_f = E_{-f} has a Levi factor over L iff Z^p - Z = f has a root in L.
struct LeviReport {
  explicit LeviReport(Report r) : base(std::move(r)) {}

  Report base;
  std::vector<std::string> local_statements;  // parallel to base.places
  std::string global_statement;
  std::string summary;

  nlohmann::json to_json() const;
  std::string to_text() const;
};

std::string levi_statement(PlaceVerdict v);
std::string levi_statement(GlobalVerdict v);

/// Throws PreconditionError in characteristic 2.
LeviReport levi_report(const RatFunc& f, const std::optional<RatFunc>& f0, const ReportConfig& config = {});

}  // namespace asgl
