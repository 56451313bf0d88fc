#pragma once

#include <memory>
#include <optional>
#include <string>
#include <vector>

#include "asgl/place.hpp"
#include "json.hpp"

namespace asgl {

enum class ASVerdict { kSolvable, kUnsolvable, kUnknownAtPrecision, kUnknownResidue, kDeferred };

// "SOLVABLE", "UNSOLVABLE", "UNKNOWN_AT_PRECISION", "UNKNOWN_RESIDUE", "DEFERRED".
std::string to_string(ASVerdict v);

/**
 * A complete discretely valued field in which Z^p - Z = f is decided.
 *
 * Supported combinations:
 *   - axis S at a finite place or infinity, residue k'((t))  (the completion of K(x), K = k((t)))
 *   - axis S at a finite place or infinity, residue k'       (k'((s)); f must be free of t)
 *   - axis T at the Gauss place, residue k(x)
 *   - axis T without a place, residue k                      (K = k((t)); f must be free of x)
 * The residue tower (residue field, its residue field, ...) has height at most 3.
 */
struct DvrView {
  enum class Axis { kT, kS };
  enum class Residue { kFiniteField, kLaurentTower, kRationalFunction };

  DvrView(std::optional<Place> place, Axis axis, Residue residue, int tower_height);

  static DvrView completion_at(const Place& place);
  static DvrView finite_residue(const Place& place);
  static DvrView constant_field();

  std::optional<Place> place;
  Axis axis;
  Residue residue;
  int tower_height;

  std::string to_string() const;
};

struct Obstruction {
  enum class Kind {
    kValuation,          // p does not divide a negative valuation
    kPthPower,           // leading coefficient at valuation -pm is not a p-th power
    kTrace,              // finite residue with nonzero trace
    kResidue,            // residue equation unsolvable (see the nested decision)
    kRationalResidue,    // no root in k(x) of the residue equation (complete search)
  };
  explicit Obstruction(Kind k = Kind::kValuation) : kind(k) {}

  Kind kind;
  int valuation = 0;
  std::string label;
  std::string sub_label;
  std::optional<FieldElement> residue;
  std::optional<FieldElement> trace;
  std::optional<RatFunc> leading;
  int degree_bound = 0;

  nlohmann::json to_json() const;
};

struct ReductionStep {
  int valuation;        // -p*m
  RatFunc leading;      // leading coefficient c
  RatFunc root;         // c^(1/p)
  RatFunc correction;   // tau = root * uniformizer^(-m)
  RatFunc after;        // f - (tau^p - tau)
  std::optional<int> next_valuation;  // empty when after = 0
};

struct ReductionTranscript {
  RatFunc start;
  std::vector<ReductionStep> steps;
  std::string terminal;

  nlohmann::json to_json() const;
};

struct ASDecision {
  ASVerdict verdict = ASVerdict::kUnknownResidue;
  std::string view;
  Precision precision;
  std::optional<int> valuation;
  std::optional<Obstruction> obstruction;
  std::shared_ptr<const ASDecision> residue_decision;
  ReductionTranscript transcript;
  // For SOLVABLE: the root is exact_part + (-sum remainder^(p^i)), expanded as witness.
  std::optional<RatFunc> exact_part;
  std::optional<RatFunc> remainder;
  std::optional<LocalSeries> witness;
  std::optional<FieldElement> root;  // finite-field decisions
  std::string note;

  nlohmann::json to_json() const;
};

/// z^p - z = c over F_q: solvable iff the absolute trace of c vanishes.
ASDecision as_solvable_finite_field(const FieldElement& c);
/// All roots of z^p - z = c in F_q, ascending by encoding.
std::vector<FieldElement> as_roots_finite_field(const FieldElement& c);

/// -sum_{i<I} f^(p^i) with I minimal such that f^(p^I) has no terms in the window.
struct RootSeries {
  LocalSeries series;
  int terms = 0;
};
RootSeries lemma_a_sum(const LocalSeries& f);

/// Root series at a place for f in the maximal ideal; throws PreconditionError otherwise.
RootSeries as_root_series(const RatFunc& f, const Place& place, Precision precision = {});

/// Exact check of u^p - u = f - f^(p^I) for u = -sum_{i<I} f^(p^i).
bool partial_sum_identity_check(const RatFunc& f, int I);
/// The same identity for a truncated series, modulo its window.
bool partial_sum_identity_check(const TruncSeries& f, int I);

ASDecision as_unsolvable_valuation(const RatFunc& f, const DvrView& view);
ASDecision as_unsolvable_valuation(const RatFunc& f, const Place& place);

ASDecision as_decide_dvr(const RatFunc& f, const DvrView& view, Precision precision = {});

/**
 * Decision for an element of k'((t))((s)) known only up to its window.
 * Inconclusive steps (valuation not pinned down, p-th-power tests on
 * truncated coefficients) yield UNKNOWN_AT_PRECISION.
 */
ASDecision as_decide_series(const TruncSeries& f);

/// f expanded in the view's coordinates.
LocalSeries expand_in_view(const RatFunc& f, const DvrView& view, Precision precision);

/// u^p - u agrees with a fresh expansion of f inside the common window.
bool check_root_series(const LocalSeries& u, const RatFunc& f, const DvrView& view, Precision precision);
bool check_root_series(const LocalSeries& u, const LocalSeries& f);

/// Replays every substitution of a transcript exactly.
bool replay_transcript(const ReductionTranscript& transcript, const DvrView& view);

/**
 * Searches a root z = A/B in F_q(t, x) of z^p - z = c. Any root in lowest terms
 * has B^p = den(c), and A obeys explicit degree bounds; the search is F_p-linear
 * algebra over A's coefficients. exhaustive is set when the bounds fit under
 * degree_cap, in which case a missing root means none exists in F_q(t, x).
 */
std::optional<RatFunc> rational_as_root(const RatFunc& c, int degree_cap, bool* exhaustive = nullptr);

}  // namespace asgl
