#include <array>

#include "asgl/errors.hpp"
#include "asgl/local_global.hpp"
#include "asgl/serialize.hpp"

namespace asgl {

namespace {

bool is_prime(int p) {
  if (p < 2) return false;
  for (int d = 2; d * d <= p; ++d) {
    if (p % d == 0) return false;
  }
  return true;
}

Fact valuation_fact(int id, std::string claim, const RatFunc& h, const Place& place) {
  const auto dec = as_unsolvable_valuation(h, place);
  Fact fact{id, std::move(claim), "computation", false, {}};
  fact.data = {{"element", to_json(h)},
               {"place", to_json(place)},
               {"valuation", valuation_exact(h, place)},
               {"decision", dec.to_json()}};
  fact.holds = dec.verdict == ASVerdict::kUnsolvable && dec.valuation == -1;
  return fact;
}

/**
 * Atoms: A = [F:K(x)] = p, B = [E:K(x)] = p, C = E in K((x-1)), D = F not in K((x-1)),
 * R = root in F, S = E in F, Q = E = F, U = F in K((x-1)).
 * Rules: R -> S, (S & A & B) -> Q, (Q & C) -> U, D -> !U. Checks that every
 * assignment of R, S, Q, U satisfying the rules has R false.
 */
Fact composition_fact(bool a, bool b, bool c, bool d) {
  int models = 0;
  int models_with_root = 0;
  for (int mask = 0; mask < 16; ++mask) {
    const bool r = mask & 1, s = mask & 2, q = mask & 4, u = mask & 8;
    const bool rules = (!r || s) && (!(s && a && b) || q) && (!(q && c) || u) && (!d || !u);
    if (!rules) continue;
    ++models;
    if (r) ++models_with_root;
  }
  Fact fact{5, "no root of Z^p - Z = t/x in F", "logic", models_with_root == 0, {}};
  fact.data = {{"premises", {{"A", a}, {"B", b}, {"C", c}, {"D", d}}},
               {"rules", {"R -> S", "S & A & B -> Q", "Q & C -> U", "D -> !U"}},
               {"atoms",
                {{"R", "Z^p - Z = t/x has a root in F"},
                 {"S", "E embeds in F"},
                 {"Q", "E = F"},
                 {"U", "F embeds in K((x-1))"}}},
               {"assignments", 16},
               {"models", models},
               {"models_with_root", models_with_root}};
  return fact;
}

bool stored_witness_checks(const nlohmann::json& witness, const RatFunc& h, const Place& place, Precision precision) {
  if (witness.is_null() || witness.value("kind", "") != "trunc") return true;
  const auto u = truncseries_from_json(witness);
  return check_root_series(LocalSeries(u), h, DvrView::completion_at(place), precision);
}

}  // namespace

CounterexampleCertificate verify_counterexample(int p, Precision precision, int degree_bound) {
  if (!is_prime(p)) throw PreconditionError("p must be prime");
  const auto k = GaloisField::make(p);
  const auto t = RatFunc::t(k);
  const auto x = RatFunc::x(k);
  const auto one = RatFunc::constant(k, 1);
  const RatFunc f = t / x;
  const RatFunc f0 = t / x + t / (x - one);
  const auto at0 = Place::finite(UPoly(k, {0, 1}));
  const auto at1 = Place::finite(UPoly(k, {k->neg(1), 1}));

  CounterexampleCertificate cert;
  cert.p = p;
  cert.precision = precision;
  cert.degree_bound = degree_bound;
  cert.facts.push_back(valuation_fact(1, "v_x(f0) = -1, so [F:K(x)] = p", f0, at0));
  cert.facts.push_back(valuation_fact(2, "v_x(t/x) = -1, so [E:K(x)] = p", f, at0));

  {
    Fact fact{3, "t/x lies in the maximal ideal at x = 1 and has a root series there, so E embeds in K((x-1))",
              "computation", false, {}};
    const auto m = maximal_ideal_membership(f, at1);
    fact.data = {{"element", to_json(f)}, {"place", to_json(at1)}, {"membership", m.to_string()}};
    if (m.kind == Membership::Kind::kInMaxIdeal) {
      const auto rs = as_root_series(f, at1, precision);
      const bool ok = check_root_series(rs.series, f, DvrView::completion_at(at1), precision);
      fact.data["witness"] = to_json(rs.series);
      fact.data["terms"] = rs.terms;
      fact.data["root_check"] = ok;
      fact.holds = ok;
    }
    cert.facts.push_back(std::move(fact));
  }

  cert.facts.push_back(valuation_fact(4, "v_{x-1}(f0) = -1, so F does not embed in K((x-1))", f0, at1));
  cert.facts.push_back(
      composition_fact(cert.facts[0].holds, cert.facts[1].holds, cert.facts[2].holds, cert.facts[3].holds));

  {
    Fact fact{6, "Z^p - Z = t/x has a root in every enumerated completion of F", "computation", false, {}};
    const auto report = local_global_report(f, f0, {degree_bound, precision});
    bool all = true;
    nlohmann::json table = nlohmann::json::array();
    for (const auto& d : report.places) {
      all = all && is_solvable(d.verdict);
      table.push_back(d.to_json());
    }
    fact.data = {{"places", table}, {"count", report.places.size()}};
    fact.holds = all;
    cert.facts.push_back(std::move(fact));
  }

  cert.facts.push_back({7,
                        "every discrete valuation of F is covered by a point of P^1 over k or the t-adic valuation "
                        "(Harbater-Hartmann-Krashen, Prop. 7.4)",
                        "cited-assumption",
                        true,
                        {{"verified", false}}});

  cert.valid = true;
  for (const auto& fact : cert.facts) {
    if (fact.kind != "cited-assumption" && !fact.holds) {
      cert.valid = false;
      cert.failing_step = "fact " + std::to_string(fact.id) + ": " + fact.claim;
      break;
    }
  }
  return cert;
}

nlohmann::json CounterexampleCertificate::to_json() const {
  nlohmann::json facts_json = nlohmann::json::array();
  for (const auto& f : facts) {
    facts_json.push_back({{"id", f.id}, {"claim", f.claim}, {"kind", f.kind}, {"holds", f.holds}, {"data", f.data}});
  }
  return {{"type", "counterexample"},
          {"status", valid ? "VALID" : "INVALID"},
          {"failing_step", failing_step},
          {"p", p},
          {"f", "t/x"},
          {"f0", "t/x + t/(x - 1)"},
          {"precision", {precision.t, precision.s}},
          {"degree_bound", degree_bound},
          {"facts", facts_json}};
}

ReplayResult replay_certificate(const nlohmann::json& certificate) {
  try {
    const auto type = certificate.at("type").get<std::string>();
    const Precision precision{certificate.at("precision").at(0).get<int>(), certificate.at("precision").at(1).get<int>()};
    if (type == "counterexample") {
      const auto fresh =
          verify_counterexample(certificate.at("p").get<int>(), precision, certificate.at("degree_bound").get<int>());
      if (fresh.to_json() != certificate) return {false, "stored certificate differs from its recomputation"};
      const auto& f3 = certificate.at("facts").at(2).at("data");
      if (!stored_witness_checks(f3.at("witness"), ratfunc_from_json(f3.at("element")), place_from_json(f3.at("place")),
                                 precision)) {
        return {false, "stored witness of fact 3 fails its root check"};
      }
      return {fresh.valid, fresh.valid ? "" : fresh.failing_step};
    }
    if (type == "translation") {
      const auto declared = certificate.at("declared_target");
      const auto fresh = translated_root_certificate(
          ratfunc_from_json(certificate.at("f_total")), ratfunc_from_json(certificate.at("g")),
          place_from_json(certificate.at("place")), precision,
          declared.is_null() ? std::nullopt : std::optional<RatFunc>(ratfunc_from_json(declared)));
      if (fresh.to_json() != certificate) return {false, "stored certificate differs from its recomputation"};
      const RatFunc h = fresh.g.is_zero() ? fresh.f_total : fresh.g;
      if (!stored_witness_checks(certificate.at("witness"), h, fresh.place, precision)) {
        return {false, "stored witness fails its root check"};
      }
      return {fresh.valid, fresh.failure};
    }
    return {false, "unknown certificate type " + type};
  } catch (const nlohmann::json::exception& e) {
    return {false, std::string("malformed certificate: ") + e.what()};
  } catch (const PreconditionError& e) {
    return {false, std::string("malformed certificate: ") + e.what()};
  }
}

}  // namespace asgl
