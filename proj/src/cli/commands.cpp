#include <algorithm>
#include <functional>
#include <sstream>

#include "CLI11.hpp"
#include "asgl/cli.hpp"
#include "asgl/elliptic.hpp"
#include "asgl/errors.hpp"
#include "asgl/local_global.hpp"
#include "asgl/serialize.hpp"

namespace asgl {

namespace {

struct RunConfig {
  int p = 3;
  int ext_degree = 1;
  int degree_bound = 3;
  std::string precision = "32,32";
  std::string format = "text";
  int root_bound = 6;
  std::string f;
  std::string field_ext;
  std::string place;
  std::string a = "0";
  std::string b = "1";
};

class ConfigError : public std::runtime_error {
 public:
  using std::runtime_error::runtime_error;
};

Precision parse_precision(const std::string& s) {
  const auto comma = s.find(',');
  try {
    std::size_t used = 0;
    const int t = std::stoi(s.substr(0, comma), &used);
    int sv = t;
    if (comma != std::string::npos) sv = std::stoi(s.substr(comma + 1), &used);
    if (t < 1 || sv < 1) throw ConfigError("precision must be positive");
    return {t, sv};
  } catch (const std::logic_error&) {
    throw ConfigError("precision must be N or Nt,Ns");
  }
}

bool is_prime(int p) {
  if (p < 2) return false;
  for (int d = 2; d * d <= p; ++d) {
    if (p % d == 0) return false;
  }
  return true;
}

FieldPtr field_of(const RunConfig& c) {
  if (!is_prime(c.p)) throw ConfigError("--p must be prime");
  if (c.ext_degree < 1) throw ConfigError("--ext-degree must be at least 1");
  if (c.degree_bound < 1 || c.root_bound < 1) throw ConfigError("bounds must be at least 1");
  return GaloisField::make(c.p, c.ext_degree);
}

bool structured(const RunConfig& c) {
  if (c.format == "json" || c.format == "structured") return true;
  if (c.format == "text") return false;
  throw ConfigError("--format must be text or json");
}

RatFunc required_element(const std::string& text, const std::string& flag, const FieldPtr& F) {
  if (text.empty()) throw ConfigError(flag + " is required");
  return parse_ratfunc(text, F);
}

std::optional<RatFunc> extension(const RunConfig& c, const FieldPtr& F) {
  if (c.field_ext.empty()) return std::nullopt;
  return parse_ratfunc(c.field_ext, F);
}

FieldElement constant_of(const std::string& text, const std::string& flag, const FieldPtr& F) {
  const auto r = required_element(text, flag, F);
  if (!r.free_of_t() || !r.free_of_x()) throw ConfigError(flag + " must be a constant");
  return {F, F->div(r.num().constant_term(), r.den().constant_term())};
}

std::string dump(const nlohmann::json& j) { return j.dump(2) + "\n"; }

bool mentions_unknown_at_precision(const nlohmann::json& j) {
  if (j.is_string()) return j.get<std::string>() == "UNKNOWN_AT_PRECISION";
  if (j.is_structured()) {
    for (const auto& v : j) {
      if (mentions_unknown_at_precision(v)) return true;
    }
  }
  return false;
}

struct Output {
  nlohmann::json json;
  std::string text;
};

Output cmd_decide(const RunConfig& c) {
  const auto F = field_of(c);
  const auto f = required_element(c.f, "--f", F);
  if (c.place.empty()) throw ConfigError("--place is required");
  const auto place = parse_place(c.place, F);
  const auto prec = parse_precision(c.precision);
  const auto d = decide_at_place(f, place, prec, extension(c, F));
  const auto dvr = as_decide_dvr(f, DvrView::completion_at(place), prec);
  auto j = d.to_json();
  j["completion"] = dvr.to_json();
  std::ostringstream text;
  text << "f = " << f.to_string() << " at " << place.to_string() << "\n"
       << "status: " << to_string(d.verdict) << " (" << d.route << ")\n"
       << "completion " << dvr.view << ": " << to_string(dvr.verdict) << "\n";
  if (dvr.obstruction) text << "obstruction: " << dvr.obstruction->to_json().dump() << "\n";
  for (const auto& n : d.notes) text << "note: " << n << "\n";
  return {j, text.str()};
}

Output cmd_root(const RunConfig& c) {
  const auto F = field_of(c);
  const auto f = required_element(c.f, "--f", F);
  if (c.place.empty()) throw ConfigError("--place is required");
  const auto place = parse_place(c.place, F);
  const auto prec = parse_precision(c.precision);
  const auto rs = as_root_series(f, place, prec);
  const bool ok = check_root_series(rs.series, f, DvrView::completion_at(place), prec);
  nlohmann::json j{{"f", f.to_string()},
                   {"place", place.to_string()},
                   {"terms", rs.terms},
                   {"root_check", ok},
                   {"series", to_json(rs.series)},
                   {"rendered", to_string(rs.series)}};
  std::ostringstream text;
  text << "u = " << to_string(rs.series) << "\n"
       << "terms: " << rs.terms << ", u^p - u = f in the window: " << (ok ? "yes" : "no") << "\n";
  return {j, text.str()};
}

ReportConfig report_config(const RunConfig& c) { return {c.degree_bound, parse_precision(c.precision), c.root_bound}; }

Output cmd_report(const RunConfig& c) {
  const auto F = field_of(c);
  const auto r = local_global_report(required_element(c.f, "--f", F), extension(c, F), report_config(c));
  return {r.to_json(), r.to_text()};
}

Output cmd_levi(const RunConfig& c) {
  const auto F = field_of(c);
  const auto f = required_element(c.f, "--f", F);
  const auto r = levi_report(f, extension(c, F), report_config(c));
  return {r.to_json(), r.to_text()};
}

Output cmd_verify(const RunConfig& c) {
  field_of(c);
  const auto cert = verify_counterexample(c.p, parse_precision(c.precision), c.degree_bound);
  std::ostringstream text;
  text << "certificate for Z^p - Z = t/x over F = K(x)(y), y^p - y = t/x + t/(x - 1)\n"
       << "p = " << cert.p << ", precision (" << cert.precision.t << ", " << cert.precision.s << "), degree bound "
       << cert.degree_bound << "\n";
  for (const auto& fact : cert.facts) {
    text << "  (" << fact.id << ") [" << fact.kind << "] " << (fact.holds ? "holds" : "FAILS") << ": " << fact.claim
         << "\n";
  }
  text << (cert.valid ? "VALID" : "INVALID: " + cert.failing_step) << "\n";
  return {cert.to_json(), text.str()};
}

Output cmd_hasse(const RunConfig& c) {
  const auto F = field_of(c);
  const EllipticCurve E(constant_of(c.a, "--a", F), constant_of(c.b, "--b", F));
  const auto h = hasse_invariant(E);
  const auto j = j_invariant(E);
  nlohmann::json out{{"p", c.p},
                     {"curve", E.to_string()},
                     {"hasse_invariant", h.to_string()},
                     {"supersingular", h.is_zero()},
                     {"j", j.to_string()}};
  std::ostringstream text;
  text << E.to_string() << "\nHasse invariant: " << h.to_string() << " ("
       << (h.is_zero() ? "supersingular" : "ordinary") << ")\nj = " << j.to_string() << "\n";
  return {out, text.str()};
}

Output cmd_census(const RunConfig& c) {
  field_of(c);
  const auto census = supersingular_census(c.p);
  return {census.to_json(), census.to_text()};
}

}  // namespace

CommandResult run_command(const std::vector<std::string>& args) {
  RunConfig cfg;
  CLI::App app{"Artin-Schreier equations over completions of k((t))(x)", "asgl"};
  app.require_subcommand(1);
  std::map<CLI::App*, std::function<Output(const RunConfig&)>> handlers;

  auto common = [&](CLI::App* sub) {
    sub->add_option("--p", cfg.p, "characteristic");
    sub->add_option("--ext-degree", cfg.ext_degree, "k = F_{p^n}");
    sub->add_option("--format", cfg.format, "text or json");
  };
  auto field_opts = [&](CLI::App* sub, bool with_place) {
    sub->add_option("--f", cfg.f, "element of F_p(t, x)");
    sub->add_option("--field-ext", cfg.field_ext, "f0 defining F = K(x)(y), y^p - y = f0");
    sub->add_option("--precision", cfg.precision, "Nt,Ns");
    if (with_place) {
      sub->add_option("--place", cfg.place, "pt:<poly>, inf or gauss");
    } else {
      sub->add_option("--degree-bound", cfg.degree_bound, "places up to this degree");
      sub->add_option("--root-bound", cfg.root_bound, "degree bound of the global root search");
    }
  };

  auto* decide = app.add_subcommand("decide", "decide Z^p - Z = f at one place");
  common(decide);
  field_opts(decide, true);
  handlers[decide] = cmd_decide;

  auto* root = app.add_subcommand("root", "root series of f in the maximal ideal");
  common(root);
  field_opts(root, true);
  handlers[root] = cmd_root;

  auto* report = app.add_subcommand("report", "per-place table and global verdict");
  common(report);
  field_opts(report, false);
  handlers[report] = cmd_report;

  auto* levi = app.add_subcommand("levi", "Levi-factor reading of the report (p > 2)");
  common(levi);
  field_opts(levi, false);
  handlers[levi] = cmd_levi;

  auto* verify = app.add_subcommand("verify-counterexample", "certificate for t/x over F");
  common(verify);
  verify->add_option("--precision", cfg.precision, "N or Nt,Ns");
  verify->add_option("--degree-bound", cfg.degree_bound, "places up to this degree");
  handlers[verify] = cmd_verify;

  auto* hasse = app.add_subcommand("hasse", "Hasse invariant of y^2 = x^3 + a x + b");
  common(hasse);
  hasse->add_option("--a", cfg.a, "coefficient a");
  hasse->add_option("--b", cfg.b, "coefficient b");
  handlers[hasse] = cmd_hasse;

  auto* census = app.add_subcommand("ss-census", "supersingular j-invariants over F_{p^2}");
  common(census);
  handlers[census] = cmd_census;

  CommandResult result;
  try {
    std::vector<std::string> reversed(args.rbegin(), args.rend());
    app.parse(reversed);
  } catch (const CLI::CallForHelp&) {
    result.output = app.help();
    return result;
  } catch (const CLI::ParseError& e) {
    result.exit_code = 2;
    result.error = std::string(e.what()) + "\n";
    return result;
  }

  CLI::App* chosen = app.get_subcommands().front();
  try {
    const bool as_json = structured(cfg);
    const auto out = handlers.at(chosen)(cfg);
    result.output = as_json ? dump(out.json) : out.text;
    if (mentions_unknown_at_precision(out.json)) result.exit_code = 3;
  } catch (const ParseError& e) {
    result.exit_code = 2;
    result.error = std::string("parse error: ") + e.what() + "\n";
  } catch (const ConfigError& e) {
    result.exit_code = 2;
    result.error = std::string("configuration error: ") + e.what() + "\n";
  } catch (const PreconditionError& e) {
    result.exit_code = 2;
    result.error = std::string("error: ") + e.what() + "\n";
  } catch (const DomainError& e) {
    result.exit_code = 2;
    result.error = std::string("error: ") + e.what() + "\n";
  }
  return result;
}

}  // namespace asgl
