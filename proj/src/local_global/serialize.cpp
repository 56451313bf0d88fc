#include "asgl/serialize.hpp"

#include "asgl/errors.hpp"

namespace asgl {

namespace {

nlohmann::json poly_json(const BivarPoly& g) {
  nlohmann::json terms = nlohmann::json::array();
  for (const auto& term : g.terms()) terms.push_back({term.x, term.t, term.c});
  return terms;
}

BivarPoly poly_from_json(const FieldPtr& F, const nlohmann::json& j) {
  std::vector<BivarPoly::Term> terms;
  for (const auto& term : j) {
    const auto c = term.at(2).get<GaloisField::Value>();
    if (c >= F->order()) throw PreconditionError("coefficient out of range");
    terms.push_back({term.at(0).get<int>(), term.at(1).get<int>(), c});
  }
  return BivarPoly(F, std::move(terms));
}

FieldPtr field_from_json(const nlohmann::json& j) {
  return GaloisField::make(j.at(0).get<int>(), j.at(1).get<int>());
}

}  // namespace

nlohmann::json to_json(const RatFunc& f) {
  return {{"text", f.to_string()},
          {"field", {f.field()->characteristic(), f.field()->degree()}},
          {"num", poly_json(f.num())},
          {"den", poly_json(f.den())}};
}

RatFunc ratfunc_from_json(const nlohmann::json& j) {
  try {
    const auto F = field_from_json(j.at("field"));
    return RatFunc::normalize(poly_from_json(F, j.at("num")), poly_from_json(F, j.at("den")));
  } catch (const nlohmann::json::exception& e) {
    throw PreconditionError(std::string("malformed rational function: ") + e.what());
  }
}

nlohmann::json to_json(const Place& place) {
  nlohmann::json j{{"name", place.to_string()}};
  if (place.is_finite()) {
    const auto& F = place.pi().field();
    j["field"] = {F->characteristic(), F->degree()};
    j["pi"] = place.pi().coeffs();
  }
  return j;
}

Place place_from_json(const nlohmann::json& j) {
  try {
    const auto name = j.at("name").get<std::string>();
    if (name == "inf") return Place::infinity();
    if (name == "gauss") return Place::gauss();
    const auto F = field_from_json(j.at("field"));
    return Place::finite(UPoly(F, j.at("pi").get<std::vector<GaloisField::Value>>()));
  } catch (const nlohmann::json::exception& e) {
    throw PreconditionError(std::string("malformed place: ") + e.what());
  }
}

}  // namespace asgl
