#include <cctype>
#include <limits>

#include "asgl/cli.hpp"
#include "asgl/errors.hpp"

namespace asgl {

namespace {

class Parser {
 public:
  explicit Parser(std::string_view in) : in_(in) {}

  ElementExpr parse() {
    skip();
    if (pos_ == in_.size()) throw ParseError("empty expression", pos_);
    auto e = expr();
    skip();
    if (pos_ != in_.size()) throw ParseError(std::string("unexpected '") + in_[pos_] + "'", pos_);
    return e;
  }

 private:
  void skip() {
    while (pos_ < in_.size() && std::isspace(static_cast<unsigned char>(in_[pos_]))) ++pos_;
  }

  bool accept(char c) {
    skip();
    if (pos_ < in_.size() && in_[pos_] == c) {
      ++pos_;
      return true;
    }
    return false;
  }

  static ElementExpr node(ElementExpr::Kind k, std::size_t offset, std::vector<ElementExpr> children) {
    ElementExpr e;
    e.kind = k;
    e.offset = offset;
    e.children = std::move(children);
    return e;
  }

  ElementExpr expr() {
    auto lhs = term();
    for (;;) {
      skip();
      const std::size_t at = pos_;
      if (accept('+')) {
        lhs = node(ElementExpr::Kind::kAdd, at, {std::move(lhs), term()});
      } else if (accept('-')) {
        lhs = node(ElementExpr::Kind::kSub, at, {std::move(lhs), term()});
      } else {
        return lhs;
      }
    }
  }

  ElementExpr term() {
    auto lhs = factor();
    for (;;) {
      skip();
      const std::size_t at = pos_;
      if (accept('*')) {
        lhs = node(ElementExpr::Kind::kMul, at, {std::move(lhs), factor()});
      } else if (accept('/')) {
        lhs = node(ElementExpr::Kind::kDiv, at, {std::move(lhs), factor()});
      } else {
        return lhs;
      }
    }
  }

  ElementExpr factor() {
    skip();
    const std::size_t at = pos_;
    const bool negate = accept('-');
    auto base = atom();
    skip();
    const std::size_t caret = pos_;
    if (accept('^')) {
      skip();
      const std::size_t exp_at = pos_;
      const auto digits = natural();
      if (digits.empty()) throw ParseError("exponent must be a nonnegative integer literal", exp_at);
      unsigned long long e = 0;
      for (char d : digits) {
        if (e > (std::numeric_limits<unsigned long long>::max() - 9) / 10) throw ParseError("exponent too large", exp_at);
        e = e * 10 + static_cast<unsigned>(d - '0');
      }
      base = node(ElementExpr::Kind::kPow, caret, {std::move(base)});
      base.exponent = e;
    }
    if (negate) return node(ElementExpr::Kind::kNeg, at, {std::move(base)});
    return base;
  }

  std::string natural() {
    std::string digits;
    while (pos_ < in_.size() && std::isdigit(static_cast<unsigned char>(in_[pos_]))) digits += in_[pos_++];
    return digits;
  }

  ElementExpr atom() {
    skip();
    const std::size_t at = pos_;
    if (pos_ == in_.size()) throw ParseError("unexpected end of input", pos_);
    const char c = in_[pos_];
    if (std::isdigit(static_cast<unsigned char>(c))) {
      auto e = node(ElementExpr::Kind::kNumber, at, {});
      e.digits = natural();
      return e;
    }
    if (c == 't' || c == 'x') {
      ++pos_;
      return node(c == 't' ? ElementExpr::Kind::kT : ElementExpr::Kind::kX, at, {});
    }
    if (accept('(')) {
      auto e = expr();
      if (!accept(')')) throw ParseError("expected ')'", pos_);
      return e;
    }
    throw ParseError(std::string("unexpected '") + c + "'", pos_);
  }

  std::string_view in_;
  std::size_t pos_ = 0;
};

}  // namespace

std::string ElementExpr::to_string() const {
  switch (kind) {
    case Kind::kNumber:
      return digits;
    case Kind::kT:
      return "t";
    case Kind::kX:
      return "x";
    case Kind::kNeg:
      return "(-" + children[0].to_string() + ")";
    case Kind::kPow:
      return "(" + children[0].to_string() + "^" + std::to_string(exponent) + ")";
    default:
      break;
  }
  static const char* kOps[] = {"", "", "", " + ", " - ", " * ", " / "};
  return "(" + children[0].to_string() + kOps[static_cast<int>(kind)] + children[1].to_string() + ")";
}

ElementExpr parse_element(std::string_view input) { return Parser(input).parse(); }

RatFunc evaluate(const ElementExpr& e, const FieldPtr& F) {
  switch (e.kind) {
    case ElementExpr::Kind::kNumber: {
      long long r = 0;
      for (char d : e.digits) r = (r * 10 + (d - '0')) % F->characteristic();
      return RatFunc::constant(F, F->from_int(r));
    }
    case ElementExpr::Kind::kT:
      return RatFunc::t(F);
    case ElementExpr::Kind::kX:
      return RatFunc::x(F);
    case ElementExpr::Kind::kNeg:
      return -evaluate(e.children[0], F);
    case ElementExpr::Kind::kPow:
      return evaluate(e.children[0], F).pow(static_cast<long long>(e.exponent));
    case ElementExpr::Kind::kAdd:
      return evaluate(e.children[0], F) + evaluate(e.children[1], F);
    case ElementExpr::Kind::kSub:
      return evaluate(e.children[0], F) - evaluate(e.children[1], F);
    case ElementExpr::Kind::kMul:
      return evaluate(e.children[0], F) * evaluate(e.children[1], F);
    case ElementExpr::Kind::kDiv: {
      const auto d = evaluate(e.children[1], F);
      if (d.is_zero()) throw DomainError("division by zero at byte " + std::to_string(e.offset));
      return evaluate(e.children[0], F) / d;
    }
  }
  return RatFunc(F);
}

RatFunc parse_ratfunc(std::string_view input, const FieldPtr& field) { return evaluate(parse_element(input), field); }

Place parse_place(std::string_view input, const FieldPtr& field) {
  if (input == "inf") return Place::infinity();
  if (input == "gauss") return Place::gauss();
  if (input.substr(0, 3) != "pt:") throw ParseError("place must be pt:<polynomial>, inf or gauss", 0);
  const auto f = parse_ratfunc(input.substr(3), field);
  if (!f.is_polynomial() || !f.free_of_t() || f.is_zero()) {
    throw PreconditionError("place polynomial must be a nonzero polynomial in x");
  }
  const auto& den = f.den();
  const auto inv = field->inv(den.constant_term());
  std::vector<GaloisField::Value> coeffs(f.num().degree_x() + 1, 0);
  for (const auto& term : f.num().terms()) coeffs[term.x] = field->mul(term.c, inv);
  return Place::finite(UPoly(field, coeffs));
}

}  // namespace asgl
