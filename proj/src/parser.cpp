#include <algorithm>
#include <cctype>
#include <set>

#include "bfunp/polyalg.hpp"

// Recursive-descent parser for the polynomial expression grammar declared in
// polyalg.hpp. Errors carry the byte offset of the offending character.

namespace bfunp {

namespace {

class Parser {
 public:
  Parser(const std::string& src, AmbientPtr amb)
      : src_(src), amb_(std::move(amb)) {}

  Poly run() {
    Poly result = Poly::zero(amb_);
    skip_ws();
    bool negate = false;
    if (peek() == '-') {  // unary minus on the first term only
      ++pos_;
      negate = true;
    }
    Poly t = parse_term();
    result = result + (negate ? t.negated() : t);
    skip_ws();
    while (pos_ < src_.size()) {
      char op = peek();
      if (op != '+' && op != '-') fail("expected '+' or '-'");
      ++pos_;
      Poly next = parse_term();
      result = result + (op == '-' ? next.negated() : next);
      skip_ws();
    }
    return result;
  }

 private:
  char peek() const { return pos_ < src_.size() ? src_[pos_] : '\0'; }

  void skip_ws() {
    while (pos_ < src_.size() &&
           std::isspace(static_cast<unsigned char>(src_[pos_])))
      ++pos_;
  }

  [[noreturn]] void fail(const std::string& msg) const {
    throw ParseError(msg, pos_);
  }

  std::uint64_t parse_uint() {
    skip_ws();
    if (!std::isdigit(static_cast<unsigned char>(peek())))
      fail("expected a number");
    std::uint64_t v = 0;
    while (std::isdigit(static_cast<unsigned char>(peek()))) {
      v = v * 10 + static_cast<std::uint64_t>(peek() - '0');
      if (v > 1'000'000'000'000ull) fail("number too large");
      ++pos_;
    }
    return v;
  }

  std::string parse_identifier() {
    skip_ws();
    if (!std::islower(static_cast<unsigned char>(peek())))
      fail("expected a variable");
    std::string name;
    while (std::islower(static_cast<unsigned char>(peek())) ||
           std::isdigit(static_cast<unsigned char>(peek()))) {
      name += peek();
      ++pos_;
    }
    return name;
  }

  // factor := var ('^' uint)?
  Poly parse_factor() {
    std::size_t at = pos_;
    std::string name = parse_identifier();
    auto it = std::find(amb_->vars.begin(), amb_->vars.end(), name);
    if (it == amb_->vars.end())
      throw ParseError("unknown variable '" + name + "'", at);
    std::size_t index = static_cast<std::size_t>(it - amb_->vars.begin());
    std::uint64_t exp = 1;
    skip_ws();
    if (peek() == '^') {
      ++pos_;
      exp = parse_uint();
      if (exp > 0xffffffffull) fail("exponent too large");
    }
    Monomial m(amb_->nvars());
    m.set_exponent(index, static_cast<std::uint32_t>(exp));
    return Poly::from_term(amb_, m, 1);
  }

  // term := coeff | coeff '*' factors | factors
  Poly parse_term() {
    skip_ws();
    if (std::isdigit(static_cast<unsigned char>(peek()))) {
      std::uint64_t c = parse_uint();
      skip_ws();
      if (peek() != '*') return Poly::constant(amb_, c);
      ++pos_;
      return parse_factors().scaled(c);
    }
    return parse_factors();
  }

  // factors := factor ('*' factor)*
  Poly parse_factors() {
    Poly f = parse_factor();
    skip_ws();
    while (peek() == '*') {
      ++pos_;
      f = f * parse_factor();
      skip_ws();
    }
    return f;
  }

  const std::string& src_;
  AmbientPtr amb_;
  std::size_t pos_ = 0;
};

}  // namespace

Poly parse_poly(const std::string& src, AmbientPtr amb) {
  return Parser(src, std::move(amb)).run();
}

Poly parse_poly(const std::string& src, const std::vector<std::string>& vars,
                Prime p) {
  return parse_poly(src, make_ambient(vars, p));
}

std::vector<std::string> infer_variables(const std::string& src) {
  std::set<std::string> names;
  std::size_t i = 0;
  while (i < src.size()) {
    if (std::islower(static_cast<unsigned char>(src[i]))) {
      std::string name;
      while (i < src.size() &&
             (std::islower(static_cast<unsigned char>(src[i])) ||
              std::isdigit(static_cast<unsigned char>(src[i])))) {
        name += src[i];
        ++i;
      }
      names.insert(name);
    } else {
      ++i;
    }
  }
  return {names.begin(), names.end()};
}

}  // namespace bfunp
