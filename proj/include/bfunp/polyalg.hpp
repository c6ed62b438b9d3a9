#pragma once

#include <array>
#include <cstdint>
#include <memory>
#include <optional>
#include <stdexcept>
#include <string>
#include <vector>

// Exact multivariate polynomial arithmetic over F_p, an expression parser,
// and Groebner-basis ideal operations (membership, equality).
//
// Conventions fixed for the whole library:
//   - monomial order: graded reverse-lexicographic, variables in declaration
//     order (first declared variable is largest);
//   - coefficients stored as integers in [0, p-1], never 0 for stored terms;
//   - every Ideal carries the unique reduced Groebner basis as canonical form.

namespace bfunp {

inline constexpr int kMaxVars = 8;
inline constexpr std::uint32_t kMaxPrime = 97;

class Error : public std::runtime_error {
 public:
  explicit Error(const std::string& msg) : std::runtime_error(msg) {}
};

// Syntax error with byte position into the source text.
class ParseError : public Error {
 public:
  ParseError(const std::string& msg, std::size_t position)
      : Error(msg + " (at position " + std::to_string(position) + ")"),
        position_(position) {}
  std::size_t position() const { return position_; }

 private:
  std::size_t position_;
};

// Raised when a computation exceeds the configured degree/term caps.
class CappedError : public Error {
 public:
  explicit CappedError(const std::string& msg) : Error(msg) {}
};

// Resource caps for power chains and Frobenius-root computations.
// max_degree == 0 means "derive from the run" (p^e_max * deg f).
struct Caps {
  std::uint64_t max_degree = 0;
  std::size_t max_terms = 4'000'000;
};

// A validated prime, 2 <= p <= kMaxPrime.
class Prime {
 public:
  explicit Prime(std::uint32_t p);
  std::uint32_t value() const { return p_; }
  friend bool operator==(Prime a, Prime b) { return a.p_ == b.p_; }
  friend bool operator!=(Prime a, Prime b) { return a.p_ != b.p_; }

 private:
  std::uint32_t p_;
};

std::uint32_t mod_inverse(std::uint32_t a, std::uint32_t p);

// Variable names plus the prime; shared by all values of one computation.
struct Ambient {
  std::vector<std::string> vars;
  Prime p;

  std::size_t nvars() const { return vars.size(); }
};

using AmbientPtr = std::shared_ptr<const Ambient>;

// Validates names (grammar identifiers, distinct) and the variable count.
AmbientPtr make_ambient(std::vector<std::string> vars, Prime p);
bool same_ambient(const AmbientPtr& a, const AmbientPtr& b);

// Dense exponent vector; length equals the ambient variable count.
class Monomial {
 public:
  Monomial() = default;
  explicit Monomial(std::size_t nvars) : n_(static_cast<std::uint8_t>(nvars)) {}
  Monomial(std::initializer_list<std::uint32_t> exps);

  std::size_t nvars() const { return n_; }
  std::uint32_t exponent(std::size_t i) const { return e_[i]; }
  void set_exponent(std::size_t i, std::uint32_t v) { e_[i] = v; }
  std::uint64_t degree() const;
  bool is_one() const;

  Monomial operator*(const Monomial& o) const;
  bool divides(const Monomial& o) const;
  // Quotient o / *this; requires divides(o).
  Monomial divide_into(const Monomial& o) const;
  Monomial lcm(const Monomial& o) const;
  // Componentwise multiplication of exponents by k (Frobenius twist).
  Monomial scaled(std::uint64_t k) const;

  friend bool operator==(const Monomial& a, const Monomial& b) {
    return a.n_ == b.n_ && a.e_ == b.e_;
  }
  friend bool operator!=(const Monomial& a, const Monomial& b) {
    return !(a == b);
  }

 private:
  std::array<std::uint32_t, kMaxVars> e_{};
  std::uint8_t n_ = 0;
};

// Graded reverse-lexicographic comparison, first variable largest.
bool grevlex_less(const Monomial& a, const Monomial& b);

struct MonomialHash {
  std::size_t operator()(const Monomial& m) const;
};

struct Term {
  Monomial mono;
  std::uint32_t coeff;  // in [1, p-1]
};

// Polynomial over F_p: terms sorted grevlex-descending, coefficients nonzero.
class Poly {
 public:
  Poly() = default;

  static Poly zero(AmbientPtr amb);
  static Poly one(AmbientPtr amb);
  static Poly constant(AmbientPtr amb, std::uint64_t c);
  static Poly variable(AmbientPtr amb, std::size_t i);
  static Poly from_term(AmbientPtr amb, Monomial m, std::uint64_t c);
  // Terms in any order, coefficients any residues; collects and normalizes.
  static Poly from_terms(AmbientPtr amb, std::vector<Term> terms);

  const AmbientPtr& ambient() const { return amb_; }
  Prime prime() const { return amb_->p; }
  const std::vector<Term>& terms() const { return terms_; }
  bool is_zero() const { return terms_.empty(); }
  bool is_one() const;
  bool is_constant() const;
  std::size_t term_count() const { return terms_.size(); }
  std::uint64_t degree() const;  // 0 for the zero polynomial
  const Term& leading_term() const;
  std::uint32_t constant_coefficient() const;  // value at the origin

  Poly operator+(const Poly& o) const;
  Poly operator-(const Poly& o) const;
  Poly operator*(const Poly& o) const;
  Poly negated() const;
  Poly scaled(std::uint64_t c) const;                // multiply by constant
  Poly term_multiplied(const Monomial& m, std::uint32_t c) const;
  Poly monic() const;
  // Raises every exponent vector by the factor q = p^e; on F_p coefficients
  // this is the e-fold Frobenius of the polynomial.
  Poly frobenius_scaled(std::uint64_t q) const;

  friend bool operator==(const Poly& a, const Poly& b);
  friend bool operator!=(const Poly& a, const Poly& b) { return !(a == b); }

  std::string to_string() const;

 private:
  AmbientPtr amb_;
  std::vector<Term> terms_;
};

// f^a by base-p splitting: f^a = prod_e (f^(a_e))^(p^e), the p^e-th powers
// taken termwise (Frobenius), small powers by repeated squaring.
Poly poly_pow(const Poly& f, std::uint64_t a);

// Parses the expression grammar:
//   expr := term (('+'|'-') term)*; term := coeff | coeff '*' factors |
//   factors; factors := factor ('*' factor)*; factor := var ('^' uint)?;
//   coeff := uint; var := [a-z][a-z0-9]*.
// Whitespace insignificant; unary minus permitted on the first term.
Poly parse_poly(const std::string& src, const std::vector<std::string>& vars,
                Prime p);
Poly parse_poly(const std::string& src, AmbientPtr amb);

// Distinct identifiers appearing in src, sorted alphabetically.
std::vector<std::string> infer_variables(const std::string& src);

// Finitely generated ideal with its reduced Groebner basis.
class Ideal {
 public:
  Ideal() = default;

  const AmbientPtr& ambient() const { return amb_; }
  const std::vector<Poly>& generators() const { return gens_; }
  const std::vector<Poly>& groebner_basis() const { return gb_; }
  bool is_unit() const;
  bool is_zero() const { return gb_.empty(); }

  friend Ideal reduced_groebner(std::vector<Poly> gens);

 private:
  AmbientPtr amb_;
  std::vector<Poly> gens_;
  std::vector<Poly> gb_;  // monic, reduced, sorted by leading monomial
};

// Canonicalizes a generator list; gens must share one ambient and be
// nonempty as a list (zero polynomials are permitted and dropped).
Ideal reduced_groebner(std::vector<Poly> gens);

// Unique remainder of g modulo the reduced basis of I; zero iff g lies in I.
Poly normal_form(const Poly& g, const Ideal& I);

bool ideal_equal(const Ideal& I, const Ideal& J);
bool ideal_contains(const Ideal& I, const Poly& g);
// Every generator of J reduces to zero modulo I.
bool ideal_contains_ideal(const Ideal& I, const Ideal& J);

}  // namespace bfunp
