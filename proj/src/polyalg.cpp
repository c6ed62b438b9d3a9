#include "bfunp/polyalg.hpp"

#include <algorithm>
#include <cctype>
#include <sstream>
#include <unordered_map>

namespace bfunp {

namespace {

bool is_prime_u32(std::uint32_t n) {
  if (n < 2) return false;
  for (std::uint32_t d = 2; d * d <= n; ++d)
    if (n % d == 0) return false;
  return true;
}

std::uint32_t mod_mul(std::uint32_t a, std::uint32_t b, std::uint32_t p) {
  return static_cast<std::uint32_t>(
      (static_cast<std::uint64_t>(a) * b) % p);
}

std::uint32_t mod_pow(std::uint32_t a, std::uint64_t n, std::uint32_t p) {
  std::uint32_t r = 1 % p;
  std::uint32_t base = a % p;
  while (n) {
    if (n & 1) r = mod_mul(r, base, p);
    base = mod_mul(base, base, p);
    n >>= 1;
  }
  return r;
}

}  // namespace

Prime::Prime(std::uint32_t p) : p_(p) {
  if (!is_prime_u32(p)) throw Error("p = " + std::to_string(p) + " is not prime");
  if (p > kMaxPrime)
    throw Error("p = " + std::to_string(p) + " exceeds the supported bound " +
                std::to_string(kMaxPrime));
}

std::uint32_t mod_inverse(std::uint32_t a, std::uint32_t p) {
  if (a % p == 0) throw Error("division by zero mod p");
  return mod_pow(a % p, p - 2, p);
}

AmbientPtr make_ambient(std::vector<std::string> vars, Prime p) {
  if (vars.empty() || vars.size() > kMaxVars)
    throw Error("variable count must be between 1 and " +
                std::to_string(kMaxVars));
  for (const auto& v : vars) {
    if (v.empty() || !std::islower(static_cast<unsigned char>(v[0])))
      throw Error("invalid variable name '" + v + "'");
    for (char c : v)
      if (!std::islower(static_cast<unsigned char>(c)) &&
          !std::isdigit(static_cast<unsigned char>(c)))
        throw Error("invalid variable name '" + v + "'");
  }
  for (std::size_t i = 0; i < vars.size(); ++i)
    for (std::size_t j = i + 1; j < vars.size(); ++j)
      if (vars[i] == vars[j]) throw Error("duplicate variable '" + vars[i] + "'");
  return std::make_shared<const Ambient>(Ambient{std::move(vars), p});
}

bool same_ambient(const AmbientPtr& a, const AmbientPtr& b) {
  if (a == b) return true;
  if (!a || !b) return false;
  return a->p == b->p && a->vars == b->vars;
}

Monomial::Monomial(std::initializer_list<std::uint32_t> exps) {
  if (exps.size() > kMaxVars) throw Error("too many exponents");
  n_ = static_cast<std::uint8_t>(exps.size());
  std::size_t i = 0;
  for (auto v : exps) e_[i++] = v;
}

std::uint64_t Monomial::degree() const {
  std::uint64_t d = 0;
  for (std::size_t i = 0; i < n_; ++i) d += e_[i];
  return d;
}

bool Monomial::is_one() const {
  for (std::size_t i = 0; i < n_; ++i)
    if (e_[i]) return false;
  return true;
}

Monomial Monomial::operator*(const Monomial& o) const {
  Monomial r(n_);
  for (std::size_t i = 0; i < n_; ++i) r.e_[i] = e_[i] + o.e_[i];
  return r;
}

bool Monomial::divides(const Monomial& o) const {
  for (std::size_t i = 0; i < n_; ++i)
    if (e_[i] > o.e_[i]) return false;
  return true;
}

Monomial Monomial::divide_into(const Monomial& o) const {
  Monomial r(n_);
  for (std::size_t i = 0; i < n_; ++i) r.e_[i] = o.e_[i] - e_[i];
  return r;
}

Monomial Monomial::lcm(const Monomial& o) const {
  Monomial r(n_);
  for (std::size_t i = 0; i < n_; ++i) r.e_[i] = std::max(e_[i], o.e_[i]);
  return r;
}

Monomial Monomial::scaled(std::uint64_t k) const {
  Monomial r(n_);
  for (std::size_t i = 0; i < n_; ++i) {
    std::uint64_t v = e_[i] * k;
    if (v > 0xffffffffull) throw Error("exponent overflow in Frobenius twist");
    r.e_[i] = static_cast<std::uint32_t>(v);
  }
  return r;
}

bool grevlex_less(const Monomial& a, const Monomial& b) {
  std::uint64_t da = a.degree(), db = b.degree();
  if (da != db) return da < db;
  // Equal degree: larger is the one with the smaller exponent at the last
  // index where they differ.
  for (std::size_t i = a.nvars(); i-- > 0;) {
    if (a.exponent(i) != b.exponent(i)) return a.exponent(i) > b.exponent(i);
  }
  return false;
}

std::size_t MonomialHash::operator()(const Monomial& m) const {
  std::size_t h = 1469598103934665603ull;
  for (std::size_t i = 0; i < m.nvars(); ++i) {
    h ^= m.exponent(i);
    h *= 1099511628211ull;
  }
  return h;
}

Poly Poly::zero(AmbientPtr amb) {
  Poly f;
  f.amb_ = std::move(amb);
  return f;
}

Poly Poly::one(AmbientPtr amb) { return constant(std::move(amb), 1); }

Poly Poly::constant(AmbientPtr amb, std::uint64_t c) {
  const std::uint32_t p = amb->p.value();
  Poly f;
  f.amb_ = std::move(amb);
  std::uint32_t r = static_cast<std::uint32_t>(c % p);
  if (r) f.terms_.push_back({Monomial(f.amb_->nvars()), r});
  return f;
}

Poly Poly::variable(AmbientPtr amb, std::size_t i) {
  if (i >= amb->nvars()) throw Error("variable index out of range");
  Monomial m(amb->nvars());
  m.set_exponent(i, 1);
  return from_term(std::move(amb), m, 1);
}

Poly Poly::from_term(AmbientPtr amb, Monomial m, std::uint64_t c) {
  const std::uint32_t p = amb->p.value();
  Poly f;
  f.amb_ = std::move(amb);
  std::uint32_t r = static_cast<std::uint32_t>(c % p);
  if (r) f.terms_.push_back({m, r});
  return f;
}

Poly Poly::from_terms(AmbientPtr amb, std::vector<Term> terms) {
  const std::uint32_t p = amb->p.value();
  std::unordered_map<Monomial, std::uint32_t, MonomialHash> acc;
  for (const auto& t : terms) {
    auto& slot = acc[t.mono];
    slot = (slot + t.coeff) % p;
  }
  Poly f;
  f.amb_ = std::move(amb);
  f.terms_.reserve(acc.size());
  for (auto& [m, c] : acc)
    if (c) f.terms_.push_back({m, c});
  std::sort(f.terms_.begin(), f.terms_.end(),
            [](const Term& a, const Term& b) {
              return grevlex_less(b.mono, a.mono);
            });
  return f;
}

bool Poly::is_one() const {
  return terms_.size() == 1 && terms_[0].mono.is_one() && terms_[0].coeff == 1;
}

bool Poly::is_constant() const {
  return terms_.empty() || (terms_.size() == 1 && terms_[0].mono.is_one());
}

std::uint64_t Poly::degree() const {
  std::uint64_t d = 0;
  for (const auto& t : terms_) d = std::max(d, t.mono.degree());
  return d;
}

const Term& Poly::leading_term() const {
  if (terms_.empty()) throw Error("leading term of the zero polynomial");
  return terms_.front();
}

std::uint32_t Poly::constant_coefficient() const {
  if (terms_.empty()) return 0;
  const Term& last = terms_.back();
  return last.mono.is_one() ? last.coeff : 0;
}

Poly Poly::operator+(const Poly& o) const {
  if (!same_ambient(amb_, o.amb_)) throw Error("mixed ambients in +");
  const std::uint32_t p = amb_->p.value();
  Poly r;
  r.amb_ = amb_;
  r.terms_.reserve(terms_.size() + o.terms_.size());
  std::size_t i = 0, j = 0;
  while (i < terms_.size() && j < o.terms_.size()) {
    if (terms_[i].mono == o.terms_[j].mono) {
      std::uint32_t c = (terms_[i].coeff + o.terms_[j].coeff) % p;
      if (c) r.terms_.push_back({terms_[i].mono, c});
      ++i, ++j;
    } else if (grevlex_less(o.terms_[j].mono, terms_[i].mono)) {
      r.terms_.push_back(terms_[i++]);
    } else {
      r.terms_.push_back(o.terms_[j++]);
    }
  }
  while (i < terms_.size()) r.terms_.push_back(terms_[i++]);
  while (j < o.terms_.size()) r.terms_.push_back(o.terms_[j++]);
  return r;
}

Poly Poly::operator-(const Poly& o) const { return *this + o.negated(); }

Poly Poly::negated() const {
  const std::uint32_t p = amb_->p.value();
  Poly r = *this;
  for (auto& t : r.terms_) t.coeff = p - t.coeff;
  return r;
}

Poly Poly::scaled(std::uint64_t c) const {
  const std::uint32_t p = amb_->p.value();
  std::uint32_t cc = static_cast<std::uint32_t>(c % p);
  if (cc == 0) return zero(amb_);
  if (cc == 1) return *this;
  Poly r = *this;
  for (auto& t : r.terms_) t.coeff = mod_mul(t.coeff, cc, p);
  return r;
}

Poly Poly::term_multiplied(const Monomial& m, std::uint32_t c) const {
  const std::uint32_t p = amb_->p.value();
  c %= p;
  if (c == 0) return zero(amb_);
  Poly r;
  r.amb_ = amb_;
  r.terms_.reserve(terms_.size());
  for (const auto& t : terms_)
    r.terms_.push_back({t.mono * m, mod_mul(t.coeff, c, p)});
  return r;  // multiplying by a fixed monomial preserves grevlex order
}

Poly Poly::monic() const {
  if (terms_.empty()) return *this;
  return scaled(mod_inverse(terms_.front().coeff, amb_->p.value()));
}

Poly Poly::frobenius_scaled(std::uint64_t q) const {
  Poly r;
  r.amb_ = amb_;
  r.terms_.reserve(terms_.size());
  for (const auto& t : terms_) r.terms_.push_back({t.mono.scaled(q), t.coeff});
  return r;  // exponent scaling preserves grevlex order
}

Poly Poly::operator*(const Poly& o) const {
  if (!same_ambient(amb_, o.amb_)) throw Error("mixed ambients in *");
  if (is_zero() || o.is_zero()) return zero(amb_);
  if (is_one()) return o;
  if (o.is_one()) return *this;
  const std::uint32_t p = amb_->p.value();
  std::unordered_map<Monomial, std::uint32_t, MonomialHash> acc;
  acc.reserve(terms_.size() + o.terms_.size());
  for (const auto& a : terms_) {
    for (const auto& b : o.terms_) {
      auto& slot = acc[a.mono * b.mono];
      slot = static_cast<std::uint32_t>(
          (slot + static_cast<std::uint64_t>(a.coeff) * b.coeff) % p);
    }
  }
  Poly r;
  r.amb_ = amb_;
  r.terms_.reserve(acc.size());
  for (auto& [m, c] : acc)
    if (c) r.terms_.push_back({m, c});
  std::sort(r.terms_.begin(), r.terms_.end(),
            [](const Term& a, const Term& b) {
              return grevlex_less(b.mono, a.mono);
            });
  return r;
}

bool operator==(const Poly& a, const Poly& b) {
  if (!same_ambient(a.amb_, b.amb_)) return false;
  if (a.terms_.size() != b.terms_.size()) return false;
  for (std::size_t i = 0; i < a.terms_.size(); ++i)
    if (a.terms_[i].coeff != b.terms_[i].coeff ||
        a.terms_[i].mono != b.terms_[i].mono)
      return false;
  return true;
}

std::string Poly::to_string() const {
  if (terms_.empty()) return "0";
  std::ostringstream out;
  bool first = true;
  for (const auto& t : terms_) {
    if (!first) out << " + ";
    first = false;
    if (t.mono.is_one()) {
      out << t.coeff;
      continue;
    }
    bool printed = false;
    if (t.coeff != 1) {
      out << t.coeff;
      printed = true;
    }
    for (std::size_t i = 0; i < t.mono.nvars(); ++i) {
      std::uint32_t e = t.mono.exponent(i);
      if (!e) continue;
      if (printed) out << "*";
      out << amb_->vars[i];
      if (e > 1) out << "^" << e;
      printed = true;
    }
  }
  return out.str();
}

Poly poly_pow(const Poly& f, std::uint64_t a) {
  Poly result = Poly::one(f.ambient());
  if (a == 0) return result;
  const std::uint32_t p = f.prime().value();

  // Small powers (exponent < p) by repeated squaring.
  auto small_pow = [&](std::uint64_t n) {
    Poly acc = Poly::one(f.ambient());
    Poly base = f;
    while (n) {
      if (n & 1) acc = acc * base;
      if (n >>= 1) base = base * base;
    }
    return acc;
  };

  std::uint64_t q = 1;  // p^e
  while (a) {
    std::uint64_t digit = a % p;
    a /= p;
    if (digit) result = result * small_pow(digit).frobenius_scaled(q);
    if (a) {
      if (q > (std::uint64_t(1) << 50)) throw Error("exponent too large");
      q *= p;
    }
  }
  return result;
}

}  // namespace bfunp
