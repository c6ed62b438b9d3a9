#include "bfunp/frobenius.hpp"

#include <algorithm>
#include <unordered_map>

namespace bfunp {

std::uint64_t prime_power(Prime p, int e) {
  if (e < 0 || e > kMaxLevel + 1) throw Error("Frobenius exponent out of range");
  std::uint64_t q = 1;
  for (int i = 0; i < e; ++i) q *= p.value();
  return q;
}

Ideal bracket_power(const Ideal& I, int e) {
  if (e < 1) throw Error("bracket_power: e must be positive");
  const std::uint64_t q = prime_power(I.ambient()->p, e);
  std::vector<Poly> gens;
  for (const auto& g : I.generators()) {
    if (g.is_zero()) continue;
    gens.push_back(g.frobenius_scaled(q));
  }
  if (gens.empty()) gens.push_back(Poly::zero(I.ambient()));
  return reduced_groebner(std::move(gens));
}

std::vector<Poly> frobenius_root_generators(const Poly& g, int e) {
  if (e < 1) throw Error("frobenius_root: e must be positive");
  const std::uint64_t q = prime_power(g.prime(), e);
  const std::size_t nv = g.ambient()->nvars();

  // Bucket the terms of g by the mod-q residue of the exponent vector; the
  // quotient exponents with the original coefficient form g_mu.
  std::unordered_map<Monomial, std::vector<Term>, MonomialHash> buckets;
  for (const auto& t : g.terms()) {
    Monomial mu(nv), w(nv);
    for (std::size_t i = 0; i < nv; ++i) {
      mu.set_exponent(i, static_cast<std::uint32_t>(t.mono.exponent(i) % q));
      w.set_exponent(i, static_cast<std::uint32_t>(t.mono.exponent(i) / q));
    }
    buckets[mu].push_back({w, t.coeff});
  }

  std::vector<std::pair<Monomial, Poly>> parts;
  parts.reserve(buckets.size());
  for (auto& [mu, terms] : buckets)
    parts.emplace_back(mu, Poly::from_terms(g.ambient(), std::move(terms)));
  std::sort(parts.begin(), parts.end(),
            [](const auto& a, const auto& b) {
              return grevlex_less(a.first, b.first);
            });

  std::vector<Poly> out;
  out.reserve(parts.size());
  for (auto& [mu, part] : parts)
    if (!part.is_zero()) out.push_back(std::move(part));
  return out;
}

Ideal frobenius_root(const Ideal& J, int e) {
  std::vector<Poly> gens;
  for (const auto& g : J.generators()) {
    auto parts = frobenius_root_generators(g, e);
    gens.insert(gens.end(), parts.begin(), parts.end());
  }
  if (gens.empty()) gens.push_back(Poly::zero(J.ambient()));
  return reduced_groebner(std::move(gens));
}

Ideal d_ideal(const Poly& f, std::uint64_t n, Level l) {
  if (f.is_constant()) throw Error("d_ideal: f must be nonconstant");
  const int e = l.frobenius_exponent();
  const std::uint64_t q = prime_power(f.prime(), e);
  if (n > q) throw Error("d_ideal: n out of range");
  auto gens = frobenius_root_generators(poly_pow(f, n), e);
  if (gens.empty()) gens.push_back(Poly::zero(f.ambient()));
  return reduced_groebner(std::move(gens));
}

PowerCache::PowerCache(Poly f, Caps caps) : f_(std::move(f)), caps_(caps) {
  pow_.push_back(Poly::one(f_.ambient()));
}

void PowerCache::warm(std::uint64_t n) {
  const std::uint64_t base_deg = f_.degree();
  while (pow_.size() <= n) {
    const std::uint64_t k = pow_.size();
    if (caps_.max_degree && base_deg * k > caps_.max_degree)
      throw CappedError("degree cap exceeded at f^" + std::to_string(k));
    Poly next = pow_.back() * f_;
    if (next.term_count() > caps_.max_terms)
      throw CappedError("term cap exceeded at f^" + std::to_string(k));
    pow_.push_back(std::move(next));
  }
}

const Poly& PowerCache::power(std::uint64_t n) {
  warm(n);
  return pow_[n];
}

}  // namespace bfunp
