#pragma once

#include "bfunp/polyalg.hpp"

// Bracket powers I^[p^e], Frobenius roots I_e(J) -- the smallest ideal whose
// bracket power contains J -- and the level-l differential-operator ideals
// realized through them.

namespace bfunp {

inline constexpr int kMaxLevel = 6;

// Filtration level l >= 0; the associated Frobenius exponent is e = l + 1.
class Level {
 public:
  explicit Level(int l) : l_(l) {
    if (l < 0 || l > kMaxLevel)
      throw Error("level must be between 0 and " + std::to_string(kMaxLevel));
  }
  int value() const { return l_; }
  int frobenius_exponent() const { return l_ + 1; }

 private:
  int l_;
};

// p^e as uint64, guarded.
std::uint64_t prime_power(Prime p, int e);

// Ideal generated by g^(p^e) for g among I's generators.
Ideal bracket_power(const Ideal& I, int e);

// Digit decomposition of a single polynomial: g = sum_mu mu * (g_mu)^(p^e)
// over monomials mu with all exponents < p^e; returns the nonzero g_mu in a
// deterministic order.
std::vector<Poly> frobenius_root_generators(const Poly& g, int e);

// Smallest ideal I with bracket_power(I, e) containing J.
Ideal frobenius_root(const Ideal& J, int e);

// frobenius_root((f^n), l+1): the ideal representing D^(l) f^n up to
// Frobenius pullback. Requires 0 <= n <= p^(l+1).
Ideal d_ideal(const Poly& f, std::uint64_t n, Level l);

// Incremental powers f^n with memoization; chains over all n < p^e dominate
// the runtime, so f^(n+1) = f^n * f with degree/term caps checked per step.
// Warm the cache before sharing it read-only across workers.
class PowerCache {
 public:
  PowerCache(Poly f, Caps caps = {});

  const Poly& base() const { return f_; }
  const Caps& caps() const { return caps_; }

  // Computes powers up to and including n; throws CappedError on a cap.
  void warm(std::uint64_t n);
  // Requires a prior warm(n) (or lower usage); extends on demand.
  const Poly& power(std::uint64_t n);

 private:
  Poly f_;
  Caps caps_;
  std::vector<Poly> pow_;
};

}  // namespace bfunp
