#pragma once

#include <boost/multiprecision/cpp_int.hpp>

#include <cstdint>
#include <string>
#include <vector>

#include "bfunp/polyalg.hpp"

// 1/p-adic expansions of rationals in (0,1], their periodicity structure,
// conjugates, negation into p-adic integers, and the maximal-ideal data of
// the binomial-coefficient algebra.
//
// Digit conventions:
//   - a BasePExpansion lists digits of r = sum_{n>=1} r_n p^(-n), preperiod
//     first; the period is never all zeros (no infinite runs of zeros);
//   - a PAdicNumber lists digits of alpha = sum_{m>=0} a_m p^m starting at
//     position 0; a period of [0] represents a nonnegative integer;
//   - both are stored with minimal preperiod and minimal period.

namespace bfunp {

using Int = boost::multiprecision::cpp_int;
using Rational = boost::multiprecision::cpp_rational;

std::string rational_to_string(const Rational& r);  // "a/b", b = 1 elided
Rational rational_from_string(const std::string& s);

struct BasePExpansion {
  Prime p;
  std::vector<std::uint32_t> preperiod;
  std::vector<std::uint32_t> period;

  // Digit r_n for n >= 1.
  std::uint32_t digit(std::size_t n) const;
  // The rational the digit stream reconstructs to.
  Rational value() const;
};

struct PAdicNumber {
  Prime p;
  std::vector<std::uint32_t> preperiod;
  std::vector<std::uint32_t> period;

  // Digit a_m for m >= 0.
  std::uint32_t digit(std::size_t m) const;
};

// Eigenvalue data of a maximal ideal of the binomial-coefficient algebra:
// the ideal ({s choose p^e} - eigenvalue(e) : e >= 0), identified with the
// p-adic integer whose digits the eigenvalues are.
struct MaximalIdealSpec {
  PAdicNumber digits;

  std::uint32_t eigenvalue(std::size_t e) const { return digits.digit(e); }
};

// Digit recurrence d = ceil(r*p) - 1, r <- r*p - d, which keeps remainders in
// (0,1] and thereby never emits an infinite run of zeros. Requires
// 0 < r <= 1.
BasePExpansion expand_inverse_p(const Rational& r, Prime p);

// True iff the preperiod is empty.
bool is_strictly_periodic(const BasePExpansion& x);

// True iff the denominator of r (in lowest terms) is coprime to p.
bool in_Zp_local(const Rational& r, Prime p);

// Values of the expansions with each cyclic permutation of the period,
// sorted ascending. Requires a strictly periodic expansion.
std::vector<Rational> conjugates(const Rational& r, Prime p);

// The p-adic digit stream of -r. With strictly periodic 1/p-digits r_1..r_d,
// the digit at p-adic position m >= 0 is r_{d - (m mod d)}. Requires
// 0 < r <= 1 with denominator coprime to p.
PAdicNumber negate_to_padic(const Rational& r, Prime p);

// The unique rational with denominator coprime to p whose p-adic expansion
// is x.
Rational padic_to_rational(const PAdicNumber& x);

// Value of the first e digits, sum_{n<=e} r_n p^(-n).
Rational truncated_value(const BasePExpansion& x, int e);
// The integer m = truncated_value * p^e; at level l = e-1 this is the index
// of the direct-sum cell whose half-open interval contains the expanded
// rational.
std::uint64_t truncation_index(const BasePExpansion& x, int e);

// JSON text {"p":int,"preperiod":[int],"period":[int]}.
std::string to_json_string(const BasePExpansion& x);
std::string to_json_string(const PAdicNumber& x);

}  // namespace bfunp
