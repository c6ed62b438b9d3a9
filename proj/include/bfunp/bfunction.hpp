#pragma once

#include "bfunp/euler.hpp"

// Roots of the characteristic-p b-function computed from the F-jumping
// exponents, their digit data in the binomial-coefficient algebra, and the
// independent cross-check against the level modules. The b-function ideal is
// represented extensionally by its root set: the annihilator equals the
// finite intersection of the listed maximal ideals.

namespace bfunp {

struct BRoot {
  Rational value;     // negative, in [-1, 0)
  PAdicNumber padic;  // p-adic expansion of the root; purely periodic
  Rational source;    // the jumping exponent lambda = -value
};

enum class BStatus { kExact, kConditional };

struct BFunctionData {
  std::vector<BRoot> roots;  // ascending by value, pairwise distinct
  BStatus status = BStatus::kConditional;
  bool capped = false;
};

// { -lambda : lambda EXACT jumping exponent in (0,1], denominator coprime
// to p }, each with its p-adic digit data. CONDITIONAL when any underlying
// report stayed INTERVAL.
BFunctionData b_roots(ChainStore& store, int e_max);
BFunctionData b_roots(const Poly& f, int e_max, Caps caps = {}, int jobs = 1);

// For each root the eigenvalue assignment i -> digit of the root's p-adic
// expansion at position i (the period digits of lambda cyclically reversed).
std::vector<MaximalIdealSpec> root_digit_table(const BFunctionData& d);

enum class CrossStatus { kPass, kFail, kIndeterminate };

struct LevelCheck {
  int l = 0;
  bool separated = false;
  bool ok = false;
  std::vector<DigitVector> observed;  // digit vectors of nonzero summands
  std::vector<DigitVector> expected;  // root digit prefixes + drifting prefixes
};

struct CrossCheckReport {
  CrossStatus status = CrossStatus::kIndeterminate;
  std::vector<LevelCheck> levels;
  SurvivorsReport survivors;
  std::string note;
};

// PASS iff at every level l <= l_max whose cells separate the exponents, the
// nonzero summands sit exactly at the exponent truncations and their digit
// vectors equal the p-adic digit prefixes of the roots (plus the drifting
// prefixes of the non-Z_(p) exponents), and the survivors check agrees with
// the Z_(p) membership of every exponent.
CrossCheckReport cross_check(ChainStore& store, Level l_max, int e_max);
CrossCheckReport cross_check(const Poly& f, Level l_max, int e_max,
                             Caps caps = {}, int jobs = 1);

// {"roots":[{"value":"-a/b","period":[int],"preperiod":[]}],
//  "status":"EXACT"|"CONDITIONAL"}
std::string to_json_string(const BFunctionData& d);
std::string to_json_string(const CrossCheckReport& r);

}  // namespace bfunp
