#pragma once

#include <set>

#include "bfunp/testideal.hpp"

// The finite-level module N_f^(l) as the direct sum over n < p^(l+1) of the
// quotients D^(l)f^n / D^(l)f^(n+1), realized through Frobenius roots. The
// higher Euler operator nu_e acts on the summand at n by -a_e where
// (a_0..a_l) are the base-p digits of n, so the digit vectors of the nonzero
// summands are the module's eigenvalue data.

namespace bfunp {

using DigitVector = std::vector<std::uint32_t>;

// Base-p digits (a_0..a_l) of n, low digit first, padded to length l+1.
DigitVector digits_of_index(std::uint64_t n, Prime p, int l);

struct Summand {
  std::uint64_t n = 0;
  Ideal upper;  // d_ideal(f, n, l)
  Ideal lower;  // d_ideal(f, n+1, l)
  bool nonzero = false;
  DigitVector digits;
};

struct LevelModule {
  int l = 0;
  std::vector<Summand> summands;
};

LevelModule level_module(ChainStore& store, Level l);
LevelModule level_module(const Poly& f, Level l, Caps caps = {}, int jobs = 1);

// The set {digits(n) : summand n nonzero}: the level-l annihilator data of
// N_f^(l) (the annihilator is the intersection over this set of the ideals
// ({s choose p^e} - a_e : e <= l)).
std::set<DigitVector> truncated_roots(const LevelModule& m);

enum class SummandFate { kStabilizes, kEmpties, kDrifts };
enum class CheckStatus { kOk, kIndeterminate, kCapped };

struct SurvivorRecord {
  std::uint64_t summand = 0;
  std::optional<Rational> exponent;  // the EXACT exponent this cell truncates
  bool exponent_in_zp = false;
  SummandFate fate = SummandFate::kDrifts;
  bool consistent = false;  // fate matches the Z_(p) membership claim
  // Contents of S_i = {n nonzero at level l+i*d : n = summand mod p^(l+1)}
  // for i = 1..strides.
  std::vector<std::vector<std::uint64_t>> classes;
};

struct SurvivorsReport {
  CheckStatus status = CheckStatus::kIndeterminate;
  int base_level = 0;
  int stride = 0;  // d, the lcm of the exponents' period lengths
  int strides = 0;
  std::vector<SurvivorRecord> records;
  bool all_consistent = false;
  std::string note;
};

// Tracks each nonzero summand of N_f^(l) through the residue classes mod
// p^(l+1) at levels l + d, l + 2d, ..., where d is the lcm of the EXACT
// exponents' period lengths. A summand stabilizes when its class contains,
// at every stride, exactly one truncation of a Z_(p) exponent and it is the
// summand's own exponent; it empties or drifts otherwise. Expected:
// stabilizes iff the tracked exponent lies in Z_(p).
SurvivorsReport survivors_check(ChainStore& store, Level l, int strides,
                                int e_max);
SurvivorsReport survivors_check(const Poly& f, Level l, int strides,
                                int e_max, Caps caps = {}, int jobs = 1);

// {"l":int,"summands":[{"n":int,"digits":[int],"nonzero":bool}]}
std::string to_json_string(const LevelModule& m);
std::string to_json_string(const SurvivorsReport& r);

}  // namespace bfunp
