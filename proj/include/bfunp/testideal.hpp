#pragma once

#include <map>
#include <optional>

#include "bfunp/frobenius.hpp"
#include "bfunp/padics.hpp"

// Test-ideal chains tau(f^(a/p^e)) via Frobenius roots, detection of
// F-jumping exponents in (0,1] with exact rational recovery, and the F-pure
// threshold.

namespace bfunp {

// The chain I_e((f^a)) for a = 0..p^e. ideals[0] is the unit ideal and the
// sequence descends under inclusion; jumps lists the positions a with
// ideals[a] != ideals[a-1], ascending.
struct JumpChain {
  int e = 0;
  std::vector<Ideal> ideals;
  std::vector<std::uint64_t> jumps;
};

enum class JumpStatus { kExact, kInterval };

// One detected exponent: the final enclosing interval (lo, hi], and, when
// the stabilization policy certifies it, the smallest-denominator rational
// in that interval.
struct JumpReport {
  Rational lo;
  Rational hi;
  std::optional<Rational> exact;
  JumpStatus status = JumpStatus::kInterval;
};

struct JumpAnalysis {
  std::vector<JumpReport> reports;  // ascending by interval
  bool capped = false;
  int levels_completed = 0;
  // jump positions of each completed level; index e-1 holds level e
  std::vector<std::vector<std::uint64_t>> level_jumps;
};

// Shared computation context for one polynomial: the f-power memo and the
// per-level chains, computed once. Chain entries for distinct a are
// independent given the warmed power cache, so they may be evaluated by a
// small worker pool; results are assembled by index and deterministic.
class ChainStore {
 public:
  explicit ChainStore(Poly f, Caps caps = {}, int jobs = 1);

  const Poly& f() const { return f_; }
  Prime p() const { return f_.prime(); }
  const Caps& caps() const { return caps_; }
  int jobs() const { return jobs_; }

  const JumpChain& chain(int e);           // throws CappedError
  const Poly& power(std::uint64_t n);      // f^n

 private:
  Poly f_;
  Caps caps_;
  int jobs_;
  PowerCache powers_;
  std::map<int, JumpChain> chains_;
};

JumpChain jump_chain(const Poly& f, int e, Caps caps = {}, int jobs = 1);

// Nests jump intervals across e = 1..e_max, requires the jump count to agree
// at the last two levels, recovers the smallest-denominator candidate per
// nested interval, and marks EXACT only when the candidate is identical at
// the last two levels and its expansion digits match the observed jump
// positions at every completed level.
JumpAnalysis analyze_jumps(ChainStore& store, int e_max);

std::vector<JumpReport> jumping_exponents(const Poly& f, int e_max,
                                          Caps caps = {}, int jobs = 1);

// First (smallest) entry of jumping_exponents.
JumpReport fpt(const Poly& f, int e_max, Caps caps = {}, int jobs = 1);

// nu(e) = max{a >= 0 : f^a not in (x_1^(p^e),...,x_n^(p^e))} for e = 1..e_max.
// Requires f(0) = 0.
std::vector<std::uint64_t> nu_values(const Poly& f, int e_max, Caps caps = {},
                                     int jobs = 1);
std::vector<std::uint64_t> nu_values(ChainStore& store, int e_max);

// Smallest-denominator rational in the interval with the given endpoint
// inclusivities, by Stern-Brocot descent. The interval must be nonempty.
Rational simplest_in_interval(const Rational& lo, const Rational& hi,
                              bool lo_incl, bool hi_incl);

// {"f":text,"p":int,"jumps":[{"lo","hi","exact","status"}],"nu":[int],
//  "capped":bool}
std::string jumps_to_json(const Poly& f, const JumpAnalysis& analysis,
                          const std::vector<std::uint64_t>& nu);

}  // namespace bfunp
