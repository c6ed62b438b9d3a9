#include "bfunp/euler.hpp"

#include <algorithm>
#include <numeric>

#include "json.hpp"

namespace bfunp {

DigitVector digits_of_index(std::uint64_t n, Prime p, int l) {
  DigitVector digits;
  digits.reserve(static_cast<std::size_t>(l) + 1);
  for (int e = 0; e <= l; ++e) {
    digits.push_back(static_cast<std::uint32_t>(n % p.value()));
    n /= p.value();
  }
  if (n) throw Error("digits_of_index: index out of range");
  return digits;
}

LevelModule level_module(ChainStore& store, Level l) {
  const int e = l.frobenius_exponent();
  const JumpChain& chain = store.chain(e);
  const std::uint64_t q = prime_power(store.p(), e);

  LevelModule m;
  m.l = l.value();
  m.summands.reserve(static_cast<std::size_t>(q));
  for (std::uint64_t n = 0; n < q; ++n) {
    Summand s;
    s.n = n;
    s.upper = chain.ideals[static_cast<std::size_t>(n)];
    s.lower = chain.ideals[static_cast<std::size_t>(n + 1)];
    s.nonzero = !ideal_equal(s.upper, s.lower);
    s.digits = digits_of_index(n, store.p(), l.value());
    m.summands.push_back(std::move(s));
  }
  return m;
}

LevelModule level_module(const Poly& f, Level l, Caps caps, int jobs) {
  ChainStore store(f, caps, jobs);
  return level_module(store, l);
}

std::set<DigitVector> truncated_roots(const LevelModule& m) {
  std::set<DigitVector> out;
  for (const auto& s : m.summands)
    if (s.nonzero) out.insert(s.digits);
  return out;
}

namespace {

struct ExactExponent {
  Rational value;
  BasePExpansion expansion;
  bool in_zp;
};

// Collects the EXACT exponents; nullopt when any report is INTERVAL.
std::optional<std::vector<ExactExponent>> exact_exponents(
    const JumpAnalysis& analysis, Prime p) {
  std::vector<ExactExponent> out;
  for (const auto& r : analysis.reports) {
    if (r.status != JumpStatus::kExact) return std::nullopt;
    ExactExponent e{*r.exact, expand_inverse_p(*r.exact, p),
                    in_Zp_local(*r.exact, p)};
    out.push_back(std::move(e));
  }
  return out;
}

std::vector<std::uint64_t> nonzero_indices(const LevelModule& m) {
  std::vector<std::uint64_t> out;
  for (const auto& s : m.summands)
    if (s.nonzero) out.push_back(s.n);
  return out;
}

}  // namespace

SurvivorsReport survivors_check(ChainStore& store, Level l, int strides,
                                int e_max) {
  SurvivorsReport report;
  report.base_level = l.value();
  report.strides = strides;
  if (strides < 1) throw Error("survivors_check: strides must be positive");

  JumpAnalysis analysis;
  try {
    analysis = analyze_jumps(store, e_max);
  } catch (const CappedError&) {
    report.status = CheckStatus::kCapped;
    return report;
  }
  if (analysis.capped) {
    report.status = CheckStatus::kCapped;
    return report;
  }
  auto exponents = exact_exponents(analysis, store.p());
  if (!exponents) {
    report.status = CheckStatus::kIndeterminate;
    report.note = "some exponents have INTERVAL status";
    return report;
  }

  int d = 1;
  for (const auto& ex : *exponents)
    d = static_cast<int>(std::lcm<std::uint64_t>(
        static_cast<std::uint64_t>(d), ex.expansion.period.size()));
  report.stride = d;

  // The check needs each base cell to hold at most one exponent.
  const int e_base = l.frobenius_exponent();
  std::vector<std::uint64_t> base_truncations;
  for (const auto& ex : *exponents)
    base_truncations.push_back(truncation_index(ex.expansion, e_base));
  {
    auto sorted = base_truncations;
    std::sort(sorted.begin(), sorted.end());
    if (std::adjacent_find(sorted.begin(), sorted.end()) != sorted.end()) {
      report.status = CheckStatus::kIndeterminate;
      report.note = "cells at the base level do not separate the exponents";
      return report;
    }
  }

  if (l.value() + strides * d > kMaxLevel) {
    report.status = CheckStatus::kCapped;
    report.note = "stride levels exceed the supported maximum level";
    return report;
  }
  std::vector<LevelModule> modules;  // level l + i*d for i = 1..strides
  try {
    for (int i = 1; i <= strides; ++i)
      modules.push_back(level_module(store, Level(l.value() + i * d)));
  } catch (const CappedError&) {
    report.status = CheckStatus::kCapped;
    return report;
  }

  const LevelModule base = level_module(store, l);
  const std::uint64_t q_base = prime_power(store.p(), e_base);

  report.status = CheckStatus::kOk;
  report.all_consistent = true;
  for (const auto& s : base.summands) {
    if (!s.nonzero) continue;
    SurvivorRecord rec;
    rec.summand = s.n;

    const ExactExponent* tracked = nullptr;
    for (std::size_t i = 0; i < exponents->size(); ++i)
      if (base_truncations[i] == s.n) tracked = &(*exponents)[i];
    if (tracked) {
      rec.exponent = tracked->value;
      rec.exponent_in_zp = tracked->in_zp;
    }

    bool own_everywhere = true;   // own truncation present with unique Z_(p) hit
    bool empty_tail = false;      // classes empty from some stride onward
    bool resurrected = false;
    for (int i = 1; i <= strides; ++i) {
      const LevelModule& m = modules[static_cast<std::size_t>(i - 1)];
      const int e_i = l.value() + i * d + 1;
      std::vector<std::uint64_t> cls;
      for (auto n : nonzero_indices(m))
        if (n % q_base == s.n) cls.push_back(n);

      std::size_t zp_hits = 0;
      bool own_present = false;
      for (auto n : cls) {
        for (const auto& ex : *exponents) {
          if (!ex.in_zp) continue;
          if (truncation_index(ex.expansion, e_i) == n) {
            ++zp_hits;
            if (tracked && &ex == tracked) own_present = true;
          }
        }
      }
      own_everywhere = own_everywhere && own_present && zp_hits == 1;
      if (cls.empty())
        empty_tail = true;
      else if (empty_tail)
        resurrected = true;
      rec.classes.push_back(std::move(cls));
    }

    if (tracked && tracked->in_zp && own_everywhere)
      rec.fate = SummandFate::kStabilizes;
    else if (empty_tail && !resurrected)
      rec.fate = SummandFate::kEmpties;
    else
      rec.fate = SummandFate::kDrifts;

    rec.consistent =
        tracked && (tracked->in_zp == (rec.fate == SummandFate::kStabilizes));
    report.all_consistent = report.all_consistent && rec.consistent;
    report.records.push_back(std::move(rec));
  }
  return report;
}

SurvivorsReport survivors_check(const Poly& f, Level l, int strides, int e_max,
                                Caps caps, int jobs) {
  ChainStore store(f, caps, jobs);
  return survivors_check(store, l, strides, e_max);
}

std::string to_json_string(const LevelModule& m) {
  nlohmann::json j;
  j["l"] = m.l;
  j["summands"] = nlohmann::json::array();
  for (const auto& s : m.summands) {
    nlohmann::json item;
    item["n"] = s.n;
    item["digits"] = s.digits;
    item["nonzero"] = s.nonzero;
    j["summands"].push_back(std::move(item));
  }
  return j.dump();
}

std::string to_json_string(const SurvivorsReport& r) {
  nlohmann::json j;
  switch (r.status) {
    case CheckStatus::kOk: j["status"] = "OK"; break;
    case CheckStatus::kIndeterminate: j["status"] = "INDETERMINATE"; break;
    case CheckStatus::kCapped: j["status"] = "CAPPED"; break;
  }
  j["base_level"] = r.base_level;
  j["stride"] = r.stride;
  j["strides"] = r.strides;
  j["all_consistent"] = r.all_consistent;
  if (!r.note.empty()) j["note"] = r.note;
  j["summands"] = nlohmann::json::array();
  for (const auto& rec : r.records) {
    nlohmann::json item;
    item["n"] = rec.summand;
    item["exponent"] =
        rec.exponent ? nlohmann::json(rational_to_string(*rec.exponent))
                     : nullptr;
    item["in_zp"] = rec.exponent_in_zp;
    switch (rec.fate) {
      case SummandFate::kStabilizes: item["fate"] = "STABILIZES"; break;
      case SummandFate::kEmpties: item["fate"] = "EMPTIES"; break;
      case SummandFate::kDrifts: item["fate"] = "DRIFTS"; break;
    }
    item["consistent"] = rec.consistent;
    item["classes"] = rec.classes;
    j["summands"].push_back(std::move(item));
  }
  return j.dump();
}

}  // namespace bfunp
