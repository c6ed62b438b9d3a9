#include "bfunp/bfunction.hpp"

#include <algorithm>
#include <numeric>

#include "json.hpp"

namespace bfunp {

BFunctionData b_roots(ChainStore& store, int e_max) {
  BFunctionData out;
  JumpAnalysis analysis;
  try {
    analysis = analyze_jumps(store, e_max);
  } catch (const CappedError&) {
    out.capped = true;
    return out;
  }
  out.capped = analysis.capped;

  bool all_exact = !analysis.capped;
  for (const auto& r : analysis.reports) {
    if (r.status != JumpStatus::kExact) {
      all_exact = false;
      continue;
    }
    const Rational& lambda = *r.exact;
    if (!in_Zp_local(lambda, store.p())) continue;
    out.roots.push_back(
        BRoot{-lambda, negate_to_padic(lambda, store.p()), lambda});
  }
  std::sort(out.roots.begin(), out.roots.end(),
            [](const BRoot& a, const BRoot& b) { return a.value < b.value; });
  out.status = all_exact ? BStatus::kExact : BStatus::kConditional;
  return out;
}

BFunctionData b_roots(const Poly& f, int e_max, Caps caps, int jobs) {
  ChainStore store(f, caps, jobs);
  return b_roots(store, e_max);
}

std::vector<MaximalIdealSpec> root_digit_table(const BFunctionData& d) {
  std::vector<MaximalIdealSpec> out;
  out.reserve(d.roots.size());
  for (const auto& r : d.roots) out.push_back(MaximalIdealSpec{r.padic});
  return out;
}

namespace {

struct ExponentData {
  Rational value;
  BasePExpansion expansion;
  bool in_zp;
};

}  // namespace

CrossCheckReport cross_check(ChainStore& store, Level l_max, int e_max) {
  CrossCheckReport report;

  JumpAnalysis analysis;
  try {
    analysis = analyze_jumps(store, e_max);
  } catch (const CappedError&) {
    report.note = "jump analysis hit a resource cap";
    return report;
  }
  if (analysis.capped) {
    report.note = "jump analysis hit a resource cap";
    return report;
  }

  std::vector<ExponentData> exponents;
  for (const auto& r : analysis.reports) {
    if (r.status != JumpStatus::kExact) {
      report.note = "some exponents have INTERVAL status";
      return report;
    }
    exponents.push_back({*r.exact, expand_inverse_p(*r.exact, store.p()),
                         in_Zp_local(*r.exact, store.p())});
  }
  if (exponents.empty()) {
    report.note = "no jumping exponents detected";
    return report;
  }

  // Per level: support identification plus the digit comparison between the
  // module data and the p-adic expansions of the negated exponents.
  bool all_ok = true;
  int first_separated = -1;
  for (int l = 0; l <= l_max.value(); ++l) {
    LevelCheck check;
    check.l = l;
    const int e = l + 1;

    std::vector<std::uint64_t> truncations;
    for (const auto& ex : exponents)
      truncations.push_back(truncation_index(ex.expansion, e));
    auto sorted = truncations;
    std::sort(sorted.begin(), sorted.end());
    check.separated =
        std::adjacent_find(sorted.begin(), sorted.end()) == sorted.end();
    if (!check.separated) {
      report.levels.push_back(std::move(check));
      continue;
    }
    if (first_separated < 0) first_separated = l;

    LevelModule module;
    try {
      module = level_module(store, Level(l));
    } catch (const CappedError&) {
      report.note = "level module hit a resource cap";
      return report;
    }

    std::vector<std::uint64_t> observed_support;
    for (const auto& s : module.summands)
      if (s.nonzero) observed_support.push_back(s.n);
    std::sort(observed_support.begin(), observed_support.end());
    const bool support_ok = observed_support == sorted;

    std::set<DigitVector> observed = truncated_roots(module);
    std::set<DigitVector> expected;
    for (const auto& ex : exponents) {
      if (ex.in_zp) {
        const PAdicNumber padic = negate_to_padic(ex.value, store.p());
        DigitVector prefix;
        for (int i = 0; i <= l; ++i)
          prefix.push_back(padic.digit(static_cast<std::size_t>(i)));
        expected.insert(std::move(prefix));
      } else {
        expected.insert(
            digits_of_index(truncation_index(ex.expansion, e), store.p(), l));
      }
    }

    check.ok = support_ok && observed == expected;
    check.observed.assign(observed.begin(), observed.end());
    check.expected.assign(expected.begin(), expected.end());
    all_ok = all_ok && check.ok;
    report.levels.push_back(std::move(check));
  }

  if (first_separated < 0) {
    report.note = "no level below l_max separates the exponents";
    return report;
  }

  // Survivors at the first separated level, with as many period strides as
  // fit below l_max.
  int d = 1;
  for (const auto& ex : exponents)
    d = static_cast<int>(std::lcm<std::uint64_t>(
        static_cast<std::uint64_t>(d), ex.expansion.period.size()));
  const int strides = (l_max.value() - first_separated) / d;
  if (strides < 1) {
    report.note = "l_max leaves no room for a full period stride";
    return report;
  }
  report.survivors =
      survivors_check(store, Level(first_separated), strides, e_max);
  if (report.survivors.status != CheckStatus::kOk) {
    report.note = "survivors check did not complete";
    return report;
  }

  report.status = (all_ok && report.survivors.all_consistent)
                      ? CrossStatus::kPass
                      : CrossStatus::kFail;
  return report;
}

CrossCheckReport cross_check(const Poly& f, Level l_max, int e_max, Caps caps,
                             int jobs) {
  ChainStore store(f, caps, jobs);
  return cross_check(store, l_max, e_max);
}

std::string to_json_string(const BFunctionData& d) {
  nlohmann::json j;
  j["roots"] = nlohmann::json::array();
  for (const auto& r : d.roots) {
    nlohmann::json item;
    item["value"] = rational_to_string(r.value);
    item["period"] = r.padic.period;
    item["preperiod"] = r.padic.preperiod;
    j["roots"].push_back(std::move(item));
  }
  j["status"] = d.status == BStatus::kExact ? "EXACT" : "CONDITIONAL";
  return j.dump();
}

std::string to_json_string(const CrossCheckReport& r) {
  nlohmann::json j;
  switch (r.status) {
    case CrossStatus::kPass: j["status"] = "PASS"; break;
    case CrossStatus::kFail: j["status"] = "FAIL"; break;
    case CrossStatus::kIndeterminate: j["status"] = "INDETERMINATE"; break;
  }
  if (!r.note.empty()) j["note"] = r.note;
  j["levels"] = nlohmann::json::array();
  for (const auto& lc : r.levels) {
    nlohmann::json item;
    item["l"] = lc.l;
    item["separated"] = lc.separated;
    item["ok"] = lc.ok;
    item["observed"] = lc.observed;
    item["expected"] = lc.expected;
    j["levels"].push_back(std::move(item));
  }
  j["survivors"] = nlohmann::json::parse(to_json_string(r.survivors));
  return j.dump();
}

}  // namespace bfunp
