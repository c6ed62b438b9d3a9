// bfun: exact test-ideal chains, F-jumping exponents, and b-function roots
// for polynomials over small prime fields.
//
// Subcommands:
//   jumps   F-jumping exponents in (0,1] plus the nu approximation sequence
//   broots  roots of the b-function with their p-adic digit data
//   expand  1/p-adic expansion machinery for a rational in (0,1]
//   oracle  level modules, their digit sets, and the survivors check
//   check   full cross-check of the digit route against the module route
//
// Exit codes: 0 success, 1 input error, 2 resource cap / indeterminate.

#include <cstdlib>
#include <iostream>
#include <numeric>
#include <set>
#include <sstream>
#include <string>

#include "CLI11.hpp"
#include "bfunp/bfunction.hpp"
#include "json.hpp"

namespace {

using namespace bfunp;

struct CommonOpts {
  std::uint32_t prime = 0;
  std::string vars_csv;
  int e_max = 3;
  int l_max = 2;
  std::string format = "text";
  int jobs = 1;
  std::uint64_t cap_degree = 0;
  std::size_t cap_terms = 0;
};

void add_common(CLI::App* cmd, CommonOpts& o, bool needs_poly) {
  cmd->add_option("-p,--prime", o.prime, "characteristic (prime, <= 97)")
      ->required();
  if (needs_poly)
    cmd->add_option("--vars", o.vars_csv,
                    "comma-separated variable names (default: inferred "
                    "alphabetically from the expression)");
  cmd->add_option("--emax", o.e_max, "Frobenius depth for jump detection")
      ->default_val(3);
  cmd->add_option("--lmax", o.l_max, "largest level for module checks")
      ->default_val(2);
  cmd->add_option("--format", o.format, "text or json")
      ->default_val("text")
      ->check(CLI::IsMember({"text", "json"}));
  cmd->add_option("--jobs", o.jobs, "worker threads for chain evaluation")
      ->default_val(1);
  cmd->add_option("--cap-degree", o.cap_degree,
                  "degree cap for power chains (0 = automatic)");
  cmd->add_option("--cap-terms", o.cap_terms,
                  "term-count cap for power chains");
}

Caps caps_from(const CommonOpts& o) {
  Caps caps;
  caps.max_degree = o.cap_degree;
  if (o.cap_terms) {
    caps.max_terms = o.cap_terms;
  } else if (const char* mb = std::getenv("BFUN_CAP_MB")) {
    // Rough memory budget: a stored term costs on the order of 64 bytes.
    const unsigned long long budget = std::strtoull(mb, nullptr, 10);
    if (budget) caps.max_terms = budget * 1024 * 1024 / 64;
  }
  return caps;
}

std::vector<std::string> split_csv(const std::string& csv) {
  std::vector<std::string> out;
  std::stringstream in(csv);
  std::string item;
  while (std::getline(in, item, ',')) {
    if (!item.empty()) out.push_back(item);
  }
  return out;
}

Poly parse_input(const std::string& expr, const CommonOpts& o) {
  auto vars = o.vars_csv.empty() ? infer_variables(expr) : split_csv(o.vars_csv);
  if (vars.empty()) throw Error("no variables in the expression; use --vars");
  return parse_poly(expr, vars, Prime(o.prime));
}

std::string interval_str(const JumpReport& r) {
  return "(" + rational_to_string(r.lo) + ", " + rational_to_string(r.hi) + "]";
}

int run_jumps(const std::string& expr, const CommonOpts& o) {
  Poly f = parse_input(expr, o);
  ChainStore store(f, caps_from(o), o.jobs);
  JumpAnalysis analysis = analyze_jumps(store, o.e_max);
  std::vector<std::uint64_t> nu;
  if (f.constant_coefficient() == 0 && !analysis.capped) {
    nu = nu_values(store, analysis.levels_completed);
  } else if (f.constant_coefficient() != 0) {
    std::cerr << "note: f(0) != 0, skipping nu values\n";
  }

  if (o.format == "json") {
    std::cout << jumps_to_json(f, analysis, nu) << "\n";
  } else {
    std::cout << "f = " << f.to_string() << " over F_" << o.prime << "\n";
    if (analysis.capped) std::cout << "CAPPED: results are partial\n";
    std::cout << "jumping exponents in (0,1]:\n";
    for (const auto& r : analysis.reports) {
      if (r.status == JumpStatus::kExact)
        std::cout << "  EXACT " << rational_to_string(*r.exact) << "  in "
                  << interval_str(r) << "\n";
      else
        std::cout << "  INTERVAL " << interval_str(r) << "\n";
    }
    if (!nu.empty()) {
      std::cout << "nu(e) for e = 1..: ";
      for (std::size_t i = 0; i < nu.size(); ++i)
        std::cout << (i ? ", " : "") << nu[i];
      std::cout << "\n";
    }
  }
  return analysis.capped ? 2 : 0;
}

int run_broots(const std::string& expr, const CommonOpts& o) {
  Poly f = parse_input(expr, o);
  ChainStore store(f, caps_from(o), o.jobs);
  BFunctionData data = b_roots(store, o.e_max);

  if (o.format == "json") {
    std::cout << to_json_string(data) << "\n";
  } else {
    std::cout << "b-function roots of " << f.to_string() << " over F_"
              << o.prime << " (status "
              << (data.status == BStatus::kExact ? "EXACT" : "CONDITIONAL")
              << "):\n";
    for (const auto& r : data.roots) {
      std::cout << "  " << rational_to_string(r.value) << "  p-adic digits "
                << to_json_string(r.padic) << "\n";
    }
    if (data.status == BStatus::kConditional) {
      // Never silently upgraded: show what blocked exactness.
      JumpAnalysis analysis = analyze_jumps(store, o.e_max);
      for (const auto& r : analysis.reports)
        if (r.status == JumpStatus::kInterval)
          std::cout << "  blocking interval " << interval_str(r) << "\n";
    }
  }
  return data.capped ? 2 : 0;
}

int run_expand(const std::string& ratio, const CommonOpts& o) {
  const Rational r = rational_from_string(ratio);
  const Prime p(o.prime);
  const BasePExpansion x = expand_inverse_p(r, p);
  const bool strict = is_strictly_periodic(x);
  const bool local = in_Zp_local(r, p);

  if (o.format == "json") {
    nlohmann::json j = nlohmann::json::parse(to_json_string(x));
    j["strictly_periodic"] = strict;
    j["in_zp_local"] = local;
    if (local) {
      j["negation"] = nlohmann::json::parse(to_json_string(negate_to_padic(r, p)));
    } else {
      j["negation"] = nullptr;
    }
    if (strict) {
      auto conj = conjugates(r, p);
      j["conjugates"] = nlohmann::json::array();
      for (const auto& c : conj) j["conjugates"].push_back(rational_to_string(c));
    } else {
      j["conjugates"] = nullptr;
    }
    std::cout << j.dump() << "\n";
  } else {
    auto digits = [](const std::vector<std::uint32_t>& v) {
      std::string s = "[";
      for (std::size_t i = 0; i < v.size(); ++i)
        s += (i ? " " : "") + std::to_string(v[i]);
      return s + "]";
    };
    std::cout << "1/p-adic expansion of " << rational_to_string(r) << " at p="
              << o.prime << ": preperiod " << digits(x.preperiod) << " period "
              << digits(x.period) << "\n";
    std::cout << "strictly periodic: " << (strict ? "true" : "false") << "\n";
    std::cout << "in Z_(p): " << (local ? "true" : "false") << "\n";
    if (local) {
      auto neg = negate_to_padic(r, p);
      std::cout << "p-adic expansion of " << rational_to_string(-r)
                << ": preperiod " << digits(neg.preperiod) << " period "
                << digits(neg.period) << "\n";
    }
    if (strict) {
      std::cout << "conjugates:";
      for (const auto& c : conjugates(r, p))
        std::cout << " " << rational_to_string(c);
      std::cout << "\n";
    }
  }
  return 0;
}

int run_oracle(const std::string& expr, const CommonOpts& o) {
  Poly f = parse_input(expr, o);
  ChainStore store(f, caps_from(o), o.jobs);

  nlohmann::json levels = nlohmann::json::array();
  std::ostringstream text;
  for (int l = 0; l <= o.l_max; ++l) {
    LevelModule m = level_module(store, Level(l));
    if (o.format == "json") {
      levels.push_back(nlohmann::json::parse(to_json_string(m)));
    } else {
      text << "level " << l << " nonzero summands:";
      for (const auto& s : m.summands) {
        if (!s.nonzero) continue;
        text << " " << s.n << "(digits";
        for (auto d : s.digits) text << " " << d;
        text << ")";
      }
      text << "\n";
    }
  }

  // Survivors from the first level whose cells separate the exponents.
  SurvivorsReport survivors;
  survivors.status = CheckStatus::kIndeterminate;
  survivors.note = "l_max leaves no room for a full period stride";
  JumpAnalysis analysis = analyze_jumps(store, o.e_max);
  bool all_exact = !analysis.capped;
  for (const auto& r : analysis.reports)
    all_exact = all_exact && r.status == JumpStatus::kExact;
  if (all_exact) {
    int d = 1;
    int base = -1;
    std::set<std::uint64_t> seen;
    for (int l = 0; l <= o.l_max && base < 0; ++l) {
      seen.clear();
      bool separated = true;
      for (const auto& r : analysis.reports) {
        auto x = expand_inverse_p(*r.exact, store.p());
        separated = separated && seen.insert(truncation_index(x, l + 1)).second;
      }
      if (separated) base = l;
    }
    for (const auto& r : analysis.reports)
      d = static_cast<int>(std::lcm<std::uint64_t>(
          static_cast<std::uint64_t>(d),
          expand_inverse_p(*r.exact, store.p()).period.size()));
    if (base >= 0 && (o.l_max - base) / d >= 1)
      survivors = survivors_check(store, Level(base), (o.l_max - base) / d,
                                  o.e_max);
  } else {
    survivors.note = "exponents are not all EXACT";
  }

  if (o.format == "json") {
    nlohmann::json j;
    j["levels"] = levels;
    j["survivors"] = nlohmann::json::parse(to_json_string(survivors));
    std::cout << j.dump() << "\n";
  } else {
    std::cout << text.str();
    std::cout << "survivors: "
              << (survivors.status == CheckStatus::kOk
                      ? (survivors.all_consistent ? "consistent"
                                                  : "INCONSISTENT")
                      : survivors.note)
              << "\n";
    for (const auto& rec : survivors.records) {
      std::cout << "  summand " << rec.summand;
      if (rec.exponent)
        std::cout << " tracking " << rational_to_string(*rec.exponent)
                  << (rec.exponent_in_zp ? " (in Z_(p))" : " (not in Z_(p))");
      switch (rec.fate) {
        case SummandFate::kStabilizes: std::cout << ": stabilizes"; break;
        case SummandFate::kEmpties: std::cout << ": empties"; break;
        case SummandFate::kDrifts: std::cout << ": drifts"; break;
      }
      std::cout << "\n";
    }
  }
  return survivors.status == CheckStatus::kOk ? 0 : 2;
}

int run_check(const std::string& expr, const CommonOpts& o) {
  Poly f = parse_input(expr, o);
  ChainStore store(f, caps_from(o), o.jobs);
  CrossCheckReport report = cross_check(store, Level(o.l_max), o.e_max);

  if (o.format == "json") {
    std::cout << to_json_string(report) << "\n";
  } else {
    const char* status = report.status == CrossStatus::kPass ? "PASS"
                         : report.status == CrossStatus::kFail ? "FAIL"
                                                               : "INDETERMINATE";
    std::cout << "cross-check of " << f.to_string() << " over F_" << o.prime
              << ": " << status << "\n";
    if (!report.note.empty()) std::cout << "note: " << report.note << "\n";
    for (const auto& lc : report.levels) {
      std::cout << "  level " << lc.l << ": "
                << (lc.separated ? (lc.ok ? "ok" : "MISMATCH")
                                 : "cells not separated, skipped")
                << "\n";
    }
  }
  switch (report.status) {
    case CrossStatus::kPass: return 0;
    case CrossStatus::kFail: return 1;
    case CrossStatus::kIndeterminate: return 2;
  }
  return 2;
}

}  // namespace

int main(int argc, char** argv) {
  CLI::App app{"exact test-ideal chains, F-jumping exponents, and "
               "b-function roots over F_p"};
  app.require_subcommand(1);

  CommonOpts opts;
  std::string expr;

  auto* jumps = app.add_subcommand("jumps", "F-jumping exponents in (0,1]");
  add_common(jumps, opts, true);
  jumps->add_option("expr", expr, "polynomial expression")->required();

  auto* broots = app.add_subcommand("broots", "roots of the b-function");
  add_common(broots, opts, true);
  broots->add_option("expr", expr, "polynomial expression")->required();

  auto* expand = app.add_subcommand("expand", "1/p-adic expansion of a rational");
  add_common(expand, opts, false);
  expand->add_option("rational", expr, "rational a/b in (0,1]")->required();

  auto* oracle = app.add_subcommand("oracle", "level modules and survivors");
  add_common(oracle, opts, true);
  oracle->add_option("expr", expr, "polynomial expression")->required();

  auto* check = app.add_subcommand("check", "digit route vs module route");
  add_common(check, opts, true);
  check->add_option("expr", expr, "polynomial expression")->required();

  CLI11_PARSE(app, argc, argv);

  try {
    if (jumps->parsed()) return run_jumps(expr, opts);
    if (broots->parsed()) return run_broots(expr, opts);
    if (expand->parsed()) return run_expand(expr, opts);
    if (oracle->parsed()) return run_oracle(expr, opts);
    if (check->parsed()) return run_check(expr, opts);
  } catch (const CappedError& e) {
    std::cerr << "capped: " << e.what() << "\n";
    return 2;
  } catch (const Error& e) {
    std::cerr << "error: " << e.what() << "\n";
    return 1;
  } catch (const std::exception& e) {
    std::cerr << "error: " << e.what() << "\n";
    return 1;
  }
  return 1;
}
