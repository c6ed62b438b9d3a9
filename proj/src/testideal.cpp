#include "bfunp/testideal.hpp"

#include <algorithm>
#include <thread>

#include "json.hpp"

namespace bfunp {

namespace {

Int floor_rational(const Rational& r) {
  Int q = numerator(r) / denominator(r);
  if (numerator(r) < 0 && q * denominator(r) != numerator(r)) q -= 1;
  return q;
}

Int ceil_rational(const Rational& r) {
  Int q = numerator(r) / denominator(r);
  if (numerator(r) > 0 && q * denominator(r) != numerator(r)) q += 1;
  return q;
}

}  // namespace

Rational simplest_in_interval(const Rational& lo, const Rational& hi,
                              bool lo_incl, bool hi_incl) {
  if (lo > hi || (lo == hi && !(lo_incl && hi_incl)))
    throw Error("simplest_in_interval: empty interval");

  // Smallest admissible integer, if any.
  Int k = ceil_rational(lo);
  if (!lo_incl && Rational(k) == lo) k += 1;
  if (Rational(k) < hi || (hi_incl && Rational(k) == hi)) return Rational(k);

  // The interval lies strictly inside (n, n+1): recurse on reciprocals of
  // the fractional parts, with endpoint roles swapped.
  const Int n = floor_rational(lo);
  const Rational flo = lo - Rational(n);
  const Rational fhi = hi - Rational(n);
  if (flo == 0) {
    // (0, fhi]-type interval: the simplest value is a unit fraction.
    Rational inv = Rational(1) / fhi;
    Int c = ceil_rational(inv);
    if (!hi_incl && Rational(c) == inv) c += 1;
    return Rational(n) + Rational(1, c);
  }
  Rational sub = simplest_in_interval(Rational(1) / fhi, Rational(1) / flo,
                                      hi_incl, lo_incl);
  return Rational(n) + Rational(1) / sub;
}

ChainStore::ChainStore(Poly f, Caps caps, int jobs)
    : f_(std::move(f)), caps_(caps), jobs_(std::max(1, jobs)), powers_(f_, [&] {
        Caps c = caps;
        if (c.max_degree == 0) {
          // Default degree cap p^e * deg f at the largest routinely used e.
          const int e_def = f_.prime().value() <= 3 ? 4 : 3;
          c.max_degree = prime_power(f_.prime(), e_def) *
                         std::max<std::uint64_t>(1, f_.degree());
        }
        return c;
      }()) {
  if (f_.is_constant()) throw Error("f must be nonconstant");
  caps_ = powers_.caps();
}

const Poly& ChainStore::power(std::uint64_t n) { return powers_.power(n); }

const JumpChain& ChainStore::chain(int e) {
  auto it = chains_.find(e);
  if (it != chains_.end()) return it->second;
  if (e < 1) throw Error("chain: e must be positive");

  const std::uint64_t q = prime_power(p(), e);
  if (caps_.max_degree && q * std::max<std::uint64_t>(1, f_.degree()) >
                              caps_.max_degree)
    throw CappedError("degree cap exceeded for the level-" + std::to_string(e) +
                      " chain");
  powers_.warm(q);

  JumpChain c;
  c.e = e;
  c.ideals.resize(static_cast<std::size_t>(q) + 1);

  auto compute_range = [&](std::uint64_t lo, std::uint64_t hi) {
    for (std::uint64_t a = lo; a < hi; ++a) {
      auto gens = frobenius_root_generators(powers_.power(a), e);
      if (gens.empty()) gens.push_back(Poly::zero(f_.ambient()));
      c.ideals[static_cast<std::size_t>(a)] = reduced_groebner(std::move(gens));
    }
  };

  if (jobs_ <= 1 || q < 8) {
    compute_range(0, q + 1);
  } else {
    const std::uint64_t total = q + 1;
    const int workers = std::min<std::uint64_t>(jobs_, total);
    std::vector<std::thread> pool;
    std::vector<std::exception_ptr> errors(workers);
    for (int w = 0; w < workers; ++w) {
      const std::uint64_t lo = total * w / workers;
      const std::uint64_t hi = total * (w + 1) / workers;
      pool.emplace_back([&, w, lo, hi] {
        try {
          compute_range(lo, hi);
        } catch (...) {
          errors[w] = std::current_exception();
        }
      });
    }
    for (auto& t : pool) t.join();
    for (auto& err : errors)
      if (err) std::rethrow_exception(err);
  }

  for (std::uint64_t a = 1; a <= q; ++a)
    if (!ideal_equal(c.ideals[static_cast<std::size_t>(a)],
                     c.ideals[static_cast<std::size_t>(a - 1)]))
      c.jumps.push_back(a);

  return chains_.emplace(e, std::move(c)).first->second;
}

JumpChain jump_chain(const Poly& f, int e, Caps caps, int jobs) {
  ChainStore store(f, caps, jobs);
  return store.chain(e);
}

JumpAnalysis analyze_jumps(ChainStore& store, int e_max) {
  if (e_max < 2) throw Error("e_max must be at least 2");
  const std::uint32_t p = store.p().value();

  JumpAnalysis out;
  for (int e = 1; e <= e_max; ++e) {
    try {
      out.level_jumps.push_back(store.chain(e).jumps);
      out.levels_completed = e;
    } catch (const CappedError&) {
      out.capped = true;
      break;
    }
  }
  if (out.levels_completed == 0) return out;

  const int e_use = out.levels_completed;
  const auto& last = out.level_jumps[static_cast<std::size_t>(e_use - 1)];
  const Int q_last = Int(prime_power(store.p(), e_use));

  // Final intervals ((a-1)/p^e, a/p^e].
  for (auto a : last) {
    JumpReport r;
    r.lo = Rational(Int(a) - 1, q_last);
    r.hi = Rational(Int(a), q_last);
    out.reports.push_back(std::move(r));
  }

  const bool stabilized =
      !out.capped && e_use == e_max && e_use >= 2 &&
      out.level_jumps[static_cast<std::size_t>(e_use - 1)].size() ==
          out.level_jumps[static_cast<std::size_t>(e_use - 2)].size();
  if (!stabilized) return out;

  const auto& prev = out.level_jumps[static_cast<std::size_t>(e_use - 2)];
  const Int q_prev = Int(prime_power(store.p(), e_use - 1));

  for (std::size_t i = 0; i < out.reports.size(); ++i) {
    JumpReport& r = out.reports[i];
    const Rational plo(Int(prev[i]) - 1, q_prev);
    const Rational phi(Int(prev[i]), q_prev);
    // Interval nesting under refinement.
    if (r.lo < plo || r.hi > phi) continue;

    const Rational cand = simplest_in_interval(r.lo, r.hi, false, true);
    if (cand != simplest_in_interval(plo, phi, false, true)) continue;

    // Digit consistency at every completed level: the candidate's truncated
    // expansion must name the observed jump position.
    bool digits_ok = true;
    if (denominator(cand) % p != 0) {
      const BasePExpansion x = expand_inverse_p(cand, store.p());
      for (int e = 1; e <= e_use && digits_ok; ++e) {
        const std::uint64_t a = truncation_index(x, e) + 1;
        const auto& level = out.level_jumps[static_cast<std::size_t>(e - 1)];
        digits_ok = std::find(level.begin(), level.end(), a) != level.end();
      }
    }
    if (!digits_ok) continue;

    r.exact = cand;
    r.status = JumpStatus::kExact;
  }
  return out;
}

std::vector<JumpReport> jumping_exponents(const Poly& f, int e_max, Caps caps,
                                          int jobs) {
  ChainStore store(f, caps, jobs);
  return analyze_jumps(store, e_max).reports;
}

JumpReport fpt(const Poly& f, int e_max, Caps caps, int jobs) {
  auto reports = jumping_exponents(f, e_max, caps, jobs);
  if (reports.empty()) throw Error("fpt: no jump detected");
  return reports.front();
}

std::vector<std::uint64_t> nu_values(ChainStore& store, int e_max) {
  const Poly& f = store.f();
  if (f.constant_coefficient() != 0)
    throw Error("nu_values: f(0) must vanish");
  const auto amb = f.ambient();

  std::vector<std::uint64_t> nu;
  for (int e = 1; e <= e_max; ++e) {
    const std::uint64_t q = prime_power(f.prime(), e);
    std::vector<Poly> gens;
    for (std::size_t i = 0; i < amb->nvars(); ++i) {
      Monomial m(amb->nvars());
      m.set_exponent(i, static_cast<std::uint32_t>(q));
      gens.push_back(Poly::from_term(amb, m, 1));
    }
    const Ideal bracket = reduced_groebner(std::move(gens));
    std::uint64_t value = 0;
    for (std::uint64_t a = 1; a <= q; ++a) {
      if (ideal_contains(bracket, store.power(a))) {
        value = a - 1;
        break;
      }
    }
    nu.push_back(value);
  }
  return nu;
}

std::vector<std::uint64_t> nu_values(const Poly& f, int e_max, Caps caps,
                                     int jobs) {
  ChainStore store(f, caps, jobs);
  return nu_values(store, e_max);
}

std::string jumps_to_json(const Poly& f, const JumpAnalysis& analysis,
                          const std::vector<std::uint64_t>& nu) {
  nlohmann::json j;
  j["f"] = f.to_string();
  j["p"] = f.prime().value();
  j["jumps"] = nlohmann::json::array();
  for (const auto& r : analysis.reports) {
    nlohmann::json item;
    item["lo"] = rational_to_string(r.lo);
    item["hi"] = rational_to_string(r.hi);
    item["exact"] =
        r.exact ? nlohmann::json(rational_to_string(*r.exact)) : nullptr;
    item["status"] = r.status == JumpStatus::kExact ? "EXACT" : "INTERVAL";
    j["jumps"].push_back(std::move(item));
  }
  j["nu"] = nu;
  j["capped"] = analysis.capped;
  return j.dump();
}

}  // namespace bfunp
