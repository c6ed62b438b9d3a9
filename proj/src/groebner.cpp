#include <algorithm>
#include <map>
#include <set>

#include "bfunp/polyalg.hpp"

// Buchberger's algorithm with the coprime and chain criteria, followed by
// minimalization and tail reduction, so every Ideal carries the unique
// reduced Groebner basis under grevlex.

namespace bfunp {

namespace {

// Remainder of g on division by basis (monic elements, any order).
// Irreducible leading terms are peeled off without copying; single-monomial
// reducers delete the term in place, so reduction modulo monomial ideals is
// linear in the term count.
Poly reduce_by(const Poly& g, const std::vector<Poly>& basis) {
  if (g.is_zero()) return g;
  const std::uint32_t p = g.prime().value();
  std::vector<Term> h(g.terms());  // grevlex descending
  std::vector<Term> rem;
  std::size_t start = 0;
  while (start < h.size()) {
    const Term lt = h[start];
    const Poly* red = nullptr;
    for (const Poly& b : basis) {
      if (b.is_zero()) continue;
      if (b.leading_term().mono.divides(lt.mono)) {
        red = &b;
        break;
      }
    }
    if (!red) {
      rem.push_back(lt);
      ++start;
      continue;
    }
    const auto& bt = red->terms();
    if (bt.size() == 1) {  // monomial reducer: the term cancels exactly
      ++start;
      continue;
    }
    // h[start..] -= lt.coeff * (lt.mono / LM(b)) * b; b's leading term
    // cancels h[start], the tail merges in negated.
    const Monomial shift = bt[0].mono.divide_into(lt.mono);
    std::vector<Term> merged;
    merged.reserve(h.size() - start + bt.size());
    std::size_t i = start + 1, j = 1;
    while (i < h.size() && j < bt.size()) {
      Monomial bm = bt[j].mono * shift;
      if (h[i].mono == bm) {
        std::uint64_t sub =
            (static_cast<std::uint64_t>(bt[j].coeff) * lt.coeff) % p;
        std::uint32_t c = static_cast<std::uint32_t>(
            (h[i].coeff + p - static_cast<std::uint32_t>(sub)) % p);
        if (c) merged.push_back({h[i].mono, c});
        ++i, ++j;
      } else if (grevlex_less(bm, h[i].mono)) {
        merged.push_back(h[i++]);
      } else {
        std::uint64_t sub =
            (static_cast<std::uint64_t>(bt[j].coeff) * lt.coeff) % p;
        std::uint32_t c =
            static_cast<std::uint32_t>((p - static_cast<std::uint32_t>(sub)) % p);
        if (c) merged.push_back({bm, c});
        ++j;
      }
    }
    while (i < h.size()) merged.push_back(h[i++]);
    while (j < bt.size()) {
      std::uint64_t sub =
          (static_cast<std::uint64_t>(bt[j].coeff) * lt.coeff) % p;
      std::uint32_t c =
          static_cast<std::uint32_t>((p - static_cast<std::uint32_t>(sub)) % p);
      if (c) merged.push_back({bt[j].mono * shift, c});
      ++j;
    }
    h.swap(merged);
    start = 0;
  }
  return Poly::from_terms(g.ambient(), std::move(rem));
}

Poly s_poly(const Poly& f, const Poly& g) {
  const Monomial l = f.leading_term().mono.lcm(g.leading_term().mono);
  // Both inputs monic.
  Poly a = f.term_multiplied(f.leading_term().mono.divide_into(l), 1);
  Poly b = g.term_multiplied(g.leading_term().mono.divide_into(l), 1);
  return a - b;
}

// Drops zeros, makes monic, sorts by leading monomial ascending.
std::vector<Poly> normalize_input(std::vector<Poly> gens) {
  std::vector<Poly> out;
  for (auto& g : gens) {
    if (g.is_zero()) continue;
    out.push_back(g.monic());
  }
  std::sort(out.begin(), out.end(), [](const Poly& a, const Poly& b) {
    return grevlex_less(a.leading_term().mono, b.leading_term().mono);
  });
  return out;
}

// One interreduction sweep in ascending leading-monomial order; most
// generators coming out of Frobenius-root bucketing collapse here.
std::vector<Poly> interreduce(std::vector<Poly> gens) {
  std::vector<Poly> kept;
  for (const Poly& g : gens) {
    Poly r = reduce_by(g, kept);
    if (!r.is_zero()) kept.push_back(r.monic());
  }
  return kept;
}

}  // namespace

Ideal reduced_groebner(std::vector<Poly> gens) {
  if (gens.empty()) throw Error("reduced_groebner: empty generator list");
  AmbientPtr amb = gens.front().ambient();
  for (const auto& g : gens)
    if (!same_ambient(amb, g.ambient()))
      throw Error("reduced_groebner: mixed ambients");

  std::vector<Poly> originals = gens;
  std::vector<Poly> basis = interreduce(normalize_input(std::move(gens)));

  // Pending S-pairs keyed by (lcm degree, i, j): normal selection strategy.
  // done records treated pairs, including ones dropped by the criteria.
  std::set<std::pair<std::size_t, std::size_t>> done;
  using Key = std::tuple<std::uint64_t, std::size_t, std::size_t>;
  std::map<Key, std::pair<std::size_t, std::size_t>> queue;

  auto push_pair = [&](std::size_t i, std::size_t j) {
    const Monomial l =
        basis[i].leading_term().mono.lcm(basis[j].leading_term().mono);
    queue.emplace(Key{l.degree(), i, j}, std::make_pair(i, j));
  };

  for (std::size_t j = 1; j < basis.size(); ++j)
    for (std::size_t i = 0; i < j; ++i) push_pair(i, j);

  while (!queue.empty()) {
    auto [i, j] = queue.begin()->second;
    queue.erase(queue.begin());
    done.insert({i, j});

    const Monomial& mi = basis[i].leading_term().mono;
    const Monomial& mj = basis[j].leading_term().mono;
    const Monomial l = mi.lcm(mj);

    // Buchberger's first criterion: coprime leading monomials.
    if (l == mi * mj) continue;

    // Chain criterion: some k with LM_k | lcm and both pairs already done.
    bool skip = false;
    for (std::size_t k = 0; k < basis.size() && !skip; ++k) {
      if (k == i || k == j) continue;
      if (!basis[k].leading_term().mono.divides(l)) continue;
      auto ik = std::minmax(i, k);
      auto jk = std::minmax(j, k);
      if (done.count({ik.first, ik.second}) &&
          done.count({jk.first, jk.second}))
        skip = true;
    }
    if (skip) continue;

    Poly r = reduce_by(s_poly(basis[i], basis[j]), basis);
    if (r.is_zero()) continue;
    basis.push_back(r.monic());
    for (std::size_t k = 0; k + 1 < basis.size(); ++k)
      push_pair(k, basis.size() - 1);
  }

  // Minimalize: drop elements whose leading monomial another one divides.
  std::vector<Poly> minimal;
  for (std::size_t i = 0; i < basis.size(); ++i) {
    bool redundant = false;
    for (std::size_t j = 0; j < basis.size() && !redundant; ++j) {
      if (i == j) continue;
      const Monomial& a = basis[i].leading_term().mono;
      const Monomial& b = basis[j].leading_term().mono;
      if (b.divides(a) && !(a == b && j > i)) redundant = true;
    }
    if (!redundant) minimal.push_back(basis[i]);
  }

  // Tail-reduce each element against the others.
  std::vector<Poly> reduced;
  for (std::size_t i = 0; i < minimal.size(); ++i) {
    std::vector<Poly> others;
    for (std::size_t j = 0; j < minimal.size(); ++j)
      if (j != i) others.push_back(minimal[j]);
    Poly r = reduce_by(minimal[i], others);
    if (!r.is_zero()) reduced.push_back(r.monic());
  }
  std::sort(reduced.begin(), reduced.end(), [](const Poly& a, const Poly& b) {
    return grevlex_less(a.leading_term().mono, b.leading_term().mono);
  });

  Ideal I;
  I.amb_ = amb;
  I.gens_ = std::move(originals);
  I.gb_ = std::move(reduced);
  return I;
}

bool Ideal::is_unit() const { return gb_.size() == 1 && gb_[0].is_one(); }

Poly normal_form(const Poly& g, const Ideal& I) {
  if (!same_ambient(g.ambient(), I.ambient()))
    throw Error("normal_form: mixed ambients");
  return reduce_by(g, I.groebner_basis());
}

bool ideal_equal(const Ideal& I, const Ideal& J) {
  if (!same_ambient(I.ambient(), J.ambient()))
    throw Error("ideal_equal: mixed ambients");
  const auto& a = I.groebner_basis();
  const auto& b = J.groebner_basis();
  if (a.size() != b.size()) return false;
  for (std::size_t i = 0; i < a.size(); ++i)
    if (!(a[i] == b[i])) return false;
  return true;
}

bool ideal_contains(const Ideal& I, const Poly& g) {
  return normal_form(g, I).is_zero();
}

bool ideal_contains_ideal(const Ideal& I, const Ideal& J) {
  for (const auto& g : J.groebner_basis())
    if (!ideal_contains(I, g)) return false;
  return true;
}

}  // namespace bfunp
