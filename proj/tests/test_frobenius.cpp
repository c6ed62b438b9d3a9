#include <random>

#include "bfunp/frobenius.hpp"
#include "doctest.h"
#include "test_util.hpp"

using namespace bfunp;

namespace {

Ideal ideal_of(const AmbientPtr& amb, std::initializer_list<const char*> gens) {
  std::vector<Poly> v;
  for (auto* g : gens) v.push_back(parse_poly(g, amb));
  return reduced_groebner(std::move(v));
}

// All monomial ideals generated by subsets of the exponent box [0,box]^2.
std::vector<std::vector<Monomial>> monomial_subsets(const AmbientPtr& amb,
                                                    std::uint32_t box) {
  auto grid = testutil::monomials_up_to(amb, 2 * box);
  std::vector<Monomial> cells;
  for (const auto& m : grid) {
    bool ok = true;
    for (std::size_t i = 0; i < amb->nvars(); ++i)
      if (m.exponent(i) > box) ok = false;
    if (ok) cells.push_back(m);
  }
  std::vector<std::vector<Monomial>> subsets;
  const std::size_t n = cells.size();
  for (std::size_t mask = 1; mask < (std::size_t(1) << n); ++mask) {
    std::vector<Monomial> s;
    for (std::size_t i = 0; i < n; ++i)
      if (mask & (std::size_t(1) << i)) s.push_back(cells[i]);
    subsets.push_back(std::move(s));
  }
  return subsets;
}

}  // namespace

TEST_CASE("bracket_power on generators") {
  auto amb2 = make_ambient({"x", "y"}, Prime(2));
  CHECK(ideal_equal(bracket_power(ideal_of(amb2, {"x", "y"}), 1),
                    ideal_of(amb2, {"x^2", "y^2"})));
  CHECK(bracket_power(ideal_of(amb2, {"1"}), 3).is_unit());

  auto amb3 = make_ambient({"x", "y"}, Prime(3));
  CHECK(ideal_equal(bracket_power(ideal_of(amb3, {"x + y"}), 1),
                    ideal_of(amb3, {"x^3 + y^3"})));
}

TEST_CASE("frobenius_root digit decomposition") {
  auto amb = make_ambient({"x", "y"}, Prime(2));
  CHECK(ideal_equal(frobenius_root(ideal_of(amb, {"x^3"}), 1),
                    ideal_of(amb, {"x"})));
  CHECK(frobenius_root(ideal_of(amb, {"x"}), 1).is_unit());
  CHECK(ideal_equal(frobenius_root(ideal_of(amb, {"x^2*y^2"}), 1),
                    ideal_of(amb, {"x*y"})));
}

TEST_CASE("frobenius_root inverts bracket_power") {
  std::mt19937 rng(7);
  for (std::uint32_t p : {2u, 3u}) {
    auto amb = make_ambient({"x", "y"}, Prime(p));
    for (int e = 1; e <= 2; ++e) {
      for (int it = 0; it < 6; ++it) {
        std::vector<Poly> gens;
        for (int k = 0; k < 2; ++k)
          gens.push_back(testutil::random_poly(amb, rng, 2, 3));
        Ideal I = reduced_groebner(gens);
        if (I.groebner_basis().empty()) continue;
        CHECK(ideal_equal(frobenius_root(bracket_power(I, e), e), I));
      }
    }
  }
}

TEST_CASE("adjunction: bracket of root contains the input") {
  std::mt19937 rng(42);
  for (std::uint32_t p : {2u, 3u, 5u}) {
    auto amb = make_ambient({"x", "y"}, Prime(p));
    for (int e = 1; e <= 2; ++e) {
      for (int it = 0; it < 8; ++it) {
        std::vector<Poly> gens;
        for (int k = 0; k < 2; ++k)
          gens.push_back(testutil::random_poly(amb, rng, 4, 4));
        Ideal J = reduced_groebner(gens);
        if (J.groebner_basis().empty()) continue;
        Ideal back = bracket_power(frobenius_root(J, e), e);
        CHECK(ideal_contains_ideal(back, J));
      }
    }
  }
}

TEST_CASE("frobenius_root is independent of the generating set") {
  std::mt19937 rng(77);
  auto amb = make_ambient({"x", "y"}, Prime(3));
  for (int it = 0; it < 8; ++it) {
    std::vector<Poly> gens;
    for (int k = 0; k < 2; ++k)
      gens.push_back(testutil::random_poly(amb, rng, 3, 3));
    Ideal I = reduced_groebner(gens);
    // Same ideal presented redundantly.
    std::vector<Poly> fat = gens;
    fat.push_back(gens[0] * testutil::random_poly(amb, rng, 2, 2) +
                  gens[1].scaled(2));
    fat.push_back(gens[1] * gens[0]);
    Ideal I2 = reduced_groebner(fat);
    REQUIRE(ideal_equal(I, I2));
    for (int e = 1; e <= 2; ++e)
      CHECK(ideal_equal(frobenius_root(I, e), frobenius_root(I2, e)));
  }
}

TEST_CASE("frobenius_root is additive over ideal sums") {
  std::mt19937 rng(4242);
  auto amb = make_ambient({"x", "y"}, Prime(2));
  for (int it = 0; it < 8; ++it) {
    Poly f = testutil::random_poly(amb, rng, 4, 3);
    Poly g = testutil::random_poly(amb, rng, 4, 3);
    if (f.is_zero() || g.is_zero()) continue;
    Ideal sum = reduced_groebner({f, g});
    Ideal lhs = frobenius_root(sum, 1);
    Ideal root_f = frobenius_root(reduced_groebner({f}), 1);
    Ideal root_g = frobenius_root(reduced_groebner({g}), 1);
    std::vector<Poly> parts;
    for (const auto& b : root_f.groebner_basis()) parts.push_back(b);
    for (const auto& b : root_g.groebner_basis()) parts.push_back(b);
    CHECK(ideal_equal(lhs, reduced_groebner(parts)));
  }
}

TEST_CASE("brute-force minimality over monomial ideals") {
  for (std::uint32_t p : {2u, 3u}) {
    auto amb = make_ambient({"x", "y"}, Prime(p));
    for (int e = 1; e <= 2; ++e) {
      const std::uint32_t q = static_cast<std::uint32_t>(prime_power(Prime(p), e));
      // J generated by a couple of monomials with exponents <= 2q, so the
      // root's exponents stay within the enumeration box [0,2]^2.
      std::mt19937 rng(100 * p + static_cast<std::uint32_t>(e));
      std::uniform_int_distribution<std::uint32_t> exp_dist(0, 2 * q);
      for (int it = 0; it < 4; ++it) {
        std::vector<Poly> gens;
        for (int k = 0; k < 2; ++k) {
          Monomial m{exp_dist(rng), exp_dist(rng)};
          gens.push_back(Poly::from_term(amb, m, 1));
        }
        Ideal J = reduced_groebner(gens);
        Ideal root = frobenius_root(J, e);
        CHECK(ideal_contains_ideal(bracket_power(root, e), J));
        // Every monomial ideal I with I^[q] >= J must contain the root.
        for (const auto& subset : monomial_subsets(amb, 2)) {
          std::vector<Poly> igens;
          for (const auto& m : subset) igens.push_back(Poly::from_term(amb, m, 1));
          Ideal I = reduced_groebner(igens);
          if (!ideal_contains_ideal(bracket_power(I, e), J)) continue;
          CHECK(ideal_contains_ideal(I, root));
        }
      }
    }
  }
}

TEST_CASE("d_ideal examples") {
  auto amb = make_ambient({"x"}, Prime(2));
  Poly x = parse_poly("x", amb);
  CHECK(d_ideal(x, 1, Level(0)).is_unit());
  CHECK(ideal_equal(d_ideal(x, 2, Level(0)), ideal_of(amb, {"x"})));
  CHECK_THROWS_AS(d_ideal(x, 3, Level(0)), Error);

  auto amb7 = make_ambient({"x", "y"}, Prime(7));
  Poly cusp = parse_poly("x^2 + y^3", amb7);
  CHECK(!ideal_equal(d_ideal(cusp, 5, Level(0)), d_ideal(cusp, 6, Level(0))));
}

TEST_CASE("d_ideal is monotone and nests across levels") {
  std::mt19937 rng(11);
  for (std::uint32_t p : {2u, 3u}) {
    auto amb = make_ambient({"x", "y"}, Prime(p));
    for (int it = 0; it < 4; ++it) {
      Poly f = testutil::random_poly(amb, rng, 2, 3, /*allow_constant=*/false);
      if (f.is_constant()) continue;
      const std::uint64_t q = prime_power(Prime(p), 1);
      for (std::uint64_t n = 0; n < q; ++n) {
        CHECK(ideal_contains_ideal(d_ideal(f, n, Level(0)),
                                   d_ideal(f, n + 1, Level(0))));
        // frobenius_root((f^n), e) >= frobenius_root((f^(n*p)), e+1)
        Ideal coarse = frobenius_root(reduced_groebner({poly_pow(f, n)}), 1);
        Ideal fine = frobenius_root(reduced_groebner({poly_pow(f, n * p)}), 2);
        CHECK(ideal_contains_ideal(coarse, fine));
      }
    }
  }
}

TEST_CASE("power cache honors caps") {
  auto amb = make_ambient({"x", "y"}, Prime(5));
  Poly f = parse_poly("x^2 + y^3", amb);
  Caps caps;
  caps.max_degree = 10;
  PowerCache cache(f, caps);
  CHECK_THROWS_AS(cache.warm(20), CappedError);
  Caps tight;
  tight.max_terms = 2;
  PowerCache cache2(f, tight);
  CHECK_THROWS_AS(cache2.warm(10), CappedError);
}
