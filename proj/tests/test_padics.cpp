#include <set>

#include "bfunp/padics.hpp"
#include "doctest.h"

using namespace bfunp;

namespace {

Rational R(long num, long den = 1) { return Rational(num, den); }

std::vector<std::uint32_t> V(std::initializer_list<std::uint32_t> v) {
  return v;
}

}  // namespace

TEST_CASE("expand_inverse_p on the spec corpus") {
  BasePExpansion one = expand_inverse_p(R(1), Prime(5));
  CHECK(one.preperiod.empty());
  CHECK(one.period == V({4}));

  BasePExpansion half = expand_inverse_p(R(1, 2), Prime(7));
  CHECK(half.preperiod.empty());
  CHECK(half.period == V({3}));

  BasePExpansion x = expand_inverse_p(R(4, 5), Prime(5));
  CHECK(x.preperiod == V({3}));
  CHECK(x.period == V({4}));

  CHECK_THROWS_AS(expand_inverse_p(R(0), Prime(5)), Error);
  CHECK_THROWS_AS(expand_inverse_p(R(6, 5), Prime(5)), Error);
}

TEST_CASE("strict periodicity matches the local-ring test") {
  CHECK(is_strictly_periodic(expand_inverse_p(R(5, 6), Prime(7))));
  CHECK(expand_inverse_p(R(5, 6), Prime(7)).period == V({5}));
  CHECK(!is_strictly_periodic(expand_inverse_p(R(4, 5), Prime(5))));
  CHECK(is_strictly_periodic(expand_inverse_p(R(1), Prime(2))));

  CHECK(in_Zp_local(R(5, 6), Prime(7)));
  CHECK(!in_Zp_local(R(4, 5), Prime(5)));
  CHECK(in_Zp_local(R(1), Prime(2)));
}

TEST_CASE("expansion round trip and lemma equivalence, exhaustive") {
  for (std::uint32_t p : {2u, 3u, 5u, 7u}) {
    Prime prime(p);
    for (long b = 1; b <= 20; ++b) {
      for (long a = 1; a <= b; ++a) {
        Rational r(a, b);
        BasePExpansion x = expand_inverse_p(r, prime);
        CHECK(x.value() == r);
        CHECK(is_strictly_periodic(x) == in_Zp_local(r, prime));
        // The period is never all zeros.
        bool all_zero = true;
        for (auto d : x.period) all_zero = all_zero && d == 0;
        CHECK(!all_zero);
      }
    }
  }
}

TEST_CASE("conjugates cycle the period") {
  auto c = conjugates(R(1, 3), Prime(2));
  CHECK(c == std::vector<Rational>{R(1, 3), R(2, 3)});
  CHECK(conjugates(R(5, 6), Prime(7)) == std::vector<Rational>{R(5, 6)});
  CHECK(conjugates(R(1), Prime(3)) == std::vector<Rational>{R(1)});
  CHECK_THROWS_AS(conjugates(R(4, 5), Prime(5)), Error);
}

TEST_CASE("conjugate sets are closed and live in (0,1] intersect Z_(p)") {
  for (std::uint32_t p : {2u, 3u, 5u}) {
    Prime prime(p);
    for (long b = 1; b <= 15; ++b) {
      if (b % p == 0) continue;
      for (long a = 1; a <= b; ++a) {
        Rational r(a, b);
        auto set = conjugates(r, prime);
        CHECK(std::find(set.begin(), set.end(), r) != set.end());
        const auto d = expand_inverse_p(r, prime).period.size();
        CHECK(d % set.size() == 0);
        for (const auto& s : set) {
          CHECK(s > 0);
          CHECK(s <= 1);
          CHECK(in_Zp_local(s, prime));
          auto again = conjugates(s, prime);
          CHECK(again == set);
        }
      }
    }
  }
}

TEST_CASE("negate_to_padic on the spec corpus") {
  PAdicNumber m1 = negate_to_padic(R(1), Prime(3));
  CHECK(m1.preperiod.empty());
  CHECK(m1.period == V({2}));

  PAdicNumber mhalf = negate_to_padic(R(1, 2), Prime(7));
  CHECK(mhalf.preperiod.empty());
  CHECK(mhalf.period == V({3}));

  PAdicNumber mthird = negate_to_padic(R(1, 3), Prime(2));
  CHECK(mthird.preperiod.empty());
  CHECK(mthird.period == V({1, 0}));

  CHECK_THROWS_AS(negate_to_padic(R(4, 5), Prime(5)), Error);
  CHECK_THROWS_AS(negate_to_padic(R(3, 2), Prime(7)), Error);
}

TEST_CASE("padic_to_rational closed forms") {
  CHECK(padic_to_rational(PAdicNumber{Prime(3), {}, {2}}) == R(-1));
  CHECK(padic_to_rational(PAdicNumber{Prime(2), {}, {1, 0}}) == R(-1, 3));
  CHECK(padic_to_rational(PAdicNumber{Prime(5), {1}, {0}}) == R(1));
}

TEST_CASE("negation digit stream reconstructs -r to high valuation") {
  for (std::uint32_t p : {2u, 3u, 5u, 7u}) {
    Prime prime(p);
    for (long b = 1; b <= 20; ++b) {
      if (b % p == 0) continue;
      for (long a = 1; a <= b; ++a) {
        Rational r(a, b);
        PAdicNumber x = negate_to_padic(r, prime);
        CHECK(padic_to_rational(x) == -r);
        // Partial digit sums approach -r p-adically: v_p(S_N + r) >= N.
        Int power = 1;
        Int partial = 0;
        for (int m = 0; m < 40; ++m) {
          partial += Int(x.digit(static_cast<std::size_t>(m))) * power;
          power *= p;
        }
        Rational err = Rational(partial) + r;
        Int num = numerator(err);
        CHECK(denominator(err) % p != 0);
        if (num != 0) {
          int val = 0;
          while (num % p == 0) {
            num /= p;
            ++val;
          }
          CHECK(val >= 40);
        }
      }
    }
  }
}

TEST_CASE("negation period is the reversed expansion period") {
  for (std::uint32_t p : {3u, 5u}) {
    Prime prime(p);
    for (long b = 1; b <= 12; ++b) {
      if (b % p == 0) continue;
      for (long a = 1; a <= b; ++a) {
        auto expansion = expand_inverse_p(Rational(a, b), prime);
        auto neg = negate_to_padic(Rational(a, b), prime);
        auto rev = expansion.period;
        std::reverse(rev.begin(), rev.end());
        // Same length and same cyclic word.
        REQUIRE(neg.period.size() == rev.size());
        auto doubled = rev;
        doubled.insert(doubled.end(), rev.begin(), rev.end());
        bool is_rotation = false;
        for (std::size_t k = 0; k < rev.size() && !is_rotation; ++k)
          is_rotation = std::equal(neg.period.begin(), neg.period.end(),
                                   doubled.begin() + static_cast<std::ptrdiff_t>(k));
        CHECK(is_rotation);
      }
    }
  }
}

TEST_CASE("maximal ideal eigenvalues read the digit stream") {
  MaximalIdealSpec spec{negate_to_padic(R(5, 6), Prime(7))};
  for (std::size_t e = 0; e < 6; ++e) CHECK(spec.eigenvalue(e) == 5);

  MaximalIdealSpec alt{negate_to_padic(R(1, 3), Prime(2))};
  for (std::size_t e = 0; e < 6; ++e)
    CHECK(alt.eigenvalue(e) == (e % 2 == 0 ? 1u : 0u));
}

TEST_CASE("digit stream JSON shape") {
  CHECK(to_json_string(expand_inverse_p(R(4, 5), Prime(5))) ==
        "{\"p\":5,\"preperiod\":[3],\"period\":[4]}");
  CHECK(to_json_string(negate_to_padic(R(1, 3), Prime(2))) ==
        "{\"p\":2,\"preperiod\":[],\"period\":[1,0]}");
}

TEST_CASE("rational strings") {
  CHECK(rational_to_string(R(-5, 6)) == "-5/6");
  CHECK(rational_to_string(R(3)) == "3");
  CHECK(rational_from_string("4/5") == R(4, 5));
  CHECK(rational_from_string("-1") == R(-1));
  CHECK_THROWS_AS(rational_from_string("x"), Error);
}
