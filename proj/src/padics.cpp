#include "bfunp/padics.hpp"

#include <algorithm>
#include <map>
#include <set>
#include <sstream>

namespace bfunp {

namespace {

Int pow_int(std::uint32_t p, std::size_t e) {
  Int q = 1;
  for (std::size_t i = 0; i < e; ++i) q *= p;
  return q;
}

// Minimal preperiod/period normalization of an eventually periodic stream.
void normalize_stream(std::vector<std::uint32_t>& pre,
                      std::vector<std::uint32_t>& per) {
  // Shrink the period to its primitive length.
  for (std::size_t d = 1; d <= per.size(); ++d) {
    if (per.size() % d) continue;
    bool ok = true;
    for (std::size_t i = d; i < per.size() && ok; ++i)
      ok = per[i] == per[i % d];
    if (ok) {
      per.resize(d);
      break;
    }
  }
  // Absorb preperiod digits that continue the cycle.
  while (!pre.empty() && pre.back() == per.back()) {
    pre.pop_back();
    std::rotate(per.begin(), per.end() - 1, per.end());
  }
}

}  // namespace

std::string rational_to_string(const Rational& r) {
  std::ostringstream out;
  out << numerator(r);
  if (denominator(r) != 1) out << "/" << denominator(r);
  return out.str();
}

Rational rational_from_string(const std::string& s) {
  auto slash = s.find('/');
  try {
    if (slash == std::string::npos) return Rational(Int(s));
    Int num(s.substr(0, slash));
    Int den(s.substr(slash + 1));
    if (den == 0) throw Error("zero denominator in '" + s + "'");
    return Rational(num, den);
  } catch (const std::exception&) {
    throw Error("cannot parse rational '" + s + "'");
  }
}

std::uint32_t BasePExpansion::digit(std::size_t n) const {
  if (n == 0) throw Error("1/p-adic digits start at position 1");
  std::size_t idx = n - 1;
  if (idx < preperiod.size()) return preperiod[idx];
  return period[(idx - preperiod.size()) % period.size()];
}

Rational BasePExpansion::value() const {
  const std::uint32_t pv = p.value();
  Int pre_int = 0;
  for (auto d : preperiod) pre_int = pre_int * pv + d;
  Int per_int = 0;
  for (auto d : period) per_int = per_int * pv + d;
  const Int pL = pow_int(pv, preperiod.size());
  const Int pd = pow_int(pv, period.size());
  return Rational(pre_int, pL) + Rational(per_int, pd - 1) / Rational(pL);
}

std::uint32_t PAdicNumber::digit(std::size_t m) const {
  if (m < preperiod.size()) return preperiod[m];
  return period[(m - preperiod.size()) % period.size()];
}

BasePExpansion expand_inverse_p(const Rational& r, Prime p) {
  if (r <= 0 || r > 1) throw Error("expand_inverse_p: r must be in (0,1]");
  const std::uint32_t pv = p.value();
  std::map<Rational, std::size_t> seen;
  std::vector<std::uint32_t> digits;
  Rational rem = r;
  for (;;) {
    auto it = seen.find(rem);
    if (it != seen.end()) {
      BasePExpansion x{p, {}, {}};
      x.preperiod.assign(digits.begin(),
                         digits.begin() + static_cast<std::ptrdiff_t>(it->second));
      x.period.assign(digits.begin() + static_cast<std::ptrdiff_t>(it->second),
                      digits.end());
      return x;
    }
    seen.emplace(rem, digits.size());
    // d = ceil(rem * p) - 1 keeps the next remainder in (0,1].
    Rational rp = rem * pv;
    Int d = (numerator(rp) + denominator(rp) - 1) / denominator(rp) - 1;
    digits.push_back(static_cast<std::uint32_t>(d));
    rem = rp - Rational(d);
  }
}

bool is_strictly_periodic(const BasePExpansion& x) {
  return x.preperiod.empty();
}

bool in_Zp_local(const Rational& r, Prime p) {
  return denominator(r) % p.value() != 0;
}

std::vector<Rational> conjugates(const Rational& r, Prime p) {
  BasePExpansion x = expand_inverse_p(r, p);
  if (!is_strictly_periodic(x))
    throw Error("conjugates: expansion of " + rational_to_string(r) +
                " is not strictly periodic");
  const std::uint32_t pv = p.value();
  const Int pd = pow_int(pv, x.period.size());
  std::set<Rational> values;
  std::vector<std::uint32_t> rot = x.period;
  for (std::size_t k = 0; k < x.period.size(); ++k) {
    Int num = 0;
    for (auto d : rot) num = num * pv + d;
    values.insert(Rational(num, pd - 1));
    std::rotate(rot.begin(), rot.begin() + 1, rot.end());
  }
  return {values.begin(), values.end()};
}

PAdicNumber negate_to_padic(const Rational& r, Prime p) {
  if (r <= 0 || r > 1) throw Error("negate_to_padic: r must be in (0,1]");
  if (!in_Zp_local(r, p))
    throw Error("negate_to_padic: denominator of " + rational_to_string(r) +
                " is divisible by p");
  BasePExpansion x = expand_inverse_p(r, p);
  // Strict periodicity follows from the denominator condition.
  PAdicNumber out{p, {}, x.period};
  std::reverse(out.period.begin(), out.period.end());
  normalize_stream(out.preperiod, out.period);
  return out;
}

Rational padic_to_rational(const PAdicNumber& x) {
  const std::uint32_t pv = x.p.value();
  Int pre_int = 0;  // digits at positions 0..L-1, least significant first
  for (std::size_t i = x.preperiod.size(); i-- > 0;)
    pre_int = pre_int * pv + x.preperiod[i];
  Int per_int = 0;
  for (std::size_t i = x.period.size(); i-- > 0;)
    per_int = per_int * pv + x.period[i];
  const Int pL = pow_int(pv, x.preperiod.size());
  const Int pd = pow_int(pv, x.period.size());
  return Rational(pre_int) - Rational(pL) * Rational(per_int, pd - 1);
}

Rational truncated_value(const BasePExpansion& x, int e) {
  const std::uint32_t pv = x.p.value();
  Int num = 0;
  for (int n = 1; n <= e; ++n) num = num * pv + x.digit(static_cast<std::size_t>(n));
  return Rational(num, pow_int(pv, static_cast<std::size_t>(e)));
}

std::uint64_t truncation_index(const BasePExpansion& x, int e) {
  std::uint64_t m = 0;
  for (int n = 1; n <= e; ++n) {
    m = m * x.p.value() + x.digit(static_cast<std::size_t>(n));
  }
  return m;
}

namespace {

std::string digits_json(const std::vector<std::uint32_t>& v) {
  std::ostringstream out;
  out << "[";
  for (std::size_t i = 0; i < v.size(); ++i) {
    if (i) out << ",";
    out << v[i];
  }
  out << "]";
  return out.str();
}

}  // namespace

std::string to_json_string(const BasePExpansion& x) {
  std::ostringstream out;
  out << "{\"p\":" << x.p.value() << ",\"preperiod\":" << digits_json(x.preperiod)
      << ",\"period\":" << digits_json(x.period) << "}";
  return out.str();
}

std::string to_json_string(const PAdicNumber& x) {
  std::ostringstream out;
  out << "{\"p\":" << x.p.value() << ",\"preperiod\":" << digits_json(x.preperiod)
      << ",\"period\":" << digits_json(x.period) << "}";
  return out.str();
}

}  // namespace bfunp
