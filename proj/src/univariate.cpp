#include "gorstab/univariate.hpp"

#include <algorithm>
#include <stdexcept>

namespace gorstab {

namespace {

void trim(std::vector<Rational>& c) {
  while (!c.empty() && is_zero(c.back())) c.pop_back();
}

int sign_changes(const std::vector<UPoly>& chain, const Rational& x) {
  int changes = 0, last = 0;
  for (const auto& p : chain) {
    int s = sgn(p(x));
    if (s == 0) continue;
    if (last != 0 && s != last) ++changes;
    last = s;
  }
  return changes;
}

UPoly linear(const Rational& root) { return UPoly({-root, Rational(1)}); }

Integer ceil_q(const Rational& q) {
  Integer r;
  mpz_cdiv_q(r.get_mpz_t(), q.get_num_mpz_t(), q.get_den_mpz_t());
  return r;
}

Integer floor_q(const Rational& q) {
  Integer r;
  mpz_fdiv_q(r.get_mpz_t(), q.get_num_mpz_t(), q.get_den_mpz_t());
  return r;
}

}  // namespace

UPoly::UPoly(std::vector<Rational> c) : coeffs(std::move(c)) { trim(coeffs); }

Rational UPoly::operator()(const Rational& t) const {
  Rational acc = 0;
  for (auto it = coeffs.rbegin(); it != coeffs.rend(); ++it) acc = acc * t + *it;
  return acc;
}

UPoly derivative(const UPoly& p) {
  std::vector<Rational> c;
  for (std::size_t k = 1; k < p.coeffs.size(); ++k) c.push_back(p.coeffs[k] * static_cast<long>(k));
  return UPoly(std::move(c));
}

std::pair<UPoly, UPoly> divmod(const UPoly& a, const UPoly& b) {
  if (b.is_zero()) throw std::domain_error("univariate division by zero");
  std::vector<Rational> rem = a.coeffs;
  std::vector<Rational> quo;
  if (a.degree() >= b.degree()) quo.assign(a.degree() - b.degree() + 1, Rational(0));
  Rational inv = 1 / b.lead();
  for (int k = a.degree() - b.degree(); k >= 0; --k) {
    Rational f = rem[k + b.degree()] * inv;
    if (is_zero(f)) continue;
    quo[k] = f;
    for (int j = 0; j <= b.degree(); ++j) rem[k + j] -= f * b.coeffs[j];
  }
  return {UPoly(std::move(quo)), UPoly(std::move(rem))};
}

UPoly monic(const UPoly& p) {
  if (p.is_zero()) return p;
  UPoly out = p;
  Rational inv = 1 / p.lead();
  for (auto& c : out.coeffs) c *= inv;
  return out;
}

UPoly gcd(const UPoly& a, const UPoly& b) {
  UPoly x = monic(a), y = monic(b);
  while (!y.is_zero()) {
    UPoly r = divmod(x, y).second;
    x = std::move(y);
    y = monic(r);
  }
  return monic(x);
}

UPoly operator*(const UPoly& a, const UPoly& b) {
  if (a.is_zero() || b.is_zero()) return {};
  std::vector<Rational> c(a.coeffs.size() + b.coeffs.size() - 1, Rational(0));
  for (std::size_t i = 0; i < a.coeffs.size(); ++i)
    for (std::size_t j = 0; j < b.coeffs.size(); ++j) c[i + j] += a.coeffs[i] * b.coeffs[j];
  return UPoly(std::move(c));
}

UPoly to_upoly(const WPoly& p, std::size_t var) {
  std::vector<Rational> c;
  for (const auto& [e, coeff] : p.terms()) {
    for (std::size_t i = 0; i < e.size(); ++i)
      if (i != var && e[i] != 0)
        throw std::invalid_argument("to_upoly: polynomial involves more than one variable");
    std::size_t k = static_cast<std::size_t>(e[var]);
    if (c.size() <= k) c.resize(k + 1, Rational(0));
    c[k] += coeff;
  }
  return UPoly(std::move(c));
}

WPoly to_wpoly(const UPoly& p, const RingPtr& ring, std::size_t var) {
  WPoly out(ring);
  Exponent e(ring->size(), 0);
  for (std::size_t k = 0; k < p.coeffs.size(); ++k) {
    e[var] = static_cast<int>(k);
    out.add_term(e, p.coeffs[k]);
  }
  return out;
}

RootSplit split_rational_roots(const UPoly& p) {
  if (p.is_zero()) throw std::domain_error("roots of the zero polynomial");
  RootSplit out;
  UPoly rest = p;

  // Root at zero.
  int zero_mult = 0;
  while (zero_mult < static_cast<int>(rest.coeffs.size()) && is_zero(rest.coeffs[zero_mult])) ++zero_mult;
  if (zero_mult > 0) {
    out.rational.push_back({Rational(0), zero_mult});
    rest = UPoly(std::vector<Rational>(rest.coeffs.begin() + zero_mult, rest.coeffs.end()));
  }

  if (rest.degree() >= 1) {
    UPoly sqf = divmod(rest, gcd(rest, derivative(rest))).first;
    // Integer primitive form fixes the denominator bound of rational roots.
    Integer den = 1, num_gcd = 0;
    for (const auto& c : sqf.coeffs) mpz_lcm(den.get_mpz_t(), den.get_mpz_t(), c.get_den_mpz_t());
    for (const auto& c : sqf.coeffs) {
      Integer v = c.get_num() * (den / c.get_den());
      mpz_gcd(num_gcd.get_mpz_t(), num_gcd.get_mpz_t(), v.get_mpz_t());
    }
    Rational scale = Rational(den) / Rational(num_gcd);
    for (auto& c : sqf.coeffs) c *= scale;
    const Integer lead = abs(sqf.lead().get_num());

    std::vector<UPoly> chain{sqf, derivative(sqf)};
    while (chain.back().degree() > 0) {
      UPoly r = divmod(chain[chain.size() - 2], chain.back()).second;
      if (r.is_zero()) break;
      for (auto& c : r.coeffs) c = -c;
      chain.push_back(std::move(r));
    }

    Rational bound = 0;
    for (const auto& c : sqf.coeffs) bound = std::max(bound, Rational(abs(c / sqf.lead())));
    bound = Rational(ceil_q(bound)) + 1;

    struct Interval {
      Rational lo, hi;
      int count;
    };
    std::vector<Interval> work{{-bound, bound, sign_changes(chain, -bound) - sign_changes(chain, bound)}};
    std::vector<Rational> found;
    const Rational half_over_lead = Rational(1, 2) / Rational(lead);
    while (!work.empty()) {
      Interval iv = work.back();
      work.pop_back();
      if (iv.count == 0) continue;
      if (iv.count > 1) {
        Rational mid = (iv.lo + iv.hi) / 2;
        int vm = sign_changes(chain, mid);
        work.push_back({iv.lo, mid, sign_changes(chain, iv.lo) - vm});
        work.push_back({mid, iv.hi, vm - sign_changes(chain, iv.hi)});
        continue;
      }
      // Exactly one simple root in (lo, hi].
      if (is_zero(sqf(iv.hi))) {
        found.push_back(iv.hi);
        continue;
      }
      const int hi_sign = sgn(sqf(iv.hi));
      bool done = false;
      while (iv.hi - iv.lo >= half_over_lead) {
        Rational mid = (iv.lo + iv.hi) / 2;
        int s = sgn(sqf(mid));
        if (s == 0) {
          found.push_back(mid);
          done = true;
          break;
        }
        if (s == hi_sign) iv.hi = mid;
        else iv.lo = mid;
      }
      if (done) continue;
      Rational lo_scaled = iv.lo * Rational(lead), hi_scaled = iv.hi * Rational(lead);
      for (Integer k = floor_q(lo_scaled); k <= ceil_q(hi_scaled); ++k) {
        Rational candidate = make_rational(k, lead);
        if (candidate > iv.lo && candidate <= iv.hi && is_zero(sqf(candidate))) {
          found.push_back(candidate);
          break;
        }
      }
    }

    for (const auto& r : found) {
      int mult = 0;
      while (true) {
        auto [q, rem] = divmod(rest, linear(r));
        if (!rem.is_zero()) break;
        rest = std::move(q);
        ++mult;
      }
      out.rational.push_back({r, mult});
    }
  }
  std::sort(out.rational.begin(), out.rational.end(),
            [](const RationalRoot& a, const RationalRoot& b) { return a.value < b.value; });
  out.rest = rest;
  out.rest_squarefree = rest.degree() <= 0 || gcd(rest, derivative(rest)).degree() == 0;
  return out;
}

std::vector<Rational> rational_roots(const UPoly& p) {
  std::vector<Rational> roots;
  for (const auto& r : split_rational_roots(p).rational) roots.push_back(r.value);
  return roots;
}

}  // namespace gorstab
