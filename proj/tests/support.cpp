#include "support.hpp"

#include "gorstab/linsys.hpp"
#include "gorstab/parse.hpp"

#include <algorithm>

namespace oracle {

using namespace gorstab;

long series_count(const std::vector<int>& weights, int d) {
  if (d < 0) return 0;
  std::vector<long> c(d + 1, 0);
  c[0] = 1;
  // multiply by 1/(1 - t^w) one weight at a time
  for (int w : weights)
    for (int k = w; k <= d; ++k) c[k] += c[k - w];
  return c[d];
}

Rational newton_lct(const WPoly& germ) {
  std::vector<std::pair<Rational, Rational>> pts;
  for (const auto& [e, c] : germ.terms()) pts.emplace_back(e[0], e[1]);
  Rational t = -1;
  auto consider = [&](const Rational& v) {
    if (t < 0 || v < t) t = v;
  };
  for (const auto& [i, j] : pts) consider(std::max(i, j));
  for (const auto& p : pts)
    for (const auto& q : pts) {
      Rational dp = p.first - p.second, dq = q.first - q.second;
      if (sgn(dp) * sgn(dq) >= 0) continue;
      // lambda p + (1 - lambda) q on the diagonal
      Rational lambda = dq / (dq - dp);
      consider(lambda * p.first + (1 - lambda) * q.first);
    }
  Rational l = 1 / t;
  return l > 1 ? Rational(1) : l;
}

const std::vector<NamedGerm>& germ_corpus() {
  static const std::vector<NamedGerm> c{
      {"node", "x*y", make_rational(1)},
      {"cusp", "y^2-x^3", make_rational(5, 6)},
      {"tacnode", "y^2-x^4", make_rational(3, 4)},
      {"ordinary triple", "x*y*(x+y)", make_rational(2, 3)},
      {"ordinary quadruple", "x*y*(x-y)*(x+y)", make_rational(1, 2)},
      {"[3,3]", "y^3-x^6", make_rational(1, 2)},
  };
  return c;
}

}  // namespace oracle

namespace gen {

using namespace gorstab;

Rational rational(Rng& rng, int bound) {
  std::uniform_int_distribution<int> num(-bound, bound), den(1, 3);
  int n = 0;
  while (n == 0) n = num(rng);
  return make_rational(n, den(rng));
}

WPoly polynomial(Rng& rng, const RingPtr& ring, int terms, int max_deg) {
  WPoly p(ring);
  std::uniform_int_distribution<int> deg(0, max_deg);
  for (int t = 0; t < terms; ++t) {
    Exponent e(ring->size(), 0);
    int budget = deg(rng);
    for (int k = 0; k < budget; ++k) e[std::uniform_int_distribution<std::size_t>(0, ring->size() - 1)(rng)]++;
    p.add_term(e, rational(rng));
  }
  return p;
}

WPoly form(Rng& rng, const RingPtr& ring, int d, int bound) {
  WPoly p(ring);
  std::uniform_int_distribution<int> c(-bound, bound);
  for (const auto& e : monomial_basis(*ring, d)) p.add_term(e, c(rng));
  return p;
}

WPoly local_automorphism(Rng& rng, const WPoly& germ) {
  RingPtr r = ring_local();
  WPoly x = WPoly::variable(r, 0), y = WPoly::variable(r, 1);
  std::uniform_int_distribution<int> small(-3, 3);
  Rational a, b, c, d;
  do {
    a = small(rng), b = small(rng), c = small(rng), d = small(rng);
  } while (a * d - b * c == 0);
  WPoly u = x * a + y * b + x * x * Rational(small(rng)) + x * y * Rational(small(rng));
  WPoly v = x * c + y * d + y * y * Rational(small(rng)) + x * x * x * Rational(small(rng));
  return substitute(germ, std::vector<WPoly>{u, v});
}

WPoly ConeAutomorphism::apply(const WPoly& f) const {
  RingPtr r = f.ring();
  WPoly x0 = WPoly::variable(r, 0), x1 = WPoly::variable(r, 1), y = WPoly::variable(r, 2);
  return substitute(f, std::vector<WPoly>{x0 * a + x1 * b, x0 * c + x1 * d,
                                          y * e + x0 * x0 * q0 + x0 * x1 * q1 + x1 * x1 * q2});
}

ConeAutomorphism cone_automorphism(Rng& rng) {
  std::uniform_int_distribution<int> small(-3, 3);
  ConeAutomorphism g;
  do {
    g.a = small(rng), g.b = small(rng), g.c = small(rng), g.d = small(rng);
  } while (g.a * g.d - g.b * g.c == 0);
  do g.e = small(rng);
  while (g.e == 0);
  g.q0 = small(rng), g.q1 = small(rng), g.q2 = small(rng);
  return g;
}

}  // namespace gen
