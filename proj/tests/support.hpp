#pragma once

// Independent oracles and random generators shared by the unit tests and
// the acceptance runner.

#include "gorstab/covers.hpp"
#include "gorstab/matrix.hpp"
#include "gorstab/wpoly.hpp"

#include <cstdint>
#include <random>
#include <string>
#include <vector>

namespace oracle {

using gorstab::Rational;
using gorstab::WPoly;

/// dim of degree-d forms for the given weights, read off the series
/// prod 1/(1 - t^w) by polynomial multiplication.
long series_count(const std::vector<int>& weights, int d);

/// lct of a Newton non-degenerate germ: 1/t where (t, t) meets the
/// boundary of the Newton polygon, capped at 1.
Rational newton_lct(const WPoly& germ);

struct NamedGerm {
  std::string name;
  std::string text;  // in x, y
  Rational lct;      // hand-derived
};

/// node, cusp, tacnode, ordinary triple, ordinary quadruple, [3,3].
const std::vector<NamedGerm>& germ_corpus();

}  // namespace oracle

namespace gen {

using Rng = std::mt19937_64;

gorstab::Rational rational(Rng& rng, int bound = 9);
/// Random polynomial with up to `terms` terms of plain degree at most `max_deg`.
gorstab::WPoly polynomial(Rng& rng, const gorstab::RingPtr& ring, int terms, int max_deg);
/// Random form of weighted degree d.
gorstab::WPoly form(Rng& rng, const gorstab::RingPtr& ring, int d, int bound = 5);

/// Random invertible local coordinate change of the plane fixing the origin,
/// applied to a germ in ring_local().
gorstab::WPoly local_automorphism(Rng& rng, const gorstab::WPoly& germ);

/// x0 -> a x0 + b x1, x1 -> c x0 + d x1, y -> e y + q0 x0^2 + q1 x0 x1 + q2 x1^2.
struct ConeAutomorphism {
  gorstab::Rational a, b, c, d, e, q0, q1, q2;
  gorstab::WPoly apply(const gorstab::WPoly& f) const;
};
ConeAutomorphism cone_automorphism(Rng& rng);

}  // namespace gen
