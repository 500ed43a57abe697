#include "gorstab/hurwitz.hpp"

#include "gorstab/univariate.hpp"

#include <map>
#include <stdexcept>

namespace gorstab {

namespace {

// Local coordinates: u = x (index 0), v = y (index 1) of ring_local().
constexpr std::size_t U = 0, V = 1;

WPoly dehomogenize(const WPoly& c, int chart) {
  RingPtr loc = ring_local();
  WPoly u = WPoly::variable(loc, U), v = WPoly::variable(loc, V), one(loc, 1);
  if (chart == 0) return substitute(c, std::vector<WPoly>{one, u, v});
  return substitute(c, std::vector<WPoly>{u, one, v});
}

PointWPS chart_point(int chart, const Rational& u, const Rational& v, int w) {
  if (chart == 0) return PointWPS(1, u, v, w);
  return PointWPS(u, 1, v, w);
}

UPoly in_u(const WPoly& p) { return to_upoly(p, U); }

UPoly fiber(const WPoly& p, const Rational& u0) {
  RingPtr loc = p.ring();
  return to_upoly(substitute(p, std::vector<WPoly>{WPoly(loc, u0), WPoly::variable(loc, V)}), V);
}

UPoly gcd_nonzero(const std::vector<UPoly>& ps) {
  UPoly g;
  for (const auto& p : ps) {
    if (p.is_zero()) continue;
    g = g.is_zero() ? monic(p) : gcd(g, p);
  }
  return g;
}

bool coprime(const UPoly& a, const UPoly& b) {
  if (b.is_zero()) return false;
  return gcd(a, b).degree() == 0;
}

UPoly lead_in_v(const WPoly& c) { return in_u(c.coefficient_in(V, c.degree_in(V))); }

int distinct_roots(const UPoly& p) {
  if (p.degree() <= 0) return 0;
  return divmod(p, gcd(p, derivative(p))).first.degree();
}

class Locator {
 public:
  Locator(const std::vector<WPoly>& comps, int w) : w_(w) {
    for (const auto& c : comps) original_.push_back(c);
  }

  LocateResult run() {
    chart(0, false);
    chart(1, true);
    if (w_ == 1) vertex_point();
    return std::move(out_);
  }

 private:
  void add(const PointWPS& p) {
    for (const auto& q : out_.points)
      if (q == p) return;
    out_.points.push_back(p);
  }

  void warn(const std::string& msg) {
    for (const auto& m : out_.warnings)
      if (m == msg) return;
    out_.warnings.push_back(msg);
  }

  // Resultant in v of components i and j of the current chart, as a polynomial in u.
  const UPoly& pair_resultant(std::size_t i, std::size_t j) {
    auto key = std::make_pair(std::min(i, j), std::max(i, j));
    auto it = pair_res_.find(key);
    if (it != pair_res_.end()) return it->second;
    const WPoly &a = c_[key.first], &b = c_[key.second];
    UPoly r;
    bool ca = a.degree_in(V) > 0, cb = b.degree_in(V) > 0;
    if (ca && cb) r = in_u(resultant(a, b, V));
    else if (!ca && cb) r = in_u(a);
    else if (ca && !cb) r = in_u(b);
    else r = UPoly({Rational(1)});  // two unions of rulings meet only at the vertex
    if (r.is_zero()) throw std::invalid_argument("branch components share a common factor");
    return pair_res_.emplace(key, std::move(r)).first->second;
  }

  bool on_no_other(const UPoly& rest, std::size_t i, std::size_t j) {
    for (std::size_t k = 0; k < c_.size(); ++k) {
      if (k == i || k == j) continue;
      if (!coprime(rest, pair_resultant(i, k))) return false;
    }
    return true;
  }

  bool fiber_on_no_other(const UPoly& rest, const Rational& u0, std::size_t i, std::size_t j) {
    for (std::size_t k = 0; k < c_.size(); ++k) {
      if (k == i || k == j) continue;
      UPoly f = fiber(c_[k], u0);
      if (f.is_zero() || !coprime(rest, f)) return false;
    }
    return true;
  }

  void chart(int which, bool only_zero_fiber) {
    c_.clear();
    pair_res_.clear();
    for (const auto& c : original_) c_.push_back(dehomogenize(c, which));
    auto wanted = [&](const Rational& u0) { return !only_zero_fiber || is_zero(u0); };
    const std::string where = which == 0 ? "" : " on the line x0 = 0";

    for (std::size_t i = 0; i < c_.size(); ++i) {
      const WPoly& c = c_[i];
      if (c.is_zero()) continue;
      if (c.degree_in(V) == 0) {
        UPoly cu = in_u(c);
        if (cu.degree() > 0 && !is_squarefree(c)) warn("component " + std::to_string(i) + " is not reduced");
        continue;
      }
      WPoly cu = partial_derivative(c, U), cv = partial_derivative(c, V);
      std::vector<UPoly> res{in_u(resultant(c, cv, V))};
      if (!cu.is_zero()) {
        res.push_back(in_u(resultant(c, cu, V)));
        if (cu.degree_in(V) > 0 || cv.degree_in(V) > 0) res.push_back(in_u(resultant(cu, cv, V)));
      }
      UPoly g = gcd_nonzero(res);
      if (g.is_zero()) {
        warn("singular points of component " + std::to_string(i) + where + " could not be isolated");
        continue;
      }
      if (g.degree() <= 0) continue;
      RootSplit split = split_rational_roots(g);
      for (const auto& r : split.rational) {
        if (!wanted(r.value)) continue;
        UPoly fib = gcd_nonzero({fiber(c, r.value), fiber(cu, r.value), fiber(cv, r.value)});
        if (fib.is_zero()) {
          warn("component " + std::to_string(i) + " is singular along a ruling");
          continue;
        }
        RootSplit fs = split_rational_roots(fib);
        for (const auto& v : fs.rational) add(chart_point(which, r.value, v.value, w_));
        if (fs.rest.degree() > 0)
          warn("unlocated singularities: component " + std::to_string(i) + " has singular points" + where +
               " with irrational coordinates");
      }
      if (!only_zero_fiber && split.rest.degree() > 0)
        warn("unlocated singularities: component " + std::to_string(i) +
             " may have singular points with irrational coordinates");
    }

    for (std::size_t i = 0; i < c_.size(); ++i) {
      for (std::size_t j = i + 1; j < c_.size(); ++j) {
        const WPoly &a = c_[i], &b = c_[j];
        bool ca = a.degree_in(V) > 0, cb = b.degree_in(V) > 0;
        if (!ca && !cb) continue;
        const UPoly& r = pair_resultant(i, j);
        if (r.degree() <= 0) continue;
        RootSplit split = split_rational_roots(r);
        for (const auto& root : split.rational) {
          if (!wanted(root.value)) continue;
          UPoly fib = gcd_nonzero({fiber(a, root.value), fiber(b, root.value)});
          if (fib.degree() <= 0) continue;
          RootSplit fs = split_rational_roots(fib);
          for (const auto& v : fs.rational) add(chart_point(which, root.value, v.value, w_));
          if (fs.rest.degree() <= 0) continue;
          bool ok = fiber_on_no_other(fs.rest, root.value, i, j);
          if (ca && cb) {
            ok = ok && !is_zero(lead_in_v(a)(root.value)) && !is_zero(lead_in_v(b)(root.value)) &&
                 root.multiplicity == distinct_roots(fib);
          } else {
            ok = ok && fs.rest_squarefree && coprime(fs.rest, divmod(fib, fs.rest).first);
          }
          if (ok) out_.certified_nodes += fs.rest.degree();
          else warn("unlocated singularities: components " + std::to_string(i) + " and " + std::to_string(j) +
                    " meet" + where + " non-transversally at irrational points");
        }
        if (only_zero_fiber || split.rest.degree() <= 0) continue;
        const UPoly& rest = split.rest;
        bool ok = split.rest_squarefree && on_no_other(rest, i, j);
        int count = 0;
        if (ca && cb) {
          ok = ok && coprime(rest, lead_in_v(a) * lead_in_v(b));
          count = rest.degree();
        } else {
          const WPoly& curved = ca ? a : b;
          ok = ok && coprime(rest, lead_in_v(curved)) &&
               coprime(rest, in_u(resultant(curved, partial_derivative(curved, V), V)));
          count = rest.degree() * curved.degree_in(V);
        }
        if (ok) out_.certified_nodes += count;
        else warn("unlocated singularities: components " + std::to_string(i) + " and " + std::to_string(j) +
                  " meet non-transversally at irrational points");
      }
    }
  }

  void vertex_point() {
    PointWPS o(0, 0, 1, w_);
    int through = 0;
    bool singular = false;
    for (const auto& c : original_) {
      WPoly g = localize(c, o);
      if (!is_zero(g.constant_term())) continue;
      ++through;
      if (g.order() > 1) singular = true;
    }
    if (through > 1 || singular) add(o);
  }

  int w_;
  std::vector<WPoly> original_;
  std::vector<WPoly> c_;
  std::map<std::pair<std::size_t, std::size_t>, UPoly> pair_res_;
  LocateResult out_;
};

}  // namespace

LocateResult locate_singular_points(const std::vector<WPoly>& components) {
  if (components.empty()) return {};
  const auto& weights = components.front().ring()->weights();
  if (weights.size() != 3 || weights[0] != 1 || weights[1] != 1)
    throw RingMismatch("expected a ring with weights (1,1,w)");
  for (const auto& c : components) {
    if (c.ring()->weights() != weights) throw RingMismatch("components live in different rings");
    if (!is_homogeneous(c) || c.is_zero()) throw std::invalid_argument("components must be nonzero forms");
  }
  return Locator(components, weights[2]).run();
}

}  // namespace gorstab
