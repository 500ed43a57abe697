// Multivariate gcd over Q by content / primitive-part recursion on the
// highest-indexed variable, with a primitive pseudo-remainder sequence.

#include "gorstab/wpoly.hpp"

#include <utility>

namespace gorstab {

namespace {

int main_variable(const WPoly& a, const WPoly& b) {
  for (std::size_t v = a.ring()->size(); v-- > 0;)
    if (a.depends_on(v) || b.depends_on(v)) return static_cast<int>(v);
  return -1;
}

WPoly var_power(const RingPtr& ring, std::size_t var, int k) {
  Exponent e(ring->size(), 0);
  e[var] = k;
  return WPoly::monomial(ring, std::move(e));
}

WPoly pseudo_remainder(const WPoly& a, const WPoly& b, std::size_t var) {
  const int db = b.degree_in(var);
  const WPoly lb = b.coefficient_in(var, db);
  WPoly r = a;
  while (!r.is_zero() && r.degree_in(var) >= db) {
    const int dr = r.degree_in(var);
    WPoly lr = r.coefficient_in(var, dr);
    r = lb * r - lr * var_power(a.ring(), var, dr - db) * b;
  }
  return r;
}

// Scales p to coprime integer coefficients; keeps the PRS from swelling.
WPoly integer_primitive(const WPoly& p) {
  if (p.is_zero()) return p;
  Integer num = 0, den = 1;
  for (const auto& [e, c] : p.terms()) {
    mpz_gcd(num.get_mpz_t(), num.get_mpz_t(), c.get_num_mpz_t());
    mpz_lcm(den.get_mpz_t(), den.get_mpz_t(), c.get_den_mpz_t());
  }
  return p * make_rational(den, num);
}

WPoly primitive_part(const WPoly& p, std::size_t var) {
  return integer_primitive(divide_exact(p, content_in(p, var)));
}

WPoly gcd_impl(const WPoly& a, const WPoly& b) {
  if (a.is_zero()) return b.monic();
  if (b.is_zero()) return a.monic();
  if (a.is_constant() || b.is_constant()) return WPoly(a.ring(), 1);

  const int v = main_variable(a, b);
  const auto var = static_cast<std::size_t>(v);
  if (!a.depends_on(var)) return gcd_impl(a, content_in(b, var));
  if (!b.depends_on(var)) return gcd_impl(content_in(a, var), b);

  const WPoly ca = content_in(a, var);
  const WPoly cb = content_in(b, var);
  const WPoly c = gcd_impl(ca, cb);
  WPoly pa = integer_primitive(divide_exact(a, ca));
  WPoly pb = integer_primitive(divide_exact(b, cb));
  if (pa.degree_in(var) < pb.degree_in(var)) std::swap(pa, pb);

  while (true) {
    WPoly r = pseudo_remainder(pa, pb, var);
    if (r.is_zero()) break;
    if (r.degree_in(var) == 0) return c.monic();
    pa = std::move(pb);
    pb = primitive_part(r, var);
  }
  return (c * primitive_part(pb, var)).monic();
}

}  // namespace

WPoly content_in(const WPoly& p, std::size_t var) {
  if (p.is_zero()) return p;
  WPoly g(p.ring());
  for (int k = p.degree_in(var); k >= 0; --k) {
    WPoly coeff = p.coefficient_in(var, k);
    if (coeff.is_zero()) continue;
    g = gcd_impl(g, coeff);
    if (g.is_constant()) return WPoly(p.ring(), 1);
  }
  return g;
}

WPoly gcd(const WPoly& a, const WPoly& b) {
  if (!(*a.ring() == *b.ring())) throw RingMismatch("gcd across rings");
  return gcd_impl(a, b);
}

WPoly squarefree_part(const WPoly& p) {
  if (p.is_zero()) throw DegreeUndefined("squarefree part of the zero polynomial");
  WPoly g = p;
  for (std::size_t v = 0; v < p.ring()->size() && !g.is_constant(); ++v) {
    WPoly d = partial_derivative(p, v);
    if (!d.is_zero()) g = gcd(g, d);
  }
  if (g.is_constant()) return p;
  return divide_exact(p, g);
}

bool is_squarefree(const WPoly& p) {
  return squarefree_part(p).total_degree() == p.total_degree();
}

WPoly resultant(const WPoly& a, const WPoly& b, std::size_t var) {
  if (!(*a.ring() == *b.ring())) throw RingMismatch("resultant across rings");
  if (a.is_zero() || b.is_zero()) return WPoly(a.ring());
  const int m = a.degree_in(var);
  const int n = b.degree_in(var);
  if (m == 0) return pow(a, static_cast<unsigned>(n));
  if (n == 0) return pow(b, static_cast<unsigned>(m));

  const int size = m + n;
  std::vector<std::vector<WPoly>> mat(size, std::vector<WPoly>(size, WPoly(a.ring())));
  for (int i = 0; i < n; ++i)
    for (int k = 0; k <= m; ++k) mat[i][i + (m - k)] = a.coefficient_in(var, k);
  for (int i = 0; i < m; ++i)
    for (int k = 0; k <= n; ++k) mat[n + i][i + (n - k)] = b.coefficient_in(var, k);

  // Fraction-free (Bareiss) elimination; every division below is exact.
  bool negate = false;
  WPoly prev(a.ring(), 1);
  for (int k = 0; k < size - 1; ++k) {
    if (mat[k][k].is_zero()) {
      int pivot = -1;
      for (int i = k + 1; i < size; ++i)
        if (!mat[i][k].is_zero()) {
          pivot = i;
          break;
        }
      if (pivot < 0) return WPoly(a.ring());
      std::swap(mat[k], mat[pivot]);
      negate = !negate;
    }
    for (int i = k + 1; i < size; ++i) {
      for (int j = k + 1; j < size; ++j)
        mat[i][j] = divide_exact(mat[k][k] * mat[i][j] - mat[i][k] * mat[k][j], prev);
      mat[i][k] = WPoly(a.ring());
    }
    prev = mat[k][k];
  }
  WPoly det = mat[size - 1][size - 1];
  return negate ? -det : det;
}

}  // namespace gorstab
