#include "cm/random.hpp"

namespace cm::random {

using symb::Coordinate;
using symb::Polynomial;
using symb::Rational;

namespace {

int uniform(Rng& rng, int lo, int hi) { return std::uniform_int_distribution<int>(lo, hi)(rng); }

}  // namespace

Rational small_rational(Rng& rng) {
  int v = 0;
  while (v == 0) v = uniform(rng, -3, 3);
  Rational q(v, uniform(rng, 0, 3) == 0 ? 2 : 1);
  q.canonicalize();
  return q;
}

Polynomial random_polynomial(Rng& rng, int dim, int max_degree, int terms, bool x_only) {
  int nvars = x_only ? dim : symb::num_vars(dim);
  Polynomial p(dim);
  for (int t = 0; t < terms; ++t) {
    int deg = uniform(rng, 0, max_degree);
    symb::Exponents e;
    for (int k = 0; k < deg; ++k) {
      int v = uniform(rng, 0, nvars - 1);
      e.e[v]++;
      e.total++;
    }
    p += Polynomial::monomial(dim, e, small_rational(rng));
  }
  return p;
}

symb::RF random_function(Rng& rng, int dim) {
  Polynomial num(dim);
  while (num.is_zero()) num = random_polynomial(rng, dim, 2, uniform(rng, 1, 3), false);
  if (uniform(rng, 0, 1) == 0) return symb::RF(num);
  Polynomial den = Polynomial::constant(dim, 1) +
                   Polynomial::variable(dim, Coordinate::x(uniform(rng, 1, dim))) * small_rational(rng);
  return symb::RF::quotient(num, den);
}

geometry::Connection random_connection(Rng& rng, int dim, int max_degree) {
  geometry::Connection g(dim);
  for (auto& c : g.coeff)
    if (uniform(rng, 0, 1)) c = symb::RF(random_polynomial(rng, dim, max_degree, uniform(rng, 1, 2), true));
  return g;
}

geometry::PolyDiffeo random_diffeo(Rng& rng, int dim) {
  std::vector<Polynomial> comps;
  if (dim == 1) {
    Polynomial x = Polynomial::variable(1, Coordinate::x(1));
    Rational b = small_rational(rng);
    Rational c = uniform(rng, 0, 1) ? small_rational(rng) : Rational(0);
    comps.push_back(x + Polynomial::constant(1, c) + x * x * b);
    return geometry::PolyDiffeo(std::move(comps));
  }
  // psi^mu = x^mu + c + (degree <= 2 polynomial in the earlier or the later coordinates)
  bool lower = uniform(rng, 0, 1) == 0;
  for (int mu = 1; mu <= dim; ++mu) {
    Polynomial p = Polynomial::variable(dim, Coordinate::x(mu));
    if (uniform(rng, 0, 1)) p += Polynomial::constant(dim, small_rational(rng));
    int lo = lower ? 1 : mu + 1;
    int hi = lower ? mu - 1 : dim;
    if (lo <= hi) {
      for (int t = uniform(rng, 1, 2); t > 0; --t) {
        int a = uniform(rng, lo, hi);
        Polynomial m = Polynomial::variable(dim, Coordinate::x(a));
        if (uniform(rng, 0, 1)) m = m * Polynomial::variable(dim, Coordinate::x(uniform(rng, lo, hi)));
        p += m * small_rational(rng);
      }
    }
    comps.push_back(std::move(p));
  }
  return geometry::PolyDiffeo(std::move(comps));
}

std::vector<std::vector<Rational>> random_invertible(Rng& rng, int dim) {
  for (;;) {
    std::vector<std::vector<Rational>> g(dim, std::vector<Rational>(dim));
    geometry::Matrix m(dim, dim);
    for (int r = 0; r < dim; ++r)
      for (int c = 0; c < dim; ++c) {
        g[r][c] = uniform(rng, 0, 2) ? small_rational(rng) : Rational(0);
        m(r, c) = symb::RF::constant(dim, g[r][c]);
      }
    if (!geometry::determinant(m).is_zero()) return g;
  }
}

}  // namespace cm::random
