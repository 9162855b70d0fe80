#pragma once

// The crossed product of functions on the frame bundle by polynomial
// diffeomorphisms: sums of f U*_psi, and the flat-case actions of X, Y and delta.

#include <map>
#include <string>

#include "cm/geometry.hpp"
#include "cm/hopf.hpp"

namespace cm::crossed {

using geometry::PolyDiffeo;
using symb::RF;

class CrossedElement {
 public:
  using Terms = std::map<PolyDiffeo, RF>;

  explicit CrossedElement(int dim = 1) : dim_(dim) {}
  static CrossedElement monomial(const RF& f, const PolyDiffeo& psi);

  int dim() const { return dim_; }
  const Terms& terms() const { return terms_; }
  bool is_zero() const { return terms_.empty(); }
  /// Zero f is dropped; at most one term per psi.
  void add_term(const PolyDiffeo& psi, const RF& f);

  CrossedElement& operator+=(const CrossedElement& o);
  CrossedElement& operator-=(const CrossedElement& o);
  friend CrossedElement operator+(CrossedElement a, const CrossedElement& b) { return a += b; }
  friend CrossedElement operator-(CrossedElement a, const CrossedElement& b) { return a -= b; }
  /// Multiplies every coefficient function by g.
  CrossedElement times_function(const RF& g) const;
  CrossedElement scaled(const symb::Rational& c) const;

  bool operator==(const CrossedElement& o) const { return (*this - o).is_zero(); }
  std::string str() const;

 private:
  int dim_;
  Terms terms_;
};

/// (f1 U*_psi1)(f2 U*_psi2) = f1 (f2 o psi1~) U*_{psi2 o psi1}.
CrossedElement multiply(const CrossedElement& a, const CrossedElement& b);

CrossedElement act_Y(int j, int k, const CrossedElement& a);
/// Flat chart: X_i = y^mu_i d_mu on the coefficient functions.
CrossedElement act_X(int i, const CrossedElement& a);
/// gamma^k_{ji}(psi) = (d psi)^-1^nu_be d_mu d_al psi^be y^mu_j y^al_i (y^-1)^k_nu.
RF gamma_cocycle(const PolyDiffeo& psi, int k, int j, int i);
/// Empty tail multiplies by gamma; each tail index l applies [X_l, .], in the order given.
CrossedElement act_delta(int k, int j, int i, const hopf::IndexString& tail, const CrossedElement& a);
CrossedElement act(hopf::Generator g, const CrossedElement& a);
/// A PBW monomial g1 g2 ... gn acts as g1(g2(...gn(a))).
CrossedElement act(const hopf::HopfPoly& h, const CrossedElement& a);

bool check_leibniz_X(int i, const CrossedElement& a, const CrossedElement& b);
bool check_leibniz_Y(int j, int k, const CrossedElement& a, const CrossedElement& b);
/// delta^k_{ji} (empty tail) is a plain derivation.
bool check_leibniz_delta(int k, int j, int i, const CrossedElement& a, const CrossedElement& b);
/// gamma(psi2 o psi1) = gamma(psi1) + gamma(psi2) o psi1~ for every (k, j, i).
bool check_cocycle(const PolyDiffeo& psi1, const PolyDiffeo& psi2);
/// h(ab) = m(Delta(h)(a (x) b)) with the coproduct of module hopf.
bool check_gendelta(const hopf::HopfPoly& h, const CrossedElement& a, const CrossedElement& b);

/// Sums of `f * U[psi]`; psi is `id` or comma-separated component polynomials.
/// Each f runs from the previous U[...] (after an optional '+') up to its '*'.
CrossedElement parse_element(int dim, const std::string& text);

}  // namespace cm::crossed
