#pragma once

// Frame-bundle calculus over a single chart of R^dim.
//
// Index conventions (all 1-based in the public API):
//   y(mu, i)            frame coordinate y^mu_i
//   frame slot (mu, i)  coefficient of d/dy^mu_i in a vector field, of dy^mu_i in a one-form
//   gamma(mu, nu, al)   connection coefficient Gamma^mu_{nu al}

#include <string>
#include <vector>

#include "cm/symb.hpp"

namespace cm::geometry {

using symb::Coordinate;
using symb::Polynomial;
using symb::Rational;
using symb::RF;

/// Square matrix of rational functions, 0-based storage.
struct Matrix {
  int n = 0;
  std::vector<RF> a;
  Matrix() = default;
  Matrix(int n, int dim);
  RF& operator()(int r, int c) { return a[r * n + c]; }
  const RF& operator()(int r, int c) const { return a[r * n + c]; }
};

RF determinant(const Matrix& m);
Matrix adjugate(const Matrix& m);
Matrix inverse(const Matrix& m);
Matrix operator*(const Matrix& a, const Matrix& b);

/// The matrix y with entries y^mu_i (row mu, column i) and its inverse (y^-1)^i_mu (row i, column mu).
Matrix frame_matrix(int dim);
Matrix frame_inverse(int dim);

struct VectorField {
  int dim = 0;
  std::vector<RF> base;   // coefficient of d/dx^mu
  std::vector<RF> frame;  // coefficient of d/dy^mu_i at (mu-1)*dim + (i-1)

  explicit VectorField(int dim = 1);
  RF& x(int mu) { return base[mu - 1]; }
  const RF& x(int mu) const { return base[mu - 1]; }
  RF& y(int mu, int i) { return frame[(mu - 1) * dim + (i - 1)]; }
  const RF& y(int mu, int i) const { return frame[(mu - 1) * dim + (i - 1)]; }

  /// v(f)
  RF apply(const RF& f) const;
  bool is_zero() const;
  VectorField operator+(const VectorField& o) const;
  VectorField operator-(const VectorField& o) const;
  VectorField scaled(const RF& c) const;
};

bool equal(const VectorField& a, const VectorField& b);

struct OneForm {
  int dim = 0;
  std::vector<RF> base;   // coefficient of dx^mu
  std::vector<RF> frame;  // coefficient of dy^mu_i

  explicit OneForm(int dim = 1);
  RF& x(int mu) { return base[mu - 1]; }
  const RF& x(int mu) const { return base[mu - 1]; }
  RF& y(int mu, int i) { return frame[(mu - 1) * dim + (i - 1)]; }
  const RF& y(int mu, int i) const { return frame[(mu - 1) * dim + (i - 1)]; }

  static OneForm dx(int dim, int mu);
  static OneForm dy(int dim, int mu, int i);

  /// Pairing with dy^mu_i(d^j_nu) = delta^j_i delta^mu_nu, dx^mu(d_nu) = delta^mu_nu, mixed zero.
  RF operator()(const VectorField& v) const;
  /// Component along the k-th basis covector of the fixed enumeration (dx first, then dy).
  const RF& component(int k) const { return k < dim ? base[k] : frame[k - dim]; }
};

bool equal(const OneForm& a, const OneForm& b);

/// Antisymmetric 2-form over the basis {dx^mu} u {dy^mu_i}, in the coordinate enumeration order.
struct TwoForm {
  int dim = 0;
  int size = 0;
  std::vector<RF> upper;  // entries (a,b), a<b, row-major over the strict upper triangle

  explicit TwoForm(int dim = 1);
  RF component(int a, int b) const;
  void add(int a, int b, const RF& value);
  bool is_zero() const;
};

bool equal(const TwoForm& a, const TwoForm& b);
TwoForm wedge(const OneForm& a, const OneForm& b);
TwoForm exterior_derivative(const OneForm& a);

/// Connection coefficients Gamma^mu_{nu al}; functions of x only.
struct Connection {
  int dim = 0;
  std::vector<RF> coeff;

  explicit Connection(int dim = 1);
  static Connection flat(int dim);
  RF& operator()(int mu, int nu, int al) { return coeff[index(mu, nu, al)]; }
  const RF& operator()(int mu, int nu, int al) const { return coeff[index(mu, nu, al)]; }
  int index(int mu, int nu, int al) const { return ((mu - 1) * dim + (nu - 1)) * dim + (al - 1); }
  bool is_symmetric() const;
  bool y_free() const;
};

bool equal(const Connection& a, const Connection& b);

/// A polynomial map psi of the chart together with its Jacobian d_nu psi^mu
/// and the inverse Jacobian.
class PolyDiffeo {
 public:
  PolyDiffeo() = default;
  /// Components must only involve base coordinates. Throws when det(d psi) == 0 identically.
  explicit PolyDiffeo(std::vector<Polynomial> components);
  static PolyDiffeo identity(int dim);

  int dim() const { return dim_; }
  const std::vector<Polynomial>& components() const { return comps_; }
  const Polynomial& component(int mu) const { return comps_[mu - 1]; }
  /// d_nu psi^mu, row mu column nu (1-based accessors).
  const Polynomial& jacobian(int mu, int nu) const { return jac_[(mu - 1) * dim_ + (nu - 1)]; }
  const RF& inverse_jacobian(int mu, int nu) const { return inv_jac_(mu - 1, nu - 1); }
  const Polynomial& jacobian_determinant() const { return det_; }
  bool is_identity() const;

  /// (this o inner)(x) = this(inner(x)).
  PolyDiffeo compose(const PolyDiffeo& inner) const;

  /// Images of every chart coordinate under the lift x -> psi(x), y^mu_i -> d_nu psi^mu y^nu_i.
  const std::vector<RF>& lift() const { return lift_; }
  const std::vector<Polynomial>& lift_polynomials() const { return lift_poly_; }
  RF pullback_function(const RF& f) const { return f.substitute(lift_); }

  std::string str() const;
  bool operator==(const PolyDiffeo& o) const { return comps_ == o.comps_; }
  bool operator<(const PolyDiffeo& o) const;

 private:
  int dim_ = 0;
  std::vector<Polynomial> comps_;
  std::vector<Polynomial> jac_;
  Polynomial det_;
  Matrix inv_jac_;
  std::vector<RF> lift_;
  std::vector<Polynomial> lift_poly_;
};

std::vector<OneForm> soldering_form(int dim);
/// omega[(i-1)*dim + (j-1)] = omega^i_j.
std::vector<OneForm> connection_form(const Connection& gamma);

/// Y^j_i = y^mu_i d/dy^mu_j.
VectorField vertical_field(int dim, int j, int i);
/// Indexed as [(j-1)*dim + (i-1)] for Y^j_i.
std::vector<VectorField> vertical_fields(int dim);
/// A^# = A^i_j Y^j_i for a concrete matrix A (row i, column j).
VectorField fundamental_field(int dim, const std::vector<std::vector<Rational>>& a);

/// X_i = y^mu_i (d_mu - Gamma^nu_{al mu} y^al_j d^j_nu).
VectorField horizontal_field(const Connection& gamma, int i);
std::vector<VectorField> horizontal_fields(const Connection& gamma);

VectorField lie_bracket(const VectorField& v, const VectorField& w);

struct CurvatureTorsion {
  int dim = 0;
  std::vector<RF> r;      // R^k_{l i j} at ((k-1)*dim + l-1)*dim^2 + (i-1)*dim + (j-1)
  std::vector<RF> theta;  // Theta^k_{ij} at ((k-1)*dim + (i-1))*dim + (j-1)
  const RF& R(int k, int l, int i, int j) const {
    return r[(((k - 1) * dim + (l - 1)) * dim + (i - 1)) * dim + (j - 1)];
  }
  const RF& Theta(int k, int i, int j) const { return theta[((k - 1) * dim + (i - 1)) * dim + (j - 1)]; }
};

CurvatureTorsion curvature_torsion(const Connection& gamma);

/// Theta^i = d alpha^i + omega^i_j ^ alpha^j.
std::vector<TwoForm> torsion_form(const Connection& gamma);

Connection pullback_gamma(const Connection& gamma, const PolyDiffeo& psi);
OneForm pullback_oneform(const OneForm& theta, const PolyDiffeo& psi);

/// omega|_{pg}(R_{g*} V) == g^-1 omega|_p(V) g for every basis vector V.
bool check_equivariance(const Connection& gamma, const std::vector<std::vector<Rational>>& g);

struct IdentityResult {
  std::string identity;
  bool passed = false;
  std::string counterexample;
};

struct Prop1Report {
  std::vector<IdentityResult> items;
  bool all_passed() const;
};

Prop1Report check_prop1(const Connection& gamma, const PolyDiffeo& psi);

/// Gamma as a table of polynomials "G^mu_{nu al}=expr" separated by ';', unspecified entries zero.
Connection parse_connection(int dim, const std::string& text);
/// Components separated by ',', or "id".
PolyDiffeo parse_diffeo(int dim, const std::string& text);

}  // namespace cm::geometry
