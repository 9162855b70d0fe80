#include "cm/geometry.hpp"

#include <array>
#include <mutex>
#include <sstream>

namespace cm::geometry {

namespace {

RF zero(int dim) { return RF(dim); }

RF yv(int dim, int mu, int i) { return RF::variable(dim, Coordinate::y(mu, i)); }

bool all_equal(const std::vector<RF>& a, const std::vector<RF>& b) {
  if (a.size() != b.size()) return false;
  for (std::size_t k = 0; k < a.size(); ++k)
    if (!symb::equal_rf(a[k], b[k])) return false;
  return true;
}

}  // namespace

Matrix::Matrix(int n, int dim) : n(n), a(static_cast<std::size_t>(n * n), RF(dim)) {}

RF determinant(const Matrix& m) {
  switch (m.n) {
    case 1:
      return m(0, 0);
    case 2:
      return m(0, 0) * m(1, 1) - m(0, 1) * m(1, 0);
    default: {
      // Laplace expansion along the first row
      RF d = zero(m.a[0].dim());
      for (int c = 0; c < m.n; ++c) {
        Matrix minor(m.n - 1, m.a[0].dim());
        for (int r = 1; r < m.n; ++r)
          for (int k = 0, cc = 0; k < m.n; ++k)
            if (k != c) minor(r - 1, cc++) = m(r, k);
        RF t = m(0, c) * determinant(minor);
        if (c % 2) d -= t;
        else d += t;
      }
      return d;
    }
  }
}

Matrix adjugate(const Matrix& m) {
  int dim = m.a[0].dim();
  Matrix adj(m.n, dim);
  if (m.n == 1) {
    adj(0, 0) = RF::constant(dim, 1);
    return adj;
  }
  for (int r = 0; r < m.n; ++r) {
    for (int c = 0; c < m.n; ++c) {
      Matrix minor(m.n - 1, dim);
      for (int rr = 0, mr = 0; rr < m.n; ++rr) {
        if (rr == r) continue;
        for (int cc = 0, mc = 0; cc < m.n; ++cc)
          if (cc != c) minor(mr, mc++) = m(rr, cc);
        ++mr;
      }
      RF cof = determinant(minor);
      adj(c, r) = (r + c) % 2 ? -cof : cof;
    }
  }
  return adj;
}

Matrix inverse(const Matrix& m) {
  RF det = determinant(m);
  if (det.is_zero()) throw symb::IdenticallyZeroDenominator("matrix is singular");
  RF inv = det.inverse();
  Matrix r = adjugate(m);
  for (auto& e : r.a) e *= inv;
  return r;
}

Matrix operator*(const Matrix& a, const Matrix& b) {
  Matrix r(a.n, a.a[0].dim());
  for (int i = 0; i < a.n; ++i)
    for (int j = 0; j < a.n; ++j)
      for (int k = 0; k < a.n; ++k) r(i, j) += a(i, k) * b(k, j);
  return r;
}

Matrix frame_matrix(int dim) {
  Matrix m(dim, dim);
  for (int mu = 1; mu <= dim; ++mu)
    for (int i = 1; i <= dim; ++i) m(mu - 1, i - 1) = yv(dim, mu, i);
  return m;
}

Matrix frame_inverse(int dim) {
  symb::check_dim(dim);
  static std::array<Matrix, symb::kMaxDim + 1> cache;
  static std::array<std::once_flag, symb::kMaxDim + 1> once;
  std::call_once(once[dim], [dim] { cache[dim] = inverse(frame_matrix(dim)); });
  return cache[dim];
}

// ---- vector fields and forms

VectorField::VectorField(int dim)
    : dim(dim), base(static_cast<std::size_t>(dim), RF(dim)), frame(static_cast<std::size_t>(dim * dim), RF(dim)) {}

RF VectorField::apply(const RF& f) const {
  RF r = zero(dim);
  for (int mu = 0; mu < dim; ++mu)
    if (!base[mu].is_zero()) r += base[mu] * f.derivative(mu);
  for (int k = 0; k < dim * dim; ++k)
    if (!frame[k].is_zero()) r += frame[k] * f.derivative(dim + k);
  return r;
}

bool VectorField::is_zero() const {
  for (const auto& c : base)
    if (!c.is_zero()) return false;
  for (const auto& c : frame)
    if (!c.is_zero()) return false;
  return true;
}

VectorField VectorField::operator+(const VectorField& o) const {
  VectorField r = *this;
  for (int k = 0; k < dim; ++k) r.base[k] += o.base[k];
  for (int k = 0; k < dim * dim; ++k) r.frame[k] += o.frame[k];
  return r;
}

VectorField VectorField::operator-(const VectorField& o) const { return *this + o.scaled(RF::constant(dim, -1)); }

VectorField VectorField::scaled(const RF& c) const {
  VectorField r = *this;
  for (auto& e : r.base) e *= c;
  for (auto& e : r.frame) e *= c;
  return r;
}

bool equal(const VectorField& a, const VectorField& b) {
  return a.dim == b.dim && all_equal(a.base, b.base) && all_equal(a.frame, b.frame);
}

OneForm::OneForm(int dim)
    : dim(dim), base(static_cast<std::size_t>(dim), RF(dim)), frame(static_cast<std::size_t>(dim * dim), RF(dim)) {}

OneForm OneForm::dx(int dim, int mu) {
  OneForm f(dim);
  f.x(mu) = RF::constant(dim, 1);
  return f;
}

OneForm OneForm::dy(int dim, int mu, int i) {
  OneForm f(dim);
  f.y(mu, i) = RF::constant(dim, 1);
  return f;
}

RF OneForm::operator()(const VectorField& v) const {
  RF r = zero(dim);
  for (int k = 0; k < dim; ++k)
    if (!base[k].is_zero() && !v.base[k].is_zero()) r += base[k] * v.base[k];
  for (int k = 0; k < dim * dim; ++k)
    if (!frame[k].is_zero() && !v.frame[k].is_zero()) r += frame[k] * v.frame[k];
  return r;
}

bool equal(const OneForm& a, const OneForm& b) {
  return a.dim == b.dim && all_equal(a.base, b.base) && all_equal(a.frame, b.frame);
}

TwoForm::TwoForm(int dim)
    : dim(dim), size(symb::num_vars(dim)), upper(static_cast<std::size_t>(size * (size - 1) / 2), RF(dim)) {}

namespace {
int upper_index(int size, int a, int b) { return a * size - a * (a + 1) / 2 + (b - a - 1); }
}  // namespace

RF TwoForm::component(int a, int b) const {
  if (a == b) return zero(dim);
  if (a > b) return -upper[upper_index(size, b, a)];
  return upper[upper_index(size, a, b)];
}

void TwoForm::add(int a, int b, const RF& value) {
  if (a == b || value.is_zero()) return;
  if (a > b) {
    upper[upper_index(size, b, a)] -= value;
  } else {
    upper[upper_index(size, a, b)] += value;
  }
}

bool TwoForm::is_zero() const {
  for (const auto& c : upper)
    if (!c.is_zero()) return false;
  return true;
}

bool equal(const TwoForm& a, const TwoForm& b) { return a.dim == b.dim && all_equal(a.upper, b.upper); }

TwoForm wedge(const OneForm& a, const OneForm& b) {
  TwoForm r(a.dim);
  for (int p = 0; p < r.size; ++p) {
    if (a.component(p).is_zero()) continue;
    for (int q = 0; q < r.size; ++q)
      if (p != q && !b.component(q).is_zero()) r.add(p, q, a.component(p) * b.component(q));
  }
  return r;
}

TwoForm exterior_derivative(const OneForm& a) {
  TwoForm r(a.dim);
  for (int q = 0; q < r.size; ++q) {
    const RF& c = a.component(q);
    if (c.is_zero()) continue;
    for (int p = 0; p < r.size; ++p)
      if (p != q) r.add(p, q, c.derivative(p));
  }
  return r;
}

// ---- connections

Connection::Connection(int dim) : dim(dim), coeff(static_cast<std::size_t>(dim * dim * dim), RF(dim)) {}

Connection Connection::flat(int dim) { return Connection(dim); }

bool Connection::is_symmetric() const {
  for (int mu = 1; mu <= dim; ++mu)
    for (int nu = 1; nu <= dim; ++nu)
      for (int al = nu + 1; al <= dim; ++al)
        if (!symb::equal_rf((*this)(mu, nu, al), (*this)(mu, al, nu))) return false;
  return true;
}

bool Connection::y_free() const {
  for (const auto& c : coeff)
    for (int v = dim; v < symb::num_vars(dim); ++v) {
      if (c.numerator().depends_on(v)) return false;
      for (const auto& f : c.factors())
        if (f.base.depends_on(v)) return false;
    }
  return true;
}

bool equal(const Connection& a, const Connection& b) { return a.dim == b.dim && all_equal(a.coeff, b.coeff); }

// ---- diffeomorphisms

PolyDiffeo::PolyDiffeo(std::vector<Polynomial> components) : comps_(std::move(components)) {
  dim_ = static_cast<int>(comps_.size());
  symb::check_dim(dim_);
  for (const auto& c : comps_) {
    if (c.dim() != dim_) throw symb::ScopeMismatch("diffeomorphism component has the wrong dim");
    for (int v = dim_; v < symb::num_vars(dim_); ++v)
      if (c.depends_on(v)) throw std::invalid_argument("diffeomorphism components must depend on x only");
  }
  Matrix j(dim_, dim_);
  jac_.reserve(static_cast<std::size_t>(dim_ * dim_));
  for (int mu = 0; mu < dim_; ++mu)
    for (int nu = 0; nu < dim_; ++nu) {
      jac_.push_back(comps_[mu].derivative(nu));
      j(mu, nu) = jac_.back();
    }
  RF det = determinant(j);
  if (det.is_zero()) throw symb::IdenticallyZeroDenominator("Jacobian determinant vanishes identically");
  det_ = det.numerator();
  inv_jac_ = inverse(j);

  int n = symb::num_vars(dim_);
  lift_poly_.reserve(n);
  for (int mu = 0; mu < dim_; ++mu) lift_poly_.push_back(comps_[mu]);
  for (int mu = 1; mu <= dim_; ++mu)
    for (int i = 1; i <= dim_; ++i) {
      Polynomial img(dim_);
      for (int nu = 1; nu <= dim_; ++nu)
        img += jacobian(mu, nu) * Polynomial::variable(dim_, Coordinate::y(nu, i));
      lift_poly_.push_back(std::move(img));
    }
  lift_.assign(lift_poly_.begin(), lift_poly_.end());
}

PolyDiffeo PolyDiffeo::identity(int dim) {
  std::vector<Polynomial> c;
  for (int mu = 1; mu <= dim; ++mu) c.push_back(Polynomial::variable(dim, Coordinate::x(mu)));
  return PolyDiffeo(std::move(c));
}

bool PolyDiffeo::is_identity() const {
  for (int mu = 1; mu <= dim_; ++mu)
    if (!(comps_[mu - 1] == Polynomial::variable(dim_, Coordinate::x(mu)))) return false;
  return true;
}

PolyDiffeo PolyDiffeo::compose(const PolyDiffeo& inner) const {
  std::vector<Polynomial> images = inner.comps_;
  for (int v = dim_; v < symb::num_vars(dim_); ++v) images.push_back(Polynomial::variable_index(dim_, v));
  std::vector<Polynomial> c;
  c.reserve(comps_.size());
  for (const auto& p : comps_) c.push_back(p.substitute(images));
  return PolyDiffeo(std::move(c));
}

std::string PolyDiffeo::str() const {
  if (is_identity()) return "id";
  std::ostringstream os;
  for (int mu = 0; mu < dim_; ++mu) os << (mu ? ", " : "") << comps_[mu].str();
  return os.str();
}

bool PolyDiffeo::operator<(const PolyDiffeo& o) const {
  if (dim_ != o.dim_) return dim_ < o.dim_;
  for (int mu = 0; mu < dim_; ++mu) {
    auto c = comps_[mu].compare(o.comps_[mu]);
    if (c != 0) return c < 0;
  }
  return false;
}

// ---- forms and fields of the frame bundle

std::vector<OneForm> soldering_form(int dim) {
  Matrix yi = frame_inverse(dim);
  std::vector<OneForm> alpha;
  for (int j = 1; j <= dim; ++j) {
    OneForm a(dim);
    for (int mu = 1; mu <= dim; ++mu) a.x(mu) = yi(j - 1, mu - 1);
    alpha.push_back(std::move(a));
  }
  return alpha;
}

std::vector<OneForm> connection_form(const Connection& gamma) {
  int dim = gamma.dim;
  Matrix yi = frame_inverse(dim);
  std::vector<OneForm> omega;
  for (int i = 1; i <= dim; ++i)
    for (int j = 1; j <= dim; ++j) {
      OneForm w(dim);
      for (int mu = 1; mu <= dim; ++mu) {
        w.y(mu, j) = yi(i - 1, mu - 1);
        for (int nu = 1; nu <= dim; ++nu) {
          RF c = yi(i - 1, mu - 1) * yv(dim, nu, j);
          for (int al = 1; al <= dim; ++al)
            if (!gamma(mu, nu, al).is_zero()) w.x(al) += c * gamma(mu, nu, al);
        }
      }
      omega.push_back(std::move(w));
    }
  return omega;
}

VectorField vertical_field(int dim, int j, int i) {
  VectorField v(dim);
  for (int mu = 1; mu <= dim; ++mu) v.y(mu, j) = yv(dim, mu, i);
  return v;
}

std::vector<VectorField> vertical_fields(int dim) {
  std::vector<VectorField> r;
  for (int j = 1; j <= dim; ++j)
    for (int i = 1; i <= dim; ++i) r.push_back(vertical_field(dim, j, i));
  return r;
}

VectorField fundamental_field(int dim, const std::vector<std::vector<Rational>>& a) {
  VectorField v(dim);
  for (int i = 1; i <= dim; ++i)
    for (int j = 1; j <= dim; ++j)
      if (a[i - 1][j - 1] != 0) v = v + vertical_field(dim, j, i).scaled(RF::constant(dim, a[i - 1][j - 1]));
  return v;
}

VectorField horizontal_field(const Connection& gamma, int i) {
  int dim = gamma.dim;
  VectorField v(dim);
  for (int mu = 1; mu <= dim; ++mu) v.x(mu) = yv(dim, mu, i);
  for (int nu = 1; nu <= dim; ++nu)
    for (int j = 1; j <= dim; ++j) {
      RF c = zero(dim);
      for (int mu = 1; mu <= dim; ++mu)
        for (int al = 1; al <= dim; ++al)
          if (!gamma(nu, al, mu).is_zero()) c -= yv(dim, mu, i) * gamma(nu, al, mu) * yv(dim, al, j);
      v.y(nu, j) = c;
    }
  return v;
}

std::vector<VectorField> horizontal_fields(const Connection& gamma) {
  std::vector<VectorField> r;
  for (int i = 1; i <= gamma.dim; ++i) r.push_back(horizontal_field(gamma, i));
  return r;
}

VectorField lie_bracket(const VectorField& v, const VectorField& w) {
  VectorField r(v.dim);
  for (int k = 0; k < v.dim; ++k) r.base[k] = v.apply(w.base[k]) - w.apply(v.base[k]);
  for (int k = 0; k < v.dim * v.dim; ++k) r.frame[k] = v.apply(w.frame[k]) - w.apply(v.frame[k]);
  return r;
}

CurvatureTorsion curvature_torsion(const Connection& gamma) {
  int dim = gamma.dim;
  Matrix yi = frame_inverse(dim);
  auto y = [dim](int mu, int i) { return yv(dim, mu, i); };
  // K^s_{r m n} = d_n G^s_{r m} - d_m G^s_{r n} + G^b_{r m} G^s_{b n} - G^b_{r n} G^s_{b m}
  auto kidx = [dim](int s, int r, int m, int n) { return (((s - 1) * dim + (r - 1)) * dim + (m - 1)) * dim + (n - 1); };
  std::vector<RF> K(static_cast<std::size_t>(dim * dim * dim * dim), RF(dim));
  for (int s = 1; s <= dim; ++s)
    for (int r = 1; r <= dim; ++r)
      for (int m = 1; m <= dim; ++m)
        for (int n = 1; n <= dim; ++n) {
          RF t = gamma(s, r, m).derivative(n - 1) - gamma(s, r, n).derivative(m - 1);
          for (int b = 1; b <= dim; ++b) t += gamma(b, r, m) * gamma(s, b, n) - gamma(b, r, n) * gamma(s, b, m);
          K[kidx(s, r, m, n)] = std::move(t);
        }
  CurvatureTorsion ct;
  ct.dim = dim;
  ct.r.assign(static_cast<std::size_t>(dim * dim * dim * dim), RF(dim));
  ct.theta.assign(static_cast<std::size_t>(dim * dim * dim), RF(dim));
  for (int k = 1; k <= dim; ++k)
    for (int l = 1; l <= dim; ++l)
      for (int i = 1; i <= dim; ++i)
        for (int j = 1; j <= dim; ++j) {
          RF sum = zero(dim);
          for (int s = 1; s <= dim; ++s)
            for (int r = 1; r <= dim; ++r)
              for (int m = 1; m <= dim; ++m)
                for (int n = 1; n <= dim; ++n)
                  if (!K[kidx(s, r, m, n)].is_zero())
                    sum += yi(k - 1, s - 1) * y(r, l) * y(m, i) * y(n, j) * K[kidx(s, r, m, n)];
          ct.r[(((k - 1) * dim + (l - 1)) * dim + (i - 1)) * dim + (j - 1)] = std::move(sum);
        }
  for (int k = 1; k <= dim; ++k)
    for (int i = 1; i <= dim; ++i)
      for (int j = 1; j <= dim; ++j) {
        RF sum = zero(dim);
        for (int r = 1; r <= dim; ++r)
          for (int m = 1; m <= dim; ++m)
            for (int n = 1; n <= dim; ++n) {
              RF t = gamma(r, m, n) - gamma(r, n, m);
              if (!t.is_zero()) sum += yi(k - 1, r - 1) * y(m, i) * y(n, j) * t;
            }
        ct.theta[((k - 1) * dim + (i - 1)) * dim + (j - 1)] = std::move(sum);
      }
  return ct;
}

std::vector<TwoForm> torsion_form(const Connection& gamma) {
  int dim = gamma.dim;
  auto alpha = soldering_form(dim);
  auto omega = connection_form(gamma);
  std::vector<TwoForm> theta;
  for (int i = 1; i <= dim; ++i) {
    TwoForm t = exterior_derivative(alpha[i - 1]);
    for (int j = 1; j <= dim; ++j) {
      TwoForm w = wedge(omega[(i - 1) * dim + (j - 1)], alpha[j - 1]);
      for (std::size_t k = 0; k < t.upper.size(); ++k) t.upper[k] += w.upper[k];
    }
    theta.push_back(std::move(t));
  }
  return theta;
}

Connection pullback_gamma(const Connection& gamma, const PolyDiffeo& psi) {
  int dim = gamma.dim;
  if (psi.dim() != dim) throw symb::ScopeMismatch("connection and diffeomorphism differ in dim");
  std::vector<RF> composed;
  composed.reserve(gamma.coeff.size());
  for (const auto& c : gamma.coeff) composed.push_back(c.is_zero() ? c : psi.pullback_function(c));
  auto g = [&](int mu, int nu, int al) -> const RF& { return composed[gamma.index(mu, nu, al)]; };
  Connection r(dim);
  for (int ga = 1; ga <= dim; ++ga)
    for (int be = 1; be <= dim; ++be)
      for (int al = 1; al <= dim; ++al) {
        RF sum = zero(dim);
        for (int de = 1; de <= dim; ++de) {
          const RF& inv = psi.inverse_jacobian(ga, de);
          if (inv.is_zero()) continue;
          RF inner(psi.component(de).derivative(al - 1).derivative(be - 1));
          for (int ep = 1; ep <= dim; ++ep)
            for (int ze = 1; ze <= dim; ++ze)
              if (!g(de, ep, ze).is_zero())
                inner += g(de, ep, ze) * RF(psi.jacobian(ep, be) * psi.jacobian(ze, al));
          if (!inner.is_zero()) sum += inv * inner;
        }
        r(ga, be, al) = std::move(sum);
      }
  return r;
}

OneForm pullback_oneform(const OneForm& theta, const PolyDiffeo& psi) {
  int dim = theta.dim;
  if (psi.dim() != dim) throw symb::ScopeMismatch("form and diffeomorphism differ in dim");
  OneForm t(dim);
  for (int k = 0; k < dim; ++k)
    if (!theta.base[k].is_zero()) t.base[k] = psi.pullback_function(theta.base[k]);
  for (int k = 0; k < dim * dim; ++k)
    if (!theta.frame[k].is_zero()) t.frame[k] = psi.pullback_function(theta.frame[k]);

  OneForm r(dim);
  for (int al = 1; al <= dim; ++al) {
    RF sum = zero(dim);
    for (int mu = 1; mu <= dim; ++mu) {
      if (!t.x(mu).is_zero()) sum += t.x(mu) * RF(psi.jacobian(mu, al));
      for (int i = 1; i <= dim; ++i) {
        if (t.y(mu, i).is_zero()) continue;
        Polynomial c(dim);
        for (int be = 1; be <= dim; ++be)
          c += psi.jacobian(mu, be).derivative(al - 1) * Polynomial::variable(dim, Coordinate::y(be, i));
        if (!c.is_zero()) sum += t.y(mu, i) * RF(c);
      }
    }
    r.x(al) = std::move(sum);
  }
  for (int al = 1; al <= dim; ++al)
    for (int i = 1; i <= dim; ++i) {
      RF sum = zero(dim);
      for (int mu = 1; mu <= dim; ++mu)
        if (!t.y(mu, i).is_zero()) sum += t.y(mu, i) * RF(psi.jacobian(mu, al));
      r.y(al, i) = std::move(sum);
    }
  return r;
}

bool check_equivariance(const Connection& gamma, const std::vector<std::vector<Rational>>& g) {
  int dim = gamma.dim;
  Matrix gm(dim, dim);
  for (int r = 0; r < dim; ++r)
    for (int c = 0; c < dim; ++c) gm(r, c) = RF::constant(dim, g[r][c]);
  Matrix gi = inverse(gm);

  // right translation y -> y g on coordinates
  std::vector<RF> images;
  for (int mu = 1; mu <= dim; ++mu) images.push_back(RF::variable(dim, Coordinate::x(mu)));
  for (int mu = 1; mu <= dim; ++mu)
    for (int i = 1; i <= dim; ++i) {
      RF e = zero(dim);
      for (int j = 1; j <= dim; ++j) e += yv(dim, mu, j) * gm(j - 1, i - 1);
      images.push_back(std::move(e));
    }

  auto omega = connection_form(gamma);
  std::vector<OneForm> moved;
  for (const auto& w : omega) {
    OneForm m(dim);
    for (int k = 0; k < dim; ++k) m.base[k] = w.base[k].substitute(images);
    for (int k = 0; k < dim * dim; ++k) m.frame[k] = w.frame[k].substitute(images);
    moved.push_back(std::move(m));
  }

  int n = symb::num_vars(dim);
  for (int e = 0; e < n; ++e) {
    VectorField v(dim);
    if (e < dim) {
      v.base[e] = RF::constant(dim, 1);
    } else {
      v.frame[e - dim] = RF::constant(dim, 1);
    }
    // R_{g*} acts on frame components by right multiplication with g
    VectorField rv(dim);
    rv.base = v.base;
    for (int mu = 1; mu <= dim; ++mu)
      for (int i = 1; i <= dim; ++i) {
        RF s = zero(dim);
        for (int j = 1; j <= dim; ++j) s += v.y(mu, j) * gm(j - 1, i - 1);
        rv.y(mu, i) = std::move(s);
      }
    Matrix lhs(dim, dim), w(dim, dim);
    for (int i = 0; i < dim; ++i)
      for (int j = 0; j < dim; ++j) {
        lhs(i, j) = moved[i * dim + j](rv);
        w(i, j) = omega[i * dim + j](v);
      }
    Matrix rhs = gi * w * gm;
    for (int k = 0; k < dim * dim; ++k)
      if (!symb::equal_rf(lhs.a[k], rhs.a[k])) return false;
  }
  return true;
}

// ---- parsing

Connection parse_connection(int dim, const std::string& text) {
  Connection g(dim);
  std::size_t pos = 0;
  while (pos < text.size()) {
    std::size_t end = text.find(';', pos);
    if (end == std::string::npos) end = text.size();
    std::string item = text.substr(pos, end - pos);
    std::size_t eq = item.find('=');
    if (item.find_first_not_of(" \t") == std::string::npos) {
      pos = end + 1;
      continue;
    }
    int mu = 0, nu = 0, al = 0;
    char close = 0;
    std::istringstream head(item.substr(0, eq == std::string::npos ? 0 : eq));
    char c1 = 0, c2 = 0, c3 = 0, open = 0;
    head >> c1 >> open >> mu >> c2 >> nu >> c3 >> al >> close;
    if (eq == std::string::npos || c1 != 'G' || open != '(' || c2 != ',' || c3 != ',' || close != ')')
      throw symb::ParseError("expected G(mu,nu,al)=polynomial", pos);
    for (int idx : {mu, nu, al})
      if (idx < 1 || idx > dim)
        throw symb::ParseError("index " + std::to_string(idx) + " exceeds dim " + std::to_string(dim), pos);
    Polynomial p;
    try {
      p = symb::parse_polynomial(dim, item.substr(eq + 1));
    } catch (const symb::ParseError& e) {
      throw symb::ParseError(e.message, pos + eq + 1 + e.position);
    }
    g(mu, nu, al) = RF(p);
    pos = end + 1;
  }
  if (!g.y_free()) throw symb::ParseError("connection coefficients must depend on x only", 0);
  return g;
}

PolyDiffeo parse_diffeo(int dim, const std::string& text) {
  std::string t = text;
  auto first = t.find_first_not_of(" \t");
  if (first != std::string::npos && t.substr(first, 2) == "id" && t.find_first_not_of(" \t", first + 2) == std::string::npos)
    return PolyDiffeo::identity(dim);
  std::vector<Polynomial> comps;
  std::size_t pos = 0;
  while (true) {
    std::size_t end = t.find(',', pos);
    if (end == std::string::npos) end = t.size();
    try {
      comps.push_back(symb::parse_polynomial(dim, t.substr(pos, end - pos)));
    } catch (const symb::ParseError& e) {
      throw symb::ParseError(e.message, pos + e.position);
    }
    if (end == t.size()) break;
    pos = end + 1;
  }
  if (static_cast<int>(comps.size()) != dim)
    throw symb::ParseError("expected " + std::to_string(dim) + " components", 0);
  return PolyDiffeo(std::move(comps));
}

}  // namespace cm::geometry
