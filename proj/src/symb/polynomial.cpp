#include "cm/symb.hpp"

#include <algorithm>
#include <sstream>

namespace cm::symb {

void check_dim(int dim) {
  if (dim < 1 || dim > kMaxDim)
    throw std::invalid_argument("dimension " + std::to_string(dim) +
                                " outside supported range 1.." + std::to_string(kMaxDim));
}

int Coordinate::index(int dim) const {
  if (!valid(dim)) throw std::out_of_range("coordinate " + name() + " outside dim " + std::to_string(dim));
  if (kind == Kind::Base) return mu - 1;
  return dim + (mu - 1) * dim + (i - 1);
}

Coordinate Coordinate::from_index(int dim, int index) {
  if (index < dim) return x(index + 1);
  int r = index - dim;
  return y(r / dim + 1, r % dim + 1);
}

std::string Coordinate::name() const {
  if (kind == Kind::Base) return "x" + std::to_string(mu);
  return "y" + std::to_string(mu) + "_" + std::to_string(i);
}

bool Coordinate::valid(int dim) const {
  if (mu < 1 || mu > dim) return false;
  if (kind == Kind::Base) return i == 0;
  return i >= 1 && i <= dim;
}

bool Exponents::divides(const Exponents& o) const {
  if (total > o.total) return false;
  for (int k = 0; k < kMaxVars; ++k)
    if (e[k] > o.e[k]) return false;
  return true;
}

namespace {

Exponents add_exp(const Exponents& a, const Exponents& b) {
  Exponents r;
  for (int k = 0; k < kMaxVars; ++k) {
    int s = a.e[k] + b.e[k];
    if (s > 255) throw std::overflow_error("exponent overflow");
    r.e[k] = static_cast<std::uint8_t>(s);
  }
  r.total = static_cast<std::uint16_t>(a.total + b.total);
  return r;
}

Exponents sub_exp(const Exponents& a, const Exponents& b) {
  Exponents r;
  for (int k = 0; k < kMaxVars; ++k) r.e[k] = static_cast<std::uint8_t>(a.e[k] - b.e[k]);
  r.total = static_cast<std::uint16_t>(a.total - b.total);
  return r;
}

void require_same(int a, int b) {
  if (a != b) throw ScopeMismatch("polynomials from different coordinate scopes");
}

}  // namespace

Polynomial::Polynomial(int dim) : dim_(dim) {}

Polynomial Polynomial::constant(int dim, const Rational& c) {
  Polynomial p(dim);
  if (c != 0) p.terms_.push_back({Exponents{}, c});
  return p;
}

Polynomial Polynomial::variable(int dim, Coordinate v) { return variable_index(dim, v.index(dim)); }

Polynomial Polynomial::variable_index(int dim, int var) {
  Exponents e;
  e.e[var] = 1;
  e.total = 1;
  return monomial(dim, e, 1);
}

Polynomial Polynomial::monomial(int dim, const Exponents& e, const Rational& c) {
  Polynomial p(dim);
  if (c != 0) p.terms_.push_back({e, c});
  return p;
}

bool Polynomial::is_constant() const { return terms_.empty() || (terms_.size() == 1 && terms_[0].exp.total == 0); }

Rational Polynomial::constant_value() const {
  if (terms_.empty() || terms_[0].exp.total != 0) return 0;
  return terms_[0].coeff;
}

int Polynomial::degree() const { return terms_.empty() ? -1 : terms_.back().exp.total; }

int Polynomial::degree_in(int var) const {
  int d = terms_.empty() ? -1 : 0;
  for (const auto& t : terms_) d = std::max<int>(d, t.exp.e[var]);
  return d;
}

void Polynomial::canonicalize() {
  std::sort(terms_.begin(), terms_.end(), [](const Term& a, const Term& b) { return a.exp < b.exp; });
  std::size_t out = 0;
  for (std::size_t k = 0; k < terms_.size();) {
    Term acc = std::move(terms_[k]);
    std::size_t j = k + 1;
    for (; j < terms_.size() && terms_[j].exp == acc.exp; ++j) acc.coeff += terms_[j].coeff;
    if (acc.coeff != 0) terms_[out++] = std::move(acc);
    k = j;
  }
  terms_.resize(out);
}

Polynomial Polynomial::operator-() const {
  Polynomial r = *this;
  for (auto& t : r.terms_) t.coeff = -t.coeff;
  return r;
}

Polynomial& Polynomial::operator+=(const Polynomial& o) {
  if (o.terms_.empty()) return *this;
  if (terms_.empty()) {
    dim_ = o.dim_;
    terms_ = o.terms_;
    return *this;
  }
  require_same(dim_, o.dim_);
  std::vector<Term> out;
  out.reserve(terms_.size() + o.terms_.size());
  auto a = terms_.begin();
  auto b = o.terms_.begin();
  while (a != terms_.end() || b != o.terms_.end()) {
    if (b == o.terms_.end() || (a != terms_.end() && a->exp < b->exp)) {
      out.push_back(std::move(*a++));
    } else if (a == terms_.end() || b->exp < a->exp) {
      out.push_back(*b++);
    } else {
      Rational c = a->coeff + b->coeff;
      if (c != 0) out.push_back({a->exp, std::move(c)});
      ++a;
      ++b;
    }
  }
  terms_ = std::move(out);
  return *this;
}

Polynomial& Polynomial::operator-=(const Polynomial& o) { return *this += -o; }

Polynomial& Polynomial::operator*=(const Rational& c) {
  if (c == 0) {
    terms_.clear();
    return *this;
  }
  for (auto& t : terms_) t.coeff *= c;
  return *this;
}

Polynomial operator*(const Polynomial& a, const Polynomial& b) {
  if (a.terms_.empty() || b.terms_.empty()) return Polynomial(a.dim_ ? a.dim_ : b.dim_);
  require_same(a.dim_, b.dim_);
  Polynomial r(a.dim_);
  r.terms_.reserve(a.terms_.size() * b.terms_.size());
  for (const auto& s : a.terms_)
    for (const auto& t : b.terms_) r.terms_.push_back({add_exp(s.exp, t.exp), s.coeff * t.coeff});
  r.canonicalize();
  return r;
}

Polynomial Polynomial::pow(unsigned n) const {
  Polynomial result = constant(dim_, 1);
  Polynomial base = *this;
  while (n) {
    if (n & 1u) result = result * base;
    n >>= 1u;
    if (n) base = base * base;
  }
  return result;
}

std::strong_ordering Polynomial::compare(const Polynomial& o) const {
  if (auto c = dim_ <=> o.dim_; c != 0) return c;
  if (auto c = terms_.size() <=> o.terms_.size(); c != 0) return c;
  for (std::size_t k = 0; k < terms_.size(); ++k) {
    if (auto c = terms_[k].exp <=> o.terms_[k].exp; c != 0) return c;
    int q = cmp(terms_[k].coeff, o.terms_[k].coeff);
    if (q != 0) return q < 0 ? std::strong_ordering::less : std::strong_ordering::greater;
  }
  return std::strong_ordering::equal;
}

Polynomial Polynomial::derivative(int var) const {
  Polynomial r(dim_);
  for (const auto& t : terms_) {
    if (t.exp.e[var] == 0) continue;
    Term d{t.exp, t.coeff * t.exp.e[var]};
    d.exp.e[var]--;
    d.exp.total--;
    r.terms_.push_back(std::move(d));
  }
  r.canonicalize();
  return r;
}

bool Polynomial::depends_on(int var) const {
  return std::any_of(terms_.begin(), terms_.end(), [var](const Term& t) { return t.exp.e[var] != 0; });
}

Polynomial Polynomial::substitute(const std::vector<Polynomial>& images) const {
  int n = num_vars(dim_);
  if (static_cast<int>(images.size()) < n) throw std::invalid_argument("substitution misses coordinates");
  int target = images.empty() ? dim_ : images[0].dim();
  std::vector<std::vector<Polynomial>> powers(n);
  auto power = [&](int v, int k) -> const Polynomial& {
    auto& pv = powers[v];
    if (pv.empty()) pv.push_back(constant(target, 1));
    while (static_cast<int>(pv.size()) <= k) pv.push_back(pv.back() * images[v]);
    return pv[k];
  };
  Polynomial r(target);
  for (const auto& t : terms_) {
    Polynomial m = constant(target, t.coeff);
    for (int v = 0; v < n; ++v)
      if (t.exp.e[v]) m = m * power(v, t.exp.e[v]);
    r += m;
  }
  return r;
}

RationalFunction Polynomial::substitute(const std::vector<RationalFunction>& images) const {
  int n = num_vars(dim_);
  if (static_cast<int>(images.size()) < n) throw std::invalid_argument("substitution misses coordinates");
  if (std::all_of(images.begin(), images.begin() + n, [](const RF& f) { return f.is_polynomial(); })) {
    std::vector<Polynomial> polys;
    polys.reserve(n);
    for (int v = 0; v < n; ++v) polys.push_back(images[v].numerator());
    return RationalFunction(substitute(polys));
  }
  int target = images[0].dim();
  std::vector<std::vector<RationalFunction>> powers(n);
  auto power = [&](int v, int k) -> const RationalFunction& {
    auto& pv = powers[v];
    if (pv.empty()) pv.push_back(RationalFunction::constant(target, 1));
    while (static_cast<int>(pv.size()) <= k) pv.push_back(pv.back() * images[v]);
    return pv[k];
  };
  RationalFunction r(target);
  for (const auto& t : terms_) {
    RationalFunction m = RationalFunction::constant(target, t.coeff);
    for (int v = 0; v < n; ++v)
      if (t.exp.e[v]) m *= power(v, t.exp.e[v]);
    r += m;
  }
  return r;
}

Rational Polynomial::eval(const std::vector<Rational>& point) const {
  Rational sum = 0;
  for (const auto& t : terms_) {
    Rational m = t.coeff;
    for (int v = 0; v < num_vars(dim_); ++v)
      for (int k = 0; k < t.exp.e[v]; ++k) m *= point[v];
    sum += m;
  }
  return sum;
}

std::optional<Polynomial> Polynomial::divide_exact(const Polynomial& d) const {
  if (d.is_zero()) throw IdenticallyZeroDenominator("division by the zero polynomial");
  Polynomial q(dim_);
  if (is_zero()) return q;
  require_same(dim_, d.dim_);
  if (d.degree() > degree()) return std::nullopt;
  const Term& lead = d.leading();
  Polynomial r = *this;
  std::vector<Term> quotient;
  while (!r.is_zero()) {
    const Term& lt = r.leading();
    if (!lead.exp.divides(lt.exp)) return std::nullopt;
    Exponents e = sub_exp(lt.exp, lead.exp);
    Rational c = lt.coeff / lead.coeff;
    quotient.push_back({e, c});
    Polynomial step(dim_);
    step.terms_.reserve(d.terms_.size());
    for (const auto& t : d.terms_) step.terms_.push_back({add_exp(t.exp, e), -c * t.coeff});
    // multiplying by a monomial preserves the order
    r += step;
  }
  q.terms_ = std::move(quotient);
  q.canonicalize();
  return q;
}

Rational Polynomial::content() const {
  if (terms_.empty()) return 1;
  mpz_class num = 0, den = 1;
  for (const auto& t : terms_) {
    mpz_gcd(num.get_mpz_t(), num.get_mpz_t(), t.coeff.get_num_mpz_t());
    mpz_lcm(den.get_mpz_t(), den.get_mpz_t(), t.coeff.get_den_mpz_t());
  }
  Rational c(num, den);
  c.canonicalize();
  if (leading().coeff < 0) c = -c;
  return c;
}

std::string Polynomial::str() const {
  if (terms_.empty()) return "0";
  std::ostringstream os;
  bool first = true;
  for (auto it = terms_.rbegin(); it != terms_.rend(); ++it) {
    Rational c = it->coeff;
    bool negative = c < 0;
    if (negative) c = -c;
    if (first)
      os << (negative ? "-" : "");
    else
      os << (negative ? " - " : " + ");
    first = false;
    bool unit = c == 1 && it->exp.total > 0;
    if (!unit) os << rational_str(c);
    bool need_star = !unit;
    for (int v = 0; v < num_vars(dim_); ++v) {
      int k = it->exp.e[v];
      if (!k) continue;
      if (need_star) os << '*';
      os << Coordinate::from_index(dim_, v).name();
      if (k > 1) os << '^' << k;
      need_star = true;
    }
  }
  return os.str();
}

std::string rational_str(const Rational& q) { return q.get_str(); }

Rational parse_rational(std::string_view text) {
  Rational q;
  if (q.set_str(std::string(text), 10) != 0) throw std::invalid_argument("bad rational literal");
  if (q.get_den() == 0) throw std::invalid_argument("zero denominator in literal");
  q.canonicalize();
  return q;
}

}  // namespace cm::symb
