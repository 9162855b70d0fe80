#include "cm/symb.hpp"

#include <algorithm>
#include <sstream>

namespace cm::symb {

namespace {

// Splits q = c * base with base primitive over Z and positive leading coefficient.
std::pair<Rational, Polynomial> normalize_factor(const Polynomial& q) {
  Rational c = q.content();
  Polynomial base = q * Rational(1 / c);
  return {c, base};
}

}  // namespace

RationalFunction::RationalFunction(int dim) : num_(dim) {}

RationalFunction::RationalFunction(Polynomial p) : num_(std::move(p)) {}

RationalFunction RationalFunction::constant(int dim, const Rational& c) {
  return RationalFunction(Polynomial::constant(dim, c));
}

RationalFunction RationalFunction::variable(int dim, Coordinate v) {
  return RationalFunction(Polynomial::variable(dim, v));
}

RationalFunction RationalFunction::quotient(const Polynomial& num, const Polynomial& den) {
  if (den.is_zero()) throw IdenticallyZeroDenominator("denominator is identically zero");
  RationalFunction r(num);
  if (den.is_constant()) {
    r.num_ *= Rational(1 / den.constant_value());
    return r;
  }
  auto [c, base] = normalize_factor(den);
  r.num_ *= Rational(1 / c);
  r.add_factor(std::move(base), 1);
  r.reduce();
  return r;
}

Polynomial RationalFunction::denominator() const {
  Polynomial d = Polynomial::constant(dim(), 1);
  for (const auto& f : den_) d = d * f.base.pow(f.exp);
  return d;
}

void RationalFunction::add_factor(Polynomial g, int e) {
  if (e == 0 || g.is_constant()) return;
  for (auto& f : den_) {
    if (f.base == g) {
      f.exp += e;
      return;
    }
  }
  // refine against existing bases so that shared divisors stay shared
  for (std::size_t k = 0; k < den_.size(); ++k) {
    while (g.degree() >= den_[k].base.degree()) {
      auto q = g.divide_exact(den_[k].base);
      if (!q) break;
      den_[k].exp += e;
      g = *q;
      if (g.is_constant()) return;
    }
  }
  for (std::size_t k = 0; k < den_.size(); ++k) {
    if (den_[k].base.degree() <= g.degree()) continue;
    auto q = den_[k].base.divide_exact(g);
    if (!q) continue;
    int a = den_[k].exp;
    den_.erase(den_.begin() + static_cast<std::ptrdiff_t>(k));
    add_factor(*q, a);
    add_factor(g, e + a);
    return;
  }
  den_.push_back({std::move(g), e});
  std::sort(den_.begin(), den_.end(), [](const Factor& a, const Factor& b) { return a.base < b.base; });
}

void RationalFunction::reduce() {
  if (num_.is_zero()) {
    den_.clear();
    return;
  }
  for (auto& f : den_) {
    while (f.exp > 0 && num_.degree() >= f.base.degree()) {
      auto q = num_.divide_exact(f.base);
      if (!q) break;
      num_ = std::move(*q);
      --f.exp;
    }
  }
  std::erase_if(den_, [](const Factor& f) { return f.exp == 0; });
}

void RationalFunction::merge_factors(const std::vector<Factor>& other) {
  for (const auto& f : other) {
    auto it = std::find_if(den_.begin(), den_.end(), [&](const Factor& g) { return g.base == f.base; });
    if (it == den_.end()) {
      den_.push_back(f);
    } else {
      it->exp = std::max(it->exp, f.exp);
    }
  }
  std::sort(den_.begin(), den_.end(), [](const Factor& a, const Factor& b) { return a.base < b.base; });
}

Polynomial RationalFunction::scaled_numerator(const std::vector<Factor>& target) const {
  Polynomial n = num_;
  for (const auto& t : target) {
    int own = 0;
    for (const auto& f : den_)
      if (f.base == t.base) own = f.exp;
    if (t.exp > own) n = n * t.base.pow(static_cast<unsigned>(t.exp - own));
  }
  return n;
}

RationalFunction RationalFunction::operator-() const {
  RationalFunction r = *this;
  r.num_ = -r.num_;
  return r;
}

RationalFunction& RationalFunction::operator+=(const RationalFunction& o) {
  if (o.is_zero()) {
    if (num_.dim() == 0) num_ = Polynomial(o.dim());
    return *this;
  }
  if (is_zero()) {
    *this = o;
    return *this;
  }
  bool same = den_.size() == o.den_.size();
  for (std::size_t k = 0; same && k < den_.size(); ++k)
    same = den_[k].exp == o.den_[k].exp && den_[k].base == o.den_[k].base;
  if (same) {
    num_ += o.num_;
  } else {
    std::vector<Factor> target = den_;
    RationalFunction tmp;
    tmp.den_ = std::move(target);
    tmp.merge_factors(o.den_);
    Polynomial n = scaled_numerator(tmp.den_) + o.scaled_numerator(tmp.den_);
    num_ = std::move(n);
    den_ = std::move(tmp.den_);
  }
  reduce();
  return *this;
}

RationalFunction& RationalFunction::operator-=(const RationalFunction& o) { return *this += -o; }

RationalFunction& RationalFunction::operator*=(const RationalFunction& o) {
  num_ = num_ * o.num_;
  if (num_.is_zero()) {
    den_.clear();
    return *this;
  }
  for (const auto& f : o.den_) add_factor(f.base, f.exp);
  reduce();
  return *this;
}

RationalFunction RationalFunction::inverse() const {
  if (num_.is_zero()) throw IdenticallyZeroDenominator("inverse of the zero function");
  return quotient(denominator(), num_);
}

RationalFunction& RationalFunction::operator/=(const RationalFunction& o) { return *this *= o.inverse(); }

RationalFunction RationalFunction::pow(unsigned n) const {
  RationalFunction r = constant(dim(), 1);
  for (unsigned k = 0; k < n; ++k) r *= *this;
  return r;
}

RationalFunction RationalFunction::derivative(int var) const {
  std::vector<std::size_t> moving;
  for (std::size_t k = 0; k < den_.size(); ++k)
    if (den_[k].base.depends_on(var)) moving.push_back(k);
  RationalFunction r;
  Polynomial all = Polynomial::constant(dim(), 1);
  for (auto k : moving) all = all * den_[k].base;
  Polynomial n = num_.derivative(var) * all;
  for (auto k : moving) {
    Polynomial others = Polynomial::constant(dim(), den_[k].exp);
    for (auto j : moving)
      if (j != k) others = others * den_[j].base;
    n -= num_ * den_[k].base.derivative(var) * others;
  }
  r.num_ = std::move(n);
  r.den_ = den_;
  for (auto k : moving) r.den_[k].exp += 1;
  if (r.num_.is_zero()) r.num_ = Polynomial(dim());
  r.reduce();
  return r;
}

RationalFunction RationalFunction::substitute(const std::vector<RationalFunction>& images) const {
  RationalFunction r = num_.substitute(images);
  for (const auto& f : den_) {
    RationalFunction b = f.base.substitute(images);
    if (b.is_zero()) throw IdenticallyZeroDenominator("denominator vanishes identically after substitution");
    r /= b.pow(static_cast<unsigned>(f.exp));
  }
  return r;
}

Rational RationalFunction::eval(const std::vector<Rational>& point) const {
  Rational d = 1;
  for (const auto& f : den_) {
    Rational b = f.base.eval(point);
    for (int k = 0; k < f.exp; ++k) d *= b;
  }
  if (d == 0) throw DivisionByZeroAtPoint("denominator vanishes at the evaluation point");
  return num_.eval(point) / d;
}

std::string RationalFunction::str() const {
  if (den_.empty()) return num_.str();
  std::ostringstream os;
  os << '(' << num_.str() << ")/(";
  bool first = true;
  for (const auto& f : den_) {
    if (!first) os << '*';
    first = false;
    os << '(' << f.base.str() << ')';
    if (f.exp > 1) os << '^' << f.exp;
  }
  os << ')';
  return os.str();
}

RF add(const RF& p, const RF& q) { return p + q; }
RF mul(const RF& p, const RF& q) { return p * q; }
RF neg(const RF& p) { return -p; }
RF differentiate(const RF& p, Coordinate v) { return p.derivative(v); }

RF substitute(const RF& p, const std::map<Coordinate, RF>& assignment) {
  int n = num_vars(p.dim());
  std::vector<RF> images;
  images.reserve(n);
  for (int v = 0; v < n; ++v) {
    Coordinate c = Coordinate::from_index(p.dim(), v);
    auto it = assignment.find(c);
    if (it != assignment.end()) {
      images.push_back(it->second);
    } else if (p.numerator().depends_on(v) ||
               std::any_of(p.factors().begin(), p.factors().end(),
                           [v](const RF::Factor& f) { return f.base.depends_on(v); })) {
      throw std::invalid_argument("substitution has no image for " + c.name());
    } else {
      images.push_back(RF::variable(p.dim(), c));
    }
  }
  return p.substitute(images);
}

bool equal_rf(const RF& p, const RF& q) { return (p - q).is_zero(); }

Rational eval_at(const RF& p, const std::map<Coordinate, Rational>& point) {
  int n = num_vars(p.dim());
  std::vector<Rational> values(n, 0);
  std::vector<bool> given(n, false);
  for (const auto& [c, v] : point) {
    values[c.index(p.dim())] = v;
    given[c.index(p.dim())] = true;
  }
  for (int v = 0; v < n; ++v) {
    bool used = p.numerator().depends_on(v) ||
                std::any_of(p.factors().begin(), p.factors().end(),
                            [v](const RF::Factor& f) { return f.base.depends_on(v); });
    if (used && !given[v])
      throw std::invalid_argument("no value for " + Coordinate::from_index(p.dim(), v).name());
  }
  return p.eval(values);
}

}  // namespace cm::symb
