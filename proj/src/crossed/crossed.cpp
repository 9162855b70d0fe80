#include "cm/crossed.hpp"

#include <sstream>

namespace cm::crossed {

using symb::Coordinate;
using symb::Rational;

CrossedElement CrossedElement::monomial(const RF& f, const PolyDiffeo& psi) {
  CrossedElement e(psi.dim());
  e.add_term(psi, f);
  return e;
}

void CrossedElement::add_term(const PolyDiffeo& psi, const RF& f) {
  if (f.is_zero()) return;
  auto [it, fresh] = terms_.try_emplace(psi, f);
  if (!fresh) {
    it->second += f;
    if (it->second.is_zero()) terms_.erase(it);
  }
}

CrossedElement& CrossedElement::operator+=(const CrossedElement& o) {
  for (const auto& [psi, f] : o.terms_) add_term(psi, f);
  return *this;
}

CrossedElement& CrossedElement::operator-=(const CrossedElement& o) {
  for (const auto& [psi, f] : o.terms_) add_term(psi, -f);
  return *this;
}

CrossedElement CrossedElement::times_function(const RF& g) const {
  CrossedElement r(dim_);
  for (const auto& [psi, f] : terms_) r.add_term(psi, f * g);
  return r;
}

CrossedElement CrossedElement::scaled(const Rational& c) const {
  return times_function(RF::constant(dim_, c));
}

std::string CrossedElement::str() const {
  if (terms_.empty()) return "0";
  std::ostringstream os;
  bool first = true;
  for (const auto& [psi, f] : terms_) {
    os << (first ? "" : " + ") << "(" << f.str() << ") * U[" << psi.str() << "]";
    first = false;
  }
  return os.str();
}

CrossedElement multiply(const CrossedElement& a, const CrossedElement& b) {
  CrossedElement r(a.dim());
  for (const auto& [p1, f1] : a.terms())
    for (const auto& [p2, f2] : b.terms()) {
      RF g = p1.is_identity() ? f2 : p1.pullback_function(f2);
      r.add_term(p2.compose(p1), f1 * g);
    }
  return r;
}

namespace {

template <typename Op>
CrossedElement map_functions(const CrossedElement& a, Op op) {
  CrossedElement r(a.dim());
  for (const auto& [psi, f] : a.terms()) r.add_term(psi, op(f));
  return r;
}

}  // namespace

CrossedElement act_Y(int j, int k, const CrossedElement& a) {
  geometry::VectorField y = geometry::vertical_field(a.dim(), j, k);
  return map_functions(a, [&](const RF& f) { return y.apply(f); });
}

CrossedElement act_X(int i, const CrossedElement& a) {
  geometry::VectorField x = geometry::horizontal_field(geometry::Connection::flat(a.dim()), i);
  return map_functions(a, [&](const RF& f) { return x.apply(f); });
}

RF gamma_cocycle(const PolyDiffeo& psi, int k, int j, int i) {
  int n = psi.dim();
  geometry::Matrix yi = geometry::frame_inverse(n);
  RF r(n);
  if (psi.is_identity()) return r;
  for (int be = 1; be <= n; ++be)
    for (int mu = 1; mu <= n; ++mu)
      for (int al = 1; al <= n; ++al) {
        symb::Polynomial dd = psi.component(be).derivative(Coordinate::x(mu)).derivative(Coordinate::x(al));
        if (dd.is_zero()) continue;
        RF frame = RF::variable(n, Coordinate::y(mu, j)) * RF::variable(n, Coordinate::y(al, i));
        RF inner = RF(dd) * frame;
        for (int nu = 1; nu <= n; ++nu) r += psi.inverse_jacobian(nu, be) * inner * yi(k - 1, nu - 1);
      }
  return r;
}

CrossedElement act_delta(int k, int j, int i, const hopf::IndexString& tail, const CrossedElement& a) {
  if (tail.empty()) {
    CrossedElement r(a.dim());
    for (const auto& [psi, f] : a.terms()) r.add_term(psi, f * gamma_cocycle(psi, k, j, i));
    return r;
  }
  hopf::IndexString head(tail.begin(), tail.end() - 1);
  int l = tail.back();
  return act_X(l, act_delta(k, j, i, head, a)) - act_delta(k, j, i, head, act_X(l, a));
}

CrossedElement act(hopf::Generator g, const CrossedElement& a) {
  switch (g.kind()) {
    case hopf::Generator::Kind::X:
      return act_X(g.a(), a);
    case hopf::Generator::Kind::Y:
      return act_Y(g.a(), g.b(), a);
    case hopf::Generator::Kind::Delta:
      return act_delta(g.a(), g.b(), g.c(), g.tail(), a);
  }
  return CrossedElement(a.dim());
}

CrossedElement act(const hopf::HopfPoly& h, const CrossedElement& a) {
  CrossedElement r(a.dim());
  for (const auto& [m, c] : h.terms()) {
    CrossedElement cur = a;
    for (auto it = m.rbegin(); it != m.rend(); ++it) cur = act(*it, cur);
    r += cur.scaled(c);
  }
  return r;
}

bool check_leibniz_X(int i, const CrossedElement& a, const CrossedElement& b) {
  int n = a.dim();
  CrossedElement rhs = multiply(act_X(i, a), b) + multiply(a, act_X(i, b));
  for (int j = 1; j <= n; ++j)
    for (int k = 1; k <= n; ++k) rhs += multiply(act_delta(k, j, i, {}, a), act_Y(j, k, b));
  return act_X(i, multiply(a, b)) == rhs;
}

bool check_leibniz_Y(int j, int k, const CrossedElement& a, const CrossedElement& b) {
  return act_Y(j, k, multiply(a, b)) == multiply(act_Y(j, k, a), b) + multiply(a, act_Y(j, k, b));
}

bool check_leibniz_delta(int k, int j, int i, const CrossedElement& a, const CrossedElement& b) {
  return act_delta(k, j, i, {}, multiply(a, b)) ==
         multiply(act_delta(k, j, i, {}, a), b) + multiply(a, act_delta(k, j, i, {}, b));
}

bool check_cocycle(const PolyDiffeo& psi1, const PolyDiffeo& psi2) {
  int n = psi1.dim();
  PolyDiffeo both = psi2.compose(psi1);
  for (int k = 1; k <= n; ++k)
    for (int j = 1; j <= n; ++j)
      for (int i = j; i <= n; ++i) {
        RF lhs = gamma_cocycle(both, k, j, i);
        RF rhs = gamma_cocycle(psi1, k, j, i) + psi1.pullback_function(gamma_cocycle(psi2, k, j, i));
        if (!symb::equal_rf(lhs, rhs)) return false;
      }
  return true;
}

bool check_gendelta(const hopf::HopfPoly& h, const CrossedElement& a, const CrossedElement& b) {
  hopf::TensorPoly d = hopf::coproduct(h, a.dim());
  CrossedElement rhs(a.dim());
  for (const auto& [k, c] : d.terms()) {
    CrossedElement left = act(hopf::HopfPoly::monomial(k[0]), a);
    if (left.is_zero()) continue;
    rhs += multiply(left, act(hopf::HopfPoly::monomial(k[1]), b)).scaled(c);
  }
  return act(h, multiply(a, b)) == rhs;
}

CrossedElement parse_element(int dim, const std::string& text) {
  CrossedElement r(dim);
  std::size_t pos = 0;
  bool any = false;
  while (true) {
    std::size_t u = text.find("U[", pos);
    if (u == std::string::npos) break;
    std::size_t close = text.find(']', u);
    if (close == std::string::npos) throw symb::ParseError("missing ']'", u);
    std::string f = text.substr(pos, u - pos);
    auto strip = [](std::string& s) {
      auto b = s.find_first_not_of(" \t");
      auto e = s.find_last_not_of(" \t");
      s = b == std::string::npos ? std::string() : s.substr(b, e - b + 1);
    };
    strip(f);
    if (any) {
      if (f.empty() || f.front() != '+') throw symb::ParseError("expected '+' between terms", pos);
      f.erase(0, 1);
      strip(f);
    }
    if (!f.empty()) {
      if (f.back() != '*') throw symb::ParseError("expected '*' before U[", u);
      f.pop_back();
      strip(f);
    }
    RF coeff = f.empty() ? RF::constant(dim, 1) : symb::parse_rf(dim, f);
    r.add_term(geometry::parse_diffeo(dim, text.substr(u + 2, close - u - 2)), coeff);
    pos = close + 1;
    any = true;
  }
  std::string rest = text.substr(pos);
  if (!any || rest.find_first_not_of(" \t") != std::string::npos)
    throw symb::ParseError(any ? "trailing input" : "expected f * U[psi]", any ? pos : 0);
  return r;
}

}  // namespace cm::crossed
