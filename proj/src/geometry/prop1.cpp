#include "cm/geometry.hpp"

#include <sstream>

namespace cm::geometry {

namespace {

std::string diff_note(const std::string& where, const RF& lhs, const RF& rhs) {
  std::ostringstream os;
  os << where << ": " << lhs.str() << " != " << rhs.str();
  return os.str();
}

// First mismatching component of two one-forms, or empty.
std::string form_mismatch(const std::string& name, const OneForm& a, const OneForm& b) {
  int dim = a.dim;
  for (int mu = 1; mu <= dim; ++mu)
    if (!symb::equal_rf(a.x(mu), b.x(mu)))
      return diff_note(name + " dx" + std::to_string(mu), a.x(mu), b.x(mu));
  for (int mu = 1; mu <= dim; ++mu)
    for (int i = 1; i <= dim; ++i)
      if (!symb::equal_rf(a.y(mu, i), b.y(mu, i)))
        return diff_note(name + " dy" + std::to_string(mu) + "_" + std::to_string(i), a.y(mu, i), b.y(mu, i));
  return {};
}

}  // namespace

bool Prop1Report::all_passed() const {
  for (const auto& r : items)
    if (!r.passed) return false;
  return true;
}

Prop1Report check_prop1(const Connection& gamma, const PolyDiffeo& psi) {
  int dim = gamma.dim;
  Prop1Report report;
  auto record = [&](std::string name, std::string mismatch) {
    report.items.push_back({std::move(name), mismatch.empty(), std::move(mismatch)});
  };

  auto alpha = soldering_form(dim);
  std::string bad;
  for (int j = 1; j <= dim && bad.empty(); ++j)
    bad = form_mismatch("alpha^" + std::to_string(j), pullback_oneform(alpha[j - 1], psi), alpha[j - 1]);
  record("(1) pullback of alpha equals alpha", bad);

  Connection gt = pullback_gamma(gamma, psi);
  auto omega = connection_form(gamma);
  auto omega_t = connection_form(gt);
  std::vector<OneForm> pulled;
  for (const auto& w : omega) pulled.push_back(pullback_oneform(w, psi));
  bad.clear();
  for (int i = 1; i <= dim && bad.empty(); ++i)
    for (int j = 1; j <= dim && bad.empty(); ++j) {
      int k = (i - 1) * dim + (j - 1);
      bad = form_mismatch("omega^" + std::to_string(i) + "_" + std::to_string(j), pulled[k], omega_t[k]);
    }
  record("(2) pullback of omega is the connection form of the pulled-back Gamma", bad);

  // (3) in pulled-back form: (psi~* theta)(Y) = theta(Y) o psi~ for every basis covector
  bad.clear();
  auto ys = vertical_fields(dim);
  int n = symb::num_vars(dim);
  for (int e = 0; e < n && bad.empty(); ++e) {
    symb::Coordinate c = symb::Coordinate::from_index(dim, e);
    OneForm theta = c.kind == symb::Coordinate::Kind::Base ? OneForm::dx(dim, c.mu) : OneForm::dy(dim, c.mu, c.i);
    OneForm pt = pullback_oneform(theta, psi);
    for (int j = 1; j <= dim && bad.empty(); ++j)
      for (int k = 1; k <= dim && bad.empty(); ++k) {
        const VectorField& y = ys[(j - 1) * dim + (k - 1)];
        RF lhs = pt(y);
        RF rhs = psi.pullback_function(theta(y));
        if (!symb::equal_rf(lhs, rhs))
          bad = diff_note("d" + c.name() + "(Y^" + std::to_string(j) + "_" + std::to_string(k) + ")", lhs, rhs);
      }
  }
  record("(3) Y is invariant under the lifted diffeomorphism", bad);

  bad.clear();
  auto xs = horizontal_fields(gt);
  for (int k = 1; k <= dim && bad.empty(); ++k) {
    const VectorField& x = xs[k - 1];
    for (std::size_t w = 0; w < pulled.size() && bad.empty(); ++w) {
      RF v = pulled[w](x);
      if (!v.is_zero()) bad = diff_note("omega(X~_" + std::to_string(k) + ")", v, RF(dim));
    }
    for (int j = 1; j <= dim && bad.empty(); ++j) {
      RF v = alpha[j - 1](x);
      RF want = RF::constant(dim, j == k ? 1 : 0);
      if (!symb::equal_rf(v, want)) bad = diff_note("alpha^" + std::to_string(j) + "(X~_" + std::to_string(k) + ")", v, want);
    }
  }
  record("(4) X~ is horizontal for the pulled-back omega with alpha(X~) = 1", bad);
  return report;
}

}  // namespace cm::geometry
