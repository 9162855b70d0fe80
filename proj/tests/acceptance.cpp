// Acceptance criteria AC1-AC11: one PASS/FAIL line each, exact arithmetic throughout.
// Exit status is the number of failed criteria (capped at 1).

#include <chrono>
#include <cstdio>
#include <functional>
#include <string>

#include "cm/crossed.hpp"
#include "cm/geometry.hpp"
#include "cm/hopf.hpp"
#include "cm/random.hpp"
#include "cm/trees.hpp"
#include "cm/verify.hpp"

using namespace cm;
using hopf::Generator;
using hopf::HopfPoly;
using hopf::IndexString;
using hopf::Monomial;
using hopf::TensorPoly;

namespace {

struct Result {
  bool ok = true;
  std::string detail;
  void fail(const std::string& what) {
    if (ok) detail = what;
    ok = false;
  }
};

int failures = 0;

void criterion(const char* id, const char* what, const std::function<Result()>& body) {
  auto t0 = std::chrono::steady_clock::now();
  Result r;
  try {
    r = body();
  } catch (const std::exception& e) {
    r.fail(std::string("exception: ") + e.what());
  }
  double s = std::chrono::duration<double>(std::chrono::steady_clock::now() - t0).count();
  std::printf("%s %s  %s  (%.2f s)\n", id, r.ok ? "PASS" : "FAIL", what, s);
  if (!r.ok) {
    std::printf("    first failure: %s\n", r.detail.c_str());
    ++failures;
  }
  std::fflush(stdout);
}

Generator d(int k, int j, int i, IndexString t = {}) { return Generator::delta(k, j, i, std::move(t)); }
HopfPoly G(Generator g) { return HopfPoly::gen(g); }

template <typename F>
void for_indices(int n, int count, F f) {
  std::vector<int> idx(count, 1);
  while (true) {
    f(idx);
    int p = count - 1;
    while (p >= 0 && idx[p] == n) idx[p--] = 1;
    if (p < 0) return;
    ++idx[p];
  }
}

std::vector<Generator> deltas(int n, int max_tail) {
  std::vector<Generator> out;
  for (Generator g : verify::generators(n, max_tail))
    if (g.kind() == Generator::Kind::Delta) out.push_back(g);
  return out;
}

crossed::CrossedElement random_element(random::Rng& rng, int n) {
  return crossed::CrossedElement::monomial(random::random_function(rng, n), random::random_diffeo(rng, n));
}

}  // namespace

int main() {
  criterion("AC1", "coproduct of delta^k_{ji,l} = five-term formula, by recursion and by cuts, dim 2 and 3", [] {
    Result r;
    for (int n = 2; n <= 3; ++n)
      for_indices(n, 4, [&](const std::vector<int>& v) {
        TensorPoly want = verify::formula_d2(v[0], v[1], v[2], v[3], n);
        Generator g = d(v[0], v[1], v[2], {v[3]});
        if (!(trees::coproduct_tree(v[0], v[1], v[2], {v[3]}, n) == want)) r.fail("cuts " + hopf::str(g));
        if (!(hopf::coproduct(g, n) == hopf::canonical(want, n))) r.fail("recursion " + hopf::str(g));
      });
    return r;
  });

  criterion("AC2", "antipode of delta^k_{ji,l} = four-term formula, by recursion and by cuts, dim 2 and 3", [] {
    Result r;
    for (int n = 2; n <= 3; ++n)
      for_indices(n, 4, [&](const std::vector<int>& v) {
        HopfPoly want = verify::formula_sd2(v[0], v[1], v[2], v[3], n);
        Generator g = d(v[0], v[1], v[2], {v[3]});
        if (!(trees::antipode_tree(v[0], v[1], v[2], {v[3]}, n) == want)) r.fail("cuts " + hopf::str(g));
        if (!(hopf::antipode(g, n) == hopf::canonical(want, n))) r.fail("recursion " + hopf::str(g));
      });
    return r;
  });

  criterion("AC3", "ordered double cut of the fork = nine closed-form terms, term for term, dim 2", [] {
    Result r;
    const int n = 2;
    for_indices(n, 5, [&](const std::vector<int>& v) {
      trees::DecoratedTree fork(v[0], v[1], v[2]);
      int a = fork.attach(0, v[3]), b = fork.attach(0, v[4]);
      TensorPoly got;
      for (const auto& t : trees::apply_cut(fork, trees::Cut{{a, b}, true}, n))
        got.add_term({t.branches, t.trunk}, t.coeff);
      if (!(got == verify::formula_cut2(v[0], v[1], v[2], v[3], v[4], n))) r.fail(fork.str());
    });
    return r;
  });

  criterion("AC4", "S(delta^k_{ji,lm}) block for block, and equal to [S(delta^k_{ji,l}), S(X_m)], dim 2", [] {
    Result r;
    const int n = 2;
    for_indices(n, 5, [&](const std::vector<int>& v) {
      int k = v[0], j = v[1], i = v[2], l = v[3], m = v[4];
      trees::DecoratedTree chain(k, j, i), fork(k, j, i);
      int cl = chain.attach(0, l), cm = chain.attach(cl, m);
      int fl = fork.attach(0, l), fm = fork.attach(0, m);
      auto block = [&](const trees::DecoratedTree& t, std::vector<int> edges) {
        HopfPoly b;
        hopf::Rational sign = edges.size() % 2 ? 1 : -1;  // -(-1)^|C|
        for (const auto& term : trees::apply_cut(t, trees::Cut{edges, false}, n)) {
          Monomial mm = term.branches;
          mm.insert(mm.end(), term.trunk.begin(), term.trunk.end());
          std::sort(mm.begin(), mm.end());
          b.add_term(mm, sign * term.coeff);
        }
        return b;
      };
      std::vector<HopfPoly> got{-G(d(k, j, i, {l, m})),   block(chain, {cm}),    block(chain, {cl}),
                                block(chain, {cl, cm}), block(fork, {fl}),     block(fork, {fm}),
                                block(fork, {fl, fm})};
      auto want = verify::formula_s_table(k, j, i, l, m, n);
      HopfPoly sum;
      for (std::size_t b = 0; b < want.size(); ++b) {
        if (!(got[b] == want[b].value)) r.fail(want[b].name + " of " + hopf::str(d(k, j, i, {l, m})));
        sum += want[b].value;
      }
      if (!(sum == trees::antipode_tree(k, j, i, {l, m}, n))) r.fail("cut antipode " + hopf::str(d(k, j, i, {l, m})));
      HopfPoly rec =
          hopf::commutator(hopf::antipode(d(k, j, i, {l}), n), hopf::antipode(Generator::x(m), n), n);
      if (!(hopf::canonical(sum, n) == rec)) r.fail("recursion " + hopf::str(d(k, j, i, {l, m})));
    });
    return r;
  });

  criterion("AC5", "chain(l,m) + fork(l,m) - chain(m,l) - fork(m,l) = 0, dim <= 3; tail symmetry on the crossed product, dim <= 2",
            [] {
              Result r;
              for (int n = 1; n <= 3; ++n)
                for_indices(n, 5, [&](const std::vector<int>& v) {
                  if (!trees::check_rel(v[0], v[1], v[2], v[3], v[4], n))
                    r.fail("trees " + hopf::str(d(v[0], v[1], v[2], {v[3], v[4]})));
                });
              for (int n = 1; n <= 2; ++n) {
                random::Rng rng(42 + n);
                for (int t = 0; t < 3; ++t) {
                  auto a = random_element(rng, n);
                  for_indices(n, 5, [&](const std::vector<int>& v) {
                    if (!(crossed::act_delta(v[0], v[1], v[2], {v[3], v[4]}, a) ==
                          crossed::act_delta(v[0], v[1], v[2], {v[4], v[3]}, a)))
                      r.fail("crossed " + hopf::str(d(v[0], v[1], v[2], {v[3], v[4]})));
                  });
                }
              }
              return r;
            });

  criterion("AC6", "coassociativity, counit and antipode axioms: all generators with |a| <= 3 and 100 random PBW monomials of degree <= 3, dim <= 2",
            [] {
              Result r;
              for (int n = 1; n <= 2; ++n) {
                auto check = [&](const HopfPoly& p) {
                  if (!hopf::check_coassoc(p, n)) r.fail("coassociativity " + hopf::str(p));
                  if (!hopf::check_counit(p, n)) r.fail("counit " + hopf::str(p));
                  if (!hopf::check_antipode(p, n)) r.fail("antipode " + hopf::str(p));
                };
                for (Generator g : verify::generators(n, 3)) check(G(g));
                random::Rng rng(42);
                for (int t = 0; t < 100; ++t) check(HopfPoly::monomial(verify::random_pbw_monomial(rng, n, 3, 3)));
              }
              return r;
            });

  criterion("AC7", "R terms lie in H0_{|a|-1} (x) H0_{|a|-1}, |a| <= 3, dim <= 2", [] {
    Result r;
    for (int n = 1; n <= 2; ++n)
      for (Generator g : deltas(n, 3)) {
        try {
          hopf::r_term(g.a(), g.b(), g.c(), g.tail(), n);
        } catch (const hopf::GradingViolation& e) {
          r.fail(e.what());
        }
      }
    return r;
  });

  criterion("AC8", "cuts = recursion for coproduct and antipode, |a| <= 3, dim <= 2; |a|! trees with multiplicity, |a| <= 4",
            [] {
              Result r;
              for (int n = 1; n <= 2; ++n)
                for (Generator g : deltas(n, 3)) {
                  if (!(hopf::canonical(trees::coproduct_tree(g.a(), g.b(), g.c(), g.tail(), n), n) ==
                        hopf::coproduct(g, n)))
                    r.fail("coproduct " + hopf::str(g));
                  if (!(hopf::canonical(trees::antipode_tree(g.a(), g.b(), g.c(), g.tail(), n), n) ==
                        hopf::antipode(g, n)))
                    r.fail("antipode " + hopf::str(g));
                }
              long f = 1;
              for (int len = 0; len <= 4; ++len) {
                if (len) f *= len;
                for_indices(2, len, [&](const std::vector<int>& t) {
                  if (trees::tree_expand(1, 1, 2, t).total() != f) r.fail("count for |a| = " + std::to_string(len));
                });
              }
              return r;
            });

  criterion("AC9", "Leibniz rules (50 pairs), gamma cocycle (20 pairs), Delta realized on generators and products of two, dim 1 and 2",
            [] {
              Result r;
              for (int n = 1; n <= 2; ++n) {
                random::Rng rng(42);
                for (int t = 0; t < 50; ++t) {
                  auto a = random_element(rng, n), b = random_element(rng, n);
                  for (int i = 1; i <= n; ++i)
                    if (!crossed::check_leibniz_X(i, a, b)) r.fail("X rule, dim " + std::to_string(n));
                  for (int j = 1; j <= n; ++j)
                    for (int k = 1; k <= n; ++k)
                      if (!crossed::check_leibniz_Y(j, k, a, b)) r.fail("Y rule, dim " + std::to_string(n));
                  for_indices(n, 3, [&](const std::vector<int>& v) {
                    if (!crossed::check_leibniz_delta(v[0], v[1], v[2], a, b)) r.fail("delta rule, dim " + std::to_string(n));
                  });
                }
                for (int t = 0; t < 20; ++t)
                  if (!crossed::check_cocycle(random::random_diffeo(rng, n), random::random_diffeo(rng, n)))
                    r.fail("cocycle, dim " + std::to_string(n));
                auto a = random_element(rng, n), b = random_element(rng, n);
                for (Generator g : verify::generators(n, 3))
                  if (!crossed::check_gendelta(G(g), a, b)) r.fail("gendelta " + hopf::str(g));
                auto gens = verify::generators(n, 1);
                for (Generator g : gens)
                  for (Generator h : gens)
                    if (!crossed::check_gendelta(G(g) * G(h), a, b)) r.fail("gendelta " + hopf::str(g) + " " + hopf::str(h));
              }
              return r;
            });

  criterion("AC10", "frame-bundle transformation laws (1)-(4), torsion iff asymmetric, [X_i, X_j] = R Y + Theta X, dim 2", [] {
    Result r;
    verify::Config c;
    c.dim = 2;
    for (const auto& it : verify::run("geometry", c).items)
      if (!it.passed) r.fail(it.name + ": " + it.detail);
    return r;
  });

  criterion("AC11", "dim 1: Delta(d2) = d2 (x) 1 + 1 (x) d2 + d1 (x) d1, ladder coproducts, trees = recursion", [] {
    Result r;
    auto dn = [](int m) { return G(d(1, 1, 1, IndexString(m - 1, 1))); };
    HopfPoly u = HopfPoly::unit();
    if (!(hopf::coproduct(dn(2), 1) == hopf::tensor(dn(2), u) + hopf::tensor(u, dn(2)) + hopf::tensor(dn(1), dn(1))))
      r.fail("Delta(d2)");
    TensorPoly three = hopf::tensor(dn(1), dn(2));
    three *= 3;
    TensorPoly d3 = hopf::tensor(dn(3), u) + hopf::tensor(u, dn(3)) + hopf::tensor(dn(2), dn(1)) + three +
                    hopf::tensor(dn(1) * dn(1), dn(1));
    if (!(hopf::coproduct(dn(3), 1) == d3)) r.fail("Delta(d3)");
    for (int m = 1; m <= 5; ++m) {
      IndexString t(m - 1, 1);
      if (!(trees::coproduct_tree(1, 1, 1, t, 1) == hopf::coproduct(d(1, 1, 1, t), 1))) r.fail("cuts d" + std::to_string(m));
      if (!(trees::antipode_tree(1, 1, 1, t, 1) == hopf::antipode(d(1, 1, 1, t), 1))) r.fail("cuts S(d" + std::to_string(m) + ")");
      if (!(hopf::commutator_table(Generator::x(1), d(1, 1, 1, t)) == dn(m + 1))) r.fail("[X, d" + std::to_string(m) + "]");
      if (!(hopf::commutator_table(Generator::y(1, 1), d(1, 1, 1, t)) == HopfPoly::gen(d(1, 1, 1, t), m)))
        r.fail("[Y, d" + std::to_string(m) + "]");
    }
    return r;
  });

  std::printf("%s  %d of 11 criteria failed\n", failures ? "FAIL" : "PASS", failures);
  return failures ? 1 : 0;
}
