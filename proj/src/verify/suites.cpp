#include <algorithm>
#include <chrono>
#include <functional>
#include <numeric>
#include <stdexcept>

#include "cm/crossed.hpp"
#include "cm/geometry.hpp"
#include "cm/trees.hpp"
#include "cm/verify.hpp"

namespace cm::verify {

using hopf::Generator;
using hopf::IndexString;
using hopf::Monomial;
using K = Generator::Kind;
using hopf::Rational;

bool Report::passed() const {
  return std::all_of(items.begin(), items.end(), [](const Item& i) { return i.passed; });
}

namespace {

using Clock = std::chrono::steady_clock;

struct Outcome {
  bool passed = true;
  std::string detail;
  void fail(const std::string& what) {
    if (passed) detail = what;
    passed = false;
  }
};

class Runner {
 public:
  explicit Runner(Report& r) : r_(r) {}
  void item(const std::string& name, const std::function<Outcome()>& body) {
    auto t0 = Clock::now();
    Item it;
    it.name = name;
    try {
      Outcome o = body();
      it.passed = o.passed;
      it.detail = o.detail;
    } catch (const std::exception& e) {
      it.passed = false;
      it.detail = std::string("exception: ") + e.what();
    }
    it.seconds = std::chrono::duration<double>(Clock::now() - t0).count();
    r_.items.push_back(std::move(it));
  }

 private:
  Report& r_;
};

std::string word_str(const std::vector<Generator>& w) { return hopf::str(Monomial(w)); }

HopfPoly word_product(const std::vector<Generator>& w) {
  HopfPoly p = HopfPoly::unit();
  for (Generator g : w) p = p * HopfPoly::gen(g);
  return p;
}

std::vector<Generator> deltas(int dim, int min_tail, int max_tail) {
  std::vector<Generator> out;
  for (Generator g : generators(dim, max_tail))
    if (g.kind() == K::Delta && g.tail_length() >= min_tail) out.push_back(g);
  return out;
}

// ---------------------------------------------------------------- hopf

void hopf_suite(Runner& run, const Config& c) {
  const int n = c.dim;

  run.item("commutator table is antisymmetric", [&] {
    Outcome o;
    auto gens = generators(n, std::min(c.max_tail, 2));
    for (Generator a : gens)
      for (Generator b : gens)
        if (!(hopf::commutator_table(a, b) == -hopf::commutator_table(b, a)))
          o.fail("[" + hopf::str(a) + ", " + hopf::str(b) + "]");
    return o;
  });

  run.item("Jacobi identity on generator triples", [&] {
    Outcome o;
    auto gens = generators(n, std::min(c.max_tail, 1));
    for (Generator a : gens)
      for (Generator b : gens)
        for (Generator g : gens) {
          HopfPoly A = HopfPoly::gen(a), B = HopfPoly::gen(b), G = HopfPoly::gen(g);
          HopfPoly s = hopf::commutator(A, hopf::commutator(B, G)) + hopf::commutator(B, hopf::commutator(G, A)) +
                       hopf::commutator(G, hopf::commutator(A, B));
          if (!s.is_zero()) o.fail(hopf::str(a) + ", " + hopf::str(b) + ", " + hopf::str(g));
        }
    return o;
  });

  run.item("[Y, delta] recursion equals the closed form", [&] {
    Outcome o;
    for (Generator d : deltas(n, 0, c.max_tail))
      for (int p = 1; p <= n; ++p)
        for (int q = 1; q <= n; ++q) {
          Generator y = Generator::y(p, q);
          if (!(hopf::commutator_table(y, d) == hopf::y_delta_closed_form(y, d)))
            o.fail("[" + hopf::str(y) + ", " + hopf::str(d) + "]");
        }
    return o;
  });

  run.item("normal form is confluent on random words", [&] {
    Outcome o;
    random::Rng rng(c.seed);
    std::uniform_int_distribution<int> len(1, 4);
    for (int t = 0; t < 50; ++t) {
      auto w = random_word(rng, n, len(rng), std::min(c.max_tail, 2));
      HopfPoly straight = hopf::normal_form(hopf::Word{1, w});
      HopfPoly left = word_product(w);
      HopfPoly right = HopfPoly::unit();
      for (auto it = w.rbegin(); it != w.rend(); ++it) right = HopfPoly::gen(*it) * right;
      if (!(straight == left) || !(left == right)) o.fail(word_str(w));
    }
    return o;
  });

  run.item("coproduct respects every bracket", [&] {
    Outcome o;
    auto gens = generators(n, std::min(c.max_tail, 1));
    for (Generator a : gens)
      for (Generator b : gens) {
        hopf::TensorPoly lhs = hopf::coproduct(hopf::commutator_table(a, b), n);
        hopf::TensorPoly rhs = hopf::commutator(hopf::coproduct(a, n), hopf::coproduct(b, n), n);
        if (!(lhs == rhs)) o.fail("Delta[" + hopf::str(a) + ", " + hopf::str(b) + "]");
      }
    return o;
  });

  run.item("coproduct is multiplicative on random words", [&] {
    Outcome o;
    random::Rng rng(c.seed + 1);
    std::uniform_int_distribution<int> len(1, 2);
    for (int t = 0; t < 20; ++t) {
      auto w1 = random_word(rng, n, len(rng), 1);
      auto w2 = random_word(rng, n, len(rng), 1);
      std::vector<Generator> w = w1;
      w.insert(w.end(), w2.begin(), w2.end());
      hopf::TensorPoly lhs = hopf::coproduct(hopf::normal_form(hopf::Word{1, w}), n);
      hopf::TensorPoly rhs =
          hopf::multiply(hopf::coproduct(word_product(w1), n), hopf::coproduct(word_product(w2), n), n);
      if (!(lhs == rhs)) o.fail(word_str(w1) + " | " + word_str(w2));
    }
    return o;
  });

  auto axioms = [&](const std::string& what, const std::function<bool(const HopfPoly&)>& check) {
    run.item(what + " on all generators, |a| <= " + std::to_string(c.max_tail), [&] {
      Outcome o;
      for (Generator g : generators(n, c.max_tail))
        if (!check(HopfPoly::gen(g))) o.fail(hopf::str(g));
      return o;
    });
    run.item(what + " on 100 random PBW monomials", [&] {
      Outcome o;
      random::Rng rng(c.seed + 2);
      for (int t = 0; t < 100; ++t) {
        Monomial m = random_pbw_monomial(rng, n, c.max_degree, std::min(c.max_tail, 2));
        if (!check(HopfPoly::monomial(m))) o.fail(hopf::str(m));
      }
      return o;
    });
  };
  axioms("coassociativity", [&](const HopfPoly& p) { return hopf::check_coassoc(p, n); });
  axioms("counit axiom", [&](const HopfPoly& p) { return hopf::check_counit(p, n); });
  axioms("antipode axioms", [&](const HopfPoly& p) { return hopf::check_antipode(p, n); });

  run.item("antipode reverses products", [&] {
    Outcome o;
    random::Rng rng(c.seed + 3);
    for (int t = 0; t < 30; ++t) {
      HopfPoly p = HopfPoly::monomial(random_pbw_monomial(rng, n, 2, 1));
      HopfPoly q = HopfPoly::monomial(random_pbw_monomial(rng, n, 2, 1));
      HopfPoly lhs = hopf::antipode(hopf::multiply(p, q, n), n);
      HopfPoly rhs = hopf::multiply(hopf::antipode(q, n), hopf::antipode(p, n), n);
      if (!(lhs == rhs)) o.fail(hopf::str(p) + " | " + hopf::str(q));
    }
    return o;
  });

  run.item("R terms lie in H0_{|a|-1} (x) H0_{|a|-1}", [&] {
    Outcome o;
    for (Generator d : deltas(n, 1, c.max_tail)) {
      try {
        hopf::r_term(d.a(), d.b(), d.c(), d.tail(), n);
      } catch (const hopf::GradingViolation& e) {
        o.fail(e.what());
      }
    }
    return o;
  });

  run.item("coproduct of delta^k_{ji,l} matches the closed formula", [&] {
    Outcome o;
    for (int k = 1; k <= n; ++k)
      for (int j = 1; j <= n; ++j)
        for (int i = 1; i <= n; ++i)
          for (int l = 1; l <= n; ++l)
            if (!(hopf::coproduct(Generator::delta(k, j, i, {l}), n) == hopf::canonical(formula_d2(k, j, i, l, n), n)))
              o.fail(hopf::str(Generator::delta(k, j, i, {l})));
    return o;
  });

  run.item("antipode of delta^k_{ji,l} matches the closed formula", [&] {
    Outcome o;
    for (int k = 1; k <= n; ++k)
      for (int j = 1; j <= n; ++j)
        for (int i = 1; i <= n; ++i)
          for (int l = 1; l <= n; ++l)
            if (!(hopf::antipode(Generator::delta(k, j, i, {l}), n) == hopf::canonical(formula_sd2(k, j, i, l, n), n)))
              o.fail(hopf::str(Generator::delta(k, j, i, {l})));
    return o;
  });
}

// ---------------------------------------------------------------- trees

void trees_suite(Runner& run, const Config& c) {
  const int n = c.dim;
  const int count_tail = std::max(c.max_tail, 4);

  run.item("tree expansion has |a|! trees with multiplicity, |a| <= " + std::to_string(count_tail), [&] {
    Outcome o;
    long f = 1;
    for (int len = 0; len <= count_tail; ++len) {
      if (len) f *= len;
      IndexString t(len);
      for (int p = 0; p < len; ++p) t[p] = 1 + p % n;
      if (trees::tree_expand(1, 1, n, t).total() != f) o.fail("|a| = " + std::to_string(len));
    }
    return o;
  });

  run.item("cut enumeration: admissible filter and 2^#edges - 1 cuts", [&] {
    Outcome o;
    IndexString t(4);
    for (int p = 0; p < 4; ++p) t[p] = 1 + p % n;
    for (const auto& [tree, m] : trees::tree_expand(1, 1, 1, t).terms) {
      auto all = trees::cuts(tree, false);
      if (all.size() != (1UL << (tree.size() - 1)) - 1) o.fail("count " + tree.str());
      for (const auto& cut : trees::cuts(tree, true))
        for (int a : cut.edges)
          for (int b : cut.edges)
            for (int v = tree.parent(b); v > 0 && a != b; v = tree.parent(v))
              if (v == a) o.fail("admissible " + tree.str());
    }
    return o;
  });

  run.item("coproduct by cuts equals the recursion, |a| <= " + std::to_string(c.max_tail), [&] {
    Outcome o;
    for (Generator d : deltas(n, 0, c.max_tail))
      if (!(hopf::canonical(trees::coproduct_tree(d.a(), d.b(), d.c(), d.tail(), n), n) == hopf::coproduct(d, n)))
        o.fail(hopf::str(d));
    return o;
  });

  run.item("antipode by cuts equals the recursion, |a| <= " + std::to_string(c.max_tail), [&] {
    Outcome o;
    for (Generator d : deltas(n, 0, c.max_tail))
      if (!(hopf::canonical(trees::antipode_tree(d.a(), d.b(), d.c(), d.tail(), n), n) == hopf::antipode(d, n)))
        o.fail(hopf::str(d));
    return o;
  });

  run.item("every permutation of the tail gives the same delta and coproduct", [&] {
    Outcome o;
    for (Generator d : deltas(n, 2, std::min(c.max_tail, 3))) {
      IndexString t = d.tail();
      HopfPoly value = trees::evaluate(trees::tree_expand(d.a(), d.b(), d.c(), t));
      hopf::TensorPoly co = hopf::canonical(trees::coproduct_tree(d.a(), d.b(), d.c(), t, n), n);
      while (std::next_permutation(t.begin(), t.end())) {
        if (!(trees::evaluate(trees::tree_expand(d.a(), d.b(), d.c(), t)) == value) ||
            !(hopf::canonical(trees::coproduct_tree(d.a(), d.b(), d.c(), t, n), n) == co))
          o.fail(hopf::str(d));
      }
    }
    return o;
  });

  run.item("counit applied to the cut coproduct returns delta", [&] {
    Outcome o;
    for (Generator d : deltas(n, 0, c.max_tail)) {
      hopf::TensorPoly t = trees::coproduct_tree(d.a(), d.b(), d.c(), d.tail(), n);
      HopfPoly left, right;
      for (const auto& [k, v] : t.terms()) {
        if (k[0].empty()) left.add_term(k[1], v);
        if (k[1].empty()) right.add_term(k[0], v);
      }
      if (!(left == HopfPoly::gen(d)) || !(right == HopfPoly::gen(d))) o.fail(hopf::str(d));
    }
    return o;
  });

  run.item("chain(l,m) + fork(l,m) - chain(m,l) - fork(m,l) = 0", [&] {
    Outcome o;
    for (int k = 1; k <= n; ++k)
      for (int j = 1; j <= n; ++j)
        for (int i = j; i <= n; ++i)
          for (int l = 1; l <= n; ++l)
            for (int m = 1; m <= n; ++m)
              if (!trees::check_rel(k, j, i, l, m, n)) o.fail(hopf::str(Generator::delta(k, j, i, {l, m})));
    return o;
  });

  run.item("single cut of t(k;j,i)(l) is the closed coproduct formula", [&] {
    Outcome o;
    for (int k = 1; k <= n; ++k)
      for (int j = 1; j <= n; ++j)
        for (int i = 1; i <= n; ++i)
          for (int l = 1; l <= n; ++l) {
            if (!(trees::coproduct_tree(k, j, i, {l}, n) == formula_d2(k, j, i, l, n)))
              o.fail("coproduct " + hopf::str(Generator::delta(k, j, i, {l})));
            if (!(trees::antipode_tree(k, j, i, {l}, n) == formula_sd2(k, j, i, l, n)))
              o.fail("antipode " + hopf::str(Generator::delta(k, j, i, {l})));
          }
    return o;
  });

  run.item("ordered double cut of the fork gives the nine closed-form terms", [&] {
    Outcome o;
    for (int k = 1; k <= n; ++k)
      for (int j = 1; j <= n; ++j)
        for (int i = 1; i <= n; ++i)
          for (int l = 1; l <= n; ++l)
            for (int m = 1; m <= n; ++m) {
              trees::DecoratedTree fork(k, j, i);
              int vl = fork.attach(0, l), vm = fork.attach(0, m);
              hopf::TensorPoly got;
              for (const auto& t : trees::apply_cut(fork, trees::Cut{{vl, vm}, true}, n))
                got.add_term({t.branches, t.trunk}, t.coeff);
              if (!(got == formula_cut2(k, j, i, l, m, n))) o.fail(fork.str());
            }
    return o;
  });

  run.item("antipode of delta^k_{ji,lm} block by block", [&] {
    Outcome o;
    for (int k = 1; k <= n; ++k)
      for (int j = 1; j <= n; ++j)
        for (int i = 1; i <= n; ++i)
          for (int l = 1; l <= n; ++l)
            for (int m = 1; m <= n; ++m) {
              auto blocks = formula_s_table(k, j, i, l, m, n);
              trees::DecoratedTree chain(k, j, i), fork(k, j, i);
              int cl = chain.attach(0, l), cm = chain.attach(cl, m);
              int fl = fork.attach(0, l), fm = fork.attach(0, m);
              auto block = [&](const trees::DecoratedTree& t, std::vector<int> edges) {
                HopfPoly r;
                Rational sign = edges.size() % 2 ? -1 : 1;
                for (const auto& term : trees::apply_cut(t, trees::Cut{edges, false}, n)) {
                  Monomial mm = term.branches;
                  mm.insert(mm.end(), term.trunk.begin(), term.trunk.end());
                  std::sort(mm.begin(), mm.end());
                  r.add_term(mm, -sign * term.coeff);
                }
                return r;
              };
              std::vector<HopfPoly> got{HopfPoly::gen(Generator::delta(k, j, i, {l, m}), -1),
                                        block(chain, {cm}),
                                        block(chain, {cl}),
                                        block(chain, {cl, cm}),
                                        block(fork, {fl}),
                                        block(fork, {fm}),
                                        block(fork, {fl, fm})};
              HopfPoly sum;
              for (std::size_t b = 0; b < blocks.size(); ++b) {
                if (!(got[b] == blocks[b].value)) o.fail(blocks[b].name + " for " + chain.str());
                sum += got[b];
              }
              Generator d = Generator::delta(k, j, i, {l, m});
              if (!(sum == trees::antipode_tree(k, j, i, {l, m}, n))) o.fail("sum of blocks " + hopf::str(d));
              HopfPoly rec = hopf::commutator(hopf::antipode(Generator::delta(k, j, i, {l}), n),
                                              hopf::antipode(Generator::x(m), n), n);
              if (!(hopf::canonical(sum, n) == rec)) o.fail("recursion " + hopf::str(d));
            }
    return o;
  });
}

// ---------------------------------------------------------------- crossed-product oracle

using crossed::CrossedElement;

CrossedElement random_element(random::Rng& rng, int dim) {
  return CrossedElement::monomial(random::random_function(rng, dim), random::random_diffeo(rng, dim));
}

void oracle_suite(Runner& run, const Config& c) {
  const int n = c.dim;
  const int pairs = 50;

  run.item("multiplication is associative", [&] {
    Outcome o;
    random::Rng rng(c.seed);
    for (int t = 0; t < 20; ++t) {
      auto a = random_element(rng, n), b = random_element(rng, n), e = random_element(rng, n);
      if (!(crossed::multiply(crossed::multiply(a, b), e) == crossed::multiply(a, crossed::multiply(b, e))))
        o.fail(a.str() + " | " + b.str() + " | " + e.str());
    }
    return o;
  });

  run.item("U*_psi1 U*_psi2 = U*_{psi2 o psi1}", [&] {
    Outcome o;
    random::Rng rng(c.seed + 1);
    for (int t = 0; t < 10; ++t) {
      auto p1 = random::random_diffeo(rng, n), p2 = random::random_diffeo(rng, n);
      auto one = symb::RF::constant(n, 1);
      auto prod = crossed::multiply(CrossedElement::monomial(one, p1), CrossedElement::monomial(one, p2));
      if (!(prod == CrossedElement::monomial(one, p2.compose(p1)))) o.fail(p1.str() + " | " + p2.str());
    }
    return o;
  });

  auto leibniz = [&](const std::string& name, std::uint64_t salt,
                     const std::function<std::string(const CrossedElement&, const CrossedElement&)>& check) {
    run.item(name + ", " + std::to_string(pairs) + " random pairs", [&] {
      Outcome o;
      random::Rng rng(c.seed + salt);
      for (int t = 0; t < pairs; ++t) {
        auto a = random_element(rng, n), b = random_element(rng, n);
        std::string bad = check(a, b);
        if (!bad.empty()) o.fail(bad + " on " + a.str() + " | " + b.str());
      }
      return o;
    });
  };
  leibniz("Y is a derivation", 2, [&](const CrossedElement& a, const CrossedElement& b) -> std::string {
    for (int j = 1; j <= n; ++j)
      for (int k = 1; k <= n; ++k)
        if (!crossed::check_leibniz_Y(j, k, a, b)) return "Y(" + std::to_string(j) + "," + std::to_string(k) + ")";
    return "";
  });
  leibniz("X Leibniz rule with the delta (x) Y term", 3,
          [&](const CrossedElement& a, const CrossedElement& b) -> std::string {
            for (int i = 1; i <= n; ++i)
              if (!crossed::check_leibniz_X(i, a, b)) return "X(" + std::to_string(i) + ")";
            return "";
          });
  leibniz("delta is a derivation", 4, [&](const CrossedElement& a, const CrossedElement& b) -> std::string {
    for (int k = 1; k <= n; ++k)
      for (int j = 1; j <= n; ++j)
        for (int i = j; i <= n; ++i)
          if (!crossed::check_leibniz_delta(k, j, i, a, b)) return hopf::str(Generator::delta(k, j, i));
    return "";
  });

  run.item("gamma cocycle identity, 20 random pairs", [&] {
    Outcome o;
    random::Rng rng(c.seed + 5);
    for (int t = 0; t < 20; ++t) {
      auto p1 = random::random_diffeo(rng, n), p2 = random::random_diffeo(rng, n);
      if (!crossed::check_cocycle(p1, p2)) o.fail(p1.str() + " | " + p2.str());
    }
    return o;
  });

  run.item("gamma is symmetric in its lower indices", [&] {
    Outcome o;
    random::Rng rng(c.seed + 6);
    for (int t = 0; t < 5; ++t) {
      auto p = random::random_diffeo(rng, n);
      for (int k = 1; k <= n; ++k)
        for (int j = 1; j <= n; ++j)
          for (int i = 1; i <= n; ++i)
            if (!symb::equal_rf(crossed::gamma_cocycle(p, k, j, i), crossed::gamma_cocycle(p, k, i, j))) o.fail(p.str());
    }
    return o;
  });

  run.item("X operators commute; delta operators commute", [&] {
    Outcome o;
    random::Rng rng(c.seed + 7);
    auto ds = deltas(n, 0, 1);
    for (int t = 0; t < 3; ++t) {
      auto a = random_element(rng, n);
      for (int i = 1; i <= n; ++i)
        for (int j = 1; j <= n; ++j)
          if (!(crossed::act_X(i, crossed::act_X(j, a)) == crossed::act_X(j, crossed::act_X(i, a))))
            o.fail("X" + std::to_string(i) + " X" + std::to_string(j));
      for (Generator d1 : ds)
        for (Generator d2 : ds)
          if (!(crossed::act(d1, crossed::act(d2, a)) == crossed::act(d2, crossed::act(d1, a))))
            o.fail(hopf::str(d1) + " " + hopf::str(d2));
    }
    return o;
  });

  run.item("[Y, delta] acts as the commutator table says", [&] {
    Outcome o;
    random::Rng rng(c.seed + 8);
    auto a = random_element(rng, n);
    for (Generator d : deltas(n, 0, 1))
      for (int p = 1; p <= n; ++p)
        for (int q = 1; q <= n; ++q) {
          Generator y = Generator::y(p, q);
          auto lhs = crossed::act(y, crossed::act(d, a)) - crossed::act(d, crossed::act(y, a));
          if (!(lhs == crossed::act(hopf::commutator_table(y, d), a))) o.fail(hopf::str(y) + ", " + hopf::str(d));
        }
    return o;
  });

  run.item("tail order does not matter: delta_{,lm} = delta_{,ml}", [&] {
    Outcome o;
    random::Rng rng(c.seed + 9);
    auto a = random_element(rng, n);
    for (int k = 1; k <= n; ++k)
      for (int j = 1; j <= n; ++j)
        for (int i = j; i <= n; ++i)
          for (int l = 1; l <= n; ++l)
            for (int m = l + 1; m <= n; ++m)
              if (!(crossed::act_delta(k, j, i, {l, m}, a) == crossed::act_delta(k, j, i, {m, l}, a)))
                o.fail(hopf::str(Generator::delta(k, j, i, {l, m})));
    return o;
  });

  run.item("structure identities hold on the crossed product", [&] {
    Outcome o;
    random::Rng rng(c.seed + 10);
    auto a = random_element(rng, n);
    for (Generator d : deltas(n, 1, 2))
      if (!(crossed::act(d, a) == crossed::act(hopf::canonical_delta(d, n), a))) o.fail(hopf::str(d));
    return o;
  });

  run.item("h(ab) = m(Delta(h)(a (x) b)) for every generator", [&] {
    Outcome o;
    random::Rng rng(c.seed + 11);
    for (int t = 0; t < 3; ++t) {
      auto a = random_element(rng, n), b = random_element(rng, n);
      for (Generator g : generators(n, 2))
        if (!crossed::check_gendelta(HopfPoly::gen(g), a, b)) o.fail(hopf::str(g));
    }
    return o;
  });

  run.item("h(ab) = m(Delta(h)(a (x) b)) for products of two generators", [&] {
    Outcome o;
    random::Rng rng(c.seed + 12);
    auto a = random_element(rng, n), b = random_element(rng, n);
    auto gens = generators(n, n == 1 ? 2 : 0);
    for (Generator g : gens)
      for (Generator h : gens) {
        HopfPoly p = HopfPoly::gen(g) * HopfPoly::gen(h);
        if (!crossed::check_gendelta(p, a, b)) o.fail(hopf::str(g) + " " + hopf::str(h));
      }
    return o;
  });
}

// ---------------------------------------------------------------- geometry

void geometry_suite(Runner& run, const Config& c) {
  const int n = c.dim;
  using geometry::Connection;
  using geometry::PolyDiffeo;

  random::Rng rng(c.seed);
  std::vector<Connection> gammas{Connection::flat(n)};
  for (int t = 0; t < 5; ++t) gammas.push_back(random::random_connection(rng, n));
  std::vector<PolyDiffeo> psis{PolyDiffeo::identity(n)};
  for (int t = 0; t < 5; ++t) psis.push_back(random::random_diffeo(rng, n));

  run.item("frame-bundle transformation laws (1)-(4), flat and 5 random connections x 6 diffeomorphisms", [&] {
    Outcome o;
    for (std::size_t g = 0; g < gammas.size(); ++g)
      for (const auto& psi : psis) {
        auto rep = geometry::check_prop1(gammas[g], psi);
        for (const auto& it : rep.items)
          if (!it.passed) o.fail(it.identity + " (connection " + std::to_string(g) + ", psi " + psi.str() + ")");
      }
    return o;
  });

  run.item("alpha^j(X_i) = delta^j_i and omega(X_i) = 0", [&] {
    Outcome o;
    for (const auto& gamma : gammas) {
      auto alpha = geometry::soldering_form(n);
      auto omega = geometry::connection_form(gamma);
      for (int i = 1; i <= n; ++i) {
        auto x = geometry::horizontal_field(gamma, i);
        for (int j = 1; j <= n; ++j)
          if (!symb::equal_rf(alpha[j - 1](x), symb::RF::constant(n, i == j ? 1 : 0))) o.fail("alpha(X)");
        for (const auto& w : omega)
          if (!w(x).is_zero()) o.fail("omega(X)");
      }
    }
    return o;
  });

  run.item("omega(A#) = A", [&] {
    Outcome o;
    random::Rng r2(c.seed + 1);
    for (int t = 0; t < 3; ++t) {
      auto a = random::random_invertible(r2, n);
      auto field = geometry::fundamental_field(n, a);
      for (const auto& gamma : gammas) {
        auto omega = geometry::connection_form(gamma);
        for (int i = 1; i <= n; ++i)
          for (int j = 1; j <= n; ++j)
            if (!symb::equal_rf(omega[(i - 1) * n + (j - 1)](field), symb::RF::constant(n, a[i - 1][j - 1])))
              o.fail("omega(A#)");
      }
    }
    return o;
  });

  run.item("equivariance of omega under y -> y g", [&] {
    Outcome o;
    random::Rng r2(c.seed + 2);
    for (int t = 0; t < 3; ++t) {
      auto g = random::random_invertible(r2, n);
      for (const auto& gamma : gammas)
        if (!geometry::check_equivariance(gamma, g)) o.fail("equivariance");
    }
    return o;
  });

  run.item("torsion vanishes iff Gamma is symmetric", [&] {
    Outcome o;
    auto zero = [](const std::vector<geometry::TwoForm>& th) {
      return std::all_of(th.begin(), th.end(), [](const geometry::TwoForm& f) { return f.is_zero(); });
    };
    for (const auto& gamma : gammas) {
      Connection sym = gamma;
      for (int mu = 1; mu <= n; ++mu)
        for (int nu = 1; nu <= n; ++nu)
          for (int al = nu; al <= n; ++al) {
            symb::RF avg = (gamma(mu, nu, al) + gamma(mu, al, nu)) * symb::RF::constant(n, Rational(1, 2));
            sym(mu, nu, al) = avg;
            sym(mu, al, nu) = avg;
          }
      if (zero(geometry::torsion_form(gamma)) != gamma.is_symmetric()) o.fail("random connection");
      if (!zero(geometry::torsion_form(sym)) || !sym.is_symmetric()) o.fail("symmetrized connection");
    }
    return o;
  });

  run.item("[X_i, X_j] = R^k_{lij} Y^l_k + Theta^k_{ij} X_k", [&] {
    Outcome o;
    for (const auto& gamma : gammas) {
      auto ct = geometry::curvature_torsion(gamma);
      auto xs = geometry::horizontal_fields(gamma);
      for (int i = 1; i <= n; ++i)
        for (int j = 1; j <= n; ++j) {
          geometry::VectorField want(n);
          for (int k = 1; k <= n; ++k) {
            for (int l = 1; l <= n; ++l) want = want + geometry::vertical_field(n, l, k).scaled(ct.R(k, l, i, j));
            want = want + xs[k - 1].scaled(ct.Theta(k, i, j));
          }
          if (!geometry::equal(geometry::lie_bracket(xs[i - 1], xs[j - 1]), want))
            o.fail("[X" + std::to_string(i) + ", X" + std::to_string(j) + "]");
        }
    }
    return o;
  });

  run.item("vertical and horizontal commutators", [&] {
    Outcome o;
    auto ys = geometry::vertical_fields(n);
    auto y = [&](int a, int b) { return ys[(a - 1) * n + (b - 1)]; };
    for (int i = 1; i <= n; ++i)
      for (int j = 1; j <= n; ++j)
        for (int k = 1; k <= n; ++k)
          for (int l = 1; l <= n; ++l) {
            geometry::VectorField want(n);
            if (i == l) want = want + y(k, j);
            if (k == j) want = want - y(i, l);
            if (!geometry::equal(geometry::lie_bracket(y(i, j), y(k, l)), want)) o.fail("[Y, Y]");
          }
    for (const auto& gamma : gammas)
      for (int k = 1; k <= n; ++k)
        for (int j = 1; j <= n; ++j)
          for (int i = 1; i <= n; ++i) {
            geometry::VectorField want(n);
            if (k == i) want = geometry::horizontal_field(gamma, j);
            if (!geometry::equal(geometry::lie_bracket(y(k, j), geometry::horizontal_field(gamma, i)), want))
              o.fail("[Y, X]");
          }
    return o;
  });

  run.item("pullback of Gamma is a right action", [&] {
    Outcome o;
    for (std::size_t g = 1; g < gammas.size(); ++g) {
      const auto& p1 = psis[g];
      const auto& p2 = psis[(g % (psis.size() - 1)) + 1];
      auto lhs = geometry::pullback_gamma(geometry::pullback_gamma(gammas[g], p2), p1);
      auto rhs = geometry::pullback_gamma(gammas[g], p2.compose(p1));
      if (!geometry::equal(lhs, rhs)) o.fail(p1.str() + " | " + p2.str());
    }
    return o;
  });

  run.item("Lie bracket is antisymmetric and satisfies Jacobi", [&] {
    Outcome o;
    random::Rng r2(c.seed + 3);
    auto field = [&] {
      geometry::VectorField v(n);
      for (auto& f : v.base) f = symb::RF(random::random_polynomial(r2, n, 2, 2, false));
      for (auto& f : v.frame) f = symb::RF(random::random_polynomial(r2, n, 2, 2, false));
      return v;
    };
    for (int t = 0; t < 3; ++t) {
      auto a = field(), b = field(), e = field();
      using geometry::lie_bracket;
      if (!geometry::equal(lie_bracket(a, b), lie_bracket(b, a).scaled(symb::RF::constant(n, -1))))
        o.fail("antisymmetry");
      auto j = lie_bracket(a, lie_bracket(b, e)) + lie_bracket(b, lie_bracket(e, a)) + lie_bracket(e, lie_bracket(a, b));
      if (!j.is_zero()) o.fail("Jacobi");
    }
    return o;
  });
}

}  // namespace

std::vector<std::string> suite_names() { return {"hopf", "trees", "oracle", "geometry", "all"}; }

Report run(const std::string& suite, const Config& config) {
  if (config.dim < 1 || config.dim > symb::kMaxDim)
    throw std::invalid_argument("dim must be in 1.." + std::to_string(symb::kMaxDim));
  if (config.max_tail < 0 || config.max_degree < 0) throw std::invalid_argument("bounds must be non-negative");
  Report r;
  r.suite = suite;
  r.config = config;
  Runner runner(r);
  auto t0 = Clock::now();
  bool all = suite == "all";
  bool known = all;
  if (all || suite == "hopf") hopf_suite(runner, config), known = true;
  if (all || suite == "trees") trees_suite(runner, config), known = true;
  if (all || suite == "oracle") oracle_suite(runner, config), known = true;
  if (all || suite == "geometry") geometry_suite(runner, config), known = true;
  if (!known) throw std::invalid_argument("unknown suite '" + suite + "'");
  r.seconds = std::chrono::duration<double>(Clock::now() - t0).count();
  return r;
}

}  // namespace cm::verify
