// cm: command-line front end for the Hopf algebra engine.
// Exit codes: 0 success, 1 verification failure or method disagreement, 2 usage/parse error.

#include <iostream>
#include <map>
#include <stdexcept>
#include <string>

#include <CLI11.hpp>
#include <json.hpp>

#include "cm/hopf.hpp"
#include "cm/trees.hpp"
#include "cm/verify.hpp"

namespace {

using cm::hopf::Format;
using cm::hopf::Generator;
using cm::hopf::HopfPoly;
using cm::hopf::TensorPoly;
using Json = nlohmann::ordered_json;

struct Session {
  int dim = 2;
  int max_tail = 3;
  int max_degree = 3;
  std::uint64_t seed = 42;
  Format format = Format::Text;
};

// Exit 2, distinct from std::invalid_argument raised by the parsers only in intent.
struct UsageError : std::runtime_error {
  using std::runtime_error::runtime_error;
};

void print(const std::string& s) { std::cout << s << "\n"; }

// A single delta with its coefficient, as required by --via trees and the tree commands.
std::pair<Generator, cm::hopf::Rational> single_delta(const std::string& expr, int dim) {
  HopfPoly p = cm::hopf::parse(expr, dim);
  if (p.terms().size() == 1) {
    const auto& [m, c] = *p.terms().begin();
    if (m.size() == 1 && m[0].kind() == Generator::Kind::Delta) return {m[0], c};
  }
  throw UsageError("expected a single delta generator, got '" + expr + "'");
}

template <typename T>
T scaled(T t, const cm::hopf::Rational& c) {
  t *= c;
  return t;
}

template <typename T>
int report_methods(const Session& s, const T& by_trees, const T& by_recursion) {
  T diff = cm::hopf::canonical(by_trees, s.dim);
  diff -= by_recursion;
  bool agree = diff.is_zero();
  if (s.format == Format::Json) {
    Json j;
    j["trees"] = Json::parse(cm::hopf::json(by_trees));
    j["recursion"] = Json::parse(cm::hopf::json(by_recursion));
    j["agree"] = agree;
    if (!agree) j["difference"] = Json::parse(cm::hopf::json(diff));
    print(j.dump(2));
  } else {
    print("trees:     " + cm::hopf::render(by_trees, s.format));
    print("recursion: " + cm::hopf::render(by_recursion, s.format));
    if (agree) {
      print("methods agree");
    } else {
      print("METHODS DISAGREE");
      print("trees - recursion: " + cm::hopf::render(diff, s.format));
    }
  }
  return agree ? 0 : 1;
}

int cmd_nf(const Session& s, const std::string& expr) {
  print(cm::hopf::render(cm::hopf::canonical(cm::hopf::normal_form(cm::hopf::parse_words(expr, s.dim)), s.dim),
                         s.format));
  return 0;
}

int cmd_coproduct(const Session& s, const std::string& expr, const std::string& via, bool check) {
  if (check || via == "trees") {
    auto [g, c] = single_delta(expr, s.dim);
    TensorPoly t = scaled(cm::trees::coproduct_tree(g.a(), g.b(), g.c(), g.tail(), s.dim), c);
    if (check) return report_methods(s, t, cm::hopf::coproduct(cm::hopf::parse(expr, s.dim), s.dim));
    print(cm::hopf::render(t, s.format));
    return 0;
  }
  print(cm::hopf::render(cm::hopf::coproduct(cm::hopf::parse(expr, s.dim), s.dim), s.format));
  return 0;
}

int cmd_antipode(const Session& s, const std::string& expr, const std::string& via, bool check) {
  if (check || via == "trees") {
    auto [g, c] = single_delta(expr, s.dim);
    HopfPoly t = scaled(cm::trees::antipode_tree(g.a(), g.b(), g.c(), g.tail(), s.dim), c);
    if (check) return report_methods(s, t, cm::hopf::antipode(cm::hopf::parse(expr, s.dim), s.dim));
    print(cm::hopf::render(t, s.format));
    return 0;
  }
  print(cm::hopf::render(cm::hopf::antipode(cm::hopf::parse(expr, s.dim), s.dim), s.format));
  return 0;
}

int cmd_trees(const Session& s, const std::string& expr) {
  auto [g, c] = single_delta(expr, s.dim);
  cm::trees::TreeSum sum = cm::trees::tree_expand(g.a(), g.b(), g.c(), g.tail());
  if (s.format == Format::Json) {
    Json j;
    j["generator"] = cm::hopf::str(g);
    j["total"] = sum.total();
    j["trees"] = Json::array();
    for (const auto& [t, m] : sum.terms)
      j["trees"].push_back({{"multiplicity", m}, {"tree", Json::parse(cm::trees::json(t))}});
    print(j.dump(2));
    return 0;
  }
  if (s.format == Format::Latex) {
    for (const auto& [t, m] : sum.terms) print("% multiplicity " + std::to_string(m) + "\n" + cm::trees::latex(t));
    return 0;
  }
  print(cm::hopf::str(g) + ": " + std::to_string(sum.total()) + " trees with multiplicity");
  for (const auto& [t, m] : sum.terms) {
    print(std::to_string(m) + " x " + t.str());
    print(cm::trees::ascii(t));
  }
  return 0;
}

std::string edge_names(const cm::trees::DecoratedTree& t, const cm::trees::Cut& c) {
  std::string s = "{";
  for (std::size_t e = 0; e < c.edges.size(); ++e)
    s += (e ? ", " : "") + std::to_string(c.edges[e]) + ":" + std::to_string(t.index(c.edges[e]));
  return s + "}";
}

int cmd_cuts(const Session& s, const std::string& text, bool admissible_only) {
  cm::trees::DecoratedTree t = cm::trees::parse_tree(text, s.dim);
  auto cuts = cm::trees::cuts(t, admissible_only);
  auto terms = [&](const cm::trees::Cut& c) {
    TensorPoly r;
    for (const auto& term : cm::trees::apply_cut(t, c, s.dim)) r.add_term({term.branches, term.trunk}, term.coeff);
    return r;
  };
  if (s.format == Format::Json) {
    Json j;
    j["tree"] = Json::parse(cm::trees::json(t));
    j["cuts"] = Json::array();
    for (const auto& c : cuts)
      j["cuts"].push_back(
          {{"edges", c.edges}, {"admissible", c.admissible}, {"terms", Json::parse(cm::hopf::json(terms(c)))}});
    print(j.dump(2));
    return 0;
  }
  if (s.format == Format::Text) print(cm::trees::ascii(t));
  for (const auto& c : cuts) {
    std::string head = edge_names(t, c) + (c.admissible ? " admissible" : " non-admissible");
    if (s.format == Format::Latex) head = "% " + head;
    print(head);
    print("  " + cm::hopf::render(terms(c), s.format));
  }
  return 0;
}

int cmd_verify(const Session& s, const std::string& suite) {
  cm::verify::Config c{s.dim, s.max_tail, s.max_degree, s.seed};
  cm::verify::Report r;
  try {
    r = cm::verify::run(suite, c);
  } catch (const std::invalid_argument& e) {
    throw UsageError(e.what());
  }
  std::cout << (s.format == Format::Json ? cm::verify::render_json(r) + "\n" : cm::verify::render_text(r));
  return r.passed() ? 0 : 1;
}

}  // namespace

int main(int argc, char** argv) {
  CLI::App app{"Exact computations in the Hopf algebra of transverse differential operators"};
  app.require_subcommand(1);
  Session s;
  std::string format = "text";
  const std::map<std::string, Format> formats{{"text", Format::Text}, {"latex", Format::Latex}, {"json", Format::Json}};
  app.add_option("--dim", s.dim, "Dimension n")->check(CLI::Range(1, 9));
  app.add_option("--format", format, "Output format")->check(CLI::IsMember({"text", "latex", "json"}));
  app.add_option("--seed", s.seed, "Seed for randomized suites");
  app.add_option("--max-tail", s.max_tail, "Largest tail length in verify suites")->check(CLI::NonNegativeNumber);
  app.add_option("--max-degree", s.max_degree, "Largest PBW degree in verify suites")->check(CLI::NonNegativeNumber);

  std::string expr, via = "recursion", suite;
  bool check = false, admissible_only = false;
  auto method_opts = [&](CLI::App* sub) {
    sub->add_option("expr", expr, "Expression")->required();
    sub->add_option("--via", via, "Method")->check(CLI::IsMember({"trees", "recursion"}));
    sub->add_flag("--check-agree", check, "Run both methods and compare");
  };
  auto* nf = app.add_subcommand("nf", "PBW normal form");
  nf->add_option("expr", expr, "Expression")->required();
  auto* co = app.add_subcommand("coproduct", "Coproduct");
  method_opts(co);
  auto* an = app.add_subcommand("antipode", "Antipode");
  method_opts(an);
  auto* tr = app.add_subcommand("trees", "Tree expansion of a delta");
  tr->add_option("expr", expr, "A delta generator, e.g. d(1;1,2;1 2)")->required();
  auto* cu = app.add_subcommand("cuts", "Cuts of a tree");
  cu->add_option("tree", expr, "A tree, e.g. t(1;1,2)(1)(2)")->required();
  cu->add_flag("--admissible", admissible_only, "Only admissible cuts");
  auto* ve = app.add_subcommand("verify", "Run a verification suite");
  ve->add_option("suite", suite, "hopf | trees | oracle | geometry | all")
      ->required()
      ->check(CLI::IsMember(cm::verify::suite_names()));
  for (auto* sub : {nf, co, an, tr, cu, ve}) sub->fallthrough();

  try {
    app.parse(argc, argv);
  } catch (const CLI::ParseError& e) {
    int code = app.exit(e);
    return code == 0 ? 0 : 2;
  }
  s.format = formats.at(format);

  try {
    if (*nf) return cmd_nf(s, expr);
    if (*co) return cmd_coproduct(s, expr, via, check);
    if (*an) return cmd_antipode(s, expr, via, check);
    if (*tr) return cmd_trees(s, expr);
    if (*cu) return cmd_cuts(s, expr, admissible_only);
    if (*ve) return cmd_verify(s, suite);
  } catch (const std::out_of_range& e) {
    std::cerr << "error: " << e.what() << "\n";
    return 2;
  } catch (const std::invalid_argument& e) {
    std::cerr << "error: " << e.what() << "\n";
    return 2;
  } catch (const UsageError& e) {
    std::cerr << "error: " << e.what() << "\n";
    return 2;
  }
  return 2;
}
