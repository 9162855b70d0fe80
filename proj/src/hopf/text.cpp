#include <algorithm>
#include <cctype>
#include <sstream>

#include <json.hpp>

#include "cm/hopf.hpp"

namespace cm::hopf {

using K = Generator::Kind;

namespace {

std::string tail_str(const IndexString& t, const char* sep) {
  std::string s;
  for (std::size_t p = 0; p < t.size(); ++p) {
    if (p) s += sep;
    s += std::to_string(t[p]);
  }
  return s;
}

std::string latex_rational(const Rational& q) {
  if (q.get_den() == 1) return q.get_num().get_str();
  return "\\frac{" + q.get_num().get_str() + "}{" + q.get_den().get_str() + "}";
}

std::string latex(const Monomial& m) {
  if (m.empty()) return "1";
  std::string s;
  for (std::size_t k = 0; k < m.size();) {
    std::size_t run = 1;
    while (k + run < m.size() && m[k + run] == m[k]) ++run;
    s += latex(m[k]);
    if (run > 1) s += "^{" + std::to_string(run) + "}";
    k += run;
  }
  return s;
}

// Shared layout for sums: "a + b - 2 c", leading minus glued to the first term.
template <typename Item, typename Body>
std::string join_terms(const std::vector<std::pair<Item, Rational>>& terms, Body body, bool latex_mode) {
  if (terms.empty()) return "0";
  std::string s;
  bool first = true;
  for (const auto& [item, c] : terms) {
    Rational a = abs(c);
    if (first) {
      if (c < 0) s += "-";
    } else {
      s += c < 0 ? " - " : " + ";
    }
    first = false;
    std::string b = body(item);
    if (b == "1") {
      s += latex_mode ? latex_rational(a) : a.get_str();
    } else {
      if (a != 1) s += (latex_mode ? latex_rational(a) : a.get_str()) + " ";
      s += b;
    }
  }
  return s;
}

std::vector<std::pair<Monomial, Rational>> sorted_terms(const HopfPoly& p) {
  std::vector<std::pair<Monomial, Rational>> v(p.terms().begin(), p.terms().end());
  std::stable_sort(v.begin(), v.end(), [](const auto& a, const auto& b) { return print_order(a.first, b.first); });
  return v;
}

using Pair = std::array<Monomial, 2>;

std::vector<std::pair<Pair, Rational>> sorted_terms(const TensorPoly& t) {
  std::vector<std::pair<Pair, Rational>> v(t.terms().begin(), t.terms().end());
  std::stable_sort(v.begin(), v.end(), [](const auto& a, const auto& b) {
    std::size_t da = a.first[0].size() + a.first[1].size(), db = b.first[0].size() + b.first[1].size();
    if (da != db) return da > db;
    return a.first < b.first;
  });
  return v;
}

nlohmann::json json_gen(Generator g) {
  switch (g.kind()) {
    case K::X:
      return {{"gen", "X"}, {"i", g.a()}};
    case K::Y:
      return {{"gen", "Y"}, {"upper", g.a()}, {"lower", g.b()}};
    case K::Delta:
      return {{"gen", "d"}, {"upper", g.a()}, {"lower", {g.b(), g.c()}}, {"tail", g.tail()}};
  }
  return {};
}

nlohmann::json json_mono(const Monomial& m) {
  nlohmann::json a = nlohmann::json::array();
  for (Generator g : m) a.push_back(json_gen(g));
  return a;
}

}  // namespace

std::string str(Generator g) {
  switch (g.kind()) {
    case K::X:
      return "X(" + std::to_string(g.a()) + ")";
    case K::Y:
      return "Y(" + std::to_string(g.a()) + "," + std::to_string(g.b()) + ")";
    case K::Delta: {
      std::string s = "d(" + std::to_string(g.a()) + ";" + std::to_string(g.b()) + "," + std::to_string(g.c());
      if (g.tail_length()) s += ";" + tail_str(g.tail(), " ");
      return s + ")";
    }
  }
  return {};
}

std::string latex(Generator g) {
  switch (g.kind()) {
    case K::X:
      return "X_{" + std::to_string(g.a()) + "}";
    case K::Y:
      return "Y^{" + std::to_string(g.a()) + "}_{" + std::to_string(g.b()) + "}";
    case K::Delta: {
      std::string s = "\\delta^{" + std::to_string(g.a()) + "}_{" + std::to_string(g.b()) + std::to_string(g.c());
      if (g.tail_length()) s += "," + tail_str(g.tail(), "");
      return s + "}";
    }
  }
  return {};
}

std::string str(const Monomial& m) {
  if (m.empty()) return "1";
  std::string s;
  for (std::size_t k = 0; k < m.size(); ++k) s += (k ? " " : "") + str(m[k]);
  return s;
}

std::string str(const HopfPoly& p) {
  return join_terms(sorted_terms(p), [](const Monomial& m) { return str(m); }, false);
}

std::string latex(const HopfPoly& p) {
  return join_terms(sorted_terms(p), [](const Monomial& m) { return latex(m); }, true);
}

std::string json(const HopfPoly& p) {
  nlohmann::json a = nlohmann::json::array();
  for (const auto& [m, c] : sorted_terms(p)) a.push_back({{"coeff", c.get_str()}, {"monomial", json_mono(m)}});
  return a.dump();
}

std::string str(const TensorPoly& t) {
  auto body = [](const Pair& k) { return str(k[0]) + " (x) " + str(k[1]); };
  auto terms = sorted_terms(t);
  if (terms.empty()) return "0";
  std::string s;
  bool first = true;
  for (const auto& [k, c] : terms) {
    Rational a = abs(c);
    s += first ? (c < 0 ? "-" : "") : (c < 0 ? " - " : " + ");
    first = false;
    if (a != 1) s += a.get_str() + " ";
    s += body(k);
  }
  return s;
}

std::string latex(const TensorPoly& t) {
  auto terms = sorted_terms(t);
  if (terms.empty()) return "0";
  std::string s;
  bool first = true;
  for (const auto& [k, c] : terms) {
    Rational a = abs(c);
    s += first ? (c < 0 ? "-" : "") : (c < 0 ? " - " : " + ");
    first = false;
    if (a != 1) s += latex_rational(a) + " ";
    s += latex(k[0]) + " \\otimes " + latex(k[1]);
  }
  return s;
}

std::string json(const TensorPoly& t) {
  nlohmann::json a = nlohmann::json::array();
  for (const auto& [k, c] : sorted_terms(t))
    a.push_back({{"coeff", c.get_str()}, {"left", json_mono(k[0])}, {"right", json_mono(k[1])}});
  return a.dump();
}

std::string render(const HopfPoly& p, Format f) {
  switch (f) {
    case Format::Latex:
      return latex(p);
    case Format::Json:
      return json(p);
    default:
      return str(p);
  }
}

std::string render(const TensorPoly& t, Format f) {
  switch (f) {
    case Format::Latex:
      return latex(t);
    case Format::Json:
      return json(t);
    default:
      return str(t);
  }
}

// ---- parser

namespace {

class Parser {
 public:
  Parser(const std::string& text, int dim) : s_(text), dim_(dim) {}

  std::vector<Word> run() {
    auto r = expr();
    skip();
    if (pos_ != s_.size()) fail("unexpected character '" + std::string(1, s_[pos_]) + "'");
    return r;
  }

  Generator single() {
    skip();
    Generator g = generator();
    skip();
    if (pos_ != s_.size()) fail("expected a single generator");
    return g;
  }

 private:
  [[noreturn]] void fail(const std::string& what) const { throw ParseError(what, pos_); }

  void skip() {
    while (pos_ < s_.size() && std::isspace(static_cast<unsigned char>(s_[pos_]))) ++pos_;
  }
  bool peek(char c) {
    skip();
    return pos_ < s_.size() && s_[pos_] == c;
  }
  bool eat(char c) {
    if (!peek(c)) return false;
    ++pos_;
    return true;
  }
  void expect(char c) {
    if (!eat(c)) fail(std::string("expected '") + c + "'");
  }
  bool at_digit() {
    skip();
    return pos_ < s_.size() && std::isdigit(static_cast<unsigned char>(s_[pos_]));
  }
  std::string digits() {
    if (!at_digit()) fail("expected a number");
    std::size_t start = pos_;
    while (pos_ < s_.size() && std::isdigit(static_cast<unsigned char>(s_[pos_]))) ++pos_;
    return s_.substr(start, pos_ - start);
  }
  int index() {
    std::size_t at = (skip(), pos_);
    std::string d = digits();
    int v = d.size() > 3 ? 1000 : std::stoi(d);
    if (v < 1) throw ParseError("index " + d + " is below 1", at);
    if (v > dim_) throw std::out_of_range("index " + d + " exceeds dim " + std::to_string(dim_));
    return v;
  }

  std::vector<Word> expr() {
    std::vector<Word> r;
    bool first = true;
    for (;;) {
      int sign = 1;
      if (eat('-')) {
        sign = -1;
      } else if (eat('+') || first) {
      } else {
        break;
      }
      first = false;
      for (auto& w : term()) {
        w.coeff *= sign;
        r.push_back(std::move(w));
      }
      skip();
      if (!peek('+') && !peek('-')) break;
    }
    return r;
  }

  std::vector<Word> term() {
    std::vector<Word> acc{Word{}};
    bool any = false;
    if (at_digit()) {
      Rational c(digits());
      if (eat('/')) {
        std::size_t at = pos_;
        Rational d(digits());
        if (d == 0) throw ParseError("division by zero", at);
        c /= d;
      }
      c.canonicalize();
      acc.front().coeff = c;
      any = true;
    }
    for (;;) {
      skip();
      std::size_t star = pos_;
      bool starred = eat('*');
      if (starred && !any) throw ParseError("unexpected '*'", star);
      if (starred) skip();
      if (pos_ >= s_.size()) {
        if (starred) fail("expected a factor after '*'");
        break;
      }
      char ch = s_[pos_];
      std::vector<Word> f;
      if (ch == '(') {
        ++pos_;
        f = expr();
        expect(')');
      } else if (ch == 'X' || ch == 'Y' || ch == 'd') {
        f = {Word{1, {generator()}}};
      } else {
        if (starred) fail("expected a factor after '*'");
        break;
      }
      any = true;
      std::vector<Word> next;
      for (const auto& a : acc)
        for (const auto& b : f) {
          Word w{a.coeff * b.coeff, a.gens};
          w.gens.insert(w.gens.end(), b.gens.begin(), b.gens.end());
          next.push_back(std::move(w));
        }
      acc = std::move(next);
    }
    if (!any) fail("expected a term");
    return acc;
  }

  Generator generator() {
    skip();
    if (pos_ >= s_.size() || (s_[pos_] != 'X' && s_[pos_] != 'Y' && s_[pos_] != 'd')) fail("expected a generator");
    char ch = s_[pos_++];
    expect('(');
    Generator g;
    if (ch == 'X') {
      g = Generator::x(index());
    } else if (ch == 'Y') {
      int j = index();
      expect(',');
      g = Generator::y(j, index());
    } else {
      int k = index();
      expect(';');
      int j = index();
      expect(',');
      int i = index();
      IndexString tail;
      if (eat(';')) {
        while (!peek(')')) {
          if (eat(',')) continue;
          tail.push_back(index());
        }
        if (tail.empty()) fail("empty tail");
        if (static_cast<int>(tail.size()) > kMaxTail) fail("tail longer than " + std::to_string(kMaxTail));
      }
      g = Generator::delta(k, j, i, tail);
    }
    expect(')');
    return g;
  }

  const std::string& s_;
  int dim_;
  std::size_t pos_ = 0;
};

}  // namespace

std::vector<Word> parse_words(const std::string& text, int dim) { return Parser(text, dim).run(); }

HopfPoly parse(const std::string& text, int dim) {
  HopfPoly r;
  for (const auto& w : parse_words(text, dim)) {
    HopfPoly p = HopfPoly::unit() * w.coeff;
    for (Generator g : w.gens) p = p * HopfPoly::gen(g);
    r += p;
  }
  return r;
}

Generator parse_generator(const std::string& text, int dim) { return Parser(text, dim).single(); }

}  // namespace cm::hopf
