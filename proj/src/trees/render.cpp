#include <cctype>
#include <functional>
#include <sstream>

#include <json.hpp>

#include "cm/trees.hpp"

namespace cm::trees {

std::string DecoratedTree::str() const {
  std::string s = "t(" + std::to_string(k_) + ";" + std::to_string(j_) + "," + std::to_string(i_) + ")";
  std::function<void(int)> walk = [&](int v) {
    for (int c : children_[v]) {
      s += "(" + std::to_string(index_[c]);
      walk(c);
      s += ")";
    }
  };
  walk(0);
  return s;
}

namespace {

class TreeParser {
 public:
  TreeParser(const std::string& s, int dim) : s_(s), dim_(dim) {}

  DecoratedTree run() {
    expect('t');
    expect('(');
    int k = index();
    expect(';');
    int j = index();
    expect(',');
    int i = index();
    expect(')');
    DecoratedTree t(k, j, i);
    children(t, 0);
    skip();
    if (pos_ != s_.size()) fail("unexpected character '" + std::string(1, s_[pos_]) + "'");
    return t;
  }

 private:
  [[noreturn]] void fail(const std::string& what) const { throw ParseError(what, pos_); }
  void skip() {
    while (pos_ < s_.size() && std::isspace(static_cast<unsigned char>(s_[pos_]))) ++pos_;
  }
  bool eat(char c) {
    skip();
    if (pos_ < s_.size() && s_[pos_] == c) {
      ++pos_;
      return true;
    }
    return false;
  }
  void expect(char c) {
    if (!eat(c)) fail(std::string("expected '") + c + "'");
  }
  int index() {
    skip();
    std::size_t start = pos_;
    while (pos_ < s_.size() && std::isdigit(static_cast<unsigned char>(s_[pos_]))) ++pos_;
    if (start == pos_) fail("expected an index");
    std::string d = s_.substr(start, pos_ - start);
    int v = d.size() > 3 ? 1000 : std::stoi(d);
    if (v < 1) throw ParseError("index " + d + " is below 1", start);
    if (v > dim_) throw std::out_of_range("index " + d + " exceeds dim " + std::to_string(dim_));
    return v;
  }
  void children(DecoratedTree& t, int v) {
    while (eat('(')) {
      int c = t.attach(v, index());
      children(t, c);
      expect(')');
    }
  }

  const std::string& s_;
  int dim_;
  std::size_t pos_ = 0;
};

std::string root_label(const DecoratedTree& t) {
  return "d(" + std::to_string(t.k()) + ";" + std::to_string(t.j()) + "," + std::to_string(t.i()) + ")";
}

}  // namespace

DecoratedTree parse_tree(const std::string& text, int dim) { return TreeParser(text, dim).run(); }

std::string ascii(const DecoratedTree& t) {
  std::string out = root_label(t) + "\n";
  std::function<void(int, const std::string&)> walk = [&](int v, const std::string& prefix) {
    const auto& ch = t.children(v);
    for (std::size_t p = 0; p < ch.size(); ++p) {
      bool last = p + 1 == ch.size();
      out += prefix + (last ? "`-- " : "|-- ") + std::to_string(t.index(ch[p])) + "\n";
      walk(ch[p], prefix + (last ? "    " : "|   "));
    }
  };
  walk(0, "");
  return out;
}

std::string latex(const DecoratedTree& t) {
  // leaves get consecutive columns, parents sit above their first child
  std::vector<int> col(t.size()), row(t.size());
  int next = 0, rows = 0;
  std::function<void(int)> place = [&](int v) {
    row[v] = t.depth(v);
    rows = std::max(rows, row[v]);
    if (t.children(v).empty()) {
      col[v] = next++;
      return;
    }
    for (int c : t.children(v)) place(c);
    col[v] = col[t.children(v).front()];
  };
  place(0);
  auto x = [&](int v) { return 1 + 7 * col[v]; };
  auto y = [&](int v) { return 1 + 7 * (rows - row[v]); };
  std::ostringstream os;
  os << "\\begin{picture}(" << 7 * std::max(next, 1) << "," << 7 * rows + 4 << ")\n";
  os << "\\put(" << x(0) << "," << y(0) << "){$\\bullet~^{" << t.k() << "}_{" << t.j() << t.i() << "}$}\n";
  for (int v = 1; v < t.size(); ++v) {
    int p = t.parent(v);
    os << "\\put(" << x(v) << "," << y(v) << "){$\\bullet~_{" << t.index(v) << "}$}\n";
    int dx = col[v] - col[p];
    os << "\\put(" << x(p) + 1 << "," << y(p) + 1 << "){\\line(" << dx << ",-1){" << (dx ? 7 * std::abs(dx) : 7)
       << "}}\n";
  }
  os << "\\end{picture}";
  return os.str();
}

std::string json(const DecoratedTree& t) {
  nlohmann::json vs = nlohmann::json::array();
  for (int v = 0; v < t.size(); ++v) {
    nlohmann::json e = {{"id", v}, {"children", t.children(v)}};
    if (v == 0) {
      e["upper"] = t.k();
      e["lower"] = {t.j(), t.i()};
    } else {
      e["index"] = t.index(v);
    }
    vs.push_back(e);
  }
  return nlohmann::json{{"tree", t.str()}, {"vertices", vs}}.dump();
}

std::string render(const DecoratedTree& t, hopf::Format f) {
  switch (f) {
    case hopf::Format::Latex:
      return latex(t);
    case hopf::Format::Json:
      return json(t);
    default:
      return ascii(t);
  }
}

}  // namespace cm::trees
