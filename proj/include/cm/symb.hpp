#pragma once

// Exact multivariate polynomials and rational functions over Q in the chart
// coordinates (x^mu, y^mu_i) of the frame bundle.

#include <array>
#include <compare>
#include <cstdint>
#include <map>
#include <optional>
#include <stdexcept>
#include <string>
#include <string_view>
#include <vector>

#include <gmpxx.h>

namespace cm::symb {

using Rational = mpq_class;

inline constexpr int kMaxDim = 3;
inline constexpr int kMaxVars = kMaxDim + kMaxDim * kMaxDim;

struct IdenticallyZeroDenominator : std::domain_error {
  using std::domain_error::domain_error;
};

struct DivisionByZeroAtPoint : std::domain_error {
  using std::domain_error::domain_error;
};

struct ScopeMismatch : std::invalid_argument {
  using std::invalid_argument::invalid_argument;
};

/// A chart coordinate: x^mu (Base) or y^mu_i (Frame). Indices are 1-based.
struct Coordinate {
  enum class Kind : std::uint8_t { Base, Frame };
  Kind kind = Kind::Base;
  int mu = 1;
  int i = 0;

  static Coordinate x(int mu) { return {Kind::Base, mu, 0}; }
  static Coordinate y(int mu, int i) { return {Kind::Frame, mu, i}; }

  /// Position in the fixed enumeration x^1..x^dim, y^1_1, y^1_2, ..., y^dim_dim.
  int index(int dim) const;
  static Coordinate from_index(int dim, int index);
  std::string name() const;
  bool valid(int dim) const;

  auto operator<=>(const Coordinate&) const = default;
};

inline int num_vars(int dim) { return dim + dim * dim; }
void check_dim(int dim);

struct Exponents {
  std::array<std::uint8_t, kMaxVars> e{};
  std::uint16_t total = 0;

  // graded lexicographic
  std::strong_ordering operator<=>(const Exponents& o) const {
    if (auto c = total <=> o.total; c != 0) return c;
    return e <=> o.e;
  }
  bool operator==(const Exponents& o) const = default;

  bool divides(const Exponents& o) const;
};

class RationalFunction;

class Polynomial {
 public:
  struct Term {
    Exponents exp;
    Rational coeff;
    bool operator==(const Term& o) const { return exp == o.exp && coeff == o.coeff; }
  };

  Polynomial() = default;
  explicit Polynomial(int dim);
  static Polynomial constant(int dim, const Rational& c);
  static Polynomial variable(int dim, Coordinate v);
  static Polynomial variable_index(int dim, int var);
  static Polynomial monomial(int dim, const Exponents& e, const Rational& c);

  int dim() const { return dim_; }
  bool is_zero() const { return terms_.empty(); }
  bool is_constant() const;
  Rational constant_value() const;
  int degree() const;
  int degree_in(int var) const;
  std::size_t size() const { return terms_.size(); }
  /// Terms in ascending graded-lex order; the leading term is terms().back().
  const std::vector<Term>& terms() const { return terms_; }
  const Term& leading() const { return terms_.back(); }

  Polynomial operator-() const;
  Polynomial& operator+=(const Polynomial& o);
  Polynomial& operator-=(const Polynomial& o);
  Polynomial& operator*=(const Rational& c);
  friend Polynomial operator+(Polynomial a, const Polynomial& b) { return a += b; }
  friend Polynomial operator-(Polynomial a, const Polynomial& b) { return a -= b; }
  friend Polynomial operator*(const Polynomial& a, const Polynomial& b);
  friend Polynomial operator*(Polynomial a, const Rational& c) { return a *= c; }
  friend Polynomial operator*(const Rational& c, Polynomial a) { return a *= c; }
  Polynomial pow(unsigned n) const;

  bool operator==(const Polynomial& o) const { return dim_ == o.dim_ && terms_ == o.terms_; }
  std::strong_ordering compare(const Polynomial& o) const;
  bool operator<(const Polynomial& o) const { return compare(o) < 0; }

  Polynomial derivative(int var) const;
  Polynomial derivative(Coordinate v) const { return derivative(v.index(dim_)); }
  bool depends_on(int var) const;

  /// Composition with polynomial images, one per variable of the scope.
  /// The images may live in a different scope (all of equal dim).
  Polynomial substitute(const std::vector<Polynomial>& images) const;
  RationalFunction substitute(const std::vector<RationalFunction>& images) const;
  Rational eval(const std::vector<Rational>& point) const;

  /// Exact quotient if d divides *this, nullopt otherwise.
  std::optional<Polynomial> divide_exact(const Polynomial& d) const;
  /// Positive-leading rational content c with *this / c primitive over Z.
  Rational content() const;

  std::string str() const;

 private:
  friend class RationalFunction;
  void canonicalize();
  int dim_ = 0;
  std::vector<Term> terms_;
};

/// num / (prod base_k^exp_k). Denominator bases are primitive integer
/// polynomials with positive leading coefficient and positive degree.
class RationalFunction {
 public:
  struct Factor {
    Polynomial base;
    int exp = 0;
  };

  RationalFunction() = default;
  explicit RationalFunction(int dim);
  RationalFunction(Polynomial p);  // NOLINT: implicit promotion is intended
  static RationalFunction constant(int dim, const Rational& c);
  static RationalFunction variable(int dim, Coordinate v);
  /// Throws IdenticallyZeroDenominator when den == 0.
  static RationalFunction quotient(const Polynomial& num, const Polynomial& den);

  int dim() const { return num_.dim(); }
  bool is_zero() const { return num_.is_zero(); }
  bool is_polynomial() const { return den_.empty(); }
  const Polynomial& numerator() const { return num_; }
  const std::vector<Factor>& factors() const { return den_; }
  Polynomial denominator() const;

  RationalFunction operator-() const;
  RationalFunction& operator+=(const RationalFunction& o);
  RationalFunction& operator-=(const RationalFunction& o);
  RationalFunction& operator*=(const RationalFunction& o);
  RationalFunction& operator/=(const RationalFunction& o);
  friend RationalFunction operator+(RationalFunction a, const RationalFunction& b) { return a += b; }
  friend RationalFunction operator-(RationalFunction a, const RationalFunction& b) { return a -= b; }
  friend RationalFunction operator*(RationalFunction a, const RationalFunction& b) { return a *= b; }
  friend RationalFunction operator/(RationalFunction a, const RationalFunction& b) { return a /= b; }
  RationalFunction inverse() const;
  RationalFunction pow(unsigned n) const;

  RationalFunction derivative(int var) const;
  RationalFunction derivative(Coordinate v) const { return derivative(v.index(dim())); }
  RationalFunction substitute(const std::vector<RationalFunction>& images) const;
  Rational eval(const std::vector<Rational>& point) const;

  std::string str() const;

 private:
  void add_factor(Polynomial base, int exp);
  void reduce();
  void merge_factors(const std::vector<Factor>& other);
  Polynomial scaled_numerator(const std::vector<Factor>& target) const;

  Polynomial num_;
  std::vector<Factor> den_;
};

using RF = RationalFunction;

// Operation-level API.
RF add(const RF& p, const RF& q);
RF mul(const RF& p, const RF& q);
RF neg(const RF& p);
RF differentiate(const RF& p, Coordinate v);
RF substitute(const RF& p, const std::map<Coordinate, RF>& assignment);
/// p·q.den − q·p.den == 0, computed over a common denominator.
bool equal_rf(const RF& p, const RF& q);
Rational eval_at(const RF& p, const std::map<Coordinate, Rational>& point);

struct ParseError : std::invalid_argument {
  ParseError(const std::string& what, std::size_t pos)
      : std::invalid_argument(what + " at position " + std::to_string(pos)), message(what), position(pos) {}
  std::string message;
  std::size_t position;
};

/// Parses `x1..x<dim>`, `y<mu>_<i>`, rational literals, + - * / ^ and parentheses.
RF parse_rf(int dim, std::string_view text);
Polynomial parse_polynomial(int dim, std::string_view text);

Rational parse_rational(std::string_view text);
std::string rational_str(const Rational& q);

}  // namespace cm::symb
