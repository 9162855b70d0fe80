#pragma once

// The Hopf algebra generated by X_i, Y^j_k and delta^k_{ji,a} with concrete
// indices: PBW normal forms, coproduct, counit and antipode.

#include <array>
#include <compare>
#include <cstdint>
#include <map>
#include <stdexcept>
#include <string>
#include <utility>
#include <vector>

#include <gmpxx.h>

namespace cm::hopf {

using Rational = mpq_class;
using Index = std::uint8_t;
using IndexString = std::vector<int>;

inline constexpr int kMaxIndex = 15;
inline constexpr int kMaxTail = 12;

struct GradingViolation : std::logic_error {
  using std::logic_error::logic_error;
};

/// A generator packed into 64 bits so that integer order is the PBW order:
/// kind, then the three index slots, then the tail (zero padded, so a prefix sorts first).
///   X(i)               a = i
///   Y(j,k) = Y^j_k     a = j, b = k
///   d(k;j,i;tail)      a = k, (b, c) = sorted lower pair, tail sorted
class Generator {
 public:
  enum class Kind : std::uint8_t { X = 0, Y = 1, Delta = 2 };

  constexpr Generator() = default;
  static Generator x(int i);
  static Generator y(int j, int k);
  static Generator delta(int k, int j, int i, IndexString tail = {});

  Kind kind() const { return static_cast<Kind>(key_ >> 60); }
  int a() const { return static_cast<int>((key_ >> 56) & 0xf); }
  int b() const { return static_cast<int>((key_ >> 52) & 0xf); }
  int c() const { return static_cast<int>((key_ >> 48) & 0xf); }
  int tail_length() const;
  int tail_at(int pos) const { return static_cast<int>((key_ >> (44 - 4 * pos)) & 0xf); }
  IndexString tail() const;
  /// Delta with one more tail index (re-sorted).
  Generator appended(int l) const;
  int max_index() const;

  std::uint64_t key() const { return key_; }
  auto operator<=>(const Generator&) const = default;

 private:
  explicit constexpr Generator(std::uint64_t k) : key_(k) {}
  std::uint64_t key_ = 0;
};

/// Throws std::out_of_range("index 3 exceeds dim 2") on a bad index.
void validate(Generator g, int dim);

/// Generators in non-decreasing PBW order.
using Monomial = std::vector<Generator>;

int degree(const Monomial& m);
/// Degree descending, then lexicographic; the printing order.
bool print_order(const Monomial& a, const Monomial& b);

class HopfPoly {
 public:
  using Terms = std::map<Monomial, Rational>;

  HopfPoly() = default;
  static HopfPoly unit();
  static HopfPoly gen(Generator g, const Rational& c = 1);
  /// m must already be sorted.
  static HopfPoly monomial(Monomial m, const Rational& c = 1);

  const Terms& terms() const { return terms_; }
  bool is_zero() const { return terms_.empty(); }
  std::size_t size() const { return terms_.size(); }
  Rational coefficient(const Monomial& m) const;
  void add_term(const Monomial& m, const Rational& c);

  HopfPoly operator-() const;
  HopfPoly& operator+=(const HopfPoly& o);
  HopfPoly& operator-=(const HopfPoly& o);
  HopfPoly& operator*=(const Rational& c);
  friend HopfPoly operator+(HopfPoly a, const HopfPoly& b) { return a += b; }
  friend HopfPoly operator-(HopfPoly a, const HopfPoly& b) { return a -= b; }
  friend HopfPoly operator*(HopfPoly a, const Rational& c) { return a *= c; }
  friend HopfPoly operator*(const Rational& c, HopfPoly a) { return a *= c; }
  /// Product of the free model (deltas commute, no structure identities), PBW normal form.
  friend HopfPoly operator*(const HopfPoly& a, const HopfPoly& b);

  bool operator==(const HopfPoly& o) const { return terms_ == o.terms_; }

 private:
  Terms terms_;
};

HopfPoly commutator(const HopfPoly& a, const HopfPoly& b);

template <std::size_t N>
class TensorN {
 public:
  using Key = std::array<Monomial, N>;
  using Terms = std::map<Key, Rational>;

  const Terms& terms() const { return terms_; }
  bool is_zero() const { return terms_.empty(); }
  std::size_t size() const { return terms_.size(); }
  void add_term(const Key& k, const Rational& c) {
    if (c == 0) return;
    auto [it, fresh] = terms_.try_emplace(k, c);
    if (!fresh) {
      it->second += c;
      if (it->second == 0) terms_.erase(it);
    }
  }
  Rational coefficient(const Key& k) const {
    auto it = terms_.find(k);
    return it == terms_.end() ? Rational(0) : it->second;
  }
  TensorN& operator+=(const TensorN& o) {
    for (const auto& [k, c] : o.terms_) add_term(k, c);
    return *this;
  }
  TensorN& operator-=(const TensorN& o) {
    for (const auto& [k, c] : o.terms_) add_term(k, -c);
    return *this;
  }
  TensorN& operator*=(const Rational& c) {
    if (c == 0) terms_.clear();
    for (auto& [k, v] : terms_) v *= c;
    return *this;
  }
  friend TensorN operator+(TensorN a, const TensorN& b) { return a += b; }
  friend TensorN operator-(TensorN a, const TensorN& b) { return a -= b; }
  bool operator==(const TensorN& o) const { return terms_ == o.terms_; }

 private:
  Terms terms_;
};

using TensorPoly = TensorN<2>;
using Tensor3 = TensorN<3>;

TensorPoly tensor(const HopfPoly& a, const HopfPoly& b);
/// Componentwise product (a ⊗ b)(c ⊗ d) = ac ⊗ bd.
TensorPoly operator*(const TensorPoly& a, const TensorPoly& b);
TensorPoly commutator(const TensorPoly& a, const TensorPoly& b);
/// m(a ⊗ b) = ab.
HopfPoly multiply(const TensorPoly& t);

/// [g, h] in normal form.
HopfPoly commutator_table(Generator g, Generator h);
/// The closed form of [Y^p_q, delta^k_{ji,a}], independent of the recursion used by commutator_table.
HopfPoly y_delta_closed_form(Generator y, Generator d);

struct Word {
  Rational coeff = 1;
  std::vector<Generator> gens;
};

/// Adjacent-transposition straightening. Asserts that (length, inversions) decreases at every rewrite.
HopfPoly normal_form(const Word& w);
HopfPoly normal_form(const std::vector<Word>& words);

/// For n >= 2 the deltas satisfy
///   δ^i_{jk,l} − δ^i_{jl,k} = Σ_s δ^s_{jl} δ^i_{sk} − δ^s_{jk} δ^i_{sl}
/// and its [X_m, ·] derivatives. A delta is canonical when its lower pair holds the two
/// smallest lower indices. canonical() rewrites every delta in terms of canonical ones;
/// the free products above are faithful to the text, these are the products in the algebra.
bool is_canonical(Generator g);
HopfPoly canonical_delta(Generator g, int dim);
HopfPoly canonical(const HopfPoly& p, int dim);
TensorPoly canonical(const TensorPoly& t, int dim);
HopfPoly multiply(const HopfPoly& a, const HopfPoly& b, int dim);
TensorPoly multiply(const TensorPoly& a, const TensorPoly& b, int dim);
HopfPoly commutator(const HopfPoly& a, const HopfPoly& b, int dim);
TensorPoly commutator(const TensorPoly& a, const TensorPoly& b, int dim);

/// Coproduct and antipode return canonical forms.
TensorPoly coproduct(Generator g, int dim);
TensorPoly coproduct(const HopfPoly& p, int dim);
Rational counit(const HopfPoly& p);
HopfPoly antipode(Generator g, int dim);
HopfPoly antipode(const HopfPoly& p, int dim);

Tensor3 coproduct_left(const TensorPoly& t, int dim);   // (Δ ⊗ id)
Tensor3 coproduct_right(const TensorPoly& t, int dim);  // (id ⊗ Δ)

bool check_coassoc(const HopfPoly& p, int dim);
bool check_counit(const HopfPoly& p, int dim);
bool check_antipode(const HopfPoly& p, int dim);

/// Every monomial is a nonempty product of Delta generators with tails of length <= m.
bool in_h0(const HopfPoly& p, int m);
bool in_h0_tensor(const TensorPoly& t, int m);

/// R^A_a = Δ(δ^A_a) − δ^A_a ⊗ 1 − 1 ⊗ δ^A_a; throws GradingViolation unless it lies in H⁰_{|a|−1} ⊗ H⁰_{|a|−1}.
TensorPoly r_term(int k, int j, int i, const IndexString& tail, int dim);

/// Drops the thread-local memo tables (multiplication, coproduct, antipode).
void clear_caches();

// ---- text

enum class Format { Text, Latex, Json };

std::string str(Generator g);
std::string latex(Generator g);
std::string str(const Monomial& m);
std::string str(const HopfPoly& p);
std::string latex(const HopfPoly& p);
std::string json(const HopfPoly& p);
std::string str(const TensorPoly& t);
std::string latex(const TensorPoly& t);
std::string json(const TensorPoly& t);
std::string render(const HopfPoly& p, Format f);
std::string render(const TensorPoly& t, Format f);

struct ParseError : std::invalid_argument {
  ParseError(const std::string& what, std::size_t pos)
      : std::invalid_argument(what + " at position " + std::to_string(pos)), position(pos) {}
  std::size_t position;
};

/// Grammar: sums of terms; a term is an optional rational coefficient followed by
/// juxtaposed factors `X(i)`, `Y(j,k)`, `d(k;j,i)`, `d(k;j,i;l1 l2 ...)`, `1` or a parenthesized sum.
/// Indices out of 1..dim raise std::out_of_range.
std::vector<Word> parse_words(const std::string& text, int dim);
HopfPoly parse(const std::string& text, int dim);
Generator parse_generator(const std::string& text, int dim);

}  // namespace cm::hopf
