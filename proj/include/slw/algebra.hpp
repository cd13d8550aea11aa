#ifndef SLW_ALGEBRA_HPP
#define SLW_ALGEBRA_HPP

#include <map>
#include <mutex>
#include <sstream>
#include <string>
#include <utility>
#include <vector>

#include "slw/matrix.hpp"

namespace slw {

/// Basis element of sl_{n+1}: E(i,j) = e_ij (i != j, 0 <= i,j <= n) or
/// H(i) = e_ii - I/(n+1) (1 <= i <= n). H(0) is never stored; diagonal
/// content is rewritten through h_0 = -(h_1 + ... + h_n).
struct Generator {
  enum class Kind { E, H };
  Kind kind;
  int i;
  int j;  // unused for H

  static Generator E(int i, int j) { return {Kind::E, i, j}; }
  static Generator H(int i) { return {Kind::H, i, 0}; }

  bool is_E() const { return kind == Kind::E; }
  bool is_H() const { return kind == Kind::H; }

  /// Position in the global PBW order:
  ///   E(i,0) < E(i,j) (1<=i!=j<=n, lex) < H(1..n) < E(0,1..n).
  int order_key() const {
    if (is_H()) return 20000 + i;
    if (j == 0) return i;                  // E(i,0)
    if (i == 0) return 30000 + j;          // E(0,j)
    return 10000 + i * 64 + j;             // E(i,j), 1<=i!=j<=n
  }

  friend bool operator<(const Generator& a, const Generator& b) {
    return a.order_key() < b.order_key();
  }
  friend bool operator==(const Generator& a, const Generator& b) {
    return a.order_key() == b.order_key();
  }
  friend bool operator!=(const Generator& a, const Generator& b) { return !(a == b); }

  std::string to_string() const {
    std::ostringstream os;
    if (is_H())
      os << "h[" << i << "]";
    else
      os << "e[" << i << "][" << j << "]";
    return os.str();
  }
};

/// Ordered power product of generators. Exponents are nonzero; only E(0,k)
/// may carry negative exponents (localized elements).
struct PBWMonomial {
  std::vector<std::pair<Generator, int>> factors;  // sorted by order_key

  bool empty() const { return factors.empty(); }

  int total_degree() const {
    int d = 0;
    for (const auto& [g, e] : factors) d += e < 0 ? -e : e;
    return d;
  }

  bool has_negative_exponent() const {
    for (const auto& [g, e] : factors)
      if (e < 0) return true;
    return false;
  }

  friend bool operator<(const PBWMonomial& a, const PBWMonomial& b) {
    if (a.factors.size() != b.factors.size())
      return a.factors.size() < b.factors.size();
    for (std::size_t k = 0; k < a.factors.size(); ++k) {
      int ka = a.factors[k].first.order_key(), kb = b.factors[k].first.order_key();
      if (ka != kb) return ka < kb;
      if (a.factors[k].second != b.factors[k].second)
        return a.factors[k].second < b.factors[k].second;
    }
    return false;
  }
  friend bool operator==(const PBWMonomial& a, const PBWMonomial& b) {
    return !(a < b) && !(b < a);
  }

  std::string to_string() const {
    if (factors.empty()) return "1";
    std::ostringstream os;
    bool first = true;
    for (const auto& [g, e] : factors) {
      if (!first) os << " * ";
      first = false;
      os << g.to_string();
      if (e != 1) os << "^" << e;
    }
    return os.str();
  }
};

/// Finite Scalar-linear combination of PBW monomials in canonical form.
class Element {
 public:
  using Terms = std::map<PBWMonomial, Scalar>;

  Element() = default;
  Element(const Scalar& c) {
    if (!c.is_zero()) terms_[PBWMonomial{}] = c;
  }
  Element(int c) : Element(Scalar(c)) {}

  static Element generator(const Generator& g, int exp = 1) {
    Element e;
    if (exp == 0) return Element(1);
    e.terms_[PBWMonomial{{{g, exp}}}] = Scalar(1);
    return e;
  }
  static Element monomial(const PBWMonomial& m, const Scalar& c = Scalar(1)) {
    Element e;
    if (!c.is_zero()) e.terms_[m] = c;
    return e;
  }

  const Terms& terms() const { return terms_; }
  bool is_zero() const { return terms_.empty(); }

  bool has_negative_exponent() const {
    for (const auto& [m, c] : terms_)
      if (m.has_negative_exponent()) return true;
    return false;
  }

  int total_degree() const {
    int d = 0;
    for (const auto& [m, c] : terms_) d = std::max(d, m.total_degree());
    return d;
  }

  void add_term(const PBWMonomial& m, const Scalar& c) {
    if (c.is_zero()) return;
    auto it = terms_.find(m);
    if (it == terms_.end()) {
      terms_[m] = c;
    } else {
      it->second += c;
      if (it->second.is_zero()) terms_.erase(it);
    }
  }

  friend Element operator+(const Element& a, const Element& b) {
    Element out = a;
    for (const auto& [m, c] : b.terms_) out.add_term(m, c);
    return out;
  }
  friend Element operator-(const Element& a, const Element& b) {
    Element out = a;
    for (const auto& [m, c] : b.terms_) out.add_term(m, -c);
    return out;
  }
  Element operator-() const {
    Element out;
    for (const auto& [m, c] : terms_) out.terms_[m] = -c;
    return out;
  }
  friend Element operator*(const Scalar& s, const Element& a) {
    Element out;
    if (s.is_zero()) return out;
    for (const auto& [m, c] : a.terms_) out.terms_[m] = s * c;
    return out;
  }
  Element& operator+=(const Element& b) {
    for (const auto& [m, c] : b.terms_) add_term(m, c);
    return *this;
  }
  Element& operator-=(const Element& b) {
    for (const auto& [m, c] : b.terms_) add_term(m, -c);
    return *this;
  }

  friend bool operator==(const Element& a, const Element& b) {
    return a.terms_ == b.terms_;
  }
  friend bool operator!=(const Element& a, const Element& b) { return !(a == b); }

  std::string to_string() const {
    if (terms_.empty()) return "0";
    std::ostringstream os;
    bool first = true;
    for (const auto& [m, c] : terms_) {
      if (!first) os << " + ";
      first = false;
      os << c.to_string();
      if (!m.empty()) os << " * " << m.to_string();
    }
    return os.str();
  }

 private:
  Terms terms_;
};

inline Element operator*(int c, const Element& a) { return Scalar(c) * a; }

/// sl_{n+1} with its bracket table and PBW straightening. All operations are
/// pure; the straightening memo is internal and mutex-guarded.
class LieStructure {
 public:
  explicit LieStructure(int n) : n_(n) {
    if (n < 2) throw invalid_rank_error("rank must satisfy n >= 2");
    build_bracket_table();
  }

  int rank() const { return n_; }

  const std::vector<Generator>& generators() const { return gens_; }

  /// h-generators and e_{0k}: the subalgebra defining W by centralizing.
  std::vector<Generator> hm_generators() const {
    std::vector<Generator> out;
    for (int i = 1; i <= n_; ++i) out.push_back(Generator::H(i));
    for (int k = 1; k <= n_; ++k) out.push_back(Generator::E(0, k));
    return out;
  }

  Element bracket(const Generator& a, const Generator& b) const {
    auto it = bracket_table_.find({a.order_key(), b.order_key()});
    if (it == bracket_table_.end()) return Element();
    return it->second;
  }

  /// Commutator through the associative product (arguments must have
  /// non-negative exponents).
  Element commutator(const Element& a, const Element& b) const {
    return multiply(a, b) - multiply(b, a);
  }

  Element multiply(const Element& a, const Element& b) const {
    if (a.has_negative_exponent() || b.has_negative_exponent())
      throw wrong_module_error(
          "negative exponent in plain product; use localize_multiply");
    Element out;
    for (const auto& [mb, cb] : b.terms()) {
      // expand mb into single generator factors, fold right-multiplications
      Element acc;
      for (const auto& [ma, ca] : a.terms()) acc.add_term(ma, ca * cb);
      for (const auto& [g, e] : mb.factors)
        for (int t = 0; t < e; ++t) acc = mul_elem_gen(acc, g);
      out += acc;
    }
    return out;
  }

  /// (ad x)^m applied to a.
  Element ad_power(const Generator& x, const Element& a, int m) const {
    if (m < 0) throw error("ad_power requires m >= 0");
    Element cur = a;
    Element xe = Element::generator(x);
    for (int t = 0; t < m; ++t) cur = commutator(xe, cur);
    return cur;
  }

  /// Quadratic Casimir, normalized by the trace form of the defining
  /// representation.
  Element casimir() const {
    Element c;
    for (int i = 0; i <= n_; ++i)
      for (int j = 0; j <= n_; ++j) {
        if (i == j) continue;
        c += multiply(Element::generator(Generator::E(i, j)),
                      Element::generator(Generator::E(j, i)));
      }
    // Cartan part: Gram matrix of (h_1..h_n) is I - J/(n+1), inverse I + J.
    for (int i = 1; i <= n_; ++i)
      for (int j = 1; j <= n_; ++j) {
        Scalar coeff(i == j ? 2 : 1);
        c += coeff * multiply(Element::generator(Generator::H(i)),
                              Element::generator(Generator::H(j)));
      }
    return c;
  }

  /// (n+1)x(n+1) matrix of a generator in the defining representation.
  Matrix generator_matrix(const Generator& g) const {
    Matrix m(n_ + 1, n_ + 1);
    if (g.is_E()) {
      m(g.i, g.j) = Scalar(1);
    } else {
      Scalar s = Scalar(Rat(1)) / Scalar(n_ + 1);
      for (int k = 0; k <= n_; ++k) m(k, k) = -s;
      m(g.i, g.i) += Scalar(1);
    }
    return m;
  }

  /// Traceless matrix -> degree-1 element in the basis {E(i,j), H(i)}.
  Element matrix_to_element(const Matrix& m) const {
    Element out;
    for (int i = 0; i <= n_; ++i)
      for (int j = 0; j <= n_; ++j) {
        if (i == j) continue;
        if (!m(i, j).is_zero())
          out += m(i, j) * Element::generator(Generator::E(i, j));
      }
    // diagonal (d_0..d_n, traceless): sum d_i e_ii = sum_{i>=1} (d_i - d_0) h_i
    for (int i = 1; i <= n_; ++i) {
      Scalar c = m(i, i) - m(0, 0);
      if (!c.is_zero()) out += c * Element::generator(Generator::H(i));
    }
    return out;
  }

  /// Algebra automorphism extending X -> S^{-1} X S.
  Element apply_conjugation(const Matrix& S, const Element& a) const {
    if (a.has_negative_exponent())
      throw wrong_module_error("conjugation needs non-negative exponents");
    auto Sinv = S.inverse();
    if (!Sinv) throw invalid_automorphism_error("conjugating matrix is singular");
    std::map<int, Element> gen_image;
    for (const auto& g : gens_)
      gen_image[g.order_key()] = matrix_to_element(*Sinv * generator_matrix(g) * S);
    Element out;
    for (const auto& [m, c] : a.terms()) {
      Element acc(c);
      for (const auto& [g, e] : m.factors)
        for (int t = 0; t < e; ++t)
          acc = multiply(acc, gen_image.at(g.order_key()));
      out += acc;
    }
    return out;
  }

 private:
  void build_bracket_table() {
    for (int i = 0; i <= n_; ++i)
      for (int j = 0; j <= n_; ++j)
        if (i != j) gens_.push_back(Generator::E(i, j));
    for (int i = 1; i <= n_; ++i) gens_.push_back(Generator::H(i));

    for (const auto& a : gens_)
      for (const auto& b : gens_) {
        Matrix ma = generator_matrix(a), mb = generator_matrix(b);
        Element br = matrix_to_element(ma * mb - mb * ma);
        if (!br.is_zero()) bracket_table_[{a.order_key(), b.order_key()}] = br;
      }
  }

  Element mul_elem_gen(const Element& a, const Generator& g) const {
    Element out;
    for (const auto& [m, c] : a.terms()) {
      const Element& prod = mul_mono_gen(m, g);
      for (const auto& [pm, pc] : prod.terms()) out.add_term(pm, c * pc);
    }
    return out;
  }

  const Element& mul_mono_gen(const PBWMonomial& m, const Generator& g) const {
    {
      std::lock_guard<std::mutex> lock(memo_mu_);
      auto it = memo_.find({m, g.order_key()});
      if (it != memo_.end()) return it->second;
    }
    Element result;
    if (m.empty() || m.factors.back().first.order_key() < g.order_key()) {
      PBWMonomial out = m;
      out.factors.emplace_back(g, 1);
      result = Element::monomial(out);
    } else if (m.factors.back().first == g) {
      PBWMonomial out = m;
      out.factors.back().second += 1;
      result = Element::monomial(out);
    } else {
      // m = m1 * f with f > g:  m g = (m1 g) f + m1 [f, g]
      Generator f = m.factors.back().first;
      PBWMonomial m1 = m;
      if (--m1.factors.back().second == 0) m1.factors.pop_back();
      result = mul_elem_gen(mul_mono_gen(m1, g), f);
      const Element& br = bracket(f, g);
      for (const auto& [bm, bc] : br.terms()) {
        if (bm.empty()) {
          result += Element::monomial(m1, bc);
        } else {
          // bracket terms have a single generator factor
          result += bc * mul_mono_gen(m1, bm.factors.front().first);
        }
      }
    }
    std::lock_guard<std::mutex> lock(memo_mu_);
    return memo_.emplace(std::make_pair(m, g.order_key()), std::move(result))
        .first->second;
  }

  int n_;
  std::vector<Generator> gens_;
  std::map<std::pair<int, int>, Element> bracket_table_;
  mutable std::mutex memo_mu_;
  mutable std::map<std::pair<PBWMonomial, int>, Element> memo_;
};

}  // namespace slw

#endif
