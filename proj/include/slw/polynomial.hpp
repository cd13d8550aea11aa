#ifndef SLW_POLYNOMIAL_HPP
#define SLW_POLYNOMIAL_HPP

#include <gmpxx.h>

#include <algorithm>
#include <map>
#include <mutex>
#include <sstream>
#include <string>
#include <utility>
#include <vector>

#include "slw/errors.hpp"

namespace slw {

using Rat = mpq_class;

inline std::string rat_to_string(const Rat& q) { return q.get_str(); }

inline Rat rat_from_string(const std::string& s) {
  Rat q;
  if (q.set_str(s, 10) != 0) throw schema_error("bad rational literal: " + s);
  q.canonicalize();
  return q;
}

inline bool rat_is_integer(const Rat& q) {
  Rat t = q;
  t.canonicalize();
  return t.get_den() == 1;
}

/// Registry of formal parameter names (c, mu1, ..., lam0, ...).
/// Indices are assigned on first use and stay fixed for the process.
class ParamRegistry {
 public:
  static ParamRegistry& instance() {
    static ParamRegistry reg;
    return reg;
  }

  int index_of(const std::string& name) {
    std::lock_guard<std::mutex> lock(mu_);
    for (std::size_t i = 0; i < names_.size(); ++i)
      if (names_[i] == name) return static_cast<int>(i);
    names_.push_back(name);
    return static_cast<int>(names_.size() - 1);
  }

  std::string name_of(int idx) const {
    std::lock_guard<std::mutex> lock(mu_);
    return names_.at(static_cast<std::size_t>(idx));
  }

 private:
  mutable std::mutex mu_;
  std::vector<std::string> names_;
};

inline int param_index(const std::string& name) {
  return ParamRegistry::instance().index_of(name);
}

/// Sparse power product of parameters: sorted (var, exp>0) pairs.
using Monomial = std::vector<std::pair<int, int>>;

inline Monomial monomial_mul(const Monomial& a, const Monomial& b) {
  Monomial out;
  std::size_t i = 0, j = 0;
  while (i < a.size() || j < b.size()) {
    if (j == b.size() || (i < a.size() && a[i].first < b[j].first)) {
      out.push_back(a[i++]);
    } else if (i == a.size() || b[j].first < a[i].first) {
      out.push_back(b[j++]);
    } else {
      out.emplace_back(a[i].first, a[i].second + b[j].second);
      ++i, ++j;
    }
  }
  return out;
}

/// Multivariate polynomial over Q in registered parameters.
class Polynomial {
 public:
  using Terms = std::map<Monomial, Rat>;

  Polynomial() = default;
  Polynomial(const Rat& c) {
    if (c != 0) terms_[Monomial{}] = c;
  }
  Polynomial(int c) : Polynomial(Rat(c)) {}

  static Polynomial variable(int var, int exp = 1) {
    Polynomial p;
    if (exp == 0) return Polynomial(1);
    p.terms_[Monomial{{var, exp}}] = 1;
    return p;
  }

  const Terms& terms() const { return terms_; }
  bool is_zero() const { return terms_.empty(); }

  bool is_constant() const {
    return terms_.empty() || (terms_.size() == 1 && terms_.begin()->first.empty());
  }

  Rat constant_value() const {
    if (terms_.empty()) return Rat(0);
    if (!is_constant()) throw error("polynomial is not constant");
    return terms_.begin()->second;
  }

  friend Polynomial operator+(const Polynomial& a, const Polynomial& b) {
    Polynomial out = a;
    for (const auto& [m, c] : b.terms_) out.add_term(m, c);
    return out;
  }
  friend Polynomial operator-(const Polynomial& a, const Polynomial& b) {
    Polynomial out = a;
    for (const auto& [m, c] : b.terms_) out.add_term(m, -c);
    return out;
  }
  Polynomial operator-() const {
    Polynomial out;
    for (const auto& [m, c] : terms_) out.terms_[m] = -c;
    return out;
  }
  friend Polynomial operator*(const Polynomial& a, const Polynomial& b) {
    Polynomial out;
    for (const auto& [ma, ca] : a.terms_)
      for (const auto& [mb, cb] : b.terms_) out.add_term(monomial_mul(ma, mb), ca * cb);
    return out;
  }
  Polynomial& operator+=(const Polynomial& b) { return *this = *this + b; }
  Polynomial& operator-=(const Polynomial& b) { return *this = *this - b; }
  Polynomial& operator*=(const Polynomial& b) { return *this = *this * b; }

  friend bool operator==(const Polynomial& a, const Polynomial& b) {
    return a.terms_ == b.terms_;
  }
  friend bool operator!=(const Polynomial& a, const Polynomial& b) { return !(a == b); }
  friend bool operator<(const Polynomial& a, const Polynomial& b) {
    if (a.terms_.size() != b.terms_.size()) return a.terms_.size() < b.terms_.size();
    auto ia = a.terms_.begin();
    auto ib = b.terms_.begin();
    for (; ia != a.terms_.end(); ++ia, ++ib) {
      if (ia->first != ib->first) return ia->first < ib->first;
      if (ia->second != ib->second) return ia->second < ib->second;
    }
    return false;
  }

  void add_term(const Monomial& m, const Rat& c) {
    auto it = terms_.find(m);
    if (it == terms_.end()) {
      if (c != 0) terms_[m] = c;
    } else {
      it->second += c;
      if (it->second == 0) terms_.erase(it);
    }
  }

  /// Highest parameter index occurring, or -1 for constants.
  int top_variable() const {
    int top = -1;
    for (const auto& [m, c] : terms_)
      for (const auto& [v, e] : m) top = std::max(top, v);
    return top;
  }

  int degree_in(int var) const {
    int d = 0;
    for (const auto& [m, c] : terms_)
      for (const auto& [v, e] : m)
        if (v == var) d = std::max(d, e);
    return d;
  }

  int total_degree() const {
    int d = 0;
    for (const auto& [m, c] : terms_) {
      int s = 0;
      for (const auto& [v, e] : m) s += e;
      d = std::max(d, s);
    }
    return d;
  }

  /// Coefficients as polynomials in the remaining variables, indexed by the
  /// exponent of `var`.
  std::map<int, Polynomial> as_univariate(int var) const {
    std::map<int, Polynomial> out;
    for (const auto& [m, c] : terms_) {
      int e = 0;
      Monomial rest;
      for (const auto& [v, ex] : m) {
        if (v == var)
          e = ex;
        else
          rest.emplace_back(v, ex);
      }
      out[e].add_term(rest, c);
    }
    return out;
  }

  static Polynomial from_univariate(const std::map<int, Polynomial>& coeffs, int var) {
    Polynomial out;
    for (const auto& [e, p] : coeffs) out += p * Polynomial::variable(var, e);
    return out;
  }

  Polynomial substitute(int var, const Polynomial& value) const {
    auto uni = as_univariate(var);
    Polynomial out;
    for (const auto& [e, p] : uni) {
      Polynomial pw(1);
      for (int i = 0; i < e; ++i) pw *= value;
      out += p * pw;
    }
    return out;
  }

  /// Leading coefficient under the map ordering (used only for normalization;
  /// any fixed choice works).
  Rat leading_coefficient() const {
    if (terms_.empty()) return Rat(0);
    return terms_.rbegin()->second;
  }

  std::string to_string() const {
    if (terms_.empty()) return "0";
    std::ostringstream os;
    bool first = true;
    for (auto it = terms_.rbegin(); it != terms_.rend(); ++it) {
      const Rat& c = it->second;
      if (!first) os << (c >= 0 ? " + " : " - ");
      Rat ac = first ? c : Rat(abs(c));
      first = false;
      bool coeff_shown = false;
      if (it->first.empty() || ac != 1) {
        os << ac.get_str();
        coeff_shown = true;
      }
      if (ac == -1 && !it->first.empty()) {
        // printed as "-1", rewrite to bare minus
      }
      for (const auto& [v, e] : it->first) {
        if (coeff_shown) os << "*";
        coeff_shown = true;
        os << ParamRegistry::instance().name_of(v);
        if (e != 1) os << "^" << e;
      }
    }
    return os.str();
  }

 private:
  Terms terms_;
};

inline Polynomial poly_derivative(const Polynomial& p, int var) {
  Polynomial out;
  for (const auto& [e, c] : p.as_univariate(var))
    if (e > 0) out += Polynomial(Rat(e)) * c * Polynomial::variable(var, e - 1);
  return out;
}

// ---- exact division and gcd (primitive PRS) --------------------------------

Polynomial poly_gcd(const Polynomial& a, const Polynomial& b);

/// Exact division; throws if b does not divide a.
inline Polynomial poly_divexact(const Polynomial& a, const Polynomial& b) {
  if (b.is_zero()) throw error("polynomial division by zero");
  if (a.is_zero()) return Polynomial();
  if (b.is_constant()) {
    Rat inv = 1 / b.constant_value();
    Polynomial out;
    for (const auto& [m, c] : a.terms()) out.add_term(m, c * inv);
    return out;
  }
  int var = b.top_variable();
  auto ua = a.as_univariate(var);
  auto ub = b.as_univariate(var);
  int db = ub.rbegin()->first;
  const Polynomial& lead_b = ub.rbegin()->second;
  std::map<int, Polynomial> q;
  Polynomial rem = a;
  auto ur = rem.as_univariate(var);
  while (!rem.is_zero()) {
    ur = rem.as_univariate(var);
    int dr = ur.rbegin()->first;
    if (dr < db) throw error("inexact polynomial division");
    Polynomial qc = poly_divexact(ur.rbegin()->second, lead_b);
    q[dr - db] = qc;
    rem = rem - b * qc * Polynomial::variable(var, dr - db);
  }
  return Polynomial::from_univariate(q, var);
}

/// Pseudo-remainder of a by b in variable var.
inline Polynomial poly_prem(const Polynomial& a, const Polynomial& b, int var) {
  auto ub = b.as_univariate(var);
  int db = ub.rbegin()->first;
  const Polynomial lead_b = ub.rbegin()->second;
  Polynomial r = a;
  while (true) {
    if (r.is_zero()) return r;
    auto ur = r.as_univariate(var);
    int dr = ur.rbegin()->first;
    if (dr < db) return r;
    const Polynomial lead_r = ur.rbegin()->second;
    r = r * lead_b - b * lead_r * Polynomial::variable(var, dr - db);
  }
}

/// Content of a in var: gcd of its coefficient polynomials.
inline Polynomial poly_content(const Polynomial& a, int var) {
  auto ua = a.as_univariate(var);
  Polynomial g;
  for (const auto& [e, p] : ua) g = poly_gcd(g, p);
  return g;
}

inline Polynomial poly_gcd(const Polynomial& a, const Polynomial& b) {
  if (a.is_zero() && b.is_zero()) return Polynomial();
  if (a.is_zero() || a.is_constant()) {
    if (a.is_constant() && !a.is_zero()) return Polynomial(1);
    // a == 0: normalize b so that gcd is deterministic
    if (b.is_constant()) return Polynomial(1);
    Polynomial nb = b;
    return poly_divexact(nb, Polynomial(nb.leading_coefficient()));
  }
  if (b.is_zero() || b.is_constant()) return poly_gcd(b, a);

  int var = std::max(a.top_variable(), b.top_variable());
  Polynomial ca = poly_content(a, var);
  Polynomial cb = poly_content(b, var);
  Polynomial cont = poly_gcd(ca, cb);
  Polynomial pa = poly_divexact(a, ca);
  Polynomial pb = poly_divexact(b, cb);
  if (pa.degree_in(var) < pb.degree_in(var)) std::swap(pa, pb);
  while (!pb.is_zero()) {
    Polynomial r = poly_prem(pa, pb, var);
    if (!r.is_zero()) r = poly_divexact(r, poly_content(r, var));
    pa = pb;
    pb = r;
    if (!pb.is_zero() && pb.degree_in(var) == 0) {
      // coprime in var
      pa = Polynomial(1);
      pb = Polynomial();
    }
  }
  Polynomial g = cont * pa;
  if (g.is_zero()) return g;
  return poly_divexact(g, Polynomial(g.leading_coefficient()));
}

}  // namespace slw

#endif
