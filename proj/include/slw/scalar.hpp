#ifndef SLW_SCALAR_HPP
#define SLW_SCALAR_HPP

#include <sstream>
#include <string>

#include "slw/polynomial.hpp"

namespace slw {

/// Element of the coefficient field: a reduced fraction of multivariate
/// polynomials over Q in the registered formal parameters. The denominator is
/// normalized to leading coefficient 1, so equal values have identical
/// representations.
class Scalar {
 public:
  Scalar() : num_(), den_(1) {}
  Scalar(int v) : num_(v), den_(1) {}
  Scalar(const Rat& v) : num_(v), den_(1) {}
  Scalar(const Polynomial& p) : num_(p), den_(1) {}
  Scalar(const Polynomial& num, const Polynomial& den) : num_(num), den_(den) {
    reduce();
  }

  static Scalar param(const std::string& name) {
    return Scalar(Polynomial::variable(param_index(name)));
  }

  /// Parses "p/q" or "p" with integer p, q.
  static Scalar from_rational_string(const std::string& s) {
    return Scalar(rat_from_string(s));
  }

  const Polynomial& num() const { return num_; }
  const Polynomial& den() const { return den_; }

  bool is_zero() const { return num_.is_zero(); }
  bool is_rational() const { return num_.is_constant() && den_.is_constant(); }

  Rat rational_value() const {
    if (!is_rational()) throw error("scalar is not a plain rational: " + to_string());
    if (num_.is_zero()) return Rat(0);
    return num_.constant_value() / den_.constant_value();
  }

  bool is_integer() const { return is_rational() && rat_is_integer(rational_value()); }

  friend Scalar operator+(const Scalar& a, const Scalar& b) {
    return Scalar(a.num_ * b.den_ + b.num_ * a.den_, a.den_ * b.den_);
  }
  friend Scalar operator-(const Scalar& a, const Scalar& b) {
    return Scalar(a.num_ * b.den_ - b.num_ * a.den_, a.den_ * b.den_);
  }
  friend Scalar operator*(const Scalar& a, const Scalar& b) {
    return Scalar(a.num_ * b.num_, a.den_ * b.den_);
  }
  friend Scalar operator/(const Scalar& a, const Scalar& b) {
    if (b.is_zero()) throw error("scalar division by zero");
    return Scalar(a.num_ * b.den_, a.den_ * b.num_);
  }
  Scalar operator-() const {
    Scalar out;
    out.num_ = -num_;
    out.den_ = den_;
    return out;
  }
  Scalar& operator+=(const Scalar& b) { return *this = *this + b; }
  Scalar& operator-=(const Scalar& b) { return *this = *this - b; }
  Scalar& operator*=(const Scalar& b) { return *this = *this * b; }
  Scalar& operator/=(const Scalar& b) { return *this = *this / b; }

  friend bool operator==(const Scalar& a, const Scalar& b) {
    return a.num_ == b.num_ && a.den_ == b.den_;
  }
  friend bool operator!=(const Scalar& a, const Scalar& b) { return !(a == b); }
  friend bool operator<(const Scalar& a, const Scalar& b) {
    if (a.num_ != b.num_) return a.num_ < b.num_;
    return a.den_ < b.den_;
  }

  Scalar substitute(const std::string& name, const Scalar& value) const {
    return eval_fraction(param_index(name), value);
  }

  std::string to_string() const {
    if (den_ == Polynomial(1)) {
      if (num_.is_constant()) return num_.is_zero() ? "0" : num_.constant_value().get_str();
      return paren(num_.to_string());
    }
    std::ostringstream os;
    os << paren(num_.to_string()) << "/" << paren(den_.to_string());
    return os.str();
  }

 private:
  Scalar eval_fraction(int var, const Scalar& value) const {
    // substitute value = p/q into each of num and den
    auto eval_poly = [&](const Polynomial& poly) {
      auto uni = poly.as_univariate(var);
      int deg = uni.empty() ? 0 : uni.rbegin()->first;
      // poly = sum c_e * var^e -> sum c_e p^e q^(deg-e), denominator q^deg
      Polynomial acc;
      for (const auto& [e, c] : uni) {
        Polynomial t = c;
        for (int i = 0; i < e; ++i) t *= value.num_;
        for (int i = 0; i < deg - e; ++i) t *= value.den_;
        acc += t;
      }
      Polynomial q_deg(1);
      for (int i = 0; i < deg; ++i) q_deg *= value.den_;
      return std::make_pair(acc, q_deg);
    };
    auto [np, nq] = eval_poly(num_);
    auto [dp, dq] = eval_poly(den_);
    return Scalar(np * dq, dp * nq);
  }

  static std::string paren(const std::string& s) {
    if (s.find_first_of("+- ") == std::string::npos) return s;
    return "(" + s + ")";
  }

  void reduce() {
    if (den_.is_zero()) throw error("scalar with zero denominator");
    if (num_.is_zero()) {
      den_ = Polynomial(1);
      return;
    }
    if (!den_.is_constant() || !num_.is_constant()) {
      Polynomial g = poly_gcd(num_, den_);
      if (g != Polynomial(1) && !g.is_zero()) {
        num_ = poly_divexact(num_, g);
        den_ = poly_divexact(den_, g);
      }
    }
    Rat lead = den_.leading_coefficient();
    if (lead != 1) {
      num_ = poly_divexact(num_, Polynomial(lead));
      den_ = poly_divexact(den_, Polynomial(lead));
    }
  }

  Polynomial num_;
  Polynomial den_;
};

/// d/d(name); requires the denominator to be free of the variable.
inline Scalar scalar_derivative(const Scalar& s, const std::string& name) {
  int var = param_index(name);
  if (s.den().degree_in(var) != 0)
    throw error("derivative of a fraction with the variable in the denominator");
  return Scalar(poly_derivative(s.num(), var), s.den());
}

inline Scalar operator*(const Rat& a, const Scalar& b) { return Scalar(a) * b; }
inline Scalar operator*(int a, const Scalar& b) { return Scalar(a) * b; }

}  // namespace slw

#endif
