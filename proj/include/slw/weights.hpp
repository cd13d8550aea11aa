#ifndef SLW_WEIGHTS_HPP
#define SLW_WEIGHTS_HPP

#include <string>
#include <vector>

#include "slw/scalar.hpp"

namespace slw {

/// Weight lambda = sum lambda_i eps_i with sum-zero coordinates
/// (lambda_0 .. lambda_n).
struct WeightVector {
  std::vector<Scalar> coords;

  explicit WeightVector(std::vector<Scalar> c) : coords(std::move(c)) {
    Scalar s;
    for (const auto& x : coords) s += x;
    if (!s.is_zero())
      throw precondition_violation("weight coordinates must sum to zero");
  }

  static WeightVector zero(int n) {
    return WeightVector(std::vector<Scalar>(static_cast<std::size_t>(n) + 1));
  }

  int rank() const { return static_cast<int>(coords.size()) - 1; }

  friend bool operator==(const WeightVector& a, const WeightVector& b) {
    return a.coords == b.coords;
  }
  friend bool operator!=(const WeightVector& a, const WeightVector& b) {
    return !(a == b);
  }

  friend WeightVector operator-(const WeightVector& a, const WeightVector& b) {
    std::vector<Scalar> c(a.coords.size());
    for (std::size_t i = 0; i < c.size(); ++i) c[i] = a.coords[i] - b.coords[i];
    return WeightVector(std::move(c));
  }

  std::string to_string() const {
    std::string out = "(";
    for (std::size_t i = 0; i < coords.size(); ++i) {
      if (i) out += ", ";
      out += coords[i].to_string();
    }
    return out + ")";
  }
};

/// rho_i = (n - 2i)/2 in the eps coordinates.
inline std::vector<Scalar> rho_vector(int n) {
  std::vector<Scalar> out(static_cast<std::size_t>(n) + 1);
  for (int i = 0; i <= n; ++i)
    out[static_cast<std::size_t>(i)] = Scalar(n - 2 * i) / Scalar(2);
  return out;
}

struct WeightClass {
  bool regular;
  bool integral;
};

/// Regular iff lambda_0, lambda_1 - 1, ..., lambda_n - n are pairwise
/// distinct; integral iff all consecutive differences are integers.
/// Requires plain rational coordinates.
inline WeightClass classify_weight(const WeightVector& lambda) {
  const auto& c = lambda.coords;
  for (const auto& x : c)
    if (!x.is_rational())
      throw precondition_violation("weight classification needs rational coordinates");
  bool regular = true;
  for (std::size_t i = 0; i < c.size() && regular; ++i)
    for (std::size_t j = i + 1; j < c.size(); ++j)
      if (c[i] - Scalar(static_cast<int>(i)) == c[j] - Scalar(static_cast<int>(j))) {
        regular = false;
        break;
      }
  bool integral = true;
  for (std::size_t i = 0; i + 1 < c.size(); ++i)
    if (!(c[i] - c[i + 1]).is_integer()) {
      integral = false;
      break;
    }
  return {regular, integral};
}

/// Dot action w.lambda = w(lambda + rho) - rho, with w a permutation of
/// {0..n} given as the image list w[i].
inline WeightVector dot_action(const std::vector<int>& w, const WeightVector& lambda) {
  int n = lambda.rank();
  if (static_cast<int>(w.size()) != n + 1)
    throw invalid_index_error("permutation size must be n+1");
  auto rho = rho_vector(n);
  std::vector<Scalar> shifted(lambda.coords);
  for (int i = 0; i <= n; ++i) shifted[static_cast<std::size_t>(i)] += rho[static_cast<std::size_t>(i)];
  std::vector<Scalar> out(static_cast<std::size_t>(n) + 1);
  std::vector<bool> seen(static_cast<std::size_t>(n) + 1, false);
  for (int i = 0; i <= n; ++i) {
    int im = w[static_cast<std::size_t>(i)];
    if (im < 0 || im > n || seen[static_cast<std::size_t>(im)])
      throw invalid_index_error("not a permutation of 0..n");
    seen[static_cast<std::size_t>(im)] = true;
    out[static_cast<std::size_t>(im)] = shifted[static_cast<std::size_t>(i)];
  }
  for (int i = 0; i <= n; ++i) out[static_cast<std::size_t>(i)] -= rho[static_cast<std::size_t>(i)];
  return WeightVector(std::move(out));
}

/// gamma(c eps_0) = (nc/(n+1)) eps_0 - (c/(n+1)) sum_{i>=1} eps_i.
inline WeightVector gamma_weight(const Scalar& c, int n) {
  std::vector<Scalar> out(static_cast<std::size_t>(n) + 1);
  Scalar unit = c / Scalar(n + 1);
  out[0] = Scalar(n) * unit;
  for (int i = 1; i <= n; ++i) out[static_cast<std::size_t>(i)] = -unit;
  return WeightVector(std::move(out));
}

/// Scalar of the quadratic Casimir on a highest weight module of weight
/// lambda: <lambda, lambda + 2 rho> under the trace form.
inline Scalar casimir_eigenvalue(const WeightVector& lambda) {
  auto rho = rho_vector(lambda.rank());
  Scalar out;
  for (std::size_t i = 0; i < lambda.coords.size(); ++i)
    out += lambda.coords[i] * (lambda.coords[i] + 2 * rho[i]);
  return out;
}

/// Embeds a gl_n highest weight (lambda_1..lambda_n) as the sl_{n+1} weight
/// -(sum lambda_i) eps_0 + sum lambda_i eps_i.
inline WeightVector gln_weight_embed(const std::vector<Scalar>& lam) {
  std::vector<Scalar> out(lam.size() + 1);
  Scalar s;
  for (const auto& x : lam) s += x;
  out[0] = -s;
  for (std::size_t i = 0; i < lam.size(); ++i) out[i + 1] = lam[i];
  return WeightVector(std::move(out));
}

}  // namespace slw

#endif
