#ifndef SLW_TWIST_HPP
#define SLW_TWIST_HPP

#include <string>
#include <vector>

#include "slw/algebra.hpp"

namespace slw {

struct TwistStep {
  std::string kind;  // "permutation", "scaling", "shear"
  Matrix S;
};

struct TwistSequence {
  std::vector<TwistStep> steps;
  Matrix composed;  // product in application order; X -> composed^-1 X composed
};

namespace detail {

inline Matrix unit_matrix(int n, int i, int j) {
  Matrix m(static_cast<std::size_t>(n) + 1, static_cast<std::size_t>(n) + 1);
  m(static_cast<std::size_t>(i), static_cast<std::size_t>(j)) = Scalar(1);
  return m;
}

}  // namespace detail

/// Eigenvalues of e_{01}..e_{0n} on a common eigenvector after twisting by
/// X -> S^-1 X S: each twisted e_{0i} must stay in span{e_{0j}}.
inline std::vector<Scalar> twist_eigenvalues(const Matrix& S,
                                             const std::vector<Scalar>& a) {
  int n = static_cast<int>(a.size()) - 1;
  auto Sinv = S.inverse();
  if (!Sinv) throw invalid_automorphism_error("conjugating matrix is singular");
  std::vector<Scalar> out(a.size());
  for (int i = 1; i <= n; ++i) {
    Matrix img = (*Sinv) * detail::unit_matrix(n, 0, i) * S;
    Scalar val;
    for (std::size_t r = 0; r <= static_cast<std::size_t>(n); ++r)
      for (std::size_t c = 0; c <= static_cast<std::size_t>(n); ++c) {
        if (img(r, c).is_zero()) continue;
        if (r != 0 || c == 0)
          throw invalid_automorphism_error(
              "twist does not preserve the span of the e_{0j}");
        val += img(r, c) * a[c];
      }
    out[static_cast<std::size_t>(i)] = val;
  }
  return out;
}

/// Produces the elementary conjugations (permutation, scaling, shears) that
/// carry the eigenvalue vector a of (e_{01}..e_{0n}) to (1,..,1).
inline TwistSequence twist_to_standard(const std::vector<Scalar>& a_in) {
  int n = static_cast<int>(a_in.size()) - 1;
  if (n < 1) throw schema_error("eigenvalue vector must have entries a[1..n]");
  std::vector<Scalar> a = a_in;
  bool all_zero = true;
  for (int i = 1; i <= n; ++i)
    if (!a[static_cast<std::size_t>(i)].is_zero()) all_zero = false;
  if (all_zero) throw no_twist_error("all e_{0i}-eigenvalues vanish");

  TwistSequence seq;
  seq.composed = Matrix::identity(static_cast<std::size_t>(n) + 1);
  auto push = [&](const std::string& kind, const Matrix& S) {
    seq.steps.push_back({kind, S});
    // step t+1 twists the already-twisted module: the composite conjugation
    // is S_{t+1} S_t ... S_1
    seq.composed = S * seq.composed;
    a = twist_eigenvalues(S, a);
  };

  if (a[1].is_zero()) {
    int p = 2;
    while (a[static_cast<std::size_t>(p)].is_zero()) ++p;
    Matrix S(static_cast<std::size_t>(n) + 1, static_cast<std::size_t>(n) + 1);
    for (int i = 0; i <= n; ++i) {
      int to = i == 1 ? p : (i == p ? 1 : i);
      S(static_cast<std::size_t>(to), static_cast<std::size_t>(i)) = Scalar(1);
    }
    push("permutation", S);
  }
  if (a[1] != Scalar(1)) {
    Matrix S = Matrix::identity(static_cast<std::size_t>(n) + 1);
    S(0, 0) = a[1];
    push("scaling", S);
  }
  for (int i = 2; i <= n; ++i) {
    if (a[static_cast<std::size_t>(i)] == Scalar(1)) continue;
    Matrix S = Matrix::identity(static_cast<std::size_t>(n) + 1);
    S(static_cast<std::size_t>(i), 1) = Scalar(1) - a[static_cast<std::size_t>(i)];
    push("shear", S);
  }

  for (int i = 1; i <= n; ++i)
    if (a[static_cast<std::size_t>(i)] != Scalar(1))
      throw internal_consistency_error("twist did not normalize the eigenvalues");
  return seq;
}

}  // namespace slw

#endif
