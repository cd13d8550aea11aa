#ifndef SLW_GLN_HPP
#define SLW_GLN_HPP

#include <string>
#include <vector>

#include "slw/matrix.hpp"

namespace slw {

/// Finite dimensional gl_n-module given by one matrix per E(i,j),
/// 1 <= i,j <= n.
struct GlnModuleData {
  int n = 0;
  std::size_t dim = 0;
  std::vector<std::string> labels;
  std::vector<Matrix> mats;  // indexed by (i-1)*n + (j-1)

  const Matrix& action(int i, int j) const {
    if (i < 1 || i > n || j < 1 || j > n)
      throw invalid_index_error("gl_n generator index out of range");
    return mats[static_cast<std::size_t>((i - 1) * n + (j - 1))];
  }

  /// [E(i,j), E(k,l)] = d_jk E(i,l) - d_li E(k,j), checked entry-exact.
  void check_relations() const {
    for (int i = 1; i <= n; ++i)
      for (int j = 1; j <= n; ++j)
        for (int k = 1; k <= n; ++k)
          for (int l = 1; l <= n; ++l) {
            Matrix lhs = action(i, j) * action(k, l) - action(k, l) * action(i, j);
            Matrix rhs(dim, dim);
            if (j == k) rhs = rhs + action(i, l);
            if (l == i) rhs = rhs - action(k, j);
            if (lhs != rhs)
              throw verification_failure("gl_n relation failed at E(" +
                                         std::to_string(i) + "," + std::to_string(j) +
                                         "), E(" + std::to_string(k) + "," +
                                         std::to_string(l) + ")");
          }
  }
};

namespace detail {

/// All k-subsets of {1..n} in lexicographic order.
inline std::vector<std::vector<int>> subsets_lex(int n, int k) {
  std::vector<std::vector<int>> out;
  std::vector<int> cur;
  auto rec = [&](auto&& self, int next) -> void {
    if (static_cast<int>(cur.size()) == k) {
      out.push_back(cur);
      return;
    }
    for (int v = next; v <= n - (k - static_cast<int>(cur.size())) + 1; ++v) {
      cur.push_back(v);
      self(self, v + 1);
      cur.pop_back();
    }
  };
  rec(rec, 1);
  return out;
}

/// Sorts a wedge word into strictly increasing order; returns the sign, or 0
/// on a repeated index.
inline int wedge_sort(std::vector<int>& idx) {
  int sign = 1;
  for (std::size_t a = 0; a < idx.size(); ++a)
    for (std::size_t b = a + 1; b < idx.size(); ++b) {
      if (idx[a] == idx[b]) return 0;
      if (idx[a] > idx[b]) {
        std::swap(idx[a], idx[b]);
        sign = -sign;
      }
    }
  return sign;
}

inline std::size_t subset_index(const std::vector<std::vector<int>>& basis,
                                const std::vector<int>& s) {
  for (std::size_t b = 0; b < basis.size(); ++b)
    if (basis[b] == s) return b;
  throw internal_consistency_error("wedge basis lookup failed");
}

}  // namespace detail

/// The k-th exterior power of the natural gl_n-module, basis indexed by
/// lexicographic k-subsets, action by the Leibniz rule.
inline GlnModuleData wedge_gln_module(int n, int k) {
  if (k < 0 || k > n) throw invalid_index_error("wedge degree must satisfy 0 <= k <= n");
  auto basis = detail::subsets_lex(n, k);
  GlnModuleData V;
  V.n = n;
  V.dim = basis.size();
  for (const auto& s : basis) {
    if (s.empty()) {
      V.labels.push_back("1");
      continue;
    }
    std::string lab = "e(";
    for (std::size_t p = 0; p < s.size(); ++p) {
      if (p) lab += ",";
      lab += std::to_string(s[p]);
    }
    V.labels.push_back(lab + ")");
  }
  for (int i = 1; i <= n; ++i)
    for (int j = 1; j <= n; ++j) {
      Matrix m(V.dim, V.dim);
      for (std::size_t b = 0; b < basis.size(); ++b)
        for (std::size_t p = 0; p < basis[b].size(); ++p) {
          if (basis[b][p] != j) continue;
          std::vector<int> img = basis[b];
          img[p] = i;
          int sign = detail::wedge_sort(img);
          if (sign == 0) continue;
          m(detail::subset_index(basis, img), b) += Scalar(sign);
        }
      V.mats.push_back(std::move(m));
    }
  return V;
}

/// Index sets of the wedge basis (needed by constructions that embed wedges).
inline std::vector<std::vector<int>> wedge_basis_sets(int n, int k) {
  if (k < 0 || k > n) throw invalid_index_error("wedge degree must satisfy 0 <= k <= n");
  return detail::subsets_lex(n, k);
}

}  // namespace slw

#endif
