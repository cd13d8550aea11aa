#ifndef SLW_WMODULE_HPP
#define SLW_WMODULE_HPP

#include <map>
#include <vector>

#include "slw/gln.hpp"
#include "slw/w_algebra.hpp"

namespace slw {

/// Finite dimensional W-module: one matrix per X(i,j) and OMEGA(k).
struct WModuleData {
  int n = 0;
  std::size_t dim = 0;
  std::map<int, Matrix> mats;  // WGenerator key -> matrix

  const Matrix& action(int key) const {
    auto it = mats.find(key);
    if (it == mats.end())
      throw invalid_index_error("no matrix for W generator " +
                                WGenerator::key_name(key));
    return it->second;
  }

  Matrix evaluate(const WMonomial& m) const {
    Matrix out = Matrix::identity(dim);
    for (const auto& [k, e] : m)
      for (int t = 0; t < e; ++t) out = out * action(k);
    return out;
  }

  /// Evaluates an element of W given as a scalar combination of ordered
  /// monomials (all B-parts must be trivial).
  Matrix evaluate(const WBTensor& t) const {
    Matrix out(dim, dim);
    for (const auto& [k, c] : t.terms) {
      if (!k.second.empty())
        throw wrong_module_error("cannot evaluate a non-scalar B-part in a W-module");
      out = out + c * evaluate(k.first);
    }
    return out;
  }
};

/// Checks [g1,g2] against the commutation relations of W on every generator
/// pair; throws verification_failure on the first mismatch.
inline void check_w_relations(WAlgebra& W, const WModuleData& V) {
  if (V.n != W.rank())
    throw schema_error("W-module rank does not match the algebra");
  const auto& gens = W.generators();
  for (std::size_t a = 0; a < gens.size(); ++a)
    for (std::size_t b = a + 1; b < gens.size(); ++b) {
      Matrix lhs = V.action(gens[a].key()) * V.action(gens[b].key()) -
                   V.action(gens[b].key()) * V.action(gens[a].key());
      Matrix rhs = V.evaluate(W.w_commutator(gens[a], gens[b]));
      if (lhs != rhs)
        throw verification_failure("W-module relation failed at [" +
                                   gens[a].to_string() + ", " +
                                   gens[b].to_string() + "]");
    }
}

/// One dimensional module: x_{ij} -> c/(n+1), omega_k -> c^2/(n+1)^2 + c/(n+1).
inline WModuleData one_dim_w_module(const Scalar& c, int n) {
  if (n < 2) throw invalid_rank_error("rank must satisfy n >= 2");
  WModuleData V;
  V.n = n;
  V.dim = 1;
  Scalar unit = c / Scalar(n + 1);
  Matrix x(1, 1), w(1, 1);
  x(0, 0) = unit;
  w(0, 0) = unit * unit + unit;
  for (int i = 1; i <= n; ++i)
    for (int j = 1; j <= n; ++j)
      if (i != j) V.mats[WGenerator::x_key(i, j)] = x;
  for (int k = 1; k <= n; ++k) V.mats[WGenerator::omega_key(k)] = w;
  return V;
}

/// W-action on a gl_n-module:
///   X(i,j) -> E(i,j) - E(i,i),
///   OMEGA(k) -> sum_j (E(k,j) E(j,j) - E(k,j)).
inline WModuleData w_action_on_wedge(const GlnModuleData& V) {
  WModuleData out;
  out.n = V.n;
  out.dim = V.dim;
  for (int i = 1; i <= V.n; ++i)
    for (int j = 1; j <= V.n; ++j)
      if (i != j)
        out.mats[WGenerator::x_key(i, j)] = V.action(i, j) - V.action(i, i);
  for (int k = 1; k <= V.n; ++k) {
    Matrix m(V.dim, V.dim);
    for (int j = 1; j <= V.n; ++j)
      m = m + V.action(k, j) * V.action(j, j) - V.action(k, j);
    out.mats[WGenerator::omega_key(k)] = m;
  }
  return out;
}

/// Restriction of a W-module to an invariant subspace with the given basis
/// columns (each a coordinate vector in the ambient module).
inline WModuleData restrict_w_module(const WModuleData& V,
                                     const std::vector<std::vector<Scalar>>& basis) {
  WModuleData out;
  out.n = V.n;
  out.dim = basis.size();
  Matrix B(V.dim, basis.size());
  for (std::size_t c = 0; c < basis.size(); ++c) {
    if (basis[c].size() != V.dim)
      throw schema_error("subspace basis vector has wrong length");
    for (std::size_t r = 0; r < V.dim; ++r) B(r, c) = basis[c][r];
  }
  for (const auto& [key, m] : V.mats) {
    Matrix img = m * B;
    Matrix small(basis.size(), basis.size());
    for (std::size_t c = 0; c < basis.size(); ++c) {
      std::vector<Scalar> col(V.dim);
      for (std::size_t r = 0; r < V.dim; ++r) col[r] = img(r, c);
      auto sol = B.solve(col);
      if (!sol)
        throw wrong_module_error("subspace is not invariant under " +
                                 WGenerator::key_name(key));
      for (std::size_t r = 0; r < basis.size(); ++r) small(r, c) = (*sol)[r];
    }
    out.mats[key] = std::move(small);
  }
  return out;
}

}  // namespace slw

#endif
