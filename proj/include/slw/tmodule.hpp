#ifndef SLW_TMODULE_HPP
#define SLW_TMODULE_HPP

#include <string>
#include <vector>

#include "slw/formal.hpp"
#include "slw/gln.hpp"

namespace slw {

/// Vector of T(P, V): coefficient polynomial (in the d- or x-variables) per
/// basis index of V.
using TVector = FormalSum<int>;

/// Which D_n-module the tensor factor P is.
enum class PKind { Omega, Poly };

inline std::string omega_var(int i) { return "d" + std::to_string(i); }
inline std::string poly_var(int i) { return "x" + std::to_string(i); }

/// T(P, V): the space P (x) V as a module through the homomorphism
///   h_k   -> x_k del_k (x) 1 + 1 (x) E_kk
///   e_ij  -> 1 (x) E_ij + x_i del_j (x) 1
///   e_0j  -> -del_j (x) 1
///   e_i0  -> sum_q x_q (x) E_iq + x_i sum_q x_q del_q (x) 1 + x_i (x) I.
/// With P = Omega, del_i f = -f(d+e_i) and x_i f = -f(d-e_i) d_i.
struct TModule {
  PKind kind;
  GlnModuleData V;

  int n() const { return V.n; }

  Scalar var(int i) const {
    return Scalar::param(kind == PKind::Omega ? omega_var(i) : poly_var(i));
  }

  Scalar shift(const Scalar& f, int i, int by) const {
    std::string name = omega_var(i);
    return f.substitute(name, Scalar::param(name) + Scalar(by));
  }

  /// del_i acting on P.
  Scalar del(const Scalar& f, int i) const {
    if (kind == PKind::Omega) return -shift(f, i, 1);
    return scalar_derivative(f, poly_var(i));
  }

  /// x_i acting on P.
  Scalar xop(const Scalar& f, int i) const {
    if (kind == PKind::Omega) return -shift(f, i, -1) * var(i);
    return var(i) * f;
  }

  /// d_i = x_i del_i acting on P.
  Scalar euler(const Scalar& f, int i) const {
    if (kind == PKind::Omega) return var(i) * f;
    return xop(del(f, i), i);
  }

  /// Inverse of the e_{0i} action (Omega only, where e_{0i} is bijective).
  Scalar e0_inverse(const Scalar& f, int i) const {
    if (kind != PKind::Omega)
      throw wrong_module_error("e_{0i} is only invertible on Omega");
    // e_{0i} f = -del_i f = f(d+e_i)
    return shift(f, i, -1);
  }

  void add_matrix_image(TVector& out, const Matrix& m, int b, const Scalar& f) const {
    for (std::size_t r = 0; r < V.dim; ++r) fs_add(out, static_cast<int>(r), f * m(r, b));
  }

  TVector act(const Generator& g, const TVector& v) const {
    TVector out;
    for (const auto& [b, f] : v) {
      if (g.is_H()) {
        fs_add(out, b, euler(f, g.i));
        add_matrix_image(out, V.action(g.i, g.i), b, f);
      } else if (g.i == 0) {
        fs_add(out, b, -del(f, g.j));
      } else if (g.j == 0) {
        for (int q = 1; q <= n(); ++q)
          add_matrix_image(out, V.action(g.i, q), b, xop(f, q));
        Scalar eul;
        for (int q = 1; q <= n(); ++q) eul += xop(del(f, q), q);
        fs_add(out, b, xop(eul, g.i));
        // x_i (x) I_n, with I_n = sum_q E_qq acting through V
        for (int q = 1; q <= n(); ++q)
          add_matrix_image(out, V.action(q, q), b, xop(f, g.i));
      } else {
        add_matrix_image(out, V.action(g.i, g.j), b, f);
        fs_add(out, b, xop(del(f, g.j), g.i));
      }
    }
    return out;
  }

  /// Applies a canonical element of U (or U_S when P = Omega), factor by
  /// factor from the right.
  TVector apply_element(const Element& u, const TVector& v) const {
    TVector out;
    for (const auto& [m, c] : u.terms()) {
      TVector cur = fs_scale(v, c);
      for (auto it = m.factors.rbegin(); it != m.factors.rend(); ++it) {
        const auto& [g, e] = *it;
        if (e < 0) {
          TVector next;
          for (const auto& [b, f] : cur) {
            Scalar cf = f;
            for (int t = 0; t < -e; ++t) cf = e0_inverse(cf, g.j);
            fs_add(next, b, cf);
          }
          cur = std::move(next);
        } else {
          for (int t = 0; t < e; ++t) cur = act(g, cur);
        }
      }
      fs_add(out, cur);
    }
    return out;
  }
};

inline TModule t_omega_wedge(int n, int k) {
  return {PKind::Omega, wedge_gln_module(n, k)};
}

/// pi_k: T(P, wedge^k) -> T(P, wedge^{k+1}), f (x) v -> sum_i (del_i f) (x) (e_i ^ v).
inline TVector pi_map(const TModule& src, int k, const TVector& v) {
  int n = src.n();
  if (k < 0 || k > n - 1) throw invalid_index_error("pi_k needs 0 <= k <= n-1");
  auto lo = wedge_basis_sets(n, k);
  auto hi = wedge_basis_sets(n, k + 1);
  if (src.V.dim != lo.size())
    throw wrong_module_error("vector is not over the wedge-k module");
  TVector out;
  for (const auto& [b, f] : v)
    for (int i = 1; i <= n; ++i) {
      std::vector<int> idx{i};
      idx.insert(idx.end(), lo[static_cast<std::size_t>(b)].begin(),
                 lo[static_cast<std::size_t>(b)].end());
      int sign = detail::wedge_sort(idx);
      if (sign == 0) continue;
      fs_add(out, static_cast<int>(detail::subset_index(hi, idx)),
             Scalar(sign) * src.del(f, i));
    }
  return out;
}

// ---- truncations and Whittaker extraction ----------------------------------

/// Splits a coefficient into monomials in the listed variables; the
/// denominator must be free of them.
inline std::map<std::vector<int>, Scalar> split_by_vars(
    const Scalar& f, const std::vector<int>& vars) {
  for (int v : vars)
    if (f.den().degree_in(v) != 0)
      throw internal_consistency_error("module variable in a denominator");
  std::map<std::vector<int>, Scalar> out;
  for (const auto& [mono, c] : f.num().terms()) {
    std::vector<int> exps(vars.size(), 0);
    Monomial rest;
    for (const auto& [var, e] : mono) {
      bool hit = false;
      for (std::size_t p = 0; p < vars.size(); ++p)
        if (vars[p] == var) {
          exps[p] = e;
          hit = true;
          break;
        }
      if (!hit) rest.emplace_back(var, e);
    }
    Polynomial pc;
    pc.add_term(rest, c);
    auto it = out.find(exps);
    Scalar add = Scalar(pc, f.den());
    if (it == out.end())
      out[exps] = add;
    else
      it->second += add;
  }
  return out;
}

/// The degree-<= deg slice of T(P, V), with exact generator matrices.
struct TTruncation {
  const TModule& M;
  int deg;
  std::vector<std::pair<std::vector<int>, int>> basis;  // (exponents, V index)
  std::map<std::pair<std::vector<int>, int>, std::size_t> index;
  std::vector<int> vars;

  TTruncation(const TModule& mod, int degree) : M(mod), deg(degree) {
    if (deg < 0) throw invalid_truncation_error("degree bound must be >= 0");
    for (int i = 1; i <= M.n(); ++i)
      vars.push_back(param_index(M.kind == PKind::Omega ? omega_var(i) : poly_var(i)));
    std::vector<int> exps(static_cast<std::size_t>(M.n()), 0);
    enumerate(0, deg, exps);
  }

  std::size_t dim() const { return basis.size(); }

  std::vector<Scalar> coords(const TVector& v) const {
    std::vector<Scalar> out(basis.size());
    for (const auto& [b, f] : v)
      for (const auto& [exps, c] : split_by_vars(f, vars)) {
        auto it = index.find({exps, b});
        if (it == index.end())
          throw invalid_truncation_error("vector leaves the truncated space");
        out[it->second] += c;
      }
    return out;
  }

  TVector vector_of(const std::vector<Scalar>& c) const {
    TVector out;
    for (std::size_t i = 0; i < basis.size(); ++i) {
      if (c[i].is_zero()) continue;
      Scalar mono(1);
      for (std::size_t p = 0; p < vars.size(); ++p)
        mono *= Scalar(Polynomial::variable(vars[p], basis[i].first[p]));
      fs_add(out, basis[i].second, c[i] * mono);
    }
    return out;
  }

  /// Matrix of a generator; throws invalid_truncation_error when the action
  /// leaves the slice.
  Matrix matrix_of(const Generator& g) const {
    Matrix m(dim(), dim());
    for (std::size_t b = 0; b < basis.size(); ++b) {
      TVector v = vector_of(unit(b));
      auto col = coords(M.act(g, v));
      for (std::size_t r = 0; r < dim(); ++r) m(r, b) = col[r];
    }
    return m;
  }

 private:
  std::vector<Scalar> unit(std::size_t i) const {
    std::vector<Scalar> out(basis.size());
    out[i] = Scalar(1);
    return out;
  }

  void enumerate(std::size_t pos, int budget, std::vector<int>& exps) {
    if (pos == exps.size()) {
      for (int b = 0; b < static_cast<int>(M.V.dim); ++b) {
        index[{exps, b}] = basis.size();
        basis.emplace_back(exps, b);
      }
      return;
    }
    for (int e = 0; e <= budget; ++e) {
      exps[pos] = e;
      enumerate(pos + 1, budget - e, exps);
    }
    exps[pos] = 0;
  }
};

/// Exact basis of the joint eigenspace of commuting operators ops[i] with
/// eigenvalues a[i]: the kernel of the stacked (ops[i] - a[i] I).
inline std::vector<std::vector<Scalar>> joint_eigenspace(
    const std::vector<Matrix>& ops, const std::vector<Scalar>& a) {
  if (ops.empty()) throw precondition_violation("no operators given");
  std::size_t d = ops[0].cols();
  Matrix stacked(ops.size() * d, d);
  for (std::size_t i = 0; i < ops.size(); ++i)
    for (std::size_t r = 0; r < d; ++r)
      for (std::size_t c = 0; c < d; ++c) {
        Scalar v = ops[i](r, c);
        if (r == c) v -= a[i];
        stacked(i * d + r, c) = v;
      }
  Matrix K = stacked.kernel();
  std::vector<std::vector<Scalar>> out;
  for (std::size_t c = 0; c < K.cols(); ++c) {
    std::vector<Scalar> v(d);
    for (std::size_t r = 0; r < d; ++r) v[r] = K(r, c);
    out.push_back(std::move(v));
  }
  return out;
}

/// Basis of the subspace of span(space) lying in the joint eigenspace.
/// Columns of `space` are coordinate vectors of the spanning set.
inline std::vector<std::vector<Scalar>> joint_eigenspace_within(
    const std::vector<Matrix>& ops, const std::vector<Scalar>& a,
    const Matrix& raw_space) {
  if (ops.empty()) throw precondition_violation("no operators given");
  std::size_t d = ops[0].cols();
  // reduce the spanning set to a column basis so the kernel below reflects
  // only the eigenvalue conditions
  std::vector<std::size_t> keep;
  {
    Matrix red = raw_space;
    keep = red.rref();
  }
  Matrix space(raw_space.rows(), keep.size());
  for (std::size_t c = 0; c < keep.size(); ++c)
    for (std::size_t r = 0; r < raw_space.rows(); ++r)
      space(r, c) = raw_space(r, keep[c]);
  Matrix stacked(ops.size() * d, space.cols());
  for (std::size_t i = 0; i < ops.size(); ++i) {
    Matrix shifted = ops[i];
    for (std::size_t r = 0; r < d; ++r) shifted(r, r) -= a[i];
    Matrix img = shifted * space;
    for (std::size_t r = 0; r < d; ++r)
      for (std::size_t c = 0; c < space.cols(); ++c)
        stacked(i * d + r, c) = img(r, c);
  }
  Matrix K = stacked.kernel();
  std::vector<std::vector<Scalar>> out;
  for (std::size_t kc = 0; kc < K.cols(); ++kc) {
    std::vector<Scalar> v(d);
    for (std::size_t r = 0; r < d; ++r)
      for (std::size_t c = 0; c < space.cols(); ++c)
        v[r] += space(r, c) * K(c, kc);
    out.push_back(std::move(v));
  }
  return out;
}

inline std::vector<std::vector<Scalar>> whittaker_subspace_ops(
    const std::vector<Matrix>& e0_ops, const std::vector<Scalar>& a) {
  return joint_eigenspace(e0_ops, a);
}

/// Whittaker vectors wh_a inside a truncation of T(P, V): joint eigenspace of
/// the e_{0i} matrices.
inline std::vector<std::vector<Scalar>> whittaker_subspace(
    const TTruncation& trunc, const std::vector<Scalar>& a) {
  std::vector<Matrix> ops;
  for (int i = 1; i <= trunc.M.n(); ++i)
    ops.push_back(trunc.matrix_of(Generator::E(0, i)));
  return whittaker_subspace_ops(ops, a);
}

/// Matrix of a (possibly localized) element of U_S acting on 1 (x) V inside
/// T(Omega, V); the image must stay in 1 (x) V.
inline Matrix extract_w_matrix(const TModule& M, const Element& u) {
  if (M.kind != PKind::Omega)
    throw wrong_module_error("extraction needs the Omega tensor factor");
  std::vector<int> vars;
  for (int i = 1; i <= M.n(); ++i) vars.push_back(param_index(omega_var(i)));
  Matrix out(M.V.dim, M.V.dim);
  for (std::size_t b = 0; b < M.V.dim; ++b) {
    TVector v{{static_cast<int>(b), Scalar(1)}};
    TVector img = M.apply_element(u, v);
    for (const auto& [r, f] : img) {
      for (int var : vars)
        if (f.num().degree_in(var) != 0 || f.den().degree_in(var) != 0)
          throw verification_failure("image does not lie in 1 (x) V");
      out(static_cast<std::size_t>(r), b) = f;
    }
  }
  return out;
}

// ---- the Omega(1, c) realization -------------------------------------------

/// The action on C[d_1..d_n] obtained from the c-twisted Weyl realization:
///   e_ij f = f(d + e_j - e_i) d_i,      h_i f = (d_i - c/(n+1)) f,
///   e_i0 f = (c - |d| + 1) f(d - e_i) d_i,   e_0i f = f(d + e_i).
struct Omega1c {
  int n;
  Scalar c;

  Scalar shift(const Scalar& f, int i, int by) const {
    std::string name = omega_var(i);
    return f.substitute(name, Scalar::param(name) + Scalar(by));
  }

  Scalar dvar(int i) const { return Scalar::param(omega_var(i)); }

  Scalar dsum() const {
    Scalar s;
    for (int i = 1; i <= n; ++i) s += dvar(i);
    return s;
  }

  Scalar act(const Generator& g, const Scalar& f) const {
    if (g.is_H()) return (dvar(g.i) - c / Scalar(n + 1)) * f;
    if (g.i == 0) return shift(f, g.j, 1);
    if (g.j == 0) return (c - dsum() + Scalar(1)) * shift(f, g.i, -1) * dvar(g.i);
    return shift(shift(f, g.j, 1), g.i, -1) * dvar(g.i);
  }

  Scalar e0_inverse(const Scalar& f, int i) const { return shift(f, i, -1); }

  Scalar apply_element(const Element& u, const Scalar& f0) const {
    Scalar out;
    for (const auto& [m, coeff] : u.terms()) {
      Scalar cur = coeff * f0;
      for (auto it = m.factors.rbegin(); it != m.factors.rend(); ++it) {
        const auto& [g, e] = *it;
        if (e < 0) {
          for (int t = 0; t < -e; ++t) cur = e0_inverse(cur, g.j);
        } else {
          for (int t = 0; t < e; ++t) cur = act(g, cur);
        }
      }
      out += cur;
    }
    return out;
  }
};

}  // namespace slw

#endif
