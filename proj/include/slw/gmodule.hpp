#ifndef SLW_GMODULE_HPP
#define SLW_GMODULE_HPP

#include <optional>
#include <string>
#include <vector>

#include "slw/formal.hpp"
#include "slw/wmodule.hpp"

namespace slw {

inline std::string h_var(int i) { return "h" + std::to_string(i); }

/// Element of G(V) = U(h) (x) V: polynomial in h_1..h_n per basis index of V.
using FreeHVector = FormalSum<int>;

/// h-weight of a root vector in the coordinates (alpha(h_1)..alpha(h_n)).
inline std::vector<int> root_h_weight(const Generator& g, int n) {
  std::vector<int> a(static_cast<std::size_t>(n) + 1, 0);
  if (g.is_E()) {
    if (g.i >= 1) a[static_cast<std::size_t>(g.i)] += 1;
    if (g.j >= 1) a[static_cast<std::size_t>(g.j)] -= 1;
  }
  return a;  // index 0 unused
}

/// G(V) = U(h) (x) V with the action
///   h_i  (f (x) v) = h_i f (x) v
///   e_0i (f (x) v) = f(h+e_i) (x) v
///   e_ij (f (x) v) = f(h-e_i+e_j) (x) X(i,j) v + h_i f(h-e_i+e_j) (x) v
///   e_k0 (f (x) v) = f(h-e_k) (x) OMEGA(k) v
///                    - sum_{j != k} e_kj ((h_j - 1) f(h-e_j) (x) v)
///                    - h_k ((h_k - 1) f(h-e_k) (x) v).
struct GModule {
  WModuleData V;

  int n() const { return V.n; }

  Scalar hvar(int i) const { return Scalar::param(h_var(i)); }

  Scalar shift(const Scalar& f, int i, int by) const {
    std::string name = h_var(i);
    return f.substitute(name, Scalar::param(name) + Scalar(by));
  }

  void add_matrix_image(FreeHVector& out, const Matrix& m, int b,
                        const Scalar& f) const {
    for (std::size_t r = 0; r < V.dim; ++r)
      fs_add(out, static_cast<int>(r), f * m(r, b));
  }

  FreeHVector act(const Generator& g, const FreeHVector& v) const {
    FreeHVector out;
    for (const auto& [b, f] : v) {
      if (g.is_H()) {
        fs_add(out, b, hvar(g.i) * f);
      } else if (g.i == 0) {
        fs_add(out, b, shift(f, g.j, 1));
      } else if (g.j != 0) {
        Scalar fs = shift(shift(f, g.i, -1), g.j, 1);
        add_matrix_image(out, V.action(WGenerator::x_key(g.i, g.j)), b, fs);
        fs_add(out, b, hvar(g.i) * fs);
      } else {
        int k = g.i;
        add_matrix_image(out, V.action(WGenerator::omega_key(k)), b,
                         shift(f, k, -1));
        for (int j = 1; j <= n(); ++j) {
          Scalar tail = (hvar(j) - Scalar(1)) * shift(f, j, -1);
          FreeHVector piece{{b, tail}};
          FreeHVector moved = j == k
                                  ? fs_scale(piece, hvar(k))
                                  : act(Generator::E(k, j), piece);
          fs_add(out, moved, Scalar(-1));
        }
      }
    }
    return out;
  }

  Scalar e0_inverse_coeff(const Scalar& f, int i) const { return shift(f, i, -1); }

  FreeHVector apply_element(const Element& u, const FreeHVector& v) const {
    FreeHVector out;
    for (const auto& [m, c] : u.terms()) {
      FreeHVector cur = fs_scale(v, c);
      for (auto it = m.factors.rbegin(); it != m.factors.rend(); ++it) {
        const auto& [g, e] = *it;
        if (e < 0) {
          FreeHVector next;
          for (const auto& [b, f] : cur) {
            Scalar cf = f;
            for (int t = 0; t < -e; ++t) cf = e0_inverse_coeff(cf, g.j);
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

  /// Matrix of a (localized) element on 1 (x) V; the image must stay there.
  Matrix extract_matrix(const Element& u) const {
    Matrix out(V.dim, V.dim);
    for (std::size_t b = 0; b < V.dim; ++b) {
      FreeHVector img = apply_element(u, {{static_cast<int>(b), Scalar(1)}});
      for (const auto& [r, f] : img) {
        for (int i = 1; i <= n(); ++i) {
          int var = param_index(h_var(i));
          if (f.num().degree_in(var) != 0 || f.den().degree_in(var) != 0)
            throw verification_failure("image does not lie in 1 (x) V");
        }
        out(static_cast<std::size_t>(r), b) = f;
      }
    }
    return out;
  }
};

/// Re-extracts the W-module from the Whittaker vectors 1 (x) V of G(V); the
/// F o G round trip is the identity when this equals the input entry-exact.
inline WModuleData fg_round_trip(WAlgebra& W, const WModuleData& V) {
  GModule G{V};
  WModuleData out;
  out.n = V.n;
  out.dim = V.dim;
  for (const auto& g : W.generators())
    out.mats[g.key()] = G.extract_matrix(g.expansion);
  return out;
}

/// Element of G_1(V) = C[e_{01}^{+-1}..] (x) V: keys (lattice point r, basis
/// index).
using LatticeVector = FormalSum<std::pair<std::vector<int>, int>>;

/// G_1(V) with h_k acting by mu_k - r_k:
///   e_0k (e^r (x) v) = e^{r+e_k} (x) v
///   e_lj (e^r (x) v) = e^{r-e_l+e_j} (x) (X(l,j) + (mu_l - r_l + 1)) v
///   e_l0 (e^r (x) v) = e^{r-e_l} (x) (OMEGA(l) v - sum_{j != l}(mu_j - r_j) X(l,j) v
///                                     - (|mu| - |r|)(mu_l - r_l + 1) v).
struct G1Module {
  WModuleData V;
  std::vector<Scalar> mu;  // mu[1..n]

  int n() const { return V.n; }

  Scalar mu_total() const {
    Scalar s;
    for (int i = 1; i <= n(); ++i) s += mu[static_cast<std::size_t>(i)];
    return s;
  }

  static int r_total(const std::vector<int>& r) {
    int s = 0;
    for (std::size_t i = 1; i < r.size(); ++i) s += r[i];
    return s;
  }

  /// The matrix carrying the r-slice to the (r+alpha)-slice under g.
  Matrix transition(const Generator& g, const std::vector<int>& r) const {
    Matrix id = Matrix::identity(V.dim);
    if (g.is_H())
      return (mu[static_cast<std::size_t>(g.i)] - Scalar(r[static_cast<std::size_t>(g.i)])) * id;
    if (g.i == 0) return id;
    if (g.j != 0) {
      Scalar c = mu[static_cast<std::size_t>(g.i)] -
                 Scalar(r[static_cast<std::size_t>(g.i)]) + Scalar(1);
      return V.action(WGenerator::x_key(g.i, g.j)) + c * id;
    }
    int l = g.i;
    Matrix m = V.action(WGenerator::omega_key(l));
    for (int j = 1; j <= n(); ++j) {
      if (j == l) continue;
      Scalar cj = mu[static_cast<std::size_t>(j)] - Scalar(r[static_cast<std::size_t>(j)]);
      m = m - cj * V.action(WGenerator::x_key(l, j));
    }
    Scalar tail = (mu_total() - Scalar(r_total(r))) *
                  (mu[static_cast<std::size_t>(l)] - Scalar(r[static_cast<std::size_t>(l)]) + Scalar(1));
    return m - tail * id;
  }

  LatticeVector act(const Generator& g, const LatticeVector& v) const {
    LatticeVector out;
    for (const auto& [key, f] : v) {
      const auto& [r, b] = key;
      std::vector<int> alpha = root_h_weight(g, n());
      std::vector<int> target = r;
      for (int i = 1; i <= n(); ++i)
        target[static_cast<std::size_t>(i)] -= alpha[static_cast<std::size_t>(i)];
      Matrix t = transition(g, r);
      for (std::size_t rr = 0; rr < V.dim; ++rr)
        fs_add(out, {target, static_cast<int>(rr)},
               f * t(rr, static_cast<std::size_t>(b)));
    }
    return out;
  }

  LatticeVector apply_element(const Element& u, const LatticeVector& v) const {
    LatticeVector out;
    for (const auto& [m, c] : u.terms()) {
      LatticeVector cur = fs_scale(v, c);
      for (auto it = m.factors.rbegin(); it != m.factors.rend(); ++it) {
        const auto& [g, e] = *it;
        if (e < 0) {
          LatticeVector next;
          for (const auto& [key, f] : cur) {
            std::vector<int> r = key.first;
            r[static_cast<std::size_t>(g.j)] -= -e;
            fs_add(next, {r, key.second}, f);
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

  /// Re-extracts the W-module from the mu-weight slice (r = 0); F_1 o G_1.
  Matrix extract_matrix(const Element& u) const {
    std::vector<int> zero(static_cast<std::size_t>(n()) + 1, 0);
    Matrix out(V.dim, V.dim);
    for (std::size_t b = 0; b < V.dim; ++b) {
      LatticeVector img =
          apply_element(u, {{{zero, static_cast<int>(b)}, Scalar(1)}});
      for (const auto& [key, f] : img) {
        if (key.first != zero)
          throw verification_failure("image leaves the mu-weight slice");
        out(static_cast<std::size_t>(key.second), b) = f;
      }
    }
    return out;
  }
};

inline WModuleData f1g1_round_trip(WAlgebra& W, const WModuleData& V,
                                   const std::vector<Scalar>& mu) {
  G1Module G{V, mu};
  WModuleData out;
  out.n = V.n;
  out.dim = V.dim;
  for (const auto& g : W.generators())
    out.mats[g.key()] = G.extract_matrix(g.expansion);
  return out;
}

// ---- weighting functor ------------------------------------------------------

/// The weight-module window of G(V) at base point u: for b = u + r the slice
/// is a copy of V, and a root vector carries slice b to slice b + alpha with
/// the matrix obtained by evaluating the G(V) action at the target weight.
struct WeightWindow {
  GModule G;
  std::vector<Scalar> u;  // u[1..n]
  int radius;

  Matrix transition(const Generator& g, const std::vector<int>& r) const {
    std::vector<int> alpha = root_h_weight(g, G.n());
    Matrix out(G.V.dim, G.V.dim);
    for (std::size_t b = 0; b < G.V.dim; ++b) {
      FreeHVector img = G.act(g, {{static_cast<int>(b), Scalar(1)}});
      for (const auto& [rr, f] : img) {
        Scalar val = f;
        for (int i = 1; i <= G.n(); ++i)
          val = val.substitute(h_var(i),
                               u[static_cast<std::size_t>(i)] +
                                   Scalar(r[static_cast<std::size_t>(i)] +
                                          alpha[static_cast<std::size_t>(i)]));
        out(static_cast<std::size_t>(rr), b) += val;
      }
    }
    return out;
  }

  bool in_window(const std::vector<int>& r) const {
    for (std::size_t i = 1; i < r.size(); ++i)
      if (r[i] < -radius || r[i] > radius) return false;
    return true;
  }
};

inline WeightWindow weighting_evaluate(const WModuleData& V,
                                       const std::vector<Scalar>& u, int radius) {
  return WeightWindow{GModule{V}, u, radius};
}

// ---- cuspidal injectivity scan ---------------------------------------------

struct ScanEntry {
  std::string generator;
  std::vector<int> point;  // r[1..n]
  std::string determinant;
  bool ok;
};

struct ScanReport {
  bool all_ok = true;
  std::vector<ScanEntry> entries;
};

namespace detail {

inline void check_not_integer(const Scalar& v, const std::string& what,
                              const std::string& cond) {
  if (!v.is_rational())
    throw precondition_violation(what + " must be rational for " + cond);
  if (v.is_integer())
    throw precondition_violation("condition " + cond + " fails: " + what + " = " +
                                 v.to_string() + " is an integer");
}

}  // namespace detail

/// Checks every root-vector transition determinant over the lattice window
/// of G_1(V). With c absent, mu must satisfy mu_i, -|mu| not integral; with c
/// present, c/(n+1)+mu_i and c/(n+1)-|mu| must be non-integral.
inline ScanReport injectivity_scan(const WModuleData& V,
                                   const std::vector<Scalar>& mu, int radius,
                                   const std::optional<Scalar>& c = std::nullopt) {
  int n = V.n;
  if (static_cast<int>(mu.size()) != n + 1)
    throw schema_error("mu must have entries mu[1..n]");
  Scalar total;
  for (int i = 1; i <= n; ++i) total += mu[static_cast<std::size_t>(i)];
  if (c) {
    Scalar unit = *c / Scalar(n + 1);
    for (int i = 1; i <= n; ++i)
      detail::check_not_integer(unit + mu[static_cast<std::size_t>(i)],
                                "c/(n+1)+mu_" + std::to_string(i), "no-int2");
    detail::check_not_integer(unit - total, "c/(n+1)-|mu|", "no-int2");
  } else {
    for (int i = 1; i <= n; ++i)
      detail::check_not_integer(mu[static_cast<std::size_t>(i)],
                                "mu_" + std::to_string(i), "no-int1");
    detail::check_not_integer(-total, "-|mu|", "no-int1");
  }

  G1Module G{V, mu};
  std::vector<Generator> roots;
  for (int i = 1; i <= n; ++i)
    for (int j = 1; j <= n; ++j)
      if (i != j) roots.push_back(Generator::E(i, j));
  for (int k = 1; k <= n; ++k) roots.push_back(Generator::E(k, 0));

  ScanReport rep;
  std::vector<int> r(static_cast<std::size_t>(n) + 1, -radius);
  r[0] = 0;
  while (true) {
    for (const auto& g : roots) {
      Scalar det = G.transition(g, r).det();
      bool ok = !det.is_zero();
      rep.entries.push_back(
          {g.to_string(), std::vector<int>(r.begin() + 1, r.end()),
           det.to_string(), ok});
      if (!ok) rep.all_ok = false;
    }
    std::size_t p = 1;
    while (p <= static_cast<std::size_t>(n) && r[p] == radius) r[p++] = -radius;
    if (p > static_cast<std::size_t>(n)) break;
    ++r[p];
  }
  return rep;
}

}  // namespace slw

#endif
