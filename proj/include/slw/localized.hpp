#ifndef SLW_LOCALIZED_HPP
#define SLW_LOCALIZED_HPP

#include <vector>

#include "slw/algebra.hpp"

namespace slw {

/// Arithmetic in U_S: Laurent exponents on e_{01}..e_{0n}, with the
/// ad-nilpotency expansion used to move inverses across monomials.

/// ad(e_{0k}) applied to an element with non-negative exponents.
inline Element ad_e0(const LieStructure& L, int k, const Element& a) {
  Element g = Element::generator(Generator::E(0, k));
  return L.multiply(g, a) - L.multiply(a, g);
}

/// Generalized binomial C(m, t) for integer m (possibly negative).
inline Rat gen_binomial(int m, int t) {
  Rat num(1), den(1);
  for (int s = 0; s < t; ++s) {
    num *= Rat(m - s);
    den *= Rat(s + 1);
  }
  return num / den;
}

namespace detail {

/// Splits a canonical monomial into its polynomial part (everything before
/// the E(0,*) block) and the E(0,*) exponent vector.
inline void split_monomial(int n, const PBWMonomial& m, PBWMonomial& poly,
                           std::vector<int>& e0) {
  poly.factors.clear();
  e0.assign(n + 1, 0);
  for (const auto& [g, e] : m.factors) {
    if (g.is_E() && g.i == 0)
      e0[g.j] = e;
    else
      poly.factors.emplace_back(g, e);
  }
}

inline PBWMonomial attach_e0(const PBWMonomial& poly, const std::vector<int>& e0) {
  PBWMonomial out = poly;
  for (std::size_t j = 1; j < e0.size(); ++j)
    if (e0[j] != 0)
      out.factors.emplace_back(Generator::E(0, static_cast<int>(j)), e0[j]);
  return out;
}

}  // namespace detail

/// Canonical product in U_S.
inline Element localize_multiply(const LieStructure& L, const Element& a,
                                 const Element& b) {
  int n = L.rank();
  Element out;
  for (const auto& [m1, c1] : a.terms()) {
    PBWMonomial q1;
    std::vector<int> e0_1;
    detail::split_monomial(n, m1, q1, e0_1);
    for (const auto& [m2, c2] : b.terms()) {
      PBWMonomial q2;
      std::vector<int> e0_2;
      detail::split_monomial(n, m2, q2, e0_2);

      // Move the E(0,*) block of m1 across q2:
      //   e_{0k}^m X = sum_t C(m,t) (ad e_{0k})^t(X) e_{0k}^{m-t}.
      struct Term {
        Element elem;
        Rat coeff;
        std::vector<int> shift;
      };
      std::vector<Term> terms{{Element::monomial(q2), Rat(1), e0_1}};
      for (int k = 1; k <= n; ++k) {
        if (e0_1[k] == 0) continue;
        std::vector<Term> next;
        for (const auto& t : terms) {
          Element cur = t.elem;
          int cap = 2 * cur.total_degree() + 1;
          for (int s = 0; s <= cap; ++s) {
            if (cur.is_zero()) break;
            Rat c = t.coeff * gen_binomial(e0_1[k], s);
            if (c != 0) {
              Term nt{cur, c, t.shift};
              nt.shift[k] -= s;
              next.push_back(std::move(nt));
            }
            if (e0_1[k] > 0 && s == e0_1[k]) break;
            cur = ad_e0(L, k, cur);
            if (s == cap && !cur.is_zero())
              throw internal_consistency_error(
                  "adjoint expansion exceeded nilpotency cap");
          }
        }
        terms = std::move(next);
      }

      for (const auto& t : terms) {
        Element prod = L.multiply(Element::monomial(q1), t.elem);
        for (const auto& [pm, pc] : prod.terms()) {
          PBWMonomial poly;
          std::vector<int> e0_p;
          detail::split_monomial(n, pm, poly, e0_p);
          for (int k = 1; k <= n; ++k) e0_p[k] += t.shift[k] + e0_2[k];
          out.add_term(detail::attach_e0(poly, e0_p),
                       c1 * c2 * Scalar(t.coeff) * pc);
        }
      }
    }
  }
  return out;
}

/// Normal form of e_{0k}^{-m} * a.
inline Element commute_past_inverse(const LieStructure& L, const Element& a,
                                    int k, int m) {
  if (a.has_negative_exponent())
    throw wrong_module_error("commute_past_inverse expects non-negative exponents");
  if (m < 1) throw error("commute_past_inverse requires m >= 1");
  Element inv = Element::generator(Generator::E(0, k), -m);
  return localize_multiply(L, inv, a);
}

inline Element localize_commutator(const LieStructure& L, const Element& a,
                                   const Element& b) {
  return localize_multiply(L, a, b) - localize_multiply(L, b, a);
}

/// True iff a commutes with every listed generator in U_S.
inline bool commutes_with(const LieStructure& L, const Element& a,
                          const std::vector<Generator>& gens) {
  for (const auto& g : gens)
    if (!localize_commutator(L, a, Element::generator(g)).is_zero()) return false;
  return true;
}

}  // namespace slw

#endif
