#ifndef SLW_SUITES_HPP
#define SLW_SUITES_HPP

#include <algorithm>
#include <cstdint>
#include <optional>
#include <random>
#include <string>
#include <vector>

#include "slw/gmodule.hpp"
#include "slw/io.hpp"
#include "slw/quiver.hpp"
#include "slw/tmodule.hpp"
#include "slw/twist.hpp"
#include "slw/weights.hpp"

namespace slw {

struct SuiteConfig {
  std::string suite = "all";
  int n = 2;
  int degree = 3;
  int window = 2;
  std::uint64_t seed = 1;
  std::optional<Scalar> c;
  std::optional<std::vector<Scalar>> mu;  // mu[1..n] when present
  std::string format = "json";
};

struct CheckResult {
  std::string check_name;
  int n = 0;
  std::string status;  // pass | fail | skipped
  std::string witness;
};

struct SuiteReport {
  std::string suite;
  SuiteConfig cfg;
  std::vector<CheckResult> entries;
  std::vector<ScanEntry> scan;  // only populated by the lattice scan

  bool all_pass() const {
    for (const auto& e : entries)
      if (e.status == "fail") return false;
    return true;
  }
};

namespace detail {

inline void record(SuiteReport& rep, const std::string& name, int n, bool ok,
                   const std::string& witness = "") {
  rep.entries.push_back({name, n, ok ? "pass" : "fail", ok ? "" : witness});
}

inline Element random_canonical(const LieStructure& L, std::mt19937_64& rng,
                                int deg) {
  std::uniform_int_distribution<int> coeff(-3, 3);
  std::uniform_int_distribution<std::size_t> pick(0, L.generators().size() - 1);
  std::uniform_int_distribution<int> len(0, deg);
  Element out;
  for (int t = 0; t < 2; ++t) {
    Element term(coeff(rng));
    int k = len(rng);
    for (int f = 0; f < k; ++f)
      term = L.multiply(term, Element::generator(L.generators()[pick(rng)]));
    out += term;
  }
  return out;
}

/// Seeded mu with fixed denominator 101; resampled until the relevant
/// non-integrality condition holds.
inline std::vector<Scalar> sample_mu(int n, std::mt19937_64& rng) {
  std::uniform_int_distribution<int> num(1, 100);
  while (true) {
    std::vector<Scalar> mu{Scalar(0)};
    int total = 0;
    for (int i = 1; i <= n; ++i) {
      int k = num(rng);
      total += k;
      mu.push_back(Scalar(k) / Scalar(101));
    }
    if (total % 101 != 0) return mu;
  }
}

}  // namespace detail

inline SuiteReport run_lie_axioms(const SuiteConfig& cfg) {
  SuiteReport rep{"lie-axioms", cfg, {}, {}};
  LieStructure L(cfg.n);
  const auto& gens = L.generators();
  bool anti = true, jac = true;
  std::string anti_w, jac_w;
  for (const auto& a : gens)
    for (const auto& b : gens) {
      if (!(L.bracket(a, b) + L.bracket(b, a)).is_zero() && anti) {
        anti = false;
        anti_w = "[" + a.to_string() + ", " + b.to_string() + "]";
      }
      for (const auto& c : gens) {
        Element ea = Element::generator(a), eb = Element::generator(b),
                ec = Element::generator(c);
        Element sum = L.commutator(L.commutator(ea, eb), ec) +
                      L.commutator(L.commutator(eb, ec), ea) +
                      L.commutator(L.commutator(ec, ea), eb);
        if (!sum.is_zero() && jac) {
          jac = false;
          jac_w = "(" + a.to_string() + ", " + b.to_string() + ", " +
                  c.to_string() + ")";
        }
      }
    }
  detail::record(rep, "bracket-antisymmetry", cfg.n, anti, anti_w);
  detail::record(rep, "bracket-jacobi", cfg.n, jac, jac_w);

  // the structure constants agree with matrix commutators
  bool mat = true;
  std::string mat_w;
  for (const auto& a : gens)
    for (const auto& b : gens) {
      Matrix ma = L.generator_matrix(a), mb = L.generator_matrix(b);
      if (L.bracket(a, b) != L.matrix_to_element(ma * mb - mb * ma)) {
        mat = false;
        mat_w = "[" + a.to_string() + ", " + b.to_string() + "]";
      }
    }
  detail::record(rep, "bracket-matrix-agreement", cfg.n, mat, mat_w);
  return rep;
}

inline SuiteReport run_w_membership(const SuiteConfig& cfg) {
  SuiteReport rep{"w-membership", cfg, {}, {}};
  LieStructure L(cfg.n);
  WAlgebra W(L);
  for (const auto& c : W.membership_report())
    detail::record(rep, "commutes " + c.name, c.n, c.ok, c.witness);
  return rep;
}

inline SuiteReport run_tensor_decomposition(const SuiteConfig& cfg) {
  SuiteReport rep{"tensor-decomposition", cfg, {}, {}};
  LieStructure L(cfg.n);
  WAlgebra W(L);
  bool gens_ok = true;
  std::string gw;
  for (const auto& g : L.generators()) {
    Element u = Element::generator(g);
    if (W.expand(W.decompose(u)) != u) {
      gens_ok = false;
      gw = g.to_string();
    }
  }
  detail::record(rep, "generator-round-trip", cfg.n, gens_ok, gw);

  std::mt19937_64 rng(cfg.seed);
  bool rnd_ok = true;
  std::string rw;
  int trials = cfg.n <= 2 ? 8 : 4;
  for (int t = 0; t < trials; ++t) {
    Element u = detail::random_canonical(L, rng, 2);
    if (W.expand(W.decompose(u)) != u) {
      rnd_ok = false;
      rw = u.to_string();
    }
  }
  detail::record(rep, "random-round-trip", cfg.n, rnd_ok, rw);

  auto cert = W.monomial_independence(std::min(cfg.degree, 2));
  detail::record(rep, "monomial-independence", cfg.n, cert.independent,
                 cert.dependency);
  return rep;
}

inline SuiteReport run_pi_chain(const SuiteConfig& cfg) {
  SuiteReport rep{"pi-chain", cfg, {}, {}};
  int n = cfg.n;
  for (int k = 0; k + 1 <= n - 1; ++k) {
    TModule lo = t_omega_wedge(n, k);
    TModule hi = t_omega_wedge(n, k + 1);
    TTruncation tr(lo, cfg.degree);
    bool ok = true;
    std::string w;
    for (std::size_t b = 0; b < tr.dim(); ++b) {
      std::vector<Scalar> unit(tr.dim());
      unit[b] = Scalar(1);
      TVector v = tr.vector_of(unit);
      if (!pi_map(hi, k + 1, pi_map(lo, k, v)).empty()) {
        ok = false;
        w = "basis vector " + std::to_string(b);
      }
    }
    detail::record(rep, "chain-vanishing k=" + std::to_string(k), n, ok, w);
  }

  LieStructure L(n);
  std::mt19937_64 rng(cfg.seed);
  for (int k = 0; k <= n - 1; ++k) {
    TModule lo = t_omega_wedge(n, k);
    TModule hi = t_omega_wedge(n, k + 1);
    bool ok = true;
    std::string w;
    for (int t = 0; t < 3; ++t) {
      std::uniform_int_distribution<int> slot(0, static_cast<int>(lo.V.dim) - 1);
      std::uniform_int_distribution<int> coef(-3, 3);
      TVector v;
      Scalar f = Scalar(coef(rng)) +
                 Scalar(coef(rng)) * Scalar::param(omega_var(1)) *
                     Scalar::param(omega_var(n));
      fs_add(v, slot(rng), f);
      for (const auto& g : L.generators())
        if (pi_map(lo, k, lo.act(g, v)) != hi.act(g, pi_map(lo, k, v))) {
          ok = false;
          w = g.to_string();
        }
    }
    detail::record(rep, "equivariance k=" + std::to_string(k), n, ok, w);
  }

  std::vector<Scalar> ones(static_cast<std::size_t>(n), Scalar(1));
  for (int k = 0; k <= n; ++k) {
    TModule M = t_omega_wedge(n, k);
    TTruncation tr(M, cfg.degree);
    auto wh = whittaker_subspace(tr, ones);
    long long want = 1;
    for (int t = 1; t <= k; ++t) want = want * (n - k + t) / t;
    detail::record(rep, "whittaker-dimension k=" + std::to_string(k), n,
                   static_cast<long long>(wh.size()) == want,
                   "dim " + std::to_string(wh.size()));
  }
  return rep;
}

inline SuiteReport run_block_principal(const SuiteConfig& cfg) {
  SuiteReport rep{"block-principal", cfg, {}, {}};
  int n = cfg.n;
  LieStructure L(n);
  WAlgebra W(L);
  Scalar c = cfg.c ? *cfg.c : Scalar::param("c");

  std::vector<std::pair<std::string, WModuleData>> mods;
  mods.emplace_back("one-dimensional", one_dim_w_module(c, n));
  for (int k = 0; k <= n; ++k)
    mods.emplace_back("wedge k=" + std::to_string(k),
                      w_action_on_wedge(wedge_gln_module(n, k)));
  for (const auto& [name, V] : mods) {
    bool ok = false;
    std::string w;
    try {
      auto back = fg_round_trip(W, V);
      ok = back.n == V.n && back.dim == V.dim && back.mats == V.mats;
    } catch (const error& e) {
      w = e.what();
    }
    detail::record(rep, "fg-round-trip " + name, n, ok, w);
  }

  // (e_{0i} - 1)^{m+1} annihilates h-degree-<= m vectors
  GModule G{one_dim_w_module(c, n)};
  bool nil = true;
  for (int m = 0; m <= 3 && nil; ++m) {
    Scalar f(1);
    for (int t = 0; t < m; ++t) f *= Scalar::param(h_var(1 + t % n));
    for (int i = 1; i <= n && nil; ++i) {
      FreeHVector cur{{0, f}};
      for (int t = 0; t <= m; ++t)
        cur = fs_sub(G.act(Generator::E(0, i), cur), cur);
      nil = cur.empty();
    }
  }
  detail::record(rep, "local-nilpotency", n, nil);

  // the one dimensional module matches the whittaker extraction from the
  // d-polynomial realization, and the central scalar matches the expected
  // highest weight
  Omega1c O{n, c};
  bool extract_ok = true;
  std::string ew;
  auto expect = one_dim_w_module(c, n);
  for (const auto& g : W.generators()) {
    Scalar val = O.apply_element(g.expansion, Scalar(1));
    if (val != expect.action(g.key())(0, 0)) {
      extract_ok = false;
      ew = g.to_string();
    }
  }
  detail::record(rep, "one-dim-extraction", n, extract_ok, ew);

  Scalar cas = O.apply_element(L.casimir(), Scalar(1));
  detail::record(rep, "central-scalar", n,
                 cas == casimir_eigenvalue(gamma_weight(c, n)), cas.to_string());
  return rep;
}

inline SuiteReport run_block_generic(const SuiteConfig& cfg) {
  SuiteReport rep{"block-generic", cfg, {}, {}};
  int n = cfg.n;
  LieStructure L(n);
  WAlgebra W(L);
  std::vector<Scalar> mu;
  if (cfg.mu) {
    if (static_cast<int>(cfg.mu->size()) != n + 1)
      throw schema_error("mu must have exactly n entries");
    mu = *cfg.mu;
  } else {
    mu.assign(1, Scalar(0));
    for (int i = 1; i <= n; ++i) mu.push_back(Scalar::param("mu" + std::to_string(i)));
  }

  std::vector<std::pair<std::string, WModuleData>> mods;
  mods.emplace_back("one-dimensional",
                    one_dim_w_module(cfg.c ? *cfg.c : Scalar::param("c"), n));
  for (int k = 0; k <= n; ++k)
    mods.emplace_back("wedge k=" + std::to_string(k),
                      w_action_on_wedge(wedge_gln_module(n, k)));
  for (const auto& [name, V] : mods) {
    bool ok = false;
    std::string w;
    try {
      auto back = f1g1_round_trip(W, V, mu);
      ok = back.n == V.n && back.dim == V.dim && back.mats == V.mats;
    } catch (const error& e) {
      w = e.what();
    }
    detail::record(rep, "f1g1-round-trip " + name, n, ok, w);
  }

  // weight window transitions represent the bracket wherever in-window
  std::mt19937_64 rng(cfg.seed);
  auto u_mu = detail::sample_mu(n, rng);
  auto win = weighting_evaluate(w_action_on_wedge(wedge_gln_module(n, 1)),
                                u_mu, cfg.window);
  std::vector<int> r(static_cast<std::size_t>(n) + 1, 0);
  bool wok = true;
  std::string ww;
  const auto& gens = L.generators();
  for (const auto& g1 : gens)
    for (const auto& g2 : gens) {
      auto a1 = root_h_weight(g1, n), a2 = root_h_weight(g2, n);
      std::vector<int> r12 = r, r21 = r;
      for (int i = 1; i <= n; ++i) {
        r12[static_cast<std::size_t>(i)] += a2[static_cast<std::size_t>(i)];
        r21[static_cast<std::size_t>(i)] += a1[static_cast<std::size_t>(i)];
      }
      if (!win.in_window(r12) || !win.in_window(r21)) continue;
      Matrix lhs = win.transition(g1, r12) * win.transition(g2, r) -
                   win.transition(g2, r21) * win.transition(g1, r);
      Matrix rhs(win.G.V.dim, win.G.V.dim);
      Element br = L.bracket(g1, g2);
      for (const auto& [m, cf] : br.terms())
        rhs = rhs + cf * win.transition(m.factors.front().first, r);
      if (lhs != rhs) {
        wok = false;
        ww = "[" + g1.to_string() + ", " + g2.to_string() + "]";
      }
    }
  detail::record(rep, "weight-window-commutation", n, wok, ww);
  return rep;
}

inline SuiteReport run_cuspidal_scan(const SuiteConfig& cfg) {
  SuiteReport rep{"cuspidal-scan", cfg, {}, {}};
  int n = cfg.n;
  std::mt19937_64 rng(cfg.seed);
  std::vector<Scalar> mu = cfg.mu ? *cfg.mu : detail::sample_mu(n, rng);
  WModuleData V = one_dim_w_module(cfg.c ? *cfg.c : Scalar(Rat(1, 2)), n);
  try {
    // the non-integrality condition depends on whether c was supplied
    auto scan = injectivity_scan(V, mu, cfg.window, cfg.c);
    rep.scan = scan.entries;
    detail::record(rep, "injectivity", n, scan.all_ok,
                   scan.all_ok ? "" : "zero determinant in window");
  } catch (const precondition_violation& e) {
    rep.entries.push_back({"injectivity", n, "skipped", e.what()});
  }
  return rep;
}

inline SuiteReport run_quiver(const SuiteConfig& cfg) {
  SuiteReport rep{"quiver", cfg, {}, {}};
  int n = cfg.n;

  std::vector<std::size_t> dims(static_cast<std::size_t>(n) + 1, 2);
  dims[0] = 0;
  auto zero_rep = quiver_skeleton(n, dims);
  detail::record(rep, "zero-maps-relations", n, check_relations(zero_rep).ok);
  detail::record(rep, "zero-maps-nilpotency", n, check_local_nilpotency(zero_rep));

  auto simples = enumerate_simples(n);
  bool all_ok = simples.size() == static_cast<std::size_t>(n);
  std::string w;
  for (const auto& s : simples) {
    if (!check_relations(s).ok || !check_local_nilpotency(s) ||
        !is_simple_one_dimensional(s)) {
      all_ok = false;
      w = "simple fixture failed";
    }
  }
  detail::record(rep, "simple-count", n, all_ok, w);

  if (n >= 2) {
    // both edge maps nonzero on a (1,1,..)-rep violate xy = 0
    std::vector<std::size_t> od(static_cast<std::size_t>(n) + 1, 1);
    od[0] = 0;
    auto bad = quiver_skeleton(n, od);
    for (auto& a : bad.arrows)
      if ((a.from == 1 && a.to == 2) || (a.from == 2 && a.to == 1))
        a.matrix(0, 0) = Scalar(1);
    detail::record(rep, "detects-relation-violation", n, !check_relations(bad).ok);

    // loop eigenvalue 1 is not locally nilpotent
    auto loopy = quiver_skeleton(n, od);
    loopy.arrows[0].matrix(0, 0) = Scalar(1);
    detail::record(rep, "detects-non-nilpotent-loop", n,
                   !check_local_nilpotency(loopy));

    // a single forward edge map is strictly triangular, hence nilpotent
    auto tri = quiver_skeleton(n, od);
    for (auto& a : tri.arrows)
      if (a.from == 1 && a.to == 2) a.matrix(0, 0) = Scalar(1);
    detail::record(rep, "forward-edge-nilpotent", n,
                   check_relations(tri).ok && check_local_nilpotency(tri));

    auto sum = direct_sum(tri, simples[0]);
    detail::record(rep, "direct-sum-closure", n,
                   check_relations(sum).ok && check_local_nilpotency(sum));
  }
  return rep;
}

inline SuiteReport run_suite(const SuiteConfig& cfg) {
  if (cfg.suite == "lie-axioms") return run_lie_axioms(cfg);
  if (cfg.suite == "w-membership") return run_w_membership(cfg);
  if (cfg.suite == "tensor-decomposition") return run_tensor_decomposition(cfg);
  if (cfg.suite == "pi-chain") return run_pi_chain(cfg);
  if (cfg.suite == "block-principal") return run_block_principal(cfg);
  if (cfg.suite == "block-generic") return run_block_generic(cfg);
  if (cfg.suite == "cuspidal-scan") return run_cuspidal_scan(cfg);
  if (cfg.suite == "quiver") return run_quiver(cfg);
  if (cfg.suite == "all") {
    SuiteReport rep{"all", cfg, {}, {}};
    for (const char* name :
         {"lie-axioms", "w-membership", "tensor-decomposition", "pi-chain",
          "block-principal", "block-generic", "cuspidal-scan", "quiver"}) {
      SuiteConfig sub = cfg;
      sub.suite = name;
      SuiteReport r = run_suite(sub);
      for (auto& e : r.entries) {
        e.check_name = std::string(name) + ": " + e.check_name;
        rep.entries.push_back(std::move(e));
      }
      for (auto& s : r.scan) rep.scan.push_back(std::move(s));
    }
    return rep;
  }
  throw schema_error("unknown suite: " + cfg.suite);
}

inline json report_to_json(const SuiteReport& rep) {
  json out;
  out["suite"] = rep.suite;
  json cfg;
  cfg["n"] = rep.cfg.n;
  cfg["degree"] = rep.cfg.degree;
  cfg["window"] = rep.cfg.window;
  cfg["seed"] = rep.cfg.seed;
  if (rep.cfg.c) cfg["c"] = rep.cfg.c->to_string();
  if (rep.cfg.mu) {
    json m = json::array();
    for (std::size_t i = 1; i < rep.cfg.mu->size(); ++i)
      m.push_back((*rep.cfg.mu)[i].to_string());
    cfg["mu"] = std::move(m);
  }
  out["config"] = std::move(cfg);

  std::vector<CheckResult> entries = rep.entries;
  std::stable_sort(entries.begin(), entries.end(),
                   [](const CheckResult& a, const CheckResult& b) {
                     return a.check_name < b.check_name;
                   });
  json list = json::array();
  for (const auto& e : entries) {
    json ej;
    ej["check_name"] = e.check_name;
    ej["n"] = e.n;
    ej["status"] = e.status;
    ej["witness"] = e.witness;
    list.push_back(std::move(ej));
  }
  out["checks"] = std::move(list);

  if (!rep.scan.empty()) {
    json scans = json::array();
    for (const auto& s : rep.scan) {
      json sj;
      sj["generator"] = s.generator;
      sj["lattice_point"] = s.point;
      sj["determinant"] = s.determinant;
      sj["status"] = s.ok ? "pass" : "fail";
      scans.push_back(std::move(sj));
    }
    out["scan"] = std::move(scans);
  }
  return out;
}

inline std::string report_to_text(const SuiteReport& rep) {
  std::string out = "suite " + rep.suite + " (n=" + std::to_string(rep.cfg.n) + ")\n";
  std::vector<CheckResult> entries = rep.entries;
  std::stable_sort(entries.begin(), entries.end(),
                   [](const CheckResult& a, const CheckResult& b) {
                     return a.check_name < b.check_name;
                   });
  for (const auto& e : entries) {
    std::string tag = e.status == "pass" ? "PASS" : e.status == "fail" ? "FAIL" : "SKIP";
    out += tag + " " + e.check_name;
    if (!e.witness.empty()) out += " -- " + e.witness;
    out += "\n";
  }
  return out;
}

}  // namespace slw

#endif
