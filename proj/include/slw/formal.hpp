#ifndef SLW_FORMAL_HPP
#define SLW_FORMAL_HPP

#include <cstdint>
#include <map>
#include <random>
#include <string>

#include "slw/algebra.hpp"

namespace slw {

/// Canonical sparse vectors: maps from a basis key to Scalar, zero terms
/// absent.
template <class K>
using FormalSum = std::map<K, Scalar>;

template <class K>
void fs_add(FormalSum<K>& a, const K& key, const Scalar& c) {
  if (c.is_zero()) return;
  auto it = a.find(key);
  if (it == a.end()) {
    a[key] = c;
  } else {
    it->second += c;
    if (it->second.is_zero()) a.erase(it);
  }
}

template <class K>
void fs_add(FormalSum<K>& a, const FormalSum<K>& b, const Scalar& c = Scalar(1)) {
  for (const auto& [k, v] : b) fs_add(a, k, v * c);
}

template <class K>
FormalSum<K> fs_scale(const FormalSum<K>& a, const Scalar& c) {
  FormalSum<K> out;
  for (const auto& [k, v] : a) fs_add(out, k, v * c);
  return out;
}

template <class K>
FormalSum<K> fs_sub(const FormalSum<K>& a, const FormalSum<K>& b) {
  FormalSum<K> out = a;
  fs_add(out, b, Scalar(-1));
  return out;
}

/// The exact ratio r with image = r * v; throws when v = 0 or the image is
/// not proportional to v.
template <class K>
Scalar proportionality_ratio(const FormalSum<K>& image, const FormalSum<K>& v) {
  if (v.empty()) throw not_eigenvector_error("zero vector");
  Scalar r = Scalar(0);
  auto it = image.find(v.begin()->first);
  if (it != image.end()) r = it->second / v.begin()->second;
  if (image != fs_scale(v, r))
    throw not_eigenvector_error("image is not proportional to the vector");
  return r;
}

struct AxiomCheckReport {
  bool ok = true;
  int trials = 0;
  std::string witness;
};

/// Representation-law fuzzer: checks [g,g'] v = g (g' v) - g' (g v) on random
/// generator pairs and vectors. `act(Generator, Vec)` and `rand(rng)` supply
/// the module; deterministic under seed.
template <class Vec, class Act, class Rand>
AxiomCheckReport module_axiom_check(const LieStructure& L, Act&& act, Rand&& rand,
                                    std::uint64_t seed, int trials) {
  if (trials < 1) throw precondition_violation("trials must be >= 1");
  std::mt19937_64 rng(seed);
  const auto& gens = L.generators();
  std::uniform_int_distribution<std::size_t> pick(0, gens.size() - 1);
  AxiomCheckReport rep;
  for (int t = 0; t < trials; ++t) {
    const Generator& g1 = gens[pick(rng)];
    const Generator& g2 = gens[pick(rng)];
    Vec v = rand(rng);
    Vec lhs;
    Element br = L.bracket(g1, g2);
    for (const auto& [m, c] : br.terms()) {
      if (m.factors.size() != 1 || m.factors.front().second != 1)
        throw internal_consistency_error("bracket is not linear in generators");
      fs_add(lhs, act(m.factors.front().first, v), c);
    }
    Vec rhs = fs_sub(act(g1, act(g2, v)), act(g2, act(g1, v)));
    ++rep.trials;
    if (lhs != rhs) {
      rep.ok = false;
      rep.witness = "[" + g1.to_string() + ", " + g2.to_string() + "] at trial " +
                    std::to_string(t);
      return rep;
    }
  }
  return rep;
}

}  // namespace slw

#endif
