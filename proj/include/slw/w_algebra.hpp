#ifndef SLW_W_ALGEBRA_HPP
#define SLW_W_ALGEBRA_HPP

#include <optional>
#include <string>
#include <utility>
#include <vector>

#include "slw/localized.hpp"

namespace slw {

/// Distinguished elements of the centralizer subalgebra W inside U_S:
///   x_{ij} = e_ij e_{0i} e_{0j}^{-1} - h_i          (1 <= i != j <= n)
///   omega_k = e_{k0} e_{0k}
///           + sum_{j != k} e_kj (h_j - 1) e_{0k} e_{0j}^{-1}
///           + h_k (h_k - 1)
/// (the j = k summand of the defining sum collapses to h_k(h_k - 1)).
struct WGenerator {
  bool omega;
  int i;
  int j;  // unused for omega
  Element expansion;

  static int x_key(int i, int j) { return i * 64 + j; }
  static int omega_key(int k) { return 10000 + k; }

  int key() const { return omega ? omega_key(i) : x_key(i, j); }

  /// 1 for x-generators, 2 for omega-generators; the weight filtration used
  /// when expressing elements of W in ordered monomials.
  static int weight_of(int key) { return key >= 10000 ? 2 : 1; }

  static std::string key_name(int key) {
    std::ostringstream os;
    if (key >= 10000)
      os << "omega[" << (key - 10000) << "]";
    else
      os << "x[" << (key / 64) << "][" << (key % 64) << "]";
    return os.str();
  }

  std::string to_string() const { return key_name(key()); }
};

/// Ordered power product of W-generators: sorted (key, exp > 0) pairs.
using WMonomial = std::vector<std::pair<int, int>>;

inline int wmonomial_weight(const WMonomial& m) {
  int w = 0;
  for (const auto& [k, e] : m) w += WGenerator::weight_of(k) * e;
  return w;
}

inline std::string wmonomial_to_string(const WMonomial& m) {
  if (m.empty()) return "1";
  std::ostringstream os;
  bool first = true;
  for (const auto& [k, e] : m) {
    if (!first) os << " * ";
    first = false;
    os << WGenerator::key_name(k);
    if (e != 1) os << "^" << e;
  }
  return os.str();
}

/// Element of W (x) B: W-part an ordered monomial in WGenerators, B-part a
/// monomial in h's and Laurent e_{0k}'s.
struct WBTensor {
  using Key = std::pair<WMonomial, PBWMonomial>;
  std::map<Key, Scalar> terms;

  bool is_zero() const { return terms.empty(); }

  void add_term(const WMonomial& w, const PBWMonomial& b, const Scalar& c) {
    if (c.is_zero()) return;
    Key k{w, b};
    auto it = terms.find(k);
    if (it == terms.end()) {
      terms[k] = c;
    } else {
      it->second += c;
      if (it->second.is_zero()) terms.erase(it);
    }
  }

  friend WBTensor operator+(const WBTensor& a, const WBTensor& b) {
    WBTensor out = a;
    for (const auto& [k, c] : b.terms) out.add_term(k.first, k.second, c);
    return out;
  }
  friend WBTensor operator-(const WBTensor& a, const WBTensor& b) {
    WBTensor out = a;
    for (const auto& [k, c] : b.terms) out.add_term(k.first, k.second, -c);
    return out;
  }
  friend bool operator==(const WBTensor& a, const WBTensor& b) {
    return a.terms == b.terms;
  }
  friend bool operator!=(const WBTensor& a, const WBTensor& b) { return !(a == b); }

  /// True iff every B-part is the empty monomial (the element lies in W).
  bool b_parts_scalar() const {
    for (const auto& [k, c] : terms)
      if (!k.second.empty()) return false;
    return true;
  }

  std::string to_string() const {
    if (terms.empty()) return "0";
    std::ostringstream os;
    bool first = true;
    for (const auto& [k, c] : terms) {
      if (!first) os << " + ";
      first = false;
      os << c.to_string() << " * " << wmonomial_to_string(k.first) << " (x) "
         << k.second.to_string();
    }
    return os.str();
  }
};

/// The centralizer subalgebra W of {h_i, e_{0k}} in U_S, with the tensor
/// decomposition U_S = W (x) B. Caches straightening data; not thread-safe.
class WAlgebra {
 public:
  explicit WAlgebra(const LieStructure& L) : L_(L), n_(L.rank()) {
    for (int i = 1; i <= n_; ++i)
      for (int j = 1; j <= n_; ++j)
        if (i != j) gens_.push_back(make_x(i, j));
    for (int k = 1; k <= n_; ++k) gens_.push_back(make_omega(k));
  }

  const LieStructure& lie() const { return L_; }
  int rank() const { return n_; }
  const std::vector<WGenerator>& generators() const { return gens_; }

  WGenerator x_generator(int i, int j) const {
    if (i < 1 || i > n_ || j < 1 || j > n_ || i == j)
      throw invalid_index_error("x generator needs 1 <= i != j <= n");
    return find_gen(WGenerator::x_key(i, j));
  }

  WGenerator omega_generator(int k) const {
    if (k < 1 || k > n_)
      throw invalid_index_error("omega generator needs 1 <= k <= n");
    return find_gen(WGenerator::omega_key(k));
  }

  const Element& expansion(int key) const { return find_gen(key).expansion; }

  // ---- membership -----------------------------------------------------------

  struct Check {
    std::string name;
    int n;
    bool ok;
    std::string witness;
  };

  /// One entry per (generator of B, generator of W) commutator.
  std::vector<Check> membership_report() const {
    std::vector<Check> out;
    for (const auto& t : L_.hm_generators())
      for (const auto& g : gens_) {
        Element c =
            localize_commutator(L_, Element::generator(t), g.expansion);
        out.push_back({"[" + t.to_string() + ", " + g.to_string() + "]", n_,
                       c.is_zero(), c.to_string()});
      }
    return out;
  }

  void verify_membership() const {
    for (const auto& c : membership_report())
      if (!c.ok)
        throw verification_failure(c.name + " = " + c.witness);
  }

  // ---- decomposition --------------------------------------------------------

  /// Product of generator expansions, canonical in U_S.
  const Element& expand_monomial(const WMonomial& m) {
    auto it = expand_memo_.find(m);
    if (it != expand_memo_.end()) return it->second;
    Element out(1);
    for (const auto& [k, e] : m)
      for (int t = 0; t < e; ++t)
        out = localize_multiply(L_, out, expansion(k));
    return expand_memo_.emplace(m, std::move(out)).first->second;
  }

  Element expand(const WBTensor& t) {
    Element out;
    for (const auto& [k, c] : t.terms)
      out += c * localize_multiply(L_, expand_monomial(k.first),
                                   Element::monomial(k.second));
    return out;
  }

  /// Rewrites u into W (x) B: every e_ij (i,j >= 1) via
  ///   e_ij = x_ij e_{0j} e_{0i}^{-1} + h_i e_{0j} e_{0i}^{-1},
  /// every e_{k0} via the inverted omega_k relation, then straightens the
  /// W-words into ordered monomials.
  WBTensor decompose(const Element& u) {
    Raw raw;
    for (const auto& [mono, c] : u.terms()) {
      Raw acc;
      acc[{}] = Element(c);
      for (const auto& [g, e] : mono.factors)
        acc = raw_mul(acc, gen_image(g, e));
      for (auto& [w, b] : acc) raw_add(raw, w, b);
    }
    return straighten(raw);
  }

  /// Product in W (x) B, using that W and B commute.
  WBTensor multiply(const WBTensor& a, const WBTensor& b) {
    Raw raw;
    for (const auto& [ka, ca] : a.terms)
      for (const auto& [kb, cb] : b.terms) {
        std::vector<int> word = word_of(ka.first);
        for (int k : word_of(kb.first)) word.push_back(k);
        Element bb = localize_multiply(L_, Element::monomial(ka.second, ca),
                                       Element::monomial(kb.second, cb));
        raw_add(raw, word, bb);
      }
    return straighten(raw);
  }

  /// [g1, g2] computed in U_S and decomposed; the result must lie in W.
  WBTensor w_commutator(const WGenerator& g1, const WGenerator& g2) {
    Element t = localize_commutator(L_, g1.expansion, g2.expansion);
    WBTensor out = decompose(t);
    if (!out.b_parts_scalar())
      throw verification_failure("[" + g1.to_string() + ", " + g2.to_string() +
                                 "] decomposed with a non-scalar B-part: " +
                                 out.to_string());
    return out;
  }

  // ---- independence ---------------------------------------------------------

  struct IndependenceCert {
    bool independent;
    std::size_t monomial_count;
    std::size_t rank;
    std::string dependency;  // empty when independent
  };

  /// Certifies linear independence in U_S of all ordered monomials with at
  /// most degree_bound generator factors.
  IndependenceCert monomial_independence(int degree_bound) {
    if (degree_bound < 1)
      throw precondition_violation("degree bound must be >= 1");
    std::vector<WMonomial> cands;
    WMonomial cur;
    enumerate(0, degree_bound, cur, cands, /*by_weight=*/false);
    Matrix A = expansion_matrix(cands, nullptr, nullptr);
    std::size_t r = A.rank();
    IndependenceCert cert{r == cands.size(), cands.size(), r, ""};
    if (!cert.independent) {
      Matrix K = A.kernel();
      std::ostringstream os;
      bool first = true;
      for (std::size_t c = 0; c < cands.size(); ++c) {
        if (K(c, 0).is_zero()) continue;
        if (!first) os << " + ";
        first = false;
        os << K(c, 0).to_string() << " * " << wmonomial_to_string(cands[c]);
      }
      cert.dependency = os.str();
    }
    return cert;
  }

 private:
  using Raw = std::map<std::vector<int>, Element>;  // W-word -> B-element

  WGenerator make_x(int i, int j) const {
    Element e = localize_multiply(
        L_,
        L_.multiply(Element::generator(Generator::E(i, j)),
                    Element::generator(Generator::E(0, i))),
        Element::generator(Generator::E(0, j), -1));
    e -= Element::generator(Generator::H(i));
    return {false, i, j, std::move(e)};
  }

  WGenerator make_omega(int k) const {
    Element e = L_.multiply(Element::generator(Generator::E(k, 0)),
                            Element::generator(Generator::E(0, k)));
    for (int j = 1; j <= n_; ++j) {
      if (j == k) continue;
      Element t = L_.multiply(Element::generator(Generator::E(k, j)),
                              Element::generator(Generator::H(j)) - Element(1));
      t = L_.multiply(t, Element::generator(Generator::E(0, k)));
      e += localize_multiply(L_, t, Element::generator(Generator::E(0, j), -1));
    }
    Element hk = Element::generator(Generator::H(k));
    e += L_.multiply(hk, hk) - hk;
    return {true, k, 0, std::move(e)};
  }

  const WGenerator& find_gen(int key) const {
    for (const auto& g : gens_)
      if (g.key() == key) return g;
    throw invalid_index_error("unknown W generator key");
  }

  static std::vector<int> word_of(const WMonomial& m) {
    std::vector<int> w;
    for (const auto& [k, e] : m)
      for (int t = 0; t < e; ++t) w.push_back(k);
    return w;
  }

  static WMonomial monomial_of(const std::vector<int>& word) {
    WMonomial m;
    for (int k : word) {
      if (!m.empty() && m.back().first == k)
        ++m.back().second;
      else
        m.emplace_back(k, 1);
    }
    return m;
  }

  static void raw_add(Raw& raw, const std::vector<int>& w, const Element& b) {
    auto it = raw.find(w);
    if (it == raw.end()) {
      if (!b.is_zero()) raw[w] = b;
    } else {
      it->second += b;
      if (it->second.is_zero()) raw.erase(it);
    }
  }

  Raw raw_mul(const Raw& a, const Raw& b) const {
    Raw out;
    for (const auto& [wa, ea] : a)
      for (const auto& [wb, eb] : b) {
        std::vector<int> w = wa;
        for (int k : wb) w.push_back(k);
        raw_add(out, w, localize_multiply(L_, ea, eb));
      }
    return out;
  }

  /// Image of g^e under the rewriting into W (x) B.
  Raw gen_image(const Generator& g, int e) {
    if (g.is_H() || (g.is_E() && g.i == 0)) {
      Raw out;
      out[{}] = Element::generator(g, e);
      return out;
    }
    auto it = image_memo_.find(g.order_key());
    if (it == image_memo_.end()) {
      Raw base = g.j == 0 ? lowering_image(g.i) : mid_image(g.i, g.j);
      it = image_memo_.emplace(g.order_key(), std::move(base)).first;
    }
    Raw out = it->second;
    for (int t = 1; t < e; ++t) out = raw_mul(out, it->second);
    return out;
  }

  Raw mid_image(int i, int j) const {
    Element shift =
        localize_multiply(L_, Element::generator(Generator::E(0, j)),
                          Element::generator(Generator::E(0, i), -1));
    Raw out;
    out[{WGenerator::x_key(i, j)}] = shift;
    out[{}] =
        localize_multiply(L_, Element::generator(Generator::H(i)), shift);
    return out;
  }

  Raw lowering_image(int k) {
    Raw out;
    out[{WGenerator::omega_key(k)}] =
        Element::generator(Generator::E(0, k), -1);
    for (int j = 1; j <= n_; ++j) {
      if (j == k) continue;
      Element tail = localize_multiply(
          L_, Element::generator(Generator::H(j)) - Element(1),
          Element::generator(Generator::E(0, j), -1));
      for (const auto& [w, b] : gen_image(Generator::E(k, j), 1))
        raw_add(out, w, -localize_multiply(L_, b, tail));
    }
    Element hk = Element::generator(Generator::H(k));
    raw_add(out, {},
            -localize_multiply(L_, L_.multiply(hk, hk) - hk,
                               Element::generator(Generator::E(0, k), -1)));
    return out;
  }

  // ---- straightening --------------------------------------------------------

  WBTensor straighten(const Raw& raw) {
    WBTensor out;
    for (const auto& [word, belem] : raw) {
      const auto& combo = straighten_word(word);
      for (const auto& [wm, cw] : combo)
        for (const auto& [bm, cb] : belem.terms())
          out.add_term(wm, bm, cw * cb);
    }
    return out;
  }

  const std::map<WMonomial, Scalar>& straighten_word(
      const std::vector<int>& word) {
    auto it = word_memo_.find(word);
    if (it != word_memo_.end()) return it->second;
    std::map<WMonomial, Scalar> result;
    std::size_t pos = word.size();
    for (std::size_t p = 0; p + 1 < word.size(); ++p)
      if (word[p] > word[p + 1]) {
        pos = p;
        break;
      }
    if (pos == word.size()) {
      result[monomial_of(word)] = Scalar(1);
    } else {
      // g_a g_b = g_b g_a + [g_a, g_b]
      std::vector<int> swapped = word;
      std::swap(swapped[pos], swapped[pos + 1]);
      result = straighten_word(swapped);
      const auto& corr = comm_table(word[pos], word[pos + 1]);
      for (const auto& [m, cm] : corr) {
        std::vector<int> next(word.begin(),
                              word.begin() + static_cast<long>(pos));
        for (int k : word_of(m)) next.push_back(k);
        next.insert(next.end(), word.begin() + static_cast<long>(pos) + 2,
                    word.end());
        for (const auto& [rm, rc] : straighten_word(next)) {
          auto jt = result.find(rm);
          if (jt == result.end()) {
            result[rm] = cm * rc;
          } else {
            jt->second += cm * rc;
            if (jt->second.is_zero()) result.erase(jt);
          }
        }
      }
    }
    return word_memo_.emplace(word, std::move(result)).first->second;
  }

  /// [g_a, g_b] expressed in ordered monomials. The expansion must have
  /// weight below weight(a)+weight(b), except for single generators of the
  /// top weight; this is what makes straightening terminate.
  const std::map<WMonomial, Scalar>& comm_table(int a, int b) {
    auto it = comm_memo_.find({a, b});
    if (it != comm_memo_.end()) return it->second;
    Element t =
        localize_commutator(L_, expansion(a), expansion(b));
    int top = WGenerator::weight_of(a) + WGenerator::weight_of(b);
    auto sol = express_in_monomials(t, top - 1);
    if (!sol) {
      sol = express_in_monomials(t, top);
      if (!sol)
        throw internal_consistency_error(
            "commutator not expressible in bounded-weight monomials");
      for (const auto& [m, c] : *sol) {
        int factors = 0;
        for (const auto& [k, e] : m) factors += e;
        if (wmonomial_weight(m) == top && factors >= 2)
          throw internal_consistency_error(
              "commutator correction does not drop in the weight filtration");
      }
    }
    return comm_memo_.emplace(std::make_pair(a, b), std::move(*sol))
        .first->second;
  }

  /// Solves t = sum c_m expand(m) over ordered monomials of weight <= bound.
  std::optional<std::map<WMonomial, Scalar>> express_in_monomials(
      const Element& t, int bound) {
    std::vector<WMonomial> cands;
    WMonomial cur;
    enumerate(0, bound, cur, cands, /*by_weight=*/true);
    std::vector<Scalar> rhs;
    Matrix A = expansion_matrix(cands, &t, &rhs);
    auto sol = A.solve(rhs);
    if (!sol) return std::nullopt;
    std::map<WMonomial, Scalar> out;
    for (std::size_t c = 0; c < cands.size(); ++c)
      if (!(*sol)[c].is_zero()) out[cands[c]] = (*sol)[c];
    return out;
  }

  /// Columns: U_S expansions of the candidate monomials over the union of
  /// their PBW monomials (plus those of *target, whose coordinates land in
  /// *rhs when given).
  Matrix expansion_matrix(const std::vector<WMonomial>& cands,
                          const Element* target, std::vector<Scalar>* rhs) {
    std::map<PBWMonomial, std::size_t> rows;
    for (const auto& m : cands)
      for (const auto& [pm, c] : expand_monomial(m).terms())
        rows.emplace(pm, rows.size());
    if (target)
      for (const auto& [pm, c] : target->terms()) rows.emplace(pm, rows.size());
    Matrix A(rows.size(), cands.size());
    for (std::size_t c = 0; c < cands.size(); ++c)
      for (const auto& [pm, coeff] : expand_monomial(cands[c]).terms())
        A(rows.at(pm), c) = coeff;
    if (target) {
      rhs->assign(rows.size(), Scalar());
      for (const auto& [pm, coeff] : target->terms())
        (*rhs)[rows.at(pm)] = coeff;
    }
    return A;
  }

  /// Ordered monomials over gens_[idx..] with remaining budget: total weight
  /// when by_weight, factor count otherwise.
  void enumerate(std::size_t idx, int budget, WMonomial& cur,
                 std::vector<WMonomial>& out, bool by_weight) const {
    if (idx == gens_.size()) {
      out.push_back(cur);
      return;
    }
    enumerate(idx + 1, budget, cur, out, by_weight);
    int key = sorted_key(idx);
    int w = by_weight ? WGenerator::weight_of(key) : 1;
    for (int e = 1; e * w <= budget; ++e) {
      cur.emplace_back(key, e);
      enumerate(idx + 1, budget - e * w, cur, out, by_weight);
      cur.pop_back();
    }
  }

  /// gens_ is already in ascending key order (x's lex, then omegas).
  int sorted_key(std::size_t idx) const { return gens_[idx].key(); }

  const LieStructure& L_;
  int n_;
  std::vector<WGenerator> gens_;
  std::map<WMonomial, Element> expand_memo_;
  std::map<int, Raw> image_memo_;
  std::map<std::vector<int>, std::map<WMonomial, Scalar>> word_memo_;
  std::map<std::pair<int, int>, std::map<WMonomial, Scalar>> comm_memo_;
};

/// Exact kernel of ad(e) on sl_{n+1} for e = e_{10} + ... + e_{n0}, certified
/// to equal span{e_ij - h_i (1 <= i != j <= n), e_{k0}} of dimension n^2.
inline std::vector<Element> centralizer_of_e(const LieStructure& L) {
  int n = L.rank();
  Element e;
  for (int k = 1; k <= n; ++k) e += Element::generator(Generator::E(k, 0));

  const auto& basis = L.generators();
  std::map<int, std::size_t> coord;
  for (std::size_t b = 0; b < basis.size(); ++b)
    coord[basis[b].order_key()] = b;

  auto coordinates = [&](const Element& v) {
    std::vector<Scalar> out(basis.size());
    for (const auto& [m, c] : v.terms()) {
      if (m.factors.size() != 1 || m.factors.front().second != 1)
        throw internal_consistency_error("expected a degree-1 element");
      out[coord.at(m.factors.front().first.order_key())] = c;
    }
    return out;
  };

  Matrix A(basis.size(), basis.size());
  for (std::size_t b = 0; b < basis.size(); ++b) {
    Element br = L.commutator(e, Element::generator(basis[b]));
    auto col = coordinates(br);
    for (std::size_t r = 0; r < basis.size(); ++r) A(r, b) = col[r];
  }
  std::size_t dim = A.kernel().cols();

  std::vector<Element> listed;
  for (int i = 1; i <= n; ++i)
    for (int j = 1; j <= n; ++j)
      if (i != j)
        listed.push_back(Element::generator(Generator::E(i, j)) -
                         Element::generator(Generator::H(i)));
  for (int k = 1; k <= n; ++k)
    listed.push_back(Element::generator(Generator::E(k, 0)));

  if (dim != listed.size())
    throw verification_failure("centralizer dimension mismatch");
  Matrix C(basis.size(), listed.size());
  for (std::size_t c = 0; c < listed.size(); ++c) {
    if (!L.commutator(e, listed[c]).is_zero())
      throw verification_failure("listed vector does not centralize e");
    auto col = coordinates(listed[c]);
    for (std::size_t r = 0; r < basis.size(); ++r) C(r, c) = col[r];
  }
  if (C.rank() != listed.size())
    throw verification_failure("listed centralizer vectors are dependent");
  return listed;
}

}  // namespace slw

#endif
