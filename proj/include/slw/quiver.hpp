#ifndef SLW_QUIVER_HPP
#define SLW_QUIVER_HPP

#include <string>
#include <vector>

#include "slw/matrix.hpp"

namespace slw {

/// Arrow of the block quiver; matrix has shape dims[to] x dims[from].
struct QuiverArrow {
  int from = 0;
  int to = 0;
  std::string label;  // "x" or "y"
  Matrix matrix;
};

/// Representation of the n-vertex quiver
///
///   (y) 1 <=x=> 2 <=y=> 3 <=x=> ... <=> n (loop)
///
/// vertex 1 carries a loop labeled y, consecutive vertices are joined by a
/// forward/backward pair whose shared label alternates x, y, x, ... and the
/// last vertex carries a loop labeled with the letter not used on the final
/// edge. Relations: every composite path mixing x and y vanishes.
struct QuiverRep {
  int n = 0;
  std::vector<std::size_t> dims;  // dims[1..n]
  std::vector<QuiverArrow> arrows;

  std::size_t dim_at(int v) const {
    if (v < 1 || v > n) throw invalid_index_error("quiver vertex out of range");
    return dims[static_cast<std::size_t>(v)];
  }

  void check_shapes() const {
    if (n < 1) throw schema_error("quiver needs at least one vertex");
    if (dims.size() != static_cast<std::size_t>(n) + 1)
      throw schema_error("dimension vector must have entries dims[1..n]");
    for (const auto& a : arrows) {
      if (a.label != "x" && a.label != "y")
        throw schema_error("arrow label must be x or y");
      if (a.matrix.rows() != dim_at(a.to) || a.matrix.cols() != dim_at(a.from))
        throw schema_error("arrow matrix shape does not match the dimension vector");
    }
  }
};

/// The letter shared by the edge pair between v and v+1.
inline std::string quiver_edge_label(int v) { return v % 2 == 1 ? "x" : "y"; }

/// Arrow skeleton (zero matrices) of the n-vertex quiver.
inline QuiverRep quiver_skeleton(int n, const std::vector<std::size_t>& dims) {
  QuiverRep r;
  r.n = n;
  r.dims = dims;
  r.check_shapes();
  auto zero = [&](int to, int from) {
    return Matrix(r.dim_at(to), r.dim_at(from));
  };
  r.arrows.push_back({1, 1, "y", zero(1, 1)});
  for (int v = 1; v + 1 <= n; ++v) {
    std::string lab = quiver_edge_label(v);
    r.arrows.push_back({v, v + 1, lab, zero(v + 1, v)});
    r.arrows.push_back({v + 1, v, lab, zero(v, v + 1)});
  }
  if (n > 1) {
    std::string last = quiver_edge_label(n - 1) == "x" ? "y" : "x";
    r.arrows.push_back({n, n, last, zero(n, n)});
  }
  return r;
}

struct QuiverCheck {
  bool ok = true;
  std::vector<std::string> violations;
};

/// xy = yx = 0: every composable pair of arrows belonging to different
/// strands multiplies to zero. Two composable arrows are on different strands
/// when their labels differ, or when the second doubles straight back along
/// the edge just traversed; loop powers are unconstrained.
inline QuiverCheck check_relations(const QuiverRep& r) {
  r.check_shapes();
  QuiverCheck out;
  for (const auto& first : r.arrows)
    for (const auto& second : r.arrows) {
      if (second.from != first.to) continue;
      bool doubles_back = first.from != first.to && second.to == first.from &&
                          second.from == first.to;
      if (second.label == first.label && !doubles_back) continue;
      if (!(second.matrix * first.matrix).is_zero()) {
        out.ok = false;
        out.violations.push_back(
            second.label + "(" + std::to_string(second.from) + "->" +
            std::to_string(second.to) + ") after " + first.label + "(" +
            std::to_string(first.from) + "->" + std::to_string(first.to) + ")");
      }
    }
  return out;
}

/// Local nilpotency: the summed arrow operator on the total space is
/// nilpotent (T^D = 0 with D the total dimension).
inline bool check_local_nilpotency(const QuiverRep& r) {
  r.check_shapes();
  std::vector<std::size_t> offset(static_cast<std::size_t>(r.n) + 1, 0);
  std::size_t total = 0;
  for (int v = 1; v <= r.n; ++v) {
    offset[static_cast<std::size_t>(v)] = total;
    total += r.dim_at(v);
  }
  if (total == 0) return true;
  Matrix T(total, total);
  for (const auto& a : r.arrows)
    for (std::size_t i = 0; i < a.matrix.rows(); ++i)
      for (std::size_t j = 0; j < a.matrix.cols(); ++j)
        T(offset[static_cast<std::size_t>(a.to)] + i,
          offset[static_cast<std::size_t>(a.from)] + j) += a.matrix(i, j);
  Matrix P = Matrix::identity(total);
  for (std::size_t t = 0; t < total; ++t) {
    P = P * T;
    if (P.is_zero()) return true;
  }
  return false;
}

/// The n one-dimensional representations: one vertex carries C, all maps 0.
inline std::vector<QuiverRep> enumerate_simples(int n) {
  if (n < 1) throw invalid_rank_error("quiver needs at least one vertex");
  std::vector<QuiverRep> out;
  for (int v = 1; v <= n; ++v) {
    std::vector<std::size_t> dims(static_cast<std::size_t>(n) + 1, 0);
    dims[static_cast<std::size_t>(v)] = 1;
    out.push_back(quiver_skeleton(n, dims));
  }
  return out;
}

inline QuiverRep direct_sum(const QuiverRep& a, const QuiverRep& b) {
  a.check_shapes();
  b.check_shapes();
  if (a.n != b.n) throw schema_error("direct sum needs the same quiver");
  std::vector<std::size_t> dims(static_cast<std::size_t>(a.n) + 1, 0);
  for (int v = 1; v <= a.n; ++v) dims[static_cast<std::size_t>(v)] = a.dim_at(v) + b.dim_at(v);
  QuiverRep out = quiver_skeleton(a.n, dims);
  auto fill = [&](const QuiverRep& src, bool lower_right) {
    for (const auto& arr : src.arrows)
      for (auto& tgt : out.arrows) {
        if (tgt.from != arr.from || tgt.to != arr.to || tgt.label != arr.label)
          continue;
        std::size_t ro = lower_right ? a.dim_at(arr.to) : 0;
        std::size_t co = lower_right ? a.dim_at(arr.from) : 0;
        for (std::size_t i = 0; i < arr.matrix.rows(); ++i)
          for (std::size_t j = 0; j < arr.matrix.cols(); ++j)
            tgt.matrix(ro + i, co + j) = arr.matrix(i, j);
        break;
      }
  };
  fill(a, false);
  fill(b, true);
  return out;
}

/// Brute-force simplicity for one-dimensional total dimension: a rep of total
/// dimension 1 has no proper nonzero subrepresentation.
inline bool is_simple_one_dimensional(const QuiverRep& r) {
  std::size_t total = 0;
  for (int v = 1; v <= r.n; ++v) total += r.dim_at(v);
  return total == 1;
}

}  // namespace slw

#endif
