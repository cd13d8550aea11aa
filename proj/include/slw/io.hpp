#ifndef SLW_IO_HPP
#define SLW_IO_HPP

#include <fstream>
#include <sstream>
#include <string>
#include <vector>

#include "json.hpp"
#include "slw/quiver.hpp"
#include "slw/wmodule.hpp"

namespace slw {

using nlohmann::json;

inline std::string scalar_to_rational_string(const Scalar& s) {
  if (!s.is_rational())
    throw schema_error("only plain rationals cross the file boundary: " +
                       s.to_string());
  return s.rational_value().get_str();
}

inline json matrix_to_json(const Matrix& m) {
  json rows = json::array();
  for (std::size_t r = 0; r < m.rows(); ++r) {
    json row = json::array();
    for (std::size_t c = 0; c < m.cols(); ++c)
      row.push_back(scalar_to_rational_string(m(r, c)));
    rows.push_back(std::move(row));
  }
  return rows;
}

inline Matrix matrix_from_json(const json& j, std::size_t rows, std::size_t cols,
                               const std::string& what) {
  if (!j.is_array() || j.size() != rows)
    throw schema_error(what + ": expected " + std::to_string(rows) + " rows");
  Matrix m(rows, cols);
  for (std::size_t r = 0; r < rows; ++r) {
    const json& row = j[r];
    if (!row.is_array() || row.size() != cols)
      throw schema_error(what + ": row " + std::to_string(r) + " must have " +
                         std::to_string(cols) + " entries");
    for (std::size_t c = 0; c < cols; ++c) {
      if (!row[c].is_string())
        throw schema_error(what + ": entries must be rational strings");
      m(r, c) = Scalar::from_rational_string(row[c].get<std::string>());
    }
  }
  return m;
}

inline json w_module_to_json(const WModuleData& V) {
  json out;
  out["n"] = V.n;
  out["dim"] = V.dim;
  for (int i = 1; i <= V.n; ++i)
    for (int j = 1; j <= V.n; ++j)
      if (i != j)
        out["x_" + std::to_string(i) + "_" + std::to_string(j)] =
            matrix_to_json(V.action(WGenerator::x_key(i, j)));
  for (int k = 1; k <= V.n; ++k)
    out["omega_" + std::to_string(k)] =
        matrix_to_json(V.action(WGenerator::omega_key(k)));
  return out;
}

inline WModuleData w_module_from_json(const json& j) {
  if (!j.is_object() || !j.contains("n") || !j.contains("dim") ||
      !j["n"].is_number_integer() || !j["dim"].is_number_unsigned())
    throw schema_error("W-module file needs integer fields n and dim");
  WModuleData V;
  V.n = j["n"].get<int>();
  V.dim = j["dim"].get<std::size_t>();
  if (V.n < 2) throw schema_error("W-module rank must be at least 2");
  for (int i = 1; i <= V.n; ++i)
    for (int jj = 1; jj <= V.n; ++jj) {
      if (i == jj) continue;
      std::string key = "x_" + std::to_string(i) + "_" + std::to_string(jj);
      if (!j.contains(key)) throw schema_error("missing matrix " + key);
      V.mats[WGenerator::x_key(i, jj)] = matrix_from_json(j[key], V.dim, V.dim, key);
    }
  for (int k = 1; k <= V.n; ++k) {
    std::string key = "omega_" + std::to_string(k);
    if (!j.contains(key)) throw schema_error("missing matrix " + key);
    V.mats[WGenerator::omega_key(k)] = matrix_from_json(j[key], V.dim, V.dim, key);
  }
  return V;
}

/// Loads a W-module and certifies the commutation relations on load.
inline WModuleData load_w_module(const std::string& path) {
  std::ifstream in(path);
  if (!in) throw schema_error("cannot open " + path);
  json j;
  try {
    in >> j;
  } catch (const json::exception& e) {
    throw schema_error(std::string("malformed JSON: ") + e.what());
  }
  WModuleData V = w_module_from_json(j);
  LieStructure L(V.n);
  WAlgebra W(L);
  check_w_relations(W, V);
  return V;
}

inline void save_w_module(const WModuleData& V, const std::string& path) {
  std::ofstream out(path);
  if (!out) throw schema_error("cannot write " + path);
  out << w_module_to_json(V).dump(2) << "\n";
}

inline json quiver_to_json(const QuiverRep& r) {
  r.check_shapes();
  json out;
  out["n"] = r.n;
  json dims = json::array();
  for (int v = 1; v <= r.n; ++v) dims.push_back(r.dim_at(v));
  out["dims"] = std::move(dims);
  json arrows = json::array();
  for (const auto& a : r.arrows) {
    json aj;
    aj["from"] = a.from;
    aj["to"] = a.to;
    aj["label"] = a.label;
    aj["matrix"] = matrix_to_json(a.matrix);
    arrows.push_back(std::move(aj));
  }
  out["arrows"] = std::move(arrows);
  return out;
}

inline QuiverRep quiver_from_json(const json& j) {
  if (!j.is_object() || !j.contains("n") || !j.contains("dims") ||
      !j.contains("arrows"))
    throw schema_error("quiver file needs n, dims, arrows");
  QuiverRep r;
  r.n = j["n"].get<int>();
  r.dims.assign(static_cast<std::size_t>(r.n) + 1, 0);
  const json& dims = j["dims"];
  if (!dims.is_array() || dims.size() != static_cast<std::size_t>(r.n))
    throw schema_error("dims must list one entry per vertex");
  for (int v = 1; v <= r.n; ++v)
    r.dims[static_cast<std::size_t>(v)] = dims[static_cast<std::size_t>(v - 1)].get<std::size_t>();
  for (const json& aj : j["arrows"]) {
    QuiverArrow a;
    a.from = aj.at("from").get<int>();
    a.to = aj.at("to").get<int>();
    a.label = aj.at("label").get<std::string>();
    a.matrix = matrix_from_json(aj.at("matrix"), r.dim_at(a.to), r.dim_at(a.from),
                                "arrow " + a.label);
    r.arrows.push_back(std::move(a));
  }
  r.check_shapes();
  return r;
}

inline QuiverRep load_quiver(const std::string& path) {
  std::ifstream in(path);
  if (!in) throw schema_error("cannot open " + path);
  json j;
  try {
    in >> j;
  } catch (const json::exception& e) {
    throw schema_error(std::string("malformed JSON: ") + e.what());
  }
  return quiver_from_json(j);
}

inline void save_quiver(const QuiverRep& r, const std::string& path) {
  std::ofstream out(path);
  if (!out) throw schema_error("cannot write " + path);
  out << quiver_to_json(r).dump(2) << "\n";
}

}  // namespace slw

#endif
