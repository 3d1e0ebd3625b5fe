#pragma once

#include <json.hpp>

#include "thinpoly/classify.hpp"

namespace thinpoly {

using Json = nlohmann::ordered_json;

// Integers within the JSON-safe 53-bit window serialize as numbers, larger
// ones as decimal strings; parsing accepts both.
inline Json int_to_json(const Int& v) {
  static const Int lo = -(Int(1) << 53), hi = Int(1) << 53;
  if (v >= lo && v <= hi) return Json(v.convert_to<long long>());
  return Json(v.str());
}

inline Int int_from_json(const Json& j) {
  if (j.is_number_integer()) return Int(j.get<long long>());
  if (j.is_string()) return Int(j.get<std::string>());
  throw std::invalid_argument("expected integer or integer string, got " + j.dump());
}

inline Json int_vector_to_json(const IntVector& v) {
  Json a = Json::array();
  for (const Int& x : v) a.push_back(int_to_json(x));
  return a;
}

inline IntVector int_vector_from_json(const Json& j) {
  if (!j.is_array()) throw std::invalid_argument("expected array, got " + j.dump());
  IntVector v;
  for (const Json& x : j) v.push_back(int_from_json(x));
  return v;
}

inline Json poly_to_json(const IntPolynomial& p) { return int_vector_to_json(p.coefficients()); }

inline IntPolynomial poly_from_json(const Json& j) { return IntPolynomial(int_vector_from_json(j)); }

inline Json matrix_to_json(const IntMatrix& m) {
  Json rows = Json::array();
  for (int i = 0; i < m.rows(); ++i) rows.push_back(int_vector_to_json(m.row(i)));
  return rows;
}

inline IntMatrix matrix_from_json(const Json& j) {
  if (!j.is_array()) throw std::invalid_argument("expected matrix rows, got " + j.dump());
  std::vector<IntVector> rows;
  for (const Json& r : j) rows.push_back(int_vector_from_json(r));
  return IntMatrix::from_rows(rows);
}

inline Json vertices_to_json(const LatticePolytope& p) {
  Json a = Json::array();
  for (const IntVector& v : p.vertices()) a.push_back(int_vector_to_json(v));
  return a;
}

// Accepts {"vertices": [[...], ...]} or a bare array of points.
inline LatticePolytope polytope_from_json(const Json& j) {
  const Json* arr = &j;
  if (j.is_object()) {
    if (!j.contains("vertices")) throw std::invalid_argument("polytope object lacks \"vertices\"");
    arr = &j.at("vertices");
  }
  if (!arr->is_array() || arr->empty()) throw std::invalid_argument("polytope needs a nonempty vertex array");
  std::vector<IntVector> pts;
  for (const Json& v : *arr) pts.push_back(int_vector_from_json(v));
  return LatticePolytope::build(std::move(pts));
}

inline Json record_to_json(const EnumRecord& r) {
  Json j;
  j["dim"] = r.dim;
  j["volume"] = int_to_json(r.volume);
  j["hnf"] = matrix_to_json(r.hnf);
  j["hstar"] = poly_to_json(r.hstar);
  j["lstar"] = poly_to_json(r.lstar);
  j["thin"] = r.thin;
  j["trivially_thin"] = r.trivially_thin;
  j["pyramid"] = r.pyramid;
  j["free_join"] = r.free_join;
  j["cyclic_quotient"] = r.cyclic_quotient;
  j["spanning"] = r.spanning;
  return j;
}

inline EnumRecord record_from_json(const Json& j) {
  EnumRecord r;
  r.dim = j.at("dim").get<int>();
  r.volume = int_from_json(j.at("volume"));
  r.hnf = matrix_from_json(j.at("hnf"));
  r.hstar = poly_from_json(j.at("hstar"));
  r.lstar = poly_from_json(j.at("lstar"));
  r.thin = j.at("thin").get<bool>();
  r.trivially_thin = j.at("trivially_thin").get<bool>();
  r.pyramid = j.at("pyramid").get<bool>();
  r.free_join = j.at("free_join").get<bool>();
  r.cyclic_quotient = j.at("cyclic_quotient").get<bool>();
  r.spanning = j.at("spanning").get<bool>();
  return r;
}

}  // namespace thinpoly
