#pragma once

#include <cstddef>
#include <fstream>
#include <string>

#include <json.hpp>

#include "cob/triplet.hpp"

namespace cob {

using nlohmann::json;

inline constexpr int kFileVersion = 1;

/// Matrices are arrays of rows; every entry is a decimal string so that
/// arbitrary-precision values round-trip bit exactly. Plain JSON integers
/// are accepted on input; floating point is rejected.
inline json matrix_to_json(const IntMatrix& m) {
  json rows = json::array();
  for (std::size_t i = 0; i < m.rows(); ++i) {
    json row = json::array();
    for (std::size_t j = 0; j < m.cols(); ++j) row.push_back(m(i, j).str());
    rows.push_back(std::move(row));
  }
  return rows;
}

namespace detail {

inline Int int_from_json(const json& v, const std::string& where) {
  if (v.is_string()) {
    const std::string& s = v.get_ref<const std::string&>();
    if (s.empty()) throw ParseError(where + ": empty integer string");
    std::size_t k = (s[0] == '-' || s[0] == '+') ? 1 : 0;
    if (k == s.size()) throw ParseError(where + ": bad integer '" + s + "'");
    for (; k < s.size(); ++k)
      if (s[k] < '0' || s[k] > '9')
        throw ParseError(where + ": bad integer '" + s + "'");
    return Int(s);
  }
  if (v.is_number_integer()) return Int(v.get<long long>());
  if (v.is_number_unsigned()) return Int(v.get<unsigned long long>());
  throw ParseError(where + ": expected an integer encoded as a decimal string");
}

}  // namespace detail

inline IntMatrix matrix_from_json(const json& rows, std::size_t expect_rows,
                                  std::size_t expect_cols,
                                  const std::string& name) {
  if (!rows.is_array())
    throw ParseError(name + ": expected an array of rows");
  if (rows.size() != expect_rows)
    throw ParseError(name + ": expected " + std::to_string(expect_rows) +
                     " rows, found " + std::to_string(rows.size()));
  IntMatrix m(expect_rows, expect_cols);
  for (std::size_t i = 0; i < expect_rows; ++i) {
    const json& row = rows[i];
    if (!row.is_array() || row.size() != expect_cols)
      throw ParseError(name + ": row " + std::to_string(i + 1) + " must have " +
                       std::to_string(expect_cols) + " entries");
    for (std::size_t j = 0; j < expect_cols; ++j)
      m(i, j) = detail::int_from_json(row[j], name);
  }
  return m;
}

/// Free-shape matrix (for mapping-class input files): ragged rows rejected.
inline IntMatrix matrix_from_json(const json& rows, const std::string& name) {
  if (!rows.is_array())
    throw ParseError(name + ": expected an array of rows");
  std::size_t r = rows.size();
  std::size_t c = r == 0 ? 0 : rows[0].is_array() ? rows[0].size() : 0;
  return matrix_from_json(rows, r, c, name);
}

inline json presentation_to_json(const TripletPresentation& t) {
  json j;
  j["version"] = kFileVersion;
  j["g_bottom"] = t.g_bottom;
  j["g_top"] = t.g_top;
  j["n_link"] = t.n_link;
  j["A"] = matrix_to_json(t.link);
  j["B"] = matrix_to_json(t.bottom_link);
  j["C"] = matrix_to_json(t.top_link);
  j["D"] = matrix_to_json(t.bottom_bottom);
  j["E"] = matrix_to_json(t.top_bottom);
  j["F"] = matrix_to_json(t.top_top);
  return j;
}

inline TripletPresentation presentation_from_json(const json& j) {
  if (!j.is_object()) throw ParseError("presentation: expected a JSON object");
  for (const char* key : {"version", "g_bottom", "g_top", "n_link", "A", "B",
                          "C", "D", "E", "F"})
    if (!j.contains(key))
      throw ParseError(std::string("presentation: missing field '") + key + "'");
  if (!j["version"].is_number_integer() || j["version"].get<int>() != kFileVersion)
    throw ParseError("presentation: unsupported version (expected 1)");
  auto size_field = [&j](const char* key) -> std::size_t {
    const json& v = j[key];
    if (!v.is_number_unsigned() && !(v.is_number_integer() && v.get<long long>() >= 0))
      throw ParseError(std::string("presentation: '") + key +
                       "' must be a nonnegative integer");
    return v.get<std::size_t>();
  };
  TripletPresentation t;
  t.g_bottom = size_field("g_bottom");
  t.g_top = size_field("g_top");
  t.n_link = size_field("n_link");
  t.link = matrix_from_json(j["A"], t.n_link, t.n_link, "A");
  t.bottom_link = matrix_from_json(j["B"], t.g_bottom, t.n_link, "B");
  t.top_link = matrix_from_json(j["C"], t.g_top, t.n_link, "C");
  t.bottom_bottom = matrix_from_json(j["D"], t.g_bottom, t.g_bottom, "D");
  t.top_bottom = matrix_from_json(j["E"], t.g_top, t.g_bottom, "E");
  t.top_top = matrix_from_json(j["F"], t.g_top, t.g_top, "F");
  return t;
}

inline json load_json_file(const std::string& path) {
  std::ifstream in(path);
  if (!in) throw ParseError("cannot open file: " + path);
  json j;
  try {
    in >> j;
  } catch (const json::exception& e) {
    throw ParseError("cannot parse JSON in " + path + ": " + e.what());
  }
  return j;
}

inline TripletPresentation load_presentation(const std::string& path) {
  return presentation_from_json(load_json_file(path));
}

inline void save_presentation(const TripletPresentation& t, const std::string& path) {
  std::ofstream out(path);
  if (!out) throw ParseError("cannot write file: " + path);
  out << presentation_to_json(t).dump(2) << "\n";
}

/// A mapping-class matrix file is either a bare array of rows or an object
/// with a "matrix" field in the same encoding.
inline IntMatrix load_matrix(const std::string& path) {
  json j = load_json_file(path);
  if (j.is_object()) {
    if (!j.contains("matrix"))
      throw ParseError(path + ": expected a matrix array or {\"matrix\": ...}");
    return matrix_from_json(j["matrix"], path);
  }
  return matrix_from_json(j, path);
}

}  // namespace cob
