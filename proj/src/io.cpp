#include "curvature2k/io.hpp"

#include <fstream>
#include <stdexcept>

#include <json.hpp>

namespace c2k {

using nlohmann::json;

std::string to_json(const AlgebraicCurvature& r) {
  const Matrix& m = r.wedge_matrix();
  json rows = json::array();
  for (int i = 0; i < m.rows(); ++i) {
    json row = json::array();
    for (int j = 0; j < m.cols(); ++j) row.push_back(m(i, j));
    rows.push_back(std::move(row));
  }
  json doc;
  doc["schema"] = kSchemaVersion;
  doc["n"] = r.n();
  doc["basis"] = "lex-wedge2";
  doc["matrix"] = std::move(rows);
  return doc.dump(2) + "\n";
}

AlgebraicCurvature curvature_from_json(const std::string& text) {
  json doc;
  try {
    doc = json::parse(text);
  } catch (const json::exception& e) {
    throw std::invalid_argument(std::string("tensor file: bad JSON: ") +
                                e.what());
  }
  if (!doc.is_object()) {
    throw std::invalid_argument("tensor file: top level must be an object");
  }
  for (const auto& [key, value] : doc.items()) {
    if (key != "schema" && key != "n" && key != "basis" && key != "matrix") {
      throw std::invalid_argument("tensor file: unknown field \"" + key +
                                  "\"");
    }
  }
  if (doc.value("schema", "") != kSchemaVersion) {
    throw std::invalid_argument("tensor file: schema must be \"" +
                                std::string(kSchemaVersion) + "\"");
  }
  if (doc.value("basis", "") != "lex-wedge2") {
    throw std::invalid_argument("tensor file: basis must be \"lex-wedge2\"");
  }
  if (!doc.contains("n") || !doc["n"].is_number_integer()) {
    throw std::invalid_argument("tensor file: \"n\" must be an integer");
  }
  const int n = doc["n"].get<int>();
  const int n2 = Dim(n).wedge2();
  if (!doc.contains("matrix") || !doc["matrix"].is_array() ||
      static_cast<int>(doc["matrix"].size()) != n2) {
    throw std::invalid_argument("tensor file: \"matrix\" must be N2 rows");
  }
  Matrix m(n2, n2);
  for (int i = 0; i < n2; ++i) {
    const json& row = doc["matrix"][i];
    if (!row.is_array() || static_cast<int>(row.size()) != n2) {
      throw std::invalid_argument("tensor file: row " + std::to_string(i) +
                                  " must have N2 entries");
    }
    for (int j = 0; j < n2; ++j) {
      if (!row[j].is_number()) {
        throw std::invalid_argument("tensor file: non-numeric entry at (" +
                                    std::to_string(i) + "," +
                                    std::to_string(j) + ")");
      }
      m(i, j) = row[j].get<double>();
    }
  }
  return AlgebraicCurvature(n, std::move(m));
}

void save_curvature(const std::string& path, const AlgebraicCurvature& r) {
  std::ofstream out(path);
  if (!out) throw std::runtime_error("cannot write " + path);
  out << to_json(r);
}

AlgebraicCurvature load_curvature(const std::string& path) {
  std::ifstream in(path);
  if (!in) throw std::runtime_error("cannot read " + path);
  std::string text((std::istreambuf_iterator<char>(in)),
                   std::istreambuf_iterator<char>());
  try {
    return curvature_from_json(text);
  } catch (const std::invalid_argument& e) {
    throw std::invalid_argument(path + ": " + e.what());
  }
}

}  // namespace c2k
