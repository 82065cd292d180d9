#include <doctest.h>

#include <cstdio>
#include <string>

#include <json.hpp>

#include "curvature2k/io.hpp"

using namespace c2k;

TEST_CASE("json round trip is bit-exact") {
  const AlgebraicCurvature r = random_curvature(5, 123);
  const AlgebraicCurvature back = curvature_from_json(to_json(r));
  CHECK(back.n() == 5);
  const Matrix& a = r.wedge_matrix();
  const Matrix& b = back.wedge_matrix();
  for (int i = 0; i < a.rows(); ++i) {
    for (int j = 0; j < a.cols(); ++j) {
      CHECK(a(i, j) == b(i, j));
    }
  }
  // serialization itself is stable
  CHECK(to_json(r) == to_json(back));
}

TEST_CASE("malformed documents are rejected") {
  const std::string good = to_json(random_curvature(4, 7));
  // unknown field
  {
    auto j = nlohmann::json::parse(good);
    j["extra"] = 1;
    CHECK_THROWS(curvature_from_json(j.dump()));
  }
  // wrong schema string
  {
    auto j = nlohmann::json::parse(good);
    j["schema"] = "curvature2k/0";
    CHECK_THROWS(curvature_from_json(j.dump()));
  }
  // wrong basis label
  {
    auto j = nlohmann::json::parse(good);
    j["basis"] = "colex-wedge2";
    CHECK_THROWS(curvature_from_json(j.dump()));
  }
  // missing field
  {
    auto j = nlohmann::json::parse(good);
    j.erase("n");
    CHECK_THROWS(curvature_from_json(j.dump()));
  }
  // matrix shape inconsistent with n
  {
    auto j = nlohmann::json::parse(good);
    j["n"] = 5;
    CHECK_THROWS(curvature_from_json(j.dump()));
  }
  // ragged row
  {
    auto j = nlohmann::json::parse(good);
    j["matrix"][0].erase(0);
    CHECK_THROWS(curvature_from_json(j.dump()));
  }
  // non-numeric entry
  {
    auto j = nlohmann::json::parse(good);
    j["matrix"][0][0] = "zero";
    CHECK_THROWS(curvature_from_json(j.dump()));
  }
  // dimension out of range
  {
    auto j = nlohmann::json::parse(good);
    j["n"] = 1;
    CHECK_THROWS(curvature_from_json(j.dump()));
  }
  // not JSON at all
  CHECK_THROWS(curvature_from_json("not json"));
  // a symmetric matrix violating the first Bianchi identity is rejected by
  // the curvature constructor during load
  {
    auto j = nlohmann::json::parse(good);
    j["matrix"][wedge_index(0, 1, 4)][wedge_index(2, 3, 4)] =
        double(j["matrix"][wedge_index(0, 1, 4)][wedge_index(2, 3, 4)]) + 1.0;
    j["matrix"][wedge_index(2, 3, 4)][wedge_index(0, 1, 4)] =
        j["matrix"][wedge_index(0, 1, 4)][wedge_index(2, 3, 4)];
    CHECK_THROWS(curvature_from_json(j.dump()));
  }
}

TEST_CASE("file save and load") {
  const std::string path = "io_roundtrip_test.json";
  const AlgebraicCurvature r = random_curvature(4, 99);
  save_curvature(path, r);
  const AlgebraicCurvature back = load_curvature(path);
  CHECK((r.wedge_matrix() - back.wedge_matrix()).cwiseAbs().maxCoeff() == 0.0);
  std::remove(path.c_str());
  CHECK_THROWS(load_curvature("does_not_exist_anywhere.json"));
}
