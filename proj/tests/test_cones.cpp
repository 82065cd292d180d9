#include <doctest.h>

#include "curvature2k/cones.hpp"
#include "curvature2k/model_spaces.hpp"

using namespace c2k;

TEST_CASE("fractional partial sums use the floor convention") {
  Vector v(4);
  v << -1.0, 0.5, 2.0, 3.0;
  CHECK(partial_sum(v, 1.0) == doctest::Approx(-1.0));
  CHECK(partial_sum(v, 2.5) == doctest::Approx(-1.0 + 0.5 + 0.5 * 2.0));
  CHECK(partial_sum(v, 4.0) == doctest::Approx(4.5));
  CHECK_THROWS(partial_sum(v, 0.5));
  CHECK_THROWS(partial_sum(v, 4.5));
  Vector bad(3);
  bad << 1.0, 0.0, 2.0;
  CHECK_THROWS(partial_sum(bad, 2.0));
}

TEST_CASE("cone margin and membership classes") {
  Vector v(4);
  v << -1.0, 0.0, 1.0, 4.0;  // mean = 1
  CHECK(cone_margin(v, 2.0, 0.5) == doctest::Approx(-0.5 + 0.5));
  CHECK(cone_margin(v, 1.0, 0.0) == doctest::Approx(-1.0));
  CHECK_THROWS(cone_margin(v, 0.5, 0.0));
  CHECK_THROWS(cone_margin(v, 4.0, 0.0));   // alpha must be < N
  CHECK_THROWS(cone_margin(v, 2.0, -1.0));  // theta must be > -1
}

TEST_CASE("cylinder threshold curve") {
  // printed value at n = 4, alpha = 3
  CHECK(theta_cylinder(4, 3.0) == doctest::Approx(1.0 / 3.0));
  for (int n = 3; n <= 8; ++n) {
    // the two branches agree at alpha = n
    const double below = theta_cylinder(n, n - 1e-12);
    const double above = theta_cylinder(n, n + 1e-12);
    CHECK(below == doctest::Approx(above).epsilon(1e-9));
    CHECK(theta_cylinder(n, n) == doctest::Approx(1.0 / n));
    // decreasing in alpha on [1, n]
    CHECK(theta_cylinder(n, 1.0) == doctest::Approx(1.0));
    CHECK(theta_cylinder(n, 2.0) < theta_cylinder(n, 1.5));
  }
  CHECK_THROWS(theta_cylinder(4, 0.5));
  CHECK_THROWS(theta_cylinder(4, 9.0));
}

TEST_CASE("betti threshold closed forms") {
  CHECK(a_np(5, 2) == doctest::Approx(88.0 / 137.0));
  for (int n = 6; n <= 12; n += 2) {
    CHECK(a_np(n, n / 2) == doctest::Approx(2.0 * (n - 1.0) / (n + 2.0)));
  }
  CHECK_THROWS(a_np(4, 2));  // needs n >= 5
  CHECK_THROWS(a_np(6, 4));  // needs 2p <= n
}

TEST_CASE("projective threshold curve") {
  // m = 2: flat value 1 up to alpha = 3, then 9/alpha - 2 on [3, 9)
  for (double a = 1.0; a <= 3.0; a += 0.25) {
    CHECK(b_m_alpha(2, a) == doctest::Approx(1.0));
  }
  for (double a = 3.0; a < 9.0; a += 0.5) {
    CHECK(b_m_alpha(2, a) == doctest::Approx(9.0 / a - 2.0));
  }
  for (int m = 2; m <= 4; ++m) {
    CHECK(b_m_alpha(m, 1.0) ==
          doctest::Approx((2.0 * m - 1.0) / (m + 1.0)));
    // continuous at alpha = m^2 - 1
    CHECK(b_m_alpha(m, m * m - 1.0) ==
          doctest::Approx(b_m_alpha(m, m * m - 1.0 + 1e-12)).epsilon(1e-9));
  }
  CHECK_THROWS(b_m_alpha(1, 1.0));
  CHECK_THROWS(b_m_alpha(2, 9.0));
}

TEST_CASE("cone membership is monotone in both parameters") {
  for (int s = 0; s < 30; ++s) {
    const SecondKindOperator op =
        induce_second_kind(random_curvature(4, 300 + s));
    CHECK(cone_monotonicity_check(op, 1.0, 3.0, 0.0, 0.0));
    CHECK(cone_monotonicity_check(op, 2.0, 2.0, 0.0, 0.5));
    CHECK(cone_monotonicity_check(op, 1.5, 6.5, 0.1, 0.2));
  }
  const SecondKindOperator op =
      induce_second_kind(random_curvature(4, 1));
  CHECK_THROWS(cone_monotonicity_check(op, 3.0, 2.0, 0.0, 0.0));
}
