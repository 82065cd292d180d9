#include <doctest.h>

#include "curvature2k/implications.hpp"
#include "curvature2k/model_spaces.hpp"

using namespace c2k;

namespace {

AlgebraicCurvature model(ModelKind kind, int n, int m = 0) {
  ModelSpec s;
  s.kind = kind;
  s.n = n;
  if (m > 0) s.m = m;
  return build(s);
}

}  // namespace

TEST_CASE("verdict classification table") {
  CHECK(classify_implication(1.0, 1.0).verdict ==
        ImplicationVerdict::certified);
  CHECK(classify_implication(1.0, -1.0).verdict ==
        ImplicationVerdict::violated);
  CHECK(classify_implication(-1.0, -1.0).verdict ==
        ImplicationVerdict::hypothesis_not_met);
  // boundary cases are never violations
  CHECK(classify_implication(0.0, -1.0).verdict !=
        ImplicationVerdict::violated);
  CHECK(classify_implication(1.0, 0.0).verdict ==
        ImplicationVerdict::certified);
  const ImplicationReport rep = classify_implication(0.25, -0.5);
  CHECK(rep.hypothesis_margin == 0.25);
  CHECK(rep.conclusion_margin == -0.5);
}

TEST_CASE("ricci bound coefficient") {
  // alpha = n, theta = 0 on the first branch
  for (int n = 3; n <= 8; ++n) {
    CHECK(ricci_bound(n, n, 0.0) == doctest::Approx((n - 1.0) / (n + 1.0)));
    // both branches agree at alpha = n
    const double theta = 0.2;
    CHECK(ricci_bound(n, n - 1e-9, theta) ==
          doctest::Approx(ricci_bound(n, n + 1e-9, theta)).epsilon(1e-7));
  }
  // the cylinder threshold pair gives a vanishing bound
  CHECK(ricci_bound(4, 3.0, 1.0 / 3.0) == doctest::Approx(0.0));
  for (int n = 3; n <= 6; ++n) {
    for (double a : {1.0, (n - 1.0), n + 0.5, n + 2.0}) {
      if (a >= Dim(n).s20()) continue;
      CHECK(ricci_bound(n, a, theta_cylinder(n, a)) ==
            doctest::Approx(0.0).epsilon(1e-12));
    }
  }
}

TEST_CASE("ricci implication on sphere and cylinder") {
  // sphere: interior member, conclusion strictly positive
  const ImplicationReport sph = verify_prop_ricci(model(ModelKind::sphere, 5),
                                                  3.0, 0.1);
  CHECK(sph.verdict == ImplicationVerdict::certified);
  CHECK(sph.hypothesis_margin > 0.1);
  CHECK(sph.conclusion_margin > 0.1);
  // cylinder at its threshold: both margins vanish (sharpness witness)
  for (int n = 4; n <= 6; ++n) {
    const double alpha = n - 1.0;
    const double theta = theta_cylinder(n, alpha);
    const ImplicationReport cyl =
        verify_prop_ricci(model(ModelKind::cylinder, n), alpha, theta);
    CHECK(std::abs(cyl.hypothesis_margin) <= 1e-9);
    CHECK(std::abs(cyl.conclusion_margin) <= 1e-9);
    CHECK(cyl.verdict != ImplicationVerdict::violated);
  }
}

TEST_CASE("ricci implication has no violations on a random corpus") {
  for (int n = 3; n <= 5; ++n) {
    for (double alpha : {1.5, n - 1.0, n + 1.0}) {
      if (alpha >= Dim(n).s20()) continue;
      const double theta = theta_cylinder(n, alpha);
      for (int s = 0; s < 200; ++s) {
        const AlgebraicCurvature r = boundary_biased_curvature(
            n, derive_seed(900 + n, s), alpha, theta, 0.01 * (s % 5));
        CHECK(verify_prop_ricci(r, alpha, theta).verdict !=
              ImplicationVerdict::violated);
      }
    }
  }
}

TEST_CASE("frame identities for the ricci proof") {
  // unit sphere: Rcirc(phi1,phi1) = 2/(n-1)*(n-1) - 1 = 1, sum = Ric_11
  const FrameIdentity sph = cylinder_frame_identities(model(ModelKind::sphere, 4));
  CHECK(sph.lhs1 == doctest::Approx(1.0));
  CHECK(sph.rhs1 == doctest::Approx(1.0));
  CHECK(sph.lhs2 == doctest::Approx(3.0));
  CHECK(sph.rhs2 == doctest::Approx(3.0));
  const FrameIdentity flat = cylinder_frame_identities(model(ModelKind::flat, 4));
  CHECK(std::abs(flat.lhs1) <= kTolExact);
  CHECK(std::abs(flat.rhs2) <= kTolExact);
  // exact on random tensors, for every distinguished index
  for (int s = 0; s < 20; ++s) {
    const AlgebraicCurvature r = random_curvature(5, 400 + s);
    for (int e1 = 0; e1 < 5; ++e1) {
      const FrameIdentity f = cylinder_frame_identities(r, e1);
      CHECK(f.lhs1 == doctest::Approx(f.rhs1).epsilon(1e-10));
      CHECK(f.lhs2 == doctest::Approx(f.rhs2).epsilon(1e-10));
    }
  }
}

TEST_CASE("frame identity for the isotropic proof") {
  const Matrix id = Matrix::Identity(4, 4);
  const auto [ls, rs] = cp2_frame_identity(model(ModelKind::sphere, 4), id);
  CHECK(ls == doctest::Approx(3.0));
  CHECK(rs == doctest::Approx(3.0));
  const auto [lf, rf] = cp2_frame_identity(model(ModelKind::flat, 4), id);
  CHECK(std::abs(lf) <= kTolExact);
  CHECK(std::abs(rf) <= kTolExact);
  Rng rng(17);
  for (int s = 0; s < 20; ++s) {
    const AlgebraicCurvature r = random_curvature(4, 500 + s);
    const Matrix q = haar_orthogonal(4, rng);
    const auto [l, rr] = cp2_frame_identity(r, q);
    CHECK(l == doctest::Approx(rr).epsilon(1e-10));
  }
}

TEST_CASE("isotropic cone parameter") {
  CHECK(pic_theta(1.0) == doctest::Approx(1.0));
  CHECK(pic_theta(3.0) == doctest::Approx(1.0));
  CHECK(pic_theta(4.5) == doctest::Approx(0.0));
  CHECK(pic_theta(6.0) == doctest::Approx(-0.5));
  CHECK(pic_theta(9.0 - 1e-12) == doctest::Approx(-1.0));
  CHECK_THROWS(pic_theta(0.5));
  CHECK_THROWS(pic_theta(9.0));
}

TEST_CASE("isotropic implication on models") {
  // sphere: every isotropic value equals 4
  const ImplicationReport sph =
      verify_prop_pic(model(ModelKind::sphere, 4), 2.0, 500, 1);
  CHECK(sph.verdict == ImplicationVerdict::certified);
  CHECK(sph.conclusion_margin == doctest::Approx(4.0).epsilon(1e-6));
  // complex projective plane: boundary member, sampled minimum near zero
  const AlgebraicCurvature cp2 = model(ModelKind::cp_fubini_study, 0, 2);
  const double alpha = 4.0;
  const ImplicationReport bd = verify_prop_pic(cp2, alpha, 2000, 1);
  CHECK(std::abs(bd.hypothesis_margin) <= 1e-9);
  CHECK(bd.conclusion_margin >= -1e-9);
  CHECK(bd.conclusion_margin <= 1e-6);
  CHECK(bd.verdict != ImplicationVerdict::violated);
}

TEST_CASE("isotropic implication has no violations on a small corpus") {
  for (double alpha : {2.0, 4.0, 6.0}) {
    const double theta = pic_theta(alpha);
    for (int s = 0; s < 15; ++s) {
      const AlgebraicCurvature r = boundary_biased_curvature(
          4, derive_seed(600, 10 * s + static_cast<int>(alpha)), alpha, theta,
          0.02 * (s % 3));
      CHECK(verify_prop_pic(r, alpha, 300, 2).verdict !=
            ImplicationVerdict::violated);
    }
  }
}

TEST_CASE("boundary-biased generator lands margins exactly") {
  for (int n : {3, 4, 5}) {
    for (double offset : {0.0, 0.05, -0.02}) {
      const double alpha = n - 1.0;
      const double theta = 0.25;
      const AlgebraicCurvature r =
          boundary_biased_curvature(n, 77, alpha, theta, offset);
      const SecondKindOperator op = induce_second_kind(r);
      CHECK(cone_margin(op.eigenvalues, alpha, theta) ==
            doctest::Approx(offset).epsilon(1e-12));
    }
  }
  // deterministic in the seed
  const AlgebraicCurvature a = boundary_biased_curvature(4, 5, 2.0, 0.5, 0.1);
  const AlgebraicCurvature b = boundary_biased_curvature(4, 5, 2.0, 0.5, 0.1);
  CHECK((a.wedge_matrix() - b.wedge_matrix()).cwiseAbs().maxCoeff() == 0.0);
}
