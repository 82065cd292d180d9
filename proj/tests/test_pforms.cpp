#include <doctest.h>

#include "curvature2k/model_spaces.hpp"
#include "curvature2k/pforms.hpp"

using namespace c2k;

namespace {

AlgebraicCurvature model(ModelKind kind, int n) {
  ModelSpec s;
  s.kind = kind;
  s.n = n;
  return build(s);
}

int choose(int n, int k) {
  long long c = 1;
  for (int i = 1; i <= k; ++i) c = c * (n - k + i) / i;
  return static_cast<int>(c);
}

}  // namespace

TEST_CASE("coefficient space enumeration") {
  for (int n = 2; n <= 7; ++n) {
    for (int p = 1; p < n; ++p) {
      const PFormSpace space(n, p);
      CHECK(space.dim() == choose(n, p));
    }
  }
  const PFormSpace space(5, 3);
  // located with the sign of the sorting permutation
  const auto [a, sa] = space.locate({0, 1, 2});
  CHECK(a == 0);
  CHECK(sa == 1.0);
  const auto [b, sb] = space.locate({1, 0, 2});
  CHECK(b == 0);
  CHECK(sb == -1.0);
  const auto [c, sc] = space.locate({2, 2, 0});
  CHECK(c == -1);
  CHECK(sc == 0.0);
  CHECK_THROWS(PFormSpace(4, 0));
  CHECK_THROWS(PFormSpace(4, 4));
}

TEST_CASE("derivation action basics") {
  const PFormSpace space(4, 2);
  // identity acts as p * id
  CHECK((derivation_matrix(space, Matrix::Identity(4, 4)) -
         2.0 * Matrix::Identity(space.dim(), space.dim()))
            .cwiseAbs()
            .maxCoeff() <= kTolExact);
  // e_0 (.) e_0 = 2 E_00 scales a basis form by 2 per occurrence of index 0
  const Matrix d = derivation_matrix(space, symmetric_product(0, 0, 4));
  for (int a = 0; a < space.dim(); ++a) {
    const auto& idx = space.index(a);
    const double want = idx[0] == 0 || idx[1] == 0 ? 2.0 : 0.0;
    Vector e = Vector::Zero(space.dim());
    e(a) = 1.0;
    CHECK((d * e - want * e).cwiseAbs().maxCoeff() <= kTolExact);
    CHECK((s_action(space, symmetric_product(0, 0, 4), e) - d * e)
              .cwiseAbs()
              .maxCoeff() <= kTolExact);
  }
  // symmetric generators give symmetric matrices, skew give skew
  Rng rng(6);
  Matrix h(4, 4);
  for (int i = 0; i < 4; ++i) {
    for (int j = 0; j < 4; ++j) h(i, j) = rng.gaussian();
  }
  const Matrix sym = 0.5 * (h + h.transpose());
  const Matrix skew = 0.5 * (h - h.transpose());
  const Matrix ds = derivation_matrix(space, sym);
  const Matrix dk = derivation_matrix(space, skew);
  CHECK((ds - ds.transpose()).cwiseAbs().maxCoeff() <= kTolExact);
  CHECK((dk + dk.transpose()).cwiseAbs().maxCoeff() <= kTolExact);
}

TEST_CASE("basis-completeness norm identity") {
  Rng rng(12);
  for (int n = 4; n <= 6; ++n) {
    for (int p = 1; p < n; ++p) {
      const PFormSpace space(n, p);
      Vector omega(space.dim());
      for (int a = 0; a < space.dim(); ++a) omega(a) = rng.gaussian();
      const auto [lhs, rhs] = norm_identity(space, omega);
      CHECK(lhs == doctest::Approx(rhs).epsilon(1e-12));
    }
  }
}

TEST_CASE("traceless casimir on p-forms") {
  for (int n = 4; n <= 6; ++n) {
    for (int p = 1; p <= n / 2; ++p) {
      const PFormSpace space(n, p);
      Matrix sum = Matrix::Zero(space.dim(), space.dim());
      for (const Matrix& s : standard_basis_s20(n)) {
        const Matrix d = derivation_matrix(space, s);
        sum += d.transpose() * d;
      }
      const double want = p * (n - p) * (n + 2.0) / (2.0 * n);
      CHECK((sum - want * Matrix::Identity(space.dim(), space.dim()))
                .cwiseAbs()
                .maxCoeff() <= 1e-10);
    }
  }
}

TEST_CASE("curvature term on constant-curvature models") {
  for (int n = 4; n <= 6; ++n) {
    for (int p = 1; p <= n / 2; ++p) {
      const int dim = choose(n, p);
      const Matrix sph = curvature_term(model(ModelKind::sphere, n), p);
      CHECK((sph - 1.5 * p * (n - p) * Matrix::Identity(dim, dim))
                .cwiseAbs()
                .maxCoeff() <= 1e-10);
      const Matrix flat = curvature_term(model(ModelKind::flat, n), p);
      CHECK(flat.cwiseAbs().maxCoeff() <= 1e-12);
    }
  }
}

TEST_CASE("einstein curvature term from shifted derivations") {
  // for Einstein tensors the term equals
  // sum_alpha (lambda_alpha + 2(n-1)/(n+2) lambda_bar) D_alpha^T D_alpha
  const AlgebraicCurvature r = build(einstein_sphere_product(6, 2));
  const int n = 6;
  const SecondKindOperator op = induce_second_kind(r);
  for (int p = 1; p <= 3; ++p) {
    const PFormSpace space(n, p);
    Matrix sum = Matrix::Zero(space.dim(), space.dim());
    for (int a = 0; a < op.eigenvalues.size(); ++a) {
      const Matrix d = derivation_matrix(space, op.eigentensor(a));
      sum += (op.eigenvalues(a) +
              2.0 * (n - 1.0) / (n + 2.0) * op.lambda_bar) *
             d.transpose() * d;
    }
    CHECK((sum - curvature_term(r, p)).cwiseAbs().maxCoeff() <= 1e-9);
  }
}

TEST_CASE("first-kind assembly matches the second-kind one") {
  for (auto [n, p] : {std::pair{5, 2}, std::pair{6, 2}, std::pair{6, 3}}) {
    for (int s = 0; s < 5; ++s) {
      const AlgebraicCurvature r = random_curvature(n, 700 + s);
      CHECK((curvature_term(r, p) - weitzenbock_oracle(r, p))
                .cwiseAbs()
                .maxCoeff() <= 1e-9);
    }
  }
}

TEST_CASE("q-quantity values and identity") {
  // sphere: Q = p (n-1)(n-p+1)
  for (int n = 4; n <= 6; ++n) {
    const Matrix id = Matrix::Identity(n, n);
    for (int p = 1; p <= n / 2; ++p) {
      const auto [qd, qi] = q_quantity(model(ModelKind::sphere, n), id, p);
      CHECK(qd == doctest::Approx(p * (n - 1.0) * (n - p + 1.0)));
      CHECK(qi == doctest::Approx(qd));
      const auto [fd, fi] = q_quantity(model(ModelKind::flat, n), id, p);
      CHECK(std::abs(fd) <= kTolExact);
      CHECK(std::abs(fi) <= kTolExact);
    }
  }
  // double evaluation agrees on random tensors and frames
  Rng rng(14);
  for (int s = 0; s < 10; ++s) {
    const AlgebraicCurvature r = random_curvature(5, 800 + s);
    const Matrix q = haar_orthogonal(5, rng);
    for (int p = 1; p <= 2; ++p) {
      const auto [qd, qi] = q_quantity(r, q, p);
      CHECK(qd == doctest::Approx(qi).epsilon(1e-10));
      CHECK(q_lower_bound_gap(r, q, p) >= -1e-10);
    }
  }
  // the spectral bound is attained in constant curvature
  Rng rng2(15);
  const Matrix q4 = haar_orthogonal(4, rng2);
  for (int p = 1; p <= 2; ++p) {
    CHECK(std::abs(q_lower_bound_gap(model(ModelKind::sphere, 4), q4, p)) <=
          1e-10);
  }
}

TEST_CASE("p-ricci implication") {
  // sphere interior
  const ImplicationReport sph = p_ricci_check(model(ModelKind::sphere, 5), 2, 0.1);
  CHECK(sph.verdict == ImplicationVerdict::certified);
  CHECK(sph.conclusion_margin > 0.0);
  // cylinder sits on the p = 1 boundary at theta = 2/(n-1)
  for (int n = 4; n <= 6; ++n) {
    const ImplicationReport cyl =
        p_ricci_check(model(ModelKind::cylinder, n), 1, 2.0 / (n - 1.0));
    CHECK(std::abs(cyl.hypothesis_margin) <= 1e-9);
    CHECK(cyl.conclusion_margin >= -1e-9);
    CHECK(cyl.verdict != ImplicationVerdict::violated);
  }
  // no violations on a boundary-biased corpus
  for (int n = 4; n <= 5; ++n) {
    for (int p = 1; p <= 2; ++p) {
      const double alpha = (n - 1.0) * p / 2.0;
      const double theta = 1.0 / (n - p + 1.0);
      for (int s = 0; s < 100; ++s) {
        const AlgebraicCurvature r = boundary_biased_curvature(
            n, derive_seed(820 + n, 10 * p + s), alpha, theta,
            0.01 * (s % 4));
        CHECK(p_ricci_check(r, p, theta).verdict !=
              ImplicationVerdict::violated);
      }
    }
  }
}

TEST_CASE("betti certificates") {
  CHECK(betti_certificate(model(ModelKind::sphere, 5), 2) ==
        CertificateClass::positive);
  CHECK(betti_certificate(model(ModelKind::flat, 5), 2) ==
        CertificateClass::semidefinite);
  // the Einstein product S^2 x S^4 has a harmonic 2-form direction
  CHECK(betti_certificate(build(einstein_sphere_product(6, 2)), 2) ==
        CertificateClass::semidefinite);
  CHECK(betti_certificate(scale(model(ModelKind::sphere, 5), -1.0), 2) ==
        CertificateClass::indefinite);
}

TEST_CASE("weighted positivity principle") {
  const double beta = 1.0;
  for (int s = 0; s < 50; ++s) {
    const AlgebraicCurvature r = boundary_biased_curvature(
        5, derive_seed(840, s), (5.0 + 2.0) / 2.0, 0.0, 0.02 * (s % 3));
    for (int p = 1; p <= 2; ++p) {
      CHECK(weight_principle_check(r, p, beta).verdict !=
            ImplicationVerdict::violated);
    }
  }
  // flat space sits exactly on both margins
  const ImplicationReport flat =
      weight_principle_check(model(ModelKind::flat, 5), 2, beta);
  CHECK(std::abs(flat.hypothesis_margin) <= kTolExact);
  CHECK(std::abs(flat.conclusion_margin) <= kTolExact);
}
