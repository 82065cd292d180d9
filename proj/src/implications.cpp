#include "curvature2k/implications.hpp"

#include <cmath>
#include <limits>
#include <stdexcept>

#include <Eigen/Eigenvalues>

namespace c2k {

namespace {

Matrix odot(const Vector& u, const Vector& v) {
  return u * v.transpose() + v * u.transpose();
}

}  // namespace

ImplicationReport classify_implication(double hypothesis_margin,
                                       double conclusion_margin, double tol) {
  ImplicationReport rep;
  rep.hypothesis_margin = hypothesis_margin;
  rep.conclusion_margin = conclusion_margin;
  if (hypothesis_margin < -tol) {
    rep.verdict = ImplicationVerdict::hypothesis_not_met;
  } else if (hypothesis_margin > tol && conclusion_margin < -tol) {
    rep.verdict = ImplicationVerdict::violated;
  } else {
    rep.verdict = ImplicationVerdict::certified;
  }
  return rep;
}

double ricci_bound(int n, double alpha, double theta) {
  const double nd = n;
  const double big_n = (nd - 1.0) * (nd + 2.0) / 2.0;
  if (alpha < 1.0 || alpha >= big_n) {
    throw std::out_of_range("ricci_bound: alpha out of [1, N)");
  }
  if (alpha <= nd) {
    return (nd - 1.0) / (alpha + 1.0) * (1.0 - alpha * theta);
  }
  return (nd - 1.0) *
         (nd * nd - nd * (alpha * theta + alpha - 1.0) +
          2.0 * (alpha * theta - 1.0)) /
         (nd * nd + nd - 2.0 * (alpha + 1.0));
}

ImplicationReport verify_prop_ricci(const AlgebraicCurvature& r, double alpha,
                                    double theta, double tol) {
  const SecondKindOperator op = induce_second_kind(r);
  const double hyp = cone_margin(op.eigenvalues, alpha, theta);
  const Matrix ric = ricci(r);
  Eigen::SelfAdjointEigenSolver<Matrix> es(ric);
  const double ric_min = es.eigenvalues()(0);
  const double bound = ricci_bound(r.n(), alpha, theta) * op.lambda_bar;
  return classify_implication(hyp, ric_min - bound, tol);
}

FrameIdentity cylinder_frame_identities(const AlgebraicCurvature& r, int e1) {
  const int n = r.n();
  if (e1 < 0 || e1 >= n) {
    throw std::out_of_range("cylinder_frame_identities: bad e1 index");
  }
  Matrix phi1 = -Matrix::Identity(n, n);
  phi1(e1, e1) = n - 1.0;
  phi1 /= std::sqrt(static_cast<double>(n) * (n - 1.0));
  FrameIdentity out;
  const Matrix ric = ricci(r);
  const double lbar = ric.trace() / (n * (n - 1.0));
  out.lhs1 = second_kind_form(r, phi1, phi1);
  out.rhs1 = 2.0 / (n - 1.0) * ric(e1, e1) - lbar;
  for (int i = 0; i < n; ++i) {
    if (i == e1) continue;
    const Matrix phi_i =
        odot(Vector(Matrix::Identity(n, n).col(e1)),
             Vector(Matrix::Identity(n, n).col(i))) /
        std::sqrt(2.0);
    out.lhs2 += second_kind_form(r, phi_i, phi_i);
  }
  out.rhs2 = ric(e1, e1);
  return out;
}

std::pair<double, double> cp2_frame_identity(const AlgebraicCurvature& r,
                                             const Matrix& frame) {
  if (r.n() != 4) {
    throw std::invalid_argument("cp2_frame_identity: requires n = 4");
  }
  if (frame.rows() != 4 || frame.cols() != 4) {
    throw std::invalid_argument("cp2_frame_identity: frame must be 4 x 4");
  }
  require_orthonormal(frame);
  const Vector f1 = frame.col(0), f2 = frame.col(1), f3 = frame.col(2),
               f4 = frame.col(3);
  const Matrix phi1 =
      0.25 * (odot(f1, f1) + odot(f2, f2) - odot(f3, f3) - odot(f4, f4));
  const Matrix phi2 = 0.5 * (odot(f1, f4) - odot(f2, f3));
  const Matrix phi3 = 0.5 * (odot(f1, f3) + odot(f2, f4));
  const double lhs = second_kind_form(r, phi1, phi1) +
                     second_kind_form(r, phi2, phi2) +
                     second_kind_form(r, phi3, phi3);
  auto sec = [&](const Vector& a, const Vector& b) {
    return quadrilinear(r, a, b, a, b);
  };
  const double rhs = sec(f1, f3) + sec(f1, f4) + sec(f2, f3) + sec(f2, f4) -
                     0.5 * (sec(f1, f2) + sec(f3, f4)) -
                     3.0 * quadrilinear(r, f1, f2, f3, f4);
  return {lhs, rhs};
}

double pic_theta(double alpha) {
  if (alpha < 1.0 || alpha >= 9.0) {
    throw std::out_of_range("pic_theta: alpha out of [1, 9)");
  }
  if (alpha <= 3.0) return 1.0;
  return 9.0 / alpha - 2.0;
}

double sampled_isotropic_min(const AlgebraicCurvature& r, int frames,
                             std::uint64_t seed, bool refine) {
  const int n = r.n();
  Rng rng(seed);
  double best = std::numeric_limits<double>::infinity();
  Matrix best_frame;
  for (int s = 0; s < frames; ++s) {
    const Matrix f = haar_frame(n, 4, rng);
    const double v = isotropic_expression(r, f);
    if (v < best) {
      best = v;
      best_frame = f;
    }
  }
  if (!refine || frames == 0) return best;
  // rotation descent: perturb the best frame, re-orthonormalize, keep
  // improvements; step anneals geometrically
  double step = 0.2;
  for (int it = 0; it < 300; ++it) {
    Matrix g(n, 4);
    for (int i = 0; i < n; ++i) {
      for (int j = 0; j < 4; ++j) g(i, j) = rng.gaussian();
    }
    Eigen::HouseholderQR<Matrix> qr(best_frame + step * g);
    Matrix q = qr.householderQ() * Matrix::Identity(n, 4);
    // keep the orientation of each column aligned with the current frame
    for (int j = 0; j < 4; ++j) {
      if (q.col(j).dot(best_frame.col(j)) < 0.0) q.col(j) = -q.col(j);
    }
    const double v = isotropic_expression(r, q);
    if (v < best) {
      best = v;
      best_frame = q;
    } else {
      step *= 0.97;
    }
  }
  return best;
}

ImplicationReport verify_prop_pic(const AlgebraicCurvature& r, double alpha,
                                  int frames, std::uint64_t seed, double tol) {
  if (r.n() != 4) {
    throw std::invalid_argument("verify_prop_pic: requires n = 4");
  }
  const double theta = pic_theta(alpha);
  const SecondKindOperator op = induce_second_kind(r);
  const double hyp = cone_margin(op.eigenvalues, alpha, theta);
  const double iso_min = sampled_isotropic_min(r, frames, seed);
  return classify_implication(hyp, iso_min, tol);
}

AlgebraicCurvature boundary_biased_curvature(int n, std::uint64_t seed,
                                             double alpha, double theta,
                                             double offset) {
  const AlgebraicCurvature r0 = random_curvature(n, seed);
  const SecondKindOperator op = induce_second_kind(r0);
  const double m0 = cone_margin(op.eigenvalues, alpha, theta);
  // adding t * (unit sphere) shifts every Rcirc eigenvalue by t, so the
  // margin moves by t (1 + theta)
  const double t = (offset - m0) / (1.0 + theta);
  const int n2 = Dim(n).wedge2();
  return AlgebraicCurvature(
      n, r0.wedge_matrix() + t * Matrix::Identity(n2, n2));
}

}  // namespace c2k
